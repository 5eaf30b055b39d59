"""Damage a network by removing its top-ranked links, then try to restore them.

The removal method ranks the existing links of the intact graph once and the
``m`` best are deleted together. A creation method then ranks every absent
link of the damaged graph. Two readouts follow from that ranking:

* scenario one: create links in rank order until every removed link is back;
  ``m_plus`` is the number needed and ``Q`` rewards small ``m_plus``;
* scenario two: create exactly ``m`` links; ``K`` of them are removed ones and
  ``eta = K / m``.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .graph import Graph, GeneratorConfig, generate, total_possible_links
from .scorers import ScoreConfig, score_pairs

__all__ = [
    "DamageRecord",
    "RestorationReport",
    "GridCell",
    "ExperimentGrid",
    "damage",
    "quality_q",
    "restore",
    "restore_scenario_one",
    "restore_scenario_two",
    "derive_seed",
    "run_grid",
]

log = logging.getLogger(__name__)


def _as_config(cfg) -> ScoreConfig:
    return cfg if isinstance(cfg, ScoreConfig) else ScoreConfig(cfg)


@dataclass(frozen=True)
class DamageRecord:
    """Outcome of removing the ``m`` top-ranked links of ``original``.

    ``removed`` lists ``(pair, pre_rank)`` in pre-removal rank order.
    """

    config: ScoreConfig
    m: int
    removed: tuple[tuple[tuple[int, int], int], ...]
    original: Graph
    damaged: Graph

    @property
    def original_edge_count(self) -> int:
        return self.original.edge_count

    @property
    def removed_pairs(self) -> list[tuple[int, int]]:
        return [pair for pair, _ in self.removed]


@dataclass(frozen=True)
class RestorationReport:
    config: ScoreConfig
    scenario: int
    m: int
    post_ranks: tuple[int, ...]
    m_plus: int
    K: int
    Q: float
    eta: float
    created: tuple[tuple[int, int], ...] = ()


def damage(g: Graph, removal_cfg, m: int) -> DamageRecord:
    """Remove the ``m`` highest-scoring existing links in one shot.

    Scores are computed once on ``g``; the graph is not re-scored between
    removals.
    """
    cfg = _as_config(removal_cfg)
    if m < 0:
        raise ValueError("m must be non-negative")
    if m >= g.edge_count:
        raise ValueError(f"cannot remove m={m} links from a graph with {g.edge_count} edges")
    if m == 0:
        return DamageRecord(cfg, 0, (), g, g)
    ranked = score_pairs(g, "adjacent", cfg)
    removed = tuple((e.pair, e.rank) for e in ranked.entries[:m])
    return DamageRecord(cfg, m, removed, g, g.remove_edges(p for p, _ in removed))


def quality_q(M: int, m: int, M_plus: int, m_plus: int) -> float:
    """Scenario-one restoration quality.

    ``((M + m - M_plus) / M_plus) * (m / m_plus)`` with ``M`` all node pairs,
    ``M_plus`` the link count of the intact network, ``m`` links removed and
    ``m_plus`` links created to recover all of them.
    """
    if min(M, m, M_plus, m_plus) <= 0:
        raise ValueError(f"quality_q needs positive counts, got M={M}, m={m}, M+={M_plus}, m+={m_plus}")
    if m_plus < m:
        raise ValueError(f"m_plus={m_plus} cannot be smaller than m={m}")
    return (M + m - M_plus) / M_plus * (m / m_plus)


def restore(rec: DamageRecord, creation_cfg, scenario: int = 1) -> RestorationReport:
    """Rank the damaged graph's absent links and locate the removed ones.

    Both readouts are filled in; ``scenario`` records which one was asked for
    and, for scenario two, the created links are listed.
    """
    if scenario not in (1, 2):
        raise ValueError(f"scenario must be 1 or 2, got {scenario}")
    cfg = _as_config(creation_cfg)
    m = rec.m
    if m == 0:
        raise ValueError("nothing was removed; restoration quality is undefined")
    ranked = score_pairs(rec.damaged, "nonadjacent", cfg)
    try:
        post = tuple(ranked.rank_of(p) for p in rec.removed_pairs)
    except KeyError as exc:  # pragma: no cover - removed links are absent by construction
        raise RuntimeError(f"removed link {exc} missing from the damaged graph's absent links") from exc
    m_plus = max(post)
    K = sum(r <= m for r in post)
    Q = quality_q(total_possible_links(rec.original), m, rec.original_edge_count, m_plus)
    created = tuple(ranked.pairs[:m]) if scenario == 2 else ()
    return RestorationReport(cfg, scenario, m, post, m_plus, K, Q, K / m, created)


def restore_scenario_one(rec: DamageRecord, creation_cfg) -> RestorationReport:
    return restore(rec, creation_cfg, scenario=1)


def restore_scenario_two(rec: DamageRecord, creation_cfg) -> RestorationReport:
    return restore(rec, creation_cfg, scenario=2)


# -- Monte-Carlo grid ------------------------------------------------------------


def derive_seed(base_seed: int, realization: int) -> int:
    """64-bit seed for one realization, independent of evaluation order."""
    ss = np.random.SeedSequence([int(base_seed), int(realization)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


@dataclass(frozen=True)
class GridCell:
    removal: str
    creation: str
    mean_q: float
    std_q: float
    mean_eta: float
    std_eta: float
    n_valid: int
    errors: tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        return self.n_valid > 0


@dataclass(frozen=True)
class ExperimentGrid:
    generator: GeneratorConfig
    methods: tuple[ScoreConfig, ...]
    m: int
    realizations: int
    base_seed: int
    cells: tuple[GridCell, ...] = field(default=())

    def cell(self, removal: str, creation: str) -> GridCell:
        for c in self.cells:
            if c.removal == removal and c.creation == creation:
                return c
        raise KeyError((removal, creation))

    def matrix(self, stat: str = "mean_q") -> np.ndarray:
        """``len(methods) x len(methods)`` array of one statistic, removal along rows."""
        names = [c.method for c in self.methods]
        out = np.full((len(names), len(names)), math.nan)
        for c in self.cells:
            out[names.index(c.removal), names.index(c.creation)] = getattr(c, stat)
        return out


def _one_realization(args):
    gen_cfg, methods, m, seed = args
    out = {}
    try:
        g = generate(gen_cfg.with_seed(seed))
    except Exception as exc:  # recorded per cell, see run_grid
        msg = f"generation: {exc}"
        return {(a.method, b.method): msg for a in methods for b in methods}
    for rem in methods:
        try:
            rec = damage(g, rem, m)
        except Exception as exc:
            for cre in methods:
                out[rem.method, cre.method] = f"removal by {rem.method}: {exc}"
            continue
        for cre in methods:
            try:
                rep = restore(rec, cre, scenario=1)
                out[rem.method, cre.method] = (rep.Q, rep.eta)
            except Exception as exc:
                out[rem.method, cre.method] = f"creation by {cre.method}: {exc}"
    return out


def _mean_std(xs):
    if not xs:
        return math.nan, math.nan
    arr = np.asarray(xs, dtype=float)
    std = float(arr.std(ddof=1)) if len(arr) > 1 else 0.0
    return float(arr.mean()), std


def run_grid(gen_cfg: GeneratorConfig, methods: Sequence, m: int, realizations: int,
             base_seed: int = 0, workers: int = 1) -> ExperimentGrid:
    """Average ``Q`` and ``eta`` over random graphs for every removal/creation pair.

    Realization ``r`` uses the graph drawn with ``derive_seed(base_seed, r)``,
    shared by all cells. A cell whose scoring fails in some realization skips
    that realization (and keeps the message); ``n_valid`` shows how many
    entered the averages.
    """
    if realizations < 1:
        raise ValueError("realizations must be >= 1")
    cfgs = tuple(_as_config(x) for x in methods)
    names = [c.method for c in cfgs]
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate methods in {names}")
    jobs = [(gen_cfg, cfgs, m, derive_seed(base_seed, r)) for r in range(realizations)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_one_realization, jobs))
    else:
        results = [_one_realization(j) for j in jobs]

    cells = []
    for rem in names:
        for cre in names:
            qs, etas, errs = [], [], []
            for r, res in enumerate(results):
                val = res[rem, cre]
                if isinstance(val, str):
                    errs.append(f"realization {r}: {val}")
                else:
                    qs.append(val[0])
                    etas.append(val[1])
            if errs:
                log.warning("cell (%s, %s): %d of %d realizations failed", rem, cre, len(errs), realizations)
            mq, sq = _mean_std(qs)
            me, se = _mean_std(etas)
            cells.append(GridCell(rem, cre, mq, sq, me, se, len(qs), tuple(errs)))
    return ExperimentGrid(gen_cfg, cfgs, m, realizations, base_seed, tuple(cells))
