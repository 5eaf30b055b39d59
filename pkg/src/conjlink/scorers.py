"""Pair-scoring methods and deterministic ranking.

Six methods share one interface:

``H``      weighted walk counts of length 2..p (or all lengths, ``horizon="infinite"``)
``sigma``  regular equivalence, ``(I - alpha A)^{-1}``
``G``      effective conductance of the unit-resistor network
``J``      Jaccard coefficient of the neighbourhoods
``Ad``     Adamic-Adar index (natural log)
``RA``     resource-allocation index

Every scorer returns a :class:`RankedList` sorted by descending score. Scores
equal up to ``tolerances.RANK_RTOL`` count as tied and are ordered by the
pair's ids ``(i, j)``; ranks are 1-based and never shared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import kernel, tolerances
from .graph import Graph

__all__ = [
    "METHODS",
    "ScoreConfig",
    "PairScore",
    "RankedList",
    "score_matrix",
    "score_pairs",
    "score_h",
    "score_sigma",
    "score_g",
    "score_jaccard",
    "score_adamic_adar",
    "score_resource_allocation",
    "rank",
]

METHODS = ("H", "G", "J", "Ad", "RA", "sigma")
_ALIASES = {m.lower(): m for m in METHODS}
DEFAULT_ALPHA = math.exp(-2)


@dataclass(frozen=True)
class ScoreConfig:
    """Scoring method plus the walk parameters used by ``H`` and ``sigma``."""

    method: str = "G"
    alpha: float = DEFAULT_ALPHA
    p: int = 10
    horizon: str = "finite"

    def __post_init__(self):
        method = _ALIASES.get(str(self.method).lower())
        if method is None:
            raise ValueError(f"unknown method {self.method!r}; choose from {METHODS}")
        object.__setattr__(self, "method", method)
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if int(self.p) != self.p or self.p < 2:
            raise ValueError(f"p must be an integer >= 2, got {self.p}")
        if self.horizon not in ("finite", "infinite"):
            raise ValueError(f"horizon must be 'finite' or 'infinite', got {self.horizon!r}")

    def as_dict(self) -> dict:
        return {"method": self.method, "alpha": self.alpha, "p": int(self.p), "horizon": self.horizon}


@dataclass(frozen=True)
class PairScore:
    pair: tuple[int, int]
    score: float
    rank: int


@dataclass(frozen=True)
class RankedList:
    """Ranked pair scores for one method on one graph.

    ``nodes`` holds the graph's labels so that results can be reported
    without the graph at hand.
    """

    config: ScoreConfig | None
    universe: str
    entries: tuple[PairScore, ...]
    nodes: tuple[str, ...] = ()
    _positions: dict = field(default=None, repr=False, compare=False)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    @property
    def method(self):
        return self.config.method if self.config is not None else None

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [e.pair for e in self.entries]

    def rank_of(self, pair) -> int:
        """1-based rank of ``pair`` (either orientation)."""
        if self._positions is None:
            object.__setattr__(self, "_positions", {e.pair: e.rank for e in self.entries})
        i, j = pair
        return self._positions[(i, j) if i < j else (j, i)]

    def top(self, k: int) -> "RankedList":
        """First ``k`` entries; ``k <= 0`` keeps everything."""
        if k <= 0:
            return self
        return replace(self, entries=self.entries[:k], _positions=None)

    def labelled(self):
        """``(rank, label_a, label_b, score)`` rows."""
        return [(e.rank, self.nodes[e.pair[0]], self.nodes[e.pair[1]], e.score) for e in self.entries]


def rank(scores: Mapping[tuple[int, int], float], rtol: float = tolerances.RANK_RTOL) -> list[PairScore]:
    """Sort pairs by descending score; ties go to the smaller ``(i, j)``."""
    items = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))
    for pair, s in items:
        if math.isnan(s):
            raise ValueError(f"NaN score for pair {pair}")
    ordered = []
    group = []
    anchor = None
    for pair, s in items:
        if anchor is not None and abs(s - anchor) <= rtol * max(abs(anchor), abs(s)):
            group.append((pair, s))
            continue
        group.sort()
        ordered.extend(group)
        group = [(pair, s)]
        anchor = s
    group.sort()
    ordered.extend(group)
    return [PairScore(pair, float(s), k) for k, (pair, s) in enumerate(ordered, start=1)]


# -- score matrices --------------------------------------------------------------


def _h_matrix(g, cfg):
    A = g.adjacency()
    if cfg.horizon == "finite":
        return kernel.walk_sum(A, cfg.alpha, int(cfg.p))
    inv = kernel.inverse_i_minus_alpha_a(A, cfg.alpha)
    # drop the r=0 and r=1 terms explicitly; they vanish only off-diagonal on non-edges
    return inv - np.eye(g.N) - cfg.alpha * A


def _sigma_matrix(g, cfg):
    return kernel.inverse_i_minus_alpha_a(g.adjacency(), cfg.alpha)


def _g_matrix(g, cfg):
    R = kernel.resistance_matrix(g)
    with np.errstate(divide="ignore"):
        G = 1.0 / R
    G[np.isinf(R)] = 0.0
    return G


def _common(g):
    A = g.adjacency()
    return A, A.sum(axis=1)


def _jaccard_matrix(g, cfg=None):
    A, deg = _common(g)
    inter = A @ A
    union = deg[:, None] + deg[None, :] - inter
    out = np.zeros_like(inter)
    np.divide(inter, union, out=out, where=union > 0)
    return out


def _adamic_adar_matrix(g, cfg=None):
    A, deg = _common(g)
    # a common neighbour of two distinct nodes has degree >= 2
    w = np.zeros_like(deg)
    hub = deg >= 2
    w[hub] = 1.0 / np.log(deg[hub])
    return (A * w) @ A


def _resource_allocation_matrix(g, cfg=None):
    A, deg = _common(g)
    w = np.zeros_like(deg)
    w[deg > 0] = 1.0 / deg[deg > 0]
    return (A * w) @ A


_MATRIX = {
    "H": _h_matrix,
    "sigma": _sigma_matrix,
    "G": _g_matrix,
    "J": _jaccard_matrix,
    "Ad": _adamic_adar_matrix,
    "RA": _resource_allocation_matrix,
}


def score_matrix(g: Graph, cfg: ScoreConfig) -> np.ndarray:
    """Dense ``N x N`` matrix of scores; only off-diagonal entries are meaningful."""
    return _MATRIX[cfg.method](g, cfg)


def _resolve_pairs(g, pairs):
    if isinstance(pairs, str):
        if pairs == "adjacent":
            return "adjacent", g.adjacent_pairs()
        if pairs == "nonadjacent":
            return "nonadjacent", g.nonadjacent_pairs()
        if pairs == "all":
            return "all", g.all_pairs()
        raise ValueError(f"unknown pair universe {pairs!r}")
    out = []
    for i, j in pairs:
        if i == j:
            raise ValueError(f"pair ({i}, {j}) is not a pair of distinct nodes")
        out.append((i, j) if i < j else (j, i))
    return "custom", out


def score_pairs(g: Graph, pairs: str | Iterable[tuple[int, int]], cfg: ScoreConfig) -> RankedList:
    """Score and rank ``pairs`` (a universe name or explicit id pairs) under ``cfg``."""
    universe, plist = _resolve_pairs(g, pairs)
    S = score_matrix(g, cfg)
    scores = {e: float(S[e]) for e in plist}
    return RankedList(cfg, universe, tuple(rank(scores)), g.nodes)


def _with_method(cfg, method):
    if cfg is None:
        return ScoreConfig(method)
    if cfg.method != method:
        raise ValueError(f"config is for method {cfg.method!r}, expected {method!r}")
    return cfg


def score_h(g: Graph, pairs="nonadjacent", cfg: ScoreConfig | None = None) -> RankedList:
    """Walk-count score ``[sum_{r=2}^p (alpha A)^r]_ij``.

    With ``horizon="infinite"`` the closed form ``(I - alpha A)^{-1} - I - alpha A``
    is used, which needs ``alpha * lambda_max < 1``.
    """
    return score_pairs(g, pairs, _with_method(cfg, "H"))


def score_sigma(g: Graph, pairs="nonadjacent", cfg: ScoreConfig | None = None) -> RankedList:
    return score_pairs(g, pairs, _with_method(cfg, "sigma"))


def score_g(g: Graph, pairs="nonadjacent", cfg: ScoreConfig | None = None) -> RankedList:
    """Conductance ``1 / R_ij``; pairs in different components score 0."""
    return score_pairs(g, pairs, _with_method(cfg, "G"))


def score_jaccard(g: Graph, pairs="nonadjacent") -> RankedList:
    return score_pairs(g, pairs, ScoreConfig("J"))


def score_adamic_adar(g: Graph, pairs="nonadjacent") -> RankedList:
    return score_pairs(g, pairs, ScoreConfig("Ad"))


def score_resource_allocation(g: Graph, pairs="nonadjacent") -> RankedList:
    return score_pairs(g, pairs, ScoreConfig("RA"))


def parse_methods(names: Sequence[str]) -> list[str]:
    out = []
    for name in names:
        m = _ALIASES.get(name.strip().lower())
        if m is None:
            raise ValueError(f"unknown method {name!r}; choose from {METHODS}")
        out.append(m)
    return out
