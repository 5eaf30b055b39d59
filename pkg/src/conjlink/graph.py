"""Immutable simple undirected graphs, edge-list I/O, datasets and generators."""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from importlib import resources
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "EdgeListError",
    "DuplicateEdgeWarning",
    "GeneratorConfig",
    "load_edge_list",
    "dump_edge_list",
    "builtin_dataset",
    "BUILTIN_DATASETS",
    "total_possible_links",
    "generate",
]

BUILTIN_DATASETS = ("karate", "lesmis")


class EdgeListError(ValueError):
    """Raised when an edge-list document cannot be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateEdgeWarning(UserWarning):
    pass


def _canon(i, j):
    return (i, j) if i < j else (j, i)


class Graph:
    """Simple undirected graph with string labels and dense integer ids.

    Node ``k`` carries label ``nodes[k]``. Edges are stored once as ``(i, j)``
    with ``i < j``. Instances are values: every mutating operation returns a
    new graph.

    Parameters
    ----------
    nodes : sequence of str
        Unique node labels; position is the internal id.
    edges : iterable of (int, int)
        Unordered id pairs. Self-loops and out-of-range ids are rejected,
        duplicates collapse silently.
    """

    __slots__ = ("_nodes", "_index", "_edges", "_nbrs", "_adj")

    def __init__(self, nodes: Sequence[str], edges: Iterable[tuple[int, int]] = ()):
        nodes = tuple(str(x) for x in nodes)
        index = {lab: k for k, lab in enumerate(nodes)}
        if len(index) != len(nodes):
            raise ValueError("node labels must be unique")
        n = len(nodes)
        canon = set()
        for i, j in edges:
            i, j = int(i), int(j)
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) references an unknown node")
            if i == j:
                raise ValueError(f"self-loop on node {nodes[i]!r}")
            canon.add(_canon(i, j))
        nbrs = [set() for _ in range(n)]
        for i, j in canon:
            nbrs[i].add(j)
            nbrs[j].add(i)
        self._nodes = nodes
        self._index = index
        self._edges = frozenset(canon)
        self._nbrs = tuple(frozenset(s) for s in nbrs)
        self._adj = None

    @classmethod
    def from_labels(cls, edges: Iterable[tuple[str, str]], nodes: Sequence[str] = ()):
        """Build a graph from label pairs; unseen labels are appended in order."""
        order = list(nodes)
        index = {lab: k for k, lab in enumerate(order)}
        ids = []
        for a, b in edges:
            for lab in (a, b):
                if lab not in index:
                    index[lab] = len(order)
                    order.append(lab)
            ids.append((index[a], index[b]))
        return cls(order, ids)

    # -- basic queries -------------------------------------------------------

    @property
    def nodes(self) -> tuple[str, ...]:
        return self._nodes

    @property
    def edges(self) -> frozenset:
        return self._edges

    @property
    def N(self) -> int:
        return len(self._nodes)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def label(self, i: int) -> str:
        return self._nodes[i]

    def index(self, label: str) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise KeyError(f"unknown node label {label!r}") from None

    def _check(self, i):
        if not 0 <= i < self.N:
            raise IndexError(f"node id {i} out of range for N={self.N}")

    def neighbors(self, i: int) -> frozenset:
        self._check(i)
        return self._nbrs[i]

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def degrees(self) -> np.ndarray:
        return np.array([len(s) for s in self._nbrs], dtype=np.int64)

    def is_adjacent(self, i: int, j: int) -> bool:
        return _canon(i, j) in self._edges

    def adjacency(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix (read-only, cached)."""
        if self._adj is None:
            a = np.zeros((self.N, self.N))
            for i, j in self._edges:
                a[i, j] = a[j, i] = 1.0
            a.setflags(write=False)
            self._adj = a
        return self._adj

    def all_pairs(self) -> list[tuple[int, int]]:
        return list(combinations(range(self.N), 2))

    def adjacent_pairs(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    def nonadjacent_pairs(self) -> list[tuple[int, int]]:
        return [e for e in combinations(range(self.N), 2) if e not in self._edges]

    def pair_labels(self, pair):
        return self._nodes[pair[0]], self._nodes[pair[1]]

    def pair_index(self, a: str, b: str) -> tuple[int, int]:
        return _canon(self.index(a), self.index(b))

    # -- value semantics -----------------------------------------------------

    def remove_edges(self, edges) -> "Graph":
        drop = {_canon(int(i), int(j)) for i, j in edges}
        missing = drop - self._edges
        if missing:
            i, j = min(missing)
            raise ValueError(f"cannot remove non-edge {self.pair_labels((i, j))}")
        return Graph(self._nodes, self._edges - drop)

    def add_edges(self, edges) -> "Graph":
        new = set()
        for i, j in edges:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"cannot add self-loop on {self._nodes[i]!r}")
            e = _canon(i, j)
            if e in self._edges:
                raise ValueError(f"edge {self.pair_labels(e)} already present")
            new.add(e)
        return Graph(self._nodes, self._edges | new)

    def connected_components(self) -> list[set[int]]:
        """Node-id sets of the connected components, ordered by smallest id."""
        seen = [False] * self.N
        comps = []
        for s in range(self.N):
            if seen[s]:
                continue
            comp = {s}
            seen[s] = True
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for v in self._nbrs[u]:
                    if not seen[v]:
                        seen[v] = True
                        comp.add(v)
                        queue.append(v)
            comps.append(comp)
        return comps

    def component_labels(self) -> np.ndarray:
        lab = np.empty(self.N, dtype=np.int64)
        for c, comp in enumerate(self.connected_components()):
            lab[list(comp)] = c
        return lab

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with node ``k`` moved to position ``perm[k]`` (an isomorphic copy)."""
        nodes = [None] * self.N
        for k, p in enumerate(perm):
            nodes[p] = self._nodes[k]
        return Graph(nodes, [(perm[i], perm[j]) for i, j in self._edges])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._nodes == other._nodes and self._edges == other._edges

    def __hash__(self):
        return hash((self._nodes, self._edges))

    def __repr__(self):
        return f"Graph(N={self.N}, edge_count={self.edge_count})"


def total_possible_links(g: Graph) -> int:
    """Number of unordered node pairs, N(N-1)/2."""
    return g.N * (g.N - 1) // 2


# -- edge-list format ----------------------------------------------------------


def load_edge_list(text: str, nodes: Sequence[str] = ()) -> Graph:
    """Parse an edge-list document.

    One edge per line as two whitespace-separated labels; ``#`` starts a
    comment and blank lines are skipped. Labels get ids in order of first
    appearance, after any labels given in ``nodes``. Duplicate edges (in either
    orientation) are collapsed with a :class:`DuplicateEdgeWarning`.

    Raises
    ------
    EdgeListError
        On a self-loop or a line that does not hold exactly two labels.
    """
    pairs = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListError(f"expected 2 labels, got {len(tokens)}", lineno)
        a, b = tokens
        if a == b:
            raise EdgeListError(f"self-loop on {a!r}", lineno)
        key = (a, b) if a < b else (b, a)
        if key in seen:
            warnings.warn(
                f"line {lineno}: duplicate edge {a} {b} ignored",
                DuplicateEdgeWarning,
                stacklevel=2,
            )
            continue
        seen.add(key)
        pairs.append((a, b))
    return Graph.from_labels(pairs, nodes)


def dump_edge_list(g: Graph) -> str:
    """Serialize as an edge list, edges in id order."""
    return "".join(f"{g.label(i)} {g.label(j)}\n" for i, j in g.adjacent_pairs())


def builtin_dataset(name: str) -> Graph:
    """Bundled reference network: ``"karate"`` (Zachary) or ``"lesmis"`` (Knuth).

    Node ids follow the canonical dataset order (karate members 1..34, the
    Stanford GraphBase character order for lesmis).
    """
    if name not in BUILTIN_DATASETS:
        raise KeyError(f"unknown dataset {name!r}; choose from {BUILTIN_DATASETS}")
    data = resources.files("conjlink") / "data"
    nodes = (data / f"{name}.nodes").read_text(encoding="utf-8").split()
    return load_edge_list((data / f"{name}.edges").read_text(encoding="utf-8"), nodes)


# -- random graph generators ---------------------------------------------------


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters of a random graph model.

    ``kind="ba"`` grows a preferential-attachment graph from a ring of ``m0``
    nodes, each newcomer attaching to ``m_attach`` distinct existing nodes.
    ``kind="er"`` includes every pair independently with ``p_edge``.
    """

    kind: str = "ba"
    n: int = 100
    m0: int = 5
    m_attach: int = 3
    p_edge: float = 0.06
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("ba", "er"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.kind == "ba":
            if not (1 <= self.m_attach <= self.m0 < self.n):
                raise ValueError(
                    f"BA needs 1 <= m_attach <= m0 < n, got "
                    f"m_attach={self.m_attach}, m0={self.m0}, n={self.n}"
                )
            if self.m0 < 3:
                raise ValueError("BA ring seed needs m0 >= 3")
        else:
            if self.n < 1:
                raise ValueError("ER needs n >= 1")
            if not 0.0 <= self.p_edge <= 1.0:
                raise ValueError(f"p_edge must lie in [0, 1], got {self.p_edge}")

    def with_seed(self, seed: int) -> "GeneratorConfig":
        return GeneratorConfig(self.kind, self.n, self.m0, self.m_attach, self.p_edge, seed)


def _barabasi_albert(n, m0, m, rng):
    edges = [_canon(i, (i + 1) % m0) for i in range(m0)]
    degree = np.zeros(n)
    for i, j in edges:
        degree[i] += 1
        degree[j] += 1
    for new in range(m0, n):
        prob = degree[:new] / degree[:new].sum()
        targets = set()
        # draw one at a time; collisions are redrawn from the same distribution
        while len(targets) < m:
            targets.add(int(rng.choice(new, p=prob)))
        for t in sorted(targets):
            edges.append((t, new))
            degree[t] += 1
            degree[new] += 1
    return edges


def _erdos_renyi(n, p, rng):
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return [e for e, k in zip(pairs, keep) if k]


def generate(cfg: GeneratorConfig) -> Graph:
    """Draw one graph from ``cfg``; identical configs give identical graphs."""
    rng = np.random.default_rng(cfg.seed)
    if cfg.kind == "ba":
        edges = _barabasi_albert(cfg.n, cfg.m0, cfg.m_attach, rng)
    else:
        edges = _erdos_renyi(cfg.n, cfg.p_edge, rng)
    return Graph([str(k) for k in range(cfg.n)], edges)
