"""Brute-force reference computations used only by the tests.

None of these touch the package's matrix code: walks are enumerated by
depth-first search, resistances come from counting spanning trees and
2-forests, and the neighbourhood indices work on Python sets.
"""

import math
import random
from fractions import Fraction
from itertools import combinations

from conjlink import Graph


def adjacency_lists(n, edges):
    nbrs = [[] for _ in range(n)]
    for i, j in edges:
        nbrs[i].append(j)
        nbrs[j].append(i)
    return nbrs


def count_walks_dfs(nbrs, i, j, r):
    """Number of walks with exactly ``r`` steps from ``i`` to ``j``."""
    if r == 0:
        return int(i == j)
    return sum(count_walks_dfs(nbrs, k, j, r - 1) for k in nbrs[i])


def count_walks_dp(nbrs, i, r):
    """Walk counts of length ``r`` from ``i`` to every node, by dynamic programming."""
    cur = [0] * len(nbrs)
    cur[i] = 1
    for _ in range(r):
        nxt = [0] * len(nbrs)
        for u, c in enumerate(cur):
            if c:
                for v in nbrs[u]:
                    nxt[v] += c
        cur = nxt
    return cur


def walk_sum_oracle(n, edges, alpha, p):
    nbrs = adjacency_lists(n, edges)
    out = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[i][j] = sum(alpha ** r * count_walks_dfs(nbrs, i, j, r) for r in range(2, p + 1))
    return out


class _DSU:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _forests(n, edges, k):
    """Yield DSUs of acyclic edge subsets of size ``k``."""
    for subset in combinations(edges, k):
        dsu = _DSU(n)
        if all(dsu.union(a, b) for a, b in subset):
            yield dsu


def resistance_by_forests(n, edges):
    """Exact resistances of a connected graph as spanning-forest count ratios.

    ``R_ij = F_ij / T`` with ``T`` the number of spanning trees and ``F_ij``
    the number of spanning 2-forests that put ``i`` and ``j`` in different
    trees. Returns a dict of ``Fraction`` keyed by ``(i, j)``, ``i < j``.
    """
    edges = list(edges)
    trees = sum(1 for _ in _forests(n, edges, n - 1))
    if trees == 0:
        raise ValueError("graph is not connected")
    split = {pair: 0 for pair in combinations(range(n), 2)}
    for dsu in _forests(n, edges, n - 2):
        roots = [dsu.find(v) for v in range(n)]
        for i, j in split:
            if roots[i] != roots[j]:
                split[i, j] += 1
    return {pair: Fraction(c, trees) for pair, c in split.items()}


def jaccard_oracle(g, i, j):
    a, b = set(g.neighbors(i)), set(g.neighbors(j))
    union = a | b
    return len(a & b) / len(union) if union else 0.0


def adamic_adar_oracle(g, i, j):
    return sum(1.0 / math.log(len(g.neighbors(k))) for k in set(g.neighbors(i)) & set(g.neighbors(j)))


def resource_allocation_oracle(g, i, j):
    return sum(1.0 / len(g.neighbors(k)) for k in set(g.neighbors(i)) & set(g.neighbors(j)))


def is_connected(n, edges):
    dsu = _DSU(n)
    for a, b in edges:
        dsu.union(a, b)
    return len({dsu.find(v) for v in range(n)}) == 1


def random_connected_graphs(count, n_min, n_max, seed, p_range=(0.3, 0.8)):
    """``count`` random connected graphs as ``(n, edge list)``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(n_min, n_max)
        p = rng.uniform(*p_range)
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        if is_connected(n, edges):
            out.append((n, edges))
    return out


def as_graph(n, edges):
    return Graph([str(k) for k in range(n)], edges)


def fig1_analogue():
    """Two non-adjacent hubs sharing five degree-2 neighbours, plus a 10-node path hanging off one hub."""
    labels = ["u", "v"] + [f"c{k}" for k in range(5)] + [f"p{k}" for k in range(10)]
    g_edges = []
    for k in range(5):
        g_edges += [("u", f"c{k}"), ("v", f"c{k}")]
    g_edges.append(("u", "p0"))
    g_edges += [(f"p{k}", f"p{k + 1}") for k in range(9)]
    return Graph.from_labels(g_edges, labels)
