"""
When the walk series converges
==============================

The infinite walk sum equals ``(I - alpha A)^-1`` only while alpha times the
largest adjacency eigenvalue stays below one.  The package checks this with
power iteration before inverting anything.
"""

import math

import numpy as np

import conjlink as cl

alpha = math.exp(-2)

for name in ("karate", "lesmis"):
    A = cl.builtin_dataset(name).adjacency()
    lam = cl.dominant_eigenvalue(A).lambda_max
    print(f"{name:7s} lambda_max = {lam:.4f}   alpha * lambda_max = {alpha * lam:.3f}")

###############################################################################
# Karate is safely inside the convergent region, and finite sums approach
# the closed form as the walk length grows.

karate = cl.builtin_dataset("karate")
A = karate.adjacency()
closed = cl.inverse_i_minus_alpha_a(A, alpha) - np.eye(karate.N) - alpha * A
for p in (5, 10, 20, 40, 80):
    gap = np.abs(closed - cl.walk_sum(A, alpha, p)).max()
    print(f"p = {p:3d}   max gap to the closed form = {gap:.2e}")

###############################################################################
# Les Miserables is not, and the closed form is refused rather than
# returning a meaningless inverse.  Finite walk lengths still work.

lesmis = cl.builtin_dataset("lesmis")
try:
    cl.score_h(lesmis, "nonadjacent", cl.ScoreConfig("H", horizon="infinite"))
except cl.DivergentSeriesError as exc:
    print("refused:", exc)
print(cl.score_h(lesmis, "nonadjacent", cl.ScoreConfig("H", p=10)).top(3).labelled())
