"""
Ranking conjectural links
=========================

A conjectural link is a pair of nodes with no edge between them whose
topology suggests that an edge belongs there.  This script ranks the absent
pairs of the two bundled social networks with every scorer in the package.
"""

import conjlink as cl

# The karate club network ships with the package, labelled 1..34.
karate = cl.builtin_dataset("karate")
print(karate.N, "nodes,", karate.edge_count, "edges,",
      len(karate.nonadjacent_pairs()), "absent pairs")

###############################################################################
# Effective conductance
# ---------------------
# Every edge is treated as a unit resistor.  A pair scores high when many
# short, parallel routes join it.

ranked = cl.score_g(karate)
for rank, a, b, score in ranked.top(5).labelled():
    print(f"{rank:2d}  {a:>2}-{b:<2}  G = {score:.4f}")

###############################################################################
# Walk sums
# ---------
# H adds up walks of length 2 to p, each weighted by alpha**length.  Walks
# may revisit nodes, so hubs attract long walks and dominate the list.

walks = cl.score_h(karate, "nonadjacent", cl.ScoreConfig("H", p=10))
for rank, a, b, score in walks.top(5).labelled():
    print(f"{rank:2d}  {a:>2}-{b:<2}  H = {score:.5f}")

###############################################################################
# Neighbourhood indices
# ---------------------
# Jaccard, Adamic-Adar and resource allocation only look at common
# neighbours, so their top lists differ from the global scores.

for method in ("J", "Ad", "RA"):
    top = cl.score_pairs(karate, "nonadjacent", cl.ScoreConfig(method)).top(3)
    print(method, [f"{a}-{b}" for _, a, b, _ in top.labelled()])

###############################################################################
# Les Miserables
# --------------
# The character co-appearance network has 77 nodes.  Its leading conjectural
# link under conductance joins two characters who never share a scene.

lesmis = cl.builtin_dataset("lesmis")
print(cl.score_g(lesmis).top(3).labelled())
