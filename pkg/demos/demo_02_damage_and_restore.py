"""
Damaging and restoring a network
================================

We delete the ``m`` strongest existing links under one scorer, then ask
another scorer to rank the absent pairs of the damaged graph.  A good
restorer puts the deleted links near the top.
"""

import conjlink as cl

karate = cl.builtin_dataset("karate")

###############################################################################
# Damage is computed once on the intact graph.  Each removed link keeps its
# rank among the existing links.

record = cl.damage(karate, "G", m=10)
for pair, pre in record.removed:
    print(pre, "-".join(karate.pair_labels(pair)))

###############################################################################
# Scenario I: create links in ranked order until every removed link is back.
# ``m_plus`` is how many creations that takes, and ``Q`` grows as ``m_plus``
# approaches ``m``.

report = cl.restore_scenario_one(record, "G")
print("post-ranks:", report.post_ranks)
print("m_plus =", report.m_plus, " Q =", round(report.Q, 3))

###############################################################################
# Scenario II: create exactly ``m`` links and count the hits.

two = cl.restore_scenario_two(record, "G")
print("K =", two.K, " eta =", two.eta)

###############################################################################
# Mixing methods.  Links removed by conductance are hard to recover with a
# purely local index such as Jaccard.

for creator in ("G", "H", "J", "Ad", "RA"):
    rep = cl.restore(record, creator, scenario=2)
    print(f"removed by G, restored by {creator:>2}: eta = {rep.eta:.1f}, m_plus = {rep.m_plus}")
