"""Directed graphs and generalized (order-aware) games.

On a digraph the order in which players arrive can matter: a sequence is
feasible when each newcomer is reachable from the earlier arrivals.  Two
crediting rules exist for the resulting generalized games, and psi_alpha
interpolates between them.  Also here: the beta measure (Shapley value of
the one-step score game) and accessibility, which rewards nodes reachable
downstream.
"""

import numpy as np

from gtcentrality.fixtures import chain5, star
from gtcentrality.measures import accessibility, beta_measure, pozo_centrality
from gtcentrality.solutions import nowak_radzik, psi_alpha, sanchez_bergantinos
from gtcentrality.value_functions import pozo_digraph_restriction
from gtcentrality.games import Game


def square(mask):
    return float(bin(mask).count("1")) ** 2


g = chain5()  # arcs 1->2->3->4 and 5->3
print("digraph arcs:", [(g.labels[u], g.labels[v]) for u, v in g.edges()])

og = pozo_digraph_restriction(Game(5, square), g)
nr = nowak_radzik(og).values
sb = sanchez_bergantinos(og).values
print()
print("== two crediting rules for the restricted generalized game ==")
print("last-player rule:   ", nr)
print("equal-split rule:   ", sb)
print("alpha sweep (0 -> 1):")
for alpha in (0.0, 0.25, 0.5, 0.75, 1.0):
    vals = psi_alpha(og, alpha).values
    print(f"  alpha={alpha:4.2f}  {np.round(vals, 4)}")

print()
print("== centrality relative to the unrestricted game ==")
for alpha in (0.0, 1.0):
    pz = pozo_centrality(g, square, alpha=alpha)
    print(f"  alpha={alpha:.0f}: {np.round(pz.values, 4)}  (unrestricted Shapley is 5 each)")

print()
print("== accessibility rewards what a node can reach ==")
acc = accessibility(g, square)
for lab, v in acc.by_label().items():
    print(f"  {lab}  {v:8.4f}")
print("node 3 collects from both branches; sinks keep only themselves")

print()
print("== beta measure on directed stars ==")
out_star = star(4, mode="out")
in_star = star(4, mode="in")
print("hub -> leaves:", np.round(beta_measure(out_star).values, 4), "labels", out_star.labels)
print("leaves -> hub:", np.round(beta_measure(in_star).values, 4), "labels", in_star.labels)
print("(pointing at others is power; being pointed at is not)")
