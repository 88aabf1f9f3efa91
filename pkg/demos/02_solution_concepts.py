"""One coalition game, many ways to split it.

Shapley, Banzhaf, arbitrary semivalues, the Owen value with an a priori
community structure, weighted Shapley, and the pairwise interaction index,
all on the same five-player game so the differences are visible.
"""

import numpy as np

from gtcentrality import Game, shapley_exact, semivalue_exact, owen_value
from gtcentrality import banzhaf, coalitional_semivalue, interaction_index, weighted_shapley
from gtcentrality.solutions import banzhaf_voting, point_beta, shapley_beta
from gtcentrality.value_functions import weighted_voting


def popcount(x):
    return bin(x).count("1")


# a mildly superadditive game: worth grows with size, plus a bonus when
# players 0 and 1 are together
def nu(mask):
    worth = popcount(mask) ** 1.5
    if mask & 0b00011 == 0b00011:
        worth += 2.0
    return worth


game = Game(5, nu)
n = 5

print("== dividing nu among 5 players ==")
rows = {
    "Shapley": shapley_exact(game).values,
    "Banzhaf": banzhaf(game).values,
    "semivalue beta=size-1": semivalue_exact(game, point_beta(n, 1)).values,
    "weighted Shapley w=(5,1,1,1,1)": weighted_shapley(game, [5, 1, 1, 1, 1]).values,
}
comms = [0b00011, 0b11100]  # {0,1} and {2,3,4}
rows["Owen, blocks {01}{234}"] = owen_value(game, comms).values
rows["coalitional semivalue (uniform)"] = coalitional_semivalue(
    game, comms, beta=shapley_beta(2), alpha=lambda s: shapley_beta(s)
).values

header = "player:" + "".join(f"{i:>10d}" for i in range(5))
print(header)
for name, vals in rows.items():
    body = "".join(f"{v:10.4f}" for v in vals)
    print(f"{body}   {name}")
print()
print("Shapley and Owen are efficient (sum to nu(N) = %.4f):" % game(0b11111))
print("   Shapley sum %.4f, Owen sum %.4f" % (rows["Shapley"].sum(), rows["Owen, blocks {01}{234}"].sum()))

print()
print("== the 0-1 synergy shows up in the interaction index ==")
print(f"I(0,1) = {interaction_index(game, 0, 1):+.4f}   (the built-in bonus)")
print(f"I(2,3) = {interaction_index(game, 2, 3):+.4f}   (plain size effects only)")

print()
print("== a weighted voting game: [51; 40, 30, 20, 10] ==")
wv = weighted_voting([40, 30, 20, 10], quota=51)
rel, norm = banzhaf_voting([40, 30, 20, 10], quota=51)
print("relative Banzhaf:  ", np.round(rel, 4))
print("normalised Banzhaf:", np.round(norm, 4))
print("Shapley-Shubik:    ", np.round(shapley_exact(wv).values, 4))
print("(the 10-weight player is not a dummy: it swings coalitions)")
