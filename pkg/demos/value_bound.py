"""How far apart can optimal values of two states be when each can reach the other?

If s reaches s' in k1 steps and s' reaches s in k2 steps (both with certainty),
then for every reward in [0, 1] the optimal values differ by at most
(1 - gamma^max(k1, k2)) / (1 - gamma).  This script samples rewards on a few
MDPs and reports the largest observed gap next to that bound.

Run: python demos/value_bound.py
"""

from auplab.rng import RngStream
from auplab.theory import chain_mdp, check_prop1, indicator_gap, one_way_chain_mdp, prop1_bound, random_deterministic_mdp

for gamma in (0.5, 0.9, 0.97):
    rep = check_prop1(chain_mdp(6, gamma), 200, RngStream(0))
    far = next(p for p in rep.pairs if (p.s, p.s2) == (0, 6))
    print(f"gamma={gamma}: chain ends k={far.k1}, bound {far.bound:.4f}, "
          f"largest sampled gap {far.max_gap:.4f}, indicator gap {far.indicator_gap:.4f}")

print("\nA reward that pays only at the far end of a one-way chain meets the bound exactly:")
for k in (1, 3, 10):
    print(f"  k={k}: gap {indicator_gap(one_way_chain_mdp(k, 0.9), 0, k):.6f}  bound {prop1_bound(0.9, k, k):.6f}")

print("\nRandom deterministic MDPs:")
for i in range(5):
    rng = RngStream(i)
    rep = check_prop1(random_deterministic_mdp(8, 3, 0.9, rng.child(0)), 100, rng.child(1))
    print(" ", rep.summary())
