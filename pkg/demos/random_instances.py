"""Pruned search against the exhaustive reference on random instances.

Builds random sphere forests and graph tables, then compares three
answers: the exhaustive reference, the unpruned search (which must agree
with it) and the pruned search. The census filter in the pruned search
drops regions with unbalanced critical points, so it can miss a thinner
candidate that the reference still sees.

Run: python3 demos/random_instances.py [count] [seed]
"""
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))
from conftest import random_instance  # noqa: E402

from thinpos import oracle_search, search  # noqa: E402

count = int(sys.argv[1]) if len(sys.argv) > 1 else 200
rng = random.Random(int(sys.argv[2]) if len(sys.argv) > 2 else 7)

agree = filtered_out = beat_baseline = 0
for _ in range(count):
    inst = random_instance(rng, max_spheres=4, thinner_rate=0.0)
    ref = oracle_search(inst)
    full = search(inst, prune=False).winner
    pruned = search(inst, prune=True).winner
    agree += (full.width, full.profile) == (ref.width, ref.profile)
    filtered_out += pruned.width > ref.width
    beat_baseline += pruned.width < inst.baseline_width

print(f"{agree}/{count} unpruned answers agree with the exhaustive search")
print(f"{filtered_out}/{count} pruned answers lost a thinner candidate to the census filter")
print(f"{beat_baseline}/{count} pruned answers beat the bridge presentation")
