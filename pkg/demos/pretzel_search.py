"""The six-bridge pretzel model: five sphere systems, one winner.

Prints per-system statistics, then checks the pruned answer against the
exhaustive reference search.

Run: python3 demos/pretzel_search.py
"""
import time

from thinpos import oracle_search, parse_instance, search
from thinpos.report import build_report, format_table

inst = parse_instance("pretzel6x3")

t0 = time.perf_counter()
result = search(inst, prune=True)
t_pruned = time.perf_counter() - t0
print(format_table(build_report(result, all_candidates=False)))

t0 = time.perf_counter()
ref = oracle_search(inst)
t_oracle = time.perf_counter() - t0

print(f"pruned search  {result.winner.width}  ({t_pruned * 1000:.1f} ms)")
print(f"exhaustive     {ref.width}  ({t_oracle * 1000:.1f} ms)")
assert ref.width == result.winner.width and ref.profile == result.winner.profile
