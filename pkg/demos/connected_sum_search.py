"""Search the bundled connected-sum instance and inspect the winner.

A 3-bridge link split by one twice-punctured sphere into two 2-bridge
pieces. Stacking the pieces beats the 3-bridge presentation.

Run: python3 demos/connected_sum_search.py
"""
from thinpos import decompose_width, parse_instance, search

inst = parse_instance("connected_sum")
result = search(inst, prune=False)

print(f"baseline width {inst.baseline_width}")
for c in result.candidates:
    print(f"  {str(c.origin):60s} width {c.width}")

best = result.winner
cp = best.presentation
internal, gaps, passing = decompose_width(cp)
print()
print("winner  ", best.word)
print("profile ", "+".join(map(str, best.profile)))
print("gaps    ", cp.gap_counts)
print(f"width {best.width} = internal {internal} + gap {gaps} + passing {passing}")
