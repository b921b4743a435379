"""Widths, profiles and thick/thin levels of a few Morse words.

Run: python3 demos/widths_basics.py
"""
from thinpos import (
    MorseWord,
    bridge_number,
    lower_bound_thick,
    nbridge_word,
    profile,
    reflect,
    thin_thick_levels,
    width_link,
)

# Bridge position: all minima below all maxima. Width grows as 2n^2.
for n in (1, 2, 3, 6):
    w = nbridge_word(n)
    print(f"{n}-bridge word: width {width_link(w):3d}, bridge number {bridge_number(w)}")

# A word with one thin level between two thick levels.
w = MorseWord.parse("MIN MIN MIN MIN MAX MIN MAX MAX MAX MAX")
prof = profile(w)
thin, thick = thin_thick_levels(prof)
print()
print("word     ", w)
print("profile  ", "+".join(map(str, prof.counts)), "=", prof.width)
print("thin at  ", thin, " thick at", thick)
print("reflected width", width_link(reflect(w)))

# A thin level of 8 points forces at least this much width.
print("\nlower bound with a thin level of 8 points:", lower_bound_thick(4, 4))
