"""Diamond-grid walks, the height poset, and envelope words.

Pascal walks re-encode as N/S walks on the tilted square grid, all ending
at the rightmost vertex.  The weight of the original walk is visible as
the lowest height reached, and the generator word can be read back off
the envelope between a walk and the floor-hugging walk below it.
"""

from blobalg import (
    all_walks,
    diamond_to_dict,
    diamond_walk,
    envelope_word,
    heights_leq,
    path_word,
    to_diamond,
    weight_of_diamond,
)

print("Re-encoding the length-4 walks ending at weight 0:")
for p in all_walks(4, 0):
    t = to_diamond(p)
    print(f"  {str(p):12s} -> {t}  heights {t.heights()}  lowest {t.lowest}")

print()
print("The all-S walk sits above every other diamond walk; its envelope")
print("word is the longest basis word, matching the walk word exactly:")
for n in (4, 6):
    top = diamond_walk("S" * n)
    W = envelope_word(top)
    p = [q for q in all_walks(n, 0) if to_diamond(q) == top][0]
    print(f"  n={n}: envelope {W}")
    print(f"        walk word (variant form) {path_word(p, variant=True)}")

print()
print("Weights are recovered from lowest heights (parity gives the sign):")
for p in all_walks(3):
    t = to_diamond(p)
    print(f"  {str(p):10s} -> {str(t):5s} lowest {t.lowest} weight {weight_of_diamond(t):+d}")

print()
t, u = to_diamond(all_walks(4, 0)[0]), diamond_walk("SSSS")
print("Poset comparison:", t, "<=", u, "is", heights_leq(t, u))
print("JSON form:", diamond_to_dict(to_diamond(all_walks(3, 1)[0])))
