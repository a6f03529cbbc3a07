"""Generators, relations, and the word-to-diagram dictionary.

The blob algebra on n strands has generators e, U_1, ..., U_{n-1}.  Each
word evaluates to an exact scalar times a planar blob diagram; the scalar
lives in Z[g, de][q, q^-1] and records every closed loop and excess blob
removed along the way.
"""

from blobalg import (
    all_diagrams,
    check_defining_relations,
    evaluate_word,
    is_reduced,
    parse_word,
    scaled_to_dict,
)

n = 3

print("The generator diagrams and a few products, on", n, "strands:")
for text in ["1", "e", "U1", "U2", "U1 U1", "e e", "U1 e U1", "U1 U2 U1"]:
    s = evaluate_word(parse_word(text, n))
    print(f"  {text:10s} -> ({s.coeff}) {s.diagram}")

print()
print("A word is reduced exactly when its scalar is 1:")
for text in ["U1 U2 U1", "U1 U1", "U1 e U1"]:
    print(f"  {text:10s} reduced: {is_reduced(parse_word(text, n))}")

print()
print("Squaring U_i extracts the loop scalar q + q^-1, a blob-decorated")
print("loop extracts g, and a doubled blob extracts de.  The six defining")
print("relation families hold exactly at every index:")
rep = check_defining_relations(4)
print(" ", rep.lines()[-1])

print()
print("Every one of the C(2n, n) blob diagrams appears:")
print("  counts:", [len(all_diagrams(k)) for k in range(1, 7)])

print()
print("JSON form of an evaluated word:")
print(" ", scaled_to_dict(evaluate_word(parse_word("U2 U1 e U2 U1", 3))))
