"""From Pascal-triangle walks to reduced words.

Walks of length n down the Pascal triangle are weight sequences with unit
steps.  Each walk is sent to a word in the generators; the words attached
to walks ending at weight m form the basis of a standard module, and each
factors through a canonical cap-word tail.
"""

from blobalg import (
    all_walks,
    evaluate_word,
    factor_walk_words,
    parse_walk,
    path_word,
    walk_words,
)

print("The eight walks of length 3, with their words:")
for p in all_walks(3):
    print(f"  {str(p):12s} -> {path_word(p)}")

print()
print("Walks to (3, 1) and their words (the standard-module basis):")
for p, w in zip(all_walks(3, 1), walk_words(3, 1)):
    print(f"  {str(p):12s} -> {w}")

print()
print("Each weight-m word factors as prefix * tail with a common tail:")
for m in (1, 0, -2):
    n = 4 if m % 2 == 0 else 3
    for (prefix, tail), p in zip(factor_walk_words(n, m), all_walks(n, m)):
        print(f"  n={n} m={m:+d}  w({p}) = [{prefix}] * [{tail}]")

print()
print("The standard form and the shorter variant form agree in the algebra:")
p = parse_walk("0,1,0,1,0")
std, var = path_word(p), path_word(p, variant=True)
print(f"  standard: {std}")
print(f"  variant : {var}")
print(f"  same diagram: {evaluate_word(std).diagram == evaluate_word(var).diagram},"
      f" scalars {evaluate_word(std).coeff} and {evaluate_word(var).coeff}")
