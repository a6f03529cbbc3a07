"""Batch command line front end.

Subcommands: walks, word, phi, mul, basis, dims, verify.  Exit status is
0 on success, 1 when a verification suite fails, 2 on usage errors.  The
default verification seed and prime can be set through the BLOBALG_SEED
and BLOBALG_PRIME environment variables; identical seed and flags produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import comb
from typing import List, Optional

from .diagrams import all_diagrams, compose_scaled, diagram_from_dict, scaled_to_dict, ScaledDiagram
from .modlin import DEFAULT_PRIME, check_prime, draw_points
from .presentation import (
    check_defining_relations,
    check_reduction_stability,
    check_run_identities,
    evaluate_word,
)
from .reports import Report
from .ring import RingElem, parse_scalar
from .diamond import check_diamond_walks, check_envelope_words
from .towers import (
    check_ideal_inclusions,
    check_quotient_dims,
    check_span_closure,
    check_standard_modules,
    check_tower,
    check_word_basis,
    regular_basis,
    squared_basis,
)
from .walks import all_walks, check_diamond_moves, check_walk_suite, parse_walk, path_word, walk_words
from .words import Word, parse_word


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blobalg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("walks", help="enumerate Pascal-triangle walks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("word", help="the word of a walk")
    p.add_argument("--path", required=True, help="comma separated weights, e.g. 0,-1,0,1")
    p.add_argument("--variant", action="store_true")

    p = sub.add_parser("phi", help="evaluate a word to a scaled diagram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True)

    p = sub.add_parser("mul", help="multiply two words or diagrams")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = sub.add_parser("basis", help="word bases")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--squared", action="store_true")
    p.add_argument("--format", choices=["text", "json", "latex"], default="text")

    p = sub.add_parser("dims", help="walk counts against diagram counts")
    p.add_argument("--n-max", type=int, required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True,
                   choices=["relations", "identities", "redux", "diamond", "walks",
                            "ideals", "tower", "bases", "appendix", "all"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--prime", type=int, default=None)
    return parser


def _parse_side(text: str, n: int) -> ScaledDiagram:
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        if int(data.get("n", n)) != n:
            raise ValueError("diagram strand count disagrees with --n")
        coeff = parse_scalar(data["coeff"]) if "coeff" in data else RingElem.one()
        return ScaledDiagram(coeff, diagram_from_dict({**data, "n": n}))
    return evaluate_word(parse_word(text, n))


def _latex_word(w: Word) -> str:
    if not w.letters:
        return "1"
    return " ".join("e" if x == 0 else f"U_{{{x}}}" for x in w.letters)


def cmd_walks(args) -> int:
    walks = all_walks(args.n, args.m)
    if args.format == "json":
        print(json.dumps([{"sigma": list(w.sigma)} for w in walks]))
    else:
        for w in walks:
            print(w)
    return 0


def cmd_word(args) -> int:
    print(path_word(parse_walk(args.path), variant=args.variant))
    return 0


def cmd_phi(args) -> int:
    print(json.dumps(scaled_to_dict(evaluate_word(parse_word(args.word, args.n)))))
    return 0


def cmd_mul(args) -> int:
    left = _parse_side(args.left, args.n)
    right = _parse_side(args.right, args.n)
    print(json.dumps(scaled_to_dict(compose_scaled(left, right))))
    return 0


def cmd_basis(args) -> int:
    if args.m is not None and args.squared:
        words: List[Word] = list(squared_basis(args.n, args.m).words)
    elif args.m is not None:
        words = walk_words(args.n, args.m)
    else:
        words = list(regular_basis(args.n))
    if args.format == "json":
        print(json.dumps([str(w) for w in words]))
    elif args.format == "latex":
        if args.m is not None and args.squared:
            grid = squared_basis(args.n, args.m).grid()
            cols = "c" * len(grid)
            print(r"\begin{array}{%s}" % cols)
            for row in grid:
                print(" " + " & ".join(_latex_word(w) for w in row) + r" \\")
            print(r"\end{array}")
        else:
            print(r"\{ " + ",\\; ".join(_latex_word(w) for w in words) + r" \}")
    else:
        for w in words:
            print(w)
    return 0


def cmd_dims(args) -> int:
    print("n |S_n| sum|S_(n,m)|^2 C(2n,n) |B_n| ok")
    status = 0
    for n in range(1, args.n_max + 1):
        per_m = {m: len(all_walks(n, m)) for m in range(-n, n + 1, 2)}
        walks_total = len(all_walks(n))
        squares = sum(k ** 2 for k in per_m.values())
        central = comb(2 * n, n)
        bn = len(all_diagrams(n)) if n <= 7 else central
        ok = (walks_total == 2 ** n and squares == central == bn
              and all(per_m[m] == comb(n, (n + m) // 2) for m in per_m))
        status |= 0 if ok else 1
        shown = str(bn) if n <= 7 else "-"
        print(f"{n} {walks_total} {squares} {central} {shown} {'yes' if ok else 'NO'}")
        print("  " + " ".join(f"|S_({n},{m})|={per_m[m]}" for m in sorted(per_m)))
    return status


_SUITES = ["relations", "identities", "redux", "diamond", "walks",
           "ideals", "tower", "bases", "appendix"]


def run_suite(suite: str, n: int, seed: int, prime: int) -> List[Report]:
    points = draw_points(seed, 3, prime)
    if suite == "relations":
        return [check_defining_relations(n)]
    if suite == "identities":
        return [check_run_identities(n)]
    if suite == "redux":
        return [check_reduction_stability(n)]
    if suite == "diamond":
        return [check_diamond_moves(n)]
    if suite == "walks":
        return [check_walk_suite(n)]
    if suite == "ideals":
        return [check_ideal_inclusions(n, points, seed), check_span_closure(n, points, seed)]
    if suite == "tower":
        return [check_tower(n, points, seed), check_quotient_dims(n, points, seed)]
    if suite == "bases":
        return [check_word_basis(n, points, seed), check_standard_modules(n, points, seed)]
    if suite == "appendix":
        return [check_diamond_walks(n), check_envelope_words(n)]
    out: List[Report] = []
    for name in _SUITES:
        if name == "redux" and n < 3:
            continue
        if name in ("tower",) and n < 2:
            continue
        out.extend(run_suite(name, n, seed, prime))
    return out


def cmd_verify(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("BLOBALG_SEED", "0"))
    prime = args.prime
    if prime is None:
        prime = int(os.environ.get("BLOBALG_PRIME", str(DEFAULT_PRIME)))
    check_prime(prime)
    reports = run_suite(args.suite, args.n, seed, prime)
    for rep in reports:
        for line in rep.lines():
            print(line)
    failed = [rep.title for rep in reports if not rep.passed]
    print(f"suite={args.suite} n={args.n} seed={seed} prime={prime} "
          f"passed={'true' if not failed else 'false'}")
    return 1 if failed else 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "walks": cmd_walks,
        "word": cmd_word,
        "phi": cmd_phi,
        "mul": cmd_mul,
        "basis": cmd_basis,
        "dims": cmd_dims,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
