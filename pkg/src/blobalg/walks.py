"""Pascal-triangle walks and the walk-to-word map.

A walk of length n is its weight sequence (0, s_1, ..., s_n) with unit
steps.  Each edge maps to a word: steps away from weight zero contribute
nothing, a step from (lvl, 0) up to +1 contributes e followed by the two
even/odd skip runs down from U_lvl, and a step toward zero contributes
the full descending run U_lvl ... U_1 (standard form) or the truncated
run stopping at U_{lvl-|m|+1} (variant form, never longer, equal in the
algebra).  The word of a walk is the left-to-right product of its edge
words.

``factor_walk_words`` splits each walk word as prefix * tail where the
tail is cap_word(|m|, n) for m <= 0 and blob_cap_word(m, n) for m > 0;
every emitted factorization is verified in the diagram algebra.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple

from .presentation import is_reduced, phi_equal
from .reports import Report
from .words import (
    Word,
    blob_cap_word,
    cap_word,
    descending_run,
    gen_e,
    gen_u,
    skip_run,
    unit,
)


@dataclass(frozen=True)
class Walk:
    sigma: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(int(x) for x in self.sigma))
        if not self.sigma or self.sigma[0] != 0:
            raise ValueError("weight sequence must start at 0")
        for a, b in zip(self.sigma, self.sigma[1:]):
            if abs(a - b) != 1:
                raise ValueError("weights must move by one per step")

    @property
    def length(self) -> int:
        return len(self.sigma) - 1

    @property
    def weight(self) -> int:
        return self.sigma[-1]

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.sigma)


def parse_walk(text: str) -> Walk:
    return Walk(tuple(int(tok) for tok in text.split(",")))


def all_walks(n: int, m: Optional[int] = None) -> List[Walk]:
    """All weight sequences of length n (optionally ending at weight m),
    in lexicographic order on sigma."""
    if m is not None and (abs(m) > n or (n - m) % 2 != 0):
        warnings.warn(f"no walks of length {n} reach weight {m}")
        return []
    walks: List[Tuple[int, ...]] = [(0,)]
    for _ in range(n):
        walks = [w + (w[-1] + step,) for w in walks for step in (-1, 1)]
    out = [Walk(w) for w in walks]
    if m is not None:
        out = [w for w in out if w.weight == m]
    return out


def edge_word(edge: Tuple[Tuple[int, int], Tuple[int, int]], variant: bool = False,
              n: Optional[int] = None) -> Word:
    """The word attached to one Pascal-triangle edge.

    The edge runs from (lvl, a) to (lvl+1, b) with |a-b| = 1.  Edges
    leaving weight 0 always use the blob rule (up) or the empty rule
    (down), never the away-from-zero rule.
    """
    (lvl, a), (lvl2, b) = edge
    if lvl2 != lvl + 1 or abs(a - b) != 1:
        raise ValueError(f"not a Pascal edge: {edge}")
    ambient = n if n is not None else lvl + 1
    if a == 0:
        if b == 1:
            return gen_e(ambient) * skip_run(lvl, 2, ambient) * skip_run(lvl - 1, 1, ambient)
        return unit(ambient)
    if abs(b) > abs(a):
        return unit(ambient)
    if variant:
        return descending_run(lvl, lvl - abs(b), ambient)
    return descending_run(lvl, 1, ambient)


def path_word(p: Walk, variant: bool = False) -> Word:
    """The left-to-right product of the edge words of p, in ambient n."""
    n = p.length
    w = unit(n)
    for i in range(n):
        w = w * edge_word(((i, p.sigma[i]), (i + 1, p.sigma[i + 1])), variant=variant, n=n)
    return w


def walk_words(n: int, m: int, variant: bool = False) -> List[Word]:
    """The word set attached to walks from (0,0) to (n,m), in walk order."""
    return [path_word(p, variant=variant) for p in all_walks(n, m)]


def tail_word(m: int, n: int) -> Word:
    """The canonical tail of weight-m walk words: caps, blobbed when m > 0."""
    return blob_cap_word(m, n) if m > 0 else cap_word(-m, n)


def factor_walk_words(n: int, m: int) -> List[Tuple[Word, Word]]:
    """Factor each weight-m walk word as (prefix, tail).

    First tries literal suffix matching on the variant-form word; otherwise
    rebuilds the prefix by the edge recursion (away-from-zero edges keep the
    prefix, toward-zero edges append the truncated run, the blob edge is
    absorbed into the tail).  Every factorization is verified exactly in
    the diagram algebra; failure to verify is a programming error.
    """
    out = []
    for p in all_walks(n, m):
        word = path_word(p)
        tail = tail_word(m, n)
        prefix = _literal_prefix(path_word(p, variant=True), tail)
        if prefix is None:
            prefix = _recursive_prefix(p)
        if not phi_equal(word, prefix * tail):
            raise AssertionError(f"factorization failed for walk {p}")
        out.append((prefix, tail))
    return out


def _literal_prefix(word: Word, tail: Word) -> Optional[Word]:
    k = len(tail.letters)
    if k == 0:
        return word
    if word.letters[len(word.letters) - k:] == tail.letters:
        return Word(word.n, word.letters[: len(word.letters) - k])
    return None


def _recursive_prefix(p: Walk) -> Word:
    # Invariant: after edge i the walk word so far is prefix * tail(i+1, b)
    # in the algebra.  Away-from-zero edges and the blob edge only upgrade
    # the tail; the step from +1 down to 0 releases the blobbed middle of
    # the tail into the prefix; other toward-zero steps release a short
    # descending run.
    n = p.length
    prefix = unit(n)
    for i in range(n):
        a, b = p.sigma[i], p.sigma[i + 1]
        if a == 1 and b == 0:
            prefix = prefix * cap_word(1, i).with_n(n) * gen_e(n) \
                * Word(n, tuple(range(2, i, 2)))
        elif a != 0 and abs(b) < abs(a):
            prefix = prefix * descending_run(i, i + 1 - abs(b), n)
    return prefix


# -- verification ------------------------------------------------------------


def check_walk_suite(n: int) -> Report:
    """Walk counts, reducedness of walk words, factorizations, and the
    agreement of standard and variant word forms."""
    rep = Report(f"walks(n={n})", meta={"n": n})
    rep.add("count-all", len(all_walks(n)), 2 ** n, len(all_walks(n)) == 2 ** n)
    for m in range(-n, n + 1, 2):
        got = len(all_walks(n, m))
        want = comb(n, (n + m) // 2)
        rep.add(f"count m={m}", got, want, got == want)
    for p in all_walks(n):
        w = path_word(p)
        rep.add(f"reduced [{p}]", f"scalar of {w}", "1", is_reduced(w))
        v = path_word(p, variant=True)
        ok = phi_equal(w, v) and len(v.letters) <= len(w.letters)
        rep.add(f"variant [{p}]", w, v, ok)
    for m in range(-n, n + 1, 2):
        pairs = factor_walk_words(n, m)
        tail = tail_word(m, n)
        ok = all(is_reduced(prefix) for prefix, _ in pairs)
        rep.add(f"factor m={m}", f"{len(pairs)} prefixes * {tail}",
                "reduced prefixes, images verified", ok)
    return rep


def _substitute(p: Walk, at: int, segment: Tuple[int, ...]) -> Walk:
    return Walk(p.sigma[:at] + segment + p.sigma[at + len(segment):])


def check_diamond_moves(n: int) -> Report:
    """Left multiplication by U_i as a local move on walks.

    Three verified families: flipping a (l, l-toward-0, l) notch with
    |l| > 1; the zigzag (0 (-1 -2)^l -1 0 1) versus (0 (1 2)^l 1 2 1); and
    the ridge (0 1 (2 3)^l 2 1) versus (0 -1 (0 -1)^l 0 1).
    """
    rep = Report(f"diamond(n={n})", meta={"n": n})
    for p in all_walks(n):
        s = p.sigma
        for i in range(1, n):
            l, mid = s[i - 1], s[i]
            if s[i + 1] != l or abs(l) <= 1:
                continue
            toward = l - 1 if l > 0 else l + 1
            away = l + 1 if l > 0 else l - 1
            if mid != toward:
                continue
            q = _substitute(p, i, (away,))
            lhs = gen_u(n, i) * path_word(p)
            rhs = path_word(q)
            rep.add(f"notch i={i} [{p}]", f"U{i} w({p})", f"w({q})", phi_equal(lhs, rhs))
    for p in all_walks(n):
        s = p.sigma
        for l in range(0, (n - 3) // 2 + 1):
            seg = (0,) + (-1, -2) * l + (-1, 0, 1)
            for start in range(0, n + 2 - len(seg)):
                if s[start:start + len(seg)] != seg:
                    continue
                i = start + len(seg) - 2  # position of the final 0
                repl = (0,) + (1, 2) * l + (1, 2, 1)
                q = _substitute(p, start, repl)
                lhs = gen_u(n, i) * path_word(p)
                rhs = path_word(q)
                rep.add(f"zigzag i={i},l={l} [{p}]", f"U{i} w({p})", f"w({q})",
                        phi_equal(lhs, rhs))
    for p in all_walks(n):
        s = p.sigma
        for l in range(0, (n - 3) // 2 + 1):
            seg = (0, 1) + (2, 3) * l + (2, 1)
            for start in range(0, n + 2 - len(seg)):
                if s[start:start + len(seg)] != seg:
                    continue
                i = start + 1  # position of the leading 1
                repl = (0, -1) + (0, -1) * l + (0, 1)
                q = _substitute(p, start, repl)
                lhs = gen_u(n, i) * path_word(p)
                rhs = path_word(q)
                rep.add(f"ridge i={i},l={l} [{p}]", f"U{i} w({p})", f"w({q})",
                        phi_equal(lhs, rhs))
    return rep
