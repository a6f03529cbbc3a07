"""Blob diagrams and their exact composition.

A blob diagram on n strands is a planar perfect matching of 2n boundary
points, some arcs carrying a blob.  Boundary numbering runs clockwise:
top edge left-to-right is 1..n, bottom edge right-to-left is n+1..2n, so
the western edge of the frame is the gap between point 2n and point 1.
Under this convention:

  * planarity      = the pairing is non-crossing in the circular order,
  * blob-eligible  = the arc is west-exposed, i.e. not nested under any
    other arc (it can be slid over to touch the western edge).

Composition stacks d1 on top of d2 and traces strands through the
interface.  Every closed loop and every excess blob is converted to a
scalar in Z[g, de][q, q^-1]:

    undecorated loop        ->  q + q^-1
    blob-decorated loop     ->  g      (after removing excess blobs)
    k blobs on one strand   ->  de^(k-1), one blob kept

so a product of two diagrams is always scalar * diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

from .ring import RingElem

Arc = Tuple[int, int]


@dataclass(frozen=True)
class BlobDiagram:
    n: int
    pairs: Tuple[Arc, ...]
    blobs: FrozenSet[Arc]

    def sort_key(self):
        return (self.pairs, tuple(sorted(self.blobs)))

    def __str__(self) -> str:
        inner = ", ".join(
            f"({i},{j})" + ("*" if (i, j) in self.blobs else "") for i, j in self.pairs
        )
        return f"<{self.n}: {inner}>"


def make_diagram(n: int, pairs: Sequence[Sequence[int]], blobs: Sequence[Sequence[int]] = ()) -> BlobDiagram:
    """Normalize, validate and freeze a diagram."""
    norm = tuple(sorted((min(i, j), max(i, j)) for i, j in pairs))
    blob_set = frozenset((min(i, j), max(i, j)) for i, j in blobs)
    d = BlobDiagram(n, norm, blob_set)
    validate(d)
    return d


def validate(d: BlobDiagram) -> None:
    """Raise ValueError unless d satisfies all diagram invariants."""
    points = [p for arc in d.pairs for p in arc]
    if sorted(points) != list(range(1, 2 * d.n + 1)):
        raise ValueError("pairs are not a perfect matching of 1..2n")
    for idx, (i, j) in enumerate(d.pairs):
        for k, l in d.pairs[idx + 1:]:
            if i < k < j < l or k < i < l < j:
                raise ValueError(f"arcs ({i},{j}) and ({k},{l}) cross")
    for arc in d.blobs:
        if arc not in d.pairs:
            raise ValueError(f"blob on missing arc {arc}")
        if not west_exposed(d, arc):
            raise ValueError(f"blob on nested arc {arc}")


def west_exposed(d: BlobDiagram, arc: Arc) -> bool:
    """True when no other arc nests over this one toward the west gap."""
    i, j = arc
    return not any(k < i and j < l for k, l in d.pairs if (k, l) != (i, j))


def identity_diagram(n: int) -> BlobDiagram:
    return make_diagram(n, [(i, 2 * n + 1 - i) for i in range(1, n + 1)])


def u_diagram(n: int, i: int) -> BlobDiagram:
    """The diagram of U_i: cap joining top i, i+1 over the matching cup."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"U{i} out of range for n={n}")
    pairs = [(i, i + 1), (2 * n - i, 2 * n + 1 - i)]
    pairs += [(k, 2 * n + 1 - k) for k in range(1, n + 1) if k not in (i, i + 1)]
    return make_diagram(n, pairs)


def e_diagram(n: int) -> BlobDiagram:
    """The diagram of e: identity with a blob on the leftmost line."""
    if n < 1:
        raise ValueError("e needs at least one strand")
    d = identity_diagram(n)
    return BlobDiagram(n, d.pairs, frozenset({(1, 2 * n)}))


def through_count(d: BlobDiagram) -> int:
    """Number of lines joining the top boundary to the bottom boundary."""
    return sum(1 for i, j in d.pairs if i <= d.n < j)


def flip(d: BlobDiagram) -> BlobDiagram:
    """Top-bottom mirror; the diagram form of the opposite map."""
    remap = lambda x: 2 * d.n + 1 - x
    pairs = [(remap(i), remap(j)) for i, j in d.pairs]
    blobs = [(remap(i), remap(j)) for i, j in d.blobs]
    return make_diagram(d.n, pairs, blobs)


@dataclass(frozen=True)
class ScaledDiagram:
    coeff: RingElem
    diagram: BlobDiagram

    def __str__(self) -> str:
        return f"({self.coeff}) {self.diagram}"


def _mate(d: BlobDiagram) -> List[int]:
    mate = [0] * (2 * d.n + 1)
    for i, j in d.pairs:
        mate[i] = j
        mate[j] = i
    return mate


def compose(d1: BlobDiagram, d2: BlobDiagram) -> ScaledDiagram:
    """Stack d1 on top of d2 and reduce to scalar * diagram.

    d1's bottom points are glued to d2's top points position by position
    (d1 point 2n+1-j meets d2 point j).  Strands are traced through the
    interface; open strands become result arcs, closed strands become
    scalar factors as described in the module docstring.
    """
    if d1.n != d2.n:
        raise ValueError(f"strand counts differ: {d1.n} vs {d2.n}")
    n = d1.n
    mate1, mate2 = _mate(d1), _mate(d2)
    blob1 = {arc: 1 for arc in d1.blobs}
    blob2 = {arc: 1 for arc in d2.blobs}

    def arc_blob(which: int, a: int, b: int) -> int:
        arc = (a, b) if a < b else (b, a)
        return (blob1 if which == 1 else blob2).get(arc, 0)

    # external points: in d1 the top Row 1..n, in d2 the bottom row n+1..2n;
    # both keep their labels in the result.
    seen_ext = set()
    seen_mid = set()  # interface positions 1..n traversed
    loops_plain = 0
    loops_blobbed = 0
    excess_blobs = 0
    new_pairs: List[Arc] = []
    new_blobs: List[Arc] = []

    def trace(which: int, start: int) -> Tuple[int, int, int]:
        """Follow the strand from an external point; return (which, end, blobs)."""
        blobs = 0
        w, pt = which, start
        while True:
            other = (mate1 if w == 1 else mate2)[pt]
            blobs += arc_blob(w, pt, other)
            if w == 1:
                if other <= n:  # d1 top: external
                    return 1, other, blobs
                mid = 2 * n + 1 - other
                seen_mid.add(mid)
                w, pt = 2, mid
            else:
                if other > n:  # d2 bottom: external
                    return 2, other, blobs
                seen_mid.add(other)
                w, pt = 1, 2 * n + 1 - other

    for which, start in [(1, i) for i in range(1, n + 1)] + [(2, j) for j in range(n + 1, 2 * n + 1)]:
        if (which, start) in seen_ext:
            continue
        seen_ext.add((which, start))
        end_which, end, blobs = trace(which, start)
        seen_ext.add((end_which, end))
        a, b = min(start, end), max(start, end)
        new_pairs.append((a, b))
        if blobs:
            excess_blobs += blobs - 1
            new_blobs.append((a, b))

    # remaining interface positions form closed loops
    for mid in range(1, n + 1):
        if mid in seen_mid:
            continue
        blobs = 0
        w, pt = 2, mid
        while True:
            other = (mate1 if w == 1 else mate2)[pt]
            blobs += arc_blob(w, pt, other)
            nxt = other if w == 2 else 2 * n + 1 - other
            seen_mid.add(nxt)
            w = 3 - w
            pt = nxt if w == 2 else 2 * n + 1 - nxt
            if w == 2 and pt == mid:
                break
        if blobs:
            excess_blobs += blobs - 1
            loops_blobbed += 1
        else:
            loops_plain += 1

    scalar = RingElem.one()
    if loops_plain:
        scalar = scalar * RingElem.loop() ** loops_plain
    if loops_blobbed:
        scalar = scalar * RingElem.gamma() ** loops_blobbed
    if excess_blobs:
        scalar = scalar * RingElem.delta_e() ** excess_blobs
    result = make_diagram(n, new_pairs, new_blobs)
    return ScaledDiagram(scalar, result)


def compose_scaled(s1: ScaledDiagram, s2: ScaledDiagram) -> ScaledDiagram:
    inner = compose(s1.diagram, s2.diagram)
    return ScaledDiagram(s1.coeff * s2.coeff * inner.coeff, inner.diagram)


def _noncross_matchings(points: Tuple[int, ...]) -> Iterator[Tuple[Arc, ...]]:
    """All non-crossing perfect matchings of an even point list (ascending)."""
    if not points:
        yield ()
        return
    first = points[0]
    for k in range(1, len(points), 2):
        partner = points[k]
        inside = points[1:k]
        outside = points[k + 1:]
        for m_in in _noncross_matchings(inside):
            for m_out in _noncross_matchings(outside):
                yield ((first, partner),) + m_in + m_out


@lru_cache(maxsize=32)
def all_diagrams(n: int) -> Tuple[BlobDiagram, ...]:
    """Every blob diagram on n strands, in a fixed sorted order.

    Non-crossing matchings are enumerated by the Catalan recursion, then
    each west-exposed subset of arcs is decorated.  The total count is the
    central binomial C(2n, n).
    """
    out = []
    for matching in _noncross_matchings(tuple(range(1, 2 * n + 1))):
        base = make_diagram(n, matching)
        exposed = [arc for arc in base.pairs if west_exposed(base, arc)]
        for mask in range(1 << len(exposed)):
            blobs = frozenset(exposed[b] for b in range(len(exposed)) if mask >> b & 1)
            out.append(BlobDiagram(n, base.pairs, blobs))
    out.sort(key=BlobDiagram.sort_key)
    if len(out) != comb(2 * n, n):
        raise AssertionError(f"enumeration produced {len(out)} diagrams at n={n}")
    return tuple(out)


# -- formal linear combinations ---------------------------------------------


class LinComb:
    """A formal sum of blob diagrams with RingElem coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Dict[BlobDiagram, RingElem] | None = None):
        self.n = n
        clean = {}
        if terms:
            for diag, coeff in terms.items():
                if diag.n != n:
                    raise ValueError("mixed strand counts in linear combination")
                if coeff:
                    clean[diag] = coeff
        self._terms = clean

    @classmethod
    def of(cls, scaled: ScaledDiagram) -> "LinComb":
        return cls(scaled.diagram.n, {scaled.diagram: scaled.coeff})

    def items(self) -> List[Tuple[BlobDiagram, RingElem]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __add__(self, other: "LinComb") -> "LinComb":
        if self.n != other.n:
            raise ValueError("mixed strand counts")
        terms = dict(self._terms)
        for diag, coeff in other._terms.items():
            new = terms.get(diag, RingElem.zero()) + coeff
            if new:
                terms[diag] = new
            else:
                terms.pop(diag, None)
        return LinComb(self.n, terms)

    def scale(self, factor: RingElem) -> "LinComb":
        return LinComb(self.n, {d: factor * c for d, c in self._terms.items()})

    def __mul__(self, other: "LinComb") -> "LinComb":
        if self.n != other.n:
            raise ValueError("mixed strand counts")
        total = LinComb(self.n)
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                prod = compose(d1, d2)
                total = total + LinComb(self.n, {prod.diagram: c1 * c2 * prod.coeff})
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c}) {d}" for d, c in self.items())


# -- JSON forms --------------------------------------------------------------


def diagram_to_dict(d: BlobDiagram) -> dict:
    return {
        "n": d.n,
        "pairs": [list(arc) for arc in d.pairs],
        "blobs": [list(arc) for arc in sorted(d.blobs)],
    }


def scaled_to_dict(s: ScaledDiagram) -> dict:
    out = diagram_to_dict(s.diagram)
    out["coeff"] = str(s.coeff)
    return out


def diagram_from_dict(data: dict) -> BlobDiagram:
    return make_diagram(int(data["n"]), data["pairs"], data.get("blobs", ()))
