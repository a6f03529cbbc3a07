"""Cross-check diagram composition against a union-find strand tracer.

The production composer follows strands point to point.  The oracle here
shares no code with it: it glues the two diagrams' boundary points with a
union-find, classifies every class as a through strand or a closed loop,
and tallies blobs per class.  Both must agree on every product.
"""

import random

from blobalg.diagrams import ScaledDiagram, all_diagrams, compose
from blobalg.ring import RingElem


class UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)


def compose_by_union_find(d1, d2):
    n = d1.n
    uf = UnionFind()
    for i, j in d1.pairs:
        uf.union((1, i), (1, j))
    for i, j in d2.pairs:
        uf.union((2, i), (2, j))
    for pos in range(1, n + 1):
        uf.union((1, 2 * n + 1 - pos), (2, pos))

    blobs = {}
    for which, diag in ((1, d1), (2, d2)):
        for arc in diag.blobs:
            root = uf.find((which, arc[0]))
            blobs[root] = blobs.get(root, 0) + 1

    external = {}
    for i in range(1, n + 1):
        external.setdefault(uf.find((1, i)), []).append(i)
    for j in range(n + 1, 2 * n + 1):
        external.setdefault(uf.find((2, j)), []).append(j)

    pairs, blobbed = [], []
    scalar = RingElem.one()
    for root, ends in external.items():
        assert len(ends) == 2, "a strand must join exactly two boundary points"
        arc = (min(ends), max(ends))
        pairs.append(arc)
        k = blobs.pop(root, 0)
        if k:
            blobbed.append(arc)
            scalar = scalar * RingElem.delta_e() ** (k - 1)

    # classes never meeting the boundary are loops; count them by their
    # members among the glued interface points
    loop_roots = set()
    for pos in range(1, n + 1):
        root = uf.find((2, pos))
        if root not in external:
            loop_roots.add(root)
    for root in sorted(loop_roots, key=str):
        k = blobs.pop(root, 0)
        if k:
            scalar = scalar * RingElem.gamma() * RingElem.delta_e() ** (k - 1)
        else:
            scalar = scalar * RingElem.loop()

    from blobalg.diagrams import make_diagram

    return ScaledDiagram(scalar, make_diagram(n, pairs, blobbed))


def test_oracle_agrees_exhaustively_small_n():
    for n in range(0, 4):
        basis = all_diagrams(n)
        for d1 in basis:
            for d2 in basis:
                assert compose(d1, d2) == compose_by_union_find(d1, d2)


def test_oracle_agrees_on_random_pairs():
    rng = random.Random("uf-oracle")
    for n in (4, 5, 6):
        basis = all_diagrams(n)
        for _ in range(2000):
            d1 = basis[rng.randrange(len(basis))]
            d2 = basis[rng.randrange(len(basis))]
            assert compose(d1, d2) == compose_by_union_find(d1, d2)
