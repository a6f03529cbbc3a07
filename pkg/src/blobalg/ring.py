"""Exact arithmetic for the coefficient ring Z[g, de][q, q^-1].

An element is a finite integer combination of monomials q^a * g^b * de^c,
where the q-exponent a may be negative while b and c are nonnegative.
The three symbols are the scalars produced by diagram reduction:

    q + q^-1   value of an undecorated closed loop (the quantum integer [2])
    g          value of a blob-decorated closed loop
    de         value extracted when a second blob lands on one line

Elements are immutable and hashable; all arithmetic returns new values, so
they may be shared freely between threads.

Canonical string form: terms sorted by (q-exp, g-exp, de-exp), factors
written as ``g``, ``de``, ``q`` with ``^`` exponents, e.g. ``"q^-1 + q"``,
``"g*q^2"``, ``"2*de"``.  :func:`parse_scalar` reads the same grammar back.
"""

from __future__ import annotations

from typing import Dict, Tuple

Monomial = Tuple[int, int, int]  # (q-exponent, g-exponent, de-exponent)


class RingElem:
    """A sparse Laurent polynomial in q with polynomial g, de parts."""

    __slots__ = ("_terms", "_key")

    def __init__(self, terms: Dict[Monomial, int] | None = None):
        clean: Dict[Monomial, int] = {}
        if terms:
            for (a, b, c), coeff in terms.items():
                if b < 0 or c < 0:
                    raise ValueError("g and de exponents must be nonnegative")
                coeff = int(coeff)
                if coeff:
                    clean[(int(a), int(b), int(c))] = coeff
        self._terms = clean
        self._key = tuple(sorted(clean.items()))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "RingElem":
        return cls()

    @classmethod
    def one(cls) -> "RingElem":
        return cls({(0, 0, 0): 1})

    @classmethod
    def integer(cls, k: int) -> "RingElem":
        return cls({(0, 0, 0): k})

    @classmethod
    def q_power(cls, a: int = 1) -> "RingElem":
        return cls({(a, 0, 0): 1})

    @classmethod
    def gamma(cls) -> "RingElem":
        return cls({(0, 1, 0): 1})

    @classmethod
    def delta_e(cls) -> "RingElem":
        return cls({(0, 0, 1): 1})

    @classmethod
    def loop(cls) -> "RingElem":
        """The undecorated-loop scalar q + q^-1."""
        return cls({(1, 0, 0): 1, (-1, 0, 0): 1})

    # -- structure ---------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, 0, 0): 1}

    def total_degree(self) -> int:
        """Crude degree bound |a| + b + c over the terms (0 for 0)."""
        if not self._terms:
            return 0
        return max(abs(a) + b + c for (a, b, c) in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElem):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "RingElem") -> "RingElem":
        if not isinstance(other, RingElem):
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            new = terms.get(mono, 0) + coeff
            if new:
                terms[mono] = new
            else:
                terms.pop(mono, None)
        return RingElem(terms)

    def __neg__(self) -> "RingElem":
        return RingElem({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "RingElem") -> "RingElem":
        return self + (-other)

    def __mul__(self, other: "RingElem") -> "RingElem":
        if not isinstance(other, RingElem):
            return NotImplemented
        terms: Dict[Monomial, int] = {}
        for (a1, b1, c1), k1 in self._terms.items():
            for (a2, b2, c2), k2 in other._terms.items():
                mono = (a1 + a2, b1 + b2, c1 + c2)
                new = terms.get(mono, 0) + k1 * k2
                if new:
                    terms[mono] = new
                else:
                    terms.pop(mono, None)
        return RingElem(terms)

    def __pow__(self, exponent: int) -> "RingElem":
        if exponent < 0:
            raise ValueError("only nonnegative powers are defined")
        result = RingElem.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- specialization ----------------------------------------------------

    def specialize(self, q0: int, g0: int, d0: int, p: int) -> int:
        """Evaluate at q=q0, g=g0, de=d0 in the prime field F_p.

        q0 must be invertible mod p since negative q-exponents occur.
        """
        if q0 % p == 0:
            raise ValueError("q must specialize to an invertible element")
        total = 0
        for (a, b, c), coeff in self._terms.items():
            val = coeff * pow(q0, a, p)
            if b:
                val *= pow(g0, b, p)
            if c:
                val *= pow(d0, c, p)
            total += val
        return total % p

    # -- text form ---------------------------------------------------------

    @staticmethod
    def _factor_str(mono: Monomial, coeff: int) -> str:
        a, b, c = mono
        factors = []
        if b:
            factors.append("g" if b == 1 else f"g^{b}")
        if c:
            factors.append("de" if c == 1 else f"de^{c}")
        if a:
            factors.append("q" if a == 1 else f"q^{a}")
        mag = abs(coeff)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        return "*".join(factors)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (mono, coeff) in enumerate(self._key):
            body = self._factor_str(mono, coeff)
            if i == 0:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append((" + " if coeff > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"RingElem({str(self)!r})"


def parse_scalar(text: str) -> RingElem:
    """Parse the canonical string form back into an element.

    Grammar: sum of terms joined by + and -, each term a * product of an
    optional integer and symbol factors q, g, de with optional ^exponent
    (negative allowed on q only).
    """
    s = text.strip()
    if not s:
        raise ValueError("empty scalar")
    if s == "0":
        return RingElem.zero()
    # split into signed terms at top level
    out = RingElem.zero()
    i = 0
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = 1
    start = i
    pieces = []
    while i <= len(s):
        prev = s[start:i].rstrip()[-1:] if i > start else ""
        if i == len(s) or (s[i] in "+-" and prev != "^"):
            pieces.append((sign, s[start:i].strip()))
            if i < len(s):
                sign = -1 if s[i] == "-" else 1
                start = i + 1
            i += 1
        else:
            i += 1
    for sgn, piece in pieces:
        if not piece:
            raise ValueError(f"malformed scalar {text!r}")
        coeff = sgn
        a = b = c = 0
        for factor in piece.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"malformed scalar {text!r}")
            if factor.lstrip("-").isdigit():
                coeff *= int(factor)
                continue
            if "^" in factor:
                sym, _, exp_s = factor.partition("^")
                exp = int(exp_s)
            else:
                sym, exp = factor, 1
            if sym == "q":
                a += exp
            elif sym == "g":
                if exp < 0:
                    raise ValueError("g exponent must be nonnegative")
                b += exp
            elif sym == "de":
                if exp < 0:
                    raise ValueError("de exponent must be nonnegative")
                c += exp
            else:
                raise ValueError(f"unknown symbol {sym!r} in scalar {text!r}")
        out = out + RingElem({(a, b, c): coeff})
    return out


ZERO = RingElem.zero()
ONE = RingElem.one()
GAMMA = RingElem.gamma()
DELTA_E = RingElem.delta_e()
LOOP = RingElem.loop()
