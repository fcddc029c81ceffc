"""Exact arithmetic in the free associative algebra on set-indexed generators.

Generators come in two families over a universe {1..n}: z(A,i) with i not in
A, and u(A) with A nonempty.  u of the empty set is the algebra unit and is
represented by the empty word, never by a symbol.  Every generator has degree
1, so the relation families built on top of this module are homogeneous and
the quotient algebras are graded.

Coefficients are exact rationals; polynomials are canonical term maps, so
equality is literal equality of the maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Mapping

from .complexes import NodeSet

#: refuse to enumerate more words than this (guards |alphabet|**d blowups)
MONOMIAL_CAP = 10**7

Rational = Fraction | int


@dataclass(frozen=True)
class Symbol:
    """A degree-1 generator: kind 'z' carries (A, i) with i not in A, kind 'u'
    carries a nonempty A."""

    kind: str
    a: NodeSet
    i: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "z":
            if self.i is None:
                raise ValueError("z generator needs an index i")
            if not 1 <= self.i <= self.a.n:
                raise ValueError(f"index {self.i} outside 1..{self.a.n}")
            if self.i in self.a:
                raise ValueError(f"z({self.a},{self.i}) requires {self.i} not in {self.a}")
        elif self.kind == "u":
            if self.i is not None:
                raise ValueError("u generator takes no index")
            if self.a.is_empty:
                raise ValueError("u({}) is the unit, not a generator")
        else:
            raise ValueError(f"unknown generator kind {self.kind!r}")

    @property
    def n(self) -> int:
        return self.a.n

    def __str__(self) -> str:
        if self.kind == "z":
            return f"z({self.a},{self.i})"
        return f"u({self.a})"


def z(a: NodeSet, i: int) -> Symbol:
    return Symbol("z", a, i)


def u(a: NodeSet) -> Symbol:
    return Symbol("u", a)


def symbol_key(s: Symbol) -> tuple:
    """Canonical total order: all z before all u, then by (|A|, elements, i)."""
    if s.kind == "z":
        return (0, s.a.size, s.a.elements, s.i)
    return (1, s.a.size, s.a.elements, 0)


def reversed_symbol_key(s: Symbol) -> tuple:
    """An alternative total order (the canonical one reversed); results of the
    quotient engine must not depend on which order is used."""
    k = symbol_key(s)
    return (-k[0], -k[1], tuple(-e for e in k[2]), -k[3])


#: a word in the generators; the empty tuple is the unit monomial
Word = tuple[Symbol, ...]


def word_key(w: Word, key: Callable[[Symbol], tuple] = symbol_key) -> tuple:
    """Degree-first, then lexicographic by the symbol order."""
    return (len(w), tuple(key(s) for s in w))


class Poly:
    """A polynomial of the free algebra: a canonical map word -> coefficient."""

    __slots__ = ("_terms", "_n")

    def __init__(self, terms: Mapping[Word, Rational] | None = None):
        data: dict[Word, Fraction] = {}
        n = None
        for w, c in (terms or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            for s in w:
                if n is None:
                    n = s.n
                elif s.n != n:
                    raise ValueError(f"mixed universes: n={n} vs n={s.n}")
            data[w] = c
        self._terms = data
        self._n = n

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls({(): Fraction(1)})

    @classmethod
    def from_symbol(cls, s: Symbol) -> "Poly":
        return cls({(s,): Fraction(1)})

    @classmethod
    def term(cls, coeff: Rational, word: Word) -> "Poly":
        return cls({tuple(word): Fraction(coeff)})

    @property
    def terms(self) -> dict[Word, Fraction]:
        return dict(self._terms)

    @property
    def universe(self) -> int | None:
        """Common n of all symbols, or None for scalar polynomials."""
        return self._n

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def _check_universe(self, other: "Poly") -> None:
        if self._n is not None and other._n is not None and self._n != other._n:
            raise ValueError(f"mixed universes: n={self._n} vs n={other._n}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_universe(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            acc = out.get(w, 0) + c
            if acc:
                out[w] = acc
            else:
                out.pop(w, None)
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly | Rational") -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_universe(other)
        out: dict[Word, Fraction] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                acc = out.get(w, 0) + c1 * c2
                if acc:
                    out[w] = acc
                else:
                    out.pop(w, None)
        return Poly(out)

    def __rmul__(self, other: Rational) -> "Poly":
        return self.scale(other)

    def scale(self, c: Rational) -> "Poly":
        c = Fraction(c)
        return Poly({w: c * x for w, x in self._terms.items()})

    def degrees(self) -> list[int]:
        return sorted({len(w) for w in self._terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int | None:
        """Common degree of a homogeneous polynomial; None for zero."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"not homogeneous: degrees {degs}")
        return degs[0]

    def graded_component(self, d: int) -> "Poly":
        if d < 0:
            raise ValueError("degree must be >= 0")
        return Poly({w: c for w, c in self._terms.items() if len(w) == d})

    def symbols(self) -> set[Symbol]:
        return {s for w in self._terms for s in w}

    def sorted_terms(self) -> list[tuple[Word, Fraction]]:
        return sorted(self._terms.items(), key=lambda wc: word_key(wc[0]))

    def __str__(self) -> str:
        return poly_text(self)

    def __repr__(self) -> str:
        return f"Poly({poly_text(self)})"


def commutator(p: Poly, q: Poly) -> Poly:
    """[p, q] = pq - qp."""
    return p * q - q * p


def substitute(p: Poly, images: Mapping[Symbol, Poly]) -> Poly:
    """Apply the algebra homomorphism sending each symbol to its image."""
    out = Poly.zero()
    for w, c in p._terms.items():
        acc = Poly({(): c})
        for s in w:
            img = images.get(s)
            if img is None:
                raise ValueError(f"no image for symbol {s}")
            acc = acc * img
        out = out + acc
    return out


def enumerate_monomials(alphabet: Iterable[Symbol], d: int,
                        key: Callable[[Symbol], tuple] = symbol_key) -> list[Word]:
    """All words of length d over the alphabet, in canonical order."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    letters = sorted(alphabet, key=key)
    if not letters:
        raise ValueError("alphabet must be nonempty")
    if len(letters) ** d > MONOMIAL_CAP:
        raise ValueError(
            f"{len(letters)}^{d} words exceed the monomial cap {MONOMIAL_CAP}")
    return [tuple(w) for w in product(letters, repeat=d)]


# ---------------------------------------------------------------------------
# canonical text form (stable: used by the CLI and frozen in golden tests)
# ---------------------------------------------------------------------------

def word_text(w: Word) -> str:
    if not w:
        return "1"
    return "*".join(str(s) for s in w)


def _coeff_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def poly_text(p: Poly) -> str:
    """Terms in ascending canonical monomial order, signs folded into ' + '
    / ' - ' separators, unit coefficients omitted before nonunit words."""
    if not p:
        return "0"
    parts = []
    for k, (w, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        mag = -c if neg else c
        if not w:
            body = _coeff_text(mag)
        elif mag == 1:
            body = word_text(w)
        else:
            body = f"{_coeff_text(mag)}*{word_text(w)}"
        if k == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)
