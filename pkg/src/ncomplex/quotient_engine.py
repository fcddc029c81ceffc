"""Degree-truncated two-sided ideal computation over exact rationals.

For a presentation with homogeneous relations, the ideal it generates is
graded, and its degree-e slice is spanned by the products m1 * g * m2 where g
is a relation and deg m1 + deg g + deg m2 = e.  This module materializes those
spanning rows degree by degree as sparse rational vectors over the canonical
word list, keeps them in triangular (distinct leading column) form, and
answers membership, rank and quotient-basis queries from that structure.

Normal forms are canonical: a reduced remainder is supported only on
non-pivot columns, and the projection along the row space onto those
coordinates does not depend on how the triangular basis was built.  The
pivot-column set itself is basis-independent too, so graded dimensions and
quotient bases are well-defined, and repeated runs are byte-identical.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable

from .free_algebra import MONOMIAL_CAP, Poly, Symbol, Word, symbol_key
from .presentations import Presentation

#: refuse slices whose spanning rows would hold more nonzeros than this
MATRIX_ENTRY_CAP = 10**7

Vector = dict[int, Fraction]


class Echelon:
    """Sparse row store in triangular form: one row per pivot column, each
    row's pivot being its largest column, scaled so the pivot entry is 1."""

    __slots__ = ("pivots", "provenance")

    def __init__(self, track_provenance: bool = False):
        self.pivots: dict[int, Vector] = {}
        # pivot column -> list of (coeff, tag) combinations of inserted rows
        self.provenance: dict[int, list] | None = {} if track_provenance else None

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: Vector) -> Vector:
        """Normal form of vec modulo the stored row space (vec is not
        mutated).  Returns a vector supported off the pivot columns."""
        v = dict(vec)
        heap = [-c for c in v]
        heapq.heapify(heap)
        while heap:
            col = -heapq.heappop(heap)
            if col not in v:
                continue
            row = self.pivots.get(col)
            if row is None:
                continue
            coef = v.pop(col)
            for c2, x in row.items():
                if c2 == col:
                    continue
                acc = v.get(c2, 0) - coef * x
                if acc:
                    if c2 not in v:
                        heapq.heappush(heap, -c2)
                    v[c2] = acc
                else:
                    v.pop(c2, None)
        return v

    def _reduce_traced(self, vec: Vector, tag) -> tuple[Vector, list]:
        v = dict(vec)
        combo = [(Fraction(1), tag)]
        heap = [-c for c in v]
        heapq.heapify(heap)
        while heap:
            col = -heapq.heappop(heap)
            if col not in v:
                continue
            row = self.pivots.get(col)
            if row is None:
                continue
            coef = v.pop(col)
            for prev_coef, prev_tag in self.provenance[col]:
                combo.append((-coef * prev_coef, prev_tag))
            for c2, x in row.items():
                if c2 == col:
                    continue
                acc = v.get(c2, 0) - coef * x
                if acc:
                    if c2 not in v:
                        heapq.heappush(heap, -c2)
                    v[c2] = acc
                else:
                    v.pop(c2, None)
        return v, combo

    def insert(self, vec: Vector, tag=None) -> bool:
        """Reduce and, if independent, store as a new pivot row.  Returns
        whether the rank grew."""
        if self.provenance is None:
            r = self.reduce(vec)
            combo = None
        else:
            r, combo = self._reduce_traced(vec, tag)
        if not r:
            return False
        lead = max(r)
        inv = 1 / r[lead]
        self.pivots[lead] = {c: x * inv for c, x in r.items()}
        if self.provenance is not None:
            self.provenance[lead] = [(co * inv, t) for co, t in combo]
        return True


def _word_index(word: Word, sym_index: dict[Symbol, int], k: int) -> int:
    idx = 0
    for s in word:
        pos = sym_index.get(s)
        if pos is None:
            raise ValueError(f"symbol {s} is not in the presentation's alphabet")
        idx = idx * k + pos
    return idx


def _index_word(idx: int, letters: list[Symbol], degree: int) -> Word:
    k = len(letters)
    out = []
    for _ in range(degree):
        idx, pos = divmod(idx, k)
        out.append(letters[pos])
    return tuple(reversed(out))


@dataclass(frozen=True)
class SliceStats:
    rows_generated: int
    rank: int


class TruncatedIdealBasis:
    """Echelonized spanning sets of the ideal's degree slices up to a bound.

    The monomial order is degree-first, then lexicographic by ``key`` on the
    symbols; pass a different ``key`` to re-run under another order (results
    of rank, dimension and membership must agree).
    """

    def __init__(self, presentation: Presentation, max_degree: int,
                 key: Callable[[Symbol], tuple] = symbol_key,
                 track_provenance: bool = False):
        if max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        self.presentation = presentation
        self.max_degree = max_degree
        self.key = key
        self.letters = sorted(presentation.alphabet, key=key)
        self.k = len(self.letters)
        if self.k ** max_degree > MONOMIAL_CAP:
            raise ValueError(
                f"{self.k}^{max_degree} words exceed the monomial cap {MONOMIAL_CAP}")
        self._sym_index = {s: p for p, s in enumerate(self.letters)}
        self._rel_coords: list[tuple[int, list[tuple[Word, Fraction]]]] = []
        for r in presentation.relations:
            deg = r.degree()
            if deg is None or deg < 1:
                raise ValueError("relations must be nonzero of degree >= 1")
            self._rel_coords.append((deg, r.sorted_terms()))
        # processing degree-1 relations first lets single-word kill rows act
        # as cheap pivots before the wide quadratic rows arrive
        self._rel_order = sorted(range(len(self._rel_coords)),
                                 key=lambda t: (self._rel_coords[t][0], t))
        self.slices: list[Echelon] = []
        self.stats: list[SliceStats] = []
        for e in range(max_degree + 1):
            self.slices.append(self._build_slice(e, track_provenance))

    def _words(self, degree: int) -> list[Word]:
        if self.k ** degree > MATRIX_ENTRY_CAP:
            raise ValueError(
                f"{self.k}^{degree} words exceed the cap {MATRIX_ENTRY_CAP}")
        return [tuple(w) for w in product(self.letters, repeat=degree)]

    def _build_slice(self, e: int, track_provenance: bool) -> Echelon:
        ech = Echelon(track_provenance)
        entries = 0
        for t in self._rel_order:
            e0, coords = self._rel_coords[t]
            if e0 > e:
                continue
            free = e - e0
            entries += len(coords) * (free + 1) * self.k ** free
            if entries > MATRIX_ENTRY_CAP:
                raise ValueError(
                    f"degree-{e} slice would exceed {MATRIX_ENTRY_CAP} matrix entries")
        rows = 0
        for t in self._rel_order:
            e0, coords = self._rel_coords[t]
            if e0 > e:
                continue
            for a in range(e - e0 + 1):
                b = e - e0 - a
                lefts, rights = self._words(a), self._words(b)
                for m1 in lefts:
                    for m2 in rights:
                        vec = {}
                        for w, c in coords:
                            col = _word_index(m1 + w + m2, self._sym_index, self.k)
                            vec[col] = vec.get(col, 0) + c
                        vec = {c: x for c, x in vec.items() if x}
                        rows += 1
                        ech.insert(vec, tag=(m1, t, m2))
        self.stats.append(SliceStats(rows_generated=rows, rank=ech.rank))
        return ech

    def _coords(self, q: Poly) -> tuple[int, Vector]:
        deg = q.degree()
        if deg is None:
            return 0, {}
        if deg > self.max_degree:
            raise ValueError(f"degree {deg} exceeds max_degree {self.max_degree}")
        vec = {_word_index(w, self._sym_index, self.k): c for w, c in q.terms.items()}
        return deg, vec

    def contains(self, q: Poly) -> bool:
        """Whether the homogeneous q lies in the ideal's slice at its degree."""
        deg, vec = self._coords(q)
        if not vec:
            return True
        return not self.slices[deg].reduce(vec)

    def reduce(self, q: Poly) -> Poly:
        """Canonical remainder of q modulo the slice at its degree."""
        deg, vec = self._coords(q)
        if not vec:
            return Poly.zero()
        rem = self.slices[deg].reduce(vec)
        return Poly({_index_word(c, self.letters, deg): x for c, x in rem.items()})

    def rank(self, e: int) -> int:
        return self.slices[e].rank

    def dimension(self, e: int) -> int:
        """Quotient dimension at degree e: words minus ideal rank."""
        return self.k ** e - self.slices[e].rank

    def dimensions(self) -> list[int]:
        return [self.dimension(e) for e in range(self.max_degree + 1)]

    def quotient_basis(self, e: int) -> list[Word]:
        """The non-pivot words at degree e, in canonical order."""
        piv = self.slices[e].pivots
        return [_index_word(i, self.letters, e)
                for i in range(self.k ** e) if i not in piv]


def truncated_ideal_basis(p: Presentation, d: int,
                          key: Callable[[Symbol], tuple] = symbol_key,
                          track_provenance: bool = False) -> TruncatedIdealBasis:
    return TruncatedIdealBasis(p, d, key=key, track_provenance=track_provenance)


def ideal_contains(b: TruncatedIdealBasis, q: Poly) -> bool:
    return b.contains(q)


def graded_dimension(p: Presentation, d: int,
                     key: Callable[[Symbol], tuple] = symbol_key) -> list[int]:
    """Quotient dimensions at degrees 0..d."""
    return TruncatedIdealBasis(p, d, key=key).dimensions()


def quotient_basis(p: Presentation, d: int,
                   key: Callable[[Symbol], tuple] = symbol_key) -> list[list[Word]]:
    basis = TruncatedIdealBasis(p, d, key=key)
    return [basis.quotient_basis(e) for e in range(d + 1)]


def dimension_table(p: Presentation, d: int) -> dict:
    """The JSON dimension-table object for a presentation."""
    return {"schema": 1, "label": p.label, "dims": graded_dimension(p, d)}


def spanning_row_poly(p: Presentation, tag: tuple[Word, int, Word]) -> Poly:
    """Rebuild the polynomial m1 * g * m2 named by a provenance tag."""
    m1, t, m2 = tag
    return Poly.term(1, m1) * p.relations[t] * Poly.term(1, m2)
