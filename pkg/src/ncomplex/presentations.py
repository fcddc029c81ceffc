"""Relation builders and the three algebra presentations.

Every builder returns the homogeneous polynomial LHS - RHS of the identity it
instantiates, over z or u generators.  Subset sums are non-strict: a sum over
subsets of A includes both the empty set and A itself.

Two sign conventions are deliberate and verified by the test suite:

* u_in_z uses the exponent |A| - |D| - 1, which makes it the exact Moebius
  inverse of z_in_u (the round trip is an identity of the free algebra);
* the closing term of the graph-truncated quadratic rel_10 carries a minus
  sign, which is what makes rel_10(empty, i, j) equal the degree-two pair
  relation and makes rel_10 the image of rel_5 under killing u(S), |S| >= 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import Complex, Graph, NodeSet
from .free_algebra import Poly, Symbol, Word, symbol_key, u, z


@dataclass(frozen=True)
class Presentation:
    """An alphabet of generators plus homogeneous defining relations."""

    label: str
    alphabet: tuple[Symbol, ...]
    relations: tuple[Poly, ...]

    def __post_init__(self) -> None:
        allowed = set(self.alphabet)
        if len(allowed) != len(self.alphabet):
            raise ValueError("duplicate generator in alphabet")
        for r in self.relations:
            if not r:
                raise ValueError("zero polynomial is not a relation")
            if not r.is_homogeneous():
                raise ValueError(f"inhomogeneous relation: {r}")
            stray = r.symbols() - allowed
            if stray:
                s = sorted(stray, key=symbol_key)[0]
                raise ValueError(f"relation symbol {s} is not in the alphabet")


def _require_witnesses(a: NodeSet, i: int, j: int) -> None:
    if i == j:
        raise ValueError(f"indices must differ, got i=j={i}")
    if i in a:
        raise ValueError(f"index i={i} lies in A={a}")
    if j in a:
        raise ValueError(f"index j={j} lies in A={a}")


def rel_additive(a: NodeSet, i: int, j: int) -> Poly:
    """Degree-1 relation  z(A+i,j) + z(A,i) - z(A+j,i) - z(A,j)."""
    _require_witnesses(a, i, j)
    return (Poly.from_symbol(z(a.plus(i), j)) + Poly.from_symbol(z(a, i))
            - Poly.from_symbol(z(a.plus(j), i)) - Poly.from_symbol(z(a, j)))


def rel_multiplicative(a: NodeSet, i: int, j: int) -> Poly:
    """Degree-2 relation  z(A+i,j)z(A,i) - z(A+j,i)z(A,j)."""
    _require_witnesses(a, i, j)
    return (Poly.from_symbol(z(a.plus(i), j)) * Poly.from_symbol(z(a, i))
            - Poly.from_symbol(z(a.plus(j), i)) * Poly.from_symbol(z(a, j)))


def z_in_u(a: NodeSet, i: int) -> Poly:
    """z(A,i) written in the u basis: the sum of u(D+i) over all D inside A."""
    if i in a:
        raise ValueError(f"index i={i} lies in A={a}")
    out: dict[Word, Fraction] = {}
    for d in a.subsets():
        out[(u(d.plus(i)),)] = Fraction(1)
    return Poly(out)


def u_in_z(a: NodeSet, i: int) -> Poly:
    """u(A) written in the z generators via the index i in A:
    sum over D inside A-i of (-1)^(|A|-|D|-1) z(D,i)."""
    if i not in a:
        raise ValueError(f"index i={i} must lie in A={a}")
    rest = a.minus(i)
    out: dict[Word, Fraction] = {}
    for d in rest.subsets():
        out[(z(d, i),)] = Fraction(-1) ** (a.size - d.size - 1)
    return Poly(out)


def rel_4(a: NodeSet, i: int, j: int) -> Poly:
    """The u-form quadratic relation of the base algebra, one per (A,i,j)."""
    _require_witnesses(a, i, j)
    lhs = Poly.zero()
    rhs = Poly.zero()
    subs = a.subsets()
    for c in subs:
        uc_j = Poly.from_symbol(u(c.plus(j)))
        uc_ij = Poly.from_symbol(u(c.plus(i).plus(j)))
        for d in subs:
            ud_i = Poly.from_symbol(u(d.plus(i)))
            ud_ij = Poly.from_symbol(u(d.plus(i).plus(j)))
            lhs = lhs + (uc_j + uc_ij) * ud_i
            rhs = rhs + (ud_i + ud_ij) * uc_j
    return lhs - rhs


def rel_5(a: NodeSet, i: int, j: int) -> Poly:
    """Commutator form of rel_4; identically equal to -rel_4(A,i,j):
    sum of [u(C+i),u(D+j)] minus (sum of u(E+i+j)) * (sum of u(F+i)-u(F+j))."""
    _require_witnesses(a, i, j)
    subs = a.subsets()
    lhs = Poly.zero()
    for c in subs:
        for d in subs:
            uc = Poly.from_symbol(u(c.plus(i)))
            ud = Poly.from_symbol(u(d.plus(j)))
            lhs = lhs + uc * ud - ud * uc
    pair_sum = Poly.zero()
    diff_sum = Poly.zero()
    for e in subs:
        pair_sum = pair_sum + Poly.from_symbol(u(e.plus(i).plus(j)))
        diff_sum = diff_sum + Poly.from_symbol(u(e.plus(i))) - Poly.from_symbol(u(e.plus(j)))
    return lhs - pair_sum * diff_sum


def rel_9(ap: NodeSet, bp: NodeSet, i: int, j: int) -> Poly:
    """Double commutator sum: [u(C+i), u(D+j)] over C inside A', D inside B'."""
    if i == j:
        raise ValueError(f"indices must differ, got i=j={i}")
    if i in ap:
        raise ValueError(f"index i={i} lies in A'={ap}")
    if j in bp:
        raise ValueError(f"index j={j} lies in B'={bp}")
    out = Poly.zero()
    for c in ap.subsets():
        for d in bp.subsets():
            uc = Poly.from_symbol(u(c.plus(i)))
            ud = Poly.from_symbol(u(d.plus(j)))
            out = out + uc * ud - ud * uc
    return out


def _pair_poly(i: int, j: int, n: int, graph: Graph | None) -> Poly:
    """u({i,j}), or zero when a graph is given and (i,j) is not one of its
    edges (the build-time convention for graph presentations)."""
    if graph is not None and not graph.has_edge(i, j):
        return Poly.zero()
    return Poly.from_symbol(u(NodeSet.of((i, j), n)))


def _vertex_poly(i: int, n: int) -> Poly:
    return Poly.from_symbol(u(NodeSet.of((i,), n)))


def rel_10(a: NodeSet, i: int, j: int, graph: Graph | None = None) -> Poly:
    """The quadratic element R(A,i,j): rel_5(A,i,j) with every u(S), |S| >= 3,
    set to zero.  With a graph argument, non-edge pair generators are also
    zeroed at build time."""
    _require_witnesses(a, i, j)
    n = a.n
    ui = _vertex_poly(i, n)
    uj = _vertex_poly(j, n)
    uij = _pair_poly(i, j, n, graph)

    def com(p: Poly, q: Poly) -> Poly:
        return p * q - q * p

    out = com(ui, uj) - uij * (ui - uj)
    for k in a:
        uik = _pair_poly(i, k, n, graph)
        ujk = _pair_poly(j, k, n, graph)
        out = out + com(uik, uj) + com(ui, ujk) - uij * (uik - ujk)
        for el in a:
            out = out + com(uik, _pair_poly(j, el, n, graph))
    return out


def identity_11_residual(a: NodeSet, i: int, j: int, k: int,
                         graph: Graph | None = None) -> Poly:
    """Residual of the recursion identity relating R(A,i,j) to R(A-k,i,j);
    identically zero in the free algebra for every instance."""
    _require_witnesses(a, i, j)
    if k not in a:
        raise ValueError(f"index k={k} must lie in A={a}")
    n = a.n
    uik = _pair_poly(i, k, n, graph)
    ujk = _pair_poly(j, k, n, graph)
    ui, uj = _vertex_poly(i, n), _vertex_poly(j, n)

    def com(p: Poly, q: Poly) -> Poly:
        return p * q - q * p

    out = (rel_10(a, i, j, graph) - rel_10(a.minus(k), i, j, graph)
           - com(uik, ujk) - com(uik, uj) - com(ui, ujk)
           + _pair_poly(i, j, n, graph) * (uik - ujk))
    for el in a.minus(k):
        out = out - com(_pair_poly(i, el, n, graph), ujk)
        out = out - com(uik, _pair_poly(j, el, n, graph))
    return out


def theorem_rel_i(i: int, j: int, g: Graph) -> Poly:
    """Pair relation  [u(i),u(j)] - u(ij)(u(i)-u(j))  with non-edges zeroed."""
    n = g.n
    ui, uj = _vertex_poly(i, n), _vertex_poly(j, n)
    return ui * uj - uj * ui - _pair_poly(i, j, n, g) * (ui - uj)


def theorem_rel_ii(i: int, j: int, k: int, g: Graph) -> Poly:
    """Triple relation  [u(ik),u(jk)] + [u(ik),u(j)] + [u(i),u(jk)]
    - u(ij)(u(ik)-u(jk))  with non-edges zeroed."""
    n = g.n
    uik = _pair_poly(i, k, n, g)
    ujk = _pair_poly(j, k, n, g)
    ui, uj = _vertex_poly(i, n), _vertex_poly(j, n)

    def com(p: Poly, q: Poly) -> Poly:
        return p * q - q * p

    return (com(uik, ujk) + com(uik, uj) + com(ui, ujk)
            - _pair_poly(i, j, n, g) * (uik - ujk))


def theorem_rel_iii(i: int, j: int, k: int, el: int, g: Graph) -> Poly:
    """Disjoint-edge relation  [u(ij),u(kl)]  with non-edges zeroed."""
    p = _pair_poly(i, j, g.n, g)
    q = _pair_poly(k, el, g.n, g)
    return p * q - q * p


def theorem_relations(g: Graph) -> list[Poly]:
    """All instances of the three graph relation families, in a fixed order;
    instances that vanish identically under the non-edge convention are
    dropped."""
    out: list[Poly] = []
    n = g.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            r = theorem_rel_i(i, j, g)
            if r:
                out.append(r)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if len({i, j, k}) == 3:
                    r = theorem_rel_ii(i, j, k, g)
                    if r:
                        out.append(r)
    es = g.sorted_edges()
    for x in range(len(es)):
        for y in range(x + 1, len(es)):
            (i, j), (k, el) = es[x], es[y]
            if not {i, j} & {k, el}:
                r = theorem_rel_iii(i, j, k, el, g)
                if r:
                    out.append(r)
    return out


def _ordered_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def _instances(n: int) -> list[tuple[NodeSet, int, int]]:
    """All (A, i, j) with i != j and both outside A, in a fixed order."""
    out = []
    for i, j in _ordered_pairs(n):
        rest = NodeSet.full(n).minus(i).minus(j)
        for a in rest.subsets():
            out.append((a, i, j))
    return out


def all_u_symbols(n: int) -> list[Symbol]:
    return [u(s) for s in NodeSet.full(n).subsets() if not s.is_empty]


def all_z_symbols(n: int) -> list[Symbol]:
    out = []
    for a in NodeSet.full(n).subsets():
        for i in range(1, n + 1):
            if i not in a:
                out.append(z(a, i))
    return out


def qn_presentation(n: int, form: str) -> Presentation:
    """The base algebra on n nodes, in z form (additive + multiplicative
    relations) or u form (the rel_4 family)."""
    if form not in ("z", "u"):
        raise ValueError(f"form must be 'z' or 'u', got {form!r}")
    if form == "z":
        alphabet = tuple(sorted(all_z_symbols(n), key=symbol_key))
        relations: list[Poly] = []
        for a, i, j in _instances(n):
            relations.append(rel_additive(a, i, j))
        for a, i, j in _instances(n):
            relations.append(rel_multiplicative(a, i, j))
        return Presentation(f"Qn(n={n},form=z)", alphabet, tuple(relations))
    alphabet = tuple(sorted(all_u_symbols(n), key=symbol_key))
    relations = [rel_4(a, i, j) for a, i, j in _instances(n)]
    return Presentation(f"Qn(n={n},form=u)", alphabet, tuple(relations))


def qF_presentation(c: Complex) -> Presentation:
    """Quotient of the base algebra by the ideal killing u(A) for every
    non-face A.  The alphabet keeps all u symbols; kill relations are
    degree-1 generators of the ideal."""
    n = c.n
    alphabet = tuple(sorted(all_u_symbols(n), key=symbol_key))
    relations = [rel_4(a, i, j) for a, i, j in _instances(n)]
    for s in NodeSet.full(n).subsets():
        if not s.is_empty and s not in c.faces:
            relations.append(Poly.from_symbol(u(s)))
    label = f"QF(n={n},faces={c})"
    return Presentation(label, alphabet, tuple(relations))


def graph_presentation(g: Graph) -> Presentation:
    """The vertex-and-edge presentation of the quotient attached to a graph."""
    n = g.n
    alphabet = [u(NodeSet.of((i,), n)) for i in range(1, n + 1)]
    alphabet += [u(NodeSet.of(e, n)) for e in g.sorted_edges()]
    alphabet = tuple(sorted(alphabet, key=symbol_key))
    relations = tuple(theorem_relations(g))
    label = f"QGraph(n={n},edges={g})"
    return Presentation(label, alphabet, relations)
