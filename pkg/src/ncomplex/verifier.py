"""Named machine checks for every identity, lemma and theorem clause.

Each check is pure and returns a CheckResult whose witness is JSON-able and
reproducible; failure never raises, it is recorded in the result.  run_all
aggregates results into a VerificationReport.

The commutator-vanishing check evaluates two candidate hypotheses.  The weak
one (some i in A, j in B with {i,j} not a face) is demonstrably insufficient:
on the path 1-2-3 the pair A={1,2}, B={3} satisfies it, yet [u(A),u(B)]
reduces to a nonzero normal form at degree 2.  The condition the induction
argument actually needs is pairwise: there are witnesses i in A, j in B such
that {i,j} and every {i,b}, b in B-j, and every {a,j}, a in A-i, all fail to
be faces.  check_proposition evaluates every face pair under BOTH readings,
records the outcomes, and gates its verdict on the pairwise reading.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .complexes import (
    Complex,
    Graph,
    NodeSet,
    closure,
    dimension,
    enumerate_complexes,
    is_face,
)
from .free_algebra import Poly, commutator, substitute, symbol_key, u, z
from .presentations import (
    _instances,
    all_z_symbols,
    graph_presentation,
    identity_11_residual,
    qF_presentation,
    qn_presentation,
    rel_4,
    rel_5,
    rel_9,
    rel_10,
    rel_additive,
    rel_multiplicative,
    theorem_rel_ii,
    theorem_relations,
    u_in_z,
    z_in_u,
)
from .quotient_engine import Echelon, TruncatedIdealBasis, graded_dimension

CHECK_NAMES = (
    "basis_lemma",
    "eq3_welldefined",
    "corollary",
    "commutative_case",
    "proposition",
    "theorem",
    "presentation_equivalence",
)


@dataclass
class CheckResult:
    check: str
    params: dict
    passed: bool
    witness: object
    millis: int = 0

    def to_json_obj(self) -> dict:
        return {"check": self.check, "params": self.params, "pass": self.passed,
                "witness": self.witness, "millis": self.millis}


@dataclass
class VerificationReport:
    entries: list[CheckResult] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(e.passed for e in self.entries)

    def sorted_entries(self) -> list[CheckResult]:
        return sorted(self.entries,
                      key=lambda e: (e.check, json.dumps(e.params, sort_keys=True)))

    def to_json_obj(self) -> dict:
        return {"schema": 1, "overall": self.overall,
                "entries": [e.to_json_obj() for e in self.sorted_entries()]}

    def to_text(self) -> str:
        lines = []
        for e in self.sorted_entries():
            params = " ".join(f"{k}={e.params[k]}" for k in sorted(e.params))
            lines.append(f"{'PASS' if e.passed else 'FAIL'} {e.check}"
                         f"{' ' + params if params else ''} ({e.millis} ms)")
            if not e.passed and isinstance(e.witness, dict):
                for f in e.witness.get("failures", [])[:20]:
                    lines.append(f"  failure: {f}")
        done = sum(e.passed for e in self.entries)
        lines.append(f"overall {'PASS' if self.overall else 'FAIL'}"
                     f" ({done}/{len(self.entries)} checks passed)")
        return "\n".join(lines)


def _timed(check: str, params: dict, body: Callable[[], tuple[bool, object]]) -> CheckResult:
    t0 = time.perf_counter()
    passed, witness = body()
    ms = int((time.perf_counter() - t0) * 1000)
    return CheckResult(check, params, passed, witness, ms)


# ---------------------------------------------------------------------------
# degree-1 linear algebra over the z alphabet
# ---------------------------------------------------------------------------

def _additive_echelon(n: int) -> tuple[Echelon, dict]:
    letters = sorted(all_z_symbols(n), key=symbol_key)
    index = {s: k for k, s in enumerate(letters)}
    ech = Echelon()
    for a, i, j in _instances(n):
        vec = {index[w[0]]: c for w, c in rel_additive(a, i, j).terms.items()}
        ech.insert(vec)
    return ech, index


def _linear_coords(p: Poly, index: dict) -> dict[int, Fraction]:
    return {index[w[0]]: c for w, c in p.terms.items()}


# ---------------------------------------------------------------------------
# the checks
# ---------------------------------------------------------------------------

def check_basis_lemma(n: int) -> CheckResult:
    """Degree-1 dimension is 2^n - 1 in both forms, the u elements are
    independent modulo the additive relations, and the z/u change of basis
    is an exact two-sided inverse."""
    def body():
        failures = []
        expected = 2 ** n - 1
        z_dim = graded_dimension(qn_presentation(n, "z"), 1)[1]
        u_dim = graded_dimension(qn_presentation(n, "u"), 1)[1]
        if z_dim != expected:
            failures.append(f"z-form degree-1 dimension {z_dim} != {expected}")
        if u_dim != expected:
            failures.append(f"u-form degree-1 dimension {u_dim} != {expected}")

        ech, index = _additive_echelon(n)
        independent = 0
        for a in NodeSet.full(n).subsets():
            if a.is_empty:
                continue
            vec = _linear_coords(u_in_z(a, a.elements[0]), index)
            if ech.insert(vec):
                independent += 1
            else:
                failures.append(f"u({a}) is dependent modulo the additive relations")

        roundtrips = 0
        for a in NodeSet.full(n).subsets():
            for i in range(1, n + 1):
                if i in a:
                    continue
                zi = {z(d, i): z_in_u(d, i) for d in a.subsets()}
                ui = {u(d.plus(i)): u_in_z(d.plus(i), i) for d in a.subsets()}
                if substitute(z_in_u(a, i), ui) != Poly.from_symbol(z(a, i)):
                    failures.append(f"u->z->u round trip failed at z({a},{i})")
                b = a.plus(i)
                if substitute(u_in_z(b, i), zi) != Poly.from_symbol(u(b)):
                    failures.append(f"z->u->z round trip failed at u({b})")
                roundtrips += 2
        witness = {"n": n, "expected_dim": expected, "z_dim": z_dim, "u_dim": u_dim,
                   "independent_u": independent, "roundtrips": roundtrips,
                   "failures": failures}
        return not failures, witness
    return _timed("basis_lemma", {"n": n}, body)


def check_eq3_welldefined(n: int) -> CheckResult:
    """The z expansion of u(A) is independent of the chosen index, modulo the
    span of the additive relations."""
    def body():
        ech, index = _additive_echelon(n)
        failures = []
        instances = 0
        for a in NodeSet.full(n).subsets():
            if a.size < 2:
                continue
            els = a.elements
            for x in els:
                for y in els:
                    if x >= y:
                        continue
                    diff = u_in_z(a, x) - u_in_z(a, y)
                    instances += 1
                    if ech.reduce(_linear_coords(diff, index)):
                        failures.append(f"u({a}) via i={x} vs i={y} differs "
                                        f"outside the additive span")
        return not failures, {"n": n, "instances": instances, "failures": failures}
    return _timed("eq3_welldefined", {"n": n}, body)


def check_corollary(n: int) -> CheckResult:
    """Under z -> u substitution the additive relations vanish and the
    multiplicative relations become the u-form quadratics; the commutator
    form is their negative."""
    def body():
        images = {s: z_in_u(s.a, s.i) for s in all_z_symbols(n)}
        failures = []
        instances = 0
        for a, i, j in _instances(n):
            instances += 1
            if substitute(rel_additive(a, i, j), images):
                failures.append(f"additive ({a},{i},{j}) has nonzero u image")
            if substitute(rel_multiplicative(a, i, j), images) != rel_4(a, i, j):
                failures.append(f"multiplicative ({a},{i},{j}) image != rel_4")
            if rel_5(a, i, j) != -1 * rel_4(a, i, j):
                failures.append(f"rel_5 ({a},{i},{j}) != -rel_4")
        return not failures, {"n": n, "instances": instances, "failures": failures}
    return _timed("corollary", {"n": n}, body)


def check_commutative_case(n: int, d: int) -> CheckResult:
    """The 0-dimensional quotient has commutative-polynomial dimensions."""
    def body():
        dims = graded_dimension(qF_presentation(closure([], n)), d)
        expected = [math.comb(n + e - 1, e) for e in range(d + 1)]
        failures = ([] if dims == expected
                    else [f"dims {dims} != expected {expected}"])
        return not failures, {"n": n, "d": d, "dims": dims, "expected": expected,
                              "failures": failures}
    return _timed("commutative_case", {"n": n, "d": d}, body)


def _pair_absent(c: Complex, x: int, y: int) -> bool:
    if x == y:
        return False
    return not is_face(c, NodeSet.of((x, y), c.n))


def weak_witnesses(c: Complex, a: NodeSet, b: NodeSet) -> list[tuple[int, int]]:
    """(i, j) with i in A, j in B, i != j and {i,j} not a face."""
    return [(i, j) for i in a for j in b if _pair_absent(c, i, j)]


def strong_witnesses(c: Complex, a: NodeSet, b: NodeSet) -> list[tuple[int, int]]:
    """Weak witnesses whose non-adjacency extends pairwise across the two
    faces; this is what the induction argument needs."""
    out = []
    for i, j in weak_witnesses(c, a, b):
        if all(_pair_absent(c, i, y) for y in b if y != j) and \
           all(_pair_absent(c, x, j) for x in a if x != i):
            out.append((i, j))
    return out


def check_proposition(c: Complex, degree_bound: int = 2) -> CheckResult:
    """Commutator vanishing for qualifying face pairs, plus the intermediate
    membership claims the induction rests on (see the module docstring for
    the two qualifying conditions)."""
    if degree_bound < 2:
        raise ValueError("degree_bound must be >= 2")
    def body():
        basis = TruncatedIdealBasis(qF_presentation(c), degree_bound)
        faces = c.sorted_faces()
        records = []
        failures = []
        for x in range(len(faces)):
            for y in range(x + 1, len(faces)):
                a, b = faces[x], faces[y]
                weak = weak_witnesses(c, a, b)
                if not weak:
                    continue
                strong = strong_witnesses(c, a, b)
                member = basis.contains(
                    commutator(Poly.from_symbol(u(a)), Poly.from_symbol(u(b))))
                records.append({"A": str(a), "B": str(b), "weak": True,
                                "strong": bool(strong), "member": member})
                if strong and not member:
                    failures.append(f"[u({a}),u({b})] not in the ideal despite "
                                    f"pairwise witnesses {strong}")
                for i, j in strong:
                    for ap in a.minus(i).subsets():
                        for bp in b.minus(j).subsets():
                            r9 = rel_9(ap, bp, i, j)
                            if r9 and not basis.contains(r9):
                                failures.append(
                                    f"rel_9({ap},{bp},{i},{j}) not in the ideal")
                            sub = commutator(Poly.from_symbol(u(ap.plus(i))),
                                             Poly.from_symbol(u(bp.plus(j))))
                            if not basis.contains(sub):
                                failures.append(
                                    f"[u({ap.plus(i)}),u({bp.plus(j)})] not in the ideal")
        witness = {"complex": str(c), "n": c.n,
                   "weak_pairs": len(records),
                   "strong_pairs": sum(r["strong"] for r in records),
                   "records": records, "failures": failures}
        return not failures, witness
    return _timed("proposition", {"complex": str(c), "d": degree_bound}, body)


def check_theorem(g: Graph, degree_bound: int = 2) -> CheckResult:
    """The graph relations hold in the quotient, the recursion identity is an
    exact free-algebra identity, the triple relation instances are members,
    and every truncated quadratic follows from the graph relations alone."""
    if degree_bound < 2:
        raise ValueError("degree_bound must be >= 2")
    def body():
        n = g.n
        failures = []
        qf_basis = TruncatedIdealBasis(qF_presentation(g.as_complex()), degree_bound)
        rels = theorem_relations(g)
        for r in rels:
            if not qf_basis.contains(r):
                failures.append(f"graph relation {r} not in the quotient ideal")

        id11 = 0
        for i, j in [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]:
            rest = NodeSet.full(n).minus(i).minus(j)
            for a in rest.subsets():
                for k in a:
                    id11 += 1
                    if identity_11_residual(a, i, j, k):
                        failures.append(f"identity (11) fails at A={a},i={i},j={j},k={k}")

        rel12 = 0
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for k in range(1, n + 1):
                    if len({i, j, k}) != 3:
                        continue
                    rel12 += 1
                    r = theorem_rel_ii(i, j, k, g)
                    if r and not qf_basis.contains(r):
                        failures.append(f"triple relation ({i},{j},{k}) not in the ideal")

        graph_basis = TruncatedIdealBasis(graph_presentation(g), degree_bound)
        induction = 0
        for i, j in [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]:
            rest = NodeSet.full(n).minus(i).minus(j)
            for a in rest.subsets():
                induction += 1
                r = rel_10(a, i, j, graph=g)
                if r and not graph_basis.contains(r):
                    failures.append(f"rel_10({a},{i},{j}) does not follow from "
                                    f"the graph relations")
        witness = {"graph": str(g), "n": n, "relations": len(rels),
                   "identity11_instances": id11, "rel12_instances": rel12,
                   "induction_instances": induction, "failures": failures}
        return not failures, witness
    return _timed("theorem", {"graph": str(g), "d": degree_bound}, body)


def check_presentation_equivalence(g: Graph, d: int) -> CheckResult:
    """Graded dimensions of the kill-ideal quotient and of the graph
    presentation agree up to degree d."""
    def body():
        qf = graded_dimension(qF_presentation(g.as_complex()), d)
        gp = graded_dimension(graph_presentation(g), d)
        failures = ([] if qf == gp
                    else [f"qF dims {qf} != graph dims {gp}"])
        return not failures, {"graph": str(g), "d": d, "qF_dims": qf,
                              "graph_dims": gp, "failures": failures}
    return _timed("presentation_equivalence", {"graph": str(g), "d": d}, body)


# ---------------------------------------------------------------------------
# aggregation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerifyConfig:
    checks: tuple[str, ...] = CHECK_NAMES
    ns: tuple[int, ...] = ()
    complexes: tuple[Complex, ...] = ()
    max_degree: int = 2


def default_config() -> VerifyConfig:
    """The full sweep at desk scale: n <= 3 and every complex on 3 nodes."""
    return VerifyConfig(ns=(1, 2, 3), complexes=tuple(enumerate_complexes(3)))


def run_all(config: VerifyConfig) -> VerificationReport:
    report = VerificationReport()
    d = config.max_degree
    for name in config.checks:
        if name not in CHECK_NAMES:
            raise ValueError(f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}")
        if name in ("basis_lemma", "eq3_welldefined", "corollary", "commutative_case"):
            if not config.ns:
                raise ValueError(f"check '{name}' needs n (pass --n or a complex)")
            for n in config.ns:
                if name == "basis_lemma":
                    report.entries.append(check_basis_lemma(n))
                elif name == "eq3_welldefined":
                    report.entries.append(check_eq3_welldefined(n))
                elif name == "corollary":
                    report.entries.append(check_corollary(n))
                else:
                    report.entries.append(check_commutative_case(n, d))
        elif name == "proposition":
            if not config.complexes:
                raise ValueError("check 'proposition' needs a complex")
            for c in config.complexes:
                report.entries.append(check_proposition(c, max(2, d)))
        else:
            graphs = [Graph.from_complex(c) for c in config.complexes
                      if dimension(c) <= 1]
            if config.complexes and not graphs:
                raise ValueError(f"check '{name}' needs a complex of dimension <= 1")
            if not config.complexes:
                raise ValueError(f"check '{name}' needs a complex")
            for g in graphs:
                if name == "theorem":
                    report.entries.append(check_theorem(g, max(2, d)))
                else:
                    report.entries.append(check_presentation_equivalence(g, d))
    return report
