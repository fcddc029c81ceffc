"""Tests for relation builders and presentations.

Derived expectations are computed by independent oracles: the z expansion of
u is checked against a direct triangular-system solve, the u-form quadratic
against the substitution image of the multiplicative relation, and the
truncated quadratic against an explicit kill-substitution of the commutator
form.
"""

import pytest

from ncomplex.complexes import (
    NodeSet,
    closure,
    complete_graph,
    edgeless_graph,
    path_graph,
)
from ncomplex.free_algebra import Poly, commutator, substitute, u, z
from ncomplex.presentations import (
    Presentation,
    all_u_symbols,
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
    theorem_rel_i,
    theorem_rel_ii,
    theorem_relations,
    u_in_z,
    z_in_u,
)


def ns(*elems, n=3):
    return NodeSet.of(elems, n)


def up(*elems, n=3):
    return Poly.from_symbol(u(NodeSet.of(elems, n)))


def zp(elems, i, n=3):
    return Poly.from_symbol(z(NodeSet.of(elems, n), i))


def instances(n):
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            for a in NodeSet.full(n).minus(i).minus(j).subsets():
                out.append((a, i, j))
    return out


def z_to_u_images(n):
    return {s: z_in_u(s.a, s.i) for s in all_z_symbols(n)}


def kill_large_images(n):
    """u(S) -> 0 for |S| >= 3, identity otherwise (independent truncation)."""
    return {s: (Poly.zero() if s.a.size >= 3 else Poly.from_symbol(s))
            for s in all_u_symbols(n)}


class TestZRelations:
    def test_additive_base_instance(self):
        expected = (zp((1,), 2, n=2) + zp((), 1, n=2)
                    - zp((2,), 1, n=2) - zp((), 2, n=2))
        assert rel_additive(ns(n=2), 1, 2) == expected

    def test_additive_swap_negates(self):
        for a, i, j in instances(4):
            assert rel_additive(a, i, j) == -1 * rel_additive(a, j, i)

    def test_additive_shifted_instance(self):
        got = rel_additive(ns(3), 1, 2)
        expected = zp((1, 3), 2) + zp((3,), 1) - zp((2, 3), 1) - zp((3,), 2)
        assert got == expected

    def test_multiplicative_base_instance(self):
        got = rel_multiplicative(ns(n=2), 1, 2)
        expected = zp((1,), 2, n=2) * zp((), 1, n=2) - zp((2,), 1, n=2) * zp((), 2, n=2)
        assert got == expected

    def test_multiplicative_swap_negates(self):
        for a, i, j in instances(4):
            assert rel_multiplicative(a, i, j) == -1 * rel_multiplicative(a, j, i)

    def test_degrees(self):
        for a, i, j in instances(3):
            assert rel_additive(a, i, j).degree() == 1
            assert rel_multiplicative(a, i, j).degree() == 2

    def test_index_errors(self):
        with pytest.raises(ValueError, match="i=j"):
            rel_additive(ns(), 1, 1)
        with pytest.raises(ValueError, match="lies in"):
            rel_additive(ns(1), 1, 2)


class TestChangeOfBasis:
    def test_z_in_u_examples(self):
        assert z_in_u(ns(), 1) == up(1)
        assert z_in_u(ns(2), 1) == up(1) + up(1, 2)
        assert z_in_u(ns(2, 3), 1) == up(1) + up(1, 2) + up(1, 3) + up(1, 2, 3)

    def test_u_in_z_examples(self):
        assert u_in_z(ns(1), 1) == zp((), 1)
        assert u_in_z(ns(1, 2), 2) == zp((1,), 2) - zp((), 2)

    def test_u_in_z_against_triangular_solve(self):
        # oracle: invert z(D,i) = sum_{E within D} u(E+i) by subset recursion
        for n in (2, 3, 4):
            for a in NodeSet.full(n).subsets():
                for i in a:
                    rest = a.minus(i)
                    sol = {}
                    for e_set in rest.subsets():
                        acc = Poly.from_symbol(z(e_set, i))
                        for f_set in e_set.subsets():
                            if f_set != e_set:
                                acc = acc - sol[f_set.bits]
                        sol[e_set.bits] = acc
                    assert u_in_z(a, i) == sol[rest.bits], (a, i)

    def test_round_trip_both_ways(self):
        for n in (2, 3, 4):
            for a in NodeSet.full(n).subsets():
                for i in range(1, n + 1):
                    if i in a:
                        continue
                    zi = {z(d, i): z_in_u(d, i) for d in a.subsets()}
                    ui = {u(d.plus(i)): u_in_z(d.plus(i), i) for d in a.subsets()}
                    assert substitute(z_in_u(a, i), ui) == Poly.from_symbol(z(a, i))
                    b = a.plus(i)
                    assert substitute(u_in_z(b, i), zi) == Poly.from_symbol(u(b))

    def test_index_errors(self):
        with pytest.raises(ValueError):
            z_in_u(ns(1), 1)
        with pytest.raises(ValueError):
            u_in_z(ns(2), 1)


class TestURelations:
    def test_rel_4_base_instance(self):
        got = rel_4(ns(n=2), 1, 2)
        expected = (up(2, n=2) * up(1, n=2) + up(1, 2, n=2) * up(1, n=2)
                    - up(1, n=2) * up(2, n=2) - up(1, 2, n=2) * up(2, n=2))
        assert got == expected

    def test_rel_4_homogeneous_degree_2(self):
        for a, i, j in instances(4):
            assert rel_4(a, i, j).degree() == 2

    def test_rel_4_is_substitution_image_of_multiplicative(self):
        for n in (2, 3, 4):
            images = z_to_u_images(n)
            for a, i, j in instances(n):
                assert substitute(rel_multiplicative(a, i, j), images) == rel_4(a, i, j)

    def test_additive_substitutes_to_zero(self):
        for n in (2, 3, 4):
            images = z_to_u_images(n)
            for a, i, j in instances(n):
                assert substitute(rel_additive(a, i, j), images) == Poly.zero()

    def test_rel_5_base_instance(self):
        got = rel_5(ns(n=2), 1, 2)
        expected = (commutator(up(1, n=2), up(2, n=2))
                    - up(1, 2, n=2) * (up(1, n=2) - up(2, n=2)))
        assert got == expected

    def test_rel_5_is_minus_rel_4(self):
        for n in (2, 3, 4):
            for a, i, j in instances(n):
                assert rel_5(a, i, j) == -1 * rel_4(a, i, j)

    def test_rel_5_swap(self):
        assert rel_5(ns(n=2), 2, 1) == -1 * rel_5(ns(n=2), 1, 2)


class TestRel9:
    def test_base_instance(self):
        assert rel_9(ns(), ns(), 1, 2) == commutator(up(1), up(2))

    def test_two_subset_instance(self):
        got = rel_9(ns(3), ns(), 1, 2)
        expected = commutator(up(1), up(2)) + commutator(up(1, 3), up(2))
        assert got == expected

    def test_homogeneous(self):
        assert rel_9(ns(3, n=4), ns(4, n=4), 1, 2).degree() == 2

    def test_errors(self):
        with pytest.raises(ValueError):
            rel_9(ns(1), ns(), 1, 2)
        with pytest.raises(ValueError):
            rel_9(ns(), ns(2), 1, 2)


class TestRel10:
    def test_base_case(self):
        got = rel_10(ns(n=2), 1, 2)
        expected = (commutator(up(1, n=2), up(2, n=2))
                    - up(1, 2, n=2) * (up(1, n=2) - up(2, n=2)))
        assert got == expected

    def test_is_truncation_of_rel_5(self):
        for n in (3, 4):
            kill = kill_large_images(n)
            for a, i, j in instances(n):
                assert rel_10(a, i, j) == substitute(rel_5(a, i, j), kill)

    def test_single_k_difference(self):
        got = rel_10(ns(3), 1, 2) - rel_10(ns(), 1, 2)
        expected = (commutator(up(1, 3), up(2, 3)) + commutator(up(1, 3), up(2))
                    + commutator(up(1), up(2, 3)) - up(1, 2) * (up(1, 3) - up(2, 3)))
        assert got == expected

    def test_graph_convention_zeroes_non_edges(self):
        g = path_graph(3)
        r = rel_10(ns(2), 1, 3, graph=g)
        assert u(ns(1, 3)) not in r.symbols()


class TestIdentity11:
    def test_exact_for_all_instances(self):
        for n in (3, 4):
            for a, i, j in instances(n):
                for k in a:
                    assert identity_11_residual(a, i, j, k) == Poly.zero(), (a, i, j, k)

    def test_requires_k_in_a(self):
        with pytest.raises(ValueError, match="k=3"):
            identity_11_residual(ns(), 1, 2, 3)


class TestTheoremRelations:
    def test_complete_graph_on_two(self):
        g = complete_graph(2)
        rels = theorem_relations(g)
        assert rels == [theorem_rel_i(1, 2, g)]
        expected = (commutator(up(1, n=2), up(2, n=2))
                    - up(1, 2, n=2) * (up(1, n=2) - up(2, n=2)))
        assert rels[0] == expected

    def test_edgeless_graph_keeps_only_commutators(self):
        rels = theorem_relations(edgeless_graph(3))
        assert rels == [commutator(up(1), up(2)), commutator(up(1), up(3)),
                        commutator(up(2), up(3))]

    def test_path_triple_instance_with_convention(self):
        got = theorem_rel_ii(1, 3, 2, path_graph(3))
        expected = (commutator(up(1, 2), up(2, 3)) + commutator(up(1, 2), up(3))
                    + commutator(up(1), up(2, 3)))
        assert got == expected

    def test_counts(self):
        assert len(theorem_relations(path_graph(3))) == 9
        assert len(theorem_relations(complete_graph(3))) == 9
        assert len(theorem_relations(complete_graph(4))) == 33  # 6 + 24 + 3


class TestPresentations:
    def test_qn_z_alphabet(self):
        p = qn_presentation(2, "z")
        assert len(p.alphabet) == 4
        assert len(p.relations) == 4  # 2 additive + 2 multiplicative

    def test_qn_u_alphabet(self):
        p = qn_presentation(2, "u")
        assert [str(s) for s in p.alphabet] == ["u({1})", "u({2})", "u({1,2})"]
        assert list(p.relations) == [rel_4(ns(n=2), 1, 2), rel_4(ns(n=2), 2, 1)]

    def test_qn_rejects_bad_form(self):
        with pytest.raises(ValueError, match="form"):
            qn_presentation(2, "w")

    def test_qF_full_simplex_is_qn(self):
        c = closure([{1, 2, 3}], 3)
        qf, qn = qF_presentation(c), qn_presentation(3, "u")
        assert qf.alphabet == qn.alphabet
        assert qf.relations == qn.relations

    def test_qF_edgeless_kills_everything_above_degree_zero(self):
        p = qF_presentation(closure([], 3))
        kills = [r for r in p.relations if r.degree() == 1]
        assert len(kills) == 4  # {1,2},{1,3},{2,3},{1,2,3}

    def test_subcomplex_relations_nest(self):
        big = closure([{1, 2, 3}], 3)
        small = closure([{1, 2}, {2, 3}], 3)
        assert set(qF_presentation(big).relations) <= set(qF_presentation(small).relations)

    def test_graph_presentation_counts(self):
        p = graph_presentation(edgeless_graph(3))
        assert len(p.alphabet) == 3
        assert all(r == commutator(Poly.from_symbol(a), Poly.from_symbol(b))
                   for r, (a, b) in zip(p.relations, [(p.alphabet[0], p.alphabet[1]),
                                                      (p.alphabet[0], p.alphabet[2]),
                                                      (p.alphabet[1], p.alphabet[2])]))
        k2 = graph_presentation(complete_graph(2))
        assert len(k2.alphabet) == 3 and len(k2.relations) == 1
        k3 = graph_presentation(complete_graph(3))
        assert len(k3.alphabet) == 6 and len(k3.relations) == 9

    def test_presentation_validation(self):
        a = u(ns(1))
        b = u(ns(2))
        with pytest.raises(ValueError, match="inhomogeneous"):
            Presentation("bad", (a, b), (Poly.from_symbol(a)
                                         + Poly.from_symbol(a) * Poly.from_symbol(b),))
        with pytest.raises(ValueError, match="not in the alphabet"):
            Presentation("bad", (a,), (Poly.from_symbol(b),))
        with pytest.raises(ValueError, match="zero polynomial"):
            Presentation("bad", (a,), (Poly.zero(),))
