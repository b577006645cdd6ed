"""Biderivation family, axiom checking, commuting maps, post-Lie and
left-symmetric triviality sweeps, and the converse certificate."""

from fractions import Fraction

import pytest

from mhv.algebra import (CENTERLESS, FULL, C, Element, L, basis_vectors,
                         bracket, d, h)
from mhv.biderivations import (FAMILY_SAMPLES, BiderParams, BilinearTable,
                               LinearMap, bider_eval, check_bider_converse,
                               check_biderivation, check_commuting,
                               check_family, check_lsa_biderivation,
                               check_post_lie, grid_points, lsa_bider_grid,
                               post_lie_grid, upsilon)
from mhv.scalars import EPS, ONE, sc

E = Element.basis


class TestUpsilon:
    def test_single_mu(self):
        params = BiderParams(0, {0: 1})
        assert upsilon(params, E(d(1)), E(d(2))) \
            == Element.of((Fraction(1, 2), h(3)))

    def test_dh_zero(self):
        params = BiderParams(0, {0: 1})
        assert upsilon(params, E(d(3)), E(h(2))).is_zero()
        assert upsilon(params, E(h(2)), E(d(3))).is_zero()
        assert upsilon(params, E(C), E(d(0))).is_zero()

    def test_negative_k(self):
        params = BiderParams(0, {-1: 2})
        assert upsilon(params, E(d(0)), E(d(0))) == Element.of((-1, h(-1)))

    def test_symmetric_in_arguments(self):
        params = BiderParams(0, {-2: 1, 1: sc(Fraction(2, 3))})
        for m in range(-3, 4):
            for n in range(-3, 4):
                assert upsilon(params, E(d(m)), E(d(n))) \
                    == upsilon(params, E(d(n)), E(d(m)))


class TestBiderEval:
    def test_pure_inner(self):
        params = BiderParams(3, {})
        assert bider_eval(params, E(d(2)), E(d(1))) == Element.of((3, d(3)))

    def test_central_annihilation(self):
        params = BiderParams(Fraction(5, 2), {0: 1, 2: -1})
        for central in (C, L):
            for x in basis_vectors(3, FULL):
                assert bider_eval(params, E(central), E(x)).is_zero()
                assert bider_eval(params, E(x), E(central)).is_zero()

    def test_mixed(self):
        params = BiderParams(1, {0: 1})
        assert bider_eval(params, E(d(1)), E(d(-1))) \
            == Element.of((2, d(0)), (Fraction(1, 2), h(0)))

    def test_skew_part_is_twice_upsilon(self):
        params = BiderParams(Fraction(-1, 3), {1: 2, -1: 1})
        for x in basis_vectors(2, FULL):
            for y in basis_vectors(2, FULL):
                skew = bider_eval(params, E(x), E(y)) \
                    + bider_eval(params, E(y), E(x))
                assert skew == upsilon(params, E(x), E(y)).scale(sc(2))


class TestAxiomChecker:
    def test_family_passes_centerless(self):
        params = BiderParams(2, {1: 1})
        report = check_biderivation(
            BilinearTable.from_params(params, CENTERLESS), 3)
        assert report.passed
        assert report.total_cases == 2 * len(basis_vectors(3, CENTERLESS))**3

    def test_zero_map_passes(self):
        report = check_biderivation(
            BilinearTable.from_params(BiderParams(0, {}), CENTERLESS), 2)
        assert report.passed

    def test_raw_table_fails(self):
        table = BilinearTable(
            lambda u, v: E(d(u.index + v.index))
            if u.tag == "d" and v.tag == "d" else Element.zero(),
            "dd->d")
        report = check_biderivation(table, 2)
        assert not report.passed
        witness = {(f.inputs, f.equation_id) for f in report.failures}
        assert ("(d(1), d(1), d(2))", "bider.right") in witness

    def test_upsilon_obstructed_over_the_center(self):
        # the h-valued image brackets into l: over the full algebra the
        # exceptional part is not a biderivation, and the first failing
        # residual is the central (1/4) l at the smallest indices
        params = BiderParams(0, {0: 1})
        report = check_biderivation(
            BilinearTable.from_params(params, FULL), 2, FULL)
        assert not report.passed
        assert all(f.residual.endswith("l") for f in report.failures)

    def test_inner_passes_even_full(self):
        report = check_biderivation(
            BilinearTable.from_params(BiderParams(3, {}), FULL), 2, FULL)
        assert report.passed

    def test_family_samples_window3(self):
        report = check_family(3)
        assert report.passed
        assert len(FAMILY_SAMPLES) == 5


class TestCommuting:
    def test_spec_form_passes(self):
        phi = LinearMap.from_spec(sc(5), {d(0): E(C)})
        assert check_commuting(phi, 3).passed

    def test_zero_map_passes(self):
        assert check_commuting(LinearMap.from_spec(sc(0)), 2).passed

    def test_raw_scaling_table_fails(self):
        phi = LinearMap.from_table(
            {d(m): Element.of((m, d(m))) for m in range(-3, 4)}, "m*d(m)")
        report = check_commuting(phi, 3)
        assert not report.passed
        witness = {f.inputs for f in report.failures}
        assert "(d(1), d(2))" in witness

    def test_tau_must_be_central(self):
        with pytest.raises(ValueError):
            LinearMap.from_spec(sc(1), {d(0): E(d(1))})


class TestPostLie:
    def test_zero_passes(self):
        assert check_post_lie(BiderParams(0, {}), 2).passed

    def test_inner_fails_commutativity(self):
        report = check_post_lie(BiderParams(1, {}), 2)
        failing_ids = {f.equation_id for f in report.failures}
        assert "postlie.commutative" in failing_ids

    def test_upsilon_fails_bracket_product(self):
        report = check_post_lie(BiderParams(0, {0: 1}), 3)
        assert not report.passed
        witness = [f for f in report.failures
                   if f.equation_id == "postlie.bracket_product"
                   and f.inputs == "(d(2), d(1), d(3))"]
        assert witness, "expected a failure at (d(2), d(1), d(3))"
        # [d_2,d_1].d_3 = d_3.d_3 = (1/2) h(13/2), nested products vanish
        assert witness[0].residual == "1/2*h(13/2)"


class TestLsaBiderivation:
    def test_zero_passes(self):
        assert check_lsa_biderivation(BiderParams(0, {}), 2).passed

    def test_inner_witness_d6(self):
        report = check_lsa_biderivation(BiderParams(1, {}), 3)
        assert not report.passed
        witness = [f for f in report.failures
                   if f.inputs == "(d(2), d(1), d(3))"
                   and f.equation_id == "lsabider.left"]
        assert witness
        from mhv.expressions import parse_element
        residual = parse_element(witness[0].residual)
        # 2 d_2 d_4 coefficient is 8(1+4e)/(1+6e); adding d_5 d_1 gives the
        # d_6 coefficient of the expanded side, which the direct side lacks
        expected = -(sc(8) * (ONE + sc(4) * EPS) + (ONE + EPS)) \
            / (ONE + sc(6) * EPS)
        assert residual.coeff(d(6)) == expected

    def test_upsilon_witness_h13_2(self):
        report = check_lsa_biderivation(BiderParams(0, {0: 1}), 3)
        witness = [f for f in report.failures
                   if f.inputs == "(d(2), d(1), d(3))"
                   and f.equation_id == "lsabider.left"]
        assert witness
        from mhv.expressions import parse_element
        residual = parse_element(witness[0].residual)
        direct_side = -(ONE + EPS) / (sc(2) * (ONE + sc(3) * EPS))
        expanded_side = sc(Fraction(-9, 4))
        assert residual.coeff(h(6)) == direct_side - expanded_side
        assert direct_side != expanded_side


class TestGrids:
    def test_grid_size(self):
        assert len(grid_points()) == 6 * 27

    def test_post_lie_grid(self):
        report = post_lie_grid(2)
        assert report.passed
        assert report.extra["passing_points"] == ["lambda=0, omega={}"]

    def test_lsa_bider_grid(self):
        report = lsa_bider_grid(2)
        assert report.passed
        assert report.extra["passing_points"] == ["lambda=0, omega={}"]


class TestConverse:
    def test_rank_certificate(self):
        report = check_bider_converse(3)
        assert report.passed
        assert report.extra["rank"] == report.extra["target_rank"]
        assert report.extra["family_dimension"] == 6

    def test_family_generators_solve_axioms(self):
        # upsilon columns are zero rows: each shape is itself a centerless
        # biderivation
        params = BiderParams(0, {1: 1})
        table = BilinearTable.from_params(params, CENTERLESS)
        assert check_biderivation(table, 2).passed
