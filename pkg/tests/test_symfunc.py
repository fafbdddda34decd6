from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from isoschub.partitions import Partition, partitions_up_to, rho, strict_subsets
from isoschub.polyring import Poly, elementary_symmetric
from isoschub.symfunc import (
    BasisVector,
    basis_convert,
    e_product,
    e_squares,
    factor_doubles,
    laplace_expansions_agree,
    linearity_expand,
    pfaffian_oracle,
    pieri,
    ptilde,
    qrho_determinant_identity,
    qtilde,
    qtilde_e_expansion,
    qtilde_pfaffian_matrix,
    qtilde_raising_ops,
    qtilde_two_row,
    schur_q_classical,
    schur_q_generating_oracle,
    schur_q_one_row,
    schur_s,
    schur_s_jacobi_trudi,
    skew_qtilde,
    skew_qtilde_all,
)


def x(i, n):
    return Poly.var(i, n)


def e(i, n):
    return elementary_symmetric(i, n)


class TestQtilde:
    def test_two_vars_staircase(self):
        # oracle: Qt_21 = e2*e1 - 2*e3, and e3 vanishes in two variables
        want = e(2, 2) * e(1, 2) - e(3, 2).scale(2)
        assert qtilde((2, 1), 2) == want
        assert qtilde((2, 1), 2) == x(1, 2) ** 2 * x(2, 2) + x(1, 2) * x(2, 2) ** 2

    def test_equals_schur_in_two_vars(self):
        assert qtilde((2, 1), 2) == schur_s((2, 1), 2)

    def test_schur_expansion_from_paper(self):
        vec = basis_convert(qtilde((2, 1), 5), "schur_s", 5)
        assert vec.entries == {
            Partition((2, 1)): 1,
            Partition((1, 1, 1)): -1,
        }

    def test_staircase_monomials_n3(self):
        n = 3
        x1, x2, x3 = (x(i, n) for i in (1, 2, 3))
        want = (
            x3 * x1 ** 2 * x2 ** 2 * (x1 + x2)
            + x3 ** 2 * ((x1 ** 2 + x2 ** 2) * x1 * x2 + x1 ** 2 * x2 ** 2)
            + x3 ** 3 * (x2 * x1 ** 2 + x2 ** 2 * x1)
        )
        assert qtilde((3, 2, 1), 3) == want

    def test_one_row_is_elementary(self):
        assert qtilde((3,), 4) == e(3, 4)
        assert qtilde((), 4) == Poly.one(4)

    def test_vanishing_above_n(self):
        assert qtilde((3,), 2).is_zero()
        assert qtilde((4, 2, 1), 3).is_zero()

    def test_symmetry(self):
        assert qtilde((3, 2), 3).is_symmetric()

    def test_non_strict_indices_allowed(self):
        assert qtilde((2, 2), 2) == e_squares(2, 2)
        assert e_squares(2, 2) == x(1, 2) ** 2 * x(2, 2) ** 2


class TestPtilde:
    def test_one_row_half(self):
        assert ptilde((1,), 2) == (x(1, 2) + x(2, 2)).scale(Fraction(1, 2))

    def test_empty(self):
        assert ptilde((), 3) == Poly.one(3)

    def test_quarter_staircase(self):
        assert ptilde((2, 1), 2) == qtilde((2, 1), 2).scale(Fraction(1, 4))

    def test_two_row_identity_from_halves(self):
        # Pt_{i,j} = Pt_i Pt_j + 2 sum_{p<j} (-1)^p Pt_{i+p} Pt_{j-p}
        #            + (-1)^j Pt_{i+j}
        n, i, j = 3, 3, 2
        want = ptilde((i,), n) * ptilde((j,), n)
        for p in range(1, j):
            piece = ptilde((i + p,), n) * ptilde((j - p,), n)
            want = want + piece.scale(2 * (-1) ** p)
        want = want + ptilde((i + j,), n).scale((-1) ** j)
        assert ptilde((i, j), n) == want


class TestPfaffianOracle:
    def test_empty_matrix(self):
        assert pfaffian_oracle([]) == 1

    def test_two_by_two(self):
        a = x(1, 2) + 2 * x(2, 2)
        m = [[Poly.zero(2), a], [-a, Poly.zero(2)]]
        assert pfaffian_oracle(m) == a

    def test_rejects_odd_dimension(self):
        with pytest.raises(ValueError):
            pfaffian_oracle([[Poly.zero(1)]])

    def test_rejects_non_antisymmetric(self):
        a = x(1, 1)
        with pytest.raises(ValueError):
            pfaffian_oracle([[Poly.zero(1), a], [a, Poly.zero(1)]])

    def test_cross_check_staircase(self):
        m = qtilde_pfaffian_matrix((3, 2, 1), 3)
        assert pfaffian_oracle(m) == qtilde((3, 2, 1), 3)

    def test_cross_check_weight_bound(self):
        for n in (2, 3):
            for I in partitions_up_to(8, max_part=n, max_length=6):
                m = qtilde_pfaffian_matrix(I, n)
                assert pfaffian_oracle(m) == qtilde(I, n), (I, n)

    def test_laplace_consistency(self):
        for n in (2, 3):
            for I in partitions_up_to(7, max_part=n):
                assert laplace_expansions_agree(I, n), (I, n)


class TestSchurS:
    def test_small(self):
        assert schur_s((2, 1), 2) == x(1, 2) ** 2 * x(2, 2) + x(1, 2) * x(2, 2) ** 2

    def test_too_long_vanishes(self):
        assert schur_s((1, 1, 1), 2).is_zero()

    def test_both_paths_agree(self):
        for n in (2, 3):
            for I in partitions_up_to(6, max_length=n):
                assert schur_s(I, n) == schur_s_jacobi_trudi(I, n), (I, n)

    def test_staircase(self):
        assert schur_s(rho(2), 2) == qtilde((2, 1), 2)


class TestSchurQClassical:
    def test_one_row(self):
        assert schur_q_classical((1,), 3) == e(1, 3).scale(2)

    def test_staircase_doubling(self):
        assert schur_q_classical(rho(2), 2) == schur_s((2, 1), 2).scale(4)

    def test_two_row(self):
        n = 3
        want = (
            schur_q_one_row(2, n) * schur_q_one_row(1, n)
            - schur_q_one_row(3, n).scale(2)
        )
        assert schur_q_classical((2, 1), n) == want

    def test_rejects_nonstrict(self):
        with pytest.raises(ValueError):
            schur_q_classical((2, 2), 3)

    def test_generating_function_oracle(self):
        for n in (2, 3):
            for i in range(0, 7):
                assert schur_q_one_row(i, n) == schur_q_generating_oracle(i, n)

    def test_nonzero_above_n(self):
        # classical Q keeps going past the variable count
        assert not schur_q_classical((3,), 2).is_zero()


class TestQrhoDeterminant:
    @pytest.mark.parametrize("k,n", [(1, 2), (2, 3), (3, 3), (2, 2)])
    def test_identity(self, k, n):
        assert qrho_determinant_identity(k, n)

    def test_rejects_bad_range(self):
        with pytest.raises(ValueError):
            qrho_determinant_identity(3, 2)


class TestLinearity:
    def test_single_box(self):
        assert linearity_expand((1,), 2) == [
            (0, Partition((1,)), 1),
            (1, Partition(()), 1),
        ]

    def test_staircase_two(self):
        terms = linearity_expand((2, 1), 2)
        assert [(j, tuple(J)) for j, J, _ in terms] == [
            (0, (2, 1)),
            (1, (1, 1)),
            (1, (2,)),
            (2, (1,)),
        ]
        assert all(c == 1 for _, _, c in terms)

    def test_reassembly(self):
        for I in [(2, 1), (3, 1), (3, 2, 1), (4, 2)]:
            for n in (2, 3):
                total = Poly.zero(n)
                for j, J, _ in linearity_expand(I, n):
                    total = total + qtilde(J, n - 1).embed(n) * x(n, n) ** j
                assert total == qtilde(I, n), (I, n)

    def test_ptilde_coefficients_reassemble(self):
        I, n = (2, 1), 3
        total = Poly.zero(n)
        for j, J, coeff in linearity_expand(I, n, "ptilde"):
            piece = ptilde(J, n - 1).embed(n) * x(n, n) ** j
            total = total + piece.scale(coeff)
        assert total == ptilde(I, n)

    def test_staircase_groups_match_displayed_expansion(self):
        # grouped by the power of x_3; indices with a part above 2 vanish
        # in two variables and drop out of the displayed groups
        terms = linearity_expand((3, 2, 1), 3)
        surviving = {}
        for j, J, _ in terms:
            if J and J[0] > 2:
                continue
            surviving.setdefault(j, []).append(tuple(J))
        assert surviving == {
            1: [(2, 2, 1)],
            2: [(2, 1, 1), (2, 2)],
            3: [(2, 1)],
        }

    def test_rejects_nonstrict(self):
        with pytest.raises(ValueError):
            linearity_expand((2, 2), 3)


class TestFactorDoubles:
    def test_paper_example_one(self):
        pairs, core = factor_doubles((5, 5, 4, 4, 4, 4, 1))
        assert pairs == [5, 4, 4] and core == Partition((1,))

    def test_paper_example_two(self):
        pairs, core = factor_doubles((5, 5, 5, 4, 4, 4, 3, 3, 3, 1))
        assert pairs == [5, 4, 3] and core == Partition((5, 4, 3, 1))

    def test_already_strict(self):
        pairs, core = factor_doubles((2, 1))
        assert pairs == [] and core == Partition((2, 1))

    def test_product_identity(self):
        for n in (2, 3):
            for I in partitions_up_to(9, max_part=n):
                pairs, core = factor_doubles(I)
                product = qtilde(core, n)
                for j in pairs:
                    product = product * e_squares(j, n)
                assert qtilde(I, n) == product, (I, n)


class TestSkew:
    def test_trivial(self):
        assert skew_qtilde((2, 1), (2, 1), 2, 4) == Poly.one(2)

    def test_lemma_7_1_case(self):
        # Qt_{(6,5,4,2,1)/rho_4} in two variables is s_{5,3}
        got = skew_qtilde((6, 5, 4, 2, 1), rho(4), 4, 6)
        assert got == schur_s((5, 3), 2)

    def test_lemma_7_1_general_two_vars(self):
        n, p = 5, 2
        I_p = Partition([v for v in range(n, 0, -1) if v != p])
        got = skew_qtilde(I_p, rho(n - 2), n - 2, n)
        assert got == schur_s((n - 1, n - p), 2)

    def test_rejects_non_contained(self):
        with pytest.raises(ValueError):
            skew_qtilde((2, 1), (3,), 1, 3)

    def test_defining_expansion(self):
        for I in [(2, 1), (3, 1), (2, 2)]:
            for (m, n) in ((1, 3), (2, 3)):
                total = Poly.zero(n)
                for J, F in skew_qtilde_all(I, m, n).items():
                    total = total + qtilde(J, m).embed(n) * F.shift_vars(m, n)
                assert total == qtilde(I, n), (I, m, n)


class TestBasisConvert:
    def test_example_4_6_pair(self):
        vec = basis_convert(qtilde((3, 2), 5), "schur_s", 5)
        assert vec.entries == {
            Partition((2, 2, 1)): 1,
            Partition((2, 1, 1, 1)): -1,
            Partition((1, 1, 1, 1, 1)): 1,
        }
        vec = basis_convert(qtilde((4, 3, 2, 1), 5), "schur_s", 5)
        assert vec.entries == {
            Partition((4, 3, 2, 1)): 1,
            Partition((4, 3, 1, 1, 1)): -1,
            Partition((4, 2, 2, 2)): -1,
            Partition((3, 3, 3, 1)): -1,
            Partition((3, 2, 2, 2, 1)): 1,
            Partition((2, 2, 2, 2, 2)): -2,
        }

    def test_e1_squared_in_qtilde(self):
        f = e(1, 2) * e(1, 2)
        vec = basis_convert(f, "qtilde", 2)
        assert vec.entries == {Partition((2,)): 2, Partition((1, 1)): 1}

    def test_rejects_nonsymmetric(self):
        with pytest.raises(ValueError):
            basis_convert(x(1, 2), "schur_s", 2)

    @pytest.mark.parametrize(
        "basis", ["schur_s", "qtilde", "ptilde", "e_monomial", "schur_q"]
    )
    def test_roundtrip(self, basis):
        n = 3
        f = qtilde((2, 1), n) * e(1, n) + schur_s((2, 2), n).scale(3)
        if basis == "schur_q":
            # stay inside the classical-Q span
            f = schur_q_classical((2, 1), n) + schur_q_classical((3,), n).scale(2)
        vec = basis_convert(f, basis, n)
        assert vec.to_poly() == f

    def test_schur_q_span_hits_and_misses(self):
        # e1 = Q_1 / 2 lies in the rational span
        vec = basis_convert(e(1, 3), "schur_q", 3)
        assert vec.entries == {Partition((1,)): Fraction(1, 2)}
        # e2 involves the even power sum and does not
        with pytest.raises(ValueError):
            basis_convert(e(2, 3), "schur_q", 3)

    def test_e_expansion_triangularity(self):
        # leading e-index of Qtilde_I is I itself, coefficient 1
        for n in (2, 3):
            for I in partitions_up_to(6, max_part=n):
                exp = qtilde_e_expansion(I, n)
                assert exp.get(Partition(I)) == 1, (I, n)

    def test_basisvector_validation(self):
        with pytest.raises(ValueError):
            BasisVector("qtilde", 2, {Partition((3,)): 1})
        with pytest.raises(ValueError):
            BasisVector("schur_q", 3, {Partition((2, 2)): 1})
        with pytest.raises(ValueError):
            BasisVector("nope", 2, {})


class TestPieri:
    def test_one_times_one(self):
        vec = pieri((1,), 1, 2, "qtilde")
        assert vec.entries == {Partition((2,)): 2, Partition((1, 1)): 1}
        assert vec.to_poly() == e(1, 2) * e(1, 2)

    def test_ptilde_variant(self):
        vec = pieri((1,), 1, 2, "ptilde")
        assert vec.entries == {Partition((2,)): 1, Partition((1, 1)): 1}

    def test_multiply_by_unit_row(self):
        vec = pieri((), 3, 5, "qtilde")
        assert vec.entries == {Partition((3,)): 1}

    def test_rejects_nonstrict(self):
        with pytest.raises(ValueError):
            pieri((2, 2), 1, 3)

    def test_products_reassemble(self):
        n = 3
        for I in strict_subsets(n):
            for r in (1, 2, 3):
                for family, fam in (("qtilde", qtilde), ("ptilde", ptilde)):
                    got = pieri(I, r, n, family).to_poly()
                    assert got == fam(I, n) * fam((r,), n), (I, r, family)


class TestRaisingOps:
    def test_single_row(self):
        assert qtilde_raising_ops((3,), 4) == e(3, 4)

    def test_two_rows(self):
        # single factor: (1-R)/(1+R) = 1 - 2R + 2R^2 - ...
        assert qtilde_raising_ops((2, 1), 3) == e(2, 3) * e(1, 3) - e(3, 3).scale(2)

    def test_double_row_squares(self):
        assert qtilde_raising_ops((2, 2), 2) == e_squares(2, 2)

    def test_guard(self):
        with pytest.raises(ValueError):
            qtilde_raising_ops((2, 1, 1, 1, 1), 3)

    def test_matches_recurrence(self):
        for n in (2, 3):
            for I in partitions_up_to(7, max_part=n + 1, max_length=4):
                assert qtilde_raising_ops(I, n) == qtilde(I, n), (I, n)


@st.composite
def small_partitions(draw):
    return Partition(
        sorted(
            draw(st.lists(st.integers(1, 4), max_size=4)),
            reverse=True,
        )
    )


@settings(max_examples=30, deadline=None)
@given(small_partitions(), st.integers(1, 3))
def test_symmetric_outputs(I, n):
    assert qtilde(I, n).is_symmetric()
    assert ptilde(I, n).is_symmetric()


@settings(max_examples=30, deadline=None)
@given(small_partitions(), st.integers(1, 3))
def test_positivity_property(I, n):
    assert all(c > 0 for c in qtilde(I, n).terms.values())
