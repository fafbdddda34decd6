import random
from fractions import Fraction

import pytest

from isoschub.partitions import rho
from isoschub.polyring import Poly, elementary_symmetric
from isoschub.symfunc import e_product, e_squares, ptilde, qtilde, schur_s
from isoschub.weyl import (
    SignedPerm,
    apply_dd,
    apply_dd_prime,
    dd_prime,
    divided_difference,
    generators,
    group_elements,
    ideal_membership,
    jacobi_symmetrizer,
    length,
    longest_element,
    nabla,
    nabla_element,
    reduced_word,
    symmetrizer_max,
    w_k_element,
)


def x(i, n):
    return Poly.var(i, n)


class TestSignedPerm:
    def test_validation(self):
        with pytest.raises(ValueError):
            SignedPerm((1, 1), "C")
        with pytest.raises(ValueError):
            SignedPerm((-1, 2), "D")  # odd number of bars
        SignedPerm((-1, -2), "D")

    def test_product_matches_semidirect_rule(self):
        # delta_i = tau_{sigma'(i)} * tau'_i
        v = SignedPerm((-2, 1, 3), "C")
        w = SignedPerm((3, -1, 2), "C")
        prod = v * w
        sigma_v, tau_v = v.word, v.bars
        sigma_w, tau_w = w.word, w.bars
        for i in range(3):
            assert prod.word[i] == sigma_v[sigma_w[i] - 1]
            assert prod.bars[i] == tau_v[sigma_w[i] - 1] * tau_w[i]

    def test_action_is_left_action(self):
        v = SignedPerm((-2, 1, 3), "C")
        w = SignedPerm((3, -1, 2), "C")
        f = x(1, 3) ** 2 * x(2, 3) - 3 * x(3, 3)
        assert (v * w).apply(f) == v.apply(w.apply(f))

    def test_inverse(self):
        w = SignedPerm((3, -1, 2), "C")
        assert (w * w.inverse()).is_identity()
        assert (w.inverse() * w).is_identity()

    def test_parse_str_roundtrip(self):
        w = SignedPerm.parse("-3,1,-2")
        assert w.entries == (-3, 1, -2)
        assert str(w) == "-3,1,-2"


class TestLength:
    def test_identity(self):
        assert length(SignedPerm.identity(3, "C")) == 0

    def test_barred_two_one(self):
        assert length(SignedPerm((-2, 1), "C")) == 2

    def test_longest_type_c(self):
        assert length(longest_element(3, "C")) == 9
        assert length(longest_element(2, "C")) == 4

    def test_type_d_variant(self):
        # type D drops the +1 per bar
        assert length(SignedPerm((-1, -2), "D")) == 2
        assert length(longest_element(3, "D")) == 6

    def test_bfs_agreement_small(self):
        for group_type in ("B", "C", "D"):
            n = 2
            start = SignedPerm.identity(n, group_type)
            dist = {start: 0}
            frontier = [start]
            while frontier:
                nxt = []
                for w in frontier:
                    for g in range(n):
                        v = w.right_gen(g)
                        if v not in dist:
                            dist[v] = dist[w] + 1
                            nxt.append(v)
                frontier = nxt
            for w, d in dist.items():
                assert length(w) == d, w


class TestReducedWord:
    def test_generator(self):
        s0 = generators(2, "C")[0]
        assert reduced_word(s0) == (0,)

    def test_barred_two_one(self):
        w = SignedPerm((-2, 1), "C")
        word = reduced_word(w)
        assert len(word) == 2
        prod = SignedPerm.identity(2, "C")
        for g in word:
            prod = prod * generators(2, "C")[g]
        assert prod == w

    def test_longest_n2(self):
        w0 = longest_element(2, "C")
        word = reduced_word(w0)
        assert len(word) == 4
        prod = SignedPerm.identity(2, "C")
        for g in word:
            prod = prod * generators(2, "C")[g]
        assert prod == w0

    def test_products_recompose_everywhere(self):
        for group_type in ("B", "C", "D"):
            for w in group_elements(3, group_type):
                word = reduced_word(w)
                assert len(word) == length(w)
                prod = SignedPerm.identity(3, group_type)
                for g in word:
                    prod = prod * generators(3, group_type)[g]
                assert prod == w


class TestDividedDifference:
    def test_dd0_type_c(self):
        assert divided_difference(0, x(1, 2), "C") == Poly.const(2, -1)

    def test_dd0_even_power_invariant(self):
        assert divided_difference(0, x(1, 2) ** 2, "C").is_zero()

    def test_dd1_square(self):
        got = divided_difference(1, x(1, 2) ** 2, "C")
        assert got == x(1, 2) + x(2, 2)

    def test_dd0_type_b(self):
        assert divided_difference(0, x(1, 2), "B") == Poly.const(2, -2)

    def test_dd0_type_d(self):
        f = x(1, 2) * x(2, 2)
        # f is invariant under the s_1bar swap-and-negate
        assert divided_difference(0, f, "D").is_zero()
        got = divided_difference(0, x(1, 2), "D")
        assert got == Poly.const(2, -1) + Poly.zero(2)

    def test_degree_drops_and_invariance(self):
        f = x(1, 3) ** 3 * x(2, 3) + x(3, 3) ** 2
        for group_type in ("B", "C", "D"):
            for g in range(3):
                out = divided_difference(g, f, group_type)
                if not out.is_zero():
                    assert out.degree() == f.degree() - 1

    def test_nilpotence(self):
        rng = random.Random(7)
        for group_type in ("B", "C", "D"):
            for _ in range(10):
                f = Poly.zero(3)
                for _ in range(5):
                    f = f + Poly.monomial(
                        3,
                        [rng.randrange(4) for _ in range(3)],
                        rng.randrange(-3, 4),
                    )
                for g in range(3):
                    once = divided_difference(g, f, group_type)
                    assert divided_difference(g, once, group_type).is_zero()


class TestApplyDd:
    def test_identity(self):
        f = x(1, 2) ** 3
        assert apply_dd(SignedPerm.identity(2, "C"), f) == f

    def test_single_bar(self):
        w = SignedPerm((-1,), "C")
        assert apply_dd(w, -x(1, 1)) == Poly.one(1)

    def test_against_symmetrizer(self):
        # composed operator for w_0 equals the closed summation formula
        n = 2
        f = qtilde(rho(n), n).negate_vars() * x(1, n)
        w0 = longest_element(n, "C")
        assert apply_dd(w0, f) == symmetrizer_max(f, "C", n)

    def test_composition_along_coset_factorization(self):
        # the nabla element times the longest unsigned permutation is w_0
        n = 3
        unsigned = SignedPerm(tuple(range(n, 0, -1)), "C")
        assert nabla_element(n, "C") * unsigned == longest_element(n, "C")
        f = Poly.monomial(n, (5, 3, 1))
        lhs = apply_dd(longest_element(n, "C"), f)
        rhs = apply_dd(nabla_element(n, "C"), apply_dd(unsigned, f))
        assert lhs == rhs


class TestSymmetrizer:
    def test_odd_staircase_monomial(self):
        # x_1^{2n-1} x_2^{2n-3} ... x_n^1 maps to +-1
        for n in (1, 2, 3):
            exps = tuple(2 * (n - k) - 1 for k in range(n))
            got = symmetrizer_max(Poly.monomial(n, exps), "C", n)
            assert got == Poly.const(n, (-1) ** (n * (n + 1) // 2))

    def test_even_exponent_vanishes_type_c(self):
        for mono in [(2, 1), (1, 2), (4, 3)]:
            assert symmetrizer_max(Poly.monomial(2, mono), "C", 2).is_zero()

    def test_odd_exponent_vanishes_type_d(self):
        for mono in [(1, 2), (2, 1), (3, 2)]:
            assert symmetrizer_max(Poly.monomial(2, mono), "D", 2).is_zero()

    def test_matches_operator_composition(self):
        rng = random.Random(42)
        for group_type in ("B", "C", "D"):
            n = 2
            w0 = longest_element(n, group_type)
            for _ in range(8):
                f = Poly.zero(n)
                for _ in range(4):
                    f = f + Poly.monomial(
                        n, [rng.randrange(5) for _ in range(n)],
                        rng.randrange(-3, 4),
                    )
                assert symmetrizer_max(f, group_type, n) == apply_dd(w0, f)


class TestJacobiSymmetrizer:
    def test_staircase_to_one(self):
        assert jacobi_symmetrizer(Poly.monomial(3, (2, 1, 0)), 3) == Poly.one(3)

    def test_repeated_exponent_vanishes(self):
        assert jacobi_symmetrizer(Poly.monomial(3, (2, 2, 0)), 3).is_zero()

    def test_alpha_to_schur(self):
        got = jacobi_symmetrizer(Poly.monomial(2, (3, 1)), 2)
        assert got == schur_s((2, 1), 2)


class TestNabla:
    def test_full_staircase_is_one(self):
        for n in (1, 2, 3):
            f = qtilde(rho(n), n).negate_vars()
            assert nabla(f, "C", n) == Poly.one(n)

    def test_even_multiplicity_vanishes(self):
        f = qtilde((2, 1, 1), 2).negate_vars()
        assert nabla(f, "C", 2).is_zero()

    def test_type_d_half_staircase(self):
        f = ptilde(rho(1), 2).negate_vars()
        assert nabla(f, "D", 2) == Poly.one(2)

    def test_w_k_element_shape(self):
        assert w_k_element(1, 3, "C").entries == (-3, -2, 1)
        assert w_k_element(2, 3, "C").entries == (-3, 1, 2)


class TestIdealMembership:
    def test_generator_membership(self):
        assert ideal_membership(qtilde((1, 1), 2), 2, "C")

    def test_lemma_5_4_instance(self):
        n = 3
        f = qtilde(rho(n), n) - e_product(rho(n), n)
        assert ideal_membership(f, n, "C")

    def test_degree_one_not_in_ideal(self):
        assert not ideal_membership(elementary_symmetric(1, 2), 2, "C")

    def test_type_d_generators(self):
        n = 3
        assert ideal_membership(e_squares(2, n), n, "D")
        assert ideal_membership(Poly.monomial(n, (1, 1, 1)), n, "D")
        assert not ideal_membership(elementary_symmetric(1, n), n, "D")

    def test_rejects_nonsymmetric(self):
        with pytest.raises(ValueError):
            ideal_membership(x(1, 2), 2, "C")


class TestDdPrime:
    def test_primed_zero(self):
        assert dd_prime(0, x(1, 2)) == Poly.one(2)

    def test_primed_one(self):
        assert dd_prime(1, x(1, 2)) == Poly.const(2, -1)

    def test_invariance(self):
        assert dd_prime(0, x(1, 2) ** 2 * Fraction(5, 2)).is_zero()

    def test_prime_vs_plain_sign(self):
        # primed operators flip the sign of the plain ones
        f = x(1, 2) ** 3 * x(2, 2)
        for g in (0, 1):
            assert dd_prime(g, f) == -divided_difference(g, f, "C")

    def test_word_composition(self):
        w = SignedPerm((-2, 1), "C")
        f = x(1, 2) ** 2 * x(2, 2) ** 2 * (x(1, 2) + x(2, 2))
        got = apply_dd_prime(w, f)
        word = reduced_word(w)
        step = f
        for g in reversed(word):
            step = dd_prime(g, step)
        assert got == step
