"""Named verification suites.

Each suite replays a family of identities at a configurable size and
reports case counts plus the first counterexample on failure.  The CLI
`verify` verb and the acceptance tests both drive these functions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .partitions import (
    Partition,
    partitions_of,
    partitions_up_to,
    rho,
    rho_complement,
    strict_subsets,
)
from .polyring import Poly, elementary_symmetric
from . import symfunc
from .symfunc import (
    basis_convert,
    e_product,
    factor_doubles,
    laplace_expansions_agree,
    linearity_expand,
    pfaffian_oracle,
    pieri,
    ptilde,
    qtilde,
    qtilde_pfaffian_matrix,
    qtilde_raising_ops,
    qrho_determinant_identity,
    schur_q_classical,
    schur_q_generating_oracle,
    schur_s,
    schur_s_jacobi_trudi,
)
from . import weyl
from .weyl import (
    SignedPerm,
    apply_dd,
    divided_difference,
    group_elements,
    ideal_membership,
    jacobi_symmetrizer,
    length,
    longest_element,
    reduced_word,
    symmetrizer_max,
)
from . import gysin
from .gysin import (
    identity_5_11,
    orthogonality_check,
    orthogonality_expected,
    push_partial_flag,
    push_partial_flag_operator,
    push_qtilde_closed,
    push_qtilde_operator,
    push_schur_closed_roots,
    push_schur_operator,
    s_bracket2,
)
from . import loci
from .loci import (
    RootAssignment,
    class_maximal_isotropic,
    class_single_condition,
    class_two_conditions,
    class_two_conditions_adjacent,
    diagonal_class,
    equal_on_roots,
    maximal_isotropic_from_diagonal,
)
from .schubpoly import c_top, c_w, grassmannian_element


@dataclass
class SuiteReport:
    name: str
    total: int = 0
    failures: list = field(default_factory=list)
    unit: str = "cases"

    @property
    def ok(self):
        return not self.failures

    def check(self, condition, label):
        self.total += 1
        if not condition:
            self.failures.append(label)

    def render(self):
        passed = self.total - len(self.failures)
        line = f"{self.name}: {passed}/{self.total} {self.unit} OK"
        if self.failures:
            line += f"\n  first counterexample: {self.failures[0]}"
        return line

    def to_json(self):
        return {
            "suite": self.name,
            "total": self.total,
            "passed": self.total - len(self.failures),
            "failures": [str(f) for f in self.failures[:10]],
            "ok": self.ok,
        }


GEOMETRIES = ("lagrangian", "odd_orth", "even_orth")


def _geometry_list(params):
    g = params.get("geometry")
    return [g] if g else list(GEOMETRIES)


# ---------------------------------------------------------------------------
# section 4: examples, Pieri, factorization, vanishing
# ---------------------------------------------------------------------------

def suite_example_4_5(params=None):
    r = SuiteReport("example-4-5")
    pairs, core = factor_doubles((5, 5, 4, 4, 4, 4, 1))
    r.check(pairs == [5, 4, 4] and core == Partition((1,)), "factorization 1")
    pairs, core = factor_doubles((5, 5, 5, 4, 4, 4, 3, 3, 3, 1))
    r.check(
        pairs == [5, 4, 3] and core == Partition((5, 4, 3, 1)),
        "factorization 2",
    )
    # full monomial expansion of the staircase at n = 3, assembled from the
    # displayed x3-groups
    n = 3
    x1, x2, x3 = (Poly.var(i, n) for i in (1, 2, 3))
    expected = (
        x3 * (x1 ** 2 * x2 ** 2) * (x1 + x2)
        + x3 ** 2 * ((x1 ** 2 + x2 ** 2) * x1 * x2 + x1 ** 2 * x2 ** 2)
        + x3 ** 3 * (x2 * x1 ** 2 + x2 ** 2 * x1)
    )
    r.check(qtilde((3, 2, 1), 3) == expected, "staircase expansion at n=3")
    return r


# Schur expansions of Qtilde_I(X_5), strict I in rho_5 with at least two
# parts, in canonical (reverse-lexicographic) term order.
EXAMPLE_4_6 = {
    (5, 4): "s[2,2,2,2,1]",
    (5, 3): "s[2,2,2,1,1]",
    (5, 2): "s[2,2,1,1,1]",
    (5, 1): "s[2,1,1,1,1]",
    (4, 3): "s[2,2,2,1] - s[2,2,1,1,1]",
    (4, 2): "s[2,2,1,1] - s[2,1,1,1,1]",
    (4, 1): "s[2,1,1,1] - s[1,1,1,1,1]",
    (3, 2): "s[2,2,1] - s[2,1,1,1] + s[1,1,1,1,1]",
    (3, 1): "s[2,1,1] - s[1,1,1,1]",
    (2, 1): "s[2,1] - s[1,1,1]",
    (5, 4, 3): "s[3,3,3,2,1] - s[3,3,2,2,2]",
    (5, 4, 2): "s[3,3,2,2,1] - s[3,2,2,2,2]",
    (5, 4, 1): "s[3,2,2,2,1] - s[2,2,2,2,2]",
    (5, 3, 2): "s[3,3,2,1,1] - s[3,2,2,2,1] + s[2,2,2,2,2]",
    (5, 3, 1): "s[3,2,2,1,1] - s[2,2,2,2,1]",
    (5, 2, 1): "s[3,2,1,1,1] - s[2,2,2,1,1]",
    (4, 3, 2): "s[3,3,2,1] - s[3,3,1,1,1] - s[3,2,2,2]",
    (4, 3, 1): "s[3,2,2,1] - s[3,2,1,1,1] - s[2,2,2,2]",
    (4, 2, 1): "s[3,2,1,1] - s[3,1,1,1,1] - s[2,2,2,1]",
    (3, 2, 1): "s[3,2,1] - s[3,1,1,1] - s[2,2,2]",
    (5, 4, 3, 2): "s[4,4,3,2,1] - s[4,4,2,2,2] - s[4,3,3,3,1]",
    (5, 4, 3, 1): "s[4,3,3,2,1] - s[4,3,2,2,2] - s[3,3,3,3,1]",
    (5, 4, 2, 1): "s[4,3,2,2,1] - s[4,2,2,2,2] - s[3,3,3,2,1]",
    (5, 3, 2, 1): "s[4,3,2,1,1] - s[4,2,2,2,1] - s[3,3,3,1,1]",
    (4, 3, 2, 1): "s[4,3,2,1] - s[4,3,1,1,1] - s[4,2,2,2] - s[3,3,3,1]"
    " + s[3,2,2,2,1] - 2*s[2,2,2,2,2]",
    (5, 4, 3, 2, 1): "s[5,4,3,2,1] - s[5,4,2,2,2] - s[5,3,3,3,1]"
    " - s[4,4,4,2,1] + s[4,3,3,3,2] - 2*s[3,3,3,3,3]",
}


def suite_example_4_6(params=None):
    r = SuiteReport("example-4-6", unit="expansions")
    for parts, expected in EXAMPLE_4_6.items():
        got = basis_convert(qtilde(parts, 5), "schur_s", 5).render()
        r.check(got == expected, f"Qt[{Partition(parts)}]: got {got!r}")
    return r


def suite_pieri(params=None):
    params = params or {}
    n = params.get("n", 4)
    rmax = params.get("max_r", 4)
    rep = SuiteReport("pieri", unit="products")
    for I in strict_subsets(n):
        for r in range(1, rmax + 1):
            for family in ("qtilde", "ptilde"):
                fam = qtilde if family == "qtilde" else ptilde
                product = fam(I, n) * fam((r,), n)
                rep.check(
                    pieri(I, r, n, family).to_poly() == product,
                    f"I={I} r={r} {family} n={n}",
                )
    return rep


def suite_factorization(params=None):
    params = params or {}
    max_n = params.get("max_n", 4)
    max_w = params.get("max_weight", 12)
    rep = SuiteReport("factorization", unit="partitions")
    for n in range(1, max_n + 1):
        for I in partitions_up_to(max_w, max_part=n):
            pairs, core = factor_doubles(I)
            product = qtilde(core, n)
            for j in pairs:
                product = product * symfunc.e_squares(j, n)
            rep.check(qtilde(I, n) == product, f"I={I} n={n}")
    return rep


def suite_vanishing(params=None):
    params = params or {}
    max_n = params.get("max_n", 4)
    max_w = params.get("max_weight", 10)
    rep = SuiteReport("vanishing", unit="partitions")
    for n in range(1, max_n + 1):
        for I in partitions_up_to(max_w):
            if not I or I[0] <= n:
                continue
            rep.check(qtilde(I, n).is_zero(), f"I={I} n={n}")
    return rep


def suite_positivity(params=None):
    params = params or {}
    max_w = params.get("max_weight", 10)
    max_n = params.get("max_n", 4)
    rep = SuiteReport("positivity", unit="partitions")
    for n in range(1, max_n + 1):
        for I in partitions_up_to(max_w, max_part=n):
            poly = qtilde(I, n)
            rep.check(
                all(c > 0 for c in poly.terms.values()), f"I={I} n={n}"
            )
    return rep


def suite_raising_ops(params=None):
    params = params or {}
    max_n = params.get("max_n", 3)
    max_w = params.get("max_weight", 8)
    rep = SuiteReport("raising-ops", unit="partitions")
    for n in range(1, max_n + 1):
        for I in partitions_up_to(max_w, max_part=n + 2, max_length=4):
            rep.check(
                qtilde_raising_ops(I, n) == qtilde(I, n), f"I={I} n={n}"
            )
    return rep


def suite_pfaffian_oracle(params=None):
    params = params or {}
    max_n = params.get("max_n", 4)
    max_w = params.get("max_weight", 10)
    rep = SuiteReport("pfaffian-oracle", unit="partitions")
    for n in range(1, max_n + 1):
        for I in partitions_up_to(max_w, max_part=n, max_length=6):
            matrix = qtilde_pfaffian_matrix(I, n)
            rep.check(
                pfaffian_oracle(matrix) == qtilde(I, n),
                f"pfaffian I={I} n={n}",
            )
            rep.check(
                laplace_expansions_agree(I, n), f"laplace I={I} n={n}"
            )
    return rep


# ---------------------------------------------------------------------------
# section 5: operators
# ---------------------------------------------------------------------------

def _random_poly(rng, n, max_degree=8, terms=6):
    out = Poly.zero(n)
    for _ in range(terms):
        exps = [0] * n
        budget = rng.randrange(max_degree + 1)
        for _ in range(budget):
            exps[rng.randrange(n)] += 1
        out = out + Poly.monomial(n, exps, rng.randrange(-4, 5))
    return out


def _random_reduced_word(w, rng):
    word = []
    cur = w
    cur_len = length(cur)
    while cur_len > 0:
        descents = []
        for g in range(cur.n):
            nxt = cur.right_gen(g)
            if length(nxt) < cur_len:
                descents.append((g, nxt))
        g, nxt = descents[rng.randrange(len(descents))]
        word.append(g)
        cur = nxt
        cur_len -= 1
    return tuple(reversed(word))


def _apply_word(word, f, group_type):
    for g in reversed(word):
        f = divided_difference(g, f, group_type)
    return f


def suite_dd_word_independence(params=None):
    params = params or {}
    max_n = params.get("max_n", 4)
    count = params.get("count", 20)
    rng = random.Random(params.get("seed", 20240901))
    rep = SuiteReport("dd-word-independence")
    for group_type in ("B", "C", "D"):
        for n in range(2 if group_type == "D" else 1, max_n + 1):
            elements = list(group_elements(n, group_type))
            for _ in range(count):
                w = elements[rng.randrange(len(elements))]
                f = _random_poly(rng, n)
                base = apply_dd(w, f)
                alt = _random_reduced_word(w, rng)
                rep.check(
                    _apply_word(alt, f, group_type) == base,
                    f"type {group_type} n={n} w={w}",
                )
            # nilpotence of the generators
            for g in range(n):
                f = _random_poly(rng, n)
                once = divided_difference(g, f, group_type)
                rep.check(
                    divided_difference(g, once, group_type).is_zero(),
                    f"dd_{g}^2 != 0, type {group_type} n={n}",
                )
    return rep


def suite_length_bfs(params=None):
    params = params or {}
    max_n = params.get("max_n", 3)
    rep = SuiteReport("length-bfs", unit="elements")
    for group_type in ("B", "C", "D"):
        for n in range(2 if group_type == "D" else 1, max_n + 1):
            gens = list(range(n))
            start = SignedPerm.identity(n, group_type)
            dist = {start: 0}
            frontier = [start]
            while frontier:
                nxt = []
                for w in frontier:
                    for g in gens:
                        v = w.right_gen(g)
                        if v not in dist:
                            dist[v] = dist[w] + 1
                            nxt.append(v)
                frontier = nxt
            for w in group_elements(n, group_type):
                rep.check(
                    length(w) == dist[w],
                    f"type {group_type} n={n} w={w}: "
                    f"formula {length(w)} vs BFS {dist[w]}",
                )
    return rep


def suite_symmetrizer(params=None):
    params = params or {}
    max_n = params.get("max_n", 3)
    count = params.get("count", 50)
    rng = random.Random(params.get("seed", 77002))
    rep = SuiteReport("symmetrizer")
    for group_type in ("B", "C", "D"):
        for n in range(2 if group_type == "D" else 1, max_n + 1):
            w0 = longest_element(n, group_type)
            for _ in range(count // max_n + 1):
                f = _random_poly(rng, n)
                rep.check(
                    symmetrizer_max(f, group_type, n) == apply_dd(w0, f),
                    f"type {group_type} n={n}",
                )
    # Jacobi symmetrizer sends x^alpha to s_{alpha - rho_{n-1}}
    for n in (2, 3):
        stair = tuple(range(n - 1, -1, -1))
        rep.check(
            jacobi_symmetrizer(Poly.monomial(n, stair), n) == Poly.one(n),
            f"jacobi staircase n={n}",
        )
    rep.check(
        jacobi_symmetrizer(Poly.monomial(3, (2, 2, 0)), 3).is_zero(),
        "jacobi repeated exponent",
    )
    rep.check(
        jacobi_symmetrizer(Poly.monomial(2, (3, 1)), 2) == schur_s((2, 1), 2),
        "jacobi (3,1) -> s_21",
    )
    # multiplicative restatement of the all-odd-exponent evaluation
    for n in (1, 2, 3):
        w0 = longest_element(n, "C")
        for _ in range(5):
            alpha = tuple(2 * rng.randrange(4) + 1 for _ in range(n))
            mono = Poly.monomial(n, alpha)
            lhs = schur_s(rho(n), n) * apply_dd(w0, mono)
            sign = (-1) ** (n * (n + 1) // 2)
            rhs = jacobi_symmetrizer(mono, n).scale(sign)
            rep.check(lhs == rhs, f"odd-exponent alpha={alpha} n={n}")
    # scalar property of nabla
    for n in (2, 3):
        scalars = [symfunc.e_squares(1, n), symfunc.e_squares(n, n)]
        for group_type in ("C", "D"):
            extra = [Poly.monomial(n, (1,) * n)] if group_type == "D" else []
            for f in scalars + extra:
                g = _random_poly(rng, n)
                lhs = weyl.nabla(f * g, group_type, n)
                rhs = f * weyl.nabla(g, group_type, n)
                rep.check(lhs == rhs, f"nabla scalar type {group_type} n={n}")
    return rep


def suite_lemma_5_4(params=None):
    params = params or {}
    max_n = params.get("max_n", 3)
    rep = SuiteReport("lemma-5-4")
    for n in range(1, max_n + 1):
        diff = qtilde(rho(n), n) - e_product(rho(n), n)
        rep.check(ideal_membership(diff, n, "C"), f"e-product form n={n}")
        diff2 = qtilde(rho(n), n) - schur_s(rho(n), n)
        rep.check(ideal_membership(diff2, n, "C"), f"schur form n={n}")
        rep.check(
            not ideal_membership(elementary_symmetric(1, n), n, "C")
            if n >= 1
            else True,
            f"e1 not in ideal n={n}",
        )
    return rep


def suite_lemma_5_17(params=None):
    params = params or {}
    max_n = params.get("max_n", 3)
    rep = SuiteReport("lemma-5-17")
    for n in range(2, max_n + 1):
        half = Fraction(1, 2 ** (n - 1))
        diff = ptilde(rho(n - 1), n) - e_product(rho(n - 1), n).scale(half)
        rep.check(ideal_membership(diff, n, "D"), f"e-product form n={n}")
        diff2 = ptilde(rho(n - 1), n) - schur_s(rho(n - 1), n).scale(half)
        rep.check(ideal_membership(diff2, n, "D"), f"schur form n={n}")
    return rep


def suite_prop_5_2(params=None):
    params = params or {}
    max_n = params.get("max_n", 4)
    rep = SuiteReport("prop-5-2", unit="determinants")
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            rep.check(qrho_determinant_identity(k, n), f"k={k} n={n}")
    # the hook-sum definition against the generating function
    for n in (2, 3):
        for i in range(0, 2 * n + 1):
            rep.check(
                symfunc.schur_q_one_row(i, n) == schur_q_generating_oracle(i, n),
                f"one-row oracle i={i} n={n}",
            )
    # Q_{rho_k} = 2^k s_{rho_k}
    for n in (2, 3, 4):
        for k in range(1, n + 1):
            rep.check(
                schur_q_classical(rho(k), n) == schur_s(rho(k), n).scale(2 ** k),
                f"staircase doubling k={k} n={n}",
            )
    return rep


def suite_prop_5_9(params=None):
    params = params or {}
    max_n = params.get("max_n", 3)
    rep = SuiteReport("prop-5-9", unit="partitions")
    for n in range(1, max_n + 1):
        for I in partitions_up_to(2 * n + 4, max_part=n):
            got = push_qtilde_operator(I, n, "lagrangian")
            rep.check(
                got == push_qtilde_closed(I, n, "lagrangian"),
                f"I={I} n={n}",
            )
    return rep


def suite_prop_5_11(params=None):
    params = params or {}
    max_n = params.get("max_n", 3)
    max_w = params.get("max_weight", 6)
    max_p = params.get("max_p", 3)
    rep = SuiteReport("prop-5-11", unit="identities")
    for n in range(1, max_n + 1):
        for p in range(1, max_p + 1):
            for I in partitions_up_to(max_w, max_length=n):
                rep.check(identity_5_11(I, p, n), f"I={I} p={p} n={n}")
    return rep


def _push_suite(name, geometry, params):
    params = params or {}
    max_n = params.get("max_n", 3)
    rep = SuiteReport(name, unit="partitions")
    lo = 2 if geometry == "even_orth" else 1
    for n in range(lo, max_n + 1):
        top = n - 1 if geometry == "even_orth" else n
        for I in partitions_up_to(2 * n + 4, max_part=top):
            closed = push_qtilde_closed(I, n, geometry)
            rep.check(
                closed == push_qtilde_operator(I, n, geometry),
                f"I={I} n={n} {geometry}",
            )
    return rep


def suite_thm_5_10(params=None):
    return _push_suite("thm-5-10", "lagrangian", params)


def suite_thm_5_14(params=None):
    return _push_suite("thm-5-14", "odd_orth", params)


def suite_thm_5_20(params=None):
    params = params or {}
    rep = _push_suite("thm-5-20", "even_orth", params)
    # parts equal to n are rejected for the even closed form
    try:
        push_qtilde_closed((3,), 3, "even_orth")
        rep.check(False, "part = n accepted")
    except ValueError:
        rep.check(True, "part = n rejected")
    return rep


def _schur_push_suite(name, geometries, params):
    params = params or {}
    max_n = params.get("max_n", 3)
    rep = SuiteReport(name, unit="partitions")
    for geometry in geometries:
        lo = 2 if geometry == "even_orth" else 1
        for n in range(lo, max_n + 1):
            top = n - 1 if geometry == "even_orth" else n
            for w in range(0, n * n + 1):
                for I in partitions_of(w, max_length=top):
                    closed = push_schur_closed_roots(I, n, geometry)
                    rep.check(
                        closed == push_schur_operator(I, n, geometry),
                        f"I={I} n={n} {geometry}",
                    )
    # s^[2] against hyperbolic roots: c_{2i}(V) -> (-1)^i e_i(x^2)
    for n in (2, 3):
        a = RootAssignment.hyperbolic(n)
        for I in partitions_up_to(4, max_length=n):
            lhs = s_bracket2(I, "V").specialize(a)
            rhs = schur_s(I, n).power_vars(2)
            rep.check(lhs == rhs, f"s^[2] roots I={I} n={n}")
    return rep


def suite_thm_5_13(params=None):
    return _schur_push_suite("thm-5-13", ("lagrangian", "odd_orth"), params)


def suite_thm_5_21(params=None):
    return _schur_push_suite("thm-5-21", ("even_orth",), params)


def suite_thm_5_23(params=None):
    params = params or {}
    rep = SuiteReport("thm-5-23", unit="pairs")
    if params.get("n"):
        grid = [(params.get("geometry", "lagrangian"), params["n"])]
    else:
        max_n = params.get("max_n", 3)
        grid = [
            (g, n)
            for g in _geometry_list(params)
            for n in range(2, max_n + 1)
        ]
    for geometry, n in grid:
        top = n - 1 if geometry == "even_orth" else n
        subsets = strict_subsets(top)
        for I in subsets:
            for J in subsets:
                got = orthogonality_check(I, J, n, geometry)
                rep.check(
                    got == orthogonality_expected(I, J, n, geometry),
                    f"I={I} J={J} n={n} {geometry}: got {got}",
                )
    return rep


def suite_prop_8_1(params=None):
    params = params or {}
    max_n = params.get("max_n", 3)
    rep = SuiteReport("prop-8-1", unit="push-forwards")
    for n in range(2, max_n + 1):
        for k in range(1, n):
            for I in strict_subsets(n):
                residual = push_partial_flag(I, k, n)
                for geometry, family in (
                    ("lagrangian", "qtilde"),
                    ("odd_orth", "ptilde"),
                ):
                    fam = qtilde if family == "qtilde" else ptilde
                    got = push_partial_flag_operator(I, k, n, geometry, family)
                    if residual is None:
                        rep.check(
                            got.is_zero(), f"I={I} k={k} n={n} {geometry}"
                        )
                    else:
                        want = fam(residual, n).negate_vars()
                        rep.check(
                            got == want, f"I={I} k={k} n={n} {geometry}"
                        )
    return rep


# ---------------------------------------------------------------------------
# sections 3, 7, 9: formula reproduction
# ---------------------------------------------------------------------------

EXAMPLE_7_5 = {
    1: "Qt[2,1](R~) + Qt[2](R~)*s[1](V[n]~)"
    " + Qt[1](R~)*s[1](V[n-1]~)*s[1](V[n]~) - Qt[1](R~)*s[2](V[n-1]~)"
    " + s[1](V[n-1]~)*s[2](V[n]~) - s[3](V[n-1]~) - s[3](V[n]~)"
    " - c[2](V)*s[1](V[n]~)",
    2: "Qt[3,1](R~) + Qt[3](R~)*s[1](V[n]~) + Qt[2,1](R~)*s[1](V[n-2]~)"
    " + Qt[2](R~)*s[1](V[n-2]~)*s[1](V[n]~)"
    " + Qt[1](R~)*s[2](V[n-2]~)*s[1](V[n]~) - Qt[1](R~)*s[3](V[n-2]~)"
    " + s[2](V[n-2]~)*s[2](V[n]~) - s[4](V[n-2]~)"
    " - s[1](V[n-2]~)*s[3](V[n]~) + s[4](V[n]~)"
    " - c[2](V)*s[1](V[n-2]~)*s[1](V[n]~) + c[2](V)*s[2](V[n]~) + c[4](V)",
    3: "Qt[3,2](R~) + Qt[3,1](R~)*s[1](V[n-1]~) + Qt[3](R~)*s[2](V[n-1]~)"
    " + Qt[2,1](R~)*s[1,1](V[n-1]~) + Qt[2](R~)*s[2,1](V[n-1]~)"
    " + Qt[1](R~)*s[2,2](V[n-1]~) + s[3,2](V[n-1]~) - s[4,1](V[n-1]~)"
    " + s[5](V[n-1]~) - c[2](V)*s[2,1](V[n-1]~) + c[2](V)*s[3](V[n-1]~)"
    " + c[4](V)*s[1](V[n-1]~)",
}

THM_7_9_DISPLAY = (
    "Pt[2,1](R~) + Pt[2](R~)*Pt[1](V[n]~) + Pt[1](R~)*Pt[2](V[n]~)"
    " + Pt[2,1](V[n]~)"
)


def _two_forms_assignment(n):
    a = RootAssignment(2 * n)
    a.assign_vars(f"V[{n}]", range(1, n + 1))
    a.assign_vars(f"V[{n - 1}]", range(1, n))
    xs = [Poly.var(i, 2 * n) for i in range(1, n + 1)]
    a.assign("V", xs + [-x for x in xs])
    a.assign_vars("R~", range(n + 1, 2 * n + 1))
    return a


def suite_example_7_5(params=None):
    rep = SuiteReport("example-7-5")
    rep.check(
        class_two_conditions(2, 1, None, "lagrangian").render()
        == EXAMPLE_7_5[1],
        "7.5.1 string",
    )
    rep.check(
        class_two_conditions(3, 1, None, "lagrangian").render()
        == EXAMPLE_7_5[2],
        "7.5.2 string",
    )
    rep.check(
        class_two_conditions_adjacent(3, None).render() == EXAMPLE_7_5[3],
        "7.5.3 string",
    )
    # the two displayed forms of 7.5.1 agree on Chern roots at n = 3
    n = 3
    long_form = class_two_conditions(2, 1, n, "lagrangian")
    short_form = class_maximal_isotropic(2, "lagrangian", ("R", f"V[{n}]"))
    a = _two_forms_assignment(n)
    rep.check(
        long_form.specialize(a) == short_form.specialize(a),
        "7.5.1 forms agree at n=3",
    )
    # the odd analogue display
    rep.check(
        class_maximal_isotropic(2, "odd_orth", ("R", "V[n]")).render()
        == THM_7_9_DISPLAY,
        "odd two-condition display",
    )
    return rep


EXAMPLE_3_3 = {
    1: "Qt[1](D~) + Qt[1](R~)",
    2: "Qt[2,1](D~) + Qt[2](D~)*Qt[1](R~) + Qt[1](D~)*Qt[2](R~)"
    " + Qt[2,1](R~)",
    3: "Qt[3,2,1](D~) + Qt[3,2](D~)*Qt[1](R~) + Qt[3,1](D~)*Qt[2](R~)"
    " + Qt[2,1](D~)*Qt[3](R~) + Qt[3](D~)*Qt[2,1](R~)"
    " + Qt[2](D~)*Qt[3,1](R~) + Qt[1](D~)*Qt[3,2](R~) + Qt[3,2,1](R~)",
}

EXAMPLE_9_2 = {
    k: text.replace("(D~)", "(E~)").replace("(R~)", "(F~)")
    for k, text in EXAMPLE_3_3.items()
}

EXAMPLE_9_4 = {
    1: "c[1](E~) + s[1](F~)",
    2: "c[2](E~) + c[1](E~)*s[1](F[n-1]~) + s[2](F[n-1]~)",
    3: "c[3](E~) + c[2](E~)*s[1](F[n-2]~) + c[1](E~)*s[2](F[n-2]~)"
    " + s[3](F[n-2]~)",
}

EXAMPLE_9_7 = {
    1: "1",
    2: "Pt[1](E~) + Pt[1](F~)",
    3: "Pt[2,1](E~) + Pt[2](E~)*Pt[1](F~) + Pt[1](E~)*Pt[2](F~)"
    " + Pt[2,1](F~)",
    4: "Pt[3,2,1](E~) + Pt[3,2](E~)*Pt[1](F~) + Pt[3,1](E~)*Pt[2](F~)"
    " + Pt[2,1](E~)*Pt[3](F~) + Pt[3](E~)*Pt[2,1](F~)"
    " + Pt[2](E~)*Pt[3,1](F~) + Pt[1](E~)*Pt[3,2](F~) + Pt[3,2,1](F~)",
}


def suite_examples_9(params=None):
    params = params or {}
    rep = SuiteReport("examples-9")
    for k, text in EXAMPLE_3_3.items():
        got = class_maximal_isotropic(k, "lagrangian", ("D", "R")).render()
        rep.check(got == text, f"3.3 k={k}: got {got!r}")
    for k, text in EXAMPLE_9_2.items():
        got = class_maximal_isotropic(k, "lagrangian").render()
        rep.check(got == text, f"9.2 k={k}: got {got!r}")
    for i, text in EXAMPLE_9_4.items():
        got = class_single_condition(i, None, "lagrangian").render()
        rep.check(got == text, f"9.4 i={i}: got {got!r}")
    for k, text in EXAMPLE_9_7.items():
        got = class_maximal_isotropic(k, "even_orth").render()
        rep.check(got == text, f"9.7 k={k}: got {got!r}")
    # the theorem form at j = i-1 agrees with the compact form, with flag
    # roots assigned and all other classes treated as free symbols
    max_n = params.get("max_n", 5)
    for n in range(2, max_n + 1):
        for i in range(2, min(4, n) + 1):
            lhs = class_two_conditions(i, i - 1, n, "lagrangian")
            rhs = class_two_conditions_adjacent(i, n)
            a = RootAssignment(n + 2 - i)
            a.assign_vars(f"V[{n + 1 - i}]", range(1, n + 2 - i))
            a.assign_vars(f"V[{n + 2 - i}]", range(1, n + 3 - i))
            rep.check(equal_on_roots(lhs, rhs, a), f"7.4 vs 7.6 i={i} n={n}")
    # the maximal-isotropic class recomputed through the partial-flag rule
    for n in range(2, params.get("max_n_flag", 4) + 1):
        for k in range(1, min(3, n - 1) + 1):
            direct = class_maximal_isotropic(k, "lagrangian", ("V[n]", "R"))
            pushed = maximal_isotropic_from_diagonal(k, n)
            rep.check(
                direct.equivalent(pushed), f"maximal recomputation k={k} n={n}"
            )
    # homogeneity of every emitted family
    for k in (1, 2, 3):
        for geometry in GEOMETRIES:
            deg = class_maximal_isotropic(k, geometry).degree()
            want = (k - 1) * k // 2 if geometry == "even_orth" else k * (k + 1) // 2
            rep.check(deg == want, f"degree maximal k={k} {geometry}")
    for i in (1, 2, 3):
        for geometry in GEOMETRIES:
            deg = class_single_condition(i, None, geometry).degree()
            rep.check(deg == i, f"degree single i={i} {geometry}")
    for i, j in ((2, 1), (3, 1), (3, 2)):
        for geometry in ("lagrangian", "odd_orth"):
            deg = class_two_conditions(i, j, None, geometry).degree()
            rep.check(deg == i + j, f"degree two ({i},{j}) {geometry}")
    return rep


def suite_appendix_b(params=None):
    params = params or {}
    rep = SuiteReport("appendix-b")
    table = {
        (-1, -2): "-x1^3*x2 - x1^2*x2^2",
        (1, -2): "-x1^2*x2",
        (-2, -1): "x1^2*x2 + x1*x2^2",
        (-2, 1): "x1*x2",
        (2, -1): "x2^2",
        (2, 1): "x2",
        (-1, 2): "x1 + x2",
        (1, 2): "1",
    }
    for entries, expected in table.items():
        got = c_w(SignedPerm(entries, "C")).render()
        rep.check(got == expected, f"C_{entries}: got {got!r}")
    # stability: W_2 embedded in W_3, x3 := 0
    for w2 in group_elements(2, "C"):
        w3 = SignedPerm(w2.entries + (3,), "C")
        lifted = c_w(w3).set_vars_zero([3]).restrict_arity(2)
        rep.check(lifted == c_w(w2), f"stability {w2}")
    # Grassmannian case at n = 3
    for I in strict_subsets(3):
        wI = grassmannian_element(I, 3)
        rep.check(c_w(wI) == qtilde(I, 3), f"grassmannian I={I}")
    # degree = length
    max_n = params.get("max_n", 3)
    for n in range(1, max_n + 1):
        for w in group_elements(n, "C"):
            poly = c_w(w)
            rep.check(
                poly.degree() == length(w) and poly.is_homogeneous(),
                f"degree {w} n={n}",
            )
    return rep


def suite_integrality(params=None):
    """Denominator discipline of the emitted formulas.

    The lagrangian formulas are integral outright.  For the orthogonal
    cases the displayed rational prefactors (1/2 for the single condition,
    1/4 for two conditions, 2^{-l} inside Pt blocks) bound the denominators
    of the fully expanded Chern-class form; the Chow-class integrality
    itself is a geometric statement about the tautological basis and is not
    re-derivable at symbol level.
    """
    params = params or {}
    max_n = params.get("max_n", 5)
    rep = SuiteReport("integrality", unit="formulas")
    for i in range(1, max_n + 1):
        expr = class_single_condition(i, max_n, "lagrangian").to_chern()
        rep.check(expr.coefficients_integral(), f"6.1 i={i}")
        expr = class_single_condition(i, max_n, "odd_orth").to_chern()
        rep.check(expr.denominator_lcm() <= 2, f"6.2 i={i}")
        if i < max_n:
            expr = class_single_condition(i, max_n, "even_orth").to_chern()
            rep.check(expr.denominator_lcm() <= 2, f"6.3 i={i}")
            # the p = 0 halves combine to an integral leading piece
            mono = ((("V[" + str(max_n - i) + "]~", "s", i), 1),)
            rep.check(
                expr.terms.get(mono) == 1, f"6.3 combined constant term i={i}"
            )
    for i in range(2, max_n + 1):
        for j in range(1, i):
            expr = class_two_conditions(i, j, max_n, "lagrangian").to_chern()
            rep.check(expr.coefficients_integral(), f"7.4 ({i},{j})")
            expr = class_two_conditions(i, j, max_n, "odd_orth").to_chern()
            rep.check(expr.denominator_lcm() <= 4, f"7.9 ({i},{j})")
    for k in range(1, 4):
        expr = class_maximal_isotropic(k, "lagrangian").to_chern()
        rep.check(expr.coefficients_integral(), f"9.1 k={k}")
        expr = class_maximal_isotropic(k, "odd_orth").to_chern()
        rep.check(expr.denominator_lcm() <= 2 ** k, f"9.5 k={k}")
    return rep


SUITES = {
    "example-4-5": suite_example_4_5,
    "example-4-6": suite_example_4_6,
    "pieri": suite_pieri,
    "factorization": suite_factorization,
    "vanishing": suite_vanishing,
    "positivity": suite_positivity,
    "raising-ops": suite_raising_ops,
    "pfaffian-oracle": suite_pfaffian_oracle,
    "dd-word-independence": suite_dd_word_independence,
    "length-bfs": suite_length_bfs,
    "symmetrizer": suite_symmetrizer,
    "lemma-5-4": suite_lemma_5_4,
    "lemma-5-17": suite_lemma_5_17,
    "prop-5-2": suite_prop_5_2,
    "prop-5-9": suite_prop_5_9,
    "prop-5-11": suite_prop_5_11,
    "thm-5-10": suite_thm_5_10,
    "thm-5-13": suite_thm_5_13,
    "thm-5-14": suite_thm_5_14,
    "thm-5-20": suite_thm_5_20,
    "thm-5-21": suite_thm_5_21,
    "thm-5-23": suite_thm_5_23,
    "prop-8-1": suite_prop_8_1,
    "example-7-5": suite_example_7_5,
    "examples-9": suite_examples_9,
    "appendix-b": suite_appendix_b,
    "integrality": suite_integrality,
}

ALIASES = {"orthogonality": "thm-5-23"}


def run_suite(name, params=None):
    name = ALIASES.get(name, name)
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](params or {})


def run_all(params=None):
    return [run_suite(name, params) for name in SUITES]
