"""Barred permutations (Weyl groups of types B, C, D) and their divided
differences.

Elements are stored as signed one-line tuples: entry w_i is the image of i,
negative when barred.  The generator systems are the nonstandard ones with
s_0 = (-1, 2, ..., n) for types B and C (generator index 0) and
s_{1bar} = (-2, -1, 3, ..., n) for type D (also index 0 here), plus the
adjacent transpositions s_1 .. s_{n-1}.  Lengths, reduced words and all
operators refer to these systems.

A barred permutation acts on polynomials by sending argument slot i to
sign(w_i) * x_{|w_i|}; with the product rule (v*w)_i = sign(w_i) * v_{|w_i|}
this is a left action.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .polyring import Poly, elementary_symmetric, exact_divide, vandermonde

GROUP_TYPES = ("B", "C", "D")


@dataclass(frozen=True)
class SignedPerm:
    """An element of the Weyl group W_n of type B, C or D."""

    entries: tuple
    group_type: str = "C"

    def __post_init__(self):
        if self.group_type not in GROUP_TYPES:
            raise ValueError(f"unknown group type {self.group_type!r}")
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        if sorted(abs(e) for e in entries) != list(range(1, n + 1)):
            raise ValueError(f"{entries} is not a signed permutation")
        if self.group_type == "D" and self.bar_count % 2 != 0:
            raise ValueError("type D requires an even number of bars")

    @property
    def n(self):
        return len(self.entries)

    @property
    def word(self):
        """The underlying permutation sigma, as absolute values."""
        return tuple(abs(e) for e in self.entries)

    @property
    def bars(self):
        """The sign vector tau."""
        return tuple(1 if e > 0 else -1 for e in self.entries)

    @property
    def bar_count(self):
        return sum(1 for e in self.entries if e < 0)

    def is_identity(self):
        return self.entries == tuple(range(1, self.n + 1))

    def __mul__(self, other):
        """Group product: (v*w)_i = sign(w_i) * v_{|w_i|}; acting on
        polynomials, v*w acts as v after w."""
        if self.n != other.n:
            raise ValueError("rank mismatch")
        new = tuple(
            self.entries[abs(wi) - 1] * (1 if wi > 0 else -1)
            for wi in other.entries
        )
        return SignedPerm(new, self.group_type)

    def inverse(self):
        out = [0] * self.n
        for i, wi in enumerate(self.entries, start=1):
            out[abs(wi) - 1] = i if wi > 0 else -i
        return SignedPerm(tuple(out), self.group_type)

    def apply(self, f):
        """Action on a polynomial of matching arity."""
        if f.n != self.n:
            raise ValueError("arity mismatch")
        return f.signed_permute(self.entries)

    def right_gen(self, i):
        """Right multiplication by generator s_i (structural fast path)."""
        e = list(self.entries)
        if i == 0:
            if self.group_type == "D":
                e[0], e[1] = -e[1], -e[0]
            else:
                e[0] = -e[0]
        else:
            e[i - 1], e[i] = e[i], e[i - 1]
        return SignedPerm(tuple(e), self.group_type)

    @classmethod
    def identity(cls, n, group_type="C"):
        return cls(tuple(range(1, n + 1)), group_type)

    @classmethod
    def parse(cls, text, group_type="C"):
        """Parse "-3,1,-2" as the barred permutation (3bar, 1, 2bar)."""
        return cls(tuple(int(p) for p in text.split(",")), group_type)

    def __str__(self):
        return ",".join(str(e) for e in self.entries)


def generators(n, group_type="C"):
    """The generator system S: index 0 is s_0 (B/C) or s_1bar (D)."""
    gens = []
    if group_type == "D":
        if n < 2:
            raise ValueError("type D needs n >= 2")
        gens.append(SignedPerm((-2, -1) + tuple(range(3, n + 1)), "D"))
    else:
        gens.append(
            SignedPerm((-1,) + tuple(range(2, n + 1)), group_type)
        )
    for i in range(1, n):
        e = list(range(1, n + 1))
        e[i - 1], e[i] = e[i], e[i - 1]
        gens.append(SignedPerm(tuple(e), group_type))
    return gens


def length(w):
    """Length w.r.t. the nonstandard generator system.

    Types B/C: sum a_i + sum over barred j of (2 b_j + 1); type D replaces
    2 b_j + 1 by 2 b_j.  Here a_i counts p > i with sigma_p < sigma_i and
    b_j counts p < j with sigma_p < sigma_j.
    """
    sigma = w.word
    n = w.n
    total = 0
    for i in range(n):
        total += sum(1 for p in range(i + 1, n) if sigma[p] < sigma[i])
    for j in range(n):
        if w.entries[j] < 0:
            b = sum(1 for p in range(j) if sigma[p] < sigma[j])
            total += 2 * b if w.group_type == "D" else 2 * b + 1
    return total


@lru_cache(maxsize=None)
def _reduced_word_cached(entries, group_type):
    w = SignedPerm(entries, group_type)
    n = w.n
    word = []
    cur = w
    cur_len = length(cur)
    while cur_len > 0:
        for g in range(n):
            if group_type == "D" and n < 2:
                break
            nxt = cur.right_gen(g)
            nxt_len = length(nxt)
            if nxt_len < cur_len:
                word.append(g)
                cur, cur_len = nxt, nxt_len
                break
        else:
            raise AssertionError(f"no descent found for {cur}")
    # collected right-to-left: w = s_{g_last} ... s_{g_first}
    return tuple(reversed(word))


def reduced_word(w):
    """A reduced word for w: generator indices with w = s_{i_1} ... s_{i_l},
    built by greedy descent with lowest index first."""
    return _reduced_word_cached(w.entries, w.group_type)


# ---------------------------------------------------------------------------
# divided differences
# ---------------------------------------------------------------------------

def divided_difference(i, f, group_type="C"):
    """The divided difference for generator i acting on f.

    For i >= 1: (f - s_i f) / (x_i - x_{i+1}).  For i = 0 the root
    direction depends on the type: -2x_1 (C), -x_1 (B), -x_1 - x_2 (D).
    """
    n = f.n
    if i == 0:
        if group_type == "C":
            num = f - f.negate_var(1)
            den = Poly.var(1, n).scale(-2)
        elif group_type == "B":
            num = f - f.negate_var(1)
            den = Poly.var(1, n).scale(-1)
        elif group_type == "D":
            if n < 2:
                raise ValueError("type D needs n >= 2")
            swapped = f.signed_permute((-2, -1) + tuple(range(3, n + 1)))
            num = f - swapped
            den = -(Poly.var(1, n) + Poly.var(2, n))
        else:
            raise ValueError(f"unknown group type {group_type!r}")
    elif 1 <= i <= n - 1:
        num = f - f.swap_vars(i, i + 1)
        den = Poly.var(i, n) - Poly.var(i + 1, n)
    else:
        raise ValueError(f"generator index {i} out of range for arity {n}")
    return exact_divide(num, den)


def apply_dd(w, f):
    """The composed operator along a reduced word of w, applied to f.

    With word (i_1, ..., i_l) the composition is dd_{i_1} o ... o dd_{i_l},
    so dd_{i_l} is applied first.
    """
    if f.n < w.n:
        raise ValueError("polynomial arity below group rank")
    for g in reversed(reduced_word(w)):
        f = divided_difference(g, f, w.group_type)
    return f


def dd_prime(i, f):
    """Appendix-style primed divided differences (type C only):
    sign-flipped root directions 2x_1 and x_{i+1} - x_i."""
    n = f.n
    if i == 0:
        num = f - f.negate_var(1)
        den = Poly.var(1, n).scale(2)
    elif 1 <= i <= n - 1:
        num = f - f.swap_vars(i, i + 1)
        den = Poly.var(i + 1, n) - Poly.var(i, n)
    else:
        raise ValueError(f"generator index {i} out of range for arity {n}")
    return exact_divide(num, den)


def apply_dd_prime(w, f):
    """Composition of primed divided differences along reduced_word(w)."""
    if w.group_type != "C":
        raise ValueError("primed operators are defined for type C")
    for g in reversed(reduced_word(w)):
        f = dd_prime(g, f)
    return f


# ---------------------------------------------------------------------------
# distinguished elements
# ---------------------------------------------------------------------------

def longest_element(n, group_type="C"):
    if group_type in ("B", "C"):
        return SignedPerm(tuple(-i for i in range(1, n + 1)), group_type)
    if n % 2 == 0:
        return SignedPerm(tuple(-i for i in range(1, n + 1)), "D")
    return SignedPerm((1,) + tuple(-i for i in range(2, n + 1)), "D")


def nabla_element(n, group_type="C"):
    """(nbar, ..., 2bar, 1bar), with the last entry unbarred for type D
    at odd n."""
    entries = tuple(-i for i in range(n, 0, -1))
    if group_type == "D" and n % 2 == 1:
        entries = entries[:-1] + (1,)
    return SignedPerm(entries, group_type)


def w_k_element(k, n, group_type="C"):
    """w^(k) = (nbar, ..., (k+1)bar; 1, ..., k) for 0 < k < n."""
    if not 0 < k < n:
        raise ValueError("need 0 < k < n")
    entries = tuple(-i for i in range(n, k, -1)) + tuple(range(1, k + 1))
    return SignedPerm(entries, group_type)


def nabla(f, group_type, n):
    """The maximal-isotropic Gysin operator: apply_dd for the nabla element."""
    return apply_dd(nabla_element(n, group_type), f)


def group_elements(n, group_type="C"):
    """Iterate over all of W_n (mind the sizes: 2^n n! for B/C)."""
    for sigma in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            if group_type == "D" and signs.count(-1) % 2:
                continue
            yield SignedPerm(
                tuple(s * v for s, v in zip(signs, sigma)), group_type
            )


# ---------------------------------------------------------------------------
# symmetrizers
# ---------------------------------------------------------------------------

def _signed_group_sum(f, n, group_type):
    total = Poly.zero(n)
    for w in group_elements(n, group_type):
        g = w.apply(f)
        if length(w) % 2:
            g = -g
        total = total + g
    return total


def symmetrizer_max(f, group_type, n):
    """The longest divided difference via the closed summation formula.

    Equals apply_dd(longest_element, f); the sum has |W_n| terms, so n is
    guarded to at most 5.
    """
    if n > 5:
        raise ValueError("symmetrizer sum is guarded to n <= 5")
    if f.n != n:
        raise ValueError("arity mismatch")
    num = _signed_group_sum(f, n, group_type)
    squares = Poly.one(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            squares = squares * (
                Poly.var(i, n) ** 2 - Poly.var(j, n) ** 2
            )
    if group_type == "C":
        sign = (-1) ** (n * (n + 1) // 2)
        den = squares.scale(2 ** n)
        for i in range(1, n + 1):
            den = den * Poly.var(i, n)
    elif group_type == "B":
        sign = (-1) ** (n * (n + 1) // 2)
        den = squares
        for i in range(1, n + 1):
            den = den * Poly.var(i, n)
    elif group_type == "D":
        sign = (-1) ** (n * (n - 1) // 2)
        den = squares
    else:
        raise ValueError(f"unknown group type {group_type!r}")
    return exact_divide(num.scale(sign), den)


def jacobi_symmetrizer(f, n):
    """The type-A symmetrizer: antisymmetrization over S_n divided by the
    Vandermonde determinant.  Sends x^alpha to s_{alpha - rho_{n-1}}."""
    if f.n != n:
        raise ValueError("arity mismatch")
    total = Poly.zero(n)
    for sigma in itertools.permutations(range(1, n + 1)):
        g = f.signed_permute(sigma)
        inv = sum(
            1
            for a in range(n)
            for b in range(a + 1, n)
            if sigma[a] > sigma[b]
        )
        total = total + (-g if inv % 2 else g)
    return exact_divide(total, vandermonde(n))


# ---------------------------------------------------------------------------
# coinvariant-ideal membership
# ---------------------------------------------------------------------------

def ideal_generators(n, group_type="C"):
    """Generators of the coinvariant ideal: e_i(x^2) for i = 1..n (B/C);
    for D, e_i(x^2) for i = 1..n-1 together with x_1...x_n."""
    if group_type in ("B", "C"):
        return [elementary_symmetric(i, n).power_vars(2) for i in range(1, n + 1)]
    gens = [elementary_symmetric(i, n).power_vars(2) for i in range(1, n)]
    gens.append(Poly.monomial(n, (1,) * n))
    return gens


def _monomials_of_degree(n, d):
    if d == 0:
        yield (0,) * n
        return
    for cuts in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        exps = []
        for c in cuts:
            exps.append(c - prev - 1)
            prev = c
        exps.append(d + n - 2 - prev)
        yield tuple(exps)


class _RowReducer:
    """Incremental exact Gaussian elimination over the rationals."""

    def __init__(self):
        self.pivots = {}  # leading column -> reduced row (dict col -> coeff)

    def reduce(self, row):
        row = dict(row)
        while row:
            lead = min(row)
            if lead not in self.pivots:
                return row, lead
            piv = self.pivots[lead]
            factor = Fraction(row[lead], piv[lead])
            for col, c in piv.items():
                s = row.get(col, Fraction(0)) - factor * c
                if s:
                    row[col] = s
                else:
                    row.pop(col, None)
        return row, None

    def insert(self, row):
        reduced, lead = self.reduce(row)
        if lead is not None:
            self.pivots[lead] = reduced
        return lead

    def contains(self, row):
        reduced, _ = self.reduce(row)
        return not reduced


def ideal_membership(f, n, group_type="C"):
    """Exact degree-by-degree membership test for the coinvariant ideal.

    Works with monomial multiples of the generators; for symmetric f this
    decides membership in the ideal generated inside the symmetric subring
    (the polynomial ring is a free module over it).
    """
    if f.n != n:
        raise ValueError("arity mismatch")
    if n > 4 or f.degree() > 24:
        raise ValueError("membership test guarded to n <= 4, degree <= 24")
    if not f.is_symmetric():
        raise ValueError("membership is decided for symmetric polynomials")
    gens = ideal_generators(n, group_type)
    for d, piece in f.homogeneous_components().items():
        if piece.is_zero():
            continue
        reducer = _RowReducer()
        for g in gens:
            gd = g.degree()
            if gd > d:
                continue
            for mono in _monomials_of_degree(n, d - gd):
                row = {
                    tuple(a + b for a, b in zip(mono, e)): Fraction(c)
                    for e, c in g.terms.items()
                }
                reducer.insert(row)
        target = {e: Fraction(c) for e, c in piece.terms.items()}
        if not reducer.contains(target):
            return False
    return True
