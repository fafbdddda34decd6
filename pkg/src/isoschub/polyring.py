"""Exact sparse multivariate polynomials over the rationals.

The carrier type for the whole library.  A :class:`Poly` has a fixed
variable count ``n``; terms map length-``n`` exponent tuples to nonzero
coefficients.  Coefficients are Python ints or ``fractions.Fraction``
(always exact, never floats); integer values are stored as plain ints so
the common all-integer computations stay on the fast path.

Values are immutable by convention: no public operation mutates a Poly.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache


class NonExactDivision(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


def _norm(c):
    """Collapse Fractions with denominator 1 to plain ints."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _grevlex_key(exps):
    # graded reverse-lexicographic: compare total degree first, then
    # reversed-negated exponents; sorting descending on this key gives
    # the canonical term order used for printing and division.
    return (sum(exps), tuple(-e for e in reversed(exps)))


class Poly:
    """Sparse polynomial in variables x1..xn with rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        if n < 0:
            raise ValueError("variable count must be >= 0")
        self.n = n
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for arity {n}")
            c = _norm(c)
            if c:
                clean[exps] = c
        self.terms = clean

    @classmethod
    def _make(cls, n, terms):
        # internal fast path: terms already normalized, ownership transferred
        p = object.__new__(cls)
        p.n = n
        p.terms = terms
        return p

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls._make(n, {})

    @classmethod
    def const(cls, n, c):
        c = _norm(c)
        return cls._make(n, {(0,) * n: c} if c else {})

    @classmethod
    def one(cls, n):
        return cls.const(n, 1)

    @classmethod
    def var(cls, i, n):
        """The variable x_i (1-indexed)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        exps = tuple(1 if k == i - 1 else 0 for k in range(n))
        return cls._make(n, {exps: 1})

    @classmethod
    def monomial(cls, n, exps, c=1):
        return cls(n, {tuple(exps): c})

    # -- ring structure ----------------------------------------------------

    def _check_arity(self, other):
        if self.n != other.n:
            raise ValueError(f"arity mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(self.n, other)
        self._check_arity(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = _norm(terms.get(exps, 0) + c)
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return Poly._make(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._make(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check_arity(other)
        # iterate over the smaller factor
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly._make(self.n, {e: _norm(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c):
        c = _norm(c)
        if not c:
            return Poly.zero(self.n)
        return Poly._make(self.n, {e: _norm(k * c) for e, k in self.terms.items()})

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            if self.is_zero() and other == 0:
                return True
            return self.terms == {(0,) * self.n: _norm(other)}
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Poly({self.n}, {self.render()!r})"

    # -- inspection --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant(self):
        """The constant coefficient."""
        return self.terms.get((0,) * self.n, 0)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def homogeneous_component(self, d):
        return Poly._make(self.n, {e: c for e, c in self.terms.items() if sum(e) == d})

    def homogeneous_components(self):
        out = {}
        for e, c in self.terms.items():
            out.setdefault(sum(e), {})[e] = c
        return {d: Poly._make(self.n, t) for d, t in sorted(out.items())}

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def is_symmetric(self):
        """Invariance under all adjacent variable transpositions."""
        for i in range(1, self.n):
            if self.swap_vars(i, i + 1) != self:
                return False
        return True

    # -- substitutions -----------------------------------------------------

    def signed_permute(self, w):
        """Apply a signed permutation: slot i of the polynomial receives
        sign(w_i) * x_{|w_i|}, for w given as a signed one-line tuple."""
        if len(w) != self.n:
            raise ValueError("signed permutation arity mismatch")
        out = {}
        for exps, c in self.terms.items():
            new = [0] * self.n
            sign = 1
            for i, e in enumerate(exps):
                wi = w[i]
                new[abs(wi) - 1] = e
                if wi < 0 and e % 2:
                    sign = -sign
            key = tuple(new)
            s = out.get(key, 0) + sign * c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return Poly._make(self.n, out)

    def swap_vars(self, i, j):
        w = list(range(1, self.n + 1))
        w[i - 1], w[j - 1] = j, i
        return self.signed_permute(tuple(w))

    def negate_var(self, i):
        w = list(range(1, self.n + 1))
        w[i - 1] = -i
        return self.signed_permute(tuple(w))

    def negate_vars(self):
        """f(-x1, ..., -xn): scales every term by (-1)^degree."""
        return Poly._make(
            self.n,
            {e: (-c if sum(e) % 2 else c) for e, c in self.terms.items()},
        )

    def power_vars(self, p):
        """Substitute x_i -> x_i^p."""
        if p < 1:
            raise ValueError("power must be >= 1")
        return Poly._make(
            self.n, {tuple(x * p for x in e): c for e, c in self.terms.items()}
        )

    def set_vars_zero(self, indices):
        """Set the listed variables (1-indexed) to zero; arity unchanged."""
        kill = {i - 1 for i in indices}
        return Poly._make(
            self.n,
            {e: c for e, c in self.terms.items() if all(e[k] == 0 for k in kill)},
        )

    def embed(self, m):
        """View in a larger ring x1..xm (m >= n), exponents padded with 0."""
        if m < self.n:
            raise ValueError("embed target smaller than arity")
        pad = (0,) * (m - self.n)
        return Poly._make(m, {e + pad: c for e, c in self.terms.items()})

    def shift_vars(self, offset, m):
        """View in x1..xm with variable i renamed to i+offset."""
        if offset < 0 or self.n + offset > m:
            raise ValueError("shift out of range")
        pre = (0,) * offset
        post = (0,) * (m - self.n - offset)
        return Poly._make(m, {pre + e + post: c for e, c in self.terms.items()})

    def restrict_arity(self, m):
        """Drop unused trailing variables; requires they never occur."""
        if m > self.n:
            raise ValueError("use embed to grow arity")
        out = {}
        for e, c in self.terms.items():
            if any(e[m:]):
                raise ValueError("polynomial involves a discarded variable")
            out[e[:m]] = c
        return Poly._make(m, out)

    def eval_at(self, point):
        """Evaluate at a rational point (sequence of length n)."""
        if len(point) != self.n:
            raise ValueError("point arity mismatch")
        total = Fraction(0)
        for exps, c in self.terms.items():
            v = Fraction(c)
            for x, e in zip(point, exps):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return _norm(total)

    # -- leading terms and division ----------------------------------------

    def lead_grevlex(self):
        """(exponents, coeff) of the grevlex-leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grevlex_key)
        return e, self.terms[e]

    def lead_lex(self):
        """(exponents, coeff) of the lex-leading term (x1 heaviest)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self):
        """Terms in descending grevlex order."""
        return sorted(self.terms.items(), key=lambda t: _grevlex_key(t[0]), reverse=True)

    def render(self, varname="x"):
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"{varname}{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e
            )
            neg = c < 0
            a = -c if neg else c
            if mono and a == 1:
                body = mono
            elif mono:
                body = f"{a}*{mono}"
            else:
                body = f"{a}"
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append(("- " if neg else "+ ") + body)
        return " ".join(pieces)

    def to_json(self):
        out = []
        for exps, c in self.sorted_terms():
            f = Fraction(c)
            out.append({"exponents": list(exps), "num": f.numerator, "den": f.denominator})
        return {"n": self.n, "terms": out}

    @classmethod
    def from_json(cls, data):
        n = data["n"]
        terms = {}
        for t in data["terms"]:
            c = Fraction(t["num"], t.get("den", 1))
            e = tuple(t["exponents"])
            terms[e] = terms.get(e, 0) + c
        return cls(n, terms)


def exact_divide(f, g):
    """Exact quotient f/g; raises NonExactDivision on a nonzero remainder.

    Single-divisor division in grevlex order.  When f = q*g this always
    terminates with the exact quotient; divisibility failure surfaces as an
    underivable leading term.
    """
    if not isinstance(f, Poly) or not isinstance(g, Poly):
        raise TypeError("exact_divide expects Poly arguments")
    f._check_arity(g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ge, gc = g.lead_grevlex()
    q = {}
    r = dict(f.terms)
    while r:
        re = max(r, key=_grevlex_key)
        diff = tuple(a - b for a, b in zip(re, ge))
        if any(d < 0 for d in diff):
            raise NonExactDivision("division is not exact")
        c = _norm(Fraction(r[re], gc) if isinstance(r[re], int) and isinstance(gc, int)
                  else r[re] / gc)
        q[diff] = c
        # r -= c * x^diff * g
        for e2, c2 in g.terms.items():
            key = tuple(a + b for a, b in zip(diff, e2))
            s = _norm(r.get(key, 0) - c * c2)
            if s:
                r[key] = s
            else:
                r.pop(key, None)
    return Poly._make(f.n, q)


def negate_vars(f):
    """f evaluated at (-x1, ..., -xn)."""
    return f.negate_vars()


@lru_cache(maxsize=None)
def elementary_symmetric(i, n):
    """e_i(x1..xn); zero for i < 0 or i > n, e_0 = 1."""
    if i < 0 or i > n:
        return Poly.zero(n)
    if i == 0:
        return Poly.one(n)
    terms = {}
    for combo in itertools.combinations(range(n), i):
        exps = [0] * n
        for k in combo:
            exps[k] = 1
        terms[tuple(exps)] = 1
    return Poly._make(n, terms)


@lru_cache(maxsize=None)
def complete_homogeneous(i, n):
    """h_i(x1..xn): sum of all degree-i monomials; h_0 = 1, 0 for i < 0."""
    if i < 0:
        return Poly.zero(n)
    if i == 0:
        return Poly.one(n)
    if n == 0:
        return Poly.zero(0)
    terms = {}
    # stars and bars over exponent vectors
    for cuts in itertools.combinations(range(i + n - 1), n - 1):
        prev = -1
        exps = []
        for c in cuts:
            exps.append(c - prev - 1)
            prev = c
        exps.append(i + n - 2 - prev)
        terms[tuple(exps)] = 1
    return Poly._make(n, terms)


def vandermonde(n):
    """prod_{i<j} (x_i - x_j)."""
    v = Poly.one(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            v = v * (Poly.var(i, n) - Poly.var(j, n))
    return v


def det(matrix):
    """Determinant by cofactor expansion; entries from any commutative ring
    with +, -, * (Poly, ChernExpr, ints)."""
    m = len(matrix)
    if m == 0:
        return 1
    if m == 1:
        return matrix[0][0]
    total = None
    for j in range(m):
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        piece = matrix[0][j] * det(minor)
        if j % 2:
            piece = -piece
        total = piece if total is None else total + piece
    return total
