"""Formal Chern-class expressions and the degeneracy-locus class formulas.

Two layers:

* :class:`ChernExpr` is a graded polynomial ring on symbols c_i(B)/s_i(B)
  for named bundles B.  A bundle name ending in "~" denotes the dual of
  the name without the tilde; the on-demand rewrite c_i(B~) = (-1)^i
  c_i(B) keeps duals first-class.

* :class:`ClassFormula` keeps the emitted locus classes in the shape the
  paper displays them: a signed sum of products of Qt/Pt blocks, Chern
  classes and s-classes, with rational prefactors left uncombined.  It
  expands to a ChernExpr on demand and specializes to Chern roots for
  identity checks.
"""

from __future__ import annotations

from fractions import Fraction

from .partitions import Partition, rho, rho_complement, strict_subsets
from .polyring import Poly, det
from .symfunc import PfaffianFamilyRing


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


# ---------------------------------------------------------------------------
# the formal graded ring
# ---------------------------------------------------------------------------

class ChernExpr:
    """Polynomial in symbols (bundle, kind, index), kind in {"c", "s"}.

    Terms map monomials (sorted tuples of (symbol, exponent) pairs) to
    nonzero rational coefficients; the degree of a symbol is its index.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        acc = {}
        for mono, c in (terms or {}).items():
            mono = tuple(sorted((tuple(s), e) for s, e in mono if e))
            s = _norm(acc.get(mono, 0) + c)
            if s:
                acc[mono] = s
            else:
                acc.pop(mono, None)
        self.terms = acc

    @classmethod
    def _make(cls, terms):
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls):
        return cls._make({})

    @classmethod
    def const(cls, c):
        c = _norm(c)
        return cls._make({(): c} if c else {})

    @classmethod
    def one(cls):
        return cls.const(1)

    @classmethod
    def sym(cls, bundle, kind, index):
        """The symbol c_index(bundle) or s_index(bundle); index 0 is 1."""
        if kind not in ("c", "s"):
            raise ValueError(f"kind must be 'c' or 's', got {kind!r}")
        if index < 0:
            return cls.zero()
        if index == 0:
            return cls.one()
        return cls._make({(((bundle, kind, index), 1),): 1})

    def __add__(self, other):
        if not isinstance(other, ChernExpr):
            other = ChernExpr.const(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            s = _norm(terms.get(mono, 0) + c)
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return ChernExpr._make(terms)

    __radd__ = __add__

    def __neg__(self):
        return ChernExpr._make({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, ChernExpr):
            other = ChernExpr.const(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ChernExpr):
            return self.scale(other)
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                merged = {}
                for s, e in ma + mb:
                    merged[s] = merged.get(s, 0) + e
                key = tuple(sorted(merged.items()))
                s2 = out.get(key, 0) + ca * cb
                if s2:
                    out[key] = s2
                else:
                    out.pop(key, None)
        return ChernExpr._make({m: _norm(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c):
        c = _norm(c)
        if not c:
            return ChernExpr.zero()
        return ChernExpr._make({m: _norm(k * c) for m, k in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, ChernExpr):
            return self.terms == ChernExpr.const(other).terms
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def symbols(self):
        out = set()
        for mono in self.terms:
            out.update(s for s, _ in mono)
        return out

    @staticmethod
    def _mono_degree(mono):
        return sum(sym[2] * e for sym, e in mono)

    def degree(self):
        if not self.terms:
            return -1
        return max(self._mono_degree(m) for m in self.terms)

    def is_homogeneous(self):
        return len({self._mono_degree(m) for m in self.terms}) <= 1

    def homogeneous_component(self, d):
        return ChernExpr._make(
            {m: c for m, c in self.terms.items() if self._mono_degree(m) == d}
        )

    def dual_reduce(self):
        """Rewrite every dual-bundle symbol: c_i(B~) -> (-1)^i c_i(B),
        same for s-symbols."""
        out = ChernExpr.zero()
        for mono, c in self.terms.items():
            piece = ChernExpr.const(c)
            for (bundle, kind, index), e in mono:
                if bundle.endswith("~"):
                    base = ChernExpr.sym(bundle[:-1], kind, index)
                    if index % 2:
                        base = -base
                else:
                    base = ChernExpr.sym(bundle, kind, index)
                for _ in range(e):
                    piece = piece * base
            out = out + piece
        return out

    def coefficients_integral(self):
        return all(
            isinstance(c, int) or Fraction(c).denominator == 1
            for c in self.terms.values()
        )

    def denominator_lcm(self):
        lcm = 1
        for c in self.terms.values():
            d = Fraction(c).denominator
            g = _gcd(lcm, d)
            lcm = lcm // g * d
        return lcm

    def _sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda t: (-self._mono_degree(t[0]), t[0]),
        )

    def render(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono, c in self._sorted_terms():
            factors = []
            for (bundle, kind, index), e in mono:
                s = f"{kind}[{index}]({bundle})"
                factors.append(s + (f"^{e}" if e > 1 else ""))
            body = "*".join(factors)
            neg = c < 0
            a = -c if neg else c
            if body and a == 1:
                text = body
            elif body:
                text = f"{a}*{body}"
            else:
                text = f"{a}"
            if not pieces:
                pieces.append(("-" if neg else "") + text)
            else:
                pieces.append(("- " if neg else "+ ") + text)
        return " ".join(pieces)

    def __repr__(self):
        return f"ChernExpr({self.render()!r})"

    def to_json(self):
        out = []
        for mono, c in self._sorted_terms():
            f = Fraction(c)
            out.append(
                {
                    "symbols": [
                        {"bundle": b, "kind": k, "index": i, "power": e}
                        for (b, k, i), e in mono
                    ],
                    "num": f.numerator,
                    "den": f.denominator,
                }
            )
        return {"terms": out}

    def specialize(self, assignment, fresh_unassigned=False, fresh_map=None):
        """Substitute Chern roots: c_i(B) -> e_i(roots), s_i(B) -> h_i(roots).

        Unassigned dual bundles fall back to the rewrite through their base
        bundle.  With ``fresh_unassigned``, any remaining unknown symbol is
        mapped to its own fresh variable (sound for equality checks that are
        polynomial in those symbols); a shared ``fresh_map`` (symbol -> slot
        starting at 0) lets several expressions agree on the allocation.
        Otherwise unknown symbols raise.
        """
        if fresh_map is None:
            fresh_map = {}
            if fresh_unassigned:
                for s in sorted(self.symbols()):
                    if not assignment.covers(s[0]):
                        fresh_map[s] = len(fresh_map)
        width = assignment.arity + len(fresh_map)
        total = Poly.zero(width)
        for mono, c in self.terms.items():
            piece = Poly.const(width, c)
            for sym, e in mono:
                if sym in fresh_map:
                    base = Poly.var(assignment.arity + fresh_map[sym] + 1, width)
                else:
                    base = assignment.symbol_poly(sym).embed(width)
                piece = piece * base ** e
            total = total + piece
        return total


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# Chern roots
# ---------------------------------------------------------------------------

class RootAssignment:
    """Chern roots for named bundles, all living in one Poly ring.

    Roots are Poly values of common arity; c_i of a bundle is the i-th
    elementary symmetric polynomial of its roots and s_i the complete
    homogeneous one.
    """

    def __init__(self, arity):
        self.arity = arity
        self._roots = {}

    def assign(self, bundle, roots):
        roots = list(roots)
        for r in roots:
            if not isinstance(r, Poly) or r.n != self.arity:
                raise ValueError("roots must be Poly values of the common arity")
        self._roots[bundle] = roots
        return self

    def assign_vars(self, bundle, indices):
        """Assign the listed variables (1-indexed) as roots."""
        return self.assign(
            bundle, [Poly.var(i, self.arity) for i in indices]
        )

    def covers(self, bundle):
        if bundle in self._roots:
            return True
        return bundle.endswith("~") and bundle[:-1] in self._roots

    def roots(self, bundle):
        if bundle in self._roots:
            return self._roots[bundle]
        if bundle.endswith("~") and bundle[:-1] in self._roots:
            return [-r for r in self._roots[bundle[:-1]]]
        raise KeyError(f"no roots assigned for bundle {bundle!r}")

    def rank(self, bundle):
        return len(self.roots(bundle))

    def symbol_poly(self, sym):
        bundle, kind, index = sym
        roots = self.roots(bundle)
        if kind == "c":
            return _e_of_roots(roots, index, self.arity)
        return _h_of_roots(roots, index, self.arity)

    @classmethod
    def hyperbolic(cls, n, arity=None):
        """The canned symplectic/orthogonal setup: bundle "V" has roots
        (x_1..x_n, -x_1..-x_n), so c(V) = c(E + E~) for E with roots x_i."""
        arity = arity or n
        a = cls(arity)
        xs = [Poly.var(i, arity) for i in range(1, n + 1)]
        a.assign("V", xs + [-x for x in xs])
        return a


def _e_of_roots(roots, index, arity):
    """Elementary symmetric polynomial of a list of root polynomials."""
    if index < 0 or index > len(roots):
        return Poly.zero(arity)
    row = [Poly.one(arity)] + [Poly.zero(arity)] * index
    for r in roots:
        for k in range(min(index, len(row) - 1), 0, -1):
            row[k] = row[k] + row[k - 1] * r
    return row[index]


def _h_of_roots(roots, index, arity):
    """Complete homogeneous polynomial of a list of root polynomials."""
    if index < 0:
        return Poly.zero(arity)
    row = [Poly.one(arity)] + [Poly.zero(arity)] * index
    for r in roots:
        for k in range(1, index + 1):
            row[k] = row[k] + row[k - 1] * r
    return row[index]


# ---------------------------------------------------------------------------
# Qtilde/Ptilde in formal Chern classes
# ---------------------------------------------------------------------------

class _ChernFamilyRing(PfaffianFamilyRing):
    def __init__(self, bundle, rank):
        super().__init__()
        self.bundle = bundle
        self.rank = rank
        self.zero = ChernExpr.zero()
        self.one = ChernExpr.one()

    def one_row(self, i):
        if i == 0:
            return self.one
        if i < 0 or (self.rank is not None and i > self.rank):
            return self.zero
        return ChernExpr.sym(self.bundle, "c", i)

    def mul(self, a, b):
        return a * b

    def add(self, a, b):
        return a + b

    def scale(self, a, c):
        return a.scale(c)


_chern_rings = {}


def qtilde_chern(parts, bundle, rank=None, family="qtilde"):
    """Qtilde_I (or Ptilde_I) of a bundle, expanded in its Chern classes.

    Chern classes above ``rank`` are truncated to zero (no truncation when
    rank is None).  Specializing to roots recovers the polynomial family.
    """
    parts = Partition(parts)
    key = (bundle, rank)
    if key not in _chern_rings:
        _chern_rings[key] = _ChernFamilyRing(bundle, rank)
    expr = _chern_rings[key].family(parts)
    if family == "ptilde":
        expr = expr.scale(Fraction(1, 2 ** len(parts)))
    elif family != "qtilde":
        raise ValueError(f"unknown family {family!r}")
    return expr


def schur_in_s_symbols(parts, bundle):
    """s_I(bundle) via the Jacobi-Trudi determinant det(s_{i_p - p + q}),
    in s-symbols of the bundle."""
    parts = Partition(parts)
    m = len(parts)
    if m == 0:
        return ChernExpr.one()
    matrix = [
        [ChernExpr.sym(bundle, "s", parts[p] - p + q) for q in range(m)]
        for p in range(m)
    ]
    return det(matrix)


# ---------------------------------------------------------------------------
# formula layer
# ---------------------------------------------------------------------------

class Factor:
    """One printable factor of a locus-class term."""

    __slots__ = ("family", "parts", "bundle")

    def __init__(self, family, parts, bundle):
        if family not in ("qt", "pt", "c", "s"):
            raise ValueError(f"unknown factor family {family!r}")
        self.family = family
        self.parts = Partition(parts)
        self.bundle = bundle

    def degree(self):
        return self.parts.weight

    def key(self):
        return (self.family, tuple(self.parts), self.bundle)

    def render(self):
        label = {"qt": "Qt", "pt": "Pt", "c": "c", "s": "s"}[self.family]
        if self.family == "c":
            return f"c[{self.parts[0]}]({self.bundle})"
        return f"{label}[{self.parts}]({self.bundle})"

    def to_chern(self, ranks=None):
        rank = (ranks or {}).get(self.bundle)
        if self.family in ("qt", "pt"):
            fam = "qtilde" if self.family == "qt" else "ptilde"
            return qtilde_chern(self.parts, self.bundle, rank, fam)
        if self.family == "c":
            return ChernExpr.sym(self.bundle, "c", self.parts[0])
        return schur_in_s_symbols(self.parts, self.bundle)

    def __repr__(self):
        return self.render()


def qt(parts, bundle):
    return Factor("qt", parts, bundle)


def pt(parts, bundle):
    return Factor("pt", parts, bundle)


def c_(index, bundle):
    return Factor("c", (index,), bundle)


def s_(parts, bundle):
    return Factor("s", parts, bundle)


class ClassFormula:
    """A degeneracy-locus class as the paper displays it.

    ``terms`` is an ordered list of (coefficient, factors) pairs; factors
    equal to 1 (empty partitions, c_0, s_0) are never stored.  Rational
    prefactors stay uncombined with the Pt normalizations.
    """

    def __init__(self, terms=None):
        self.terms = []
        for coeff, factors in terms or []:
            self.append(coeff, factors)

    def append(self, coeff, factors):
        coeff = _norm(coeff)
        if not coeff:
            return
        kept = tuple(f for f in factors if f.parts)
        self.terms.append((coeff, kept))

    def __iter__(self):
        return iter(self.terms)

    def degree(self):
        degs = {sum(f.degree() for f in fs) for _, fs in self.terms}
        if len(degs) > 1:
            raise ValueError(f"formula is not homogeneous: degrees {degs}")
        return degs.pop() if degs else -1

    def canonical(self):
        """Order-independent form for structural equality."""
        acc = {}
        for coeff, factors in self.terms:
            key = tuple(sorted(f.key() for f in factors))
            s = acc.get(key, 0) + Fraction(coeff)
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
        return acc

    def equivalent(self, other):
        return self.canonical() == other.canonical()

    def render(self):
        if not self.terms:
            return "0"
        pieces = []
        for coeff, factors in self.terms:
            body = "*".join(f.render() for f in factors)
            neg = coeff < 0
            a = -coeff if neg else coeff
            if body and a == 1:
                text = body
            elif body:
                text = f"{a}*{body}"
            else:
                text = f"{a}"
            if not pieces:
                pieces.append(("-" if neg else "") + text)
            else:
                pieces.append(("- " if neg else "+ ") + text)
        return " ".join(pieces)

    def __repr__(self):
        return f"ClassFormula({self.render()!r})"

    def bundles(self):
        return sorted({f.bundle for _, fs in self.terms for f in fs})

    def to_chern(self, ranks=None):
        total = ChernExpr.zero()
        for coeff, factors in self.terms:
            piece = ChernExpr.const(coeff)
            for f in factors:
                piece = piece * f.to_chern(ranks)
            total = total + piece
        return total

    def specialize(self, assignment, fresh_unassigned=False, fresh_map=None):
        ranks = {}
        for b in self.bundles():
            if assignment.covers(b):
                ranks[b] = assignment.rank(b)
        return self.to_chern(ranks).specialize(
            assignment, fresh_unassigned, fresh_map
        )

    def to_json(self):
        out = []
        for coeff, factors in self.terms:
            f = Fraction(coeff)
            out.append(
                {
                    "num": f.numerator,
                    "den": f.denominator,
                    "factors": [
                        {
                            "family": fac.family,
                            "partition": list(fac.parts),
                            "bundle": fac.bundle,
                        }
                        for fac in factors
                    ],
                }
            )
        return {"terms": out}


def specialize_to_roots(expr, assignment, fresh_unassigned=False):
    """Specialize a ClassFormula or ChernExpr to Chern roots."""
    return expr.specialize(assignment, fresh_unassigned)


def equal_on_roots(lhs, rhs, assignment):
    """Equality of two formulas/expressions after specialization, with any
    unassigned symbols mapped through one shared fresh-variable allocation
    (a polynomial-identity check in those symbols)."""
    exprs = []
    for e in (lhs, rhs):
        if isinstance(e, ClassFormula):
            ranks = {
                b: assignment.rank(b) for b in e.bundles() if assignment.covers(b)
            }
            e = e.to_chern(ranks)
        exprs.append(e)
    fresh = {}
    for e in exprs:
        for s in sorted(e.symbols()):
            if not assignment.covers(s[0]) and s not in fresh:
                fresh[s] = len(fresh)
    a, b = (e.specialize(assignment, fresh_map=fresh) for e in exprs)
    return a == b


# ---------------------------------------------------------------------------
# formula generators
# ---------------------------------------------------------------------------

GEOMETRIES = ("lagrangian", "odd_orth", "even_orth")


def _check_geometry(geometry):
    if geometry not in GEOMETRIES:
        raise ValueError(f"unknown geometry {geometry!r}")


def _pair_sum(k, family, first, second):
    """sum over strict I in rho_k of F_I(first) * F_{rho_k \\ I}(second),
    ordered by decreasing length then decreasing lexicographic I."""
    make = qt if family == "qtilde" else pt
    formula = ClassFormula()
    subsets = sorted(strict_subsets(k), key=lambda I: (-len(I), tuple(-p for p in I)))
    for I in subsets:
        formula.append(1, (make(I, first), make(rho_complement(I, k), second)))
    return formula


def diagonal_class(n, geometry):
    """The diagonal of the isotropic Grassmannian bundle as a sum of
    complementary products over the tautological bundles R1, R2."""
    _check_geometry(geometry)
    if n < 1:
        raise ValueError("n must be >= 1")
    if geometry == "lagrangian":
        return _pair_sum(n, "qtilde", "R1~", "R2~")
    if geometry == "odd_orth":
        return _pair_sum(n, "ptilde", "R1~", "R2~")
    return _pair_sum(n - 1, "ptilde", "R1~", "R2~")


def class_maximal_isotropic(k, geometry, bundles=("E", "F")):
    """The locus where two maximal isotropic subbundles meet in dimension
    >= k: the complementary-pair sum over rho_k (rho_{k-1} when even)."""
    _check_geometry(geometry)
    if k < 1:
        raise ValueError("k must be >= 1")
    first, second = (b + "~" for b in bundles)
    if geometry == "lagrangian":
        return _pair_sum(k, "qtilde", first, second)
    if geometry == "odd_orth":
        return _pair_sum(k, "ptilde", first, second)
    # even case: parity of k w.r.t. dim(E cap F) is a geometric hypothesis,
    # not enforced here
    return _pair_sum(k - 1, "ptilde", first, second)


def _flag_name(base, n, offset, top_plain=False):
    """Display name for the flag bundle V_{n-offset} (or F_{n-offset}).

    Symbolic when n is None.  With ``top_plain`` the full-rank member
    prints bare (F_n is written F), otherwise it keeps its subscript
    (V_n stays distinct from the ambient bundle V).
    """
    if offset == 0 and top_plain:
        return base
    if n is None:
        return f"{base}[n]" if offset == 0 else f"{base}[n-{offset}]"
    return f"{base}[{n - offset}]"


def class_single_condition(i, n, geometry):
    """Single Schubert condition.

    Lagrangian: sum c_p(E~) s_{i-p}(F_a~) with a = n+1-i (the generic
    form).  Odd orthogonal: the same sum over R~/V_a~ with prefactor 1/2.
    Even orthogonal: 1/2 sum (c_p(R~) + c_p(V_n)) s_{i-p}(V_a~), a = n-i.
    ``n`` may be None for symbolic subscripts.
    """
    _check_geometry(geometry)
    if i < 1 or (n is not None and i > n):
        raise ValueError("need 1 <= i <= n")
    formula = ClassFormula()
    if geometry == "lagrangian":
        va = _flag_name("F", n, i - 1, top_plain=True) + "~"
        for p in range(i, -1, -1):
            formula.append(1, (c_(p, "E~"), s_((i - p,), va)))
        return formula
    if geometry == "odd_orth":
        va = _flag_name("V", n, i - 1) + "~"
        for p in range(i, -1, -1):
            formula.append(Fraction(1, 2), (c_(p, "R~"), s_((i - p,), va)))
        return formula
    va = _flag_name("V", n, i) + "~"
    vn = _flag_name("V", n, 0)
    for p in range(i, -1, -1):
        formula.append(Fraction(1, 2), (c_(p, "R~"), s_((i - p,), va)))
        formula.append(Fraction(1, 2), (c_(p, vn), s_((i - p,), va)))
    return formula


def class_two_conditions(i, j, n, geometry):
    """Two Schubert conditions, the literal two-part (three-part for odd)
    theorem sums.  ``n`` may be None for symbolic subscripts."""
    _check_geometry(geometry)
    if geometry == "even_orth":
        raise ValueError("two-condition formulas cover lagrangian and odd_orth")
    if not (i > j > 0) or (n is not None and i > n):
        raise ValueError("need n >= i > j > 0")
    va = _flag_name("V", n, i - 1) + "~"
    vb = _flag_name("V", n, j - 1) + "~"
    formula = ClassFormula()
    lagr = geometry == "lagrangian"
    make = qt if lagr else pt

    def s_pair(da, db):
        """(s_{da}(Va~), s_{db}(Vb~)) or None when an index is negative."""
        if da < 0 or db < 0:
            return None
        return tuple(
            f for f in (s_((da,), va), s_((db,), vb)) if f.parts
        )

    # main sum: F_{p,q}(R~) * (s_{i-p} s_{j-q} - s_{i-q} s_{j-p});
    # the odd case keeps q >= 1 here and treats q = 0 separately with 1/2
    qmin = 0 if lagr else 1
    for p in range(i, 0, -1):
        for q in range(min(j, p - 1), qmin - 1, -1):
            block = make(Partition((p, q)), "R~")
            pos = s_pair(i - p, j - q)
            neg = s_pair(i - q, j - p)
            if pos is not None:
                formula.append(1, (block,) + pos)
            if neg is not None:
                formula.append(-1, (block,) + neg)
    if not lagr:
        for p in range(i, 0, -1):
            block = pt(Partition((p,)), "R~")
            pos = s_pair(i - p, j)
            neg = s_pair(i, j - p)
            if pos is not None:
                formula.append(Fraction(1, 2), (block,) + pos)
            if neg is not None:
                formula.append(Fraction(-1, 2), (block,) + neg)
    # correction series in c_{2p}(V), truncated by s_h = 0 for h < 0
    corr = 1 if lagr else Fraction(1, 4)
    for p in range(0, i):
        for t in range(1, i - p + 1):
            sign = (-1) ** (p + t - 1)
            cfac = (c_(2 * p, "V"),) if p else ()
            pos = s_pair(i - p - t, j - p + t)
            neg = s_pair(i - p + t, j - p - t)
            if pos is not None:
                formula.append(corr * sign, cfac + pos)
            if neg is not None:
                formula.append(-corr * sign, cfac + neg)
    return formula


def class_two_conditions_adjacent(i, n, geometry="lagrangian"):
    """The compact j = i-1 form: Qt blocks against two-row s-classes of a
    single flag bundle V_{n+2-i}."""
    _check_geometry(geometry)
    if geometry != "lagrangian":
        raise ValueError("the compact adjacent form is stated for lagrangian")
    if i < 2 or (n is not None and i > n):
        raise ValueError("need 2 <= i <= n")
    vb = _flag_name("V", n, i - 2) + "~"
    formula = ClassFormula()
    for p in range(i, 0, -1):
        for q in range(p - 1, -1, -1):
            formula.append(
                1,
                (qt(Partition((p, q)), "R~"), s_(Partition((i - 1 - q, i - p)), vb)),
            )
    for p in range(0, i):
        cfac = (c_(2 * p, "V"),) if p else ()
        for h in range(0, i - p):
            sign = (-1) ** (p + h)
            formula.append(
                sign, cfac + (s_(Partition((i - p + h, i - 1 - p - h)), vb),)
            )
    return formula


def flag_push_s(k, l, a, b):
    """Push-forward of s_{k,l}(C~) from the two-step flag bundle: the
    two-product difference over V_a~, V_b~ with s_h = 0 for h < 0."""
    if not (0 < a < b) or k < l or l < 0:
        raise ValueError("need 0 < a < b and k >= l >= 0")
    va, vb = f"V[{a}]~", f"V[{b}]~"
    formula = ClassFormula()
    if k - (b - 2) >= 0 and l - (a - 1) >= 0:
        formula.append(1, (s_((k - (b - 2),), vb), s_((l - (a - 1),), va)))
    if k - (a - 2) >= 0 and l - (b - 1) >= 0:
        formula.append(-1, (s_((k - (a - 2),), va), s_((l - (b - 1),), vb)))
    return formula


def maximal_isotropic_from_diagonal(k, n, bundles=("V[n]", "R")):
    """Recompute the maximal-isotropic class by pushing the diagonal sum
    through the partial-flag rule: terms with I not containing
    (n, ..., k+1) vanish, the rest map Qt_I(D~) to Qt_J(V_n~) with the
    complement identity rho_n \\ I = rho_k \\ J."""
    if not 0 < k < n:
        raise ValueError("need 0 < k < n")
    head = tuple(range(n, k, -1))
    formula = ClassFormula()
    first, second = (b + "~" for b in bundles)
    subsets = sorted(
        strict_subsets(n), key=lambda I: (-len(I), tuple(-p for p in I))
    )
    for I in subsets:
        if not set(head) <= set(I):
            continue
        J = I.remove_parts(head)
        comp = rho_complement(I, n)
        assert comp == rho_complement(J, k)
        formula.append(1, (qt(J, first), qt(comp, second)))
    return formula
