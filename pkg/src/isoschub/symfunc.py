"""The Qtilde/Ptilde polynomial families and their relatives.

Qtilde_I is defined by the Pfaffian of the antisymmetric matrix with
entries Qtilde_{i,j} = e_i e_j + 2 sum_{p=1..j} (-1)^p e_{i+p} e_{j-p},
or equivalently by Laplace-type recurrences on the length of I, which is
how this module computes it.  The same recurrences run over three carrier
rings: concrete polynomials, formal e-monomials (for basis conversion),
and formal Chern classes (see loci.qtilde_chern).

Also here: classical Schur S- and Q-polynomials, the linearity and
factorization identities, skew polynomials, Pieri products, basis
conversions, and the raising-operator construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .partitions import (
    Partition,
    horizontal_strips,
    pieri_multiplicity,
    partitions_of,
)
from .polyring import (
    Poly,
    det,
    elementary_symmetric,
    complete_homogeneous,
    exact_divide,
    vandermonde,
)


# ---------------------------------------------------------------------------
# generic Laplace-type recurrence engine
# ---------------------------------------------------------------------------

class PfaffianFamilyRing:
    """Carrier-ring interface for the Pfaffian recurrences.

    Subclasses provide the one-row elements and the ring operations; the
    engine below supplies the general Q_I via recurrence (***), with the
    odd-length case read off by appending a formal zero part.
    """

    def one_row(self, i):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def scale(self, a, c):
        raise NotImplementedError

    zero = None
    one = None

    def __init__(self):
        self.memo = {}
        self.two_row_memo = {}

    def two_row(self, i, j):
        """Q_{i,j} = Q_i Q_j + 2 sum_{p=1..j} (-1)^p Q_{i+p} Q_{j-p}."""
        if j == 0:
            return self.one_row(i)
        key = (i, j)
        if key not in self.two_row_memo:
            acc = self.mul(self.one_row(i), self.one_row(j))
            for p in range(1, j + 1):
                term = self.mul(self.one_row(i + p), self.one_row(j - p))
                acc = self.add(acc, self.scale(term, 2 * (-1) ** p))
            self.two_row_memo[key] = acc
        return self.two_row_memo[key]

    def family(self, parts):
        parts = tuple(parts)
        if parts in self.memo:
            return self.memo[parts]
        l = len(parts)
        if l == 0:
            result = self.one
        elif l == 1:
            result = self.one_row(parts[0])
        elif l == 2:
            result = self.two_row(parts[0], parts[1])
        else:
            # develop along the last column of the Pfaffian matrix; odd
            # lengths take a formal last part 0, which turns (***) into (*)
            work = parts if l % 2 == 0 else parts + (0,)
            last = work[-1]
            rest = work[:-1]
            result = self.zero
            for idx, part in enumerate(rest):
                remaining = tuple(p for k, p in enumerate(rest) if k != idx)
                piece = self.mul(self.two_row(part, last), self.family(remaining))
                result = self.add(result, self.scale(piece, (-1) ** idx))
        self.memo[parts] = result
        return result


class _PolyFamilyRing(PfaffianFamilyRing):
    """Recurrence ring over concrete polynomials in n variables."""

    def __init__(self, n, one_row_fn):
        super().__init__()
        self.n = n
        self._one_row_fn = one_row_fn
        self.zero = Poly.zero(n)
        self.one = Poly.one(n)

    def one_row(self, i):
        return self._one_row_fn(i, self.n)

    def mul(self, a, b):
        return a * b

    def add(self, a, b):
        return a + b

    def scale(self, a, c):
        return a.scale(c)


class ESymRing(PfaffianFamilyRing):
    """Recurrence ring over formal e-monomials.

    Elements are dicts mapping sorted tuples of e-indices (an index
    partition with parts in 1..n) to rational coefficients; e_0 is the
    empty product, e_i = 0 outside 0..n.
    """

    def __init__(self, n):
        super().__init__()
        self.n = n
        self.zero = {}
        self.one = {(): 1}

    def one_row(self, i):
        if i == 0:
            return {(): 1}
        if i < 0 or i > self.n:
            return {}
        return {(i,): 1}

    def mul(self, a, b):
        out = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                key = tuple(sorted(ka + kb, reverse=True))
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return out

    def add(self, a, b):
        out = dict(a)
        for k, c in b.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return out

    def scale(self, a, c):
        if not c:
            return {}
        return {k: v * c for k, v in a.items()}


_qt_rings = {}
_qs_rings = {}
_esym_rings = {}


def _qt_ring(n):
    if n not in _qt_rings:
        _qt_rings[n] = _PolyFamilyRing(n, elementary_symmetric)
    return _qt_rings[n]


def _esym_ring(n):
    if n not in _esym_rings:
        _esym_rings[n] = ESymRing(n)
    return _esym_rings[n]


# ---------------------------------------------------------------------------
# the Qtilde / Ptilde families
# ---------------------------------------------------------------------------

def qtilde(parts, n):
    """Qtilde_I(x1..xn) for an arbitrary partition I."""
    if n < 1:
        raise ValueError("need at least one variable")
    return _qt_ring(n).family(Partition(parts))


def ptilde(parts, n):
    """Ptilde_I = 2^{-l(I)} Qtilde_I."""
    parts = Partition(parts)
    return qtilde(parts, n).scale(Fraction(1, 2 ** len(parts)))


def qtilde_e_expansion(parts, n):
    """Expansion of Qtilde_I in products of elementary symmetric polynomials,
    as a dict mapping index partitions to integer coefficients."""
    return {
        Partition(k): c for k, c in _esym_ring(n).family(Partition(parts)).items()
    }


def qtilde_two_row(i, j, n):
    """The two-row polynomial Qtilde_{i,j}(X_n), i >= j >= 0."""
    if i < j:
        raise ValueError("two-row index needs i >= j")
    return _qt_ring(n).two_row(i, j)


def _laplace_odd(parts, n):
    """Development (*): odd-length expansion along single rows."""
    ring = _qt_ring(n)
    total = Poly.zero(n)
    for idx, part in enumerate(parts):
        rest = tuple(p for k, p in enumerate(parts) if k != idx)
        piece = ring.one_row(part) * qtilde(rest, n)
        total = total + piece.scale((-1) ** idx)
    return total


def _laplace_even_first_row(parts, n):
    """Development (**): even-length expansion pairing the first part."""
    total = Poly.zero(n)
    for idx in range(1, len(parts)):
        rest = tuple(p for k, p in enumerate(parts) if k not in (0, idx))
        piece = qtilde_two_row(parts[0], parts[idx], n) * qtilde(rest, n)
        # sign (-1)^j at 1-based position j = idx + 1
        total = total + piece.scale((-1) ** (idx + 1))
    return total


def laplace_expansions_agree(parts, n):
    """Check the alternative developments (*) and (**) against the primary
    recurrence for one partition."""
    parts = Partition(parts)
    reference = qtilde(parts, n)
    if len(parts) % 2 == 1:
        return _laplace_odd(parts, n) == reference
    if len(parts) >= 2:
        return _laplace_even_first_row(parts, n) == reference
    return True


# ---------------------------------------------------------------------------
# Pfaffian oracle
# ---------------------------------------------------------------------------

def _matching_sign(pairs):
    crossings = 0
    for (a, b), (c, d) in itertools.combinations(pairs, 2):
        lo, hi = (a, b) if a < c else (c, d)
        other = (c, d) if a < c else (a, b)
        if lo < other[0] < hi < other[1]:
            crossings += 1
    return -1 if crossings % 2 else 1


def _perfect_matchings(indices):
    if not indices:
        yield ()
        return
    first, rest = indices[0], indices[1:]
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for tail in _perfect_matchings(remaining):
            yield ((first, partner),) + tail


def pfaffian_oracle(matrix):
    """Pfaffian by explicit summation over perfect matchings.

    Independent of the Laplace-type recurrences; used as a cross-check.
    Entries may be Poly or any ring elements with +, *, unary -.
    """
    m = len(matrix)
    if m % 2 != 0:
        raise ValueError("Pfaffian needs even dimension")
    for p in range(m):
        if matrix[p][p] != 0:
            raise ValueError("matrix is not antisymmetric")
        for q in range(p + 1, m):
            if matrix[p][q] != -matrix[q][p]:
                raise ValueError("matrix is not antisymmetric")
    if m == 0:
        return 1
    total = None
    for pairs in _perfect_matchings(tuple(range(m))):
        prod = None
        for a, b in pairs:
            prod = matrix[a][b] if prod is None else prod * matrix[a][b]
        prod = prod if _matching_sign(pairs) == 1 else -prod
        total = prod if total is None else total + prod
    return total


def qtilde_pfaffian_matrix(parts, n):
    """The antisymmetric matrix (Qtilde_{i_p,i_q}) with I zero-padded to
    even length; its Pfaffian is Qtilde_I."""
    parts = tuple(Partition(parts))
    if len(parts) % 2:
        parts = parts + (0,)
    m = len(parts)
    matrix = [[Poly.zero(n)] * m for _ in range(m)]
    for p in range(m):
        for q in range(p + 1, m):
            entry = qtilde_two_row(parts[p], parts[q], n)
            matrix[p][q] = entry
            matrix[q][p] = -entry
    return matrix


# ---------------------------------------------------------------------------
# Schur S-polynomials
# ---------------------------------------------------------------------------

_schur_cache = {}


def schur_s(parts, n):
    """Schur polynomial s_I(x1..xn) via the bialternant ratio.

    Zero when l(I) > n.  The quotient by the Vandermonde determinant is an
    exact division, performed one binomial factor at a time.
    """
    parts = Partition(parts)
    key = (parts, n)
    if key in _schur_cache:
        return _schur_cache[key]
    if len(parts) > n:
        result = Poly.zero(n)
    else:
        padded = tuple(parts) + (0,) * (n - len(parts))
        exponents = [padded[k] + n - 1 - k for k in range(n)]
        terms = {}
        for sigma in itertools.permutations(range(n)):
            exps = [0] * n
            for pos, k in enumerate(sigma):
                exps[pos] = exponents[k]
            sign = _perm_sign(sigma)
            key2 = tuple(exps)
            terms[key2] = terms.get(key2, 0) + sign
        numerator = Poly(n, terms)
        result = numerator
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                result = exact_divide(result, Poly.var(i, n) - Poly.var(j, n))
    _schur_cache[key] = result
    return result


def _perm_sign(sigma):
    sign = 1
    for a, b in itertools.combinations(range(len(sigma)), 2):
        if sigma[a] > sigma[b]:
            sign = -sign
    return sign


def schur_s_jacobi_trudi(parts, n):
    """Dual Jacobi-Trudi determinant det(e_{I~_p - p + q}); test oracle for
    the bialternant path."""
    parts = Partition(parts)
    conj = parts.conjugate()
    m = len(conj)
    if m == 0:
        return Poly.one(n)
    matrix = [
        [elementary_symmetric(conj.part(p + 1) - p + q, n) for q in range(m)]
        for p in range(m)
    ]
    return det(matrix)


# ---------------------------------------------------------------------------
# classical Schur Q-polynomials
# ---------------------------------------------------------------------------

def _hook_partitions(weight):
    return [
        Partition((weight - legs,) + (1,) * legs) for legs in range(weight)
    ]


_q_onerow_cache = {}


def schur_q_one_row(i, n):
    """Classical Q_i = 2 * sum of s_H over hook shapes H of weight i."""
    key = (i, n)
    if key not in _q_onerow_cache:
        if i < 0:
            result = Poly.zero(n)
        elif i == 0:
            result = Poly.one(n)
        else:
            total = Poly.zero(n)
            for hook in _hook_partitions(i):
                total = total + schur_s(hook, n)
            result = total.scale(2)
        _q_onerow_cache[key] = result
    return _q_onerow_cache[key]


def _qs_ring(n):
    if n not in _qs_rings:
        _qs_rings[n] = _PolyFamilyRing(n, schur_q_one_row)
    return _qs_rings[n]


def schur_q_classical(parts, n):
    """Classical Schur Q_I(x1..xn) for strict I, via the same recurrences
    with Q_i in place of e_i."""
    parts = Partition(parts)
    if not parts.is_strict():
        raise ValueError(f"{parts} is not strict")
    return _qs_ring(n).family(parts)


def qrho_determinant_identity(k, n):
    """Check Q_{rho_k} = Det(a_{i,j}) with a_{i,j} = Q_{k+1+j-2i}, where the
    degree-0 entries are the constant 2 and negative degrees vanish."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    matrix = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            d = k + 1 + j - 2 * i
            if d == 0:
                row.append(Poly.const(n, 2))
            else:
                row.append(schur_q_one_row(d, n))
        matrix.append(row)
    return det(matrix) == schur_q_classical(Partition(range(k, 0, -1)), n)


# ---------------------------------------------------------------------------
# linearity, factorization, skew polynomials
# ---------------------------------------------------------------------------

def one_box_removals(parts):
    """All J obtained from I by removing at most one box per row, with the
    result still a partition.  Returns a list of Partition (distinct when I
    is strict)."""
    parts = Partition(parts)
    k = len(parts)
    out = []

    def build(row, acc):
        if row == k:
            out.append(Partition(acc))
            return
        keep = parts[row]
        prev = acc[-1] if acc else None
        if prev is None or keep <= prev:
            build(row + 1, acc + (keep,))
        less = keep - 1
        if prev is None or less <= prev:
            build(row + 1, acc + ((less,) if less else ()))

    build(0, ())
    return out


def linearity_expand(parts, n, family="qtilde"):
    """Terms of the expansion of F_I(X_n) over F_J(X_{n-1}) and powers of x_n.

    Returns a list of (j, J, coeff) with j = |I| - |J|; coeff is 1 for the
    qtilde family and 2^{l(J)-l(I)} for ptilde.  Stated for strict I.
    """
    parts = Partition(parts)
    if not parts.is_strict():
        raise ValueError(f"{parts} is not strict")
    if family not in ("qtilde", "ptilde"):
        raise ValueError(f"unknown family {family!r}")
    terms = []
    for sub in one_box_removals(parts):
        j = parts.weight - sub.weight
        if family == "qtilde":
            coeff = 1
        else:
            coeff = Fraction(2) ** (len(sub) - len(parts))
        terms.append((j, sub, coeff))
    terms.sort(key=lambda t: (t[0], tuple(t[1])))
    return terms


def factor_doubles(parts):
    """Split I into pairs of equal parts and a strict core (largest first).

    Qtilde_I = prod_j Qtilde_{j,j} * Qtilde_core, and Qtilde_{j,j}(X_n) is
    e_j(x1^2..xn^2).
    """
    parts = Partition(parts)
    pairs = []
    core = []
    for value, mult in sorted(parts.multiplicities().items(), reverse=True):
        pairs.extend([value] * (mult // 2))
        if mult % 2:
            core.append(value)
    return pairs, Partition(core)


def e_squares(i, n):
    """e_i(x1^2, ..., xn^2) = Qtilde_{i,i}(X_n)."""
    return elementary_symmetric(i, n).power_vars(2)


def _extract_last_var(parts, v):
    """Decompose Qtilde_K(X_v) over Qtilde_{K'}(X_{v-1}) and powers of x_v.

    Returns a dict mapping (degree, K') to a positive integer multiplicity.
    Non-strict K is routed through the double-part factorization first;
    K' with a part exceeding v-1 vanish and are dropped.
    """
    pairs, core = factor_doubles(parts)
    core_terms = [(j, tuple(sub)) for j, sub, _ in linearity_expand(core, v)]
    # each double part k contributes Qtilde_{k,k}(X_{v-1}) or
    # x_v^2 * Qtilde_{k-1,k-1}(X_{v-1})
    out = {}
    for choice in itertools.product(*[((0, k), (2, k - 1)) for k in pairs]):
        base_deg = sum(d for d, _ in choice)
        kept = [k for _, k in choice if k > 0]
        for j, sub in core_terms:
            merged = tuple(sorted(sub + tuple(kept) + tuple(kept), reverse=True))
            if merged and merged[0] > v - 1:
                continue
            key = (base_deg + j, Partition(merged))
            out[key] = out.get(key, 0) + 1
    return out


def skew_qtilde(outer, inner, m, n):
    """The skew polynomial Qtilde_{I/J}(x_{m+1}..x_n), returned in n-m
    variables (variable i standing for x_{m+i}).

    Defined by Qtilde_I(X_n) = sum_J Qtilde_J(X_m) * Qtilde_{I/J}; computed
    by extracting x_n, ..., x_{m+1} with the linearity formula and
    collecting on the Qtilde(X_m) basis.
    """
    coeffs = skew_qtilde_all(outer, m, n)
    result = coeffs.get(Partition(inner))
    if result is None:
        if not Partition(outer).contains(Partition(inner)):
            raise ValueError(f"{inner} not contained in {outer}")
        return Poly.zero(n - m)
    return result


def skew_qtilde_all(outer, m, n):
    """All skew coefficients of Qtilde_I(X_n) over the Qtilde(X_m) basis,
    as a dict J -> Poly in n-m variables."""
    outer = Partition(outer)
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    width = n - m
    state = {outer: Poly.one(width)}
    for v in range(n, m, -1):
        nxt = {}
        for K, coeff in state.items():
            for (d, K2), mult in _extract_last_var(K, v).items():
                piece = coeff * Poly.var(v - m, width).__pow__(d)
                if mult != 1:
                    piece = piece.scale(mult)
                if K2 in nxt:
                    nxt[K2] = nxt[K2] + piece
                else:
                    nxt[K2] = piece
        state = {K: p for K, p in nxt.items() if not p.is_zero()}
    # drop indices that vanish in m variables
    out = {}
    for K, p in state.items():
        if K and K[0] > m:
            continue
        assert p.is_symmetric()
        out[K] = p
    return out


# ---------------------------------------------------------------------------
# basis vectors and conversions
# ---------------------------------------------------------------------------

BASIS_TAGS = ("schur_s", "qtilde", "ptilde", "e_monomial", "schur_q")

_BASIS_SYMBOL = {
    "schur_s": "s",
    "qtilde": "Qt",
    "ptilde": "Pt",
    "e_monomial": "e",
    "schur_q": "Q",
}


@dataclass
class BasisVector:
    """A finite linear combination of basis elements indexed by partitions."""

    basis: str
    n: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASIS_TAGS:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for parts, c in self.entries.items():
            parts = Partition(parts)
            if self.basis in ("qtilde", "ptilde", "e_monomial"):
                if parts and parts[0] > self.n:
                    raise ValueError(
                        f"{parts}: parts above {self.n} are outside the basis"
                    )
            if self.basis in ("schur_q",) and not parts.is_strict():
                raise ValueError(f"{parts} must be strict for {self.basis}")
            c = c if isinstance(c, int) else Fraction(c)
            if c:
                clean[parts] = c
        self.entries = clean

    def sorted_entries(self):
        return sorted(self.entries.items(), key=lambda t: tuple(t[0]), reverse=True)

    def to_poly(self):
        total = Poly.zero(self.n)
        for parts, c in self.entries.items():
            total = total + _basis_element(self.basis, parts, self.n).scale(c)
        return total

    def render(self):
        if not self.entries:
            return "0"
        sym = _BASIS_SYMBOL[self.basis]
        pieces = []
        for parts, c in self.sorted_entries():
            body = f"{sym}[{parts}]"
            neg = c < 0
            a = -c if neg else c
            if a != 1:
                body = f"{a}*{body}"
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append(("- " if neg else "+ ") + body)
        return " ".join(pieces)

    def to_json(self):
        out = []
        for parts, c in self.sorted_entries():
            f = Fraction(c)
            out.append(
                {"partition": list(parts), "num": f.numerator, "den": f.denominator}
            )
        return {"basis": self.basis, "n": self.n, "entries": out}


def _basis_element(basis, parts, n):
    if basis == "schur_s":
        return schur_s(parts, n)
    if basis == "qtilde":
        return qtilde(parts, n)
    if basis == "ptilde":
        return ptilde(parts, n)
    if basis == "schur_q":
        return schur_q_classical(parts, n)
    if basis == "e_monomial":
        total = Poly.one(n)
        for p in parts:
            total = total * elementary_symmetric(p, n)
        return total
    raise ValueError(f"unknown basis {basis!r}")


def _expand_e_monomial(f):
    """Classical algorithm: strip lex-leading monomials against e-products."""
    n = f.n
    entries = {}
    rest = f
    while not rest.is_zero():
        exps, c = rest.lead_lex()
        if tuple(exps) != tuple(sorted(exps, reverse=True)):
            raise ValueError("polynomial is not symmetric")
        index = Partition(exps).conjugate()
        entries[index] = entries.get(index, 0) + c
        rest = rest - _basis_element("e_monomial", index, n).scale(c)
    return {k: v for k, v in entries.items() if v}


def _expand_lex_leading(f, element, leading_coeff_of):
    """Generic elimination for bases whose lex-leading monomial is x^I.

    ``element(I)`` returns the basis polynomial, ``leading_coeff_of(I)`` its
    leading coefficient.  Raises if a leading exponent is not a partition of
    the right shape (symmetric input guarantees it is weakly decreasing).
    """
    entries = {}
    rest = f
    while not rest.is_zero():
        exps, c = rest.lead_lex()
        alpha = tuple(sorted(exps, reverse=True))
        if alpha != exps:
            raise ValueError("polynomial is not symmetric")
        index = Partition(alpha)
        coeff = Fraction(c, leading_coeff_of(index))
        entries[index] = entries.get(index, 0) + coeff
        rest = rest - element(index).scale(coeff)
    return {k: v for k, v in entries.items() if v}


def basis_convert(f, target, n):
    """Exact expansion of a symmetric polynomial in the target basis."""
    if f.n != n:
        raise ValueError("arity mismatch")
    if target not in BASIS_TAGS:
        raise ValueError(f"unknown basis {target!r}")
    if not f.is_symmetric():
        raise ValueError("polynomial is not symmetric")
    if target == "schur_s":
        entries = _expand_lex_leading(f, lambda I: schur_s(I, n), lambda I: 1)
    elif target == "e_monomial":
        entries = _expand_e_monomial(f)
    elif target in ("qtilde", "ptilde"):
        entries = _expand_qtilde(f, n)
        if target == "ptilde":
            entries = {I: c * 2 ** len(I) for I, c in entries.items()}
    elif target == "schur_q":
        def leading(I):
            if not I.is_strict() or len(I) > n:
                raise ValueError("polynomial is outside the Schur-Q span")
            return 2 ** len(I)

        entries = _expand_lex_leading(
            f, lambda I: schur_q_classical(I, n), leading
        )
    return BasisVector(target, n, entries)


def _expand_qtilde(f, n):
    """Triangular solve against the e-monomial basis in reverse-lex order.

    Qtilde_I = e_I + (lex-later e-monomials), so repeatedly eliminating the
    lex-smallest remaining index terminates.
    """
    work = {Partition(k): Fraction(c) for k, c in _expand_e_monomial(f).items()}
    out = {}
    while work:
        index = min(work, key=tuple)
        c = work.pop(index)
        if not c:
            continue
        out[index] = out.get(index, 0) + c
        for other, coeff in qtilde_e_expansion(index, n).items():
            if other == index:
                continue
            s = work.get(other, Fraction(0)) - c * coeff
            if s:
                work[other] = s
            else:
                work.pop(other, None)
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# Pieri rule
# ---------------------------------------------------------------------------

def pieri(parts, r, n, family="qtilde"):
    """The product F_I * F_r in the F basis, F in {qtilde, ptilde}.

    Coefficients are 2^m for qtilde and 2^{m'} for ptilde, where m' drops
    by one when the strip misses the first column.
    """
    parts = Partition(parts)
    if not parts.is_strict():
        raise ValueError(f"{parts} is not strict")
    if r < 1:
        raise ValueError("r must be >= 1")
    if family not in ("qtilde", "ptilde"):
        raise ValueError(f"unknown family {family!r}")
    entries = {}
    for J in horizontal_strips(parts, r, n):
        m, meets = pieri_multiplicity(parts, J)
        if family == "ptilde" and not meets:
            m -= 1
        entries[J] = 2 ** m
    return BasisVector(family, n, entries)


# ---------------------------------------------------------------------------
# raising-operator construction
# ---------------------------------------------------------------------------

def qtilde_raising_ops(parts, n):
    """Qtilde_I as prod_{i<j} (1-R_ij)/(1+R_ij) applied to e_I.

    Each factor expands as 1 + 2*sum_{k>=1} (-1)^k R_ij^k.  Pairs are
    processed in decreasing second coordinate so an index is final once its
    column of factors is done; e-indices outside [0, n] vanish.
    """
    parts = Partition(parts)
    l = len(parts)
    if l > 4:
        raise ValueError("raising-operator expansion is guarded to length <= 4")
    vec = tuple(parts)
    state = {vec: 1}
    pairs = sorted(
        ((a, b) for b in range(l) for a in range(b)),
        key=lambda ab: (-ab[1], ab[0]),
    )
    for a, b in pairs:
        nxt = {}

        def bump(v, c):
            if c:
                nxt[v] = nxt.get(v, 0) + c
                if not nxt[v]:
                    del nxt[v]

        for v, c in state.items():
            bump(v, c)
            k = 1
            while v[b] - k >= 0:
                raised = list(v)
                raised[a] += k
                raised[b] -= k
                bump(tuple(raised), 2 * (-1) ** k * c)
                k += 1
        state = nxt
    total = Poly.zero(n)
    for v, c in state.items():
        if any(x < 0 or x > n for x in v):
            continue
        prod = Poly.one(n)
        for x in v:
            prod = prod * elementary_symmetric(x, n)
        total = total + prod.scale(c)
    return total


# ---------------------------------------------------------------------------
# small helpers shared by verification code
# ---------------------------------------------------------------------------

def schur_q_generating_oracle(i, n):
    """Q_i from prod (1+x_j t)/(1-x_j t): the coefficient sum e_p * h_{i-p}."""
    total = Poly.zero(n)
    for p in range(i + 1):
        total = total + elementary_symmetric(p, n) * complete_homogeneous(i - p, n)
    return total


def e_product(parts, n):
    """e_{i_1} * ... * e_{i_k}."""
    total = Poly.one(n)
    for p in Partition(parts):
        total = total * elementary_symmetric(p, n)
    return total
