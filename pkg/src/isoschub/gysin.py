"""Closed-form Gysin push-forwards for maximal isotropic Grassmannian
bundles, verified against the divided-difference model.

Everything is checked at the Chern-root level: the push-forward along the
bundle is the nabla operator of the matching Weyl group type (C for
lagrangian, B for odd orthogonal, D for even orthogonal) applied to the
polynomial with roots negated (classes of the dual tautological bundle).
"""

from __future__ import annotations

from fractions import Fraction

from .partitions import Partition, rho, rho_complement
from .polyring import Poly
from .symfunc import e_squares, ptilde, qtilde, schur_s
from .loci import ChernExpr
from .weyl import nabla

_GEOMETRY_TYPE = {"lagrangian": "C", "odd_orth": "B", "even_orth": "D"}


def geometry_group_type(geometry):
    try:
        return _GEOMETRY_TYPE[geometry]
    except KeyError:
        raise ValueError(f"unknown geometry {geometry!r}") from None


def _range_top(n, geometry):
    return n - 1 if geometry == "even_orth" else n


def _prefactor_exponent(n, geometry):
    return {"lagrangian": 0, "odd_orth": n, "even_orth": n - 1}[geometry]


def push_qtilde_closed(parts, n, geometry):
    """Closed form of the push-forward of Qtilde_I(R~), at root level.

    Nonzero only when every p in 1..n (1..n-1 for the even case) occurs in
    I with odd multiplicity m_p; then the image is
    2^s * prod_p e_p(x^2)^{(m_p-1)/2} with s = 0, n, n-1 by geometry.
    """
    parts = Partition(parts)
    top = _range_top(n, geometry)
    if geometry == "even_orth" and parts and parts[0] > n - 1:
        raise ValueError("even-orthogonal push-forward needs parts <= n-1")
    mult = parts.multiplicities()
    if set(mult) != set(range(1, top + 1)):
        return Poly.zero(n)
    if any(m % 2 == 0 for m in mult.values()):
        return Poly.zero(n)
    result = Poly.const(n, 2 ** _prefactor_exponent(n, geometry))
    for p, m in mult.items():
        result = result * e_squares(p, n) ** ((m - 1) // 2)
    return result


def push_qtilde_operator(parts, n, geometry, family="qtilde"):
    """The same push-forward computed by the divided-difference model."""
    fam = qtilde if family == "qtilde" else ptilde
    f = fam(parts, n).negate_vars()
    return nabla(f, geometry_group_type(geometry), n)


def schur_push_shape(parts, n, geometry):
    """The partition J with I = 2J + rho (rho_{n-1} for even), or None."""
    parts = Partition(parts)
    stair = rho(_range_top(n, geometry))
    if len(parts) != len(stair):
        return None
    diffs = [p - s for p, s in zip(parts, stair)]
    if any(d < 0 or d % 2 for d in diffs):
        return None
    return Partition(d // 2 for d in diffs)


def s_bracket2(parts, bundle):
    """s_I with e_i replaced by (-1)^i c_{2i}(bundle), via the dual
    Jacobi-Trudi presentation of s_I in the e basis."""
    from .polyring import det

    parts = Partition(parts)
    conj = parts.conjugate()
    m = len(conj)
    if m == 0:
        return ChernExpr.one()

    def entry(i):
        if i < 0:
            return ChernExpr.zero()
        expr = ChernExpr.sym(bundle, "c", 2 * i)
        return -expr if i % 2 else expr

    matrix = [
        [entry(conj.part(p + 1) - p + q) for q in range(m)] for p in range(m)
    ]
    return det(matrix)


def push_schur_closed(parts, n, geometry, bundle="V"):
    """Closed form of the push-forward of s_I(R~) as a Chern expression:
    2^s * s_J^[2](V) when I = 2J + rho, zero otherwise."""
    parts = Partition(parts)
    if len(parts) > _range_top(n, geometry):
        raise ValueError("partition longer than the isotropic rank")
    J = schur_push_shape(parts, n, geometry)
    if J is None:
        return ChernExpr.zero()
    return s_bracket2(J, bundle).scale(2 ** _prefactor_exponent(n, geometry))


def push_schur_closed_roots(parts, n, geometry):
    """Root-level form of the Schur push-forward: 2^s * s_J(x_1^2..x_n^2)."""
    J = schur_push_shape(parts, n, geometry)
    if J is None:
        return Poly.zero(n)
    return schur_s(J, n).power_vars(2).scale(
        2 ** _prefactor_exponent(n, geometry)
    )


def push_schur_operator(parts, n, geometry):
    f = schur_s(parts, n).negate_vars()
    return nabla(f, geometry_group_type(geometry), n)


# ---------------------------------------------------------------------------
# partial isotropic flag bundles
# ---------------------------------------------------------------------------

def push_partial_flag(parts, k, n, geometry="lagrangian"):
    """Push-forward rule along the partial flag bundle: zero unless I
    contains the parts (n, ..., k+1), else the residual partition J (the
    image is then F_J of the reference bundle)."""
    if geometry not in ("lagrangian", "odd_orth"):
        raise ValueError("partial-flag rule covers lagrangian and odd_orth")
    parts = Partition(parts)
    if not parts.is_strict() or not rho(n).contains(parts):
        raise ValueError(f"{parts} must be strict inside rho_{n}")
    if not 0 < k < n:
        raise ValueError("need 0 < k < n")
    head = set(range(k + 1, n + 1))
    if not head <= set(parts):
        return None
    return parts.remove_parts(head)


def push_partial_flag_even(parts, k, n):
    """Even-orthogonal partial-flag rule: zero unless I contains
    (n-1, ..., k), else the residual partition."""
    parts = Partition(parts)
    if not parts.is_strict() or not rho(n - 1).contains(parts):
        raise ValueError(f"{parts} must be strict inside rho_{n - 1}")
    if not 0 < k < n:
        raise ValueError("need 0 < k < n")
    head = set(range(k, n))
    if not head <= set(parts):
        return None
    return parts.remove_parts(head)


def push_partial_flag_operator(parts, k, n, geometry="lagrangian", family=None):
    """Literal operator form: the w^(k) divided difference applied to
    F_I(X_n with negated variables)."""
    from .weyl import apply_dd, w_k_element

    if family is None:
        family = "qtilde" if geometry == "lagrangian" else "ptilde"
    fam = qtilde if family == "qtilde" else ptilde
    f = fam(parts, n).negate_vars()
    w = w_k_element(k, n, geometry_group_type(geometry))
    return apply_dd(w, f)


# ---------------------------------------------------------------------------
# orthogonality
# ---------------------------------------------------------------------------

def orthogonality_check(I, J, n, geometry):
    """nabla(F_I(X~) * F_J(X~)) for the matching family and type; the
    orthogonality theorem says this is 1 exactly on complementary pairs
    and 0 otherwise."""
    I, J = Partition(I), Partition(J)
    top = _range_top(n, geometry)
    stair = rho(top)
    for P in (I, J):
        if not P.is_strict() or not stair.contains(P):
            raise ValueError(f"{P} must be strict inside rho_{top}")
    fam = qtilde if geometry == "lagrangian" else ptilde
    f = fam(I, n).negate_vars() * fam(J, n).negate_vars()
    image = nabla(f, geometry_group_type(geometry), n)
    if not image.is_constant():
        raise AssertionError(
            f"push-forward of a product of basis classes is not constant: "
            f"{I}, {J}, n={n}, {geometry}"
        )
    return image.constant()


def orthogonality_expected(I, J, n, geometry):
    top = _range_top(n, geometry)
    return 1 if Partition(J) == rho_complement(I, top) else 0


# ---------------------------------------------------------------------------
# the squared-variable Schur identity
# ---------------------------------------------------------------------------

def identity_5_11(parts, p, n):
    """Check s_I(x^p) * s_{(p-1)rho_{n-1}}(X_n) = s_{pI+(p-1)rho_{n-1}}(X_n)."""
    parts = Partition(parts)
    if p < 1:
        raise ValueError("p must be >= 1")
    if len(parts) > n:
        raise ValueError("partition longer than the variable count")
    lhs = schur_s(parts, n).power_vars(p) if p > 1 else schur_s(parts, n)
    scaled_stair = Partition((p - 1) * (n - k) for k in range(1, n + 1))
    lhs = lhs * schur_s(scaled_stair, n)
    padded = tuple(parts) + (0,) * (n - len(parts))
    target = Partition(
        p * padded[k - 1] + (p - 1) * (n - k) for k in range(1, n + 1)
    )
    return lhs == schur_s(target, n)
