"""Symplectic Schubert polynomials C_w.

The top polynomial is a signed staircase monomial times Qtilde of the full
staircase; every other C_w is obtained by primed divided differences for
w^{-1} w_0.  Coefficients are signed in general.
"""

from __future__ import annotations

from .partitions import Partition, rho
from .polyring import Poly
from .symfunc import qtilde
from .weyl import SignedPerm, apply_dd_prime, longest_element


def c_top(n):
    """(-1)^{n(n-1)/2} x_1^{n-1} x_2^{n-2} ... x_n^0 * Qtilde_{rho_n}(X_n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    exps = tuple(n - k for k in range(1, n + 1))
    mono = Poly.monomial(n, exps, (-1) ** (n * (n - 1) // 2))
    return mono * qtilde(rho(n), n)


def c_w(w, n=None):
    """The Schubert polynomial of a type-C barred permutation."""
    if w.group_type != "C":
        raise ValueError("Schubert polynomials here are type C")
    if n is None:
        n = w.n
    if w.n != n:
        raise ValueError("rank mismatch")
    u = w.inverse() * longest_element(n, "C")
    return apply_dd_prime(u, c_top(n))


def grassmannian_element(parts, n):
    """The minimal-length coset representative attached to a strict
    partition: bars on the parts, then the complement ascending."""
    parts = Partition(parts)
    if not parts.is_strict() or not rho(n).contains(parts):
        raise ValueError(f"{parts} must be strict inside rho_{n}")
    rest = sorted(set(range(1, n + 1)) - set(parts))
    return SignedPerm(tuple(-p for p in parts) + tuple(rest), "C")
