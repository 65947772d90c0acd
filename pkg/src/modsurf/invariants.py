"""Scalar invariants and predicates for moduli of sheaves on a rational surface.

Dimension formulas, existence tests for mu-stable bundles with exceptional
determinant direction, coherent-system and Grassmannian-bundle parameters,
and the distinguished lattice classes spanning the claimed nef cone.

Dimension conventions: moduli_dim is the coarse-space dimension 1 - chi(e, e);
stack_dim_mu_ss is the stack dimension -chi(e, e).  Both are exposed under
distinct names on purpose.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .ktheory import KClass, PairingContext
from .lattice import kernel_of_functional
from .surface import DivisorClass


class Existence(enum.Enum):
    """Verdict of the numerical existence test for mu-stable bundles.

    BOUNDARY is reserved: the necessary and the sufficient numerical bounds
    coincide, so the implemented test only ever answers EXISTS or EMPTY.
    """

    EXISTS = "exists"
    EMPTY = "empty"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class ExceptionalPair:
    """A pairing context together with the class of a stable exceptional bundle."""

    ctx: PairingContext
    e0: KClass

    def __post_init__(self) -> None:
        if self.e0.r < 1:
            raise ValueError("exceptional class must have positive rank")
        if self.ctx.euler_pairing(self.e0, self.e0) != 1:
            raise ValueError("class is not numerically exceptional: chi(e0, e0) != 1")

    @property
    def rank(self) -> int:
        return self.e0.r


class GrassmannianBundle(NamedTuple):
    space_dim: int  # ambient dimension N of the fiber Gr(N, k)
    sub_dim: int  # subspace dimension k
    base: KClass  # invariants of the base moduli space
    dualized: bool  # True when the description goes through the dual side


class BirationalFiber(NamedTuple):
    k: int
    s: int
    dim_drop: int


class NefRays(NamedTuple):
    alpha: KClass
    beta: KClass
    applicable: bool


def moduli_dim(ctx: PairingContext, e: KClass) -> int:
    """Expected coarse dimension 1 - chi(e, e) of the moduli space of class e."""
    return 1 - ctx.euler_pairing(e, e)


def stack_dim_mu_ss(pair: ExceptionalPair, r: int, a: int) -> int:
    """Stack dimension 2 r a rk(e0) - r^2 of the mu-semistable locus for r*e0 - a*omega."""
    if r < 1:
        raise ValueError("r must be positive")
    return 2 * r * a * pair.rank - r * r


def mu_stable_exists(pair: ExceptionalPair, r: int, a: int) -> Existence:
    """Existence of a mu-stable sheaf with invariants r*e0 - a*omega.

    Nonempty exactly when a rk(e0) >= r, plus the rigid case (r, a) = (1, 0)
    where the bundle is e0 itself.  Negative a is empty outright.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if a < 0:
        return Existence.EMPTY
    if (r, a) == (1, 0) or a * pair.rank >= r:
        return Existence.EXISTS
    return Existence.EMPTY


def codim_bound(pair: ExceptionalPair, n: int, r: int, a_small: int, p: int) -> int:
    """Lower bound n^2 + (r rk(e0) - 1)(a + p) for the bad-locus codimension."""
    if min(n, r, a_small, p) < 0:
        raise ValueError("arguments must be nonnegative")
    return n * n + (r * pair.rank - 1) * (a_small + p)


def quot_dim(rk_l: int, a: int) -> int:
    """Dimension (rk L + 1) a of the Quot scheme of length-a quotients of L."""
    if rk_l < 1:
        raise ValueError("rk L must be positive")
    if a < 0:
        raise ValueError("length must be nonnegative")
    return (rk_l + 1) * a


def syst_dim(pair: ExceptionalPair, gamma: KClass, n: int) -> int:
    """Dimension of the space of n-section coherent systems over class gamma."""
    if n < 0:
        raise ValueError("number of sections must be nonnegative")
    chi = pair.ctx.euler_pairing(pair.e0, gamma)
    return moduli_dim(pair.ctx, gamma) - n * (n - chi)


def gr_bundle_params(pair: ExceptionalPair, gamma: KClass, n: int) -> GrassmannianBundle:
    """Fiber and base of the Grassmannian-bundle structure on coherent systems.

    With m = -chi(gamma, e0) the fiber is Gr(m + n, n).  The base is the
    moduli space of gamma - n*e0 when that class keeps nonnegative rank,
    and of n*dual(e0) - dual(gamma) on the dual side otherwise.
    """
    if n < 1:
        raise ValueError("need at least one section")
    ctx = pair.ctx
    m = -ctx.euler_pairing(gamma, pair.e0)
    if gamma.r >= n * pair.e0.r:
        return GrassmannianBundle(m + n, n, gamma - n * pair.e0, False)
    base = n * ctx.dual(pair.e0) - ctx.dual(gamma)
    return GrassmannianBundle(m + n, n, base, True)


def _twist_parameter(pair: ExceptionalPair, e: KClass) -> int:
    # s = -(K, c1(e0^dual ⊗ e)); by the pairing's symmetry defect this is
    # chi(e0, e) - chi(e, e0)
    ctx = pair.ctx
    return ctx.euler_pairing(pair.e0, e) - ctx.euler_pairing(e, pair.e0)


def birational_fiber_check(pair: ExceptionalPair, e: KClass) -> BirationalFiber:
    """Generic-fiber data of the projection to the reflected class.

    Requires 0 > chi(e, e0) = -k >= -s; then the drop in expected dimension
    from e to its left reflection equals k(s - k), the dimension of the
    generic Gr(s, k) fiber, and k = s is the birational case.
    """
    ctx = pair.ctx
    k = -ctx.euler_pairing(e, pair.e0)
    s = _twist_parameter(pair, e)
    if not 0 < k <= s:
        raise ValueError("need 0 > chi(e, e0) >= -s")
    drop = moduli_dim(ctx, e) - moduli_dim(ctx, ctx.reflect_left(pair.e0, e))
    if drop != k * (s - k):
        raise ArithmeticError("fiber dimension bookkeeping failed")
    return BirationalFiber(k, s, drop)


def perp_basis(ctx: PairingContext, e: KClass) -> list[KClass]:
    """Canonical integral basis of { x : chi(e, x) = 0 } in the class lattice.

    Classes are coordinatized as (r, c1, chi) in Z^(2 + rho); the functional
    x -> chi(e, x) is linear there and its kernel is computed exactly, then
    normalized to Hermite echelon form for reproducibility.
    """
    if e.is_zero:
        raise ValueError("zero class has no orthogonal complement of interest")
    s = ctx.surface
    ctx._check(e)
    coeff_r = e.chi - e.r + s.intersect(s.canonical, e.c1)
    coeff_c = [
        -sum(s.gram[i][j] * e.c1.coords[i] for i in range(s.rho)) for j in range(s.rho)
    ]
    functional = [coeff_r, *coeff_c, e.r]
    rows = kernel_of_functional(functional)
    return [
        KClass(row[0], DivisorClass(row[1 : 1 + s.rho]), row[1 + s.rho]) for row in rows
    ]


def _alpha(ctx: PairingContext, e: KClass) -> KClass:
    oh = ctx.curve_structure_class(ctx.surface.polarization)
    return (-e.r) * oh + ctx.euler_pairing(e, oh) * ctx.point_class()


def alpha_class(ctx: PairingContext, e: KClass) -> KClass:
    """The class -(rk e) O_H + chi(e, O_H) C_P; lies in the perp lattice of e."""
    if e.r <= 0:
        raise ValueError("alpha class needs positive rank")
    return _alpha(ctx, e)


def beta_class(pair: ExceptionalPair, e: KClass) -> KClass:
    """Right reflection of the alpha class of the left reflection of e."""
    if e.r <= 0:
        raise ValueError("beta class needs positive rank")
    ctx = pair.ctx
    tilde = ctx.reflect_left(pair.e0, e)
    return ctx.reflect_right(pair.e0, _alpha(ctx, tilde))


def nef_rays(pair: ExceptionalPair, e: KClass) -> NefRays:
    """Claimed boundary rays alpha_e, beta_e of the nef cone of the moduli space.

    The generation claim is only made when e0 is the structure-sheaf class,
    rk e > 0 and chi(e, e0) < 0; outside that range the classes are still
    returned but flagged not applicable.
    """
    if e.r <= 0:
        raise ValueError("nef rays need positive rank")
    ctx = pair.ctx
    applicable = (
        pair.e0 == ctx.structure_class() and ctx.euler_pairing(e, pair.e0) < 0
    )
    return NefRays(alpha_class(ctx, e), beta_class(pair, e), applicable)
