"""K-theory classes on a rational surface and the Euler bilinear form.

A class is the triple (rank, c_1, chi); on a rational surface this triple
determines the K-theory class.  The pairing chi(x, y) is evaluated by the
closed Riemann-Roch formula

    chi(x, y) = r_x chi_y + r_y chi_x - r_x r_y - (c_x . c_y) + r_y (K . c_x)

which keeps the whole module in exact integer arithmetic.  Rank zero and
negative ranks are allowed: recursion chains and the boundary classes need
them.  Operations that require a positive rank say so and raise ValueError.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, NamedTuple

from .surface import DivisorClass, SurfaceModel


@dataclass(frozen=True)
class KClass:
    """Grothendieck-group element recorded as (rank, first Chern class, chi)."""

    r: int
    c1: DivisorClass
    chi: int

    @property
    def is_zero(self) -> bool:
        return self.r == 0 and self.chi == 0 and self.c1.is_zero

    def __add__(self, other: "KClass") -> "KClass":
        return KClass(self.r + other.r, self.c1 + other.c1, self.chi + other.chi)

    def __sub__(self, other: "KClass") -> "KClass":
        return KClass(self.r - other.r, self.c1 - other.c1, self.chi - other.chi)

    def __neg__(self) -> "KClass":
        return KClass(-self.r, -self.c1, -self.chi)

    def __mul__(self, scalar: int) -> "KClass":
        if not isinstance(scalar, int):
            return NotImplemented
        return KClass(scalar * self.r, scalar * self.c1, scalar * self.chi)

    __rmul__ = __mul__

    def to_dict(self) -> dict:
        return {"r": self.r, "c1": list(self.c1.coords), "chi": self.chi}

    @classmethod
    def from_dict(cls, data: Mapping) -> "KClass":
        return cls(int(data["r"]), DivisorClass(tuple(data["c1"])), int(data["chi"]))


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class TwistedInvariants(NamedTuple):
    rk: int
    deg: int
    chi: int


def _half(n: int, what: str) -> int:
    # lattice parity guarantees evenness for honest surface data
    if n % 2:
        raise ArithmeticError(f"parity failure: {what} is odd")
    return n // 2


@dataclass(frozen=True)
class PairingContext:
    """Binds K-classes to a surface model; all operations are pure."""

    surface: SurfaceModel

    # -- basic constructors --------------------------------------------------

    def kclass(self, r: int, c1_coords, chi: int) -> KClass:
        return KClass(r, self.surface.divisor(*c1_coords), chi)

    def zero_class(self) -> KClass:
        return KClass(0, self.surface.zero_divisor(), 0)

    def structure_class(self) -> KClass:
        """Class of O_X, i.e. (1, 0, chi(O_X))."""
        return KClass(1, self.surface.zero_divisor(), self.surface.chi_O)

    def point_class(self) -> KClass:
        """Class of a point's structure sheaf: (0, 0, 1)."""
        return KClass(0, self.surface.zero_divisor(), 1)

    def line_bundle_class(self, d: DivisorClass) -> KClass:
        return self.twist(self.structure_class(), d)

    # -- the pairing and its companions ---------------------------------------

    def _check(self, x: KClass) -> KClass:
        if len(x.c1) != self.surface.rho:
            raise ValueError("dimension mismatch")
        return x

    def euler_pairing(self, x: KClass, y: KClass) -> int:
        """Euler form chi(x, y) = sum_i (-1)^i dim Ext^i(x, y), as an integer."""
        self._check(x)
        self._check(y)
        s = self.surface
        return (
            x.r * y.chi
            + y.r * x.chi
            - x.r * y.r
            - s.intersect(x.c1, y.c1)
            + y.r * s.intersect(s.canonical, x.c1)
        )

    def symmetry_defect(self, x: KClass, y: KClass) -> int:
        """chi(x, y) - chi(y, x); equals (K, r_y c_x - r_x c_y)."""
        return self.euler_pairing(x, y) - self.euler_pairing(y, x)

    def dual(self, x: KClass) -> KClass:
        """Derived dual on classes: (r, -c1, chi + (c1 . K)); an involution."""
        self._check(x)
        k = self.surface.canonical
        return KClass(x.r, -x.c1, x.chi + self.surface.intersect(x.c1, k))

    def twist(self, x: KClass, d: DivisorClass) -> KClass:
        """Tensor by the line bundle O(d)."""
        self._check(x)
        s = self.surface
        chi = (
            x.chi
            + s.intersect(x.c1, d)
            + x.r * _half(s.intersect(d, d - s.canonical), "D.(D - K)")
        )
        return KClass(x.r, x.c1 + x.r * d, chi)

    def curve_structure_class(self, d: DivisorClass) -> KClass:
        """Class of O_D for an effective divisor D: (0, D, -(D.D + D.K)/2)."""
        s = self.surface
        chi = -_half(
            s.intersect(d, d) + s.intersect(d, s.canonical), "D.(D + K)"
        )
        return KClass(0, d, chi)

    def kernel_bundle_class(self, e0: KClass) -> KClass:
        """Class rk(e0) * e0 - omega of the kernel of ev: Hom(E0, .) ⊗ E0 -> C_x."""
        self._check(e0)
        if e0.r <= 0:
            raise ValueError("kernel bundle class needs rk(e0) > 0")
        return e0.r * e0 - self.point_class()

    def reflect_left(self, e0: KClass, x: KClass) -> KClass:
        """L_{e0}(x) = x - chi(x, e0) e0."""
        return x - self.euler_pairing(x, e0) * e0

    def reflect_right(self, e0: KClass, x: KClass) -> KClass:
        """R_{e0}(x) = x - chi(e0, x) e0."""
        return x - self.euler_pairing(e0, x) * e0

    # -- twisted invariants and stability comparators --------------------------

    def twisted_invariants(self, g: KClass, x: KClass) -> TwistedInvariants:
        """Rank, degree and chi of x measured after formally tensoring by g^dual."""
        self._check(g)
        self._check(x)
        if g.r <= 0:
            raise ValueError("twisting class must have positive rank")
        s = self.surface
        h = s.polarization
        deg = g.r * s.intersect(x.c1, h) - x.r * s.intersect(g.c1, h)
        return TwistedInvariants(g.r * x.r, deg, self.euler_pairing(g, x))

    def _reduced_hilbert_values(self, g: KClass, x: KClass) -> tuple[int, int, int]:
        # n -> chi_g(x(nH)) is an integer quadratic; three values pin it down
        h = self.surface.polarization
        return tuple(
            self.euler_pairing(g, self.twist(x, n * h)) for n in range(3)
        )  # type: ignore[return-value]

    def twisted_order(self, g: KClass, x: KClass, y: KClass) -> Ordering:
        """Compare the reduced twisted Hilbert polynomials of x and y.

        The comparison is the n >> 0 order of chi_g(x(nH))/rk_g(x) against
        chi_g(y(nH))/rk_g(y), decided lexicographically from the quadratic's
        top coefficient using cross-multiplied integers only.
        """
        if g.r <= 0 or x.r <= 0 or y.r <= 0:
            raise ValueError("twisted order requires positive ranks")
        px = self._reduced_hilbert_values(g, x)
        py = self._reduced_hilbert_values(g, y)
        rx, ry = g.r * x.r, g.r * y.r
        d0, d1, d2 = (ry * a - rx * b for a, b in zip(px, py))
        # difference quadratic An^2 + Bn + C through d0, d1, d2, doubled
        for v in (d2 - 2 * d1 + d0, 4 * d1 - 3 * d0 - d2, 2 * d0):
            if v > 0:
                return Ordering.GREATER
            if v < 0:
                return Ordering.LESS
        return Ordering.EQUAL

    def slope_order(self, g: KClass, x: KClass, y: KClass) -> Ordering:
        """Compare twisted slopes deg_g/rk_g only (the mu-stability comparator)."""
        ix = self.twisted_invariants(g, x)
        iy = self.twisted_invariants(g, y)
        if x.r <= 0 or y.r <= 0:
            raise ValueError("slope order requires positive ranks")
        diff = ix.deg * iy.rk - iy.deg * ix.rk
        if diff > 0:
            return Ordering.GREATER
        if diff < 0:
            return Ordering.LESS
        return Ordering.EQUAL
