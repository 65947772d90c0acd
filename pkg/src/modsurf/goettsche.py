"""E-polynomials of Hilbert schemes of points via Goettsche's product formula.

These supply the rank-one base cases of the recursion engine: a rank-one
moduli space on a rational surface is a Hilbert scheme of points after
twisting away the determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .ktheory import PairingContext
from .qpoly import QPoly
from .surface import DivisorClass, SurfaceModel


@dataclass(frozen=True)
class BettiData:
    """Even-degree virtual Betti numbers (b_0, b_2, b_4) of a surface."""

    b: tuple[int, ...]

    def __post_init__(self) -> None:
        b = tuple(int(v) for v in self.b)
        object.__setattr__(self, "b", b)
        if not b or any(v < 0 for v in b):
            raise ValueError("Betti numbers must be nonnegative")

    @classmethod
    def for_surface(cls, surface: SurfaceModel) -> "BettiData":
        # rational surface: b_0 = b_4 = 1 and b_2 = Picard rank
        return cls((1, surface.rho, 1))


def hilb_epoly(betti: BettiData, n: int) -> QPoly:
    """E-polynomial of the Hilbert scheme of n points on the surface.

    Coefficient of z^n in prod_{m>=1} prod_i (1 - t^(m-1+i) z^m)^(-b_{2i}),
    expanded exactly to order n.
    """
    if n < 0:
        raise ValueError("number of points must be nonnegative")
    series: list[QPoly] = [QPoly.one()] + [QPoly.zero()] * n
    for m in range(1, n + 1):
        for i, b in enumerate(betti.b):
            if b == 0:
                continue
            d = m - 1 + i
            out: list[QPoly] = list(series[:m])
            for j in range(m, n + 1):
                acc = series[j]
                for mu in range(1, j // m + 1):
                    acc = acc + comb(b - 1 + mu, mu) * series[j - m * mu].shift(d * mu)
                out.append(acc)
            series = out
    return series[n]


def rank1_moduli_epoly(ctx: PairingContext, c1: DivisorClass, chi: int) -> QPoly:
    """E-polynomial of the rank-one moduli space with invariants (1, c1, chi).

    Twisting by O(-c1) identifies the space with a Hilbert scheme of points
    of colength chi(O(c1)) - chi.  A negative colength means the space is
    empty and the zero polynomial is returned.
    """
    line = ctx.line_bundle_class(c1)
    colength = line.chi - chi
    if colength < 0:
        return QPoly.zero()
    return hilb_epoly(BettiData.for_surface(ctx.surface), colength)
