"""Numerical models of rational surfaces.

A surface enters every computation only through its Neron-Severi lattice:
Picard rank, intersection form, canonical class and polarization.  Models
are validated against the standing assumptions (K, H) < 0 and H.H > 0 at
construction and are immutable afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class DivisorClass:
    """Element of NS(X) in the model's fixed integral basis."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(v) for v in self.coords))

    def __len__(self) -> int:
        return len(self.coords)

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for v in self.coords)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self) != len(other):
            raise ValueError("dimension mismatch")
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        if len(self) != len(other):
            raise ValueError("dimension mismatch")
        return DivisorClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-v for v in self.coords))

    def __mul__(self, scalar: int) -> "DivisorClass":
        if not isinstance(scalar, int):
            return NotImplemented
        return DivisorClass(tuple(scalar * v for v in self.coords))

    __rmul__ = __mul__


@dataclass(frozen=True)
class SurfaceModel:
    """Rational surface with chi(O_X) = 1, polarized so that (K_X, H) < 0."""

    rho: int
    gram: tuple[tuple[int, ...], ...]
    canonical: DivisorClass
    polarization: DivisorClass
    chi_O: int = 1

    def __post_init__(self) -> None:
        if self.rho < 1:
            raise ValueError("Picard rank must be positive")
        gram = tuple(tuple(int(v) for v in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        if len(gram) != self.rho or any(len(row) != self.rho for row in gram):
            raise ValueError("intersection matrix must be rho x rho")
        for i in range(self.rho):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise ValueError("intersection matrix must be symmetric")
        if len(self.canonical) != self.rho or len(self.polarization) != self.rho:
            raise ValueError("dimension mismatch")
        if self.chi_O != 1:
            raise ValueError("only rational surfaces (chi(O) = 1) are supported")
        if self.intersect(self.polarization, self.polarization) <= 0:
            raise ValueError("polarization must satisfy H.H > 0")
        if self.intersect(self.canonical, self.polarization) >= 0:
            raise ValueError("model must satisfy (K, H) < 0")

    def divisor(self, *coords: int) -> DivisorClass:
        if len(coords) != self.rho:
            raise ValueError("dimension mismatch")
        return DivisorClass(coords)

    def zero_divisor(self) -> DivisorClass:
        return DivisorClass((0,) * self.rho)

    def intersect(self, d1: DivisorClass, d2: DivisorClass) -> int:
        """Intersection pairing d1.d2 on NS(X); symmetric in its arguments."""
        if len(d1) != self.rho or len(d2) != self.rho:
            raise ValueError("dimension mismatch")
        total = 0
        for i, a in enumerate(d1.coords):
            if a == 0:
                continue
            row = self.gram[i]
            total += a * sum(row[j] * b for j, b in enumerate(d2.coords))
        return total

    def to_dict(self) -> dict:
        return {
            "rho": self.rho,
            "gram": [list(row) for row in self.gram],
            "canonical": list(self.canonical.coords),
            "polarization": list(self.polarization.coords),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "SurfaceModel":
        return custom_surface(
            data["rho"], data["gram"], data["canonical"], data["polarization"]
        )


def preset_p2() -> SurfaceModel:
    """The projective plane with H the line class; K = -3H."""
    return SurfaceModel(
        rho=1,
        gram=((1,),),
        canonical=DivisorClass((-3,)),
        polarization=DivisorClass((1,)),
    )


def preset_p1xp1(n: int) -> SurfaceModel:
    """P^1 x P^1 with polarization of bidegree (1, n); K = (-2, -2)."""
    if n < 1:
        raise ValueError("polarization parameter must be a positive integer")
    return SurfaceModel(
        rho=2,
        gram=((0, 1), (1, 0)),
        canonical=DivisorClass((-2, -2)),
        polarization=DivisorClass((1, n)),
    )


def custom_surface(
    rho: int,
    gram: Sequence[Sequence[int]],
    canonical: Iterable[int],
    polarization: Iterable[int],
) -> SurfaceModel:
    """Build a validated model from raw lattice data.

    Rejects non-symmetric intersection matrices and any model violating
    (K, H) < 0 or H.H > 0.  No check is made that the data comes from an
    actual surface beyond these lattice-level constraints.
    """
    return SurfaceModel(
        rho=rho,
        gram=tuple(tuple(row) for row in gram),
        canonical=DivisorClass(tuple(canonical)),
        polarization=DivisorClass(tuple(polarization)),
    )
