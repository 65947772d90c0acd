"""Boundary strata of the contracted moduli space, with dimension bookkeeping.

A stratum type records a product of symmetric powers of mu-stable loci with
invariants r_i*e0 - a_i*omega (multiplicity n_i, the (r_i, a_i) pairwise
distinct) times a symmetric power S^l of the surface.  For total invariants
(a, r) the admissible types are exactly those with

    a_i rk(e0) >= r_i,   l + sum_i n_i a_i = a,   sum_i n_i r_i <= r.

Only the rank of the exceptional bundle enters, so the functions take it
directly as an integer.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class StratumType:
    """Parts (r_i, a_i, n_i) with distinct (r_i, a_i), plus l punctual factors."""

    parts: tuple[tuple[int, int, int], ...]
    l: int

    def __post_init__(self) -> None:
        parts = tuple(tuple(int(v) for v in p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if self.l < 0:
            raise ValueError("punctual length l must be nonnegative")
        seen = set()
        for r_i, a_i, n_i in parts:
            if r_i < 1 or a_i < 0 or n_i < 1:
                raise ValueError("parts must have r_i >= 1, a_i >= 0, n_i >= 1")
            if (r_i, a_i) in seen:
                raise ValueError("duplicate (r_i, a_i) pair in stratum parts")
            seen.add((r_i, a_i))

    @property
    def total_rank(self) -> int:
        return sum(n * r for r, _a, n in self.parts)

    @property
    def total_length(self) -> int:
        return self.l + sum(n * a for _r, a, n in self.parts)


def normality_hypothesis_ok(rank_e0: int, r: int) -> bool:
    """Whether r * rk(e0) >= 2, the hypothesis under which the list is proven."""
    return r * rank_e0 >= 2


def brill_noether_index(rank_e0: int, a: int, r: int) -> int:
    """The index n = a rk(e0) - r; the decomposition's home turf is n >= 0."""
    return a * rank_e0 - r


def enumerate_strata(rank_e0: int, a: int, r: int) -> list[StratumType]:
    """All stratum types for total invariants (a, r), in canonical order.

    Requires a >= 0 and r >= 1; a negative Brill-Noether index is reported
    by brill_noether_index, not raised, since the enumeration itself is
    well defined for any bounds (a = 0 gives the single bare stratum).
    The order is by total rank sum(n_i r_i), then by the part tuple, then
    by l; the list is duplicate-free by construction (parts are generated
    as strictly increasing (r_i, a_i) sequences).
    """
    if rank_e0 < 1:
        raise ValueError("rk(e0) must be positive")
    if a < 0 or r < 1:
        raise ValueError("need a >= 0 and r >= 1")

    pairs = [
        (r_i, a_i)
        for r_i in range(1, r + 1)
        for a_i in range(1, a + 1)
        if a_i * rank_e0 >= r_i
    ]
    out: list[StratumType] = []

    def descend(start: int, budget_a: int, budget_r: int, parts: list) -> None:
        out.append(StratumType(tuple(parts), budget_a))
        for idx in range(start, len(pairs)):
            r_i, a_i = pairs[idx]
            if a_i > budget_a or r_i > budget_r:
                continue
            n_max = min(budget_a // a_i, budget_r // r_i)
            for n in range(1, n_max + 1):
                parts.append((r_i, a_i, n))
                descend(idx + 1, budget_a - n * a_i, budget_r - n * r_i, parts)
                parts.pop()

    descend(0, a, r)
    out.sort(key=lambda st: (st.total_rank, st.parts, st.l))
    return out


def stratum_dim(rank_e0: int, st: StratumType) -> int:
    """Dimension: each part contributes n_i (2 r_i a_i rk(e0) - r_i^2 + 1), plus 2l."""
    dim = 2 * st.l
    for r_i, a_i, n_i in st.parts:
        dim += n_i * (2 * r_i * a_i * rank_e0 - r_i * r_i + 1)
    return dim


def hom_dim(rank_e0: int, st: StratumType, a: int) -> int:
    """dim Hom(F, E0) for a sheaf of stratum type st: a rk(e0) - sum_i n_i r_i."""
    return a * rank_e0 - st.total_rank
