"""Recursion engine for E-polynomials of moduli series along an exceptional class.

A series is the chain of classes gamma + k*gamma0 with gamma0 numerically
exceptional and the gamma0-twisted degree of gamma equal to one.  Writing
a = -chi(gamma, gamma0) and s for the anticanonical twist parameter, each
space is stratified by the number of independent maps from the exceptional
bundle, the strata are Grassmannian bundles over "zero strata", and the
zero strata vanish for a - s < l <= a.  Clearing the q-exponential
denominators turns those vanishings into an ascending triangular system:
each relation has a single new unknown with unit leading coefficient, so
the top s values of the series are determined exactly by the lower ones.

All identities are kept denominator-free through Gaussian binomials; the
engine never leaves integer polynomial arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

from .ktheory import KClass, PairingContext
from .qpoly import QPoly, gauss_binom, q_int


class SeriesValidationError(ValueError):
    """A series problem violates the numerical hypotheses of the recursion."""


class SeriesParams(NamedTuple):
    a: int
    s: int
    assumption_ok: bool


@dataclass(frozen=True)
class Diagnostic:
    """One verification record attached to a computed series."""

    name: str
    status: str  # "ok" | "failed" | "unverified-hypothesis"
    detail: str = ""


@dataclass(frozen=True)
class SeriesSpec:
    """One recursion problem: context, classes, emptiness floor, base values.

    bases must supply the E-polynomial for every k in [k_min, a - s]; values
    below k_min are zero by convention (empty moduli).  The floor is caller
    supplied, never inferred: where a chain bottoms out is a case-by-case
    geometric fact, not a numerical one.
    """

    ctx: PairingContext
    gamma: KClass
    gamma0: KClass
    k_min: int
    bases: Mapping[int, QPoly]

    def __post_init__(self) -> None:
        ctx = self.ctx
        if ctx.euler_pairing(self.gamma0, self.gamma0) != 1:
            raise SeriesValidationError("gamma0 is not numerically exceptional")
        if self.gamma0.r < 1:
            raise SeriesValidationError("gamma0 must have positive rank")
        if ctx.twisted_invariants(self.gamma0, self.gamma).deg != 1:
            raise SeriesValidationError("series requires twisted degree deg_{gamma0}(gamma) = 1")
        s_model = ctx.surface
        anti = -s_model.intersect(s_model.canonical, s_model.polarization)
        if self.gamma0.r * anti <= 1:
            raise SeriesValidationError("series requires rk(gamma0) (-K.H) > 1")
        a, s = self.a, self.s
        if a < 1:
            raise SeriesValidationError("series requires a = -chi(gamma, gamma0) >= 1")
        if s < 1:
            raise SeriesValidationError("series requires s >= 1")
        bases = {int(k): v for k, v in self.bases.items()}
        object.__setattr__(self, "bases", bases)
        needed = set(range(self.k_min, a - s + 1))
        have = set(bases)
        if have - needed:
            raise SeriesValidationError(f"unexpected base indices {sorted(have - needed)}")
        if needed - have:
            raise SeriesValidationError(f"missing base indices {sorted(needed - have)}")

    @property
    def a(self) -> int:
        return -self.ctx.euler_pairing(self.gamma, self.gamma0)

    @property
    def s(self) -> int:
        # s = -(K, c1(gamma0^dual ⊗ gamma)), read off as the pairing defect
        return self.ctx.euler_pairing(self.gamma0, self.gamma) - self.ctx.euler_pairing(
            self.gamma, self.gamma0
        )

    def class_at(self, k: int) -> KClass:
        return self.gamma + k * self.gamma0

    def assumption_ok(self) -> bool:
        """The standing rank assumption rk(gamma - chi(gamma0, gamma) gamma0) >= 0."""
        chi = self.ctx.euler_pairing(self.gamma0, self.gamma)
        return (self.gamma - chi * self.gamma0).r >= 0


@dataclass(frozen=True)
class SeriesResult:
    """Solved series: values and zero strata for k_min <= k <= a, plus checks."""

    values: dict[int, QPoly]
    zero_strata: dict[int, QPoly]
    diagnostics: tuple[Diagnostic, ...] = field(default_factory=tuple)

    @property
    def all_ok(self) -> bool:
        return all(d.status != "failed" for d in self.diagnostics)


def series_params(spec: SeriesSpec) -> SeriesParams:
    """The pair (a, s) and whether the standing rank assumption holds.

    A failing assumption is reported, not fatal: the engine still solves the
    relations but marks the outputs unverified.
    """
    return SeriesParams(spec.a, spec.s, spec.assumption_ok())


def _value(spec: SeriesSpec, values: Mapping[int, QPoly], k: int) -> QPoly:
    if k < spec.k_min:
        return QPoly.zero()
    return values[k]


def zero_stratum(spec: SeriesSpec, values: Mapping[int, QPoly], l: int) -> QPoly:
    """E-polynomial of the locus with no maps from the exceptional bundle.

    Inclusion-exclusion over the Grassmannian-bundle stratification:
    sum_j (-1)^j t^(j(j-1)/2) gauss_binom(a - l + j, j) values[l - j],
    the sum stopping below the emptiness floor.
    """
    a = spec.a
    acc = QPoly.zero()
    j = 0
    while l - j >= spec.k_min:
        term = gauss_binom(a - l + j, j) * _value(spec, values, l - j)
        term = term.shift(j * (j - 1) // 2)
        acc = acc + term if j % 2 == 0 else acc - term
        j += 1
    return acc


def relation_residual(spec: SeriesSpec, values: Mapping[int, QPoly], l: int) -> QPoly:
    """The vanishing relation for top index l, evaluated on a value table.

    For a - s < l <= a the zero stratum is empty, so the alternating sum
    must be the zero polynomial; a nonzero residual means the supplied
    values are mutually inconsistent.
    """
    a, s = spec.a, spec.s
    if not a - s < l <= a:
        raise ValueError("relation index must satisfy a - s < l <= a")
    return zero_stratum(spec, values, l)


def extend_series(spec: SeriesSpec) -> SeriesResult:
    """Solve the vanishing relations for the top s values of the series.

    Proceeds strictly ascending in l = a-s+1, ..., a so that each relation
    has exactly one unknown, with unit leading coefficient; afterwards every
    zero stratum and every residual is recomputed as a diagnostic.
    """
    a, s = spec.a, spec.s
    values: dict[int, QPoly] = {k: spec.bases[k] for k in sorted(spec.bases)}
    for l in range(a - s + 1, a + 1):
        acc = QPoly.zero()
        j = 1
        while l - j >= spec.k_min:
            term = gauss_binom(a - l + j, j) * _value(spec, values, l - j)
            term = term.shift(j * (j - 1) // 2)
            acc = acc + term if j % 2 == 1 else acc - term
            j += 1
        values[l] = acc

    zero_strata = {l: zero_stratum(spec, values, l) for l in range(spec.k_min, a + 1)}

    diagnostics: list[Diagnostic] = []
    hypothesis = spec.assumption_ok()
    if not hypothesis:
        diagnostics.append(
            Diagnostic(
                "standing-rank-assumption",
                "unverified-hypothesis",
                "rk(gamma - chi(gamma0, gamma) gamma0) < 0; solved values are "
                "formal consequences of the relations only",
            )
        )
    else:
        diagnostics.append(Diagnostic("standing-rank-assumption", "ok"))
    for l in range(a - s + 1, a + 1):
        res = zero_strata[l]
        diagnostics.append(
            Diagnostic(
                f"relation-residual l={l}",
                "ok" if res.is_zero else "failed",
                "" if res.is_zero else f"residual {res}",
            )
        )
    result = SeriesResult(values, zero_strata, tuple(diagnostics))
    reassembly: list[Diagnostic] = []
    for k in range(spec.k_min, a + 1):
        back = reassemble(spec, result, k)
        ok = back == values[k]
        reassembly.append(
            Diagnostic(
                f"reassembly k={k}",
                "ok" if ok else "failed",
                "" if ok else f"strata sum {back} != value {values[k]}",
            )
        )
    return SeriesResult(values, zero_strata, tuple(diagnostics + reassembly))


def reassemble(spec: SeriesSpec, result: SeriesResult, k: int) -> QPoly:
    """Rebuild values[k] as sum_j gauss_binom(a + j - k, j) zero_strata[k - j].

    This inverts the zero-stratum inclusion-exclusion, so it must reproduce
    the stored value exactly; it is a verification, not a derivation.
    """
    a = spec.a
    if k > a:
        raise ValueError("stratification index exceeds the series top")
    if k < spec.k_min:
        return QPoly.zero()
    acc = QPoly.zero()
    j = 0
    while k - j >= spec.k_min:
        acc = acc + gauss_binom(a + j - k, j) * result.zero_strata[k - j]
        j += 1
    return acc


def closed_form_p2(
    spec: SeriesSpec, values: Mapping[int, QPoly]
) -> tuple[QPoly, QPoly, QPoly]:
    """Direct formulas for the top three values when s = 3.

    Eliminating the two intermediate relations by hand gives, for
    l = a-2, a-1, a, alternating sums over values[k], k <= a - 3 with
    weights gauss_binom(j+3, 2), [j+3][j+1] and gauss_binom(j+2, 2) and
    offsets t^(j(j+1)/2).  Must agree with extend_series output.
    """
    if spec.s != 3:
        raise ValueError("closed forms require s = 3")
    a = spec.a

    def alternating(weight) -> QPoly:
        acc = QPoly.zero()
        j = 0
        while a - 3 - j >= spec.k_min:
            term = weight(j) * _value(spec, values, a - 3 - j)
            term = term.shift(j * (j + 1) // 2)
            acc = acc + term if j % 2 == 0 else acc - term
            j += 1
        return acc

    return (
        alternating(lambda j: gauss_binom(j + 3, 2)),
        alternating(lambda j: q_int(j + 3) * q_int(j + 1)),
        alternating(lambda j: gauss_binom(j + 2, 2)),
    )
