"""Self-verification suite: recompute the published tables and the identities.

Every check is exact (integer polynomial equality); there are no tolerances.
The CLI `selftest` subcommand prints one line per check and exits nonzero
when anything fails.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .configio import BUNDLED_SERIES, load_bundled_series, moduli_label
from .goettsche import BettiData, hilb_epoly
from .invariants import ExceptionalPair, moduli_dim
from .ktheory import KClass, PairingContext
from .qpoly import QPoly, gauss_alternating_sum, gauss_binom, q_int
from .series import (
    SeriesResult,
    SeriesSpec,
    closed_form_p2,
    extend_series,
    reassemble,
    relation_residual,
    series_params,
)
from .strata import StratumType, enumerate_strata, hom_dim
from .surface import DivisorClass, preset_p1xp1, preset_p2


@dataclass(frozen=True)
class CheckResult:
    criterion: int
    name: str
    ok: bool
    detail: str = ""


# Published table rows the recursion must reproduce, keyed by (r, c1, chi).
EXPECTED_ROWS: dict[str, dict[int, QPoly]] = {
    "p2-series-a": {
        1: QPoly.of(1, 2, 6, 9, 12, 9, 6, 2, 1),  # M_H(2,H,1)
        2: QPoly.of(1, 2, 5, 8, 10, 8, 5, 2, 1),  # M_H(3,H,2)
        3: QPoly.of(1, 1, 3, 3, 3, 1, 1),  # M_H(4,H,3)
    },
    "p2-series-b": {
        2: QPoly.of(1, 2, 6, 12, 24, 38, 54, 59, 54, 38, 24, 12, 6, 2, 1),  # M_H(3,H,1)
        3: QPoly.of(1, 2, 5, 10, 18, 28, 38, 42, 38, 28, 18, 10, 5, 2, 1),  # M_H(4,H,2)
        4: QPoly.of(1, 1, 3, 5, 8, 10, 12, 10, 8, 5, 3, 1, 1),  # M_H(5,H,3)
    },
    "p2-series-c": {
        2: QPoly.of(1, 2, 5, 8, 13, 14, 13, 8, 5, 2, 1),  # M_H(5,-2H,-1)
        3: QPoly.of(1, 2, 4, 6, 9, 10, 9, 6, 4, 2, 1),  # M_H(7,-3H,-1)
        4: QPoly.of(1, 1, 2, 2, 3, 2, 2, 1, 1),  # M_H(9,-4H,-1) = Gr(6,2)
    },
}

P2_BETTI = BettiData((1, 1, 1))


def _solved(cache: dict, name: str) -> tuple[SeriesSpec, SeriesResult]:
    if name not in cache:
        spec = load_bundled_series(name).spec
        cache[name] = (spec, extend_series(spec))
    return cache[name]


def _rows_check(cache: dict, criterion: int, name: str, extra: str = "") -> CheckResult:
    spec, result = _solved(cache, name)
    bad = []
    for k, expected in EXPECTED_ROWS[name].items():
        if result.values[k] != expected:
            bad.append(f"k={k}: got {result.values[k]}, want {expected}")
    ok = not bad
    detail = "; ".join(bad) if bad else extra
    return CheckResult(criterion, f"{name} reproduces its published rows", ok, detail)


def check_goettsche_base_cases() -> CheckResult:
    expected = {
        2: QPoly.of(1, 2, 3, 2, 1),
        3: QPoly.of(1, 2, 5, 6, 5, 2, 1),
        4: QPoly.of(1, 2, 6, 10, 13, 10, 6, 2, 1),
    }
    bad = [
        f"n={n}" for n, want in expected.items() if hilb_epoly(P2_BETTI, n) != want
    ]
    return CheckResult(
        1,
        "Hilbert-scheme generating function matches the rank-one rows (n = 2, 3, 4)",
        not bad,
        "; ".join(bad),
    )


def check_series_a(cache: dict) -> CheckResult:
    res = _rows_check(cache, 2, "p2-series-a")
    return res


def check_series_b(cache: dict) -> CheckResult:
    spec, result = _solved(cache, "p2-series-b")
    res = _rows_check(cache, 3, "p2-series-b")
    if res.ok and result.values[2].coefficient(7) != 59:
        return CheckResult(3, res.name, False, "t^7 coefficient of the rank-3 row is off")
    return res


def check_series_c(cache: dict) -> CheckResult:
    spec, result = _solved(cache, "p2-series-c")
    res = _rows_check(cache, 4, "p2-series-c")
    if res.ok and result.values[4] != gauss_binom(6, 2):
        return CheckResult(4, res.name, False, "top value is not e(Gr(6,2))")
    return res


def check_sanity_series(cache: dict) -> CheckResult:
    spec, result = _solved(cache, "p2-sanity-a2")
    ok = result.values[0] == hilb_epoly(P2_BETTI, 2) and result.values[2] == QPoly.of(
        1, 1, 1
    )
    return CheckResult(
        5,
        "a = 2 sanity chain: Hilb^2 at the bottom, e(P^2) at the top",
        ok,
        "" if ok else f"values[0]={result.values[0]}, values[2]={result.values[2]}",
    )


def check_blowup_identities(cache: dict) -> CheckResult:
    _, series_a = _solved(cache, "p2-series-a")
    exceptional_band = q_int(3).shift(1)  # t + t^2 + t^3, codimension-4 center
    first = hilb_epoly(P2_BETTI, 3) == series_a.values[3] + QPoly.of(1, 1, 1) * exceptional_band
    second = series_a.values[2] == gauss_binom(6, 2) + hilb_epoly(P2_BETTI, 2) * exceptional_band
    ok = first and second
    return CheckResult(
        6,
        "blow-up decompositions of e(M_H(1,H,0)) and e(M_H(3,-H,-1))",
        ok,
        "" if ok else f"first={first}, second={second}",
    )


def check_q_identities() -> CheckResult:
    bad = []
    for n in range(1, 21):
        if not gauss_alternating_sum(n).is_zero:
            bad.append(f"inversion fails at n={n}")
    for n in range(13):
        for k in range(n + 1):
            g = gauss_binom(n, k)
            if g != gauss_binom(n, n - k):
                bad.append(f"symmetry fails at ({n},{k})")
            if n >= 1 and g != gauss_binom(n - 1, k - 1) + gauss_binom(n - 1, k).shift(k):
                bad.append(f"Pascal fails at ({n},{k})")
    return CheckResult(
        7,
        "q-exponential inversion (n <= 20), Pascal and symmetry (n <= 12)",
        not bad,
        "; ".join(bad[:3]),
    )


def check_residuals_and_reassembly(cache: dict) -> CheckResult:
    bad = []
    for name in sorted(BUNDLED_SERIES):
        spec, result = _solved(cache, name)
        a, s, _ = series_params(spec)
        for l in range(a - s + 1, a + 1):
            if not relation_residual(spec, result.values, l).is_zero:
                bad.append(f"{name}: residual l={l}")
        for k in range(spec.k_min, a + 1):
            if reassemble(spec, result, k) != result.values[k]:
                bad.append(f"{name}: reassembly k={k}")
        if not result.all_ok:
            bad.append(f"{name}: diagnostics flag a failure")
    return CheckResult(
        8,
        "all relation residuals vanish and strata reassemble to the totals",
        not bad,
        "; ".join(bad[:4]),
    )


def check_structure(cache: dict) -> CheckResult:
    bad = []
    for name in sorted(BUNDLED_SERIES):
        spec, result = _solved(cache, name)
        for k in range(spec.k_min, spec.a + 1):
            cls = spec.class_at(k)
            poly = result.values[k]
            if cls.r <= 0 or poly.is_zero:
                continue
            label = f"{name} {moduli_label(cls)}"
            if not poly.is_palindrome():
                bad.append(f"{label}: not palindromic")
            if poly.constant_term != 1:
                bad.append(f"{label}: constant term {poly.constant_term}")
            if poly.degree != moduli_dim(spec.ctx, cls):
                bad.append(
                    f"{label}: degree {poly.degree} != dim {moduli_dim(spec.ctx, cls)}"
                )
    return CheckResult(
        9,
        "compact outputs are palindromic, start at 1, and have degree = moduli dim",
        not bad,
        "; ".join(bad[:4]),
    )


def _random_class(ctx: PairingContext, rng: random.Random) -> KClass:
    rho = ctx.surface.rho
    return KClass(
        rng.randint(-4, 4),
        DivisorClass(tuple(rng.randint(-5, 5) for _ in range(rho))),
        rng.randint(-6, 6),
    )


def check_pairing_layer(trials: int = 10_000) -> CheckResult:
    surfaces = [preset_p2(), preset_p1xp1(1), preset_p1xp1(2)]
    bad = []
    for surface in surfaces:
        ctx = PairingContext(surface)
        k = surface.canonical
        rng = random.Random(20260810)
        for _ in range(trials):
            x = _random_class(ctx, rng)
            y = _random_class(ctx, rng)
            e0 = _random_class(ctx, rng)
            left = ctx.euler_pairing(x, ctx.reflect_right(e0, y))
            right = ctx.euler_pairing(ctx.reflect_left(e0, x), y)
            if left != right:
                bad.append(f"adjunction fails on rho={surface.rho}")
                break
            defect = ctx.symmetry_defect(x, y)
            if defect != surface.intersect(k, y.r * x.c1 - x.r * y.c1):
                bad.append(f"defect identity fails on rho={surface.rho}")
                break
    return CheckResult(
        10,
        f"adjunction and symmetry-defect identities on {trials} random triples per surface",
        not bad,
        "; ".join(bad),
    )


def check_quadric_example() -> CheckResult:
    bad = []
    for n in range(1, 5):
        surface = preset_p1xp1(n)
        ctx = PairingContext(surface)
        pair = ExceptionalPair(ctx, ctx.structure_class())
        line = surface.divisor(-1, n + 1)
        if surface.intersect(line, surface.polarization) != 1:
            bad.append(f"n={n}: (L,H) != 1")
        if ctx.line_bundle_class(line).chi != 0:
            bad.append(f"n={n}: chi(L) != 0")
        for r in range(1, 2 * n + 1):
            gamma = KClass(1 + r, line, r)
            s = ctx.euler_pairing(pair.e0, gamma) - ctx.euler_pairing(gamma, pair.e0)
            if s != 2 * n:
                bad.append(f"n={n}, r={r}: s != 2n")
            if moduli_dim(ctx, gamma) != r * (2 * n - r):
                bad.append(f"n={n}, r={r}: dim != dim Gr(2n, r)")
    return CheckResult(
        11,
        "quadric chain: (L,H)=1, chi(L)=0, s=2n, dim M_H(1+r,L,r) = dim Gr(2n,r)",
        not bad,
        "; ".join(bad[:4]),
    )


def brute_force_strata(rank_e0: int, a: int, r: int) -> set:
    """Exhaustive multiset filter over admissible parts; the enumeration oracle."""
    pairs = sorted(
        (r_i, a_i)
        for r_i in range(1, r + 1)
        for a_i in range(1, a + 1)
        if a_i * rank_e0 >= r_i
    )
    found = set()

    def rec(idx: int, budget_a: int, chosen: list) -> None:
        if sum(p[0] for p in chosen) <= r:
            parts: dict = {}
            for p in chosen:
                parts[p] = parts.get(p, 0) + 1
            key = tuple(sorted((ri, ai, n) for (ri, ai), n in parts.items()))
            found.add((key, budget_a))
        for i in range(idx, len(pairs)):
            if pairs[i][1] <= budget_a:
                chosen.append(pairs[i])
                rec(i, budget_a - pairs[i][1], chosen)
                chosen.pop()

    rec(0, a, [])
    return found


def check_strata_enumeration() -> CheckResult:
    bad = []
    for rank_e0, a, r in product((1, 2), range(6), range(1, 6)):
        listed = enumerate_strata(rank_e0, a, r)
        as_set = {(st.parts, st.l) for st in listed}
        if len(as_set) != len(listed):
            bad.append(f"duplicates at rk={rank_e0}, a={a}, r={r}")
            continue
        if as_set != brute_force_strata(rank_e0, a, r):
            bad.append(f"oracle mismatch at rk={rank_e0}, a={a}, r={r}")
            continue
        n = a * rank_e0 - r
        for st in listed:
            if st.total_rank > r or st.total_length != a:
                bad.append(f"constraint violated at rk={rank_e0}, a={a}, r={r}")
                break
            if hom_dim(rank_e0, st, a) != a * rank_e0 - st.total_rank:
                bad.append(f"hom_dim formula at rk={rank_e0}, a={a}, r={r}")
                break
            if hom_dim(rank_e0, st, a) < n:
                bad.append(f"membership bound at rk={rank_e0}, a={a}, r={r}")
                break
    return CheckResult(
        12,
        "stratum enumeration matches the exhaustive oracle (rk <= 2, a <= 5, r <= 5)",
        not bad,
        "; ".join(bad[:4]),
    )


def check_closed_forms(cache: dict) -> CheckResult:
    bad = []
    for name in ("p2-series-a", "p2-series-b", "p2-series-c"):
        spec, result = _solved(cache, name)
        a = spec.a
        triple = closed_form_p2(spec, spec.bases)
        if triple != (result.values[a - 2], result.values[a - 1], result.values[a]):
            bad.append(name)
    return CheckResult(
        13,
        "closed three-term formulas agree with the solved relations (s = 3 series)",
        not bad,
        "; ".join(bad),
    )


def run_selftest() -> list[CheckResult]:
    cache: dict = {}
    return [
        check_goettsche_base_cases(),
        check_series_a(cache),
        check_series_b(cache),
        check_series_c(cache),
        check_sanity_series(cache),
        check_blowup_identities(cache),
        check_q_identities(),
        check_residuals_and_reassembly(cache),
        check_structure(cache),
        check_pairing_layer(),
        check_quadric_example(),
        check_strata_enumeration(),
        check_closed_forms(cache),
    ]
