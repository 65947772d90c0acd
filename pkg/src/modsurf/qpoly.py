"""Dense integer polynomials in one variable t, plus the q-combinatorics layer.

Everything here is exact: coefficients are arbitrary-precision integers, and
the Gaussian-binomial quotient is a checked polynomial division, so any
inconsistency in the combinatorial identities surfaces as a hard error
instead of silent drift.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping


@dataclass(frozen=True)
class QPoly:
    """Polynomial in t, coefficients ascending by degree, no trailing zeros.

    The zero polynomial is the empty coefficient tuple.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = tuple(int(v) for v in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def of(cls, *coeffs: int) -> "QPoly":
        return cls(coeffs)

    @classmethod
    def zero(cls) -> "QPoly":
        return cls(())

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "QPoly":
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls((0,) * degree + (coeff,))

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention degree(0) = -1."""
        return len(self.coeffs) - 1

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, degree: int) -> int:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return 0

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(value: "QPoly | int") -> "QPoly":
        if isinstance(value, QPoly):
            return value
        if isinstance(value, int):
            return QPoly((value,))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: "QPoly | int") -> "QPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-v for v in self.coeffs))

    def __sub__(self, other: "QPoly | int") -> "QPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "QPoly":
        return QPoly((other,)) - self

    def __mul__(self, other: "QPoly | int") -> "QPoly":
        if isinstance(other, int):
            return QPoly(tuple(other * v for v in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return QPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = QPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, degree: int) -> "QPoly":
        """Multiply by t**degree."""
        if degree < 0:
            raise ValueError("shift degree must be nonnegative")
        if self.is_zero:
            return self
        return QPoly((0,) * degree + self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def exact_div(self, other: "QPoly") -> "QPoly":
        """Exact quotient; raises ValueError if the division leaves a remainder."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return QPoly.zero()
        if self.degree < other.degree:
            raise ValueError("nonzero remainder in exact polynomial division")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        d = other.degree
        quot = [0] * (self.degree - d + 1)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + d]
            if c % lead:
                raise ValueError("nonzero remainder in exact polynomial division")
            f = c // lead
            quot[k] = f
            if f:
                for i, dc in enumerate(other.coeffs):
                    rem[k + i] -= f * dc
        if any(rem):
            raise ValueError("nonzero remainder in exact polynomial division")
        return QPoly(quot)

    # -- predicates and encodings -------------------------------------------

    def is_palindrome(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def to_dict(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_dict(cls, data: Mapping) -> "QPoly":
        coeffs = data["coeffs"]
        if not isinstance(coeffs, (list, tuple)) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in coeffs
        ):
            raise ValueError("coeffs must be a list of integers")
        return cls(tuple(coeffs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "t" if d == 1 else f"t^{d}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+{body}" if c > 0 else f"-{body}")
        return "".join(parts)


# -- q-integers, factorials, binomials ---------------------------------------


def q_int(n: int) -> QPoly:
    """The q-integer 1 + t + ... + t^(n-1); the E-polynomial of P^(n-1)."""
    if n < 0:
        raise ValueError("q_int is defined for n >= 0")
    return QPoly((1,) * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    """Product of the q-integers [1][2]...[n], with [0]! = 1."""
    if n < 0:
        raise ValueError("q_factorial is defined for n >= 0")
    if n == 0:
        return QPoly.one()
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def gauss_binom(n: int, k: int) -> QPoly:
    """Gaussian binomial [n]!/([k]![n-k]!); the E-polynomial of Gr(n, k).

    Out-of-range (k < 0 or k > n) yields the zero polynomial.  The quotient
    is taken by checked exact division, which doubles as a self-test of the
    q-factorial arithmetic.
    """
    if n < 0 or k < 0 or k > n:
        return QPoly.zero()
    return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k))


def gauss_alternating_sum(n: int) -> QPoly:
    """Signed sum over j of t^(j(j-1)/2) * gauss_binom(n, j).

    This is the q-exponential inversion identity with denominators cleared:
    it equals 1 for n = 0 and vanishes for every n >= 1.
    """
    if n < 0:
        raise ValueError("gauss_alternating_sum is defined for n >= 0")
    acc = QPoly.zero()
    for j in range(n + 1):
        term = gauss_binom(n, j).shift(j * (j - 1) // 2)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def symmetric_product_epoly(base: QPoly, n: int) -> QPoly:
    """E-polynomial of the n-th symmetric product of a space with the given one.

    Returns the z^n coefficient of prod_d (1 - t^d z)^(-b_d) where
    base = sum_d b_d t^d.  Requires nonnegative b_d.
    """
    if n < 0:
        raise ValueError("symmetric product order must be nonnegative")
    if any(c < 0 for c in base.coeffs):
        raise ValueError("base polynomial must have nonnegative coefficients")
    series: list[QPoly] = [QPoly.one()] + [QPoly.zero()] * n
    for d, b in enumerate(base.coeffs):
        if b == 0:
            continue
        out: list[QPoly] = []
        for j in range(n + 1):
            acc = QPoly.zero()
            for m in range(j + 1):
                acc = acc + comb(b - 1 + m, m) * series[j - m].shift(d * m)
            out.append(acc)
        series = out
    return series[n]


def is_palindrome(p: QPoly) -> bool:
    return p.is_palindrome()
