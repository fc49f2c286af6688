"""Exact arithmetic in Z[gamma^2], gamma = 2^(1/n).

An eigenvalue of the n-dimensional 2-rep-tile box lives in the ring
Z[gamma^2].  As a free Z-module this ring has basis {gamma^j} for odd n
and {gamma^(2j)} for even n; either way the basis elements are the powers
t^j, j = 0..r-1, of a single root t = 2^(1/r):

    n even:  r = n/2, t = gamma^2
    n odd :  r = n,   t = gamma
    n = 1 :  r = 1,   t = 2   (plain integers; the triangle's value ring,
                               where one gamma^2 step doubles the value)

Reduction uses t^r = 2, so coefficient vectors of length r are canonical:
two values are equal as reals iff their coefficient vectors are identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import DivisibilityError, DomainError

LESS, EQUAL, GREATER = -1, 0, 1


def basis_len(n: int) -> int:
    if n < 1:
        raise DomainError(f"ring dimension must be >= 1, got {n}")
    if n == 1:
        return 1
    return n if n % 2 else n // 2


def _gamma2_steps(n: int) -> int:
    # number of t-shifts that make up one gamma^2 factor
    return 2 if (n % 2 and n > 1) else 1


@dataclass(frozen=True)
class AlgebraicValue:
    """Element of Z[gamma^2] as an integer coefficient vector over {t^j}."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        r = basis_len(self.n)
        if len(self.coeffs) != r:
            raise DomainError(
                f"ring n={self.n} needs {r} coefficients, got {len(self.coeffs)}"
            )
        if not all(isinstance(c, int) for c in self.coeffs):
            raise DomainError("coefficients must be integers")

    def __float__(self) -> float:
        r = len(self.coeffs)
        return float(sum(c * 2.0 ** (j / r) for j, c in enumerate(self.coeffs)))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def text(self) -> str:
        """Canonical form "c0 + c1*g^e1 + ...", g = 2^(1/n)."""
        step = 2 if (self.n % 2 == 0 and self.n > 1) else 1  # g-exponent per index
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            parts.append(str(c) if j == 0 else f"{c}*g^{j * step}")
        if not parts:
            return "0"
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.text()

    # ordering delegates to the exact comparison below
    def __lt__(self, other: AlgebraicValue) -> bool:
        return compare(self, other) == LESS

    def __le__(self, other: AlgebraicValue) -> bool:
        return compare(self, other) != GREATER

    def __gt__(self, other: AlgebraicValue) -> bool:
        return compare(self, other) == GREATER

    def __ge__(self, other: AlgebraicValue) -> bool:
        return compare(self, other) != LESS


def integer_value(n: int, z: int) -> AlgebraicValue:
    """z * t^0 in the ring of dimension n."""
    r = basis_len(n)
    return AlgebraicValue(n, (z,) + (0,) * (r - 1))


def zero(n: int) -> AlgebraicValue:
    return integer_value(n, 0)


def from_quantum_number(n: int, m: tuple[int, ...]) -> AlgebraicValue:
    """Eigenvalue sum((gamma^(j-1) m_j)^2) in canonical form.

    n = 1 is the triangle's integer ring: m is a pair and the value is
    m0^2 + m1^2.
    """
    if any(not isinstance(e, int) or e < 0 for e in m):
        raise DomainError(f"quantum number entries must be nonnegative integers: {m}")
    if n == 1:
        if len(m) != 2:
            raise DomainError("triangle quantum numbers are pairs")
        return AlgebraicValue(1, (m[0] ** 2 + m[1] ** 2,))
    if len(m) != n:
        raise DomainError(f"expected {n} entries, got {len(m)}")
    r = basis_len(n)
    coeffs = [0] * r
    for j, mj in enumerate(m):
        # gamma^(2j) m_j^2 contributes at t-exponent e, reduced by t^r = 2
        e = 2 * j if n % 2 else j
        q, rem = divmod(e, r)
        coeffs[rem] += (mj * mj) << q
    return AlgebraicValue(n, tuple(coeffs))


def parity(v: AlgebraicValue) -> str:
    """Parity of the coefficient multiplying gamma^0 = 1."""
    return "odd" if v.coeffs[0] % 2 else "even"


def scale_gamma2(v: AlgebraicValue, k: int) -> AlgebraicValue:
    """gamma^(2k) * v, exact; negative k requires divisibility."""
    r = len(v.coeffs)
    t = k * _gamma2_steps(v.n)
    out = [0] * r
    for j, c in enumerate(v.coeffs):
        if c == 0:
            continue
        q, rem = divmod(j + t, r)
        if q >= 0:
            out[rem] += c << q
        else:
            if c % (1 << -q):
                raise DivisibilityError(
                    f"{v.text()} is not divisible by gamma^{-2 * k}"
                )
            out[rem] += c >> -q
    return AlgebraicValue(v.n, tuple(out))


def _sign_of_combination(diff: tuple[int, ...], r: int) -> int:
    """Exact sign of sum(diff[j] * 2^(j/r)); diff must not be all zero.

    Fast path: double-precision evaluation with a rigorous error bound.
    Fallback: interval arithmetic, doubling the working precision until the
    interval separates from zero (terminates: the basis is linearly
    independent over Q, so the value is a nonzero real).
    """
    val = 0.0
    absum = 0.0
    for j, d in enumerate(diff):
        b = 2.0 ** (j / r)
        val += d * b
        absum += abs(d) * b
    # each term carries a handful of ulps; (r + 3) ulps of absum is safe
    err = (r + 3) * absum * 2.0 ** -52
    if abs(val) > err:
        return GREATER if val > 0 else LESS

    iv = mpmath.iv
    prec = 64
    while True:
        old = iv.prec
        iv.prec = prec
        try:
            total = iv.mpf(0)
            for j, d in enumerate(diff):
                if d:
                    total += d * iv.mpf(2) ** (iv.mpf(j) / r)
            if total.a > 0:
                return GREATER
            if total.b < 0:
                return LESS
        finally:
            iv.prec = old
        prec *= 2


def compare(a: AlgebraicValue, b: AlgebraicValue) -> int:
    """-1, 0 or +1; equality is decided by coefficient identity only."""
    if a.n != b.n:
        raise DomainError(f"cannot compare rings n={a.n} and n={b.n}")
    if a.coeffs == b.coeffs:
        return EQUAL
    diff = tuple(x - y for x, y in zip(a.coeffs, b.coeffs))
    return _sign_of_combination(diff, len(diff))


def compare_with_rational(v: AlgebraicValue, q: Fraction | int) -> int:
    """Exact sign of v - q for rational q."""
    q = Fraction(q)
    den, num = q.denominator, q.numerator
    diff = tuple(c * den for c in v.coeffs)
    diff = (diff[0] - num,) + diff[1:]
    if all(d == 0 for d in diff):
        return EQUAL
    return _sign_of_combination(diff, len(diff))


def is_below(v: AlgebraicValue, cutoff: "AlgebraicValue | Fraction | int | float") -> bool:
    """v < cutoff, exactly (float cutoffs are taken at their exact binary value)."""
    if isinstance(cutoff, AlgebraicValue):
        return compare(v, cutoff) == LESS
    if isinstance(cutoff, float):
        if not math.isfinite(cutoff):
            raise DomainError("cutoff must be finite")
        cutoff = Fraction(cutoff)
    return compare_with_rational(v, cutoff) == LESS
