"""Exact algebra of local Euler factors.

A local factor at a prime p is the reciprocal polynomial

    P(T) = c_0 + c_1 T + ... + c_d T^d,   c_0 = 1,  T standing for p^(-s),

whose inverse roots are the Satake/Frobenius eigenvalues of the local
representation: P(T) = prod_j (1 - alpha_j T).  Everything is computed in
exact rational arithmetic (arithmetic normalization): a pure factor of
motivic weight w has inverse roots of absolute value p^(w/2), so its
coefficients are plain integers and purity is a checkable coefficient
symmetry, never a floating-point statement.

The single internal intermediate is the sequence of power sums
s_m = sum_j alpha_j^m.  Newton's identities convert both ways:

    s_k = -k c_k - sum_{i=1}^{k-1} c_i s_{k-i}
    c_k = -(s_k + sum_{i=1}^{k-1} c_i s_{k-i}) / k

Direct sums multiply polynomials (power sums add), tensor products
multiply power sums, and the plethysm functors are cycle-index
polynomials evaluated at s_{jm}:

    Sym^2: (s_m^2 + s_{2m}) / 2          Lambda^2: (s_m^2 - s_{2m}) / 2
    Sym^3: (s_m^3 + 3 s_m s_{2m} + 2 s_{3m}) / 6
    Sym^4: (s_m^4 + 6 s_m^2 s_{2m} + 3 s_{2m}^2 + 8 s_m s_{3m} + 6 s_{4m}) / 24

Degenerate factors (bad reduction, ramification) are stored at full
nominal degree with trailing zero coefficients; ``effective_degree``
reports the honest polynomial degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Union

from ._primes import is_prime
from .errors import (
    DegreeError,
    InexactDivisionError,
    InputError,
    PrimeMismatchError,
    WeightMismatchError,
)

Coeff = Union[int, Fraction]


def _exact(value: Coeff) -> Coeff:
    """Normalize integral Fractions back to int."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return value
    return int(value)


class CombineMode(Enum):
    SUM = "sum"
    TENSOR = "tensor"


class Functor(Enum):
    SYM2 = "sym2"
    SYM3 = "sym3"
    SYM4 = "sym4"
    EXT2 = "ext2"


#: Nominal output degree of each functor on a degree-d input.
_FUNCTOR_DEGREE = {
    Functor.SYM2: lambda d: d * (d + 1) // 2,
    Functor.EXT2: lambda d: d * (d - 1) // 2,
    Functor.SYM3: lambda d: 4,
    Functor.SYM4: lambda d: 5,
}

#: Weight multiplier (= degree of the Schur functor).
_FUNCTOR_WEIGHT = {Functor.SYM2: 2, Functor.EXT2: 2, Functor.SYM3: 3, Functor.SYM4: 4}


@dataclass(frozen=True)
class LocalFactor:
    """Reciprocal Euler polynomial at a prime, with a motivic-weight ledger.

    ``coeffs`` has length degree+1 and starts with 1; trailing zeros mark a
    degenerate factor whose honest degree is ``effective_degree``.
    """

    prime: int
    weight: int
    coeffs: tuple

    def __post_init__(self):
        if not is_prime(self.prime):
            raise InputError(f"{self.prime} is not prime")
        coeffs = tuple(_exact(c) for c in self.coeffs)
        if not coeffs or coeffs[0] != 1:
            raise InputError("constant coefficient of a local factor must be 1")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def effective_degree(self) -> int:
        for i in range(self.degree, -1, -1):
            if self.coeffs[i] != 0:
                return i
        return 0

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __str__(self):
        terms = ["1"]
        for i, c in enumerate(self.coeffs[1:], start=1):
            if c == 0:
                continue
            mag = abs(c)
            body = "T" if i == 1 else f"T^{i}"
            if mag != 1:
                body = f"{mag}*{body}"
            terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms)

    def to_json(self) -> dict:
        """JSON form; coefficients as decimal strings (they exceed 64 bits)."""
        return {
            "p": self.prime,
            "weight": self.weight,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LocalFactor":
        coeffs = tuple(Fraction(c) for c in data["coeffs"])
        return cls(int(data["p"]), int(data["weight"]), coeffs)


@dataclass(frozen=True)
class PowerSums:
    """s_m = sum of m-th powers of the inverse roots, m = 1..len(values)."""

    prime: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(_exact(v) for v in self.values))


@dataclass(frozen=True)
class PurityReport:
    """Outcome of the self-duality/purity coefficient symmetry check."""

    ok: bool
    sign: Optional[int] = None
    failing_index: Optional[int] = None

    def __bool__(self):
        return self.ok


def one(p: int, degree: int = 0, weight: int = 0) -> LocalFactor:
    """The trivial factor P = 1, padded to the given nominal degree."""
    return LocalFactor(p, weight, (1,) + (0,) * degree)


def tate_factor(p: int, j: int, weight: Optional[int] = None) -> LocalFactor:
    """Degree-1 factor 1 - p^j T.  Pure of weight 2j unless overridden."""
    return LocalFactor(p, 2 * j if weight is None else weight, (1, -(p**j)))


def power_sums(f: LocalFactor, count: int) -> PowerSums:
    """First ``count`` power sums of the inverse roots (Newton identities)."""
    if count < 1:
        raise InputError("power_sums needs count >= 1")
    c = f.coeffs
    s: list[Coeff] = []
    for k in range(1, count + 1):
        acc = Fraction(-k * c[k]) if k <= f.degree else Fraction(0)
        for i in range(1, min(k, f.degree + 1)):
            acc -= Fraction(c[i]) * Fraction(s[k - i - 1])
        s.append(_exact(acc))
    return PowerSums(f.prime, tuple(s))


def from_power_sums(
    p: int, degree: int, sums: Union[PowerSums, Sequence[Coeff]], weight: int = 0
) -> LocalFactor:
    """Inverse of :func:`power_sums`; needs at least ``degree`` power sums."""
    values = sums.values if isinstance(sums, PowerSums) else tuple(sums)
    if len(values) < degree:
        raise DegreeError(f"need {degree} power sums, got {len(values)}")
    c: list[Coeff] = [1]
    for k in range(1, degree + 1):
        acc = Fraction(values[k - 1])
        for i in range(1, k):
            acc += Fraction(c[i]) * Fraction(values[k - i - 1])
        c.append(_exact(-acc / k))
    return LocalFactor(p, weight, tuple(c))


def _poly_mul(a: Sequence[Coeff], b: Sequence[Coeff]) -> list[Coeff]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y != 0:
                out[i + j] += Fraction(x) * Fraction(y)
    return [_exact(v) for v in out]


def _check_integral(result: LocalFactor, *sources: LocalFactor) -> LocalFactor:
    # Plethysm/sum/tensor of integral factors is integral (companion-matrix
    # construction); a violation here is an internal bug, not bad input.
    if all(f.is_integral for f in sources):
        assert result.is_integral, f"integrality lost: {result.coeffs}"
    return result


def combine(a: LocalFactor, b: LocalFactor, mode: CombineMode) -> LocalFactor:
    """Direct sum (polynomial product) or tensor product (power sums multiply)."""
    if a.prime != b.prime:
        raise PrimeMismatchError(f"primes differ: {a.prime} vs {b.prime}")
    if mode is CombineMode.SUM:
        if a.weight != b.weight:
            raise WeightMismatchError(
                f"direct sum needs equal weights, got {a.weight} and {b.weight}"
            )
        coeffs = _poly_mul(a.coeffs, b.coeffs)
        # pad in case both operands carried trailing zeros
        coeffs += [0] * (a.degree + b.degree + 1 - len(coeffs))
        return _check_integral(LocalFactor(a.prime, a.weight, tuple(coeffs)), a, b)
    if mode is CombineMode.TENSOR:
        d = a.degree * b.degree
        if d == 0:
            return LocalFactor(a.prime, a.weight + b.weight, (1,))
        sa = power_sums(a, d).values
        sb = power_sums(b, d).values
        mixed = [Fraction(x) * Fraction(y) for x, y in zip(sa, sb)]
        return _check_integral(
            from_power_sums(a.prime, d, mixed, weight=a.weight + b.weight), a, b
        )
    raise InputError(f"unknown combine mode {mode!r}")


def plethysm(f: LocalFactor, functor: Functor) -> LocalFactor:
    """Apply Sym^2, Sym^3, Sym^4 or Lambda^2 to the inverse-root multiset.

    Sym^3 and Sym^4 are restricted to (nominal) degree-2 inputs, the only
    shape needed here; Sym^2 and Lambda^2 work in any degree.  Degenerate
    inputs are handled transparently because the cycle-index formulas see
    only the actual roots: Sym^3 of a Steinberg line 1 - aT is 1 - a^3 T.
    """
    if functor in (Functor.SYM3, Functor.SYM4) and f.degree != 2:
        raise DegreeError(f"{functor.value} requires a degree-2 factor, got {f.degree}")
    d_out = _FUNCTOR_DEGREE[functor](f.degree)
    weight = f.weight * _FUNCTOR_WEIGHT[functor]
    if d_out == 0:
        return LocalFactor(f.prime, weight, (1,))
    need = d_out * _FUNCTOR_WEIGHT[functor]
    s = (Fraction(0),) + tuple(Fraction(v) for v in power_sums(f, need).values)
    out: list[Coeff] = []
    for m in range(1, d_out + 1):
        if functor is Functor.SYM2:
            val = (s[m] ** 2 + s[2 * m]) / 2
        elif functor is Functor.EXT2:
            val = (s[m] ** 2 - s[2 * m]) / 2
        elif functor is Functor.SYM3:
            val = (s[m] ** 3 + 3 * s[m] * s[2 * m] + 2 * s[3 * m]) / 6
        else:  # SYM4
            val = (
                s[m] ** 4
                + 6 * s[m] ** 2 * s[2 * m]
                + 3 * s[2 * m] ** 2
                + 8 * s[m] * s[3 * m]
                + 6 * s[4 * m]
            ) / 24
        out.append(val)
    return _check_integral(from_power_sums(f.prime, d_out, out, weight=weight), f)


def tate_twist(f: LocalFactor, j: int) -> LocalFactor:
    """Substitute T -> p^j T: c_i -> c_i p^(ij), weight -> weight + 2j."""
    q = Fraction(f.prime) ** j
    coeffs = tuple(_exact(Fraction(c) * q**i) for i, c in enumerate(f.coeffs))
    return LocalFactor(f.prime, f.weight + 2 * j, coeffs)


def exact_divide(a: LocalFactor, b: LocalFactor) -> LocalFactor:
    """Exact quotient q with q * b = a; nonzero remainder is a hard failure."""
    if a.prime != b.prime:
        raise PrimeMismatchError(f"primes differ: {a.prime} vs {b.prime}")
    if b.weight != a.weight:
        raise WeightMismatchError(
            f"divisor weight {b.weight} does not match dividend weight {a.weight}"
        )
    if b.degree > a.degree:
        raise DegreeError("divisor degree exceeds dividend degree")
    d_q = a.degree - b.degree
    q: list[Coeff] = []
    for k in range(d_q + 1):
        acc = Fraction(a.coeffs[k])
        for i in range(1, min(k, b.degree) + 1):
            acc -= Fraction(b.coeffs[i]) * Fraction(q[k - i])
        q.append(_exact(acc))  # b.coeffs[0] == 1, no division needed
    product = _poly_mul(q, b.coeffs)
    product += [0] * (a.degree + 1 - len(product))
    if tuple(product) != a.coeffs:
        raise InexactDivisionError(
            f"nonzero remainder dividing degree-{a.degree} factor at p={a.prime}"
        )
    return LocalFactor(a.prime, a.weight, tuple(q))


def is_selfdual_pure(f: LocalFactor) -> PurityReport:
    """Check the purity/self-duality symmetry c_i p^((d-2i)w/2) = sign * c_(d-i).

    Requires d*w even.  Returns the consistent sign on success, or the first
    failing index.
    """
    d, w = f.degree, f.weight
    if (d * w) % 2 != 0:
        raise InputError("purity symmetry needs degree * weight even")
    p = Fraction(f.prime)
    sign = None
    for i in range(d + 1):
        lhs = Fraction(f.coeffs[i]) * p ** ((d - 2 * i) * w // 2)
        rhs = Fraction(f.coeffs[d - i])
        if sign is None:
            if lhs == rhs:
                sign = 1
            elif lhs == -rhs:
                sign = -1
            else:
                return PurityReport(False, None, i)
        elif lhs != sign * rhs:
            return PurityReport(False, sign, i)
    return PurityReport(True, sign, None)
