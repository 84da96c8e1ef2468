"""GL(2) input data: elliptic curves over Q and newform eigenvalue tables.

Curves are given by integral Weierstrass coefficients (a1,a2,a3,a4,a6),
assumed minimal at every prime dividing the discriminant (documented input
contract; no minimalization is performed here).  Good-prime Hecke
eigenvalues a_p = p + 1 - #E(F_p) come from exhaustive point enumeration
or an O(p) quadratic-character sum; bad primes are classified by the
singular point of the reduction.

Newforms of weight k >= 2 arrive as eigenvalue files:

    # comment lines start with '#'
    weight 12 level 1 character trivial
    2 -24
    3 252

The character line accepts ``trivial`` or ``delta <D>`` for the quadratic
character of an imaginary quadratic field of discriminant D.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Dict, Optional, TextIO, Tuple, Union

from ._primes import is_prime
from .errors import (
    BadPrimeError,
    EigenfileError,
    InputError,
    MissingEigenvalueError,
    NonMinimalModelError,
    SingularModelError,
)
from .localfactor import LocalFactor


class RamanujanBoundWarning(UserWarning):
    """Eigenvalue exceeding the bound |a_p| <= 2 p^((k-1)/2) at a good prime."""


class ReductionKind(Enum):
    GOOD = "good"
    SPLIT_MULT = "split multiplicative"
    NONSPLIT_MULT = "nonsplit multiplicative"
    ADDITIVE = "additive"


class CharacterKind(Enum):
    TRIVIAL = "trivial"
    DELTA = "delta"


@dataclass(frozen=True)
class CurveData:
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    conductor: Optional[int] = None

    def __post_init__(self):
        if self.discriminant == 0:
            raise SingularModelError(f"singular Weierstrass model {self.ainvs}")

    @property
    def ainvs(self) -> Tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def discriminant(self) -> int:
        return invariants_of_raw(*self.ainvs)[4]

    def to_json(self) -> dict:
        data = {"a": list(self.ainvs)}
        if self.conductor is not None:
            data["conductor"] = self.conductor
        return data

    @classmethod
    def from_json(cls, data: dict) -> "CurveData":
        a = data.get("a")
        if not isinstance(a, (list, tuple)) or len(a) != 5:
            raise InputError('curve JSON needs "a": [a1,a2,a3,a4,a6]')
        return cls(*(int(x) for x in a), conductor=data.get("conductor"))


def invariants_of_raw(a1, a2, a3, a4, a6):
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    return b2, b4, b6, b8, disc


def invariants_of(curve: CurveData) -> Tuple[int, int, int, int, int]:
    """(b2, b4, b6, b8, discriminant) of the Weierstrass model."""
    inv = invariants_of_raw(*curve.ainvs)
    if inv[4] == 0:
        raise SingularModelError("discriminant vanishes")
    return inv


@dataclass(frozen=True)
class ReductionData:
    prime: int
    kind: ReductionKind
    ap: int


@dataclass
class NewformData:
    weight: int
    level: int
    character: CharacterKind = CharacterKind.TRIVIAL
    character_disc: Optional[int] = None
    eigenvalues: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.weight < 2:
            raise InputError(f"newform weight must be >= 2, got {self.weight}")
        if self.level < 1:
            raise InputError(f"newform level must be positive, got {self.level}")
        if self.character is CharacterKind.DELTA and self.character_disc is None:
            raise InputError("delta character needs a declared discriminant")
        for p, ap in self.eigenvalues.items():
            _warn_ramanujan(p, ap, self.weight, self.level)


def _warn_ramanujan(p: int, ap: int, k: int, level: int) -> None:
    # exact integer comparison of a_p^2 against 4 p^(k-1), good primes only
    if level % p != 0 and ap * ap > 4 * p ** (k - 1):
        warnings.warn(
            f"a_{p} = {ap} violates |a_p| <= 2 p^((k-1)/2) for weight {k}",
            RamanujanBoundWarning,
            stacklevel=3,
        )


def point_count(curve: CurveData, p: int) -> int:
    """#E(F_p) by exhaustive enumeration of the affine plane, plus infinity.

    O(p^2) reference oracle for :func:`ap_good`.
    """
    a1, a2, a3, a4, a6 = (a % p for a in curve.ainvs)
    count = 1
    for x in range(p):
        rhs = (x * x * x + a2 * x * x + a4 * x + a6) % p
        lin = (a1 * x + a3) % p
        for y in range(p):
            if (y * y + lin * y) % p == rhs:
                count += 1
    return count


def _ap_charsum(curve: CurveData, p: int) -> int:
    # complete the square in y (p odd): the y-count over x is 1 + chi(g(x))
    # with g = 4x^3 + b2 x^2 + 2 b4 x + b6, so a_p = -sum_x chi(g(x)).
    b2, b4, b6, _, _ = invariants_of_raw(*curve.ainvs)
    b2, b4x2, b6 = b2 % p, (2 * b4) % p, b6 % p
    square = bytearray(p)
    for t in range((p // 2) + 1):
        square[t * t % p] = 1
    affine = 0
    for x in range(p):
        g = (((4 * x + b2) * x + b4x2) * x + b6) % p
        if g == 0:
            affine += 1
        elif square[g]:
            affine += 2
    return p + 1 - (affine + 1)


@lru_cache(maxsize=None)
def _ap_good_cached(curve: CurveData, p: int) -> int:
    if p == 2:
        return p + 1 - point_count(curve, p)
    return _ap_charsum(curve, p)


def ap_good(curve: CurveData, p: int) -> int:
    """a_p = p + 1 - #E(F_p) at a prime of good reduction."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if curve.discriminant % p == 0:
        raise BadPrimeError(f"p={p} divides the discriminant; use reduction_bad")
    return _ap_good_cached(curve, p)


def _singular_points(curve: CurveData, p: int) -> list:
    # on-curve points where both partials of y^2 + a1xy + a3y - (x^3+...) vanish
    a1, a2, a3, a4, a6 = (a % p for a in curve.ainvs)
    points = []
    for x in range(p):
        rhs = (x * x * x + a2 * x * x + a4 * x + a6) % p
        lin = (a1 * x + a3) % p
        if p == 2:
            ys = [y for y in range(2) if (y * y + lin * y) % p == rhs]
        else:
            # dF/dy = 2y + a1 x + a3 = 0 has the single root y = -lin/2
            ys = [(-lin * pow(2, p - 2, p)) % p]
        for y in ys:
            if (y * y + lin * y) % p != rhs:
                continue
            dfdy = (2 * y + lin) % p
            dfdx = (a1 * y - 3 * x * x - 2 * a2 * x - a4) % p
            if dfdy == 0 and dfdx == 0:
                points.append((x, y))
    return points


def reduction_bad(curve: CurveData, p: int) -> ReductionData:
    """Classify the reduction at p | discriminant (model assumed minimal at p).

    Cusp => additive (a_p = 0); node => multiplicative, split iff the two
    tangent slopes at the node lie in F_p (a_p = 1), else nonsplit (a_p = -1).
    """
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if curve.discriminant % p != 0:
        raise BadPrimeError(f"p={p} does not divide the discriminant; reduction is good")
    points = _singular_points(curve, p)
    if len(points) != 1:
        raise NonMinimalModelError(
            f"{len(points)} singular points mod {p}; reduction of a minimal model has one"
        )
    (x0, y0) = points[0]
    a1, a2 = curve.a1, curve.a2
    if p == 2:
        # tangent cone v^2 + a1 uv + (x0 + a2) u^2 over F_2
        if a1 % 2 == 0:
            return ReductionData(p, ReductionKind.ADDITIVE, 0)
        if (x0 + a2) % 2 == 0:
            return ReductionData(p, ReductionKind.SPLIT_MULT, 1)
        return ReductionData(p, ReductionKind.NONSPLIT_MULT, -1)
    # tangent cone v^2 + a1 uv - (3 x0 + a2) u^2; slope discriminant:
    disc = (a1 * a1 + 4 * (3 * x0 + a2)) % p
    if disc == 0:
        return ReductionData(p, ReductionKind.ADDITIVE, 0)
    if pow(disc, (p - 1) // 2, p) == 1:
        return ReductionData(p, ReductionKind.SPLIT_MULT, 1)
    return ReductionData(p, ReductionKind.NONSPLIT_MULT, -1)


def reduction_at(curve: CurveData, p: int) -> ReductionData:
    """Reduction data at any prime (good primes included)."""
    if curve.discriminant % p != 0:
        return ReductionData(p, ReductionKind.GOOD, ap_good(curve, p))
    return reduction_bad(curve, p)


def local_factor_gl2(source: Union[CurveData, NewformData], p: int) -> LocalFactor:
    """Degree-2 local factor of the curve/newform at p, weight k-1.

    Good p: 1 - a_p T + p^(k-1) T^2.  Multiplicative p: 1 - a_p T at nominal
    degree 2.  Additive p: the trivial factor.
    """
    if isinstance(source, CurveData):
        red = reduction_at(source, p)
        k = 2
        regime = (
            "good"
            if red.kind is ReductionKind.GOOD
            else "additive" if red.kind is ReductionKind.ADDITIVE else "multiplicative"
        )
        ap = red.ap
    elif isinstance(source, NewformData):
        k = source.weight
        if source.level % p != 0:
            regime = "good"
        elif source.level % (p * p) != 0:
            regime = "multiplicative"  # p || N: a_p taken from the table
        else:
            regime = "additive"
        if regime == "additive":
            ap = 0
        else:
            if p not in source.eigenvalues:
                raise MissingEigenvalueError(f"no eigenvalue a_{p} in the table")
            ap = source.eigenvalues[p]
    else:
        raise InputError(f"unsupported source {type(source).__name__}")
    if regime == "good":
        return LocalFactor(p, k - 1, (1, -ap, p ** (k - 1)))
    if regime == "additive":
        return LocalFactor(p, k - 1, (1, 0, 0))
    return LocalFactor(p, k - 1, (1, -ap, 0))


def parse_eigenfile(source: Union[str, Path, TextIO]) -> NewformData:
    """Parse an eigenvalue file (format in the module docstring)."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as handle:
            lines = handle.readlines()
    else:
        lines = source.readlines()
    header = None
    eigenvalues: Dict[int, int] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            header = _parse_header(line, lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EigenfileError(f"line {lineno}: expected '<p> <a_p>', got {line!r}")
        try:
            p, ap = int(parts[0]), int(parts[1])
        except ValueError:
            raise EigenfileError(f"line {lineno}: non-integer entry in {line!r}") from None
        if not is_prime(p):
            raise EigenfileError(f"line {lineno}: {p} is not prime")
        if p in eigenvalues:
            raise EigenfileError(f"line {lineno}: duplicate prime {p}")
        eigenvalues[p] = ap
    if header is None:
        raise EigenfileError("missing header line 'weight <k> level <N> character <...>'")
    k, level, character, disc = header
    return NewformData(k, level, character, disc, eigenvalues)


def _parse_header(line: str, lineno: int):
    parts = line.split()
    if len(parts) < 6 or parts[0] != "weight" or parts[2] != "level" or parts[4] != "character":
        raise EigenfileError(
            f"line {lineno}: header must be 'weight <k> level <N> character <trivial|delta D>'"
        )
    try:
        k, level = int(parts[1]), int(parts[3])
    except ValueError:
        raise EigenfileError(f"line {lineno}: non-integer weight/level") from None
    if parts[5] == "trivial" and len(parts) == 6:
        return k, level, CharacterKind.TRIVIAL, None
    if parts[5] == "delta" and len(parts) == 7:
        try:
            return k, level, CharacterKind.DELTA, int(parts[6])
        except ValueError:
            raise EigenfileError(f"line {lineno}: bad delta discriminant") from None
    raise EigenfileError(f"line {lineno}: bad character clause {' '.join(parts[4:])!r}")
