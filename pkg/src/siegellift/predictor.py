"""Executable predictions: per-prime identity verification, degree-5
standard factors, levels, Siegel-form prediction bundles, and Dirichlet
series expansion of finite-support Euler products.

All identity checks are exact polynomial equalities in arithmetic
normalization; unitary twists appear as explicit Tate twists with integer
exponents.  The four identities:

  tensor-square   P(f x f)            = P(Lambda^2 f) * P(Sym^2 f)
  sym3-ext2       Lambda^2(Sym^3 e)   = [Sym^4 e](p^(k-1) T) * (1 - p^(3(k-1)) T)
  sym2-ind        Sym^2(Ind chi)      = Ind(chi^2) * (1 - p^(2m) T)
  tensor-ext2     Lambda^2(e x Ind chi)
                     = [Sym^2 e x Lambda^2 Ind chi] * [Lambda^2 e x Sym^2 Ind chi],
                    with Sym^2 Ind chi expanded through sym2-ind

where e is a degree-2 newform/curve factor of weight k-1 and chi has
weight 2m.  Failures are report rows, never exceptions; bad, additive and
ramified primes yield SKIPPED rows with a reason.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from ._primes import factorize, is_squarefree, primes_upto, smallest_prime_factors
from .archimedean import ArchParam, Classification, classify, from_newform, sym3_arch, tensor_arch
from .archimedean import to_json as arch_to_json
from .errors import (
    ConvergenceDomainError,
    InexactDivisionError,
    InputError,
    MissingPrimeError,
    NotSymplecticError,
    ParityError,
    UnsupportedLevelError,
)
from .heckechar import AntiCycChar, Splitting, conductor_ind, induced_factor, splitting
from .heckechar import char_square, restriction_char
from .localfactor import (
    CombineMode,
    Functor,
    LocalFactor,
    combine,
    exact_divide,
    one,
    plethysm,
    tate_factor,
    tate_twist,
)
from .modform import (
    CharacterKind,
    CurveData,
    NewformData,
    ReductionKind,
    local_factor_gl2,
    reduction_at,
)

Source = Union[CurveData, NewformData]


class Identity(Enum):
    TENSOR_SQ = "tensor-square"
    SYM3_EXT2 = "sym3-ext2"
    SYM2_IND = "sym2-ind"
    TENSOR_EXT2 = "tensor-ext2"


class Status(Enum):
    OK = "OK"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


@dataclass(frozen=True)
class ReportEntry:
    prime: int
    identity: str
    status: Status
    reason: str = ""
    lhs: Optional[LocalFactor] = None
    rhs: Optional[LocalFactor] = None

    def to_json(self) -> dict:
        return {
            "p": self.prime,
            "identity": self.identity,
            "status": self.status.value,
            "reason": self.reason,
            "lhs": self.lhs.to_json() if self.lhs is not None else None,
            "rhs": self.rhs.to_json() if self.rhs is not None else None,
        }


@dataclass(frozen=True)
class VerifyReport:
    entries: Tuple[ReportEntry, ...]

    def __post_init__(self):
        ordered = tuple(sorted(self.entries, key=lambda e: e.prime))
        object.__setattr__(self, "entries", ordered)

    @property
    def ok(self) -> bool:
        return all(e.status is not Status.FAIL for e in self.entries)

    def counts(self) -> Dict[str, int]:
        out = {"OK": 0, "FAIL": 0, "SKIPPED": 0}
        for e in self.entries:
            out[e.status.value] += 1
        return out

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "counts": self.counts(),
            "entries": [e.to_json() for e in self.entries],
        }

    def to_text(self) -> str:
        rows = [("identity", "p", "status", "detail")]
        for e in self.entries:
            detail = e.reason
            if e.status is Status.FAIL and e.lhs is not None:
                detail = f"lhs = {e.lhs} ; rhs = {e.rhs}"
            rows.append((e.identity, str(e.prime), e.status.value, detail))
        widths = [max(len(r[i]) for r in rows) for i in range(3)]
        lines = [
            "  ".join([r[0].ljust(widths[0]), r[1].rjust(widths[1]), r[2].ljust(widths[2]), r[3]]).rstrip()
            for r in rows
        ]
        c = self.counts()
        lines.append(f"total: {c['OK']} OK, {c['FAIL']} FAIL, {c['SKIPPED']} SKIPPED")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# local regime bookkeeping

def _gl2_regime(source: Source, p: int) -> str:
    if isinstance(source, CurveData):
        kind = reduction_at(source, p).kind
        if kind is ReductionKind.GOOD:
            return "good"
        if kind is ReductionKind.ADDITIVE:
            return "additive"
        return "multiplicative"
    if source.level % p != 0:
        return "good"
    if source.level % (p * p) != 0:
        return "multiplicative"
    return "additive"


# ---------------------------------------------------------------------------
# the identities

def _check_tensor_square(f: LocalFactor) -> Tuple[LocalFactor, LocalFactor]:
    lhs = combine(f, f, CombineMode.TENSOR)
    rhs = combine(plethysm(f, Functor.EXT2), plethysm(f, Functor.SYM2), CombineMode.SUM)
    return lhs, rhs


def _check_sym3_ext2(eta_p: LocalFactor) -> Tuple[LocalFactor, LocalFactor]:
    j = eta_p.weight  # = k - 1
    lhs = plethysm(plethysm(eta_p, Functor.SYM3), Functor.EXT2)
    rhs = combine(
        tate_twist(plethysm(eta_p, Functor.SYM4), j),
        tate_factor(eta_p.prime, 3 * j, weight=6 * j),
        CombineMode.SUM,
    )
    return lhs, rhs


def _sym2_ind_rhs(chi: AntiCycChar, p: int) -> LocalFactor:
    # Sym^2(Ind chi) = Ind(chi^2) + restriction of chi, the latter being the
    # Tate line of arithmetic value p^(2m)
    chi0 = restriction_char(chi, p)
    return combine(
        induced_factor(char_square(chi), p),
        LocalFactor(p, 2 * chi.weight, (1, -chi0)),
        CombineMode.SUM,
    )


def _check_sym2_ind(chi: AntiCycChar, p: int) -> Tuple[LocalFactor, LocalFactor]:
    lhs = plethysm(induced_factor(chi, p), Functor.SYM2)
    return lhs, _sym2_ind_rhs(chi, p)


def _check_tensor_ext2(eta_p: LocalFactor, chi: AntiCycChar, p: int) -> Tuple[LocalFactor, LocalFactor]:
    ind = induced_factor(chi, p)
    lhs = plethysm(combine(eta_p, ind, CombineMode.TENSOR), Functor.EXT2)
    piece1 = combine(plethysm(eta_p, Functor.SYM2), plethysm(ind, Functor.EXT2), CombineMode.TENSOR)
    piece2 = combine(plethysm(eta_p, Functor.EXT2), _sym2_ind_rhs(chi, p), CombineMode.TENSOR)
    return lhs, combine(piece1, piece2, CombineMode.SUM)


def verify_identity(
    name: Identity,
    p: int,
    *,
    source: Optional[Source] = None,
    chi: Optional[AntiCycChar] = None,
    factor: Optional[LocalFactor] = None,
) -> ReportEntry:
    """Check one identity at one prime; failures and skips are report rows."""
    ident = name.value
    if name is Identity.TENSOR_SQ:
        if factor is None:
            if source is None:
                raise InputError("tensor-square needs a factor or a source")
            regime = _gl2_regime(source, p)
            if regime != "good":
                return ReportEntry(p, ident, Status.SKIPPED, f"skipped ({regime} reduction)")
            factor = local_factor_gl2(source, p)
        elif factor.prime != p:
            raise InputError(f"factor is at prime {factor.prime}, entry requested at {p}")
        lhs, rhs = _check_tensor_square(factor)
    elif name is Identity.SYM3_EXT2:
        if source is None:
            raise InputError("sym3-ext2 needs a curve or newform source")
        regime = _gl2_regime(source, p)
        if regime != "good":
            return ReportEntry(p, ident, Status.SKIPPED, f"skipped ({regime} reduction)")
        lhs, rhs = _check_sym3_ext2(local_factor_gl2(source, p))
    elif name is Identity.SYM2_IND:
        if chi is None:
            raise InputError("sym2-ind needs a character")
        if splitting(chi.field, p) is Splitting.RAMIFIED:
            return ReportEntry(p, ident, Status.SKIPPED, "skipped (ramified in K)")
        lhs, rhs = _check_sym2_ind(chi, p)
    elif name is Identity.TENSOR_EXT2:
        if source is None or chi is None:
            raise InputError("tensor-ext2 needs a source and a character")
        regime = _gl2_regime(source, p)
        if regime != "good":
            return ReportEntry(p, ident, Status.SKIPPED, f"skipped ({regime} reduction)")
        if splitting(chi.field, p) is Splitting.RAMIFIED:
            return ReportEntry(p, ident, Status.SKIPPED, "skipped (ramified in K)")
        lhs, rhs = _check_tensor_ext2(local_factor_gl2(source, p), chi, p)
    else:
        raise InputError(f"unknown identity {name!r}")
    status = Status.OK if lhs == rhs else Status.FAIL
    return ReportEntry(p, ident, status, "" if status is Status.OK else "exact mismatch", lhs, rhs)


def _run_prime_tasks(
    tasks: Sequence[Tuple[int, Callable[[], List[ReportEntry]]]], jobs: int
) -> List[ReportEntry]:
    """Run per-prime closures, possibly concurrently; merge in prime order."""
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda task: (task[0], task[1]()), tasks))
    else:
        results = [(p, fn()) for p, fn in tasks]
    results.sort(key=lambda item: item[0])
    return [entry for _, entries in results for entry in entries]


def identity_report(
    name: Identity,
    pmax: int,
    *,
    source: Optional[Source] = None,
    chi: Optional[AntiCycChar] = None,
    jobs: int = 1,
) -> VerifyReport:
    """Run one identity at every prime p <= pmax."""
    tasks = [
        (p, (lambda pp=p: [verify_identity(name, pp, source=source, chi=chi)]))
        for p in primes_upto(pmax)
    ]
    return VerifyReport(tuple(_run_prime_tasks(tasks, jobs)))


def ap_match_report(curve: CurveData, newform: NewformData, pmax: Optional[int] = None) -> VerifyReport:
    """Cross-check a claimed eigenvalue table against curve point counts.

    One row per tabulated prime (<= pmax if given): OK when the stored a_p
    equals the recomputed one, FAIL otherwise.  This is the only
    non-formal check in the suite, so it is the one an edited table trips.
    """
    if newform.weight != 2:
        raise InputError("eigenvalue/curve comparison needs a weight-2 table")
    entries = []
    for p in sorted(newform.eigenvalues):
        if pmax is not None and p > pmax:
            continue
        expected = reduction_at(curve, p).ap
        got = newform.eigenvalues[p]
        if got == expected:
            entries.append(ReportEntry(p, "ap-match", Status.OK))
        else:
            entries.append(
                ReportEntry(p, "ap-match", Status.FAIL, f"table a_{p} = {got}, curve gives {expected}")
            )
    return VerifyReport(tuple(entries))


# ---------------------------------------------------------------------------
# degree-5 extraction and level rules

def degree5_factor(pi_p: LocalFactor) -> LocalFactor:
    """Standard (degree-5) factor: Lambda^2(pi_p) / (1 - p^w T), w = weight.

    The divisibility is the exactness form of the exterior-square pole; a
    factor that is not of symplectic type leaves a remainder.
    """
    pol = tate_factor(pi_p.prime, pi_p.weight, weight=2 * pi_p.weight)
    try:
        return exact_divide(plethysm(pi_p, Functor.EXT2), pol)
    except InexactDivisionError:
        raise NotSymplecticError(
            f"exterior square at p={pi_p.prime} is not divisible by the polarization factor"
        ) from None


class LevelRule(Enum):
    SYM3 = "sym3"  # squarefree conductor N: level M = N
    TWIST = "twist"  # conductor N coprime to induced conductor N': M = N^2 N'^2


def level(rule: LevelRule, conductor: int, induced_conductor: Optional[int] = None) -> int:
    if conductor < 1:
        raise InputError(f"conductor must be positive, got {conductor}")
    if rule is LevelRule.SYM3:
        if not is_squarefree(conductor):
            raise UnsupportedLevelError(
                f"no level formula for non-squarefree conductor {conductor}"
            )
        return conductor
    if rule is LevelRule.TWIST:
        if induced_conductor is None:
            raise InputError("twist level rule needs the induced conductor")
        if math.gcd(conductor, induced_conductor) != 1:
            raise UnsupportedLevelError(
                f"no level formula when conductor {conductor} shares a factor "
                f"with the induced conductor {induced_conductor}"
            )
        return conductor * conductor * induced_conductor * induced_conductor
    raise InputError(f"unknown level rule {rule!r}")


# ---------------------------------------------------------------------------
# prediction bundles

@dataclass(frozen=True)
class SiegelPrediction:
    label: str
    transfer: str  # "sym3" or "tensor"
    level: int
    iwahori_note: str
    arch: ArchParam
    classification: Classification
    spin_factors: Dict[int, LocalFactor]
    std_factors: Dict[int, LocalFactor]
    flags: Dict[str, bool]
    verification: VerifyReport
    notes: Tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "transfer": self.transfer,
            "level": self.level,
            "iwahori_note": self.iwahori_note,
            "arch": arch_to_json(self.arch, self.classification),
            "spin_factors": {str(p): f.to_json() for p, f in sorted(self.spin_factors.items())},
            "std_factors": {str(p): f.to_json() for p, f in sorted(self.std_factors.items())},
            "flags": dict(self.flags),
            "verification": self.verification.to_json(),
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        cls = self.classification
        lines = [
            f"prediction for {self.label} ({self.transfer} transfer)",
            f"level: {self.level}",
            f"archimedean: exponents {list(self.arch.exponents)}, weight {self.arch.weight}",
        ]
        if cls.siegel_kind.value == "scalar":
            lines.append(f"siegel type: scalar weight {cls.scalar_weight}")
        elif cls.siegel_kind.value == "vector":
            lines.append(f"siegel type: vector {cls.vector_weight}")
        else:
            lines.append("siegel type: none (non-regular or non-algebraic)")
        lines.append("flags: CAP=no, endoscopic=no")
        lines.append(self.iwahori_note)
        for note in self.notes:
            lines.append(f"note: {note}")
        lines.append("")
        lines.append("spin factors (degree 4):")
        for p in sorted(self.spin_factors):
            lines.append(f"  p={p}: {self.spin_factors[p]}")
        lines.append("standard factors (degree 5):")
        for p in sorted(self.std_factors):
            lines.append(f"  p={p}: {self.std_factors[p]}")
        lines.append("")
        lines.append(self.verification.to_text())
        return "\n".join(lines)


def _source_label(source: Source) -> str:
    if isinstance(source, CurveData):
        return "curve " + ",".join(str(a) for a in source.ainvs)
    return f"newform k={source.weight} N={source.level}"


def _source_weight_and_level(source: Source) -> Tuple[int, int]:
    """(classical weight k, conductor N); curves may need N derived."""
    if isinstance(source, NewformData):
        return source.weight, source.level
    if source.conductor is not None:
        return 2, source.conductor
    # minimal model contract: conductor exponent is 1 at multiplicative
    # primes; anything additive needs the caller to supply N
    n = 1
    for p, _ in factorize(abs(source.discriminant)):
        red = reduction_at(source, p)
        if red.kind is ReductionKind.ADDITIVE:
            raise InputError(
                "conductor required: additive reduction at "
                f"{p} prevents deriving it from the discriminant"
            )
        n *= p
    return 2, n


def _iwahori_note(m: int) -> str:
    once = [p for p, e in factorize(m) if e == 1]
    if once:
        plist = ", ".join(str(p) for p in once)
        return (
            f"at p = {plist} (exactly dividing the level) the form has a nonzero vector "
            "invariant under the Iwahori congruence subgroup of GSp(4, Z_p) at that level"
        )
    return "no prime divides the level exactly once; no Iwahori refinement applies"


def predict_siegel(
    source: Source,
    chi: Optional[AntiCycChar] = None,
    pmax: int = 50,
    jobs: int = 1,
) -> SiegelPrediction:
    """Bundle the predicted genus-2 Siegel form data for a symmetric-cube
    transfer (no character) or a twisted-tensor transfer (with character)."""
    k, conductor = _source_weight_and_level(source)
    character = source.character if isinstance(source, NewformData) else CharacterKind.TRIVIAL
    notes: List[str] = []
    if chi is None:
        if k % 2 != 0 or character is not CharacterKind.TRIVIAL:
            raise InputError("symmetric-cube transfer needs even weight and trivial character")
        transfer = "sym3"
        m_level = level(LevelRule.SYM3, conductor)
        arch = sym3_arch(from_newform(k))
    else:
        if (k - chi.weight) % 2 != 0:
            raise ParityError(
                f"newform weight {k} and character weight {chi.weight} have opposite parity"
            )
        if character is not CharacterKind.TRIVIAL:
            raise InputError("even-weight tensor transfer needs a trivial character")
        transfer = "tensor"
        m_level = level(LevelRule.TWIST, conductor, conductor_ind(chi))
        # the induction of chi is the parameter of a weight (2m+1) newform
        arch = tensor_arch(from_newform(k), from_newform(chi.weight + 1))

    spin: Dict[int, LocalFactor] = {}
    std: Dict[int, LocalFactor] = {}
    entries: List[ReportEntry] = []

    def sym3_tasks(p: int) -> List[ReportEntry]:
        out = []
        regime = _gl2_regime(source, p)
        eta_p = local_factor_gl2(source, p)
        pi_p = plethysm(eta_p, Functor.SYM3)
        spin[p] = pi_p
        out.append(verify_identity(Identity.SYM3_EXT2, p, source=source))
        if regime == "good":
            out.append(verify_identity(Identity.TENSOR_SQ, p, factor=pi_p))
            std[p] = degree5_factor(pi_p)
            out.append(ReportEntry(p, "r5-extract", Status.OK, "", std[p]))
        else:
            out.append(ReportEntry(p, "r5-extract", Status.SKIPPED, f"skipped ({regime} reduction)"))
        return out

    def tensor_tasks(p: int) -> List[ReportEntry]:
        out = []
        regime = _gl2_regime(source, p)
        ram = splitting(chi.field, p) is Splitting.RAMIFIED
        out.append(verify_identity(Identity.SYM2_IND, p, chi=chi))
        out.append(verify_identity(Identity.TENSOR_EXT2, p, source=source, chi=chi))
        if regime == "good" and not ram:
            pi_p = combine(local_factor_gl2(source, p), induced_factor(chi, p), CombineMode.TENSOR)
            spin[p] = pi_p
            out.append(verify_identity(Identity.TENSOR_SQ, p, factor=pi_p))
            std[p] = degree5_factor(pi_p)
            out.append(ReportEntry(p, "r5-extract", Status.OK, "", std[p]))
        else:
            reason = "ramified in K" if ram else f"{regime} reduction"
            out.append(ReportEntry(p, "r5-extract", Status.SKIPPED, f"skipped ({reason})"))
        return out

    worker = sym3_tasks if chi is None else tensor_tasks
    tasks = [(p, (lambda pp=p: worker(pp))) for p in primes_upto(pmax)]
    entries = _run_prime_tasks(tasks, jobs)

    if transfer == "sym3" and any(e.reason.endswith("(multiplicative reduction)") for e in entries):
        notes.append(
            "level at multiplicative primes follows the squarefree rule (exponent 1); the "
            "symmetric-cube Weil-Deligne parameter classically has conductor exponent 3 "
            "there -- the discrepancy is recorded, not reconciled"
        )

    return SiegelPrediction(
        label=_source_label(source) + ("" if chi is None else f" x chi(D={chi.field.D}, m={chi.m})"),
        transfer=transfer,
        level=m_level,
        iwahori_note=_iwahori_note(m_level),
        arch=arch,
        classification=classify(arch),
        spin_factors=spin,
        std_factors=std,
        flags={"cap": False, "endoscopic": False},
        verification=VerifyReport(tuple(entries)),
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# finite-support Euler products

@dataclass
class LObject:
    """Finite-support model of an Euler product: factors at finitely many
    primes, all of the object's weight."""

    label: str
    weight: int
    factors: Dict[int, LocalFactor]
    arch: Optional[ArchParam] = None
    level: Optional[int] = None

    def __post_init__(self):
        for p, f in self.factors.items():
            if f.prime != p:
                raise InputError(f"factor stored at {p} has prime {f.prime}")
            if f.weight != self.weight:
                raise InputError(
                    f"factor at p={p} has weight {f.weight}, object has {self.weight}"
                )

    @property
    def degree(self) -> int:
        return max((f.degree for f in self.factors.values()), default=1)


def _inverse_series(f: LocalFactor, terms: int) -> List:
    """Coefficients of 1/P(T) up to T^(terms-1) (geometric recursion)."""
    c = f.coeffs
    b = [Fraction(1)]
    for j in range(1, terms):
        acc = Fraction(0)
        for i in range(1, min(j, f.degree) + 1):
            acc -= Fraction(c[i]) * b[j - i]
        b.append(acc)
    return [int(v) if v.denominator == 1 else v for v in b]


def dirichlet_coeffs(obj: LObject, bound: int):
    """Exact Dirichlet coefficients a_1..a_bound (returned 1-indexed in a
    list of length bound+1 with a[0] = 0)."""
    if bound < 1:
        raise InputError("bound must be >= 1")
    needed = primes_upto(bound)
    missing = [p for p in needed if p not in obj.factors]
    if missing:
        raise MissingPrimeError(missing)
    expansions = {}
    for p in needed:
        e_max = 1
        while p ** (e_max + 1) <= bound:
            e_max += 1
        expansions[p] = _inverse_series(obj.factors[p], e_max + 1)
    spf = smallest_prime_factors(bound)
    a = [0] * (bound + 1)
    a[1] = 1
    for n in range(2, bound + 1):
        p = spf[n]
        m, e = n, 0
        while m % p == 0:
            m //= p
            e += 1
        a[n] = a[m] * expansions[p][e]
    return a


@dataclass(frozen=True)
class CompareResult:
    equal: bool
    first_mismatch: Optional[int] = None


def compare_coeffwise(a: LObject, b: LObject, bound: int) -> CompareResult:
    """Coefficientwise equality of two finite-support Euler products."""
    ca = dirichlet_coeffs(a, bound)
    cb = dirichlet_coeffs(b, bound)
    for n in range(1, bound + 1):
        if ca[n] != cb[n]:
            return CompareResult(False, n)
    return CompareResult(True, None)


@dataclass(frozen=True)
class EvalResult:
    value: float
    tail_bound: float
    s: float
    terms: int


def eval_partial(obj: LObject, s: float, bound: int) -> EvalResult:
    """Partial Dirichlet sum at s with an average-order tail estimate.

    Convergence needs s > w/2 + 1 (purity bound |a_p| <= d p^(w/2)).  The
    tail estimate integrates the average order of the d-dimensional divisor
    function against t^(w/2 - s):

        integral_X^inf (log t)^(d-1)/(d-1)! * t^(w/2-s) dt,

    evaluated in closed form.
    """
    sigma = float(s) - obj.weight / 2.0
    if sigma <= 1.0:
        raise ConvergenceDomainError(
            f"s = {s} is outside the convergence region s > {obj.weight / 2.0 + 1}"
        )
    coeffs = dirichlet_coeffs(obj, bound)
    value = 0.0
    for n in range(1, bound + 1):
        if coeffs[n] != 0:
            value += float(coeffs[n]) * float(n) ** (-float(s))
    d = obj.degree
    log_x = math.log(bound)
    tail = 0.0
    for j in range(d):
        tail += log_x ** (d - 1 - j) / (math.factorial(d - 1 - j) * (sigma - 1.0) ** (j + 1))
    tail *= float(bound) ** (1.0 - sigma)
    return EvalResult(value, tail, float(s), bound)


# ---------------------------------------------------------------------------
# object builders

def gl2_object(source: Source, pmax: int, label: Optional[str] = None) -> LObject:
    """Degree-2 Euler product of the curve/newform, all p <= pmax."""
    k = 2 if isinstance(source, CurveData) else source.weight
    factors = {p: local_factor_gl2(source, p) for p in primes_upto(pmax)}
    return LObject(label or _source_label(source), k - 1, factors)


def sym3_object(source: Source, pmax: int, label: Optional[str] = None) -> LObject:
    """Symmetric-cube Euler product (degree 4); multiplicative primes carry
    the Steinberg line 1 - a_p T, additive primes the trivial factor."""
    k = 2 if isinstance(source, CurveData) else source.weight
    factors = {
        p: plethysm(local_factor_gl2(source, p), Functor.SYM3) for p in primes_upto(pmax)
    }
    return LObject(label or f"sym3({_source_label(source)})", 3 * (k - 1), factors)


def tensor_object(
    source: Source, chi: AntiCycChar, pmax: int, label: Optional[str] = None
) -> LObject:
    """Tensor Euler product (degree 4).  Local data is unspecified at bad or
    ramified primes; those factors are set to 1, i.e. dropped from the
    product."""
    k = 2 if isinstance(source, CurveData) else source.weight
    weight = (k - 1) + chi.weight
    factors = {}
    for p in primes_upto(pmax):
        if _gl2_regime(source, p) == "good" and splitting(chi.field, p) is not Splitting.RAMIFIED:
            factors[p] = combine(
                local_factor_gl2(source, p), induced_factor(chi, p), CombineMode.TENSOR
            )
        else:
            factors[p] = one(p, 4, weight)
    return LObject(label or f"{_source_label(source)} x chi", weight, factors)


def lambda2_sym3_objects(source: Source, bound: int) -> Tuple[LObject, LObject]:
    """The two sides of the sym3-ext2 identity as global objects up to
    ``bound``: exterior square of the symmetric cube vs. the twisted fourth
    symmetric power times the matching Tate line.

    At good primes the sides are built through their own independent
    operation chains; at bad primes both sides carry the same factor by
    construction (the identity is an unramified statement).
    """
    k = 2 if isinstance(source, CurveData) else source.weight
    j = k - 1
    lhs_factors = {}
    rhs_factors = {}
    for p in primes_upto(bound):
        eta_p = local_factor_gl2(source, p)
        lhs_p = plethysm(plethysm(eta_p, Functor.SYM3), Functor.EXT2)
        lhs_factors[p] = lhs_p
        if _gl2_regime(source, p) == "good":
            rhs_factors[p] = combine(
                tate_twist(plethysm(eta_p, Functor.SYM4), j),
                tate_factor(p, 3 * j, weight=6 * j),
                CombineMode.SUM,
            )
        else:
            rhs_factors[p] = lhs_p
    label = _source_label(source)
    return (
        LObject(f"ext2(sym3({label}))", 6 * j, lhs_factors),
        LObject(f"sym4({label}) twisted * tate", 6 * j, rhs_factors),
    )
