"""Historical root-approximation rules, computed exactly.

Given an integer radicand N and degree d in {2, 3}, write N = a^d + r with
a the floor root.  The true root is a + e with 0 <= e < 1, and for squares
r = (2a + e)e.  The rules implemented here are:

* first correction (al-Morouzi's rule): replace the unknown e in the
  denominator by 1, giving e1 = r/(2a + 1) for squares and
  e1 = r/(3a^2 + 3a + 1) for cubes.  Both under-approximate the root.
* neglect rule: at a later approximant x with residual N - x^d, drop the
  unknown correction from the denominator entirely, giving
  e = (N - x^d)/(d * x^(d-1)).  This is algebraically a Newton step and
  over-approximates the root from the second record onward.

Iterating the first correction then the neglect rule reproduces the
alternating-bound chain for sqrt(2) from the Sulba-sutra of Baudhayana,
1 + 1/3 + 1/(3*4) - 1/(3*4*34), term for term.  Note the exact fact that
(577/408)^2 = 2 + 1/166464: the four-term value sits slightly *above*
sqrt(2), and bound classification here always follows the residual sign.

Brahmagupta's two circle rules are included because his "subtle" rule
pi = sqrt(10) evaluates, under the first correction, to exactly 22/7.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .rational import DomainError


class BoundSide(Enum):
    """Which side of the true root an approximant sits on."""

    BELOW = "below"
    ABOVE = "above"
    EXACT = "exact"


class Rule(Enum):
    """Which rule produced an iteration record."""

    FLOOR_SEED = "floor-seed"
    MOROUZI_FIRST = "morouzi-first"
    NEWTON_NEGLECT = "newton-neglect"


class CircleMode(Enum):
    """Brahmagupta's practical (pi = 3) versus subtle (pi = sqrt(10)) rule."""

    GROSS = "gross"
    SUBTLE = "subtle"


class DegenerateChainError(ValueError):
    """A unit-fraction chain was requested from a report that cannot supply one."""


@dataclass(frozen=True)
class RootProblem:
    radicand: int
    degree: int


@dataclass(frozen=True)
class FloorRoot:
    """Integer root and remainder: radicand = root**degree + remainder."""

    root: int
    remainder: int


@dataclass(frozen=True)
class IterationRecord:
    """One step of the series: x_n = x_{n-1} + correction, residual = N - x_n^d."""

    index: int
    approximant: Fraction
    correction: Fraction
    residual: Fraction
    bound: BoundSide
    rule: Rule


@dataclass(frozen=True)
class UnitChain:
    """Corrections rewritten as successive term ratios.

    ratios[0] = 1/|e_1| and ratios[n] = |e_n|/|e_{n+1}|, so when every ratio
    is an integer the n-th correction is signs[n-1]/(d_1*d_2*...*d_n), the
    classical product-of-denominators display.
    """

    signs: tuple[int, ...]
    ratios: tuple[Fraction, ...]
    all_integral: bool


@dataclass
class ApproximationReport:
    """A full series run: ordered records, optionally with a unit chain attached."""

    problem: RootProblem
    records: list[IterationRecord]
    chain: UnitChain | None = field(default=None)


@dataclass(frozen=True)
class CircleResult:
    mode: CircleMode
    area: Fraction
    circumference: Fraction


def _check_degree(degree: int) -> None:
    if degree not in (2, 3):
        raise ValueError(f"degree must be 2 or 3, got {degree}")


def floor_root(radicand: int, degree: int = 2) -> FloorRoot:
    """Greatest integer a with a**degree <= radicand, plus the remainder.

    Pure integer binary search; no floating point is involved, so the
    sandwich a**d <= radicand < (a+1)**d holds for radicands of any size.
    """
    _check_degree(degree)
    if radicand < 0:
        raise DomainError(f"negative radicand: {radicand}")
    lo, hi = 0, 1
    while hi**degree <= radicand:
        hi <<= 1
    # invariant: lo**degree <= radicand < hi**degree
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if mid**degree <= radicand:
            lo = mid
        else:
            hi = mid
    return FloorRoot(lo, radicand - lo**degree)


def morouzi_first_correction(fr: FloorRoot, degree: int = 2) -> Fraction:
    """First fractional correction: r/(2a+1) for squares, r/(3a^2+3a+1) for cubes.

    Since the true correction satisfies e = r/(2a + e) with e < 1 (and the
    cube analogue), replacing e by 1 can only enlarge the denominator, so
    the result never overshoots.  Zero remainder gives zero.
    """
    _check_degree(degree)
    a, r = fr.root, fr.remainder
    if degree == 2:
        return Fraction(r, 2 * a + 1)
    return Fraction(r, 3 * a * a + 3 * a + 1)


def morouzi_approx(radicand: int, degree: int = 2) -> Fraction:
    """Floor root plus first correction; a lower bound, exact iff radicand is a perfect power.

    morouzi_approx(12, 2) == 24/7 and morouzi_approx(10, 2) == 22/7, the
    classical value reused for pi.
    """
    fr = floor_root(radicand, degree)
    return fr.root + morouzi_first_correction(fr, degree)


def residual(radicand: int, x: Fraction, degree: int = 2) -> Fraction:
    """Signed exact residual radicand - x**degree."""
    return radicand - x**degree


def classify_bound(res: Fraction) -> BoundSide:
    """Positive residual means the approximant is below the root, negative above."""
    if res > 0:
        return BoundSide.BELOW
    if res < 0:
        return BoundSide.ABOVE
    return BoundSide.EXACT


def newton_neglect_step(x: Fraction, radicand: int, degree: int = 2) -> Fraction:
    """One neglect-rule step from x: x + (radicand - x**d)/(d * x**(d-1)).

    Equal to (x + radicand/x)/2 for squares and (2x + radicand/x^2)/3 for
    cubes.  For any x > 0 the result is on or above the true root, and a
    fixed point exactly at it.
    """
    _check_degree(degree)
    if x <= 0:
        raise DomainError(f"step requires a positive approximant, got {x}")
    return x + (radicand - x**degree) / (degree * x ** (degree - 1))


def baudhayana_series(radicand: int, degree: int = 2, iterations: int = 3) -> ApproximationReport:
    """Run the alternating series: floor seed, first correction, then neglect steps.

    ``iterations`` counts corrections, so the report holds records
    0..iterations.  Perfect d-th powers terminate at the seed with bound
    EXACT regardless of the requested count.  For sqrt(2) and three
    corrections the approximants are 1, 4/3, 17/12, 577/408 with
    corrections 1/3, 1/12, -1/408.
    """
    if iterations < 0:
        raise ValueError(f"iteration count must be >= 0, got {iterations}")
    fr = floor_root(radicand, degree)
    problem = RootProblem(radicand, degree)
    x = Fraction(fr.root)
    res = Fraction(fr.remainder)
    records = [IterationRecord(0, x, Fraction(0), res, classify_bound(res), Rule.FLOOR_SEED)]
    if fr.remainder == 0:
        return ApproximationReport(problem, records)
    for n in range(1, iterations + 1):
        if n == 1:
            eps = morouzi_first_correction(fr, degree)
            rule = Rule.MOROUZI_FIRST
        else:
            eps = res / (degree * x ** (degree - 1))
            rule = Rule.NEWTON_NEGLECT
        x += eps
        res = radicand - x**degree
        records.append(IterationRecord(n, x, eps, res, classify_bound(res), rule))
    return ApproximationReport(problem, records)


def unit_chain(report: ApproximationReport) -> UnitChain:
    """Rewrite a report's corrections as a chain of term ratios.

    The first ratio is 1/|e_1|, each later one |e_{n-1}|/|e_n|.  Ratios are
    exact rationals; ``all_integral`` marks whether the classical integer
    product form applies (it does for sqrt(2): ratios 3, 4, 34).
    """
    corrections = [rec.correction for rec in report.records[1:]]
    if not corrections:
        raise DegenerateChainError("report has no corrections to chain")
    signs: list[int] = []
    ratios: list[Fraction] = []
    prev = Fraction(1)
    for n, eps in enumerate(corrections, start=1):
        if eps == 0:
            raise DegenerateChainError(f"zero correction at record {n}")
        signs.append(1 if eps > 0 else -1)
        ratios.append(prev / abs(eps))
        prev = abs(eps)
    all_integral = all(r.denominator == 1 for r in ratios)
    return UnitChain(tuple(signs), tuple(ratios), all_integral)


def brahmagupta_circle(radius: Fraction, mode: CircleMode = CircleMode.SUBTLE) -> CircleResult:
    """Circle area and circumference under Brahmagupta's two rules.

    GROSS uses pi = 3 (area 3r^2, circumference 6r).  SUBTLE uses
    pi = sqrt(10) evaluated by the first correction - computed, not
    hard-coded - which lands on 22/7 exactly.
    """
    radius = Fraction(radius)
    if radius <= 0:
        raise DomainError(f"radius must be positive, got {radius}")
    if mode is CircleMode.GROSS:
        return CircleResult(mode, 3 * radius**2, 6 * radius)
    root_ten = morouzi_approx(10, 2)
    return CircleResult(mode, radius**2 * root_ten, 2 * radius * root_ten)
