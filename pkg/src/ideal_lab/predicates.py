"""Kernel-generic ideal predicates: reductions, basic/C-ideals, big/upper-big,
Ratliff-Rush closure.

Ideals from any kernel participate as long as they support exact `==`, `<=`
(containment), `*` (product) and `**` (power).  Kernels that can decide power
questions over all exponents (the finite kernel, via periodicity) expose
`first_equal_power` / `reduction_index` and are used exactly; everything else
is bounded by n_max and says so in the verdict.

Witness reporting is deterministic: smallest violating exponent first, ties
broken by candidate order in the stream.
"""

from __future__ import annotations

from dataclasses import dataclass

from .verdicts import Candidates, Verdict

DEFAULT_N_MAX = 8


def _short(ideal) -> str:
    return repr(ideal)


def _first_equal_power(a, b, n_max: int) -> tuple[int | None, bool]:
    """(least n with a^n == b^n or None, decided-exactly flag)."""
    if hasattr(a, "first_equal_power"):
        return a.first_equal_power(b), True
    pa, pb = a, b
    for n in range(1, n_max + 1):
        if pa == pb:
            return n, False
        if n < n_max:
            pa, pb = pa * a, pb * b
    return None, False


def _reduction_index(smaller, larger, n_max: int) -> tuple[int | None, bool]:
    """(least n >= 0 with smaller * larger^n == larger^(n+1) or None, exact flag)."""
    if hasattr(smaller, "reduction_index"):
        return smaller.reduction_index(larger), True
    if smaller == larger:
        return 0, True
    power = larger
    for n in range(1, n_max + 1):
        nxt = power * larger
        if smaller * power == nxt:
            return n, False
        power = nxt
    return None, False


def is_reduction(smaller, larger, n_max: int = DEFAULT_N_MAX) -> Verdict:
    """Whether smaller * larger^n = larger^(n+1) for some n; holds carry the index."""
    if not smaller <= larger:
        raise ValueError("first ideal must be contained in the second")
    idx, exact = _reduction_index(smaller, larger, n_max)
    if idx is not None:
        return Verdict.holds_exhaustive(n=idx, scope="reduction index re-verifies")
    if exact:
        return Verdict.fails_definitely(scope="no reduction index exists (exact)")
    return Verdict.fails_bounded(n_max=n_max, scope="no reduction index found")


def is_basic(ideal, candidates: Candidates, n_max: int = DEFAULT_N_MAX) -> Verdict:
    """No proper subideal among the candidates is a reduction."""
    best = None
    transcript = []
    for pos, j in enumerate(candidates.ideals):
        if j == ideal:
            continue
        if not j <= ideal:
            raise ValueError("candidate is not a subideal")
        idx, _ = _reduction_index(j, ideal, n_max)
        transcript.append((_short(j), idx))
        if idx is not None and (best is None or idx < best[0]):
            best = (idx, pos, j)
    if best is not None:
        return Verdict.fails_definitely(
            witness=best[2], n=best[0], scope=candidates.description, transcript=transcript
        )
    if candidates.complete:
        return Verdict.holds_exhaustive(scope=candidates.description, transcript=transcript)
    return Verdict.holds_bounded(n_max=n_max, scope=candidates.description, transcript=transcript)


def is_c_ideal(ideal, candidates: Candidates, n_max: int = DEFAULT_N_MAX) -> Verdict:
    """The ideal is a reduction of no strictly larger candidate."""
    best = None
    transcript = []
    for pos, j in enumerate(candidates.ideals):
        if j == ideal:
            continue
        if not ideal <= j:
            raise ValueError("candidate is not a superideal")
        idx, _ = _reduction_index(ideal, j, n_max)
        transcript.append((_short(j), idx))
        if idx is not None and (best is None or idx < best[0]):
            best = (idx, pos, j)
    if best is not None:
        return Verdict.fails_definitely(
            witness=best[2], n=best[0], scope=candidates.description, transcript=transcript
        )
    if candidates.complete:
        return Verdict.holds_exhaustive(scope=candidates.description, transcript=transcript)
    return Verdict.holds_bounded(n_max=n_max, scope=candidates.description, transcript=transcript)


def _power_collision_scan(ideal, candidates: Candidates, n_max: int, proper) -> Verdict:
    best = None
    all_exact = True
    transcript = []
    for pos, j in enumerate(candidates.ideals):
        if j == ideal:
            continue
        proper(j)  # containment direction check, raises on bad candidates
        n, exact = _first_equal_power(j, ideal, n_max)
        all_exact = all_exact and exact
        transcript.append((_short(j), n))
        if n is not None and (best is None or n < best[0]):
            best = (n, pos, j)
            if n == 2:  # 1 is impossible for proper containments
                break
    if best is not None:
        return Verdict.fails_definitely(
            witness=best[2], n=best[0], scope=candidates.description, transcript=transcript
        )
    if candidates.complete and all_exact:
        return Verdict.holds_exhaustive(scope=candidates.description, transcript=transcript)
    if candidates.complete:
        return Verdict.holds_exhaustive(
            scope=f"{candidates.description}; exponents <= {n_max}",
            transcript=transcript,
        )
    return Verdict.holds_bounded(n_max=n_max, scope=candidates.description, transcript=transcript)


def is_big(ideal, candidates: Candidates, n_max: int = DEFAULT_N_MAX) -> Verdict:
    """Every proper subideal keeps strictly smaller powers at every exponent."""

    def check(j):
        if not j <= ideal:
            raise ValueError("candidate is not a subideal")

    return _power_collision_scan(ideal, candidates, n_max, check)


def is_upper_big(ideal, candidates: Candidates, n_max: int = DEFAULT_N_MAX) -> Verdict:
    """Every proper superideal keeps strictly larger powers at every exponent."""

    def check(j):
        if not ideal <= j:
            raise ValueError("candidate is not a superideal")

    return _power_collision_scan(ideal, candidates, n_max, check)


@dataclass(frozen=True)
class RatliffRushResult:
    closure: object
    stabilized: bool
    stabilized_at: int | None
    n_max: int
    terms: tuple

    @property
    def exact(self) -> bool:
        return self.stabilized


def _colon_in_ring(numerator, denominator, ring_ideal):
    colon = numerator.colon(denominator)
    return colon & ring_ideal


def ratliff_rush(ideal, ring, n_max: int = DEFAULT_N_MAX) -> RatliffRushResult:
    """Union of (I^(n+1) : I^n) inside R for n <= n_max.

    The chain is increasing; two consecutive equal terms flag the result exact.
    Requires a kernel with colon and intersection (series, finite).
    """
    if not hasattr(ideal, "colon"):
        raise ValueError("kernel does not support colon")
    ring_ideal = ring.unit_ideal()
    acc = None
    prev = None
    terms = []
    stabilized_at = None
    power = ideal
    for n in range(1, n_max + 1):
        nxt = power * ideal
        term = _colon_in_ring(nxt, power, ring_ideal)
        terms.append(term)
        acc = term if acc is None else (acc + term)
        if prev is not None and term == prev:
            stabilized_at = n - 1
            break
        prev = term
        power = nxt
    return RatliffRushResult(
        closure=acc,
        stabilized=stabilized_at is not None,
        stabilized_at=stabilized_at,
        n_max=n_max,
        terms=tuple(terms),
    )


@dataclass(frozen=True)
class RRUpperBigReport:
    """Outcome of checking that a Ratliff-Rush closed ideal is upper big.

    A failing verdict contradicts the expected implication within the tested
    scope, so it is surfaced as an alarm rather than silently returned.
    """

    verdict: Verdict
    alarm: bool


def check_rr_implies_upper_big(
    ideal, ring, candidates: Candidates, n_max: int = DEFAULT_N_MAX
) -> RRUpperBigReport:
    rr = ratliff_rush(ideal, ring, n_max)
    if not rr.stabilized or rr.closure != ideal:
        raise ValueError("precondition unverified: ideal is not exactly Ratliff-Rush closed")
    verdict = is_upper_big(ideal, candidates, n_max)
    return RRUpperBigReport(verdict=verdict, alarm=not verdict.holds)
