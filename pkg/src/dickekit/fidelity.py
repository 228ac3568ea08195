"""Fidelity-based genuine-multipartite entanglement witnesses around Dicke states.

The biseparable bound for the overlap with a target pure state is the largest
squared Schmidt coefficient of the target over all bipartitions.  For the
half-excited Dicke state |N/2,N> (even N >= 4) that maximum sits at the split
with two qubits on one side and equals N / (2(N-1)); for the one-excitation
state |1,N> it is (N-1)/N.  Any state whose Dicke fidelity exceeds the bound
is genuinely N-partite entangled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np
from scipy.optimize import brentq

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import DomainError, InvariantViolationError
from .states import (
    Bipartition,
    DensityMatrix,
    PureState,
    dicke_state,
    schmidt_spectrum,
    white_noise_mix,
)
from .verdicts import DETECTED_GENUINE, WitnessVerdict, make_verdict


def dicke_fidelity_bound(n: int, m: int, method: str = "exact") -> float:
    """Maximal squared overlap of |m,N> with biseparable pure states.

    method='exact' enumerates the closed-form squared Schmidt coefficients
    C(N1,k) C(N-N1,m-k) / C(N,m) with exact integer arithmetic; method='svd'
    sweeps all split sizes with a dense singular value decomposition.  The two
    must agree to tight tolerance, which the test suite enforces.
    """
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise DomainError(f"need at least two qubits for a bipartition, got n = {n!r}")
    if not isinstance(m, (int, np.integer)) or not 0 <= m <= n:
        raise DomainError(f"excitation count m = {m!r} must satisfy 0 <= m <= {n}")
    if method == "exact":
        best = Fraction(0)
        total = comb(n, m)
        for n1 in range(1, n // 2 + 1):
            k_lo = max(0, m - (n - n1))
            k_hi = min(n1, m)
            for k in range(k_lo, k_hi + 1):
                best = max(best, Fraction(comb(n1, k) * comb(n - n1, m - k), total))
        return float(best)
    if method == "svd":
        state = dicke_state(n, m)
        best = 0.0
        # permutation invariance: only the split size matters
        for n1 in range(1, n // 2 + 1):
            split = Bipartition(n, tuple(range(1, n1 + 1)))
            best = max(best, schmidt_spectrum(state, split).largest)
        return best
    raise DomainError(f"method must be 'exact' or 'svd', got {method!r}")


def fidelity_witness_verdict(
    state: "PureState | DensityMatrix",
    n: int,
    m: int,
    detection_tolerance: float | None = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> WitnessVerdict:
    """Compare <m,N| rho |m,N> against the biseparable overlap bound."""
    target = dicke_state(n, m).amplitudes
    if isinstance(state, PureState):
        if state.n_qubits != n:
            raise DomainError(f"state has {state.n_qubits} qubits, expected {n}")
        value = abs(np.vdot(target, state.amplitudes)) ** 2
    elif isinstance(state, DensityMatrix):
        if state.n_qubits != n:
            raise DomainError(f"state has {state.n_qubits} qubits, expected {n}")
        value = float(np.vdot(target, state.matrix @ target).real)
    else:
        raise DomainError(f"unsupported state type {type(state).__name__}")
    bound = dicke_fidelity_bound(n, m)
    dt = tol.detection_tolerance if detection_tolerance is None else detection_tolerance
    return make_verdict("fidelity", value, bound, DETECTED_GENUINE, dt)


def fidelity_noise_threshold(n: int) -> float:
    """White-noise ratio below which the fidelity witness still detects
    |N/2,N>: (1/2) (N-2) / ((N-1) (1 - 2^-N)).  Even n >= 4 only."""
    if not isinstance(n, (int, np.integer)) or n < 4 or n % 2 != 0:
        raise DomainError(f"threshold formula needs even n >= 4, got n = {n!r}")
    return 0.5 * (n - 2) / ((n - 1) * (1.0 - 2.0 ** (-n)))


def fidelity_threshold_numeric(n: int, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Noise threshold found by root-finding the witness margin over p in [0,1].

    Independent of the closed formula: evaluates the full state-construction
    and fidelity pipeline at each probe.
    """
    if not isinstance(n, (int, np.integer)) or n < 4 or n % 2 != 0:
        raise DomainError(f"numeric threshold needs even n >= 4, got n = {n!r}")
    target = dicke_state(n, n // 2)

    def margin(p: float) -> float:
        return fidelity_witness_verdict(white_noise_mix(target, p), n, n // 2).margin

    return _margin_crossing(margin, tol)


def _margin_crossing(margin, tol: Tolerances) -> float:
    """Root of a margin function on [0, 1] that is positive at p = 0."""
    lo, hi = margin(0.0), margin(1.0)
    if lo <= 0:
        raise DomainError("criterion does not detect the noiseless state; no threshold")
    if hi > tol.soundness_tol:
        raise DomainError("margin stays positive on [0, 1]; no threshold to find")
    if hi > 0:
        return 1.0  # crossing sits at the endpoint within roundoff
    return float(brentq(margin, 0.0, 1.0, xtol=tol.bisection_xtol))


# ---------------------------------------------------------------------------
# combinatorial verification of the overlap bound
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AppendixReport:
    """Exhaustive table g(N1, k) = C(N1,k) C(N-N1,N/2-k) with its maximum.

    ``h_values[N1 - 1]`` is the per-split-size maximum of g, for N1 = 1..N/2.
    All entries are exact integers.
    """

    n: int
    table: dict[tuple[int, int], int]
    argmax: tuple[int, int]
    h_values: tuple[int, ...]

    @property
    def max_value(self) -> int:
        return self.table[self.argmax]


def verify_appendix_inequality(n: int) -> AppendixReport:
    """Check, in exact integer arithmetic, that g(N1,k) is maximized at
    (N1, k) = (2, 1) with value 2 C(N-2, N/2-1), and that consecutive even
    split-size maxima obey h_{N1}/h_{N1-2} = ((N1-1)/N1) ((N-N1+2)/(N-N1+1)).

    Raises InvariantViolationError with a counterexample if either claim
    fails (it never should).
    """
    if not isinstance(n, (int, np.integer)) or n % 2 != 0 or not 4 <= n <= 64:
        raise DomainError(f"verification needs even n with 4 <= n <= 64, got n = {n!r}")
    half = n // 2
    table: dict[tuple[int, int], int] = {}
    for n1 in range(1, half + 1):
        k_lo = max(0, half - (n - n1))
        k_hi = min(n1, half)
        for k in range(k_lo, k_hi + 1):
            table[(n1, k)] = comb(n1, k) * comb(n - n1, half - k)

    expected_max = 2 * comb(n - 2, half - 1)
    overall = max(table.values())
    if table.get((2, 1)) != expected_max or overall != expected_max:
        worst = max(table, key=table.get)
        raise InvariantViolationError(
            f"overlap table maximum mismatch for n = {n}: max {overall} at {worst}, "
            f"expected {expected_max} at (2, 1)"
        )

    h_values = tuple(
        max(v for (n1, _k), v in table.items() if n1 == size) for size in range(1, half + 1)
    )
    for n1 in range(4, half + 1, 2):
        ratio = Fraction(h_values[n1 - 1], h_values[n1 - 3])
        closed = Fraction((n1 - 1) * (n - n1 + 2), n1 * (n - n1 + 1))
        if ratio != closed:
            raise InvariantViolationError(
                f"even split-size ratio mismatch for n = {n}, N1 = {n1}: "
                f"h ratio {ratio} != {closed}"
            )
        if ratio > 1:
            raise InvariantViolationError(
                f"split-size maxima not decreasing for n = {n}, N1 = {n1}: ratio {ratio} > 1"
            )
    return AppendixReport(int(n), table, (2, 1), h_values)
