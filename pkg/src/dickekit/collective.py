"""Entanglement criteria built from collective spin measurements.

The criteria evaluated here (documented in the README's theory section):

- Lemma 1 bound: over fully separable states, any form
  sum_l a_l <J_l^2> + sum_l b_l <J_l> with a_l >= 0 attains its maximum on
  N-fold tensor powers of one qubit state; for b = 0 the bound is
  B = sum(a) N/4 + max(a) (N/2)(N/2 - 1/2).
- Theorem 2 ('theorem2'): separable states obey
  <Jx^2> + <Jy^2> <= (N/2)(N/2 + 1/2); equality for equatorial product
  states, and the half-excited Dicke state attains the global maximum
  (N/2)(N/2 + 1) for even N.
- 'variance': the same bound holds for Var(Jx) + Var(Jy).
- 'symmetric_jz': for states in the maximal-spin sector the bound becomes
  N/4 <= <Jz^2>.
- 'crit2' with integer shift m: <Jx^2> + <Jy^2> - 2m <Jz> against the Lemma 1
  bound of the matching form; maximized by a Dicke state with <Jz> = -m.
- 'genuine3'/'genuine4': biseparable 3- and 4-qubit states obey
  <Jx^2> + <Jy^2> <= 2 + sqrt(5)/2 and <= 7/2 + sqrt(3) (Lemma 2/Theorem 3);
  violation certifies genuine multipartite entanglement.
- Superradiance: the emitted light intensity of a coherent atomic cloud is
  I = I0 (<Jx^2> + <Jy^2> + <Jz>), maximal at the half-excited Dicke state.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import sqrt

import numpy as np

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import DomainError
from .operators import (
    HermitianOperator,
    QuadraticForm,
    expectation,
    single_site,
    PAULI,
)
from .oracle import maximize_over_ti_product
from .states import DensityMatrix, PureState, SymmetricState, dicke_state, psixy_noise_mix, white_noise_mix
from .verdicts import DETECTED_ENTANGLED, DETECTED_GENUINE, WitnessVerdict, make_verdict

CRITERION_KINDS = ("theorem2", "variance", "symmetric_jz", "crit2", "genuine3", "genuine4")

GENUINE3_BOUND = 2.0 + sqrt(5.0) / 2.0
GENUINE4_BOUND = 3.5 + sqrt(3.0)

_XY_FORM = QuadraticForm(a=(1.0, 1.0, 0.0))
_Z2_FORM = QuadraticForm(a=(0.0, 0.0, 1.0))
_TOTAL_FORM = QuadraticForm(a=(1.0, 1.0, 1.0))


def theorem2_bound(n: int) -> float:
    """Separable bound on <Jx^2> + <Jy^2>: (N/2)(N/2 + 1/2)."""
    return (n / 2.0) * (n / 2.0 + 0.5)


def lemma1_bound(form: QuadraticForm, n: int, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Separable-state maximum of the quadratic collective form.

    With no linear part the closed form applies; otherwise the maximum over
    N-fold tensor powers (which equals the separable maximum) is computed
    numerically over a single Bloch vector.
    """
    if not isinstance(form, QuadraticForm):
        form = QuadraticForm(*form)
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if form.is_linear_free:
        a = form.a
        return sum(a) * n / 4.0 + max(a) * (n / 2.0) * (n / 2.0 - 0.5)
    return maximize_over_ti_product(form, n).value


def criterion_verdict(
    state,
    kind: str,
    m: int | None = None,
    detection_tolerance: float | None = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> WitnessVerdict:
    """Evaluate one collective criterion on a pure, mixed, or symmetric state."""
    if kind not in CRITERION_KINDS:
        raise DomainError(f"criterion kind must be one of {CRITERION_KINDS}, got {kind!r}")
    n = state.n_qubits
    dt = tol.detection_tolerance if detection_tolerance is None else detection_tolerance

    if kind == "theorem2":
        value = expectation(state, _XY_FORM)
        return make_verdict(kind, value, theorem2_bound(n), DETECTED_ENTANGLED, dt)
    if kind == "variance":
        value = expectation(state, _XY_FORM) - expectation(state, "x") ** 2 - expectation(state, "y") ** 2
        return make_verdict(kind, value, theorem2_bound(n), DETECTED_ENTANGLED, dt)
    if kind == "symmetric_jz":
        total = expectation(state, _TOTAL_FORM)
        maximal = (n / 2.0) * (n / 2.0 + 1.0)
        if abs(total - maximal) > tol.symmetry_atol:
            raise DomainError(
                f"symmetric_jz needs a maximal-spin state: <J^2> = {total:.12g}, expected {maximal:.12g}"
            )
        value = n / 4.0 - expectation(state, _Z2_FORM)
        return make_verdict(kind, value, 0.0, DETECTED_ENTANGLED, dt)
    if kind == "crit2":
        if m is None or not isinstance(m, (int, np.integer)):
            raise DomainError("crit2 needs an integer shift m")
        form = QuadraticForm(a=(1.0, 1.0, 0.0), b=(0.0, 0.0, -2.0 * m))
        value = expectation(state, form)
        return make_verdict(f"crit2(m={int(m)})", value, lemma1_bound(form, n), DETECTED_ENTANGLED, dt)
    # genuine multipartite criteria
    required = 3 if kind == "genuine3" else 4
    if n != required:
        raise DomainError(f"{kind} applies to exactly {required} qubits, got n = {n}")
    value = expectation(state, _XY_FORM)
    bound = GENUINE3_BOUND if kind == "genuine3" else GENUINE4_BOUND
    return make_verdict(kind, value, bound, DETECTED_GENUINE, dt)


# ---------------------------------------------------------------------------
# Lemma 2 and its operators (two-qubit planar moments)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1)
def lemma2_operators() -> tuple[HermitianOperator, HermitianOperator, HermitianOperator]:
    """M1 = sx sx + sy sy; M2 = sx (x) 1 + 1 (x) sx; M3 likewise for y."""
    m1 = np.kron(PAULI["x"], PAULI["x"]) + np.kron(PAULI["y"], PAULI["y"])
    m2 = single_site(PAULI["x"], 1, 2) + single_site(PAULI["x"], 2, 2)
    m3 = single_site(PAULI["y"], 1, 2) + single_site(PAULI["y"], 2, 2)
    return tuple(HermitianOperator(4, m) for m in (m1, m2, m3))


def lemma2_vector_norm(state) -> float:
    """<M1>^2 + <M2>^2 + <M3>^2 for a two-qubit state; at most 16/3."""
    if isinstance(state, PureState):
        state = state.to_density()
    if not isinstance(state, DensityMatrix) or state.n_qubits != 2:
        raise DomainError("lemma2_vector_norm needs a two-qubit state")
    total = 0.0
    for op in lemma2_operators():
        total += expectation(state, op) ** 2
    return total


def theorem3_operators(x1: float = 1.0, y1: float = 0.0) -> tuple[HermitianOperator, HermitianOperator, HermitianOperator, HermitianOperator]:
    """(Qx, Qy, R, x1 Qx + y1 Qy + R) on three qubits.

    Qa sums sigma_a over the three qubits; R sums the planar pair correlators
    sx sx + sy sy over the three pairs.
    """
    qx = sum(single_site(PAULI["x"], q, 3) for q in (1, 2, 3))
    qy = sum(single_site(PAULI["y"], q, 3) for q in (1, 2, 3))
    r = np.zeros((8, 8), dtype=complex)
    for i, j in ((1, 2), (1, 3), (2, 3)):
        r += single_site(PAULI["x"], i, 3) @ single_site(PAULI["x"], j, 3)
        r += single_site(PAULI["y"], i, 3) @ single_site(PAULI["y"], j, 3)
    combo = x1 * qx + y1 * qy + r
    return tuple(HermitianOperator(8, m) for m in (qx, qy, r, combo))


# ---------------------------------------------------------------------------
# analytic eigenvalue families
# ---------------------------------------------------------------------------

def analytic_eigenvalues(family: str, params) -> np.ndarray:
    """Closed-form spectra used in the genuine-multipartite bound proofs.

    'lemma2_eig' takes a unit 3-vector n and returns the four eigenvalues of
    n1 M1 + n2 M2 + n3 M3: {0, -2 n1, n1 +- sqrt(n1^2 + 4 n2^2 + 4 n3^2)}.

    'theorem3_eig' takes X in [0, 1] and returns the eight eigenvalues of
    x1 Qx + y1 Qy + R with X = sqrt(x1^2 + y1^2), with multiplicities.
    """
    if family == "lemma2_eig":
        v = np.asarray(params, dtype=float)
        if v.shape != (3,):
            raise DomainError(f"lemma2_eig needs a 3-vector, got shape {v.shape}")
        if abs(np.linalg.norm(v) - 1.0) > 1e-12:
            raise DomainError(f"direction vector must be unit length, |n| = {np.linalg.norm(v):.12g}")
        n1, n2, n3 = v
        root = sqrt(n1 ** 2 + 4 * n2 ** 2 + 4 * n3 ** 2)
        return np.array([0.0, -2 * n1, n1 + root, n1 - root])
    if family == "theorem3_eig":
        x = float(params)
        if not 0.0 <= x <= 1.0:
            raise DomainError(f"theorem3_eig needs X in [0, 1], got {x!r}")
        rp = 2.0 * sqrt(1.0 + x + x * x)
        rm = 2.0 * sqrt(1.0 - x + x * x)
        return np.array(
            [-2 + x, -2 + x, -2 - x, -2 - x, 2 + x + rp, 2 + x - rp, 2 - x + rm, 2 - x - rm]
        )
    raise DomainError(f"unknown eigenvalue family {family!r}")


@dataclass(frozen=True)
class PartitionBounds:
    """Per-partition biseparable bounds on <Jx^2> + <Jy^2> for four qubits."""

    split22_bound: float
    split13_bound: float
    overall: float


def theorem3_partition_bounds() -> PartitionBounds:
    """2|2 splits are capped at 31/6; 1|3 splits at 7/2 + sqrt(3), which is
    larger and therefore the biseparable bound."""
    split22 = 31.0 / 6.0
    split13 = GENUINE4_BOUND
    return PartitionBounds(split22, split13, max(split22, split13))


# ---------------------------------------------------------------------------
# superradiance
# ---------------------------------------------------------------------------

def superradiance_intensity(state, i0: float = 1.0, n: int | None = None) -> float:
    """Peak emission intensity I = I0 (<Jx^2> + <Jy^2> + <Jz>).

    Zero for the ground state, N I0 for the all-excited product state, and
    maximal, I0 (N/2)(N/2 + 1), at the half-excited Dicke state.
    """
    if not i0 > 0:
        raise DomainError(f"i0 must be positive, got {i0!r}")
    if n is not None and n != state.n_qubits:
        raise DomainError(f"state has {state.n_qubits} qubits, expected n = {n}")
    return i0 * (expectation(state, _XY_FORM) + expectation(state, "z"))


# ---------------------------------------------------------------------------
# noise thresholds
# ---------------------------------------------------------------------------

def collective_noise_threshold(n: int, kind: str, noise: str = "white") -> float:
    """Closed-form noise ratio at which a criterion stops detecting the noisy
    half-excited Dicke state.

    white noise: 'theorem2' -> 1/N (even N); 'genuine4' -> (5/2 - sqrt(3))/4
    at N = 4.  psixy noise: 'theorem2' -> 1 (detection for every p < 1).
    """
    if not isinstance(n, (int, np.integer)) or n < 2 or n % 2 != 0:
        raise DomainError(f"noise thresholds are defined for even n >= 2, got {n!r}")
    if noise == "white":
        if kind == "theorem2":
            return 1.0 / n
        if kind == "genuine4":
            if n != 4:
                raise DomainError("genuine4 threshold is defined for n = 4 only")
            return (2.5 - sqrt(3.0)) / 4.0
        raise DomainError(f"no white-noise threshold for kind {kind!r}")
    if noise == "psixy":
        if kind == "theorem2":
            return 1.0
        raise DomainError(f"no psixy-noise threshold for kind {kind!r}")
    raise DomainError(f"noise family must be 'white' or 'psixy', got {noise!r}")


def collective_threshold_numeric(
    n: int, kind: str, noise: str = "white", tol: Tolerances = DEFAULT_TOLERANCES
) -> float:
    """Noise threshold found by root-finding the verdict margin over p in [0,1]."""
    from scipy.optimize import brentq

    if kind not in ("theorem2", "genuine4"):
        raise DomainError(f"numeric threshold supports 'theorem2'/'genuine4', got {kind!r}")
    target = dicke_state(n, n // 2)

    def margin(p: float) -> float:
        if noise == "white":
            rho = white_noise_mix(target, p)
        elif noise == "psixy":
            rho = psixy_noise_mix(n, p)
        else:
            raise DomainError(f"noise family must be 'white' or 'psixy', got {noise!r}")
        return criterion_verdict(rho, kind).margin

    lo, hi = margin(0.0), margin(1.0)
    if lo <= 0:
        raise DomainError("criterion does not detect the noiseless state; no threshold")
    if hi > tol.soundness_tol:
        raise DomainError("margin stays positive on [0, 1]; no threshold to find")
    if hi > 0:
        return 1.0  # crossing sits at the endpoint within roundoff
    return float(brentq(margin, 0.0, 1.0, xtol=tol.bisection_xtol))
