"""Collective spin operators, quadratic forms, and expectation values.

Single-qubit operator convention: |1> is the excited level and the +1
eigenvector of ``sigma_z``.  The triple (sigma_x, sigma_y, sigma_z) is the
standard Pauli triple conjugated by a pi rotation about the y axis (which
exchanges the ground and excited levels), so the angular-momentum algebra
[J_a, J_b] = i eps_abc J_c holds unchanged.

Collective operators are J_a = (1/2) sum_k sigma_a^(k).  Quadratic forms
sum_l a_l <J_l^2> + sum_l b_l <J_l> with a_l >= 0 are the building blocks of
all collective entanglement criteria in this library.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

import numpy as np

from .config import DEFAULT_TOLERANCES, DENSE_QUBIT_LIMIT
from .errors import DomainError, InvariantViolationError
from .states import DensityMatrix, PureState, SymmetricState

SIGMA_X = np.array([[0, -1], [-1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[-1, 0], [0, 1]], dtype=complex)
for _s in (SIGMA_X, SIGMA_Y, SIGMA_Z):
    _s.setflags(write=False)

PAULI = {"x": SIGMA_X, "y": SIGMA_Y, "z": SIGMA_Z}
AXES = ("x", "y", "z")


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """Dense Hermitian observable."""

    dimension: int
    matrix: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        if mat.shape != (self.dimension, self.dimension):
            raise DomainError(
                f"HermitianOperator: expected shape ({self.dimension},{self.dimension}), "
                f"got {mat.shape}"
            )
        if np.abs(mat - mat.conj().T).max() > DEFAULT_TOLERANCES.hermitian_atol:
            raise DomainError("HermitianOperator matrix is not Hermitian within tolerance")
        mat = mat.copy()
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)


@dataclass(frozen=True)
class QuadraticForm:
    """Coefficients of sum_l a_l J_l^2 + sum_l b_l J_l with a_l >= 0."""

    a: tuple[float, float, float] = (0.0, 0.0, 0.0)
    b: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        a = tuple(float(x) for x in self.a)
        b = tuple(float(x) for x in self.b)
        if len(a) != 3 or len(b) != 3:
            raise DomainError("QuadraticForm coefficients must be triples (x, y, z)")
        if any(x < 0 for x in a):
            raise DomainError(f"quadratic coefficients must be nonnegative, got a = {a}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def is_linear_free(self) -> bool:
        return all(x == 0.0 for x in self.b)


def single_site(op: np.ndarray, qubit: int, n: int) -> np.ndarray:
    """Embed a single-qubit operator on 1-based ``qubit`` into N qubits."""
    if not 1 <= qubit <= n:
        raise DomainError(f"qubit label {qubit} not within 1..{n}")
    return reduce(np.kron, [op if k == qubit else np.eye(2, dtype=complex) for k in range(1, n + 1)])


@lru_cache(maxsize=64)
def _axis_matrix(n: int, axis: str) -> np.ndarray:
    dim = 2 ** n
    out = np.zeros((dim, dim), dtype=complex)
    for qubit in range(1, n + 1):
        out += single_site(PAULI[axis], qubit, n)
    out *= 0.5
    out.setflags(write=False)
    return out


@lru_cache(maxsize=64)
def _axis_squared(n: int, axis: str) -> np.ndarray:
    j = _axis_matrix(n, axis)
    out = j @ j
    out.setflags(write=False)
    return out


def _check_dense(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if n > DENSE_QUBIT_LIMIT:
        raise DomainError(f"n = {n} exceeds the dense backend limit of {DENSE_QUBIT_LIMIT} qubits")


def collective_operator(n: int, which: "QuadraticForm | str") -> HermitianOperator:
    """Dense J_axis for an axis tag, or sum_l a_l J_l^2 + b_l J_l for a form."""
    _check_dense(n)
    if isinstance(which, str):
        if which not in AXES:
            raise DomainError(f"axis must be one of {AXES}, got {which!r}")
        mat = _axis_matrix(n, which)
    elif isinstance(which, QuadraticForm):
        mat = np.zeros((2 ** n, 2 ** n), dtype=complex)
        for coeff, axis in zip(which.a, AXES):
            if coeff != 0.0:
                mat += coeff * _axis_squared(n, axis)
        for coeff, axis in zip(which.b, AXES):
            if coeff != 0.0:
                mat += coeff * _axis_matrix(n, axis)
    else:
        raise DomainError(f"cannot build a collective operator from {type(which).__name__}")
    try:
        return HermitianOperator(2 ** n, mat)
    except DomainError as exc:  # assembly of Hermitian pieces can only fail via a bug
        raise InvariantViolationError(f"collective operator assembly is not Hermitian: {exc}") from exc


# ---------------------------------------------------------------------------
# symmetric-sector backend
# ---------------------------------------------------------------------------

def _sector_apply(axis: str, amps: np.ndarray, n: int) -> np.ndarray:
    """Apply J_axis to maximal-spin sector amplitudes (tridiagonal, O(N))."""
    m = np.arange(n + 1)
    if axis == "z":
        return (m - n / 2.0) * amps
    c = np.sqrt((m[:-1] + 1.0) * (n - m[:-1]))  # couples excitation m <-> m+1
    out = np.zeros_like(amps)
    if axis == "x":
        out[1:] -= 0.5 * c * amps[:-1]
        out[:-1] -= 0.5 * c * amps[1:]
    elif axis == "y":
        out[1:] += 0.5j * c * amps[:-1]
        out[:-1] -= 0.5j * c * amps[1:]
    else:
        raise DomainError(f"axis must be one of {AXES}, got {axis!r}")
    return out


def _sector_expectation(state: SymmetricState, which: "QuadraticForm | str") -> float:
    amps = state.sector_amplitudes
    n = state.n_qubits
    if isinstance(which, str):
        return float(np.vdot(amps, _sector_apply(which, amps, n)).real)
    total = 0.0
    for coeff, axis in zip(which.a, AXES):
        if coeff != 0.0:
            jv = _sector_apply(axis, amps, n)
            total += coeff * float(np.vdot(jv, jv).real)
    for coeff, axis in zip(which.b, AXES):
        if coeff != 0.0:
            total += coeff * float(np.vdot(amps, _sector_apply(axis, amps, n)).real)
    return total


# ---------------------------------------------------------------------------
# expectation values
# ---------------------------------------------------------------------------

def expectation(state, op) -> float:
    """<op> on a PureState, DensityMatrix, or SymmetricState.

    ``op`` may be a HermitianOperator, a QuadraticForm, or an axis tag
    ('x', 'y', 'z') meaning the corresponding J operator.  Symmetric-sector
    states accept only collective forms and axis tags.
    """
    if isinstance(state, SymmetricState):
        if isinstance(op, HermitianOperator):
            raise DomainError("SymmetricState supports only collective forms and axis tags")
        return _sector_expectation(state, op)

    if isinstance(op, (QuadraticForm, str)):
        op = collective_operator(_qubits_of(state), op)
    if not isinstance(op, HermitianOperator):
        raise DomainError(f"cannot take an expectation of {type(op).__name__}")

    if isinstance(state, PureState):
        if state.dimension != op.dimension:
            raise DomainError(
                f"dimension mismatch: state dim {state.dimension}, operator dim {op.dimension}"
            )
        return float(np.vdot(state.amplitudes, op.matrix @ state.amplitudes).real)
    if isinstance(state, DensityMatrix):
        if state.dimension != op.dimension:
            raise DomainError(
                f"dimension mismatch: state dim {state.dimension}, operator dim {op.dimension}"
            )
        return float(np.einsum("ij,ji->", state.matrix, op.matrix).real)
    raise DomainError(f"unsupported state type {type(state).__name__}")


def _qubits_of(state) -> int:
    if isinstance(state, (PureState, DensityMatrix, SymmetricState)):
        return state.n_qubits
    raise DomainError(f"unsupported state type {type(state).__name__}")


def variance(state, axis: str) -> float:
    """Var(J_axis) = <J_axis^2> - <J_axis>^2."""
    a = {"x": (1.0, 0, 0), "y": (0, 1.0, 0), "z": (0, 0, 1.0)}[axis]
    second = expectation(state, QuadraticForm(a=a))
    first = expectation(state, axis)
    return second - first ** 2
