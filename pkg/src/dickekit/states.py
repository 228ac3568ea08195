"""Multiqubit quantum states: dense and symmetric-sector representations.

Conventions used throughout the library:

- Qubit labels are 1-based.  Qubit 1 is the most significant bit of the
  amplitude index, and |0> precedes |1>.
- |1> is the excited level and is the +1 eigenvector of the single-qubit z
  operator, so the Dicke state with m excitations has <Jz> = m - N/2.
- Amplitudes are complex128; states are immutable after construction.

The symmetric-sector representation stores only the N+1 amplitudes of the
maximal-spin (permutation-symmetric) subspace, indexed by excitation count,
which keeps collective-spin computations tractable at large N.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, sqrt
from typing import Iterable, Sequence

import numpy as np

from .config import DEFAULT_TOLERANCES, DENSE_QUBIT_LIMIT, SYMMETRIC_QUBIT_LIMIT
from .errors import DomainError


def _as_complex_vector(values, length: int, what: str) -> np.ndarray:
    arr = np.asarray(values, dtype=complex)
    if arr.shape != (length,):
        raise DomainError(f"{what}: expected shape ({length},), got {arr.shape}")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


def _check_qubit_count(n: int, limit: int = DENSE_QUBIT_LIMIT) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"n_qubits must be a positive integer, got {n!r}")
    if n > limit:
        raise DomainError(f"n_qubits = {n} exceeds the backend limit of {limit} qubits")


@dataclass(frozen=True, eq=False)
class PureState:
    """Dense N-qubit pure state: 2^N complex amplitudes with unit norm."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        _check_qubit_count(self.n_qubits)
        amps = _as_complex_vector(self.amplitudes, 2 ** self.n_qubits, "PureState amplitudes")
        object.__setattr__(self, "amplitudes", amps)
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > DEFAULT_TOLERANCES.norm_atol:
            raise DomainError(f"PureState is not normalized: |norm - 1| = {abs(norm - 1.0):.3e}")

    @property
    def dimension(self) -> int:
        return 2 ** self.n_qubits

    def to_density(self) -> "DensityMatrix":
        """Projector |psi><psi| as a DensityMatrix."""
        return DensityMatrix(self.n_qubits, np.outer(self.amplitudes, self.amplitudes.conj()))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Dense N-qubit mixed state: Hermitian, unit-trace, positive semidefinite."""

    n_qubits: int
    matrix: np.ndarray

    def __post_init__(self):
        _check_qubit_count(self.n_qubits)
        dim = 2 ** self.n_qubits
        mat = np.asarray(self.matrix, dtype=complex)
        if mat.shape != (dim, dim):
            raise DomainError(f"DensityMatrix: expected shape ({dim},{dim}), got {mat.shape}")
        mat = mat.copy()
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)
        tol = DEFAULT_TOLERANCES
        if np.abs(mat - mat.conj().T).max() > tol.hermitian_atol:
            raise DomainError("DensityMatrix is not Hermitian within tolerance")
        if abs(np.trace(mat).real - 1.0) > tol.trace_atol or abs(np.trace(mat).imag) > tol.trace_atol:
            raise DomainError(f"DensityMatrix trace is {np.trace(mat):.15g}, expected 1")
        min_eig = np.linalg.eigvalsh(mat)[0]
        if min_eig < -tol.psd_atol:
            raise DomainError(f"DensityMatrix has negative eigenvalue {min_eig:.3e}")

    @property
    def dimension(self) -> int:
        return 2 ** self.n_qubits


@dataclass(frozen=True, eq=False)
class SymmetricState:
    """Permutation-symmetric N-qubit pure state in the maximal-spin sector.

    ``sector_amplitudes[m]`` is the amplitude of the Dicke basis state with m
    excitations; only N+1 numbers are stored.
    """

    n_qubits: int
    sector_amplitudes: np.ndarray

    def __post_init__(self):
        _check_qubit_count(self.n_qubits, limit=SYMMETRIC_QUBIT_LIMIT)
        amps = _as_complex_vector(
            self.sector_amplitudes, self.n_qubits + 1, "SymmetricState sector_amplitudes"
        )
        object.__setattr__(self, "sector_amplitudes", amps)
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > DEFAULT_TOLERANCES.norm_atol:
            raise DomainError(f"SymmetricState is not normalized: |norm - 1| = {abs(norm - 1.0):.3e}")


@dataclass(frozen=True)
class Bipartition:
    """A split of qubits {1..N} into a nonempty proper subset and its complement."""

    n_qubits: int
    side_a: tuple[int, ...]

    def __post_init__(self):
        _check_qubit_count(self.n_qubits, limit=SYMMETRIC_QUBIT_LIMIT)
        side = tuple(sorted(int(q) for q in self.side_a))
        object.__setattr__(self, "side_a", side)
        if len(set(side)) != len(side):
            raise DomainError(f"Bipartition side_a has repeated qubits: {side}")
        if any(q < 1 or q > self.n_qubits for q in side):
            raise DomainError(f"Bipartition side_a {side} not within 1..{self.n_qubits}")
        if not side or len(side) >= self.n_qubits:
            raise DomainError("Bipartition sides must both be nonempty")

    @property
    def side_b(self) -> tuple[int, ...]:
        in_a = set(self.side_a)
        return tuple(q for q in range(1, self.n_qubits + 1) if q not in in_a)


@dataclass(frozen=True, eq=False)
class SchmidtSpectrum:
    """Squared Schmidt coefficients of a pure state across a bipartition, descending."""

    split: Bipartition
    squared_coefficients: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.squared_coefficients, dtype=float).copy()
        vals.setflags(write=False)
        object.__setattr__(self, "squared_coefficients", vals)
        if vals.ndim != 1 or vals.size == 0:
            raise DomainError("SchmidtSpectrum needs a nonempty 1-d coefficient list")
        if np.any(vals < -1e-15) or np.any(np.diff(vals) > 1e-15):
            raise DomainError("Schmidt coefficients must be nonnegative and descending")
        if abs(vals.sum() - 1.0) > DEFAULT_TOLERANCES.schmidt_atol:
            raise DomainError(f"Schmidt coefficients sum to {vals.sum():.15g}, expected 1")

    @property
    def largest(self) -> float:
        return float(self.squared_coefficients[0])


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def dicke_state(n: int, m: int) -> PureState:
    """Dense Dicke state |m,N>: equal weight 1/sqrt(C(N,m)) on every basis
    label with exactly m excited qubits."""
    _check_qubit_count(n)
    if not isinstance(m, (int, np.integer)) or m < 0 or m > n:
        raise DomainError(f"excitation count m = {m!r} must satisfy 0 <= m <= {n}")
    amps = np.zeros(2 ** n, dtype=complex)
    weight = 1.0 / sqrt(comb(n, m))
    for positions in itertools.combinations(range(n), m):
        amps[sum(1 << p for p in positions)] = weight
    return PureState(n, amps)


def dicke_symmetric(n: int, m: int) -> SymmetricState:
    """Symmetric-sector Dicke state: unit amplitude on excitation count m."""
    _check_qubit_count(n, limit=SYMMETRIC_QUBIT_LIMIT)
    if not isinstance(m, (int, np.integer)) or m < 0 or m > n:
        raise DomainError(f"excitation count m = {m!r} must satisfy 0 <= m <= {n}")
    amps = np.zeros(n + 1, dtype=complex)
    amps[m] = 1.0
    return SymmetricState(n, amps)


def symmetric_to_dense(state: SymmetricState) -> PureState:
    """Embed a symmetric-sector state into the full 2^N-dimensional space."""
    n = state.n_qubits
    _check_qubit_count(n)  # dense limit applies here
    amps = np.zeros(2 ** n, dtype=complex)
    for m, a in enumerate(state.sector_amplitudes):
        if a != 0:
            amps += a * dicke_state(n, m).amplitudes
    return PureState(n, amps)


def product_state(qubit_states: Sequence[Iterable[complex]]) -> PureState:
    """Tensor product of single-qubit states; the first factor is qubit 1 (MSB)."""
    if len(qubit_states) == 0:
        raise DomainError("product_state needs at least one qubit")
    amps = np.array([1.0], dtype=complex)
    for q in qubit_states:
        v = np.asarray(q, dtype=complex)
        if v.shape != (2,):
            raise DomainError(f"single-qubit state must have shape (2,), got {v.shape}")
        amps = np.kron(amps, v)
    amps = amps / np.linalg.norm(amps)
    return PureState(len(qubit_states), amps)


def psixy_state(n: int, phi: float = 0.0) -> PureState:
    """Tensor power of (|0> + e^{i phi} |1>)/sqrt(2): the equatorial product
    state that saturates the separable bound on <Jx^2> + <Jy^2>."""
    q = np.array([1.0, np.exp(1j * phi)], dtype=complex) / sqrt(2.0)
    return product_state([q] * n)


def psixy_symmetric(n: int, phi: float = 0.0) -> SymmetricState:
    """Symmetric-sector amplitudes of psixy_state: a_m = sqrt(C(N,m)) 2^{-N/2} e^{i m phi}."""
    _check_qubit_count(n, limit=SYMMETRIC_QUBIT_LIMIT)
    m = np.arange(n + 1)
    # log-domain binomials keep this stable far beyond the dense limit
    log_binom = [0.5 * (_log_comb(n, k) - n * np.log(2.0)) for k in m]
    amps = np.exp(np.array(log_binom)) * np.exp(1j * phi * m)
    amps /= np.linalg.norm(amps)
    return SymmetricState(n, amps)


def _log_comb(n: int, k: int) -> float:
    from math import lgamma

    return lgamma(n + 1) - lgamma(k + 1) - lgamma(n - k + 1)


def assemble_bipartite(phi_a: np.ndarray, phi_b: np.ndarray, split: Bipartition) -> PureState:
    """Pure state phi_a (x) phi_b with the factors placed on the qubits of
    ``split.side_a`` and ``split.side_b`` respectively."""
    n = split.n_qubits
    _check_qubit_count(n)
    a = np.asarray(phi_a, dtype=complex)
    b = np.asarray(phi_b, dtype=complex)
    if a.shape != (2 ** len(split.side_a),) or b.shape != (2 ** len(split.side_b),):
        raise DomainError("assemble_bipartite: factor dimensions do not match the split")
    order = list(split.side_a) + list(split.side_b)  # 1-based labels, axis order of the outer product
    tensor = np.outer(a, b).reshape([2] * n)
    perm = [order.index(q) for q in range(1, n + 1)]
    amps = np.transpose(tensor, perm).reshape(-1)
    amps = amps / np.linalg.norm(amps)
    return PureState(n, amps)


def maximally_mixed(n: int) -> DensityMatrix:
    """The normalized identity on N qubits."""
    _check_qubit_count(n)
    dim = 2 ** n
    return DensityMatrix(n, np.eye(dim, dtype=complex) / dim)


def white_noise_mix(target: PureState, p: float) -> DensityMatrix:
    """p * I/2^N + (1-p) |target><target|, the white-noise admixture family."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"noise ratio p = {p!r} must lie in [0, 1]")
    dim = target.dimension
    rho = p * np.eye(dim, dtype=complex) / dim
    rho += (1.0 - p) * np.outer(target.amplitudes, target.amplitudes.conj())
    return DensityMatrix(target.n_qubits, rho)


def psixy_noise_mix(n: int, p: float, phi: float = 0.0) -> DensityMatrix:
    """p |psixy><psixy| + (1-p) |N/2,N><N/2,N|: coherent equatorial noise on
    the half-excited Dicke state.  Requires even n."""
    _check_qubit_count(n)
    if n % 2 != 0:
        raise DomainError(f"psixy_noise_mix requires an even qubit count, got n = {n}")
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"noise ratio p = {p!r} must lie in [0, 1]")
    sep = psixy_state(n, phi).amplitudes
    tgt = dicke_state(n, n // 2).amplitudes
    rho = p * np.outer(sep, sep.conj()) + (1.0 - p) * np.outer(tgt, tgt.conj())
    return DensityMatrix(n, rho)


# ---------------------------------------------------------------------------
# Schmidt analysis
# ---------------------------------------------------------------------------

def schmidt_spectrum(state: PureState, split: Bipartition) -> SchmidtSpectrum:
    """Squared singular values of the state reshaped along the bipartition,
    descending.  For Dicke states this matches ``dicke_schmidt_squared``."""
    if split.n_qubits != state.n_qubits:
        raise DomainError(
            f"split is over {split.n_qubits} qubits but the state has {state.n_qubits}"
        )
    n = state.n_qubits
    axes = [q - 1 for q in split.side_a] + [q - 1 for q in split.side_b]
    matrix = state.amplitudes.reshape([2] * n).transpose(axes)
    matrix = matrix.reshape(2 ** len(split.side_a), 2 ** len(split.side_b))
    singular = np.linalg.svd(matrix, compute_uv=False)
    squared = np.sort(singular ** 2)[::-1]
    squared = squared / squared.sum()  # remove last-digit drift; sum is 1 by unitarity
    squared = squared[squared > 1e-14]  # drop numerically-zero coefficients
    return SchmidtSpectrum(split, squared)


def dicke_schmidt_squared(n: int, m: int, n1: int) -> np.ndarray:
    """Closed-form squared Schmidt coefficients of |m,N> for a split with N1
    qubits on one side: C(N1,k) C(N-N1,m-k) / C(N,m) over valid k, descending."""
    if not 1 <= n1 <= n - 1:
        raise DomainError(f"split size n1 = {n1} must satisfy 1 <= n1 <= {n - 1}")
    if not 0 <= m <= n:
        raise DomainError(f"excitation count m = {m} must satisfy 0 <= m <= {n}")
    total = comb(n, m)
    k_lo = max(0, m - (n - n1))
    k_hi = min(n1, m)
    vals = [comb(n1, k) * comb(n - n1, m - k) / total for k in range(k_lo, k_hi + 1)]
    return np.sort(np.array(vals, dtype=float))[::-1]
