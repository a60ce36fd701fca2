"""Dense complex linear algebra for n-qubit states.

Conventions used throughout the package:

* qubit 1 is the most significant bit of the computational basis index,
  so for three qubits |100> sits at index 4 and |001> at index 1;
* all values are immutable after construction and every operation is a
  pure function, so they are safe to share between worker threads;
* matrices are dense numpy arrays.  ``MAX_QUBITS`` (default 10) caps the
  register size because a 2^n x 2^n complex matrix dominates memory well
  before anything else breaks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_QUBITS = 10

NORM_TOL = 1e-12
HERM_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10


class InvariantViolation(ValueError):
    """A state or matrix failed one of its physical validity checks."""


def _check_qubit_count(n) -> int:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"qubit count must be a positive integer, got {n!r}")
    if n > MAX_QUBITS:
        raise ValueError(
            f"n={n} exceeds MAX_QUBITS={MAX_QUBITS}; raise entclass.qstate.MAX_QUBITS "
            "if you really want dense matrices that large"
        )
    return int(n)


def _frozen(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=complex)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class PureState:
    """Normalized amplitude vector of an n-qubit pure state."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        n = _check_qubit_count(self.n)
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape != (2**n,):
            raise ValueError(
                f"expected {2**n} amplitudes for n={n}, got {amps.shape[0]}"
            )
        if not np.all(np.isfinite(amps.view(float))):
            raise InvariantViolation("amplitudes contain NaN or Inf")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > NORM_TOL:
            raise InvariantViolation(f"state norm {norm} deviates from 1 beyond {NORM_TOL}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "amplitudes", _frozen(amps))

    @classmethod
    def from_amplitudes(cls, amplitudes, normalize: bool = False) -> "PureState":
        """Build a state from a raw vector, inferring n; optionally normalize."""
        amps = np.asarray(amplitudes, dtype=complex).reshape(-1)
        n = int(round(np.log2(amps.shape[0])))
        if 2**n != amps.shape[0]:
            raise ValueError(f"amplitude count {amps.shape[0]} is not a power of two")
        if normalize:
            norm = np.linalg.norm(amps)
            if norm < 1e-300:
                raise ValueError("cannot normalize the zero vector")
            amps = amps / norm
        return cls(n, amps)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite matrix on n qubits."""

    n: int
    mat: np.ndarray

    def __post_init__(self):
        n = _check_qubit_count(self.n)
        m = np.asarray(self.mat, dtype=complex)
        d = 2**n
        if m.shape != (d, d):
            raise ValueError(f"expected a {d}x{d} matrix for n={n}, got {m.shape}")
        if not np.all(np.isfinite(m.view(float))):
            raise InvariantViolation("matrix contains NaN or Inf")
        if np.max(np.abs(m - m.conj().T)) > HERM_TOL:
            raise InvariantViolation(f"matrix is not Hermitian within {HERM_TOL}")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvariantViolation(f"trace {tr} deviates from 1 beyond {TRACE_TOL}")
        min_eig = float(np.linalg.eigvalsh(m)[0])
        if min_eig < -PSD_TOL:
            raise InvariantViolation(
                f"minimum eigenvalue {min_eig} below -{PSD_TOL}: not positive semidefinite"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mat", _frozen(m))


@dataclass(frozen=True)
class Bipartition:
    """A cut of qubits {1..n} into part A and its complement.

    The stored representation is canonical: part A always contains
    qubit 1, so equal cuts compare equal regardless of which side the
    caller listed.
    """

    n: int
    part_a: frozenset

    def __post_init__(self):
        n = _check_qubit_count(self.n)
        part = frozenset(int(q) for q in self.part_a)
        if not part or not all(1 <= q <= n for q in part):
            raise ValueError(f"part A must be a nonempty subset of 1..{n}, got {sorted(part)}")
        if len(part) == n:
            raise ValueError("part A must be a proper subset (its complement may not be empty)")
        if 1 not in part:
            part = frozenset(range(1, n + 1)) - part
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "part_a", part)

    @property
    def part_b(self) -> frozenset:
        return frozenset(range(1, self.n + 1)) - self.part_a


def basis_state(n: int, index: int) -> PureState:
    """Computational basis state |index> with qubit 1 as the top bit."""
    n = _check_qubit_count(n)
    if not 0 <= index < 2**n:
        raise ValueError(f"basis index {index} out of range for n={n}")
    amps = np.zeros(2**n, dtype=complex)
    amps[index] = 1.0
    return PureState(n, amps)


def tensor(states: list) -> PureState:
    """Kronecker product of pure states; qubit counts add up."""
    if not states:
        raise ValueError("tensor() needs at least one state")
    amps = states[0].amplitudes
    n = states[0].n
    for s in states[1:]:
        amps = np.kron(amps, s.amplitudes)
        n += s.n
    return PureState(n, amps)


def projector(state: PureState) -> DensityMatrix:
    """Rank-1 density matrix |psi><psi|."""
    v = state.amplitudes
    return DensityMatrix(state.n, np.outer(v, v.conj()))


def mix(components: list) -> DensityMatrix:
    """Convex combination of density matrices.

    ``components`` is a list of (weight, DensityMatrix) pairs; weights
    must be strictly positive and sum to 1 within 1e-12.
    """
    if not components:
        raise ValueError("mix() needs at least one component")
    weights = [float(w) for w, _ in components]
    mats = [rho for _, rho in components]
    if any(w <= 0.0 for w in weights):
        raise ValueError(f"mixture weights must be positive, got {weights}")
    total = sum(weights)
    if abs(total - 1.0) > TRACE_TOL:
        raise ValueError(f"mixture weights sum to {total}, not 1")
    n = mats[0].n
    if any(rho.n != n for rho in mats):
        raise ValueError("all mixture components must act on the same number of qubits")
    out = np.zeros_like(mats[0].mat)
    for w, rho in zip(weights, mats):
        out = out + w * rho.mat
    return DensityMatrix(n, out)


def matrix_element(rho: DensityMatrix, bra: PureState, ket: PureState) -> complex:
    """<bra| rho |ket>."""
    if bra.n != rho.n or ket.n != rho.n:
        raise ValueError("bra/ket dimension does not match the density matrix")
    return complex(bra.amplitudes.conj() @ rho.mat @ ket.amplitudes)


def partial_transpose(rho: DensityMatrix, cut: Bipartition) -> np.ndarray:
    """Transpose indices on the part-A qubits; returns a plain matrix.

    The result is Hermitian and trace preserving but in general not
    positive, which is exactly what the PPT test looks at.
    """
    if cut.n != rho.n:
        raise ValueError("bipartition qubit count does not match the density matrix")
    n = rho.n
    t = rho.mat.reshape((2,) * (2 * n))
    axes = list(range(2 * n))
    for q in cut.part_a:
        axes[q - 1], axes[n + q - 1] = axes[n + q - 1], axes[q - 1]
    return np.ascontiguousarray(t.transpose(axes).reshape(2**n, 2**n))


def hermitian_eigenvalues(m: np.ndarray, herm_tol: float = 1e-10) -> np.ndarray:
    """Ascending real eigenvalues of a Hermitian matrix."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if np.max(np.abs(m - m.conj().T)) > herm_tol:
        raise ValueError(f"matrix is not Hermitian within {herm_tol}")
    return np.linalg.eigvalsh(m)


def is_ppt(rho: DensityMatrix, cut: Bipartition, tol: float = 1e-9) -> bool:
    """True iff the partial transpose across ``cut`` has no eigenvalue below -tol."""
    eigs = hermitian_eigenvalues(partial_transpose(rho, cut))
    return bool(eigs[0] >= -tol)


def permute_qubits(obj, perm):
    """Relabel qubits: output qubit q holds input qubit perm[q-1].

    Works on PureState and DensityMatrix; ``perm`` is a sequence of the
    labels 1..n in the desired source order.
    """
    n = obj.n
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"perm must rearrange 1..{n}, got {perm}")
    axes = [p - 1 for p in perm]
    if isinstance(obj, PureState):
        v = obj.amplitudes.reshape((2,) * n).transpose(axes).reshape(-1)
        return PureState(n, v)
    if isinstance(obj, DensityMatrix):
        full = axes + [a + n for a in axes]
        m = obj.mat.reshape((2,) * (2 * n)).transpose(full).reshape(2**n, 2**n)
        return DensityMatrix(n, m)
    raise TypeError(f"cannot permute qubits of {type(obj).__name__}")
