"""Local-unitary search for the basis that maximizes a witness value.

The witnesses are basis-dependent necessary conditions, so an unknown
state should be rotated by U = U_1 (x) ... (x) U_n before drawing
conclusions.  Each single-qubit unitary uses three angles,

    U(theta, phi1, phi2) = [[cos(theta) e^{i phi1},  sin(theta) e^{i phi2}],
                            [-sin(theta) e^{-i phi2}, cos(theta) e^{-i phi1}]],

a chart of SU(2) that reaches every local rotation of a density matrix
(the dropped global phase cancels in U rho U^dagger).  The search is
plain Nelder-Mead from several starting points: the identity first,
then seeded random draws, each restart owning the RNG stream derived
from (seed, restart index) so results do not depend on scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np
from scipy.optimize import minimize

from . import criteria
from .qstate import DensityMatrix


@dataclass(frozen=True)
class LocalUnitaryParams:
    """Per-qubit angle triples (theta, phi1, phi2), shape (n, 3)."""

    angles: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.angles, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 3 or arr.shape[0] < 1:
            raise ValueError(f"angles must have shape (n, 3), got {arr.shape}")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "angles", arr)

    @property
    def n(self) -> int:
        return self.angles.shape[0]

    @classmethod
    def identity(cls, n: int) -> "LocalUnitaryParams":
        return cls(np.zeros((n, 3)))

    def unitaries(self) -> list:
        """The n single-qubit matrices; each is unitary to 1e-12."""
        out = []
        for theta, phi1, phi2 in self.angles:
            c, s = np.cos(theta), np.sin(theta)
            u = np.array(
                [
                    [c * np.exp(1j * phi1), s * np.exp(1j * phi2)],
                    [-s * np.exp(-1j * phi2), c * np.exp(-1j * phi1)],
                ]
            )
            out.append(u)
        return out

    def full_unitary(self) -> np.ndarray:
        return reduce(np.kron, self.unitaries())

    def wrapped(self) -> "LocalUnitaryParams":
        """Canonical angles: theta reflected into [0, pi/2], phis mod 2pi.

        Each reflection shifts the matching phase by pi, so the wrapped
        parameters describe the same unitary.
        """
        arr = np.array(self.angles, dtype=float)
        arr[:, 0] = np.mod(arr[:, 0], 2 * np.pi)
        # theta in [pi, 2pi): mirror to (0, pi], sin flips -> phi2 += pi
        high = arr[:, 0] >= np.pi
        arr[high, 0] = 2 * np.pi - arr[high, 0]
        arr[high, 2] += np.pi
        # theta in (pi/2, pi]: fold to [0, pi/2), cos flips -> phi1 += pi
        upper = arr[:, 0] > np.pi / 2
        arr[upper, 0] = np.pi - arr[upper, 0]
        arr[upper, 1] += np.pi
        arr[:, 1] = np.mod(arr[:, 1], 2 * np.pi)
        arr[:, 2] = np.mod(arr[:, 2], 2 * np.pi)
        return LocalUnitaryParams(arr)


@dataclass(frozen=True)
class OptimizationResult:
    best_lhs: float
    best_params: LocalUnitaryParams
    restarts_used: int
    evaluations_used: int
    converged: bool


def apply_local_unitary(rho: DensityMatrix, params: LocalUnitaryParams) -> DensityMatrix:
    """U rho U^dagger; trace and spectrum are untouched."""
    if params.n != rho.n:
        raise ValueError(f"got angles for {params.n} qubits but the state has {rho.n}")
    u = params.full_unitary()
    return DensityMatrix(rho.n, u @ rho.mat @ u.conj().T)


def _raw_apply(mat: np.ndarray, angles: np.ndarray) -> np.ndarray:
    u = LocalUnitaryParams(angles).full_unitary()
    return u @ mat @ u.conj().T


def maximize_violation(
    rho: DensityMatrix,
    which: str,
    restarts: int = 20,
    max_evals: int = 2000,
    seed=0,
) -> OptimizationResult:
    """Maximize the lhs of one inequality over local unitaries.

    ``restarts`` counts starting points (the identity is always the
    first), ``max_evals`` caps objective evaluations per restart.  The
    best value found is returned together with the canonicalized angles;
    it is never below the value at the identity.
    """
    lhs_fn = criteria.lhs_function(which)
    if restarts < 1 or max_evals < 1:
        raise ValueError("restarts and max_evals must be positive")
    n = rho.n
    counter = {"nfev": 0}

    def objective(flat: np.ndarray) -> float:
        counter["nfev"] += 1
        rotated = _raw_apply(rho.mat, flat.reshape(n, 3))
        return -lhs_fn(rotated, n)

    best_val = -np.inf
    best_angles = np.zeros((n, 3))
    all_converged = True
    for r in range(restarts):
        if r == 0:
            x0 = np.zeros(3 * n)
        else:
            if isinstance(seed, (list, tuple)):
                entropy = [int(s) for s in seed] + [r]
            else:
                entropy = [int(seed), r]
            rng = np.random.default_rng(entropy)
            theta = rng.uniform(0.0, np.pi / 2, size=n)
            phis = rng.uniform(0.0, 2 * np.pi, size=(n, 2))
            x0 = np.column_stack([theta, phis]).reshape(-1)
        start_val = -objective(x0)
        if start_val > best_val:
            best_val = start_val
            best_angles = x0.reshape(n, 3)
        res = minimize(
            objective,
            x0,
            method="Nelder-Mead",
            options={
                "maxfev": max_evals,
                "xatol": 1e-7,
                "fatol": 1e-10,
                "adaptive": True,
            },
        )
        all_converged = all_converged and bool(res.success)
        if -res.fun > best_val:
            best_val = float(-res.fun)
            best_angles = res.x.reshape(n, 3)
    params = LocalUnitaryParams(best_angles).wrapped()
    # Re-evaluate at the canonical angles so the report is self-consistent.
    final = lhs_fn(_raw_apply(rho.mat, params.angles), n)
    if final < best_val - 1e-12:
        # wrapping is exact up to rounding; keep the better number
        final = best_val
    return OptimizationResult(
        best_lhs=float(final),
        best_params=params,
        restarts_used=restarts,
        evaluations_used=counter["nfev"],
        converged=all_converged,
    )
