"""Witness evaluators that separate the entanglement families.

Each evaluator computes the left-hand side of one inequality built from
computational-basis matrix elements of a density matrix.  Every
inequality is satisfied (lhs <= 0) by all biseparable states and by all
states of the family it is named after, so a positive value certifies
that the state is outside both sets.  The criteria are necessary
conditions only: a nonpositive value proves nothing, and their yield
depends on the basis, which is why the optimizer module exists.

Index conventions follow qstate: qubit 1 is the most significant bit,
|w_i> has the single 1 at qubit i, |d_ij> has 1s at qubits i and j, and
a *bar* label means the bitwise complement.  All pair sums run over
ordered pairs i != j.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .qstate import DensityMatrix, PureState, basis_state

INEQUALITY_IDS = ("In", "I2", "InMinus1", "GME")

#: Conclusion drawn from a violation of each inequality.
_CONCLUSIONS = {
    "In": "not biseparable and not in the single-flip (W-type) family",
    "I2": "not biseparable and not in the double-branch (GHZ-type) family",
    "InMinus1": "not biseparable and not in the two-flip (Dicke-type) family",
    "GME": "genuinely multipartite entangled",
}

_IMAG_TOL = 1e-12
_DIAG_FLOOR = -1e-10


@dataclass(frozen=True)
class InequalityCoefficients:
    """The (alpha, beta, gamma) weights of the diagonal penalties."""

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        if min(self.alpha, self.beta, self.gamma) < 0:
            raise ValueError("coefficients must be nonnegative")


def i2_coefficients(n: int, mode: str = "corollary") -> InequalityCoefficients:
    """Coefficient triple for the double-branch inequality.

    ``corollary`` is the default (n-2, n(n-1)/2, 1) triple, valid for
    biseparable states as well as the family.  ``tight`` is the smaller
    even-n triple ((n-2)/2, n(n-2)/4, (n-2)/(4(n-1))) that is only known
    to bound the family itself, NOT biseparable states; use it for
    family-membership probing only.
    """
    if mode == "corollary":
        return InequalityCoefficients(n - 2, n * (n - 1) / 2, 1.0)
    if mode == "tight":
        return InequalityCoefficients((n - 2) / 2, n * (n - 2) / 4, (n - 2) / (4 * (n - 1)))
    raise ValueError(f"unknown coefficient mode {mode!r}")


def ntuple_alpha(n: int) -> float:
    """Diagonal weight of the single-flip inequality: 3/2, 1, then 1/2."""
    if n == 3:
        return 1.5
    if n == 4:
        return 1.0
    return 0.5


@dataclass(frozen=True)
class InequalityReport:
    inequality: str
    n: int
    lhs: float
    tolerance: float
    violated: bool
    conclusion: str

    def to_dict(self) -> dict:
        return {
            "inequality": self.inequality,
            "n": self.n,
            "lhs": self.lhs,
            "tolerance": self.tolerance,
            "violated": self.violated,
            "conclusion": self.conclusion,
        }


class BasisLabels:
    """Precomputed indices of the labeled computational basis states."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("need at least one qubit")
        self.n = n
        self.mask = (1 << n) - 1
        self.zeros_index = 0
        self.ones_index = self.mask
        self.w = np.array([1 << (n - i) for i in range(1, n + 1)])
        self.wbar = self.mask ^ self.w
        pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        self.pairs = pairs
        self.d = np.array([(1 << (n - i)) | (1 << (n - j)) for i, j in pairs])
        self.dbar = self.mask ^ self.d

    def w_index(self, i: int) -> int:
        return int(self.w[i - 1])

    def d_index(self, i: int, j: int) -> int:
        if i == j:
            raise ValueError("d_ij needs two distinct qubits")
        i, j = min(i, j), max(i, j)
        return int(self.d[self.pairs.index((i, j))])

    def w_vector(self, i: int) -> PureState:
        return basis_state(self.n, self.w_index(i))

    def wbar_vector(self, i: int) -> PureState:
        return basis_state(self.n, self.mask ^ self.w_index(i))

    def d_vector(self, i: int, j: int) -> PureState:
        return basis_state(self.n, self.d_index(i, j))

    def dbar_vector(self, i: int, j: int) -> PureState:
        return basis_state(self.n, self.mask ^ self.d_index(i, j))


@lru_cache(maxsize=None)
def _labels(n: int) -> BasisLabels:
    return BasisLabels(n)


def _check_n(n: int) -> None:
    if n < 3:
        raise ValueError("the inequalities are defined for 3 or more qubits")


def _real(value: complex, what: str) -> float:
    if abs(value.imag) > _IMAG_TOL:
        raise ValueError(f"{what} has imaginary residue {value.imag}, input is not Hermitian enough")
    return float(value.real)


def _offdiag_sum(sub: np.ndarray, what: str) -> float:
    """Sum of Re <a_i|rho|a_j> over ordered pairs i != j of a gathered block."""
    return _real(complex(sub.sum() - np.trace(sub)), what)


def in_lhs(mat: np.ndarray, n: int) -> float:
    """Raw lhs of the single-flip inequality on a bare matrix.

    lhs = Re <0..0|rho|1..1> - alpha (1 - <0..0|rho|0..0> - <1..1|rho|1..1>)
    with alpha from ``ntuple_alpha``.
    """
    _check_n(n)
    lab = _labels(n)
    off = float(mat[lab.zeros_index, lab.ones_index].real)
    deficit = 1.0 - float(mat[lab.zeros_index, lab.zeros_index].real) - float(
        mat[lab.ones_index, lab.ones_index].real
    )
    return off - ntuple_alpha(n) * deficit


def _i2_terms(mat: np.ndarray, n: int):
    lab = _labels(n)
    w_block = mat[np.ix_(lab.w, lab.w)]
    wbar_block = mat[np.ix_(lab.wbar, lab.wbar)]
    off_w = _offdiag_sum(w_block, "single-excitation coherence sum")
    off_wbar = _offdiag_sum(wbar_block, "complemented single-excitation coherence sum")
    diag_w = float(np.trace(w_block).real)
    diag_wbar = float(np.trace(wbar_block).real)
    diag_d = 2.0 * float(mat[lab.d, lab.d].real.sum())
    diag_dbar = 2.0 * float(mat[lab.dbar, lab.dbar].real.sum())
    corners = float(mat[0, 0].real) + float(mat[lab.ones_index, lab.ones_index].real)
    return off_w, off_wbar, diag_w, diag_wbar, diag_d, diag_dbar, corners


def i2_lhs(mat: np.ndarray, n: int, mode: str = "corollary") -> float:
    """Raw lhs of the double-branch inequality on a bare matrix.

    lhs = sum_{i!=j} Re[<w_i|rho|w_j> + (-1)^(n+1) <wbar_i|rho|wbar_j>]
          - alpha sum_i (<w_i|rho|w_i> + <wbar_i|rho|wbar_i>)
          - gamma sum_{i!=j} (<d_ij|rho|d_ij> + <dbar_ij|rho|dbar_ij>)
          - beta (<0..0|rho|0..0> + <1..1|rho|1..1>)

    For n = 3 the complemented pair patterns dbar_ij coincide with the
    single-excitation patterns w_k, and keeping their penalty makes the
    whole expression nonpositive for every state (it collapses to a sum
    of two-qubit correlators bounded by the subtracted constant), i.e. a
    witness that can never fire.  The aliased dbar penalty is therefore
    dropped at n = 3, which restores separating power while remaining
    nonpositive on biseparable states and on the family.
    """
    _check_n(n)
    c = i2_coefficients(n, mode)
    off_w, off_wbar, diag_w, diag_wbar, diag_d, diag_dbar, corners = _i2_terms(mat, n)
    sign = 1.0 if n % 2 == 1 else -1.0
    if n == 3:
        diag_dbar = 0.0
    return (
        off_w
        + sign * off_wbar
        - c.alpha * (diag_w + diag_wbar)
        - c.gamma * (diag_d + diag_dbar)
        - c.beta * corners
    )


def in_minus1_lhs(mat: np.ndarray, n: int) -> float:
    """Raw lhs of the two-flip inequality on a bare matrix.

    lhs = sum_{i!=j} Re <w_i|rho|w_j> - (n-2) sum_i <w_i|rho|w_i>
          - (n-2) sum_{i!=j} <d_ij|rho|d_ij> - n(n-1)/2 <0..0|rho|0..0>

    Bounds biseparable states at every n and the two-flip family for
    n >= 4.  At n = 3 the two-flip family degenerates into the
    single-flip (W) family, which this witness is designed to detect,
    so family closure necessarily fails there (the W state itself gives
    lhs = 1); only the biseparable bound survives at n = 3.
    """
    _check_n(n)
    lab = _labels(n)
    w_block = mat[np.ix_(lab.w, lab.w)]
    off_w = _offdiag_sum(w_block, "single-excitation coherence sum")
    diag_w = float(np.trace(w_block).real)
    diag_d = 2.0 * float(mat[lab.d, lab.d].real.sum())
    corner0 = float(mat[0, 0].real)
    return off_w - (n - 2) * diag_w - (n - 2) * diag_d - n * (n - 1) / 2 * corner0


def gme_lhs(mat: np.ndarray, n: int) -> float:
    """Raw lhs of the biseparability witness on a bare matrix.

    lhs = sum_{i!=j} Re <w_i|rho|w_j>
          - sum_{i!=j} sqrt(<0..0|rho|0..0> <d_ij|rho|d_ij>)
          - (n-2) sum_i <w_i|rho|w_i>

    Diagonal entries a hair below zero (rounding noise) are clamped to 0
    before the square root; anything below -1e-10 is rejected as an
    invalid state.
    """
    _check_n(n)
    lab = _labels(n)
    w_block = mat[np.ix_(lab.w, lab.w)]
    off_w = _offdiag_sum(w_block, "single-excitation coherence sum")
    diag_w = float(np.trace(w_block).real)
    corner0 = float(mat[0, 0].real)
    d_diag = mat[lab.d, lab.d].real
    lowest = min(float(d_diag.min()), corner0)
    if lowest < _DIAG_FLOOR:
        raise ValueError(f"diagonal element {lowest} below {_DIAG_FLOOR}: invalid density matrix")
    corner0 = max(corner0, 0.0)
    roots = 2.0 * float(np.sqrt(corner0 * np.clip(d_diag, 0.0, None)).sum())
    return off_w - roots - (n - 2) * diag_w


_LHS_FUNCTIONS = {
    "In": in_lhs,
    "I2": i2_lhs,
    "InMinus1": in_minus1_lhs,
    "GME": gme_lhs,
}


def lhs_function(which: str):
    """The raw ``f(mat, n) -> float`` evaluator for one inequality id."""
    try:
        return _LHS_FUNCTIONS[which]
    except KeyError:
        raise ValueError(
            f"unknown inequality id {which!r}, expected one of {INEQUALITY_IDS}"
        ) from None


def _report(which: str, n: int, lhs: float, tolerance: float) -> InequalityReport:
    return InequalityReport(
        inequality=which,
        n=n,
        lhs=lhs,
        tolerance=tolerance,
        violated=bool(lhs > tolerance),
        conclusion=_CONCLUSIONS[which],
    )


def eval_in(rho: DensityMatrix, tolerance: float = 1e-9) -> InequalityReport:
    """Single-flip family witness; see ``in_lhs`` for the expression."""
    return _report("In", rho.n, in_lhs(rho.mat, rho.n), tolerance)


def eval_i2(
    rho: DensityMatrix, tolerance: float = 1e-9, mode: str = "corollary"
) -> InequalityReport:
    """Double-branch family witness; see ``i2_lhs`` for the expression."""
    return _report("I2", rho.n, i2_lhs(rho.mat, rho.n, mode), tolerance)


def eval_in_minus1(rho: DensityMatrix, tolerance: float = 1e-9) -> InequalityReport:
    """Two-flip (Dicke-type) family witness; see ``in_minus1_lhs``."""
    return _report("InMinus1", rho.n, in_minus1_lhs(rho.mat, rho.n), tolerance)


def eval_gme(rho: DensityMatrix, tolerance: float = 1e-9) -> InequalityReport:
    """Biseparability witness; violation certifies genuine multipartite
    entanglement.  See ``gme_lhs``."""
    return _report("GME", rho.n, gme_lhs(rho.mat, rho.n), tolerance)


def evaluate(rho: DensityMatrix, which: str, tolerance: float = 1e-9) -> InequalityReport:
    """Evaluate one inequality by id ("In", "I2", "InMinus1" or "GME")."""
    return _report(which, rho.n, lhs_function(which)(rho.mat, rho.n), tolerance)


def evaluate_all(rho: DensityMatrix, tolerance: float = 1e-9) -> list:
    """All four reports, in the fixed order In, I2, InMinus1, GME."""
    return [evaluate(rho, which, tolerance) for which in INEQUALITY_IDS]
