"""Rewrite matrix elements and witnesses as local Pauli expectation values.

A term is a string over the alphabet ``1xyz`` (one letter per qubit,
``1`` meaning identity) with a real coefficient; evaluating an expansion
means summing ``coeff * Tr(rho sigma_string)``.  Expansions carry the
exact dyadic normalization that falls out of |b><k| = sum c sigma / 2
per qubit, so for example Re <000|rho|111> becomes
(1/8)(xxx - yyx - yxy - xyy).

Constant offsets ride on the all-identity string.  A measurement
setting is a distinct non-identity string; the coarse-grained counting
mode drops strings that are marginals of another setting.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

import numpy as np

from . import criteria
from .qstate import DensityMatrix

LETTERS = "1xyz"

_PRUNE_TOL = 1e-14
_IMAG_TOL = 1e-14

_SIGMA = {
    "1": np.eye(2, dtype=complex),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}

# Single-qubit |ket><bra| over {1,x,y,z}/2, keyed by (bra_bit, ket_bit).
_KETBRA = {
    ("0", "0"): {"1": 0.5, "z": 0.5},
    ("1", "1"): {"1": 0.5, "z": -0.5},
    ("0", "1"): {"x": 0.5, "y": 0.5j},
    ("1", "0"): {"x": 0.5, "y": -0.5j},
}


@dataclass(frozen=True)
class PauliExpansion:
    """Real linear combination of Pauli strings on n qubits."""

    n: int
    terms: dict

    def __post_init__(self):
        clean = {}
        for string, coeff in self.terms.items():
            if len(string) != self.n or any(ch not in LETTERS for ch in string):
                raise ValueError(f"bad Pauli string {string!r} for n={self.n}")
            coeff = complex(coeff)
            if abs(coeff.imag) > _IMAG_TOL:
                raise ValueError(f"non-real coefficient {coeff} on {string!r}")
            if abs(coeff.real) > _PRUNE_TOL:
                clean[string] = float(coeff.real)
        object.__setattr__(self, "terms", clean)

    def __len__(self) -> int:
        return len(self.terms)

    def scaled(self, factor: float) -> "PauliExpansion":
        return PauliExpansion(self.n, {s: factor * c for s, c in self.terms.items()})


@dataclass(frozen=True)
class SettingSchedule:
    """The measurement settings an expansion requires."""

    settings: tuple
    mode: str

    def __len__(self) -> int:
        return len(self.settings)


def _add_terms(acc: dict, terms: dict, factor: float = 1.0) -> None:
    for string, coeff in terms.items():
        acc[string] = acc.get(string, 0.0) + factor * coeff


def _expand_ketbra(bra: str, ket: str) -> dict:
    """Complex-coefficient expansion of |ket><bra| as a string->coeff map."""
    terms = {"": 1.0 + 0j}
    for b, k in zip(bra, ket):
        factor = _KETBRA[(b, k)]
        terms = {
            s + letter: c * fc
            for s, c in terms.items()
            for letter, fc in factor.items()
        }
    return terms


def _check_pattern(n: int, pattern: str) -> str:
    if len(pattern) != n or any(ch not in "01" for ch in pattern):
        raise ValueError(f"bit pattern {pattern!r} does not have length {n} over 0/1")
    return pattern


def _index_to_pattern(n: int, index: int) -> str:
    return format(index, f"0{n}b")


def expand_matrix_element(n: int, bra: str, ket: str) -> PauliExpansion:
    """Expansion of Re <bra|rho|ket> (or of the diagonal <bra|rho|bra>).

    ``bra`` and ``ket`` are bit patterns like "010".  Coefficients are
    exact dyadic rationals times 2^-n.
    """
    bra = _check_pattern(n, bra)
    ket = _check_pattern(n, ket)
    if bra == ket:
        raw = _expand_ketbra(bra, ket)
    else:
        raw = {}
        _add_terms(raw, _expand_ketbra(bra, ket), 0.5)
        _add_terms(raw, _expand_ketbra(ket, bra), 0.5)
    return PauliExpansion(n, raw)


def _diag(n: int, index: int) -> dict:
    return expand_matrix_element(n, _index_to_pattern(n, index), _index_to_pattern(n, index)).terms


def _re_offdiag(n: int, i: int, j: int) -> dict:
    return expand_matrix_element(n, _index_to_pattern(n, i), _index_to_pattern(n, j)).terms


def expand_inequality(which: str, n: int, mode: str = "corollary") -> PauliExpansion:
    """Full witness left-hand side as one real Pauli combination.

    Supported ids: "In", "I2", "InMinus1".  The GME witness contains
    square roots of matrix elements and has no linear expansion.
    Evaluating the result with ``evaluate_expansion`` reproduces the
    corresponding criteria evaluator.
    """
    if which == "GME":
        raise ValueError("the GME witness is not linear in rho and cannot be expanded")
    if which not in ("In", "I2", "InMinus1"):
        raise ValueError(f"unknown inequality id {which!r}")
    if n < 3:
        raise ValueError("the inequalities are defined for 3 or more qubits")
    lab = criteria.BasisLabels(n)
    acc: dict = {}
    identity = "1" * n

    if which == "In":
        alpha = criteria.ntuple_alpha(n)
        _add_terms(acc, _re_offdiag(n, lab.zeros_index, lab.ones_index))
        acc[identity] = acc.get(identity, 0.0) - alpha
        _add_terms(acc, _diag(n, lab.zeros_index), alpha)
        _add_terms(acc, _diag(n, lab.ones_index), alpha)
        return PauliExpansion(n, acc)

    if which == "InMinus1":
        for a in range(n):
            for b in range(n):
                if a != b:
                    _add_terms(acc, _re_offdiag(n, int(lab.w[a]), int(lab.w[b])))
        for a in range(n):
            _add_terms(acc, _diag(n, int(lab.w[a])), -(n - 2))
        for idx in lab.d:
            _add_terms(acc, _diag(n, int(idx)), -2.0 * (n - 2))
        _add_terms(acc, _diag(n, lab.zeros_index), -n * (n - 1) / 2)
        return PauliExpansion(n, acc)

    c = criteria.i2_coefficients(n, mode)
    sign = 1.0 if n % 2 == 1 else -1.0
    for a in range(n):
        for b in range(n):
            if a != b:
                _add_terms(acc, _re_offdiag(n, int(lab.w[a]), int(lab.w[b])))
                _add_terms(acc, _re_offdiag(n, int(lab.wbar[a]), int(lab.wbar[b])), sign)
    for a in range(n):
        _add_terms(acc, _diag(n, int(lab.w[a])), -c.alpha)
        _add_terms(acc, _diag(n, int(lab.wbar[a])), -c.alpha)
    for idx in lab.d:
        _add_terms(acc, _diag(n, int(idx)), -2.0 * c.gamma)
    if n != 3:
        # At n = 3 the complemented pair patterns alias the single-excitation
        # ones and their penalty is dropped; see criteria.eval_i2.
        for idx in lab.dbar:
            _add_terms(acc, _diag(n, int(idx)), -2.0 * c.gamma)
    _add_terms(acc, _diag(n, lab.zeros_index), -c.beta)
    _add_terms(acc, _diag(n, lab.ones_index), -c.beta)
    return PauliExpansion(n, acc)


def three_qubit_tuple_witness() -> PauliExpansion:
    """Fixed 12-setting three-qubit witness built from symmetric two-qubit
    x/y correlators plus z marginals.

    Kept as a reference measurement schedule for budgeting experiments.
    It is not a scalar multiple of any of the exact expansions (see the
    test suite), so use ``expand_inequality`` when numbers must agree
    with the evaluators.
    """
    terms = {
        "1xx": 1.0, "x1x": 1.0, "xx1": 1.0,
        "1yy": 1.0, "y1y": 1.0, "yy1": 1.0,
        "zz1": 9 / 32, "z1z": 9 / 32, "1zz": 9 / 32,
        "z11": 3 / 16, "1z1": 3 / 16, "11z": 3 / 16,
        "111": -(9 / 32) * 3 - (3 / 16),
    }
    return PauliExpansion(3, terms)


def count_settings(expansion: PauliExpansion, mode: str = "verbatim") -> SettingSchedule:
    """Measurement settings needed for an expansion.

    verbatim: one setting per distinct non-identity string.
    coarse-grained: a string is dropped when some other setting matches
    it on every non-identity position, because identity positions come
    for free as marginals.
    """
    if mode not in ("verbatim", "coarse"):
        raise ValueError(f"unknown counting mode {mode!r}")
    strings = sorted(s for s in expansion.terms if set(s) != {"1"})
    if mode == "verbatim":
        return SettingSchedule(tuple(strings), mode)
    kept = []
    for s in strings:
        subsumed = any(
            t != s and all(t[i] == ch for i, ch in enumerate(s) if ch != "1")
            for t in strings
        )
        if not subsumed:
            kept.append(s)
    return SettingSchedule(tuple(kept), mode)


def tomography_setting_count(n: int) -> int:
    """Settings for full state tomography: all 4^n - 1 non-identity strings
    (63 for three qubits)."""
    if n < 1:
        raise ValueError("need at least one qubit")
    return 4**n - 1


@lru_cache(maxsize=None)
def string_matrix(string: str) -> np.ndarray:
    """Dense matrix of a Pauli string (cached)."""
    if any(ch not in LETTERS for ch in string) or not string:
        raise ValueError(f"bad Pauli string {string!r}")
    out = reduce(np.kron, (_SIGMA[ch] for ch in string))
    out.setflags(write=False)
    return out


def evaluate_expansion(expansion: PauliExpansion, rho: DensityMatrix) -> float:
    """sum coeff * Tr(rho sigma_string)."""
    if rho.n != expansion.n:
        raise ValueError(
            f"expansion is for n={expansion.n} but the state has n={rho.n}"
        )
    total = 0.0
    for string, coeff in expansion.terms.items():
        sigma = string_matrix(string)
        total += coeff * float(np.real(np.sum(rho.mat * sigma.T)))
    return total


def format_expansion(expansion: PauliExpansion) -> str:
    """One term per line, ``<coeff> <string>``, identity first then sorted."""
    identity = "1" * expansion.n
    lines = []
    if identity in expansion.terms:
        lines.append(f"{expansion.terms[identity]!r} {identity}")
    for string in sorted(expansion.terms):
        if string != identity:
            lines.append(f"{expansion.terms[string]!r} {string}")
    return "\n".join(lines)


def parse_expansion(text: str) -> PauliExpansion:
    """Inverse of ``format_expansion``."""
    terms = {}
    n = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            coeff_text, string = line.split()
        except ValueError:
            raise ValueError(f"bad expansion line {line!r}") from None
        if n is None:
            n = len(string)
        terms[string] = terms.get(string, 0.0) + float(coeff_text)
    if n is None:
        raise ValueError("empty expansion text")
    return PauliExpansion(n, terms)
