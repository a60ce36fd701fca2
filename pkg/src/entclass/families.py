"""Generators for the three multiqubit entanglement families.

The families are parametrized by a local basis choice per qubit plus
complex coefficients:

* double states: two orthogonal product branches (the GHZ pattern),
* n-tuple states: one basis flip on each qubit in superposition (the W
  pattern),
* (n-1)-tuple states: the equal superposition of all two-flip products
  (the two-excitation Dicke pattern).

Also here: reproducible samplers for family mixtures and for biseparable
states, and the four-qubit noise family scanned by the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .qstate import (
    DensityMatrix,
    PureState,
    mix,
    permute_qubits,
    projector,
    tensor,
    _check_qubit_count,
)

CLASS_DOUBLE = "double"
CLASS_NTUPLE = "ntuple"
CLASS_DICKE2 = "dicke2"
CLASS_TAGS = (CLASS_DOUBLE, CLASS_NTUPLE, CLASS_DICKE2)

_MIN_LAMBDA = 1e-12


@dataclass(frozen=True)
class LocalBasis:
    """Per-qubit orthonormal pairs |x_i> = a_i|0> + abar_i|1>.

    The orthogonal companion is |xbar_i> = -conj(abar_i)|0> + conj(a_i)|1>,
    chosen so that a_i = 1 gives exactly |x_i> = |0> and |xbar_i> = |1>.
    """

    a: np.ndarray
    abar: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=complex).reshape(-1)
        abar = np.asarray(self.abar, dtype=complex).reshape(-1)
        if a.shape != abar.shape or a.size < 1:
            raise ValueError("a and abar must be equal-length nonempty vectors")
        norms = np.abs(a) ** 2 + np.abs(abar) ** 2
        if np.max(np.abs(norms - 1.0)) > 1e-12:
            raise ValueError("each (a_i, abar_i) pair must satisfy |a|^2 + |abar|^2 = 1")
        a.setflags(write=False)
        abar.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "abar", abar)

    @property
    def n(self) -> int:
        return self.a.size

    def ket(self, i: int) -> np.ndarray:
        """|x_i> for qubit i (1-based)."""
        return np.array([self.a[i - 1], self.abar[i - 1]])

    def ket_orth(self, i: int) -> np.ndarray:
        """|xbar_i>, orthonormal to |x_i| by construction."""
        return np.array([-np.conj(self.abar[i - 1]), np.conj(self.a[i - 1])])

    @classmethod
    def computational(cls, n: int) -> "LocalBasis":
        n = _check_qubit_count(n)
        return cls(np.ones(n), np.zeros(n))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "LocalBasis":
        """Uniform basis choice: each (a_i, abar_i) Haar on the unit sphere of C^2."""
        n = _check_qubit_count(n)
        z = rng.standard_normal((n, 4))
        v = z[:, 0] + 1j * z[:, 1]
        w = z[:, 2] + 1j * z[:, 3]
        norm = np.sqrt(np.abs(v) ** 2 + np.abs(w) ** 2)
        while np.any(norm < 1e-12):
            bad = norm < 1e-12
            z = rng.standard_normal((int(bad.sum()), 4))
            v[bad] = z[:, 0] + 1j * z[:, 1]
            w[bad] = z[:, 2] + 1j * z[:, 3]
            norm = np.sqrt(np.abs(v) ** 2 + np.abs(w) ** 2)
        return cls(v / norm, w / norm)


@dataclass(frozen=True)
class ClassStateSpec:
    """Which family member to build: tag, basis and coefficients."""

    tag: str
    n: int
    basis: LocalBasis
    lambdas: tuple = None

    def __post_init__(self):
        if self.tag not in CLASS_TAGS:
            raise ValueError(f"unknown class tag {self.tag!r}, expected one of {CLASS_TAGS}")
        n = _check_qubit_count(self.n)
        if self.basis.n != n:
            raise ValueError("basis size does not match qubit count")
        lams = self.lambdas
        if self.tag == CLASS_DICKE2:
            if lams is not None:
                raise ValueError("the two-excitation family has fixed coefficients")
        else:
            want = 2 if self.tag == CLASS_DOUBLE else n
            lams = tuple(complex(x) for x in (lams if lams is not None else ()))
            if len(lams) != want:
                raise ValueError(f"{self.tag} needs exactly {want} coefficients, got {len(lams)}")
            if any(abs(x) <= _MIN_LAMBDA for x in lams):
                raise ValueError("all coefficients must be nonzero")
            total = sum(abs(x) ** 2 for x in lams)
            if abs(total - 1.0) > 1e-12:
                raise ValueError(f"coefficient norms must sum to 1, got {total}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "lambdas", lams)


def _product_vector(kets) -> np.ndarray:
    return reduce(np.kron, kets)


def make_double(spec: ClassStateSpec) -> PureState:
    """lambda_1 (x) |x_i> + lambda_2 (x) |xbar_i>, normalized automatically
    because the two product branches are orthogonal."""
    if spec.tag != CLASS_DOUBLE:
        raise ValueError(f"make_double needs a {CLASS_DOUBLE!r} spec, got {spec.tag!r}")
    b = spec.basis
    n = spec.n
    branch_x = _product_vector([b.ket(i) for i in range(1, n + 1)])
    branch_y = _product_vector([b.ket_orth(i) for i in range(1, n + 1)])
    return PureState(n, spec.lambdas[0] * branch_x + spec.lambdas[1] * branch_y)


def make_ntuple(spec: ClassStateSpec) -> PureState:
    """Sum of single basis flips: sum_i lambda_i |x_1 .. xbar_i .. x_n>."""
    if spec.tag != CLASS_NTUPLE:
        raise ValueError(f"make_ntuple needs a {CLASS_NTUPLE!r} spec, got {spec.tag!r}")
    b = spec.basis
    n = spec.n
    amps = np.zeros(2**n, dtype=complex)
    for i in range(1, n + 1):
        kets = [b.ket_orth(k) if k == i else b.ket(k) for k in range(1, n + 1)]
        amps = amps + spec.lambdas[i - 1] * _product_vector(kets)
    return PureState(n, amps)


def make_dicke2(n: int, basis: LocalBasis) -> PureState:
    """Equal superposition of all n(n-1)/2 double-flip products.

    Equivalently, the per-qubit basis rotation applied to the fixed
    two-excitation symmetric state.  Note the n = 3 degeneracy: two
    flips out of three are one flip of the swapped basis, so the family
    is then the local-unitary orbit of the single-flip (W) family and
    its own witness does not bound it (see eval_in_minus1).
    """
    n = _check_qubit_count(n)
    if n < 3:
        raise ValueError("the two-excitation family needs at least 3 qubits")
    if basis.n != n:
        raise ValueError("basis size does not match qubit count")
    coeff = np.sqrt(2.0 / (n * (n - 1)))
    amps = np.zeros(2**n, dtype=complex)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            kets = [
                basis.ket_orth(k) if k in (i, j) else basis.ket(k)
                for k in range(1, n + 1)
            ]
            amps = amps + coeff * _product_vector(kets)
    return PureState(n, amps)


def ghz(n: int) -> PureState:
    """(|0..0> + |1..1>)/sqrt(2)."""
    spec = ClassStateSpec(
        CLASS_DOUBLE, n, LocalBasis.computational(n), (1 / np.sqrt(2), 1 / np.sqrt(2))
    )
    return make_double(spec)


def w_state(n: int) -> PureState:
    """Equal superposition of the n single-excitation basis states."""
    spec = ClassStateSpec(
        CLASS_NTUPLE, n, LocalBasis.computational(n), (1 / np.sqrt(n),) * n
    )
    return make_ntuple(spec)


def random_pure_state(n: int, rng: np.random.Generator) -> PureState:
    """Haar-random pure state on n qubits."""
    n = _check_qubit_count(n)
    z = rng.standard_normal(2**n) + 1j * rng.standard_normal(2**n)
    return PureState(n, z / np.linalg.norm(z))


def _random_lambdas(rng: np.random.Generator, k: int) -> tuple:
    while True:
        z = rng.standard_normal(k) + 1j * rng.standard_normal(k)
        z = z / np.linalg.norm(z)
        if np.min(np.abs(z)) > 1e-6:
            return tuple(z)


def _simplex_weights(rng: np.random.Generator, k: int) -> np.ndarray:
    w = rng.exponential(size=k)
    return w / w.sum()


def _as_rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_class_member(tag: str, n: int, rng: np.random.Generator) -> PureState:
    """One family member with random basis, coefficients and qubit order."""
    basis = LocalBasis.random(n, rng)
    if tag == CLASS_DOUBLE:
        state = make_double(ClassStateSpec(tag, n, basis, _random_lambdas(rng, 2)))
    elif tag == CLASS_NTUPLE:
        state = make_ntuple(ClassStateSpec(tag, n, basis, _random_lambdas(rng, n)))
    elif tag == CLASS_DICKE2:
        state = make_dicke2(n, basis)
    else:
        raise ValueError(f"unknown class tag {tag!r}")
    perm = [int(p) + 1 for p in rng.permutation(n)]
    return permute_qubits(state, perm)


def sample_class_mixture(tag: str, n: int, count: int, seed) -> DensityMatrix:
    """Convex mixture of ``count`` random members of one family.

    Deterministic for a fixed seed; mixing weights are uniform on the
    simplex.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = _as_rng(seed)
    members = [random_class_member(tag, n, rng) for _ in range(count)]
    weights = _simplex_weights(rng, count)
    return mix([(w, projector(s)) for w, s in zip(weights, members)])


def sample_biseparable(n: int, count: int, seed) -> DensityMatrix:
    """Mixture of pure states that each factor across some bipartition.

    Every component is Haar random on a random nonempty proper subset of
    the qubits and, independently, on the complement, so different
    components may split along different cuts.
    """
    n = _check_qubit_count(n)
    if n < 2:
        raise ValueError("biseparable states need at least 2 qubits")
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = _as_rng(seed)
    members = []
    for _ in range(count):
        pattern = int(rng.integers(1, 2**n - 1))
        part_a = [q for q in range(1, n + 1) if pattern & (1 << (n - q))]
        part_b = [q for q in range(1, n + 1) if q not in part_a]
        block = tensor(
            [random_pure_state(len(part_a), rng), random_pure_state(len(part_b), rng)]
        )
        order = part_a + part_b
        perm = [order.index(q) + 1 for q in range(1, n + 1)]
        members.append(permute_qubits(block, perm))
    weights = _simplex_weights(rng, count)
    return mix([(w, projector(s)) for w, s in zip(weights, members)])


def fig3_family(alpha: float, beta: float) -> DensityMatrix:
    """Four-qubit noise plane: alpha GHZ + beta W + white noise.

    rho = alpha |ghz><ghz| + beta |w><w| + (1 - alpha - beta)/16 * Id,
    defined for alpha, beta >= 0 with alpha + beta <= 1.
    """
    alpha = float(alpha)
    beta = float(beta)
    slack = 1e-9
    if alpha < -slack or beta < -slack or alpha + beta > 1.0 + slack:
        raise ValueError(
            f"(alpha, beta)=({alpha}, {beta}) is outside the simplex alpha,beta>=0, alpha+beta<=1"
        )
    alpha = max(alpha, 0.0)
    beta = max(beta, 0.0)
    if alpha + beta > 1.0:
        scale = (alpha + beta)
        alpha, beta = alpha / scale, beta / scale
    g = ghz(4).amplitudes
    w = w_state(4).amplitudes
    m = alpha * np.outer(g, g.conj()) + beta * np.outer(w, w.conj())
    m = m + (1.0 - alpha - beta) / 16.0 * np.eye(16)
    return DensityMatrix(4, m)
