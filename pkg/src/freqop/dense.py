"""Brute-force oracle for the frequency operator at small ensemble sizes.

Everything here works with explicit coefficient vectors on the d**N product
space, and (below a stricter guard) explicit d**N x d**N matrices. The
closed forms in :mod:`freqop.analytic` are validated against these routines.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from .hilbert import (
    EnsembleSpec,
    ScaleError,
    StateVector,
    check_vector_scale,
    product_state_vector,
    string_to_index,
)

# Explicit matrices only below this size; between here and the vector guard
# the operator is applied as an implicit diagonal.
DENSE_MATRIX_GUARD = 2**12


@dataclass(frozen=True)
class DenseOperator:
    """Explicit Hermitian matrix on the d**N product space."""

    dim_total: int
    entries: np.ndarray

    def apply(self, vec: np.ndarray) -> np.ndarray:
        if vec.shape != (self.dim_total,):
            raise ValueError(
                f"vector shape {vec.shape} does not match operator "
                f"dimension {self.dim_total}"
            )
        return self.entries @ vec


def check_matrix_scale(d: int, n: int) -> int:
    total = d**n
    if total > DENSE_MATRIX_GUARD:
        raise ScaleError(
            f"dense matrix of size {total}x{total} exceeds the matrix guard "
            f"{DENSE_MATRIX_GUARD}; use the implicit diagonal"
        )
    return total


def frequency_counts(d: int, n: int, j: int) -> np.ndarray:
    """Integer count of occurrences of j in each basis string, indexed by the
    flat basis index. Eigenvalues of the frequency operator are counts / N."""
    total = check_vector_scale(d, n)
    counts = np.zeros(total, dtype=np.int64)
    idx = np.arange(total)
    for _ in range(n):
        idx, digit = np.divmod(idx, d)
        counts += digit == j
    return counts


def frequency_diagonal(d: int, n: int, j: int) -> np.ndarray:
    """Diagonal of the frequency operator in the product basis: f_j per
    basis string."""
    return frequency_counts(d, n, j) / n


def build_frequency_operator(spec: EnsembleSpec) -> DenseOperator:
    """Literal construction: sum over all basis strings of f_j times the
    rank-one projector onto that string."""
    d, n, j = spec.state.dim, spec.n, spec.j
    total = check_matrix_scale(d, n)
    mat = np.zeros((total, total), dtype=np.complex128)
    for string in itertools.product(range(d), repeat=n):
        f = sum(1 for i in string if i == j) / n
        idx = string_to_index(string, d)
        mat[idx, idx] = f
    return DenseOperator(total, mat)


def build_frequency_operator_projector_sum(spec: EnsembleSpec) -> DenseOperator:
    """Equivalent construction as (1/N) times the sum over sites of the
    single-site projector |j><j| tensored with identities elsewhere."""
    d, n, j = spec.state.dim, spec.n, spec.j
    total = check_matrix_scale(d, n)
    proj = np.zeros((d, d), dtype=np.complex128)
    proj[j, j] = 1.0
    eye = np.eye(d, dtype=np.complex128)
    mat = np.zeros((total, total), dtype=np.complex128)
    for site in range(n):
        term = np.ones((1, 1), dtype=np.complex128)
        for alpha in range(n):
            term = np.kron(term, proj if alpha == site else eye)
        mat += term
    return DenseOperator(total, mat / n)


def eigenrelation_check(
    op: DenseOperator, string, d: int, j: int
) -> tuple[float, float]:
    """Apply op to the coordinate vector of a basis string.

    Returns (eigenvalue, residual): the expected eigenvalue f_j of the
    string and the norm of (op @ e_s - f_j * e_s).
    """
    n = len(string)
    idx = string_to_index(string, d)
    e = np.zeros(op.dim_total, dtype=np.complex128)
    e[idx] = 1.0
    eig = sum(1 for i in string if i == j) / n
    residual = float(np.linalg.norm(op.apply(e) - eig * e))
    return eig, residual


def apply_to_product(spec: EnsembleSpec) -> np.ndarray:
    """F^j_N applied to the N-fold product state, by two routes.

    Route one multiplies the diagonal onto the product coefficient vector;
    route two evaluates the structural sum of N terms in which one tensor
    factor is replaced by c_j |j>. The two must agree to 1e-12 per
    component; a mismatch raises, since it would mean the oracle itself is
    broken.
    """
    d, n, j = spec.state.dim, spec.n, spec.j
    vec = product_state_vector(spec)
    diag_route = frequency_diagonal(d, n, j) * vec

    c_j = spec.state.amplitude(j)
    e_j = np.zeros(d, dtype=np.complex128)
    e_j[j] = 1.0
    structural = np.zeros_like(vec)
    for site in range(n):
        term = np.ones(1, dtype=np.complex128)
        for alpha in range(n):
            term = np.kron(term, e_j if alpha == site else spec.state.amplitudes)
        structural += term
    structural *= c_j / n

    if np.max(np.abs(diag_route - structural)) > 1e-12:
        raise AssertionError("diagonal and structural routes disagree")
    return diag_route


def expectation_dense(spec: EnsembleSpec) -> float:
    """<psi^N| F |psi^N> computed directly from coefficient vectors."""
    vec = product_state_vector(spec)
    fvec = frequency_diagonal(spec.state.dim, spec.n, spec.j) * vec
    return float(np.vdot(vec, fvec).real)


def gram_dense(spec: EnsembleSpec) -> float:
    """<F psi^N | F psi^N> computed directly from coefficient vectors."""
    vec = product_state_vector(spec)
    fvec = frequency_diagonal(spec.state.dim, spec.n, spec.j) * vec
    return float(np.vdot(fvec, fvec).real)


def distance_sq_dense(spec: EnsembleSpec) -> float:
    """Squared norm of F|psi^N> - |c_j|^2 |psi^N>, directly from vectors."""
    vec = product_state_vector(spec)
    fvec = frequency_diagonal(spec.state.dim, spec.n, spec.j) * vec
    return float(np.linalg.norm(fvec - spec.born_probability * vec) ** 2)


def spectral_weights_dense(spec: EnsembleSpec) -> np.ndarray:
    """Probability mass of the product state on each frequency eigenspace.

    Entry k is the squared norm of the projection of |psi>^N onto the span
    of basis strings containing exactly k occurrences of j. Oracle for the
    binomial closed form.
    """
    d, n, j = spec.state.dim, spec.n, spec.j
    counts = frequency_counts(d, n, j)
    probs = np.abs(product_state_vector(spec)) ** 2
    return np.bincount(counts, weights=probs, minlength=n + 1)


def eigenspace_dimensions(d: int, n: int, j: int) -> np.ndarray:
    """Multiplicity of each eigenvalue k/N, counted by enumerating basis
    strings. Closed form: C(N, k) * (d-1)**(N-k)."""
    return np.bincount(frequency_counts(d, n, j), minlength=n + 1)


def verify_operator_algebra(d: int, n: int) -> dict:
    """Check the algebraic identities shared by all frequency operators.

    Verifies resolution of identity (sum over j of F^j = 1), pairwise
    commutation, Hermiticity, spectrum membership in {k/N}, and eigenspace
    multiplicities. Uses explicit matrices below the matrix guard and the
    implicit diagonal up to the vector guard. Returns a report of maximum
    deviations; the caller decides the tolerance.
    """
    total = check_vector_scale(d, n)
    use_matrices = total <= DENSE_MATRIX_GUARD

    report = {
        "d": d,
        "n": n,
        "dense_matrices": use_matrices,
        "sum_to_identity": 0.0,
        "max_commutator": 0.0,
        "hermiticity": 0.0,
        "spectrum_membership": 0.0,
        "multiplicity_ok": True,
    }

    all_counts = [frequency_counts(d, n, j) for j in range(d)]

    diag_sum = sum(c / n for c in all_counts)
    report["sum_to_identity"] = float(np.max(np.abs(diag_sum - 1.0)))

    # Counts are exact integers, so spectrum membership is checked exactly:
    # every diagonal entry must be k/N for an integer k in [0, N].
    for counts in all_counts:
        if counts.min() < 0 or counts.max() > n:
            report["spectrum_membership"] = float("inf")
        mult = np.bincount(counts, minlength=n + 1)
        expected = np.array(
            [comb(n, k) * (d - 1) ** (n - k) for k in range(n + 1)], dtype=np.int64
        )
        if not np.array_equal(mult, expected):
            report["multiplicity_ok"] = False

    if use_matrices:
        state = StateVector.uniform(d)
        ops = [
            build_frequency_operator(EnsembleSpec(state, n, j)).entries
            for j in range(d)
        ]
        report["hermiticity"] = max(
            float(np.max(np.abs(op - op.conj().T))) for op in ops
        )
        report["max_commutator"] = max(
            float(np.max(np.abs(ops[a] @ ops[b] - ops[b] @ ops[a])))
            for a in range(d)
            for b in range(a + 1, d)
        ) if d > 1 else 0.0
        eye = np.eye(total)
        report["sum_to_identity"] = max(
            report["sum_to_identity"], float(np.max(np.abs(sum(ops) - eye)))
        )
    return report


def construction_route_deviation(spec: EnsembleSpec) -> float:
    """Max entrywise deviation between the two construction routes."""
    a = build_frequency_operator(spec).entries
    b = build_frequency_operator_projector_sum(spec).entries
    return float(np.max(np.abs(a - b)))
