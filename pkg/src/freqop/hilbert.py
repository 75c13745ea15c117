"""State vectors, inner products, and product-basis index arithmetic.

A single system lives in a d-dimensional Hilbert space with the measurement
eigenbasis as coordinate basis; an ensemble of N identically prepared copies
lives in the d**N-dimensional tensor power. Basis strings (i_1, ..., i_N)
label the product basis and map to flat indices by row-major mixed radix
(leftmost digit most significant).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

NORM_TOL = 1e-12

# Largest product space materialized as an explicit coefficient vector.
DENSE_VECTOR_GUARD = 2**20


class ScaleError(ValueError):
    """Requested product space exceeds the dense-computation guard."""


class StateVector:
    """Normalized complex amplitude vector for a single system.

    Amplitudes are stored as a read-only complex128 array. Construction
    rejects non-finite entries and, unless ``renormalize=True``, any vector
    whose norm deviates from 1 by more than ``NORM_TOL``.
    """

    __slots__ = ("_amps",)

    def __init__(self, amplitudes, *, renormalize: bool = False):
        amps = np.array(amplitudes, dtype=np.complex128).ravel()
        if amps.size < 1:
            raise ValueError("state vector needs at least one amplitude")
        if not np.all(np.isfinite(amps.view(np.float64))):
            raise ValueError("state amplitudes must be finite")
        norm = float(np.linalg.norm(amps))
        if renormalize:
            if norm == 0.0:
                raise ValueError("cannot renormalize the zero vector")
            amps = amps / norm
        elif abs(norm - 1.0) > NORM_TOL:
            raise ValueError(
                f"state vector not normalized: |norm - 1| = {abs(norm - 1.0):.3e}"
            )
        amps.flags.writeable = False
        self._amps = amps

    @property
    def dim(self) -> int:
        return self._amps.size

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amps

    def amplitude(self, i: int) -> complex:
        return complex(self._amps[i])

    def probability(self, i: int) -> float:
        """Born weight |c_i|^2 of outcome index i."""
        return float(abs(self._amps[i]) ** 2)

    def probabilities(self) -> np.ndarray:
        return np.abs(self._amps) ** 2

    def __repr__(self) -> str:
        return f"StateVector(dim={self.dim})"

    def __eq__(self, other) -> bool:
        return isinstance(other, StateVector) and np.array_equal(
            self._amps, other._amps
        )

    # -- presets ---------------------------------------------------------

    @classmethod
    def basis(cls, dim: int, i: int) -> "StateVector":
        """Coordinate basis state |i> in dimension dim."""
        amps = np.zeros(dim, dtype=np.complex128)
        amps[i] = 1.0
        return cls(amps)

    @classmethod
    def uniform(cls, dim: int) -> "StateVector":
        return cls(np.full(dim, 1.0 / np.sqrt(dim), dtype=np.complex128))

    @classmethod
    def two_level(cls, p: float) -> "StateVector":
        """Real qubit (sqrt(p), sqrt(1-p)); outcome 0 has Born weight p."""
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {p}")
        return cls(np.array([np.sqrt(p), np.sqrt(1.0 - p)], dtype=np.complex128))

    # -- JSON wire format ------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "dim": self.dim,
            "amplitudes": [
                {"re": float(a.real), "im": float(a.imag)} for a in self._amps
            ],
        }

    @classmethod
    def from_json_dict(cls, obj: dict, *, renormalize: bool = False) -> "StateVector":
        dim = int(obj["dim"])
        amps = obj["amplitudes"]
        if len(amps) != dim:
            raise ValueError(
                f"amplitude list length {len(amps)} does not match dim {dim}"
            )
        return cls(
            [complex(a["re"], a["im"]) for a in amps], renormalize=renormalize
        )

    @classmethod
    def from_json(cls, text: str, *, renormalize: bool = False) -> "StateVector":
        return cls.from_json_dict(json.loads(text), renormalize=renormalize)


@dataclass(frozen=True)
class EnsembleSpec:
    """A single-system state, an ensemble size N, and a target outcome j.

    Every ensemble-level quantity in this package is a function of these
    three things.
    """

    state: StateVector
    n: int
    j: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"ensemble size must be >= 1, got {self.n}")
        if not 0 <= self.j < self.state.dim:
            raise ValueError(
                f"target index {self.j} out of range [0, {self.state.dim})"
            )

    @property
    def born_probability(self) -> float:
        """|c_j|^2, computed from the stored amplitude."""
        return self.state.probability(self.j)

    @property
    def dim_total(self) -> int:
        return self.state.dim**self.n


def inner_product(a: StateVector, b: StateVector) -> complex:
    """<a|b>, conjugate-linear in the first argument."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} != {b.dim}")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def string_to_index(indices, d: int) -> int:
    """Flatten a basis string to its row-major index (leftmost digit most
    significant)."""
    idx = 0
    for i in indices:
        if not 0 <= i < d:
            raise ValueError(f"basis index {i} out of range [0, {d})")
        idx = idx * d + i
    return idx


def index_to_string(index: int, d: int, n: int) -> tuple[int, ...]:
    """Inverse of :func:`string_to_index` for strings of length n."""
    if not 0 <= index < d**n:
        raise ValueError(f"index {index} out of range [0, {d**n})")
    digits = []
    for _ in range(n):
        index, r = divmod(index, d)
        digits.append(r)
    return tuple(reversed(digits))


def check_vector_scale(d: int, n: int) -> int:
    """Return d**n, or raise ScaleError if it exceeds the vector guard."""
    total = d**n
    if total > DENSE_VECTOR_GUARD:
        raise ScaleError(
            f"product space of size {d}**{n} = {total} exceeds the dense "
            f"vector guard {DENSE_VECTOR_GUARD}; use the analytic engine"
        )
    return total


def product_state_vector(spec: EnsembleSpec) -> np.ndarray:
    """Coefficient vector of the N-fold tensor power of spec.state.

    The coefficient at basis string (i_1, ..., i_N) is the product of the
    single-system amplitudes c_{i_alpha}.
    """
    check_vector_scale(spec.state.dim, spec.n)
    vec = np.ones(1, dtype=np.complex128)
    for _ in range(spec.n):
        vec = np.kron(vec, spec.state.amplitudes)
    return vec
