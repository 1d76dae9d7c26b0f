"""Non-commutative operator arithmetic and SU(N)-style generator sets.

All wave amplitudes in this package are dense complex square matrices
(operators on the generator representation space) or 3-vectors whose
components are such matrices.  Products never commute, so every binary
operation preserves the written order of its factors; commutator-type
expressions are composed by the caller, e.g. ``dot(u, v) - dot(v, u)``.

Conventions:

* spin generator sets satisfy ``S x S = i*hbar*S``, i.e.
  ``[S_i, S_j] = i*hbar*eps_ijk*S_k``;
* the Gell-Mann set satisfies ``[G_a, G_b] = 2i*f_abc*G_c`` with
  ``tr(G_a G_b) = 2*delta_ab``;
* structure constants are always computed from the trace formulas
  ``f_abc = -(i/4) tr(G_a [G_b, G_c])`` and
  ``d_abc = (1/4) tr(G_a {G_b, G_c})``, so they are consistent with
  whichever normalization the basis carries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

HERMITICITY_TOL = 1e-12

# Levi-Civita symbol, used by the operator cross product.
_EPS = np.zeros((3, 3, 3))
_EPS[0, 1, 2] = _EPS[1, 2, 0] = _EPS[2, 0, 1] = 1.0
_EPS[0, 2, 1] = _EPS[2, 1, 0] = _EPS[1, 0, 2] = -1.0


class DimMismatch(ValueError):
    """Operands live in representation spaces of different dimension."""


class UnsupportedGenerator(ValueError):
    """Requested generator-set kind is not implemented."""


class NonTracelessBasis(ValueError):
    """Structure constants requested for a basis with non-traceless members."""


def _square_complex(data) -> np.ndarray:
    arr = np.array(data, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense complex square matrix; the atom of all operator arithmetic."""

    mat: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "mat", _square_complex(self.mat))

    @classmethod
    def identity(cls, dim: int) -> "OperatorMatrix":
        return cls(np.eye(dim))

    @classmethod
    def zero(cls, dim: int) -> "OperatorMatrix":
        return cls(np.zeros((dim, dim)))

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    @property
    def norm(self) -> float:
        """Frobenius norm."""
        return float(np.linalg.norm(self.mat))

    @property
    def dagger(self) -> "OperatorMatrix":
        return OperatorMatrix(self.mat.conj().T)

    @property
    def trace(self) -> complex:
        return complex(np.trace(self.mat))

    def hermitian_part(self) -> "OperatorMatrix":
        return OperatorMatrix(0.5 * (self.mat + self.mat.conj().T))

    def is_zero(self, tol: float = 1e-12) -> bool:
        return self.norm <= tol

    def allclose(self, other: "OperatorMatrix", tol: float = 1e-12) -> bool:
        return (self - other).norm <= tol

    def _check_dim(self, other: "OperatorMatrix"):
        if self.dim != other.dim:
            raise DimMismatch(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check_dim(other)
        return OperatorMatrix(self.mat + other.mat)

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check_dim(other)
        return OperatorMatrix(self.mat - other.mat)

    def __neg__(self) -> "OperatorMatrix":
        return OperatorMatrix(-self.mat)

    def __mul__(self, scalar: complex) -> "OperatorMatrix":
        return OperatorMatrix(self.mat * scalar)

    __rmul__ = __mul__

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check_dim(other)
        return OperatorMatrix(self.mat @ other.mat)


@dataclass(frozen=True)
class OperatorVector3:
    """Spatial 3-vector whose components are operator matrices.

    Stored as one complex array of shape (3, d, d); component i is
    ``comps[i]``.
    """

    comps: np.ndarray

    def __post_init__(self):
        arr = np.array(self.comps, dtype=complex)
        if arr.ndim != 3 or arr.shape[0] != 3 or arr.shape[1] != arr.shape[2]:
            raise ValueError(f"expected shape (3, d, d), got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("vector entries must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "comps", arr)

    @classmethod
    def from_components(cls, x: OperatorMatrix, y: OperatorMatrix,
                        z: OperatorMatrix) -> "OperatorVector3":
        if not (x.dim == y.dim == z.dim):
            raise DimMismatch("components must share dimension")
        return cls(np.stack([x.mat, y.mat, z.mat]))

    @classmethod
    def from_numeric(cls, v: Sequence[float], dim: int) -> "OperatorVector3":
        """Lift an ordinary 3-vector to a multiple of the identity."""
        v = np.asarray(v, dtype=complex)
        return cls(np.einsum("i,ab->iab", v, np.eye(dim)))

    @classmethod
    def from_coeff(cls, v: Sequence[float], m: OperatorMatrix) -> "OperatorVector3":
        """Vector coefficient times a single operator, e.g. ``yhat * S_y``."""
        v = np.asarray(v, dtype=complex)
        return cls(np.einsum("i,ab->iab", v, m.mat))

    @classmethod
    def zero(cls, dim: int) -> "OperatorVector3":
        return cls(np.zeros((3, dim, dim)))

    @property
    def x(self) -> OperatorMatrix:
        return OperatorMatrix(self.comps[0])

    @property
    def y(self) -> OperatorMatrix:
        return OperatorMatrix(self.comps[1])

    @property
    def z(self) -> OperatorMatrix:
        return OperatorMatrix(self.comps[2])

    def component(self, i: int) -> OperatorMatrix:
        return OperatorMatrix(self.comps[i])

    @property
    def dim(self) -> int:
        return self.comps.shape[1]

    @property
    def norm(self) -> float:
        """Largest component Frobenius norm."""
        return float(max(np.linalg.norm(self.comps[i]) for i in range(3)))

    def hermitian_part(self) -> "OperatorVector3":
        return OperatorVector3(0.5 * (self.comps + np.conj(np.swapaxes(self.comps, 1, 2))))

    def is_zero(self, tol: float = 1e-12) -> bool:
        return self.norm <= tol

    def allclose(self, other: "OperatorVector3", tol: float = 1e-12) -> bool:
        return (self - other).norm <= tol

    def _check_dim(self, other: "OperatorVector3"):
        if self.dim != other.dim:
            raise DimMismatch(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "OperatorVector3") -> "OperatorVector3":
        self._check_dim(other)
        return OperatorVector3(self.comps + other.comps)

    def __sub__(self, other: "OperatorVector3") -> "OperatorVector3":
        self._check_dim(other)
        return OperatorVector3(self.comps - other.comps)

    def __neg__(self) -> "OperatorVector3":
        return OperatorVector3(-self.comps)

    def __mul__(self, scalar: complex) -> "OperatorVector3":
        return OperatorVector3(self.comps * scalar)

    __rmul__ = __mul__


VectorLike = Union[OperatorVector3, Sequence[float], np.ndarray]


def _promote(v: VectorLike, dim: int) -> OperatorVector3:
    if isinstance(v, OperatorVector3):
        return v
    return OperatorVector3.from_numeric(np.asarray(v, dtype=complex), dim)


def commutator(x: OperatorMatrix, y: OperatorMatrix) -> OperatorMatrix:
    """[x, y] = xy - yx."""
    x._check_dim(y)
    return OperatorMatrix(x.mat @ y.mat - y.mat @ x.mat)


def anticommutator(x: OperatorMatrix, y: OperatorMatrix) -> OperatorMatrix:
    """{x, y} = xy + yx."""
    x._check_dim(y)
    return OperatorMatrix(x.mat @ y.mat + y.mat @ x.mat)


def cross(u: VectorLike, v: VectorLike) -> OperatorVector3:
    """Operator cross product (u x v)_i = eps_ijk u_j v_k, order preserved.

    Either argument may be an ordinary 3-vector, which is treated as a
    multiple of the identity; in that limit this reduces to the Euclidean
    cross product.  Note u x u is generally nonzero for operator vectors.
    """
    dim = u.dim if isinstance(u, OperatorVector3) else v.dim
    uu, vv = _promote(u, dim), _promote(v, dim)
    uu._check_dim(vv)
    return OperatorVector3(np.einsum("ijk,jab,kbc->iac", _EPS, uu.comps, vv.comps))


def dot(u: VectorLike, v: VectorLike) -> OperatorMatrix:
    """Ordered dot product sum_i u_i v_i (matrix products, not symmetrized)."""
    dim = u.dim if isinstance(u, OperatorVector3) else v.dim
    uu, vv = _promote(u, dim), _promote(v, dim)
    uu._check_dim(vv)
    return OperatorMatrix(np.einsum("iab,ibc->ac", uu.comps, vv.comps))


# --- generator sets ---------------------------------------------------------

_PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
_PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

_GELLMANN = (
    np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex),
    np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]], dtype=complex),
    np.array([[1, 0, 0], [0, -1, 0], [0, 0, 0]], dtype=complex),
    np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]], dtype=complex),
    np.array([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]], dtype=complex),
    np.array([[0, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=complex),
    np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]], dtype=complex),
    np.array([[1, 0, 0], [0, 1, 0], [0, 0, -2]], dtype=complex) / np.sqrt(3.0),
)

KINDS = ("identity", "su2_spin_half", "su2_spin_one", "su3_gellmann", "custom")


@dataclass(frozen=True)
class GeneratorSet:
    """An expansion basis {identity} + {G_1 ... G_n} for wave amplitudes.

    ``eta_scale`` is the scale s in ``tau x tau = i*s*eta``: hbar for the spin
    sets (where eta carries the Levi-Civita structure of S x S = i*hbar*S)
    and 1 for the Gell-Mann set (whose commutator convention 2i*f absorbs
    the factor into eta's structure-constant definition).
    """

    kind: str
    dim: int
    generators: tuple[OperatorMatrix, ...]
    hbar: float = 1.0
    eta_scale: float = 1.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UnsupportedGenerator(f"unknown generator kind {self.kind!r}")
        if self.hbar <= 0:
            raise ValueError("hbar must be positive")
        for g in self.generators:
            if g.dim != self.dim:
                raise DimMismatch("generator dimension mismatch")
            if (g - g.dagger).norm > HERMITICITY_TOL:
                raise ValueError("generators must be Hermitian")

    @property
    def identity(self) -> OperatorMatrix:
        return OperatorMatrix.identity(self.dim)

    @property
    def basis(self) -> tuple[OperatorMatrix, ...]:
        """Identity followed by the generators; matches the R_0..R_n layout."""
        return (self.identity,) + self.generators

    @property
    def n_coeffs(self) -> int:
        return 1 + len(self.generators)


def make_generators(kind: str, hbar: float = 1.0) -> GeneratorSet:
    """Build one of the supported generator sets.

    Spin generators are scaled by hbar; Gell-Mann matrices are returned
    exactly as printed (no hbar factor).
    """
    if hbar <= 0:
        raise ValueError("hbar must be positive")
    if kind == "identity":
        return GeneratorSet(kind, 1, (), hbar=hbar, eta_scale=hbar)
    if kind == "su2_spin_half":
        gens = tuple(OperatorMatrix(0.5 * hbar * s)
                     for s in (_PAULI_X, _PAULI_Y, _PAULI_Z))
        gs = GeneratorSet(kind, 2, gens, hbar=hbar, eta_scale=hbar)
    elif kind == "su2_spin_one":
        sx = hbar / np.sqrt(2.0) * np.array(
            [[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex)
        sy = 1j * hbar / np.sqrt(2.0) * np.array(
            [[0, -1, 0], [1, 0, -1], [0, 1, 0]], dtype=complex)
        sz = hbar * np.array([[1, 0, 0], [0, 0, 0], [0, 0, -1]], dtype=complex)
        gs = GeneratorSet(kind, 3, tuple(OperatorMatrix(m) for m in (sx, sy, sz)),
                          hbar=hbar, eta_scale=hbar)
    elif kind == "su3_gellmann":
        gens = tuple(OperatorMatrix(g) for g in _GELLMANN)
        gs = GeneratorSet(kind, 3, gens, hbar=hbar, eta_scale=1.0)
        _validate_gellmann(gs)
        return gs
    else:
        raise UnsupportedGenerator(f"unsupported generator kind {kind!r}")
    _validate_su2(gs)
    return gs


def custom_generators(matrices: Iterable[np.ndarray], hbar: float = 1.0,
                      eta_scale: float | None = None) -> GeneratorSet:
    """Wrap user-supplied Hermitian generators as a 'custom' set."""
    gens = tuple(OperatorMatrix(m) for m in matrices)
    if not gens:
        raise ValueError("custom set needs at least one generator")
    return GeneratorSet("custom", gens[0].dim, gens, hbar=hbar,
                        eta_scale=hbar if eta_scale is None else eta_scale)


def _validate_su2(gs: GeneratorSet):
    sx, sy, sz = gs.generators
    hb = gs.hbar
    for (a, b, c) in ((sx, sy, sz), (sy, sz, sx), (sz, sx, sy)):
        defect = (commutator(a, b) - 1j * hb * c).norm
        if defect > HERMITICITY_TOL * max(1.0, hb):
            raise ValueError(f"SU(2) algebra violated, defect {defect}")


def _validate_gellmann(gs: GeneratorSet):
    for a, ga in enumerate(gs.generators):
        if abs(ga.trace) > HERMITICITY_TOL:
            raise ValueError("Gell-Mann matrices must be traceless")
        for b, gb in enumerate(gs.generators):
            want = 2.0 if a == b else 0.0
            if abs((ga @ gb).trace - want) > HERMITICITY_TOL:
                raise ValueError("tr(G_a G_b) = 2 delta_ab violated")


def structure_constants(basis: GeneratorSet) -> tuple[np.ndarray, np.ndarray]:
    """Antisymmetric f and symmetric d constants from the trace formulas.

    Returns real rank-3 arrays of shape (n, n, n).  Raises
    NonTracelessBasis if any generator has |trace| > 1e-12; the identity
    kind has no structure constants at all.
    """
    if basis.kind == "identity" or not basis.generators:
        raise NonTracelessBasis("generator set has no non-identity members")
    for g in basis.generators:
        if abs(g.trace) > 1e-12:
            raise NonTracelessBasis("structure constants need traceless generators")
    mats = np.stack([g.mat for g in basis.generators])
    comm = np.einsum("bij,cjk->bcik", mats, mats)
    comm = comm - np.transpose(comm, (1, 0, 2, 3))
    acomm = np.einsum("bij,cjk->bcik", mats, mats)
    acomm = acomm + np.transpose(acomm, (1, 0, 2, 3))
    f = -0.25j * np.einsum("aij,bcji->abc", mats, comm)
    d = 0.25 * np.einsum("aij,bcji->abc", mats, acomm)
    for name, arr in (("f", f), ("d", d)):
        if np.abs(arr.imag).max() > 1e-12:
            raise ValueError(f"{name} constants acquired imaginary part")
    return f.real.copy(), d.real.copy()
