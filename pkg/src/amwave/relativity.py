"""Field-strength tensors, axis boosts, boosted-frame residuals, and
constant-gauge conjugation.

Index bookkeeping follows the numeric convention that contravariant
four-vectors and both tensor slots transform with the boost matrix C,
while the covariant transformation uses its explicit inverse (C itself is
symmetric for an axis boost, so no transposes hide anywhere).  A plane
wave stays a plane wave under a boost: the per-harmonic tensor amplitudes
transform with C on both indices and the wave four-vector with C once,
which makes the boosted-frame equation check exact termwise algebra
rather than a grid computation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import OperatorMatrix, OperatorVector3
from .fields import (
    HarmonicScalarField,
    HarmonicVectorField,
    SolutionFamily,
    build_fields,
)
from .residuals import ResidualItem, ResidualReport

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

BOOST_AXES = {"x": 0, "y": 1, "z": 2}


class SuperluminalBoost(ValueError):
    """|v| >= c requested."""


class NonUnitary(ValueError):
    """Gauge conjugation with a matrix that is not unitary."""


@dataclass(frozen=True, eq=False)
class BoostMatrix:
    """Lorentz boost along one coordinate axis with its explicit inverse."""

    velocity: float
    c: float
    axis: int
    matrix: np.ndarray
    inverse: np.ndarray


def boost_matrix(velocity: float, c: float = 1.0, axis: int | str = 2) -> BoostMatrix:
    """Boost with speed ``velocity`` along a coordinate axis.

    The canonical matrix is written for the z axis; other axes are obtained
    by permuting the spatial coordinates.
    """
    if isinstance(axis, str):
        axis = BOOST_AXES[axis]
    if axis not in (0, 1, 2):
        raise ValueError("axis must be 0, 1, 2 (or 'x', 'y', 'z')")
    beta = velocity / c
    if abs(beta) >= 1.0:
        raise SuperluminalBoost(f"|v| = {abs(velocity)} >= c = {c}")
    gamma = 1.0 / np.sqrt(1.0 - beta * beta)

    def axis_boost(b):
        m = np.eye(4)
        m[0, 0] = m[3, 3] = gamma
        m[0, 3] = m[3, 0] = -gamma * b
        return m

    perm = np.eye(4)
    if axis != 2:
        # swap the boosted spatial coordinate with z
        i, j = 1 + axis, 3
        perm[[i, j]] = perm[[j, i]]
    mat = perm @ axis_boost(beta) @ perm.T
    inv = perm @ axis_boost(-beta) @ perm.T
    return BoostMatrix(velocity=velocity, c=c, axis=axis, matrix=mat, inverse=inv)


@dataclass(frozen=True, eq=False)
class FieldStrengthTensor:
    """Contravariant antisymmetric 4x4 grid of operator matrices."""

    comps: np.ndarray  # shape (4, 4, d, d)

    def __post_init__(self):
        arr = np.array(self.comps, dtype=complex)
        if arr.ndim != 4 or arr.shape[:2] != (4, 4) or arr.shape[2] != arr.shape[3]:
            raise ValueError(f"expected shape (4, 4, d, d), got {arr.shape}")
        arr.flags.writeable = False
        object.__setattr__(self, "comps", arr)

    @property
    def dim(self) -> int:
        return self.comps.shape[2]

    @property
    def norm(self) -> float:
        return float(max(np.linalg.norm(self.comps[m, n])
                         for m in range(4) for n in range(4)))

    def entry(self, mu: int, nu: int) -> OperatorMatrix:
        return OperatorMatrix(self.comps[mu, nu])

    def antisymmetry_defect(self) -> float:
        return float(max(np.linalg.norm(self.comps[m, n] + self.comps[n, m])
                         for m in range(4) for n in range(4)))

    def lowered(self) -> np.ndarray:
        """F_mu_nu = g F^{..} g with the diagonal metric."""
        return np.einsum("m,n,mnab->mnab", np.diag(METRIC), np.diag(METRIC),
                         self.comps)


def assemble_tensor(b: OperatorVector3, e: OperatorVector3) -> FieldStrengthTensor:
    """Place electric and magnetic amplitudes in the contravariant tensor.

    Layout: F^{i0} = E_i and (F^{32}, F^{13}, F^{21}) = B.
    """
    if b.dim != e.dim:
        raise ValueError("field amplitudes must share dimension")
    d = b.dim
    f = np.zeros((4, 4, d, d), dtype=complex)
    ex, ey, ez = e.comps
    bx, by, bz = b.comps
    f[1, 0], f[2, 0], f[3, 0] = ex, ey, ez
    f[0, 1], f[0, 2], f[0, 3] = -ex, -ey, -ez
    f[3, 2], f[1, 3], f[2, 1] = bx, by, bz
    f[2, 3], f[3, 1], f[1, 2] = -bx, -by, -bz
    return FieldStrengthTensor(f)


def extract_fields(f: FieldStrengthTensor) -> tuple[OperatorVector3, OperatorVector3]:
    """Inverse of assemble_tensor: returns (B, E)."""
    e = OperatorVector3(np.stack([f.comps[1, 0], f.comps[2, 0], f.comps[3, 0]]))
    b = OperatorVector3(np.stack([f.comps[3, 2], f.comps[1, 3], f.comps[2, 1]]))
    return b, e


def boost_tensor(f: FieldStrengthTensor, boost: BoostMatrix) -> FieldStrengthTensor:
    """F'^{mu nu} = C_mu_alpha C_nu_beta F^{alpha beta}."""
    c = boost.matrix
    return FieldStrengthTensor(np.einsum("ma,nb,abij->mnij", c, c, f.comps))


def boost_wavevector(kmu: np.ndarray, boost: BoostMatrix) -> np.ndarray:
    """Apply the boost to a contravariant four-vector (omega/c, k)."""
    return boost.matrix @ np.asarray(kmu, dtype=float)


def null_defect(kmu: np.ndarray, c: float = 1.0) -> float:
    """|omega^2 - c^2 |k|^2| / omega^2 for a wave four-vector."""
    kmu = np.asarray(kmu, dtype=float)
    w2 = (c * kmu[0]) ** 2
    return abs(w2 - c * c * float(kmu[1:] @ kmu[1:])) / w2


def harmonic_tensors(fam: SolutionFamily) -> list[tuple[int, FieldStrengthTensor]]:
    """Per-harmonic field-strength amplitudes of a solution family."""
    b, e = build_fields(fam)
    orders = sorted(set(b.orders) | set(e.orders))
    return [(m, assemble_tensor(b.amplitude(m), e.amplitude(m))) for m in orders]


def tensor_equation_defects(tensors, kmu: np.ndarray) -> tuple[float, float]:
    """Sup norms of the first-form equations on per-harmonic amplitudes.

    For a harmonic of order m the derivative acts as i*m*u with
    u = (-omega/c, k), so both the divergence equation and the cyclic
    (Bianchi-type) sum become finite contractions.
    """
    u = np.asarray(kmu, dtype=float) * np.array([-1.0, 1.0, 1.0, 1.0])
    div_defect = 0.0
    bianchi_defect = 0.0
    for m, f in tensors:
        dive = 1j * m * np.einsum("m,mnab->nab", u, f.comps)
        div_defect = max(div_defect,
                         max(np.linalg.norm(dive[n]) for n in range(4)))
        low = f.lowered()
        cyc = abs(m) * (np.einsum("m,ngab->mngab", u, low)
                        + np.einsum("n,gmab->mngab", u, low)
                        + np.einsum("g,mnab->mngab", u, low))
        bianchi_defect = max(bianchi_defect,
                             max(np.linalg.norm(cyc[a, b, g])
                                 for a in range(4) for b in range(4)
                                 for g in range(4)))
    return div_defect, bianchi_defect


def boosted_residuals(fam: SolutionFamily, velocity: float,
                      axis: int | str = 2, tol: float = 1e-10) -> ResidualReport:
    """Check the zero-coupling tensor equations in a boosted frame.

    Transforms every per-harmonic tensor amplitude and the wave four-vector,
    then re-evaluates the divergence and cyclic equations with the boosted
    phase derivative.  Raises SuperluminalBoost for |v| >= c.
    """
    ctx = fam.ctx
    boost = boost_matrix(velocity, c=ctx.c, axis=axis)
    kmu = np.concatenate([[ctx.omega / ctx.c], ctx.k])
    kmu_prime = boost_wavevector(kmu, boost)
    tensors = harmonic_tensors(fam)
    boosted = [(m, boost_tensor(f, boost)) for m, f in tensors]
    scale = max(1.0, max(f.norm for _, f in boosted) * float(np.abs(kmu_prime).max()))
    div_defect, bianchi_defect = tensor_equation_defects(boosted, kmu_prime)
    items = (
        ResidualItem("tensor_divergence", div_defect / scale, tol,
                     div_defect / scale <= tol),
        ResidualItem("bianchi_cycle", bianchi_defect / scale, tol,
                     bianchi_defect / scale <= tol),
        ResidualItem("null_wavevector", null_defect(kmu_prime, ctx.c), 1e-12,
                     null_defect(kmu_prime, ctx.c) <= 1e-12),
        ResidualItem("tensor_antisymmetry",
                     max(f.antisymmetry_defect() for _, f in boosted) / scale,
                     1e-12,
                     max(f.antisymmetry_defect() for _, f in boosted) / scale <= 1e-12),
    )
    return ResidualReport(f"boost v={velocity}", items)


# --- constant gauge conjugation ---------------------------------------------------

def _check_unitary(u: OperatorMatrix):
    defect = (OperatorMatrix(u.mat @ u.mat.conj().T) - OperatorMatrix.identity(u.dim)).norm
    if defect > 1e-12:
        raise NonUnitary(f"conjugation matrix is not unitary (defect {defect:.2e})")


def gauge_conjugate(obj, u: OperatorMatrix):
    """Conjugate every operator amplitude by a constant unitary, X -> U X U+.

    Works on operator matrices/vectors, harmonic fields, and field-strength
    tensors.  Frobenius norms are unitarily invariant, so residual norms
    computed before and after conjugation agree.
    """
    _check_unitary(u)
    um, ud = u.mat, u.mat.conj().T
    if isinstance(obj, OperatorMatrix):
        return OperatorMatrix(um @ obj.mat @ ud)
    if isinstance(obj, OperatorVector3):
        return OperatorVector3(np.einsum("ab,ibc,cd->iad", um, obj.comps, ud))
    if isinstance(obj, FieldStrengthTensor):
        return FieldStrengthTensor(np.einsum("ab,mnbc,cd->mnad", um, obj.comps, ud))
    if isinstance(obj, (HarmonicScalarField, HarmonicVectorField)):
        terms = tuple((m, gauge_conjugate(amp, u)) for m, amp in obj.terms)
        return type(obj)(obj.ctx, terms)
    raise TypeError(f"cannot gauge-conjugate {type(obj).__name__}")


def unitary_exponential(hermitian: OperatorMatrix, angle: float = 1.0) -> OperatorMatrix:
    """exp(i * angle * H) for Hermitian H, via spectral decomposition."""
    h = hermitian.mat
    if np.linalg.norm(h - h.conj().T) > 1e-12 * max(1.0, np.linalg.norm(h)):
        raise ValueError("generator of a unitary must be Hermitian")
    w, v = np.linalg.eigh(h)
    return OperatorMatrix(v @ np.diag(np.exp(1j * angle * w)) @ v.conj().T)
