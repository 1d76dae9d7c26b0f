"""Free Dirac electron in momentum space: eigenstates, projectors, and the
position/spin trembling-motion operators with their closed forms.

Everything is plain 4x4 matrix algebra at a fixed momentum.  The evolution
factor exp(-2iHt/hbar) is computed by spectral decomposition of the
Hermitian Hamiltonian (exact and stable for any t), never by series.

Work in natural units (m = c = hbar = 1) for numerics; the SI layer at the
bottom only evaluates closed-form expressions, so the 1e21 1/s frequencies
never enter a time grid.

The closed-form eigenvectors divide by p + p_z and hence degenerate as the
momentum approaches the -z ray; callers hitting PolarSingularity should
rotate their momentum first.
"""

from __future__ import annotations

from dataclasses import dataclass
import numpy as np

from .algebra import OperatorMatrix, OperatorVector3

POLAR_EPS = 1e-10

_SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


class PolarSingularity(ValueError):
    """Momentum too close to the -z ray for the closed-form eigenvectors."""


def dirac_matrices() -> tuple[OperatorVector3, OperatorMatrix, OperatorVector3]:
    """alpha (off-diagonal sigma blocks), beta (diag(1, -1)), Sigma (diag sigma)."""
    zero = np.zeros((2, 2), dtype=complex)
    eye = np.eye(2, dtype=complex)
    alpha = OperatorVector3(np.stack(
        [np.block([[zero, s], [s, zero]]) for s in _SIGMA]))
    beta = OperatorMatrix(np.block([[eye, zero], [zero, -eye]]))
    sigma = OperatorVector3(np.stack(
        [np.block([[s, zero], [zero, s]]) for s in _SIGMA]))
    return alpha, beta, sigma


@dataclass(frozen=True, eq=False)
class DiracContext:
    """Mass, momentum and units for one plane-wave electron."""

    p: np.ndarray
    mass: float = 1.0
    c: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        p = np.array(self.p, dtype=float)
        if p.shape != (3,):
            raise ValueError("p must be a real 3-vector")
        if self.mass <= 0 or self.c <= 0 or self.hbar <= 0:
            raise ValueError("mass, c and hbar must be positive")
        p.flags.writeable = False
        object.__setattr__(self, "p", p)

    @property
    def pnorm(self) -> float:
        return float(np.linalg.norm(self.p))

    @property
    def phat(self) -> np.ndarray:
        return self.p / self.pnorm

    @property
    def energy(self) -> float:
        """E_p = sqrt(p^2 c^2 + m^2 c^4)."""
        return float(np.sqrt((self.pnorm * self.c) ** 2
                             + (self.mass * self.c ** 2) ** 2))

    @property
    def p_plus(self) -> complex:
        return complex(self.p[0], self.p[1])

    @property
    def p_minus(self) -> complex:
        return complex(self.p[0], -self.p[1])

    @property
    def u_plus(self) -> float:
        return float(np.sqrt(self.energy + self.mass * self.c ** 2))

    @property
    def u_minus(self) -> float:
        return float(np.sqrt(self.energy - self.mass * self.c ** 2))

    def check_polar(self):
        if self.pnorm == 0.0 or self.pnorm + self.p[2] <= POLAR_EPS * self.pnorm:
            raise PolarSingularity(
                "p + p_z vanishes; rotate the momentum away from the -z ray")


def hamiltonian(ctx: DiracContext) -> OperatorMatrix:
    """H = c alpha.p + beta m c^2."""
    alpha, beta, _ = dirac_matrices()
    h = ctx.c * np.einsum("i,iab->ab", ctx.p, alpha.comps) \
        + ctx.mass * ctx.c ** 2 * beta.mat
    return OperatorMatrix(h)


def helicity_operator(ctx: DiracContext) -> OperatorMatrix:
    """Lambda = S.phat with S = (hbar/2) Sigma."""
    _, _, sigma = dirac_matrices()
    return OperatorMatrix(
        0.5 * ctx.hbar * np.einsum("i,iab->ab", ctx.phat, sigma.comps))


@dataclass(frozen=True, eq=False)
class DiracState:
    """Unit-norm momentum-space spinor with its energy and helicity labels."""

    amplitudes: np.ndarray
    energy_sign: int
    helicity: float

    def __post_init__(self):
        amp = np.array(self.amplitudes, dtype=complex)
        if amp.shape != (4,):
            raise ValueError("need 4 spinor amplitudes")
        if abs(np.linalg.norm(amp) - 1.0) > 1e-12:
            raise ValueError("state must be unit norm")
        amp.flags.writeable = False
        object.__setattr__(self, "amplitudes", amp)


def eigenstates(ctx: DiracContext) -> tuple[DiracState, ...]:
    """The four closed-form common eigenstates of energy and helicity.

    Ordered (+E,+), (+E,-), (-E,+), (-E,-).  Each is normalized to unit
    norm; the shared closed-form prefactor is 1/sqrt(4 E_p p (p + p_z)).
    """
    ctx.check_polar()
    p, pz = ctx.pnorm, ctx.p[2]
    pp, pm = ctx.p_plus, ctx.p_minus
    up, um = ctx.u_plus, ctx.u_minus
    cp = ctx.c * p
    norm = 1.0 / np.sqrt(4.0 * ctx.energy * p * (p + pz))
    hb2 = 0.5 * ctx.hbar

    def spinor(u, lower_sign, flip):
        top = np.array([p + pz, pp]) if not flip else np.array([-pm, p + pz])
        return norm * np.concatenate([u * top, lower_sign * (cp / u) * top])

    return (
        DiracState(spinor(up, +1.0, False), +1, +hb2),
        DiracState(spinor(up, -1.0, True), +1, -hb2),
        DiracState(spinor(um, -1.0, False), -1, +hb2),
        DiracState(spinor(um, +1.0, True), -1, -hb2),
    )


@dataclass(frozen=True)
class SuperpositionSpec:
    """cos(theta) |psi_+> + sin(theta) |psi_->, by state pair or coefficients.

    ``pair`` picks one positive- and one negative-energy eigenstate
    (1-based indices); ``coefficients`` optionally gives the full
    (c1, c2, c3, c4) split, with (c1, c2) weighting the positive-energy
    doublet and (c3, c4) the negative one (each doublet normalized).
    """

    theta: float
    pair: tuple[int, int] = (1, 4)
    coefficients: tuple[complex, complex, complex, complex] | None = None

    def __post_init__(self):
        if self.coefficients is None:
            a, b = self.pair
            if a not in (1, 2) or b not in (3, 4):
                raise ValueError("pair must combine one of (1,2) with one of (3,4)")

    def state_vector(self, ctx: DiracContext) -> np.ndarray:
        states = eigenstates(ctx)
        ct, st = np.cos(self.theta), np.sin(self.theta)
        if self.coefficients is None:
            a, b = self.pair
            vec = ct * states[a - 1].amplitudes + st * states[b - 1].amplitudes
        else:
            c1, c2, c3, c4 = self.coefficients
            pos = c1 * states[0].amplitudes + c2 * states[1].amplitudes
            neg = c3 * states[2].amplitudes + c4 * states[3].amplitudes
            npos, nneg = np.linalg.norm(pos), np.linalg.norm(neg)
            vec = ct * (pos / npos if npos > 0 else pos) \
                + st * (neg / nneg if nneg > 0 else neg)
        return vec


def _spectral(ctx: DiracContext):
    h = hamiltonian(ctx).mat
    w, v = np.linalg.eigh(h)
    return h, w, v


def evolution_factor(ctx: DiracContext, t: float) -> np.ndarray:
    """exp(-2iHt/hbar) via the spectral decomposition of H."""
    _, w, v = _spectral(ctx)
    return v @ np.diag(np.exp(-2j * w * t / ctx.hbar)) @ v.conj().T


def zitter_position_operator(ctx: DiracContext, t: float) -> OperatorVector3:
    """Oscillating part of the Heisenberg position operator,

    (i hbar c / 2) [alpha - c H^-1 p] H^-1 (exp(-2iHt/hbar) - 1).
    """
    alpha, _, _ = dirac_matrices()
    _, w, v = _spectral(ctx)
    hinv = v @ np.diag(1.0 / w) @ v.conj().T
    phase = v @ np.diag(np.exp(-2j * w * t / ctx.hbar) - 1.0) @ v.conj().T
    tail = hinv @ phase
    comps = np.stack([
        (0.5j * ctx.hbar * ctx.c)
        * (alpha.comps[i] - ctx.c * ctx.p[i] * hinv) @ tail
        for i in range(3)
    ])
    return OperatorVector3(comps)


def zitter_spin_operator(ctx: DiracContext, t: float) -> OperatorVector3:
    """Oscillating part of the spin, -Z_r x p (p is a number vector here)."""
    zr = zitter_position_operator(ctx, t).comps
    p = ctx.p
    comps = np.stack([
        -(zr[(i + 1) % 3] * p[(i + 2) % 3] - zr[(i + 2) % 3] * p[(i + 1) % 3])
        for i in range(3)
    ])
    return OperatorVector3(comps)


def _expectation(op: OperatorVector3, psi: np.ndarray) -> np.ndarray:
    vals = np.einsum("a,iab,b->i", psi.conj(), op.comps, psi)
    if np.abs(vals.imag).max() > 1e-10 * max(1.0, np.abs(vals).max()):
        raise ValueError("expectation of a Hermitian operator came out complex")
    return vals.real


def zitter_position_expectation(spec: SuperpositionSpec, ctx: DiracContext,
                                t: float) -> np.ndarray:
    """<Psi| Z_r(t) |Psi> by direct 4x4 algebra; a real length 3-vector."""
    return _expectation(zitter_position_operator(ctx, t), spec.state_vector(ctx))


def zitter_spin_expectation(spec: SuperpositionSpec, ctx: DiracContext,
                            t: float) -> np.ndarray:
    """<Psi| Z_s(t) |Psi> by direct 4x4 algebra; a real action 3-vector."""
    return _expectation(zitter_spin_operator(ctx, t), spec.state_vector(ctx))


# --- closed forms -------------------------------------------------------------

def amplitude_frequency(theta: float, ctx: DiracContext) -> tuple[float, float]:
    """Oscillation amplitude and angular frequency of the position wobble,

    A = sin(2 theta) (hbar c / 2 E_p)(m c^2 / E_p),  omega = 2 E_p / hbar,

    for the equal-helicity positive/negative energy mix.
    """
    ep = ctx.energy
    a = np.sin(2.0 * theta) * (ctx.hbar * ctx.c / (2.0 * ep)) \
        * (ctx.mass * ctx.c ** 2 / ep)
    omega = 2.0 * ep / ctx.hbar
    return float(a), float(omega)


def position_closed_form(theta: float, ctx: DiracContext, t: float) -> np.ndarray:
    """-phat A sin(omega t) for the (1, 3) mix."""
    a, omega = amplitude_frequency(theta, ctx)
    return -ctx.phat * a * np.sin(omega * t)


def spin_closed_form(theta: float, ctx: DiracContext, t: float) -> np.ndarray:
    """Spin wobble of the (1, 4) mix for general momentum."""
    px, py, pz = ctx.p
    p = ctx.pnorm
    ep = ctx.energy
    w = 2.0 * ep / ctx.hbar
    cw = np.cos(w * t) - 1.0
    sw = np.sin(w * t)
    ex = -cw * (py ** 2 / (p + pz) + pz) + sw * (px * py / (p + pz))
    ey = cw * (px * py / (p + pz)) - sw * (px ** 2 / (p + pz) + pz)
    ez = cw * px + sw * py
    return -np.sin(2.0 * theta) * (ctx.hbar * ctx.c / (2.0 * ep)) \
        * np.array([ex, ey, ez])


def spin_closed_form_z(theta: float, ctx: DiracContext, t: float) -> np.ndarray:
    """Spin wobble of the (1, 4) mix for momentum along +z,

    sin(2 theta) (c hbar p / E_p) sin(E_p t / hbar)
        [cos(E_p t / hbar) yhat - sin(E_p t / hbar) xhat].
    """
    p = ctx.pnorm
    ep = ctx.energy
    half = ep * t / ctx.hbar
    coeff = np.sin(2.0 * theta) * (ctx.c * ctx.hbar * p / ep) * np.sin(half)
    return coeff * np.array([-np.sin(half), np.cos(half), 0.0])


def alpha_matrix_element_14(ctx: DiracContext) -> np.ndarray:
    """<Psi_1| alpha |Psi_4> in closed form (a complex 3-vector)."""
    px, py = ctx.p[0], ctx.p[1]
    p, pz = ctx.pnorm, ctx.p[2]
    pm = ctx.p_minus
    return np.array([
        1.0 - px * pm / (p * (p + pz)),
        -(1j + py * pm / (p * (p + pz))),
        -pm / p,
    ])


# --- projectors ----------------------------------------------------------------

def projectors(ctx: DiracContext) -> tuple[OperatorMatrix, OperatorMatrix,
                                           OperatorMatrix, OperatorMatrix]:
    """Energy projectors (1 +- H/E_p)/2 and helicity projectors (1 +- 2 Lambda/hbar)/2."""
    h = hamiltonian(ctx).mat
    lam = helicity_operator(ctx).mat
    eye = np.eye(4)
    ep = ctx.energy
    pi_plus = OperatorMatrix(0.5 * (eye + h / ep))
    pi_minus = OperatorMatrix(0.5 * (eye - h / ep))
    pis_plus = OperatorMatrix(0.5 * (eye + 2.0 * lam / ctx.hbar))
    pis_minus = OperatorMatrix(0.5 * (eye - 2.0 * lam / ctx.hbar))
    return pi_plus, pi_minus, pis_plus, pis_minus


# --- SI reporting ---------------------------------------------------------------

PLANCK_H_SI = 6.62607015e-34        # J s
LIGHT_SPEED_SI = 2.99792458e8       # m / s
ELECTRON_MASS_SI = 9.10938188e-31   # kg


def compton_wavelength_si() -> float:
    """h / (m c) for the electron, in meters."""
    return PLANCK_H_SI / (ELECTRON_MASS_SI * LIGHT_SPEED_SI)


def amplitude_frequency_si(theta: float = np.pi / 4.0,
                           p_si: float = 0.0) -> tuple[float, float]:
    """Wobble amplitude (m) and frequency (1/s) for an electron of momentum
    p_si (kg m/s); evaluates the closed forms directly in SI floats."""
    hbar = PLANCK_H_SI / (2.0 * np.pi)
    c = LIGHT_SPEED_SI
    m = ELECTRON_MASS_SI
    ep = np.sqrt((p_si * c) ** 2 + (m * c ** 2) ** 2)
    a = np.sin(2.0 * theta) * (hbar * c / (2.0 * ep)) * (m * c ** 2 / ep)
    omega = 2.0 * ep / hbar
    return float(a), float(omega)
