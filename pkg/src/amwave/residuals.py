"""Residual evaluation for every equation set and condition list.

Each evaluator turns an equation into a harmonic residual field by exact
termwise algebra (no grid); the reported number is the field's sup norm
over harmonics and components, relative to max(1, |amplitude scale|), so
a vanishing equation yields a residual at machine precision and the zero
family passes trivially.

The g- and g^2-graded conditions are reported with their coupling factors
stripped, so pass/fail reflects the operator bracket itself rather than
the smallness of g.  Low-level ``*_fields`` functions return the named
residual fields for callers that need amplitudes (scaling tests, gauge
conjugation); the ``*_conditions``/``*_residuals`` wrappers produce
reports.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fields import (
    HarmonicScalarField,
    HarmonicVectorField,
    SolutionFamily,
    WaveContext,
    build_potentials,
    comm_ss,
    comm_sv,
    curl,
    div,
    dt,
    fields_from_potentials,
    grad,
    laplacian,
    ncross,
    ndot,
    vcross,
    vdot,
)

DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class ResidualItem:
    name: str
    residual: float
    tolerance: float
    passed: bool

    def __post_init__(self):
        object.__setattr__(self, "residual", float(self.residual))
        object.__setattr__(self, "tolerance", float(self.tolerance))
        object.__setattr__(self, "passed", bool(self.passed))


@dataclass(frozen=True)
class ResidualReport:
    label: str
    items: tuple[ResidualItem, ...]

    @property
    def overall_pass(self) -> bool:
        return all(item.passed for item in self.items)

    def failed(self) -> tuple[ResidualItem, ...]:
        return tuple(item for item in self.items if not item.passed)

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "items": [
                {"name": i.name, "residual": float(i.residual),
                 "tolerance": float(i.tolerance), "pass": bool(i.passed)}
                for i in self.items
            ],
            "overall_pass": bool(self.overall_pass),
        }


def _scale(a: HarmonicVectorField) -> float:
    return max(1.0, a.norm)


def report_from_fields(label: str, named_fields, tol: float,
                       scale: float) -> ResidualReport:
    items = []
    for name, field in named_fields:
        res = field.norm / scale
        items.append(ResidualItem(name, res, tol, res <= tol))
    return ResidualReport(label, tuple(items))


# --- full gauge-field equations ------------------------------------------------

def ym_equation_fields(a: HarmonicVectorField, phi: HarmonicScalarField,
                       ctx: WaveContext):
    """The four full field equations, self-interaction terms included."""
    b, e = fields_from_potentials(a, phi, ctx)
    ig = 1j * ctx.g
    inv_c = 1.0 / ctx.c
    return [
        ("div_E", div(e) + ig * (vdot(a, e) - vdot(e, a))),
        ("faraday", (-inv_c) * dt(b) - curl(e)
         + ig * (comm_sv(phi, b) - vcross(a, e) - vcross(e, a))),
        ("div_B", div(b) + ig * (vdot(a, b) - vdot(b, a))),
        ("ampere", (-inv_c) * dt(e) + curl(b)
         + ig * (comm_sv(phi, e) + vcross(a, b) + vcross(b, a))),
    ]


def full_ym_residuals(a: HarmonicVectorField, phi: HarmonicScalarField,
                      ctx: WaveContext, tol: float = DEFAULT_TOL) -> ResidualReport:
    return report_from_fields("full-ym", ym_equation_fields(a, phi, ctx),
                              tol, _scale(a))


def maxwell_type_fields(b: HarmonicVectorField, e: HarmonicVectorField,
                        ctx: WaveContext):
    """The four field equations with every self-interaction term dropped."""
    inv_c = 1.0 / ctx.c
    return [
        ("div_E", div(e)),
        ("faraday", curl(e) + inv_c * dt(b)),
        ("div_B", div(b)),
        ("ampere", curl(b) - inv_c * dt(e)),
    ]


def maxwell_type_residuals(b: HarmonicVectorField, e: HarmonicVectorField,
                           ctx: WaveContext, tol: float = DEFAULT_TOL) -> ResidualReport:
    scale = max(1.0, b.norm, e.norm)
    return report_from_fields("maxwell-type", maxwell_type_fields(b, e, ctx),
                              tol, scale)


# --- graded condition sets ------------------------------------------------------

def wca_condition_fields(a: HarmonicVectorField, phi: HarmonicScalarField,
                         ctx: WaveContext):
    """The six conditions left after discarding the g^2 self-interactions."""
    kn = ctx.knorm
    m = vcross(a, a)
    n = comm_sv(phi, a)
    return [
        ("wca1_scalar_wave", (1j * kn) * div(a) - laplacian(phi)),
        ("wca2_phi_diva", comm_ss(phi, div(a))),
        ("wca3_induction", 2.0 * kn * m + 1j * curl(n)),
        ("wca4_div_m", div(m)),
        ("wca5_vector_wave", grad(div(a)) - laplacian(a) - (kn ** 2) * a
         - (1j * kn) * grad(phi)),
        ("wca6_ampere_bracket", (1j * kn) * n - vcross(a, curl(a))
         - vcross(curl(a), a) + curl(m) + comm_sv(phi, grad(phi))),
    ]


def wca_conditions(fam: SolutionFamily, tol: float = DEFAULT_TOL) -> ResidualReport:
    a, phi = build_potentials(fam)
    return report_from_fields("wca", wca_condition_fields(a, phi, fam.ctx),
                              tol, _scale(a))


def exact_condition_fields(a: HarmonicVectorField, phi: HarmonicScalarField,
                           ctx: WaveContext):
    """All eight conditions of the unapproximated equations.

    Items 1 and 6 are the coupling-free wave conditions; 2, 4, 5 and 7
    carry one power of g and 3, 8 two (factors stripped, see module doc).
    Only 3 and 8 obstruct generic noncommuting amplitudes.
    """
    kn = ctx.knorm
    m = vcross(a, a)
    n = comm_sv(phi, a)
    return [
        ("exact1_scalar_wave", (1j * kn) * div(a) - laplacian(phi)),
        ("exact2_phi_diva", comm_ss(phi, div(a))),
        ("exact3_a_n_bracket", vdot(a, n) - vdot(n, a)),
        ("exact4_induction", 2.0 * kn * m + 1j * curl(n)),
        ("exact5_div_m", div(m)),
        ("exact6_vector_wave", grad(div(a)) - laplacian(a) - (kn ** 2) * a
         - (1j * kn) * grad(phi)),
        ("exact7_ampere_bracket", kn * n + 1j * vcross(a, curl(a))
         + 1j * vcross(curl(a), a) - 1j * curl(m) - 1j * comm_sv(phi, grad(phi))),
        ("exact8_phi_n_bracket", comm_sv(phi, n) + vcross(a, m) + vcross(m, a)),
    ]


def exact_conditions(fam: SolutionFamily, tol: float = DEFAULT_TOL) -> ResidualReport:
    a, phi = build_potentials(fam)
    return report_from_fields("exact", exact_condition_fields(a, phi, fam.ctx),
                              tol, _scale(a))


def zca_condition_fields(a: HarmonicVectorField, phi: HarmonicScalarField,
                         ctx: WaveContext):
    """The six spatial conditions of the zero-coupling (Maxwell-type) system."""
    kn = ctx.knorm
    m = vcross(a, a)
    n = comm_sv(phi, a)
    return [
        ("zca1_div_m", div(m)),
        ("zca2_curl_n", curl(n) - (2j * kn) * m),
        ("zca3_scalar_wave", (1j * kn) * div(a) - laplacian(phi)),
        ("zca4_div_n", div(n)),
        ("zca5_vector_wave", -1.0 * grad(div(a)) + laplacian(a) + (kn ** 2) * a
         + (1j * kn) * grad(phi)),
        ("zca6_n_curl_m", (2j * kn) * n + curl(m)),
    ]


def zca_conditions(fam: SolutionFamily, tol: float = DEFAULT_TOL) -> ResidualReport:
    a, phi = build_potentials(fam)
    return report_from_fields("zca", zca_condition_fields(a, phi, fam.ctx),
                              tol, _scale(a))


# --- difference terms between the two approximations ----------------------------

def w_term_fields(a: HarmonicVectorField, phi: HarmonicScalarField,
                  ctx: WaveContext):
    """The four terms separating the approximated equation sets.

    These carry their explicit i*g factors (so they vanish identically at
    g = 0) and vanish on every solution family.
    """
    ig = 1j * ctx.g
    at = (1.0 / ctx.c) * dt(a)
    gp = grad(phi)
    return [
        ("w1", (-ig) * (vdot(a, at) - vdot(at, a) + vdot(a, gp) - vdot(gp, a))),
        ("w2", ig * (vcross(a, at) + vcross(at, a) + comm_sv(phi, curl(a))
                     + vcross(gp, a) + vcross(a, gp))),
        ("w3", (-ig) * div(vcross(a, a))),
        ("w4", (-ig) * (comm_sv(phi, at) + comm_sv(phi, gp)
                        - vcross(a, curl(a)) - vcross(curl(a), a))),
    ]


def w_terms(a: HarmonicVectorField, phi: HarmonicScalarField,
            ctx: WaveContext, tol: float = DEFAULT_TOL) -> ResidualReport:
    return report_from_fields("w-terms", w_term_fields(a, phi, ctx),
                              tol, _scale(a))


# --- transversality / orthogonality battery --------------------------------------

def perpendicular_part(v: HarmonicVectorField, direction: np.ndarray) -> HarmonicVectorField:
    """Componentwise projection of every amplitude orthogonal to a unit vector."""
    nhat = np.asarray(direction, dtype=float)
    terms = []
    for m, amp in v.terms:
        along = np.einsum("i,iab->ab", nhat, amp.comps)
        perp = amp.comps - np.einsum("i,ab->iab", nhat, along)
        terms.append((m, type(amp)(perp)))
    return HarmonicVectorField(v.ctx, tuple(terms))


def property_battery_fields(b: HarmonicVectorField, e: HarmonicVectorField,
                            ctx: WaveContext):
    khat = ctx.khat
    return [
        ("khat_dot_B", ndot(khat, b)),
        ("khat_dot_E", ndot(khat, e)),
        ("B_dot_E", vdot(b, e)),
        ("B_minus_khat_cross_E", b - ncross(khat, e)),
        ("E_minus_B_cross_khat", e + ncross(khat, b)),
        ("B_cross_B", vcross(b, b)),
        ("E_cross_E", vcross(e, e)),
        ("ExB_perpendicular_part", perpendicular_part(vcross(e, b), khat)),
    ]


def property_battery(b: HarmonicVectorField, e: HarmonicVectorField,
                     ctx: WaveContext, tol: float = DEFAULT_TOL) -> ResidualReport:
    scale = max(1.0, b.norm, e.norm)
    return report_from_fields("properties", property_battery_fields(b, e, ctx),
                              tol, scale)
