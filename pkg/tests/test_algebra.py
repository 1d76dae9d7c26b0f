import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amwave.algebra import (
    DimMismatch,
    NonTracelessBasis,
    OperatorMatrix,
    OperatorVector3,
    UnsupportedGenerator,
    anticommutator,
    commutator,
    cross,
    custom_generators,
    dot,
    make_generators,
    structure_constants,
)

SU2_KINDS = ("su2_spin_half", "su2_spin_one")

coeff = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)
vec3 = st.tuples(coeff, coeff, coeff).map(np.array)


def tau_from(gens, r0, r1, r2, r3):
    out = np.einsum("i,ab->iab", np.asarray(r0, float), gens.identity.mat)
    for r, g in zip((r1, r2, r3), gens.generators):
        out = out + np.einsum("i,ab->iab", np.asarray(r, float), g.mat)
    return OperatorVector3(out)


def eta_from(gens, r1, r2, r3):
    sx, sy, sz = gens.generators
    return OperatorVector3(
        np.einsum("i,ab->iab", np.cross(r2, r3), sx.mat)
        + np.einsum("i,ab->iab", np.cross(r3, r1), sy.mat)
        + np.einsum("i,ab->iab", np.cross(r1, r2), sz.mat))


def test_spin_half_matrices():
    gens = make_generators("su2_spin_half", hbar=1.0)
    sx, sy, sz = (g.mat for g in gens.generators)
    np.testing.assert_allclose(sz, np.diag([0.5, -0.5]))
    np.testing.assert_allclose(sx, 0.5 * np.array([[0, 1], [1, 0]]))
    np.testing.assert_allclose(sy, 0.5 * np.array([[0, -1j], [1j, 0]]))


def test_spin_one_matrices():
    gens = make_generators("su2_spin_one", hbar=1.0)
    sz = gens.generators[2].mat
    np.testing.assert_allclose(sz, np.diag([1.0, 0.0, -1.0]))
    sx = gens.generators[0].mat
    np.testing.assert_allclose(
        sx, np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]]) / np.sqrt(2))


def test_identity_kind():
    gens = make_generators("identity")
    assert gens.dim == 1
    assert gens.generators == ()
    assert len(gens.basis) == 1
    np.testing.assert_allclose(gens.basis[0].mat, np.array([[1.0]]))


def test_unsupported_kind():
    with pytest.raises(UnsupportedGenerator):
        make_generators("so5")


@pytest.mark.parametrize("kind", SU2_KINDS)
@pytest.mark.parametrize("hbar", [1.0, 0.5, 3.7])
def test_su2_algebra(kind, hbar):
    gens = make_generators(kind, hbar=hbar)
    sx, sy, sz = gens.generators
    for a, b, c in ((sx, sy, sz), (sy, sz, sx), (sz, sx, sy)):
        assert (commutator(a, b) - 1j * hbar * c).norm <= 1e-12 * max(1.0, hbar)
        assert commutator(a, a).norm == 0.0


def test_hermiticity_all_kinds():
    for kind in ("identity",) + SU2_KINDS + ("su3_gellmann",):
        gens = make_generators(kind)
        for g in gens.basis:
            assert (g - g.dagger).norm <= 1e-12


def test_gellmann_commutator():
    gens = make_generators("su3_gellmann")
    g1, g2, g3 = gens.generators[:3]
    assert (commutator(g1, g2) - 2j * g3).norm <= 1e-12


def test_gellmann_normalization():
    gens = make_generators("su3_gellmann")
    for a, ga in enumerate(gens.generators):
        assert abs(ga.trace) <= 1e-12
        for b, gb in enumerate(gens.generators):
            want = 2.0 if a == b else 0.0
            assert abs((ga @ gb).trace - want) <= 1e-12


@pytest.mark.parametrize("kind", SU2_KINDS)
def test_tau_cross_tau_is_ihbar_eta(kind):
    # 100 random coefficient draws per representation
    gens = make_generators(kind)
    rng = np.random.default_rng(101)
    for _ in range(100):
        r0, r1, r2, r3 = (rng.uniform(-1, 1, 3) for _ in range(4))
        tau = tau_from(gens, r0, r1, r2, r3)
        eta = eta_from(gens, r1, r2, r3)
        assert (cross(tau, tau) - 1j * gens.hbar * eta).norm <= 1e-12


def test_cross_example_xz():
    # R_1 = x, R_3 = z: tau x tau = i hbar (z x x) S_y = i hbar yhat S_y
    gens = make_generators("su2_spin_half")
    zero = np.zeros(3)
    tau = tau_from(gens, zero, np.array([1.0, 0, 0]), zero, np.array([0, 0, 1.0]))
    want = OperatorVector3.from_coeff([0.0, 1.0, 0.0], 1j * gens.generators[1])
    assert (cross(tau, tau) - want).norm <= 1e-12


def test_cross_commuting_limit():
    rng = np.random.default_rng(7)
    u3, v3 = rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3)
    u = OperatorVector3.from_numeric(u3, 2)
    v = OperatorVector3.from_numeric(v3, 2)
    want = OperatorVector3.from_numeric(np.cross(u3, v3), 2)
    assert (cross(u, v) - want).norm <= 1e-12
    assert (cross(u, v) + cross(v, u)).norm <= 1e-12


def test_dot_examples():
    gens = make_generators("su2_spin_half")
    zero = np.zeros(3)
    tau = tau_from(gens, zero, np.array([1.0, 0, 0]), zero, np.array([0, 0, 1.0]))
    # S_x^2 + S_z^2 = hbar^2/2 for spin-1/2
    want = 0.5 * OperatorMatrix.identity(2)
    assert (dot(tau, tau) - want).norm <= 1e-12
    # khat = z picks out the S_z coefficient
    assert (dot(np.array([0, 0, 1.0]), tau) - gens.generators[2]).norm <= 1e-12
    # ordered dots coincide in the commuting limit
    rng = np.random.default_rng(3)
    u = OperatorVector3.from_numeric(rng.uniform(-1, 1, 3), 3)
    v = OperatorVector3.from_numeric(rng.uniform(-1, 1, 3), 3)
    assert (dot(u, v) - dot(v, u)).norm <= 1e-14


def test_dim_mismatch():
    a = OperatorMatrix.identity(2)
    b = OperatorMatrix.identity(3)
    with pytest.raises(DimMismatch):
        commutator(a, b)
    with pytest.raises(DimMismatch):
        a @ b
    u = OperatorVector3.from_numeric([1, 0, 0], 2)
    v = OperatorVector3.from_numeric([1, 0, 0], 3)
    with pytest.raises(DimMismatch):
        cross(u, v)
    with pytest.raises(DimMismatch):
        dot(u, v)


SU3_F = {
    (1, 2, 3): 1.0,
    (1, 4, 7): 0.5, (2, 4, 6): 0.5, (2, 5, 7): 0.5, (3, 4, 5): 0.5,
    (1, 5, 6): -0.5, (3, 6, 7): -0.5,
    (4, 5, 8): np.sqrt(3) / 2, (6, 7, 8): np.sqrt(3) / 2,
}


def test_su3_structure_constants():
    f, d = structure_constants(make_generators("su3_gellmann"))
    for (a, b, c), want in SU3_F.items():
        assert abs(f[a - 1, b - 1, c - 1] - want) <= 1e-12
    # total antisymmetry of f, total symmetry of d
    assert np.abs(f + np.transpose(f, (0, 2, 1))).max() <= 1e-12
    assert np.abs(f + np.transpose(f, (1, 0, 2))).max() <= 1e-12
    assert np.abs(d - np.transpose(d, (0, 2, 1))).max() <= 1e-12
    assert np.abs(d - np.transpose(d, (1, 0, 2))).max() <= 1e-12
    # nothing survives outside the nine listed triples and their images
    listed = np.zeros((8, 8, 8), dtype=bool)
    for (a, b, c) in SU3_F:
        for p in ((a, b, c), (b, c, a), (c, a, b), (a, c, b), (c, b, a), (b, a, c)):
            listed[p[0] - 1, p[1] - 1, p[2] - 1] = True
    assert np.abs(f[~listed]).max() <= 1e-12


def test_structure_constants_rejects_traced_basis():
    bad = custom_generators([np.eye(2)])
    with pytest.raises(NonTracelessBasis):
        structure_constants(bad)
    with pytest.raises(NonTracelessBasis):
        structure_constants(make_generators("identity"))


def test_anticommutator_gellmann():
    gens = make_generators("su3_gellmann")
    g1 = gens.generators[0]
    # {G_a, G_a} = 4/N + 2 d_aa c G_c reduces on the diagonal entries
    acc = anticommutator(g1, g1)
    assert abs(acc.trace - 4.0) <= 1e-12  # tr = 2 tr(G1^2) = 4


@settings(max_examples=60, deadline=None)
@given(a=st.tuples(*[coeff] * 6), b=st.tuples(*[coeff] * 2))
def test_eta_cross_eta_vanishes_for_coplanar_triples(a, b):
    # eta x eta = i*hbar*det(R1, R2, R3) * (R1 S_x + R2 S_y + R3 S_z), so it
    # cancels exactly when the three coefficient vectors share a plane --
    # which every solution family guarantees
    e1 = np.array([1.0, 0.0, 0.0])
    e2 = np.array([b[0], 1.0, b[1]])
    r1 = a[0] * e1 + a[1] * e2
    r2 = a[2] * e1 + a[3] * e2
    r3 = a[4] * e1 + a[5] * e2
    gens = make_generators("su2_spin_half")
    eta = eta_from(gens, r1, r2, r3)
    assert cross(eta, eta).norm <= 1e-12


def test_eta_cross_eta_needs_coplanarity():
    gens = make_generators("su2_spin_half")
    r1, r2, r3 = np.eye(3)  # independent triple: determinant 1
    eta = eta_from(gens, r1, r2, r3)
    tau = tau_from(gens, np.zeros(3), r1, r2, r3)
    assert (cross(eta, eta) - 1j * gens.hbar * tau).norm <= 1e-12
    assert cross(eta, eta).norm > 0.1


@settings(max_examples=60, deadline=None)
@given(u=vec3, v=vec3)
def test_cross_antisymmetry_commuting(u, v):
    uu = OperatorVector3.from_numeric(u, 3)
    vv = OperatorVector3.from_numeric(v, 3)
    assert (cross(uu, vv) + cross(vv, uu)).norm <= 1e-12
