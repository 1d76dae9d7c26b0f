"""Command-line harness: randomized verification suites, report files, and
time-series export.

Determinism: randomness comes from numpy's PCG64 generator; trial i of a
run draws from ``default_rng(SeedSequence(seed).spawn(trials)[i])``, so a
given (config, seed) produces bit-identical reports regardless of worker
count or scheduling.  Reports carry no timestamps for the same reason.

Exit codes: 0 all checks passed, 1 numerical failure (failing items are
listed), 2 usage or configuration error.  The environment variable
AMWAVE_THREADS caps the worker pool used to spread trials.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields as dataclass_fields

import numpy as np
import yaml

from .algebra import cross as opcross
from .algebra import make_generators, structure_constants
from .fields import (
    SolutionFamily,
    WaveContext,
    build_fields,
    build_potentials,
    random_family,
    vector_field,
)
from .poynting import amw_flux, em_flux, flux_quadrature, flux_quadrature_blocks
from .relativity import boosted_residuals, gauge_conjugate, unitary_exponential
from .residuals import (
    ResidualItem,
    exact_conditions,
    full_ym_residuals,
    maxwell_type_residuals,
    property_battery,
    report_from_fields,
    wca_condition_fields,
    wca_conditions,
    zca_conditions,
)
from .zitter import (
    DiracContext,
    SuperpositionSpec,
    position_closed_form,
    spin_closed_form,
    zitter_position_expectation,
    zitter_spin_expectation,
)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SUITES = ("wca", "zca", "exact", "full", "boost", "gauge", "zitter", "poynting", "su3")

# Default per-item tolerances; analytic residuals are exact termwise
# algebra, boosted-frame checks allow contraction roundoff, and the
# quadrature oracle is limited by the trapezoid sample count.
SUITE_TOL = {
    "wca": 1e-12, "zca": 1e-12, "exact": 1e-12, "full": 1e-12,
    "gauge": 1e-12, "su3": 1e-12, "zitter": 1e-12,
    "boost": 1e-10, "poynting": 1e-8,
}

SU3_F_VALUES = {
    (1, 2, 3): 1.0,
    (1, 4, 7): 0.5, (2, 4, 6): 0.5, (2, 5, 7): 0.5, (3, 4, 5): 0.5,
    (1, 5, 6): -0.5, (3, 6, 7): -0.5,
    (4, 5, 8): np.sqrt(3.0) / 2.0, (6, 7, 8): np.sqrt(3.0) / 2.0,
}


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    suite: str
    trials: int = 100
    seed: int = 42
    tolerance: float | None = None
    generator: str = "both"
    hbar: float = 1.0
    c: float = 1.0
    coupling: float = 0.1
    k: tuple[float, float, float] | None = None
    R: tuple[tuple[float, float, float], ...] | None = None
    velocity: float = 0.5
    boost_axis: str = "z"
    theta: float = float(np.pi / 4.0)
    pair: tuple[int, int] = (1, 4)
    momentum: tuple[float, float, float] = (0.0, 0.0, 0.8)
    steps: int = 1000
    t_max: float | None = None
    samples: int = 10000
    out: str | None = None
    timeseries: str | None = None

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ConfigError(f"unknown suite {self.suite!r}; pick one of {SUITES}")
        if self.trials < 1:
            raise ConfigError("trials must be >= 1")
        if self.tolerance is not None and self.tolerance <= 0:
            raise ConfigError("tolerance must be positive")
        if self.generator not in ("both", "su2_spin_half", "su2_spin_one",
                                  "su3_gellmann"):
            raise ConfigError(f"unknown generator kind {self.generator!r}")
        if self.steps < 0:
            raise ConfigError("steps must be >= 0")
        if self.samples < 2:
            raise ConfigError("samples must be >= 2")
        self.seed = int(self.seed)

    @property
    def tol(self) -> float:
        return SUITE_TOL[self.suite] if self.tolerance is None else self.tolerance

    def canonical(self) -> dict:
        # output paths are run metadata, not verification inputs; leaving
        # them out keeps report bodies byte-identical across reruns
        out = {}
        for f in dataclass_fields(self):
            if f.name in ("out", "timeseries"):
                continue
            val = getattr(self, f.name)
            if isinstance(val, tuple):
                val = list(list(v) if isinstance(v, tuple) else v for v in val)
            out[f.name] = val
        return out


_SECTION_KEYS = {
    "family": ("generator", "hbar", "c", "coupling", "k", "R"),
    "boost": ("velocity", "boost_axis"),
    "zitter": ("theta", "pair", "momentum", "steps", "t_max"),
    "poynting": ("samples",),
    "output": ("out", "timeseries"),
}
_TOP_KEYS = ("suite", "trials", "seed", "tolerance")


def config_from_file(path: str, overrides: dict | None = None,
                     fallback_suite: str | None = None) -> RunConfig:
    """Load a YAML config (top-level keys plus nested sections)."""
    try:
        with open(path) as fh:
            raw = yaml.safe_load(fh) or {}
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"config {path} is not valid YAML: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config root must be a mapping")
    flat: dict = {}
    for key, val in raw.items():
        if key in _TOP_KEYS:
            flat[key] = val
        elif key in _SECTION_KEYS:
            if not isinstance(val, dict):
                raise ConfigError(f"section {key!r} must be a mapping")
            for sub, subval in val.items():
                if sub == "axis" and key == "boost":
                    sub = "boost_axis"
                if sub == "report" and key == "output":
                    sub = "out"
                if sub not in _SECTION_KEYS[key]:
                    raise ConfigError(f"unknown key {key}.{sub}")
                flat[sub] = subval
        else:
            raise ConfigError(f"unknown top-level key {key!r}")
    if overrides:
        flat.update(overrides)
    for name in ("k", "momentum"):
        if flat.get(name) is not None:
            flat[name] = tuple(float(v) for v in flat[name])
    if flat.get("pair") is not None:
        flat["pair"] = tuple(int(v) for v in flat["pair"])
    if flat.get("R") is not None:
        flat["R"] = tuple(tuple(float(x) for x in row) for row in flat["R"])
    if "suite" not in flat:
        if fallback_suite is None:
            raise ConfigError("config must name a suite")
        flat["suite"] = fallback_suite
    try:
        return RunConfig(**flat)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc


# --- trial plumbing ------------------------------------------------------------

def _worker_count(n: int) -> int:
    env = os.environ.get("AMWAVE_THREADS")
    try:
        cap = int(env) if env else (os.cpu_count() or 1)
    except ValueError:
        raise ConfigError(f"AMWAVE_THREADS must be an integer, got {env!r}")
    return max(1, min(cap, n))


def _map_trials(fn, cfg: RunConfig) -> list[list[ResidualItem]]:
    rngs = [np.random.default_rng(s)
            for s in np.random.SeedSequence(cfg.seed).spawn(cfg.trials)]
    args = list(enumerate(rngs))
    workers = _worker_count(cfg.trials)
    if workers == 1:
        results = [fn(i, rng) for i, rng in args]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda a: fn(*a), args))
    return results


def _trial_kind(cfg: RunConfig, i: int) -> str:
    if cfg.suite == "su3":
        return "su3_gellmann"
    if cfg.generator == "both":
        return "su2_spin_half" if i % 2 == 0 else "su2_spin_one"
    return cfg.generator


def _trial_family(cfg: RunConfig, i: int, rng, **kwargs) -> SolutionFamily:
    gens = make_generators(_trial_kind(cfg, i), hbar=cfg.hbar)
    if cfg.R is not None:
        k = cfg.k if cfg.k is not None else (0.0, 0.0, 1.0)
        ctx = WaveContext(generators=gens, k=np.array(k), c=cfg.c, g=cfg.coupling)
        return SolutionFamily(ctx=ctx, R=tuple(np.array(r) for r in cfg.R))
    return random_family(gens, rng, k=None if cfg.k is None else np.array(cfg.k),
                         c=cfg.c, g=cfg.coupling, **kwargs)


def _prefix(i: int, items) -> list[ResidualItem]:
    return [ResidualItem(f"trial{i:03d}/{it.name}", it.residual, it.tolerance,
                         it.passed) for it in items]


# --- suites ----------------------------------------------------------------------

def _suite_wca(cfg: RunConfig) -> list[ResidualItem]:
    def one(i, rng):
        return _prefix(i, wca_conditions(_trial_family(cfg, i, rng), cfg.tol).items)
    return [it for chunk in _map_trials(one, cfg) for it in chunk]


def _suite_zca(cfg: RunConfig) -> list[ResidualItem]:
    def one(i, rng):
        fam = _trial_family(cfg, i, rng)
        items = list(zca_conditions(fam, cfg.tol).items)
        b, e = build_fields(fam)
        items += list(maxwell_type_residuals(b, e, fam.ctx, cfg.tol).items)
        items += list(property_battery(b, e, fam.ctx, cfg.tol).items)
        return _prefix(i, items)
    return [it for chunk in _map_trials(one, cfg) for it in chunk]


def _suite_exact(cfg: RunConfig) -> list[ResidualItem]:
    def one(i, rng):
        return _prefix(i, exact_conditions(_trial_family(cfg, i, rng), cfg.tol).items)
    return [it for chunk in _map_trials(one, cfg) for it in chunk]


def _suite_full(cfg: RunConfig) -> list[ResidualItem]:
    def one(i, rng):
        fam = _trial_family(cfg, i, rng)
        a, phi = build_potentials(fam)
        return _prefix(i, full_ym_residuals(a, phi, fam.ctx, cfg.tol).items)
    return [it for chunk in _map_trials(one, cfg) for it in chunk]


def _suite_boost(cfg: RunConfig) -> list[ResidualItem]:
    def one(i, rng):
        fam = _trial_family(cfg, i, rng)
        items: list[ResidualItem] = []
        for v in (cfg.velocity, -cfg.velocity):
            rep = boosted_residuals(fam, v * cfg.c, axis=cfg.boost_axis, tol=cfg.tol)
            items += [ResidualItem(f"v={v:+g}c/{it.name}", it.residual,
                                   it.tolerance, it.passed) for it in rep.items]
        return _prefix(i, items)
    return [it for chunk in _map_trials(one, cfg) for it in chunk]


def _suite_gauge(cfg: RunConfig) -> list[ResidualItem]:
    def one(i, rng):
        fam = _trial_family(cfg, i, rng)
        gens = fam.ctx.generators
        herm = sum((float(c) * g for c, g in
                    zip(rng.uniform(-1.0, 1.0, len(gens.generators)),
                        gens.generators)),
                   start=0.0 * gens.identity)
        u = unitary_exponential(herm)
        a, phi = build_potentials(fam)
        ac, pc = gauge_conjugate(a, u), gauge_conjugate(phi, u)
        before = full_ym_residuals(a, phi, fam.ctx, cfg.tol)
        after = full_ym_residuals(ac, pc, fam.ctx, cfg.tol)
        drift = max(abs(x.residual - y.residual)
                    for x, y in zip(before.items, after.items))
        conj_wca = report_from_fields(
            "wca", wca_condition_fields(ac, pc, fam.ctx), cfg.tol,
            max(1.0, a.norm))
        worst = max(it.residual for it in conj_wca.items)
        items = [
            ResidualItem("residual_norm_invariance", drift, cfg.tol,
                         drift <= cfg.tol),
            ResidualItem("conjugated_wca", worst, cfg.tol, worst <= cfg.tol),
        ]
        return _prefix(i, items)
    return [it for chunk in _map_trials(one, cfg) for it in chunk]


def _zitter_draw(cfg: RunConfig, rng) -> DiracContext:
    p = rng.uniform(-1.0, 1.0, 3)
    p[2] = abs(p[2]) + 0.2  # stay clear of the -z polar singularity
    return DiracContext(p=p, hbar=cfg.hbar, c=cfg.c)


def _suite_zitter(cfg: RunConfig) -> list[ResidualItem]:
    def one(i, rng):
        ctx = _zitter_draw(cfg, rng)
        theta = rng.uniform(0.0, np.pi / 2.0)
        t = rng.uniform(0.0, 4.0 * np.pi * ctx.hbar / ctx.energy)
        zr = zitter_position_expectation(SuperpositionSpec(theta, (1, 3)), ctx, t)
        pos_err = float(np.abs(zr - position_closed_form(theta, ctx, t)).max())
        zs = zitter_spin_expectation(SuperpositionSpec(theta, (1, 4)), ctx, t)
        spin_err = float(np.abs(zs - spin_closed_form(theta, ctx, t)).max())
        pure = float(np.abs(zitter_position_expectation(
            SuperpositionSpec(0.0, (1, 3)), ctx, t)).max())
        samehel = float(np.abs(zitter_spin_expectation(
            SuperpositionSpec(theta, (1, 3)), ctx, t)).max())
        items = [
            ResidualItem("position_vs_closed", pos_err, cfg.tol,
                         pos_err <= cfg.tol),
            ResidualItem("spin_vs_closed", spin_err, cfg.tol,
                         spin_err <= cfg.tol),
            ResidualItem("pure_energy_zero", pure, 1e-14, pure <= 1e-14),
            ResidualItem("same_helicity_spin_zero", samehel, 1e-14,
                         samehel <= 1e-14),
        ]
        return _prefix(i, items)
    return [it for chunk in _map_trials(one, cfg) for it in chunk]


def _suite_poynting(cfg: RunConfig) -> list[ResidualItem]:
    def one(i, rng):
        fam = _trial_family(cfg, i, rng)
        closed = amw_flux(fam)
        quad = flux_quadrature(fam, samples=cfg.samples, r=rng.uniform(-1, 1, 3))
        scale = max(1.0, closed.vector.norm)
        quad_err = (quad - closed.vector).norm / scale
        mixed = flux_quadrature_blocks(fam, samples=cfg.samples)["mixed"].norm / scale
        gens = fam.ctx.generators
        ctx0 = WaveContext(generators=gens, k=fam.ctx.k, c=cfg.c, g=0.0)
        r0 = rng.uniform(-1.0, 1.0, 3)
        fam0 = SolutionFamily(ctx=ctx0, R=(r0,) + tuple(
            np.zeros(3) for _ in gens.generators))
        a01 = -np.cross(ctx0.khat, np.cross(ctx0.khat, r0))
        abelian_err = (amw_flux(fam0).vector - em_flux(a01, ctx0).vector).norm
        items = [
            ResidualItem("quadrature_vs_closed", quad_err, cfg.tol,
                         quad_err <= cfg.tol),
            ResidualItem("mixed_block_average", mixed, 1e-10, mixed <= 1e-10),
            ResidualItem("abelian_equals_em", abelian_err, 1e-10,
                         abelian_err <= 1e-10),
        ]
        return _prefix(i, items)
    return [it for chunk in _map_trials(one, cfg) for it in chunk]


def _suite_su3(cfg: RunConfig) -> list[ResidualItem]:
    gens = make_generators("su3_gellmann")
    f, _ = structure_constants(gens)
    items = []
    for (a, b, c), want in SU3_F_VALUES.items():
        err = abs(f[a - 1, b - 1, c - 1] - want)
        items.append(ResidualItem(f"f{a}{b}{c}", err, cfg.tol, err <= cfg.tol))
    anti = float(np.abs(f + np.transpose(f, (0, 2, 1))).max())
    items.append(ResidualItem("f_antisymmetry", anti, cfg.tol, anti <= cfg.tol))
    listed = np.zeros_like(f, dtype=bool)
    for (a, b, c) in SU3_F_VALUES:
        for perm in ((a, b, c), (b, c, a), (c, a, b), (a, c, b), (c, b, a), (b, a, c)):
            listed[perm[0] - 1, perm[1] - 1, perm[2] - 1] = True
    stray = float(np.abs(f[~listed]).max())
    items.append(ResidualItem("f_unlisted_vanish", stray, cfg.tol, stray <= cfg.tol))

    def one(i, rng):
        fam = _trial_family(cfg, i, rng)
        return _prefix(i, zca_conditions(fam, cfg.tol).items)
    per_trial = [it for chunk in _map_trials(one, cfg) for it in chunk]
    return items + per_trial


_SUITE_FNS = {
    "wca": _suite_wca, "zca": _suite_zca, "exact": _suite_exact,
    "full": _suite_full, "boost": _suite_boost, "gauge": _suite_gauge,
    "zitter": _suite_zitter, "poynting": _suite_poynting, "su3": _suite_su3,
}


def run_suite(cfg: RunConfig) -> dict:
    items = _SUITE_FNS[cfg.suite](cfg)
    failed = [it for it in items if not it.passed]
    return {
        "suite": cfg.suite,
        "config": cfg.canonical(),
        "rng": "numpy PCG64; trial i uses SeedSequence(seed).spawn(trials)[i]",
        "items": [
            {"name": it.name, "residual": float(it.residual),
             "tolerance": float(it.tolerance), "pass": bool(it.passed)}
            for it in items
        ],
        "summary": {
            "total": len(items),
            "failed": len(failed),
            "overall_pass": not failed,
        },
    }


def write_report(report: dict, path: str | None):
    body = json.dumps(report, indent=2) + "\n"
    if path is None:
        sys.stdout.write(body)
        return
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(body)
    os.replace(tmp, path)


# --- time series -----------------------------------------------------------------

def zitter_timeseries(cfg: RunConfig) -> tuple[list[str], list[list]]:
    """Rows of (t, numeric expectation, closed form, deviation).

    The observable follows the pair: position wobble for the
    equal-helicity mixes, spin wobble for the opposite-helicity ones.
    Closed-form columns are filled for the (1,3) position and (1,4) spin
    cases and left blank otherwise.
    """
    ctx = DiracContext(p=np.array(cfg.momentum), hbar=cfg.hbar, c=cfg.c)
    spec = SuperpositionSpec(cfg.theta, cfg.pair)
    spin_like = cfg.pair in ((1, 4), (2, 3))
    t_max = cfg.t_max if cfg.t_max is not None else np.pi * ctx.hbar / ctx.energy
    header = ["t", "num_x", "num_y", "num_z",
              "closed_x", "closed_y", "closed_z", "abs_dev"]
    rows = []
    ts = np.linspace(0.0, t_max, cfg.steps) if cfg.steps else []
    for t in ts:
        if spin_like:
            num = zitter_spin_expectation(spec, ctx, t)
            closed = spin_closed_form(cfg.theta, ctx, t) if cfg.pair == (1, 4) else None
        else:
            num = zitter_position_expectation(spec, ctx, t)
            closed = position_closed_form(cfg.theta, ctx, t) if cfg.pair == (1, 3) else None
        if closed is None:
            rows.append([t, *num, "", "", "", ""])
        else:
            rows.append([t, *num, *closed, float(np.abs(num - closed).max())])
    return header, rows


def poynting_timeseries(cfg: RunConfig, rng=None) -> tuple[list[str], list[list]]:
    """Instantaneous flux blocks along khat plus the running average.

    Each block column is the identity part (trace over dimension) of
    khat . (c/4 pi) Re(E) x Re(B) restricted to the named harmonic block.
    """
    rng = rng or np.random.default_rng(cfg.seed)
    fam = _trial_family(cfg, 0, rng)
    ctx = fam.ctx
    b, e = build_fields(fam)
    parts = {
        "first": (vector_field(ctx, {1: e.amplitude(1)}),
                  vector_field(ctx, {1: b.amplitude(1)})),
        "second": (vector_field(ctx, {2: e.amplitude(2)}),
                   vector_field(ctx, {2: b.amplitude(2)})),
    }
    khat = ctx.khat
    d = ctx.dim
    coeff = ctx.c / (4.0 * np.pi)

    def block_value(efld, bfld, t):
        er = efld.eval_at(np.zeros(3), t).hermitian_part()
        br = bfld.eval_at(np.zeros(3), t).hermitian_part()
        val = coeff * np.einsum("i,iab->ab", khat, opcross(er, br).comps)
        return float(np.trace(val).real / d)

    header = ["t", "first", "mixed", "second", "running_avg"]
    rows = []
    ts = np.linspace(0.0, ctx.period, cfg.steps) if cfg.steps else []
    running = 0.0
    for idx, t in enumerate(ts):
        first = block_value(*parts["first"], t)
        second = block_value(*parts["second"], t)
        e1, b1 = parts["first"]
        e2, b2 = parts["second"]
        mixed = block_value(e1, b2, t) + block_value(e2, b1, t)
        total = first + mixed + second
        running += (total - running) / (idx + 1)
        rows.append([t, first, mixed, second, running])
    return header, rows


def write_timeseries(header: list[str], rows: list[list], path: str | None):
    def emit(fh):
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)
    if path is None:
        emit(sys.stdout)
        return
    tmp = path + ".tmp"
    with open(tmp, "w", newline="") as fh:
        emit(fh)
    os.replace(tmp, path)


# --- argument parsing --------------------------------------------------------------

def _momentum(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("momentum must be px,py,pz")
    return tuple(float(p) for p in parts)


def _pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("pair must be i,j")
    return tuple(int(p) for p in parts)


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--config", help="YAML config file")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--tol", type=float, dest="tolerance")
    p.add_argument("--out", help="report / time-series output path")
    p.add_argument("--generator",
                   choices=("both", "su2_spin_half", "su2_spin_one", "su3_gellmann"))
    p.add_argument("--coupling", type=float)
    p.add_argument("--velocity", type=float, help="boost speed in units of c")
    p.add_argument("--theta", type=float)
    p.add_argument("--pair", type=_pair)
    p.add_argument("--momentum", type=_momentum, help="px,py,pz")
    p.add_argument("--steps", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--timeseries", help="CSV output path for time series")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amwave",
        description="verify operator-valued plane-wave solutions and their "
                    "source model")
    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser("verify", help="run a randomized verification suite")
    verify.add_argument("suite", choices=SUITES)
    _add_common(verify)
    for name, descr in (
        ("zitter", "export a trembling-motion time series"),
        ("poynting", "export the flux quadrature decomposition"),
        ("boost", "verify boosted-frame field equations"),
        ("su3-constants", "check the SU(3) structure constants"),
    ):
        p = sub.add_parser(name, help=descr)
        _add_common(p)
    return parser


def _collect_config(args: argparse.Namespace, suite: str) -> RunConfig:
    overrides = {}
    for name in ("trials", "seed", "tolerance", "generator", "coupling",
                 "velocity", "theta", "pair", "momentum", "steps", "samples",
                 "out", "timeseries"):
        val = getattr(args, name, None)
        if val is not None:
            overrides[name] = val
    if args.config:
        cfg = config_from_file(args.config, overrides, fallback_suite=suite)
        if cfg.suite != suite:
            raise ConfigError(
                f"config names suite {cfg.suite!r} but the command asked for {suite!r}")
        return cfg
    return RunConfig(suite=suite, **overrides)


def _cmd_verify(args) -> int:
    cfg = _collect_config(args, args.suite)
    report = run_suite(cfg)
    write_report(report, cfg.out)
    failed = report["summary"]["failed"]
    total = report["summary"]["total"]
    if failed:
        names = [it["name"] for it in report["items"] if not it["pass"]]
        preview = ", ".join(names[:8]) + ("..." if len(names) > 8 else "")
        print(f"FAIL {cfg.suite}: {failed}/{total} items failed ({preview})",
              file=sys.stderr)
        return EXIT_FAIL
    print(f"PASS {cfg.suite}: {total} items", file=sys.stderr)
    return EXIT_PASS


def _cmd_zitter(args) -> int:
    cfg = _collect_config(args, "zitter")
    header, rows = zitter_timeseries(cfg)
    write_timeseries(header, rows, cfg.out or cfg.timeseries)
    devs = [row[-1] for row in rows if isinstance(row[-1], float)]
    worst = max(devs, default=0.0)
    if worst > cfg.tol:
        print(f"FAIL zitter: max |numeric - closed| = {worst:.3e}", file=sys.stderr)
        return EXIT_FAIL
    print(f"PASS zitter: {len(rows)} samples, max deviation {worst:.3e}",
          file=sys.stderr)
    return EXIT_PASS


def _cmd_poynting(args) -> int:
    cfg = _collect_config(args, "poynting")
    header, rows = poynting_timeseries(cfg, rng=np.random.default_rng(cfg.seed))
    write_timeseries(header, rows, cfg.out or cfg.timeseries)
    fam = _trial_family(cfg, 0, np.random.default_rng(cfg.seed))
    closed = amw_flux(fam)
    quad = flux_quadrature(fam, samples=cfg.samples)
    err = (quad - closed.vector).norm / max(1.0, closed.vector.norm)
    if err > cfg.tol:
        print(f"FAIL poynting: quadrature vs closed = {err:.3e}", file=sys.stderr)
        return EXIT_FAIL
    print(f"PASS poynting: quadrature vs closed = {err:.3e}", file=sys.stderr)
    return EXIT_PASS


def _cmd_boost(args) -> int:
    cfg = _collect_config(args, "boost")
    report = run_suite(cfg)
    write_report(report, cfg.out)
    if report["summary"]["failed"]:
        print("FAIL boost", file=sys.stderr)
        return EXIT_FAIL
    print(f"PASS boost: {report['summary']['total']} items", file=sys.stderr)
    return EXIT_PASS


def _cmd_su3(args) -> int:
    cfg = _collect_config(args, "su3")
    report = run_suite(cfg)
    write_report(report, cfg.out)
    if report["summary"]["failed"]:
        print("FAIL su3-constants", file=sys.stderr)
        return EXIT_FAIL
    print(f"PASS su3-constants: {report['summary']['total']} items",
          file=sys.stderr)
    return EXIT_PASS


_COMMANDS = {
    "verify": _cmd_verify,
    "zitter": _cmd_zitter,
    "poynting": _cmd_poynting,
    "boost": _cmd_boost,
    "su3-constants": _cmd_su3,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
