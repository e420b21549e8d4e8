"""Command-line front end: parameter scans, grid evaluations, figure presets,
evolution trajectories, and the analytic-vs-oracle validation suite.

Output is CSV with a '#'-prefixed JSON metadata line (or a single JSON
document with --format json). Identical invocations produce byte-identical
files apart from the metadata timestamp.

Exit codes: 0 success, 1 usage error, 2 numerical/validation failure,
3 truncation failure.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import sys
from datetime import datetime, timezone

import numpy as np

from . import fock
from .analytic import (
    photon_distribution_range,
    photon_moments,
    q_function,
    quadrature_moments,
    truncation_cutoff,
    wigner,
)
from .dynamics import HamiltonianParams, evolve, squeeze_correspondence
from .errors import InternalConsistencyError, TruncationError
from .states import PDState, SectorParams
from .validation import run_validation

SCAN_QUANTITIES = ("g2", "mean_n", "var_x", "var_p", "uncertainty_product", "q", "wigner")
STATE_SCAN_VARS = (
    "beta_abs",
    "beta_phase",
    "r0",
    "theta0",
    "lambda0",
    "r1",
    "theta1",
    "lambda1",
    "psi0",
    "psi1",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with 2; the contract is 1
        raise UsageError(message)


def _add_state_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--beta-abs", type=float, default=1.0, help="coherent amplitude magnitude")
    p.add_argument("--beta-phase", type=float, default=None, help="coherent amplitude phase (rad)")
    p.add_argument("--r0", type=float, default=0.0)
    p.add_argument("--theta0", type=float, default=None)
    p.add_argument("--lambda0", type=float, default=None)
    p.add_argument("--r1", type=float, default=0.0)
    p.add_argument("--theta1", type=float, default=None)
    p.add_argument("--lambda1", type=float, default=None)
    p.add_argument(
        "--psi0", type=float, default=None,
        help="combined sector-0 phase; resolved as theta0 = 2 psi0 with lambda0 = beta phase = 0",
    )
    p.add_argument("--psi1", type=float, default=None)


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> _Parser:
    parser = _Parser(prog="pdsqueeze", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pnd", help="photon-number distribution table")
    _add_state_flags(p)
    _add_output_flags(p)
    p.add_argument("--nmax", type=int, default=None, help="largest n (default: truncation rule)")
    p.add_argument("--oracle", action="store_true", help="add a Fock-oracle column")
    p.add_argument("--dim", type=int, default=256, help="oracle dimension")

    p = sub.add_parser("scan", help="one-dimensional scan of a derived quantity")
    _add_state_flags(p)
    _add_output_flags(p)
    p.add_argument("--quantity", choices=SCAN_QUANTITIES, required=True)
    p.add_argument("--scan", required=True, metavar="VAR=MIN:MAX:N",
                   help=f"scan variable, one of {', '.join(STATE_SCAN_VARS)}; "
                        "for q: alpha_re|alpha_im; for wigner: x|p")
    p.add_argument("--fixed", type=float, default=0.0,
                   help="fixed second coordinate for q/wigner scans")

    p = sub.add_parser("grid", help="phase-space grid of Q or the Wigner function")
    _add_state_flags(p)
    _add_output_flags(p)
    p.add_argument("--quantity", choices=("q", "wigner"), required=True)
    p.add_argument("--grid-x", required=True, metavar="MIN:MAX:N")
    p.add_argument("--grid-y", required=True, metavar="MIN:MAX:N")
    p.add_argument("--oracle", action="store_true", help="add a Fock-oracle column")
    p.add_argument("--dim", type=int, default=256, help="oracle dimension")

    p = sub.add_parser("evolve", help="trajectory under the parity-dependent Hamiltonian")
    _add_output_flags(p)
    p.add_argument("--beta-abs", type=float, default=1.0)
    p.add_argument("--beta-phase", type=float, default=0.0)
    p.add_argument("--omega", type=float, default=0.0)
    p.add_argument("--g0", type=complex, default=0j, help="even-sector coupling, e.g. 0.2 or 0.1+0.05j")
    p.add_argument("--g1", type=complex, default=0j)
    p.add_argument("--t-range", default="0:2:21", metavar="MIN:MAX:N")
    p.add_argument("--dim", type=int, default=256)

    p = sub.add_parser("validate", help="analytic-vs-oracle validation suite")
    _add_output_flags(p)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--n-cases", type=int, default=50)
    p.add_argument("--dim", type=int, default=256)

    p = sub.add_parser("figure", help="emit plot-ready data for a preset figure")
    p.add_argument("number", type=int, choices=range(1, 13), metavar="1..12")
    _add_output_flags(p)
    p.add_argument("--oracle", action="store_true",
                   help="add oracle columns where the preset state is representable")
    p.add_argument("--dim", type=int, default=256)

    return parser


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------


def parse_triple(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"expected MIN:MAX:N, got {text!r}")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}: {exc}") from None
    if not lo < hi:
        raise UsageError(f"range minimum must be below maximum, got {text!r}")
    if n < 2:
        raise UsageError(f"resolution must be at least 2, got {n}")
    return lo, hi, n


def state_params_from_args(args) -> dict:
    """Resolve the state flags into plain parameters, enforcing psi exclusivity."""
    psi_given = args.psi0 is not None or args.psi1 is not None
    angle_given = any(
        v is not None for v in (args.theta0, args.lambda0, args.theta1, args.lambda1)
    )
    if psi_given and angle_given:
        raise UsageError("--psi0/--psi1 cannot be combined with --theta*/--lambda* flags")
    if psi_given and args.beta_phase not in (None, 0.0):
        raise UsageError("--psi0/--psi1 fix the coherent phase to 0; drop --beta-phase")
    if psi_given:
        return {
            "beta_abs": args.beta_abs,
            "beta_phase": 0.0,
            "r0": args.r0,
            "theta0": 2.0 * (args.psi0 or 0.0),
            "lambda0": 0.0,
            "r1": args.r1,
            "theta1": 2.0 * (args.psi1 or 0.0),
            "lambda1": 0.0,
            "psi_convention": True,
        }
    return {
        "beta_abs": args.beta_abs,
        "beta_phase": args.beta_phase or 0.0,
        "r0": args.r0,
        "theta0": args.theta0 or 0.0,
        "lambda0": args.lambda0 or 0.0,
        "r1": args.r1,
        "theta1": args.theta1 or 0.0,
        "lambda1": args.lambda1 or 0.0,
        "psi_convention": False,
    }


def state_from_params(params: dict) -> PDState:
    return PDState(
        beta=params["beta_abs"] * cmath.exp(1j * params["beta_phase"]),
        sector0=SectorParams(params["r0"], params["theta0"], params["lambda0"]),
        sector1=SectorParams(params["r1"], params["theta1"], params["lambda1"]),
    )


def _metadata(command: str, **extra) -> dict:
    meta = {"tool": "pdsqueeze", "command": command, "generated": datetime.now(timezone.utc).isoformat()}
    meta.update(extra)
    return meta


def emit(out_path, fmt: str, metadata: dict, header: list[str], rows: list[list]) -> None:
    def fmt_cell(v):
        if isinstance(v, float):
            return f"{v:.16e}"
        return str(v)

    if fmt == "csv":
        lines = ["# " + json.dumps(metadata, sort_keys=True)]
        lines.append(",".join(header))
        lines.extend(",".join(fmt_cell(v) for v in row) for row in rows)
        text = "\n".join(lines) + "\n"
    else:
        doc = {"metadata": metadata, "columns": header, "rows": rows}
        text = json.dumps(doc, sort_keys=True, indent=1) + "\n"
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_pnd(args) -> int:
    params = state_params_from_args(args)
    s = state_from_params(params)
    n_max = args.nmax if args.nmax is not None else truncation_cutoff(s)
    if n_max < 0:
        raise UsageError(f"--nmax must be nonnegative, got {n_max}")
    p = photon_distribution_range(s, n_max)
    header = ["n", "p_analytic"]
    meta = _metadata("pnd", state=params, nmax=n_max)
    if args.oracle:
        v = fock.prepare_state(args.dim, s)
        if n_max > args.dim - 1:
            raise UsageError(
                f"--nmax {n_max} exceeds the oracle dimension {args.dim}; raise --dim"
            )
        header.append("p_oracle")
        meta["oracle_dim"] = args.dim
        oracle = np.abs(v.amplitudes[: n_max + 1]) ** 2
        rows = [[n, float(p[n]), float(oracle[n])] for n in range(n_max + 1)]
    else:
        rows = [[n, float(p[n])] for n in range(n_max + 1)]
    emit(args.out, args.format, meta, header, rows)
    return 0


def _scan_quantity(s: PDState, quantity: str, point: float, fixed: float) -> float:
    if quantity == "g2":
        g2 = photon_moments(s).g2
        return float("nan") if g2 is None else g2
    if quantity == "mean_n":
        return photon_moments(s).mean_n
    if quantity in ("var_x", "var_p", "uncertainty_product"):
        return getattr(quadrature_moments(s), quantity)
    if quantity == "q":
        return q_function(s, complex(point, fixed))
    if quantity == "wigner":
        return wigner(s, point, fixed)
    raise UsageError(f"unknown quantity {quantity!r}")


def cmd_scan(args) -> int:
    if "=" not in args.scan:
        raise UsageError(f"--scan expects VAR=MIN:MAX:N, got {args.scan!r}")
    var, _, rng_text = args.scan.partition("=")
    var = var.strip()
    lo, hi, n = parse_triple(rng_text)
    values = np.linspace(lo, hi, n)
    params = state_params_from_args(args)

    phase_space_var = (args.quantity == "q" and var in ("alpha_re", "alpha_im")) or (
        args.quantity == "wigner" and var in ("x", "p")
    )
    if not phase_space_var:
        if var not in STATE_SCAN_VARS:
            raise UsageError(f"unknown scan variable {var!r}")
        if args.quantity in ("q", "wigner"):
            raise UsageError(
                f"quantity {args.quantity!r} scans over phase-space variables, not {var!r}"
            )
        if var.startswith("psi") and not params["psi_convention"]:
            params = dict(params, theta0=0.0, lambda0=0.0, theta1=0.0, lambda1=0.0,
                          beta_phase=0.0, psi_convention=True)

    rows = []
    for value in values:
        if phase_space_var:
            s = state_from_params(params)
            if var in ("alpha_re", "x"):
                q = _scan_quantity(s, args.quantity, float(value), args.fixed)
            else:
                q = _scan_quantity(s, args.quantity, args.fixed, float(value))
        else:
            local = dict(params)
            if var.startswith("psi"):
                local["theta" + var[-1]] = 2.0 * float(value)
            else:
                local[var] = float(value)
            s = state_from_params(local)
            q = _scan_quantity(s, args.quantity, 0.0, 0.0)
        rows.append([float(value), q])
    meta = _metadata("scan", state=params, quantity=args.quantity, scan_var=var,
                     scan_range=[lo, hi, n], fixed=args.fixed)
    emit(args.out, args.format, meta, [var, args.quantity], rows)
    return 0


def _grid_rows(s: PDState, quantity: str, gx, gy, oracle_dim: int | None):
    xs = np.linspace(*gx[:2], gx[2])
    ys = np.linspace(*gy[:2], gy[2])
    if quantity == "q":
        values = q_function(s, xs[:, None] + 1j * ys[None, :])
        if float(values.min()) < -1e-12:
            raise InternalConsistencyError(f"negative Husimi value {values.min():.3e}")
    else:
        values = wigner(s, xs[:, None], ys[None, :])
    oracle_vals = None
    if oracle_dim is not None:
        v = fock.prepare_state(oracle_dim, s)
        oracle_vals = np.empty_like(values)
        for i, x in enumerate(xs):
            for j, y in enumerate(ys):
                alpha = (x + 1j * y) / math.sqrt(2.0) if quantity == "wigner" else complex(x, y)
                if quantity == "q":
                    coh = fock.coherent_vector(oracle_dim, alpha, leak_tol=1e-10)
                    oracle_vals[i, j] = abs(np.vdot(coh.amplitudes, v.amplitudes)) ** 2 / math.pi
                else:
                    oracle_vals[i, j] = fock.wigner_displaced_parity(v, alpha)
    rows = []
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            row = [float(x), float(y), float(values[i, j])]
            if oracle_vals is not None:
                row.append(float(oracle_vals[i, j]))
            rows.append(row)
    return rows


def cmd_grid(args) -> int:
    params = state_params_from_args(args)
    s = state_from_params(params)
    gx = parse_triple(args.grid_x)
    gy = parse_triple(args.grid_y)
    oracle_dim = args.dim if args.oracle else None
    rows = _grid_rows(s, args.quantity, gx, gy, oracle_dim)
    axis_names = ("x", "p") if args.quantity == "wigner" else ("alpha_re", "alpha_im")
    header = [axis_names[0], axis_names[1], args.quantity]
    if oracle_dim is not None:
        header.append(args.quantity + "_oracle")
    meta = _metadata(
        "grid", state=params, quantity=args.quantity,
        grid_x=list(gx), grid_y=list(gy),
        layout="row-major, first axis outermost",
        oracle_dim=oracle_dim,
    )
    emit(args.out, args.format, meta, header, rows)
    return 0


def cmd_evolve(args) -> int:
    h = HamiltonianParams(args.omega, args.g0, args.g1)
    lo, hi, n = parse_triple(args.t_range)
    beta = args.beta_abs * cmath.exp(1j * args.beta_phase)
    dim = args.dim
    coh = fock.coherent_vector(dim, beta)
    a, ad = fock.ladder_matrices(dim)
    n_op = fock.number_matrix(dim)
    n2 = fock.OperatorMatrix(dim, ad.entries @ ad.entries @ a.entries @ a.entries, "number")
    x_mat = (a.entries + ad.entries) / math.sqrt(2.0)
    x_op = fock.OperatorMatrix(dim, x_mat, "number")
    x2_op = fock.OperatorMatrix(dim, x_mat @ x_mat, "number")
    with_fidelity = h.omega == 0.0
    header = ["t"] + (["fidelity"] if with_fidelity else []) + ["mean_n", "g2", "var_x"]
    rows = []
    for t in np.linspace(lo, hi, n):
        v = evolve(h, float(t), coh)
        mean = fock.expectation(n_op, v).real
        sf = fock.expectation(n2, v).real
        g2 = sf / mean**2 if mean > 1e-12 else float("nan")
        var_x = fock.expectation(x2_op, v).real - fock.expectation(x_op, v).real ** 2
        row = [float(t)]
        if with_fidelity:
            s0, s1 = squeeze_correspondence(h, float(t))
            target = fock.prepare_state(dim, PDState(beta, s0, s1))
            row.append(abs(np.vdot(v.amplitudes, target.amplitudes)) ** 2)
        rows.append(row + [mean, g2, var_x])
    meta = _metadata(
        "evolve",
        omega=h.omega, g0=[h.g0.real, h.g0.imag], g1=[h.g1.real, h.g1.imag],
        beta_abs=args.beta_abs, beta_phase=args.beta_phase,
        t_range=[lo, hi, n], dim=dim, fidelity_column=with_fidelity,
    )
    emit(args.out, args.format, meta, header, rows)
    return 0


def cmd_validate(args) -> int:
    if args.n_cases < 1:
        raise UsageError(f"--n-cases must be at least 1, got {args.n_cases}")
    report = run_validation(seed=args.seed, n_cases=args.n_cases, dim=args.dim)
    for line in report.format_lines():
        print(line)
    if args.out is not None:
        doc = {
            "metadata": _metadata("validate", seed=args.seed, n_cases=args.n_cases, dim=args.dim),
            "passed": report.passed,
            "redraws": report.redraws,
            "checks": [
                {
                    "name": c.name,
                    "tolerance": c.tolerance,
                    "max_deviation": c.max_deviation,
                    "passed": c.passed,
                    "worst_case": c.worst_case,
                }
                for c in report.checks
            ],
        }
        with open(args.out, "w") as fh:
            json.dump(doc, fh, sort_keys=True, indent=1)
            fh.write("\n")
    return 0 if report.passed else 2


# ---------------------------------------------------------------------------
# figure presets
# ---------------------------------------------------------------------------


def _psi_state(beta_abs: float, r0: float, psi0: float, r1: float, psi1: float) -> PDState:
    return PDState(beta_abs, SectorParams(r0, 2.0 * psi0, 0.0), SectorParams(r1, 2.0 * psi1, 0.0))


def _figure_pnd(n_max: int, beta_abs, r0, psi0, r1, psi1, oracle_dim):
    s = _psi_state(beta_abs, r0, psi0, r1, psi1)
    p = photon_distribution_range(s, n_max)
    header = ["n", "p_analytic"]
    rows = [[n, float(p[n])] for n in range(n_max + 1)]
    if oracle_dim:
        v = fock.prepare_state(oracle_dim, s)
        header.append("p_oracle")
        for row in rows:
            row.append(float(abs(v.amplitudes[row[0]]) ** 2))
    return header, rows


def _figure_g2_curves(beta_grid, curves: dict[str, PDState | tuple]):
    header = ["beta_abs"] + list(curves)
    rows = []
    for b in beta_grid:
        row = [float(b)]
        for spec in curves.values():
            r0, psi0, r1, psi1 = spec
            g2 = photon_moments(_psi_state(b, r0, psi0, r1, psi1)).g2
            row.append(float("nan") if g2 is None else g2)
        rows.append(row)
    return header, rows


def _figure_quadrature_curves(beta_grid, curves: dict[str, tuple], attr: str):
    header = ["beta_abs"] + list(curves)
    rows = []
    for b in beta_grid:
        row = [float(b)]
        for r0, theta0, r1, theta1 in curves.values():
            s = PDState(b, SectorParams(r0, theta0, 0.0), SectorParams(r1, theta1, 0.0))
            row.append(getattr(quadrature_moments(s), attr))
        rows.append(row)
    return header, rows


def cmd_figure(args) -> int:
    n = args.number
    oracle_dim = args.dim if args.oracle else None
    beta_grid = np.linspace(0.05, 4.0, 160)
    meta = _metadata("figure", number=n, oracle_dim=oracle_dim)

    if n == 1:
        meta["state"] = "beta_abs=4 r0=0.5 psi0=pi/2 r1=0.1 psi1=pi/2"
        header, rows = _figure_pnd(80, 4.0, 0.5, math.pi / 2, 0.1, math.pi / 2, oracle_dim)
    elif n == 2:
        meta["state"] = "beta_abs=4 r0=0.5 psi0=0 r1=0.1 psi1=pi/2"
        header, rows = _figure_pnd(80, 4.0, 0.5, 0.0, 0.1, math.pi / 2, oracle_dim)
    elif n == 3:
        curves = {f"g2_r0_{r0:g}": (r0, 0.0, 0.0, 0.0) for r0 in (0.1, 0.2, 0.3, 0.4, 0.5, 0.6)}
        meta["state"] = "r1=0 psi0=psi1=0, one curve per r0"
        header, rows = _figure_g2_curves(beta_grid, curves)
    elif n == 4:
        curves = {
            f"g2_psi0_{k}pi8": (0.05, k * math.pi / 8.0, 0.0, 0.0) for k in range(0, 5)
        }
        meta["state"] = "r0=0.05 r1=0 psi1=0, one curve per psi0 = k pi/8"
        header, rows = _figure_g2_curves(beta_grid, curves)
    elif n == 5:
        curves = {}
        for r in (0.05, 0.1, 0.2, 0.3):
            curves[f"g2_pd_r_{r:g}"] = (r, 0.0, 0.0, 0.0)  # r1 = 0, psi0 = 0
            curves[f"g2_ordinary_r_{r:g}"] = (r, 0.0, r, 0.0)  # both sectors squeezed alike
        meta["state"] = "parity-dependent (r1=0, psi0=0) vs ordinary (r0=r1=r, psi=0)"
        header, rows = _figure_g2_curves(beta_grid, curves)
    elif n == 6:
        curves = {f"var_x_r1_{r1:g}": (0.0, 0.0, r1, 0.0) for r1 in (0.1, 0.2, 0.3, 0.4, 0.5)}
        meta["state"] = "r0=0 theta=lambda=0, one curve per r1"
        header, rows = _figure_quadrature_curves(np.linspace(0.01, 3.0, 150), curves, "var_x")
    elif n == 7:
        curves = {f"product_r0_{r0:g}": (r0, 0.0, 0.0, 0.0) for r0 in (0.25, 0.5, 1.0)}
        meta["state"] = "r1=0 theta=lambda=0, one curve per r0"
        header, rows = _figure_quadrature_curves(
            np.linspace(1e-3, 2.0, 100), curves, "uncertainty_product"
        )
    elif n in (8, 9, 10):
        presets = {
            8: (PDState(1.0, SectorParams(4.0, 0.0, 0.0), SectorParams(0.0, 0.0, 0.0)),
                (-5.0, 5.0, 101), (-5.0, 5.0, 101)),
            9: (PDState(3.0, SectorParams(3.0, 0.0, 0.0), SectorParams(3.0, math.pi, 0.0)),
                (-80.0, 80.0, 161), (-8.0, 8.0, 81)),
            10: (PDState(5.0, SectorParams(3.0, 0.0, 0.0), SectorParams(3.0, math.pi, 0.0)),
                 (-120.0, 120.0, 241), (-8.0, 8.0, 81)),
        }
        s, gx, gy = presets[n]
        meta["state"] = describe_preset(s)
        meta["grid_x"], meta["grid_y"] = list(gx), list(gy)
        meta["window_note"] = "window chosen to display the split structure"
        rows = _grid_rows(s, "q", gx, gy, oracle_dim)
        header = ["alpha_re", "alpha_im", "q"] + (["q_oracle"] if oracle_dim else [])
    else:  # 11, 12
        presets = {
            11: (PDState(3.0, SectorParams(3.0, math.pi, 0.0), SectorParams(0.0, 0.0, 0.0)),
                 (-8.0, 8.0, 161), (-8.0, 8.0, 161)),
            12: (PDState(8.0, SectorParams(3.0, 0.0, 0.0), SectorParams(3.0, math.pi, 0.0)),
                 (-2.5, 2.5, 101), (-24.0, 24.0, 161)),
        }
        s, gx, gy = presets[n]
        meta["state"] = describe_preset(s)
        meta["grid_x"], meta["grid_y"] = list(gx), list(gy)
        meta["window_note"] = "window centered on the interference region"
        rows = _grid_rows(s, "wigner", gx, gy, oracle_dim)
        header = ["x", "p", "wigner"] + (["wigner_oracle"] if oracle_dim else [])

    out = args.out if args.out is not None else f"figure{n}.csv"
    emit(out, args.format, meta, header, rows)
    return 0


def describe_preset(s: PDState) -> str:
    return (
        f"beta={s.beta.real:g}{s.beta.imag:+g}j"
        f" r0={s.sector0.r:g} theta0={s.sector0.theta:g} lambda0={s.sector0.lam:g}"
        f" r1={s.sector1.r:g} theta1={s.sector1.theta:g} lambda1={s.sector1.lam:g}"
    )


COMMANDS = {
    "pnd": cmd_pnd,
    "scan": cmd_scan,
    "grid": cmd_grid,
    "evolve": cmd_evolve,
    "validate": cmd_validate,
    "figure": cmd_figure,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except TruncationError as exc:
        print(f"truncation failure: {exc}", file=sys.stderr)
        return 3
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
