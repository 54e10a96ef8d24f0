"""Command-line front end: JSON in, printed values and verification reports out.

Exit codes: 0 on success, 1 when a verification check fails, 2 on malformed
input.  All commands are deterministic functions of their arguments, input
files and the seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import characters as ch
from . import hadamard as hd
from . import kunneth, modes, splittings, topo
from .numerics import torus_distance, torus_from_real
from .report import format_body, format_value, results_as_json, write_report
from .verify import REGISTRY, run_checks


class InputError(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def cmd_sigma(args) -> int:
    try:
        ha = ch.character_from_dict(_load_json(args.file_a))
        hb = ch.character_from_dict(_load_json(args.file_b))
    except (InputError, KeyError, ValueError, TypeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    closed = ch.sigma(ha, hb)
    print(f"sigma = {format_value(closed.rep)}")
    da, db = ha.dynamical(), hb.dynamical()
    kmax = max(da.max_mode(), db.max_mode(), 1)
    quad = ch.sigma_quadrature(da, db, 16 * kmax)
    dyn_closed = torus_from_real(ch.tau_u(da, db))
    residual = torus_distance(dyn_closed, quad)
    print(f"quadrature = {format_value(quad.rep)}")
    print(f"oracle residual = {residual:.3e}")
    return 0


def cmd_state(args) -> int:
    try:
        doc = _load_json(args.input)
        if args.kind == "dynamical":
            value = hd.omega_mu(ch.dynamical_from_dict(doc))
        elif args.kind == "topological":
            value = topo.omega_t(topo.element_from_dict(doc)).real
        else:
            spectrum, data = modes.spectrum_from_dict(doc)
            value = modes.omega_mu_general(spectrum, data)
    except (InputError, KeyError, ValueError, TypeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    print(f"omega = {format_value(value)}")
    return 0


def cmd_verify_all(args) -> int:
    overrides = None
    if args.tolerance_torus is not None:
        overrides = {
            spec.name: args.tolerance_torus
            for spec in REGISTRY
            if spec.threshold == 1e-9
        }
    results = run_checks(seed=args.seed, samples=args.samples, overrides=overrides)
    if args.json:
        sys.stdout.write(results_as_json(results, args.seed, args.samples))
    else:
        sys.stdout.write(format_body(results))
    if args.report_dir is not None:
        paths = write_report(results, Path(args.report_dir), args.seed, args.samples)
        for p in paths:
            print(f"wrote {p}", file=sys.stderr)
    return 0 if all(r.passed for r in results) else 1


def _apply_gns_op(op: dict, psi: topo.GnsVector, k: int, m: int) -> topo.GnsVector:
    kind = op.get("op")
    if kind == "rotate":
        u = tuple(torus_from_real(float(x)) for x in op["u"])
        return topo.rotate(k, m, u, psi)
    if kind == "rotate_tilde":
        u = tuple(torus_from_real(float(x)) for x in op["ut"])
        return topo.rotate(k, m, u, psi, tilde=True)
    if kind == "translate":
        return topo.translate(k, m, tuple(int(x) for x in op["v"]), psi)
    if kind == "translate_tilde":
        return topo.translate(k, m, tuple(int(x) for x in op["vt"]), psi, tilde=True)
    if kind == "momentum":
        return topo.momentum(int(op["index"]), psi)
    if kind == "momentum_tilde":
        return topo.momentum_tilde(int(op["index"]), psi)
    if kind == "duality":
        return topo.duality_U(psi, k)
    raise InputError(f"unknown operator {kind!r}")


def cmd_gns(args) -> int:
    try:
        doc = _load_json(args.script)
        k = int(doc["k"])
        m = int(doc.get("m", 2 * k))
        psi = topo.gns_from_list(doc["initial"])
        for op in doc.get("ops", []):
            psi = _apply_gns_op(op, psi, k, m)
    except (InputError, KeyError, ValueError, TypeError, IndexError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    out = []
    for item in topo.gns_to_list(psi):
        out.append(
            {
                "v": item["v"],
                "vt": item["vt"],
                "re": float(format_value(item["re"])),
                "im": float(format_value(item["im"])),
            }
        )
    print(json.dumps(out, sort_keys=True))
    return 0


def cmd_spectrum_solve(args) -> int:
    try:
        spectrum, data = modes.spectrum_from_dict(_load_json(args.input))
        sol = modes.solve_cauchy(spectrum, data)
    except (InputError, KeyError, ValueError, TypeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    t = args.time
    coeffs = sol.coefficient(t)
    duals = sol.coefficient_dual(t)
    for lam, f, g in zip(sol.lams, coeffs, duals):
        print(
            f"lambda = {format_value(lam)}  f = {format_value(float(f))}"
            f"  g = {format_value(float(g))}"
        )
    print(f"ode residual = {modes.verify_duality_equation(sol, t, h=args.step):.3e}")
    drift = abs(sol.energy(t) - sol.energy(0.0))
    print(f"energy drift = {drift:.3e}")
    print(f"omega = {format_value(modes.omega_mu_general(spectrum, data))}")
    return 0


def cmd_kunneth(args) -> int:
    try:
        space = kunneth.space_from_name(args.space)
        rank = kunneth.betti(space, args.degree)
    except (ValueError, TypeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    print(f"betti({args.space}, {args.degree}) = {rank}")
    print(f"torsion_free = {kunneth.torsion_free(space, args.degree)}")
    return 0


def cmd_split(args) -> int:
    try:
        model = splittings.model_from_dict(_load_json(args.input))
        if model.case == "general":
            corr = splittings.correct_x_general(model)
            residual = splittings.corrected_pairing_general(model, corr)
        else:
            corr = splittings.correct_x_duality(model)
            residual = splittings.corrected_pairing_duality(model, corr)
    except (InputError, KeyError, ValueError, TypeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    for row in corr.u_components:
        print("components: " + " ".join(format_value(x) for x in row))
    print(f"corrected residual = {residual:.3e}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torusqft",
        description="gauge-sector states, dualities and their verification suite",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sigma", help="pre-symplectic product of two configuration files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(fn=cmd_sigma)

    p = sub.add_parser("state", help="evaluate a sector state on a JSON datum")
    p.add_argument("--kind", choices=("dynamical", "topological", "general"), required=True)
    p.add_argument("input")
    p.set_defaults(fn=cmd_state)

    p = sub.add_parser("verify-all", help="run every registered identity check")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--tolerance-torus", type=float, default=None,
                   help="override the mod-1 comparison thresholds")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--report-dir", default=None,
                   help="write report.csv, report.json and figures here")
    p.set_defaults(fn=cmd_verify_all)

    p = sub.add_parser("gns", help="apply a script of lattice operators to a ket")
    p.add_argument("script")
    p.set_defaults(fn=cmd_gns)

    p = sub.add_parser("spectrum-solve", help="solve the mode equations of a spectrum file")
    p.add_argument("input")
    p.add_argument("--time", type=float, default=0.0)
    p.add_argument("--step", type=float, default=1e-3)
    p.set_defaults(fn=cmd_spectrum_solve)

    p = sub.add_parser("kunneth", help="free cohomology rank of a product space")
    p.add_argument("--space", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(fn=cmd_kunneth)

    p = sub.add_parser("split", help="correct a splitting model and report the residual")
    p.add_argument("input")
    p.set_defaults(fn=cmd_split)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
