# Copyright 2022 isodouble developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

"""
Command-line front end: ``isodouble <area> <action> [options]``.

Every command prints (or writes with ``--out``) a report that echoes its
effective configuration, so a run can be replayed from its report. Exit
codes: 0 when the check passes, 1 when it fails or does not apply, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import logging
import sys

from isodouble.clifford import build_system, index, load_system, save_system
from isodouble.clifford import verify_system
from isodouble.config import SPECTRUM_TOL, ExitCode, Ring, Side, Verdict
from isodouble.doubling import (
    H_mean,
    IsoparametricFamily,
    build_curve,
    certify,
    curve_residuals,
)
from isodouble.errors import (
    ConsistencyError,
    ConvergenceError,
    InfeasibleGeometry,
    UnsupportedError,
)
from isodouble.fkm import (
    FKMPolynomial,
    cartan_munzner_check,
    sample_level_point,
    shape_spectrum,
)
from isodouble.report import dumps, to_jsonable
from isodouble.runtime import runtime
from isodouble.topology import (
    TABLE,
    classify_family,
    double_cohomology,
    double_descriptor,
    distinguish,
    fkm_parameters,
    homogeneous_lookup,
    munzner_cohomology,
    poincare_dual,
    table_csv,
)

logger = logging.getLogger(__name__)

_RINGS = {"Z": Ring.INTEGERS, "Z2": Ring.MOD2}
_SIDES = {"plus": Side.PLUS, "minus": Side.MINUS}


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(
            f"expected a positive count, got {text}"
        )
    return value


def _common_options():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="Master seed of all random sampling (default: 42 or "
        "ISODOUBLE_SEED).",
    )
    parser.add_argument(
        "--tol",
        type=float,
        default=None,
        help="Override the acceptance tolerance of the check.",
    )
    parser.add_argument(
        "--format",
        choices=("human", "json"),
        default="human",
        help="Report format.",
    )
    parser.add_argument(
        "--out",
        metavar="PATH",
        default=None,
        help="Write the report to PATH instead of standard output.",
    )
    parser.add_argument(
        "--workers",
        type=_positive_int,
        default=None,
        help="Threads used for Monte-Carlo sampling.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Print debugging information.",
    )
    return parser


def _config(args):
    config = {
        key: value
        for key, value in vars(args).items()
        if key not in ("func", "verbose", "format", "out_is_data")
    }
    config["seed"] = runtime.resolve_seed(args.seed)
    return config


def _render(value, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)) and item and not _flat(item):
                lines.append(f"{pad}{key}:")
                lines.extend(_render(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and not _flat(item):
                lines.append(f"{pad}-")
                lines.extend(_render(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")
    return lines


def _flat(item):
    return isinstance(item, list) and all(
        not isinstance(x, (dict, list)) for x in item
    )


def _scalar(item):
    if isinstance(item, list):
        return "[" + ", ".join(_scalar(x) for x in item) + "]"
    if isinstance(item, float):
        return f"{item:.12g}"
    if item is None:
        return "-"
    return str(item)


def _emit(args, payload):
    if args.format == "json":
        text = dumps(payload)
    else:
        text = "\n".join(_render(to_jsonable(payload))) + "\n"
    if args.out is not None and not getattr(args, "out_is_data", False):
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _fail(msg):
    sys.stderr.write(f"isodouble: {msg}\n")
    return ExitCode.FAIL


def cmd_clifford_build(args):
    system = build_system(args.m, args.plus, args.minus)
    payload = {
        "config": _config(args),
        "m": system.m,
        "l": system.l,
        "a": system.a,
        "b": system.b,
        "q": system.q,
        "parity_ok": (system.q - system.a - system.b) % 2 == 0,
    }
    if system.m % 4 == 0:
        payload["trace_index"] = index(system)
    if args.out is not None:
        save_system(system, args.out)
        payload["system_path"] = args.out
    else:
        payload["system"] = system.to_dict()
    _emit(args, payload)
    return ExitCode.PASS


def cmd_clifford_verify(args):
    system = load_system(args.path)
    report = verify_system(system, tol=args.tol)
    payload = {"config": _config(args), "report": report.to_dict()}
    passed = report.passed
    if passed and system.m % 4 == 0:
        try:
            payload["index"] = index(system)
        except ConsistencyError as exc:
            payload["index_error"] = str(exc)
            passed = False
    _emit(args, payload)
    return ExitCode.PASS if passed else ExitCode.FAIL


def _polynomial(path):
    return FKMPolynomial(load_system(path))


def cmd_fkm_check(args):
    poly = _polynomial(args.system)
    report = cartan_munzner_check(
        poly,
        samples=args.samples,
        seed=args.seed,
        tol=args.tol,
        workers=args.workers,
    )
    _emit(args, {"config": _config(args), "report": report.to_dict()})
    return ExitCode.PASS if report.passed else ExitCode.FAIL


def cmd_fkm_spectrum(args):
    poly = _polynomial(args.system)
    family = poly.family
    tol = runtime.tolerance(SPECTRUM_TOL) if args.tol is None else args.tol
    expected_H = H_mean(family, args.level)
    expected_sizes = (family.m_plus, family.m_minus) * 2
    seed = runtime.resolve_seed(args.seed)
    points = []
    passed = True
    for i in range(args.points):
        point = sample_level_point(poly, args.level, seed=(seed + i) % 2**64)
        report = shape_spectrum(poly, point)
        ok = (
            report.conclusive
            and report.multiplicities == expected_sizes
            and abs(report.mean_curvature - expected_H)
            <= tol * max(1.0, abs(expected_H))
        )
        passed = passed and ok
        points.append(
            {"point": point.to_dict(), "spectrum": report, "pass": ok}
        )
    payload = {
        "config": _config(args),
        "family": family.to_dict(),
        "expected_mean_curvature": expected_H,
        "expected_multiplicities": list(expected_sizes),
        "points": points,
        "pass": passed,
    }
    _emit(args, payload)
    return ExitCode.PASS if passed else ExitCode.FAIL


def cmd_double_certify(args):
    family = IsoparametricFamily(args.g, args.mplus, args.mminus)
    payload = {"config": _config(args), "family": family.to_dict()}
    try:
        curve = build_curve(
            family,
            r_bar=args.rbar,
            r_1=args.r1,
            r_inf=args.rinf,
            k_max=args.kmax,
            step=args.step,
        )
    except InfeasibleGeometry as exc:
        payload.update(
            {
                "pass": False,
                "error": str(exc),
                "min_r_bar": exc.min_r_bar,
                "min_k_max": exc.min_k_max,
            }
        )
        _emit(args, payload)
        return _fail(f"infeasible geometry: {exc}")
    certificate = certify(curve, family, tol=args.tol)
    payload["certificate"] = certificate
    payload["curve_residuals"] = curve_residuals(curve)
    payload["pass"] = certificate.passed
    if args.csv is not None:
        curve.to_csv(args.csv)
        payload["csv"] = args.csv
    _emit(args, payload)
    return ExitCode.PASS if certificate.passed else ExitCode.FAIL


def cmd_topology_cohomology(args):
    ring = None if args.ring is None else _RINGS[args.ring]
    payload = {"config": _config(args)}
    if args.side is None:
        profiles = munzner_cohomology(args.g, args.mplus, args.mminus, ring)
        doubles = [
            double_cohomology(args.g, args.mplus, args.mminus, side, ring)
            for side in (Side.PLUS, Side.MINUS)
        ]
        profiles = list(profiles) + doubles
    else:
        doubles = [
            double_cohomology(
                args.g, args.mplus, args.mminus, _SIDES[args.side], ring
            )
        ]
        profiles = doubles
    duality = all(poincare_dual(profile) for profile in doubles)
    payload["profiles"] = profiles
    payload["poincare_duality"] = duality
    _emit(args, payload)
    return ExitCode.PASS if duality else ExitCode.FAIL


def cmd_topology_distinguish(args):
    result = distinguish(args.m, args.l, args.q1, args.q2)
    _emit(args, {"config": _config(args), "result": result})
    if result.verdict == Verdict.INAPPLICABLE:
        return _fail(f"criterion inapplicable: {result.reason}")
    return ExitCode.PASS


def cmd_topology_table(args):
    rows = [row for row in TABLE if args.g is None or row.g == args.g]
    if args.csv:
        text = table_csv(rows)
        if args.out is not None:
            with open(args.out, "w", encoding="utf-8") as f:
                f.write(text)
        else:
            sys.stdout.write(text)
        return ExitCode.PASS
    _emit(args, {"config": _config(args), "rows": rows})
    return ExitCode.PASS


def cmd_topology_describe(args):
    g, m_plus, m_minus = args.g, args.mplus, args.mminus
    fkm = g == 4 and fkm_parameters(m_plus, m_minus) is not None
    payload = {
        "config": _config(args),
        "kind": classify_family(g, m_plus, m_minus),
        "homogeneous_row": homogeneous_lookup(g, m_plus, m_minus),
        "doubles": [
            double_descriptor(g, m_plus, m_minus, side, fkm=fkm)
            for side in (Side.PLUS, Side.MINUS)
        ],
    }
    if fkm:
        m, l = fkm_parameters(m_plus, m_minus)  # noqa E741
        payload["fkm"] = {"m": m, "l": l}
    _emit(args, payload)
    return ExitCode.PASS


def _family_options(parser):
    parser.add_argument("--g", type=int, required=True)
    parser.add_argument("--mplus", type=int, required=True)
    parser.add_argument("--mminus", type=int, required=True)


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="isodouble",
        description="Clifford systems, FKM isoparametric families and "
        "doubles of positive scalar curvature.",
    )
    areas = parser.add_subparsers(dest="area", required=True)

    clifford = areas.add_parser("clifford", help="Clifford systems")
    actions = clifford.add_subparsers(dest="action", required=True)
    p = actions.add_parser(
        "build", parents=[common], help="Build a Clifford system."
    )
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--plus", type=int, required=True)
    p.add_argument("--minus", type=int, required=True)
    p.set_defaults(func=cmd_clifford_build, out_is_data=True)
    p = actions.add_parser(
        "verify", parents=[common], help="Check the Clifford relations."
    )
    p.add_argument("path")
    p.set_defaults(func=cmd_clifford_verify)

    fkm = areas.add_parser("fkm", help="FKM isoparametric polynomials")
    actions = fkm.add_subparsers(dest="action", required=True)
    p = actions.add_parser(
        "check", parents=[common], help="Check the Cartan-Münzner equations."
    )
    p.add_argument("--system", required=True)
    p.add_argument("--samples", type=_positive_int, default=1000)
    p.set_defaults(func=cmd_fkm_check)
    p = actions.add_parser(
        "spectrum", parents=[common], help="Principal curvatures of a level."
    )
    p.add_argument("--system", required=True)
    p.add_argument("--level", type=float, required=True)
    p.add_argument("--points", type=_positive_int, default=1)
    p.set_defaults(func=cmd_fkm_spectrum)

    double = areas.add_parser("double", help="Doubles of the sphere halves")
    actions = double.add_subparsers(dest="action", required=True)
    p = actions.add_parser(
        "certify",
        parents=[common],
        help="Certify positive scalar curvature along a bending curve.",
    )
    _family_options(p)
    p.add_argument("--kmax", type=float, default=0.5)
    p.add_argument("--rbar", type=float, required=True)
    p.add_argument("--r1", type=float, default=None)
    p.add_argument("--rinf", type=float, default=0.02)
    p.add_argument("--step", type=float, default=1e-3)
    p.add_argument(
        "--csv", metavar="PATH", default=None, help="Dump the curve as CSV."
    )
    p.set_defaults(func=cmd_double_certify)

    topology = areas.add_parser("topology", help="Topology of the doubles")
    actions = topology.add_subparsers(dest="action", required=True)
    p = actions.add_parser(
        "cohomology", parents=[common], help="Cohomology ranks."
    )
    _family_options(p)
    p.add_argument("--side", choices=sorted(_SIDES), default=None)
    p.add_argument("--ring", choices=sorted(_RINGS), default=None)
    p.set_defaults(func=cmd_topology_cohomology)
    p = actions.add_parser(
        "distinguish",
        parents=[common],
        help="Mod-p criterion for homotopy types of FKM doubles.",
    )
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--q1", type=int, required=True)
    p.add_argument("--q2", type=int, required=True)
    p.set_defaults(func=cmd_topology_distinguish)
    p = actions.add_parser(
        "table", parents=[common], help="Homogeneous families."
    )
    p.add_argument("--g", type=int, default=None)
    p.add_argument("--csv", action="store_true", help="Print CSV.")
    p.set_defaults(func=cmd_topology_table)
    p = actions.add_parser(
        "describe",
        parents=[common],
        help="Classification and diffeomorphism type of the doubles.",
    )
    _family_options(p)
    p.set_defaults(func=cmd_topology_describe)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG)
    logger.debug("running %s %s", args.area, args.action)
    try:
        return int(args.func(args))
    except (
        ValueError,
        ConsistencyError,
        ConvergenceError,
        UnsupportedError,
        OSError,
    ) as exc:
        return int(_fail(exc))


if __name__ == "__main__":
    sys.exit(main())
