"""Command-line front end.

Exit status: 0 on success, 1 when a verdict is negative or a confirmation
fails, 2 on usage errors (argparse's convention).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from . import components, copositivity, generator, parrilo, zeros
from .core_types import AngleVector, Zero, matrix_from_json, matrix_to_json
from .errors import ConstraintViolation, NotCopositiveEvidence


def _floats(n):
    def parse(text):
        try:
            vals = [float(t) for t in text.split(",")]
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected {n} comma-separated numbers, got {text!r}")
        if len(vals) != n:
            raise argparse.ArgumentTypeError(f"expected {n} comma-separated numbers, got {len(vals)}")
        return vals
    return parse


def _angles(args) -> AngleVector:
    if args.radians:
        return AngleVector(tuple(args.phi))
    return AngleVector.from_pi_multiples(args.phi)


def _load_matrix(path) -> np.ndarray:
    obj = json.loads(Path(path).read_text())
    if isinstance(obj, dict):
        obj = obj["matrix"]
    return matrix_from_json(obj)


def _tolerances(args) -> zeros.ZeroTolerances:
    return zeros.ZeroTolerances(psd=args.tol_psd, quad=args.tol_quad, slack=args.tol_slack, pos=args.tol_pos)


def _emit(args, obj, rows=None):
    if args.format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows if rows is not None else [])
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _fmt(s):
    return " ".join(map(str, s))


def cmd_gen(args):
    phi = _angles(args)
    a = generator.build_case13(phi, args.variant)
    U = generator.zero_matrix(phi)
    if args.scale is not None:
        a = generator.scale_dad(a, args.scale)
        U = U / np.asarray(args.scale)[:, None]
    zs = [Zero.from_vector(U[:, k]) for k in range(6)]
    obj = {
        "phi": list(phi.phi),
        "variant": generator.Case13Variant.parse(args.variant).value,
        "regime": [f.value for f in generator.classify_regime(phi).as_tuple()],
        "matrix": matrix_to_json(a),
        "zeros": [z.to_json() for z in zs],
    }
    rows = [["row", i + 1, *r] for i, r in enumerate(a.tolist())]
    rows += [["zero", _fmt(z.support), *z.vector.tolist()] for z in zs]
    _emit(args, obj, rows)
    return 0


def cmd_zeros(args):
    a = _load_matrix(args.matrix)
    tol = _tolerances(args)
    try:
        found = zeros.find_minimal_zeros(a, tol)
    except NotCopositiveEvidence as exc:
        print(f"matrix is not copositive: {exc}", file=sys.stderr)
        return 1
    out = []
    for z in found:
        e = zeros.extended_support(a, z, tol)
        out.append({**z.to_json(), "extended_support": e.to_json()})
    rows = [["support", "complementary", *(f"u{i + 1}" for i in range(a.shape[0]))]]
    rows += [[_fmt(o["extended_support"]["I"]), _fmt(o["extended_support"]["J"]), *o["vector"]] for o in out]
    _emit(args, out, rows)
    return 0


def cmd_check_cop(args):
    a = _load_matrix(args.matrix)
    verdict = copositivity.certify(a, args.eps, args.depth)
    obj = verdict.to_json()
    if args.samples:
        w = copositivity.sample_falsify(a, args.samples, args.seed)
        obj["sampling_witness"] = None if w is None else w.tolist()
    _emit(args, obj, [[k, json.dumps(v)] for k, v in obj.items()])
    return 0 if verdict else 1


def cmd_table3(args):
    table = components.table3(require_dim=not args.no_dim_filter)
    rows = [["No.", "may possibly be in the closure of"]]
    rows += [[name, ",".join(row)] for name, row in table.items()]
    _emit(args, table, rows)
    return 0


def cmd_essential(args):
    names = components.essential_set(require_dim=not args.no_dim_filter)
    _emit(args, names, [[n] for n in names])
    return 0


def cmd_k1check(args):
    phi = _angles(args)
    if generator.Case13Variant.parse(args.variant) is not generator.Case13Variant.V13_1:
        obj = {"verdict": parrilo.K1Outcome.UNSUPPORTED.value, "variant": args.variant}
        _emit(args, obj, [["verdict", obj["verdict"]]])
        return 0
    cert = parrilo.membership_case13_1(phi)
    obj = cert.to_json()
    rows = [["triple", "m"]] + [["".join(map(str, t)), v] for t, v in cert.m.items()]
    rows += [["verdict", cert.outcome.value], ["m_margin", cert.margin], ["det_normalized", cert.det]]
    _emit(args, obj, rows)
    return 1 if cert.outcome is parrilo.K1Outcome.DEGENERATE else 0


def cmd_counterexample(args):
    phi = parrilo.counterexample_phi()
    a = parrilo.counterexample_matrix()
    printed_err = float(np.abs(a - parrilo.printed_counterexample()).max())
    cop = copositivity.certify(a, args.eps, args.depth)
    try:
        found = zeros.esupp_set(a)
    except NotCopositiveEvidence as exc:
        print(f"zero search found a violation: {exc}", file=sys.stderr)
        found = []
    expected = generator.expected_extended_supports(phi, generator.Case13Variant.V13_1)
    cert = parrilo.solve_certificate(a, phi)
    m136 = cert.m[(1, 3, 6)]
    checks = {
        "matrix_matches_printed": printed_err <= 1e-12,
        "copositive_up_to_eps": bool(cop),
        "zeros_match_case_13_1": sorted(found) == sorted(expected),
        "k1_nonmember_m136_below_-4/3": cert.outcome is parrilo.K1Outcome.NON_MEMBER and m136 < -4 / 3,
    }
    obj = {
        "phi_over_pi": list(parrilo.COUNTEREXAMPLE_PI_MULTIPLES),
        "matrix": matrix_to_json(a),
        "printed_max_abs_error": printed_err,
        "copositivity": cop.to_json(),
        "extended_supports": [e.to_json() for e in found],
        "k1": {"verdict": cert.outcome.value, "violating_triples": [list(t) for t in cert.violating],
               "m136": m136, "m136_margin_below_-4/3": -4 / 3 - m136, "det_normalized": cert.det},
        "checks": checks,
    }
    _emit(args, obj, [[k, v] for k, v in checks.items()])
    for name, ok in checks.items():
        print(f"{'PASS' if ok else 'FAIL'} {name}", file=sys.stderr)
    return 0 if all(checks.values()) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="copositive6", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", "--out", dest="format", choices=("json", "csv"), default="json")

    angles = argparse.ArgumentParser(add_help=False)
    angles.add_argument("--phi", type=_floats(6), required=True,
                        help="six angles as multiples of pi, e.g. 0.20,0.29,0.30,0.23,0.06,0.02")
    angles.add_argument("--radians", action="store_true", help="read --phi as radians")
    angles.add_argument("--variant", default="13.1", choices=("13.1", "13.2"))

    mat = argparse.ArgumentParser(add_help=False)
    mat.add_argument("--matrix", required=True, help="JSON file: array of rows (or an object with 'matrix')")

    s = sub.add_parser("gen", parents=[fmt, angles], help="case-13 matrix and its closed-form zeros")
    s.add_argument("--scale", type=_floats(6), help="positive diagonal d for X = D A D")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("zeros", parents=[fmt, mat], help="minimal zeros and extended supports")
    d = zeros.DEFAULT_TOL
    s.add_argument("--tol-psd", type=float, default=d.psd)
    s.add_argument("--tol-quad", type=float, default=d.quad)
    s.add_argument("--tol-slack", type=float, default=d.slack)
    s.add_argument("--tol-pos", type=float, default=d.pos)
    s.set_defaults(func=cmd_zeros)

    s = sub.add_parser("check-cop", parents=[fmt, mat], help="simplicial-partition copositivity test")
    s.add_argument("--eps", type=float, default=1e-9)
    s.add_argument("--depth", type=int, default=40)
    s.add_argument("--samples", type=int, default=0, help="also run the sampling falsifier")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_check_cop)

    for name, func, text in (("table3", cmd_table3, "closure candidates per component"),
                             ("essential", cmd_essential, "components in nobody's closure")):
        s = sub.add_parser(name, parents=[fmt], help=text)
        s.add_argument("--no-dim-filter", action="store_true", help="drop the strict dimension inequality")
        s.set_defaults(func=func)

    s = sub.add_parser("k1check", parents=[fmt, angles], help="K^(1) certificate for a 13.1 matrix")
    s.set_defaults(func=cmd_k1check)

    s = sub.add_parser("counterexample", parents=[fmt], help="rebuild and confirm the K^(1) counterexample")
    s.add_argument("--eps", type=float, default=1e-9)
    s.add_argument("--depth", type=int, default=40)
    s.set_defaults(func=cmd_counterexample)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConstraintViolation as exc:
        print(f"{parser.prog} {args.command}: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
