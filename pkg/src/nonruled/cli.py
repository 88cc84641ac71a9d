"""Command line interface.

Usage::

    $ echo '{"id": "e1", "base_field": "padic:5", "a": "1", "b": "1"}' | nonruled classify
    $ nonruled gauss --field tadic:Q:real --generator X --radicand "-(X^2+t^2)*(X^2+1)"
    $ nonruled conic --field Q -- -1 -1
    $ nonruled selftest

Exit status: 0 on success, 1 if any record failed, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .conic import conic_has_point, conic_normalize
from .elliptic import ConicResidue, EllipticResidue, WeierstrassCurve, omega_star
from .exact_algebra import PrimeField
from .expr import parse_expr
from .gauss import AffineGenerator, GaussValuation, analyze_quadratic_gauss
from .regression import run_selftest
from .valued_field import FieldDescriptor, ValuedField

SUBCOMMANDS = ("classify", "gauss", "conic", "selftest")


def _field_name(vf: ValuedField) -> str:
    F = vf.residue_field
    if isinstance(F, PrimeField):
        return f"F{F.p}"
    return "R" if vf.semantics == "real-signs" else "Q"


def report_to_json(curve: WeierstrassCurve, report, record_id=None) -> dict:
    red = report.reduction
    out = {
        "id": record_id,
        "discriminant": str(curve.discriminant),
        "v_delta": red.v_delta.to_json(),
        "v_a3": red.v_a3.to_json(),
        "v_b2": red.v_b2.to_json(),
        "reduction": red.tag,
        "omega_star": report.count,
        "witness": None,
        "residue": None,
        "notes": list(report.notes),
    }
    if report.count == 1:
        witness = {"generator": {"e": str(report.generator.e), "f": str(report.generator.f)}}
        for key in ("d", "c", "u1", "u2"):
            if key in report.scaling:
                witness[key] = str(report.scaling[key])
        out["witness"] = witness
    res = report.residue
    field = _field_name(curve.field)
    if isinstance(res, EllipticResidue):
        out["residue"] = {"kind": "elliptic", "field": field, "a_bar": str(res.a_bar),
                          "b_bar": str(res.b_bar), "delta_bar": str(res.delta_bar)}
    elif isinstance(res, ConicResidue):
        out["residue"] = {"kind": "conic", "field": field, "class": res.klass.to_json(),
                          "has_point": False}
    return out


def classify_record(record: dict) -> dict:
    vf = ValuedField.parse(record["base_field"])
    a = parse_expr(str(record["a"]), vf)
    b = parse_expr(str(record["b"]), vf)
    curve = WeierstrassCurve(vf, a, b)
    return report_to_json(curve, omega_star(curve), record.get("id"))


def process_line(item) -> dict:
    lineno, line = item
    record_id = None
    try:
        record = json.loads(line)
        if not isinstance(record, dict):
            raise ValueError("record must be a JSON object")
        record_id = record.get("id")
        return classify_record(record)
    except Exception as exc:
        return {"id": record_id, "line": lineno, "error": str(exc)}


def run_classify(lines, jobs: int = 1):
    """Yield one output object per nonblank input line, in input order."""
    items = [(i, line) for i, line in enumerate(lines, 1) if line.strip()]
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(process_line, items, chunksize=max(1, len(items) // (4 * jobs)))
    else:
        for item in items:
            yield process_line(item)


def gauss_json(vf: ValuedField, generator: str, radicand: str) -> dict:
    gen_poly = parse_expr(generator, vf, with_x=True)
    if not gen_poly.is_polynomial():
        raise ValueError("generator must be affine in X")
    gen = AffineGenerator.from_poly(gen_poly.num)
    g = parse_expr(radicand, vf, with_x=True)
    info = analyze_quadratic_gauss(g, GaussValuation(vf, gen))
    out = {
        "generator": {"e": str(gen.e), "f": str(gen.f)},
        "value": info.value.to_json(),
        "parity_in_2vE": info.parity_in_2vE,
        "kind": info.kind.value,
        "ruled": info.ruled,
        "residue": None if info.residue is None else str(info.residue),
        "constant_class": None if info.constant_class is None else str(info.constant_class),
        "core_poly": None if info.core_poly is None else str(info.core_poly),
    }
    if info.conic is not None:
        out["conic"] = [str(x) for x in info.conic]
        out["conic_class"] = conic_normalize(*info.conic, vf.semantics).to_json()
    if info.genus:
        out["genus"] = info.genus
    if info.kind.value == "split_or_constant":
        out["split"] = info.split
    return out


def conic_json(field: str, A: str, B: str) -> dict:
    f = field.strip()
    semantics = "exact"
    p = None
    if f in ("Q", "QQ"):
        pass
    elif f in ("R", "real"):
        semantics = "real-signs"
    elif f.startswith("F") and f[1:].isdigit():
        p = int(f[1:])
    else:
        vf = ValuedField.parse(f)
        semantics = vf.semantics
        if isinstance(vf.residue_field, PrimeField):
            p = vf.residue_field.p
    a, b = Fraction(A), Fraction(B)
    if p is not None:
        F = PrimeField(p)
        a, b = F(a), F(b)
    klass = conic_normalize(a, b, semantics)
    return {"A": A, "B": B, "class": klass.to_json(), "has_point": conic_has_point(klass)}


def _dump(obj, pretty: bool) -> str:
    return json.dumps(obj, indent=2 if pretty else None)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent JSON output")
    parser = argparse.ArgumentParser(prog="nonruled", description=(
        "Reduction types and non-ruled residue extensions of elliptic function fields."))
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("classify", parents=[common], help="classify curves from JSON lines")
    p.add_argument("infile", nargs="?", type=argparse.FileType(encoding="utf-8"),
                   help="input file (default: stdin)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = sub.add_parser("gauss", parents=[common], help="residue field of E(X)[sqrt(g)] at a Gauss extension")
    p.add_argument("--field", required=True, help="base field, e.g. tadic:Q:real or padic:5")
    p.add_argument("--generator", required=True, help="affine generator eX+f")
    p.add_argument("--radicand", required=True, help="radicand g in X (and t)")

    p = sub.add_parser("conic", parents=[common], help="does Y^2 = AX^2 + B have a point")
    p.add_argument("--field", required=True, help="Q, R, F<p>, or a base field descriptor")
    p.add_argument("A")
    p.add_argument("B")

    sub.add_parser("selftest", parents=[common], help="run the worked-example regressions")
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or (argv[0] not in SUBCOMMANDS and argv[0] not in ("-h", "--help")):
        argv.insert(0, "classify")
    parser = build_parser()
    try:
        opts = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    out = sys.stdout

    if opts.command == "classify":
        if opts.jobs < 1:
            sys.stderr.write("nonruled: error: --jobs must be positive\n")
            return 2
        infile = opts.infile or sys.stdin
        failed = False
        with infile:
            for obj in run_classify(infile.readlines(), opts.jobs):
                failed |= "error" in obj
                out.write(_dump(obj, opts.pretty) + "\n")
        return 1 if failed else 0

    if opts.command == "gauss":
        try:
            vf = ValuedField(FieldDescriptor.from_json(opts.field))
            obj = gauss_json(vf, opts.generator, opts.radicand)
        except Exception as exc:
            out.write(_dump({"error": str(exc)}, opts.pretty) + "\n")
            return 1
        out.write(_dump(obj, opts.pretty) + "\n")
        return 0

    if opts.command == "conic":
        try:
            obj = conic_json(opts.field, opts.A, opts.B)
        except Exception as exc:
            out.write(_dump({"error": str(exc)}, opts.pretty) + "\n")
            return 1
        out.write(_dump(obj, opts.pretty) + "\n")
        return 0

    results = run_selftest()
    for name, ok in results:
        out.write(f"{'PASS' if ok else 'FAIL'}  {name}\n")
    return 0 if all(ok for _, ok in results) else 1


if __name__ == "__main__":
    sys.exit(main())
