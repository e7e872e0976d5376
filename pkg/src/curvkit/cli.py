"""Command line interface.

    curvkit compute {distance,cross-ratio,hilbert,project,lift} --input FILE|- [--geometry G] [--n N] [--radius R]
    curvkit verify SUITE [--n N] [--samples K] [--seed S] [--tol T] [--format json|csv] [--out PATH]
    curvkit sample quadruple --geometry G --n N --seed S

Exit codes: 0 ok, 1 verification failed, 2 bad usage or input schema,
3 geometric domain error, 4 report could not be written.
"""

from __future__ import annotations

import argparse
import json
import sys

import jsonschema

from . import report as report_mod
from .cross_ratio import CollinearQuadruple, cross_ratio
from .errors import GeometryError
from .hilbert import BallSpec, hilbert_distance
from .models import Geometry, chart_point, distance
from .projective import from_chart, to_chart
from .sampling import sample_quadruple
from .suites import SUITES, SuiteConfig, run_suite
from .sweep import substream

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3, 4

INPUT_SCHEMA = {
    "type": "object",
    "properties": {
        "geometry": {"enum": [g.value for g in Geometry]},
        "n": {"type": "integer", "minimum": 1},
        "points": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "number"}, "minItems": 1},
        },
        "radius": {"type": "number"},
    },
    "required": ["points"],
}

POINT_COUNT = {"distance": 2, "cross-ratio": 4, "hilbert": 2}


class SchemaError(Exception):
    pass


def fmt(x: float) -> str:
    return f"{float(x) + 0.0:#.15g}"


def _read_input(source: str) -> dict:
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            with open(source) as fh:
                text = fh.read()
        data = json.loads(text)
        jsonschema.validate(data, INPUT_SCHEMA)
    except (OSError, json.JSONDecodeError, jsonschema.ValidationError) as exc:
        raise SchemaError(str(exc).splitlines()[0]) from exc
    return data


def _merge(data: dict, key: str, flag):
    value = data.get(key)
    if flag is not None and value is not None and flag != value:
        raise SchemaError(f"--{key} {flag!r} disagrees with input {key} {value!r}")
    value = flag if flag is not None else value
    if value is None:
        raise SchemaError(f"{key} is required (flag or input field)")
    return value


def compute(kind: str, data: dict, geometry: Geometry, n: int, radius=None) -> list[str]:
    """Evaluate one ``compute`` request; returns output lines."""
    raw = data["points"]
    want = POINT_COUNT.get(kind)
    if want is not None and len(raw) != want:
        raise SchemaError(f"{kind} needs {want} points, got {len(raw)}")
    # chart coordinates for Euclidean input and for lift; ambient otherwise
    chart_input = geometry is Geometry.EUCLIDEAN or kind == "lift"
    size = n if chart_input else n + 1
    for p in raw:
        if len(p) != size:
            raise SchemaError(f"points must have {size} coordinates, got {len(p)}")
    pts = [chart_point(p) if chart_input else p for p in raw]

    if kind == "distance":
        return [fmt(distance(geometry, *pts))]
    if kind == "cross-ratio":
        return [fmt(cross_ratio(CollinearQuadruple(geometry, tuple(pts))))]
    if kind == "hilbert":
        if radius is None:
            raise SchemaError("hilbert needs a radius")
        return [fmt(hilbert_distance(BallSpec(geometry, radius), *pts))]
    if kind == "project":
        return [" ".join(fmt(x) for x in to_chart(geometry, p)[:-1]) for p in pts]
    if kind == "lift":
        out = []
        for p in pts:
            q = from_chart(geometry, p)
            out.append(" ".join(fmt(x) for x in (q[:-1] if geometry is Geometry.EUCLIDEAN else q)))
        return out
    raise SchemaError(f"unknown compute kind {kind!r}")


def cmd_compute(args) -> int:
    try:
        data = _read_input(args.input)
        geometry = Geometry(_merge(data, "geometry", args.geometry))
        n = int(_merge(data, "n", args.n))
        radius = data.get("radius") if args.radius is None else args.radius
        lines = compute(args.kind, data, geometry, n, radius)
    except SchemaError as exc:
        print(f"SchemaError: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GeometryError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print("\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    geometries = tuple(Geometry(g) for g in args.geometry) if args.geometry else ()
    try:
        cfg = SuiteConfig(
            args.suite,
            geometries=geometries,
            n=args.n,
            samples=args.samples,
            seed=args.seed,
            tol=args.tol,
            fmt=args.format,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rep = run_suite(cfg)
    text = report_mod.emit(rep, cfg.fmt)
    if args.out and args.out != "-":
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cannot write report: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    print(rep.summary(), file=sys.stderr)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_sample(args) -> int:
    geometry = Geometry(args.geometry)
    quad = sample_quadruple(geometry, args.n, substream(args.seed))
    if geometry is Geometry.EUCLIDEAN:
        points = [p[:-1].tolist() for p in quad.points]
    else:
        points = [p.tolist() for p in quad.points]
    print(json.dumps({"geometry": geometry.value, "n": args.n, "points": points}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="curvkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    geoms = [g.value for g in Geometry]

    c = sub.add_parser("compute", help="evaluate a single quantity from JSON point data")
    c.add_argument("kind", choices=["distance", "cross-ratio", "hilbert", "project", "lift"])
    c.add_argument("--geometry", choices=geoms)
    c.add_argument("--n", type=int)
    c.add_argument("--input", required=True, help="JSON file, or - for stdin")
    c.add_argument("--radius", type=float)
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run a seeded verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--n", type=int, default=2)
    v.add_argument("--samples", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol", type=float)
    v.add_argument("--format", choices=["json", "csv"], default="json")
    v.add_argument("--out")
    v.add_argument("--geometry", action="append", choices=geoms)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sample", help="draw a random configuration")
    s.add_argument("what", choices=["quadruple"])
    s.add_argument("--geometry", choices=geoms, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_sample)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
