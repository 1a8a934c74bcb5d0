"""Command-line front end.

Exit codes follow one convention everywhere: 0 for a positive verdict,
1 for a negative one, 2 for input or usage errors.  All reports are
canonical JSON on stdout, so identical inputs produce byte-identical
output.
"""

from __future__ import annotations

import argparse
import sys

from . import jsonio
from .covering import Box, verify_covering
from .criteria import bolle_check, canonical_lattice, decide_multitiling
from .errors import GeometryError, ZonotileError
from .field import FieldElement
from .patterns import BUILTIN_NAMES
from .render import render_svg


def _parse_window_flag(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise GeometryError("--window needs x0,y0,x1,y1")
    return tuple(jsonio.parse_rational(p.strip()) for p in parts)


def _emit(doc) -> None:
    sys.stdout.write(jsonio.dumps(doc))


def _cmd_decide(args) -> int:
    z = jsonio.decode_zonotope_document(jsonio.load_document(args.polygon))
    decision = decide_multitiling(z)
    _emit(jsonio.encode_decision(decision, z.field))
    return 0 if decision.multi_tiles else 1


def _cmd_check(args) -> int:
    poly_doc = jsonio.load_document(args.polygon)
    lat_doc = jsonio.load_document(args.lattice)
    lat = jsonio.decode_lattice_document(lat_doc)
    z = jsonio.decode_zonotope_document(poly_doc, field=lat.field)
    lat = jsonio.decode_lattice_document(lat_doc, field=z.field)
    report = bolle_check(z, lat)
    _emit(jsonio.encode_bolle_report(report, z.field))
    return 0 if report.verdict else 1


def _cmd_canon(args) -> int:
    z = jsonio.decode_zonotope_document(jsonio.load_document(args.polygon))
    decision = decide_multitiling(z)
    if z.is_parallelogram() or not decision.multi_tiles:
        _emit(jsonio.encode_decision(decision, z.field))
        return 1
    result = canonical_lattice(z)
    _emit(jsonio.encode_canonical_lattice(result, z.field))
    return 0


def _cmd_verify(args) -> int:
    poly, tset, mode = jsonio.decode_scene_document(jsonio.load_document(args.scene))
    if args.mode:
        mode = args.mode
    report = verify_covering(poly, tset, mode=mode, samples=args.samples)
    _emit(jsonio.encode_verify_report(report, poly.field))
    return 0 if report.constant else 1


def _cmd_render(args) -> int:
    doc = jsonio.load_document(args.scene)
    poly, tset, _ = jsonio.decode_scene_document(doc)
    if args.window:
        window = _parse_window_flag(args.window)
    elif "window" in doc.get("lambda", {}):
        window = tuple(jsonio.parse_rational(w) for w in doc["lambda"]["window"])
    else:
        raise GeometryError("render needs a window (--window or the scene's lambda.window)")
    field = poly.field
    box = Box(*(field.rational(w) for w in window))
    svg = render_svg(poly, tset, box)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return 0


def _cmd_examples(args) -> int:
    window = _parse_window_flag(args.window) if args.window else None
    beta = None
    if args.beta is not None:
        beta = jsonio.parse_element_text(args.beta)
        if isinstance(beta, FieldElement) and beta.is_rational():
            beta = beta.rational_value()
    doc = jsonio.encode_scene_builtin(args.name, window, beta)
    # build once to validate the combination before emitting
    jsonio.decode_scene_document(doc)
    _emit(doc)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zonotile",
        description="Exact multi-tiling decisions and covering verification for planar zonotopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide whether a zonotope admits translational multi-tilings")
    p.add_argument("polygon", help="zonotope JSON file (generators or vertices)")
    p.set_defaults(fn=_cmd_decide)

    p = sub.add_parser("check", help="check one lattice against the per-edge-pair criterion")
    p.add_argument("polygon")
    p.add_argument("lattice", help="lattice JSON file")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("canon", help="compute the canonical lattice of a multi-tiling zonotope")
    p.add_argument("polygon")
    p.set_defaults(fn=_cmd_canon)

    p = sub.add_parser("verify", help="verify covering constancy of a scene")
    p.add_argument("scene", help="scene JSON file")
    p.add_argument("--mode", choices=["exact", "sampled"], default=None)
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("render", help="render a scene to SVG, faces filled by multiplicity")
    p.add_argument("scene")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--window", help="x0,y0,x1,y1 (rationals)")
    p.set_defaults(fn=_cmd_render)

    p = sub.add_parser("examples", help="emit a builtin scene as JSON")
    p.add_argument("name", choices=list(BUILTIN_NAMES))
    p.add_argument("--window", help="x0,y0,x1,y1 (rationals)")
    p.add_argument("--beta", help="offset for octagon-family, e.g. '1/3' or 'sqrt(2)'")
    p.set_defaults(fn=_cmd_examples)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.fn(args)
    except (ZonotileError, OSError, KeyError, ValueError, TypeError) as exc:
        print(f"zonotile: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
