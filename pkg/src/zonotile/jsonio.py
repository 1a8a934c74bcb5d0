"""Canonical JSON encodings for every value the CLI reads or writes.

Field elements serialize as arrays of monomial terms
``{"monomial": "1"|"r2"|"r6"|..., "num": "...", "den": "..."}`` where the
monomial key is "r" followed by the product of the radicands it contains.
Documents that contain elements carry a top-level ``"field"`` key listing
the radicands, which makes decoding unambiguous.  Encoding is canonical:
lattices are in canonical basis form, keys are emitted sorted, and
round-tripping is bit-exact.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .covering import Polygon, TranslateSet, VerifyReport
from .criteria import BolleReport, CanonicalLattice, Decision
from .errors import GeometryError, ZonotileError
from .field import Field, FieldElement, RATIONALS
from .lattice import PlaneLattice, PlaneVector
from .patterns import builtin_scene
from .zonotope import Zonotope

__all__ = [
    "dumps",
    "encode_element",
    "decode_element",
    "encode_vector",
    "decode_vector",
    "encode_lattice",
    "decode_lattice",
    "encode_zonotope",
    "decode_zonotope_document",
    "decode_lattice_document",
    "decode_scene_document",
    "encode_decision",
    "encode_bolle_report",
    "encode_verify_report",
    "encode_canonical_lattice",
    "parse_rational",
    "parse_element_text",
]


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# -- scalars ------------------------------------------------------------------


def parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise GeometryError(f"expected a rational number, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise GeometryError(f"bad rational literal {value!r}") from exc
    raise GeometryError(f"expected a rational number, got {value!r}")


def parse_element_text(text: str, field: Field | None = None) -> FieldElement:
    """Parse a small sum like ``"1/2 + 3*sqrt(2) - sqrt(6)"`` exactly.

    Intended for CLI flags; radicands mentioned in the text are adjoined
    automatically when no field is given.
    """
    src = text.replace(" ", "").replace("-", "+-")
    terms = [t for t in src.split("+") if t]
    parsed: list[tuple[Fraction, int | None]] = []
    rads: set[int] = set()
    for term in terms:
        coef = Fraction(1)
        rad = None
        body = term
        if body.startswith("-"):
            coef = -coef
            body = body[1:]
        if "sqrt(" in body:
            head, _, tail = body.partition("sqrt(")
            if not tail.endswith(")"):
                raise GeometryError(f"bad term {term!r} in element text")
            rad = int(tail[:-1])
            if head:
                if head.endswith("*"):
                    head = head[:-1]
                coef *= Fraction(head)
        else:
            coef *= Fraction(body)
        parsed.append((coef, rad))
        if rad is not None and rad >= 2:
            rads.add(rad)
    if field is None:
        field = Field(sorted(rads)) if rads else RATIONALS
    out = field.zero()
    for coef, rad in parsed:
        if rad is None or rad == 1:
            out = out + field.rational(coef)
        elif rad == 0:
            continue
        else:
            out = out + field.sqrt(rad) * coef
    return out


# -- field elements ------------------------------------------------------------


def encode_element(x: FieldElement) -> list[dict]:
    out = []
    for mask, c in enumerate(x.coeffs):
        if not c:
            continue
        name = "1" if mask == 0 else f"r{x.field.products[mask]}"
        out.append({"monomial": name, "num": str(c.numerator), "den": str(c.denominator)})
    return out


def decode_element(terms, field: Field) -> FieldElement:
    if not isinstance(terms, list):
        raise GeometryError(f"element must be a list of terms, got {terms!r}")
    coeffs = {}
    for term in terms:
        name = term["monomial"]
        if name == "1":
            mask = 0
        elif name.startswith("r"):
            mask = field._mask_of_product.get(int(name[1:]))
            if mask is None:
                raise GeometryError(f"monomial {name!r} does not exist in field {list(field.radicands)}")
        else:
            raise GeometryError(f"bad monomial key {name!r}")
        if mask in coeffs:
            raise GeometryError(f"duplicate monomial {name!r}")
        coeffs[mask] = Fraction(int(term["num"]), int(term["den"]))
    return field.element(coeffs)


def encode_vector(v: PlaneVector) -> dict:
    return {"x": encode_element(v.x), "y": encode_element(v.y)}


def decode_vector(doc, field: Field) -> PlaneVector:
    return PlaneVector(decode_element(doc["x"], field), decode_element(doc["y"], field))


# -- lattices and polygons -------------------------------------------------------


def encode_lattice(lat: PlaneLattice) -> dict:
    return {"basis": [encode_vector(lat.b1), encode_vector(lat.b2)]}


def decode_lattice(doc, field: Field) -> PlaneLattice:
    basis = doc["basis"]
    if len(basis) != 2:
        raise GeometryError("lattice basis must have exactly 2 vectors")
    return PlaneLattice(decode_vector(basis[0], field), decode_vector(basis[1], field))


def _decode_field(doc, field: Field | None = None) -> Field:
    declared = Field(doc.get("field", []))
    return declared if field is None else field.union(declared)


def encode_zonotope(z: Zonotope) -> dict:
    return {
        "field": list(z.field.radicands),
        "generators": [encode_vector(g) for g in z.generators],
    }


def decode_zonotope_document(doc, field: Field | None = None) -> Zonotope:
    field = _decode_field(doc, field)
    if "generators" in doc:
        return Zonotope([decode_vector(v, field) for v in doc["generators"]])
    if "vertices" in doc:
        return Zonotope.from_vertices([decode_vector(v, field) for v in doc["vertices"]])
    raise GeometryError("zonotope document needs 'generators' or 'vertices'")


def decode_lattice_document(doc, field: Field | None = None) -> PlaneLattice:
    return decode_lattice(doc, _decode_field(doc, field))


# -- scenes ---------------------------------------------------------------------


def _decode_window(doc) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    if not isinstance(doc, list) or len(doc) != 4:
        raise GeometryError("window must be [x0, y0, x1, y1]")
    return tuple(parse_rational(v) for v in doc)


def _decode_beta(doc, field: Field | None):
    if doc is None:
        return None
    if isinstance(doc, (int, str)):
        if isinstance(doc, str) and "sqrt" in doc:
            return parse_element_text(doc, field)
        return parse_rational(doc)
    if isinstance(doc, list):
        if field is None:
            rads = sorted(
                {
                    int(term["monomial"][1:])
                    for term in doc
                    if term.get("monomial", "1") != "1"
                }
            )
            field = Field(rads)
        return decode_element(doc, field)
    raise GeometryError(f"bad beta value {doc!r}")


def decode_scene_document(doc) -> tuple[Polygon, TranslateSet, str]:
    """A scene: polygon + translate set + preferred verification mode."""
    mode = doc.get("mode", "exact")
    lam = doc.get("lambda")
    if lam is None:
        raise GeometryError("scene needs a 'lambda' entry")
    if "builtin" in lam:
        window = _decode_window(lam["window"]) if "window" in lam else None
        field_doc = doc.get("field")
        field = Field(field_doc) if field_doc else None
        beta = _decode_beta(lam.get("beta"), field)
        poly, tset = builtin_scene(lam["builtin"], window=window, beta=beta)
        return poly, tset, mode
    field = _decode_field(doc)
    poly_doc = doc.get("polygon")
    if poly_doc is None:
        raise GeometryError("scene needs a 'polygon' entry")
    if "vertices" in poly_doc:
        poly = Polygon([decode_vector(v, field) for v in poly_doc["vertices"]])
    elif "generators" in poly_doc:
        poly = Polygon.from_zonotope(Zonotope([decode_vector(v, field) for v in poly_doc["generators"]]))
    else:
        raise GeometryError("scene polygon needs 'vertices' or 'generators'")
    parts_doc = lam.get("periodic")
    if not parts_doc:
        raise GeometryError("scene lambda needs 'periodic' parts or a 'builtin' name")
    parts = []
    for part in parts_doc:
        lat = decode_lattice(part["lattice"], field)
        offset = (
            decode_vector(part["offset"], field)
            if "offset" in part
            else PlaneVector(field.zero(), field.zero())
        )
        parts.append((lat, offset))
    return poly, TranslateSet.periodic(parts), mode


def encode_scene_builtin(name: str, window, beta) -> dict:
    doc: dict = {"lambda": {"builtin": name}, "mode": "exact"}
    if window is not None:
        doc["lambda"]["window"] = [str(Fraction(w)) for w in window]
    if beta is not None:
        if isinstance(beta, FieldElement):
            doc["field"] = list(beta.field.radicands)
            doc["lambda"]["beta"] = encode_element(beta)
        else:
            doc["lambda"]["beta"] = str(Fraction(beta))
    return doc


# -- reports ---------------------------------------------------------------------


def encode_decision(dec: Decision, field: Field) -> dict:
    return {
        "field": list(field.radicands),
        "multi_tiles": dec.multi_tiles,
        "branch": dec.branch,
        "j0": dec.j0,
        "witness_lattice": encode_lattice(dec.witness_lattice) if dec.witness_lattice else None,
        "witness_multiplicity": dec.witness_multiplicity,
        "succeeded_j0": list(dec.succeeded_j0),
        "failure_reason": dec.failure_reason,
    }


def encode_bolle_report(report: BolleReport, field: Field) -> dict:
    return {
        "field": list(field.radicands),
        "verdict": report.verdict,
        "multiplicity": report.multiplicity,
        "pairs": [{"j": p.j, "cond1": p.cond1, "cond2": p.cond2} for p in report.pairs],
    }


def encode_verify_report(report: VerifyReport, field: Field) -> dict:
    ce = None
    if report.counterexample is not None:
        (p1, c1), (p2, c2) = report.counterexample
        ce = {"points": [encode_vector(p1), encode_vector(p2)], "counts": [c1, c2]}
    return {
        "field": list(field.radicands),
        "constant": report.constant,
        "multiplicity": report.multiplicity,
        "counterexample": ce,
        "cells_checked": report.cells_checked,
        "window_relative": report.window_relative,
    }


def encode_canonical_lattice(result: CanonicalLattice, field: Field) -> dict:
    return {
        "field": list(field.radicands),
        "lattice": encode_lattice(result.lattice),
        "source": result.source,
        "contributing_j": list(result.contributing_j),
    }


def load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ZonotileError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise ZonotileError(f"{path}: top-level JSON value must be an object")
    return doc
