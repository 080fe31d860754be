"""JSON input parsing and report serialization.

Rationals are written as strings "p/q" (or plain integers); matrices are
row-major nested arrays.  See README for the full schema.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import IO

from . import liealg
from .exactlin import QMatrix, Subspace
from .pipeline import AbelianizationReport, InputError, OrbitModel
from .symmetry import (
    DEFAULT_GROUP_CAP,
    ConnectedLieAction,
    FiniteMatrixAction,
    TorusAction,
)


def _rational(x, where: str) -> Fraction:
    if isinstance(x, bool):
        raise InputError("%s: expected a rational, got a boolean" % where)
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError("%s: bad rational %r (%s)" % (where, x, exc)) from exc
    raise InputError("%s: expected int or 'p/q' string, got %r" % (where, x))


def _matrix(rows, where: str) -> QMatrix:
    if not isinstance(rows, list) or not rows or not all(
        isinstance(r, list) for r in rows
    ):
        raise InputError("%s: expected a nested array" % where)
    return QMatrix.from_rows(
        [
            [_rational(x, "%s[%d][%d]" % (where, i, j)) for j, x in enumerate(r)]
            for i, r in enumerate(rows)
        ]
    )


def _parse_action(doc: dict, where: str, cap: int):
    kind = doc.get("kind")
    if kind == "finite":
        dim = doc.get("dim")
        gens = doc.get("generators", [])
        if not isinstance(dim, int):
            raise InputError("%s: finite action needs integer 'dim'" % where)
        try:
            return FiniteMatrixAction(
                dim,
                tuple(
                    _matrix(g, "%s.generators[%d]" % (where, i))
                    for i, g in enumerate(gens)
                ),
                cap=cap,
            )
        except ValueError as exc:
            raise InputError("%s: %s" % (where, exc)) from exc
    if kind == "torus":
        weights = doc.get("weights")
        if not isinstance(weights, list) or not weights:
            raise InputError("%s: torus action needs a 'weights' matrix" % where)
        for i, row in enumerate(weights):
            if not all(isinstance(x, int) for x in row):
                raise InputError(
                    "%s.weights[%d]: weights must be integers" % (where, i)
                )
        try:
            return TorusAction(tuple(tuple(r) for r in weights))
        except ValueError as exc:
            raise InputError("%s: %s" % (where, exc)) from exc
    if kind == "connected_lie":
        dim = doc.get("dim")
        gens = doc.get("generators", [])
        if not isinstance(dim, int):
            raise InputError("%s: connected_lie action needs integer 'dim'" % where)
        try:
            return ConnectedLieAction(
                dim,
                tuple(
                    _matrix(g, "%s.generators[%d]" % (where, i))
                    for i, g in enumerate(gens)
                ),
            )
        except ValueError as exc:
            raise InputError("%s: %s" % (where, exc)) from exc
    raise InputError(
        "%s: unknown action kind %r (expected finite/torus/connected_lie)"
        % (where, kind)
    )


def _parse_isotropy(doc: dict, where: str) -> liealg.IsotropyData:
    dim = doc.get("dim")
    if not isinstance(dim, int):
        raise InputError("%s: isotropy data needs integer 'dim'" % where)
    constants = doc.get("structure_constants")
    if constants is None:
        raise InputError("%s: missing 'structure_constants'" % where)
    try:
        parsed = [
            [
                [
                    _rational(x, "%s.structure_constants[%d][%d][%d]" % (where, i, j, k))
                    for k, x in enumerate(row)
                ]
                for j, row in enumerate(plane)
            ]
            for i, plane in enumerate(constants)
        ]
        algebra = liealg.LieAlgebraSC.from_constants(dim, parsed)
    except (ValueError, liealg.JacobiError) as exc:
        raise InputError("%s: %s" % (where, exc)) from exc
    h_rows = doc.get("h_basis", [])
    h = Subspace.from_vectors(
        dim,
        [
            [_rational(x, "%s.h_basis[%d][%d]" % (where, i, j)) for j, x in enumerate(v)]
            for i, v in enumerate(h_rows)
        ],
    )
    autos = tuple(
        _matrix(a, "%s.automorphisms[%d]" % (where, i))
        for i, a in enumerate(doc.get("automorphisms", []))
    )
    ders = tuple(
        _matrix(d, "%s.derivations[%d]" % (where, i))
        for i, d in enumerate(doc.get("derivations", []))
    )
    try:
        return liealg.IsotropyData(algebra, h, autos, ders)
    except ValueError as exc:
        raise InputError("%s: %s" % (where, exc)) from exc


def parse_input(source: str | IO[str] | dict) -> tuple[list[OrbitModel], dict]:
    """Parse an input document into orbit models and an options dict."""
    if isinstance(source, dict):
        doc = source
    elif isinstance(source, str):
        doc = json.loads(source)
    else:
        doc = json.load(source)
    if not isinstance(doc, dict) or "orbits" not in doc:
        raise InputError("top level must be an object with an 'orbits' array")
    options = doc.get("options", {}) or {}
    cap = options.get("group_cap", DEFAULT_GROUP_CAP)
    models = []
    for i, rec in enumerate(doc["orbits"]):
        where = "orbits[%d]" % i
        if not isinstance(rec, dict):
            raise InputError("%s: expected an object" % where)
        label = rec.get("label", "orbit-%d" % i)
        action_doc = rec.get("slice_action")
        if not isinstance(action_doc, dict):
            raise InputError("%s: missing 'slice_action'" % where)
        action = _parse_action(action_doc, where + ".slice_action", cap)
        iso = None
        if rec.get("isotropy_lie") is not None:
            iso = _parse_isotropy(rec["isotropy_lie"], where + ".isotropy_lie")
        models.append(
            OrbitModel(
                label=label,
                slice_action=action,
                isotropy_lie=iso,
                quotient_requested=bool(rec.get("quotient", False)),
            )
        )
    return models, options


def parse_file(path: str) -> tuple[list[OrbitModel], dict]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_input(fh)


def serialize_report(report: AbelianizationReport) -> str:
    return json.dumps(report.to_dict(), indent=2)


def parse_report(text: str) -> AbelianizationReport:
    return AbelianizationReport.from_dict(json.loads(text))


def format_report(report: AbelianizationReport) -> str:
    lines = []
    for o in report.orbits:
        lines.append("orbit %s:" % o.label)
        lines.append(
            "  commutant dim %d, (m, l) = (%d, %d), center dim %d, "
            "abelianization dim %d" % (o.commutant_dim, o.m, o.l, o.center_dim,
                                       o.abelianization_dim)
        )
        lines.append(
            "  center-splits check: %s"
            % ("pass" if o.center_split_passed else "FAIL")
        )
        if o.lie_summand_dim is not None:
            lines.append("  Lie summand dim %d" % o.lie_summand_dim)
        if o.quotient is not None:
            q = o.quotient
            lines.append(
                "  quotient: R^%d + C^%d (k = %d, %s)"
                % (q.real_rank, q.complex_rank, q.k, q.exactness)
            )
    lines.append(
        "totals: R^%d + C^%d%s"
        % (
            report.real_rank,
            report.complex_rank,
            " + Lie summands of dims %s" % (list(report.lie_dims),)
            if report.lie_dims
            else "",
        )
    )
    if report.quotient_real_rank is not None:
        lines.append(
            "quotient totals: R^%d + C^%d"
            % (report.quotient_real_rank, report.quotient_complex_rank)
        )
    return "\n".join(lines)
