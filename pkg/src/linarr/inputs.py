"""Resolving command-line inputs and reading or writing the JSON formats.

An input is a built-in name, a path to a JSON or text file, or an expression.
JSON files hold either ``{"lines": [[a, b, c], ...]}`` or
``{"vertices": [[x, y, z], x6]}`` with every number written as a ``"p/q"``
string (plain integers are accepted too, decimals are not).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Sequence

from .arrangement import Arrangement, DuplicateLineError
from .builtins import DIAGONALS, NAMES, builtin, builtin_hexagon
from .hexagon import Hexagon, build_arrangement, hexagon_decompositions, six_points_on_conic
from .linalg import format_rational, parse_rational
from .parse import ParseError, parse, parse_linear_factors
from .poly import HomPoly, LinearForm


class InputFormatError(ValueError):
    """Malformed input file or JSON document (reported as a parse error)."""


@dataclass
class ResolvedInput:
    label: str
    polynomial: HomPoly
    arrangement: Arrangement | None = None
    hexagon: Hexagon | None = None

    @property
    def trusted(self) -> bool:
        """True when the polynomial was not given as a product of linear forms.

        Reducedness of such input is assumed rather than checked.
        """
        return self.arrangement is None


def rational_triple(item: Sequence) -> tuple:
    if not isinstance(item, (list, tuple)) or len(item) != 3:
        raise InputFormatError(f"expected a triple of rationals, got {item!r}")
    try:
        return tuple(parse_rational(c) for c in item)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from None


def arrangement_from_json(data: dict) -> Arrangement:
    lines = data.get("lines")
    if not isinstance(lines, list) or not lines:
        raise InputFormatError('arrangement JSON needs a nonempty "lines" list')
    forms = []
    for l in lines:
        try:
            forms.append(LinearForm.of(rational_triple(l)))
        except InputFormatError:
            raise
        except ValueError as exc:
            raise InputFormatError(str(exc)) from None
    return Arrangement.of(forms)


def arrangement_to_json(a: Arrangement) -> dict:
    return {"lines": [[format_rational(c) for c in l.coeffs] for l in a.lines]}


def hexagon_from_json(data: dict) -> Hexagon:
    verts = data.get("vertices")
    if not isinstance(verts, list) or len(verts) != 6:
        raise InputFormatError('hexagon JSON needs a "vertices" list of 6 points')
    return Hexagon.of([rational_triple(v) for v in verts])


def preferred_hexagon(a: Arrangement) -> Hexagon | None:
    """A hexagon decomposition of a 9-line arrangement, preferring one on a conic."""
    found = hexagon_decompositions(a)
    for h in found:
        if six_points_on_conic([p.coords for p in h.vertices]).on_conic:
            return h
    return found[0] if found else None


def _from_json_document(label: str, data) -> ResolvedInput:
    if not isinstance(data, dict):
        raise InputFormatError("top-level JSON value must be an object")
    if "vertices" in data:
        h = hexagon_from_json(data)
        a, _ = build_arrangement(h)
        return ResolvedInput(label, a.polynomial(), a, h)
    a = arrangement_from_json(data)
    return ResolvedInput(label, a.polynomial(), a, preferred_hexagon(a) if len(a) == 9 else None)


def _from_expression(label: str, text: str) -> ResolvedInput:
    factors = parse_linear_factors(text)
    if factors is not None:
        if len(set(factors)) != len(factors):
            raise DuplicateLineError("repeated linear factor; the curve is not reduced")
        a = Arrangement.of(factors)
        return ResolvedInput(label, a.polynomial(), a, preferred_hexagon(a) if len(a) == 9 else None)
    return ResolvedInput(label, parse(text))


def resolve(text: str) -> ResolvedInput:
    if text in NAMES:
        a = builtin(text)
        h = builtin_hexagon(text) if text in DIAGONALS else None
        return ResolvedInput(text, a.polynomial(), a, h)
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            body = fh.read()
        if text.endswith(".json"):
            try:
                data = json.loads(body)
            except json.JSONDecodeError as exc:
                raise InputFormatError(f"{text}: {exc}") from None
            return _from_json_document(text, data)
        return _from_expression(text, body.strip())
    return _from_expression(text, text)


PARSE_ERRORS = (ParseError, InputFormatError)
