"""JSON function files and the exact numeric literal format.

A function file is  {"breakpoints": [{"x": lit, "value": lit}, ...],
"segments": [{"slope": lit, "intercept": lit}, ...]}  where a literal is an
integer, or a string holding an integer, an exact decimal, or "p/q".  Files
for extended functions may additionally use "-inf"/"+inf" as breakpoint
values and as the intercept of a slope-0 end piece; plain function files
reject them.  Emission always uses "p/q" strings (never floats), so
emit -> parse is the identity on canonical forms.
"""

from __future__ import annotations

from fractions import Fraction

from .core import ExtPiecewise, InfSegment, PiecewiseMonotone, Segment
from .errors import ParseError
from .scalars import NEG_INF, POS_INF, ExtReal, as_rational, fin


def rational_token(q: Fraction) -> str:
    return str(q)


def ext_token(v: ExtReal) -> str:
    return str(v)


def parse_rational_token(token) -> Fraction:
    if isinstance(token, float):
        raise ParseError(
            f"JSON number {token!r} is not exact; quote decimals as strings"
        )
    return as_rational(token)


def parse_ext_token(token) -> ExtReal:
    if isinstance(token, str):
        text = token.strip()
        if text == "-inf":
            return NEG_INF
        if text in ("+inf", "inf"):
            return POS_INF
    return fin(parse_rational_token(token))


def _entries(obj, key) -> list:
    if not isinstance(obj, dict):
        raise ParseError("function file must be a JSON object")
    value = obj.get(key)
    if not isinstance(value, list):
        raise ParseError(f"function file needs a {key!r} array")
    return value


def function_to_obj(f: PiecewiseMonotone) -> dict:
    return {
        "breakpoints": [
            {"x": rational_token(x), "value": rational_token(v)}
            for x, v in f.breakpoints
        ],
        "segments": [
            {"slope": rational_token(s.slope), "intercept": rational_token(s.intercept)}
            for s in f.segments
        ],
    }


def parse_function_obj(obj) -> PiecewiseMonotone:
    breakpoints = []
    for i, entry in enumerate(_entries(obj, "breakpoints")):
        try:
            breakpoints.append(
                (parse_rational_token(entry["x"]), parse_rational_token(entry["value"]))
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"breakpoint {i} needs 'x' and 'value'") from exc
    segments = []
    for i, entry in enumerate(_entries(obj, "segments")):
        try:
            segments.append(
                Segment(
                    parse_rational_token(entry["slope"]),
                    parse_rational_token(entry["intercept"]),
                )
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"segment {i} needs 'slope' and 'intercept'") from exc
    return PiecewiseMonotone.from_parts(breakpoints, segments)


def ext_function_to_obj(g: ExtPiecewise) -> dict:
    segments = []
    for seg in g.segments:
        if isinstance(seg, InfSegment):
            segments.append({"slope": "0", "intercept": ext_token(seg.level)})
        else:
            segments.append(
                {
                    "slope": rational_token(seg.slope),
                    "intercept": rational_token(seg.intercept),
                }
            )
    return {
        "breakpoints": [
            {"x": rational_token(x), "value": ext_token(v)} for x, v in g.breakpoints
        ],
        "segments": segments,
    }


def parse_ext_function_obj(obj) -> ExtPiecewise:
    breakpoints = []
    for i, entry in enumerate(_entries(obj, "breakpoints")):
        try:
            breakpoints.append(
                (parse_rational_token(entry["x"]), parse_ext_token(entry["value"]))
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"breakpoint {i} needs 'x' and 'value'") from exc
    segments = []
    for i, entry in enumerate(_entries(obj, "segments")):
        try:
            intercept = parse_ext_token(entry["intercept"])
            slope = parse_rational_token(entry["slope"])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"segment {i} needs 'slope' and 'intercept'") from exc
        if intercept.is_finite:
            segments.append(Segment(slope, intercept.finite))
        else:
            if slope != 0:
                raise ParseError(f"segment {i}: infinite pieces must have slope 0")
            segments.append(InfSegment(intercept))
    return ExtPiecewise.from_parts(breakpoints, segments)
