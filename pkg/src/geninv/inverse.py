"""Left- and right-continuous generalized inverses, exact and in closed form.

For a nondecreasing f the two inverses are

    plus(y)  = inf {x : f(x) > y}      (right-continuous convention)
    minus(y) = inf {x : f(x) >= y}     (left-continuous convention)

with inf(empty) = +inf and inf(R) = -inf, together with the equivalent
sup forms  plus(y) = sup {x : f(x) <= y}  and  minus(y) = sup {x : f(x) < y}.

Two independent code paths are exposed on purpose:

* ``pointwise_inf_plus`` / ``pointwise_inf_minus`` (and the sup variants)
  transcribe the definitions directly, scanning pieces for the first
  threshold crossing.
* ``invert_plus`` / ``invert_minus`` build the whole inverse in closed form
  from the structure of f: strictly increasing pieces invert to affine
  pieces, each jump of f becomes a constant piece of the inverse across the
  skipped band, each plateau of f becomes a breakpoint of the inverse, and
  levels outside the closure of f's range map to the -inf/+inf end pieces.
  Breakpoint values are the right limits for plus and the left limits for
  minus, which is exactly what the definitions yield.

The property suite checks the two paths against each other exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .core import ExtPiecewise, InfSegment, PiecewiseMonotone, Segment
from .scalars import NEG_INF, POS_INF, ExtReal, as_rational, fin


def _const_level(seg) -> ExtReal:
    if isinstance(seg, InfSegment):
        return seg.level
    return fin(seg.intercept)


def _scan_inf(f, y: Fraction, strict: bool) -> ExtReal:
    """inf {x : f(x) > y} (strict) or inf {x : f(x) >= y} (non-strict).

    Works on both real-valued and extended-valued functions; walks pieces
    left to right and stops at the first one meeting the threshold.
    """
    yy = fin(y)

    def good(v: ExtReal) -> bool:
        return v > yy if strict else v >= yy

    xs = f._xs
    n = len(xs)
    for k, seg in enumerate(f.segments):
        a, b = f._slot_bounds(k)
        if isinstance(seg, InfSegment) or seg.slope == 0:
            if good(_const_level(seg)):
                return NEG_INF if a is None else fin(a)
        else:
            top = fin(seg.value_at(b)) if b is not None else POS_INF
            # the open piece meets {> y} and {>= y} under the same criterion,
            # and both have the same infimum max(a, crossing)
            if top > yy:
                t = (y - seg.intercept) / seg.slope
                if a is not None and t <= a:
                    return fin(a)
                return fin(t)
        if k < n:
            if good(f.eval_ext(xs[k])):
                return fin(xs[k])
    return POS_INF


def _scan_sup(f, y: Fraction, strict: bool) -> ExtReal:
    """sup {x : f(x) < y} (strict) or sup {x : f(x) <= y} (non-strict)."""
    yy = fin(y)

    def good(v: ExtReal) -> bool:
        return v < yy if strict else v <= yy

    xs = f._xs
    for k in range(len(f.segments) - 1, -1, -1):
        seg = f.segments[k]
        a, b = f._slot_bounds(k)
        if isinstance(seg, InfSegment) or seg.slope == 0:
            if good(_const_level(seg)):
                return POS_INF if b is None else fin(b)
        else:
            bottom = fin(seg.value_at(a)) if a is not None else NEG_INF
            if bottom < yy:
                t = (y - seg.intercept) / seg.slope
                if b is not None and t >= b:
                    return fin(b)
                return fin(t)
        if k > 0:
            if good(f.eval_ext(xs[k - 1])):
                return fin(xs[k - 1])
    return NEG_INF


def pointwise_inf_plus(f, y) -> ExtReal:
    """inf {x : f(x) > y}, straight from the definition."""
    return _scan_inf(f, as_rational(y), strict=True)


def pointwise_inf_minus(f, y) -> ExtReal:
    """inf {x : f(x) >= y}, straight from the definition."""
    return _scan_inf(f, as_rational(y), strict=False)


def pointwise_sup_plus(f, y) -> ExtReal:
    """sup {x : f(x) <= y} with sup(empty) = -inf and sup(R) = +inf."""
    return _scan_sup(f, as_rational(y), strict=False)


def pointwise_sup_minus(f, y) -> ExtReal:
    """sup {x : f(x) < y} with the same conventions."""
    return _scan_sup(f, as_rational(y), strict=True)


def _law_value(law, x: Fraction) -> ExtReal:
    if isinstance(law, InfSegment):
        return law.level
    return fin(law.value_at(x))


def _invert(f: PiecewiseMonotone, plus: bool) -> ExtPiecewise:
    # Tile the level axis left to right with the inverse's pieces:
    #   * a -inf piece below the range when f is bounded below,
    #   * the reflected law of every strictly increasing piece of f,
    #   * a constant piece at x across every jump band of f,
    #   * a +inf piece above the range when f is bounded above.
    # Plateaus of f contribute no tile; they surface as the junctions
    # between tiles, i.e. as breakpoints of the inverse.
    tiles: list[tuple[ExtReal, ExtReal, Segment | InfSegment]] = []
    lo = f.limit_at_neg_inf()
    hi = f.limit_at_pos_inf()
    if lo.is_finite:
        tiles.append((NEG_INF, lo, InfSegment(NEG_INF)))
    xs = f._xs
    n = len(xs)
    for k, seg in enumerate(f.segments):
        a, b = f._slot_bounds(k)
        if seg.slope > 0:
            ya = fin(seg.value_at(a)) if a is not None else NEG_INF
            yb = fin(seg.value_at(b)) if b is not None else POS_INF
            inv_slope = 1 / seg.slope
            tiles.append((ya, yb, Segment(inv_slope, -seg.intercept * inv_slope)))
        if k < n:
            x = xs[k]
            left = f.segments[k].value_at(x)
            right = f.segments[k + 1].value_at(x)
            if left < right:
                tiles.append((fin(left), fin(right), Segment(Fraction(0), x)))
    if hi.is_finite:
        tiles.append((hi, POS_INF, InfSegment(POS_INF)))

    segments = [tiles[0][2]]
    breakpoints = []
    for j in range(1, len(tiles)):
        level = tiles[j][0]
        assert tiles[j - 1][1] == level and level.is_finite, "tiles must abut"
        law = tiles[j][2] if plus else tiles[j - 1][2]
        breakpoints.append((level.finite, _law_value(law, level.finite)))
        segments.append(tiles[j][2])
    return ExtPiecewise(tuple(breakpoints), tuple(segments)).canonical()


def invert_plus(f: PiecewiseMonotone) -> ExtPiecewise:
    """The right-continuous generalized inverse as a whole function."""
    return _invert(f, plus=True)


def invert_minus(f: PiecewiseMonotone) -> ExtPiecewise:
    """The left-continuous generalized inverse as a whole function."""
    return _invert(f, plus=False)
