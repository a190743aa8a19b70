"""Exact composition and closed-form composition predictions.

``compose_exact`` is the ground truth: it builds outer(inner(.)) exactly by
pulling the outer function's breakpoints back through the inner one, with
outer evaluated at its -inf/+inf limits wherever the inner function is
infinite.

The predictors state, as explicit piecewise laws with holes, what the
composition of a function with its generalized inverses must look like:

* ``predict_T_after_inv``: f(inverse(y)) is constant at f(x_i) across each
  open jump band (y_i-, y_i+) of f and the identity elsewhere inside the
  open range of f; band endpoints and everything outside the range are
  excluded (their values are recorded, never asserted).
* ``predict_inv_after_T``: inverse(f(x)) is constant at the plateau edge
  (right edge for plus, left for minus) across each open plateau core and
  the identity outside the closed plateau hulls; finite plateau edges are
  excluded.
* ``predict_one_sided``: under global right- (resp. left-) continuity the
  bands become half-open and the gaps close; only out-of-range levels stay
  excluded.

A report compares its prediction against ``compose_exact`` exactly and
lists every mismatch with a witness point.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    ExtPiecewise,
    InfSegment,
    PiecewiseMonotone,
    PlateauRecord,
    Segment,
)
from .errors import NotOneSidedContinuous
from .inverse import invert_minus, invert_plus, pointwise_inf_minus, pointwise_inf_plus
from .scalars import NEG_INF, POS_INF, ExtReal, fin

_IDENTITY_LAW = Segment(Fraction(1), Fraction(0))


def _const_law(value: ExtReal) -> Segment | InfSegment:
    if value.is_finite:
        return Segment(Fraction(0), value.finite)
    return InfSegment(value)


def _outer_at(outer: ExtPiecewise, value: ExtReal) -> ExtReal:
    if value == NEG_INF:
        return outer.limit_at_neg_inf()
    if value == POS_INF:
        return outer.limit_at_pos_inf()
    return outer.eval_ext(value.finite)


def compose_exact(outer, inner) -> ExtPiecewise:
    """outer(inner(.)) as an exact extended piecewise function."""
    o = outer.as_ext()
    g = inner.as_ext()
    xs = g._xs
    n = len(xs)
    segments: list[Segment | InfSegment] = []
    breakpoints: list[tuple[Fraction, ExtReal]] = []

    for k, seg in enumerate(g.segments):
        a, b = g._slot_bounds(k)
        if isinstance(seg, InfSegment):
            segments.append(_const_law(_outer_at(o, seg.level)))
        elif seg.slope == 0:
            segments.append(_const_law(o.eval_ext(seg.intercept)))
        else:
            lo_img = fin(seg.value_at(a)) if a is not None else NEG_INF
            hi_img = fin(seg.value_at(b)) if b is not None else POS_INF
            pulled = [
                (beta, (beta - seg.intercept) / seg.slope)
                for beta in o._xs
                if lo_img < fin(beta) < hi_img
            ]
            edges: list[Fraction | None] = [a] + [y for _, y in pulled] + [b]
            for i in range(len(edges) - 1):
                e_lo, e_hi = edges[i], edges[i + 1]
                if e_lo is None and e_hi is None:
                    probe = Fraction(0)
                elif e_lo is None:
                    probe = e_hi - 1
                elif e_hi is None:
                    probe = e_lo + 1
                else:
                    probe = (e_lo + e_hi) / 2
                z = seg.value_at(probe)
                oseg = o.segments[bisect.bisect_left(o._xs, z)]
                if i > 0:
                    beta, y_at = pulled[i - 1]
                    breakpoints.append((y_at, o.eval_ext(beta)))
                if isinstance(oseg, InfSegment):
                    segments.append(oseg)
                else:
                    segments.append(
                        Segment(
                            oseg.slope * seg.slope,
                            oseg.intercept + oseg.slope * seg.intercept,
                        )
                    )
        if k < n:
            x, v = g.breakpoints[k]
            breakpoints.append((x, _outer_at(o, v)))
    return ExtPiecewise(tuple(breakpoints), tuple(segments)).canonical()


@dataclass(frozen=True)
class LawPiece:
    """A predicted law on an open interval of the input axis."""

    lo: ExtReal
    hi: ExtReal
    law: Segment | InfSegment


@dataclass(frozen=True)
class PointPrediction:
    x: Fraction
    value: ExtReal


@dataclass(frozen=True)
class EdgeObservation:
    """An excluded point together with the value the composition takes there."""

    x: Fraction
    actual: ExtReal


@dataclass(frozen=True)
class Mismatch:
    point: Fraction
    predicted: ExtReal
    actual: ExtReal


@dataclass(frozen=True)
class CompositionReport:
    """A piecewise prediction with holes, checked exactly against the truth."""

    label: str
    predicted: tuple[LawPiece, ...]
    predicted_points: tuple[PointPrediction, ...]
    excluded_points: tuple[EdgeObservation, ...]
    excluded_regions: tuple[tuple[ExtReal, ExtReal], ...]
    actual: ExtPiecewise
    mismatches: tuple[Mismatch, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _interior_point(lo: ExtReal, hi: ExtReal) -> Fraction:
    if lo.is_finite and hi.is_finite:
        return (lo.finite + hi.finite) / 2
    if lo.is_finite:
        return lo.finite + 1
    if hi.is_finite:
        return hi.finite - 1
    return Fraction(0)


def _law_at(law: Segment | InfSegment, x: Fraction) -> ExtReal:
    if isinstance(law, InfSegment):
        return law.level
    return fin(law.value_at(x))


def _check_piece(actual: ExtPiecewise, piece: LawPiece, found: list[Mismatch]):
    for k in range(len(actual.segments)):
        a, b = actual._slot_bounds(k)
        lo = max(piece.lo, NEG_INF if a is None else fin(a))
        hi = min(piece.hi, POS_INF if b is None else fin(b))
        if not lo < hi:
            continue
        seg = actual.segments[k]
        if seg != piece.law:
            witness = _interior_point(lo, hi)
            got = actual.eval_ext(witness)
            want = _law_at(piece.law, witness)
            if got == want:
                # distinct laws agree at one point at most; step aside
                witness = _interior_point(fin(witness), hi)
                got = actual.eval_ext(witness)
                want = _law_at(piece.law, witness)
            found.append(Mismatch(point=witness, predicted=want, actual=got))
    for x, v in actual.breakpoints:
        if piece.lo < fin(x) < piece.hi:
            want = _law_at(piece.law, x)
            if v != want:
                found.append(Mismatch(point=x, predicted=want, actual=v))


def _verify(
    actual: ExtPiecewise,
    pieces: list[LawPiece],
    points: list[PointPrediction],
) -> tuple[Mismatch, ...]:
    found: list[Mismatch] = []
    for piece in pieces:
        _check_piece(actual, piece, found)
    for pp in points:
        got = actual.eval_ext(pp.x)
        if got != pp.value:
            found.append(Mismatch(point=pp.x, predicted=pp.value, actual=got))
    found.sort(key=lambda m: m.point)
    return tuple(found)


def _range_exclusions(lo: ExtReal, hi: ExtReal) -> tuple[tuple[ExtReal, ExtReal], ...]:
    regions = []
    if lo.is_finite:
        regions.append((NEG_INF, lo))
    if hi.is_finite:
        regions.append((hi, POS_INF))
    return tuple(regions)


def _observe(actual: ExtPiecewise, xs) -> tuple[EdgeObservation, ...]:
    seen = sorted(set(xs))
    return tuple(EdgeObservation(x=x, actual=actual.eval_ext(x)) for x in seen)


def predict_T_after_inv(f: PiecewiseMonotone, which: str) -> CompositionReport:
    """Predict f(inverse(y)) from the jump bands of f and check it exactly."""
    plus = _which_is_plus(which)
    inv = invert_plus(f) if plus else invert_minus(f)
    actual = compose_exact(f, inv)
    lo = f.limit_at_neg_inf()
    hi = f.limit_at_pos_inf()
    jumps = f.discontinuities()

    pieces = [
        LawPiece(fin(j.y_minus), fin(j.y_plus), Segment(Fraction(0), j.value_at_x))
        for j in jumps
    ]
    cursor = lo
    for j in jumps:
        if cursor < fin(j.y_minus):
            pieces.append(LawPiece(cursor, fin(j.y_minus), _IDENTITY_LAW))
        cursor = max(cursor, fin(j.y_plus))
    if cursor < hi:
        pieces.append(LawPiece(cursor, hi, _IDENTITY_LAW))

    edge_levels = [j.y_minus for j in jumps] + [j.y_plus for j in jumps]
    for bound in (lo, hi):
        if bound.is_finite:
            edge_levels.append(bound.finite)
    return CompositionReport(
        label=f"f_after_inv_{which}",
        predicted=tuple(pieces),
        predicted_points=(),
        excluded_points=_observe(actual, edge_levels),
        excluded_regions=_range_exclusions(lo, hi),
        actual=actual,
        mismatches=_verify(actual, pieces, []),
    )


def predict_inv_after_T(f: PiecewiseMonotone, which: str) -> CompositionReport:
    """Predict inverse(f(x)) from the plateaus of f and check it exactly."""
    plus = _which_is_plus(which)
    inv = invert_plus(f) if plus else invert_minus(f)
    actual = compose_exact(inv, f)
    plats = f.plateaus()

    pieces = [
        LawPiece(p.x_minus, p.x_plus, _const_law(p.x_plus if plus else p.x_minus))
        for p in plats
    ]
    cursor: ExtReal = NEG_INF
    for p in plats:
        if cursor < p.x_minus:
            pieces.append(LawPiece(cursor, p.x_minus, _IDENTITY_LAW))
        cursor = max(cursor, p.x_plus)
    if cursor < POS_INF:
        pieces.append(LawPiece(cursor, POS_INF, _IDENTITY_LAW))

    edges = [p.x_minus.finite for p in plats if p.x_minus.is_finite]
    edges += [p.x_plus.finite for p in plats if p.x_plus.is_finite]
    return CompositionReport(
        label=f"inv_{which}_after_f",
        predicted=tuple(pieces),
        predicted_points=(),
        excluded_points=_observe(actual, edges),
        excluded_regions=(),
        actual=actual,
        mismatches=_verify(actual, pieces, []),
    )


def _which_is_plus(which: str) -> bool:
    if which not in ("plus", "minus"):
        raise ValueError(f"which must be 'plus' or 'minus', got {which!r}")
    return which == "plus"


def predict_one_sided(f: PiecewiseMonotone, side: str) -> tuple[CompositionReport, CompositionReport]:
    """Gap-free predictions for a globally one-sided-continuous function.

    side="right" covers (f o plus, plus o f) with half-open bands closed on
    the left; side="left" covers (f o minus, minus o f) with bands closed on
    the right.  Raises NotOneSidedContinuous with a witness breakpoint when
    the hypothesis fails.
    """
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    right = side == "right"
    for x, v in f.breakpoints:
        limit = f.right_limit(x) if right else f.left_limit(x)
        if limit != v:
            raise NotOneSidedContinuous(side, x)

    inv = invert_plus(f) if right else invert_minus(f)
    which = "plus" if right else "minus"
    lo = f.limit_at_neg_inf()
    hi = f.limit_at_pos_inf()

    # f(inverse(y)): constant at the far jump limit on each half-open band.
    actual_outer = compose_exact(f, inv)
    jumps = f.discontinuities()
    pieces: list[LawPiece] = []
    point_preds: list[PointPrediction] = []
    for j in jumps:
        value = fin(j.y_plus) if right else fin(j.y_minus)
        pieces.append(LawPiece(fin(j.y_minus), fin(j.y_plus), _const_law(value)))
        closed_end = j.y_minus if right else j.y_plus
        point_preds.append(PointPrediction(x=closed_end, value=value))
    bands = [(fin(j.y_minus), fin(j.y_plus)) for j in jumps]
    id_pieces, id_points = _one_sided_identity(bands, lo, hi, right)
    pieces.extend(LawPiece(a, b, _IDENTITY_LAW) for a, b in id_pieces)
    point_preds.extend(PointPrediction(x=p, value=fin(p)) for p in id_points)
    outer_report = CompositionReport(
        label=f"f_after_inv_{which}_{side}_continuous",
        predicted=tuple(pieces),
        predicted_points=tuple(point_preds),
        excluded_points=_observe(
            actual_outer, [b.finite for b in (lo, hi) if b.is_finite]
        ),
        excluded_regions=_range_exclusions(lo, hi),
        actual=actual_outer,
        mismatches=_verify(actual_outer, pieces, point_preds),
    )

    # inverse(f(x)): constant at the plateau edge on each half-open plateau.
    actual_inner = compose_exact(inv, f)
    plats = f.plateaus()
    pieces = []
    point_preds = []
    for p in plats:
        value = p.x_plus if right else p.x_minus
        pieces.append(LawPiece(p.x_minus, p.x_plus, _const_law(value)))
        closed_end = p.x_minus if right else p.x_plus
        if closed_end.is_finite:
            point_preds.append(PointPrediction(x=closed_end.finite, value=value))
    bands = [(p.x_minus, p.x_plus) for p in plats]
    id_pieces, id_points = _one_sided_identity(bands, NEG_INF, POS_INF, right)
    pieces.extend(LawPiece(a, b, _IDENTITY_LAW) for a, b in id_pieces)
    point_preds.extend(PointPrediction(x=p, value=fin(p)) for p in id_points)
    inner_report = CompositionReport(
        label=f"inv_{which}_after_f_{side}_continuous",
        predicted=tuple(pieces),
        predicted_points=tuple(point_preds),
        excluded_points=(),
        excluded_regions=(),
        actual=actual_inner,
        mismatches=_verify(actual_inner, pieces, point_preds),
    )
    return outer_report, inner_report


def _one_sided_identity(bands, lo: ExtReal, hi: ExtReal, right: bool):
    """Identity stretches and points on (lo, hi) minus half-open bands.

    For right-continuity the bands are [start, end), so the complement
    contains each finite band end (unless it starts the next band); for
    left-continuity the bands are (start, end] and the complement contains
    each finite band start (unless it closes the previous band).
    """
    pieces: list[tuple[ExtReal, ExtReal]] = []
    points: list[Fraction] = []
    cursor = lo
    starts = {start for start, _ in bands}
    ends = {end for _, end in bands}
    for start, end in bands:
        if cursor < start:
            pieces.append((cursor, start))
        if not right and start.is_finite and lo < start and start not in ends:
            points.append(start.finite)
        if right and end.is_finite and end < hi and end not in starts:
            points.append(end.finite)
        cursor = max(cursor, end)
    if cursor < hi:
        pieces.append((cursor, hi))
    return pieces, points


def composition_jump_fixpoint(f: PiecewiseMonotone) -> bool:
    """Whether some x is fixed by plus(f(.)) even though that map jumps at x.

    Positive exactly when a plateau of f attains its level at a finite right
    edge x: there plus(f(x)) = x while minus(f(x)) < x, so the composition
    jumps at x yet returns x.  Confirmed through the definitional scans.
    """
    for p in f.plateaus():
        if not p.x_plus.is_finite:
            continue
        x = p.x_plus.finite
        if f.eval(x) != p.y:
            continue
        if pointwise_inf_plus(f, p.y) == fin(x) and pointwise_inf_minus(f, p.y) < fin(x):
            return True
    return False
