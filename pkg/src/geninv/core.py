"""Nondecreasing piecewise-affine functions with exact rational data.

A function is stored as a strictly increasing list of breakpoints, each
carrying an explicit value, plus one affine segment per open interval of the
complement (``len(segments) == len(breakpoints) + 1``).  Storing breakpoint
values explicitly means a point may attain its left limit, its right limit,
or anything in between, so every combination of one-sided behavior at a
discontinuity is representable.

Two concrete classes share the machinery:

* :class:`PiecewiseMonotone` -- real-valued everywhere; the ordinary input
  functions.
* :class:`ExtPiecewise` -- extended-real-valued: breakpoint values may be
  -inf/+inf and constant end pieces may sit at -inf (initial prefix only) or
  +inf (terminal suffix only).  Generalized inverses and compositions live
  here, since the convention inf(empty set) = +inf and inf(R) = -inf pushes
  values off the real line.

Canonical form merges every removable breakpoint (equal adjacent laws force
the stored value by monotonicity); two functions are considered equal exactly
when their canonical forms are field-identical, which coincides with
pointwise equality including all one-sided limits.

All values are immutable after construction and every operation is a pure
function, so instances are safe to share across threads.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Union

from .errors import MalformedShape, MonotonicityViolation
from .scalars import NEG_INF, POS_INF, ExtReal, as_ext, as_rational, fin


@dataclass(frozen=True)
class Segment:
    """Affine law value = intercept + slope * x on an open interval."""

    slope: Fraction
    intercept: Fraction

    def value_at(self, x: Fraction) -> Fraction:
        return self.intercept + self.slope * x


@dataclass(frozen=True)
class InfSegment:
    """Constant piece pinned at -inf or +inf (extended functions only)."""

    level: ExtReal

    def __post_init__(self):
        if self.level.is_finite:
            raise MalformedShape("InfSegment level must be -inf or +inf")

    def value_at(self, x: Fraction) -> ExtReal:
        return self.level


AnySegment = Union[Segment, InfSegment]


def _coerce_segment(seg) -> Segment:
    if isinstance(seg, Segment):
        return seg
    slope, intercept = seg
    return Segment(as_rational(slope), as_rational(intercept))


def _coerce_ext_segment(seg) -> AnySegment:
    if isinstance(seg, (Segment, InfSegment)):
        return seg
    if isinstance(seg, ExtReal):
        return InfSegment(seg)
    return _coerce_segment(seg)


@dataclass(frozen=True)
class JumpRecord:
    """A discontinuity of a real-valued function: x with its one-sided limits."""

    x: Fraction
    y_minus: Fraction
    y_plus: Fraction
    value_at_x: Fraction

    @property
    def band(self) -> tuple[Fraction, Fraction]:
        """The open interval of skipped values (y_minus, y_plus)."""
        return (self.y_minus, self.y_plus)


@dataclass(frozen=True)
class ExtJump:
    """A discontinuity of an extended-valued function; limits may be infinite."""

    x: Fraction
    y_minus: ExtReal
    y_plus: ExtReal
    value_at_x: ExtReal


@dataclass(frozen=True)
class PlateauRecord:
    """A maximal interval of positive length on which the function is constant.

    ``y`` is the (finite) constant level; the interval runs from ``x_minus``
    to ``x_plus`` (either may be infinite), and a closure flag is set exactly
    when the function attains ``y`` at that finite endpoint.
    """

    y: Fraction
    x_minus: ExtReal
    x_plus: ExtReal
    left_closed: bool
    right_closed: bool

    @property
    def is_bounded(self) -> bool:
        return self.x_minus.is_finite and self.x_plus.is_finite


@dataclass(frozen=True)
class Preimage:
    """The solution set {x : f(x) = y}: empty, a single point, or an interval.

    Monotonicity makes the set connected, so four fields describe it exactly.
    ``lo is None`` encodes the empty set.
    """

    lo: ExtReal | None = None
    hi: ExtReal | None = None
    lo_closed: bool = False
    hi_closed: bool = False

    @classmethod
    def empty(cls) -> "Preimage":
        return cls()

    @classmethod
    def point(cls, x: Fraction) -> "Preimage":
        return cls(fin(x), fin(x), True, True)

    @classmethod
    def interval(cls, lo: ExtReal, hi: ExtReal, lo_closed: bool, hi_closed: bool) -> "Preimage":
        return cls(lo, hi, lo_closed, hi_closed)

    @property
    def is_empty(self) -> bool:
        return self.lo is None

    @property
    def is_singleton(self) -> bool:
        return self.lo is not None and self.lo == self.hi

    @property
    def is_multipoint(self) -> bool:
        return self.lo is not None and self.lo < self.hi

    @property
    def singleton(self) -> Fraction:
        if not self.is_singleton:
            raise ValueError(f"{self} is not a single point")
        return self.lo.finite


class _PiecewiseOps:
    """Algorithms shared by the real-valued and extended-valued classes.

    Subclasses provide ``breakpoints``/``segments`` tuples plus two hooks:
    ``_seg_value`` (evaluate a segment law, in the class's native value type)
    and ``_wrap`` (lift a native value into the ExtReal order).
    """

    breakpoints: tuple
    segments: tuple

    def _seg_value(self, seg, x):
        raise NotImplementedError

    def _wrap(self, value) -> ExtReal:
        raise NotImplementedError

    @cached_property
    def _xs(self) -> tuple:
        return tuple(x for x, _ in self.breakpoints)

    def _breakpoint_index(self, x) -> int | None:
        i = bisect.bisect_left(self._xs, x)
        if i < len(self._xs) and self._xs[i] == x:
            return i
        return None

    # -- evaluation and one-sided limits ---------------------------------

    def eval(self, x):
        """The stored value at x: breakpoint value, or the segment law."""
        x = as_rational(x)
        i = self._breakpoint_index(x)
        if i is not None:
            return self.breakpoints[i][1]
        return self._seg_value(self.segments[bisect.bisect_left(self._xs, x)], x)

    __call__ = eval

    def left_limit(self, x):
        """lim of the function as the argument increases to x."""
        x = as_rational(x)
        return self._seg_value(self.segments[bisect.bisect_left(self._xs, x)], x)

    def right_limit(self, x):
        """lim of the function as the argument decreases to x."""
        x = as_rational(x)
        i = self._breakpoint_index(x)
        slot = bisect.bisect_left(self._xs, x) if i is None else i + 1
        return self._seg_value(self.segments[slot], x)

    def limit_at_neg_inf(self) -> ExtReal:
        seg = self.segments[0]
        if isinstance(seg, InfSegment):
            return seg.level
        if seg.slope > 0:
            return NEG_INF
        return fin(seg.intercept)

    def limit_at_pos_inf(self) -> ExtReal:
        seg = self.segments[-1]
        if isinstance(seg, InfSegment):
            return seg.level
        if seg.slope > 0:
            return POS_INF
        return fin(seg.intercept)

    def eval_ext(self, x) -> ExtReal:
        return self._wrap(self.eval(x))

    def left_limit_ext(self, x) -> ExtReal:
        return self._wrap(self.left_limit(x))

    def right_limit_ext(self, x) -> ExtReal:
        return self._wrap(self.right_limit(x))

    def is_continuous_at(self, x) -> bool:
        x = as_rational(x)
        return self.left_limit(x) == self.eval(x) == self.right_limit(x)

    # -- structure --------------------------------------------------------

    def _slot_bounds(self, k) -> tuple[Fraction | None, Fraction | None]:
        """Open-interval bounds of segment slot k (None encodes an infinite end)."""
        a = self._xs[k - 1] if k > 0 else None
        b = self._xs[k] if k < len(self._xs) else None
        return a, b

    def _jump_tuples(self):
        """(index, x, left, right, value) for breakpoints where left < right."""
        out = []
        for i, (x, v) in enumerate(self.breakpoints):
            left = self._seg_value(self.segments[i], x)
            right = self._seg_value(self.segments[i + 1], x)
            if left < right:
                out.append((i, x, left, right, v))
        return out

    def plateaus(self) -> tuple[PlateauRecord, ...]:
        """All maximal positive-length constancy intervals, at finite levels.

        Segments pinned at -inf/+inf are conventions, not plateaus, and are
        skipped.  Records come out sorted by level (equivalently by x).
        """
        runs: list[list] = []  # [level, first_slot, last_slot]
        for k, seg in enumerate(self.segments):
            if isinstance(seg, InfSegment) or seg.slope != 0:
                continue
            level = seg.intercept
            if runs and runs[-1][0] == level and runs[-1][2] == k - 1:
                runs[-1][2] = k
            else:
                runs.append([level, k, k])
        records = []
        for level, lo_slot, hi_slot in runs:
            a, _ = self._slot_bounds(lo_slot)
            _, b = self._slot_bounds(hi_slot)
            left_closed = a is not None and self._wrap(self.breakpoints[lo_slot - 1][1]) == fin(level)
            right_closed = b is not None and self._wrap(self.breakpoints[hi_slot][1]) == fin(level)
            records.append(
                PlateauRecord(
                    y=level,
                    x_minus=NEG_INF if a is None else fin(a),
                    x_plus=POS_INF if b is None else fin(b),
                    left_closed=left_closed,
                    right_closed=right_closed,
                )
            )
        return tuple(records)

    def plateau_levels(self) -> frozenset:
        return frozenset(rec.y for rec in self.plateaus())

    # -- canonical form and versions --------------------------------------

    def _canonical_parts(self):
        if not self.breakpoints:
            return self.breakpoints, self.segments
        out_bps = []
        out_segs = [self.segments[0]]
        for i, (x, v) in enumerate(self.breakpoints):
            nxt = self.segments[i + 1]
            if nxt == out_segs[-1] and self._wrap(v) == self._wrap(self._seg_value(nxt, x)):
                continue
            out_bps.append((x, v))
            out_segs.append(nxt)
        return tuple(out_bps), tuple(out_segs)

    def canonical(self):
        """The equivalent representation with every removable breakpoint merged."""
        bps, segs = self._canonical_parts()
        if bps == self.breakpoints:
            return self
        return type(self)(bps, segs)

    def left_version(self):
        """Same function with every breakpoint value replaced by its left limit."""
        bps = tuple(
            (x, self._seg_value(self.segments[i], x))
            for i, (x, _) in enumerate(self.breakpoints)
        )
        return type(self)(bps, self.segments).canonical()

    def right_version(self):
        """Same function with every breakpoint value replaced by its right limit."""
        bps = tuple(
            (x, self._seg_value(self.segments[i + 1], x))
            for i, (x, _) in enumerate(self.breakpoints)
        )
        return type(self)(bps, self.segments).canonical()

    def is_right_continuous(self) -> bool:
        return all(self.right_limit(x) == v for x, v in self.breakpoints)

    def is_left_continuous(self) -> bool:
        return all(self.left_limit(x) == v for x, v in self.breakpoints)

    # -- shared validation -------------------------------------------------

    def _validate_shape(self):
        if len(self.segments) != len(self.breakpoints) + 1:
            raise MalformedShape(
                f"need {len(self.breakpoints) + 1} segments for "
                f"{len(self.breakpoints)} breakpoints, got {len(self.segments)}"
            )
        xs = self._xs
        for i in range(1, len(xs)):
            if not xs[i - 1] < xs[i]:
                raise MalformedShape(
                    f"breakpoints must be strictly increasing; "
                    f"x[{i - 1}] = {xs[i - 1]} !< x[{i}] = {xs[i]}"
                )

    def _validate_monotone(self):
        for k, seg in enumerate(self.segments):
            if isinstance(seg, Segment) and seg.slope < 0:
                raise MonotonicityViolation(
                    f"segment {k} has negative slope {seg.slope}", segment_index=k
                )
        for i, (x, v) in enumerate(self.breakpoints):
            left = self._wrap(self._seg_value(self.segments[i], x))
            value = self._wrap(v)
            right = self._wrap(self._seg_value(self.segments[i + 1], x))
            if not left <= value <= right:
                raise MonotonicityViolation(
                    f"breakpoint {i} at x = {x}: need left limit <= value <= "
                    f"right limit, got {left} / {value} / {right}",
                    breakpoint_index=i,
                )


@dataclass(frozen=True)
class PiecewiseMonotone(_PiecewiseOps):
    """A nondecreasing piecewise-affine function from R to R."""

    breakpoints: tuple[tuple[Fraction, Fraction], ...]
    segments: tuple[Segment, ...]

    def __post_init__(self):
        for seg in self.segments:
            if not isinstance(seg, Segment):
                raise MalformedShape(
                    f"real-valued function cannot hold {type(seg).__name__}"
                )
        self._validate_shape()
        self._validate_monotone()

    def _seg_value(self, seg: Segment, x: Fraction) -> Fraction:
        return seg.value_at(x)

    def _wrap(self, value: Fraction) -> ExtReal:
        return fin(value)

    @classmethod
    def from_parts(cls, breakpoints: Iterable, segments: Iterable) -> "PiecewiseMonotone":
        """Validate a raw description and return its canonical form.

        Raises MalformedShape, MonotonicityViolation, or
        NonPositiveDenominator with the offending index in the message.
        """
        bps = tuple(
            (as_rational(x), as_rational(v)) for x, v in breakpoints
        )
        segs = tuple(_coerce_segment(seg) for seg in segments)
        return cls(bps, segs).canonical()

    def as_ext(self) -> "ExtPiecewise":
        return ExtPiecewise(
            tuple((x, fin(v)) for x, v in self.breakpoints), self.segments
        )

    def discontinuities(self) -> tuple[JumpRecord, ...]:
        """All jumps, in increasing x order, with exact one-sided limits."""
        return tuple(
            JumpRecord(x=x, y_minus=left, y_plus=right, value_at_x=v)
            for _, x, left, right, v in self._jump_tuples()
        )

    def preimage(self, y) -> Preimage:
        """Exact classification of {x : f(x) = y}."""
        y = as_rational(y)
        pieces: list[tuple[ExtReal, ExtReal, bool, bool]] = []

        def add_point(x: Fraction):
            pieces.append((fin(x), fin(x), True, True))

        xs = self._xs
        for k, seg in enumerate(self.segments):
            a, b = self._slot_bounds(k)
            if seg.slope == 0:
                if seg.intercept == y:
                    pieces.append(
                        (
                            NEG_INF if a is None else fin(a),
                            POS_INF if b is None else fin(b),
                            False,
                            False,
                        )
                    )
            else:
                t = (y - seg.intercept) / seg.slope
                if (a is None or t > a) and (b is None or t < b):
                    add_point(t)
            if k < len(xs) and self.breakpoints[k][1] == y:
                add_point(xs[k])

        if not pieces:
            return Preimage.empty()
        # monotone => the union is connected: consecutive pieces share endpoints
        for (_, prev_hi, _, _), (next_lo, _, _, _) in zip(pieces, pieces[1:]):
            assert prev_hi == next_lo, "preimage must be connected"
        lo, _, lo_c, _ = pieces[0]
        _, hi, _, hi_c = pieces[-1]
        if lo == hi:
            return Preimage.point(lo.finite)
        return Preimage.interval(lo, hi, lo_c, hi_c)


@dataclass(frozen=True)
class ExtPiecewise(_PiecewiseOps):
    """A nondecreasing piecewise function into the extended reals.

    Infinite values occur only as a -inf constant prefix and a +inf constant
    suffix (plus breakpoint values forced by monotonicity at the junctions);
    affine pieces with positive slope are always finite.
    """

    breakpoints: tuple[tuple[Fraction, ExtReal], ...]
    segments: tuple[AnySegment, ...]

    def __post_init__(self):
        last = len(self.segments) - 1
        for k, seg in enumerate(self.segments):
            if isinstance(seg, InfSegment):
                if seg.level == NEG_INF and k != 0:
                    raise MalformedShape("-inf piece allowed only as the first segment")
                if seg.level == POS_INF and k != last:
                    raise MalformedShape("+inf piece allowed only as the last segment")
            elif not isinstance(seg, Segment):
                raise MalformedShape(f"bad segment {seg!r}")
        for x, v in self.breakpoints:
            if not isinstance(v, ExtReal):
                raise MalformedShape(f"breakpoint value {v!r} must be an ExtReal")
        self._validate_shape()
        self._validate_monotone()

    def _seg_value(self, seg: AnySegment, x: Fraction) -> ExtReal:
        if isinstance(seg, InfSegment):
            return seg.level
        return fin(seg.value_at(x))

    def _wrap(self, value: ExtReal) -> ExtReal:
        return value

    @classmethod
    def from_parts(cls, breakpoints: Iterable, segments: Iterable) -> "ExtPiecewise":
        bps = tuple((as_rational(x), as_ext(v if isinstance(v, ExtReal) else as_rational(v))) for x, v in breakpoints)
        segs = tuple(_coerce_ext_segment(seg) for seg in segments)
        return cls(bps, segs).canonical()

    def as_ext(self) -> "ExtPiecewise":
        return self

    def discontinuities(self) -> tuple[ExtJump, ...]:
        return tuple(
            ExtJump(x=x, y_minus=left, y_plus=right, value_at_x=v)
            for _, x, left, right, v in self._jump_tuples()
        )


def canonical_equal(f, g) -> bool:
    """Pointwise equality, including one-sided limits, decided structurally."""
    if type(f) is not type(g):
        return f.as_ext().canonical() == g.as_ext().canonical()
    return f.canonical() == g.canonical()


def identity_function() -> PiecewiseMonotone:
    return PiecewiseMonotone((), (Segment(Fraction(1), Fraction(0)),))


def constant_function(value) -> PiecewiseMonotone:
    return PiecewiseMonotone((), (Segment(Fraction(0), as_rational(value)),))
