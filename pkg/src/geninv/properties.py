"""Random function generation, a definitional oracle, and the named suite.

Every item of the inverse calculus is an executable check here, keyed by a
stable registry id (``L1.v``, ``L2.equiv``, ...).  A check runs over
generated functions and a probe set containing every structurally
interesting rational (breakpoints, jump-band edges and midpoints, plateau
levels and interiors, finite limits at the ends) plus seeded random
rationals, so maximality claims are exercised exactly at their boundaries.

Implication-shaped checks count hypothesis hits so a passing run can prove
it was not vacuous, and count skips where a hypothesis cannot apply (an
infinite inverse value is not a point of one-sided continuity).

Everything is deterministic: a case function is a pure function of
(seed, property id, index), so violations are replayable and results do not
depend on evaluation order.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .compose import (
    predict_T_after_inv,
    predict_inv_after_T,
    predict_one_sided,
)
from .core import ExtPiecewise, PiecewiseMonotone, Segment, canonical_equal
from .errors import UnknownProperty
from .inverse import invert_minus, invert_plus
from .scalars import NEG_INF, POS_INF, ExtReal, as_rational, fin

_DEFAULT_SLOPES = (
    Fraction(1),
    Fraction(1, 2),
    Fraction(2),
    Fraction(1, 3),
    Fraction(3),
    Fraction(5, 2),
)
_DEFAULT_VALUES = tuple(
    sorted({Fraction(n, d) for n in range(-6, 7) for d in (1, 2, 3, 4)})
)


@dataclass(frozen=True)
class GeneratorConfig:
    """Knobs for the random function generator."""

    seed: int = 42
    max_breakpoints: int = 5
    slope_pool: tuple[Fraction, ...] = _DEFAULT_SLOPES
    value_pool: tuple[Fraction, ...] = _DEFAULT_VALUES
    continuity_mix: tuple[float, float, float] = (0.35, 0.45, 0.20)
    plateau_bias: float = 0.45
    jump_bias: float = 0.40

    def __post_init__(self):
        if not self.slope_pool or not self.value_pool:
            raise ValueError("pools must be nonempty")
        if any(w < 0 for w in self.continuity_mix) or not any(self.continuity_mix):
            raise ValueError("continuity weights must be nonnegative, one positive")


def _mix_seed(*parts) -> int:
    text = ":".join(str(p) for p in parts)
    return int.from_bytes(hashlib.blake2b(text.encode(), digest_size=8).digest(), "big")


def generate(config: GeneratorConfig, index: int) -> PiecewiseMonotone:
    """Deterministic random function for (config.seed, index).

    Emits, with positive probability, jumps, plateaus, strictly increasing
    pieces, constant tails, and left-/right-/interior-valued breakpoints.
    """
    rng = random.Random(_mix_seed(config.seed, index))
    pool = sorted(set(config.value_pool))
    n = min(rng.randint(0, config.max_breakpoints), len(pool))
    xs = sorted(rng.sample(pool, n))
    pos_slopes = [s for s in config.slope_pool if s > 0] or [Fraction(1)]
    jump_sizes = [v for v in config.value_pool if v > 0] or [Fraction(1)]

    def pick_slope() -> Fraction:
        if rng.random() < config.plateau_bias:
            return Fraction(0)
        return rng.choice(pos_slopes)

    start = rng.choice(pool)
    if n == 0:
        return PiecewiseMonotone.from_parts((), (Segment(pick_slope(), start),))

    w_left, w_right, w_interior = config.continuity_mix
    total_w = w_left + w_right + w_interior
    slope = pick_slope()
    segments = [Segment(slope, start - slope * xs[0])]
    breakpoints = []
    for i, x in enumerate(xs):
        left = segments[-1].value_at(x)
        jump = rng.choice(jump_sizes) if rng.random() < config.jump_bias else Fraction(0)
        right = left + jump
        if jump == 0:
            value = left
        else:
            r = rng.random() * total_w
            if r < w_left:
                value = left
            elif r < w_left + w_right:
                value = right
            else:
                value = (left + right) / 2
        breakpoints.append((x, value))
        slope = pick_slope()
        segments.append(Segment(slope, right - slope * x))
    return PiecewiseMonotone.from_parts(breakpoints, segments)


def generate_cdf(config: GeneratorConfig, index: int) -> PiecewiseMonotone:
    """A random right-continuous CDF: limits 0 and 1, mixed jumps and ramps."""
    rng = random.Random(_mix_seed(config.seed, "cdf", index))
    pool = sorted(set(config.value_pool))
    n = min(rng.randint(1, max(1, config.max_breakpoints)), len(pool))
    xs = sorted(rng.sample(pool, n))
    grid = [Fraction(k, 8) for k in range(9)]
    levels = sorted(rng.choice(grid) for _ in range(n - 1)) + [Fraction(1)]

    breakpoints = [(x, levels[i]) for i, x in enumerate(xs)]
    segments = [Segment(Fraction(0), Fraction(0))]
    for i in range(1, n):
        lo_level, hi_level = levels[i - 1], levels[i]
        if hi_level > lo_level and rng.random() < 0.5:
            slope = (hi_level - lo_level) / (xs[i] - xs[i - 1])
            segments.append(Segment(slope, lo_level - slope * xs[i - 1]))
        else:
            segments.append(Segment(Fraction(0), lo_level))
    segments.append(Segment(Fraction(0), Fraction(1)))
    return PiecewiseMonotone.from_parts(breakpoints, segments)


# -- the definitional oracle ------------------------------------------------


def _level_pieces(f, y: Fraction, op: str) -> list[tuple[ExtReal, ExtReal]]:
    """The set {x : f(x) <op> y} as ordered intervals, solved piece by piece."""
    gt, ge, lt, le = op == "gt", op == "ge", op == "lt", op == "le"
    pieces: list[tuple[ExtReal, ExtReal]] = []
    xs = f._xs
    for k, seg in enumerate(f.segments):
        a, b = f._slot_bounds(k)
        lo = NEG_INF if a is None else fin(a)
        hi = POS_INF if b is None else fin(b)
        if seg.slope == 0:
            v = seg.intercept
            holds = (gt and v > y) or (ge and v >= y) or (lt and v < y) or (le and v <= y)
            if holds:
                pieces.append((lo, hi))
        else:
            t = (y - seg.intercept) / seg.slope
            if gt or ge:
                # nonempty iff the limit toward b exceeds y
                if b is None or seg.value_at(b) > y:
                    pieces.append((max(lo, fin(t)), hi))
            else:
                if a is None or seg.value_at(a) < y:
                    pieces.append((lo, min(hi, fin(t))))
        if k < len(xs):
            v = f.eval(xs[k])
            holds = (gt and v > y) or (ge and v >= y) or (lt and v < y) or (le and v <= y)
            if holds:
                pieces.append((fin(xs[k]), fin(xs[k])))
    return pieces


def _level_set_empty(f, y: Fraction, op: str) -> bool:
    return not _level_pieces(f, y, op)


def oracle_inf(f, y, strict: bool) -> ExtReal:
    """inf {x : f(x) > y} (strict) or >= y, by building the whole set first.

    Ground truth for the generalized inverses: solves the threshold on every
    piece, materializes the superlevel set as intervals, checks it is an
    up-set, and returns its infimum.  Shares no code with the closed-form
    inverse construction and none of its jump/plateau reasoning.
    """
    y = as_rational(y)
    pieces = _level_pieces(f, y, "gt" if strict else "ge")
    if not pieces:
        return POS_INF
    for (_, prev_hi), (next_lo, _) in zip(pieces, pieces[1:]):
        assert prev_hi == next_lo, "superlevel set of a monotone map is an up-set"
    assert pieces[-1][1] == POS_INF
    return pieces[0][0]


# -- case preparation and probes ---------------------------------------------


@dataclass
class _Case:
    index: int
    f: PiecewiseMonotone
    plus: ExtPiecewise
    minus: ExtPiecewise
    xs: list[Fraction]
    ys: list[Fraction]
    pair_xs: list[Fraction]
    pair_ys: list[Fraction]
    fx: dict = field(default_factory=dict)
    px: dict = field(default_factory=dict)
    mx: dict = field(default_factory=dict)

    def P(self, y: Fraction) -> ExtReal:
        if y not in self.px:
            self.px[y] = self.plus.eval(y)
        return self.px[y]

    def M(self, y: Fraction) -> ExtReal:
        if y not in self.mx:
            self.mx[y] = self.minus.eval(y)
        return self.mx[y]


def probe_points(f: PiecewiseMonotone, rng: random.Random, extra: int = 6):
    """Structural plus random probes for the argument and level axes."""
    xs = set()
    ys = set()
    bxs = f._xs
    for x, v in f.breakpoints:
        xs.add(x)
        ys.update((v, f.left_limit(x), f.right_limit(x)))
    for i in range(1, len(bxs)):
        xs.add((bxs[i - 1] + bxs[i]) / 2)
    if bxs:
        xs.update((bxs[0] - 1, bxs[-1] + 1))
    else:
        xs.update((Fraction(0), Fraction(1)))
    for j in f.discontinuities():
        ys.add((j.y_minus + j.y_plus) / 2)
        ys.add(j.y_minus + (j.y_plus - j.y_minus) / 4)
    for p in f.plateaus():
        ys.add(p.y)
        xs.update(_plateau_interior(p))
    for lim in (f.limit_at_neg_inf(), f.limit_at_pos_inf()):
        if lim.is_finite:
            ys.update((lim.finite, lim.finite - 1, lim.finite + 1))
    between = sorted(ys)
    for i in range(1, len(between)):
        ys.add((between[i - 1] + between[i]) / 2)
    for _ in range(extra):
        xs.add(Fraction(rng.randint(-24, 24), rng.choice((1, 2, 3, 4, 6, 8, 12))))
        ys.add(Fraction(rng.randint(-24, 24), rng.choice((1, 2, 3, 4, 6, 8, 12))))
    return sorted(xs), sorted(ys)


def _plateau_interior(p) -> list[Fraction]:
    if p.x_minus.is_finite and p.x_plus.is_finite:
        a, b = p.x_minus.finite, p.x_plus.finite
        return [(a + b) / 2, a + (b - a) / 4]
    if p.x_minus.is_finite:
        return [p.x_minus.finite + 1, p.x_minus.finite + 2]
    if p.x_plus.is_finite:
        return [p.x_plus.finite - 1, p.x_plus.finite - 2]
    return [Fraction(0), Fraction(1)]


def _prepare(index: int, f: PiecewiseMonotone, rng: random.Random) -> _Case:
    xs, ys = probe_points(f, rng)
    case = _Case(
        index=index,
        f=f,
        plus=invert_plus(f),
        minus=invert_minus(f),
        xs=xs,
        ys=ys,
        pair_xs=sorted(rng.sample(xs, min(10, len(xs)))),
        pair_ys=sorted(rng.sample(ys, min(10, len(ys)))),
    )
    case.fx = {x: f.eval(x) for x in xs}
    return case


# -- results -----------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    property_id: str
    generator_seed: int
    case_index: int
    function: PiecewiseMonotone
    witness: tuple
    expected: str
    got: str


@dataclass(frozen=True)
class PropertyResult:
    property_id: str
    description: str
    cases_run: int
    hypothesis_hits: int
    skips: int
    violations: tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


class _Recorder:
    def __init__(self, property_id: str, generator_seed: int):
        self.property_id = property_id
        self.generator_seed = generator_seed
        self.case_index = -1
        self.function: PiecewiseMonotone | None = None
        self.hits = 0
        self.skips = 0
        self.violations: list[Violation] = []

    def expect(self, condition: bool, witness: tuple, expected, got):
        self.hits += 1
        if not condition:
            self.violations.append(
                Violation(
                    property_id=self.property_id,
                    generator_seed=self.generator_seed,
                    case_index=self.case_index,
                    function=self.function,
                    witness=witness,
                    expected=str(expected),
                    got=str(got),
                )
            )

    def skip(self):
        self.skips += 1


# -- the registry -------------------------------------------------------------


def _chk_l1_i(case: _Case, rec: _Recorder):
    f = case.f
    for y in case.ys:
        rec.expect(
            (case.P(y) == NEG_INF) == _level_set_empty(f, y, "le"),
            (y,), "plus(y) = -inf iff f > y everywhere", case.P(y),
        )
        rec.expect(
            (case.P(y) == POS_INF) == _level_set_empty(f, y, "gt"),
            (y,), "plus(y) = +inf iff f <= y everywhere", case.P(y),
        )
        rec.expect(
            (case.M(y) == NEG_INF) == _level_set_empty(f, y, "lt"),
            (y,), "minus(y) = -inf iff f >= y everywhere", case.M(y),
        )
        rec.expect(
            (case.M(y) == POS_INF) == _level_set_empty(f, y, "ge"),
            (y,), "minus(y) = +inf iff f < y everywhere", case.M(y),
        )


def _chk_l1_ii(case: _Case, rec: _Recorder):
    for y1, y2 in zip(case.ys, case.ys[1:]):
        rec.expect(case.P(y1) <= case.P(y2), (y1, y2), "plus nondecreasing", (case.P(y1), case.P(y2)))
        rec.expect(case.M(y1) <= case.M(y2), (y1, y2), "minus nondecreasing", (case.M(y1), case.M(y2)))


def _chk_l1_iii(case: _Case, rec: _Recorder):
    P, M = case.plus, case.minus
    for y in case.ys:
        rec.expect(P.right_limit(y) == case.P(y), (y,), "plus right-continuous", P.right_limit(y))
        rec.expect(M.left_limit(y) == case.M(y), (y,), "minus left-continuous", M.left_limit(y))
        rec.expect(P.left_limit(y) == case.M(y), (y,), "plus(y-) = minus(y)", (P.left_limit(y), case.M(y)))
        rec.expect(M.right_limit(y) == case.P(y), (y,), "minus(y+) = plus(y)", (M.right_limit(y), case.P(y)))


def _chk_l1_iv(case: _Case, rec: _Recorder):
    p_jumps = {j.x for j in case.plus.discontinuities()}
    m_jumps = {j.x for j in case.minus.discontinuities()}
    rec.expect(p_jumps == m_jumps, (), "plus and minus share discontinuity points", (p_jumps, m_jumps))
    rec.expect(
        case.plus._xs == case.minus._xs,
        (), "canonical breakpoint sets coincide", (case.plus._xs, case.minus._xs),
    )


def _chk_l1_v(case: _Case, rec: _Recorder):
    for y in case.ys:
        rec.expect(case.M(y) <= case.P(y), (y,), "minus <= plus", (case.M(y), case.P(y)))


def _chk_l1_vi(case: _Case, rec: _Recorder):
    for y in case.ys:
        pre = case.f.preimage(y)
        small = pre.is_empty or pre.is_singleton
        rec.expect(
            (case.M(y) == case.P(y)) == small,
            (y,), "minus = plus iff preimage has at most one point", pre,
        )


def _chk_l1_vii_a(case: _Case, rec: _Recorder):
    for x in case.pair_xs:
        for y in case.pair_ys:
            if y <= case.fx[x]:
                rec.expect(case.M(y) <= fin(x), (x, y), "minus(y) <= x", case.M(y))


def _chk_l1_vii_b(case: _Case, rec: _Recorder):
    for x in case.pair_xs:
        for y in case.pair_ys:
            if y < case.fx[x]:
                rec.expect(case.P(y) <= fin(x), (x, y), "plus(y) <= x", case.P(y))


def _chk_l1_vii_c(case: _Case, rec: _Recorder):
    for x in case.xs:
        rec.expect(case.M(case.fx[x]) <= fin(x), (x,), "minus(f(x)) <= x", case.M(case.fx[x]))


def _chk_l1_vii_d(case: _Case, rec: _Recorder):
    for x in case.pair_xs:
        for y in case.pair_ys:
            if y > case.fx[x]:
                rec.expect(case.M(y) >= fin(x), (x, y), "minus(y) >= x", case.M(y))


def _chk_l1_vii_e(case: _Case, rec: _Recorder):
    for x in case.pair_xs:
        for y in case.pair_ys:
            if y >= case.fx[x]:
                rec.expect(case.P(y) >= fin(x), (x, y), "plus(y) >= x", case.P(y))


def _chk_l1_vii_f(case: _Case, rec: _Recorder):
    for x in case.xs:
        rec.expect(case.P(case.fx[x]) >= fin(x), (x,), "plus(f(x)) >= x", case.P(case.fx[x]))


def _chk_l1_vii_g(case: _Case, rec: _Recorder):
    for x in case.xs:
        p, m = case.P(case.fx[x]), case.M(case.fx[x])
        if p == m:
            rec.expect(p == fin(x), (x,), "plus(f(x)) = minus(f(x)) forces = x", (p, m))


def _chk_l1_vii_h(case: _Case, rec: _Recorder):
    for y in case.ys:
        t = case.P(y)
        if not t.is_finite:
            rec.skip()
            continue
        rec.expect(
            case.f.left_limit(t.finite) <= y,
            (y,), "f(plus(y)-) <= y", case.f.left_limit(t.finite),
        )


def _right_continuous_at(case: _Case, x: Fraction) -> bool:
    return case.f.right_limit(x) == case.fx.setdefault(x, case.f.eval(x))


def _left_continuous_at(case: _Case, x: Fraction) -> bool:
    return case.f.left_limit(x) == case.fx.setdefault(x, case.f.eval(x))


def _chk_l1_viii_a(case: _Case, rec: _Recorder):
    for x in case.pair_xs:
        if not _right_continuous_at(case, x):
            continue
        for y in case.pair_ys:
            if y > case.fx[x]:
                rec.expect(case.M(y) > fin(x), (x, y), "minus(y) > x", case.M(y))


def _chk_l1_viii_b(case: _Case, rec: _Recorder):
    for x in case.pair_xs:
        if not _right_continuous_at(case, x):
            continue
        for y in case.pair_ys:
            if y > case.fx[x]:
                rec.expect(case.P(y) > fin(x), (x, y), "plus(y) > x", case.P(y))


def _chk_l1_viii_c(case: _Case, rec: _Recorder):
    for x in case.pair_xs:
        if not _right_continuous_at(case, x):
            continue
        for y in case.pair_ys:
            rec.expect(
                (y <= case.fx[x]) == (case.M(y) <= fin(x)),
                (x, y), "y <= f(x) iff minus(y) <= x", (case.fx[x], case.M(y)),
            )


def _chk_l1_ix(case: _Case, rec: _Recorder):
    for y in case.ys:
        for t in (case.P(y), case.M(y)):
            if not t.is_finite:
                rec.skip()
                continue
            if _right_continuous_at(case, t.finite):
                rec.expect(
                    case.f.eval(t.finite) >= y,
                    (y, t), "f(inverse(y)) >= y at right-continuous points",
                    case.f.eval(t.finite),
                )


def _chk_l1_x_a(case: _Case, rec: _Recorder):
    for x in case.pair_xs:
        if not _left_continuous_at(case, x):
            continue
        for y in case.pair_ys:
            if y < case.fx[x]:
                rec.expect(case.M(y) < fin(x), (x, y), "minus(y) < x", case.M(y))


def _chk_l1_x_b(case: _Case, rec: _Recorder):
    for x in case.pair_xs:
        if not _left_continuous_at(case, x):
            continue
        for y in case.pair_ys:
            if y < case.fx[x]:
                rec.expect(case.P(y) < fin(x), (x, y), "plus(y) < x", case.P(y))


def _chk_l1_x_c(case: _Case, rec: _Recorder):
    for x in case.pair_xs:
        if not _left_continuous_at(case, x):
            continue
        for y in case.pair_ys:
            rec.expect(
                (y >= case.fx[x]) == (case.P(y) >= fin(x)),
                (x, y), "y >= f(x) iff plus(y) >= x", (case.fx[x], case.P(y)),
            )


def _chk_l1_xi(case: _Case, rec: _Recorder):
    for y in case.ys:
        for t in (case.P(y), case.M(y)):
            if not t.is_finite:
                rec.skip()
                continue
            if _left_continuous_at(case, t.finite):
                rec.expect(
                    case.f.eval(t.finite) <= y,
                    (y, t), "f(inverse(y)) <= y at left-continuous points",
                    case.f.eval(t.finite),
                )


def _chk_l1_xii(case: _Case, rec: _Recorder):
    for y in case.ys:
        for t in (case.P(y), case.M(y)):
            if not t.is_finite:
                rec.skip()
                continue
            if case.f.is_continuous_at(t.finite):
                rec.expect(
                    case.f.eval(t.finite) == y,
                    (y, t), "f(inverse(y)) = y at continuity points",
                    case.f.eval(t.finite),
                )


def _chk_l1_xiii(case: _Case, rec: _Recorder):
    for p in case.f.plateaus():
        for x in _plateau_interior(p):
            y = case.f.eval(x)
            rec.expect(
                case.M(y) < fin(x) < case.P(y),
                (x,), "plus(f(x)) > x > minus(f(x)) inside a constancy interval",
                (case.M(y), case.P(y)),
            )


def _chk_l1_xiv(case: _Case, rec: _Recorder):
    lv, rv = case.f.left_version(), case.f.right_version()
    for build, whole in ((invert_plus, case.plus), (invert_minus, case.minus)):
        from_left, from_right = build(lv), build(rv)
        rec.expect(
            canonical_equal(from_left, from_right) and canonical_equal(from_left, whole),
            (), "versions share both generalized inverses", (from_left, from_right),
        )


def _chk_l2_nec(case: _Case, rec: _Recorder):
    records = {p.y: p for p in case.f.plateaus()}
    for y in case.ys:
        if case.P(y) > case.M(y):
            rec_ok = y in records and (records[y].x_minus, records[y].x_plus) == (
                case.M(y),
                case.P(y),
            )
            rec.expect(
                rec_ok,
                (y,), "maximal constancy interval equals (minus(y), plus(y))",
                records.get(y),
            )


def _chk_l2_suf(case: _Case, rec: _Recorder):
    for p in case.f.plateaus():
        rec.expect(
            case.P(p.y) > case.M(p.y),
            (p.y,), "a constancy interval forces plus > minus", (case.M(p.y), case.P(p.y)),
        )
    for x in case.xs:
        y = case.fx[x]
        if case.P(y) > fin(x):
            rec.expect(case.P(y) > case.M(y), (x,), "plus(f(x)) > x forces plus > minus at f(x)", case.M(y))
        if case.M(y) < fin(x):
            rec.expect(case.P(y) > case.M(y), (x,), "minus(f(x)) < x forces plus > minus at f(x)", case.P(y))


def _chk_l2_equiv(case: _Case, rec: _Recorder):
    levels = case.f.plateau_levels()
    for y in case.ys:
        rec.expect(
            (case.P(y) > case.M(y)) == (y in levels),
            (y,), "plus(y) > minus(y) iff y is a constancy level", (case.M(y), case.P(y)),
        )


def _chk_l3_nec(case: _Case, rec: _Recorder):
    p_records = {p.y: p for p in case.plus.plateaus()}
    m_records = {p.y: p for p in case.minus.plateaus()}
    for j in case.f.discontinuities():
        band = (fin(j.y_minus), fin(j.y_plus))
        for y in (
            (j.y_minus + j.y_plus) / 2,
            j.y_minus + (j.y_plus - j.y_minus) / 4,
        ):
            rec.expect(
                case.P(y) == fin(j.x) == case.M(y),
                (j.x, y), "both inverses equal x inside the skipped band",
                (case.M(y), case.P(y)),
            )
        for records, name in ((p_records, "plus"), (m_records, "minus")):
            ok = j.x in records and (records[j.x].x_minus, records[j.x].x_plus) == band
            rec.expect(
                ok,
                (j.x,), f"{name} is constant at x exactly on the skipped band",
                records.get(j.x),
            )


def _chk_l3_suf(case: _Case, rec: _Recorder):
    for g in (case.plus, case.minus):
        for p in g.plateaus():
            rec.expect(
                case.f.right_limit(p.y) > case.f.left_limit(p.y),
                (p.y,), "an inverse plateau level is a jump point of f",
                (case.f.left_limit(p.y), case.f.right_limit(p.y)),
            )


def _chk_l3_equiv(case: _Case, rec: _Recorder):
    p_levels = case.plus.plateau_levels()
    m_levels = case.minus.plateau_levels()
    for x in case.xs:
        jumps = case.f.right_limit(x) > case.f.left_limit(x)
        rec.expect(
            jumps == (x in p_levels) == (x in m_levels),
            (x,), "f jumps at x iff both inverses plateau at level x",
            (jumps, x in p_levels, x in m_levels),
        )


def _chk_l4_t_after_inv(case: _Case, rec: _Recorder):
    for which in ("plus", "minus"):
        report = predict_T_after_inv(case.f, which)
        rec.expect(
            report.ok,
            (which,), "f after inverse matches its predicted law",
            report.mismatches[:3],
        )


def _chk_l4_inv_after_t(case: _Case, rec: _Recorder):
    for which in ("plus", "minus"):
        report = predict_inv_after_T(case.f, which)
        rec.expect(
            report.ok,
            (which,), "inverse after f matches its predicted law",
            report.mismatches[:3],
        )


def _chk_l5_right(case: _Case, rec: _Recorder):
    g = case.f.right_version()
    outer, inner = predict_one_sided(g, "right")
    rec.expect(outer.ok, ("right",), "gap-free law for f after plus", outer.mismatches[:3])
    rec.expect(inner.ok, ("right",), "gap-free law for plus after f", inner.mismatches[:3])


def _chk_l5_left(case: _Case, rec: _Recorder):
    g = case.f.left_version()
    outer, inner = predict_one_sided(g, "left")
    rec.expect(outer.ok, ("left",), "gap-free law for f after minus", outer.mismatches[:3])
    rec.expect(inner.ok, ("left",), "gap-free law for minus after f", inner.mismatches[:3])


REGISTRY: dict = {
    "L1.i": ("infinite inverse values characterize one-sided domination", _chk_l1_i),
    "L1.ii": ("both inverses are nondecreasing", _chk_l1_ii),
    "L1.iii": ("one-sided continuity and the cross limit identities", _chk_l1_iii),
    "L1.iv": ("plus and minus are continuous at the same levels", _chk_l1_iv),
    "L1.v": ("minus never exceeds plus", _chk_l1_v),
    "L1.vi": ("equality of the inverses means a thin preimage", _chk_l1_vi),
    "L1.vii.a": ("y <= f(x) implies minus(y) <= x", _chk_l1_vii_a),
    "L1.vii.b": ("y < f(x) implies plus(y) <= x", _chk_l1_vii_b),
    "L1.vii.c": ("minus(f(x)) <= x", _chk_l1_vii_c),
    "L1.vii.d": ("y > f(x) implies minus(y) >= x", _chk_l1_vii_d),
    "L1.vii.e": ("y >= f(x) implies plus(y) >= x", _chk_l1_vii_e),
    "L1.vii.f": ("plus(f(x)) >= x", _chk_l1_vii_f),
    "L1.vii.g": ("agreeing inverse composites pin x", _chk_l1_vii_g),
    "L1.vii.h": ("left limit of f at plus(y) stays below y", _chk_l1_vii_h),
    "L1.viii.a": ("right continuity: y > f(x) implies minus(y) > x", _chk_l1_viii_a),
    "L1.viii.b": ("right continuity: y > f(x) implies plus(y) > x", _chk_l1_viii_b),
    "L1.viii.c": ("right continuity: y <= f(x) iff minus(y) <= x", _chk_l1_viii_c),
    "L1.ix": ("right continuity at the inverse point bounds f below", _chk_l1_ix),
    "L1.x.a": ("left continuity: y < f(x) implies minus(y) < x", _chk_l1_x_a),
    "L1.x.b": ("left continuity: y < f(x) implies plus(y) < x", _chk_l1_x_b),
    "L1.x.c": ("left continuity: y >= f(x) iff plus(y) >= x", _chk_l1_x_c),
    "L1.xi": ("left continuity at the inverse point bounds f above", _chk_l1_xi),
    "L1.xii": ("continuity at the inverse point gives exact recovery", _chk_l1_xii),
    "L1.xiii": ("strict sandwich inside constancy intervals", _chk_l1_xiii),
    "L1.xiv": ("left and right versions share their inverses", _chk_l1_xiv),
    "L2.nec": ("plus > minus forces a maximal constancy interval", _chk_l2_nec),
    "L2.suf": ("constancy or a strict composite forces plus > minus", _chk_l2_suf),
    "L2.equiv": ("plus > minus iff a constancy interval exists", _chk_l2_equiv),
    "L3.nec": ("a jump of f pins both inverses across its band", _chk_l3_nec),
    "L3.suf": ("an inverse plateau forces a jump of f", _chk_l3_suf),
    "L3.equiv": ("f jumps at x iff the inverses plateau at level x", _chk_l3_equiv),
    "L4.TTinv": ("closed form for f composed with its inverses", _chk_l4_t_after_inv),
    "L4.invT": ("closed form for the inverses composed with f", _chk_l4_inv_after_t),
    "L5.right": ("gap-free composition laws under right continuity", _chk_l5_right),
    "L5.left": ("gap-free composition laws under left continuity", _chk_l5_left),
}

IMPLICATION_PROPERTY_IDS: tuple[str, ...] = (
    "L1.vii.a",
    "L1.vii.b",
    "L1.vii.d",
    "L1.vii.e",
    "L1.vii.g",
    "L1.vii.h",
    "L1.viii.a",
    "L1.viii.b",
    "L1.viii.c",
    "L1.ix",
    "L1.x.a",
    "L1.x.b",
    "L1.x.c",
    "L1.xi",
    "L1.xii",
    "L1.xiii",
    "L2.nec",
    "L2.suf",
    "L3.nec",
    "L3.suf",
)


def run_property(property_id: str, config: GeneratorConfig | None = None, cases: int = 200) -> PropertyResult:
    """Run one named check over ``cases`` generated functions."""
    if property_id not in REGISTRY:
        raise UnknownProperty(property_id)
    config = config or GeneratorConfig()
    description, check = REGISTRY[property_id]
    sub_seed = _mix_seed(config.seed, property_id)
    sub = replace(config, seed=sub_seed)
    recorder = _Recorder(property_id, sub_seed)
    for index in range(cases):
        f = generate(sub, index)
        rng = random.Random(_mix_seed(sub_seed, "probes", index))
        case = _prepare(index, f, rng)
        recorder.case_index = index
        recorder.function = f
        check(case, recorder)
    return PropertyResult(
        property_id=property_id,
        description=description,
        cases_run=cases,
        hypothesis_hits=recorder.hits,
        skips=recorder.skips,
        violations=tuple(recorder.violations),
    )


def run_suite(config: GeneratorConfig | None = None, cases: int = 200) -> list[PropertyResult]:
    """Run every registered check; one result per registry id."""
    return [run_property(pid, config, cases) for pid in REGISTRY]
