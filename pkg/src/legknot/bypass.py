"""State machine for dividing-curve configurations on the punctured-torus
fiber of the figure-eight knot complement.

A configuration records the isotopy classes of the dividing set on a
convex fiber: type I is one arc class (odd multiplicity) plus closed
curves, type II is two arc classes of even multiplicities, and type III
is three arc classes spanning a triangle of the Farey tessellation.  The
total arc count is minus the tb of the boundary knot.

Because the fiber returns to itself through the monodromy, a
configuration may be freely replaced by any power of the monodromy
applied to its slopes.  Bypass moves then drive a three-arc
configuration toward one of two terminal orbits:

* the orbit of {1, 2, inf} - the unique tight normal form, and
* the orbit of {0, 1, inf} - which supports no tight structure.

The move engine implements the transitions that are forced by the
position of the slopes relative to the attracting fixed slope of the
monodromy.  With every slope above the fixed point the triangle flips
toward {1, 2, inf} (or temporarily collapses to a one-class
configuration and re-expands); with every slope below, flips lead to the
gateway triangle {0, 1/2, 1}; straddling triangles sit on the chain of
tessellation triangles crossed by the monodromy axis and step directly
into the {0, 1, inf} orbit.  Configurations with more than three arcs
always admit a bypass that produces a boundary-parallel dividing curve,
i.e. a destabilization of the boundary knot; those are reported as
destabilizing moves rather than state transitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    IllegalMove,
    NonTermination,
    NotAnEdge,
    NotATriangle,
    ParityError,
    TaxonomyError,
    Unsupported,
)
from .lattice import (
    INF,
    ONE,
    ZERO,
    FixedPointSide,
    Slope,
    cmp_fixed,
    farey_depth,
    farey_parents,
    is_farey_edge,
    mediant,
    monodromy_apply,
    parse_slope,
    slope_of_vector,
)

__all__ = [
    "ConfigKind",
    "DividingConfig",
    "MoveTag",
    "Move",
    "DestabilizingMove",
    "DestabilizationFound",
    "OutcomeKind",
    "NormalizationOutcome",
    "make_config",
    "type_i",
    "type_ii",
    "type_iii",
    "config_tb",
    "monodromy_config",
    "legal_moves",
    "destabilizing_moves",
    "apply_move",
    "normalize",
    "find_destabilization",
]

_TIGHT_TRIANGLE = (ONE, Slope(2, 1), INF)
_OVERTWISTED_TRIANGLE = (ZERO, ONE, INF)
_HALF = Slope(1, 2)


class ConfigKind(Enum):
    I = "I"
    II = "II"
    III = "III"


@dataclass(frozen=True)
class DividingConfig:
    """Slopes with arc multiplicities, plus closed curves for type I.

    Slopes are kept sorted (inf last) with multiplicities carried along,
    so structurally equal configurations compare equal.
    """

    kind: ConfigKind
    slopes: tuple[Slope, ...]
    mults: tuple[int, ...]
    closed: int = 0

    def arcs(self) -> int:
        return sum(self.mults)

    def __str__(self) -> str:
        if self.kind is ConfigKind.I:
            return "I:%sx%d+%dc" % (self.slopes[0], self.mults[0], self.closed)
        body = ",".join("%sx%d" % (s, m) for s, m in zip(self.slopes, self.mults))
        return "%s:%s" % (self.kind.value, body)


def _sorted_config(kind, slopes, mults, closed=0) -> DividingConfig:
    order = sorted(range(len(slopes)), key=lambda i: (slopes[i].is_inf, slopes[i]))
    return DividingConfig(
        kind,
        tuple(slopes[i] for i in order),
        tuple(mults[i] for i in order),
        closed,
    )


def type_i(slope: Slope, arcs: int, closed: int = 1) -> DividingConfig:
    """One arc class with odd multiplicity, plus closed curves.

    The total curve count (arcs + closed) must be even, so the closed
    multiplicity is odd as well.
    """
    if arcs < 1 or arcs % 2 == 0:
        raise ParityError("type I arc count must be odd and positive, got %d" % arcs)
    if closed < 1:
        raise TaxonomyError("type I carries at least one closed curve")
    if (arcs + closed) % 2 != 0:
        raise ParityError("arc and closed counts must have even total")
    return DividingConfig(ConfigKind.I, (slope,), (arcs,), closed)


def type_ii(slopes, mults) -> DividingConfig:
    if len(slopes) != 2 or len(mults) != 2:
        raise TaxonomyError("type II has exactly two arc classes")
    if slopes[0] == slopes[1]:
        raise NotAnEdge("type II classes must be distinct")
    if not is_farey_edge(slopes[0], slopes[1]):
        raise NotAnEdge(
            "disjoint arc classes %s, %s must span a tessellation edge"
            % (slopes[0], slopes[1])
        )
    if any(m < 2 or m % 2 != 0 for m in mults):
        raise ParityError("type II multiplicities are positive and even")
    return _sorted_config(ConfigKind.II, tuple(slopes), tuple(mults))


def type_iii(slopes, mults) -> DividingConfig:
    if len(slopes) != 3 or len(mults) != 3:
        raise TaxonomyError("type III has exactly three arc classes")
    if len(set(slopes)) != 3:
        raise NotATriangle("type III slopes must be distinct")
    for i in range(3):
        for j in range(i + 1, 3):
            if not is_farey_edge(slopes[i], slopes[j]):
                raise NotATriangle(
                    "slopes %s do not span a tessellation triangle"
                    % (tuple(str(s) for s in slopes),)
                )
    if any(m < 1 for m in mults):
        raise ParityError("multiplicities are positive")
    if len({m % 2 for m in mults}) != 1:
        raise ParityError("type III multiplicities must share parity")
    return _sorted_config(ConfigKind.III, tuple(slopes), tuple(mults))


def make_config(spec: str) -> DividingConfig:
    """Parse 'III:1,2,inf', 'III:1x1,2x1,infx1', 'II:1x2,infx2', 'I:infx5+1c'."""
    try:
        kind_text, body = spec.strip().split(":", 1)
    except ValueError:
        raise TaxonomyError("config spec needs a 'KIND:' prefix: %r" % spec) from None
    if kind_text == "I":
        closed = 1
        if "+" in body:
            body, closed_text = body.split("+", 1)
            if not closed_text.endswith("c"):
                raise TaxonomyError("closed count must look like '+2c'")
            closed = int(closed_text[:-1])
        slope_text, _, mult_text = body.partition("x")
        return type_i(parse_slope(slope_text), int(mult_text) if mult_text else 1, closed)
    slopes, mults = [], []
    for part in body.split(","):
        slope_text, _, mult_text = part.partition("x")
        slopes.append(parse_slope(slope_text))
        mults.append(int(mult_text) if mult_text else 1)
    if kind_text == "II":
        return type_ii(slopes, mults)
    if kind_text == "III":
        return type_iii(slopes, mults)
    raise TaxonomyError("unknown configuration kind %r" % kind_text)


def config_tb(c: DividingConfig) -> int:
    """tb of the boundary knot: minus the total arc count."""
    return -c.arcs()


def monodromy_config(c: DividingConfig, k: int) -> DividingConfig:
    """Apply the k-th monodromy power to every slope; multiplicities persist."""
    slopes = tuple(monodromy_apply(s, k) for s in c.slopes)
    return _sorted_config(c.kind, slopes, c.mults, c.closed)


# --- move bookkeeping ----------------------------------------------------


class MoveTag(Enum):
    FIRST_KIND = "FirstKind"
    SECOND_KIND = "SecondKind"
    CASE_THREE_A = "CaseThreeA"
    CASE_THREE_B = "CaseThreeB"
    COLLAPSE_TO_I = "CollapseToI"
    EXPAND_FROM_I = "ExpandFromI"


@dataclass(frozen=True)
class Move:
    """A non-destabilizing transition; annulus_slope is the curve whose
    monodromy image carries the bypass."""

    tag: MoveTag
    annulus_slope: Slope


@dataclass(frozen=True)
class DestabilizingMove:
    """A bypass that creates a boundary-parallel dividing curve."""

    annulus_slope: Slope
    note: str


@dataclass(frozen=True)
class DestabilizationFound:
    """Result of applying a destabilizing move: the boundary knot
    destabilizes; the arc count would drop by exactly two."""

    move: DestabilizingMove
    arcs_before: int
    arcs_after: int


def _side(s: Slope) -> FixedPointSide:
    return cmp_fixed(s)


def _all_nonnegative(slopes) -> bool:
    return all(s.is_inf or s.num >= 0 for s in slopes)


def _prewindow(slopes: tuple[Slope, ...]) -> tuple[tuple[Slope, ...], int]:
    """Monodromy-shift until every slope lies in [0, inf]."""
    shift = 0
    current = slopes
    while not _all_nonnegative(current):
        current = tuple(monodromy_apply(s, 1) for s in current)
        shift += 1
        if shift > 200:
            raise NonTermination("slope window normalization did not converge")
    return current, shift


def _sorted_triple(slopes) -> tuple[Slope, Slope, Slope]:
    return tuple(sorted(slopes, key=lambda s: (s.is_inf, s)))


def _sum_vertex(triple) -> int:
    """Index of the vertex whose canonical vector is the sum of the others."""
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        if triple[i].vector() == triple[j].vector() + triple[k].vector():
            return i
    raise NotATriangle("no vertex is the mediant of the other two")


def _same_orbit(triple, target) -> bool:
    """Whether two triangles agree up to a power of the monodromy."""
    a = frozenset(_sorted_triple(triple))
    if a == frozenset(target):
        return True

    def complexity(tri):
        return sum(abs(s.num) + s.den for s in tri)

    for step in (1, -1):
        current = target
        budget = complexity(triple) + 8
        while complexity(current) <= budget:
            current = tuple(monodromy_apply(s, step) for s in current)
            if frozenset(current) == a:
                return True
    return False


def _case1_window(triple) -> tuple[tuple[Slope, ...], int]:
    """Shift an all-above triangle until its minimum slope is >= 1."""
    shift = 0
    current = _sorted_triple(triple)
    while current[0] < ONE:
        if not all(s <= ONE for s in current):
            raise NonTermination("above-side window violated: %s" % (current,))
        current = _sorted_triple(monodromy_apply(s, -1) for s in current)
        shift -= 1
    return current, shift


def _case2_window(triple) -> tuple[tuple[Slope, ...], int]:
    """Shift an all-below triangle until its maximum slope is <= 1/2."""
    shift = 0
    current = _sorted_triple(triple)
    while current[2] > _HALF:
        if not all(s >= _HALF for s in current):
            raise NonTermination("below-side window violated: %s" % (current,))
        current = _sorted_triple(monodromy_apply(s, -1) for s in current)
        shift -= 1
    return current, shift


def _window_slope(s: Slope, above: bool) -> tuple[Slope, int]:
    """Shift a single nonnegative slope into [1, inf] or [0, 1/2]."""
    shift = 0
    current = s
    if above:
        while not current.is_inf and current < ONE:
            current = monodromy_apply(current, -1)
            shift -= 1
    else:
        while current > _HALF:
            current = monodromy_apply(current, -1)
            shift -= 1
    return current, shift


def _flip(triple):
    """Replace the mediant vertex by the difference of the other two.

    Returns (new sorted triple, removed slope, added slope, tag): the tag
    is FIRST_KIND when the new mediant vertex is the old minimum slope,
    SECOND_KIND when it is the old maximum.
    """
    tri = _sorted_triple(triple)
    i = _sum_vertex(tri)
    j, k = [x for x in range(3) if x != i]
    removed = tri[i]
    added = slope_of_vector(tri[j].vector() - tri[k].vector())
    new = _sorted_triple((tri[j], tri[k], added))
    new_sum = new[_sum_vertex(new)]
    tag = MoveTag.FIRST_KIND if new_sum == min(tri[j], tri[k]) else MoveTag.SECOND_KIND
    return new, removed, added, tag


def _expand(slope: Slope):
    """Triangle produced by the one legal bypass on a one-class config."""
    if slope == ZERO:
        return _OVERTWISTED_TRIANGLE
    if slope == ONE or slope.is_inf:
        return _TIGHT_TRIANGLE
    left, right = farey_parents(slope)
    anchor = right if _side(slope) is FixedPointSide.BELOW else left
    other = slope_of_vector(slope.vector() - anchor.vector())
    return _sorted_triple((anchor, slope, other))


@dataclass(frozen=True)
class _Analysis:
    """Windowed view of a three-arc configuration."""

    shift: int  # power of the monodromy taking the input to the window
    windowed: DividingConfig
    terminal: str | None  # "tight" | "overtwisted" | None
    moves: tuple[tuple[Move, DividingConfig], ...]  # move (input frame) -> result


def _unshift_config(c: DividingConfig, shift: int) -> DividingConfig:
    return monodromy_config(c, -shift) if shift else c


def _analyze3(c: DividingConfig) -> _Analysis:
    """Terminal status and legal transitions of a three-arc configuration."""
    if c.kind is ConfigKind.I:
        slopes, pre = _prewindow(c.slopes)
        slope = slopes[0]
        above = _side(slope) is FixedPointSide.ABOVE
        slope, extra = _window_slope(slope, above)
        shift = pre + extra
        windowed = type_i(slope, c.mults[0], c.closed)
        triple = _expand(slope)
        result = _unshift_config(type_iii(triple, (1, 1, 1)), shift)
        move = Move(MoveTag.EXPAND_FROM_I, monodromy_apply(slope, -shift))
        return _Analysis(shift, windowed, None, ((move, result),))

    triple, pre = _prewindow(c.slopes)
    if _same_orbit(triple, _TIGHT_TRIANGLE):
        return _Analysis(pre, type_iii(triple, (1, 1, 1)), "tight", ())
    if _same_orbit(triple, _OVERTWISTED_TRIANGLE):
        return _Analysis(pre, type_iii(triple, (1, 1, 1)), "overtwisted", ())

    sides = [_side(s) for s in triple]
    moves = []
    if all(s is FixedPointSide.ABOVE for s in sides):
        tri, extra = _case1_window(triple)
        shift = pre + extra
        a = tri[0]
        annulus = monodromy_apply(a, -shift)
        flipped, _, _, tag = _flip(tri)
        moves.append((Move(tag, annulus),
                      _unshift_config(type_iii(flipped, (1, 1, 1)), shift)))
        moves.append((Move(MoveTag.COLLAPSE_TO_I, annulus),
                      _unshift_config(type_i(a, 3, 1), shift)))
        windowed = type_iii(tri, (1, 1, 1))
    elif all(s is FixedPointSide.BELOW for s in sides):
        tri, extra = _case2_window(triple)
        shift = pre + extra
        b = tri[2]
        annulus = monodromy_apply(b, -shift)
        flipped, _, _, tag = _flip(tri)
        moves.append((Move(tag, annulus),
                      _unshift_config(type_iii(flipped, (1, 1, 1)), shift)))
        windowed = type_iii(tri, (1, 1, 1))
    else:
        shift = pre
        tri = _sorted_triple(triple)
        low, mid, high = tri
        if _side(mid) is FixedPointSide.BELOW:
            # gateway pattern: replace the minimum by mediant(mid, high)
            annulus = monodromy_apply(high, -shift)
            new = _sorted_triple((mid, mediant(mid, high), high))
            moves.append((Move(MoveTag.CASE_THREE_B, annulus),
                          _unshift_config(type_iii(new, (1, 1, 1)), shift)))
        else:
            # two slopes above the fixed point: for this monodromy such a
            # triangle always lies in a terminal orbit (handled above), so
            # this branch is unreachable from valid states; the transition
            # is kept for completeness.
            annulus = monodromy_apply(mid, -shift)
            new = _sorted_triple((low, mediant(low, mid), mid))
            moves.append((Move(MoveTag.CASE_THREE_A, annulus),
                          _unshift_config(type_iii(new, (1, 1, 1)), shift)))
        windowed = type_iii(tri, (1, 1, 1))
    return _Analysis(shift, windowed, None, tuple(moves))


def legal_moves(c: DividingConfig) -> list[Move]:
    """Non-destabilizing transitions available from this configuration.

    Configurations with more than three arcs have none: every available
    bypass there produces a boundary-parallel dividing curve and is
    reported by :func:`destabilizing_moves` instead.
    """
    if c.arcs() != 3:
        return []
    if c.kind is ConfigKind.I and c.closed != 1:
        return []
    return [move for move, _ in _analyze3(c).moves]


def destabilizing_moves(c: DividingConfig) -> list[DestabilizingMove]:
    """Bypasses that force a destabilization of the boundary knot.

    Two-class configurations always destabilize; so do one-class
    configurations with five or more arcs (nested bypasses) and
    three-class configurations with total multiplicity above three.
    """
    if c.kind is ConfigKind.II:
        return [DestabilizingMove(c.slopes[0], "two-class configurations destabilize")]
    if c.kind is ConfigKind.I and c.mults[0] > 3:
        return [DestabilizingMove(c.slopes[0], "nested bypasses on a one-class configuration with more than three arcs")]
    if c.kind is ConfigKind.III and c.arcs() > 3:
        return [DestabilizingMove(c.slopes[0], "three-class configuration with more than three arcs")]
    return []


def apply_move(c: DividingConfig, move) -> DividingConfig | DestabilizationFound:
    """Apply a move returned by legal_moves or destabilizing_moves."""
    if isinstance(move, DestabilizingMove):
        if move not in destabilizing_moves(c):
            raise IllegalMove("%r is not a destabilizing move of %s" % (move, c))
        return DestabilizationFound(move, c.arcs(), c.arcs() - 2)
    if c.arcs() != 3:
        raise IllegalMove("no transitions on configurations with %d arcs" % c.arcs())
    for candidate, result in _analyze3(c).moves:
        if candidate == move:
            return result
    raise IllegalMove("%r is not legal on %s" % (move, c))


class OutcomeKind(Enum):
    STANDARD_TIGHT = "standard-tight"
    OVERTWISTED = "overtwisted"
    DESTABILIZES = "destabilizes"
    NONE_FOUND = "none-found-within-limit"


@dataclass(frozen=True)
class NormalizationOutcome:
    kind: OutcomeKind
    trace: tuple[str, ...]
    steps: int


def _default_limit(c: DividingConfig) -> int:
    depth = max(farey_depth(s) for s in c.slopes)
    return max(64, 10 * (depth + 2) ** 2)


def _move_line(move: Move, before: DividingConfig, after: DividingConfig) -> str:
    before_s = ",".join(str(s) for s in before.slopes)
    after_s = ",".join(str(s) for s in after.slopes)
    return "%s %s->%s" % (move.tag.value, before_s, after_s)


def normalize(c: DividingConfig, step_limit: int | None = None) -> NormalizationOutcome:
    """Drive a configuration to its terminal form.

    Three-arc configurations end in the standard tight orbit {1, 2, inf}
    or the overtwisted orbit {0, 1, inf}; anything with more arcs
    destabilizes.  The move order is deterministic (triangle transitions
    are preferred over collapses), and exceeding the step limit raises
    NonTermination, which indicates a bug rather than a mathematical
    outcome.
    """
    if step_limit is None:
        step_limit = _default_limit(c)
    if c.arcs() > 3:
        move = destabilizing_moves(c)[0]
        line = "Destabilizing annulus=%s (%s)" % (move.annulus_slope, move.note)
        return NormalizationOutcome(OutcomeKind.DESTABILIZES, (line,), 1)
    if c.arcs() != 3:
        raise Unsupported("verdicts are defined for three-arc configurations")

    trace = []
    current = c
    if current.kind is ConfigKind.I and current.closed > 1:
        # closed-curve pairs are absorbed before the arc analysis
        trace.append("ReduceClosed %dc->1c" % current.closed)
        current = type_i(current.slopes[0], current.mults[0], 1)

    for _ in range(step_limit):
        if current.kind is ConfigKind.III:
            analysis = _analyze3(current)
            if analysis.terminal == "tight":
                return NormalizationOutcome(
                    OutcomeKind.STANDARD_TIGHT, tuple(trace), len(trace)
                )
            if analysis.terminal == "overtwisted":
                return NormalizationOutcome(
                    OutcomeKind.OVERTWISTED, tuple(trace), len(trace)
                )
        else:
            analysis = _analyze3(current)
        move, result = analysis.moves[0]
        trace.append(_move_line(move, current, result))
        current = result
    raise NonTermination("no terminal form within %d steps" % step_limit)


def find_destabilization(c: DividingConfig, step_limit: int | None = None) -> NormalizationOutcome:
    """Locate a destabilizing bypass for a configuration with > 3 arcs."""
    if c.arcs() <= 3:
        raise Unsupported("destabilization search needs more than three arcs")
    if step_limit is not None and step_limit < 1:
        raise Unsupported("step limit must be positive")
    moves = destabilizing_moves(c)
    if not moves:
        return NormalizationOutcome(OutcomeKind.NONE_FOUND, (), 0)
    move = moves[0]
    line = "Destabilizing annulus=%s (%s)" % (move.annulus_slope, move.note)
    return NormalizationOutcome(OutcomeKind.DESTABILIZES, (line,), 1)
