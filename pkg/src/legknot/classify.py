"""Legendrian classification oracle for unknots, torus knots, and
figure-eight knots.

Knots of these types are determined up to Legendrian isotopy by the
classical invariants (tb, rotation), so the classification reduces to
combinatorics: each knot type has a finite set of maximal-tb "peaks";
stabilizing walks down a cone below each peak, and the realizable
(tb, rotation) pairs are exactly the union of these cones.  The peak
data implemented here:

  unknot          tb = -1,         rotation 0
  positive torus  tb = pq - p - q, rotation 0
  negative torus  tb = pq,         rotation +-(|p| - q - 2qk), 0 <= k < (|p|-q)/q
  figure eight    tb = -3,         rotation 0

Negative torus knots have several peaks; the first meeting points of
adjacent stabilization cones (the "valleys") are computed from the
division |p| = mq + e.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .errors import InvalidKnot, NotAdjacent, Unrealizable, Unsupported

__all__ = [
    "Sign",
    "Verdict",
    "KnotType",
    "LegendrianClass",
    "Peak",
    "MountainRange",
    "BoundsReport",
    "unknot",
    "torus",
    "figure_eight",
    "parse_knot",
    "euler_char",
    "max_tb",
    "peak_rotations",
    "peaks",
    "realizable",
    "decide_isotopy",
    "stabilize_class",
    "mountain_range",
    "common_destabilization",
    "bounds_report",
]


class Sign(Enum):
    PLUS = 1
    MINUS = -1


class Verdict(Enum):
    ISOTOPIC = "isotopic"
    DISTINCT = "distinct"


@dataclass(frozen=True)
class KnotType:
    """One of the classified knot types: unknot, torus(p, q), fig8.

    Torus knots are stored canonically with |p| > q > 0 and gcd = 1;
    positive knots satisfy p > q > 0 and negative ones p < 0 < q < |p|.
    Use the factory functions below rather than the raw constructor.
    """

    kind: str  # "unknot" | "torus" | "fig8"
    p: int = 0
    q: int = 0

    def __str__(self) -> str:
        if self.kind == "torus":
            return "torus:%d,%d" % (self.p, self.q)
        return self.kind


def unknot() -> KnotType:
    return KnotType("unknot")


def figure_eight() -> KnotType:
    return KnotType("fig8")


def torus(p: int, q: int) -> KnotType:
    """Canonicalized (p, q)-torus knot.

    K(p,q) = K(q,p) = K(-p,-q), so inputs are normalized into the
    |p| > q > 0 window.  q = 1 describes the unknot and is rejected
    rather than silently converted.
    """
    if p == 0 or q == 0:
        raise InvalidKnot("torus knot needs nonzero p and q")
    if q < 0:
        p, q = -p, -q
    if abs(p) < q:
        p, q = q, p
        if q < 0:
            p, q = -p, -q
    if gcd(abs(p), q) != 1:
        raise InvalidKnot("(%d, %d) are not coprime" % (p, q))
    if q == 1:
        raise InvalidKnot("a (p, 1) curve is the unknot; use 'unknot'")
    if abs(p) == q:
        raise InvalidKnot("|p| = q is not a knot")
    return KnotType("torus", p, q)


def parse_knot(text: str) -> KnotType:
    """Parse 'unknot', 'torus:p,q', or 'fig8'."""
    text = text.strip()
    if text == "unknot":
        return unknot()
    if text == "fig8":
        return figure_eight()
    if text.startswith("torus:"):
        body = text[len("torus:"):]
        try:
            p_text, q_text = body.split(",")
            return torus(int(p_text), int(q_text))
        except ValueError as exc:
            raise InvalidKnot("cannot parse torus spec %r" % text) from exc
    raise InvalidKnot("unknown knot spec %r" % text)


def euler_char(k: KnotType) -> int:
    """Euler characteristic of the minimal-genus Seifert surface."""
    if k.kind == "unknot":
        return 1
    if k.kind == "fig8":
        return -1  # genus one, one boundary component
    return abs(k.p) + abs(k.q) - abs(k.p * k.q)


def max_tb(k: KnotType) -> int:
    """Maximal Thurston-Bennequin invariant of the knot type."""
    if k.kind == "unknot":
        return -1
    if k.kind == "fig8":
        return -3
    if k.p > 0:
        return k.p * k.q - k.p - k.q
    return k.p * k.q


def peak_rotations(k: KnotType) -> set[int]:
    """Rotation numbers realized at maximal tb."""
    if k.kind != "torus" or k.p > 0:
        return {0}
    a, q = -k.p, k.q
    out = set()
    k_idx = 0
    while k_idx * q < a - q:  # k < (|p| - q)/q
        r = a - q - 2 * q * k_idx
        out.add(r)
        out.add(-r)
        k_idx += 1
    return out


@dataclass(frozen=True)
class Peak:
    tb: int
    rot: int


def peaks(k: KnotType) -> tuple[Peak, ...]:
    """All maximal-tb classes, rotation descending."""
    t = max_tb(k)
    return tuple(Peak(t, r) for r in sorted(peak_rotations(k), reverse=True))


def realizable(k: KnotType, tb: int, rot: int) -> bool:
    """True iff (tb, rot) lies in some peak's stabilization cone."""
    for peak in peaks(k):
        depth = peak.tb - tb
        if depth < 0:
            continue
        if abs(rot - peak.rot) <= depth and (rot - peak.rot - depth) % 2 == 0:
            return True
    return False


@dataclass(frozen=True)
class LegendrianClass:
    """A Legendrian isotopy class: knot type plus (tb, rotation).

    These invariants are complete for the knot types in scope, so
    equality of the triple decides Legendrian isotopy.
    """

    knot: KnotType
    tb: int
    rot: int

    def __post_init__(self):
        if not realizable(self.knot, self.tb, self.rot):
            raise Unrealizable(
                "(tb=%d, rot=%d) is not realized by any Legendrian %s"
                % (self.tb, self.rot, self.knot)
            )


def decide_isotopy(a: LegendrianClass, b: LegendrianClass) -> Verdict:
    same = a.knot == b.knot and a.tb == b.tb and a.rot == b.rot
    return Verdict.ISOTOPIC if same else Verdict.DISTINCT


def stabilize_class(c: LegendrianClass, sign: Sign) -> LegendrianClass:
    """tb drops by one, rotation moves by the sign; cones are closed."""
    return LegendrianClass(c.knot, c.tb - 1, c.rot + sign.value)


@dataclass(frozen=True)
class MountainRange:
    """All realizable (tb, rot) pairs down to a given depth below the top."""

    knot: KnotType
    depth: int
    pairs: frozenset[tuple[int, int]]


def mountain_range(k: KnotType, depth: int) -> MountainRange:
    if depth < 0:
        raise Unsupported("depth must be non-negative")
    top = max_tb(k)
    pairs = set()
    for peak in peaks(k):
        for d in range(depth + 1):
            for r in range(peak.rot - d, peak.rot + d + 1, 2):
                pairs.add((top - d, r))
    return MountainRange(k, depth, frozenset(pairs))


def common_destabilization(k: KnotType, a: Peak, b: Peak) -> tuple[int, int]:
    """First class where the cones of two adjacent peaks meet.

    For a negative torus knot with |p| = mq + e the rotation gaps between
    adjacent peaks are 2e and 2(q - e); the cones of peaks with gap 2g
    meet at depth g, at rotation halfway between.
    """
    if k.kind != "torus" or k.p > 0:
        raise Unsupported("valleys exist only for negative torus knots")
    peak_list = peaks(k)
    if a not in peak_list or b not in peak_list:
        raise NotAdjacent("inputs must be peaks of %s" % k)
    if a == b:
        raise NotAdjacent("peaks are equal")
    hi, lo = (a, b) if a.rot > b.rot else (b, a)
    between = [p for p in peak_list if lo.rot < p.rot < hi.rot]
    if between:
        raise NotAdjacent("peaks %s and %s are not adjacent" % (a, b))
    g = (hi.rot - lo.rot) // 2
    return (max_tb(k) - g, hi.rot - g)


@dataclass(frozen=True)
class BoundsReport:
    """Comparison of max tb against the classical upper bounds.

    ``fuchs_tabachnikov`` is None for positive torus knots, where only
    the Bennequin bound is reported (and is attained).  ``strict`` flags
    that max_tb sits strictly below every reported bound.
    """

    knot: KnotType
    bennequin: int
    fuchs_tabachnikov: int | None
    max_tb: int
    strict: bool


def bounds_report(k: KnotType) -> BoundsReport:
    if k.kind != "torus":
        raise Unsupported("bounds are reported for torus knots only")
    bennequin = -euler_char(k)
    top = max_tb(k)
    if k.p > 0:
        ft = None
    else:
        # Kauffman-polynomial bound: -pq for even q, -pq + p - q for odd q,
        # stated for the (p, -q) convention with p > q > 0.
        a, q = -k.p, k.q
        ft = -a * q if q % 2 == 0 else -a * q + a - q
    bounds = [bennequin] + ([] if ft is None else [ft])
    return BoundsReport(k, bennequin, ft, top, all(top < b for b in bounds))
