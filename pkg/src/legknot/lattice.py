"""Exact slope arithmetic: Farey tessellation, negative continued
fractions, and the punctured-torus monodromy action.

A curve class on the torus is labeled by the slope of a primitive integer
vector: the class of (x, y) has slope y/x in lowest terms, with the
vertical class (0, 1) labeled ``inf``.  Two classes span an edge of the
Farey tessellation exactly when their primitive vectors form an integral
basis of Z^2 (determinant +-1), and the mediant construction labels the
third vertex of each triangle carried by an edge.

The monodromy of interest is the linear map (x, y) -> (2x + y, x + y),
which on slopes reads s -> (1 + s)/(2 + s).  Its attracting fixed slope
is the positive root of s^2 + s - 1.  That root is never materialized:
comparisons against it go through the sign of n^2 + n*d - d^2 on the
reduced fraction n/d.  Everything in this module is exact integer
arithmetic; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .errors import DegenerateEdge, InvalidFraction, InvalidSlope

__all__ = [
    "IntegralVector",
    "Slope",
    "FixedPointSide",
    "INF",
    "ZERO",
    "ONE",
    "MONODROMY_MATRIX",
    "reduce_slope",
    "parse_slope",
    "slope_of_vector",
    "farey_det",
    "is_farey_edge",
    "mediant",
    "triangle_completions",
    "neg_cf",
    "monodromy_vec",
    "monodromy_apply",
    "cmp_fixed",
    "slope_in_range",
    "farey_parents",
    "farey_depth",
]


@dataclass(frozen=True)
class IntegralVector:
    """An integer vector; primitive when it represents a curve class."""

    x: int
    y: int

    def is_primitive(self) -> bool:
        return gcd(abs(self.x), abs(self.y)) == 1

    def __add__(self, other: "IntegralVector") -> "IntegralVector":
        return IntegralVector(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "IntegralVector") -> "IntegralVector":
        return IntegralVector(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Slope:
    """A reduced extended rational num/den labeling a torus curve class.

    Canonical form: den > 0 with the sign carried by num and
    gcd(|num|, den) = 1, or (num, den) = (1, 0) for the point at
    infinity.  Build values through :func:`reduce_slope`; the constructor
    rejects anything non-canonical.
    """

    num: int
    den: int

    def __post_init__(self):
        if self.den == 0:
            if self.num != 1:
                raise InvalidSlope("infinity is canonically 1/0")
        elif self.den < 0 or gcd(abs(self.num), self.den) != 1:
            raise InvalidSlope("slope %r/%r is not reduced" % (self.num, self.den))

    @property
    def is_inf(self) -> bool:
        return self.den == 0

    def vector(self) -> IntegralVector:
        """Canonical primitive vector: (den, num), and (0, 1) for inf."""
        return IntegralVector(self.den, self.num)

    def __str__(self) -> str:
        if self.is_inf:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return "%d/%d" % (self.num, self.den)

    # Total order with inf largest; wraparound intervals are handled by
    # slope_in_range, not by these comparisons.
    def _cmp(self, other: "Slope") -> int:
        if self.is_inf and other.is_inf:
            return 0
        if self.is_inf:
            return 1
        if other.is_inf:
            return -1
        lhs = self.num * other.den
        rhs = other.num * self.den
        return (lhs > rhs) - (lhs < rhs)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0


class FixedPointSide(Enum):
    """Position of a rational slope relative to the irrational fixed slope."""

    BELOW = "below"
    ABOVE = "above"


INF = Slope(1, 0)
ZERO = Slope(0, 1)
ONE = Slope(1, 1)

#: The monodromy matrix of the punctured-torus fibration, acting by
#: (x, y) -> (2x + y, x + y).  Determinant 1.
MONODROMY_MATRIX = ((2, 1), (1, 1))
_MONODROMY_INVERSE = ((1, -1), (-1, 2))


def reduce_slope(num: int, den: int) -> Slope:
    """Canonical reduced slope; (k, 0) maps to inf for any k != 0."""
    if num == 0 and den == 0:
        raise InvalidSlope("0/0 is not a slope")
    if den == 0:
        return INF
    if den < 0:
        num, den = -num, -den
    g = gcd(abs(num), den)
    return Slope(num // g, den // g)


def parse_slope(text: str) -> Slope:
    """Parse 'a/b', 'a', or 'inf' back into a canonical slope."""
    text = text.strip()
    if text == "inf":
        return INF
    try:
        if "/" in text:
            num_text, den_text = text.split("/", 1)
            return reduce_slope(int(num_text), int(den_text))
        return Slope(int(text), 1)
    except (ValueError, InvalidSlope) as exc:
        raise InvalidSlope("cannot parse slope %r" % text) from exc


def slope_of_vector(v: IntegralVector) -> Slope:
    """Slope y/x of a nonzero integer vector."""
    return reduce_slope(v.y, v.x)


def farey_det(u: IntegralVector, v: IntegralVector) -> int:
    """Determinant u.x*v.y - u.y*v.x of two integer vectors.

    Its absolute value on primitive vectors is half the geometric
    intersection number of the corresponding curve classes with one
    dividing-curve pair.
    """
    return u.x * v.y - u.y * v.x


def is_farey_edge(s: Slope, t: Slope) -> bool:
    """True iff the primitive vectors of s and t form an integral basis."""
    if s == t:
        raise DegenerateEdge("equal slopes %s do not span an edge" % s)
    return abs(farey_det(s.vector(), t.vector())) == 1


def _require_edge(s: Slope, t: Slope) -> None:
    from .errors import NotAnEdge

    if not is_farey_edge(s, t):
        raise NotAnEdge("%s and %s are not joined in the tessellation" % (s, t))


def mediant(s: Slope, t: Slope) -> Slope:
    """Component-wise sum of the canonical primitive representatives.

    For a Farey edge the sum of the two basis vectors is itself
    primitive, so no reduction step is actually needed.
    """
    _require_edge(s, t)
    return slope_of_vector(s.vector() + t.vector())


def triangle_completions(s: Slope, t: Slope) -> tuple[Slope, Slope]:
    """The two vertices completing the edge (s, t) into a triangle.

    Returns (mediant, difference); each is joined to both s and t.  The
    ordering is fixed for determinism.
    """
    _require_edge(s, t)
    return (
        slope_of_vector(s.vector() + t.vector()),
        slope_of_vector(s.vector() - t.vector()),
    )


def neg_cf(p: int, q: int) -> list[int]:
    """Negative continued fraction of -p/q for coprime p > q > 0.

    Returns (r0, ..., rk) with every ri <= -2 and
    r0 - 1/(r1 - 1/(... - 1/rk)) = -p/q, by the ceiling-based Euclidean
    recursion.  Callers should trust the reconstruction identity, not the
    recursion; the test suite re-evaluates the fraction from the output.
    """
    if not (p > q > 0):
        raise InvalidFraction("need p > q > 0, got p=%r q=%r" % (p, q))
    if gcd(p, q) != 1:
        raise InvalidFraction("p=%r and q=%r are not coprime" % (p, q))
    out = []
    while True:
        c = -((p + q - 1) // q)  # -ceil(p/q) <= -2 since p > q
        out.append(c)
        rem = (-c) * q - p
        if rem == 0:
            return out
        p, q = q, rem


def monodromy_vec(v: IntegralVector, k: int = 1) -> IntegralVector:
    """Apply the k-th power of the monodromy matrix to a vector."""
    mat = MONODROMY_MATRIX if k >= 0 else _MONODROMY_INVERSE
    x, y = v.x, v.y
    for _ in range(abs(k)):
        x, y = mat[0][0] * x + mat[0][1] * y, mat[1][0] * x + mat[1][1] * y
    return IntegralVector(x, y)


def monodromy_apply(s: Slope, k: int = 1) -> Slope:
    """Slope of the k-th monodromy power applied to the class of s."""
    return slope_of_vector(monodromy_vec(s.vector(), k))


def cmp_fixed(s: Slope) -> FixedPointSide:
    """Side of s relative to the attracting fixed slope p of the monodromy.

    p is the positive root of s^2 + s - 1, so for s = n/d > 0 the side is
    the sign of n^2 + n*d - d^2 (never zero on rationals); slopes <= 0
    sit below p, and inf sits above.
    """
    if s.is_inf:
        return FixedPointSide.ABOVE
    if s.num <= 0:
        return FixedPointSide.BELOW
    disc = s.num * s.num + s.num * s.den - s.den * s.den
    if disc == 0:  # would make the fixed slope rational
        raise InvalidSlope("slope %s coincides with the irrational fixed point" % s)
    return FixedPointSide.ABOVE if disc > 0 else FixedPointSide.BELOW


def slope_in_range(s: Slope, s0: Slope, s1: Slope) -> bool:
    """True iff s lies in [s1, s0] on the circle of slopes.

    When s0 < s1 the interval wraps: it means [s1, inf] union [-inf, s0],
    with inf the single point gluing the two ends of the line.
    """
    if s0 == s1:
        raise DegenerateEdge("interval endpoints coincide at %s" % s0)
    if s1.is_inf:  # [inf, s0]: wrap through -inf up to s0
        return s.is_inf or s <= s0
    if s0.is_inf:  # [s1, inf]
        return s.is_inf or s >= s1
    if s1 <= s0:
        return (not s.is_inf) and s1 <= s <= s0
    return s.is_inf or s >= s1 or s <= s0


def farey_parents(s: Slope) -> tuple[Slope, Slope]:
    """Stern-Brocot parents (left, right) of a positive slope.

    Every Farey neighbor of s lies in the closed arc between the two
    parents, so the left parent is the smallest neighbor and the right
    parent the largest.  Defined for finite s > 0; the base vertices
    0 and inf have no parents.
    """
    if s.is_inf or s.num <= 0:
        raise InvalidSlope("parents are defined for finite positive slopes, not %s" % s)
    m, n = s.num, s.den
    if n == 1:
        return Slope(m - 1, 1), INF
    b = pow(m, -1, n)
    a = (m * b - 1) // n
    return reduce_slope(a, b), reduce_slope(m - a, n - b)


def farey_depth(s: Slope) -> int:
    """Number of mediant steps from the base vertices 0, +-1, inf."""
    if s.is_inf or s.num == 0:
        return 0
    m, n = abs(s.num), s.den
    depth = -1
    while n:
        depth += m // n
        m, n = n, m % n
    return depth
