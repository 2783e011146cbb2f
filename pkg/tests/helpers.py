"""Shared independent oracles for the test suite.

Everything here deliberately avoids the code paths it is used to check:
colorings come from the diagram's crossing relations, tight-structure
counts from shortest paths in the Farey graph, and triangle enumeration
from raw mediant subdivision.
"""

from __future__ import annotations

import itertools
import random
from math import gcd

from legknot.classify import Sign
from legknot.front import FrontDiagram, FrontEvent, invariants, parse_front, stabilize_diagram
from legknot.lattice import INF, ONE, ZERO, Slope, mediant, reduce_slope, triangle_completions


def three_colorings(d: FrontDiagram) -> int:
    """Number of Fox 3-colorings of the underlying knot diagram.

    3 means trivially colored only; a 3-crossing diagram with 9 colorings
    is a trefoil.  Uses only the traversal and crossing passages.
    """
    stream = []
    for sid, direction in d.traversal_cycle:
        passages = d._strands[sid].passages
        stream.extend(passages if direction == +1 else list(reversed(passages)))
    under_positions = [i for i, (_, role) in enumerate(stream) if role == "under"]
    if not under_positions:
        return 3
    narcs = len(under_positions)
    arc_of_pos = {}
    for a in range(narcs):
        start, end = under_positions[a - 1], under_positions[a]
        i = (start + 1) % len(stream)
        while True:
            arc_of_pos[i] = a
            if i == end % len(stream):
                break
            i = (i + 1) % len(stream)
    relations = []
    for a, pos in enumerate(under_positions):
        ev = stream[pos][0]
        over_pos = next(
            i for i, (e, role) in enumerate(stream) if e == ev and role == "over"
        )
        relations.append((arc_of_pos[over_pos], a, (a + 1) % narcs))
    count = 0
    for colors in itertools.product(range(3), repeat=narcs):
        if all((2 * colors[o] - colors[i] - colors[j]) % 3 == 0 for o, i, j in relations):
            count += 1
    return count


def _neighbors_in_window(s: Slope, p: int, q: int) -> list[Slope]:
    """Farey neighbors of s among slopes -a/b with -p/q <= -a/b <= -1, b <= q."""
    lo = reduce_slope(-p, q)
    out = []
    for b in range(1, q + 1):
        for a in range(b, p * b // q + 2):
            if gcd(a, b) != 1:
                continue
            t = reduce_slope(-a, b)
            if t == s or t < lo or t > reduce_slope(-1, 1):
                continue
            det = s.den * t.num - s.num * t.den
            if abs(det) == 1:
                out.append(t)
    return out


def tight_count_by_paths(p: int, q: int) -> int:
    """Independent tight-structure count via decorated Farey paths.

    Takes the unique shortest Farey path from -1 to -p/q, groups its
    edges into maximal runs that pivot around a common tessellation
    vertex, and multiplies (run length + 1) over the runs: signs shuffle
    within a pivoted run, so each run contributes its sign multiset.
    """
    start = reduce_slope(-1, 1)
    goal = reduce_slope(-p, q)
    if start == goal:
        raise ValueError("need p/q > 1")
    # BFS with path counting; uniqueness of the shortest path is asserted.
    dist = {start: 0}
    ways = {start: 1}
    parent = {start: None}
    frontier = [start]
    while frontier and goal not in dist:
        nxt = []
        for v in frontier:
            for w in _neighbors_in_window(v, p, q):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    ways[w] = ways[v]
                    parent[w] = v
                    nxt.append(w)
                elif dist[w] == dist[v] + 1:
                    ways[w] += ways[v]
        frontier = nxt
    assert goal in dist, "no Farey path found for %d/%d" % (p, q)
    assert ways[goal] == 1, "shortest Farey path is not unique for %d/%d" % (p, q)
    path = [goal]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    edges = list(zip(path, path[1:]))
    # maximal pivoted runs: consecutive edges sharing a triangle apex
    runs = [1]
    for i in range(1, len(edges)):
        left = set(triangle_completions(*edges[i - 1]))
        right = set(triangle_completions(*edges[i]))
        if left & right:
            runs[-1] += 1
        else:
            runs.append(1)
    count = 1
    for run in runs:
        count *= run + 1
    return count


def farey_triangles_to_depth(max_depth: int):
    """All tessellation triangles within max_depth mediant subdivisions
    of the two base triangles {0, 1, inf} and {-1, 0, inf}."""
    base = [(ZERO, ONE, INF), (reduce_slope(-1, 1), ZERO, INF)]
    seen = set()
    out = []
    frontier = base
    for _ in range(max_depth + 1):
        nxt = []
        for tri in frontier:
            key = frozenset(tri)
            if key in seen:
                continue
            seen.add(key)
            out.append(tri)
            for i in range(3):
                j, k = [x for x in range(3) if x != i]
                nxt.append((tri[j], tri[k], mediant(tri[j], tri[k])))
        frontier = nxt
    return out


_SEED_WORDS = (
    "L 1\nR 1\n",
    "L 1\nL 2\nR 1\nR 1\n",
    "L 1\nL 1\nX 2\nX 2\nX 2\nR 1\nR 1\n",
    "L 1\nL 1\nL 1\nX 2\nX 4\nR 3\nX 2\nR 1\nR 1\n",
)


def random_valid_diagrams(count: int, seed: int = 20200615):
    """Deterministic stream of valid single-component diagrams.

    Seeds are the library's reference fronts; each output applies a
    random chain of stabilizations at random valid hints, which preserves
    validity by construction.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = parse_front(rng.choice(_SEED_WORDS))
        for _ in range(rng.randrange(0, 5)):
            profile = d.strand_profile()
            gaps = [g for g, n in enumerate(profile) if n > 0]
            gap = rng.choice(gaps)
            level = rng.randrange(1, profile[gap] + 1)
            sign = rng.choice((Sign.PLUS, Sign.MINUS))
            d = stabilize_diagram(d, sign, gap, level)
        out.append(d)
    return out


def random_hints(d: FrontDiagram, rng: random.Random):
    profile = d.strand_profile()
    gaps = [g for g, n in enumerate(profile) if n > 0]
    gap = rng.choice(gaps)
    return gap, rng.randrange(1, profile[gap] + 1)


TREFOIL_WORD = "L 1\nL 1\nL 1\nX 2\nX 4\nR 3\nX 2\nR 1\nR 1\n"
RIGHT_TREFOIL_PEAK_WORD = "L 1\nL 1\nX 2\nX 2\nX 2\nR 1\nR 1\n"
STABILIZED_UNKNOT_WORD = "L 1\nL 2\nR 1\nR 1\n"
