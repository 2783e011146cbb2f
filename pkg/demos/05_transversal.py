#!/usr/bin/env python3
"""Transversal knots through push-offs.

Push a Legendrian knot off along the contact framing and it becomes
transversal, with self-linking tb + rot (positive push-off) or tb - rot
(negative).  The stable invariant s = tb + rot decides transversal
isotopy for the knot types in scope, so the realizable self-linking
numbers form an odd ray below the best Legendrian peak.
"""

from legknot import (
    LegendrianClass,
    Sign,
    figure_eight,
    max_sl,
    push_off_sl,
    torus,
    unknot,
)
from legknot.classify import peaks, stabilize_class
from legknot.transversal import iterated_max_sl, stable_invariant

print("Push-offs of some Legendrian classes:")
for c in (
    LegendrianClass(unknot(), -1, 0),
    LegendrianClass(torus(-3, 2), -6, 1),
    LegendrianClass(torus(3, 2), 1, 0),
    LegendrianClass(figure_eight(), -3, 0),
):
    print("  %-24s sl(T+)=%3d  sl(T-)=%3d"
          % (c.knot, push_off_sl(c, Sign.PLUS), push_off_sl(c, Sign.MINUS)))

print()
print("s = tb + rot ignores positive stabilization:")
c = LegendrianClass(torus(-7, 3), -21, 4)
for _ in range(4):
    print("  (tb=%3d, rot=%2d)  s=%d" % (c.tb, c.rot, stable_invariant(c)))
    c = stabilize_class(c, Sign.PLUS)

print()
print("Maximal self-linking = best tb + rot over the peaks:")
for k in (unknot(), figure_eight(), torus(5, 2), torus(-7, 3)):
    best = max(p.tb + p.rot for p in peaks(k))
    print("  %-12s max sl = %3d (peak mountain gives %d)" % (k, max_sl(k), best))

print()
print("Iterated torus knots, by the cabling recursion:")
for cables in ([(3, 2)], [(-3, 2)], [(3, 2), (5, 2)], [(3, 2), (7, 3)]):
    print("  cables %-18s max sl = %d" % (cables, iterated_max_sl(cables)))
