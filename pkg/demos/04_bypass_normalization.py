#!/usr/bin/env python3
"""Normalizing dividing curves on the punctured-torus fiber.

The figure-eight complement fibers over the circle with monodromy
(x, y) -> (2x + y, x + y).  Dividing-curve configurations on a fiber are
driven by bypass moves to one of two terminal orbits: {1, 2, inf} (the
unique tight normal form) or {0, 1, inf} (no tight structure).  With
more than three arcs a destabilizing bypass always exists.  This is the
machinery behind max tb = -3 for the figure-eight knot.
"""

from legknot.bypass import make_config, monodromy_config, normalize

STARTS = (
    "III:1,2,inf",      # already the tight normal form
    "III:0,1,inf",      # the overtwisted triangle
    "III:5/3,7/4,2",    # all slopes above the fixed point
    "III:1/4,2/7,1/3",  # all slopes below
    "III:0,1/2,1",      # straddling the fixed point
    "III:-2,-3/2,-1",   # negative slopes, shifted in by the monodromy
    "I:3x3+1c",         # one arc class, expands to a triangle
    "II:1x2,infx2",     # two arc classes: destabilizes
    "I:infx5+1c",       # five arcs: destabilizes
)

for spec in STARTS:
    config = make_config(spec)
    outcome = normalize(config)
    print("%-18s -> %s in %d step(s)" % (spec, outcome.kind.value, outcome.steps))
    for line in outcome.trace:
        print("     ", line)

print()
print("The verdict only depends on the monodromy orbit:")
base = make_config("III:0,1,inf")
for k in range(-2, 3):
    shifted = monodromy_config(base, k)
    print("  shift %+d: %-28s -> %s"
          % (k, shifted, normalize(shifted).kind.value))
