#!/usr/bin/env python3
"""Fronts and their classical invariants.

A Legendrian knot projects to a front: a diagram with cusps instead of
vertical tangencies, where the strand of smaller slope always passes in
front.  This demo encodes fronts as Morse-event words, computes tb and
the rotation number, and walks down the mountain range by stabilizing.
"""

from legknot import Sign, invariants, parse_front, stabilize_diagram

MAXIMAL_UNKNOT = "L 1\nR 1\n"
STABILIZED_UNKNOT = "L 1\nL 2\nR 1\nR 1\n"
RIGHT_TREFOIL_PEAK = "L 1\nL 1\nX 2\nX 2\nX 2\nR 1\nR 1\n"
LEFT_TREFOIL = "L 1\nL 1\nL 1\nX 2\nX 4\nR 3\nX 2\nR 1\nR 1\n"


def show(title, word):
    d = parse_front(word)
    inv = invariants(d)
    print("%-28s tb=%3d  rot=%3d  writhe=%3d  right cusps=%d"
          % (title, inv.tb, inv.rot, inv.writhe, inv.right_cusps))
    return d


print("Front invariants: tb = writhe - #right cusps, rot = (down - up)/2")
print()
show("maximal unknot", MAXIMAL_UNKNOT)
show("once-stabilized unknot", STABILIZED_UNKNOT)
show("right trefoil at tb = 1", RIGHT_TREFOIL_PEAK)
show("left trefoil at tb = -6", LEFT_TREFOIL)

print()
print("Stabilization inserts a zigzag: tb drops by one, rot moves by one.")
d = parse_front(MAXIMAL_UNKNOT)
for step in range(3):
    sign = Sign.MINUS if step % 2 == 0 else Sign.PLUS
    d = stabilize_diagram(d, sign, gap=1, level=1)
    inv = invariants(d)
    print("  after S%s: tb=%d rot=%d, word: %s"
          % ("-" if sign is Sign.MINUS else "+", inv.tb, inv.rot,
             " / ".join(str(e) for e in d.events)))

print()
print("The two stabilizations commute on invariants:")
a = stabilize_diagram(stabilize_diagram(parse_front(RIGHT_TREFOIL_PEAK), Sign.PLUS, 1, 1), Sign.MINUS, 1, 1)
b = stabilize_diagram(stabilize_diagram(parse_front(RIGHT_TREFOIL_PEAK), Sign.MINUS, 1, 1), Sign.PLUS, 1, 1)
print("  S-S+ gives", (invariants(a).tb, invariants(a).rot),
      " S+S- gives", (invariants(b).tb, invariants(b).rot))
