"""Reading tb and r off a front.

A front is a word of cusp and crossing events. We start from the simplest
Legendrian unknot, add zigzags and splice fronts together, and watch the
classical invariants move the way they should.
"""

from leglab.front import FrontDiagram, connect_sum, orient, reverse_orientation, stabilize


def show(label, f):
    i = f.invariants
    print(f"{label:<28} {f.diagram.word:<40} writhe={i.writhe:>3} tb={i.tb:>3} r={i.r:>3}")


eye = orient(FrontDiagram.from_word("L1 R1", "eye"))
show("eye", eye)

# a zigzag costs one unit of tb and moves r by the sign of the zigzag
show("eye, + stabilized", stabilize(eye, 1))
show("eye, - stabilized", stabilize(eye, -1))

# the one-crossing front is itself a stabilized unknot
kink = orient(FrontDiagram.from_word("L1 X1 R1", "kink"))
show("kink", kink)
show("kink, reversed", reverse_orientation(kink))

# a Legendrian right-handed trefoil: two nested eyes with three crossings below
rt = orient(FrontDiagram.from_word("L1 L2 X3 X3 X3 R2 R1", "trefoil"))
show("right trefoil", rt)

# connected sum adds tb (plus one) and adds r
show("trefoil # trefoil", connect_sum(rt, rt))
show("trefoil # kink", connect_sum(rt, kink))

# tb + r is always odd, whatever we do
for f in (eye, kink, rt, connect_sum(rt, stabilize(kink, -1))):
    i = f.invariants
    assert (i.tb + i.r) % 2 == 1
print("tb + r is odd for every front above")
