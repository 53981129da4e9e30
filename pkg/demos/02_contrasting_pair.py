#!/usr/bin/env python3
"""Two multiplicity vectors, same classes, opposite outcomes.

With classes (transpositions, 3-cycles, 5-cycles) of S5, the multiplicity
vector (2,2,1) gives a 125-point fiber on which the braid group acts as
all of S125, while (2,1,2) gives 170 points and only the wreath product
S85 wr S2: the ambiguous 5-cycle class appears twice, which forces an
imprimitivity system of two blocks of 85.  The two runs share every line
of code; only nu differs.

Expect a couple of minutes: the orders are certified exactly via
stabilizer chains on 125 and 170 points.
"""

from math import factorial

import hurwitz as hw
from hurwitz.io import load_group_file, resolve_reference

S5 = load_group_file(resolve_reference("S5", "groups"))
classes = S5.conjugacy_classes()
c2 = next(c for c in classes if c.cycle_type() == (2, 1, 1, 1))
c3 = next(c for c in classes if c.cycle_type() == (3, 1, 1))
c5 = next(c for c in classes if c.cycle_type() == (5,))

for nu in ((2, 2, 1), (2, 1, 2)):
    h = hw.validate_parameter(S5, [c2, c3, c5], nu)
    fiber = hw.build_fiber(h, "aut")
    report = hw.monodromy_group(fiber)
    print(f"nu = {nu}: fiber {len(fiber)}")
    if report.group_order == factorial(len(fiber)):
        print(f"  monodromy = the full symmetric group on {len(fiber)} points")
    else:
        print(f"  monodromy order = {report.group_order}")
        print(f"  equals 2*(85!)^2: {report.group_order == 2 * factorial(85) ** 2}")
    for v in report.per_orbit:
        line = f"  orbit of {v.size}: full = {v.full}"
        if v.blocks:
            line += f", {len(v.blocks)} blocks of {len(v.blocks[0])}"
        print(line)
    print(f"  quasi-full: {report.quasi_full}")
