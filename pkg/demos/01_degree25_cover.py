#!/usr/bin/env python3
"""The degree-25 cover: from a Hurwitz parameter to a full monodromy group.

Take S5 with the transposition class and the 5-cycle class, four branch
points of the first kind and one of the second.  The sign condition holds
((-1)^4 * (+1) = +1), so the parameter is allowed.  Enumerating all tuples
(g1, ..., g5) with the prescribed classes, product one, generating S5,
gives 3000 tuples; conjugation acts freely, leaving a fiber of 25 points.
The block-preserving braid group acts transitively on them and generates
the full symmetric group S25: the cover of the configuration space is full.
"""

from math import factorial

import hurwitz as hw
from hurwitz.io import load_group_file, resolve_reference

S5 = load_group_file(resolve_reference("S5", "groups"))
classes = S5.conjugacy_classes()
transpositions = next(c for c in classes if c.cycle_type() == (2, 1, 1, 1))
five_cycles = next(c for c in classes if c.cycle_type() == (5,))

h = hw.validate_parameter(S5, [transpositions, five_cycles], [4, 1])
print(f"parameter: {h}")

tuples = hw.enumerate_tuples(h)
print(f"tuple set size: {len(tuples)} (DFS visited {tuples.visits} prefixes)")

fiber = hw.build_fiber(h, "aut", tuples=tuples)
print(f"fiber size (mod class-preserving automorphisms): {len(fiber)}")
print(f"first fiber point: {fiber.point(0)}")

report = hw.monodromy_group(fiber)
print(f"braid orbit sizes: {report.orbits.orbit_sizes}")
print(f"monodromy group order: {report.group_order}")
print(f"equals 25! : {report.group_order == factorial(25)}")
print(f"quasi-full: {report.quasi_full}")
