#!/usr/bin/env python3
"""Lifting invariants separate braid orbits: the classical spin example.

Tuples of six 3-cycles in A5 with product one fall into two braid orbits.
The invariant that separates them lives in the kernel of SL2(F5) -> A5:
lift each entry to its designated preimage and multiply; the resulting
sign is constant along every braid move.  At this multiplicity the orbit
count already equals the number of realized invariants, the bijectivity
that holds for all large multiplicities.
"""

import hurwitz as hw
from hurwitz.covers import LiftData
from hurwitz.io import load_cover_file, load_group_file, resolve_reference
from hurwitz.monodromy import braid_orbits, conway_parker_report, fiber_generator_arrays

A5 = load_group_file(resolve_reference("A5", "groups"))
ext = load_cover_file(resolve_reference("SL25", "covers"), base_group=A5)
c3 = next(c for c in A5.conjugacy_classes() if c.cycle_type() == (3, 1, 1))

for n in (4, 5, 6):
    h = hw.validate_parameter(A5, [c3], [n])
    tuples = hw.enumerate_tuples(h)
    fiber = hw.build_fiber(h, "inn", tuples=tuples)
    lift = LiftData(hw.reduce_cover(ext, h.classes), h)
    words, arrays = fiber_generator_arrays(fiber)
    orbits = braid_orbits(fiber, arrays, lift_data=lift)
    rec = conway_parker_report(orbits)
    print(
        f"n={n}: {len(tuples):>7} tuples, fiber {len(fiber):>5}, "
        f"orbits {orbits.orbit_sizes} with invariants {orbits.labels}, "
        f"orbits <-> invariants bijective: {rec.bijective}"
    )

print()
t = hw.enumerate_tuples(hw.validate_parameter(A5, [c3], [4])).tuple_at(0)
label = hw.lifting_invariant(ext, hw.validate_parameter(A5, [c3], [4]), t)
print(f"a tuple: {t}")
print(f"its invariant: index {label.index} (kernel element {label.value})")
moved = hw.apply_sigma(t, 2)
label2 = hw.lifting_invariant(ext, hw.validate_parameter(A5, [c3], [4]), moved)
print(f"after a braid move: index {label2.index} (unchanged)")
