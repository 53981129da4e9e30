#!/usr/bin/env python3
"""Split, mixed, inert: class kinds in a double cover, and condition E.

Loading the bundled double cover of S6 (built from SL2(F9) extended by the
field automorphism), each conjugacy class is classified by how its
preimage decomposes: into two cover classes (split), into one class but
two derived-subgroup orbits (mixed), or neither (inert).  For symmetric
groups the kind is determined by the cycle partition: the number of even
parts and whether parts repeat.  C42 is the unique mixed class of S6.

Condition E compares two subgroups of the kernel generated by commutator
pairings <g, z>; it fails exactly for lists with a mixed class and no
inert one, which the pairing computation and the classification rule
confirm independently.
"""

import hurwitz as hw
from hurwitz.covers import classify_class, condition_e, sd_partition_rule
from hurwitz.io import load_cover_file, load_group_file, resolve_reference

S6 = load_group_file(resolve_reference("S6", "groups"))
ext = load_cover_file(resolve_reference("2S6", "covers"), base_group=S6)
print(f"cover: {ext}")

print("\nclass kinds of S6:")
for c in S6.conjugacy_classes():
    if c.representative.is_identity():
        continue
    kind = classify_class(ext, c)
    rule = sd_partition_rule(c.cycle_type())
    mark = "  <- unique mixed class" if kind.kind == "mixed" else ""
    print(f"  {str(c.cycle_type()):18} {kind.kind:10} (partition rule: {rule}){mark}")

c42 = next(c for c in S6.conjugacy_classes() if c.cycle_type() == (4, 2))
c33 = next(c for c in S6.conjugacy_classes() if c.cycle_type() == (3, 3))
c2 = next(c for c in S6.conjugacy_classes() if c.cycle_type() == (2, 1, 1, 1, 1))

print("\ncondition E:")
for name, classes in (("(C42, C33)", [c42, c33]), ("(C42, C21111)", [c42, c2])):
    res = condition_e(ext, classes)
    print(f"  {name}: holds = {res.holds}"
          + (f", witness pairing <{res.witness[1]}, {res.witness[2]}>" if res.witness else ""))
