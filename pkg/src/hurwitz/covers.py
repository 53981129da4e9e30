"""Central extensions, commutator pairings, class kinds, lifting invariants.

A stem extension of G is a central extension pi: G~ -> G whose kernel lies
in the derived subgroup of G~; one of maximal order is a Schur cover, and
its kernel realizes the Schur multiplier.  Covers are supplied as data
(permutation generators plus their images) and fully verified on load;
this package never computes multipliers from scratch.

For commuting x, y in G the commutator of arbitrary lifts is a
well-defined kernel element <x, y>; collecting <g, z> over g in a class C_i
and z centralizing g (optionally restricted to the derived subgroup) spans
the obstruction subgroups whose comparison is the homological condition
("condition E") appearing in the full-monodromy analysis.  Quotienting the
cover by the full obstruction subgroup of a class list produces the
reduced cover, in which every listed class splits completely, and which
hosts the lifting invariant of Nielsen tuples: multiply the designated
lifts of the entries; the resulting kernel element is constant on braid
orbits and on conjugation orbits.

Cover-side computations run on dense code tables; quotients are realized
as permutation groups on the cosets of the factored central subgroup, with
their tables induced arithmetically from the parent's.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    InputError,
    InternalCheckError,
    UnsupportedConfigurationError,
)
from .perms import PermGroup, Permutation
from .structure import derived_orbit_count, is_ambiguous, is_pseudosimple


def _closure_codes(mul, identity, gens):
    seen = {int(identity)}
    frontier = [int(identity)]
    gens = [int(g) for g in gens]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = int(mul[x, g])
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen


def _derived_gen_codes(mul, inv, identity, group_gens):
    """Generator codes of the derived subgroup: commutators plus normal closure."""
    group_gens = [int(g) for g in group_gens]
    comms = set()
    for a in group_gens:
        for b in group_gens:
            c = int(mul[mul[inv[a], inv[b]], mul[a, b]])
            if c != identity:
                comms.add(c)
    gens = sorted(comms)
    subgroup = _closure_codes(mul, identity, gens)
    frontier = list(gens)
    while frontier:
        new = []
        for x in frontier:
            for g in group_gens:
                y = int(mul[mul[inv[g], x], g])
                if y not in subgroup:
                    gens.append(y)
                    subgroup = _closure_codes(mul, identity, gens)
                    new.append(y)
        frontier = new
    return gens, subgroup


def _conj_partition(mul, inv, codes, acting_gens):
    """Orbits of conjugation by the given generators on a code subset."""
    remaining = set(int(c) for c in codes)
    acting = [int(g) for g in acting_gens]
    orbits = []
    while remaining:
        start = min(remaining)
        orbit = {start}
        frontier = [start]
        while frontier:
            new = []
            for x in frontier:
                for g in acting:
                    y = int(mul[mul[inv[g], x], g])
                    if y not in orbit:
                        orbit.add(y)
                        new.append(y)
            frontier = new
        if not orbit <= remaining:
            raise InternalCheckError("conjugation left the given code subset")
        remaining -= orbit
        orbits.append(sorted(orbit))
    return orbits


@dataclass(frozen=True)
class KernelSubgroup:
    """A subgroup of a cover kernel, as sorted element codes plus Permutations."""

    codes: tuple
    perms: tuple

    @property
    def order(self):
        return len(self.codes)

    def __contains__(self, code):
        return int(code) in set(self.codes)

    def __repr__(self):
        return f"KernelSubgroup(order={len(self.codes)})"


class CentralExtension:
    """A verified central extension pi: cover -> base with central kernel.

    `mul`, `inv`, `order_of` are dense tables over cover element codes;
    `proj` sends cover codes to base codes; `element(code)` materializes a
    cover element as a Permutation.  Verification failures raise InputError
    naming the broken invariant.
    """

    def __init__(self, cover_group, base_group, mul, inv, identity, order_of, proj, element_fn, name=None):
        self.cover_group = cover_group
        self.base_group = base_group
        self.mul = mul
        self.inv = inv
        self.identity = identity
        self.order_of = order_of
        self.proj = proj
        self.size = len(proj)
        self._element_fn = element_fn
        self.name = name
        base_identity = base_group.table().identity
        self.kernel_codes = tuple(
            int(c) for c in np.nonzero(proj == base_identity)[0]
        )
        self._lift = None
        self._derived = None

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_generators(cls, cover_gens, image_gens, base_group, name=None, cap=None):
        """Build and verify an extension from matched generator lists."""
        if len(cover_gens) != len(image_gens):
            raise InputError("cover and image generator lists have different lengths")
        degree = cover_gens[0].degree if cover_gens else 1
        cover = PermGroup(degree, cover_gens, name=name)
        ct = cover.table()
        bt = base_group.table()
        # identity generators on the cover side are dropped by PermGroup; keep
        # the projection pairs aligned on the originals
        pairs = []
        for cg, ig in zip(cover_gens, image_gens):
            if ig.degree != base_group.degree:
                raise InputError("image generator degree does not match the base group")
            if not cg.is_identity():
                pairs.append((ct.code(cg), bt.code(ig)))
            elif not ig.is_identity():
                raise InputError("projection is not a homomorphism")
        proj = np.full(ct.size, -1, dtype=np.int64)
        proj[ct.identity] = bt.identity
        frontier = [ct.identity]
        while frontier:
            new = []
            for x in frontier:
                fx = int(proj[x])
                for g, fg in pairs:
                    y = int(ct.mul[x, g])
                    fy = int(bt.mul[fx, fg])
                    if proj[y] == -1:
                        proj[y] = fy
                        new.append(y)
                    elif proj[y] != fy:
                        raise InputError("projection is not a homomorphism")
            frontier = new
        ext = cls(
            cover,
            base_group,
            ct.mul,
            ct.inv,
            ct.identity,
            ct.order_of,
            proj,
            ct.perm,
            name=name,
        )
        ext._gen_code_cache = {g.images: ct.code(g) for g in cover.generators}
        ext.verify()
        return ext

    def verify(self):
        if len(set(int(p) for p in self.proj)) != self.base_group.order():
            raise InputError("projection not surjective")
        kernel = set(self.kernel_codes)
        gens = self._gen_codes()
        for z in kernel:
            for g in gens:
                if int(self.mul[z, g]) != int(self.mul[g, z]):
                    raise InputError("kernel not central")
        _, derived = self._derived_data()
        if not kernel <= derived:
            raise InputError("stem condition violated: kernel not inside derived subgroup")

    def _gen_codes(self):
        return [self._code_of_perm(g) for g in self.cover_group.generators]

    def _code_of_perm(self, perm):
        # cover elements are materialized through element_fn; generator codes
        # are recovered by scanning once and cached
        if not hasattr(self, "_gen_code_cache"):
            self._gen_code_cache = {}
        key = perm.images
        if key not in self._gen_code_cache:
            for c in range(self.size):
                if self._element_fn(c).images == key:
                    self._gen_code_cache[key] = c
                    break
            else:
                raise InputError("element does not belong to the cover")
        return self._gen_code_cache[key]

    def _derived_data(self):
        if self._derived is None:
            self._derived = _derived_gen_codes(
                self.mul, self.inv, self.identity, self._gen_codes()
            )
        return self._derived

    # -- basic queries ---------------------------------------------------------

    def element(self, code):
        return self._element_fn(int(code))

    def kernel_order(self):
        return len(self.kernel_codes)

    def kernel_perms(self):
        return tuple(self.element(c) for c in self.kernel_codes)

    def kernel_group(self):
        """The kernel as a PermGroup (abelian: it is central in the cover)."""
        return PermGroup(
            self.cover_group.degree, list(self.kernel_perms()), name="kernel"
        )

    def kernel_subgroup(self, codes):
        codes = tuple(sorted(int(c) for c in set(codes)))
        return KernelSubgroup(codes, tuple(self.element(c) for c in codes))

    def lift_code(self, base_code):
        """Code of the lexicographically least preimage of a base element."""
        if self._lift is None:
            lift = np.full(self.base_group.order(), -1, dtype=np.int64)
            for c in range(self.size - 1, -1, -1):
                lift[int(self.proj[c])] = c
            self._lift = lift
        return int(self._lift[int(base_code)])

    def preimage_codes(self, base_codes):
        mask = np.isin(self.proj, np.asarray(list(base_codes), dtype=np.int64))
        return [int(c) for c in np.nonzero(mask)[0]]

    def __repr__(self):
        label = self.name or f"|cover|={self.size}"
        return (
            f"CentralExtension({label} -> {self.base_group!r},"
            f" |Z|={len(self.kernel_codes)})"
        )


def load_extension(cover_gens, image_gens, base_group, name=None):
    """Verified extension from generator data; see CentralExtension."""
    return CentralExtension.from_generators(cover_gens, image_gens, base_group, name=name)


# ---------------------------------------------------------------------------
# pairings and obstruction subgroups


def commutator_pairing(ext, x, y):
    """<x, y>: the kernel element [x~, y~] for arbitrary lifts of commuting x, y."""
    bt = ext.base_group.table()
    cx, cy = bt.code(x), bt.code(y)
    if int(bt.mul[cx, cy]) != int(bt.mul[cy, cx]):
        raise InputError("commutator pairing requires commuting elements")
    lx, ly = ext.lift_code(cx), ext.lift_code(cy)
    comm = int(ext.mul[ext.mul[ext.inv[lx], ext.inv[ly]], ext.mul[lx, ly]])
    if comm not in set(ext.kernel_codes):
        raise InternalCheckError("commutator of lifts landed outside the kernel")
    return ext.element(comm)


def _pairing_codes(ext, class_rep_code, derived_only):
    """Kernel codes <g, z> for one class representative over its centralizer."""
    bt = ext.base_group.table()
    g = int(class_rep_code)
    col = bt.mul[:, g]
    row = bt.mul[g, :]
    zs = np.nonzero(col == row)[0]
    if derived_only:
        derived = ext.base_group.derived_subgroup()
        dcodes = {bt.code(d) for d in derived.elements()}
        zs = [z for z in zs if int(z) in dcodes]
    lg = ext.lift_code(g)
    out = set()
    for z in zs:
        lz = ext.lift_code(int(z))
        comm = int(ext.mul[ext.mul[ext.inv[lg], ext.inv[lz]], ext.mul[lg, lz]])
        out.add(comm)
    return out


def obstruction_subgroups(ext, classes):
    """(full, derived-restricted) pairing subgroups of the kernel for a class list.

    The full subgroup collects <g, z> over one representative per class and
    all centralizing z; the primed variant restricts z to the derived
    subgroup.  Both are returned as KernelSubgroups; the choice of class
    representative does not matter (a tested property).
    """
    bt = ext.base_group.table()
    full = set()
    primed = set()
    for c in classes:
        rep = bt.code(c.representative)
        full |= _pairing_codes(ext, rep, derived_only=False)
        primed |= _pairing_codes(ext, rep, derived_only=True)
    full_closed = _closure_codes(ext.mul, ext.identity, full)
    primed_closed = _closure_codes(ext.mul, ext.identity, primed)
    return ext.kernel_subgroup(full_closed), ext.kernel_subgroup(primed_closed)


# ---------------------------------------------------------------------------
# reduced covers


def reduce_cover(ext, classes):
    """Quotient of the cover by the full obstruction subgroup of the classes.

    Realized as a permutation group on the cosets of the factored central
    subgroup; afterwards every listed class splits completely, which is
    verified (and an InternalCheckError if not).
    """
    full, _ = obstruction_subgroups(ext, classes)
    if full.order == 1:
        return ext
    reduced = _central_quotient(ext, full.codes)
    # post-verification: every listed class splits fully in the reduced cover
    expected = reduced.kernel_order()
    for c in classes:
        kind_counts = _preimage_counts(reduced, c)
        if kind_counts[0] != expected:
            raise InternalCheckError(
                "reduced cover failed to split class "
                f"{c.representative}: {kind_counts[0]} classes above it"
            )
    return reduced


def _central_quotient(ext, subgroup_codes):
    """Quotient extension cover/H for a central subgroup H given by codes."""
    hset = sorted(set(int(c) for c in subgroup_codes))
    size = ext.size
    coset_of = np.full(size, -1, dtype=np.int64)
    reps = []
    for c in range(size):
        if coset_of[c] != -1:
            continue
        cid = len(reps)
        reps.append(c)
        for h in hset:
            coset_of[int(ext.mul[c, h])] = cid
    reps = np.array(reps, dtype=np.int64)
    q_size = len(reps)
    q_mul = coset_of[ext.mul[np.ix_(reps, reps)]]
    q_identity = int(coset_of[ext.identity])
    q_inv = np.empty(q_size, dtype=np.int64)
    for a in range(q_size):
        q_inv[a] = coset_of[ext.inv[reps[a]]]
    q_order = np.empty(q_size, dtype=np.int64)
    for a in range(q_size):
        n, acc = 1, a
        while acc != q_identity:
            acc = int(q_mul[acc, a])
            n += 1
        q_order[a] = n
    # cosets of H are permuted by right multiplication; this regular-style
    # action is faithful for the quotient group
    def coset_perm(code):
        return Permutation(int(coset_of[ext.mul[r, reps[code]]]) for r in reps)

    gen_codes = [int(coset_of[ext._code_of_perm(g)]) for g in ext.cover_group.generators]
    gen_perms = [coset_perm(c) for c in gen_codes]
    q_group = PermGroup(q_size, gen_perms, name=f"{ext.name or 'cover'}/H")
    q_proj = np.empty(q_size, dtype=np.int64)
    for a in range(q_size):
        q_proj[a] = ext.proj[reps[a]]
    quotient = CentralExtension(
        q_group,
        ext.base_group,
        q_mul,
        q_inv,
        q_identity,
        q_order,
        q_proj,
        coset_perm,
        name=f"{ext.name or 'cover'} reduced",
    )
    quotient._gen_code_cache = {
        p.images: c for p, c in zip(gen_perms, gen_codes)
    }
    quotient.verify()
    return quotient


# ---------------------------------------------------------------------------
# class kinds


@dataclass(frozen=True)
class ClassKind:
    kind: str  # split | mixed | inert | ambiguous
    lifted_class_count: int | None = None
    derived_orbit_count: int | None = None


def _preimage_counts(ext, conj_class):
    """(cover classes, cover-derived orbits) above a base class."""
    bt = ext.base_group.table()
    class_codes = [bt.code(g) for g in conj_class.elements]
    pre = ext.preimage_codes(class_codes)
    gen_codes = ext._gen_codes()
    classes = _conj_partition(ext.mul, ext.inv, pre, gen_codes)
    derived_gens, _ = ext._derived_data()
    derived_orbits = _conj_partition(ext.mul, ext.inv, pre, derived_gens)
    return len(classes), len(derived_orbits)


def check_split_pp(ext):
    """Verify |G^ab| = |Z| = p prime and that G -> G^ab splits; return p."""
    base = ext.base_group
    ab = base.abelianization()
    p = ab.size
    if p < 2 or any(p % d == 0 and d not in (1, p) for d in range(2, p)):
        raise UnsupportedConfigurationError(
            f"base abelianization has order {p}, not a prime"
        )
    if ext.kernel_order() != p:
        raise UnsupportedConfigurationError(
            f"kernel order {ext.kernel_order()} differs from |G^ab| = {p}"
        )
    if not _surjection_splits(base):
        raise UnsupportedConfigurationError(
            "the map onto the abelianization does not split"
        )
    return p


def _surjection_splits(base):
    """True when G -> G^ab has a section (G^ab cyclic of order k here)."""
    ab = base.abelianization()
    k = ab.size
    if k == 1:
        return True
    if len(ab.invariant_factors()) > 1:
        return False
    for g in base.elements():
        if g.order() == k and ab.element_order(ab.label(g)) == k:
            return True
    return False


def classify_class(ext, conj_class):
    """Split / mixed / inert / ambiguous for a class of a split-p-p base group.

    Ambiguous classes are reported as such with no cover analysis.  For the
    rest: split means the preimage is p cover classes; mixed means one
    cover class but p derived-subgroup orbits; inert means one of each.
    """
    p = check_split_pp(ext)
    base = ext.base_group
    if is_ambiguous(base, conj_class):
        return ClassKind(kind="ambiguous")
    s, t = _preimage_counts(ext, conj_class)
    if s == p:
        kind = "split"
    elif t == p:
        kind = "mixed"
    else:
        kind = "inert"
    return ClassKind(kind=kind, lifted_class_count=s, derived_orbit_count=t)


def sd_partition_rule(cycle_type):
    """Class kind of a symmetric-group class from its cycle partition.

    Reads the number of even parts e and whether all parts are distinct:
    all distinct with e = 0 is ambiguous, with e even is mixed, with e odd
    is split; repeated parts give split when e = 0 and inert otherwise.
    """
    parts = tuple(cycle_type)
    e = sum(1 for part in parts if part % 2 == 0)
    distinct = len(set(parts)) == len(parts)
    if distinct:
        if e == 0:
            return "ambiguous"
        return "mixed" if e % 2 == 0 else "split"
    return "split" if e == 0 else "inert"


# ---------------------------------------------------------------------------
# condition E


@dataclass(frozen=True)
class ConditionEResult:
    holds: bool
    full_order: int
    primed_order: int
    witness: tuple | None = None  # (class index, g, z, pairing value)

    def __bool__(self):
        return self.holds


def condition_e(ext, classes):
    """Whether the full and derived-restricted obstruction subgroups agree.

    Preconditions (checked): all classes unambiguous; the base group
    pseudosimple with cyclic abelianization and split projection onto it.
    On failure a witness pairing <g, z> lying outside the primed subgroup
    is returned.
    """
    base = ext.base_group
    for i, c in enumerate(classes):
        if is_ambiguous(base, c):
            raise UnsupportedConfigurationError(
                f"class #{i} ({c.representative}) is ambiguous"
            )
    verdict = is_pseudosimple(base)
    if not verdict.pseudosimple:
        raise UnsupportedConfigurationError(
            f"base group not pseudosimple: {verdict.reason}"
        )
    ab = base.abelianization()
    if len(ab.invariant_factors()) > 1:
        raise UnsupportedConfigurationError("abelianization is not cyclic")
    if not _surjection_splits(base):
        raise UnsupportedConfigurationError(
            "the map onto the abelianization does not split"
        )
    full, primed = obstruction_subgroups(ext, classes)
    if full.codes == primed.codes:
        return ConditionEResult(True, full.order, primed.order)
    witness = _find_witness(ext, classes, set(primed.codes))
    return ConditionEResult(False, full.order, primed.order, witness)


def _find_witness(ext, classes, primed_codes):
    bt = ext.base_group.table()
    for i, c in enumerate(classes):
        g = bt.code(c.representative)
        col = bt.mul[:, g]
        row = bt.mul[g, :]
        lg = ext.lift_code(g)
        for z in np.nonzero(col == row)[0]:
            lz = ext.lift_code(int(z))
            comm = int(ext.mul[ext.mul[ext.inv[lg], ext.inv[lz]], ext.mul[lg, lz]])
            if comm not in primed_codes:
                return (i, bt.perm(g), bt.perm(int(z)), ext.element(comm))
    raise InternalCheckError("subgroups differ but no witness pairing found")


def condition_e_by_kinds(kinds):
    """Classification route: fails exactly when no inert and at least one mixed kind."""
    names = [k.kind for k in kinds]
    if "ambiguous" in names:
        raise UnsupportedConfigurationError("ambiguous class in kind list")
    return not ("inert" not in names and "mixed" in names)


# ---------------------------------------------------------------------------
# lifting invariants


@dataclass(frozen=True)
class InvariantLabel:
    """A lifting-invariant value: a kernel element of the reduced cover."""

    value: Permutation
    index: int  # position of the value in the sorted kernel
    chosen_lifts: tuple  # per class: the designated lift of its representative

    def __repr__(self):
        return f"InvariantLabel({self.index})"


class LiftData:
    """Designated lifts for a parameter in a reduced cover.

    The chosen lifted class of C_i is the cover class containing the
    lexicographically least preimage of the stored representative.  Every
    element of C_i has exactly one preimage in it when the cover is reduced
    for the classes; a repeated or missing preimage raises InputError
    ("extension not reduced").
    """

    def __init__(self, ext, h):
        bt = h.group.table()
        if ext.base_group is not h.group:
            raise InputError("extension base group differs from the parameter's group")
        self.ext = ext
        self.h = h
        gen_codes = ext._gen_codes()
        lift_of = np.full(bt.size, -1, dtype=np.int64)
        chosen = []
        for c in h.classes:
            rep_code = bt.code(c.representative)
            least = ext.lift_code(rep_code)
            orbit = None
            for part in _conj_partition(
                ext.mul,
                ext.inv,
                ext.preimage_codes([bt.code(g) for g in c.elements]),
                gen_codes,
            ):
                if least in part:
                    orbit = part
                    break
            if orbit is None:
                raise InternalCheckError("least preimage missing from cover classes")
            chosen.append(ext.element(least))
            seen_base = set()
            for xc in orbit:
                b = int(ext.proj[xc])
                if b in seen_base:
                    raise InputError(
                        "extension not reduced: repeated preimage in chosen lift class"
                    )
                seen_base.add(b)
                if lift_of[b] != -1 and lift_of[b] != xc:
                    raise InputError(
                        "extension not reduced: conflicting lifts across classes"
                    )
                lift_of[b] = xc
            if len(seen_base) != c.size:
                raise InputError(
                    "extension not reduced: chosen lift class misses elements"
                )
        self.lift_of = lift_of
        self.chosen = tuple(chosen)
        self.kernel_sorted = sorted(ext.kernel_codes)
        self._kernel_index = {c: i for i, c in enumerate(self.kernel_sorted)}

    def label_codes_for_rows(self, rows):
        """Kernel label index per row of an (N, n) base-code array."""
        lifted = self.lift_of[rows]
        if (lifted < 0).any():
            raise InputError("tuple entry outside the parameter's classes")
        acc = np.full(len(rows), self.ext.identity, dtype=np.int64)
        for j in range(rows.shape[1]):
            acc = self.ext.mul[acc, lifted[:, j]].astype(np.int64)
        out = np.empty(len(rows), dtype=np.int64)
        for i, code in enumerate(acc):
            idx = self._kernel_index.get(int(code))
            if idx is None:
                raise InternalCheckError("lift product landed outside the kernel")
            out[i] = idx
        return out

    def label_of_tuple(self, t):
        bt = self.h.group.table()
        row = np.array([[bt.code(g) for g in t]], dtype=np.int64)
        idx = int(self.label_codes_for_rows(row)[0])
        return InvariantLabel(
            value=self.ext.element(self.kernel_sorted[idx]),
            index=idx,
            chosen_lifts=self.chosen,
        )


def lifting_invariant(ext_reduced, h, t):
    """The lifting invariant of one Nielsen tuple in a reduced cover."""
    return LiftData(ext_reduced, h).label_of_tuple(t)


# ---------------------------------------------------------------------------
# outer action on labels


@dataclass
class LabelOrbitReport:
    realized: tuple  # sorted realized label indices
    label_orbits: tuple  # tuple of tuples: orbits of realized labels
    stabilizer_orders: dict  # label index -> |Out(G,C)_label|
    maps: tuple  # per automorphism: dict label -> label


def out_action_on_labels(ext_reduced, h, aut, fiber, labels=None):
    """Action of Aut(G, C) on realized lifting labels, with stabilizer sizes.

    Each automorphism is applied entrywise to every fiber representative;
    the induced label map must be single-valued (anything else raises
    InternalCheckError).  Returns label orbits and, per label, the order of
    its stabilizer in the outer group.
    """
    lift = LiftData(ext_reduced, h)
    base_labels = labels
    if base_labels is None:
        base_labels = lift.label_codes_for_rows(fiber.rows)
    realized = sorted(set(int(x) for x in base_labels))
    maps = []
    for a in aut.maps:
        moved = a.element_map[fiber.rows].astype(np.int64)
        new_labels = lift.label_codes_for_rows(moved)
        label_map = {}
        for old, new in zip(base_labels, new_labels):
            old, new = int(old), int(new)
            if label_map.setdefault(old, new) != new:
                raise InternalCheckError(
                    "automorphism induces an ill-defined label map"
                )
        if a.inner and any(label_map[l] != l for l in realized):
            raise InternalCheckError("inner automorphism moved a lifting label")
        maps.append(label_map)
    # orbits of realized labels under all maps
    remaining = set(realized)
    orbits = []
    while remaining:
        start = min(remaining)
        orbit = {start}
        frontier = [start]
        while frontier:
            new = []
            for x in frontier:
                for m in maps:
                    y = m[x]
                    if y not in orbit:
                        orbit.add(y)
                        new.append(y)
            frontier = new
        remaining -= orbit
        orbits.append(tuple(sorted(orbit)))
    stab = {
        l: sum(1 for m in maps if m[l] == l) // aut.inner_count for l in realized
    }
    return LabelOrbitReport(
        realized=tuple(realized),
        label_orbits=tuple(orbits),
        stabilizer_orders=stab,
        maps=tuple(maps),
    )
