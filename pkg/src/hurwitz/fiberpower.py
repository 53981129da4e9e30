"""Fiber powers of a group over its abelianization, and the row-span test.

The k-fold fiber power of G consists of the k-tuples of elements sharing
one image in G^ab; realized on k disjoint copies of G's domain it is
generated by the diagonal embedding of G together with per-coordinate
embeddings of the derived subgroup, and has order |G| * |G'|^(k-1).

Writing k fiber points side by side as the columns of an n-by-k matrix,
the rows lie in the fiber power; for a pseudosimple base group whose
class-preserving automorphisms all fix the classes, the rows generate the
whole fiber power exactly when the k points are pairwise distinct.  That
equivalence is the Goursat-style distinctness criterion this module
implements as an exact subgroup-order test.
"""

from __future__ import annotations

from .errors import InputError, UnsupportedConfigurationError
from .perms import PermGroup, Permutation
from .structure import is_ambiguous, is_pseudosimple


class FiberPowerGroup:
    """G x_{G^ab} ... x_{G^ab} G on k disjoint copies of G's domain."""

    def __init__(self, base, k):
        if k < 1:
            raise InputError("fiber power exponent must be at least 1")
        if base.center().order() > 1:
            raise InputError("fiber powers are built for centerless base groups")
        self.base = base
        self.k = k
        d = base.degree
        gens = []
        for g in base.generators:
            gens.append(self.embed_diagonal(g))
        derived = base.derived_subgroup()
        for i in range(k):
            for g in derived.generators:
                gens.append(self.embed_coordinate(g, i))
        self.realized = PermGroup(d * k, gens, name=f"fiber power k={k}")
        expected = base.order() * derived.order() ** (k - 1)
        if self.realized.order() != expected:
            raise InputError(
                f"fiber power order {self.realized.order()} differs from "
                f"{expected}; base group data inconsistent"
            )
        self.order = expected

    def embed_diagonal(self, g):
        d = self.base.degree
        images = []
        for i in range(self.k):
            images.extend(i * d + x for x in g.images)
        return Permutation(images)

    def embed_coordinate(self, g, i):
        d = self.base.degree
        images = list(range(self.k * d))
        for x, y in enumerate(g.images):
            images[i * d + x] = i * d + y
        return Permutation(images)

    def embed_tuple(self, elements):
        """One fiber-power element from k base elements with equal abelianization."""
        if len(elements) != self.k:
            raise InputError(f"expected {self.k} coordinates")
        ab = self.base.abelianization()
        labels = {ab.label(g) for g in elements}
        if len(labels) != 1:
            raise InputError("coordinates differ in the abelianization")
        d = self.base.degree
        images = []
        for i, g in enumerate(elements):
            images.extend(i * d + x for x in g.images)
        return Permutation(images)

    def coordinate_projection(self, perm, i):
        d = self.base.degree
        return Permutation(perm.images[i * d + x] - i * d for x in range(d))

    def __repr__(self):
        return f"FiberPowerGroup({self.base!r}, k={self.k}, order={self.order})"


def fiber_power_group(base, k):
    return FiberPowerGroup(base, k)


def _classes_safe_for_row_span(h):
    """The distinctness criterion needs unambiguous classes, unless every
    automorphism over the abelianization already fixes each class (then the
    step of the argument that uses unambiguity is vacuous; symmetric groups
    other than S6 are the standard case, having inner automorphisms only).
    """
    if not any(is_ambiguous(h.group, c) for c in h.classes):
        return
    from .structure import automorphism_group

    aut = automorphism_group(h.group)
    ab = h.group.abelianization()
    table = h.group.table()
    all_classes = h.group.conjugacy_classes()
    rep_labels = [ab.label(c.representative) for c in all_classes]
    for i, a in enumerate(aut.maps):
        over_ab = all(
            rep_labels[ci] == rep_labels[aut.class_action[i][ci]]
            for ci in range(len(all_classes))
        )
        if over_ab and any(
            aut.class_action[i][ci] != ci for ci in range(len(all_classes))
        ):
            raise UnsupportedConfigurationError(
                "ambiguous class present and some automorphism over the "
                "abelianization moves a class; the distinctness criterion "
                "does not apply"
            )


def row_span_check(h, tuples):
    """Whether the rows of the tuple matrix generate the full fiber power.

    `tuples` is a list of k Nielsen tuples (lifted fiber representatives).
    Preconditions: the group is pseudosimple, and either all classes are
    unambiguous or every automorphism over the abelianization fixes each
    class (checked; otherwise UnsupportedConfigurationError).
    """
    k = len(tuples)
    if k == 0:
        raise InputError("at least one tuple is required")
    verdict = is_pseudosimple(h.group)
    if not verdict.pseudosimple:
        raise UnsupportedConfigurationError(
            f"group not pseudosimple: {verdict.reason}"
        )
    _classes_safe_for_row_span(h)
    n = h.n
    for t in tuples:
        if len(t) != n:
            raise InputError("tuple length does not match the parameter")
    power = FiberPowerGroup(h.group, k)
    rows = []
    for j in range(n):
        rows.append(power.embed_tuple([t[j] for t in tuples]))
    spanned = PermGroup(power.realized.degree, rows)
    return spanned.order() == power.order
