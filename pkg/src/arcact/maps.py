"""Structural maps between partition families.

All shift maps are the same move in rook-matrix coordinates: slide every
entry one column to the right.  Working through the order isomorphism onto
{1, ..., size} keeps the three ground shapes (A, B, D) on one code path.
"""

from __future__ import annotations

import random

from .core import (
    Arc,
    GroundSet,
    LabeledSetPartition,
    StructuralError,
    UnsupportedGroundError,
    blocks_from_arcs,
    classify,
    crossings,
    ground_a,
    ground_b,
    ground_d,
    unlabeled,
)
from .families import DyckPath
from .groups import GroupSpec


def _shift_target(ground: GroundSet) -> GroundSet:
    if ground.kind == "A":
        return ground_a(ground.n + 1)
    if ground.kind == "D":
        return ground_b(ground.n)
    return ground_d(ground.n + 1)


def _unshift_target(ground: GroundSet) -> GroundSet:
    if ground.kind == "A":
        if ground.n == 0:
            raise UnsupportedGroundError("cannot unshift from A(0)")
        return ground_a(ground.n - 1)
    if ground.kind == "B":
        return ground_d(ground.n)
    if ground.n == 0:
        raise UnsupportedGroundError("cannot unshift from D(0)")
    return ground_b(ground.n - 1)


def _move_arcs(p: LabeledSetPartition, target: GroundSet, delta: int) -> LabeledSetPartition:
    pos = p.ground.position
    labels = {}
    for (i, j), v in p.label_map().items():
        labels[(target.from_position(pos(i)), target.from_position(pos(j) + delta))] = v
    blocks = blocks_from_arcs(target, labels.keys())
    return LabeledSetPartition(target, p.group, blocks, labels)


def shift(p: LabeledSetPartition) -> LabeledSetPartition:
    """Slide the rook matrix one column right: A(n) -> A(n+1), D(n) -> B(n),
    B(n) -> D(n+1).  The image is two-regular and gains one block."""
    return _move_arcs(p, _shift_target(p.ground), +1)


def shift_a(p: LabeledSetPartition) -> LabeledSetPartition:
    if p.ground.kind != "A":
        raise UnsupportedGroundError("shift_a needs an A ground")
    return shift(p)


def shift_d_to_b(p: LabeledSetPartition) -> LabeledSetPartition:
    if p.ground.kind != "D":
        raise UnsupportedGroundError("shift_d_to_b needs a D ground")
    return shift(p)


def shift_b_to_d(p: LabeledSetPartition) -> LabeledSetPartition:
    if p.ground.kind != "B":
        raise UnsupportedGroundError("shift_b_to_d needs a B ground")
    return shift(p)


def unshift(p: LabeledSetPartition) -> LabeledSetPartition:
    """Right inverse of shift, defined on two-regular partitions."""
    if not classify(p).two_regular:
        raise StructuralError("unshift needs a two-regular partition")
    return _move_arcs(p, _unshift_target(p.ground), -1)


# ---------------------------------------------------------------------------
# uncross


def uncross_arcs(arcs, rng: random.Random | None = None) -> frozenset[Arc]:
    """Rewrite crossings (i,k),(j,l) -> (i,l),(j,k) until none remain.

    The fixed point does not depend on the rewrite order; by default the
    lexicographically least crossing pair is taken, and a random generator
    may be supplied to exercise other orders.
    """
    arcs = set(arcs)
    while True:
        found = crossings(arcs)
        if not found:
            return frozenset(arcs)
        (i, k), (j, l) = found[0] if rng is None else rng.choice(found)
        arcs.difference_update([(i, k), (j, l)])
        arcs.update([(i, l), (j, k)])


def uncross(p: LabeledSetPartition, rng: random.Random | None = None) -> LabeledSetPartition:
    """Block-count preserving map onto noncrossing partitions (unlabeled)."""
    _require_unlabeled(p)
    arcs = uncross_arcs(p.arcs(), rng)
    return unlabeled(p.ground, blocks_from_arcs(p.ground, arcs))


def uncross_b(p: LabeledSetPartition, rng: random.Random | None = None) -> LabeledSetPartition:
    """Uncross a B-ground partition, then strip 0 from its block.

    The result is a negation-closed noncrossing partition of the matching
    D ground.
    """
    if p.ground.kind != "B":
        raise UnsupportedGroundError("uncross_b needs a B ground")
    q = uncross(p, rng)
    target = ground_d(p.ground.n)
    blocks = []
    for b in q.blocks:
        trimmed = tuple(x for x in b if x != 0)
        if trimmed:
            blocks.append(trimmed)
    return unlabeled(target, blocks)


def _center_points(p: LabeledSetPartition) -> list[int]:
    """Positive endpoints of the self-mirrored arcs (-i, i), increasing."""
    return sorted(j for i, j in p.arcs() if j == -i)


def uncross_b_inverse(p: LabeledSetPartition) -> LabeledSetPartition:
    """Inverse of uncross_b on negation-closed noncrossing D-ground partitions.

    The arcs (-i, i) are cut and re-wired through 0 (or pairwise), which
    undoes the crossings removed by uncross.
    """
    if p.ground.kind != "D":
        raise UnsupportedGroundError("expected a D-ground partition")
    _require_unlabeled(p)
    ii = _center_points(p)
    new_arcs = {a for a in p.arcs() if a[1] != -a[0]}
    if len(ii) % 2 == 0:
        pairs = [(ii[2 * k], ii[2 * k + 1]) for k in range(len(ii) // 2)]
    else:
        new_arcs.update([(-ii[0], 0), (0, ii[0])])
        pairs = [(ii[2 * k + 1], ii[2 * k + 2]) for k in range((len(ii) - 1) // 2)]
    for a, b in pairs:
        new_arcs.update([(-b, a), (-a, b)])
    target = ground_b(p.ground.n)
    return unlabeled(target, blocks_from_arcs(target, new_arcs))


def uncross_d_inverse(p: LabeledSetPartition) -> LabeledSetPartition:
    """Inverse of uncross on the D-type relaxed-noncrossing family.

    Defined for negation-closed noncrossing D-ground partitions with an even
    number of self-negative blocks.
    """
    if p.ground.kind != "D":
        raise UnsupportedGroundError("expected a D-ground partition")
    _require_unlabeled(p)
    ii = _center_points(p)
    if len(ii) % 2 != 0:
        raise StructuralError("need an even number of self-negative blocks")
    new_arcs = {a for a in p.arcs() if a[1] != -a[0]}
    for k in range(len(ii) // 2):
        a, b = ii[2 * k], ii[2 * k + 1]
        new_arcs.update([(-b, a), (-a, b)])
    return unlabeled(p.ground, blocks_from_arcs(p.ground, new_arcs))


def _require_unlabeled(p: LabeledSetPartition):
    if p.group != GroupSpec((2,)):
        raise StructuralError("this map is defined on unlabeled (Z2) partitions")


# ---------------------------------------------------------------------------
# halve


def halve(p: LabeledSetPartition) -> LabeledSetPartition:
    """Keep one arc from each mirrored pair (the one with i + j < 0) and
    re-index the ground onto {1, ..., size}."""
    if p.ground.kind not in ("B", "D"):
        raise UnsupportedGroundError("halve needs a B or D ground")
    pos = p.ground.position
    target = ground_a(p.ground.size)
    labels = {
        (pos(i), pos(j)): v for (i, j), v in p.label_map().items() if i + j < 0
    }
    blocks = blocks_from_arcs(target, labels.keys())
    return LabeledSetPartition(target, p.group, blocks, labels)


# ---------------------------------------------------------------------------
# Dyck path bijections


def _reindexed_arcs(p: LabeledSetPartition) -> list[Arc]:
    pos = p.ground.position
    return sorted((pos(i), pos(j)) for i, j in p.arcs())


def dyck_from_nonnesting(p: LabeledSetPartition) -> DyckPath:
    """The Dyck path whose valleys sit at (j+i-1, j-i-1) for arcs (i, j)."""
    if not classify(p).nonnesting:
        raise StructuralError("partition is nesting")
    m = p.ground.size
    valleys = sorted((j + i - 1, j - i - 1) for i, j in _reindexed_arcs(p))
    steps = []
    x, y = 0, 0
    for vx, vy in valleys + [(2 * m, 0)]:
        up = ((vx - x) + (vy - y)) // 2
        down = (vx - x) - up
        if up < 0 or down < 0 or (vx - x + vy - y) % 2 != 0:
            raise StructuralError("arc set does not give a lattice path")
        steps.append("U" * up + "D" * down)
        x, y = vx, vy
    return DyckPath("".join(steps))


def nn_from_dyck(path: DyckPath, ground: GroundSet) -> LabeledSetPartition:
    """Inverse of dyck_from_nonnesting over the given ground."""
    if len(path) != 2 * ground.size:
        raise StructuralError("path length does not match the ground")
    arcs = []
    for x, y in path.valleys():
        i, j = (x - y) // 2, (x + y) // 2 + 1
        arcs.append((ground.from_position(i), ground.from_position(j)))
    return unlabeled(ground, blocks_from_arcs(ground, arcs))


def matching_to_dyck(p: LabeledSetPartition) -> DyckPath:
    """Noncrossing perfect matchings of {1..2k} to Dyck paths: smaller block
    elements go up, larger go down."""
    if any(len(b) != 2 for b in p.blocks):
        raise StructuralError("matching_to_dyck needs all blocks of size two")
    if not classify(p).noncrossing:
        raise StructuralError("matching must be noncrossing")
    pos = p.ground.position
    mins = {pos(min(b)) for b in p.blocks}
    steps = "".join(
        "U" if k in mins else "D" for k in range(1, p.ground.size + 1)
    )
    return DyckPath(steps)
