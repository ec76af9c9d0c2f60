"""Exhaustive, deterministic generators for every partition family.

Families are named by short codes:

* A-ground: PI, NC, L, NN and the two-group variants PI_AB, NC_AB
* B-ground: P_B, NC_TILDE_B, L_B and *_AB variants
* D-ground: P_D, NC_TILDE_D, L_D, NN_B and *_AB variants

The two-group ("AB") families put the second group's labels on cover arcs
and the first group's labels on all other arcs.  Streams are duplicate-free
and sorted by the row-major reading of the rook matrix.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    GroundSet,
    LabeledSetPartition,
    arcs_of,
    blocks_from_arcs,
    canonical_blocks,
    crossings,
    ground_a,
    ground_b,
    ground_d,
    is_noncrossing,
    is_nonnesting,
    rook_sort_key,
)
from .groups import DirectSum, GroupSpec, neg

A_FAMILIES = {"PI", "NC", "L", "NN", "PI_AB", "NC_AB", "L_AB"}
B_FAMILIES = {"P_B", "NC_TILDE_B", "L_B", "P_B_AB", "NC_TILDE_B_AB", "L_B_AB"}
D_FAMILIES = {"P_D", "NC_TILDE_D", "L_D", "NN_B", "P_D_AB", "NC_TILDE_D_AB", "L_D_AB"}
UNLABELED_FAMILIES = {"NN", "NN_B"}
ALL_FAMILIES = A_FAMILIES | B_FAMILIES | D_FAMILIES


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    groups: tuple[GroupSpec, ...] = ()

    def __post_init__(self):
        if self.family not in ALL_FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 0:
            raise ValueError("family parameter must be nonnegative")
        need = 0 if self.family in UNLABELED_FAMILIES else (2 if self.is_ab else 1)
        if len(self.groups) != need:
            raise ValueError(
                f"family {self.family} needs {need} group(s), got {len(self.groups)}"
            )

    @property
    def is_ab(self) -> bool:
        return self.family.endswith("_AB")

    @property
    def ground(self) -> GroundSet:
        if self.family in A_FAMILIES:
            return ground_a(self.n)
        if self.family in B_FAMILIES:
            return ground_b(self.n)
        return ground_d(self.n)

    @property
    def label_group(self) -> GroupSpec:
        if self.family in UNLABELED_FAMILIES:
            return GroupSpec((2,))
        if self.is_ab:
            return DirectSum(self.groups[0], self.groups[1]).spec
        return self.groups[0]


# ---------------------------------------------------------------------------
# block structures


def set_partitions(elements):
    """All partitions of an ordered element list (restricted growth order)."""
    elements = list(elements)
    if not elements:
        yield ()
        return

    def rec(k, blocks):
        if k == len(elements):
            yield tuple(tuple(b) for b in blocks)
            return
        x = elements[k]
        for b in blocks:
            b.append(x)
            yield from rec(k + 1, blocks)
            b.pop()
        blocks.append([x])
        yield from rec(k + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


def _subsets(values):
    values = list(values)
    for r in range(len(values) + 1):
        yield from itertools.combinations(values, r)


def _sign_lifts(block):
    """Lift a block of positive values to a mirrored pair of signed blocks.

    The element of smallest absolute value keeps its sign, which picks one
    block out of each pair {B, -B}.
    """
    block = sorted(block)
    head, rest = block[0], block[1:]
    for signs in itertools.product((1, -1), repeat=len(rest)):
        b = tuple(sorted([head] + [s * x for s, x in zip(signs, rest)]))
        yield b, tuple(sorted(-x for x in b))


def symmetric_partitions(n, has_zero, allow_self_negative):
    """Partitions of [-n..n] (optionally with 0) whose block set is negation
    closed.

    ``allow_self_negative`` admits nonzero blocks B with B = -B; switching it
    off yields exactly the block structures in which every block pair is
    {B, -B} with B != -B, apart from the zero block when present.
    """
    values = list(range(1, n + 1))

    def self_blocks(pool):
        # families of disjoint symmetric nonzero blocks, as tuples of supports
        pool = list(pool)
        if not allow_self_negative:
            yield (), tuple(pool)
            return
        for supports in set_partitions(pool):
            for chosen in _subsets(range(len(supports))):
                picked = [supports[k] for k in chosen]
                rest = [x for k, s in enumerate(supports) if k not in chosen for x in s]
                yield tuple(picked), tuple(sorted(rest))

    zero_supports = _subsets(values) if has_zero else [None]
    for zero_support in zero_supports:
        if zero_support is None:
            remaining0 = values
            zero_block = None
        else:
            remaining0 = [x for x in values if x not in zero_support]
            zero_block = tuple(
                sorted([-x for x in zero_support] + [0] + list(zero_support))
            )
        for picked, pool in self_blocks(remaining0):
            fixed = [] if zero_block is None else [zero_block]
            fixed += [
                tuple(sorted([-x for x in s] + list(s))) for s in picked
            ]
            for parts in set_partitions(pool):
                lift_choices = [list(_sign_lifts(part)) for part in parts]
                for lifted in itertools.product(*lift_choices):
                    blocks = list(fixed)
                    for b, nb in lifted:
                        blocks.append(b)
                        blocks.append(nb)
                    yield canonical_blocks(blocks)


def _linear_blocks(ground: GroundSet):
    """Block structures whose arcs are all covers (consecutive-integer blocks)."""
    elements = ground.elements()
    if ground.kind == "A":
        slots = [(i, i + 1) for i in elements if i + 1 in elements]
    else:
        # cover slots come in mirrored pairs; enumerate the nonnegative side
        top = [(i, i + 1) for i in range(0 if ground.kind == "B" else 1, ground.n)]
        slots = top
    for chosen in _subsets(slots):
        arcs = set()
        for i, j in chosen:
            arcs.add((i, j))
            if ground.kind != "A":
                arcs.add((-j, -i))
        yield tuple(sorted(arcs))


def _no_self_mirror_arcs(blocks) -> bool:
    return all(j != -i for i, j in arcs_of(blocks))


@lru_cache(maxsize=None)
def family_shapes(family: str, n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Unlabeled block structures of a family, deterministically ordered."""
    base = family[:-3] if family.endswith("_AB") else family
    if base in ("PI", "NC", "NN"):
        shapes = list(set_partitions(range(1, n + 1)))
        if base == "NC":
            shapes = [s for s in shapes if is_noncrossing(arcs_of(s))]
        elif base == "NN":
            shapes = [s for s in shapes if is_nonnesting(arcs_of(s))]
        shapes = [canonical_blocks(s) for s in shapes]
    elif base == "L":
        shapes = [
            blocks_from_arcs(ground_a(n), arcs) for arcs in _linear_blocks(ground_a(n))
        ]
    elif base in ("L_B", "L_D"):
        g = ground_b(n) if base == "L_B" else ground_d(n)
        shapes = [blocks_from_arcs(g, arcs) for arcs in _linear_blocks(g)]
    elif base in ("P_B", "NC_TILDE_B"):
        shapes = [
            s
            for s in symmetric_partitions(n, True, False)
            if _no_self_mirror_arcs(s)
        ]
        if base == "NC_TILDE_B":
            shapes = [s for s in shapes if _is_nc_tilde_shape(s)]
    elif base in ("P_D", "NC_TILDE_D"):
        shapes = [
            s
            for s in symmetric_partitions(n, False, False)
            if _no_self_mirror_arcs(s)
        ]
        if base == "NC_TILDE_D":
            shapes = [s for s in shapes if _is_nc_tilde_shape(s)]
    elif base == "NN_B":
        shapes = [
            s
            for s in symmetric_partitions(n, False, True)
            if is_nonnesting(arcs_of(s))
        ]
    else:  # pragma: no cover
        raise ValueError(base)
    return tuple(sorted(set(shapes)))


def _is_nc_tilde_shape(blocks) -> bool:
    return all((i, k) == (-l, -j) for (i, k), (j, l) in crossings(arcs_of(blocks)))


# ---------------------------------------------------------------------------
# label assignment


def _labelings(spec: FamilySpec, blocks):
    """All valid labelings of one block structure, in deterministic order."""
    arcs = sorted(arcs_of(blocks))
    group = spec.label_group
    if spec.family in UNLABELED_FAMILIES:
        yield {arc: (1,) for arc in arcs}
        return

    if spec.is_ab:
        ds = DirectSum(spec.groups[0], spec.groups[1])

        def choices(arc):
            is_cover = arc[1] == arc[0] + 1
            pool = ds.b if is_cover else ds.a
            embed = ds.embed_b if is_cover else ds.embed_a
            return tuple(embed(v) for v in pool.nonzero_elements())

    else:

        def choices(arc):
            return group.nonzero_elements()

    if spec.ground.kind == "A":
        free = arcs
        mirrored = []
    else:
        free = [a for a in arcs if a[0] + a[1] < 0]
        mirrored = [a for a in arcs if a[0] + a[1] > 0]
        if len(free) + len(mirrored) != len(arcs):
            raise ValueError("self-mirrored arc in a mirror-labeled family")

    for values in itertools.product(*(choices(a) for a in free)):
        labels = dict(zip(free, values))
        for i, j in mirrored:
            labels[(i, j)] = neg(group, labels[(-j, -i)])
        yield labels


@lru_cache(maxsize=None)
def _enumerated(spec: FamilySpec) -> tuple[LabeledSetPartition, ...]:
    ground = spec.ground
    group = spec.label_group
    out = []
    for blocks in family_shapes(spec.family, spec.n):
        for labels in _labelings(spec, blocks):
            out.append(LabeledSetPartition(ground, group, blocks, labels))
    out.sort(key=rook_sort_key)
    return tuple(out)


def enumerate_family(spec: FamilySpec):
    """Stream of all family members, each once, in rook-matrix order."""
    yield from _enumerated(spec)


def family_size(spec: FamilySpec) -> int:
    return len(_enumerated(spec))


STATISTICS = ("blocks", "arcs", "cov_arcs", "noncov_arcs", "singletons")


def statistic(p: LabeledSetPartition, name: str) -> int:
    if name == "blocks":
        return len(p.blocks)
    if name == "arcs":
        return len(p.arcs())
    if name == "cov_arcs":
        return len(p.cover_arcs())
    if name == "noncov_arcs":
        return len(p.arcs()) - len(p.cover_arcs())
    if name == "singletons":
        return len(p.singleton_blocks())
    raise ValueError(f"unknown statistic {name!r}")


def count_by(spec: FamilySpec, stat: str) -> dict[int, int]:
    """Exact histogram of a statistic over the family."""
    if stat not in STATISTICS:
        raise ValueError(f"unknown statistic {stat!r}")
    hist: Counter[int] = Counter()
    for p in enumerate_family(spec):
        hist[statistic(p, stat)] += 1
    return dict(sorted(hist.items()))


# ---------------------------------------------------------------------------
# Dyck paths


@dataclass(frozen=True)
class DyckPath:
    steps: str

    def __post_init__(self):
        height = 0
        for s in self.steps:
            if s not in "UD":
                raise ValueError(f"bad step {s!r}")
            height += 1 if s == "U" else -1
            if height < 0:
                raise ValueError("path dips below the axis")
        if height != 0:
            raise ValueError("path does not return to the axis")

    def __len__(self):
        return len(self.steps)

    def valleys(self) -> tuple[tuple[int, int], ...]:
        """Points ending a down-step and starting an up-step."""
        out = []
        height = 0
        for k, s in enumerate(self.steps):
            height += 1 if s == "U" else -1
            if s == "D" and k + 1 < len(self.steps) and self.steps[k + 1] == "U":
                out.append((k + 1, height))
        return tuple(out)

    def is_symmetric(self) -> bool:
        flipped = "".join("U" if s == "D" else "D" for s in reversed(self.steps))
        return flipped == self.steps


def enumerate_dyck(m: int):
    """All Dyck paths with 2m steps, lexicographic with U < D."""
    if m < 0:
        raise ValueError("need m >= 0")

    def rec(prefix, height, remaining):
        if remaining == 0:
            yield DyckPath("".join(prefix))
            return
        if remaining > height:
            prefix.append("U")
            yield from rec(prefix, height + 1, remaining - 1)
            prefix.pop()
        if height > 0:
            prefix.append("D")
            yield from rec(prefix, height - 1, remaining - 1)
            prefix.pop()

    yield from rec([], 0, 2 * m)
