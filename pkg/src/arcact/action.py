"""The additive action of linear partitions on labeled partitions.

A linear partition (all arcs are covers) acts by superimposing its arcs:
coinciding covers add their labels, covers blocked by a longer arc of the
other partition are dropped, and zero labels are erased.  Two equivalent
implementations are provided, one on arc sets and one on rook matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    GroundSet,
    LabeledSetPartition,
    RookMatrix,
    StructuralError,
    blocks_from_arcs,
    classify,
    from_rook,
    to_rook,
    unlabeled,
)
from .families import FamilySpec, enumerate_family
from .groups import GroupSpec, add


def is_linear(p: LabeledSetPartition) -> bool:
    return all(j == i + 1 for i, j in p.arcs())


def _check_compatible(alpha: LabeledSetPartition, lam: LabeledSetPartition):
    if alpha.ground != lam.ground:
        raise StructuralError("mismatched grounds")
    if alpha.group != lam.group:
        raise StructuralError("mismatched label groups")
    if not is_linear(alpha):
        raise StructuralError("the acting partition must be linear")


def plus(alpha: LabeledSetPartition, lam: LabeledSetPartition) -> LabeledSetPartition:
    """Arc-set route: remove cancelled covers, insert unobstructed covers."""
    _check_compatible(alpha, lam)
    group = lam.group
    arcs = lam.label_map()
    lefts = {i for i, _ in arcs}
    rights = {j for _, j in arcs}
    cancelled = set()
    inserted = {}
    combined = {}
    for cover, a_value in alpha.label_map().items():
        j, j1 = cover
        if cover in arcs:
            total = add(group, a_value, arcs[cover])
            if total == group.zero:
                cancelled.add(cover)
            else:
                combined[cover] = total
        elif j not in lefts and j1 not in rights:
            inserted[cover] = a_value
    new_labels = {}
    for arc, value in arcs.items():
        if arc in cancelled:
            continue
        new_labels[arc] = combined.get(arc, value)
    new_labels.update(inserted)
    blocks = blocks_from_arcs(lam.ground, new_labels.keys())
    return LabeledSetPartition(lam.ground, group, blocks, new_labels)


def plus_via_matrix(alpha: LabeledSetPartition, lam: LabeledSetPartition) -> LabeledSetPartition:
    """Matrix route: add rook matrices, then erase superdiagonal entries that
    sit strictly below an entry in their column or strictly left of an entry
    in their row."""
    _check_compatible(alpha, lam)
    group = lam.group
    entries = to_rook(lam).entry_map()
    for (r, c), v in to_rook(alpha).entry_map().items():
        total = add(group, v, entries.get((r, c), group.zero))
        if total == group.zero:
            entries.pop((r, c), None)
        else:
            entries[(r, c)] = total
    kept = {}
    for (r, c), v in entries.items():
        if c == r + 1:
            below = any(rr < r and cc == c for rr, cc in entries)
            left = any(rr == r and cc > c for rr, cc in entries)
            if below or left:
                continue
        kept[(r, c)] = v
    rook = RookMatrix(lam.ground.size, tuple(sorted((r, c, v) for (r, c), v in kept.items())))
    return from_rook(lam.ground, group, rook)


def plus_involution(p: LabeledSetPartition) -> LabeledSetPartition:
    """Act by the largest linear partition of the ground (Z2 labels only).

    Applying the map twice gives back the argument.
    """
    if p.group != GroupSpec((2,)):
        raise StructuralError("the involution is defined on unlabeled (Z2) partitions")
    top = _top_linear(p.ground)
    return plus(top, p)


def _top_linear(ground: GroundSet) -> LabeledSetPartition:
    elements = ground.elements()
    if ground.kind == "D":
        n = ground.n
        blocks = [tuple(range(-n, 0)), tuple(range(1, n + 1))]
        blocks = [b for b in blocks if b]
    else:
        blocks = [elements] if elements else []
    return unlabeled(ground, blocks)


# ---------------------------------------------------------------------------
# orbits


@dataclass(frozen=True)
class OrbitReport:
    members: tuple[LabeledSetPartition, ...]
    two_regular_members: tuple[LabeledSetPartition, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def representative(self) -> LabeledSetPartition:
        if len(self.two_regular_members) != 1:
            raise StructuralError(
                f"orbit has {len(self.two_regular_members)} two-regular members"
            )
        return self.two_regular_members[0]


def acting_family(spec: FamilySpec) -> FamilySpec:
    """The linear family acting on the given two-group family."""
    base = {"PI_AB": "L_AB", "NC_AB": "L_AB",
            "P_B_AB": "L_B_AB", "NC_TILDE_B_AB": "L_B_AB",
            "P_D_AB": "L_D_AB", "NC_TILDE_D_AB": "L_D_AB"}
    if spec.family not in base:
        raise ValueError(f"family {spec.family} is not an orbit-decomposable family")
    return FamilySpec(base[spec.family], spec.n, spec.groups)


def orbit(lam: LabeledSetPartition, acting: FamilySpec) -> OrbitReport:
    members = {plus(alpha, lam) for alpha in enumerate_family(acting)}
    ordered = tuple(sorted(members, key=lambda q: q.labels))
    reps = tuple(q for q in ordered if classify(q).two_regular)
    return OrbitReport(ordered, reps)


def orbit_decomposition(spec: FamilySpec) -> list[OrbitReport]:
    """Partition a two-group family into orbits of its linear family."""
    acting = acting_family(spec)
    seen = set()
    out = []
    for lam in enumerate_family(spec):
        if lam in seen:
            continue
        report = orbit(lam, acting)
        seen.update(report.members)
        out.append(report)
    return out
