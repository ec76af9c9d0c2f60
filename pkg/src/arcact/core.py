"""Labeled set partitions over integer ground intervals.

Ground sets come in three interval shapes:

* A(n): {1, ..., n}
* B(n): {-n, ..., -1, 0, 1, ..., n}
* D(n): {-n, ..., -1, 1, ..., n}

An arc of a partition is a pair (i, j) of elements in the same block with j
the least block element greater than i.  A labeled partition assigns a
nonzero group element to every arc.  Values are immutable and hashable;
blocks are stored sorted with the block list sorted by minimum, which gives
a canonical equality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .groups import Element, GroupSpec, add, neg

Arc = tuple[int, int]


class StructuralError(ValueError):
    """Blocks overlap, labels are malformed, or grounds/groups mismatch."""


class InvalidArcSetError(StructuralError):
    """Two arcs share a left endpoint or share a right endpoint."""


class UnsupportedGroundError(ValueError):
    """The operation is not defined on this ground shape."""


@dataclass(frozen=True)
class GroundSet:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ("A", "B", "D"):
            raise StructuralError(f"unknown ground kind {self.kind!r}")
        if self.n < 0:
            raise StructuralError("ground parameter must be nonnegative")

    def elements(self) -> tuple[int, ...]:
        n = self.n
        if self.kind == "A":
            return tuple(range(1, n + 1))
        if self.kind == "B":
            return tuple(range(-n, n + 1))
        return tuple(range(-n, 0)) + tuple(range(1, n + 1))

    @property
    def size(self) -> int:
        return {"A": self.n, "B": 2 * self.n + 1, "D": 2 * self.n}[self.kind]

    def position(self, x: int) -> int:
        """Order-preserving bijection onto {1, ..., size}."""
        n = self.n
        if self.kind == "A":
            if not 1 <= x <= n:
                raise StructuralError(f"{x} not in ground {self}")
            return x
        if self.kind == "B":
            if not -n <= x <= n:
                raise StructuralError(f"{x} not in ground {self}")
            return x + n + 1
        if x == 0 or not -n <= x <= n:
            raise StructuralError(f"{x} not in ground {self}")
        return x + n + 1 if x < 0 else x + n

    def from_position(self, p: int) -> int:
        n = self.n
        if not 1 <= p <= self.size:
            raise StructuralError(f"position {p} out of range for {self}")
        if self.kind == "A":
            return p
        if self.kind == "B":
            return p - n - 1
        x = p - n - 1
        return x if x < 0 else x + 1

    def __str__(self) -> str:
        return f"{self.kind}({self.n})"


def ground_a(n: int) -> GroundSet:
    return GroundSet("A", n)


def ground_b(n: int) -> GroundSet:
    return GroundSet("B", n)


def ground_d(n: int) -> GroundSet:
    return GroundSet("D", n)


def arcs_of(blocks) -> frozenset[Arc]:
    """Arc set of a family of pairwise disjoint blocks."""
    seen = set()
    arcs = set()
    for block in blocks:
        ordered = sorted(block)
        if not ordered:
            raise StructuralError("empty block")
        for x in ordered:
            if x in seen:
                raise StructuralError(f"element {x} appears in two blocks")
            seen.add(x)
        arcs.update(zip(ordered, ordered[1:]))
    return frozenset(arcs)


def blocks_from_arcs(ground: GroundSet, arcs) -> tuple[tuple[int, ...], ...]:
    """Transitive closure of an arc set into blocks covering the ground."""
    succ = {}
    pred = {}
    elements = set(ground.elements())
    for i, j in arcs:
        if i >= j:
            raise InvalidArcSetError(f"arc ({i},{j}) is not increasing")
        if i not in elements or j not in elements:
            raise InvalidArcSetError(f"arc ({i},{j}) leaves the ground {ground}")
        if i in succ:
            raise InvalidArcSetError(f"two arcs leave {i}")
        if j in pred:
            raise InvalidArcSetError(f"two arcs enter {j}")
        succ[i] = j
        pred[j] = i
    blocks = []
    for x in ground.elements():
        if x in pred:
            continue
        block = [x]
        while block[-1] in succ:
            block.append(succ[block[-1]])
        blocks.append(tuple(block))
    return canonical_blocks(blocks)


def canonical_blocks(blocks) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


class LabeledSetPartition:
    """A set partition of a ground interval with group-labeled arcs."""

    __slots__ = ("ground", "group", "blocks", "labels", "_label_map", "_hash")

    def __init__(self, ground: GroundSet, group: GroupSpec, blocks, labels):
        blocks = canonical_blocks(blocks)
        covered = [x for b in blocks for x in b]
        if sorted(covered) != sorted(ground.elements()):
            raise StructuralError(f"blocks do not partition the ground {ground}")
        arcs = arcs_of(blocks)
        label_map = dict(labels)
        if set(label_map) != set(arcs):
            raise StructuralError("labels must cover exactly the arc set")
        for arc, value in label_map.items():
            group.check(value)
            if value == group.zero:
                raise StructuralError(f"arc {arc} carries the zero label")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(
            self, "labels", tuple(sorted((i, j, label_map[(i, j)]) for i, j in arcs))
        )
        object.__setattr__(self, "_label_map", label_map)
        object.__setattr__(self, "_hash", hash((ground, group, blocks, self.labels)))

    def __setattr__(self, name, value):
        raise AttributeError("LabeledSetPartition is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, LabeledSetPartition)
            and self.ground == other.ground
            and self.group == other.group
            and self.blocks == other.blocks
            and self.labels == other.labels
        )

    def __hash__(self):
        return self._hash

    def arcs(self) -> frozenset[Arc]:
        return frozenset(self._label_map)

    def label(self, arc: Arc) -> Element:
        return self._label_map[arc]

    def label_map(self) -> dict[Arc, Element]:
        return dict(self._label_map)

    def cover_arcs(self) -> frozenset[Arc]:
        return frozenset(a for a in self._label_map if a[1] == a[0] + 1)

    def num_blocks(self) -> int:
        return len(self.blocks)

    def singleton_blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(b for b in self.blocks if len(b) == 1)

    def block_of(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise StructuralError(f"{x} not in ground {self.ground}")

    def relabel(self, labels) -> "LabeledSetPartition":
        return LabeledSetPartition(self.ground, self.group, self.blocks, labels)

    def __repr__(self):
        return f"LabeledSetPartition({self.text()!r})"

    def text(self) -> str:
        """Canonical one-line form: blocks, then arc labels."""
        blocks = "".join("{" + ",".join(str(x) for x in b) + "}" for b in self.blocks)
        labels = " ".join(
            f"({i},{j})={format_element(v)}" for i, j, v in self.labels
        )
        return blocks if not labels else f"{blocks} {labels}"

    def to_json_dict(self) -> dict:
        return {
            "ground": {"kind": self.ground.kind, "n": self.ground.n},
            "group": list(self.group.moduli),
            "blocks": [list(b) for b in self.blocks],
            "labels": [
                {"i": i, "j": j, "value": list(v)} for i, j, v in self.labels
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def format_element(v: Element) -> str:
    if len(v) == 1:
        return str(v[0])
    return "(" + ",".join(str(x) for x in v) + ")"


def partition_from_json_dict(data: dict) -> LabeledSetPartition:
    try:
        ground = GroundSet(data["ground"]["kind"], data["ground"]["n"])
        group = GroupSpec(tuple(data["group"]))
        blocks = [tuple(b) for b in data["blocks"]]
        labels = {
            (entry["i"], entry["j"]): tuple(entry["value"])
            for entry in data["labels"]
        }
    except (KeyError, TypeError) as exc:
        raise StructuralError(f"malformed partition JSON: {exc}") from exc
    return LabeledSetPartition(ground, group, blocks, labels)


def partition_from_json(text: str) -> LabeledSetPartition:
    return partition_from_json_dict(json.loads(text))


def unlabeled(ground: GroundSet, blocks) -> LabeledSetPartition:
    """View a plain set partition as labeled over the two-element group."""
    group = GroupSpec((2,))
    labels = {arc: (1,) for arc in arcs_of(blocks)}
    return LabeledSetPartition(ground, group, blocks, labels)


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class ClassifyFlags:
    noncrossing: bool
    nonnesting: bool
    two_regular: bool
    feasible: bool
    poor: bool
    b_feasible: bool
    b_poor: bool
    nc_tilde: bool
    type_symmetric: bool


def crossings(arcs) -> list[tuple[Arc, Arc]]:
    arcs = sorted(arcs)
    out = []
    for s, (i, k) in enumerate(arcs):
        for j, l in arcs[s + 1 :]:
            if i < j < k < l:
                out.append(((i, k), (j, l)))
    return out


def is_noncrossing(arcs) -> bool:
    return not crossings(arcs)


def is_nonnesting(arcs) -> bool:
    arcs = sorted(arcs)
    for s, (i, l) in enumerate(arcs):
        for j, k in arcs[s + 1 :]:
            if i < j < k < l:
                return False
    return True


def is_type_symmetric(p: LabeledSetPartition) -> bool:
    """Mirror-closed arcs with opposite labels and no self-mirrored arc.

    An arc (-i, i) is its own mirror and is never allowed; together with
    mirror closure this forces the arc count to be even and the blocks to
    come in pairs B, -B.
    """
    if p.ground.kind not in ("B", "D"):
        return False
    arcs = p.arcs()
    for (i, j), value in p.label_map().items():
        mirror = (-j, -i)
        if mirror == (i, j):
            return False
        if mirror not in arcs:
            return False
        if add(p.group, value, p.label((-j, -i))) != p.group.zero:
            return False
    return True


def classify(p: LabeledSetPartition) -> ClassifyFlags:
    arcs = p.arcs()
    sizes = [len(b) for b in p.blocks]
    nonzero_sizes = [len([x for x in b if x != 0]) for b in p.blocks]
    nc = is_noncrossing(arcs)
    nc_tilde = all(
        (i, k) == (-l, -j) for (i, k), (j, l) in crossings(arcs)
    )
    return ClassifyFlags(
        noncrossing=nc,
        nonnesting=is_nonnesting(arcs),
        two_regular=all(j != i + 1 for i, j in arcs),
        feasible=all(s >= 2 for s in sizes),
        poor=all(s <= 2 for s in sizes),
        b_feasible=all(s != 1 for s in nonzero_sizes),
        b_poor=all(s <= 2 for s in nonzero_sizes),
        nc_tilde=nc_tilde,
        type_symmetric=is_type_symmetric(p),
    )


# ---------------------------------------------------------------------------
# rook matrices


@dataclass(frozen=True)
class RookMatrix:
    """Strictly upper-triangular sparse matrix with <= 1 entry per row/column."""

    size: int
    entries: tuple[tuple[int, int, Element], ...]

    def __post_init__(self):
        rows = set()
        cols = set()
        for r, c, v in self.entries:
            if not 1 <= r < c <= self.size:
                raise StructuralError(f"entry ({r},{c}) not strictly upper triangular")
            if r in rows:
                raise StructuralError(f"two entries in row {r}")
            if c in cols:
                raise StructuralError(f"two entries in column {c}")
            rows.add(r)
            cols.add(c)

    def entry_map(self) -> dict[tuple[int, int], Element]:
        return {(r, c): v for r, c, v in self.entries}


def to_rook(p: LabeledSetPartition) -> RookMatrix:
    pos = p.ground.position
    entries = tuple(
        sorted((pos(i), pos(j), v) for i, j, v in p.labels)
    )
    return RookMatrix(p.ground.size, entries)


def from_rook(ground: GroundSet, group: GroupSpec, rook: RookMatrix) -> LabeledSetPartition:
    if rook.size != ground.size:
        raise StructuralError("rook matrix size does not match the ground")
    labels = {}
    for r, c, v in rook.entries:
        labels[(ground.from_position(r), ground.from_position(c))] = v
    blocks = blocks_from_arcs(ground, labels.keys())
    return LabeledSetPartition(ground, group, blocks, labels)


def rook_noncrossing(rook: RookMatrix) -> bool:
    """Matrix reading of the noncrossing condition.

    A position above the diagonal that is strictly south of an entry in its
    column and strictly west of an entry in its row witnesses a crossing.
    """
    by_col = {c: r for r, c, _ in rook.entries}
    by_row = {r: c for r, c, _ in rook.entries}
    for r in range(1, rook.size + 1):
        for c in range(r + 1, rook.size + 1):
            south = c in by_col and by_col[c] < r
            west = r in by_row and by_row[r] > c
            if south and west:
                return False
    return True


def rook_sort_key(p: LabeledSetPartition):
    """Flattened row-major reading of the rook matrix; the enumeration order."""
    width = len(p.group.moduli)
    zero = (0,) * width
    entry = to_rook(p).entry_map()
    key = []
    m = p.ground.size
    for r in range(1, m + 1):
        for c in range(r + 1, m + 1):
            key.extend(entry.get((r, c), zero))
    return tuple(key)


# ---------------------------------------------------------------------------
# negation


def negate(p: LabeledSetPartition) -> LabeledSetPartition:
    """Negate the ground: blocks B become -B, arc (i,j) becomes (-j,-i).

    Labels ride along with their arcs, so negating twice is the identity.
    """
    if p.ground.kind not in ("B", "D"):
        raise UnsupportedGroundError("negate needs a sign-symmetric ground")
    blocks = [tuple(sorted(-x for x in b)) for b in p.blocks]
    labels = {(-j, -i): v for (i, j), v in p.label_map().items()}
    return LabeledSetPartition(p.ground, p.group, blocks, labels)


def negate_labels(p: LabeledSetPartition) -> LabeledSetPartition:
    labels = {arc: neg(p.group, v) for arc, v in p.label_map().items()}
    return p.relabel(labels)


# ---------------------------------------------------------------------------
# ASCII rendering


def render_ascii(p: LabeledSetPartition) -> str:
    """Deterministic text diagram: elements in a row, labeled arcs overhead."""
    elements = p.ground.elements()
    names = [str(x) for x in elements]
    label_texts = {(i, j): format_element(v) for i, j, v in p.labels}
    cell = max(
        [len(s) for s in names] + [len(t) + 2 for t in label_texts.values()] + [1]
    )
    starts = []
    at = 0
    for s in names:
        starts.append(at)
        at += cell + 1
    width = at - 1
    centers = {x: starts[k] + len(names[k]) // 2 for k, x in enumerate(elements)}

    base = [" "] * width
    for k, s in enumerate(names):
        base[starts[k] : starts[k] + len(s)] = list(s)

    rows: list[list[tuple[int, int]]] = []
    drawn: list[list[str]] = []
    for i, j in sorted(p.arcs(), key=lambda a: (a[1] - a[0], a[0])):
        ci, cj = centers[i], centers[j]
        level = 0
        while level < len(rows) and any(
            not (cj < a or b < ci) for a, b in rows[level]
        ):
            level += 1
        if level == len(rows):
            rows.append([])
            drawn.append([" "] * width)
        rows[level].append((ci, cj))
        row = drawn[level]
        row[ci] = "."
        row[cj] = "."
        for c in range(ci + 1, cj):
            row[c] = "-"
        text = label_texts[(i, j)]
        mid = (ci + cj) // 2 - len(text) // 2
        mid = max(ci + 1, min(mid, cj - len(text)))
        row[mid : mid + len(text)] = list(text)

    lines = ["".join(r).rstrip() for r in reversed(drawn)]
    lines.append("".join(base).rstrip())
    return "\n".join(lines)
