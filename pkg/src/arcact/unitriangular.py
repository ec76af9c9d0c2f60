"""Unitriangular matrix groups over prime fields and their supercharacters.

Matrices are tuples of tuples of residues mod p.  The two families of
fixed-point subgroups (types B and D) live inside the unitriangular groups
of sizes 2n+1 and 2n; their characters are evaluated through the ambient
canonical reduction, so only the ambient theory is ever constructed.

All character values are exact elements of Z[zeta_p].
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .core import LabeledSetPartition, blocks_from_arcs, classify, ground_a
from .cyclotomic import CycValue, theta
from .families import FamilySpec, enumerate_family
from .groups import GroupSpec
from .maps import halve
from .action import orbit, plus
from .poly import (
    bell_univariate,
    bellb_univariate,
    cat_univariate,
    feasible_closed,
    feasibleb_tilde_closed,
)

Matrix = tuple[tuple[int, ...], ...]


class ScaleGuardError(RuntimeError):
    """The requested group is larger than the configured bound."""


class ConsistencyError(RuntimeError):
    """An exact invariant failed; signals an implementation bug."""


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix, p: int) -> Matrix:
    n, m = len(a), len(b[0]) if b else 0
    k = len(b)
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(k)) % p for j in range(m))
        for i in range(n)
    )


def dagger(a: Matrix) -> Matrix:
    """Backwards transpose: flip along the antidiagonal."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    return tuple(
        tuple(a[rows - 1 - j][cols - 1 - i] for j in range(rows)) for i in range(cols)
    )


def unitriangular_inverse(g: Matrix, p: int) -> Matrix:
    n = len(g)
    nil = tuple(
        tuple((g[i][j] - (1 if i == j else 0)) % p for j in range(n)) for i in range(n)
    )
    out = identity_matrix(n)
    power = identity_matrix(n)
    sign = -1
    for _ in range(1, n):
        power = mat_mul(power, nil, p)
        out = tuple(
            tuple((out[i][j] + sign * power[i][j]) % p for j in range(n))
            for i in range(n)
        )
        sign = -sign
    return out


def is_unitriangular(g: Matrix, p: int) -> bool:
    n = len(g)
    return all(
        (g[i][j] % p == (1 if i == j else 0)) if i >= j else True
        for i in range(n)
        for j in range(n)
    )


def is_dagger_unitary(g: Matrix, p: int) -> bool:
    """Fixed by the involution g -> inverse-dagger, i.e. g g^dagger = 1."""
    return mat_mul(g, dagger(g), p) == identity_matrix(len(g))


def unitriangular_order(n: int, p: int) -> int:
    return p ** (n * (n - 1) // 2)


def subgroup_order(kind: str, n: int, p: int) -> int:
    if kind == "A":
        return unitriangular_order(n, p)
    if kind == "B":
        return p ** (n * n)
    if kind == "D":
        return p ** (n * (n - 1))
    raise ValueError(f"unknown kind {kind!r}")


def _guard(order: int, max_group_order: int):
    if order > max_group_order:
        raise ScaleGuardError(
            f"group order {order} exceeds the bound {max_group_order}"
        )


def unitriangular_elements(n: int, p: int, max_group_order: int = 10**6):
    """All of the unitriangular group, in lexicographic entry order."""
    _guard(unitriangular_order(n, p), max_group_order)
    positions = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for values in itertools.product(range(p), repeat=len(positions)):
        g = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for (i, j), v in zip(positions, values):
            g[i][j] = v
        yield tuple(tuple(row) for row in g)


def _free_positions(n: int) -> list[tuple[int, int]]:
    # one representative of each antidiagonal mirror pair (i, j) <-> (n-1-j, n-1-i)
    return [(i, j) for i in range(n) for j in range(n) if i + j < n - 1]


def _solve_skew(n, p, free_values, rhs):
    """Matrices z with z^dagger + z + rhs = 0, rhs dagger-symmetric."""
    inv2 = pow(2, -1, p)
    z = [[0] * n for _ in range(n)]
    for (i, j), v in zip(_free_positions(n), free_values):
        z[i][j] = v
        z[n - 1 - j][n - 1 - i] = (-v - rhs[n - 1 - j][n - 1 - i]) % p
    for i in range(n):
        j = n - 1 - i
        z[i][j] = (-rhs[i][j] * inv2) % p
    return tuple(tuple(row) for row in z)


def type_b_elements(n: int, p: int, max_group_order: int = 10**6):
    """The fixed-point subgroup inside the unitriangular group of size 2n+1."""
    if p == 2:
        raise ValueError("odd characteristic required")
    _guard(subgroup_order("B", n, p), max_group_order)
    free = _free_positions(n)
    for x in unitriangular_elements(n, p, max_group_order):
        xinv_dag = dagger(unitriangular_inverse(x, p))
        for u in itertools.product(range(p), repeat=n):
            ucol = tuple((v,) for v in u)
            uu = tuple(tuple(u[i] * u[n - 1 - j] % p for j in range(n)) for i in range(n))
            xu = mat_mul(x, ucol, p)
            neg_udag = tuple(
                tuple((-row[j]) % p for j in range(n)) for row in dagger(ucol)
            )
            for values in itertools.product(range(p), repeat=len(free)):
                z = _solve_skew(n, p, values, uu)
                xz = mat_mul(x, z, p)
                g = []
                for i in range(n):
                    g.append(tuple(x[i]) + (xu[i][0],) + tuple(xz[i]))
                g.append((0,) * n + (1,) + neg_udag[0])
                for i in range(n):
                    g.append((0,) * (n + 1) + tuple(xinv_dag[i]))
                yield tuple(g)


def type_d_elements(n: int, p: int, max_group_order: int = 10**6):
    """The fixed-point subgroup inside the unitriangular group of size 2n."""
    if p == 2:
        raise ValueError("odd characteristic required")
    _guard(subgroup_order("D", n, p), max_group_order)
    free = _free_positions(n)
    zero_rhs = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    for x in unitriangular_elements(n, p, max_group_order):
        xinv_dag = dagger(unitriangular_inverse(x, p))
        for values in itertools.product(range(p), repeat=len(free)):
            z = _solve_skew(n, p, values, zero_rhs)
            xz = mat_mul(x, z, p)
            g = []
            for i in range(n):
                g.append(tuple(x[i]) + tuple(xz[i]))
            for i in range(n):
                g.append((0,) * n + tuple(xinv_dag[i]))
            yield tuple(g)


def group_elements(kind: str, n: int, p: int, max_group_order: int = 10**6):
    if kind == "A":
        return unitriangular_elements(n, p, max_group_order)
    if kind == "B":
        return type_b_elements(n, p, max_group_order)
    if kind == "D":
        return type_d_elements(n, p, max_group_order)
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# canonical reduction


def superclass_reduce(g: Matrix, p: int) -> LabeledSetPartition:
    """Canonical rook form of g - 1 under two-sided unitriangular moves.

    Columns are scanned left to right; in each column the lowest entry in a
    row without an earlier pivot becomes a pivot, its row is cleared to the
    right by column operations and its column is cleared upward by row
    operations.  The surviving entries decode to a labeled partition.
    """
    n = len(g)
    M = [
        [(g[i][j] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)
    ]
    pivot_rows = set()
    labels = {}
    for c in range(n):
        candidates = [r for r in range(c) if M[r][c] and r not in pivot_rows]
        if not candidates:
            continue
        r = max(candidates)
        inv = pow(M[r][c], -1, p)
        for c2 in range(c + 1, n):
            if M[r][c2]:
                t = (-M[r][c2] * inv) % p
                for rr in range(r + 1):
                    M[rr][c2] = (M[rr][c2] + t * M[rr][c]) % p
        for r2 in range(r):
            if M[r2][c]:
                t = (-M[r2][c] * inv) % p
                for c2 in range(c, n):
                    M[r2][c2] = (M[r2][c2] + t * M[r][c2]) % p
        pivot_rows.add(r)
        labels[(r + 1, c + 1)] = (M[r][c],)
    ground = ground_a(n)
    blocks = blocks_from_arcs(ground, labels.keys())
    return LabeledSetPartition(ground, GroupSpec((p,)), blocks, labels)


def class_representative_matrix(lam: LabeledSetPartition, p: int) -> Matrix:
    """The unitriangular matrix 1 + sum of labeled elementary matrices."""
    n = lam.ground.size
    g = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for (i, j), v in lam.label_map().items():
        g[i - 1][j - 1] = v[0] % p
    return tuple(tuple(row) for row in g)


def random_superclass_perturbation(g: Matrix, p: int, rng: random.Random) -> Matrix:
    """u (g - 1) v + 1 for random unitriangular u, v."""
    n = len(g)

    def rand_unitriangular():
        m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                m[i][j] = rng.randrange(p)
        return tuple(tuple(row) for row in m)

    u, v = rand_unitriangular(), rand_unitriangular()
    nil = tuple(
        tuple((g[i][j] - (1 if i == j else 0)) % p for j in range(n)) for i in range(n)
    )
    moved = mat_mul(mat_mul(u, nil, p), v, p)
    return tuple(
        tuple((moved[i][j] + (1 if i == j else 0)) % p for j in range(n))
        for i in range(n)
    )


# ---------------------------------------------------------------------------
# character values


def chi_on_class(lam: LabeledSetPartition, gamma: LabeledSetPartition) -> CycValue:
    """Supercharacter value of the index partition on the class of gamma."""
    p = lam.group.moduli[0]
    if gamma.group != lam.group or gamma.ground != lam.ground:
        raise ValueError("index and class live on different groups")
    gamma_arcs = gamma.label_map()
    for i, l in lam.arcs():
        for j in range(i + 1, l):
            if (i, j) in gamma_arcs or (j, l) in gamma_arcs:
                return CycValue.from_int(p, 0)
    q_exponent = 0
    theta_arg = 0
    for (i, l), value in lam.label_map().items():
        nested = sum(1 for (j, k) in gamma_arcs if i < j and k < l)
        q_exponent += l - i - 1 - nested
        entry = gamma_arcs.get((i, l))
        if entry is not None:
            theta_arg += value[0] * entry[0]
    assert q_exponent >= 0
    return theta(p, theta_arg) * (p**q_exponent)


def chi_eval(lam: LabeledSetPartition, g: Matrix) -> CycValue:
    """Type A supercharacter value at a group element."""
    p = lam.group.moduli[0]
    if len(g) != lam.ground.size:
        raise ValueError("matrix size does not match the index partition")
    return chi_on_class(lam, superclass_reduce(g, p))


def _restricted_eval(lam: LabeledSetPartition, g: Matrix, kind: str) -> CycValue:
    p = lam.group.moduli[0]
    if p == 2:
        raise ValueError("odd characteristic required")
    if not (is_unitriangular(g, p) and is_dagger_unitary(g, p)):
        raise ValueError("element is not in the fixed-point subgroup")
    expected = 2 * lam.ground.n + (1 if kind == "B" else 0)
    if len(g) != expected:
        raise ValueError("matrix size does not match the index partition")
    return chi_on_class(halve(lam), superclass_reduce(g, p))


def chi_b_eval(lam: LabeledSetPartition, g: Matrix) -> CycValue:
    """Type B supercharacter: the ambient character of halve at g."""
    if lam.ground.kind != "B":
        raise ValueError("index must be a B-ground partition")
    return _restricted_eval(lam, g, "B")


def chi_d_eval(lam: LabeledSetPartition, g: Matrix) -> CycValue:
    if lam.ground.kind != "D":
        raise ValueError("index must be a D-ground partition")
    return _restricted_eval(lam, g, "D")


def inner_product(values1, values2, sizes, group_order: int) -> Fraction:
    """Exact Hermitian inner product of two class functions."""
    p = values1[0].p
    total = CycValue.from_int(p, 0)
    for v, w, size in zip(values1, values2, sizes):
        total = total + size * (v * w.conjugate())
    if not total.is_rational():
        raise ConsistencyError("inner product is not rational")
    return Fraction(total.rational_value(), group_order)


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class CharTable:
    kind: str
    n: int
    p: int
    classes: tuple[LabeledSetPartition, ...]
    class_sizes: tuple[int, ...]
    indices: tuple[LabeledSetPartition, ...]
    values: tuple[tuple[CycValue, ...], ...]
    group_order: int

    def norms(self) -> tuple[Fraction, ...]:
        return tuple(
            inner_product(v, v, self.class_sizes, self.group_order)
            for v in self.values
        )

    def degrees(self) -> tuple[int, ...]:
        empty = [k for k, c in enumerate(self.classes) if not c.arcs()]
        return tuple(v[empty[0]].rational_value() for v in self.values)


def _index_family(kind: str, n: int, p: int) -> FamilySpec:
    group = GroupSpec((p,))
    code = {"A": "PI", "B": "P_B", "D": "P_D"}[kind]
    return FamilySpec(code, n, (group,))


def _linear_family(kind: str, n: int, p: int) -> FamilySpec:
    group = GroupSpec((p,))
    code = {"A": "L", "B": "L_B", "D": "L_D"}[kind]
    return FamilySpec(code, n, (group,))


from functools import lru_cache


@lru_cache(maxsize=None)
def build_chartable(kind: str, n: int, p: int, max_group_order: int = 10**6) -> CharTable:
    """Value table of every supercharacter on the listed group."""
    from collections import Counter

    counter: Counter = Counter()
    order = 0
    for g in group_elements(kind, n, p, max_group_order):
        counter[superclass_reduce(g, p)] += 1
        order += 1
    classes = tuple(sorted(counter, key=lambda q: q.labels))
    sizes = tuple(counter[c] for c in classes)
    indices = tuple(enumerate_family(_index_family(kind, n, p)))
    if kind == "A":
        rows = tuple(
            tuple(chi_on_class(lam, c) for c in classes) for lam in indices
        )
    else:
        rows = tuple(
            tuple(chi_on_class(halve(lam), c) for c in classes) for lam in indices
        )
    return CharTable(kind, n, p, classes, sizes, indices, rows, order)


def expected_counts(kind: str, n: int, p: int) -> dict:
    q = p
    if kind == "A":
        return {
            "distinct": bell_univariate(n).eval_int(q - 1),
            "irreducible": cat_univariate(n).eval_int(q - 1),
            "linear": q ** max(n - 1, 0),
            "l_invariant": feasible_closed(n - 1).eval_int(q - 1) if n >= 1 else 1,
        }
    if kind == "B":
        return {
            "distinct": bellb_univariate(n).eval_int(q - 1),
            "irreducible": cat_univariate(n + 1).eval_int(q - 1),
            "linear": q**n,
            "l_invariant": feasible_closed(n).scale_x(2).eval_int(q - 1),
        }
    return {
        "distinct": bell_univariate(n).eval_int(2 * q - 2),
        "irreducible": cat_univariate(n).eval_int(q - 1),
        "linear": q ** max(n - 1, 0),
        "l_invariant": feasibleb_tilde_closed(n - 1).eval_int(q - 1) if n >= 1 else 1,
    }


def verify_counts(kind: str, n: int, p: int, max_group_order: int = 10**6) -> dict:
    """Count superclasses, distinct characters, irreducibles, linears and
    invariants, next to their predicted values."""
    table = build_chartable(kind, n, p, max_group_order)
    norms = table.norms()
    if any(f.denominator != 1 for f in norms):
        raise ConsistencyError("a character norm is not an integer")
    irreducible = {
        lam for lam, f in zip(table.indices, norms) if f == 1
    }
    noncrossing = {lam for lam in table.indices if classify(lam).noncrossing}
    acting = _linear_family(kind, n, p)
    invariant = sum(
        1 for lam in table.indices if orbit(lam, acting).size == 1
    )
    record = {
        "group_order": table.group_order,
        "num_indices": len(table.indices),
        "num_superclasses": len(table.classes),
        "num_distinct": len(set(table.values)),
        "num_irreducible": len(irreducible),
        "irreducible_iff_noncrossing": irreducible == noncrossing,
        "num_linear": sum(1 for d in table.degrees() if d == 1),
        "num_l_invariant": invariant,
        "expected": expected_counts(kind, n, p),
    }
    return record


def verify_product_rule(kind: str, n: int, p: int, max_group_order: int = 10**6) -> bool:
    """Multiplying by a linear supercharacter matches the additive action."""
    table = build_chartable(kind, n, p, max_group_order)
    row = {lam: v for lam, v in zip(table.indices, table.values)}
    for alpha in enumerate_family(_linear_family(kind, n, p)):
        va = row[alpha]
        for lam in table.indices:
            target = row[plus(alpha, lam)]
            got = tuple(a * b for a, b in zip(va, row[lam]))
            if got != target:
                return False
    return True


# ---------------------------------------------------------------------------
# restriction equivalence (arc reflection moves in the ambient group)


def reflection_moves(lam: LabeledSetPartition):
    """Partitions reachable by one arc reflection (i,j) -> (m+1-j, m+1-i)
    with negated label, when the reflected arc is free."""
    m = lam.ground.size
    group = lam.group
    p = group.moduli[0]
    arc_map = lam.label_map()
    out = []
    for (i, j), value in arc_map.items():
        target = (m + 1 - j, m + 1 - i)
        if target in arc_map or target == (i, j):
            continue
        new_labels = dict(arc_map)
        del new_labels[(i, j)]
        new_labels[target] = ((-value[0]) % p,)
        lefts = [a for a, _ in new_labels]
        rights = [b for _, b in new_labels]
        if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
            continue
        blocks = blocks_from_arcs(lam.ground, new_labels.keys())
        out.append(LabeledSetPartition(lam.ground, group, blocks, new_labels))
    return out


def reflection_class(lam: LabeledSetPartition) -> frozenset:
    """Closure of a partition under arc reflections, in both directions."""
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for q in frontier:
            for r in reflection_moves(q):
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return frozenset(seen)


def restriction_distinguishes_nc_tilde(n: int, p: int) -> bool:
    """A type B index is relaxed-noncrossing exactly when the reflection
    class of its halved partition contains only noncrossing partitions."""
    for lam in enumerate_family(_index_family("B", n, p)):
        all_nc = all(
            classify(q).noncrossing for q in reflection_class(halve(lam))
        )
        if all_nc != classify(lam).nc_tilde:
            return False
    return True
