import itertools

import pytest

from arcact.action import (
    acting_family,
    orbit,
    orbit_decomposition,
    plus,
    plus_involution,
    plus_via_matrix,
)
from arcact.core import (
    LabeledSetPartition,
    StructuralError,
    blocks_from_arcs,
    canonical_blocks,
    classify,
    ground_a,
    ground_b,
    ground_d,
    unlabeled,
)
from arcact.families import FamilySpec, enumerate_family
from arcact.groups import DirectSum, GroupSpec
from arcact import maps

Z2 = GroupSpec((2,))
Z3 = GroupSpec((3,))
Z5 = GroupSpec((5,))


def _labeled(ground, group, arcs):
    return LabeledSetPartition(
        ground, group, blocks_from_arcs(ground, arcs), dict(arcs)
    )


def test_definition_example():
    # covers a,b,c,d acting on arcs (1,2):-a, (2,3):e, (3,5):f with b != -e
    A5 = ground_a(5)
    a, b, c, d, e, f = (1,), (1,), (2,), (3,), (1,), (4,)
    alpha = _labeled(A5, Z5, {(1, 2): a, (2, 3): b, (3, 4): c, (4, 5): d})
    lam = _labeled(A5, Z5, {(1, 2): (4,), (2, 3): e, (3, 5): f})
    result = plus(alpha, lam)
    assert result.arcs() == frozenset({(2, 3), (3, 5)})
    assert result.label((2, 3)) == (2,)  # b + e
    assert result.label((3, 5)) == f


def test_identity_acts_trivially():
    A5 = ground_a(5)
    lam = _labeled(A5, Z5, {(1, 2): (4,), (2, 3): (1,), (3, 5): (4,)})
    unit = unlabeled(A5, [(i,) for i in range(1, 6)]).relabel({})
    unit = LabeledSetPartition(A5, Z5, [(i,) for i in range(1, 6)], {})
    assert plus(unit, lam) == lam


def test_type_b_display():
    B3 = ground_b(3)
    alpha = _labeled(
        B3,
        Z3,
        {
            (-3, -2): (1,),
            (-2, -1): (2,),
            (-1, 0): (1,),
            (0, 1): (2,),
            (1, 2): (1,),
            (2, 3): (2,),
        },
    )
    lam = _labeled(B3, Z3, {(-3, 1): (1,), (-1, 3): (2,)})
    result = plus(alpha, lam)
    assert result.arcs() == frozenset({(-3, 1), (-1, 3), (-2, -1), (1, 2)})
    assert result.label((-2, -1)) == (2,)
    assert result.label((1, 2)) == (1,)
    assert result.label((-3, 1)) == (1,)


def test_plus_argument_errors():
    A3 = ground_a(3)
    lam = unlabeled(A3, [(1, 3), (2,)])
    nonlinear = unlabeled(A3, [(1, 3), (2,)])
    with pytest.raises(StructuralError):
        plus(nonlinear, lam)
    other = unlabeled(ground_a(4), [(i,) for i in range(1, 5)])
    with pytest.raises(StructuralError):
        plus(other, lam)
    wrong_group = LabeledSetPartition(A3, Z3, [(1, 2), (3,)], {(1, 2): (1,)})
    with pytest.raises(StructuralError):
        plus(wrong_group, lam)


def test_matrix_route_agrees_exhaustively():
    for lspec, pspec in (
        (FamilySpec("L", 4, (Z3,)), FamilySpec("PI", 4, (Z3,))),
        (FamilySpec("L_B", 2, (Z3,)), FamilySpec("P_B", 2, (Z3,))),
        (FamilySpec("L_D", 3, (Z2,)), FamilySpec("P_D", 3, (Z2,))),
    ):
        for alpha in enumerate_family(lspec):
            for lam in enumerate_family(pspec):
                assert plus(alpha, lam) == plus_via_matrix(alpha, lam)


def test_group_action_laws():
    for lspec, pspec in (
        (FamilySpec("L", 4, (Z3,)), FamilySpec("PI", 4, (Z3,))),
        (FamilySpec("L_B", 2, (Z3,)), FamilySpec("P_B", 2, (Z3,))),
    ):
        linear = list(enumerate_family(lspec))
        members = list(enumerate_family(pspec))
        for alpha, beta in itertools.product(linear, repeat=2):
            combined = plus(alpha, beta)
            assert combined in set(linear)  # closure
            for lam in members[:: max(1, len(members) // 12)]:
                assert plus(alpha, plus(beta, lam)) == plus(combined, lam)


def test_action_preserves_noncrossing_families():
    for alpha in enumerate_family(FamilySpec("L", 4, (Z3,))):
        for lam in enumerate_family(FamilySpec("NC", 4, (Z3,))):
            assert classify(plus(alpha, lam)).noncrossing
    for alpha in enumerate_family(FamilySpec("L_B", 2, (Z3,))):
        for lam in enumerate_family(FamilySpec("NC_TILDE_B", 2, (Z3,))):
            result = plus(alpha, lam)
            assert classify(result).nc_tilde and classify(result).type_symmetric


def test_orbit_examples():
    ds = DirectSum(Z3, Z3)

    def embed(p):
        labels = {a: ds.embed_a(v) for a, v in p.label_map().items()}
        return LabeledSetPartition(p.ground, ds.spec, p.blocks, labels)

    acting = acting_family(FamilySpec("PI_AB", 3, (Z3, Z3)))
    # one block {1,2}: no singletons, orbit of the shift is a fixed point
    lam = embed(_labeled(ground_a(2), Z3, {(1, 2): (1,)}))
    report = orbit(embed(maps.shift_a(_strip(lam))), acting)
    assert report.size == 1

    # all singletons: s = 2, orbit size 9
    singles = LabeledSetPartition(ground_a(2), ds.spec, [(1,), (2,)], {})
    report = orbit(maps.shift(singles), acting)
    assert report.size == 9
    assert report.representative == maps.shift(singles)

    # type B: a two-singleton member of the D family has orbit size |B|^(2/2)
    acting_b = acting_family(FamilySpec("P_B_AB", 3, (Z3, Z3)))
    lam_d = LabeledSetPartition(
        ground_d(3),
        ds.spec,
        [(-3, -2), (2, 3), (-1,), (1,)],
        {(-3, -2): ds.embed_a((1,)), (2, 3): ds.embed_a((2,))},
    )
    assert len(lam_d.singleton_blocks()) == 2
    report = orbit(maps.shift(lam_d), acting_b)
    assert report.size == 3


def _strip(p):
    # drop the zero padding of a pure-A labeling back to the A group
    k = 1
    labels = {a: v[:k] for a, v in p.label_map().items()}
    return LabeledSetPartition(p.ground, Z3, p.blocks, labels)


def test_orbit_decomposition_counts():
    reports = orbit_decomposition(FamilySpec("NC_AB", 3, (Z2, Z2)))
    assert len(reports) == 2  # poor noncrossing partitions of a 2-set
    reports = orbit_decomposition(FamilySpec("PI_AB", 3, (Z2, Z2)))
    assert len(reports) == 2
    total = sum(r.size for r in reports)
    assert total == len(list(enumerate_family(FamilySpec("PI_AB", 3, (Z2, Z2)))))
    for r in reports:
        assert len(r.two_regular_members) == 1
        assert classify(r.representative).two_regular


def test_orbit_decomposition_rejects_single_group_families():
    with pytest.raises(ValueError):
        orbit_decomposition(FamilySpec("PI", 3, (Z2,)))


def test_each_orbit_has_unique_two_regular_member():
    for spec in (
        FamilySpec("PI_AB", 4, (Z2, Z3)),
        FamilySpec("NC_TILDE_B_AB", 2, (Z3, Z2)),
        FamilySpec("P_D_AB", 3, (Z2, Z2)),
    ):
        for report in orbit_decomposition(spec):
            assert len(report.two_regular_members) == 1


def test_involution_examples():
    p = unlabeled(ground_a(8), [(1, 4, 5), (2, 3), (6, 7), (8,)])
    q = plus_involution(p)
    assert q.blocks == canonical_blocks([(1, 4), (2,), (3,), (5, 6), (7, 8)])
    assert plus_involution(q) == p

    singles = unlabeled(ground_a(5), [(i,) for i in range(1, 6)])
    assert plus_involution(singles).blocks == (tuple(range(1, 6)),)

    crossing = unlabeled(ground_a(4), [(1, 3), (2, 4)])
    assert plus_involution(crossing) == crossing  # |blocks| 2 != n+1-2

    with pytest.raises(StructuralError):
        plus_involution(
            LabeledSetPartition(ground_a(2), Z3, [(1, 2)], {(1, 2): (1,)})
        )


def test_involution_is_involution_on_bd_grounds():
    from arcact.families import family_shapes

    for n in range(4):
        for code, ground in (("P_B", ground_b(n)), ("P_D", ground_d(n))):
            for blocks in family_shapes(code, n):
                p = unlabeled(ground, blocks)
                assert plus_involution(plus_involution(p)) == p
