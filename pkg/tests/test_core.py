import pytest

from arcact.core import (
    InvalidArcSetError,
    LabeledSetPartition,
    StructuralError,
    UnsupportedGroundError,
    arcs_of,
    blocks_from_arcs,
    canonical_blocks,
    classify,
    from_rook,
    ground_a,
    ground_b,
    ground_d,
    is_noncrossing,
    negate,
    negate_labels,
    partition_from_json,
    render_ascii,
    rook_noncrossing,
    rook_sort_key,
    to_rook,
    unlabeled,
)
from arcact.families import FamilySpec, enumerate_family
from arcact.groups import GroupSpec

Z2 = GroupSpec((2,))
Z3 = GroupSpec((3,))


def test_grounds():
    assert ground_a(4).elements() == (1, 2, 3, 4)
    assert ground_b(2).elements() == (-2, -1, 0, 1, 2)
    assert ground_d(2).elements() == (-2, -1, 1, 2)
    assert ground_b(2).size == 5 and ground_d(3).size == 6
    g = ground_d(3)
    for x in g.elements():
        assert g.from_position(g.position(x)) == x


def test_arcs_of_standard_examples():
    assert arcs_of([(1, 3, 4, 7), (2, 6), (5,)]) == frozenset(
        {(1, 3), (2, 6), (3, 4), (4, 7)}
    )
    assert arcs_of([(1,), (2,), (3,)]) == frozenset()
    assert arcs_of([(1, 7), (2, 3, 4, 6), (5,)]) == frozenset(
        {(1, 7), (2, 3), (3, 4), (4, 6)}
    )


def test_arcs_of_rejects_overlap():
    with pytest.raises(StructuralError):
        arcs_of([(1, 2), (2, 3)])


def test_blocks_from_arcs():
    assert blocks_from_arcs(ground_a(3), {(1, 3)}) == ((1, 3), (2,))
    assert blocks_from_arcs(ground_a(7), {(1, 3), (2, 6), (3, 4), (4, 7)}) == (
        canonical_blocks([(1, 3, 4, 7), (2, 6), (5,)])
    )
    assert blocks_from_arcs(ground_a(2), set()) == ((1,), (2,))


def test_blocks_from_arcs_rejects_shared_endpoints():
    with pytest.raises(InvalidArcSetError):
        blocks_from_arcs(ground_a(4), {(1, 3), (1, 4)})
    with pytest.raises(InvalidArcSetError):
        blocks_from_arcs(ground_a(4), {(1, 3), (2, 3)})
    with pytest.raises(InvalidArcSetError):
        blocks_from_arcs(ground_a(4), {(3, 1)})


def test_arc_block_round_trips():
    for spec in (FamilySpec("PI", 4, (Z2,)), FamilySpec("P_B", 2, (Z3,))):
        for p in enumerate_family(spec):
            assert blocks_from_arcs(p.ground, p.arcs()) == p.blocks
            assert arcs_of(p.blocks) == p.arcs()


def test_classify_examples():
    p = unlabeled(ground_a(4), [(1, 3), (2, 4)])
    flags = classify(p)
    assert not flags.noncrossing and flags.nonnesting

    q = LabeledSetPartition(
        ground_b(2),
        Z3,
        blocks_from_arcs(ground_b(2), {(-2, 1), (-1, 2)}),
        {(-2, 1): (1,), (-1, 2): (2,)},
    )
    fq = classify(q)
    assert not fq.noncrossing and fq.nc_tilde and fq.type_symmetric

    r = unlabeled(ground_a(3), [(1, 2), (3,)])
    fr = classify(r)
    assert not fr.two_regular and fr.poor and not fr.feasible


def test_type_symmetric_needs_label_condition():
    blocks = blocks_from_arcs(ground_b(2), {(-2, 1), (-1, 2)})
    bad = LabeledSetPartition(ground_b(2), Z3, blocks, {(-2, 1): (1,), (-1, 2): (1,)})
    assert not classify(bad).type_symmetric


def test_type_symmetric_rejects_self_mirrored_arc():
    p = unlabeled(ground_b(1), [(-1, 1), (0,)])
    assert not classify(p).type_symmetric


def test_type_symmetric_consequences():
    for n in (1, 2, 3):
        for spec in (FamilySpec("P_B", n, (Z3,)), FamilySpec("P_D", n, (Z3,))):
            for p in enumerate_family(spec):
                assert classify(p).type_symmetric
                assert len(p.arcs()) % 2 == 0
                assert all(j != -i for i, j in p.arcs())
                self_neg = [
                    b for b in p.blocks if tuple(sorted(-x for x in b)) == b
                ]
                assert len(self_neg) == (1 if spec.family == "P_B" else 0)


def test_to_rook_examples():
    p = LabeledSetPartition(ground_a(3), Z2, [(1, 3), (2,)], {(1, 3): (1,)})
    assert to_rook(p).entry_map() == {(1, 3): (1,)}

    q = LabeledSetPartition(
        ground_b(1), Z3, [(-1, 0, 1)], {(-1, 0): (1,), (0, 1): (2,)}
    )
    assert to_rook(q).entry_map() == {(1, 2): (1,), (2, 3): (2,)}

    empty = unlabeled(ground_a(3), [(1,), (2,), (3,)])
    assert to_rook(empty).entry_map() == {}


def test_rook_round_trip_exhaustive():
    for n in range(6):
        for p in enumerate_family(FamilySpec("PI", n, (Z3,))):
            assert from_rook(p.ground, p.group, to_rook(p)) == p


def test_rook_noncrossing_predicate_matches():
    for n in range(7):
        for p in enumerate_family(FamilySpec("PI", n, (Z2,))):
            assert rook_noncrossing(to_rook(p)) == is_noncrossing(p.arcs())


def test_negate():
    p = unlabeled(ground_d(2), [(-2, 1), (-1, 2)])
    assert negate(p) == p
    q = unlabeled(ground_d(2), [(-1,), (1, 2), (-2,)])
    assert negate(q).blocks == canonical_blocks([(1,), (-2, -1), (2,)])
    with pytest.raises(UnsupportedGroundError):
        negate(unlabeled(ground_a(2), [(1, 2)]))


def test_negate_on_symmetric_partitions():
    # with mirrored labels, negating the ground negates every label
    for p in enumerate_family(FamilySpec("P_B", 2, (Z3,))):
        assert negate(p) == negate_labels(p)
        assert negate(negate(p)) == p


def test_label_validation():
    with pytest.raises(StructuralError):
        LabeledSetPartition(ground_a(2), Z2, [(1, 2)], {})
    with pytest.raises(StructuralError):
        LabeledSetPartition(ground_a(2), Z2, [(1, 2)], {(1, 2): (0,)})
    with pytest.raises(StructuralError):
        LabeledSetPartition(ground_a(2), Z2, [(1,), (2,)], {(1, 2): (1,)})
    with pytest.raises(StructuralError):
        LabeledSetPartition(ground_a(3), Z2, [(1, 2)], {(1, 2): (1,)})


def test_canonical_text_and_json():
    p = LabeledSetPartition(
        ground_d(2),
        Z3,
        blocks_from_arcs(ground_d(2), {(-2, 1), (-1, 2)}),
        {(-2, 1): (1,), (-1, 2): (2,)},
    )
    assert p.text() == "{-2,1}{-1,2} (-2,1)=1 (-1,2)=2"
    assert partition_from_json(p.to_json()) == p


def test_rook_sort_key_is_total():
    parts = list(enumerate_family(FamilySpec("PI", 3, (Z3,))))
    keys = [rook_sort_key(p) for p in parts]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(parts)


def test_render_golden_singletons():
    p = unlabeled(ground_a(3), [(1,), (2,), (3,)])
    assert render_ascii(p) == "1 2 3"


def test_render_golden_single_arc():
    p = LabeledSetPartition(ground_a(3), Z2, [(1, 3), (2,)], {(1, 3): (1,)})
    assert render_ascii(p) == ".---1---.\n1   2   3"


def test_render_golden_standard_display():
    p = unlabeled(ground_a(7), [(1, 3, 4, 7), (2, 6), (5,)])
    expected = "\n".join(
        [
            "    .-------1-------.",
            ".---1---.   .-----1-----.",
            "        .-1-.",
            "1   2   3   4   5   6   7",
        ]
    )
    assert render_ascii(p) == expected
    assert len([i for i, j, v in p.labels]) == 4
