import random
from math import comb

import pytest

from arcact.core import (
    LabeledSetPartition,
    StructuralError,
    blocks_from_arcs,
    canonical_blocks,
    classify,
    ground_a,
    ground_b,
    ground_d,
    negate,
    unlabeled,
)
from arcact.families import FamilySpec, enumerate_dyck, enumerate_family, family_shapes
from arcact.groups import GroupSpec
from arcact.maps import (
    dyck_from_nonnesting,
    halve,
    matching_to_dyck,
    nn_from_dyck,
    shift_a,
    shift_b_to_d,
    shift_d_to_b,
    uncross,
    uncross_b,
    uncross_b_inverse,
    uncross_d_inverse,
    unshift,
)

Z2 = GroupSpec((2,))
Z3 = GroupSpec((3,))


def _labeled(ground, group, arcs):
    return LabeledSetPartition(ground, group, blocks_from_arcs(ground, arcs), dict(arcs))


def test_shift_a_display():
    lam = _labeled(ground_a(5), Z3, {(1, 2): (1,), (2, 4): (2,), (3, 5): (1,)})
    image = shift_a(lam)
    assert image.label_map() == {(1, 3): (1,), (2, 5): (2,), (3, 6): (1,)}
    assert classify(image).two_regular
    assert len(image.blocks) == len(lam.blocks) + 1
    assert unshift(image) == lam


def test_shift_no_arcs():
    lam = unlabeled(ground_a(2), [(1,), (2,)])
    assert shift_a(lam).blocks == ((1,), (2,), (3,))


def test_shift_poor_noncrossing_lands_noncrossing():
    for p in enumerate_family(FamilySpec("NC", 4, (Z3,))):
        if classify(p).poor:
            flags = classify(shift_a(p))
            assert flags.noncrossing and flags.two_regular


def test_unshift_round_trip_exhaustive():
    for p in enumerate_family(FamilySpec("PI", 4, (Z3,))):
        assert unshift(shift_a(p)) == p
    empty = unlabeled(ground_a(1), [(1,)])
    assert unshift(empty).ground == ground_a(0)


def test_unshift_requires_two_regular():
    with pytest.raises(StructuralError):
        unshift(unlabeled(ground_a(2), [(1, 2)]))


def test_shift_d_to_b_display():
    lam = _labeled(
        ground_d(3),
        Z3,
        {(-3, -2): (1,), (-2, 1): (2,), (-1, 2): (1,), (2, 3): (2,)},
    )
    image = shift_d_to_b(lam)
    assert image.ground == ground_b(3)
    assert image.label_map() == {
        (-3, -1): (1,),
        (-2, 1): (2,),
        (-1, 2): (1,),
        (1, 3): (2,),
    }
    assert classify(image).two_regular and classify(image).type_symmetric

    next_image = shift_b_to_d(image)
    assert next_image.ground == ground_d(4)
    assert next_image.label_map() == {
        (-4, -1): (1,),
        (-3, 2): (2,),
        (-2, 3): (1,),
        (1, 4): (2,),
    }
    assert unshift(next_image) == image
    assert unshift(image) == lam


def test_shift_center_arc():
    lam = _labeled(ground_b(2), Z3, {(-1, 0): (1,), (0, 1): (2,)})
    image = shift_b_to_d(lam)
    assert image.label_map() == {(-2, 1): (1,), (-1, 2): (2,)}
    assert classify(image).type_symmetric


def test_shift_empty_partition():
    lam = unlabeled(ground_d(2), [(-2,), (-1,), (1,), (2,)])
    assert shift_d_to_b(lam).blocks == ((-2,), (-1,), (0,), (1,), (2,))


def test_uncross_examples():
    a6 = ground_a(6)
    assert uncross(unlabeled(a6, [(1, 4), (2, 5), (3, 6)])).blocks == (
        canonical_blocks([(1, 6), (2, 5), (3, 4)])
    )
    a7 = ground_a(7)
    lam = unlabeled(a7, [(1, 3, 4, 7), (2, 6), (5,)])
    gam = unlabeled(a7, [(1, 7), (2, 3, 4, 6), (5,)])
    assert uncross(lam) == gam
    assert uncross(gam) == gam  # noncrossing fixed point


def test_uncross_block_count_and_bijection():
    for n in range(8):
        images = set()
        for p in enumerate_family(FamilySpec("NN", n)):
            q = uncross(p)
            assert len(q.blocks) == len(p.blocks)
            assert classify(q).noncrossing
            images.add(q)
        targets = set(enumerate_family(FamilySpec("NC", n, (Z2,))))
        assert images == targets


def test_uncross_commutes_with_negation():
    for n in range(4):
        for blocks in family_shapes("P_D", n):
            p = unlabeled(ground_d(n), blocks)
            assert uncross(negate(p)) == negate(uncross(p))


def test_uncross_pick_order_confluence():
    rng = random.Random(20240817)
    pool = [
        unlabeled(ground_a(7), blocks) for blocks in family_shapes("PI", 7)
    ]
    pool = [p for p in pool if not classify(p).noncrossing]
    for _ in range(1000):
        p = rng.choice(pool)
        assert uncross(p, rng) == uncross(p)


def test_uncross_b_display():
    b3 = ground_b(3)
    p = unlabeled(b3, blocks_from_arcs(b3, {(-3, 1), (-2, 0), (-1, 3), (0, 2)}))
    q = uncross_b(p)
    assert q.blocks == canonical_blocks([(-3, 3), (-2, 2), (-1, 1)])


def test_uncross_b_singletons():
    p = unlabeled(ground_b(2), [(-2,), (-1,), (0,), (1,), (2,)])
    assert uncross_b(p).blocks == ((-2,), (-1,), (1,), (2,))


def test_uncross_b_round_trip():
    for n in range(5):
        for blocks in family_shapes("NC_TILDE_B", n):
            p = unlabeled(ground_b(n), blocks)
            assert uncross_b_inverse(uncross_b(p)) == p
        for blocks in family_shapes("NC_TILDE_D", n):
            p = unlabeled(ground_d(n), blocks)
            assert uncross_d_inverse(uncross(p)) == p


def test_halve_display():
    lam = _labeled(
        ground_d(3),
        Z3,
        {(-3, -2): (1,), (-2, 1): (2,), (-1, 2): (1,), (2, 3): (2,)},
    )
    h = halve(lam)
    assert h.ground == ground_a(6)
    assert h.label_map() == {(1, 2): (1,), (2, 4): (2,)}


def test_halve_empty_and_arc_count():
    empty = unlabeled(ground_b(2), [(-2,), (-1,), (0,), (1,), (2,)])
    assert halve(empty).arcs() == frozenset()
    for p in enumerate_family(FamilySpec("P_B", 2, (Z3,))):
        assert len(halve(p).arcs()) == len(p.arcs()) // 2


def test_dyck_from_nonnesting_examples():
    singles = unlabeled(ground_a(3), [(1,), (2,), (3,)])
    assert dyck_from_nonnesting(singles).steps == "UUUDDD"
    p = unlabeled(ground_a(3), [(1, 2), (3,)])
    path = dyck_from_nonnesting(p)
    assert (2, 0) in path.valleys()
    with pytest.raises(StructuralError):
        dyck_from_nonnesting(unlabeled(ground_a(4), [(1, 4), (2, 3)]))


def test_dyck_bijection_round_trip():
    for n in range(8):
        paths = set()
        for p in enumerate_family(FamilySpec("NN", n)):
            path = dyck_from_nonnesting(p)
            assert nn_from_dyck(path, ground_a(n)) == p
            paths.add(path.steps)
        assert len(paths) == len(list(enumerate_dyck(n)))


def test_nnb_maps_to_symmetric_paths():
    for n in range(5):
        for p in enumerate_family(FamilySpec("NN_B", n)):
            assert dyck_from_nonnesting(p).is_symmetric()
        count = sum(1 for q in enumerate_dyck(2 * n) if q.is_symmetric())
        assert count == comb(2 * n, n)


def test_matching_to_dyck():
    assert matching_to_dyck(unlabeled(ground_a(2), [(1, 2)])).steps == "UD"
    assert matching_to_dyck(unlabeled(ground_a(4), [(1, 4), (2, 3)])).steps == "UUDD"
    assert matching_to_dyck(unlabeled(ground_a(4), [(1, 2), (3, 4)])).steps == "UDUD"
    with pytest.raises(StructuralError):
        matching_to_dyck(unlabeled(ground_a(3), [(1, 2), (3,)]))
    with pytest.raises(StructuralError):
        matching_to_dyck(unlabeled(ground_a(4), [(1, 3), (2, 4)]))


def test_matching_to_dyck_is_bijection():
    for k in range(1, 6):
        matchings = [
            unlabeled(ground_a(2 * k), blocks)
            for blocks in family_shapes("NC", 2 * k)
            if all(len(b) == 2 for b in blocks)
        ]
        images = {matching_to_dyck(p).steps for p in matchings}
        assert len(images) == len(matchings) == len(list(enumerate_dyck(k)))
