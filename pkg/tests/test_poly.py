import pytest

from arcact.poly import (
    FAMILY_NAMES,
    BiPoly,
    X,
    Y,
    bell_univariate,
    bellb_univariate,
    cat_univariate,
    catalan,
    catb_closed,
    catd_closed,
    enumerated_family,
    family,
    feasible_closed,
    motzkin_closed,
    number_tables,
    sequence,
    transfer_family,
)


def test_arithmetic():
    one_plus_x = BiPoly.const(1) + X
    assert one_plus_x * one_plus_x == BiPoly({(0, 0): 1, (1, 0): 2, (2, 0): 1})
    p = BiPoly({(0, 0): 1, (0, 1): 2, (1, 0): 1, (0, 2): 1})
    assert p.eval_int(1, 1) == 5
    assert p * BiPoly.zero() == BiPoly.zero()
    assert (X + Y) ** 2 == X * X + 2 * X * Y + Y * Y
    assert (X - Y).eval_int(3, 5) == -2
    assert str(BiPoly.zero()) == "0"
    assert p.scale_x(2).eval_int(1, 1) == 1 + 2 + 2 + 1
    assert (X * Y).subst_y_diag() == X * X


def test_number_tables():
    assert number_tables("narayana", 4, 2) == 6
    assert number_tables("catalan", 3) == 5
    assert [number_tables("stirling2", 4, k) for k in range(1, 5)] == [1, 7, 6, 1]
    assert number_tables("assoc_stirling2", 6, 2) == 25
    assert number_tables("whitney2_B", 2, 1) == 4
    assert number_tables("binomial", 5, 2) == 10
    assert number_tables("central_binomial", 3) == 20
    with pytest.raises(ValueError):
        number_tables("stirling2", 3, 4)
    with pytest.raises(ValueError):
        number_tables("narayana", -1, 0)
    with pytest.raises(ValueError):
        number_tables("nope", 1, 1)


def test_family_examples():
    assert family("Bell", 3) == BiPoly({(0, 0): 1, (1, 0): 1, (0, 1): 2, (0, 2): 1})
    assert family("Cat_B", 2).subst_y_diag() == BiPoly(
        {(0, 0): 1, (1, 0): 4, (2, 0): 1}
    )
    assert family("M", 4) == BiPoly({(0, 0): 1, (1, 0): 6, (2, 0): 2})
    assert family("F", 4) == BiPoly({(2, 0): 3, (3, 0): 1})
    with pytest.raises(ValueError):
        family("nope", 3)
    with pytest.raises(ValueError):
        family("Bell", -1)


def test_transfer_equals_enumeration():
    for name in FAMILY_NAMES:
        n_max = 6 if name in ("Bell", "Cat", "F", "M") else 4
        for n in range(n_max + 1):
            assert transfer_family(name, n) == enumerated_family(name, n), (name, n)


def test_closed_forms_equal_transfer():
    for n in range(9):
        assert transfer_family("Bell", n).subst_y_diag() == bell_univariate(n)
        assert transfer_family("Cat", n).subst_y_diag() == cat_univariate(n)
        assert transfer_family("Bell_B", n).subst_y_diag() == bellb_univariate(n)
        assert transfer_family("Bell_D", n).subst_y_diag() == bell_univariate(
            n
        ).scale_x(2)
        assert transfer_family("Cat_B", n).subst_y_diag() == catb_closed(n)
        assert transfer_family("Cat_D", n).subst_y_diag() == catd_closed(n)
        assert transfer_family("M", n) == motzkin_closed(n)
        assert transfer_family("F", n) == feasible_closed(n)
        assert family("M_B", n) == family("M_D", n)


def test_diagonal_specialisations():
    # Bell and Cat at y = x are the block-count generating polynomials
    for n in range(7):
        assert bell_univariate(n) == sum(
            (
                BiPoly.term(number_tables("stirling2", n, k), n - k)
                for k in range(n + 1)
            ),
            BiPoly.zero(),
        )
        assert cat_univariate(n) == sum(
            (
                BiPoly.term(number_tables("narayana", n, k), n - k)
                for k in range(n + 1)
            ),
            BiPoly.zero(),
        )


def test_central_binomial_evaluations():
    from math import comb

    for n in range(11):
        assert catb_closed(n).eval_int(1) == comb(2 * n, n)
    for n in range(10):
        assert catd_closed(n + 1).eval_int(1) == comb(2 * n + 1, n)


def test_golden_sequences():
    assert [sequence("Bell_B", n) for n in range(7)] == [1, 2, 6, 24, 116, 648, 4088]
    assert [sequence("Bell_D", n) for n in range(7)] == [1, 1, 3, 11, 49, 257, 1539]
    assert [sequence("M_B", n) for n in range(7)] == [1, 1, 3, 7, 19, 51, 141]
    assert [sequence("M_B_tilde", n) for n in range(7)] == [1, 2, 5, 13, 35, 96, 267]
    assert [sequence("Bell", n) for n in range(6)] == [1, 1, 2, 5, 15, 52]
    assert [sequence("Cat", n) for n in range(6)] == [catalan(n) for n in range(6)]
    # larger indices are computed, not table lookups
    assert sequence("M_B", 12) == 73789


def test_latex_and_str_are_deterministic():
    p = family("Cat", 3)
    assert str(p) == "1 + 2*y + x + y^2"
    assert p.latex() == "1 + 2y + x + y^{2}"
