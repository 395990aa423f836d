import pytest
import sympy

from rppcrystal.errors import NotSymmetric
from rppcrystal.shapes import Partition, partitions_of, skew, skew_corpus
from rppcrystal.symfunc import (
    SparsePoly, elegant_count, expand_in_schur, g_poly, g_refined, h_coeffs, h_coeffs_refined,
    lr_classical, marginalize, refined_from_coeffs, schur, skew_schur, t_count,
)


def poly(m, *terms, nt=0):
    return SparsePoly(m, nt, {tuple(e): c for e, c in terms})


def bialternant(nu, m):
    """Schur polynomial as a ratio of alternants, computed with sympy."""
    xs = sympy.symbols(f"x1:{m + 1}")
    parts = list(nu) + [0] * (m - len(nu))
    num = sympy.Matrix(m, m, lambda i, j: xs[i] ** (parts[j] + m - 1 - j))
    den = sympy.Matrix(m, m, lambda i, j: xs[i] ** (m - 1 - j))
    q = sympy.Poly(sympy.cancel(num.det() / den.det()), *xs)
    return SparsePoly(m, 0, {e: int(c) for e, c in q.terms()})


def test_arithmetic():
    a = poly(2, ((1, 0), 1), ((0, 1), 1))
    b = poly(2, ((1, 0), 1), ((0, 1), -1))
    assert a * b == poly(2, ((2, 0), 1), ((0, 2), -1))
    assert a - a == SparsePoly(2)
    assert (a * 3).terms == {(1, 0): 3, (0, 1): 3}
    assert str(a * b) == "1 * x1^2 - 1 * x2^2"
    with pytest.raises(ValueError):
        a + SparsePoly(3)


def test_big_coefficients_stay_exact():
    p = poly(1, ((1,), 1), ((0,), 1))
    q = SparsePoly.one(1)
    for _ in range(70):
        q = q * p
    assert q.terms[(35,)] == 112186277816662845432


def test_schur_examples():
    assert schur((1,), 2) == poly(2, ((1, 0), 1), ((0, 1), 1))
    assert schur((2, 1), 2) == poly(2, ((2, 1), 1), ((1, 2), 1))
    assert schur((1, 1, 1), 2).is_zero()


def test_schur_matches_bialternant():
    for m in (1, 2, 3):
        for n in range(6):
            for nu in partitions_of(n):
                if len(nu) <= m:
                    assert schur(tuple(nu), m) == bialternant(nu, m)


def test_skew_schur_examples():
    assert skew_schur(skew((2, 1), (1,)), 2) == poly(2, ((2, 0), 1), ((1, 1), 2), ((0, 2), 1))
    assert skew_schur(skew((2, 1), (2, 1)), 2) == SparsePoly.one(2)
    assert skew_schur(skew((2, 2), (1, 1)), 2) == poly(2, ((1, 1), 1))


def test_g_examples():
    assert g_poly(skew((1,)), 2) == poly(2, ((1, 0), 1), ((0, 1), 1))
    assert g_poly(skew((1, 1)), 2) == poly(2, ((1, 0), 1), ((0, 1), 1), ((1, 1), 1))
    assert g_poly(skew((2, 2)), 2) == poly(
        2, ((2, 0), 1), ((1, 1), 1), ((0, 2), 1), ((2, 1), 1), ((1, 2), 1), ((2, 2), 1)
    )


def test_g_refined_examples():
    assert g_refined(skew((1, 1)), 2) == poly(
        2, ((1, 0, 1), 1), ((1, 1, 0), 1), ((0, 1, 1), 1), nt=1
    )
    assert g_refined(skew((3,)), 2) == g_poly(skew((3,)), 2)
    for sh in skew_corpus(4):
        assert g_refined(sh, 2).set_t_to_one() == g_poly(sh, 2)
        assert g_refined(sh, 2).nt == t_count(sh)


def test_expand_in_schur():
    assert expand_in_schur(poly(2, ((2, 2), 1))) == {(2, 2): 1}
    assert expand_in_schur(g_poly(skew((2, 2)), 2)) == {(2, 2): 1, (2, 1): 1, (2,): 1}
    with pytest.raises(NotSymmetric):
        expand_in_schur(poly(2, ((1, 0), 1), ((0, 1), -1)))
    signed = schur((2, 1), 3) * 4 - schur((1, 1, 1), 3) * 7
    assert expand_in_schur(signed) == {(2, 1): 4, (1, 1, 1): -7}


@pytest.mark.parametrize(
    "outer, inner, expected",
    [
        ((2, 2), (), {(2, 2): 1, (2, 1): 1, (2,): 1}),
        ((1, 1), (), {(1, 1): 1, (1,): 1}),
        ((2, 1), (1,), {(2,): 1, (1, 1): 1}),
        ((0,), (), {(): 1}),
    ],
)
def test_h_coeffs_examples(outer, inner, expected):
    assert h_coeffs(skew(outer, inner), 2) == expected


def test_refined_examples():
    assert h_coeffs_refined(skew((1, 1)), 2) == {((1,), (1,)): 1, ((1, 1), ()): 1}
    assert all(alpha == () for (_, alpha) in h_coeffs_refined(skew((3,)), 3))
    for sh in skew_corpus(4):
        coeffs = h_coeffs_refined(sh, 3)
        assert marginalize(coeffs) == h_coeffs(sh, 3)
        assert refined_from_coeffs(coeffs, 3, t_count(sh)) == g_refined(sh, 3)


@pytest.mark.parametrize(
    "outer, inner, expected",
    [
        ((2, 1), (1,), {(2,): 1, (1, 1): 1}),
        ((3, 1), (), {(3, 1): 1}),
        ((2, 2), (1, 1), {(1, 1): 1}),
        ((3, 2, 1), (2, 1), {(3,): 1, (2, 1): 2, (1, 1, 1): 1}),
    ],
)
def test_lr_classical(outer, inner, expected):
    assert lr_classical(skew(outer, inner)) == expected


def test_lr_classical_against_skew_schur():
    for sh in skew_corpus(5):
        lr = lr_classical(sh)
        assert expand_in_schur(skew_schur(sh, 3)) == {nu: c for nu, c in lr.items() if len(nu) <= 3}


def test_elegant_count():
    assert elegant_count((2, 2), (2, 1)) == 1
    assert elegant_count((2, 2), (1, 1)) == 0
    assert elegant_count((3, 2), (3, 2)) == 1
    assert elegant_count((2,), (3,)) == 0


def test_symmetry_of_g():
    for sh in skew_corpus(5):
        g = g_poly(sh, 3)
        assert g.swap_x(1) == g and g.swap_x(2) == g


def test_top_component_is_skew_schur():
    sh = skew((3, 2, 1), (1,))
    g = g_poly(sh, 3)
    assert g.x_degree() == sh.size
    assert g.x_degree_part(sh.size) == skew_schur(sh, 3)


def test_partition_keys():
    keys = h_coeffs(skew((2, 2)), 3)
    assert all(isinstance(k, Partition) for k in keys)
