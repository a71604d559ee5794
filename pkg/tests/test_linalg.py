"""Exact linear algebra: LinComb arithmetic, ranks, kernels, solving."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from operads.linalg import (
    GradedEndo,
    LinComb,
    exact_rank,
    frac_str,
    kernel_basis,
    lincomb_json,
    linear_solve,
    mat_mul,
    same_column_space,
    serialize_key,
    tensor_transpose,
)


# --- a deliberately naive oracle for ranks ---------------------------------

def naive_rank(m):
    """Textbook Gaussian elimination over Fraction, row by row."""
    rows = [[Fraction(x) for x in row] for row in m]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][c]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def test_exact_rank_against_naive_oracle_many_samples():
    rng = random.Random(20240817)
    for _ in range(1000):
        nr = rng.randint(1, 6)
        nc = rng.randint(1, 6)
        m = [
            [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(nc)]
            for _ in range(nr)
        ]
        assert exact_rank(m) == naive_rank(m)


def test_rank_of_rigged_low_rank_matrices():
    rng = random.Random(7)
    for _ in range(200):
        # build rank <= 2 matrices as outer-product sums
        nr, nc = rng.randint(2, 5), rng.randint(2, 5)
        u1 = [rng.randint(-3, 3) for _ in range(nr)]
        v1 = [rng.randint(-3, 3) for _ in range(nc)]
        u2 = [rng.randint(-3, 3) for _ in range(nr)]
        v2 = [rng.randint(-3, 3) for _ in range(nc)]
        m = [[u1[i] * v1[j] + u2[i] * v2[j] for j in range(nc)] for i in range(nr)]
        assert exact_rank(m) <= 2
        assert exact_rank(m) == naive_rank(m)


def test_kernel_basis_annihilates_and_matches_rank_nullity():
    rng = random.Random(99)
    for _ in range(200):
        nr, nc = rng.randint(1, 5), rng.randint(1, 5)
        m = [[Fraction(rng.randint(-3, 3)) for _ in range(nc)] for _ in range(nr)]
        ker = kernel_basis(m)
        assert len(ker) == nc - exact_rank(m)
        for v in ker:
            for row in m:
                assert sum(a * b for a, b in zip(row, v)) == 0
        # kernel vectors are independent
        if ker:
            assert exact_rank(ker) == len(ker)


def test_linear_solve_roundtrip_and_inconsistency():
    rng = random.Random(4)
    for _ in range(200):
        nr, nc = rng.randint(1, 5), rng.randint(1, 5)
        m = [[Fraction(rng.randint(-3, 3)) for _ in range(nc)] for _ in range(nr)]
        x = [Fraction(rng.randint(-3, 3)) for _ in range(nc)]
        rhs = [sum(a * b for a, b in zip(row, x)) for row in m]
        sol = linear_solve(m, rhs)
        assert sol is not None
        assert [sum(a * b for a, b in zip(row, sol)) for row in m] == rhs
    assert linear_solve([[1, 1], [1, 1]], [0, 1]) is None


coeffs = st.fractions(
    min_value=-5, max_value=5, max_denominator=6
)
keys = st.sampled_from(["x", "y", "z", "xy", "yx", "xx"])
lincombs = st.dictionaries(keys, coeffs, max_size=4).map(LinComb)


@given(lincombs, lincombs, lincombs)
def test_lincomb_addition_is_associative_and_commutative(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a


@given(lincombs, lincombs, coeffs)
def test_lincomb_scaling_distributes(a, b, s):
    assert (a + b).scale(s) == a.scale(s) + b.scale(s)
    assert a - a == LinComb.zero()


@given(lincombs, lincombs, lincombs)
def test_tensor_is_bilinear_and_associative(a, b, c):
    assert a.tensor(b + c) == a.tensor(b) + a.tensor(c)
    assert (a.tensor(b)).tensor(c) == a.tensor(b.tensor(c))


@given(lincombs, lincombs)
def test_tensor_transpose_is_an_involution(a, b):
    t = a.tensor(b)
    assert tensor_transpose(tensor_transpose(t)) == t


def test_lincomb_never_stores_zeros():
    lc = LinComb({"x": 1}) + LinComb({"x": -1})
    assert not lc
    assert len(lc) == 0
    assert LinComb({"x": 0}).terms == {}


def test_serialization_helpers():
    assert frac_str(Fraction(3, 2)) == "3/2"
    assert frac_str(Fraction(-4, 2)) == "-2"
    assert serialize_key(("xy", "z")) == "xy|z"
    assert serialize_key("xy") == "xy"
    lc = LinComb({("y", "x"): Fraction(1, 3), ("x", "y"): -2})
    assert lincomb_json(lc) == {"x|y": "-2", "y|x": "1/3"}


def test_mat_mul_matches_definition():
    a = [[1, 2], [3, 4]]
    b = [[5, 6], [7, 8]]
    assert mat_mul(a, b) == [[19, 22], [43, 50]]


def test_same_column_space():
    a = [[1, 0], [0, 1], [0, 0]]
    b = [[1, 1], [1, -1], [0, 0]]
    c = [[1, 0], [0, 0], [0, 1]]
    assert same_column_space(a, b)
    assert not same_column_space(a, c)


def test_graded_endo_roundtrip_and_algebra():
    bases = {1: ["x", "y"], 2: ["xx", "xy", "yx", "yy"]}

    def swap_letters(lc):
        table = str.maketrans("xy", "yx")
        return LinComb((k.translate(table), c) for k, c in lc.items())

    s = GradedEndo.from_function(bases, swap_letters)
    ident = GradedEndo.identity(bases)
    assert s.compose(s) == ident
    assert s.apply(LinComb.of("xy")) == LinComb.of("yx")
    assert (s + s).scale(Fraction(1, 2)) == s
    assert (s - s).rank(2) == 0
    assert s.rank(1) == 2 and s.rank(2) == 4


def test_graded_endo_rejects_images_outside_basis():
    bases = {1: ["x"]}
    with pytest.raises(ValueError):
        GradedEndo.from_function(bases, lambda lc: LinComb.of("zz"))
