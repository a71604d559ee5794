"""The duplicial Koszul bicomplex and its total-complex homology."""

import pytest

from operads.homology import (
    build_bicomplex,
    check_differentials,
    euler_characteristic,
    homology_report,
    total_dims,
    total_homology_dims,
    total_matrix,
)
from operads.linalg import exact_rank
from operads.trees import catalan


def test_bases_count_matches_composition_formula():
    # Tot_m in internal degree n is (m+1) copies of the (m+1)-fold
    # duplicial monomial tuples of total degree n
    for n in range(1, 6):
        bc = build_bicomplex(n)
        dims = total_dims(bc)
        assert len(dims) == n
        for m in range(n):
            assert dims[m] == (m + 1) * len(bc.bases[m])
        assert dims[0] == catalan(n)


def test_total_dims_degree_5_pinned():
    assert total_dims(5) == [42, 96, 81, 32, 5]


@pytest.mark.parametrize("n", range(1, 6))
def test_differentials_square_to_zero_and_anticommute(n):
    assert check_differentials(n)


def test_total_matrix_composes_to_zero():
    bc = build_bicomplex(4)
    for m in range(1, 4):
        d_m = total_matrix(bc, m)
        d_next = total_matrix(bc, m + 1) if m + 1 < 4 else None
        if d_next:
            comp = [
                [
                    sum(d_m[i][k] * d_next[k][j] for k in range(len(d_next)))
                    for j in range(len(d_next[0]))
                ]
                for i in range(len(d_m))
            ]
            assert all(all(c == 0 for c in row) for row in comp)


def test_homology_is_concentrated_in_the_bottom_degree():
    assert total_homology_dims(1) == [1]
    for n in range(2, 6):
        assert total_homology_dims(n) == [0] * n


def test_euler_characteristic_matches_alternating_sum():
    for n in range(1, 6):
        dims = total_dims(n)
        alt = sum((-1) ** m * d for m, d in enumerate(dims))
        assert euler_characteristic(n) == alt
    assert [euler_characteristic(n) for n in range(1, 6)] == [1, 0, 0, 0, 0]


def test_homology_report_shape():
    report = homology_report(3)
    assert report["internalDegree"] == 3
    assert report["differentialChecks"] is True
    assert report["totDims"] == total_dims(3)
    assert report["homologyDims"] == [0, 0, 0]
    assert "shiftConvention" in report
    light = homology_report(3, check_only=True)
    assert "homologyDims" not in light
