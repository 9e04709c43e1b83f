import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from fpgroups import homology as H
from fpgroups.presentations import Presentation
from fpgroups.words import parse_word


def random_matrix(rng, rows, cols, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def check_snf(a, cols=None):
    res = H.smith_normal_form(a, cols)
    rows = len(a)
    ncols = len(a[0]) if rows else cols
    d = H.matmul(H.matmul(res.U, a), res.V) if rows else []
    for i in range(rows):
        for j in range(ncols):
            assert d[i][j] == (res.diag[i] if i == j else 0)
    assert H.det(res.U) in (1, -1)
    assert H.det(res.V) in (1, -1)
    nz = [x for x in res.diag if x]
    assert all(x > 0 for x in nz)
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))
    assert res.diag[len(nz):] == [0] * (len(res.diag) - len(nz))
    return res


def test_snf_examples():
    assert H.smith_normal_form([[2, 0], [0, 3]]).diag == [1, 6]
    assert H.smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]).diag == [2, 6, 12]
    assert H.smith_normal_form([[0, 0], [0, 0]]).diag == [0, 0]
    assert H.smith_normal_form([], cols=3).diag == []


def test_snf_recomposition_random():
    rng = random.Random(1)
    for _ in range(500):
        a = random_matrix(rng, rng.randint(1, 8), rng.randint(1, 8))
        res = check_snf(a)
        assert res.rank == H.rank_bareiss(a)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_snf_matches_sympy(rows, cols, data):
    a = data.draw(st.lists(st.lists(st.integers(-9, 9), min_size=cols, max_size=cols),
                           min_size=rows, max_size=rows))
    ours = check_snf(a).diag
    theirs = sympy_snf(Matrix(a), domain=ZZ)
    expect = [abs(int(theirs[i, i])) for i in range(min(rows, cols))]
    assert ours == expect


def test_det_matches_sympy():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(1, 6)
        a = random_matrix(rng, n, n)
        assert H.det(a) == Matrix(a).det()
    assert H.det([]) == 1


def test_homology_of_surface_group():
    p = Presentation(("a", "b"), (parse_word("a b a^-1 b^-1"),))
    h = H.presentation_homology(p)
    assert (h.H0.betti, h.H1.betti, h.H2.betti) == (1, 2, 1)
    assert h.euler_characteristic() == H.euler_characteristic(p) == 0


def test_homology_with_torsion():
    p = Presentation(("a", "b"), (parse_word("a^2"), parse_word("b^6 a^2")))
    h = H.presentation_homology(p)
    assert h.H1 == H.HomologyGroup(0, (2, 6))
    assert str(h.H1) == "Z/2 + Z/6"
    assert h.H2.betti == 0
    assert str(H.HomologyGroup(3)) == "Z^3"
    assert H.HomologyGroup(0).is_trivial()


def test_homology_of_W(W):
    h = H.presentation_homology(W)
    assert h.H1 == H.HomologyGroup(1)
    assert h.H2 == H.HomologyGroup(3)


def test_homology_of_R(R):
    h = H.presentation_homology(R)
    assert H.euler_characteristic(R) == 8
    assert h.euler_characteristic() == 8
    assert h.expected_boundary_beta2 == 14


def test_row_span():
    a = [[2, 0], [0, 3]]
    assert H.in_row_span(a, [4, 3])
    assert not H.in_row_span(a, [1, 0])
    assert H.in_row_span([], [0, 0], cols=2)
    assert not H.in_row_span([], [1, 0], cols=2)
