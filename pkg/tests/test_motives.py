"""Motive recursion, dimension formulas and the reported comparisons."""

import pytest

from chowlab.errors import UsageError
from chowlab.motives import (
    Motive,
    TATE,
    cd2_identity_check,
    decompose_step,
    dim_orthogonal,
    dim_unitary,
    dvamr_check,
    essential,
    essential_poincare,
    j_min,
    kvadrika_check,
    split_quadric_poincare,
    witt_decompose_whole,
)
from chowlab.polynomials import PoincarePolynomial


def test_dim_unitary_values():
    assert dim_unitary(4, 2) == 4
    assert dim_unitary(7, 0) == 0
    assert dim_unitary(6, 3) == 9 == 6 * 6 // 4
    with pytest.raises(UsageError):
        dim_unitary(4, 3)


def test_dim_orthogonal_values():
    assert dim_orthogonal(3, 1) == 4
    assert dim_orthogonal(5, 0) == 0
    assert dim_orthogonal(3, 2) == 5
    # the two stated instances pin the general formula
    for n in range(2, 10):
        for r in range(1, n // 2 + 1):
            assert dim_orthogonal(n, 2 * r - 1) == (2 * r - 1) * (2 * n - 3 * r + 1)
            assert dim_orthogonal(n, 2 * r) == r * (4 * n - 6 * r - 1)


def test_decompose_step_examples():
    assert decompose_step(2, 1) == Motive(
        ((essential(0, 0), 0), (essential(0, 0), 1))
    )
    assert decompose_step(4, 2) == Motive(
        ((essential(2, 1), 0), (essential(2, 1), 3))
    )
    assert decompose_step(4, 1) == Motive(
        ((essential(2, 0), 0), (essential(2, 1), 2), (essential(2, 0), 5))
    )


def test_decompose_step_matches_poincare():
    for n in range(2, 9):
        for r in range(1, n // 2 + 1):
            step = decompose_step(n, r)
            assert step.poincare() == essential_poincare(n, r)


def test_essential_poincare_examples():
    assert essential_poincare(2, 1) == [1, 1]
    assert essential_poincare(3, 1) == [1, 0, 0, 1]
    assert essential_poincare(4, 2) == [1, 1, 0, 1, 1]
    assert essential_poincare(1, 0) == [1]


def test_essential_poincare_closed_forms():
    for r in range(1, 5):
        even = essential_poincare(2 * r, r)
        assert even == PoincarePolynomial.exterior(2 * i - 1 for i in range(1, r + 1))
        odd = essential_poincare(2 * r + 1, r)
        assert odd == PoincarePolynomial.exterior(2 * i + 1 for i in range(1, r + 1))


def test_essential_poincare_palindromic_top_degree():
    for n in range(13):
        for r in range(n // 2 + 1):
            p = essential_poincare(n, r)
            assert p[0] == 1
            assert p.degree == dim_unitary(n, r)
            assert p.is_palindromic()


def test_split_quadric_poincare():
    assert split_quadric_poincare(2) == [1, 2, 1]
    assert split_quadric_poincare(3) == [1, 1, 2, 1, 1]
    assert split_quadric_poincare(1) == [2]


def test_kvadrika_even_binding():
    for n in range(2, 11, 2):
        report = kvadrika_check(n)
        assert report.binding and report.passed
        assert report.delta == ()


def test_kvadrika_odd_residual():
    for n in range(3, 10, 2):
        report = kvadrika_check(n)
        assert not report.binding
        assert report.passed  # informational
        expected = [0] * (n - 1) + [2]
        assert list(report.delta) == expected


def test_dvamr_positivity_and_skip():
    report = dvamr_check(2, 1, with_dominance=True)
    assert report.shift_even is None  # the n=2 parenthetical exclusion
    assert report.positivity and report.passed
    for n in range(2, 13):
        for r in range(1, n // 2 + 1):
            rep = dvamr_check(n, r, with_dominance=False)
            assert rep.positivity


def test_dvamr_shift_example():
    rep = dvamr_check(4, 2, with_dominance=False)
    assert rep.shift_odd == dim_orthogonal(4, 3) - dim_unitary(4, 2) == 9 - 4 == 5
    assert rep.shift_odd > 0


def test_dvamr_dominance_small():
    for n in range(2, 5):
        for r in range(1, n // 2 + 1):
            rep = dvamr_check(n, r, with_dominance=True)
            assert rep.passed, (n, r, rep.dominance)


def test_dvamr_dominance_n3_instance():
    rep = dvamr_check(3, 1)
    assert rep.shift_odd == 1
    assert rep.dominance["m=1"]


def test_j_min_and_cd2():
    assert j_min(8) == (0, 2, 4, 6)
    assert j_min(2) == (0,)
    with pytest.raises(UsageError):
        j_min(5)
    for n in range(2, 21, 2):
        assert cd2_identity_check(n)
    assert dim_unitary(6, 3) == 15 - 6


def test_witt_decompose_whole_examples():
    assert witt_decompose_whole(5, 1, 0) == Motive(
        ((essential(5, 1), 0),), speck_residual=True
    )
    m = witt_decompose_whole(3, 1, 1)
    assert m == Motive(((TATE, 0), (TATE, 3)), speck_residual=True)
    m = witt_decompose_whole(4, 1, 1)
    assert m == Motive(
        ((TATE, 0), (essential(2, 1), 2), (TATE, 5)), speck_residual=True
    )


def test_witt_decompose_full_split_matches_poincare():
    # fully split: only Tate summands remain and they realize the essential part
    for n in range(2, 8):
        for r in range(1, n // 2 + 1):
            m = witt_decompose_whole(n, r, n // 2)
            assert all(a.kind != "Essential" for a, _ in m.summands)
            tate = Motive(m.summands)
            assert tate.poincare() == essential_poincare(n, r)


def test_motive_json():
    m = witt_decompose_whole(4, 1, 1)
    data = m.to_json()
    assert data["speck_residual"] is True
    assert {"atom": "Tate", "shift": 0} in data["summands"]
    assert {"atom": "Essential(2,1)", "shift": 2} in data["summands"]
