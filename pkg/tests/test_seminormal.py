from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specht import linalg
from specht.arith import PrimeField, RationalFunction, Rationals
from specht.seminormal import (
    NotSemisimpleError,
    ParamSet,
    alpha_from_quadratic,
    build_seminormal,
    content,
    contents_separate,
    poincare_polynomial,
    seminormal_coefficients,
    semisimple_restriction,
    verify_relations,
)
from specht.tableaux import count_standard_tableaux, initial_tableau, multipartitions
from specht.tableaux import parse_multipartition as P

V = RationalFunction.v()


@st.composite
def separated_cases(draw, max_n=4):
    level = draw(st.integers(1, 2))
    n = draw(st.integers(1, max_n))
    start = draw(st.integers(-3, 3))
    gap = draw(st.integers(2 * n, 2 * n + 3))
    charge = tuple(start + gap * l for l in range(level))
    lam = draw(st.sampled_from(multipartitions(n, level)))
    return lam, charge


def test_content_examples():
    t = initial_tableau(P("(1|1)"))
    params = ParamSet((0, 2))
    assert content(t, 1, params).is_zero()
    assert content(t, 2, params) == V + V**3
    assert content(initial_tableau(P("(2)")), 2, ParamSet((0,))) == V
    with pytest.raises(ValueError):
        content(t, 3, params)


@given(separated_cases(max_n=5))
@settings(max_examples=30)
def test_content_matches_splice_shortcut(case):
    lam, charge = case
    params = ParamSet(charge)
    for t in build_seminormal(lam, params).basis[:3]:
        for k in range(1, lam.size + 1):
            assert content(t, k, params) == params.content_of_node(t.position(k))


def test_poincare_examples():
    assert poincare_polynomial(1, ParamSet((0,))) == V
    for n in range(1, 6):
        value = poincare_polynomial(n, ParamSet((0,), Rationals(Fraction(1))))
        assert abs(value) == factorial(n)
        assert poincare_polynomial(n, ParamSet((0, 0))).is_zero()


@pytest.mark.parametrize("k", range(0, 9))
def test_poincare_vanishes_iff_contents_collide(k):
    for n in range(1, 4):
        params = ParamSet((0, k))
        assert bool(contents_separate(n, params)) == (not poincare_polynomial(n, params).is_zero())


def test_contents_separate_examples():
    for n in range(1, 7):
        assert contents_separate(n, ParamSet((0,)))
    sep = contents_separate(1, ParamSet((0, 0)))
    assert not sep and {str(t) for t in sep.witness} == {"[1 | -]", "[- | 1]"}
    assert not contents_separate(2, ParamSet((0,), PrimeField(2, 1)))


def test_build_examples():
    assert build_seminormal(P("(2)"), ParamSet((0,))).T[0] == [[V]]
    assert build_seminormal(P("(1,1)"), ParamSet((0,))).T[0] == [[-(1 / V)]]
    with pytest.raises(NotSemisimpleError):
        build_seminormal(P("(1|1)"), ParamSet((0, 0)))


@given(separated_cases())
@settings(max_examples=30, deadline=None)
def test_build_shape_of_matrices(case):
    lam, charge = case
    params = ParamSet(charge)
    M = build_seminormal(lam, params)
    assert M.dim == count_standard_tableaux(lam)
    for k, mat in enumerate(M.L, 1):
        for i, row in enumerate(mat):
            assert all(x.is_zero() for j, x in enumerate(row) if j != i)
    for i, t in enumerate(M.basis):
        assert M.L[0][i][i] == params.Q[t.position(1).comp - 1]
    for mat in M.T:
        assert all(sum(1 for x in row if not x.is_zero()) <= 2 for row in mat)


def test_relations_examples():
    assert verify_relations(build_seminormal(P("(2,1)"), ParamSet((0,)))).ok
    assert verify_relations(build_seminormal(P("(1|1)"), ParamSet((0, 3)))).ok


def test_perturbed_module_fails_at_quadratic():
    M = build_seminormal(P("(2,1)"), ParamSet((0,)))
    M.T[0][0][0] = M.T[0][0][0] + 1
    verdict = verify_relations(M)
    assert not verdict.ok and verdict.first_failure.startswith("quadratic")


@given(separated_cases())
@settings(max_examples=40, deadline=None)
def test_relations_hold(case):
    lam, charge = case
    assert verify_relations(build_seminormal(lam, ParamSet(charge)), exhaustive=True).ok


@given(separated_cases(max_n=5))
@settings(max_examples=40, deadline=None)
def test_two_by_two_block_invariants(case):
    lam, charge = case
    params = ParamSet(charge)
    xi = params.xi
    for t in build_seminormal(lam, params).basis:
        for r in range(1, lam.size):
            a_t, alpha_t, v = seminormal_coefficients(t, r, params)
            if v is None:
                assert a_t in (xi, -(1 / xi))
                continue
            a_v, alpha_v, _ = seminormal_coefficients(v, r, params)
            assert a_t + a_v == xi - 1 / xi
            assert alpha_t * alpha_v - a_t * a_v == 1
            if not alpha_t == 1:
                assert alpha_t == alpha_from_quadratic(t, r, params)


def test_semisimple_restriction_examples():
    blocks = semisimple_restriction(build_seminormal(P("(1|1)"), ParamSet((0, 3))))
    assert blocks.ok and [(mu.render(), d) for mu, d in blocks.summands] == [("(1|)", 1), ("(|1)", 1)]
    blocks = semisimple_restriction(build_seminormal(P("(2,1)"), ParamSet((0,))))
    assert blocks.ok and [(mu.render(), d) for mu, d in blocks.summands] == [("(2)", 1), ("(1^2)", 1)]
    blocks = semisimple_restriction(build_seminormal(P("(4)"), ParamSet((0,))))
    assert blocks.ok and [(mu.render(), d) for mu, d in blocks.summands] == [("(3)", 1)]


def test_semisimple_restriction_detects_leakage():
    M = build_seminormal(P("(2,1)"), ParamSet((0,)))
    M.L[0][0][1] = V
    assert not semisimple_restriction(M).ok


def test_relations_over_a_semisimple_finite_field():
    params = ParamSet((0,), PrimeField(7, 1))
    assert contents_separate(3, params)
    M = build_seminormal(P("(2,1)"), params)
    assert verify_relations(M, exhaustive=True).ok
    assert linalg.equal(M.field, M.L[0], linalg.zeros(M.field, 2))


def test_sign_flipped_alpha_breaks_the_quadratic_relation():
    params = ParamSet((0,))
    M = build_seminormal(P("(2,1)"), params)
    t = M.basis[1]
    a, alpha, v = seminormal_coefficients(t, 2, params)
    assert v is not None and not alpha == 1
    i, j = M.index[t], M.index[v]
    M.T[1][i][j] = -M.T[1][i][j]
    verdict = verify_relations(M)
    assert not verdict.ok and verdict.first_failure.startswith("quadratic")
