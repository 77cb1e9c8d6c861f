import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specht import linalg
from specht.arith import INFINITY, CyclotomicField, LaurentPolynomial, PrimeField, RationalFunction, Rationals
from specht.murphy import (
    ConfigurationError,
    Deformation,
    UnsupportedTargetError,
    check_integrality,
    check_unitriangular,
    choose_deformation,
    l_triangularity_problems,
    lift_multicharge,
    murphy_action,
    murphy_vectors,
    specht_module,
    specialize_module,
)
from specht.seminormal import ParamSet, build_seminormal, verify_relations
from specht.tableaux import count_standard_tableaux, multipartitions, tableau_dominates, tableau_permutation
from specht.tableaux import parse_multipartition as P

V = RationalFunction.v()
TARGETS = [Rationals(Fraction(1)), PrimeField(2, 1), PrimeField(3, 1), CyclotomicField(3), CyclotomicField(4)]


def xi_route(charge):
    return Deformation("xi", tuple(charge), tuple(charge))


# lifting -------------------------------------------------------------------


def test_lift_examples():
    assert lift_multicharge((0, 0), 2, 3) == (0, 6)
    assert lift_multicharge((0, 1), 3, 2) == (0, 4)
    assert lift_multicharge((5,), INFINITY, 4) == (5,)
    with pytest.raises(UnsupportedTargetError):
        lift_multicharge((0, 0), INFINITY, 2)


@given(
    st.lists(st.integers(-6, 6), min_size=1, max_size=3),
    st.integers(2, 6),
    st.integers(1, 5),
)
def test_lift_properties(charge, e, n):
    lifted = lift_multicharge(charge, e, n)
    assert all((a - b) % e == 0 for a, b in zip(lifted, charge))
    gaps = [b - a for a, b in zip(lifted, lifted[1:])]
    assert all(2 * n <= g < 2 * n + e for g in gaps)


def test_deformation_choice():
    assert choose_deformation((0, 0), CyclotomicField(4), 2).generic_charge == (0, 4)
    d = choose_deformation((0, 0), Rationals(Fraction(1)), 3)
    assert d.kind == "charge" and d.xi_constant == 1
    with pytest.raises(UnsupportedTargetError):
        choose_deformation((0, 0), Rationals(Fraction(2)), 3)


# Murphy vectors --------------------------------------------------------------


def test_murphy_vector_examples():
    sem = build_seminormal(P("(1,1)"), ParamSet((0,)))
    assert murphy_vectors(sem) == [[1]]
    sem = build_seminormal(P("(2,1)"), ParamSet((0,)))
    M = murphy_vectors(sem)
    assert M[0] == [1, 0] and M[1][1] == 1 and not M[1][0].is_zero()


@pytest.mark.parametrize("level,n", [(1, 4), (2, 4), (3, 3)])
def test_murphy_vectors_do_not_depend_on_the_word(level, n):
    charge = tuple(2 * n * l for l in range(level))
    params = ParamSet(charge)
    for lam in multipartitions(n, level):
        sem = build_seminormal(lam, params)
        base = murphy_vectors(sem)
        words = {t: tableau_permutation(t)[0].reduced_words() for t in sem.basis}
        for pick in (0, -1):
            alt = murphy_vectors(sem, {t: ws[pick] for t, ws in words.items()})
            assert alt == base


@pytest.mark.parametrize("level,n", [(1, 5), (2, 4), (3, 3)])
def test_transition_is_unitriangular(level, n):
    charge = tuple(2 * n * l for l in range(level))
    for lam in multipartitions(n, level):
        sem = build_seminormal(lam, ParamSet(charge))
        M = murphy_vectors(sem)
        assert check_unitriangular(sem, M) == []
        for i, t in enumerate(sem.basis):
            for j, s in enumerate(sem.basis):
                if not M[i][j].is_zero():
                    assert tableau_dominates(s, t)


# Murphy action -----------------------------------------------------------------


def test_row_partition_is_scalar():
    M = murphy_action(P("(4)"), xi_route((0,)))
    assert all(mat == [[LaurentPolynomial({1: 1})]] for mat in M.T)


@pytest.mark.parametrize("level,n", [(1, 5), (2, 4), (3, 3)])
def test_murphy_matrices_are_integral_and_triangular(level, n):
    charge = tuple(2 * n * l for l in range(level))
    for lam in multipartitions(n, level):
        M = murphy_action(lam, xi_route(charge))
        assert check_integrality(M)
        assert l_triangularity_problems(M) == []
        # row convention: m_t L_k only involves m_s with s earlier in the basis
        for mat in M.L:
            assert all(mat[i][j].is_zero() for i in range(M.dim) for j in range(i + 1, M.dim))


def test_murphy_generic_relations():
    M = murphy_action(P("(2,1|1)"), xi_route((0, 8)))
    assert verify_relations(M.generic, exhaustive=True).ok


def test_murphy_json_round_trip():
    M = murphy_action(P("(2,1)"), xi_route((0,)))
    data = json.loads(json.dumps(M.to_json()))
    T = [[[LaurentPolynomial.from_json(x) for x in row] for row in mat] for mat in data["T"]]
    assert T == M.T


# specialization -------------------------------------------------------------------


def test_symmetric_group_at_xi_one():
    F = Rationals(Fraction(1))
    S = specht_module(P("(3,1)"), (0,), F)
    for mat in S.T:
        sq = linalg.matmul(F, mat, mat)
        assert linalg.equal(F, sq, linalg.identity(F, S.dim))


def test_f3_example():
    S = specht_module(P("(2,1)"), (0,), PrimeField(3, 1))
    assert S.dim == 2 and verify_relations(S, exhaustive=True).ok


def test_cyclotomic_row():
    F = CyclotomicField(4)
    S = specht_module(P("(2)"), (0,), F)
    assert S.T == [[[F.xi]]]


@pytest.mark.parametrize("target", TARGETS, ids=str)
@pytest.mark.parametrize("charge", [(0,), (0, 0), (0, 1)])
def test_specialized_relations(target, charge):
    for n in range(1, 4):
        for lam in multipartitions(n, len(charge)):
            S = specht_module(lam, charge, target)
            assert S.dim == count_standard_tableaux(lam)
            assert verify_relations(S, exhaustive=True).ok, (lam, charge, target)


def test_specialize_rejects_a_wrong_lift():
    M = murphy_action(P("(1|1)"), xi_route((0, 4)))
    with pytest.raises(ConfigurationError):
        specialize_module(M, CyclotomicField(3), (0, 0))
    S = specialize_module(M, CyclotomicField(4), (0, 0))
    assert S.params.charge == (0, 0)


def test_specialized_json_is_text():
    data = specht_module(P("(1|1)"), (0, 0), CyclotomicField(4)).to_json()
    assert data["field"] == "cyclo" and all(isinstance(x, str) for mat in data["T"] for row in mat for x in row)
