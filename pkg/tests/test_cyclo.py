import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from realforms.builders import build_dihedral, build_quaternion
from realforms.cyclo import (
    CycloElem,
    Mat2Cyclo,
    MatrixClosure,
    family_closure,
    imaginary_unit,
    lemma_family,
    projective_quotient,
    ring_length,
    scalar_subgroup,
    zeta,
)
from realforms.groups import GroupError, is_isomorphic_small

elems = st.integers(2, 5).flatmap(lambda L: st.lists(st.integers(-5, 5), min_size=L, max_size=L)).map(
    lambda v: CycloElem(tuple(v))
)


def one(L):
    return CycloElem.monomial(L, 0)


def test_defining_relation():
    for s in range(3, 7):
        L = ring_length(s)
        x = CycloElem.monomial(L, 1)
        assert x * CycloElem.monomial(L, L - 1) == CycloElem.monomial(L, 0, -1)


def test_additive_inverse():
    a = CycloElem((1, 1))
    assert (a + (-a)).is_zero()


def test_zeta_squares_to_i_for_s4():
    z = zeta(4)
    i = imaginary_unit(4)
    assert z * z == i
    assert i * i == CycloElem.monomial(ring_length(4), 0, -1)


@given(st.integers(2, 4), st.data())
def test_ring_axioms(k, data):
    L = 2**k
    vec = st.lists(st.integers(-4, 4), min_size=L, max_size=L).map(lambda v: CycloElem(tuple(v)))
    a, b, c = data.draw(vec), data.draw(vec), data.draw(vec)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * one(L) == a


def test_ring_mismatch():
    with pytest.raises(GroupError):
        CycloElem((1, 0)) + CycloElem((1, 0, 0, 0))


@given(st.integers(2, 3), st.data())
def test_encode_roundtrip(k, data):
    L = 2**k
    vec = st.lists(st.integers(-50, 50), min_size=L, max_size=L).map(lambda v: CycloElem(tuple(v)))
    m = Mat2Cyclo(*(data.draw(vec) for _ in range(4)))
    assert Mat2Cyclo.decode(m.encode()) == m


def test_family_generators_s3():
    L = ring_length(3)
    zero, o, i = CycloElem.zero(L), one(L), imaginary_unit(3)
    rot, swap = lemma_family(3, 2)
    assert rot == Mat2Cyclo(i, zero, zero, -i) and swap == Mat2Cyclo(zero, o, o, zero)
    assert lemma_family(3, 3)[1] == Mat2Cyclo(zero, i, i, zero)
    with pytest.raises(GroupError):
        lemma_family(3, 1)
    with pytest.raises(GroupError):
        lemma_family(9, 2)


def test_family_identifications():
    Q8 = family_closure(3, 3).group
    assert Q8.order == 8 and int((Q8.element_orders() == 2).sum()) == 1
    assert is_isomorphic_small(Q8, build_quaternion(3))
    assert is_isomorphic_small(family_closure(4, 2).group, build_dihedral(8))


@pytest.mark.parametrize("s, t", [(s, t) for s in range(3, 7) for t in (1, 2, 3) if not (s == 3 and t == 1)])
def test_family_orders(s, t):
    M = family_closure(s, t)
    assert M.order == 2**s
    P, proj = projective_quotient(M)
    assert P.order == 2 ** (s - 1)
    assert proj.is_surjective()


def test_identity_and_scalar_closures():
    L = ring_length(4)
    M = MatrixClosure([Mat2Cyclo.identity(L)])
    assert M.order == 1
    minus = Mat2Cyclo.identity(L).scale(CycloElem.monomial(L, 0, -1))
    S = MatrixClosure([minus])
    assert scalar_subgroup(S).order == 2
    assert projective_quotient(S)[0].order == 1


@pytest.mark.parametrize("s, t", [(5, 1), (6, 2), (6, 3)])
def test_table_agrees_with_matrix_products(s, t):
    M = family_closure(s, t)
    rng = random.Random(s * 10 + t)
    n = M.order
    for _ in range(10_000 // 3):
        a, b = rng.randrange(n), rng.randrange(n)
        assert M.id_of(M.elements[a] * M.elements[b]) == M.group.mul[a, b]
