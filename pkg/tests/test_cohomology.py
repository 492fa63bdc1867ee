from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from realforms.automorphisms import InvolutiveAction, automorphism_group, involution_class_reps
from realforms.builders import (
    build_alternating,
    build_cyclic,
    build_dihedral,
    build_quaternion,
    build_symmetric,
    direct_product,
    permutation_conjugation,
)
from realforms.cohomology import (
    cocycle_set,
    comparison_map,
    corollary_audit,
    extension,
    h1,
    h1_abelian_quotient,
    mass_report,
    stable_sylow2,
    sylow_mass_report,
)
from realforms.corpus import corpus_pairs
from realforms.groups import GroupError, Perm, is_isomorphic_small
from realforms.oracles import brute_force_h1_size
from realforms.verify import q8_pinned_actions

PAIRS = corpus_pairs(max_order=120)


def q8_actions():
    Q = build_quaternion(3)
    pinned = q8_pinned_actions(Q)
    return Q, [InvolutiveAction.trivial(Q), InvolutiveAction(Q, pinned["phi2"]), InvolutiveAction(Q, pinned["phi3"])]


def test_cocycle_sets():
    C2 = build_cyclic(2)
    assert cocycle_set(C2, InvolutiveAction.trivial(C2)).members == (0, 1)
    S3 = build_symmetric(3)
    Z = cocycle_set(S3, InvolutiveAction.trivial(S3))
    assert len(Z) == 4 and 0 in Z


def test_cocycle_set_rejects_foreign_action():
    with pytest.raises(GroupError):
        cocycle_set(build_cyclic(4), InvolutiveAction.trivial(build_cyclic(4)))


def test_q8_h1_sizes():
    Q, actions = q8_actions()
    assert [h1(Q, phi).h1_size for phi in actions] == [2, 3, 1]


def test_c4_inversion():
    C4 = build_cyclic(4)
    s = h1(C4, InvolutiveAction.inversion(C4))
    assert s.h1_size == 2
    assert [c.stabilizer_order for c in s.classes] == [2, 2]
    assert [set(c.orbit) for c in s.classes] == [{0, 2}, {1, 3}]


@pytest.mark.parametrize("pair", [p for p in PAIRS if p.group.order % 2], ids=lambda p: p.name)
def test_odd_order_single_class(pair):
    assert h1(pair.group, pair.action).h1_size == 1


@pytest.mark.parametrize("pair", PAIRS, ids=lambda p: p.name)
def test_orbit_stabilizer_and_oracle(pair):
    G, phi = pair.group, pair.action
    s = h1(G, phi)
    assert all(c.orbit_size * c.stabilizer_order == G.order for c in s.classes)
    assert sum(c.orbit_size for c in s.classes) == s.z1_size
    assert all(c.representative == min(c.orbit) for c in s.classes)
    assert s.h1_size == brute_force_h1_size(G, phi)


@pytest.mark.parametrize(
    "G, phi, total",
    [
        (build_cyclic(2), "trivial", Fraction(1)),
        (build_symmetric(3), "trivial", Fraction(2, 3)),
    ],
)
def test_mass_examples(G, phi, total):
    r = mass_report(G, InvolutiveAction.trivial(G))
    assert r.total == r.ratio == total
    assert r.equality_case == (total == 1)


def test_q8_mass_strict():
    Q, actions = q8_actions()
    for phi in actions:
        r = mass_report(Q, phi)
        assert r.total == r.ratio == Fraction(h1(Q, phi).z1_size, 8) < 1


@pytest.mark.parametrize("pair", PAIRS, ids=lambda p: p.name)
def test_mass_identity_and_equality_case(pair):
    G, phi = pair.group, pair.action
    r = mass_report(G, phi)
    assert r.consistent
    z1_is_everything = len(cocycle_set(G, phi)) == G.order
    assert (r.ratio == 1) == z1_is_everything == (G.is_abelian() and phi.is_inversion())


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 8])
def test_inversion_equality(n):
    G = direct_product(build_cyclic(n), build_cyclic(2))
    assert mass_report(G, InvolutiveAction.inversion(G)).ratio == 1


def test_extensions():
    E = extension(build_cyclic(1), InvolutiveAction.trivial(build_cyclic(1)))
    assert E.K.order == 2
    C3 = build_cyclic(3)
    E = extension(C3, InvolutiveAction.inversion(C3))
    assert E.K.order == 6 and not E.K.is_abelian()
    assert is_isomorphic_small(E.K, build_symmetric(3))
    A5 = build_alternating(5)
    E = extension(A5, permutation_conjugation(A5, Perm.from_cycles(5, (0, 1))))
    assert E.K.order == 120


@pytest.mark.parametrize("pair", PAIRS[:80], ids=lambda p: p.name)
def test_extension_sigma_conjugation_is_phi(pair):
    G, phi = pair.group, pair.action
    E = extension(G, phi)
    K, s = E.K, E.sigma
    assert K.mul[s, s] == 0
    for h in range(G.order):
        assert K.mul[K.mul[s, E.embed(h)], K.inv[s]] == E.embed(phi(h))


def test_a5_sylow_reduction():
    A5 = build_alternating(5)
    phi = permutation_conjugation(A5, Perm.from_cycles(5, (0, 1)))
    red = stable_sylow2(A5, phi)
    assert red.subgroup.order == 4
    assert red.summary.h1_size <= 2
    assert h1(A5, phi).h1_size <= red.summary.h1_size


def test_sylow_trivial_cases():
    C9 = build_cyclic(9)
    red = stable_sylow2(C9, InvolutiveAction.inversion(C9))
    assert red.subgroup.order == 1 and red.summary.h1_size == 1
    assert sylow_mass_report(red).total == 1
    G = direct_product(build_cyclic(4), build_cyclic(2))
    phi = InvolutiveAction.inversion(G)
    red = stable_sylow2(G, phi)
    assert red.subgroup.order == G.order
    cm = comparison_map(G, phi, red)
    assert cm.mapping == tuple(range(len(cm.mapping))) and set(cm.fibres) == {1}


def test_klein_swap_mass():
    V = direct_product(build_cyclic(2), build_cyclic(2))
    # swap the two generators: (a, b) at id 2a + b
    phi = InvolutiveAction(V, np.array([0, 2, 1, 3]))
    red = stable_sylow2(V, phi)
    m = sylow_mass_report(red)
    assert m.total == Fraction(len(cocycle_set(V, phi)), 4) == Fraction(1, 2)


def test_q8_sylow_strict():
    Q, actions = q8_actions()
    for phi in actions:
        assert sylow_mass_report(stable_sylow2(Q, phi)).total < 1


@pytest.mark.parametrize("pair", PAIRS, ids=lambda p: p.name)
def test_sylow_reduction_properties(pair):
    G, phi = pair.group, pair.action
    full = h1(G, phi)
    red = stable_sylow2(G, phi)
    cm = comparison_map(G, phi, red, full)
    assert cm.surjective
    assert sum(cm.fibres) == red.summary.h1_size
    assert full.h1_size <= red.summary.h1_size
    sm = sylow_mass_report(red)
    assert sm.consistent
    if not red.group.is_abelian():
        assert sm.ratio < 1


def test_comparison_map_rejects_mismatched_reduction():
    Q, actions = q8_actions()
    red = stable_sylow2(Q, actions[1])
    with pytest.raises(GroupError):
        comparison_map(Q, actions[2], red)


@pytest.mark.parametrize("pair", PAIRS, ids=lambda p: p.name)
def test_corollaries(pair):
    assert all(i.holds for i in corollary_audit(pair.group, pair.action))


def test_corollary_examples():
    C3 = build_cyclic(3)
    imps = {i.name: i for i in corollary_audit(C3, InvolutiveAction.inversion(C3))}
    assert imps["trivial-stabilizer"].premise and imps["trivial-stabilizer"].conclusion
    Q, actions = q8_actions()
    for phi in actions:
        imps = {i.name: i for i in corollary_audit(Q, phi)}
        assert not imps["trivial-stabilizer"].premise and imps["trivial-stabilizer"].holds
    C7 = build_cyclic(7)
    imps = {i.name: i for i in corollary_audit(C7, InvolutiveAction.trivial(C7))}
    assert imps["odd-order"].premise and imps["odd-order"].conclusion


@pytest.mark.parametrize("pair", [p for p in PAIRS if p.group.is_abelian()], ids=lambda p: p.name)
def test_abelian_quotient_formula(pair):
    assert h1_abelian_quotient(pair.group, pair.action) == h1(pair.group, pair.action).h1_size


def test_abelian_quotient_rejects_nonabelian():
    S3 = build_symmetric(3)
    with pytest.raises(GroupError):
        h1_abelian_quotient(S3, InvolutiveAction.trivial(S3))


@given(st.integers(1, 40), st.integers(1, 4))
def test_cyclic_products_inversion(n, k):
    G = direct_product(build_cyclic(n), build_cyclic(2 * k))
    phi = InvolutiveAction.inversion(G)
    # H^1 of inversion on an abelian group is H / 2H: order-2 quotient counting
    expected = (2 if n % 2 == 0 else 1) * 2
    assert h1(G, phi).h1_size == expected == h1_abelian_quotient(G, phi)
