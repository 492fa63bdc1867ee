import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from realforms.automorphisms import (
    InvolutiveAction,
    NotStable,
    automorphism_group,
    clear_memo,
    enumerate_automorphisms,
    inner_automorphisms,
    involution_class_index,
    involution_class_reps,
    involution_scan,
    involutive_automorphisms,
    is_characteristic,
    restrict_action,
)
from realforms.builders import (
    build_alternating,
    build_cyclic,
    build_dihedral,
    build_psl2,
    build_quaternion,
    build_symmetric,
    direct_product,
    permutation_conjugation,
)
from realforms.cohomology import h1
from realforms.corpus import abelian_group, corpus_groups
from realforms.groups import CapExceeded, GroupError, Perm, Subgroup, greedy_generators, is_isomorphic_small, subgroup_closure
from realforms.oracles import brute_force_automorphisms

from conftest import relabel


def elementary(k):
    return abelian_group((2,) * k)


@pytest.mark.parametrize(
    "G, order",
    [
        (build_cyclic(1), 1),
        (build_quaternion(3), 24),
        (build_alternating(5), 120),
        (build_psl2(7), 336),
        (elementary(1), 1),
        (elementary(2), 6),
        (elementary(3), 168),
        (build_cyclic(12), 4),
        (build_dihedral(6), 12),
    ],
)
def test_aut_orders(G, order):
    assert automorphism_group(G).order == order


def test_aut_q8_is_s4():
    A = automorphism_group(build_quaternion(3))
    assert not A.group.is_abelian()
    assert is_isomorphic_small(A.group, build_symmetric(4))


@pytest.mark.parametrize("G", corpus_groups(24), ids=lambda G: G.label)
def test_aut_matches_brute_force(G):
    fast = {tuple(int(v) for v in m) for m in automorphism_group(G).maps}
    assert fast == brute_force_automorphisms(G)


@pytest.mark.parametrize("G", [build_symmetric(4), build_quaternion(4), build_alternating(5), build_dihedral(10)])
def test_aut_independent_of_generating_sequence(G):
    default = {m.tobytes() for m in enumerate_automorphisms(G)}
    reversed_gens = greedy_generators(G, range(G.order - 1, -1, -1))
    other = {m.tobytes() for m in enumerate_automorphisms(G, gens=reversed_gens)}
    assert default == other


def test_aut_maps_are_automorphisms():
    A = automorphism_group(build_psl2(7))
    H = A.H
    for m in A.maps[:50]:
        assert np.array_equal(m[H.mul], H.mul[np.ix_(m, m)])
        assert len(set(m.tolist())) == H.order
    assert np.array_equal(A.maps[0], np.arange(H.order))  # lexicographic order puts the identity first


@pytest.mark.parametrize(
    "G, order",
    [(build_cyclic(8), 1), (build_quaternion(3), 4), (build_alternating(5), 60)],
)
def test_inner_automorphisms(G, order):
    A = automorphism_group(G)
    assert inner_automorphisms(G, A).order == order


@pytest.mark.parametrize(
    "G, count",
    [(build_alternating(5), 3), (build_alternating(6), 4), (build_cyclic(3), 2), (build_quaternion(3), 3)],
)
def test_involution_class_counts(G, count):
    reps = involution_class_reps(automorphism_group(G))
    assert len(reps) == count
    assert reps[0].is_trivial()
    assert sum(r.class_size for r in reps) == sum(
        1 for m in automorphism_group(G).maps if np.array_equal(m[m], np.arange(G.order))
    )


@pytest.mark.parametrize("G", [build_quaternion(3), build_dihedral(4), build_symmetric(4), build_dihedral(6)])
def test_conjugate_involutions_give_equal_h1(G):
    A = automorphism_group(G)
    sq = A.group.mul[np.arange(A.order), np.arange(A.order)]
    for rep in involution_class_reps(A):
        target = h1(G, rep).h1_size
        rid = A.id_of(rep.image)
        for g in range(A.order):
            conj = int(A.group.mul[A.group.mul[g, rid], A.group.inv[g]])
            assert sq[conj] == 0
            assert h1(G, A.action(conj)).h1_size == target


@pytest.mark.parametrize("G", [build_quaternion(3), build_symmetric(4), build_dihedral(6), build_alternating(5)])
def test_inner_involutions_match_trivial_action(G):
    # conjugation by an element of order <= 2 is a twist of the trivial action
    trivial = h1(G, InvolutiveAction.trivial(G)).h1_size
    for h in range(G.order):
        if G.mul[h, h] == 0:
            assert h1(G, InvolutiveAction.conjugation(G, h)).h1_size == trivial


def test_involutive_action_validation():
    G = build_symmetric(3)
    with pytest.raises(GroupError):
        InvolutiveAction(G, np.roll(np.arange(6), 1))
    with pytest.raises(GroupError):
        InvolutiveAction.inversion(G)
    C4 = build_cyclic(4)
    phi = InvolutiveAction.inversion(C4)
    assert phi.fixed_points() == [0, 2]


def test_restrict_action():
    A5 = build_alternating(5)
    phi = permutation_conjugation(A5, Perm.from_cycles(5, (0, 1)))
    klein = [Perm.from_cycles(5, *c) for c in [(), ((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]]
    V = Subgroup(A5, [A5.element_id(p) for p in klein])
    r = restrict_action(phi, V)
    els = r.group.elements
    moved = {str(els[x]): str(els[r(x)]) for x in range(4)}
    assert moved["(0 1)(2 3)"] == "(0 1)(2 3)"
    assert moved["(0 2)(1 3)"] == "(0 3)(1 2)"
    assert restrict_action(InvolutiveAction.trivial(A5), V).is_trivial()
    with pytest.raises(NotStable):
        restrict_action(phi, subgroup_closure(A5, [A5.element_id(Perm.from_cycles(5, (0, 2, 3)))]))


def test_characteristic_subgroups():
    D12 = build_dihedral(6)
    A = automorphism_group(D12)
    assert is_characteristic(A, subgroup_closure(D12, [D12.generators[0]]))
    assert not is_characteristic(A, subgroup_closure(D12, [D12.generators[1]]))


def test_involution_class_index():
    Q8 = build_quaternion(3)
    A = automorphism_group(Q8)
    for rep in involution_class_reps(A):
        assert involution_class_index(A, rep.image) == rep.class_index
    with pytest.raises(GroupError):
        involution_class_index(A, np.zeros(8, dtype=int))


@pytest.mark.parametrize("k, count", [(1, 1), (2, 4), (3, 22), (4, 316), (5, 6976)])
def test_involution_scan_counts_gl2_involutions(k, count):
    # elements of order <= 2 in GL(k, F2)
    sizes, _ = involution_scan(elementary(k))
    assert len(sizes) == count


@pytest.mark.parametrize("G", [build_quaternion(3), build_dihedral(6), build_alternating(5), direct_product(build_cyclic(4), build_cyclic(2))])
def test_involution_scan_matches_aut_table(G):
    A = automorphism_group(G)
    ident = np.arange(G.order)
    expected = {m.tobytes() for m in A.maps if np.array_equal(m[m], ident)}
    found = {a.image.astype(np.int64).tobytes() for a in involutive_automorphisms(G)}
    assert found == expected
    sizes, images = involution_scan(G, keep_images=True)
    for s, img in zip(sizes, images):
        assert s == h1(G, InvolutiveAction(G, img)).h1_size


@given(st.integers(0, 10_000))
def test_aut_order_is_label_invariant(seed):
    G = build_dihedral(5)
    rng = np.random.default_rng(seed)
    perm = np.concatenate([[0], 1 + rng.permutation(G.order - 1)])
    assert automorphism_group(relabel(G, perm)).order == 20


def test_aut_caps():
    with pytest.raises(CapExceeded):
        automorphism_group(build_cyclic(12), cap=10)
    clear_memo()
    with pytest.raises(CapExceeded):
        automorphism_group(elementary(4), aut_cap=1000)


def test_memo_rebinds_to_new_object():
    a, b = build_quaternion(3), build_quaternion(3)
    assert automorphism_group(b).H is b and automorphism_group(a).H is a
