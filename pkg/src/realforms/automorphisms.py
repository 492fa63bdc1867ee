"""Automorphism groups and involutive actions."""

from __future__ import annotations

import copy
import logging
from dataclasses import dataclass, field

import numpy as np

from .groups import (
    CapExceeded,
    FiniteGroup,
    GroupError,
    GroupHom,
    Subgroup,
    class_of,
    conjugacy_classes,
    fingerprints,
    greedy_generators,
    scan_generators,
    search_homs,
    table_from_permutations,
    RowIndex,
)

log = logging.getLogger(__name__)

AUT_SOURCE_CAP = 1500
AUT_ORDER_CAP = 5000


class NotStable(GroupError):
    pass


class NotCharacteristic(GroupError):
    pass


@dataclass(frozen=True)
class InvolutiveAction:
    """An automorphism ``phi`` of ``group`` with ``phi o phi = id``.

    ``image[x]`` is the id of ``phi(x)``.  This is the Galois action of the
    order-2 group on ``group``; the identity map is the trivial action.
    """

    group: FiniteGroup
    image: np.ndarray
    name: str = ""
    class_index: int | None = None
    class_size: int | None = None

    def __post_init__(self):
        img = np.asarray(self.image, dtype=np.int64)
        img.setflags(write=False)
        object.__setattr__(self, "image", img)
        hom = GroupHom(self.group, self.group, img)
        if not hom.is_homomorphism() or len(np.unique(img)) != self.group.order:
            raise GroupError(f"{self.name or 'map'} is not an automorphism")
        if not np.array_equal(img[img], np.arange(self.group.order)):
            raise GroupError(f"{self.name or 'map'} is not an involution")

    def __call__(self, x: int) -> int:
        return int(self.image[x])

    @classmethod
    def trivial(cls, H: FiniteGroup) -> InvolutiveAction:
        return cls(H, np.arange(H.order), "trivial")

    @classmethod
    def inversion(cls, H: FiniteGroup) -> InvolutiveAction:
        if not H.is_abelian():
            raise GroupError("inversion is an automorphism only of abelian groups")
        return cls(H, H.inv, "inversion")

    @classmethod
    def conjugation(cls, H: FiniteGroup, h: int) -> InvolutiveAction:
        """Inner action ``x -> h x h^-1`` (needs ``h^2`` central)."""
        return cls(H, H.mul[H.mul[h], H.inv[h]], f"conj({h})")

    def is_trivial(self) -> bool:
        return bool(np.array_equal(self.image, np.arange(self.group.order)))

    def is_inversion(self) -> bool:
        return bool(np.array_equal(self.image, self.group.inv))

    def fixed_points(self) -> list[int]:
        return [int(x) for x in np.nonzero(self.image == np.arange(self.group.order))[0]]


class AutGroup:
    """``Aut(H)`` as a finite group of image arrays under composition.

    Ids are the lexicographic order of image arrays, so the identity map is
    id 0.  ``mul[a, b]`` is ``a o b`` (``b`` applied first).
    """

    def __init__(self, H: FiniteGroup, maps: np.ndarray):
        maps = np.asarray(maps, dtype=np.int64).reshape(-1, H.order)
        order = np.lexsort(maps.T[::-1])
        maps = maps[order]
        maps.setflags(write=False)
        self.H = H
        self.maps = maps
        self.index = RowIndex(maps, H.order)
        table = table_from_permutations(maps)
        self.group = FiniteGroup(table, (), f"Aut({H.label})")
        self.group.generators = scan_generators(self.group, range(self.group.order))
        self._inner = None

    @property
    def order(self) -> int:
        return self.group.order

    def id_of(self, image) -> int:
        row = np.asarray(image, dtype=np.int64)
        try:
            k = int(self.index.lookup_base(row[None, self.index.base])[0])
        except KeyError:
            raise GroupError("not an automorphism of this group") from None
        if not np.array_equal(self.maps[k], row):
            raise GroupError("not an automorphism of this group")
        return k

    def action(self, aut_id: int, name: str = "") -> InvolutiveAction:
        return InvolutiveAction(self.H, self.maps[aut_id], name or f"aut{aut_id}")

    def inner(self) -> Subgroup:
        if self._inner is None:
            self._inner = inner_automorphisms(self.H, self)
        return self._inner

    def rebind(self, H: FiniteGroup) -> AutGroup:
        """Same maps, attached to another object with the identical table."""
        if H.cayley_hash() != self.H.cayley_hash():
            raise GroupError("tables differ")
        A = copy.copy(self)
        A.H = H
        A._inner = None
        return A

    def generator_maps(self) -> np.ndarray:
        return self.maps[list(self.group.generators)]


def automorphism_candidates(H: FiniteGroup, gens) -> list[list[int]]:
    fp = fingerprints(H)
    return [[y for y in range(H.order) if fp[y] == fp[g]] for g in gens]


def enumerate_automorphisms(H: FiniteGroup, limit: int = AUT_ORDER_CAP, gens=None) -> np.ndarray:
    """Image arrays of all automorphisms of ``H`` (search order, unsorted)."""
    if H.order == 1:
        return np.zeros((1, 1), dtype=np.int64)
    gens = list(gens) if gens is not None else list(greedy_generators(H, range(H.order)))
    cands = automorphism_candidates(H, gens)
    maps = search_homs(H, H, gens, cands, bijective=True, limit=limit)
    return np.array(maps, dtype=np.int64)


_MEMO: dict[str, AutGroup] = {}


def automorphism_group(H: FiniteGroup, cache=None, cap: int = AUT_SOURCE_CAP, aut_cap: int = AUT_ORDER_CAP) -> AutGroup:
    """Full automorphism group of ``H``.

    Generator images are searched with order / class-size / square-class
    pruning and each partial choice is extended along the Cayley graph.
    ``cache`` is an optional object with ``load(H)`` / ``store(H, maps)``.
    """
    if H.order > cap:
        raise CapExceeded(f"automorphism groups capped at |H| <= {cap}")
    key = H.cayley_hash()
    if key in _MEMO:
        A = _MEMO[key]
        return A if A.H is H else A.rebind(H)
    maps = cache.load(H) if cache is not None else None
    A = None
    if maps is not None:
        try:
            A = AutGroup(H, maps)
        except GroupError as exc:
            log.warning("cached automorphisms of %s do not form a group (%s); recomputing", H.label, exc)
    if A is None:
        maps = enumerate_automorphisms(H, limit=aut_cap)
        if cache is not None:
            cache.store(H, maps)
        A = AutGroup(H, maps)
    _MEMO[key] = A
    return A


def clear_memo() -> None:
    _MEMO.clear()


def inner_automorphisms(H: FiniteGroup, A: AutGroup) -> Subgroup:
    conj = H.mul[H.mul, H.inv[:, None]]  # row h: x -> h x h^-1
    ids = A.index.lookup_base(conj[:, A.index.base])
    return Subgroup(A.group, np.unique(ids))


def involution_class_reps(A: AutGroup) -> list[InvolutiveAction]:
    """One action per Aut-class of elements of order <= 2, identity first."""
    G = A.group
    sq = G.mul[np.arange(G.order), np.arange(G.order)]
    reps = []
    for cls in conjugacy_classes(G):
        rep = cls[0]
        if sq[rep] == 0:
            act = A.action(rep, f"phi{len(reps)}")
            reps.append(
                InvolutiveAction(A.H, act.image, act.name, class_index=len(reps), class_size=len(cls))
            )
    return reps


def involution_class_index(A: AutGroup, image) -> int:
    """Index, in ``involution_class_reps`` order, of the class of an involutive automorphism."""
    cls = class_of(A.group)
    target = cls[A.id_of(image)]
    reps = involution_class_reps(A)
    for rep in reps:
        if cls[A.id_of(rep.image)] == target:
            return rep.class_index
    raise GroupError("map is not an involutive automorphism")


def aut_conjugacy_class(A: AutGroup, aut_id: int) -> list[int]:
    return conjugacy_classes(A.group)[int(class_of(A.group)[aut_id])]


def restrict_action(phi: InvolutiveAction, S: Subgroup) -> InvolutiveAction:
    """``phi`` restricted to a stable subgroup, on ``S.as_group()`` ids."""
    if S.parent is not phi.group:
        raise GroupError("subgroup of a different group")
    img = phi.image[list(S.members)]
    if set(img.tolist()) != set(S.members):
        raise NotStable("subgroup is not mapped onto itself")
    local = {x: i for i, x in enumerate(S.members)}
    return InvolutiveAction(S.as_group(), np.array([local[int(y)] for y in img]), phi.name)


def is_characteristic(A: AutGroup, S: Subgroup) -> bool:
    m = S.mask()
    idx = list(S.members)
    return all(bool(m[row[idx]].all()) for row in A.generator_maps())


# ---------------------------------------------------------------------------
# involutions without the whole automorphism group


def _fingerprint_codes(H: FiniteGroup) -> np.ndarray:
    fp = fingerprints(H)
    codes = {f: i for i, f in enumerate(sorted(set(fp)))}
    return np.array([codes[f] for f in fp], dtype=np.int64)


def involution_scan(H: FiniteGroup, keep_images: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """Every automorphism ``phi`` of ``H`` with ``phi^2 = 1``, without tabulating ``Aut(H)``.

    Returns ``(h1_sizes, images)``; ``images`` is only filled when
    ``keep_images`` is set.  The map is grown on a ``phi``-stable subgroup:
    the least element ``x`` outside it is sent to some ``y`` outside it (and
    ``y`` back to ``x``), the hom is extended to ``<S, x, y>`` and the branch
    dies on any inconsistency.
    """
    from ._kernels import involution_scan as scan

    mul = np.asarray(H.mul, dtype=np.int64)
    inv = np.asarray(H.inv, dtype=np.int64)
    return scan(mul, inv, _fingerprint_codes(H), keep_images)


def involutive_automorphisms(H: FiniteGroup) -> list[InvolutiveAction]:
    _, images = involution_scan(H, keep_images=True)
    return [InvolutiveAction(H, row, f"inv{i}") for i, row in enumerate(images)]
