"""Concrete groups: the small families, PSL(2,q), the Hessian group, products,
Fermat and X_d automorphism groups, and their Galois-type involutions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .automorphisms import InvolutiveAction
from .groups import (
    FiniteGroup,
    GeneratorTree,
    GroupError,
    Perm,
    close_generators,
    direct_product_table,
)


def _cycle(n: int) -> Perm:
    return Perm(tuple((i + 1) % n for i in range(n)))


def build_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic groups need n >= 1")
    if n == 1:
        return close_generators([], label="C1")
    return close_generators([_cycle(n)], label=f"C{n}")


def build_dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order ``2n``; labelled ``D{2n}``."""
    if n < 3:
        raise GroupError("dihedral groups need n >= 3")
    reflection = Perm(tuple((-i) % n for i in range(n)))
    return close_generators([_cycle(n), reflection], label=f"D{2 * n}")


def build_quaternion(s: int) -> FiniteGroup:
    """Generalized quaternion group of order ``2^s`` (left-regular action).

    Points are the normal forms ``a^i b^j``; ``a`` has order ``2^(s-1)``,
    ``b^2 = a^(2^(s-2))`` and ``b a b^-1 = a^-1``.
    """
    if s < 3:
        raise GroupError("generalized quaternion groups need s >= 3")
    m = 2 ** (s - 1)
    half = m // 2
    point = lambda i, j: 2 * (i % m) + j  # noqa: E731
    left_a = [0] * (2 * m)
    left_b = [0] * (2 * m)
    for i in range(m):
        for j in (0, 1):
            left_a[point(i, j)] = point(i + 1, j)
            # b a^i b^j = a^-i b^(j+1), and b^2 = a^half
            left_b[point(i, j)] = point(-i, 1) if j == 0 else point(-i + half, 0)
    return close_generators([Perm(tuple(left_a)), Perm(tuple(left_b))], label=f"Q{2 ** s}")


def build_symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 6:
        raise GroupError("symmetric groups supported for 1 <= n <= 6")
    if n == 1:
        return close_generators([], label="S1")
    if n == 2:
        return close_generators([Perm((1, 0))], label="S2")
    return close_generators([Perm.from_cycles(n, (0, 1)), _cycle(n)], label=f"S{n}")


def build_alternating(n: int) -> FiniteGroup:
    if not 1 <= n <= 6:
        raise GroupError("alternating groups supported for 1 <= n <= 6")
    if n < 3:
        return close_generators([], label=f"A{n}")
    gens = [Perm.from_cycles(n, (0, 1, k)) for k in range(2, n)]
    return close_generators(gens, label=f"A{n}")


# ---------------------------------------------------------------------------
# PSL(2, q) on the projective line


def _f9():
    """F9 = F3[i]/(i^2+1), element a + b i encoded as 3a + b."""

    def add(u, v):
        return 3 * ((u // 3 + v // 3) % 3) + (u % 3 + v % 3) % 3

    def mul(u, v):
        a, b, c, d = u // 3, u % 3, v // 3, v % 3
        return 3 * ((a * c - b * d) % 3) + (a * d + b * c) % 3

    return add, mul


def build_psl2(q: int) -> FiniteGroup:
    """PSL(2, F_q) for q in {7, 9} acting on the q+1 points of the projective line."""
    if q == 7:
        add = lambda u, v: (u + v) % 7  # noqa: E731
        mul = lambda u, v: (u * v) % 7  # noqa: E731
        square_gen = 2
    elif q == 9:
        add, mul = _f9()
        square_gen = mul(4, 4)  # (1+i)^2; 1+i generates F9*
    else:
        raise GroupError("PSL(2, q) is built only for q in {7, 9}")
    inf = q
    neg = {u: next(v for v in range(q) if add(u, v) == 0) for u in range(q)}
    inv = {u: next(v for v in range(1, q) if mul(u, v) == 1) for u in range(1, q)}

    def moebius(f: Callable[[int], int]) -> Perm:
        return Perm(tuple(f(z) for z in range(q + 1)))

    translate = moebius(lambda z: inf if z == inf else add(z, 1))
    scale = moebius(lambda z: inf if z == inf else mul(square_gen, z))
    flip = moebius(lambda z: 0 if z == inf else (inf if z == 0 else neg[inv[z]]))
    return close_generators([translate, scale, flip], label=f"PSL(2,{q})")


# ---------------------------------------------------------------------------
# affine groups over F3


def _affine_perm(matrix, shift, p: int = 3) -> Perm:
    (a, b), (c, d) = matrix
    images = []
    for x in range(p):
        for y in range(p):
            nx = (a * x + b * y + shift[0]) % p
            ny = (c * x + d * y + shift[1]) % p
            images.append(p * nx + ny)
    return Perm(tuple(images))


def build_hessian216() -> FiniteGroup:
    """``F3^2 : SL(2,3)`` acting on the nine points of the affine plane over F3."""
    one = ((1, 0), (0, 1))
    gens = [
        _affine_perm(one, (1, 0)),
        _affine_perm(one, (0, 1)),
        _affine_perm(((1, 1), (0, 1)), (0, 0)),
        _affine_perm(((1, 0), (1, 1)), (0, 0)),
    ]
    return close_generators(gens, label="Hess216")


def build_sl23() -> FiniteGroup:
    """SL(2,3) acting on the eight nonzero vectors of F3^2."""
    vecs = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    pos = {v: i for i, v in enumerate(vecs)}

    def lin(a, b, c, d):
        return Perm(tuple(pos[((a * x + b * y) % 3, (c * x + d * y) % 3)] for x, y in vecs))

    return close_generators([lin(1, 1, 0, 1), lin(1, 0, 1, 1)], label="SL(2,3)")


# ---------------------------------------------------------------------------
# products


@dataclass(frozen=True)
class ActionSpec:
    """A named homomorphism ``K -> Aut(N)``; ``realization[k]`` is the image array of ``k``."""

    name: str
    description: str
    realization: np.ndarray

    def validate(self, N: FiniteGroup, K: FiniteGroup) -> None:
        R = np.asarray(self.realization)
        if R.shape != (K.order, N.order):
            raise GroupError(f"action {self.name}: wrong shape")
        for row in R:
            if len(np.unique(row)) != N.order or not np.array_equal(row[N.mul], N.mul[np.ix_(row, row)]):
                raise GroupError(f"action {self.name}: not an automorphism")
        # realization[k1 k2] = realization[k1] o realization[k2]
        if not np.array_equal(R[K.mul], _composed(R, K)):
            raise GroupError(f"action {self.name}: not a homomorphism")


def _composed(R: np.ndarray, K: FiniteGroup) -> np.ndarray:
    k = K.order
    comp = np.empty((k, k, R.shape[1]), dtype=R.dtype)
    for a in range(k):
        comp[a] = R[a][R]
    return comp


def direct_product(G1: FiniteGroup, G2: FiniteGroup, label: str | None = None) -> FiniteGroup:
    """``G1 x G2`` with ``(a, b)`` at id ``a*|G2| + b``."""
    n2 = G2.order
    gens = [g * n2 for g in G1.generators] + list(G2.generators)
    elements = None
    if G1.elements is not None and G2.elements is not None:
        elements = [(a, b) for a in G1.elements for b in G2.elements]
    return FiniteGroup(direct_product_table(G1, G2), gens, label or f"{G1.label} x {G2.label}", elements)


def semidirect(N: FiniteGroup, K: FiniteGroup, action: ActionSpec, label: str | None = None) -> FiniteGroup:
    """``N : K`` with ``(n1,k1)(n2,k2) = (n1 k1(n2), k1 k2)``; ``(n, k)`` at id ``n*|K| + k``."""
    action.validate(N, K)
    R = np.asarray(action.realization, dtype=np.int64)
    nk = K.order
    ids = np.arange(N.order * nk)
    n_of, k_of = ids // nk, ids % nk
    twisted = R[k_of[:, None], n_of[None, :]]  # k1(n2)
    table = N.mul[n_of[:, None], twisted] * nk + K.mul[k_of[:, None], k_of[None, :]]
    gens = [g * nk for g in N.generators] + list(K.generators)
    return FiniteGroup(table, gens, label or f"{N.label}:{K.label}@{action.name}")


def _hom_to_matrices(K: FiniteGroup, gen_mats, p: int) -> list[np.ndarray]:
    """Extend generator matrices over F_p to a hom ``K -> GL(2,p)``."""
    if len(gen_mats) != len(K.generators):
        raise GroupError("one matrix per generator required")
    gen_mats = [np.array(m, dtype=np.int64) % p for m in gen_mats]
    tree = GeneratorTree(K, K.generators)
    mats = [None] * K.order
    mats[0] = np.eye(2, dtype=np.int64)
    for kids, parents, via in tree.layers:
        for kid, par, v in zip(kids, parents, via):
            mats[kid] = (mats[par] @ gen_mats[v]) % p
    for x in range(K.order):
        for g, m in zip(K.generators, gen_mats):
            if not np.array_equal(mats[K.mul[x, g]], (mats[x] @ m) % p):
                raise GroupError("generator matrices do not define a homomorphism")
    return mats


def _vector_basis(N: FiniteGroup, p: int) -> dict[tuple[int, int], int]:
    """Coordinates on ``N = C_p x C_p`` from its first two generators."""
    if N.order != p * p or not N.is_abelian() or len(N.generators) != 2:
        raise GroupError(f"expected C{p} x C{p} presented by two generators")
    g1, g2 = N.generators
    coords = {(x, y): int(N.mul[N.power(g1, x), N.power(g2, y)]) for x in range(p) for y in range(p)}
    if len(set(coords.values())) != p * p:
        raise GroupError("generators are not a basis")
    return coords


def linear_action(name: str, N: FiniteGroup, K: FiniteGroup, gen_mats, p: int, description: str = "") -> ActionSpec:
    coords = _vector_basis(N, p)
    mats = _hom_to_matrices(K, gen_mats, p)
    R = np.zeros((K.order, N.order), dtype=np.int64)
    for k, M in enumerate(mats):
        for (x, y), nid in coords.items():
            u, v = (M @ np.array([x, y])) % p
            R[k, nid] = coords[(int(u), int(v))]
    return ActionSpec(name, description, R)


def inversion_action(N: FiniteGroup, K: FiniteGroup) -> ActionSpec:
    """Every generator of K acts by inversion on the abelian group N."""
    if not N.is_abelian():
        raise GroupError("inversion action needs an abelian normal factor")
    tree = GeneratorTree(K, K.generators)
    parity = np.zeros(K.order, dtype=np.int64)
    for kids, parents, _ in tree.layers:
        parity[kids] = 1 - parity[parents]
    for x in range(K.order):
        for g in K.generators:
            if parity[K.mul[x, g]] != 1 - parity[x]:
                raise GroupError("generators of K do not map consistently to inversion")
    R = np.where(parity[:, None] == 1, N.inv[None, :], np.arange(N.order)[None, :])
    return ActionSpec("inv", "generators act by inversion", R)


def coordinate_permutation_action(N: FiniteGroup, K: FiniteGroup, d: int) -> ActionSpec:
    """S3 permuting the coordinates of ``(Z/d)^3`` modulo the diagonal.

    ``(a, b)`` stands for the class of ``(a, b, 0)``; a permutation moves
    coordinate ``i`` to slot ``pi(i)`` and the third slot is then subtracted.
    """
    if K.order != 6 or K.elements is None or any(len(p.images) != 3 for p in K.elements):
        raise GroupError("coordinate permutation needs S3 on three points")
    coords = {(a, b): int(N.mul[N.power(N.generators[0], a), N.power(N.generators[1], b)]) for a in range(d) for b in range(d)}
    if N.order != d * d or len(set(coords.values())) != d * d:
        raise GroupError(f"expected C{d} x C{d}")
    R = np.zeros((6, d * d), dtype=np.int64)
    for k, perm in enumerate(K.elements):
        for (a, b), nid in coords.items():
            w = [0, 0, 0]
            for i, val in enumerate((a, b, 0)):
                w[perm.images[i]] = val
            R[k, nid] = coords[((w[0] - w[2]) % d, (w[1] - w[2]) % d)]
    return ActionSpec("perm3", "S3 permutes coordinates of (Z/d)^3 / diagonal", R)


ROT = ((0, -1), (1, 0))
# i, j in SL(2,3): i^2 = j^2 = -1, j i j^-1 = i^-1
Q8_IN_SL23 = (((0, -1), (1, 0)), ((1, 1), (1, -1)))

ACTION_NAMES = ("inv", "perm3", "gl23_rot", "sl23_q8")


def resolve_action(name: str, N: FiniteGroup, K: FiniteGroup) -> ActionSpec:
    """Look up a named action of ``K`` on ``N``; the registry is closed."""
    if name == "inv":
        return inversion_action(N, K)
    if name == "perm3":
        d = int(round(N.order**0.5))
        return coordinate_permutation_action(N, K, d)
    if name == "gl23_rot":
        if K.order != 4 or len(K.generators) != 1:
            raise GroupError("gl23_rot needs C4 with one generator")
        return linear_action(name, N, K, [ROT], 3, "generator acts by (x,y) -> (-y,x)")
    if name == "sl23_q8":
        if K.order != 8 or len(K.generators) != 2:
            raise GroupError("sl23_q8 needs Q8 presented by i, j")
        return linear_action(name, N, K, list(Q8_IN_SL23), 3, "Q8 inside SL(2,3) acting linearly")
    raise GroupError(f"unknown action {name!r}; known: {', '.join(ACTION_NAMES)}")


def build_c3sq_c4() -> FiniteGroup:
    N = direct_product(build_cyclic(3), build_cyclic(3))
    K = build_cyclic(4)
    return semidirect(N, K, resolve_action("gl23_rot", N, K), "C3^2:C4")


def build_c3sq_q8() -> FiniteGroup:
    N = direct_product(build_cyclic(3), build_cyclic(3))
    K = build_quaternion(3)
    return semidirect(N, K, resolve_action("sl23_q8", N, K), "C3^2:Q8")


# ---------------------------------------------------------------------------
# Fermat curves and X_d


def build_fermat_aut(d: int) -> FiniteGroup:
    """``(Z/d)^2 : S3``, the automorphism group of the Fermat curve of degree d."""
    if d < 3:
        raise GroupError("Fermat groups need d >= 3")
    N = direct_product(build_cyclic(d), build_cyclic(d))
    K = build_symmetric(3)
    return semidirect(N, K, coordinate_permutation_action(N, K, d), f"Fermat({d})")


def fermat_conjugation_involution(d: int, G: FiniteGroup | None = None) -> InvolutiveAction:
    """``(a, b; pi) -> (-a, -b; pi)``: complex conjugation inverts the
    root-of-unity scalings and fixes the coordinate permutations."""
    G = G if G is not None else build_fermat_aut(d)
    if G.order != 6 * d * d:
        raise GroupError("not a Fermat group of this degree")
    N = direct_product(build_cyclic(d), build_cyclic(d))
    ids = np.arange(G.order)
    n_of, k_of = ids // 6, ids % 6
    return InvolutiveAction(G, N.inv[n_of] * 6 + k_of, f"fermat-conj({d})")


def xd_group(d: int) -> tuple[FiniteGroup, InvolutiveAction]:
    """``C_d x C_2`` with inversion, the Galois action for the curve X_d."""
    if d < 4 or d % 2:
        raise GroupError("X_d needs even d >= 4")
    G = direct_product(build_cyclic(d), build_cyclic(2), f"Xd({d})")
    return G, InvolutiveAction.inversion(G)


def permutation_conjugation(G: FiniteGroup, p: Perm, name: str = "") -> InvolutiveAction:
    """``x -> p x p^-1`` on a permutation group normalized by the involution ``p``."""
    if G.elements is None or not isinstance(G.elements[0], Perm):
        raise GroupError("needs a group whose elements are permutations")
    pinv = p.inverse()
    try:
        image = np.array([G.element_id(p * x * pinv) for x in G.elements], dtype=np.int64)
    except KeyError:
        raise GroupError(f"{p} does not normalize {G.label}") from None
    return InvolutiveAction(G, image, name or f"conj{p}")
