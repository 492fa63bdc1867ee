"""Finite groups as Cayley tables.

Every group is carried by the integers ``0..n-1`` with ``0`` the identity and
a dense ``n x n`` multiplication table.  Permutation and matrix realizations
are kept alongside (``FiniteGroup.elements``) when a builder has them, but all
algorithms here work on the table alone.
"""

from __future__ import annotations

import hashlib
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

DEFAULT_CLOSURE_CAP = 5000
NORMAL_SUBGROUP_CAP = 500
ISOMORPHISM_CAP = 64
EXHAUSTIVE_ASSOC_LIMIT = 256


class GroupError(ValueError):
    pass


class CapExceeded(GroupError):
    pass


class NotNormal(GroupError):
    pass


class DomainMismatch(GroupError):
    pass


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Perm:
    """A bijection of ``{0..k-1}`` stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise GroupError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, k: int) -> Perm:
        return cls(tuple(range(k)))

    @classmethod
    def from_cycles(cls, k: int, *cycles: Sequence[int]) -> Perm:
        """Build from disjoint cycles on ``{0..k-1}``, e.g. ``Perm.from_cycles(5, (0, 1), (2, 3))``."""
        images = list(range(k))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                images[a] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: Perm) -> Perm:
        # composition, right factor acts first
        if self.degree != other.degree:
            raise DomainMismatch("permutations on different domains")
        return Perm(tuple(self.images[j] for j in other.images))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def inverse(self) -> Perm:
        out = [0] * self.degree
        for i, j in enumerate(self.images):
            out[j] = i
        return Perm(tuple(out))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


# ---------------------------------------------------------------------------
# the group carrier


class FiniteGroup:
    """A finite group on ids ``0..n-1`` with identity ``0``.

    ``mul[a, b]`` is the id of ``a*b``.  Instances are treated as immutable;
    the table is flagged read-only.
    """

    def __init__(
        self,
        mul,
        generators: Iterable[int] = (),
        label: str = "",
        elements: Sequence | None = None,
    ):
        mul = np.ascontiguousarray(mul, dtype=np.int32)
        n = mul.shape[0]
        if mul.shape != (n, n) or n == 0:
            raise GroupError("multiplication table must be square and non-empty")
        if not (np.array_equal(mul[0], np.arange(n)) and np.array_equal(mul[:, 0], np.arange(n))):
            raise GroupError("id 0 is not a two-sided identity")
        rows, cols = np.nonzero(mul == 0)
        if len(rows) != n or not np.array_equal(np.sort(rows), np.arange(n)):
            raise GroupError("some element has no unique inverse")
        inv = np.empty(n, dtype=np.int32)
        inv[rows] = cols
        if not np.array_equal(mul[inv, np.arange(n)], np.zeros(n)):
            raise GroupError("left and right inverses differ")
        mul.setflags(write=False)
        inv.setflags(write=False)
        self.mul = mul
        self.inv = inv
        self.order = n
        self.generators = tuple(int(g) for g in generators)
        self.label = label
        self.elements = list(elements) if elements is not None else None
        self._lookup = None
        self._cache: dict = {}

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label or '?'}, order={self.order})"

    # element realizations --------------------------------------------------

    def element_id(self, element) -> int:
        if self.elements is None:
            raise GroupError(f"{self.label} carries no element realization")
        if self._lookup is None:
            self._lookup = {e: i for i, e in enumerate(self.elements)}
        return self._lookup[element]

    # cheap derived data ------------------------------------------------------

    def cayley_hash(self) -> str:
        if "hash" not in self._cache:
            h = hashlib.sha256()
            h.update(str(self.order).encode())
            h.update(self.mul.astype("<i4").tobytes())
            self._cache["hash"] = h.hexdigest()
        return self._cache["hash"]

    def element_orders(self) -> np.ndarray:
        if "orders" not in self._cache:
            n = self.order
            orders = np.zeros(n, dtype=np.int64)
            power = np.arange(n)
            k = 1
            idx = np.arange(n)
            while (orders == 0).any():
                hit = (power == 0) & (orders == 0)
                orders[hit] = k
                power = self.mul[power, idx]
                k += 1
            orders.setflags(write=False)
            self._cache["orders"] = orders
        return self._cache["orders"]

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def center(self) -> list[int]:
        return [int(z) for z in np.nonzero((self.mul == self.mul.T).all(axis=1))[0]]

    def power(self, x: int, k: int) -> int:
        result = 0
        base = x
        if k < 0:
            base = int(self.inv[x])
            k = -k
        while k:
            if k & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            k >>= 1
        return result

    def check_axioms(self, samples: int = 100_000, seed: int = 0) -> None:
        """Associativity (exhaustive up to 256 elements, sampled above) and generation."""
        n = self.order
        m = self.mul
        if n <= EXHAUSTIVE_ASSOC_LIMIT:
            for a in range(n):
                if not np.array_equal(m[m[a]], m[a][m]):
                    raise GroupError(f"associativity fails with left factor {a}")
        else:
            rng = np.random.default_rng(seed)
            a, b, c = rng.integers(0, n, size=(3, samples))
            if not np.array_equal(m[m[a, b], c], m[a, m[b, c]]):
                raise GroupError("associativity fails on a sampled triple")
        if len(closure_mask(self, self.generators).nonzero()[0]) != n:
            raise GroupError("generators do not generate the group")


# ---------------------------------------------------------------------------
# subgroups and homomorphisms


class Subgroup:
    """A subgroup of ``parent`` given by its sorted member ids."""

    def __init__(self, parent: FiniteGroup, members: Iterable[int], generators: Iterable[int] | None = None):
        self.parent = parent
        self.members = tuple(sorted({int(x) for x in members}))
        self._set = frozenset(self.members)
        self._gens = None if generators is None else tuple(int(g) for g in generators)
        self._group = None

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x) -> bool:
        return int(x) in self._set

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and other.parent is self.parent and other.members == self.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent!r})"

    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[list(self.members)] = True
        return m

    def generators(self) -> tuple[int, ...]:
        if self._gens is None:
            self._gens = scan_generators(self.parent, self.members)
        return self._gens

    def is_subgroup(self) -> bool:
        idx = np.array(self.members)
        m = self.mask()
        return bool(0 in self._set and m[self.parent.mul[np.ix_(idx, idx)]].all() and m[self.parent.inv[idx]].all())

    def as_group(self, label: str | None = None) -> FiniteGroup:
        """Re-index the members as ``0..|S|-1`` in increasing parent-id order."""
        if self._group is None:
            idx = np.array(self.members, dtype=np.int64)
            local = np.full(self.parent.order, -1, dtype=np.int64)
            local[idx] = np.arange(len(idx))
            table = local[self.parent.mul[np.ix_(idx, idx)]]
            gens = [int(local[g]) for g in self.generators()]
            elements = None
            if self.parent.elements is not None:
                elements = [self.parent.elements[i] for i in self.members]
            self._group = FiniteGroup(table, gens, label or f"sub{self.order}({self.parent.label})", elements)
        return self._group

    def local_id(self, x: int) -> int:
        return self.members.index(int(x))


@dataclass(frozen=True)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    image: np.ndarray

    def __call__(self, x: int) -> int:
        return int(self.image[x])

    def is_homomorphism(self) -> bool:
        img = np.asarray(self.image)
        if img.shape != (self.source.order,) or img[0] != 0:
            return False
        return bool(np.array_equal(img[self.source.mul], self.target.mul[np.ix_(img, img)]))

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, np.nonzero(np.asarray(self.image) == 0)[0])

    def is_surjective(self) -> bool:
        return len(np.unique(self.image)) == self.target.order


# ---------------------------------------------------------------------------
# construction by closure


def _choose_base(P: np.ndarray) -> list[int]:
    """Points whose images separate all rows of ``P``."""
    n, k = P.shape
    base: list[int] = []
    distinct = 1
    for point in range(k):
        if distinct == n:
            break
        trial = base + [point]
        cnt = len(np.unique(P[:, trial], axis=0))
        if cnt > distinct:
            base = trial
            distinct = cnt
    if distinct != n:
        raise GroupError("rows are not distinct")
    return base


class RowIndex:
    """Exact lookup of integer rows (all rows of ``P`` distinct)."""

    def __init__(self, P: np.ndarray, radix: int):
        self.base = _choose_base(P)
        self.radix = radix
        self._dict = None
        if radix ** max(len(self.base), 1) < 2**62:
            codes = self.encode(P[:, self.base])
            self.order = np.argsort(codes)
            self.sorted = codes[self.order]
        else:
            self._dict = {tuple(r): i for i, r in enumerate(P[:, self.base].tolist())}

    def encode(self, rows: np.ndarray) -> np.ndarray:
        codes = np.zeros(rows.shape[0], dtype=np.int64)
        for j in range(rows.shape[1]):
            codes = codes * self.radix + rows[:, j]
        return codes

    def lookup_base(self, rows: np.ndarray) -> np.ndarray:
        """Ids of rows given by their values on ``self.base``."""
        if self._dict is not None:
            return np.array([self._dict[tuple(r)] for r in rows.tolist()], dtype=np.int64)
        codes = self.encode(rows)
        pos = np.searchsorted(self.sorted, codes)
        pos = np.minimum(pos, len(self.sorted) - 1)
        if not np.array_equal(self.sorted[pos], codes):
            raise GroupError("row not found")
        return self.order[pos]


def table_from_permutations(P: np.ndarray) -> np.ndarray:
    """Cayley table for distinct permutations (rows of ``P``), product = composition."""
    P = np.asarray(P, dtype=np.int64)
    n, k = P.shape
    index = RowIndex(P, max(k, 1))
    base_cols = P[:, index.base]
    mul = np.empty((n, n), dtype=np.int32)
    for a in range(n):
        # (a*b)[x] = a[b[x]]
        mul[a] = index.lookup_base(P[a][base_cols])
    return mul


def close_generators(gens: Sequence[Perm], cap: int = DEFAULT_CLOSURE_CAP, label: str = "") -> FiniteGroup:
    """Group generated by permutations, ids in breadth-first discovery order."""
    gens = list(gens)
    if not gens:
        return FiniteGroup(np.zeros((1, 1), dtype=np.int32), (), label or "1", [Perm(())])
    k = gens[0].degree
    if any(g.degree != k for g in gens):
        raise DomainMismatch("generators act on different domains")
    ident = tuple(range(k))
    gen_imgs = [g.images for g in gens]
    seen = {ident: 0}
    elems = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gen_imgs:
            y = tuple(x[j] for j in g)
            if y not in seen:
                seen[y] = len(elems)
                elems.append(y)
                if len(elems) > cap:
                    raise CapExceeded(f"closure exceeds {cap} elements")
                queue.append(y)
    mul = table_from_permutations(np.array(elems))
    gen_ids = [seen[g] for g in gen_imgs]
    return FiniteGroup(mul, gen_ids, label, [Perm(e) for e in elems])


def group_from_table(mul, label: str = "", elements=None) -> FiniteGroup:
    """Wrap a table whose identity is already id 0; generators chosen greedily."""
    G = FiniteGroup(mul, (), label, elements)
    G.generators = greedy_generators(G, range(G.order))
    return G


# ---------------------------------------------------------------------------
# basic operations


def element_order(G: FiniteGroup, x: int) -> int:
    if not 0 <= x < G.order:
        raise GroupError(f"no element {x}")
    return int(G.element_orders()[x])


def closure_mask(G: FiniteGroup, seed: Iterable[int]) -> np.ndarray:
    seed = np.unique(np.asarray(list(seed), dtype=np.int64))
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    if seed.size == 0:
        return mask
    frontier = np.array([0])
    while frontier.size:
        new = np.unique(G.mul[np.ix_(frontier, seed)])
        new = new[~mask[new]]
        mask[new] = True
        frontier = new
    return mask


def subgroup_closure(G: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    seed = [int(s) for s in seed]
    return Subgroup(G, np.nonzero(closure_mask(G, seed))[0], [s for s in seed if s != 0] or None)


def scan_generators(G: FiniteGroup, members: Sequence[int]) -> tuple[int, ...]:
    """Generators picked in id order, skipping anything already generated."""
    gens: list[int] = []
    current = np.zeros(G.order, dtype=bool)
    current[0] = True
    for x in members:
        if not current[x]:
            gens.append(int(x))
            current = closure_mask(G, gens)
    return tuple(gens)


def greedy_generators(G: FiniteGroup, members: Sequence[int]) -> tuple[int, ...]:
    """A short generating sequence of the subgroup ``members``.

    First an element of maximal order, then repeatedly the element whose
    adjunction gives the largest closure; ties go to the least id.
    """
    members = [int(x) for x in members]
    target = len(members)
    if target == 1:
        return ()
    orders = G.element_orders()
    first = max(members, key=lambda x: (orders[x], -x))
    gens = [first]
    current = closure_mask(G, gens)
    size = int(current.sum())
    while size < target:
        best, best_size = None, size
        for x in members:
            if current[x]:
                continue
            s = int(closure_mask(G, gens + [x]).sum())
            if s > best_size:
                best, best_size = x, s
                if s == target:
                    break
        gens.append(best)
        current = closure_mask(G, gens)
        size = best_size
    return tuple(gens)


def conjugacy_classes(G: FiniteGroup) -> list[list[int]]:
    if "classes" not in G._cache:
        n = G.order
        label = np.full(n, -1, dtype=np.int64)
        classes = []
        allg = np.arange(n)
        for x in range(n):
            if label[x] >= 0:
                continue
            cls = np.unique(G.mul[G.mul[allg, x], G.inv])
            label[cls] = len(classes)
            classes.append([int(c) for c in cls])
        G._cache["classes"] = classes
        G._cache["class_of"] = label
    return G._cache["classes"]


def class_of(G: FiniteGroup) -> np.ndarray:
    conjugacy_classes(G)
    return G._cache["class_of"]


def is_normal(G: FiniteGroup, S: Subgroup) -> bool:
    m = S.mask()
    gens = list(S.generators())
    if not gens:
        return True
    allg = np.arange(G.order)
    conj = G.mul[G.mul[np.ix_(allg, gens)], G.inv[allg][:, None]]
    return bool(m[conj].all())


def normal_subgroups(G: FiniteGroup, cap: int = NORMAL_SUBGROUP_CAP) -> list[Subgroup]:
    """All normal subgroups, sorted by order then members.

    Normal closures of single classes are joined pairwise until nothing new
    appears; every normal subgroup is a union of classes and hence such a join.
    """
    if G.order > cap:
        raise CapExceeded(f"normal subgroup search capped at order {cap}")
    found: dict[bytes, np.ndarray] = {}

    def add(mask):
        key = np.packbits(mask).tobytes()
        if key not in found:
            found[key] = mask
            return True
        return False

    add(closure_mask(G, [0]))
    base = []
    for cls in conjugacy_classes(G):
        m = closure_mask(G, cls)
        base.append(m)
        add(m)
    frontier = list(found.values())
    while frontier:
        new = []
        for a in frontier:
            for b in base:
                if (b & ~a).any():
                    seed = np.nonzero(a | b)[0]
                    m = closure_mask(G, seed)
                    if add(m):
                        new.append(m)
        frontier = new
    subs = [Subgroup(G, np.nonzero(m)[0]) for m in found.values()]
    subs.sort(key=lambda s: (s.order, s.members))
    return subs


def normalizer(G: FiniteGroup, S: Subgroup) -> Subgroup:
    m = S.mask()
    gens = list(S.generators())
    allg = np.arange(G.order)
    if not gens:
        return Subgroup(G, allg)
    conj = G.mul[G.mul[np.ix_(allg, gens)], G.inv[allg][:, None]]
    return Subgroup(G, np.nonzero(m[conj].all(axis=1))[0])


def quotient(G: FiniteGroup, N: Subgroup, label: str | None = None) -> tuple[FiniteGroup, GroupHom]:
    """``G/N`` with cosets ordered by least member id, and the projection."""
    if not is_normal(G, N):
        raise NotNormal("subgroup is not normal")
    n = G.order
    members = np.array(N.members)
    coset_of = np.full(n, -1, dtype=np.int64)
    reps = []
    for x in range(n):
        if coset_of[x] >= 0:
            continue
        coset_of[G.mul[x, members]] = len(reps)
        reps.append(x)
    reps = np.array(reps)
    table = coset_of[G.mul[np.ix_(reps, reps)]]
    gens = []
    for g in G.generators:
        c = int(coset_of[g])
        if c and c not in gens:
            gens.append(c)
    Q = FiniteGroup(table, gens, label or f"{G.label}/N{N.order}")
    return Q, GroupHom(G, Q, coset_of.astype(np.int32))


def two_part(n: int) -> int:
    return n & -n


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def sylow2_containing(G: FiniteGroup, seed: int = 0) -> Subgroup:
    """A Sylow 2-subgroup of ``G`` containing the 2-element ``seed``.

    Grows ``P = <seed>`` inside its normalizer: the first ``g`` (by id) in
    ``N(P) \\ P`` some 2-power of which lies in ``P`` is adjoined.
    """
    if not is_power_of_two(element_order(G, seed)):
        raise GroupError("seed must have 2-power order")
    target = two_part(G.order)
    P = subgroup_closure(G, [seed])
    while P.order < target:
        Pm = P.mask()
        chosen = None
        for g in normalizer(G, P).members:
            if Pm[g]:
                continue
            j, x = 1, g
            while not Pm[x]:
                x = int(G.mul[x, g])
                j += 1
            if is_power_of_two(j):
                chosen = g
                break
        if chosen is None:
            raise GroupError("no 2-element in the normalizer quotient; table is inconsistent")
        P = subgroup_closure(G, list(P.generators()) + [chosen])
    return P


def frattini_rank_2group(P: FiniteGroup) -> int:
    """Minimal number of generators of a 2-group, via squares and commutators."""
    if not is_power_of_two(P.order):
        raise GroupError("not a 2-group")
    if P.order == 1:
        return 0
    n = P.order
    allx = np.arange(n)
    squares = P.mul[allx, allx]
    comm = P.mul[P.mul[np.ix_(P.inv, P.inv)], P.mul].ravel()
    phi = closure_mask(P, np.unique(np.concatenate([squares, comm])))
    return int(round(math.log2(n // int(phi.sum()))))


def min_generators_bruteforce(G: FiniteGroup, max_size: int = 3) -> int:
    """Smallest ``k`` such that some ``k`` elements generate ``G``; exhaustive."""
    from itertools import combinations

    if G.order == 1:
        return 0
    for k in range(1, max_size + 1):
        for combo in combinations(range(1, G.order), k):
            if closure_mask(G, combo).all():
                return k
    raise GroupError(f"needs more than {max_size} generators")


def direct_product_table(A: FiniteGroup, B: FiniteGroup) -> np.ndarray:
    """Table of A x B with pair (a, b) at id ``a*|B| + b``."""
    nb = B.order
    ia = np.repeat(np.arange(A.order), nb)
    ib = np.tile(np.arange(nb), A.order)
    return A.mul[np.ix_(ia, ia)] * nb + B.mul[np.ix_(ib, ib)]


# ---------------------------------------------------------------------------
# homomorphisms determined by generator images


class GeneratorTree:
    """Breadth-first spanning tree of ``<gens>`` in the Cayley graph, by layers."""

    def __init__(self, G: FiniteGroup, gens: Sequence[int]):
        self.gens = np.array(gens, dtype=np.int64)
        mask = np.zeros(G.order, dtype=bool)
        mask[0] = True
        self.layers = []
        frontier = np.array([0], dtype=np.int64)
        while frontier.size:
            # candidate children in (parent, generator) order; keep first hit
            kids = G.mul[np.ix_(frontier, self.gens)].ravel()
            parents = np.repeat(frontier, len(self.gens))
            via = np.tile(np.arange(len(self.gens)), len(frontier))
            fresh = ~mask[kids]
            kids, parents, via = kids[fresh], parents[fresh], via[fresh]
            kids, first = np.unique(kids, return_index=True)
            order = np.argsort(first)
            kids, parents, via = kids[order], parents[first[order]], via[first[order]]
            mask[kids] = True
            if kids.size:
                self.layers.append((kids, parents, via))
            frontier = kids
        self.mask = mask
        self.members = np.nonzero(mask)[0]
        self.succ = G.mul[np.ix_(self.members, self.gens)]


def extend_images(G: FiniteGroup, H: FiniteGroup, tree: GeneratorTree, images) -> np.ndarray | None:
    """The hom ``<gens> -> H`` sending ``gens[i]`` to ``images[i]``, or None if none exists.

    Entries outside ``<gens>`` are -1.
    """
    images = np.asarray(images, dtype=np.int64)
    img = np.full(G.order, -1, dtype=np.int64)
    img[0] = 0
    for kids, parents, via in tree.layers:
        img[kids] = H.mul[img[parents], images[via]]
    lhs = img[tree.succ]
    rhs = H.mul[img[tree.members][:, None], images[None, :]]
    if not np.array_equal(lhs, rhs):
        return None
    return img


def fingerprints(G: FiniteGroup) -> list[tuple[int, int, int]]:
    """(order, class size, class size of the square) per element."""
    if "fingerprint" not in G._cache:
        orders = G.element_orders()
        cls = conjugacy_classes(G)
        sizes = np.array([len(cls[c]) for c in class_of(G)])
        sq = G.mul[np.arange(G.order), np.arange(G.order)]
        G._cache["fingerprint"] = [(int(orders[x]), int(sizes[x]), int(sizes[sq[x]])) for x in range(G.order)]
    return G._cache["fingerprint"]


def search_homs(
    G: FiniteGroup,
    H: FiniteGroup,
    gens: Sequence[int],
    candidates: Sequence[Sequence[int]],
    bijective: bool = False,
    first_only: bool = False,
    limit: int | None = None,
) -> list[np.ndarray]:
    """Backtrack over images of ``gens`` drawn from ``candidates[i]``.

    Each prefix is extended to the subgroup it generates and rejected on the
    first inconsistency, so whole branches die early.  Returns image arrays of
    all homomorphisms found (bijective ones only if requested).
    """
    gens = list(gens)
    trees = [GeneratorTree(G, gens[: j + 1]) for j in range(len(gens))]
    if not gens or trees[-1].members.size != G.order:
        raise GroupError("generators do not generate the source group")
    found: list[np.ndarray] = []
    chosen: list[int] = []

    def rec(j: int) -> bool:
        tree = trees[j]
        for c in candidates[j]:
            chosen.append(c)
            img = extend_images(G, H, tree, chosen)
            ok = img is not None
            if ok and bijective:
                ok = len(np.unique(img[tree.members])) == tree.members.size
            if ok:
                if j + 1 == len(gens):
                    found.append(img)
                    if limit is not None and len(found) > limit:
                        raise CapExceeded(f"more than {limit} homomorphisms")
                    if first_only:
                        chosen.pop()
                        return True
                elif rec(j + 1):
                    chosen.pop()
                    return True
            chosen.pop()
        return False

    rec(0)
    return found


def is_isomorphic_small(G1: FiniteGroup, G2: FiniteGroup, cap: int = ISOMORPHISM_CAP) -> bool:
    if G1.order != G2.order:
        return False
    if G1.order > cap:
        raise CapExceeded(f"isomorphism testing capped at order {cap}")
    if G1.order == 1:
        return True
    f1, f2 = fingerprints(G1), fingerprints(G2)
    if sorted(f1) != sorted(f2):
        return False
    if sorted(map(len, conjugacy_classes(G1))) != sorted(map(len, conjugacy_classes(G2))):
        return False
    gens = greedy_generators(G1, range(G1.order))
    cands = [[y for y in range(G2.order) if f2[y] == f1[g]] for g in gens]
    return bool(search_homs(G1, G2, gens, cands, bijective=True, first_only=True))


def find_embedding(G: FiniteGroup, H: FiniteGroup) -> np.ndarray | None:
    """An injective homomorphism ``G -> H`` (image array), or None."""
    if H.order % G.order:
        return None
    if G.order == 1:
        return np.zeros(1, dtype=np.int64)
    og, oh = G.element_orders(), H.element_orders()
    gens = greedy_generators(G, range(G.order))
    cands = [np.nonzero(oh == og[g])[0].tolist() for g in gens]
    found = search_homs(G, H, gens, cands, bijective=True, first_only=True)
    return found[0] if found else None
