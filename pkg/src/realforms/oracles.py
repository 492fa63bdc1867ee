"""Slow, independent reference computations used to cross-check the fast paths."""

from __future__ import annotations

from collections import deque
from itertools import product

import numpy as np

from .groups import FiniteGroup, GroupError, scan_generators

BRUTE_FORCE_LIMIT = 24


def _extend_by_words(G: FiniteGroup, gens, images) -> np.ndarray | None:
    """Map each element, reached as a word in ``gens``, to the same word in ``images``.

    Returns ``None`` if two words for one element disagree or the result is
    not multiplicative.
    """
    img = -np.ones(G.order, dtype=np.int64)
    img[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g, t in zip(gens, images):
            y = int(G.mul[x, g])
            v = int(G.mul[img[x], t])
            if img[y] < 0:
                img[y] = v
                queue.append(y)
            elif img[y] != v:
                return None
    for a in range(G.order):
        for b in range(G.order):
            if img[G.mul[a, b]] != G.mul[img[a], img[b]]:
                return None
    return img


def brute_force_automorphisms(G: FiniteGroup, limit: int = BRUTE_FORCE_LIMIT) -> set[tuple[int, ...]]:
    """Every bijective homomorphism ``G -> G``, trying all generator images."""
    if G.order > limit:
        raise GroupError(f"brute force capped at order {limit}")
    gens = list(scan_generators(G, range(G.order))) or [0]
    out = set()
    for images in product(range(G.order), repeat=len(gens)):
        img = _extend_by_words(G, gens, images)
        if img is not None and len(set(img.tolist())) == G.order:
            out.add(tuple(int(v) for v in img))
    return out


def brute_force_h1_size(G: FiniteGroup, phi) -> int:
    """Orbit count by union-find over the pairs ``f ~ h^-1 f phi(h)``."""
    parent = list(range(G.order))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cocycles = [f for f in range(G.order) if G.mul[f, phi.image[f]] == 0]
    for f in cocycles:
        for h in range(G.order):
            g = int(G.mul[G.mul[G.inv[h], f], phi.image[h]])
            parent[find(g)] = find(f)
    return len({find(f) for f in cocycles})
