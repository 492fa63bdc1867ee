"""Compiled inner loops for the bulk involution scan.

Only used where the number of involutive automorphisms runs into the
hundreds of thousands (elementary abelian 2-groups of rank 6).  The plain
numpy paths in ``automorphisms`` and ``cohomology`` remain the reference.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def orbit_count(mul, inv, phi):
    """Number of orbits of ``f -> h^-1 f phi(h)`` on ``{f : f phi(f) = 1}``."""
    n = mul.shape[0]
    seen = np.zeros(n, dtype=np.bool_)
    count = 0
    for f in range(n):
        if mul[f, phi[f]] != 0 or seen[f]:
            continue
        count += 1
        for h in range(n):
            seen[mul[mul[inv[h], f], phi[h]]] = True
    return count


@njit(cache=True)
def _extend(mul, gens, gimg, k, img, mask, queue):
    n = mul.shape[0]
    tail = 0
    for z in range(n):
        if mask[z]:
            queue[tail] = z
            tail += 1
    head = 0
    while head < tail:
        z = queue[head]
        head += 1
        for i in range(k):
            w = mul[z, gens[i]]
            e = mul[img[z], gimg[i]]
            if img[w] < 0:
                img[w] = e
                mask[w] = True
                queue[tail] = w
                tail += 1
            elif img[w] != e:
                return -1
    for j in range(tail):
        z = queue[j]
        if z != 0 and img[z] == 0:
            return -1
    return tail


@njit(cache=True)
def involution_scan(mul, inv, fp, keep_images):
    """All involutive automorphisms, with the H^1 size of each.

    Depth-first: the least element ``x`` outside the current stable subgroup
    is paired with a ``y`` outside it of equal fingerprint, and the partial
    map is extended to ``<S, x, y>``.
    """
    n = mul.shape[0]
    depth_max = 2 * n + 2
    img = -np.ones((depth_max, n), dtype=np.int64)
    mask = np.zeros((depth_max, n), dtype=np.bool_)
    xs = np.zeros(depth_max, dtype=np.int64)
    ptr = np.zeros(depth_max, dtype=np.int64)
    ng = np.zeros(depth_max, dtype=np.int64)
    gens = np.zeros(2 * n + 2, dtype=np.int64)
    gimg = np.zeros(2 * n + 2, dtype=np.int64)
    queue = np.zeros(n, dtype=np.int64)

    cap = 1024
    sizes = np.zeros(cap, dtype=np.int64)
    images = np.zeros((cap if keep_images else 1, n), dtype=np.int64)
    found = 0

    img[0, 0] = 0
    mask[0, 0] = True
    if n == 1:
        sizes[0] = 1
        images[0, 0] = 0
        return sizes[:1], images[:1]
    xs[0] = 1
    d = 0
    while d >= 0:
        if ptr[d] >= n:
            d -= 1
            continue
        y = ptr[d]
        ptr[d] += 1
        x = xs[d]
        if mask[d, y] or fp[y] != fp[x]:
            continue
        k = ng[d]
        gens[k] = x
        gimg[k] = y
        k += 1
        if y != x:
            gens[k] = y
            gimg[k] = x
            k += 1
        img[d + 1, :] = img[d, :]
        mask[d + 1, :] = mask[d, :]
        size = _extend(mul, gens, gimg, k, img[d + 1], mask[d + 1], queue)
        if size < 0:
            continue
        if size == n:
            if found == cap:
                cap *= 2
                s2 = np.zeros(cap, dtype=np.int64)
                s2[:found] = sizes
                sizes = s2
                if keep_images:
                    i2 = np.zeros((cap, n), dtype=np.int64)
                    i2[:found] = images
                    images = i2
            sizes[found] = orbit_count(mul, inv, img[d + 1])
            if keep_images:
                images[found, :] = img[d + 1, :]
            found += 1
            continue
        nx = 0
        while mask[d + 1, nx]:
            nx += 1
        d += 1
        xs[d] = nx
        ptr[d] = 0
        ng[d] = k
    if keep_images:
        return sizes[:found], images[:found]
    return sizes[:found], images[:1]
