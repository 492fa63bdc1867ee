"""Exact 2x2 matrices over Z[zeta], zeta a primitive 2^(s-1)-th root of unity.

Ring elements are integer vectors of length ``L = 2^(s-2)`` representing
residues in ``Z[x]/(x^L + 1)``.  For ``s = 3`` this is ``Z[i]``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .groups import CapExceeded, FiniteGroup, GroupError, GroupHom, Subgroup, quotient

MAX_S = 8


@dataclass(frozen=True)
class CycloElem:
    coeffs: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, L: int) -> CycloElem:
        return cls((0,) * L)

    @classmethod
    def monomial(cls, L: int, k: int, c: int = 1) -> CycloElem:
        """``c * x^k`` reduced with ``x^L = -1``."""
        k %= 2 * L
        if k >= L:
            k -= L
            c = -c
        v = [0] * L
        v[k] = c
        return cls(tuple(v))

    def _check(self, other: CycloElem) -> None:
        if self.length != other.length:
            raise GroupError("elements of different cyclotomic rings")

    def __add__(self, other: CycloElem) -> CycloElem:
        self._check(other)
        return CycloElem(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CycloElem:
        return CycloElem(tuple(-a for a in self.coeffs))

    def __sub__(self, other: CycloElem) -> CycloElem:
        return self + (-other)

    def __mul__(self, other: CycloElem) -> CycloElem:
        self._check(other)
        L = self.length
        full = np.convolve(np.array(self.coeffs, dtype=object), np.array(other.coeffs, dtype=object))
        out = list(full[:L])
        for k, c in enumerate(full[L:]):
            out[k] -= c
        return CycloElem(tuple(int(c) for c in out))

    def is_zero(self) -> bool:
        return not any(self.coeffs)


@dataclass(frozen=True)
class Mat2Cyclo:
    a: CycloElem
    b: CycloElem
    c: CycloElem
    d: CycloElem

    @classmethod
    def identity(cls, L: int) -> Mat2Cyclo:
        one, zero = CycloElem.monomial(L, 0), CycloElem.zero(L)
        return cls(one, zero, zero, one)

    def __mul__(self, o: Mat2Cyclo) -> Mat2Cyclo:
        return Mat2Cyclo(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def scale(self, z: CycloElem) -> Mat2Cyclo:
        return Mat2Cyclo(z * self.a, z * self.b, z * self.c, z * self.d)

    def is_scalar(self) -> bool:
        return self.b.is_zero() and self.c.is_zero() and self.a == self.d

    def encode(self) -> bytes:
        return np.array(self.a.coeffs + self.b.coeffs + self.c.coeffs + self.d.coeffs, dtype="<i8").tobytes()

    @classmethod
    def decode(cls, data: bytes) -> Mat2Cyclo:
        v = np.frombuffer(data, dtype="<i8").tolist()
        L = len(v) // 4
        return cls(*(CycloElem(tuple(v[i * L : (i + 1) * L])) for i in range(4)))


def ring_length(s: int) -> int:
    return 2 ** (s - 2)


def zeta(s: int, power: int = 1) -> CycloElem:
    """``zeta^power`` with ``zeta`` a primitive ``2^(s-1)``-th root of unity."""
    return CycloElem.monomial(ring_length(s), power)


def imaginary_unit(s: int) -> CycloElem:
    return zeta(s, 2 ** (s - 3))


def lemma_family(s: int, t: int) -> list[Mat2Cyclo]:
    """Generators of the three families of 2-subgroups of GL(2, C) of order ``2^s``.

    t = 1: ``i diag(zeta, zeta^-1)``, ``[[0, i], [i, 0]]`` (needs s >= 4);
    t = 2: ``diag(zeta, zeta^-1)``, ``[[0, 1], [1, 0]]``;
    t = 3: ``diag(zeta, zeta^-1)``, ``[[0, i], [i, 0]]``.
    """
    if t not in (1, 2, 3):
        raise GroupError("family index must be 1, 2 or 3")
    if not 3 <= s <= MAX_S or (t == 1 and s < 4):
        raise GroupError(f"family {t} is not built for s = {s}")
    L = ring_length(s)
    zero, one, i = CycloElem.zero(L), CycloElem.monomial(L, 0), imaginary_unit(s)
    rot = Mat2Cyclo(zeta(s, 1), zero, zero, zeta(s, -1))
    if t == 1:
        return [rot.scale(i), Mat2Cyclo(zero, i, i, zero)]
    if t == 2:
        return [rot, Mat2Cyclo(zero, one, one, zero)]
    return [rot, Mat2Cyclo(zero, i, i, zero)]


class MatrixClosure:
    """Finite matrix group from generators, with its abstract Cayley table."""

    def __init__(self, gens: list[Mat2Cyclo], cap: int = 4096, label: str = "", L: int | None = None):
        if cap < 1:
            raise GroupError("cap must be positive")
        if not gens and L is None:
            raise GroupError("ring length needed for an empty generator list")
        L = L if L is not None else gens[0].a.length
        ident = Mat2Cyclo.identity(L)
        elems = [ident]
        index = {ident.encode(): 0}
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = x * g
                key = y.encode()
                if key not in index:
                    index[key] = len(elems)
                    elems.append(y)
                    if len(elems) > cap:
                        raise CapExceeded(f"matrix closure exceeds {cap} elements")
                    queue.append(y)
        n = len(elems)
        table = np.empty((n, n), dtype=np.int32)
        for p, x in enumerate(elems):
            for q, y in enumerate(elems):
                table[p, q] = index[(x * y).encode()]
        gen_ids = [index[g.encode()] for g in gens]
        self.elements = elems
        self.index = index
        self.group = FiniteGroup(table, gen_ids, label, elems)

    @property
    def order(self) -> int:
        return len(self.elements)

    def id_of(self, m: Mat2Cyclo) -> int:
        return self.index[m.encode()]


def closure(gens: list[Mat2Cyclo], cap: int = 4096, label: str = "") -> MatrixClosure:
    return MatrixClosure(gens, cap, label)


def family_closure(s: int, t: int) -> MatrixClosure:
    return MatrixClosure(lemma_family(s, t), label=f"CycMat({s},{t})")


def scalar_subgroup(M: MatrixClosure) -> Subgroup:
    return Subgroup(M.group, [i for i, m in enumerate(M.elements) if m.is_scalar()])


def projective_quotient(M: MatrixClosure) -> tuple[FiniteGroup, GroupHom]:
    """Image in PGL(2, C): the quotient by the scalar matrices."""
    return quotient(M.group, scalar_subgroup(M), f"P{M.group.label}")
