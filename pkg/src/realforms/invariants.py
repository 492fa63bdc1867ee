"""The invariant m(H) and the bounds built from it.

``m(H)`` is the largest ``|H^1|`` over all involutive actions on ``H``
(the trivial one included).  Conjugate actions give the same count, so it
is enough to run over conjugacy-class representatives of involutions in
``Aut(H)``; when ``Aut(H)`` is too large to tabulate every involution is
enumerated instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .automorphisms import (
    AUT_ORDER_CAP,
    AUT_SOURCE_CAP,
    InvolutiveAction,
    NotCharacteristic,
    automorphism_group,
    involution_class_reps,
    involution_scan,
    is_characteristic,
)
from .builders import build_cyclic, build_dihedral, build_quaternion, build_sl23, direct_product
from .cohomology import h1
from .cyclo import family_closure, projective_quotient
from .groups import (
    CapExceeded,
    FiniteGroup,
    GroupError,
    NotNormal,
    Subgroup,
    conjugacy_classes,
    frattini_rank_2group,
    is_isomorphic_small,
    is_normal,
    quotient,
    subgroup_closure,
    sylow2_containing,
)


class NotAbelian(GroupError):
    pass


@dataclass(frozen=True)
class MEntry:
    label: str
    h1_size: int
    class_size: int  # conjugacy-class size in Aut(H), or number of involutions with this count
    class_index: int | None = None


@dataclass(frozen=True)
class MReport:
    group_label: str
    group_order: int
    entries: tuple[MEntry, ...]
    method: str  # "class-representatives" or "all-involutions"

    @property
    def m_value(self) -> int:
        return max(e.h1_size for e in self.entries)

    @property
    def witness(self) -> MEntry:
        return next(e for e in self.entries if e.h1_size == self.m_value)

    @property
    def trivial_h1(self) -> int:
        return self.entries[0].h1_size


def m_invariant(H: FiniteGroup, cache=None) -> MReport:
    """``m(H)`` with the ``|H^1|`` of every involution class of ``Aut(H)``."""
    if H.order > AUT_SOURCE_CAP:
        raise CapExceeded(f"m(H) needs Aut(H); capped at |H| <= {AUT_SOURCE_CAP}")
    try:
        A = automorphism_group(H, cache=cache)
    except CapExceeded:
        return m_by_involution_scan(H)
    entries = []
    for rep in involution_class_reps(A):
        label = "trivial" if rep.class_index == 0 else f"phi{rep.class_index}"
        entries.append(MEntry(label, h1(H, rep).h1_size, rep.class_size, rep.class_index))
    return MReport(H.label, H.order, tuple(entries), "class-representatives")


def m_by_involution_scan(H: FiniteGroup) -> MReport:
    """``m(H)`` from every involutive automorphism, grouped by ``|H^1|``."""
    sizes, _ = involution_scan(H)
    trivial = h1(H, InvolutiveAction.trivial(H)).h1_size
    values, counts = np.unique(sizes, return_counts=True)
    entries = [MEntry("trivial", trivial, 1, 0)]
    for v, c in zip(values.tolist(), counts.tolist()):
        entries.append(MEntry(f"h1={v}", int(v), int(c)))
    return MReport(H.label, H.order, tuple(entries), "all-involutions")


def trivial_action_h1_count(H: FiniteGroup) -> int:
    """Conjugacy classes of elements of order <= 2; equals ``|H^1|`` for the trivial action."""
    orders = H.element_orders()
    count = sum(1 for cls in conjugacy_classes(H) if orders[cls[0]] <= 2)
    direct = h1(H, InvolutiveAction.trivial(H)).h1_size
    if count != direct:
        raise AssertionError(f"class count {count} differs from orbit count {direct}")
    return count


@dataclass(frozen=True)
class AbelianCheck:
    label: str
    m_value: int
    predicted: int
    involutions: int

    @property
    def agree(self) -> bool:
        return self.m_value == self.predicted


def m_abelian_check(H: FiniteGroup) -> AbelianCheck:
    """``m(H)`` by enumerating every involutive automorphism, against ``2^l(H_2)``."""
    if not H.is_abelian():
        raise NotAbelian(f"{H.label} is not abelian")
    sizes, _ = involution_scan(H)
    H2 = sylow2_containing(H, 0).as_group()
    predicted = 2 ** frattini_rank_2group(H2)
    return AbelianCheck(H.label, int(sizes.max()), predicted, len(sizes))


@dataclass(frozen=True)
class CharsubResult:
    is_characteristic: bool
    m_h: int
    m_k: int
    m_quotient: int

    @property
    def holds(self) -> bool:
        return self.m_h <= self.m_k * self.m_quotient


def charsub_inequality(H: FiniteGroup, K: Subgroup, cache=None) -> CharsubResult:
    """``m(H) <= m(K) m(H/K)`` for a characteristic subgroup ``K``."""
    if not is_normal(H, K):
        raise NotNormal("K is not normal in H")
    A = automorphism_group(H, cache=cache)
    if not is_characteristic(A, K):
        raise NotCharacteristic("K is not characteristic in H")
    Q, _ = quotient(H, K)
    return CharsubResult(
        True,
        m_invariant(H, cache).m_value,
        m_invariant(K.as_group(), cache).m_value,
        m_invariant(Q, cache).m_value,
    )


@dataclass(frozen=True)
class DihedralCheck:
    n: int
    closed_form: int
    enumerated: int | None

    @property
    def agree(self) -> bool:
        return self.enumerated is None or self.enumerated == self.closed_form


def dihedral_m(n: int, enumerate_up_to: int = 16) -> DihedralCheck:
    """``m(D_2n)``: 2 for odd n, 4 for even n; enumerated as well for small n."""
    if n < 3:
        raise GroupError("dihedral groups need n >= 3")
    closed = 2 if n % 2 else 4
    enumerated = m_invariant(build_dihedral(n)).m_value if n <= enumerate_up_to else None
    return DihedralCheck(n, closed, enumerated)


@dataclass(frozen=True)
class CurveBoundResult:
    degree: int
    bound: int
    residue: str


def plane_curve_bound(d: int) -> CurveBoundResult:
    """Upper bound on the number of real forms of a smooth plane curve of degree ``d >= 4``."""
    if d < 4:
        raise GroupError("the bound is stated for degree d >= 4")
    if d % 2:
        return CurveBoundResult(d, 2, "1 mod 2")
    if d % 4 == 2:
        return CurveBoundResult(d, 4, "2 mod 4")
    return CurveBoundResult(d, 8, "0 mod 4")


# ---------------------------------------------------------------------------
# finite 2-subgroups of GL(2, C)


def cyclic_subgroups_of_order(G: FiniteGroup, k: int) -> list[Subgroup]:
    orders = G.element_orders()
    seen = {}
    for x in np.nonzero(orders == k)[0]:
        S = subgroup_closure(G, [int(x)])
        seen.setdefault(S.members, S)
    return list(seen.values())


def is_dihedral_of_order(Q: FiniteGroup, order: int) -> bool:
    """Dihedral of the given order; order 4 means the Klein four-group."""
    if Q.order != order:
        return False
    if order == 4:
        return Q.is_abelian() and bool((Q.element_orders() <= 2).all())
    return is_isomorphic_small(Q, build_dihedral(order // 2))


@dataclass(frozen=True)
class FamilyAudit:
    s: int
    t: int
    order: int
    projective_order: int
    projective_dihedral: bool
    cyclic_count: int
    characteristic: bool
    m_value: int

    @property
    def passed(self) -> bool:
        return (
            self.order == 2**self.s
            and self.projective_order == 2 ** (self.s - 1)
            and self.projective_dihedral
            and self.cyclic_count == 1
            and self.characteristic
            and self.m_value <= 4
        )


def lemma_families(s: int) -> tuple[int, ...]:
    return (2, 3) if s == 3 else (1, 2, 3)


def family_audit(s: int, cache=None) -> list[FamilyAudit]:
    """For each family of order ``2^s``: order, dihedral projective image, unique
    characteristic cyclic subgroup of index 2, and ``m <= 4``.

    Family 1 is skipped at s = 3, where the order-8 groups are handled by
    direct classification.
    """
    if not 3 <= s <= 6:
        raise GroupError("audit runs for 3 <= s <= 6")
    out = []
    for t in lemma_families(s):
        M = family_closure(s, t)
        H = M.group
        P, _ = projective_quotient(M)
        cyc = cyclic_subgroups_of_order(H, 2 ** (s - 1))
        A = automorphism_group(H, cache=cache)
        characteristic = len(cyc) == 1 and is_characteristic(A, cyc[0])
        out.append(
            FamilyAudit(
                s,
                t,
                H.order,
                P.order,
                is_dihedral_of_order(P, 2 ** (s - 1)),
                len(cyc),
                characteristic,
                m_invariant(H, cache).m_value,
            )
        )
    return out


def gl2_sample_groups() -> list[FiniteGroup]:
    """Finite groups realizable in GL(2, C) used for the sampled ``m <= 8`` check."""
    groups = [build_cyclic(n) for n in (2, 3, 4, 6, 8, 12)]
    for m, k in ((2, 2), (2, 4), (4, 4), (2, 6), (4, 8), (6, 6), (8, 8)):
        groups.append(direct_product(build_cyclic(m), build_cyclic(k)))
    for s in range(3, 6):
        for t in lemma_families(s):
            groups.append(family_closure(s, t).group)
    groups += [build_quaternion(4), build_quaternion(5), build_dihedral(4), build_dihedral(8), build_sl23()]
    return groups


@dataclass(frozen=True)
class SampleAudit:
    label: str
    order: int
    m_value: int
    bound: int = 8
    kind: str = "sampled evidence"

    @property
    def passed(self) -> bool:
        return self.m_value <= self.bound


def gl2_sample_audit(cache=None) -> list[SampleAudit]:
    """Sampled evidence (not a proof) that ``m(M) <= 8`` for finite ``M`` in GL(2, C)."""
    return [SampleAudit(G.label, G.order, m_invariant(G, cache).m_value) for G in gl2_sample_groups()]


def explore_above_six(cache=None) -> list[SampleAudit]:
    """Groups in the GL(2, C) sample whose ``m`` exceeds 6; reported, never asserted."""
    return [r for r in gl2_sample_audit(cache) if r.m_value > 6]
