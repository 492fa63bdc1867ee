"""First cohomology of the order-2 group with coefficients in a finite group.

A Galois action is an involutive automorphism ``phi`` of ``H``.  Cocycles are
the ``f`` with ``f * phi(f) = 1``; ``H`` acts on them on the right by
``f . h = h^-1 f phi(h)`` and the orbits are the cohomology classes.  The
stabilizer of a cocycle plays the part of the automorphism group of the
corresponding real form.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .automorphisms import InvolutiveAction, restrict_action
from .groups import (
    FiniteGroup,
    GroupError,
    Subgroup,
    closure_mask,
    direct_product_table,
    sylow2_containing,
    two_part,
)


@dataclass(frozen=True)
class CocycleSet:
    group: FiniteGroup
    action: InvolutiveAction
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, f) -> bool:
        return int(f) in self.members


@dataclass(frozen=True)
class CohomologyClass:
    representative: int
    orbit_size: int
    stabilizer_order: int
    orbit: tuple[int, ...] = field(repr=False, default=())


@dataclass(frozen=True)
class H1Summary:
    group_order: int
    classes: tuple[CohomologyClass, ...]
    z1_size: int

    @property
    def h1_size(self) -> int:
        return len(self.classes)

    @property
    def mass(self) -> Fraction:
        return Fraction(self.z1_size, self.group_order)

    def class_of(self) -> dict[int, int]:
        """cocycle id -> index of its class."""
        return {f: i for i, c in enumerate(self.classes) for f in c.orbit}


def cocycle_set(H: FiniteGroup, phi: InvolutiveAction) -> CocycleSet:
    if phi.group is not H:
        raise GroupError("action belongs to a different group")
    x = np.arange(H.order)
    members = np.nonzero(H.mul[x, phi.image] == 0)[0]
    return CocycleSet(H, phi, tuple(int(f) for f in members))


def twisted_orbit(H: FiniteGroup, phi: InvolutiveAction, f: int) -> np.ndarray:
    """``h^-1 f phi(h)`` for every ``h``, indexed by ``h``."""
    return H.mul[H.mul[H.inv, f], phi.image]


def h1(H: FiniteGroup, phi: InvolutiveAction) -> H1Summary:
    """Orbit decomposition of the cocycles, least cocycle first in each class."""
    Z = cocycle_set(H, phi)
    seen = np.zeros(H.order, dtype=bool)
    classes = []
    for f in Z.members:
        if seen[f]:
            continue
        images = twisted_orbit(H, phi, f)
        stab = int((images == f).sum())
        orbit = np.unique(images)
        seen[orbit] = True
        classes.append(CohomologyClass(f, len(orbit), stab, tuple(int(o) for o in orbit)))
    return H1Summary(H.order, tuple(classes), len(Z))


def h1_abelian_quotient(H: FiniteGroup, phi: InvolutiveAction) -> int:
    """``|Z^1 / {phi(h) h^-1}|`` for abelian ``H``: cocycles modulo coboundaries."""
    if not H.is_abelian():
        raise GroupError("the quotient description needs an abelian group")
    x = np.arange(H.order)
    z1 = np.nonzero(H.mul[x, phi.image] == 0)[0]
    boundaries = np.unique(H.mul[phi.image, H.inv])
    zmask = np.zeros(H.order, dtype=bool)
    zmask[z1] = True
    if not zmask[boundaries].all():
        raise GroupError("coboundaries are not cocycles; action is not involutive")
    return len(z1) // len(boundaries)


@dataclass(frozen=True)
class MassReport:
    total: Fraction
    ratio: Fraction
    equality_case: bool
    abelian_inversion: bool

    @property
    def consistent(self) -> bool:
        return self.total == self.ratio and self.ratio <= 1 and self.equality_case == self.abelian_inversion


def mass_report(H: FiniteGroup, phi: InvolutiveAction, summary: H1Summary | None = None) -> MassReport:
    """Sum of ``1/|stabilizer|`` over classes against ``|Z^1|/|H|``, exactly."""
    summary = summary or h1(H, phi)
    total = sum((Fraction(1, c.stabilizer_order) for c in summary.classes), Fraction(0))
    ratio = summary.mass
    abelian_inversion = H.is_abelian() and phi.is_inversion()
    return MassReport(total, ratio, ratio == 1, abelian_inversion)


# ---------------------------------------------------------------------------
# extension by the Galois involution and the stable Sylow 2-subgroup


@dataclass(frozen=True)
class ExtensionGroup:
    """``K = H : <s>`` with ``s`` acting as ``phi``; ``(h, e)`` sits at id ``2h + e``."""

    K: FiniteGroup
    sigma: int

    def embed(self, h: int) -> int:
        return 2 * int(h)

    def is_in_h(self, k: int) -> bool:
        return int(k) % 2 == 0


def extension(H: FiniteGroup, phi: InvolutiveAction) -> ExtensionGroup:
    C2 = np.array([[0, 1], [1, 0]])
    ids = np.arange(2 * H.order)
    h_of, e_of = ids // 2, ids % 2
    twisted = np.where(e_of[:, None] == 1, phi.image[h_of][None, :], h_of[None, :])
    table = H.mul[h_of[:, None], twisted] * 2 + C2[e_of[:, None], e_of[None, :]]
    gens = [2 * g for g in H.generators] + [1]
    return ExtensionGroup(FiniteGroup(table, gens, f"{H.label}:<s>"), 1)


@dataclass
class SylowReduction:
    H: FiniteGroup
    phi: InvolutiveAction
    subgroup: Subgroup  # H_2 inside H
    action: InvolutiveAction  # phi restricted, on H_2's own ids
    summary: H1Summary  # H^1 with coefficients in H_2

    @property
    def group(self) -> FiniteGroup:
        return self.subgroup.as_group()


def stable_sylow2(H: FiniteGroup, phi: InvolutiveAction) -> SylowReduction:
    """A ``phi``-stable Sylow 2-subgroup: a Sylow 2-subgroup of ``H : <s>``
    through ``s``, intersected with ``H``."""
    ext = extension(H, phi)
    S = sylow2_containing(ext.K, ext.sigma)
    members = [k // 2 for k in S.members if ext.is_in_h(k)]
    H2 = Subgroup(H, members)
    if H2.order != two_part(H.order):
        raise AssertionError("intersection is not a Sylow 2-subgroup")
    if set(phi.image[list(H2.members)].tolist()) != set(H2.members):
        raise AssertionError("Sylow 2-subgroup is not stable under the action")
    action = restrict_action(phi, H2)
    return SylowReduction(H, phi, H2, action, h1(action.group, action))


@dataclass(frozen=True)
class ComparisonMap:
    mapping: tuple[int, ...]  # class of H_2 -> class of H
    surjective: bool
    fibres: tuple[int, ...]  # preimage count per class of H


def comparison_map(H: FiniteGroup, phi: InvolutiveAction, red: SylowReduction, full: H1Summary | None = None) -> ComparisonMap:
    """Send each class of ``H^1(G, H_2)`` to the class of the same cocycle in ``H``."""
    if red.H is not H or red.phi is not phi:
        raise GroupError("reduction was computed for a different pair")
    full = full or h1(H, phi)
    where = full.class_of()
    mapping = tuple(where[red.subgroup.members[c.representative]] for c in red.summary.classes)
    counts = Counter(mapping)
    fibres = tuple(counts.get(i, 0) for i in range(full.h1_size))
    return ComparisonMap(mapping, all(fibres), fibres)


def sylow_mass_report(red: SylowReduction) -> MassReport:
    return mass_report(red.action.group, red.action, red.summary)


# ---------------------------------------------------------------------------
# corollaries


@dataclass(frozen=True)
class Implication:
    name: str
    premise: bool
    conclusion: bool
    witness: int | None

    @property
    def holds(self) -> bool:
        return not self.premise or self.conclusion


def corollary_audit(H: FiniteGroup, phi: InvolutiveAction, summary: H1Summary | None = None) -> list[Implication]:
    """The three consequences of the mass formulas, checked on one pair.

    trivial stabilizer => abelian and one class;
    odd stabilizer => odd order and one class;
    odd order => one class.
    """
    summary = summary or h1(H, phi)
    single = summary.h1_size == 1
    trivial = [c.representative for c in summary.classes if c.stabilizer_order == 1]
    odd = [c.representative for c in summary.classes if c.stabilizer_order % 2]
    return [
        Implication("trivial-stabilizer", bool(trivial), H.is_abelian() and single, trivial[0] if trivial else None),
        Implication("odd-stabilizer", bool(odd), H.order % 2 == 1 and single, odd[0] if odd else None),
        Implication("odd-order", H.order % 2 == 1, single, None),
    ]
