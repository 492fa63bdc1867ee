"""The fixed list of groups that the audits sweep over.

Every entry is a group expression, so the corpus is also a parser test.
Orders stay at or below 432.  Elementary abelian groups of rank above 3 are
left out here because their automorphism groups exceed the table cap; they
are covered by the all-involutions scan in the abelian sweep instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .automorphisms import InvolutiveAction, automorphism_group, involution_class_reps
from .builders import build_cyclic, direct_product
from .groups import FiniteGroup
from .parser import build_group

MAX_CORPUS_ORDER = 432

CORPUS_SPECS: tuple[str, ...] = (
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C12", "C15", "C16",
    "C2 x C2", "C2^3", "C4 x C2", "C3 x C3", "C4 x C4", "C2 x C6", "C3 x C6",
    "D6", "D8", "D10", "D12", "D16", "D18", "D24",
    "Q8", "Q16", "Q32",
    "S3", "S4", "S5", "A4", "A5", "A6",
    "SL(2,3)", "PSL(2,7)", "PSL(2,9)", "Hess216",
    "C3^2:C4@gl23_rot", "C3^2:Q8@sl23_q8", "C5:C2@inv", "C3^2:C2@inv",
    "Fermat3", "Fermat4", "Fermat5", "Fermat6", "Fermat7", "Fermat8",
    "Xd4", "Xd6", "Xd8", "Xd10",
    "CycMat(3,2)", "CycMat(3,3)", "CycMat(4,1)", "CycMat(4,2)", "CycMat(4,3)",
    "CycMat(5,1)", "CycMat(5,2)", "CycMat(5,3)", "CycMat(6,1)", "CycMat(6,2)", "CycMat(6,3)",
    "S3 x C2", "Q8 x C3",
)  # fmt: skip


def corpus_groups(max_order: int = MAX_CORPUS_ORDER) -> list[FiniteGroup]:
    groups = [build_group(s) for s in CORPUS_SPECS]
    return [G for G in groups if G.order <= max_order]


@dataclass(frozen=True)
class CorpusPair:
    group: FiniteGroup
    action: InvolutiveAction

    @property
    def name(self) -> str:
        return f"{self.group.label}/{self.action.name}"


def corpus_pairs(max_order: int = MAX_CORPUS_ORDER, cache=None) -> list[CorpusPair]:
    """Every (group, involution-class representative) pair of the corpus."""
    out = []
    for G in corpus_groups(max_order):
        for rep in involution_class_reps(automorphism_group(G, cache=cache)):
            out.append(CorpusPair(G, rep))
    return out


def abelian_invariant_factors(n: int) -> list[tuple[int, ...]]:
    """Invariant-factor lists ``d1 | d2 | ... | dk`` with product ``n`` (each ``> 1``)."""
    out = []

    def rec(remaining: int, prefix: tuple[int, ...]):
        if remaining == 1:
            out.append(prefix)
            return
        for d in range(2, remaining + 1):
            if remaining % d == 0 and (not prefix or d % prefix[-1] == 0):
                rec(remaining // d, prefix + (d,))

    rec(n, ())
    return out if n > 1 else [()]


def abelian_group(factors: tuple[int, ...]) -> FiniteGroup:
    if not factors:
        return build_cyclic(1)
    G = build_cyclic(factors[0])
    for d in factors[1:]:
        G = direct_product(G, build_cyclic(d))
    return G


def abelian_groups_up_to(n_max: int) -> list[FiniteGroup]:
    """One group per isomorphism type of abelian group of order ``<= n_max``."""
    return [abelian_group(f) for n in range(1, n_max + 1) for f in abelian_invariant_factors(n)]
