"""Real forms through Galois cohomology of finite groups.

Finite groups are Cayley tables; an order-2 Galois action is an involutive
automorphism; ``H^1`` is computed by orbit enumeration.
"""

__version__ = "0.1.0"

from .groups import CapExceeded, FiniteGroup, GroupError, Perm, Subgroup  # noqa: E402
from .automorphisms import InvolutiveAction, automorphism_group, involution_class_reps  # noqa: E402
from .cohomology import h1, mass_report, stable_sylow2  # noqa: E402
from .invariants import m_invariant, plane_curve_bound  # noqa: E402
from .parser import build_group, parse_group_spec  # noqa: E402

__all__ = [
    "CapExceeded",
    "FiniteGroup",
    "GroupError",
    "InvolutiveAction",
    "Perm",
    "Subgroup",
    "automorphism_group",
    "build_group",
    "h1",
    "involution_class_reps",
    "m_invariant",
    "mass_report",
    "parse_group_spec",
    "plane_curve_bound",
    "stable_sylow2",
]
