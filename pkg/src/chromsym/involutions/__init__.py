"""Executable first-preserving involutions and their audit."""

from .audit import InvolutionAuditReport, audit_involution, matching_involution
from .composed import combine, composed_host, composed_involution, restrict
from .cycle import (
    InvolutionClass,
    classify_cycle,
    cycle_fixed_points,
    cycle_involution,
    cycle_involution_encoded,
    cycle_involution_map,
)
from .cycle_tree import (
    classify_cycle_tree,
    cycle_tree_involution,
    cycle_tree_involution_encoded,
    cycle_tree_involution_map,
)
from .encoding import CycleFT, decode, encode, tiles_cycle

__all__ = [
    "CycleFT",
    "InvolutionAuditReport",
    "InvolutionClass",
    "audit_involution",
    "classify_cycle",
    "classify_cycle_tree",
    "combine",
    "composed_host",
    "composed_involution",
    "cycle_fixed_points",
    "cycle_involution",
    "cycle_involution_encoded",
    "cycle_involution_map",
    "cycle_tree_involution",
    "cycle_tree_involution_encoded",
    "cycle_tree_involution_map",
    "decode",
    "encode",
    "matching_involution",
    "restrict",
    "tiles_cycle",
]
