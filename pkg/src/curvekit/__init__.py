"""Exact classification of smooth plane curves Z^d + L(X, Y) = 0 with a large reduced automorphism group."""

from .autgroup import GroupDescriptor, Mat3, check_relations, group_closure, pgl3_generators, structure_of
from .binforms import BinaryForm, Mat2
from .classify import Configuration, enumerate_configs, instantiate, smoothness_check
from .exactfield import CycloElem, field_create
from .invariants import GroupKind, is_invariant

__version__ = "0.1.0"

__all__ = [
    "BinaryForm",
    "Configuration",
    "CycloElem",
    "GroupDescriptor",
    "GroupKind",
    "Mat2",
    "Mat3",
    "check_relations",
    "enumerate_configs",
    "field_create",
    "group_closure",
    "instantiate",
    "is_invariant",
    "pgl3_generators",
    "smoothness_check",
    "structure_of",
]
