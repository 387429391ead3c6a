"""Combinatorics of Wahl chains, dot diagrams and mk1A flip sequences."""

from .dot_diagram import DeltaPosition, DotDiagram, build, delta_half, delta_position
from .hj_core import Continuant, blow_down, blow_up, dual_chain, evaluate, expand, reduce_zero
from .mmp_flips import MK1AData, flip_last, flip_last_by_diagram, flip_sequence, full_configuration
from .wahl import WahlParams, generate, is_class_w, wahl_chain

__version__ = "0.1.0"
