"""Restricted Tower of Hanoi state graphs: generation, arc counting, solving."""

from .analysis import MoveSequence, is_h_strongly_connected, shortest_path
from .arcs import (
    MoveWitness,
    is_arc,
    shortcut_cyclic,
    shortcut_cyclic_literal,
    shortcut_linear,
    shortcut_star,
)
from .builder import HanoiGraph, build_by_neighbors, build_naive, neighbors
from .combinatorics import (
    ArcCountReport,
    CountSource,
    check_recurrences,
    closed_form_report,
    enumerated_report,
    t_k_closed,
    t_k_family,
    total_arcs_closed,
    total_arcs_family,
)
from .degrees import DegreeProfile, degree_profile, outdegree_formula, outdegree_procedural
from .digraph import (
    Family,
    MovementDigraph,
    arc_count,
    digraph_from_json,
    is_strongly_connected,
    make_family,
    parse_digraph_spec,
    random_digraph,
)
from .errors import CapacityError, DigraphError, HanoiError, StateError
from .export import ExportFormat, export, read_csv, render
from .states import State, all_states, decode, encode, format_state, parse_state, peg_content

__version__ = "0.1.0"
