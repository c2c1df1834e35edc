"""Red odd cycles versus blue wheels in two-colored complete graphs.

Bitset graph kernels, cycle and wheel detection with certificates, the
extremal constructions, a constructive stability decomposition and a bounded
arrowing search.
"""

from .graph import Color, CompleteColoring, Graph, Partition, make_coloring
from .detect import Budget, Outcome, avoidance_check, cycle_spectrum, find_cycle, find_wheel
from .decompose import StabilityInput, lemma_audit, stability_partition, verify_stability_partition
from .ramsey import Target, arrows, known_value
from .serialize import dump_coloring, parse_coloring

__all__ = [
    "Budget",
    "Color",
    "CompleteColoring",
    "Graph",
    "Outcome",
    "Partition",
    "StabilityInput",
    "Target",
    "arrows",
    "avoidance_check",
    "cycle_spectrum",
    "dump_coloring",
    "find_cycle",
    "find_wheel",
    "known_value",
    "lemma_audit",
    "make_coloring",
    "parse_coloring",
    "stability_partition",
    "verify_stability_partition",
]
