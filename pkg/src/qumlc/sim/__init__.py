"""Reference statevector simulator and shot sampler."""

from .statevector import (
    MAX_QUBITS,
    CapacityExceeded,
    ExactModeUnsupported,
    InvalidCircuit,
    base_matrix,
    controlled_matrix,
    format_counts,
    probabilities,
    sample,
    statevector,
    u3_matrix,
)

__all__ = [
    "CapacityExceeded",
    "ExactModeUnsupported",
    "InvalidCircuit",
    "MAX_QUBITS",
    "base_matrix",
    "controlled_matrix",
    "format_counts",
    "probabilities",
    "sample",
    "statevector",
    "u3_matrix",
]
