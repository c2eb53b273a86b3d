"""Code generation: quantum programs per target QPL plus classical skeletons."""

from .capabilities import CapabilityRow, TargetQpl, capabilities
from .classical import (
    DEFAULT_QUANTUM_MODULE,
    CategoryCount,
    ElementReport,
    FileTree,
    GeneratedFile,
    element_report,
    generate_classical,
    snake_case,
)
from .quantum import (
    EmittedGate,
    GenOptions,
    Manifest,
    TargetProgram,
    UnsupportedFeature,
    UnsupportedGate,
    generate_quantum,
    map_gate,
)

__all__ = [
    "CapabilityRow",
    "CategoryCount",
    "DEFAULT_QUANTUM_MODULE",
    "ElementReport",
    "EmittedGate",
    "FileTree",
    "GenOptions",
    "GeneratedFile",
    "Manifest",
    "TargetProgram",
    "TargetQpl",
    "UnsupportedFeature",
    "UnsupportedGate",
    "capabilities",
    "element_report",
    "generate_classical",
    "generate_quantum",
    "map_gate",
    "snake_case",
]
