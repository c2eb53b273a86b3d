"""Per-target capability matrix: conditionals and gate coverage.

Placeholder gates are emitted as helper definitions with a warning.  For
cirq and braket the helpers are exact compositions of native rotations
(up to global phase), so the programs still execute; for qsharp the u2/u3
placeholders are deliberately failing operations the developer completes
by hand.  Pinned SDK versions live in the conformance harness lockfile.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..gates import CANONICAL_NAMES


class TargetQpl(Enum):
    QISKIT = "qiskit"
    CIRQ = "cirq"
    QSHARP = "qsharp"
    BRAKET = "braket"

    @property
    def extension(self) -> str:
        return _EXTENSIONS[self]

    @classmethod
    def from_name(cls, name: str) -> "TargetQpl":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown target '{name}'") from None


_EXTENSIONS = {
    TargetQpl.QISKIT: ".qiskit.py",
    TargetQpl.CIRQ: ".cirq.py",
    TargetQpl.QSHARP: ".qs",
    TargetQpl.BRAKET: ".braket.py",
}


@dataclass(frozen=True)
class CapabilityRow:
    supports_conditionals: bool
    native_gates: frozenset[str]
    placeholder_gates: frozenset[str]


def _row(supports_conditionals: bool, placeholders: set[str]) -> CapabilityRow:
    return CapabilityRow(
        supports_conditionals=supports_conditionals,
        native_gates=frozenset(CANONICAL_NAMES - placeholders),
        placeholder_gates=frozenset(placeholders),
    )


_MATRIX: dict[TargetQpl, CapabilityRow] = {
    # dynamic-circuit conditionals via if_test; u2/u3 map onto the generic u
    TargetQpl.QISKIT: _row(True, set()),
    # classically-controlled operations; no native u2/u3 constants
    TargetQpl.CIRQ: _row(True, {"u2", "u3"}),
    # measurement-result branching; u2/u3 stubs fail until implemented
    TargetQpl.QSHARP: _row(True, {"u2", "u3"}),
    # no classical control flow in the circuit API; no u/ch builder methods
    TargetQpl.BRAKET: _row(False, {"u2", "u3", "ch"}),
}


def capabilities(target: TargetQpl) -> CapabilityRow:
    """Static capability lookup for one target."""
    return _MATRIX[target]
