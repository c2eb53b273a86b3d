"""Canonical gate set shared by lowering, validation, codegen, and simulation.

Every circuit operation is expressed in terms of these twenty canonical
names.  Parameter angles are radians.  The parameterized single-qubit
family follows the convention

    u3(theta, phi, lam) = [[cos(theta/2),            -e^{i*lam} * sin(theta/2)],
                           [e^{i*phi} * sin(theta/2), e^{i*(phi+lam)} * cos(theta/2)]]
    u2(phi, lam)        = u3(pi/2, phi, lam)

so that u3(pi, 0, pi) == x.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GateSpec:
    """Shape of one canonical gate: parameter and qubit arity."""

    name: str
    n_params: int
    n_controls: int
    n_targets: int

    @property
    def n_qubits(self) -> int:
        return self.n_controls + self.n_targets


_SPECS = [
    GateSpec("h", 0, 0, 1),
    GateSpec("x", 0, 0, 1),
    GateSpec("y", 0, 0, 1),
    GateSpec("z", 0, 0, 1),
    GateSpec("s", 0, 0, 1),
    GateSpec("sdg", 0, 0, 1),
    GateSpec("t", 0, 0, 1),
    GateSpec("tdg", 0, 0, 1),
    GateSpec("rx", 1, 0, 1),
    GateSpec("ry", 1, 0, 1),
    GateSpec("rz", 1, 0, 1),
    GateSpec("u2", 2, 0, 1),
    GateSpec("u3", 3, 0, 1),
    GateSpec("cx", 0, 1, 1),
    GateSpec("cy", 0, 1, 1),
    GateSpec("cz", 0, 1, 1),
    GateSpec("ch", 0, 1, 1),
    GateSpec("swap", 0, 0, 2),
    GateSpec("ccx", 0, 2, 1),
    GateSpec("cswap", 0, 1, 2),
]

GATES: dict[str, GateSpec] = {spec.name: spec for spec in _SPECS}

CANONICAL_NAMES: frozenset[str] = frozenset(GATES)


def is_canonical(name: str) -> bool:
    return name in GATES
