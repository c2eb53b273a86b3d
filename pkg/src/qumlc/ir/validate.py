"""Structural validation rules for circuit IR.

``validate_circuit`` is pure and idempotent; it never raises, it reports.
Successful lowering always yields a circuit with an empty error list.
"""

from __future__ import annotations

from ..gates import GATES
from .model import CircuitIR, CircuitOp, ConditionalBlock, Finding, GateOp, MeasureOp, ValidationReport

MAX_CONDITIONAL_DEPTH = 3


def validate_circuit(circuit: CircuitIR) -> ValidationReport:
    """Check all circuit invariants and the gate arity table."""
    checker = _Checker(circuit)
    checker.check_names()
    checker.walk(circuit.ops, depth=0)
    return ValidationReport(errors=tuple(checker.errors), warnings=())


class _Checker:
    def __init__(self, circuit: CircuitIR):
        self.circuit = circuit
        self.errors: list[Finding] = []
        self.measured: set[int] = set()
        self.op_index = -1

    def fail(self, rule: str, message: str, op_index: int | None = None) -> None:
        index = self.op_index if op_index is None else op_index
        self.errors.append(Finding(index, rule, message))

    def check_names(self) -> None:
        circuit = self.circuit
        if circuit.n_qubits < 0 or circuit.n_clbits < 0:
            self.fail("counts", "qubit/clbit counts must be non-negative", -1)
        if circuit.qubit_names and len(circuit.qubit_names) != circuit.n_qubits:
            self.fail("names-length", "qubit_names length differs from n_qubits", -1)
        if circuit.clbit_names and len(circuit.clbit_names) != circuit.n_clbits:
            self.fail("names-length", "clbit_names length differs from n_clbits", -1)

    def walk(self, ops: tuple[CircuitOp, ...], depth: int) -> None:
        for op in ops:
            self.op_index += 1
            if isinstance(op, GateOp):
                self.check_gate(op)
            elif isinstance(op, MeasureOp):
                self.check_measure(op)
            elif isinstance(op, ConditionalBlock):
                self.check_conditional(op, depth)
            else:
                self.fail("unknown-op", f"unrecognized op {op!r}")

    def check_gate(self, op: GateOp) -> None:
        spec = GATES.get(op.name)
        if spec is None:
            self.fail("unknown-gate", f"unknown gate name '{op.name}'")
            return
        if len(op.params) != spec.n_params:
            noun = "parameter" if spec.n_params == 1 else "parameters"
            self.fail(
                "param-arity",
                f"arity mismatch: {op.name} expects {spec.n_params} {noun}",
            )
        if len(op.controls) != spec.n_controls or len(op.targets) != spec.n_targets:
            self.fail(
                "qubit-arity",
                f"{op.name} expects {spec.n_controls} control(s) and "
                f"{spec.n_targets} target(s)",
            )
        indices = list(op.controls) + list(op.targets)
        if len(set(indices)) != len(indices):
            if set(op.controls) & set(op.targets):
                self.fail("control-target-overlap", f"overlapping control/target in {op.name}")
            else:
                self.fail("index-distinct", f"repeated qubit index in {op.name}")
        for qubit in indices:
            self.check_qubit_index(qubit)
        self.check_lifelines(indices, f"gate {op.name}")

    def check_measure(self, op: MeasureOp) -> None:
        self.check_qubit_index(op.qubit)
        if not 0 <= op.clbit < self.circuit.n_clbits:
            self.fail("clbit-range", f"clbit index {op.clbit} out of range")
        self.check_lifelines([op.qubit], "measurement")
        self.measured.add(op.qubit)

    def check_conditional(self, op: ConditionalBlock, depth: int) -> None:
        if depth + 1 > MAX_CONDITIONAL_DEPTH:
            self.fail(
                "cond-depth",
                f"conditional nesting exceeds depth {MAX_CONDITIONAL_DEPTH}",
            )
        if op.value not in (0, 1):
            self.fail("cond-value", f"conditional compares against {op.value}, expected 0 or 1")
        if not 0 <= op.clbit < self.circuit.n_clbits:
            self.fail("clbit-range", f"conditional clbit index {op.clbit} out of range")
        if not op.body:
            self.fail("empty-cond", "conditional block has an empty body")
        self.walk(op.body, depth + 1)

    def check_qubit_index(self, qubit: int) -> None:
        if not 0 <= qubit < self.circuit.n_qubits:
            self.fail("qubit-range", f"qubit index {qubit} out of range")

    def check_lifelines(self, qubits, what: str) -> None:
        if self.circuit.allow_mid_circuit:
            return
        for qubit in qubits:
            if qubit in self.measured:
                self.fail(
                    "post-measurement",
                    f"post-measurement use of qubit {qubit} in {what}",
                )
