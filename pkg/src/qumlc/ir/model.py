"""Validated intermediate representation bridging parsed models and emitters.

IR values are immutable after construction and compare structurally.
Circuit qubit/clbit indices follow participant declaration order; the
bitstring convention everywhere is little-endian (clbit 0 rightmost).
"""

from __future__ import annotations

from dataclasses import dataclass


# --- structural view -------------------------------------------------------


@dataclass(frozen=True)
class IRParameter:
    name: str
    type: str


@dataclass(frozen=True)
class IROperation:
    name: str
    params: tuple[IRParameter, ...]
    returns: str


@dataclass(frozen=True)
class IRAttribute:
    name: str
    type: str
    visibility: str


@dataclass(frozen=True)
class IRClass:
    name: str
    quantum: bool  # effective flag: own stereotype or enclosing quantum package
    attributes: tuple[IRAttribute, ...] = ()
    operations: tuple[IROperation, ...] = ()


@dataclass(frozen=True)
class IRPackage:
    name: str
    quantum: bool
    packages: tuple[IRPackage, ...] = ()
    classes: tuple[IRClass, ...] = ()


@dataclass(frozen=True)
class IRAssociation:
    source: str
    target: str
    label: str = ""


@dataclass(frozen=True)
class SystemIR:
    packages: tuple[IRPackage, ...] = ()
    classes: tuple[IRClass, ...] = ()  # classes outside any package
    associations: tuple[IRAssociation, ...] = ()

    def counts(self) -> dict[str, int]:
        """Element census: packages, classes, operations, attributes."""
        totals = {"packages": 0, "classes": 0, "operations": 0, "attributes": 0}

        def visit_class(cls: IRClass) -> None:
            totals["classes"] += 1
            totals["operations"] += len(cls.operations)
            totals["attributes"] += len(cls.attributes)

        def visit_package(pkg: IRPackage) -> None:
            totals["packages"] += 1
            for sub in pkg.packages:
                visit_package(sub)
            for cls in pkg.classes:
                visit_class(cls)

        for pkg in self.packages:
            visit_package(pkg)
        for cls in self.classes:
            visit_class(cls)
        return totals

    def all_classes(self) -> list[IRClass]:
        found: list[IRClass] = []

        def visit(pkg: IRPackage) -> None:
            for sub in pkg.packages:
                visit(sub)
            found.extend(pkg.classes)

        for pkg in self.packages:
            visit(pkg)
        found.extend(self.classes)
        return found


# --- behavioural view ------------------------------------------------------


@dataclass(frozen=True)
class GateOp:
    name: str
    params: tuple[float, ...] = ()
    controls: tuple[int, ...] = ()
    targets: tuple[int, ...] = ()


@dataclass(frozen=True)
class MeasureOp:
    qubit: int
    clbit: int


@dataclass(frozen=True)
class ConditionalBlock:
    clbit: int
    value: int  # 0 or 1
    body: tuple[CircuitOp, ...] = ()


CircuitOp = GateOp | MeasureOp | ConditionalBlock


@dataclass(frozen=True)
class CircuitIR:
    n_qubits: int
    n_clbits: int
    qubit_names: tuple[str, ...] = ()
    clbit_names: tuple[str, ...] = ()
    ops: tuple[CircuitOp, ...] = ()
    allow_mid_circuit: bool = False

    def flat_gate_ops(self) -> list[GateOp]:
        """All GateOps in order, descending into conditional bodies."""
        found: list[GateOp] = []

        def walk(ops: tuple[CircuitOp, ...]) -> None:
            for op in ops:
                if isinstance(op, GateOp):
                    found.append(op)
                elif isinstance(op, ConditionalBlock):
                    walk(op.body)

        walk(self.ops)
        return found

    def flat_measure_ops(self) -> list[MeasureOp]:
        found: list[MeasureOp] = []

        def walk(ops: tuple[CircuitOp, ...]) -> None:
            for op in ops:
                if isinstance(op, MeasureOp):
                    found.append(op)
                elif isinstance(op, ConditionalBlock):
                    walk(op.body)

        walk(self.ops)
        return found

    def conditional_count(self) -> int:
        total = 0

        def walk(ops: tuple[CircuitOp, ...]) -> None:
            nonlocal total
            for op in ops:
                if isinstance(op, ConditionalBlock):
                    total += 1
                    walk(op.body)

        walk(self.ops)
        return total


# --- validation ------------------------------------------------------------


@dataclass(frozen=True)
class Finding:
    op_index: int  # pre-order index of the offending op, -1 if not op-bound
    rule: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple[Finding, ...] = ()
    warnings: tuple[Finding, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.errors

    def to_json_dict(self) -> dict:
        def rows(findings: tuple[Finding, ...]) -> list[dict]:
            return [
                {"op_index": f.op_index, "rule": f.rule, "message": f.message}
                for f in findings
            ]

        return {"errors": rows(self.errors), "warnings": rows(self.warnings)}


class LoweringError(Exception):
    """Raised when a sequence model cannot be lowered to a valid circuit."""

    def __init__(self, report: ValidationReport):
        self.report = report
        summary = "; ".join(f.message for f in report.errors) or "lowering failed"
        super().__init__(summary)
