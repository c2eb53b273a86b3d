"""Lowering from syntax models to the validated intermediate representation.

Structure lowering is total on valid class models and preserves element
counts exactly.  Behaviour lowering assigns qubit/clbit indices by
participant declaration order, maps events to circuit ops, and raises
LoweringError carrying a ValidationReport when anything is unmappable.
"""

from __future__ import annotations

from ..gates import GATES
from ..uml.model import (
    CLASSICAL_BIT,
    QUBIT,
    AltNode,
    ClassModel,
    ClassNode,
    GroupNode,
    MessageNode,
    PackageNode,
    SequenceModel,
)
from .model import (
    CircuitIR,
    CircuitOp,
    ConditionalBlock,
    Finding,
    GateOp,
    IRAssociation,
    IRAttribute,
    IRClass,
    IROperation,
    IRPackage,
    IRParameter,
    LoweringError,
    MeasureOp,
    SystemIR,
    ValidationReport,
)
from .validate import validate_circuit

MEASURE_MESSAGE = "measure"


# --- class model -----------------------------------------------------------


def lower_class_model(model: ClassModel) -> SystemIR:
    """Lower a class model, propagating quantum flags through packages."""
    return SystemIR(
        packages=tuple(_lower_package(p, False) for p in model.packages),
        classes=tuple(_lower_class(c, False) for c in model.classes),
        associations=tuple(
            IRAssociation(a.source, a.target, a.label) for a in model.associations
        ),
    )


def _lower_package(package: PackageNode, enclosing_quantum: bool) -> IRPackage:
    quantum = package.quantum or enclosing_quantum
    return IRPackage(
        name=package.name,
        quantum=quantum,
        packages=tuple(_lower_package(p, quantum) for p in package.packages),
        classes=tuple(_lower_class(c, quantum) for c in package.classes),
    )


def _lower_class(cls: ClassNode, enclosing_quantum: bool) -> IRClass:
    return IRClass(
        name=cls.name,
        quantum=cls.quantum or enclosing_quantum,
        attributes=tuple(IRAttribute(a.name, a.type, a.visibility) for a in cls.attributes),
        operations=tuple(
            IROperation(
                op.name,
                tuple(IRParameter(p.name, p.type) for p in op.params),
                op.returns,
            )
            for op in cls.operations
        ),
    )


# --- sequence model --------------------------------------------------------


def lower_sequence_model(model: SequenceModel, allow_mid_circuit: bool = False) -> CircuitIR:
    """Lower a sequence model to a circuit, raising LoweringError on failure."""
    lowering = _CircuitLowering(model, allow_mid_circuit)
    circuit = lowering.run()
    report = ValidationReport(errors=tuple(lowering.errors))
    if report.errors:
        raise LoweringError(report)
    structural = validate_circuit(circuit)
    if structural.errors:
        raise LoweringError(structural)
    return circuit


class _CircuitLowering:
    def __init__(self, model: SequenceModel, allow_mid_circuit: bool):
        self.model = model
        self.allow_mid_circuit = allow_mid_circuit
        self.errors: list[Finding] = []
        self.qubits: dict[str, int] = {}
        self.clbits: dict[str, int] = {}
        self.qubit_names: list[str] = []
        self.clbit_names: list[str] = []
        self.op_index = -1

    def run(self) -> CircuitIR:
        for participant in self.model.participants:
            if participant.kind == QUBIT:
                self.qubits[participant.alias] = len(self.qubit_names)
                self.qubit_names.append(participant.display_name)
            else:
                self.clbits[participant.alias] = len(self.clbit_names)
                self.clbit_names.append(participant.display_name)
        ops = self.lower_events(self.model.events)
        return CircuitIR(
            n_qubits=len(self.qubit_names),
            n_clbits=len(self.clbit_names),
            qubit_names=tuple(self.qubit_names),
            clbit_names=tuple(self.clbit_names),
            ops=ops,
            allow_mid_circuit=self.allow_mid_circuit,
        )

    def fail(self, rule: str, message: str) -> None:
        self.errors.append(Finding(self.op_index, rule, message))

    def lower_events(self, events) -> tuple[CircuitOp, ...]:
        ops: list[CircuitOp] = []
        for event in events:
            self.op_index += 1
            if isinstance(event, MessageNode):
                op = self.lower_message(event)
            elif isinstance(event, GroupNode):
                op = self.lower_group(event)
            elif isinstance(event, AltNode):
                op = self.lower_alt(event)
            else:
                op = None
                self.fail("unknown-event", f"unrecognized event {event!r}")
            if op is not None:
                ops.append(op)
        return tuple(ops)

    def lower_message(self, message: MessageNode) -> CircuitOp | None:
        if message.sender == message.receiver:
            return self.lower_self_message(message)
        return self.lower_cross_message(message)

    def lower_self_message(self, message: MessageNode) -> GateOp | None:
        if message.sender not in self.qubits:
            self.fail("participant-kind", f"self-message on non-qubit '{message.sender}'")
            return None
        if not message.name:
            self.fail("missing-gate", "self-message without a gate name")
            return None
        spec = GATES.get(message.name)
        if spec is None:
            self.fail("unknown-gate", f"unknown gate name '{message.name}'")
            return None
        if spec.n_qubits != 1:
            self.fail(
                "gate-form",
                f"{message.name} is a multi-qubit gate and needs a grouped fragment",
            )
            return None
        return GateOp(
            name=message.name,
            params=message.params,
            controls=(),
            targets=(self.qubits[message.sender],),
        )

    def lower_cross_message(self, message: MessageNode) -> MeasureOp | None:
        if message.name == MEASURE_MESSAGE:
            if message.sender not in self.qubits or message.receiver not in self.clbits:
                self.fail(
                    "measure-direction",
                    "measure must flow from a qubit to a classical bit",
                )
                return None
            if message.params:
                self.fail("param-arity", "measure takes no parameters")
                return None
            return MeasureOp(
                qubit=self.qubits[message.sender],
                clbit=self.clbits[message.receiver],
            )
        self.fail(
            "message-form",
            f"cross-participant message '{message.name or message.receiver}' is neither "
            "a measure nor inside a grouped fragment",
        )
        return None

    def lower_group(self, group: GroupNode) -> GateOp | None:
        spec = GATES.get(group.name)
        if spec is None:
            self.fail("unknown-gate", f"unknown gate name '{group.name}'")
            return None
        if spec.n_qubits < 2:
            self.fail(
                "gate-form",
                f"grouped fragment names single-qubit gate '{group.name}'",
            )
            return None
        participants: list[str] = []
        control_labeled: list[str] = []
        for message in group.messages:
            for alias in (message.sender, message.receiver):
                if alias not in self.qubits:
                    self.fail(
                        "participant-kind",
                        f"grouped message touches non-qubit '{alias}'",
                    )
                    return None
                if alias not in participants:
                    participants.append(alias)
            if message.control and message.sender not in control_labeled:
                control_labeled.append(message.sender)
        if len(participants) != spec.n_qubits:
            self.fail(
                "group-arity",
                f"{group.name} acts on {spec.n_qubits} qubits but the fragment "
                f"names {len(participants)}",
            )
            return None
        controls, targets = self.assign_roles(group.name, spec, participants, control_labeled)
        if controls is None:
            return None
        return GateOp(
            name=group.name,
            params=group.params,
            controls=tuple(self.qubits[a] for a in controls),
            targets=tuple(self.qubits[a] for a in targets),
        )

    def assign_roles(self, name, spec, participants, control_labeled):
        if name == "swap":
            return [], list(participants)
        if name == "cswap":
            if not control_labeled:
                self.fail("group-roles", "cswap needs one participant labeled <<control>>")
                return None, None
            control = control_labeled[0]
            return [control], [a for a in participants if a != control]
        controls = [a for a in participants if a in control_labeled]
        targets = [a for a in participants if a not in control_labeled]
        if len(controls) != spec.n_controls or len(targets) != spec.n_targets:
            self.fail(
                "group-roles",
                f"{name} expects {spec.n_controls} <<control>> sender(s) and "
                f"{spec.n_targets} target(s), found {len(controls)} and {len(targets)}",
            )
            return None, None
        return controls, targets

    def lower_alt(self, alt: AltNode) -> ConditionalBlock | None:
        if alt.condition_alias not in self.clbits:
            self.fail(
                "condition-kind",
                f"alt condition references '{alt.condition_alias}', which is not a "
                "classical bit",
            )
            body_ok = False
        else:
            body_ok = True
        if not alt.body:
            self.fail("empty-cond", "alt fragment has an empty body")
            body_ok = False
        body = self.lower_events(alt.body)
        if not body_ok:
            return None
        return ConditionalBlock(
            clbit=self.clbits[alt.condition_alias],
            value=alt.condition_value,
            body=body,
        )
