"""JSON serialization of the intermediate representation.

Top-level document shape (version 1)::

    {
      "ir_version": 1,
      "system":  {"packages": [...], "classes": [...], "associations": [...]} | null,
      "circuit": {"n_qubits": N, "n_clbits": M,
                  "qubit_names": [...], "clbit_names": [...],
                  "ops": [{"kind": "gate", "name", "params", "controls", "targets"}
                          | {"kind": "measure", "qubit", "clbit"}
                          | {"kind": "cond", "clbit", "value", "body": [...]}],
                  "allow_mid_circuit": bool} | null
    }

The "classes" and "allow_mid_circuit" keys are omitted when empty/false.
Deserialization reports schema violations with a JSON-pointer path.
"""

from __future__ import annotations

import json

from ..gates import GATES
from .model import (
    CircuitIR,
    CircuitOp,
    ConditionalBlock,
    GateOp,
    IRAssociation,
    IRAttribute,
    IRClass,
    IROperation,
    IRPackage,
    IRParameter,
    MeasureOp,
    SystemIR,
)

IR_VERSION = 1


class DeserializeError(ValueError):
    """Schema violation at a JSON-pointer path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path or '/'}: {message}")


# --- writing ----------------------------------------------------------------


def serialize_ir(system: SystemIR | None, circuit: CircuitIR | None) -> str:
    document = {
        "ir_version": IR_VERSION,
        "system": _system_to_dict(system) if system is not None else None,
        "circuit": _circuit_to_dict(circuit) if circuit is not None else None,
    }
    return json.dumps(document, indent=2) + "\n"


def _system_to_dict(system: SystemIR) -> dict:
    out: dict = {"packages": [_package_to_dict(p) for p in system.packages]}
    if system.classes:
        out["classes"] = [_class_to_dict(c) for c in system.classes]
    out["associations"] = [
        {"source": a.source, "target": a.target, "label": a.label}
        for a in system.associations
    ]
    return out


def _package_to_dict(package: IRPackage) -> dict:
    return {
        "name": package.name,
        "quantum": package.quantum,
        "packages": [_package_to_dict(p) for p in package.packages],
        "classes": [_class_to_dict(c) for c in package.classes],
    }


def _class_to_dict(cls: IRClass) -> dict:
    return {
        "name": cls.name,
        "quantum": cls.quantum,
        "attributes": [
            {"name": a.name, "type": a.type, "visibility": a.visibility}
            for a in cls.attributes
        ],
        "operations": [
            {
                "name": op.name,
                "params": [{"name": p.name, "type": p.type} for p in op.params],
                "returns": op.returns,
            }
            for op in cls.operations
        ],
    }


def _circuit_to_dict(circuit: CircuitIR) -> dict:
    out: dict = {
        "n_qubits": circuit.n_qubits,
        "n_clbits": circuit.n_clbits,
        "qubit_names": list(circuit.qubit_names),
        "clbit_names": list(circuit.clbit_names),
        "ops": [_op_to_dict(op) for op in circuit.ops],
    }
    if circuit.allow_mid_circuit:
        out["allow_mid_circuit"] = True
    return out


def _op_to_dict(op: CircuitOp) -> dict:
    if isinstance(op, GateOp):
        return {
            "kind": "gate",
            "name": op.name,
            "params": list(op.params),
            "controls": list(op.controls),
            "targets": list(op.targets),
        }
    if isinstance(op, MeasureOp):
        return {"kind": "measure", "qubit": op.qubit, "clbit": op.clbit}
    if isinstance(op, ConditionalBlock):
        return {
            "kind": "cond",
            "clbit": op.clbit,
            "value": op.value,
            "body": [_op_to_dict(inner) for inner in op.body],
        }
    raise TypeError(f"unknown op {op!r}")


# --- reading ----------------------------------------------------------------


def deserialize_ir(text: str) -> tuple[SystemIR | None, CircuitIR | None]:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DeserializeError("", f"invalid JSON: {exc}") from exc
    root = _Node(document, "")
    root.require(dict)
    version = root.child("ir_version").require(int)
    if version != IR_VERSION:
        raise DeserializeError("/ir_version", f"unsupported ir_version {version}")
    system_node = root.child("system")
    circuit_node = root.child("circuit")
    system = None if system_node.value is None else _system_from(system_node)
    circuit = None if circuit_node.value is None else _circuit_from(circuit_node)
    return system, circuit


_MISSING = object()


class _Node:
    """JSON value plus its pointer path, with typed accessors."""

    def __init__(self, value, path: str):
        self.value = value
        self.path = path

    def error(self, message: str) -> DeserializeError:
        return DeserializeError(self.path, message)

    def require(self, kind):
        if kind is int and isinstance(self.value, bool):
            raise self.error("expected an integer")
        if not isinstance(self.value, kind):
            raise self.error(f"expected {kind.__name__}")
        return self.value

    def require_number(self) -> float:
        if isinstance(self.value, bool) or not isinstance(self.value, (int, float)):
            raise self.error("expected a number")
        return float(self.value)

    def child(self, key: str, default=_MISSING):
        self.require(dict)
        if key not in self.value:
            if default is _MISSING:
                raise self.error(f"missing key '{key}'")
            return _Node(default, f"{self.path}/{key}")
        return _Node(self.value[key], f"{self.path}/{key}")

    def items(self):
        self.require(list)
        return [_Node(v, f"{self.path}/{i}") for i, v in enumerate(self.value)]


def _system_from(node: _Node) -> SystemIR:
    return SystemIR(
        packages=tuple(_package_from(p) for p in node.child("packages").items()),
        classes=tuple(_class_from(c) for c in node.child("classes", []).items()),
        associations=tuple(
            IRAssociation(
                source=a.child("source").require(str),
                target=a.child("target").require(str),
                label=a.child("label", "").require(str),
            )
            for a in node.child("associations").items()
        ),
    )


def _package_from(node: _Node) -> IRPackage:
    return IRPackage(
        name=node.child("name").require(str),
        quantum=node.child("quantum").require(bool),
        packages=tuple(_package_from(p) for p in node.child("packages", []).items()),
        classes=tuple(_class_from(c) for c in node.child("classes", []).items()),
    )


def _class_from(node: _Node) -> IRClass:
    return IRClass(
        name=node.child("name").require(str),
        quantum=node.child("quantum").require(bool),
        attributes=tuple(
            IRAttribute(
                name=a.child("name").require(str),
                type=a.child("type").require(str),
                visibility=a.child("visibility", "+").require(str),
            )
            for a in node.child("attributes", []).items()
        ),
        operations=tuple(
            IROperation(
                name=op.child("name").require(str),
                params=tuple(
                    IRParameter(
                        name=p.child("name").require(str),
                        type=p.child("type").require(str),
                    )
                    for p in op.child("params", []).items()
                ),
                returns=op.child("returns", "void").require(str),
            )
            for op in node.child("operations", []).items()
        ),
    )


def _circuit_from(node: _Node) -> CircuitIR:
    return CircuitIR(
        n_qubits=node.child("n_qubits").require(int),
        n_clbits=node.child("n_clbits").require(int),
        qubit_names=tuple(n.require(str) for n in node.child("qubit_names", []).items()),
        clbit_names=tuple(n.require(str) for n in node.child("clbit_names", []).items()),
        ops=tuple(_op_from(op) for op in node.child("ops").items()),
        allow_mid_circuit=node.child("allow_mid_circuit", False).require(bool),
    )


def _op_from(node: _Node) -> CircuitOp:
    kind = node.child("kind").require(str)
    if kind == "gate":
        name_node = node.child("name")
        name = name_node.require(str)
        if name not in GATES:
            raise name_node.error(f"unknown gate name '{name}'")
        return GateOp(
            name=name,
            params=tuple(p.require_number() for p in node.child("params", []).items()),
            controls=tuple(c.require(int) for c in node.child("controls", []).items()),
            targets=tuple(t.require(int) for t in node.child("targets", []).items()),
        )
    if kind == "measure":
        return MeasureOp(
            qubit=node.child("qubit").require(int),
            clbit=node.child("clbit").require(int),
        )
    if kind == "cond":
        return ConditionalBlock(
            clbit=node.child("clbit").require(int),
            value=node.child("value").require(int),
            body=tuple(_op_from(inner) for inner in node.child("body").items()),
        )
    raise node.child("kind").error(f"unknown op kind '{kind}'")
