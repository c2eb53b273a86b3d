"""Intermediate representation: lowering, validation, serialization."""

from .lower import lower_class_model, lower_sequence_model
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
from .serialize import IR_VERSION, DeserializeError, deserialize_ir, serialize_ir
from .validate import MAX_CONDITIONAL_DEPTH, validate_circuit

__all__ = [
    "CircuitIR",
    "CircuitOp",
    "ConditionalBlock",
    "DeserializeError",
    "Finding",
    "GateOp",
    "IRAssociation",
    "IRAttribute",
    "IRClass",
    "IROperation",
    "IRPackage",
    "IRParameter",
    "IR_VERSION",
    "LoweringError",
    "MAX_CONDITIONAL_DEPTH",
    "MeasureOp",
    "SystemIR",
    "ValidationReport",
    "deserialize_ir",
    "lower_class_model",
    "lower_sequence_model",
    "serialize_ir",
    "validate_circuit",
]
