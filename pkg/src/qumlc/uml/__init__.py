"""Diagram parsing: textual UML subset to syntax models."""

from .class_parser import parse_class_diagram
from .model import (
    AltNode,
    AssociationNode,
    AttributeNode,
    ClassModel,
    ClassNode,
    GroupNode,
    MessageNode,
    OperationNode,
    PackageNode,
    Parameter,
    ParseError,
    Participant,
    SequenceModel,
)
from .printer import format_class_diagram, format_sequence_diagram
from .sequence_parser import parse_sequence_diagram

__all__ = [
    "AltNode",
    "AssociationNode",
    "AttributeNode",
    "ClassModel",
    "ClassNode",
    "GroupNode",
    "MessageNode",
    "OperationNode",
    "PackageNode",
    "Parameter",
    "ParseError",
    "Participant",
    "SequenceModel",
    "format_class_diagram",
    "format_sequence_diagram",
    "parse_class_diagram",
    "parse_sequence_diagram",
]
