"""Syntax models produced by the diagram parsers.

All nodes are immutable; two parses of the same text compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class ParseError(Exception):
    """Syntax error with a position in the original source text."""

    def __init__(self, line: int, column: int, expected: str, found: str):
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found
        super().__init__(f"line {line}, column {column}: expected {expected}, found {found}")


# --- class diagram ---------------------------------------------------------


@dataclass(frozen=True)
class Parameter:
    name: str
    type: str


@dataclass(frozen=True)
class OperationNode:
    name: str
    params: tuple[Parameter, ...]
    returns: str


@dataclass(frozen=True)
class AttributeNode:
    name: str
    type: str
    visibility: str  # one of + - #


@dataclass(frozen=True)
class ClassNode:
    name: str
    quantum: bool
    attributes: tuple[AttributeNode, ...] = ()
    operations: tuple[OperationNode, ...] = ()


@dataclass(frozen=True)
class PackageNode:
    name: str
    quantum: bool
    packages: tuple[PackageNode, ...] = ()
    classes: tuple[ClassNode, ...] = ()


@dataclass(frozen=True)
class AssociationNode:
    source: str
    target: str
    label: str = ""


@dataclass(frozen=True)
class ClassModel:
    packages: tuple[PackageNode, ...] = ()
    classes: tuple[ClassNode, ...] = ()  # classes declared outside any package
    associations: tuple[AssociationNode, ...] = ()


# --- sequence diagram ------------------------------------------------------

QUBIT = "qubit"
CLASSICAL_BIT = "classical_bit"


@dataclass(frozen=True)
class Participant:
    display_name: str
    alias: str
    kind: str  # QUBIT or CLASSICAL_BIT


@dataclass(frozen=True)
class MessageNode:
    """One ``sender -> receiver : text`` line.

    For a self-message the text is a gate name with optional parameters.
    Inside a group fragment the text holds the role labels instead; a
    plain qubit-to-classical-bit message named ``measure`` is a readout.
    """

    sender: str
    receiver: str
    name: str = ""
    params: tuple[float, ...] = ()
    control: bool = False     # sender labeled <<control>>
    controlled: bool = False  # receiver labeled <<controlled>>
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class GroupNode:
    """``group name(params) ... end`` fragment: one multi-qubit gate."""

    name: str
    params: tuple[float, ...]
    messages: tuple[MessageNode, ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class AltNode:
    """``alt clbit == value ... end`` fragment wrapping inner events."""

    condition_alias: str
    condition_value: int
    body: tuple[EventNode, ...]
    line: int = field(default=0, compare=False)


EventNode = MessageNode | GroupNode | AltNode


@dataclass(frozen=True)
class SequenceModel:
    participants: tuple[Participant, ...] = ()
    events: tuple[EventNode, ...] = ()

    def aliases(self) -> dict[str, Participant]:
        return {p.alias: p for p in self.participants}
