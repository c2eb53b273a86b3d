"""Canonical text form for syntax models.

Printing a parsed model and reparsing it yields an equal model; the
output is also the normal form used by golden tests.
"""

from __future__ import annotations

from .model import (
    AltNode,
    ClassModel,
    ClassNode,
    GroupNode,
    MessageNode,
    PackageNode,
    SequenceModel,
)

_INDENT = "  "


def format_class_diagram(model: ClassModel) -> str:
    lines: list[str] = ["@startuml"]
    for package in model.packages:
        _format_package(package, 0, lines)
    for cls in model.classes:
        _format_class(cls, 0, lines)
    for assoc in model.associations:
        if assoc.label:
            lines.append(f"{assoc.source} --> {assoc.target} : {assoc.label}")
        else:
            lines.append(f"{assoc.source} --> {assoc.target}")
    lines.append("@enduml")
    return "\n".join(lines) + "\n"


def _format_package(package: PackageNode, depth: int, lines: list[str]) -> None:
    pad = _INDENT * depth
    stereo = " <<Quantum>>" if package.quantum else ""
    lines.append(f"{pad}package {package.name}{stereo} {{")
    for sub in package.packages:
        _format_package(sub, depth + 1, lines)
    for cls in package.classes:
        _format_class(cls, depth + 1, lines)
    lines.append(f"{pad}}}")


def _format_class(cls: ClassNode, depth: int, lines: list[str]) -> None:
    pad = _INDENT * depth
    stereo = " <<Quantum>>" if cls.quantum else ""
    if not cls.attributes and not cls.operations:
        lines.append(f"{pad}class {cls.name}{stereo}")
        return
    lines.append(f"{pad}class {cls.name}{stereo} {{")
    member_pad = _INDENT * (depth + 1)
    for attr in cls.attributes:
        lines.append(f"{member_pad}{attr.visibility}{attr.name}: {attr.type}")
    for op in cls.operations:
        params = ", ".join(f"{p.name}: {p.type}" for p in op.params)
        lines.append(f"{member_pad}+{op.name}({params}): {op.returns}")
    lines.append(f"{pad}}}")


def format_sequence_diagram(model: SequenceModel) -> str:
    lines: list[str] = ["@startuml"]
    for participant in model.participants:
        lines.append(
            f'participant "{participant.display_name}" as {participant.alias}'
            f" <<{participant.kind}>>"
        )
    for event in model.events:
        _format_event(event, 0, lines)
    lines.append("@enduml")
    return "\n".join(lines) + "\n"


def _format_event(event, depth: int, lines: list[str]) -> None:
    pad = _INDENT * depth
    if isinstance(event, MessageNode):
        lines.append(pad + _format_message(event))
    elif isinstance(event, GroupNode):
        lines.append(f"{pad}group {event.name}{_format_params(event.params)}")
        for message in event.messages:
            lines.append(pad + _INDENT + _format_message(message))
        lines.append(f"{pad}end")
    elif isinstance(event, AltNode):
        lines.append(f"{pad}alt {event.condition_alias} == {event.condition_value}")
        for inner in event.body:
            _format_event(inner, depth + 1, lines)
        lines.append(f"{pad}end")
    else:
        raise TypeError(f"unknown event node {event!r}")


def _format_message(message: MessageNode) -> str:
    text = f"{message.sender} -> {message.receiver}"
    labels = []
    if message.control:
        labels.append("<<control>>")
    if message.controlled:
        labels.append("<<controlled>>")
    if message.name:
        return f"{text} : {message.name}{_format_params(message.params)}"
    if labels:
        return f"{text} : {' '.join(labels)}"
    return text


def _format_params(params: tuple[float, ...]) -> str:
    if not params:
        return ""
    return "(" + ", ".join(repr(value) for value in params) + ")"
