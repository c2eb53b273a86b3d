"""Recursive-descent parser for the sequence diagram subset.

Accepted statements::

    participant "Display Name" as alias <<qubit>>
    participant "result_0" as c0 <<classical_bit>>
    alias -> alias : gate(p1, p2, ...)
    q -> c : measure
    group gate(p1, ...)
        sender -> receiver : <<control>>
    end
    alt clbit == 1
        ...
    end

Gate parameters are real literals in radians.  Messages inside a group
fragment carry role labels instead of a gate name; the group name states
the gate.  ``alt`` fragments may nest.
"""

from __future__ import annotations

from . import lexer
from .lexer import TokenCursor
from .model import (
    CLASSICAL_BIT,
    QUBIT,
    AltNode,
    EventNode,
    GroupNode,
    MessageNode,
    Participant,
    ParseError,
    SequenceModel,
)

_KINDS = {QUBIT: QUBIT, CLASSICAL_BIT: CLASSICAL_BIT}
_FRAGMENT_END = "end"


def parse_sequence_diagram(source: str) -> SequenceModel:
    """Parse source text into a SequenceModel, raising ParseError on bad input."""
    cursor = TokenCursor(lexer.tokenize(source))
    participants: list[Participant] = []
    aliases: set[str] = set()
    events: list[EventNode] = []
    while not cursor.at_end():
        if cursor.check(lexer.IDENT, "participant"):
            participants.append(_parse_participant(cursor, aliases))
        else:
            events.append(_parse_event(cursor, aliases))
    return SequenceModel(participants=tuple(participants), events=tuple(events))


def _parse_participant(cursor, aliases: set[str]) -> Participant:
    cursor.expect(lexer.IDENT, "participant")
    name_token = cursor.expect(lexer.STRING, expected="a quoted display name")
    cursor.expect(lexer.IDENT, "as", expected="'as'")
    alias_token = cursor.expect(lexer.IDENT, expected="an alias")
    if alias_token.value in aliases:
        raise cursor.error(f"a unique alias (duplicate '{alias_token.value}')", alias_token)
    stereo_token = cursor.expect(
        lexer.STEREOTYPE, expected="'<<qubit>>' or '<<classical_bit>>'"
    )
    kind = _KINDS.get(stereo_token.value)
    if kind is None:
        raise cursor.error("'<<qubit>>' or '<<classical_bit>>'", stereo_token)
    aliases.add(alias_token.value)
    return Participant(name_token.value, alias_token.value, kind)


def _parse_event(cursor, aliases: set[str]) -> EventNode:
    if cursor.check(lexer.IDENT, "group"):
        return _parse_group(cursor, aliases)
    if cursor.check(lexer.IDENT, "alt"):
        return _parse_alt(cursor, aliases)
    if cursor.check(lexer.IDENT) and cursor.peek(1).kind == lexer.ARROW:
        return _parse_message(cursor, aliases)
    raise cursor.error("'participant', 'group', 'alt', or a message")


def _parse_message(cursor, aliases: set[str]) -> MessageNode:
    sender_token = cursor.expect(lexer.IDENT)
    _require_declared(cursor, sender_token, aliases)
    cursor.expect(lexer.ARROW)
    receiver_token = cursor.expect(lexer.IDENT, expected="a participant alias")
    _require_declared(cursor, receiver_token, aliases)
    name = ""
    params: tuple[float, ...] = ()
    control = False
    controlled = False
    if cursor.check(lexer.COLON):
        cursor.advance()
        if cursor.check(lexer.STEREOTYPE):
            control, controlled = _parse_role_labels(cursor)
        else:
            name_token = cursor.expect(lexer.IDENT, expected="a message name or role label")
            name = name_token.value
            params = _parse_params(cursor)
    return MessageNode(
        sender=sender_token.value,
        receiver=receiver_token.value,
        name=name,
        params=params,
        control=control,
        controlled=controlled,
        line=sender_token.line,
    )


def _parse_role_labels(cursor) -> tuple[bool, bool]:
    control = False
    controlled = False
    while cursor.check(lexer.STEREOTYPE):
        token = cursor.advance()
        if token.value == "control" and not control:
            control = True
        elif token.value == "controlled" and not controlled:
            controlled = True
        else:
            raise cursor.error("'<<control>>' or '<<controlled>>' (at most once each)", token)
    return control, controlled


def _parse_params(cursor) -> tuple[float, ...]:
    if not cursor.check(lexer.LPAREN):
        return ()
    cursor.advance()
    values: list[float] = []
    while not cursor.check(lexer.RPAREN):
        if values:
            cursor.expect(lexer.COMMA, expected="',' or ')'")
        number = cursor.expect(lexer.NUMBER, expected="a real literal")
        values.append(float(number.value))
    cursor.expect(lexer.RPAREN)
    return tuple(values)


def _parse_group(cursor, aliases: set[str]) -> GroupNode:
    group_token = cursor.expect(lexer.IDENT, "group")
    name_token = cursor.expect(lexer.IDENT, expected="a gate name")
    params = _parse_params(cursor)
    messages: list[MessageNode] = []
    while not cursor.check(lexer.IDENT, _FRAGMENT_END):
        if cursor.at_end():
            raise cursor.error("'end' closing the group")
        if not (cursor.check(lexer.IDENT) and cursor.peek(1).kind == lexer.ARROW):
            raise cursor.error("a message or 'end'")
        messages.append(_parse_message(cursor, aliases))
    cursor.expect(lexer.IDENT, _FRAGMENT_END)
    if not messages:
        raise ParseError(
            group_token.line,
            group_token.column,
            "at least one message inside the group",
            "an empty group",
        )
    return GroupNode(
        name=name_token.value,
        params=params,
        messages=tuple(messages),
        line=group_token.line,
    )


def _parse_alt(cursor, aliases: set[str]) -> AltNode:
    alt_token = cursor.expect(lexer.IDENT, "alt")
    alias_token = cursor.expect(lexer.IDENT, expected="a classical-bit alias in the condition")
    _require_declared(cursor, alias_token, aliases)
    cursor.expect(lexer.EQEQ, expected="'=='")
    value_token = cursor.expect(lexer.NUMBER, expected="0 or 1")
    if value_token.value not in ("0", "1"):
        raise cursor.error("0 or 1", value_token)
    body: list[EventNode] = []
    while not cursor.check(lexer.IDENT, _FRAGMENT_END):
        if cursor.at_end():
            raise cursor.error("'end' closing the alt fragment")
        body.append(_parse_event(cursor, aliases))
    cursor.expect(lexer.IDENT, _FRAGMENT_END)
    return AltNode(
        condition_alias=alias_token.value,
        condition_value=int(value_token.value),
        body=tuple(body),
        line=alt_token.line,
    )


def _require_declared(cursor, token, aliases: set[str]) -> None:
    if token.value not in aliases:
        raise ParseError(
            token.line,
            token.column,
            "a declared participant alias",
            f"'{token.value}'",
        )
