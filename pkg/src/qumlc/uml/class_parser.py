"""Recursive-descent parser for the extended class diagram subset.

Accepted declarations::

    package Name <<Quantum>> { ... }
    class Name <<Quantum>> { +attr: type  +op(a: type, ...): rettype }
    Source --> Target : label

Stereotypes are optional; ``<<Quantum>>`` is the only one recognised on
packages and classes and sets the quantum flag.  Class braces may be
omitted for an empty class.
"""

from __future__ import annotations

from . import lexer
from .lexer import Token, TokenCursor
from .model import (
    AssociationNode,
    AttributeNode,
    ClassModel,
    ClassNode,
    OperationNode,
    PackageNode,
    Parameter,
    ParseError,
)

QUANTUM_STEREOTYPE = "Quantum"


def parse_class_diagram(source: str) -> ClassModel:
    """Parse source text into a ClassModel, raising ParseError on bad input."""
    cursor = TokenCursor(lexer.tokenize(source))
    packages: list = []
    classes: list = []
    associations: list[tuple[AssociationNode, Token]] = []
    scope = _Scope()
    while not cursor.at_end():
        _parse_top_item(cursor, packages, classes, associations, scope)
    _check_association_endpoints(associations, scope.all_class_names)
    return ClassModel(
        packages=tuple(packages),
        classes=tuple(classes),
        associations=tuple(node for node, _ in associations),
    )


class _Scope:
    """Tracks declared names for duplicate and endpoint checks."""

    def __init__(self) -> None:
        self.all_class_names: set[str] = set()


def _parse_top_item(cursor, packages, classes, associations, scope) -> None:
    token = cursor.peek()
    if cursor.check(lexer.IDENT, "package"):
        packages.append(_parse_package(cursor, scope, _names_of(packages)))
    elif cursor.check(lexer.IDENT, "class"):
        classes.append(_parse_class(cursor, scope, _names_of(classes)))
    elif cursor.check(lexer.IDENT) and cursor.peek(1).kind == lexer.ASSOC:
        associations.append(_parse_association(cursor))
    else:
        raise cursor.error("'package', 'class', or an association", token)


def _names_of(nodes) -> set[str]:
    return {node.name for node in nodes}


def _parse_package(cursor, scope, sibling_names):
    cursor.expect(lexer.IDENT, "package")
    name_token = cursor.expect(lexer.IDENT, expected="a package name")
    if name_token.value in sibling_names:
        raise cursor.error(f"a unique package name (duplicate '{name_token.value}')", name_token)
    quantum = _parse_quantum_flag(cursor)
    cursor.expect(lexer.LBRACE)
    sub_packages: list = []
    sub_classes: list = []
    while not cursor.check(lexer.RBRACE):
        if cursor.check(lexer.IDENT, "package"):
            sub_packages.append(_parse_package(cursor, scope, _names_of(sub_packages)))
        elif cursor.check(lexer.IDENT, "class"):
            sub_classes.append(_parse_class(cursor, scope, _names_of(sub_classes)))
        else:
            raise cursor.error("'package', 'class', or '}'")
    cursor.expect(lexer.RBRACE)
    return PackageNode(
        name=name_token.value,
        quantum=quantum,
        packages=tuple(sub_packages),
        classes=tuple(sub_classes),
    )


def _parse_class(cursor, scope, sibling_names):
    cursor.expect(lexer.IDENT, "class")
    name_token = cursor.expect(lexer.IDENT, expected="a class name")
    if name_token.value in sibling_names:
        raise cursor.error(f"a unique class name (duplicate '{name_token.value}')", name_token)
    scope.all_class_names.add(name_token.value)
    quantum = _parse_quantum_flag(cursor)
    attributes: list[AttributeNode] = []
    operations: list[OperationNode] = []
    if cursor.check(lexer.LBRACE):
        cursor.advance()
        while not cursor.check(lexer.RBRACE):
            _parse_member(cursor, attributes, operations)
        cursor.expect(lexer.RBRACE)
    return ClassNode(
        name=name_token.value,
        quantum=quantum,
        attributes=tuple(attributes),
        operations=tuple(operations),
    )


def _parse_quantum_flag(cursor) -> bool:
    if cursor.check(lexer.STEREOTYPE):
        token = cursor.advance()
        if token.value != QUANTUM_STEREOTYPE:
            raise cursor.error(f"'<<{QUANTUM_STEREOTYPE}>>'", token)
        return True
    return False


def _parse_member(cursor, attributes, operations) -> None:
    visibility = "+"
    if cursor.check(lexer.VISIBILITY):
        visibility = cursor.advance().value
    name_token = cursor.expect(lexer.IDENT, expected="a member name")
    if cursor.check(lexer.LPAREN):
        operation = _parse_operation_tail(cursor, name_token)
        if operation.name in {op.name for op in operations}:
            raise cursor.error(f"a unique operation name (duplicate '{operation.name}')", name_token)
        operations.append(operation)
    else:
        cursor.expect(lexer.COLON, expected="'(' or ':'")
        type_token = cursor.expect(lexer.IDENT, expected="a type name")
        if name_token.value in {attr.name for attr in attributes}:
            raise cursor.error(f"a unique attribute name (duplicate '{name_token.value}')", name_token)
        attributes.append(AttributeNode(name_token.value, type_token.value, visibility))


def _parse_operation_tail(cursor, name_token) -> OperationNode:
    cursor.expect(lexer.LPAREN)
    params: list[Parameter] = []
    while not cursor.check(lexer.RPAREN):
        if params:
            cursor.expect(lexer.COMMA, expected="',' or ')'")
        param_name = cursor.expect(lexer.IDENT, expected="a parameter name")
        cursor.expect(lexer.COLON)
        param_type = cursor.expect(lexer.IDENT, expected="a type name")
        params.append(Parameter(param_name.value, param_type.value))
    cursor.expect(lexer.RPAREN)
    returns = "void"
    if cursor.check(lexer.COLON):
        cursor.advance()
        returns = cursor.expect(lexer.IDENT, expected="a return type").value
    return OperationNode(name_token.value, tuple(params), returns)


def _parse_association(cursor) -> tuple[AssociationNode, Token]:
    source_token = cursor.expect(lexer.IDENT)
    cursor.expect(lexer.ASSOC)
    target_token = cursor.expect(lexer.IDENT, expected="a class name")
    label = ""
    if cursor.check(lexer.COLON):
        cursor.advance()
        label = cursor.expect(lexer.IDENT, expected="an association label").value
    return AssociationNode(source_token.value, target_token.value, label), source_token


def _check_association_endpoints(associations, class_names) -> None:
    for node, token in associations:
        for endpoint in (node.source, node.target):
            if endpoint not in class_names:
                raise ParseError(
                    token.line,
                    token.column,
                    "an association between declared classes",
                    f"unknown class '{endpoint}'",
                )
