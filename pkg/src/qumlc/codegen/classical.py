"""Classical skeleton generation and element-completeness reporting.

Packages become directories with ``__init__.py`` markers, classes become
one Python file each with an auto-generated default constructor (every
attribute initialized to a type-appropriate neutral value) and one
``pass``-bodied stub per model operation.  Quantum-flagged classes import
the generated quantum module.  The element report re-scans the generated
text with the ``ast`` module and classifies auto-added constructors as
irrelevant when computing precision and recall.
"""

from __future__ import annotations

import ast
import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from ..ir.model import IRAssociation, IRClass, IRPackage, SystemIR
from ..ir.serialize import IR_VERSION

DEFAULT_QUANTUM_MODULE = "quantum_circuit"

_NEUTRAL_VALUES = {
    "int": "0",
    "integer": "0",
    "long": "0",
    "float": "0.0",
    "double": "0.0",
    "real": "0.0",
    "bool": "False",
    "boolean": "False",
    "str": '""',
    "string": '""',
}


@dataclass(frozen=True)
class GeneratedFile:
    path: str  # relative, forward slashes
    text: str


@dataclass(frozen=True)
class FileTree:
    files: tuple[GeneratedFile, ...] = ()

    def write_to(self, root: Path) -> None:
        for entry in self.files:
            destination = root / entry.path
            destination.parent.mkdir(parents=True, exist_ok=True)
            destination.write_text(entry.text, encoding="utf-8")


@dataclass(frozen=True)
class CategoryCount:
    model: int
    generated: int


@dataclass(frozen=True)
class ElementReport:
    categories: dict[str, CategoryCount]
    quantum_imports: int
    relevant: int
    irrelevant: int
    missing: int
    precision: float
    recall: float

    def to_json_dict(self) -> dict:
        return {
            "categories": {
                name: {"model": c.model, "generated": c.generated}
                for name, c in self.categories.items()
            },
            "quantum_imports": self.quantum_imports,
            "relevant": self.relevant,
            "irrelevant": self.irrelevant,
            "missing": self.missing,
            "precision": self.precision,
            "recall": self.recall,
        }


def snake_case(name: str) -> str:
    step = re.sub(r"(.)([A-Z][a-z]+)", r"\1_\2", name)
    return re.sub(r"([a-z0-9])([A-Z])", r"\1_\2", step).lower()


def generate_classical(
    system: SystemIR, quantum_module: str = DEFAULT_QUANTUM_MODULE
) -> FileTree:
    """Deterministic skeleton tree for a valid system model."""
    files: list[GeneratedFile] = []
    used_paths: set[str] = set()
    assoc_by_source: dict[str, list[IRAssociation]] = {}
    for assoc in system.associations:
        assoc_by_source.setdefault(assoc.source, []).append(assoc)

    def unique(path: str) -> str:
        if path not in used_paths:
            used_paths.add(path)
            return path
        stem, dot, suffix = path.rpartition(".")
        counter = 2
        while f"{stem}_{counter}.{suffix}" in used_paths:
            counter += 1
        deduped = f"{stem}_{counter}.{suffix}"
        used_paths.add(deduped)
        return deduped

    def emit_class(cls: IRClass, prefix: str) -> None:
        path = unique(f"{prefix}{snake_case(cls.name)}.py")
        files.append(GeneratedFile(path, _class_text(cls, assoc_by_source, quantum_module)))

    def emit_package(package: IRPackage, prefix: str) -> None:
        directory = f"{prefix}{snake_case(package.name)}/"
        marker = unique(f"{directory}__init__.py")
        files.append(GeneratedFile(marker, _marker_text(package)))
        for sub in package.packages:
            emit_package(sub, directory)
        for cls in package.classes:
            emit_class(cls, directory)

    for package in system.packages:
        emit_package(package, "")
    for cls in system.classes:
        emit_class(cls, "")
    return FileTree(files=tuple(files))


def _marker_text(package: IRPackage) -> str:
    flag = " (quantum)" if package.quantum else ""
    return f"# generated by qumlc (ir v{IR_VERSION}) package {package.name}{flag}\n"


def _class_text(cls: IRClass, assoc_by_source, quantum_module: str) -> str:
    lines = [f"# generated by qumlc (ir v{IR_VERSION}) class {cls.name}"]
    for assoc in assoc_by_source.get(cls.name, ()):
        label = f" : {assoc.label}" if assoc.label else ""
        lines.append(f"# association: {assoc.source} --> {assoc.target}{label}")
    if cls.quantum:
        lines.append(f"import {quantum_module}  # generated quantum module")
    lines.append("")
    lines.append("")
    lines.append(f"class {cls.name}:")
    lines.append("")
    lines.append("    def __init__(self):")
    if cls.attributes:
        for attr in cls.attributes:
            value = _NEUTRAL_VALUES.get(attr.type.lower())
            if value is None:
                lines.append(f"        self.{attr.name} = None  # type: {attr.type}")
            else:
                lines.append(f"        self.{attr.name} = {value}")
    else:
        lines.append("        pass")
    for op in cls.operations:
        lines.append("")
        params = "".join(f", {p.name}" for p in op.params)
        lines.append(f"    def {op.name}(self{params}):")
        lines.append("        pass")
    return "\n".join(lines) + "\n"


def element_report(
    system: SystemIR, tree: FileTree, count_constructors: bool = True
) -> ElementReport:
    """Completeness census computed by re-scanning the generated text."""
    scan = _scan(tree)
    model = _model_elements(system)
    constructors = scan["constructors"] if count_constructors else 0
    imports = scan["imports"]

    relevant = 0
    missing = 0
    for category in ("packages", "classes", "operations", "attributes"):
        matched = sum(min(count, scan[category][key]) for key, count in model[category].items())
        relevant += matched
        missing += sum(model[category].values()) - matched
    relevant += imports

    generated_ops = sum(scan["operations"].values()) + constructors
    categories = {
        "packages": CategoryCount(sum(model["packages"].values()), sum(scan["packages"].values())),
        "classes": CategoryCount(sum(model["classes"].values()), sum(scan["classes"].values())),
        "operations": CategoryCount(sum(model["operations"].values()), generated_ops),
        "attributes": CategoryCount(
            sum(model["attributes"].values()), sum(scan["attributes"].values())
        ),
    }
    precision = relevant / (relevant + constructors) if relevant + constructors else 1.0
    recall = relevant / (relevant + missing) if relevant + missing else 1.0
    return ElementReport(
        categories=categories,
        quantum_imports=imports,
        relevant=relevant,
        irrelevant=constructors,
        missing=missing,
        precision=precision,
        recall=recall,
    )


def _model_elements(system: SystemIR) -> dict[str, Counter]:
    packages: Counter = Counter()
    classes: Counter = Counter()
    operations: Counter = Counter()
    attributes: Counter = Counter()

    def visit_class(cls: IRClass) -> None:
        classes[cls.name] += 1
        for op in cls.operations:
            operations[(cls.name, op.name)] += 1
        for attr in cls.attributes:
            attributes[(cls.name, attr.name)] += 1

    def visit_package(pkg: IRPackage) -> None:
        packages[pkg.name] += 1
        for sub in pkg.packages:
            visit_package(sub)
        for cls in pkg.classes:
            visit_class(cls)

    for pkg in system.packages:
        visit_package(pkg)
    for cls in system.classes:
        visit_class(cls)
    return {
        "packages": packages,
        "classes": classes,
        "operations": operations,
        "attributes": attributes,
    }


def _scan(tree: FileTree) -> dict:
    packages: Counter = Counter()
    classes: Counter = Counter()
    operations: Counter = Counter()
    attributes: Counter = Counter()
    constructors = 0
    imports = 0
    for entry in tree.files:
        if entry.path.endswith("__init__.py"):
            name = _package_name_from_marker(entry.text)
            if name:
                packages[name] += 1
            continue
        module = ast.parse(entry.text)
        for node in ast.walk(module):
            if isinstance(node, (ast.Import, ast.ImportFrom)):
                imports += 1
        for node in module.body:
            if not isinstance(node, ast.ClassDef):
                continue
            classes[node.name] += 1
            for member in node.body:
                if not isinstance(member, ast.FunctionDef):
                    continue
                if member.name == "__init__":
                    constructors += 1
                    for stmt in member.body:
                        if isinstance(stmt, ast.Assign):
                            for target in stmt.targets:
                                if (
                                    isinstance(target, ast.Attribute)
                                    and isinstance(target.value, ast.Name)
                                    and target.value.id == "self"
                                ):
                                    attributes[(node.name, target.attr)] += 1
                else:
                    operations[(node.name, member.name)] += 1
    return {
        "packages": packages,
        "classes": classes,
        "operations": operations,
        "attributes": attributes,
        "constructors": constructors,
        "imports": imports,
    }


def _package_name_from_marker(text: str) -> str | None:
    match = re.search(r"package (\w+)", text)
    return match.group(1) if match else None
