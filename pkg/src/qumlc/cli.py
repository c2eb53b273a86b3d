"""Command-line pipeline: parse, generate, simulate, verify, report.

Exit status: 0 on success, 1 on validation errors (including a failed
equivalence verdict), 2 on I/O or parse errors.  Artifacts land under
``--out``: ``ir/`` for IR JSON, ``quantum/`` and ``classical/`` for
generated sources, ``reports/`` for JSON reports.  All files are written
to a temporary name and renamed into place, so a failing run never
clobbers existing artifacts.  Reruns with unchanged inputs are
byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import metrics, sim, uml
from .codegen import (
    GenOptions,
    TargetQpl,
    UnsupportedFeature,
    UnsupportedGate,
    element_report,
    generate_classical,
    generate_quantum,
)
from .ir import (
    CircuitIR,
    DeserializeError,
    LoweringError,
    SystemIR,
    deserialize_ir,
    lower_class_model,
    lower_sequence_model,
    serialize_ir,
    validate_circuit,
)
from .uml.model import ParseError

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2

SEED_ENV_VAR = "M2Q_SEED"

_TARGET_ORDER = (TargetQpl.QISKIT, TargetQpl.CIRQ, TargetQpl.QSHARP, TargetQpl.BRAKET)
_REFERENCE_SHOTS = 100_000


@dataclass
class CliConfig:
    command: str
    class_diagram: Path | None = None
    sequence_diagram: Path | None = None
    ir_file: Path | None = None
    counts: Path | None = None
    targets: tuple[TargetQpl, ...] = _TARGET_ORDER
    out: Path = Path("build")
    shots: int = 1024
    seed: int | None = None
    threshold: float = metrics.DEFAULT_THRESHOLD
    ir_dump: bool = False
    allow_mid_circuit: bool = False


class _CommandError(Exception):
    def __init__(self, status: int, message: str):
        self.status = status
        super().__init__(message)


def main(argv: list[str] | None = None) -> int:
    try:
        config = _parse_args(argv if argv is not None else sys.argv[1:])
    except SystemExit as exc:  # argparse already printed usage
        return EXIT_IO if exc.code not in (0, None) else EXIT_OK
    return run(config)


def run(config: CliConfig) -> int:
    handler = {
        "parse": _cmd_parse,
        "generate": _cmd_generate,
        "simulate": _cmd_simulate,
        "verify": _cmd_verify,
        "report": _cmd_report,
    }[config.command]
    try:
        return handler(config)
    except _CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.status


# --- argument parsing -------------------------------------------------------


def _parse_args(argv: list[str]) -> CliConfig:
    parser = argparse.ArgumentParser(
        prog="qumlc",
        description="Compile UML diagrams of hybrid quantum-classical systems "
        "into multi-platform quantum programs.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_common(sub, diagrams=True, ir_input=False):
        if diagrams:
            sub.add_argument("--class-diagram", type=Path)
            sub.add_argument("--sequence-diagram", type=Path)
        if ir_input:
            sub.add_argument("--ir", dest="ir_file", type=Path)
        sub.add_argument("--out", type=Path, default=Path("build"))
        sub.add_argument("--seed", type=int, default=None)
        sub.add_argument("--allow-mid-circuit", action="store_true")

    sub = subparsers.add_parser("parse", help="parse diagrams, write IR and validation report")
    add_common(sub)
    sub.add_argument("--ir-dump", action="store_true", default=True, help=argparse.SUPPRESS)

    sub = subparsers.add_parser("generate", help="emit quantum sources and classical skeletons")
    add_common(sub)
    sub.add_argument("--targets", default="all", help="comma-separated subset or 'all'")
    sub.add_argument("--shots", type=int, default=1024)
    sub.add_argument("--ir-dump", action="store_true")

    sub = subparsers.add_parser("simulate", help="run the reference simulator")
    add_common(sub, ir_input=True)
    sub.add_argument("--shots", type=int, default=1024)

    sub = subparsers.add_parser("verify", help="compare a counts JSON against the reference")
    add_common(sub, ir_input=True)
    sub.add_argument("--counts", type=Path, required=True)
    sub.add_argument("--threshold", type=float, default=metrics.DEFAULT_THRESHOLD)
    sub.add_argument("--shots", type=int, default=1024)

    sub = subparsers.add_parser("report", help="element-completeness report for the class model")
    add_common(sub)

    args = parser.parse_args(argv)
    seed = args.seed
    if seed is None and os.environ.get(SEED_ENV_VAR):
        seed = int(os.environ[SEED_ENV_VAR])
    targets = _TARGET_ORDER
    if getattr(args, "targets", "all") != "all":
        targets = tuple(TargetQpl.from_name(t) for t in args.targets.split(","))
    return CliConfig(
        command=args.command,
        class_diagram=getattr(args, "class_diagram", None),
        sequence_diagram=getattr(args, "sequence_diagram", None),
        ir_file=getattr(args, "ir_file", None),
        counts=getattr(args, "counts", None),
        targets=targets,
        out=args.out,
        shots=getattr(args, "shots", 1024),
        seed=seed,
        threshold=getattr(args, "threshold", metrics.DEFAULT_THRESHOLD),
        ir_dump=getattr(args, "ir_dump", False),
        allow_mid_circuit=args.allow_mid_circuit,
    )


# --- shared loading ----------------------------------------------------------


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise _CommandError(EXIT_IO, f"cannot read {path}: {exc}") from exc


def _parse_class(path: Path) -> uml.ClassModel:
    try:
        return uml.parse_class_diagram(_read_text(path))
    except ParseError as exc:
        raise _CommandError(
            EXIT_IO, f"{path}:{exc.line}:{exc.column}: expected {exc.expected}, found {exc.found}"
        ) from exc


def _parse_sequence(path: Path) -> uml.SequenceModel:
    try:
        return uml.parse_sequence_diagram(_read_text(path))
    except ParseError as exc:
        raise _CommandError(
            EXIT_IO, f"{path}:{exc.line}:{exc.column}: expected {exc.expected}, found {exc.found}"
        ) from exc


def _load_system(config: CliConfig) -> tuple[SystemIR | None, str | None]:
    if config.class_diagram is None:
        return None, None
    model = _parse_class(config.class_diagram)
    return lower_class_model(model), config.class_diagram.stem


def _load_circuit(config: CliConfig) -> tuple[CircuitIR, str]:
    if config.sequence_diagram is not None:
        model = _parse_sequence(config.sequence_diagram)
        try:
            circuit = lower_sequence_model(model, allow_mid_circuit=config.allow_mid_circuit)
        except LoweringError as exc:
            lines = "; ".join(f.message for f in exc.report.errors)
            raise _CommandError(
                EXIT_VALIDATION, f"{config.sequence_diagram}: {lines}"
            ) from exc
        return circuit, config.sequence_diagram.stem
    if config.ir_file is not None:
        try:
            _, circuit = deserialize_ir(_read_text(config.ir_file))
        except DeserializeError as exc:
            raise _CommandError(EXIT_IO, f"{config.ir_file}: {exc}") from exc
        if circuit is None:
            raise _CommandError(EXIT_IO, f"{config.ir_file}: document has no circuit")
        return circuit, _ir_stem(config.ir_file)
    raise _CommandError(EXIT_IO, "a --sequence-diagram or --ir input is required")


def _ir_stem(path: Path) -> str:
    stem = path.stem
    return stem[:-3] if stem.endswith(".ir") else stem


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    temporary = path.parent / (path.name + ".tmp")
    temporary.write_text(text, encoding="utf-8")
    os.replace(temporary, path)


def _write_json(path: Path, payload: dict) -> None:
    _write(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


# --- commands ----------------------------------------------------------------


def _cmd_parse(config: CliConfig) -> int:
    if config.class_diagram is None and config.sequence_diagram is None:
        raise _CommandError(EXIT_IO, "parse needs --class-diagram and/or --sequence-diagram")
    system, class_stem = _load_system(config)
    circuit = None
    stem = class_stem
    report_dict = {"errors": [], "warnings": []}
    status = EXIT_OK
    if config.sequence_diagram is not None:
        stem = config.sequence_diagram.stem
        model = _parse_sequence(config.sequence_diagram)
        try:
            circuit = lower_sequence_model(model, allow_mid_circuit=config.allow_mid_circuit)
            report_dict = validate_circuit(circuit).to_json_dict()
        except LoweringError as exc:
            report_dict = exc.report.to_json_dict()
            status = EXIT_VALIDATION
    _write(config.out / "ir" / f"{stem}.ir.json", serialize_ir(system, circuit))
    _write_json(config.out / "reports" / f"{stem}.validation.json", report_dict)
    return status


def _cmd_generate(config: CliConfig) -> int:
    if config.class_diagram is None and config.sequence_diagram is None:
        raise _CommandError(EXIT_IO, "generate needs --class-diagram and/or --sequence-diagram")
    system, class_stem = _load_system(config)
    circuit = None
    stem = class_stem or "model"
    if config.sequence_diagram is not None:
        circuit, stem = _load_circuit(config)
    options = GenOptions(shots=config.shots, seed=config.seed)
    manifest: dict = {"stem": stem, "targets": {}, "classical": {"files": 0}}
    outputs: list[tuple[Path, str]] = []
    failures = 0
    if circuit is not None:
        for target in _TARGET_ORDER:
            if target not in config.targets:
                continue
            try:
                program = generate_quantum(circuit, target, options)
            except (UnsupportedFeature, UnsupportedGate) as exc:
                manifest["targets"][target.value] = {"unsupported": str(exc)}
                failures += 1
                continue
            filename = f"{stem}{target.extension}"
            outputs.append((config.out / "quantum" / filename, program.source))
            manifest["targets"][target.value] = {
                "file": filename,
                "manifest": program.manifest.to_json_dict(),
                "warnings": list(program.warnings),
            }
    tree = None
    if system is not None:
        quantum_module = f"{stem}_circuit" if circuit is not None else None
        tree = generate_classical(system, quantum_module or "quantum_circuit")
        manifest["classical"]["files"] = len(tree.files)
    for path, text in outputs:
        _write(path, text)
    if tree is not None:
        classical_root = config.out / "classical"
        classical_root.mkdir(parents=True, exist_ok=True)
        for entry in tree.files:
            _write(classical_root / entry.path, entry.text)
    if config.ir_dump:
        _write(config.out / "ir" / f"{stem}.ir.json", serialize_ir(system, circuit))
    _write_json(config.out / "reports" / f"{stem}.manifest.json", manifest)
    requested = sum(1 for t in _TARGET_ORDER if t in config.targets) if circuit else 0
    if requested and failures == requested:
        return EXIT_VALIDATION
    return EXIT_OK


def _cmd_simulate(config: CliConfig) -> int:
    circuit, stem = _load_circuit(config)
    counts = sim.sample(circuit, config.shots, config.seed)
    _write(config.out / "reports" / f"{stem}.counts.json", sim.format_counts(counts) + "\n")
    try:
        probabilities = sim.probabilities(circuit)
    except sim.ExactModeUnsupported:
        probabilities = None
    if probabilities is not None:
        _write_json(config.out / "reports" / f"{stem}.probs.json", probabilities)
    return EXIT_OK


def _cmd_verify(config: CliConfig) -> int:
    circuit, stem = _load_circuit(config)
    try:
        candidate = json.loads(_read_text(config.counts))
    except json.JSONDecodeError as exc:
        raise _CommandError(EXIT_IO, f"{config.counts}: invalid JSON: {exc}") from exc
    if not isinstance(candidate, dict) or not candidate:
        raise _CommandError(EXIT_IO, f"{config.counts}: expected a bitstring->count object")
    try:
        reference = sim.probabilities(circuit)
    except sim.ExactModeUnsupported:
        reference = sim.sample(circuit, _REFERENCE_SHOTS, config.seed or 0)
    try:
        passed, result = metrics.equivalence_verdict(
            reference, candidate, threshold=config.threshold
        )
    except metrics.LengthMismatch as exc:
        raise _CommandError(EXIT_IO, f"{config.counts}: {exc}") from exc
    _write_json(
        config.out / "reports" / f"{stem}.verdict.json",
        result.to_json_dict(config.threshold, passed),
    )
    return EXIT_OK if passed else EXIT_VALIDATION


def _cmd_report(config: CliConfig) -> int:
    if config.class_diagram is None:
        raise _CommandError(EXIT_IO, "report needs --class-diagram")
    system, stem = _load_system(config)
    assert system is not None and stem is not None
    tree = generate_classical(system)
    report = element_report(system, tree)
    excluding = element_report(system, tree, count_constructors=False)
    payload = report.to_json_dict()
    payload["precision_excluding_constructors"] = excluding.precision
    _write_json(config.out / "reports" / f"{stem}.elements.json", payload)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
