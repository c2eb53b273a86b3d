"""Executable quantum program emission from circuit IR.

Every program has the same shape: framework imports, placeholder helper
definitions (once per distinct non-native gate, before first use), qubit
and classical-bit allocation, one statement per circuit op, measurements,
and an execution epilogue that runs the vendor's local simulator and
prints a ``{"bitstring": count}`` JSON object with lexicographically
sorted keys, clbit 0 rightmost.  Output is a pure function of
(circuit, target, options): byte-identical across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..ir.model import CircuitIR, ConditionalBlock, GateOp, MeasureOp
from ..ir.serialize import IR_VERSION
from ..ir.validate import validate_circuit
from .capabilities import CapabilityRow, TargetQpl, capabilities

TOOL_NAME = "qumlc"


class UnsupportedGate(Exception):
    """Gate cannot be emitted for the target under the given options."""


class UnsupportedFeature(Exception):
    """Circuit uses a construct the target has no counterpart for."""


@dataclass(frozen=True)
class GenOptions:
    shots: int = 1024
    seed: int | None = None
    allow_placeholders: bool = True

    def __post_init__(self) -> None:
        if self.shots < 1:
            raise ValueError("shots must be >= 1")


@dataclass(frozen=True)
class Manifest:
    qubit_decls: int = 0
    clbit_decls: int = 0
    gate_ops: int = 0
    measures: int = 0
    conditionals: int = 0
    placeholders: int = 0

    def to_json_dict(self) -> dict:
        return {
            "qubit_decls": self.qubit_decls,
            "clbit_decls": self.clbit_decls,
            "gate_ops": self.gate_ops,
            "measures": self.measures,
            "conditionals": self.conditionals,
            "placeholders": self.placeholders,
        }


@dataclass(frozen=True)
class TargetProgram:
    source: str
    target: TargetQpl
    manifest: Manifest
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class EmittedGate:
    """Statement text for one gate plus the helper names it relies on."""

    statement: str
    helpers: tuple[str, ...] = ()


def _fmt(value: float) -> str:
    return repr(float(value))


def _header(target: TargetQpl) -> str:
    return f"generated by {TOOL_NAME} (ir v{IR_VERSION}) target={target.value}"


# --- per-target gate expressions -------------------------------------------

_QISKIT_METHODS = {
    name: name
    for name in ("h", "x", "y", "z", "s", "sdg", "t", "tdg", "rx", "ry", "rz",
                 "cx", "cy", "cz", "ch", "swap", "ccx", "cswap")
}

_CIRQ_CONSTANTS = {
    "h": "H", "x": "X", "y": "Y", "z": "Z", "s": "S", "t": "T",
    "cx": "CNOT", "cz": "CZ", "swap": "SWAP", "ccx": "CCX", "cswap": "CSWAP",
}

_BRAKET_METHODS = {
    "h": "h", "x": "x", "y": "y", "z": "z", "s": "s", "sdg": "si",
    "t": "t", "tdg": "ti", "rx": "rx", "ry": "ry", "rz": "rz",
    "cx": "cnot", "cy": "cy", "cz": "cz", "swap": "swap",
    "ccx": "ccnot", "cswap": "cswap",
}

_QSHARP_SIMPLE = {
    "h": "H", "x": "X", "y": "Y", "z": "Z", "s": "S", "t": "T",
    "rx": "Rx", "ry": "Ry", "rz": "Rz",
}


def _qiskit_expr(op: GateOp) -> EmittedGate:
    qubits = ", ".join(f"q[{i}]" for i in (*op.controls, *op.targets))
    if op.name == "u2":
        phi, lam = op.params
        args = ", ".join((_fmt(math.pi / 2.0), _fmt(phi), _fmt(lam), qubits))
        return EmittedGate(f"qc.u({args})")
    if op.name == "u3":
        args = ", ".join((*map(_fmt, op.params), qubits))
        return EmittedGate(f"qc.u({args})")
    method = _QISKIT_METHODS[op.name]
    args = ", ".join((*map(_fmt, op.params), qubits))
    return EmittedGate(f"qc.{method}({args})")


def _cirq_expr(op: GateOp) -> EmittedGate:
    name = op.name
    if name in ("u2", "u3"):
        args = ", ".join((*map(_fmt, op.params), f"q[{op.targets[0]}]"))
        return EmittedGate(f"{name}({args})", helpers=(name,))
    if name == "sdg":
        return EmittedGate(f"cirq.S(q[{op.targets[0]}]) ** -1")
    if name == "tdg":
        return EmittedGate(f"cirq.T(q[{op.targets[0]}]) ** -1")
    if name in ("rx", "ry", "rz"):
        return EmittedGate(f"cirq.{name}({_fmt(op.params[0])})(q[{op.targets[0]}])")
    if name in ("cy", "ch"):
        base = "Y" if name == "cy" else "H"
        return EmittedGate(
            f"cirq.{base}(q[{op.targets[0]}]).controlled_by(q[{op.controls[0]}])"
        )
    constant = _CIRQ_CONSTANTS[name]
    qubits = ", ".join(f"q[{i}]" for i in (*op.controls, *op.targets))
    return EmittedGate(f"cirq.{constant}({qubits})")


def _braket_expr(op: GateOp) -> EmittedGate:
    name = op.name
    if name in ("u2", "u3"):
        args = ", ".join((*map(_fmt, op.params), str(op.targets[0])))
        return EmittedGate(f"{name}(circuit, {args})", helpers=(name,))
    if name == "ch":
        return EmittedGate(
            f"ch(circuit, {op.controls[0]}, {op.targets[0]})", helpers=("ch",)
        )
    method = _BRAKET_METHODS[name]
    indices = ", ".join(str(i) for i in (*op.controls, *op.targets))
    if op.params:
        return EmittedGate(f"circuit.{method}({indices}, {', '.join(map(_fmt, op.params))})")
    return EmittedGate(f"circuit.{method}({indices})")


def _qsharp_expr(op: GateOp) -> EmittedGate:
    name = op.name
    if name in ("u2", "u3"):
        helper = name.upper()
        args = ", ".join((*map(_fmt, op.params), f"q[{op.targets[0]}]"))
        return EmittedGate(f"{helper}({args});", helpers=(name,))
    if name == "sdg":
        return EmittedGate(f"Adjoint S(q[{op.targets[0]}]);")
    if name == "tdg":
        return EmittedGate(f"Adjoint T(q[{op.targets[0]}]);")
    if name in _QSHARP_SIMPLE:
        callee = _QSHARP_SIMPLE[name]
        args = ", ".join((*map(_fmt, op.params), f"q[{op.targets[0]}]"))
        return EmittedGate(f"{callee}({args});")
    if name == "cx":
        return EmittedGate(f"CNOT(q[{op.controls[0]}], q[{op.targets[0]}]);")
    if name == "ccx":
        return EmittedGate(
            f"CCNOT(q[{op.controls[0]}], q[{op.controls[1]}], q[{op.targets[0]}]);"
        )
    if name == "swap":
        return EmittedGate(f"SWAP(q[{op.targets[0]}], q[{op.targets[1]}]);")
    if name in ("cy", "cz", "ch"):
        base = {"cy": "Y", "cz": "Z", "ch": "H"}[name]
        return EmittedGate(f"Controlled {base}([q[{op.controls[0]}]], q[{op.targets[0]}]);")
    if name == "cswap":
        return EmittedGate(
            f"Controlled SWAP([q[{op.controls[0]}]], "
            f"(q[{op.targets[0]}], q[{op.targets[1]}]));"
        )
    raise UnsupportedGate(f"{name} has no qsharp mapping")


_EXPR_BUILDERS = {
    TargetQpl.QISKIT: _qiskit_expr,
    TargetQpl.CIRQ: _cirq_expr,
    TargetQpl.BRAKET: _braket_expr,
    TargetQpl.QSHARP: _qsharp_expr,
}


def map_gate(op: GateOp, target: TargetQpl) -> EmittedGate:
    """Target-syntax statement for one gate, with required helper names."""
    row = capabilities(target)
    if op.name not in row.native_gates and op.name not in row.placeholder_gates:
        raise UnsupportedGate(f"{op.name} is not emittable for {target.value}")
    emitted = _EXPR_BUILDERS[target](op)
    if target is TargetQpl.CIRQ and not emitted.statement.startswith("circuit."):
        return EmittedGate(f"circuit.append({emitted.statement})", emitted.helpers)
    return EmittedGate(emitted.statement, emitted.helpers)


# --- placeholder helper definitions -----------------------------------------

_CIRQ_HELPERS = {
    "u2": [
        "# placeholder: u2 is not native to cirq; composed from z- and",
        "# y-rotations (global phase dropped)",
        "def u2(phi, lam, qubit):",
        f"    return [cirq.rz(lam)(qubit), cirq.ry({_fmt(math.pi / 2.0)})(qubit), cirq.rz(phi)(qubit)]",
    ],
    "u3": [
        "# placeholder: u3 is not native to cirq; composed from z- and",
        "# y-rotations (global phase dropped)",
        "def u3(theta, phi, lam, qubit):",
        "    return [cirq.rz(lam)(qubit), cirq.ry(theta)(qubit), cirq.rz(phi)(qubit)]",
    ],
}

_BRAKET_HELPERS = {
    "u2": [
        "# placeholder: u2 is not native to braket; composed from rz and ry",
        "# rotations (global phase dropped)",
        "def u2(circuit, phi, lam, target):",
        "    circuit.rz(target, lam)",
        f"    circuit.ry(target, {_fmt(math.pi / 2.0)})",
        "    circuit.rz(target, phi)",
    ],
    "u3": [
        "# placeholder: u3 is not native to braket; composed from rz and ry",
        "# rotations (global phase dropped)",
        "def u3(circuit, theta, phi, lam, target):",
        "    circuit.rz(target, lam)",
        "    circuit.ry(target, theta)",
        "    circuit.rz(target, phi)",
    ],
    "ch": [
        "# placeholder: ch is not native to braket; exact standard decomposition",
        "def ch(circuit, control, target):",
        "    circuit.s(target)",
        "    circuit.h(target)",
        "    circuit.t(target)",
        "    circuit.cnot(control, target)",
        "    circuit.ti(target)",
        "    circuit.h(target)",
        "    circuit.si(target)",
    ],
}

_QSHARP_HELPERS = {
    "u2": [
        "// placeholder: u2 is not native to qsharp; provide an implementation",
        "// of the parameterized rotation u2(phi, lambda) before running",
        "operation U2(phi : Double, lambda : Double, target : Qubit) : Unit {",
        '    fail "u2 placeholder: implementation required";',
        "}",
    ],
    "u3": [
        "// placeholder: u3 is not native to qsharp; provide an implementation",
        "// of the parameterized rotation u3(theta, phi, lambda) before running",
        "operation U3(theta : Double, phi : Double, lambda : Double, target : Qubit) : Unit {",
        '    fail "u3 placeholder: implementation required";',
        "}",
    ],
}

_HELPER_DEFS = {
    TargetQpl.CIRQ: _CIRQ_HELPERS,
    TargetQpl.BRAKET: _BRAKET_HELPERS,
    TargetQpl.QSHARP: _QSHARP_HELPERS,
}


# --- program assembly --------------------------------------------------------


def generate_quantum(
    circuit: CircuitIR, target: TargetQpl, options: GenOptions | None = None
) -> TargetProgram:
    """Emit an executable program for the target from a validated circuit."""
    options = options or GenOptions()
    report = validate_circuit(circuit)
    if not report.ok:
        messages = "; ".join(f.message for f in report.errors)
        raise ValueError(f"circuit fails validation: {messages}")
    row = capabilities(target)
    if circuit.conditional_count() > 0 and not row.supports_conditionals:
        raise UnsupportedFeature(
            f"{target.value} does not support conditional blocks"
        )
    placeholder_names = _placeholders_in_use(circuit, row)
    if placeholder_names and not options.allow_placeholders:
        raise UnsupportedGate(
            f"{', '.join(placeholder_names)} not native to {target.value} "
            "and placeholders are disabled"
        )
    warnings = tuple(
        f"{name} not native to {target.value}; placeholder stub emitted"
        for name in placeholder_names
    )
    emitter = _EMITTERS[target]
    source, manifest = emitter(circuit, options, placeholder_names)
    return TargetProgram(
        source=source,
        target=target,
        manifest=manifest,
        warnings=warnings,
    )


def _placeholders_in_use(circuit: CircuitIR, row: CapabilityRow) -> list[str]:
    seen: list[str] = []
    for op in circuit.flat_gate_ops():
        if op.name in row.placeholder_gates and op.name not in seen:
            seen.append(op.name)
    return seen


def _manifest(circuit: CircuitIR, placeholders: int) -> Manifest:
    return Manifest(
        qubit_decls=circuit.n_qubits,
        clbit_decls=circuit.n_clbits,
        gate_ops=len(circuit.flat_gate_ops()),
        measures=len(circuit.flat_measure_ops()),
        conditionals=circuit.conditional_count(),
        placeholders=placeholders,
    )


def _helper_lines(target: TargetQpl, names: list[str]) -> list[str]:
    lines: list[str] = []
    table = _HELPER_DEFS.get(target, {})
    for name in names:
        lines.extend(table[name])
        lines.append("")
    return lines


def _names_comment(prefix: str, names: tuple[str, ...]) -> str:
    return f"{prefix}{', '.join(names)}" if names else f"{prefix}(none)"


# --- qiskit ------------------------------------------------------------------


def _emit_qiskit(circuit: CircuitIR, options: GenOptions, placeholders: list[str]):
    lines = [f"# {_header(TargetQpl.QISKIT)}", "import json", ""]
    lines.append("from qiskit import ClassicalRegister, QuantumCircuit, QuantumRegister, transpile")
    lines.append("from qiskit_aer import AerSimulator")
    lines.append("")
    lines.append(_names_comment("# qubits: ", circuit.qubit_names))
    lines.append(f'q = QuantumRegister({circuit.n_qubits}, "q")')
    lines.append(_names_comment("# classical bits: ", circuit.clbit_names))
    lines.append(f'cRegister = ClassicalRegister({circuit.n_clbits}, "c")')
    lines.append("qc = QuantumCircuit(q, cRegister)")
    lines.append("")
    lines.append("# gates and measurements")
    _walk_qiskit(circuit.ops, lines, indent=0)
    lines.append("")
    lines.append("# execute and print counts (clbit 0 is the rightmost bit)")
    if circuit.n_qubits == 0:
        lines.append("# nothing to execute: the circuit declares no qubits")
        lines.append(f'counts = {{"": {options.shots}}}')
    else:
        lines.append("backend = AerSimulator()")
        run_args = f"transpile(qc, backend), shots={options.shots}"
        if options.seed is not None:
            run_args += f", seed_simulator={options.seed}"
        lines.append(f"job = backend.run({run_args})")
        if circuit.flat_measure_ops():
            lines.append(
                "counts = {key: int(value) for key, value in job.result().get_counts().items()}"
            )
        else:
            lines.append(f'counts = {{"{"0" * circuit.n_clbits}": {options.shots}}}')
    lines.append("print(json.dumps(counts, sort_keys=True))")
    return "\n".join(lines) + "\n", _manifest(circuit, len(placeholders))


def _walk_qiskit(ops, lines: list[str], indent: int) -> None:
    pad = "    " * indent
    for op in ops:
        if isinstance(op, GateOp):
            lines.append(pad + map_gate(op, TargetQpl.QISKIT).statement)
        elif isinstance(op, MeasureOp):
            lines.append(pad + f"qc.measure(q[{op.qubit}], cRegister[{op.clbit}])")
        elif isinstance(op, ConditionalBlock):
            lines.append(pad + f"with qc.if_test((cRegister[{op.clbit}], {op.value})):")
            _walk_qiskit(op.body, lines, indent + 1)


# --- cirq ---------------------------------------------------------------------


def _emit_cirq(circuit: CircuitIR, options: GenOptions, placeholders: list[str]):
    needs_sympy = _cirq_needs_sympy(circuit.ops)
    lines = [f"# {_header(TargetQpl.CIRQ)}", "import json", ""]
    lines.append("import cirq")
    if needs_sympy:
        lines.append("import sympy")
    lines.append("")
    helper_lines = _helper_lines(TargetQpl.CIRQ, placeholders)
    if helper_lines:
        lines.append("")
        lines.extend(helper_lines)
    lines.append("")
    lines.append(_names_comment("# qubits: ", circuit.qubit_names))
    lines.append(f"q = cirq.LineQubit.range({circuit.n_qubits})")
    lines.append("circuit = cirq.Circuit()")
    lines.append("")
    lines.append(_names_comment("# gates and measurements; classical bits: ", circuit.clbit_names))
    _walk_cirq(circuit.ops, lines, conditions=[])
    lines.append("")
    lines.append("# execute and print counts (clbit 0 is the rightmost bit)")
    if circuit.n_qubits == 0:
        lines.append("# nothing to execute: the circuit declares no qubits")
        lines.append(f'counts = {{"": {options.shots}}}')
        lines.append("print(json.dumps(counts, sort_keys=True))")
        return "\n".join(lines) + "\n", _manifest(circuit, len(placeholders))
    seed_arg = f"seed={options.seed}" if options.seed is not None else ""
    lines.append(f"simulator = cirq.Simulator({seed_arg})")
    lines.append(f"result = simulator.run(circuit, repetitions={options.shots})")
    lines.append("counts = {}")
    lines.append(f"for i in range({options.shots}):")
    lines.append("    bits = []")
    measured = {m.clbit for m in circuit.flat_measure_ops()}
    for clbit in range(circuit.n_clbits - 1, -1, -1):
        if clbit in measured:
            lines.append(
                f'    bits.append(str(int(result.measurements["c{clbit}"][i][0])))'
            )
        else:
            lines.append(f'    bits.append("0")')
    lines.append('    key = "".join(bits)')
    lines.append("    counts[key] = counts.get(key, 0) + 1")
    lines.append("print(json.dumps(counts, sort_keys=True))")
    return "\n".join(lines) + "\n", _manifest(circuit, len(placeholders))


def _cirq_needs_sympy(ops) -> bool:
    for op in ops:
        if isinstance(op, ConditionalBlock):
            if op.value == 0 or _cirq_needs_sympy(op.body):
                return True
    return False


def _walk_cirq(ops, lines: list[str], conditions: list[tuple[int, int]]) -> None:
    for op in ops:
        if isinstance(op, GateOp):
            emitted = _cirq_expr(op)
            expression = emitted.statement
            for clbit, value in conditions:
                if value == 1:
                    expression += f'.with_classical_controls("c{clbit}")'
                else:
                    expression += (
                        f'.with_classical_controls(sympy.Eq(sympy.Symbol("c{clbit}"), 0))'
                    )
            lines.append(f"circuit.append({expression})")
        elif isinstance(op, MeasureOp):
            if conditions:
                raise UnsupportedFeature(
                    "cirq cannot classically control a measurement"
                )
            lines.append(f'circuit.append(cirq.measure(q[{op.qubit}], key="c{op.clbit}"))')
        elif isinstance(op, ConditionalBlock):
            _walk_cirq(op.body, lines, conditions + [(op.clbit, op.value)])


# --- braket -------------------------------------------------------------------


def _emit_braket(circuit: CircuitIR, options: GenOptions, placeholders: list[str]):
    lines = [f"# {_header(TargetQpl.BRAKET)}", "import json", ""]
    lines.append("from braket.circuits import Circuit")
    lines.append("from braket.devices import LocalSimulator")
    lines.append("")
    helper_lines = _helper_lines(TargetQpl.BRAKET, placeholders)
    if helper_lines:
        lines.append("")
        lines.extend(helper_lines)
    lines.append("")
    lines.append(_names_comment("# qubits: ", circuit.qubit_names))
    lines.append("circuit = Circuit()")
    lines.append("")
    lines.append("# gates")
    touched: set[int] = set()
    for op in circuit.flat_gate_ops():
        touched.update(op.controls)
        touched.update(op.targets)
        lines.append(map_gate(op, TargetQpl.BRAKET).statement)
    lines.append("")
    lines.append(_names_comment(
        "# braket measures every qubit; classical bits: ", circuit.clbit_names
    ))
    lines.append("# execute and print counts (clbit 0 is the rightmost bit)")
    idle = [k for k in range(circuit.n_qubits) if k not in touched]
    if circuit.n_qubits == 0 or len(idle) == circuit.n_qubits:
        # an instruction-less circuit is not runnable on the local simulator
        key = "0" * circuit.n_clbits
        lines.append("# nothing to execute: the circuit contains no gate instructions")
        lines.append(f'counts = {{"{key}": {options.shots}}}')
        lines.append("print(json.dumps(counts, sort_keys=True))")
        return "\n".join(lines) + "\n", _manifest(circuit, len(placeholders))
    if idle:
        lines.append("# pad idle qubits so result keys cover every declared qubit")
        for k in idle:
            lines.append(f"circuit.i({k})")
    lines.append("device = LocalSimulator()")
    lines.append(f"result = device.run(circuit, shots={options.shots}).result()")
    lines.append("counts = {}")
    lines.append("for key, value in result.measurement_counts.items():")
    lines.append("    bits = []")
    qubit_for_clbit = {m.clbit: m.qubit for m in circuit.flat_measure_ops()}
    for clbit in range(circuit.n_clbits - 1, -1, -1):
        qubit = qubit_for_clbit.get(clbit)
        if qubit is None:
            lines.append('    bits.append("0")')
        else:
            lines.append(f"    bits.append(key[{qubit}])")
    lines.append('    out = "".join(bits)')
    lines.append("    counts[out] = counts.get(out, 0) + int(value)")
    lines.append("print(json.dumps(counts, sort_keys=True))")
    return "\n".join(lines) + "\n", _manifest(circuit, len(placeholders))


# --- qsharp -------------------------------------------------------------------


def _emit_qsharp(circuit: CircuitIR, options: GenOptions, placeholders: list[str]):
    n_states = 1 << circuit.n_clbits
    lines = [f"// {_header(TargetQpl.QSHARP)}"]
    lines.append("namespace GeneratedCircuit {")
    lines.append("    open Microsoft.Quantum.Intrinsic;")
    lines.append("")
    for name in placeholders:
        for helper_line in _QSHARP_HELPERS[name]:
            lines.append("    " + helper_line)
        lines.append("")
    lines.append("    @EntryPoint()")
    lines.append("    operation Main() : Unit {")
    lines.append("        " + _names_comment("// qubits: ", circuit.qubit_names))
    lines.append("        " + _names_comment("// classical bits: ", circuit.clbit_names))
    lines.append(f"        mutable counts = [0, size = {n_states}];")
    lines.append(f"        for _ in 1 .. {options.shots} {{")
    if circuit.n_qubits > 0:
        lines.append(f"            use q = Qubit[{circuit.n_qubits}];")
    lines.append(f"            mutable bits = [Zero, size = {circuit.n_clbits}];")
    lines.append("            // gates and measurements")
    _walk_qsharp(circuit.ops, lines, indent=3)
    lines.append("            mutable index = 0;")
    for clbit in range(circuit.n_clbits):
        lines.append(
            f"            if bits[{clbit}] == One {{ set index = index + {1 << clbit}; }}"
        )
    lines.append("            set counts w/= index <- counts[index] + 1;")
    if circuit.n_qubits > 0:
        lines.append("            ResetAll(q);")
    lines.append("        }")
    lines.append("        // print counts as JSON (clbit 0 is the rightmost bit)")
    lines.append('        mutable json = "{";')
    lines.append("        mutable first = true;")
    lines.append(f"        for index in 0 .. {n_states - 1} {{")
    lines.append("            if counts[index] > 0 {")
    lines.append('                mutable key = "";')
    lines.append(f"                for j in 0 .. {circuit.n_clbits - 1} {{")
    lines.append("                    if ((index >>> j) &&& 1) == 1 {")
    lines.append('                        set key = "1" + key;')
    lines.append("                    } else {")
    lines.append('                        set key = "0" + key;')
    lines.append("                    }")
    lines.append("                }")
    lines.append("                if not first {")
    lines.append('                    set json = json + ", ";')
    lines.append("                }")
    lines.append('                set json = json + $"\\"{key}\\": {counts[index]}";')
    lines.append("                set first = false;")
    lines.append("            }")
    lines.append("        }")
    lines.append('        set json = json + "}";')
    lines.append("        Message(json);")
    lines.append("    }")
    lines.append("}")
    return "\n".join(lines) + "\n", _manifest(circuit, len(placeholders))


def _walk_qsharp(ops, lines: list[str], indent: int) -> None:
    pad = "    " * indent
    for op in ops:
        if isinstance(op, GateOp):
            lines.append(pad + _qsharp_expr(op).statement)
        elif isinstance(op, MeasureOp):
            lines.append(pad + f"set bits w/= {op.clbit} <- M(q[{op.qubit}]);")
        elif isinstance(op, ConditionalBlock):
            literal = "One" if op.value == 1 else "Zero"
            lines.append(pad + f"if bits[{op.clbit}] == {literal} {{")
            _walk_qsharp(op.body, lines, indent + 1)
            lines.append(pad + "}")


_EMITTERS = {
    TargetQpl.QISKIT: _emit_qiskit,
    TargetQpl.CIRQ: _emit_cirq,
    TargetQpl.BRAKET: _emit_braket,
    TargetQpl.QSHARP: _emit_qsharp,
}
