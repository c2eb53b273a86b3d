"""Dense statevector simulation of circuit IR.

Basis ordering is little-endian: qubit 0 is the least-significant bit of
the basis index, and clbit 0 is the rightmost character of an output
bitstring.  Global phase is not normalized.  Shot sampling uses numpy's
seeded PCG64 generator (``numpy.random.default_rng``), so counts are
reproducible per (circuit, shots, seed) across platforms.

Circuits with conditional blocks or mid-circuit measurement are executed
per shot as collapse-and-renormalize trajectories; everything else takes
the exact path (one statevector, multinomial sampling).
"""

from __future__ import annotations

import json
import math

import numpy as np

from ..ir.model import CircuitIR, ConditionalBlock, GateOp, MeasureOp
from ..ir.validate import validate_circuit

MAX_QUBITS = 20

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


class CapacityExceeded(Exception):
    """Circuit is larger than the dense-simulation cap."""


class ExactModeUnsupported(Exception):
    """Circuit needs per-shot trajectories (conditionals or mid-circuit use)."""


class InvalidCircuit(ValueError):
    """Simulation was asked to run a circuit that fails validation."""


# --- gate matrices -----------------------------------------------------------


def u3_matrix(theta: float, phi: float, lam: float) -> np.ndarray:
    cos = math.cos(theta / 2.0)
    sin = math.sin(theta / 2.0)
    return np.array(
        [
            [cos, -np.exp(1j * lam) * sin],
            [np.exp(1j * phi) * sin, np.exp(1j * (phi + lam)) * cos],
        ],
        dtype=complex,
    )


_FIXED_1Q = {
    "h": np.array([[1, 1], [1, -1]], dtype=complex) * _INV_SQRT2,
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
    "s": np.array([[1, 0], [0, 1j]], dtype=complex),
    "sdg": np.array([[1, 0], [0, -1j]], dtype=complex),
    "t": np.array([[1, 0], [0, np.exp(1j * math.pi / 4)]], dtype=complex),
    "tdg": np.array([[1, 0], [0, np.exp(-1j * math.pi / 4)]], dtype=complex),
}

_SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)


def base_matrix(op: GateOp) -> np.ndarray:
    """Unitary acting on the gate's targets, before adding controls."""
    name, params = op.name, op.params
    if name in _FIXED_1Q:
        return _FIXED_1Q[name]
    if name == "rx":
        (theta,) = params
        c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
    if name == "ry":
        (theta,) = params
        c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
        return np.array([[c, -s], [s, c]], dtype=complex)
    if name == "rz":
        (theta,) = params
        return np.array(
            [[np.exp(-1j * theta / 2.0), 0], [0, np.exp(1j * theta / 2.0)]],
            dtype=complex,
        )
    if name == "u2":
        phi, lam = params
        return u3_matrix(math.pi / 2.0, phi, lam)
    if name == "u3":
        theta, phi, lam = params
        return u3_matrix(theta, phi, lam)
    if name in ("cx", "ccx"):
        return _FIXED_1Q["x"]
    if name == "cy":
        return _FIXED_1Q["y"]
    if name == "cz":
        return _FIXED_1Q["z"]
    if name == "ch":
        return _FIXED_1Q["h"]
    if name in ("swap", "cswap"):
        return _SWAP
    raise KeyError(name)


def controlled_matrix(op: GateOp) -> np.ndarray:
    """Full unitary on (targets..., controls...) local bits, controls high."""
    base = base_matrix(op)
    n_controls = len(op.controls)
    if n_controls == 0:
        return base
    dim = base.shape[0] << n_controls
    full = np.eye(dim, dtype=complex)
    full[dim - base.shape[0]:, dim - base.shape[0]:] = base
    return full


# --- state manipulation -------------------------------------------------------


def _initial_state(n_qubits: int) -> np.ndarray:
    state = np.zeros(1 << n_qubits, dtype=complex)
    state[0] = 1.0
    return state


def _apply_gate(state: np.ndarray, op: GateOp, n_qubits: int) -> np.ndarray:
    # local bit k of the gate matrix is qubits[k]; controls occupy high bits
    qubits = list(op.targets) + list(op.controls)
    matrix = controlled_matrix(op)
    m = len(qubits)
    tensor = state.reshape([2] * n_qubits)
    # axis (n-1-q) holds qubit q; the local MSB must come first after the move
    sources = [n_qubits - 1 - q for q in reversed(qubits)]
    tensor = np.moveaxis(tensor, sources, range(m))
    tensor = (matrix @ tensor.reshape(1 << m, -1)).reshape([2] * n_qubits)
    tensor = np.moveaxis(tensor, range(m), sources)
    return tensor.reshape(-1)


def _measure_qubit(state: np.ndarray, qubit: int, n_qubits: int, rng) -> tuple[np.ndarray, int]:
    tensor = state.reshape([2] * n_qubits)
    axis = n_qubits - 1 - qubit
    one_slice = np.take(tensor, 1, axis=axis)
    p_one = float(np.sum(np.abs(one_slice) ** 2))
    outcome = 1 if rng.random() < p_one else 0
    keep = np.zeros((2,), dtype=complex)
    keep[outcome] = 1.0
    shape = [1] * n_qubits
    shape[axis] = 2
    tensor = tensor * keep.reshape(shape)
    norm = math.sqrt(p_one if outcome == 1 else 1.0 - p_one)
    if norm > 0.0:
        tensor = tensor / norm
    return tensor.reshape(-1), outcome


# --- public operations --------------------------------------------------------


def _check(circuit: CircuitIR) -> None:
    report = validate_circuit(circuit)
    if not report.ok:
        messages = "; ".join(f.message for f in report.errors)
        raise InvalidCircuit(messages)
    if circuit.n_qubits > MAX_QUBITS:
        raise CapacityExceeded(
            f"{circuit.n_qubits} qubits exceeds the {MAX_QUBITS}-qubit cap"
        )


def _is_exact_capable(circuit: CircuitIR) -> bool:
    if circuit.conditional_count() > 0:
        return False
    measured: set[int] = set()
    for op in circuit.ops:
        if isinstance(op, MeasureOp):
            if op.qubit in measured:
                return False
            measured.add(op.qubit)
        elif isinstance(op, GateOp):
            if measured.intersection(op.controls) or measured.intersection(op.targets):
                return False
    return True


def statevector(circuit: CircuitIR) -> np.ndarray:
    """Final state from applying every gate in op order to |0...0>."""
    _check(circuit)
    if not _is_exact_capable(circuit):
        raise ExactModeUnsupported(
            "conditionals or mid-circuit measurement require sample()"
        )
    state = _initial_state(circuit.n_qubits)
    for op in circuit.ops:
        if isinstance(op, GateOp):
            state = _apply_gate(state, op, circuit.n_qubits)
    return state


def probabilities(circuit: CircuitIR) -> dict[str, float]:
    """Exact output distribution marginalized onto measured clbits."""
    state = statevector(circuit)
    qubit_for_clbit = {m.clbit: m.qubit for m in circuit.flat_measure_ops()}
    weights = np.abs(state) ** 2
    dist: dict[str, float] = {}
    for basis, weight in enumerate(weights):
        if weight == 0.0:
            continue
        key = _bitstring(basis, qubit_for_clbit, circuit.n_clbits)
        dist[key] = dist.get(key, 0.0) + float(weight)
    return {key: dist[key] for key in sorted(dist)}


def _bitstring(basis: int, qubit_for_clbit: dict[int, int], n_clbits: int) -> str:
    chars = []
    for clbit in range(n_clbits - 1, -1, -1):
        qubit = qubit_for_clbit.get(clbit)
        bit = 0 if qubit is None else (basis >> qubit) & 1
        chars.append(str(bit))
    return "".join(chars)


def sample(circuit: CircuitIR, shots: int, seed: int | None = None) -> dict[str, int]:
    """Sampled counts over measured clbits; deterministic per (circuit, shots, seed)."""
    _check(circuit)
    if shots < 1:
        raise ValueError("shots must be >= 1")
    rng = np.random.default_rng(seed)
    if _is_exact_capable(circuit):
        dist = probabilities(circuit)
        keys = list(dist)
        draws = rng.multinomial(shots, [dist[k] for k in keys])
        counts = {k: int(c) for k, c in zip(keys, draws) if c > 0}
        return {key: counts[key] for key in sorted(counts)}
    counts: dict[str, int] = {}
    for _ in range(shots):
        key = _run_trajectory(circuit, rng)
        counts[key] = counts.get(key, 0) + 1
    return {key: counts[key] for key in sorted(counts)}


def _run_trajectory(circuit: CircuitIR, rng) -> str:
    state = _initial_state(circuit.n_qubits)
    clbits = [0] * circuit.n_clbits

    def execute(ops) -> None:
        nonlocal state
        for op in ops:
            if isinstance(op, GateOp):
                state = _apply_gate(state, op, circuit.n_qubits)
            elif isinstance(op, MeasureOp):
                state, outcome = _measure_qubit(state, op.qubit, circuit.n_qubits, rng)
                clbits[op.clbit] = outcome
            elif isinstance(op, ConditionalBlock):
                if clbits[op.clbit] == op.value:
                    execute(op.body)

    execute(circuit.ops)
    return "".join(str(b) for b in reversed(clbits))


def format_counts(counts: dict[str, int]) -> str:
    """Uniform counts text: JSON object, keys sorted lexicographically."""
    return json.dumps({key: int(counts[key]) for key in sorted(counts)}, sort_keys=True)
