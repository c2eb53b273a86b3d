"""Distribution comparison: KL divergence and equivalence verdicts.

KL values are in nats (natural log).  The candidate distribution is p and
the reference is q, so ``kl_divergence(candidate, reference)``; the metric
is asymmetric and no symmetry is implied.  Inputs may be probability maps
or raw shot counts; counts are normalized internally.

Where the reference assigns zero probability to an outcome the candidate
produced, the zero entries are smoothed to ``1 / (10 * shots)`` and the
reference is renormalized, keeping verdicts finite on sampled data.  The
``smoothed`` flag on the result records that this happened.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

DEFAULT_THRESHOLD = 0.1
_DEFAULT_SHOTS = 1024


@dataclass(frozen=True)
class KlResult:
    value: float  # nats, >= 0
    smoothed: bool

    def to_json_dict(self, threshold: float, passed: bool) -> dict:
        return {
            "kl": self.value,
            "threshold": threshold,
            "pass": passed,
            "smoothed": self.smoothed,
        }


class LengthMismatch(ValueError):
    """Distributions are over bitstrings of different lengths."""


def kl_divergence(p: dict[str, float], q: dict[str, float], shots: int | None = None) -> KlResult:
    """KL(p || q) over the union support, with epsilon smoothing of q's zeros."""
    p_probs, p_shots = _normalize(p, "p")
    q_probs, q_shots = _normalize(q, "q")
    _check_lengths(p_probs, q_probs)
    epsilon_shots = shots or q_shots or p_shots or _DEFAULT_SHOTS
    smoothed = False
    zero_keys = [key for key, prob in p_probs.items() if prob > 0.0 and q_probs.get(key, 0.0) == 0.0]
    if zero_keys:
        smoothed = True
        epsilon = 1.0 / (10.0 * epsilon_shots)
        for key in zero_keys:
            q_probs[key] = epsilon
        total = sum(q_probs.values())
        q_probs = {key: value / total for key, value in q_probs.items()}
    value = 0.0
    for key, prob in p_probs.items():
        if prob > 0.0:
            value += prob * math.log(prob / q_probs[key])
    return KlResult(value=max(value, 0.0), smoothed=smoothed)


def equivalence_verdict(
    reference: dict[str, float],
    candidate: dict[str, float],
    threshold: float = DEFAULT_THRESHOLD,
    shots: int | None = None,
) -> tuple[bool, KlResult]:
    """True iff KL(candidate || reference) is below threshold."""
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    result = kl_divergence(candidate, reference, shots=shots)
    return result.value < threshold, result


def _normalize(dist: dict[str, float], label: str) -> tuple[dict[str, float], int | None]:
    """Probability map plus the shot total when the input looks like counts."""
    if not dist:
        raise ValueError(f"distribution {label} is empty")
    total = float(sum(dist.values()))
    if total <= 0.0:
        raise ValueError(f"distribution {label} has non-positive mass")
    integral = all(float(v) == int(v) and v >= 0 for v in dist.values())
    shots = int(total) if integral and total > 1.5 else None
    return {key: float(value) / total for key, value in dist.items()}, shots


def _check_lengths(p: dict[str, float], q: dict[str, float]) -> None:
    lengths = {len(key) for key in p} | {len(key) for key in q}
    if len(lengths) > 1:
        raise LengthMismatch(f"bitstring lengths differ: {sorted(lengths)}")
