"""Serialization of library results for the command line.

JSON output prints every float with 17 significant digits so it round-trips
exactly; human output uses 6.
"""

import json
import math

import numpy as np

from .io import fmt

SCHEMA = 1


def dumps(obj):
    """JSON text with floats written as ``%.17g``; keys keep insertion order."""
    return _encode(obj)


def _encode(obj):
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            raise ValueError(f"cannot encode non-finite float {x}")
        return fmt(x)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, np.ndarray):
        return _encode(obj.tolist())
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {_encode(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_encode(v) for v in obj) + "]"
    raise TypeError(f"cannot encode {type(obj).__name__}")


def human(x):
    """6 significant digits; floats always show a decimal point or exponent."""
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    s = fmt(x, 6)
    if not any(c in s for c in ".en"):
        s += ".0"
    return s


def human_vec(v):
    return " ".join(human(x) for x in np.asarray(v, dtype=float))


def angles_payload(angles, pdiff, agrees):
    return {
        "schema": SCHEMA,
        "command": "angles",
        "count": angles.count,
        "angles": angles.angles,
        "cosines": angles.cosines,
        "sines": angles.sines,
        "projector_difference": {
            "singular_values": pdiff.values,
            "predicted": pdiff.predicted,
            "max_deviation": pdiff.max_deviation,
            "agrees": agrees,
        },
    }


def ritz_payload(check):
    rep = check.report
    return {
        "schema": SCHEMA,
        "command": "ritz",
        "ritz_x": check.ritz_x,
        "ritz_y": check.ritz_y,
        "lhs": check.lhs,
        "rhs": check.rhs,
        "spread": check.spread,
        "spread_kind": "local" if check.local else "global",
        "margins": rep.margins,
        "worst_k": rep.worst_k + 1,
        "tolerance": rep.tolerance_used,
        "holds": rep.holds,
        "full_sum_holds": check.full_sum_holds,
        "max_gap_holds": check.max_gap_holds,
    }


def graph_payload(rep):
    return {
        "schema": SCHEMA,
        "command": "graph-compare",
        "spectrum1": rep.spectrum1,
        "spectrum2": rep.spectrum2,
        "lhs": rep.lhs,
        "l": rep.differing_edges,
        "bound": rep.bound,
        "union_lambda_max": rep.union_lambda_max,
        "sharp_bound": rep.sharp_bound,
        "tolerance": rep.tolerance_used,
        "holds": rep.holds,
        "sharp_holds": rep.sharp_holds,
    }


def dilation_payload(d, residual, out_path=None, ritz=None):
    payload = {
        "schema": SCHEMA,
        "command": "dilate",
        "original_dim": d.original_dim,
        "shift": d.shift,
        "scale": d.scale,
        "idempotency_residual": residual,
        "output": out_path,
        "projector": d.projector_matrix,
    }
    if ritz is not None:
        original, dilated, deviation = ritz
        payload["ritz_check"] = {"original": original, "dilated": dilated, "max_deviation": deviation}
    return payload


def check_payload(rep, timing=False):
    out = {
        "theorem": rep.theorem.value,
        "trials": rep.trials,
        "failures": rep.failures,
        "worst_margin": rep.worst_margin,
        "seed": rep.seed,
        "failed_trials": list(rep.failed_trials),
        "repro_files": list(rep.repro_files),
    }
    if timing:
        out["elapsed"] = rep.elapsed
    return out


def suite_payload(reports, timing=False):
    return {
        "schema": SCHEMA,
        "command": "verify",
        "passed": all(r.passed for r in reports),
        "reports": [check_payload(r, timing) for r in reports],
    }


def check_line(rep, timing=False):
    line = (
        f"{rep.theorem.value} trials={rep.trials} failures={rep.failures} "
        f"worst_margin={human(rep.worst_margin)} seed={rep.seed} {'pass' if rep.passed else 'FAIL'}"
    )
    if timing:
        line += f" elapsed={rep.elapsed:.2f}s"
    return line
