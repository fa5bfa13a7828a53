"""JSON interchange: serializers and the schema shared by CLI, service, UI.

Every consumer sees the same document shape: a "bundle" carrying the matrix
and everything derived from it at full float precision.  Infinite margins
(no qualifying entries or pairs) serialize as null.  The schema constants
are standard JSON Schema (draft 2020-12) and are what the test suite
validates outputs against.
"""

from __future__ import annotations

import math

from .revision import AnalysisBundle, RevisionSession, RevisionStep, suggest_from_bundle


def _finite_or_none(x: float) -> float | None:
    return None if math.isinf(x) else float(x)


def bundle_to_dict(bundle: AnalysisBundle) -> dict:
    """Full-precision JSON-ready form of an analysis bundle."""
    matrix = bundle.matrix
    cop = bundle.cop
    triads = bundle.triads
    suggestion = suggest_from_bundle(bundle)
    return {
        "n": matrix.n,
        "labels": list(matrix.labels),
        "matrix": [list(row) for row in matrix.values.tolist()],
        "ranking": {
            "method": bundle.ranking.method,
            "weights": list(bundle.ranking.weights.tolist()),
        },
        "eigen": {
            "lambda_max": bundle.eigen.lambda_max,
            "iterations": bundle.eigen.iterations,
            "residual": bundle.eigen.residual,
        },
        "saaty_index": bundle.saaty,
        "discrepancy": {
            "values": [list(row) for row in bundle.discrepancy.values.tolist()],
            "global": bundle.discrepancy.global_value,
            "argmax": list(bundle.discrepancy.argmax),
        },
        "cop": {
            "delta": cop.delta,
            "pop_violations": [list(v) for v in cop.pop_violations],
            "poip_violations": [list(v) for v in cop.poip_violations],
            "pop_safe": cop.pop_safe,
            "poip_safe": cop.poip_safe,
            "pop_threshold": cop.pop_threshold,
            "poip_threshold": cop.poip_threshold,
            "pop_margin": _finite_or_none(cop.pop_margin),
            "poip_margin": _finite_or_none(cop.poip_margin),
        },
        "triads": {
            "is_consistent": triads.is_consistent,
            "worst_triad": list(triads.worst_triad) if triads.worst_triad else None,
            "worst_product": triads.worst_product,
        },
        "suggestion": {
            "position": list(suggestion.position),
            "current_value": suggestion.current_value,
            "local_discrepancy": suggestion.local_discrepancy,
            "consistent_target": suggestion.consistent_target,
        },
    }


def step_to_dict(step: RevisionStep) -> dict:
    return {
        "i": step.i,
        "j": step.j,
        "old_value": step.old_value,
        "new_value": step.new_value,
        "timestamp": step.timestamp,
    }


def session_to_dict(session: RevisionSession) -> dict:
    """Bundle plus the step log, as returned by the HTTP service."""
    return {
        "bundle": bundle_to_dict(session.bundle),
        "step_log": [step_to_dict(s) for s in session.steps],
    }


_INDEX = {"type": "integer", "minimum": 1}
_PAIR = {"type": "array", "items": _INDEX, "minItems": 2, "maxItems": 2}
_TRIPLE = {"type": "array", "items": _INDEX, "minItems": 3, "maxItems": 3}
_QUAD = {"type": "array", "items": _INDEX, "minItems": 4, "maxItems": 4}
_NUMBER_GRID = {
    "type": "array",
    "items": {"type": "array", "items": {"type": "number"}},
}

STEP_SCHEMA = {
    "type": "object",
    "required": ["i", "j", "old_value", "new_value", "timestamp"],
    "additionalProperties": False,
    "properties": {
        "i": _INDEX,
        "j": _INDEX,
        "old_value": {"type": "number", "exclusiveMinimum": 0},
        "new_value": {"type": "number", "exclusiveMinimum": 0},
        "timestamp": {"type": "number"},
    },
}

BUNDLE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["n", "labels", "matrix", "ranking", "eigen", "saaty_index",
                 "discrepancy", "cop", "triads", "suggestion"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 2, "maximum": 64},
        "labels": {"type": "array", "items": {"type": "string"}},
        "matrix": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "number", "exclusiveMinimum": 0}},
        },
        "ranking": {
            "type": "object",
            "required": ["method", "weights"],
            "additionalProperties": False,
            "properties": {
                "method": {"enum": ["eigenvector", "geometric_mean"]},
                "weights": {"type": "array", "items": {"type": "number", "exclusiveMinimum": 0}},
            },
        },
        "eigen": {
            "type": "object",
            "required": ["lambda_max", "iterations", "residual"],
            "additionalProperties": False,
            "properties": {
                "lambda_max": {"type": "number", "exclusiveMinimum": 0},
                "iterations": {"type": "integer", "minimum": 1},
                "residual": {"type": "number", "minimum": 0},
            },
        },
        "saaty_index": {"type": "number"},
        "discrepancy": {
            "type": "object",
            "required": ["values", "global", "argmax"],
            "additionalProperties": False,
            "properties": {
                "values": _NUMBER_GRID,
                "global": {"type": "number", "minimum": 0},
                "argmax": _PAIR,
            },
        },
        "cop": {
            "type": "object",
            "required": ["delta", "pop_violations", "poip_violations", "pop_safe",
                         "poip_safe", "pop_threshold", "poip_threshold",
                         "pop_margin", "poip_margin"],
            "additionalProperties": False,
            "properties": {
                "delta": {"type": "number", "minimum": 0},
                "pop_violations": {"type": "array", "items": _PAIR},
                "poip_violations": {"type": "array", "items": _QUAD},
                "pop_safe": {"type": "boolean"},
                "poip_safe": {"type": "boolean"},
                "pop_threshold": {"type": "number", "minimum": 1},
                "poip_threshold": {"type": "number", "minimum": 1},
                "pop_margin": {"type": ["number", "null"]},
                "poip_margin": {"type": ["number", "null"]},
            },
        },
        "triads": {
            "type": "object",
            "required": ["is_consistent", "worst_triad", "worst_product"],
            "additionalProperties": False,
            "properties": {
                "is_consistent": {"type": "boolean"},
                "worst_triad": {"oneOf": [_TRIPLE, {"type": "null"}]},
                "worst_product": {"type": "number", "exclusiveMinimum": 0},
            },
        },
        "suggestion": {
            "type": "object",
            "required": ["position", "current_value", "local_discrepancy", "consistent_target"],
            "additionalProperties": False,
            "properties": {
                "position": _PAIR,
                "current_value": {"type": "number", "exclusiveMinimum": 0},
                "local_discrepancy": {"type": "number", "minimum": 0},
                "consistent_target": {"type": "number", "exclusiveMinimum": 0},
            },
        },
        "applied_steps": {"type": "array", "items": STEP_SCHEMA},
    },
}

SESSION_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["id", "created", "updated", "step_log", "bundle"],
    "additionalProperties": False,
    "properties": {
        "id": {"type": "string", "minLength": 1},
        "created": {"type": "number"},
        "updated": {"type": "number"},
        "step_log": {"type": "array", "items": STEP_SCHEMA},
        "bundle": BUNDLE_SCHEMA,
    },
}
