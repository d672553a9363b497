"""Published JSON schemas for the machine-readable outputs.

The CLI emits records matching these; the test suite validates samples
against them so the shapes stay a stable contract.
"""

SOLVE_RESULT = {
    "type": "object",
    "required": ["graph6", "constraint_set", "mode", "status", "value",
                 "nodes", "millis"],
    "properties": {
        "graph6": {"type": "string"},
        "constraint_set": {"type": "array", "items": {"type": "string"}},
        "mode": {"enum": ["total", "edge_only", "vertex_only", ""]},
        "status": {"enum": ["exact", "lower_bound_only",
                            "infeasible_structurally"]},
        "value": {"type": ["integer", "null"]},
        "nodes": {"type": "integer"},
        "millis": {"type": "integer"},
        "witness": {"$ref": "#/$defs/coloring"},
        "infeasible_pairs": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}},
        },
        "preset": {"type": "string"},
        "manifest_digest": {"type": "string"},
    },
    "$defs": {
        "coloring": {
            "type": "object",
            "required": ["k", "vertex_colors", "edge_colors"],
            "properties": {
                "k": {"type": "integer", "minimum": 0},
                "vertex_colors": {"type": "array",
                                  "items": {"type": "integer", "minimum": 1}},
                "edge_colors": {"type": "array",
                                "items": {"type": "integer", "minimum": 1}},
            },
        },
    },
}

COLORING = SOLVE_RESULT["$defs"]["coloring"]

VERDICT = {
    "type": "object",
    "required": ["ok", "violations"],
    "properties": {
        "ok": {"type": "boolean"},
        "violations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind", "where"],
                "properties": {
                    "kind": {"type": "string"},
                    "where": {"type": "array"},
                    "detail": {"type": "string"},
                },
            },
        },
    },
}

CONSTRUCTION_REPORT = {
    "type": "object",
    "required": ["method", "claimed_bound", "verified_against", "verdict",
                 "coloring"],
    "properties": {
        "method": {"type": "string"},
        "input_summary": {"type": "string"},
        "claimed_bound": {"type": "integer"},
        "verified_against": {"type": "array", "items": {"type": "string"}},
        "mode": {"type": "string"},
        "verdict": VERDICT,
        "case_id": {"type": "string"},
        "fallback": {"type": "boolean"},
        "notes": {"type": "array", "items": {"type": "string"}},
        "coloring": COLORING,
        "manifest_digest": {"type": "string"},
    },
}

BOUND_CHECK = {
    "type": "object",
    "required": ["bound_id", "statement", "hypothesis_met", "lhs", "rhs",
                 "holds"],
    "properties": {
        "bound_id": {"type": "string"},
        "statement": {"type": "string"},
        "hypothesis_met": {"type": "boolean"},
        "lhs": {"type": ["integer", "null"]},
        "rhs": {"type": ["integer", "null"]},
        "holds": {"type": ["boolean", "null"]},
        "note": {"type": "string"},
        "provenance": {"type": "string"},
    },
}

CONJECTURE_REPORT = {
    "type": "object",
    "required": ["conjecture_id", "graphs_checked", "counterexamples",
                 "status"],
    "properties": {
        "conjecture_id": {"type": "string"},
        "graphs_checked": {"type": "integer"},
        "counterexamples": {"type": "array"},
        "inconclusive": {"type": "integer"},
        "status": {"enum": ["no-counterexample-found", "counterexample",
                            "inconclusive"]},
    },
}
