#!/usr/bin/env python3
"""Regenerates schemas/<subcommand>.json.

Each file validates the subcommand's output at the root; the accepted input
is under $defs/input.
"""
import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent / "schemas"

INT_STR = {"type": "string", "pattern": "^-?[0-9]+$"}
COUNT_STR = {"type": "string", "pattern": "^[0-9]+$"}
INT_IN = {"oneOf": [{"type": "integer"}, INT_STR]}
COUNT_IN = {"oneOf": [{"type": "integer", "minimum": 0}, COUNT_STR]}
CARD_OUT = {"oneOf": [COUNT_STR, {"const": "continuum"}]}
CARD_IN = {"oneOf": [COUNT_IN, {"const": "continuum"}]}
PRIME_KEYS = "^[0-9]+$"

COMMON = {
    "int": INT_IN,
    "count": COUNT_IN,
    "matrix_in": {
        "oneOf": [
            {
                "type": "object",
                "required": ["rows", "cols", "entries"],
                "properties": {
                    "rows": COUNT_IN,
                    "cols": COUNT_IN,
                    "entries": {"type": "array", "items": {"type": "array", "items": INT_IN}},
                },
            },
            {"type": "array", "items": {"type": "array", "items": INT_IN}},
        ]
    },
    "matrix": {
        "type": "object",
        "required": ["rows", "cols", "entries"],
        "additionalProperties": False,
        "properties": {
            "rows": COUNT_STR,
            "cols": COUNT_STR,
            "entries": {"type": "array", "items": {"type": "array", "items": INT_STR}},
        },
    },
    "structure_in": {
        "type": "object",
        "properties": {
            "free_rank": COUNT_IN,
            "invariant_factors": {"type": "array", "items": INT_IN},
        },
    },
    "structure": {
        "type": "object",
        "required": ["free_rank", "invariant_factors"],
        "additionalProperties": False,
        "properties": {
            "free_rank": COUNT_STR,
            "invariant_factors": {"type": "array", "items": COUNT_STR},
        },
    },
    "descriptor_in": {
        "type": "object",
        "additionalProperties": False,
        "properties": {
            "free_rank": COUNT_IN,
            "cyclic": {"type": "array", "items": INT_IN},
            "local": {"type": "object", "patternProperties": {PRIME_KEYS: COUNT_IN},
                      "additionalProperties": False},
            "inverted": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["primes"],
                    "properties": {"primes": {"type": "array", "items": COUNT_IN},
                                   "multiplicity": COUNT_IN},
                },
            },
            "rational": CARD_IN,
            "pruefer": {
                "type": "object",
                "properties": {
                    "default": CARD_IN,
                    "exceptions": {"type": "object", "patternProperties": {PRIME_KEYS: CARD_IN},
                                   "additionalProperties": False},
                },
            },
            "padic": {"type": "object", "patternProperties": {PRIME_KEYS: COUNT_IN},
                      "additionalProperties": False},
            "finite_p_placeholders": {"type": "array", "items": COUNT_IN},
            "text": {"type": "string"},
        },
    },
    "descriptor": {
        "type": "object",
        "required": ["free_rank", "cyclic", "local", "inverted", "rational", "pruefer",
                     "padic", "finite_p_placeholders", "text"],
        "additionalProperties": False,
        "properties": {
            "free_rank": COUNT_STR,
            "cyclic": {"type": "array", "items": COUNT_STR},
            "local": {"type": "object", "patternProperties": {PRIME_KEYS: COUNT_STR},
                      "additionalProperties": False},
            "inverted": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["primes", "multiplicity"],
                    "additionalProperties": False,
                    "properties": {"primes": {"type": "array", "items": COUNT_STR},
                                   "multiplicity": COUNT_STR},
                },
            },
            "rational": CARD_OUT,
            "pruefer": {
                "type": "object",
                "required": ["default", "exceptions"],
                "additionalProperties": False,
                "properties": {
                    "default": CARD_OUT,
                    "exceptions": {"type": "object", "patternProperties": {PRIME_KEYS: CARD_OUT},
                                   "additionalProperties": False},
                },
            },
            "padic": {"type": "object", "patternProperties": {PRIME_KEYS: COUNT_STR},
                      "additionalProperties": False},
            "finite_p_placeholders": {"type": "array", "items": COUNT_STR},
            "text": {"type": "string"},
        },
    },
    "system_in": {
        "type": "object",
        "required": ["rank", "tail"],
        "properties": {
            "rank": COUNT_IN,
            "prefix": {"type": "array", "items": {"$ref": "#/$defs/matrix_in"}},
            "tail": {
                "type": "object",
                "required": ["diagonals"],
                "properties": {
                    "period": COUNT_IN,
                    "diagonals": {"type": "array", "minItems": 1,
                                  "items": {"type": "array", "items": INT_IN}},
                },
            },
        },
    },
    "exponent_in": {"oneOf": [COUNT_IN, {"const": "inf"}]},
    "exponent": {"oneOf": [COUNT_STR, {"const": "inf"}]},
    "error": {
        "type": "object",
        "required": ["error"],
        "additionalProperties": False,
        "properties": {
            "error": {
                "type": "object",
                "required": ["code", "message", "citation"],
                "additionalProperties": False,
                "properties": {"code": {"type": "string"}, "message": {"type": "string"},
                               "citation": {"type": "string"}},
            }
        },
    },
}


def ref(name):
    return {"$ref": f"#/$defs/{name}"}


def obj(required, props, extra=False):
    out = {"type": "object", "required": required, "properties": props}
    if not extra:
        out["additionalProperties"] = False
    return out


def ops(branches):
    """Output object discriminated by an "op" field."""
    return {"oneOf": [obj(["op", *req], {"op": {"const": name}, **props})
                      for name, (req, props) in branches.items()]}


DESC = ref("descriptor")
STRUCT = ref("structure")

REPORT = obj(
    ["r", "s", "t", "st_candidates", "kernel", "pic", "lim_kernel_rank_bound", "coranks",
     "citations", "assumptions", "notes", "conditional"],
    {
        "r": COUNT_STR,
        "s": {"oneOf": [COUNT_STR, {"type": "null"}]},
        "t": {"oneOf": [COUNT_STR, {"type": "null"}]},
        "st_candidates": {"type": "array",
                          "items": obj(["s", "t"], {"s": COUNT_STR, "t": COUNT_STR})},
        "kernel": {"oneOf": [DESC, {"type": "null"}]},
        "pic": obj(["rank", "zp_rank"], {"rank": COUNT_STR,
                                          "zp_rank": {"oneOf": [COUNT_STR, {"type": "null"}]}}),
        "lim_kernel_rank_bound": {"oneOf": [COUNT_STR, {"type": "null"}]},
        "coranks": {"type": "array", "items": obj(
            ["prime", "quantity", "value"],
            {"prime": {"enum": ["l != p", "p"]}, "quantity": {"type": "string"},
             "value": COUNT_STR})},
        "citations": {"type": "array", "items": {"type": "string"}},
        "assumptions": {"type": "array", "items": {"type": "string"}},
        "notes": {"type": "array", "items": {"type": "string"}},
        "conditional": {"type": "boolean"},
    },
)

INVARIANTS_IN = {
    "type": "object",
    "required": ["rho_X", "rho_Xs"],
    "properties": {
        "op": {"const": "report"},
        "f": COUNT_IN, "p": COUNT_IN,
        "h01": {"oneOf": [COUNT_IN, {"type": "null"}]},
        "h02": {"oneOf": [COUNT_IN, {"type": "null"}]},
        "rho_X": COUNT_IN, "rho_Xs": COUNT_IN, "I": COUNT_IN,
        "s": {"oneOf": [COUNT_IN, {"type": "null"}]},
        "dimVlBrXsbar": {"oneOf": [COUNT_IN, {"type": "null"}]},
        "dimVpBrXsbar": {"oneOf": [COUNT_IN, {"type": "null"}]},
        "dimVlBrXs": {"oneOf": [COUNT_IN, {"type": "null"}]},
        "finiteness_proven": {"type": "boolean"},
    },
}

SYSTEM_REQUEST = {
    "oneOf": [
        {"allOf": [ref("system_in"), {"properties": {
            "strategy": {"enum": ["recursive", "ext_oracle"]}, "drop_prefix": COUNT_IN}}]},
        obj(["system"], {"system": ref("system_in"),
                         "strategy": {"enum": ["recursive", "ext_oracle"]},
                         "drop_prefix": COUNT_IN}),
    ]
}

SCHEMAS = {
    "snf": (
        {"oneOf": [obj(["matrix"], {"matrix": ref("matrix_in")}), ref("matrix_in")]},
        obj(["U", "D", "V", "rank", "diagonal", "cokernel"],
            {"U": ref("matrix"), "D": ref("matrix"), "V": ref("matrix"), "rank": COUNT_STR,
             "diagonal": {"type": "array", "items": COUNT_STR}, "cokernel": STRUCT}),
    ),
    "group": (
        {"oneOf": [
            obj(["matrix"], {"op": {"const": "cokernel"}, "matrix": ref("matrix_in")}),
            obj(["op", "generators", "relations"],
                {"op": {"const": "presentation"}, "generators": COUNT_IN,
                 "relations": ref("matrix_in")}),
            obj(["op", "group", "m"], {"op": {"const": "finite_coefficients"},
                                       "group": ref("structure_in"), "m": INT_IN}),
            obj(["op", "a", "b"], {"op": {"const": "direct_sum"}, "a": ref("structure_in"),
                                   "b": ref("structure_in")}),
            obj(["op", "f", "g"], {"op": {"const": "check_exact"}, "f": ref("matrix_in"),
                                   "g": ref("matrix_in")}),
        ]},
        ops({
            "cokernel": (["structure"], {"structure": STRUCT}),
            "presentation": (["structure"], {"structure": STRUCT}),
            "finite_coefficients": (["quotient", "torsion"], {"quotient": STRUCT, "torsion": STRUCT}),
            "direct_sum": (["structure"], {"structure": STRUCT}),
            "check_exact": (["exact"], {"exact": {"type": "boolean"}}),
        }),
    ),
    "descriptor": (
        obj(["group"], {
            "op": {"enum": ["normalize", "tate_module", "max_p_divisible", "finite_coefficients",
                            "lim1_mult_p", "six_term", "compllemma_cokernel",
                            "extension_classes", "direct_sum"]},
            "group": ref("descriptor_in"), "p": COUNT_IN, "j": COUNT_IN,
            "next": ref("descriptor_in"), "other": ref("descriptor_in"),
            "finite": ref("structure_in"),
        }),
        ops({
            "normalize": (["result"], {"result": DESC}),
            "tate_module": (["result"], {"result": DESC}),
            "max_p_divisible": (["result"], {"result": DESC}),
            "finite_coefficients": (["quotient", "torsion"], {"quotient": STRUCT, "torsion": STRUCT}),
            "lim1_mult_p": (["result"], {"result": DESC}),
            "six_term": (["terms", "checks", "consistent"], {
                "terms": {"type": "array", "items": DESC, "minItems": 6, "maxItems": 6},
                "checks": {"type": "array", "items": obj(["name", "passed"], {
                    "name": {"type": "string"}, "passed": {"type": "boolean"}})},
                "consistent": {"type": "boolean"}}),
            "compllemma_cokernel": (["result"], {"result": DESC}),
            "extension_classes": (["classes"], {"classes": {"type": "array", "items": DESC}}),
            "direct_sum": (["result"], {"result": DESC}),
        }),
    ),
    "lim1": (
        SYSTEM_REQUEST,
        obj(["lim", "lim1", "mittag_leffler", "single_prime"],
            {"lim": STRUCT, "lim1": DESC, "mittag_leffler": {"type": "boolean"},
             "single_prime": {"oneOf": [COUNT_STR, {"type": "null"}]}}),
    ),
    "ml": (
        SYSTEM_REQUEST,
        obj(["mittag_leffler", "cokernels"],
            {"mittag_leffler": {"type": "boolean"},
             "cokernels": {"type": "array", "items": STRUCT}}),
    ),
    "ext-rank1": (
        {"oneOf": [
            obj(["profile"], {"op": {"enum": ["ext", "quotient"]}, "profile": obj([], {
                "default": ref("exponent_in"),
                "exceptions": {"type": "object",
                               "patternProperties": {PRIME_KEYS: ref("exponent_in")},
                               "additionalProperties": False}})}),
            obj(["multipliers"], {"op": {"enum": ["ext", "quotient"]}, "multipliers": obj(
                ["period"], {"prefix": {"type": "array", "items": INT_IN},
                             "period": {"type": "array", "items": INT_IN}})}),
        ]},
        ops({
            "ext": (["profile", "is_free", "ext", "hom"], {
                "profile": ref("eprofile"), "is_free": {"type": "boolean"}, "ext": DESC,
                "hom": STRUCT}),
            "quotient": (["profile", "quotient"], {"profile": ref("eprofile"), "quotient": DESC}),
        }),
    ),
    "classify-submodule": (
        {"oneOf": [
            obj(["r", "p", "generators"], {
                "op": {"const": "classify"}, "r": COUNT_IN, "p": COUNT_IN,
                "generators": {"type": "array", "items": obj(["vector", "tag"], {
                    "vector": {"type": "array", "items": {"oneOf": [
                        {"type": "integer"},
                        {"type": "string", "pattern": "^-?[0-9]+(/-?[0-9]+)?$"}]}},
                    "tag": {"enum": ["local", "divisible"]}})}}),
            obj(["op", "r", "s"], {"op": {"const": "h2k"}, "r": COUNT_IN, "s": COUNT_IN}),
            obj(["op", "s", "t", "p"], {"op": {"const": "kernel"}, "s": COUNT_IN,
                                        "t": COUNT_IN, "p": COUNT_IN}),
        ]},
        ops({
            "classify": (["result"], {"result": obj(["s", "t", "finite_part", "finite_unknown"], {
                "s": COUNT_STR, "t": COUNT_STR, "finite_part": STRUCT,
                "finite_unknown": {"type": "boolean"}})}),
            "h2k": (["result"], {"result": obj(
                ["r", "s", "t", "torsion_finite_p_group", "torsion_order_known",
                 "extension_only", "torsion_free_shape"],
                {"r": COUNT_STR, "s": COUNT_STR, "t": COUNT_STR,
                 "torsion_finite_p_group": {"type": "boolean"},
                 "torsion_order_known": {"type": "boolean"},
                 "extension_only": {"type": "boolean"},
                 "torsion_free_shape": {"type": "string"}})}),
            "kernel": (["result"], {"result": DESC}),
        }),
    ),
    "valuation": (
        {"oneOf": [
            obj(["op", "p", "n"], {"op": {"const": "factorial"}, "p": COUNT_IN, "n": INT_IN}),
            obj(["op", "p", "z", "u"], {"op": {"const": "binomial"}, "p": COUNT_IN,
                                        "z": INT_IN, "u": INT_IN}),
            obj(["op", "p", "n", "s"], {"op": {"const": "lemma"}, "p": COUNT_IN,
                                        "n": COUNT_IN, "s": COUNT_IN}),
            obj(["op", "p", "n", "N", "s"], {"op": {"const": "unit_power"}, "p": COUNT_IN,
                                             "n": COUNT_IN, "N": COUNT_IN, "s": COUNT_IN}),
        ]},
        ops({
            "factorial": (["result"], {"result": COUNT_STR}),
            "binomial": (["result"], {"result": COUNT_STR}),
            "lemma": (["result"], {"result": {"type": "boolean"}}),
            "unit_power": (["result"], {"result": {"type": "boolean"}}),
        }),
    ),
    "brauer": (
        {"oneOf": [
            INVARIANTS_IN,
            obj(["op", "p"], {"op": {"const": "jacobian"}, "p": COUNT_IN}),
            obj(["op", "rho_Xs", "rho_X", "I"], {"op": {"const": "compute_r"}, "rho_Xs": COUNT_IN,
                                                 "rho_X": COUNT_IN, "I": COUNT_IN}),
            obj(["op", "l_equals_p", "f", "h01", "dim"], {
                "op": {"const": "corank"}, "l_equals_p": {"type": "boolean"}, "f": COUNT_IN,
                "h01": COUNT_IN, "dim": COUNT_IN}),
            obj(["op", "r", "dimVlBrXs"], {"op": {"const": "corank_relation"}, "r": COUNT_IN,
                                           "dimVlBrXs": COUNT_IN}),
            obj(["op", "r", "p"], {"op": {"const": "k3_abelian"}, "r": COUNT_IN, "p": COUNT_IN}),
            obj(["op", "shape"], {"op": {"const": "picard"},
                                  "shape": {"enum": ["simple", "product"]},
                                  "count1": INT_IN, "count2": INT_IN, "p": COUNT_IN}),
        ]},
        ops({
            "report": (["report"], {"report": ref("report")}),
            "jacobian": (["report"], {"report": ref("report")}),
            "compute_r": (["result"], {"result": COUNT_STR}),
            "corank": (["result"], {"result": COUNT_STR}),
            "corank_relation": (["result"], {"result": COUNT_STR}),
            "k3_abelian": (["result"], {"result": DESC}),
            "picard": (["result"], {"result": COUNT_STR}),
        }),
    ),
    "report": (
        {"oneOf": [INVARIANTS_IN, obj(["jacobian_p"], {"jacobian_p": COUNT_IN})]},
        obj(["summary", "report"], {"summary": {"type": "string"}, "report": ref("report")}),
    ),
}


def main():
    ROOT.mkdir(exist_ok=True)
    for name, (request, result) in SCHEMAS.items():
        defs = dict(COMMON)
        defs["eprofile"] = obj(["default", "exceptions"], {
            "default": ref("exponent"),
            "exceptions": {"type": "object", "patternProperties": {PRIME_KEYS: ref("exponent")},
                           "additionalProperties": False}})
        defs["report"] = REPORT
        defs["input"] = request
        defs["result"] = result
        doc = {
            "$schema": "https://json-schema.org/draft/2020-12/schema",
            "title": f"brauerkit {name}",
            "description": "Root validates the output (result or error); $defs/input the payload.",
            "oneOf": [ref("result"), ref("error")],
            "$defs": defs,
        }
        (ROOT / f"{name}.json").write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
