"""JSON schemas for model configuration files and certify-zeta certificates."""
import jsonschema

from errors import DomainError

MODEL_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "model configuration",
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "sigma0": {"type": "number"},
        "sigma1": {"type": "number", "exclusiveMaximum": 0.5},
        "r0": {"type": "number", "exclusiveMaximum": 1},
        "m_L": {"type": "integer", "minimum": 0},
    },
    "required": ["name"],
    "additionalProperties": False,
}

_certified = {
    "type": "object",
    "properties": {
        "re": {"type": ["number", "null"]},
        "im": {"type": ["number", "null"]},
        "err": {"type": ["number", "null"], "minimum": 0},
    },
    "required": ["re", "im", "err"],
    "additionalProperties": False,
}

CERTIFICATE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "zero-free disc certificate",
    "type": "object",
    "properties": {
        "center_re": {"type": "number"},
        "center_im": {"type": "number"},
        "radius": {"type": "number", "minimum": 0},
        "R": {"type": "number", "minimum": 0, "exclusiveMaximum": 1},
        "certified_by": {"enum": ["prop61", "thm62", "thm21sharp", "zeta_F"]},
        "inputs": {
            "type": "object",
            "properties": {
                "r": {"type": "number", "exclusiveMaximum": 1},
                "sigma1": {"type": "number", "exclusiveMaximum": 0.5},
                "F": {"type": "number", "minimum": 0},
                "distance_upper": {"type": "number", "minimum": 0},
                "psi1_norm": {"type": "number", "exclusiveMinimum": 0},
                "zeta": _certified,
                "gamma_ratio": _certified,
                "C_r_sigma1": _certified,
                "h": _certified,
                "h_norm": _certified,
                "mode": {"type": "string"},
                "model": {"type": "string"},
                "sequence": {"type": "object"},
            },
            "required": ["r"],
        },
        "errors": {"type": "object", "additionalProperties": {"type": ["number", "null"]}},
        "model": {
            "type": "object",
            "properties": {
                "name": {"type": "string"},
                "sigma0": {"type": "number"},
                "sigma1": {"type": "number"},
                "r0": {"type": "number"},
                "r0_strict": {"type": "boolean"},
                "m_L": {"type": "integer", "minimum": 0},
            },
            "required": ["name", "sigma0", "sigma1", "r0", "m_L"],
        },
        "grid_check": {"type": "object"},
    },
    "required": ["center_re", "center_im", "radius", "R", "certified_by", "inputs", "errors"],
}


def _validate(instance, schema, what):
    try:
        jsonschema.validate(instance=instance, schema=schema)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise DomainError(f"{what}: {where}: {exc.message}") from exc


def validate_model_config(data, source="model configuration"):
    _validate(data, MODEL_SCHEMA, source)


def validate_certificate(doc):
    """Check a JSON-ready certificate document (complex values already split into re/im)."""
    _validate(doc, CERTIFICATE_SCHEMA, "certificate")
