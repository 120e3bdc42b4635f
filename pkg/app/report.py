"""Report writers: JSON documents, flat text, and CSV tables through pandas."""
import json
import math
from fractions import Fraction

import numpy as np
import pandas as pd

from config import OUTPUT_FORMATS
from errors import DomainError


def jsonable(obj):
    """Plain JSON types; complex numbers become {"re", "im"}, non-finite floats null."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, Fraction):
        return float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": jsonable(obj.real), "im": jsonable(obj.imag)}
    if isinstance(obj, (float, np.floating)):
        obj = float(obj)
        return obj if math.isfinite(obj) else None
    return obj


def flatten(doc, prefix=""):
    """{"a": {"b": 1}} -> {"a.b": 1}; lists are indexed a.0, a.1, ..."""
    flat = {}
    items = doc.items() if isinstance(doc, dict) else enumerate(doc)
    for key, value in items:
        name = f"{prefix}{key}"
        if isinstance(value, (dict, list)):
            flat.update(flatten(value, f"{name}."))
        else:
            flat[name] = value
    return flat


def _text_value(value):
    return repr(value) if isinstance(value, float) else str(value)


def write_report(doc, fmt, stream):
    """One document per invocation in the requested format."""
    if fmt not in OUTPUT_FORMATS:
        raise DomainError(f"output format must be one of {OUTPUT_FORMATS}, got {fmt!r}")
    doc = jsonable(doc)
    if fmt == "json":
        json.dump(doc, stream, indent=2, ensure_ascii=False)
        stream.write("\n")
    elif fmt == "text":
        for key, value in flatten(doc).items():
            stream.write(f"{key}: {_text_value(value)}\n")
    else:
        pd.DataFrame([flatten(doc)]).to_csv(stream, index=False)


def write_table(df, fmt, stream, summary=None):
    """A DataFrame of rows (batch certificates, verification checks)."""
    if fmt not in OUTPUT_FORMATS:
        raise DomainError(f"output format must be one of {OUTPUT_FORMATS}, got {fmt!r}")
    if fmt == "csv":
        df.to_csv(stream, index=False)
    elif fmt == "json":
        doc = dict(summary or {})
        doc["rows"] = df.to_dict("records")
        json.dump(jsonable(doc), stream, indent=2, ensure_ascii=False)
        stream.write("\n")
    else:
        with pd.option_context("display.max_rows", None, "display.width", 200):
            stream.write(df.to_string(index=False))
        stream.write("\n")
        for key, value in flatten(jsonable(summary or {})).items():
            stream.write(f"{key}: {_text_value(value)}\n")
