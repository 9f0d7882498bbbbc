"""Small shared helpers for reading JSON from byte streams, strings, or file objects."""

from __future__ import annotations

import json

from .errors import NotJsonError


def load_json_value(stream, object_pairs_hook=None):
    """Decode UTF-8 JSON from a byte stream, str, bytes, or file-like object."""
    if hasattr(stream, "read"):
        data = stream.read()
    else:
        data = stream
    if isinstance(data, (bytes, bytearray)):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise NotJsonError(f"input is not valid UTF-8: {exc}") from exc
    try:
        return json.loads(data, object_pairs_hook=object_pairs_hook)
    except json.JSONDecodeError as exc:
        raise NotJsonError(f"input is not valid JSON: {exc}") from exc


def load_json_object(stream, object_pairs_hook=None) -> dict:
    value = load_json_value(stream, object_pairs_hook=object_pairs_hook)
    if not isinstance(value, dict):
        raise NotJsonError(f"expected a JSON object at top level, got {type(value).__name__}")
    return value
