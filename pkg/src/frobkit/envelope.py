"""Machine-readable output envelope shared by all CLI commands.

JSON is the golden-file format: key order is fixed by construction, every
number is an exact integer, and integers at or above 2^53 are emitted as
decimal strings so consumers parsing into doubles never lose digits. The
text and csv renderers carry the same exact integers.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Any

JSON_INT_LIMIT = 2**53


@dataclass(frozen=True)
class OutputEnvelope:
    command: str
    inputs: dict[str, Any]
    result: dict[str, Any]
    elapsed_ms: int
    version: str


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) < JSON_INT_LIMIT else str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    raise TypeError(f"value of type {type(obj).__name__} is not envelope material")


def to_json(env: OutputEnvelope) -> str:
    payload = {
        "command": env.command,
        "inputs": _jsonable(env.inputs),
        "result": _jsonable(env.result),
        "elapsed_ms": env.elapsed_ms,
        "version": env.version,
    }
    return json.dumps(payload, indent=2, sort_keys=False)


def _text_scalar(v: Any) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_text_scalar(x) for x in v) + "]"
    return str(v)


def _text_block(data: dict[str, Any], indent: int, lines: list[str]) -> None:
    pad = "  " * indent
    for key, value in data.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            _text_block(value, indent + 1, lines)
        elif isinstance(value, (list, tuple)) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                row = "  ".join(f"{k}={_text_scalar(v)}" for k, v in item.items())
                lines.append(f"{pad}  - {row}")
        else:
            lines.append(f"{pad}{key}: {_text_scalar(value)}")


def to_text(env: OutputEnvelope) -> str:
    lines: list[str] = [f"command: {env.command}"]
    _text_block({"inputs": env.inputs}, 0, lines)
    _text_block({"result": env.result}, 0, lines)
    lines.append(f"elapsed_ms: {env.elapsed_ms}")
    lines.append(f"version: {env.version}")
    return "\n".join(lines)


def to_csv(rows: list[dict[str, Any]]) -> str:
    """Flatten a command's primary table, one row per record, stable column order."""
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = list(rows[0].keys())
    writer.writerow(header)
    for row in rows:
        writer.writerow([_text_scalar(row.get(col)) for col in header])
    return buf.getvalue()
