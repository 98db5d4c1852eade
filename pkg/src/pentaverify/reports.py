"""Deterministic CSV/JSON table emission shared by the CLI subcommands.

CSV uses comma delimiters, LF line endings, a header row always, and floats
printed with 17 significant digits, so identical runs are byte-identical.
JSON mirrors the CSV fields one object per row under "rows", plus a "config"
echo block; non-finite floats map to null.
"""

import json
import math
from typing import Any, Sequence, TextIO


def format_cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return format(v, ".17g")
    return str(v)


def write_csv(header: Sequence[str], rows: Sequence[Sequence[Any]], out: TextIO) -> None:
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(format_cell(v) for v in row) + "\n")


def _json_safe(v: Any) -> Any:
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def write_json(config: dict, header: Sequence[str],
               rows: Sequence[Sequence[Any]], out: TextIO) -> None:
    doc = {
        "config": config,
        "rows": [{h: _json_safe(v) for h, v in zip(header, row)} for row in rows],
    }
    json.dump(doc, out, indent=2, sort_keys=True)
    out.write("\n")


def emit(fmt: str, config: dict, header: Sequence[str],
         rows: Sequence[Sequence[Any]], out: TextIO) -> None:
    if fmt == "csv":
        write_csv(header, rows, out)
    elif fmt == "json":
        write_json(config, header, rows, out)
    else:
        raise ValueError(f"unknown format {fmt!r}")
