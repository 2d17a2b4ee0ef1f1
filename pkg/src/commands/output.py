"""CSV and JSON rendering of result rows.

Both formats are deterministic: fixed column order (the model's field
order), big integers as decimal strings, floats in their shortest
round-tripping form and no timestamps. Parsing an emitted file and
rendering it again reproduces it byte for byte.
"""

import csv
import io
import json
from collections.abc import Sequence
from pathlib import Path
from typing import Optional, TypeVar

from pydantic import BaseModel

from .enums import OutputFormat


RowT = TypeVar("RowT", bound=BaseModel)


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, list):
        return " ".join(map(str, value))
    return str(value)


def render_rows(rows: Sequence[BaseModel], model: type[BaseModel], fmt: OutputFormat) -> str:
    records = [row.model_dump(mode="json") for row in rows]
    if fmt == OutputFormat.JSON:
        return json.dumps(records, indent=2) + "\n"

    fields = list(model.model_fields)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(fields)
    for record in records:
        writer.writerow([_cell(record[name]) for name in fields])
    return buffer.getvalue()


def parse_rows(text: str, model: type[RowT], fmt: OutputFormat) -> list[RowT]:
    if fmt == OutputFormat.JSON:
        return [model.model_validate(record) for record in json.loads(text)]
    return [model.model_validate(record) for record in csv.DictReader(io.StringIO(text))]


def emit(text: str, out: Optional[Path]) -> None:
    """Writes to `out`, or to stdout when no path is given."""
    if out is None:
        print(text, end="")
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)
