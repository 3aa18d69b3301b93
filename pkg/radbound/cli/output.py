import csv
import io
import json
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from pydantic import BaseModel

from radbound.core.constants import OutputFormat


class TableWriter:
    """Serialize result rows as CSV or JSON text"""

    @classmethod
    def render(cls, rows: Sequence[BaseModel], fmt: OutputFormat) -> str:
        if fmt is OutputFormat.JSON:
            return cls._json(rows)
        return cls._csv(rows)

    @classmethod
    def write(
        cls, rows: Sequence[BaseModel], fmt: OutputFormat, out: Path | None
    ) -> str:
        """Render and write to `out`; returns the text for stdout when out is None"""
        text = cls.render(rows, fmt)
        if out is not None:
            Path(out).write_text(text, encoding="utf-8", newline="")
        return text

    @classmethod
    def _fields(cls, rows: Sequence[BaseModel]) -> list[str]:
        if not rows:
            return []
        return list(type(rows[0]).model_fields)

    @classmethod
    def _cell(cls, value: Any) -> str:
        if value is None:
            return ""
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, float):
            return repr(value)
        return str(value)

    @classmethod
    def _csv(cls, rows: Sequence[BaseModel]) -> str:
        buffer = io.StringIO()
        fields = cls._fields(rows)
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(fields)
        for row in rows:
            writer.writerow([cls._cell(getattr(row, name)) for name in fields])
        return buffer.getvalue()

    @classmethod
    def _json(cls, rows: Sequence[BaseModel]) -> str:
        data = [row.model_dump(mode="json") for row in rows]
        return json.dumps(data, indent=2) + "\n"
