"""Experiment reports: JSON (canonical), CSV and text projections, re-verification."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Any, Optional

SCHEMA_VERSION = 1


@dataclass
class Report:
    command: str
    config: dict
    verdict: str
    result: dict = field(default_factory=dict)
    witness: Any = None
    coverage: Optional[dict] = None
    wall_time: float = 0.0
    schema: int = SCHEMA_VERSION

    def to_dict(self, wall_time: bool = True) -> dict:
        d = asdict(self)
        if not wall_time:
            d.pop("wall_time")
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        if d.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        return cls(**d)

    def to_json(self, wall_time: bool = True) -> str:
        return json.dumps(self.to_dict(wall_time), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        for key, value in _flatten(self.to_dict()):
            writer.writerow([key, value])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.verdict}"]
        lines += [f"  {k} = {v}" for k, v in _flatten(self.to_dict()) if k not in ("command", "verdict")]
        return "\n".join(lines) + "\n"

    def render(self, fmt: str = "json") -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")


def _flatten(obj, prefix: str = ""):
    if isinstance(obj, dict):
        for k in sorted(obj):
            yield from _flatten(obj[k], f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and any(isinstance(x, (dict, list)) for x in obj):
        for i, x in enumerate(obj):
            yield from _flatten(x, f"{prefix}[{i}]")
    elif isinstance(obj, list):
        yield prefix, ";".join(map(str, obj))
    else:
        yield prefix, "" if obj is None else obj
