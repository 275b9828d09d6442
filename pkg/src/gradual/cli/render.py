import json
from typing import Any, Dict, List


def to_json(report: Dict[str, Any]) -> str:
    """Deterministic JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True, ensure_ascii=False)
    return str(value)


def _grid(rows: List[Dict[str, Any]], indent: str) -> List[str]:
    columns: List[str] = []
    for row in rows:
        columns += [k for k in row if k not in columns]
    cells = [[_cell(row.get(c)) for c in columns] for row in rows]
    widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(columns)]
    lines = [indent + "  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines.append(indent + "  ".join("-" * w for w in widths))
    lines += [indent + "  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in cells]
    return lines


def _section(data: Dict[str, Any], indent: str = "") -> List[str]:
    lines: List[str] = []
    for key in sorted(data):
        value = data[key]
        if isinstance(value, dict) and value:
            lines.append(f"{indent}{key}:")
            lines += _section(value, indent + "  ")
        elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            lines.append(f"{indent}{key}:")
            lines += _grid(value, indent + "  ")
        else:
            lines.append(f"{indent}{key}: {_cell(value)}")
    return lines


def to_table(report: Dict[str, Any]) -> str:
    """Plain-text rendering of a report: scalars as key: value, lists of records as aligned columns."""
    return "\n".join(_section(report)) + "\n"


def render(report: Dict[str, Any], fmt: str) -> str:
    return to_json(report) if fmt == "json" else to_table(report)
