"""
Record rendering for CLI output and exported metadata.

Two layouts:
- structured: one "key = value" line per field, blocks separated by a blank line
- text: a title line followed by aligned "key: value" lines
"""

from typing import Dict, Iterable, Literal, Mapping, Optional

OutputFormat = Literal["text", "structured"]

SEPARATOR = " = "


def _render_value(value: object) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return ", ".join(_render_value(v) for v in value)
    return str(value)


def format_block(fields: Mapping[str, object]) -> str:
    """
    Structured key/value block, in mapping order.

    Examples:
        >>> format_block({"h": 2, "kind": "benzenoid"})
        'h = 2\\nkind = benzenoid\\n'
    """
    return "".join(f"{key}{SEPARATOR}{_render_value(value)}\n" for key, value in fields.items())


def parse_block(text: str) -> Dict[str, str]:
    """Inverse of format_block for string values; blank and '#' lines are skipped."""
    fields = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if SEPARATOR not in line:
            raise ValueError(f"line {line_number}: expected 'key = value', got {line!r}")
        key, value = line.split(SEPARATOR, 1)
        fields[key.strip()] = value.strip()
    return fields


def format_text(title: Optional[str], fields: Mapping[str, object]) -> str:
    width = max((len(k) for k in fields), default=0)
    lines = [title] if title else []
    lines += [f"  {key.ljust(width)} : {_render_value(value)}" for key, value in fields.items()]
    return "\n".join(lines) + "\n"


def render(title: Optional[str], fields: Mapping[str, object], output_format: OutputFormat = "text") -> str:
    if output_format == "structured":
        return format_block(fields)
    return format_text(title, fields)


def render_many(blocks: Iterable[str]) -> str:
    """Join rendered records with one blank line between them."""
    return "\n".join(blocks)
