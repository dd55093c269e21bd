"""Deterministic TSV documents made of titled sections."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Sequence


@dataclass
class Section:
    title: str
    header: tuple[str, ...]
    rows: list[tuple] = field(default_factory=list)
    sort_key: Callable[[tuple], Any] | None = None

    def add(self, *row) -> None:
        if len(row) != len(self.header):
            raise ValueError(f"section {self.title}: row has {len(row)} fields, header {len(self.header)}")
        self.rows.append(tuple(row))


def _cell(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if x is None:
        return ""
    if isinstance(x, (tuple, list, frozenset, set)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return ",".join(map(str, items))
    s = str(x)
    if "\t" in s or "\n" in s:
        raise ValueError(f"cell contains a tab or newline: {s!r}")
    return s


def render_section(s: Section, titled: bool = True) -> str:
    rows = sorted(s.rows, key=s.sort_key) if s.sort_key else list(s.rows)
    lines = [f"# {s.title}"] if titled else []
    lines.append("\t".join(s.header))
    lines.extend("\t".join(_cell(x) for x in r) for r in rows)
    return "\n".join(lines) + "\n"


def render(sections: Sequence[Section]) -> str:
    """Sections separated by a blank line; a lone section has no title line."""
    if len(sections) == 1:
        return render_section(sections[0], titled=False)
    return "\n".join(render_section(s) for s in sections)
