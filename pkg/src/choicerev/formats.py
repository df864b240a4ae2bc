"""Text formats: belief-base files, inline input lists and priority files."""

from __future__ import annotations

from pathlib import Path

from .logic import BeliefBase, ParseError, parse_formula
from .selection import PriorityOrder

__all__ = [
    "parse_base_text", "read_base", "parse_input_list", "parse_priority_text",
    "read_priority", "render_base",
]


def _content_lines(text: str):
    """Yield ``(byte_offset, stripped_line)`` for non-blank, non-comment lines."""
    offset = 0
    for raw in text.splitlines(keepends=True):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if stripped:
            lead = len(body) - len(body.lstrip())
            yield offset + len(body[:lead].encode()), stripped
        offset += len(raw.encode())


def _parse_at(text: str, offset: int):
    try:
        return parse_formula(text)
    except ParseError as err:
        raise ParseError(err.message, offset + err.offset, err.expected) from None


def parse_base_text(text: str) -> BeliefBase:
    """One formula per line; ``#`` starts a comment; blank lines are skipped.

    Parse errors report byte offsets into the whole text.
    """
    return BeliefBase(_parse_at(line, off) for off, line in _content_lines(text))


def read_base(path: str | Path) -> BeliefBase:
    return parse_base_text(Path(path).read_text(encoding="utf-8"))


def parse_input_list(text: str) -> BeliefBase:
    """Comma-separated formulas; empty or blank text is the empty input."""
    out = []
    offset = 0
    for piece in text.split(","):
        stripped = piece.strip()
        if stripped:
            lead = len(piece) - len(piece.lstrip())
            out.append(_parse_at(stripped, offset + len(piece[:lead].encode())))
        offset += len(piece.encode()) + 1
    return BeliefBase(out)


def parse_priority_text(text: str) -> PriorityOrder:
    """Lines of ``rank formula``; lower ranks are preferred."""
    weights = {}
    for off, line in _content_lines(text):
        parts = line.split(None, 1)
        try:
            rank = int(parts[0])
        except ValueError:
            raise ParseError(f"expected an integer rank, got {parts[0]!r}", off, "integer") from None
        if len(parts) < 2:
            raise ParseError("missing formula after rank", off + len(line.encode()), "formula")
        start = line.index(parts[1], len(parts[0]))
        formula = _parse_at(parts[1], off + len(line[:start].encode()))
        weights[formula] = rank
    return PriorityOrder(weights)


def read_priority(path: str | Path) -> PriorityOrder:
    return parse_priority_text(Path(path).read_text(encoding="utf-8"))


def render_base(base: BeliefBase) -> str:
    """Base-file text that parses back to ``base``."""
    return "".join(f"{t}\n" for t in base.texts())
