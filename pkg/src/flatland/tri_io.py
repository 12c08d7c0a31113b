"""Reading and writing the `.tri` text format and its JSON mirror.

`.tri`: line 1 is `n f`; then f lines `a b c` with 0 <= a < b < c < n, faces
in lexicographic order; `#` begins a comment line; UTF-8, LF line endings.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Sequence

from .surface import Triangulation


class TriFormatError(ValueError):
    """Malformed `.tri` or JSON triangulation input; names the line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_tri(text: str) -> tuple[int, list[tuple[int, int, int]]]:
    lines = text.split("\n")
    header: tuple[int, int] | None = None
    faces: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise TriFormatError(lineno, "expected header `n f`")
            try:
                header = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise TriFormatError(lineno, "header values must be integers") from None
            continue
        if len(parts) != 3:
            raise TriFormatError(lineno, "expected a face `a b c`")
        try:
            a, b, c = (int(p) for p in parts)
        except ValueError:
            raise TriFormatError(lineno, "face vertices must be integers") from None
        if not a < b < c:
            raise TriFormatError(lineno, f"face {a} {b} {c} is not strictly increasing")
        faces.append((a, b, c))
    if header is None:
        raise TriFormatError(len(lines), "missing header `n f`")
    n, f = header
    if len(faces) != f:
        raise TriFormatError(len(lines), f"header promised {f} faces, found {len(faces)}")
    return n, faces


def read_tri(path: str | Path) -> tuple[int, list[tuple[int, int, int]]]:
    text = Path(path).read_text(encoding="utf-8")
    if str(path).endswith(".json"):
        return from_json(text)
    return parse_tri(text)


def format_tri(t: Triangulation, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{t.n} {t.f2}")
    lines.extend(f"{a} {b} {c}" for a, b, c in t.faces)
    return "\n".join(lines) + "\n"


def write_tri(t: Triangulation, path: str | Path, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_tri(t, comments), encoding="utf-8", newline="\n")


def to_json_dict(t: Triangulation) -> dict:
    return {"n": t.n, "faces": [list(f) for f in t.faces]}


def from_json(text: str) -> tuple[int, list[tuple[int, int, int]]]:
    try:
        payload = json.loads(text)
        n = int(payload["n"])
        faces = [tuple(int(v) for v in f) for f in payload["faces"]]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise TriFormatError(1, f"bad JSON triangulation: {exc}") from None
    bad = [f for f in faces if len(f) != 3]
    if bad:
        raise TriFormatError(1, f"face {bad[0]} does not have three vertices")
    return n, faces  # type: ignore[return-value]
