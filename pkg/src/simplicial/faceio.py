"""
Face-list text format.

One face per line, vertices separated by spaces and/or commas.  Braces are
optional, so the ``{2,4,5}`` lines printed by the CLI read back unchanged;
``{}`` is the empty face.  Blank lines and lines starting with ``#`` are
skipped.  A file with no faces is the void complex.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable

from .complex import Face, SimplicialComplex, from_faces
from .errors import InvalidInputError, ParseError

_SEP = re.compile(r"[\s,]+")


def parse_face(text: str, line: int | None = None) -> list[int]:
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    tokens = [t for t in _SEP.split(body) if t]
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"not a list of integers: {text.strip()!r}", line) from None


def parse_faces(lines: Iterable[str]) -> list[list[int]]:
    out = []
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append(parse_face(stripped, lineno))
    return out


def loads(text: str) -> SimplicialComplex:
    return _build(parse_faces(text.splitlines()))


def load(path: str | Path) -> SimplicialComplex:
    with Path(path).open() as fh:
        return _build(parse_faces(fh), str(path))


def _build(raw: list[list[int]], source: str | None = None) -> SimplicialComplex:
    try:
        return from_faces(raw)
    except InvalidInputError as exc:
        where = f"{source}: " if source else ""
        raise ParseError(f"{where}{exc}") from None


def format_face(face: Face) -> str:
    return "{" + ",".join(str(v) for v in face) + "}"


def dumps(faces: Iterable[Face]) -> str:
    """One ``{a,b,c}`` line per face, newline terminated."""
    return "".join(format_face(f) + "\n" for f in faces)
