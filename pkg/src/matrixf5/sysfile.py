"""Reading and writing polynomial system files.

Format::

    # comments start with '#'
    vars: x,y,z,h
    p: 65521
    x^2 + y^2 - 2*x*z - 2*y*z + z^2 + h^2
    ...

One polynomial per line after the header; ``p`` defaults to 65521.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .field import DEFAULT_PRIME, PrimeField
from .polynomial import ParseError, Polynomial, parse


class SystemFileError(ValueError):
    pass


@dataclass
class SystemFile:
    names: list
    p: int
    polys: list
    comments: list = field(default_factory=list)


def parse_system(text: str, prime: int | None = None, source: str = "<input>") -> SystemFile:
    names = None
    p = None
    polys = []
    comments = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if sep and key == "vars":
            names = [v.strip() for v in rest.split(",") if v.strip()]
            if not names:
                raise SystemFileError(f"{source}:{lineno}: empty variable list")
            if len(set(names)) != len(names):
                raise SystemFileError(f"{source}:{lineno}: duplicate variable names")
            continue
        if sep and key == "p":
            try:
                p = int(rest.strip())
            except ValueError:
                raise SystemFileError(f"{source}:{lineno}: bad prime {rest.strip()!r}") from None
            continue
        if names is None:
            raise SystemFileError(f"{source}:{lineno}: polynomial before the 'vars:' header")
        try:
            field_ = PrimeField(prime or p or DEFAULT_PRIME)
        except ValueError as exc:
            raise SystemFileError(f"{source}: {exc}") from None
        try:
            polys.append(parse(line, names, field_))
        except ParseError as exc:
            raise SystemFileError(f"{source}:{lineno}: {exc}") from None
    if names is None:
        raise SystemFileError(f"{source}: missing 'vars:' header")
    p = prime or p or DEFAULT_PRIME
    try:
        PrimeField(p)
    except ValueError as exc:
        raise SystemFileError(f"{source}: {exc}") from None
    return SystemFile(names, p, polys, comments)


def read_system(path, prime: int | None = None) -> SystemFile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SystemFileError(f"cannot read {path}: {exc.strerror}") from None
    return parse_system(text, prime, str(path))


def format_system(polys: list[Polynomial], names=None, p: int | None = None, comments=()) -> str:
    if not polys and (names is None or p is None):
        raise ValueError("an empty system needs names and p")
    names = names or polys[0].names
    p = p or polys[0].p
    lines = [f"# {c}" for c in comments]
    lines.append("vars: " + ",".join(names))
    lines.append(f"p: {p}")
    lines.extend(f.to_str(names) for f in polys)
    return "\n".join(lines) + "\n"


def write_system(path, polys, names=None, p=None, comments=()):
    Path(path).write_text(format_system(polys, names, p, comments))
