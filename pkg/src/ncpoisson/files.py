"""Algebra definition files.

A file is a JSON object::

    {
      "name": "sl2",
      "basis": ["H", "X", "Y"],
      "brackets": {"H,X": {"X": "2"}, "X,H": {"X": "-2"}, "X,Y": {"H": "1"}}
    }

Keys of ``brackets`` are ``"a,b"`` pairs of basis names; values map basis names
to rationals written as ``"p/q"`` strings (plain integers are accepted too).
Missing pairs are zero.  ``h`` is reserved for the deformation parameter.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .linear import as_rational, format_rational
from .loday import LodayAlgebra

IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
RESERVED = {"h"}


class AlgebraFileError(SyntaxError):
    """Malformed definition file; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


class UnknownBasisName(AlgebraFileError):
    pass


@dataclass(frozen=True)
class AlgebraFile:
    name: str
    basis: tuple[str, ...]
    brackets: dict = field(default_factory=dict)  # (a, b) -> {c: rational}

    def to_algebra(self, validate: bool = True) -> LodayAlgebra:
        index = {n: i for i, n in enumerate(self.basis)}
        constants = {}
        for (a, b), out in self.brackets.items():
            for c, coeff in out.items():
                constants[(index[a], index[b], index[c])] = coeff
        return LodayAlgebra(list(self.basis), constants, name=self.name, validate=validate)

    @classmethod
    def from_algebra(cls, A: LodayAlgebra) -> "AlgebraFile":
        brackets: dict = {}
        for (i, j, k), c in sorted(A.constants.items()):
            brackets.setdefault((A.names[i], A.names[j]), {})[A.names[k]] = c
        return cls(A.name, tuple(A.names), brackets)


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _locate(text: str, needle: str, start: int = 0) -> tuple[int, int]:
    at = text.find(json.dumps(needle), start)
    if at < 0:
        at = text.find(needle, start)
    return _position(text, max(at, 0))


def parse_algebra_file(text: str) -> AlgebraFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise AlgebraFileError("top level must be an object")
    unknown = set(data) - {"name", "basis", "brackets"}
    if unknown:
        key = sorted(unknown)[0]
        raise AlgebraFileError(f"unexpected field {key!r}", *_locate(text, key))
    name = data.get("name", "")
    if not isinstance(name, str):
        raise AlgebraFileError("name must be a string", *_locate(text, "name"))
    basis = data.get("basis")
    if not isinstance(basis, list) or not basis:
        raise AlgebraFileError("basis must be a nonempty list of names", *_locate(text, "basis"))
    seen = set()
    for b in basis:
        if not isinstance(b, str) or not IDENT.match(b):
            raise AlgebraFileError(f"invalid basis name {b!r}", *_locate(text, str(b)))
        if b in RESERVED:
            raise AlgebraFileError(f"basis name {b!r} is reserved", *_locate(text, b))
        if b in seen:
            raise AlgebraFileError(f"duplicate basis name {b!r}", *_locate(text, b))
        seen.add(b)
    raw = data.get("brackets", {})
    if not isinstance(raw, dict):
        raise AlgebraFileError("brackets must be an object", *_locate(text, "brackets"))
    brackets: dict = {}
    body = text.find('"brackets"')
    for key, out in raw.items():
        parts = [p.strip() for p in key.split(",")]
        if len(parts) != 2:
            raise AlgebraFileError(f"bracket key {key!r} must be 'a,b'", *_locate(text, key, body))
        for p in parts:
            if p not in seen:
                raise UnknownBasisName(f"unknown basis name {p!r} in {key!r}", *_locate(text, key, body))
        if not isinstance(out, dict):
            raise AlgebraFileError(f"value of {key!r} must be an object", *_locate(text, key, body))
        pair = tuple(parts)
        if pair in brackets:
            raise AlgebraFileError(f"bracket {key!r} given twice", *_locate(text, key, body))
        entry = {}
        for c, coeff in out.items():
            if c not in seen:
                raise UnknownBasisName(f"unknown basis name {c!r} in value of {key!r}",
                                       *_locate(text, c, text.find(json.dumps(key), body)))
            try:
                if isinstance(coeff, bool) or not isinstance(coeff, (int, str)):
                    raise TypeError
                value = as_rational(coeff)
            except (TypeError, ValueError, ZeroDivisionError):
                raise AlgebraFileError(f"coefficient {coeff!r} is not a rational 'p/q'",
                                       *_locate(text, key, body)) from None
            if value:
                entry[c] = value
        brackets[pair] = entry
    return AlgebraFile(name, tuple(basis), {k: v for k, v in brackets.items() if v})


def serialize_algebra_file(af: AlgebraFile) -> str:
    """Canonical JSON text; ``parse_algebra_file`` inverts it."""
    order = {n: i for i, n in enumerate(af.basis)}
    brackets = {}
    for (a, b) in sorted(af.brackets, key=lambda p: (order[p[0]], order[p[1]])):
        out = af.brackets[(a, b)]
        brackets[f"{a},{b}"] = {c: format_rational(out[c]) for c in sorted(out, key=order.get)}
    return json.dumps({"name": af.name, "basis": list(af.basis), "brackets": brackets}, indent=2) + "\n"


def read_algebra(path: str, validate: bool = True) -> LodayAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra_file(fh.read()).to_algebra(validate=validate)
