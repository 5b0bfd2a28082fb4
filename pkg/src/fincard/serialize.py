"""Canonical text form for families, mixed families and coded sets.

    #fincard family n=1 K=- ground=3 schedule=- shape=⟨1⟩
    ⟨{0}⟩

    #fincard mixed n=1 K=1 ground=8 schedule=compact
    shape ⟨0⟩
    ⟨{}⟩
    shape ⟨1⟩
    ⟨{0}⟩

    #fincard coded n=1 K=1 ground=8 schedule=compact
    {{0,1,2}}

Records are listed in canonical order (rank order inside a cell, shapes
ascending; coded members by their size-sorted sets), atoms ascending.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .ground import Family, format_set, format_tuple, in_cell
from .phi import CodedSet, MixedFamily

MAGIC = "#fincard"
KINDS = ("family", "mixed", "coded")


@dataclass(frozen=True)
class Header:
    kind: str
    n: int
    ground: int
    K: int | None = None
    schedule: str | None = None
    shape: tuple | None = None

    def render(self) -> str:
        out = [
            MAGIC,
            self.kind,
            f"n={self.n}",
            f"K={'-' if self.K is None else self.K}",
            f"ground={self.ground}",
            f"schedule={self.schedule or '-'}",
        ]
        if self.kind == "family":
            out.append(f"shape={_format_shape(self.shape)}")
        return " ".join(out)


def _format_shape(shape) -> str:
    return "⟨" + ",".join(str(k) for k in shape) + "⟩"


def format_member(member) -> str:
    sets = sorted(member, key=lambda s: (len(s), sorted(s)))
    return "{" + ",".join(format_set(s) for s in sets) + "}"


def dumps(obj, *, ground: int | None = None, K: int | None = None, schedule: str | None = None) -> str:
    if isinstance(obj, Family):
        header = Header("family", len(obj.shape), obj.ground, K, schedule, obj.shape)
        lines = [format_tuple(t) for t in obj]
    elif isinstance(obj, MixedFamily):
        if ground is None:
            grounds = {f.ground for _, f in obj.cells}
            if len(grounds) != 1:
                raise ValueError("ground size is required for an empty mixed family")
            ground = grounds.pop()
        header = Header("mixed", obj.n, ground, K, schedule)
        lines = []
        for shape, fam in obj.cells:
            lines.append(f"shape {_format_shape(shape)}")
            lines.extend(format_tuple(t) for t in fam)
    elif isinstance(obj, CodedSet):
        if ground is None:
            raise ValueError("ground size is required for a coded set")
        header = Header("coded", obj.n, ground, K, schedule)
        lines = [format_member(m) for m in obj]
    else:
        raise TypeError(f"cannot serialise {type(obj).__name__}")
    return "\n".join([header.render(), *lines]) + "\n"


# -- parsing -----------------------------------------------------------------

class _Cursor:
    def __init__(self, text: str, line: int):
        self.text = text
        self.pos = 0
        self.line = line

    def error(self, msg: str):
        return ParseError(msg, self.line, self.pos + 1)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            got = self.peek() or "end of line"
            raise self.error(f"expected {ch!r}, found {got!r}")
        self.pos += 1

    def natural(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an atom")
        return int(self.text[start:self.pos])

    def sequence(self, open_ch: str, close_ch: str, item):
        self.expect(open_ch)
        out = []
        if self.peek() == close_ch:
            self.pos += 1
            return out
        while True:
            out.append(item())
            if self.peek() == ",":
                self.pos += 1
                continue
            self.expect(close_ch)
            return out

    def atom_set(self) -> frozenset:
        atoms = self.sequence("{", "}", self.natural)
        if atoms != sorted(set(atoms)):
            raise self.error("atoms must be listed strictly ascending")
        return frozenset(atoms)

    def done(self) -> None:
        if self.pos != len(self.text):
            raise self.error(f"unexpected trailing text {self.text[self.pos:]!r}")


def _parse_shape(text: str, line: int) -> tuple:
    cur = _Cursor(text, line)
    shape = tuple(cur.sequence("⟨", "⟩", cur.natural))
    cur.done()
    if not shape:
        raise ParseError("empty shape", line, 1)
    return shape


def _parse_header(line: str) -> Header:
    fields = line.split(" ")
    if len(fields) < 6 or fields[0] != MAGIC:
        raise ParseError(f"header must start with {MAGIC!r} and name kind, n, K, ground, schedule", 1, 1)
    kind = fields[1]
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}", 1, len(MAGIC) + 2)
    values = {}
    col = len(MAGIC) + len(kind) + 3
    for f in fields[2:]:
        key, sep, value = f.partition("=")
        if not sep or key in values:
            raise ParseError(f"bad header field {f!r}", 1, col)
        values[key] = (value, col)
        col += len(f) + 1
    wanted = {"n", "K", "ground", "schedule"} | ({"shape"} if kind == "family" else set())
    if set(values) != wanted:
        raise ParseError(f"header fields must be exactly {sorted(wanted)}", 1, 1)

    def natural(key, optional=False):
        value, c = values[key]
        if optional and value == "-":
            return None
        if not value.isdigit():
            raise ParseError(f"{key} must be a natural number", 1, c + len(key) + 1)
        return int(value)

    schedule = values["schedule"][0]
    shape = _parse_shape(values["shape"][0], 1) if kind == "family" else None
    return Header(kind, natural("n"), natural("ground"), natural("K", True), None if schedule == "-" else schedule, shape)


def _parse_tuple(text: str, line: int, n: int) -> tuple:
    cur = _Cursor(text, line)
    t = tuple(cur.sequence("⟨", "⟩", cur.atom_set))
    cur.done()
    if len(t) != n:
        raise ParseError(f"tuple has {len(t)} parts, expected {n}", line, 1)
    return t


def _parse_member(text: str, line: int, n: int) -> frozenset:
    cur = _Cursor(text, line)
    sets = cur.sequence("{", "}", cur.atom_set)
    cur.done()
    member = frozenset(sets)
    if len(member) != n or len(sets) != n:
        raise ParseError(f"member must hold {n} distinct sets", line, 1)
    return member


def loads(text: str):
    """Parse canonical text; returns ``(value, header)``."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty input", 1, 1)
    header = _parse_header(lines[0])
    body = list(enumerate(lines[1:], start=2))

    if header.kind == "family":
        members = set()
        for no, line in body:
            t = _parse_tuple(line, no, header.n)
            if not in_cell(t, header.ground, header.shape):
                raise ParseError(f"{line} is not in cell {_format_shape(header.shape)}", no, 1)
            if t in members:
                raise ParseError("duplicate record", no, 1)
            members.add(t)
        return Family(header.ground, header.shape, frozenset(members)), header

    if header.kind == "mixed":
        cells, shape = {}, None
        for no, line in body:
            if line.startswith("shape "):
                shape = _parse_shape(line[6:], no)
                if len(shape) != header.n or shape in cells:
                    raise ParseError("bad or repeated shape section", no, 7)
                cells[shape] = set()
                continue
            if shape is None:
                raise ParseError("record before any shape section", no, 1)
            t = _parse_tuple(line, no, header.n)
            if not in_cell(t, header.ground, shape):
                raise ParseError(f"{line} is not in cell {_format_shape(shape)}", no, 1)
            if t in cells[shape]:
                raise ParseError("duplicate record", no, 1)
            cells[shape].add(t)
        fams = tuple((s, Family(header.ground, s, frozenset(ts))) for s, ts in cells.items())
        return MixedFamily(header.n, fams), header

    members = set()
    for no, line in body:
        m = _parse_member(line, no, header.n)
        if any(a >= header.ground for s in m for a in s):
            raise ParseError("atom outside the ground set", no, 1)
        if m in members:
            raise ParseError("duplicate record", no, 1)
        members.add(m)
    return CodedSet(header.n, frozenset(members)), header
