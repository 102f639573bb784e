"""Line-oriented instance files.

Format::

    # comment
    m n k
    <m rows of n integers>      (the matrix A)
    <m integers>                (optional right-hand side y)

Entries are arbitrary integers and are reduced mod k on load.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import MatModK, VecModK, reduce_entries


class InstanceParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass(frozen=True)
class Instance:
    A: MatModK
    y: VecModK | None = None

    @property
    def modulus(self) -> int:
        return self.A.modulus


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError as exc:
        raise InstanceParseError(f"expected integers, got {line!r}", lineno) from exc


def parse_instance(text: str, modulus: int | None = None) -> Instance:
    """Parse an instance; ``modulus`` (if given) overrides the header's ``k``."""
    lines = list(_content_lines(text))
    if not lines:
        raise InstanceParseError("empty instance")
    lineno, header = lines[0]
    head = _ints(header, lineno)
    if len(head) != 3:
        raise InstanceParseError("header must be 'm n k'", lineno)
    m, n, k = head
    if m < 1 or n < 1:
        raise InstanceParseError(f"dimensions must be positive, got {m}x{n}", lineno)
    if modulus is not None:
        k = int(modulus)
    if k < 2:
        raise InstanceParseError(f"modulus must be at least 2, got {k}", lineno)
    body = lines[1:]
    if len(body) not in (m, m + 1):
        raise InstanceParseError(f"expected {m} matrix rows and an optional rhs line, got {len(body)} lines")
    rows = []
    for lineno, line in body[:m]:
        row = _ints(line, lineno)
        if len(row) != n:
            raise InstanceParseError(f"expected {n} entries, got {len(row)}", lineno)
        rows.append(row)
    y = None
    if len(body) == m + 1:
        lineno, line = body[m]
        yv = _ints(line, lineno)
        if len(yv) != m:
            raise InstanceParseError(f"right-hand side needs {m} entries, got {len(yv)}", lineno)
        y = VecModK.reduce(yv, k)
    return Instance(reduce_entries(rows, k), y)


def read_instance(path: str, modulus: int | None = None) -> Instance:
    with open(path) as fh:
        return parse_instance(fh.read(), modulus)


def format_instance(inst: Instance) -> str:
    m, n = inst.A.shape
    lines = [f"{m} {n} {inst.modulus}"]
    lines += [" ".join(map(str, row)) for row in inst.A.rows]
    if inst.y is not None:
        lines.append(" ".join(map(str, inst.y)))
    return "\n".join(lines) + "\n"
