"""Text formats for Cayley tables and partition codes.

Table file: UTF-8 text, ``#`` comments to end of line, first token the
order ``n``, then ``n*n`` integers in ``[0, n)`` row-major (row ``i`` lists
``i*0 ... i*(n-1)``).  Partition code: ``n`` whitespace-separated block
labels, normalized to restricted-growth form.
"""
from __future__ import annotations

import logging
import re
from pathlib import Path

from .algebra import MAX_ORDER, CayleyTable, validate_table
from .partitions import Partition, is_restricted_growth, normalize_code

log = logging.getLogger(__name__)

_TOKEN = re.compile(r"\S+")


class TableFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


class NotASemigroupError(ValueError):
    def __init__(self, triple):
        self.triple = triple
        i, j, k = triple
        super().__init__(f"not associative: ({i}*{j})*{k} != {i}*({j}*{k})")


def _tokens(text: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        for m in _TOKEN.finditer(line):
            yield m.group(), lineno, m.start() + 1


def parse_table(text: str, check_associative: bool = True) -> CayleyTable:
    toks = list(_tokens(text))
    if not toks:
        raise TableFormatError("empty table file")

    def as_int(tok):
        s, line, col = tok
        try:
            return int(s)
        except ValueError:
            raise TableFormatError(f"expected an integer, got {s!r}", line, col) from None

    n = as_int(toks[0])
    if not 1 <= n <= MAX_ORDER:
        raise TableFormatError(f"order {n} outside 1..{MAX_ORDER}", toks[0][1], toks[0][2])
    body = toks[1:]
    if len(body) != n * n:
        tok = body[-1] if len(body) > n * n and body else toks[-1]
        raise TableFormatError(f"expected {n * n} entries, found {len(body)}", tok[1], tok[2])
    values = []
    for tok in body:
        v = as_int(tok)
        if not 0 <= v < n:
            raise TableFormatError(f"entry {v} out of range 0..{n - 1}", tok[1], tok[2])
        values.append(v)
    table = CayleyTable.from_flat(n, values)
    if check_associative:
        bad = validate_table(table)
        if bad is not None:
            raise NotASemigroupError(bad)
    return table


def read_table(path, check_associative: bool = True) -> CayleyTable:
    return parse_table(Path(path).read_text(encoding="utf-8"), check_associative)


def format_table(table: CayleyTable, comment: str | None = None) -> str:
    width = len(str(table.order - 1))
    lines = [f"# {comment}"] if comment else []
    lines.append(str(table.order))
    lines += [" ".join(str(v).rjust(width) for v in row) for row in table.rows]
    return "\n".join(lines) + "\n"


def write_table(path, table: CayleyTable, comment: str | None = None) -> None:
    Path(path).write_text(format_table(table, comment), encoding="utf-8")


def parse_partition_code(text: str, order: int) -> Partition:
    """Partition from whitespace-separated labels; non-normal codes are normalized with a warning."""
    parts = text.replace(",", " ").split()
    try:
        code = [int(p) for p in parts]
    except ValueError:
        raise TableFormatError(f"partition code must be integers, got {text!r}") from None
    if len(code) != order:
        raise TableFormatError(f"partition code has {len(code)} labels, table order is {order}")
    if not is_restricted_growth(code):
        normal = normalize_code(code)
        log.warning("partition code %s normalized to %s", " ".join(parts), " ".join(map(str, normal)))
        code = normal
    return Partition.from_code(code)


def format_partition_code(partition: Partition) -> str:
    return " ".join(map(str, partition.code()))
