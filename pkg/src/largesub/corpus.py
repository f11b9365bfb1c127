"""Reading and writing group corpora.

A corpus is a line-delimited JSON file: one record per line, blank lines
and lines starting with '#' skipped.  Two record kinds are understood:

  {"kind": "table", "name": "...", "order": n, "table": [n*n ints]}
      a full multiplication table, flattened row-major; entry at row a,
      column b is the index of a*b

  {"kind": "perm", "name": "...", "degree": d, "generators": [[...], ...]}
      a permutation group on 0..d-1 given by generator image lists

Structural problems (bad JSON, wrong field shapes) raise CorpusFormatError
with the line number.  Semantic problems (a table that is not a group) are
left to the builders, so callers can distinguish unreadable files from
readable files containing non-groups.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .errors import CorpusFormatError
from .groups import FiniteGroup, from_multiplication_table, from_permutation_generators


@dataclass(frozen=True)
class CorpusRecord:
    kind: str
    name: str | None
    line_no: int
    data: dict

    def build(self, *, cap=None) -> FiniteGroup:
        """Construct the group; semantic failures propagate as NotAGroup or
        OrderCapExceeded."""
        if self.kind == "table":
            n = self.data["order"]
            flat = self.data["table"]
            table = [flat[i * n : (i + 1) * n] for i in range(n)]
            return from_multiplication_table(table, name=self.name, cap=cap)
        return from_permutation_generators(
            self.data["generators"], name=self.name, cap=cap
        )


def _expect(cond: bool, message: str, line_no: int) -> None:
    if not cond:
        raise CorpusFormatError(message, line_no)


def iter_records(lines: Iterable[str]) -> Iterator[CorpusRecord]:
    """Parse corpus lines into records, validating shapes as we go."""
    for line_no, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CorpusFormatError(f"invalid JSON ({exc.msg})", line_no) from exc
        _expect(isinstance(data, dict), "record must be a JSON object", line_no)
        kind = data.get("kind")
        _expect(kind in ("table", "perm"), f"unknown record kind {kind!r}", line_no)
        name = data.get("name")
        _expect(
            name is None or isinstance(name, str), "name must be a string", line_no
        )
        if kind == "table":
            order = data.get("order")
            _expect(
                isinstance(order, int) and order >= 1,
                "table record needs a positive integer order",
                line_no,
            )
            table = data.get("table")
            _expect(
                isinstance(table, list) and len(table) == order * order,
                f"table must be a flat list of {order}*{order} entries",
                line_no,
            )
            _expect(
                all(isinstance(v, int) for v in table),
                "table entries must be integers",
                line_no,
            )
        else:
            degree = data.get("degree")
            _expect(
                isinstance(degree, int) and degree >= 1,
                "perm record needs a positive integer degree",
                line_no,
            )
            gens = data.get("generators")
            _expect(
                isinstance(gens, list) and gens,
                "perm record needs a nonempty generator list",
                line_no,
            )
            for g in gens:
                _expect(
                    isinstance(g, list)
                    and len(g) == degree
                    and all(isinstance(v, int) for v in g),
                    f"each generator must be a list of {degree} integers",
                    line_no,
                )
        yield CorpusRecord(kind=kind, name=name, line_no=line_no, data=data)


def read_records(path) -> list[CorpusRecord]:
    with open(Path(path), "r", encoding="utf-8") as fh:
        return list(iter_records(fh))


def read_corpus(path, *, cap=None) -> list[FiniteGroup]:
    """Load every record in the file as a group."""
    return [rec.build(cap=cap) for rec in read_records(path)]


def record_for_group(G: FiniteGroup) -> dict:
    """The table-kind record serializing a group, round-trippable through
    iter_records."""
    return {
        "kind": "table",
        "name": G.name,
        "order": G.order,
        "table": [int(v) for v in G.table.ravel()],
    }


def dump_record(G: FiniteGroup) -> str:
    return json.dumps(record_for_group(G), separators=(",", ":"))


def write_corpus(path, groups: Iterable[FiniteGroup]) -> None:
    with open(Path(path), "w", encoding="utf-8") as fh:
        for G in groups:
            fh.write(dump_record(G) + "\n")
