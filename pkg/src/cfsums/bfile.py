"""OEIS b-file parsing.

Wire format, bit exact: lines matching ^\\s*#.*$ are comments; data
lines match ^\\s*(-?\\d+)\\s+(-?\\d+)\\s*$ as (index, value). Blank or
whitespace-only lines are skipped (real b-files end with a newline).
Indices must be strictly increasing; values are parsed exactly into
arbitrary-precision integers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from os import PathLike

from gmpy2 import mpz

_COMMENT = re.compile(r"^\s*#")
_DATA = re.compile(r"^\s*(-?\d+)\s+(-?\d+)\s*$")


class BFileError(ValueError):
    """Malformed b-file content; carries the offending line number."""

    def __init__(self, message: str, lineno: int | None = None):
        super().__init__(message)
        self.lineno = lineno


@dataclass
class BFile:
    """Parsed (index, value) entries for one OEIS sequence."""

    entries: list = field(default_factory=list)
    source_id: str = ""

    @property
    def indices(self) -> list:
        return [i for i, _ in self.entries]

    @property
    def values(self) -> list:
        return [v for _, v in self.entries]


def parse_bfile(path: str | PathLike, source_id: str = "") -> BFile:
    """Parse a b-file from disk; raises BFileError on any malformed or
    out-of-order line, OSError on I/O problems."""
    entries = []
    last_index = None
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            if _COMMENT.match(line) or not line.strip():
                continue
            m = _DATA.match(line)
            if m is None:
                raise BFileError(f"{path}: malformed b-file line {lineno}: {line.rstrip()!r}", lineno)
            idx = int(m.group(1))
            if last_index is not None and idx <= last_index:
                raise BFileError(
                    f"{path}: indices not strictly increasing at line {lineno}", lineno
                )
            last_index = idx
            entries.append((idx, mpz(m.group(2))))
    if not entries:
        raise BFileError(f"{path}: no data lines")
    return BFile(entries=entries, source_id=source_id)


def compare_entries(bf: BFile, computed, offset: int = 0):
    """Compare b-file entries against computed[i - offset] over the
    overlapping index range.

    Returns (compared_count, first_divergence_index or None); entries
    beyond the computed range are ignored (match up to min length).
    """
    compared = 0
    for idx, val in bf.entries:
        pos = idx - offset
        if pos < 0 or pos >= len(computed):
            continue
        compared += 1
        if computed[pos] != val:
            return compared, idx
    return compared, None


__all__ = ["BFile", "BFileError", "compare_entries", "parse_bfile"]
