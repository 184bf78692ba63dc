"""Binary bitset files and tabular report output.

Bitset layout (all integers little-endian)::

    b"ZBSET1\\0" + b"\\0"     8 bytes
    A                        uint64
    N                        uint64
    ceil((N + 1) / 64) words uint64, bit q set iff q is in the set
"""

from __future__ import annotations

import csv
import io
import json
import struct

import numpy as np

from .errors import BitsetFormatError
from .orbit import ContinuantSet

MAGIC = b"ZBSET1\x00\x00"
HEADER = struct.Struct("<8sQQ")


def n_words(N: int) -> int:
    return (N + 1 + 63) // 64


def _tail_mask(N: int) -> int:
    used = (N + 1) % 64
    return 0 if used == 0 else ((1 << 64) - 1) ^ ((1 << used) - 1)


def dumps_bitset(cs: ContinuantSet) -> bytes:
    words = np.asarray(cs.words, dtype="<u8")
    if words.size != n_words(cs.N):
        raise BitsetFormatError(f"set holds {words.size} words, N={cs.N} needs {n_words(cs.N)}")
    return HEADER.pack(MAGIC, cs.A, cs.N) + words.tobytes()


def loads_bitset(data: bytes) -> ContinuantSet:
    if len(data) < HEADER.size:
        raise BitsetFormatError(f"header truncated: {len(data)} of {HEADER.size} bytes")
    magic, A, N = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise BitsetFormatError(f"bad magic {magic!r}")
    payload = data[HEADER.size:]
    expected = n_words(N)
    if len(payload) != 8 * expected:
        raise BitsetFormatError(
            f"expected {expected} words, found {len(payload) / 8:g}")
    words = np.frombuffer(payload, dtype="<u8").copy()
    if words[0] & 1:
        raise BitsetFormatError("bit 0 is set")
    if int(words[-1]) & _tail_mask(N):
        raise BitsetFormatError(f"bits above N={N} are set")
    return ContinuantSet(A, N, words)


def write_bitset(path, cs: ContinuantSet) -> None:
    with open(path, "wb") as fh:
        fh.write(dumps_bitset(cs))


def read_bitset(path) -> ContinuantSet:
    with open(path, "rb") as fh:
        return loads_bitset(fh.read())


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2)


def to_csv(columns, rows, meta: dict | None = None) -> str:
    """CSV text; metadata goes first as ``# key=value`` comment lines."""
    out = io.StringIO()
    for k, v in (meta or {}).items():
        if v is not None:
            out.write(f"# {k}={v}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(["" if v is None else v for v in row])
    return out.getvalue()
