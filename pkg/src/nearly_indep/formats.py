"""graph6 and edge-list ingestion/emission, plus deterministic report documents."""

from __future__ import annotations

import json
from base64 import b64decode, b64encode
from functools import lru_cache
from typing import IO, Any, Iterable, Iterator

from .errors import CapacityError, ParseError
from .graph_core import MAX_ORDER, Graph, from_triangle_mask, members, triangle_mask

_HEADER = b">>graph6<<"


def _as_bytes(line: bytes | str) -> bytes:
    if isinstance(line, str):
        try:
            return line.encode("ascii")
        except UnicodeEncodeError as exc:
            raise ParseError("non-ASCII character in graph6 record", offset=exc.start) from None
    return bytes(line)


_B64 = b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/"
_G6 = bytes(range(63, 127))
_TO_B64 = bytes.maketrans(_G6, _B64)
_FROM_B64 = bytes.maketrans(_B64, _G6)
_G6_SET = bytes(range(63, 127))


@lru_cache(maxsize=None)
def _layout(n: int) -> tuple[int, int, int, bytes]:
    """(cells, body bytes, padding bits, header) for order ``n``."""
    cells = n * (n - 1) // 2
    nbytes = (cells + 5) // 6
    if n <= 62:
        header = bytes([n + 63])
    else:
        header = bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    return cells, nbytes, 6 * nbytes - cells, header


def _encode_groups(value: int, groups: int) -> bytes:
    """``value`` as ``groups`` 6-bit digits, most significant first, each offset by 63."""
    extra = -6 * groups % 24
    raw = (value << extra).to_bytes((6 * groups + extra) // 8, "big")
    return b64encode(raw)[:groups].translate(_FROM_B64)


def _decode_groups(data: bytes) -> int:
    groups = len(data)
    raw = b64decode(data.translate(_TO_B64) + b"A" * (-groups % 4))
    return int.from_bytes(raw, "big") >> (8 * len(raw) - 6 * groups)


def parse_graph6(line: bytes | str) -> Graph:
    data = _as_bytes(line).rstrip(b"\r\n")
    start = len(_HEADER) if data.startswith(_HEADER) else 0
    if data.translate(None, _G6_SET) and any(not 63 <= b <= 126 for b in data[start:]):
        pos = next(i for i in range(start, len(data)) if not 63 <= data[i] <= 126)
        raise ParseError(f"byte {data[pos]!r} outside 63..126", offset=pos)
    if start >= len(data):
        raise ParseError("empty graph6 record", offset=start)

    pos = start
    if data[pos] != 126:
        n = data[pos] - 63
        pos += 1
    else:
        width = 6 if pos + 1 < len(data) and data[pos + 1] == 126 else 3
        pos += 2 if width == 6 else 1
        if pos + width > len(data):
            raise ParseError("truncated order header", offset=len(data))
        n = _decode_groups(data[pos:pos + width])
        pos += width
        if n > MAX_ORDER:
            raise CapacityError(f"graph6 order {n} exceeds the supported maximum {MAX_ORDER}")

    cells, nbytes, pad, _ = _layout(n)
    body = data[pos:]
    if len(body) < nbytes:
        raise ParseError(f"truncated body: expected {nbytes} bytes, got {len(body)}", offset=len(data))
    if len(body) > nbytes:
        raise ParseError("trailing bytes after body", offset=pos + nbytes)
    if not cells:
        return Graph(n, (0,) * n, 0)
    stream = _decode_groups(body)
    if stream & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits", offset=pos + nbytes - 1)
    # The stream lists cell 0 first; reverse it so cell t lands on bit t.
    mask = int(format(stream >> pad, f"0{cells}b")[::-1], 2)
    return from_triangle_mask(n, mask)


def emit_graph6(g: Graph) -> bytes:
    cells, nbytes, pad, header = _layout(g.n)
    if not cells:
        return header
    bits = format(triangle_mask(g), f"0{cells}b")[::-1]
    return header + _encode_groups(int(bits, 2) << pad, nbytes)


def parse_edge_list(text: str) -> Graph:
    graphs = list(iter_edge_lists(text.splitlines()))
    if len(graphs) != 1:
        raise ParseError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0][1]


def iter_edge_lists(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(header_line_number, graph)`` for consecutive edge-list records.

    Each record is a line ``n m`` followed by ``m`` lines ``u v``.  Blank lines
    and lines starting with ``#`` between records are skipped.
    """
    numbered = ((no, raw.strip()) for no, raw in enumerate(lines, start=1))
    numbered = ((no, s) for no, s in numbered if s and not s.startswith("#"))
    for no, header in numbered:
        n, m = _ints(header, no, 2)
        if n < 0 or m < 0:
            raise ParseError("negative count in header", line=no)
        if n > MAX_ORDER:
            raise ParseError(f"order {n} exceeds {MAX_ORDER}", line=no)
        adj = [0] * n
        for _ in range(m):
            try:
                eno, row = next(numbered)
            except StopIteration:
                raise ParseError(f"expected {m} edges, input ended early", line=no) from None
            u, v = _ints(row, eno, 2)
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"vertex index out of range 0..{n - 1}", line=eno)
            if u == v:
                raise ParseError(f"loop at vertex {u}", line=eno)
            if adj[u] >> v & 1:
                raise ParseError(f"duplicate edge {u} {v}", line=eno)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        yield no, Graph(n, tuple(adj), m)


def _ints(row: str, line: int, count: int) -> list[int]:
    parts = row.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, got {len(parts)}", line=line)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"not an integer in {row!r}", line=line) from None


def emit_edge_list(g: Graph) -> str:
    rows = [f"{g.n} {g.m}"]
    rows.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(rows) + "\n"


def read_graphs(stream: IO[str], fmt: str = "graph6") -> Iterator[tuple[int, Graph]]:
    """Stream ``(line_number, graph)`` pairs from a text stream."""
    if fmt == "graph6":
        for no, raw in enumerate(stream, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                yield no, parse_graph6(line)
            except ParseError as exc:
                raise ParseError(str(exc), line=no) from None
    elif fmt == "edgelist":
        yield from iter_edge_lists(stream)
    else:
        raise ValueError(f"unknown input format {fmt!r}")


def sorted_vertices(s: int | None) -> list[int] | None:
    return None if s is None else members(s)


def dump_report(doc: Any) -> str:
    """Deterministic JSON text for a report document."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
