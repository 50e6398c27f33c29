"""Readers and writers for graph6, plain edge lists and DIMACS edge files.

Edge-list files start with a ``n m`` line followed by ``m`` lines ``u v``
with 0-based ids. DIMACS files use a ``p edge n m`` header and 1-based
``e u v`` lines. Parse failures raise :class:`FormatError` carrying the byte
offset of the offending input.
"""

from __future__ import annotations

import logging
from pathlib import Path

from .graph import Graph, GraphError, build_graph

log = logging.getLogger(__name__)

FORMATS = ("graph6", "edgelist", "dimacs")

_SUFFIXES = {
    ".g6": "graph6",
    ".graph6": "graph6",
    ".el": "edgelist",
    ".edges": "edgelist",
    ".edgelist": "edgelist",
    ".txt": "edgelist",
    ".dimacs": "dimacs",
    ".col": "dimacs",
    ".dim": "dimacs",
}

G6_HEADER = b">>graph6<<"


class FormatError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset


# graph6


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise GraphError("negative order")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise GraphError(f"order {n} too large for graph6")


def to_graph6(g: Graph) -> str:
    """graph6 encoding (without header or trailing newline)."""
    out = bytearray(_encode_size(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (i in row)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def _decode_size(data: bytes, base: int) -> tuple[int, int]:
    def take(start: int, count: int) -> int:
        value = 0
        for k in range(start, start + count):
            if k >= len(data):
                raise FormatError("truncated graph6 length header", base + k)
            b = data[k]
            if not 63 <= b <= 126:
                raise FormatError(f"byte {b} outside graph6 range 63..126", base + k)
            value = (value << 6) | (b - 63)
        return value

    if not data:
        raise FormatError("empty graph6 string", base)
    if data[0] != 126:
        return take(0, 1), 1
    if len(data) > 1 and data[1] == 126:
        return take(2, 6), 8
    return take(1, 3), 4


def from_graph6(text: str | bytes, base_offset: int = 0) -> Graph:
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise FormatError("non-ASCII character in graph6 data", base_offset + exc.start) from None
    else:
        data = bytes(text)
    data = data.strip()
    if data.startswith(G6_HEADER):
        base_offset += len(G6_HEADER)
        data = data[len(G6_HEADER):]
    n, pos = _decode_size(data, base_offset)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise FormatError(
            f"graph6 body has {len(body)} bytes, expected {need} for n={n}",
            base_offset + pos + min(len(body), need),
        )
    for k, b in enumerate(body):
        if not 63 <= b <= 126:
            raise FormatError(f"byte {b} outside graph6 range 63..126", base_offset + pos + k)
    edges = []
    bit = 0
    vals = [b - 63 for b in body]
    for j in range(1, n):
        for i in range(j):
            if vals[bit // 6] >> (5 - bit % 6) & 1:
                edges.append((i, j))
            bit += 1
    return build_graph(n, edges)


# edge list


def _tokens(text: str):
    """(line_number, byte_offset, fields) for non-blank, non-comment lines."""
    offset = 0
    for lineno, line in enumerate(text.splitlines(keepends=True), 1):
        start = offset
        offset += len(line.encode("utf-8"))
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, start, stripped.split()


def _int(field: str, where: int) -> int:
    try:
        return int(field)
    except ValueError:
        raise FormatError(f"expected an integer, got {field!r}", where) from None


def _collect(n: int, pairs, origin: str) -> Graph:
    seen = set()
    edges = []
    for (u, v), where in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge endpoint out of range for n={n}", where)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", where)
        key = (min(u, v), max(u, v))
        if key in seen:
            log.warning("%s: duplicate edge %s ignored (byte offset %d)", origin, key, where)
            continue
        seen.add(key)
        edges.append(key)
    return build_graph(n, edges)


def from_edgelist(text: str) -> Graph:
    lines = list(_tokens(text))
    if not lines:
        raise FormatError("missing 'n m' header", 0)
    _, where, head = lines[0]
    if len(head) != 2:
        raise FormatError("header must be 'n m'", where)
    n, m = _int(head[0], where), _int(head[1], where)
    body = lines[1:]
    if len(body) != m:
        where = body[m][1] if len(body) > m else len(text.encode("utf-8"))
        raise FormatError(f"header declares {m} edges, found {len(body)}", where)
    pairs = []
    for _, where, fields in body:
        if len(fields) != 2:
            raise FormatError("edge line must be 'u v'", where)
        pairs.append(((_int(fields[0], where), _int(fields[1], where)), where))
    return _collect(n, pairs, "edgelist")


def to_edgelist(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"{g.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


# DIMACS


def from_dimacs(text: str) -> Graph:
    n = m = None
    pairs = []
    for _, where, fields in _tokens(text):
        tag = fields[0]
        if tag == "c":
            continue
        if tag == "p":
            if n is not None:
                raise FormatError("second problem line", where)
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise FormatError("problem line must be 'p edge n m'", where)
            n, m = _int(fields[2], where), _int(fields[3], where)
        elif tag == "e":
            if n is None:
                raise FormatError("edge line before 'p edge' header", where)
            if len(fields) != 3:
                raise FormatError("edge line must be 'e u v'", where)
            pairs.append(((_int(fields[1], where) - 1, _int(fields[2], where) - 1), where))
        else:
            raise FormatError(f"unknown line type {tag!r}", where)
    if n is None:
        raise FormatError("missing 'p edge n m' header", 0)
    if len(pairs) != m:
        log.warning("dimacs: header declares %d edges, found %d", m, len(pairs))
    return _collect(n, pairs, "dimacs")


def to_dimacs(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"p edge {g.n} {len(edges)}\n"] + [f"e {u + 1} {v + 1}\n" for u, v in edges])


# dispatch


def detect_format(path: str | Path, text: str | None = None) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in _SUFFIXES:
        return _SUFFIXES[suffix]
    if text is not None:
        for line in text.splitlines():
            s = line.strip()
            if not s or s.startswith("#"):
                continue
            if s[0] in "cpe" and (len(s) == 1 or s[1] == " "):
                return "dimacs"
            parts = s.split()
            if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
                return "edgelist"
            return "graph6"
    raise ValueError(f"cannot determine graph format of {path}")


def parse(text: str, fmt: str) -> list[Graph]:
    """All graphs in ``text``; graph6 input may hold one graph per line."""
    if fmt == "graph6":
        graphs = []
        offset = 0
        for line in text.splitlines(keepends=True):
            if line.strip():
                lead = len(line) - len(line.lstrip())
                graphs.append(from_graph6(line.strip(), base_offset=offset + lead))
            offset += len(line.encode("ascii", errors="replace"))
        if not graphs:
            raise FormatError("no graph6 data", 0)
        return graphs
    if fmt == "edgelist":
        return [from_edgelist(text)]
    if fmt == "dimacs":
        return [from_dimacs(text)]
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def serialize(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "edgelist":
        return to_edgelist(g)
    if fmt == "dimacs":
        return to_dimacs(g)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def read_graphs(path: str | Path, fmt: str | None = None) -> list[Graph]:
    text = Path(path).read_text(encoding="utf-8")
    return parse(text, fmt or detect_format(path, text))


def write_graph(g: Graph, path: str | Path, fmt: str | None = None) -> None:
    Path(path).write_text(serialize(g, fmt or detect_format(path)), encoding="utf-8")
