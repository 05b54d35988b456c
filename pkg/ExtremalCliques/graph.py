# -*- coding: utf-8 -*-
# The ExtremalCliques library provides exact tools to study the minimum number
# of cliques in graphs of given order and minimum degree.
#
# Copyright (C) 2022 The QC-Devs Community
#
# This file is part of ExtremalCliques.
#
# ExtremalCliques is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 3
# of the License, or (at your option) any later version.
#
# ExtremalCliques is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, see <http://www.gnu.org/licenses/>
#
# --

"""Graph module."""

import gzip
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from bitarray import bitarray, frozenbitarray
from bitarray.util import ba2int, int2ba
from ExtremalCliques.utils import Graph6ParseError, GraphInputError

__all__ = [
    "VertexSet",
    "Graph",
    "vertex_set",
    "members",
    "graph_from_edges",
    "min_degree",
    "common_neighbors",
    "induced_subgraph",
    "parse_graph6",
    "serialize_graph6",
    "read_edge_list",
    "write_edge_list",
    "graph_loader",
    "complete_graph",
    "cycle_graph",
    "complete_multipartite_graph",
    "turan_graph",
    "petersen_graph",
]


VertexSet = bitarray

_GRAPH6_HEADER = ">>graph6<<"
_GRAPH6_OFFSET = 63
_GRAPH6_MAX = 126


def vertex_set(n: int, vertices: Iterable[int] = ()) -> VertexSet:
    """Build an n-bit vertex set from vertex indices."""
    bits = bitarray(n)
    bits.setall(0)
    for v in vertices:
        if not 0 <= v < n:
            raise GraphInputError(f"Vertex {v} is out of range for a graph of order {n}.")
        bits[v] = 1
    return bits


def members(bits: bitarray) -> List[int]:
    """Return the indices set in a bit vector, in ascending order."""
    return [i for i, bit in enumerate(bits) if bit]


class Graph:
    """Immutable simple graph on vertices 0..n-1 with bit-row adjacency.

    Parameters
    ----------
    n : int
        Order of the graph, at least 1.
    rows : sequence of bitarray, optional
        Adjacency rows. Each row must have length n; the matrix must be symmetric with a zero
        diagonal. Default is the empty graph.
    """

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, rows: Sequence[bitarray] = None):
        if n < 1:
            raise GraphInputError(f"Graph order must be at least 1, got {n}.")
        if rows is None:
            rows = [vertex_set(n) for _ in range(n)]
        if len(rows) != n:
            raise GraphInputError(f"Expected {n} adjacency rows, got {len(rows)}.")
        for u, row in enumerate(rows):
            if len(row) != n:
                raise GraphInputError(f"Row {u} has length {len(row)}, expected {n}.")
            if row[u]:
                raise GraphInputError(f"Self-loop at vertex {u}.")
            for v in members(row):
                if not rows[v][u]:
                    raise GraphInputError(f"Adjacency is not symmetric at ({u}, {v}).")
        self._n = n
        self._adj = tuple(frozenbitarray(row) for row in rows)

    @classmethod
    def _from_rows(cls, rows: Sequence[bitarray]) -> "Graph":
        """Wrap rows already known to be symmetric with zero diagonal."""
        graph = cls.__new__(cls)
        graph._n = len(rows)
        graph._adj = tuple(frozenbitarray(row) for row in rows)
        return graph

    @property
    def n(self) -> int:
        """Order of the graph."""
        return self._n

    @property
    def adj(self) -> Tuple[frozenbitarray, ...]:
        """Adjacency rows."""
        return self._adj

    def neighbors(self, v: int) -> List[int]:
        return members(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].count()

    def degrees(self) -> List[int]:
        return [row.count() for row in self._adj]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as ascending pairs in lexicographic order."""
        return [(u, v) for u in range(self._n) for v in members(self._adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u][v])

    def is_regular(self) -> bool:
        return len(set(self.degrees())) == 1

    def is_clique(self, vertices: Iterable[int]) -> bool:
        """Whether the given distinct vertices are pairwise adjacent."""
        vertices = list(vertices)
        if len(set(vertices)) != len(vertices):
            return False
        if any(not 0 <= v < self._n for v in vertices):
            return False
        return all(self._adj[u][v] for u, v in combinations(vertices, 2))

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """Return the graph with vertex v renamed to ``permutation[v]``."""
        if sorted(permutation) != list(range(self._n)):
            raise GraphInputError("Relabelling must be a permutation of the vertices.")
        rows = [vertex_set(self._n) for _ in range(self._n)]
        for u in range(self._n):
            for v in members(self._adj[u]):
                rows[permutation[u]][permutation[v]] = 1
        return Graph._from_rows(rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edge_count()})"


def graph_from_edges(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Build a graph from vertex pairs; duplicate pairs are merged.

    Parameters
    ----------
    n : int
        Order of the graph.
    edges : iterable of (int, int)
        Unordered vertex pairs with 0 <= u, v < n and u != v.

    Returns
    -------
    Graph
        The graph with exactly the given edges.
    """
    if n < 1:
        raise GraphInputError(f"Graph order must be at least 1, got {n}.")
    rows = [vertex_set(n) for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"Edge ({u}, {v}) has a vertex outside 0..{n - 1}.")
        if u == v:
            raise GraphInputError(f"Self-loop at vertex {u}.")
        rows[u][v] = 1
        rows[v][u] = 1
    return Graph._from_rows(rows)


def min_degree(graph: Graph) -> int:
    return min(graph.degrees())


def common_neighbors(graph: Graph, vertices: Union[bitarray, Iterable[int]]) -> VertexSet:
    """Intersection of the neighbourhoods of the given vertices.

    The empty set yields every vertex of the graph.
    """
    if not isinstance(vertices, bitarray):
        vertices = vertex_set(graph.n, vertices)
    elif len(vertices) != graph.n:
        raise GraphInputError(f"Vertex set has {len(vertices)} bits, expected {graph.n}.")
    result = bitarray(graph.n)
    result.setall(1)
    for v in members(vertices):
        result &= graph.adj[v]
    return result


def induced_subgraph(graph: Graph, vertices: Union[bitarray, Iterable[int]]) -> Graph:
    """Subgraph induced by a nonempty vertex set, relabelled in ascending index order."""
    if isinstance(vertices, bitarray):
        chosen = members(vertices)
    else:
        chosen = sorted(set(vertices))
        vertex_set(graph.n, chosen)
    if not chosen:
        raise GraphInputError("Cannot induce a subgraph on an empty vertex set.")
    rows = []
    for u in chosen:
        source = graph.adj[u]
        rows.append(bitarray([source[v] for v in chosen]))
    return Graph._from_rows(rows)


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + _GRAPH6_OFFSET)
    if n <= 258047:
        groups = 3
        prefix = "~"
    else:
        groups = 6
        prefix = "~~"
    bits = int2ba(n, length=6 * groups)
    return prefix + "".join(
        chr(ba2int(bits[6 * k:6 * k + 6]) + _GRAPH6_OFFSET) for k in range(groups)
    )


def serialize_graph6(graph: Graph) -> str:
    """Encode a graph in graph6 format, without header or trailing newline."""
    n = graph.n
    bits = bitarray()
    for j in range(1, n):
        for i in range(j):
            bits.append(graph.adj[i][j])
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(ba2int(bits[k:k + 6]) + _GRAPH6_OFFSET) for k in range(0, len(bits), 6)
    )
    return _encode_order(n) + body


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line.

    Parameters
    ----------
    text : str
        graph6 payload with an optional ``>>graph6<<`` header and trailing newline.

    Returns
    -------
    Graph
        Decoded graph.

    Raises
    ------
    Graph6ParseError
        On bytes outside the printable range, truncated or trailing data, nonzero padding,
        or order zero. The error carries the byte offset into ``text``.
    """
    payload = text.rstrip("\r\n")
    start = len(_GRAPH6_HEADER) if payload.startswith(_GRAPH6_HEADER) else 0
    for offset in range(start, len(payload)):
        if not _GRAPH6_OFFSET <= ord(payload[offset]) <= _GRAPH6_MAX:
            raise Graph6ParseError(f"Invalid graph6 byte {payload[offset]!r}", offset)
    if start == len(payload):
        raise Graph6ParseError("Empty graph6 payload", start)

    pos = start
    if payload[pos] != "~":
        n = ord(payload[pos]) - _GRAPH6_OFFSET
        pos += 1
    else:
        groups = 3
        pos += 1
        if pos < len(payload) and payload[pos] == "~":
            groups = 6
            pos += 1
        if pos + groups > len(payload):
            raise Graph6ParseError("Truncated graph6 order field", len(payload))
        order_bits = bitarray()
        for k in range(groups):
            order_bits.extend(int2ba(ord(payload[pos + k]) - _GRAPH6_OFFSET, length=6))
        n = ba2int(order_bits)
        pos += groups
    if n == 0:
        raise Graph6ParseError("graph6 payload encodes a graph of order 0", start)

    pair_count = n * (n - 1) // 2
    byte_count = -(-pair_count // 6)
    if pos + byte_count > len(payload):
        raise Graph6ParseError(
            f"Truncated graph6 adjacency data: expected {byte_count} bytes", len(payload)
        )
    if pos + byte_count < len(payload):
        raise Graph6ParseError("Trailing data after graph6 adjacency", pos + byte_count)

    bits = bitarray()
    for k in range(byte_count):
        bits.extend(int2ba(ord(payload[pos + k]) - _GRAPH6_OFFSET, length=6))
    if bits[pair_count:].any():
        raise Graph6ParseError("Nonzero padding bits in graph6 payload", pos + byte_count - 1)

    rows = [vertex_set(n) for _ in range(n)]
    index = 0
    for j in range(1, n):
        for i in range(j):
            if bits[index]:
                rows[i][j] = 1
                rows[j][i] = 1
            index += 1
    return Graph._from_rows(rows)


def read_edge_list(text: str) -> Tuple[Graph, Dict[Union[int, str], int]]:
    """Parse a whitespace-separated edge list with an "n m" header.

    Blank lines and lines starting with ``#`` are skipped. When every identifier is an integer in
    0..n-1 the identity mapping is used; otherwise identifiers are numbered densely in order of
    first appearance.

    Returns
    -------
    graph : Graph
        Parsed graph.
    mapping : dict
        Original identifier to vertex index.
    """
    lines = [
        (number, line.split())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise GraphInputError("Edge list is empty; expected an 'n m' header.")
    number, header = lines[0]
    if len(header) != 2 or not all(token.isdigit() for token in header):
        raise GraphInputError(f"Line {number}: expected header 'n m', got {' '.join(header)!r}.")
    n, m = int(header[0]), int(header[1])
    pairs = []
    for number, tokens in lines[1:]:
        if len(tokens) != 2:
            raise GraphInputError(f"Line {number}: expected 'u v', got {' '.join(tokens)!r}.")
        pairs.append((tokens[0], tokens[1]))
    if len(pairs) != m:
        raise GraphInputError(f"Header declares {m} edges but {len(pairs)} were found.")

    tokens = [token for pair in pairs for token in pair]
    if all(token.isdigit() and int(token) < n for token in tokens):
        mapping = {v: v for v in range(n)}
        edges = [(int(u), int(v)) for u, v in pairs]
    else:
        mapping = {}
        for token in tokens:
            if token not in mapping:
                mapping[token] = len(mapping)
        if len(mapping) > n:
            raise GraphInputError(f"Edge list names {len(mapping)} vertices but n = {n}.")
        edges = [(mapping[u], mapping[v]) for u, v in pairs]
    return graph_from_edges(n, edges), mapping


def write_edge_list(graph: Graph) -> str:
    """Write a graph as an "n m" header followed by one "u v" line per edge."""
    edges = graph.edges()
    lines = [f"{graph.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def graph_loader(file_name: str) -> List[Graph]:
    """Load graphs from a file.

    Parameters
    ----------
    file_name : str
        Input graph file. ``.g6``/``.graph6`` files hold one graph per line; ``.txt``,
        ``.edges``, ``.edgelist`` and ``.el`` files hold a single edge list. A trailing ``.gz``
        is decompressed first.

    Returns
    -------
    graphs: list
        A list of Graph objects.
    """
    # use `str` function to support PosixPath
    name = str(file_name).lower()
    opener = open
    if name.endswith(".gz"):
        opener = gzip.open
        name = name[:-3]

    if name.endswith((".g6", ".graph6")):
        with opener(file_name, "rt", encoding="utf8") as f:
            graphs = [parse_graph6(line) for line in f if line.strip()]
    elif name.endswith((".txt", ".edges", ".edgelist", ".el")):
        with opener(file_name, "rt", encoding="utf8") as f:
            graphs = [read_edge_list(f.read())[0]]
    else:
        raise GraphInputError(f"Unsupported graph file type: {file_name}.")
    return graphs


def complete_graph(n: int) -> Graph:
    rows = []
    for v in range(n):
        row = bitarray(n)
        row.setall(1)
        row[v] = 0
        rows.append(row)
    return Graph(n, rows)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError(f"A cycle needs at least 3 vertices, got {n}.")
    return graph_from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def complete_multipartite_graph(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph with parts of the given sizes, numbered consecutively."""
    if any(size < 0 for size in sizes) or sum(sizes) < 1:
        raise GraphInputError(f"Invalid part sizes {list(sizes)}.")
    n = sum(sizes)
    rows = []
    start = 0
    for size in sizes:
        row = bitarray(n)
        row.setall(1)
        row[start:start + size] = 0
        rows.extend(bitarray(row) for _ in range(size))
        start += size
    return Graph._from_rows(rows)


def turan_graph(n: int, q: int) -> Graph:
    """Turán graph T_q(n): complete q-partite graph with part sizes differing by at most one."""
    if q < 1:
        raise GraphInputError(f"Number of parts must be positive, got {q}.")
    sizes = [n // q + (1 if i < n % q else 0) for i in range(q)]
    return complete_multipartite_graph([size for size in sizes if size])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    return graph_from_edges(10, outer + spokes + inner)
