"""Bit-packed 0/1 incidence matrices.

Bit ``(i, j)`` is set iff vertex ``j`` belongs to edge ``i``.  Storage is
packed into 64-bit words along the larger dimension: column-major (one
packed column of edge bits per vertex) when ``n >= m``, row-major
otherwise.  Packing along the larger dimension keeps the pairwise
AND/popcount scans used by the reduction engines cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .instance import Hypergraph

WORD_BITS = 64
_WORD_MASK = (1 << WORD_BITS) - 1


@dataclass(frozen=True)
class IncidenceMatrix:
    """Packed incidence matrix of a hypergraph.

    ``words`` holds ``lines * words_per_line`` little-endian 64-bit words,
    one run of ``words_per_line`` words per line.  A line is a row (edge)
    in row-major orientation and a column (vertex) in column-major
    orientation.
    """

    rows: int
    cols: int
    orientation: str  # "row" or "column"
    words: tuple[int, ...]

    def __post_init__(self):
        if self.orientation not in ("row", "column"):
            raise ValueError(f"unknown orientation {self.orientation!r}")

    @property
    def lines(self) -> int:
        return self.rows if self.orientation == "row" else self.cols

    @property
    def line_width(self) -> int:
        return self.cols if self.orientation == "row" else self.rows

    @property
    def words_per_line(self) -> int:
        return (self.line_width + WORD_BITS - 1) // WORD_BITS

    def _line(self, k: int) -> int:
        wpl = self.words_per_line
        bits = 0
        for w, word in enumerate(self.words[k * wpl : (k + 1) * wpl]):
            bits |= word << (w * WORD_BITS)
        return bits

    def bit(self, i: int, j: int) -> bool:
        """Whether vertex ``j`` lies in edge ``i`` (both 1-based)."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"bit ({i}, {j}) outside {self.rows}x{self.cols} matrix")
        if self.orientation == "row":
            return bool(self._line(i - 1) >> (j - 1) & 1)
        return bool(self._line(j - 1) >> (i - 1) & 1)

    @cached_property
    def row_bitsets(self) -> tuple[int, ...]:
        """Per edge, the bitset of its vertices (vertex j -> bit j-1)."""
        if self.orientation == "row":
            return tuple(self._line(i) for i in range(self.rows))
        out = [0] * self.rows
        for j in range(self.cols):
            col = self._line(j)
            while col:
                low = col & -col
                out[low.bit_length() - 1] |= 1 << j
                col ^= low
        return tuple(out)

    @cached_property
    def col_bitsets(self) -> tuple[int, ...]:
        """Per vertex, the bitset of the edges containing it."""
        if self.orientation == "column":
            return tuple(self._line(j) for j in range(self.cols))
        out = [0] * self.cols
        for i in range(self.rows):
            row = self._line(i)
            while row:
                low = row & -row
                out[low.bit_length() - 1] |= 1 << i
                row ^= low
        return tuple(out)

    def row_popcount(self, i: int) -> int:
        return self.row_bitsets[i - 1].bit_count()

    def col_popcount(self, j: int) -> int:
        return self.col_bitsets[j - 1].bit_count()

    def total_bits(self) -> int:
        return sum(b.bit_count() for b in self.row_bitsets)


def _pack(bits: int, width: int) -> list[int]:
    words = []
    for _ in range((width + WORD_BITS - 1) // WORD_BITS):
        words.append(bits & _WORD_MASK)
        bits >>= WORD_BITS
    return words


def incidence_matrix(h: Hypergraph) -> IncidenceMatrix:
    """Build the packed incidence matrix of ``h``.

    Orientation is chosen by comparing the dimensions: columns are packed
    when there are at least as many vertices as edges, rows otherwise.
    """
    orientation = "column" if h.n >= h.m else "row"
    words: list[int] = []
    if orientation == "row":
        for bits in h.edge_bits:
            words.extend(_pack(bits, h.n))
    else:
        for j in range(1, h.n + 1):
            col = 0
            for i in h.vertex_edges[j - 1]:
                col |= 1 << (i - 1)
            words.extend(_pack(col, h.m))
    return IncidenceMatrix(h.m, h.n, orientation, tuple(words))
