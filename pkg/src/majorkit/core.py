"""Exact rational scalars, vectors, and matrices, plus their text formats.

Every number in this package is a ``fractions.Fraction``: arbitrary
precision, always reduced, never a binary float.  Floats are rejected at
the boundary rather than converted, because ``Fraction(0.1)`` would
silently commit to the binary approximation.

Text formats (used by the CLI and the ``parse_*``/``read_*`` helpers):

* rational literal -- integer ``-3``, fraction ``5/4``, or finite decimal
  ``0.25`` (converted exactly; ``0.25`` becomes ``1/4``),
* vector file -- one line of whitespace-separated rational literals,
* matrix file -- one line per row, all rows the same length.

Blank lines and ``#`` comments (to end of line) are ignored in both file
formats, and parsing is locale-independent and bit-exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator

from .errors import DimensionMismatch, ParseError

__all__ = [
    "Fraction",
    "Matrix",
    "Vector",
    "format_matrix",
    "format_rational",
    "format_vector",
    "parse_matrix",
    "parse_rational",
    "parse_vector",
    "read_matrix",
    "read_vector",
    "to_rational",
]

# integer | fraction | finite decimal, with one optional leading sign
_RATIONAL_RE = re.compile(r"[+-]?(?:\d+/\d+|\d+\.\d+|\.\d+|\d+)\Z")


def parse_rational(text: str) -> Fraction:
    """Parse one rational literal exactly.

    Accepts integers (``-3``), fractions (``5/4``), and finite decimals
    (``0.25``).  Anything else -- including exponents, floats' ``inf``,
    or a zero denominator -- raises :class:`ParseError`.
    """
    token = text.strip()
    if not _RATIONAL_RE.match(token):
        raise ParseError(f"malformed rational literal: {token!r}")
    if "/" in token and int(token.split("/", 1)[1]) == 0:
        raise ParseError(f"zero denominator in rational literal: {token!r}")
    return Fraction(token)


def format_rational(value: Fraction | int) -> str:
    """Render a rational as ``p/q`` (or just ``p`` for integers).

    ``parse_rational(format_rational(r)) == r`` for every rational.
    """
    return str(to_rational(value))


def to_rational(value: Fraction | int | str) -> Fraction:
    """Coerce an int, Fraction, or literal string to Fraction.

    Floats are rejected: they carry binary rounding and have no place in
    an exact pipeline.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact/boolean value {value!r}; use int, Fraction, or a literal string")
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


class Vector:
    """Immutable vector of rationals, length at least 1.

    Entries are exposed 0-based through indexing/iteration; the
    mathematical operations in the rest of the package speak 1-based, as
    positions, and convert at their own boundaries.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[Fraction | int | str]):
        items = tuple(to_rational(x) for x in entries)
        if not items:
            raise ValueError("a vector needs at least one entry")
        self._entries = items

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._entries)

    def __getitem__(self, index: int) -> Fraction:
        return self._entries[index]

    def sum(self) -> Fraction:
        """Exact sum of all entries."""
        return sum(self._entries, Fraction(0))

    def is_nonnegative(self) -> bool:
        return all(e >= 0 for e in self._entries)

    def is_decreasing(self) -> bool:
        """True when entries are weakly decreasing."""
        return all(a >= b for a, b in zip(self._entries, self._entries[1:]))

    def _require_same_length(self, other: "Vector") -> None:
        if len(self) != len(other):
            raise DimensionMismatch(f"vector lengths differ: {len(self)} vs {len(other)}")

    def __add__(self, other: "Vector") -> "Vector":
        if not isinstance(other, Vector):
            return NotImplemented
        self._require_same_length(other)
        return Vector(a + b for a, b in zip(self, other))

    def __sub__(self, other: "Vector") -> "Vector":
        if not isinstance(other, Vector):
            return NotImplemented
        self._require_same_length(other)
        return Vector(a - b for a, b in zip(self, other))

    def __mul__(self, scalar: Fraction | int | str) -> "Vector":
        c = to_rational(scalar)
        return Vector(c * e for e in self)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return f"Vector({format_vector(self)!r})"


class Matrix:
    """Immutable row-major matrix of rationals (m x n, both >= 1)."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[Fraction | int | str]]):
        built = tuple(tuple(to_rational(x) for x in row) for row in rows)
        if not built or not built[0]:
            raise ValueError("a matrix needs at least one row and one column")
        width = len(built[0])
        if any(len(row) != width for row in built):
            raise ValueError("matrix rows must all have the same length")
        self._rows = built

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0])

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self._rows)

    def row_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(row, Fraction(0)) for row in self._rows)

    def column_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(col, Fraction(0)) for col in zip(*self._rows))

    def is_nonnegative(self) -> bool:
        return all(e >= 0 for row in self._rows for e in row)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self._rows))

    def apply(self, v: Vector) -> Vector:
        """Matrix-vector product, exact."""
        if self.ncols != len(v):
            raise DimensionMismatch(f"cannot apply {self.nrows}x{self.ncols} matrix to length-{len(v)} vector")
        return Vector(sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in self._rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionMismatch(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        cols = tuple(zip(*other._rows))
        return Matrix(
            [sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols]
            for row in self._rows
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("matrix shapes differ")
        return Matrix(
            (a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self._rows, other._rows)
        )

    def __mul__(self, scalar: Fraction | int | str) -> "Matrix":
        c = to_rational(scalar)
        return Matrix((c * e for e in row) for row in self._rows)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Matrix({[ [str(e) for e in row] for row in self._rows ]})"


def _data_lines(text: str) -> list[str]:
    """Strip comments and blank lines from file content."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_vector(text: str) -> Vector:
    """Parse the one-line vector format."""
    lines = _data_lines(text)
    if len(lines) != 1:
        raise ParseError(f"a vector file must contain exactly one data line, found {len(lines)}")
    tokens = lines[0].split()
    return Vector(parse_rational(t) for t in tokens)


def parse_matrix(text: str) -> Matrix:
    """Parse the line-per-row matrix format."""
    lines = _data_lines(text)
    if not lines:
        raise ParseError("a matrix file must contain at least one data line")
    rows = [[parse_rational(t) for t in line.split()] for line in lines]
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ParseError("matrix rows must all have the same number of entries")
    return Matrix(rows)


def format_vector(v: Vector) -> str:
    return " ".join(format_rational(e) for e in v)


def format_matrix(m: Matrix) -> str:
    return "\n".join(" ".join(format_rational(e) for e in row) for row in m.rows)


def read_vector(path: str | Path) -> Vector:
    return parse_vector(Path(path).read_text(encoding="utf-8"))


def read_matrix(path: str | Path) -> Matrix:
    return parse_matrix(Path(path).read_text(encoding="utf-8"))
