"""Permutations, permutation matrices, and stochastic classification.

Conventions
-----------
A permutation ``sigma`` of ``{1, ..., n}`` is stored by its 1-based image
list: ``sigma(i)`` is where position ``i``'s value is sent.  Its matrix
has ``P[i][j] = 1`` exactly when ``i = sigma(j)`` (columns of the
identity get shuffled), so acting on a column vector gives

    (P_sigma x)_i = x_{sigma^{-1}(i)}

and matrix multiplication realizes composition:
``P_sigma @ P_tau == (sigma * tau).matrix()`` with
``(sigma * tau)(i) = sigma(tau(i))``.

Cycle strings follow the *source-position* reading: the cycle
``(c1,c2,...,ck)`` names the permutation whose matrix moves the value at
position ``c2`` into position ``c1``, the value at ``c3`` into ``c2``,
..., and the value at ``c1`` into ``ck``.  Reading left to right thus
traces where each position's value comes from.  For example ``(1,4,2)``
sorts ``(3,1,2,4)`` into ``(4,3,2,1)``: position 1 receives the entry of
position 4, position 4 the entry of position 2, position 2 the entry of
position 1.  (Relative to the textbook left-to-right reading this is the
inverse; the two conventions coincide on involutions like ``(1,3)(2,4)``.)
Juxtaposed cycles compose, rightmost applied first.
"""

from __future__ import annotations

import re
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .core import Matrix, Vector
from .errors import DimensionMismatch, NotDoublyStochastic, ParseError

__all__ = [
    "Permutation",
    "StochasticClass",
    "classify_stochastic",
    "ds2_lambda",
    "permutation_matrix",
    "permute_columns",
    "permute_rows",
]

_CYCLE_TOKEN_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """A bijection of ``{1, ..., n}`` stored as a 1-based image tuple.

    ``Permutation([2, 4, 3, 1])`` sends 1 to 2, 2 to 4, fixes 3, and
    sends 4 to 1; its cycle string is ``(1,4,2)``.
    """

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(i) for i in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"images must list 1..n exactly once, got {imgs}")
        self._images = imgs

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        if n < 1:
            raise ValueError("permutation degree must be at least 1")
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, text: str, size: int) -> "Permutation":
        """Parse cycle notation (see the module docstring for the reading).

        ``"e"`` and ``"()"`` both denote the identity.  Juxtaposed cycles
        compose with the rightmost applied first.
        """
        if size < 1:
            raise ValueError("permutation degree must be at least 1")
        stripped = text.strip()
        if stripped in ("e", "()"):
            return cls.identity(size)
        cycles = _CYCLE_TOKEN_RE.findall(stripped)
        rebuilt = re.sub(r"\s+", "", "".join(f"({c})" for c in cycles))
        if rebuilt != re.sub(r"\s+", "", stripped):
            raise ParseError(f"malformed cycle notation: {text!r}")
        result = cls.identity(size)
        for body in cycles:  # left-to-right accumulation: rightmost cycle acts first
            parts = [p.strip() for p in body.split(",")] if body.strip() else []
            try:
                elems = [int(p) for p in parts]
            except ValueError as exc:
                raise ParseError(f"malformed cycle notation: {text!r}") from exc
            if not elems:
                continue  # "()" inside a product: identity factor
            if len(set(elems)) != len(elems):
                raise ParseError(f"repeated element inside a cycle: ({body})")
            if any(not 1 <= e <= size for e in elems):
                raise ParseError(f"cycle element out of range 1..{size}: ({body})")
            images = list(range(1, size + 1))
            # source-position reading: value flows c[i+1] -> c[i], c1 -> ck
            for src, dst in zip(elems[1:], elems[:-1]):
                images[src - 1] = dst
            images[elems[0] - 1] = elems[-1]
            result = result * cls(images)  # (r * c)(i) = r(c(i)), so c acts first
        return result

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def size(self) -> int:
        return len(self._images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.size:
            raise ValueError(f"position {i} out of range 1..{self.size}")
        return self._images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, img in enumerate(self._images, start=1):
            inv[img - 1] = i
        return Permutation(inv)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: ``(sigma * tau)(i) == sigma(tau(i))``."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.size != other.size:
            raise DimensionMismatch(f"permutation degrees differ: {self.size} vs {other.size}")
        return Permutation(self._images[t - 1] for t in other._images)

    def act(self, v: Vector) -> Vector:
        """Apply the permutation matrix to a vector without building it.

        ``sigma.act(v) == sigma.matrix().apply(v)``, i.e. the result has
        ``v[j]`` at position ``sigma(j)``.
        """
        if len(v) != self.size:
            raise DimensionMismatch(f"cannot act on length-{len(v)} vector with degree-{self.size} permutation")
        out: list[Fraction] = [Fraction(0)] * self.size
        for j, img in enumerate(self._images):
            out[img - 1] = v[j]
        return Vector(out)

    def matrix(self) -> Matrix:
        """The n x n permutation matrix with 1 at ``(sigma(j), j)``."""
        n = self.size
        inv = self.inverse()._images
        return Matrix([[1 if j == inv[i] - 1 else 0 for j in range(n)] for i in range(n)])

    def cycle_string(self) -> str:
        """Canonical cycle notation; fixed points omitted, identity is ``()``."""
        inv = self.inverse()._images
        seen = [False] * self.size
        cycles = []
        for start in range(1, self.size + 1):
            if seen[start - 1]:
                continue
            chain = [start]
            seen[start - 1] = True
            nxt = inv[start - 1]
            while nxt != start:
                chain.append(nxt)
                seen[nxt - 1] = True
                nxt = inv[nxt - 1]
            if len(chain) > 1:
                cycles.append("(" + ",".join(str(c) for c in chain) + ")")
        return "".join(cycles) if cycles else "()"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return f"Permutation({list(self._images)})"

    def __str__(self) -> str:
        return self.cycle_string()


class StochasticClass(Enum):
    """Strongest exact stochastic class a nonnegative matrix satisfies."""

    NOT_STOCHASTIC = "NotStochastic"
    ROW_STOCHASTIC = "RowStochastic"
    COLUMN_STOCHASTIC = "ColumnStochastic"
    DOUBLY_STOCHASTIC = "DoublyStochastic"


def classify_stochastic(m: Matrix) -> StochasticClass:
    """Classify with exact sums; any failure of nonnegativity disqualifies.

    Both sum families equal to 1 force a square matrix, so a rectangular
    matrix never classifies doubly stochastic.
    """
    if not m.is_nonnegative():
        return StochasticClass.NOT_STOCHASTIC
    one = Fraction(1)
    row_ok = all(s == one for s in m.row_sums())
    col_ok = all(s == one for s in m.column_sums())
    if row_ok and col_ok:
        return StochasticClass.DOUBLY_STOCHASTIC
    if row_ok:
        return StochasticClass.ROW_STOCHASTIC
    if col_ok:
        return StochasticClass.COLUMN_STOCHASTIC
    return StochasticClass.NOT_STOCHASTIC


def permutation_matrix(sigma: Permutation) -> Matrix:
    """Matrix of a permutation; always doubly stochastic."""
    return sigma.matrix()


def permute_columns(m: Matrix, sigma: Permutation) -> Matrix:
    """Exact ``m @ P_sigma``: column ``j`` of the result is column ``sigma(j)`` of ``m``."""
    if sigma.size != m.ncols:
        raise DimensionMismatch(f"permutation degree {sigma.size} does not match {m.ncols} columns")
    return Matrix((row[sigma(j + 1) - 1] for j in range(m.ncols)) for row in m.rows)


def permute_rows(m: Matrix, tau: Permutation) -> Matrix:
    """Exact ``P_tau @ m``: row ``i`` of the result is row ``tau^{-1}(i)`` of ``m``."""
    if tau.size != m.nrows:
        raise DimensionMismatch(f"permutation degree {tau.size} does not match {m.nrows} rows")
    inv = tau.inverse()
    return Matrix(m.row(inv(i + 1) - 1) for i in range(m.nrows))


def ds2_lambda(m: Matrix) -> Fraction:
    """Recover ``lambda`` from a 2x2 doubly stochastic matrix.

    Every such matrix is ``lambda * I + (1 - lambda) * swap``; the (1,1)
    entry is ``lambda`` and the other three entries are verified against
    it before returning.
    """
    if (m.nrows, m.ncols) != (2, 2):
        raise DimensionMismatch(f"ds2_lambda needs a 2x2 matrix, got {m.nrows}x{m.ncols}")
    if classify_stochastic(m) is not StochasticClass.DOUBLY_STOCHASTIC:
        raise NotDoublyStochastic("ds2_lambda needs an exactly doubly stochastic matrix")
    lam = m.rows[0][0]
    expected = Matrix([[lam, 1 - lam], [1 - lam, lam]])
    if m != expected:
        raise NotDoublyStochastic("2x2 doubly stochastic structure violated")  # unreachable for exact DS
    return lam
