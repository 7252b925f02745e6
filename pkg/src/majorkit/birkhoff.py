"""Birkhoff-von Neumann decomposition by greedy peeling.

Any doubly stochastic matrix is a convex combination of permutation
matrices.  The constructive route: find a perfect matching on the
support (every column matched to a row holding a positive entry),
subtract ``weight * P_sigma`` where ``weight`` is the smallest matched
entry, and repeat on the residual.  Each peel zeroes at least one
support entry while the rescaled residual stays doubly stochastic, so
the loop terminates -- in at most ``n**2 - 2n + 2`` terms -- and the
weights sum to exactly 1.

Matchings are deterministic: columns are processed in increasing order,
greedily taking the lowest-index free positive row first, then repaired
with lowest-index augmenting paths.  On a uniform matrix this picks the
identity, and on a permutation matrix it returns that permutation, so
decompositions are reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Matrix
from .errors import DimensionMismatch, NotDoublyStochastic
from .stochastic import Permutation, StochasticClass, classify_stochastic

__all__ = [
    "BirkhoffDecomposition",
    "birkhoff_decompose",
    "reconstruct",
    "support_permutation",
]


def _support_matching(positive_rows: list[list[int]]) -> list[int] | None:
    """Perfect matching column -> row on the support, or None.

    ``positive_rows[j]`` lists (ascending) the rows with a positive entry
    in column ``j``.  Greedy pass first, then Kuhn augmenting paths with
    rows tried in increasing order; both passes are deterministic.
    """
    n = len(positive_rows)
    row_of_col = [-1] * n
    col_of_row = [-1] * n
    for j in range(n):
        for i in positive_rows[j]:
            if col_of_row[i] == -1:
                col_of_row[i] = j
                row_of_col[j] = i
                break

    def augment(j: int, seen: list[bool]) -> bool:
        for i in positive_rows[j]:
            if seen[i]:
                continue
            seen[i] = True
            if col_of_row[i] == -1 or augment(col_of_row[i], seen):
                col_of_row[i] = j
                row_of_col[j] = i
                return True
        return False

    for j in range(n):
        if row_of_col[j] == -1 and not augment(j, [False] * n):
            return None
    return row_of_col


def support_permutation(m: Matrix) -> Permutation:
    """A permutation ``sigma`` with ``m[sigma(j)][j] > 0`` for every column ``j``.

    Exists for every doubly stochastic matrix; the deterministic matching
    rules make the choice canonical (identity on a uniform matrix).
    """
    if classify_stochastic(m) is not StochasticClass.DOUBLY_STOCHASTIC:
        raise NotDoublyStochastic("support_permutation needs an exactly doubly stochastic matrix")
    rows_by_col = [[i for i in range(m.nrows) if m.rows[i][j] > 0] for j in range(m.ncols)]
    matched = _support_matching(rows_by_col)
    assert matched is not None  # guaranteed for doubly stochastic input
    return _matching_to_permutation(matched)


def _matching_to_permutation(row_of_col: list[int]) -> Permutation:
    images = [0] * len(row_of_col)
    for j, i in enumerate(row_of_col):
        images[j] = i + 1  # sigma(j) = matched row
    return Permutation(images)


@dataclass(frozen=True)
class BirkhoffDecomposition:
    """Convex combination of permutation matrices: ``sum w * P_sigma``."""

    size: int
    terms: tuple[tuple[Fraction, Permutation], ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("a decomposition needs at least one term")
        if any(w <= 0 for w, _ in self.terms):
            raise ValueError("all weights must be positive")
        if sum(w for w, _ in self.terms) != 1:
            raise ValueError("weights must sum to exactly 1")
        if any(p.size != self.size for _, p in self.terms):
            raise DimensionMismatch("every permutation must match the decomposition size")
        bound = self.size * self.size - 2 * self.size + 2
        if len(self.terms) > bound:
            raise ValueError(f"{len(self.terms)} terms exceed the n^2-2n+2 bound ({bound})")

    def matrix(self) -> Matrix:
        return reconstruct(self.terms, self.size)


def birkhoff_decompose(m: Matrix) -> BirkhoffDecomposition:
    """Peel a doubly stochastic matrix into weighted permutations."""
    if classify_stochastic(m) is not StochasticClass.DOUBLY_STOCHASTIC:
        raise NotDoublyStochastic("birkhoff_decompose needs an exactly doubly stochastic matrix")
    n = m.nrows
    residual = [list(row) for row in m.rows]
    terms: list[tuple[Fraction, Permutation]] = []
    remaining = Fraction(1)
    while remaining > 0:
        rows_by_col = [[i for i in range(n) if residual[i][j] > 0] for j in range(n)]
        matched = _support_matching(rows_by_col)
        assert matched is not None  # residual/remaining stays doubly stochastic
        weight = min(residual[matched[j]][j] for j in range(n))
        for j in range(n):
            residual[matched[j]][j] -= weight
        terms.append((weight, _matching_to_permutation(matched)))
        remaining -= weight
    assert all(e == 0 for row in residual for e in row)
    return BirkhoffDecomposition(size=n, terms=tuple(terms))


def reconstruct(
    terms: BirkhoffDecomposition | tuple[tuple[Fraction, Permutation], ...] | list[tuple[Fraction, Permutation]],
    size: int | None = None,
) -> Matrix:
    """Exact ``sum w * P_sigma`` for a decomposition or raw term list."""
    if isinstance(terms, BirkhoffDecomposition):
        size = terms.size if size is None else size
        terms = terms.terms
    term_list = list(terms)
    if not term_list:
        raise ValueError("cannot reconstruct from zero terms")
    if size is None:
        size = term_list[0][1].size
    if any(p.size != size for _, p in term_list):
        raise DimensionMismatch("term permutation degree does not match the requested size")
    acc = [[Fraction(0)] * size for _ in range(size)]
    for weight, perm in term_list:
        for j in range(size):
            acc[perm(j + 1) - 1][j] += weight
    return Matrix(acc)
