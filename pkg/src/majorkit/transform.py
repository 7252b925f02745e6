"""Constructive transfer chains between comparable vectors.

A single *T-transform* averages two coordinates: with weight ``w`` it
replaces ``(x_k, x_l)`` by ``(w*x_k + (1-w)*x_l, (1-w)*x_k + w*x_l)`` and
leaves everything else alone.  Its matrix is doubly stochastic, and a
classical construction (Hardy-Littlewood-Polya) turns any majorization
``b`` ⪯ ``a`` of nonnegative vectors into a chain of at most ``n - 1``
such transforms carrying the decreasing rearrangement of ``a`` onto that
of ``b``:

* ``l`` = the first position where the target exceeds the current vector,
* ``k`` = the last position before ``l`` where it still falls short,
* move ``delta = min(a_k - b_k, b_l - a_l)`` from position ``k`` to ``l``.

Each step fixes at least one coordinate for good (the Hamming distance
to the target drops by 1 or 2 and never passes through 1), giving the
``n - 1`` bound.  Composing the chain with the sorting permutations on
both ends yields one exact doubly stochastic matrix mapping the source
to the target.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Matrix, Vector
from .errors import DimensionMismatch, NegativeInput, NotDecreasing, NotMajorized
from .majorization import Relation, compare, decreasing_rearrangement
from .stochastic import Permutation

__all__ = [
    "TTransform",
    "TransformChain",
    "t_transform_weight",
    "transfer_chain",
    "transfer_step",
]


def t_transform_weight(a_k: Fraction, a_l: Fraction, c_k: Fraction, c_l: Fraction) -> Fraction:
    """Weight of the T-transform sending ``(a_k, a_l)`` to ``(c_k, c_l)``.

    Requires ``a_l + a_k == c_l + c_k`` and ``a_l < c_l <= c_k < a_k``;
    then ``(c_k - a_l)/(a_k - a_l)`` and ``(a_k - c_l)/(a_k - a_l)``
    coincide and lie strictly between 0 and 1.
    """
    if a_l + a_k != c_l + c_k:
        raise ValueError("transfer must preserve the pair sum")
    if not (a_l < c_l <= c_k < a_k):
        raise ValueError("transfer needs a_l < c_l <= c_k < a_k")
    weight = (c_k - a_l) / (a_k - a_l)
    assert weight == (a_k - c_l) / (a_k - a_l)
    return weight


@dataclass(frozen=True)
class TTransform:
    """One averaging step on coordinates ``k < l`` (1-based) in dimension ``size``."""

    k: int
    l: int
    weight: Fraction
    size: int

    def __post_init__(self) -> None:
        if not 1 <= self.k < self.l <= self.size:
            raise ValueError(f"need 1 <= k < l <= n, got k={self.k}, l={self.l}, n={self.size}")
        if not 0 <= self.weight <= 1:
            raise ValueError(f"weight must lie in [0, 1], got {self.weight}")

    def matrix(self) -> Matrix:
        """Identity except for the 2x2 averaging block; doubly stochastic."""
        w = self.weight
        rows = [[Fraction(1) if i == j else Fraction(0) for j in range(self.size)] for i in range(self.size)]
        k, l = self.k - 1, self.l - 1
        rows[k][k] = rows[l][l] = w
        rows[k][l] = rows[l][k] = 1 - w
        return Matrix(rows)

    def apply(self, v: Vector) -> Vector:
        """Apply without building the matrix (only two entries change)."""
        if len(v) != self.size:
            raise DimensionMismatch(f"vector length {len(v)} does not match transform size {self.size}")
        w = self.weight
        k, l = self.k - 1, self.l - 1
        out = list(v.entries)
        out[k] = w * v[k] + (1 - w) * v[l]
        out[l] = (1 - w) * v[k] + w * v[l]
        return Vector(out)


def transfer_step(a: Vector, b: Vector) -> tuple[Vector, TTransform]:
    """One pivot step from ``a`` toward ``b`` (both decreasing, ``b`` ⪯ ``a``).

    Returns ``(c, t)`` with ``t.apply(a) == c``, ``b`` ⪯ ``c`` ⪯ ``a``,
    and the Hamming distance to ``b`` reduced by 1 or 2.
    """
    if len(a) != len(b):
        raise DimensionMismatch(f"vector lengths differ: {len(a)} vs {len(b)}")
    if not a.is_decreasing() or not b.is_decreasing():
        raise NotDecreasing("transfer_step needs both vectors in decreasing order")
    if not (a.is_nonnegative() and b.is_nonnegative()):
        raise NegativeInput("transfer_step needs nonnegative vectors")
    if a == b:
        raise ValueError("vectors are equal; no step to take")
    if compare(a, b).relation not in (Relation.EQUAL, Relation.LEFT_MAJORIZES_RIGHT):
        raise NotMajorized("target is not majorized by the source")
    l = next(i for i in range(len(a)) if b[i] > a[i])
    k = max(i for i in range(l) if b[i] < a[i])
    delta = min(a[k] - b[k], b[l] - a[l])
    out = list(a.entries)
    out[k] -= delta
    out[l] += delta
    c = Vector(out)
    weight = t_transform_weight(a[k], a[l], c[k], c[l])
    return c, TTransform(k + 1, l + 1, weight, len(a))


@dataclass(frozen=True)
class TransformChain:
    """A certified route from ``source`` to ``target``.

    Apply ``pre_sort``'s matrix, then every step in order, then the
    inverse of ``post_sort``'s matrix: that carries ``source`` exactly to
    ``target``.  ``matrix()`` composes the whole thing into one doubly
    stochastic matrix.
    """

    source: Vector
    target: Vector
    pre_sort: Permutation
    post_sort: Permutation
    steps: tuple[TTransform, ...]

    def trajectory(self) -> list[Vector]:
        """Sorted intermediates, from sorted source to sorted target inclusive."""
        current = self.pre_sort.act(self.source)
        out = [current]
        for step in self.steps:
            current = step.apply(current)
            out.append(current)
        return out

    def matrix(self) -> Matrix:
        """Exact composition ``P_post^-1 . (T_m ... T_1) . P_pre``.

        Multiplied structurally: a T-transform on the left only blends
        two rows, and the outer permutations only shuffle rows, so no
        dense product is ever formed.
        """
        rows = [list(r) for r in self.pre_sort.matrix().rows]
        for step in self.steps:
            w = step.weight
            k, l = step.k - 1, step.l - 1
            row_k, row_l = rows[k], rows[l]
            rows[k] = [w * x + (1 - w) * y for x, y in zip(row_k, row_l)]
            rows[l] = [(1 - w) * x + w * y for x, y in zip(row_k, row_l)]
        # left-multiplying by P_tau^-1 places row tau(i) of the operand at row i
        return Matrix(rows[self.post_sort(i) - 1] for i in range(1, self.post_sort.size + 1))

    def verify(self) -> bool:
        """Recompute the route and check it lands exactly on ``target``."""
        current = self.trajectory()[-1]
        return self.post_sort.inverse().act(current) == self.target


def transfer_chain(a: Vector, b: Vector) -> TransformChain:
    """Build the full chain certifying ``b`` ⪯ ``a`` for nonnegative vectors.

    Raises :class:`NotMajorized` if ``b`` is not majorized by ``a`` and
    :class:`NegativeInput` on negative entries.  ``a == b`` as multisets
    yields zero steps and a pure permutation certificate.
    """
    if len(a) != len(b):
        raise DimensionMismatch(f"vector lengths differ: {len(a)} vs {len(b)}")
    if not (a.is_nonnegative() and b.is_nonnegative()):
        raise NegativeInput("transfer chains are defined for nonnegative vectors")
    if compare(a, b).relation not in (Relation.EQUAL, Relation.LEFT_MAJORIZES_RIGHT):
        raise NotMajorized("target is not majorized by the source")
    a_sorted, pre_sort = decreasing_rearrangement(a)
    b_sorted, post_sort = decreasing_rearrangement(b)
    steps = []
    current = a_sorted
    while current != b_sorted:
        current, step = transfer_step(current, b_sorted)
        steps.append(step)
    return TransformChain(source=a, target=b, pre_sort=pre_sort, post_sort=post_sort, steps=tuple(steps))
