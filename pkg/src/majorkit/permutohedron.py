"""Permutohedra: vertex orbits, affine dimension, and membership certificates.

The permutohedron of a base vector ``a`` is the convex hull of all
coordinate permutations of ``a``.  Membership of a nonnegative point
``b`` is equivalent to ``b`` ⪯ ``a``, and a constructive certificate is
the pipeline: transfer chain from ``a`` to ``b``, compose it into one
doubly stochastic matrix, peel that matrix into permutations.  The
resulting convex combination of vertices equals ``b`` exactly.

Orbits under a *generated subgroup* of permutations are supported for
vertex enumeration (with a hard element cap), but membership is decided
only for the full symmetric group -- subgroup membership is a different
theory and is refused rather than approximated.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .birkhoff import birkhoff_decompose
from .core import Vector
from .errors import (
    DimensionMismatch,
    GroupTooLarge,
    NegativeInput,
    NotMember,
    SubgroupUnsupported,
)
from .majorization import majorizes
from .stochastic import Permutation
from .transform import transfer_chain

__all__ = [
    "DEFAULT_GROUP_CAP",
    "MembershipCertificate",
    "PermutohedronSpec",
    "affine_dimension",
    "evaluate_certificate",
    "generate_group",
    "is_member",
    "membership_certificate",
    "on_hyperplane",
    "vertices",
]

DEFAULT_GROUP_CAP = math.factorial(10)


@dataclass(frozen=True)
class PermutohedronSpec:
    """Base vector plus the acting group.

    ``generators=None`` means the full symmetric group on the base's
    coordinates; otherwise the subgroup generated by the given
    permutations.
    """

    base: Vector
    generators: tuple[Permutation, ...] | None = None

    def __post_init__(self) -> None:
        if self.generators is not None:
            object.__setattr__(self, "generators", tuple(self.generators))
            for g in self.generators:
                if g.size != len(self.base):
                    raise DimensionMismatch(
                        f"generator degree {g.size} does not match base length {len(self.base)}"
                    )


@dataclass(frozen=True)
class MembershipCertificate:
    """Convex combination of vertex permutations witnessing membership."""

    terms: tuple[tuple[Fraction, Permutation], ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("a certificate needs at least one term")
        if any(w <= 0 for w, _ in self.terms):
            raise ValueError("certificate weights must be positive")
        if sum(w for w, _ in self.terms) != 1:
            raise ValueError("certificate weights must sum to exactly 1")


def generate_group(
    generators: Iterable[Permutation],
    cap: int = DEFAULT_GROUP_CAP,
    degree: int | None = None,
) -> set[Permutation]:
    """Closure of the generators under composition (always contains the identity).

    Finite groups make one-sided products sufficient.  Exceeding ``cap``
    elements raises :class:`GroupTooLarge`.  An empty generator list
    yields the trivial group, but then ``degree`` must say how many
    points the identity acts on.
    """
    gens = list(generators)
    if not gens:
        if degree is None:
            raise ValueError("an empty generator list needs an explicit degree")
        return {Permutation.identity(degree)}
    n = gens[0].size
    if degree is not None and degree != n:
        raise DimensionMismatch(f"degree {degree} does not match generator degree {n}")
    if any(g.size != n for g in gens):
        raise DimensionMismatch("generators must share one degree")
    identity = Permutation.identity(n)
    group = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in group:
                    group.add(y)
                    fresh.append(y)
                    if len(group) > cap:
                        raise GroupTooLarge(f"generated group exceeds cap of {cap} elements")
        frontier = fresh
    return group


def vertices(spec: PermutohedronSpec, cap: int = DEFAULT_GROUP_CAP) -> set[Vector]:
    """All distinct images of the base under the acting group."""
    base = spec.base
    n = len(base)
    if spec.generators is None:
        if math.factorial(n) > cap:
            raise GroupTooLarge(f"S_{n} has {math.factorial(n)} elements, over the cap of {cap}")
        return {Vector(p) for p in itertools.permutations(base.entries)}
    group = generate_group(spec.generators, cap, degree=n)
    return {g.act(base) for g in group}


def on_hyperplane(x: Vector, spec: PermutohedronSpec) -> bool:
    """Whether ``x`` lies on the coordinate-sum hyperplane of the base."""
    if len(x) != len(spec.base):
        raise DimensionMismatch(f"vector lengths differ: {len(x)} vs {len(spec.base)}")
    return x.sum() == spec.base.sum()


def _bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    work = [row[:] for row in rows]
    nrows = len(work)
    if nrows == 0:
        return 0
    ncols = len(work[0])
    rank = 0
    pivot_row = 0
    prev = 1
    for col in range(ncols):
        sel = next((r for r in range(pivot_row, nrows) if work[r][col] != 0), None)
        if sel is None:
            continue
        work[pivot_row], work[sel] = work[sel], work[pivot_row]
        piv = work[pivot_row][col]
        for r in range(pivot_row + 1, nrows):
            factor = work[r][col]
            row = work[r]
            top = work[pivot_row]
            for c in range(col, ncols):
                row[c] = (piv * row[c] - factor * top[c]) // prev  # division is exact
        prev = piv
        pivot_row += 1
        rank += 1
        if pivot_row == nrows:
            break
    return rank


def affine_dimension(points: Sequence[Vector]) -> int:
    """Dimension of the affine hull of the points, computed exactly.

    Each difference from the first point is cleared of denominators and
    the integer rank is taken fraction-free, so the result does not
    depend on the basepoint or on the order of the points.
    """
    pts = list(points)
    if not pts:
        raise ValueError("affine dimension needs at least one point")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatch("all points must share one dimension")
    base = pts[0]
    int_rows = []
    for p in pts[1:]:
        diff = [x - y for x, y in zip(p, base)]
        scale = math.lcm(*(d.denominator for d in diff)) if diff else 1
        int_rows.append([int(d * scale) for d in diff])
    if not int_rows:
        return 0
    return _bareiss_rank(int_rows)


def is_member(spec: PermutohedronSpec, b: Vector) -> bool:
    """Exact membership test; only the full symmetric group is decided."""
    if spec.generators is not None:
        raise SubgroupUnsupported("membership is only decided for the full symmetric group")
    a = spec.base
    if len(a) != len(b):
        raise DimensionMismatch(f"vector lengths differ: {len(a)} vs {len(b)}")
    if not (a.is_nonnegative() and b.is_nonnegative()):
        raise NegativeInput("membership is defined here for nonnegative vectors")
    return majorizes(a, b)


def membership_certificate(spec: PermutohedronSpec, b: Vector) -> MembershipCertificate:
    """Constructive proof of membership as a convex combination of vertices.

    Runs the transfer chain from the base to ``b``, composes it into one
    doubly stochastic matrix, and peels that matrix into permutations;
    the returned terms satisfy ``sum w * P_sigma(base) == b`` exactly.
    """
    if not is_member(spec, b):
        raise NotMember("the point is not majorized by the base, hence outside the permutohedron")
    chain = transfer_chain(spec.base, b)
    decomposition = birkhoff_decompose(chain.matrix())
    return MembershipCertificate(terms=decomposition.terms)


def evaluate_certificate(certificate: MembershipCertificate, a: Vector) -> Vector:
    """Exact value of ``sum w * P_sigma(a)`` over the certificate terms."""
    n = len(a)
    if any(p.size != n for _, p in certificate.terms):
        raise DimensionMismatch("certificate permutations do not match the vector length")
    total = Vector([Fraction(0)] * n)
    for weight, perm in certificate.terms:
        total = total + weight * perm.act(a)
    return total
