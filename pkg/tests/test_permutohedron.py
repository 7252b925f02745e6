"""Permutohedron orbits, affine dimension, and membership certificates."""

import itertools
import random
from fractions import Fraction

import pytest
import sympy

import _gen
from majorkit import (
    DimensionMismatch,
    GroupTooLarge,
    MembershipCertificate,
    NegativeInput,
    NotMember,
    Permutation,
    PermutohedronSpec,
    SubgroupUnsupported,
    Vector,
    affine_dimension,
    evaluate_certificate,
    generate_group,
    is_member,
    membership_certificate,
    on_hyperplane,
    vertices,
)


def gauss_rank(rows):
    """Plain Fraction Gaussian elimination; an independent rank oracle."""
    work = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    col = 0
    while work and col < len(work[0]):
        pivot = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if pivot is not None:
            work[rank], work[pivot] = work[pivot], work[rank]
            lead = work[rank][col]
            for r in range(rank + 1, len(work)):
                factor = work[r][col] / lead
                work[r] = [x - factor * y for x, y in zip(work[r], work[rank])]
            rank += 1
        col += 1
    return rank


class TestVertices:
    def test_classical_hexagon(self):
        spec = PermutohedronSpec(base=Vector([1, 2, 3]))
        points = vertices(spec)
        expected = {
            Vector([1, 2, 3]),
            Vector([1, 3, 2]),
            Vector([2, 1, 3]),
            Vector([2, 3, 1]),
            Vector([3, 1, 2]),
            Vector([3, 2, 1]),
        }
        assert points == expected

    def test_constant_base_collapses(self):
        spec = PermutohedronSpec(base=Vector([4, 4, 4]))
        assert vertices(spec) == {Vector([4, 4, 4])}

    def test_repeated_entries_shrink_the_orbit(self):
        spec = PermutohedronSpec(base=Vector([1, 1, 2]))
        assert len(vertices(spec)) == 3

    def test_cyclic_subgroup_orbit(self):
        gen = Permutation([2, 3, 1])  # 1->2->3->1
        spec = PermutohedronSpec(base=Vector([1, 2, 3]), generators=(gen,))
        points = vertices(spec)
        assert len(points) == 3
        assert points <= vertices(PermutohedronSpec(base=Vector([1, 2, 3])))

    def test_trivial_subgroup(self):
        spec = PermutohedronSpec(base=Vector([1, 2, 3]), generators=())
        assert vertices(spec) == {Vector([1, 2, 3])}

    def test_cap_enforced(self):
        spec = PermutohedronSpec(base=Vector(range(1, 9)))
        with pytest.raises(GroupTooLarge):
            vertices(spec, cap=100)

    def test_generator_degree_checked(self):
        with pytest.raises(DimensionMismatch):
            PermutohedronSpec(base=Vector([1, 2, 3]), generators=(Permutation([2, 1]),))

    def test_all_vertices_on_the_hyperplane(self):
        rng = random.Random(600)
        for _ in range(30):
            n = rng.randint(1, 5)
            spec = PermutohedronSpec(base=_gen.nonneg_vector(rng, n))
            for p in vertices(spec):
                assert on_hyperplane(p, spec)


class TestGenerateGroup:
    def test_empty_generators_give_trivial_group(self):
        assert generate_group([], degree=3) == {Permutation.identity(3)}
        with pytest.raises(ValueError):
            generate_group([])

    def test_n_cycle_generates_cyclic_group(self):
        for n in range(2, 7):
            images = list(range(2, n + 1)) + [1]
            group = generate_group([Permutation(images)])
            assert len(group) == n

    def test_transpositions_generate_everything(self):
        for n in range(2, 6):
            gens = []
            for k in range(2, n + 1):
                images = list(range(1, n + 1))
                images[0], images[k - 1] = images[k - 1], images[0]
                gens.append(Permutation(images))
            group = generate_group(gens)
            assert len(group) == len(set(itertools.permutations(range(1, n + 1))))

    def test_contains_identity_and_closed(self):
        rng = random.Random(601)
        for _ in range(20):
            n = rng.randint(2, 5)
            gens = [_gen.permutation(rng, n) for _ in range(rng.randint(1, 2))]
            group = generate_group(gens)
            assert Permutation.identity(n) in group
            for x in group:
                for y in group:
                    assert x * y in group

    def test_cap(self):
        gens = [Permutation([2, 1, 3, 4]), Permutation([1, 2, 4, 3]), Permutation([2, 3, 4, 1])]
        with pytest.raises(GroupTooLarge):
            generate_group(gens, cap=5)


class TestOnHyperplane:
    def test_examples(self):
        spec = PermutohedronSpec(base=Vector([1, 2, 3]))
        assert on_hyperplane(Vector([3, 2, 1]), spec)
        assert on_hyperplane(Vector([2, 2, 2]), spec)
        assert not on_hyperplane(Vector([2, 2, 3]), spec)
        with pytest.raises(DimensionMismatch):
            on_hyperplane(Vector([1, 2]), spec)


class TestAffineDimension:
    def test_hexagon_is_flat(self):
        points = sorted(vertices(PermutohedronSpec(base=Vector([1, 2, 3]))), key=lambda v: v.entries)
        assert affine_dimension(points) == 2

    def test_single_and_repeated_points(self):
        assert affine_dimension([Vector([1, 2])]) == 0
        assert affine_dimension([Vector([1, 2]), Vector([1, 2])]) == 0

    def test_transposition_witness_set(self):
        # (1,2,...,n) plus its first-coordinate swaps spans the hyperplane
        n = 4
        base = list(range(1, n + 1))
        points = [Vector(base)]
        for k in range(2, n + 1):
            swapped = base[:]
            swapped[0], swapped[k - 1] = swapped[k - 1], swapped[0]
            points.append(Vector(swapped))
        assert affine_dimension(points) == n - 1

    def test_basepoint_independence(self):
        rng = random.Random(602)
        for _ in range(50):
            count = rng.randint(1, 6)
            n = rng.randint(1, 5)
            points = [_gen.vector(rng, n, lo=-3, hi=3, max_den=4) for _ in range(count)]
            reference = affine_dimension(points)
            shuffled = points[:]
            rng.shuffle(shuffled)
            assert affine_dimension(shuffled) == reference

    def test_against_sympy_and_plain_gauss(self):
        rng = random.Random(603)
        for _ in range(60):
            count = rng.randint(1, 6)
            n = rng.randint(1, 5)
            points = [_gen.vector(rng, n, lo=-3, hi=3, max_den=4) for _ in range(count)]
            if rng.random() < 0.3:
                points.append(points[0])  # force degeneracy sometimes
            diffs = [[x - y for x, y in zip(p, points[0])] for p in points[1:]]
            expected = sympy.Matrix(diffs).rank() if diffs else 0
            assert affine_dimension(points) == expected
            assert affine_dimension(points) == gauss_rank(diffs)

    def test_errors(self):
        with pytest.raises(ValueError):
            affine_dimension([])
        with pytest.raises(DimensionMismatch):
            affine_dimension([Vector([1]), Vector([1, 2])])


class TestMembership:
    def test_worked_examples(self):
        assert is_member(PermutohedronSpec(base=Vector([7, 3, 2])), Vector([5, 4, 3]))
        assert is_member(PermutohedronSpec(base=Vector([1, 0, 0])), Vector(["1/3", "1/3", "1/3"]))
        assert not is_member(PermutohedronSpec(base=Vector([7, 5, 1])), Vector([8, 3, 2]))

    def test_subgroups_are_refused(self):
        spec = PermutohedronSpec(base=Vector([1, 2, 3]), generators=(Permutation([2, 3, 1]),))
        with pytest.raises(SubgroupUnsupported):
            is_member(spec, Vector([2, 2, 2]))

    def test_negative_input_refused(self):
        with pytest.raises(NegativeInput):
            is_member(PermutohedronSpec(base=Vector([1, -1])), Vector([0, 0]))
        with pytest.raises(NegativeInput):
            is_member(PermutohedronSpec(base=Vector([1, 1])), Vector([3, -1]))

    def test_certificate_golden_half_average(self):
        cert = membership_certificate(PermutohedronSpec(base=Vector([1, 0])), Vector(["1/2", "1/2"]))
        assert cert.terms == (
            (Fraction(1, 2), Permutation.identity(2)),
            (Fraction(1, 2), Permutation([2, 1])),
        )

    def test_certificate_golden_worked_example(self):
        a = Vector([7, 3, 2])
        cert = membership_certificate(PermutohedronSpec(base=a), Vector([5, 4, 3]))
        assert [(w, p.images) for w, p in cert.terms] == [
            (Fraction(9, 16), (1, 2, 3)),
            (Fraction(3, 16), (2, 1, 3)),
            (Fraction(1, 16), (2, 3, 1)),
            (Fraction(3, 16), (3, 2, 1)),
        ]
        assert evaluate_certificate(cert, a) == Vector([5, 4, 3])

    def test_vertex_certificates_are_single_terms(self):
        rng = random.Random(604)
        for _ in range(50):
            n = rng.randint(1, 6)
            a = _gen.nonneg_vector(rng, n)
            b = _gen.permutation(rng, n).act(a)
            cert = membership_certificate(PermutohedronSpec(base=a), b)
            assert len(cert.terms) == 1
            assert cert.terms[0][0] == 1
            assert cert.terms[0][1].act(a) == b

    def test_random_round_trips(self):
        rng = random.Random(605)
        for _ in range(150):
            n = rng.randint(1, 6)
            a = _gen.nonneg_vector(rng, n)
            # convex combination of permuted copies of a is always a member
            weights = _gen.convex_weights(rng, rng.randint(1, n))
            b = Vector([Fraction(0)] * n)
            for w in weights:
                b = b + w * _gen.permutation(rng, n).act(a)
            spec = PermutohedronSpec(base=a)
            assert is_member(spec, b)
            cert = membership_certificate(spec, b)
            assert sum(w for w, _ in cert.terms) == 1
            assert all(w > 0 for w, _ in cert.terms)
            assert evaluate_certificate(cert, a) == b

    def test_incomparable_points_are_rejected(self):
        rng = random.Random(606)
        for _ in range(50):
            n = rng.randint(3, 6)
            a, b = _gen.incomparable_pair(rng, n)
            spec = PermutohedronSpec(base=a)
            assert not is_member(spec, b)
            with pytest.raises(NotMember):
                membership_certificate(spec, b)

    def test_evaluate_certificate_examples(self):
        a = Vector([5, 1])
        single = MembershipCertificate(terms=((Fraction(1), Permutation.identity(2)),))
        assert evaluate_certificate(single, a) == a
        with pytest.raises(DimensionMismatch):
            evaluate_certificate(single, Vector([1, 2, 3]))

    def test_certificate_validation(self):
        e = Permutation.identity(2)
        with pytest.raises(ValueError):
            MembershipCertificate(terms=((Fraction(1, 2), e),))
        with pytest.raises(ValueError):
            MembershipCertificate(terms=())
