import random
from itertools import permutations
from math import comb

import pytest

from binheight.errors import (
    EnumerationCapExceeded,
    IndexOutOfRange,
    InvalidPresentation,
    NotInKernel,
    ReductionUnavailable,
    UnsupportedConfiguration,
    ZeroGenerator,
)
from binheight.hibi import Poset, presentation as hibi_presentation
from binheight.linalg import IntegerMatrix, minor
from binheight.toric import (
    PERFECT_FIELD_CAVEAT,
    ToricConfiguration,
    ToricIdealPresentation,
    binomial_degree,
    isolated_singularity_by_jacobian,
    jacobian_entry,
    jacobian_generators,
    semigroup_contains,
)
from helpers import labeled_posets, poset_from_relation


def config(rows):
    return ToricConfiguration(IntegerMatrix.from_rows(rows, cols=len(rows[0])))


def conic():
    return ToricIdealPresentation(config([[1, 1, 1], [0, 1, 2]]), ((1, -2, 1),))


def segment_cubed():
    # columns 1, 2, 3 of a one-row configuration; kernel rank 2
    return ToricIdealPresentation(
        config([[1, 2, 3]]), ((2, -1, 0), (3, 0, -1))
    )


def antichain(k):
    return hibi_presentation(Poset(tuple("abcdef"[:k]), ())).toric


class TestConfiguration:
    def test_duplicate_columns_rejected(self):
        with pytest.raises(InvalidPresentation):
            config([[1, 1], [2, 2]])

    def test_rank(self):
        assert config([[1, 1, 1], [0, 1, 2]]).rank == 2
        assert config([[1, 2, 3]]).rank == 1


class TestPresentationValidation:
    def test_generator_outside_kernel(self):
        with pytest.raises(NotInKernel):
            ToricIdealPresentation(
                config([[1, 1, 1], [0, 1, 2]]), ((1, 0, 0),)
            )

    def test_zero_generator(self):
        with pytest.raises(ZeroGenerator):
            ToricIdealPresentation(
                config([[1, 1, 1], [0, 1, 2]]), ((0, 0, 0),)
            )

    def test_rank_deficient_generators(self):
        with pytest.raises(InvalidPresentation):
            ToricIdealPresentation(config([[1, 2, 3]]), ((2, -1, 0),))

    def test_height_is_corank(self):
        assert conic().height == 1
        assert segment_cubed().height == 2
        assert antichain(2).height == 1

    def test_empty_generators_for_full_rank_config(self):
        p = ToricIdealPresentation(config([[1, 0], [0, 1]]), ())
        assert p.height == 0


class TestBinomialDegree:
    def test_conic_generator(self):
        assert binomial_degree(conic(), (1, -2, 1)) == (2, 2)

    def test_quadric_relation(self):
        p = antichain(2)
        (g,) = p.generators
        assert binomial_degree(p, g) == (2, 1, 1)

    def test_zero_vector(self):
        assert binomial_degree(conic(), (0, 0, 0)) == (0, 0)

    def test_positive_and_negative_parts_agree(self):
        p = antichain(3)
        for g in p.generators:
            deg = binomial_degree(p, g)
            plus = tuple(x if x > 0 else 0 for x in g)
            neg = tuple(-x if x < 0 else 0 for x in g)
            assert deg == p.config.apply(plus) == p.config.apply(neg)

    def test_rejects_non_kernel_vector(self):
        with pytest.raises(NotInKernel):
            binomial_degree(conic(), (1, 0, 0))


class TestJacobianEntry:
    def test_conic_entries(self):
        p = conic()
        assert jacobian_entry(p, 0, 0) == (1, (1, 2))
        assert jacobian_entry(p, 0, 1) == (-2, (1, 1))
        assert jacobian_entry(p, 0, 2) == (1, (1, 0))

    def test_zero_coefficient_has_no_exponent(self):
        p = segment_cubed()
        assert jacobian_entry(p, 0, 2) == (0, None)

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            jacobian_entry(conic(), 1, 0)
        with pytest.raises(IndexOutOfRange):
            jacobian_entry(conic(), 0, 3)


class TestJacobianGenerators:
    def test_conic(self):
        r = jacobian_generators(conic())
        assert r.h == 1
        assert set(r.generators) == {(1, 0), (1, 1), (1, 2)}
        assert r.reduced is False

    def test_quadric(self):
        r = jacobian_generators(antichain(2))
        assert set(r.generators) == {
            (1, 0, 0),
            (1, 0, 1),
            (1, 1, 0),
            (1, 1, 1),
        }

    def test_segment_cubed(self):
        r = jacobian_generators(segment_cubed())
        assert r.h == 2
        assert set(r.generators) == {(0,), (1,), (2,)}

    def test_modulus_kills_even_coefficients(self):
        p = ToricIdealPresentation(
            config([[1, 1, 1], [0, 1, 2]]), ((2, -4, 2),)
        )
        assert jacobian_generators(p, modulus=2).generators == ()
        assert set(jacobian_generators(p, modulus=3).generators) == {
            (3, 2),
            (3, 3),
            (3, 4),
        }

    def test_generator_count_bound(self):
        for p in (conic(), segment_cubed(), antichain(2)):
            r = jacobian_generators(p)
            m = len(p.generators)
            n = p.config.matrix.cols
            assert len(r.generators) == comb(m, r.h) * comb(n, r.h)

    def test_cap(self):
        with pytest.raises(EnumerationCapExceeded) as exc:
            jacobian_generators(antichain(2), cap=1)
        assert exc.value.required == 4

    def test_reduce_drops_dominated_monomials(self):
        r = jacobian_generators(segment_cubed(), reduce=True)
        assert r.generators == ((0,),)
        assert r.reduced is True

    def test_reduce_keeps_independent_monomials(self):
        r = jacobian_generators(conic(), reduce=True)
        assert set(r.generators) == {(1, 0), (1, 1), (1, 2)}

    def test_reduce_requires_nonnegative_configuration(self):
        p = ToricIdealPresentation(config([[1, -1]]), ((1, 1),))
        with pytest.raises(ReductionUnavailable):
            jacobian_generators(p, reduce=True)


class TestMinorExpansion:
    """The coefficient products of a generator-set minor expand the plain
    minor of the coefficient matrix, and every nonzero term lands in the
    same degree.
    """

    def sample_pairs(self, p, count, seed):
        rng = random.Random(seed)
        h = p.height
        m = len(p.generators)
        n = p.config.matrix.cols
        for _ in range(count):
            rows = tuple(sorted(rng.sample(range(m), h)))
            cols = tuple(sorted(rng.sample(range(n), h)))
            yield rows, cols

    def check_pair(self, p, rows, cols):
        coeff_matrix = IntegerMatrix.from_rows(
            [list(g) for g in p.generators], cols=p.config.matrix.cols
        )
        expected = minor(coeff_matrix, rows, cols)
        degree_sum = None
        total = 0
        for perm in permutations(range(len(cols))):
            sign = 1
            for i in range(len(perm)):
                for j in range(i + 1, len(perm)):
                    if perm[i] > perm[j]:
                        sign = -sign
            term = 1
            exps = []
            for k, img in enumerate(perm):
                coeff, exp = jacobian_entry(p, rows[k], cols[img])
                term *= coeff
                exps.append(exp)
            if term == 0:
                continue
            total += sign * term
            combined = tuple(
                sum(e[i] for e in exps) for i in range(len(exps[0]))
            )
            if degree_sum is None:
                degree_sum = combined
            else:
                assert combined == degree_sum
        assert total == expected

    def test_conic_all_pairs(self):
        p = conic()
        for j in range(3):
            self.check_pair(p, (0,), (j,))

    def test_antichain_sampled_pairs(self):
        p = antichain(3)
        assert p.height == 4
        for rows, cols in self.sample_pairs(p, 6, seed=71):
            self.check_pair(p, rows, cols)


def brute_force_member(columns, target):
    frontier = {tuple(0 for _ in target)}
    seen = set(frontier)
    while frontier:
        nxt = set()
        for point in frontier:
            if point == tuple(target):
                return True
            for col in columns:
                cand = tuple(a + b for a, b in zip(point, col))
                if cand in seen:
                    continue
                if all(a <= b for a, b in zip(cand, target)):
                    nxt.add(cand)
                    seen.add(cand)
        frontier = nxt
    return tuple(target) in seen or not any(target)


class TestSemigroupMembership:
    def test_quadric_examples(self):
        cfg = antichain(2).config
        assert semigroup_contains(cfg, (1, 1, 1)) is True
        assert semigroup_contains(cfg, (0, 1, 0)) is False

    def test_zero_always_contained(self):
        assert semigroup_contains(conic().config, (0, 0)) is True

    def test_negative_target(self):
        assert semigroup_contains(conic().config, (-1, 0)) is False

    def test_negative_configuration_unsupported(self):
        cfg = config([[1, -1]])
        with pytest.raises(UnsupportedConfiguration):
            semigroup_contains(cfg, (1,))

    def test_zero_column_unsupported(self):
        cfg = config([[0, 1], [0, 1]])
        with pytest.raises(UnsupportedConfiguration):
            semigroup_contains(cfg, (1, 1))

    def test_matches_brute_force(self):
        rng = random.Random(83)
        for _ in range(60):
            height = rng.randrange(1, 4)
            width = rng.randrange(1, min(5, 4**height))
            cols = set()
            while len(cols) < width:
                col = tuple(rng.randrange(0, 4) for _ in range(height))
                if any(col):
                    cols.add(col)
            cols = sorted(cols)
            cfg = ToricConfiguration(
                IntegerMatrix.from_rows(
                    [[c[i] for c in cols] for i in range(height)],
                    cols=width,
                )
            )
            target = tuple(rng.randrange(0, 8) for _ in range(height))
            assert semigroup_contains(cfg, target) == brute_force_member(
                cols, target
            )


class TestIsolatedSingularity:
    def test_conic_is_isolated(self):
        r = isolated_singularity_by_jacobian(conic())
        assert r.verdict is True
        assert r.method == "power-witness"
        assert r.witness_powers == (1, 1, 1)
        assert r.caveat == PERFECT_FIELD_CAVEAT

    def test_quadric_is_isolated(self):
        r = isolated_singularity_by_jacobian(antichain(2))
        assert r.verdict is True

    def test_zero_ideal_reports_regular(self):
        p = ToricIdealPresentation(config([[1, 0], [0, 1]]), ())
        r = isolated_singularity_by_jacobian(p)
        assert r.verdict is False
        assert r.zero_ideal is True
        assert r.method == "zero-ideal"
        assert "regular" in r.note

    def test_negative_configuration_unsupported(self):
        p = ToricIdealPresentation(config([[1, -1]]), ((1, 1),))
        with pytest.raises(UnsupportedConfiguration):
            isolated_singularity_by_jacobian(p)

    def test_face_path_agrees_with_literal_path(self):
        for rel in labeled_posets(3):
            poset = poset_from_relation(3, rel)
            p = hibi_presentation(poset).toric
            literal = isolated_singularity_by_jacobian(p)
            faces = isolated_singularity_by_jacobian(p, literal_pair_limit=0)
            assert literal.verdict is not None
            assert faces.verdict == literal.verdict
            if not faces.zero_ideal:
                assert faces.method == "face-decomposition"

    def test_verdict_false_example(self):
        # one bottom element under two incomparable tops
        poset = Poset(("p", "q", "r"), (("p", "q"), ("p", "r")))
        r = isolated_singularity_by_jacobian(hibi_presentation(poset).toric)
        assert r.verdict is False
