"""Free noncommutative polynomials and truncated quotients."""

import math
import random

import pytest

from qminkowski.errors import DegreeError
from qminkowski.exact import I, ONE, Scalar, ZERO
from qminkowski.qalgebra import NCPoly, all_words, build_quotient


def x(i):
    return NCPoly.gen(i)


def rand_poly(rng, gens=3, maxdeg=2, terms=4):
    p = NCPoly.zero()
    for _ in range(terms):
        w = tuple(rng.randrange(gens) for _ in range(rng.randint(0, maxdeg)))
        p = p + NCPoly.from_word(w).scale(Scalar(rng.randint(-3, 3),
                                                 rng.randint(-3, 3)))
    return p


def comm_relations(gens):
    """x_j x_i - x_i x_j for i < j."""
    return [x(j) * x(i) - x(i) * x(j)
            for i in range(gens) for j in range(i + 1, gens)]


def test_ncpoly_ring_axioms():
    rng = random.Random(21)
    for _ in range(25):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a * NCPoly.one() == a
        assert NCPoly.one() * a == a
        assert a - a == NCPoly.zero()


def test_ncpoly_words_concatenate():
    p = x(0) * x(1)
    assert p.terms == {(0, 1): ONE}
    assert x(1) * x(0) != p
    assert NCPoly.from_word((2, 0, 1)).degree() == 3
    assert NCPoly.zero().degree() == -1 or NCPoly.zero().is_zero()


def test_star_is_antimultiplicative():
    rng = random.Random(22)
    for _ in range(15):
        a, b = rand_poly(rng), rand_poly(rng)
        assert (a * b).star() == b.star() * a.star()
        assert a.star().star() == a
    p = x(0).scale(I)
    assert p.star() == x(0).scale(-I)
    # relabeling map is applied letterwise
    q = (x(0) * x(1)).star(lambda g: g + 2)
    assert q == x(3) * x(2)


def test_all_words_count():
    assert len(list(all_words(4, 3))) == 64
    assert list(all_words(2, 1)) == [(0,), (1,)]


# --- quotients -----------------------------------------------------------------


def test_commutative_quotient_profile_and_basis():
    q = build_quotient(3, comm_relations(3), 4)
    # polynomial algebra in 3 variables
    assert q.dimension_profile() == [math.comb(n + 2, 2) for n in range(5)]
    for w in q.basis(2):
        assert tuple(sorted(w)) == w
    assert q.normal_form(x(2) * x(0)) == x(0) * x(2)


def test_normal_form_is_canonical():
    rels = comm_relations(3)
    q = build_quotient(3, rels, 4)
    rng = random.Random(23)
    for _ in range(20):
        p = rand_poly(rng, gens=3, maxdeg=4)
        n1 = q.normal_form(p)
        # idempotent
        assert q.normal_form(n1) == n1
    for _ in range(10):
        a = rand_poly(rng, gens=3, maxdeg=2)
        b = rand_poly(rng, gens=3, maxdeg=2)
        # compatible with multiplication
        assert q.normal_form(a * b) == \
            q.normal_form(q.normal_form(a) * q.normal_form(b))


def test_relation_order_does_not_matter():
    rels = comm_relations(3)
    rng = random.Random(24)
    base = build_quotient(3, rels, 3)
    for _ in range(5):
        shuffled = rels[:]
        rng.shuffle(shuffled)
        q = build_quotient(3, shuffled, 3)
        assert q.dimension_profile() == base.dimension_profile()
        assert list(q.basis(2)) == list(base.basis(2))
        p = rand_poly(rng, gens=3, maxdeg=3)
        assert q.normal_form(p) == base.normal_form(p)


def test_degree_one_relation_kills_generator():
    q = build_quotient(3, [x(0)], 3)
    assert q.dimension_profile() == [1, 2, 4, 8]
    assert q.normal_form(x(1) * x(0) * x(2)).is_zero()
    assert not q.is_basis_word((0,))


def test_inhomogeneous_relations():
    # x0 x1 = 1 identifies the two generators as mutual inverses
    q = build_quotient(2, [x(0) * x(1) - NCPoly.one()], 4)
    assert q.normal_form(x(0) * x(1)) == NCPoly.one()
    # Weyl-like relation keeps the ordered-monomial basis
    w = build_quotient(2, [x(1) * x(0) - x(0) * x(1) - NCPoly.one()], 4)
    assert w.dimension_profile() == [1, 2, 3, 4, 5]
    assert w.normal_form(x(1) * x(0)) == x(0) * x(1) + NCPoly.one()
    # double substitution reaches a fixed point
    p = x(1) * x(1) * x(0)
    assert w.normal_form(w.normal_form(p)) == w.normal_form(p)


def test_zero_and_duplicate_relations_are_harmless():
    rels = comm_relations(2) + [NCPoly.zero()] + comm_relations(2)
    q = build_quotient(2, rels, 3)
    assert q.dimension_profile() == [1, 2, 3, 4]


def test_degree_errors():
    with pytest.raises(DegreeError):
        build_quotient(2, [], 1)          # cap below relation degree
    with pytest.raises(DegreeError):
        build_quotient(2, [x(0) * x(0) * x(1)], 4)   # cubic relation
    q = build_quotient(2, comm_relations(2), 3)
    with pytest.raises(DegreeError):
        q.normal_form(NCPoly.from_word((0, 0, 0, 0)))


def test_basis_upto_matches_profile():
    q = build_quotient(3, comm_relations(3), 3)
    prof = q.dimension_profile()
    words = list(q.basis_upto(3))
    assert len(words) == sum(prof)
    assert len(set(words)) == len(words)
