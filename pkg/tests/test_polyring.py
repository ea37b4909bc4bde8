import random

import pytest
from hypothesis import given, settings, strategies as st

from eqspringer.polyring import (
    Poly,
    PolySyntaxError,
    Substitution,
    VarSpace,
    format_poly,
    homogeneous_component,
    parse_poly,
    random_poly,
    substitute,
)
from oracles import to_sympy

SPACE = VarSpace(2, 1)  # y1 y2 u1 t1 t2

big = st.integers(min_value=-(2**100), max_value=2**100)
monomials = st.tuples(*[st.integers(0, 3)] * SPACE.nvars)
polys = st.dictionaries(monomials, big, max_size=6).map(lambda d: Poly(SPACE, d))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a and a * 0 == 0


@given(polys, polys)
@settings(max_examples=50)
def test_arithmetic_matches_sympy(a, b):
    assert to_sympy(a * b) == (to_sympy(a) * to_sympy(b)).expand()
    assert to_sympy(a - b) == (to_sympy(a) - to_sympy(b)).expand()


@given(polys)
def test_format_parse_round_trip(p):
    text = format_poly(p)
    q = parse_poly(text, SPACE)
    assert q == p
    assert format_poly(q) == text


@given(polys)
def test_no_zero_coefficients_stored(p):
    assert all(p.terms.values())
    assert all(c for c in (p - p + p).terms.values())


images = st.sampled_from([("y", 1), ("y", 2), ("u", 1), ("t", 1), ("t", 2)])
unit = [tuple(int(i == j) for j in range(SPACE.nvars)) for i in range(SPACE.nvars)]
# affine images keep composed substitutions small
linear = st.dictionaries(st.sampled_from(unit + [(0,) * SPACE.nvars]), big,
                         max_size=2).map(lambda d: Poly(SPACE, d))
sources = st.dictionaries(st.tuples(*[st.integers(0, 2)] * SPACE.nvars), big,
                          max_size=4).map(lambda d: Poly(SPACE, d))


@given(sources, st.dictionaries(images, linear, max_size=3), st.dictionaries(images, linear, max_size=3))
@settings(max_examples=40)
def test_substitution_composition(p, s1, s2):
    sigma, tau = Substitution(SPACE, s1), Substitution(SPACE, s2)
    assert substitute(substitute(p, sigma), tau) == substitute(p, sigma.then(tau))


@given(sources, sources, st.dictionaries(images, linear, max_size=3))
@settings(max_examples=40)
def test_substitution_is_a_ring_map(a, b, s):
    sigma = Substitution(SPACE, s)
    assert substitute(a * b, sigma) == substitute(a, sigma) * substitute(b, sigma)
    assert substitute(a + b, sigma) == substitute(a, sigma) + substitute(b, sigma)


def test_renaming_fast_path_agrees_with_general_path():
    rng = random.Random(5)
    for _ in range(50):
        p = random_poly(SPACE, rng, ("y", "u", "t"))
        sigma = Substitution(SPACE, {("y", 1): SPACE.t(2), ("t", 1): 0, ("u", 1): SPACE.y(2)})
        assert sigma.as_renaming() is not None
        slow = Substitution(SPACE, {("y", 1): SPACE.t(2) + 0 * SPACE.y(1), ("t", 1): SPACE.zero(),
                                    ("u", 1): SPACE.y(2)})
        assert substitute(p, sigma) == substitute(p, slow)
        # forcing the general path through a non-renaming image
        general = Substitution(SPACE, {("y", 1): SPACE.t(2) * 1, ("t", 1): SPACE.const(0),
                                       ("u", 1): SPACE.y(2), ("y", 2): SPACE.y(2) + SPACE.zero()})
        assert substitute(p, general) == substitute(p, sigma)


def test_printing_conventions():
    space = VarSpace(2, 1)
    assert format_poly(parse_poly("y1*y2 - 2*u1*y1 + u1^2", space)) == "y1*y2 - 2*u1*y1 + u1^2"
    assert format_poly(parse_poly("u1^2 - (y1+y2)*u1 + y1*y2", space)) == "y1*y2 - u1*y1 - u1*y2 + u1^2"
    assert format_poly(space.zero()) == "0"
    assert format_poly(parse_poly("-3 + y2**2", space)) == "y2^2 - 3"


def test_parse_errors():
    space = VarSpace(2, 1)
    with pytest.raises(PolySyntaxError) as exc:
        parse_poly("y1 + y3", space)
    assert exc.value.pos == 5
    for bad in ["", "y1 +", "(y1", "y1 $ 2", "x1", "y1^y2", "u2"]:
        with pytest.raises(PolySyntaxError):
            parse_poly(bad, space)


def test_space_checks():
    a, b = VarSpace(2, 1), VarSpace(3, 1)
    with pytest.raises(ValueError):
        a.y(1) + b.y(1)
    with pytest.raises(ValueError):
        a.index("u", 2)


def test_degree_and_components():
    space = VarSpace(2, 1)
    p = parse_poly("y1^2*u1 + y2 - 4", space)
    assert p.degree() == 3
    assert not p.is_homogeneous()
    assert homogeneous_component(p, 1) == space.y(2)
    assert space.zero().degree() == -1
    assert p.families() == {"y", "u"}
