"""Buchberger, normal forms, saturation, linear elimination.

The load-bearing check is the S-polynomial certificate: a basis G is a
Groebner basis iff every S(g_i, g_j) reduces to zero against G.  Every
basis produced in this file goes through that certificate, so the frozen
outputs below are verified rather than merely remembered.
"""

import itertools
import random
from fractions import Fraction

import pytest

from matroidworks.errors import DegreeBudgetExceeded, InputError, RingMismatch
from matroidworks.fields import prime_field, rationals
from matroidworks.groebner import (
    DEFAULT_GB_CONFIG,
    GBConfig,
    Ideal,
    Substitution,
    buchberger,
    contains_one,
    eliminate_linear_variables,
    normal_form,
    s_polynomial,
    saturate,
)
from matroidworks.polynomials import (
    DEGREVLEX,
    LEX,
    PolynomialRing,
    block_elimination,
    poly_str,
)

Q = rationals()


def ring_xy():
    return PolynomialRing(Q, ("x", "y"))


def ring_xyz():
    return PolynomialRing(Q, ("x", "y", "z"))


def assert_groebner_certificate(gb):
    """Every S-polynomial of basis pairs reduces to zero."""
    els = gb.elements
    for f, g in itertools.combinations(els, 2):
        s = s_polynomial(f, g, gb.order)
        assert normal_form(s, els, gb.order).is_zero()


def assert_reduced(gb):
    for i, f in enumerate(gb.elements):
        assert f.leading_coeff(gb.order) == f.ring.field.one
        lm_others = [
            g.leading_exp(gb.order) for j, g in enumerate(gb.elements) if j != i
        ]
        for exps in f.terms:
            for lm in lm_others:
                assert not all(e >= l for e, l in zip(exps, lm))


def test_two_squares():
    ring = ring_xy()
    x, y = ring.gens()
    gb = buchberger([x * x + y * y, x * x - y * y])
    assert [poly_str(p) for p in gb.elements] == ["y^2", "x^2"]
    assert_groebner_certificate(gb)
    assert_reduced(gb)


def test_normal_form_example():
    ring = ring_xy()
    x, y = ring.gens()
    gb = buchberger([x * x - x + ring.one()])
    nf = normal_form(x * x * y, gb.elements)
    assert poly_str(nf) == "x*y - y"


def test_cyclic3():
    ring = ring_xyz()
    x, y, z = ring.gens()
    gens = [
        x + y + z,
        x * y + y * z + z * x,
        x * y * z - ring.one(),
    ]
    gb = buchberger(gens)
    assert [poly_str(p) for p in gb.elements] == [
        "x + y + z",
        "y^2 + y*z + z^2",
        "z^3 - 1",
    ]
    assert_groebner_certificate(gb)
    assert_reduced(gb)


def test_lex_elimination():
    ring = ring_xy()
    x, y = ring.gens()
    gb = buchberger([x * x + y * y - ring.one(), x - y], LEX)
    assert [poly_str(p, LEX) for p in gb.elements] == ["y^2 - 1/2", "x - y"]
    assert_groebner_certificate(gb)


def test_generator_order_invariance():
    ring = ring_xyz()
    x, y, z = ring.gens()
    gens = [x * y - z, y * z - x, z * x - y]
    rng = random.Random(5)
    reference = buchberger(gens)
    assert_groebner_certificate(reference)
    for _ in range(6):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        again = buchberger(shuffled)
        assert again.elements == reference.elements


def test_membership_of_combinations():
    rng = random.Random(12)
    ring = ring_xyz()
    x, y, z = ring.gens()
    gens = [x * x - y, y * y - z]
    gb = buchberger(gens)
    assert_groebner_certificate(gb)
    for _ in range(20):
        combo = ring.zero()
        for g in gens:
            mult = ring.from_terms(
                {
                    tuple(rng.randint(0, 2) for _ in range(3)): Fraction(
                        rng.randint(-3, 3)
                    )
                    for _ in range(2)
                }
            )
            combo = combo + mult * g
        assert normal_form(combo, gb.elements).is_zero()
    # and something outside the ideal does not reduce to zero
    assert not normal_form(x, gb.elements).is_zero()


def test_normal_form_is_linear():
    rng = random.Random(3)
    ring = ring_xy()
    x, y = ring.gens()
    gb = buchberger([x * x + y, y * y - ring.one()])
    for _ in range(20):
        f = ring.from_terms(
            {
                (rng.randint(0, 3), rng.randint(0, 3)): Fraction(rng.randint(-4, 4))
                for _ in range(3)
            }
        )
        g = ring.from_terms(
            {
                (rng.randint(0, 3), rng.randint(0, 3)): Fraction(rng.randint(-4, 4))
                for _ in range(3)
            }
        )
        lhs = normal_form(f + g, gb.elements)
        rhs = normal_form(f, gb.elements) + normal_form(g, gb.elements)
        assert lhs == rhs


def test_contains_one():
    ring = ring_xy()
    x, y = ring.gens()
    gb = buchberger([x, x + ring.one()])
    assert contains_one(gb)
    gb2 = buchberger([x * y])
    assert not contains_one(gb2)


def test_zero_and_empty_ideals():
    ring = ring_xy()
    gb = buchberger(Ideal(ring, []))
    assert gb.elements == ()
    assert not contains_one(gb)
    gb2 = buchberger([ring.zero()])
    assert gb2.elements == ()


def test_finite_field_basis():
    ring = PolynomialRing(prime_field(2), ("x", "y"))
    x, y = ring.gens()
    gb = buchberger([x * x + y, y * y + y])
    assert_groebner_certificate(gb)
    assert_reduced(gb)
    # over F_2, (x^2 + y)^2 = x^4 + y^2 belongs to the ideal
    assert normal_form(x**4 + y * y, gb.elements).is_zero()


def test_budget_exceeded():
    ring = ring_xyz()
    x, y, z = ring.gens()
    gens = [
        x * x + y * y + z * z - ring.one(),
        x * y + y * z + x * z,
        x * y * z - x - y,
    ]
    with pytest.raises(DegreeBudgetExceeded):
        buchberger(gens, DEGREVLEX, GBConfig(max_pair_reductions=3))


def test_ring_mismatch_rejected():
    r1 = ring_xy()
    r2 = ring_xyz()
    with pytest.raises(RingMismatch):
        Ideal(r1, [r2.gens()[0]])


# -- saturation -------------------------------------------------------------


def test_saturation_removes_component():
    ring = ring_xy()
    x, y = ring.gens()
    sat = saturate(Ideal(ring, [x * y]), [x])
    gb = buchberger(sat)
    assert [poly_str(p) for p in gb.elements] == ["y"]
    assert_groebner_certificate(gb)


def test_saturation_to_unit_ideal():
    ring = ring_xy()
    x, y = ring.gens()
    sat = saturate(Ideal(ring, [x * x]), [x])
    assert contains_one(buchberger(sat))
    # an inequation reducing to zero modulo the ideal forces the unit ideal
    sat2 = saturate(Ideal(ring, [x]), [x * y])
    assert contains_one(buchberger(sat2))


def test_saturation_idempotent():
    ring = ring_xyz()
    x, y, z = ring.gens()
    ideal = Ideal(ring, [x * y * z, x * x * y - x * y])
    once = saturate(ideal, [x, z])
    twice = saturate(once, [x, z])
    assert buchberger(once).elements == buchberger(twice).elements


def test_saturation_contains_ideal_and_certifies():
    # every generator of I:u^inf, multiplied by a power of u, lands in I
    ring = ring_xyz()
    x, y, z = ring.gens()
    ideal = Ideal(ring, [x * y * z])
    sat = saturate(ideal, [x, z])
    gb_sat = buchberger(sat)
    assert [poly_str(p) for p in gb_sat.elements] == ["y"]
    gb_orig = buchberger(ideal)
    u = x * z
    for g in gb_sat.elements:
        h = g
        ok = False
        for _ in range(6):
            if normal_form(h, gb_orig.elements).is_zero():
                ok = True
                break
            h = h * u
        assert ok
    # the original ideal is contained in its saturation
    for g in gb_orig.elements:
        assert normal_form(g, gb_sat.elements).is_zero()


def test_saturation_chained_matches_product():
    # high-degree inequations overflow the product caps and take the
    # chained route; the result must agree with the product of small ones
    ring = ring_xyz()
    x, y, z = ring.gens()
    ideal = Ideal(ring, [x * y * z])
    small = saturate(ideal, [x, z])
    big = saturate(ideal, [x**20, z**30])
    assert buchberger(small).elements == buchberger(big).elements


# -- linear elimination -----------------------------------------------------


def test_eliminate_scalar_coefficient():
    ring = ring_xy()
    x, y = ring.gens()
    res = eliminate_linear_variables([x + y - ring.one(), x * y - y], [])
    # y = 1 - x substituted into the second generator
    assert len(res.substitutions) == 1
    s = res.substitutions[0]
    assert s.var == 1
    assert poly_str(s.numerator) == "-x + 1"
    assert poly_str(s.denominator) == "1"
    assert len(res.generators) == 1
    assert poly_str(res.generators[0]) == "-x^2 + 2*x - 1"


def test_eliminate_unit_coefficient():
    ring = ring_xy()
    x, y = ring.gens()
    res = eliminate_linear_variables([x * y - ring.one()], [y])
    assert len(res.substitutions) == 1
    s = res.substitutions[0]
    assert s.var == 0
    assert poly_str(s.numerator) == "1"
    assert poly_str(s.denominator) == "y"
    assert res.generators == ()


def test_protected_variables_stay():
    ring = ring_xy()
    x, y = ring.gens()
    res = eliminate_linear_variables([x + y], [], protected={0, 1})
    assert res.substitutions == ()
    assert res.generators == (x + y,)


def test_elimination_preserves_localized_solutions():
    # count F_5 points of (gens != 0 on ineqs) before and after elimination;
    # eliminated variables are recovered by back substitution
    f5 = prime_field(5)
    ring = PolynomialRing(f5, ("a", "b", "c"))
    a, b, c = ring.gens()
    gens = [a + b * c - ring.one(), a * b - c]
    ineqs = [b]
    res = eliminate_linear_variables(gens, ineqs)
    assert res.substitutions

    def points_direct():
        out = set()
        for va, vb, vc in itertools.product(range(5), repeat=3):
            vals = {0: va, 1: vb, 2: vc}
            if any(f5.is_zero(u.evaluate(vals, into_field=f5)) for u in ineqs):
                continue
            if all(f5.is_zero(g.evaluate(vals, into_field=f5)) for g in gens):
                out.add((va, vb, vc))
        return out

    eliminated = {s.var for s in res.substitutions}
    free = [i for i in range(3) if i not in eliminated]

    def points_reduced():
        out = set()
        for combo in itertools.product(range(5), repeat=len(free)):
            vals = dict(zip(free, combo))
            ok = True
            for s in reversed(res.substitutions):
                den = s.denominator.evaluate(vals, into_field=f5)
                if f5.is_zero(den):
                    ok = False
                    break
                num = s.numerator.evaluate(vals, into_field=f5)
                vals[s.var] = f5.div(num, den)
            if not ok:
                continue
            if any(
                f5.is_zero(u.evaluate(vals, into_field=f5)) for u in res.inequations
            ):
                continue
            if all(
                f5.is_zero(g.evaluate(vals, into_field=f5)) for g in res.generators
            ):
                out.add((vals[0], vals[1], vals[2]))
        return out

    assert points_direct() == points_reduced()


def test_s_polynomial_cancels_leading_terms():
    ring = ring_xy()
    x, y = ring.gens()
    f = x * x * y + x
    g = x * y * y - y
    s = s_polynomial(f, g)
    # lcm(x^2 y, x y^2) = x^2 y^2; y*f - x*g kills the leading terms
    assert s == (x * y).scale(Fraction(2))
