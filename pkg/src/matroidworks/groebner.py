"""Buchberger's algorithm, saturation, and linear-variable elimination.

The engine is deterministic end to end: generators are sorted on entry,
S-pairs are processed in normal strategy (smallest lcm first, index
tie-break), and the two classical Buchberger criteria (coprime leading
monomials and the chain criterion) prune pairs.  Budgets are explicit; when
one trips, DegreeBudgetExceeded carries the partial state's description
rather than returning a wrong basis.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Mapping, Optional, Sequence

from .errors import DegreeBudgetExceeded, InputError, RingMismatch
from .polynomials import (
    DEGREVLEX,
    MonomialOrder,
    Poly,
    PolynomialRing,
    block_elimination,
    exact_divide,
    poly_sort_key,
)


@dataclass(frozen=True)
class GBConfig:
    max_pair_reductions: int = 1_000_000
    max_degree: Optional[int] = None


DEFAULT_GB_CONFIG = GBConfig()


class Ideal:
    """Finitely generated ideal; the empty generator tuple is the zero ideal."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring: PolynomialRing, gens: Iterable[Poly]):
        out = []
        for g in gens:
            if g.ring != ring:
                raise RingMismatch("ideal generator over the wrong ring")
            if not g.is_zero():
                out.append(g)
        self.ring = ring
        self.gens = tuple(out)

    def __repr__(self):
        return f"Ideal({len(self.gens)} generators over {self.ring!r})"


class GroebnerBasis:
    """A reduced Groebner basis: monic, ascending by leading monomial."""

    __slots__ = ("ring", "order", "elements", "reduced")

    def __init__(
        self,
        ring: PolynomialRing,
        order: MonomialOrder,
        elements: Sequence[Poly],
        reduced: bool = True,
    ):
        self.ring = ring
        self.order = order
        self.elements = tuple(elements)
        self.reduced = reduced

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def contains_one(self) -> bool:
        return any(e.is_constant() and not e.is_zero() for e in self.elements)

    def __repr__(self):
        return f"GroebnerBasis({len(self.elements)} elements, {self.order!r})"


def s_polynomial(f: Poly, g: Poly, order: MonomialOrder = DEGREVLEX) -> Poly:
    if f.is_zero() or g.is_zero():
        raise InputError("S-polynomial of a zero polynomial")
    fe, ge = f.leading_exp(order), g.leading_exp(order)
    lcm = tuple(max(a, b) for a, b in zip(fe, ge))
    field = f.ring.field
    mf = f.mul_monomial(
        tuple(a - b for a, b in zip(lcm, fe)), field.inv(f.terms[fe])
    )
    mg = g.mul_monomial(
        tuple(a - b for a, b in zip(lcm, ge)), field.inv(g.terms[ge])
    )
    return mf - mg


def _divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _reduce_terms(terms: dict, basis: Sequence[tuple], order: MonomialOrder, field) -> dict:
    """Full normal form of a term dict against [(lm, lc, terms)] divisors.

    Divisors are tried in list order (callers keep them ascending by leading
    monomial, which fixes the divisor selection deterministically).
    """
    key = order.key
    work = dict(terms)
    remainder: dict = {}
    while work:
        e = max(work, key=key)
        c = work.pop(e)
        hit = None
        for lm, lc, bt in basis:
            if _divides(lm, e):
                hit = (lm, lc, bt)
                break
        if hit is None:
            remainder[e] = c
            continue
        lm, lc, bt = hit
        shift = tuple(x - y for x, y in zip(e, lm))
        coeff = field.div(c, lc)
        for be, bc in bt.items():
            if be == lm:
                continue
            ne = tuple(x + y for x, y in zip(shift, be))
            nv = field.sub(work.get(ne, field.zero), field.mul(coeff, bc))
            if field.is_zero(nv):
                work.pop(ne, None)
            else:
                work[ne] = nv
    return remainder


def normal_form(
    f: Poly, basis: Iterable[Poly], order: MonomialOrder = DEGREVLEX
) -> Poly:
    """Unique remainder of f modulo a (Groebner) basis.

    For a non-Groebner divisor set the result still uses the deterministic
    first-divisor-in-order selection, so it is reproducible.
    """
    divisors = []
    for g in basis:
        if isinstance(g, GroebnerBasis):
            raise InputError("pass basis.elements")
        if g.is_zero():
            continue
        if g.ring != f.ring:
            raise RingMismatch("normal form across rings")
        lm = g.leading_exp(order)
        divisors.append((lm, g.terms[lm], g.terms))
    divisors.sort(key=lambda t: order.key(t[0]))
    return Poly(f.ring, _reduce_terms(f.terms, divisors, order, f.ring.field))


def buchberger(
    ideal: Ideal | Sequence[Poly],
    order: MonomialOrder = DEGREVLEX,
    config: GBConfig = DEFAULT_GB_CONFIG,
) -> GroebnerBasis:
    """Reduced Groebner basis by Buchberger's algorithm.

    Normal pair-selection strategy; the coprime and chain criteria prune
    pairs; single-term pairs are skipped outright (their S-polynomials
    vanish identically).  Raises DegreeBudgetExceeded when the configured
    pair-reduction count (or max degree, if set) is exhausted.
    """
    if isinstance(ideal, Ideal):
        ring, gens = ideal.ring, list(ideal.gens)
    else:
        gens = [g for g in ideal]
        if not gens:
            raise InputError("buchberger() on an empty generator sequence needs an Ideal")
        ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise RingMismatch("generators over different rings")
        gens = [g for g in gens if not g.is_zero()]
    field = ring.field
    key = order.key
    if not gens:
        return GroebnerBasis(ring, order, ())

    seed = sorted(
        (g.monic(order) for g in gens),
        key=lambda p: (key(p.leading_exp(order)), poly_sort_key(p, order)),
    )

    basis: list[Poly] = []  # monic
    lms: list[tuple] = []

    def sorted_divisors():
        divs = [(lms[i], field.one, basis[i].terms) for i in range(len(basis))]
        divs.sort(key=lambda t: key(t[0]))
        return divs

    # seed with inter-reduction: keeps the pair queue small
    for g in seed:
        r = _reduce_terms(g.terms, sorted_divisors(), order, field)
        if r:
            p = Poly(ring, r).monic(order)
            basis.append(p)
            lms.append(p.leading_exp(order))

    heap: list[tuple] = []
    done: set[frozenset] = set()

    def push_pairs(j: int):
        for i in range(j):
            lcm = tuple(max(a, b) for a, b in zip(lms[i], lms[j]))
            heapq.heappush(heap, (key(lcm), i, j, lcm))

    for j in range(len(basis)):
        push_pairs(j)

    reductions = 0
    while heap:
        _, i, j, lcm = heapq.heappop(heap)
        pk = frozenset((i, j))
        if pk in done:
            continue
        done.add(pk)
        # coprime criterion
        if lcm == tuple(a + b for a, b in zip(lms[i], lms[j])):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if (
                _divides(lms[k], lcm)
                and frozenset((i, k)) in done
                and frozenset((j, k)) in done
            ):
                skip = True
                break
        if skip:
            continue
        if len(basis[i].terms) == 1 and len(basis[j].terms) == 1:
            continue
        reductions += 1
        if reductions > config.max_pair_reductions:
            raise DegreeBudgetExceeded(
                f"Buchberger exceeded {config.max_pair_reductions} pair reductions"
            )
        s = s_polynomial(basis[i], basis[j], order)
        r = _reduce_terms(s.terms, sorted_divisors(), order, field)
        if not r:
            continue
        p = Poly(ring, r).monic(order)
        if config.max_degree is not None and p.total_degree() > config.max_degree:
            raise DegreeBudgetExceeded(
                f"Buchberger element degree {p.total_degree()} exceeds cap {config.max_degree}"
            )
        basis.append(p)
        lms.append(p.leading_exp(order))
        push_pairs(len(basis) - 1)

    # minimalize: drop any element whose leading monomial another one divides
    order_idx = sorted(range(len(basis)), key=lambda i: key(lms[i]))
    kept: list[int] = []
    for i in order_idx:
        if not any(_divides(lms[k], lms[i]) for k in kept):
            kept.append(i)
    # fully reduce tails against the other kept elements
    final: list[Poly] = []
    for pos, i in enumerate(kept):
        others = [
            (lms[k], field.one, basis[k].terms) for k in kept if k != i
        ]
        others.sort(key=lambda t: key(t[0]))
        r = _reduce_terms(basis[i].terms, others, order, field)
        if r:
            final.append(Poly(ring, r).monic(order))
    final.sort(key=lambda p: key(p.leading_exp(order)))
    return GroebnerBasis(ring, order, final)


def contains_one(gb: GroebnerBasis) -> bool:
    return gb.contains_one()


# -- saturation ------------------------------------------------------------

_AUX_NAME = "_t"
PRODUCT_TERM_CAP = 4000
PRODUCT_DEGREE_CAP = 48


def _extended_ring(ring: PolynomialRing) -> PolynomialRing:
    if _AUX_NAME in ring.names:
        raise InputError(f"ring already uses the reserved name {_AUX_NAME}")
    return PolynomialRing(ring.field, (_AUX_NAME,) + ring.names)


def _embed(p: Poly, ring2: PolynomialRing) -> Poly:
    return Poly(ring2, {(0,) + e: c for e, c in p.terms.items()})


def _project(p: Poly, ring: PolynomialRing) -> Optional[Poly]:
    out = {}
    for e, c in p.terms.items():
        if e[0] != 0:
            return None
        out[e[1:]] = c
    return Poly(ring, out)


def _saturate_by_one(
    gens: Sequence[Poly], u: Poly, config: GBConfig
) -> list[Poly]:
    """Generators of (gens) : u^inf via the Rabinowitsch trick."""
    ring = u.ring
    ring2 = _extended_ring(ring)
    order2 = block_elimination(1)
    t = ring2.var(0)
    ext = [_embed(g, ring2) for g in gens]
    ext.append(t * _embed(u, ring2) - ring2.one())
    gb = buchberger(Ideal(ring2, ext), order2, config)
    out = []
    for g in gb:
        p = _project(g, ring)
        if p is not None:
            out.append(p)
    return out


def saturate(
    ideal: Ideal,
    inequations: Sequence[Poly],
    config: GBConfig = DEFAULT_GB_CONFIG,
) -> Ideal:
    """The saturation I : u^inf for u the product of the inequations.

    Inequation generators are first reduced modulo a Groebner basis of I,
    made monic, deduplicated, and stripped of constants; if one reduces to
    zero the saturation is the unit ideal outright.  The product trick (one
    auxiliary variable) is used while the running product stays small;
    otherwise the engine saturates by the factors one at a time, which
    computes the identical ideal since I : (uv)^inf = (I : u^inf) : v^inf.
    """
    ring = ideal.ring
    order = DEGREVLEX
    gb = buchberger(ideal, order, config) if ideal.gens else GroebnerBasis(ring, order, ())
    if gb.contains_one():
        return Ideal(ring, (ring.one(),))

    factors = []
    seen = set()
    for u in sorted(inequations, key=lambda p: poly_sort_key(p, order)):
        if u.ring != ring:
            raise RingMismatch("inequation over the wrong ring")
        r = normal_form(u, gb.elements, order)
        if r.is_zero():
            # u lies in I, so 1 * u^1 is in I and the saturation is everything
            return Ideal(ring, (ring.one(),))
        if r.is_constant():
            continue
        r = r.monic(order)
        k = poly_sort_key(r, order)
        if k not in seen:
            seen.add(k)
            factors.append(r)
    if not factors:
        return Ideal(ring, gb.elements)

    product: Optional[Poly] = ring.one()
    for f in factors:
        product = product * f
        if (
            len(product.terms) > PRODUCT_TERM_CAP
            or product.total_degree() > PRODUCT_DEGREE_CAP
        ):
            product = None
            break

    if product is not None:
        result = _saturate_by_one(gb.elements, product, config)
    else:
        result = list(gb.elements)
        for f in factors:
            result = _saturate_by_one(result, f, config)
            if any(p.is_constant() and not p.is_zero() for p in result):
                return Ideal(ring, (ring.one(),))
    final = buchberger(Ideal(ring, result), order, config) if result else GroebnerBasis(ring, order, ())
    if final.contains_one():
        return Ideal(ring, (ring.one(),))
    return Ideal(ring, final.elements)


# -- linear-variable elimination ------------------------------------------


@dataclass(frozen=True)
class Substitution:
    """One elimination step: variable = numerator / denominator.

    The denominator is the unit coefficient that was in front of the
    variable (the constant 1 polynomial for plain scalar eliminations).
    """

    var: int
    numerator: Poly
    denominator: Poly


@dataclass
class EliminationResult:
    substitutions: tuple
    generators: tuple
    inequations: tuple


def _split_linear(g: Poly, x: int) -> tuple[Poly, Poly]:
    """g = c*x + rest with deg_x(g) == 1; returns (c, rest), both x-free."""
    ring = g.ring
    c_terms, rest_terms = {}, {}
    for e, coeff in g.terms.items():
        if e[x] == 1:
            ne = tuple(0 if i == x else v for i, v in enumerate(e))
            c_terms[ne] = coeff
        elif e[x] == 0:
            rest_terms[e] = coeff
        else:
            raise InputError("not linear in the chosen variable")
    return Poly(ring, c_terms), Poly(ring, rest_terms)


def _is_unit_product(c: Poly, inequations: Sequence[Poly], order: MonomialOrder) -> bool:
    """Whether c is a scalar times a product of the recorded inequations."""
    work = c
    for _ in range(c.total_degree() + 1):
        if work.is_constant():
            return not work.is_zero()
        advanced = False
        for u in inequations:
            if u.is_zero() or u.is_constant():
                continue
            q = exact_divide(work, u, order)
            if q is not None and q.total_degree() < work.total_degree():
                work = q
                advanced = True
                break
        if not advanced:
            return False
    return work.is_constant() and not work.is_zero()


def _substitute_cleared(h: Poly, x: int, num: Poly, den: Poly) -> Poly:
    """h with x -> num/den, multiplied through by den^deg_x(h)."""
    d = h.degree_in(x)
    if d <= 0:
        return h
    ring = h.ring
    layers: dict[int, dict] = {}
    for e, c in h.terms.items():
        k = e[x]
        ne = tuple(0 if i == x else v for i, v in enumerate(e))
        layer = layers.setdefault(k, {})
        layer[ne] = c
    num_pow = {0: ring.one()}
    den_pow = {0: ring.one()}

    def powered(cache, base, k):
        if k not in cache:
            cache[k] = powered(cache, base, k - 1) * base
        return cache[k]

    acc = ring.zero()
    for k, terms in layers.items():
        piece = Poly(ring, terms)
        piece = piece * powered(num_pow, num, k) * powered(den_pow, den, d - k)
        acc = acc + piece
    return acc


def eliminate_linear_variables(
    generators: Sequence[Poly],
    inequations: Sequence[Poly],
    protected: frozenset[int] | set[int] = frozenset(),
    order: MonomialOrder = DEGREVLEX,
) -> EliminationResult:
    """Repeatedly eliminate variables with unit linear coefficient.

    A generator c*x + g is usable when c is a nonzero scalar or a recorded
    unit of the localization (scalar times a product of current
    inequations).  The last eligible variable in the ambient order goes
    first; ties between generators break on the deterministic polynomial
    key.  Substitutions are recorded as x = num/den and denominators are
    cleared through every polynomial by multiplying with the matching unit
    power, so the presented localized quotient is unchanged.
    """
    gens = [g for g in generators if not g.is_zero()]
    ineqs = list(inequations)
    subs: list[Substitution] = []
    protected = frozenset(protected)
    while True:
        best = None  # (var, gen_sort_key, c, rest, gen)
        for g in gens:
            for x in g.variables():
                if x in protected or g.degree_in(x) != 1:
                    continue
                c, rest = _split_linear(g, x)
                if c.is_zero():
                    continue
                scalar = c.is_constant()
                if not scalar and not _is_unit_product(c, ineqs, order):
                    continue
                # prefer the largest variable index; for one variable,
                # prefer scalar coefficients, then the smaller generator
                cand = (x, 0 if scalar else 1, poly_sort_key(g, order), c, rest)
                if (
                    best is None
                    or cand[0] > best[0]
                    or (cand[0] == best[0] and cand[1] < best[1])
                    or (
                        cand[0] == best[0]
                        and cand[1] == best[1]
                        and cand[2] < best[2]
                    )
                ):
                    best = cand
        if best is None:
            break
        x, kind, _, c, rest = best
        ring = c.ring
        if kind == 0:
            num = (-rest).scale(ring.field.inv(c.constant_value()))
            den = ring.one()
        else:
            num = -rest
            den = c
        subs.append(Substitution(x, num, den))
        gens = [
            p
            for p in (_substitute_cleared(g, x, num, den) for g in gens)
            if not p.is_zero()
        ]
        ineqs = [_substitute_cleared(u, x, num, den) for u in ineqs]
    return EliminationResult(tuple(subs), tuple(gens), tuple(ineqs))
