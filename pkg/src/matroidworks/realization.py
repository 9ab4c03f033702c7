"""Realization spaces of matroids over a field of chosen characteristic.

The pipeline: pick a basis whose parameterized matrix needs the fewest
variables, fix entries to 0/1 by the mu/nu normalization, collect the
non-basis maximal minors as an ideal and the basis minors as inequations,
simplify the presentation (Groebner reduction, inequation reduction,
elimination of variables with unit linear coefficient), and decide
emptiness by saturating the ideal at the inequations.

Emptiness is decided over the algebraic closure of the prime field: the
space is empty for characteristic c exactly when 1 lies in the saturation.
Realizability over a specific finite field F_q is a separate, exhaustive
search over the simplified presentation's surviving variables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .errors import (
    DegreeBudgetExceeded,
    InputError,
    LoopPresent,
    MatroidworksError,
    SearchBudgetExceeded,
)
from .fields import (
    Field,
    factor_prime_power,
    field_of_characteristic,
    field_of_order,
)
from .groebner import (
    DEFAULT_GB_CONFIG,
    GBConfig,
    Ideal,
    Substitution,
    buchberger,
    eliminate_linear_variables,
    normal_form,
    saturate,
)
from .linalg import ExactMatrix, MinorOracle
from .matroid import Matroid, mask_elements, mask_of, matroid_from_matrix
from .polynomials import (
    DEGREVLEX,
    Poly,
    PolynomialRing,
    exact_divide,
    poly_sort_key,
    poly_str,
)


class SpaceVerdict(Enum):
    NONEMPTY = "NonEmpty"
    EMPTY = "Empty"
    UNDECIDED = "Undecided"


class _Undecided:
    """Tri-state answer for realizability questions the budgets cut short.

    Refuses boolean coercion so an undecided answer can never slip through
    an if-statement as False.
    """

    __slots__ = ()

    def __bool__(self):
        raise TypeError(
            "realizability is undecided; compare against UNDECIDED explicitly"
        )

    def __repr__(self):
        return "UNDECIDED"


UNDECIDED = _Undecided()

DEFAULT_SEARCH_BUDGET = 2_000_000


@dataclass(frozen=True)
class VariableSlot:
    """One symbolic matrix entry: row i, grid column j, ambient column."""

    row: int
    grid_col: int
    column: int
    name: str


def _matrix_skeleton(m: Matroid, basis_mask: int):
    """Entry plan for the parameterized matrix: 'zero' / 'one' / 'var' grid.

    Rows follow the basis elements in increasing order; the mu/nu formulas
    are applied in the order-preserving relabeling that puts the basis last,
    which is exactly the original column order with non-basis columns first.
    """
    r, n = m.rank, m.n
    b_elems = list(mask_elements(basis_mask))
    c_elems = [e for e in range(1, n + 1) if not (basis_mask >> (e - 1)) & 1]
    k = len(c_elems)
    exch = [[False] * k for _ in range(r)]
    for i in range(r):
        cut = basis_mask & ~(1 << (b_elems[i] - 1))
        for j in range(k):
            exch[i][j] = (cut | (1 << (c_elems[j] - 1))) in m.bases
    mu = [r] * k  # sentinel r means "r+1" in 1-based terms
    for j in range(k):
        for i in range(r):
            if exch[i][j]:
                mu[j] = i
                break
    nu = [k] * r
    for i in range(r):
        for j in range(k):
            if exch[i][j] and mu[j] != i:
                nu[i] = j
                break
    plan = [["zero"] * k for _ in range(r)]
    for i in range(r):
        for j in range(k):
            if not exch[i][j]:
                continue
            if mu[j] == i or nu[i] == j:
                plan[i][j] = "one"
            else:
                plan[i][j] = "var"
    return b_elems, c_elems, plan


def choose_basis(m: Matroid) -> tuple[int, ...]:
    """The basis whose parameterized matrix has the fewest variables.

    Ties break to the lexicographically smallest basis.  Loops make every
    choice degenerate, so they are rejected up front.
    """
    if m.rank > 0 and m.loops():
        raise LoopPresent(f"loops {list(m.loops())} admit no realization chart")
    best = None
    for mask in m.bases:
        _, _, plan = _matrix_skeleton(m, mask)
        count = sum(row.count("var") for row in plan)
        key = (count, mask_elements(mask))
        if best is None or key < best[0]:
            best = (key, mask)
    return mask_elements(best[1])


def build_parameterized_matrix(
    m: Matroid, basis: Sequence[int], field: Optional[Field] = None
):
    """The r x n symbolic matrix for the given basis, plus its variables.

    The basis columns carry the identity; every other entry is fixed to 0
    (non-basis exchange), fixed to 1 (mu/nu normalization), or a fresh
    variable named x_{i,j} for row i and grid column j, numbered row-major.
    Returns (ring, grid, slots) where grid is an r x n tuple of rows of
    polynomials and slots records each variable's matrix position.
    """
    if field is None:
        field = field_of_characteristic(0)
    basis_mask = mask_of(basis, m.n)
    if basis_mask not in m.bases:
        raise InputError(f"{sorted(basis)} is not a basis")
    b_elems, c_elems, plan = _matrix_skeleton(m, basis_mask)
    slots = []
    for i in range(len(b_elems)):
        for j in range(len(c_elems)):
            if plan[i][j] == "var":
                slots.append(
                    VariableSlot(
                        i + 1, j + 1, c_elems[j], f"x_{{{i + 1},{j + 1}}}"
                    )
                )
    ring = PolynomialRing(field, tuple(s.name for s in slots))
    slot_at = {(s.row, s.grid_col): idx for idx, s in enumerate(slots)}
    r, n = m.rank, m.n
    col_of = {}
    for j, e in enumerate(c_elems):
        col_of[e] = ("grid", j)
    for i, e in enumerate(b_elems):
        col_of[e] = ("unit", i)
    grid = []
    for i in range(r):
        row = []
        for e in range(1, n + 1):
            kind, pos = col_of[e]
            if kind == "unit":
                row.append(ring.one() if pos == i else ring.zero())
            else:
                tag = plan[i][pos]
                if tag == "zero":
                    row.append(ring.zero())
                elif tag == "one":
                    row.append(ring.one())
                else:
                    row.append(ring.var(slot_at[(i + 1, pos + 1)]))
        grid.append(tuple(row))
    return ring, tuple(grid), tuple(slots)


@dataclass(frozen=True)
class RealizationSpace:
    matroid: Matroid
    characteristic: int
    basis: tuple[int, ...]
    ring: PolynomialRing
    matrix: tuple  # r x n rows of Poly, pre-substitution
    slots: tuple  # VariableSlot per ring variable
    ideal_generators: tuple  # Poly, post-simplification
    inequations: tuple  # Poly, reduced semigroup generators
    substitutions: tuple  # Substitution log from simplification
    verdict: SpaceVerdict

    @property
    def variable_names(self) -> tuple[str, ...]:
        return self.ring.names

    @property
    def free_variables(self) -> tuple[str, ...]:
        gone = {s.var for s in self.substitutions}
        return tuple(
            name for i, name in enumerate(self.ring.names) if i not in gone
        )

    @property
    def num_free_variables(self) -> int:
        return len(self.free_variables)

    def to_json_dict(self) -> dict:
        return {
            "characteristic": self.characteristic,
            "basis": list(self.basis),
            "variables": list(self.variable_names),
            "free_variables": list(self.free_variables),
            "ideal_generators": [poly_str(g) for g in self.ideal_generators],
            "inequations": [poly_str(u) for u in self.inequations],
            "matrix": [[poly_str(p) for p in row] for row in self.matrix],
            "substitutions": [
                {
                    "variable": self.ring.names[s.var],
                    "numerator": poly_str(s.numerator),
                    "denominator": poly_str(s.denominator),
                }
                for s in self.substitutions
            ],
            "verdict": self.verdict.value,
        }


@dataclass(frozen=True)
class RealizationMatrix:
    field: Field
    matrix: ExactMatrix

    def rows(self) -> list[list]:
        return [list(row) for row in self.matrix.rows]


def _reduce_inequations(ineqs, gb_elements, order):
    """Normal-form, monic, dedup, strip unit factors; True flags emptiness.

    An inequation reducing to zero lies in the ideal, so inverting it
    collapses the localized quotient; the caller turns that into the Empty
    verdict without computing a saturation.
    """
    out = []
    for u in ineqs:
        r = normal_form(u, gb_elements, order) if gb_elements else u
        if r.is_zero():
            return (), True
        if r.is_constant():
            continue
        out.append(r.monic(order))
    out.sort(key=lambda p: poly_sort_key(p, order))
    deduped = []
    seen = set()
    for u in out:
        k = poly_sort_key(u, order)
        if k not in seen:
            seen.add(k)
            deduped.append(u)
    out = deduped
    # factor out recorded inequations: u = v * w keeps only w
    changed = True
    while changed:
        changed = False
        for idx, u in enumerate(out):
            for v in out:
                if v is u or v.total_degree() >= u.total_degree():
                    continue
                q = exact_divide(u, v, order)
                if q is None:
                    continue
                if q.is_constant():
                    out.pop(idx)
                else:
                    out[idx] = q.monic(order)
                changed = True
                break
            if changed:
                break
        if changed:
            out.sort(key=lambda p: poly_sort_key(p, order))
            deduped = []
            seen = set()
            for u in out:
                k = poly_sort_key(u, order)
                if k not in seen:
                    seen.add(k)
                    deduped.append(u)
            out = deduped
    return tuple(out), False


def _simplify(ring, gens, ineqs, config):
    """The simplification loop: GB, inequation reduction, elimination.

    Returns (gens, ineqs, substitutions, empty) with empty=True when the
    presentation already proves the localized quotient is zero.
    """
    order = DEGREVLEX
    subs: list[Substitution] = []
    gens = list(gens)
    ineqs = list(ineqs)
    for _ in range(len(ring.names) + 2):
        gb = buchberger(Ideal(ring, gens), order, config)
        if gb.contains_one():
            return (ring.one(),), tuple(ineqs), tuple(subs), True
        gens = list(gb.elements)
        ineqs_t, dead = _reduce_inequations(ineqs, gens, order)
        if dead:
            return tuple(gens), (), tuple(subs), True
        ineqs = list(ineqs_t)
        step = eliminate_linear_variables(gens, ineqs, frozenset(), order)
        if not step.substitutions:
            break
        subs.extend(step.substitutions)
        gens = list(step.generators)
        ineqs = list(step.inequations)
    return tuple(gens), tuple(ineqs), tuple(subs), False


def realization_space(
    m: Matroid,
    characteristic: int,
    simplify: bool = True,
    basis: Optional[Sequence[int]] = None,
    config: GBConfig = DEFAULT_GB_CONFIG,
) -> RealizationSpace:
    """The realization space of m over fields of the given characteristic.

    The verdict is Empty exactly when the saturation of the defining ideal
    at the inequations is the unit ideal, which decides realizability over
    the algebraic closure.  Budget exhaustion yields verdict Undecided with
    the partially simplified presentation preserved.
    """
    field = field_of_characteristic(characteristic)
    if m.rank > 0 and m.rank < m.n and m.loops():
        raise LoopPresent(
            f"loops {list(m.loops())} admit no realization chart"
        )
    if basis is None:
        basis = (
            mask_elements(m.bases[0]) if m.rank in (0, m.n) else choose_basis(m)
        )
    else:
        basis = tuple(sorted(basis))
    ring, grid, slots = build_parameterized_matrix(m, basis, field)
    oracle = MinorOracle(grid) if m.rank > 0 else None
    order = DEGREVLEX
    gens = []
    seen = set()
    ineqs = []
    if oracle is not None:
        r, n = m.rank, m.n
        for cols in itertools.combinations(range(n), r):
            minor = oracle.det(cols)
            mask = mask_of((c + 1 for c in cols), n)
            if mask in m.bases:
                ineqs.append(minor)
            else:
                if minor.is_zero():
                    continue
                p = minor.monic(order)
                k = poly_sort_key(p, order)
                if k not in seen:
                    seen.add(k)
                    gens.append(p)
    gens.sort(key=lambda p: poly_sort_key(p, order))

    subs: tuple = ()
    empty = False
    undecided = False
    if simplify:
        try:
            gens, ineqs, subs, empty = _simplify(ring, gens, ineqs, config)
        except DegreeBudgetExceeded:
            undecided = True
            gens, ineqs = tuple(gens), tuple(ineqs)
    else:
        ineqs_t, empty = _reduce_inequations(ineqs, (), order)
        ineqs = ineqs_t
        gens = tuple(gens)

    if undecided:
        verdict = SpaceVerdict.UNDECIDED
    elif empty:
        verdict = SpaceVerdict.EMPTY
    else:
        try:
            sat = saturate(Ideal(ring, gens), list(ineqs), config)
            one = any(
                g.is_constant() and not g.is_zero() for g in sat.gens
            )
            verdict = SpaceVerdict.EMPTY if one else SpaceVerdict.NONEMPTY
        except DegreeBudgetExceeded:
            verdict = SpaceVerdict.UNDECIDED
    return RealizationSpace(
        matroid=m,
        characteristic=characteristic,
        basis=tuple(basis),
        ring=ring,
        matrix=grid,
        slots=slots,
        ideal_generators=tuple(gens),
        inequations=tuple(ineqs),
        substitutions=tuple(subs),
        verdict=verdict,
    )


def is_realizable(m: Matroid, characteristic: int, config: GBConfig = DEFAULT_GB_CONFIG):
    """True/False over the algebraic closure of the prime field; UNDECIDED
    when budgets ran out."""
    v = realization_space(m, characteristic, True, None, config).verdict
    if v is SpaceVerdict.NONEMPTY:
        return True
    if v is SpaceVerdict.EMPTY:
        return False
    return UNDECIDED


def _free_indices(space: RealizationSpace) -> list[int]:
    gone = {s.var for s in space.substitutions}
    return [i for i in range(len(space.ring.names)) if i not in gone]


def _point_satisfies(space, values, fq) -> bool:
    for g in space.ideal_generators:
        if not fq.is_zero(g.evaluate(values, fq)):
            return False
    for u in space.inequations:
        if fq.is_zero(u.evaluate(values, fq)):
            return False
    return True


def _search_points(space: RealizationSpace, q: int, search_budget: int):
    """Yields value dicts for the surviving variables, admissible over F_q."""
    fq = field_of_order(q)
    free = _free_indices(space)
    total = q ** len(free)
    if total > search_budget:
        raise SearchBudgetExceeded(
            f"{total} assignments over F_{q} exceed the budget of {search_budget}"
        )
    elems = list(fq.iter_elements())
    for combo in itertools.product(elems, repeat=len(free)):
        values = dict(zip(free, combo))
        if _point_satisfies(space, values, fq):
            yield fq, values


def is_realizable_over_q(
    m: Matroid,
    q: int,
    search_budget: int = DEFAULT_SEARCH_BUDGET,
    config: GBConfig = DEFAULT_GB_CONFIG,
) -> bool:
    """Exhaustive realizability over the finite field with q elements.

    The characteristic-p space is simplified first; its surviving variables
    are enumerated over F_q.  An Empty verdict short-circuits to False
    since F_q embeds in the algebraic closure.
    """
    p, _ = factor_prime_power(q)
    space = realization_space(m, p, True, None, config)
    if space.verdict is SpaceVerdict.EMPTY:
        return False
    for _ in _search_points(space, q, search_budget):
        return True
    return False


def find_realization(
    m: Matroid,
    q: int,
    search_budget: int = DEFAULT_SEARCH_BUDGET,
    config: GBConfig = DEFAULT_GB_CONFIG,
) -> Optional[RealizationMatrix]:
    """An explicit r x n matrix over F_q realizing m, or None.

    The found point is pushed back through the substitution log (all
    denominators are invertible at admissible points) and the resulting
    matrix re-checked: its matroid must equal m on the nose.
    """
    p, _ = factor_prime_power(q)
    space = realization_space(m, p, True, None, config)
    if space.verdict is SpaceVerdict.EMPTY:
        return None
    for fq, values in _search_points(space, q, search_budget):
        for sub in reversed(space.substitutions):
            num = sub.numerator.evaluate(values, fq)
            den = sub.denominator.evaluate(values, fq)
            if fq.is_zero(den):
                raise MatroidworksError(
                    "internal: unit denominator vanished at an admissible point"
                )
            values[sub.var] = fq.div(num, den)
        rows = [
            [entry.evaluate(values, fq) for entry in row]
            for row in space.matrix
        ]
        check = (
            Matroid(m.n, (0,), _validated=True)
            if m.rank == 0
            else matroid_from_matrix(fq, rows)
        )
        if check != m:
            raise MatroidworksError(
                "internal: realization verification failed"
            )
        return RealizationMatrix(fq, ExactMatrix.from_rows(fq, rows))
    return None


def realizability_table(
    m: Matroid,
    q_max: int,
    search_budget: int = DEFAULT_SEARCH_BUDGET,
    config: GBConfig = DEFAULT_GB_CONFIG,
) -> dict[int, bool]:
    """is_realizable_over_q for every prime power q <= q_max, ascending."""
    out: dict[int, bool] = {}
    for q in range(2, q_max + 1):
        try:
            factor_prime_power(q)
        except InputError:
            continue
        out[q] = is_realizable_over_q(m, q, search_budget, config)
    return out
