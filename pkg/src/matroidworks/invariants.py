"""Tutte, characteristic, and chromatic polynomials; log-concavity; Ingleton.

All coefficients are plain Python integers.  The Tutte polynomial comes
from the corank-nullity subset sum up to n = 20 (rank of a subset is the
best intersection with a basis) and falls back to deletion-contraction
above that.  The characteristic polynomial is computed along two
independent routes and the results asserted equal on every call.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    InputError,
    LoopPresent,
    NonzeroRemainder,
    SearchBudgetExceeded,
)
from .matroid import Matroid, mask_elements, matroid_from_graph

SUBSET_SUM_LIMIT = 20
DEFAULT_INGLETON_BUDGET = 5_000_000


class UniPoly:
    """Univariate integer polynomial, dense ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def coefficients_descending(self) -> tuple[int, ...]:
        return tuple(reversed(self.coeffs))

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            self.coefficient(k) + other.coefficient(k) for k in range(n)
        )

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    def __pow__(self, k: int) -> "UniPoly":
        acc = UniPoly((1,))
        for _ in range(k):
            acc = acc * self
        return acc

    def scale(self, c: int) -> "UniPoly":
        return UniPoly(c * a for a in self.coeffs)

    def evaluate(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def divide_exact(self, other: "UniPoly") -> "UniPoly":
        """Exact quotient; NonzeroRemainder when the division does not come
        out even (integer long division, leading coefficient must divide)."""
        if other.is_zero():
            raise InputError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        if len(rem) - 1 < d:
            if self.is_zero():
                return UniPoly()
            raise NonzeroRemainder("quotient degree underflow")
        out = [0] * (len(rem) - d)
        for k in range(len(out) - 1, -1, -1):
            c = rem[k + d]
            if c % lead:
                raise NonzeroRemainder(f"leading term left remainder {c} / {lead}")
            f = c // lead
            out[k] = f
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= f * b
        if any(rem):
            raise NonzeroRemainder(f"remainder {UniPoly(rem)!r}")
        return UniPoly(out)

    def render(self, var: str = "q") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                head = var if k == 1 else f"{var}^{k}"
                body = head if mag == 1 else f"{mag}*{head}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self.render()})"


class BiPoly:
    """Bivariate integer polynomial, terms keyed by (x-degree, y-degree)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in dict(terms or {}).items() if v}

    def coefficient(self, i: int, j: int) -> int:
        return self.terms.get((i, j), 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    def evaluate(self, x, y):
        acc = 0
        for (i, j), c in self.terms.items():
            acc += c * x**i * y**j
        return acc

    def specialize(self, x_poly: UniPoly, y_poly: UniPoly) -> UniPoly:
        acc = UniPoly()
        for (i, j), c in sorted(self.terms.items()):
            acc = acc + (x_poly**i * y_poly**j).scale(c)
        return acc

    def render(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[0]))
        parts = []
        for i, j in keys:
            c = self.terms[(i, j)]
            mag = abs(c)
            names = []
            if i:
                names.append("x" if i == 1 else f"x^{i}")
            if j:
                names.append("y" if j == 1 else f"y^{j}")
            body = "*".join(names) if names else ""
            if body:
                body = body if mag == 1 else f"{mag}*{body}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BiPoly({self.render()})"


def _subset_ranks(m: Matroid) -> list[int]:
    """rank(S) for every subset mask, as the best overlap with a basis."""
    out = [0] * (1 << m.n)
    for s in range(1, 1 << m.n):
        out[s] = max((s & b).bit_count() for b in m.bases)
    return out


def _tutte_subset_sum(m: Matroid) -> BiPoly:
    r, n = m.rank, m.n
    ranks = _subset_ranks(m)
    xpow = [UniPoly((-1, 1)) ** a for a in range(r + 1)]  # (x-1)^a
    ypow = [UniPoly((-1, 1)) ** b for b in range(n - r + 1)]
    acc: dict = {}
    for s in range(1 << n):
        rs = ranks[s]
        xa = xpow[r - rs]
        yb = ypow[s.bit_count() - rs]
        for i, a in enumerate(xa.coeffs):
            if not a:
                continue
            for j, b in enumerate(yb.coeffs):
                if b:
                    key = (i, j)
                    acc[key] = acc.get(key, 0) + a * b
    return BiPoly(acc)


def _tutte_deletion_contraction(m: Matroid, memo: dict) -> BiPoly:
    key = (m.n, m.bases)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if m.n == 0:
        out = BiPoly({(0, 0): 1})
    else:
        loops = set(m.loops())
        e = 1
        if e in loops:
            sub = _tutte_deletion_contraction(m.delete((e,)), memo)
            out = BiPoly({(i, j + 1): c for (i, j), c in sub.terms.items()})
        elif all(b & 1 for b in m.bases):  # coloop
            sub = _tutte_deletion_contraction(m.contract((e,)), memo)
            out = BiPoly({(i + 1, j): c for (i, j), c in sub.terms.items()})
        else:
            out = _tutte_deletion_contraction(
                m.delete((e,)), memo
            ) + _tutte_deletion_contraction(m.contract((e,)), memo)
    memo[key] = out
    return out


def tutte_polynomial(m: Matroid) -> BiPoly:
    if m.n <= SUBSET_SUM_LIMIT:
        return _tutte_subset_sum(m)
    return _tutte_deletion_contraction(m, {})


def characteristic_polynomial(m: Matroid) -> UniPoly:
    """chi(q) = (-1)^rk T(1-q, 0), cross-checked against the direct signed
    subset sum whenever that sum is feasible."""
    t = tutte_polynomial(m)
    one_minus_q = UniPoly((1, -1))
    via_tutte = t.specialize(one_minus_q, UniPoly())
    if m.rank % 2:
        via_tutte = -via_tutte
    if m.n <= SUBSET_SUM_LIMIT:
        ranks = _subset_ranks(m)
        direct = [0] * (m.rank + 1)
        for s in range(1 << m.n):
            sign = -1 if s.bit_count() % 2 else 1
            direct[m.rank - ranks[s]] += sign
        assert UniPoly(direct) == via_tutte, "characteristic polynomial paths disagree"
    return via_tutte


def reduced_characteristic_polynomial(m: Matroid) -> UniPoly:
    if m.loops():
        raise LoopPresent("reduced characteristic polynomial needs a loop-free matroid")
    chi = characteristic_polynomial(m)
    return chi.divide_exact(UniPoly((-1, 1)))


def _component_count(edges, num_vertices: Optional[int]) -> int:
    verts = set()
    for u, v in edges:
        verts.add(u)
        verts.add(v)
    if num_vertices is not None:
        if verts and max(verts) > num_vertices:
            raise InputError("edge endpoint exceeds the declared vertex count")
        verts |= set(range(1, num_vertices + 1))
    if not verts:
        return 0
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in verts})


def chromatic_polynomial(
    edges: Sequence[tuple[int, int]], num_vertices: Optional[int] = None
) -> UniPoly:
    """q^c * chi of the cycle matroid, the proper-coloring count.

    Vertices are the edge endpoints plus 1..num_vertices when given (the
    only way to express isolated vertices).  Simple graphs only.
    """
    seen = set()
    for u, v in edges:
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InputError(f"parallel edge {key}")
        seen.add(key)
    c = _component_count(edges, num_vertices)
    chi = characteristic_polynomial(matroid_from_graph(edges))
    return chi * UniPoly([0] * c + [1])


def is_log_concave(p: Union[UniPoly, Iterable[int]]) -> bool:
    """w_j^2 >= w_{j-1} * w_{j+1} on absolute values, interior j only."""
    if isinstance(p, UniPoly):
        seq = [abs(c) for c in p.coeffs]
    else:
        seq = [abs(int(c)) for c in p]
    return all(
        seq[j] * seq[j] >= seq[j - 1] * seq[j + 1]
        for j in range(1, len(seq) - 1)
    )


def _ingleton_holds(rk, a, b, c, d) -> bool:
    lhs = rk[a] + rk[b] + rk[a | b | c] + rk[a | b | d] + rk[c | d]
    rhs = rk[a | b] + rk[a | c] + rk[a | d] + rk[b | c] + rk[b | d]
    return lhs <= rhs


def ingleton_violation(
    m: Matroid,
    exhaustive: bool = False,
    search_budget: int = DEFAULT_INGLETON_BUDGET,
):
    """A quadruple (A,B,C,D) violating Ingleton's inequality, or None.

    The default family is ordered quadruples of pairwise-disjoint nonempty
    subsets of size at most 2, which suffices for the Vamos witness; the
    exhaustive mode ranges over all nonempty subset quadruples and is meant
    for small ground sets.  A violation certifies non-realizability over
    every field.
    """

    class _Ranks(dict):
        def __missing__(self, mask):
            r = m.rank_of(mask)
            self[mask] = r
            return r

    rk = _Ranks()
    full = (1 << m.n) - 1
    if exhaustive:
        pool = list(range(1, full + 1))
    else:
        pool = [1 << i for i in range(m.n)]
        pool += [
            (1 << i) | (1 << j)
            for i in range(m.n)
            for j in range(i + 1, m.n)
        ]
        pool.sort(key=mask_elements)
    checked = 0
    for a in pool:
        for b in pool:
            if not exhaustive and a & b:
                continue
            for c in pool:
                if not exhaustive and (a | b) & c:
                    continue
                for d in pool:
                    if not exhaustive and (a | b | c) & d:
                        continue
                    checked += 1
                    if checked > search_budget:
                        raise SearchBudgetExceeded(
                            f"Ingleton search passed {search_budget} quadruples"
                        )
                    if not _ingleton_holds(rk, a, b, c, d):
                        return (
                            mask_elements(a),
                            mask_elements(b),
                            mask_elements(c),
                            mask_elements(d),
                        )
    return None
