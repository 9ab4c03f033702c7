"""Chow rings of loop-free matroids and the Kaehler-package checks.

A(M) = Q[x_F | F a nonempty proper flat]/(I + J): I kills products of
incomparable flats, J imposes the n-1 linear relations anchored at
element 1.  Because any monomial whose support is not a chain is a
multiple of an I-generator, the quotient lives on chain monomials alone;
each graded piece is computed by exact Gauss-Jordan elimination of the
J-multiples against the chain monomials of that degree, with columns in
descending degrevlex order.  The surviving (standard) monomials coincide
with the standard monomials of the reduced degrevlex Groebner basis of
I + J, which the test suite re-checks against Buchberger on small inputs.

Volumes are normalized so every complete flag monomial integrates to 1;
alpha and beta are the degree-1 classes whose mixed volumes give the
reduced characteristic polynomial, and kahler_report packages Poincare
duality, hard Lefschetz, and the Hodge-Riemann form for one (k, ell) at
a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    InputError,
    LoopPresent,
    MatroidworksError,
    WrongDegree,
)
from .fields import rationals
from .groebner import DEFAULT_GB_CONFIG, GBConfig, GroebnerBasis, Ideal, buchberger
from .linalg import ExactMatrix
from .matroid import Matroid, mask_elements, mask_of, subset_key
from .polynomials import DEGREVLEX, Poly, PolynomialRing

_Q = rationals()
_ZERO = Fraction(0)
_ONE = Fraction(1)


class _DegreeData:
    __slots__ = ("monomials", "index", "supp", "std_positions", "std_index", "nf")

    def __init__(self, monomials, index, supp, std_positions, std_index, nf):
        self.monomials = monomials
        self.index = index
        self.supp = supp
        self.std_positions = std_positions
        self.std_index = std_index
        self.nf = nf


def _insert_flat(mono: tuple, flat: int) -> tuple:
    out = []
    placed = False
    for f, e in mono:
        if f == flat:
            out.append((f, e + 1))
            placed = True
        elif f > flat and not placed:
            out.append((flat, 1))
            out.append((f, e))
            placed = True
        else:
            out.append((f, e))
    if not placed:
        out.append((flat, 1))
    return tuple(out)


class ChowRing:
    """Graded data of A(M); built through :func:`chow_ring`."""

    def __init__(self, m: Matroid, _token=None):
        if _token is not _BUILD_TOKEN:
            raise InputError("use chow_ring() to construct Chow rings")
        self.matroid = m
        ground = m.ground_mask
        closure0 = m.closure(0)
        flats = [
            f
            for f in m.flats()
            if f != ground and f != closure0 and f != 0
        ]
        flats.sort(key=lambda f: (m.rank_of(f), subset_key(f)))
        self.flats = tuple(flats)
        self.flat_index = {f: i for i, f in enumerate(flats)}
        self.ring = PolynomialRing(
            _Q,
            tuple(
                "x_{" + ",".join(map(str, mask_elements(f))) + "}"
                for f in flats
            ),
        )
        # comparability bitmask over flat indices, per flat
        self._comp = []
        for i, f in enumerate(flats):
            mask = 0
            for j, g in enumerate(flats):
                if f & g == f or f & g == g:
                    mask |= 1 << j
            self._comp.append(mask)
        self.top_degree = m.rank - 1
        self._data: dict[int, _DegreeData] = {}
        self._ideal_polys: Optional[tuple] = None
        self._top_std_volume: Optional[Fraction] = None

    # -- graded engine ----------------------------------------------------

    def _degree(self, d: int) -> _DegreeData:
        if d < 0 or d > self.matroid.rank:
            raise WrongDegree(f"degree {d} outside 0..{self.matroid.rank}")
        hit = self._data.get(d)
        if hit is not None:
            return hit
        if d == 0:
            empty = ()
            data = _DegreeData((empty,), {empty: 0}, (0,), (0,), {0: 0}, {})
            self._data[0] = data
            return data
        prev = self._degree(d - 1)
        comp = self._comp
        nflats = len(self.flats)
        monos = []
        supp_of = {}
        for pos, mono in enumerate(prev.monomials):
            supp = prev.supp[pos]
            start = mono[-1][0] if mono else 0
            for f in range(start, nflats):
                if supp & ~comp[f]:
                    continue
                m2 = _insert_flat(mono, f)
                if m2 not in supp_of:
                    supp_of[m2] = supp | (1 << f)
                    monos.append(m2)
        keys = {}
        for mono in monos:
            exps = [0] * nflats
            for f, e in mono:
                exps[f] = e
            keys[mono] = tuple(-x for x in reversed(exps))
        monos.sort(key=lambda mo: keys[mo], reverse=True)  # descending degrevlex
        index = {mo: i for i, mo in enumerate(monos)}
        supp = tuple(supp_of[mo] for mo in monos)

        elem_masks = self.flats
        n = self.matroid.n
        rows = []
        for pos, mono in enumerate(prev.monomials):
            psupp = prev.supp[pos]
            compat = []
            for f in range(nflats):
                if not (psupp & ~comp[f]):
                    compat.append((f, index[_insert_flat(mono, f)]))
            if not compat:
                continue
            for j in range(2, n + 1):
                jbit = 1 << (j - 1)
                row = {}
                for f, target in compat:
                    c = (1 if elem_masks[f] & 1 else 0) - (
                        1 if elem_masks[f] & jbit else 0
                    )
                    if c:
                        row[target] = row.get(target, 0) + c
                row = {k: Fraction(v) for k, v in row.items() if v}
                if row:
                    rows.append(row)

        pivots: dict[int, dict] = {}
        for row in rows:
            r = row
            while r:
                lead = min(r)
                pr = pivots.get(lead)
                if pr is None:
                    c = r[lead]
                    if c != 1:
                        r = {k: v / c for k, v in r.items()}
                    pivots[lead] = r
                    break
                c = r[lead]
                nr = dict(r)
                for k, v in pr.items():
                    nv = nr.get(k, _ZERO) - c * v
                    if nv:
                        nr[k] = nv
                    else:
                        nr.pop(k, None)
                r = nr
        for lead in sorted(pivots, reverse=True):
            pr = pivots[lead]
            extra = [k for k in pr if k != lead and k in pivots]
            while extra:
                for k in extra:
                    c = pr.pop(k)
                    for k2, v in pivots[k].items():
                        if k2 == k:
                            continue
                        nv = pr.get(k2, _ZERO) - c * v
                        if nv:
                            pr[k2] = nv
                        else:
                            pr.pop(k2, None)
                extra = [k for k in pr if k != lead and k in pivots]

        std_positions = tuple(p for p in range(len(monos)) if p not in pivots)
        std_index = {p: i for i, p in enumerate(std_positions)}
        nf = {}
        for lead, pr in pivots.items():
            nf[lead] = tuple(
                (std_index[k], -v) for k, v in sorted(pr.items()) if k != lead
            )
        data = _DegreeData(tuple(monos), index, supp, std_positions, std_index, nf)
        self._data[d] = data
        return data

    def graded_dimension(self, d: int) -> int:
        return len(self._degree(d).std_positions)

    def graded_dimensions(self) -> tuple[int, ...]:
        return tuple(
            self.graded_dimension(d) for d in range(self.top_degree + 1)
        )

    def basis_monomials(self, d: int) -> tuple[Poly, ...]:
        data = self._degree(d)
        out = []
        for p in data.std_positions:
            exps = [0] * len(self.flats)
            for f, e in data.monomials[p]:
                exps[f] = e
            out.append(Poly(self.ring, {tuple(exps): _ONE}))
        return tuple(out)

    # -- elements ---------------------------------------------------------

    def zero(self, degree: int) -> "ChowElement":
        return ChowElement(
            self, degree, (_ZERO,) * self.graded_dimension(degree)
        )

    def one(self) -> "ChowElement":
        return ChowElement(self, 0, (_ONE,))

    def _flat_key(self, key) -> int:
        if isinstance(key, int):
            mask = key
        else:
            mask = mask_of(key, self.matroid.n)
        idx = self.flat_index.get(mask)
        if idx is None:
            raise InputError(
                f"{sorted(mask_elements(mask))} is not a nonempty proper flat"
            )
        return idx

    def element_from_flat_coeffs(self, coeffs) -> "ChowElement":
        """Degree-1 element Sum c_F x_F; keys are flat masks or element
        iterables.  Keeps the raw flat coefficients for the Lefschetz test."""
        by_idx: dict[int, Fraction] = {}
        for key, val in dict(coeffs).items():
            idx = self._flat_key(key)
            by_idx[idx] = by_idx.get(idx, _ZERO) + Fraction(val)
        data = self._degree(1)
        out = [_ZERO] * len(data.std_positions)
        for idx, c in by_idx.items():
            if not c:
                continue
            pos = data.index[((idx, 1),)]
            red = data.nf.get(pos)
            if red is None:
                out[data.std_index[pos]] += c
            else:
                for s, v in red:
                    out[s] += c * v
        flat_vec = tuple(by_idx.get(i, _ZERO) for i in range(len(self.flats)))
        return ChowElement(self, 1, tuple(out), flat_vec)

    def multiply_by_flat(self, degree, coords, flat_idx):
        data = self._degree(degree)
        nxt = self._degree(degree + 1)
        out = [_ZERO] * len(nxt.std_positions)
        comp = self._comp[flat_idx]
        for i, c in enumerate(coords):
            if not c:
                continue
            pos = data.std_positions[i]
            if data.supp[pos] & ~comp:
                continue
            m2 = _insert_flat(data.monomials[pos], flat_idx)
            p2 = nxt.index[m2]
            red = nxt.nf.get(p2)
            if red is None:
                out[nxt.std_index[p2]] += c
            else:
                for s, v in red:
                    out[s] += c * v
        return tuple(out)

    # -- presentation-level data ------------------------------------------

    def ideal_generators(self) -> tuple[Poly, ...]:
        """The I and J generators as honest polynomials (I first)."""
        if self._ideal_polys is not None:
            return self._ideal_polys
        ring = self.ring
        k = len(self.flats)
        gens = []
        for i in range(k):
            for j in range(i + 1, k):
                if not (self._comp[i] >> j) & 1:
                    exps = [0] * k
                    exps[i] = 1
                    exps[j] = 1
                    gens.append(Poly(ring, {tuple(exps): _ONE}))
        n = self.matroid.n
        for j in range(2, n + 1):
            jbit = 1 << (j - 1)
            terms = {}
            for idx, f in enumerate(self.flats):
                c = (1 if f & 1 else 0) - (1 if f & jbit else 0)
                if c:
                    exps = [0] * k
                    exps[idx] = 1
                    terms[tuple(exps)] = Fraction(c)
            if terms:
                gens.append(Poly(ring, terms))
        self._ideal_polys = tuple(gens)
        return self._ideal_polys

    def groebner_basis(self, config: GBConfig = DEFAULT_GB_CONFIG) -> GroebnerBasis:
        """Reduced degrevlex basis of I + J by Buchberger; small rings only
        in practice, the graded engine does not need it."""
        return buchberger(Ideal(self.ring, self.ideal_generators()), DEGREVLEX, config)

    # -- volume -----------------------------------------------------------

    def canonical_flag(self) -> tuple[int, ...]:
        """Flat indices of the first complete flag F_1 < ... < F_{r-1}."""
        m = self.matroid
        flag = []
        current = None
        for target in range(1, m.rank):
            found = None
            for idx, f in enumerate(self.flats):
                if m.rank_of(f) != target:
                    continue
                if current is not None and current & ~f:
                    continue
                found = idx
                break
            if found is None:
                raise MatroidworksError("internal: flag extension failed")
            flag.append(found)
            current = self.flats[found]
        return tuple(flag)

    def _top_volume_unit(self) -> Fraction:
        """vol of the single top-degree standard monomial."""
        if self._top_std_volume is not None:
            return self._top_std_volume
        top = self.top_degree
        dim = self.graded_dimension(top)
        if dim != 1:
            raise MatroidworksError(
                f"internal: top graded piece has dimension {dim}"
            )
        coords = (_ONE,)
        deg = 0
        for idx in self.canonical_flag():
            coords = self.multiply_by_flat(deg, coords, idx)
            deg += 1
        c = coords[0]
        if not c:
            raise MatroidworksError("internal: canonical flag monomial vanished")
        self._top_std_volume = _ONE / c
        return self._top_std_volume


_BUILD_TOKEN = object()


def chow_ring(m: Matroid) -> ChowRing:
    if m.rank < 1:
        raise InputError("Chow ring needs rank at least 1")
    if m.loops():
        raise LoopPresent(f"loops {list(m.loops())} are not allowed")
    return ChowRing(m, _BUILD_TOKEN)


class ChowElement:
    """Homogeneous element in standard-monomial coordinates."""

    __slots__ = ("ring", "degree", "coords", "flat_coeffs")

    def __init__(self, ring: ChowRing, degree: int, coords, flat_coeffs=None):
        self.ring = ring
        self.degree = degree
        self.coords = tuple(Fraction(c) for c in coords)
        self.flat_coeffs = flat_coeffs
        if len(self.coords) != ring.graded_dimension(degree):
            raise WrongDegree(
                f"{len(self.coords)} coordinates for a dimension-"
                f"{ring.graded_dimension(degree)} component"
            )

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChowElement)
            and self.ring is other.ring
            and self.degree == other.degree
            and self.coords == other.coords
        )

    def __add__(self, other: "ChowElement") -> "ChowElement":
        self._match(other)
        return ChowElement(
            self.ring,
            self.degree,
            tuple(a + b for a, b in zip(self.coords, other.coords)),
        )

    def __sub__(self, other: "ChowElement") -> "ChowElement":
        self._match(other)
        return ChowElement(
            self.ring,
            self.degree,
            tuple(a - b for a, b in zip(self.coords, other.coords)),
        )

    def __neg__(self) -> "ChowElement":
        return self.scale(-1)

    def scale(self, c) -> "ChowElement":
        c = Fraction(c)
        return ChowElement(
            self.ring, self.degree, tuple(c * a for a in self.coords)
        )

    def _match(self, other):
        if self.ring is not other.ring:
            raise InputError("elements of different Chow rings")
        if self.degree != other.degree:
            raise WrongDegree("degrees differ")

    def __mul__(self, other: "ChowElement") -> "ChowElement":
        if self.ring is not other.ring:
            raise InputError("elements of different Chow rings")
        ring = self.ring
        data = ring._degree(other.degree)
        target = self.degree + other.degree
        acc = [_ZERO] * ring.graded_dimension(target)
        for i, c in enumerate(other.coords):
            if not c:
                continue
            mono = data.monomials[data.std_positions[i]]
            cur = self.coords
            deg = self.degree
            for f, e in mono:
                for _ in range(e):
                    cur = ring.multiply_by_flat(deg, cur, f)
                    deg += 1
            for s, v in enumerate(cur):
                if v:
                    acc[s] += c * v
        return ChowElement(ring, target, acc)

    def __pow__(self, k: int) -> "ChowElement":
        if k < 0:
            raise InputError("negative powers")
        acc = self.ring.one()
        for _ in range(k):
            acc = acc * self
        return acc

    def __repr__(self) -> str:
        return f"ChowElement(degree={self.degree}, coords={self.coords})"


def alpha_element(ring: ChowRing) -> ChowElement:
    return ring.element_from_flat_coeffs(
        {f: 1 for f in ring.flats if f & 1}
    )


def beta_element(ring: ChowRing) -> ChowElement:
    return ring.element_from_flat_coeffs(
        {f: 1 for f in ring.flats if not f & 1}
    )


def volume_map(eta: ChowElement) -> Fraction:
    ring = eta.ring
    if eta.degree != ring.top_degree:
        raise WrongDegree(
            f"volume is defined in degree {ring.top_degree}, got {eta.degree}"
        )
    if not eta.coords:
        return _ZERO
    return eta.coords[0] * ring._top_volume_unit()


def is_lefschetz_element(ring: ChowRing, ell: ChowElement) -> bool:
    """Strict submodularity of the flat coefficients over incomparable
    pairs, with c = 0 on the empty flat and the full ground set."""
    if ell.degree != 1:
        raise WrongDegree("Lefschetz candidates live in degree 1")
    if ell.flat_coeffs is None:
        raise InputError("element carries no flat coefficients")
    m = ring.matroid
    flats = ring.flats
    coeffs = ell.flat_coeffs

    def c_of(mask: int) -> Fraction:
        idx = ring.flat_index.get(mask)
        return coeffs[idx] if idx is not None else _ZERO

    for i in range(len(flats)):
        fi = flats[i]
        for j in range(i + 1, len(flats)):
            fj = flats[j]
            inter = fi & fj
            if inter == fi or inter == fj:
                continue
            join = m.closure(fi | fj)
            if not coeffs[i] + coeffs[j] > c_of(inter) + c_of(join):
                return False
    return True


@dataclass(frozen=True)
class PairingReport:
    degree: int
    lefschetz: ChowElement
    mat1: ExactMatrix
    mat2: ExactMatrix
    kernel: tuple
    restricted_form: ExactMatrix
    poincare_nondegenerate: bool
    hard_lefschetz_iso: bool
    hodge_riemann_definite: bool

    def to_json_dict(self) -> dict:
        return {
            "k": self.degree,
            "mat1": [[str(e) for e in row] for row in self.mat1.rows],
            "mat2": [[str(e) for e in row] for row in self.mat2.rows],
            "kernel_dimension": len(self.kernel),
            "restricted_form": [
                [str(e) for e in row] for row in self.restricted_form.rows
            ],
            "poincare_nondegenerate": self.poincare_nondegenerate,
            "hard_lefschetz_iso": self.hard_lefschetz_iso,
            "hodge_riemann_definite": self.hodge_riemann_definite,
        }


def _as_elements(ring: ChowRing, degree: int):
    dim = ring.graded_dimension(degree)
    out = []
    for s in range(dim):
        coords = [_ZERO] * dim
        coords[s] = _ONE
        out.append(ChowElement(ring, degree, coords))
    return out


def kahler_report(ring: ChowRing, k: int, ell: ChowElement) -> PairingReport:
    """Poincare pairing, Lefschetz form, and the Hodge-Riemann check.

    Mat1 pairs A^k with A^{D-k}; Mat2 is the form vol(a * ell^{D-2k} * b)
    on A^k; the Hodge-Riemann form is (-1)^k Mat2 restricted to the kernel
    of multiplication by ell^{rk-2k} into A^{rk-k}, tested for positive
    definiteness by exact leading principal minors.
    """
    m = ring.matroid
    top = ring.top_degree
    if k < 0 or 2 * k > top:
        raise WrongDegree(f"need 0 <= k <= {top}/2, got {k}")
    if ell.degree != 1:
        raise WrongDegree("the Lefschetz element must have degree 1")
    dim_k = ring.graded_dimension(k)
    dim_co = ring.graded_dimension(top - k)
    if dim_k != dim_co:
        raise MatroidworksError(
            "internal: graded dimensions break Poincare symmetry"
        )
    basis_k = _as_elements(ring, k)
    basis_co = _as_elements(ring, top - k)
    unit = ring._top_volume_unit() if dim_k else _ONE

    def vol_coords(coords) -> Fraction:
        return coords[0] * unit if coords else _ZERO

    mat1_rows = []
    for b in basis_k:
        row = []
        for b2 in basis_co:
            row.append(vol_coords((b * b2).coords))
        mat1_rows.append(row)

    ell_hl = ell ** (top - 2 * k)
    lifted = [b * ell_hl for b in basis_k]  # degree top - k
    mat2_rows = []
    for w in lifted:
        row = []
        for b2 in basis_k:
            row.append(vol_coords((w * b2).coords))
        mat2_rows.append(row)

    mat1 = ExactMatrix.from_rows(_Q, mat1_rows) if dim_k else ExactMatrix(_Q, ())
    mat2 = ExactMatrix.from_rows(_Q, mat2_rows) if dim_k else ExactMatrix(_Q, ())
    poincare = dim_k == 0 or mat1.rank() == dim_k
    lefschetz_iso = dim_k == 0 or mat2.rank() == dim_k

    # primitive part: kernel of ell^{rk - 2k} out of A^k
    ell_pr = ell ** (m.rank - 2 * k)
    target_dim = ring.graded_dimension(m.rank - k)
    kernel_vectors: list[tuple]
    if dim_k == 0:
        kernel_vectors = []
    elif target_dim == 0:
        kernel_vectors = [tuple(b.coords) for b in _as_elements(ring, k)]
    else:
        cols = [(b * ell_pr).coords for b in basis_k]
        map_rows = [
            [cols[t][s] for t in range(dim_k)] for s in range(target_dim)
        ]
        kernel_vectors = [
            tuple(v) for v in ExactMatrix.from_rows(_Q, map_rows).kernel_basis()
        ]
    kernel = tuple(
        ChowElement(ring, k, vec) for vec in kernel_vectors
    )

    sign = -1 if k % 2 else 1
    kd = len(kernel_vectors)
    # sign * K^T Mat2 K in two passes
    mk = [
        [
            sum(mat2_rows[a][b] * kernel_vectors[t][b] for b in range(dim_k))
            for t in range(kd)
        ]
        for a in range(dim_k)
    ]
    restricted_rows = [
        [
            sign
            * sum(kernel_vectors[s][a] * mk[a][t] for a in range(dim_k))
            for t in range(kd)
        ]
        for s in range(kd)
    ]
    restricted = (
        ExactMatrix.from_rows(_Q, restricted_rows) if kd else ExactMatrix(_Q, ())
    )
    definite = kd == 0 or restricted.is_positive_definite()
    return PairingReport(
        degree=k,
        lefschetz=ell,
        mat1=mat1,
        mat2=mat2,
        kernel=kernel,
        restricted_form=restricted,
        poincare_nondegenerate=poincare,
        hard_lefschetz_iso=lefschetz_iso,
        hodge_riemann_definite=definite,
    )


def reduced_char_coefficients_via_volumes(ring: ChowRing) -> tuple[int, ...]:
    """((-1)^j vol(alpha^{r-1-j} beta^j))_j, the coefficients of the reduced
    characteristic polynomial from its leading term down to the constant."""
    top = ring.top_degree
    a = alpha_element(ring)
    b = beta_element(ring)
    out = []
    for j in range(top + 1):
        v = volume_map((a ** (top - j)) * (b**j))
        if v.denominator != 1:
            raise MatroidworksError(f"internal: non-integral volume {v}")
        out.append(int(v) if j % 2 == 0 else -int(v))
    return tuple(out)


def truncation_volume_check(m: Matroid) -> bool:
    """vol_M(alpha^{r-1-j} beta^j) = vol_{trunc M}(alpha^{r-2-j} beta^j)
    for all j <= r-2: multiplying by one alpha is truncation."""
    if m.rank < 3:
        raise WrongDegree("truncation comparison needs rank at least 3")
    big = chow_ring(m)
    small = chow_ring(m.truncate())
    a1, b1 = alpha_element(big), beta_element(big)
    a2, b2 = alpha_element(small), beta_element(small)
    for j in range(m.rank - 1):
        lhs = volume_map((a1 ** (m.rank - 1 - j)) * (b1**j))
        rhs = volume_map((a2 ** (m.rank - 2 - j)) * (b2**j))
        if lhs != rhs:
            return False
    return True
