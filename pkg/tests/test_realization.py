"""Realization spaces, realizability decisions, finite-field search.

Frozen presentations (free variables, ideal generators, inequations) were
derived by running the pipeline and cross-checking the verdicts against
the classical facts: Fano iff characteristic two, Moebius-Kantor iff the
field contains a primitive sixth root of unity, Pappus everywhere, Vamos
nowhere.
"""

import random

import pytest

from matroidworks.catalog import (
    fano,
    graphic_k4,
    moebius_kantor,
    non_fano,
    pappus,
    uniform,
    vamos,
)
from matroidworks.errors import LoopPresent, SearchBudgetExceeded
from matroidworks.matroid import (
    Matroid,
    mask_elements,
    matroid_from_bases,
    matroid_from_matrix,
)
from matroidworks.polynomials import poly_str
from matroidworks.realization import (
    UNDECIDED,
    SpaceVerdict,
    choose_basis,
    find_realization,
    is_realizable,
    is_realizable_over_q,
    realizability_table,
    realization_space,
)


def test_undecided_sentinel_refuses_bool():
    with pytest.raises(TypeError):
        bool(UNDECIDED)
    assert repr(UNDECIDED) == "UNDECIDED"


def test_fano_profile():
    m = fano()
    for p in (0, 3, 5, 7, 11, 13):
        assert is_realizable(m, p) is False
    assert is_realizable(m, 2) is True


def test_fano_char2_space_is_rigid():
    space = realization_space(fano(), 2)
    assert space.verdict is SpaceVerdict.NONEMPTY
    assert space.num_free_variables == 0
    assert space.ideal_generators == ()


def test_non_fano_profile():
    m = non_fano()
    assert is_realizable(m, 0) is True
    assert is_realizable(m, 3) is True
    assert is_realizable(m, 5) is True
    assert is_realizable(m, 2) is False


def test_vamos_nowhere():
    m = vamos()
    for p in (0, 2, 3, 5, 7, 11, 13):
        assert is_realizable(m, p) is False


def test_k4_rigid_over_any_characteristic():
    m = graphic_k4()
    for p in (0, 2):
        space = realization_space(m, p)
        assert space.verdict is SpaceVerdict.NONEMPTY
        assert space.num_free_variables == 0
        assert space.ideal_generators == ()


def test_pappus_char0_presentation():
    space = realization_space(pappus(), 0)
    assert space.verdict is SpaceVerdict.NONEMPTY
    assert space.basis == (1, 2, 6)
    assert space.free_variables == ("x_{2,2}", "x_{2,4}")
    assert space.ideal_generators == ()
    assert len(space.inequations) == 7


def test_moebius_kantor_char0_presentation():
    space = realization_space(moebius_kantor(), 0)
    assert space.verdict is SpaceVerdict.NONEMPTY
    assert space.num_free_variables == 1
    gens = [poly_str(g) for g in space.ideal_generators]
    var = space.free_variables[0]
    assert gens == [f"{var}^2 - {var} + 1"]
    ineqs = sorted(poly_str(u) for u in space.inequations)
    assert ineqs == [var, f"{var} - 1"]


def test_moebius_kantor_table():
    table = realizability_table(moebius_kantor(), 13)
    assert set(table) == {2, 3, 4, 5, 7, 8, 9, 11, 13}
    assert {q for q, ok in table.items() if ok} == {3, 4, 7, 9, 13}


def test_uniform_small_everywhere():
    m = uniform(2, 4)
    for p in (0, 2, 3):
        assert is_realizable(m, p) is True
    # the projective line over F_q has q + 1 points, so F_2 is one short
    assert is_realizable_over_q(m, 2) is False
    assert is_realizable_over_q(m, 3) is True
    assert is_realizable_over_q(m, 4) is True


def test_verdict_independent_of_basis_choice():
    rng = random.Random(20)
    for m, expected in ((fano(), SpaceVerdict.EMPTY), (non_fano(), SpaceVerdict.NONEMPTY)):
        bases = [mask_elements(b) for b in m.bases]
        picks = rng.sample(bases, 4)
        default = choose_basis(m)
        if default not in picks:
            picks.append(default)
        for b in picks:
            assert realization_space(m, 0, basis=b).verdict is expected


def test_simplify_off_agrees_on_verdicts():
    for m, p, expected in (
        (fano(), 0, SpaceVerdict.EMPTY),
        (fano(), 2, SpaceVerdict.NONEMPTY),
        (graphic_k4(), 0, SpaceVerdict.NONEMPTY),
    ):
        raw = realization_space(m, p, simplify=False)
        assert raw.verdict is expected
        assert raw.substitutions == ()


def test_find_realization_round_trip():
    for m, q in ((pappus(), 11), (fano(), 2), (graphic_k4(), 5)):
        real = find_realization(m, q)
        assert real is not None
        rows = real.rows()
        assert len(rows) == m.rank
        assert all(len(row) == m.n for row in rows)
        assert matroid_from_matrix(real.field, rows) == m


def test_find_realization_none_when_empty():
    assert find_realization(fano(), 3) is None
    assert is_realizable_over_q(fano(), 3) is False


def test_search_budget_exceeded():
    # two surviving variables over F_11 means 121 assignments
    with pytest.raises(SearchBudgetExceeded):
        is_realizable_over_q(pappus(), 11, search_budget=100)


def test_loops_rejected():
    m = matroid_from_bases(3, [[1, 2]])
    assert m.loops()
    with pytest.raises(LoopPresent):
        realization_space(m, 0)


def test_rank_zero_and_full_rank():
    free = uniform(3, 3)
    space = realization_space(free, 0)
    assert space.verdict is SpaceVerdict.NONEMPTY
    assert find_realization(free, 2) is not None
    zero = Matroid(0, (0,), _validated=True)
    assert realization_space(zero, 0).verdict is SpaceVerdict.NONEMPTY


def test_json_dict_shape():
    space = realization_space(moebius_kantor(), 0)
    d = space.to_json_dict()
    assert d["characteristic"] == 0
    assert d["verdict"] == "NonEmpty"
    assert len(d["free_variables"]) == 1
    assert len(d["matrix"]) == space.matroid.rank
    assert all(len(row) == space.matroid.n for row in d["matrix"])
    for sub in d["substitutions"]:
        assert set(sub) == {"variable", "numerator", "denominator"}
