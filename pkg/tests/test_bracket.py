import pytest

from qslope import (
    DELTA,
    DefaultBracketCache,
    Engine,
    EngineConfig,
    LaurentPoly,
    StateSumCapExceeded,
    SweepWidthExceeded,
    add_kink,
    braid_closure,
    bracket,
    bracket_statesum,
    bracket_sweep,
    cable,
    parse_pd,
    r2_move,
    sweep_order,
    unknot,
)

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
TREFOIL_BRACKET = LaurentPoly({9: -1, 1: 1, -3: 1, -7: 1})
SMALL = ("0_1", "3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3")


def engines(d):
    return bracket_statesum(d).value, bracket_sweep(d).value


def kink_factor(sign):
    return LaurentPoly({3 * sign: -1})


def test_unknot_and_empty_diagram():
    assert engines(unknot()) == (DELTA, DELTA)
    assert engines(parse_pd("")) == (1, 1)
    assert bracket_statesum(unknot()).states_or_width == 1


@pytest.mark.parametrize("sign", [1, -1])
def test_kinked_unknot(sign):
    statesum, sweep = engines(add_kink(unknot(), sign))
    assert statesum == sweep == kink_factor(sign) * DELTA


def test_trefoil():
    d = parse_pd(TREFOIL)
    assert engines(d) == (TREFOIL_BRACKET, TREFOIL_BRACKET)
    assert bracket_statesum(d).states_or_width == 8


def test_two_free_loops():
    d = braid_closure([], strands=2)
    assert d.free_loops == 2
    assert engines(d) == (DELTA ** 2, DELTA ** 2)


@pytest.mark.parametrize("label", SMALL)
@pytest.mark.parametrize("sign", [1, -1])
def test_kink_multiplies_by_a_cubed(catalog, label, sign):
    d = catalog[label].minimal_diagram
    before = bracket_statesum(d).value
    after = add_kink(d, sign)
    assert bracket_statesum(after).value == before * kink_factor(sign)
    assert bracket_sweep(after).value == before * kink_factor(sign)


@pytest.mark.parametrize("label", SMALL[1:])
def test_r2_invariance(catalog, label):
    d = catalog[label].minimal_diagram
    moved = r2_move(d)
    assert bracket_statesum(moved).value == bracket_statesum(d).value
    assert bracket_sweep(moved).value == bracket_sweep(d).value


@pytest.mark.parametrize(
    "left, right",
    [
        ([1, 2, 1], [2, 1, 2]),
        ([-1, -2, -1], [-2, -1, -2]),
        ([1, 2, -1], [-2, 1, 2]),
        ([1, 2, 1, 3, 3], [2, 1, 2, 3, 3]),
        ([2, 3, 2, -1], [3, 2, 3, -1]),
    ],
)
def test_r3_pairs(left, right):
    strands = max(abs(g) for g in left + right) + 1
    a = braid_closure(left, strands)
    b = braid_closure(right, strands)
    assert bracket_statesum(a).value == bracket_statesum(b).value
    assert bracket_sweep(a).value == bracket_sweep(b).value


def test_engines_agree_on_random_braids(rng):
    for _ in range(40):
        strands = rng.randint(1, 4)
        word = []
        if strands > 1:
            word = [rng.choice([-1, 1]) * rng.randint(1, strands - 1) for _ in range(rng.randint(0, 10))]
        d = braid_closure(word, strands)
        statesum, sweep = engines(d)
        assert statesum == sweep, word


@pytest.mark.parametrize("label", SMALL)
def test_engines_agree_on_catalog(catalog, label):
    entry = catalog[label]
    for d in [entry.minimal_diagram, *entry.variant_diagrams]:
        statesum, sweep = engines(d)
        assert statesum == sweep, d.label


def test_engines_agree_on_pretzel(catalog):
    d = catalog["P(-2,-3,3,3)"].minimal_diagram
    assert bracket_statesum(d).value == bracket_sweep(d).value


@pytest.mark.parametrize(
    "label",
    [
        "0_1",
        "3_1",
        "4_1",
        "5_1",
        "5_2",
        pytest.param("6_1", marks=pytest.mark.slow),
        pytest.param("6_2", marks=pytest.mark.slow),
        pytest.param("6_3", marks=pytest.mark.slow),
    ],
)
def test_engines_agree_on_two_cables(catalog, label):
    d = cable(catalog[label].minimal_diagram, 2)
    assert d.crossing_number <= 24
    assert bracket_statesum(d).value == bracket_sweep(d).value


def test_statesum_cap():
    d = parse_pd(TREFOIL)
    with pytest.raises(StateSumCapExceeded) as info:
        bracket_statesum(d, cap=2)
    assert info.value.cap == 2
    assert info.value.required == 3
    assert info.value.cap_name == "statesum-cap"


def test_width_cap():
    d = parse_pd(TREFOIL)
    _, width = sweep_order(d)
    assert width == 4
    with pytest.raises(SweepWidthExceeded) as info:
        bracket_sweep(d, width_cap=3)
    assert info.value.required == width
    assert info.value.cap_name == "width-cap"


def test_sweep_order_is_a_permutation(catalog):
    for entry in catalog.values():
        d = entry.minimal_diagram
        order, width = sweep_order(d)
        assert sorted(order) == list(range(d.crossing_number))
        assert bracket_sweep(d).states_or_width == width


def test_cabled_sweep_width_stays_small(catalog):
    for label in ("3_1", "4_1"):
        _, width = sweep_order(cable(catalog[label].minimal_diagram, 3))
        assert width <= 16, label


def test_statesum_jobs_agree(catalog):
    d = cable(catalog["4_1"].minimal_diagram, 2)
    assert bracket_statesum(d, jobs=2).value == bracket_statesum(d).value


def test_dispatch_and_cache():
    d = parse_pd(TREFOIL)
    config = EngineConfig()
    first = bracket(d, config)
    assert first.engine == Engine.STATESUM
    assert bracket(d, config) is first
    assert len(config.cache) == 1

    sweep = EngineConfig(engine=Engine.SWEEP, cache=config.cache)
    result = bracket(d, sweep)
    assert result.engine == Engine.SWEEP
    assert result.value == first.value

    small = EngineConfig(statesum_cap=2, cache=DefaultBracketCache(0))
    result = bracket(d, small)
    assert result.engine == Engine.SWEEP
    assert len(small.cache) == 0


def test_config_validation():
    with pytest.raises(ValueError):
        EngineConfig(engine="magic")
    with pytest.raises(ValueError):
        EngineConfig(width_cap=-1)
    with pytest.raises(ValueError):
        EngineConfig(jobs=0)
    with pytest.raises(TypeError):
        EngineConfig(cache={})
    config = EngineConfig(jobs=2)
    assert config.replace(jobs=1).jobs == 1
    assert config.replace(jobs=1).cache is config.cache
    assert config.to_dict() == {"engine": "auto", "statesum_cap": 24, "width_cap": 16, "jobs": 2}
