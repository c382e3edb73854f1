"""Configuration sets, refinement cells, splits and bounded equivalence."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from confpara.actions import LeftTranslation, TrivialAction
from confpara.catalog import cyclic, fixture_groups
from confpara.codec import zigzag_position, zigzag_value
from confpara.configurations import (
    ConfigPair,
    Partition,
    check_partition_covers,
    config_equiv_bounded,
    configuration_cells,
    configurations_finite,
    configurations_with_cells,
    countable_config_prefixes,
    default_partition_cap,
    merge_blocks,
    set_partitions,
    singleton_split,
    verify_refinement,
    windowed_configuration_set,
)
from confpara.errors import InputError, PreconditionError, ResourceCapExceeded
from confpara.groups import FreeAbelianGroup

FIXTURES = fixture_groups()


def residue_partition(modulus):
    """Z split by residue; block b enumerates b-1, b-1+m, b-1-m, ... by zigzag."""
    return Partition.classifier(
        lambda v: v % modulus + 1,
        block_count=modulus,
        block_unrank=lambda b, pos: (b - 1) + modulus * zigzag_value(pos),
        block_rank=lambda b, v: zigzag_position((v - (b - 1)) // modulus),
    )


# ---------------------------------------------------------------------------
# partitions


def test_explicit_partition_blocks():
    p = Partition.explicit([[0, 2], [1, 3]])
    assert p.block_count == 2
    assert p.block_of(0) == 1 and p.block_of(3) == 2
    assert p.is_explicit
    with pytest.raises(InputError):
        p.block_of(7)


def test_explicit_partition_rejects_overlap():
    with pytest.raises(InputError):
        Partition.explicit([[0, 1], [1, 2]])
    with pytest.raises(InputError):
        Partition.explicit([[0], []])


def test_partition_cover_check():
    act = LeftTranslation(cyclic(4))
    check_partition_covers(act, Partition.explicit([[0, 2], [1, 3]]))
    with pytest.raises(InputError):
        check_partition_covers(act, Partition.explicit([[0, 2], [1]]))


def test_residue_partition_enumerators():
    p = residue_partition(3)
    assert p.has_enumerators
    for b in (1, 2, 3):
        for pos in range(6):
            v = p.block_unrank(b, pos)
            assert p.block_of(v) == b
            assert p.block_rank(b, v) == pos


# ---------------------------------------------------------------------------
# finite configuration sets


def test_z2_singletons():
    act = LeftTranslation(cyclic(2))
    pair = ConfigPair((1,), Partition.explicit([[0], [1]]))
    assert configurations_finite(act, pair) == ((1, 2), (2, 1))


def test_z3_two_blocks():
    act = LeftTranslation(cyclic(3))
    pair = ConfigPair((1,), Partition.explicit([[0], [1, 2]]))
    assert configurations_finite(act, pair) == ((1, 2), (2, 1), (2, 2))


def test_z4_pair_with_identity_entry():
    act = LeftTranslation(cyclic(4))
    pair = ConfigPair((0, 1), Partition.explicit([[0, 2], [1, 3]]))
    assert configurations_finite(act, pair) == ((1, 1, 2), (2, 2, 1))


def test_generating_assertion_checked():
    act = LeftTranslation(cyclic(6))
    pair = ConfigPair((2,), Partition.explicit([[0, 2, 4], [1, 3, 5]]),
                      generating=True)
    with pytest.raises(PreconditionError):
        configurations_finite(act, pair)


names = sorted(FIXTURES)


@st.composite
def fixture_pair(draw):
    g = FIXTURES[draw(st.sampled_from(names))]
    n = g.order()
    k = draw(st.integers(min_value=1, max_value=3))
    elements = tuple(
        g.element_at(draw(st.integers(min_value=1, max_value=n))) for _ in range(k)
    )
    raw = [draw(st.integers(min_value=1, max_value=4)) for _ in range(n)]
    # normalize to first-occurrence labels so every block 1..max is hit
    seen = {}
    labels = []
    for v in raw:
        labels.append(seen.setdefault(v, len(seen) + 1))
    table = dict(zip(g.elements(), labels))
    partition = Partition.classifier(table.__getitem__, block_count=max(labels))
    return g, ConfigPair(elements, partition)


@given(fixture_pair())
@settings(max_examples=150)
def test_matches_naive_oracle(data):
    g, pair = data
    act = LeftTranslation(g)
    got = set(configurations_finite(act, pair))
    expected = oracles.naive_configurations(
        g.elements(), g.mul, pair.elements, pair.partition.block_of
    )
    assert got == expected


@given(fixture_pair())
@settings(max_examples=60)
def test_windowed_subset_of_full(data):
    g, pair = data
    act = LeftTranslation(g)
    full = set(configurations_finite(act, pair))
    half = g.elements()[: max(1, g.order() // 2)]
    from confpara.groups import Window

    window = Window("part", f"part({len(half)})", tuple(half))
    assert set(windowed_configuration_set(act, pair, window)) <= full


# ---------------------------------------------------------------------------
# cells and the refinement identity


def test_z4_cells():
    act = LeftTranslation(cyclic(4))
    pair = ConfigPair((1,), Partition.explicit([[0, 2], [1, 3]]))
    cells = configuration_cells(act, pair, (1, 2))
    assert cells == (frozenset({0, 2}), frozenset({1, 3}))


def test_cells_partition_block():
    # E_i is the disjoint union of cells x_j(C) over C with C_j = i
    act = LeftTranslation(FIXTURES["S3"])
    g = FIXTURES["S3"]
    pair = ConfigPair(
        (g.element_at(2), g.element_at(4)),
        Partition.explicit([[g.element_at(i) for i in (1, 2)],
                            [g.element_at(i) for i in (3, 4, 5, 6)]]),
    )
    by_config = configurations_with_cells(act, pair)
    for i in (1, 2):
        block_pts = {x for x in g.elements() if pair.partition.block_of(x) == i}
        for j in range(3):
            union = set()
            for c, cells in by_config.items():
                if c[j] == i:
                    assert union.isdisjoint(cells[j])
                    union |= cells[j]
            assert union == block_pts


@given(fixture_pair())
@settings(max_examples=60)
def test_refinement_identity_holds(data):
    g, pair = data
    act = LeftTranslation(g)
    report = verify_refinement(act, pair, configurations_with_cells(act, pair))
    assert report.ok, report.violation


def test_refinement_flags_corruption():
    act = LeftTranslation(cyclic(4))
    pair = ConfigPair((1,), Partition.explicit([[0, 2], [1, 3]]))
    cells = dict(configurations_with_cells(act, pair))
    # drop a point from a base cell: its position-0 tiling gains a gap
    (c0, cs0) = next(iter(sorted(cells.items())))
    cells[c0] = (frozenset(list(cs0[0])[1:]),) + cs0[1:]
    report = verify_refinement(act, pair, cells)
    assert not report.ok
    assert report.violation["kind"] in ("gap", "overlap", "wrong-block")


def test_refinement_flags_overlap():
    act = LeftTranslation(cyclic(4))
    pair = ConfigPair((1,), Partition.explicit([[0, 2], [1, 3]]))
    cells = dict(configurations_with_cells(act, pair))
    items = sorted(cells)
    a, b = items[0], items[1]
    # graft one base cell onto the other
    cells[b] = (cells[a][0] | cells[b][0],) + cells[b][1:]
    report = verify_refinement(act, pair, cells)
    assert not report.ok


# ---------------------------------------------------------------------------
# countable prefixes


def test_prefixes_on_integer_window():
    act = LeftTranslation(FreeAbelianGroup(1))
    pair = ConfigPair((1,), residue_partition(2))
    res = countable_config_prefixes(act, pair, 1, act.window({"box": 5}))
    assert res.prefixes == ((1, 2), (2, 1))
    assert not res.exact


def test_prefixes_exact_when_fully_windowed():
    act = LeftTranslation(cyclic(4))
    pair = ConfigPair((1,), Partition.explicit([[0, 2], [1, 3]]))
    res = countable_config_prefixes(act, pair, 1, act.window({"all": True}))
    assert res.exact
    assert res.prefixes == ((1, 2), (2, 1))


def test_prefix_depth_bounds():
    act = LeftTranslation(cyclic(4))
    pair = ConfigPair((1,), Partition.explicit([[0, 2], [1, 3]]))
    with pytest.raises(InputError):
        countable_config_prefixes(act, pair, 3, act.window({"all": True}))


# ---------------------------------------------------------------------------
# singleton split and merge


def split_fixture(modulus, elements, block_index):
    act = LeftTranslation(FreeAbelianGroup(1))
    pair = ConfigPair(tuple(elements), residue_partition(modulus))
    return act, pair, singleton_split(act, pair, block_index)


def test_split_produces_singletons_with_identity_tail():
    act, pair, split = split_fixture(2, (1,), 1)
    sp = split.pair
    assert sp.identity_tail_after == 1
    assert sp.element_at(1) == 1
    assert sp.element_at(2) == 0 and sp.element_at(9) == 0
    # designated block 1 (evens) relabeled to 2, then singletons 2, 3, ...
    part = sp.partition
    seen = {part.block_of(v) for v in range(-6, 7)}
    assert 1 in seen  # odds keep a finite label
    evens = sorted({part.block_of(v) for v in range(-6, 7, 2)})
    assert len(evens) == 7  # every even lands in its own block
    assert min(evens) >= 2


def test_split_prefixes_repeat_base_past_tuple_length():
    # identity tail forces d_j = d_0 for every position past the real tuple
    act, pair, split = split_fixture(2, (1,), 2)
    window = act.window({"box": 8})
    res = countable_config_prefixes(act, split.pair, 4, window)
    assert res.prefixes
    for d in res.prefixes:
        assert d[2] == d[0] and d[3] == d[0] and d[4] == d[0]


def test_split_rejects_explicit_partition():
    act = LeftTranslation(cyclic(4))
    pair = ConfigPair((1,), Partition.explicit([[0, 2], [1, 3]]))
    with pytest.raises(PreconditionError):
        singleton_split(act, pair, 1)


def test_split_rejects_partition_without_enumerators():
    act = LeftTranslation(FreeAbelianGroup(1))
    pair = ConfigPair((1,), Partition.classifier(lambda v: v % 2 + 1, block_count=2))
    with pytest.raises(PreconditionError):
        singleton_split(act, pair, 1)


@given(
    st.integers(min_value=2, max_value=5),
    st.lists(st.integers(min_value=-3, max_value=3), min_size=1, max_size=3),
    st.data(),
)
@settings(max_examples=60, deadline=None)
def test_merge_undoes_split(modulus, elements, data):
    block_index = data.draw(st.integers(min_value=1, max_value=modulus))
    act, pair, split = split_fixture(modulus, elements, block_index)
    merged = merge_blocks(split.pair, cutoff=modulus)
    assert merged.elements == pair.elements
    window = act.window({"box": 25})
    got = set(windowed_configuration_set(act, merged, window))
    relabel = split.relabeling
    expected = {
        tuple(relabel[v - 1] for v in c)
        for c in windowed_configuration_set(act, pair, window)
    }
    assert got == expected


def test_merge_requires_countable_pair():
    act = LeftTranslation(cyclic(4))
    pair = ConfigPair((1,), Partition.explicit([[0, 2], [1, 3]]))
    with pytest.raises(InputError):
        merge_blocks(pair, 2)


# ---------------------------------------------------------------------------
# set partitions


@pytest.mark.parametrize("n,m", [(1, 1), (3, 2), (4, 4), (5, 3), (6, 2)])
def test_set_partition_counts(n, m):
    got = list(set_partitions(n, m))
    assert len(got) == oracles.partitions_up_to(n, m)
    assert len({labels for labels, _ in got}) == len(got)


def test_set_partitions_are_restricted_growth():
    for labels, b in set_partitions(5, 4):
        assert labels[0] == 1
        assert max(labels) == b
        for i in range(1, 5):
            assert labels[i] <= max(labels[:i]) + 1


def test_bell_numbers():
    # full partition counts against the recurrence oracle
    for n in range(1, 7):
        assert len(list(set_partitions(n, n))) == oracles.bell(n)


# ---------------------------------------------------------------------------
# bounded equivalence


def test_trivial_vs_translation_distinguished():
    z2 = cyclic(2)
    translation = LeftTranslation(z2)
    trivial = TrivialAction(z2, points=[0, 1])
    verdict = config_equiv_bounded(translation, trivial, 1, 2)
    assert not verdict.equivalent
    assert verdict.only_in_first is not None
    w = verdict.only_in_first
    assert w.configurations == ((1, 2), (2, 1))


def test_z4_vs_z2xz2_distinguished_at_1_2():
    from confpara.groups import direct_product

    z4 = LeftTranslation(cyclic(4))
    z22 = LeftTranslation(direct_product(cyclic(2), cyclic(2)))
    verdict = config_equiv_bounded(z4, z22, 1, 2)
    assert not verdict.equivalent
    assert verdict.family_sizes == (5, 4)
    assert verdict.only_in_first is not None
    assert verdict.only_in_second is None  # smaller family embeds in the larger


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4", "Z2xZ2"])
def test_group_equivalent_to_itself(name):
    a1 = LeftTranslation(FIXTURES[name])
    a2 = LeftTranslation(FIXTURES[name])  # distinct instance: no shortcut
    verdict = config_equiv_bounded(a1, a2, 1, 3)
    assert verdict.equivalent
    assert verdict.family_sizes[0] == verdict.family_sizes[1]


def test_equiv_respects_cap():
    a1 = LeftTranslation(cyclic(4))
    a2 = LeftTranslation(cyclic(4))
    with pytest.raises(ResourceCapExceeded):
        config_equiv_bounded(a1, a2, 1, 4, cap=3)


def test_default_cap_env(monkeypatch):
    monkeypatch.delenv("CONFPARA_CAP", raising=False)
    assert default_partition_cap() == 500_000
    monkeypatch.setenv("CONFPARA_CAP", "1234")
    assert default_partition_cap() == 1234
    monkeypatch.setenv("CONFPARA_CAP", "zero")
    with pytest.raises(InputError):
        default_partition_cap()
