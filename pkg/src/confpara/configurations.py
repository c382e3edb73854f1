"""Configuration sets of group actions.

Given an ordered tuple (g_1, ..., g_n) of group elements and a partition
{E_1, ..., E_m} of the point set, the configuration of a point x is the
tuple (c(x), c(g_1 . x), ..., c(g_n . x)) of 1-based block indices.  The
configuration set is the set of tuples realized by at least one point, and
each realized tuple C owns a family of cells: the base cell of points
realizing C and its translates under each g_j.

Countable tuples and partitions are handled through windows: results over a
window are sound under-approximations and say so, except when the point set
is finite and fully covered, in which case they are exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Optional

from .errors import InputError, PreconditionError, ResourceCapExceeded
from .groups import is_generating


class Partition:
    """Partition of the point set into 1-based blocks.

    Explicit partitions list their blocks; classifier partitions give a
    total function point -> block index, an optional block count, and
    optional per-block enumerators (unrank/rank within a block, 0-based)
    which the singleton-split construction needs for its designated block.
    """

    def __init__(self, *, blocks=None, classify=None, block_count=None,
                 block_unrank=None, block_rank=None):
        if (blocks is None) == (classify is None):
            raise InputError("exactly one of blocks/classify must be given")
        if blocks is not None:
            blocks = tuple(frozenset(b) for b in blocks)
            if not blocks:
                raise InputError("a partition needs at least one block")
            seen = set()
            for i, b in enumerate(blocks, start=1):
                if not b:
                    raise InputError(f"block {i} is empty")
                if seen & b:
                    raise InputError(f"block {i} overlaps an earlier block")
                seen |= b
            self.blocks = blocks
            self.block_count = len(blocks)
            self._lookup = {x: i for i, b in enumerate(blocks, start=1) for x in b}
            self._classify = None
        else:
            self.blocks = None
            self.block_count = block_count
            self._classify = classify
            self._lookup = None
        self._block_unrank = block_unrank
        self._block_rank = block_rank

    @classmethod
    def explicit(cls, blocks):
        return cls(blocks=blocks)

    @classmethod
    def classifier(cls, classify, block_count=None, block_unrank=None, block_rank=None):
        return cls(classify=classify, block_count=block_count,
                   block_unrank=block_unrank, block_rank=block_rank)

    @property
    def is_explicit(self):
        return self.blocks is not None

    def block_of(self, x):
        if self._lookup is not None:
            try:
                return self._lookup[x]
            except KeyError:
                raise InputError(f"point {x!r} is not covered by the partition") from None
        b = self._classify(x)
        if not isinstance(b, int) or b < 1:
            raise InputError(f"classifier returned bad block index {b!r}")
        if self.block_count is not None and b > self.block_count:
            raise InputError(
                f"classifier returned block {b} beyond the declared count {self.block_count}"
            )
        return b

    def block_unrank(self, block, pos):
        if self._block_unrank is None:
            raise InputError("partition carries no per-block enumerator")
        return self._block_unrank(block, pos)

    def block_rank(self, block, x):
        if self._block_rank is None:
            raise InputError("partition carries no per-block enumerator")
        return self._block_rank(block, x)

    @property
    def has_enumerators(self):
        return self._block_unrank is not None and self._block_rank is not None


def check_partition_covers(action, partition):
    """Explicit partitions must cover a finite point set exactly."""
    if not partition.is_explicit:
        return
    if not action.is_finite_points:
        raise InputError("explicit partitions require a finite point set")
    pts = set(action.points())
    covered = set().union(*partition.blocks)
    if covered - pts:
        raise InputError(f"partition block contains foreign points {sorted(covered - pts, key=repr)!r}")
    missing = pts - covered
    if missing:
        raise InputError(f"partition does not cover the point set; missing {sorted(missing, key=repr)!r}")


@dataclass(frozen=True)
class ConfigPair:
    """Finite ordered tuple of group elements plus a partition.

    ``generating`` is a caller assertion that the tuple entries generate the
    group; it is verified where that is decidable (finite groups)."""

    elements: tuple
    partition: Partition
    generating: bool = False

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))


@dataclass(frozen=True)
class CountablePair:
    """Countable tuple given by a 1-based oracle; ``identity_tail_after``
    declares that every entry past that position is the identity."""

    element_at: Callable[[int], Any]
    partition: Partition
    generating: bool = False
    identity_tail_after: Optional[int] = None


def check_generating_assertion(action, pair):
    if pair.generating and action.group.is_finite and isinstance(pair, ConfigPair):
        if not is_generating(action.group, pair.elements):
            raise PreconditionError(
                "pair asserts a generating tuple but the elements do not generate"
            )


def configurations_finite(action, pair):
    """All realized configurations of a finite action, sorted lexicographically."""
    if not action.is_finite_points:
        raise InputError("finite configuration sets need a finite point set; use a window")
    check_partition_covers(action, pair.partition)
    check_generating_assertion(action, pair)
    block = pair.partition.block_of
    out = {
        (block(x), *[block(action.act(g, x)) for g in pair.elements])
        for x in action.points()
    }
    return tuple(sorted(out))


def windowed_configuration_set(action, pair, window):
    """Configurations realized by window points: a sound under-approximation
    of the full configuration set (exact when the window covers a finite
    point set)."""
    block = pair.partition.block_of
    out = {
        (block(x), *[block(action.act(g, x)) for g in pair.elements])
        for x in window.points
    }
    return tuple(sorted(out))


def configuration_cells(action, pair, config, window=None):
    """Cells of one configuration: position 0 is the base cell (its realizer
    set), position j its translate under g_j.  Over a window the base cell is
    computed from window points only."""
    config = tuple(config)
    if len(config) != len(pair.elements) + 1:
        raise InputError("configuration length must be tuple length + 1")
    if window is None:
        pts = action.points()
    else:
        pts = window.points
    block = pair.partition.block_of
    base = [
        x
        for x in pts
        if block(x) == config[0]
        and all(block(action.act(g, x)) == c for g, c in zip(pair.elements, config[1:]))
    ]
    cells = [frozenset(base)]
    for g in pair.elements:
        cells.append(frozenset(action.act(g, x) for x in base))
    return tuple(cells)


def configurations_with_cells(action, pair, window=None):
    """Mapping configuration -> cells, for every realized configuration."""
    if window is None:
        configs = configurations_finite(action, pair)
    else:
        configs = windowed_configuration_set(action, pair, window)
    return {c: configuration_cells(action, pair, c, window) for c in configs}


@dataclass(frozen=True)
class RefinementReport:
    ok: bool
    violation: Optional[dict]


def verify_refinement(action, pair, cells_by_config, window=None):
    """Check that for every position j the cells at position j refine the
    partition: each block is the disjoint union of the cells carrying its
    index, and the cells at one position tile the whole point set.

    Over a window, position j is checked on points whose base preimage also
    lies in the window, so no spurious boundary violations are reported.
    Returns the first violation in canonical order, if any.
    """
    n = len(pair.elements)
    block = pair.partition.block_of
    inv = action.group.inv
    items = sorted(cells_by_config.items())
    for j in range(n + 1):
        if window is None:
            domain = list(action.points())
        elif j == 0:
            domain = list(window.points)
        else:
            g = pair.elements[j - 1]
            gi = inv(g)
            domain = [y for y in window.points if action.act(gi, y) in window]
        domain_set = set(domain)
        owner = {}
        for config, cells in items:
            for y in sorted(cells[j], key=_point_key):
                if y not in domain_set:
                    continue
                if y in owner:
                    return RefinementReport(False, {
                        "kind": "overlap",
                        "position": j,
                        "point": y,
                        "configs": [owner[y], config],
                    })
                owner[y] = config
                if block(y) != config[j]:
                    return RefinementReport(False, {
                        "kind": "wrong-block",
                        "position": j,
                        "point": y,
                        "config": config,
                        "expected-block": config[j],
                        "actual-block": block(y),
                    })
        for y in domain:
            if y not in owner:
                return RefinementReport(False, {
                    "kind": "gap",
                    "position": j,
                    "point": y,
                    "block": block(y),
                })
    return RefinementReport(True, None)


def _point_key(x):
    return repr(x)


# ---------------------------------------------------------------------------
# countable tuples / partitions


@dataclass(frozen=True)
class PrefixResult:
    prefixes: tuple
    exact: bool
    depth: int
    window_label: str
    note: str


def countable_config_prefixes(action, pair, depth, window):
    """Depth-k prefixes of configurations realized by window points.

    Every reported prefix is realized (soundness); the listing is complete
    exactly when the point set is finite and the window covers it, which is
    the convention that finite data embeds into the countable setting.  For
    genuinely infinite partitions every block index is realized at depth 0,
    so the true prefix set is infinite and any finite window reports a
    labeled under-approximation.
    """
    if depth < 0:
        raise InputError("depth must be >= 0")
    if isinstance(pair, CountablePair):
        elems = [pair.element_at(i) for i in range(1, depth + 1)]
    else:
        if depth > len(pair.elements):
            raise InputError("depth exceeds the tuple length of a finite pair")
        elems = list(pair.elements[:depth])
    block = pair.partition.block_of
    prefixes = sorted(
        {
            (block(x), *[block(action.act(g, x)) for g in elems])
            for x in window.points
        }
    )
    exact = bool(action.is_finite_points) and set(action.points()) <= window.point_set
    note = "exact (finite point set fully windowed)" if exact else "window under-approximation"
    return PrefixResult(tuple(prefixes), exact, depth, window.label, note)


@dataclass(frozen=True)
class SplitPair:
    pair: CountablePair
    relabeling: tuple  # 1-based: relabeling[old - 1] = new block index


def singleton_split(action, pair, block_index):
    """Replace one infinite block by singletons and pad the tuple with the
    identity.

    The designated block must carry a per-block enumerator.  It is relabeled
    to the last finite index m; the m-th, (m+1)-th, ... blocks of the result
    are the singletons of its members in enumerator order, every tuple entry
    past the original length is the identity, and the correspondence with the
    original configuration set is recovered by merge_blocks at cutoff m.
    """
    part = pair.partition
    m = part.block_count
    if m is None:
        raise InputError("singleton split needs a declared finite block count")
    if not (1 <= block_index <= m):
        raise InputError(f"block index {block_index} out of range 1..{m}")
    if part.is_explicit:
        raise PreconditionError(
            "designated block is finite (explicit partitions have finite blocks)"
        )
    if not part.has_enumerators:
        raise PreconditionError("designated block lacks an enumerator")

    # swap the designated block with the last index so singles get m, m+1, ...
    def relabel(b):
        if b == block_index:
            return m
        if b == m:
            return block_index
        return b

    relabeling = tuple(relabel(b) for b in range(1, m + 1))
    base_block_of = part.block_of
    base_rank = part.block_rank
    base_unrank = part.block_unrank

    def classify(x):
        b = relabel(base_block_of(x))
        if b < m:
            return b
        return m + base_rank(block_index, x)

    def block_unrank(b, pos):
        if b >= m:
            if pos != 0:
                raise InputError("singleton blocks have a single member")
            return base_unrank(block_index, b - m)
        return base_unrank(relabel(b), pos)

    def block_rank(b, x):
        if b >= m:
            return 0
        return base_rank(relabel(b), x)

    split_partition = Partition.classifier(
        classify, block_count=None, block_unrank=block_unrank, block_rank=block_rank
    )
    n = len(pair.elements)
    elements = pair.elements
    identity = action.group.identity

    def element_at(i):
        if i < 1:
            raise InputError("tuple positions are 1-based")
        return elements[i - 1] if i <= n else identity

    return SplitPair(
        CountablePair(element_at, split_partition, pair.generating, identity_tail_after=n),
        relabeling,
    )


def merge_blocks(pair, cutoff, tuple_len=None):
    """Collapse every block with index >= cutoff into one block and truncate
    the countable tuple to its declared identity tail (or ``tuple_len``)."""
    if not isinstance(pair, CountablePair):
        raise InputError("merge_blocks expects a countable pair")
    if cutoff < 1:
        raise InputError("cutoff must be >= 1")
    n = tuple_len if tuple_len is not None else pair.identity_tail_after
    if n is None:
        raise InputError(
            "tuple length unknown: pass tuple_len or use a pair with an identity tail"
        )
    elements = tuple(pair.element_at(i) for i in range(1, n + 1))
    base_block_of = pair.partition.block_of

    def classify(x):
        return min(base_block_of(x), cutoff)

    return ConfigPair(
        elements,
        Partition.classifier(classify, block_count=cutoff),
        pair.generating,
    )


# ---------------------------------------------------------------------------
# bounded equivalence of actions


def set_partitions(n, max_blocks):
    """Labeled set partitions of range(n) in restricted-growth order: yields
    (labels, block_count) with labels a tuple of 1-based block indices whose
    first occurrences are increasing."""
    if n == 0 or max_blocks < 1:
        return
    labels = [0] * n

    def rec(i, mx):
        if i == n:
            yield tuple(labels), mx
            return
        top = min(mx + 1, max_blocks)
        for v in range(1, top + 1):
            labels[i] = v
            yield from rec(i + 1, mx if v <= mx else v)

    yield from rec(0, 0)


_PERM_CACHE = {}


def _perms(b):
    if b not in _PERM_CACHE:
        # index 0 unused so configurations index directly
        _PERM_CACHE[b] = [
            (0,) + p for p in itertools.permutations(range(1, b + 1))
        ]
    return _PERM_CACHE[b]


def _canonical_form(configs, nblocks, memo):
    key = (configs, nblocks)
    hit = memo.get(key)
    if hit is not None:
        return hit
    best = None
    for sigma in _perms(nblocks):
        relab = sorted(tuple(sigma[c] for c in cfg) for cfg in configs)
        if best is None or relab < best:
            best = relab
    out = tuple(best)
    memo[key] = out
    return out


def _configuration_family(action, n, m, cap):
    """Canonical forms of every configuration set over tuples of length n and
    partitions into at most m blocks, each mapped to its first witness."""
    pts = list(action.points())
    np_ = len(pts)
    idx = {p: i for i, p in enumerate(pts)}
    group = action.group
    gels = group.elements()
    rows = [
        tuple(idx[action.act(g, p)] for p in pts) for g in gels
    ]
    memo = {}
    family = {}
    rng = range(np_)
    count = 0
    for labels, b in set_partitions(np_, m):
        count += 1
        if count > cap:
            raise ResourceCapExceeded(
                f"partition enumeration exceeded the cap of {cap}", cap=cap
            )
        for t in itertools.product(range(len(gels)), repeat=n):
            if n == 1:
                r1 = rows[t[0]]
                configs = frozenset((labels[x], labels[r1[x]]) for x in rng)
            elif n == 2:
                r1, r2 = rows[t[0]], rows[t[1]]
                configs = frozenset(
                    (labels[x], labels[r1[x]], labels[r2[x]]) for x in rng
                )
            else:
                trows = [rows[g] for g in t]
                configs = frozenset(
                    tuple([labels[x]] + [labels[r[x]] for r in trows]) for x in rng
                )
            canon = _canonical_form(configs, b, memo)
            if canon not in family:
                family[canon] = (t, labels, b)
    return family, pts, gels


@dataclass(frozen=True)
class PairWitness:
    direction: str
    tuple_tokens: tuple
    blocks: tuple  # tuple of tuples of point tokens
    configurations: tuple


@dataclass(frozen=True)
class EquivVerdict:
    equivalent: bool
    n: int
    m: int
    only_in_first: Optional[PairWitness]
    only_in_second: Optional[PairWitness]
    family_sizes: tuple


def _witness_from(action, pts, gels, record, direction):
    t, labels, b = record
    group = action.group
    tuple_tokens = tuple(group.format(gels[i]) for i in t)
    blocks = tuple(
        tuple(action.format_point(p) for p, l in zip(pts, labels) if l == i)
        for i in range(1, b + 1)
    )
    block = dict(zip(pts, labels))
    configs = tuple(sorted(
        {
            (block[x], *[block[action.act(gels[g], x)] for g in t])
            for x in pts
        }
    ))
    return PairWitness(direction, tuple_tokens, blocks, configs)


def config_equiv_bounded(action1, action2, n, m, cap=None):
    """Compare the families of configuration sets of two finite actions over
    all tuples of length n and partitions into at most m blocks, up to block
    relabeling.  Returns the verdict with first witnesses in enumeration
    order for both directions when the families differ."""
    if n < 1 or m < 1:
        raise InputError("bounds must be >= 1")
    for a in (action1, action2):
        if not a.is_finite_points:
            raise InputError("bounded equivalence compares finite actions")
    if cap is None:
        cap = default_partition_cap()
    fam1, pts1, gels1 = _configuration_family(action1, n, m, cap)
    if action2 is action1:
        fam2, pts2, gels2 = fam1, pts1, gels1
    else:
        fam2, pts2, gels2 = _configuration_family(action2, n, m, cap)
    only1 = next((c for c in fam1 if c not in fam2), None)
    only2 = next((c for c in fam2 if c not in fam1), None)
    w1 = _witness_from(action1, pts1, gels1, fam1[only1], "first-not-second") if only1 else None
    w2 = _witness_from(action2, pts2, gels2, fam2[only2], "second-not-first") if only2 else None
    return EquivVerdict(
        equivalent=only1 is None and only2 is None,
        n=n,
        m=m,
        only_in_first=w1,
        only_in_second=w2,
        family_sizes=(len(fam1), len(fam2)),
    )


def default_partition_cap():
    import os

    raw = os.environ.get("CONFPARA_CAP")
    if raw is None:
        return 500_000
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"CONFPARA_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise InputError("CONFPARA_CAP must be >= 1")
    return cap
