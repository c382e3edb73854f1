"""Recovering a group from configuration data.

Enumerate a group with the identity first, g_1 = e.  The multiplication
index table stores pi(i, j) = k whenever g_i g_j = g_k with all three inside
the enumerated range.  The canonical configuration attached to index j is
C_j = (j, pi(2, j), ..., pi(depth, j)): on a finite group with its full
enumeration these are exactly the configurations of the left translation
action partitioned into singletons.

Conversely, when a pair (h_1, ..., h_N) with an N-block partition of a group
H realizes exactly the canonical configuration set of a finite group G, the
blocks are forced to be the left cosets of a normal subgroup F_1 (the block
containing the identity, relabeled to index 1) and j -> F_j is an
isomorphism G -> H / F_1.  ``recover_cosets`` performs the recovery and
``verify_normal_and_iso`` certifies it from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .actions import LeftTranslation
from .configurations import ConfigPair, Partition, windowed_configuration_set
from .errors import InputError, PreconditionError, ResourceCapExceeded
from .groups import Window, quotient_group


@dataclass(frozen=True)
class MultiplicationIndexTable:
    """Partial 1-based multiplication table over enumeration indices.

    ``entry(i, j)`` is the index of g_i g_j or None when the product falls
    outside the enumerated range; ``inverse(i)`` likewise for inverses."""

    bound: int
    rows: tuple  # rows[i-1][j-1] = k or None
    labels: tuple

    def entry(self, i, j):
        if not (1 <= i <= self.bound and 1 <= j <= self.bound):
            raise InputError(f"table indices ({i},{j}) out of range 1..{self.bound}")
        return self.rows[i - 1][j - 1]

    def inverse(self, i):
        for j in range(1, self.bound + 1):
            if self.entry(i, j) == 1:
                return j
        return None

    @property
    def total(self):
        return all(all(v is not None for v in row) for row in self.rows)


def multiplication_index_table(group, enumeration, bound=None):
    """Build the index table of a 1-based enumeration starting at the identity."""
    enumeration = list(enumeration)
    if bound is not None:
        enumeration = enumeration[:bound]
    if not enumeration:
        raise InputError("empty enumeration")
    if enumeration[0] != group.identity:
        raise InputError("enumeration must start at the identity (g_1 = e)")
    pos = {}
    for i, g in enumerate(enumeration, start=1):
        if g in pos:
            raise InputError(f"duplicate enumeration entry at positions {pos[g]} and {i}")
        pos[g] = i
    rows = tuple(
        tuple(pos.get(group.mul(a, b)) for b in enumeration) for a in enumeration
    )
    labels = tuple(group.format(g) for g in enumeration)
    return MultiplicationIndexTable(len(enumeration), rows, labels)


def table_from_canonical_enumeration(group, bound):
    """Index table over the group's own canonical enumeration."""
    return multiplication_index_table(
        group, [group.element_at(i) for i in range(1, bound + 1)]
    )


def table_from_configurations(action, pair):
    """Read a candidate index table off a pair's configuration set.

    When the set is a canonical family, configuration j has the shape
    (j, pi(1,j), ..., pi(N,j)); the rows can be read straight off once the
    first entries are seen to enumerate 1..N.  The result still has to pass
    ``validate_table`` and the full matching check in ``recover_cosets``."""
    n = len(pair.elements)
    window = Window("all", "all", tuple(action.points()))
    configs = windowed_configuration_set(action, pair, window)
    if len(configs) != n:
        raise PreconditionError(
            f"expected {n} distinct configurations, found {len(configs)}"
        )
    by_first = {}
    for cfg in configs:
        if len(cfg) != n + 1:
            raise PreconditionError(
                f"configuration {cfg} has length {len(cfg)}, expected {n + 1}"
            )
        if cfg[0] in by_first:
            raise PreconditionError(
                f"two configurations share the base block {cfg[0]}"
            )
        by_first[cfg[0]] = cfg
    if sorted(by_first) != list(range(1, n + 1)):
        raise PreconditionError(
            "configuration base blocks do not enumerate every index"
        )
    rows = tuple(
        tuple(by_first[j][i] for j in range(1, n + 1)) for i in range(1, n + 1)
    )
    labels = tuple(str(j) for j in range(1, n + 1))
    table = MultiplicationIndexTable(n, rows, labels)
    problems = validate_table(table)
    if problems:
        raise PreconditionError(
            f"inferred table is not a group table: {problems[0]}"
        )
    return table


def validate_table(table):
    """Structural checks: identity row/column and associativity wherever all
    entries involved are known.  Returns a list of violations (empty = ok)."""
    out = []
    n = table.bound
    for j in range(1, n + 1):
        if table.entry(1, j) != j:
            out.append({"kind": "identity-row", "at": (1, j), "got": table.entry(1, j)})
        if table.entry(j, 1) != j:
            out.append({"kind": "identity-column", "at": (j, 1), "got": table.entry(j, 1)})
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            ij = table.entry(i, j)
            if ij is None:
                continue
            for k in range(1, n + 1):
                jk = table.entry(j, k)
                if jk is None:
                    continue
                left = table.entry(ij, k)
                right = table.entry(i, jk)
                if left is not None and right is not None and left != right:
                    out.append({"kind": "associativity", "at": (i, j, k),
                                "left": left, "right": right})
    return out


def canonical_configurations(table, depth):
    """The family (C_j)_{j <= bound} with C_j = (j, pi(2,j), ..., pi(depth,j)).

    Raises when a required entry is unknown at the requested depth."""
    if depth < 1:
        raise InputError("depth must be >= 1")
    if depth > table.bound:
        raise InputError(f"depth {depth} exceeds the table bound {table.bound}")
    out = []
    for j in range(1, table.bound + 1):
        row = [j]
        for i in range(2, depth + 1):
            v = table.entry(i, j)
            if v is None:
                raise InputError(f"unknown table entry at ({i},{j}) for depth {depth}")
            row.append(v)
        out.append(tuple(row))
    return tuple(out)


def _full_canonical_set(table):
    """Configurations of the full-enumeration pair, identity included: the
    tuple at position i >= 1 corresponds to translator g_i, so the entry
    after the base index duplicates it (g_1 = e)."""
    if not table.total:
        raise InputError("full canonical configurations need a total table")
    n = table.bound
    return frozenset(
        tuple([j] + [table.entry(i, j) for i in range(1, n + 1)])
        for j in range(1, n + 1)
    )


@dataclass(frozen=True)
class CosetFamily:
    """Recovered coset structure: ``blocks[0]`` is the subgroup F_1."""

    blocks: tuple  # tuple of frozensets, 1-based indices shifted by one
    representatives: tuple  # h_j with F_j = h_j F_1
    relabeling: tuple  # relabeling[old - 1] = new index after normalization
    identity_block_before: int

    @property
    def subgroup(self):
        return self.blocks[0]


def recover_cosets(group, pair, table):
    """Recover the coset family from a pair realizing the canonical
    configuration set of the table's group.

    The pair's tuple must have one entry per enumeration index (its first
    entry plays the identity's role and must preserve every block).  The
    matching configuration set alone forces the coset structure; the tuple
    need not generate the group.  The block containing the identity is
    relabeled to index 1 by the right-translation relabeling that fixes the
    canonical configuration set.
    """
    if not group.is_finite:
        raise InputError("coset recovery runs on finite instances")
    if not table.total:
        raise InputError("coset recovery needs a total index table")
    n = table.bound
    if len(pair.elements) != n:
        raise PreconditionError(
            f"tuple length {len(pair.elements)} must equal the table bound {n}"
        )

    action = LeftTranslation(group)
    expected = _full_canonical_set(table)
    window = Window("all", "all", group.elements())
    got = frozenset(windowed_configuration_set(action, pair, window))
    if got != expected:
        raise PreconditionError(
            "configuration set does not match the canonical family: "
            f"{len(got ^ expected)} configurations differ"
        )

    block_of = pair.partition.block_of
    ident_block = block_of(group.identity)
    if ident_block == 1:
        relabeling = tuple(range(1, n + 1))
    else:
        inv_pos = table.inverse(ident_block)
        if inv_pos is None:
            raise PreconditionError(
                f"index {ident_block} has no inverse in the table"
            )
        relabeling = tuple(table.entry(j, inv_pos) for j in range(1, n + 1))

    blocks = [set() for _ in range(n)]
    for x in group.elements():
        b = relabeling[block_of(x) - 1]
        blocks[b - 1].add(x)
    blocks = tuple(frozenset(b) for b in blocks)
    if any(not b for b in blocks):
        raise PreconditionError("partition must have exactly one block per index")
    if group.identity not in blocks[0]:
        raise PreconditionError("identity normalization failed")

    # the coset law h_j F_l = F_{pi(j, l)}, forced by the matching
    # configuration sets; checked outright
    for j in range(1, n + 1):
        hj = pair.elements[j - 1]
        for l in range(1, n + 1):
            translated = frozenset(group.mul(hj, x) for x in blocks[l - 1])
            target = blocks[table.entry(j, l) - 1]
            if translated != target:
                raise PreconditionError(
                    f"translate of block {l} by tuple entry {j} is not block "
                    f"{table.entry(j, l)}"
                )
    return CosetFamily(blocks, tuple(pair.elements), relabeling, ident_block)


@dataclass(frozen=True)
class IsoReport:
    ok: bool
    failures: tuple
    iso: tuple  # (enumeration label, 1-based block index) pairs
    subgroup_order: int
    coset_count: int


def verify_normal_and_iso(group, family, table):
    """Certify from scratch that F_1 is a normal subgroup, that blocks
    multiply like the table (F_k F_j = F_{pi(k,j)} setwise), and that
    index -> block is a group isomorphism onto the coset group."""
    blocks = family.blocks
    f1 = blocks[0]
    n = len(blocks)
    failures = []
    e = group.identity
    if e not in f1:
        failures.append({"identity": "identity-in-subgroup"})
    for a in sorted(f1):
        if group.inv(a) not in f1:
            failures.append({"identity": "subgroup-inverse", "witness": group.format(a)})
            break
    closed = all(group.mul(a, b) in f1 for a in f1 for b in f1)
    if not closed:
        failures.append({"identity": "subgroup-closure"})
    for x in group.elements():
        conj = frozenset(group.mul(group.mul(x, s), group.inv(x)) for s in f1)
        if conj != f1:
            failures.append({"identity": "normality", "witness": group.format(x)})
            break
    for k in range(1, n + 1):
        for j in range(1, n + 1):
            prod = frozenset(
                group.mul(a, b) for a in blocks[k - 1] for b in blocks[j - 1]
            )
            if prod != blocks[table.entry(k, j) - 1]:
                failures.append({
                    "identity": "coset-product",
                    "witness": (k, j),
                })
    if group.order() != n * len(f1):
        failures.append({
            "identity": "coset-count",
            "witness": (group.order(), n, len(f1)),
        })
    iso = tuple((table.labels[j - 1], j) for j in range(1, n + 1))
    return IsoReport(not failures, tuple(failures), iso, len(f1), n)


@dataclass(frozen=True)
class RefinementSearchReport:
    subgroup_trivial: bool
    conclusion: str
    refined_block_count: Optional[int]
    available_points: Optional[int]
    pairs_searched: int
    matched: bool


def refined_partition_of(group, family):
    """Split F_1 into the identity singleton and its complement, keeping the
    other blocks; block indices shift up by one."""
    f1 = family.subgroup
    if len(f1) < 2:
        raise PreconditionError("refinement needs |F_1| > 1")
    e = group.identity
    blocks = [frozenset([e]), frozenset(f1 - {e})]
    blocks.extend(family.blocks[1:])
    return Partition.explicit(blocks)


def q_group_refinement_check(group, family, cap=200_000):
    """Splitting the identity off F_1 yields a configuration set that no pair
    over the recovered quotient can reproduce; confirmed by exhaustive search
    (the refined partition needs more nonempty blocks than the quotient has
    elements, and the search over all admissible pairs finds no match)."""
    f1 = family.subgroup
    if len(f1) == 1:
        return RefinementSearchReport(
            subgroup_trivial=True,
            conclusion="subgroup trivial: the recovery is already an isomorphism",
            refined_block_count=None,
            available_points=None,
            pairs_searched=0,
            matched=False,
        )
    refined = refined_partition_of(group, family)
    action = LeftTranslation(group)
    window = Window("all", "all", group.elements())
    target = frozenset(windowed_configuration_set(
        action, ConfigPair(family.representatives, refined), window
    ))
    needed = max(max(cfg) for cfg in target)

    quotient, _, _ = quotient_group(group, f1)
    qn = quotient.order()
    qaction = LeftTranslation(quotient)
    qwindow = Window("all", "all", quotient.elements())
    searched = 0
    matched = False
    from itertools import product

    from .configurations import set_partitions

    for labels, _b in set_partitions(qn, min(needed, qn)):
        partition = Partition.classifier(
            lambda x, _l=labels: _l[x], block_count=max(labels)
        )
        for t in product(quotient.elements(), repeat=len(family.representatives)):
            searched += 1
            if searched > cap:
                raise ResourceCapExceeded(
                    f"refinement search exceeded the cap of {cap}", cap=cap
                )
            got = frozenset(windowed_configuration_set(
                qaction, ConfigPair(t, partition), qwindow
            ))
            if got == target:
                matched = True
                break
        if matched:
            break
    conclusion = (
        "matched: refinement is reproducible over the quotient"
        if matched
        else (
            f"no quotient pair reproduces the refined configuration set "
            f"({needed} blocks needed, {qn} points available)"
        )
    )
    return RefinementSearchReport(
        subgroup_trivial=False,
        conclusion=conclusion,
        refined_block_count=needed,
        available_points=qn,
        pairs_searched=searched,
        matched=matched,
    )


def quotient_recovery_roundtrip(group, normal):
    """Forward-then-back check used by the randomized suites: quotient by a
    normal subgroup, present the cosets as a pair, recover, and certify.

    Returns (family, report, quotient)."""
    quotient, cosets, reps = quotient_group(group, normal)
    table = multiplication_index_table(quotient, quotient.elements())
    partition = Partition.explicit(cosets)
    pair = ConfigPair(reps, partition)
    family = recover_cosets(group, pair, table)
    report = verify_normal_and_iso(group, family, table)
    return family, report, quotient
