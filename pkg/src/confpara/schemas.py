"""JSON manifests describing groups, actions, partitions, pairs and
decompositions, plus the verdict/report envelopes the command line emits.

Every manifest is an envelope {"schema-version": 1, "object-kind": ...,
"payload": {...}} with optional "metadata".  Validation is strict: unknown
fields are rejected, and every error carries the JSON pointer of the
offending field, so a typo in a nested group payload reads like
"/payload/action/group/order".  Decomposition payloads either name a
construction or spell out both piece families with their translators and a
cover oracle name.

Emission is canonical (sorted keys, two-space indent, trailing newline) so
identical objects always serialize to identical bytes.
"""

from __future__ import annotations

import json

from . import catalog, paradox
from .actions import LeftTranslation, ProductAction, TableAction, TrivialAction
from .configurations import ConfigPair, Partition
from .errors import InputError, MalformedOracleError
from .groups import CayleyTableGroup, FreeAbelianGroup, FreeGroup, direct_product

SCHEMA_VERSION = 1
OBJECT_KINDS = (
    "group", "action", "partition", "pair", "decomposition", "verdict", "report",
)


def _fail(msg, path):
    raise InputError(msg, path=path)


def _as_dict(v, path):
    if not isinstance(v, dict):
        _fail(f"expected an object, got {type(v).__name__}", path)
    return v


def _as_list(v, path):
    if not isinstance(v, list):
        _fail(f"expected an array, got {type(v).__name__}", path)
    return v


def _as_int(v, path, minimum=None):
    if isinstance(v, bool) or not isinstance(v, int):
        _fail(f"expected an integer, got {v!r}", path)
    if minimum is not None and v < minimum:
        _fail(f"expected an integer >= {minimum}, got {v}", path)
    return v


def _as_str(v, path):
    if not isinstance(v, str):
        _fail(f"expected a string, got {type(v).__name__}", path)
    return v


def _as_bool(v, path):
    if not isinstance(v, bool):
        _fail(f"expected a boolean, got {v!r}", path)
    return v


class _Fields:
    """Tracks which payload fields were consumed; leftovers are rejected."""

    def __init__(self, d, path):
        self.d = dict(_as_dict(d, path))
        self.path = path

    def take(self, key, required=True, default=None):
        if key in self.d:
            return self.d.pop(key)
        if required:
            _fail(f"missing field '{key}'", f"{self.path}/{key}")
        return default

    def finish(self):
        if self.d:
            k = sorted(self.d)[0]
            _fail(f"unknown field '{k}'", f"{self.path}/{k}")


# ---------------------------------------------------------------------------
# envelope


def make_manifest(kind, payload, metadata=None):
    if kind not in OBJECT_KINDS:
        raise InputError(f"unknown object kind {kind!r}")
    out = {"schema-version": SCHEMA_VERSION, "object-kind": kind, "payload": payload}
    if metadata is not None:
        out["metadata"] = metadata
    return out


def dumps_canonical(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def parse_manifest(data, expected_kind=None):
    """Validate the envelope; returns (kind, payload, metadata)."""
    f = _Fields(data, "")
    version = _as_int(f.take("schema-version"), "/schema-version")
    if version != SCHEMA_VERSION:
        _fail(f"unsupported schema version {version}", "/schema-version")
    kind = _as_str(f.take("object-kind"), "/object-kind")
    if kind not in OBJECT_KINDS:
        _fail(f"unknown object kind {kind!r}", "/object-kind")
    payload = _as_dict(f.take("payload"), "/payload")
    metadata = f.take("metadata", required=False)
    if metadata is not None:
        metadata = _as_dict(metadata, "/metadata")
    f.finish()
    if expected_kind is not None and kind != expected_kind:
        _fail(f"expected a {expected_kind} manifest, got {kind!r}", "/object-kind")
    return kind, payload, metadata


def loads_manifest(text, expected_kind=None):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {exc}", path="") from None
    return parse_manifest(data, expected_kind)


# ---------------------------------------------------------------------------
# groups


def build_group(payload, path="/payload"):
    f = _Fields(payload, path)
    family = _as_str(f.take("family"), f"{path}/family")
    if family == "cyclic":
        n = _as_int(f.take("order"), f"{path}/order", minimum=1)
        f.finish()
        return catalog.cyclic(n)
    if family == "symmetric":
        n = _as_int(f.take("degree"), f"{path}/degree", minimum=1)
        f.finish()
        return catalog.symmetric(n)
    if family == "dihedral":
        n = _as_int(f.take("sides"), f"{path}/sides", minimum=3)
        f.finish()
        return catalog.dihedral(n)
    if family == "alternating4":
        f.finish()
        return catalog.alternating4()
    if family == "quaternion8":
        f.finish()
        return catalog.quaternion8()
    if family == "direct-product":
        factors = _as_list(f.take("factors"), f"{path}/factors")
        if len(factors) != 2:
            _fail("expected exactly two factors", f"{path}/factors")
        f.finish()
        a = build_group(factors[0], f"{path}/factors/0")
        b = build_group(factors[1], f"{path}/factors/1")
        return direct_product(a, b)
    if family == "table":
        rows = _as_list(f.take("table"), f"{path}/table")
        identity = _as_int(f.take("identity"), f"{path}/identity", minimum=0)
        labels = f.take("labels", required=False)
        name = f.take("name", required=False, default="finite-cayley")
        f.finish()
        table = []
        for i, row in enumerate(rows):
            row = _as_list(row, f"{path}/table/{i}")
            table.append([
                _as_int(v, f"{path}/table/{i}/{j}", minimum=0)
                for j, v in enumerate(row)
            ])
        if labels is not None:
            labels = [
                _as_str(v, f"{path}/labels/{i}")
                for i, v in enumerate(_as_list(labels, f"{path}/labels"))
            ]
        try:
            return CayleyTableGroup(table, identity, labels, name=_as_str(name, f"{path}/name"))
        except InputError as exc:
            _fail(f"bad multiplication table: {exc}", f"{path}/table")
    if family == "free":
        rank = _as_int(f.take("rank"), f"{path}/rank", minimum=1)
        f.finish()
        return FreeGroup(rank)
    if family == "free-abelian":
        rank = _as_int(f.take("rank"), f"{path}/rank", minimum=1)
        f.finish()
        return FreeAbelianGroup(rank)
    _fail(f"unknown group family {family!r}", f"{path}/family")


# ---------------------------------------------------------------------------
# actions


def build_action(payload, path="/payload"):
    f = _Fields(payload, path)
    kind = _as_str(f.take("kind"), f"{path}/kind")
    if kind == "left-translation":
        group = build_group(f.take("group"), f"{path}/group")
        f.finish()
        return LeftTranslation(group)
    if kind == "table":
        group = build_group(f.take("group"), f"{path}/group")
        points = _as_list(f.take("points"), f"{path}/points")
        rows = _as_list(f.take("rows"), f"{path}/rows")
        f.finish()
        rows = [
            [_as_int(v, f"{path}/rows/{i}/{j}", minimum=0) for j, v in
             enumerate(_as_list(row, f"{path}/rows/{i}"))]
            for i, row in enumerate(rows)
        ]
        try:
            return TableAction(group, points, rows)
        except InputError as exc:
            _fail(str(exc), f"{path}/rows")
    if kind == "trivial":
        group = build_group(f.take("group"), f"{path}/group")
        points = f.take("points", required=False)
        countable = f.take("countable", required=False, default=False)
        f.finish()
        if points is not None:
            points = list(_as_list(points, f"{path}/points"))
        try:
            return TrivialAction(group, points,
                                 countable=_as_bool(countable, f"{path}/countable"))
        except InputError as exc:
            _fail(str(exc), f"{path}/points")
    if kind == "product":
        base = build_action(f.take("base"), f"{path}/base")
        copies = f.take("copies")
        f.finish()
        if copies == "countable":
            count = None
        else:
            count = _as_int(copies, f"{path}/copies", minimum=1)
        return ProductAction(base, count)
    _fail(f"unknown action kind {kind!r}", f"{path}/kind")


# ---------------------------------------------------------------------------
# partitions


def _residue_partition(group, modulus):
    def classify(v):
        return v % modulus + 1

    def unrank(block, pos):
        from .codec import zigzag_value

        return (block - 1) + modulus * zigzag_value(pos)

    def rank(block, v):
        from .codec import zigzag_position

        return zigzag_position((v - (block - 1)) // modulus)

    return Partition.classifier(
        classify, block_count=modulus, block_unrank=unrank, block_rank=rank
    )


def _first_letter_partition(group):
    def classify(w):
        if not w:
            return 1
        v = w[0]
        return 2 * abs(v) + (0 if v > 0 else 1)

    return Partition.classifier(classify, block_count=2 * group.rank + 1)


def build_partition(payload, action, path="/payload"):
    f = _Fields(payload, path)
    kind = _as_str(f.take("kind"), f"{path}/kind")
    if kind == "blocks":
        blocks = _as_list(f.take("blocks"), f"{path}/blocks")
        f.finish()
        parsed = []
        for i, block in enumerate(blocks):
            block = _as_list(block, f"{path}/blocks/{i}")
            out = []
            for j, token in enumerate(block):
                try:
                    out.append(action.parse_point(_as_str(token, f"{path}/blocks/{i}/{j}")))
                except InputError as exc:
                    _fail(str(exc), f"{path}/blocks/{i}/{j}")
            parsed.append(out)
        try:
            return Partition.explicit(parsed)
        except InputError as exc:
            _fail(str(exc), f"{path}/blocks")
    if kind == "residue":
        modulus = _as_int(f.take("modulus"), f"{path}/modulus", minimum=1)
        f.finish()
        group = action.group
        if not (isinstance(group, FreeAbelianGroup) and group.rank == 1
                and isinstance(action, LeftTranslation)):
            _fail("residue partitions live on the integers translating themselves",
                  f"{path}/kind")
        return _residue_partition(group, modulus)
    if kind == "first-letter":
        f.finish()
        group = action.group
        if not (isinstance(group, FreeGroup) and isinstance(action, LeftTranslation)):
            _fail("first-letter partitions live on free groups translating themselves",
                  f"{path}/kind")
        return _first_letter_partition(group)
    _fail(f"unknown partition kind {kind!r}", f"{path}/kind")


# ---------------------------------------------------------------------------
# pairs and windows


def build_pair(payload, path="/payload"):
    """A pair manifest carries its action plus the tuple and partition."""
    f = _Fields(payload, path)
    action = build_action(f.take("action"), f"{path}/action")
    tokens = _as_list(f.take("tuple"), f"{path}/tuple")
    partition_payload = f.take("partition")
    generating = f.take("generating", required=False, default=False)
    f.finish()
    elements = []
    for i, token in enumerate(tokens):
        try:
            elements.append(action.group.parse(_as_str(token, f"{path}/tuple/{i}")))
        except InputError as exc:
            _fail(str(exc), f"{path}/tuple/{i}")
    partition = build_partition(partition_payload, action, f"{path}/partition")
    pair = ConfigPair(
        tuple(elements), partition,
        generating=_as_bool(generating, f"{path}/generating"),
    )
    return action, pair


_WINDOW_KEYS = {"all", "ball", "box", "prefix", "indices"}


def build_window_spec(payload, path="/payload"):
    """Validate a window payload into the small dict the actions consume."""
    d = _as_dict(payload, path)
    spec = {}
    for key in sorted(d):
        if key not in _WINDOW_KEYS:
            _fail(f"unknown window field '{key}'", f"{path}/{key}")
        v = d[key]
        if key == "all":
            spec[key] = _as_bool(v, f"{path}/{key}")
        elif key == "indices":
            pairv = _as_list(v, f"{path}/{key}")
            if len(pairv) != 2:
                _fail("expected [lo, hi]", f"{path}/{key}")
            spec[key] = [
                _as_int(pairv[0], f"{path}/{key}/0", minimum=0),
                _as_int(pairv[1], f"{path}/{key}/1", minimum=0),
            ]
        else:
            spec[key] = _as_int(v, f"{path}/{key}", minimum=0)
    base = [k for k in spec if k != "indices"]
    if len(base) != 1:
        _fail("window needs exactly one of all/ball/box/prefix", path)
    return spec


def parse_window_flag(text):
    """Command-line window syntax: JSON ('{"ball": 4}') or the compact form
    "all", "ball=2", "prefix=12,indices=0..3"."""
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad window JSON: {exc}") from None
        return build_window_spec(data, "/window")
    spec = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if part == "all":
            spec["all"] = True
            continue
        key, eq, value = part.partition("=")
        key = key.strip()
        if not eq or key not in _WINDOW_KEYS:
            raise InputError(f"bad window component {part!r}")
        value = value.strip()
        if key == "indices":
            lo, dots, hi = value.partition("..")
            if not dots:
                raise InputError("indices need the form lo..hi")
            try:
                spec["indices"] = [int(lo), int(hi)]
            except ValueError:
                raise InputError(f"bad index range {value!r}") from None
        else:
            try:
                spec[key] = int(value)
            except ValueError:
                raise InputError(f"bad window size {value!r}") from None
    if not spec:
        raise InputError("empty window spec")
    return build_window_spec(spec, "/window")


# ---------------------------------------------------------------------------
# decompositions: named constructions or explicit piece families


def _neg_powers_token(token, group, path):
    """Only the non-positive powers of the first generator are built in; the
    token must read "<first-generator>-neg-powers"."""
    name, sep, rest = token.partition("-")
    if not sep or rest != "neg-powers":
        _fail(f"unknown adjustment set {token!r}", path)
    try:
        word = group.parse(name)
    except InputError as exc:
        _fail(str(exc), path)
    if word != (1,):
        _fail(
            "only the non-positive powers of the first generator are supported",
            path,
        )


def _build_family_member(payload, group, path):
    """One piece descriptor -> membership predicate over group elements."""
    f = _Fields(payload, path)
    family = _as_str(f.take("family"), f"{path}/family")
    if family == "first-letter":
        letter_tok = _as_str(f.take("letter"), f"{path}/letter")
        include = f.take("include", required=False)
        exclude = f.take("exclude", required=False)
        f.finish()
        if not isinstance(group, FreeGroup):
            _fail("first-letter families live on free groups", f"{path}/family")
        try:
            word = group.parse(letter_tok)
        except InputError as exc:
            _fail(str(exc), f"{path}/letter")
        if len(word) != 1:
            _fail(f"expected a single letter, got {letter_tok!r}", f"{path}/letter")
        if include is not None:
            _neg_powers_token(_as_str(include, f"{path}/include"), group,
                              f"{path}/include")
        if exclude is not None:
            _neg_powers_token(_as_str(exclude, f"{path}/exclude"), group,
                              f"{path}/exclude")
        return paradox._first_letter_family(
            group, word[0],
            include_neg_powers=include is not None,
            exclude_neg_powers=exclude is not None,
        )
    if family == "explicit":
        tokens = _as_list(f.take("points"), f"{path}/points")
        f.finish()
        points = set()
        for i, token in enumerate(tokens):
            try:
                points.add(group.parse(_as_str(token, f"{path}/points/{i}")))
            except InputError as exc:
                _fail(str(exc), f"{path}/points/{i}")
        return lambda x, _pts=frozenset(points): x in _pts
    _fail(f"unknown piece family {family!r}", f"{path}/family")


def _explicit_side(f, group, side, path):
    """Parse one side (pieces, translators, cover name) of an explicit
    decomposition payload into PieceFamily + translator + cover."""
    descs = _as_list(f.take(f"{side}-pieces"), f"{path}/{side}-pieces")
    members = [
        _build_family_member(p, group, f"{path}/{side}-pieces/{i}")
        for i, p in enumerate(descs)
    ]
    if not members:
        _fail("a side needs at least one piece", f"{path}/{side}-pieces")
    tokens = _as_list(f.take(f"{side}-translators"), f"{path}/{side}-translators")
    translators = []
    for i, token in enumerate(tokens):
        try:
            translators.append(
                group.parse(_as_str(token, f"{path}/{side}-translators/{i}"))
            )
        except InputError as exc:
            _fail(str(exc), f"{path}/{side}-translators/{i}")
    if len(translators) != len(members):
        _fail(
            f"expected {len(members)} translators, got {len(translators)}",
            f"{path}/{side}-translators",
        )
    cover_name = _as_str(f.take(f"{side}-cover"), f"{path}/{side}-cover")
    if cover_name != "scan":
        _fail(f"unknown cover oracle {cover_name!r}", f"{path}/{side}-cover")
    n = len(members)

    def classifier(x):
        hits = [i for i in range(1, n + 1) if members[i - 1](x)]
        if len(hits) > 1:
            raise MalformedOracleError(
                f"pieces {hits[0]} and {hits[1]} overlap at {group.format(x)}"
            )
        return hits[0] if hits else None

    def membership(i, x):
        return members[i - 1](x)

    def translator(i):
        if not 1 <= i <= n:
            raise MalformedOracleError(f"translator index {i} out of range 1..{n}")
        return translators[i - 1]

    def cover(x):
        for i in range(1, n + 1):
            if members[i - 1](group.mul(group.inv(translators[i - 1]), x)):
                return i
        return 1  # no translate contains x; membership check refutes honestly

    family = paradox.PieceFamily(classifier, size=n, membership=membership)
    return family, translator, cover, tuple(translators)


def _build_decomposition_explicit(payload, path):
    f = _Fields(payload, path)
    group = build_group(f.take("group"), f"{path}/group")
    a = _explicit_side(f, group, "a", path)
    b = _explicit_side(f, group, "b", path)
    f.finish()
    return paradox.Decomposition(
        LeftTranslation(group),
        a[0], b[0], a[1], b[1], a[2], b[2],
        a_translator_range=a[3], b_translator_range=b[3],
        meta={"construction": {"kind": "explicit", "group": group.name}},
    )


def build_decomposition(payload, path="/payload"):
    d = _as_dict(payload, path)
    if "construction" not in d:
        return _build_decomposition_explicit(payload, path)
    f = _Fields(payload, path)
    kind = _as_str(f.take("construction"), f"{path}/construction")
    if kind == "singleton":
        group = build_group(f.take("group"), f"{path}/group")
        f.finish()
        return paradox.singleton_decomposition(group)
    if kind == "free2-standard":
        f.finish()
        return paradox.f2_standard_decomposition(FreeGroup(2))
    if kind == "lift":
        group = build_group(f.take("group"), f"{path}/group")
        witness_name = _as_str(f.take("witness"), f"{path}/witness")
        f.finish()
        makers = {
            "even-integers": paradox.even_integers_witness,
            "first-generator-powers": paradox.generator_power_witness,
        }
        if witness_name not in makers:
            _fail(f"unknown subgroup witness {witness_name!r}", f"{path}/witness")
        witness = makers[witness_name](group)
        return paradox.lift_via_transversal(
            group, witness, paradox.singleton_decomposition(witness.subgroup)
        )
    if kind == "infinite-auto":
        group = build_group(f.take("group"), f"{path}/group")
        f.finish()
        return paradox.countable_paradox_of_infinite(group)
    if kind == "compress":
        inner = build_decomposition(f.take("inner"), f"{path}/inner")
        bound = f.take("bound", required=False, default=200)
        f.finish()
        result = paradox.compress_translators(
            inner, index_bound=_as_int(bound, f"{path}/bound", minimum=4)
        )
        if result.status != "compressed":
            _fail("inner decomposition is not compressible within the bound",
                  f"{path}/inner")
        return result.decomposition
    if kind == "refine-singletons":
        inner = build_decomposition(f.take("inner"), f"{path}/inner")
        f.finish()
        return paradox.refine_to_singletons(inner)
    if kind == "glue":
        inner_payload = f.take("inner")
        mode = f.take("mode", required=False, default="uniform")
        copies = f.take("copies")
        f.finish()
        mode = _as_str(mode, f"{path}/mode")
        if mode not in ("uniform", "independent"):
            _fail(f"unknown glue mode {mode!r}", f"{path}/mode")
        inner = build_decomposition(inner_payload, f"{path}/inner")
        if not isinstance(inner.action, LeftTranslation):
            _fail("glue expects an inner decomposition of the group itself",
                  f"{path}/inner")
        if copies == "countable":
            count = None
        else:
            count = _as_int(copies, f"{path}/copies", minimum=1)
        action = ProductAction(inner.action, count)
        orbits = paradox.product_orbit_structure(action)
        return paradox.glue_orbit_decompositions(
            action, orbits, lambda rep: inner, mode=mode
        )
    _fail(f"unknown construction {kind!r}", f"{path}/construction")
