"""Group representations and finite verification windows.

Element conventions:

* table-backed and oracle-backed (enumerated) groups: elements are 0-based
  integer indices into a fixed enumeration;
* free groups: reduced words stored as tuples of signed generator numbers
  (``1`` = first generator, ``-1`` = its inverse, ``2`` = second, ...);
* free-abelian groups: plain integers for rank 1, integer tuples otherwise.

Group objects are immutable after construction and safe to share.  Countable
groups expose a canonical enumeration (``element_at`` / ``position_of``,
1-based) used by prefix windows and by the decomposition constructors:
shortlex order for free groups, box-shell order (zigzag within a shell) for
free-abelian groups, the oracle's own indexing for enumerated groups.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass
from functools import cached_property

from . import codec
from .errors import InputError, PreconditionError, UnsupportedOperationError


@dataclass(frozen=True)
class Window:
    """A finite, canonically ordered list of elements (or action points)
    against which semidecidable claims are checked."""

    kind: str
    label: str
    points: tuple

    @cached_property
    def point_set(self):
        return frozenset(self.points)

    def __contains__(self, x):
        return x in self.point_set

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


class Group:
    """Common interface; concrete classes fill in the element conventions."""

    name = "group"
    is_finite = False

    @property
    def identity(self):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def contains(self, a):
        raise NotImplementedError

    def order(self):
        raise UnsupportedOperationError(f"{self.name} is not finite")

    def elements(self):
        """Canonically ordered tuple of all elements (finite groups only)."""
        raise UnsupportedOperationError(f"{self.name} is not finite")

    # 1-based canonical enumeration, defined for every built-in kind.
    def element_at(self, pos):
        raise UnsupportedOperationError(f"{self.name} has no canonical enumeration")

    def position_of(self, a):
        raise UnsupportedOperationError(f"{self.name} has no canonical enumeration")

    def parse(self, token):
        raise NotImplementedError

    def format(self, a):
        raise NotImplementedError

    def prefix_window(self, count):
        """First ``count`` elements of the canonical enumeration."""
        if count < 0:
            raise InputError("window size must be >= 0")
        pts = tuple(self.element_at(i) for i in range(1, count + 1))
        return Window("prefix", f"prefix({count})", pts)

    def power(self, a, n):
        if n < 0:
            return self.power(self.inv(a), -n)
        acc = self.identity
        while n:
            if n & 1:
                acc = self.mul(acc, a)
            a = self.mul(a, a)
            n >>= 1
        return acc


class CayleyTableGroup(Group):
    """Finite group given by its full multiplication table over indices 0..n-1.

    The table must be a Latin square with a two-sided identity and inverses;
    associativity is the caller's responsibility (property tests sample it).
    """

    is_finite = True

    def __init__(self, table, identity_index, labels=None, name="finite-cayley"):
        table = tuple(tuple(row) for row in table)
        n = len(table)
        if n == 0:
            raise InputError("empty multiplication table")
        rng = range(n)
        full = frozenset(rng)
        for i, row in enumerate(table):
            if len(row) != n or frozenset(row) != full:
                raise InputError(f"table row {i} is not a permutation of 0..{n - 1}")
        for j in rng:
            if frozenset(table[i][j] for i in rng) != full:
                raise InputError(f"table column {j} is not a permutation of 0..{n - 1}")
        e = identity_index
        if not (0 <= e < n):
            raise InputError("identity index out of range")
        for i in rng:
            if table[e][i] != i or table[i][e] != i:
                raise InputError(f"index {e} is not a two-sided identity")
        inv = [None] * n
        for i in rng:
            for j in rng:
                if table[i][j] == e:
                    inv[i] = j
        if any(v is None for v in inv):
            raise InputError("table lacks inverses")
        self.table = table
        self._identity = e
        self._inv = tuple(inv)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in rng)
        if len(self.labels) != n:
            raise InputError("labels length must match table size")
        self.name = name
        self._n = n

    @property
    def identity(self):
        return self._identity

    def order(self):
        return self._n

    def elements(self):
        return tuple(range(self._n))

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inv[a]

    def contains(self, a):
        return isinstance(a, int) and 0 <= a < self._n

    def element_at(self, pos):
        if not (1 <= pos <= self._n):
            raise InputError(f"enumeration position {pos} out of range 1..{self._n}")
        return pos - 1

    def position_of(self, a):
        if not self.contains(a):
            raise InputError(f"not an element index: {a!r}")
        return a + 1

    def parse(self, token):
        token = token.strip()
        try:
            v = int(token)
        except ValueError:
            try:
                return self.labels.index(token)
            except ValueError:
                raise InputError(f"unknown element {token!r} of {self.name}") from None
        if not self.contains(v):
            raise InputError(f"element index {v} out of range for {self.name}")
        return v

    def format(self, a):
        return str(a)

    def label(self, a):
        return self.labels[a]

    def all_window(self):
        return Window("all", f"all({self._n})", self.elements())


def _perm_closure(degree, generators):
    gens = [tuple(g) for g in generators]
    idg = frozenset(range(degree))
    for g in gens:
        if frozenset(g) != idg:
            raise InputError(f"not a permutation of 0..{degree - 1}: {g}")
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(degree))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(seen)


def _cycle_label(perm):
    n = len(perm)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i] or perm[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = perm[j]
        parts.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(parts) if parts else "()"


def permutation_group(degree, generators, name="finite-perm"):
    """Close a generating set of permutations and return the resulting
    table-backed group.  Elements are indices into the lexicographically
    sorted closure; the identity permutation sorts first."""
    elems = _perm_closure(degree, generators)
    index = {p: i for i, p in enumerate(elems)}
    table = [
        [index[tuple(p[q[i]] for i in range(degree))] for q in elems] for p in elems
    ]
    labels = [_cycle_label(p) for p in elems]
    return CayleyTableGroup(table, index[tuple(range(degree))], labels, name)


class FreeGroup(Group):
    """Free group of finite rank; elements are reduced words.

    Generators are named a, b, c, ... and a word is a tuple of nonzero ints
    whose absolute value names the generator and whose sign the exponent.
    Canonical enumeration is shortlex with letter order a < a^-1 < b < b^-1.
    """

    def __init__(self, rank):
        if not (1 <= rank <= 26):
            raise InputError("free group rank must be between 1 and 26")
        self.rank = rank
        self.name = f"free({rank})"
        # letters in canonical order: +1, -1, +2, -2, ...
        self._letters = tuple(
            s * g for g in range(1, rank + 1) for s in (1, -1)
        )
        self._letter_rank = {v: i for i, v in enumerate(self._letters)}

    @property
    def identity(self):
        return ()

    def contains(self, w):
        if not isinstance(w, tuple):
            return False
        for i, v in enumerate(w):
            if not isinstance(v, int) or v == 0 or abs(v) > self.rank:
                return False
            if i and w[i - 1] == -v:
                return False
        return True

    def mul(self, a, b):
        i = len(a)
        j = 0
        while i > 0 and j < len(b) and a[i - 1] == -b[j]:
            i -= 1
            j += 1
        return a[:i] + b[j:]

    def inv(self, a):
        return tuple(-v for v in reversed(a))

    def generator(self, k):
        """k-th generator, 1-based."""
        if not (1 <= k <= self.rank):
            raise InputError(f"generator index {k} out of range")
        return (k,)

    # shortlex rank/unrank ------------------------------------------------
    def _count_words(self, length):
        a = 2 * self.rank
        return 1 if length == 0 else a * (a - 1) ** (length - 1)

    def position_of(self, w):
        """1-based shortlex position of a reduced word."""
        if not self.contains(w):
            raise InputError(f"not a reduced word: {w!r}")
        a = 2 * self.rank
        pos = sum(self._count_words(l) for l in range(len(w)))
        for i, v in enumerate(w):
            order = self._letter_rank[v]
            if i:
                # letters other than the cancelling one, in canonical order
                banned = self._letter_rank[-w[i - 1]]
                order -= 1 if order > banned else 0
                pos += order * (a - 1) ** (len(w) - 1 - i)
            else:
                pos += order * (a - 1) ** (len(w) - 1)
        return pos + 1

    def element_at(self, pos):
        if pos < 1:
            raise InputError("enumeration position must be >= 1")
        n = pos - 1
        a = 2 * self.rank
        length = 0
        while n >= self._count_words(length):
            n -= self._count_words(length)
            length += 1
        word = []
        for i in range(length):
            block = (a - 1) ** (length - 1 - i)
            order, n = divmod(n, block)
            if i == 0:
                word.append(self._letters[order])
            else:
                banned = self._letter_rank[-word[-1]]
                if order >= banned:
                    order += 1
                word.append(self._letters[order])
        return tuple(word)

    def ball(self, radius):
        """Window of all reduced words of length <= radius, shortlex order."""
        if radius < 0:
            raise InputError("radius must be >= 0")
        size = sum(self._count_words(l) for l in range(radius + 1))
        pts = tuple(self.element_at(i) for i in range(1, size + 1))
        return Window("ball", f"ball({radius})", pts)

    # element syntax ------------------------------------------------------
    def _gen_name(self, k):
        return string.ascii_lowercase[k - 1]

    def parse(self, token):
        token = token.strip()
        if token in ("e", "1", ""):
            return ()
        word = ()
        for part in token.split("*"):
            part = part.strip()
            if "^" in part:
                base, _, expt = part.partition("^")
                try:
                    n = int(expt)
                except ValueError:
                    raise InputError(f"bad exponent in {token!r}") from None
            else:
                base, n = part, 1
            base = base.strip()
            k = string.ascii_lowercase.find(base) + 1
            if not (1 <= k <= self.rank):
                raise InputError(f"unknown generator {base!r} in {token!r}")
            word = self.mul(word, (k,) * n if n >= 0 else (-k,) * (-n))
        return word

    def format(self, w):
        if not w:
            return "e"
        parts = []
        for v, run in itertools.groupby(w):
            n = len(list(run))
            g = self._gen_name(abs(v))
            if v < 0:
                n = -n
            parts.append(g if n == 1 else f"{g}^{n}")
        return "*".join(parts)


class FreeAbelianGroup(Group):
    """Free abelian group Z^k; rank 1 uses bare integers as elements.

    Canonical enumeration orders elements by box shell (max-norm), breaking
    ties coordinatewise by the zigzag order 0 < 1 < -1 < 2 < ...; for rank 1
    this is exactly 0, 1, -1, 2, -2, ...
    """

    def __init__(self, rank):
        if rank < 1:
            raise InputError("free-abelian rank must be >= 1")
        self.rank = rank
        self.name = f"free-abelian({rank})"
        self._shells = []  # cached shells for rank >= 2

    @property
    def identity(self):
        return 0 if self.rank == 1 else (0,) * self.rank

    def contains(self, v):
        if self.rank == 1:
            return isinstance(v, int) and not isinstance(v, bool)
        return (
            isinstance(v, tuple)
            and len(v) == self.rank
            and all(isinstance(c, int) and not isinstance(c, bool) for c in v)
        )

    def mul(self, a, b):
        if self.rank == 1:
            return a + b
        return tuple(x + y for x, y in zip(a, b))

    def inv(self, a):
        if self.rank == 1:
            return -a
        return tuple(-x for x in a)

    def generator(self, k):
        if not (1 <= k <= self.rank):
            raise InputError(f"generator index {k} out of range")
        if self.rank == 1:
            return 1
        return tuple(1 if i == k - 1 else 0 for i in range(self.rank))

    def _shell(self, r):
        """Vectors of max-norm exactly r, in zigzag-lex order (rank >= 2)."""
        while len(self._shells) <= r:
            rr = len(self._shells)
            ring = [
                v
                for v in itertools.product(range(-rr, rr + 1), repeat=self.rank)
                if max(abs(c) for c in v) == rr
            ] if rr else [(0,) * self.rank]
            ring.sort(key=lambda v: tuple(codec.zigzag_position(c) for c in v))
            self._shells.append(tuple(ring))
        return self._shells[r]

    def element_at(self, pos):
        if pos < 1:
            raise InputError("enumeration position must be >= 1")
        if self.rank == 1:
            return codec.zigzag_value(pos - 1)
        n = pos - 1
        r = 0
        while True:
            shell = self._shell(r)
            if n < len(shell):
                return shell[n]
            n -= len(shell)
            r += 1

    def position_of(self, v):
        if not self.contains(v):
            raise InputError(f"not an element of {self.name}: {v!r}")
        if self.rank == 1:
            return codec.zigzag_position(v) + 1
        r = max(abs(c) for c in v)
        shell = self._shell(r)
        base = sum(len(self._shell(s)) for s in range(r))
        return base + shell.index(v) + 1

    def box(self, radius):
        """Window of all vectors with every coordinate in [-radius, radius],
        listed in canonical enumeration order."""
        if radius < 0:
            raise InputError("radius must be >= 0")
        if self.rank == 1:
            pts = tuple(codec.zigzag_value(i) for i in range(2 * radius + 1))
        else:
            pts = tuple(
                itertools.chain.from_iterable(self._shell(r) for r in range(radius + 1))
            )
        return Window("box", f"box({radius})", pts)

    def parse(self, token):
        token = token.strip()
        try:
            if self.rank == 1:
                return int(token)
            if not (token.startswith("[") and token.endswith("]")):
                raise ValueError
            v = tuple(int(p) for p in token[1:-1].split(",")) if token[1:-1].strip() else ()
            if len(v) != self.rank:
                raise ValueError
            return v
        except ValueError:
            raise InputError(f"bad element {token!r} for {self.name}") from None

    def format(self, v):
        if self.rank == 1:
            return str(v)
        return "[" + ",".join(str(c) for c in v) + "]"


class EnumeratedGroup(Group):
    """Countable group given by oracles over 0-based natural indices.

    ``mul_index`` and ``inv_index`` are pure functions on indices; ``namer``
    renders an index as a human-readable label.  The identity's index must
    be a fixed point of the oracles in the usual way; windows of tests
    enforce mul(i, identity) = i and mul(inv(i), i) = identity.
    """

    def __init__(self, mul_index, inv_index, identity_index=0, namer=None, name="enumerated"):
        self._mul = mul_index
        self._inv = inv_index
        self._identity = identity_index
        self._namer = namer or str
        self.name = name

    @property
    def identity(self):
        return self._identity

    def contains(self, a):
        return isinstance(a, int) and not isinstance(a, bool) and a >= 0

    def mul(self, a, b):
        return self._mul(a, b)

    def inv(self, a):
        return self._inv(a)

    def element_at(self, pos):
        if pos < 1:
            raise InputError("enumeration position must be >= 1")
        return pos - 1

    def position_of(self, a):
        if not self.contains(a):
            raise InputError(f"not an element index: {a!r}")
        return a + 1

    def parse(self, token):
        try:
            v = int(token)
        except ValueError:
            raise InputError(f"bad element index {token!r}") from None
        if v < 0:
            raise InputError("element index must be >= 0")
        return v

    def format(self, a):
        return str(a)

    def label(self, a):
        return self._namer(a)


def integers_enumerated():
    """The integers as an oracle-backed enumerated group, indexed by the
    zigzag enumeration 0, 1, -1, 2, -2, ..."""

    def mul(a, b):
        return codec.zigzag_position(codec.zigzag_value(a) + codec.zigzag_value(b))

    def inv(a):
        return codec.zigzag_position(-codec.zigzag_value(a))

    return EnumeratedGroup(mul, inv, 0, namer=lambda a: str(codec.zigzag_value(a)),
                           name="enumerated-integers")


def even_integers_enumerated():
    """The even integers under addition, indexed 0, 2, -2, 4, -4, ..."""

    def value(a):
        return 2 * codec.zigzag_value(a)

    def mul(a, b):
        return codec.zigzag_position((value(a) + value(b)) // 2)

    def inv(a):
        return codec.zigzag_position(-codec.zigzag_value(a))

    return EnumeratedGroup(mul, inv, 0, namer=lambda a: str(value(a)),
                           name="enumerated-even-integers")


def integer_pairs_enumerated():
    """Z^2 under addition, indexed by the Cantor pairing of two zigzag codes."""

    def value(a):
        i, j = codec.cantor_unpair(a)
        return codec.zigzag_value(i), codec.zigzag_value(j)

    def index(v):
        return codec.cantor_pair(codec.zigzag_position(v[0]), codec.zigzag_position(v[1]))

    def mul(a, b):
        (x1, y1), (x2, y2) = value(a), value(b)
        return index((x1 + x2, y1 + y2))

    def inv(a):
        x, y = value(a)
        return index((-x, -y))

    g = EnumeratedGroup(mul, inv, index((0, 0)),
                        namer=lambda a: "[%d,%d]" % value(a),
                        name="enumerated-integer-pairs")
    g.value = value
    g.index = index
    return g


# ---------------------------------------------------------------------------
# finite group utilities


def closure(group, elements):
    """Subgroup generated by ``elements`` inside a finite group (BFS over
    products with the generators and their inverses)."""
    if not group.is_finite:
        raise UnsupportedOperationError("closure requires a finite group")
    gens = set(elements) | {group.inv(x) for x in elements} | {group.identity}
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = group.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def is_generating(group, elements):
    """Whether ``elements`` generate the whole group.  Decidable only for
    finite groups; infinite groups must carry a caller assertion instead."""
    if not group.is_finite:
        raise UnsupportedOperationError(
            "generation is undecidable here; assert it on the configuration pair"
        )
    return len(closure(group, elements)) == group.order()


def subgroups(group):
    """All subgroups of a finite group, as frozensets of element indices."""
    if not group.is_finite:
        raise UnsupportedOperationError("subgroup enumeration requires a finite group")
    n = group.order()
    elems = group.elements()
    e = group.identity
    found = {frozenset([e]), frozenset(elems)}
    # grow from generated subgroups; order <= 12 keeps this cheap
    layer = {frozenset([e])}
    while layer:
        nxt = set()
        for sub in layer:
            for x in elems:
                if x in sub:
                    continue
                bigger = closure(group, set(sub) | {x})
                if bigger not in found:
                    found.add(bigger)
                    nxt.add(bigger)
        layer = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def is_normal(group, subset):
    sub = frozenset(subset)
    return all(
        frozenset(group.mul(group.mul(x, s), group.inv(x)) for s in sub) == sub
        for x in group.elements()
    )


def normal_subgroups(group):
    return [s for s in subgroups(group) if is_normal(group, s)]


def quotient_group(group, normal):
    """Quotient of a finite group by a normal subgroup.

    Returns (quotient, cosets, representatives) where cosets is the tuple of
    left cosets ordered with the identity coset first and then by smallest
    member, and representatives picks the identity for the identity coset
    and the smallest member otherwise.  The quotient is table-backed with
    indices aligned to the coset order.
    """
    normal = frozenset(normal)
    if not is_normal(group, normal):
        raise PreconditionError("subgroup is not normal")
    coset_of = {}
    cosets = []
    for x in group.elements():
        if x in coset_of:
            continue
        cs = frozenset(group.mul(x, s) for s in normal)
        for y in cs:
            coset_of[y] = cs
        cosets.append(cs)
    e = group.identity
    cosets.sort(key=lambda c: (e not in c, min(c)))
    index = {c: i for i, c in enumerate(cosets)}
    reps = tuple(e if e in c else min(c) for c in cosets)
    table = [
        [index[coset_of[group.mul(a, b)]] for b in reps] for a in reps
    ]
    labels = ["{" + ",".join(group.format(x) for x in sorted(c)) + "}" for c in cosets]
    q = CayleyTableGroup(table, 0, labels, name=f"{group.name}-quotient")
    return q, tuple(cosets), reps


def direct_product(a, b, name=None):
    """Direct product of two table-backed groups; element (x, y) has index
    x * |b| + y."""
    na, nb = a.order(), b.order()
    table = [
        [
            a.mul(x1, x2) * nb + b.mul(y1, y2)
            for x2 in range(na)
            for y2 in range(nb)
        ]
        for x1 in range(na)
        for y1 in range(nb)
    ]
    labels = [
        f"({a.label(x)},{b.label(y)})" for x in range(na) for y in range(nb)
    ]
    return CayleyTableGroup(
        table,
        a.identity * nb + b.identity,
        labels,
        name or f"{a.name}x{b.name}",
    )
