"""Small finite groups used as test fixtures and CLI demo material."""

from __future__ import annotations

from .groups import CayleyTableGroup, direct_product, permutation_group


def cyclic(n):
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return CayleyTableGroup(table, 0, [str(i) for i in range(n)], name=f"Z{n}")


def symmetric(n):
    gens = [tuple(list(range(1, n)) + [0])]
    if n >= 2:
        gens.append(tuple([1, 0] + list(range(2, n))))
    return permutation_group(n, gens, name=f"S{n}")


def dihedral(n):
    """Symmetries of a regular n-gon, order 2n."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((n - i) % n for i in range(n))
    return permutation_group(n, [rot, ref], name=f"D{n}")


def alternating4():
    return permutation_group(4, [(1, 2, 0, 3), (1, 0, 3, 2)], name="A4")


_QUAT_AXES = {
    # basis products on {1, i, j, k}: _QUAT_AXES[a][b] = (sign, axis)
    0: {0: (1, 0), 1: (1, 1), 2: (1, 2), 3: (1, 3)},
    1: {0: (1, 1), 1: (-1, 0), 2: (1, 3), 3: (-1, 2)},
    2: {0: (1, 2), 1: (-1, 3), 2: (-1, 0), 3: (1, 1)},
    3: {0: (1, 3), 1: (1, 2), 2: (-1, 1), 3: (-1, 0)},
}


def quaternion8():
    """Quaternion group {±1, ±i, ±j, ±k} with indices 0..7 in that order."""

    def decode(x):  # index -> (sign, axis)
        return (1 if x % 2 == 0 else -1), x // 2

    def encode(sign, axis):
        return 2 * axis + (0 if sign == 1 else 1)

    def mul(x, y):
        sx, ax = decode(x)
        sy, ay = decode(y)
        s, a = _QUAT_AXES[ax][ay]
        return encode(sx * sy * s, a)

    table = [[mul(x, y) for y in range(8)] for x in range(8)]
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return CayleyTableGroup(table, 0, labels, name="Q8")


def fixture_groups():
    """The 13 finite groups the randomized suites run against, keyed by name."""
    z2, z3, z4 = cyclic(2), cyclic(3), cyclic(4)
    z2xz2 = direct_product(z2, cyclic(2), name="Z2xZ2")
    out = {
        "Z2": z2,
        "Z3": z3,
        "Z4": z4,
        "Z2xZ2": z2xz2,
        "Z5": cyclic(5),
        "Z6": cyclic(6),
        "S3": symmetric(3),
        "Z7": cyclic(7),
        "Z8": cyclic(8),
        "Z4xZ2": direct_product(z4, cyclic(2), name="Z4xZ2"),
        "Z2cube": direct_product(z2xz2, cyclic(2), name="Z2cube"),
        "D4": dihedral(4),
        "Q8": quaternion8(),
    }
    return out


def reconstruction_groups():
    """Groups of order <= 12 whose normal-subgroup quotients feed the
    coset-recovery roundtrip."""
    out = dict(fixture_groups())
    out.update(
        {
            "Z9": cyclic(9),
            "Z3xZ3": direct_product(cyclic(3), cyclic(3), name="Z3xZ3"),
            "Z10": cyclic(10),
            "D5": dihedral(5),
            "Z12": cyclic(12),
            "Z6xZ2": direct_product(cyclic(6), cyclic(2), name="Z6xZ2"),
            "D6": dihedral(6),
            "A4": alternating4(),
        }
    )
    return out
