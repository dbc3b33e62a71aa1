"""Independent oracle models used to derive expected test values.

Nothing here touches the package's reflection-group code path: group orders
come from explicit enumeration of (signed) permutations, and orbit/dominance
facts from exhaustive search over those models.
"""

from fractions import Fraction
from itertools import permutations, product


def symmetric_group_order(n: int) -> int:
    """|S_n| by direct enumeration (Weyl group of the A-series, rank n-1)."""
    return sum(1 for _ in permutations(range(n)))


def hyperoctahedral_order(n: int) -> int:
    """|signed permutations of n letters| by enumeration (B/C series)."""
    return sum(1 for _ in product(permutations(range(n)), product((1, -1), repeat=n)))


def even_hyperoctahedral_order(n: int) -> int:
    """Signed permutations with an even number of sign flips (D series)."""
    count = 0
    for _, signs in product(permutations(range(n)), product((1, -1), repeat=n)):
        if signs.count(-1) % 2 == 0:
            count += 1
    return count


def signed_permutation_images(coords, series: str):
    """All images of an exact vector under the permutation model of one factor.

    A acts by permuting coordinates, B/C by signed permutation, D by
    even-signed permutation.
    """
    n = len(coords)
    images = set()
    if series == "A":
        for p in permutations(range(n)):
            images.add(tuple(coords[p[i]] for i in range(n)))
        return images
    for p in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            if series == "D" and signs.count(-1) % 2 != 0:
                continue
            images.add(tuple(signs[i] * coords[p[i]] for i in range(n)))
    return images


def brute_dominant_points(orbit_points, simple_roots):
    """Orbit points pairing non-negatively with every simple root (dot product)."""
    out = []
    for v in orbit_points:
        if all(
            sum(x * y for x, y in zip(v, s)) >= 0 for s in simple_roots
        ):
            out.append(v)
    return out


def frac_vec(items):
    return tuple(Fraction(x) for x in items)
