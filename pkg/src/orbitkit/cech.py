"""Finite-nerve Cech cohomology over the integers and the rationals.

The nerve of a cover is an abstract simplicial complex; cochains live on its
strictly increasing simplex tuples and the coboundary is the alternating
face sum.  Integer cohomology comes from the Smith normal form of the
coboundary matrices, which also yields coordinates for integer 2-cocycle
classes (the Chern-class data of transition functions).

A single nerve is the input; refinements and the direct limit are out of
scope, so the cover is assumed to have contractible intersections.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .errors import InputError
from .linalg import mat, rank as rational_rank, smith_normal_form

RING_Z = "Z"
RING_Q = "Q"

Simplex = tuple[int, ...]


@dataclass(frozen=True)
class Nerve:
    vertex_count: int
    simplices: tuple[tuple[Simplex, ...], ...]  # index = dimension

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    def of_dim(self, k: int) -> tuple[Simplex, ...]:
        if k < 0 or k > self.dimension:
            return ()
        return self.simplices[k]

    def index_of(self, k: int) -> dict[Simplex, int]:
        return {s: i for i, s in enumerate(self.of_dim(k))}


@dataclass(frozen=True)
class Cochain:
    degree: int
    ring: str
    values: Mapping[Simplex, object]

    def value(self, simplex: Sequence[int]):
        """Value on an arbitrary index tuple, with the alternating sign
        convention; repeated indices give zero."""
        s = tuple(simplex)
        if len(set(s)) != len(s):
            return _zero(self.ring)
        order = tuple(sorted(s))
        sign = _permutation_sign(s, order)
        base = self.values.get(order, _zero(self.ring))
        return sign * base


def _zero(ring: str):
    return 0 if ring == RING_Z else Fraction(0)


def _permutation_sign(s: Sequence[int], target: Sequence[int]) -> int:
    perm = [target.index(x) for x in s]
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        cycle = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


def build_nerve(simplices: Iterable[Sequence[int]]) -> Nerve:
    """Downward closure of the given simplices with canonical ordering."""
    by_dim: dict[int, set[Simplex]] = {}
    for raw in simplices:
        s = tuple(raw)
        if not s:
            raise InputError("empty simplex")
        if any(not isinstance(v, int) or v < 0 for v in s):
            raise InputError(f"simplex {s} must consist of non-negative integers")
        if any(a >= b for a, b in zip(s, s[1:])):
            raise InputError(f"simplex {s} is not strictly increasing")
        by_dim.setdefault(len(s) - 1, set()).add(s)
    if not by_dim:
        return Nerve(0, ((),))
    top = max(by_dim)
    # close downward: every face of a listed simplex is listed
    for k in range(top, 0, -1):
        for s in tuple(by_dim.get(k, ())):
            for omit in range(len(s)):
                face = s[:omit] + s[omit + 1 :]
                by_dim.setdefault(k - 1, set()).add(face)
    levels = tuple(tuple(sorted(by_dim.get(k, ()))) for k in range(top + 1))
    vertex_count = max(v for s in levels[0] for v in s) + 1
    return Nerve(vertex_count, levels)


def parse_nerve_lines(lines: Iterable[str]) -> Nerve:
    """Nerve file format: one simplex per line as space-separated increasing
    integers; '#' starts a comment."""
    simplices = []
    for lineno, line in enumerate(lines, start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            s = tuple(int(t) for t in body.split())
        except ValueError as exc:
            raise InputError(f"nerve file line {lineno}: {exc}") from exc
        if any(a >= b for a, b in zip(s, s[1:])) or any(v < 0 for v in s):
            raise InputError(
                f"nerve file line {lineno}: expected strictly increasing "
                f"non-negative integers, got {body!r}"
            )
        simplices.append(s)
    if not simplices:
        raise InputError("nerve file contains no simplices")
    return build_nerve(simplices)


def parse_cochain_lines(
    lines: Iterable[str], nerve: Nerve, degree: int, ring: str = RING_Z
) -> Cochain:
    """Cochain file format: one '<simplex tuple> <value>' per line; simplices
    not listed default to zero."""
    values: dict[Simplex, object] = {}
    known = set(nerve.of_dim(degree))
    for lineno, line in enumerate(lines, start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) < 2:
            raise InputError(f"cochain file line {lineno}: need simplex and value")
        try:
            s = tuple(int(t) for t in parts[:-1])
            val = int(parts[-1]) if ring == RING_Z else Fraction(parts[-1])
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cochain file line {lineno}: {exc}") from exc
        if len(s) != degree + 1:
            raise InputError(
                f"cochain file line {lineno}: simplex {s} has wrong degree "
                f"(expected {degree})"
            )
        if s not in known:
            raise InputError(
                f"cochain file line {lineno}: simplex {s} is not in the nerve"
            )
        values[s] = values.get(s, _zero(ring)) + val
    return make_cochain(nerve, degree, values, ring)


def make_cochain(
    nerve: Nerve, degree: int, values: Mapping[Simplex, object], ring: str = RING_Z
) -> Cochain:
    """Cochain defined on exactly the degree-k simplices; omitted ones are 0."""
    if ring not in (RING_Z, RING_Q):
        raise InputError(f"unknown ring {ring!r}")
    known = set(nerve.of_dim(degree))
    out: dict[Simplex, object] = {s: _zero(ring) for s in known}
    for s, v in values.items():
        key = tuple(s)
        if key not in known:
            raise InputError(f"simplex {key} is not a {degree}-simplex of the nerve")
        out[key] = int(v) if ring == RING_Z else Fraction(v)
    return Cochain(degree, ring, out)


def coboundary(c: Cochain, nerve: Nerve) -> Cochain:
    """Alternating face sum; lands on the (k+1)-simplices.

    Beyond the nerve dimension the result is the empty cochain of the next
    degree, and applying the operator twice always yields zero.
    """
    k = c.degree
    values: dict[Simplex, object] = {}
    for s in nerve.of_dim(k + 1):
        total = _zero(c.ring)
        for omit in range(len(s)):
            face = s[:omit] + s[omit + 1 :]
            term = c.values.get(face, _zero(c.ring))
            total = total + term if omit % 2 == 0 else total - term
        values[s] = total
    return Cochain(k + 1, c.ring, values)


def coboundary_matrix(nerve: Nerve, k: int) -> list[list[int]]:
    """Integer matrix of delta_k with rows indexed by (k+1)-simplices and
    columns by k-simplices."""
    rows = nerve.of_dim(k + 1)
    cols = nerve.index_of(k)
    out = [[0] * len(cols) for _ in rows]
    for i, s in enumerate(rows):
        for omit in range(len(s)):
            face = s[:omit] + s[omit + 1 :]
            out[i][cols[face]] += 1 if omit % 2 == 0 else -1
    return out


@dataclass(frozen=True)
class CohomologyGroup:
    degree: int
    free_rank: int
    torsion: tuple[int, ...]

    def describe(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def cohomology(nerve: Nerve, k: int, ring: str = RING_Z) -> CohomologyGroup:
    """H^k of the nerve: Smith normal form over Z, plain ranks over Q."""
    if k < 0:
        raise InputError("cohomology degree must be >= 0")
    if ring not in (RING_Z, RING_Q):
        raise InputError(f"unknown ring {ring!r}")
    n_k = len(nerve.of_dim(k))
    if n_k == 0:
        return CohomologyGroup(k, 0, ())
    d_k = coboundary_matrix(nerve, k)
    d_km1 = coboundary_matrix(nerve, k - 1) if k > 0 else []
    rank_k = _int_rank(d_k)
    rank_km1 = _int_rank(d_km1)
    free = n_k - rank_k - rank_km1
    if ring == RING_Q:
        return CohomologyGroup(k, free, ())
    torsion = tuple(
        d for d in _invariant_factors(d_km1) if d > 1
    )
    return CohomologyGroup(k, free, torsion)


def _int_rank(m: list[list[int]]) -> int:
    if not m or not m[0]:
        return 0
    return rational_rank(mat(m))


def _invariant_factors(m: list[list[int]]) -> list[int]:
    if not m or not m[0]:
        return []
    d, _, _ = smith_normal_form(m)
    out = []
    for i in range(min(len(d), len(d[0]))):
        if d[i][i] != 0:
            out.append(d[i][i])
    return out


@dataclass(frozen=True)
class ChernClass:
    valid: bool
    witness: Optional[Simplex]
    free_coords: tuple[int, ...]
    torsion_coords: tuple[tuple[int, int], ...]  # (value mod d, d)

    def is_trivial(self) -> bool:
        return (
            self.valid
            and all(x == 0 for x in self.free_coords)
            and all(v == 0 for v, _ in self.torsion_coords)
        )


def chern_class(nerve: Nerve, a: Cochain) -> ChernClass:
    """Class of an integer 2-cocycle in the Smith basis modulo coboundaries.

    Validity means the cocycle condition (vanishing coboundary); on failure
    the witness names an offending 3-simplex.  Cochains differing by a
    coboundary of an integer 1-cochain receive identical coordinates.
    """
    if a.degree != 2 or a.ring != RING_Z:
        raise InputError("chern_class expects an integer 2-cochain")
    delta = coboundary(a, nerve)
    for s, v in sorted(delta.values.items()):
        if v != 0:
            return ChernClass(False, s, (), ())
    two = nerve.index_of(2)
    vec_a = [0] * len(two)
    for s, v in a.values.items():
        vec_a[two[s]] = int(v)
    d1 = coboundary_matrix(nerve, 1)
    if not two:
        return ChernClass(True, None, (), ())
    if not d1 or not d1[0]:
        # no 1-simplices: the class is the cocycle itself
        return ChernClass(True, None, tuple(vec_a), ())
    d, u, _ = smith_normal_form(d1)
    r = sum(
        1
        for i in range(min(len(d), len(d[0])))
        if d[i][i] != 0
    )
    y = [sum(u[i][j] * vec_a[j] for j in range(len(vec_a))) for i in range(len(u))]
    torsion = tuple(
        (y[i] % d[i][i], d[i][i]) for i in range(r) if d[i][i] > 1
    )
    free = tuple(y[i] for i in range(r, len(y)))
    return ChernClass(True, None, free, torsion)
