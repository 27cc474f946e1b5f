"""Finite spaces under the Rosenbloom-Tsfasman (RT) metric.

Three families are supported:

* ``zq``      -- words of length n over Z_q = {0, ..., q-1};
* ``sn``      -- permutations of {1, ..., n} in one-line notation;
* ``product`` -- tuples over X_1 x ... x X_n with |X_i| = q_i, coordinate i
  taking values in {0, ..., q_i - 1}.

Positions are 1-based everywhere a caller can see them.  The RT distance of
two points is the largest position at which they disagree (0 if equal).

Canonical enumeration order (and therefore vertex ids): ``zq`` and
``product`` count in mixed radix with position 1 least significant, so the
Z_2^2 order is (0,0), (1,0), (0,1), (1,1); ``sn`` is lexicographic in
one-line form.

>>> s = SpaceSpec.parse("zq:q=3,n=3")
>>> rt_distance(s.point((0, 1, 2)), s.point((0, 2, 2)))
2
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .config import DEFAULT_MAX_POINTS
from .errors import (
    InvalidDistanceError,
    InvalidPointError,
    InvalidSpaceError,
    SizeLimitError,
    SpaceMismatchError,
)

KINDS = ("zq", "sn", "product")


@dataclass(frozen=True)
class SpaceSpec:
    kind: str
    q: int | None = None
    n: int | None = None
    sizes: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidSpaceError(f"unknown space kind {self.kind!r}")
        if self.kind == "zq":
            if self.q is None or self.q < 2:
                raise InvalidSpaceError(f"zq needs q >= 2, got q={self.q}")
            if self.n is None or self.n < 1:
                raise InvalidSpaceError(f"zq needs n >= 1, got n={self.n}")
            if self.sizes is not None:
                raise InvalidSpaceError("zq takes no sizes")
        elif self.kind == "sn":
            if self.n is None or self.n < 1:
                raise InvalidSpaceError(f"sn needs n >= 1, got n={self.n}")
            if self.q is not None or self.sizes is not None:
                raise InvalidSpaceError("sn takes only n")
        else:
            if not self.sizes:
                raise InvalidSpaceError("product needs a nonempty sizes list")
            object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
            if any(s < 2 for s in self.sizes):
                raise InvalidSpaceError(f"product sizes must all be >= 2, got {self.sizes}")
            if self.q is not None:
                raise InvalidSpaceError("product takes no q")
            if self.n is None:
                object.__setattr__(self, "n", len(self.sizes))
            elif self.n != len(self.sizes):
                raise InvalidSpaceError("product n must equal len(sizes)")

    @classmethod
    def zq(cls, q: int, n: int) -> SpaceSpec:
        return cls("zq", q=q, n=n)

    @classmethod
    def sn(cls, n: int) -> SpaceSpec:
        return cls("sn", n=n)

    @classmethod
    def product(cls, sizes: Sequence[int]) -> SpaceSpec:
        return cls("product", sizes=tuple(sizes))

    @classmethod
    def parse(cls, text: str) -> SpaceSpec:
        """Parse ``zq:q=3,n=4``, ``sn:n=5`` or ``product:sizes=2,3,2``."""
        m = re.fullmatch(r"\s*(zq|sn|product)\s*:\s*(.*?)\s*", text)
        if not m:
            raise InvalidSpaceError(f"cannot parse space {text!r}")
        kind, rest = m.groups()
        try:
            if kind == "product":
                m2 = re.fullmatch(r"sizes\s*=\s*([\d\s,]+)", rest)
                if not m2:
                    raise InvalidSpaceError(f"cannot parse space {text!r}")
                return cls.product([int(s) for s in m2.group(1).split(",")])
            params = {}
            for part in rest.split(","):
                key, sep, value = part.partition("=")
                if not sep:
                    raise InvalidSpaceError(f"cannot parse space {text!r}")
                params[key.strip()] = int(value)
        except ValueError as exc:
            if isinstance(exc, InvalidSpaceError):
                raise
            raise InvalidSpaceError(f"cannot parse space {text!r}") from exc
        expected = {"zq": {"q", "n"}, "sn": {"n"}}[kind]
        if set(params) != expected:
            raise InvalidSpaceError(f"{kind} needs parameters {sorted(expected)}, got {sorted(params)}")
        return cls(kind, **params)

    def __str__(self):
        if self.kind == "zq":
            return f"zq:q={self.q},n={self.n}"
        if self.kind == "sn":
            return f"sn:n={self.n}"
        return "product:sizes=" + ",".join(map(str, self.sizes))

    @property
    def name(self) -> str:
        """Mathematical name used in messages, e.g. ``Z_3^4`` or ``S_3``."""
        if self.kind == "zq":
            return f"Z_{self.q}^{self.n}"
        if self.kind == "sn":
            return f"S_{self.n}"
        return "X(" + ",".join(map(str, self.sizes)) + ")"

    def alphabet_sizes(self) -> tuple[int, ...]:
        """Number of symbols available at each position (zq and product)."""
        if self.kind == "zq":
            return (self.q,) * self.n
        if self.kind == "product":
            return self.sizes
        raise InvalidSpaceError("sn has no per-position alphabet")

    def cardinality(self) -> int:
        if self.kind == "zq":
            return self.q**self.n
        if self.kind == "sn":
            return math.factorial(self.n)
        return math.prod(self.sizes)

    def distances(self) -> tuple[int, ...]:
        """dist(X): every distance realized by two distinct points."""
        if self.kind == "sn":
            return tuple(range(2, self.n + 1))
        return tuple(range(1, self.n + 1))

    def point(self, coords: Sequence[int]) -> Point:
        return Point(tuple(int(c) for c in coords), self)


@dataclass(frozen=True)
class Point:
    coords: tuple[int, ...]
    space: SpaceSpec

    def __post_init__(self):
        s = self.space
        if len(self.coords) != s.n:
            raise InvalidPointError(f"{self.coords} has length {len(self.coords)}, {s.name} needs {s.n}")
        if s.kind == "sn":
            if sorted(self.coords) != list(range(1, s.n + 1)):
                raise InvalidPointError(f"{self.coords} is not a permutation of 1..{s.n}")
        else:
            for i, (c, size) in enumerate(zip(self.coords, s.alphabet_sizes()), start=1):
                if not 0 <= c < size:
                    raise InvalidPointError(f"coordinate {i} of {self.coords} is outside 0..{size - 1}")

    def __str__(self):
        return ",".join(map(str, self.coords))


@dataclass(frozen=True)
class DistanceSet:
    values: tuple[int, ...] = ()

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise InvalidDistanceError(f"distances must be strictly increasing, got {list(vals)}")

    @classmethod
    def parse(cls, text: str) -> DistanceSet:
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(t) for t in text.split(",")))
        except ValueError as exc:
            raise InvalidDistanceError(f"cannot parse distances {text!r}") from exc

    def __str__(self):
        return ",".join(map(str, self.values))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __contains__(self, d):
        return d in self.values

    def validate(self, space: SpaceSpec) -> DistanceSet:
        allowed = space.distances()
        for d in self.values:
            if d not in allowed:
                raise InvalidDistanceError(f"{d} not in dist({space.name})")
        return self


def as_distance_set(D) -> DistanceSet:
    if isinstance(D, DistanceSet):
        return D
    if isinstance(D, str):
        return DistanceSet.parse(D)
    return DistanceSet(tuple(D))


def all_distance_sets(space: SpaceSpec, include_empty=False) -> list[DistanceSet]:
    """Every subset of dist(space), ordered by size then lexicographically."""
    dist = space.distances()
    out = [DistanceSet(())] if include_empty else []
    for k in range(1, len(dist) + 1):
        out.extend(DistanceSet(c) for c in itertools.combinations(dist, k))
    return out


# -- RT weight and distance ---------------------------------------------------


def _check_same(x: Point, y: Point, kind: str | None = None):
    if x.space != y.space:
        raise SpaceMismatchError(f"points live in {x.space.name} and {y.space.name}")
    if kind is not None and x.space.kind != kind:
        raise SpaceMismatchError(f"expected a {kind} point, got one from {x.space.name}")


def rt_weight_zq(x: Point) -> int:
    if x.space.kind != "zq":
        raise SpaceMismatchError(f"rt_weight_zq needs a zq point, got {x.space.name}")
    return _last_nonzero(x.coords)


def _last_nonzero(coords) -> int:
    for i in range(len(coords), 0, -1):
        if coords[i - 1] != 0:
            return i
    return 0


def _max_disagreement(a, b) -> int:
    for i in range(len(a), 0, -1):
        if a[i - 1] != b[i - 1]:
            return i
    return 0


def rt_distance_zq(x: Point, y: Point) -> int:
    """Weight of the difference x - y, taken coordinatewise mod q."""
    _check_same(x, y, "zq")
    q = x.space.q
    return _last_nonzero([(a - b) % q for a, b in zip(x.coords, y.coords)])


def rt_distance_product(x: Point, y: Point, spec: SpaceSpec | None = None) -> int:
    _check_same(x, y)
    if spec is not None and spec != x.space:
        raise SpaceMismatchError(f"points live in {x.space.name}, not {spec.name}")
    if x.space.kind == "sn":
        raise SpaceMismatchError("use rt_distance_perm for permutations")
    return _max_disagreement(x.coords, y.coords)


def perm_compose(alpha: Point, beta: Point) -> Point:
    """(alpha o beta)(i) = alpha(beta(i))."""
    _check_same(alpha, beta, "sn")
    a = alpha.coords
    return Point(tuple(a[b - 1] for b in beta.coords), alpha.space)


def perm_invert(alpha: Point) -> Point:
    if alpha.space.kind != "sn":
        raise SpaceMismatchError(f"perm_invert needs a permutation, got {alpha.space.name}")
    inv = [0] * len(alpha.coords)
    for i, a in enumerate(alpha.coords, start=1):
        inv[a - 1] = i
    return Point(tuple(inv), alpha.space)


def rt_weight_perm(alpha: Point) -> int:
    """Largest point moved by alpha; 0 for the identity."""
    if alpha.space.kind != "sn":
        raise SpaceMismatchError(f"rt_weight_perm needs a permutation, got {alpha.space.name}")
    for i in range(len(alpha.coords), 0, -1):
        if alpha.coords[i - 1] != i:
            return i
    return 0


def rt_distance_perm(alpha: Point, beta: Point) -> int:
    _check_same(alpha, beta, "sn")
    return rt_weight_perm(perm_compose(perm_invert(alpha), beta))


def rt_distance_perm_direct(alpha: Point, beta: Point) -> int:
    """Same value as :func:`rt_distance_perm`, read off the one-line forms."""
    _check_same(alpha, beta, "sn")
    return _max_disagreement(alpha.coords, beta.coords)


def rt_distance(x: Point, y: Point) -> int:
    """RT distance by the defining formula of the point's space."""
    kind = x.space.kind
    if kind == "zq":
        return rt_distance_zq(x, y)
    if kind == "sn":
        return rt_distance_perm(x, y)
    return rt_distance_product(x, y)


# -- enumeration ----------------------------------------------------------------


def check_size(space: SpaceSpec, max_points: int = DEFAULT_MAX_POINTS) -> int:
    size = space.cardinality()
    if size > max_points:
        raise SizeLimitError(space.name, size, max_points)
    return size


def iter_coords(space: SpaceSpec) -> Iterator[tuple[int, ...]]:
    if space.kind == "sn":
        yield from itertools.permutations(range(1, space.n + 1))
        return
    ranges = [range(s) for s in reversed(space.alphabet_sizes())]
    for rev in itertools.product(*ranges):
        yield rev[::-1]


def enumerate_space(space: SpaceSpec, max_points: int = DEFAULT_MAX_POINTS) -> list[Point]:
    """All points of ``space`` in canonical order; the index is the vertex id."""
    check_size(space, max_points)
    return [Point(c, space) for c in iter_coords(space)]


def point_index(point: Point) -> int:
    """Vertex id of ``point`` in the canonical enumeration."""
    s = point.space
    if s.kind == "sn":
        remaining = list(range(1, s.n + 1))
        idx = 0
        for i, a in enumerate(point.coords):
            j = remaining.index(a)
            idx += j * math.factorial(s.n - 1 - i)
            remaining.pop(j)
        return idx
    idx = 0
    for c, size in zip(reversed(point.coords), reversed(s.alphabet_sizes())):
        idx = idx * size + c
    return idx


@lru_cache(maxsize=16)
def _coords_array(space: SpaceSpec) -> np.ndarray:
    return np.array(list(iter_coords(space)), dtype=np.int64).reshape(space.cardinality(), space.n)


def distance_matrix(space: SpaceSpec, max_points: int = DEFAULT_MAX_POINTS) -> np.ndarray:
    """All pairwise RT distances, vertex ids in canonical order.

    Uses the max-disagreement form, which coincides with the defining formula
    on all three families (the test suite checks this pair by pair).
    """
    check_size(space, max_points)
    X = _coords_array(space)
    N = X.shape[0]
    out = np.zeros((N, N), dtype=np.int16)
    for i in range(space.n):
        col = X[:, i]
        out[col[:, None] != col[None, :]] = i + 1
    return out
