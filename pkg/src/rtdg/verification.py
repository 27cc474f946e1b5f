"""Machine checks of the structural claims on concrete instances.

Every check returns a :class:`VerificationReport`.  Claim ids are short names
that double as CLI filters:

==================== =========================================================
structure            brute-force G(S, D) is isomorphic to the closed-form expr
regularity           G(S, D) is regular of the closed-form degree
connectivity         connected iff n in D; component count and sizes
component-uniqueness components determine D (size + degree, recovery maps)
chromatic            exact chi equals q^k / d_1...d_k / q_{d_1}...q_{d_k}
chromatic-by-size    chi(D1) == chi(D2) iff |D1| == |D2|  (zq only)
metric-axioms        rho is a metric (and omega is subadditive on S_n)
embedding            S_n -> Z_n^n word encoding embeds G(S_n, D) in G(Z_n^n, D)
==================== =========================================================
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .algebra import expr_chromatic, expr_degree, expr_evaluate, expr_theorem
from .coloring import chromatic_number_exact
from .config import DEFAULT_LIMITS, DEFAULT_SEED, EXHAUSTIVE_TRIPLE_LIMIT, Limits
from .errors import NoPreimageError, RTDGError, SizeLimitError
from .graph import Graph, build_distance_graph, connected_components, is_regular, verify_embedding
from .isomorphism import IsomorphismBudgetExceeded, are_isomorphic
from .spaces import (
    DistanceSet,
    Point,
    SpaceSpec,
    all_distance_sets,
    as_distance_set,
    enumerate_space,
    perm_compose,
    point_index,
    rt_distance,
    rt_weight_perm,
)

VERIFIED = "verified"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"

CLAIMS = (
    "structure",
    "regularity",
    "connectivity",
    "component-uniqueness",
    "chromatic",
    "chromatic-by-size",
    "metric-axioms",
    "embedding",
)
COROLLARY_CLAIMS = ("regularity", "connectivity", "component-uniqueness", "chromatic", "chromatic-by-size", "embedding")


@dataclass
class VerificationReport:
    claim: str
    space: str
    distances: list[int] | None
    status: str
    evidence: dict = field(default_factory=dict)
    seconds: float | None = None

    @property
    def ok(self) -> bool:
        return self.status == VERIFIED

    def sort_key(self):
        return (self.claim, self.space, tuple(self.distances or ()))

    def to_json(self, timings: bool = False) -> str:
        """One JSON line.  Wall time is only filled in with ``timings=True``,
        which keeps default output byte-for-byte reproducible."""
        return json.dumps(
            {
                "claim": self.claim,
                "space": self.space,
                "distances": self.distances,
                "status": self.status,
                "evidence": self.evidence,
                "seconds": round(self.seconds, 6) if timings and self.seconds is not None else None,
            },
            sort_keys=False,
        )


def _report(claim, space, D, status, seconds, **evidence):
    distances = list(D.values) if D is not None else None
    return VerificationReport(claim, str(space), distances, status, evidence, seconds)


@lru_cache(maxsize=48)
def _graph(space: SpaceSpec, D: DistanceSet, max_points: int) -> Graph:
    return build_distance_graph(space, D, max_points)


# -- closed-form values -------------------------------------------------------


def formula_degree(space: SpaceSpec, D) -> int:
    """Degree from the corollary formulas, independent of the expression tree."""
    D = as_distance_set(D)
    if space.kind == "zq":
        return (space.q - 1) * sum(space.q ** (d - 1) for d in D)
    if space.kind == "sn":
        return sum((d - 1) * math.factorial(d - 1) for d in D)
    s = space.sizes
    return sum((s[d - 1] - 1) * math.prod(s[: d - 1]) for d in D)


def formula_chromatic(space: SpaceSpec, D) -> int:
    D = as_distance_set(D)
    if space.kind == "zq":
        return space.q ** len(D) if D.values else 1
    if space.kind == "sn":
        return math.prod(D.values) if D.values else 1
    return math.prod(space.sizes[d - 1] for d in D) if D.values else 1


def formula_components(space: SpaceSpec, D) -> tuple[int, int]:
    """(component count, component size) for nonempty D."""
    dk = as_distance_set(D).values[-1]
    if space.kind == "zq":
        return space.q ** (space.n - dk), space.q**dk
    if space.kind == "sn":
        return math.factorial(space.n) // math.factorial(dk), math.factorial(dk)
    return math.prod(space.sizes[dk:]), math.prod(space.sizes[:dk])


def truncated_space(space: SpaceSpec, m: int) -> SpaceSpec:
    """The same family in ambient dimension m."""
    if space.kind == "zq":
        return SpaceSpec.zq(space.q, m)
    if space.kind == "sn":
        return SpaceSpec.sn(m)
    return SpaceSpec.product(space.sizes[:m])


# -- distance-set recovery ----------------------------------------------------


def recover_distance_set_zq(q: int, degree: int) -> DistanceSet:
    """D with (q-1) * sum_{d in D} q^(d-1) == degree (base-q digits all 0/1)."""
    if q < 2:
        raise ValueError("q must be >= 2")
    if degree < 0 or degree % (q - 1):
        raise NoPreimageError(f"no distance set in Z_{q}^n has degree {degree}")
    rest = degree // (q - 1)
    D = []
    position = 1
    while rest:
        rest, digit = divmod(rest, q)
        if digit > 1:
            raise NoPreimageError(f"no distance set in Z_{q}^n has degree {degree}")
        if digit:
            D.append(position)
        position += 1
    return DistanceSet(tuple(D))


def recover_distance_set_sn(degree: int) -> DistanceSet:
    """D with sum_{d in D} (d-1)(d-1)! == degree, extracted greedily."""
    if degree < 0:
        raise NoPreimageError(f"no distance set in S_n has degree {degree}")

    def term(t):
        return (t - 1) * math.factorial(t - 1)

    t = 2
    while term(t + 1) <= degree:
        t += 1
    rest = degree
    D = []
    while rest and t >= 2:
        if term(t) <= rest:
            rest -= term(t)
            D.append(t)
        t -= 1
    if rest:
        raise NoPreimageError(f"no distance set in S_n has degree {degree}")
    return DistanceSet(tuple(sorted(D)))


def recover_distance_set_product(sizes, degree: int) -> DistanceSet:
    """D with sum_{d in D} (q_d - 1) q_1...q_{d-1} == degree (mixed radix)."""
    if degree < 0:
        raise NoPreimageError(f"no distance set has degree {degree}")
    rest = degree
    D = []
    for position, q in enumerate(sizes, start=1):
        rest, digit = divmod(rest, q)
        if digit == q - 1:
            D.append(position)
        elif digit:
            raise NoPreimageError(f"no distance set over sizes {tuple(sizes)} has degree {degree}")
    if rest:
        raise NoPreimageError(f"no distance set over sizes {tuple(sizes)} has degree {degree}")
    return DistanceSet(tuple(D))


def recover_distance_set(space: SpaceSpec, degree: int) -> DistanceSet:
    if space.kind == "zq":
        return recover_distance_set_zq(space.q, degree)
    if space.kind == "sn":
        return recover_distance_set_sn(degree)
    return recover_distance_set_product(space.sizes, degree)


# -- individual claims ----------------------------------------------------------


def verify_structure_theorem(space: SpaceSpec, D, limits: Limits = DEFAULT_LIMITS) -> VerificationReport:
    D = as_distance_set(D).validate(space)
    t0 = time.perf_counter()
    E = expr_theorem(space, D)
    try:
        G = _graph(space, D, limits.max_points)
        H = expr_evaluate(E, limits.max_points)
        mapping = are_isomorphic(G, H, limits.iso_node_budget, limits.max_iso_vertices)
    except (SizeLimitError, IsomorphismBudgetExceeded) as exc:
        return _report("structure", space, D, INCONCLUSIVE, time.perf_counter() - t0, expr=str(E), reason=str(exc))
    seconds = time.perf_counter() - t0
    if mapping is None:
        return _report(
            "structure", space, D, REFUTED, seconds, expr=str(E),
            reason="no isomorphism exists",
            graph_invariants=[G.vertex_count, G.edge_count], expr_invariants=[H.vertex_count, H.edge_count],
        )
    return _report("structure", space, D, VERIFIED, seconds, expr=str(E), mapping=mapping)


def verify_regularity(space: SpaceSpec, D, limits: Limits = DEFAULT_LIMITS) -> VerificationReport:
    D = as_distance_set(D).validate(space)
    t0 = time.perf_counter()
    try:
        G = _graph(space, D, limits.max_points)
    except SizeLimitError as exc:
        return _report("regularity", space, D, INCONCLUSIVE, time.perf_counter() - t0, reason=str(exc))
    expected = formula_degree(space, D)
    symbolic = expr_degree(expr_theorem(space, D))
    observed = is_regular(G)
    seconds = time.perf_counter() - t0
    evidence = dict(formula=expected, expr=symbolic, observed=observed)
    if observed == expected == symbolic:
        return _report("regularity", space, D, VERIFIED, seconds, **evidence)
    if observed is None:
        degrees = [G.degree(v) for v in range(G.vertex_count)]
        u, v = degrees.index(min(degrees)), degrees.index(max(degrees))
        evidence["counterexample"] = {"vertices": [u, v], "degrees": [degrees[u], degrees[v]]}
    return _report("regularity", space, D, REFUTED, seconds, **evidence)


def verify_connectivity(space: SpaceSpec, D, limits: Limits = DEFAULT_LIMITS) -> VerificationReport:
    D = as_distance_set(D).validate(space)
    t0 = time.perf_counter()
    try:
        G = _graph(space, D, limits.max_points)
    except SizeLimitError as exc:
        return _report("connectivity", space, D, INCONCLUSIVE, time.perf_counter() - t0, reason=str(exc))
    parts = connected_components(G)
    count, size = formula_components(space, D)
    connected = parts.component_count == 1
    predicted = space.n in D
    ok = connected == predicted and parts.component_count == count and set(parts.component_sizes) == {size}
    return _report(
        "connectivity", space, D, VERIFIED if ok else REFUTED, time.perf_counter() - t0,
        connected=connected, n_in_D=predicted,
        component_count=parts.component_count, expected_count=count,
        component_sizes=sorted(set(parts.component_sizes)), expected_size=size,
    )


def verify_chromatic(space: SpaceSpec, D, limits: Limits = DEFAULT_LIMITS) -> VerificationReport:
    D = as_distance_set(D).validate(space)
    t0 = time.perf_counter()
    expected = formula_chromatic(space, D)
    symbolic = expr_chromatic(expr_theorem(space, D))
    try:
        G = _graph(space, D, limits.max_points)
        result = chromatic_number_exact(G, limits.coloring_node_budget, limits.max_coloring_component)
    except SizeLimitError as exc:
        return _report(
            "chromatic", space, D, INCONCLUSIVE, time.perf_counter() - t0,
            formula=expected, expr=symbolic, reason=str(exc),
        )
    seconds = time.perf_counter() - t0
    evidence = dict(formula=expected, expr=symbolic, lower=result.lower, upper=result.upper)
    if not result.exact:
        if not result.lower <= expected <= result.upper or symbolic != expected:
            return _report("chromatic", space, D, REFUTED, seconds, **evidence)
        evidence["reason"] = "coloring budget exhausted"
        return _report("chromatic", space, D, INCONCLUSIVE, seconds, **evidence)
    evidence["exact"] = result.upper
    evidence["coloring"] = list(result.coloring.colors)
    ok = result.upper == expected == symbolic
    return _report("chromatic", space, D, VERIFIED if ok else REFUTED, seconds, **evidence)


def verify_chromatic_by_size(space: SpaceSpec, limits: Limits = DEFAULT_LIMITS) -> VerificationReport:
    """chi(G(Z_q^n, D1)) == chi(G(Z_q^n, D2)) iff |D1| == |D2|, from exact solves."""
    t0 = time.perf_counter()
    values = {}
    for D in all_distance_sets(space):
        report = verify_chromatic(space, D, limits)
        if report.status != VERIFIED:
            return _report(
                "chromatic-by-size", space, None, report.status, time.perf_counter() - t0,
                reason=f"chromatic check for D={D} was {report.status}",
            )
        values[D] = report.evidence["exact"]
    for D1, D2 in itertools.combinations(values, 2):
        if (values[D1] == values[D2]) != (len(D1) == len(D2)):
            return _report(
                "chromatic-by-size", space, None, REFUTED, time.perf_counter() - t0,
                counterexample={"D1": list(D1.values), "D2": list(D2.values), "chi": [values[D1], values[D2]]},
            )
    by_size = {}
    for D, chi in values.items():
        by_size.setdefault(len(D), set()).add(chi)
    table = {str(k): sorted(v) for k, v in sorted(by_size.items())}
    return _report("chromatic-by-size", space, None, VERIFIED, time.perf_counter() - t0, chi_by_size=table)


def _component_invariants(space, D, limits):
    G = _graph(space, D, limits.max_points)
    parts = connected_components(G)
    first = parts.members()[0]
    return G, (len(first), G.degree(first[0])), first


def verify_component_uniqueness(space: SpaceSpec, D, limits: Limits = DEFAULT_LIMITS) -> VerificationReport:
    """Components of G(S, D) pin down D.

    * a component of G(S, D) is isomorphic to the whole of G(S', D) where
      S' is the same family in dimension d_k (same D, other dimension);
    * (component size, degree) of D differs from that of every other D' in
      dist(S), which covers every smaller dimension as well; a tie would be
      settled by a full isomorphism test;
    * the recovery map turns the degree back into D.
    """
    D = as_distance_set(D).validate(space)
    if not D.values:
        raise RTDGError("component-uniqueness needs a nonempty distance set")
    t0 = time.perf_counter()
    try:
        G, inv, members = _component_invariants(space, D, limits)
        component = G.subgraph(members)
        small = truncated_space(space, D.values[-1])
        mapping = are_isomorphic(component, _graph(small, D, limits.max_points),
                                 limits.iso_node_budget, limits.max_iso_vertices)
        if mapping is None:
            return _report(
                "component-uniqueness", space, D, REFUTED, time.perf_counter() - t0,
                reason=f"component is not isomorphic to G({small.name}, D)",
            )
        ties = []
        for other in all_distance_sets(space):
            if other == D:
                continue
            G2, inv2, members2 = _component_invariants(space, other, limits)
            if inv2 == inv:
                if are_isomorphic(component, G2.subgraph(members2), limits.iso_node_budget,
                                  limits.max_iso_vertices) is not None:
                    return _report(
                        "component-uniqueness", space, D, REFUTED, time.perf_counter() - t0,
                        counterexample={"D1": list(D.values), "D2": list(other.values)},
                    )
                ties.append(list(other.values))
        recovered = recover_distance_set(space, inv[1])
    except (SizeLimitError, IsomorphismBudgetExceeded) as exc:
        return _report("component-uniqueness", space, D, INCONCLUSIVE, time.perf_counter() - t0, reason=str(exc))
    except NoPreimageError as exc:
        return _report("component-uniqueness", space, D, REFUTED, time.perf_counter() - t0, reason=str(exc))
    status = VERIFIED if recovered == D else REFUTED
    return _report(
        "component-uniqueness", space, D, status, time.perf_counter() - t0,
        component_size=inv[0], degree=inv[1], recovered=list(recovered.values),
        invariant_ties=ties, matches=small.name,
    )


def _random_point(space: SpaceSpec, rng: random.Random) -> Point:
    if space.kind == "sn":
        coords = list(range(1, space.n + 1))
        rng.shuffle(coords)
        return Point(tuple(coords), space)
    return Point(tuple(rng.randrange(s) for s in space.alphabet_sizes()), space)


def verify_metric_axioms(
    space: SpaceSpec, sample_budget: int = 100_000, seed: int = DEFAULT_SEED, limits: Limits = DEFAULT_LIMITS
) -> VerificationReport:
    """Symmetry, identity of indiscernibles and the triangle inequality.

    Exhaustive over all triples when |X|^3 <= 10^7, otherwise ``sample_budget``
    random triples drawn with ``seed``.  On S_n the weight subadditivity
    omega(ab) <= omega(a) + omega(b) is checked over the same pairs.
    """
    t0 = time.perf_counter()
    N = space.cardinality()
    if N**3 <= EXHAUSTIVE_TRIPLE_LIMIT and N <= limits.max_points:
        points = enumerate_space(space, limits.max_points)
        dist = np.zeros((N, N), dtype=np.int64)
        for i, x in enumerate(points):
            for j, y in enumerate(points):
                dist[i, j] = rt_distance(x, y)
        violation = _exhaustive_violation(points, dist)
        evidence = dict(mode="exhaustive", triples=N**3)
    else:
        rng = random.Random(seed)
        violation = None
        for _ in range(sample_budget):
            x, y, z = (_random_point(space, rng) for _ in range(3))
            violation = _triple_violation(x, y, z)
            if violation:
                break
        evidence = dict(mode="sampled", triples=sample_budget, seed=seed)
    seconds = time.perf_counter() - t0
    if violation:
        evidence["counterexample"] = violation
        return _report("metric-axioms", space, None, REFUTED, seconds, **evidence)
    return _report("metric-axioms", space, None, VERIFIED, seconds, **evidence)


def _triple_violation(x, y, z):
    dxy, dyx, dyz, dxz = rt_distance(x, y), rt_distance(y, x), rt_distance(y, z), rt_distance(x, z)
    coords = [list(p.coords) for p in (x, y, z)]
    if dxy != dyx:
        return {"axiom": "symmetry", "points": coords[:2]}
    if dxy < 0 or (dxy == 0) != (x == y):
        return {"axiom": "identity", "points": coords[:2]}
    if dxz > dxy + dyz:
        return {"axiom": "triangle", "points": coords}
    if x.space.kind == "sn" and rt_weight_perm(perm_compose(x, y)) > rt_weight_perm(x) + rt_weight_perm(y):
        return {"axiom": "weight-subadditivity", "points": coords[:2]}
    return None


def _exhaustive_violation(points, dist):
    N = len(points)
    if not np.array_equal(dist, dist.T):
        i, j = map(int, np.argwhere(dist != dist.T)[0])
        return {"axiom": "symmetry", "points": [list(points[i].coords), list(points[j].coords)]}
    off = ~np.eye(N, dtype=bool)
    if np.any(np.diag(dist) != 0) or np.any(dist[off] <= 0):
        i, j = map(int, np.argwhere((dist <= 0) & off | (np.eye(N, dtype=bool) & (dist != 0)))[0])
        return {"axiom": "identity", "points": [list(points[i].coords), list(points[j].coords)]}
    for y in range(N):
        bad = dist > dist[:, y][:, None] + dist[y, :][None, :]
        if bad.any():
            x, z = map(int, np.argwhere(bad)[0])
            return {"axiom": "triangle", "points": [list(points[k].coords) for k in (x, y, z)]}
    if points and points[0].space.kind == "sn":
        weights = [rt_weight_perm(p) for p in points]
        for i, a in enumerate(points):
            for j, b in enumerate(points):
                if rt_weight_perm(perm_compose(a, b)) > weights[i] + weights[j]:
                    return {"axiom": "weight-subadditivity", "points": [list(a.coords), list(b.coords)]}
    return None


def word_encoding(alpha: Point) -> Point:
    """alpha -> (alpha(1)-1, ..., alpha(n)-1) in Z_n^n."""
    n = alpha.space.n
    return Point(tuple(a - 1 for a in alpha.coords), SpaceSpec.zq(max(n, 2), n))


@lru_cache(maxsize=4)
def _encoding_distances(n: int, max_points: int):
    """Compare rho(a, b) with the RT distance of the encoded words, pair by pair.

    Returns (first mismatch or None, matrix of word distances indexed like
    the canonical enumeration of S_n).
    """
    points = enumerate_space(SpaceSpec.sn(n), max_points)
    images = [word_encoding(p) for p in points]
    if len({point_index(w) for w in images}) != len(images):
        return {"reason": "encoding is not injective"}, None
    dist = np.zeros((len(points), len(points)), dtype=np.int16)
    for i, j in itertools.combinations(range(len(points)), 2):
        d = rt_distance(images[i], images[j])
        if rt_distance(points[i], points[j]) != d:
            return {"points": [list(points[i].coords), list(points[j].coords)]}, None
        dist[i, j] = dist[j, i] = d
    return None, dist


def verify_sn_embedding(n: int, D, limits: Limits = DEFAULT_LIMITS) -> VerificationReport:
    """G(S_n, D) is a subgraph of G(Z_n^n, D) under the word encoding.

    Checks pointwise equality of RT distances and that every edge maps to an
    edge.  Only the subgraph of G(Z_n^n, D) induced on the n! image words is
    built, since the full target has n^n vertices.  For n = 1 the target
    Z_1^1 is degenerate; Z_2^1 is used instead, which changes nothing since
    S_1 has no edges.
    """
    space = SpaceSpec.sn(n)
    D = as_distance_set(D).validate(space)
    t0 = time.perf_counter()
    target = SpaceSpec.zq(max(n, 2), n)
    try:
        G = _graph(space, D, limits.max_points)
    except SizeLimitError as exc:
        return _report("embedding", space, D, INCONCLUSIVE, time.perf_counter() - t0, reason=str(exc))
    mismatch, image_dist = _encoding_distances(n, limits.max_points)
    if mismatch is not None:
        return _report("embedding", space, D, REFUTED, time.perf_counter() - t0, counterexample=mismatch)
    adj = np.isin(image_dist, np.array(D.values, dtype=image_dist.dtype))
    # vertex i of H is the word encoding of vertex i of G
    H = Graph.from_adjacency_matrix(adj)
    ok = verify_embedding(G, H, list(range(G.vertex_count)))
    return _report(
        "embedding", space, D, VERIFIED if ok else REFUTED, time.perf_counter() - t0,
        target=str(target), edges=G.edge_count, induced_target_edges=H.edge_count,
    )


# -- suites -----------------------------------------------------------------------


def _run_task(task):
    claim, space, D, limits, seed, sample_budget = task
    if claim == "structure":
        return verify_structure_theorem(space, D, limits)
    if claim == "regularity":
        return verify_regularity(space, D, limits)
    if claim == "connectivity":
        return verify_connectivity(space, D, limits)
    if claim == "component-uniqueness":
        return verify_component_uniqueness(space, D, limits)
    if claim == "chromatic":
        return verify_chromatic(space, D, limits)
    if claim == "chromatic-by-size":
        return verify_chromatic_by_size(space, limits)
    if claim == "metric-axioms":
        return verify_metric_axioms(space, sample_budget, seed, limits)
    if claim == "embedding":
        return verify_sn_embedding(space.n, D, limits)
    raise ValueError(f"unknown claim {claim!r}")


def plan_tasks(space: SpaceSpec, claims, distance_sets=None, limits=DEFAULT_LIMITS, seed=DEFAULT_SEED,
               sample_budget=100_000):
    """(claim, space, D, ...) tuples; claims that do not apply to the space are skipped."""
    if distance_sets is None:
        distance_sets = all_distance_sets(space)
    tasks = []
    for claim in claims:
        if claim not in CLAIMS:
            raise ValueError(f"unknown claim {claim!r}; choose from {', '.join(CLAIMS)}")
        if claim == "metric-axioms":
            tasks.append((claim, space, None, limits, seed, sample_budget))
        elif claim == "chromatic-by-size":
            if space.kind == "zq":
                tasks.append((claim, space, None, limits, seed, sample_budget))
        elif claim == "embedding":
            if space.kind == "sn":
                tasks.extend((claim, space, D, limits, seed, sample_budget) for D in distance_sets)
        else:
            tasks.extend((claim, space, D, limits, seed, sample_budget) for D in distance_sets if D.values)
    return tasks


def run_tasks(tasks, jobs: int = 1) -> list[VerificationReport]:
    """Run tasks and return reports sorted by claim, space, distances."""
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_task, tasks))
    else:
        reports = [_run_task(t) for t in tasks]
    return sorted(reports, key=VerificationReport.sort_key)


def run_suite(space: SpaceSpec, claims=CLAIMS, distance_sets=None, limits=DEFAULT_LIMITS, seed=DEFAULT_SEED,
              jobs=1, sample_budget=100_000) -> list[VerificationReport]:
    return run_tasks(plan_tasks(space, claims, distance_sets, limits, seed, sample_budget), jobs)


def verify_corollary_suite_zq(q: int, n: int, limits: Limits = DEFAULT_LIMITS, jobs: int = 1):
    return run_suite(SpaceSpec.zq(q, n), COROLLARY_CLAIMS, limits=limits, jobs=jobs)


def verify_corollary_suite_sn(n: int, limits: Limits = DEFAULT_LIMITS, jobs: int = 1):
    return run_suite(SpaceSpec.sn(n), COROLLARY_CLAIMS, limits=limits, jobs=jobs)


def verify_corollary_suite_product(sizes, limits: Limits = DEFAULT_LIMITS, jobs: int = 1):
    return run_suite(SpaceSpec.product(sizes), COROLLARY_CLAIMS, limits=limits, jobs=jobs)
