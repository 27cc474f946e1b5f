import itertools
import json
import math

import pytest

from rtdg.errors import NoPreimageError
from rtdg.spaces import DistanceSet, SpaceSpec
from rtdg.verification import (
    recover_distance_set_product,
    recover_distance_set_sn,
    recover_distance_set_zq,
    run_suite,
    verify_chromatic,
    verify_chromatic_by_size,
    verify_component_uniqueness,
    verify_connectivity,
    verify_corollary_suite_product,
    verify_corollary_suite_sn,
    verify_corollary_suite_zq,
    verify_metric_axioms,
    verify_regularity,
    verify_sn_embedding,
    verify_structure_theorem,
)


def subset_degrees_zq(q, n):
    out = {}
    for k in range(n + 1):
        for D in itertools.combinations(range(1, n + 1), k):
            out.setdefault((q - 1) * sum(q ** (d - 1) for d in D), []).append(D)
    return out


def subset_degrees_sn(top):
    out = {}
    for k in range(top):
        for D in itertools.combinations(range(2, top + 1), k):
            out.setdefault(sum((d - 1) * math.factorial(d - 1) for d in D), []).append(D)
    return out


@pytest.mark.parametrize("q, degree, D", [(3, 20, (1, 3)), (2, 0, ()), (2, 3, (1, 2))])
def test_recover_zq_examples(q, degree, D):
    assert recover_distance_set_zq(q, degree).values == D


@pytest.mark.parametrize("degree, D", [(19, (2, 4)), (0, ()), (5, (2, 3))])
def test_recover_sn_examples(degree, D):
    # degree 5 = 1*1! + 2*2!, confirmed unique by the subset oracle below
    assert subset_degrees_sn(8)[degree] == [D]
    assert recover_distance_set_sn(degree).values == D


@pytest.mark.parametrize("q, degree", [(3, 3), (3, 5), (2, -1), (4, 4)])
def test_recover_zq_no_preimage(q, degree):
    assert degree not in subset_degrees_zq(q, 8)
    with pytest.raises(NoPreimageError):
        recover_distance_set_zq(q, degree)


def test_recover_sn_no_preimage():
    reps = subset_degrees_sn(8)
    for degree in range(0, 200):
        if degree in reps:
            assert recover_distance_set_sn(degree).values == reps[degree][0]
        else:
            with pytest.raises(NoPreimageError):
                recover_distance_set_sn(degree)


def test_recover_product_round_trip():
    sizes = (2, 3, 2, 4)
    seen = {}
    for k in range(5):
        for D in itertools.combinations(range(1, 5), k):
            degree = sum((sizes[d - 1] - 1) * math.prod(sizes[: d - 1]) for d in D)
            assert degree not in seen
            seen[degree] = D
            assert recover_distance_set_product(sizes, degree).values == D
    for degree in range(max(seen) + 5):
        if degree not in seen:
            with pytest.raises(NoPreimageError):
                recover_distance_set_product(sizes, degree)


@pytest.mark.parametrize("space, D, expr", [
    (SpaceSpec.zq(2, 4), "2,3", "2*[K_2(2)]^2"),
    (SpaceSpec.sn(4), "2,4", "[3*K_2(1)]^4"),
    (SpaceSpec.product((2, 3, 2)), "1,3", "[3*K_2(1)]^2"),
])
def test_structure_examples(space, D, expr):
    r = verify_structure_theorem(space, DistanceSet.parse(D))
    assert r.status == "verified" and r.evidence["expr"] == expr
    assert sorted(r.evidence["mapping"]) == list(range(space.cardinality()))


def test_structure_inconclusive_on_size_limit():
    from rtdg.config import Limits

    r = verify_structure_theorem(SpaceSpec.zq(2, 8), DistanceSet((1,)), Limits(max_points=100))
    assert r.status == "inconclusive" and "limit" in r.evidence["reason"]


def test_suite_zq_2_3():
    reports = verify_corollary_suite_zq(2, 3)
    assert all(r.status == "verified" for r in reports), [r for r in reports if not r.ok]
    chi = {tuple(r.distances): r.evidence["exact"] for r in reports if r.claim == "chromatic"}
    assert sorted(chi.values()) == [2, 2, 2, 4, 4, 4, 8]
    connected = sorted(tuple(r.distances) for r in reports if r.claim == "connectivity" and r.evidence["connected"])
    assert connected == [(1, 2, 3), (1, 3), (2, 3), (3,)]
    claims = {r.claim for r in reports}
    assert claims == {"regularity", "connectivity", "component-uniqueness", "chromatic", "chromatic-by-size"}


def test_suite_sn_4():
    reports = verify_corollary_suite_sn(4)
    assert all(r.ok for r in reports), [r for r in reports if not r.ok]
    chi = {tuple(r.distances): r.evidence["exact"] for r in reports if r.claim == "chromatic"}
    assert chi[(2, 3)] == 6 and chi[(2, 3, 4)] == 24
    assert sum(r.claim == "embedding" for r in reports) == 7


def test_suite_product():
    reports = verify_corollary_suite_product((2, 3, 2))
    assert all(r.ok for r in reports), [r for r in reports if not r.ok]


def test_component_uniqueness_evidence():
    r = verify_component_uniqueness(SpaceSpec.zq(3, 4), DistanceSet((1, 3)))
    assert r.ok
    assert r.evidence["component_size"] == 27 and r.evidence["degree"] == 20
    assert r.evidence["recovered"] == [1, 3] and r.evidence["invariant_ties"] == []
    assert r.evidence["matches"] == "Z_3^3"


def test_individual_checks():
    space = SpaceSpec.zq(2, 4)
    D = DistanceSet((1, 4))
    assert verify_regularity(space, D).evidence["observed"] == 9
    c = verify_connectivity(space, DistanceSet((2,)))
    assert c.ok and c.evidence["component_count"] == 4 and not c.evidence["connected"]
    chi = verify_chromatic(SpaceSpec.zq(3, 4), DistanceSet((1, 3)))
    assert chi.ok and chi.evidence["exact"] == 9
    by_size = verify_chromatic_by_size(SpaceSpec.zq(2, 4))
    assert by_size.ok and by_size.evidence["chi_by_size"] == {"1": [2], "2": [4], "3": [8], "4": [16]}


def test_chromatic_inconclusive_for_large_components():
    r = verify_chromatic(SpaceSpec.zq(3, 5), DistanceSet((5,)))
    assert r.status == "inconclusive" and r.evidence["formula"] == 3


@pytest.mark.parametrize("space, mode", [
    (SpaceSpec.sn(4), "exhaustive"),
    (SpaceSpec.zq(5, 3), "exhaustive"),
    (SpaceSpec.sn(1), "exhaustive"),
    (SpaceSpec.product((2, 3, 2)), "exhaustive"),
])
def test_metric_axioms(space, mode):
    r = verify_metric_axioms(space)
    assert r.ok and r.evidence["mode"] == mode
    assert r.evidence["triples"] == space.cardinality() ** 3


def test_metric_axioms_sampled_is_seeded():
    a = verify_metric_axioms(SpaceSpec.sn(7), sample_budget=2000, seed=7)
    b = verify_metric_axioms(SpaceSpec.sn(7), sample_budget=2000, seed=7)
    assert a.ok and a.evidence == b.evidence == {"mode": "sampled", "triples": 2000, "seed": 7}


@pytest.mark.parametrize("n, D", [(3, "2,3"), (2, "2"), (1, ""), (4, "2,4"), (5, "2,3,4,5")])
def test_sn_embedding(n, D):
    r = verify_sn_embedding(n, DistanceSet.parse(D))
    assert r.ok


def test_reports_are_sorted_and_serializable():
    reports = run_suite(SpaceSpec.sn(3), ["regularity", "structure", "metric-axioms"])
    keys = [r.sort_key() for r in reports]
    assert keys == sorted(keys)
    for r in reports:
        data = json.loads(r.to_json())
        assert list(data) == ["claim", "space", "distances", "status", "evidence", "seconds"]
        assert data["seconds"] is None
        assert json.loads(r.to_json(timings=True))["seconds"] is not None


def test_parallel_matches_serial():
    serial = run_suite(SpaceSpec.zq(2, 3), ["structure", "regularity"])
    parallel = run_suite(SpaceSpec.zq(2, 3), ["structure", "regularity"], jobs=2)
    assert [r.to_json() for r in serial] == [r.to_json() for r in parallel]
