import random

import pytest

from ordkit import (
    check_image_bound,
    check_union_bound,
    check_wqo_intersection_bound,
    dim,
    discoloration_trace,
    ew_disjoint,
    ew_union,
    identity_trace,
    intersect_qo,
    mk_qo,
    otp,
    ram_exact,
    ram_exact_entry,
    ram_upper,
    ram_verify,
)
from ordkit.errors import CarrierMismatch, InvalidQuery, SearchBoundExceeded
from ordkit.generators import random_system

from .oracles import has_mono_clique, nats, system


def test_ram_upper_values():
    assert ram_upper((3, 3)) == 6
    for l in range(1, 6):
        assert ram_upper((l,)) == l
        assert ram_upper((l, 2)) == l
        assert ram_upper((2, l)) == l
    assert ram_upper((3, 4)) == 10
    assert ram_upper((3, 3, 3)) == ram_upper((3, ram_upper((3, 3))))


def test_ram_exact_values():
    assert ram_exact((3, 3)) == 6
    for k in range(2, 8):
        assert ram_exact((2, k)) == k
    assert ram_exact((1, 7)) == 1
    assert ram_exact((5,)) == 5
    assert ram_exact((5, 5)) is None
    value, source = ram_exact_entry((4, 4))
    assert value == 18 and source == "literature"


def test_ram_upper_dominates_exact():
    for sizes in [(3, 3), (3, 4), (3, 5), (4, 4), (2, 6), (1, 3), (3, 3, 3)]:
        exact = ram_exact(sizes)
        if exact is not None:
            assert ram_upper(sizes) >= exact


def test_ram_verify_33():
    r5 = ram_verify(3, 3, 5)
    assert not r5.holds_at_n and r5.witness is not None
    colored = {tuple(e): c for e, c in r5.witness}
    assert len(colored) == 10
    assert not has_mono_clique(5, colored, "red", 3)
    assert not has_mono_clique(5, colored, "black", 3)
    assert ram_verify(3, 3, 6).holds_at_n
    # monotone in the vertex count for the verified row
    assert ram_verify(3, 3, 7).holds_at_n


def test_ram_verify_edges():
    assert ram_verify(2, 2, 2).holds_at_n
    assert not ram_verify(2, 2, 1).holds_at_n
    assert ram_verify(1, 9, 1).holds_at_n
    with pytest.raises(SearchBoundExceeded):
        ram_verify(3, 3, 8)
    with pytest.raises(InvalidQuery):
        ram_verify(0, 3, 3)


def test_check_union_bound_fixtures():
    singl_a = system(3, (0,), (1,), (2,))
    singl_b = system(3, (0,), (1,), (2,))
    report = check_union_bound(singl_a, singl_b)
    assert report.holds and report.rhs_kind == "exact"
    assert report.lhs == dim(ew_union(singl_a, singl_b)) + 1 == 3
    assert report.rhs == 6

    l = system(3, (), (0,), (0, 1, 2))
    m = system(3, (), (1,), (0, 1, 2))
    report = check_union_bound(l, m)
    assert report.holds
    assert report.lhs == 4
    assert report.rhs_kind == "upper-bound"
    assert report.detail["literature_value"] == 18

    single = check_union_bound(l)
    assert single.holds and single.rhs == dim(l) + 2


def test_check_image_bound_fixtures():
    fld = nats(3)
    ident = identity_trace(fld)
    for _ in range(20):
        rng = random.Random(101)
        s = random_system(rng, 3, 4)
        report = check_image_bound(ident, s, xi={a: a for a in fld})
        assert report.holds and report.lhs == report.rhs
    a = system(2, (0,), (0, 1))
    b = system(2, (1,))
    dis = ew_disjoint(a, b)
    base = sorted(set(a.support) | set(b.support))
    report = check_image_bound(discoloration_trace(2, base), dis)
    assert report.detail["branching"] == 2
    assert report.holds
    with pytest.raises(InvalidQuery):
        check_image_bound(ident, system(3, (0,)), xi={})


def test_check_wqo_intersection_fixtures():
    for k in range(1, 5):
        u = nats(k)
        chain = mk_qo(u, [(u[i], u[i + 1]) for i in range(k - 1)])
        rev = mk_qo(u, [(u[i + 1], u[i]) for i in range(k - 1)])
        report = check_wqo_intersection_bound(chain, rev)
        assert report.holds
        assert report.lhs == otp(intersect_qo(chain, rev)) == k
    u = nats(3)
    le0 = mk_qo(u, [(u[1], u[2]), (u[2], u[1]), (u[1], u[0]), (u[2], u[0])])
    le1 = mk_qo(u, [(u[0], u[2]), (u[2], u[0]), (u[0], u[1]), (u[2], u[1])])
    report = check_wqo_intersection_bound(le0, le1)
    assert report.holds
    report = check_wqo_intersection_bound(le0, le0)
    assert report.holds and report.lhs == otp(le0)
    with pytest.raises(CarrierMismatch):
        check_wqo_intersection_bound(le0, mk_qo(nats(2)))


def test_invalid_queries():
    with pytest.raises(InvalidQuery):
        ram_upper(())
    with pytest.raises(InvalidQuery):
        ram_upper((0, 3))
