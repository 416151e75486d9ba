import random

from ordkit import find_sdr, leaf, mk_sdr_problem

from .oracles import hall_holds


def blocks_of(*specs):
    return [frozenset(leaf(str(i)) for i in spec) for spec in specs]


def assert_valid(blocks, assignment):
    assert len(assignment) == len(blocks)
    assert len(set(assignment.values())) == len(blocks)
    for b, atom in assignment.items():
        assert atom in blocks[b]


def test_triangle_blocks_have_sdr():
    blocks = blocks_of((1, 2), (2, 3), (3, 1))
    got = find_sdr(blocks)
    assert got is not None
    assert_valid(blocks, got)


def test_disjoint_blocks_always_work():
    blocks = blocks_of((1,), (2, 3), (4,))
    got = find_sdr(mk_sdr_problem(blocks))
    assert got is not None
    assert_valid(blocks, got)


def test_hall_violation_is_none():
    assert find_sdr(blocks_of((1,), (1,))) is None


def test_empty_block_is_none():
    assert find_sdr(blocks_of((1, 2), ())) is None


def test_matches_exhaustive_hall_condition():
    rng = random.Random(5)
    for _ in range(300):
        count = rng.randint(0, 6)
        blocks = [
            frozenset(leaf(str(x)) for x in rng.sample(range(6), rng.randint(0, 3)))
            for _ in range(count)
        ]
        got = find_sdr(blocks)
        assert (got is not None) == hall_holds(blocks)
        if got is not None:
            assert_valid(blocks, got)
