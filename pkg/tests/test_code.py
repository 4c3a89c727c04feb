import itertools

import numpy as np
import pytest

from liftedcodes.caps import CapExceeded, Caps
from liftedcodes.code import (
    IntersectionArray, LinearCode, all_vectors, code_from_parity, coset_table,
    coset_weight_distribution, covering_radius, cr_vector_oracle, is_completely_regular,
    min_distance, syndrome, vector_distances,
)
from liftedcodes.gf import field_make
from liftedcodes.lifted import hamming_parity_matrix, shortened_hamming
from liftedcodes.matq import MatQ

F2 = field_make(2, [1])
F4 = field_make(2, [2])
F16 = field_make(2, [4])

REP = MatQ(F2, [[1, 0, 1], [0, 1, 1]])
HAM7 = hamming_parity_matrix(2, 3)


def over(H, F):
    return MatQ(F, H.entries)


def brute_distances(code):
    """d(v, C) for every ambient vector, computed with plain Python loops."""
    words = [tuple(w) for w in code.codewords().tolist()]
    # vector keys are little-endian, so the first coordinate varies fastest
    return [min(sum(a != b for a, b in zip(v[::-1], w)) for w in words)
            for v in itertools.product(range(code.Q), repeat=code.n)]


def small_codes():
    yield LinearCode(REP)
    yield LinearCode(MatQ(F2, [[1, 1, 1]]))
    yield LinearCode(HAM7)
    yield LinearCode(shortened_hamming(2, 3))
    yield LinearCode(over(REP, F4))
    yield LinearCode(over(REP, F16))
    yield LinearCode(over(shortened_hamming(2, 3), F4))
    yield LinearCode(MatQ(field_make(3, [1]), [[1, 2, 0, 1], [0, 1, 1, 1]]))


def test_even_weight_code():
    code = code_from_parity(MatQ(F2, [[1, 1, 1]]))
    assert (code.n, code.k) == (3, 2)
    assert sorted(map(tuple, code.codewords().tolist())) == [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]


def test_repetition_code():
    code = code_from_parity(REP)
    assert (code.n, code.k) == (3, 1)
    assert sorted(map(tuple, code.codewords().tolist())) == [(0, 0, 0), (1, 1, 1)]


def test_repetition_over_f16_has_16_words():
    code = code_from_parity(over(REP, F16))
    assert code.size == 16 == len(code.codewords())


def test_rank_deficient_rejected():
    with pytest.raises(ValueError):
        code_from_parity(MatQ(F2, [[1, 1, 0], [1, 1, 0]]))
    with pytest.raises(ValueError):
        code_from_parity(MatQ(F2, [[0, 0, 0]]))


def test_syndrome_linearity():
    code = LinearCode(over(HAM7, F4))
    rng = np.random.default_rng(0)
    F = code.field
    for _ in range(50):
        u, v = rng.integers(0, 4, size=(2, code.n))
        s_sum = syndrome(F.add_table[u, v], code)
        assert s_sum == tuple(F.add(a, b) for a, b in zip(syndrome(u, code), syndrome(v, code)))
    for word in code.codewords()[:20]:
        assert not any(syndrome(word, code))
    for j in range(code.n):
        for g in range(1, 4):
            e = [0] * code.n
            e[j] = g
            assert syndrome(e, code) == tuple(F.mul(g, int(h)) for h in HAM7.entries[:, j])
    with pytest.raises(ValueError):
        syndrome([0, 1], code)


def test_repetition_f16_coset_table():
    table = coset_table(LinearCode(over(REP, F16)))
    assert len(table) == 256
    assert table.mu == (1, 45, 210)
    assert table.rho == 2


def test_hamming_perfect():
    code = LinearCode(HAM7)
    table = coset_table(code)
    assert len(table) == 8 and table.mu == (1, 7)
    assert covering_radius(code) == 1
    assert min_distance(code) == 3


def test_shortened_hamming_covering_radius():
    code = LinearCode(shortened_hamming(2, 3))
    assert (code.n, code.k, min_distance(code)) == (6, 3, 3)
    assert covering_radius(code) == 2


def test_min_distance_examples():
    assert min_distance(LinearCode(REP)) == 3
    assert min_distance(LinearCode(over(REP, F16))) == 3


@pytest.mark.parametrize("code", list(small_codes()), ids=repr)
def test_bfs_distances_equal_exhaustive(code):
    table = coset_table(code, with_distributions=True)
    brute = brute_distances(code)
    syn = code.vector_syndromes()
    assert [table.distance(int(s)) for s in syn] == brute
    assert table.rho == max(brute)
    assert np.array_equal(vector_distances(code), brute)
    assert table.mu[0] == 1
    assert table.distributions.sum() == code.Q ** code.n
    assert (table.distributions.sum(axis=1) == code.size).all()
    # distance = first nonzero entry of the coset's weight distribution
    first = np.argmax(table.distributions > 0, axis=1)
    assert np.array_equal(first, table.distances)


@pytest.mark.parametrize("code", list(small_codes()), ids=repr)
def test_checker_and_vector_oracle_agree(code):
    a = is_completely_regular(code)
    b = cr_vector_oracle(code)
    assert a.regular == b.regular
    if a.regular:
        assert a.array == b.array
        assert a.array.balance_holds()
        assert a.array.sum_rule_holds(code.n * (code.Q - 1))


def test_even_weight_is_completely_regular():
    v = cr_vector_oracle(LinearCode(MatQ(F2, [[1, 1, 1]])))
    assert v.regular and v.array.b == (3,) and v.array.c == (3,)


def test_repetition_over_f4_against_formula():
    v = cr_vector_oracle(LinearCode(over(REP, F4)))
    assert v.regular
    # closed form for q=2, m=2, r=2: b_i = (4-2^i)(4-2^i), c_i = 2^(i-1)(2^i-1)
    assert v.array.b == (9, 4) and v.array.c == (1, 6)


def test_zero_class_has_no_down_neighbours():
    for code in small_codes():
        v = is_completely_regular(code)
        if v.regular:
            assert v.array.a[0] + v.array.b[0] == code.n * (code.Q - 1)


def test_repetition_f16_is_cr_with_known_array():
    v = is_completely_regular(LinearCode(over(REP, F16)))
    assert v.regular
    assert v.array.b == (45, 28) and v.array.c == (1, 6)
    assert v.array.to_dict() == {"rho": 2, "b": [45, 28], "c": [1, 6], "a": [0, 16, 39], "mu": [1, 45, 210]}


def test_hamming_array():
    v = is_completely_regular(LinearCode(HAM7))
    assert v.regular and v.array.b == (7,) and v.array.c == (1,)


def test_non_cr_witness_is_smallest_offending_pair():
    code = LinearCode(over(shortened_hamming(2, 3), F4))
    table = coset_table(code)
    v = is_completely_regular(code, table)
    assert not v.regular
    from liftedcodes import kernels
    down, up = kernels.layer_counts(code.neighbor_table(), table.distances)
    pairs = [(s, t) for s in range(len(table)) for t in range(s + 1, len(table))
             if table.distances[s] == table.distances[t]
             and (down[s], up[s]) != (down[t], up[t])]
    assert v.witness.members == min(pairs)
    s, t = v.witness.members
    assert v.witness.counts == ((down[s], up[s]), (down[t], up[t]))


def test_coset_weight_distribution():
    code = LinearCode(over(shortened_hamming(2, 3), F4))
    zero = coset_weight_distribution(code, 0)
    weights = (code.codewords() != 0).sum(axis=1)
    assert list(zero) == list(np.bincount(weights, minlength=code.n + 1))
    for key in range(0, code.num_cosets, 7):
        assert coset_weight_distribution(code, key).sum() == code.size
    # a member vector and its syndrome key give the same distribution
    rng = np.random.default_rng(5)
    for v in rng.integers(0, 4, size=(30, code.n)):
        by_vec = coset_weight_distribution(code, v)
        assert np.array_equal(by_vec, coset_weight_distribution(code, code.syndrome_key(v)))
    # two weight-2 cosets with different distributions exist
    table = coset_table(code, with_distributions=True)
    rows = {tuple(table.distributions[k]) for k in np.nonzero(table.distances == 2)[0]}
    assert len(rows) > 1


def test_caps_enforced():
    code = LinearCode(over(HAM7, F16), Caps(vectors=1000, coset_steps=10**8))
    with pytest.raises(CapExceeded) as err:
        code.vector_syndromes()
    assert err.value.required == 16 ** 7
    code = LinearCode(over(HAM7, F16), Caps(coset_steps=100))
    with pytest.raises(CapExceeded):
        coset_table(code)
    with pytest.raises(CapExceeded):
        LinearCode(HAM7, Caps(codewords=8)).codewords()


def test_intersection_array_build():
    arr = IntersectionArray.build([45, 28], [1, 6], [1, 45, 210], 45)
    assert arr.a == (0, 16, 39)
    assert arr.balance_holds() and arr.sum_rule_holds(45)
    assert str(arr) == "(45, 28; 1, 6)"
    with pytest.raises(ValueError):
        IntersectionArray.build([1], [1, 2], [1, 1], 3)


def test_all_vectors_order():
    vecs = all_vectors(3, 2)
    assert vecs.tolist()[:4] == [[0, 0], [1, 0], [2, 0], [0, 1]]
