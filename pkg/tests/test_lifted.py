import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from liftedcodes.code import (
    LinearCode, coset_table, cr_vector_oracle, is_completely_regular, min_distance, vector_distances,
)
from liftedcodes.gf import field_make, primitive_element
from liftedcodes.lifted import (
    HammingSpec, HypothesisError, LiftedCode, closed_form_array, covering_radius_formula,
    hamming_length, hamming_parity_matrix, lift, min_weight_check, nesting_check,
    non_hamming_refutation, rm_symmetry_check, shortened_hamming, sumset_identity,
)
from liftedcodes.matq import MatQ, count_rank, rank


def _normalized(col, F):
    lead = next(x for x in col if x)
    inv = F.inv(lead)
    return tuple(F.mul(inv, x) for x in col)


def test_hamming_matrix_q4_m2():
    H = hamming_parity_matrix(4, 2)
    assert H.shape == (2, 5)
    # columns are the projective points of F_4^2, one per line through the origin
    F = H.field
    cols = {_normalized(tuple(int(x) for x in c), F) for c in H.entries.T}
    assert len(cols) == 5


@pytest.mark.parametrize("q,m", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (5, 2)])
def test_hamming_columns_are_projective_points(q, m):
    H = hamming_parity_matrix(q, m)
    F = H.field
    assert H.shape == (m, (q ** m - 1) // (q - 1)) and H.cols == hamming_length(q, m)
    assert rank(H) == m
    # oracle: enumerate all nonzero vectors and keep one representative per line
    points = {_normalized(v, F) for v in itertools.product(range(q), repeat=m) if any(v)}
    cols = [_normalized(tuple(int(x) for x in c), F) for c in H.entries.T]
    assert set(cols) == points and len(cols) == len(points)
    for a, b in itertools.combinations(range(H.cols), 2):
        assert rank(MatQ(F, H.entries[:, [a, b]])) == 2


def test_hamming_is_perfect_distance_three():
    for q, m in [(2, 3), (3, 2), (4, 2)]:
        code = LinearCode(hamming_parity_matrix(q, m))
        assert min_distance(code) == 3
        assert coset_table(code).rho == 1


@pytest.mark.parametrize("q,m,r,size", [(2, 2, 2, 4), (2, 2, 4, 16), (2, 3, 2, 256), (3, 2, 2, 81)])
def test_lift_sizes(q, m, r, size):
    lc = lift(HammingSpec(q, m), r)
    assert lc.code.size == size == lc.field.order ** (lc.n - m)


def test_spec_validation():
    with pytest.raises(ValueError):
        HammingSpec(6, 2)
    with pytest.raises(ValueError):
        HammingSpec(2, 0)
    with pytest.raises(ValueError):
        LiftedCode(HammingSpec(2, 2), 0)


@pytest.mark.parametrize("q,m,r", [(2, 2, 2), (2, 2, 4), (2, 3, 2), (3, 2, 2)])
def test_sumset_identity(q, m, r):
    ok, a, b = sumset_identity(lift(HammingSpec(q, m), r))
    assert ok and a == b


def test_syndrome_matrix_of_weight_one_vector():
    lc = lift(HammingSpec(2, 2), 4)
    F = lc.field
    alpha = primitive_element(F)
    S = lc.syndrome_matrix([alpha, 0, 0]).S
    assert S.shape == (4, 2) and rank(S) == 1
    assert lc.rank_distance([1, alpha, 0]) == 2


def test_rank_distance_one_omega_zero_over_f16():
    lc = lift(HammingSpec(2, 2), 4)
    alpha = primitive_element(lc.field)
    v = [1, alpha, 0]
    brute = min(sum(a != b for a, b in zip(v, w)) for w in lc.code.codewords().tolist())
    assert lc.rank_distance(v) == brute == 2


@pytest.mark.parametrize("q,m,r", [(2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 2, 2), (2, 2, 4)])
def test_rank_distance_equals_exhaustive_distance(q, m, r):
    lc = lift(HammingSpec(q, m), r)
    dist = vector_distances(lc.code)
    Q = lc.field.order
    for key, vec in enumerate(itertools.product(range(Q), repeat=lc.n)):
        v = vec[::-1]  # little-endian key order
        assert lc.rank_distance(v) == dist[key]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 15), min_size=7, max_size=7))
def test_rank_at_most_weight(v):
    lc = lift(HammingSpec(2, 3), 4, verify=False)
    d = lc.rank_distance(v)
    assert d <= sum(1 for x in v if x)
    assert d <= min(lc.r, lc.m)
    word, err = lc.decode(v)
    assert lc.code.contains(word)
    assert sum(1 for x in err if x) == d


CASES = [(2, 2, 2), (2, 2, 3), (2, 2, 4), (2, 3, 2), (2, 3, 3), (2, 4, 2), (3, 2, 2), (3, 2, 3),
         (4, 2, 2), (2, 3, 4), (5, 2, 2)]


@pytest.mark.parametrize("q,m,r", CASES)
def test_closed_form_matches_coset_checker(q, m, r):
    lc = lift(HammingSpec(q, m), r, verify=False)
    verdict = is_completely_regular(lc.code)
    assert verdict.regular
    expected = closed_form_array(q, m, r)
    assert verdict.array == expected
    assert verdict.array.rho == covering_radius_formula(lc.spec, r) == min(r, m)
    assert expected.balance_holds()
    assert expected.sum_rule_holds((q ** r - 1) * lc.n)


@pytest.mark.parametrize("q,m,r", [(2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 2, 2)])
def test_closed_form_matches_vector_oracle(q, m, r):
    lc = lift(HammingSpec(q, m), r)
    oracle = cr_vector_oracle(lc.code)
    assert oracle.regular and oracle.array == closed_form_array(q, m, r)


def test_closed_form_examples():
    arr = closed_form_array(2, 2, 4)
    assert arr.b == (45, 28) and arr.c == (1, 6) and arr.mu == (1, 45, 210)
    arr = closed_form_array(2, 2, 2)
    assert arr.b == (9, 4) and arr.c == (1, 6) and arr.mu == (1, 9, 6)


@pytest.mark.parametrize("q,m,r", [(2, 2, 4), (2, 3, 2), (3, 2, 2), (2, 4, 2)])
def test_mu_is_rank_count(q, m, r):
    table = coset_table(lift(HammingSpec(q, m), r, verify=False).code)
    assert table.mu == tuple(count_rank(q, r, m, i) for i in range(min(r, m) + 1))


def test_decode_examples():
    lc = lift(HammingSpec(2, 2), 4)
    alpha = primitive_element(lc.field)
    word, err = lc.decode([1, alpha, 0])
    assert lc.code.contains(word)
    assert sum(1 for x in err if x) == 2
    F = lc.field
    assert tuple(F.add(a, b) for a, b in zip(word, err)) == (1, alpha, 0)
    word, err = lc.decode([0, 0, 0])
    assert word == (0, 0, 0) and err == (0, 0, 0)


@pytest.mark.parametrize("q,m,r", [(2, 2, 3), (3, 2, 2), (2, 3, 2)])
def test_decode_is_exact_nearest(q, m, r):
    lc = lift(HammingSpec(q, m), r)
    dist = vector_distances(lc.code)
    rng = np.random.default_rng(q * 100 + m * 10 + r)
    keys = rng.integers(0, len(dist), size=300)
    Q = lc.field.order
    for key in keys:
        v = [(int(key) // Q ** j) % Q for j in range(lc.n)]
        word, err = lc.decode(v)
        assert lc.code.contains(word)
        assert sum(1 for x in err if x) == dist[key]


@pytest.mark.parametrize("q,m,r", [(2, 2, 2), (2, 2, 4), (2, 3, 2), (3, 2, 2), (2, 3, 3)])
def test_min_weight_words_come_from_base(q, m, r):
    v = min_weight_check(lift(HammingSpec(q, m), r, verify=False))
    assert v.ok and v.min_weight == 3 and v.counterexample is None
    # each weight-3 base line contributes q^r - 1 multiples
    base = LinearCode(hamming_parity_matrix(q, m))
    base_min = int(((base.codewords() != 0).sum(axis=1) == 3).sum()) // (q - 1)
    assert v.count == base_min * (q ** r - 1)


def test_nesting_c22_into_c24():
    v = nesting_check(2, 2, 2, 2)
    assert v.ok and v.checked == 4 and v.big_checked == 16 and v.exact


@pytest.mark.parametrize("q,m,r,s", [(2, 2, 1, 2), (2, 2, 1, 4), (2, 3, 1, 2), (2, 2, 2, 3), (3, 2, 1, 2)])
def test_nesting_more(q, m, r, s):
    v = nesting_check(q, m, r, s)
    assert v.ok and v.exact


def test_rm_symmetry():
    v = rm_symmetry_check(2, 3, 2)
    assert v.ok
    assert v.forward.b == v.backward.b and v.forward.c == v.backward.c
    assert v.lengths == (7, 3)
    # a_i coincide too, because (q^r - 1)(q^m - 1)/(q - 1) is symmetric in r and m
    assert v.same_a


@pytest.mark.parametrize("q,m,r", [(2, 3, 2), (2, 2, 4), (3, 2, 3), (2, 4, 3)])
def test_rm_symmetry_closed_forms(q, m, r):
    assert rm_symmetry_check(q, m, r).ok


def test_rm_symmetry_measured():
    a = is_completely_regular(lift(HammingSpec(2, 3), 2, verify=False).code).array
    b = is_completely_regular(lift(HammingSpec(2, 2), 3, verify=False).code).array
    assert a.b == b.b and a.c == b.c


def test_refute_shortened_hamming_6_3():
    ref = non_hamming_refutation(shortened_hamming(2, 3), 2)
    assert ref.refuted
    assert ref.base_params == (6, 3, 3) and ref.base_rho == 2
    assert not ref.verdict.regular
    w = ref.witness
    assert w.shape == "covered"
    x, xp = w.vectors
    assert all(v < 2 for v in x) and any(v >= 2 for v in xp)
    assert w.distributions[0] != w.distributions[1]
    assert sum(w.distributions[0]) == sum(w.distributions[1]) == 4 ** 3
    lifted = LinearCode(MatQ(field_make(2, [2]), shortened_hamming(2, 3).entries))
    table = coset_table(lifted)
    assert table.distance(w.syndromes[0]) == table.distance(w.syndromes[1]) == 2


def test_refute_5_2():
    H = shortened_hamming(2, 3, drop=2)
    ref = non_hamming_refutation(H, 2)
    assert ref.base_params[:2] == (5, 2) and ref.base_params[2] == 3
    assert ref.refuted


def test_refute_over_f3():
    H = shortened_hamming(3, 3, drop=7)
    ref = non_hamming_refutation(H, 2)
    assert ref.base_params[0] == 6 and ref.base_params[2] >= 3
    assert ref.refuted and ref.witness.shape == "covered"


def test_length_three_repetition_lift_stays_regular():
    # [3,1,3]_3 is nontrivial, d = 3 and not perfect, but has no codeword of
    # weight >= 4 to cover a weight-2 vector; its lift is the length-3
    # repetition code over F_9, which is completely regular
    H = shortened_hamming(3, 2)
    ref = non_hamming_refutation(H, 2)
    assert ref.base_params == (3, 1, 3) and ref.base_rho == 2
    assert ref.verdict.regular and not ref.refuted
    assert ref.verdict.array.b == (24, 14) and ref.verdict.array.c == (1, 6)
    lifted = LinearCode(MatQ(field_make(3, [2]), H.entries))
    assert cr_vector_oracle(lifted).regular


def test_refute_rejects_hamming_and_small_distance():
    with pytest.raises(HypothesisError):
        non_hamming_refutation(hamming_parity_matrix(2, 3), 2)
    with pytest.raises(HypothesisError):
        non_hamming_refutation(MatQ(field_make(2, [1]), [[1, 1, 1, 0], [0, 0, 1, 1]]), 2)
    with pytest.raises(HypothesisError):
        non_hamming_refutation(shortened_hamming(2, 3), 1)


@pytest.mark.parametrize("seed", range(4))
def test_refutation_invariant_under_monomial_equivalence(seed):
    rng = np.random.default_rng(seed)
    H = shortened_hamming(3, 3, drop=7)
    F = H.field
    perm = rng.permutation(H.cols)
    scale = rng.integers(1, 3, size=H.cols)
    entries = F.mul_table[scale[None, :], H.entries[:, perm]]
    ref = non_hamming_refutation(MatQ(F, entries), 2)
    base = non_hamming_refutation(H, 2)
    assert ref.refuted and base.refuted
    assert ref.base_params == base.base_params and ref.base_rho == base.base_rho
