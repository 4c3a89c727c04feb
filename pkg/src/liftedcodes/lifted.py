"""Hamming codes over F_q read over F_{q^r}: distance by syndrome rank, closed forms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .caps import Caps, default_caps
from .code import (
    CRVerdict, IntersectionArray, LinearCode, coset_table,
    coset_weight_distribution, is_completely_regular, min_distance,
)
from .gf import Field, field_make, make_extension, prime_power, primitive_element, subfield_embedding
from .matq import MatQ, count_rank, count_rank_one_freedom, rank, rank_factorization


def ground_field(q: int, caps: Caps | None = None) -> Field:
    p, e = prime_power(q)
    return field_make(p, [e], caps)


def hamming_length(q: int, m: int) -> int:
    return (q ** m - 1) // (q - 1)


def _hamming_columns(q: int, m: int) -> list[tuple[int, ...]]:
    if m == 1:
        return [(1,)]
    prev = _hamming_columns(q, m - 1)
    cols = [(1,) + (0,) * (m - 1)]
    for xi in range(q):
        cols.extend((xi,) + c for c in prev)
    return cols


def hamming_parity_matrix(q: int, m: int, caps: Caps | None = None) -> MatQ:
    """H_{m,q} from the block recursion, field elements in canonical order."""
    if m < 1:
        raise ValueError("m must be at least 1")
    F = ground_field(q, caps)
    cols = _hamming_columns(q, m)
    return MatQ(F, np.array(cols, dtype=np.int64).T.reshape(m, len(cols)))


@dataclass(frozen=True)
class HammingSpec:
    q: int
    m: int

    def __post_init__(self):
        prime_power(self.q)
        if self.m < 1:
            raise ValueError("m must be at least 1")

    @property
    def field(self) -> Field:
        return ground_field(self.q)

    @property
    def n(self) -> int:
        return hamming_length(self.q, self.m)

    @property
    def H(self) -> MatQ:
        return hamming_parity_matrix(self.q, self.m)


def lift_matrix(H: MatQ, ambient: Field) -> MatQ:
    """Read a matrix over F_q as one over an extension (same integer encoding)."""
    if ambient != H.field and ambient.base != H.field:
        raise ValueError("ambient field must be H's field or an extension of it")
    return MatQ(ambient, H.entries)


@dataclass(frozen=True)
class SyndromeMatrix:
    """r x m matrix over F_q whose column j is the coordinates of syndrome entry j."""

    S: MatQ

    @property
    def rank(self) -> int:
        return rank(self.S)


class LiftedCode:
    """C_{(m,r)}: the q-ary Hamming code's parity-check matrix over F_{q^r}."""

    def __init__(self, spec: HammingSpec, r: int, caps: Caps | None = None):
        if r < 1:
            raise ValueError("r must be at least 1")
        self.spec = spec
        self.r = r
        self.caps = caps or default_caps()
        self.ground = spec.field
        self.field = make_extension(self.ground, r, self.caps)
        self.base_H = spec.H
        self.H = lift_matrix(self.base_H, self.field)
        self.code = LinearCode(self.H, self.caps)

    @property
    def q(self) -> int:
        return self.spec.q

    @property
    def m(self) -> int:
        return self.spec.m

    @property
    def n(self) -> int:
        return self.spec.n

    def __repr__(self) -> str:
        return f"LiftedCode(q={self.q}, m={self.m}, r={self.r}, n={self.n})"

    def coords(self, x: int) -> tuple[int, ...]:
        """Coordinates of an ambient element over the ground field."""
        if self.r == 1:
            return (int(x),)
        return self.field.coords(x)

    def from_coords(self, v) -> int:
        if self.r == 1:
            return int(v[0])
        return self.field.from_coords(v)

    def syndrome_matrix(self, v) -> SyndromeMatrix:
        s = self.code.syndrome(v)
        cols = [self.coords(x) for x in s]
        grid = np.array(cols, dtype=np.int64).T.reshape(self.r, self.m)
        return SyndromeMatrix(MatQ(self.ground, grid))

    def rank_distance(self, v) -> int:
        return self.syndrome_matrix(v).rank

    @cached_property
    def _projective_index(self) -> dict[tuple[int, ...], tuple[int, int]]:
        F = self.ground
        out = {}
        for j, col in enumerate(self.base_H.entries.T):
            norm, lead = _normalize_over(F, col)
            out[norm] = (j, lead)
        return out

    def decode(self, v) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Nearest codeword and error of weight rank(S_v), from a rank factorisation."""
        v = self.code._vec(v)
        F = self.ground
        U, V = rank_factorization(self.syndrome_matrix(v).S)
        err = [0] * self.n
        for i in range(V.rows):
            norm, lead = _normalize_over(F, V.entries[i])
            j, scale = self._projective_index[norm]
            lam = F.div(lead, scale)
            coords = F.mul_table[lam, U.entries[:, i]]
            err[j] = self.from_coords(coords)
        neg = self.field.neg_table
        word = self.field.add_table[v, neg[np.array(err, dtype=np.int64)]]
        return tuple(int(x) for x in word), tuple(err)


def _normalize_over(F: Field, col) -> tuple[tuple[int, ...], int]:
    """(col scaled so its first nonzero entry is 1, that entry)."""
    col = [int(x) for x in col]
    lead = next(x for x in col if x)
    inv = F.inv(lead)
    return tuple(F.mul(inv, x) for x in col), lead


def lift(spec: HammingSpec, r: int, caps: Caps | None = None, verify: bool = True) -> LiftedCode:
    """Build C_{(m,r)}; with ``verify`` also checks size and, within caps, the sumset identity."""
    lc = LiftedCode(spec, r, caps)
    expected = (lc.field.order) ** (spec.n - spec.m)
    if lc.code.size != expected:
        raise AssertionError(f"lifted code has {lc.code.size} words, expected {expected}")
    if verify and lc.code.size <= lc.caps.codewords:
        ok, _, _ = sumset_identity(lc)
        if not ok:
            raise AssertionError("lifted code differs from C + aC + ... + a^(r-1)C")
    return lc


def _keys(rows: np.ndarray, Q: int) -> np.ndarray:
    return rows @ (Q ** np.arange(rows.shape[1], dtype=np.int64))


def sumset_identity(lc: LiftedCode) -> tuple[bool, int, int]:
    """Compare C_r with C + aC + ... + a^(r-1)C; returns (equal, |sumset|, |C_r|)."""
    F = lc.field
    base = LinearCode(lc.base_H, lc.caps).codewords()
    steps = lc.code.size * len(base)
    lc.caps.check("coset_steps", steps, "sumset construction")
    alpha = primitive_element(F)
    total = base
    power = 1
    for _ in range(1, lc.r):
        power = F.mul(power, alpha)
        scaled = F.mul_table[power, base]
        total = F.add_table[total[:, None, :], scaled[None, :, :]].reshape(-1, lc.n)
        total = np.unique(total, axis=0)
    lifted = lc.code.codewords()
    sumset_keys = set(_keys(total, F.order).tolist())
    lifted_keys = set(_keys(lifted, F.order).tolist())
    return sumset_keys == lifted_keys, len(sumset_keys), len(lifted_keys)


def covering_radius_formula(spec: HammingSpec, r: int) -> int:
    return min(r, spec.m)


def closed_form_array(q: int, m: int, r: int) -> IntersectionArray:
    rho = min(r, m)
    n = hamming_length(q, m)
    b = [count_rank_one_freedom(q, r, m, i + 1) for i in range(rho)]
    c = [q ** (i - 1) * (q ** i - 1) // (q - 1) for i in range(1, rho + 1)]
    mu = [count_rank(q, r, m, i) for i in range(rho + 1)]
    return IntersectionArray.build(b, c, mu, (q ** r - 1) * n)


@dataclass(frozen=True)
class MinWeightVerdict:
    ok: bool
    min_weight: int
    count: int
    counterexample: tuple[int, ...] | None = None


def min_weight_check(lc: LiftedCode) -> MinWeightVerdict:
    """Minimum weight 3, and each weight-3 word is beta times a base weight-3 word."""
    words = lc.code.codewords()
    weights = (words != 0).sum(axis=1)
    d = int(weights[weights > 0].min())
    base = LinearCode(lc.base_H, lc.caps)
    F = lc.field
    minimal = words[weights == d]
    for w in minimal:
        lead = int(w[np.nonzero(w)[0][0]])
        scaled = F.mul_table[F.inv(lead), w]
        in_base = bool((scaled < lc.q).all()) and base.contains(scaled)
        if not in_base:
            return MinWeightVerdict(False, d, len(minimal), tuple(int(x) for x in w))
    return MinWeightVerdict(d == 3, d, len(minimal), None)


@dataclass(frozen=True)
class NestingVerdict:
    """``checked`` small-code words were embedded; ``big_checked`` big-code words scanned.

    ``exact`` records that the image is precisely the set of big-code words
    whose entries all lie in the embedded subfield.
    """

    ok: bool
    checked: int
    big_checked: int = 0
    exact: bool = False
    witness: tuple[int, ...] | None = None


def nesting_check(q: int, m: int, r: int, s: int, caps: Caps | None = None) -> NestingVerdict:
    """Embed C_{(m,r)} coordinatewise into F_{q^{sr}} and test membership in C_{(m,sr)}."""
    spec = HammingSpec(q, m)
    small = LiftedCode(spec, r, caps)
    big = LiftedCode(spec, s * r, caps)
    phi = subfield_embedding(big.field, r, caps)
    if phi.small != small.field:
        raise AssertionError("embedding source differs from the small lift's field")
    words = small.code.codewords()
    images = phi.map_array(words)
    for image in images:
        if not big.code.contains(image):
            return NestingVerdict(False, len(words), witness=tuple(int(x) for x in image))
    big_words = big.code.codewords()
    subfield = np.zeros(big.field.order, dtype=bool)
    subfield[phi.table] = True
    inside = big_words[subfield[big_words].all(axis=1)]
    Q = big.field.order
    exact = set(_keys(inside, Q).tolist()) == set(_keys(images, Q).tolist())
    return NestingVerdict(True, len(words), len(big_words), exact)


@dataclass(frozen=True)
class SymmetryVerdict:
    ok: bool
    forward: IntersectionArray
    backward: IntersectionArray
    lengths: tuple[int, int]

    @property
    def same_a(self) -> bool:
        # (q^r - 1) n is symmetric in r and m, so a_i always agree as well
        return self.forward.a == self.backward.a


def rm_symmetry_check(q: int, m: int, r: int) -> SymmetryVerdict:
    """C_{(m,r)} and C_{(r,m)} share b_i and c_i."""
    fwd = closed_form_array(q, m, r)
    bwd = closed_form_array(q, r, m)
    same_bc = fwd.b == bwd.b and fwd.c == bwd.c
    return SymmetryVerdict(same_bc, fwd, bwd, (hamming_length(q, m), hamming_length(q, r)))


class HypothesisError(ValueError):
    """The input code is trivial, has d < 3, or is perfect."""


@dataclass(frozen=True)
class CosetWitness:
    """Two distance-2 cosets of the lift with different weight distributions."""

    shape: str  # "covered" when the first vector lies over F_q inside a heavier codeword and the second mixes in F_{q^r}
    vectors: tuple[tuple[int, ...], tuple[int, ...]]
    syndromes: tuple[int, int]
    distributions: tuple[tuple[int, ...], tuple[int, ...]]
    cover: tuple[int, ...] | None = None


@dataclass(frozen=True)
class Refutation:
    verdict: CRVerdict
    witness: CosetWitness | None
    base_params: tuple[int, int, int]
    base_rho: int

    @property
    def refuted(self) -> bool:
        return not self.verdict.regular and self.witness is not None


def check_nonhamming_hypotheses(base: LinearCode) -> tuple[int, int]:
    """Return (d, rho) or raise HypothesisError."""
    q, n = base.Q, base.n
    if not 1 < base.size < q ** (n - 1):
        raise HypothesisError(f"code is trivial: |C| = {base.size}, need 1 < |C| < q^(n-1)")
    d = min_distance(base)
    if d < 3:
        raise HypothesisError(f"minimum distance {d} < 3")
    rho = coset_table(base).rho
    if rho == (d - 1) // 2:
        raise HypothesisError(f"code is perfect (rho = e = {rho}); lifting it gives a CR code")
    return d, rho


def non_hamming_refutation(H_base: MatQ, r: int, caps: Caps | None = None) -> Refutation:
    """Lift a non-perfect code and exhibit two distance-2 cosets that differ."""
    caps = caps or default_caps()
    if r < 2:
        raise HypothesisError("lifting needs r >= 2")
    if H_base.field.base is not None and H_base.field.base.base is not None:
        raise ValueError("ground field must be a prime field or a single extension")
    base = LinearCode(H_base, caps)
    d, rho = check_nonhamming_hypotheses(base)
    ambient = make_extension(H_base.field, r, caps)
    lifted = LinearCode(lift_matrix(H_base, ambient), caps)
    table = coset_table(lifted)
    verdict = is_completely_regular(lifted, table)
    witness = _covered_witness(base, lifted, table) or _generic_witness(lifted, table)
    return Refutation(verdict, witness, (base.n, base.k, d), rho)


def _distribution(code: LinearCode, vec) -> tuple[int, tuple[int, ...]]:
    key = code.syndrome_key(vec)
    return key, tuple(int(x) for x in coset_weight_distribution(code, vec))


def _covered_witness(base: LinearCode, lifted: LinearCode, table) -> CosetWitness | None:
    # weight-2 x over F_q covered by a codeword of weight >= 4, versus x with one
    # entry replaced by an element outside F_q
    alpha = primitive_element(lifted.field)
    n = base.n
    for word in base.codewords():
        support = [int(j) for j in np.nonzero(word)[0]]
        if len(support) < 4:
            continue
        for a in range(len(support)):
            for b in range(a + 1, len(support)):
                i, j = support[a], support[b]
                x = [0] * n
                x[i], x[j] = int(word[i]), int(word[j])
                xp = list(x)
                xp[j] = alpha
                kx, dx = _distribution(lifted, x)
                kp, dp = _distribution(lifted, xp)
                if table.distance(kx) == 2 and table.distance(kp) == 2 and dx != dp:
                    return CosetWitness("covered", (tuple(x), tuple(xp)), (kx, kp), (dx, dp),
                                        tuple(int(v) for v in word))
    return None


def _generic_witness(lifted: LinearCode, table) -> CosetWitness | None:
    keys = np.nonzero(table.distances == 2)[0]
    seen: dict[tuple[int, ...], int] = {}
    for key in keys:
        dist = tuple(int(x) for x in coset_weight_distribution(lifted, int(key)))
        if seen and dist not in seen:
            first_dist, first_key = next(iter(seen.items()))
            return CosetWitness("generic", ((), ()), (first_key, int(key)), (first_dist, dist))
        seen.setdefault(dist, int(key))
    return None


def shortened_hamming(q: int, m: int, drop: int = 1) -> MatQ:
    """H_{m,q} with its last ``drop`` columns removed."""
    H = hamming_parity_matrix(q, m)
    return MatQ(H.field, H.entries[:, : H.cols - drop])
