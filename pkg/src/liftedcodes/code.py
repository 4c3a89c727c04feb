"""Linear codes from a parity-check matrix: cosets, covering radius, complete regularity.

Syndromes and ambient vectors are keyed by integers.  A syndrome
(s_0, ..., s_{t-1}) has key sum s_i Q**i; an ambient vector has key
sum v_j Q**j.  Both keys are base-p numbers whose digits are prime-field
coordinates, so adding syndromes is carry-less addition of keys.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import kernels
from .caps import Caps, default_caps
from .gf import Field
from .matq import MatQ, matmul, nullspace, rank


def encode_vector(v, Q: int) -> int:
    out = 0
    for x in reversed(list(v)):
        out = out * Q + int(x)
    return out


def decode_vector(key: int, Q: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        key, d = divmod(key, Q)
        out.append(d)
    return tuple(out)


def all_vectors(Q: int, n: int) -> np.ndarray:
    """Every vector of F_Q^n as rows, in key order."""
    idx = np.arange(Q ** n, dtype=np.int64)
    return np.stack([(idx // Q ** j) % Q for j in range(n)], axis=1).reshape(Q ** n, n)


class LinearCode:
    """The code {c : c H^T = 0} over ``H.field``."""

    def __init__(self, H: MatQ, caps: Caps | None = None):
        if H.rows == 0 or not H.entries.any():
            raise ValueError("parity-check matrix must be nonzero")
        if rank(H) != H.rows:
            raise ValueError(f"parity-check matrix has rank {rank(H)} < {H.rows} rows")
        self.H = H
        self.caps = caps or default_caps()

    @property
    def field(self) -> Field:
        return self.H.field

    @property
    def Q(self) -> int:
        return self.field.order

    @property
    def n(self) -> int:
        return self.H.cols

    @property
    def redundancy(self) -> int:
        return self.H.rows

    @property
    def k(self) -> int:
        return self.n - self.redundancy

    @property
    def size(self) -> int:
        return self.Q ** self.k

    @property
    def num_cosets(self) -> int:
        return self.Q ** self.redundancy

    @property
    def key_digits(self) -> int:
        """Number of base-p digits in a syndrome key."""
        return self.redundancy * self.field.abs_degree

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over GF({self.Q}))"

    def _vec(self, v) -> np.ndarray:
        v = np.asarray([int(x) for x in v], dtype=np.int64)
        if v.shape != (self.n,):
            raise ValueError(f"expected a vector of length {self.n}, got {v.shape[0]}")
        if v.size and (v.min() < 0 or v.max() >= self.Q):
            raise ValueError("vector entry is not a field element")
        return v

    def syndrome(self, v) -> tuple[int, ...]:
        v = self._vec(v)
        s = matmul(self.field, v[None, :], self.H.entries.T)[0]
        return tuple(int(x) for x in s)

    def syndrome_key(self, v) -> int:
        return encode_vector(self.syndrome(v), self.Q)

    def syndrome_from_key(self, key: int) -> tuple[int, ...]:
        return decode_vector(key, self.Q, self.redundancy)

    def contains(self, v) -> bool:
        return not any(self.syndrome(v))

    @cached_property
    def contributions(self) -> np.ndarray:
        """contributions[j, x] = key of the syndrome of x * e_j."""
        F, H, Q = self.field, self.H.entries, self.Q
        weights = Q ** np.arange(self.redundancy, dtype=np.int64)
        out = np.empty((self.n, Q), dtype=np.int64)
        for j in range(self.n):
            out[j] = F.mul_table[np.arange(Q)[:, None], H[:, j][None, :]] @ weights
        out.flags.writeable = False
        return out

    @cached_property
    def generators(self) -> np.ndarray:
        """Keys of gamma * h_j for every column j and nonzero gamma (j-major)."""
        g = self.contributions[:, 1:].reshape(-1).copy()
        g.flags.writeable = False
        return g

    @cached_property
    def generator_matrix(self) -> MatQ:
        return nullspace(self.H)

    def codewords(self) -> np.ndarray:
        """All codewords as rows (lexicographic in the generator coefficients)."""
        self.caps.check("codewords", self.size, "codeword enumeration")
        F, G = self.field, self.generator_matrix.entries
        words = np.zeros((1, self.n), dtype=np.int64)
        xs = np.arange(self.Q, dtype=np.int64)
        for g in G:
            multiples = F.mul_table[xs[:, None], g[None, :]]
            words = F.add_table[multiples[:, None, :], words[None, :, :]].reshape(-1, self.n)
        return words

    @cached_property
    def _vector_census(self) -> tuple[np.ndarray, np.ndarray]:
        self.caps.check("vectors", self.Q ** self.n, "ambient-space enumeration")
        syn = kernels.vector_syndromes(self.contributions, self.field.p, self.key_digits)
        wt = (all_vectors(self.Q, self.n) != 0).sum(axis=1)
        syn.flags.writeable = False
        return syn, wt

    def vector_syndromes(self) -> np.ndarray:
        """Syndrome key of every ambient vector, indexed by vector key."""
        return self._vector_census[0]

    def neighbor_table(self) -> np.ndarray:
        steps = self.num_cosets * self.n * (self.Q - 1)
        self.caps.check("coset_steps", steps, "syndrome-graph expansion")
        return kernels.neighbor_table(self.generators, self.field.p, self.key_digits)


@dataclass(frozen=True)
class IntersectionArray:
    """(b_0..b_{rho-1}; c_1..c_rho) plus a_0..a_rho and coset counts mu_0..mu_rho."""

    rho: int
    b: tuple[int, ...]
    c: tuple[int, ...]
    a: tuple[int, ...]
    mu: tuple[int, ...]

    @classmethod
    def build(cls, b, c, mu, degree: int) -> IntersectionArray:
        b, c, mu = tuple(int(x) for x in b), tuple(int(x) for x in c), tuple(int(x) for x in mu)
        rho = len(b)
        if len(c) != rho or len(mu) != rho + 1:
            raise ValueError("inconsistent intersection array lengths")
        full_b = b + (0,)
        full_c = (0,) + c
        a = tuple(degree - full_b[i] - full_c[i] for i in range(rho + 1))
        return cls(rho, b, c, a, mu)

    @property
    def degree(self) -> int:
        """(Q-1) n, the number of neighbours of any vector."""
        return self.a[0] + (self.b[0] if self.b else 0)

    def balance_holds(self) -> bool:
        return all(self.mu[i] * self.b[i] == self.mu[i + 1] * self.c[i] for i in range(self.rho))

    def sum_rule_holds(self, degree: int) -> bool:
        full_b = self.b + (0,)
        full_c = (0,) + self.c
        return all(self.a[i] + full_b[i] + full_c[i] == degree for i in range(self.rho + 1))

    def to_dict(self) -> dict:
        return {"rho": self.rho, "b": list(self.b), "c": list(self.c),
                "a": list(self.a), "mu": list(self.mu)}

    def __str__(self) -> str:
        return f"({', '.join(map(str, self.b))}; {', '.join(map(str, self.c))})"


@dataclass(frozen=True)
class CosetTable:
    """Coset distance (and optionally weight distribution) per syndrome key."""

    code: LinearCode = field(repr=False)
    distances: np.ndarray = field(repr=False)
    distributions: np.ndarray | None = field(default=None, repr=False)

    @property
    def rho(self) -> int:
        return int(self.distances.max())

    @property
    def mu(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.bincount(self.distances, minlength=self.rho + 1))

    def distance(self, syndrome) -> int:
        key = syndrome if isinstance(syndrome, (int, np.integer)) else encode_vector(syndrome, self.code.Q)
        return int(self.distances[int(key)])

    def __len__(self) -> int:
        return len(self.distances)

    def to_dict(self) -> dict:
        out = {"cosets": len(self), "rho": self.rho, "mu": list(self.mu)}
        if self.distributions is not None:
            out["distributions"] = self.distributions.tolist()
        return out


def code_from_parity(H: MatQ, caps: Caps | None = None) -> LinearCode:
    return LinearCode(H, caps)


def syndrome(v, code: LinearCode) -> tuple[int, ...]:
    return code.syndrome(v)


def coset_table(code: LinearCode, with_distributions: bool = False) -> CosetTable:
    """Coset distances by BFS over the syndrome graph from the zero syndrome."""
    nbr = code.neighbor_table()
    dist = kernels.bfs_from(nbr, 0)
    if (dist < 0).any():
        raise AssertionError("syndrome graph is disconnected although H has full rank")
    dist.flags.writeable = False
    dists = None
    if with_distributions:
        syn, wt = code._vector_census
        dists = np.zeros((code.num_cosets, code.n + 1), dtype=np.int64)
        np.add.at(dists, (syn, wt), 1)
        dists.flags.writeable = False
    return CosetTable(code, dist, dists)


def covering_radius(code: LinearCode) -> int:
    return coset_table(code).rho


def min_distance(code: LinearCode) -> int:
    words = code.codewords()
    weights = (words != 0).sum(axis=1)
    nonzero = weights[weights > 0]
    if nonzero.size == 0:
        raise ValueError("the zero code has no minimum distance")
    return int(nonzero.min())


def coset_weight_distribution(code: LinearCode, syndrome) -> np.ndarray:
    """Weight distribution of a coset given by syndrome key or by a member vector."""
    if not isinstance(syndrome, (int, np.integer)):
        # translate the codewords; far cheaper than scanning the ambient space
        x = code._vec(syndrome)
        words = code.field.add_table[code.codewords(), x[None, :]]
        return np.bincount((words != 0).sum(axis=1), minlength=code.n + 1)
    key = int(syndrome)
    syn, wt = code._vector_census
    return np.bincount(wt[syn == key], minlength=code.n + 1)


@dataclass(frozen=True)
class CRWitness:
    """Two members of distance class ``distance`` whose neighbour counts differ.

    ``members`` are syndrome keys for the coset-level checker and vector keys
    for the vector-level oracle; ``counts`` are the matching (c, b) pairs.
    """

    distance: int
    members: tuple[int, int]
    counts: tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class CRVerdict:
    regular: bool
    array: IntersectionArray | None = None
    witness: CRWitness | None = None

    def __bool__(self) -> bool:
        return self.regular


def _classify(dist: np.ndarray, down: np.ndarray, up: np.ndarray, degree: int,
              mu: tuple[int, ...]) -> CRVerdict:
    rho = int(dist.max())
    best = None
    b, c = [], []
    for l in range(rho + 1):
        members = np.nonzero(dist == l)[0]
        first = int(members[0])
        ref = (int(down[first]), int(up[first]))
        differ = members[(down[members] != ref[0]) | (up[members] != ref[1])]
        if differ.size:
            other = int(differ[0])
            cand = CRWitness(l, (first, other), (ref, (int(down[other]), int(up[other]))))
            if best is None or cand.members < best.members:
                best = cand
            continue
        c.append(ref[0])
        b.append(ref[1])
    if best is not None:
        return CRVerdict(False, None, best)
    array = IntersectionArray.build(b[:rho], c[1:], mu, degree)
    return CRVerdict(True, array, None)


def is_completely_regular(code: LinearCode, table: CosetTable | None = None) -> CRVerdict:
    """Coset-level check: neighbour counts over s + gamma h_j, constant per class.

    Counting at the coset level is equivalent to the vector level: the
    neighbours of v + c are the neighbours of v translated by the codeword c,
    which keeps every coset distance.
    """
    table = table or coset_table(code)
    nbr = code.neighbor_table()
    down, up = kernels.layer_counts(nbr, table.distances)
    return _classify(table.distances, down, up, code.n * (code.Q - 1), table.mu)


def vector_distances(code: LinearCode) -> np.ndarray:
    """d(v, C) for every ambient vector by direct minimisation over codewords."""
    Q, n = code.Q, code.n
    code.caps.check("vectors", Q ** n, "ambient-space enumeration")
    code.caps.check("coset_steps", Q ** n * code.size, "vector-by-codeword comparison")
    return kernels.nearest_distances(all_vectors(Q, n), code.codewords())


def cr_vector_oracle(code: LinearCode) -> CRVerdict:
    """Brute force over every ambient vector, counting neighbours literally."""
    dist = vector_distances(code)
    down, up = kernels.hamming_layer_counts(dist, code.Q, code.n)
    mu_vectors = np.bincount(dist)
    mu = tuple(int(x) // code.size for x in mu_vectors)
    return _classify(dist, down, up, code.n * (code.Q - 1), mu)
