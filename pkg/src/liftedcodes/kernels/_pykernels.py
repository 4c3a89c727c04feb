"""Pure-Python enumeration kernels (fallback when the extension is absent).

Every function takes and returns numpy int64 arrays so the two backends are
interchangeable; the loops themselves run over Python lists.
"""

from __future__ import annotations

from collections import deque

import numpy as np

NAME = "python"


def padd(a: int, b: int, p: int, ndigits: int) -> int:
    """Carry-less sum of two base-p integers with ndigits digits."""
    if p == 2:
        return a ^ b
    out, scale = 0, 1
    for _ in range(ndigits):
        a, da = divmod(a, p)
        b, db = divmod(b, p)
        out += ((da + db) % p) * scale
        scale *= p
    return out


def neighbor_table(gens, p: int, ndigits: int) -> np.ndarray:
    """Row s holds s (+) g for every generator g; s ranges over p**ndigits."""
    gens = [int(g) for g in gens]
    V = p ** ndigits
    rows = [[padd(s, g, p, ndigits) for g in gens] for s in range(V)]
    return np.array(rows, dtype=np.int64).reshape(V, len(gens))


def bfs_from(nbr, source: int) -> np.ndarray:
    adj = nbr.tolist()
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        s = queue.popleft()
        ds = dist[s] + 1
        for t in adj[s]:
            if dist[t] < 0:
                dist[t] = ds
                queue.append(t)
    return np.array(dist, dtype=np.int64)


def layer_counts(nbr, dist):
    """Per vertex: neighbours one layer closer, and one layer further."""
    adj = nbr.tolist()
    d = dist.tolist()
    down = [0] * len(adj)
    up = [0] * len(adj)
    for s, row in enumerate(adj):
        ds = d[s]
        for t in row:
            dt = d[t]
            if dt == ds - 1:
                down[s] += 1
            elif dt == ds + 1:
                up[s] += 1
    return np.array(down, dtype=np.int64), np.array(up, dtype=np.int64)


def all_sources_regularity(nbr):
    """BFS from every vertex and test that layer counts depend only on distance.

    Returns (ok, diameter, b, c, witness) where b and c are indexed by
    distance (length diameter + 1) and witness = (root, vertex, distance),
    all -1 when ok.
    """
    adj = nbr.tolist()
    V = len(adj)
    b = {}
    c = {}
    diameter = -1
    for root in range(V):
        dist = [-1] * V
        dist[root] = 0
        queue = deque([root])
        order = []
        while queue:
            s = queue.popleft()
            order.append(s)
            for t in adj[s]:
                if dist[t] < 0:
                    dist[t] = dist[s] + 1
                    queue.append(t)
        if len(order) != V:
            missing = dist.index(-1)
            return False, -1, np.zeros(0, np.int64), np.zeros(0, np.int64), (root, missing, -1)
        ecc = dist[order[-1]]
        if diameter < 0:
            diameter = ecc
        for s in order:
            ds = dist[s]
            down = up = 0
            for t in adj[s]:
                dt = dist[t]
                if dt == ds - 1:
                    down += 1
                elif dt == ds + 1:
                    up += 1
            if ds not in b:
                b[ds], c[ds] = up, down
            elif b[ds] != up or c[ds] != down:
                return False, -1, np.zeros(0, np.int64), np.zeros(0, np.int64), (root, s, ds)
        if ecc != diameter:
            return False, -1, np.zeros(0, np.int64), np.zeros(0, np.int64), (root, order[-1], ecc)
    bs = np.array([b[i] for i in range(diameter + 1)], dtype=np.int64)
    cs = np.array([c[i] for i in range(diameter + 1)], dtype=np.int64)
    return True, diameter, bs, cs, (-1, -1, -1)


def vector_syndromes(contrib, p: int, ndigits: int) -> np.ndarray:
    """Syndrome key of every vector of F^n, vectors in canonical order.

    contrib[j][x] is the key of x * h_j; vector index = sum v_j Q**j.
    """
    table = contrib.tolist()
    syn = [0]
    for row in table:
        syn = [padd(s, t, p, ndigits) for t in row for s in syn]
    return np.array(syn, dtype=np.int64)


def nearest_distances(vecs, words) -> np.ndarray:
    """Minimum Hamming distance from each row of vecs to the rows of words."""
    ws = [tuple(w) for w in words.tolist()]
    out = []
    for v in vecs.tolist():
        best = len(v) + 1
        for w in ws:
            d = 0
            for x, y in zip(v, w):
                if x != y:
                    d += 1
                    if d >= best:
                        break
            if d < best:
                best = d
                if best == 0:
                    break
        out.append(best)
    return np.array(out, dtype=np.int64)


def hamming_layer_counts(dist, Q: int, n: int):
    """Layer counts in the Hamming graph of F_Q^n (neighbours differ in one place)."""
    d = dist.tolist()
    N = len(d)
    down = [0] * N
    up = [0] * N
    for v in range(N):
        dv = d[v]
        scale = 1
        rest = v
        for _ in range(n):
            rest, digit = divmod(rest, Q)
            base = v - digit * scale
            for x in range(Q):
                if x == digit:
                    continue
                dt = d[base + x * scale]
                if dt == dv - 1:
                    down[v] += 1
                elif dt == dv + 1:
                    up[v] += 1
            scale *= Q
    return np.array(down, dtype=np.int64), np.array(up, dtype=np.int64)
