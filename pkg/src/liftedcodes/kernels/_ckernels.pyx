# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same signatures as _pykernels."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

NAME = "cython"

ctypedef long long i64


cdef inline i64 _padd(i64 a, i64 b, i64 p, int ndigits) nogil:
    cdef i64 out = 0, scale = 1, da, db
    cdef int k
    if p == 2:
        return a ^ b
    for k in range(ndigits):
        da = a % p
        db = b % p
        a //= p
        b //= p
        out += ((da + db) % p) * scale
        scale *= p
    return out


def padd(i64 a, i64 b, i64 p, int ndigits):
    return _padd(a, b, p, ndigits)


def neighbor_table(gens, i64 p, int ndigits):
    cdef const i64[::1] g = np.ascontiguousarray(gens, dtype=np.int64)
    cdef i64 V = p ** ndigits, s
    cdef Py_ssize_t G = g.shape[0], j
    out = np.empty((V, G), dtype=np.int64)
    cdef i64[:, ::1] o = out
    with nogil:
        for s in range(V):
            for j in range(G):
                o[s, j] = _padd(s, g[j], p, ndigits)
    return out


def bfs_from(nbr, i64 source):
    cdef const i64[:, ::1] adj = np.ascontiguousarray(nbr, dtype=np.int64)
    cdef Py_ssize_t V = adj.shape[0], G = adj.shape[1], j
    dist_arr = np.full(V, -1, dtype=np.int64)
    queue_arr = np.empty(max(V, 1), dtype=np.int64)
    cdef i64[::1] dist = dist_arr
    cdef i64[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0
    cdef i64 s, t
    with nogil:
        dist[source] = 0
        queue[tail] = source
        tail += 1
        while head < tail:
            s = queue[head]
            head += 1
            for j in range(G):
                t = adj[s, j]
                if dist[t] < 0:
                    dist[t] = dist[s] + 1
                    queue[tail] = t
                    tail += 1
    return dist_arr


def layer_counts(nbr, dist_in):
    cdef const i64[:, ::1] adj = np.ascontiguousarray(nbr, dtype=np.int64)
    cdef const i64[::1] dist = np.ascontiguousarray(dist_in, dtype=np.int64)
    cdef Py_ssize_t V = adj.shape[0], G = adj.shape[1], s, j
    down_arr = np.zeros(V, dtype=np.int64)
    up_arr = np.zeros(V, dtype=np.int64)
    cdef i64[::1] down = down_arr
    cdef i64[::1] up = up_arr
    cdef i64 ds, dt
    with nogil:
        for s in range(V):
            ds = dist[s]
            for j in range(G):
                dt = dist[adj[s, j]]
                if dt == ds - 1:
                    down[s] += 1
                elif dt == ds + 1:
                    up[s] += 1
    return down_arr, up_arr


def all_sources_regularity(nbr):
    cdef const i64[:, ::1] adj = np.ascontiguousarray(nbr, dtype=np.int64)
    cdef Py_ssize_t V = adj.shape[0], G = adj.shape[1], j, k
    dist_arr = np.empty(V, dtype=np.int64)
    queue_arr = np.empty(max(V, 1), dtype=np.int64)
    b_arr = np.full(V + 1, -1, dtype=np.int64)
    c_arr = np.full(V + 1, -1, dtype=np.int64)
    cdef i64[::1] dist = dist_arr
    cdef i64[::1] queue = queue_arr
    cdef i64[::1] b = b_arr
    cdef i64[::1] c = c_arr
    cdef Py_ssize_t head, tail
    cdef i64 root, s, t, ds, dt, down, up, ecc, diameter = -1
    cdef i64 w_root = -1, w_vertex = -1, w_dist = -1
    cdef bint ok = True
    with nogil:
        for root in range(V):
            for k in range(V):
                dist[k] = -1
            dist[root] = 0
            queue[0] = root
            head = 0
            tail = 1
            while head < tail:
                s = queue[head]
                head += 1
                for j in range(G):
                    t = adj[s, j]
                    if dist[t] < 0:
                        dist[t] = dist[s] + 1
                        queue[tail] = t
                        tail += 1
            if tail != V:
                for k in range(V):
                    if dist[k] < 0:
                        w_vertex = k
                        break
                w_root = root
                ok = False
                break
            ecc = dist[queue[tail - 1]]
            if diameter < 0:
                diameter = ecc
            for k in range(V):
                s = queue[k]
                ds = dist[s]
                down = 0
                up = 0
                for j in range(G):
                    dt = dist[adj[s, j]]
                    if dt == ds - 1:
                        down += 1
                    elif dt == ds + 1:
                        up += 1
                if b[ds] < 0:
                    b[ds] = up
                    c[ds] = down
                elif b[ds] != up or c[ds] != down:
                    w_root = root
                    w_vertex = s
                    w_dist = ds
                    ok = False
                    break
            if not ok:
                break
            if ecc != diameter:
                w_root = root
                w_vertex = queue[tail - 1]
                w_dist = ecc
                ok = False
                break
    if not ok:
        return False, -1, np.zeros(0, np.int64), np.zeros(0, np.int64), (w_root, w_vertex, w_dist)
    return True, diameter, b_arr[:diameter + 1].copy(), c_arr[:diameter + 1].copy(), (-1, -1, -1)


def vector_syndromes(contrib, i64 p, int ndigits):
    cdef const i64[:, ::1] tab = np.ascontiguousarray(contrib, dtype=np.int64)
    cdef Py_ssize_t n = tab.shape[0], Q = tab.shape[1], j, x, s, size = 1
    cdef Py_ssize_t total = Q ** n
    out = np.zeros(total, dtype=np.int64)
    cdef i64[::1] syn = out
    with nogil:
        for j in range(n):
            for x in range(Q - 1, 0, -1):
                for s in range(size):
                    syn[x * size + s] = _padd(syn[s], tab[j, x], p, ndigits)
            size *= Q
    return out


def nearest_distances(vecs, words):
    cdef const i64[:, ::1] v = np.ascontiguousarray(vecs, dtype=np.int64)
    cdef const i64[:, ::1] w = np.ascontiguousarray(words, dtype=np.int64)
    cdef Py_ssize_t N = v.shape[0], n = v.shape[1], K = w.shape[0], i, k, j
    out = np.empty(N, dtype=np.int64)
    cdef i64[::1] o = out
    cdef i64 best, d
    with nogil:
        for i in range(N):
            best = n + 1
            for k in range(K):
                d = 0
                for j in range(n):
                    if v[i, j] != w[k, j]:
                        d += 1
                        if d >= best:
                            break
                if d < best:
                    best = d
                    if best == 0:
                        break
            o[i] = best
    return out


def hamming_layer_counts(dist_in, i64 Q, int n):
    cdef const i64[::1] d = np.ascontiguousarray(dist_in, dtype=np.int64)
    cdef Py_ssize_t N = d.shape[0], v
    down_arr = np.zeros(N, dtype=np.int64)
    up_arr = np.zeros(N, dtype=np.int64)
    cdef i64[::1] down = down_arr
    cdef i64[::1] up = up_arr
    cdef i64 dv, dt, scale, rest, digit, base, x
    cdef int j
    with nogil:
        for v in range(N):
            dv = d[v]
            scale = 1
            rest = v
            for j in range(n):
                digit = rest % Q
                rest //= Q
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
    return down_arr, up_arr
