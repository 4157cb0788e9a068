# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled toggle-rowmotion kernel over prime-field matrices.

Mirrors rowmotion._kernel_py exactly; see that module for the interface
contract.  Entries are 64-bit residues; products are reduced through 128-bit
intermediates, so any prime below 2^63 is safe (the fuzzing default is
2^61 - 1).
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memcpy, memset

from rowmotion.errors import SingularValue

BACKEND = "compiled"

ctypedef unsigned long long u64

cdef extern from *:
    """
    typedef unsigned __int128 rowmotion_u128;
    static inline unsigned long long rowmotion_mulmod(
        unsigned long long a, unsigned long long b, unsigned long long p) {
        return (unsigned long long)(((rowmotion_u128)a * (rowmotion_u128)b) % p);
    }
    """
    u64 rowmotion_mulmod(u64 a, u64 b, u64 p) nogil


cdef inline u64 _powmod(u64 a, u64 e, u64 p) nogil:
    cdef u64 acc = 1 % p
    cdef u64 base = a % p
    while e:
        if e & 1:
            acc = rowmotion_mulmod(acc, base, p)
        base = rowmotion_mulmod(base, base, p)
        e >>= 1
    return acc


cdef class FpToggleEngine:
    """Toggle-mode antichain rowmotion stepper for one poset shape."""

    cdef int n, d, dd
    cdef u64 p
    cdef int* up_flat
    cdef int* up_off
    cdef int* dn_flat
    cdef int* dn_off
    cdef int* topo
    cdef int* upset_flat
    cdef int* upset_off
    cdef int* dnset_flat
    cdef int* dnset_off
    # scratch: per-element DP values, three matrix temporaries
    cdef u64* dp
    cdef u64* t0
    cdef u64* t1
    cdef u64* t2
    cdef u64* buf_a
    cdef u64* buf_b

    def __cinit__(self, up_covers, down_covers, topo, upsets, downsets, int d, u64 p):
        cdef int n = len(up_covers)
        self.n = n
        self.d = d
        self.dd = d * d
        self.p = p
        self.up_flat = NULL; self.up_off = NULL
        self.dn_flat = NULL; self.dn_off = NULL
        self.topo = NULL
        self.upset_flat = NULL; self.upset_off = NULL
        self.dnset_flat = NULL; self.dnset_off = NULL
        self.dp = NULL; self.t0 = NULL; self.t1 = NULL; self.t2 = NULL
        self.buf_a = NULL; self.buf_b = NULL
        self._load_csr(up_covers, &self.up_flat, &self.up_off)
        self._load_csr(down_covers, &self.dn_flat, &self.dn_off)
        self._load_csr(upsets, &self.upset_flat, &self.upset_off)
        self._load_csr(downsets, &self.dnset_flat, &self.dnset_off)
        self.topo = <int*>calloc(n, sizeof(int))
        cdef int k
        for k in range(n):
            self.topo[k] = topo[k]
        self.dp = <u64*>calloc(n * self.dd, sizeof(u64))
        self.t0 = <u64*>calloc(self.dd, sizeof(u64))
        self.t1 = <u64*>calloc(self.dd, sizeof(u64))
        self.t2 = <u64*>calloc(2 * d * d * 2, sizeof(u64))  # Gauss augmented rows
        self.buf_a = <u64*>calloc(n * self.dd, sizeof(u64))
        self.buf_b = <u64*>calloc(n * self.dd, sizeof(u64))

    cdef void _load_csr(self, lists, int** flat, int** off):
        cdef int n = len(lists)
        cdef int total = 0
        for row in lists:
            total += len(row)
        off[0] = <int*>calloc(n + 1, sizeof(int))
        flat[0] = <int*>calloc(total if total else 1, sizeof(int))
        cdef int k = 0
        cdef int i = 0
        for row in lists:
            off[0][i] = k
            for v in row:
                flat[0][k] = v
                k += 1
            i += 1
        off[0][n] = k

    def __dealloc__(self):
        free(self.up_flat); free(self.up_off)
        free(self.dn_flat); free(self.dn_off)
        free(self.topo)
        free(self.upset_flat); free(self.upset_off)
        free(self.dnset_flat); free(self.dnset_off)
        free(self.dp); free(self.t0); free(self.t1); free(self.t2)
        free(self.buf_a); free(self.buf_b)

    # -- matrix helpers on flat buffers --------------------------------

    cdef void _mat_mul(self, u64* x, u64* y, u64* out) nogil:
        cdef int d = self.d
        cdef u64 p = self.p
        cdef int i, j, k
        cdef u64 acc, a
        for i in range(d):
            for j in range(d):
                acc = 0
                for k in range(d):
                    a = x[i * d + k]
                    if a:
                        acc = (acc + rowmotion_mulmod(a, y[k * d + j], p)) % p
                out[i * d + j] = acc

    cdef int _mat_inv(self, u64* x, u64* out) nogil:
        """Gauss-Jordan inverse; returns 0 when singular."""
        cdef int d = self.d
        cdef u64 p = self.p
        cdef u64* aug = self.t2
        cdef int w = 2 * d
        cdef int i, j, col, piv, r
        cdef u64 f, inv
        if d == 1:
            if x[0] == 0:
                return 0
            out[0] = _powmod(x[0], p - 2, p)
            return 1
        for i in range(d):
            for j in range(d):
                aug[i * w + j] = x[i * d + j]
                aug[i * w + d + j] = 1 if i == j else 0
        for col in range(d):
            piv = -1
            for r in range(col, d):
                if aug[r * w + col]:
                    piv = r
                    break
            if piv < 0:
                return 0
            if piv != col:
                for j in range(w):
                    f = aug[col * w + j]
                    aug[col * w + j] = aug[piv * w + j]
                    aug[piv * w + j] = f
            inv = _powmod(aug[col * w + col], p - 2, p)
            for j in range(w):
                aug[col * w + j] = rowmotion_mulmod(aug[col * w + j], inv, p)
            for r in range(d):
                if r != col and aug[r * w + col]:
                    f = aug[r * w + col]
                    for j in range(w):
                        aug[r * w + j] = (aug[r * w + j] + p - rowmotion_mulmod(f, aug[col * w + j], p)) % p
        for i in range(d):
            for j in range(d):
                out[i * d + j] = aug[i * w + d + j]
        return 1

    cdef u64* _directed_value(self, u64* labels, int* order, int lo, int hi,
                              int* cov_flat, int* cov_off, bint left) nogil:
        """DP for one inverse transfer, over a stored up-set or down-set.

        Returns a pointer into self.dp at the set's last element (the toggled
        element itself)."""
        cdef int dd = self.dd
        cdef int d = self.d
        cdef u64 p = self.p
        cdef int k, u, c, j, m
        cdef bint any_cover
        for k in range(lo, hi):
            u = order[k]
            any_cover = 0
            for j in range(dd):
                self.t0[j] = 0
            for c in range(cov_off[u], cov_off[u + 1]):
                m = cov_flat[c]
                any_cover = 1
                for j in range(dd):
                    self.t0[j] = (self.t0[j] + self.dp[m * dd + j]) % p
            if not any_cover:
                memcpy(self.dp + u * dd, labels + u * dd, dd * sizeof(u64))
            elif left:
                self._mat_mul(labels + u * dd, self.t0, self.dp + u * dd)
            else:
                self._mat_mul(self.t0, labels + u * dd, self.dp + u * dd)
        return self.dp + order[hi - 1] * dd

    cdef int _step_inplace(self, u64* labels, u64 c) nogil:
        """One toggle pass; returns the failing element id, or -1 on success."""
        cdef int dd = self.dd
        cdef u64 p = self.p
        cdef int t, v, j
        cdef u64* val
        for t in range(self.n):
            v = self.topo[t]
            val = self._directed_value(labels, self.upset_flat,
                                       self.upset_off[v], self.upset_off[v + 1],
                                       self.up_flat, self.up_off, 0)
            if not self._mat_inv(val, self.t1):
                return v
            val = self._directed_value(labels, self.dnset_flat,
                                       self.dnset_off[v], self.dnset_off[v + 1],
                                       self.dn_flat, self.dn_off, 1)
            if not self._mat_inv(val, self.t0):
                return v
            # new label = c * up_inv * down_inv * g(v)
            self._mat_mul(self.t1, self.t0, self.dp)      # dp[0:dd] as scratch
            self._mat_mul(self.dp, labels + v * dd, self.t1)
            for j in range(dd):
                labels[v * dd + j] = rowmotion_mulmod(c, self.t1[j], p)
        return -1

    # NOTE: _directed_value writes self.dp per element; reusing dp[0:dd] as
    # scratch afterwards is safe because each toggle recomputes its DP from
    # scratch before reading it.

    def step(self, labels, u64 c):
        """One toggle pass bottom to top; returns the new flat label list."""
        cdef int total = self.n * self.dd
        cdef int k
        for k in range(total):
            self.buf_a[k] = labels[k]
        cdef int bad = self._step_inplace(self.buf_a, c)
        if bad >= 0:
            raise SingularValue("singular value during toggle", element=bad)
        return [self.buf_a[k] for k in range(total)]

    def first_return(self, labels, u64 c, int max_steps):
        """Smallest m <= max_steps with step^m(labels) == labels, else 0."""
        cdef int total = self.n * self.dd
        cdef int k, m, bad
        cdef bint same
        for k in range(total):
            self.buf_a[k] = labels[k]
        memcpy(self.buf_b, self.buf_a, total * sizeof(u64))
        for m in range(1, max_steps + 1):
            bad = self._step_inplace(self.buf_b, c)
            if bad >= 0:
                raise SingularValue("singular value during toggle", element=bad)
            same = 1
            for k in range(total):
                if self.buf_b[k] != self.buf_a[k]:
                    same = 0
                    break
            if same:
                return m
        return 0
