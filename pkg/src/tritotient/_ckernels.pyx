# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``.

All arithmetic is on signed 64-bit integers; ``_backend`` guarantees the
inputs are small enough that no intermediate value overflows.
"""
from libc.stdlib cimport malloc, free

ctypedef long long i64


def words_with_det(i64 N):
    cdef i64 *ps
    cdef i64 *qs
    cdef i64 *xs
    cdef Py_ssize_t top, k
    cdef i64 p, q, x, nq
    out = []
    ps = <i64 *> malloc((N + 2) * sizeof(i64))
    qs = <i64 *> malloc((N + 2) * sizeof(i64))
    xs = <i64 *> malloc((N + 2) * sizeof(i64))
    if ps == NULL or qs == NULL or xs == NULL:
        free(ps); free(qs); free(xs)
        raise MemoryError()
    try:
        # xs[k] is the letter currently placed at depth k (1-based word index k)
        top = 0
        ps[0] = 0
        qs[0] = 1
        xs[1] = 1
        while top >= 0:
            p = ps[top]
            q = qs[top]
            x = xs[top + 1] + 1
            nq = x * q - p
            if nq > N:
                top -= 1
                continue
            xs[top + 1] = x
            if nq == N:
                out.append(tuple([xs[k] for k in range(1, top + 2)]))
            else:
                top += 1
                ps[top] = q
                qs[top] = nq
                xs[top + 1] = 1
    finally:
        free(ps); free(qs); free(xs)
    return out


def count_words_with_det(i64 N):
    cdef i64 *ps
    cdef i64 *qs
    cdef i64 *xs
    cdef Py_ssize_t top
    cdef i64 p, q, x, nq
    cdef i64 count = 0
    ps = <i64 *> malloc((N + 2) * sizeof(i64))
    qs = <i64 *> malloc((N + 2) * sizeof(i64))
    xs = <i64 *> malloc((N + 2) * sizeof(i64))
    if ps == NULL or qs == NULL or xs == NULL:
        free(ps); free(qs); free(xs)
        raise MemoryError()
    top = 0
    ps[0] = 0
    qs[0] = 1
    xs[1] = 1
    while top >= 0:
        p = ps[top]
        q = qs[top]
        x = xs[top + 1] + 1
        nq = x * q - p
        if nq > N:
            top -= 1
            continue
        xs[top + 1] = x
        if nq == N:
            count += 1
        else:
            top += 1
            ps[top] = q
            qs[top] = nq
            xs[top + 1] = 1
    free(ps); free(qs); free(xs)
    return count


cdef i64 _fib(int k):
    cdef i64 a = 0, b = 1, t
    for _ in range(k):
        t = a + b
        a = b
        b = t
    return a


cdef void _uni_dfs(int n, int depth, i64 p, i64 q, i64 cap, int *word, list out):
    cdef int x
    cdef i64 nq
    if depth == n - 1:
        # last letter is forced: x*q - p == 1
        if (p + 1) % q == 0:
            x = <int> ((p + 1) // q)
            if 1 <= x <= n:
                word[depth] = x
                out.append(tuple([word[k] for k in range(n)]))
        return
    for x in range(1, n + 1):
        nq = x * q - p
        if nq < 1:
            continue
        if nq > cap:
            break
        word[depth] = x
        _uni_dfs(n, depth + 1, q, nq, cap, word, out)


def unimodular_words(int n):
    cdef int *word
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 80:
        raise OverflowError("n too large for 64-bit kernel")
    out = []
    word = <int *> malloc(n * sizeof(int))
    if word == NULL:
        raise MemoryError()
    try:
        _uni_dfs(n, 0, 0, 1, _fib(n + 1), word, out)
    finally:
        free(word)
    return out


def euclid_word(i64 a, i64 N):
    cdef i64 r
    rev = []
    while a != 1:
        rev.append(1 + N // a)
        r = N % a
        # (-N) mod a in {1, ..., a-1}; gcd(a, N) = 1 so r != 0
        N, a = a, a - r
    rev.append(N)
    rev.reverse()
    return rev


cdef int _factorize(i64 a, i64 b, i64 c, i64 d, i64 *buf, int cap):
    """Write letters into buf; return the count, or -1 if more than cap."""
    cdef int n = 0
    cdef i64 t, s
    while a != 0:
        if n >= cap:
            return -1
        t = (b - d % b) % b
        s = (a * t - 1) // b
        buf[n] = c * t - s * d
        n += 1
        d = b
        b = t
        c, a = a, s
    if n >= cap:
        return -1
    buf[n] = d
    return n + 1


def factorize_entries(i64 a, i64 b, i64 c, i64 d):
    cdef i64 buf[128]
    cdef int n = _factorize(a, b, c, d, buf, 128)
    if n < 0:
        raise OverflowError("word too long for compiled kernel")
    return [buf[k] for k in range(n)]


cdef struct SweepStats:
    i64 words
    i64 cone
    i64 reversal
    i64 roundtrip
    i64 dodgson
    i64 det


cdef void _sweep(int max_letter, int max_len, int depth, i64 *word,
                 i64 f11, i64 f12, i64 f21, i64 f22,
                 i64 r11, i64 r12, i64 r21, i64 r22,
                 i64 t11, i64 t12, i64 t21, i64 t22,
                 i64 inner, SweepStats *st):
    cdef i64 a = -f11, b = -f12, c = f21, d = f22
    cdef i64 buf[64]
    cdef int n, k, ok
    cdef i64 x
    st.words += 1
    if not (0 <= a and a < b and a < c and b < d and c < d and c - a <= d - b):
        st.cone += 1
    if not (r11 == f11 and r12 == -f21 and r21 == -f12 and r22 == f22):
        st.reversal += 1
    if f11 * f22 - f12 * f21 != 1:
        st.det += 1
    n = _factorize(a, b, c, d, buf, 64)
    ok = n == depth
    if ok:
        for k in range(n):
            if buf[k] != word[k]:
                ok = 0
                break
    if not ok:
        st.roundtrip += 1
    if depth >= 2 and d * inner != c * t22 - 1:
        st.dodgson += 1
    if depth == max_len:
        return
    for x in range(2, max_letter + 1):
        word[depth] = x
        _sweep(max_letter, max_len, depth + 1, word,
               f12, x * f12 - f11, f22, x * f22 - f21,
               -r21, -r22, r11 + x * r21, r12 + x * r22,
               t12, x * t12 - t11, t22, x * t22 - t21,
               t22, st)


def word_calculus_sweep(int max_letter, int max_len):
    cdef SweepStats st
    cdef i64 word[64]
    cdef i64 x
    if max_len > 60:
        raise OverflowError("max_len too large for compiled kernel")
    st.words = st.cone = st.reversal = st.roundtrip = st.dodgson = st.det = 0
    for x in range(2, max_letter + 1):
        word[0] = x
        _sweep(max_letter, max_len, 1, word,
               0, -1, 1, x, 0, -1, 1, x, 1, 0, 0, 1, 1, &st)
    return {"words": st.words, "cone": st.cone, "reversal": st.reversal,
            "roundtrip": st.roundtrip, "dodgson": st.dodgson, "det": st.det}
