"""Pure-Python implementations of the hot integer kernels.

Every function here has a twin of the same name and signature in the compiled
``_ckernels`` extension. The compiled versions only accept inputs that fit in
64-bit machine integers; callers go through :mod:`tritotient._backend`, which
routes anything larger to this module.
"""
from functools import lru_cache

__all__ = [
    "words_with_det",
    "count_words_with_det",
    "unimodular_words",
    "euclid_word",
    "factorize_entries",
    "word_calculus_sweep",
]


def words_with_det(N, on_visit=None):
    """All words with letters >= 2 and tridiagonal determinant N, in lex order.

    DFS over (previous minor, current minor). A child letter ``x`` gives the
    next minor ``x*q - p``; it is kept only while that stays <= N, and a node is
    a leaf as soon as its minor equals N (minors grow strictly, so nothing
    below it can return to N).
    """
    out = []
    word = []
    # frames: [prev minor, minor, next letter to try]; explicit stack because
    # W(N-1, N) has depth N-1
    stack = [[0, 1, 2]]
    if on_visit is not None:
        on_visit(0, 1)
    while stack:
        frame = stack[-1]
        p, q, x = frame
        nq = x * q - p
        if nq > N:
            stack.pop()
            if word:
                word.pop()
            continue
        frame[2] = x + 1
        word.append(x)
        if on_visit is not None:
            on_visit(q, nq)
        if nq == N:
            out.append(tuple(word))
            word.pop()
        else:
            stack.append([q, nq, 2])
    return out


def count_words_with_det(N):
    count = 0
    stack = [(1, x) for x in range(2, N + 1)]
    while stack:
        p, q = stack.pop()
        if q == N:
            count += 1
            continue
        x = 2
        nq = 2 * q - p
        while nq <= N:
            stack.append((q, nq))
            x += 1
            nq += q
    return count


def _fib(k):
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def unimodular_words(n):
    """All length-n words (letters >= 1) whose T is positive definite with det 1.

    Letters are bounded by n and leading minors by Fibonacci(n+1); both bounds
    follow from building every such word out of ``(1,)`` by the blow-up
    ``(.., x, y, ..) -> (.., x+1, 1, y+1, ..)`` (and its end variants), which
    inserts the sum of two neighbouring minors. Feasibility of a state is
    memoised so the DFS only walks branches that reach a leaf.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    cap = _fib(n + 1)

    @lru_cache(maxsize=None)
    def children(p, q, r):
        kids = []
        for x in range(1, n + 1):
            nq = x * q - p
            if nq < 1:
                continue
            if nq > cap:
                break
            if r == 1:
                if nq == 1:
                    kids.append(x)
            elif children(q, nq, r - 1):
                kids.append(x)
        return tuple(kids)

    out = []
    word = []

    def dfs(p, q, r):
        if r == 0:
            out.append(tuple(word))
            return
        for x in children(p, q, r):
            word.append(x)
            dfs(q, x * q - p, r - 1)
            word.pop()

    dfs(0, 1, n)
    children.cache_clear()
    return out


def euclid_word(a, N):
    """Letters of W(a, N) one at a time via W(a,N) = W((-N) mod a, a), 1 + N//a."""
    rev = []
    while a != 1:
        rev.append(1 + N // a)
        a, N = (-N) % a, a
    rev.append(N)
    rev.reverse()
    return rev


def factorize_entries(a, b, c, d):
    """Letters of the unique word with M(word) = [[-a, -b], [c, d]].

    The caller has already checked unimodularity and the cone hypotheses.
    """
    out = []
    while a != 0:
        t = (-d) % b
        s = (a * t - 1) // b
        out.append(c * t - s * d)
        a, b, c, d = s, t, a, b
    out.append(d)
    return out


def word_calculus_sweep(max_letter, max_len):
    """Exhaustively check the 2x2 word identities on letters 2..max_letter.

    Returns a dict of counters: ``words`` checked, and one violation count per
    identity (``cone``, ``reversal``, ``roundtrip``, ``dodgson``, ``det``).
    """
    stats = {"words": 0, "cone": 0, "reversal": 0, "roundtrip": 0,
             "dodgson": 0, "det": 0}
    letters = range(2, max_letter + 1)
    word = []

    # fwd: M(w) entries, rev: M(reversed w), tail: M(w[1:]), tail_prev: M(w[1:-1])
    def dfs(fwd, rev, tail, tail_prev, depth):
        m11, m12, m21, m22 = fwd
        stats["words"] += 1
        a, b, c, d = -m11, -m12, m21, m22
        if not (0 <= a < min(b, c) and max(b, c) < d and c - a <= d - b):
            stats["cone"] += 1
        if rev != (m11, -m21, -m12, m22):
            stats["reversal"] += 1
        if m11 * m22 - m12 * m21 != 1:
            stats["det"] += 1
        if factorize_entries(a, b, c, d) != word:
            stats["roundtrip"] += 1
        if depth >= 2:
            # |T(w)| |T(w[1:-1])| = |T(w[:-1])| |T(w[1:])| - 1
            inner = tail_prev[3]
            if d * inner != c * tail[3] - 1:
                stats["dodgson"] += 1
        if depth == max_len:
            return
        for x in letters:
            word.append(x)
            nfwd = (m12, x * m12 - m11, m22, x * m22 - m21)
            r11, r12, r21, r22 = rev
            nrev = (-r21, -r22, r11 + x * r21, r12 + x * r22)
            t11, t12, t21, t22 = tail
            ntail = (t12, x * t12 - t11, t22, x * t22 - t21)
            dfs(nfwd, nrev, ntail, tail, depth + 1)
            word.pop()

    for x in letters:
        word.append(x)
        dfs((0, -1, 1, x), (0, -1, 1, x), (1, 0, 0, 1), (1, 0, 0, 1), 1)
        word.pop()
    return stats
