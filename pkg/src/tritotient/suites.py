"""Named invariant suites, shared by ``tritotient verify`` and the test suite.

Each suite returns a :class:`VerificationReport`; defaults are the full sizes.
"""
from math import gcd

from .enumeration import (
    catalan,
    count_words,
    enumerate_unimodular,
    enumerate_words,
    lattice_class_count,
    reversal_orbits,
    totient,
    totient_scan,
    word_to_residue,
)
from .lattice import minimal_norm, short_vectors, gram, quadratic_form
from .polytope import (
    SymMatrix,
    VerificationReport,
    enumerate_level_set,
    hull,
    in_convex_hull,
    integral_points_property,
    special_vertex_face_check,
)
from .sl2core import verify_word_calculus
from .tridiag import determinant
from .word import cfrac, mod_inverse, power_sum, sigma, word_of

__all__ = ["SUITES", "run_suite"]

P3_VERTICES = ((1, 2, 2), (1, 3, 1), (2, 1, 3), (2, 2, 1), (3, 1, 2))
# (normal, sense, offset, incident vertex numbers)
P3_FACETS = (
    ((0, 1, 1), "<=", 4, (1, 2, 3)),
    ((1, 1, 1), ">=", 5, (1, 2, 4)),
    ((1, 2, 1), ">=", 7, (1, 3, 4, 5)),
    ((2, 3, 2), "<=", 13, (2, 3, 5)),
    ((1, 1, 0), "<=", 4, (2, 4, 5)),
)


def _reduced(n_max):
    for N in range(2, n_max + 1):
        for a in range(1, N):
            if gcd(a, N) == 1:
                yield a, N


def totient_suite(n_max=200):
    rep = VerificationReport("totient")
    for N in range(2, n_max + 1):
        rep.checked += 1
        words = enumerate_words(N)
        phi = totient(N)
        if len(words) != phi or count_words(N) != phi or totient_scan(N) != phi:
            rep.fail(f"N={N}: {len(words)} words, phi={phi}")
    return rep


def roundtrip_suite(n_max=200):
    rep = VerificationReport("roundtrip")
    for a, N in _reduced(n_max):
        rep.checked += 1
        w = word_of(a, N)
        if determinant(w) != N or min(w) < 2 or tuple(word_to_residue(w)) != (a, N):
            rep.fail(f"W({a},{N}) = {w}")
    return rep


def symmetry_suite(n_max=500):
    rep = VerificationReport("sigma-symmetry")
    for a, N in _reduced(n_max):
        rep.checked += 1
        if sigma(a, N) != sigma(N - a, N):
            rep.fail(f"sigma({a},{N}) != sigma({N - a},{N})")
        if word_of(mod_inverse(a, N), N) != word_of(a, N)[::-1]:
            rep.fail(f"W(a^-1,{N}) is not the reversal of W({a},{N})")
    return rep


def cfrac_suite(n_max=500):
    rep = VerificationReport("cfrac")
    for a, N in _reduced(n_max):
        rep.checked += 1
        cf = cfrac(a, N)
        if 1 + sigma(a, N) != sum(cf.terms) or cf.value() * N != a:
            rep.fail(f"({a},{N}): cfrac {cf}")
    return rep


def powersum_suite(n_max=2000, e_max=3):
    rep = VerificationReport("powersum")
    for a, N in _reduced(n_max):
        w = word_of(a, N)
        for e in range(e_max + 1):
            rep.checked += 1
            if power_sum(a, N, e) != sum(x**e for x in w):
                rep.fail(f"power_sum({a},{N},{e})")
    return rep


def catalan_suite(n_max=12):
    rep = VerificationReport("catalan")
    for n in range(1, n_max + 1):
        rep.checked += 1
        if len(enumerate_unimodular(n)) != catalan(n):
            rep.fail(f"n={n}")
    return rep


def classes_suite(n_max=200):
    rep = VerificationReport("classes")
    for N in range(2, n_max + 1):
        rep.checked += 1
        if len(reversal_orbits(enumerate_words(N))) != lattice_class_count(N):
            rep.fail(f"N={N}")
    return rep


def latnorm_suite(max_letter=5, max_rank=5):
    """minimal_norm against a plain search over all vectors of norm <= min(word)."""
    rep = VerificationReport("latnorm")
    letters = range(2, max_letter + 1)
    words = [()]
    for _ in range(max_rank):
        words = [w + (x,) for w in words for x in letters]
        for w in words:
            rep.checked += 1
            G = gram(w)
            expected = min(quadratic_form(G, v) for v in short_vectors(G, min(w)))
            if minimal_norm(w) != min(w) or expected != min(w):
                rep.fail(f"{w}")
    return rep


def word_calculus_suite(max_letter=9, max_len=8):
    rep = VerificationReport("word-calculus")
    stats = verify_word_calculus(max_letter, max_len)
    rep.checked = stats["words"]
    rep.details.update(stats)
    for key, v in stats.items():
        if key != "words" and v:
            rep.fail(f"{key}: {v} failures")
    return rep


def p3_suite():
    rep = VerificationReport("p3")
    A = SymMatrix.path(3)
    pts = enumerate_level_set(A, 1)
    rep.checked += 1
    if tuple(pts) != P3_VERTICES:
        rep.fail(f"L_A(1) = {pts}")
    h = hull(pts)
    got = {(f.normal, f.sense, f.offset): f.vertices for f in h.facets}
    for normal, sense, offset, inc in P3_FACETS:
        rep.checked += 1
        want = tuple(P3_VERTICES[i - 1] for i in inc)
        if got.get((normal, sense, offset)) != want:
            rep.fail(f"facet {normal} {sense} {offset}")
    if len(got) != len(P3_FACETS):
        rep.fail(f"{len(got)} facets found")
    summit = P3_VERTICES[1]
    if sum(summit in f.vertices for f in h.facets) != 4:
        rep.fail("v2 is not on four facets")
    special = special_vertex_face_check(3)
    rep.checked += special.checked
    if not special.ok or set(special.details["special"]) != {P3_VERTICES[i] for i in (0, 1, 3)}:
        rep.fail("special vertices")
    return rep


def _vertexhood(rep, A, N):
    pts = enumerate_level_set(A, N)
    for p in pts:
        rep.checked += 1
        if in_convex_hull(p, [q for q in pts if q != p]):
            rep.fail(f"{p} is not a vertex of Conv(L({N}))")
    ip = integral_points_property(A, N)
    rep.checked += ip.checked
    for v in ip.violations:
        rep.fail(v)


def _is_prime(n):
    return n > 1 and all(n % p for p in range(2, int(n**0.5) + 1))


def polytope_suite():
    rep = VerificationReport("polytope")
    for d in (1, 2, 3):
        for N in range(1, 13):
            _vertexhood(rep, SymMatrix.zero(d), N)
    for d in (1, 2, 3, 4):
        for N in (1, 2, 3):
            _vertexhood(rep, SymMatrix.path(d), N)
    for d in (2, 3):
        for N in range(2, 31):
            rep.checked += 1
            h = hull(enumerate_level_set(SymMatrix.zero(d), N))
            if (h.is_simplex and h.dim == d - 1) != _is_prime(N):
                rep.fail(f"simplex criterion d={d} N={N}")
    return rep


SUITES = {
    "totient": totient_suite,
    "roundtrip": roundtrip_suite,
    "sigma-symmetry": symmetry_suite,
    "cfrac": cfrac_suite,
    "powersum": powersum_suite,
    "catalan": catalan_suite,
    "classes": classes_suite,
    "latnorm": latnorm_suite,
    "word-calculus": word_calculus_suite,
    "p3": p3_suite,
    "polytope": polytope_suite,
}


def run_suite(name):
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name]()
