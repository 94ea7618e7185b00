"""Level sets of integral diagonal shifts and their convex hulls.

For an integral symmetric matrix A, ``L_A(N)`` is the set of integral diagonal
matrices D (stored as their diagonals) such that A + D is positive definite
with determinant N. The hull of ``L_A(N)`` is an integral polytope whose
vertices are exactly the points of ``L_A(N)``.

Everything here is exact: integer determinants by fraction-free elimination,
and :class:`fractions.Fraction` for hulls, containment and feasibility.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "SymMatrix",
    "Facet",
    "HullDescription",
    "VerificationReport",
    "DimensionError",
    "MAX_LEVELSET_DIM",
    "MAX_FACET_DIM",
    "det",
    "enumerate_level_set",
    "hull",
    "in_convex_hull",
    "integral_points_property",
    "permutation_vertex",
    "special_vertex_face_check",
    "connected_orderings",
    "coconnected_orderings",
    "connected_perm_vertices",
    "direct_sum_law_check",
    "divisors",
]

MAX_LEVELSET_DIM = 6
MAX_FACET_DIM = 5
MAX_FACET_POINTS = 50


class DimensionError(ValueError):
    pass


# --------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class SymMatrix:
    """Integral symmetric matrix, stored as a tuple of row tuples."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix is not square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i + 1}, {j + 1})")
        object.__setattr__(self, "rows", rows)

    @property
    def dim(self):
        return len(self.rows)

    @property
    def diagonal(self):
        return tuple(self.rows[i][i] for i in range(self.dim))

    @classmethod
    def zero(cls, d):
        return cls(tuple((0,) * d for _ in range(d)))

    @classmethod
    def path(cls, d):
        """Adjacency matrix of the path graph: ones where |i - j| = 1."""
        return cls(tuple(tuple(int(abs(i - j) == 1) for j in range(d)) for i in range(d)))

    @classmethod
    def complete(cls, d):
        return cls(tuple(tuple(int(i != j) for j in range(d)) for i in range(d)))

    def with_diagonal(self, diag):
        return [
            [diag[i] if i == j else self.rows[i][j] for j in range(self.dim)]
            for i in range(self.dim)
        ]

    def shifted(self, diag):
        """A + diag(diag) as a new SymMatrix."""
        return SymMatrix(
            tuple(
                tuple(v + (diag[i] if i == j else 0) for j, v in enumerate(r))
                for i, r in enumerate(self.rows)
            )
        )

    def canonical(self):
        """Same off-diagonal part with a zero diagonal."""
        return self.shifted([-x for x in self.diagonal])

    def permuted(self, perm):
        """Matrix with entry (i, j) = A[perm[i]][perm[j]]."""
        return SymMatrix(tuple(tuple(self.rows[pi][pj] for pj in perm) for pi in perm))

    def direct_sum(self, other):
        n, m = self.dim, other.dim
        rows = [list(r) + [0] * m for r in self.rows]
        rows += [[0] * n + list(r) for r in other.rows]
        return SymMatrix(tuple(tuple(r) for r in rows))

    def dumps(self):
        lines = [str(self.dim)]
        lines += [" ".join(str(v) for v in r) for r in self.rows]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text):
        """Parse: first line d, then d rows of d whitespace-separated integers."""
        lines = [ln.split() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty matrix file")
        if len(lines[0]) != 1:
            raise ValueError("first line must hold the dimension only")
        d = int(lines[0][0])
        if d < 0:
            raise ValueError("negative dimension")
        body = lines[1:]
        if len(body) != d:
            raise ValueError(f"expected {d} rows, found {len(body)}")
        return cls(tuple(tuple(int(v) for v in row) for row in body))

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.loads(fh.read())


def det(M: Sequence[Sequence[int]]) -> int:
    """Integer determinant by Bareiss fraction-free elimination."""
    n = len(M)
    if n == 0:
        return 1
    M = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
        prev = pivot
    return sign * M[n - 1][n - 1]


def _principal(A: SymMatrix, assign: dict, order: Sequence[int]):
    return [
        [assign[i] if i == j else A.rows[i][j] for j in order] for i in order
    ]


def _min_pd_value(A, assign, block, i):
    """Least integer t with the principal block on ``block + [i]`` positive definite.

    ``block`` must already be positive definite under ``assign``. The block
    determinant is ``det(block) * t + c0``, linear in t with positive slope.
    """
    slope = det(_principal(A, assign, block))
    trial = dict(assign)
    trial[i] = 0
    c0 = det(_principal(A, trial, list(block) + [i]))
    return (-c0) // slope + 1


def _is_pd(M) -> bool:
    return all(det([r[:k] for r in M[:k]]) > 0 for k in range(1, len(M) + 1))


# --------------------------------------------------------------------------
# level sets


def enumerate_level_set(A: SymMatrix, N: int) -> list:
    """Sorted list of integral D (as diagonals) with A + D positive definite, det N.

    Works on the full diagonal x = diag(A + D). For the next free coordinate
    x_i the search needs an upper bound. Give the other free coordinates the
    greedy values ``g`` (each the least value keeping the block built so far
    positive definite). Once A + D with (x_i = t, rest = g) is positive definite
    with determinant > N, no completion with rest >= g and x_i >= t can reach N,
    because the determinant only grows along the diagonal inside the positive
    definite cone. Completions with some coordinate below its greedy value are
    reached by fixing that coordinate first, and there are finitely many such
    values.
    """
    d = A.dim
    if d > MAX_LEVELSET_DIM:
        raise DimensionError("dimension too large")
    if N < 1:
        return []
    if d == 0:
        return [()] if N == 1 else []
    found = set()

    def search(assign, block, free):
        if not free:
            if det(_principal(A, assign, block)) == N:
                found.add(tuple(assign[k] for k in range(d)))
            return
        i, others = free[0], free[1:]

        greedy = dict(assign)
        grown = list(block)
        for j in others:
            greedy[j] = _min_pd_value(A, greedy, grown, j)
            grown.append(j)

        for j in others:
            lo = _min_pd_value(A, assign, block, j)
            rest = [k for k in free if k != j]
            for v in range(lo, greedy[j]):
                nxt = dict(assign)
                nxt[j] = v
                search(nxt, block + [j], rest)

        full_order = block + [i] + list(others)
        t = _min_pd_value(A, assign, block, i)
        while True:
            probe = dict(greedy)
            probe[i] = t
            full = _principal(A, probe, full_order)
            if _is_pd(full) and det(full) > N:
                break
            nxt = dict(assign)
            nxt[i] = t
            search(nxt, block + [i], list(others))
            t += 1

    search({}, [], list(range(d)))
    diag = A.diagonal
    return sorted(tuple(x - a for x, a in zip(p, diag)) for p in found)


# --------------------------------------------------------------------------
# exact linear algebra helpers


def _rref(rows):
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    M = [[Fraction(v) for v in r] for r in rows]
    pivots = []
    r = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(M)) if M[k][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for k in range(len(M)):
            if k != r and M[k][c] != 0:
                f = M[k][c]
                M[k] = [a - f * b for a, b in zip(M[k], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def _nullspace(rows, ncols):
    """Basis of {x : rows @ x = 0} as primitive integer vectors."""
    if rows:
        R, pivots = _rref(rows)
    else:
        R, pivots = [], []
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(_primitive(v))
    return basis


def _primitive(v):
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _feasible(A_eq, b_eq) -> bool:
    """Is there lam >= 0 with A_eq @ lam = b_eq? Phase-one simplex, Bland's rule."""
    m = len(A_eq)
    n = len(A_eq[0]) if m else 0
    T = []
    for row, b in zip(A_eq, b_eq):
        row = [Fraction(v) for v in row]
        b = Fraction(b)
        if b < 0:
            row, b = [-v for v in row], -b
        T.append(row + [Fraction(int(k == len(T))) for k in range(m)] + [b])
    basis = [n + k for k in range(m)]
    width = n + m
    # objective: minimise the sum of artificials, i.e. reduced costs of -sum(rows)
    obj = [Fraction(0)] * (width + 1)
    for row in T:
        for k in range(width + 1):
            obj[k] -= row[k]
    for k in range(n, width):
        obj[k] = Fraction(0)
    while True:
        enter = next((k for k in range(width) if obj[k] < 0), None)
        if enter is None:
            break
        best = None
        for r, row in enumerate(T):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:  # unbounded cannot happen in phase one
            break
        r = best[1]
        pv = T[r][enter]
        T[r] = [v / pv for v in T[r]]
        for k, row in enumerate(T):
            if k != r and row[enter] != 0:
                f = row[enter]
                T[k] = [a - f * b for a, b in zip(row, T[r])]
        f = obj[enter]
        obj = [a - f * b for a, b in zip(obj, T[r])]
        basis[r] = enter
    return obj[-1] == 0


def in_convex_hull(point, others) -> bool:
    """Exact test: is ``point`` a convex combination of ``others``?"""
    others = list(others)
    if not others:
        return False
    d = len(point)
    A_eq = [[q[i] for q in others] for i in range(d)] + [[1] * len(others)]
    b_eq = list(point) + [1]
    return _feasible(A_eq, b_eq)


# --------------------------------------------------------------------------
# hulls


@dataclass(frozen=True)
class Facet:
    """``normal . x <sense> offset`` with ``sense`` in {"<=", ">="}."""

    normal: tuple
    offset: int
    sense: str
    vertices: tuple = ()

    def holds(self, x) -> bool:
        v = _dot(self.normal, x)
        return v <= self.offset if self.sense == "<=" else v >= self.offset

    def tight(self, x) -> bool:
        return _dot(self.normal, x) == self.offset

    def __str__(self):
        return f"{_linear_str(self.normal)} {self.sense} {self.offset}"


def _linear_str(normal):
    names = "xyzuvw" if len(normal) <= 6 else None
    parts = []
    for i, c in enumerate(normal):
        if c == 0:
            continue
        var = names[i] if names else f"x{i + 1}"
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        parts.append((sign, f"{mag}{var}"))
    if not parts:
        return "0"
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return " ".join([head] + [f"{s} {t}" for s, t in parts[1:]])


@dataclass(frozen=True)
class HullDescription:
    """Vertices, facets and affine-hull equations of a finite point set.

    ``dim`` is the affine dimension. When it is below the ambient dimension,
    ``equations`` pins down the affine hull and the facets are taken relative
    to it.
    """

    vertices: tuple
    facets: tuple
    equations: tuple = ()
    dim: int = 0
    ambient_dim: int = 0

    def contains(self, x) -> bool:
        if any(_dot(n, x) != c for n, c in self.equations):
            return False
        return all(f.holds(x) for f in self.facets)

    @property
    def is_simplex(self) -> bool:
        return len(self.vertices) == self.dim + 1


def _canonical_facet(normal, offset, sense, verts):
    lead = next(c for c in normal if c != 0)
    if lead < 0:
        normal = tuple(-c for c in normal)
        offset = -offset
        sense = ">=" if sense == "<=" else "<="
    return Facet(tuple(normal), offset, sense, tuple(sorted(verts)))


def hull(points: Iterable[Sequence[int]], facets: bool = True) -> HullDescription:
    """Exact convex hull of a small integer point set.

    Vertices are the points that are not convex combinations of the others.
    Facets come from hyperplanes through affinely independent subsets of the
    points (inside the affine hull when the set is not full-dimensional),
    kept when all points lie on one side.
    """
    pts = sorted({tuple(int(v) for v in p) for p in points})
    if not pts:
        raise ValueError("empty point set")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("points of different dimensions")

    verts = tuple(p for p in pts if not in_convex_hull(p, [q for q in pts if q != p]))

    p0 = pts[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in pts[1:]]
    if diffs and any(any(r) for r in diffs):
        _, pivots = _rref(diffs)
    else:
        pivots = []
    k = len(pivots)
    equations = tuple(
        (n, _dot(n, p0)) for n in _nullspace(diffs, d)
    ) if k < d else ()

    found = []
    if facets and k >= 1:
        if k > MAX_FACET_DIM or len(verts) > MAX_FACET_POINTS:
            raise DimensionError("facet enumeration limited to dimension 5 and 50 points")
        proj = {v: tuple(v[c] for c in pivots) for v in verts}
        seen = set()
        for subset in combinations(verts, k):
            base = proj[subset[0]]
            rows = [[a - b for a, b in zip(proj[q], base)] for q in subset[1:]]
            ns = _nullspace(rows, k)
            if len(ns) != 1:
                continue
            n = ns[0]
            c = _dot(n, base)
            vals = [_dot(n, proj[v]) - c for v in verts]
            if all(x <= 0 for x in vals):
                sense = "<="
            elif all(x >= 0 for x in vals):
                sense = ">="
            else:
                continue
            full = [0] * d
            for coef, col in zip(n, pivots):
                full[col] = coef
            tight = [v for v, x in zip(verts, vals) if x == 0]
            facet = _canonical_facet(full, c, sense, tight)
            key = (facet.normal, facet.offset, facet.sense)
            if key not in seen:
                seen.add(key)
                found.append(facet)
    found.sort(key=lambda f: (f.normal, f.offset, f.sense))
    return HullDescription(verts, tuple(found), equations, k, d)


# --------------------------------------------------------------------------
# verification helpers


@dataclass
class VerificationReport:
    name: str
    ok: bool = True
    checked: int = 0
    violations: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def fail(self, message):
        self.ok = False
        self.violations.append(message)

    def __str__(self):
        status = "PASS" if self.ok else "FAIL"
        head = f"{self.name}: {status} ({self.checked} checked)"
        return "\n".join([head] + [f"  {v}" for v in self.violations])


def integral_points_property(A: SymMatrix, N: int, box_margin: int = 1) -> VerificationReport:
    """Scan the padded bounding box of the hull of L_A(N) for integer points.

    Every integer point inside the hull must give a positive definite A + D
    with det >= N, and det == N exactly at the points of L_A(N).
    """
    if A.dim > 4:
        raise DimensionError("integral point scan limited to dimension 4")
    report = VerificationReport(f"integral points of Conv(L_A({N}))")
    pts = enumerate_level_set(A, N)
    report.details["level_set_size"] = len(pts)
    if not pts:
        return report
    level = set(pts)
    h = hull(pts)
    d = A.dim
    lo = [min(p[i] for p in pts) - box_margin for i in range(d)]
    hi = [max(p[i] for p in pts) + box_margin for i in range(d)]
    inside = 0

    def scan(prefix):
        nonlocal inside
        i = len(prefix)
        if i == d:
            x = tuple(prefix)
            if not h.contains(x):
                return
            inside += 1
            report.checked += 1
            M = A.shifted(x).rows
            value = det(M)
            if not _is_pd(M):
                report.fail(f"{x} inside hull but A+D not positive definite")
            elif value < N:
                report.fail(f"{x} inside hull with det {value} < {N}")
            elif value == N and x not in level:
                report.fail(f"{x} has det {N} but is missing from L_A(N)")
            elif value > N and x in level:
                report.fail(f"{x} listed in L_A(N) but det {value}")
            return
        for v in range(lo[i], hi[i] + 1):
            scan(prefix + [v])

    scan([])
    report.details["inside"] = inside
    for p in pts:
        if not h.contains(p):
            report.fail(f"level-set point {p} outside its own hull")
    return report


def permutation_vertex(A: SymMatrix, perm: Sequence[int]) -> tuple:
    """The D making every leading block of A + D, read in ``perm`` order, unimodular.

    ``perm`` lists 0-based indices. Each new block determinant is linear in
    the new diagonal entry with slope equal to the previous block determinant,
    which is 1, so every entry is forced.
    """
    d = A.dim
    if sorted(perm) != list(range(d)):
        raise ValueError("not a permutation of range(d)")
    assign = {}
    block = []
    for i in perm:
        trial = dict(assign)
        trial[i] = 0
        c0 = det(_principal(A, trial, block + [i]))
        assign[i] = 1 - c0
        block.append(i)
    return tuple(assign[i] - A.rows[i][i] for i in range(d))


def _path_special(d):
    base = [1] + [2] * (d - 2) + [1]
    return {tuple(b + (j == i) for j, b in enumerate(base)) for i in range(d)}


def special_vertex_face_check(d: int) -> VerificationReport:
    """The vertices (1,2,...,2,1) + e_i of the path-graph polytope.

    Over all d! orderings the permutation vertices already fill the whole of
    L_A(1). The points (1,2,...,2,1) + e_i are the images of exactly those
    orderings in which the vertices not yet placed always induce a connected
    subgraph (:func:`coconnected_orderings`). The check confirms that
    correspondence in both directions, that these d points are affinely
    independent, and that ``sum(x) >= 2d - 1`` holds on L_A(1) with equality
    exactly at them, so they span a simplicial face.
    """
    if not 3 <= d <= 5:
        raise DimensionError("special vertex check runs for 3 <= d <= 5")
    report = VerificationReport(f"special vertices of P_{d}")
    A = SymMatrix.path(d)
    expected = _path_special(d)
    level = enumerate_level_set(A, 1)
    level_set = set(level)

    image = {}
    for p in permutations(range(d)):
        image[p] = permutation_vertex(A, p)
    report.checked = len(image)
    all_values = set(image.values())
    report.details["all_orderings_image"] = len(all_values)
    report.details["level_set_size"] = len(level)
    if not all_values <= level_set:
        report.fail("a permutation vertex lies outside L_A(1)")

    special_orders = set(coconnected_orderings(A))
    hitting = {p for p, v in image.items() if v in expected}
    report.details["special_orderings"] = len(special_orders)
    if {image[p] for p in special_orders} != expected:
        report.fail("co-connected orderings do not give (1,2,...,2,1) + e_i")
    if hitting != special_orders:
        report.fail("other orderings also reach (1,2,...,2,1) + e_i")

    target = 2 * d - 1
    for p in level:
        s = sum(p)
        if s < target:
            report.fail(f"{p} violates sum >= {target}")
        elif s == target and p not in expected:
            report.fail(f"{p} on the face but not special")
    pts = sorted(expected)
    diffs = [[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]
    if len(_rref(diffs)[1]) != d - 1:
        report.fail("special vertices are not affinely independent")
    report.details["special"] = pts
    report.details["face"] = f"{_linear_str((1,) * d)} >= {target}"
    return report


def _check_adjacency(adj: SymMatrix):
    for i, row in enumerate(adj.rows):
        for j, v in enumerate(row):
            if v not in (0, 1) or (i == j and v):
                raise ValueError("not a simple-graph adjacency matrix")


def connected_orderings(adj: SymMatrix):
    """Orderings of the vertices whose every prefix induces a connected subgraph."""
    _check_adjacency(adj)
    d = adj.dim
    nbrs = [{j for j in range(d) if adj.rows[i][j]} for i in range(d)]
    seen = {0}
    stack = [0]
    while stack:
        for j in nbrs[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    if d and len(seen) != d:
        raise ValueError("graph is not connected")
    out = []

    def extend(order, chosen, frontier):
        if len(order) == d:
            out.append(tuple(order))
            return
        for v in sorted(frontier):
            new_frontier = (frontier | nbrs[v]) - chosen - {v}
            extend(order + [v], chosen | {v}, new_frontier)

    for start in range(d):
        extend([start], {start}, set(nbrs[start]))
    return out


def coconnected_orderings(adj: SymMatrix):
    """Orderings in which the vertices not yet placed always induce a connected subgraph."""
    _check_adjacency(adj)
    d = adj.dim
    nbrs = [{j for j in range(d) if adj.rows[i][j]} for i in range(d)]

    def connected(vs):
        if not vs:
            return True
        start = next(iter(vs))
        seen = {start}
        stack = [start]
        while stack:
            for j in nbrs[stack.pop()] & vs:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == len(vs)

    out = []

    def extend(order, rest):
        if not rest:
            out.append(tuple(order))
            return
        for v in sorted(rest):
            if connected(rest - {v}):
                extend(order + [v], rest - {v})

    if connected(set(range(d))):
        extend([], set(range(d)))
    return out


def connected_perm_vertices(adj: SymMatrix) -> list:
    if adj.dim > MAX_LEVELSET_DIM:
        raise DimensionError("dimension too large")
    return sorted({permutation_vertex(adj, p) for p in connected_orderings(adj)})


def divisors(n: int) -> list:
    return [k for k in range(1, n + 1) if n % k == 0]


def direct_sum_law_check(A1: SymMatrix, A2: SymMatrix, N: int) -> VerificationReport:
    """L_{A1 (+) A2}(N) against the union over l | N of L_A1(l) x L_A2(N/l)."""
    if A1.dim + A2.dim > MAX_LEVELSET_DIM:
        raise DimensionError("dimension too large")
    report = VerificationReport(f"direct sum law at N={N}")
    lhs = set(enumerate_level_set(A1.direct_sum(A2), N))
    rhs = set()
    for l in divisors(N):
        for p in enumerate_level_set(A1, l):
            for q in enumerate_level_set(A2, N // l):
                rhs.add(p + q)
    report.checked = len(lhs | rhs)
    for p in sorted(lhs - rhs):
        report.fail(f"{p} only in L_A(N)")
    for p in sorted(rhs - lhs):
        report.fail(f"{p} only in the divisor union")
    report.details["size"] = len(lhs)
    return report
