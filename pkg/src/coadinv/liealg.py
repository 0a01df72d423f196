"""The four inhomogeneous algebras as concrete coordinate spaces.

Families (the "n" is the matrix size everywhere):

    aff   gl(n) acting on column vectors; dual points are (y, vstar)
    isl   the traceless subalgebra of aff; dual points have tr(y) = 0
    glvv  gl(n) acting on V + V*; dual points are (y, wstar, xi)
    io    so(n) acting on V, full orthogonal group upstairs
    iso   same algebra, special orthogonal group upstairs

The module provides the coadjoint actions with their translation parts,
deterministic seeded sampling of group elements and dual points, the
commutator-form index, the minus-transpose involution of the glvv algebra
and its bordered-matrix embedding into gl(n+1).

Group elements (g, u) and (g, u, vstar) abbreviate the fixed factorization
(e, u, 0) * (e, 0, vstar) * (g, 0, 0); every composite action below flows
through it, and the product law is
(g1, u1, v1) (g2, u2, v2) = (g1 g2, u1 + g1 u2, v1 + v2 g1^-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactmat import (Mat, Rat, det, inverse, mat_from_json, mat_to_json,
                       rank, rat_str, scalar)

FAMILIES = ("aff", "isl", "glvv", "io", "iso")

_RETRY_CAP = 64


@dataclass(frozen=True)
class Algebra:
    """One of the supported families at a fixed size n."""

    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError("unknown algebra family %r" % (self.family,))
        if self.n < 1:
            raise ValueError("algebra size must be >= 1")

    @property
    def ell(self) -> int:
        """Block count of the orthogonal families: n = 2*ell+1 or 2*ell+2."""
        if self.family not in ("io", "iso"):
            raise ValueError("ell is only defined for io/iso")
        return (self.n - 1) // 2

    @property
    def dim(self) -> int:
        n = self.n
        if self.family == "aff":
            return n * n + n
        if self.family == "isl":
            return n * n - 1 + n
        if self.family == "glvv":
            return n * n + 2 * n
        return n * (n - 1) // 2 + n


# -- dual points and group elements -----------------------------------------

def _want_shape(m: Mat, rows: int, cols: int, what: str):
    if m.rows != rows or m.cols != cols:
        raise ValueError("%s must be %dx%d, got %dx%d"
                         % (what, rows, cols, m.rows, m.cols))


@dataclass(frozen=True)
class DualPointA:
    """Point (y, vstar) of the affine dual: y is n x n, vstar is 1 x n."""

    y: Mat
    vstar: Mat

    def __post_init__(self):
        if not self.y.is_square():
            raise ValueError("y must be square")
        _want_shape(self.vstar, 1, self.y.rows, "vstar")

    @staticmethod
    def traceless(y: Mat, vstar: Mat) -> "DualPointA":
        p = DualPointA(y, vstar)
        if y.trace() != 0:
            raise ValueError("traceless point needs tr(y) = 0")
        return p

    @property
    def n(self) -> int:
        return self.y.rows

    def __add__(self, other):
        return DualPointA(self.y + other.y, self.vstar + other.vstar)

    def __rmul__(self, c):
        return DualPointA(c * self.y, c * self.vstar)


@dataclass(frozen=True)
class DualPointB:
    """Point (y, wstar, xi) of the glvv dual."""

    y: Mat
    wstar: Mat
    xi: Mat

    def __post_init__(self):
        if not self.y.is_square():
            raise ValueError("y must be square")
        n = self.y.rows
        _want_shape(self.wstar, 1, n, "wstar")
        _want_shape(self.xi, n, 1, "xi")

    @property
    def n(self) -> int:
        return self.y.rows

    def __add__(self, other):
        return DualPointB(self.y + other.y, self.wstar + other.wstar, self.xi + other.xi)

    def __rmul__(self, c):
        return DualPointB(c * self.y, c * self.wstar, c * self.xi)


@dataclass(frozen=True)
class DualPointC:
    """Point (y, wstar) of the orthogonal dual; y must be skew."""

    y: Mat
    wstar: Mat

    def __post_init__(self):
        if not self.y.is_skew():
            raise ValueError("y must be skew-symmetric")
        _want_shape(self.wstar, 1, self.y.rows, "wstar")

    @property
    def n(self) -> int:
        return self.y.rows

    def __add__(self, other):
        return DualPointC(self.y + other.y, self.wstar + other.wstar)

    def __rmul__(self, c):
        return DualPointC(c * self.y, c * self.wstar)


@dataclass(frozen=True)
class GroupElemA:
    """Element (g, u) with g invertible."""

    g: Mat
    u: Mat

    def __post_init__(self):
        if not self.g.is_square():
            raise ValueError("g must be square")
        _want_shape(self.u, self.g.rows, 1, "u")
        if det(self.g) == 0:
            raise ValueError("singular")

    @property
    def n(self) -> int:
        return self.g.rows


@dataclass(frozen=True)
class GroupElemB:
    """Element (g, u, vstar) with g invertible."""

    g: Mat
    u: Mat
    vstar: Mat

    def __post_init__(self):
        if not self.g.is_square():
            raise ValueError("g must be square")
        n = self.g.rows
        _want_shape(self.u, n, 1, "u")
        _want_shape(self.vstar, 1, n, "vstar")
        if det(self.g) == 0:
            raise ValueError("singular")

    @property
    def n(self) -> int:
        return self.g.rows


def compose_A(a1: GroupElemA, a2: GroupElemA) -> GroupElemA:
    return GroupElemA(a1.g * a2.g, a1.u + a1.g * a2.u)


def compose_B(b1: GroupElemB, b2: GroupElemB) -> GroupElemB:
    return GroupElemB(b1.g * b2.g, b1.u + b1.g * b2.u,
                      b1.vstar + b2.vstar * inverse(b1.g))


def inverse_B(b: GroupElemB) -> GroupElemB:
    gi = inverse(b.g)
    return GroupElemB(gi, -(gi * b.u), -(b.vstar * b.g))


# -- deterministic splittable randomness ------------------------------------

_MASK64 = (1 << 64) - 1


def _mix64(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return (z ^ (z >> 31)) & _MASK64


class Rng:
    """Deterministic splittable integer stream (splitmix64).

    Pure 64-bit integer arithmetic, so the same seed yields the same
    sequence on every platform and Python version.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        return _mix64(self._state)

    def int_between(self, lo: int, hi: int) -> int:
        """Uniform integer in the inclusive range [lo, hi]."""
        if hi < lo:
            raise ValueError("empty range")
        span = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            u = self.next_u64()
            if u < limit:
                return lo + (u % span)

    def coin(self) -> bool:
        return self.next_u64() & 1 == 1

    def child(self, *tags) -> "Rng":
        """Derive an independent stream keyed by the given tags."""
        h = self.next_u64()
        for tag in tags:
            if isinstance(tag, str):
                for byte in tag.encode("utf-8"):
                    h = _mix64(h ^ byte)
            else:
                h = _mix64(h ^ (int(tag) & _MASK64))
        return Rng(h)


# -- sampling ----------------------------------------------------------------

def sample_int_mat(rng: Rng, rows: int, cols: int, bound: int) -> Mat:
    return Mat([[rng.int_between(-bound, bound) for _ in range(cols)]
                for _ in range(rows)])


def sample_vec(rng: Rng, n: int, bound: int) -> Mat:
    return Mat([[rng.int_between(-bound, bound)] for _ in range(n)])


def sample_covec(rng: Rng, n: int, bound: int) -> Mat:
    return Mat([[rng.int_between(-bound, bound) for _ in range(n)]])


def sample_skew(rng: Rng, n: int, bound: int) -> Mat:
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = Fraction(rng.int_between(-bound, bound))
            m[i][j] = v
            m[j][i] = -v
    return Mat(m)


def sample_gl(rng: Rng, n: int, bound: int) -> Mat:
    """Random integer matrix with nonzero determinant (rejection)."""
    for _ in range(_RETRY_CAP):
        g = sample_int_mat(rng, n, n, bound)
        if det(g) != 0:
            return g
    raise RuntimeError("degenerate rng")


def sample_sl(rng: Rng, n: int, bound: int) -> Mat:
    """Product of 2n random transvections I + c E_ij; determinant exactly 1."""
    g = Mat.identity(n)
    if n == 1:
        return g
    for _ in range(2 * n):
        i = rng.int_between(0, n - 1)
        j = rng.int_between(0, n - 2)
        if j >= i:
            j += 1
        c = rng.int_between(-bound, bound)
        g = g * (Mat.identity(n) + c * Mat.unit(n, i, j))
    return g


def cayley(s: Mat) -> Mat:
    """Cayley transform (I - S)(I + S)^-1 of a skew matrix.

    Always defined over the rationals (det(I + S) >= 1 for skew S) and
    returns a special orthogonal matrix, exactly.
    """
    if not s.is_skew():
        raise ValueError("cayley needs a skew matrix")
    ident = Mat.identity(s.rows)
    return (ident - s) * inverse(ident + s)


def reflection(n: int) -> Mat:
    """diag(1, ..., 1, -1): the determinant -1 coset representative."""
    return Mat.diag([1] * (n - 1) + [-1])


def sample_orthogonal(rng: Rng, n: int, bound: int, det_sign: int = 1) -> Mat:
    """Random orthogonal matrix: Cayley of a random skew, times the
    reflection when det_sign = -1.  Orthogonality is exact."""
    q = cayley(sample_skew(rng, n, bound))
    if det_sign == -1:
        q = q * reflection(n)
    elif det_sign != 1:
        raise ValueError("det_sign must be +1 or -1")
    return q


def sample_group(alg: Algebra, rng: Rng, bound: int):
    """Random group element of the family; bound caps integer parameters."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    n = alg.n
    u = sample_vec(rng, n, bound)
    if alg.family == "aff":
        return GroupElemA(sample_gl(rng, n, bound), u)
    if alg.family == "isl":
        return GroupElemA(sample_sl(rng, n, bound), u)
    if alg.family == "glvv":
        return GroupElemB(sample_gl(rng, n, bound), u, sample_covec(rng, n, bound))
    if alg.family == "io":
        sign = -1 if rng.coin() else 1
        return GroupElemA(sample_orthogonal(rng, n, bound, sign), u)
    return GroupElemA(sample_orthogonal(rng, n, bound, 1), u)


def sample_dual(alg: Algebra, rng: Rng, bound: int):
    """Random dual point of the family with integer coordinates."""
    n = alg.n
    if alg.family == "aff":
        return DualPointA(sample_int_mat(rng, n, n, bound), sample_covec(rng, n, bound))
    if alg.family == "isl":
        y = sample_int_mat(rng, n, n, bound).to_lists()
        y[n - 1][n - 1] = -sum(y[i][i] for i in range(n - 1))
        return DualPointA.traceless(Mat(y), sample_covec(rng, n, bound))
    if alg.family == "glvv":
        return DualPointB(sample_int_mat(rng, n, n, bound),
                          sample_covec(rng, n, bound), sample_vec(rng, n, bound))
    return DualPointC(sample_skew(rng, n, bound), sample_covec(rng, n, bound))


# -- coadjoint actions --------------------------------------------------------

def coad_A(a: GroupElemA, l: DualPointA) -> DualPointA:
    """(g, u) . (y, vstar) = (g y g^-1 + u (vstar g^-1), vstar g^-1)."""
    if a.n != l.n:
        raise ValueError("size mismatch between element and point")
    gi = inverse(a.g)
    vg = l.vstar * gi
    return DualPointA(a.g * l.y * gi + a.u * vg, vg)


def coad_B(b: GroupElemB, l: DualPointB) -> DualPointB:
    """Composite of the three factor actions, in the fixed factorization:

        (g, 0, 0):  (y, w, xi) -> (g y g^-1, w g^-1, g xi)
        (e, 0, v):  (y, w, xi) -> (y - xi v, w, xi)
        (e, u, 0):  (y, w, xi) -> (y + u w, w, xi)
    """
    if b.n != l.n:
        raise ValueError("size mismatch between element and point")
    gi = inverse(b.g)
    y = b.g * l.y * gi
    w = l.wstar * gi
    xi = b.g * l.xi
    y = y - xi * b.vstar
    y = y + b.u * w
    return DualPointB(y, w, xi)


def coad_C(a: GroupElemA, l: DualPointC) -> DualPointC:
    """Orthogonal inhomogeneous action: embed the point as
    (y, wstar, -wstar^T), act through coad_B with the element
    (g, u, -u^T), and project back.  Requires g^T g = I."""
    if a.n != l.n:
        raise ValueError("size mismatch between element and point")
    if a.g.transpose() * a.g != Mat.identity(a.n):
        raise ValueError("non-orthogonal")
    lb = DualPointB(l.y, l.wstar, -l.wstar.transpose())
    be = GroupElemB(a.g, a.u, -a.u.transpose())
    r = coad_B(be, lb)
    assert r.xi == -r.wstar.transpose(), "orthogonal action left the embedded dual"
    return DualPointC(r.y, r.wstar)


# -- triples, brackets, the involution and the embedding ---------------------

def triple_zero(n: int):
    return (Mat.zero(n, n), Mat.zero(n, 1), Mat.zero(1, n))


def sample_triple(rng: Rng, n: int, bound: int):
    return (sample_int_mat(rng, n, n, bound), sample_vec(rng, n, bound),
            sample_covec(rng, n, bound))


def bracket_b(t1, t2):
    """Bracket of the glvv algebra on (x, u, vstar) triples:

        [(x1,u1,v1), (x2,u2,v2)] = ([x1,x2], x1 u2 - x2 u1, -v2 x1 + v1 x2)

    The aff and orthogonal families are the sub-cases with vstar = 0
    (and skew x for the latter), so this is the only bracket needed.
    """
    x1, u1, v1 = t1
    x2, u2, v2 = t2
    return (x1 * x2 - x2 * x1, x1 * u2 - x2 * u1, -(v2 * x1) + v1 * x2)


def pairing(l: DualPointB, t) -> Rat:
    """<(y, wstar, xi), (x, u, vstar)> = tr(y x) + wstar u + vstar xi."""
    x, u, v = t
    return (l.y * x).trace() + scalar(l.wstar * u) + scalar(v * l.xi)


def theta(t):
    """The involution (x, u, vstar) -> (-x^T, -vstar^T, -u^T).

    Order 2, a bracket automorphism; its fixed set is exactly the embedded
    orthogonal algebra {(x, u, -u^T) : x skew}.
    """
    x, u, v = t
    return (-x.transpose(), -v.transpose(), -u.transpose())


def embed_M(t) -> Mat:
    """Bordered-matrix embedding (x, u, vstar) -> [[x, u], [vstar, 0]]."""
    x, u, v = t
    n = x.rows
    rows = [list(x.row_tuple(i)) + [u[i, 0]] for i in range(n)]
    rows.append(list(v.row_tuple(0)) + [Fraction(0)])
    return Mat(rows)


def _border_part(p: Mat) -> Mat:
    """Off-diagonal-block part of an (n+1) x (n+1) matrix: the last column
    above the corner plus the last row left of the corner."""
    m = p.rows
    out = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m - 1):
        out[i][m - 1] = p[i, m - 1]
        out[m - 1][i] = p[m - 1, i]
    return Mat(out)


def k_bracket(p: Mat, q: Mat) -> Mat:
    """Contracted bracket on gl(n+1) split into block-diagonal and border
    parts: the full commutator minus the border-border commutator (so the
    border part brackets to zero)."""
    if p.rows != q.rows or not p.is_square() or not q.is_square():
        raise ValueError("k_bracket needs equal square matrices")
    p1 = _border_part(p)
    q1 = _border_part(q)
    return (p * q - q * p) - (p1 * q1 - q1 * p1)


# -- algebra bases, the commutator form and the index -------------------------

def algebra_basis(alg: Algebra):
    """Fixed ordered basis as triples: matrix part (units in row-major
    order; traceless units plus consecutive-diagonal differences for isl;
    E_ij - E_ji, i < j, lexicographic for the orthogonal families), then
    the V part e_1..e_n, then the V* part for glvv."""
    n = alg.n
    out = []
    if alg.family in ("aff", "glvv"):
        for i in range(n):
            for j in range(n):
                out.append((Mat.unit(n, i, j), Mat.zero(n, 1), Mat.zero(1, n)))
    elif alg.family == "isl":
        for i in range(n):
            for j in range(n):
                if i != j:
                    out.append((Mat.unit(n, i, j), Mat.zero(n, 1), Mat.zero(1, n)))
        for i in range(n - 1):
            h = Mat.unit(n, i, i) - Mat.unit(n, i + 1, i + 1)
            out.append((h, Mat.zero(n, 1), Mat.zero(1, n)))
    else:
        for i in range(n):
            for j in range(i + 1, n):
                out.append((Mat.unit(n, i, j) - Mat.unit(n, j, i),
                            Mat.zero(n, 1), Mat.zero(1, n)))
    for i in range(n):
        out.append((Mat.zero(n, n), Mat.basis_col(n, i), Mat.zero(1, n)))
    if alg.family == "glvv":
        for i in range(n):
            out.append((Mat.zero(n, n), Mat.zero(n, 1), Mat.basis_row(n, i)))
    return out


_BRACKET_TABLE_CACHE: dict = {}


def _bracket_table(alg: Algebra):
    key = (alg.family, alg.n)
    table = _BRACKET_TABLE_CACHE.get(key)
    if table is None:
        basis = algebra_basis(alg)
        d = len(basis)
        table = [[bracket_b(basis[i], basis[j]) for j in range(i + 1, d)]
                 for i in range(d)]
        _BRACKET_TABLE_CACHE[key] = table
    return table


def _dual_triple(alg: Algebra, point) -> DualPointB:
    """View any family's dual point inside the glvv dual (zero fills)."""
    n = alg.n
    if alg.family in ("aff", "isl"):
        return DualPointB(point.y, point.vstar, Mat.zero(n, 1))
    if alg.family == "glvv":
        return point
    return DualPointB(point.y, point.wstar, Mat.zero(n, 1))


def commutator_form(alg: Algebra, point) -> Mat:
    """Skew matrix M(l)_ij = <l, [b_i, b_j]> over the fixed basis."""
    lb = _dual_triple(alg, point)
    table = _bracket_table(alg)
    d = len(table)
    m = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            v = pairing(lb, table[i][j - i - 1])
            m[i][j] = v
            m[j][i] = -v
    return Mat(m)


def index_of(alg: Algebra, samples: int, rng: Rng, bound: int = 3) -> int:
    """dim minus the maximal rank of the commutator form over random
    integer dual points."""
    if samples < 1:
        raise ValueError("need at least one sample")
    best = 0
    dim = alg.dim
    for _ in range(samples):
        point = sample_dual(alg, rng, bound)
        best = max(best, rank(commutator_form(alg, point)))
        if dim - best == 0:
            break
    return dim - best


# -- adjoint action on triples (independent check of the coadjoint) ----------

def ad_translation(u: Mat, vstar: Mat, t):
    """Ad of the translation (e, u, vstar) on a triple: exact nilpotent
    series id + ad Z + (1/2) ad Z ad Z for Z = (0, u, vstar)."""
    z = (Mat.zero(u.rows, u.rows), u, vstar)
    first = bracket_b(z, t)
    second = bracket_b(z, first)
    return tuple(a + b + Fraction(1, 2) * c for a, b, c in zip(t, first, second))


def Ad_B(b: GroupElemB, t):
    """Adjoint action of (g, u, vstar) through the fixed factorization."""
    gi = inverse(b.g)
    x, uu, vv = t
    t = (b.g * x * gi, b.g * uu, vv * gi)
    t = ad_translation(Mat.zero(b.n, 1), b.vstar, t)
    return ad_translation(b.u, Mat.zero(1, b.n), t)


# -- JSON codecs --------------------------------------------------------------

def algebra_from_json(obj) -> Algebra:
    try:
        return Algebra(str(obj["algebra"]), int(obj["n"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError("point JSON needs an algebra family and a size n") from exc


def dual_to_json(alg: Algebra, point) -> dict:
    out = {"algebra": alg.family, "n": alg.n, "y": mat_to_json(point.y)}
    if alg.family in ("aff", "isl"):
        out["vstar"] = mat_to_json(point.vstar)
    elif alg.family == "glvv":
        out["wstar"] = mat_to_json(point.wstar)
        out["xi"] = mat_to_json(point.xi)
    else:
        out["wstar"] = mat_to_json(point.wstar)
    return out


def dual_from_json(obj):
    """Parse a dual point; returns (Algebra, point)."""
    alg = algebra_from_json(obj)
    try:
        y = mat_from_json(obj["y"])
        if alg.family in ("aff", "isl"):
            point = DualPointA(y, mat_from_json(obj["vstar"]))
            if alg.family == "isl" and y.trace() != 0:
                raise ValueError("isl point needs tr(y) = 0")
        elif alg.family == "glvv":
            point = DualPointB(y, mat_from_json(obj["wstar"]), mat_from_json(obj["xi"]))
        else:
            point = DualPointC(y, mat_from_json(obj["wstar"]))
    except KeyError as exc:
        raise ValueError("point JSON is missing a component") from exc
    if point.n != alg.n:
        raise ValueError("point size does not match n")
    return alg, point


def group_to_json(alg: Algebra, elem) -> dict:
    out = {"algebra": alg.family, "n": alg.n,
           "g": mat_to_json(elem.g), "u": mat_to_json(elem.u)}
    if alg.family == "glvv":
        out["vstar"] = mat_to_json(elem.vstar)
    return out


def group_from_json(obj):
    alg = algebra_from_json(obj)
    try:
        g = mat_from_json(obj["g"])
        u = mat_from_json(obj["u"])
        if alg.family == "glvv":
            elem = GroupElemB(g, u, mat_from_json(obj["vstar"]))
        else:
            elem = GroupElemA(g, u)
    except KeyError as exc:
        raise ValueError("group JSON is missing a component") from exc
    if elem.n != alg.n:
        raise ValueError("group element size does not match n")
    return alg, elem
