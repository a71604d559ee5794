"""Exact rational linear algebra and formal linear combinations.

Everything in this package is built on two primitives: LinComb, a finite
linear combination of hashable basis keys with Fraction coefficients, and
fraction-free Gaussian elimination for ranks and kernels.  No floating
point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def as_slots(key):
    """View a basis key as a tuple of tensor slots.

    Atomic keys (strings) are one slot; tuples are already slot tuples.
    """
    return key if isinstance(key, tuple) else (key,)


def serialize_key(key):
    """Canonical string form of a basis key; tensor slots joined by '|'."""
    if isinstance(key, tuple):
        return "|".join(str(k) for k in key)
    return str(key)


class LinComb:
    """A finite map basis key -> nonzero Fraction.

    Instances are treated as immutable values; all arithmetic returns new
    objects and never stores a zero coefficient.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for k, c in items:
                c = Fraction(c)
                if not c:
                    continue
                acc = clean.get(k, 0) + c
                if acc:
                    clean[k] = acc
                elif k in clean:
                    del clean[k]
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def of(cls, key, coeff=1):
        return cls({key: Fraction(coeff)})

    def items(self):
        return self.terms.items()

    def coeff(self, key):
        return self.terms.get(key, Fraction(0))

    def support(self):
        return set(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc = out.get(k, 0) + c
            if acc:
                out[k] = acc
            elif k in out:
                del out[k]
        res = LinComb.__new__(LinComb)
        res.terms = out
        return res

    def __neg__(self):
        res = LinComb.__new__(LinComb)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        scalar = Fraction(scalar)
        res = LinComb.__new__(LinComb)
        res.terms = {} if not scalar else {k: c * scalar for k, c in self.terms.items()}
        return res

    __rmul__ = scale
    __mul__ = scale

    def tensor(self, other):
        out = {}
        for k1, c1 in self.terms.items():
            t1 = as_slots(k1)
            for k2, c2 in other.terms.items():
                key = t1 + as_slots(k2)
                acc = out.get(key, 0) + c1 * c2
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        res = LinComb.__new__(LinComb)
        res.terms = out
        return res

    def map_keys(self, fn):
        """Linear extension of a key -> LinComb map."""
        out = LinComb.zero()
        for k, c in self.terms.items():
            out = out + fn(k).scale(c)
        return out

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kc: serialize_key(kc[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = ["{}*{}".format(c, serialize_key(k)) for k, c in self.sorted_items()]
        return " + ".join(parts)


def frac_str(c):
    """Rationals render as "p/q", or "p" when the denominator is 1."""
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def lincomb_json(lc):
    """JSON-ready dict {serialized key: "p/q"} with sorted keys."""
    return {serialize_key(k): frac_str(c) for k, c in sorted(
        lc.items(), key=lambda kv: serialize_key(kv[0])
    )}


def matrix_json(m):
    return [[frac_str(c) for c in row] for row in m]


def lincomb_add(a, b):
    return a + b


def lincomb_tensor(a, b):
    return a.tensor(b)


def tensor_transpose(a):
    """Switch the two slots of every key: (k1,k2) -> (k2,k1)."""
    out = {}
    for k, c in a.terms.items():
        if not isinstance(k, tuple) or len(k) != 2:
            raise ValueError("tensor_transpose expects 2-slot tensor keys, got %r" % (k,))
        out[(k[1], k[0])] = c
    res = LinComb.__new__(LinComb)
    res.terms = out
    return res


# --- fraction-free elimination -------------------------------------------

def _integer_rows(m):
    """Copy of m with each row scaled to integers (kills denominators)."""
    rows = []
    for row in m:
        fr = [Fraction(x) for x in row]
        mult = lcm(*(f.denominator for f in fr)) if fr else 1
        rows.append([int(f * mult) for f in fr])
    return rows


def _bareiss(m):
    """Fraction-free (Bareiss) row echelon of an integer matrix.

    Returns (echelon rows, pivot column list).  Input is not modified.
    """
    a = _integer_rows(m)
    nr = len(a)
    nc = len(a[0]) if nr else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return a, pivots


def exact_rank(m):
    if not m or not m[0]:
        return 0
    return len(_bareiss(m)[1])


def kernel_basis(m):
    """Basis of the right kernel, one vector per free column.

    Vectors are Fraction lists; the free coordinate of each is 1.
    """
    if not m:
        return []
    nc = len(m[0])
    if nc == 0:
        return []
    ech, pivots = _bareiss(m)
    pivot_set = set(pivots)
    free = [c for c in range(nc) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            p = pivots[r]
            s = sum(Fraction(ech[r][c]) * v[c] for c in range(p + 1, nc) if v[c])
            v[p] = -s / ech[r][p]
        basis.append(v)
    return basis


def linear_solve(mat, rhs):
    """One exact solution of mat @ x = rhs, or None if inconsistent.

    mat is a list of rows; free variables are set to zero.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(mat)]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols]:
            return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][cols]
    return x


def mat_mul(a, b):
    if not a or not b:
        return []
    n, k, mcols = len(a), len(b), len(b[0])
    out = [[Fraction(0)] * mcols for _ in range(n)]
    for i in range(n):
        ai = a[i]
        for j in range(k):
            x = ai[j]
            if x:
                bj = b[j]
                row = out[i]
                for c in range(mcols):
                    if bj[c]:
                        row[c] += x * bj[c]
    return out


def same_column_space(a, b):
    """Do the columns of a and b span the same subspace?  Exact ranks."""
    if not a and not b:
        return True
    ra = exact_rank(a) if a else 0
    rb = exact_rank(b) if b else 0
    if ra != rb:
        return False
    if ra == 0:
        return True
    stacked = [ra_row + rb_row for ra_row, rb_row in zip(a, b)]
    return exact_rank(stacked) == ra


class GradedEndo:
    """A degree-indexed family of exact matrices over a declared basis.

    ``bases[n]`` is the ordered basis of the degree-n component and
    ``mats[n]`` the matrix of the map there (columns = images of basis
    elements, written in the same basis).
    """

    def __init__(self, bases, mats):
        for n, mat in mats.items():
            d = len(bases[n])
            if len(mat) != d or any(len(row) != d for row in mat):
                raise ValueError("matrix shape mismatch in degree %d" % n)
        self.bases = bases
        self.mats = mats
        self._index = {
            key: (n, i) for n, basis in bases.items() for i, key in enumerate(basis)
        }

    @classmethod
    def from_function(cls, bases, fn):
        mats = {}
        for n, basis in bases.items():
            d = len(basis)
            pos = {key: i for i, key in enumerate(basis)}
            mat = [[Fraction(0)] * d for _ in range(d)]
            for j, key in enumerate(basis):
                img = fn(LinComb.of(key))
                for k, c in img.items():
                    if k not in pos:
                        raise ValueError("image leaves the declared basis: %r" % (k,))
                    mat[pos[k]][j] = c
            mats[n] = mat
        return cls(bases, mats)

    @classmethod
    def identity(cls, bases):
        mats = {
            n: [[Fraction(1) if i == j else Fraction(0) for j in range(len(b))]
                for i in range(len(b))]
            for n, b in bases.items()
        }
        return cls(bases, mats)

    def apply(self, lc):
        out = LinComb.zero()
        for key, c in lc.items():
            n, j = self._index[key]
            col = [(self.mats[n][i][j], self.bases[n][i]) for i in range(len(self.bases[n]))]
            out = out + LinComb((k, x * c) for x, k in col if x)
        return out

    def compose(self, other):
        mats = {n: mat_mul(self.mats[n], other.mats[n]) for n in self.mats}
        return GradedEndo(self.bases, mats)

    def __add__(self, other):
        mats = {
            n: [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.mats[n], other.mats[n])]
            for n in self.mats
        }
        return GradedEndo(self.bases, mats)

    def __sub__(self, other):
        mats = {
            n: [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.mats[n], other.mats[n])]
            for n in self.mats
        }
        return GradedEndo(self.bases, mats)

    def scale(self, scalar):
        scalar = Fraction(scalar)
        mats = {n: [[x * scalar for x in row] for row in mat] for n, mat in self.mats.items()}
        return GradedEndo(self.bases, mats)

    def rank(self, n):
        mat = self.mats[n]
        return exact_rank(mat) if mat else 0

    def __eq__(self, other):
        return isinstance(other, GradedEndo) and self.mats == other.mats
