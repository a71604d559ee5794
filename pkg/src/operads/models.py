"""Free bialgebra models on explicit combinatorial bases.

Words over a finite alphabet carry the free associative and Zinbiel
algebras; planar binary trees decorated with words carry the free
magmatic and duplicial algebras.  Each model packages its graded basis,
named products and named reduced coproducts behind one interface so the
relation checker and the idempotent engine can treat them uniformly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .linalg import LinComb, exact_rank
from . import trees
from .trees import LEAF, Y, leaf_count

LETTERS = "xyzuvwabcdefghij"


def words(alphabet, n):
    """All words of length n over the first `alphabet` letters."""
    return ["".join(w) for w in itertools.product(LETTERS[:alphabet], repeat=n)]


def bilinear(key_fn):
    """Extend a key-level binary map returning LinCombs to LinComb pairs."""
    def ext(a, b):
        out = LinComb.zero()
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                out = out + key_fn(k1, k2).scale(c1 * c2)
        return out
    return ext


def linear(key_fn):
    def ext(a):
        return a.map_keys(key_fn)
    return ext


# --- decorated tree keys ---------------------------------------------------

def tree_key(tree, word):
    return tree + ":" + word


def key_parts(key):
    tree, _, word = key.partition(":")
    return tree, word


# --- free associative algebra ----------------------------------------------

def as_concat(a, b):
    """Concatenation product on words, extended bilinearly."""
    return bilinear(lambda u, v: LinComb.of(u + v))(a, b)


def _deconcat_key(w):
    return LinComb((( w[:i], w[i:] ), 1) for i in range(1, len(w)))


def as_deconcat(a):
    """Reduced deconcatenation: w -> sum of proper two-block cuts."""
    return a.map_keys(_deconcat_key)


def _unshuffles(w):
    out = []
    n = len(w)
    for r in range(1, n):
        for picks in itertools.combinations(range(n), r):
            left = "".join(w[i] for i in picks)
            rest = "".join(w[i] for i in range(n) if i not in picks)
            out.append((left, rest))
    return out


def as_shuffle_coproduct(a):
    """Reduced unshuffle coproduct (the cocommutative Hopf coproduct)."""
    return a.map_keys(lambda w: LinComb(((p, 1) for p in _unshuffles(w))))


@lru_cache(maxsize=None)
def _shuffles(u, v):
    if not u:
        return (v,)
    if not v:
        return (u,)
    return tuple(u[0] + w for w in _shuffles(u[1:], v)) + tuple(
        v[0] + w for w in _shuffles(u, v[1:])
    )


def shuffle_product(a, b):
    return bilinear(
        lambda u, v: LinComb((w, 1) for w in _shuffles(u, v))
    )(a, b)


def zinb_half_shuffle(a, b):
    """Half-shuffle u < v: the first letter of u stays first."""
    def key_fn(u, v):
        if not u or not v:
            raise ValueError("half-shuffle needs positive-degree arguments")
        return LinComb((u[0] + w, 1) for w in _shuffles(u[1:], v))
    return bilinear(key_fn)(a, b)


# --- free magmatic algebra --------------------------------------------------

def _mag_prod_key(k1, k2):
    t1, w1 = key_parts(k1)
    t2, w2 = key_parts(k2)
    return LinComb.of(tree_key(trees.vee(t1, t2), w1 + w2))


def mag_product(a, b):
    return bilinear(_mag_prod_key)(a, b)


def mag_split(key):
    """The unique factorization of a non-generator Mag basis key."""
    t, w = key_parts(key)
    l, r = trees.split(t)
    nl = leaf_count(l)
    return tree_key(l, w[:nl]), tree_key(r, w[nl:])


def _mag_dual_key(key):
    t, _ = key_parts(key)
    if t == LEAF:
        return LinComb.zero()
    return LinComb.of(mag_split(key))


def mag_dual_coproduct(a):
    """delta(t vee s; uw) = (t;u) x (s;w); zero on generators."""
    return a.map_keys(_mag_dual_key)


@lru_cache(maxsize=None)
def _mag_liv_key(key):
    t, _ = key_parts(key)
    if t == LEAF:
        return LinComb.zero()
    ka, kb = mag_split(key)
    out = LinComb.of((ka, kb))
    for (a1, a2), c in _mag_liv_key(ka).items():
        out = out + LinComb.of((a1, _vee_keys(a2, kb)), c)
        out = out + LinComb.of((_vee_keys(a1, kb), a2), c)
    return out


def _vee_keys(k1, k2):
    t1, w1 = key_parts(k1)
    t2, w2 = key_parts(k2)
    return tree_key(trees.vee(t1, t2), w1 + w2)


def mag_livernet_coproduct(a):
    """The coproduct defined recursively by the Livernet compatibility."""
    return a.map_keys(_mag_liv_key)


@lru_cache(maxsize=None)
def _mag_hopf_key(key):
    t, _ = key_parts(key)
    if t == LEAF:
        return LinComb.zero()
    ka, kb = mag_split(key)
    da = _mag_hopf_key(ka)
    db = _mag_hopf_key(kb)
    out = LinComb.of((ka, kb)) + LinComb.of((kb, ka))
    for (a1, a2), c in da.items():
        out = out + LinComb.of((a1, _vee_keys(a2, kb)), c)
        out = out + LinComb.of((_vee_keys(a1, kb), a2), c)
    for (b1, b2), c in db.items():
        out = out + LinComb.of((_vee_keys(ka, b1), b2), c)
        out = out + LinComb.of((b1, _vee_keys(ka, b2)), c)
    for (a1, a2), c1 in da.items():
        for (b1, b2), c2 in db.items():
            out = out + LinComb.of((_vee_keys(a1, b1), _vee_keys(a2, b2)), c1 * c2)
    return out


def mag_hopf_coproduct(a):
    """The cocommutative coproduct built by recursion on the Hopf relation."""
    return a.map_keys(_mag_hopf_key)


# --- free duplicial algebra --------------------------------------------------

def _dup_left_key(k1, k2):
    t1, w1 = key_parts(k1)
    t2, w2 = key_parts(k2)
    return LinComb.of(tree_key(trees.under(t1, t2), w1 + w2))


def _dup_right_key(k1, k2):
    t1, w1 = key_parts(k1)
    t2, w2 = key_parts(k2)
    return LinComb.of(tree_key(trees.over(t1, t2), w1 + w2))


def dup_left(a, b):
    """x < y, realized by the Under grafting t\\s."""
    return bilinear(_dup_left_key)(a, b)


def dup_right(a, b):
    """x > y, realized by the Over grafting t/s."""
    return bilinear(_dup_right_key)(a, b)


def _dup_coproduct_key(key):
    t, w = key_parts(key)
    n = len(w)
    out = []
    for i in range(1, n):
        r, s = trees.path_cut(t, i)
        out.append(((tree_key(r, w[:i]), tree_key(s, w[i:])), 1))
    return LinComb(out)


def dup_coproduct(a):
    """Path-cut coproduct: one term per interior leaf of the tree."""
    return a.map_keys(_dup_coproduct_key)


def _right_edge_cuts(t):
    """Splittings t = t1 \\ t2 with both factors non-leaves."""
    out = []
    prefix = []
    cur = t
    while cur != LEAF:
        l, r = trees.split(cur)
        prefix.append(l)
        cur = r
        if cur != LEAF:
            t2 = cur
            # rebuild t1 = t with the subtree t2 replaced by a leaf
            t1 = LEAF
            for left in reversed(prefix):
                t1 = trees.vee(left, t1)
            out.append((t1, t2))
    return out


def _left_edge_cuts(t):
    """Splittings t = t1 / t2 with both factors non-leaves."""
    out = []
    suffix = []
    cur = t
    while cur != LEAF:
        l, r = trees.split(cur)
        suffix.append(r)
        cur = l
        if cur != LEAF:
            t1 = cur
            t2 = LEAF
            for right in reversed(suffix):
                t2 = trees.vee(t2, right)
            out.append((t1, t2))
    return out


def _dup_dleft_key(key):
    t, w = key_parts(key)
    out = []
    for t1, t2 in _right_edge_cuts(t):
        p = leaf_count(t1) - 1
        out.append(((tree_key(t1, w[:p]), tree_key(t2, w[p:])), 1))
    return LinComb(out)


def _dup_dright_key(key):
    t, w = key_parts(key)
    out = []
    for t1, t2 in _left_edge_cuts(t):
        p = leaf_count(t1) - 1
        out.append(((tree_key(t1, w[:p]), tree_key(t2, w[p:])), 1))
    return LinComb(out)


def dup_dleft(a):
    """Right-edge cutting coproduct, dual to the > product."""
    return a.map_keys(_dup_dleft_key)


def dup_dright(a):
    """Left-edge cutting coproduct, dual to the < product."""
    return a.map_keys(_dup_dright_key)


def dup_biduplicial_coproducts(a):
    return dup_dleft(a), dup_dright(a)


# --- Lie inside the tensor algebra -------------------------------------------

def lie_bracket(a, b):
    return as_concat(a, b) - as_concat(b, a)


def left_nested_bracket(word):
    """[..[[x1,x2],x3]..,xn] expanded into words; a single letter is itself."""
    acc = LinComb.of(word[0])
    for ch in word[1:]:
        acc = lie_bracket(acc, LinComb.of(ch))
    return acc


def lie_subspace(alphabet, n):
    """An ordered basis of the degree-n Lie polynomials, by bracket span."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    all_words = words(alphabet, n)
    pos = {w: i for i, w in enumerate(all_words)}
    basis = []
    rows = []  # candidate vectors kept so far, as coordinate lists
    for w in all_words:
        cand = left_nested_bracket(w)
        if not cand:
            continue
        vec = [Fraction(0)] * len(all_words)
        for k, c in cand.items():
            vec[pos[k]] = c
        trial = rows + [vec]
        if exact_rank(trial) > len(rows):
            rows = trial
            basis.append(cand)
    return basis


def lie_cobracket(a):
    """delta - tau delta, with delta the deconcatenation.

    Restricted to Lie polynomials this lands in the span of Lie tensor Lie
    through degree three.  It escapes that span in degree four: for
    X = [[[x,y],x],x] the value contains 2(xy+yx)(x)xx - 2xx(x)(xy+yx),
    and xy+yx is not a Lie polynomial.  No rescaling or antisymmetrized
    variant of the deconcatenation repairs this; see the package tests for
    the exact witnesses.
    """
    from .linalg import tensor_transpose
    d = as_deconcat(a)
    return d - tensor_transpose(d)


# --- model plumbing -----------------------------------------------------------

@dataclass(frozen=True)
class CooperadSpec:
    """How to present the cooperad side for the map phi.

    kind "as": the cooperad is the associative one; the single degree-n
    cooperation is the (n-1)-iterated reduced coproduct named by `delta`.
    kind "dual": an explicit dual basis of labeled n-ary cooperations.
    """
    kind: str
    delta: str = "delta"
    cooperations: Callable[[int], list] | None = None  # n -> [(label, fn)]
    dims: Callable[[int], int] | None = None


@dataclass(frozen=True)
class SplittingScheme:
    """A coalgebra splitting: one designated n-ary product monomial per n.

    kind "as_monomial": fold the named binary product right-nested, with
    an optional per-arity scalar.  kind "classical": same fold with the
    1/n! normalization of the symmetrized case.  kind "dual": dual-basis
    pairs (cooperation, n-ary operation) per arity.
    """
    kind: str
    product: str = "mul"
    scalar: Callable[[int], Fraction] = lambda k: Fraction(1)
    pairs: Callable[[int], list] | None = None  # n -> [(coop fn, nary op fn)]


@dataclass(frozen=True)
class BialgebraModel:
    name: str
    alphabet: int
    basis: Callable[[int], list]
    degree: Callable[[object], int]
    products: dict
    coproducts: dict
    generating_coproducts: tuple
    cooperad: CooperadSpec | None = None
    splitting: SplittingScheme | None = None
    classical: bool = False


def _word_degree(key):
    return len(key)


def _tree_key_degree_mag(key):
    return len(key_parts(key)[1])


_tree_key_degree_dup = _tree_key_degree_mag


def as_model(alphabet=1):
    """Free associative algebra with the deconcatenation coproduct."""
    return BialgebraModel(
        name="as",
        alphabet=alphabet,
        basis=lambda n: words(alphabet, n),
        degree=_word_degree,
        products={"mul": as_concat},
        coproducts={"delta": as_deconcat},
        generating_coproducts=("delta",),
        cooperad=CooperadSpec(kind="as", dims=lambda n: 1),
        splitting=SplittingScheme(kind="as_monomial", product="mul"),
    )


def classical_model(alphabet=2):
    """Tensor algebra with the unshuffle coproduct (classical Hopf case)."""
    return BialgebraModel(
        name="classical",
        alphabet=alphabet,
        basis=lambda n: words(alphabet, n),
        degree=_word_degree,
        products={"mul": as_concat},
        coproducts={"delta": as_shuffle_coproduct},
        generating_coproducts=("delta",),
        cooperad=None,
        splitting=SplittingScheme(
            kind="classical", product="mul",
            scalar=lambda k: Fraction(1, _factorial(k)),
        ),
        classical=True,
    )


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def zinbiel_model(alphabet=2):
    """Free Zinbiel algebra: half-shuffle product, deconcatenation coproduct."""
    return BialgebraModel(
        name="zinb",
        alphabet=alphabet,
        basis=lambda n: words(alphabet, n),
        degree=_word_degree,
        products={"left": zinb_half_shuffle, "star": shuffle_product},
        coproducts={"delta": as_deconcat},
        generating_coproducts=("delta",),
    )


def _mag_basis(alphabet):
    def basis(n):
        return [
            tree_key(t, w)
            for t in trees.enumerate_trees(n)
            for w in words(alphabet, n)
        ]
    return basis


def mag_tree_cooperation(t):
    """The cooperation dual to the tree t in the comagmatic cooperad."""
    if t == LEAF:
        return lambda lc: lc
    l, r = trees.split(t)
    fl = mag_tree_cooperation(l)
    fr = mag_tree_cooperation(r)

    def coop(lc):
        out = LinComb.zero()
        for key, c in mag_dual_coproduct(lc).items():
            k1, k2 = key
            piece = fl(LinComb.of(k1)).tensor(fr(LinComb.of(k2)))
            out = out + piece.scale(c)
        return out
    return coop


def mag_tree_operation(t):
    """The n-ary product indexed by a tree with n leaves."""
    def op(tensor_lc):
        out = LinComb.zero()
        for key, c in tensor_lc.items():
            slots = key if isinstance(key, tuple) else (key,)
            out = out + _mag_tree_apply(t, list(slots)).scale(c)
        return out
    return op


def _mag_tree_apply(t, slots):
    if t == LEAF:
        return LinComb.of(slots[0])
    l, r = trees.split(t)
    nl = leaf_count(l)
    return mag_product(_mag_tree_apply(l, slots[:nl]), _mag_tree_apply(r, slots[nl:]))


def _mag_dual_pairs(n):
    return [
        (mag_tree_cooperation(t), mag_tree_operation(t))
        for t in trees.enumerate_trees(n)
    ]


def mag_model(alphabet=1):
    """Free magmatic algebra with its dual, Livernet and Hopf coproducts."""
    return BialgebraModel(
        name="mag",
        alphabet=alphabet,
        basis=_mag_basis(alphabet),
        degree=_tree_key_degree_mag,
        products={"mul": mag_product},
        coproducts={
            "delta": mag_dual_coproduct,
            "liv": mag_livernet_coproduct,
            "hopf": mag_hopf_coproduct,
        },
        generating_coproducts=("delta",),
        cooperad=CooperadSpec(
            kind="dual",
            cooperations=lambda n: [
                (t, mag_tree_cooperation(t)) for t in trees.enumerate_trees(n)
            ],
            dims=lambda n: trees.catalan(n - 1),
        ),
        splitting=SplittingScheme(kind="dual", pairs=_mag_dual_pairs),
    )


def _dup_basis(alphabet):
    def basis(n):
        return [
            tree_key(t, w)
            for t in trees.enumerate_trees(n + 1)
            for w in words(alphabet, n)
        ]
    return basis


def dup_model(alphabet=1):
    """Free duplicial algebra with the path-cut coproduct."""
    return BialgebraModel(
        name="dup",
        alphabet=alphabet,
        basis=_dup_basis(alphabet),
        degree=_tree_key_degree_dup,
        products={"left": dup_left, "right": dup_right},
        coproducts={
            "delta": dup_coproduct,
            "dleft": dup_dleft,
            "dright": dup_dright,
        },
        generating_coproducts=("delta",),
        cooperad=CooperadSpec(kind="as", dims=lambda n: 1),
        splitting=SplittingScheme(kind="as_monomial", product="right"),
    )


def dup_tree_cooperation(t):
    """The cooperation dual to the duplicial monomial of the tree t.

    Mirrors the unique writing of t with n+1 leaves as
    (m(t_left) > x) < m(t_right) at the root.
    """
    if t == Y:
        return lambda lc: lc
    l, r = trees.split(t)

    if r == LEAF:
        fl = dup_tree_cooperation(l)

        def coop(lc):
            out = LinComb.zero()
            for key, c in dup_dright(lc).items():
                ka, km = key
                if _tree_key_degree_dup(km) == 1:
                    out = out + fl(LinComb.of(ka)).tensor(LinComb.of(km)).scale(c)
            return out
        return coop

    fr = dup_tree_cooperation(r)

    if l == LEAF:
        def coop(lc):
            out = LinComb.zero()
            for key, c in dup_dleft(lc).items():
                ku, kb = key
                if _tree_key_degree_dup(ku) == 1:
                    out = out + LinComb.of(ku).tensor(fr(LinComb.of(kb))).scale(c)
            return out
        return coop

    fl = dup_tree_cooperation(l)

    def coop(lc):
        out = LinComb.zero()
        for key, c in dup_dleft(lc).items():
            ku, kb = key
            for key2, c2 in dup_dright(LinComb.of(ku)).items():
                ka, km = key2
                if _tree_key_degree_dup(km) != 1:
                    continue
                piece = fl(LinComb.of(ka)).tensor(LinComb.of(km)).tensor(
                    fr(LinComb.of(kb))
                )
                out = out + piece.scale(c * c2)
        return out
    return coop


def dup_tree_operation(t):
    """The n-ary duplicial monomial indexed by a tree with n+1 leaves."""
    def op(tensor_lc):
        out = LinComb.zero()
        for key, c in tensor_lc.items():
            slots = key if isinstance(key, tuple) else (key,)
            out = out + _dup_tree_apply(t, list(slots)).scale(c)
        return out
    return op


def _dup_tree_apply(t, slots):
    if t == Y:
        return LinComb.of(slots[0])
    l, r = trees.split(t)
    if r == LEAF:
        return dup_right(_dup_tree_apply(l, slots[:-1]), LinComb.of(slots[-1]))
    p = leaf_count(l) - 1  # degree carried by the left factor
    right = _dup_tree_apply(r, slots[p + 1:])
    if l == LEAF:
        return dup_left(LinComb.of(slots[0]), right)
    u = dup_right(_dup_tree_apply(l, slots[:p]), LinComb.of(slots[p]))
    return dup_left(u, right)


def _bidup_dual_pairs(n):
    return [
        (dup_tree_cooperation(t), dup_tree_operation(t))
        for t in trees.enumerate_trees(n + 1)
    ]


def bidup_model(alphabet=1):
    """Free duplicial algebra seen as a biduplicial bialgebra."""
    return BialgebraModel(
        name="bidup",
        alphabet=alphabet,
        basis=_dup_basis(alphabet),
        degree=_tree_key_degree_dup,
        products={"left": dup_left, "right": dup_right},
        coproducts={"dleft": dup_dleft, "dright": dup_dright},
        generating_coproducts=("dleft", "dright"),
        cooperad=CooperadSpec(
            kind="dual",
            cooperations=lambda n: [
                (t, dup_tree_cooperation(t)) for t in trees.enumerate_trees(n + 1)
            ],
            dims=lambda n: trees.catalan(n),
        ),
        splitting=SplittingScheme(kind="dual", pairs=_bidup_dual_pairs),
    )


def lie_model(alphabet=2):
    """Lie polynomials inside the tensor algebra, with bracket and cobracket.

    Basis elements are LinCombs of words (the bracket-span basis), not
    atomic keys; the relation checker handles both.
    """
    return BialgebraModel(
        name="lie",
        alphabet=alphabet,
        basis=lambda n: lie_subspace(alphabet, n),
        degree=_word_degree,
        products={"mul": lie_bracket},
        coproducts={"delta": lie_cobracket},
        generating_coproducts=("delta",),
    )


def nil_model(alphabet=2):
    """Associative algebra truncated at degree 2: triple products vanish."""
    def trunc_concat(a, b):
        out = as_concat(a, b)
        return LinComb((k, c) for k, c in out.items() if len(k) <= 2)

    def basis(n):
        return words(alphabet, n) if n <= 2 else []

    return BialgebraModel(
        name="nil",
        alphabet=alphabet,
        basis=basis,
        degree=_word_degree,
        products={"mul": trunc_concat},
        coproducts={"delta": as_deconcat},
        generating_coproducts=("delta",),
    )


_MODEL_FACTORIES = {
    "as": as_model,
    "classical": classical_model,
    "zinb": zinbiel_model,
    "mag": mag_model,
    "dup": dup_model,
    "bidup": bidup_model,
    "lie": lie_model,
    "nil": nil_model,
}


def get_model(name, alphabet=None):
    if name not in _MODEL_FACTORIES:
        raise KeyError("unknown model %r (choose from %s)" % (name, sorted(_MODEL_FACTORIES)))
    factory = _MODEL_FACTORIES[name]
    return factory() if alphabet is None else factory(alphabet)


def model_names():
    return sorted(_MODEL_FACTORIES)
