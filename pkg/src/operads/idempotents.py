"""Convolution algebra of graded endomorphisms and the idempotent zoo.

All idempotents are built as plain LinComb -> LinComb functions and then
materialized degreewise into exact matrices (GradedEndo) over a model's
declared basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import GradedEndo, LinComb, as_slots
from .models import BialgebraModel, left_nested_bracket, words


@dataclass(frozen=True)
class ConvolutionContext:
    model: BialgebraModel
    mu: str = "mul"
    delta: str = "delta"

    @property
    def product(self):
        return self.model.products[self.mu]

    @property
    def coproduct(self):
        return self.model.coproducts[self.delta]


def memoized(fn):
    cache = {}

    def wrapped(lc):
        out = LinComb.zero()
        for key, c in lc.items():
            if key not in cache:
                cache[key] = fn(LinComb.of(key))
            out = out + cache[key].scale(c)
        return out
    return wrapped


def identity_map(lc):
    return lc


def convolve(ctx, f, g):
    """f * g = mu (f x g) delta, with the reduced coproduct."""
    product = ctx.product
    coproduct = ctx.coproduct

    def conv(lc):
        out = LinComb.zero()
        for key, c in coproduct(lc).items():
            k1, k2 = key
            out = out + product(f(LinComb.of(k1)), g(LinComb.of(k2))).scale(c)
        return out
    return memoized(conv)


def convolution_power(ctx, f, n):
    if n < 1:
        raise ValueError("convolution power needs n >= 1")
    out = f
    for _ in range(n - 1):
        out = convolve(ctx, f, out)
    return out


def model_bases(model, max_degree):
    return {n: list(model.basis(n)) for n in range(1, max_degree + 1)}


def materialize(model, fn, max_degree):
    return GradedEndo.from_function(model_bases(model, max_degree), fn)


_EULERIAN_CACHE = {}


def eulerian_family(ctx, max_degree):
    """The maps e^(1), ..., e^(max_degree) of the convolution-log family."""
    cache_key = (ctx.model.name, ctx.model.alphabet, ctx.mu, ctx.delta, max_degree)
    if cache_key in _EULERIAN_CACHE:
        return _EULERIAN_CACHE[cache_key]
    powers = [identity_map]
    for n in range(2, max_degree + 1):
        powers.append(convolve(ctx, identity_map, powers[-1]))

    def e1(lc):
        out = LinComb.zero()
        for n, p in enumerate(powers, start=1):
            sign = Fraction((-1) ** (n - 1), n)
            out = out + p(lc).scale(sign)
        return out

    family = [memoized(e1)]
    fact = 1
    conv = family[0]
    for i in range(2, max_degree + 1):
        conv = convolve(ctx, family[0], conv)
        fact *= i
        family.append(_scaled(conv, Fraction(1, fact)))
    _EULERIAN_CACHE[cache_key] = family
    return family


def _scaled(fn, scalar):
    def scaled(lc):
        return fn(lc).scale(scalar)
    return scaled


def eulerian_map(ctx, i, max_degree):
    """The i-th Eulerian idempotent as a function (classical context)."""
    if i < 1:
        raise ValueError("Eulerian index must be >= 1")
    return eulerian_family(ctx, max_degree)[i - 1]


def eulerian(ctx, i, max_degree):
    return materialize(ctx.model, eulerian_map(ctx, i, max_degree), max_degree)


def dynkin_map(lc):
    """word -> (1/n) [..[[x1,x2],x3]..,xn]."""
    out = LinComb.zero()
    for w, c in lc.items():
        out = out + left_nested_bracket(w).scale(Fraction(c, len(w)))
    return out


def dynkin(max_degree, alphabet=2):
    from .models import classical_model
    return materialize(classical_model(alphabet), dynkin_map, max_degree)


def geometric_map(ctx, max_degree):
    """e = sum_{n>=1} (-1)^{n-1} Id*^n; truncates exactly per degree."""
    powers = [identity_map]
    for n in range(2, max_degree + 1):
        powers.append(convolve(ctx, identity_map, powers[-1]))

    def geo(lc):
        out = LinComb.zero()
        for n, p in enumerate(powers, start=1):
            out = out + p(lc).scale((-1) ** (n - 1))
        return out
    return memoized(geo)


def geometric_idempotent(ctx, max_degree):
    return materialize(ctx.model, geometric_map(ctx, max_degree), max_degree)


def iterated_coproduct(coproduct, k):
    """The k-iterated reduced coproduct (k+1 output slots); k=0 is Id."""
    def iterate(lc):
        cur = lc
        for step in range(k):
            nxt = LinComb.zero()
            for key, c in cur.items():
                slots = as_slots(key)
                head = coproduct(LinComb.of(slots[0]))
                if head:
                    tail = LinComb.of(slots[1:]) if len(slots) > 1 else None
                    piece = head if tail is None else head.tensor(tail)
                    nxt = nxt + piece.scale(c)
            cur = nxt
            if not cur:
                break
        return cur
    return iterate


def fold_product(product, tensor_lc, scalar=Fraction(1)):
    """Right-nested product of the slots of every tensor key."""
    out = LinComb.zero()
    for key, c in tensor_lc.items():
        slots = as_slots(key)
        acc = LinComb.of(slots[-1])
        for s in reversed(slots[:-1]):
            acc = product(LinComb.of(s), acc)
        out = out + acc.scale(c * scalar)
    return out


def apply_splitting(model, scheme, k, tensor_lc):
    """s(k) applied to a k-slot tensor; only monomial-style schemes."""
    if scheme.kind not in ("as_monomial", "classical"):
        raise ValueError("splitting scheme %r has no single monomial" % scheme.kind)
    return fold_product(model.products[scheme.product], tensor_lc, scheme.scalar(k))


def omega_map(model, scheme, n, max_degree, ctx=None):
    """omega^[n]: split after the arity-n cooperation, then multiply back."""
    if n < 2:
        raise ValueError("omega is defined for arity >= 2")
    if scheme.kind in ("as_monomial",):
        coproduct = model.coproducts["delta"]
        iterate = iterated_coproduct(coproduct, n - 1)

        def omega(lc):
            return fold_product(model.products[scheme.product], iterate(lc), scheme.scalar(n))
        return memoized(omega)
    if scheme.kind == "dual":
        pairs = scheme.pairs(n)

        def omega(lc):
            out = LinComb.zero()
            for coop, op in pairs:
                out = out + op(coop(lc))
            return out
        return memoized(omega)
    if scheme.kind == "classical":
        if ctx is None:
            ctx = ConvolutionContext(model)
        family = eulerian_family(ctx, max_degree)

        def omega(lc):
            out = LinComb.zero()
            for k in range(n, max_degree + 1):
                out = out + family[k - 1](lc)
            return out
        return memoized(omega)
    raise ValueError("unknown splitting scheme kind %r" % scheme.kind)


def omega(model, scheme, n, max_degree):
    return materialize(model, omega_map(model, scheme, n, max_degree), max_degree)


def versal_idempotent_map(model, scheme, max_degree):
    """e = (Id - omega^[2])(Id - omega^[3]) ... , finite in each degree."""
    ctx = ConvolutionContext(model) if scheme.kind == "classical" else None
    omegas = [
        omega_map(model, scheme, n, max_degree, ctx=ctx)
        for n in range(2, max_degree + 1)
    ]

    def versal(lc):
        cur = lc
        for om in reversed(omegas):
            cur = cur - om(cur)
        return cur
    return memoized(versal)


def versal_idempotent(model, scheme=None, max_degree=6):
    if scheme is None:
        scheme = model.splitting
    if scheme is None:
        raise ValueError("model %s declares no splitting scheme" % model.name)
    return materialize(model, versal_idempotent_map(model, scheme, max_degree), max_degree)
