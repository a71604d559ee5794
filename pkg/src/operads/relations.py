"""Distributive compatibility relations as data, plus an exhaustive checker.

A relation describes the right-hand side of delta(mu(a, b)) as a sum of
composites: apply coproducts to the inputs, permute the resulting tensor
slots, then apply products blockwise.  The placeholder symbols "delta"
and "mu" resolve to whatever pair is being checked; any other symbol is
looked up in the model, so one relation can mix several operations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .linalg import LinComb, as_slots


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    in_coops: tuple   # one symbol per input: "id", "delta", or a model symbol
    perm: tuple       # output slot j reads input slot perm[j]
    out_ops: tuple    # "id" (1 slot), "mu" or a model symbol (2 slots)

    def is_phi1(self):
        return all(s == "id" for s in self.in_coops)


@dataclass(frozen=True)
class CompatExpr:
    arity: int
    terms: tuple

    def phi1(self):
        return CompatExpr(self.arity, tuple(t for t in self.terms if t.is_phi1()))

    def phi2(self):
        return CompatExpr(self.arity, tuple(t for t in self.terms if not t.is_phi1()))


def _op_arity(sym):
    return 1 if sym == "id" else 2


def term_from_dict(d):
    return Term(
        coeff=Fraction(d["coeff"]),
        in_coops=tuple(d["inCoops"]),
        perm=tuple(d["perm"]),
        out_ops=tuple(d["outOps"]),
    )


def expr_from_dict(d):
    terms = tuple(term_from_dict(t) for t in d["terms"])
    expr = CompatExpr(arity=d.get("arity", 2), terms=terms)
    for t in terms:
        produced = sum(_op_arity(s) for s in t.in_coops)
        consumed = sum(_op_arity(s) for s in t.out_ops)
        if produced != consumed or sorted(t.perm) != list(range(produced)):
            raise ValueError("ill-typed relation term: %r" % (t,))
        if len(t.in_coops) != expr.arity:
            raise ValueError("term arity mismatch: %r" % (t,))
    return expr


def load_library():
    """The shipped relation library, keyed by name."""
    text = resources.files("operads").joinpath("data/relations.json").read_text()
    raw = json.loads(text)
    return {name: expr_from_dict(entry) for name, entry in raw.items()}


_LIBRARY = None


def get_relation(name):
    global _LIBRARY
    if _LIBRARY is None:
        _LIBRARY = load_library()
    if name not in _LIBRARY:
        raise KeyError("unknown relation %r (choose from %s)" % (name, sorted(_LIBRARY)))
    return _LIBRARY[name]


def relation_names():
    global _LIBRARY
    if _LIBRARY is None:
        _LIBRARY = load_library()
    return sorted(_LIBRARY)


def _resolve_coop(model, sym, delta_sym):
    if sym == "delta":
        sym = delta_sym
    return model.coproducts[sym]


def _resolve_op(model, sym, mu_sym):
    if sym == "mu":
        sym = mu_sym
    return model.products[sym]


def eval_compat(expr, model, args, mu="mul", delta="delta"):
    """Evaluate the relation right-hand side on a tuple of LinCombs."""
    if len(args) != expr.arity:
        raise ValueError("expected %d arguments, got %d" % (expr.arity, len(args)))
    total = LinComb.zero()
    for term in expr.terms:
        # tensor of per-input (co)products, keys as flat slot tuples
        inter = LinComb.of(())
        for sym, arg in zip(term.in_coops, args):
            piece = arg if sym == "id" else _resolve_coop(model, sym, delta)(arg)
            inter = inter.tensor(piece)
            if not inter:
                break
        if not inter:
            continue
        permuted = LinComb(
            (tuple(key[p] for p in term.perm), c) for key, c in inter.items()
        )
        for key, c in permuted.items():
            slots = as_slots(key)
            blocks = []
            pos = 0
            for sym in term.out_ops:
                k = _op_arity(sym)
                chunk = slots[pos:pos + k]
                pos += k
                if sym == "id":
                    blocks.append(LinComb.of(chunk[0]))
                else:
                    op = _resolve_op(model, sym, mu)
                    blocks.append(op(LinComb.of(chunk[0]), LinComb.of(chunk[1])))
            out = blocks[0]
            for b in blocks[1:]:
                out = out.tensor(b)
            total = total + out.scale(c * term.coeff)
    return total


@dataclass
class RelationReport:
    holds: bool
    checked_pairs: int
    first_failure: tuple | None = None  # (degrees, pair, lhs, rhs)

    def to_json_dict(self):
        d = {"holds": self.holds, "checkedPairs": self.checked_pairs}
        if self.first_failure is not None:
            degs, pair, lhs, rhs = self.first_failure
            d["firstFailure"] = {
                "degrees": list(degs),
                "pair": [repr(p) for p in pair],
                "lhs": repr(lhs),
                "rhs": repr(rhs),
            }
        return d


def _as_lincomb(entry):
    return entry if isinstance(entry, LinComb) else LinComb.of(entry)


def _coproduct_on_first(coproduct, two_slot_lc):
    out = LinComb.zero()
    for (k1, k2), c in two_slot_lc.items():
        head = coproduct(LinComb.of(k1))
        if head:
            out = out + head.tensor(LinComb.of(k2)).scale(c)
    return out


def check_nap_colaw(model, delta_sym, max_degree):
    """(delta x Id) delta = (Id x tau)(delta x Id) delta on every basis key."""
    coproduct = model.coproducts[delta_sym]
    checked = 0
    for n in range(1, max_degree + 1):
        for key in model.basis(n):
            lc = _as_lincomb(key)
            lhs = _coproduct_on_first(coproduct, coproduct(lc))
            rhs = LinComb(
                ((k[0], k[2], k[1]), c) for k, c in lhs.items()
            )
            checked += 1
            if lhs != rhs:
                return RelationReport(
                    holds=False,
                    checked_pairs=checked,
                    first_failure=((n,), (lc,), lhs, rhs),
                )
    return RelationReport(holds=True, checked_pairs=checked)


def check_relation(model, delta_sym, mu_sym, relation_name, max_degree):
    """Compare delta(mu(a,b)) with the relation on every basis pair.

    Exhaustive over pairs with deg a + deg b <= max_degree; exact. A
    failing pair is reported, not raised.
    """
    expr = get_relation(relation_name)
    coproduct = model.coproducts[delta_sym]
    product = model.products[mu_sym]
    checked = 0
    for da in range(1, max_degree):
        for db in range(1, max_degree - da + 1):
            for a in model.basis(da):
                la = _as_lincomb(a)
                for b in model.basis(db):
                    lb = _as_lincomb(b)
                    lhs = coproduct(product(la, lb))
                    rhs = eval_compat(expr, model, (la, lb), mu=mu_sym, delta=delta_sym)
                    checked += 1
                    if lhs != rhs:
                        return RelationReport(
                            holds=False,
                            checked_pairs=checked,
                            first_failure=((da, db), (la, lb), lhs, rhs),
                        )
    return RelationReport(holds=True, checked_pairs=checked)
