"""Degreewise structure checks: the map phi, primitives, PBW expansions.

The map phi sends an n-ary operation mu to the functional reading off the
coefficient of x1 x ... x xn in delta(mu(x1,...,xn)) over n distinct
letters.  Its rank decides whether a model sits in the isomorphism or the
split-epimorphism regime, which in turn drives the idempotent engine and
the PBW-analogue expansion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import LinComb, exact_rank, kernel_basis
from .models import LETTERS, get_model, key_parts, tree_key
from .trees import enumerate_trees, leaf_count
from .idempotents import (
    apply_splitting,
    iterated_coproduct,
    versal_idempotent_map,
)


def _word_of(key):
    return key_parts(key)[1] if ":" in key else key


def multilinear_basis(model, n):
    """Degree-n basis keys decorated with the identity word x1...xn.

    Built directly rather than by filtering basis(n), whose size grows
    like (alphabet size)^n.
    """
    idw = LETTERS[:n]
    template = model.basis(1)[0]
    if ":" not in template:
        return [idw]
    l1 = leaf_count(key_parts(template)[0])
    l2 = leaf_count(key_parts(model.basis(2)[0])[0])
    leaves = l1 + (l2 - l1) * (n - 1)
    return [tree_key(t, idw) for t in enumerate_trees(leaves)]


def generator_key(model, letter):
    """The degree-1 basis key decorated with the given letter."""
    template = model.basis(1)[0]
    if ":" in template:
        return tree_key(key_parts(template)[0], letter)
    return letter


def _cooperations(model, n):
    spec = model.cooperad
    if spec is None:
        raise ValueError("model %s declares no cooperad" % model.name)
    if spec.kind == "as":
        delta = model.coproducts[spec.delta]
        return [(None, iterated_coproduct(delta, n - 1))]
    return list(spec.cooperations(n))


def phi_map(model, n):
    """Matrix of phi in degree n: rows = cooperad basis, cols = operations."""
    big = get_model(model.name, n) if model.alphabet < n else model
    cols = multilinear_basis(big, n)
    coops = _cooperations(big, n)
    target = tuple(generator_key(big, LETTERS[i]) for i in range(n))
    if n == 1:
        target = target[0]
    mat = []
    for _, coop in coops:
        row = []
        for key in cols:
            img = coop(LinComb.of(key))
            row.append(img.coeff(target))
        mat.append(row)
    return mat


@dataclass
class H2Report:
    verdict: str  # "iso", "epi-with-splitting", "fail", "unsupported"
    per_degree: list = field(default_factory=list)

    def to_json_dict(self):
        return {
            "verdict": self.verdict,
            "perDegree": [
                {"degree": n, "dimA": da, "dimC": dc, "rankPhi": r}
                for (n, da, dc, r) in self.per_degree
            ],
        }


def check_h2(model, max_degree):
    """Classify phi degreewise: isomorphism, split epimorphism, or failure."""
    if model.cooperad is None:
        return H2Report(verdict="unsupported")
    rows = []
    all_iso = True
    all_epi = True
    for n in range(1, max_degree + 1):
        mat = phi_map(model, n)
        dim_c = len(mat)
        dim_a = len(mat[0]) if mat else 0
        rank = exact_rank(mat) if mat and mat[0] else 0
        rows.append((n, dim_a, dim_c, rank))
        if not (dim_a == dim_c == rank):
            all_iso = False
        if rank != dim_c:
            all_epi = False
    if all_iso:
        return H2Report(verdict="iso", per_degree=rows)
    if all_epi and _splitting_section_ok(model, max_degree):
        return H2Report(verdict="epi-with-splitting", per_degree=rows)
    return H2Report(verdict="fail", per_degree=rows)


def _splitting_section_ok(model, max_degree):
    """Check phi(s(n)) = id on the cooperad side, exactly, per degree."""
    scheme = model.splitting
    if scheme is None or scheme.kind not in ("as_monomial", "classical"):
        return False
    for n in range(2, max_degree + 1):
        big = get_model(model.name, n)
        gens = LinComb.of(tuple(generator_key(big, LETTERS[i]) for i in range(n)))
        monomial = apply_splitting(big, scheme, n, gens)
        _, coop = _cooperations(big, n)[0]
        img = coop(monomial)
        target = tuple(generator_key(big, LETTERS[i]) for i in range(n))
        if img.coeff(target) != 1:
            return False
    return True


def lincombs_to_columns(lincombs, basis):
    """Matrix whose columns are the given LinCombs in the given basis."""
    pos = {k: i for i, k in enumerate(basis)}
    mat = [[Fraction(0)] * len(lincombs) for _ in basis]
    for j, lc in enumerate(lincombs):
        for k, c in lc.items():
            mat[pos[k]][j] = c
    return mat


def primitive_part(model, n):
    """Exact basis of the joint kernel of all generating reduced coproducts."""
    basis = list(model.basis(n))
    if n == 1:
        return [LinComb.of(k) for k in basis]
    pos = {k: i for i, k in enumerate(basis)}
    rows = []
    row_index = {}
    columns = []
    for key in basis:
        col = {}
        for sym in model.generating_coproducts:
            img = model.coproducts[sym](LinComb.of(key))
            for tkey, c in img.items():
                rkey = (sym, tkey)
                if rkey not in row_index:
                    row_index[rkey] = len(row_index)
                col[row_index[rkey]] = col.get(row_index[rkey], 0) + c
        columns.append(col)
    nrows = len(row_index)
    if nrows == 0:
        return [LinComb.of(k) for k in basis]
    mat = [[Fraction(0)] * len(basis) for _ in range(nrows)]
    for j, col in enumerate(columns):
        for i, c in col.items():
            mat[i][j] = c
    vecs = kernel_basis(mat)
    return [
        LinComb((basis[i], v[i]) for i in range(len(basis)) if v[i])
        for v in vecs
    ]


@dataclass(frozen=True)
class PbwComponent:
    arity: int
    label: object  # None for the associative cooperad, a tree for dual bases
    tensor: LinComb


def _apply_slotwise(fn, tensor_lc):
    from .linalg import as_slots
    out = LinComb.zero()
    for key, c in tensor_lc.items():
        piece = None
        for slot in as_slots(key):
            img = fn(LinComb.of(slot))
            piece = img if piece is None else piece.tensor(img)
            if not piece:
                break
        if piece:
            out = out + piece.scale(c)
    return out


def pbw_expand(model, a, scheme=None, max_degree=None):
    """Decompose a into primitive tensor components, one per cooperation.

    Reassembling the components through the splitting monomials returns
    the input exactly; see pbw_reassemble.
    """
    if scheme is None:
        scheme = model.splitting
    if max_degree is None:
        max_degree = max(model.degree(k) for k in a.support())
    e = versal_idempotent_map(model, scheme, max_degree)
    comps = []
    if scheme.kind in ("as_monomial", "classical"):
        delta = model.coproducts["delta"]
        for k in range(1, max_degree + 1):
            tensor = iterated_coproduct(delta, k - 1)(a)
            comp = _apply_slotwise(e, tensor)
            if comp:
                comps.append(PbwComponent(arity=k, label=None, tensor=comp))
    elif scheme.kind == "dual":
        for k in range(1, max_degree + 1):
            for label_coop, pair in zip(model.cooperad.cooperations(k), scheme.pairs(k)):
                label, coop = label_coop
                comp = _apply_slotwise(e, coop(a))
                if comp:
                    comps.append(PbwComponent(arity=k, label=label, tensor=comp))
    else:
        raise ValueError("unknown splitting scheme kind %r" % scheme.kind)
    return comps


def pbw_reassemble(model, comps, scheme=None):
    if scheme is None:
        scheme = model.splitting
    out = LinComb.zero()
    if scheme.kind in ("as_monomial", "classical"):
        for comp in comps:
            out = out + apply_splitting(model, scheme, comp.arity, comp.tensor)
        return out
    ops = {}
    for comp in comps:
        if comp.arity not in ops:
            labels = [lbl for lbl, _ in model.cooperad.cooperations(comp.arity)]
            pair_ops = [op for _, op in scheme.pairs(comp.arity)]
            ops[comp.arity] = dict(zip(labels, pair_ops))
        out = out + ops[comp.arity][comp.label](comp.tensor)
    return out


def composite_dims(c_dim, p_dim, n):
    """dim of (C o P)_n for one-generator nonsymmetric composites."""
    # weighted count of k-tuples with total degree n
    tuples = {0: {0: 1}}  # k -> degree -> count
    total = 0
    counts = [1] + [0] * n  # counts[d] after k factors
    for k in range(1, n + 1):
        new = [0] * (n + 1)
        for d in range(k - 1, n):
            if counts[d]:
                for dn in range(1, n - d + 1):
                    new[d + dn] += counts[d] * p_dim(dn)
        counts = new
        total += c_dim(k) * counts[n]
    return total


@dataclass
class StructureIsoReport:
    ok: bool
    per_degree: list

    def to_json_dict(self):
        return {
            "ok": self.ok,
            "perDegree": [
                {"degree": n, "dimA": da, "composite": comp}
                for (n, da, comp) in self.per_degree
            ],
        }


def verify_structure_iso(c_dim, model, p_dim, max_degree):
    """Compare dim A_n with the composite count sum over cooperation shapes."""
    rows = []
    ok = True
    for n in range(1, max_degree + 1):
        big = get_model(model.name, n) if model.alphabet < n else model
        dim_a = len(multilinear_basis(big, n))
        comp = composite_dims(c_dim, p_dim, n)
        rows.append((n, dim_a, comp))
        if dim_a != comp:
            ok = False
    return StructureIsoReport(ok=ok, per_degree=rows)
