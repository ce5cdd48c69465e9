"""Ideal quotients, saturation, homogenization of ideals and elimination.

Two elimination routes are provided.  :func:`eliminate_saturation`
homogenizes the generators with a fresh variable x0, saturates by x0 using
syzygy-based quotients under an arbitrary (by default degrevlex) order, and
reads off the degree-zero part by setting every weight-1 variable to zero.
:func:`eliminate_block` is the classical route through a block-elimination
order and serves as the independent check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UsageError
from .groebner import (
    IdealBasis,
    ModuleBasis,
    groebner_basis,
    ideal_equal,
    syzygies,
)
from .orders import DEGREVLEX, ModuleOrder, ModuleScheme, MonomialOrder
from .polyring import (
    Polynomial,
    RingSpec,
    VectorPoly,
    homogenize_poly,
    homogenize_vector,
    substitute_zero,
)


def as_basis(G, ring=None):
    """Wrap a list of polynomials or vectors into an Ideal/ModuleBasis."""
    if isinstance(G, IdealBasis):
        return G
    G = list(G)
    if ring is None:
        if not G:
            raise UsageError("cannot infer the ring of an empty generating set")
        ring = G[0].ring
    if any(isinstance(g, VectorPoly) for g in G):
        return ModuleBasis(ring, tuple(G), rank=G[0].rank)
    return IdealBasis(ring, tuple(G))


def _like(I, gens, ring=None):
    ring = ring or I.ring
    if I.rank is None:
        return IdealBasis(ring, tuple(gens))
    return ModuleBasis(ring, tuple(gens), rank=I.rank)


def quotient(I, f, budget=None):
    """``I : f``, the first coordinates of the syzygies of ``[f, g_1, ..., g_k]``.

    For a submodule ``M`` of ``R^l`` this is ``{v : f*v in M}``, read off from
    the syzygies of ``[f*e_1, ..., f*e_l, m_1, ..., m_k]``.
    """
    I = as_basis(I)
    ring = I.ring
    f = ring.convert(f) if isinstance(f, Polynomial) else ring.const(f)
    if not f:
        raise UsageError("quotient by the zero polynomial")
    if I.rank is None:
        syz = syzygies([f, *I.gens], budget, ring=ring, tags=[0])
        gens = [s.comps[0] for s in syz]
    else:
        ell = I.rank
        fe = [VectorPoly(ring, [f if j == i else ring.zero() for j in range(ell)]) for i in range(ell)]
        syz = syzygies([*fe, *I.gens], budget, ring=ring, tags=range(ell))
        gens = [VectorPoly(ring, s.comps) for s in syz]
    return groebner_basis(_like(I, gens, ring), budget=budget)


def saturate(I, f, budget=None):
    """``I : f^infinity`` by iterated quotients.

    Returns ``(basis, steps)`` where ``steps`` counts the quotients that
    changed the ideal; the basis is the reduced Groebner basis.
    """
    current = groebner_basis(as_basis(I), budget=budget)
    steps = 0
    while True:
        nxt = quotient(current, f, budget)
        if nxt.gens == current.gens:
            return current, steps
        current = nxt
        steps += 1


@dataclass(frozen=True)
class HomogenizationResult:
    ring: RingSpec
    J: IdealBasis
    Ih: IdealBasis
    saturation_steps: int


def homogenize_ideal(G, x0="x0", order=None, budget=None):
    """Homogenization of ``<G>`` as ``<g^h : g in G> : x0^infinity``.

    ``x0`` is appended to the variables with weight 1.  ``order`` is the
    order used in the extended ring (default: the ring's order, extended).
    """
    G = as_basis(G)
    ring = G.ring
    if 1 not in ring.weights:
        raise UsageError("no weight-1 variable to homogenize")
    ext = ring.extend(x0)
    if order is not None:
        ext = ext.with_order(order)
    h = ext.nvars - 1
    lifted = [_lift(g, ext) for g in G.gens]
    if G.rank is None:
        J = IdealBasis(ext, tuple(homogenize_poly(g, h) for g in lifted))
    else:
        J = ModuleBasis(ext, tuple(homogenize_vector(g, h) for g in lifted), rank=G.rank)
    Ih, steps = saturate(J, ext.gen(h), budget)
    return HomogenizationResult(ext, J, Ih, steps)


def _lift(f, ext):
    """Embed an element of R into R[x0] (x0 appended last)."""
    if isinstance(f, VectorPoly):
        return VectorPoly(ext, [_lift(c, ext) for c in f.comps])
    return ext.from_terms((m + (0,), c) for m, c in f.terms)


def _restrict(f, sub, indices):
    """Move an element free of the dropped variables into the subring."""
    if isinstance(f, VectorPoly):
        return VectorPoly(sub, [_restrict(c, sub, indices) for c in f.comps])
    return sub.from_terms((tuple(m[i] for i in indices), c) for m, c in f.terms)


def base_indices(ring):
    return tuple(i for i, w in enumerate(ring.weights) if w == 0)


def degree_zero_part(H, order=DEGREVLEX):
    """Generators of ``H`` intersected with the base ring B (or B^l).

    Every weight-1 variable is set to zero in every generator.  For a
    homogeneous H this keeps exactly the degree-zero parts of the generators,
    which generate the degree-zero part of H.
    """
    H = as_basis(H)
    ring = H.ring
    keep = base_indices(ring)
    drop = [i for i, w in enumerate(ring.weights) if w == 1]
    sub = ring.subring(keep, order)
    gens = []
    for g in H.gens:
        z = substitute_zero(g, drop)
        if z:
            gens.append(_restrict(z, sub, keep))
    return _like(H, gens, sub)


@dataclass(frozen=True)
class EliminationProblem:
    """Eliminate the weight-1 variables of ``ring`` from ``<gens>``.

    The weight-0 variables span the base ring B.
    """

    ring: RingSpec
    gens: tuple

    def __post_init__(self):
        gens = self.gens.gens if isinstance(self.gens, IdealBasis) else tuple(self.gens)
        object.__setattr__(self, "gens", tuple(self.ring.convert(g) for g in gens))
        if self.ring.homog_var is not None:
            raise UsageError("the homogenizing variable must not be present yet")
        ranks = {g.rank if isinstance(g, VectorPoly) else None for g in self.gens}
        if len(ranks) > 1:
            raise UsageError("mixed polynomial and vector generators")

    @property
    def elim_vars(self):
        return tuple(v for v, w in zip(self.ring.vars, self.ring.weights) if w == 1)

    @property
    def base_vars(self):
        return tuple(v for v, w in zip(self.ring.vars, self.ring.weights) if w == 0)

    @property
    def rank(self):
        for g in self.gens:
            return g.rank if isinstance(g, VectorPoly) else None
        return None

    def basis(self):
        if self.rank is None:
            return IdealBasis(self.ring, self.gens)
        return ModuleBasis(self.ring, self.gens, rank=self.rank)

    def base_ring(self):
        return self.ring.subring(base_indices(self.ring), DEGREVLEX)

    @classmethod
    def from_names(cls, ring, gens, elim):
        """Build a problem from a ring, generators and elimination variable names."""
        elim = set(elim)
        weights = tuple(1 if v in elim else 0 for v in ring.vars)
        new = RingSpec(ring.field, ring.vars, weights, None, ring.order)
        return cls(new, tuple(new.convert(_reweight(g, new)) for g in gens))


def _reweight(f, ring):
    if isinstance(f, VectorPoly):
        return VectorPoly(ring, [_reweight(c, ring) for c in f.comps])
    return ring.from_terms(f.terms)


@dataclass(frozen=True)
class EliminationResult:
    basis: IdealBasis
    saturation_steps: int = 0
    work_basis: IdealBasis | None = None


def _empty_result(p):
    sub = p.base_ring()
    gens = ()
    if p.rank is None:
        return EliminationResult(IdealBasis(sub, gens, DEGREVLEX, True))
    return EliminationResult(ModuleBasis(sub, gens, ModuleOrder(DEGREVLEX), True, p.rank))


def eliminate_saturation(p, order=DEGREVLEX, x0="x0", budget=None, details=False):
    """Generators of ``I`` intersected with B via homogenization and saturation.

    Returns the reduced Groebner basis of the elimination ideal (module) in
    the base ring under degrevlex; with ``details`` an EliminationResult.
    """
    if not p.gens:
        res = _empty_result(p)
        return res if details else res.basis
    name = x0
    while name in p.ring.vars:
        name += "_"
    ring = p.ring.with_order(order)
    G = p.basis()
    G = _like(G, [ring.convert(g) for g in G.gens], ring)
    hom = homogenize_ideal(G, name, budget=budget)
    zero = degree_zero_part(hom.Ih, DEGREVLEX)
    out = groebner_basis(zero, budget=budget, ring=zero.ring)
    res = EliminationResult(out, hom.saturation_steps, hom.Ih)
    return res if details else res.basis


def eliminate_block(p, budget=None, details=False):
    """Generators of ``I`` intersected with B via a block-elimination order."""
    if not p.gens:
        res = _empty_result(p)
        return res if details else res.basis
    ring = p.ring
    elim = [i for i, w in enumerate(ring.weights) if w == 1]
    base = list(base_indices(ring))
    perm = elim + base
    border = MonomialOrder.block(len(elim), DEGREVLEX, DEGREVLEX)
    bring = RingSpec(ring.field, tuple(ring.vars[i] for i in perm),
                     tuple(ring.weights[i] for i in perm), None, border)
    gens = [_permute(g, bring, perm) for g in p.gens]
    if p.rank is None:
        gb = groebner_basis(IdealBasis(bring, tuple(gens)), budget=budget)
    else:
        gb = groebner_basis(ModuleBasis(bring, tuple(gens), rank=p.rank),
                            ModuleOrder(border, ModuleScheme.TOP), budget=budget)
    k = len(elim)
    keep = tuple(range(k, len(perm)))
    sub = bring.subring(keep, DEGREVLEX)
    free = [_restrict(g, sub, keep) for g in gb.gens if not _involves_any(g, range(k))]
    out = groebner_basis(_like(gb, free, sub), budget=budget, ring=sub)
    res = EliminationResult(out, 0, gb)
    return res if details else res.basis


def _involves_any(f, indices):
    if isinstance(f, VectorPoly):
        return any(_involves_any(c, indices) for c in f.comps)
    return any(m[i] for m, _ in f.terms for i in indices)


def _permute(f, ring, perm):
    if isinstance(f, VectorPoly):
        return VectorPoly(ring, [_permute(c, ring, perm) for c in f.comps])
    return ring.from_terms((tuple(m[i] for i in perm), c) for m, c in f.terms)


def routes_agree(p, budget=None):
    """Run both routes; return ``(agree, saturation_basis, block_basis)``."""
    a = eliminate_saturation(p, budget=budget)
    b = eliminate_block(p, budget=budget)
    return ideal_equal(a, b, budget=budget), a, b
