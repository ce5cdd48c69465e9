"""Division, Buchberger's algorithm, reduced Groebner bases and syzygies.

Ideals and submodules share one engine.  Internally an element is a tuple
of ``(monomial, coefficient)`` terms sorted from the leading term down, where
a monomial is the flat tuple ``(position, e_1, ..., e_n)``.  Polynomials are
elements living entirely in position 0.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from heapq import heapify, heappop, heappush
from itertools import count
from operator import add, le, sub

from .errors import BudgetError, UsageError
from .orders import ModuleOrder, ModuleScheme, MonomialOrder
from .polyring import Polynomial, RingSpec, VectorPoly


STRATEGIES = ("auto", "sugar", "normal")


@dataclass(frozen=True)
class Budget:
    """Resource caps and pair-selection strategy for one Groebner basis computation.

    ``strategy="normal"`` selects the pair whose lcm is smallest in the
    monomial order; ``"sugar"`` selects by the degree the pair would have
    after homogenizing the input.  ``"auto"`` uses sugar for
    degree-compatible orders and the normal strategy otherwise (block and
    lex orders), which measured best for each.  Ties are broken first-in
    first-out.
    """

    max_pairs: int = 10**6
    max_degree: int = 2**12
    timeout: float | None = None
    strategy: str = "auto"

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise UsageError(f"unknown pair strategy {self.strategy!r}")


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class IdealBasis:
    """Finite generating set of an ideal.

    ``order`` is set when ``gens`` is certified to be a Groebner basis under
    it, and ``reduced`` when it is moreover the reduced one.
    """

    ring: RingSpec
    gens: tuple = ()
    order: object = None
    reduced: bool = False

    rank = None

    def __post_init__(self):
        gens = tuple(g for g in self.gens if g)
        for g in gens:
            if g.ring.vars != self.ring.vars or g.ring.field != self.ring.field:
                raise UsageError("generator from a different ring")
            self._check_gen(g)
        object.__setattr__(self, "gens", gens)

    def _check_gen(self, g):
        if not isinstance(g, Polynomial):
            raise UsageError("ideal generators must be polynomials")

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __getitem__(self, i):
        return self.gens[i]

    @property
    def is_groebner(self):
        return self.order is not None

    def __str__(self):
        return "\n".join(map(str, self.gens))


@dataclass(frozen=True)
class ModuleBasis(IdealBasis):
    """Finite generating set of a submodule of ``R^rank``."""

    rank: int = 1

    def _check_gen(self, g):
        if not isinstance(g, VectorPoly) or g.rank != self.rank:
            raise UsageError(f"module generators must be vectors of rank {self.rank}")


@dataclass(frozen=True)
class SyzygyBasis:
    """Generators of the syzygy module of ``over``."""

    ring: RingSpec
    over: tuple
    gens: tuple

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)


# ---------------------------------------------------------------------------
# engine


class _Ctx:
    __slots__ = ("field", "p", "key", "module", "budget", "deadline", "sugar")

    def __init__(self, field, morder, module, budget):
        self.field = field
        self.p = field.characteristic
        self.key = morder.key_function()
        self.module = module
        self.budget = budget or DEFAULT_BUDGET
        base = getattr(morder, "base", morder)
        strategy = self.budget.strategy
        self.sugar = strategy == "sugar" or (strategy == "auto" and base.kind in ("deglex", "degrevlex"))
        timeout = self.budget.timeout
        self.deadline = None if timeout is None else time.monotonic() + timeout

    def check_time(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetError("Groebner basis computation timed out")


def _nf(terms, reducers, ctx, track=False):
    """Fully reduce ``terms`` by ``reducers`` = [(lm, inverse lc, element)].

    The largest reducible term is always reduced by the first reducer whose
    leading monomial divides it.  Returns the remainder (sorted) and, with
    ``track``, per-reducer quotient dicts ``{shift: coefficient}``.
    """
    p = ctx.p
    key = ctx.key
    rem = dict(terms)
    heap = [(key(m), m) for m in rem]
    heapify(heap)
    out = []
    quots = [{} for _ in reducers] if track else None
    steps = 0
    while heap:
        steps += 1
        # a step over QQ can be slow once coefficients grow
        if not p or not steps & 63:
            ctx.check_time()
        m = heappop(heap)[1]
        c = rem.pop(m, None)
        if c is None:
            continue
        pos = m[0]
        for idx, (lm, ilc, g) in enumerate(reducers):
            if lm[0] != pos or not all(map(le, lm, m)):
                continue
            q = c * ilc
            if p:
                q %= p
            shift = tuple(map(sub, m, lm))
            for gm, gc in g[1:]:
                nm = tuple(map(add, gm, shift))
                v = q * gc
                old = rem.get(nm)
                if old is None:
                    rem[nm] = -v % p if p else -v
                    heappush(heap, (key(nm), nm))
                else:
                    new = old - v
                    if p:
                        new %= p
                    if new:
                        rem[nm] = new
                    else:
                        del rem[nm]
            if track:
                qd = quots[idx]
                old = qd.get(shift)
                new = q if old is None else old + q
                if p:
                    new %= p
                if new:
                    qd[shift] = new
                else:
                    del qd[shift]
            break
        else:
            out.append((m, c))
    return tuple(out), quots


def _monic(el, ctx):
    c = el[0][1]
    if c == 1:
        return el
    F = ctx.field
    inv = F.inv(c)
    p = ctx.p
    if p:
        return tuple((m, x * inv % p) for m, x in el)
    return tuple((m, x * inv) for m, x in el)


def _lcm(a, b):
    return tuple(map(max, a, b))


def _divides(a, b):
    return a[0] == b[0] and all(map(le, a, b))


def _coprime(a, b):
    return not any(x and y for x, y in zip(a[1:], b[1:]))


def _spoly(f, g, ctx):
    """S-element of two monic elements with leading terms in one position."""
    lf, lg = f[0][0], g[0][0]
    L = _lcm(lf, lg)
    sf = tuple(map(sub, L, lf))
    sg = tuple(map(sub, L, lg))
    p = ctx.p
    acc = {}
    for m, c in f[1:]:
        acc[tuple(map(add, m, sf))] = c
    for m, c in g[1:]:
        nm = tuple(map(add, m, sg))
        old = acc.get(nm)
        new = -c if old is None else old - c
        if p:
            new %= p
        if new:
            acc[nm] = new
        elif old is not None:
            del acc[nm]
    key = ctx.key
    return tuple(sorted(acc.items(), key=lambda t: key(t[0])))


def _degree(m):
    return sum(m) - m[0]


class _Rev:
    """Reverses a descending key so a min-heap pops the smallest monomial."""

    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return other.k < self.k

    def __eq__(self, other):
        return self.k == other.k


def _buchberger(elements, ctx, drop_from=None):
    """Minimal Groebner basis (monic, sorted) of the given elements.

    With ``drop_from`` set, remainders whose leading term sits in a position
    ``>= drop_from`` are discarded instead of joining the basis.
    """
    budget = ctx.budget
    basis = []
    lms = []
    active = []
    reducers = []
    pairs = {}
    heap = []
    seq = count()
    module = ctx.module

    # sugar: degree of an element had the input been homogenized
    sugar = []
    use_sugar = ctx.sugar

    def add_element(h, sug=None):
        h = _monic(h, ctx)
        top = max(_degree(m) for m, _ in h)
        if top > budget.max_degree:
            raise BudgetError(f"degree {top} exceeds the budget of {budget.max_degree}")
        j = len(basis)
        lh = h[0][0]
        basis.append(h)
        lms.append(lh)
        sugar.append(top if sug is None else max(sug, _degree(lh)))
        # Gebauer-Moeller update
        cands = [i for i in active if lms[i][0] == lh[0]]
        lcms = {i: _lcm(lms[i], lh) for i in cands}
        disjoint = {i: (not module) and _coprime(lms[i], lh) for i in cands}
        kept = []
        for k, i in enumerate(cands):
            L = lcms[i]
            if disjoint[i]:
                kept.append(i)
                continue
            if any(_divides(lcms[o], L) for o in cands[k + 1:]):
                continue
            if any(_divides(lcms[o], L) for o in kept):
                continue
            kept.append(i)
        for (a, b), L in list(pairs.items()):
            if _divides(lh, L) and _lcm(lms[a], lh) != L and _lcm(lms[b], lh) != L:
                del pairs[(a, b)]
        for i in kept:
            if not disjoint[i]:
                L = lcms[i]
                pairs[(i, j)] = L
                if use_sugar:
                    dl = _degree(L)
                    dl = max(sugar[i] + dl - _degree(lms[i]), sugar[j] + dl - _degree(lh))
                else:
                    dl = _Rev(ctx.key(L))
                heappush(heap, (dl, next(seq), i, j))
        still = [i for i in active if not _divides(lh, lms[i])]
        # keep the active basis tail-reduced; over QQ this stops coefficient
        # swell from propagating through stale tails
        for i in still:
            g = basis[i]
            if any(_divides(lh, m) for m, _ in g[1:]):
                others = [(lms[k], 1, basis[k]) for k in still if k != i]
                others.append((lh, 1, h))
                tail, _ = _nf(g[1:], others, ctx)
                basis[i] = (g[0],) + tail
        still.append(j)
        active[:] = still
        reducers[:] = [(lms[i], 1, basis[i]) for i in active]

    def keep(r):
        return r and (drop_from is None or r[0][0][0] < drop_from)

    for el in elements:
        if not el:
            continue
        r, _ = _nf(el, reducers, ctx)
        if keep(r):
            add_element(r)

    processed = 0
    while heap:
        sg, _, i, j = heappop(heap)
        if pairs.pop((i, j), None) is None:
            continue
        processed += 1
        if processed > budget.max_pairs:
            raise BudgetError(f"more than {budget.max_pairs} critical pairs")
        ctx.check_time()
        s = _spoly(basis[i], basis[j], ctx)
        if not s:
            continue
        r, _ = _nf(s, reducers, ctx)
        if keep(r):
            add_element(r, sg if use_sugar else None)

    key = ctx.key
    return sorted((basis[i] for i in active), key=lambda el: key(el[0][0]))


def _interreduce(gb, ctx):
    """Reduced basis from a minimal one."""
    out = []
    for i, g in enumerate(gb):
        others = [(h[0][0], 1, h) for k, h in enumerate(gb) if k != i]
        r, _ = _nf(g, others, ctx)
        out.append(_monic(r, ctx))
    key = ctx.key
    return sorted(out, key=lambda el: key(el[0][0]))


@lru_cache(maxsize=512)
def _reduced_gb(elements, field, morder, module, budget):
    ctx = _Ctx(field, morder, module, budget)
    return tuple(_interreduce(_buchberger(elements, ctx), ctx))


@lru_cache(maxsize=512)
def _syzygy_gens(elements, field, morder, ell, budget):
    """Syzygy part of ``<(F_i | e_i)>``, Schreyer style.

    A Groebner basis of the ``F`` part is computed with the ``e`` part
    riding along as cofactors; remainders whose ``F`` part vanishes are not
    kept, so no pairs inside the syzygy part are ever formed.  Generators
    are then the remainders of every S-pair of that basis (cofactor images
    of the Schreyer syzygies) and of every input element (rows of I - S*T).
    """
    # the product criterion only concerns the F part, valid when it is an ideal
    ctx = _Ctx(field, morder, ell > 1, budget)
    gb = _interreduce(_buchberger(elements, ctx, drop_from=ell), ctx)
    reducers = [(g[0][0], 1, g) for g in gb]
    cands = list(elements)
    for i in range(len(gb)):
        for j in range(i + 1, len(gb)):
            if gb[i][0][0][0] == gb[j][0][0][0]:
                cands.append(_spoly(gb[i], gb[j], ctx))
    out = {}
    for el in cands:
        ctx.check_time()
        r, _ = _nf(el, reducers, ctx)
        if r:
            out.setdefault(_monic(r, ctx), None)
    key = ctx.key
    return tuple(sorted(out, key=lambda el: key(el[0][0])))


def clear_cache():
    """Forget cached reduced Groebner bases (used by timing runs)."""
    _reduced_gb.cache_clear()
    _syzygy_gens.cache_clear()


# ---------------------------------------------------------------------------
# conversion between the public types and engine elements


def _poly_to_el(f):
    return tuple(((0,) + m, c) for m, c in f.terms)


def _vec_to_el(v, key):
    terms = [((i,) + m, c) for i, comp in enumerate(v.comps) for m, c in comp.terms]
    terms.sort(key=lambda t: key(t[0]))
    return tuple(terms)


def _el_to_poly(el, ring):
    return Polynomial(ring, tuple((m[1:], c) for m, c in el))


def _el_to_vec(el, ring, rank, offset=0):
    comps = [[] for _ in range(rank)]
    for m, c in el:
        comps[m[0] - offset].append((m[1:], c))
    return VectorPoly(ring, [Polynomial(ring, tuple(t)) for t in comps])


class _Setup:
    """Normalized view of a generating set: ring, rank, order, elements."""

    def __init__(self, G, order=None, ring=None):
        if isinstance(G, IdealBasis):
            ring = ring or G.ring
            rank = G.rank
            gens = list(G.gens)
        else:
            gens = [g for g in G]
            rank = None
            for g in gens:
                if isinstance(g, VectorPoly):
                    rank = g.rank
                ring = ring or g.ring
            if ring is None:
                raise UsageError("cannot infer the ring of an empty generating set")
        if isinstance(order, ModuleOrder):
            if rank is None:
                raise UsageError("module order given for an ideal")
            morder = order
        else:
            base = order or ring.order
            if not isinstance(base, MonomialOrder):
                raise UsageError(f"not a monomial order: {order!r}")
            morder = ModuleOrder(base, ModuleScheme.TOP)
        ring = ring.with_order(morder.base)
        gens = [ring.convert(g) for g in gens if g]
        if rank is not None and any(not isinstance(g, VectorPoly) or g.rank != rank for g in gens):
            raise UsageError("mixed polynomials and vectors, or vectors of different rank")
        self.ring = ring
        self.rank = rank
        self.morder = morder
        self.order_out = morder if rank is not None else morder.base
        self.gens = gens
        key = morder.key_function()
        if rank is None:
            self.elements = tuple(_poly_to_el(g) for g in gens)
        else:
            self.elements = tuple(_vec_to_el(g, key) for g in gens)

    def ctx(self, budget=None):
        return _Ctx(self.ring.field, self.morder, self.rank is not None, budget)

    def element(self, f):
        f = self.ring.convert(f)
        if self.rank is None:
            if not isinstance(f, Polynomial):
                raise UsageError("expected a polynomial")
            return _poly_to_el(f)
        if not isinstance(f, VectorPoly) or f.rank != self.rank:
            raise UsageError(f"expected a vector of rank {self.rank}")
        return _vec_to_el(f, self.morder.key_function())

    def to_public(self, el):
        if self.rank is None:
            return _el_to_poly(el, self.ring)
        return _el_to_vec(el, self.ring, self.rank)

    def basis(self, els, certified=False, reduced=False):
        gens = tuple(self.to_public(el) for el in els)
        order = self.order_out if certified else None
        if self.rank is None:
            return IdealBasis(self.ring, gens, order, reduced)
        return ModuleBasis(self.ring, gens, order, reduced, self.rank)


# ---------------------------------------------------------------------------
# public operations


def normal_form(f, G, order=None):
    """Divide ``f`` by the list ``G``; return ``(remainder, quotients)``.

    ``f == sum(q_i * G_i) + remainder`` and no term of the remainder is
    divisible by a leading term of ``G``.
    """
    st = _Setup(G, order, ring=f.ring)
    ctx = st.ctx()
    reducers = []
    for el in st.elements:
        reducers.append((el[0][0], ctx.field.inv(el[0][1]), el))
    # zero generators were dropped; quotients are reported per given generator
    r, quots = _nf(st.element(f), reducers, ctx, track=True)
    ring = st.ring
    qs = iter(quots)
    quotients = []
    for g in (G.gens if isinstance(G, IdealBasis) else G):
        if not g:
            quotients.append(ring.zero())
            continue
        qd = next(qs)
        quotients.append(ring.from_terms((s[1:], c) for s, c in qd.items()))
    return st.to_public(r), quotients


def s_polynomial(f, g, order=None):
    """S-polynomial (or S-vector) of ``f`` and ``g``.

    For vectors with leading terms in different positions there is no S-pair
    and the zero vector is returned.
    """
    st = _Setup([f, g], order)
    if not f or not g:
        raise UsageError("S-polynomial of a zero element")
    ctx = st.ctx()
    a, b = (_monic(st.element(h), ctx) for h in (f, g))
    if a[0][0][0] != b[0][0][0]:
        return st.to_public(())
    # both inputs are made monic, so the leading terms cancel exactly
    return st.to_public(_spoly(a, b, ctx))


def buchberger(G, order=None, budget=None, ring=None):
    """Groebner basis of ``G`` (minimal, monic) with its order certificate."""
    st = _Setup(G, order, ring)
    els = _buchberger(st.elements, st.ctx(budget))
    return st.basis(els, certified=True)


def reduce_basis(G, order=None, ring=None):
    """Reduced Groebner basis from a Groebner basis ``G`` under ``order``."""
    st = _Setup(G, order, ring)
    ctx = st.ctx()
    els = [_monic(el, ctx) for el in st.elements]
    key = ctx.key
    els.sort(key=lambda el: key(el[0][0]))
    minimal = []
    for el in els:
        lm = el[0][0]
        if not any(_divides(h[0][0], lm) for h in minimal):
            minimal.append(el)
    return st.basis(_interreduce(minimal, ctx), certified=True, reduced=True)


def groebner_basis(G, order=None, budget=None, ring=None):
    """Reduced Groebner basis; results are cached per input and order."""
    st = _Setup(G, order, ring)
    if isinstance(G, IdealBasis) and G.reduced and G.order == st.order_out:
        return G
    els = _reduced_gb(st.elements, st.ring.field, st.morder, st.rank is not None,
                      budget or DEFAULT_BUDGET)
    return st.basis(els, certified=True, reduced=True)


def ideal_membership(f, I, order=None, budget=None):
    """Whether ``f`` (polynomial or vector) lies in the ideal/module ``I``."""
    if not f:
        return True
    gb = groebner_basis(I, order, budget, ring=f.ring)
    st = _Setup(gb, gb.order, ring=f.ring)
    ctx = st.ctx()
    reducers = [(el[0][0], 1, el) for el in st.elements]
    r, _ = _nf(st.element(f), reducers, ctx)
    return not r


def ideal_equal(I, J, order=None, budget=None):
    """Whether two generating sets span the same ideal (or submodule)."""
    ring = I.ring if isinstance(I, IdealBasis) else None
    if ring is None:
        ring = J.ring if isinstance(J, IdealBasis) else None
    a = groebner_basis(I, order, budget, ring=ring)
    b = groebner_basis(J, order, budget, ring=a.ring)
    return a.rank == b.rank and a.gens == b.gens


def _common_rank(F):
    """None for a list of polynomials, else the common vector rank."""
    rank = None
    for f in F:
        if isinstance(f, VectorPoly):
            if rank is not None and rank != f.rank:
                raise UsageError("vectors of different rank")
            rank = f.rank
        elif rank is not None:
            raise UsageError("mixed polynomials and vectors")
    return rank


def syzygies(F, budget=None, ring=None, tags=None):
    """Generators of ``{s : sum(s_i * F_i) == 0}``.

    Works in the module spanned by ``(F_i | e_i)`` under position-over-term
    with the ``F`` positions dominant.  The full syzygy module comes from the
    Schreyer construction in :func:`_syzygy_gens` (generators, not a Groebner
    basis).

    With ``tags`` (a list of indices) only those ``F_i`` carry a unit vector
    and the result is the reduced Groebner basis of the projection of the
    syzygy module onto the ``tags`` coordinates, read off from a Groebner
    basis of the whole module; this is all an ideal quotient needs.
    """
    if isinstance(F, IdealBasis):
        ring = ring or F.ring
        F = list(F.gens)
    F = list(F)
    if not F and ring is None:
        raise UsageError("cannot infer the ring of an empty list")
    ring = ring or F[0].ring
    F = [ring.convert(f) for f in F]
    rank = _common_rank(F)
    ell = 1 if rank is None else rank
    full = tags is None
    tags = list(range(len(F))) if full else list(tags)
    k = len(tags)
    if k == 0:
        return SyzygyBasis(ring, tuple(F), ())
    slot = {i: t for t, i in enumerate(tags)}
    morder = ModuleOrder(ring.order, ModuleScheme.POT)
    key = morder.key_function()
    zero = (0,) * ring.nvars
    one = ring.field.one
    elements = []
    for i, f in enumerate(F):
        comps = [f] if rank is None else list(f.comps)
        terms = [((pos,) + m, c) for pos, comp in enumerate(comps) for m, c in comp.terms]
        if i in slot:
            terms.append(((ell + slot[i],) + zero, one))
        elif not terms:
            continue
        terms.sort(key=lambda t: key(t[0]))
        elements.append(tuple(terms))
    budget = budget or DEFAULT_BUDGET
    if full:
        syz = _syzygy_gens(tuple(elements), ring.field, morder, ell, budget)
    else:
        gb = _reduced_gb(tuple(elements), ring.field, morder, True, budget)
        syz = [el for el in gb if el[0][0][0] >= ell]
    gens = tuple(_el_to_vec(el, ring, k, offset=ell) for el in syz)
    return SyzygyBasis(ring, tuple(F), gens)
