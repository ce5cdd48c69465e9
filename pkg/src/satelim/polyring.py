"""Sparse multivariate polynomials, free-module vectors and (de)homogenization.

A polynomial stores its terms as a tuple of ``(exponents, coefficient)``
pairs, sorted from the largest to the smallest monomial under the order of
its ring.  Zero coefficients never appear and the zero polynomial has no
terms, so equality is structural.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from operator import add

from .coeff import QQ, Coefficient, FieldSpec
from .errors import ExponentOverflowError, UsageError
from .orders import DEGREVLEX, MonomialOrder

MAX_EXPONENT = 2**16
NEG_INF = -math.inf

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class RingSpec:
    """Coefficient field, ordered variables, {0,1} grading weights, an
    optional homogenizing variable and the order used for canonical sorting.

    Weight-0 variables are the indeterminates of the base ring B; weight-1
    variables are the ones that get homogenized and eliminated.
    """

    field: FieldSpec
    vars: tuple
    weights: tuple = None
    homog_var: int | None = None
    order: MonomialOrder = DEGREVLEX

    def __post_init__(self):
        names = tuple(self.vars)
        object.__setattr__(self, "vars", names)
        for name in names:
            if not _NAME_RE.match(name):
                raise UsageError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise UsageError("variable names must be unique")
        weights = (1,) * len(names) if self.weights is None else tuple(self.weights)
        if len(weights) != len(names) or any(w not in (0, 1) for w in weights):
            raise UsageError("weights must be 0 or 1, one per variable")
        object.__setattr__(self, "weights", weights)
        h = self.homog_var
        if h is not None and (not 0 <= h < len(names) or weights[h] != 1):
            raise UsageError("homogenizing variable must exist and have weight 1")

    @property
    def nvars(self):
        return len(self.vars)

    @property
    def key(self):
        return self.order.key_function()

    def index(self, name):
        try:
            return self.vars.index(name)
        except ValueError:
            raise UsageError(f"unknown variable {name!r}") from None

    def with_order(self, order):
        if order == self.order:
            return self
        return RingSpec(self.field, self.vars, self.weights, self.homog_var, order)

    def extend(self, name="x0"):
        """Append a weight-1 homogenizing variable."""
        if name in self.vars:
            raise UsageError(f"variable {name!r} already present")
        return RingSpec(self.field, self.vars + (name,), self.weights + (1,),
                        self.nvars, self.order.extended())

    def subring(self, indices, order=DEGREVLEX):
        indices = tuple(indices)
        return RingSpec(self.field, tuple(self.vars[i] for i in indices),
                        tuple(self.weights[i] for i in indices), None, order)

    # element constructors ------------------------------------------------

    def zero(self):
        return Polynomial(self, ())

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.field.convert(c)
        return Polynomial(self, (((0,) * self.nvars, c),) if c else ())

    def gen(self, name):
        i = self.index(name) if isinstance(name, str) else name
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, ((exps, self.field.one),))

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=1):
        exps = _check_exps(self, exps)
        c = self.field.convert(coeff)
        return Polynomial(self, ((exps, c),) if c else ())

    def from_dict(self, mapping):
        """Canonical polynomial from ``{exponents: coefficient}``."""
        F = self.field
        terms = []
        for exps, c in mapping.items():
            c = F.convert(c)
            if c:
                terms.append((_check_exps(self, exps), c))
        return self.from_terms(terms)

    def from_terms(self, terms):
        """Canonical polynomial from distinct-monomial raw terms (any order)."""
        key = self.key
        return Polynomial(self, tuple(sorted(terms, key=lambda t: key(t[0]))))

    def poly(self, text):
        from .parser import parse_polynomial
        return parse_polynomial(text, self)

    def vector(self, comps):
        return VectorPoly(self, [self.poly(c) if isinstance(c, str) else c for c in comps])

    def convert(self, f):
        """Move ``f`` from a ring with the same variables into this one."""
        if f.ring == self:
            return f
        if f.ring.vars != self.vars or f.ring.field != self.field:
            raise UsageError("incompatible rings")
        if isinstance(f, VectorPoly):
            return VectorPoly(self, [self.convert(c) for c in f.comps])
        return self.from_terms(f.terms)

    def __str__(self):
        return f"{self.field}[{','.join(self.vars)}]"


def _check_exps(ring, exps):
    exps = tuple(int(e) for e in exps)
    if len(exps) != ring.nvars:
        raise UsageError("exponent vector has the wrong length")
    for e in exps:
        if e < 0:
            raise UsageError("negative exponent")
        if e >= MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {e} exceeds {MAX_EXPONENT - 1}")
    return exps


def _mono_str(ring, exps):
    parts = []
    for name, e in zip(ring.vars, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class Polynomial:
    """Immutable canonical sparse polynomial."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        # ``terms`` must already be canonical; use RingSpec.from_dict otherwise.
        self.ring = ring
        self.terms = terms
        self._hash = None

    # structure -------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Coefficient)) or hasattr(other, "denominator"):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    @property
    def lm(self):
        return self.terms[0][0] if self.terms else None

    @property
    def lc(self):
        return self.terms[0][1] if self.terms else self.ring.field.zero

    def coefficient(self, exps):
        exps = tuple(exps)
        for m, c in self.terms:
            if m == exps:
                return c
        return self.ring.field.zero

    def as_dict(self):
        return dict(self.terms)

    def variables(self):
        """Indices of variables occurring in the polynomial."""
        return {i for m, _ in self.terms for i, e in enumerate(m) if e}

    def involves(self, i):
        return any(m[i] for m, _ in self.terms)

    def total_degree(self):
        return max((sum(m) for m, _ in self.terms), default=NEG_INF)

    def weighted_degree(self):
        w = self.ring.weights
        return max((sum(a * b for a, b in zip(w, m)) for m, _ in self.terms), default=NEG_INF)

    degree = weighted_degree

    def is_homogeneous(self):
        w = self.ring.weights
        return len({sum(a * b for a, b in zip(w, m)) for m, _ in self.terms}) <= 1

    def monic(self):
        if not self.terms:
            return self
        F = self.ring.field
        inv = F.inv(self.terms[0][1])
        return Polynomial(self.ring, tuple((m, F.mul(c, inv)) for m, c in self.terms))

    # arithmetic ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise UsageError(f"polynomials from different rings: {self.ring} and {other.ring}")
            return other
        return self.ring.const(other)

    def _combine(self, other, sign):
        F = self.ring.field
        acc = dict(self.terms)
        for m, c in other.terms:
            if sign < 0:
                c = F.neg(c)
            old = acc.get(m)
            if old is None:
                acc[m] = c
                continue
            new = F.add(old, c)
            if new:
                acc[m] = new
            else:
                del acc[m]
        return self.ring.from_terms(acc.items())

    def __add__(self, other):
        return self._combine(self._coerce(other), 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(self._coerce(other), -1)

    def __rsub__(self, other):
        return self._coerce(other)._combine(self, -1)

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, tuple((m, F.neg(c)) for m, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, VectorPoly):
            return other.scale(self)
        other = self._coerce(other)
        F = self.ring.field
        acc = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(map(add, m1, m2))
                c = F.mul(c1, c2)
                old = acc.get(m)
                acc[m] = c if old is None else F.add(old, c)
        for m in acc:
            if any(e >= MAX_EXPONENT for e in m):
                raise ExponentOverflowError(f"exponent overflow in product: {m}")
        return self.ring.from_terms((m, c) for m, c in acc.items() if c)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise UsageError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_term(self, exps, coeff):
        """Multiply by the single term ``coeff * x^exps``."""
        F = self.ring.field
        coeff = F.convert(coeff)
        if not coeff:
            return self.ring.zero()
        terms = []
        for m, c in self.terms:
            nm = tuple(map(add, m, exps))
            if any(e >= MAX_EXPONENT for e in nm):
                raise ExponentOverflowError(f"exponent overflow: {nm}")
            terms.append((nm, F.mul(c, coeff)))
        # multiplication by a monomial preserves the order
        return Polynomial(self.ring, tuple(terms))

    # printing --------------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def format_poly(f):
    if not f.terms:
        return "0"
    ring = f.ring
    F = ring.field
    out = []
    for i, (m, c) in enumerate(f.terms):
        neg = F.characteristic == 0 and c < 0
        a = -c if neg else c
        mono = _mono_str(ring, m)
        cs = F.to_str(a)
        if not mono:
            body = cs
        elif cs == "1":
            body = mono
        else:
            body = f"{cs}*{mono}"
        if i == 0:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


class VectorPoly:
    """Element of the free module R^rank, as a tuple of polynomials."""

    __slots__ = ("ring", "comps")

    def __init__(self, ring, comps):
        comps = tuple(comps)
        if not comps:
            raise UsageError("vector rank must be positive")
        for c in comps:
            if not isinstance(c, Polynomial) or c.ring != ring:
                raise UsageError("all vector components must live in one ring")
        self.ring = ring
        self.comps = comps

    @classmethod
    def zero(cls, ring, rank):
        return cls(ring, [ring.zero()] * rank)

    @classmethod
    def unit(cls, ring, rank, i):
        return cls(ring, [ring.one() if j == i else ring.zero() for j in range(rank)])

    @property
    def rank(self):
        return len(self.comps)

    def is_zero(self):
        return not any(self.comps)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, VectorPoly):
            return NotImplemented
        return self.ring == other.ring and self.comps == other.comps

    def __hash__(self):
        return hash((self.ring, self.comps))

    def __getitem__(self, i):
        return self.comps[i]

    def __iter__(self):
        return iter(self.comps)

    def _check(self, other):
        if not isinstance(other, VectorPoly) or other.ring != self.ring or other.rank != self.rank:
            raise UsageError("vectors must share ring and rank")

    def __add__(self, other):
        self._check(other)
        return VectorPoly(self.ring, [a + b for a, b in zip(self.comps, other.comps)])

    def __sub__(self, other):
        self._check(other)
        return VectorPoly(self.ring, [a - b for a, b in zip(self.comps, other.comps)])

    def __neg__(self):
        return VectorPoly(self.ring, [-a for a in self.comps])

    def scale(self, f):
        if not isinstance(f, Polynomial):
            f = self.ring.const(f)
        return VectorPoly(self.ring, [f * a for a in self.comps])

    __rmul__ = scale

    def weighted_degree(self):
        return max(c.weighted_degree() for c in self.comps)

    def __str__(self):
        return "[" + ", ".join(map(str, self.comps)) + "]"

    def __repr__(self):
        return f"VectorPoly({str(self)!r})"


def poly_arith(f, g, op):
    """``f op g`` for ``op`` in ``add``, ``sub``, ``mul``."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise UsageError(f"unknown polynomial operation {op!r}")


# homogenization ------------------------------------------------------------


def weighted_degree(f):
    """Maximal weighted degree of a term; ``-inf`` for zero."""
    return f.weighted_degree()


def _homog_index(ring, x0):
    i = ring.index(x0) if isinstance(x0, str) else x0
    if not 0 <= i < ring.nvars:
        raise UsageError("homogenizing variable index out of range")
    if ring.weights[i] != 1:
        raise UsageError("homogenizing variable must have weight 1")
    return i


def _homogenize_to(f, i, target):
    if f.involves(i):
        raise UsageError(f"polynomial involves the homogenizing variable: {f}")
    w = f.ring.weights
    terms = []
    for m, c in f.terms:
        pad = target - sum(a * b for a, b in zip(w, m))
        if pad:
            m = m[:i] + (m[i] + pad,) + m[i + 1:]
            if m[i] >= MAX_EXPONENT:
                raise ExponentOverflowError("exponent overflow while homogenizing")
        terms.append((m, c))
    return f.ring.from_terms(terms)


def homogenize_poly(f, x0):
    """``x0^deg(f) * f(x/x0)``: pad every term with x0 up to the weighted degree of f."""
    i = _homog_index(f.ring, x0)
    if not f:
        return f
    return _homogenize_to(f, i, f.weighted_degree())


def dehomogenize_poly(s, x0):
    """Substitute x0 -> 1."""
    ring = s.ring
    i = ring.index(x0) if isinstance(x0, str) else x0
    F = ring.field
    acc = {}
    for m, c in s.terms:
        m = m[:i] + (0,) + m[i + 1:]
        old = acc.get(m)
        acc[m] = c if old is None else F.add(old, c)
    return ring.from_terms((m, c) for m, c in acc.items() if c)


def substitute_zero(f, variables):
    """Drop every term containing one of ``variables`` (indices or names)."""
    if isinstance(f, VectorPoly):
        return VectorPoly(f.ring, [substitute_zero(c, variables) for c in f.comps])
    ring = f.ring
    idx = [ring.index(v) if isinstance(v, str) else v for v in variables]
    return Polynomial(ring, tuple(t for t in f.terms if not any(t[0][i] for i in idx)))


def homogenize_vector(v, x0):
    """Homogenize each component and pad with x0 to the common maximal degree."""
    i = _homog_index(v.ring, x0)
    nonzero = [c for c in v.comps if c]
    if not nonzero:
        return v
    top = max(c.weighted_degree() for c in nonzero)
    return VectorPoly(v.ring, [_homogenize_to(c, i, top) if c else c for c in v.comps])


def homogeneous_parts(f):
    """Split ``f`` into its weighted-homogeneous components, keyed by degree."""
    w = f.ring.weights
    parts = {}
    for m, c in f.terms:
        parts.setdefault(sum(a * b for a, b in zip(w, m)), []).append((m, c))
    return {d: Polynomial(f.ring, tuple(ts)) for d, ts in sorted(parts.items())}
