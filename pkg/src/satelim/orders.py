"""Global monomial orders and their extensions to free modules.

Every order is realised through a *descending key*: a flat tuple of ints with
``key(a) < key(b)`` exactly when ``a > b``.  Sorting by the key therefore lists
monomials from largest to smallest, and a min-heap pops the leading term
first.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from operator import add

from .errors import ParseError, UsageError

_KEY_CACHE_LIMIT = 1 << 20


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _memoize(fn):
    cache = {}

    def key(m):
        k = cache.get(m)
        if k is None:
            if len(cache) > _KEY_CACHE_LIMIT:
                cache.clear()
            k = cache[m] = fn(m)
        return k

    return key


@dataclass(frozen=True)
class MonomialOrder:
    """``lex``, ``deglex``, ``degrevlex`` or ``block``.

    A block order compares the first ``split`` exponents under ``first`` and
    breaks ties on the remaining exponents under ``second``.  Degrees are
    unweighted total degrees.
    """

    kind: str
    split: int = 0
    first: MonomialOrder | None = None
    second: MonomialOrder | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "deglex", "degrevlex", "block"):
            raise UsageError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block":
            if self.first is None or self.second is None or self.split < 0:
                raise UsageError("block order needs split >= 0 and two sub-orders")

    @classmethod
    def lex(cls):
        return cls("lex")

    @classmethod
    def deglex(cls):
        return cls("deglex")

    @classmethod
    def degrevlex(cls):
        return cls("degrevlex")

    @classmethod
    def block(cls, split, first=None, second=None):
        return cls("block", split, first or DEGREVLEX, second or DEGREVLEX)

    def raw_key(self, exps):
        """Descending key of an exponent tuple (not memoized)."""
        kind = self.kind
        if kind == "degrevlex":
            return (-sum(exps),) + exps[::-1]
        if kind == "lex":
            return tuple(-e for e in exps)
        if kind == "deglex":
            return (-sum(exps),) + tuple(-e for e in exps)
        s = self.split
        return self.first.raw_key(exps[:s]) + self.second.raw_key(exps[s:])

    @lru_cache(maxsize=None)
    def key_function(self):
        """Memoized descending-key function for exponent tuples."""
        return _memoize(self.raw_key)

    def compare(self, a, b):
        a, b = tuple(a), tuple(b)
        if len(a) != len(b):
            raise UsageError("monomials of different rings")
        ka, kb = self.raw_key(a), self.raw_key(b)
        if ka == kb:
            return Ordering.EQ
        return Ordering.GT if ka < kb else Ordering.LT

    def extended(self):
        """The order on one more variable appended at the end."""
        if self.kind == "block":
            return MonomialOrder("block", self.split, self.first, self.second.extended())
        return self

    def __str__(self):
        if self.kind == "block":
            return f"block({self.split}:{self.first},{self.second})"
        return self.kind


LEX = MonomialOrder("lex")
DEGLEX = MonomialOrder("deglex")
DEGREVLEX = MonomialOrder("degrevlex")

_BLOCK_RE = re.compile(r"block\(\s*(\d+)\s*:\s*(\w+)\s*,\s*(\w+)\s*\)$")


def parse_order(text):
    """Parse ``lex``, ``deglex``, ``degrevlex`` or ``block(<n>:<o1>,<o2>)``."""
    text = text.strip()
    if text in ("lex", "deglex", "degrevlex"):
        return MonomialOrder(text)
    m = _BLOCK_RE.match(text)
    if m:
        subs = []
        for name in m.group(2, 3):
            if name not in ("lex", "deglex", "degrevlex"):
                raise ParseError(f"unknown block sub-order {name!r}")
            subs.append(MonomialOrder(name))
        return MonomialOrder("block", int(m.group(1)), *subs)
    raise ParseError(f"unknown monomial order {text!r}")


def is_elimination_order(order, elim, nvars):
    """True iff every monomial involving a variable of ``elim`` exceeds every
    monomial free of them, for monomials in ``nvars`` variables."""
    elim = set(elim)
    if not elim <= set(range(nvars)):
        raise UsageError("elimination variable index out of range")
    if not elim:
        return True
    kind = order.kind
    if kind == "lex":
        return elim == set(range(len(elim)))
    if kind in ("deglex", "degrevlex"):
        return len(elim) == nvars
    s = min(order.split, nvars)
    head = {i for i in elim if i < s}
    tail = {i - s for i in elim if i >= s}
    if not tail:
        return is_elimination_order(order.first, head, s)
    if len(head) == s:
        return is_elimination_order(order.second, tail, nvars - s)
    return False


class ModuleScheme(enum.Enum):
    TOP = "top"  # term over position
    POT = "pot"  # position over term


@dataclass(frozen=True)
class ModuleOrder:
    """Order on terms ``m * e_i`` of a free module; lower positions are larger.

    With ``shifts`` (one exponent vector per position) a TOP order compares
    ``m * shifts[i]`` instead of ``m``: the Schreyer order induced by
    generators whose leading monomials are the shifts.
    """

    base: MonomialOrder = DEGREVLEX
    scheme: ModuleScheme = ModuleScheme.TOP
    shifts: tuple | None = None

    def __post_init__(self):
        if self.shifts is not None:
            if self.scheme is not ModuleScheme.TOP:
                raise UsageError("shifts need a term-over-position order")
            object.__setattr__(self, "shifts", tuple(tuple(s) for s in self.shifts))

    @lru_cache(maxsize=None)
    def key_function(self):
        """Descending key for flat module monomials ``(pos, e_1, ..., e_n)``."""
        base = self.base.raw_key
        shifts = self.shifts
        if shifts is not None:
            return _memoize(lambda m: base(tuple(map(add, m[1:], shifts[m[0]]))) + (m[0],))
        if self.scheme is ModuleScheme.TOP:
            return _memoize(lambda m: base(m[1:]) + (m[0],))
        return _memoize(lambda m: (m[0],) + base(m[1:]))

    def compare(self, a, b):
        """Compare ``(pos, exps)`` pairs."""
        (pa, ea), (pb, eb) = a, b
        ka = self.key_function()((pa,) + tuple(ea))
        kb = self.key_function()((pb,) + tuple(eb))
        if ka == kb:
            return Ordering.EQ
        return Ordering.GT if ka < kb else Ordering.LT

    def __str__(self):
        if self.shifts is not None:
            return f"schreyer({self.base})"
        return f"{self.scheme.value}({self.base})"
