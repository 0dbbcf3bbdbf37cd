"""Exact arithmetic over straightedge-and-compass constructible numbers.

A value is an element of a tower of real quadratic extensions
Q = F0 < F1 < ... < Fk, where F(i) = F(i-1)(sqrt(r_i)) and each radicand
r_i is a positive element of F(i-1) that is not a square there.  Elements
are kept in a canonical nested form ``a + b*sqrt(r_k)`` with ``b != 0``
(values that live in a lower field are stored at their minimal level), so
an element is zero exactly when it is the rational zero.  Signs are decided
by interval refinement with an exact algebraic fallback; no decision ever
rests on floating point.

The tower itself lives in a :class:`FieldContext`.  Radicands are adjoined
on demand by :func:`sqrt_nonneg`, which first searches the existing tower
for an exact square root.  Rational values are context-free; irrational
values from different contexts must not be mixed (``FieldContextError``).
Long-running batch jobs should call :func:`new_context` between independent
problem instances so towers stay small.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

from .errors import DivisionByZero, FieldContextError, NegativeRadicand

# A node is (0, Fraction) or (level, (a_node, b_node)) with level >= 1,
# the component nodes at levels < level, and b_node never the zero node.
Node = tuple

_F0 = Fraction(0)
_F1 = Fraction(1)
_ZERO: Node = (0, _F0)
_ONE: Node = (0, _F1)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class FieldContext:
    """A growable tower of quadratic extensions of the rationals."""

    _counter = 0
    _counter_lock = threading.Lock()

    def __init__(self) -> None:
        with FieldContext._counter_lock:
            FieldContext._counter += 1
            self.serial = FieldContext._counter
        self.radicands: list[Node] = []      # radicands[i] generates level i+1
        self.rad_depth: list[int] = []       # nested radical depth of sqrt(radicands[i])
        self.rad_index: dict[Node, int] = {}  # radicand node -> level
        self._sqrt_memo: dict[tuple[Node, int], Optional[Node]] = {}
        self._inv_memo: dict[Node, Node] = {}
        self._lock = threading.RLock()

    def adjoin(self, radicand: Node) -> int:
        """Append a radicand known not to be a square in the current tower."""
        with self._lock:
            self.radicands.append(radicand)
            level = len(self.radicands)
            self.rad_index[radicand] = level
            self.rad_depth.append(_node_depth(radicand, self) + 1)
            return level


_current = FieldContext()
_current_lock = threading.Lock()


def new_context() -> FieldContext:
    """Start a fresh field tower; subsequent radicals are adjoined to it.

    Existing values remain valid (they keep a reference to their own
    context) but irrational values from different contexts cannot be
    combined.
    """
    global _current
    with _current_lock:
        _current = FieldContext()
        return _current


def current_context() -> FieldContext:
    return _current


# ---------------------------------------------------------------------------
# raw node arithmetic


def _mk(level: int, a: Node, b: Node) -> Node:
    return a if b == _ZERO else (level, (a, b))


def _nneg(x: Node) -> Node:
    if x[0] == 0:
        return (0, -x[1])
    level, (a, b) = x
    return (level, (_nneg(a), _nneg(b)))


def _nadd(x: Node, y: Node) -> Node:
    lx, ly = x[0], y[0]
    if lx == 0 and ly == 0:
        return (0, x[1] + y[1])
    if lx < ly:
        x, y = y, x
        lx, ly = ly, lx
    a, b = x[1]
    if ly == lx:
        c, d = y[1]
        return _mk(lx, _nadd(a, c), _nadd(b, d))
    return _mk(lx, _nadd(a, y), b)


def _nsub(x: Node, y: Node) -> Node:
    return _nadd(x, _nneg(y))


def _nscale(x: Node, f: Fraction) -> Node:
    if f == 0:
        return _ZERO
    if x[0] == 0:
        return (0, x[1] * f)
    level, (a, b) = x
    return (level, (_nscale(a, f), _nscale(b, f)))


def _nmul(x: Node, y: Node, ctx: FieldContext) -> Node:
    lx, ly = x[0], y[0]
    if lx == 0:
        return _nscale(y, x[1])
    if ly == 0:
        return _nscale(x, y[1])
    if lx < ly:
        x, y = y, x
        lx, ly = ly, lx
    a, b = x[1]
    if ly < lx:
        return _mk(lx, _nmul(a, y, ctx), _nmul(b, y, ctx))
    c, d = y[1]
    r = ctx.radicands[lx - 1]
    ac = _nmul(a, c, ctx)
    bd = _nmul(b, d, ctx)
    ad = _nmul(a, d, ctx)
    bc = _nmul(b, c, ctx)
    return _mk(lx, _nadd(ac, _nmul(bd, r, ctx)), _nadd(ad, bc))


def _ninv(x: Node, ctx: FieldContext) -> Node:
    if x[0] == 0:
        if x[1] == 0:
            raise DivisionByZero("division by exact zero")
        return (0, 1 / x[1])
    level, (a, b) = x
    r = ctx.radicands[level - 1]
    # 1/(a + b*sqrt(r)) = (a - b*sqrt(r)) / (a^2 - b^2 r); the denominator is
    # nonzero because r is not a square in the lower field.
    den = _nsub(_nmul(a, a, ctx), _nmul(_nmul(b, b, ctx), r, ctx))
    inv_den = _ninv(den, ctx)
    return _mk(level, _nmul(a, inv_den, ctx), _nmul(_nneg(b), inv_den, ctx))


def _ndiv(x: Node, y: Node, ctx: FieldContext) -> Node:
    if y[0] == 0:
        if y[1] == 0:
            raise DivisionByZero("division by exact zero")
        return _nscale(x, 1 / y[1])
    return _nmul(x, _ninv(y, ctx), ctx)


def _node_depth(x: Node, ctx: FieldContext) -> int:
    if x[0] == 0:
        return 0
    level, (a, b) = x
    d = max(_node_depth(a, ctx), _node_depth(b, ctx))
    return max(d, ctx.rad_depth[level - 1])


# ---------------------------------------------------------------------------
# sign determination: interval refinement with an exact algebraic fallback


def _iv_round(lo: Fraction, hi: Fraction, prec: int) -> tuple[Fraction, Fraction]:
    scale = 1 << prec
    lo2 = Fraction(lo.numerator * scale // lo.denominator, scale)
    n = hi.numerator * scale
    q, rem = divmod(n, hi.denominator)
    hi2 = Fraction(q + (1 if rem else 0), scale)
    return lo2, hi2


def _iv_mul(a, b, prec):
    p1 = a[0] * b[0]
    p2 = a[0] * b[1]
    p3 = a[1] * b[0]
    p4 = a[1] * b[1]
    return _iv_round(min(p1, p2, p3, p4), max(p1, p2, p3, p4), prec)


def _iv_sqrt(x, prec):
    lo, hi = x
    if lo < 0:
        lo = _F0
    scale = 1 << (2 * prec)
    slo = isqrt(lo.numerator * scale // lo.denominator)
    shi = isqrt(hi.numerator * scale // hi.denominator) + 1
    return Fraction(slo, 1 << prec), Fraction(shi, 1 << prec)


def _node_interval(x: Node, ctx: FieldContext, prec: int):
    if x[0] == 0:
        return _iv_round(x[1], x[1], prec)
    level, (a, b) = x
    ia = _node_interval(a, ctx, prec)
    ib = _node_interval(b, ctx, prec)
    ir = _rad_sqrt_interval(level, ctx, prec)
    p = _iv_mul(ib, ir, prec)
    return _iv_round(ia[0] + p[0], ia[1] + p[1], prec)


def _rad_sqrt_interval(level: int, ctx: FieldContext, prec: int):
    cache = getattr(ctx, "_rad_iv", None)
    if cache is None:
        cache = ctx._rad_iv = {}
    key = (level, prec)
    got = cache.get(key)
    if got is None:
        got = _iv_sqrt(_node_interval(ctx.radicands[level - 1], ctx, prec), prec)
        cache[key] = got
    return got


def _nsign_exact(x: Node, ctx: FieldContext) -> int:
    if x[0] == 0:
        f = x[1]
        return (f > 0) - (f < 0)
    level, (a, b) = x
    sa = _nsign_exact(a, ctx)
    sb = _nsign_exact(b, ctx)
    if sa == 0:
        return sb
    if sa == sb:
        return sa
    r = ctx.radicands[level - 1]
    t = _nsub(_nmul(a, a, ctx), _nmul(_nmul(b, b, ctx), r, ctx))
    st = _nsign_exact(t, ctx)
    assert st != 0, "tower canonicity violated"
    return sa if st > 0 else sb


def _nsign(x: Node, ctx: FieldContext) -> int:
    if x[0] == 0:
        f = x[1]
        return (f > 0) - (f < 0)
    # canonical nodes of positive level are never zero, so refinement is a
    # complete decision procedure; the exact fallback bounds the work when
    # the value is extremely close to zero.
    for prec in (64, 128, 256, 512):
        lo, hi = _node_interval(x, ctx, prec)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
    return _nsign_exact(x, ctx)


# ---------------------------------------------------------------------------
# square roots inside and on top of the tower


def _rational_sqrt(f: Fraction) -> Optional[Fraction]:
    p, q = f.numerator, f.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


def _has_sqrt(x: Node, k: int, ctx: FieldContext) -> Optional[Node]:
    """An exact square root of x inside F(k), or None.  Requires x > 0.

    The scan over tower levels is iterative and memoized per node, so a
    long-lived context degrades gracefully instead of blowing the stack.
    """
    lx = x[0]
    memo = ctx._sqrt_memo
    entry = memo.get(x)
    if entry is None:
        entry = memo[x] = [lx, _sqrt_at_own_level(x, ctx)]
    checked, root = entry
    if root is None and checked < k:
        j = checked
        while root is None and j < k:
            j += 1
            root = _sqrt_t_branch(x, j, ctx)
        entry[0], entry[1] = j, root
    if root is None:
        return None
    return root if root[0] <= k else None


def _sqrt_at_own_level(x: Node, ctx: FieldContext) -> Optional[Node]:
    if x[0] == 0:
        r = _rational_sqrt(x[1])
        return None if r is None else (0, r)
    k = x[0]
    a, b = x[1]
    r = ctx.radicands[k - 1]
    disc = _nsub(_nmul(a, a, ctx), _nmul(_nmul(b, b, ctx), r, ctx))
    if _nsign(disc, ctx) < 0:
        return None
    w = _has_sqrt(disc, k - 1, ctx)
    if w is None:
        return None
    two = Fraction(1, 2)
    for w2 in (w, _nneg(w)):
        p = _nscale(_nadd(a, w2), two)
        if p == _ZERO or _nsign(p, ctx) < 0:
            continue
        s = _has_sqrt(p, k - 1, ctx)
        if s is None:
            continue
        t = _ndiv(_nscale(b, two), s, ctx)
        y = _mk(k, s, t)
        if _nsub(_nmul(y, y, ctx), x) == _ZERO:
            return y
    return None


def _sqrt_t_branch(x: Node, j: int, ctx: FieldContext) -> Optional[Node]:
    """A root of the form t*sqrt(r_j) with t in F(j-1), if any."""
    r = ctx.radicands[j - 1]
    inv_r = ctx._inv_memo.get(r)
    if inv_r is None:
        inv_r = ctx._inv_memo[r] = _ninv(r, ctx)
    t = _has_sqrt(_nmul(x, inv_r, ctx), j - 1, ctx)
    if t is not None:
        return _mk(j, _ZERO, t)
    return None


def _strip_square_factor(n: int) -> tuple[int, int]:
    """Return (s, m) with n = s*s*m, removing small square factors."""
    s = 1
    r = isqrt(n)
    if r * r == n:
        return r, 1
    for p in _SMALL_PRIMES:
        p2 = p * p
        while n % p2 == 0:
            n //= p2
            s *= p
    return s, n


def _csqrt(x: Node, ctx: FieldContext) -> Node:
    s = _nsign(x, ctx)
    if s < 0:
        raise NegativeRadicand("square root of a negative value")
    if s == 0:
        return _ZERO
    scale = _F1
    rad = x
    if x[0] == 0:
        # sqrt(p/q) = sqrt(p*q)/q; pull out small square factors so equal
        # rational radicands share one tower entry.
        f = x[1]
        m = f.numerator * f.denominator
        sq, m = _strip_square_factor(m)
        scale = Fraction(sq, f.denominator)
        if m == 1:
            return (0, scale)
        rad = (0, Fraction(m))
    with ctx._lock:
        level = ctx.rad_index.get(rad)
        if level is None:
            y = _has_sqrt(rad, len(ctx.radicands), ctx)
            if y is not None:
                if _nsign(y, ctx) < 0:
                    y = _nneg(y)
                return _nscale(y, scale)
            level = ctx.adjoin(rad)
        root: Node = (level, (_ZERO, _ONE))
    return _nscale(root, scale)


# ---------------------------------------------------------------------------
# public value type


RationalLike = Union[int, Fraction, "Constructible"]


class Constructible:
    """An exact constructible real number.  Immutable."""

    __slots__ = ("_node", "_ctx")

    def __init__(self, value: Union[int, str, Fraction] = 0):
        if isinstance(value, Constructible):
            self._node = value._node
            self._ctx = value._ctx
            return
        self._node = (0, Fraction(value))
        self._ctx = None

    @staticmethod
    def _wrap(node: Node, ctx: Optional[FieldContext]) -> "Constructible":
        v = Constructible.__new__(Constructible)
        v._node = node
        v._ctx = None if node[0] == 0 else ctx
        return v

    # -- context plumbing ---------------------------------------------------

    def _join_ctx(self, other: "Constructible") -> Optional[FieldContext]:
        a, b = self._ctx, other._ctx
        if a is None:
            return b
        if b is None or a is b:
            return a
        raise FieldContextError(
            "cannot mix irrational values from different field contexts"
        )

    def _ctx_or_current(self) -> FieldContext:
        return self._ctx if self._ctx is not None else _current

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "Constructible":
        if isinstance(value, Constructible):
            return value
        if isinstance(value, (int, Fraction)):
            return Constructible(value)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Constructible._wrap(_nadd(self._node, o._node), self._join_ctx(o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Constructible._wrap(_nsub(self._node, o._node), self._join_ctx(o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        ctx = self._join_ctx(o)
        return Constructible._wrap(
            _nmul(self._node, o._node, ctx if ctx is not None else _current), ctx
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        ctx = self._join_ctx(o)
        return Constructible._wrap(
            _ndiv(self._node, o._node, ctx if ctx is not None else _current), ctx
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __neg__(self):
        return Constructible._wrap(_nneg(self._node), self._ctx)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Constructible(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- decisions ----------------------------------------------------------

    def sign(self) -> int:
        """Exact trichotomy: -1, 0 or +1."""
        if self._node == _ZERO:
            return 0
        return _nsign(self._node, self._ctx_or_current())

    def is_zero(self) -> bool:
        return self._node == _ZERO

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o)._node == _ZERO

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __lt__(self, other):
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - self._coerce(other)).sign() >= 0

    def __hash__(self):
        if self._node[0] == 0:
            return hash(self._node[1])
        return hash((self._ctx.serial, self._node))

    def __bool__(self):
        return self._node != _ZERO

    # -- views --------------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self._node[0] == 0

    def as_fraction(self) -> Fraction:
        if self._node[0] != 0:
            raise ValueError("value is irrational")
        return self._node[1]

    def radical_depth(self) -> int:
        """Maximum nesting depth of square roots in the canonical form."""
        if self._node[0] == 0:
            return 0
        return _node_depth(self._node, self._ctx)

    def approx(self, digits: int) -> str:
        """Decimal approximation with absolute error below 10**-digits."""
        if digits < 1:
            raise ValueError("digits must be >= 1")
        node = self._node
        if node[0] == 0:
            mid = node[1]
        else:
            ctx = self._ctx
            bound = Fraction(1, 4 * 10 ** digits)
            prec = 64
            while True:
                lo, hi = _node_interval(node, ctx, prec)
                if hi - lo < bound:
                    mid = (lo + hi) / 2
                    break
                prec *= 2
        scaled = mid * 10 ** digits
        n = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
        sign = "-" if n < 0 else ""
        digits_str = str(abs(n)).rjust(digits + 1, "0")
        return f"{sign}{digits_str[:-digits]}.{digits_str[-digits:]}"

    def __float__(self):
        return float(Fraction(self.approx(17).replace(".", "")) / 10 ** 17)

    def __repr__(self):
        return f"Constructible({self.approx(6)}...)"

    def __str__(self):
        return to_prefix(self)


# ---------------------------------------------------------------------------
# module-level operation surface


def rational(numerator: int, denominator: int = 1) -> Constructible:
    return Constructible(Fraction(numerator, denominator))


def _as_value(x: RationalLike) -> Constructible:
    return x if isinstance(x, Constructible) else Constructible(x)


def add(a: RationalLike, b: RationalLike) -> Constructible:
    return _as_value(a) + _as_value(b)


def sub(a: RationalLike, b: RationalLike) -> Constructible:
    return _as_value(a) - _as_value(b)


def mul(a: RationalLike, b: RationalLike) -> Constructible:
    return _as_value(a) * _as_value(b)


def div(a: RationalLike, b: RationalLike) -> Constructible:
    return _as_value(a) / _as_value(b)


def sign(a: RationalLike) -> int:
    return _as_value(a).sign()


def sqrt_nonneg(a: RationalLike) -> Constructible:
    """The non-negative square root of a non-negative value."""
    v = _as_value(a)
    ctx = v._ctx_or_current()
    return Constructible._wrap(_csqrt(v._node, ctx), ctx)


def approx(a: RationalLike, digits: int) -> str:
    return _as_value(a).approx(digits)


ZERO = Constructible(0)
ONE = Constructible(1)
TWO = Constructible(2)


# ---------------------------------------------------------------------------
# canonical prefix serialization


def _ser(node: Node, ctx: Optional[FieldContext], out: list[str]) -> None:
    if node[0] == 0:
        out.append(str(node[1]))
        return
    level, (a, b) = node
    out.append("+")
    _ser(a, ctx, out)
    out.append("×")  # multiplication sign
    _ser(b, ctx, out)
    out.append("√")  # square root sign
    _ser(ctx.radicands[level - 1], ctx, out)


def to_prefix(x: Constructible) -> str:
    """Canonical prefix form over rational literals and + - * / sqrt."""
    out: list[str] = []
    _ser(x._node, x._ctx, out)
    return " ".join(out)


def from_prefix(text: str) -> Constructible:
    """Parse a prefix expression; inverse of :func:`to_prefix`."""
    tokens = text.split()
    pos = 0

    def parse() -> Constructible:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of expression")
        tok = tokens[pos]
        pos += 1
        if tok == "+":
            return parse() + parse()
        if tok in ("−", "-") :
            return parse() - parse()
        if tok == "×" or tok == "*":
            return parse() * parse()
        if tok == "÷" or tok == "/":
            return parse() / parse()
        if tok == "√" or tok == "sqrt":
            return sqrt_nonneg(parse())
        lit = tok.replace("−", "-")
        return Constructible(Fraction(lit))

    value = parse()
    if pos != len(tokens):
        raise ValueError("trailing tokens in expression")
    return value
