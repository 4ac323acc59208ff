"""Exact sparse multivariate polynomials over the rationals.

Monomials are plain exponent tuples.  In a ring for a graph on ``n`` vertices
there are ``2n`` variables, ``x1..xn`` at indices ``0..n-1`` and ``y1..yn`` at
indices ``n..2n-1``, so the default lexicographic order (index 0 largest)
is exactly ``x1 > ... > xn > y1 > ... > yn``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, ParseError

Monomial = tuple[int, ...]
Term = tuple[Monomial, Fraction]


@dataclass(frozen=True)
class MonomialOrder:
    """Lexicographic order with an explicit variable priority.

    ``priority[0]`` is the most significant variable.  The identity priority
    compares exponent tuples directly.
    """

    priority: tuple[int, ...]

    @classmethod
    def lex(cls, nvars: int) -> "MonomialOrder":
        return cls(tuple(range(nvars)))

    @classmethod
    def eliminating(cls, nvars: int, first: Sequence[int]) -> "MonomialOrder":
        """Lex order ranking the variables in ``first`` above all others."""
        head = tuple(first)
        return cls(head + tuple(v for v in range(nvars) if v not in head))

    def __post_init__(self):
        if sorted(self.priority) != list(range(len(self.priority))):
            raise DomainError(f"priority {self.priority} is not a permutation")
        object.__setattr__(self, "_identity", self.priority == tuple(range(len(self.priority))))

    @property
    def nvars(self) -> int:
        return len(self.priority)

    def key(self, m: Monomial):
        if self._identity:
            return m
        return tuple(m[v] for v in self.priority)

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        return compare(m1, m2, self)


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder) -> int:
    """-1, 0 or 1 as ``m1`` is smaller than, equal to or greater than ``m2``."""
    if len(m1) != len(m2) or len(m1) != order.nvars:
        raise DomainError(f"monomial lengths {len(m1)}, {len(m2)} do not match the order on {order.nvars} variables")
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(b: Monomial, a: Monomial) -> bool:
    return all(y <= x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def is_squarefree(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def default_names(nvars: int) -> list[str]:
    """``x1..xn, y1..yn`` for an even count; an odd count gets a trailing ``t``."""
    n, extra = divmod(nvars, 2)
    names = [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]
    if extra:
        names.append("t")
    return names


class Polynomial:
    """An immutable polynomial in ``nvars`` variables with exact rational coefficients.

    Terms are kept in a dict keyed by exponent tuple; ordering is applied only
    when asked for (``sorted_terms``, ``leading_term``), since several orders
    are in play at once during elimination.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable[tuple[Monomial, object]] = (), nvars: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for m, c in items:
            m = tuple(int(e) for e in m)
            c = Fraction(c)
            if nvars is None:
                nvars = len(m)
            if len(m) != nvars:
                raise DomainError(f"monomial {m} has length {len(m)}, expected {nvars}")
            if any(e < 0 for e in m):
                raise DomainError(f"negative exponent in {m}")
            total = clean.get(m, 0) + c
            if total:
                clean[m] = total
            else:
                clean.pop(m, None)
        if nvars is None:
            raise DomainError("nvars is required for the zero polynomial")
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction], nvars: int) -> "Polynomial":
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> "Polynomial":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, m: Monomial, c=1) -> "Polynomial":
        return cls({tuple(m): c}, len(m))

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Polynomial":
        m = [0] * nvars
        m[index] = 1
        return cls({tuple(m): 1}, nvars)

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other: "Polynomial"):
        if other.nvars != self.nvars:
            raise DomainError(f"ring mismatch: {self.nvars} vs {other.nvars} variables")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.nvars)
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            if not c:
                return Polynomial.zero(self.nvars)
            return Polynomial._raw({m: v * c for m, v in self._terms.items()}, self.nvars)
        self._check(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(out, self.nvars)

    __rmul__ = __mul__

    def mul_term(self, m: Monomial, c=1) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw({mono_mul(k, m): v * c for k, v in self._terms.items()}, self.nvars)

    def sorted_terms(self, order: MonomialOrder | None = None) -> list[Term]:
        """Terms in strictly decreasing order (default: lex on the index order)."""
        if order is None:
            return sorted(self._terms.items(), reverse=True)
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder | None = None) -> Term:
        if not self._terms:
            raise DomainError("the zero polynomial has no leading term")
        if order is None:
            m = max(self._terms)
        else:
            m = max(self._terms, key=order.key)
        return m, self._terms[m]

    def leading_monomial(self, order: MonomialOrder | None = None) -> Monomial:
        return self.leading_term(order)[0]

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self._terms:
            return self
        _, c = self.leading_term(order)
        return self if c == 1 else self * (1 / c)

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def depends_on(self, index: int) -> bool:
        return any(m[index] for m in self._terms)

    def extend(self, extra: int = 1) -> "Polynomial":
        """Same polynomial in a ring with ``extra`` new trailing variables."""
        pad = (0,) * extra
        return Polynomial._raw({m + pad: c for m, c in self._terms.items()}, self.nvars + extra)

    def drop_trailing(self, count: int = 1) -> "Polynomial":
        """Inverse of :meth:`extend`; the dropped variables must not occur."""
        if any(any(m[-count:]) for m in self._terms):
            raise DomainError("polynomial involves a variable that is being dropped")
        return Polynomial._raw({m[:-count]: c for m, c in self._terms.items()}, self.nvars - count)

    def rename(self, mapping: Sequence[int], nvars: int) -> "Polynomial":
        """Send variable ``k`` to variable ``mapping[k]`` of a ring with ``nvars`` variables."""
        out: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            new = [0] * nvars
            for k, e in enumerate(m):
                if e:
                    new[mapping[k]] += e
            out[tuple(new)] = out.get(tuple(new), 0) + c
        return Polynomial(out, nvars)

    # -- serialization --------------------------------------------------------

    def to_text(self, names: Sequence[str] | None = None, order: MonomialOrder | None = None) -> str:
        names = default_names(self.nvars) if names is None else names
        if not self._terms:
            return "0"
        pieces = []
        for k, (m, c) in enumerate(self.sorted_terms(order)):
            factors = []
            for idx, e in enumerate(m):
                if e == 1:
                    factors.append(names[idx])
                elif e > 1:
                    factors.append(f"{names[idx]}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if k == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    def to_json(self) -> list:
        return [[c.numerator, c.denominator, list(m)] for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data, nvars: int | None = None) -> "Polynomial":
        try:
            return cls(((tuple(m), Fraction(num, den)) for num, den, m in data), nvars)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad polynomial JSON: {exc}") from None

    @classmethod
    def from_text(cls, text: str, nvars: int, names: Sequence[str] | None = None) -> "Polynomial":
        return parse_polynomial(text, nvars, names)

    def __repr__(self):
        return f"Polynomial({self.to_text()!r}, nvars={self.nvars})"

    def __str__(self):
        return self.to_text()


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?|([+\-*]))")


def parse_polynomial(text: str, nvars: int, names: Sequence[str] | None = None) -> Polynomial:
    """Parse the text form produced by :meth:`Polynomial.to_text`.

    Grammar: signed terms joined by ``+``/``-``, each term a ``*``-product of
    rational coefficients and ``name`` or ``name^k`` factors.
    """
    names = default_names(nvars) if names is None else list(names)
    index = {name: k for k, name in enumerate(names)}
    terms: dict[Monomial, Fraction] = {}
    pos = 0
    s = text.strip()
    if s == "0":
        return Polynomial.zero(nvars)
    sign = 1
    coeff = Fraction(1)
    mono = [0] * nvars
    expect_factor = True
    seen_any = False

    def flush():
        m = tuple(mono)
        terms[m] = terms.get(m, 0) + sign * coeff

    while pos < len(s):
        match = _TOKEN.match(s, pos)
        if not match or match.end() == pos:
            raise ParseError(f"unexpected character at column {pos + 1} in {text!r}")
        num, name, power, op = match.groups()
        col = match.end() - len(match.group(0).lstrip()) + 1
        pos = match.end()
        if op in ("+", "-"):
            if expect_factor and seen_any:
                raise ParseError(f"dangling operator at column {col} in {text!r}")
            if seen_any:
                flush()
            sign = 1 if op == "+" else -1
            coeff = Fraction(1)
            mono = [0] * nvars
            expect_factor = True
            seen_any = True
            continue
        if op == "*":
            if expect_factor:
                raise ParseError(f"unexpected '*' at column {col} in {text!r}")
            expect_factor = True
            continue
        if not expect_factor:
            raise ParseError(f"missing operator before column {col} in {text!r}")
        if num is not None:
            coeff *= Fraction(num)
        else:
            if name not in index:
                raise ParseError(f"unknown variable {name!r} at column {col} in {text!r}")
            mono[index[name]] += int(power) if power else 1
        expect_factor = False
        seen_any = True
    if expect_factor:
        raise ParseError(f"incomplete expression {text!r}")
    flush()
    return Polynomial(terms, nvars)


def polys_to_json(polys: Iterable[Polynomial]) -> str:
    return json.dumps([p.to_json() for p in polys])
