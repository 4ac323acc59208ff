"""Buchberger's algorithm, ideal comparison and ideal intersection.

This is the general-purpose oracle: it knows nothing about graphs, and the
closed-form bases of :mod:`bei.edge_ideal` are checked against it.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import bounds
from .errors import DomainError, ResourceError
from .poly import (
    Monomial,
    MonomialOrder,
    Polynomial,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
)


@dataclass(frozen=True)
class IdealBasis:
    """A generating set together with the order it was computed for.

    When ``reduced`` is set the generators are monic, mutually reduced and
    sorted by increasing leading monomial, so two reduced bases of the same
    ideal compare equal as tuples.
    """

    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool = False

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.generators]


def _order_for(polys: Sequence[Polynomial], order: MonomialOrder | None) -> MonomialOrder:
    if order is not None:
        return order
    nvars = {p.nvars for p in polys}
    if len(nvars) != 1:
        raise DomainError(f"cannot infer a ring from generators with variable counts {sorted(nvars)}")
    return MonomialOrder.lex(nvars.pop())


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    """``(L/lt(f))*f - (L/lt(g))*g`` with ``L`` the lcm of the leading monomials."""
    if not f or not g:
        raise DomainError("S-polynomial of a zero polynomial is undefined")
    order = _order_for([f, g], order)
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = mono_lcm(mf, mg)
    return f.mul_term(mono_div(lcm, mf), 1 / cf) - g.mul_term(mono_div(lcm, mg), 1 / cg)


class _Reducer:
    """Leading data of a basis, cached for repeated division."""

    def __init__(self, basis: Sequence[Polynomial], order: MonomialOrder):
        self.order = order
        self.polys = list(basis)
        self.leads = [p.leading_term(order) for p in self.polys]

    def append(self, p: Polynomial):
        self.polys.append(p)
        self.leads.append(p.leading_term(self.order))

    def reduce(self, f: Polynomial, active: Sequence[int] | None = None) -> Polynomial:
        key = self.order.key
        idx = range(len(self.polys)) if active is None else active
        pending: dict[Monomial, Fraction] = f.terms
        rem: dict[Monomial, Fraction] = {}
        while pending:
            m = max(pending, key=key)
            c = pending[m]
            for k in idx:
                lm, lc = self.leads[k]
                if mono_divides(lm, m):
                    q = mono_div(m, lm)
                    factor = c / lc
                    for gm, gc in self.polys[k]._terms.items():
                        t = tuple(a + b for a, b in zip(gm, q))
                        s = pending.get(t, 0) - factor * gc
                        if s:
                            pending[t] = s
                        else:
                            pending.pop(t, None)
                    break
            else:
                rem[m] = c
                del pending[m]
        return Polynomial._raw(rem, f.nvars)


def normal_form(f: Polynomial, basis, order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of ``f`` under full multivariate division by ``basis``.

    ``basis`` is an :class:`IdealBasis` or a sequence of polynomials.  At
    each step the largest remaining term is divided by the first generator
    whose leading monomial divides it.
    """
    if isinstance(basis, IdealBasis):
        order = basis.order if order is None else order
        polys = list(basis.generators)
    else:
        polys = [p for p in basis if p]
    if not polys:
        return f
    order = _order_for(polys + [f], order)
    return _Reducer(polys, order).reduce(f)


def _interreduce(G: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    key = order.key
    G = [g.monic(order) for g in G]
    # keep generators whose leading monomial is not divisible by another one
    G.sort(key=lambda g: key(g.leading_monomial(order)))
    minimal: list[Polynomial] = []
    for g in G:
        lm = g.leading_monomial(order)
        if not any(mono_divides(h.leading_monomial(order), lm) for h in minimal):
            minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        if others:
            lm, lc = g.leading_term(order)
            tail = g - Polynomial._raw({lm: lc}, g.nvars)
            g = Polynomial._raw({lm: lc}, g.nvars) + _Reducer(others, order).reduce(tail)
        out.append(g)
    return out


def buchberger_reduced(gens: Sequence[Polynomial], order: MonomialOrder | None = None) -> IdealBasis:
    """The reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are processed smallest-lcm first (normal strategy); pairs with
    coprime leading monomials are skipped.
    """
    gens = list(gens)
    nonzero = [g for g in gens if g]
    if not nonzero:
        raise DomainError("cannot compute a Groebner basis of the zero ideal (no nonzero generators)")
    order = _order_for(nonzero, order)
    key = order.key

    G = _Reducer([], order)
    queue: list = []
    counter = 0

    def add(p: Polynomial):
        nonlocal counter
        p = p.monic(order)
        new = len(G.polys)
        G.append(p)
        lm_new = G.leads[new][0]
        for k in range(new):
            lm = G.leads[k][0]
            if mono_coprime(lm, lm_new):
                continue
            lcm = mono_lcm(lm, lm_new)
            heapq.heappush(queue, (key(lcm), counter, k, new))
            counter += 1

    for g in nonzero:
        h = G.reduce(g) if G.polys else g
        if h:
            add(h)
    while queue:
        _, _, a, b = heapq.heappop(queue)
        s = s_polynomial(G.polys[a], G.polys[b], order)
        h = G.reduce(s)
        if h:
            add(h)
    reduced = _interreduce(G.polys, order)
    reduced.sort(key=lambda g: key(g.leading_monomial(order)))
    return IdealBasis(tuple(reduced), order, True)


def _is_zero_ideal(polys: Sequence[Polynomial]) -> bool:
    return not any(polys)


def ideal_equal(A: Sequence[Polynomial], B: Sequence[Polynomial], order: MonomialOrder | None = None) -> bool:
    """Whether ``A`` and ``B`` generate the same ideal (via reduced bases)."""
    if _is_zero_ideal(A) or _is_zero_ideal(B):
        return _is_zero_ideal(A) and _is_zero_ideal(B)
    order = _order_for([p for p in list(A) + list(B) if p], order)
    return buchberger_reduced(A, order).generators == buchberger_reduced(B, order).generators


def ideal_contains(A: Sequence[Polynomial], f: Polynomial, order: MonomialOrder | None = None) -> bool:
    if not f:
        return True
    if _is_zero_ideal(A):
        return False
    order = _order_for([p for p in A if p] + [f], order)
    return not normal_form(f, buchberger_reduced(A, order))


def intersect(A: Sequence[Polynomial], B: Sequence[Polynomial], max_vars: int | None = None) -> list[Polynomial]:
    """Generators of the intersection of two ideals.

    Adjoins a variable ``t``, takes a lex basis of ``t*A + (1 - t)*B`` with
    ``t`` ranked highest and keeps the elements free of ``t``.  The result
    is the reduced lex basis of the intersection.
    """
    A = [p for p in A if p]
    B = [p for p in B if p]
    if not A or not B:
        return []
    nvars = _order_for(A + B, None).nvars
    limit = bounds.get("MAX_INTERSECT_VARS") if max_vars is None else max_vars
    if nvars + 1 > limit:
        raise ResourceError(
            f"intersection needs {nvars + 1} variables, above the bound {limit} (BEI_MAX_INTERSECT_VARS)"
        )
    t = Polynomial.variable(nvars, nvars + 1)
    one_minus_t = 1 - t
    gens = [t * a.extend() for a in A] + [one_minus_t * b.extend() for b in B]
    order = MonomialOrder.eliminating(nvars + 1, [nvars])
    basis = buchberger_reduced(gens, order)
    return [g.drop_trailing() for g in basis.generators if not g.depends_on(nvars)]
