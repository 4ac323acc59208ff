"""Conditional-independence robustness specifications with a binary output.

Input states ``x = (x_1, ..., x_N)`` with ``x_k`` in ``1..d_k`` are numbered
``1..M`` in mixed radix with ``x_1`` most significant.  The elementary
probabilities ``p_{a,x}`` (``a`` the output value, 1 or 2) form a ``2 x M``
matrix; the 2-minor on columns ``x, x'`` is the edge binomial on the labels of
``x`` and ``x'`` under ``x_v -> p_{1,state(v)}``, ``y_v -> p_{2,state(v)}``.

A statement ``X_0 _||_ X_S | X_T`` (``S`` and ``T`` partitioning ``1..N``)
contributes every pair of states that agree on ``T``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

from . import bounds
from .edge_ideal import binomial
from .errors import DomainError, ParseError, ResourceError
from .graph import LabeledGraph
from .poly import Polynomial
from .primes import PrimeComponent, minimal_primes

State = tuple[int, ...]


@dataclass(frozen=True)
class StateSpace:
    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if not self.dims:
            raise DomainError("at least one input variable is required")
        for k, d in enumerate(self.dims, 1):
            if d < 2:
                raise DomainError(f"d{k} = {d}; every input variable needs at least 2 states")

    @property
    def N(self) -> int:
        return len(self.dims)

    @property
    def size(self) -> int:
        return prod(self.dims)

    def states(self) -> list[State]:
        """All states in label order."""
        return list(itertools.product(*(range(1, d + 1) for d in self.dims)))

    def label(self, state: Sequence[int]) -> int:
        if len(state) != self.N:
            raise DomainError(f"state {tuple(state)} has {len(state)} coordinates, expected {self.N}")
        out = 0
        for x, d in zip(state, self.dims):
            if not 1 <= x <= d:
                raise DomainError(f"state {tuple(state)} out of range for dims {self.dims}")
            out = out * d + (x - 1)
        return out + 1

    def state(self, label: int) -> State:
        if not 1 <= label <= self.size:
            raise DomainError(f"label {label} outside 1..{self.size}")
        rest = label - 1
        coords = []
        for d in reversed(self.dims):
            rest, x = divmod(rest, d)
            coords.append(x + 1)
        return tuple(reversed(coords))

    def _check_bound(self):
        limit = bounds.get("MAX_STATES")
        if self.size > limit:
            raise ResourceError(f"{self.size} input states exceed the bound {limit} (BEI_MAX_STATES)")


@dataclass(frozen=True)
class Statement:
    """``X_0 _||_ X_S | X_T``."""

    S: frozenset[int]
    T: frozenset[int]

    def __str__(self):
        s = ",".join(str(k) for k in sorted(self.S))
        t = ",".join(str(k) for k in sorted(self.T))
        return f"X0 _||_ X{{{s}}} | X{{{t}}}" if t else f"X0 _||_ X{{{s}}}"


@dataclass(frozen=True)
class RobustnessSpec:
    statements: tuple[Statement, ...]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Iterable[int], Iterable[int]]]) -> "RobustnessSpec":
        return cls(tuple(Statement(frozenset(S), frozenset(T)) for S, T in pairs))

    @classmethod
    def hamming(cls, N: int, k: int) -> "RobustnessSpec":
        """The statements for every ``k``-element ``S``."""
        if not 1 <= k <= N:
            raise DomainError(f"k must lie in 1..{N}, got {k}")
        full = frozenset(range(1, N + 1))
        return cls(tuple(Statement(frozenset(S), full - frozenset(S))
                         for S in itertools.combinations(range(1, N + 1), k)))

    def validate(self, N: int):
        full = frozenset(range(1, N + 1))
        for k, st in enumerate(self.statements):
            if not st.S:
                raise DomainError(f"statement {k}: S must be nonempty")
            if st.S & st.T:
                raise DomainError(f"statement {k}: S and T overlap in {sorted(st.S & st.T)}")
            if st.S | st.T != full:
                raise DomainError(f"statement {k}: S and T must partition 1..{N}")


def spec_to_graph(spec: RobustnessSpec, space: StateSpace) -> LabeledGraph:
    spec.validate(space.N)
    space._check_bound()
    states = space.states()
    edges = set()
    for st in spec.statements:
        T = sorted(st.T)
        groups: dict[tuple[int, ...], list[int]] = {}
        for label, x in enumerate(states, 1):
            groups.setdefault(tuple(x[k - 1] for k in T), []).append(label)
        for members in groups.values():
            edges.update(itertools.combinations(members, 2))
    return LabeledGraph(space.size, frozenset(edges))


def hamming_graph(space: StateSpace, k: int) -> LabeledGraph:
    """States joined when they differ in at most ``k`` coordinates."""
    if not 1 <= k <= space.N:
        raise DomainError(f"k must lie in 1..{space.N}, got {k}")
    space._check_bound()
    states = space.states()
    edges = set()
    for a, b in itertools.combinations(range(len(states)), 2):
        if sum(u != v for u, v in zip(states[a], states[b])) <= k:
            edges.add((a + 1, b + 1))
    return LabeledGraph(space.size, frozenset(edges))


def probability_names(space: StateSpace) -> list[str]:
    """Variable names ``p1x..`` then ``p2x..``; digits are bracketed once any ``d_k`` exceeds 9."""
    def name(a, x):
        if max(space.dims) <= 9:
            return f"p{a}" + "".join(str(v) for v in x)
        return f"p[{a}," + ",".join(str(v) for v in x) + "]"

    states = space.states()
    return [name(1, x) for x in states] + [name(2, x) for x in states]


@dataclass(frozen=True)
class CIBinomial:
    """``p_{1x} p_{2x'} - p_{2x} p_{1x'}`` for states ``x`` before ``x'`` in label order."""

    x: State
    x_prime: State
    polynomial: Polynomial

    def to_text(self, space: StateSpace) -> str:
        return self.polynomial.to_text(probability_names(space))


def ci_generators(spec: RobustnessSpec, space: StateSpace) -> list[CIBinomial]:
    G = spec_to_graph(spec, space)
    out = []
    for a, b in G.sorted_edges():
        out.append(CIBinomial(space.state(a), space.state(b), binomial(G.n, a, b)))
    return out


@dataclass(frozen=True)
class StatisticalComponent:
    structural_zeros: tuple[State, ...]
    blocks: tuple[tuple[State, ...], ...]
    dimension: int
    height: int

    def narrative(self) -> str:
        zeros = ", ".join(_fmt_state(s) for s in self.structural_zeros) or "none"
        lines = [f"structural zeros: {zeros}"]
        for k, block in enumerate(self.blocks, 1):
            lines.append(f"  block C={k}: {{" + ", ".join(_fmt_state(s) for s in block) + "}")
        c = len(self.blocks)
        if c == 1:
            lines.append("  X0 is independent of the inputs on the support (X[N] -> C -> X0 with C constant)")
        else:
            lines.append(f"  X[N] -> C -> X0 with C recording which of the {c} blocks the input lies in")
        lines.append(f"  parametrization: distribution on {c} block(s) x per-block distribution of X0; "
                     f"dimension {self.dimension}")
        return "\n".join(lines)


def _fmt_state(s: State) -> str:
    return "(" + ",".join(str(v) for v in s) + ")"


def _statistical(space: StateSpace, P: PrimeComponent) -> StatisticalComponent:
    return StatisticalComponent(
        tuple(space.state(v) for v in P.S),
        tuple(tuple(space.state(v) for v in block) for block in P.blocks),
        P.dimension,
        P.height,
    )


def decompose_spec(spec: RobustnessSpec, space: StateSpace) -> list[StatisticalComponent]:
    G = spec_to_graph(spec, space)
    return [_statistical(space, P) for P in minimal_primes(G).components]


@dataclass(frozen=True)
class ImpliedStatement:
    S: frozenset[int]
    T: frozenset[int]
    unconditional: bool

    def __str__(self):
        return str(Statement(self.S, self.T))


def full_support_implication(spec: RobustnessSpec) -> ImpliedStatement:
    """What a full-support distribution satisfying ``spec`` must also satisfy.

    ``X_0`` is independent of the union of the ``S_i`` given the intersection
    of the ``T_i``; with an empty intersection this is unconditional.
    """
    if not spec.statements:
        raise DomainError("the specification has no statements")
    S = frozenset().union(*(st.S for st in spec.statements))
    T = frozenset.intersection(*(st.T for st in spec.statements))
    return ImpliedStatement(S, T, not T)


# -- serialization ------------------------------------------------------------

def spec_from_dict(data: dict) -> tuple[RobustnessSpec, StateSpace]:
    """Read ``{"dims": [...], "statements": [{"S": [...], "T": [...]}, ...]}``
    or ``{"dims": [...], "hamming_k": k}``."""
    if not isinstance(data, dict) or "dims" not in data:
        raise ParseError('spec JSON must be an object with "dims"')
    try:
        space = StateSpace(tuple(data["dims"]))
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad dims: {exc}") from None
    if "hamming_k" in data:
        if "statements" in data:
            raise ParseError('give either "statements" or "hamming_k", not both')
        return RobustnessSpec.hamming(space.N, int(data["hamming_k"])), space
    if "statements" not in data:
        raise ParseError('spec JSON needs "statements" or "hamming_k"')
    pairs = []
    for k, st in enumerate(data["statements"]):
        if not isinstance(st, dict) or "S" not in st or "T" not in st:
            raise ParseError(f'statements[{k}] must be an object with "S" and "T"')
        try:
            pairs.append(([int(v) for v in st["S"]], [int(v) for v in st["T"]]))
        except (TypeError, ValueError):
            raise ParseError(f"statements[{k}]: indices must be integers") from None
    spec = RobustnessSpec.from_pairs(pairs)
    spec.validate(space.N)
    return spec, space


def spec_to_dict(spec: RobustnessSpec, space: StateSpace) -> dict:
    return {
        "dims": list(space.dims),
        "statements": [{"S": sorted(st.S), "T": sorted(st.T)} for st in spec.statements],
    }


def parse_spec(text: str) -> tuple[RobustnessSpec, StateSpace]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid spec JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return spec_from_dict(data)


def component_to_dict(comp: StatisticalComponent) -> dict:
    return {
        "structural_zeros": [list(s) for s in comp.structural_zeros],
        "blocks": [[list(s) for s in b] for b in comp.blocks],
        "dimension": comp.dimension,
        "height": comp.height,
    }
