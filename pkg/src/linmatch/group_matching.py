"""Matchings between finite subsets of finite abelian groups.

A matching from A to B is a bijection ``phi: A -> B`` with ``a + phi(a)``
outside A for every ``a``.  Groups are direct products Z_n1 x ... x Z_nk and
elements are tuples reduced componentwise.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import SizeMismatch, SpecMismatch, TooLarge

MAX_GROUP_ORDER = 10**9
EXHAUSTIVE_LIMIT = 9

Element = tuple


@dataclass(frozen=True)
class GroupSpec:
    moduli: tuple

    def __post_init__(self):
        moduli = tuple(int(m) for m in self.moduli)
        if not moduli:
            raise ValueError("a group needs at least one cyclic factor")
        if any(m < 2 for m in moduli):
            raise ValueError(f"moduli must be >= 2, got {moduli}")
        if math.prod(moduli) > MAX_GROUP_ORDER:
            raise TooLarge(f"group order {math.prod(moduli)} exceeds {MAX_GROUP_ORDER}")
        object.__setattr__(self, "moduli", moduli)

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse ``"Z4"``, ``"Z2xZ3"`` or a bare ``"4"`` / ``"2,3"``."""
        parts = text.replace("×", "x").replace("*", "x").replace(",", "x").split("x")
        return cls(tuple(int(p.strip().lstrip("Zz")) for p in parts if p.strip()))

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    def reduce(self, element) -> Element:
        if isinstance(element, int):
            element = (element,)
        element = tuple(element)
        if len(element) != len(self.moduli):
            raise ValueError(f"element {element} has the wrong arity for {self}")
        return tuple(e % m for e, m in zip(element, self.moduli))

    def add(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    @property
    def zero(self) -> Element:
        return (0,) * len(self.moduli)

    def elements(self) -> Iterable[Element]:
        return itertools.product(*(range(m) for m in self.moduli))

    def format_element(self, a: Element) -> str:
        return ",".join(map(str, a))

    def __str__(self):
        return "x".join(f"Z{m}" for m in self.moduli)


@dataclass(frozen=True)
class GroupSubset:
    spec: GroupSpec
    elements: tuple

    def __post_init__(self):
        elems = sorted({self.spec.reduce(e) for e in self.elements})
        if not elems:
            raise ValueError("subsets must be nonempty")
        object.__setattr__(self, "elements", tuple(elems))

    @classmethod
    def of(cls, spec: GroupSpec, elements: Iterable) -> "GroupSubset":
        return cls(spec, tuple(elements))

    @classmethod
    def parse(cls, spec: GroupSpec, text: str) -> "GroupSubset":
        """Cyclic groups: ``"0,2"``.  Products: ``"0,1;1,2"`` (``;`` between elements)."""
        if len(spec.moduli) == 1 and ";" not in text:
            items = [(int(t),) for t in text.split(",") if t.strip()]
        else:
            items = [tuple(int(c) for c in t.split(",")) for t in text.split(";") if t.strip()]
        return cls(spec, tuple(items))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, a) -> bool:
        return self.spec.reduce(a) in self._set

    @cached_property
    def _set(self) -> frozenset:
        return frozenset(self.elements)

    def to_text(self) -> str:
        return ";".join(self.spec.format_element(a) for a in self.elements)


@dataclass(frozen=True)
class GroupMatching:
    pairs: tuple

    def as_dict(self) -> dict:
        return dict(self.pairs)


def _check(A: GroupSubset, B: GroupSubset):
    if A.spec != B.spec:
        raise SpecMismatch(f"{A.spec} vs {B.spec}")
    if len(A) != len(B):
        raise SizeMismatch(f"|A| = {len(A)} but |B| = {len(B)}")


def is_matching(A: GroupSubset, B: GroupSubset, phi: GroupMatching) -> bool:
    _check(A, B)
    G = A.spec
    firsts = [G.reduce(a) for a, _ in phi.pairs]
    seconds = [G.reduce(b) for _, b in phi.pairs]
    if sorted(firsts) != list(A.elements) or sorted(seconds) != list(B.elements):
        return False
    members = A._set
    return all(G.add(a, b) not in members for a, b in zip(firsts, seconds))


def compatibility_graph(A: GroupSubset, B: GroupSubset) -> list[list[int]]:
    """Adjacency lists: ``graph[i]`` holds the indices j with A[i] + B[j] not in A."""
    _check(A, B)
    G, members = A.spec, A._set
    return [[j for j, b in enumerate(B.elements) if G.add(a, b) not in members]
            for a in A.elements]


def _kuhn(graph: Sequence[Sequence[int]], n_right: int) -> list[Optional[int]]:
    match_right: list[Optional[int]] = [None] * n_right

    def augment(u: int, seen: list[bool]) -> bool:
        for v in graph[u]:
            if seen[v]:
                continue
            seen[v] = True
            if match_right[v] is None or augment(match_right[v], seen):
                match_right[v] = u
                return True
        return False

    for u in range(len(graph)):
        augment(u, [False] * n_right)
    return match_right


def find_matching(A: GroupSubset, B: GroupSubset) -> Optional[GroupMatching]:
    """A matching from A to B, or None if none exists.

    Maximum bipartite matching on the compatibility graph by augmenting paths
    (Kuhn), with vertices and neighbours visited in sorted order so the result
    is reproducible.
    """
    graph = compatibility_graph(A, B)
    match_right = _kuhn(graph, len(B))
    if any(u is None for u in match_right):
        return None
    phi = {A.elements[u]: B.elements[v] for v, u in enumerate(match_right)}
    return GroupMatching(tuple((a, phi[a]) for a in A.elements))


def exhaustive_matching_exists(A: GroupSubset, B: GroupSubset) -> bool:
    """Brute-force oracle over all |A|! bijections (|A| <= 9)."""
    _check(A, B)
    if len(A) > EXHAUSTIVE_LIMIT:
        raise TooLarge(f"|A| = {len(A)} exceeds the exhaustive limit {EXHAUSTIVE_LIMIT}")
    G, members = A.spec, A._set
    for perm in itertools.permutations(B.elements):
        if all(G.add(a, b) not in members for a, b in zip(A.elements, perm)):
            return True
    return False
