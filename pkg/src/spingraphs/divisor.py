"""Symbolic points, the hyperelliptic involution, and integral divisors.

Points carry no coordinates. A point is either the base point ``P`` or an
indexed point ``Pj``, optionally conjugated (``Pc``, ``Pjc``). Weierstrass
points are modelled as self-conjugate labels ``W_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


@dataclass(frozen=True, repr=False)
class PointLabel:
    """A symbolic point.

    ``index == 0`` is the base point, ``index >= 1`` an indexed point.
    Weierstrass labels ignore ``conjugated`` (they are their own conjugate).
    """

    index: int = 0
    conjugated: bool = False
    weierstrass: bool = False

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"point index must be >= 0, got {self.index}")
        if self.weierstrass and self.conjugated:
            raise ValueError("Weierstrass labels are self-conjugate")

    @property
    def is_base(self) -> bool:
        return self.index == 0

    def conjugate(self) -> PointLabel:
        if self.weierstrass:
            return self
        return PointLabel(self.index, not self.conjugated)

    def sort_key(self) -> tuple[int, int, int]:
        return (int(self.weierstrass), self.index, int(self.conjugated))

    def __lt__(self, other: PointLabel) -> bool:
        return self.sort_key() < other.sort_key()

    @property
    def name(self) -> str:
        """ASCII id used in exports: P, Pc, P1, P1c, W0, ..."""
        if self.weierstrass:
            return f"W{self.index}"
        stem = "P" if self.index == 0 else f"P{self.index}"
        return stem + ("c" if self.conjugated else "")

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"PointLabel({self.name!r})"

    @classmethod
    def parse(cls, name: str) -> PointLabel:
        if name.startswith("W") and name[1:].isdigit():
            return cls(int(name[1:]), weierstrass=True)
        conj = name.endswith("c")
        core = name[:-1] if conj else name
        if not core.startswith("P") or not (core[1:] == "" or core[1:].isdigit()):
            raise ValueError(f"not a point label: {name!r}")
        idx = int(core[1:]) if core[1:] else 0
        if core[1:] and idx == 0:
            raise ValueError(f"indexed points start at 1: {name!r}")
        return cls(idx, conj)


P = PointLabel(0)


def point(index: int = 0, conjugated: bool = False) -> PointLabel:
    return PointLabel(index, conjugated)


def weierstrass_point(index: int) -> PointLabel:
    return PointLabel(index, weierstrass=True)


class Divisor(Mapping[PointLabel, int]):
    """Immutable integral divisor: a multiset of points with positive weights.

    Behaves as a read-only mapping; absent points have multiplicity 0 via
    :meth:`mult`. Zero weights are dropped on construction.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[PointLabel, int] | Iterable[tuple[PointLabel, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[PointLabel, int] = {}
        for label, m in items:
            if not isinstance(label, PointLabel):
                raise TypeError(f"divisor keys must be PointLabel, got {type(label).__name__}")
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for {label}")
            acc[label] = acc.get(label, 0) + int(m)
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k] > 0}
        self._hash = None

    @classmethod
    def of(cls, *labels: PointLabel) -> Divisor:
        """Divisor from a list of points, repeated points counted."""
        return cls((lab, 1) for lab in labels)

    def __getitem__(self, label: PointLabel) -> int:
        return self._terms[label]

    def __iter__(self) -> Iterator[PointLabel]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Divisor):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def mult(self, label: PointLabel) -> int:
        return self._terms.get(label, 0)

    @property
    def degree(self) -> int:
        return sum(self._terms.values())

    @property
    def support(self) -> frozenset[PointLabel]:
        return frozenset(self._terms)

    def __mul__(self, other: Divisor) -> Divisor:
        """Divisor product (sum of weights)."""
        if not isinstance(other, Divisor):
            return NotImplemented
        return Divisor(list(self._terms.items()) + list(other._terms.items()))

    def conjugate(self) -> Divisor:
        return Divisor((lab.conjugate(), m) for lab, m in self._terms.items())

    def exponents(self) -> tuple[int, ...]:
        """Multiplicities in ascending order."""
        return tuple(sorted(self._terms.values()))

    def __repr__(self) -> str:
        return f"Divisor({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "1"
        return "*".join(
            lab.name if m == 1 else f"{lab.name}^{m}" for lab, m in self._terms.items()
        )


def conjugate_divisor(d: Divisor) -> Divisor:
    return d.conjugate()


def epsilon_degree(a: Divisor) -> int:
    """Number of distinct points in a vertex divisor."""
    return len(a.support)


def mutual_incidence_check(vertex_divisors: Mapping[PointLabel, Divisor]) -> bool:
    """True iff ``Q in {A_R}`` exactly when ``R in {A_Q}`` for all vertex pairs."""
    return not incidence_violations(vertex_divisors)


def incidence_violations(vertex_divisors: Mapping[PointLabel, Divisor]) -> list[tuple[PointLabel, PointLabel]]:
    """Ordered pairs ``(Q, R)`` with ``Q in {A_R}`` but ``R not in {A_Q}``."""
    bad = []
    for r, a_r in vertex_divisors.items():
        for q in a_r:
            if q == r or q not in vertex_divisors:
                continue
            if r not in vertex_divisors[q]:
                bad.append((q, r))
    return bad
