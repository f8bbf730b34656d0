"""Exceptional-class catalogue, branch numbers and surface types.

An exceptional class of genus ``g`` is identified by its exponent partition
``khat = (k0, ..., kr)`` of ``g + 1`` into ``r + 1`` ascending parts, ``r`` being
the order. The equivalent ``(i, p1, ..., pr)`` form has ``i = k0 - 1`` and
``pn = kn - k(n-1)``.

A surface type counts how many graphs of each class occur on a surface; the
counts are constrained by the total branch number ``4g``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .partitions import count_partitions, enumerate_partitions

GENUS_CEILING = 64


class GenusError(ValueError):
    pass


class BranchBudgetError(ValueError):
    pass


def check_genus(g: int, ceiling: int | None = GENUS_CEILING) -> int:
    """Reject ``g < 2`` and, unless ``ceiling`` is None, ``g > ceiling``."""
    if not isinstance(g, int) or isinstance(g, bool) or g < 2:
        raise GenusError(f"genus must be an integer >= 2, got {g!r}")
    if ceiling is not None and g > ceiling:
        raise GenusError(f"genus {g} exceeds the ceiling {ceiling}")
    return g


@dataclass(frozen=True)
class ExceptionalClass:
    genus: int
    khat: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "khat", tuple(int(k) for k in self.khat))
        g, khat = self.genus, self.khat
        if g < 2:
            raise GenusError(f"genus must be >= 2, got {g}")
        if not khat or len(khat) > g:
            raise ValueError(f"khat must have between 1 and {g} parts, got {khat}")
        if any(k < 1 for k in khat) or list(khat) != sorted(khat):
            raise ValueError(f"khat must be ascending positive integers, got {khat}")
        if sum(khat) != g + 1:
            raise ValueError(f"khat {khat} must sum to g+1 = {g + 1}")

    @classmethod
    def from_ip(cls, genus: int, i: int, p: Sequence[int]) -> ExceptionalClass:
        """Build from ``(i, p1, ..., pr)``; ``k0 = i + 1``, ``kn = k(n-1) + pn``."""
        if i < 0 or any(x < 0 for x in p):
            raise ValueError(f"i and p must be non-negative, got {i}, {tuple(p)}")
        ks = [i + 1]
        for step in p:
            ks.append(ks[-1] + step)
        return cls(genus, tuple(ks))

    @property
    def r(self) -> int:
        return len(self.khat) - 1

    @property
    def i(self) -> int:
        return self.khat[0] - 1

    @property
    def p(self) -> tuple[int, ...]:
        return tuple(b - a for a, b in zip(self.khat, self.khat[1:]))

    @property
    def vertex_count(self) -> int:
        return 2 * (self.r + 1)

    @property
    def branch_number(self) -> int:
        return branch_number(self)

    @cached_property
    def s(self) -> int:
        """1-based lexicographic rank of ``khat`` among classes of the same order."""
        return _classes_of_order(self.genus, self.r).index(self) + 1

    @property
    def label(self) -> str:
        return f"S^{self.r}_{self.s}"

    @property
    def ip_label(self) -> str:
        return "S_{" + ",".join(str(x) for x in (self.i, *self.p)) + "}"

    def __str__(self) -> str:
        return f"{self.label}(khat={self.khat})"


def order(c: ExceptionalClass) -> int:
    return c.r


def branch_number(c: ExceptionalClass) -> int:
    """Total branch number ``2(g - r)`` carried by a graph of class ``c``."""
    from_exponents = 2 * sum(k - 1 for k in c.khat)
    closed_form = 2 * (c.genus - c.r)
    # both follow from sum(khat) == g + 1; a mismatch means a corrupted class
    assert from_exponents == closed_form, (c, from_exponents, closed_form)
    return closed_form


def _check_order(g: int, r: int) -> None:
    if not 0 <= r <= g - 1:
        raise ValueError(f"order must satisfy 0 <= r <= g-1 = {g - 1}, got {r}")


def i_max(g: int, r: int) -> int:
    """Largest ``i = k0 - 1`` admitted by a class of order ``r``."""
    _check_order(g, r)
    return (g - r) // (r + 1)


@lru_cache(maxsize=None)
def _classes(g: int) -> tuple[ExceptionalClass, ...]:
    return tuple(
        ExceptionalClass(g, khat)
        for parts in range(1, g + 1)
        for khat in enumerate_partitions(g + 1, parts, 1)
    )


def classes_for_genus(g: int, ceiling: int = GENUS_CEILING) -> list[ExceptionalClass]:
    """All exceptional classes of genus ``g`` ordered by (r, khat)."""
    check_genus(g, ceiling)
    return list(_classes(g))


@lru_cache(maxsize=None)
def _classes_of_order(g: int, r: int) -> tuple[ExceptionalClass, ...]:
    return tuple(c for c in _classes(g) if c.r == r)


def classes_of_order(g: int, r: int) -> list[ExceptionalClass]:
    check_genus(g, None)
    _check_order(g, r)
    return list(_classes_of_order(g, r))


def max_i_classes(g: int, r: int) -> list[ExceptionalClass]:
    """Classes of order ``r`` reaching ``i = i_max(g, r)``."""
    top = i_max(g, r)
    return [c for c in classes_of_order(g, r) if c.i == top]


# Published lists of classes with i = i_max, keyed by order then g mod (r+1),
# each entry a p-vector. The r=3, g = 2 (mod 4) row omits (0, 1, 1).
PUBLISHED_MAX_I_TABLE: dict[int, dict[int, list[tuple[int, ...]]]] = {
    2: {0: [(0, 1)], 1: [(0, 2), (1, 0)], 2: [(0, 0)]},
    3: {3: [(0, 0, 0)], 2: [(1, 0, 0), (0, 0, 3)], 1: [(0, 1, 0), (0, 0, 2)], 0: [(0, 0, 1)]},
}


def published_max_i_classes(g: int, r: int) -> list[ExceptionalClass]:
    """Classes with ``i = i_max`` as listed in the residue tables for r = 2, 3."""
    if r not in PUBLISHED_MAX_I_TABLE:
        raise ValueError(f"no published residue table for order {r}")
    top = i_max(g, r)
    rows = PUBLISHED_MAX_I_TABLE[r][g % (r + 1)]
    return sorted((ExceptionalClass.from_ip(g, top, p) for p in rows), key=lambda c: c.khat)


def class_count(g: int, r: int) -> int:
    """N(r): number of classes of order ``r``, i.e. partitions of g+1 into r+1 parts."""
    check_genus(g, None)
    _check_order(g, r)
    return count_partitions(g + 1, r + 1, 1)


def class_count_split(g: int, r: int) -> tuple[int, int]:
    """N(r) split into (classes with i = 0, classes with i > 0), by enumeration.

    Classes with ``i = 0`` correspond to partitions of ``g`` into ``r`` parts
    (drop the leading 1); those with ``i > 0`` to partitions of ``g + 1`` into
    ``r + 1`` parts all at least 2.
    """
    check_genus(g, None)
    _check_order(g, r)
    if r == 0:
        return (0, 1)
    return (len(enumerate_partitions(g, r, 1)), len(enumerate_partitions(g + 1, r + 1, 2)))


def total_class_count(g: int) -> int:
    """M(g) = 1 + sum_{m=2}^{g} sigma_m(g+1)."""
    check_genus(g, None)
    return 1 + sum(count_partitions(g + 1, m, 1) for m in range(2, g + 1))


# --- surface types ---------------------------------------------------------

@dataclass(frozen=True)
class SurfaceType:
    """Counts ``m_{r,s}`` aligned with :func:`classes_for_genus` order."""

    genus: int
    counts: tuple[int, ...]
    classes: tuple[ExceptionalClass, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        check_genus(self.genus, None)
        if not self.classes:
            object.__setattr__(self, "classes", _classes(self.genus))
        if len(self.counts) != len(self.classes):
            raise ValueError(
                f"genus {self.genus} needs {len(self.classes)} counts, got {len(self.counts)}"
            )
        if any(m < 0 for m in self.counts):
            raise ValueError(f"counts must be non-negative, got {self.counts}")

    def as_mapping(self) -> dict[ExceptionalClass, int]:
        return dict(zip(self.classes, self.counts))

    @property
    def branch_total(self) -> int:
        return sum(m * c.branch_number for m, c in zip(self.counts, self.classes))

    @property
    def is_balanced(self) -> bool:
        return self.branch_total == 4 * self.genus


def branch_weights(g: int) -> tuple[int, ...]:
    return tuple(c.branch_number for c in _classes(check_genus(g, None)))


@lru_cache(maxsize=None)
def _blocks(bound: int, parts: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """``(block, sum(block))`` for non-negative ``parts``-tuples with sum <= bound.

    Descending lex order.
    """
    if parts == 1:
        return tuple(((v,), v) for v in range(bound, -1, -1))
    return tuple(
        ((head,) + tail, head + s)
        for head in range(bound, -1, -1)
        for tail, s in _blocks(bound - head, parts - 1)
    )


def iter_surface_types(g: int) -> Iterator[tuple[int, ...]]:
    """Yield every count tuple with ``sum m * B = 4g``, in descending lex order.

    All classes of one order share the weight ``2(g - r)`` and occupy a
    contiguous block of the tuple, so the search walks blocks of counts
    order by order instead of single entries.
    """
    check_genus(g, None)
    sizes = [len(_classes_of_order(g, r)) for r in range(g)]
    # halved budget: sum m * (g - r) == 2g

    def rec(r: int, remaining: int, prefix: tuple[int, ...]):
        if r == g - 1:
            # weight 1, single class: the count is forced
            yield prefix + (remaining,)
            return
        w = g - r
        for block, total in _blocks(remaining // w, sizes[r]):
            yield from rec(r + 1, remaining - total * w, prefix + block)

    yield from rec(0, 2 * g, ())


def enumerate_surface_types(g: int) -> list[SurfaceType]:
    classes = _classes(check_genus(g, None))
    return [SurfaceType(g, t, classes) for t in iter_surface_types(g)]


# Published surface-type lists; genus 3 omits five solutions of the budget equation.
PUBLISHED_SURFACE_TYPES: dict[int, tuple[tuple[int, ...], ...]] = {
    2: ((2, 0), (1, 2), (0, 4)),
    3: (
        (2, 0, 0, 0), (1, 1, 0, 1), (1, 0, 1, 1), (0, 1, 2, 0), (0, 2, 1, 0),
        (0, 1, 1, 2), (0, 1, 0, 4), (0, 0, 1, 4), (0, 0, 0, 6),
    ),
}


def is_published(t: SurfaceType | tuple[int, ...], g: int | None = None) -> bool | None:
    """Membership in the published list, or ``None`` where no list exists."""
    if isinstance(t, SurfaceType):
        g, counts = t.genus, t.counts
    else:
        counts = tuple(t)
    listed = PUBLISHED_SURFACE_TYPES.get(g)
    if listed is None:
        return None
    return counts in listed


@dataclass(frozen=True)
class LeafCensus:
    genus: int
    weierstrass_leaves: tuple[int, ...]
    # (class, number of graphs, vertices per graph)
    exceptional_leaves: tuple[tuple[ExceptionalClass, int, int], ...]
    standard_leaf_size: int
    branch_total: int

    @property
    def exceptional_leaf_count(self) -> int:
        return sum(n for _, n, _ in self.exceptional_leaves)

    @property
    def exceptional_point_count(self) -> int:
        return sum(n * size for _, n, size in self.exceptional_leaves)

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "weierstrass_leaves": list(self.weierstrass_leaves),
            "exceptional_leaves": [
                {"khat": list(c.khat), "r": c.r, "count": n, "size": size}
                for c, n, size in self.exceptional_leaves
            ],
            "standard_leaves": {"count": "generic", "size": self.standard_leaf_size},
            "branch_total": self.branch_total,
        }


def leaf_census(t: SurfaceType) -> LeafCensus:
    """Finite leaves of the foliation for a surface of type ``t``.

    Standard leaves form a non-finite generic family and are reported by size only.
    """
    g = t.genus
    total = t.branch_total
    if total != 4 * g:
        raise BranchBudgetError(f"branch total {total} != 4g = {4 * g} for counts {t.counts}")
    exc = tuple((c, m, c.vertex_count) for c, m in zip(t.classes, t.counts) if m)
    return LeafCensus(
        genus=g,
        weierstrass_leaves=(g + 1, g + 1),
        exceptional_leaves=exc,
        standard_leaf_size=2 * g + 2,
        branch_total=total,
    )
