"""Matroids on a small ground set, with exact derived structure.

A matroid on {1..n} is stored as its ground-set size together with the
family of bases, each basis encoded as an n-bit mask (element i <-> bit
i-1).  All derived data (independent sets, rank function, closure, flats,
circuits, parallel classes) is computed exactly and cached on the object.

Ground sets are deliberately tiny: the catalog builder enumerates every
labeled matroid on up to six elements by filtering r-subset families
through the basis-exchange axiom, which is what the verification suites
iterate over.  Constructors (uniform, graphic, direct sums, minors) work
at any size that fits in memory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence


Mask = int

ENUMERATION_MAX_GROUND = 6


class MatroidError(ValueError):
    """Base class for matroid construction/validation failures."""


class EmptyBasesError(MatroidError):
    pass


class UnequalCardinalityError(MatroidError):
    pass


class ExchangeViolationError(MatroidError):
    def __init__(self, b1: Mask, b2: Mask, x: int):
        self.b1, self.b2, self.x = b1, b2, x
        super().__init__(
            f"exchange fails for bases {sorted(elems_of(b1))} and "
            f"{sorted(elems_of(b2))} at element {x}"
        )


class NotAFlatError(MatroidError):
    pass


def mask_of(elements: Iterable[int]) -> Mask:
    """Bit mask of a collection of 1-based elements."""
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elems_of(mask: Mask) -> tuple[int, ...]:
    """Sorted 1-based elements of a mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def bits_of(mask: Mask) -> Iterator[int]:
    """0-based bit positions of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: Mask) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class ParallelDecomposition:
    """Loops plus the partition of non-loops into parallel classes."""

    loops: Mask
    classes: tuple[Mask, ...]  # disjoint, non-empty, sorted by least element

    def class_of(self, e: int) -> Optional[Mask]:
        bit = 1 << (e - 1)
        for c in self.classes:
            if c & bit:
                return c
        return None


@dataclass(frozen=True)
class IndepProfile:
    """Independent-set counts by size and their normalizations.

    counts[k] is the number of independent k-sets; normalized[k] is
    counts[k] / C(n, k) as an exact rational.
    """

    counts: tuple[int, ...]
    normalized: tuple[Fraction, ...]


class Matroid:
    """Immutable matroid given by its basis family.

    Use :func:`validate_bases` (or the named constructors) to build one;
    the raw constructor trusts its input.
    """

    __slots__ = ("n", "bases", "rank", "_cache")

    def __init__(self, n: int, bases: frozenset[Mask], *, _trusted: bool = False):
        if not _trusted:
            check_exchange(n, bases)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bases", frozenset(bases))
        object.__setattr__(self, "rank", popcount(next(iter(bases))))
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, *a):  # pragma: no cover - guard
        raise AttributeError("Matroid is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matroid)
            and self.n == other.n
            and self.bases == other.bases
        )

    def __hash__(self) -> int:
        return hash((self.n, self.bases))

    def __repr__(self) -> str:
        bs = sorted(sorted(elems_of(b)) for b in self.bases)
        return f"Matroid(n={self.n}, bases={bs})"

    @property
    def ground_mask(self) -> Mask:
        return (1 << self.n) - 1

    def _cached(self, key, builder):
        cache = self._cache
        if key not in cache:
            cache[key] = builder()
        return cache[key]

    # -- independence ----------------------------------------------------

    @property
    def independent_masks(self) -> frozenset[Mask]:
        """All independent sets, as masks (downward closure of the bases)."""

        def build():
            seen = set(self.bases)
            frontier = list(self.bases)
            while frontier:
                s = frontier.pop()
                for b in bits_of(s):
                    t = s ^ (1 << b)
                    if t not in seen:
                        seen.add(t)
                        frontier.append(t)
            return frozenset(seen)

        return self._cached("indep", build)

    def is_independent(self, subset: Mask) -> bool:
        return subset in self.independent_masks

    @property
    def rank_table(self) -> Sequence[int]:
        """rank(S) for every S in 0..2^n-1; rank(S) = max over bases |B & S|."""

        def build():
            bases = tuple(self.bases)
            return [
                max(popcount(b & s) for b in bases) for s in range(1 << self.n)
            ]

        return self._cached("rank_table", build)

    def rank_of(self, subset: Mask) -> int:
        return self.rank_table[subset]

    @property
    def closure_table(self) -> Sequence[Mask]:
        def build():
            rank = self.rank_table
            out = []
            for s in range(1 << self.n):
                cl = s
                r = rank[s]
                rest = self.ground_mask & ~s
                for b in bits_of(rest):
                    if rank[s | (1 << b)] == r:
                        cl |= 1 << b
                out.append(cl)
            return out

        return self._cached("closure_table", build)

    def closure(self, subset: Mask) -> Mask:
        return self.closure_table[subset]

    # -- loops, parallelism ----------------------------------------------

    @property
    def loops(self) -> Mask:
        """Mask of loops.  A non-loop always lies in some basis."""

        def build():
            union = 0
            for b in self.bases:
                union |= b
            return self.ground_mask & ~union

        return self._cached("loops", build)

    @property
    def coloops(self) -> Mask:
        def build():
            inter = self.ground_mask
            for b in self.bases:
                inter &= b
            return inter

        return self._cached("coloops", build)

    @property
    def parallel_decomposition(self) -> ParallelDecomposition:
        def build():
            rank = self.rank_table
            loops = self.loops
            classes = []
            assigned = loops
            for e in range(1, self.n + 1):
                bit = 1 << (e - 1)
                if assigned & bit:
                    continue
                cls = bit
                for f in range(e + 1, self.n + 1):
                    fbit = 1 << (f - 1)
                    if not (assigned & fbit) and rank[bit | fbit] == 1:
                        cls |= fbit
                assigned |= cls
                classes.append(cls)
            return ParallelDecomposition(loops, tuple(classes))

        return self._cached("pardec", build)

    @property
    def is_loopless(self) -> bool:
        return self.loops == 0

    @property
    def is_simple(self) -> bool:
        pd = self.parallel_decomposition
        return pd.loops == 0 and all(popcount(c) == 1 for c in pd.classes)

    @property
    def is_uniform(self) -> bool:
        return len(self.bases) == math.comb(self.n, self.rank)

    # -- flats -------------------------------------------------------------

    @property
    def flats(self) -> tuple[Mask, ...]:
        """All flats, sorted by (size, mask)."""

        def build():
            cl = self.closure_table
            fl = sorted(
                {c for c in cl}, key=lambda m: (popcount(m), m)
            )
            return tuple(fl)

        return self._cached("flats", build)

    def is_flat(self, subset: Mask) -> bool:
        return self.closure(subset) == subset

    def minimal_superflats(self, flat: Mask) -> tuple[Mask, ...]:
        """Minimal flats properly containing `flat`.

        These are exactly the closures of flat+{x} for x outside the flat.
        """
        if not self.is_flat(flat):
            raise NotAFlatError(f"{sorted(elems_of(flat))} is not a flat")
        cl = self.closure_table
        out = {cl[flat | (1 << b)] for b in bits_of(self.ground_mask & ~flat)}
        return tuple(sorted(out, key=lambda m: (popcount(m), m)))

    # -- circuits ----------------------------------------------------------

    @property
    def circuits(self) -> tuple[Mask, ...]:
        """Minimal dependent sets, sorted by (size, mask)."""

        def build():
            indep = self.independent_masks
            out = []
            for s in range(1, 1 << self.n):
                if s in indep:
                    continue
                if all((s ^ (1 << b)) in indep for b in bits_of(s)):
                    out.append(s)
            return tuple(sorted(out, key=lambda m: (popcount(m), m)))

        return self._cached("circuits", build)

    @property
    def girth(self):
        """Size of a smallest circuit; math.inf when every set is independent."""
        circ = self.circuits
        return popcount(circ[0]) if circ else math.inf

    # -- counting ----------------------------------------------------------

    @property
    def indep_profile(self) -> IndepProfile:
        def build():
            counts = [0] * (self.rank + 1)
            for s in self.independent_masks:
                counts[popcount(s)] += 1
            normalized = tuple(
                Fraction(counts[k], math.comb(self.n, k))
                for k in range(self.rank + 1)
            )
            return IndepProfile(tuple(counts), normalized)

        return self._cached("profile", build)

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "bases": sorted(list(elems_of(b)) for b in self.bases),
        }


def check_exchange(n: int, bases: frozenset[Mask]) -> None:
    """Raise unless `bases` is a valid basis family on {1..n}."""
    if n < 0:
        raise MatroidError("ground-set size must be non-negative")
    if not bases:
        raise EmptyBasesError("a matroid needs at least one basis")
    ground = (1 << n) - 1
    for b in bases:
        if b & ~ground:
            raise MatroidError(f"basis {sorted(elems_of(b))} leaves {{1..{n}}}")
    sizes = {popcount(b) for b in bases}
    if len(sizes) > 1:
        raise UnequalCardinalityError(f"basis sizes differ: {sorted(sizes)}")
    for b1 in bases:
        for b2 in bases:
            if b1 == b2:
                continue
            only1 = b1 & ~b2
            only2 = b2 & ~b1
            for xb in bits_of(only1):
                stripped = b1 ^ (1 << xb)
                if not any(stripped | (1 << yb) in bases for yb in bits_of(only2)):
                    raise ExchangeViolationError(b1, b2, xb + 1)


def validate_bases(n: int, candidate: Iterable[Iterable[int]]) -> Matroid:
    """Build a matroid from 1-based element collections, or raise."""
    if n < 1:
        raise MatroidError("ground-set size must be at least 1")
    masks = frozenset(mask_of(b) for b in candidate)
    return Matroid(n, masks)


def from_masks(n: int, masks: Iterable[Mask]) -> Matroid:
    return Matroid(n, frozenset(masks))


def from_json_dict(data: dict) -> Matroid:
    return validate_bases(int(data["n"]), data["bases"])


# -- named constructors ----------------------------------------------------


def uniform(r: int, n: int) -> Matroid:
    """Uniform matroid: bases are all r-subsets of {1..n}."""
    if not 0 <= r <= n:
        raise MatroidError(f"need 0 <= r <= n, got r={r}, n={n}")
    bases = frozenset(mask_of(c) for c in combinations(range(1, n + 1), r))
    return Matroid(n, bases, _trusted=True)


def graphic(vertices: int, edges: Sequence[tuple[int, int]]) -> Matroid:
    """Cycle matroid of a multigraph; bases are maximum spanning forests.

    Edges are numbered 1..len(edges) in input order; loops and multi-edges
    are allowed.
    """
    if vertices < 1:
        raise MatroidError("need at least one vertex")
    for u, v in edges:
        if not (1 <= u <= vertices and 1 <= v <= vertices):
            raise MatroidError(f"vertex out of range in edge ({u},{v})")
    n = len(edges)

    def forest_size(edge_idxs) -> int:
        parent = list(range(vertices + 1))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        size = 0
        for i in edge_idxs:
            u, v = edges[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                size += 1
        return size

    r = forest_size(range(n))
    bases = frozenset(
        mask_of(i + 1 for i in c)
        for c in combinations(range(n), r)
        if forest_size(c) == r
    )
    return Matroid(n, bases, _trusted=True)


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    """Direct sum; the second summand's elements are shifted by m1.n."""
    shift = m1.n
    bases = frozenset(b1 | (b2 << shift) for b1 in m1.bases for b2 in m2.bases)
    return Matroid(m1.n + m2.n, bases, _trusted=True)


# -- minors ------------------------------------------------------------------


def _relabel(n: int, keep: Mask, bases: Iterable[Mask]) -> tuple[Matroid, tuple[int, ...]]:
    """Compress `keep` to a contiguous ground {1..m}; returns (matroid, old_of).

    old_of[k-1] is the original element now labeled k.
    """
    old_of = elems_of(keep)
    pos = {e: i for i, e in enumerate(old_of)}
    relabeled = frozenset(
        mask_of(pos[e] + 1 for e in elems_of(b)) for b in bases
    )
    return Matroid(len(old_of), relabeled, _trusted=True), old_of


def contract(m: Matroid, e: int) -> tuple[Matroid, tuple[int, ...]]:
    """M/e for a non-loop e; ground relabeled to {1..n-1}."""
    bit = 1 << (e - 1)
    if m.loops & bit:
        raise MatroidError(f"cannot contract the loop {e}")
    if not 1 <= e <= m.n:
        raise MatroidError(f"element {e} out of range")
    new_bases = {b ^ bit for b in m.bases if b & bit}
    return _relabel(m.n, m.ground_mask & ~bit, new_bases)


def restrict(m: Matroid, subset: Mask) -> tuple[Matroid, tuple[int, ...]]:
    """M restricted to `subset`: maximal independent subsets, relabeled."""
    subset &= m.ground_mask
    r = m.rank_of(subset)
    new_bases = {
        s for s in m.independent_masks if s & ~subset == 0 and popcount(s) == r
    }
    return _relabel(m.n, subset, new_bases)


def delete(m: Matroid, e: int) -> tuple[Matroid, tuple[int, ...]]:
    if not 1 <= e <= m.n:
        raise MatroidError(f"element {e} out of range")
    if m.n == 1:
        raise MatroidError("cannot delete the last element")
    return restrict(m, m.ground_mask & ~(1 << (e - 1)))


def minor(m: Matroid, kind: str, arg) -> tuple[Matroid, tuple[int, ...]]:
    if kind == "contract":
        return contract(m, arg)
    if kind == "delete":
        return delete(m, arg)
    if kind == "restrict":
        return restrict(m, arg if isinstance(arg, int) else mask_of(arg))
    raise MatroidError(f"unknown minor kind {kind!r}")


def truncate(m: Matroid, steps: int = 1) -> Matroid:
    """T^steps M: bases become the independent sets of size rank-steps."""
    if steps == 0:
        return m
    if not 1 <= steps <= m.rank - 1:
        raise MatroidError(f"truncation steps must lie in 0..rank-1, got {steps}")
    target = m.rank - steps
    bases = frozenset(
        s for s in m.independent_masks if popcount(s) == target
    )
    return Matroid(m.n, bases, _trusted=True)


def simplify(m: Matroid) -> tuple[Matroid, tuple[int, ...]]:
    """Delete loops and all but the least element of each parallel class.

    Returns (matroid on {1..s}, reps) where reps[k-1] is the original
    element representing class k.
    """
    pd = m.parallel_decomposition
    if not pd.classes:
        raise MatroidError("cannot simplify: every element is a loop")
    reps = tuple(elems_of(c)[0] for c in pd.classes)
    keep = mask_of(reps)
    sub, old_of = restrict(m, keep)
    assert old_of == reps
    return sub, reps


# -- public wrappers matching the functional surface -------------------------


def rank_of(m: Matroid, subset) -> int:
    return m.rank_of(subset if isinstance(subset, int) else mask_of(subset))


def closure(m: Matroid, subset) -> Mask:
    return m.closure(subset if isinstance(subset, int) else mask_of(subset))


def flats(m: Matroid) -> tuple[Mask, ...]:
    return m.flats


def minimal_superflats(m: Matroid, flat) -> tuple[Mask, ...]:
    return m.minimal_superflats(flat if isinstance(flat, int) else mask_of(flat))


def circuits_and_girth(m: Matroid):
    return m.circuits, m.girth


def parallel_decomposition(m: Matroid) -> ParallelDecomposition:
    return m.parallel_decomposition


def indep_profile(m: Matroid) -> IndepProfile:
    return m.indep_profile


# -- exhaustive enumeration ---------------------------------------------------


@lru_cache(maxsize=None)
def _exchange_need_table(n: int, r: int):
    """Precomputed exchange constraints for rank-r families on {1..n}.

    subs lists all r-subset masks (ascending).  For ordered pair (i, j),
    need[i][j] holds one bitmask (over subset indices) per x in subs[i]\\subs[j]:
    the candidate replacements (subs[i]-x)+y for y in subs[j]\\subs[i].  A
    family F (bitset over indices) containing i and j satisfies the axiom
    for the pair iff every such mask intersects F.  Masks containing i or j
    are dropped: they are satisfied whenever the pair is present (only the
    t=1 case, where the replacement is subs[j] itself).
    """
    subs = [mask_of(c) for c in combinations(range(1, n + 1), r)]
    subs.sort()
    index = {s: k for k, s in enumerate(subs)}
    k_count = len(subs)
    need = [[() for _ in range(k_count)] for _ in range(k_count)]
    for i, a in enumerate(subs):
        for j, b in enumerate(subs):
            if i == j:
                continue
            only_a = a & ~b
            only_b = b & ~a
            entries = []
            for xb in bits_of(only_a):
                stripped = a ^ (1 << xb)
                cand = 0
                for yb in bits_of(only_b):
                    cand |= 1 << index[stripped | (1 << yb)]
                if not (cand >> i) & 1 and not (cand >> j) & 1:
                    entries.append(cand)
            need[i][j] = tuple(entries)
    return subs, need


@lru_cache(maxsize=None)
def _enumerate_rank(n: int, r: int) -> tuple[Matroid, ...]:
    """All labeled rank-r matroids on {1..n}, lexicographic by basis list."""
    subs, need = _exchange_need_table(n, r)
    k_count = len(subs)
    found = []
    for fam in range(1, 1 << k_count):
        members = []
        rem = fam
        ok = True
        while rem:
            low = rem & -rem
            i = low.bit_length() - 1
            ni = need[i]
            for j in members:
                for msk in ni[j]:
                    if not msk & fam:
                        ok = False
                        break
                if not ok:
                    break
                for msk in need[j][i]:
                    if not msk & fam:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
            members.append(i)
            rem ^= low
        if ok:
            found.append(frozenset(subs[i] for i in members))
    found.sort(key=lambda bs: sorted(bs))
    return tuple(Matroid(n, bs, _trusted=True) for bs in found)


def enumerate_matroids(n: int, rank: Optional[int] = None) -> Iterator[Matroid]:
    """Every labeled matroid on {1..n}, rank ascending then lexicographic.

    Hard-capped at n <= 6: rank r scans all 2^C(n,r) basis families.
    """
    if not 1 <= n <= ENUMERATION_MAX_GROUND:
        raise MatroidError(
            f"enumeration supports 1 <= n <= {ENUMERATION_MAX_GROUND}, got {n}"
        )
    ranks = range(n + 1) if rank is None else [rank]
    for r in ranks:
        if not 0 <= r <= n:
            raise MatroidError(f"rank {r} out of range for n={n}")
        yield from _enumerate_rank(n, r)


@lru_cache(maxsize=None)
def catalog(n: int, rank: Optional[int] = None) -> tuple[Matroid, ...]:
    """Materialized enumerate_matroids stream (shared across the suites)."""
    return tuple(enumerate_matroids(n, rank))
