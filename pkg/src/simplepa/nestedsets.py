"""Chains of label sets and the nested-set complex of the simple permutoassociahedron.

Everything is built over the label set X = {0, ..., n}.  A *chain* is a
strictly descending sequence of non-empty proper subsets of X in which every
step removes exactly one label; chains index the facets of the n-dimensional
polytope.  A family of chains is *nested* when every two incomparable members
merge into a single descending family of sets that is not itself a chain in
the above sense, i.e. some step of the merged family drops two or more labels
at once.  Nested families form a flag simplicial complex; its members of
cardinality n - d are the d-dimensional faces of the polytope, and the
maximal ones (cardinality n) are the vertices.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

from .limits import check_cap


@dataclass(frozen=True)
class Chain:
    """A descending chain of label sets with singleton steps.

    Encoded as the smallest set (``core``) together with the labels that the
    larger sets add, listed outermost first (``ext``).  The j-th set of the
    chain, counted from the largest, is ``core | set(ext[j:])``; the chain
    has ``len(ext) + 1`` sets in total.
    """

    core: frozenset[int]
    ext: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "core", frozenset(self.core))
        object.__setattr__(self, "ext", tuple(self.ext))

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]]) -> "Chain":
        """Build a chain from its family of sets (any order)."""
        family = sorted({frozenset(s) for s in sets}, key=len, reverse=True)
        if not family:
            raise ValueError("a chain needs at least one set")
        ext = []
        for big, small in zip(family, family[1:]):
            step = big - small
            if not small < big or len(step) != 1:
                raise ValueError(f"sets {set(big)} and {set(small)} do not differ by one label")
            ext.extend(step)
        return cls(family[-1], tuple(ext))

    def sets(self) -> tuple[frozenset[int], ...]:
        """The sets of the chain, largest first."""
        return tuple(self.core | frozenset(self.ext[j:]) for j in range(len(self.ext) + 1))

    @property
    def top(self) -> frozenset[int]:
        """The largest set of the chain."""
        return self.core | frozenset(self.ext)

    @property
    def num_sets(self) -> int:
        return len(self.ext) + 1

    def sort_key(self):
        """Canonical total order: by size of the top set, then core, then ext."""
        return (len(self.core) + len(self.ext), tuple(sorted(self.core)), self.ext)

    def check(self, n: int) -> None:
        """Validate the chain over labels 0..n; raises ValueError if invalid."""
        _check_chain(self, n)

    def __repr__(self):
        core = "{" + ",".join(map(str, sorted(self.core))) + "}"
        return f"Chain({core}, {list(self.ext)})"


# A nested set is just a frozenset of pairwise compatible chains.
NestedSet = frozenset[Chain]


@lru_cache(maxsize=None)
def _check_chain(chain: Chain, n: int) -> bool:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    labels = chain.core | set(chain.ext)
    if not chain.core:
        raise ValueError("chain core must be non-empty")
    if len(chain.ext) != len(set(chain.ext)) or len(labels) != len(chain.core) + len(chain.ext):
        raise ValueError(f"labels of {chain} are not distinct")
    if not all(0 <= v <= n for v in labels):
        raise ValueError(f"labels of {chain} fall outside 0..{n}")
    if len(labels) > n:
        raise ValueError(f"top set of {chain} must be a proper subset of 0..{n}")
    return True


@lru_cache(maxsize=None)
def _family(chain: Chain) -> frozenset[int]:
    """The chain's sets as label bitmasks."""
    cur = 0
    for lab in chain.core:
        cur |= 1 << lab
    masks = [cur]
    for lab in reversed(chain.ext):
        cur |= 1 << lab
        masks.append(cur)
    return frozenset(masks)


def comparable(a: Chain, b: Chain) -> bool:
    """Whether one chain's family of sets contains the other's."""
    fa, fb = _family(a), _family(b)
    return fa <= fb or fb <= fa


def _union_admissible(masks: Iterable[int]) -> bool:
    """Whether a family of set-masks is a descending chain of sets with some
    step dropping at least two labels (so it is not itself a facet chain)."""
    seq = sorted(masks, key=int.bit_count, reverse=True)
    gapped = False
    for big, small in zip(seq, seq[1:]):
        if small | big != big:
            return False
        if big.bit_count() - small.bit_count() >= 2:
            gapped = True
    return gapped


@lru_cache(maxsize=None)
def _pair_compatible(a: Chain, b: Chain) -> bool:
    fa, fb = _family(a), _family(b)
    if fa <= fb or fb <= fa:
        return True
    return _union_admissible(fa | fb)


def is_nested(chains: Iterable[Chain], n: int) -> bool:
    """Pairwise nestedness test: every two incomparable chains must merge
    into a descending family with a step of size at least two."""
    members = list(chains)
    for c in members:
        _check_chain(c, n)
    return all(_pair_compatible(a, b) for a, b in itertools.combinations(members, 2))


def is_nested_oracle(chains: Iterable[Chain], n: int) -> bool:
    """Brute-force nestedness test straight from the definition: the union of
    every antichain (of any size, not just pairs) must be a descending family
    with a gap.  Agrees with :func:`is_nested` on all inputs."""
    members = list(dict.fromkeys(chains))
    for c in members:
        _check_chain(c, n)
    fams = [_family(c) for c in members]
    for size in range(2, len(members) + 1):
        for combo in itertools.combinations(range(len(members)), size):
            if any(
                fams[i] <= fams[j] or fams[j] <= fams[i]
                for i, j in itertools.combinations(combo, 2)
            ):
                continue
            merged = frozenset().union(*(fams[i] for i in combo))
            if not _union_admissible(merged):
                return False
    return True


@lru_cache(maxsize=None)
def _enumerate_chains(n: int) -> tuple[Chain, ...]:
    chains = []
    for size in range(1, n + 1):
        for top in itertools.combinations(range(n + 1), size):
            for depth in range(size):
                for ext in itertools.permutations(top, depth):
                    chains.append(Chain(frozenset(top) - set(ext), ext))
    chains.sort(key=Chain.sort_key)
    return tuple(chains)


def enumerate_chains(n: int) -> list[Chain]:
    """All chains over 0..n in canonical order (one per facet of the polytope)."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return list(_enumerate_chains(n))


def is_full_chain(chain: Chain, n: int) -> bool:
    """Whether the chain runs through all of n sets (a complete descending
    chain, i.e. the combinatorial shadow of a permutation of 0..n)."""
    return chain.num_sets == n


def nested_key(chains: Iterable[Chain]):
    """Canonical sort key for a set of chains."""
    return tuple(sorted(c.sort_key() for c in chains))


@lru_cache(maxsize=None)
def _vertices(n: int) -> tuple[NestedSet, ...]:
    from .brackets import all_bracketings, to_nested

    verts = [to_nested(b) for b in all_bracketings(n, max_n=n)]
    verts.sort(key=nested_key)
    return tuple(verts)


def enumerate_vertices(n: int, max_n: int | None = None) -> list[NestedSet]:
    """All maximal nested sets (the polytope's vertices), canonical order.

    There are (2n)!/n! of them: one per pair of a permutation of 0..n and a
    complete binary bracketing shape.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    check_cap(n, max_n)
    return list(_vertices(n))


def faces(n: int, dim: int, max_n: int | None = None) -> list[NestedSet]:
    """All faces of the given dimension, as nested sets of cardinality n - dim.

    Computed by taking subsets of the maximal nested sets; ``dim == n`` gives
    the empty nested set, the polytope body itself.
    """
    if not 0 <= dim <= n:
        raise ValueError(f"dim must lie in 0..{n}, got {dim}")
    if dim == n:
        return [frozenset()]
    size = n - dim
    seen = {
        frozenset(sub)
        for v in enumerate_vertices(n, max_n=max_n)
        for sub in itertools.combinations(sorted(v, key=Chain.sort_key), size)
    }
    return sorted(seen, key=nested_key)


def faces_via_cliques(n: int, dim: int, max_n: int | None = None) -> list[NestedSet]:
    """Independent route to :func:`faces`: nested sets are exactly the cliques
    of the pairwise-compatibility graph on chains (the complex is flag), so
    faces of dimension d are the cliques of size n - d."""
    if not 0 <= dim <= n:
        raise ValueError(f"dim must lie in 0..{n}, got {dim}")
    if dim == n:
        return [frozenset()]
    check_cap(n, max_n)
    chains = _enumerate_chains(n)
    size = n - dim
    out: list[NestedSet] = []
    members: list[Chain] = []

    def extend(start: int) -> None:
        if len(members) == size:
            out.append(frozenset(members))
            return
        for i in range(start, len(chains)):
            c = chains[i]
            if all(_pair_compatible(c, m) for m in members):
                members.append(c)
                extend(i + 1)
                members.pop()

    extend(0)
    return sorted(out, key=nested_key)


def superficial_count(face: Iterable[Chain], chain: Chain) -> int:
    """The number of sets of ``chain`` contained in no proper sub-chain of it
    inside ``face``.  Every chain of a vertex scores exactly 1."""
    members = frozenset(face)
    if chain not in members:
        raise ValueError(f"{chain} is not a member of the face")
    fam = _family(chain)
    covered: set[int] = set()
    for other in members:
        other_fam = _family(other)
        if other_fam < fam:
            covered |= other_fam
    return sum(1 for mask in fam if mask not in covered)
