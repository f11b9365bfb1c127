"""Structural computations on table groups.

Everything here is exhaustive: conjugacy classes come from full orbit
sweeps, normal subgroups from a breadth-first walk over class unions, and
subnormal subgroups from iterating normality to a fixpoint.  Results are
returned in a canonical order (by order, then by element tuple) so every
run of every enumeration is reproducible.

Expensive enumerations are memoized on the group instance; induced
subgroup groups and quotients are memoized on their parent, so repeated
series computations share work.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotAbelian, TrivialGroup
from .groups import (
    FiniteGroup,
    Subgroup,
    _close,
    prime_factors,
    quotient_group,
    subgroup_as_group,
)


def _is_prime(n: int) -> bool:
    return n > 1 and prime_factors(n) == (n,)


def _elements_array(G: FiniteGroup, elements) -> np.ndarray:
    if isinstance(elements, Subgroup):
        if elements.parent is not G:
            raise ValueError("subgroup belongs to a different group")
        return elements.as_array()
    return np.asarray(sorted(set(int(e) for e in elements)), dtype=np.int64)


# -- conjugation ------------------------------------------------------------


def conjugacy_classes(G: FiniteGroup) -> list[tuple[int, ...]]:
    """Conjugacy classes as sorted tuples, ordered by least member (the
    identity class comes first)."""
    cached = G._cache.get("conjugacy_classes")
    if cached is None:
        table, inv = G.table, G.inverses
        seen = np.zeros(G.order, dtype=bool)
        cached = []
        for x in range(G.order):
            if seen[x]:
                continue
            orbit = np.unique(table[table[:, x], inv])
            seen[orbit] = True
            cached.append(tuple(int(v) for v in orbit))
        G._cache["conjugacy_classes"] = cached
    return cached


def class_ids(G: FiniteGroup) -> np.ndarray:
    ids = G._cache.get("class_ids")
    if ids is None:
        ids = np.empty(G.order, dtype=np.int64)
        for i, cls in enumerate(conjugacy_classes(G)):
            ids[list(cls)] = i
        ids.setflags(write=False)
        G._cache["class_ids"] = ids
    return ids


# -- closures, centralizers, commutators ------------------------------------


def closure(G: FiniteGroup, seed) -> Subgroup:
    """Smallest subgroup containing the seed elements."""
    return G.closure_of(_elements_array(G, seed))


def generating_subset(G: FiniteGroup, elements) -> list[int]:
    """A (greedy, usually small) subset generating the same subgroup."""
    gens: list[int] = []
    span = np.asarray([0], dtype=np.int64)
    for e in _elements_array(G, elements):
        e = int(e)
        if not np.isin(e, span):
            gens.append(e)
            span = _close(G.table, span, np.asarray([e], dtype=np.int64))
    return gens


def centralizer(G: FiniteGroup, elements) -> Subgroup:
    """All elements commuting with every member of the given set.

    Commuting with a set is the same as commuting with the subgroup it
    generates, so the sweep only needs a generating subset.
    """
    table = G.table
    ok = np.ones(G.order, dtype=bool)
    for s in generating_subset(G, elements):
        ok &= table[:, s] == table[s, :]
    return Subgroup(G, np.flatnonzero(ok))


def center(G: FiniteGroup) -> Subgroup:
    cached = G._cache.get("center")
    if cached is None:
        mask = (G.table == G.table.T).all(axis=1)
        cached = Subgroup(G, np.flatnonzero(mask))
        G._cache["center"] = cached
    return cached


def commutator_subgroup(G: FiniteGroup, first, second) -> Subgroup:
    """Subgroup generated by all commutators [a, b] with a in first and b in
    second (exhaustive over the two sets, then closed)."""
    a = _elements_array(G, first)
    b = _elements_array(G, second)
    table, inv = G.table, G.inverses
    left = table[np.ix_(inv[a], inv[b])].ravel()
    right = table[np.ix_(a, b)].ravel()
    comms = np.unique(table[left, right])
    return Subgroup(G, _close(table, np.empty(0, dtype=np.int64), comms))


def normal_closure(G: FiniteGroup, seed) -> Subgroup:
    """Smallest normal subgroup containing the seed: close the union of the
    seed's conjugacy classes under multiplication."""
    ids = class_ids(G)
    classes = conjugacy_classes(G)
    wanted = sorted(set(int(ids[int(e)]) for e in _elements_array(G, seed)))
    members = [e for i in wanted for e in classes[i]]
    return Subgroup(
        G, _close(G.table, np.empty(0, dtype=np.int64), np.asarray(members, dtype=np.int64))
    )


def join(first: Subgroup, second: Subgroup) -> Subgroup:
    if first.parent is not second.parent:
        raise ValueError("subgroups of different parents")
    return Subgroup(first.parent, _close(first.parent.table, first.as_array(), second.as_array()))


def intersect(first: Subgroup, second: Subgroup) -> Subgroup:
    if first.parent is not second.parent:
        raise ValueError("subgroups of different parents")
    return Subgroup(first.parent, first.index_set & second.index_set)


# -- normal subgroup enumeration --------------------------------------------


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every normal subgroup, found by breadth-first expansion: keep joining
    known normal subgroups with one extra conjugacy class and closing.  A
    closed union of classes is normal, and every normal subgroup arises this
    way, so the sweep is exhaustive."""
    cached = G._cache.get("normal_subgroups")
    if cached is None:
        table = G.table
        classes = conjugacy_classes(G)
        seen = {(0,)}
        queue = [(0,)]
        while queue:
            base = queue.pop()
            base_arr = np.asarray(base, dtype=np.int64)
            base_set = frozenset(base)
            for cls in classes:
                if cls[0] in base_set:
                    continue  # classes never straddle a normal subgroup
                grown = _close(table, base_arr, np.asarray(cls, dtype=np.int64))
                key = tuple(int(v) for v in grown)
                if key not in seen:
                    seen.add(key)
                    queue.append(key)
        cached = [Subgroup(G, t) for t in sorted(seen, key=lambda t: (len(t), t))]
        G._cache["normal_subgroups"] = cached
    return cached


def minimal_normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    if G.order == 1:
        raise TrivialGroup("the trivial group has no minimal normal subgroups")
    nontrivial = [N for N in normal_subgroups(G) if not N.is_trivial]
    return [N for N in nontrivial if not any(M < N for M in nontrivial)]


def maximal_normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    if G.order == 1:
        raise TrivialGroup("the trivial group has no maximal normal subgroups")
    proper = [N for N in normal_subgroups(G) if not N.is_whole]
    return [N for N in proper if not any(N < M for M in proper)]


def socle(G: FiniteGroup) -> Subgroup:
    """Join of all minimal normal subgroups (trivial for the trivial group)."""
    if G.order == 1:
        return G.trivial()
    result = G.trivial()
    for N in minimal_normal_subgroups(G):
        result = join(result, N)
    return result


def is_simple(G: FiniteGroup) -> bool:
    return G.order > 1 and len(normal_subgroups(G)) == 2


# -- series -----------------------------------------------------------------


@dataclass(frozen=True)
class FactorTag:
    """What is known about one series factor.  ``is_simple``/``abelian`` are
    None when the series kind does not establish them."""

    order: int
    prime_order: bool
    abelian: bool | None = None
    is_simple: bool | None = None


@dataclass(frozen=True)
class SeriesReport:
    """A subgroup chain with its factor data.

    kind: 'derived' | 'lower_central' | 'composition' | 'chief'.
    Chains are strictly monotone; derived/lower_central/composition descend,
    chief ascends.  factor_orders[i] is the index of chain[i+1] in chain[i]
    (or the other way around for ascending chains).
    """

    kind: str
    chain: tuple[Subgroup, ...]
    factor_orders: tuple[int, ...]
    factor_tags: tuple[FactorTag, ...]

    @property
    def last(self) -> Subgroup:
        return self.chain[-1]

    def __len__(self) -> int:
        return len(self.factor_orders)


def _as_subgroup(x) -> Subgroup:
    if isinstance(x, FiniteGroup):
        return x.whole()
    if isinstance(x, Subgroup):
        return x
    raise TypeError(f"expected a group or subgroup, got {type(x).__name__}")


def derived_series(x) -> SeriesReport:
    """Repeated commutator subgroups until stable; ends at the trivial
    subgroup exactly for soluble inputs."""
    start = _as_subgroup(x)
    G = start.parent
    chain = [start]
    while True:
        nxt = commutator_subgroup(G, chain[-1], chain[-1])
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    orders = tuple(chain[i].order // chain[i + 1].order for i in range(len(chain) - 1))
    tags = tuple(FactorTag(o, _is_prime(o), abelian=True) for o in orders)
    return SeriesReport("derived", tuple(chain), orders, tags)


def lower_central_series(x) -> SeriesReport:
    """Iterated commutators with the whole input subgroup; reaches the
    trivial subgroup exactly for nilpotent inputs."""
    start = _as_subgroup(x)
    G = start.parent
    chain = [start]
    while True:
        nxt = commutator_subgroup(G, start, chain[-1])
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    orders = tuple(chain[i].order // chain[i + 1].order for i in range(len(chain) - 1))
    tags = tuple(FactorTag(o, _is_prime(o), abelian=True) for o in orders)
    return SeriesReport("lower_central", tuple(chain), orders, tags)


def maximal_normals_within(G: FiniteGroup, S: Subgroup) -> list[Subgroup]:
    """Maximal normal subgroups of the group carried by S, as subgroups of
    the ambient parent."""
    H, back = subgroup_as_group(G, S)
    out = []
    for M in maximal_normal_subgroups(H):
        out.append(Subgroup(G, tuple(back[i] for i in M.elements)))
    return sorted(out, key=lambda N: (-N.order, N.elements))


def composition_series(G: FiniteGroup, *, rng=None) -> SeriesReport:
    """A maximal-normal chain from G down to the trivial subgroup.

    Deterministic tie-break: at each step take the maximal normal subgroup
    of largest order, least element tuple.  Passing an rng instead picks one
    of the candidates at random (useful for invariance testing).
    """
    chain = [G.whole()]
    while chain[-1].order > 1:
        cands = maximal_normals_within(G, chain[-1])
        if rng is None:
            chain.append(cands[0])
        else:
            chain.append(cands[rng.randrange(len(cands))])
    orders = tuple(chain[i].order // chain[i + 1].order for i in range(len(chain) - 1))
    tags = tuple(
        FactorTag(o, _is_prime(o), abelian=_is_prime(o), is_simple=True) for o in orders
    )
    return SeriesReport("composition", tuple(chain), orders, tags)


def composition_factors(G: FiniteGroup) -> list[FiniteGroup]:
    """The simple factor groups of the deterministic composition series,
    top factor first."""
    cached = G._cache.get("composition_factors")
    if cached is None:
        series = composition_series(G)
        cached = []
        for i in range(len(series.chain) - 1):
            H, back = subgroup_as_group(G, series.chain[i])
            pos = {e: j for j, e in enumerate(back)}
            inner = Subgroup(H, tuple(pos[e] for e in series.chain[i + 1].elements))
            cached.append(quotient_group(H, inner)[0])
        G._cache["composition_factors"] = cached
    return cached


def chief_series(G: FiniteGroup) -> SeriesReport:
    """Ascending chain of normal subgroups of G whose factors are minimal
    normal subgroups of the successive quotients.  Deterministic tie-break:
    smallest pulled-back order, then least element tuple."""
    cached = G._cache.get("chief_series")
    if cached is not None:
        return cached
    chain = [G.trivial()]
    while chain[-1].order < G.order:
        Q, proj = quotient_group(G, chain[-1])
        proj_arr = np.asarray(proj)
        pulls = []
        for M in minimal_normal_subgroups(Q):
            members = np.flatnonzero(np.isin(proj_arr, M.as_array()))
            pulls.append(Subgroup(G, members))
        chain.append(min(pulls, key=lambda S: (S.order, S.elements)))
    orders = tuple(chain[i + 1].order // chain[i].order for i in range(len(chain) - 1))
    tags = tuple(
        FactorTag(o, _is_prime(o), abelian=len(prime_factors(o)) <= 1) for o in orders
    )
    report = SeriesReport("chief", tuple(chain), orders, tags)
    G._cache["chief_series"] = report
    return report


# -- subnormality ------------------------------------------------------------


def subnormal_subgroups(G: FiniteGroup, *, max_depth: int | None = None) -> list[Subgroup]:
    """Fixpoint of "normal subgroup of something already collected",
    starting from G itself; every member therefore carries a normal chain
    witnessing subnormality.  max_depth bounds the chain length."""
    cache_key = ("subnormal", max_depth)
    cached = G._cache.get(cache_key)
    if cached is None:
        seen = {G.whole().elements}
        queue = [(G.whole().elements, 0)]
        while queue:
            elems, depth = queue.pop()
            if max_depth is not None and depth >= max_depth:
                continue
            H, back = subgroup_as_group(G, Subgroup(G, elems))
            for N in normal_subgroups(H):
                mapped = tuple(back[i] for i in N.elements)
                if mapped not in seen:
                    seen.add(mapped)
                    queue.append((mapped, depth + 1))
        cached = [Subgroup(G, t) for t in sorted(seen, key=lambda t: (len(t), t))]
        G._cache[cache_key] = cached
    return cached


# -- abelian frattini --------------------------------------------------------


def frattini_of_abelian(A: FiniteGroup) -> Subgroup:
    """Frattini subgroup of an abelian group: the intersection of the p-th
    power subgroups over the primes dividing the order."""
    if not np.array_equal(A.table, A.table.T):
        raise NotAbelian(f"{A.display_name} is not abelian")
    members = frozenset(range(A.order))
    idx = np.arange(A.order)
    for p in prime_factors(A.order):
        acc = np.zeros(A.order, dtype=np.int64)
        for _ in range(p):
            acc = A.table[acc, idx]
        members &= frozenset(int(v) for v in np.unique(acc))
    return Subgroup(A, members)
