"""Group classes as first-class predicates with declared closure behavior.

A ClassPredicate bundles a membership test with the closure properties the
caller vouches for (closed under normal subgroups, quotients, direct
products, central extensions; behaves as a Fitting class; is a solubly
saturated formation).  Radical/residual constructions and the largeness
checks consult these flags instead of guessing, and property tests probe
them empirically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ClosureNotDeclared, NotSoluble, UnknownClass
from .groups import FiniteGroup, pi_part, prime_factors
from .structure import (
    center,
    chief_series,
    commutator_subgroup,
    composition_factors,
    derived_series,
    is_simple,
    lower_central_series,
    minimal_normal_subgroups,
    quotient_group,
)


@dataclass(frozen=True)
class ClosureFlags:
    normal_subgroups: bool = False
    quotients: bool = False
    direct_products: bool = False
    central_extensions: bool = False
    solubly_saturated_formation: bool = False
    fitting_class: bool = False


@dataclass(frozen=True)
class ClassPredicate:
    name: str
    member: Callable[[FiniteGroup], bool]
    closed_under: ClosureFlags


# -- membership tests --------------------------------------------------------


def is_abelian(G: FiniteGroup) -> bool:
    return bool(np.array_equal(G.table, G.table.T))


def nilpotency_class(G: FiniteGroup) -> int | None:
    """Length of the lower central series, or None when it never reaches the
    trivial subgroup.  The trivial group has class 0, a nontrivial abelian
    group class 1.  Compare against None, not truthiness."""
    series = lower_central_series(G)
    if not series.last.is_trivial:
        return None
    return len(series.chain) - 1


def derived_length(G: FiniteGroup) -> int | None:
    """Number of derived steps down to the trivial subgroup, or None for an
    insoluble group.  Trivial group: 0, nontrivial abelian: 1."""
    series = derived_series(G)
    if not series.last.is_trivial:
        return None
    return len(series.chain) - 1


def is_nilpotent(G: FiniteGroup) -> bool:
    return nilpotency_class(G) is not None


def is_soluble(G: FiniteGroup) -> bool:
    return derived_length(G) is not None


def is_supersoluble(G: FiniteGroup) -> bool:
    """All chief factors of prime order."""
    return all(tag.prime_order for tag in chief_series(G).factor_tags)


def _validate_pi(pi) -> tuple[int, ...]:
    primes = tuple(sorted(set(int(p) for p in pi)))
    if not primes:
        raise ValueError("the prime set must be nonempty")
    for p in primes:
        if prime_factors(p) != (p,):
            raise ValueError(f"{p} is not prime")
    return primes


def is_pi_group(G: FiniteGroup, pi) -> bool:
    primes = _validate_pi(pi)
    return pi_part(G.order, primes) == G.order


def is_pi_separable(G: FiniteGroup, pi) -> bool:
    """Every composition factor is a pi-group or a pi'-group."""
    primes = _validate_pi(pi)
    for F in composition_factors(G):
        ps = set(prime_factors(F.order))
        if not (ps <= set(primes) or not (ps & set(primes))):
            return False
    return True


def has_normal_hall_pi_prime(G: FiniteGroup, pi) -> bool:
    """The pi'-core has full pi'-order, i.e. a normal Hall pi'-subgroup
    exists."""
    primes = _validate_pi(pi)
    from .radicals import pi_core

    complement = tuple(p for p in prime_factors(G.order) if p not in primes)
    if not complement:
        return True
    core = pi_core(G, complement, _validated=True)
    target = pi_part(G.order, complement)
    return core.subgroup.order == target


def is_quasisimple(G: FiniteGroup) -> bool:
    """Perfect and simple modulo the center (and nontrivial)."""
    if G.order == 1:
        return False
    if not commutator_subgroup(G, G.whole(), G.whole()).is_whole:
        return False
    Q, _ = quotient_group(G, center(G))
    return is_simple(Q)


def is_quasinilpotent(G: FiniteGroup) -> bool:
    """Coincides with its own generalized fitting subgroup."""
    from .radicals import generalized_fitting_subgroup

    return generalized_fitting_subgroup(G).subgroup.is_whole


def in_extension_closure(X: ClassPredicate, G: FiniteGroup) -> bool:
    """Whether every composition factor of G lies in X.

    For classes closed under normal subgroups this is exactly membership in
    the extension closure of X; the flag is required so the criterion is
    known to be sound."""
    if not X.closed_under.normal_subgroups:
        raise ClosureNotDeclared(
            f"class {X.name!r} does not declare closure under normal subgroups"
        )
    return all(X.member(F) for F in composition_factors(G))


def has_minimal_supersoluble_residual(G: FiniteGroup) -> bool:
    """Soluble groups whose supersoluble residual is trivial or a minimal
    normal subgroup.  Raises NotSoluble otherwise."""
    if not is_soluble(G):
        raise NotSoluble(f"{G.display_name} is not soluble")
    from .radicals import supersoluble_residual

    residual = supersoluble_residual(G)
    if residual.is_trivial:
        return True
    return any(residual == M for M in minimal_normal_subgroups(G))


# -- the built-in catalog ----------------------------------------------------


def _flags(**kwargs) -> ClosureFlags:
    return ClosureFlags(**kwargs)


_ALL_CLOSED = _flags(
    normal_subgroups=True,
    quotients=True,
    direct_products=True,
    central_extensions=True,
    solubly_saturated_formation=True,
    fitting_class=True,
)

# not central-extension closed, not saturated, not a Fitting class
_BOUNDED_FLAGS = _flags(normal_subgroups=True, quotients=True, direct_products=True)


def builtin_class(key: str) -> ClassPredicate:
    """Resolve a stable class key: abelian, nilpotent, nilpotent_class:c,
    soluble, soluble_derived:d, supersoluble, quasinilpotent,
    pi_separable:p1,p2,..., normal_hall_pi_prime:p1,p2,...
    """
    name, _, param = key.partition(":")
    name = name.strip()
    param = param.strip()

    def want_int() -> int:
        if not param:
            raise UnknownClass(f"class {name!r} needs an integer parameter")
        try:
            return int(param)
        except ValueError:
            raise UnknownClass(f"bad parameter {param!r} for class {name!r}")

    def want_pi() -> tuple[int, ...]:
        if not param:
            raise UnknownClass(f"class {name!r} needs a prime list parameter")
        try:
            return _validate_pi(int(p) for p in param.split(","))
        except ValueError as exc:
            raise UnknownClass(f"bad prime set {param!r} for class {name!r}: {exc}")

    if name == "abelian":
        return ClassPredicate("abelian", is_abelian, _BOUNDED_FLAGS)
    if name == "nilpotent":
        return ClassPredicate("nilpotent", is_nilpotent, _ALL_CLOSED)
    if name == "nilpotent_class":
        c = want_int()
        if c < 1:
            raise UnknownClass("nilpotency class bound must be >= 1")
        return ClassPredicate(
            f"nilpotent_class:{c}",
            lambda G, c=c: (lambda k: k is not None and k <= c)(nilpotency_class(G)),
            _BOUNDED_FLAGS,
        )
    if name == "soluble":
        return ClassPredicate("soluble", is_soluble, _ALL_CLOSED)
    if name == "soluble_derived":
        d = want_int()
        if d < 1:
            raise UnknownClass("derived length bound must be >= 1")
        return ClassPredicate(
            f"soluble_derived:{d}",
            lambda G, d=d: (lambda k: k is not None and k <= d)(derived_length(G)),
            _BOUNDED_FLAGS,
        )
    if name == "supersoluble":
        return ClassPredicate(
            "supersoluble",
            is_supersoluble,
            _flags(
                normal_subgroups=True,
                quotients=True,
                direct_products=True,
                central_extensions=True,
                solubly_saturated_formation=True,
            ),
        )
    if name == "quasinilpotent":
        return ClassPredicate("quasinilpotent", is_quasinilpotent, _ALL_CLOSED)
    if name == "pi_separable":
        primes = want_pi()
        return ClassPredicate(
            f"pi_separable:{','.join(map(str, primes))}",
            lambda G, primes=primes: is_pi_separable(G, primes),
            _ALL_CLOSED,
        )
    if name == "normal_hall_pi_prime":
        primes = want_pi()
        return ClassPredicate(
            f"normal_hall_pi_prime:{','.join(map(str, primes))}",
            lambda G, primes=primes: has_normal_hall_pi_prime(G, primes),
            _ALL_CLOSED,
        )
    raise UnknownClass(f"unknown class key {key!r}")


BUILTIN_CLASS_KEYS = (
    "abelian",
    "nilpotent",
    "nilpotent_class:c",
    "soluble",
    "soluble_derived:d",
    "supersoluble",
    "quasinilpotent",
    "pi_separable:p1,p2,...",
    "normal_hall_pi_prime:p1,p2,...",
)
