"""Self-centralizing ("large") normal subgroups and the claim catalog.

A normal subgroup N of G is large when its centralizer lies inside it.
This module checks that property for the subgroups various structural
claims say must have it, over single groups or whole corpora, and reports
results in a uniform structured form.

Claim selectors (used by the CLI and verify_selector):

  A:classkey  in a group assembled from class X (all composition factors in
              X, with X closed under normal subgroups, quotients, direct
              products and central extensions), every maximal normal
              X-subgroup is large
  C:classkey  same conclusion, with X a solubly saturated formation closed
              under normal subgroups and containing the abelian groups
  D           the fitting subgroup of a soluble group is large
  E           the generalized fitting subgroup of any group is large
  F:p1,p2     the two-step core (pi' then pi) of a pi-separable group is large
  G:c         in a soluble group, every maximal normal subgroup of
              nilpotency class <= c is large (c >= 2)
  GD:d        in a soluble group, every maximal normal subgroup of derived
              length <= d is large (d >= 2)
  H           in a soluble group whose supersoluble residual is trivial or
              minimal normal, every maximal abelian normal subgroup is large
  B           constructive central-extension witness: a chosen central
              subgroup is identified with the frattini subgroup of an
              abelian cover inside a central product

Hypothesis handling: membership-style hypotheses (A/C's assembly condition,
H's residual condition) are *reported* so corpus scans can aggregate them;
hard preconditions (solubility for D/G/GD/H, separability for F, bad
bounds) raise typed errors which the CLI converts into skips.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classes import (
    ClassPredicate,
    builtin_class,
    has_minimal_supersoluble_residual,
    in_extension_closure,
    is_pi_separable,
    is_soluble,
)
from .errors import (
    BadBound,
    BadClassBound,
    ClosureFlagsMissing,
    HypothesisFailed,
    NotCentral,
    NotNormal,
    NotSoluble,
    TrivialGroup,
    UnknownClass,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    abelian_basis,
    abelian_invariants,
    central_product_with_embeddings,
    frattini_cover_abelian,
    subgroup_as_group,
)
from .radicals import (
    fitting_subgroup,
    generalized_fitting_subgroup,
    maximal_normal_members,
    pi_prime_pi_core,
    supersoluble_residual,
)
from .structure import center, centralizer, frattini_of_abelian


def is_large(G: FiniteGroup, N: Subgroup) -> bool:
    """Whether the centralizer of the normal subgroup N lies inside N."""
    if N.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    if not N.is_normal():
        raise NotNormal(f"subgroup of order {N.order} is not normal in {G.display_name}")
    return centralizer(G, N) <= N


@dataclass(frozen=True)
class WitnessRecord:
    """One subgroup whose largeness a claim predicts."""

    descriptor: str
    order: int
    elements: tuple[int, ...]
    is_large: bool
    centralizer_order: int

    def to_dict(self) -> dict:
        return {
            "descriptor": self.descriptor,
            "order": self.order,
            "is_large": self.is_large,
            "centralizer_order": self.centralizer_order,
        }


@dataclass
class VerificationReport:
    """Outcome of one claim on one group.

    passed means: every hypothesis held and every witness was large.
    counterexample is set exactly when the hypotheses held but a witness
    failed; hypothesis failures alone read as a skip (see outcome).
    """

    theorem: str
    group: str
    group_order: int
    hypotheses: list[tuple[str, bool]] = field(default_factory=list)
    witnesses: list[WitnessRecord] = field(default_factory=list)
    checks: list[tuple[str, bool]] = field(default_factory=list)
    passed: bool = False
    counterexample: WitnessRecord | None = None

    @property
    def hypotheses_ok(self) -> bool:
        return all(ok for _, ok in self.hypotheses)

    @property
    def outcome(self) -> str:
        if self.passed:
            return "pass"
        if not self.hypotheses_ok:
            return "skip"
        return "fail"

    def to_dict(self) -> dict:
        out = {
            "theorem": self.theorem,
            "group": self.group,
            "order": self.group_order,
            "hypotheses": [[name, ok] for name, ok in self.hypotheses],
            "witnesses": [w.to_dict() for w in self.witnesses],
            "passed": self.passed,
            "outcome": self.outcome,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
        }
        if self.checks:
            out["checks"] = [[name, ok] for name, ok in self.checks]
        return out


def _witness(G: FiniteGroup, S: Subgroup, descriptor: str) -> WitnessRecord:
    cent = centralizer(G, S)
    return WitnessRecord(
        descriptor=descriptor,
        order=S.order,
        elements=S.elements,
        is_large=cent <= S,
        centralizer_order=cent.order,
    )


def _finish(report: VerificationReport) -> VerificationReport:
    if report.hypotheses_ok:
        bad = next((w for w in report.witnesses if not w.is_large), None)
        report.counterexample = bad
        report.passed = bad is None and all(ok for _, ok in report.checks)
    else:
        report.passed = False
        report.counterexample = None
    return report


# -- claims about maximal normal class members (A, C) -------------------------


def verify_maximal_member_large(G: FiniteGroup, X: ClassPredicate) -> VerificationReport:
    """Claim A: in a group assembled from X, every maximal normal X-subgroup
    is large.  X must declare all four assembly closure flags."""
    flags = X.closed_under
    missing = [
        name
        for name, ok in (
            ("normal_subgroups", flags.normal_subgroups),
            ("quotients", flags.quotients),
            ("direct_products", flags.direct_products),
            ("central_extensions", flags.central_extensions),
        )
        if not ok
    ]
    if missing:
        raise ClosureFlagsMissing(
            f"class {X.name!r} lacks declared closure under: {', '.join(missing)}"
        )
    report = VerificationReport("A", G.display_name, G.order)
    assembled = in_extension_closure(X, G)
    report.hypotheses.append((f"assembled_from_{X.name}", assembled))
    if assembled:
        for S in maximal_normal_members(G, X):
            report.witnesses.append(
                _witness(G, S, f"maximal normal {X.name}-subgroup of order {S.order}")
            )
    return _finish(report)


def verify_formation_member_large(G: FiniteGroup, X: ClassPredicate) -> VerificationReport:
    """Claim C: like A, but X only needs to be a solubly saturated formation
    closed under normal subgroups and containing the abelian groups."""
    flags = X.closed_under
    missing = [
        name
        for name, ok in (
            ("normal_subgroups", flags.normal_subgroups),
            ("solubly_saturated_formation", flags.solubly_saturated_formation),
        )
        if not ok
    ]
    if missing:
        raise ClosureFlagsMissing(
            f"class {X.name!r} lacks declared flags: {', '.join(missing)}"
        )
    report = VerificationReport("C", G.display_name, G.order)
    from .catalog import klein_four_group
    from .groups import cyclic_group

    samples = (cyclic_group(2), cyclic_group(6), klein_four_group())
    report.hypotheses.append(
        ("contains_abelian_samples", all(X.member(A) for A in samples))
    )
    report.hypotheses.append((f"assembled_from_{X.name}", in_extension_closure(X, G)))
    if report.hypotheses_ok:
        for S in maximal_normal_members(G, X):
            report.witnesses.append(
                _witness(G, S, f"maximal normal {X.name}-subgroup of order {S.order}")
            )
    return _finish(report)


# -- radical claims (D, E, F) --------------------------------------------------


def verify_fitting_large(G: FiniteGroup) -> VerificationReport:
    """Claim D: the fitting subgroup of a soluble group is large."""
    if not is_soluble(G):
        raise HypothesisFailed("soluble", f"{G.display_name} is not soluble")
    report = VerificationReport("D", G.display_name, G.order)
    report.hypotheses.append(("soluble", True))
    fit = fitting_subgroup(G)
    report.witnesses.append(_witness(G, fit.subgroup, f"fitting subgroup ({fit.witness})"))
    return _finish(report)


def verify_generalized_fitting_large(G: FiniteGroup) -> VerificationReport:
    """Claim E: the generalized fitting subgroup is large, no hypotheses."""
    report = VerificationReport("E", G.display_name, G.order)
    gen = generalized_fitting_subgroup(G)
    report.witnesses.append(
        _witness(G, gen.subgroup, f"generalized fitting subgroup ({gen.witness})")
    )
    return _finish(report)


def verify_two_step_core_large(G: FiniteGroup, pi) -> VerificationReport:
    """Claim F: the two-step core of a pi-separable group is large."""
    if not is_pi_separable(G, pi):
        raise HypothesisFailed("pi_separable", f"{G.display_name} is not separable for {set(pi)}")
    primes = tuple(sorted(set(int(p) for p in pi)))
    report = VerificationReport("F", G.display_name, G.order)
    report.hypotheses.append((f"separable_for_{','.join(map(str, primes))}", True))
    core = pi_prime_pi_core(G, primes)
    report.witnesses.append(_witness(G, core.subgroup, f"two-step core ({core.witness})"))
    return _finish(report)


# -- bounded-complexity claims (G, GD) ----------------------------------------


def verify_nilpotent_class_bound_large(G: FiniteGroup, c: int) -> VerificationReport:
    """Claim G: in a soluble group, maximal normal subgroups of nilpotency
    class <= c are large (needs c >= 2)."""
    if c < 2:
        raise BadClassBound(f"the class bound must be at least 2, got {c}")
    if not is_soluble(G):
        raise NotSoluble(f"{G.display_name} is not soluble")
    report = VerificationReport("G", G.display_name, G.order)
    report.hypotheses.append(("soluble", True))
    X = builtin_class(f"nilpotent_class:{c}")
    for S in maximal_normal_members(G, X):
        report.witnesses.append(
            _witness(G, S, f"maximal normal subgroup of nilpotency class <= {c}, order {S.order}")
        )
    return _finish(report)


def verify_derived_length_bound_large(G: FiniteGroup, d: int) -> VerificationReport:
    """Claim GD: in a soluble group, maximal normal subgroups of derived
    length <= d are large (needs d >= 2)."""
    if d < 2:
        raise BadBound(f"the derived length bound must be at least 2, got {d}")
    if not is_soluble(G):
        raise NotSoluble(f"{G.display_name} is not soluble")
    report = VerificationReport("GD", G.display_name, G.order)
    report.hypotheses.append(("soluble", True))
    X = builtin_class(f"soluble_derived:{d}")
    for S in maximal_normal_members(G, X):
        report.witnesses.append(
            _witness(G, S, f"maximal normal subgroup of derived length <= {d}, order {S.order}")
        )
    return _finish(report)


# -- maximal abelian claim (H) -------------------------------------------------


def verify_maximal_abelian_large(G: FiniteGroup) -> VerificationReport:
    """Claim H: if the supersoluble residual of a soluble group is trivial
    or minimal normal, every maximal abelian normal subgroup is large.

    The witnesses are recorded even when the residual hypothesis fails, so
    scans can look for groups where the conclusion holds anyway."""
    if not is_soluble(G):
        raise NotSoluble(f"{G.display_name} is not soluble")
    report = VerificationReport("H", G.display_name, G.order)
    report.hypotheses.append(("soluble", True))
    report.hypotheses.append(
        ("supersoluble_residual_minimal_or_trivial", has_minimal_supersoluble_residual(G))
    )
    for S in maximal_normal_members(G, builtin_class("abelian")):
        report.witnesses.append(
            _witness(G, S, f"maximal abelian normal subgroup of order {S.order}")
        )
    return _finish(report)


# -- constructive central-extension witness (B) --------------------------------


@dataclass
class CentralCoverWitness:
    """The object built to certify central-extension closure: the ambient
    central product of the group with an abelian cover of its chosen
    central subgroup, plus the checks that make it a certificate."""

    group: FiniteGroup
    central_subgroup: Subgroup
    cover: FiniteGroup
    product: FiniteGroup
    embed_group: tuple[int, ...]
    embed_cover: tuple[int, ...]
    checks: list[tuple[str, bool]]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)


def central_cover_witness(G: FiniteGroup, Z: Subgroup) -> CentralCoverWitness:
    """Identify a nontrivial central subgroup Z of G with the frattini
    subgroup of its stretched abelian cover Y, inside the central product
    of G and Y.  Returns the product plus the recorded checks."""
    if Z.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    if Z.is_trivial:
        raise TrivialGroup("the chosen central subgroup is trivial")
    if not Z <= center(G):
        raise NotCentral(f"subgroup of order {Z.order} is not central in {G.display_name}")
    Zg, back = subgroup_as_group(G, Z)
    # ascending by order to line up with the cover's primary factors
    basis = sorted(abelian_basis(Zg), key=lambda bq: bq[1])
    cover = frattini_cover_abelian(Zg)
    pairing = _frattini_pairing(Zg, back, basis)
    product, embed_g, embed_y = central_product_with_embeddings(
        G, cover, pairing, name=f"central({G.display_name},{cover.display_name})"
    )

    checks: list[tuple[str, bool]] = []
    frat = frattini_of_abelian(cover)
    frat_group, _ = subgroup_as_group(cover, frat)
    checks.append(
        (
            "cover_frattini_matches_invariants",
            abelian_invariants(frat_group) == abelian_invariants(Zg),
        )
    )
    checks.append(
        (
            "product_order",
            product.order == G.order * cover.order // Z.order,
        )
    )
    image_g = Subgroup(product, set(embed_g))
    checks.append(("group_image_normal", image_g.is_normal()))
    image_z = frozenset(embed_g[z] for z in Z.elements)
    center_prod = center(product)
    checks.append(("central_image_central", image_z <= center_prod.index_set))
    image_frat = frozenset(embed_y[y] for y in frat.elements)
    checks.append(("central_image_is_cover_frattini", image_z == image_frat))
    return CentralCoverWitness(
        group=G,
        central_subgroup=Z,
        cover=cover,
        product=product,
        embed_group=tuple(embed_g),
        embed_cover=tuple(embed_y),
        checks=checks,
    )


def _frattini_pairing(Zg, back, basis) -> dict:
    """Map each element of Z (inside the ambient group, via back) to the
    matching element of the frattini subgroup of the cover, coordinatewise
    over the sorted basis: exponent e in the factor of order q goes to e*p
    in the stretched factor of order q*p."""
    import itertools

    from .groups import prime_factors

    primes = [prime_factors(q)[0] for _, q in basis]
    radix = [q * p for (_, q), p in zip(basis, primes)]
    pairing: dict[int, int] = {}
    for coords in itertools.product(*(range(q) for _, q in basis)):
        z = 0
        y = 0
        for i, (b, q) in enumerate(basis):
            z = Zg.mult(z, Zg.power(b, coords[i]))
            y = y * radix[i] + (coords[i] * primes[i]) % radix[i]
        pairing[back[z]] = y
    return pairing


# -- the scan -------------------------------------------------------------------


@dataclass(frozen=True)
class ScanRecord:
    """One corpus member's outcome in the exceptional-group scan."""

    name: str
    order: int
    status: str  # finding | residual_minimal | witness_not_large | not_soluble
    residual_order: int | None
    report: VerificationReport | None


def scan_exceptional(corpus) -> list[ScanRecord]:
    """Look for soluble groups whose supersoluble residual is neither
    trivial nor minimal normal and whose maximal abelian normal subgroups
    are nevertheless all large.  Non-soluble members are recorded as
    skipped; members inside the residual-minimal class are recorded but are
    not findings."""
    records = []
    for G in corpus:
        if not is_soluble(G):
            records.append(ScanRecord(G.display_name, G.order, "not_soluble", None, None))
            continue
        report = verify_maximal_abelian_large(G)
        residual = supersoluble_residual(G)
        if report.hypotheses_ok:
            status = "residual_minimal"
        elif all(w.is_large for w in report.witnesses):
            status = "finding"
        else:
            status = "witness_not_large"
        records.append(
            ScanRecord(G.display_name, G.order, status, residual.order, report)
        )
    return records


# -- selector dispatch ------------------------------------------------------------


CLAIMS = {
    "A": "maximal normal members of a fully closure-flagged class are large in groups assembled from the class",
    "C": "maximal normal members of a solubly saturated formation (containing the abelian groups) are large in groups assembled from it",
    "D": "the fitting subgroup of a soluble group is large",
    "E": "the generalized fitting subgroup is large in every group",
    "F": "the two-step core of a pi-separable group is large",
    "G": "maximal normal subgroups of bounded nilpotency class are large in soluble groups",
    "GD": "maximal normal subgroups of bounded derived length are large in soluble groups",
    "H": "maximal abelian normal subgroups are large in soluble groups with minimal-or-trivial supersoluble residual",
    "B": "central subgroups embed as the frattini subgroup of an abelian cover inside a central product",
}


def verify_selector(G: FiniteGroup, selector: str) -> VerificationReport:
    """Parse a claim selector like 'A:nilpotent', 'F:2,3', 'G:2' or 'E' and
    run it on one group, returning a uniform report."""
    head, _, param = selector.partition(":")
    head = head.strip().upper()
    param = param.strip()
    if head == "A":
        return verify_maximal_member_large(G, builtin_class(_need(param, selector)))
    if head == "C":
        return verify_formation_member_large(G, builtin_class(_need(param, selector)))
    if head == "D":
        return verify_fitting_large(G)
    if head == "E":
        return verify_generalized_fitting_large(G)
    if head == "F":
        pi = tuple(_int_param(p, selector) for p in _need(param, selector).split(","))
        try:
            from .classes import _validate_pi

            _validate_pi(pi)
        except ValueError as exc:
            raise UnknownClass(f"selector {selector!r}: {exc}")
        return verify_two_step_core_large(G, pi)
    if head == "G":
        return verify_nilpotent_class_bound_large(G, _int_param(_need(param, selector), selector))
    if head == "GD":
        return verify_derived_length_bound_large(G, _int_param(_need(param, selector), selector))
    if head == "H":
        return verify_maximal_abelian_large(G)
    if head == "B":
        return _cover_witness_report(G)
    raise UnknownClass(f"unknown claim selector {selector!r}")


def _need(param: str, selector: str) -> str:
    if not param:
        raise UnknownClass(f"selector {selector!r} needs a parameter after ':'")
    return param


def _int_param(text: str, selector: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UnknownClass(f"selector {selector!r} needs integer parameters, got {text!r}")


def _cover_witness_report(G: FiniteGroup) -> VerificationReport:
    report = VerificationReport("B", G.display_name, G.order)
    Z = center(G)
    report.hypotheses.append(("nontrivial_center", not Z.is_trivial))
    if Z.is_trivial:
        return _finish(report)
    witness = central_cover_witness(G, Z)
    report.checks.extend(witness.checks)
    return _finish(report)
