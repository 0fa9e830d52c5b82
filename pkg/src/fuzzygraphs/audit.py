"""Randomized auditing of the density and balance theorems.

Two catalogs live here. PROPERTIES holds the positive claims (things that
should hold on every valid sample); check_property draws deterministic
samples, or sweeps a generator family's parameter range, and reports
violations. CLAIMS holds the negative assertions ("such-and-such needs not
hold"); search_counterexample hunts for a concrete refuting instance and
returns a re-checkable record.

Everything is reproducible: sample i of a run seeded with s uses the
sub-seed derive(s, i), and identical arguments give identical reports. A
search that exhausts its budget returns None; that means "not found", never
"refuted".
"""

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Callable

from .balance import balance_check, star_density
from .errors import (
    BadProfileError,
    ProfileMismatchError,
    UnknownClaimError,
    UnknownPropertyError,
)
from .generators import generate
from .graph import FuzzyGraph, assemble, build, classify, pair_key, vertex_degrees
from .graphio import load_graph, save_graph
from .iso import find_isomorphism, is_self_complementary
from .ops import combine
from .values import value_text

PROFILE_KINDS = (
    "generic",
    "complete",
    "strong",
    "self_complementary",
    "constant_sigma",
    "regular_family",
)

_SWEEP_C = (Fraction(1, 4), Fraction(1, 2), Fraction(1))

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class SampleProfile:
    """How to draw random graphs: shape family, size bound, value grid.

    value_grid is the denominator of the sampling grid {1/d, ..., d/d};
    small denominators keep the exact arithmetic small and the
    counterexamples readable.
    """

    profile: str = "generic"
    max_vertices: int = 8
    value_grid: int = 16


@dataclass(frozen=True)
class CounterexampleRecord:
    """A graph (or pair) refuting a claim, with the measured quantities.

    Re-running the claim's measurement on the stored graphs must reproduce
    measured exactly; revalidate_record checks that.
    """

    claim_id: str
    graphs: tuple[FuzzyGraph, ...]
    measured: dict[str, Fraction]
    seed: int


@dataclass(frozen=True)
class AuditReport:
    property_id: str
    samples_run: int
    violations: int
    first_violation: CounterexampleRecord | None
    seed: int
    discarded: int = 0


def derive(seed: int, index: int) -> int:
    """Deterministic sub-seed for sample `index` of a run seeded with `seed`."""
    return seed * 1_000_003 + index


def _flag(value: bool) -> Fraction:
    return ONE if value else ZERO


# ---------------------------------------------------------------------------
# sampling


def _grid_value(rng: random.Random, d: int) -> Fraction:
    return Fraction(rng.randint(1, d), d)


def _grid_value_at_most(rng: random.Random, d: int, cap: Fraction) -> Fraction:
    top = int(cap * d)
    return Fraction(rng.randint(1, top), d)


def sample_graph(profile: SampleProfile, seed: int) -> FuzzyGraph:
    """Draw one valid graph, deterministically from the seed.

    generic: grid sigma, each pair independently an edge (probability 1/2)
    with mu uniform on the grid points at most sigma(u) ^ sigma(v).
    complete / strong: mu forced to sigma ^ sigma on all / selected pairs.
    self_complementary: sigma from even grid numerators and
    mu = (sigma ^ sigma) / 2 on every pair, which stays on the doubled grid.
    constant_sigma: one shared sigma value. regular_family: rotate through
    the constant-membership families, circulant graphs, and a
    constant-total-degree construction.
    """
    if profile.profile not in PROFILE_KINDS:
        raise BadProfileError(f"unknown profile {profile.profile!r}")
    if profile.max_vertices < 1:
        raise BadProfileError("max_vertices must be at least 1")
    if profile.value_grid < 2:
        raise BadProfileError("value grid denominator must be at least 2")

    rng = random.Random(seed)
    d = profile.value_grid
    kind = profile.profile
    if kind == "regular_family":
        return _sample_regular_family(rng, profile)

    n = rng.randint(1, profile.max_vertices)
    names = [f"v{i}" for i in range(1, n + 1)]
    if kind == "self_complementary":
        sigma = {v: Fraction(2 * rng.randint(1, d // 2), d) for v in names}
        edges = [(u, v, min(sigma[u], sigma[v]) / 2) for u, v in combinations(names, 2)]
    elif kind == "complete":
        sigma = {v: _grid_value(rng, d) for v in names}
        edges = [(u, v, min(sigma[u], sigma[v])) for u, v in combinations(names, 2)]
    elif kind == "strong":
        sigma = {v: _grid_value(rng, d) for v in names}
        edges = [
            (u, v, min(sigma[u], sigma[v]))
            for u, v in combinations(names, 2)
            if rng.random() < 0.5
        ]
    elif kind == "constant_sigma":
        shared = _grid_value(rng, d)
        sigma = {v: shared for v in names}
        edges = [
            (u, v, _grid_value_at_most(rng, d, shared))
            for u, v in combinations(names, 2)
            if rng.random() < 0.5
        ]
    else:  # generic
        sigma = {v: _grid_value(rng, d) for v in names}
        edges = []
        for u, v in combinations(names, 2):
            if rng.random() < 0.5:
                edges.append((u, v, _grid_value_at_most(rng, d, min(sigma[u], sigma[v]))))
    return build(list(sigma.items()), edges)


def _sample_regular_family(rng: random.Random, profile: SampleProfile) -> FuzzyGraph:
    d = profile.value_grid
    maxv = max(3, profile.max_vertices)
    shared = _grid_value(rng, d)
    pick = rng.randrange(6)
    if pick == 0:
        return generate("complete_kn", rng.randint(1, maxv), shared)
    if pick == 1:
        return generate("cycle_strong", rng.randint(3, maxv), shared)
    if pick == 2 and maxv >= 10:
        return generate("petersen_strong", c=shared)
    if pick == 3:
        return generate("complete_bipartite_strong", rng.randint(1, max(1, maxv // 2)), shared)
    if pick == 4:
        return _sample_circulant(rng, d, maxv)
    return _sample_constant_total_degree(rng, d, maxv)


def _sample_circulant(rng: random.Random, d: int, maxv: int) -> FuzzyGraph:
    """Constant sigma, constant mu on a circulant topology: always regular."""
    n = rng.randint(4, max(4, maxv))
    offsets = rng.sample(range(1, n // 2 + 1), rng.randint(1, n // 2))
    shared = _grid_value(rng, d)
    mu = _grid_value_at_most(rng, d, shared)
    names = [f"v{i}" for i in range(1, n + 1)]
    keys = set()
    for off in sorted(offsets):
        for i in range(n):
            keys.add(pair_key(names[i], names[(i + off) % n]))
    return build([(v, shared) for v in names], [(u, v, mu) for u, v in sorted(keys)])


def _sample_constant_total_degree(rng: random.Random, d: int, maxv: int) -> FuzzyGraph:
    """Constant mu with sigma(v) = t - degree(v): total degree is t everywhere.

    When the crisp degrees vary, the result is totally regular but not
    regular, the awkward half of the regularity landscape.
    """
    n = rng.randint(3, max(3, maxv))
    names = [f"v{i}" for i in range(1, n + 1)]
    chosen = [(u, v) for u, v in combinations(names, 2) if rng.random() < 0.5]
    crisp = {v: 0 for v in names}
    for u, v in chosen:
        crisp[u] += 1
        crisp[v] += 1
    top_degree = max(crisp.values())
    j_top = d // (top_degree + 1)
    if j_top >= 1:
        mu = Fraction(rng.randint(1, j_top), d)
    else:
        mu = Fraction(1, top_degree + 1)
    total = (top_degree + 1) * mu
    vertices = [(v, total - crisp[v] * mu) for v in names]
    return build(vertices, [(u, v, mu) for u, v in chosen])


def _relabel(g: FuzzyGraph, rng: random.Random, prefix: str = "u") -> FuzzyGraph:
    """A fresh-id isomorphic copy of g under a random bijection."""
    names = sorted(g.sigma)
    fresh = [f"{prefix}{k}" for k in range(1, len(names) + 1)]
    rng.shuffle(fresh)
    mapping = dict(zip(names, fresh))
    sigma = {mapping[v]: value for v, value in g.sigma.items()}
    mu = {pair_key(mapping[u], mapping[v]): value for (u, v), value in g.mu.items()}
    return assemble(sigma, mu)


# ---------------------------------------------------------------------------
# measurements (shared by checks, searches, and record revalidation)


def _pairs_min_sum(g: FuzzyGraph) -> Fraction:
    ids = sorted(g.sigma)
    return sum((min(g.sigma[u], g.sigma[v]) for u, v in combinations(ids, 2)), ZERO)


def _measure_complete_d2(graphs):
    (g,) = graphs
    rep = classify(g)
    return {
        "is_complete": _flag(rep.is_complete),
        "vertex_count": Fraction(len(g.sigma)),
        "edge_count": Fraction(len(g.mu)),
        "density": star_density(g).value,
    }


def _violates_complete_d2(m):
    return bool(m["is_complete"]) and m["vertex_count"] >= m["edge_count"] and m["density"] > 2


def _measure_selfcomp_d1(graphs):
    (g,) = graphs
    ok, _ = is_self_complementary(g)
    return {"self_complementary": _flag(ok), "density": star_density(g).value}


def _violates_selfcomp_d1(m):
    return not bool(m["self_complementary"]) or m["density"] > 1


def _measure_halfmu(graphs):
    (g,) = graphs
    ids = sorted(g.sigma)
    half_everywhere = all(
        g.mu_at(u, v) == min(g.sigma[u], g.sigma[v]) / 2 for u, v in combinations(ids, 2)
    )
    ok, _ = is_self_complementary(g)
    return {
        "half_mu_everywhere": _flag(half_everywhere),
        "self_complementary": _flag(ok),
        "density": star_density(g).value,
    }


def _violates_halfmu(m):
    return not bool(m["half_mu_everywhere"]) or not bool(m["self_complementary"]) or m["density"] > 1


def _measure_selfcomp_sum(graphs):
    (g,) = graphs
    ok, _ = is_self_complementary(g)
    return {
        "self_complementary": _flag(ok),
        "mu_sum": g.mu_sum(),
        "half_pairs_min_sum": _pairs_min_sum(g) / 2,
    }


def _violates_selfcomp_sum(m):
    return not bool(m["self_complementary"]) or m["mu_sum"] != m["half_pairs_min_sum"]


def _measure_iso_sums(graphs):
    g1, g2 = graphs
    morphism = find_isomorphism(g1, g2)
    return {
        "isomorphic": _flag(morphism is not None),
        "sigma_sum_1": g1.sigma_sum(),
        "sigma_sum_2": g2.sigma_sum(),
        "mu_sum_1": g1.mu_sum(),
        "mu_sum_2": g2.mu_sum(),
    }


def _violates_iso_sums(m):
    return (
        not bool(m["isomorphic"])
        or m["sigma_sum_1"] != m["sigma_sum_2"]
        or m["mu_sum_1"] != m["mu_sum_2"]
    )


def _measure_iso_bal(graphs):
    g1, g2 = graphs
    morphism = find_isomorphism(g1, g2)
    v1 = balance_check(g1)
    v2 = balance_check(g2)
    return {
        "isomorphic": _flag(morphism is not None),
        "balanced_1": _flag(v1.balanced),
        "balanced_2": _flag(v2.balanced),
        "density_1": v1.graph_density.value,
        "density_2": v2.graph_density.value,
        "max_subgraph_density_1": v1.max_subgraph_density.value,
        "max_subgraph_density_2": v2.max_subgraph_density.value,
    }


def _violates_iso_bal(m):
    return (
        not bool(m["isomorphic"])
        or m["balanced_1"] != m["balanced_2"]
        or m["density_1"] != m["density_2"]
        or m["max_subgraph_density_1"] != m["max_subgraph_density_2"]
    )


def _direct_densities(g1, g2):
    d1 = star_density(g1).value
    d2 = star_density(g2).value
    dp = star_density(combine("direct", g1, g2)).value
    return d1, d2, dp


def _measure_direct_iff(graphs):
    g1, g2 = graphs
    d1, d2, dp = _direct_densities(g1, g2)
    return {
        "density_1": d1,
        "density_2": d2,
        "density_product": dp,
        "factors_dominated": _flag(d1 <= dp and d2 <= dp),
        "densities_equal": _flag(d1 == d2 == dp),
    }


def _violates_direct_iff(m):
    return m["factors_dominated"] != m["densities_equal"]


def _measure_direct_bal(graphs):
    g1, g2 = graphs
    d1, d2, dp = _direct_densities(g1, g2)
    product = combine("direct", g1, g2)
    return {
        "factor_1_balanced": _flag(balance_check(g1).balanced),
        "factor_2_balanced": _flag(balance_check(g2).balanced),
        "density_1": d1,
        "density_2": d2,
        "density_product": dp,
        "product_balanced": _flag(balance_check(product).balanced),
        "densities_equal": _flag(d1 == d2 == dp),
    }


def _violates_direct_bal(m):
    return m["product_balanced"] != m["densities_equal"]


def _measure_reg_dens(graphs):
    (g,) = graphs
    rep = classify(g)
    regular = rep.regular_degree is not None
    degree = rep.regular_degree if regular else ZERO
    predicted = Fraction(len(g.sigma)) * degree / g.sigma_sum() if regular else ZERO
    return {
        "regular": _flag(regular),
        "degree": degree,
        "density": star_density(g).value,
        "predicted": predicted,
    }


def _violates_reg_dens(m):
    return bool(m["regular"]) and m["density"] != m["predicted"]


def _measure_reg_const(graphs):
    (g,) = graphs
    rep = classify(g)
    applies = rep.regular_degree is not None and rep.constant_sigma is not None
    degree = rep.regular_degree if applies else ZERO
    shared = rep.constant_sigma if applies else ONE
    return {
        "applies": _flag(applies),
        "degree": degree,
        "sigma_value": shared,
        "density": star_density(g).value,
        "predicted": degree / shared if applies else ZERO,
    }


def _violates_reg_const(m):
    return bool(m["applies"]) and m["density"] != m["predicted"]


def _measure_treg_dens(graphs):
    (g,) = graphs
    rep = classify(g)
    totally = rep.totally_regular_degree is not None
    total_degree = rep.totally_regular_degree if totally else ZERO
    predicted = (
        Fraction(len(g.sigma)) * total_degree / g.sigma_sum() - 1 if totally else ZERO
    )
    return {
        "totally_regular": _flag(totally),
        "total_degree": total_degree,
        "density": star_density(g).value,
        "predicted": predicted,
    }


def _violates_treg_dens(m):
    return bool(m["totally_regular"]) and m["density"] != m["predicted"]


def _measure_treg_const(graphs):
    (g,) = graphs
    rep = classify(g)
    applies = rep.totally_regular_degree is not None and rep.constant_sigma is not None
    total_degree = rep.totally_regular_degree if applies else ZERO
    shared = rep.constant_sigma if applies else ONE
    return {
        "applies": _flag(applies),
        "total_degree": total_degree,
        "sigma_value": shared,
        "density": star_density(g).value,
        "predicted": total_degree / shared - 1 if applies else ZERO,
    }


def _violates_treg_const(m):
    return bool(m["applies"]) and m["density"] != m["predicted"]


def _sweep_expected(g: FuzzyGraph, family: str) -> Fraction:
    if family == "P-KN":
        return Fraction(len(g.sigma) - 1)
    if family == "P-CN":
        return Fraction(2)
    if family == "P-PETERSEN":
        return Fraction(3)
    return Fraction(len(g.sigma), 2)  # P-KNN


def _make_sweep_measure(pid: str):
    def measure(graphs):
        (g,) = graphs
        verdict = balance_check(g)
        return {
            "density": verdict.graph_density.value,
            "expected": _sweep_expected(g, pid),
            "balanced": _flag(verdict.balanced),
            "max_subgraph_density": verdict.max_subgraph_density.value,
        }

    return measure


def _violates_sweep(m):
    return m["density"] != m["expected"] or not bool(m["balanced"])


# ---------------------------------------------------------------------------
# property catalog


@dataclass(frozen=True)
class _PropertyDef:
    kind: str | None  # required profile kind; None means the profile is unused
    default_vertices: int
    vertex_cap: int
    measure: Callable[[tuple], dict]
    violates: Callable[[dict], bool]
    mode: str  # "single", "relabel", "pair", "sweep"
    accept: Callable[[FuzzyGraph, FuzzyGraph], bool] | None = None


def _both_balanced(g1: FuzzyGraph, g2: FuzzyGraph) -> bool:
    return balance_check(g1).balanced and balance_check(g2).balanced


PROPERTIES: dict[str, _PropertyDef] = {
    "P-COMPLETE-D2": _PropertyDef("complete", 3, 24, _measure_complete_d2, _violates_complete_d2, "single"),
    "P-SELFCOMP-D1": _PropertyDef("self_complementary", 8, 12, _measure_selfcomp_d1, _violates_selfcomp_d1, "single"),
    "P-HALFMU": _PropertyDef("self_complementary", 8, 12, _measure_halfmu, _violates_halfmu, "single"),
    "P-SELFCOMP-SUM": _PropertyDef("self_complementary", 8, 12, _measure_selfcomp_sum, _violates_selfcomp_sum, "single"),
    "P-ISO-SUMS": _PropertyDef("generic", 8, 12, _measure_iso_sums, _violates_iso_sums, "relabel"),
    "P-ISO-BAL": _PropertyDef("generic", 8, 12, _measure_iso_bal, _violates_iso_bal, "relabel"),
    "P-DIRECT-IFF": _PropertyDef("complete", 4, 4, _measure_direct_iff, _violates_direct_iff, "pair"),
    "P-DIRECT-BAL": _PropertyDef("complete", 4, 4, _measure_direct_bal, _violates_direct_bal, "pair", accept=_both_balanced),
    "P-REG-DENS": _PropertyDef("regular_family", 10, 24, _measure_reg_dens, _violates_reg_dens, "single"),
    "P-REG-CONST": _PropertyDef("regular_family", 10, 24, _measure_reg_const, _violates_reg_const, "single"),
    "P-TREG-DENS": _PropertyDef("regular_family", 10, 24, _measure_treg_dens, _violates_treg_dens, "single"),
    "P-TREG-CONST": _PropertyDef("regular_family", 10, 24, _measure_treg_const, _violates_treg_const, "single"),
    "P-KN": _PropertyDef(None, 0, 0, _make_sweep_measure("P-KN"), _violates_sweep, "sweep"),
    "P-CN": _PropertyDef(None, 0, 0, _make_sweep_measure("P-CN"), _violates_sweep, "sweep"),
    "P-PETERSEN": _PropertyDef(None, 0, 0, _make_sweep_measure("P-PETERSEN"), _violates_sweep, "sweep"),
    "P-KNN": _PropertyDef(None, 0, 0, _make_sweep_measure("P-KNN"), _violates_sweep, "sweep"),
}


def default_profile(property_id: str, max_vertices: int | None = None, value_grid: int = 16) -> SampleProfile:
    """The profile matching a property's hypothesis, clamped to its guard."""
    spec = _property_def(property_id)
    kind = spec.kind or "generic"
    wanted = spec.default_vertices if max_vertices is None else max_vertices
    cap = spec.vertex_cap or 8
    return SampleProfile(kind, max(1, min(wanted, cap)), value_grid)


def _property_def(property_id: str) -> _PropertyDef:
    if property_id not in PROPERTIES:
        raise UnknownPropertyError(f"unknown property {property_id!r}")
    return PROPERTIES[property_id]


def _sweep_cases(pid: str):
    if pid == "P-KN":
        return [("complete_kn", n, c) for c in _SWEEP_C for n in range(2, 8)]
    if pid == "P-CN":
        return [("cycle_strong", n, c) for c in _SWEEP_C for n in range(4, 13)]
    if pid == "P-PETERSEN":
        return [("petersen_strong", None, c) for c in _SWEEP_C]
    return [("complete_bipartite_strong", n, c) for c in _SWEEP_C for n in range(2, 6)]


def check_property(
    property_id: str,
    samples: int = 200,
    seed: int = 0,
    profile: SampleProfile | None = None,
) -> AuditReport:
    """Audit one catalogued property.

    Sampled properties draw `samples` graphs (or pairs) from the profile,
    which must match the property's hypothesis. The generator-class
    properties (P-KN, P-CN, P-PETERSEN, P-KNN) ignore profile and samples
    and sweep their fixed parameter ranges instead.
    """
    spec = _property_def(property_id)

    if spec.mode == "sweep":
        cases = _sweep_cases(property_id)
        violations = 0
        first = None
        for family, n, c in cases:
            g = generate(family, n, c)
            measured = spec.measure((g,))
            if spec.violates(measured):
                violations += 1
                if first is None:
                    first = CounterexampleRecord(property_id, (g,), measured, seed)
        return AuditReport(property_id, len(cases), violations, first, seed)

    if profile is None:
        profile = default_profile(property_id)
    if profile.profile != spec.kind:
        raise ProfileMismatchError(
            f"{property_id} expects the {spec.kind!r} profile, got {profile.profile!r}"
        )
    if profile.max_vertices > spec.vertex_cap:
        raise ProfileMismatchError(
            f"{property_id} is guarded to max_vertices <= {spec.vertex_cap}"
        )

    violations = 0
    discarded = 0
    first = None

    if spec.mode == "single":
        for i in range(samples):
            sub = derive(seed, i)
            graphs = (sample_graph(profile, sub),)
            measured = spec.measure(graphs)
            if spec.violates(measured):
                violations += 1
                if first is None:
                    first = CounterexampleRecord(property_id, graphs, measured, sub)
        return AuditReport(property_id, samples, violations, first, seed)

    if spec.mode == "relabel":
        for i in range(samples):
            sub = derive(seed, i)
            g1 = sample_graph(profile, sub)
            g2 = _relabel(g1, random.Random(derive(sub, 1)))
            measured = spec.measure((g1, g2))
            if spec.violates(measured):
                violations += 1
                if first is None:
                    first = CounterexampleRecord(property_id, (g1, g2), measured, sub)
        return AuditReport(property_id, samples, violations, first, seed)

    # mode == "pair": independent draws, optionally filtered by a hypothesis
    run = 0
    attempts = 0
    max_attempts = samples * 50
    while run < samples and attempts < max_attempts:
        g1 = sample_graph(profile, derive(seed, 2 * attempts))
        g2 = sample_graph(profile, derive(seed, 2 * attempts + 1))
        attempts += 1
        if spec.accept is not None and not spec.accept(g1, g2):
            discarded += 1
            continue
        graphs = (g1, g2)
        measured = spec.measure(graphs)
        run += 1
        if spec.violates(measured):
            violations += 1
            if first is None:
                first = CounterexampleRecord(property_id, graphs, measured, derive(seed, 2 * attempts - 2))
    return AuditReport(property_id, run, violations, first, seed, discarded)


def run_all_properties(
    samples: int = 200, seed: int = 0, max_vertices: int | None = None, value_grid: int = 16
) -> list[AuditReport]:
    reports = []
    for pid in PROPERTIES:
        spec = PROPERTIES[pid]
        profile = None if spec.mode == "sweep" else default_profile(pid, max_vertices, value_grid)
        reports.append(check_property(pid, samples=samples, seed=seed, profile=profile))
    return reports


# ---------------------------------------------------------------------------
# counterexample searches


def _cand_strong_not_complete(sub: int):
    g = sample_graph(SampleProfile("strong", 5, 8), sub)
    rep = classify(g)
    if rep.is_strong and not rep.is_complete:
        return (g,)
    return None


def _measure_strong_not_complete(graphs):
    (g,) = graphs
    rep = classify(g)
    return {"is_strong": _flag(rep.is_strong), "is_complete": _flag(rep.is_complete)}


def _grid_at_least(rng: random.Random, d: int, floor: Fraction) -> Fraction:
    low = int(floor * d)
    return Fraction(rng.randint(low, d), d)


def _cand_regular_not_treg(sub: int) -> FuzzyGraph | None:
    rng = random.Random(sub)
    d = 8
    mu = _grid_value(rng, d)
    family, n = rng.choice((("complete_kn", rng.randint(2, 5)), ("cycle_strong", rng.randint(3, 6))))
    sigma_list = [_grid_at_least(rng, d, mu) for _ in range(n)]
    if len(set(sigma_list)) < 2:
        return None
    g = generate(family, n, mu, sigma_list=sigma_list)
    rep = classify(g)
    if rep.regular_degree is not None and rep.totally_regular_degree is None:
        return g
    return None


def _cand_treg_not_regular(sub: int) -> FuzzyGraph | None:
    g = _sample_constant_total_degree(random.Random(sub), 8, 6)
    rep = classify(g)
    if rep.totally_regular_degree is not None and rep.regular_degree is None:
        return g
    return None


def _measure_reg_vs_treg(graphs):
    g1, g2 = graphs
    rep1 = classify(g1)
    rep2 = classify(g2)
    return {
        "g1_regular": _flag(rep1.regular_degree is not None),
        "g1_degree": rep1.regular_degree if rep1.regular_degree is not None else ZERO,
        "g1_totally_regular": _flag(rep1.totally_regular_degree is not None),
        "g2_totally_regular": _flag(rep2.totally_regular_degree is not None),
        "g2_total_degree": rep2.totally_regular_degree
        if rep2.totally_regular_degree is not None
        else ZERO,
        "g2_regular": _flag(rep2.regular_degree is not None),
    }


def _cand_converse_d1(sub: int):
    g = sample_graph(SampleProfile("generic", 6, 8), sub)
    if star_density(g).value > 1:
        return None
    ok, _ = is_self_complementary(g)
    if ok:
        return None
    return (g,)


def _measure_converse_d1(graphs):
    (g,) = graphs
    ok, _ = is_self_complementary(g)
    return {"density": star_density(g).value, "self_complementary": _flag(ok)}


def _cand_direct_noncomplete(sub: int):
    g1 = sample_graph(SampleProfile("complete", 3, 8), derive(sub, 0))
    g2 = sample_graph(SampleProfile("generic", 4, 8), derive(sub, 1))
    if classify(g2).is_complete:
        return None
    if not balance_check(g1).balanced or not balance_check(g2).balanced:
        return None
    measured = _measure_direct_noncomplete((g1, g2))
    if measured["product_balanced"] != measured["densities_equal"]:
        return (g1, g2)
    return None


def _measure_direct_noncomplete(graphs):
    g1, g2 = graphs
    d1, d2, dp = _direct_densities(g1, g2)
    product = combine("direct", g1, g2)
    return {
        "factor_1_complete": _flag(classify(g1).is_complete),
        "factor_2_complete": _flag(classify(g2).is_complete),
        "factor_1_balanced": _flag(balance_check(g1).balanced),
        "factor_2_balanced": _flag(balance_check(g2).balanced),
        "density_1": d1,
        "density_2": d2,
        "density_product": dp,
        "product_balanced": _flag(balance_check(product).balanced),
        "densities_equal": _flag(d1 == d2 == dp),
    }


_PRESERVE_OPS = ("semidirect", "strong", "join", "composition", "cartesian")
_TREG_OPS = ("direct", "semidirect", "strong", "join", "composition", "cartesian")


def _make_cand_op_not_preserve(op: str):
    def cand(sub: int):
        rng = random.Random(derive(sub, 2))
        grid = rng.choice((4, 8))
        g1 = sample_graph(SampleProfile("complete", 3, grid), derive(sub, 0))
        if not balance_check(g1).balanced:
            return None
        if rng.random() < 0.5:
            g2 = _relabel(g1, rng)  # twin: densities equal by construction
        else:
            # equal densities are a coincidence, so give each attempt a few
            # tries at drawing a matching balanced partner
            target = star_density(g1).value
            g2 = None
            for k in range(4):
                candidate = sample_graph(SampleProfile("complete", 3, grid), derive(sub, 3 + k))
                if star_density(candidate).value != target:
                    continue
                if not balance_check(candidate).balanced:
                    continue
                g2 = _relabel(candidate, rng)
                break
            if g2 is None:
                return None
        combined = combine(op, g1, g2)
        if len(combined.sigma) > 16:
            return None
        if balance_check(combined).balanced:
            return None
        return (g1, g2)

    return cand


def _make_measure_op_not_preserve(op: str):
    def measure(graphs):
        g1, g2 = graphs
        combined = combine(op, g1, g2)
        verdict = balance_check(combined)
        return {
            "factor_1_balanced": _flag(balance_check(g1).balanced),
            "factor_2_balanced": _flag(balance_check(g2).balanced),
            "density_1": star_density(g1).value,
            "density_2": star_density(g2).value,
            "density_combined": verdict.graph_density.value,
            "combined_balanced": _flag(verdict.balanced),
            "combined_max_subgraph_density": verdict.max_subgraph_density.value,
        }

    return measure


def _treg_factor(sub: int) -> FuzzyGraph:
    rng = random.Random(sub)
    d = 8
    shared = _grid_value(rng, d)
    pick = rng.randrange(4)
    if pick == 0:
        return generate("complete_kn", rng.randint(1, 4), shared)
    if pick == 1:
        return generate("cycle_strong", rng.randint(3, 5), shared)
    if pick == 2:
        return generate("complete_bipartite_strong", rng.randint(1, 2), shared)
    return _sample_constant_total_degree(rng, d, 4)


def _make_cand_treg_not_preserved(op: str):
    def cand(sub: int):
        g1 = _treg_factor(derive(sub, 0))
        g2 = _relabel(_treg_factor(derive(sub, 1)), random.Random(derive(sub, 2)))
        if classify(g1).totally_regular_degree is None:
            return None
        if classify(g2).totally_regular_degree is None:
            return None
        combined = combine(op, g1, g2)
        if classify(combined).totally_regular_degree is not None:
            return None
        return (g1, g2)

    return cand


def _make_measure_treg_not_preserved(op: str):
    def measure(graphs):
        g1, g2 = graphs
        combined = combine(op, g1, g2)
        totals = sorted(t for _, t in vertex_degrees(combined).values())
        return {
            "factor_1_total_degree": classify(g1).totally_regular_degree or ZERO,
            "factor_2_total_degree": classify(g2).totally_regular_degree or ZERO,
            "combined_totally_regular": _flag(classify(combined).totally_regular_degree is not None),
            "combined_total_degree_min": totals[0],
            "combined_total_degree_max": totals[-1],
        }

    return measure


def _cand_kn_nonconst_sigma(sub: int):
    rng = random.Random(sub)
    d = 8
    n = rng.randint(3, 5)
    mu = _grid_value_at_most(rng, d, Fraction(1, 2))
    sigma_list = [_grid_at_least(rng, d, mu) for _ in range(n)]
    if len(set(sigma_list)) < 2:
        return None
    g = generate("complete_kn", n, mu, sigma_list=sigma_list)
    if balance_check(g).balanced:
        return None
    return (g,)


def _cand_kn_nonconst_mu(sub: int):
    rng = random.Random(sub)
    d = 8
    n = rng.randint(3, 5)
    shared = _grid_value(rng, d)
    names = [f"v{i}" for i in range(1, n + 1)]
    edges = [(u, v, _grid_value_at_most(rng, d, shared)) for u, v in combinations(names, 2)]
    if len({value for _, _, value in edges}) < 2:
        return None
    g = build([(v, shared) for v in names], edges)
    if balance_check(g).balanced:
        return None
    return (g,)


def _measure_kn_shaped(graphs):
    (g,) = graphs
    rep = classify(g)
    verdict = balance_check(g)
    return {
        "sigma_constant": _flag(rep.constant_sigma is not None),
        "mu_constant": _flag(rep.constant_mu is not None),
        "all_pairs_edged": _flag(len(g.mu) == len(g.sigma) * (len(g.sigma) - 1) // 2),
        "density": verdict.graph_density.value,
        "max_subgraph_density": verdict.max_subgraph_density.value,
        "balanced": _flag(verdict.balanced),
    }


@dataclass(frozen=True)
class _ClaimDef:
    candidate: Callable[[int], tuple | None] | None  # None: claim has a bespoke search loop
    measure: Callable[[tuple], dict]


CLAIMS: dict[str, _ClaimDef] = {
    "N-STRONG-NOT-COMPLETE": _ClaimDef(_cand_strong_not_complete, _measure_strong_not_complete),
    "N-REG-VS-TREG": _ClaimDef(None, _measure_reg_vs_treg),
    "N-CONVERSE-D1": _ClaimDef(_cand_converse_d1, _measure_converse_d1),
    "N-DIRECT-NONCOMPLETE": _ClaimDef(_cand_direct_noncomplete, _measure_direct_noncomplete),
}
for _op in _PRESERVE_OPS:
    CLAIMS[f"N-OP-NOT-PRESERVE-{_op.upper()}"] = _ClaimDef(
        _make_cand_op_not_preserve(_op), _make_measure_op_not_preserve(_op)
    )
for _op in _TREG_OPS:
    CLAIMS[f"N-TREG-NOT-PRESERVED-{_op.upper()}"] = _ClaimDef(
        _make_cand_treg_not_preserved(_op), _make_measure_treg_not_preserved(_op)
    )
CLAIMS["N-KN-NONCONST-SIGMA"] = _ClaimDef(_cand_kn_nonconst_sigma, _measure_kn_shaped)
CLAIMS["N-KN-NONCONST-MU"] = _ClaimDef(_cand_kn_nonconst_mu, _measure_kn_shaped)


def search_counterexample(claim_id: str, budget: int = 10_000, seed: int = 0) -> CounterexampleRecord | None:
    """Hunt for a refuting instance of one negative claim.

    Returns the first counterexample found within the budget, or None when
    the budget is exhausted (best effort, not a refutation of the claim).
    """
    if claim_id not in CLAIMS:
        raise UnknownClaimError(f"unknown claim {claim_id!r}")
    spec = CLAIMS[claim_id]

    if claim_id == "N-REG-VS-TREG":
        regular_side = None
        totally_side = None
        for i in range(budget):
            sub = derive(seed, i)
            if regular_side is None:
                regular_side = _cand_regular_not_treg(sub)
            if totally_side is None:
                totally_side = _cand_treg_not_regular(sub)
            if regular_side is not None and totally_side is not None:
                graphs = (regular_side, totally_side)
                return CounterexampleRecord(claim_id, graphs, spec.measure(graphs), seed)
        return None

    for i in range(budget):
        sub = derive(seed, i)
        graphs = spec.candidate(sub)
        if graphs is None:
            continue
        return CounterexampleRecord(claim_id, graphs, spec.measure(graphs), sub)
    return None


# ---------------------------------------------------------------------------
# record persistence


def save_record(record: CounterexampleRecord, out_dir) -> Path:
    """Write the record's graphs plus a sidecar file; returns the sidecar path."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    graph_files = []
    for k, g in enumerate(record.graphs, start=1):
        name = f"{record.claim_id}.graph{k}.json"
        save_graph(out / name, g)
        graph_files.append(name)
    sidecar = {
        "claim_id": record.claim_id,
        "seed": record.seed,
        "graphs": graph_files,
        "measured": {key: value_text(value) for key, value in sorted(record.measured.items())},
    }
    path = out / f"{record.claim_id}.record.json"
    path.write_text(json.dumps(sidecar, indent=2) + "\n", encoding="utf-8")
    return path


def load_record(path) -> CounterexampleRecord:
    path = Path(path)
    doc = json.loads(path.read_text(encoding="utf-8"))
    graphs = tuple(load_graph(path.parent / name) for name in doc["graphs"])
    measured = {key: Fraction(text) for key, text in doc["measured"].items()}
    return CounterexampleRecord(doc["claim_id"], graphs, measured, doc["seed"])


def _measure_for(claim_id: str):
    if claim_id in CLAIMS:
        return CLAIMS[claim_id].measure
    if claim_id in PROPERTIES:
        return PROPERTIES[claim_id].measure
    raise UnknownClaimError(f"unknown claim or property {claim_id!r}")


def revalidate_record(record: CounterexampleRecord) -> bool:
    """Recompute the record's measured quantities; exact match required."""
    return _measure_for(record.claim_id)(record.graphs) == record.measured
