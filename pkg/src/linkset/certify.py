"""Certificate construction and verification for linked pair sets.

A linked-set certificate has two halves: a parity table showing the
mod-2 linking sum is embedding-independent, and one witness drawing with
an odd sum.  Minimality is certified per pair by an automorphism routing
each pair onto the witness's Hopf pair (plus designated crossing changes
where the proof needs a second drawing).  Verification never trusts the
certificate author: everything is recomputed from raw data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .diagrams import (Diagram, SplitCertificate, flip_crossing, linking_number,
                       split_certify, validate_diagram)
from .embeddings import linking_number_value, random_linear_embedding
from .graphs import (CyclePair, Graph, LambdaSet, LinksetError, MinorMap,
                     VertexPermutation, apply_permutation, enumerate_pairs,
                     gamma2, psi_pair_map, vertex_splittings, _norm_edge)


class VerificationError(LinksetError):
    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = details or {}


# ---------------------------------------------------------------------------
# parity tables


@dataclass(frozen=True)
class ParityTable:
    host: Graph
    lam: LambdaSet
    counts: dict  # (e, f) with e < f, disjoint -> separation count

    @property
    def all_even(self) -> bool:
        return all(v % 2 == 0 for v in self.counts.values())

    def odd_keys(self) -> list:
        return sorted(k for k, v in self.counts.items() if v % 2)

    def digest(self) -> list:
        return [[[f"{e[0]}-{e[1]}", f"{f[0]}-{f[1]}"], v]
                for (e, f), v in sorted(self.counts.items())]


def disjoint_edge_pairs(g: Graph):
    edges = g.sorted_edges()
    for e, f in itertools.combinations(edges, 2):
        if not (set(e) & set(f)):
            yield e, f


def parity_table(g: Graph, lam: LambdaSet) -> ParityTable:
    """Count, per disjoint edge pair, the pairs of lam separating it."""
    if lam.host != g:
        raise VerificationError("pair set is not hosted on this graph")
    counts = {(e, f): 0 for e, f in disjoint_edge_pairs(g)}
    for p in lam:
        e1 = p.first.edges()
        e2 = p.second.edges()
        for e in e1:
            for f in e2:
                if set(e) & set(f):
                    continue
                key = (e, f) if e < f else (f, e)
                counts[key] += 1
    return ParityTable(g, lam, counts)


# ---------------------------------------------------------------------------
# linkedness certificates


@dataclass
class WitnessProfileReport:
    hopf_pair: CyclePair | None
    odd_pairs: list
    uncertified: list

    @property
    def strict(self) -> bool:
        return (self.hopf_pair is not None and len(self.odd_pairs) == 1
                and not self.uncertified)


@dataclass
class LinkednessCertificate:
    host: Graph
    lam: LambdaSet
    parity: ParityTable
    witness: Diagram
    witness_sum: int  # mod 2
    profile: WitnessProfileReport

    def to_json(self) -> dict:
        return {
            "graph": self.host.to_json(),
            "lambda": self.lam.to_json(),
            "witnessDiagram": self.witness.to_json(),
            "parityDigest": self.parity.digest(),
        }


def witness_profile(d: Diagram, lam: LambdaSet) -> WitnessProfileReport:
    odd = []
    uncertified = []
    for p in lam:
        lk = linking_number(d, p)
        if lk % 2 == 1:
            odd.append((p, lk))
        elif not split_certify(d, p).is_split:
            uncertified.append(p)
    hopf = None
    if len(odd) == 1 and abs(odd[0][1]) == 1:
        hopf = odd[0][0]
    return WitnessProfileReport(hopf_pair=hopf, odd_pairs=odd,
                                uncertified=uncertified)


def verify_linked(g: Graph, lam: LambdaSet, witness: Diagram,
                  require_strict: bool = False) -> LinkednessCertificate:
    """Certify that lam is linked: even parity table plus an odd witness sum."""
    if lam.host != g:
        raise VerificationError("pair set is not hosted on this graph")
    if witness.host != g:
        raise VerificationError("witness diagram draws a different graph")
    validate_diagram(witness)

    table = parity_table(g, lam)
    if not table.all_even:
        raise VerificationError(
            "parity failure: some disjoint edge pair is separated an odd "
            "number of times", {"odd_edge_pairs": table.odd_keys()})

    total = sum(linking_number(witness, p) for p in lam)
    if total % 2 != 1:
        raise VerificationError(
            f"witness linking sum {total} is even", {"sum": total})

    profile = witness_profile(witness, lam)
    if require_strict and not profile.strict:
        raise VerificationError(
            "witness does not show exactly one Hopf pair with all other "
            "pairs split-certified",
            {"odd": [str(p) for p, _ in profile.odd_pairs],
             "uncertified": [str(p) for p in profile.uncertified]})
    return LinkednessCertificate(host=g, lam=lam, parity=table, witness=witness,
                                 witness_sum=total % 2, profile=profile)


# ---------------------------------------------------------------------------
# minimality batteries


@dataclass(frozen=True)
class WitnessSpec:
    """One pair's minimality witness: route it onto the drawing's Hopf pair."""

    target: CyclePair
    sigma: VertexPermutation
    flips: tuple = ()

    def to_json(self) -> dict:
        return {"target": self.target.to_json(),
                "sigma": self.sigma.to_json(),
                "flips": list(self.flips)}

    @classmethod
    def from_json(cls, data: dict, host: Graph | None = None) -> "WitnessSpec":
        return cls(target=CyclePair.from_json(data["target"], host),
                   sigma=VertexPermutation.from_json(data["sigma"]),
                   flips=tuple(data.get("flips", ())))


@dataclass
class MinimalityBattery:
    lam: LambdaSet
    base: Diagram
    specs: tuple

    def to_json(self) -> dict:
        return {
            "graph": self.lam.host.to_json(),
            "lambda": self.lam.to_json(),
            "witnessDiagram": self.base.to_json(),
            "battery": [s.to_json() for s in self.specs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MinimalityBattery":
        lam = LambdaSet.from_json(data["lambda"])
        base = Diagram.from_json(data["witnessDiagram"])
        specs = tuple(WitnessSpec.from_json(s, lam.host) for s in data["battery"])
        return cls(lam=lam, base=base, specs=specs)


@dataclass
class SpecResult:
    target: CyclePair
    linking: int
    failures: list

    @property
    def passed(self) -> bool:
        return abs(self.linking) % 2 == 1 and not self.failures


@dataclass
class MinimalityReport:
    lam: LambdaSet
    results: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failing(self) -> list:
        return [r for r in self.results if not r.passed]


def verify_minimal(g: Graph, lam: LambdaSet,
                   battery: MinimalityBattery) -> MinimalityReport:
    """Check each spec: the routed target links oddly, everything else splits."""
    if lam.host != g or battery.lam.host != g:
        raise VerificationError("battery host mismatch")
    if battery.base.host != g:
        raise VerificationError("battery base diagram draws a different graph")
    targets = sorted(s.target for s in battery.specs)
    if targets != sorted(lam.pairs) or len(battery.specs) != len(lam):
        raise VerificationError("battery does not cover the pair set exactly once")
    validate_diagram(battery.base)
    for s in battery.specs:
        if not s.sigma.is_automorphism_of(g):
            raise VerificationError(f"sigma for {s.target} is not an automorphism")

    diagram_cache: dict[tuple, Diagram] = {}
    lk_cache: dict[tuple, int] = {}
    cert_cache: dict[tuple, SplitCertificate] = {}

    def flipped(flips: tuple) -> Diagram:
        if flips not in diagram_cache:
            d = battery.base
            for key in flips:
                d = flip_crossing(d, key)
            diagram_cache[flips] = d
        return diagram_cache[flips]

    def lk(flips: tuple, pair: CyclePair) -> int:
        k = (flips, pair.key())
        if k not in lk_cache:
            lk_cache[k] = linking_number(flipped(flips), pair)
        return lk_cache[k]

    def cert(flips: tuple, pair: CyclePair) -> SplitCertificate:
        k = (flips, pair.key())
        if k not in cert_cache:
            cert_cache[k] = split_certify(flipped(flips), pair)
        return cert_cache[k]

    results = []
    for s in sorted(battery.specs, key=lambda s: s.target.key()):
        image = apply_permutation(s.sigma, s.target, g)
        failures = []
        value = lk(s.flips, image)
        if value % 2 == 0:
            failures.append(("target-not-linked", s.target, value))
        for other in lam:
            if other == s.target:
                continue
            other_image = apply_permutation(s.sigma, other, g)
            verdict = cert(s.flips, other_image)
            if not verdict.is_split:
                failures.append(("not-split", other, verdict.verdict))
        results.append(SpecResult(target=s.target, linking=value,
                                  failures=failures))
    return MinimalityReport(lam=lam, results=results)


# ---------------------------------------------------------------------------
# certificate lifting along a minor map


def lift_lambda(m: MinorMap, lam: LambdaSet, name: str | None = None) -> LambdaSet:
    pushed = tuple(psi_pair_map(m, p) for p in lam)
    if len(set(pushed)) != len(lam.pairs):
        raise VerificationError("pair pushforward failed to stay injective")
    return LambdaSet(name or f"{lam.name}@host", m.host, pushed)


def _lift_sigma(m: MinorMap, sigma: VertexPermutation) -> VertexPermutation:
    """Extend a minor automorphism to the host by fixing the chain vertices.

    Valid only when sigma fixes the endpoints of every subdivided edge,
    which holds for every battery shipped here; the lift is re-verified
    from scratch anyway.
    """
    mapping = dict(sigma.mapping)
    for v in m.host.vertices:
        if v not in mapping:
            mapping[v] = v
    for e in m.minor.edges:
        path = m.expansion[e]
        if len(path) > 2 and (sigma(e[0]) != e[0] or sigma(e[1]) != e[1]):
            raise VerificationError(
                f"automorphism moves subdivided edge {e}; cannot lift")
    return VertexPermutation(mapping)


def lift_battery(m: MinorMap, cert: LinkednessCertificate,
                 battery: MinimalityBattery,
                 require_strict: bool = False):
    """Push a verified pair-set certificate to the host graph and re-verify."""
    from .diagrams import extend_diagram

    host = m.host
    lam_host = lift_lambda(m, cert.lam)
    base_host = extend_diagram(cert.witness, m)
    if battery.base is not cert.witness and battery.base.to_json() != cert.witness.to_json():
        raise VerificationError("battery and certificate use different drawings")

    specs_host = tuple(WitnessSpec(target=psi_pair_map(m, s.target),
                                   sigma=_lift_sigma(m, s.sigma),
                                   flips=s.flips)
                       for s in battery.specs)
    battery_host = MinimalityBattery(lam=lam_host, base=base_host,
                                     specs=specs_host)

    cert_host = verify_linked(host, lam_host, base_host,
                              require_strict=require_strict)
    report_host = verify_minimal(host, lam_host, battery_host)
    if not report_host.passed:
        raise VerificationError(
            "lifted battery failed re-verification",
            {"failures": [r.failures for r in report_host.failing()]})
    return cert_host, battery_host


# ---------------------------------------------------------------------------
# splitting counting inequality


@dataclass
class SplittingCountReport:
    graph: Graph
    baseline: int
    rows: list  # (vertex, side_a, side_b, count)

    @property
    def passed(self) -> bool:
        return all(count > self.baseline for _, _, _, count in self.rows)


def splitting_count_check(g: Graph) -> SplittingCountReport:
    """Every nontrivial splitting at a vertex of degree >= 4 must strictly
    increase the number of disjoint cycle pairs."""
    baseline = len(enumerate_pairs(g))
    rows = []
    for v in sorted(g.vertices):
        if g.degree(v) < 4:
            continue
        for s in vertex_splittings(g, v):
            if s.trivial:
                continue
            count = len(enumerate_pairs(s.graph))
            rows.append((v, tuple(sorted(s.side_a)), tuple(sorted(s.side_b)),
                         count))
    return SplittingCountReport(graph=g, baseline=baseline, rows=rows)


# ---------------------------------------------------------------------------
# randomized invariance check


@dataclass
class MonteCarloReport:
    lam: LambdaSet
    trials: int
    master_seed: int
    histogram: dict
    parity_even: bool

    @property
    def all_one(self) -> bool:
        return self.histogram.get(1, 0) == self.trials


def monte_carlo_sigma(g: Graph, lam: LambdaSet, trials: int,
                      master_seed: int, jobs: int = 1) -> MonteCarloReport:
    """Sample random straight-line embeddings and tally the mod-2 sum of
    linking numbers over the pair set."""
    if lam.host != g:
        raise VerificationError("pair set is not hosted on this graph")
    table = parity_table(g, lam)

    seeds = [_trial_seed(master_seed, i) for i in range(trials)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        chunks = [seeds[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            partials = list(pool.map(_sigma_histogram,
                                     [(g, lam, chunk) for chunk in chunks]))
        histogram: dict[int, int] = {}
        for part in partials:
            for k, v in part.items():
                histogram[k] = histogram.get(k, 0) + v
    else:
        histogram = _sigma_histogram((g, lam, seeds))
    return MonteCarloReport(lam=lam, trials=trials, master_seed=master_seed,
                            histogram=histogram, parity_even=table.all_even)


def _trial_seed(master: int, i: int) -> int:
    import hashlib
    digest = hashlib.sha256(f"linkset-mc:{master}:{i}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _sigma_histogram(args) -> dict:
    g, lam, seeds = args
    histogram: dict[int, int] = {}
    for seed in seeds:
        emb = random_linear_embedding(g, seed)
        total = sum(linking_number_value(emb, p) for p in lam)
        sigma = total % 2
        histogram[sigma] = histogram.get(sigma, 0) + 1
    return histogram
