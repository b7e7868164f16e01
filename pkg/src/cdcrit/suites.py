"""Verification suites: pinned instance lists plus one independent check per instance.

A suite is a population (family specs, census graphs, seeded random graphs)
and a per-instance check. Every result carries the graph6 string and a
``source`` that ``replay`` accepts, so a failing instance can be re-run on
its own. Parameters come from the bundled manifest unless overridden.
"""

from __future__ import annotations

import configparser
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from itertools import product
from pathlib import Path
from typing import Callable, Iterator

from . import census as census_mod
from .canon import certificate
from .criticality import check_critical, critical_k, is_k_critical, verify_block_lemmas, verify_lemma1, verify_lemma2
from .decomposition import decompose, odd_components, verify_cut_bound
from .domination import gamma_c, gamma_c_bruteforce, is_cds
from .errors import CdcritError, ParameterError
from .families import FamilyInstance, gen_g1, generate, realizability_params, realizability_targets
from .graph import Graph, build, complement, induced, is_connected, mask_of, members
from .graph6 import decode, encode
from .matching import favaron_check, favaron_violation, is_factor_critical, max_matching, max_matching_bruteforce
from .structure import (
    find_bad_subgraph,
    is_b3_block,
    is_claw_free,
    is_diameter_critical,
    is_two_crit_complement_of_stars,
)

SCHEMA = "cdcrit/1"


@dataclass(frozen=True)
class InstanceResult:
    name: str
    passed: bool
    source: str  # "family:<spec>" or "graph6:<string>"
    graph6: str
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "source": self.source, "graph6": self.graph6, "witness": self.witness}


@dataclass
class SuiteReport:
    suite: str
    results: list[InstanceResult]
    wall_time: float
    params: dict = field(default_factory=dict)

    @property
    def instances(self) -> int:
        return len(self.results)

    @property
    def failures(self) -> list[InstanceResult]:
        return [r for r in self.results if not r.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, include_passes: bool = False) -> dict:
        shown = self.results if include_passes else self.failures
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "passed": self.passed,
            "instances": self.instances,
            "failed": len(self.failures),
            "wall_time": round(self.wall_time, 3),
            "params": self.params,
            "results": [r.to_json() for r in shown],
        }


# -- manifest ------------------------------------------------------------------


def load_manifest(path: str | Path | None = None) -> configparser.ConfigParser:
    cp = configparser.ConfigParser()
    cp.read_string(resources.files("cdcrit").joinpath("data/manifest.ini").read_text())
    if path is not None:
        text = Path(path).read_text()
        cp.read_string(text)
    return cp


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split()]


def _tuples(text: str) -> list[tuple[int, ...]]:
    return [tuple(int(v) for v in item.split(".")) for item in text.split()]


def _lines(text: str) -> list[str]:
    return [line.strip() for line in text.splitlines() if line.strip()]


def suite_params(suite: str, manifest: configparser.ConfigParser | None = None, **overrides) -> dict:
    cp = manifest or load_manifest()
    sec = f"suite.{suite}"
    raw = dict(cp[sec]) if cp.has_section(sec) else {}
    for key, val in overrides.items():
        if val is not None:
            raw[key.replace("-", "_")] = str(val)
    return raw


# -- sources -------------------------------------------------------------------


def _family_source(spec: str) -> str:
    return f"family:{spec}"


def _graph_source(g: Graph) -> str:
    return f"graph6:{encode(g)}"


def resolve(source: str) -> tuple[Graph, FamilyInstance | None]:
    kind, _, body = source.partition(":")
    if kind == "family":
        inst = generate(body)
        return inst.graph, inst
    if kind == "graph6":
        return decode(body), None
    raise ParameterError(f"unknown instance source {source!r}")


def random_graph(rng: random.Random, n: int, p: float, connected: bool) -> Graph:
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = build(n, edges)
        if not connected or is_connected(g):
            return g


def random_corpus(
    seed: int, count: int, n_min: int, n_max: int, connected: bool, p_min: float = 0.2, p_max: float = 0.8
) -> list[Graph]:
    """Seeded G(n, p) graphs; n and p are drawn uniformly per graph."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        out.append(random_graph(rng, n, rng.uniform(p_min, p_max), connected))
    return out


def _corpus_from(p: dict, connected: bool) -> list[Graph]:
    return random_corpus(
        int(p["seed"]),
        int(p["random_count"]),
        int(p["random_min_n"]),
        int(p["random_max_n"]),
        connected,
        float(p.get("p_min", 0.2)),
        float(p.get("p_max", 0.8)),
    )


def _critical_census(max_n: int, min_k: int = 1) -> Iterator[tuple[Graph, int]]:
    for g in census_mod.census(max_n):
        k = critical_k(g)
        if k is not None and k >= min_k:
            yield g, k


def corpus_specs(manifest: configparser.ConfigParser | None = None) -> list[str]:
    cp = manifest or load_manifest()
    return _lines(cp["corpus"]["specs"])


# -- per-instance checks -----------------------------------------------------------
#
# Each check takes (graph, family instance or None, params) and returns
# (passed, witness). They only call the public module operations.


def check_solver(g: Graph, inst: FamilyInstance | None, p: dict) -> tuple[bool, dict]:
    fast = gamma_c(g)
    slow = gamma_c_bruteforce(g)
    ok = fast.gamma_c == slow.gamma_c and is_cds(g, fast.witness) and len(fast.witness) == fast.gamma_c
    return ok, {"gamma_c": fast.gamma_c, "bruteforce": slow.gamma_c, "witness": list(fast.witness)}


def check_matching(g: Graph, inst: FamilyInstance | None, p: dict) -> tuple[bool, dict]:
    res = max_matching(g)
    used = set()
    valid = True
    for u, v in res.edges:
        if not g.has_edge(u, v) or u in used or v in used:
            valid = False
        used.update((u, v))
    brute = max_matching_bruteforce(g)
    witness: dict = {"matching": res.size, "bruteforce": brute, "favaron": {}}
    ok = valid and res.size == brute
    delta = g.min_degree() if g.n else 0
    for ell in (0, 1, 2):
        if g.n < ell or g.n % 2 != ell % 2 or delta < ell + 1:
            continue
        direct = is_factor_critical(g, ell).holds
        tutte = favaron_check(g, ell).holds
        witness["favaron"][str(ell)] = [direct, tutte]
        ok = ok and direct == tutte
    return ok, witness


_G1_TABLES: dict[tuple[int, int], dict] = {}


def _certify_g1(g: Graph, k: int, max_n: int) -> dict | None:
    """Match against every G1 parameterization (n_l >= 2) on at most max_n vertices."""
    key = (k, max_n)
    if key not in _G1_TABLES:
        table = {}
        for l in range(1, k - 2):
            for n_l in range(2, max_n + 1):
                for m in _star_multisets(max_n):
                    for r in range(0, max_n + 1):
                        # path c_0..c_{k-4}, the clique, then the block: head, S, S' and r more
                        if k - 3 + n_l + 1 + sum(m) + len(m) + r > max_n:
                            continue
                        h = gen_g1(k, l, n_l, m, r).graph
                        table.setdefault(certificate(h), {"family": "G1", "l": l, "n_l": n_l, "m": list(m), "r": r})
        _G1_TABLES[key] = table
    return _G1_TABLES[key].get(certificate(g))


def _star_multisets(max_n: int) -> list[tuple[int, ...]]:
    out = []

    def rec(prefix: list[int], low: int) -> None:
        if len(prefix) >= 2:
            out.append(tuple(prefix))
        for x in range(low, max_n):
            if sum(prefix) + len(prefix) + x + 1 <= max_n:
                rec(prefix + [x], x)

    rec([], 1)
    return out


def _certify_g2(g: Graph, k: int) -> dict | None:
    """A pendant path c_0 .. c_{k-4} attached by a bridge to the head of a checked block."""
    dec = decompose(g)
    big = [i for i, b in enumerate(dec.blocks) if b.bit_count() >= 3]
    if len(big) != 1:
        return None
    bi = big[0]
    block = dec.blocks[bi]
    cuts = dec.block_cuts[bi]
    if cuts.bit_count() != 1:
        return None
    head = members(cuts)[0]
    rest = (g.full & ~block) | (1 << head)
    path, _ = induced(g, rest)
    if path.n != k - 2 or path.m != path.n - 1 or max(path.degrees(), default=0) > 2:
        return None
    if g.degree(head) - (g.adj[head] & block).bit_count() != 1:
        return None
    b, old_to_new = induced(g, block)
    verdict = is_b3_block(b, old_to_new[head])
    if not verdict:
        return None
    return {"family": "G2", "head": head, "block": members(block)}


def check_k3_member(g: Graph, inst: FamilyInstance | None, p: dict) -> tuple[bool, dict]:
    k = int(p["k"])
    cert = _certify_g1(g, k, g.n)
    if cert is None:
        cert = _certify_g2(g, k)
    return cert is not None, cert or {"uncertified": True}


def check_generated_k3(g: Graph, inst: FamilyInstance | None, p: dict) -> tuple[bool, dict]:
    k = inst.claims.gamma_c
    value = gamma_c(g).gamma_c
    crit = is_k_critical(g, k)
    dec = decompose(g)
    ok = value == k and crit and dec.zeta == k - 3
    return ok, {"gamma_c": value, "critical": crit, "zeta": dec.zeta, "expected_zeta": k - 3}


def check_realizability(g: Graph, inst: FamilyInstance | None, p: dict) -> tuple[bool, dict]:
    k, zeta, zeta0 = p["target"]
    value = gamma_c(g).gamma_c
    crit = is_k_critical(g, k)
    dec = decompose(g)
    per_block = [c.bit_count() for c in dec.block_cuts]
    ok = value == k and crit and dec.zeta == zeta and zeta0 in per_block
    return ok, {"gamma_c": value, "critical": crit, "zeta": dec.zeta, "zeta0": dec.zeta0, "target": [k, zeta, zeta0]}


def _labels_to_mask(g: Graph, labels) -> int:
    return mask_of(g.vertices_labeled(*labels))


def check_matching_counterexample(g: Graph, inst: FamilyInstance | None, p: dict) -> tuple[bool, dict]:
    """A claimed k-critical (k >= 3) graph that must fail ell-factor-criticality."""
    ell = int(p["ell"])
    claims = inst.claims
    k = gamma_c(g).gamma_c
    crit = is_k_critical(g, k)
    delta = g.min_degree()
    direct = is_factor_critical(g, ell)
    witness: dict = {
        "gamma_c": k,
        "critical": crit,
        "n": g.n,
        "min_degree": delta,
        "factor_critical": direct.holds,
    }
    ok = crit and k >= 3 and not direct.holds
    if claims.favaron_witness is not None:
        s = _labels_to_mask(g, claims.favaron_witness)
        odd = favaron_violation(g, s, ell)
        witness["set"] = list(claims.favaron_witness)
        witness["odd_components"] = odd
        witness["claimed_odd_components"] = claims.favaron_odd
        ok = ok and odd is not None
    if ell == 2:
        witness["claw_free"] = is_claw_free(g).holds
        ok = ok and witness["claw_free"]
    if delta >= ell + 1:
        tutte = favaron_check(g, ell)
        witness["favaron_check"] = tutte.holds
        ok = ok and tutte.holds == direct.holds
    return ok, witness


def check_small_k_factor(g: Graph, inst: FamilyInstance | None, p: dict) -> tuple[bool, dict]:
    ell = int(p["ell"])
    verdict = is_factor_critical(g, ell)
    return verdict.holds, verdict.to_json()


def check_zeta_bound(g: Graph, inst: FamilyInstance | None, p: dict) -> tuple[bool, dict]:
    k = gamma_c(g).gamma_c
    dec = decompose(g)
    return verify_cut_bound(g, k), {"k": k, "zeta": dec.zeta, "zeta0": dec.zeta0}


def _lemma(verifier: Callable) -> Callable:
    def check(g: Graph, inst: FamilyInstance | None, p: dict) -> tuple[bool, dict]:
        report = check_critical(g)
        res = verifier(g, report)
        return res.holds, {"k": report.k, "checked": res.checked, **(res.detail or {})}

    return check


def check_bad_subgraph(g: Graph, inst: FamilyInstance | None, p: dict) -> tuple[bool, dict]:
    verdict = find_bad_subgraph(g, cap=int(p.get("bad_subgraph_cap", 16)))
    return not verdict.holds, verdict.witness


def check_chen(g: Graph, inst: FamilyInstance | None, p: dict) -> tuple[bool, dict]:
    k = critical_k(g)
    complete = g.m == g.n * (g.n - 1) // 2
    stars = is_two_crit_complement_of_stars(g).holds
    ok = (k == 1) == complete and (k == 2) == stars
    return ok, {"critical_k": k, "complete": complete, "complement_of_stars": stars}


def check_hanson_wang(g: Graph, inst: FamilyInstance | None, p: dict) -> tuple[bool, dict]:
    three = is_k_critical(g, 3)
    diam = is_diameter_critical(complement(g), 2).holds
    return three == diam, {"three_critical": three, "complement_diameter_critical": diam}


def verify_claims(inst: FamilyInstance) -> dict:
    """Re-derive every claim of a generated instance; returns the mismatches by key."""
    g = inst.graph
    c = inst.claims
    actual: dict = {}
    if c.gamma_c is not None:
        actual["gamma_c"] = gamma_c(g).gamma_c
    if c.zeta is not None or c.zeta0 is not None:
        dec = decompose(g)
        if c.zeta is not None:
            actual["zeta"] = dec.zeta
        if c.zeta0 is not None:
            actual["zeta0"] = dec.zeta0
    if c.critical is not None:
        actual["critical"] = critical_k(g) is not None
    if c.claw_free is not None:
        actual["claw_free"] = is_claw_free(g).holds
    if c.min_degree_at_least is not None:
        actual["min_degree_at_least"] = g.min_degree()
    for ell, _ in c.factor_critical:
        actual[f"factor_critical[{ell}]"] = is_factor_critical(g, ell).holds
    if c.favaron_witness is not None:
        s = _labels_to_mask(g, c.favaron_witness)
        ell = c.factor_critical[0][0] if c.factor_critical else 1
        odd = favaron_violation(g, s, ell)
        actual["favaron_witness"] = odd is not None
        if c.favaron_odd is not None:
            actual["favaron_odd"] = odd_components(g, s)
    claimed = {
        "gamma_c": c.gamma_c,
        "zeta": c.zeta,
        "zeta0": c.zeta0,
        "critical": c.critical,
        "claw_free": c.claw_free,
        "favaron_witness": True,
        "favaron_odd": c.favaron_odd,
        **{f"factor_critical[{ell}]": v for ell, v in c.factor_critical},
    }
    out = {}
    for key, val in actual.items():
        if key == "min_degree_at_least":
            if val < c.min_degree_at_least:
                out[key] = {"claimed": c.min_degree_at_least, "actual": val}
        elif val != claimed[key]:
            out[key] = {"claimed": claimed[key], "actual": val}
    return out


def check_claims(g: Graph, inst: FamilyInstance | None, p: dict) -> tuple[bool, dict]:
    mismatches = verify_claims(inst)
    return not mismatches, mismatches


def check_anan(g: Graph, inst: FamilyInstance | None, p: dict) -> tuple[bool, dict]:
    res = max_matching(g)
    return res.is_perfect, {"matching": res.size, "n": g.n}


# -- populations -----------------------------------------------------------------


@dataclass(frozen=True)
class Case:
    name: str
    source: str
    check: str  # key into CHECKS
    params: tuple[tuple[str, object], ...] = ()


CHECKS: dict[str, Callable[[Graph, FamilyInstance | None, dict], tuple[bool, dict]]] = {
    "solver": check_solver,
    "matching": check_matching,
    "k3-member": check_k3_member,
    "k3-generated": check_generated_k3,
    "realizability": check_realizability,
    "matching-counterexample": check_matching_counterexample,
    "small-k-factor": check_small_k_factor,
    "zeta-bound": check_zeta_bound,
    "lemma1": _lemma(verify_lemma1),
    "lemma2": _lemma(verify_lemma2),
    "block-lemmas": _lemma(verify_block_lemmas),
    "bad-subgraph": check_bad_subgraph,
    "chen": check_chen,
    "hanson-wang": check_hanson_wang,
    "anan": check_anan,
    "claims": check_claims,
}


def _census_cases(max_n: int, check: str, keep: Callable[[Graph], bool] | None = None, params=()) -> list[Case]:
    out = []
    for g in census_mod.census(max_n):
        if keep is None or keep(g):
            g6 = encode(g)
            out.append(Case(f"census:{g6}", f"graph6:{g6}", check, params))
    return out


def _critical_corpus(manifest, min_k: int) -> list[Case]:
    """Family instances from the shared corpus that verify as critical with k >= min_k."""
    out = []
    for spec in corpus_specs(manifest):
        inst = generate(spec)
        k = critical_k(inst.graph)
        if k is not None and k >= min_k:
            out.append(spec)
    return out


def _lemma_cases(manifest, p: dict, check: str, min_k: int, extra=()) -> list[Case]:
    cases = [Case(spec, _family_source(spec), check, extra) for spec in _critical_corpus(manifest, min_k)]
    for g, _k in _critical_census(int(p.get("census_max_n", 7)), min_k):
        g6 = encode(g)
        cases.append(Case(f"census:{g6}", f"graph6:{g6}", check, extra))
    return cases


def build_cases(suite: str, p: dict, manifest) -> list[Case]:
    if suite == "solver":
        cases = _census_cases(int(p["exhaustive_max_n"]), "solver")
        corpus = _corpus_from(p, True)
        cases += [Case(f"random:{i}", _graph_source(g), "solver") for i, g in enumerate(corpus)]
        return cases
    if suite == "matching-engine":
        corpus = _corpus_from(p, False)
        cases = [Case(f"random:{i}", _graph_source(g), "matching") for i, g in enumerate(corpus)]
        return cases + _census_cases(int(p["census_max_n"]), "matching")
    if suite == "theorem-k3":
        k = int(p["k"])
        cases = []
        for kk, n_l, m, r in product(_ints(p["grid_k"]), _ints(p["grid_n_l"]), _tuples(p["grid_m"]), _ints(p["grid_r"])):
            for l in range(1, kk - 2):
                spec = f"G1:k={kk},l={l},n_l={n_l},m={'.'.join(map(str, m))},r={r}"
                cases.append(Case(spec, _family_source(spec), "k3-generated"))
        for kk in _ints(p["g2_k"]):
            spec = f"G2:k={kk},allow_k4=1" if kk == 4 else f"G2:k={kk}"
            cases.append(Case(spec, _family_source(spec), "k3-generated"))
        for g in census_mod.census(int(p["max_n"])):
            if decompose(g).zeta == k - 3 and is_k_critical(g, k):
                g6 = encode(g)
                cases.append(Case(f"census:{g6}", f"graph6:{g6}", "k3-member", (("k", k),)))
        return cases
    if suite == "realizability":
        cases = []
        for target in realizability_targets(int(p["k_min"]), int(p["k_max"])):
            pp, q, r = realizability_params(*target)
            spec = f"F:p={pp},q={q},r={r}"
            name = "k={},zeta={},zeta0={}".format(*target)
            cases.append(Case(name, _family_source(spec), "realizability", (("target", target),)))
        return cases
    if suite in ("factor", "bicritical"):
        ell = 1 if suite == "factor" else 2
        cases = [
            Case(spec, _family_source(spec), "matching-counterexample", (("ell", ell),))
            for spec in _lines(p["counterexamples"])
        ]
        for g, k in _critical_census(int(p["census_max_n"])):
            if k > 2 or g.n % 2 != ell % 2 or g.min_degree() < ell + 1:
                continue
            if ell == 2 and not is_claw_free(g):
                continue
            g6 = encode(g)
            cases.append(Case(f"census:{g6}", f"graph6:{g6}", "small-k-factor", (("ell", ell),)))
        return cases
    if suite == "zeta0-bound":
        return [
            Case(f"census:{encode(g)}", _graph_source(g), "zeta-bound")
            for g, _k in _critical_census(int(p["max_n"]), 3)
        ]
    if suite == "lemma1":
        return _lemma_cases(manifest, p, "lemma1", 2)
    if suite == "lemma2":
        return _lemma_cases(manifest, p, "lemma2", 3)
    if suite == "block-lemmas":
        return _lemma_cases(manifest, p, "block-lemmas", 3)
    if suite == "bad-subgraph":
        cap = manifest["corpus"].get("bad_subgraph_cap", "16")
        return _lemma_cases(manifest, p, "bad-subgraph", 3, (("bad_subgraph_cap", cap),))
    if suite == "claims":
        specs = corpus_specs(manifest) + _lines(p.get("extra_specs", ""))
        return [Case(spec, _family_source(spec), "claims") for spec in specs]
    if suite == "chen":
        return _census_cases(int(p["max_n"]), "chen")
    if suite == "hanson-wang":
        return _census_cases(int(p["max_n"]), "hanson-wang")
    if suite == "anan-matching":
        cases = []
        for spec in _critical_corpus(manifest, 3):
            g = generate(spec).graph
            if critical_k(g) == 3 and g.n % 2 == 0 and g.min_degree() >= 2:
                cases.append(Case(spec, _family_source(spec), "anan"))
        for g, k in _critical_census(int(p["census_max_n"]), 3):
            if k == 3 and g.n % 2 == 0 and g.min_degree() >= 2:
                cases.append(Case(f"census:{encode(g)}", _graph_source(g), "anan"))
        return cases
    raise ParameterError(f"unknown suite {suite!r}")


SUITES = (
    "solver",
    "matching-engine",
    "theorem-k3",
    "realizability",
    "factor",
    "bicritical",
    "zeta0-bound",
    "lemma1",
    "lemma2",
    "block-lemmas",
    "bad-subgraph",
    "chen",
    "hanson-wang",
    "anan-matching",
    "claims",
)


def run_case(case: Case) -> InstanceResult:
    params = dict(case.params)
    try:
        g, inst = resolve(case.source)
    except CdcritError as exc:
        return InstanceResult(case.name, False, case.source, "", {"error": str(exc)})
    g6 = encode(g)
    try:
        passed, witness = CHECKS[case.check](g, inst, params)
    except CdcritError as exc:
        passed, witness = False, {"error": str(exc)}
    return InstanceResult(case.name, passed, case.source, g6, witness)


def run_suite(
    suite: str,
    manifest: configparser.ConfigParser | None = None,
    jobs: int = 1,
    only: str | None = None,
    **overrides,
) -> SuiteReport:
    """Run one suite. ``only`` restricts to the instance with that name or source."""
    if suite not in SUITES:
        raise ParameterError(f"unknown suite {suite!r}; known: {', '.join(SUITES)}")
    manifest = manifest or load_manifest()
    start = time.perf_counter()
    p = suite_params(suite, manifest, **overrides)
    cases = build_cases(suite, p, manifest)
    if only is not None:
        cases = [c for c in cases if only in (c.name, c.source)]
    if jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_case, cases, chunksize=max(1, len(cases) // (4 * jobs))))
    else:
        results = [run_case(c) for c in cases]
    return SuiteReport(suite, results, time.perf_counter() - start, p)


def replay(suite: str, source: str, manifest: configparser.ConfigParser | None = None, **overrides) -> InstanceResult:
    """Re-run the check a suite applies to the instance with this source."""
    report = run_suite(suite, manifest, only=source, **overrides)
    if not report.results:
        raise ParameterError(f"suite {suite!r} has no instance {source!r}")
    return report.results[0]
