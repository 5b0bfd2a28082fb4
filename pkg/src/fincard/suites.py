"""Verification suites: case planning, execution and report records.

Every suite is planned up front into a list of JSON-able cases (seeded, so
the plan depends only on the configuration).  Cases are evaluated by pure
check functions, possibly across worker processes; results keep plan order,
so reports do not depend on the worker count.  A failing case is recorded
with everything needed to re-run it (``replay_failure``).
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import encodings, fraenkel, ramsey
from .errors import FincardError, PreconditionError
from .ground import Family, cell_size, cell_tuples
from .grid import OperatorContext, big_F, big_G
from .phi import MixedFamily, phi_decode, phi_encode
from .schedule import admissible_shapes, make_schedule
from .serialize import dumps

SUITES = ("encodings", "fact-311", "fraenkel", "nilpotency", "phi-roundtrip", "ramsey")
MUTATIONS = ("g-drops-member",)

# families per cell are enumerated exhaustively up to this many cell tuples
EXHAUSTIVE_CELL = 10
# the explicit phi sweep enumerates all families on at most this many tuples
EXHAUSTIVE_PHI_TUPLES = 12
PROFILE_POOL = 3

# (k, l, ground) catalogue for the nilpotency sweep
NILPOTENCY_CONTEXTS = (
    ((1,), (2,), 4),
    ((2,), (3,), 5),
    ((1, 1), (1, 2), 3),
    ((2,), (3,), 6),
)


class Refusal(FincardError):
    """A configuration was refused before running; ``estimate`` is the computed cost."""

    def __init__(self, message, estimate=None, required=None):
        super().__init__(message)
        self.estimate = estimate
        self.required = required


@dataclass
class CampaignConfig:
    ground_size: int = 8
    arity: int = 1
    max_cell: int = 1
    schedule: str = "compact"
    suites: tuple = SUITES
    seed: int = 0
    samples: int = 10_000
    threads: int = 1
    force: bool = False
    max_cost: int = 10**8
    mutation: str | None = None
    timings: bool = True


@dataclass
class ReportRecord:
    suite: str
    params: dict
    cases: int
    failures: list = field(default_factory=list)
    millis: int | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, ensure_ascii=False, separators=(",", ":"))


# -- operators (with the optional planted fault) -----------------------------

def _G(X: Family, ctx: OperatorContext, mutation: str | None) -> Family:
    out = big_G(X, ctx)
    if mutation == "g-drops-member" and out:
        out = out - Family(out.ground, out.shape, frozenset({next(iter(out))}))
    return out


def _H(X, ctx, mutation):
    return _G(X, ctx, mutation) - X


def _ctx(case, l=None) -> OperatorContext:
    return OperatorContext(case["ground"], tuple(case["k"]), tuple(l or case["l"]))


# -- checks ------------------------------------------------------------------

def check_fact(case, mutation=None):
    """Items (i)-(v), (vii), (viii) for one family and one superset of it."""
    ctx = _ctx(case)
    g, k = ctx.ground, ctx.k
    X = Family.from_bits(g, k, case["x"])
    Y = Family.from_bits(g, k, case["x"] | case["y"])
    FX, GX = big_F(X, ctx), _G(X, ctx, mutation)
    if not big_F(X, ctx) <= big_F(Y, ctx):
        return "(i) F not monotone"
    if not X <= GX:
        return "(ii) X not contained in G(X)"
    if not GX <= _G(Y, ctx, mutation):
        return "(iii) G not monotone"
    if _G(GX, ctx, mutation) != GX:
        return "(iv) G not idempotent"
    if big_F(GX, ctx) != FX:
        return "(v) F(G(X)) != F(X)"
    H = [X]
    for _ in range(sum(k) + 2):
        H.append(_H(H[-1], ctx, mutation))
    for m in range(len(H) - 1):
        if H[m] != _G(H[m], ctx, mutation) - H[m + 1]:
            return f"(vii) H-iteration identity fails at m={m}"
    for lp in case.get("l_wider", []):
        wide = _ctx(case, lp)
        Gw = _G(X, wide, mutation)
        if not GX <= Gw:
            return f"(viii) G_l(X) not contained in G_l'(X) for l'={tuple(lp)}"
        if Gw == X and GX != X:
            return f"(viii) G_l'-fixed but not G_l-fixed for l'={tuple(lp)}"
    return None


def check_fact_injective(case, mutation=None):
    """Item (vi): F is injective on G-fixed families of one context."""
    ctx = _ctx(case)
    seen = {}
    for bits in case["families"]:
        W = _G(Family.from_bits(ctx.ground, ctx.k, bits), ctx, mutation)
        if _G(W, ctx, mutation) != W:
            continue
        key = big_F(W, ctx).bits
        if seen.setdefault(key, W.bits) != W.bits:
            return f"(vi) G-fixed families {seen[key]} and {W.bits} share an F-image"
    return None


def check_nilpotency(case, mutation=None):
    ctx = _ctx(case)
    X = Family.from_bits(ctx.ground, ctx.k, case["x"])
    bound = sum(ctx.k) + 1
    for step in range(bound + 1):
        if not X:
            return None
        X = _H(X, ctx, mutation)
    if X:
        return f"H^{bound}(X) is non-empty ({len(X)} tuples)"
    return None


def _mixed_from_case(case) -> MixedFamily:
    return MixedFamily.from_tuples(case["n"], case["ground"], case["tuples"])


def _digest(C, case) -> str:
    text = dumps(C, ground=case["ground"], K=case["K"], schedule=case["schedule"])
    return hashlib.sha256(text.encode()).hexdigest()


def _phi_tuples(n, K, atoms):
    subsets = [frozenset(c) for r in range(K + 1) for c in itertools.combinations(range(atoms), r)]
    return list(itertools.product(subsets, repeat=n))


def check_phi_explicit(case, mutation=None):
    sched = make_schedule(case["schedule"], case["n"], case["K"])
    tuples = _phi_tuples(case["n"], case["K"], case["atoms"])
    X = MixedFamily.from_tuples(case["n"], case["ground"], [t for i, t in enumerate(tuples) if case["bits"] >> i & 1])
    C = phi_encode(X, case["ground"], sched)
    try:
        back = phi_decode(C, case["ground"], sched, case["n"], case["K"])
    except FincardError as exc:
        return f"decode raised {exc}", _digest(C, case)
    if back != X:
        return "decode(encode(X)) != X", _digest(C, case)
    return None, _digest(C, case)


def check_phi_profile(case, mutation=None):
    sched = make_schedule(case["schedule"], case["n"], case["K"])
    X = _mixed_from_case(case).to_orbits(case["pool"])
    C = phi_encode(X, case["ground"], sched, pool=case["pool"])
    try:
        back = phi_decode(C, case["ground"], sched, case["n"], case["K"], pool=case["pool"])
    except FincardError as exc:
        return f"decode raised {exc}"
    if back != X:
        return "decode(encode(X)) != X"
    bad = [m for m in C.members if sorted(s for _, s in m) != sorted({s for _, s in m}) or len(m) != case["n"]]
    if bad:
        return "coded member without n distinct sizes"
    return None


def check_phi_pair(case, mutation=None):
    da = check_phi_explicit(case["a"], mutation)[1]
    db = check_phi_explicit(case["b"], mutation)[1]
    if da == db:
        return f"families {case['a']['bits']} and {case['b']['bits']} have the same code"
    return None


def check_seqi_injective(case, mutation=None):
    seen = {}
    for length in range(case["max_len"] + 1):
        for t in itertools.permutations(range(case["ground"]), length):
            img = encodings.seqi_to_finfin(t)
            if seen.setdefault(img, t) != t:
                return f"{seen[img]} and {t} share an image"
            sizes = sorted(len(s) for s in img)
            if sizes != list(range(length + 1)):
                return f"image of {t} is not a chain of sizes 0..{length}"
    return None


def check_pair(case, mutation=None):
    N = case["N"]
    seen = set()
    for m in range(N + 1):
        for n in range(N + 1):
            d = encodings.pair(m, n)
            if n > d:
                return f"n > pair(m, n) at {(m, n)}"
            if encodings.unpair(d) != (m, n):
                return f"unpair(pair{(m, n)}) != {(m, n)}"
            seen.add(d)
    # the diagonal pairing fills an initial segment: every d below the first
    # unfilled diagonal is hit exactly once
    top = (N + 1) * (N + 2) // 2
    if not set(range(top)) <= seen:
        return "pair is not onto an initial segment"
    return None


def check_seqi_split(case, mutation=None):
    g, limit = case["ground"], case["limit"]
    for length in range(min(g, 5) + 1):
        for t in itertools.permutations(range(g), length):
            m, prefix = encodings.seqi_split(t)
            if len(prefix) > len(t) or encodings.pair(m, len(prefix)) != len(t):
                return f"bad split of {t}"
    for d in range(limit + 1):
        m, n = encodings.unpair(d)
        for s in itertools.permutations(range(g), n):
            pre = encodings.seqi_split_preimage(m, s, g)
            if pre is None or encodings.seqi_split(pre) != (m, s):
                return f"no preimage for {(m, s)}"
    return None


def check_pow_exhaustive(case, mutation=None):
    n, atoms = case["n"], case["atoms"]
    dom = encodings.powerset(n)
    images = {}
    for values in itertools.permutations(range(atoms), len(dom)):
        t = dict(zip(dom, values))
        F = encodings.pow_inject(t, n)
        if images.setdefault(F, values) != values:
            return f"assignments {images[F]} and {values} collide"
        if encodings.pow_inject_inverse(F, n) != t:
            return f"inverse fails on {values}"
    return None


def check_pow_single(case, mutation=None):
    n = case["n"]
    t = dict(zip(encodings.powerset(n), case["values"]))
    F = encodings.pow_inject(t, n)
    if encodings.pow_inject_inverse(F, n) != t:
        return "inverse fails"
    return None


def check_ramsey_pigeonhole(case, mutation=None):
    c, r = case["c"], case["r"]
    got = ramsey.ramsey_exact((1,), c, r, c * (r - 1) + 2)
    return None if got == c * (r - 1) + 1 else f"ramsey_exact((1,), {c}, {r}) = {got}"


def check_ramsey_r33(case, mutation=None):
    got = ramsey.ramsey_exact((2,), 2, 3, 7)
    if got != 6:
        return f"ramsey_exact((2,), 2, 3) = {got}"
    if ramsey.count_escapes_bruteforce(5, (2,), 2, 3) == 0:
        return "brute force finds no escaping colouring of K5"
    if ramsey.count_escapes_bruteforce(6, (2,), 2, 3) != 0:
        return "brute force finds an escaping colouring of K6"
    return None


def check_ramsey_monotone(case, mutation=None):
    vals = {(c, r): ramsey.ramsey_exact(tuple(case["j"]), c, r, case["limit"]) for c in range(1, 4) for r in range(max(case["j"]), 4)}
    for (c, r), v in vals.items():
        for dc, dr in ((1, 0), (0, 1)):
            w = vals.get((c + dc, r + dr))
            if isinstance(v, int) and isinstance(w, int) and w < v:
                return f"not monotone at c={c}, r={r}"
    return None


def check_ramsey_witness(case, mutation=None):
    col = ramsey.GridColoring.from_sequence(case["S"], case["j"], case["c"], case["colors"])
    found = ramsey.find_monochromatic_grid(col, case["r"])
    if found is None:
        if case.get("must_exist"):
            return "no witness although the sets are large enough"
        return None
    T, d = found
    if any(col.color[p] != d for p in ramsey.grid_points(T, col.j)):
        return f"witness {T} is not monochromatic"
    return None


def check_parity_orbits(case, mutation=None):
    C = range(case["C"])
    u = tuple(range(case["u_len"]))
    pair = fraenkel.parity_orbits(u, C)
    every = set(itertools.permutations(C, len(u)))
    if pair.E | pair.O != every:
        return "E and O do not cover the injective tuples"
    expect_partition = len(u) >= case["C"] - 1
    if pair.is_partition != expect_partition:
        return f"partition property is {pair.is_partition}, expected {expect_partition}"
    for pi in fraenkel.permutations_of(C):
        image = frozenset(fraenkel.act(pi, v) for v in pair.E)
        want = pair.E if fraenkel.parity(pi, C) is fraenkel.Parity.EVEN else pair.O
        if image != want:
            return f"{pi.cycles()} does not map E as its parity requires"
    return None


def _inversion_parity(image):
    inv = sum(1 for i, j in itertools.combinations(range(len(image)), 2) if image[i] > image[j])
    return inv % 2


def check_parity_exclusive(case, mutation=None):
    C = list(range(case["C"]))
    for image in itertools.permutations(C):
        pi = fraenkel.PermutationOfAtoms.from_mapping(dict(zip(C, image)))
        if fraenkel.parity(pi, C).value != _inversion_parity(image):
            return f"cycle and inversion parity disagree on {image}"
    return None


def check_pigeonhole(case, mutation=None):
    n, atoms = case["n"], case["atoms"]
    C = range(2**n + 1)
    for t in fraenkel.all_tuples(atoms, n):
        a, b = fraenkel.pigeonhole_pair(t, C)
        if a == b or not fraenkel.equivalent(a, b, t):
            return f"bad pair {(a, b)} for {t}"
        if not fraenkel.fixes(fraenkel.PermutationOfAtoms.transposition(a, b), t):
            return f"transposition ({a} {b}) moves {t}"
    return None


def check_chain(case, mutation=None):
    free, strict = fraenkel.longest_chains(case["ground"], case["n"], case["B"])
    bound = fraenkel.chain_length_bound(len(case["B"]), case["n"])
    if not free < bound:
        return f"chain of length {free} reaches the bound {bound}"
    return None


def check_counting(case, mutation=None):
    g, n, B = case["ground"], case["n"], case["B"]
    bound = fraenkel.counting_bound(len(B), n)
    for u in fraenkel.all_tuples(g, n):
        if fraenkel.same_partition_count(u, g, B) > bound:
            return f"more than {bound} tuples share the partition of {u}"
    return None


def _claim_function(case):
    g, B = case["ground"], frozenset(case["B"])
    free = frozenset(range(g)) - B
    rule, inner = case["rule"], case["inner"]
    b_map = dict(case["b_map"])

    def f(s):
        s = s[0]
        head = frozenset(b_map.get(a, a) for a in s & B) if rule != "add" else s & B
        tail = {
            "keep": s & free,
            "flip": free - s,
            "empty": frozenset(),
            "full": free,
            "add": (s & free) | {inner},
        }[rule]
        return (head | tail,)

    return {t: f(t) for t in fraenkel.all_tuples(g, 1)}


def check_claim(case, mutation=None):
    g, B = case["ground"], frozenset(case["B"])
    pool = [a for a in range(g) if a not in B]
    f = _claim_function(case)
    supported = fraenkel.support_check(f, B, g)
    for u, fu in f.items():
        for a, b in itertools.combinations(pool, 2):
            if not fraenkel.equivalent(a, b, u):
                continue
            tau = fraenkel.PermutationOfAtoms.transposition(a, b)
            if not fraenkel.fixes(tau, u):
                return f"({a} {b}) moves {u} although a ~ b"
            if not fraenkel.fixes(tau, fu) and supported:
                return f"supported f moves under ({a} {b}) at {u}"
        if supported and not fraenkel.preorder_leq(fu, u, pool):
            return f"supported f has f(u) not below u at {u}"
    return None


CHECKS = {
    "fact": check_fact,
    "fact-vi": check_fact_injective,
    "nilpotency": check_nilpotency,
    "phi-explicit": lambda c, m=None: check_phi_explicit(c, m)[0],
    "phi-profile": check_phi_profile,
    "phi-pair": check_phi_pair,
    "seqi-injective": check_seqi_injective,
    "pair": check_pair,
    "seqi-split": check_seqi_split,
    "pow-exhaustive": check_pow_exhaustive,
    "pow-single": check_pow_single,
    "ramsey-pigeonhole": check_ramsey_pigeonhole,
    "ramsey-r33": check_ramsey_r33,
    "ramsey-monotone": check_ramsey_monotone,
    "ramsey-witness": check_ramsey_witness,
    "parity-orbits": check_parity_orbits,
    "parity-exclusive": check_parity_exclusive,
    "pigeonhole": check_pigeonhole,
    "chain": check_chain,
    "counting": check_counting,
    "claim": check_claim,
}


# -- planning ------------------------------------------------------------------

def _rng(config, suite):
    return random.Random(f"{config.seed}:{suite}")


def _fact_contexts(n):
    for k in itertools.product(range(3), repeat=n):
        for l in itertools.product(*(range(ki, 4) for ki in k)):
            for ground in sorted({max(sum(l), 1), sum(l) + 1}):
                yield k, l, ground


def plan_fact(config):
    rng = _rng(config, "fact-311")
    cases, cost = [], 0
    n = config.arity
    for k, l, g in _fact_contexts(n):
        size = cell_size(g, k)
        if 2**size <= max(2**EXHAUSTIVE_CELL, config.samples):
            families = list(range(2**size))
        else:
            drawn = set()
            while len(drawn) < config.samples:
                drawn.add(rng.getrandbits(size))
            families = sorted(drawn)
        wider = [
            list(lp)
            for lp in itertools.product(*(range(li, 4) for li in l))
            if lp != l and sum(lp) <= g
        ]
        for bits in families:
            extra = rng.getrandbits(size) if size else 0
            cases.append({"check": "fact", "ground": g, "k": list(k), "l": list(l), "x": bits, "y": extra, "l_wider": wider})
        cases.append({"check": "fact-vi", "ground": g, "k": list(k), "l": list(l), "families": families})
        cost += 2 * len(families) * size * max(1, cell_size(g, l))
    params = {"arity": n, "k_max": 2, "l_max": 3, "exhaustive_cell": EXHAUSTIVE_CELL, "samples": config.samples}
    return params, cases, cost


def plan_nilpotency(config):
    cases, cost = [], 0
    for k, l, g in NILPOTENCY_CONTEXTS:
        size = cell_size(g, k)
        for bits in range(2**size):
            cases.append({"check": "nilpotency", "ground": g, "k": list(k), "l": list(l), "x": bits})
        cost += 2**size * size * cell_size(g, l)
    params = {"contexts": [[list(k), list(l), g] for k, l, g in NILPOTENCY_CONTEXTS]}
    return params, cases, cost


def plan_phi(config):
    n, K, g = config.arity, config.max_cell, config.ground_size
    sched = make_schedule(config.schedule, n, K)
    try:
        from .phi import check_ground_for

        check_ground_for(sched, g)
    except PreconditionError as exc:
        raise Refusal(str(exc), required=exc.required) from None
    rng = _rng(config, "phi-roundtrip")
    base = {"n": n, "K": K, "ground": g, "schedule": config.schedule}
    cases = []
    explicit_cost = max(cell_size(g, sched.s(k, m)) for k in admissible_shapes(n, K) for m in range(sum(k) + 1))
    atoms = max((a for a in range(0, g + 1) if len(_phi_tuples(n, K, a)) <= EXHAUSTIVE_PHI_TUPLES), default=0)
    engine = []
    if explicit_cost <= 50_000 and atoms > 0:
        engine.append("explicit")
        count = len(_phi_tuples(n, K, atoms))
        for bits in range(2**count):
            cases.append(dict(base, check="phi-explicit", atoms=atoms, bits=bits))
    pool = min(PROFILE_POOL, g)
    engine.append("profile")
    pool_tuples = _phi_tuples(n, K, pool)
    for _ in range(max(1, config.samples // 20)):
        chosen = [[sorted(p) for p in t] for t in pool_tuples if rng.random() < 0.4]
        cases.append(dict(base, check="phi-profile", pool=pool, tuples=chosen))
    params = dict(base, engines=engine, explicit_atoms=atoms if "explicit" in engine else None, pool=pool)
    cost = len(cases) * (explicit_cost if "explicit" in engine else 1000)
    return params, cases, cost


def plan_encodings(config):
    rng = _rng(config, "encodings")
    cases = [
        {"check": "seqi-injective", "ground": 5, "max_len": 4},
        {"check": "pair", "N": 200},
        {"check": "seqi-split", "ground": 10, "limit": 8},
    ]
    cases += [{"check": "pow-exhaustive", "n": n, "atoms": 6} for n in range(3)]
    for _ in range(config.samples):
        cases.append({"check": "pow-single", "n": 3, "values": rng.sample(range(20), 8)})
    params = {"pow_exhaustive_atoms": 6, "pow_random": config.samples, "pow_random_atoms": 20}
    return params, cases, len(cases) * 100


def plan_ramsey(config):
    rng = _rng(config, "ramsey")
    cases = [{"check": "ramsey-pigeonhole", "c": c, "r": r} for c in range(1, 5) for r in range(1, 5)]
    cases.append({"check": "ramsey-r33"})
    cases.append({"check": "ramsey-monotone", "j": [1], "limit": 12})
    for _ in range(max(1, config.samples // 100)):
        size = rng.randint(3, 6)
        S = [list(range(size))]
        colors = [rng.randint(1, 2) for _ in range(math.comb(size, 2))]
        cases.append({"check": "ramsey-witness", "S": S, "j": [2], "c": 2, "r": 3, "colors": colors, "must_exist": size >= 6})
    return {"pigeonhole_max": 4, "witness_samples": max(1, config.samples // 100)}, cases, 10**6


def plan_fraenkel(config):
    rng = _rng(config, "fraenkel")
    cases = [{"check": "parity-orbits", "C": m, "u_len": u} for m in range(2, 6) for u in range(1, m + 1)]
    cases += [{"check": "parity-exclusive", "C": m} for m in range(1, 6)]
    cases += [{"check": "pigeonhole", "n": n, "atoms": 2**n + 2} for n in (1, 2)]
    cases += [{"check": "chain", "ground": g, "n": n, "B": []} for n in (1, 2) for g in range(1, 5)]
    cases += [{"check": "counting", "ground": g, "n": 1, "B": B} for g in range(1, 5) for B in ([], [0])]
    for g in (4, 5):
        for rule in ("keep", "flip", "empty", "full", "add"):
            B = sorted(rng.sample(range(g), rng.randint(0, 2)))
            free = [a for a in range(g) if a not in B]
            perm = rng.sample(B, len(B))
            cases.append(
                {"check": "claim", "ground": g, "B": B, "rule": rule, "inner": rng.choice(free), "b_map": [[a, b] for a, b in zip(B, perm)]}
            )
    return {"parity_C_max": 5, "chain_ground_max": 4}, cases, 10**6


PLANNERS = {
    "encodings": plan_encodings,
    "fact-311": plan_fact,
    "fraenkel": plan_fraenkel,
    "nilpotency": plan_nilpotency,
    "phi-roundtrip": plan_phi,
    "ramsey": plan_ramsey,
}


# -- execution -----------------------------------------------------------------

def _run_chunk(args):
    cases, mutation = args
    out = []
    for case in cases:
        fn = check_phi_explicit if case["check"] == "phi-explicit" else CHECKS[case["check"]]
        res = fn(case, mutation)
        out.append(res if isinstance(res, tuple) else (res, None))
    return out


def _evaluate(cases, mutation, threads):
    if threads <= 1 or len(cases) < 2:
        return _run_chunk((cases, mutation))
    size = max(1, math.ceil(len(cases) / (threads * 4)))
    chunks = [(cases[i:i + size], mutation) for i in range(0, len(cases), size)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(_run_chunk, chunks))
    return [r for chunk in results for r in chunk]


def plan_suite(config, suite):
    params, cases, cost = PLANNERS[suite](config)
    params = dict(params, seed=config.seed, estimated_cost=cost)
    if cost > config.max_cost and not config.force:
        raise Refusal(f"suite {suite}: estimated cost {cost} exceeds {config.max_cost}; pass --force", estimate=cost)
    return params, cases


def run_one(config, suite) -> ReportRecord:
    start = time.perf_counter()
    params, cases = plan_suite(config, suite)
    results = _evaluate(cases, config.mutation, config.threads)
    failures = []
    digests = {}
    for case, (message, digest) in zip(cases, results):
        if message is not None:
            failures.append(_failure(suite, case, config.mutation, message))
        if digest is not None:
            if digest in digests:
                pair_case = {"check": "phi-pair", "a": digests[digest], "b": case}
                failures.append(_failure(suite, pair_case, config.mutation, "two families share a code"))
            else:
                digests[digest] = case
    millis = round((time.perf_counter() - start) * 1000) if config.timings else None
    return ReportRecord(suite, params, len(cases), failures, millis)


def _failure(suite, case, mutation, message):
    return {"suite": suite, "check": case["check"], "case": case, "mutation": mutation, "message": message}


def run_suite(config: CampaignConfig) -> list:
    """Run every enabled suite; records come back sorted by suite name."""
    unknown = set(config.suites) - set(SUITES)
    if unknown:
        raise Refusal(f"unknown suites {sorted(unknown)}")
    if config.mutation is not None and config.mutation not in MUTATIONS:
        raise Refusal(f"unknown mutation {config.mutation!r}")
    for suite in sorted(set(config.suites)):
        plan_suite(config, suite)  # refuse before running anything
    return [run_one(config, suite) for suite in sorted(set(config.suites))]


def replay_failure(failure: dict) -> dict:
    """Re-run one recorded counterexample; the verdict mirrors the original record."""
    case = failure["case"]
    fn = CHECKS[case["check"]]
    message = fn(case, failure.get("mutation"))
    return {
        "suite": failure.get("suite"),
        "check": case["check"],
        "case": case,
        "mutation": failure.get("mutation"),
        "verdict": "fail" if message is not None else "pass",
        "message": message,
    }
