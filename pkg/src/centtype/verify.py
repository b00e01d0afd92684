"""Named verification suites: randomized property checks and
exhaustive oracle comparisons that double as the acceptance evidence.

Each suite derives every instance from a single master seed, so runs
are reproducible and the report is byte-stable.  Failures carry the
offending inputs verbatim.  Suites that consist of independent
instances can fan out over a process pool (--jobs); aggregation is
order-independent.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .centkit import (
    cent_conjugate_bruteforce,
    cent_dim,
    cent_span_equal,
    centralizers_conjugate,
    jordan_chevalley,
    witness_polynomials,
)
from .construct import (
    equivalent_pair,
    primary_matrix,
    random_invertible,
    random_irreducible,
    random_matrix,
    random_partition,
)
from .errors import TooLarge, UnknownSuite
from .exactfield import extension_field, make_field, prime_field, rationals
from .exactmat import (
    block_diag,
    companion,
    frobenius_form,
    mat_eval_poly,
    matrix_embed,
    minpoly,
)
from .permcent import (
    CycleLayers,
    Permutation,
    _all_images,
    _centralizer_images,
    _decide_an,
    _decide_sn,
)
from .serialize import matrix_to_json
from .typealg import (
    Partition,
    cent_dim_formula,
    cent_dim_weight,
    cycle_type,
    dominance_leq,
    green_type,
    partitions_of,
)
from .upoly import Poly, squarefree_part


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    seed: int
    scale: int
    instances_checked: int
    failures: tuple
    elapsed: float

    @property
    def passed(self):
        return not self.failures


def _map_tasks(worker, tasks, jobs):
    if jobs and jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, len(tasks) // (4 * jobs))
            return list(pool.map(worker, tasks, chunksize=chunk))
    return [worker(t) for t in tasks]


def _collect(results):
    failures = []
    for r in results:
        if r:
            failures.extend(r if isinstance(r, list) else [r])
    failures.sort(key=lambda f: f.get("instance", 0))
    return failures


_FIELD_TAGS = ("Q", "F2", "F3", "F5")


# -- centdim --


def _centdim_worker(task):
    idx, tag, sub = task
    try:
        rng = random.Random(sub)
        ctx = make_field(tag)
        n = rng.randint(1, 5 if tag == "Q" else 6)
        m = random_matrix(ctx, n, rng)
        got = cent_dim(m)
        want = cent_dim_formula(cycle_type(m, seed=rng.getrandbits(32)))
        if got != want:
            return {
                "instance": idx,
                "field": tag,
                "matrix": matrix_to_json(m),
                "formula": want,
                "commutant": got,
            }
    except Exception as exc:  # a crash is a failure, not an excuse
        return {"instance": idx, "field": tag, "error": repr(exc)}
    return None


def _suite_centdim(seed, scale, jobs):
    scale = 200 if scale is None else scale
    master = random.Random(seed)
    tasks = [
        (i * len(_FIELD_TAGS) + k, tag, master.getrandbits(64))
        for i in range(scale)
        for k, tag in enumerate(_FIELD_TAGS)
    ]
    return scale, len(tasks), _collect(_map_tasks(_centdim_worker, tasks, jobs))


# -- nilpclass --


def _nilpclass_worker(task):
    idx, tag, sub = task
    try:
        rng = random.Random(sub)
        ctx = make_field(tag)
        d = rng.randint(1, 2 if tag == "Q" else 3)
        lam = random_partition(rng.randint(1, 4 if tag != "Q" else 3), rng)
        f = random_irreducible(ctx, d, rng)
        m = primary_matrix(f, lam, rng)
        nil = mat_eval_poly(f, m)
        ct = cycle_type(nil, seed=rng.getrandbits(32))
        want = ((Poly.x(ctx), lam.replicate(d)),)
        if ct.entries != want or not (nil**m.nrows).is_zero_matrix():
            return {
                "instance": idx,
                "field": tag,
                "f": str(f),
                "partition": list(lam.parts),
                "got": str(ct),
            }
    except Exception as exc:
        return {"instance": idx, "field": tag, "error": repr(exc)}
    return None


def _suite_nilpclass(seed, scale, jobs):
    scale = 100 if scale is None else scale
    master = random.Random(seed)
    tasks = [
        (i, _FIELD_TAGS[master.randrange(len(_FIELD_TAGS))], master.getrandbits(64))
        for i in range(scale)
    ]
    return scale, len(tasks), _collect(_map_tasks(_nilpclass_worker, tasks, jobs))


# -- dominance --


def _dominance_worker(task):
    idx, tag, sub = task
    try:
        rng = random.Random(sub)
        ctx = make_field(tag)
        d = rng.randint(1, 2 if tag == "Q" else 3)
        lam = random_partition(rng.randint(1, 3 if tag == "Q" else 4), rng)
        f = random_irreducible(ctx, d, rng)
        x = primary_matrix(f, lam, rng)
        hdeg = rng.randint(0, 4)
        hcoeffs = [
            ctx.elem(rng.randrange(ctx.order()))
            if ctx.is_finite()
            else ctx.elem(Fraction(rng.randint(-4, 4)))
            for _ in range(hdeg + 1)
        ]
        if rng.random() < 0.1:
            hcoeffs = []
        h = Poly(ctx, hcoeffs)
        gt = green_type(mat_eval_poly(h, x), seed=rng.getrandbits(32))
        ok = len(gt.entries) == 1
        if ok:
            e, mu = gt.entries[0]
            ok = (
                d % e == 0
                and e * mu.size == d * lam.size
                and dominance_leq(mu.replicate(e), lam.replicate(d))
            )
        if not ok:
            return {
                "instance": idx,
                "field": tag,
                "f": str(f),
                "partition": list(lam.parts),
                "h": str(h),
                "got": str(gt),
            }
    except Exception as exc:
        return {"instance": idx, "field": tag, "error": repr(exc)}
    return None


def _suite_dominance(seed, scale, jobs):
    scale = 200 if scale is None else scale
    master = random.Random(seed)
    tasks = [
        (i, _FIELD_TAGS[master.randrange(len(_FIELD_TAGS))], master.getrandbits(64))
        for i in range(scale)
    ]
    return scale, len(tasks), _collect(_map_tasks(_dominance_worker, tasks, jobs))


# -- main-theorem-f2 --


def _monics(ctx, d):
    for tail in itertools.product(range(ctx.p), repeat=d):
        yield Poly(ctx, [ctx.elem(c) for c in tail] + [ctx.one])


def _invariant_chains(ctx, n):
    """All chains d_1 | d_2 | ... of monic nonunits with degree sum n."""

    def rec(prev, rem):
        if rem == 0:
            yield ()
            return
        for d in range(1, rem + 1):
            for m in _monics(ctx, d):
                if prev is not None and not (m % prev).is_zero():
                    continue
                for rest in rec(m, rem - d):
                    yield (m,) + rest

    return list(rec(None, n))


def _chain_matrix(ctx, chain_coeffs):
    polys = [Poly(ctx, [ctx.elem(c) for c in cs]) for cs in chain_coeffs]
    return block_diag([companion(f) for f in polys])


def _mainf2_worker(task):
    idx, n, ca, cb = task
    ctx = prime_field(2)
    try:
        x = _chain_matrix(ctx, ca)
        y = _chain_matrix(ctx, cb)
        verdict = centralizers_conjugate(x, y).conjugate
        brute = cent_conjugate_bruteforce(x, y)
        if verdict != brute:
            return {
                "instance": idx,
                "n": n,
                "x": [list(c) for c in ca],
                "y": [list(c) for c in cb],
                "theorem": verdict,
                "brute": brute,
            }
    except Exception as exc:
        return {
            "instance": idx,
            "n": n,
            "x": [list(c) for c in ca],
            "y": [list(c) for c in cb],
            "error": repr(exc),
        }
    return None


def _suite_main_theorem_f2(seed, scale, jobs):
    scale = 3 if scale is None else scale
    if not 2 <= scale <= 3:
        raise TooLarge("main-theorem-f2 scale must be 2 or 3")
    ctx = prime_field(2)
    tasks = []
    idx = 0
    for n in range(2, scale + 1):
        chains = _invariant_chains(ctx, n)
        coeffed = [
            tuple(tuple(int(c.val) for c in f.coeffs) for f in chain)
            for chain in chains
        ]
        for i in range(len(coeffed)):
            for j in range(i, len(coeffed)):
                tasks.append((idx, n, coeffed[i], coeffed[j]))
                idx += 1
    return scale, len(tasks), _collect(_map_tasks(_mainf2_worker, tasks, jobs))


# -- witness-roundtrip --


def _witness_worker(task):
    idx, tag, sub = task
    try:
        rng = random.Random(sub)
        ctx = make_field(tag)
        cap = 8 if tag == "Q" else 10
        comps = []
        f, g = equivalent_pair(ctx, rng)
        lam = random_partition(rng.randint(1, 3), rng)
        comps.append((f, g, lam))
        if rng.random() < 0.25:
            for _ in range(30):
                f2, g2 = equivalent_pair(ctx, rng)
                if f2 != f and g2 != g:
                    lam2 = random_partition(rng.randint(1, 2), rng)
                    if f.degree * lam.size + f2.degree * lam2.size <= cap:
                        comps.append((f2, g2, lam2))
                    break
        u = random_invertible(ctx, sum(f.degree * l.size for f, _, l in comps), rng, 2)
        v = random_invertible(ctx, u.nrows, rng, 2)
        bx = block_diag([primary_matrix(f, l, rng, conjugate=False) for f, _, l in comps])
        by = block_diag([primary_matrix(g, l, rng, conjugate=False) for _, g, l in comps])
        x = u * bx * u.inverse()
        y = v * by * v.inverse()
        got = witness_polynomials(x, y, seed=rng.getrandbits(32))
        if got is None:
            raise AssertionError("no witness for an equal-type pair")
        p, q = got
        px = mat_eval_poly(p, x)
        ok = (
            frobenius_form(px).invariant_factors == frobenius_form(y).invariant_factors
            and frobenius_form(mat_eval_poly(q, y)).invariant_factors
            == frobenius_form(x).invariant_factors
            and cent_span_equal(px, x)
        )
        if not ok:
            return {
                "instance": idx,
                "field": tag,
                "components": [[str(f), str(g), list(l.parts)] for f, g, l in comps],
                "p": str(p),
                "q": str(q),
            }
    except Exception as exc:
        return {"instance": idx, "field": tag, "error": repr(exc)}
    return None


def _suite_witness(seed, scale, jobs):
    scale = 100 if scale is None else scale
    master = random.Random(seed)
    tags = ("Q", "F3", "F5")
    tasks = [
        (i, tags[master.randrange(len(tags))], master.getrandbits(64))
        for i in range(scale)
    ]
    return scale, len(tasks), _collect(_map_tasks(_witness_worker, tasks, jobs))


# -- jc --


def _jc_worker(task):
    idx, kind, tag, sub = task
    try:
        rng = random.Random(sub)
        ctx = make_field(tag)
        n = rng.randint(1, 4 if tag == "Q" else 5)
        m = random_matrix(ctx, n, rng, bound=4)
        dec = jordan_chevalley(m)
        s, nil = dec.semisimple, dec.nilpotent
        ok = (
            s + nil == m
            and s * nil == nil * s
            and (nil**n).is_zero_matrix()
            and squarefree_part(minpoly(s)) == minpoly(s).monic()
            and mat_eval_poly(dec.poly, m) == s
        )
        if ok and kind == "equivariance":
            p = random_invertible(ctx, n, rng, 2)
            moved = jordan_chevalley(p * m * p.inverse())
            ok = (
                moved.semisimple == p * s * p.inverse()
                and moved.nilpotent == p * nil * p.inverse()
            )
        if not ok:
            return {
                "instance": idx,
                "kind": kind,
                "field": tag,
                "matrix": matrix_to_json(m),
            }
    except Exception as exc:
        return {"instance": idx, "kind": kind, "field": tag, "error": repr(exc)}
    return None


def _suite_jc(seed, scale, jobs):
    scale = 100 if scale is None else scale
    master = random.Random(seed)
    tasks = [
        (
            i,
            "plain",
            _FIELD_TAGS[master.randrange(len(_FIELD_TAGS))],
            master.getrandbits(64),
        )
        for i in range(scale)
    ]
    for i in range(max(1, scale // 5)):
        tasks.append(
            (
                scale + i,
                "equivariance",
                _FIELD_TAGS[master.randrange(len(_FIELD_TAGS))],
                master.getrandbits(64),
            )
        )
    return scale, len(tasks), _collect(_map_tasks(_jc_worker, tasks, jobs))


# -- partition-formulas --


def _weight_minsum(lam):
    mults = lam.mults()
    return sum(
        min(j, k) * mj * mk for j, mj in mults.items() for k, mk in mults.items()
    )


def _weight_odd(lam):
    return sum((2 * i - 1) * part for i, part in enumerate(lam.parts, start=1))


def _suite_partition_formulas(seed, scale, jobs):
    scale = 12 if scale is None else scale
    failures = []
    checked = 0
    for size in range(1, scale + 1):
        for lam in partitions_of(size):
            checked += 1
            a = cent_dim_weight(lam)
            b = _weight_minsum(lam)
            c = _weight_odd(lam)
            if not (a == b == c):
                failures.append(
                    {
                        "instance": checked,
                        "partition": list(lam.parts),
                        "conjugate_square": a,
                        "min_sum": b,
                        "odd_sum": c,
                    }
                )
    return scale, checked, failures


# -- sn-oracle / an-oracle --

_ORACLE_CACHE = {}


def _tuple_even(images):
    n = len(images)
    seen = [False] * n
    cycles = 0
    for s in range(n):
        if not seen[s]:
            cycles += 1
            p = s
            while not seen[p]:
                seen[p] = True
                p = images[p] - 1
    return (n - cycles) % 2 == 0


def _oracle_data(n, group):
    key = (n, group)
    data = _ORACLE_CACHE.get(key)
    if data is None:
        universe = _all_images(n)
        if group == "A":
            universe = tuple(t for t in universe if _tuple_even(t))
        layers = [CycleLayers(Permutation(t)) for t in universe]
        data = {"universe": universe, "layers": layers, "cents": {}}
        _ORACLE_CACHE[key] = data
    return data


def _oracle_cent(data, i):
    c = data["cents"].get(i)
    if c is None:
        c = _centralizer_images(data["universe"][i], data["universe"])
        data["cents"][i] = c
    return c


def _oracle_worker(task):
    group, n, pairs = task
    data = _oracle_data(n, group)
    layers = data["layers"]
    decide = _decide_sn if group == "S" else _decide_an
    out = []
    for idx, i, j in pairs:
        rep = decide(layers[i], layers[j])
        brute = _oracle_cent(data, i) == _oracle_cent(data, j)
        if rep.equal != brute:
            out.append(
                {
                    "instance": idx,
                    "g": str(Permutation(data["universe"][i])),
                    "h": str(Permutation(data["universe"][j])),
                    "theorem": rep.equal,
                    "kind": rep.kind,
                    "brute": brute,
                }
            )
    return out


def _suite_oracle(group, seed, scale, jobs):
    n = 5 if scale is None else scale
    if not 1 <= n <= 7:
        raise TooLarge("oracle degree must be between 1 and 7")
    data = _oracle_data(n, group)
    count = len(data["universe"])
    pairs = []
    if n <= 6:
        idx = 0
        for i in range(count):
            for j in range(i, count):
                pairs.append((idx, i, j))
                idx += 1
    else:
        rng = random.Random(seed)
        pairs = [
            (k, rng.randrange(count), rng.randrange(count)) for k in range(10000)
        ]
    chunks = [
        (group, n, tuple(pairs[k : k + 2000])) for k in range(0, len(pairs), 2000)
    ]
    results = _map_tasks(_oracle_worker, chunks, jobs)
    return n, len(pairs), _collect(results)


def _suite_sn_oracle(seed, scale, jobs):
    return _suite_oracle("S", seed, scale, jobs)


def _suite_an_oracle(seed, scale, jobs):
    return _suite_oracle("A", seed, scale, jobs)


# -- extension-separable --


def _extsep_worker(task):
    idx, p, sub = task
    try:
        rng = random.Random(sub)
        base = prime_field(p)
        d = rng.randint(1, 3)
        lam = random_partition(rng.randint(1, 3), rng)
        f = random_irreducible(base, d, rng)
        x = primary_matrix(f, lam, rng)
        ext = extension_field(base, f, check=False)
        ct = cycle_type(matrix_embed(x, ext), seed=rng.getrandbits(32))
        ok = len(ct.entries) == d and all(
            g.degree == 1 and mu == lam for g, mu in ct.entries
        )
        if not ok:
            return {
                "instance": idx,
                "p": p,
                "f": str(f),
                "partition": list(lam.parts),
                "got": str(ct),
            }
    except Exception as exc:
        return {"instance": idx, "p": p, "error": repr(exc)}
    return None


def _suite_ext_separable(seed, scale, jobs):
    scale = 50 if scale is None else scale
    master = random.Random(seed)
    primes = (2, 3, 5)
    tasks = [
        (i, primes[master.randrange(3)], master.getrandbits(64)) for i in range(scale)
    ]
    return scale, len(tasks), _collect(_map_tasks(_extsep_worker, tasks, jobs))


_SUITES = {
    "centdim": _suite_centdim,
    "nilpclass": _suite_nilpclass,
    "dominance": _suite_dominance,
    "main-theorem-f2": _suite_main_theorem_f2,
    "witness-roundtrip": _suite_witness,
    "sn-oracle": _suite_sn_oracle,
    "an-oracle": _suite_an_oracle,
    "partition-formulas": _suite_partition_formulas,
    "jc": _suite_jc,
    "extension-separable": _suite_ext_separable,
}


def suite_names():
    return tuple(_SUITES)


def run_suite(name, seed=0, scale=None, jobs=1):
    fn = _SUITES.get(name)
    if fn is None:
        raise UnknownSuite(
            "unknown suite %r; choose from %s" % (name, ", ".join(_SUITES))
        )
    start = time.perf_counter()
    resolved, checked, failures = fn(seed, scale, jobs)
    elapsed = time.perf_counter() - start
    return VerifyReport(
        suite=name,
        seed=seed,
        scale=resolved,
        instances_checked=checked,
        failures=tuple(failures),
        elapsed=elapsed,
    )
