"""Timing harness comparing the saturation and block-order elimination routes.

The harness only measures.  It never asserts which route is faster.
"""

from __future__ import annotations

import csv
import random
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass
from itertools import combinations_with_replacement
from pathlib import Path

from .coeff import QQ
from .errors import BudgetError, UsageError
from .groebner import Budget, clear_cache, ideal_equal
from .idealops import EliminationProblem, eliminate_block, eliminate_saturation
from .orders import DEGREVLEX
from .parser import read_problem
from .polyring import RingSpec, VectorPoly

CSV_HEADER = ("instance", "method", "order", "time_ms", "sat_steps", "gb_size", "max_deg", "outcome")
METHODS = ("saturation", "block")


@dataclass
class BenchRecord:
    instance: str
    method: str
    order: str
    time_ms: float
    sat_steps: int
    gb_size: int
    max_deg: int
    outcome: str


# instance generators ---------------------------------------------------------


def curve_problem(m, field=QQ):
    """``<b_i - t^i : i = 1..m>``: the twisted cubic for m = 3."""
    names = tuple(f"b{i}" for i in range(1, m + 1)) + ("t",)
    ring = RingSpec(field, names, (0,) * m + (1,))
    t = ring.gen("t")
    return EliminationProblem(ring, tuple(ring.gen(f"b{i}") - t**i for i in range(1, m + 1)))


def _monomials(nvars, max_deg):
    out = []
    for d in range(max_deg + 1):
        for combo in combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def random_polynomial(rng, ring, max_deg=3, coeff_range=3, max_terms=None):
    """Random polynomial of total degree <= max_deg.

    With ``max_terms=None`` every monomial gets a coefficient drawn from
    ``[-coeff_range, coeff_range]`` (dense); otherwise at most ``max_terms``
    distinct monomials are drawn.
    """
    monos = _monomials(ring.nvars, max_deg)
    if max_terms is not None:
        monos = rng.sample(monos, min(rng.randint(1, max_terms), len(monos)))
    coeffs = {}
    for m in monos:
        c = rng.randint(-coeff_range, coeff_range)
        if c:
            coeffs[m] = c
    return ring.from_dict(coeffs)


def random_problem(rng, n_elim=2, n_base=2, max_deg=3, n_gens=4, coeff_range=3,
                   field=QQ, max_terms=3, rank=None):
    """Random elimination problem with 1..n_gens generators.

    Elimination variables come first (``x1..``), base variables after
    (``b1..``).  Each polynomial (or vector component, with ``rank`` set)
    has at most ``max_terms`` terms.  Sparse is the default because dense
    generic cubics routinely need minutes per instance over QQ.
    """
    names = tuple(f"x{i}" for i in range(1, n_elim + 1)) + tuple(f"b{i}" for i in range(1, n_base + 1))
    ring = RingSpec(field, names, (1,) * n_elim + (0,) * n_base)
    k = rng.randint(1, n_gens)
    if rank is None:
        gens = [random_polynomial(rng, ring, max_deg, coeff_range, max_terms) for _ in range(k)]
    else:
        gens = [VectorPoly(ring, [random_polynomial(rng, ring, max_deg, coeff_range, max_terms)
                                  for _ in range(rank)]) for _ in range(k)]
    return EliminationProblem(ring, tuple(g for g in gens if g))


# running -----------------------------------------------------------------------


def _block_order_name(p):
    return f"block({len(p.elim_vars)}:degrevlex,degrevlex)"


def _max_deg(basis):
    degs = []
    for g in basis.gens:
        comps = g.comps if isinstance(g, VectorPoly) else (g,)
        degs.extend(c.total_degree() for c in comps if c)
    return int(max(degs, default=0))


def _timed(fn, p, budget, repeat):
    times = []
    res = None
    for _ in range(repeat):
        clear_cache()
        t0 = time.perf_counter()
        res = fn(p, budget=budget, details=True)
        times.append((time.perf_counter() - t0) * 1000.0)
    return statistics.median(times), res


def run_instance(name, p, methods=METHODS, budget=None, repeat=3):
    """One BenchRecord per method; budget failures are recorded, not raised."""
    fns = {"saturation": eliminate_saturation, "block": eliminate_block}
    orders = {"saturation": str(DEGREVLEX), "block": _block_order_name(p)}
    records = []
    results = {}
    for method in methods:
        if method not in fns:
            raise UsageError(f"unknown method {method!r}")
        try:
            ms, res = _timed(fns[method], p, budget, repeat)
        except BudgetError:
            records.append(BenchRecord(name, method, orders[method], 0.0, 0, 0, 0, "budget"))
            continue
        results[method] = res
        work = res.work_basis if res.work_basis is not None else res.basis
        records.append(BenchRecord(name, method, orders[method], round(ms, 3),
                                   res.saturation_steps, len(work.gens), _max_deg(work), "ok"))
    if len(results) == 2:
        a, b = results["saturation"].basis, results["block"].basis
        if not ideal_equal(a, b):
            for r in records:
                r.outcome = "disagree"
    return records


def _run_job(job):
    name, p, methods, budget, repeat = job
    return run_instance(name, p, methods, budget, repeat)


def load_corpus(directory):
    """``(instance id, problem)`` for every ``*.ideal`` file, sorted by name."""
    path = Path(directory)
    if not path.is_dir():
        raise UsageError(f"corpus directory {directory} is not readable")
    return [(f.stem, read_problem(f).problem()) for f in sorted(path.glob("*.ideal"))]


def build_instances(directory=None, curves=(), n_random=0, seed=0, random_kwargs=None):
    instances = []
    if directory is not None:
        instances.extend(load_corpus(directory))
    for m in curves:
        instances.append((f"curve_m{m}", curve_problem(m)))
    rng = random.Random(seed)
    for k in range(n_random):
        instances.append((f"random_s{seed}_{k:03d}", random_problem(rng, **(random_kwargs or {}))))
    return instances


def run_corpus(directory=None, methods=METHODS, budget=None, seed=0, curves=(),
               n_random=0, repeat=3, jobs=1, random_kwargs=None):
    """Bench every instance; rows come back in (instance, method) order."""
    budget = budget or Budget()
    instances = build_instances(directory, curves, n_random, seed, random_kwargs)
    jobs_list = [(name, p, tuple(methods), budget, repeat) for name, p in instances]
    if jobs > 1 and len(jobs_list) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_job, jobs_list))
    else:
        chunks = [_run_job(j) for j in jobs_list]
    return [r for chunk in chunks for r in chunk]


def write_csv(records, fh):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(astuple(r))
