"""The ten acceptance criteria, each at its stated size and time limit.

Every test records one PASS/FAIL line, printed again in the terminal summary.
"""

import csv
import io
import random
import time

from satelim import (
    QQ,
    Budget,
    FieldSpec,
    IdealBasis,
    ModuleBasis,
    RingSpec,
    VectorPoly,
    buchberger,
    dehomogenize_poly,
    eliminate_block,
    eliminate_saturation,
    groebner_basis,
    homogenize_ideal,
    homogenize_poly,
    ideal_equal,
    ideal_membership,
    normal_form,
    quotient,
    s_polynomial,
    syzygies,
    weighted_degree,
)
from satelim.bench import CSV_HEADER, curve_problem, random_polynomial, random_problem, run_corpus, write_csv
from satelim.groebner import clear_cache

from conftest import record_acceptance

F32003 = FieldSpec.prime(32003)


def strs(basis):
    return [str(g) for g in basis.gens]


def polys(ring, texts):
    return [ring.poly(t) for t in texts]


# 1 -------------------------------------------------------------------------


def test_criterion_1_small_example():
    clear_cache()
    t0 = time.perf_counter()
    R = RingSpec(QQ, ("x1", "x2"))
    res = homogenize_ideal(polys(R, ["x1^2", "x2 - x1^2"]))
    S = res.ring
    J_ok = groebner_basis(res.J).gens == groebner_basis(polys(S, ["x1^2", "x0*x2"])).gens
    steps_ok = res.saturation_steps == 1
    ih_ok = sorted(strs(res.Ih)) == ["x1^2", "x2"]
    elapsed = time.perf_counter() - t0
    ok = J_ok and steps_ok and ih_ok and elapsed < 1.0
    record_acceptance(1, ok, f"J={strs(groebner_basis(res.J))} steps={res.saturation_steps} "
                             f"Ih={strs(res.Ih)} {elapsed:.3f}s")
    assert ok


# 2 -------------------------------------------------------------------------


def test_criterion_2_twisted_cubic():
    clear_cache()
    t0 = time.perf_counter()
    p = curve_problem(3)
    gb = groebner_basis(p.basis())
    gb_ok = sorted(strs(gb)) == sorted(["b1 - t", "t^2 - b2", "b2*t - b3", "b2^2 - b3*t"])
    res = homogenize_ideal(p.basis(), "s")
    ih_ok = ideal_equal(res.Ih, polys(res.ring, ["b1*s - t", "b1*b2 - b3", "b1^2 - b2"]))
    elim = eliminate_saturation(p)
    elim_ok = (ideal_equal(elim, polys(elim.ring, ["b1*b2 - b3", "b1^2 - b2"]))
               and sorted(strs(elim)) == sorted(["b1^2 - b2", "b1*b2 - b3", "b2^2 - b1*b3"]))
    elapsed = time.perf_counter() - t0
    ok = gb_ok and ih_ok and elim_ok and elapsed < 1.0
    record_acceptance(2, ok, f"gb={gb_ok} Ih={ih_ok} elimination={strs(elim)} {elapsed:.3f}s")
    assert ok


# 3 -------------------------------------------------------------------------


def test_criterion_3_route_equivalence():
    t0 = time.perf_counter()
    failures = []
    for field, seed in ((QQ, 3001), (F32003, 3002)):
        rng = random.Random(seed)
        for k in range(100):
            p = random_problem(rng, field=field)
            a = eliminate_saturation(p)
            b = eliminate_block(p)
            if not ideal_equal(a, b):
                failures.append((field, k))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 600
    record_acceptance(3, ok, f"200 instances, {len(failures)} disagreements, {elapsed:.1f}s")
    assert ok, failures


# 4 -------------------------------------------------------------------------


def test_criterion_4_saturatedness():
    rng = random.Random(4004)
    bad = 0
    for _ in range(50):
        p = random_problem(rng)
        res = homogenize_ideal(p.basis())
        x0 = res.ring.gen("x0")
        q = quotient(res.Ih, x0)
        if not (q.gens == res.Ih.gens and ideal_equal(q, res.Ih)):
            bad += 1
    record_acceptance(4, bad == 0, f"50 instances, {bad} with Ih : x0 != Ih")
    assert bad == 0


# 5 -------------------------------------------------------------------------


def recombine(rng, gens, ring):
    """An invertible recombination of ``gens`` plus one redundant element.

    g'_i = c_i g_i + sum_{j<i} m_ij g_j with nonzero constants c_i, which is
    unitriangular up to units and hence generates the same ideal.
    """
    def multiplier():
        f = random_polynomial(rng, ring, max_deg=1, coeff_range=2, max_terms=2)
        return f

    out = []
    for i, g in enumerate(gens):
        c = rng.choice([-2, -1, 1, 3])
        h = g * ring.const(c)
        for j in range(i):
            h = h + multiplier() * gens[j]
        out.append(h)
    extra = ring.zero()
    for g in gens:
        extra = extra + multiplier() * g
    out.append(extra)
    rng.shuffle(out)
    return [h for h in out if h]


def test_criterion_5_generator_independence():
    rng = random.Random(5005)
    bad = 0
    for _ in range(25):
        p = random_problem(rng)
        G = list(p.gens)
        G2 = recombine(rng, G, p.ring)
        assert ideal_equal(G, G2)
        a = homogenize_ideal(IdealBasis(p.ring, tuple(G))).Ih
        b = homogenize_ideal(IdealBasis(p.ring, tuple(G2))).Ih
        if not ideal_equal(a, b):
            bad += 1
    record_acceptance(5, bad == 0, f"25 ideals, {bad} with differing Ih")
    assert bad == 0


# 6 -------------------------------------------------------------------------

# x1, x2 eliminable, b1 base, x0 homogenizing
H = RingSpec(QQ, ("x1", "x2", "b1", "x0"), (1, 1, 0, 1), homog_var=3)
H_AFFINE = RingSpec(QQ, ("x1", "x2", "b1"), (1, 1, 0))


def affine_poly(rng):
    f = random_polynomial(rng, H_AFFINE, max_deg=4, coeff_range=5, max_terms=5)
    return H.from_terms((m + (0,), c) for m, c in f.terms)


def split(rng, f, ring):
    summands = [ring.zero() for _ in range(rng.randint(1, 4))]
    for m, c in f.terms:
        summands[rng.randrange(len(summands))] += ring.monomial(m, c)
    noise = ring.monomial((rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 2), 0), rng.randint(1, 4))
    summands[0] += noise
    summands[-1] -= noise
    return [s for s in summands if s]


def test_criterion_6_homogenization_identities():
    rng = random.Random(6006)
    x0 = H.gen("x0")
    fails = {"dehomogenize": 0, "multiplicativity": 0, "additivity": 0}
    for _ in range(500):
        f, g = affine_poly(rng), affine_poly(rng)
        if dehomogenize_poly(homogenize_poly(f, 3), 3) != f:
            fails["dehomogenize"] += 1
        if homogenize_poly(f * g, 3) != homogenize_poly(f, 3) * homogenize_poly(g, 3):
            fails["multiplicativity"] += 1
        parts = split(rng, f, H)
        if parts:
            m = max(weighted_degree(s) for s in parts)
            rhs = sum((x0 ** int(m - weighted_degree(s)) * homogenize_poly(s, 3) for s in parts), H.zero())
            lhs = x0 ** int(m - weighted_degree(f)) * homogenize_poly(f, 3) if f else H.zero()
            if lhs != rhs:
                fails["additivity"] += 1
    ok = not any(fails.values())
    record_acceptance(6, ok, f"500 pairs, failures {fails}")
    assert ok


# 7 -------------------------------------------------------------------------

XYZ = RingSpec(QQ, ("x", "y", "z"))


def random_gens(rng, ring, k_max=4):
    gens = [random_polynomial(rng, ring, max_deg=3, coeff_range=3, max_terms=3)
            for _ in range(rng.randint(1, k_max))]
    return [g for g in gens if g] or [ring.one()]


def test_criterion_7_gb_core():
    rng = random.Random(7007)
    fails = {"s-pairs": 0, "permutation": 0, "division": 0}
    for _ in range(100):
        G = random_gens(rng, XYZ)
        gb = list(buchberger(G).gens)
        if any(normal_form(s_polynomial(gb[i], gb[j]), gb)[0]
               for i in range(len(gb)) for j in range(i + 1, len(gb))):
            fails["s-pairs"] += 1
        perm = G[:]
        rng.shuffle(perm)
        if groebner_basis(G).gens != groebner_basis(perm).gens:
            fails["permutation"] += 1
        f = random_polynomial(rng, XYZ, max_deg=5, coeff_range=5, max_terms=6)
        r, qs = normal_form(f, G)
        if f != sum((q * g for q, g in zip(qs, G)), XYZ.zero()) + r:
            fails["division"] += 1
    ok = not any(fails.values())
    record_acceptance(7, ok, f"100 generator sets, failures {fails}")
    assert ok


# 8 -------------------------------------------------------------------------


XY = RingSpec(QQ, ("x", "y"))
XYZ_P = RingSpec(F32003, ("x", "y", "z"))


def test_criterion_8_syzygies():
    # 100 lists over QQ[x, y] and 100 over F_32003[x, y, z]
    fails = {"dot": 0, "koszul": 0}
    for ring, seed in ((XY, 8008), (XYZ_P, 8009)):
        rng = random.Random(seed)
        for _ in range(100):
            F = random_gens(rng, ring)
            syz = syzygies(F)
            for s in syz:
                if sum((a * f for a, f in zip(s.comps, F)), ring.zero()):
                    fails["dot"] += 1
            M = ModuleBasis(ring, syz.gens, rank=len(F)) if syz.gens else None
            for i in range(len(F)):
                for j in range(i + 1, len(F)):
                    comps = [ring.zero()] * len(F)
                    comps[i], comps[j] = F[j], -F[i]
                    if M is None or not ideal_membership(VectorPoly(ring, comps), M):
                        fails["koszul"] += 1
    ok = not any(fails.values())
    record_acceptance(8, ok, f"2 x 100 lists, failures {fails}")
    assert ok


# 9 -------------------------------------------------------------------------


def test_criterion_9_modules():
    rng = random.Random(9009)
    bad = 0
    for _ in range(25):
        p = random_problem(rng, n_elim=1, n_base=2, max_deg=3, n_gens=3, max_terms=2, rank=2)
        a = eliminate_saturation(p)
        b = eliminate_block(p)
        if not (a.rank == b.rank == 2 and ideal_equal(a, b)):
            bad += 1
    record_acceptance(9, bad == 0, f"25 submodules of R^2, {bad} disagreements")
    assert bad == 0


# 10 ------------------------------------------------------------------------


def test_criterion_10_bench_curves():
    t0 = time.perf_counter()
    records = run_corpus(curves=range(1, 6), budget=Budget())
    buf = io.StringIO()
    write_csv(records, buf)
    rows = list(csv.reader(io.StringIO(buf.getvalue())))
    elapsed = time.perf_counter() - t0
    schema_ok = tuple(rows[0]) == CSV_HEADER and all(len(r) == len(CSV_HEADER) for r in rows[1:])
    for r in rows[1:]:
        float(r[3]), int(r[4]), int(r[5]), int(r[6])
    methods = {(r[0], r[1]) for r in rows[1:]}
    complete = methods == {(f"curve_m{m}", meth) for m in range(1, 6) for meth in ("saturation", "block")}
    all_ok = all(r[7] == "ok" for r in rows[1:])
    ok = schema_ok and complete and all_ok and elapsed < 300
    record_acceptance(10, ok, f"{len(rows) - 1} rows, outcomes ok={all_ok}, {elapsed:.2f}s")
    assert ok
