"""Exit criteria. Each test reports one PASS/FAIL line in the terminal summary.

All comparisons are exact (zero tolerance); every random draw is seeded.
"""

import random

from csl import cli
from csl.errors import NotCoincidence
from csl.exact import QuadExt, identity, scale
from csl.exact.rational import parse_rational, rational_sqrt
from csl.factor_group import EtaClass, class_mul, eta_of, eta_of_direction, is_in_kernel
from csl.gaussian import (
    GaussInt,
    SocFactorization,
    direction_square,
    enumerate_soc_z2,
    soc_factorize,
    soc_matrix,
    sos_decompose,
    sos_square_to_soc,
)
from csl.generators import (
    hexagonal_coincidence,
    lattices_by_dimension,
    random_gauss,
    random_rational,
    random_similarity,
    standard_lattices,
)
from csl.lattice import coincidence_index, compose, invert, is_commensurate, normalize_to_coincidence, rescale
from csl.oracles import norms_up_to, residue_sigma, squarefree_by_trial

SEED = 0xC5117
SPLIT_PRIMES = (5, 13, 17, 29, 37)


def _rng(criterion):
    return random.Random(SEED + criterion)


def _normalizes(s):
    try:
        normalize_to_coincidence(s)
        return True
    except NotCoincidence:
        return False


def test_ac01_soc_z2_is_so2q(report):
    rng = _rng(1)
    bad = 0
    for _ in range(200):
        z = random_gauss(rng, 10_000)
        c = soc_matrix(direction_square(z))
        pair = coincidence_index(c)
        bad += c.multiplier != 1 or pair.sigma1 < 1
    report("AC1 SOC(Z^2) = SO(2,Q) on 200 rotations z/conj(z), N(z) <= 1e4", bad == 0, f"{bad} failures")
    assert bad == 0


def test_ac02_factorization_round_trip(report):
    rng = _rng(2)
    bad = 0
    for _ in range(200):
        exps = {}
        for _ in range(rng.randint(0, 6)):
            p = rng.choice(SPLIT_PRIMES)
            exps[p] = exps.get(p, 0) + rng.choice((1, -1))
        f = SocFactorization(rng.randrange(4), exps)
        bad += soc_factorize(f.reconstruct()) != f
    report("AC2 unique factorisation round trip, 200 products over p in {5,13,17,29,37}", bad == 0, f"{bad} failures")
    assert bad == 0


def test_ac03_squaring_bridge(report):
    rng = _rng(3)
    bad = 0
    for _ in range(200):
        z = random_gauss(rng, 10**6)
        bad += sos_square_to_soc(sos_decompose(z)) != soc_factorize(direction_square(z))
    report("AC3 squaring bridge (w_p/sqrt p)^2 = w_p/conj(w_p), 200 z with N(z) <= 1e6", bad == 0, f"{bad} failures")
    assert bad == 0


def test_ac04_sigma_oracle(report):
    rng = _rng(4)
    bad = checked = 0
    for f in enumerate_soc_z2(100):
        t = soc_matrix(f.reconstruct())
        pair = coincidence_index(t)
        bad += (pair.sigma1, pair.sigma2) != residue_sigma(t.T)
        checked += 1
    eisenstein = [(a, b) for a in range(-10, 11) for b in range(-10, 11) if 0 < a * a + a * b + b * b <= 100]
    for a, b in rng.sample(eisenstein, 20):
        s = hexagonal_coincidence(a, b)
        pair = coincidence_index(s)
        bad += (pair.sigma1, pair.sigma2) != residue_sigma(s.T)
        checked += 1
    report("AC4 sigma index equals residue-count oracle (Z^2 up to 100, 20 hexagonal)", bad == 0, f"{checked} maps, {bad} failures")
    assert bad == 0


def test_ac05_eta_homomorphism_kernel(report):
    rng = _rng(5)
    lats = standard_lattices()
    pool = [lats["Z2"], lats["hexagonal"], lats["diag(1,2,3)"]]
    bad = nontrivial = 0
    for i in range(500):
        lat = pool[i % 3]
        s1, s2 = random_similarity(rng, lat), random_similarity(rng, lat)
        st = compose(s1, s2)
        bad += eta_of(st) != class_mul(eta_of(s1), eta_of(s2))
        for s in (s1, s2, st):
            bad += is_in_kernel(s) != _normalizes(s)
        nontrivial += not eta_of(s1).is_identity
    report("AC5 eta is a homomorphism with kernel SOC, 500 pairs", bad == 0, f"{bad} failures, {nontrivial} non-kernel maps drawn")
    assert bad == 0 and nontrivial > 0


def test_ac06_square_closure(report):
    rng = _rng(6)
    lats = lattices_by_dimension(rng, (2, 3, 4))
    bad = odd = 0
    for i in range(500):
        lat = lats[i % len(lats)]
        s = random_similarity(rng, lat)
        bad += not _normalizes(compose(s, s))
        if lat.dim == 3:
            odd += 1
            bad += not _normalizes(s)
    report("AC6 (SOS)^2 in SOC for d in {2,3,4}; SOS = SOC for d = 3", bad == 0, f"{bad} failures, {odd} maps in d = 3")
    assert bad == 0 and odd > 0


def test_ac07_factor_group_structure(report):
    image = {eta_of_direction(sos_decompose(GaussInt(a, b))) for a in range(-10, 11) for b in range(-10, 11) if 0 < a * a + b * b <= 100}
    oracle = {EtaClass(squarefree_by_trial(n)) for n in norms_up_to(100)}
    allowed = {1, 2, 5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97}

    def product_of_allowed(c):
        rest = c
        for p in allowed - {1}:
            if rest % p == 0:
                rest //= p
        return rest == 1

    generated = {EtaClass(c) for c in range(1, 101) if squarefree_by_trial(c) == c and product_of_allowed(c)}
    orders_ok = all(class_mul(c, c) == EtaClass(1) for c in image)
    ok = image == oracle == generated and orders_ok
    report("AC7 eta image over N(z) <= 100 is the expected elementary 2-group set", ok, f"{len(image)} classes")
    assert ok


def test_ac08_enumeration_counts(report):
    counts = {}
    bad = 0
    for n in (5, 1):
        result, code = cli.run(["soc", "enumerate", "--max-index", str(n)])
        payload = result.to_json()["payload"]
        counts[n] = payload["count"]
        bad += code != 0 or len(payload["elements"]) != payload["count"]
        for e in payload["elements"]:
            t = tuple(tuple(parse_rational(x) for x in r) for r in e["matrix"])
            bad += residue_sigma(t) != (e["sigma"], e["sigma"])
    ok = counts == {5: 12, 1: 4} and bad == 0
    report("AC8 `csl soc enumerate` emits 12 (max 5) and 4 (max 1) elements", ok, f"counts {counts}")
    assert ok


def test_ac09_scal_properties(report):
    rng = _rng(9)
    lats = lattices_by_dimension(rng, (2, 3, 4))
    bad = 0
    for i in range(200):
        lat = lats[i % len(lats)]
        s = random_similarity(rng, lat)
        b = random_rational(rng)
        # -T reverses orientation in odd d, and -T Γ = T Γ, so |b| represents the same scale
        if lat.dim % 2:
            b = abs(b)
        r = rescale(s, b)
        bad += r.multiplier != b * b * s.multiplier
        ratio = r.multiplier / s.multiplier
        bad += rational_sqrt(ratio) is None
        bad += not _normalizes(compose(r, invert(s)))
    report("AC9 rational rescaling b*T has multiplier b^2 m; ratios are rational squares", bad == 0, f"{bad} failures")
    assert bad == 0


def test_ac10_negative_commensurateness(report):
    eye = identity(2)
    root2 = QuadExt.sqrt(2)
    scaled = not is_commensurate(eye, scale(root2, eye))
    bare = not is_commensurate(eye, scale(root2 / 2, ((1, -1), (1, 1))))
    ok = scaled and bare
    report("AC10 sqrt(2) Z^2 and the bare 45 degree rotation are not commensurate with Z^2", ok)
    assert ok
