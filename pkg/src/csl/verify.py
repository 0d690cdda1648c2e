"""Seeded property suites for the structural results on SOS and SOC.

Each suite draws random instances from a fixed seed and tallies how many
property instances held. A failing instance is kept as the first
counterexample (a short JSON-friendly description).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from csl.errors import NotCommensurate
from csl.exact.matrix import identity, is_integral, mat_mul, rat_inverse, scale, to_fractions
from csl.exact.quadext import QuadExt
from csl.exact.sublattice import clear_denominators, lattice_intersection
from csl.factor_group import class_mul, class_order, eta_of, kernel_agrees
from csl.gaussian import (
    GaussInt,
    GaussRational,
    coincidence_index_z2,
    direction_square,
    enumerate_soc_z2,
    gauss_gcd,
    gauss_matrix,
    soc_factorize,
    soc_matrix,
    sos_decompose,
    sos_square_to_soc,
)
from csl.generators import (
    lattices_by_dimension,
    random_gauss,
    random_rational,
    random_similarity,
    standard_lattices,
)
from csl.lattice import (
    coincidence_index,
    compose,
    invert,
    is_commensurate,
    normalize_to_coincidence,
    rescale,
    square_lattice,
    validate_similarity,
)
from csl.oracles import residue_sigma

DEFAULT_SEED = 0xC5117


@dataclass
class VerifyConfig:
    seed: int = DEFAULT_SEED
    trials: int = 60


@dataclass
class SuiteReport:
    suite: str
    passed: int = 0
    failed: int = 0
    first_counterexample: dict | None = None
    checks: dict[str, list[int]] = field(default_factory=dict)

    def record(self, check: str, ok: bool, detail: Callable[[], dict]) -> None:
        tally = self.checks.setdefault(check, [0, 0])
        if ok:
            self.passed += 1
            tally[0] += 1
        else:
            self.failed += 1
            tally[1] += 1
            if self.first_counterexample is None:
                self.first_counterexample = {"check": check, **detail()}

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _mat_str(m) -> list[list[str]]:
    return [[str(x) for x in r] for r in m]


def _random_rational_basis(rng: random.Random, d: int):
    while True:
        b = tuple(tuple(random_rational(rng, nonzero=False) for _ in range(d)) for _ in range(d))
        try:
            rat_inverse(b)
            return b
        except ValueError:
            continue


def _random_sqrt2_basis(rng: random.Random, d: int):
    """Rational basis, possibly scaled by sqrt 2, with entries in Q(sqrt 2)."""
    b = _random_rational_basis(rng, d)
    c = QuadExt.sqrt(2) if rng.random() < 0.5 else QuadExt(1, 0, 2)
    return scale(c, b)


def suite_commensurate(cfg: VerifyConfig, rep: SuiteReport) -> None:
    rng = random.Random(cfg.seed)
    root2 = QuadExt.sqrt(2)
    eye = to_fractions(identity(2))
    rep.record("sqrt2_scaled_rejected", not is_commensurate(eye, scale(root2, eye)), dict)
    rot45 = scale(root2 / 2, ((1, -1), (1, 1)))
    rep.record("bare_45_rotation_rejected", not is_commensurate(eye, rot45), dict)
    rep.record("scaled_45_rotation_accepted", is_commensurate(eye, ((1, -1), (1, 1))), dict)
    for _ in range(cfg.trials):
        d = rng.randint(2, 3)
        b1, b2 = _random_rational_basis(rng, d), _random_rational_basis(rng, d)
        rep.record("reflexive", is_commensurate(b1, b1), lambda: {"B": _mat_str(b1)})
        rep.record(
            "symmetric",
            is_commensurate(b1, b2) and is_commensurate(b2, b1),
            lambda: {"B1": _mat_str(b1), "B2": _mat_str(b2)},
        )
        c = lattice_intersection(b1, b2)
        inside = all(is_integral(mat_mul(rat_inverse(b), c)) for b in (b1, b2))
        # t1 Γ2 ⊆ Γ1 and t2 Γ1 ⊆ Γ2, so t1 t2 times either lattice lies in the intersection
        t1, _ = clear_denominators(mat_mul(rat_inverse(b1), b2))
        t2, _ = clear_denominators(mat_mul(rat_inverse(b2), b1))
        big = all(is_integral(mat_mul(rat_inverse(c), scale(t1 * t2, b))) for b in (b1, b2))
        rep.record("intersection_containment", inside and big, lambda: {"B1": _mat_str(b1), "B2": _mat_str(b2)})
        x, y, z = (_random_sqrt2_basis(rng, 2) for _ in range(3))
        if is_commensurate(x, y) and is_commensurate(y, z):
            rep.record("transitive", is_commensurate(x, z), lambda: {"B1": _mat_str(x), "B3": _mat_str(z)})
        q1 = QuadExt(random_rational(rng, nonzero=False), random_rational(rng, nonzero=False), 2)
        q2 = QuadExt(random_rational(rng, nonzero=False), random_rational(rng, nonzero=False), 2)
        q3 = QuadExt(random_rational(rng), random_rational(rng), 2)
        field_ok = (
            (q1 + q2) * q3 == q1 * q3 + q2 * q3
            and q1 * q2 == q2 * q1
            and (q1 * q2) * q3 == q1 * (q2 * q3)
            and (q1 / q3) * q3 == q1
            and (q1 - q1).is_rational
        )
        rep.record("quadratic_field_axioms", field_ok, lambda: {"x": str(q1), "y": str(q2), "z": str(q3)})
        if not (q1 * q1).is_rational:
            try:
                lattice_intersection(eye, scale(q1, eye))
                rep.record("irrational_intersection_rejected", False, lambda: {"scale": str(q1)})
            except NotCommensurate:
                rep.record("irrational_intersection_rejected", True, dict)


def suite_scal(cfg: VerifyConfig, rep: SuiteReport) -> None:
    rng = random.Random(cfg.seed)
    lattices = lattices_by_dimension(rng)
    for _ in range(cfg.trials):
        lat = rng.choice(lattices)
        s = random_similarity(rng, lat)
        b = random_rational(rng)
        if lat.dim % 2:
            b = abs(b)
        r = rescale(s, b)
        rep.record(
            "rational_rescaling",
            r.multiplier == b * b * s.multiplier,
            lambda: {"T": _mat_str(s.T), "b": str(b)},
        )
        ratio = r.multiplier / s.multiplier
        rep.record(
            "multiplier_ratio_is_rational_square",
            ratio == b * b,
            lambda: {"T": _mat_str(s.T), "b": str(b)},
        )


def _pair_lattices():
    lats = standard_lattices()
    return [lats["Z2"], lats["hexagonal"], lats["diag(1,2,3)"]]


def suite_eta(cfg: VerifyConfig, rep: SuiteReport) -> None:
    rng = random.Random(cfg.seed)
    lattices = _pair_lattices()
    for _ in range(cfg.trials):
        lat = rng.choice(lattices)
        s1, s2 = random_similarity(rng, lat), random_similarity(rng, lat)
        st = compose(s1, s2)
        rep.record(
            "homomorphism",
            eta_of(st) == class_mul(eta_of(s1), eta_of(s2)),
            lambda: {"T1": _mat_str(s1.T), "T2": _mat_str(s2.T)},
        )
        rep.record("kernel_equals_soc", all(kernel_agrees(s) for s in (s1, s2, st)), lambda: {"T": _mat_str(s1.T)})
        inv = invert(s1)
        rep.record("inverse_class", eta_of(inv) == eta_of(s1), lambda: {"T": _mat_str(s1.T)})
        c = eta_of(s1)
        rep.record(
            "order_divides_dimension",
            class_order(c, lat.dim) in (1, 2) and class_mul(c, c).is_identity,
            lambda: {"T": _mat_str(s1.T)},
        )


def suite_square_closure(cfg: VerifyConfig, rep: SuiteReport) -> None:
    rng = random.Random(cfg.seed)
    lattices = lattices_by_dimension(rng)
    for _ in range(cfg.trials):
        lat = rng.choice(lattices)
        s = random_similarity(rng, lat)
        try:
            normalize_to_coincidence(compose(s, s))
            ok = True
        except ValueError:
            ok = False
        rep.record("square_is_coincidence", ok, lambda: {"T": _mat_str(s.T)})
        if lat.dim % 2:
            rep.record("odd_dimension_collapse", eta_of(s).is_identity, lambda: {"T": _mat_str(s.T)})


def suite_z2(cfg: VerifyConfig, rep: SuiteReport) -> None:
    rng = random.Random(cfg.seed)
    z2 = square_lattice(2)
    for _ in range(cfg.trials):
        z = random_gauss(rng, 10_000)
        q = direction_square(z)
        c = soc_matrix(q)
        rep.record("soc_matrix_is_coincidence", c.multiplier == 1, lambda: {"z": str(z)})
        f = soc_factorize(q)
        rep.record("soc_round_trip", f.reconstruct() == q, lambda: {"q": str(q)})
        rep.record(
            "squaring_bridge",
            sos_square_to_soc(sos_decompose(z)) == f,
            lambda: {"z": str(z)},
        )
        w = random_gauss(rng, 10_000)
        qw = direction_square(w)
        rep.record(
            "factorization_homomorphism",
            soc_factorize(q * qw) == f * soc_factorize(qw),
            lambda: {"z": str(z), "w": str(w)},
        )
        s = validate_similarity(z2, gauss_matrix(z))
        rep.record("similarity_multiplier_is_norm", s.multiplier == z.norm(), lambda: {"z": str(z)})
        g = gauss_gcd(z, z.conjugate())
        rep.record(
            "conjugate_gcd_divides",
            not z.divmod(g)[1] and not z.conjugate().divmod(g)[1],
            lambda: {"z": str(z)},
        )
    for f in enumerate_soc_z2(100):
        q = f.reconstruct()
        pair = coincidence_index(soc_matrix(q))
        sigma = coincidence_index_z2(f)
        rep.record(
            "index_matches_oracle",
            (pair.sigma1, pair.sigma2) == (sigma, sigma) == residue_sigma(soc_matrix(q).T),
            lambda: {"q": str(q)},
        )
    # every rational rotation matrix comes from a unit-modulus Gaussian rational
    for _ in range(cfg.trials):
        c = soc_matrix(direction_square(random_gauss(rng, 10_000)))
        x, y = c.T[0][0], c.T[1][0]
        den = x.denominator * y.denominator
        q = GaussRational(GaussInt(int(x * den), int(y * den)), den)
        try:
            soc_factorize(q)
            ok = True
        except ValueError:
            ok = False
        rep.record("rational_rotation_factorizes", ok, lambda: {"T": _mat_str(c.T)})


SUITES: dict[str, Callable[[VerifyConfig, SuiteReport], None]] = {
    "commensurate": suite_commensurate,
    "scal": suite_scal,
    "eta": suite_eta,
    "square_closure": suite_square_closure,
    "z2": suite_z2,
}


def run_suite(name: str, cfg: VerifyConfig | None = None) -> list[SuiteReport]:
    cfg = cfg or VerifyConfig()
    names: Iterator[str] = iter(SUITES) if name == "all" else iter([name])
    reports = []
    for n in names:
        if n not in SUITES:
            raise KeyError(n)
        rep = SuiteReport(n)
        SUITES[n](cfg, rep)
        reports.append(rep)
    return reports
