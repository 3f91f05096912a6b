"""Verification suites and the reproducible report pipeline.

`run_suite` executes the layered checks (algebra axioms, representation,
torus, action, duality, endomorphisms) for each requested k and returns a
:class:`VerificationReport`. All sampling is driven by per-purpose seeded
generators, so two runs with the same config produce identical reports.
The JSON emission is byte-stable by default: the per-suite ``ms`` field is
kept in the schema but emitted as null unless timings are explicitly
requested, because wall-clock values are the one thing that cannot be
reproducible.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from ._version import __version__
from .action import (
    act,
    apply_matrix,
    group_lattice_matrix,
    preserves_lattice,
    translation_system,
    verify_two_torsion,
)
from .clifford import (
    CliffordElement,
    GeneratorGroupElement,
    Signature,
    element_order,
    generator_group,
)
from .endo import (
    automorphism_containment,
    decomposition_witness,
    endo_rank,
    representation_determinants_match,
    subring_index,
    transport_multiplication,
    transport_table,
)
from .errors import EnumerationTooLargeError, NotIntegralError
from .exprs import element_source
from .matrices import Matrix
from .picard import (
    BundleClass,
    bundle_action,
    bundle_system,
    bundle_to_point,
    point_to_bundle,
    two_torsion_bundle_check,
)
from .scalars import GaussianRational
from .spinrep import (
    RepresentationTable,
    build_generators,
    verify_algebra_iso,
    verify_spin_preserves_form,
    verify_unitary,
)
from .torus import (
    DEFAULT_ENUMERATION_CAP,
    LatticeSpec,
    PolarizationData,
    TorusPoint,
    polarization_type,
    riemann_check,
    torsion_count,
    torsion_points,
)

ALL_SUITES = (
    "clifford_core",
    "spinor_rep",
    "spinor_torus",
    "clifford_action",
    "dual_picard",
    "endo_decomp",
)

_TORUS_SUITES = frozenset(
    {"spinor_torus", "clifford_action", "dual_picard", "endo_decomp"}
)

SUITE_STATEMENTS: dict[str, tuple[str, ...]] = {
    "clifford_core": (
        "(uv)w = u(vw)",
        "star is an anti-automorphism: (uv)* = v* u* and u** = u",
        "grade projections decompose every element",
        "the signed blades form a group with element orders in {1, 2, 4}",
        "the Z[i]-span of the blades is closed under the product",
    ),
    "spinor_rep": (
        "gamma_a gamma_b + gamma_b gamma_a = 2 delta_ab q(e_a) Id",
        "the 4^k blade images are linearly independent, so the module map is an isomorphism onto the matrix algebra",
        "the module map is a ring homomorphism",
        "the image of u* is the conjugate transpose of the image of u",
        "products of unit vectors act by unitary matrices",
    ),
    "spinor_torus": (
        "E = Im H is integer valued on the lattice",
        "E(iv, iw) = E(v, w)",
        "H is positive definite",
        "the polarization type is (1, ..., 1)",
        "the n-torsion subgroup has n^(2g) points",
    ),
    "clifford_action": (
        "g p = p + M, g^2 p = p + M + N, g^3 p = p + N, g^4 p = p",
        "2p + M + N = 0 on the torus",
        "order-2 actors satisfy N = -M",
        "on two-torsion points N = M and 2M = 0",
    ),
    "dual_picard": (
        "the polarization pairing is a group isomorphism onto the dual torus",
        "duality intertwines the action: phi(g p) equals the induced action on phi(p)",
        "the four translation bundles step through L_M, L_M x L_N, L_N, O",
        "(L dual)^2 = L_M x L_N",
        "order-2 classes give L_N = L_M with L_M 2-torsion",
    ),
    "endo_decomp": (
        "the rational determinant equals the Gaussian norm of the analytic one",
        "the realified images of the 2*4^k integral basis elements span rank 2^(2k+1)",
        "the Smith-divisor product of the image lattice equals the flattening determinant norm",
        "the scalar i acts as i * Id, an order-4 automorphism splitting the torus into 2^k curves of j-invariant 1728",
        "every signed blade acts as an invertible lattice self-map",
    ),
}


@dataclass
class SuiteConfig:
    ks: tuple[int, ...] = (1, 2, 3)
    signature: tuple[int, int] | None = None
    lattice: LatticeSpec | None = None
    seed: int = 1729
    cap: int = DEFAULT_ENUMERATION_CAP
    points_per_k: int = 100
    classes_per_k: int = 100
    suites: tuple[str, ...] = ALL_SUITES
    strict: bool = False


@dataclass
class Failure:
    inputs: dict[str, str]
    expected: str
    actual: str


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    failures: list[Failure]
    ms: float | None = None
    skipped: bool = False
    reason: str = ""
    details: dict | None = None


@dataclass
class VerificationReport:
    meta: dict
    suites: list[SuiteResult]
    index: dict | None
    warnings: list[str]

    def all_passed(self) -> bool:
        return all(s.passed for s in self.suites if not s.skipped)

    def index_gap(self) -> bool:
        """True when the endomorphism audit found a proper containment."""
        if not self.index:
            return False
        per_k = self.index.get("per_k", {})
        return any(entry.get("index") != "1" for entry in per_k.values())


class _Checker:
    def __init__(self, name: str) -> None:
        self.name = name
        self.checks = 0
        self.failures: list[Failure] = []
        self.details: dict | None = None

    def record(self, ok: bool, inputs: dict, expected: object, actual: object) -> bool:
        self.checks += 1
        if not ok:
            self.failures.append(
                Failure(
                    inputs={key: str(value) for key, value in inputs.items()},
                    expected=str(expected),
                    actual=str(actual),
                )
            )
        return ok

    def result(self) -> SuiteResult:
        return SuiteResult(
            name=self.name,
            passed=not self.failures,
            checks=self.checks,
            failures=self.failures,
            details=self.details,
        )


@dataclass
class _Env:
    k: int
    sig: Signature
    table: RepresentationTable
    lattice: LatticeSpec
    pol: PolarizationData
    config: SuiteConfig
    warnings: list[str]
    index_out: dict

    def rng(self, tag: str) -> random.Random:
        return random.Random(f"{self.config.seed}|{self.k}|{tag}")


def _unit_fraction(rng: random.Random) -> Fraction:
    denominator = rng.randint(1, 64)
    return Fraction(rng.randint(0, denominator - 1), denominator)


def _signed_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-64, 64), rng.randint(1, 64))


def _random_gaussian(rng: random.Random) -> GaussianRational:
    return GaussianRational(_signed_fraction(rng), _signed_fraction(rng))


def _random_point(lattice: LatticeSpec, rng: random.Random) -> TorusPoint:
    coords = [
        GaussianRational(_unit_fraction(rng), _unit_fraction(rng))
        for _ in range(lattice.dim)
    ]
    return TorusPoint(lattice, coords)


def _random_element(sig: Signature, rng: random.Random) -> CliffordElement:
    masks = rng.sample(range(1 << sig.n), rng.randint(1, 3))
    return CliffordElement(sig, {mask: _random_gaussian(rng) for mask in masks})


def _random_integral_element(sig: Signature, rng: random.Random) -> CliffordElement:
    masks = rng.sample(range(1 << sig.n), rng.randint(1, 3))
    return CliffordElement(
        sig,
        {
            mask: GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3))
            for mask in masks
        },
    )


def _random_group_element(sig: Signature, rng: random.Random) -> GeneratorGroupElement:
    return GeneratorGroupElement(rng.randrange(1 << sig.n), rng.randrange(4))


def _random_bundle(k: int, rng: random.Random) -> BundleClass:
    return BundleClass(k, [_unit_fraction(rng) for _ in range(2 << k)])


def _random_ambient(lattice: LatticeSpec, rng: random.Random) -> tuple[GaussianRational, ...]:
    return tuple(
        GaussianRational(_signed_fraction(rng), _signed_fraction(rng))
        for _ in range(lattice.dim)
    )


def _run_clifford_core(env: _Env) -> SuiteResult:
    chk = _Checker(f"clifford_core:k={env.k}")
    sig = env.sig
    rng = env.rng("core")

    for _ in range(25):
        u, v, w = (_random_element(sig, rng) for _ in range(3))
        inputs = {
            "k": env.k,
            "u": element_source(u),
            "v": element_source(v),
            "w": element_source(w),
        }
        chk.record(
            (u * v) * w == u * (v * w),
            inputs,
            element_source((u * v) * w),
            element_source(u * (v * w)),
        )

    for _ in range(25):
        u, v = _random_element(sig, rng), _random_element(sig, rng)
        inputs = {"k": env.k, "u": element_source(u), "v": element_source(v)}
        chk.record(
            u.star().star() == u,
            inputs,
            element_source(u),
            element_source(u.star().star()),
        )
        chk.record(
            (u * v).star() == v.star() * u.star(),
            inputs,
            element_source((u * v).star()),
            element_source(v.star() * u.star()),
        )

    for _ in range(25):
        u = _random_element(sig, rng)
        total = CliffordElement.zero(sig)
        pure = True
        for grade in range(sig.n + 1):
            piece = u.grade_project(grade)
            total = total + piece
            if not piece.is_zero() and piece.grades() != {grade}:
                pure = False
        chk.record(
            total == u and pure,
            {"k": env.k, "u": element_source(u)},
            element_source(u),
            element_source(total),
        )

    group = generator_group(sig)
    chk.record(
        len(group) == 1 << (sig.n + 2),
        {"k": env.k},
        1 << (sig.n + 2),
        len(group),
    )
    members = set(group)
    closure_ok = True
    inverse_ok = True
    order_ok = True
    for g in group:
        if not g.inverse(sig).mul(g, sig).is_identity():
            inverse_ok = False
        order = element_order(g, sig)
        if order not in (1, 2, 4):
            order_ok = False
        element = g.to_element(sig)
        if element**order != CliffordElement.scalar(sig, 1):
            order_ok = False
        if order > 1 and element ** (order // 2) == CliffordElement.scalar(sig, 1):
            order_ok = False
        for h in group:
            if g.mul(h, sig) not in members:
                closure_ok = False
    chk.record(closure_ok, {"k": env.k}, "group closed under products", closure_ok)
    chk.record(inverse_ok, {"k": env.k}, "every element has an inverse", inverse_ok)
    chk.record(order_ok, {"k": env.k}, "orders in {1, 2, 4} and minimal", order_ok)

    for _ in range(25):
        u = _random_integral_element(sig, rng)
        v = _random_integral_element(sig, rng)
        chk.record(
            (u * v).is_gaussian_integral() and (u + v).is_gaussian_integral(),
            {"k": env.k, "u": element_source(u), "v": element_source(v)},
            "integral closure",
            element_source(u * v),
        )

    return chk.result()


_UNIT_CIRCLE = ((Fraction(3, 5), Fraction(4, 5)), (Fraction(5, 13), Fraction(12, 13)), (Fraction(8, 17), Fraction(15, 17)))


def _run_spinor_rep(env: _Env) -> SuiteResult:
    chk = _Checker(f"spinor_rep:k={env.k}")
    sig = env.sig
    table = env.table
    rng = env.rng("rep")
    identity = Matrix.identity(table.dim)

    relations_ok = True
    for a in range(sig.n):
        for b in range(a, sig.n):
            anti = table.gamma[a] @ table.gamma[b] + table.gamma[b] @ table.gamma[a]
            expected = (
                identity * (2 * sig.square_sign(a + 1))
                if a == b
                else Matrix.zero(table.dim, table.dim)
            )
            if anti != expected:
                relations_ok = False
    chk.record(relations_ok, {"k": env.k}, "Clifford relations", relations_ok)
    entries_ok = all(g.is_gaussian_integer() for g in table.gamma)
    chk.record(entries_ok, {"k": env.k}, "generator entries in Z[i]", entries_ok)

    iso = verify_algebra_iso(table)
    chk.record(
        iso.independent,
        {"k": env.k},
        iso.expected_rank,
        iso.spanning_rank,
    )

    for _ in range(20):
        u, v = _random_element(sig, rng), _random_element(sig, rng)
        inputs = {"k": env.k, "u": element_source(u), "v": element_source(v)}
        chk.record(
            table.represent(u * v) == table.represent(u) @ table.represent(v),
            inputs,
            "multiplicative image",
            "image mismatch",
        )
        chk.record(
            table.represent(u + v) == table.represent(u) + table.represent(v),
            inputs,
            "additive image",
            "image mismatch",
        )

    unitary = verify_unitary(table)
    if sig.is_positive_definite():
        chk.record(
            unitary.all_compatible,
            {"k": env.k, "checked": unitary.checked},
            "image of star equals adjoint on all basis elements",
            f"failures: {', '.join(unitary.failures) or 'none'}",
        )
    else:
        chk.record(True, {"k": env.k}, "informational", "informational")
        if unitary.failures:
            env.warnings.append(
                f"k={env.k}: adjoint compatibility fails for "
                f"{len(unitary.failures)} of {unitary.checked} basis elements, "
                f"as expected for signature ({sig.p},{sig.q})"
            )

    if sig.is_positive_definite():
        for _ in range(10):
            a, b = rng.sample(range(1, sig.n + 1), 2)
            ca, cb = rng.choice(_UNIT_CIRCLE)
            vector = CliffordElement(
                sig, {1 << (a - 1): GaussianRational(ca), 1 << (b - 1): GaussianRational(cb)}
            )
            other = CliffordElement.generator(sig, rng.randint(1, sig.n))
            chk.record(
                verify_spin_preserves_form(table, [vector, other]),
                {
                    "k": env.k,
                    "v1": element_source(vector),
                    "v2": element_source(other),
                },
                "unitary image",
                "form not preserved",
            )

    return chk.result()


def _run_spinor_torus(env: _Env) -> SuiteResult:
    chk = _Checker(f"spinor_torus:k={env.k}")
    lattice = env.lattice
    pol = env.pol
    rng = env.rng("torus")
    g = lattice.dim

    riemann = riemann_check(pol)
    chk.record(riemann.integral, {"k": env.k}, "integral on the lattice", riemann.integral)
    chk.record(
        riemann.complex_compatible,
        {"k": env.k},
        "invariant under multiplication by i",
        riemann.complex_compatible,
    )
    chk.record(riemann.positive, {"k": env.k}, "positive definite", riemann.positive)

    ptype = polarization_type(pol)
    chk.record(
        ptype == (1,) * g,
        {"k": env.k},
        str((1,) * g),
        str(ptype),
    )

    if lattice.is_default:
        expected_form = [
            [0] * g + [-1 if a == b else 0 for b in range(g)] for a in range(g)
        ] + [[1 if a == b else 0 for b in range(g)] + [0] * g for a in range(g)]
        chk.record(
            pol.integer_form() == expected_form,
            {"k": env.k},
            "standard alternating block form",
            str(pol.integer_form()),
        )

    for _ in range(25):
        p, q, r = (_random_point(lattice, rng) for _ in range(3))
        inputs = {"k": env.k, "p": str(p), "q": str(q), "r": str(r)}
        chk.record((p + q) + r == p + (q + r), inputs, "associative addition", "mismatch")
        chk.record(p + q == q + p, inputs, "commutative addition", "mismatch")
        chk.record(p + (-p) == TorusPoint.zero(lattice), inputs, "negation", str(p + (-p)))

    for _ in range(25):
        ambient = _random_ambient(lattice, rng)
        reduced = lattice.reduce(ambient)
        chk.record(
            lattice.reduce(reduced.lift()) == reduced,
            {"k": env.k, "ambient": ", ".join(str(x) for x in ambient)},
            str(reduced),
            str(lattice.reduce(reduced.lift())),
        )

    unit_i = GaussianRational(0, 1)
    for _ in range(10):
        p = _random_point(lattice, rng)
        via_ambient = lattice.reduce(tuple(unit_i * x for x in p.lift()))
        chk.record(
            p.scale(unit_i) == via_ambient,
            {"k": env.k, "p": str(p)},
            str(via_ambient),
            str(p.scale(unit_i)),
        )

    for n in (1, 2, 3):
        expected = torsion_count(n, env.k)
        if expected > env.config.cap:
            try:
                torsion_points(n, lattice, cap=env.config.cap)
                chk.record(False, {"k": env.k, "n": n}, "EnumerationTooLargeError", "no error")
            except EnumerationTooLargeError:
                chk.record(True, {"k": env.k, "n": n}, "EnumerationTooLargeError", "raised")
            continue
        count = 0
        orders_divide = True
        for point in torsion_points(n, lattice, cap=env.config.cap):
            count += 1
            if not (point * n).is_zero():
                orders_divide = False
        chk.record(count == expected, {"k": env.k, "n": n}, expected, count)
        chk.record(
            orders_divide, {"k": env.k, "n": n}, "every point killed by n", orders_divide
        )

    return chk.result()


def _order_partition(sig: Signature) -> tuple[list[GeneratorGroupElement], list[GeneratorGroupElement]]:
    """Group elements of order exactly 4, and of order exactly 2."""
    order4 = []
    order2 = []
    for g in generator_group(sig):
        order = element_order(g, sig)
        if order == 4:
            order4.append(g)
        elif order == 2:
            order2.append(g)
    return order4, order2


def _run_clifford_action(env: _Env) -> SuiteResult:
    chk = _Checker(f"clifford_action:k={env.k}")
    sig = env.sig
    table = env.table
    lattice = env.lattice
    rng = env.rng("action")

    for _ in range(20):
        h = _random_integral_element(sig, rng)
        ambient = _random_ambient(lattice, rng)
        if not preserves_lattice(h, table, lattice):
            continue
        matrix = table.represent(h)
        direct = lattice.reduce(matrix.matvec(ambient))
        through_quotient = act(h, lattice.reduce(ambient), table)
        chk.record(
            direct == through_quotient,
            {
                "k": env.k,
                "element": element_source(h),
                "ambient": ", ".join(str(x) for x in ambient),
            },
            str(direct),
            str(through_quotient),
        )

    for _ in range(20):
        g1 = _random_group_element(sig, rng)
        g2 = _random_group_element(sig, rng)
        p = _random_point(lattice, rng)
        composed = act(g1.mul(g2, sig).to_element(sig), p, table)
        chained = act(g1.to_element(sig), act(g2.to_element(sig), p, table), table)
        chk.record(
            composed == chained,
            {
                "k": env.k,
                "first": element_source(g1.to_element(sig)),
                "second": element_source(g2.to_element(sig)),
                "point": str(p),
            },
            str(composed),
            str(chained),
        )

    half_e1 = CliffordElement.generator(sig, 1) * Fraction(1, 2)
    try:
        act(half_e1, TorusPoint.zero(lattice), table)
        chk.record(False, {"k": env.k}, "NotIntegralError", "no error")
    except NotIntegralError:
        chk.record(True, {"k": env.k}, "NotIntegralError", "raised")

    order4, order2 = _order_partition(sig)
    points = [_random_point(lattice, rng) for _ in range(env.config.points_per_k)]
    mixed_phase = sum(1 for g in order4 if g.i_power % 2 == 1)

    systems_ok = True
    for g in order4:
        actor_src = element_source(g.to_element(sig))
        for p in points:
            system = translation_system(g, p, table)
            inputs = {"k": env.k, "actor": actor_src, "point": str(p)}
            ok = chk.record(
                system.four_step_holds(),
                inputs,
                "orbit matches p, p+M, p+M+N, p+N, p",
                " | ".join(str(q) for q in system.orbit),
            )
            ok = (
                chk.record(
                    system.closure_identity_holds(),
                    inputs,
                    "2p + M + N = 0",
                    str(system.base + system.base + system.first_translation + system.second_translation),
                )
                and ok
            )
            systems_ok = systems_ok and ok
    if mixed_phase:
        env.warnings.append(
            f"k={env.k}: {mixed_phase} of {len(order4)} order-4 actors carry phase "
            "i or -i; the four-step translation statement covers plain blades, and "
            "the phased actors are verified to satisfy it identically"
        )

    degenerate_points = points[:10]
    for g in order2:
        actor_src = element_source(g.to_element(sig))
        for p in degenerate_points:
            system = translation_system(g, p, table)
            chk.record(
                system.degenerate_pair_holds(),
                {"k": env.k, "actor": actor_src, "point": str(p)},
                "N = -M and the orbit closes after two steps",
                str(system.second_translation),
            )

    actors = order4 + order2
    if env.k <= 2:
        for g in actors:
            report = verify_two_torsion(g, table, lattice, cap=env.config.cap)
            chk.record(
                report.all_pass,
                {
                    "k": env.k,
                    "actor": element_source(g.to_element(sig)),
                    "checked": report.checked,
                },
                "N = M and 2M = 0 on all two-torsion points",
                f"failing points: {', '.join(report.failures) or 'none'}",
            )
    else:
        sample_rng = env.rng("two-torsion-sample")
        half = Fraction(1, 2)
        sampled = [
            TorusPoint(
                lattice,
                tuple(
                    GaussianRational(
                        half * sample_rng.randrange(2), half * sample_rng.randrange(2)
                    )
                    for _ in range(lattice.dim)
                ),
            )
            for _ in range(100)
        ]
        for g in actors:
            matrix = group_lattice_matrix(g, table, lattice)
            ok = True
            witness = ""
            for eps in sampled:
                first = apply_matrix(matrix, eps)
                second = apply_matrix(matrix, first)
                m = first - eps
                if second - first != m or not (m + m).is_zero():
                    ok = False
                    witness = str(eps)
                    break
            chk.record(
                ok,
                {
                    "k": env.k,
                    "actor": element_source(g.to_element(sig)),
                    "sampled": len(sampled),
                },
                "N = M and 2M = 0 on sampled two-torsion points",
                f"failing point: {witness or 'none'}",
            )
        env.warnings.append(
            f"k={env.k}: two-torsion scan used 100 seeded points per actor; "
            "the exhaustive scan runs at k <= 2"
        )

    return chk.result()


def _run_dual_picard(env: _Env) -> SuiteResult:
    chk = _Checker(f"dual_picard:k={env.k}")
    sig = env.sig
    table = env.table
    lattice = env.lattice
    pol = env.pol
    rng = env.rng("dual")

    for _ in range(25):
        p = _random_point(lattice, rng)
        roundtrip = bundle_to_point(point_to_bundle(p, pol), pol)
        chk.record(
            roundtrip == p,
            {"k": env.k, "point": str(p)},
            str(p),
            str(roundtrip),
        )
        bundle = _random_bundle(env.k, rng)
        back = point_to_bundle(bundle_to_point(bundle, pol), pol)
        chk.record(
            back == bundle,
            {"k": env.k, "bundle": str(bundle)},
            str(bundle),
            str(back),
        )

    for _ in range(15):
        p, q = _random_point(lattice, rng), _random_point(lattice, rng)
        chk.record(
            point_to_bundle(p + q, pol)
            == point_to_bundle(p, pol).tensor(point_to_bundle(q, pol)),
            {"k": env.k, "p": str(p), "q": str(q)},
            "duality is a homomorphism",
            "mismatch",
        )

    for _ in range(25):
        h = _random_group_element(sig, rng)
        p = _random_point(lattice, rng)
        left = point_to_bundle(act(h.to_element(sig), p, table), pol)
        right = bundle_action(h.to_element(sig), point_to_bundle(p, pol), table, pol)
        chk.record(
            left == right,
            {
                "k": env.k,
                "element": element_source(h.to_element(sig)),
                "point": str(p),
            },
            str(left),
            str(right),
        )

    for _ in range(25):
        p = _random_point(lattice, rng)
        chk.record(
            point_to_bundle(p, pol).order() == p.order(),
            {"k": env.k, "point": str(p)},
            p.order(),
            point_to_bundle(p, pol).order(),
        )

    order4, order2 = _order_partition(sig)
    histogram: dict[str, list[int]] = {}
    # The actor count grows 4x per k while each system costs more, so the
    # per-actor sample shrinks at k=3; every order-4 actor is still covered.
    per_actor = env.config.classes_per_k if env.k <= 2 else max(1, env.config.classes_per_k // 12)
    bundles = [_random_bundle(env.k, rng) for _ in range(per_actor)]
    for g in order4:
        actor_src = element_source(g.to_element(sig))
        observed: set[int] = set()
        for bundle in bundles:
            system = bundle_system(g, bundle, table, pol)
            observed.add(system.first_bundle.order())
            chk.record(
                system.holds(),
                {"k": env.k, "actor": actor_src, "bundle": str(bundle)},
                "four-step bundle system and dual-square identity",
                f"steps: {' | '.join(str(s) for s in system.steps)}",
            )
        histogram[g.label()] = sorted(observed)
    chk.details = {"translation_bundle_orders": histogram}

    if env.k <= 2:
        half = Fraction(1, 2)
        two_torsion_classes = [
            BundleClass(env.k, chars)
            for chars in itertools.product((Fraction(0), half), repeat=2 << env.k)
        ]
        for g in order4 + order2:
            ok = True
            witness = ""
            actor_matrix = group_lattice_matrix(g, table, lattice)
            for bundle in two_torsion_classes:
                if not two_torsion_bundle_check(g, bundle, table, pol, actor_matrix):
                    ok = False
                    witness = str(bundle)
                    break
            chk.record(
                ok,
                {
                    "k": env.k,
                    "actor": element_source(g.to_element(sig)),
                    "classes": len(two_torsion_classes),
                },
                "translation bundles agree and are 2-torsion",
                f"failing class: {witness or 'none'}",
            )
    else:
        env.warnings.append(
            f"k={env.k}: the exhaustive order-2 bundle scan runs at k <= 2"
        )

    return chk.result()


def _run_endo_decomp(env: _Env) -> SuiteResult:
    chk = _Checker(f"endo_decomp:k={env.k}")
    sig = env.sig
    table = env.table
    lattice = env.lattice
    rng = env.rng("endo")

    determinants_ok = True
    for t in (0, 1):
        for mask in range(1 << sig.n):
            element = GeneratorGroupElement(mask, t).to_element(sig)
            if not representation_determinants_match(element, table, lattice):
                determinants_ok = False
    chk.record(
        determinants_ok,
        {"k": env.k},
        "rational determinant equals the Gaussian norm of the analytic one",
        determinants_ok,
    )

    rank = endo_rank(table, lattice)
    chk.record(rank == 1 << (2 * env.k + 1), {"k": env.k}, 1 << (2 * env.k + 1), rank)

    audit = subring_index(table, lattice)
    chk.record(
        audit.consistent,
        {"k": env.k},
        f"Smith product {audit.index_str}",
        f"determinant norm {audit.determinant_norm}",
    )
    if env.k == 1:
        chk.record(audit.index == 16, {"k": env.k}, 16, audit.index_str)
    if audit.index != 1:
        env.warnings.append(
            f"k={env.k}: the algebra image sits at index {audit.index_str} inside "
            f"the full endomorphism ring (Smith divisors {list(audit.smith_divisors)})"
        )
    env.index_out[env.k] = {
        "smith_divisors": list(audit.smith_divisors),
        "index": audit.index_str,
        "determinant_norm": str(audit.determinant_norm),
        "consistent": audit.consistent,
    }

    witness = decomposition_witness(table, lattice)
    chk.record(
        witness.analytic_matrix
        == Matrix.identity(table.dim) * GaussianRational(0, 1),
        {"k": env.k},
        "i acts as i * identity",
        str(witness.analytic_matrix),
    )
    chk.record(witness.order == 4, {"k": env.k}, 4, witness.order)
    if witness.basis_map is not None:
        split_ok = True
        for _ in range(10):
            p, q = _random_point(lattice, rng), _random_point(lattice, rng)
            left = witness.split(p + q)
            right = tuple(
                (a + b).mod1() for a, b in zip(witness.split(p), witness.split(q))
            )
            if left != right:
                split_ok = False
        chk.record(
            split_ok,
            {"k": env.k},
            "coordinate projections are homomorphisms onto the factor curves",
            split_ok,
        )

    contained = automorphism_containment(table, lattice)
    chk.record(
        contained,
        {"k": env.k},
        "every generator-group element is an invertible lattice self-map",
        contained,
    )

    if env.k == 1:
        conjugator = Matrix([[1, GaussianRational(0, 1)], [0, 1]])
        moved = transport_table(conjugator, table)
        multiplicative_ok = True
        for _ in range(10):
            u = _random_integral_element(sig, rng)
            v = _random_integral_element(sig, rng)
            lhs = transport_multiplication(conjugator, u * v, table)
            rhs = (
                transport_multiplication(conjugator, u, table)
                @ transport_multiplication(conjugator, v, table)
            )
            if lhs != rhs:
                multiplicative_ok = False
        chk.record(
            multiplicative_ok,
            {"k": env.k, "conjugator": "[[1, i], [0, 1]]"},
            "transported multiplication is multiplicative",
            multiplicative_ok,
        )

        order4, order2 = _order_partition(sig)
        transported_ok = True
        points = [_random_point(lattice, rng) for _ in range(env.config.points_per_k)]
        for g in order4:
            for p in points:
                system = translation_system(g, p, moved)
                if not (system.four_step_holds() and system.closure_identity_holds()):
                    transported_ok = False
        for g in order4 + order2:
            if not verify_two_torsion(g, moved, lattice, cap=env.config.cap).all_pass:
                transported_ok = False
        chk.record(
            transported_ok,
            {"k": env.k, "conjugator": "[[1, i], [0, 1]]"},
            "translation systems and two-torsion scan pass on the transported action",
            transported_ok,
        )

    return chk.result()


_RUNNERS: dict[str, Callable[[_Env], SuiteResult]] = {
    "clifford_core": _run_clifford_core,
    "spinor_rep": _run_spinor_rep,
    "spinor_torus": _run_spinor_torus,
    "clifford_action": _run_clifford_action,
    "dual_picard": _run_dual_picard,
    "endo_decomp": _run_endo_decomp,
}


def run_suite(config: SuiteConfig | None = None) -> VerificationReport:
    """Run the configured verification suites and collect a report."""
    config = config or SuiteConfig()
    ks = tuple(config.ks)
    if not ks or any(k < 1 for k in ks) or list(ks) != sorted(set(ks)):
        raise ValueError("ks must be a strictly increasing tuple of positive integers")
    if config.signature is not None and len(ks) != 1:
        raise ValueError("an explicit signature needs a single k")
    if config.lattice is not None and (len(ks) != 1 or config.lattice.k != ks[0]):
        raise ValueError("a custom lattice needs a single matching k")
    unknown = [name for name in config.suites if name not in ALL_SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {unknown}")

    warnings: list[str] = []
    results: list[SuiteResult] = []
    index_out: dict[int, dict] = {}
    signatures: list[str] = []
    description = ""

    for k in ks:
        sig = Signature(*config.signature) if config.signature else Signature(2 * k, 0)
        if sig.k != k:
            raise ValueError(f"signature {config.signature} does not match k={k}")
        signatures.append(f"{sig.p},{sig.q}")
        table = build_generators(k, sig)
        description = table.description
        lattice = config.lattice or LatticeSpec.default(k)
        pol = PolarizationData.default(lattice)
        env = _Env(
            k=k,
            sig=sig,
            table=table,
            lattice=lattice,
            pol=pol,
            config=config,
            warnings=warnings,
            index_out=index_out,
        )
        for name in ALL_SUITES:
            if name not in config.suites:
                continue
            label = f"{name}:k={k}"
            if name in _TORUS_SUITES and not sig.is_positive_definite():
                results.append(
                    SuiteResult(
                        name=label,
                        passed=True,
                        checks=0,
                        failures=[],
                        skipped=True,
                        reason="needs a positive-definite signature",
                    )
                )
                continue
            started = time.perf_counter()
            result = _RUNNERS[name](env)
            result.ms = (time.perf_counter() - started) * 1000.0
            results.append(result)

    if config.lattice is None:
        lattice_meta: object = "default"
    else:
        lattice_meta = [
            [str(x) for x in row] for row in config.lattice.basis.entries()
        ]
    meta = {
        "k": list(ks),
        "signature": signatures,
        "lattice": lattice_meta,
        "seed": config.seed,
        "version": __version__,
        "cap": config.cap,
        "points_per_k": config.points_per_k,
        "classes_per_k": config.classes_per_k,
        "suites": list(config.suites),
        "strict": config.strict,
        "representation": description,
    }

    index: dict | None = None
    if index_out:
        smallest = min(index_out)
        index = {
            "smith_divisors": index_out[smallest]["smith_divisors"],
            "index": index_out[smallest]["index"],
            "determinant_norm": index_out[smallest]["determinant_norm"],
            "per_k": {str(k): index_out[k] for k in sorted(index_out)},
        }

    return VerificationReport(meta=meta, suites=results, index=index, warnings=warnings)


def report_document(report: VerificationReport, include_timings: bool = False) -> dict:
    """The JSON-ready dictionary form of a report, in stable field order."""
    suites = []
    for s in report.suites:
        entry: dict = {
            "name": s.name,
            "passed": s.passed,
            "checks": s.checks,
            "failures": [
                {"inputs": f.inputs, "expected": f.expected, "actual": f.actual}
                for f in s.failures
            ],
            "ms": round(s.ms, 3) if include_timings and s.ms is not None else None,
        }
        if s.skipped:
            entry["skipped"] = True
            entry["reason"] = s.reason
        if s.details:
            entry["details"] = s.details
        statements = SUITE_STATEMENTS.get(s.name.split(":", 1)[0])
        if statements and not s.skipped:
            entry["statements"] = list(statements)
        suites.append(entry)
    return {
        "meta": report.meta,
        "suites": suites,
        "index": report.index,
        "warnings": report.warnings,
    }


def report_from_document(doc: dict) -> VerificationReport:
    """Rebuild a report from its JSON document form (for re-emission)."""
    suites = []
    for entry in doc["suites"]:
        failures = [
            Failure(inputs=dict(f["inputs"]), expected=f["expected"], actual=f["actual"])
            for f in entry["failures"]
        ]
        suites.append(
            SuiteResult(
                name=entry["name"],
                passed=entry["passed"],
                checks=entry["checks"],
                failures=failures,
                ms=entry.get("ms"),
                skipped=entry.get("skipped", False),
                reason=entry.get("reason", ""),
                details=entry.get("details"),
            )
        )
    return VerificationReport(
        meta=dict(doc["meta"]),
        suites=suites,
        index=doc.get("index"),
        warnings=list(doc.get("warnings", [])),
    )


def emit_report(
    report: VerificationReport,
    fmt: str = "json",
    include_timings: bool = False,
) -> bytes:
    """Serialize a report. JSON output is byte-stable unless timings are included."""
    if fmt == "json":
        doc = report_document(report, include_timings=include_timings)
        return (json.dumps(doc, indent=2) + "\n").encode("utf-8")
    if fmt == "text":
        return _render_text(report).encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}")


def _render_text(report: VerificationReport) -> str:
    lines = []
    meta = report.meta
    lines.append(
        f"verification report (version {meta['version']}, seed {meta['seed']})"
    )
    lines.append(
        f"k = {meta['k']}, signature = {meta['signature']}, lattice = "
        + ("default" if meta["lattice"] == "default" else "custom")
    )
    for s in report.suites:
        if s.skipped:
            lines.append(f"[SKIP] {s.name:<24} {s.reason}")
            continue
        tag = "PASS" if s.passed else "FAIL"
        ms = f"{s.ms:9.1f} ms" if s.ms is not None else ""
        lines.append(f"[{tag}] {s.name:<24} checks={s.checks:<6} failures={len(s.failures):<4} {ms}")
        for failure in s.failures[:5]:
            lines.append(f"       inputs:   {failure.inputs}")
            lines.append(f"       expected: {failure.expected}")
            lines.append(f"       actual:   {failure.actual}")
        if len(s.failures) > 5:
            lines.append(f"       ... and {len(s.failures) - 5} more failures")
    if report.index:
        lines.append(
            f"index audit: divisors {report.index['smith_divisors']} -> "
            f"{report.index['index']} (determinant route {report.index['determinant_norm']})"
        )
    for warning in report.warnings:
        lines.append(f"warning: {warning}")
    total_checks = sum(s.checks for s in report.suites)
    verdict = "PASS" if report.all_passed() else "FAIL"
    lines.append(f"result: {verdict} ({len(report.suites)} suites, {total_checks} checks)")
    return "\n".join(lines) + "\n"
