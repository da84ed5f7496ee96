"""Verification suites: seeded, reproducible sweeps over the library's
claimed closure properties and identities, each emitting a machine-readable
report.

Every suite draws instances from generators.py with an explicit seed, checks
an exact property, and records any counterexample with enough data to replay
it.  A clean run is the artifact's evidence; reports are deterministic byte
for byte given (suite, max_n, samples, seed).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import ferrers as fe
from . import generators as gen
from . import interlacing as il
from . import posets as po
from . import roots as rt
from . import transforms as tr
from .errors import InputFormatError, UnknownSuiteError
from .polynomial import Polynomial, format_polynomial_text, gcd
from .roots import Rootedness


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    seed: int
    max_n: int
    samples: int
    instances: int
    failures: tuple[dict, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "max_n": self.max_n,
            "samples": self.samples,
            "instances": self.instances,
            "failures": list(self.failures),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)


def report_from_json_dict(data: object) -> VerificationReport:
    if not isinstance(data, dict):
        raise InputFormatError("report must be a JSON object")
    try:
        suite = data["suite"]
        seed = data["seed"]
        instances = data["instances"]
        failures = data["failures"]
    except KeyError as missing:
        raise InputFormatError(f"report is missing key {missing}") from None
    if not isinstance(failures, list):
        raise InputFormatError("failures must be a list")
    return VerificationReport(
        suite=suite,
        seed=seed,
        max_n=data.get("max_n", 0),
        samples=data.get("samples", 0),
        instances=instances,
        failures=tuple(failures),
    )


def _txt(f: Polynomial) -> str:
    return format_polynomial_text(f)


def _fail(inputs: dict, expected: str, got: str) -> dict:
    return {"inputs": inputs, "expected": expected, "got": got}


def _rooted(f: Polynomial) -> bool:
    return rt.is_real_rooted(f) is not Rootedness.NOT_REAL_ROOTED


_NEG_ONE = Fraction(-1)
_ZERO = Fraction(0)


# -- individual suites ---------------------------------------------------------


def _suite_schur(max_n: int, samples: int, rng: random.Random):
    """Coefficientwise factorial product of real-rooted inputs with one-signed
    second roots and nonzero constant terms is real-rooted with simple roots."""
    failures = []
    for _ in range(samples):
        f = gen.random_real_rooted(rng, max_n, avoid_zero_root=True)
        g = gen.random_one_signed(rng, max_n)
        p = tr.schur_product(f, g)
        inputs = {"f": _txt(f), "g": _txt(g)}
        verdict = rt.is_real_rooted(p)
        if verdict is not Rootedness.REAL_SIMPLE:
            failures.append(
                _fail(inputs, "real-rooted, simple", verdict.value)
            )
            continue
        common = gcd(p, p.derivative()) if p.degree >= 1 else None
        if common is not None and common.degree != 0:
            failures.append(
                _fail(inputs, "gcd with derivative constant", _txt(common))
            )
    return samples, failures


def _closure_suite(product: Callable[[Polynomial, Polynomial], Polynomial]):
    def run(max_n: int, samples: int, rng: random.Random):
        failures = []
        for _ in range(samples):
            f = gen.random_interval_rooted(rng, max_n)
            h = gen.random_interval_rooted(rng, max_n)
            p = product(f, h)
            if not rt.roots_in_interval(p, _NEG_ONE, _ZERO):
                failures.append(
                    _fail(
                        {"f": _txt(f), "h": _txt(h)},
                        "all roots of the product in [-1, 0]",
                        _txt(p),
                    )
                )
        return samples, failures

    return run


def _suite_diamond_interlace(max_n: int, samples: int, rng: random.Random):
    """Interlacing survives the diamond product against an interval-rooted
    multiplier; strictly when the inputs are strict and simple."""
    failures = []
    weak = samples // 2
    for i in range(samples):
        strict = i >= weak
        if strict:
            g, f = gen.random_interlacing_pair(rng, max_n, strict=True)
            h = gen.random_interval_rooted(
                rng, max(1, max_n - 1), open_interval=True, simple=True
            )
        else:
            g, f = gen.random_interlacing_pair(rng, max_n)
            h = gen.random_interval_rooted(rng, max_n)
        a = tr.diamond(g, h)
        b = tr.diamond(f, h)
        if not il.interlaces(a, b, strict=strict):
            failures.append(
                _fail(
                    {"g": _txt(g), "f": _txt(f), "h": _txt(h), "strict": strict},
                    "diamond image of g interlaces diamond image of f",
                    f"violated for {_txt(a)} vs {_txt(b)}",
                )
            )
    return samples, failures


def _suite_chain(max_n: int, samples: int, rng: random.Random):
    """Diamond images of the derivative tower of a simple-rooted polynomial
    form a strictly interlacing chain."""
    failures = []
    for _ in range(samples):
        f = gen.random_real_rooted(rng, max_n, simple=True)
        h = gen.random_interval_rooted(
            rng, max(1, max_n - 1), open_interval=True, simple=True
        )
        tower = [f]
        while tower[-1].degree > 0:
            tower.append(tower[-1].derivative())
        images = [tr.diamond(d, h) for d in reversed(tower)]
        if not il.chain_check(images):
            failures.append(
                _fail(
                    {"f": _txt(f), "h": _txt(h)},
                    "derivative images form a strictly interlacing chain",
                    "chain check failed",
                )
            )
    return samples, failures


def _suite_e_operator(max_n: int, samples: int, rng: random.Random):
    """diamond(f, g) equals the basis-change image of the product of the
    basis-change preimages."""
    failures = []
    for i in range(samples):
        if i % 3 == 2:  # algebraic identity, so exercise non-real-rooted too
            f = gen.random_non_real_rooted(rng, max_n)
            g = gen.random_non_real_rooted(rng, max_n)
        else:
            f = gen.random_real_rooted(rng, max_n, standard=False)
            g = gen.random_real_rooted(rng, max_n, standard=False)
        lhs = tr.diamond(f, g)
        rhs = po.e_operator(po.e_inverse(f) * po.e_inverse(g))
        if lhs != rhs:
            failures.append(
                _fail(
                    {"f": _txt(f), "g": _txt(g)},
                    _txt(lhs),
                    _txt(rhs),
                )
            )
        roundtrip = po.e_operator(po.e_inverse(f))
        if roundtrip != f:
            failures.append(
                _fail({"f": _txt(f)}, _txt(f), _txt(roundtrip))
            )
    return samples, failures


def _suite_lphi_identity(max_n: int, samples: int, rng: random.Random):
    """The graded image series agrees with the derivative-substitution
    composite, and commutes with d/dz."""
    failures = []
    for _ in range(samples):
        f = gen.random_real_rooted(rng, max_n, standard=False)
        h = gen.random_interval_rooted(rng, max(1, max_n - 1))
        xi = gen.random_rational(rng, Fraction(-3), Fraction(3))
        inputs = {"f": _txt(f), "h": _txt(h), "xi": str(xi)}
        lhs = tr.lphi_diamond(f, h, xi)
        rhs = tr.hermite_poulain(tr.h_xi(h, xi), f.translate(xi))
        if lhs != rhs:
            failures.append(_fail(inputs, _txt(lhs), _txt(rhs)))
            continue
        d_image = tr.lphi_diamond(f.derivative(), h, xi)
        if lhs.derivative() != d_image:
            failures.append(
                _fail(inputs, _txt(lhs.derivative()), _txt(d_image))
            )
    return samples, failures


def _suite_sp_deletion(max_n: int, samples: int, rng: random.Random):
    """Series-parallel posets: the layer-count polynomial is real-rooted and
    deleting any element yields an interlacing polynomial."""
    failures = []
    for _ in range(samples):
        expr = gen.random_sp_expression(rng, rng.randint(1, max_n))
        p = po.sp_build(expr)
        big = po.e_polynomial(p)
        inputs = {"expression": expr.to_dsl()}
        if not _rooted(big):
            failures.append(
                _fail(inputs, "real-rooted layer-count polynomial", _txt(big))
            )
            continue
        for x in p.elements:
            small = po.e_polynomial(po.delete_element(p, x))
            if not il.interlaces(small, big):
                failures.append(
                    _fail(
                        {**inputs, "deleted": x},
                        "deletion interlaces the full polynomial",
                        f"{_txt(small)} vs {_txt(big)}",
                    )
                )
    return samples, failures


def _suite_ferrers(max_n: int, samples: int, rng: random.Random):
    """Cell posets of partitions: the closed product formula matches grid
    enumeration pointwise, all construction methods agree, and removing a
    corner cell interlaces."""
    failures = []
    instances = 0
    for n in range(1, max_n + 1):
        for shape in fe.partitions_of(n):
            instances += 1
            inputs = {"partition": list(shape.parts)}
            omega = fe.hook_content_order_poly(shape)
            for m in range(max_n + 1):
                expected = fe.count_reverse_ssyt(shape, m)
                got = omega(m)
                if got != expected:
                    failures.append(
                        _fail(
                            {**inputs, "m": m},
                            f"grid count {expected}",
                            str(got),
                        )
                    )
            via_hooks = fe.ferrers_e_poly(shape, "hook_content")
            for method in ("recursion", "enumeration"):
                other = fe.ferrers_e_poly(shape, method)
                if other != via_hooks:
                    failures.append(
                        _fail(
                            {**inputs, "method": method},
                            _txt(via_hooks),
                            _txt(other),
                        )
                    )
            report = fe.verify_cover_interlacing(shape)
            if not report.passed:
                bad = [
                    list(c.smaller.parts) for c in report.checks if not c.passed
                ]
                failures.append(
                    _fail(
                        inputs,
                        "every removed corner interlaces",
                        f"failing covers {bad}",
                    )
                )
    return instances, failures


def _suite_ns_small(max_n: int, samples: int, rng: random.Random):
    """Exhaustive: every labelled poset on at most max_n elements has a
    real-rooted layer-count polynomial with all roots in [-1, 0]."""
    failures = []
    instances = 0
    for n in range(max_n + 1):
        for shape in gen.all_posets_on(n):
            for p in gen.all_labellings(shape):
                instances += 1
                e = po.e_polynomial(p)
                if not rt.roots_in_interval(e, _NEG_ONE, _ZERO):
                    failures.append(
                        _fail(
                            {"poset": po.poset_to_json_dict(p)},
                            "real-rooted with roots in [-1, 0]",
                            _txt(e),
                        )
                    )
    return instances, failures


def _suite_ordinal_sum(max_n: int, samples: int, rng: random.Random):
    """Stacking and side-by-side identities for layer-count polynomials."""
    failures = []
    x = Polynomial([0, 1])
    x_plus_1 = Polynomial([1, 1])
    for _ in range(samples):
        p = po.sp_build(gen.random_sp_expression(rng, rng.randint(1, max_n)))
        q = po.sp_build(gen.random_sp_expression(rng, rng.randint(1, max_n)))
        ep, eq = po.e_polynomial(p), po.e_polynomial(q)
        inputs = {
            "p": po.poset_to_json_dict(p),
            "q": po.poset_to_json_dict(q),
        }
        lhs1 = po.e_polynomial(po.ordinal_sum(p, q, 1))
        if lhs1 != ep * eq:
            failures.append(
                _fail({**inputs, "variant": 1}, _txt(ep * eq), _txt(lhs1))
            )
        lhs0 = x * po.e_polynomial(po.ordinal_sum(p, q, 0))
        rhs0 = x_plus_1 * ep * eq
        if lhs0 != rhs0:
            failures.append(
                _fail({**inputs, "variant": 0}, _txt(rhs0), _txt(lhs0))
            )
    for _ in range(samples):
        p = gen.random_labelled_poset(rng, max_n)
        q = gen.random_labelled_poset(rng, max_n)
        inputs = {
            "p": po.poset_to_json_dict(p),
            "q": po.poset_to_json_dict(q),
        }
        side = po.e_polynomial(po.disjoint_union(p, q))
        expected = tr.diamond(po.e_polynomial(p), po.e_polynomial(q))
        if side != expected:
            failures.append(_fail(inputs, _txt(expected), _txt(side)))
        omega = po.order_polynomial(po.disjoint_union(p, q))
        omega_prod = po.order_polynomial(p) * po.order_polynomial(q)
        if omega != omega_prod:
            failures.append(
                _fail(
                    {**inputs, "check": "order polynomial product"},
                    _txt(omega_prod),
                    _txt(omega),
                )
            )
    return 2 * samples, failures


def _suite_log_concavity(max_n: int, samples: int, rng: random.Random):
    """Real-rooted coefficient sequences are strictly log-concave between the
    lowest nonzero order and the degree."""
    failures = []
    for _ in range(samples):
        f = gen.random_real_rooted(rng, max_n, standard=False)
        bad = rt.log_concavity_check(f)
        if bad is not None:
            failures.append(
                _fail({"f": _txt(f)}, "strictly log-concave", f"index {bad}")
            )
    return samples, failures


def _suite_hermite_poulain(max_n: int, samples: int, rng: random.Random):
    """Differential-operator images of real-rooted pairs are real-rooted, and
    their multiple roots come only from multiple roots of the operand."""
    failures = []
    for _ in range(samples):
        f = gen.random_real_rooted(rng, max_n, standard=False)
        min_deg = int(f.trailing_order)
        g = gen.random_real_rooted(rng, max(min_deg, 1), min_deg=min_deg)
        p = tr.hermite_poulain(f, g)
        inputs = {"f": _txt(f), "g": _txt(g)}
        if not _rooted(p):
            failures.append(_fail(inputs, "real-rooted image", _txt(p)))
            continue
        repeated = gcd(p, p.derivative()) if p.degree >= 1 else None
        if repeated is None or repeated.degree < 1:
            continue
        g_repeated = gcd(g, g.derivative())
        witness = rt.squarefree_part(repeated)
        if g_repeated.degree < 1 or not (
            rt.squarefree_part(g_repeated) % witness
        ).is_zero:
            failures.append(
                _fail(
                    inputs,
                    "multiple roots of the image are multiple roots of g",
                    f"extra repeated factor {_txt(witness)}",
                )
            )
    return samples, failures


_SuiteFn = Callable[[int, int, random.Random], tuple[int, list[dict]]]

# suite id -> (runner, default max_n, default samples)
SUITES: dict[str, tuple[_SuiteFn, int, int]] = {
    "schur": (_suite_schur, 8, 200),
    "diamond-closure": (_closure_suite(tr.diamond), 8, 200),
    "diamond-interlace": (_suite_diamond_interlace, 6, 200),
    "chain": (_suite_chain, 5, 100),
    "sp-deletion": (_suite_sp_deletion, 8, 300),
    "ferrers": (_suite_ferrers, 6, 0),
    "ns-small": (_suite_ns_small, 4, 0),
    "lphi-identity": (_suite_lphi_identity, 5, 100),
    "alt-product": (_closure_suite(tr.alt_diamond), 8, 200),
    "e-operator": (_suite_e_operator, 8, 200),
    "ordinal-sum": (_suite_ordinal_sum, 6, 100),
    "log-concavity": (_suite_log_concavity, 8, 300),
    "hermite-poulain": (_suite_hermite_poulain, 6, 100),
}


def suite_names() -> list[str]:
    return [*SUITES, "all"]


def _canonical(failures: list[dict]) -> tuple[dict, ...]:
    return tuple(sorted(failures, key=lambda f: json.dumps(f, sort_keys=True)))


def run_suite(
    name: str,
    max_n: int | None = None,
    samples: int | None = None,
    seed: int = 0,
) -> VerificationReport:
    """Run one suite (or "all") and return its report.

    max_n/samples default per suite; "all" runs every suite at its own
    defaults and merges, tagging each failure with the originating suite.
    """
    if name == "all":
        instances = 0
        failures: list[dict] = []
        for sub in SUITES:
            report = run_suite(sub, seed=seed)
            instances += report.instances
            for failure in report.failures:
                failures.append({**failure, "inputs": {"suite": sub, **failure["inputs"]}})
        return VerificationReport(
            "all", seed, 0, 0, instances, _canonical(failures)
        )
    if name not in SUITES:
        raise UnknownSuiteError(
            f"unknown suite {name!r}; expected one of {', '.join(suite_names())}"
        )
    fn, default_max_n, default_samples = SUITES[name]
    max_n = default_max_n if max_n is None else max_n
    samples = default_samples if samples is None else samples
    rng = random.Random(f"{seed}:{name}")
    instances, failures = fn(max_n, samples, rng)
    return VerificationReport(
        name, seed, max_n, samples, instances, _canonical(failures)
    )
