"""Exact real-root machinery: Sturm chains, counting, isolation, multiplicity.

All decisions are exact.  Counting uses Sturm sign variations on the
square-free part; isolation returns disjoint open intervals with rational
non-root endpoints, except that rational roots are pinned to exact points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import ZeroPolynomialError
from .polynomial import Polynomial, gcd

INF = float("inf")
NEG_INF = float("-inf")


# -- simplest rational in an interval --------------------------------------


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Rational with the smallest denominator in the open interval (lo, hi).

    When the interval contains integers the one nearest zero is returned.
    Splitting intervals at these points keeps bisection endpoints small and
    discovers small-denominator rational roots early.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -_simplest_nonneg(-hi, -lo)
    return _simplest_nonneg(lo, hi)


def _simplest_nonneg(lo: Fraction, hi: Fraction) -> Fraction:
    # 0 <= lo < hi; continued-fraction descent
    whole = lo.numerator // lo.denominator
    if Fraction(whole + 1) < hi:
        return Fraction(whole + 1)
    a = lo - whole  # 0 <= a < 1
    b = hi - whole  # a < b <= 1 since whole + 1 >= hi
    if a == 0:
        # fractional interval (0, b): minimal denominator is floor(1/b) + 1
        return whole + Fraction(1, b.denominator // b.numerator + 1)
    return whole + 1 / _simplest_nonneg(1 / b, 1 / a)


# -- sign evaluation on integer coefficient lists ---------------------------


def _int_sign_at(cs: Sequence[int], x: Fraction | float) -> int:
    """Sign of the polynomial with integer coefficients cs at x (or +-inf)."""
    if x == INF:
        v = cs[-1]
    elif x == NEG_INF:
        v = cs[-1] if (len(cs) - 1) % 2 == 0 else -cs[-1]
    else:
        p, q = x.numerator, x.denominator
        acc = cs[-1]
        qq = 1
        for c in reversed(cs[:-1]):
            qq *= q
            acc = acc * p + c * qq
        v = acc
    return (v > 0) - (v < 0)


class _SignChain:
    """Sturm chain rescaled to primitive integer entries for fast sign queries.

    Rescaling each entry by a positive rational leaves every sign variation
    count unchanged.
    """

    def __init__(self, f: Polynomial):
        if f.is_zero:
            raise ZeroPolynomialError("Sturm chain of the zero polynomial")
        entries = [f, f.derivative()]
        while not entries[-1].is_zero:
            r = -(entries[-2] % entries[-1])
            if r.is_zero:
                break
            entries.append(r.primitive())
        if entries[-1].is_zero:
            entries.pop()
        self.int_entries = [p.int_coeffs() for p in entries]

    def variations(self, x: Fraction | float) -> int:
        count = 0
        prev = 0
        for cs in self.int_entries:
            s = _int_sign_at(cs, x)
            if s != 0:
                if prev != 0 and s != prev:
                    count += 1
                prev = s
        return count

    def count(self, lo: Fraction | float, hi: Fraction | float) -> int:
        """Distinct roots of the (square-free) chain head in (lo, hi]."""
        return self.variations(lo) - self.variations(hi)


# -- public Sturm chain -----------------------------------------------------


class SturmChain:
    """Sturm chain of f: p0 = f, p1 = f', p_{i+1} = -(p_{i-1} mod p_i).

    The chain stops before the first zero remainder.  Entries are kept
    exactly as constructed (no rescaling) so small examples match hand
    computation.
    """

    def __init__(self, polynomials: Sequence[Polynomial]):
        self.polynomials = tuple(polynomials)

    def __len__(self) -> int:
        return len(self.polynomials)

    def __iter__(self):
        return iter(self.polynomials)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SturmChain):
            return NotImplemented
        return self.polynomials == other.polynomials

    def __repr__(self) -> str:
        return f"SturmChain({list(self.polynomials)!r})"

    def variations_at(self, x: Fraction) -> int:
        signs = [p(x) for p in self.polynomials]
        count = 0
        prev = 0
        for v in signs:
            if v != 0:
                s = 1 if v > 0 else -1
                if prev != 0 and s != prev:
                    count += 1
                prev = s
        return count


def sturm_chain(f: Polynomial) -> SturmChain:
    if f.is_zero:
        raise ZeroPolynomialError("Sturm chain of the zero polynomial")
    entries = [f]
    d = f.derivative()
    if not d.is_zero:
        entries.append(d)
        while True:
            r = -(entries[-2] % entries[-1])
            if r.is_zero:
                break
            entries.append(r)
    return SturmChain(entries)


# -- bounds, square-free parts ----------------------------------------------


def cauchy_root_bound(f: Polynomial) -> Fraction:
    """B with every real root of f strictly inside (-B, B)."""
    if f.is_zero:
        raise ZeroPolynomialError("root bound of the zero polynomial")
    if f.degree == 0:
        return Fraction(1)
    lead = abs(f.leading)
    biggest = max(abs(c) for c in f.coeffs[:-1])
    return 1 + biggest / lead


def squarefree_part(f: Polynomial) -> Polynomial:
    """Product of the distinct irreducible factors, primitive, positive lead."""
    if f.is_zero:
        raise ZeroPolynomialError("square-free part of the zero polynomial")
    if f.degree == 0:
        return Polynomial([1])
    g = f.exact_div(gcd(f, f.derivative())).primitive()
    return -g if g.leading < 0 else g


def yun_decomposition(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Square-free decomposition: f = c * prod g_i^i with pairwise coprime,
    square-free, primitive, positive-lead g_i.  Trivial factors are omitted.
    """
    if f.is_zero:
        raise ZeroPolynomialError("square-free decomposition of the zero polynomial")
    f = f.primitive()
    if f.leading < 0:
        f = -f
    if f.degree == 0:
        return []
    fp = f.derivative()
    a = gcd(f, fp)
    b = f.exact_div(a)
    c = fp.exact_div(a)
    d = c - b.derivative()
    out: list[tuple[Polynomial, int]] = []
    i = 1
    while b.degree > 0:
        ai = gcd(b, d)
        if ai.degree > 0:
            out.append((ai, i))
        b = b.exact_div(ai)
        c = d.exact_div(ai)
        d = c - b.derivative()
        i += 1
    return out


# -- counting ---------------------------------------------------------------


def count_roots(f: Polynomial, lo: Fraction | float, hi: Fraction | float) -> int:
    """Number of distinct real roots of f in the half-open interval (lo, hi].

    lo may be -inf and hi may be +inf; infinite endpoints are replaced by
    the Cauchy root bound, outside which f cannot vanish.
    """
    if f.is_zero:
        raise ZeroPolynomialError("root count of the zero polynomial")
    if not lo < hi:
        raise ValueError(f"need lo < hi, got ({lo}, {hi})")
    fsq = squarefree_part(f)
    if fsq.degree < 1:
        return 0
    bound = cauchy_root_bound(fsq)
    if lo == NEG_INF:
        lo = -bound
    if hi == INF:
        hi = bound
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        return 0
    chain = _SignChain(fsq)
    return chain.count(lo, hi)


# -- isolation ---------------------------------------------------------------


@dataclass(frozen=True)
class RootLocation:
    """One distinct real root: an exact rational point (lo == hi) or an open
    isolating interval with rational non-root endpoints."""

    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def point(self) -> Fraction:
        if not self.is_exact:
            raise ValueError("root is located by an interval, not a point")
        return self.lo

    def __str__(self) -> str:
        where = str(self.lo) if self.is_exact else f"({self.lo}, {self.hi})"
        return f"{where}*{self.multiplicity}"


class _Isolator:
    """Isolation and refinement for one primitive square-free integer polynomial."""

    def __init__(self, g: Polynomial):
        self.cs = g.int_coeffs()
        self.chain = _SignChain(g)

    def sign_at(self, x: Fraction) -> int:
        return _int_sign_at(self.cs, x)

    def isolate(self) -> tuple[list[Fraction], list[tuple[Fraction, Fraction]]]:
        """All real roots: exact rational hits plus single-root open intervals."""
        points: list[Fraction] = []
        intervals: list[tuple[Fraction, Fraction]] = []
        if len(self.cs) <= 1:
            return points, intervals
        bound = 1 + Fraction(max(abs(c) for c in self.cs[:-1]), abs(self.cs[-1]))
        v_lo = self.chain.variations(-bound)
        v_hi = self.chain.variations(bound)
        # (lo, hi, V(lo), V(hi), hi-is-a-root, depth); the variation difference
        # counts (lo, hi], so a root sitting exactly at hi must be discounted
        stack = [(-bound, bound, v_lo, v_hi, False, 0)]
        while stack:
            lo, hi, vlo, vhi, hi_root, depth = stack.pop()
            n = vlo - vhi - (1 if hi_root else 0)
            if n == 0:
                continue
            if n == 1:
                # splitting at an exact hit leaves that root as an endpoint;
                # move such endpoints off before handing the interval on
                clean = self._ensure_clean(lo, hi)
                if isinstance(clean, Fraction):
                    points.append(clean)
                else:
                    intervals.append(clean)
                continue
            mid = simplest_between(lo, hi) if depth % 2 == 0 else (lo + hi) / 2
            vm = self.chain.variations(mid)
            hit = self.sign_at(mid) == 0
            if hit:
                points.append(mid)
            stack.append((lo, mid, vlo, vm, hit, depth + 1))
            stack.append((mid, hi, vm, vhi, hi_root, depth + 1))
        return points, intervals

    def _root_side(
        self, lo: Fraction, hi: Fraction, at: Fraction, s_at: int
    ) -> tuple[Fraction, Fraction]:
        """Side of the split point holding the unique root of (lo, hi).

        Endpoints may themselves be (other) roots; the split point may not.
        """
        slo = self.sign_at(lo)
        if slo != 0:
            return (lo, at) if slo * s_at < 0 else (at, hi)
        shi = self.sign_at(hi)
        if shi != 0:
            # simple interior root: the sign left of it is -shi
            return (lo, at) if s_at == shi else (at, hi)
        return (lo, at) if self.chain.count(lo, at) >= 1 else (at, hi)

    def _ensure_clean(
        self, lo: Fraction, hi: Fraction
    ) -> Fraction | tuple[Fraction, Fraction]:
        """Shrink until neither endpoint is a root of this factor.

        Returns the root itself if the shrinking happens to land on it.
        """
        while self.sign_at(lo) == 0 or self.sign_at(hi) == 0:
            t = simplest_between(lo, hi)
            st = self.sign_at(t)
            if st == 0:
                return t
            lo, hi = self._root_side(lo, hi, t, st)
        return lo, hi

    def certify(
        self, lo: Fraction, hi: Fraction
    ) -> Fraction | tuple[Fraction, Fraction]:
        """Decide whether the unique root in (lo, hi) is rational.

        A rational root p/q in lowest terms has q dividing the leading
        coefficient, so once the minimal denominator present in the interval
        exceeds that coefficient the root is certified irrational.  Midpoint
        halving between candidate tests bounds the number of steps.
        """
        qmax = abs(self.cs[-1])
        clean = self._ensure_clean(lo, hi)
        if isinstance(clean, Fraction):
            return clean
        lo, hi = clean
        slo = self.sign_at(lo)
        while True:
            s = simplest_between(lo, hi)
            if s.denominator > qmax:
                return (lo, hi)
            sv = self.sign_at(s)
            if sv == 0:
                return s
            if slo * sv < 0:
                hi = s
            else:
                lo, slo = s, sv
            mid = (lo + hi) / 2
            sv = self.sign_at(mid)
            if sv == 0:
                return mid
            if slo * sv < 0:
                hi = mid
            else:
                lo, slo = mid, sv

    def narrow(
        self, lo: Fraction, hi: Fraction, at: Fraction
    ) -> tuple[Fraction, Fraction]:
        """Shrink a single-root interval by splitting at an interior non-root."""
        sv = self.sign_at(at)
        if sv == 0:
            raise ValueError("split point is a root")
        return self._root_side(lo, hi, at, sv)


@dataclass
class _Node:
    lo: Fraction
    hi: Fraction
    mult: int
    iso: _Isolator | None  # None for exact points

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi


def _separate_nodes(nodes: list[_Node]) -> list[_Node]:
    """Refine interval nodes holding roots of coprime factors until disjoint."""
    changed = True
    while changed:
        changed = False
        nodes.sort(key=lambda n: (n.lo, n.hi))
        for a, b in zip(nodes, nodes[1:]):
            if a.is_point and b.is_point:
                continue
            if a.is_point or b.is_point:
                pt, iv = (a, b) if a.is_point else (b, a)
                if iv.lo < pt.lo < iv.hi:
                    # roles are coprime: the point cannot be iv's root
                    iv.lo, iv.hi = iv.iso.narrow(iv.lo, iv.hi, pt.lo)
                    changed = True
                continue
            if a.hi <= b.lo:
                continue
            # overlapping intervals around distinct irrational roots
            cut = simplest_between(max(a.lo, b.lo), min(a.hi, b.hi))
            for node in (a, b) if a.hi - a.lo >= b.hi - b.lo else (b, a):
                if node.lo < cut < node.hi:
                    node.lo, node.hi = node.iso.narrow(node.lo, node.hi, cut)
                    changed = True
                    break
    return nodes


def isolate_roots(f: Polynomial) -> list[RootLocation]:
    """Locate every distinct real root of f with its multiplicity, in order.

    Rational roots come back as exact points; irrational roots as disjoint
    open intervals whose rational endpoints are not roots of f.
    """
    factors = yun_decomposition(f)
    nodes: list[_Node] = []
    for g, mult in factors:
        iso = _Isolator(g)
        points, intervals = iso.isolate()
        for p in points:
            nodes.append(_Node(p, p, mult, None))
        for lo, hi in intervals:
            located = iso.certify(lo, hi)
            if isinstance(located, Fraction):
                nodes.append(_Node(located, located, mult, None))
            else:
                nodes.append(_Node(located[0], located[1], mult, iso))
    _separate_nodes(nodes)
    for n in nodes:
        # an interval endpoint may coincide with a rational root of another
        # factor; keep the promise that endpoints are never roots of f
        while not n.is_point and (f(n.lo) == 0 or f(n.hi) == 0):
            n.lo, n.hi = n.iso.narrow(n.lo, n.hi, simplest_between(n.lo, n.hi))
    return [RootLocation(n.lo, n.hi, n.mult) for n in nodes]


# -- classification -----------------------------------------------------------


class Rootedness(Enum):
    REAL_SIMPLE = "real_simple"
    REAL_WITH_MULTIPLICITY = "real_with_multiplicity"
    NOT_REAL_ROOTED = "not_real_rooted"


def is_real_rooted(f: Polynomial) -> Rootedness:
    """Classify whether all complex zeros of f are real, and whether simple.

    Nonzero constants are vacuously real- and simple-rooted.
    """
    if f.is_zero:
        raise ZeroPolynomialError("rootedness of the zero polynomial")
    if f.degree == 0:
        return Rootedness.REAL_SIMPLE
    has_multiple = False
    for g, mult in yun_decomposition(f):
        chain = _SignChain(g)
        if chain.count(NEG_INF, INF) < g.degree:
            return Rootedness.NOT_REAL_ROOTED
        if mult > 1:
            has_multiple = True
    if has_multiple:
        return Rootedness.REAL_WITH_MULTIPLICITY
    return Rootedness.REAL_SIMPLE


def roots_in_interval(
    f: Polynomial, lo: Fraction, hi: Fraction, closed: bool = True
) -> bool:
    """True iff f is real-rooted and every root lies in [lo, hi] ((lo, hi)
    when closed is False)."""
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError(f"need lo < hi, got ({lo}, {hi})")
    if is_real_rooted(f) is Rootedness.NOT_REAL_ROOTED:
        return False
    fsq = squarefree_part(f)
    if fsq.degree < 1:
        return True
    chain = _SignChain(fsq)
    total = chain.count(NEG_INF, INF)
    inside = chain.count(lo, hi)
    if closed:
        inside += 1 if fsq(lo) == 0 else 0
    else:
        inside -= 1 if fsq(hi) == 0 else 0
    return inside == total


def log_concavity_check(f: Polynomial) -> int | None:
    """First interior index where strict log-concavity fails, else None.

    Checks a_i^2 > a_{i-1} * a_{i+1} for every i strictly between the lowest
    nonzero order and the degree.
    """
    if f.is_zero:
        raise ZeroPolynomialError("log-concavity of the zero polynomial")
    low = f.trailing_order
    high = f.degree
    for i in range(int(low) + 1, int(high)):
        if f.coefficient(i) ** 2 <= f.coefficient(i - 1) * f.coefficient(i + 1):
            return i
    return None
