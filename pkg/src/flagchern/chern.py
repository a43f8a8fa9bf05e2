"""Chern classes, exact integration, Chern numbers, and the Todd genus.

Two independent integration oracles are provided.  ``integrate`` uses the
Weyl-sum kernel: the antisymmetrization of the integrand (times the isotropy
root product) is a constant multiple of the positive-root product, and that
constant — divided by the isotropy Weyl order — is the integral, normalized
so the all-plus structure's top Chern class integrates to +chi.  The constant
is extracted by exact evaluation at generic rational points (with a second
point as a guard), or fully symbolically on request.  ``integrate_nf`` is the
second oracle: in the Borel quotient of the ambient full flag the top graded
piece is one-dimensional, so normal forms of top classes are proportional and
the ratio against the positive-root product calibrates the integral.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .flagmodel import FlagManifold, InvariantACS, is_integrable
from .groebner import GroebnerBasis, borel_groebner, normal_form
from .polyring import (
    Polynomial,
    antisymmetrize,
    elementary_symmetric_in,
    elementary_symmetric_values,
    exact_divide,
)
from .rootsys import WeylElement, reflection_matrix, root_form, vec_dot

# -- c-monomials ------------------------------------------------------------
# A Chern monomial over c_1..c_N is a tuple of N exponents; its weighted
# degree is sum((k+1) * exps[k]).


def weighted_degree(exps: Sequence[int]) -> int:
    return sum((k + 1) * e for k, e in enumerate(exps))


def format_cmonomial(exps: Sequence[int]) -> str:
    parts = []
    for k, e in enumerate(exps):
        if e == 1:
            parts.append(f"c{k + 1}")
        elif e > 1:
            parts.append(f"c{k + 1}^{e}")
    return "".join(parts) if parts else "1"


def parse_cmonomial(text: str, n: int) -> tuple[int, ...]:
    """Parse strings like ``c1^14c2`` into an exponent tuple over c_1..c_n."""
    import re

    exps = [0] * n
    pos = 0
    for m in re.finditer(r"c(\d+)(?:\^(\d+))?", text.replace("*", "").replace(" ", "")):
        if m.start() != pos:
            raise ValueError(f"cannot parse Chern monomial {text!r}")
        pos = m.end()
        k = int(m.group(1))
        e = int(m.group(2)) if m.group(2) else 1
        if not 1 <= k <= n:
            raise ValueError(f"class index c{k} out of range 1..{n}")
        exps[k - 1] += e
    if pos != len(text.replace("*", "").replace(" ", "")):
        raise ValueError(f"cannot parse Chern monomial {text!r}")
    return tuple(exps)


def monomials_of_weighted_degree(n_classes: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples over c_1..c_n_classes of the given weighted degree."""
    out: list[tuple[int, ...]] = []

    def rec(k: int, remaining: int, acc: list[int]):
        if k == n_classes:
            if remaining == 0:
                out.append(tuple(acc))
            return
        weight = k + 1
        for e in range(remaining // weight, -1, -1):
            acc.append(e)
            rec(k + 1, remaining - weight * e, acc)
            acc.pop()

    rec(0, degree, [])
    return out


# -- Chern classes ----------------------------------------------------------

def signed_root_forms(flag: FlagManifold, acs: InvariantACS) -> list[Polynomial]:
    """Linear forms eps_alpha * alpha over the complementary positive roots."""
    forms = []
    for i, summand in enumerate(flag.summands()):
        s = acs.signs[i]
        for r in summand.roots:
            forms.append(root_form(r) * s)
    return forms


def chern_classes(flag: FlagManifold, acs: InvariantACS) -> list[Polynomial]:
    """c_1..c_N as polynomials on the ambient coordinates (N = complex dim)."""
    forms = signed_root_forms(flag, acs)
    return [elementary_symmetric_in(forms, k) for k in range(1, len(forms) + 1)]


def chern_classes_nf(flag: FlagManifold, acs: InvariantACS) -> list[Polynomial]:
    """Chern classes reduced to normal form in the ambient Borel quotient."""
    gb = borel_groebner(flag.rs.family, flag.rs.rank)
    return [normal_form(c, gb) for c in chern_classes(flag, acs)]


# -- integration: Weyl-sum oracle -------------------------------------------

def _generic_points(flag: FlagManifold) -> list[tuple[Fraction, ...]]:
    """Two rational points where every root's linear form is nonzero."""
    dim = flag.rs.ambient_dim
    points = []
    base = 3
    while len(points) < 2:
        pt = tuple(Fraction(base**i) for i in range(dim))
        if all(vec_dot(r, pt) != 0 for r in flag.rs.positives):
            points.append(pt)
        base += 2
    return points


def _check_isotropy_invariance(flag: FlagManifold, p: Polynomial) -> None:
    for a in flag.theta:
        w = WeylElement(reflection_matrix(a), -1, 1)
        if w.act(p) != p:
            raise ValueError("integrand is not invariant under the isotropy Weyl group")


def _k_positive_product_value(flag: FlagManifold, pt) -> Fraction:
    v = Fraction(1)
    for b in flag.k_positives:
        v *= vec_dot(b, pt)
    return v


def _denominator_value(flag: FlagManifold, pt) -> Fraction:
    v = Fraction(1)
    for a in flag.rs.positives:
        v *= vec_dot(a, pt)
    return v


def integrate(flag: FlagManifold, p: Polynomial, method: str = "evaluate") -> Fraction:
    """Integral of a top-degree invariant class over the flag manifold.

    Normalized so the product of all complementary positive roots (the top
    Chern class of the all-plus structure) integrates to +chi.
    """
    if p.is_zero():
        return Fraction(0)
    n = flag.complex_dim
    if not p.is_homogeneous(n):
        raise ValueError(f"integrand must be homogeneous of degree {n}")
    _check_isotropy_invariance(flag, p)
    weyl = flag.weyl()
    wk = flag.euler_characteristic()
    order_k = len(weyl) // wk  # |W_K|

    if method == "symbolic":
        q = p
        for b in flag.k_positives:
            q = q * root_form(b)
        numerator = antisymmetrize(q, weyl)
        denom = Polynomial.one(p.nvars)
        for a in flag.rs.positives:
            denom = denom * root_form(a)
        quotient = exact_divide(numerator, denom)
        return quotient.constant_value() / order_k
    if method != "evaluate":
        raise ValueError(f"unknown integration method {method!r}")

    results = []
    for pt in _generic_points(flag):
        total = Fraction(0)
        for w in weyl:
            q = w.apply(pt)
            total += w.sign * p.evaluate(q) * _k_positive_product_value(flag, q)
        results.append(total / _denominator_value(flag, pt) / order_k)
    if results[0] != results[1]:
        raise ArithmeticError("Weyl-sum evaluation disagrees between sample points")
    return results[0]


# -- integration: normal-form oracle ----------------------------------------

_TOP_NF_CACHE: dict = {}


def _top_reference(flag: FlagManifold, gb: GroebnerBasis):
    """Normal form of the positive-root product: a single staircase monomial."""
    key = (flag.rs.family, flag.rs.rank, gb.order)
    if key in _TOP_NF_CACHE:
        return _TOP_NF_CACHE[key]
    r = Polynomial.one(flag.rs.ambient_dim)
    for a in flag.rs.positives:
        r = normal_form(r * root_form(a), gb)
    if len(r.terms) != 1:
        raise AssertionError("top normal form is not a single monomial")
    ((mono, coeff),) = r.terms.items()
    _TOP_NF_CACHE[key] = (mono, coeff)
    return mono, coeff


def integrate_nf(flag: FlagManifold, p: Polynomial,
                 gb: GroebnerBasis | None = None) -> Fraction:
    """Second oracle: normal-form proportionality against the top class."""
    if p.is_zero():
        return Fraction(0)
    n = flag.complex_dim
    if not p.is_homogeneous(n):
        raise ValueError(f"integrand must be homogeneous of degree {n}")
    if gb is None:
        gb = borel_groebner(flag.rs.family, flag.rs.rank)
    mono, mu = _top_reference(flag, gb)
    r = normal_form(p, gb)
    for b in flag.k_positives:
        r = normal_form(r * root_form(b), gb)
    if r.is_zero():
        return Fraction(0)
    if set(r.terms) != {mono}:
        raise AssertionError("normal form is not proportional to the top monomial")
    lam = r.terms[mono]
    weyl_order = len(flag.weyl())
    chi = flag.euler_characteristic()
    return lam / mu * chi


def chern_number_nf(flag: FlagManifold, acs: InvariantACS, c_monomial,
                    gb: GroebnerBasis | None = None) -> int:
    """Chern number of a c-monomial via incremental normal-form reduction.

    Equivalent to ``integrate_nf`` on the expanded product, but every partial
    product is reduced to normal form before the next factor is multiplied in,
    which keeps intermediate polynomials inside the (finite) staircase.
    """
    n = flag.complex_dim
    m = parse_cmonomial(c_monomial, n) if isinstance(c_monomial, str) else tuple(c_monomial)
    if weighted_degree(m) != n:
        raise ValueError(
            f"monomial {format_cmonomial(m)} has weighted degree "
            f"{weighted_degree(m)}, expected {n}")
    if gb is None:
        gb = borel_groebner(flag.rs.family, flag.rs.rank)
    classes = chern_classes(flag, acs)
    r = Polynomial.one(flag.rs.ambient_dim)
    for k, exp in enumerate(m):
        if not exp:
            continue
        ck = normal_form(classes[k], gb)
        for _ in range(exp):
            r = normal_form(r * ck, gb)
    for b in flag.k_positives:
        r = normal_form(r * root_form(b), gb)
    if r.is_zero():
        return 0
    mono, mu = _top_reference(flag, gb)
    if set(r.terms) != {mono}:
        raise AssertionError("normal form is not proportional to the top monomial")
    val = r.terms[mono] / mu * flag.euler_characteristic()
    if val.denominator != 1:
        raise ArithmeticError(
            f"Chern number {format_cmonomial(m)} is not an integer: {val}")
    return int(val)


# -- Chern numbers ----------------------------------------------------------

def _sweep(flag: FlagManifold, acs: InvariantACS,
           monomials: Sequence[tuple[int, ...]], pt, elements) -> dict:
    """Partial Weyl sum of all requested Chern monomials at one point."""
    eps_roots = []
    for i, summand in enumerate(flag.summands()):
        s = acs.signs[i]
        eps_roots.extend((r, s) for r in summand.roots)
    kmax = 0
    for m in monomials:
        for k, e in enumerate(m):
            if e:
                kmax = max(kmax, k + 1)
    acc = {m: Fraction(0) for m in monomials}
    for w in elements:
        q = w.apply(pt)
        vals = [s * vec_dot(r, q) for r, s in eps_roots]
        e = elementary_symmetric_values(vals, kmax)
        base = w.sign * _k_positive_product_value(flag, q)
        for m in monomials:
            v = base
            for k, exp in enumerate(m):
                if exp:
                    v *= e[k + 1] ** exp
            acc[m] += v
    return acc


def _sweep_worker(args):
    flag, acs, monomials, pt, elements = args
    return _sweep(flag, acs, monomials, pt, elements)


def chern_numbers(flag: FlagManifold, acs: InvariantACS,
                  monomials: Iterable, jobs: int = 1) -> dict[tuple[int, ...], int]:
    """Exact Chern numbers for a batch of c-monomials in one Weyl sweep."""
    n = flag.complex_dim
    monos = []
    for m in monomials:
        m = parse_cmonomial(m, n) if isinstance(m, str) else tuple(m)
        if weighted_degree(m) != n:
            raise ValueError(
                f"monomial {format_cmonomial(m)} has weighted degree "
                f"{weighted_degree(m)}, expected {n}")
        monos.append(m)
    weyl = flag.weyl()
    order_k = len(weyl) // flag.euler_characteristic()
    out: dict[tuple[int, ...], int] = {}
    per_point = []
    for pt in _generic_points(flag):
        if jobs > 1:
            import multiprocessing

            chunks = [list(weyl)[i::jobs] for i in range(jobs)]
            with multiprocessing.Pool(jobs) as pool:
                partials = pool.map(
                    _sweep_worker,
                    [(flag, acs, monos, pt, c) for c in chunks])
            acc = {m: sum((p[m] for p in partials), Fraction(0)) for m in monos}
        else:
            acc = _sweep(flag, acs, monos, pt, weyl.elements)
        d = _denominator_value(flag, pt) * order_k
        per_point.append({m: acc[m] / d for m in monos})
    for m in monos:
        if per_point[0][m] != per_point[1][m]:
            raise ArithmeticError("Weyl-sum evaluation disagrees between sample points")
        val = per_point[0][m]
        if val.denominator != 1:
            raise ArithmeticError(
                f"Chern number {format_cmonomial(m)} is not an integer: {val}")
        out[m] = int(val)
    return out


def chern_number(flag: FlagManifold, acs: InvariantACS, c_monomial,
                 jobs: int = 1) -> int:
    n = flag.complex_dim
    m = parse_cmonomial(c_monomial, n) if isinstance(c_monomial, str) else tuple(c_monomial)
    return chern_numbers(flag, acs, [m], jobs=jobs)[m]


# -- Todd polynomials and the Todd genus ------------------------------------

_BERNOULLI_CACHE: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (B_1 = -1/2) via the standard recurrence."""
    while len(_BERNOULLI_CACHE) <= n:
        m = len(_BERNOULLI_CACHE)
        total = Fraction(0)
        for k in range(m):
            total += math.comb(m + 1, k) * _BERNOULLI_CACHE[k]
        _BERNOULLI_CACHE.append(-total / (m + 1))
    return _BERNOULLI_CACHE[n]


def _todd_series(order: int) -> list[Fraction]:
    """Coefficients of x/(1 - e^{-x}) up to x^order."""
    # (1 - e^{-x})/x = sum_{j>=0} (-1)^j x^j / (j+1)!
    s = [Fraction((-1) ** j, math.factorial(j + 1)) for j in range(order + 1)]
    inv = [Fraction(1)] + [Fraction(0)] * order
    for k in range(1, order + 1):
        inv[k] = -sum(s[j] * inv[k - j] for j in range(1, k + 1))
    return inv


def _series_log(q: list[Fraction]) -> list[Fraction]:
    """log of a power series with constant term 1, same truncation order."""
    order = len(q) - 1
    out = [Fraction(0)] * (order + 1)
    # l' = q'/q  =>  k*l_k = k*q_k - sum_{j=1}^{k-1} j*l_j*q_{k-j}
    for k in range(1, order + 1):
        acc = k * q[k]
        for j in range(1, k):
            acc -= j * out[j] * q[k - j]
        out[k] = acc / k
    return out


def _truncate_weighted(p: Polynomial, max_wdeg: int) -> Polynomial:
    terms = {e: c for e, c in p.terms.items() if weighted_degree(e) <= max_wdeg}
    return Polynomial(p.nvars, terms)


def _power_sums_in_chern(n: int) -> list[Polynomial]:
    """p_1..p_n as polynomials in c_1..c_n (Newton's identities)."""
    c = [None] + [Polynomial.variable(n, k) for k in range(n)]
    p: list[Polynomial] = [Polynomial.constant(n, 0)]
    for k in range(1, n + 1):
        acc = Polynomial.zero(n)
        for i in range(1, k):
            acc = acc + (-1) ** (i - 1) * c[i] * p[k - i]
        acc = acc + (-1) ** (k - 1) * k * c[k]
        p.append(acc)
    return p[1:]


@dataclass(frozen=True)
class ToddExpansion:
    degree: int
    coefficients: Mapping[tuple[int, ...], Fraction]

    def common_denominator(self) -> int:
        d = 1
        for c in self.coefficients.values():
            d = d * c.denominator // math.gcd(d, c.denominator)
        return d


_TODD_CACHE: dict[int, ToddExpansion] = {}


def todd_polynomial(degree: int) -> ToddExpansion:
    """The universal Todd polynomial of the given weighted degree in c_1..c_degree."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    if degree in _TODD_CACHE:
        return _TODD_CACHE[degree]
    n = degree
    series = _series_log(_todd_series(n))  # log of x/(1-e^{-x})
    psums = _power_sums_in_chern(n)
    exponent_arg = Polynomial.zero(n)
    for m in range(1, n + 1):
        if series[m]:
            exponent_arg = exponent_arg + series[m] * psums[m - 1]
    exponent_arg = _truncate_weighted(exponent_arg, n)
    td = Polynomial.one(n)
    power = Polynomial.one(n)
    for j in range(1, n + 1):
        power = _truncate_weighted(power * exponent_arg, n)
        if power.is_zero():
            break
        td = td + power * Fraction(1, math.factorial(j))
    coeffs = {e: c for e, c in td.terms.items() if weighted_degree(e) == degree}
    exp = ToddExpansion(degree, coeffs)
    _TODD_CACHE[degree] = exp
    return exp


def orientation_sign(flag: FlagManifold, acs: InvariantACS) -> int:
    """+1 if the structure's orientation agrees with the all-plus one.

    The structure orients each summand by its sign, so the comparison is the
    product of the signs raised to the summand complex dimensions (only odd
    complex dimension can matter, and only when N itself is odd).
    """
    o = 1
    for i, s in enumerate(flag.summands()):
        if acs.signs[i] == -1 and s.dim_complex % 2 == 1:
            o = -o
    return o


def todd_genus(flag: FlagManifold, acs: InvariantACS, jobs: int = 1) -> Fraction:
    """Integral of the top Todd polynomial of the tangent bundle.

    Evaluated against the fundamental class oriented by the structure itself
    (not the fixed all-plus orientation used by ``chern_number``), so every
    integrable structure has genus exactly 1.
    """
    n = flag.complex_dim
    td = todd_polynomial(n)
    numbers = chern_numbers(flag, acs, list(td.coefficients), jobs=jobs)
    total = sum((c * numbers[m] for m, c in td.coefficients.items()), Fraction(0))
    return orientation_sign(flag, acs) * total


# -- report -----------------------------------------------------------------

@dataclass
class ChernReport:
    manifold: str
    signs: tuple[int, ...]
    classes: list[Polynomial]
    numbers: dict[tuple[int, ...], int]
    todd_genus: Fraction
    hrr_residual: Fraction
    integrable: bool

    def numbers_by_label(self) -> dict[str, int]:
        return {format_cmonomial(m): v for m, v in self.numbers.items()}


def build_report(flag: FlagManifold, acs: InvariantACS,
                 monomials: Iterable | None = None, jobs: int = 1,
                 with_classes: bool = True) -> ChernReport:
    n = flag.complex_dim
    td = todd_polynomial(n)
    wanted: dict[tuple[int, ...], None] = {}
    top = tuple(0 if k != n - 1 else 1 for k in range(n))
    c1n = tuple(n if k == 0 else 0 for k in range(n))
    for m in (top, c1n):
        wanted[m] = None
    if monomials is not None:
        for m in monomials:
            m = parse_cmonomial(m, n) if isinstance(m, str) else tuple(m)
            wanted[m] = None
    for m in td.coefficients:
        wanted[m] = None
    numbers = chern_numbers(flag, acs, list(wanted), jobs=jobs)
    genus = sum((c * numbers[m] for m, c in td.coefficients.items()), Fraction(0))
    return ChernReport(
        manifold=flag.name(),
        signs=acs.signs,
        classes=chern_classes(flag, acs) if with_classes else [],
        numbers=numbers,
        todd_genus=genus,
        hrr_residual=genus - 1,
        integrable=is_integrable(flag, acs),
    )
