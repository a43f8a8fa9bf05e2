"""Cohomology-presentation verification: relation families, the SO(6)
Groebner basis, projectivized-tangent presentations, and top-class
nonvanishing certificates.

A :class:`PresentationCase` packages a polynomial presentation of a
cohomology ring — ideal generators, claimed multiplicative relations, and a
claimed top-degree class.  ``verify_relations`` checks that every claimed
relation lies in the ideal; ``top_class_certificate`` produces the nonzero
scalar relating the claimed top class to the canonical top normal monomial
(its nonvanishing certifies that the class generates the top cohomology).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .groebner import (GroebnerBasis, MonomialOrder, _divides, borel_generators,
                       buchberger, normal_form, quotient_dimension)
from .polyring import Polynomial, exact_divide


class CertificateError(ValueError):
    """Raised when a claimed top class reduces to zero in the quotient."""


@dataclass(frozen=True)
class PresentationCase:
    name: str
    nvars: int
    generators: tuple[Polynomial, ...]
    relations: tuple[Polynomial, ...]
    top_class: Polynomial | None
    # extra linear forms multiplied in before reduction (positive roots of
    # the isotropy group, for partial-flag quotients presented inside the
    # ambient full-flag ring)
    extra_factors: tuple[Polynomial, ...] = ()
    expected_quotient_dim: int | None = None
    order: MonomialOrder = field(default=None)  # type: ignore[assignment]
    # claimed reduced Groebner basis, when the reference prints one
    claimed_basis: tuple[Polynomial, ...] = ()

    def __post_init__(self):
        if self.order is None:
            object.__setattr__(self, "order",
                               MonomialOrder("lex", tuple(range(self.nvars))))
        for r in self.relations:
            if not r.is_homogeneous():
                raise ValueError(f"case {self.name}: claimed relation {r} "
                                 f"is not homogeneous")

    def groebner(self) -> GroebnerBasis:
        return buchberger(self.generators, self.order)


# -- relation families --------------------------------------------------------

def _complete_homogeneous_tail(nvars: int, degree: int, first: int,
                               square: bool = False) -> Polynomial:
    """h_degree in the variables x_first..x_{nvars-1} (squared if requested)."""
    k = nvars - first
    terms = {}
    for exps in itertools.product(range(degree + 1), repeat=k):
        if sum(exps) != degree:
            continue
        e = [0] * nvars
        for j, x in enumerate(exps):
            e[first + j] = 2 * x if square else x
        terms[tuple(e)] = Fraction(1)
    return Polynomial(nvars, terms)


def relations_a_full(n: int) -> list[Polynomial]:
    """The n claimed relations in H*(SU(n+1)/T): for p = 1..n the complete
    homogeneous polynomial of degree n-p+2 in the last p of x_1..x_n,
    expressed inside the (n+1)-variable ambient ring."""
    nvars = n + 1
    return [_complete_homogeneous_tail(nvars, n - p + 2, n - p + 1)
            for p in range(1, n + 1)]


def relations_bc_full(n: int) -> list[Polynomial]:
    """The n claimed relations in H*(Spin(2n+1)/T) = H*(Sp(n)/T): for
    p = 1..n the complete homogeneous polynomial of degree n-p+1 in the
    squares of the last p of the n variables."""
    return [_complete_homogeneous_tail(n, n - p + 1, n - p, square=True)
            for p in range(1, n + 1)]


# -- named cases --------------------------------------------------------------

def _monomial(nvars: int, exps) -> Polynomial:
    return Polynomial(nvars, {tuple(exps): Fraction(1)})


def _so6_claimed_basis() -> tuple[Polynomial, ...]:
    x, y, z = (Polynomial.variable(3, i) for i in range(3))
    return (x * x + y * y + z * z,
            x * y * z,
            y ** 4 + y * y * z * z + z ** 4,
            y ** 3 * z + y * z ** 3,
            z ** 5)


def projectivized_tangent_presentation(n: int) -> PresentationCase:
    """Two-generator presentation of F(n+2;n,1,1): x^{n+2} = 0 and
    ((x+y)^{n+2} - x^{n+2})/y = 0, the division performed exactly."""
    if n < 1:
        raise ValueError("n must be >= 1")
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    r1 = x ** (n + 2)
    r2 = exact_divide((x + y) ** (n + 2) - r1, y)
    # top cohomology class: the basis monomials are x^a y^b with
    # a <= n+1, b <= n, so the top one is x^{n+1} y^n
    return PresentationCase(
        name=f"proj-tangent:{n}", nvars=2,
        generators=(r1, r2), relations=(r1, r2),
        top_class=_monomial(2, (n + 1, n)),
        expected_quotient_dim=(n + 2) * (n + 1))


def chern_recursion_identity(n: int) -> bool:
    """((x+y)^{n+2} - x^{n+2})/y equals y^{n+1} + c_1 y^n + ... + c_{n+1}
    with c_i = C(n+2, i) x^i, as an exact polynomial identity."""
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    lhs = exact_divide((x + y) ** (n + 2) - x ** (n + 2), y)
    rhs = Polynomial.zero(2)
    for i in range(n + 2):
        rhs = rhs + x ** i * y ** (n + 1 - i) * comb(n + 2, i)
    return lhs == rhs


def presentation_case(tag: str) -> PresentationCase:
    """Build a named case: a-full:N, b-full:N, c-full:N, so6-groebner,
    proj-tangent:N."""
    kind, _, arg = tag.partition(":")
    kind = kind.lower()
    if kind in ("a-full", "b-full", "c-full", "bc-full"):
        if not arg:
            raise ValueError(f"case {tag!r} needs a rank, e.g. {kind}:3")
        n = int(arg)
        if n < 1:
            raise ValueError("rank must be >= 1")
        if kind == "a-full":
            nvars = n + 1
            gens = borel_generators("A", n)
            rels = relations_a_full(n)
            top = _monomial(nvars, list(range(n + 1)))
            dim = factorial(n + 1)
        else:
            family = "B" if kind != "c-full" else "C"
            nvars = n
            gens = borel_generators(family, n)
            rels = relations_bc_full(n)
            top = _monomial(nvars, [2 * i - 1 for i in range(1, n + 1)])
            dim = 2 ** n * factorial(n)
        return PresentationCase(name=f"{kind}:{n}", nvars=nvars,
                                generators=tuple(gens), relations=tuple(rels),
                                top_class=top, expected_quotient_dim=dim)
    if kind == "so6-groebner":
        gens = borel_generators("D", 3)
        y = Polynomial.variable(3, 1)
        z = Polynomial.variable(3, 2)
        # the isotropy U(1) x U(2) has one positive root, whose linear form
        # is y - z in these coordinates
        return PresentationCase(
            name="so6-groebner", nvars=3, generators=tuple(gens),
            relations=tuple(_so6_claimed_basis()),
            top_class=y ** 2 * z ** 3 - y * z ** 4,
            extra_factors=(y - z,),
            expected_quotient_dim=24,
            claimed_basis=_so6_claimed_basis())
    if kind == "proj-tangent":
        if not arg:
            raise ValueError("case proj-tangent needs a parameter, "
                             "e.g. proj-tangent:2")
        return projectivized_tangent_presentation(int(arg))
    raise ValueError(f"unknown presentation case {tag!r}")


CASE_EXAMPLES = ["a-full:2", "a-full:4", "b-full:2", "b-full:3", "c-full:3",
                 "so6-groebner", "proj-tangent:1", "proj-tangent:2"]


# -- verification -------------------------------------------------------------

def verify_relations(case: PresentationCase,
                     gb: GroebnerBasis | None = None) -> bool:
    """True iff every claimed relation has normal form 0 mod the case ideal."""
    if gb is None:
        gb = case.groebner()
    return all(normal_form(r, gb).is_zero() for r in case.relations)


def verify_claimed_basis(case: PresentationCase,
                         gb: GroebnerBasis | None = None) -> bool:
    """True iff the computed reduced basis equals the claimed one as a set."""
    if not case.claimed_basis:
        raise ValueError(f"case {case.name} records no claimed basis")
    if gb is None:
        gb = case.groebner()
    return set(gb.generators) == set(case.claimed_basis)


def staircase_monomials(gb: GroebnerBasis, nvars: int) -> list[tuple[int, ...]]:
    """All monomials outside the leading-term ideal (finite quotients only)."""
    lts = gb.leading_terms()
    caps = []
    for i in range(nvars):
        pure = [e[i] for e in lts
                if all(x == 0 for j, x in enumerate(e) if j != i)]
        if not pure:
            raise ValueError("quotient is not finite-dimensional")
        caps.append(min(pure))
    out = []
    for exps in itertools.product(*(range(c) for c in caps)):
        if not any(_divides(lt, exps) for lt in lts):
            out.append(exps)
    return out


def top_normal_monomial(gb: GroebnerBasis, nvars: int) -> tuple[int, ...]:
    """The unique staircase monomial of maximal total degree."""
    mons = staircase_monomials(gb, nvars)
    top_deg = max(sum(m) for m in mons)
    tops = [m for m in mons if sum(m) == top_deg]
    if len(tops) != 1:
        raise ValueError(f"top staircase degree {top_deg} is not "
                         f"one-dimensional: {tops}")
    return tops[0]


def top_class_certificate(case: PresentationCase,
                          top_class: Polynomial | None = None,
                          gb: GroebnerBasis | None = None) -> Fraction:
    """The scalar lambda with NF(class * extra_factors) = lambda * (canonical
    top normal monomial).  lambda = 0 raises :class:`CertificateError`."""
    if top_class is None:
        top_class = case.top_class
    if top_class is None:
        raise ValueError(f"case {case.name} has no claimed top class")
    if gb is None:
        gb = case.groebner()
    r = normal_form(top_class, gb)
    for f in case.extra_factors:
        r = normal_form(r * f, gb)
    mono = top_normal_monomial(gb, case.nvars)
    if r.is_zero():
        raise CertificateError(
            f"case {case.name}: claimed top class reduces to 0 — it does "
            f"not generate the top cohomology")
    if set(r.terms) != {mono}:
        raise CertificateError(
            f"case {case.name}: reduced class {r} is not proportional to "
            f"the top normal monomial {mono}")
    return r.terms[mono]


def verify_case(case: PresentationCase) -> dict:
    """Run every check the case supports; returns a summary dict."""
    gb = case.groebner()
    out = {"case": case.name, "relations_ok": verify_relations(case, gb)}
    if case.expected_quotient_dim is not None:
        dim = quotient_dimension(gb, case.nvars)
        out["quotient_dim"] = dim
        out["quotient_dim_ok"] = dim == case.expected_quotient_dim
    if case.claimed_basis:
        out["claimed_basis_ok"] = verify_claimed_basis(case, gb)
    if case.top_class is not None:
        try:
            lam = top_class_certificate(case, gb=gb)
            out["certificate"] = lam
            out["certificate_ok"] = True
        except CertificateError as exc:
            out["certificate"] = Fraction(0)
            out["certificate_ok"] = False
            out["certificate_error"] = str(exc)
    out["ok"] = all(v for k, v in out.items() if k.endswith("_ok"))
    return out
