"""Buchberger's algorithm, normal forms, and Borel presentations.

The reducer processes monomials through a lazy max-heap, which keeps
normal-form computation close to linear in the number of term operations.
Bases are reduced (interreduced, monic) and sorted by leading monomial, so
the output of ``buchberger`` is canonical for a fixed monomial order.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polyring import Polynomial

ORDER_KINDS = ("lex", "grlex", "grevlex")


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "lex"
    priority: tuple[int, ...] | None = None  # most significant variable first

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, exps: tuple[int, ...]) -> tuple[int, ...]:
        p = self.priority if self.priority is not None else range(len(exps))
        pe = tuple(exps[i] for i in p)
        if self.kind == "lex":
            return pe
        if self.kind == "grlex":
            return (sum(exps),) + pe
        return (sum(exps),) + tuple(-e for e in reversed(pe))

    def negkey(self, exps: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(-v for v in self.key(exps))

    def leading(self, p: Polynomial) -> tuple[tuple[int, ...], Fraction]:
        exps = max(p.terms, key=self.key)
        return exps, p.terms[exps]


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool = True

    def leading_terms(self) -> list[tuple[int, ...]]:
        return [self.order.leading(g)[0] for g in self.generators]


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def normal_form(p: Polynomial, gb: GroebnerBasis | Sequence[Polynomial],
                order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of p under multivariate division by the basis."""
    if isinstance(gb, GroebnerBasis):
        gens = gb.generators
        order = gb.order
    else:
        gens = tuple(gb)
        if order is None:
            order = MonomialOrder("lex")
    table = []
    for g in gens:
        if g.is_zero():
            continue
        lt, lc = order.leading(g)
        rest = [(e, c) for e, c in g.terms.items() if e != lt]
        table.append((lt, lc, rest))

    coeffs = dict(p.terms)
    heap = [(order.negkey(e), e) for e in coeffs]
    heapq.heapify(heap)
    remainder: dict[tuple[int, ...], Fraction] = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = coeffs.pop(e, None)
        if c is None or c == 0:
            continue
        for lt, lc, rest in table:
            if _divides(lt, e):
                shift = tuple(x - y for x, y in zip(e, lt))
                factor = c / lc
                for ge, gc in rest:
                    ne = tuple(x + y for x, y in zip(shift, ge))
                    old = coeffs.get(ne)
                    if old is None:
                        coeffs[ne] = -factor * gc
                        heapq.heappush(heap, (order.negkey(ne), ne))
                    else:
                        coeffs[ne] = old - factor * gc
                break
        else:
            remainder[e] = c
    return Polynomial(p.nvars, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lf, cf = order.leading(f)
    lg, cg = order.leading(g)
    lcm = _lcm(lf, lg)
    mf = Polynomial(f.nvars, {tuple(a - b for a, b in zip(lcm, lf)): 1 / cf})
    mg = Polynomial(g.nvars, {tuple(a - b for a, b in zip(lcm, lg)): 1 / cg})
    return mf * f - mg * g


def buchberger(generators: Sequence[Polynomial],
               order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Groebner basis via Buchberger with the normal selection strategy
    and both classical pair-skipping criteria."""
    if order is None:
        order = MonomialOrder("lex")
    basis = [g for g in generators if not g.is_zero()]
    if not basis:
        raise ValueError("need at least one nonzero generator")

    lts = [order.leading(g)[0] for g in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    done: set[tuple[int, int]] = set()

    while pairs:
        i, j = min(pairs, key=lambda ij: order.key(_lcm(lts[ij[0]], lts[ij[1]])))
        pairs.remove((i, j))
        done.add((i, j))
        lcm = _lcm(lts[i], lts[j])
        # product (coprime leading monomials) criterion
        if lcm == tuple(a + b for a, b in zip(lts[i], lts[j])):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not _divides(lts[k], lcm):
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik in done and pjk in done:
                skip = True
                break
        if skip:
            continue
        h = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if not h.is_zero():
            basis.append(h)
            lts.append(order.leading(h)[0])
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))

    # minimalize: drop generators whose leading term another kept one divides
    minimal: list[int] = []
    for i in sorted(range(len(basis)), key=lambda i: order.key(lts[i])):
        if not any(_divides(lts[j], lts[i]) for j in minimal):
            minimal.append(i)
    # interreduce and normalize to monic
    reduced: list[Polynomial] = []
    for i in minimal:
        others = [basis[j] for j in minimal if j != i]
        r = normal_form(basis[i], others, order)
        _, lc = order.leading(r)
        reduced.append(r * (1 / lc))
    reduced.sort(key=lambda g: order.key(order.leading(g)[0]))
    return GroebnerBasis(tuple(reduced), order, True)


def quotient_dimension(gb: GroebnerBasis, nvars: int) -> int:
    """Vector-space dimension of the quotient ring: monomials under the staircase."""
    lts = gb.leading_terms()
    caps = []
    for i in range(nvars):
        pure = [e[i] for e in lts if all(x == 0 for j, x in enumerate(e) if j != i)]
        if not pure:
            raise ValueError("quotient is not finite-dimensional")
        caps.append(min(pure))
    count = 0
    for exps in itertools.product(*(range(c) for c in caps)):
        if not any(_divides(lt, exps) for lt in lts):
            count += 1
    return count


# -- Borel presentations ------------------------------------------------

def _power_sum(nvars: int, k: int) -> Polynomial:
    terms = {}
    for i in range(nvars):
        e = [0] * nvars
        e[i] = k
        terms[tuple(e)] = Fraction(1)
    return Polynomial(nvars, terms)


def _complete_homogeneous(nvars: int, k: int, first_var: int) -> Polynomial:
    """h_k in the variables x_{first_var}..x_{nvars-1} (0-indexed)."""
    terms = {}
    varset = range(first_var, nvars)
    for combo in itertools.combinations_with_replacement(varset, k):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        terms[tuple(e)] = Fraction(1)
    return Polynomial(nvars, terms)


def _product_of_vars(nvars: int) -> Polynomial:
    return Polynomial(nvars, {(1,) * nvars: Fraction(1)})


def borel_generators(family: str, rank: int) -> list[Polynomial]:
    """Generators of the full-flag Borel ideal for the ambient family."""
    family = family.upper()
    if family == "A":
        n = rank + 1
        return [_power_sum(n, k) for k in range(1, n + 1)]
    if family in ("B", "C"):
        n = rank
        return [_power_sum(n, 2 * k) for k in range(1, n + 1)]
    if family == "D":
        n = rank
        return [_power_sum(n, 2 * k) for k in range(1, n)] + [_product_of_vars(n)]
    if family == "G2":
        return [_power_sum(3, 1), _power_sum(3, 2), _power_sum(3, 6)]
    raise ValueError(f"no Borel presentation for family {family!r}")


def borel_presentation(flag) -> list[Polynomial]:
    """Borel-ideal generators for the full flag over the flag's root system."""
    rs = flag.rs if hasattr(flag, "rs") else flag
    return borel_generators(rs.family, rs.rank)


def _staircase_seed(family: str, rank: int) -> list[Polynomial] | None:
    """Known reduced lex Groebner bases that generate the same Borel ideal.

    For the symmetric (type A) ideal the complete homogeneous polynomials
    h_k(x_k..x_n) form the reduced lex basis; squaring the variables gives
    the hyperoctahedral (B/C) analogue.  Used to seed buchberger when the
    raw power sums would be slow (many variables).
    """
    family = family.upper()
    if family == "A":
        n = rank + 1
        return [_complete_homogeneous(n, k, k - 1) for k in range(1, n + 1)]
    if family in ("B", "C"):
        n = rank
        squared = []
        for k in range(1, n + 1):
            h = _complete_homogeneous(n, k, k - 1)
            squared.append(Polynomial(n, {tuple(2 * e for e in exps): c
                                          for exps, c in h.terms.items()}))
        return squared
    return None


_BOREL_GB_CACHE: dict = {}


def borel_groebner(family: str, rank: int,
                   order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the full-flag Borel ideal (cached)."""
    if order is None:
        order = MonomialOrder("lex")
    key = (family.upper(), rank, order)
    if key in _BOREL_GB_CACHE:
        return _BOREL_GB_CACHE[key]
    gens = borel_generators(family, rank)
    nvars = gens[0].nvars
    seed = _staircase_seed(family, rank)
    if seed is not None and order.kind == "lex" and order.priority is None and nvars >= 6:
        gb = buchberger(seed, order)
        # the seed basis must present the same ideal: the raw generators
        # reduce to zero against it
        for g in gens:
            if not normal_form(g, gb).is_zero():
                raise AssertionError("staircase seed does not contain the Borel ideal")
    else:
        gb = buchberger(gens, order)
    _BOREL_GB_CACHE[key] = gb
    return gb
