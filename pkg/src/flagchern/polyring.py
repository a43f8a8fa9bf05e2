"""Exact multivariate polynomial arithmetic over the rationals.

Polynomials are immutable values: a fixed number of variables, terms stored
as a map from dense exponent tuples to ``Fraction`` coefficients with no zero
coefficients kept.  The canonical term order used for printing, leading terms
and serialization is graded lexicographic (higher total degree first, ties
broken by the exponent tuple).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""

    def __init__(self, remainder: "Polynomial"):
        self.remainder = remainder
        super().__init__(f"division is not exact; remainder {remainder}")


def _grlex_key(exps: tuple[int, ...]) -> tuple:
    return (sum(exps), exps)


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != nvars:
                    raise ValueError(f"exponent vector {exps} has length != {nvars}")
                c = Fraction(coeff)
                if c != 0:
                    clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "Polynomial":
        return Polynomial(nvars)

    @staticmethod
    def constant(nvars: int, value) -> "Polynomial":
        return Polynomial(nvars, {(0,) * nvars: Fraction(value)})

    @staticmethod
    def one(nvars: int) -> "Polynomial":
        return Polynomial.constant(nvars, 1)

    @staticmethod
    def variable(nvars: int, index: int) -> "Polynomial":
        exps = [0] * nvars
        exps[index] = 1
        return Polynomial(nvars, {tuple(exps): Fraction(1)})

    @staticmethod
    def linear_form(coeffs: Sequence) -> "Polynomial":
        """The degree-1 polynomial sum(coeffs[i] * x_i)."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                exps = [0] * n
                exps[i] = 1
                terms[tuple(exps)] = Fraction(c)
        return Polynomial(n, terms)

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        if not self.terms:
            return True
        degrees = {sum(e) for e in self.terms}
        if len(degrees) != 1:
            return False
        return degree is None or degrees == {degree}

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        """Leading (exponents, coefficient) under graded lex."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("variable-count mismatch")
            return other
        return Polynomial.constant(self.nvars, other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            c = terms.get(exps, Fraction(0)) + coeff
            if c:
                terms[exps] = c
            else:
                terms.pop(exps, None)
        out = Polynomial.__new__(Polynomial)
        out.nvars = self.nvars
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        out = Polynomial.__new__(Polynomial)
        out.nvars = self.nvars
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            if c == 0:
                return Polynomial.zero(self.nvars)
            out = Polynomial.__new__(Polynomial)
            out.nvars = self.nvars
            out.terms = {e: k * c for e, k in self.terms.items()}
            return out
        other = self._coerce(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = terms.get(e, Fraction(0)) + c1 * c2
                if c:
                    terms[e] = c
                else:
                    terms.pop(e, None)
        out = Polynomial.__new__(Polynomial)
        out.nvars = self.nvars
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- evaluation and substitution -----------------------------------

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            v = coeff
            for x, e in zip(point, exps):
                if e:
                    v = v * x**e
            total += v
        return total

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Ring homomorphism x_i -> images[i]."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        nvars_out = images[0].nvars if images else self.nvars
        power_cache: dict[tuple[int, int], Polynomial] = {}

        def img_pow(i: int, e: int) -> Polynomial:
            key = (i, e)
            if key not in power_cache:
                power_cache[key] = images[i] ** e
            return power_cache[key]

        result = Polynomial.zero(nvars_out)
        for exps, coeff in self.terms.items():
            term = Polynomial.constant(nvars_out, coeff)
            for i, e in enumerate(exps):
                if e:
                    term = term * img_pow(i, e)
            result = result + term
        return result

    # -- printing and serialization ------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = _var_names(self.nvars)
        parts = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(
                f"{names[i]}^{e}" if e > 1 else names[i]
                for i, e in enumerate(exps)
                if e
            )
            if not mono:
                piece = str(coeff)
            elif coeff == 1:
                piece = mono
            elif coeff == -1:
                piece = f"-{mono}"
            else:
                piece = f"{coeff}*{mono}"
            if parts and not piece.startswith("-"):
                parts.append("+" + piece)
            else:
                parts.append(piece)
        return " ".join(parts)

    __repr__ = __str__

    def to_json(self) -> list:
        return [
            [list(exps), str(coeff.numerator), str(coeff.denominator)]
            for exps, coeff in self.sorted_terms()
        ]

    @staticmethod
    def from_json(nvars: int, data: Iterable) -> "Polynomial":
        terms = {}
        for exps, num, den in data:
            terms[tuple(exps)] = Fraction(int(num), int(den))
        return Polynomial(nvars, terms)


def _var_names(nvars: int) -> list[str]:
    if nvars <= 3:
        return ["x", "y", "z"][:nvars]
    if nvars == 4:
        return ["x", "y", "z", "w"]
    return [f"x{i + 1}" for i in range(nvars)]


def elementary_symmetric_in(forms: Sequence[Polynomial], k: int) -> Polynomial:
    """Degree-k elementary symmetric polynomial in the given linear forms."""
    if not 0 <= k <= len(forms):
        raise ValueError(f"k={k} out of range for {len(forms)} forms")
    nvars = forms[0].nvars if forms else 0
    e = [Polynomial.one(nvars)] + [Polynomial.zero(nvars) for _ in range(k)]
    for f in forms:
        for j in range(min(k, len(e) - 1), 0, -1):
            e[j] = e[j] + f * e[j - 1]
    return e[k]


def elementary_symmetric_values(values: Sequence[Fraction], k_max: int) -> list[Fraction]:
    """Values e_0..e_k_max of the elementary symmetric functions of numbers."""
    e = [Fraction(1)] + [Fraction(0)] * k_max
    for v in values:
        for j in range(k_max, 0, -1):
            e[j] = e[j] + v * e[j - 1]
    return e


def antisymmetrize(p: Polynomial, weyl) -> Polynomial:
    """Sum over w in the Weyl group of sign(w) * (w acting on p)."""
    total = Polynomial.zero(p.nvars)
    for w in weyl.elements:
        q = w.act(p)
        total = total + (q if w.sign == 1 else -q)
    return total


def exact_divide(p: Polynomial, q: Polynomial) -> Polynomial:
    """Exact quotient p/q; raises ExactDivisionError if the remainder is nonzero."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    quotient = Polynomial.zero(p.nvars)
    remainder = Polynomial.zero(p.nvars)
    r = p
    q_exps, q_coeff = q.leading()
    while not r.is_zero():
        r_exps, r_coeff = r.leading()
        diff = tuple(a - b for a, b in zip(r_exps, q_exps))
        if any(d < 0 for d in diff):
            # move the leading term to the remainder and keep going
            t = Polynomial(p.nvars, {r_exps: r_coeff})
            remainder = remainder + t
            r = r - t
            continue
        t = Polynomial(p.nvars, {diff: r_coeff / q_coeff})
        quotient = quotient + t
        r = r - t * q
    if not remainder.is_zero():
        raise ExactDivisionError(remainder)
    return quotient
