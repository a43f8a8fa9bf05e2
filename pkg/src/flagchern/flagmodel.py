"""Generalized flag manifolds G/K from (root system, Theta).

A flag manifold is modelled by the root-system data only: the subset Theta of
simple roots generating K, the complementary roots, the isotropy summands
(grouped by equal restriction to the orthogonal complement of span(Theta)),
invariant almost complex structures as sign vectors on the positive T-roots,
the integrability test, and classification up to conjugation and equivalence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .rootsys import (
    RootSystem,
    Vector,
    WeylGroup,
    build_root_system,
    reflection_matrix,
    vec_dot,
    vec_neg,
    vec_sub,
    weyl_group,
    weyl_group_from_reflections,
)

MAX_T_ROOTS = 20


@dataclass(frozen=True)
class IsotropySummand:
    t_root: Vector
    roots: tuple[Vector, ...]  # the positive complementary roots of the summand
    coeffs: tuple[Fraction, ...]  # t_root over the kappa-images of removed simples

    @property
    def dim_complex(self) -> int:
        return len(self.roots)

    @property
    def height(self) -> Fraction:
        return sum(self.coeffs, Fraction(0))


@dataclass(frozen=True)
class InvariantACS:
    signs: tuple[int, ...]  # one entry of +-1 per positive T-root, canonical order

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +-1")

    def conjugate(self) -> "InvariantACS":
        return InvariantACS(tuple(-s for s in self.signs))

    def label(self) -> str:
        return "(" + ",".join("+" if s == 1 else "-" for s in self.signs) + ")"


class FlagManifold:
    """G/K described by a root system and a subset Theta of the simple roots."""

    def __init__(self, rs: RootSystem, theta):
        theta = tuple(theta)
        simples = set(rs.simples)
        for t in theta:
            if tuple(t) not in simples:
                raise ValueError(f"{t} is not a simple root of {rs.family}{rs.rank}")
        self.rs = rs
        self.theta = theta
        span_members = set(theta)
        self.k_roots = frozenset(
            r for r in rs.roots if self._in_span_of_theta(r)
        )
        self.k_positives = tuple(r for r in rs.positives if r in self.k_roots)
        self.complementary = frozenset(rs.roots - self.k_roots)
        self.complementary_pos = tuple(
            r for r in rs.positives if r not in self.k_roots
        )
        self.complex_dim = len(self.complementary_pos)
        gens = [reflection_matrix(a) for a in theta]
        if gens:
            self.w_k = weyl_group_from_reflections(gens, rs.ambient_dim)
        else:
            self.w_k = weyl_group_from_reflections([], rs.ambient_dim)
        self.removed_simples = tuple(s for s in rs.simples if s not in span_members)
        self._summands: tuple[IsotropySummand, ...] | None = None
        self._cache: dict = {}

    # -- linear algebra over span(Theta) --------------------------------

    def _theta_projection(self, v: Vector) -> Vector:
        """Orthogonal projection of v onto span(Theta)."""
        if not self.theta:
            return tuple(Fraction(0) for _ in v)
        gram = [[vec_dot(a, b) for b in self.theta] for a in self.theta]
        rhs = [vec_dot(a, v) for a in self.theta]
        from .rootsys import _solve

        coeffs = _solve(gram, rhs)
        out = [Fraction(0)] * len(v)
        for c, a in zip(coeffs, self.theta):
            for i, x in enumerate(a):
                out[i] += c * x
        return tuple(out)

    def _in_span_of_theta(self, v: Vector) -> bool:
        proj = self._theta_projection(v)
        return all(Fraction(a) == b for a, b in zip(v, proj))

    def kappa(self, v: Vector) -> Vector:
        """Restriction map: component of v orthogonal to span(Theta)."""
        proj = self._theta_projection(v)
        return vec_sub(tuple(Fraction(x) for x in v), proj)

    # -- derived structure ----------------------------------------------

    def weyl(self) -> WeylGroup:
        return weyl_group(self.rs)

    def euler_characteristic(self) -> int:
        total = len(self.weyl())
        k = len(self.w_k)
        assert total % k == 0
        return total // k

    def summands(self) -> tuple[IsotropySummand, ...]:
        if self._summands is None:
            self._summands = t_root_decomposition(self)
        return self._summands

    def summand_index(self, root: Vector) -> tuple[int, int]:
        """(summand position, +1/-1 for positive/negative part) of a complementary root."""
        if self._cache.get("summand_index") is None:
            index = {}
            for i, s in enumerate(self.summands()):
                for r in s.roots:
                    index[r] = (i, 1)
                    index[vec_neg(r)] = (i, -1)
            self._cache["summand_index"] = index
        return self._cache["summand_index"][tuple(Fraction(x) for x in root)]

    def acs_sign_of_root(self, acs: InvariantACS, root: Vector) -> int:
        i, part = self.summand_index(root)
        return acs.signs[i] * part

    def name(self) -> str:
        blocks = self._block_string()
        return blocks

    def _block_string(self) -> str:
        fam = self.rs.family
        if fam == "G2":
            if not self.theta:
                return "G2/T"
            kept = [i + 1 for i, s in enumerate(self.rs.simples)
                    if s in self.theta]
            if kept == [1]:
                return "G2-long"
            if kept == [2]:
                return "G2-short"
            return "G2(theta=" + ",".join(str(list(t)) for t in self.theta) + ")"
        tag = {"A": "F", "B": "FB", "C": "FC", "D": "FD"}[fam]
        n = self.rs.rank + 1 if fam == "A" else self.rs.rank
        removed = []
        for i, s in enumerate(self.rs.simples):
            if s in self.removed_simples:
                removed.append(i + 1)
        bounds = removed + ([n] if fam == "A" else [])
        blocks, prev = [], 0
        for b in bounds:
            blocks.append(b - prev)
            prev = b
        if fam == "A" and len(blocks) == n:
            return f"F({n})"
        return f"{tag}({n};{','.join(map(str, blocks))})"

    def __repr__(self):
        return f"FlagManifold({self.name()}, complex_dim={self.complex_dim})"


def make_flag(rs: RootSystem, theta) -> FlagManifold:
    return FlagManifold(rs, theta)


def t_root_decomposition(flag: FlagManifold) -> tuple[IsotropySummand, ...]:
    """Positive isotropy summands, grouped by equal kappa and canonically ordered.

    The order is by height over the simple T-roots (the kappa-images of the
    removed simple roots), ties broken so that multiples of earlier removed
    simples come first.
    """
    groups: dict[Vector, list[Vector]] = {}
    for a in flag.complementary_pos:
        groups.setdefault(flag.kappa(a), []).append(a)

    rs = flag.rs
    summands = []
    for t_root, roots in groups.items():
        # integer coefficients over removed simples, read off any member root
        coeffs = rs.simple_coefficients(roots[0])
        removed_idx = [i for i, s in enumerate(rs.simples) if s in flag.removed_simples]
        cvec = tuple(coeffs[i] for i in removed_idx)
        summands.append(IsotropySummand(t_root, tuple(roots), cvec))
    summands.sort(key=lambda s: (s.height, tuple(-c for c in s.coeffs)))
    return tuple(summands)


def enumerate_acs(flag: FlagManifold, up_to_conjugation: bool = True) -> list[InvariantACS]:
    s = len(flag.summands())
    if s > MAX_T_ROOTS:
        raise ValueError(f"{s} positive T-roots exceed the practical bound {MAX_T_ROOTS}")
    out = []
    for signs in itertools.product((1, -1), repeat=s):
        if up_to_conjugation and signs[0] != 1:
            continue
        out.append(InvariantACS(signs))
    return out


def is_integrable(flag: FlagManifold, acs: InvariantACS) -> bool:
    """True iff the K-roots together with the +1 roots form a closed root subset."""
    plus: set[Vector] = set(flag.k_roots)
    for i, summand in enumerate(flag.summands()):
        if acs.signs[i] == 1:
            plus.update(summand.roots)
        else:
            plus.update(vec_neg(r) for r in summand.roots)
    roots = flag.rs.roots
    members = list(plus)
    for a in members:
        for b in members:
            s = tuple(x + y for x, y in zip(a, b))
            if s in roots and s not in plus:
                return False
    return True


def inner_summand_actions(flag: FlagManifold) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Actions on the positive T-roots of the Weyl elements that stabilize the
    K-roots setwise (the elements inducing self-equivalences of the manifold).

    Each action is (target index per summand, orientation +-1 per summand):
    summand i maps onto orients[i] * summand targets[i].
    """
    k_roots = flag.k_roots
    summands = flag.summands()
    actions = set()
    for w in flag.weyl():
        if any(w.apply(r) not in k_roots for r in flag.k_positives):
            continue
        targets, orients = [], []
        consistent = True
        for s in summands:
            images = {flag.summand_index(w.apply(r)) for r in s.roots}
            if len(images) != 1:
                consistent = False
                break
            i, part = images.pop()
            targets.append(i)
            orients.append(part)
        if not consistent:
            raise AssertionError("Weyl element does not permute the isotropy summands")
        actions.add((tuple(targets), tuple(orients)))
    return sorted(actions)


@dataclass
class ACSClass:
    representative: InvariantACS
    members: tuple[InvariantACS, ...]
    integrable: bool

    @property
    def size(self) -> int:
        return len(self.members)


def classify_acs(flag: FlagManifold) -> list[ACSClass]:
    """Classes of invariant almost complex structures up to equivalence, with
    conjugation identifying only isomorphic complex structures.

    Two structures are equivalent when a Weyl element stabilizing the K-roots
    carries one to the other; that gives orbits on all 2^s sign vectors.  An
    orbit is then merged with its conjugate (global negation) orbit exactly
    when its structures are integrable, since conjugating an integrable
    structure yields an isomorphic complex manifold, whereas a non-integrable
    structure and its conjugate stay inequivalent (even though their Chern
    numbers agree whenever the complex dimension is even).

    Reported members are the conjugation-reduced census representatives
    (first sign +) contained in the class.
    """
    actions = inner_summand_actions(flag)
    s = len(flag.summands())
    if s > MAX_T_ROOTS:
        raise ValueError(f"{s} positive T-roots exceed the practical bound {MAX_T_ROOTS}")

    unseen = set(itertools.product((1, -1), repeat=s))
    orbits: list[frozenset[tuple[int, ...]]] = []
    while unseen:
        start = min(unseen)
        orbit = {start}
        frontier = [start]
        while frontier:
            cur = frontier.pop()
            for targets, orients in actions:
                img = [0] * len(cur)
                for i, v in enumerate(cur):
                    img[targets[i]] = v * orients[i]
                nxt = tuple(img)
                if nxt not in orbit:
                    orbit.add(nxt)
                    frontier.append(nxt)
        unseen -= orbit
        orbits.append(frozenset(orbit))

    index = {o: k for k, o in enumerate(orbits)}
    merged: list[set[tuple[int, ...]]] = []
    used: set[int] = set()
    for k, orbit in enumerate(orbits):
        if k in used:
            continue
        used.add(k)
        cls = set(orbit)
        conj = frozenset(tuple(-v for v in x) for x in orbit)
        if conj != orbit and is_integrable(flag, InvariantACS(min(orbit))):
            used.add(index[conj])
            cls |= conj
        merged.append(cls)

    classes = []
    for cls in merged:
        canonical = sorted((v for v in cls if v[0] == 1), reverse=True)
        if not canonical:
            canonical = sorted((tuple(-x for x in v) for v in cls), reverse=True)
        members = tuple(InvariantACS(v) for v in canonical)
        verdicts = {is_integrable(flag, InvariantACS(v)) for v in cls}
        if len(verdicts) != 1:
            raise AssertionError("equivalence class mixes integrable and non-integrable members")
        classes.append(ACSClass(members[0], members, verdicts.pop()))
    classes.sort(key=lambda c: c.representative.signs, reverse=True)
    return classes


def euler_characteristic(flag: FlagManifold) -> int:
    return flag.euler_characteristic()


# -- manifold name grammar -------------------------------------------------

_ALIASES = {
    "SO(5)/T": "FB(2;1,1)",
    "SP(2)/T": "FC(2;1,1)",
    "SP(3)/T": "FC(3;1,1,1)",
    "SO(7)/U(3)": "FB(3;3)",
    "SO(8)/U(4)": "FD(4;4)",
    "SO(6)/T": "FD(3;1,1,1)",
}


def parse_manifold(name: str) -> FlagManifold:
    """Build a flag manifold from its textual name.

    Grammar: F(n;n1,...,nk) for type A block flags (F(n) = full flag),
    FB/FC/FD(n;n1,...,nk) for types B/C/D, and G2/T, G2-long, G2-short.
    """
    text = name.strip()
    upper = text.upper()
    upper = _ALIASES.get(upper, upper)
    if upper == "G2/T":
        return make_flag(build_root_system("G2", 2), [])
    if upper in ("G2-LONG", "G2-SHORT"):
        rs = build_root_system("G2", 2)
        kept = rs.simples[0] if upper == "G2-LONG" else rs.simples[1]
        return make_flag(rs, [kept])

    import re

    m = re.fullmatch(r"(F|FB|FC|FD)\((\d+)(?:;([\d,]+))?\)", upper)
    if not m:
        raise ValueError(f"cannot parse manifold name {name!r}")
    tag, n_text, blocks_text = m.groups()
    n = int(n_text)
    family = {"F": "A", "FB": "B", "FC": "C", "FD": "D"}[tag]
    if blocks_text is None:
        blocks = [1] * n
    else:
        blocks = [int(b) for b in blocks_text.split(",")]
    if sum(blocks) != n or any(b < 1 for b in blocks):
        raise ValueError(f"block sizes {blocks} must be positive and sum to {n}")
    rank = n - 1 if family == "A" else n
    rs = build_root_system(family, rank)
    cuts = set(itertools.accumulate(blocks))
    if family == "A":
        cuts.discard(n)
    removed = {i + 1 for i in range(len(rs.simples)) if i + 1 in cuts}
    theta = [s for i, s in enumerate(rs.simples) if i + 1 not in removed]
    return make_flag(rs, theta)
