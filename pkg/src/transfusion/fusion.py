"""Twisted bundles over a finite group and their fusion product.

A degree-3 cocycle on a group induces, through transgression, a 2-cocycle
on each loop sector; bundles graded by group elements carry projective
centralizer actions against those sector cocycles. Multiplying supports
gives a product on such bundles, with a correction phase on each summand
taken from the product homotopy of the 3-cocycle. The identity

    delta(mu) = e1-pullback + e2-pullback - e12-pullback of tau

is exactly what makes the corrected product land back in the same twisted
category, makes the character-level product match the bundle-level one,
and forces the sign of the correction phase; make_context verifies it
before anything else runs.

Matrices act on row vectors throughout, so a path "a then b" multiplies as
R(a) @ R(b).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .cochains import (
    Cochain,
    delta,
    inverse_transgression,
    is_cocycle,
    product_homotopy,
    pullback,
)
from .cyclotomic import (
    Cyclotomic,
    as_cyclotomic,
    identity_matrix,
    kron,
    mat_eq,
    mat_mul,
    mat_scale,
    mat_trace,
    matrix_rank,
    phase,
    row_reduce,
)
from .groups import (
    FiniteGroup,
    centralizer,
    conjugacy_classes,
    subgroup_as_group,
)
from .groupoids import (
    SectorGroupoid,
    evaluation_hom,
    k_sectors,
    point_groupoid,
)
from .projrep import (
    BasisError,
    TwoCocycleGroup,
    abelian_projective_irreps,
    group_irreducibles,
    twisted_rank,
)

# beyond this many base-group 4-tuples the context identities are checked on
# a seeded sample instead of the full nerve
FULL_SWEEP_CAP = 2_000_000
SAMPLE_SWEEPS = 2000

Matrix = Tuple[Tuple[Cyclotomic, ...], ...]


class FusionError(RuntimeError):
    pass


@dataclass(eq=False)
class TwistContext:
    """A group with a degree-3 cocycle and everything derived from it.

    tau is the transgressed 2-cochain on the loop sectors, mu the product
    homotopy on the pair sectors. normalized records whether both vanish
    whenever a conjugator or loop is the identity; bundle constructions
    that need strict identities require it. validation records whether the
    defining identities were swept in full or sampled.
    """

    group: FiniteGroup
    phi: Cochain
    base: object
    sectors: SectorGroupoid
    two_sectors: SectorGroupoid
    tau: Cochain
    mu: Cochain
    normalized: bool
    validation: str
    conductor: int

    def tau_value(self, g: int, u1: int, u2: int) -> Fraction:
        """Sector 2-cocycle at loop g against conjugators u1 then u2."""
        o1 = self.sectors.obj_index[(0, (g,))]
        a1 = self.sectors.arrow_index[(o1, u1)]
        g1 = self.group.conjugate(g, u1)
        o2 = self.sectors.obj_index[(0, (g1,))]
        a2 = self.sectors.arrow_index[(o2, u2)]
        return self.tau.value((a1, a2))

    def mu_value(self, g1: int, g2: int, u: int) -> Fraction:
        """Product homotopy at the loop pair (g1, g2) against conjugator u."""
        o = self.two_sectors.obj_index[(0, (g1, g2))]
        a = self.two_sectors.arrow_index[(o, u)]
        return self.mu.value((a,))


def _sampled_context_check(
    ctx: "TwistContext", e1, e2, e12, samples: int
) -> None:
    """Pointwise spot check of the context identities on seeded tuples."""
    rng = random.Random("context-sweep")
    lam = ctx.sectors.groupoid
    lam2 = ctx.two_sectors.groupoid
    tau, mu = ctx.tau, ctx.mu
    for _ in range(samples):
        a1 = rng.randrange(lam.n_arrows)
        x = lam.target[a1]
        a2 = lam.out_arrows[x][rng.randrange(len(lam.out_arrows[x]))]
        y = lam.target[a2]
        a3 = lam.out_arrows[y][rng.randrange(len(lam.out_arrows[y]))]
        total = (
            tau.value((a2, a3))
            - tau.value((lam.compose[(a1, a2)], a3))
            + tau.value((a1, lam.compose[(a2, a3)]))
            - tau.value((a1, a2))
        ) % 1
        if total:
            raise FusionError(f"transgressed cochain fails to be closed at {(a1, a2, a3)}")
    for _ in range(samples):
        s1 = rng.randrange(lam2.n_arrows)
        x = lam2.target[s1]
        s2 = lam2.out_arrows[x][rng.randrange(len(lam2.out_arrows[x]))]
        lhs = (mu.value((s2,)) - mu.value((lam2.compose[(s1, s2)],)) + mu.value((s1,))) % 1
        rhs = (
            tau.value((e1.arrow_map[s1], e1.arrow_map[s2]))
            + tau.value((e2.arrow_map[s1], e2.arrow_map[s2]))
            - tau.value((e12.arrow_map[s1], e12.arrow_map[s2]))
        ) % 1
        if lhs != rhs:
            raise FusionError(f"product identity fails at pair-sector tuple {(s1, s2)}")


def make_context(group: FiniteGroup, phi: Cochain) -> TwistContext:
    """Validate a degree-3 cocycle and derive its fusion data.

    Checks, exactly: phi is closed; the transgressed tau is closed; and the
    product identity relating mu to the three evaluation pullbacks of tau.
    Full sweeps up to FULL_SWEEP_CAP base 4-tuples, seeded samples beyond.
    """
    base = point_groupoid(group)
    if phi.groupoid is not base:
        raise ValueError("cochain does not live on the one-object groupoid of the group")
    if phi.degree != 3:
        raise ValueError("fusion context needs a degree-3 cochain")
    if not is_cocycle(phi):
        raise ValueError("fusion context needs a closed cochain")
    sectors = k_sectors(base, 1)
    two = k_sectors(base, 2)
    tau = inverse_transgression(phi, sectors)
    mu = product_homotopy(phi, two)
    e1 = evaluation_hom(two, "e1")
    e2 = evaluation_hom(two, "e2")
    e12 = evaluation_hom(two, "e12")

    n = group.order
    ctx = TwistContext(
        group=group,
        phi=phi,
        base=base,
        sectors=sectors,
        two_sectors=two,
        tau=tau,
        mu=mu,
        normalized=False,
        validation="",
        conductor=1,
    )
    if n**4 <= FULL_SWEEP_CAP:
        if not delta(tau).is_zero():
            raise FusionError("transgressed cochain is not closed; transgression bug")
        combined = pullback(e1, tau) + pullback(e2, tau) - pullback(e12, tau)
        if combined != delta(mu):
            raise FusionError("product identity fails; homotopy bug")
        ctx.validation = "full"
    else:
        _sampled_context_check(ctx, e1, e2, e12, SAMPLE_SWEEPS)
        ctx.validation = f"sampled:{SAMPLE_SWEEPS}"

    normalized = (
        all(
            ctx.tau_value(g, 0, u) == 0 and ctx.tau_value(g, u, 0) == 0
            for g in group.elements()
            for u in group.elements()
        )
        and all(
            ctx.tau_value(0, u1, u2) == 0
            for u1 in group.elements()
            for u2 in group.elements()
        )
        and all(
            ctx.mu_value(g1, g2, 0) == 0
            for g1 in group.elements()
            for g2 in group.elements()
        )
        and all(
            ctx.mu_value(0, g, u) == 0 and ctx.mu_value(g, 0, u) == 0
            for g in group.elements()
            for u in group.elements()
        )
    )
    ctx.normalized = normalized
    conductor = 1
    for c in (tau, mu):
        for v in c.table.values():
            conductor = math.lcm(conductor, v.denominator)
    ctx.conductor = conductor
    return ctx


@dataclass(eq=False)
class TwistedBundle:
    """Vector spaces graded by group elements with conjugation maps.

    dims[g] is the fiber dimension over g. maps[(g, u)] is the matrix of
    the map from the fiber over g to the fiber over u^-1 g u, present for
    every g with a nonzero fiber and every u. The composite of the maps for
    u1 and u2 must equal the map for u1*u2 times the phase of
    tau(g; u1, u2).
    """

    context: TwistContext
    dims: Tuple[int, ...]
    maps: Dict[Tuple[int, int], Matrix] = field(repr=False)

    def total_dim(self) -> int:
        return sum(self.dims)

    def support(self) -> Tuple[int, ...]:
        return tuple(g for g, d in enumerate(self.dims) if d)


def bundle_violation(v: TwistedBundle) -> Optional[Tuple[str, tuple]]:
    """First failed bundle axiom as (kind, witness), or None if none fail."""
    ctx = v.context
    group = ctx.group
    n = group.order
    if len(v.dims) != n:
        return ("grading-length", (len(v.dims),))
    part = conjugacy_classes(group)
    for cls in part.classes:
        if len({v.dims[h] for h in cls}) != 1:
            return ("dims-not-class-constant", tuple(cls))
    wanted = {(g, u) for g in range(n) if v.dims[g] for u in range(n)}
    if set(v.maps) != wanted:
        missing = wanted - set(v.maps)
        extra = set(v.maps) - wanted
        return ("map-keys", (tuple(sorted(missing))[:3], tuple(sorted(extra))[:3]))
    for (g, u), mat in v.maps.items():
        h = group.conjugate(g, u)
        if len(mat) != v.dims[g] or any(len(row) != v.dims[h] for row in mat):
            return ("matrix-shape", (g, u))
    for g in range(n):
        if v.dims[g] and not mat_eq(v.maps[(g, 0)], identity_matrix(v.dims[g])):
            return ("identity-map", (g,))
    for g in range(n):
        if not v.dims[g]:
            continue
        for u1 in range(n):
            h = group.conjugate(g, u1)
            left = v.maps[(g, u1)]
            for u2 in range(n):
                lhs = mat_mul(left, v.maps[(h, u2)])
                rhs = mat_scale(
                    phase(ctx.tau_value(g, u1, u2)),
                    v.maps[(g, group.mult[u1][u2])],
                )
                if not mat_eq(lhs, rhs):
                    return ("composition", (g, u1, u2))
    return None


def validate_bundle(v: TwistedBundle) -> bool:
    """Whether the grading, identity maps, and twisted composition all hold."""
    return bundle_violation(v) is None


def unit_bundle(ctx: TwistContext) -> TwistedBundle:
    """Line bundle over the identity element.

    Its action carries the phase of mu at the identity pair, which is what
    the product identity requires; in a normalized context that phase is
    zero and the action is trivial.
    """
    n = ctx.group.order
    dims = tuple(1 if g == 0 else 0 for g in range(n))
    maps = {
        (0, u): ((phase(ctx.mu_value(0, 0, u)),),) for u in range(n)
    }
    return TwistedBundle(context=ctx, dims=dims, maps=maps)


def regular_bundle(ctx: TwistContext) -> TwistedBundle:
    """The sector cocycle at the identity acting on its own group algebra.

    Fiber of dimension |G| over the identity element; the basis vector at h
    moves to the one at h*u with the phase of tau(1; h, u)."""
    if not ctx.normalized:
        raise ValueError("regular bundle needs a normalized context")
    group = ctx.group
    n = group.order
    zero = as_cyclotomic(0)
    dims = tuple(n if g == 0 else 0 for g in range(n))
    maps = {}
    for u in range(n):
        rows = []
        for h in range(n):
            row = [zero] * n
            row[group.mult[h][u]] = phase(ctx.tau_value(0, h, u))
            rows.append(tuple(row))
        maps[(0, u)] = tuple(rows)
    return TwistedBundle(context=ctx, dims=dims, maps=maps)


def star(a: TwistedBundle, b: TwistedBundle) -> TwistedBundle:
    """Fusion product: fibers multiply supports, maps pick up a mu phase.

    The summand over (g1, g2) inside the fiber over g1*g2 is the tensor
    product of the two fibers; the conjugation map on it is the tensor
    product of the two maps times phase(-mu(g1, g2; u)). The sign in the
    exponent is forced: with it, the product identity turns the twisted
    composition rules for a and b into the rule for the product.
    """
    if a.context is not b.context:
        raise ValueError("bundles live over different contexts")
    ctx = a.context
    group = ctx.group
    n = group.order
    dims = [0] * n
    pairs: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
    offsets: List[Dict[Tuple[int, int], int]] = [dict() for _ in range(n)]
    for g1 in range(n):
        if not a.dims[g1]:
            continue
        for g2 in range(n):
            if not b.dims[g2]:
                continue
            g = group.mult[g1][g2]
            offsets[g][(g1, g2)] = dims[g]
            pairs[g].append((g1, g2))
            dims[g] += a.dims[g1] * b.dims[g2]
    zero = as_cyclotomic(0)
    maps: Dict[Tuple[int, int], Matrix] = {}
    for g in range(n):
        if not dims[g]:
            continue
        for u in range(n):
            h = group.conjugate(g, u)
            rows = [[zero] * dims[h] for _ in range(dims[g])]
            for g1, g2 in pairs[g]:
                h1 = group.conjugate(g1, u)
                h2 = group.conjugate(g2, u)
                block = kron(a.maps[(g1, u)], b.maps[(g2, u)])
                c = phase(-ctx.mu_value(g1, g2, u))
                r0 = offsets[g][(g1, g2)]
                c0 = offsets[h][(h1, h2)]
                for i, brow in enumerate(block):
                    target = rows[r0 + i]
                    for j, x in enumerate(brow):
                        if not x.is_zero():
                            target[c0 + j] = c * x
            maps[(g, u)] = tuple(tuple(r) for r in rows)
    return TwistedBundle(context=ctx, dims=tuple(dims), maps=maps)


def untwisted_star(a: TwistedBundle, b: TwistedBundle) -> TwistedBundle:
    """Independent oracle for the product when there is no twist at all.

    Written without the mu machinery on purpose: plain direct sum of
    tensor products over factorizations of each group element, maps
    permuted by simultaneous conjugation. Only valid when both derived
    cochains vanish, which is checked.
    """
    if a.context is not b.context:
        raise ValueError("bundles live over different contexts")
    ctx = a.context
    if not (ctx.tau.is_zero() and ctx.mu.is_zero()):
        raise ValueError("untwisted oracle requires a trivial twist")
    group = ctx.group
    n = group.order
    facts: Dict[int, List[Tuple[int, int]]] = {g: [] for g in range(n)}
    for g1 in range(n):
        for g2 in range(n):
            if a.dims[g1] and b.dims[g2]:
                facts[group.mult[g1][g2]].append((g1, g2))
    dims = tuple(
        sum(a.dims[g1] * b.dims[g2] for g1, g2 in facts[g]) for g in range(n)
    )
    zero = as_cyclotomic(0)
    maps: Dict[Tuple[int, int], Matrix] = {}
    for g in range(n):
        if not dims[g]:
            continue
        for u in range(n):
            h = group.conjugate(g, u)
            rows = [[zero] * dims[h] for _ in range(dims[g])]
            r0 = 0
            for g1, g2 in facts[g]:
                pair_u = (group.conjugate(g1, u), group.conjugate(g2, u))
                c0 = 0
                for p in facts[h]:
                    if p == pair_u:
                        break
                    c0 += a.dims[p[0]] * b.dims[p[1]]
                ma = a.maps[(g1, u)]
                mb = b.maps[(g2, u)]
                db = len(mb)
                db_cols = len(mb[0]) if db else 0
                for i1, rowa in enumerate(ma):
                    for i2, rowb in enumerate(mb):
                        out_row = rows[r0 + i1 * db + i2]
                        for j1, xa in enumerate(rowa):
                            if xa.is_zero():
                                continue
                            for j2, xb in enumerate(rowb):
                                if not xb.is_zero():
                                    out_row[c0 + j1 * db_cols + j2] = xa * xb
                r0 += a.dims[g1] * b.dims[g2]
            maps[(g, u)] = tuple(tuple(r) for r in rows)
    return TwistedBundle(context=ctx, dims=dims, maps=maps)


# characters and virtual classes


def kclass_keys(ctx: TwistContext) -> List[Tuple[int, int]]:
    """Evaluation points of characters: (g, u) with u centralizing g."""
    group = ctx.group
    keys = []
    for g in group.elements():
        for u in centralizer(group, g).members:
            keys.append((g, u))
    return keys


@dataclass(eq=False)
class KClass:
    """A virtual class, known by its character table on kclass_keys."""

    context: TwistContext
    table: Dict[Tuple[int, int], Cyclotomic]

    def value(self, g: int, u: int) -> Cyclotomic:
        return self.table[(g, u)]


def trace_table(v: TwistedBundle) -> Dict[Tuple[int, int], Cyclotomic]:
    """Raw traces without validation.

    Callers must pair this with bundle_violation unless the bundle is
    already known valid; character() below does both.
    """
    ctx = v.context
    zero = as_cyclotomic(0)
    table = {}
    for g, u in kclass_keys(ctx):
        if v.dims[g]:
            table[(g, u)] = mat_trace(v.maps[(g, u)])
        else:
            table[(g, u)] = zero
    return table


def character(v: TwistedBundle) -> KClass:
    """Trace of each centralizing map; raises on an invalid bundle."""
    w = bundle_violation(v)
    if w is not None:
        raise ValueError(f"invalid bundle: {w[0]} at {w[1]}")
    return KClass(context=v.context, table=trace_table(v))


def kclass_eq(x: KClass, y: KClass) -> bool:
    if x.context is not y.context:
        raise ValueError("classes live over different contexts")
    return all(x.table[k] == y.table[k] for k in x.table)


def kclass_add(x: KClass, y: KClass) -> KClass:
    if x.context is not y.context:
        raise ValueError("classes live over different contexts")
    return KClass(x.context, {k: x.table[k] + y.table[k] for k in x.table})


def kclass_sub(x: KClass, y: KClass) -> KClass:
    if x.context is not y.context:
        raise ValueError("classes live over different contexts")
    return KClass(x.context, {k: x.table[k] - y.table[k] for k in x.table})


def kclass_star(x: KClass, y: KClass) -> KClass:
    """Character-level product.

    Only summands fixed by the conjugator contribute to a trace, so the
    value at (g, u) sums phase(-mu(g1, g2; u)) x(g1, u) y(g2, u) over
    factorizations g1*g2 = g with g1 fixed by u (g2 is then fixed too).
    """
    if x.context is not y.context:
        raise ValueError("classes live over different contexts")
    ctx = x.context
    group = ctx.group
    table = {}
    for g, u in kclass_keys(ctx):
        acc = as_cyclotomic(0)
        for g1 in group.elements():
            if group.conjugate(g1, u) != g1:
                continue
            g2 = group.mult[group.inv[g1]][g]
            acc = acc + phase(-ctx.mu_value(g1, g2, u)) * x.table[(g1, u)] * y.table[(g2, u)]
        table[(g, u)] = acc
    return KClass(context=ctx, table=table)


# basis construction and integer structure constants


def _abelian_basis(ctx: TwistContext) -> List[TwistedBundle]:
    group = ctx.group
    n = group.order
    out = []
    for g in group.elements():
        values = tuple(
            tuple(ctx.tau_value(g, u1, u2) for u2 in group.elements())
            for u1 in group.elements()
        )
        tc = TwoCocycleGroup(group=group, values=values)
        irreps = abelian_projective_irreps(tc)
        if len(irreps) != twisted_rank(tc):
            raise BasisError(
                f"sector {g}: built {len(irreps)} irreducibles, rank says {twisted_rank(tc)}"
            )
        for mats in irreps:
            dims = tuple(len(mats[0]) if h == g else 0 for h in range(n))
            maps = {(g, u): mats[u] for u in group.elements()}
            out.append(TwistedBundle(context=ctx, dims=dims, maps=maps))
    return out


def _untwisted_class_basis(ctx: TwistContext) -> List[TwistedBundle]:
    group = ctx.group
    n = group.order
    part = conjugacy_classes(group)
    out = []
    for cls in part.classes:
        rep = cls[0]
        zgrp, zmem = subgroup_as_group(centralizer(group, rep))
        irreps = group_irreducibles(zgrp)
        trivial = TwoCocycleGroup(
            group=zgrp,
            values=tuple(
                tuple(Fraction(0) for _ in range(zgrp.order))
                for _ in range(zgrp.order)
            ),
        )
        if len(irreps) != twisted_rank(trivial):
            raise BasisError(
                f"class of {rep}: irreducible count disagrees with the class count"
            )
        zpos = {m: i for i, m in enumerate(zmem)}
        for w in irreps:
            d = len(w[0])
            dims = tuple(d if h in cls else 0 for h in range(n))
            maps = {}
            for h in cls:
                xh = part.transporter[h]
                for u in group.elements():
                    hu = group.conjugate(h, u)
                    z = group.mult[group.mult[xh][u]][group.inv[part.transporter[hu]]]
                    maps[(h, u)] = w[zpos[z]]
            out.append(TwistedBundle(context=ctx, dims=dims, maps=maps))
    return out


def basis_bundles(ctx: TwistContext) -> List[TwistedBundle]:
    """Irreducible twisted bundles, one per sector-level irreducible.

    Abelian groups are handled for any twist through projective
    irreducibles of each sector cocycle; nonabelian groups are handled for
    the trivial twist through induced class bundles. Every bundle is
    validated, the per-sector counts are cross-checked against the regular
    class counts, and the characters are checked linearly independent.
    """
    if not ctx.normalized:
        raise ValueError("basis construction needs a normalized context")
    if ctx.group.is_abelian():
        out = _abelian_basis(ctx)
    elif ctx.tau.is_zero() and ctx.mu.is_zero():
        out = _untwisted_class_basis(ctx)
    else:
        raise BasisError(
            "basis construction covers abelian groups with any twist and "
            "nonabelian groups with a trivial twist"
        )
    for v in out:
        w = bundle_violation(v)
        if w is not None:
            raise AssertionError(f"constructed basis bundle invalid: {w[0]} at {w[1]}")
    keys = kclass_keys(ctx)
    chars = [character(v) for v in out]
    rows = [[c.table[k] for k in keys] for c in chars]
    if matrix_rank(rows) != len(out):
        raise BasisError("basis characters are linearly dependent")
    return out


class CharacterSolver:
    """Exact expansion of character tables over a fixed basis.

    An invertible square subsystem of the basis character matrix is chosen
    and inverted once; each expansion is then a small matrix product whose
    result is re-checked against every key, so a table outside the span is
    always detected, never silently projected.
    """

    def __init__(self, ctx: TwistContext, chars: Sequence[KClass]):
        self.keys = kclass_keys(ctx)
        self.chars = list(chars)
        m = len(self.chars)
        rows = [[c.table[k] for c in self.chars] for k in self.keys]
        work: List[List[Cyclotomic]] = []
        piv: List[int] = []
        chosen: List[int] = []
        for r, row in enumerate(rows):
            vec = list(row)
            for wrow, p in zip(work, piv):
                if not vec[p].is_zero():
                    f = vec[p]
                    vec = [x - f * y for x, y in zip(vec, wrow)]
            lead = next((i for i, x in enumerate(vec) if not x.is_zero()), None)
            if lead is None:
                continue
            inv = vec[lead].inverse()
            work.append([inv * x for x in vec])
            piv.append(lead)
            chosen.append(r)
            if len(chosen) == m:
                break
        if len(chosen) != m:
            raise BasisError("basis characters are linearly dependent")
        one = as_cyclotomic(1)
        zero = as_cyclotomic(0)
        aug = [
            list(rows[r]) + [one if j == i else zero for j in range(m)]
            for i, r in enumerate(chosen)
        ]
        red, pivots = row_reduce(aug)
        if pivots != list(range(m)):
            raise AssertionError("chosen subsystem is singular; selection bug")
        self._inv = [row[m:] for row in red]
        self._rows = rows
        self._chosen = chosen

    def expand(
        self, table: Dict[Tuple[int, int], Cyclotomic]
    ) -> Tuple[Optional[List[Cyclotomic]], List[Tuple[int, int]]]:
        """Coefficients over the basis, plus the keys where expansion fails.

        Returns (coeffs, []) when the table lies in the span; otherwise
        (None, offending keys).
        """
        vec = [table[k] for k in self.keys]
        sub = [vec[r] for r in self._chosen]
        coeffs = []
        for inv_row in self._inv:
            acc = as_cyclotomic(0)
            for f, x in zip(inv_row, sub):
                if not f.is_zero() and not x.is_zero():
                    acc = acc + f * x
            coeffs.append(acc)
        bad = []
        for r, row in enumerate(self._rows):
            acc = as_cyclotomic(0)
            for c, x in zip(coeffs, row):
                if not c.is_zero() and not x.is_zero():
                    acc = acc + c * x
            if acc != vec[r]:
                bad.append(self.keys[r])
        if bad:
            return None, bad
        return coeffs, []


def integer_coefficients(coeffs: Sequence[Cyclotomic]) -> Optional[List[int]]:
    """Integer values of an exact coefficient list, or None if any entry
    is irrational or fractional."""
    out = []
    for x in coeffs:
        if not x.is_rational() or x.rational_value().denominator != 1:
            return None
        out.append(int(x.rational_value()))
    return out


def structure_constants(
    ctx: TwistContext, basis: Sequence[TwistedBundle]
) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
    """Integer expansion of every pairwise product over the basis.

    Entry [i][j][k] is the multiplicity of basis[k] in basis[i] * basis[j].
    Products are computed at the bundle level, characters solved exactly
    over the cyclotomics; a product outside the span, or a non-integer
    coefficient, raises FusionError.
    """
    chars = [character(v) for v in basis]
    solver = CharacterSolver(ctx, chars)
    out = []
    for i, va in enumerate(basis):
        row_out = []
        for j, vb in enumerate(basis):
            prod = character(star(va, vb))
            coeffs, bad = solver.expand(prod.table)
            if coeffs is None:
                raise FusionError(
                    f"product of basis {i} and {j} is not in the basis span; "
                    f"residual at {len(bad)} keys, first at {bad[0]}"
                )
            ints = integer_coefficients(coeffs)
            if ints is None:
                raise FusionError(
                    f"product of basis {i} and {j} has non-integer coefficients"
                )
            row_out.append(tuple(ints))
        out.append(tuple(row_out))
    return tuple(out)
