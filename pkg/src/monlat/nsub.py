"""The lattice of normal subobjects of an object in any context.

Meets are pullbacks, joins are kernels of cokernels, and the two detection
problems that drive the whole package (modularity, distributivity) are each
answered by several independent methods that must agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any

from . import monoid as mn
from .context import restrict_mono


class LatticeMethodDisagreement(RuntimeError):
    """Two supposedly equivalent lattice tests returned different verdicts."""


@dataclass(frozen=True)
class LatticeWitness:
    kind: str  # pentagon | diamond | modular-law | distributive-law
    elements: tuple[int, ...]
    names: tuple[str, ...]

    def render(self) -> str:
        return f"{self.kind}[{';'.join(self.names)}]"


@dataclass
class NSubLattice:
    """A finite lattice with elements indexed 0..n-1.

    When built from an object of a context, ``monos`` and ``keys`` carry the
    canonical subobject representatives; when built from a raw join table
    they are empty.
    """

    leq: tuple[tuple[bool, ...], ...]
    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    top: int
    bottom: int
    names: tuple[str, ...]
    ctx: Any = field(default=None, repr=False)
    obj: Any = field(default=None, repr=False)
    monos: tuple = ()
    keys: tuple = ()

    @property
    def size(self) -> int:
        return len(self.leq)

    def is_leq(self, i: int, j: int) -> bool:
        return self.leq[i][j]

    def interval(self, lo: int, hi: int) -> list[int]:
        return [t for t in range(self.size) if self.leq[lo][t] and self.leq[t][hi]]

    def index_of_key(self, key) -> int:
        return self.keys.index(key)

    def covers(self) -> list[tuple[int, int]]:
        n = self.size
        out = []
        for a in range(n):
            for b in range(n):
                if a != b and self.leq[a][b]:
                    if not any(
                        c not in (a, b) and self.leq[a][c] and self.leq[c][b]
                        for c in range(n)
                    ):
                        out.append((a, b))
        return sorted(out)

    def as_join_monoid(self) -> mn.FinMonoid:
        """The join table as a commutative idempotent monoid with the lattice
        bottom relabelled to index 0 (joins determine meets, so lattice
        isomorphism coincides with isomorphism of these monoids)."""
        n = self.size
        order = sorted(range(n), key=lambda i: (i != self.bottom, i))
        pos = {v: i for i, v in enumerate(order)}
        table = tuple(tuple(pos[self.join[a][b]] for b in order) for a in order)
        return mn.FinMonoid(table, tuple(self.names[v] for v in order))


def _verify_lattice(lat: NSubLattice) -> None:
    n = lat.size
    leq, join, meet = lat.leq, lat.join, lat.meet
    for i in range(n):
        if not leq[i][i]:
            raise RuntimeError("order not reflexive")
        for j in range(n):
            if leq[i][j] and leq[j][i] and i != j:
                raise RuntimeError("order not antisymmetric")
            for k in range(n):
                if leq[i][j] and leq[j][k] and not leq[i][k]:
                    raise RuntimeError("order not transitive")
    for i, j in product(range(n), repeat=2):
        u, m = join[i][j], meet[i][j]
        if not (leq[i][u] and leq[j][u]) or not (leq[m][i] and leq[m][j]):
            raise RuntimeError("join/meet tables violate the order")
        for c in range(n):
            if leq[i][c] and leq[j][c] and not leq[u][c]:
                raise RuntimeError("join is not a least upper bound")
            if leq[c][i] and leq[c][j] and not leq[c][m]:
                raise RuntimeError("meet is not a greatest lower bound")
    if not all(leq[i][lat.top] and leq[lat.bottom][i] for i in range(n)):
        raise RuntimeError("top/bottom are wrong")


def lattice_from_join_table(table, names=None) -> NSubLattice:
    """Lattice structure of a finite monoidal semilattice given by its joins."""
    n = len(table)
    leq = tuple(tuple(table[a][b] == b for b in range(n)) for a in range(n))
    meet = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            lbs = [c for c in range(n) if leq[c][a] and leq[c][b]]
            greatest = [m for m in lbs if all(leq[c][m] for c in lbs)]
            if len(greatest) != 1:
                raise mn.MonoidError(f"no meet for ({a},{b})")
            meet[a][b] = greatest[0]
    bottoms = [i for i in range(n) if all(leq[i][j] for j in range(n))]
    tops = [i for i in range(n) if all(leq[j][i] for j in range(n))]
    if len(bottoms) != 1 or len(tops) != 1:
        raise mn.MonoidError("join table is not a bounded lattice")
    lat = NSubLattice(
        leq=leq,
        join=tuple(tuple(row) for row in table),
        meet=tuple(tuple(row) for row in meet),
        top=tops[0],
        bottom=bottoms[0],
        names=tuple(names) if names is not None else tuple(str(i) for i in range(n)),
    )
    _verify_lattice(lat)
    return lat


def lattice_of_semilattice(L: mn.FinMonoid) -> NSubLattice:
    if not L.is_semilattice:
        raise mn.MonoidError("expected a commutative idempotent monoid")
    return lattice_from_join_table(L.table, tuple(L.label(i) for i in range(L.size)))


def join_via_uniinter(ctx, X, y_mono, z_mono):
    """Join of two normal subobjects: the kernel of the cokernel of Y -> X/Z,
    taken inside X. At the commutative-monoid level this must equal the
    normal closure of the union of the two member sets."""
    qz = ctx.cokernel(z_mono)
    f = ctx.compose(qz, y_mono)
    q2 = ctx.cokernel(f)
    return ctx.kernel(ctx.compose(q2, qz))


_NSUB_LATTICE_CACHE: dict = {}


def enumerate_nsub(ctx, X) -> NSubLattice:
    """The lattice of normal subobjects of X in ctx.

    Elements come from the context's enumerator; meets are computed as
    pullbacks and joins as kernels of cokernels, then the lattice axioms are
    verified outright.
    """
    cached = _NSUB_LATTICE_CACHE.get((id(ctx), X))
    if cached is not None:
        return cached
    monos = list(ctx.normal_subobject_monos(X))
    keys = [ctx.mono_key(m) for m in monos]
    names = [ctx.render_key(X, k) for k in keys]
    index = {k: i for i, k in enumerate(keys)}
    n = len(monos)

    meet = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            span = ctx.pullback_of_monos(monos[i], monos[j])
            key = ctx.mono_key(ctx.compose(monos[i], span.to_first))
            if key not in index:
                raise RuntimeError("meet escaped the enumerated subobjects")
            meet[i][j] = meet[j][i] = index[key]
    leq = tuple(tuple(meet[i][j] == i for j in range(n)) for i in range(n))

    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            jm = join_via_uniinter(ctx, X, monos[i], monos[j])
            key = ctx.mono_key(jm)
            if key not in index:
                raise RuntimeError("join escaped the enumerated subobjects")
            join[i][j] = join[j][i] = index[key]

    tops = [i for i in range(n) if all(leq[j][i] for j in range(n))]
    bottoms = [i for i in range(n) if all(leq[i][j] for j in range(n))]
    if len(tops) != 1 or len(bottoms) != 1:
        raise RuntimeError("subobject order is not bounded")
    lat = NSubLattice(
        leq=leq,
        join=tuple(tuple(row) for row in join),
        meet=tuple(tuple(row) for row in meet),
        top=tops[0],
        bottom=bottoms[0],
        names=tuple(names),
        ctx=ctx,
        obj=X,
        monos=tuple(monos),
        keys=tuple(keys),
    )
    _verify_lattice(lat)
    _NSUB_LATTICE_CACHE[(id(ctx), X)] = lat
    return lat


# ---------------------------------------------------------------------------
# modularity and distributivity, each by independent methods


def _first_modular_law_violation(lat) -> tuple[int, int, int] | None:
    n = lat.size
    for x, y, z in product(range(n), repeat=3):
        if lat.leq[z][x] and lat.meet[x][lat.join[y][z]] != lat.join[lat.meet[x][y]][z]:
            return (x, y, z)
    return None


def _first_distributive_law_violation(lat) -> tuple[int, int, int] | None:
    n = lat.size
    for x, y, z in product(range(n), repeat=3):
        if lat.meet[x][lat.join[y][z]] != lat.join[lat.meet[x][y]][lat.meet[x][z]]:
            return (x, y, z)
    return None


def _sublattice_shape(lat, combo) -> str | None:
    """Classify a closed 5-subset: 'pentagon', 'diamond', or neither."""
    subset = set(combo)
    for a, b in combinations(combo, 2):
        if lat.join[a][b] not in subset or lat.meet[a][b] not in subset:
            return None
    bot = next(x for x in combo if all(lat.leq[x][y] for y in combo))
    top = next(x for x in combo if all(lat.leq[y][x] for y in combo))
    mids = [x for x in combo if x not in (bot, top)]
    if len(mids) != 3:
        return None
    comparable = sum(
        1 for a, b in combinations(mids, 2) if lat.leq[a][b] or lat.leq[b][a]
    )
    if comparable == 1:
        return "pentagon"
    if comparable == 0:
        return "diamond"
    return None


def _find_sublattice(lat, shape: str) -> tuple[int, ...] | None:
    for combo in combinations(range(lat.size), 5):
        if _sublattice_shape(lat, combo) == shape:
            return combo
    return None


def _first_interval_failure(lat) -> tuple[int, int] | None:
    """First pair (x, y) where t -> t v y fails to be an order isomorphism
    from [x^y, x] onto [y, xvy] with inverse u -> u ^ x."""
    n = lat.size
    for x, y in product(range(n), repeat=2):
        lo, hi = lat.meet[x][y], lat.join[x][y]
        for t in lat.interval(lo, x):
            if lat.meet[lat.join[t][y]][x] != t:
                return (x, y)
        for u in lat.interval(y, hi):
            if lat.join[lat.meet[u][x]][y] != u:
                return (x, y)
    return None


def _witness(lat, kind, elements) -> LatticeWitness:
    return LatticeWitness(kind, tuple(elements), tuple(lat.names[e] for e in elements))


def is_modular(lat: NSubLattice) -> tuple[bool, LatticeWitness | None]:
    """Modularity by three methods that must agree: the law scan, the search
    for a pentagon sublattice, and the interval-transposition test."""
    law = _first_modular_law_violation(lat)
    pent = _find_sublattice(lat, "pentagon")
    ival = _first_interval_failure(lat)
    verdicts = (law is None, pent is None, ival is None)
    if len(set(verdicts)) != 1:
        raise LatticeMethodDisagreement(
            f"modularity methods disagree: law={law} pentagon={pent} interval={ival}"
        )
    if law is None:
        return True, None
    return False, _witness(lat, "pentagon", pent)


def is_distributive(lat: NSubLattice) -> tuple[bool, LatticeWitness | None]:
    """Distributivity by the law scan, cross-validated against "modular and
    diamond-free"."""
    law = _first_distributive_law_violation(lat)
    modular, pent_witness = is_modular(lat)
    diam = _find_sublattice(lat, "diamond")
    indirect = modular and diam is None
    if (law is None) != indirect:
        raise LatticeMethodDisagreement(
            f"distributivity methods disagree: law={law} modular={modular} diamond={diam}"
        )
    if law is None:
        return True, None
    if not modular:
        return False, pent_witness
    return False, _witness(lat, "diamond", diam)


# ---------------------------------------------------------------------------
# structural checks on subobject lattices


def join_agreement_check(ctx, X, x_mono, y_mono, z_mono) -> bool:
    """Joins computed inside a normal subobject X' agree (same underlying
    object of X) with joins of the composites computed in X."""
    for m in (ctx.compose(x_mono, y_mono), ctx.compose(x_mono, z_mono)):
        if not ctx.is_normal_mono(m):
            raise mn.MonoidError("composite subobject is not normal in the ambient object")
    inner_join = join_via_uniinter(ctx, ctx.dom(x_mono), y_mono, z_mono)
    outer_join = join_via_uniinter(
        ctx, X, ctx.compose(x_mono, y_mono), ctx.compose(x_mono, z_mono)
    )
    return ctx.mono_key(ctx.compose(x_mono, inner_join)) == ctx.mono_key(outer_join)


def cokersquare_check(ctx, Z, w_key, x_key, y_key) -> bool:
    """For a square of normal subobjects W <= X, W <= Y inside Z:

    the cokernel of the induced map Y/W -> Z/X is Z/(X v Y), and its kernel
    is (X/W) ^ (Y/W) inside the lattice over Z/W.
    """
    w = ctx.subobject_mono(Z, w_key)
    x = ctx.subobject_mono(Z, x_key)
    y = ctx.subobject_mono(Z, y_key)
    w_in_y = restrict_mono(ctx, w, y)
    e_w = ctx.cokernel(w_in_y)  # Y ->> Y/W
    q_x = ctx.cokernel(x)
    u = ctx.factor_through_cokernel(e_w, ctx.compose(q_x, y))  # Y/W -> Z/X

    j = join_via_uniinter(ctx, Z, x, y)
    q_j = ctx.cokernel(j)
    canonical = ctx.factor_through_cokernel(q_x, q_j)  # Z/X ->> Z/(XvY)
    coker_u = ctx.cokernel(u)
    cokernels_match = ctx.mono_key(ctx.kernel(coker_u)) == ctx.mono_key(
        ctx.kernel(canonical)
    )

    q_w = ctx.cokernel(w)
    emb = ctx.factor_through_cokernel(e_w, ctx.compose(q_w, y))  # Y/W -> Z/W
    lifted_kernel = ctx.mono_key(ctx.compose(emb, ctx.kernel(u)))
    x_over_w = ctx.kernel(ctx.factor_through_cokernel(q_w, q_x))
    y_over_w = ctx.kernel(ctx.factor_through_cokernel(q_w, ctx.cokernel(y)))
    span = ctx.pullback_of_monos(x_over_w, y_over_w)
    meet_key = ctx.mono_key(ctx.compose(x_over_w, span.to_first))
    kernels_match = lifted_kernel == meet_key

    return cokernels_match and kernels_match


@dataclass
class GaloisReport:
    """Outcome of the correspondence between subobjects of a quotient Y/X and
    subobjects of Y containing X."""

    phi_after_psi_identity: bool
    galois_connection: bool
    phi_preserves_meet: bool
    psi_preserves_join: bool
    mutually_inverse: bool
    quotient_meet_formula: bool
    quotient_join_formula: bool
    cases: int

    @property
    def ok(self) -> bool:
        return all(
            (
                self.phi_after_psi_identity,
                self.galois_connection,
                self.phi_preserves_meet,
                self.psi_preserves_join,
                self.mutually_inverse,
                self.quotient_meet_formula,
                self.quotient_join_formula,
            )
        )


def phi_psi(ctx, x_mono) -> GaloisReport:
    """The two transfers along Y ->> Y/X: pull a subobject of the quotient
    back, or push a subobject above X down by taking the kernel of the
    induced quotient comparison. Checks the adjunction and, since these
    contexts are regular with the third isomorphism property available, the
    mutual-inverse lattice isomorphism with its meet/join formulas."""
    Y = ctx.cod(x_mono)
    x_key = ctx.mono_key(x_mono)
    q = ctx.cokernel(x_mono)
    Q = ctx.cod(q)
    lat_y = enumerate_nsub(ctx, Y)
    lat_q = enumerate_nsub(ctx, Q)
    x_idx = lat_y.index_of_key(x_key)
    upper = [i for i in range(lat_y.size) if lat_y.leq[x_idx][i]]

    def phi(t_idx: int) -> int:
        t = lat_q.monos[t_idx]
        pulled = ctx.kernel(ctx.compose(ctx.cokernel(t), q))
        return lat_y.index_of_key(ctx.mono_key(pulled))

    def psi(u_idx: int) -> int:
        u = lat_y.monos[u_idx]
        induced = ctx.factor_through_cokernel(q, ctx.cokernel(u))  # Y/X -> Y/U
        return lat_q.index_of_key(ctx.mono_key(ctx.kernel(induced)))

    phi_of = {t: phi(t) for t in range(lat_q.size)}
    psi_of = {u: psi(u) for u in upper}

    cases = 0
    phi_after_psi = all(phi_of[psi_of[u]] == u for u in upper)
    galois = True
    for u in upper:
        for t in range(lat_q.size):
            cases += 1
            if lat_q.leq[psi_of[u]][t] != lat_y.leq[u][phi_of[t]]:
                galois = False
    phi_meet = all(
        phi_of[lat_q.meet[t1][t2]] == lat_y.meet[phi_of[t1]][phi_of[t2]]
        for t1 in range(lat_q.size)
        for t2 in range(lat_q.size)
    )
    psi_join = all(
        psi_of[lat_y.join[u1][u2]] == lat_q.join[psi_of[u1]][psi_of[u2]]
        for u1 in upper
        for u2 in upper
    )
    mutually_inverse = phi_after_psi and all(
        psi_of.get(phi_of[t]) == t for t in range(lat_q.size)
    ) and sorted(phi_of[t] for t in range(lat_q.size)) == sorted(upper)
    meet_formula = all(
        psi_of[lat_y.meet[u1][u2]] == lat_q.meet[psi_of[u1]][psi_of[u2]]
        for u1 in upper
        for u2 in upper
    )
    return GaloisReport(
        phi_after_psi_identity=phi_after_psi,
        galois_connection=galois,
        phi_preserves_meet=phi_meet,
        psi_preserves_join=psi_join,
        mutually_inverse=mutually_inverse,
        quotient_meet_formula=meet_formula,
        quotient_join_formula=psi_join,
        cases=cases,
    )


def find_lattice_isomorphism(lat1: NSubLattice, lat2: NSubLattice):
    """An isomorphism between two lattices, or None (search over the
    corresponding join monoids; joins determine meets)."""
    return mn.find_isomorphism(lat1.as_join_monoid(), lat2.as_join_monoid())


def lattices_isomorphic(lat1: NSubLattice, lat2: NSubLattice) -> bool:
    return find_lattice_isomorphism(lat1, lat2) is not None
