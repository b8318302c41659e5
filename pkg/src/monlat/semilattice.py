"""Monoidal semilattices (join-semilattices with a bottom) as commutative
idempotent monoids: construction from cover graphs, principal down-sets and
up-sets, the join-with-k quotient shortcut, and the named fixtures used
throughout the test suite.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .monoid import (
    FinMonoid,
    MonoidError,
    MonoidHom,
    Subset,
    cokernel_by_submonoid,
    is_normal_submonoid,
)


class SemilatticeError(MonoidError):
    pass


class NoBottom(SemilatticeError):
    pass


class NoJoin(SemilatticeError):
    def __init__(self, a, b):
        self.pair = (a, b)
        super().__init__(f"NoJoin({a},{b})")


class NotHasse(SemilatticeError):
    def __init__(self, a, b):
        self.pair = (a, b)
        super().__init__(f"NotHasse({a},{b})")


class NotAPartialOrder(SemilatticeError):
    pass


@dataclass(frozen=True)
class CoverGraph:
    """A Hasse diagram: (a, b) in covers means a is covered by b."""

    size: int
    covers: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "covers", tuple((int(a), int(b)) for a, b in self.covers))
        if self.size < 1:
            raise SemilatticeError("a cover graph needs at least one element")
        for a, b in self.covers:
            if not (0 <= a < self.size and 0 <= b < self.size) or a == b:
                raise SemilatticeError(f"bad cover pair ({a},{b})")
        if self.labels is not None and len(self.labels) != self.size:
            raise SemilatticeError("label count differs from element count")


def _closure(size: int, covers) -> list[list[bool]]:
    leq = [[i == j for j in range(size)] for i in range(size)]
    for a, b in covers:
        leq[a][b] = True
    for k in range(size):
        for i in range(size):
            if leq[i][k]:
                row_k = leq[k]
                row_i = leq[i]
                for j in range(size):
                    if row_k[j]:
                        row_i[j] = True
    return leq


def semilattice_from_covers(g: CoverGraph) -> FinMonoid:
    """Least-upper-bound table of a cover graph, as a commutative monoid.

    Elements are renumbered by a deterministic linear extension (layered
    sweep from the bottom, ties broken by original index), so the bottom
    lands at index 0 and equal inputs produce identical tables.
    """
    n = g.size
    leq = _closure(n, g.covers)
    for i in range(n):
        for j in range(n):
            if i != j and leq[i][j] and leq[j][i]:
                raise NotAPartialOrder(f"elements {i} and {j} order-equivalent")
    cover_set = set(g.covers)
    for a, b in cover_set:
        if any(c not in (a, b) and leq[a][c] and leq[c][b] for c in range(n)):
            raise NotHasse(a, b)
    minimal = [i for i in range(n) if not any(leq[j][i] for j in range(n) if j != i)]
    if len(minimal) != 1:
        raise NoBottom(f"minimal elements: {sorted(minimal)}")

    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            ubs = [c for c in range(n) if leq[a][c] and leq[b][c]]
            least = [u for u in ubs if all(leq[u][v] for v in ubs)]
            if len(least) != 1:
                raise NoJoin(a, b)
            join[a][b] = least[0]

    # layered linear extension: emit every element whose strict down-set is
    # already numbered, one layer at a time, ordered by original index
    new_index: list[int | None] = [None] * n
    placed = 0
    while placed < n:
        layer = [
            i
            for i in range(n)
            if new_index[i] is None
            and all(new_index[j] is not None for j in range(n) if j != i and leq[j][i])
        ]
        if not layer:
            raise NotAPartialOrder("no linear extension exists")
        for i in sorted(layer):
            new_index[i] = placed
            placed += 1
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            table[new_index[a]][new_index[b]] = new_index[join[a][b]]
    labels = None
    if g.labels is not None:
        labels = [""] * n
        for old, new in enumerate(new_index):
            labels[new] = g.labels[old]
        labels = tuple(labels)
    return FinMonoid(tuple(tuple(row) for row in table), labels)


def require_semilattice(L: FinMonoid) -> None:
    if not L.is_semilattice:
        raise SemilatticeError("expected a commutative idempotent monoid")


def leq(L: FinMonoid, a: int, b: int) -> bool:
    return L.op(a, b) == b


def covers_of(L: FinMonoid) -> list[tuple[int, int]]:
    """Cover pairs (a, b) of the semilattice order, a covered by b."""
    require_semilattice(L)
    n = L.size
    out = []
    for a in range(n):
        for b in range(n):
            if a != b and leq(L, a, b):
                if not any(c not in (a, b) and leq(L, a, c) and leq(L, c, b) for c in range(n)):
                    out.append((a, b))
    return sorted(out)


def principal_downset(L: FinMonoid, a: int) -> Subset:
    require_semilattice(L)
    return Subset(L, frozenset(x for x in range(L.size) if L.op(x, a) == a))

def principal_upset(L: FinMonoid, k: int) -> Subset:
    require_semilattice(L)
    return Subset(L, frozenset(x for x in range(L.size) if L.op(x, k) == x))


def top_element(L: FinMonoid) -> int:
    require_semilattice(L)
    t = 0
    for x in range(L.size):
        t = L.op(t, x)
    return t


def meet(L: FinMonoid, a: int, b: int) -> int:
    """Greatest common lower bound; every finite monoidal semilattice has one."""
    require_semilattice(L)
    lbs = [c for c in range(L.size) if leq(L, c, a) and leq(L, c, b)]
    greatest = [m for m in lbs if all(leq(L, c, m) for c in lbs)]
    if len(greatest) != 1:
        raise SemilatticeError(f"no meet for ({a},{b})")
    return greatest[0]


def quotient_by_downset(L: FinMonoid, k: int) -> tuple[FinMonoid, MonoidHom]:
    """Quotient of a semilattice by a principal down-set, computed directly
    on the up-set of k: the projection sends l to l v k. Isomorphic to the
    generic congruence quotient, with the same class partition."""
    require_semilattice(L)
    up = sorted(principal_upset(L, k).members)
    order = [k] + [x for x in up if x != k]  # k is the identity of the quotient
    pos = {m: i for i, m in enumerate(order)}
    table = tuple(tuple(pos[L.op(a, b)] for b in order) for a in order)
    labels = tuple(L.label(m) for m in order) if L.labels is not None else None
    Q = FinMonoid(table, labels)
    proj = MonoidHom(L, Q, tuple(pos[L.op(x, k)] for x in range(L.size)))
    return Q, proj


def all_normal_subobjects_semilattice(L: FinMonoid) -> list[Subset]:
    """The normal submonoids of a finite monoidal semilattice: exactly the
    principal down-sets, one per element."""
    require_semilattice(L)
    seen = {}
    for a in range(L.size):
        d = principal_downset(L, a)
        seen.setdefault(d.members, d)
    out = sorted(seen.values(), key=lambda s: (len(s.members), sorted(s.members)))
    for s in out:
        ok, witness = is_normal_submonoid(L, s.members)
        if not ok:
            raise RuntimeError(f"down-set fails normality, witness {witness}")
    return out


def generic_quotient_partition(L: FinMonoid, k: int) -> set[frozenset[int]]:
    """Class partition of the congruence quotient by the down-set of k."""
    _, proj = cokernel_by_submonoid(L, principal_downset(L, k).members)
    classes: dict[int, set[int]] = {}
    for x in range(L.size):
        classes.setdefault(proj(x), set()).add(x)
    return {frozenset(c) for c in classes.values()}


# ---------------------------------------------------------------------------
# fixtures


def _from_labelled_covers(labels, cover_pairs) -> FinMonoid:
    idx = {name: i for i, name in enumerate(labels)}
    covers = tuple((idx[a], idx[b]) for a, b in cover_pairs)
    return semilattice_from_covers(CoverGraph(len(labels), covers, tuple(labels)))


def trivial() -> FinMonoid:
    return FinMonoid(((0,),), ("0",))


def chain(n: int) -> FinMonoid:
    """The n-element chain 0 < 1 < ... < n-1 under max."""
    if n < 1:
        raise SemilatticeError("chain needs at least one element")
    table = tuple(tuple(max(i, j) for j in range(n)) for i in range(n))
    return FinMonoid(table, tuple(str(i) for i in range(n)))


def pentagon() -> FinMonoid:
    """The five-element non-modular lattice: 0 < C < B < A and 0 < D < A."""
    return _from_labelled_covers(
        ["0", "A", "B", "C", "D"],
        [("0", "C"), ("C", "B"), ("B", "A"), ("0", "D"), ("D", "A")],
    )


def diamond() -> FinMonoid:
    """The five-element modular non-distributive lattice: three atoms a, b, c."""
    return _from_labelled_covers(
        ["0", "1", "a", "b", "c"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )


def six_lattice() -> FinMonoid:
    """The six-element lattice with covers 0<D, 0<E, D<B, D<C, E<C, B<A, C<A."""
    return _from_labelled_covers(
        ["0", "A", "B", "C", "D", "E"],
        [("0", "D"), ("0", "E"), ("D", "B"), ("D", "C"), ("E", "C"), ("B", "A"), ("C", "A")],
    )


def bool2() -> FinMonoid:
    """The 2x2 Boolean lattice: 0 < a, b < 1."""
    return _from_labelled_covers(
        ["0", "a", "b", "1"],
        [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
    )


def klein_four() -> FinMonoid:
    """The group Z2 x Z2. A group, not a semilattice; kept with the fixtures
    because its subgroup lattice is the diamond."""
    return FinMonoid(
        ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)),
        ("0", "g", "h", "k"),
    )


_FIXTURE_BUILDERS = {
    "N5": pentagon,
    "M3": diamond,
    "L6": six_lattice,
    "bool2": bool2,
    "V4": klein_four,
    "triv": trivial,
}


def fixture(name: str) -> FinMonoid:
    """Look up a named fixture; chains are spelled chainN or chain(N)."""
    if name in _FIXTURE_BUILDERS:
        return _FIXTURE_BUILDERS[name]()
    m = re.fullmatch(r"chain\(?(\d+)\)?", name)
    if m:
        return chain(int(m.group(1)))
    raise KeyError(f"unknown fixture {name!r}")


def fixture_names() -> list[str]:
    return sorted(_FIXTURE_BUILDERS) + ["chainN"]
