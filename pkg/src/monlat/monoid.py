"""Finite monoids as operation tables, with the kernel/cokernel calculus
the rest of the package is built on.

Element 0 is always the two-sided identity; validation enforces this rather
than searching for an identity, so element indices are canonical and values
hash/compare structurally. Everything here is immutable and every function
is pure, so results may be shared between threads and cached freely.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterator


class MonoidError(ValueError):
    pass


@dataclass(frozen=True)
class AxiomFailure:
    """One violated monoid axiom together with its witnessing indices."""

    kind: str  # OutOfRange | IdentityViolation | NonAssociative
    witness: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind}({','.join(map(str, self.witness))})"


class InvalidMonoid(MonoidError):
    """Raised with the complete list of violated axioms."""

    def __init__(self, failures):
        self.failures = tuple(failures)
        super().__init__("; ".join(map(str, self.failures)))


class NotASubmonoid(MonoidError):
    pass


class NotCommutative(MonoidError):
    pass


class NotNormalSubmonoid(MonoidError):
    pass


def table_axiom_failures(table) -> list[AxiomFailure]:
    """All axiom violations in a square operation table.

    Out-of-range entries are reported alone (the other axioms cannot be
    evaluated soundly on a table that indexes outside itself).
    """
    n = len(table)
    bad = [
        AxiomFailure("OutOfRange", (i, j))
        for i, row in enumerate(table)
        for j, v in enumerate(row)
        if not (isinstance(v, int) and 0 <= v < n)
    ]
    if bad:
        return bad
    for i in range(n):
        if table[0][i] != i or table[i][0] != i:
            bad.append(AxiomFailure("IdentityViolation", (i,)))
    for i, j, k in product(range(n), repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            bad.append(AxiomFailure("NonAssociative", (i, j, k)))
    return bad


@dataclass(frozen=True)
class FinMonoid:
    """A finite monoid given by its full operation table.

    ``table[i][j]`` is the index of ``i * j``. Labels are display-only and
    excluded from equality and hashing.
    """

    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise MonoidError("operation table must be square and nonempty")
        failures = table_axiom_failures(table)
        if failures:
            raise InvalidMonoid(failures)
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != n:
                raise MonoidError("label count differs from element count")
            object.__setattr__(self, "labels", labels)

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash(self.table)
            object.__setattr__(self, "_hash", h)
        return h

    @property
    def size(self) -> int:
        return len(self.table)

    @cached_property
    def commutative(self) -> bool:
        n = self.size
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(i))

    @cached_property
    def idempotent(self) -> bool:
        return all(self.table[i][i] == i for i in range(self.size))

    @property
    def is_semilattice(self) -> bool:
        return self.commutative and self.idempotent

    def op(self, i: int, j: int) -> int:
        return self.table[i][j]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def element(self, name: str) -> int:
        """Index of the element with the given label."""
        if self.labels is None:
            return int(name)
        return self.labels.index(name)

    def render_subset(self, members) -> str:
        return "{" + ",".join(self.label(i) for i in sorted(members)) + "}"

    def __repr__(self) -> str:
        return f"FinMonoid(n={self.size})"


def validate_monoid(table, labels=None) -> FinMonoid:
    """Build a FinMonoid, raising InvalidMonoid with every violated axiom."""
    return FinMonoid(tuple(tuple(row) for row in table), labels)


TRIVIAL = FinMonoid(((0,),))


@dataclass(frozen=True)
class MonoidHom:
    """A total identity- and operation-preserving map between FinMonoids."""

    dom: FinMonoid
    cod: FinMonoid
    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(self.mapping)
        object.__setattr__(self, "mapping", mapping)
        n, m = self.dom.size, self.cod.size
        if len(mapping) != n:
            raise MonoidError("mapping length differs from domain size")
        if any(not (0 <= v < m) for v in mapping):
            raise MonoidError("mapping hits elements outside the codomain")
        if mapping[0] != 0:
            raise MonoidError("identity is not preserved")
        td, tc = self.dom.table, self.cod.table
        for i in range(n):
            for j in range(n):
                if mapping[td[i][j]] != tc[mapping[i]][mapping[j]]:
                    raise MonoidError(f"not a homomorphism at pair ({i},{j})")

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.dom, self.cod, self.mapping))
            object.__setattr__(self, "_hash", h)
        return h

    @cached_property
    def image(self) -> frozenset[int]:
        return frozenset(self.mapping)

    def is_injective(self) -> bool:
        return len(self.image) == self.dom.size

    def is_surjective(self) -> bool:
        return len(self.image) == self.cod.size

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def __repr__(self) -> str:
        return f"MonoidHom({self.dom.size}->{self.cod.size}, {self.mapping})"


@dataclass(frozen=True)
class Subset:
    """A set of element indices of a monoid (submonoids, kernels, ...)."""

    of: FinMonoid
    members: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        if any(not (0 <= i < self.of.size) for i in self.members):
            raise MonoidError("subset member out of range")

    def is_submonoid(self) -> bool:
        mem = self.members
        return 0 in mem and all(self.of.op(a, b) in mem for a in mem for b in mem)

    def render(self) -> str:
        return self.of.render_subset(self.members)


def _hom_unchecked(dom: FinMonoid, cod: FinMonoid, mapping: tuple[int, ...]) -> MonoidHom:
    """Internal constructor for maps that are homomorphisms by construction
    (composites, identities, factorizations of valid homs). Callers must
    guarantee the hom law; raw or external data goes through MonoidHom()."""
    h = object.__new__(MonoidHom)
    h.__dict__.update(dom=dom, cod=cod, mapping=mapping)
    return h


def identity_hom(M: FinMonoid) -> MonoidHom:
    return _hom_unchecked(M, M, tuple(range(M.size)))

def zero_hom(M: FinMonoid, N: FinMonoid) -> MonoidHom:
    return _hom_unchecked(M, N, (0,) * M.size)

def compose(g: MonoidHom, f: MonoidHom) -> MonoidHom:
    """g after f."""
    if f.cod != g.dom:
        raise MonoidError("homs are not composable")
    return _hom_unchecked(f.dom, g.cod, tuple(map(g.mapping.__getitem__, f.mapping)))


def _require_submonoid(M: FinMonoid, members: frozenset[int]) -> None:
    if not Subset(M, members).is_submonoid():
        raise NotASubmonoid(f"{M.render_subset(members)} is not a submonoid")


@lru_cache(maxsize=None)
def submonoid(M: FinMonoid, members: frozenset) -> FinMonoid:
    """The submonoid on the given members, elements relabelled in sorted order."""
    _require_submonoid(M, members)
    order = sorted(members)  # 0 is a member, so it stays at index 0
    pos = {m: i for i, m in enumerate(order)}
    table = tuple(tuple(pos[M.op(a, b)] for b in order) for a in order)
    labels = tuple(M.label(m) for m in order) if M.labels is not None else None
    return FinMonoid(table, labels)

@lru_cache(maxsize=None)
def inclusion_hom(M: FinMonoid, members: frozenset) -> MonoidHom:
    return _hom_unchecked(submonoid(M, members), M, tuple(sorted(members)))


@lru_cache(maxsize=None)
def is_normal_submonoid(M: FinMonoid, members: frozenset) -> tuple[bool, tuple[int, ...] | None]:
    """Normality of a submonoid, with a violating triple (x, k, y) on failure.

    A submonoid K is normal exactly when xky is in K iff xy is in K, for all
    k in K and x, y in M. For commutative M only the one-sided condition
    "x+k in K implies x in K" can fail, and the witness uses y = 0.
    """
    _require_submonoid(M, members)
    t = M.table
    if M.commutative:
        for k in members:
            for x in range(M.size):
                if t[x][k] in members and x not in members:
                    return False, (x, k, 0)
        return True, None
    for k in members:
        for x in range(M.size):
            for y in range(M.size):
                if (t[t[x][k]][y] in members) != (t[x][y] in members):
                    return False, (x, k, y)
    return True, None


def kernel_subset(f: MonoidHom) -> frozenset[int]:
    """Preimage of the identity of the codomain."""
    return frozenset(i for i, v in enumerate(f.mapping) if v == 0)

def kernel_hom(f: MonoidHom) -> MonoidHom:
    return inclusion_hom(f.dom, kernel_subset(f))


def _quotient_by_classes(M: FinMonoid, classes: list[tuple[int, ...]]):
    """Quotient monoid from a partition, classes relabelled by minimal member.

    The partition must be a congruence; compatibility with the operation is
    re-checked and an incompatible partition is a hard internal error.
    """
    classes = sorted((tuple(sorted(c)) for c in classes), key=lambda c: c[0])
    if classes[0][0] != 0:
        raise RuntimeError("partition does not single out the identity class")
    class_of = [None] * M.size
    for ci, cls in enumerate(classes):
        for m in cls:
            class_of[m] = ci
    if any(c is None for c in class_of):
        raise RuntimeError("partition does not cover the monoid")
    for cls in classes:
        rep = cls[0]
        for other in cls[1:]:
            for c in range(M.size):
                if class_of[M.op(rep, c)] != class_of[M.op(other, c)] or class_of[M.op(c, rep)] != class_of[M.op(c, other)]:
                    raise RuntimeError("partition is not a congruence")
    table = tuple(
        tuple(class_of[M.op(a[0], b[0])] for b in classes) for a in classes
    )
    labels = tuple("{" + ",".join(M.label(m) for m in cls) + "}" for cls in classes)
    Q = FinMonoid(table, labels)
    return Q, _hom_unchecked(M, Q, tuple(class_of))


@lru_cache(maxsize=None)
def cokernel_by_submonoid(M: FinMonoid, members: frozenset) -> tuple[FinMonoid, MonoidHom]:
    """Quotient of a commutative monoid by the congruence generated by a submonoid.

    Two elements m, n are identified when m+k = n+l for some k, l in the
    submonoid; for a submonoid this relation is already transitive. The
    projection is a normal epimorphism and its kernel is the normal closure
    of the submonoid.
    """
    if not M.commutative:
        raise NotCommutative("cokernel congruence needs a commutative monoid")
    _require_submonoid(M, members)
    t = M.table
    translates = [frozenset(t[m][k] for k in members) for m in range(M.size)]
    classes: list[list[int]] = []
    for m in range(M.size):
        for cls in classes:
            if translates[m] & translates[cls[0]]:
                cls.append(m)
                break
        else:
            classes.append([m])
    return _quotient_by_classes(M, [tuple(c) for c in classes])


def cokernel_of_hom(f: MonoidHom) -> MonoidHom:
    """Projection of the codomain by the congruence generated by the image."""
    return cokernel_by_submonoid(f.cod, f.image)[1]


@lru_cache(maxsize=None)
def syntactic_quotient(M: FinMonoid, members: frozenset) -> tuple[FinMonoid, MonoidHom]:
    """Quotient of a (possibly non-commutative) monoid by the syntactic
    congruence of a normal submonoid: m and n are identified when xmy and
    xny land in the submonoid for exactly the same pairs (x, y)."""
    ok, witness = is_normal_submonoid(M, members)
    if not ok:
        raise NotNormalSubmonoid(f"submonoid is not normal, witness {witness}")
    t = M.table
    rng = range(M.size)
    signature = [
        frozenset((x, y) for x in rng for y in rng if t[t[x][m]][y] in members)
        for m in rng
    ]
    groups: dict[frozenset, list[int]] = {}
    for m in rng:
        groups.setdefault(signature[m], []).append(m)
    Q, proj = _quotient_by_classes(M, [tuple(g) for g in groups.values()])
    if kernel_subset(proj) != members:
        raise RuntimeError("identity class of the syntactic congruence differs from the submonoid")
    return Q, proj


@lru_cache(maxsize=None)
def normal_closure(M: FinMonoid, seed: frozenset) -> frozenset[int]:
    """Smallest normal submonoid of a commutative monoid containing the seed.

    Fixpoint of two monotone rules: close under the operation, and pull x in
    whenever x+k is in the set for some member k. Alternating the two passes
    converges; the order does not affect the result.
    """
    if not M.commutative:
        raise NotCommutative("normal closure needs a commutative monoid")
    t = M.table
    current = set(seed) | {0}
    while True:
        changed = False
        for a in list(current):
            for b in list(current):
                if t[a][b] not in current:
                    current.add(t[a][b])
                    changed = True
        for x in range(M.size):
            if x in current:
                continue
            if any(t[x][k] in current for k in current):
                current.add(x)
                changed = True
        if not changed:
            return frozenset(current)


def is_normal_mono(f: MonoidHom) -> bool:
    """Injective, with normal image, and equal (up to the canonical
    identification) to the kernel of its own cokernel."""
    if not f.is_injective():
        return False
    if not is_normal_submonoid(f.cod, f.image)[0]:
        return False
    return kernel_subset(cokernel_of_hom(f)) == f.image


def is_normal_epi(f: MonoidHom) -> bool:
    """Surjective and coinciding, up to the canonical iso, with the cokernel
    of its own kernel."""
    if not f.is_surjective():
        return False
    _, proj = cokernel_by_submonoid(f.dom, kernel_subset(f))
    seen: dict[int, int] = {}
    for x in range(f.dom.size):
        cls = proj(x)
        if cls in seen:
            if seen[cls] != f(x):
                return False  # f does not factor through the quotient
        else:
            seen[cls] = f(x)
    return len(set(seen.values())) == len(seen)


@dataclass(frozen=True)
class NormalDecomposition:
    """A normal-epi-then-normal-mono factorization; mono after epi equals the map."""

    epi: object
    mono: object


@dataclass(frozen=True)
class NotNormal:
    """Returned (not raised) when a map admits no normal decomposition."""

    reason: str


def normal_decomposition(f: MonoidHom) -> NormalDecomposition | NotNormal:
    """Canonical normal decomposition of a hom between commutative monoids.

    The candidate middle map u sends the kernel-class of x to f(x), from the
    quotient by the kernel into the kernel of the cokernel; f is normal
    exactly when u is bijective, by uniqueness of normal decompositions.
    """
    K = kernel_subset(f)
    Q, e = cokernel_by_submonoid(f.dom, K)
    p = cokernel_of_hom(f)
    I = kernel_subset(p)
    m = inclusion_hom(f.cod, I)
    order = sorted(I)
    pos = {v: i for i, v in enumerate(order)}
    u_map = [None] * Q.size
    for x in range(f.dom.size):
        v = pos[f(x)]  # image always lands in ker(coker f)
        if u_map[e(x)] is None:
            u_map[e(x)] = v
        elif u_map[e(x)] != v:
            raise RuntimeError("induced map is not constant on kernel classes")
    u = _hom_unchecked(Q, m.dom, tuple(u_map))  # hom law holds by construction
    if not u.is_injective():
        return NotNormal("induced map not injective")
    if not u.is_surjective():
        return NotNormal("induced map not surjective")
    dec = NormalDecomposition(compose(u, e), m)
    if compose(dec.mono, dec.epi) != f:
        raise RuntimeError("normal decomposition does not recompose")
    return dec


def is_normal_map(f: MonoidHom) -> bool:
    return isinstance(normal_decomposition(f), NormalDecomposition)


def _iso_backtrack(M: FinMonoid, N: FinMonoid) -> Iterator[tuple[int, ...]]:
    """Identity-preserving bijections M -> N consistent with both tables,
    by backtracking with partial-table pruning."""
    n = M.size
    if n != N.size or M.commutative != N.commutative or M.idempotent != N.idempotent:
        return
    perm: list[int | None] = [None] * n
    used = [False] * n
    perm[0], used[0] = 0, True

    def consistent(upto: int) -> bool:
        for i in range(upto + 1):
            for j in range(upto + 1):
                k = M.table[i][j]
                v = N.table[perm[i]][perm[j]]
                if k <= upto:
                    if v != perm[k]:
                        return False
                elif used[v] :
                    return False  # image already taken by an assigned element
        return True

    def extend(i: int):
        if i == n:
            yield tuple(perm)  # type: ignore[arg-type]
            return
        for c in range(n):
            if used[c]:
                continue
            perm[i], used[c] = c, True
            if consistent(i):
                yield from extend(i + 1)
            perm[i], used[c] = None, False

    yield from extend(1)


def isomorphisms(M: FinMonoid, N: FinMonoid) -> Iterator[MonoidHom]:
    for perm in _iso_backtrack(M, N):
        yield _hom_unchecked(M, N, perm)

def find_isomorphism(M: FinMonoid, N: FinMonoid) -> MonoidHom | None:
    return next(isomorphisms(M, N), None)

@lru_cache(maxsize=None)
def are_isomorphic(M: FinMonoid, N: FinMonoid) -> bool:
    return find_isomorphism(M, N) is not None


def all_homs(M: FinMonoid, N: FinMonoid) -> list[MonoidHom]:
    """Every homomorphism M -> N, by backtracking over partial maps."""
    n = M.size
    f: list[int | None] = [0] + [None] * (n - 1)
    out: list[MonoidHom] = []

    def consistent(upto: int) -> bool:
        for i in range(upto + 1):
            for j in range(upto + 1):
                k = M.table[i][j]
                if k <= upto and f[k] != N.table[f[i]][f[j]]:
                    return False
        return True

    def extend(i: int):
        if i == n:
            out.append(_hom_unchecked(M, N, tuple(f)))  # type: ignore[arg-type]
            return
        for c in range(N.size):
            f[i] = c
            if consistent(i):
                extend(i + 1)
            f[i] = None

    if n == 1:
        return [_hom_unchecked(M, N, (0,))]
    extend(1)
    return out
