"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Every expected value here is either pinned from an independent derivation
(brute force, hand-verifiable congruence scans frozen in the module tests) or
is a structural property quantified over whole fixture families. Tolerances
are exact: all structures are finite and all comparisons are discrete.
"""

from monlat.census import brute_force_lattices, lattices_of_size, lattices_up_to
from monlat.checks import (
    diexact_check,
    dpn_check,
    objects_at_depth,
    pullback_stability_check,
    second_iso_check,
    subquotient_closure,
    third_iso_check,
)
from monlat.context import antinormal_composite, cmon_context, make_ses
from monlat.monoid import cokernel_by_submonoid, normal_closure
from monlat.nsub import (
    enumerate_nsub,
    is_distributive,
    is_modular,
    join_via_uniinter,
    lattice_of_semilattice,
    phi_psi,
)
from monlat.scenarios import (
    scenario_klein_four_ses_diexact,
    scenario_pentagon_dpn,
    scenario_pentagon_ses_third_iso,
    scenario_six_lattice_quotient,
)

from conftest import down


def _announce(k, ok, detail=""):
    print(f"CRITERION {k:02d}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else ""))
    assert ok, detail


def test_criterion_01_pentagon_dpn_witness(N5, cmon):
    # dpn fails with witness pair (downB, downD); downD -> up(B) is an iso
    # and downB -> up(D) maps 0, C, B to exactly (class-of-0, A, A)
    result = scenario_pentagon_dpn()
    report = dpn_check(cmon, N5, "N5")
    beta = antinormal_composite(cmon, N5, down(N5, "B"), down(N5, "D"))
    ok = (
        result.ok
        and not report.passed
        and any(w.keys == (down(N5, "B"), down(N5, "D")) for w in report.witnesses)
        and beta.mapping == (0, 1, 1)
    )
    _announce(1, ok, result.detail)


def test_criterion_02_six_lattice_quotient(L6):
    result = scenario_six_lattice_quotient()
    Q, proj = cokernel_by_submonoid(L6, down(L6, "E"))
    classes = {}
    for x in range(L6.size):
        classes.setdefault(proj(x), set()).add(L6.label(x))
    ok = (
        result.ok
        and sorted(classes.values(), key=sorted)
        == [{"0", "E"}, {"A", "B"}, {"C", "D"}]
        and Q.size == 3
    )
    _announce(2, ok, result.detail)


def test_criterion_03_ses_third_iso_failure(N5, cmon, ses1):
    result = scenario_pentagon_ses_third_iso()
    S = make_ses(cmon, N5, cmon.subobject_mono(N5, down(N5, "D")))
    report = third_iso_check(ses1, S, "N5|sub={0,D}", depth=1)
    witness = next(
        (w for w in report.witnesses if w.keys == (down(N5, "C"), down(N5, "B"))), None
    )
    ok = (
        result.ok
        and not report.passed
        and witness is not None
        and witness.note == "left-square-not-pullback"
    )
    _announce(3, ok, result.detail)


def test_criterion_04_klein_four_diexact_story(V4, cmon, ses1):
    result = scenario_klein_four_ses_diexact()
    base = diexact_check(cmon, V4, "V4")
    S = make_ses(cmon, V4, cmon.subobject_mono(V4, frozenset({0, 1})))
    lifted = diexact_check(ses1, S, "V4|sub={0,g}", depth=1)
    lat = enumerate_nsub(cmon, V4)
    modular, _ = is_modular(lat)
    distributive, witness = is_distributive(lat)
    ok = (
        result.ok
        and base.passed
        and not lifted.passed
        and any(
            set(w.keys) == {frozenset({0, 2}), frozenset({0, 3})}
            for w in lifted.witnesses
        )
        and modular
        and not distributive
        and witness.kind == "diamond"
    )
    _announce(4, ok, result.detail)


def test_criterion_05_separation_chain(N5, V4, cmon, ses1):
    # z-exact > HSD: pentagon at ses depth 1
    S = make_ses(cmon, N5, cmon.subobject_mono(N5, down(N5, "D")))
    hsd_gap = not third_iso_check(ses1, S, "S", depth=1).passed
    # HSD > DPN: pentagon at depth 0
    dpn_gap = (
        third_iso_check(cmon, N5, "N5").passed and not dpn_check(cmon, N5, "N5").passed
    )
    # DPN > di-exact: Klein four-group at depth 1, with DPN passing on every
    # ses object over it
    dpn_all = all(
        dpn_check(ctx, obj, nm, depth=1).passed
        for ctx, obj, nm in objects_at_depth(V4, 1, "V4")
    )
    diexact_gap = any(
        not diexact_check(ctx, obj, nm, depth=1).passed
        for ctx, obj, nm in objects_at_depth(V4, 1, "V4")
    )
    ok = hsd_gap and dpn_gap and dpn_all and diexact_gap
    _announce(5, ok)


def test_criterion_06_join_oracle_equivalence(cmon, commutative_fixtures):
    discrepancies = 0
    cases = 0
    pool = list(commutative_fixtures.values()) + lattices_up_to(7)
    for L in pool:
        monos = cmon.normal_subobject_monos(L)
        for a in monos:
            for b in monos:
                cases += 1
                j = join_via_uniinter(cmon, L, a, b)
                if cmon.mono_key(j) != normal_closure(L, a.image | b.image):
                    discrepancies += 1
    _announce(6, discrepancies == 0, f"{cases} joins compared")


def test_criterion_07_lattice_method_agreement():
    counts = [len(lattices_of_size(n)) for n in range(1, 6)]
    brute = [len(brute_force_lattices(n)) for n in range(1, 6)]
    checked = 0
    for L in lattices_up_to(8):
        lat = lattice_of_semilattice(L)
        is_modular(lat)  # raises LatticeMethodDisagreement on divergence
        is_distributive(lat)
        checked += 1
    ok = counts == [1, 1, 1, 2, 5] and brute == counts and checked == 300
    _announce(7, ok, f"{checked} lattices, counts {counts}")


def test_criterion_08_nsub_transfer_across_depths(commutative_fixtures):
    mismatches = 0
    objects = 0
    for name, L in commutative_fixtures.items():
        for depth in (1, 2, 3):
            for ctx, S, nm in objects_at_depth(L, depth, name):
                objects += 1
                lat_s = enumerate_nsub(ctx, S)
                lat_b = enumerate_nsub(ctx.inner, S.base)
                # the transfer map preserves keys, so lattice isomorphism
                # along it is table equality
                if not (
                    lat_s.keys == lat_b.keys
                    and lat_s.leq == lat_b.leq
                    and lat_s.join == lat_b.join
                    and lat_s.meet == lat_b.meet
                ):
                    mismatches += 1
                    continue
                if is_modular(lat_s)[0] != is_modular(lat_b)[0]:
                    mismatches += 1
                if is_distributive(lat_s)[0] != is_distributive(lat_b)[0]:
                    mismatches += 1
    _announce(8, mismatches == 0, f"{objects} ses objects at depths 1..3")


def test_criterion_09_formulation_equivalences(commutative_fixtures):
    # FormulationDisagreement / DecompositionDisagreement raise on divergence
    checked = 0
    for name, L in commutative_fixtures.items():
        second_iso_check(cmon_context(), L, name)
        diexact_check(cmon_context(), L, name, cross_check=True)
        checked += 1
        for ctx, S, nm in objects_at_depth(L, 1, name):
            second_iso_check(ctx, S, nm, depth=1)
            diexact_check(ctx, S, nm, depth=1, cross_check=True)
            checked += 1
    # widen the checked set to every enumerated lattice: size <= 6 at the
    # base level and size <= 5 one ses level up
    for i, L in enumerate(lattices_up_to(6)):
        second_iso_check(cmon_context(), L, f"c{i}")
        diexact_check(cmon_context(), L, f"c{i}", cross_check=True)
        checked += 1
    for i, L in enumerate(lattices_up_to(5)):
        for ctx, S, nm in objects_at_depth(L, 1, f"c{i}"):
            second_iso_check(ctx, S, nm, depth=1)
            diexact_check(ctx, S, nm, depth=1, cross_check=True)
            checked += 1
    _announce(9, True, f"{checked} objects, zero disagreements")


def test_criterion_10_regular_case_properties(cmon, commutative_fixtures):
    stability_ok = all(
        pullback_stability_check(cmon, L, name).passed
        for name, L in commutative_fixtures.items()
    )
    galois_ok = True
    monos = 0
    for L in commutative_fixtures.values():
        for m in cmon.normal_subobject_monos(L):
            monos += 1
            if not phi_psi(cmon, m).ok:
                galois_ok = False
    _announce(10, stability_ok and galois_ok, f"{monos} normal monos")


def test_criterion_11_localized_modularity_search(cmon):
    exceptions = []
    nonmodular = 0
    for L in lattices_up_to(7):
        if is_modular(lattice_of_semilattice(L))[0]:
            continue
        nonmodular += 1
        members = subquotient_closure(cmon, L)
        if not any(
            not diexact_check(cmon, member, "member", cross_check=False).passed
            for member in members
        ):
            exceptions.append(L.table)
    for table in exceptions:
        print(f"EXCEPTION: non-modular lattice with no local failure: {table}")
    _announce(11, not exceptions, f"{nonmodular} non-modular lattices searched")
