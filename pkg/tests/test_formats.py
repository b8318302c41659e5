import pytest

from monlat.formats import (
    ParseError,
    emit_lattice_text,
    emit_monoid_text,
    emit_semilattice_text,
    parse_monoid_text,
    parse_semilattice_text,
    parse_structure,
)
from monlat.nsub import enumerate_nsub, lattices_isomorphic, lattice_of_semilattice


L6_TEXT = """\
# six-element example
semilattice 6
cover 0 1
cover 0 2
cover 1 3
cover 1 4
cover 2 4
cover 3 5
cover 4 5
label 0 0
label 1 D
label 2 E
label 3 B
label 4 C
label 5 A
"""


class TestMonoidFormat:
    def test_roundtrip(self, V4):
        text = emit_monoid_text(V4)
        again = parse_monoid_text(text)
        assert again.table == V4.table and again.labels == V4.labels

    def test_comments_and_whitespace(self):
        text = "# comment\nmonoid 2\n\n0 1  # trailing\n1 0\n"
        M = parse_monoid_text(text)
        assert M.size == 2

    def test_invalid_table_diagnosed_with_line(self):
        text = "monoid 2\n0 1\n1 2\n"
        with pytest.raises(ParseError) as err:
            parse_monoid_text(text)
        assert "OutOfRange" in str(err.value)

    def test_non_associative_diagnosed(self):
        text = "monoid 3\n0 1 2\n1 2 2\n2 1 1\n"
        with pytest.raises(ParseError) as err:
            parse_monoid_text(text)
        assert "NonAssociative" in str(err.value)

    def test_row_count_mismatch(self):
        with pytest.raises(ParseError) as err:
            parse_monoid_text("monoid 3\n0 1 2\n1 2 0\n")
        assert err.value.lineno == 3

    def test_duplicate_label_rejected(self):
        with pytest.raises(ParseError) as err:
            parse_monoid_text("monoid 2\n0 1\n1 0\nlabel 0 e\nlabel 0 f\n")
        assert "duplicate" in str(err.value)

    def test_partial_labels_fill_with_indices(self):
        M = parse_monoid_text("monoid 2\n0 1\n1 0\nlabel 1 g\n")
        assert M.labels == ("0", "g")


class TestSemilatticeFormat:
    def test_parse_l6(self, L6):
        M = parse_semilattice_text(L6_TEXT)
        assert M.table == L6.table and M.labels == L6.labels

    def test_roundtrip_canonical(self, L6):
        text = emit_semilattice_text(L6)
        again = parse_semilattice_text(text)
        assert again.table == L6.table and again.labels == L6.labels
        assert emit_semilattice_text(again) == text

    def test_no_bottom_diagnostic(self):
        text = "semilattice 3\ncover 0 2\ncover 1 2\n"
        with pytest.raises(ParseError) as err:
            parse_semilattice_text(text)
        assert "minimal" in str(err.value)

    def test_lattice_header_accepted(self):
        assert parse_semilattice_text("lattice 1\n").size == 1

    def test_unknown_line_rejected(self):
        with pytest.raises(ParseError):
            parse_semilattice_text("semilattice 2\nedge 0 1\n")


class TestDispatch:
    def test_dispatch_on_header(self, V4, L6):
        assert parse_structure(emit_monoid_text(V4)).table == V4.table
        assert parse_structure(emit_semilattice_text(L6)).table == L6.table

    def test_unknown_header(self):
        with pytest.raises(ParseError):
            parse_structure("poset 3\n")


class TestLatticeExport:
    def test_nsub_export_reparses_isomorphic(self, cmon, N5):
        lat = enumerate_nsub(cmon, N5)
        text = emit_lattice_text(lat)
        again = parse_structure(text)
        assert lattices_isomorphic(lattice_of_semilattice(again), lat)

    def test_export_carries_subset_labels(self, cmon, V4):
        text = emit_lattice_text(enumerate_nsub(cmon, V4))
        assert "label 0 {0}" in text
        assert "label 4 {0,g,h,k}" in text
