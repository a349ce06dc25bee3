import json

import pytest

from homhopf import QQ, check_hopf
from homhopf.catalog import EXAMPLE_NAMES, builtin_example
from homhopf.documents import (
    document_to_json,
    dumps_document,
    load_document,
    loads_document,
    parse_document,
    save_document,
)
from homhopf.errors import FieldCharError, ParseError, UnknownExample
from homhopf.hom_structures import check_antipode, check_hom_algebra, check_hom_coalgebra

import support

PRIMES = [None, 3, 5, 7]


def _variants():
    for name in EXAMPLE_NAMES:
        for p in PRIMES:
            yield name, p
    yield "kz2", 2
    yield "sweedler-hom", 2


@pytest.mark.parametrize("name,p", list(_variants()))
def test_roundtrip_byte_stable(name, p, tmp_path):
    doc = builtin_example(name, p)
    path = tmp_path / "d.json"
    save_document(doc, path)
    first = path.read_bytes()
    save_document(load_document(path), path)
    assert path.read_bytes() == first
    assert dumps_document(loads_document(first.decode())) == first.decode()


@pytest.mark.parametrize("name", ["kz2", "sweedler-hom"])
def test_roundtrip_of_constructed_documents(name, tmp_path):
    from homhopf.documents import AlgebraDocument

    text = dumps_document(AlgebraDocument.from_structure(support.double(name)))
    again = dumps_document(loads_document(text))
    assert again == text
    assert json.loads(text)["provenance"]["construction"] == "drinfeld_double"


def test_canonical_ordering_and_scalars():
    raw = document_to_json(support.doc("kz2"))
    raw["mul"] = list(reversed(raw["mul"]))
    raw["unit"] = ["2/2", "0/5"]
    assert dumps_document(parse_document(raw)) == dumps_document(support.doc("kz2"))


class TestBuiltins:
    def test_sweedler(self):
        H = support.hopf("sweedler-hom")
        assert H.dim == 4 and H.names == ("1", "g", "x", "gx")
        assert H.alpha.column(2) == (0, 0, -1, 0)
        gx, xg = H.product(H.e(1), H.e(2)), H.product(H.e(2), H.e(1))
        assert gx == tuple(-c for c in xg)
        assert H.antipode.column(2) == (0, 0, 0, -1)

    def test_kz2(self):
        H = support.hopf("kz2")
        assert H.dim == 2
        assert H.alpha == H.antipode == type(H.alpha).identity(QQ, 2)

    def test_bicross_data_blocks(self):
        d = support.doc("bicross-2-5-data")
        assert d.action.coeffs[1][1] == (0, 1)  # g.x = x
        assert d.coaction.coeffs[1][1] == (1, 0)  # rho(g) = g (x) 1

    def test_unknown(self):
        with pytest.raises(UnknownExample):
            builtin_example("quaternions")

    def test_char_two_refused_where_half_or_signs_matter(self):
        with pytest.raises(FieldCharError):
            builtin_example("sweedler-hom-r", 2)

    @pytest.mark.parametrize("name", ["kz2", "sweedler-hom", "sweedler-hom-r", "bicross-2-5-H", "bicross-2-5-data"])
    @pytest.mark.parametrize("p", [None, 3, 5])
    def test_builtin_hopf_examples_pass(self, name, p):
        assert check_hopf(support.hopf(name, p)).passed

    @pytest.mark.parametrize("p", [None, 3, 5])
    def test_example_b_passes_its_advertised_checks(self, p):
        B = support.hopf("bicross-2-5-B", p)
        assert check_hom_algebra(B).passed
        assert check_hom_coalgebra(B).passed
        assert check_antipode(B).passed


class TestParseErrors:
    def test_empty(self, tmp_path):
        f = tmp_path / "e.json"
        f.write_text("")
        with pytest.raises(ParseError):
            load_document(f)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            load_document(tmp_path / "nope.json")

    def test_bad_json_reports_position(self):
        with pytest.raises(ParseError, match="line 1"):
            loads_document("{")

    def test_alpha_not_square(self):
        raw = document_to_json(support.doc("kz2"))
        raw["alpha"] = [["1", "0"]]
        with pytest.raises(ParseError, match="alpha"):
            parse_document(raw)

    def test_float_scalar_refused(self):
        raw = document_to_json(support.doc("kz2"))
        raw["unit"] = [1.0, 0]
        with pytest.raises(ParseError, match="unit"):
            parse_document(raw)

    def test_index_out_of_range(self):
        raw = document_to_json(support.doc("kz2"))
        raw["mul"].append([0, 0, 7, "1"])
        with pytest.raises(ParseError, match="mul"):
            parse_document(raw)

    def test_half_in_characteristic_two(self):
        raw = document_to_json(support.doc("sweedler-hom-r"))
        raw["scalars"] = {"kind": "gfp", "p": 2}
        with pytest.raises((FieldCharError, ParseError)):
            parse_document(raw)

    def test_gfp_entry_out_of_range(self):
        raw = document_to_json(support.doc("kz2", 5))
        raw["unit"] = ["9", "0"]
        with pytest.raises(ParseError):
            parse_document(raw)
