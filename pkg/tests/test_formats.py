"""
Tests for document formats and DOT export
"""

import json

import pytest
import yaml

from cyclo.digraph import Digraph, hermitian_adjacency
from cyclo.equivalence import SwitchingWitness
from cyclo.exceptions import ContractViolation, FormatError
from cyclo.formats import (
    decode_document,
    digraph_from_dict,
    digraph_to_dict,
    digraph_to_dot,
    document_kind,
    dump_json,
    encode_document,
    load_document,
    matrix_from_dict,
    matrix_to_dict,
    poly_from_json,
    poly_to_json,
    read_data,
    signed_from_dict,
    signed_to_dict,
    signed_to_dot,
    to_dot,
    witness_from_dict,
)
from cyclo.gaussint import I, NEG_I, ONE, GaussInt, HermMatrix, IntPoly
from cyclo.signed import SignedGraph


@pytest.fixture
def mixed_triangle():
    return Digraph.from_edges(3, digons=[(0, 1)], arcs=[(1, 2), (2, 0)])


@pytest.fixture
def signed_square():
    return SignedGraph.from_edges(4, pos=[(0, 1), (1, 2), (2, 3)], neg=[(3, 0)])


class TestDigraphDocuments:
    """{"n", "digons", "arcs"}"""

    def test_to_dict(self, mixed_triangle):
        assert digraph_to_dict(mixed_triangle) == {'n': 3, 'digons': [[0, 1]], 'arcs': [[1, 2], [2, 0]]}

    def test_from_dict(self, mixed_triangle):
        assert digraph_from_dict({'n': 3, 'digons': [[0, 1]], 'arcs': [[2, 0], [1, 2]]}) == mixed_triangle

    def test_lists_are_optional(self):
        assert digraph_from_dict({'n': 4}) == Digraph.empty(4)

    def test_unknown_key(self):
        with pytest.raises(FormatError, match="Invalid digraph document"):
            digraph_from_dict({'n': 2, 'edges': []})

    def test_bad_pair_reports_path(self):
        with pytest.raises(FormatError) as exc_info:
            digraph_from_dict({'n': 3, 'arcs': [[0, 1, 2]]})
        assert "Path: arcs/0" in str(exc_info.value)

    def test_negative_vertex(self):
        with pytest.raises(FormatError):
            digraph_from_dict({'n': 3, 'arcs': [[-1, 1]]})

    @pytest.mark.parametrize("data,message", [
        ({'n': 2, 'digons': [[0, 0]]}, "loop"),
        ({'n': 2, 'arcs': [[0, 2]]}, "outside"),
        ({'n': 2, 'digons': [[0, 1]], 'arcs': [[1, 0]]}, "more than once"),
    ])
    def test_structural_errors(self, data, message):
        with pytest.raises(FormatError, match=message):
            digraph_from_dict(data)


class TestSignedDocuments:
    """{"n", "pos", "neg", "labels"?}"""

    def test_to_dict(self, signed_square):
        assert signed_to_dict(signed_square) == {'n': 4, 'pos': [[0, 1], [1, 2], [2, 3]], 'neg': [[0, 3]]}

    def test_labels_kept_when_named(self):
        signed = SignedGraph.from_edges(2, pos=[(0, 1)], labels=["a", "b"])
        data = signed_to_dict(signed)
        assert data['labels'] == ["a", "b"]
        assert signed_from_dict(data) == signed

    def test_from_dict(self, signed_square):
        assert signed_from_dict({'n': 4, 'pos': [[0, 1], [1, 2], [2, 3]], 'neg': [[3, 0]]}) == signed_square

    def test_requires_both_lists(self):
        with pytest.raises(FormatError, match="neg"):
            signed_from_dict({'n': 2, 'pos': [[0, 1]]})

    def test_double_sign(self):
        with pytest.raises(FormatError, match="more than one sign"):
            signed_from_dict({'n': 2, 'pos': [[0, 1]], 'neg': [[1, 0]]})


class TestMatrixDocuments:
    """{"matrix": [[...]]}"""

    def test_round_trip_of_digraph_matrix(self, mixed_triangle):
        H = hermitian_adjacency(mixed_triangle)
        data = matrix_to_dict(H)
        assert set(entry for row in data['matrix'] for entry in row) <= {"0", "1", "i", "-i"}
        assert matrix_from_dict(data) == H

    def test_integer_and_string_entries(self):
        H = matrix_from_dict({'matrix': [[0, "i"], ["-i", 0]]})
        assert H[0, 1] == I and H[1, 0] == NEG_I

    def test_general_gaussian_entries(self):
        H = matrix_from_dict({'matrix': [["0", "1+i"], ["1-i", "0"]]})
        assert H[0, 1] == GaussInt(1, 1)

    def test_unreadable_entry(self):
        with pytest.raises(FormatError, match="Cannot parse"):
            matrix_from_dict({'matrix': [["0", "x"], ["x", "0"]]})

    def test_not_hermitian(self):
        with pytest.raises(ContractViolation):
            matrix_from_dict({'matrix': [["0", "i"], ["i", "0"]]})

    def test_entry_type(self):
        with pytest.raises(FormatError, match="Path: matrix/0/1"):
            matrix_from_dict({'matrix': [[0, 1.5], [1, 0]]})


class TestWitnessAndPolynomial:
    """Switching witnesses and integer polynomials"""

    def test_witness(self):
        witness = witness_from_dict({'perm': [1, 0], 'phases': ["1", "-i"], 'conj': True})
        assert witness == SwitchingWitness((1, 0), (ONE, NEG_I), True, False)

    def test_witness_phase_alphabet(self):
        with pytest.raises(FormatError, match="Path: phases/0"):
            witness_from_dict({'perm': [0], 'phases': ["2"]})

    def test_polynomial(self):
        p = IntPoly((4, 0, -4, 0, 1))
        assert poly_to_json(p) == ["4", "0", "-4", "0", "1"]
        assert poly_from_json(["4", "0", "-4", "0", "1"]) == p

    def test_polynomial_rejects_floats(self):
        with pytest.raises(FormatError):
            poly_from_json(["1.5"])

    def test_polynomial_needs_a_coefficient(self):
        with pytest.raises(FormatError):
            poly_from_json([])


class TestDocumentDispatch:
    """Recognising and decoding documents"""

    @pytest.mark.parametrize("data,kind", [
        ({'n': 2}, 'digraph'),
        ({'n': 2, 'pos': [], 'neg': []}, 'signed'),
        ({'matrix': [[0]]}, 'matrix'),
        ({'perm': [0], 'phases': ["1"]}, 'witness'),
    ])
    def test_kind(self, data, kind):
        assert document_kind(data) == kind

    def test_unknown(self):
        with pytest.raises(FormatError):
            document_kind([1, 2])
        with pytest.raises(FormatError):
            document_kind({'vertices': 3})

    def test_decode_and_encode(self, mixed_triangle, signed_square):
        for document in (mixed_triangle, signed_square, hermitian_adjacency(mixed_triangle)):
            assert decode_document(encode_document(document)) == document

    def test_encode_witness(self):
        witness = SwitchingWitness.identity(2)
        assert encode_document(witness) == witness.to_dict()

    def test_dump_json_keeps_unicode(self):
        assert dump_json({'label': "D4⊗Z[i]"}) == '{\n  "label": "D4⊗Z[i]"\n}'


class TestFiles:
    """Reading JSON and YAML files"""

    def test_json_file(self, tmp_path, mixed_triangle):
        path = tmp_path / "triangle.json"
        path.write_text(json.dumps(digraph_to_dict(mixed_triangle)))
        assert load_document(path) == mixed_triangle

    def test_yaml_file(self, tmp_path, signed_square):
        path = tmp_path / "square.yaml"
        path.write_text(yaml.dump(signed_to_dict(signed_square)))
        assert load_document(path) == signed_square

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            read_data(tmp_path / "nope.json")

    def test_unparseable(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(FormatError, match="Cannot parse"):
            read_data(path)

    def test_matrix_yaml(self, tmp_path):
        path = tmp_path / "m.yml"
        path.write_text("matrix:\n  - [0, i]\n  - [-i, 0]\n")
        H = load_document(path)
        assert isinstance(H, HermMatrix) and H[0, 1] == I


class TestDot:
    """Graphviz export"""

    def test_digraph(self, mixed_triangle):
        dot = digraph_to_dot(mixed_triangle, "tri")
        assert dot.startswith('digraph "tri" {\n')
        assert "  0 -> 1 [dir=none];" in dot
        assert "  1 -> 2;" in dot and "  2 -> 0;" in dot
        assert dot.endswith("}\n")

    def test_signed(self, signed_square):
        dot = signed_to_dot(signed_square)
        assert dot.startswith('graph "signed" {')
        assert "  0 -- 1 [style=solid];" in dot
        assert "  0 -- 3 [style=dashed];" in dot

    def test_dispatch(self, mixed_triangle, signed_square):
        assert to_dot(mixed_triangle).startswith('digraph "cyclo"')
        assert to_dot(signed_square).startswith('graph "cyclo"')

    def test_matrix_rejected(self, mixed_triangle):
        with pytest.raises(FormatError, match="HermMatrix"):
            to_dot(hermitian_adjacency(mixed_triangle))
