"""
File formats: JSON/YAML documents for digraphs, signed graphs, matrices and
witnesses, and DOT export

Documents are validated with jsonschema before they are decoded, so a
malformed file fails with the path of the offending field.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Union

import jsonschema
import yaml

from cyclo.digraph import Digraph
from cyclo.equivalence import SwitchingWitness
from cyclo.exceptions import FormatError
from cyclo.gaussint import GaussInt, HermMatrix, IntPoly
from cyclo.signed import SignedGraph

logger = logging.getLogger(__name__)

_PAIR_LIST = {
    'type': 'array',
    'items': {
        'type': 'array',
        'items': {'type': 'integer', 'minimum': 0},
        'minItems': 2,
        'maxItems': 2,
    },
}

_ENTRY = {'type': ['string', 'integer']}

DIGRAPH_SCHEMA = {
    'type': 'object',
    'properties': {
        'n': {'type': 'integer', 'minimum': 0},
        'digons': _PAIR_LIST,
        'arcs': _PAIR_LIST,
    },
    'required': ['n'],
    'additionalProperties': False,
}

SIGNED_SCHEMA = {
    'type': 'object',
    'properties': {
        'n': {'type': 'integer', 'minimum': 0},
        'pos': _PAIR_LIST,
        'neg': _PAIR_LIST,
        'labels': {'type': 'array', 'items': {'type': 'string'}},
    },
    'required': ['n', 'pos', 'neg'],
    'additionalProperties': False,
}

MATRIX_SCHEMA = {
    'type': 'object',
    'properties': {
        'matrix': {'type': 'array', 'items': {'type': 'array', 'items': _ENTRY}},
    },
    'required': ['matrix'],
    'additionalProperties': False,
}

WITNESS_SCHEMA = {
    'type': 'object',
    'properties': {
        'perm': {'type': 'array', 'items': {'type': 'integer', 'minimum': 0}},
        'phases': {'type': 'array', 'items': {'type': 'string', 'enum': ['1', 'i', '-1', '-i']}},
        'conj': {'type': 'boolean'},
        'neg': {'type': 'boolean'},
    },
    'required': ['perm', 'phases'],
    'additionalProperties': False,
}

POLY_SCHEMA = {
    'type': 'array',
    'items': {'type': 'string', 'pattern': r'^-?[0-9]+$'},
    'minItems': 1,
}

Document = Union[Digraph, SignedGraph, HermMatrix, SwitchingWitness]


def _validate(data: Any, schema: Dict[str, Any], kind: str) -> None:
    try:
        jsonschema.validate(instance=data, schema=schema)
    except jsonschema.ValidationError as e:
        where = '/'.join(str(p) for p in e.path) or '(root)'
        raise FormatError(f"Invalid {kind} document: {e.message}\n  Path: {where}")


def digraph_to_dict(digraph: Digraph) -> Dict[str, Any]:
    return {
        'n': digraph.n,
        'digons': [list(pair) for pair in digraph.digons()],
        'arcs': [list(pair) for pair in digraph.arcs()],
    }


def digraph_from_dict(data: Any) -> Digraph:
    """
    Decode {"n", "digons", "arcs"}

    Raises:
        FormatError: On schema violations, loops, out-of-range vertices or
            pairs listed twice
    """
    _validate(data, DIGRAPH_SCHEMA, "digraph")
    return Digraph.from_edges(data['n'], data.get('digons', []), data.get('arcs', []))


def signed_to_dict(signed: SignedGraph) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        'n': signed.n,
        'pos': [list(pair) for pair in signed.positive_edges],
        'neg': [list(pair) for pair in signed.negative_edges],
    }
    if list(signed.labels) != [str(x) for x in range(signed.n)]:
        data['labels'] = list(signed.labels)
    return data


def signed_from_dict(data: Any) -> SignedGraph:
    _validate(data, SIGNED_SCHEMA, "signed graph")
    return SignedGraph.from_edges(data['n'], data['pos'], data['neg'], data.get('labels', ()))


def matrix_to_dict(H: HermMatrix) -> Dict[str, Any]:
    return {'matrix': [[str(value) for value in row] for row in H.rows()]}


def matrix_from_dict(data: Any) -> HermMatrix:
    """
    Decode {"matrix": [[...], ...]} with entries such as "0", "1", "-i", "1+i"

    Raises:
        FormatError: On unreadable entries
        ContractViolation: If the matrix is not square and Hermitian
    """
    _validate(data, MATRIX_SCHEMA, "matrix")
    return HermMatrix.from_rows(data['matrix'])


def witness_from_dict(data: Any) -> SwitchingWitness:
    _validate(data, WITNESS_SCHEMA, "witness")
    return SwitchingWitness.from_dict(data)


def poly_from_json(data: Any) -> IntPoly:
    _validate(data, POLY_SCHEMA, "polynomial")
    return IntPoly.from_json(data)


def document_kind(data: Any) -> str:
    """Which format a decoded document is: digraph, signed, matrix or witness"""
    if isinstance(data, dict):
        if 'matrix' in data:
            return 'matrix'
        if 'perm' in data:
            return 'witness'
        if 'pos' in data or 'neg' in data:
            return 'signed'
        if 'n' in data:
            return 'digraph'
    raise FormatError("Document is not a digraph, signed graph, matrix or witness")


def decode_document(data: Any) -> Document:
    kind = document_kind(data)
    decoders = {
        'digraph': digraph_from_dict,
        'signed': signed_from_dict,
        'matrix': matrix_from_dict,
        'witness': witness_from_dict,
    }
    return decoders[kind](data)


def read_data(path: Union[str, Path]) -> Any:
    """
    Read a JSON or YAML file (chosen by suffix; anything else is tried as JSON)

    Raises:
        FileNotFoundError: If the file does not exist
        FormatError: If the file does not parse
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"File not found: {path}")
    text = path.read_text()
    try:
        if path.suffix.lower() in ('.yaml', '.yml'):
            return yaml.safe_load(text)
        return json.loads(text)
    except (json.JSONDecodeError, yaml.YAMLError) as e:
        raise FormatError(f"Cannot parse {path}:\n{e}")


def load_document(path: Union[str, Path]) -> Document:
    """Read and decode a digraph, signed graph, matrix or witness file"""
    data = read_data(path)
    logger.debug(f"Loaded {document_kind(data)} document from {path}")
    return decode_document(data)


def encode_document(document: Document) -> Any:
    if isinstance(document, Digraph):
        return digraph_to_dict(document)
    if isinstance(document, SignedGraph):
        return signed_to_dict(document)
    if isinstance(document, HermMatrix):
        return matrix_to_dict(document)
    return document.to_dict()


def dump_json(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def digraph_to_dot(digraph: Digraph, name: str = "digraph") -> str:
    """
    DOT source: digons as undirected edges (dir=none), arcs as directed edges
    """
    lines = [f'digraph "{name}" {{', '  node [shape=circle];']
    lines.extend(f'  {v};' for v in range(digraph.n))
    lines.extend(f'  {u} -> {v} [dir=none];' for u, v in digraph.digons())
    lines.extend(f'  {u} -> {v};' for u, v in digraph.arcs())
    lines.append('}')
    return '\n'.join(lines) + '\n'


def signed_to_dot(signed: SignedGraph, name: str = "signed") -> str:
    """DOT source: positive edges solid, negative edges dashed"""
    lines = [f'graph "{name}" {{', '  node [shape=circle];']
    lines.extend(f'  {v} [label="{label}"];' for v, label in enumerate(signed.labels))
    for u, v, sign in signed.edges:
        style = 'solid' if sign > 0 else 'dashed'
        lines.append(f'  {u} -- {v} [style={style}];')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def to_dot(document: Union[Digraph, SignedGraph], name: str = "cyclo") -> str:
    if isinstance(document, SignedGraph):
        return signed_to_dot(document, name)
    if isinstance(document, Digraph):
        return digraph_to_dot(document, name)
    raise FormatError(f"DOT export needs a digraph or signed graph, got {type(document).__name__}")


def poly_to_json(p: IntPoly) -> List[str]:
    return p.to_json()
