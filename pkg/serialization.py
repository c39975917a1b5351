"""
JSON codec for problem files, transcripts and reports.

Rationals are written as ``"p/q"`` strings and Gaussian rationals as
``{"re": "p/q", "im": "r/s"}``, so exact data survives a round trip. A series is a list
of ``[exponent, coefficient]`` terms in graded order, a field or a jet element is a
list of series, one per component. Decoding errors are :class:`errors.SchemaError`
carrying the JSON path of the offending value.
"""

from fractions import Fraction
import hashlib
import itertools
import json
import logging
from typing import (
    Any,
    Dict,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from .errors import JetnormError, SchemaError, join_path
from .jetlie import ActionData, JetElement
from .liealg import LieAlgebra, algebra_registry, get_algebra
from .linalg import Matrix, Vector
from .normalform import NormalFormTranscript, TranscriptStep
from .rational import GaussianRational, format_fraction, to_fraction
from .ring import FormalVectorField, TruncSeries, monomial_key

_logger = logging.getLogger(__name__)

Json = Any
"""A value as returned by :func:`json.loads`."""

FIELD = 'field'
ACTION = 'action'


# Encoding ###


def encode_vector(vector: Sequence[Any]) -> List[str]:
    """
    Encode rationals.

    >>> encode_vector(['2/4', 3])
    ['1/2', '3']
    """
    return [format_fraction(to_fraction(x)) for x in vector]


def encode_matrix(matrix: Sequence[Sequence[Any]]) -> List[List[str]]:
    """Encode a matrix of rationals row by row."""
    return [encode_vector(row) for row in matrix]


def encode_series(series: TruncSeries) -> List[List[Json]]:
    """
    Encode the non-zero terms in graded order.

    >>> encode_series(TruncSeries(2, 2, {(0, 1): '-1/2', (2, 0): 3}))
    [[[0, 1], '-1/2'], [[2, 0], '3']]
    """
    return [
        [list(exponent), format_fraction(value)]
        for exponent, value in sorted(series.items(), key=lambda t: monomial_key(t[0]))
    ]


def encode_field(field: FormalVectorField) -> List[List[List[Json]]]:
    """Encode a vector field component by component."""
    return [encode_series(each) for each in field.components]


def encode_jet(xi: JetElement) -> List[List[List[Json]]]:
    """Encode a jet element component by component."""
    return [encode_series(each) for each in xi.components]


def encode_algebra(algebra: LieAlgebra) -> Json:
    """
    Registry name of a built-in `algebra`, its structure constants otherwise.
    """
    name = algebra.name
    if name is not None and name in algebra_registry and get_algebra(name) == algebra:
        return name

    return {
        'name': name,
        'structure': [encode_matrix(plane) for plane in algebra.structure],
        'tags': sorted(algebra.tags),
    }


def encode_action(action: ActionData) -> Dict[str, Json]:
    """Encode fields and twists together with both algebras."""
    return {
        'algebra': encode_algebra(action.algebra),
        'fiber': encode_algebra(action.fiber),
        'dim': action.dim,
        'order': action.order,
        'fields': [encode_field(field) for field in action.fields],
        'twists': [encode_jet(twist) for twist in action.twists],
    }


def _encode_target(target: Union[FormalVectorField, ActionData]) -> Dict[str, Json]:
    if isinstance(target, ActionData):
        return {ACTION: encode_action(target)}
    return {
        FIELD: {
            'dim': target.dim,
            'order': target.order,
            'components': encode_field(target),
        }
    }


def encode_transcript(transcript: NormalFormTranscript) -> Dict[str, Json]:
    """Encode a normalization transcript so that it can be replayed later."""
    return {
        'kind': transcript.kind,
        'method': transcript.method,
        'source': _encode_target(transcript.source),
        'steps': [
            {
                'degree': step.degree,
                'rank': step.rank,
                'dimension': step.dimension,
                'generator': encode_vector(step.generator),
            }
            for step in transcript.steps
        ],
        'result': _encode_target(transcript.result),
    }


def dumps(report: Mapping[str, Json]) -> str:
    """
    Serialize deterministically: sorted keys, two space indent, final newline.

    >>> dumps({'b': '1/2', 'a': 0})
    '{\\n  "a": 0,\\n  "b": "1/2"\\n}\\n'
    """
    return json.dumps(report, ensure_ascii=False, indent=2, sort_keys=True) + '\n'


def input_hash(text: str) -> str:
    """SHA-256 of a problem file, recorded in reports."""
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


# Decoding ###


def _expect(value: Json, kind: Union[type, Tuple[type, ...]], path: str) -> Json:
    if not isinstance(value, kind) or isinstance(value, bool):
        kinds = kind if isinstance(kind, tuple) else (kind,)
        expected = ' or '.join(each.__name__ for each in kinds)
        raise SchemaError(
            f"Expected {expected}, got {type(value).__name__}", path=path
        )
    return value


def _get(obj: Mapping[str, Json], key: str, kind: type, path: str) -> Json:
    if key not in obj:
        raise SchemaError(f"Missing field '{key}'", path=path)
    return _expect(obj[key], kind, join_path(path, [key]))


def decode_rational(value: Json, path: str = '$') -> Fraction:
    """
    Decode ``"p/q"`` or an integer. Floats are rejected.

    :raises SchemaError: Anything else.
    """
    try:
        return to_fraction(value)

    except ValueError as error:
        raise SchemaError(str(error), path=path) from error


def decode_vector(value: Json, path: str = '$') -> Vector:
    """Decode a list of rationals."""
    return [
        decode_rational(x, join_path(path, [i]))
        for i, x in enumerate(_expect(value, list, path))
    ]


def decode_matrix(
    value: Json, path: str = '$', ncols: Optional[int] = None
) -> Matrix:
    """
    Decode a list of rows of rationals.

    :param ncols: Required row length; that of the first row if omitted.
    """
    rows = [
        decode_vector(row, join_path(path, [i]))
        for i, row in enumerate(_expect(value, list, path))
    ]
    if rows:
        ncols = len(rows[0]) if ncols is None else ncols
    for i, row in enumerate(rows):
        if len(row) != ncols:
            raise SchemaError(
                f"Row has {len(row)} entries, expected {ncols}",
                path=join_path(path, [i]),
            )
    return rows


def decode_series(value: Json, dim: int, order: int, path: str = '$') -> TruncSeries:
    """Decode the output of :func:`encode_series`."""
    table = {}
    for i, term in enumerate(_expect(value, list, path)):
        term_path = join_path(path, [i])
        if not isinstance(term, list) or len(term) != 2:
            raise SchemaError("Expected [exponent, coefficient]", path=term_path)
        exponent = tuple(
            _expect(e, int, join_path(term_path, [0, k]))
            for k, e in enumerate(_expect(term[0], list, join_path(term_path, [0])))
        )
        if len(exponent) != dim or any(e < 0 for e in exponent):
            raise SchemaError(
                f"Exponent {list(exponent)} is not in ℕ^{dim}",
                path=join_path(term_path, [0]),
            )
        if exponent in table:
            raise SchemaError(f"Repeated exponent {list(exponent)}", path=term_path)
        table[exponent] = decode_rational(term[1], join_path(term_path, [1]))
    # endfor

    return TruncSeries(dim, order, table)


def decode_field(
    value: Json, dim: int, order: int, path: str = '$'
) -> FormalVectorField:
    """
    Decode the output of :func:`encode_field`.

    :raises SchemaError: Wrong number of components, or the field does not vanish at
      the origin.
    """
    components = _expect(value, list, path)
    if len(components) != dim:
        raise SchemaError(f"{len(components)} components, expected {dim}", path=path)

    try:
        return FormalVectorField(
            [
                decode_series(each, dim, order, join_path(path, [mu]))
                for mu, each in enumerate(components)
            ]
        )

    except JetnormError as error:
        if isinstance(error, SchemaError):
            raise
        raise SchemaError(str(error), path=path) from error


def decode_jet(
    value: Json, algebra: LieAlgebra, dim: int, order: int, path: str = '$'
) -> JetElement:
    """Decode the output of :func:`encode_jet`."""
    components = _expect(value, list, path)
    if len(components) != algebra.dim:
        raise SchemaError(
            f"{len(components)} components for the {algebra.dim}-dim algebra "
            f"{algebra}",
            path=path,
        )
    return JetElement(
        algebra,
        [
            decode_series(each, dim, order, join_path(path, [a]))
            for a, each in enumerate(components)
        ],
    )


def decode_algebra(value: Json, path: str = '$') -> LieAlgebra:
    """
    Decode a registry name or ``{"structure": ..., "name": ..., "tags": ...}``.

    :raises SchemaError: Unknown name, or structure constants that are not
      antisymmetric or violate the Jacobi identity.
    """
    if isinstance(value, str):
        if value not in algebra_registry:
            raise SchemaError(
                f"Unknown algebra '{value}'; known: "
                f"{', '.join(algebra_registry.names())}",
                path=path,
            )
        return get_algebra(value)

    obj = _expect(value, dict, path)
    planes = _get(obj, 'structure', list, path)
    structure_path = join_path(path, ['structure'])
    dim = len(planes)
    structure = [
        decode_matrix(plane, join_path(structure_path, [i]), dim)
        for i, plane in enumerate(planes)
    ]
    for i, plane in enumerate(structure):
        if len(plane) != dim:
            raise SchemaError(
                f"Plane has {len(plane)} rows, expected {dim}",
                path=join_path(structure_path, [i]),
            )
    for i, j, k in itertools.product(range(dim), repeat=3):
        if structure[i][j][k] != -structure[j][i][k]:
            raise SchemaError(
                "Structure constants are not antisymmetric",
                path=join_path(structure_path, [i, j, k]),
            )

    name = obj.get('name')
    tags = [
        _expect(tag, str, join_path(path, ['tags', i]))
        for i, tag in enumerate(_expect(obj.get('tags', []), list, path))
    ]
    algebra = LieAlgebra(
        structure, name=None if name is None else _expect(name, str, path), tags=tags
    )
    if not algebra.verify_jacobi():
        raise SchemaError("Structure constants violate the Jacobi identity", path=path)
    return algebra


def decode_action(
    obj: Mapping[str, Json],
    path: str = '$',
    *,
    dim: Optional[int] = None,
    order: Optional[int] = None,
) -> ActionData:
    """
    Decode an action.

    Either ``fields`` and ``twists`` (as written by :func:`encode_action`) or
    ``linear`` matrices with optional constant twists ``sigma0`` are accepted.
    ``twists`` default to zero.

    :param dim: Dimension of ``V`` if the object does not say.
    :param order: Truncation order if the object does not say.
    """
    algebra = decode_algebra(obj.get('algebra'), join_path(path, ['algebra']))
    fiber = decode_algebra(obj.get('fiber'), join_path(path, ['fiber']))
    order = obj.get('order', order)
    if order is None:
        raise SchemaError("Missing field 'order'", path=path)
    order = _expect(order, int, join_path(path, ['order']))

    if 'linear' in obj:
        matrices_path = join_path(path, ['linear'])
        matrices = [
            decode_matrix(matrix, join_path(matrices_path, [i]))
            for i, matrix in enumerate(_get(obj, 'linear', list, path))
        ]
        _check_count(matrices, algebra, matrices_path)
        size = len(matrices[0])
        for i, matrix in enumerate(matrices):
            if len(matrix) != size or any(len(row) != size for row in matrix):
                raise SchemaError(
                    f"Expected a {size}×{size} matrix",
                    path=join_path(matrices_path, [i]),
                )
        sigma0 = None
        if 'sigma0' in obj:
            sigma0_path = join_path(path, ['sigma0'])
            sigma0 = decode_matrix(obj['sigma0'], sigma0_path, fiber.dim)
            _check_count(sigma0, algebra, sigma0_path)
        return ActionData.linear(algebra, fiber, matrices, order, sigma0)

    dim = obj.get('dim', dim)
    if dim is None:
        raise SchemaError("Missing field 'dim'", path=path)
    dim = _expect(dim, int, join_path(path, ['dim']))
    fields_path = join_path(path, ['fields'])
    fields = [
        decode_field(each, dim, order, join_path(fields_path, [i]))
        for i, each in enumerate(_get(obj, 'fields', list, path))
    ]
    _check_count(fields, algebra, fields_path)
    if 'twists' in obj:
        twists_path = join_path(path, ['twists'])
        twists = [
            decode_jet(each, fiber, dim, order, join_path(twists_path, [i]))
            for i, each in enumerate(_get(obj, 'twists', list, path))
        ]
        _check_count(twists, algebra, twists_path)
    else:
        twists = [JetElement.zero(fiber, dim, order)] * algebra.dim
    return ActionData(algebra, fiber, fields, twists)


def _check_count(items: Sequence[object], algebra: LieAlgebra, path: str) -> None:
    if len(items) != algebra.dim:
        raise SchemaError(
            f"{len(items)} entries for the {algebra.dim}-dim algebra {algebra}",
            path=path,
        )


def _decode_target(
    obj: Mapping[str, Json], path: str
) -> Union[FormalVectorField, ActionData]:
    if ACTION in obj:
        return decode_action(
            _expect(obj[ACTION], dict, join_path(path, [ACTION])),
            join_path(path, [ACTION]),
        )
    field = _get(obj, FIELD, dict, path)
    field_path = join_path(path, [FIELD])
    return decode_field(
        _get(field, 'components', list, field_path),
        _get(field, 'dim', int, field_path),
        _get(field, 'order', int, field_path),
        join_path(field_path, ['components']),
    )


def decode_transcript(
    obj: Mapping[str, Json], path: str = '$'
) -> NormalFormTranscript:
    """Decode the output of :func:`encode_transcript`."""
    steps = []
    steps_path = join_path(path, ['steps'])
    for i, step in enumerate(_get(obj, 'steps', list, path)):
        step_path = join_path(steps_path, [i])
        step = _expect(step, dict, step_path)
        steps.append(
            TranscriptStep(
                _get(step, 'degree', int, step_path),
                _get(step, 'rank', int, step_path),
                _get(step, 'dimension', int, step_path),
                tuple(
                    decode_vector(
                        _get(step, 'generator', list, step_path),
                        join_path(step_path, ['generator']),
                    )
                ),
            )
        )
    # endfor

    return NormalFormTranscript(
        _get(obj, 'kind', str, path),
        _get(obj, 'method', str, path),
        _decode_target(_get(obj, 'source', dict, path), join_path(path, ['source'])),
        tuple(steps),
        _decode_target(_get(obj, 'result', dict, path), join_path(path, ['result'])),
    )


def decode_number(value: Json, path: str = '$') -> complex:
    """
    Decode a floating point entry: a number, ``"p/q"`` or ``{"re": ..., "im": ...}``.

    Only the floating point checks accept these.
    """
    if isinstance(value, dict):
        try:
            return GaussianRational.from_json(value).to_complex()

        except (KeyError, ValueError) as error:
            message = f"Not a Gaussian rational: {value!r}"
            raise SchemaError(message, path=path) from error

    if isinstance(value, str):
        return complex(float(decode_rational(value, path)))

    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(value)

    raise SchemaError(f"Not a number: {value!r}", path=path)


# Problem files ###


class GPEParameters(NamedTuple):
    """
    Inputs of the floating point checks.

    :param hamiltonian: Hermitian matrix of the Gibbs state.
    :param beta: Inverse temperature.
    :param levels: Levels of the truncated oscillator for the CS-qpe check.
    :param fock_degree: Truncation of the Fock space for metaplectic positivity.
    :param samples: Sampled states per check; the run options may override it.
    """

    hamiltonian: List[List[complex]]
    beta: float
    levels: int = 12
    fock_degree: int = 3
    samples: Optional[int] = None


class ProblemSpec(NamedTuple):
    """
    Parsed problem file.

    Only the entries used by the requested pipeline need to be present.
    """

    order: Optional[int] = None
    field: Optional[FormalVectorField] = None
    action: Optional[ActionData] = None
    cone: Optional[Matrix] = None
    points: Optional[Matrix] = None
    bound: Optional[int] = None
    simple_noncompact: bool = False
    irreducible: bool = False
    degrees: Optional[List[int]] = None
    gpe: Optional[GPEParameters] = None
    transcript: Optional[NormalFormTranscript] = None
    mode: Optional[str] = None
    tolerance: Optional[float] = None
    seed: Optional[int] = None
    digest: str = ''


def parse_json(text: str) -> Json:
    """
    :raises SchemaError: `text` is not JSON; line and column are attached.
    """
    try:
        return json.loads(text)

    except json.JSONDecodeError as error:
        raise SchemaError(error.msg, line=error.lineno, column=error.colno) from error


def _decode_gpe(obj: Mapping[str, Json], path: str) -> GPEParameters:
    hamiltonian_path = join_path(path, ['hamiltonian'])
    hamiltonian = [
        [
            decode_number(x, join_path(hamiltonian_path, [i, j]))
            for j, x in enumerate(_expect(row, list, join_path(hamiltonian_path, [i])))
        ]
        for i, row in enumerate(_get(obj, 'hamiltonian', list, path))
    ]
    size = len(hamiltonian)
    if size == 0 or any(len(row) != size for row in hamiltonian):
        raise SchemaError("Hamiltonian must be a non-empty square matrix", path=path)

    beta = decode_number(obj.get('beta', 1), join_path(path, ['beta']))
    if beta.imag != 0 or beta.real <= 0:
        raise SchemaError(
            f"beta must be positive: {beta}", path=join_path(path, ['beta'])
        )
    samples = obj.get('samples')
    if samples is not None:
        samples = _expect(samples, int, join_path(path, ['samples']))
    return GPEParameters(
        hamiltonian,
        beta.real,
        _expect(obj.get('levels', 12), int, join_path(path, ['levels'])),
        _expect(obj.get('fock_degree', 3), int, join_path(path, ['fock_degree'])),
        samples,
    )


def load_problem(text: str, order: Optional[int] = None) -> ProblemSpec:
    """
    Parse a problem file.

    A report containing a ``transcript`` is also a valid problem, for replay.

    :param order: Truncation order overriding that of the file; terms of higher degree
      are dropped.

    :raises SchemaError: With the path of the first offending value.
    """
    obj = _expect(parse_json(text), dict, '$')
    order = obj.get('order') if order is None else order
    if order is not None:
        order = _expect(order, int, '$.order')
        if order < 0:
            raise SchemaError(f"Negative order {order}", path='$.order')

    field = None
    if 'field' in obj:
        components = _get(obj, 'field', list, '$')
        dim = _get(obj, 'dim', int, '$')
        if order is None:
            raise SchemaError("Missing field 'order'", path='$')
        field = decode_field(components, dim, order, '$.field')

    action = None
    if 'action' in obj:
        action_obj = dict(_get(obj, 'action', dict, '$'))
        if order is not None:
            action_obj['order'] = order
        action = decode_action(action_obj, '$.action', dim=obj.get('dim'))
        order = action.order if order is None else order

    cone = None
    if 'cone' in obj:
        cone = decode_matrix(_get(obj, 'cone', list, '$'), '$.cone')
    points = None
    if 'points' in obj:
        points = decode_matrix(_get(obj, 'points', list, '$'), '$.points')
    degrees = None
    if 'degrees' in obj:
        degrees = [
            _expect(d, int, f'$.degrees[{i}]')
            for i, d in enumerate(_get(obj, 'degrees', list, '$'))
        ]
    gpe = None
    if 'gpe' in obj:
        gpe = _decode_gpe(_get(obj, 'gpe', dict, '$'), '$.gpe')
    transcript = None
    if 'transcript' in obj:
        transcript = decode_transcript(
            _get(obj, 'transcript', dict, '$'), '$.transcript'
        )

    mode = obj.get('mode')
    if mode is not None and mode not in ('exact', 'numeric'):
        raise SchemaError(f"Unknown mode {mode!r}", path='$.mode')
    tolerance = obj.get('tolerance')
    if tolerance is not None:
        tolerance = float(_expect(tolerance, (int, float), '$.tolerance'))
    seed = obj.get('seed')
    bound = obj.get('bound')

    _logger.debug(f"Problem with keys {sorted(obj)}")
    return ProblemSpec(
        order=order,
        field=field,
        action=action,
        cone=cone,
        points=points,
        bound=None if bound is None else _expect(bound, int, '$.bound'),
        simple_noncompact=bool(obj.get('simple_noncompact', False)),
        irreducible=bool(obj.get('irreducible', False)),
        degrees=degrees,
        gpe=gpe,
        transcript=transcript,
        mode=mode,
        tolerance=tolerance,
        seed=None if seed is None else _expect(seed, int, '$.seed'),
        digest=input_hash(text),
    )
