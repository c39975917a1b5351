"""
Command line front end.

``python -m jetnorm <subcommand> problem.json [--out report.json]`` parses a problem
file, runs one pipeline and writes a summary to stdout and, optionally, the JSON report
to a file. The exit code is :data:`EXIT_OK` for a conclusive run,
:data:`EXIT_INCONCLUSIVE` for a failed hypothesis, an undecided verdict or no
conclusion, and :data:`EXIT_ERROR` for anything else.
"""

import argparse
import logging
import os
import sys
import time
from typing import (
    Any,
    Callable,
    Dict,
    List,
    NamedTuple,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
)

import numpy as np

from . import __version__
from .cocycle import (
    admissible_lambda_basis,
    central_extension_dimension,
    gram,
    kernel_is_subalgebra,
    quadratic_kernel,
)
from .cohomology import CEComplex
from .decorators import log_calls_on_exception
from .errors import (
    IndefiniteFormError,
    JetnormError,
    NotSemisimpleError,
    PreconditionError,
    ResonanceError,
    SchemaError,
    SymmetryError,
)
from .factorize import (
    ConeSpec,
    FactorizationVerdict,
    check_pe_factorization,
    semisimple_pipeline,
    spectral_factorization,
)
from .factory import FunctionRegistryFactory
from .gpe import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    GibbsData,
    cs_qpe_matrices,
    gibbs_modular_check,
    kms_entropy_bound,
    metaplectic_positivity,
    oscillator_fixture,
)
from .liealg import DEFAULT_TOLERANCE
from .normalform import (
    certify_transcript,
    is_resonance_free,
    mc_residual,
    normalize_twist_semisimple,
    poincare_dulac,
    replay_transcript,
    twisted_module,
    verify_transcript,
)
from .serialization import (
    GPEParameters,
    Json,
    ProblemSpec,
    dumps,
    encode_action,
    encode_field,
    encode_jet,
    encode_matrix,
    encode_series,
    encode_transcript,
    encode_vector,
    load_problem,
)

_logger = logging.getLogger(__name__)

_T = TypeVar('_T')

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2

OK = 'ok'
INCONCLUSIVE = 'inconclusive'
UNDECIDED = 'undecided'
HYPOTHESIS_FAILED = 'hypothesis_failed'

MAX_DEGREE_VARIABLE = 'JETNORM_MAX_DEGREE'
"""Environment variable capping the truncation order of problems."""


class RunOptions(NamedTuple):
    """Run configuration: command line flags merged over the problem file."""

    order: Optional[int] = None
    mode: str = 'numeric'
    tolerance: float = DEFAULT_TOLERANCE
    seed: int = DEFAULT_SEED
    samples: Optional[int] = None
    beta: Optional[float] = None
    dim: Optional[int] = None
    out: Optional[str] = None
    quiet: bool = False
    verbose: bool = False
    timing: bool = False

    def to_json(self) -> Dict[str, Json]:
        """The options that influence results."""
        return {
            'order': self.order,
            'mode': self.mode,
            'tolerance': self.tolerance,
            'seed': self.seed,
        }


class PipelineResult(NamedTuple):
    """
    Outcome of a pipeline.

    :param status: :data:`OK`, :data:`INCONCLUSIVE`, :data:`UNDECIDED` or
      :data:`HYPOTHESIS_FAILED`.
    :param report: Pipeline specific part of the JSON report.
    :param summary: Lines for the human readable output.
    """

    status: str
    report: Dict[str, Json]
    summary: List[str]

    @property
    def exit_code(self) -> int:
        """:data:`EXIT_OK` for :data:`OK`, :data:`EXIT_INCONCLUSIVE` otherwise."""
        return EXIT_OK if self.status == OK else EXIT_INCONCLUSIVE


Pipeline = Callable[[ProblemSpec, RunOptions], PipelineResult]

pipeline_registry = FunctionRegistryFactory[Pipeline]('pipeline')
"""Pipelines by subcommand name."""


def _require(value: Optional[_T], key: str) -> _T:
    if value is None:
        raise SchemaError(f"Missing field '{key}' required by this subcommand")
    return value


def _hypothesis_failed(error: JetnormError) -> PipelineResult:
    _logger.warning(f"Hypothesis fails: {error}")
    return PipelineResult(
        HYPOTHESIS_FAILED,
        {'hypothesis': type(error).__name__, 'message': str(error)},
        [f"Hypothesis fails: {error}"],
    )


def _ok(conclusive: bool) -> str:
    return OK if conclusive else INCONCLUSIVE


# Pipelines ###


@pipeline_registry.register('normalize-vectorfield')
def _normalize_vectorfield(spec: ProblemSpec, options: RunOptions) -> PipelineResult:
    field = _require(spec.field, 'field')
    normal = poincare_dulac(field)
    resonance = is_resonance_free(normal.result.linear_part(), normal.result.order)
    return PipelineResult(
        OK,
        {
            'normal_form': encode_field(normal.result),
            'diffeo': [encode_series(each) for each in normal.diffeo.components],
            'resonance': {
                'free': resonance.free,
                'first_resonant_degree': resonance.first_resonant_degree,
                'ranks': [list(each) for each in resonance.ranks],
            },
            'transcript': encode_transcript(normal.transcript),
        },
        [
            f"Normal form: {normal.result}",
            f"Resonance free: {resonance.free}",
        ],
    )


@pipeline_registry.register('normalize-twist')
def _normalize_twist(spec: ProblemSpec, options: RunOptions) -> PipelineResult:
    action = _require(spec.action, 'action')
    try:
        normal = normalize_twist_semisimple(action)

    except (PreconditionError, NotSemisimpleError, ResonanceError) as error:
        return _hypothesis_failed(error)

    sigma0 = encode_matrix(normal.action.sigma0)
    return PipelineResult(
        OK,
        {
            'sigma0': sigma0,
            'normal_form': encode_action(normal.action),
            'gauge': encode_jet(normal.gauge.xi),
            'transcript': encode_transcript(normal.transcript),
        },
        [f"σ0 = {sigma0}", f"Gauge steps: {len(normal.transcript.steps)}"],
    )


@pipeline_registry.register('mc-check')
def _mc_check(spec: ProblemSpec, options: RunOptions) -> PipelineResult:
    action = _require(spec.action, 'action')
    residual = mc_residual(action)
    zero = residual.is_zero()
    return PipelineResult(
        _ok(zero),
        {
            'zero': zero,
            'lowest_degree': residual.lowest_degree(),
            'residual': [encode_jet(value) for value in residual.values],
        },
        [f"Maurer-Cartan residual {'vanishes' if zero else 'does not vanish'}"],
    )


@pipeline_registry.register('cohomology')
def _cohomology(spec: ProblemSpec, options: RunOptions) -> PipelineResult:
    action = _require(spec.action, 'action')
    degrees = spec.degrees if spec.degrees is not None else range(action.order + 1)
    modules = []
    for degree in degrees:
        module = twisted_module(action, degree)
        complex_ = CEComplex(module)
        modules.append(
            {
                'degree': degree,
                'module': str(module),
                'dimension': module.dim,
                'betti_numbers': complex_.betti_numbers(),
                'differential_squares_to_zero': complex_.verify(),
            }
        )
    # endfor

    verified = all(each['differential_squares_to_zero'] for each in modules)
    return PipelineResult(
        _ok(verified),
        {'modules': modules},
        [f"P^{each['degree']}: H = {each['betti_numbers']}" for each in modules],
    )


@pipeline_registry.register('cocycle')
def _cocycle(spec: ProblemSpec, options: RunOptions) -> PipelineResult:
    action = _require(spec.action, 'action')
    fields = action.fields
    dim, order = action.dim, action.order
    functionals = []
    for lam in admissible_lambda_basis(fields, order):
        data = gram(lam, fields[0])
        entry: Dict[str, Json] = {
            'coefficients': encode_vector(lam.coefficients),
            'closed': lam.is_closed(),
            'symmetric': data.asymmetry_witness() is None,
            'positive_semidefinite': data.is_positive_semidefinite(),
        }
        try:
            kernel = quadratic_kernel(lam, fields[0])
            entry['kernel'] = [encode_series(each) for each in kernel]
            entry['subalgebra'] = kernel_is_subalgebra(kernel)

        except (SymmetryError, IndefiniteFormError) as error:
            entry['kernel'] = None
            entry['subalgebra'] = None
            entry['kernel_error'] = str(error)
        functionals.append(entry)
    # endfor

    return PipelineResult(
        _ok(bool(functionals)),
        {
            'central_extension_dimension': central_extension_dimension(dim, order),
            'functionals': functionals,
        },
        [f"Admissible functionals: {len(functionals)}"],
    )


def _verdict_status(verdict: FactorizationVerdict) -> str:
    if verdict.conclusive:
        return OK
    return UNDECIDED if verdict.undecided else INCONCLUSIVE


@pipeline_registry.register('factorize')
def _factorize(spec: ProblemSpec, options: RunOptions) -> PipelineResult:
    action = _require(spec.action, 'action')
    if spec.cone is not None:
        verdict = semisimple_pipeline(
            action,
            ConeSpec.of(spec.cone),
            simple_noncompact=spec.simple_noncompact,
            irreducible=spec.irreducible,
        )
        details: List[FactorizationVerdict] = []
    else:
        points = _require(spec.points, 'points')
        verdict = spectral_factorization(
            action,
            points,
            spec.bound,
            options.tolerance,
        )
        details = [
            check_pe_factorization(
                action,
                point,
                options.mode,
                options.tolerance,
            )
            for point in points
        ]

    status = _verdict_status(verdict)
    return PipelineResult(
        status,
        {
            'verdict': verdict.to_json(),
            'pointwise': [each.to_json() for each in details],
        },
        [f"{verdict.theorem}: {verdict.conclusion} ({status})"]
        + [f"  {h.name}: {h.status.value}" for h in verdict.hypotheses],
    )


def _default_gpe(options: RunOptions) -> GPEParameters:
    dim = options.dim if options.dim is not None else 2
    # Equally spaced levels 0, 1, ..., dim − 1.
    hamiltonian = np.diag(np.arange(dim, dtype=complex)).tolist()
    return GPEParameters(hamiltonian, 1.0)


@pipeline_registry.register('gpe')
def _gpe(spec: ProblemSpec, options: RunOptions) -> PipelineResult:
    parameters = spec.gpe if spec.gpe is not None else _default_gpe(options)
    if options.beta is not None:
        parameters = parameters._replace(beta=options.beta)
    samples = options.samples or parameters.samples or DEFAULT_SAMPLES
    seed = options.seed

    oscillator = oscillator_fixture(parameters.levels)
    cs_qpe = cs_qpe_matrices(
        oscillator.x, oscillator.y, samples, seed, support=oscillator.support
    )
    control = cs_qpe_matrices(
        np.diag([1.0, 0.0]).astype(complex),
        np.array([[0, 1], [0, 0]], dtype=complex),
        samples,
        seed,
    )
    gibbs = GibbsData(np.array(parameters.hamiltonian), parameters.beta)
    modular = gibbs_modular_check(gibbs, seed=seed)
    kms = kms_entropy_bound(gibbs, samples, seed)
    metaplectic = metaplectic_positivity(parameters.fock_degree, seed=seed)

    checks: List[Tuple[str, bool]] = [
        ('cs_qpe', cs_qpe.holds),
        ('negative_control_fails', not control.holds),
        ('gibbs_modular', modular.holds),
        ('kms_entropy', kms.holds),
        ('metaplectic', metaplectic.holds),
    ]
    return PipelineResult(
        _ok(all(holds for _, holds in checks)),
        {
            'beta': parameters.beta,
            'samples': samples,
            'cs_qpe': cs_qpe.to_json(),
            'negative_control': control.to_json(),
            'gibbs_modular': modular.to_json(),
            'kms_entropy': kms.to_json(),
            'metaplectic': metaplectic.to_json(),
        },
        [f"{name}: {'holds' if holds else 'FAILS'}" for name, holds in checks],
    )


@pipeline_registry.register('replay')
def _replay(spec: ProblemSpec, options: RunOptions) -> PipelineResult:
    transcript = _require(spec.transcript, 'transcript')
    reproduced = replay_transcript(transcript) == transcript.result
    certificates = certify_transcript(transcript)
    verified = verify_transcript(transcript)
    unsettled = [each.degree for each in certificates if not each.settled]
    return PipelineResult(
        _ok(verified),
        {
            'kind': transcript.kind,
            'method': transcript.method,
            'steps': len(transcript.steps),
            'reproduced': reproduced,
            'verified': verified,
            'degrees': [each._asdict() for each in certificates],
        },
        [
            f"Replay {'reproduces' if reproduced else 'DOES NOT reproduce'} the result",
            f"Degrees not settled by their step: {unsettled}"
            if unsettled
            else "Every step settles its degree",
        ],
    )


# Driver ###


def max_degree() -> Optional[int]:
    """
    The cap set by :data:`MAX_DEGREE_VARIABLE`, `None` if unset.

    :raises SchemaError: The variable is not a non-negative integer.
    """
    value = os.environ.get(MAX_DEGREE_VARIABLE, '').strip()
    if not value:
        return None
    if not value.isdigit():
        raise SchemaError(
            f"{MAX_DEGREE_VARIABLE} must be a non-negative integer: {value!r}"
        )
    return int(value)


def _check_order(spec: ProblemSpec) -> None:
    cap = max_degree()
    if cap is not None and spec.order is not None and spec.order > cap:
        raise SchemaError(
            f"Order {spec.order} exceeds {MAX_DEGREE_VARIABLE}={cap}", path='$.order'
        )


def merge_options(flags: Mapping[str, Any], spec: ProblemSpec) -> RunOptions:
    """
    Merge flags over the problem file; flags that are `None` were not given.

    >>> merge_options({'seed': 3, 'problem': 'p.json'}, ProblemSpec(seed=1, order=2))
    RunOptions(order=2, mode='numeric', tolerance=1e-09, seed=3, samples=None, \
beta=None, dim=None, out=None, quiet=False, verbose=False, timing=False)
    """
    values = {
        'order': spec.order,
        'mode': spec.mode,
        'tolerance': spec.tolerance,
        'seed': spec.seed,
    }
    values.update(flags)
    return RunOptions(
        **{
            key: value
            for key, value in values.items()
            if key in RunOptions._fields and value is not None
        }
    )


@log_calls_on_exception(_logger)
def run(
    subcommand: str, text: str, flags: Optional[Mapping[str, Any]] = None
) -> Tuple[PipelineResult, Dict[str, Json]]:
    """
    Run one pipeline on a problem file.

    :param text: Contents of the problem file; ``'{}'`` for pipelines that need none.
    :param flags: Command line flags, `None` values meaning not given.

    :returns: The result and the complete JSON report.

    :raises SchemaError: The problem file is malformed or exceeds the order cap.
    :raises KeyError: Unknown subcommand.
    """
    flags = flags or {}
    pipeline = pipeline_registry.create(subcommand)
    spec = load_problem(text, flags.get('order'))
    _check_order(spec)
    options = merge_options(flags, spec)

    start = time.perf_counter()
    result = pipeline(spec, options)
    elapsed = time.perf_counter() - start

    report: Dict[str, Json] = {
        'pipeline': subcommand,
        'status': result.status,
        'exit_code': result.exit_code,
        'version': __version__,
        'input_hash': spec.digest,
        'options': options.to_json(),
        **result.report,
    }
    if options.timing:
        report['timing'] = {'seconds': elapsed}
    return result, report


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='jetnorm',
        description="Normal forms and factorization checks for jet Lie algebras.",
    )
    parser.add_argument('subcommand', choices=sorted(pipeline_registry.names()))
    parser.add_argument(
        'problem', nargs='?', help="Problem file (JSON); optional for 'gpe'."
    )
    parser.add_argument('--order', type=int, help="Truncation order N.")
    parser.add_argument('--mode', choices=('exact', 'numeric'))
    parser.add_argument('--tolerance', type=float)
    parser.add_argument('--seed', type=int)
    parser.add_argument('--samples', type=int, help="States per sampled check.")
    parser.add_argument('--beta', type=float, help="Inverse temperature for 'gpe'.")
    parser.add_argument('--dim', type=int, help="Hilbert space dimension for 'gpe'.")
    parser.add_argument('--out', help="Write the JSON report to this file.")
    parser.add_argument('--timing', action='store_true', help="Record wall time.")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('--quiet', action='store_true')
    verbosity.add_argument('--verbose', action='store_true')
    return parser


def _configure_logging(*, quiet: bool, verbose: bool) -> None:
    level = logging.WARNING
    if verbose:
        level = logging.INFO
    elif quiet:
        level = logging.ERROR
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of ``python -m jetnorm``; returns the exit code."""
    args = _parser().parse_args(argv)
    _configure_logging(quiet=args.quiet, verbose=args.verbose)

    try:
        if args.problem is None:
            if args.subcommand != 'gpe':
                raise SchemaError(f"'{args.subcommand}' needs a problem file")
            text = '{}'
        else:
            with open(args.problem, encoding='utf-8') as read_file:
                text = read_file.read()

        result, report = run(args.subcommand, text, vars(args))

    except (JetnormError, OSError) as error:
        print(f"jetnorm: error: {error}", file=sys.stderr)
        return EXIT_ERROR

    except Exception as error:  # noqa: BLE001
        print(f"jetnorm: internal error: {error!r}", file=sys.stderr)
        return EXIT_ERROR

    if not args.quiet:
        print(f"{args.subcommand}: {result.status}")
        for line in result.summary:
            print(line)

    if args.out is not None:
        try:
            with open(args.out, 'w', encoding='utf-8') as write_file:
                write_file.write(dumps(report))

        except OSError as error:
            print(f"jetnorm: error: {error}", file=sys.stderr)
            return EXIT_ERROR

    return result.exit_code
