"""Tests for `cli` module."""

import json
from pathlib import Path
from typing import Any, Dict

import pytest

from .cli import (
    EXIT_ERROR,
    EXIT_INCONCLUSIVE,
    EXIT_OK,
    HYPOTHESIS_FAILED,
    MAX_DEGREE_VARIABLE,
    OK,
    UNDECIDED,
    RunOptions,
    main,
    max_degree,
    merge_options,
    pipeline_registry,
    run,
)
from .errors import SchemaError
from .serialization import ProblemSpec, dumps
from .testregression import assert_no_change

_SL2R_LINEAR = [
    [['1', '0'], ['0', '-1']],
    [['0', '1'], ['0', '0']],
    [['0', '0'], ['1', '0']],
]

_LINE_PROBLEM = (
    '{"order": 1, "action": {"algebra": "R", "fiber": "su2", "linear": [[["1"]]]}}'
)


def _problem(**entries: Any) -> str:  # noqa: ANN401
    return json.dumps(entries)


def _sl2r_problem(**entries: Any) -> str:  # noqa: ANN401
    action = {'algebra': 'sl2R', 'fiber': 'su2', 'linear': _SL2R_LINEAR}
    return _problem(order=2, action=action, **entries)


def _full_cone() -> Any:  # noqa: ANN401
    identity = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    return identity + [[-x for x in row] for row in identity]


# Options ###


def test__pipeline_registry__names() -> None:
    assert set(pipeline_registry.names()) == {
        'normalize-vectorfield',
        'normalize-twist',
        'mc-check',
        'cohomology',
        'cocycle',
        'factorize',
        'gpe',
        'replay',
    }


def test__merge_options__file_values() -> None:
    spec = ProblemSpec(order=3, mode='exact', tolerance=1e-6, seed=4)

    assert merge_options({}, spec) == RunOptions(
        order=3, mode='exact', tolerance=1e-6, seed=4
    )


def test__merge_options__flags_override() -> None:
    spec = ProblemSpec(order=3, mode='exact', seed=4)
    flags: Dict[str, Any] = {'mode': 'numeric', 'seed': None, 'samples': 10}

    options = merge_options(flags, spec)

    assert options.mode == 'numeric'
    assert options.seed == 4
    assert options.samples == 10
    assert options.order == 3


@pytest.mark.parametrize(
    'value, expected',
    (
        ('', None),
        ('4', 4),
        (' 0 ', 0),
    ),
)
def test__max_degree(
    monkeypatch: pytest.MonkeyPatch, value: str, expected: Any  # noqa: ANN401
) -> None:
    monkeypatch.setenv(MAX_DEGREE_VARIABLE, value)
    assert max_degree() == expected


def test__max_degree__invalid(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(MAX_DEGREE_VARIABLE, '-1')
    with pytest.raises(SchemaError, match=MAX_DEGREE_VARIABLE):
        max_degree()


# Pipelines ###


def test__run__mc_check_report() -> None:
    result, report = run('mc-check', _LINE_PROBLEM)

    assert result.status == OK
    assert_no_change(report, save=False)


def test__run__mc_check_nonzero() -> None:
    text = _problem(
        order=1,
        action={
            'algebra': 'su2',
            'fiber': 'su2',
            'linear': [[['0']]] * 3,
            'sigma0': [['1', '0', '0'], ['0', '0', '0'], ['0', '0', '0']],
        },
    )

    result, report = run('mc-check', text)

    assert result.exit_code == EXIT_INCONCLUSIVE
    assert report['zero'] is False
    assert report['lowest_degree'] == 0


def test__run__cocycle_rotation() -> None:
    text = _problem(
        order=1,
        action={'algebra': 'R', 'fiber': 'su2', 'linear': [[['0', '1'], ['-1', '0']]]},
    )

    result, report = run('cocycle', text)

    assert result.status == OK
    (entry,) = report['functionals']
    assert entry['positive_semidefinite'] is True
    assert entry['subalgebra'] is True
    assert len(entry['kernel']) == 1


def test__run__normalize_twist_then_replay() -> None:
    result, report = run('normalize-twist', _sl2r_problem())

    assert result.status == OK
    assert report['sigma0'] == [['0', '0', '0']] * 3

    replayed, replay_report = run('replay', dumps(report))

    assert replayed.exit_code == EXIT_OK
    assert replay_report['reproduced'] is True
    assert replay_report['kind'] == 'twist'
    assert replay_report['verified'] is True
    assert all(each['settled'] for each in replay_report['degrees'])
    assert [each['degree'] for each in replay_report['degrees']] == [1, 2]


def test__run__normalize_twist_abelian() -> None:
    text = _problem(
        order=2,
        action={
            'algebra': 'R2',
            'fiber': 'su2',
            'linear': [[['1', '0'], ['0', '2']], [['0', '0'], ['0', '0']]],
        },
    )

    result, report = run('normalize-twist', text)

    assert result.status == HYPOTHESIS_FAILED
    assert result.exit_code == EXIT_INCONCLUSIVE
    assert report['hypothesis'] == 'NotSemisimpleError'


def test__run__normalize_vectorfield() -> None:
    text = _problem(
        order=3, dim=2, field=[[[[1, 0], '1'], [[0, 2], '1']], [[[0, 1], '2']]]
    )

    result, report = run('normalize-vectorfield', text)

    assert result.status == OK
    assert report['resonance']['free'] is False
    assert report['resonance']['first_resonant_degree'] == 2
    assert report['transcript']['method'] == 'poincare_dulac'


def test__run__cohomology_degrees() -> None:
    result, report = run('cohomology', _sl2r_problem(degrees=[0, 1]))

    assert result.status == OK
    assert [each['degree'] for each in report['modules']] == [0, 1]
    assert all(each['differential_squares_to_zero'] for each in report['modules'])


def test__run__factorize_full_cone() -> None:
    result, report = run('factorize', _sl2r_problem(cone=_full_cone()))

    assert result.exit_code == EXIT_OK
    assert report['pointwise'] == []


def test__run__factorize_rotation_cone() -> None:
    result, _ = run('factorize', _sl2r_problem(cone=[[0, 1, -1]]))

    assert result.exit_code == EXIT_INCONCLUSIVE


def test__run__factorize_undecided() -> None:
    text = _problem(
        order=2,
        action={'algebra': 'R', 'fiber': 'su2', 'linear': [[['0', '2'], ['1', '0']]]},
        points=[['1']],
        bound=2,
    )

    result, report = run('factorize', text)

    assert result.status == UNDECIDED
    assert result.exit_code == EXIT_INCONCLUSIVE
    assert len(report['pointwise']) == 1


def test__run__missing_entry() -> None:
    with pytest.raises(SchemaError, match='action'):
        run('mc-check', _problem(order=2))


def test__run__unknown_pipeline() -> None:
    with pytest.raises(KeyError):
        run('simplify', '{}')


def test__run__gpe_defaults() -> None:
    result, report = run('gpe', '{}', {'samples': 50, 'dim': 2})

    assert result.status == OK
    assert report['samples'] == 50
    assert report['negative_control']['kernel_holds'] is False
    assert report['beta'] == 1.0


def test__run__gpe_beta_flag() -> None:
    text = _problem(gpe={'hamiltonian': [[0, 0], [0, 1]], 'beta': 2, 'samples': 20})

    _, report = run('gpe', text, {'beta': 0.5})

    assert report['beta'] == 0.5
    assert report['samples'] == 20


def test__run__order_cap(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(MAX_DEGREE_VARIABLE, '1')

    with pytest.raises(SchemaError, match=MAX_DEGREE_VARIABLE):
        run('mc-check', _sl2r_problem())
    result, _ = run('mc-check', _sl2r_problem(), {'order': 1})
    assert result.status == OK


def test__run__order_flag() -> None:
    _, report = run('normalize-twist', _sl2r_problem(), {'order': 3})

    assert report['options']['order'] == 3
    assert report['normal_form']['order'] == 3


def test__run__deterministic() -> None:
    flags = {'samples': 30, 'seed': 5}

    one = dumps(run('gpe', '{}', flags)[1])
    another = dumps(run('gpe', '{}', flags)[1])

    assert one == another


def test__run__timing() -> None:
    _, plain = run('mc-check', _LINE_PROBLEM)
    _, timed = run('mc-check', _LINE_PROBLEM, {'timing': True})

    assert 'timing' not in plain
    assert timed['timing']['seconds'] >= 0


# Entry point ###


def test__main__writes_report(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    problem = tmp_path / 'problem.json'
    problem.write_text(_LINE_PROBLEM, encoding='utf-8')
    out = tmp_path / 'report.json'

    code = main(['mc-check', str(problem), '--out', str(out)])

    assert code == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == 'mc-check: ok'
    assert out.read_text(encoding='utf-8') == dumps(run('mc-check', _LINE_PROBLEM)[1])


def test__main__quiet(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    problem = tmp_path / 'problem.json'
    problem.write_text(_sl2r_problem(cone=[[0, 1, -1]]), encoding='utf-8')

    code = main(['factorize', str(problem), '--quiet'])

    assert code == EXIT_INCONCLUSIVE
    assert capsys.readouterr().out == ''


@pytest.mark.parametrize(
    'text, message',
    (
        (None, 'No such file'),
        ('{"order": ', 'line 1'),
        ('{"order": 2, "action": {"algebra": "sl3"}}', 'sl3'),
    ),
)
def test__main__errors(
    tmp_path: Path,
    capsys: pytest.CaptureFixture,
    text: Any,  # noqa: ANN401
    message: str,
) -> None:
    problem = tmp_path / 'problem.json'
    if text is not None:
        problem.write_text(text, encoding='utf-8')

    assert main(['mc-check', str(problem)]) == EXIT_ERROR
    assert message in capsys.readouterr().err


def test__main__problem_required(capsys: pytest.CaptureFixture) -> None:
    assert main(['mc-check']) == EXIT_ERROR
    assert 'needs a problem file' in capsys.readouterr().err


def test__main__order_cap(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture
) -> None:
    monkeypatch.setenv(MAX_DEGREE_VARIABLE, '1')
    problem = tmp_path / 'problem.json'
    problem.write_text(_sl2r_problem(), encoding='utf-8')

    assert main(['mc-check', str(problem)]) == EXIT_ERROR
    assert MAX_DEGREE_VARIABLE in capsys.readouterr().err
