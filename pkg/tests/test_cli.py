import json

from click.testing import CliRunner

from qsrlab.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


def stdout_only(result):
    return ''.join(line for line in result.output.splitlines(keepends=True)
                   if not line.startswith('# figure:'))


def test_tables_small():
    result = run('tables', '--max-n', '6')
    assert result.exit_code == 0
    assert 'status=PASS' in result.output
    assert 'FAIL' not in result.output


def test_tables_jsonl_deterministic():
    a = run('--format', 'jsonl', '--seed', '7', 'tables', '--max-n', '5')
    b = run('--format', 'jsonl', '--seed', '7', 'tables', '--max-n', '5')
    assert a.exit_code == 0 and b.exit_code == 0
    assert a.output == b.output
    for line in a.output.strip().splitlines():
        record = json.loads(line)
        assert 'kind' in record
        assert 'wall_ms' not in record
    meta = json.loads(a.output.splitlines()[0])
    assert meta['seed'] == 7
    assert 'version' in meta


def test_timings_flag_adds_wall_ms():
    result = run('--format', 'jsonl', '--timings', 'tables', '--max-n', '5')
    assert result.exit_code == 0
    record = json.loads(result.output.splitlines()[1])
    assert 'wall_ms' in record


def test_sporadic_only_m11():
    result = run('sporadic', '--only', 'm11')
    assert result.exit_code == 0
    assert result.output.count('status=PASS') == 5


def test_verify_single_suite():
    result = run('verify', '--suite', 'perm-core')
    assert result.exit_code == 0
    assert 'name=perm-core' in result.output


def test_unknown_suite_is_usage_error():
    result = run('verify', '--suite', 'nope')
    assert result.exit_code == 2


def test_bad_data_dir_is_data_error(tmp_path):
    result = run('--data', str(tmp_path), 'sporadic', '--only', 'm11')
    # missing dataset file: reported as a failing record
    assert result.exit_code in (1, 2)


def test_out_file_and_plot(tmp_path):
    out = tmp_path / 'report.jsonl'
    plots = tmp_path / 'figs'
    result = run('--format', 'jsonl', '--out', str(out), '--plot', str(plots),
                 'verify', '--suite', 'perm-core')
    assert result.exit_code == 0
    assert out.exists()
    assert (plots / 'verify.png').exists()
    assert out.read_text() == stdout_only(result)


def test_data_dir_override(tmp_path):
    from qsrlab.datasets import builtin_data_dir
    import shutil
    shutil.copy(builtin_data_dir() / 'm11.json', tmp_path / 'm11.json')
    result = run('--data', str(tmp_path), 'sporadic', '--only', 'm11')
    assert result.exit_code == 0
    assert result.output.count('status=PASS') == 5


def test_max_degree_budget_skips():
    result = run('--max-degree', '100', 'sporadic', '--only', 'm23')
    # every index above 100 is skipped, so only the degree-23 row remains
    assert 'reason=max-degree budget' in result.output
