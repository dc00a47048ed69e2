from qsrlab.harness import RunConfig, cmd_tables_symalt, cmd_sporadic, cmd_verify
from qsrlab.reports import Report
from qsrlab.plots import render_report


def test_render_tables_and_sporadic(tmp_path, config):
    report = cmd_tables_symalt(config, max_n=6)
    path = render_report(report, tmp_path)
    assert path.exists() and path.stat().st_size > 0
    report = cmd_sporadic(config, only='m11')
    path = render_report(report, tmp_path)
    assert path.exists() and path.name == 'sporadic.png'


def test_render_affine_and_fallback(tmp_path):
    cfg = RunConfig()
    report = Report('affine', cfg, version='x')
    report.add('affine', instance='demo', degree=25, order=400,
               qsr_primes=[2], exists=True, expected=True, status='PASS')
    report.add('affine', instance='neg', degree=27, order=324,
               qsr_primes=[], exists=False, expected=False, status='PASS')
    report.finish()
    assert render_report(report, tmp_path).exists()
    other = Report('structural', cfg, version='x')
    other.add('diagonal-count', T='T', k=3, count=1, coprime=True, status='PASS')
    other.finish()
    assert render_report(other, tmp_path).exists()
