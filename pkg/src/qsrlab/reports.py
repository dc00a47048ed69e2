"""Report records and their text / line-delimited renderings.

A report is an ordered list of flat records (dicts with stable key order).
Structured (jsonl) output is deterministic: reruns with the same seed are
byte-identical, which is why wall-clock timings only appear when
explicitly requested.
"""

from __future__ import annotations

import json
import time

__all__ = ['Report']


class Report:
    def __init__(self, command, config=None, version=None):
        self.command = command
        self.records = []
        self.mismatches = 0
        self.warnings = 0
        self._t0 = time.perf_counter()
        meta = {'kind': 'meta', 'command': command}
        if version is not None:
            meta['version'] = version
        if config is not None:
            meta['seed'] = config.seed
            meta['max_degree'] = config.max_degree
            meta['max_order'] = str(config.max_order)
        self._timings = bool(config.timings) if config is not None else False
        self.records.append(meta)

    def add(self, kind, **fields):
        record = {'kind': kind}
        record.update(fields)
        if self._timings:
            record['wall_ms'] = round((time.perf_counter() - self._t0) * 1000, 1)
        self.records.append(record)
        if fields.get('status') == 'FAIL':
            self.mismatches += 1
        if fields.get('status') == 'WARN':
            self.warnings += 1
        return record

    def finish(self):
        tally = {'kind': 'summary', 'records': len(self.records) - 1,
                 'mismatches': self.mismatches, 'warnings': self.warnings}
        if self._timings:
            tally['wall_ms'] = round((time.perf_counter() - self._t0) * 1000, 1)
        self.records.append(tally)
        return self

    @property
    def exit_code(self):
        return 1 if self.mismatches else 0

    def to_jsonl(self):
        return '\n'.join(json.dumps(r, separators=(', ', ': '))
                         for r in self.records) + '\n'

    def to_text(self):
        lines = []
        width = max((len(r['kind']) for r in self.records), default=4)
        for r in self.records:
            fields = ['%s=%s' % (k, v) for k, v in r.items() if k != 'kind']
            lines.append('%-*s  %s' % (width, r['kind'], '  '.join(fields)))
        return '\n'.join(lines) + '\n'

    def render(self, fmt):
        if fmt == 'jsonl':
            return self.to_jsonl()
        return self.to_text()
