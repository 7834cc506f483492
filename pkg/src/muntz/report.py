"""Self-describing analysis reports with JSON and CSV serialization.

Numbers are stored as JSON floats, complex numbers as ``[re, im]`` pairs,
and non-finite floats as the strings ``"inf"``, ``"-inf"`` and ``"nan"`` so
that the output stays strict JSON and still round-trips.
"""
from dataclasses import dataclass, field
import csv
import hashlib
import io
import json
import math
from typing import Optional

import numpy as np

__all__ = ['Record', 'AnalysisReport', 'inputs_digest', 'SCHEMA_VERSION']

SCHEMA_VERSION = 1

_NONFINITE = {'inf': math.inf, '-inf': -math.inf, 'nan': math.nan}


def _encode_float(x):
    x = float(x)
    if math.isfinite(x):
        return x
    return 'nan' if math.isnan(x) else ('inf' if x > 0 else '-inf')


def _encode(value):
    """Convert numpy scalars/arrays and complex numbers to JSON-ready values."""
    if isinstance(value, np.ndarray):
        return [_encode(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _encode(v) for k, v in value.items()}
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [_encode_float(value.real), _encode_float(value.imag)]
    if isinstance(value, (float, np.floating)):
        return _encode_float(value)
    return value


def _decode(value):
    if isinstance(value, list):
        return [_decode(v) for v in value]
    if isinstance(value, dict):
        return {k: _decode(v) for k, v in value.items()}
    if isinstance(value, str) and value in _NONFINITE:
        return _NONFINITE[value]
    return value


def _dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False)


def inputs_digest(payload):
    """SHA-256 of the canonical (sorted, compact) JSON form of `payload`."""
    text = json.dumps(_encode(payload), sort_keys=True, separators=(',', ':'), allow_nan=False)
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


@dataclass
class Record:
    """One named result: values, a verdict string and the tolerance applied."""
    name: str
    values: list
    verdict: str
    tolerance: Optional[float] = None

    def __post_init__(self):
        # keep the in-memory form identical to what a JSON round trip yields
        if not isinstance(self.values, (list, tuple, np.ndarray)):
            self.values = [self.values]
        self.values = _decode(_encode(self.values))
        self.tolerance = _decode(_encode(self.tolerance))

    def to_dict(self):
        return {'name': self.name, 'values': _encode(self.values),
                'verdict': self.verdict, 'tolerance': _encode(self.tolerance)}

    @classmethod
    def from_dict(cls, d):
        return cls(d['name'], _decode(d['values']), d['verdict'], _decode(d['tolerance']))


@dataclass
class AnalysisReport:
    """Result of one CLI subcommand.

    `theorem` names the statement the diagnostics bear on and `formulas`
    maps each record to the formula that produced it.  `table`, when set,
    is a ``{'columns': [...], 'rows': [[...], ...]}`` dict emitted by ``--csv``.
    """
    command: str
    inputs_digest: str
    records: list = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION
    theorem: str = ''
    formulas: dict = field(default_factory=dict)
    passed: bool = True
    table: Optional[dict] = None

    def __post_init__(self):
        self.records = sorted(self.records, key=lambda r: r.name)
        if self.table is not None:
            self.table = {'columns': list(self.table['columns']),
                          'rows': _decode(_encode(self.table['rows']))}

    def add(self, name, values, verdict, tolerance=None):
        self.records.append(Record(name, values, verdict, tolerance))
        self.records.sort(key=lambda r: r.name)

    def to_dict(self):
        out = {'command': self.command, 'inputs_digest': self.inputs_digest,
               'schema_version': self.schema_version, 'theorem': self.theorem,
               'formulas': dict(self.formulas), 'passed': self.passed,
               'records': [r.to_dict() for r in self.records]}
        if self.table is not None:
            out['table'] = {'columns': list(self.table['columns']),
                            'rows': _encode(self.table['rows'])}
        return out

    def to_json(self):
        return _dumps(self.to_dict()) + '\n'

    @classmethod
    def from_dict(cls, d):
        table = d.get('table')
        if table is not None:
            table = {'columns': list(table['columns']), 'rows': _decode(table['rows'])}
        return cls(d['command'], d['inputs_digest'],
                   [Record.from_dict(r) for r in d['records']],
                   d['schema_version'], d.get('theorem', ''), dict(d.get('formulas', {})),
                   d.get('passed', True), table)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def to_csv(self):
        """CSV text: the table if present, else one row per record value."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        if self.table is not None:
            writer.writerow(self.table['columns'])
            for row in self.table['rows']:
                writer.writerow([_csv_cell(v) for v in row])
            return buf.getvalue()
        writer.writerow(['name', 'index', 're', 'im', 'verdict', 'tolerance'])
        for rec in self.records:
            tol = '' if rec.tolerance is None else repr(float(rec.tolerance))
            for i, v in enumerate(rec.values):
                re, im = _split(v)
                writer.writerow([rec.name, i, re, im, rec.verdict, tol])
        return buf.getvalue()


def _split(v):
    # record values are already decoded: complex numbers appear as [re, im]
    if isinstance(v, list) and len(v) == 2 and all(isinstance(x, float) for x in v):
        return repr(v[0]), repr(v[1])
    if isinstance(v, bool) or isinstance(v, str) or v is None or isinstance(v, list):
        return str(v), ''
    if isinstance(v, int):
        return str(v), '0'
    return repr(float(v)), '0.0'


def _csv_cell(v):
    if isinstance(v, (bool, np.bool_)):
        return str(bool(v))
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    if isinstance(v, (complex, np.complexfloating)):
        return f"{float(v.real)!r}{float(v.imag):+}j"
    return str(v)
