"""Command-line front end.

Every subcommand reads an exponent sequence spec (a JSON file or inline
JSON), runs one family of diagnostics and writes an :class:`AnalysisReport`
as JSON, or its table as CSV with ``--csv``.

Exit codes: 0 all checks passed, 1 a checked invariant or inequality
failed, 2 bad input, 3 numerical conditioning failure.
"""
import argparse
import json
import math
import sys

import numpy as np

from .basis import (aob_sandwich_check, carleson_deltas, density_partial_sums,
                    lacunarity_profile, stability_R, thinness_trend)
from .dictionary import dictionary_eval_closed, dictionary_eval_quadrature, isometry_gap
from .errors import (HalfPlaneViolation, InputError, MuntzError, NumericalError,
                     ParseError, RouteMismatch)
from .exponents import (FAMILIES, ExponentSequence, generate_sequence, transform_to_halfplane,
                        validate_exponents)
from .gram import (MuntzCombination, distance_to_span, frame_bounds, kernel_gram,
                   monomial_gram, normalized_monomial_gram)
from .inequality import (DEFAULT_SEED, dirichlet_equivalence, dirichlet_gram,
                         markov_newman_check, markov_newman_constant, markov_newman_trials,
                         random_coefficients)
from .kernels import BlaschkeSet, blaschke_product, model_kernel
from .projection import (project_onto_muntz, projection_norm, reconstruction_curve,
                         summation_weights)
from .report import AnalysisReport, inputs_digest

__all__ = ['main', 'parse_sequence_spec', 'build_parser', 'run', 'COMMANDS']

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2, 3

THEOREMS = {
    'density': 'Müntz-Szász theorem in L2: the monomials are complete iff the density series diverges',
    'carleson': 'Carleson condition and Volberg thinness criterion for the half-plane points',
    'riesz': 'Nikolski-Pavlov criterion: normalized kernels form a Riesz basis iff the Carleson condition holds',
    'aob': 'Asymptotic orthonormality of super-lacunary Müntz systems (Volberg)',
    'project': 'Projected monomials are model-space reproducing kernels; Pythagoras identity',
    'summation': 'Summation-basis property of complete minimal Müntz systems',
    'markov-newman': 'Markov-Newman inequality for Müntz polynomials',
    'dirichlet': 'Norm equivalence for weighted Dirichlet series',
    'dictionary-check': 'Mellin transform is an isometry from L2(0, 1) onto H2 of the right half-plane',
    'stability': 'Completeness stability of projected monomials under perturbation',
}


def _load_json(source):
    if isinstance(source, dict):
        return source
    if not isinstance(source, str):
        raise ParseError("spec must be a path or a JSON string")
    text = source.strip()
    if not text.startswith('{'):
        try:
            with open(source, encoding='utf-8') as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read spec file {source!r}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _is_number(v):
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def _point(raw, pointer):
    if _is_number(raw):
        return complex(raw)
    if isinstance(raw, list) and len(raw) == 2 and all(_is_number(v) for v in raw):
        return complex(raw[0], raw[1])
    raise ParseError("point must be a number or a [re, im] pair", pointer)


def parse_sequence_spec(source) -> ExponentSequence:
    """Parse and validate a sequence spec.

    `source` is a path, an inline JSON object string or an already decoded
    dict.  Accepted shapes::

        {"kind": "explicit", "points": [[re, im], ...]}
        {"kind": "<family>", "params": {...}, "n": N}

    Errors carry a JSON pointer to the offending node.

    >>> parse_sequence_spec('{"kind":"geometric","params":{"a":1,"c":2},"n":3}').points.real
    array([1., 2., 4.])
    """
    spec = _load_json(source)
    if not isinstance(spec, dict):
        raise ParseError("spec must be a JSON object")
    kind = spec.get('kind')
    if kind is None:
        raise ParseError("missing field", '/kind')
    if kind not in FAMILIES:
        raise ParseError(f"unknown kind {kind!r}; expected one of {list(FAMILIES)}", '/kind')
    if kind == 'explicit':
        allowed = {'kind', 'points'}
    else:
        allowed = {'kind', 'params', 'n'}
    for key in sorted(set(spec) - allowed):
        raise ParseError(f"unexpected field for kind {kind!r}", '/' + key)
    if kind == 'explicit':
        raw = spec.get('points')
        if not isinstance(raw, list):
            raise ParseError("points must be an array", '/points')
        points = [_point(p, f'/points/{i}') for i, p in enumerate(raw)]
        try:
            return validate_exponents(points)
        except HalfPlaneViolation as exc:
            exc.pointer = f'/points/{exc.index}'
            exc.args = (f"{exc.pointer}: {exc.args[0]}",)
            raise
        except InputError as exc:
            exc.pointer = '/points'
            exc.args = (f"/points: {exc.args[0]}",)
            raise
    params = spec.get('params', {})
    if not isinstance(params, dict):
        raise ParseError("params must be an object", '/params')
    n = spec.get('n')
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError("n must be a positive integer", '/n')
    try:
        return generate_sequence(kind, n, **params)
    except InputError as exc:
        exc.pointer = '/params'
        exc.args = (f"/params: {exc.args[0]}",)
        raise


def _parse_complex(text, name):
    try:
        return complex(text.replace(' ', ''))
    except ValueError:
        raise InputError(f"{name}: cannot parse {text!r} as a number") from None


def parse_grid(text):
    """``"a:b:step"`` -> ``a, a + step, ...`` up to ``b`` inclusive."""
    parts = text.split(':')
    if len(parts) != 3:
        raise InputError(f"grid must look like a:b:step, got {text!r}")
    try:
        a, b, step = map(float, parts)
    except ValueError:
        raise InputError(f"grid must look like a:b:step, got {text!r}") from None
    if not (math.isfinite(a) and math.isfinite(b) and step > 0 and b >= a):
        raise InputError(f"grid needs finite a <= b and step > 0, got {text!r}")
    count = int(math.floor((b - a) / step + 1e-9))
    if count > 10**6:
        raise InputError("grid has more than a million points")
    return a + step * np.arange(count + 1)


def _parse_bases(text):
    try:
        return [float(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise InputError(f"--q must be a comma separated list of numbers, got {text!r}") from None


def _sequence(args, required=True):
    if args.spec is None:
        if required:
            raise InputError(f"{args.command} needs --spec")
        return None
    seq = parse_sequence_spec(args.spec)
    if args.n is not None:
        if args.n < 1:
            raise InputError("--n must be positive")
        if seq.family == 'explicit':
            if args.n > len(seq):
                raise InputError(f"--n {args.n} exceeds the {len(seq)} explicit points")
            seq = seq.truncate(args.n)
        else:
            seq = generate_sequence(seq.family, args.n, **seq.params)
    return seq


def _report(args, seq, extra=None):
    payload = {'command': args.command, 'seed': args.seed, 'tol': args.tol,
               'spec': seq.to_spec() if seq is not None else None}
    payload.update(extra or {})
    return AnalysisReport(args.command, inputs_digest(payload), theorem=THEOREMS[args.command])


def _rng(args, stream=0):
    return np.random.default_rng([args.seed, stream])


def cmd_density(args):
    seq = _sequence(args)
    sums, verdict = density_partial_sums(seq)
    rep = _report(args, seq)
    rep.formulas = {'density_partial_sums': 'S_N = sum_{n<=N} (1/2 + Re lam_n) / (|lam_n + 1/2|**2 + 1)',
                    'tail_class': 'analytic fate of S_N for the generator family'}
    rep.add('density_partial_sums', sums, verdict)
    rep.add('tail_class', [verdict], verdict)
    rep.table = {'columns': ['n', 'lambda_re', 'lambda_im', 'partial_sum'],
                 'rows': [[i + 1, p.real, p.imag, s] for i, (p, s) in enumerate(zip(seq.points, sums))]}
    rep.passed = bool(np.all(np.diff(sums) > 0)) if len(sums) > 1 else True
    return rep


def cmd_carleson(args):
    seq = _sequence(args)
    delta, verdict = thinness_trend(seq)
    rep = _report(args, seq)
    rep.formulas = {'carleson_delta': 'delta_n = prod_{k!=n} |lam_n - lam_k| / |lam_n + conj(lam_k) + 1|',
                    'delta_inf': 'min_n delta_n over the finite section'}
    in_range = bool(np.all((delta >= 0) & (delta <= 1)))
    rep.add('carleson_delta', delta, verdict)
    rep.add('delta_inf', [float(delta.min())], 'positive' if delta.min() > 0 else 'zero')
    rep.table = {'columns': ['n', 'delta'], 'rows': [[i + 1, d] for i, d in enumerate(delta)]}
    rep.passed = in_range
    return rep


def cmd_riesz(args):
    seq = _sequence(args)
    tol = 1e-10 if args.tol is None else args.tol
    lo, hi = [], []
    for n in range(1, len(seq) + 1):
        a, b = frame_bounds(normalized_monomial_gram(seq.truncate(n)))
        lo.append(a)
        hi.append(b)
    lo, hi = np.array(lo), np.array(hi)
    # eigenvalue interlacing for nested sections
    monotone = bool(np.all(lo[1:] <= lo[:-1] * (1 + tol)) and np.all(hi[1:] >= hi[:-1] * (1 - tol)))
    quarter = max(0, (3 * len(lo)) // 4 - 1)
    trend = 'plateau-consistent' if lo[-1] >= 0.9 * lo[quarter] else 'decaying'
    delta = carleson_deltas(seq)
    rep = _report(args, seq)
    rep.formulas = {'lambda_min': 'smallest eigenvalue of the unit-diagonal Gram of sections N = 1..n',
                    'lambda_max': 'largest eigenvalue of the same sections',
                    'carleson_delta_inf': 'min_n prod_{k!=n} |lam_n - lam_k| / |lam_n + conj(lam_k) + 1|'}
    rep.add('lambda_min', lo, trend if monotone else 'interlacing violated', tol)
    rep.add('lambda_max', hi, 'nondecreasing' if monotone else 'interlacing violated', tol)
    rep.add('carleson_delta_inf', [float(delta.min())], 'positive' if delta.min() > 0 else 'zero')
    rep.table = {'columns': ['N', 'lambda_min', 'lambda_max'],
                 'rows': [[i + 1, a, b] for i, (a, b) in enumerate(zip(lo, hi))]}
    rep.passed = monotone
    return rep


def cmd_aob(args):
    seq = _sequence(args)
    trials = 200 if args.trials is None else args.trials
    if trials < 1:
        raise InputError("--trials must be positive")
    w = (seq.points + 0.5)
    prof = lacunarity_profile(seq)
    w = w.real
    rng = _rng(args)
    rows, failures = [], 0
    for n0 in range(1, len(w) + 1):
        ratios = []
        for _ in range(trials):
            a = random_coefficients(rng, len(w) - n0 + 1)
            res = aob_sandwich_check(w, a, n0)
            failures += not res.passed
            ratios.append(res.mid / np.linalg.norm(a))
        rows.append([n0, prof.r[n0 - 1], prof.eps[n0 - 1], prof.eps_lower[n0 - 1],
                     min(ratios), max(ratios)])
    rep = _report(args, seq, {'trials': trials})
    rep.formulas = {'r': 'r_n = min_{m>=n} q_{m+1}/q_m with q = sqrt(2 w), w = lam + 1/2; r_N = inf',
                    'eps': 'eps_n = sqrt(1 + 4/(r_n - 1)) - 1',
                    'eps_lower': "eps'_n = 1 - sqrt(max(0, 1 - 4/(r_n - 1)))",
                    'sandwich_failures': "count of (1-eps'_n)|a| <= ||sum a_k q_k k_{w_k}|| <= (1+eps_n)|a| violations"}
    rep.add('r', prof.r, 'tail infimum of ratios')
    rep.add('eps', prof.eps, 'upper constants')
    rep.add('eps_lower', prof.eps_lower, 'lower constants')
    rep.add('sandwich_failures', [failures], 'pass' if failures == 0 else 'fail')
    rep.table = {'columns': ['n', 'r', 'eps', 'eps_lower', 'min_ratio', 'max_ratio'], 'rows': rows}
    rep.passed = failures == 0
    return rep


def _sample_z(rng, count):
    return rng.uniform(0.1, 5.0, count) + 1j * rng.uniform(-5.0, 5.0, count)


def cmd_project(args):
    seq = _sequence(args)
    mu = _parse_complex(args.mu, '--mu') if args.mu is not None else 0j
    tol = 1e-8 if args.tol is None else args.tol
    nu = np.conj(mu) + 0.5
    bset = BlaschkeSet.from_exponents(seq)
    dist_gram = distance_to_span(seq, mu)
    dist_kernel = float(abs(blaschke_product(bset, nu)) / math.sqrt(2 * nu.real))
    try:
        pnorm = projection_norm(seq, mu, rtol=tol)
        route = 'routes agree'
    except RouteMismatch:
        pnorm = projection_norm(seq, mu, rtol=None)
        route = 'routes disagree'
    pyth = abs(pnorm ** 2 + dist_gram ** 2 - 1 / (2 * mu.real + 1))
    proj = project_onto_muntz(seq, mu)
    zs = _sample_z(_rng(args), 8)
    lhs = dictionary_eval_closed(proj, zs)
    rhs = np.array([model_kernel(bset, nu, z) for z in zs])
    identity = float(np.abs(lhs - rhs).max())
    ok_dist = abs(dist_gram - dist_kernel) <= tol
    ok_identity = identity <= tol
    ok_pyth = pyth <= tol
    rep = _report(args, seq, {'mu': [mu.real, mu.imag]})
    rep.formulas = {
        'distance_gram': 'sqrt(||t^mu||^2 - b^* G^{-1} b), b_n = 1/(mu + conj(lam_n) + 1)',
        'distance_kernel': '|B(nu)| / sqrt(2 Re nu), nu = conj(mu) + 1/2',
        'projection_norm': 'sqrt((1 - |B(nu)|^2) / (2 Re nu)), cross-checked by the Gram quadratic form',
        'pythagoras_defect': '|projection_norm^2 + distance^2 - 1/(2 Re mu + 1)|',
        'kernel_identity_gap': 'max_z |D(P t^mu)(z) - k^B_nu(z)| over sampled z',
    }
    rep.add('distance_gram', [dist_gram], 'pass' if ok_dist else 'fail', tol)
    rep.add('distance_kernel', [dist_kernel], 'pass' if ok_dist else 'fail', tol)
    rep.add('projection_norm', [pnorm], route, tol)
    rep.add('pythagoras_defect', [pyth], 'pass' if ok_pyth else 'fail', tol)
    rep.add('kernel_identity_gap', [identity], 'pass' if ok_identity else 'fail', tol)
    rep.add('projection_coefficients', proj.coefficients, 'G^{-1} b')
    rep.table = {'columns': ['z_re', 'z_im', 'closed_re', 'closed_im', 'kernel_re', 'kernel_im'],
                 'rows': [[z.real, z.imag, a.real, a.imag, b.real, b.imag]
                          for z, a, b in zip(zs, lhs, rhs)]}
    rep.passed = bool(ok_dist and ok_identity and ok_pyth and route == 'routes agree')
    return rep


def cmd_summation(args):
    seq = _sequence(args)
    tol = 1e-10 if args.tol is None else args.tol
    coeffs = random_coefficients(_rng(args), len(seq))
    f = MuntzCombination(seq, coeffs)
    moments = f.moments()
    ks = list(range(1, len(seq) + 2))
    errors = reconstruction_curve(seq, moments, ks)
    exact_zero = all(np.all(summation_weights(seq, k)[k - 1:] == 0) for k in ks)
    final_ok = errors[-1] <= tol
    rep = _report(args, seq)
    rep.formulas = {'reconstruction_error': '||sum_n conj(B^(k)(mu_n)) <f, e*_n> e_n - f||, k = 1..N+1',
                    'weights_vanish': 'conj(B^(k)(mu_n)) == 0 exactly for n >= k'}
    rep.add('reconstruction_error', errors, 'pass' if final_ok else 'fail', tol)
    rep.add('weights_vanish', [exact_zero], 'pass' if exact_zero else 'fail', 0.0)
    rep.table = {'columns': ['k', 'error'], 'rows': [[k, e] for k, e in zip(ks, errors)]}
    rep.passed = bool(final_ok and exact_zero)
    return rep


def cmd_markov_newman(args):
    seq = _sequence(args, required=False)
    trials = 1000 if args.trials is None else args.trials
    if trials < 1:
        raise InputError("--trials must be positive")
    factor = args.cross_factor
    if seq is not None:
        ws = seq.points + 0.5
        rng = _rng(args)
        const = markov_newman_constant(ws, factor)
        rows = []
        for i in range(trials):
            res = markov_newman_check(ws, random_coefficients(rng, len(ws)), constant=const)
            rows.append([i, res.ratio / const, res.passed])
    else:
        max_n = 10 if args.n is None else args.n
        real = markov_newman_trials(trials, args.seed, max_n=max_n, cross_factor=factor)
        cplx = markov_newman_trials(trials, args.seed + 1, max_n=max_n, complex_points=True,
                                    cross_factor=factor)
        rows = [list(r) for r in real + cplx]
    failures = sum(not r[2] for r in rows)
    worst = max(r[1] for r in rows)
    rep = _report(args, seq, {'trials': trials, 'cross_factor': factor, 'n': args.n})
    rep.formulas = {'worst_ratio': 'max ||sum a_k (w_k - 1/2) k_k|| / (C ||sum a_k k_k||), w = lam + 1/2',
                    'constant': f'C^2 = sum |w_k - 1/2|^2 + {factor!r} * sum_k Re w_k sum_(j>k) Re w_j',
                    'failures': 'instances with lhs > C rhs (relative slack 1e-12)'}
    if seq is not None:
        rep.add('constant', [const], 'order as given')
    rep.add('worst_ratio', [worst], 'pass' if worst <= 1 + 1e-12 else 'fail', 1e-12)
    rep.add('failures', [failures, len(rows)], 'pass' if failures == 0 else 'fail')
    rep.table = {'columns': ['trial', 'ratio_over_constant', 'passed'], 'rows': rows}
    rep.passed = failures == 0
    return rep


def cmd_dirichlet(args):
    if args.q is None:
        raise InputError("dirichlet needs --q, e.g. --q 2,4,16")
    qs = _parse_bases(args.q)
    trials = 200 if args.trials is None else args.trials
    G = dirichlet_gram(qs)
    K = kernel_gram(np.log(qs) + 0.5)
    gap = float(np.abs(G.entries - K.entries).max())
    res = dirichlet_equivalence(qs, trials, args.seed)
    lo, hi = res.bracket
    slack = 1e-10
    inside = lo * (1 - slack) <= res.c_lo and res.c_hi <= hi * (1 + slack)
    rep = _report(args, None, {'q': qs, 'trials': trials})
    rep.formulas = {'gram_identity_gap': 'max |1/(1 + ln q_k + ln q_l) - kernel_gram(ln q + 1/2)|',
                    'sampled_ratios': '[min, max] of a^* G a / sum |a_k|^2 / ln q_k',
                    'bracket': 'extreme eigenvalues of diag(sqrt ln q) G diag(sqrt ln q)',
                    'condition': 'inf_n prod_{k!=n} |ln(q_n/q_k)| / ln(q_n q_k e)'}
    rep.add('gram_identity_gap', [gap], 'pass' if gap <= 1e-15 else 'fail', 1e-15)
    rep.add('sampled_ratios', [res.c_lo, res.c_hi], 'inside bracket' if inside else 'outside bracket', slack)
    rep.add('bracket', [lo, hi], 'certified')
    rep.add('condition', [res.condition], 'positive' if res.condition > 0 else 'zero')
    rep.table = {'columns': ['trial', 'ratio'], 'rows': [[i, r] for i, r in enumerate(res.ratios)]}
    rep.passed = bool(gap <= 1e-15 and inside)
    return rep


def cmd_dictionary_check(args):
    seq = _sequence(args)
    rtol = 1e-8 if args.tol is None else args.tol
    x = transform_to_halfplane(seq)
    gap = float(np.abs(monomial_gram(seq).entries - kernel_gram(x).entries).max())
    zs = np.array([1.0, 0.5 + 2j, 3.0 - 1j])
    rows, worst = [], 0.0
    for lam in seq.points:
        e = MuntzCombination([lam], [1.0])
        for z in zs:
            exact = 1 / (z + lam + 0.5)
            approx = dictionary_eval_quadrature(e, z, tol=rtol * abs(exact) / 10)
            err = abs(approx - exact) / abs(exact)
            worst = max(worst, err)
            rows.append([lam.real, lam.imag, z.real, z.imag, err])
    head = min(len(seq), 8)
    iso = isometry_gap(MuntzCombination(seq.points[:head], np.ones(head)), 1e4)
    rep = _report(args, seq)
    rep.formulas = {'gram_identity_gap': 'max |<t^lam_j, t^lam_i> - 1/(mu_i + conj(mu_j))|, mu = conj(lam) + 1/2',
                    'transform_relative_error': 'max |quadrature D(t^lam)(z) - 1/(z + lam + 1/2)| / |exact|',
                    'isometry_gap': 'relative gap of ||f|| and the boundary norm of D f over |y| <= 1e4, f = sum of the first 8 monomials'}
    rep.add('gram_identity_gap', [gap], 'pass' if gap <= 1e-15 else 'fail', 1e-15)
    rep.add('transform_relative_error', [worst], 'pass' if worst <= rtol else 'fail', rtol)
    rep.add('isometry_gap', [iso], 'truncated boundary integral')
    rep.table = {'columns': ['lambda_re', 'lambda_im', 'z_re', 'z_im', 'relative_error'], 'rows': rows}
    rep.passed = bool(gap <= 1e-15 and worst <= rtol)
    return rep


def cmd_stability(args):
    seq = _sequence(args)
    if args.perturb_spec is not None:
        pert = parse_sequence_spec(args.perturb_spec)
    else:
        pert = seq
    t = parse_grid(args.grid)
    res = stability_R(seq, pert, t)
    ok = res.envelope >= res.grid_max
    rep = _report(args, seq, {'perturbed': pert.to_spec(), 'grid': args.grid})
    rep.formulas = {'R': 'R(t) = sum_n |lam_n - mu_n| / |mu_n + 1/2 - i t|',
                    'envelope': 'sum_n |lam_n - mu_n| / Re(mu_n + 1/2) >= sup_t R(t)',
                    'grid_max': 'max of R over the grid'}
    rep.add('R', res.R, res.verdict)
    rep.add('envelope', [res.envelope], 'pass' if ok else 'fail')
    rep.add('grid_max', [res.grid_max], 'bounded by envelope' if ok else 'exceeds envelope')
    rep.table = {'columns': ['t', 'R'], 'rows': [[a, b] for a, b in zip(res.t, res.R)]}
    rep.passed = bool(ok)
    return rep


COMMANDS = {
    'density': cmd_density,
    'carleson': cmd_carleson,
    'riesz': cmd_riesz,
    'aob': cmd_aob,
    'project': cmd_project,
    'summation': cmd_summation,
    'markov-newman': cmd_markov_newman,
    'dirichlet': cmd_dirichlet,
    'dictionary-check': cmd_dictionary_check,
    'stability': cmd_stability,
}


def _seed(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--spec', help='sequence spec: JSON file path or inline JSON object')
    common.add_argument('--out', help='write the report here instead of stdout')
    common.add_argument('--csv', action='store_true', help='emit the tabular records as CSV')
    common.add_argument('--seed', type=_seed, default=DEFAULT_SEED)
    common.add_argument('--n', type=int, help='sequence length (regenerate or truncate)')
    common.add_argument('--tol', type=float)
    common.add_argument('--grid', default='-50:50:0.5', help='t-grid "a:b:step" for stability')
    common.add_argument('--trials', type=int)
    common.add_argument('--mu', help='target exponent for project, e.g. 0 or 0.5+1j')
    common.add_argument('--q', help='comma separated Dirichlet bases for dirichlet')
    common.add_argument('--perturb-spec', help='perturbed sequence spec for stability')
    common.add_argument('--cross-factor', type=float, default=1.0,
                        help='weight of the double sum in the Markov-Newman constant')
    parser = argparse.ArgumentParser(prog='muntz', description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest='command', required=True)
    for name, func in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=THEOREMS[name])
    return parser


def run(args):
    """Run one parsed command; returns ``(exit_code, report or None)``."""
    report = COMMANDS[args.command](args)
    return (EXIT_PASS if report.passed else EXIT_FAIL), report


def _emit(args, report):
    text = report.to_csv() if args.csv else report.to_json()
    if args.out:
        with open(args.out, 'w', encoding='utf-8', newline='') as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, report = run(args)
    except InputError as exc:
        print(f"muntz {args.command}: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalError as exc:
        print(f"muntz {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL if isinstance(exc, RouteMismatch) else EXIT_NUMERIC
    except MuntzError as exc:
        print(f"muntz {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(args, report)
    return code


if __name__ == '__main__':
    sys.exit(main())
