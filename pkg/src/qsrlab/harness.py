"""Batch commands: reproduce the classification tables, run the structural
theorems at desk scale, and execute the cross-module property suites."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from random import Random

from . import __version__
from .perm import Permutation
from .group import PermGroup
from .actions import (
    natural_action, ksubset_action, partition_action, coset_action,
    induced_block_action, iterated_block_systems,
)
from .constructors import (
    make_sym_alt, make_product_action, sd_fixed_coset_count, make_sd_small,
    make_hs_type, gl32_fano_group, agl32_group, alt4_matrix_action,
    s0_affine_action, sl25_affine_action, agammal1_action,
)
from .fields import projective_line_group
from .datasets import load_builtin_dataset, DatasetError
from .structure import (
    SubgroupHandle, conjugacy_classes, normalizer_of_cyclic,
    is_strongly_p_embedded,
)
from .qsr import (
    scan_action, predict_sym_alt, is_qsr_direct, is_qsr_fusion,
    is_qsr_normalizer, fixed_points_formula, fixed_points_manning,
)
from .reports import Report

__all__ = ['RunConfig', 'cmd_tables_symalt', 'cmd_sporadic', 'cmd_structural',
           'cmd_affine', 'cmd_verify', 'EXPECTED_SPORADIC', 'SPORADIC_ORDER',
           'sporadic_primes', 'load_corpus_dataset', 'alt6_socle_instances',
           'spot_row_groups']


@dataclass
class RunConfig:
    seed: int = 0
    data_dir: Path | None = None
    fmt: str = 'text'
    max_degree: int = 10 ** 6
    max_order: int = 10 ** 9
    plot_dir: Path | None = None
    timings: bool = False

    def rng(self):
        return Random(self.seed)


def _primes_up_to(n):
    return [p for p in range(2, n + 1)
            if all(p % d for d in range(2, int(math.isqrt(p)) + 1))]


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ------------------------------------------------------------ symmetric tables

def spot_row_groups(config):
    """The exceptional natural-point-action rows checkable at desk scale:
    Alt(n) acting on cosets of a primitive maximal subgroup."""
    m11 = load_corpus_dataset('m11', config).group
    m12 = load_corpus_dataset('m12', config).group
    return [
        (7, 'PSL(3,2)', gl32_fano_group(), 120, 7),
        (8, 'AGL(3,2)', agl32_group(), 120, 7),
        (9, 'PGammaL(2,8)', projective_line_group(8, 'pgammal'), 280, 7),
        (11, 'M11', m11, 362880, 11),
        (12, 'M12', m12, 362880, 11),
    ]


def alt6_socle_instances():
    """The two sporadic-looking degree-10/36 actions with socle Alt(6)."""
    pgl29 = projective_line_group(9, 'pgl', name='PGL(2,9)')
    deg10 = natural_action(pgl29, name='PGL(2,9) on projective line')
    rng = Random(1)
    x5 = None
    while x5 is None:
        g = pgl29.random_element(rng)
        if g.order() % 5 == 0:
            x5 = g ** (g.order() // 5)
    n20 = normalizer_of_cyclic(pgl29, x5)
    deg36 = coset_action(pgl29, n20.group, name='PGL(2,9) on cosets of 5:4')
    deg36.stabilizer = SubgroupHandle(pgl29, n20.group, name='5:4', verify=False)
    return deg10, deg36


def cmd_tables_symalt(config, max_n=13, variants=('symmetric', 'alternating')):
    """Exhaustive subset/partition verdicts vs closed forms, the checkable
    exceptional rows, and the two Alt(6)-socle actions."""
    rng = config.rng()
    report = Report('tables', config, version=__version__)
    if max_n > 13:
        raise ValueError('tables are verified for n <= 13')
    for n in range(5, max_n + 1):
        for variant in variants:
            alternating = variant == 'alternating'
            G = make_sym_alt(n, alternating=alternating)
            for k in range(1, (n + 1) // 2):  # all k with 1 <= k < n/2
                action = ksubset_action(G, k)
                scanned = scan_action(action, _primes_up_to(n), rng=rng)
                predicted = predict_sym_alt(n, 'ksubsets', k,
                                            alternating=alternating)
                ok = set(scanned.qsr_primes) == predicted['primes']
                report.add('ksubsets', group=G.name, n=n, k=k,
                           degree=action.degree,
                           computed=sorted(scanned.qsr_primes),
                           predicted=sorted(predicted['primes']),
                           status='PASS' if ok else 'FAIL')
            for k in range(2, n // 2 + 1):
                if n % k != 0:
                    continue
                action = partition_action(G, k)
                scanned = scan_action(action, _primes_up_to(n), rng=rng)
                predicted = predict_sym_alt(n, 'partitions', k,
                                            alternating=alternating)
                ok = set(scanned.qsr_primes) == predicted['primes']
                types_ok = True
                for p in scanned.qsr_primes:
                    got = {c.source_cycle_type
                           for c in scanned.verdicts[p].qsr_classes}
                    types_ok = types_ok and got == predicted['types'].get(p, set())
                report.add('partitions', group=G.name, n=n, k=k,
                           degree=action.degree,
                           computed=sorted(scanned.qsr_primes),
                           predicted=sorted(predicted['primes']),
                           types_match=types_ok,
                           status='PASS' if ok and types_ok else 'FAIL')
    # exceptional rows with primitive stabilizers
    for n, hname, H, declared_index, p_expected in spot_row_groups(config):
        if n > max_n:
            continue
        alt = make_sym_alt(n, alternating=True)
        handle = SubgroupHandle(alt, H.generators, name=hname)
        index = handle.index()
        action = coset_action(alt, handle.group, name=f'Alt({n}) on [G:{hname}]')
        action.stabilizer = handle
        scanned = scan_action(action, _primes_up_to(n), rng=rng)
        ok = scanned.qsr_primes == [p_expected]
        report.add('exceptional-row', n=n, stabilizer=hname,
                   computed_index=index, declared_index=declared_index,
                   computed=scanned.qsr_primes, expected=[p_expected],
                   status='PASS' if ok else 'FAIL')
        if index != declared_index:
            report.add('index-discrepancy', n=n, stabilizer=hname,
                       computed_index=index, declared_index=declared_index,
                       status='WARN')
    # degree 10 and 36 actions with socle Alt(6)
    deg10, deg36 = alt6_socle_instances()
    for action, expected in ((deg10, [3]), (deg36, [5])):
        scanned = scan_action(action, _primes_up_to(7), rng=rng)
        report.add('alt6-socle', action=action.name, degree=action.degree,
                   computed=scanned.qsr_primes, expected=expected,
                   status='PASS' if scanned.qsr_primes == expected else 'FAIL')
    return report.finish()


# ------------------------------------------------------------ sporadic rows

# expected qsr content per coset action, {prime: number of qsr classes};
# rows without qsr elements are empty dicts
EXPECTED_SPORADIC = {
    ('M11', 'A6.2_3'): {5: 1},
    ('M11', 'L2(11)'): {11: 2},
    ('M11', '3^2:Q8.2'): {3: 1},
    ('M11', 'A5.2'): {5: 1},
    ('M11', '2.S4'): {},
    ('M12', 'M11'): {11: 2},
    ('M12', "M11'"): {11: 2},
    ('M12', 'A6.2^2'): {5: 1},
    ('M12', "A6.2^2'"): {5: 1},
    ('M12', 'L2(11)'): {11: 2},
    ('M12', '2xS5'): {5: 1},
    ('M12', '2^(1+4):S3'): {},
    ('M12.2', 'L2(11).2'): {11: 1},
    ('M12.2', "L2(11).2'"): {11: 1},
    ('M12.2', '(2^2xA5):2'): {5: 1},
    ('M22', 'L3(4)'): {7: 2},
    ('M22', 'A7'): {5: 1, 7: 2},
    ('M22', "A7'"): {5: 1, 7: 2},
    ('M22', '2^4:S5'): {5: 1},
    ('M22', '2^3:L3(2)'): {7: 2},
    ('M22', 'A6.2_3'): {5: 1},
    ('M22', 'L2(11)'): {11: 2},
    ('M22.2', 'L3(4).2_2'): {7: 2},
    ('M22.2', '2^5.S5'): {5: 1},
    ('M22.2', '2x2^3:L3(2)'): {7: 2},
    ('M22.2', 'A6.2^2'): {5: 1},
    ('M22.2', 'L2(11).2'): {11: 1},
    ('M23', 'M22'): {11: 2},
    ('M23', 'L3(4).2_2'): {7: 2},
    ('M23', '2^4:A7'): {7: 2},
    ('M23', 'A8'): {5: 1},
    ('M23', 'M11'): {11: 2},
    ('M23', '2^4:(3xA5).2'): {5: 1},
    ('M23', '23:11'): {23: 2},
}

SPORADIC_ORDER = ['m11', 'm12', 'm12_2', 'm22', 'm22_2', 'm23']

_dataset_cache = {}


def load_corpus_dataset(name, config=None):
    data_dir = config.data_dir if config else None
    key = (name, str(data_dir))
    if key not in _dataset_cache:
        _dataset_cache[key] = load_builtin_dataset(name, data_dir=data_dir)
    return _dataset_cache[key]


def sporadic_primes(group):
    return _prime_divisors(group.order())


def cmd_sporadic(config, only=None):
    """Reproduce the qsr rows of the Mathieu coset actions and diff them
    against the embedded expected table."""
    rng = config.rng()
    report = Report('sporadic', config, version=__version__)
    names = SPORADIC_ORDER if only is None else [only]
    for name in names:
        try:
            ds = load_corpus_dataset(name, config)
        except (DatasetError, FileNotFoundError) as exc:
            report.add('dataset-error', dataset=name, error=str(exc),
                       status='FAIL')
            continue
        G = ds.group
        if G.order() > config.max_order:
            report.add('skipped', dataset=name, reason='max-order budget')
            continue
        for handle in ds.subgroups:
            index = handle.index()
            if index > config.max_degree:
                report.add('skipped', dataset=name, subgroup=handle.name,
                           reason='max-degree budget')
                continue
            action = coset_action(G, handle.group,
                                  name=f'{ds.name} on [G:{handle.name}]')
            action.stabilizer = handle
            scanned = scan_action(action, sporadic_primes(G), rng=rng)
            computed = {p: scanned.class_count(p) for p in scanned.qsr_primes}
            expected = EXPECTED_SPORADIC.get((ds.name, handle.name))
            heur = scanned.heuristic_primes()
            if expected is None:
                report.add('row', group=ds.name, subgroup=handle.name,
                           index=index, computed=computed,
                           expected='(none embedded)', status='WARN')
            else:
                ok = computed == expected
                report.add('row', group=ds.name, subgroup=handle.name,
                           index=index, computed=computed, expected=expected,
                           heuristic=bool(heur),
                           status='PASS' if ok else 'FAIL')
    return report.finish()


# ------------------------------------------------------------ structural

def cmd_structural(config):
    """Product-action, diagonal and doubled-action theorems at desk scale."""
    rng = config.rng()
    report = Report('structural', config, version=__version__)

    for (k, ell) in ((3, 2), (4, 2), (5, 2), (3, 3)):
        group, in_base, pa = make_product_action(k, ell)
        action = pa.action()
        qsr_total = 0
        violations = 0
        for g in group.elements():
            cert = is_qsr_direct(action, g)
            if cert is None:
                continue
            qsr_total += 1
            o = g.order()
            if all(o % d for d in range(2, o)) and o > 1:  # prime order
                if not in_base(g):
                    violations += 1
                else:
                    for coord in range(ell):
                        comp = pa.component(g, coord)
                        comp_action = natural_action(
                            PermGroup(k, [comp]), name='component')
                        if is_qsr_direct(comp_action, comp) is None:
                            violations += 1
        ok = qsr_total > 0 and violations == 0
        report.add('product-action', k=k, ell=ell, order=group.order(),
                   qsr_elements=qsr_total, violations=violations,
                   status='PASS' if ok else 'FAIL')

    # the order-4 element outside the base group whose square is qsr
    _, in_base5, pa5 = make_product_action(5, 2)
    h = [Permutation.from_cycles(5, [(0, 1)]),
         Permutation.from_cycles(5, [(2, 3)])]
    sigma = Permutation.from_cycles(2, [(0, 1)])
    g = pa5.embed_pair(h, sigma)
    action5 = pa5.action()
    cert = is_qsr_direct(action5, g)
    square = is_qsr_direct(action5, g * g)
    ok = (g.order() == 4 and cert is not None and square is not None
          and not in_base5(g))
    report.add('product-action-order4', order=g.order(),
               outside_base=not in_base5(g),
               qsr=cert is not None, square_qsr=square is not None,
               status='PASS' if ok else 'FAIL')

    # diagonal fixed-coset counts
    a5 = make_sym_alt(5, alternating=True)
    psl27 = projective_line_group(7, 'psl', name='PSL(2,7)')
    for T in (a5, psl27):
        t_order = T.order()
        for k in (2, 3, 5, 7, 11, 13):
            count = sd_fixed_coset_count(T, k)
            expected_one = t_order % k != 0
            ok = (count == 1) == expected_one
            report.add('diagonal-count', T=T.name, k=k, count=count,
                       coprime=expected_one,
                       status='PASS' if ok else 'FAIL')

    # the k = 2 diagonal model: rotation fixes exactly the algebraic count
    sd = make_sd_small(a5, 2)
    fixed = len(sd.top_cycle_image.fixed_points())
    ok = fixed == sd_fixed_coset_count(a5, 2)
    report.add('diagonal-model', T='Alt(5)', k=2, degree=sd.degree,
               rotation_fixed=fixed, status='PASS' if ok else 'FAIL')

    # doubled action: no prime-order qsr under any flag choice
    outer = Permutation.from_cycles(5, [(0, 1)])
    for include_swap in (False, True):
        for include_outer in (False, True):
            inst = make_hs_type(a5, include_swap=include_swap,
                                include_outer=include_outer,
                                outer_perm=outer)
            bad = 0
            for g in inst.source.elements():
                o = g.order()
                if o > 1 and all(o % d for d in range(2, o)):
                    if is_qsr_direct(inst, g) is not None:
                        bad += 1
            report.add('doubled-action', swap=include_swap,
                       outer=include_outer, order=inst.source.order(),
                       qsr_prime_order=bad,
                       status='PASS' if bad == 0 else 'FAIL')
    return report.finish()


# ------------------------------------------------------------ affine

def affine_instances():
    """Every 2-transitive or 3/2-transitive affine instance of degree <= 841
    that the constructors can build, plus the 27-point counterexample."""
    out = []
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29):
        out.append((f'AGL(1,{p})', agammal1_action(p), True))
    for q in (8, 9, 16, 27, 32, 64):
        out.append((f'AGammaL(1,{q})', agammal1_action(q), True))
    for q in (5, 7, 9):
        out.append((f'V:S0({q})', s0_affine_action(q), True))
    for q in (9, 11, 19, 29):
        out.append((f'V:SL(2,5)@{q * q}', sl25_affine_action(q), True))
    out.append(('3^3:Alt(4)', alt4_matrix_action(), False))
    return out


def cmd_affine(config):
    rng = config.rng()
    report = Report('affine', config, version=__version__)
    for name, group, expect_qsr in affine_instances():
        if group.degree > config.max_degree or group.order() > config.max_order:
            report.add('skipped', instance=name, reason='budget')
            continue
        action = natural_action(group, name=name)
        scanned = scan_action(action, _prime_divisors(group.order()), rng=rng)
        exists = bool(scanned.qsr_primes)
        report.add('affine', instance=name, degree=group.degree,
                   order=group.order(), qsr_primes=scanned.qsr_primes,
                   exists=exists, expected=expect_qsr,
                   status='PASS' if exists == expect_qsr else 'FAIL')
    return report.finish()


# ------------------------------------------------------------ verify suites

def _suite_perm_core(config, report):
    rng = config.rng()
    ok = True
    for n in range(3, 13):
        sym = make_sym_alt(n)
        alt = make_sym_alt(n, alternating=True)
        ok = ok and sym.order() == math.factorial(n)
        ok = ok and alt.order() == math.factorial(n) // 2
    group, _, _ = make_product_action(5, 2)
    seen = set(group.element_images(limit=10 ** 6))
    ok = ok and len(seen) == group.order()
    # membership agrees with a linear scan on a small group
    small = projective_line_group(7, 'psl')
    elements = set(small.element_images())
    s8 = make_sym_alt(8)
    for _ in range(200):
        probe = s8.random_element(rng).images
        ok = ok and (probe in elements) == small.contains_images(probe)
    report.add('suite', name='perm-core', status='PASS' if ok else 'FAIL')
    return ok


def _suite_block_reduction(config, report):
    """Induced permutations of qsr elements on block systems stay qsr."""
    rng = config.rng()
    corpus = []
    for (k, ell) in ((3, 2), (4, 2)):
        _, _, pa = make_product_action(k, ell)
        corpus.append(pa.action())
    c6 = PermGroup(6, [Permutation.from_cycles(6, [tuple(range(6))])], name='C6')
    corpus.append(natural_action(c6))
    s4 = make_sym_alt(4)
    h = SubgroupHandle(s4, [Permutation.from_cycles(4, [(0, 1)])], name='C2')
    corpus.append(coset_action(s4, h.group, name='S4 on [S4:C2]'))
    corpus.append(ksubset_action(make_sym_alt(6), 2))
    ok = True
    for action in corpus:
        if action.degree > 200:
            continue
        systems = iterated_block_systems(action)
        for g in action.source.elements(limit=10 ** 5):
            cert = is_qsr_direct(action, g)
            if cert is None:
                continue
            for system in systems:
                induced = induced_block_action(action, system)
                if is_qsr_direct(induced, g) is None:
                    ok = False
    report.add('suite', name='block-reduction', status='PASS' if ok else 'FAIL')
    return ok


def _suite_overgroup(config, report):
    """qsr on the cosets of H lifts to the cosets of any overgroup K."""
    ok = True
    ds = load_corpus_dataset('m11', config)
    G = ds.group
    l2 = ds.subgroup('L2(11)')
    rng = config.rng()
    x = None
    while x is None:
        g = l2.group.random_element(rng)
        if g.order() == 11:
            x = g
    sub = normalizer_of_cyclic(G, x)
    ok = ok and sub.order() == 55
    small = coset_action(G, sub.group, name='M11 on [G:11:5]')
    big = coset_action(G, l2.group, name='M11 on [G:L2(11)]')
    ok = ok and is_qsr_direct(small, x) is not None
    ok = ok and is_qsr_direct(big, x) is not None
    report.add('suite', name='overgroup-lift', status='PASS' if ok else 'FAIL')
    return ok


def _suite_counting(config, report):
    ok = True
    rng = config.rng()
    ds = load_corpus_dataset('m11', config)
    G = ds.group
    # counting agreement on M11's rows for prime-order classes
    for handle in ds.subgroups:
        action = coset_action(G, handle.group)
        for p in (2, 3, 5, 11):
            for c in conjugacy_classes(G, order_filter=p, rng=rng):
                formula = fixed_points_formula(G, handle, c.rep,
                                               class_orbit=c.orbit)
                direct = len(action.act(c.rep).fixed_points())
                ok = ok and formula == direct
                manning = fixed_points_manning(G, handle, c.rep)
                ok = ok and manning == direct
    report.add('suite', name='counting', status='PASS' if ok else 'FAIL')
    return ok


def _suite_routes(config, report):
    ok = True
    rng = config.rng()
    for name in ('m11', 'm12'):
        ds = load_corpus_dataset(name, config)
        G = ds.group
        for handle in ds.subgroups:
            action = coset_action(G, handle.group)
            action.stabilizer = handle
            for p in _prime_divisors(G.order()):
                for c in conjugacy_classes(G, order_filter=p, rng=rng):
                    direct = is_qsr_direct(action, c.rep) is not None
                    fus = is_qsr_fusion(action, c.rep, class_orbit=c.orbit)
                    nor = is_qsr_normalizer(action, c.rep, class_orbit=c.orbit)
                    if not direct == fus == nor:
                        ok = False
    report.add('suite', name='routes', status='PASS' if ok else 'FAIL')
    return ok


def _suite_embedded(config, report):
    ok = True
    # Alt(6) with the Sylow-3 normalizer, degree 10
    alt6 = make_sym_alt(6, alternating=True)
    P = PermGroup(6, [Permutation.from_cycles(6, [(0, 1, 2)]),
                      Permutation.from_cycles(6, [(3, 4, 5)])])
    n36 = _normalizer_by_scan(alt6, P)
    handle = SubgroupHandle(alt6, n36, name='N(Sylow3)')
    ok = ok and handle.order() == 36
    ok = ok and is_strongly_p_embedded(alt6, handle, 3)
    action = coset_action(alt6, handle.group)
    for cls in handle.element_order_classes(3):
        ok = ok and is_qsr_direct(action, cls['rep']) is not None
    # PSL(2,8) with the normalizer of a Sylow-3 (cyclic of order 9)
    psl28 = projective_line_group(8, 'psl', name='PSL(2,8)')
    rng = config.rng()
    x9 = None
    while x9 is None:
        g = psl28.random_element(rng)
        if g.order() == 9:
            x9 = g
    n18 = normalizer_of_cyclic(psl28, x9)
    ok = ok and n18.order() == 18
    ok = ok and is_strongly_p_embedded(psl28, n18, 3)
    action = coset_action(psl28, n18.group)
    for cls in n18.element_order_classes(3):
        ok = ok and is_qsr_direct(action, cls['rep']) is not None
    report.add('suite', name='strongly-embedded', status='PASS' if ok else 'FAIL')
    return ok


def _normalizer_by_scan(G, S):
    from .structure import _normalizer_in
    return _normalizer_in(G, S)


def _suite_prediction(config, report, max_n=10):
    rng = config.rng()
    ok = True
    for n in range(5, max_n + 1):
        for alternating in (False, True):
            G = make_sym_alt(n, alternating=alternating)
            for k in range(1, (n + 1) // 2):
                if not 1 <= k < n / 2:
                    continue
                action = ksubset_action(G, k)
                scanned = scan_action(action, _primes_up_to(n), rng=rng)
                pred = predict_sym_alt(n, 'ksubsets', k, alternating=alternating)
                ok = ok and set(scanned.qsr_primes) == pred['primes']
            for k in range(2, n // 2 + 1):
                if n % k:
                    continue
                action = partition_action(G, k)
                scanned = scan_action(action, _primes_up_to(n), rng=rng)
                pred = predict_sym_alt(n, 'partitions', k, alternating=alternating)
                ok = ok and set(scanned.qsr_primes) == pred['primes']
    report.add('suite', name='prediction', status='PASS' if ok else 'FAIL')
    return ok


VERIFY_SUITES = {
    'perm-core': _suite_perm_core,
    'block-reduction': _suite_block_reduction,
    'overgroup-lift': _suite_overgroup,
    'counting': _suite_counting,
    'routes': _suite_routes,
    'strongly-embedded': _suite_embedded,
    'prediction': _suite_prediction,
}


def cmd_verify(config, suite=None):
    report = Report('verify', config, version=__version__)
    names = [suite] if suite else list(VERIFY_SUITES)
    for name in names:
        if name not in VERIFY_SUITES:
            raise ValueError(f'unknown suite {name!r}; '
                             f'choose from {sorted(VERIFY_SUITES)}')
        VERIFY_SUITES[name](config, report)
    return report.finish()
