# -*- coding: utf-8 -*-
"""The verification suites.

Every suite expands its protocol inputs into independent tasks, one per prime or per period where possible. A task is a
:class:`functools.partial` of a module level function returning a list of :class:`~.report.CheckRecord`, so that it
can be sent to a worker process. The suite functions of :data:`SUITES` run their tasks sequentially.
"""
from __future__ import annotations

import collections
import functools
from typing import Callable, Dict, Iterable, List, Tuple

from aiida.common import AttributeDict
from aiida.common.log import AIIDA_LOGGER
import numpy
import sympy

from cyclotomic_sequences.constructions import (
    COVERED_TRIPLES,
    PairingVariant,
    build_dhm,
    build_order8,
    build_shen,
    build_tang_lindner,
    chung_quaternary,
    dhm_triple_lists,
    expected_order8_counts,
    expected_order8_profile,
    expected_tang_lindner_counts,
    expected_tang_lindner_profile,
    pairing_symbol_counts,
    predict_pairing_balance,
    verify_shen_equivalence,
)
from cyclotomic_sequences.cyclotomy import (
    build_system,
    cyclotomic_numbers,
    find_primitive_root,
    order4_formula_table,
    order8_admissibility,
    order8_formula_table,
    primitive_roots,
)
from cyclotomic_sequences.exceptions import AdmissibilityError, ConventionError, InapplicableError
from cyclotomic_sequences.lincomp import (
    berlekamp_massey,
    check_pairing_minpoly,
    complement_minpoly,
    gray_pair_polynomial,
    is_zero,
    minimal_polynomial,
    predicted_order8_complexity,
    predicted_tang_lindner_complexity,
    seq_polynomial,
    x_n_minus_one,
)
from cyclotomic_sequences.seqcore import (
    CorrelationProfile,
    PeriodicSeq,
    autocorrelation_profile,
    balance_counts,
    complement,
    correlation_values,
    gray_combine,
    gray_correlation_values,
    shift,
)

from .report import CheckRecord, check

__all__ = ('SUITES', 'SUITE_TASKS', 'suite_tasks', 'run_tasks', 'order8_primes', 'shen_primes')

LOGGER = AIIDA_LOGGER.getChild('cyclotomic_sequences.verification')

Task = Callable[[], List[CheckRecord]]

ANCHOR_CLASSES = 'cyclotomic classes partition the nonzero residues'
ANCHOR_NUMBERS = 'properties of cyclotomic numbers'
ANCHOR_ORDER4 = 'closed form of the cyclotomic numbers of order four'
ANCHOR_ORDER8_TABLE = 'closed form of the cyclotomic numbers of order eight'
ANCHOR_ORDER8 = 'balanced quaternary sequences from classes of order eight'
ANCHOR_TANG_LINDNER = 'quaternary Gray sequences from classes of order four'
ANCHOR_GRAY = 'autocorrelation of a Gray combination from binary correlations'
ANCHOR_PAIRING = 'pairing preserves the autocorrelation of the binary source'
ANCHOR_PAIRING_BALANCE = 'balance of paired sequences'
ANCHOR_SHEN = 'equivalence of the level-set construction with the modified pairing'
ANCHOR_TL_COMPLEXITY = 'linear complexity of the quaternary Gray sequences'
ANCHOR_ORDER8_COMPLEXITY = 'observed linear complexity of the order eight sequences'
ANCHOR_ORACLE = 'Berlekamp-Massey agrees with the gcd formula'
ANCHOR_COMPLEMENT = 'minimal polynomial of the complement'
ANCHOR_SHIFT = 'the minimal polynomial is invariant under cyclic shifts'
ANCHOR_PAIRING_MINPOLY = 'pairing preserves the minimal polynomial'

SHEN_EXAMPLES = {
    'dhm': '1010001101',
    'shen': '2031002312',
}


def _rng(*seed: int) -> numpy.random.Generator:
    return numpy.random.default_rng(list(seed))


def _random_sequence(rng: numpy.random.Generator, period: int, modulus: int = 2) -> PeriodicSeq:
    return PeriodicSeq.from_array(rng.integers(0, modulus, size=period), modulus=modulus)


def _random_weighted(rng: numpy.random.Generator, period: int, weight: int) -> PeriodicSeq:
    values = numpy.zeros(period, dtype=numpy.int64)
    values[rng.choice(period, size=weight, replace=False)] = 1
    return PeriodicSeq.from_array(values, modulus=2)


def _generators(p: int, all_generators: bool) -> Tuple[int, ...]:
    if all_generators:
        return primitive_roots(p)

    return (find_primitive_root(p),)


def _primes(max_p: int, residue: int = 1, modulus: int = 1) -> List[int]:
    return [p for p in sympy.primerange(3, max_p + 1) if p % modulus == residue % modulus]


def order8_primes(max_p: int) -> List[int]:
    """Return the primes up to ``max_p`` admissible for the order-eight construction."""
    return [p for p in _primes(max_p, 1, 16) if order8_admissibility(p)]


def shen_primes(max_p: int) -> List[int]:
    """Return the primes up to ``max_p`` for which the interleaved binary construction has an active triple list."""
    primes = []

    for p in _primes(max_p, 5, 8):
        try:
            dhm_triple_lists(p)
        except AdmissibilityError:
            continue
        primes.append(p)

    return primes


def _log_records(records: List[CheckRecord]) -> List[CheckRecord]:
    for record in records:
        outcome = 'passed' if record.passed else f'failed: expected {record.expected}, got {record.actual}'
        LOGGER.debug(f'{record.name} for {record.parameters} {outcome}')

    return records


def check_cyclotomic_numbers(p: int, orders: Tuple[int, ...], all_generators_max_p: int) -> List[CheckRecord]:
    """Check the partition, the row sums, the symmetries and the closed forms of the cyclotomic numbers of ``p``."""
    records = []

    for e in orders:
        if (p - 1) % e:
            continue

        system = build_system(p, e)
        table = cyclotomic_numbers(system)
        parameters = {'p': p, 'e': e, 'generator': system.generator}
        expected = {'sizes': [system.f] * e, 'covered': p - 1}
        actual = {
            'sizes': [len(members) for members in system.classes],
            'covered': len(frozenset().union(*system.classes)),
        }
        row_sums = table.row_sums()
        negation = table.satisfies_negation_symmetry()

        records.append(check('class-partition', ANCHOR_CLASSES, parameters, expected, actual))
        records.append(check('row-sums', ANCHOR_NUMBERS, parameters, table.expected_row_sums(system), row_sums))
        records.append(check('negation-symmetry', ANCHOR_NUMBERS, parameters, True, negation))
        records.append(check('parity-symmetry', ANCHOR_NUMBERS, parameters, True, table.satisfies_parity_symmetry()))

        if e == 4:
            records.append(
                _closed_form_record('order4-closed-form', ANCHOR_ORDER4, parameters, order4_formula_table, p)
            )

        if e == 8 and order8_admissibility(p):
            records.append(
                _closed_form_record('order8-closed-form', ANCHOR_ORDER8_TABLE, parameters, order8_formula_table, p)
            )

        if p <= all_generators_max_p:
            reference = _sorted_entries(table)
            disagreeing = [
                generator for generator in primitive_roots(p)
                if _sorted_entries(cyclotomic_numbers(build_system(p, e, generator))) != reference
            ]
            records.append(check('generator-independence', ANCHOR_NUMBERS, parameters, [], disagreeing))

    return _log_records(records)


def _sorted_entries(table) -> List[int]:
    return sorted(value for row in table.entries for value in row)


def _closed_form_record(name: str, anchor: str, parameters: dict, resolver, p: int) -> CheckRecord:
    try:
        signs = resolver(p, generator=parameters['generator']).signs
    except ConventionError as exception:
        return check(name, anchor, parameters, 'match', str(exception))

    return check(name, anchor, dict(parameters, signs=signs), 'match', 'match')


def check_order8_prime(p: int, all_generators: bool) -> List[CheckRecord]:
    """Check the autocorrelation distribution and the symbol counts of the order-eight sequences of ``p``."""
    records = []
    expected_profile = CorrelationProfile.from_distribution(expected_order8_profile(p)).as_records()
    expected_counts = list(expected_order8_counts(p))

    for generator in _generators(p, all_generators):
        sequence = build_order8(p, generator)
        parameters = {'p': p, 'generator': generator}
        records.append(
            check(
                'order8-profile', ANCHOR_ORDER8, parameters, expected_profile,
                autocorrelation_profile(sequence).as_records()
            )
        )
        records.append(
            check('order8-balance', ANCHOR_ORDER8, parameters, expected_counts, list(balance_counts(sequence).counts))
        )

        if (p, generator) == (17, 3):
            example = sequence.to_string()
            records.append(check('order8-example', ANCHOR_ORDER8, parameters, '02012331001332102', example))

    return _log_records(records)


def check_tang_lindner_prime(p: int, all_generators: bool) -> List[CheckRecord]:
    """Check the autocorrelation distribution and the symbol counts of the covered triples of ``p``."""
    records = []
    expected_profile = CorrelationProfile.from_distribution(expected_tang_lindner_profile(p)).as_records()
    expected_counts = list(expected_tang_lindner_counts(p))

    for generator in _generators(p, all_generators):
        for triple in COVERED_TRIPLES[((p - 1) // 4) % 2]:
            sequence = build_tang_lindner(p, triple, generator)
            parameters = {'p': p, 'generator': generator, 'indices': list(triple)}
            records.append(
                check(
                    'tang-lindner-profile', ANCHOR_TANG_LINDNER, parameters, expected_profile,
                    autocorrelation_profile(sequence).as_records()
                )
            )
            records.append(
                check(
                    'tang-lindner-balance', ANCHOR_TANG_LINDNER, parameters, expected_counts,
                    list(balance_counts(sequence).counts)
                )
            )

    return _log_records(records)


def check_pairing_period(period: int, trials: int, gray_trials: int, seed: int) -> List[CheckRecord]:
    """Check both pairing variants on random binary sequences of one even ``period``.

    Half of the sources are uniformly random, the other half have a weight of ``N/2``, ``N/2 - 1`` or ``N/2 + 1`` so
    that the balance prediction applies to a fair share of them.
    """
    rng = _rng(seed, period)
    half = period // 2
    weights = (half, half - 1, half + 1)
    sources = [_random_sequence(rng, period) for _ in range(trials)]
    sources += [_random_weighted(rng, period, weights[index % 3]) for index in range(trials)]
    records = []

    for variant in PairingVariant:
        profile_mismatches = 0
        count_mismatches = 0
        balance_mismatches = 0
        applicable = 0

        for source in sources:
            paired = chung_quaternary(source, variant)
            observed = balance_counts(paired)

            if correlation_values(paired) != correlation_values(source):
                profile_mismatches += 1

            if pairing_symbol_counts(source, variant) != observed.counts:
                count_mismatches += 1

            try:
                predicted = predict_pairing_balance(source, variant)
            except InapplicableError:
                continue

            applicable += 1

            if predicted is not observed.classification:
                balance_mismatches += 1

        parameters = {'period': period, 'variant': variant.value, 'sources': len(sources)}
        records.append(check('pairing-autocorrelation', ANCHOR_PAIRING, parameters, 0, profile_mismatches))
        records.append(check('pairing-symbol-counts', ANCHOR_PAIRING_BALANCE, parameters, 0, count_mismatches))
        parameters = dict(parameters, applicable=applicable)
        records.append(check('pairing-balance', ANCHOR_PAIRING_BALANCE, parameters, 0, balance_mismatches))

    gray_mismatches = 0

    for _ in range(gray_trials):
        first = _random_sequence(rng, period)
        second = _random_sequence(rng, period)

        if gray_correlation_values(first, second) != correlation_values(gray_combine(first, second)):
            gray_mismatches += 1

    records.append(check('gray-correlation', ANCHOR_GRAY, {'period': period, 'pairs': gray_trials}, 0, gray_mismatches))

    return _log_records(records)


def check_pairing_example() -> List[CheckRecord]:
    """Check the modified pairing of the smallest interleaved binary sequence."""
    source = build_dhm(5, (0, 1, 2), 2)
    paired = chung_quaternary(source, PairingVariant.SHIFT_COMPLEMENT)
    parameters = {'p': 5, 'generator': 2, 'indices': [0, 1, 2], 'variant': PairingVariant.SHIFT_COMPLEMENT.value}

    record = check('pairing-example', ANCHOR_PAIRING, parameters, SHEN_EXAMPLES['shen'], paired.to_string())
    return _log_records([record])


def check_shen_prime(p: int, all_generators: bool) -> List[CheckRecord]:
    """Check the equivalence for every active triple of ``p`` and the consistency of the resolved orientations."""
    records = []
    orientations = collections.defaultdict(set)

    for generator in _generators(p, all_generators):
        report = verify_shen_equivalence(p, generator)

        for result in report.checks:
            flags = result.as_dict()
            parameters = {
                'p': p,
                'generator': generator,
                'b_sign': report.b_sign,
                'list': result.triple_list,
                'indices': list(result.triple),
                'orientation': result.orientation.value,
            }
            names = ('level_sets', 'partition', 'shen_shape', 'balanced', 'optimal', 'shift_only_differs')
            expected = {name: True for name in names}
            actual = {name: flags[name] for name in names}
            records.append(check('shen-equivalence', ANCHOR_SHEN, parameters, expected, actual))
            orientations[(report.b_sign, result.triple_list, result.triple)].add(result.orientation.value)

    conflicts = [
        {'b_sign': b_sign, 'list': triple_list, 'indices': list(triple), 'orientations': sorted(values)}
        for (b_sign, triple_list, triple), values in sorted(orientations.items()) if len(values) > 1
    ]
    records.append(check('shen-orientation', ANCHOR_SHEN, {'p': p}, [], conflicts))

    return _log_records(records)


def check_shen_examples() -> List[CheckRecord]:
    """Check the interleaved binary and the level-set sequence of period ten."""
    parameters = {'p': 5, 'generator': 2, 'indices': [0, 1, 2]}
    actual = {
        'dhm': build_dhm(5, (0, 1, 2), 2).to_string(),
        'shen': build_shen(5, (0, 1, 2), 2).to_string(),
    }
    return _log_records([check('shen-example', ANCHOR_SHEN, parameters, SHEN_EXAMPLES, actual)])


def check_tang_lindner_complexity(p: int, all_generators: bool) -> List[CheckRecord]:
    """Compare the computed linear complexity of the covered triples of ``p`` with the prediction."""
    records = []
    expected = predicted_tang_lindner_complexity(p)

    for generator in _generators(p, all_generators):
        for triple in COVERED_TRIPLES[((p - 1) // 4) % 2]:
            parameters = {'p': p, 'generator': generator, 'indices': list(triple)}
            actual = minimal_polynomial(build_tang_lindner(p, triple, generator)).linear_complexity
            records.append(check('tang-lindner-complexity', ANCHOR_TL_COMPLEXITY, parameters, expected, actual))

    return _log_records(records)


def check_order8_complexity(p: int) -> List[CheckRecord]:
    """Compare the computed linear complexity of the order-eight sequence of ``p`` with ``(p - 1) / 2``."""
    generator = find_primitive_root(p)
    actual = minimal_polynomial(build_order8(p, generator)).linear_complexity
    parameters = {'p': p, 'generator': generator}

    return _log_records([
        check('order8-complexity', ANCHOR_ORDER8_COMPLEXITY, parameters, predicted_order8_complexity(p), actual)
    ])


def check_oracle(modulus: int, trials: int, max_period: int, seed: int, chunk: int) -> List[CheckRecord]:
    """Compare Berlekamp-Massey with the gcd formula on random sequences over the field matching ``modulus``.

    The same sequences are used to check that the minimal polynomial divides ``x^N - 1`` and is invariant under shifts.
    """
    rng = _rng(seed, modulus, chunk)
    mismatches = []
    not_dividing = 0
    shift_variant = 0

    for _ in range(trials):
        period = int(rng.integers(1, max_period + 1))
        sequence = _random_sequence(rng, period, modulus)
        reference = minimal_polynomial(sequence)
        synthesized = berlekamp_massey(sequence)

        if synthesized.minpoly != reference.minpoly:
            mismatches.append(sequence.to_string())

        if not is_zero(x_n_minus_one(period, reference.minpoly.field) % reference.minpoly):
            not_dividing += 1

        if minimal_polynomial(shift(sequence, int(rng.integers(period)))).minpoly != reference.minpoly:
            shift_variant += 1

    parameters = {'alphabet': modulus, 'trials': trials, 'max_period': max_period, 'chunk': chunk}

    return _log_records([
        check('berlekamp-massey-oracle', ANCHOR_ORACLE, parameters, [], mismatches),
        check('minpoly-divides', ANCHOR_ORACLE, parameters, 0, not_dividing),
        check('minpoly-shift-invariance', ANCHOR_SHIFT, parameters, 0, shift_variant),
    ])


def check_complement_rule(trials: int, max_period: int, seed: int) -> List[CheckRecord]:
    """Compare the complement rule with the directly computed minimal polynomial of the complement."""
    rng = _rng(seed, 2)
    mismatches = []

    for _ in range(trials):
        sequence = _random_sequence(rng, int(rng.integers(1, max_period + 1)))
        predicted = complement_minpoly(minimal_polynomial(sequence).minpoly)

        if predicted != minimal_polynomial(complement(sequence)).minpoly:
            mismatches.append(sequence.to_string())

    parameters = {'trials': trials, 'max_period': max_period}
    return _log_records([check('complement-rule', ANCHOR_COMPLEMENT, parameters, [], mismatches)])


def check_gray_polynomials(trials: int, max_period: int, seed: int) -> List[CheckRecord]:
    """Check that the Gray-pair encoding coincides with the symbol encoding of the combined sequence."""
    rng = _rng(seed, 3)
    mismatches = 0

    for _ in range(trials):
        period = int(rng.integers(1, max_period + 1))
        first = _random_sequence(rng, period)
        second = _random_sequence(rng, period)

        if gray_pair_polynomial(first, second) != seq_polynomial(gray_combine(first, second)):
            mismatches += 1

    parameters = {'trials': trials, 'max_period': max_period}
    return _log_records([check('gray-polynomial', ANCHOR_PAIRING_MINPOLY, parameters, 0, mismatches)])


def check_pairing_minpoly_random(trials: int, max_period: int, seed: int) -> List[CheckRecord]:
    """Check the minimal polynomials of both pairings on random sources of even period.

    Sources are drawn until ``trials`` of them satisfy the condition of the shift-and-complement variant.
    """
    rng = _rng(seed, 4)
    failures = {variant: 0 for variant in PairingVariant}
    unconditioned = 0
    conditioned = 0
    drawn = 0

    while (unconditioned < trials or conditioned < trials) and drawn < 50 * trials:
        drawn += 1
        period = 2 * int(rng.integers(1, max_period // 2 + 1))
        report = check_pairing_minpoly(_random_sequence(rng, period))

        for result in report.checks:
            if result.variant is PairingVariant.SHIFT_ONLY:
                if unconditioned >= trials:
                    continue
                unconditioned += 1
            else:
                if not result.condition_met or conditioned >= trials:
                    continue
                conditioned += 1

            if not result.passed:
                failures[result.variant] += 1

    parameters = {'trials': trials, 'max_period': max_period}

    return _log_records([
        check('pairing-minpoly-shift-only', ANCHOR_PAIRING_MINPOLY, parameters, 0, failures[PairingVariant.SHIFT_ONLY]),
        check(
            'pairing-minpoly-shift-complement', ANCHOR_PAIRING_MINPOLY, dict(parameters, conditioned=conditioned), 0,
            failures[PairingVariant.SHIFT_COMPLEMENT]
        ),
        check('pairing-minpoly-sample', ANCHOR_PAIRING_MINPOLY, parameters, trials, conditioned),
    ])


def check_dhm_pairing_minpoly(p: int) -> List[CheckRecord]:
    """Check both pairings of the interleaved binary sequences of ``p`` and of their complements."""
    records = []
    generator = find_primitive_root(p)
    expected = {'condition_met': True, 'passed': True}

    for triple_list, triples in dhm_triple_lists(p).items():
        for triple in triples:
            source = build_dhm(p, triple, generator)

            for label, sequence in (('source', source), ('complement', complement(source))):
                report = check_pairing_minpoly(sequence)
                modified = next(c for c in report.checks if c.variant is PairingVariant.SHIFT_COMPLEMENT)
                parameters = {
                    'p': p,
                    'generator': generator,
                    'list': triple_list,
                    'indices': list(triple),
                    'sequence': label,
                }
                actual = {'condition_met': modified.condition_met, 'passed': report.passed}
                records.append(check('pairing-minpoly-dhm', ANCHOR_PAIRING_MINPOLY, parameters, expected, actual))

    return _log_records(records)


def cyclonumbers_tasks(inputs: AttributeDict) -> List[Task]:
    orders = tuple(inputs.orders)
    return [
        functools.partial(check_cyclotomic_numbers, p, orders, inputs.all_generators_max_p)
        for p in _primes(inputs.max_p)
    ]


def order8_tasks(inputs: AttributeDict) -> List[Task]:
    return [
        functools.partial(check_order8_prime, p, p <= inputs.all_generators_max_p) for p in order8_primes(inputs.max_p)
    ]


def tang_lindner_tasks(inputs: AttributeDict) -> List[Task]:
    return [
        functools.partial(check_tang_lindner_prime, p, inputs.all_generators) for p in _primes(inputs.max_p, 1, 4)
    ]


def chung_tasks(inputs: AttributeDict) -> List[Task]:
    first = inputs.min_period + inputs.min_period % 2
    tasks = [
        functools.partial(check_pairing_period, period, inputs.trials, inputs.gray_trials, inputs.seed)
        for period in range(first, inputs.max_period + 1, 2)
    ]
    return tasks + [functools.partial(check_pairing_example)]


def shen_tasks(inputs: AttributeDict) -> List[Task]:
    tasks = [functools.partial(check_shen_prime, p, inputs.all_generators) for p in shen_primes(inputs.max_p)]
    return tasks + [functools.partial(check_shen_examples)]


def lincomp_tasks(inputs: AttributeDict) -> List[Task]:
    tasks = [
        functools.partial(check_tang_lindner_complexity, p, inputs.all_generators)
        for p in _primes(inputs.max_p, 1, 4)
    ]
    tasks += [functools.partial(check_order8_complexity, p) for p in order8_primes(inputs.order8_max_p)]
    tasks += [functools.partial(check_dhm_pairing_minpoly, p) for p in shen_primes(inputs.max_p)]

    chunks = max(1, -(-inputs.oracle_trials // 100))

    for modulus in (2, 4):
        for chunk in range(chunks):
            trials = min(100, inputs.oracle_trials - 100 * chunk)
            tasks.append(
                functools.partial(check_oracle, modulus, trials, inputs.oracle_max_period, inputs.seed, chunk)
            )

    for function in (check_complement_rule, check_gray_polynomials):
        tasks.append(functools.partial(function, inputs.complement_trials, inputs.oracle_max_period, inputs.seed))
    tasks.append(
        functools.partial(check_pairing_minpoly_random, inputs.pairing_trials, inputs.pairing_max_period, inputs.seed)
    )

    return tasks


#: Expansion of the protocol inputs of each suite into its tasks.
SUITE_TASKS: Dict[str, Callable[[AttributeDict], List[Task]]] = {
    'cyclonumbers': cyclonumbers_tasks,
    'order8': order8_tasks,
    'tang-lindner': tang_lindner_tasks,
    'chung': chung_tasks,
    'shen-equiv': shen_tasks,
    'lincomp': lincomp_tasks,
}


def suite_tasks(suite: str, inputs: dict) -> List[Task]:
    """Return the tasks of ``suite`` for the protocol inputs of that suite."""
    return SUITE_TASKS[suite](AttributeDict(inputs))


def run_tasks(tasks: Iterable[Task]) -> List[CheckRecord]:
    """Run ``tasks`` in order and return the concatenation of their records."""
    return [record for task in tasks for record in task()]


def _suite(name: str) -> Callable[[AttributeDict], List[CheckRecord]]:

    def run(inputs: AttributeDict) -> List[CheckRecord]:
        return run_tasks(suite_tasks(name, inputs))

    run.__name__ = f'run_{name.replace("-", "_")}'
    return run


#: The suites as functions of their protocol inputs.
SUITES: Dict[str, Callable[[AttributeDict], List[CheckRecord]]] = {name: _suite(name) for name in SUITE_TASKS}
