"""Check suites: parameter grids of congruence certificates run as one batch."""

import logging
from dataclasses import dataclass, field
from functools import partial
from typing import Callable

from mock_eisenstein.completion.verifier import verify_completion
from mock_eisenstein.core.base_monitor import BaseCheckMonitor
from mock_eisenstein.core.certificate import CongruenceCertificate
from mock_eisenstein.core.check_entities import CheckSuiteResult
from mock_eisenstein.core.parallel import parallel_map
from mock_eisenstein.cli_interface.job_config import ChecksJob
from mock_eisenstein.eisenstein.cohen import plus_space_exponents
from mock_eisenstein.eisenstein.koblitz import koblitz_congruence_check, mock_koblitz_check
from mock_eisenstein.eisenstein.weight_two import weight_two_congruence_check
from mock_eisenstein.eisenstein.weights import HalfIntWeight
from mock_eisenstein.numtheory.arithmetic import negative_fundamental_discriminants
from mock_eisenstein.padic.checks import kummer_chain_check, proof_coefficient_congruence, zeta_scaling_check

logger = logging.getLogger(__name__)

CheckTask = Callable[[], CongruenceCertificate]


@dataclass
class SuiteConfig:
    """Defaults and grid builder of one suite."""
    description: str
    build_tasks: Callable[[ChecksJob], list[CheckTask]]
    default_primes: list[int] = field(default_factory=lambda: [5, 7])
    default_levels: list[int] = field(default_factory=lambda: [1])
    default_weights: list[int] = field(default_factory=list)
    default_precision: int = 50
    # Per-level overrides of default_precision; an explicit precision on the job wins.
    level_precision: dict[int, int] = field(default_factory=dict)
    expect_failure: bool = False


def _precision(job: ChecksJob, l: int | None = None) -> int:
    if job.precision is not None:
        return job.precision
    config = SUITE_CONFIG_MAP[job.suite]
    return config.level_precision.get(l, config.default_precision)


def _koblitz_tasks(job: ChecksJob) -> list[CheckTask]:
    weights = job.weights or SUITE_CONFIG_MAP["koblitz"].default_weights
    N = _precision(job)
    return [
        partial(koblitz_congruence_check, HalfIntWeight(twice_k), p, N)
        for twice_k in weights
        for p in job.primes
    ]


def _koblitz_negative_tasks(job: ChecksJob) -> list[CheckTask]:
    N = _precision(job)
    return [partial(mock_koblitz_check, p, N) for p in job.primes]


def _kummer_tasks(job: ChecksJob) -> list[CheckTask]:
    characters = negative_fundamental_discriminants(job.max_d0)
    return [
        partial(kummer_chain_check, chi, p, l)
        for p in job.primes
        for l in job.levels
        for chi in characters
    ]


def _zeta_tasks(job: ChecksJob) -> list[CheckTask]:
    return [partial(zeta_scaling_check, p, l) for p in job.primes for l in job.levels]


def _proof_tasks(job: ChecksJob) -> list[CheckTask]:
    exponents = [m for m in plus_space_exponents(job.max_m) if m > 0]
    return [
        partial(proof_coefficient_congruence, m, p, l)
        for p in job.primes
        for l in job.levels
        for m in exponents
    ]


def _weight_two_tasks(job: ChecksJob) -> list[CheckTask]:
    N = _precision(job)
    return [partial(weight_two_congruence_check, p, N) for p in job.primes]


def _completion_tasks(job: ChecksJob) -> list[CheckTask]:
    return [
        partial(verify_completion, p, l, _precision(job, l), allow_deep=job.allow_deep)
        for p in job.primes
        for l in job.levels
    ]


SUITE_CONFIG_MAP: dict[str, SuiteConfig] = {
    "koblitz": SuiteConfig(
        description="E_k = E_{k+p-1} mod p for Cohen weights k",
        build_tasks=_koblitz_tasks,
        default_primes=[3, 5, 7],
        default_weights=[7, 11, 15],
    ),
    "koblitz-negative": SuiteConfig(
        description="Koblitz-type congruence applied to E_{3/2} (expected to fail)",
        build_tasks=_koblitz_negative_tasks,
        default_primes=[5, 7],
        expect_failure=True,
    ),
    "kummer": SuiteConfig(
        description="L_p(0, chi omega) = L_p(1 - n, chi omega^n) mod p^l",
        build_tasks=_kummer_tasks,
        default_levels=[1, 2],
    ),
    "zeta": SuiteConfig(
        description="-6 zeta(-1 - p^(l-1)(p-1)) = (1 - p)/2 mod p^l",
        build_tasks=_zeta_tasks,
        default_primes=[5, 7, 11, 13],
        default_levels=[1, 2, 3],
    ),
    "proof": SuiteConfig(
        description="c_{m,k_l} = (1 - chi(p)) H(m) / zeta(2 - 2k_l) mod p^l",
        build_tasks=_proof_tasks,
        default_primes=[5, 7],
        default_levels=[1, 2],
    ),
    "weight-two": SuiteConfig(
        description="E_2 = E_{p+1} mod p",
        build_tasks=_weight_two_tasks,
        default_primes=[5, 7, 11, 13],
    ),
    "completion": SuiteConfig(
        description="Completed E_{3/2} = (1 - p)/2 E_{k_l} mod p^l",
        build_tasks=_completion_tasks,
        default_primes=[5, 7, 11, 13],
        default_levels=[1, 2],
        default_precision=100,
        level_precision={1: 200, 2: 100},
    ),
}


def get_config_for_suite(suite: str) -> SuiteConfig:
    if suite not in SUITE_CONFIG_MAP:
        raise ValueError(f"Unknown suite: {suite}. Available: {', '.join(SUITE_CONFIG_MAP)}")
    return SUITE_CONFIG_MAP[suite]


def _run_task(task: CheckTask) -> CongruenceCertificate:
    return task()


class CheckSuiteRunner:
    """Runs the grid of a suite over a worker pool and reports to an optional monitor."""

    def __init__(self, monitor: BaseCheckMonitor | None = None, workers: int = 1):
        self.monitor = monitor
        self.workers = workers

    def run(self, job: ChecksJob) -> CheckSuiteResult:
        config = get_config_for_suite(job.suite)
        tasks = config.build_tasks(job)
        if self.monitor:
            self.monitor.on_suite_start(job.suite, len(tasks))

        try:
            certificates = parallel_map(_run_task, tasks, workers=self.workers)
        except Exception as e:
            if self.monitor:
                self.monitor.on_error(job.suite, e)
            raise

        result = CheckSuiteResult(
            suite=job.suite, certificates=certificates, expect_failure=config.expect_failure
        )
        if self.monitor:
            for index, certificate in enumerate(certificates):
                self.monitor.on_check_complete(index, certificate)
            self.monitor.on_suite_complete(result)
        return result
