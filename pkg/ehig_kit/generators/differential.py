"""Differential runs of the polynomial algorithms against exhaustive oracles"""

import logging
import random
from dataclasses import dataclass, field

from ..core.config import DEFAULT_MAX_MEMBERSHIP_POINTS, DEFAULT_MAX_POINTS
from ..core.errors import GuardExceededError
from ..ehig.recognizer import recognize, verify_certificate
from ..hyperkit.solvers import (
    brute_force_ehs,
    brute_force_min_membership,
    min_membership_hitting,
)
from .random_models import model_graph, random_hypergraph, random_interval_model

logger = logging.getLogger(__name__)

DECISION = "decision"
MMSC = "mmsc"


@dataclass(frozen=True)
class OracleCase:
    """One case whose two answers differ"""

    index: int
    seed: int
    size: int
    polynomial: str
    oracle: str


@dataclass
class OracleRun:
    kind: str
    cases: int
    seed: int
    agreements: int = 0
    skipped: int = 0
    unverified: int = 0
    disagreements: list[OracleCase] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.disagreements and self.unverified == 0


def run_decision_oracle(
    cases: int,
    max_size: int = 9,
    seed: int = 0,
    point_budget: int = DEFAULT_MAX_POINTS,
) -> OracleRun:
    """recognize() against brute-force exact hitting on the canonical model

    Case ``i`` draws a random interval graph on 1..max_size vertices from
    seed ``seed + i``. Certificates are re-verified; unverifiable ones count
    against the run.
    """
    run = OracleRun(kind=DECISION, cases=cases, seed=seed)
    for index in range(cases):
        case_seed = seed + index
        rng = random.Random(case_seed)
        size = rng.randint(1, max_size)
        graph = model_graph(random_interval_model(size, rng))
        certificate = recognize(graph)
        try:
            exact = brute_force_ehs(certificate.model.hypergraph, point_budget)
        except GuardExceededError as e:
            logger.warning(f"Case {index} skipped: {e}")
            run.skipped += 1
            continue
        polynomial = certificate.verdict.value
        oracle = "ehig" if exact is not None else "not-ehig"
        if polynomial != oracle:
            run.disagreements.append(
                OracleCase(index, case_seed, size, polynomial, oracle)
            )
            continue
        run.agreements += 1
        if not verify_certificate(certificate) or (
            not certificate.is_ehig and certificate.witness is None
        ):
            logger.warning(f"Case {index} (seed {case_seed}): unverifiable certificate")
            run.unverified += 1
    logger.debug(
        f"Decision oracle: {run.agreements} agree, {len(run.disagreements)} disagree"
    )
    return run


def run_mmsc_oracle(
    cases: int,
    max_size: int = 15,
    seed: int = 0,
    point_budget: int = DEFAULT_MAX_MEMBERSHIP_POINTS,
) -> OracleRun:
    """min_membership_hitting() against the exhaustive minimax"""
    run = OracleRun(kind=MMSC, cases=cases, seed=seed)
    for index in range(cases):
        case_seed = seed + index
        rng = random.Random(case_seed)
        size = rng.randint(1, max_size)
        hypergraph = random_hypergraph(size, rng)
        try:
            expected = brute_force_min_membership(hypergraph, point_budget)
        except GuardExceededError as e:
            logger.warning(f"Case {index} skipped: {e}")
            run.skipped += 1
            continue
        actual = min_membership_hitting(hypergraph)
        if actual.k != expected.k:
            run.disagreements.append(
                OracleCase(index, case_seed, size, str(actual.k), str(expected.k))
            )
        else:
            run.agreements += 1
    logger.debug(
        f"MMSC oracle: {run.agreements} agree, {len(run.disagreements)} disagree"
    )
    return run
