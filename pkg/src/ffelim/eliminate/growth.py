"""Term-growth benchmark: Euclidean expansion against the resultant."""

import logging
import random
import time
from dataclasses import dataclass
from typing import Dict, List

from ..count.derivation import emit_gcd_derivation
from ..errors import ConfigOutOfRange
from ..field.prime import PrimeModulus
from ..logging import log_event
from ..poly.mpoly import Exps, MultiPoly, m_from_coeffs, to_upoly
from ..resultant.strategies import res_interp, res_propagate
from ..resultant.sylvester import sylvester_build
from .eea import eea_parametric_gcd
from .termlog import TermGrowthLog

logger = logging.getLogger("ffelim.eliminate")

MAX_BENCH_DEGREE = 6
MAX_BENCH_ARITY = 3
COEFF_MAX_EXPONENT = 2


@dataclass(frozen=True)
class GrowthConfig:
    """Random-instance shape for ``bench_growth``.

    Args:
        d: Degree of both polynomials in the eliminated variable x(n-1)
        L: Term budget of every coefficient
        n: Arity
        p: Field characteristic
        seed: Seed for instance generation
        trials: Number of random pairs
    """

    d: int
    L: int
    n: int
    p: int
    seed: int = 0
    trials: int = 1

    def validate(self) -> None:
        if not 1 <= self.d <= MAX_BENCH_DEGREE:
            raise ConfigOutOfRange(f"Degree d must be in 1..{MAX_BENCH_DEGREE}, got {self.d}")
        if not 1 <= self.n <= MAX_BENCH_ARITY:
            raise ConfigOutOfRange(f"Arity n must be in 1..{MAX_BENCH_ARITY}, got {self.n}")
        if self.L < 1:
            raise ConfigOutOfRange(f"Term budget L must be >= 1, got {self.L}")
        if self.trials < 1:
            raise ConfigOutOfRange(f"Trials must be >= 1, got {self.trials}")


def _random_coefficient(
    rng: random.Random, terms: int, n: int, modulus: PrimeModulus
) -> MultiPoly:
    """Up to ``terms`` monomials in x0..x(n-2), exponents at most 2."""
    out: Dict[Exps, int] = {}
    for _ in range(terms):
        exps = tuple(rng.randint(0, COEFF_MAX_EXPONENT) for _ in range(n - 1)) + (0,)
        out[exps] = rng.randrange(1, modulus.p)
    return MultiPoly(out, n, modulus)


def random_pair_poly(
    rng: random.Random, d: int, L: int, n: int, modulus: PrimeModulus
) -> MultiPoly:
    """Random polynomial of degree exactly d in x(n-1)."""
    coeffs: List[MultiPoly] = [_random_coefficient(rng, L, n, modulus) for _ in range(d)]
    lead = _random_coefficient(rng, L, n, modulus)
    while lead.is_zero():
        lead = _random_coefficient(rng, L, n, modulus)
    coeffs.append(lead)
    return m_from_coeffs(coeffs, n - 1)


def transcript_size(resultant: MultiPoly) -> int:
    """Squaring-phase size of the gcd(Res, t^p - t) derivation; 0 if Res is constant."""
    g = to_upoly(resultant, 0)
    if g.degree < 1:
        return 0
    return emit_gcd_derivation(g).squaring_size


def _timed(record_timing: bool):
    started = time.perf_counter_ns()
    return lambda: (time.perf_counter_ns() - started) // 1000 if record_timing else 0


def bench_growth(config: GrowthConfig, record_timing: bool = False) -> TermGrowthLog:
    """Run the Euclidean comparator and the resultant on random pairs.

    Rows are emitted trial by trial; ``step`` restarts at 0 per trial. The
    interpolation resultant and the transcript column are added for bivariate
    instances.

    Raises:
        ConfigOutOfRange: If the configuration exceeds the desk-scale guards
    """
    config.validate()
    modulus = PrimeModulus(config.p)
    rng = random.Random(config.seed)
    var = config.n - 1
    log = TermGrowthLog()

    for trial in range(config.trials):
        alpha = random_pair_poly(rng, config.d, config.L, config.n, modulus)
        beta = random_pair_poly(rng, config.d, config.L, config.n, modulus)

        trial_log = TermGrowthLog()
        eea_parametric_gcd(alpha, beta, var, trial_log, trial=trial, record_timing=record_timing)
        step = len(trial_log.rows)

        elapsed = _timed(record_timing)
        resultant = res_propagate(sylvester_build(alpha, beta, var))
        micros = elapsed()
        transcript = transcript_size(resultant) if config.n == 2 else 0
        trial_log.record(step, "resultant-propagate", var, resultant, micros, trial, transcript)
        step += 1

        if config.n == 2:
            elapsed = _timed(record_timing)
            interpolated = res_interp(alpha, beta, var)
            trial_log.record(
                step, "resultant-interp", var, interpolated, elapsed(), trial, transcript
            )

        log.extend(trial_log)
        log_event(
            logger,
            "bench_trial_complete",
            trial=trial,
            eea_terms=max(r.terms for r in trial_log.for_method("eea-expansion")),
            resultant_terms=len(resultant),
        )

    return log
