"""Pairwise resultant elimination producing a Rabin basis."""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..errors import ArityMismatch, EmptySystem, InvalidPlan, ModulusMismatch
from ..logging import log_event
from ..poly.mpoly import MultiPoly, m_degree_in, m_render
from ..resultant.strategies import res
from ..types import PairStrategy, Strategy
from .termlog import TermGrowthLog

logger = logging.getLogger("ffelim.eliminate")

RESULTANT_METHOD = "resultant"


@dataclass(frozen=True)
class EliminationPlan:
    """Which variables to eliminate, in order, and how to pair generators."""

    variable_order: Tuple[int, ...]
    pair_strategy: PairStrategy = PairStrategy.INPUT_ORDER

    @classmethod
    def default(cls, arity: int) -> "EliminationPlan":
        """Eliminate x(arity-1) down to x1, keeping x0."""
        return cls(tuple(range(arity - 1, 0, -1)))

    def validate(self, arity: int) -> None:
        if len(set(self.variable_order)) != len(self.variable_order):
            raise InvalidPlan(f"Variable order {list(self.variable_order)} repeats a variable")
        for v in self.variable_order:
            if not 0 <= v < arity:
                raise InvalidPlan(f"Variable x{v} outside arity {arity}")


@dataclass(frozen=True)
class Provenance:
    """Origin of a generator: an input, or res(parents, var) at a stage."""

    index: int
    parents: Optional[Tuple[int, int]] = None
    var: Optional[int] = None
    stage: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "parents": list(self.parents) if self.parents else None,
            "var": self.var,
            "stage": self.stage,
        }


@dataclass(frozen=True)
class SharedFactor:
    """A pair whose resultant vanished identically."""

    stage: int
    var: int
    parents: Tuple[int, int]

    def to_dict(self) -> Dict[str, Any]:
        return {"stage": self.stage, "var": self.var, "parents": list(self.parents)}


@dataclass
class RabinBasis:
    """Generators with provenance, shared-factor events and growth log.

    ``pools`` lists, per stage, the generator indices carried into the next
    stage; the last pool is the final elimination result.
    """

    generators: List[MultiPoly]
    provenance: List[Provenance]
    plan: EliminationPlan
    shared_factors: List[SharedFactor] = field(default_factory=list)
    pools: List[List[int]] = field(default_factory=list)
    log: TermGrowthLog = field(default_factory=TermGrowthLog)

    @property
    def final_indices(self) -> List[int]:
        if self.pools:
            return self.pools[-1]
        return list(range(len(self.generators)))

    def final(self) -> List[MultiPoly]:
        return [self.generators[i] for i in self.final_indices]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": list(self.plan.variable_order),
            "pair_strategy": self.plan.pair_strategy.value,
            "generators": [m_render(g) for g in self.generators],
            "provenance": [p.to_dict() for p in self.provenance],
            "shared_factors": [s.to_dict() for s in self.shared_factors],
            "final": self.final_indices,
            "log": [r.to_dict() for r in self.log.rows],
        }


def rabin_step(
    alpha: MultiPoly,
    beta: MultiPoly,
    var: int,
    strategy: Strategy = Strategy.AUTO,
    **limits: Any,
) -> MultiPoly:
    """One reduction: Res_var(alpha, beta). A zero result signals a shared factor."""
    return res(alpha, beta, var, strategy, **limits)


def _pairs(
    containing: List[int], generators: Sequence[MultiPoly], var: int, strategy: PairStrategy
) -> List[Tuple[int, int]]:
    if strategy == PairStrategy.MIN_DEGREE_FIRST:
        containing = sorted(
            containing,
            key=lambda i: (m_degree_in(generators[i], var), len(generators[i]), i),
        )
    return [(containing[k], containing[k + 1]) for k in range(len(containing) - 1)]


def rabin_basis(
    system: Sequence[MultiPoly],
    plan: Optional[EliminationPlan] = None,
    strategy: Strategy = Strategy.AUTO,
    record_timing: bool = False,
    **limits: Any,
) -> RabinBasis:
    """Eliminate the plan's variables one stage at a time.

    At each stage, adjacent pairs of pooled generators containing the stage
    variable are reduced. The next pool holds the new resultants, then the
    second elements of zero pairs, then the generators free of the variable.
    A lone generator containing the variable has no partner and leaves the
    pool; it stays in ``generators``.

    Raises:
        EmptySystem: If ``system`` is empty
        InvalidPlan: If the plan is inconsistent with the arity
    """
    if not system:
        raise EmptySystem("Elimination needs at least one polynomial")
    arity, modulus = system[0].arity, system[0].modulus
    for f in system:
        if f.arity != arity:
            raise ArityMismatch(f"System mixes arity {arity} and {f.arity}")
        if f.modulus != modulus:
            raise ModulusMismatch(f"System mixes {modulus} and {f.modulus}")

    plan = plan or EliminationPlan.default(arity)
    plan.validate(arity)

    basis = RabinBasis(
        generators=list(system),
        provenance=[Provenance(i) for i in range(len(system))],
        plan=plan,
    )
    pool = list(range(len(system)))
    step = 0

    for stage, var in enumerate(plan.variable_order):
        gens = basis.generators
        containing = [i for i in pool if m_degree_in(gens[i], var) >= 1]
        free = [i for i in pool if i not in containing]

        pairs = _pairs(containing, gens, var, plan.pair_strategy)
        created: List[int] = []
        retained: List[int] = []
        for i, j in pairs:
            started = time.perf_counter_ns() if record_timing else 0
            r = rabin_step(gens[i], gens[j], var, strategy, **limits)
            micros = (time.perf_counter_ns() - started) // 1000 if record_timing else 0
            basis.log.record(step, RESULTANT_METHOD, var, r, micros=micros)
            step += 1

            if r.is_zero():
                basis.shared_factors.append(SharedFactor(stage, var, (i, j)))
                log_event(logger, "shared_factor", stage=stage, var=var, parents=(i, j))
                if j not in retained:
                    retained.append(j)
                continue
            index = len(gens)
            gens.append(r)
            basis.provenance.append(Provenance(index, (i, j), var, stage))
            created.append(index)

        pool = created + retained + free
        basis.pools.append(pool)
        log_event(
            logger,
            "elimination_stage",
            stage=stage,
            var=var,
            pairs=len(pairs),
            pool=len(pool),
        )

    return basis
