"""Command handlers: turn a RunConfig into a report."""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from ..config import Config
from ..count.instance import BivariateInstance
from ..count.pipeline import decide_no_zero, per_degree_counts
from ..eliminate.growth import GrowthConfig, bench_growth
from ..eliminate.rabin import EliminationPlan, rabin_basis
from ..errors import InputError
from ..field.prime import PrimeModulus
from ..instances.eisenstein import gen_eisenstein_sparse
from ..instances.sparse import (
    SparseFactor,
    SparsePolySpec,
    check_nonvanishing,
    gen_nonresidue_product,
    gen_substitution,
)
from ..logging import log_event
from ..oracle.brute import brute_bivariate_roots, brute_system_zeros
from ..poly.grammar import m_parse
from ..poly.mpoly import MultiPoly, m_render, to_upoly
from ..poly.upoly import UniPoly
from ..resultant.strategies import res_resolved, resultant_dimension
from ..types import OutputFormat, PairStrategy, Route, Strategy

logger = logging.getLogger("ffelim.cli")

CSV_COMMANDS = ("bench", "eliminate")


@dataclass
class RunConfig:
    """Everything one CLI invocation needs, after argument parsing.

    ``settings`` carries the environment-level guards; ``seed`` falls back
    to ``settings.seed`` when no ``--seed`` was given.
    """

    command: str
    p: int
    settings: Config = field(default_factory=Config)
    kind: Optional[str] = None
    arity: int = 2
    polys: List[str] = field(default_factory=list)
    var: Optional[str] = None
    strategy: Strategy = Strategy.AUTO
    order: Optional[str] = None
    pair_strategy: PairStrategy = PairStrategy.INPUT_ORDER
    dmax: Optional[int] = None
    route: Route = Route.PRODUCT
    seed: Optional[int] = None
    transcript: bool = False
    out: Optional[str] = None
    fmt: Optional[OutputFormat] = None
    timing: bool = False

    # gen / bench specifics
    factors: List[str] = field(default_factory=list)
    pi: Optional[int] = None
    exponents: Optional[str] = None
    r: Optional[int] = None
    nu: Optional[int] = None
    d: int = 3
    L: int = 2
    trials: int = 1

    @property
    def effective_seed(self) -> int:
        return self.settings.seed if self.seed is None else self.seed

    @property
    def record_timing(self) -> bool:
        return self.timing or self.settings.record_timing

    def validate(self) -> None:
        """Check the fields the selected command needs.

        Raises:
            InputError: If a required field is missing or malformed
        """
        if self.arity < 1:
            raise InputError(f"--arity must be >= 1, got {self.arity}")
        if self.fmt == OutputFormat.CSV and self.command not in CSV_COMMANDS:
            raise InputError(f"CSV output is only available for {', '.join(CSV_COMMANDS)}")
        if self.dmax is not None and self.dmax < 1:
            raise InputError(f"--dmax must be >= 1, got {self.dmax}")

        needs = {"res": 2, "count": 1, "decide": 1}
        if self.command in needs and len(self.polys) != needs[self.command]:
            raise InputError(
                f"{self.command} takes {needs[self.command]} polynomial(s), got {len(self.polys)}"
            )
        if self.command in ("count", "decide") and self.arity != 2:
            raise InputError(f"{self.command} works on f(t, x); --arity must be 2")
        if self.command == "eliminate" and not self.polys:
            raise InputError("eliminate takes at least one polynomial")
        if self.command == "gen":
            if self.kind == "nonresidue" and not self.factors:
                raise InputError("gen nonresidue needs at least one --factors gamma,delta,r")
            if self.kind == "eisenstein" and (self.pi is None or not self.exponents):
                raise InputError("gen eisenstein needs --pi and --exponents")
            if self.kind == "subst" and (self.r is None or len(self.polys) != 1):
                raise InputError("gen subst needs -r and one polynomial h")

    def resultant_limits(self) -> Dict[str, int]:
        s = self.settings
        return {
            "leibniz_max_dim": s.leibniz_max_dim,
            "auto_leibniz_max_dim": s.auto_leibniz_max_dim,
            "interp_budget_factor": s.interp_budget_factor,
            "interp_max_extension": s.interp_max_extension,
        }

    def route_limits(self) -> Dict[str, int]:
        return {
            "product_route_max_p": self.settings.product_route_max_p,
            "sylvester_route_max_dim": self.settings.sylvester_route_max_dim,
        }


@dataclass
class CommandResult:
    """A report in every shape the command supports.

    ``payload`` is serialized for JSON output, ``text`` for plain output and
    ``csv`` (when present) for CSV output.
    """

    payload: Dict[str, Any]
    text: str
    csv: Optional[str] = None
    default_format: OutputFormat = OutputFormat.JSON


def _parse_var(text: str, arity: int, modulus: PrimeModulus) -> int:
    v = m_parse(text, arity, modulus)
    if len(v) != 1 or v.total_degree() != 1 or v.leading_term()[1] != 1:
        raise InputError(f"{text!r} is not a variable name")
    return v.variables()[0]


def _parse_order(text: str, arity: int, modulus: PrimeModulus) -> List[int]:
    names = [name.strip() for name in text.split(",") if name.strip()]
    if not names:
        raise InputError("--order needs at least one variable")
    return [_parse_var(name, arity, modulus) for name in names]


def _parse_ints(text: str, flag: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InputError(f"{flag} expects comma-separated integers, got {text!r}") from None


def _parse_system(run: RunConfig, modulus: PrimeModulus) -> List[MultiPoly]:
    return [m_parse(text, run.arity, modulus) for text in run.polys]


def _micros_since(started: int) -> int:
    return (time.perf_counter_ns() - started) // 1000


def cmd_res(run: RunConfig) -> CommandResult:
    """Parametric resultant of two polynomials in one variable."""
    modulus = PrimeModulus(run.p)
    alpha, beta = _parse_system(run, modulus)
    var = _parse_var(run.var, run.arity, modulus) if run.var else run.arity - 1
    dim, d_alpha, d_beta = resultant_dimension(alpha, beta, var)

    started = time.perf_counter_ns()
    r, used = res_resolved(alpha, beta, var, run.strategy, **run.resultant_limits())
    micros = _micros_since(started)

    payload: Dict[str, Any] = {
        "command": "res",
        "p": run.p,
        "var": f"x{var}",
        "strategy": used.value,
        "requested_strategy": run.strategy.value,
        "dim": dim,
        "d_alpha": d_alpha,
        "d_beta": d_beta,
        "resultant": m_render(r),
        "terms": len(r),
        "maxdeg": list(r.max_degrees()),
    }
    if run.record_timing:
        payload["duration_micros"] = micros
    return CommandResult(payload=payload, text=m_render(r))


def cmd_eliminate(run: RunConfig) -> CommandResult:
    """Rabin basis of a system along the requested variable order."""
    modulus = PrimeModulus(run.p)
    system = _parse_system(run, modulus)
    if run.order:
        plan = EliminationPlan(
            tuple(_parse_order(run.order, run.arity, modulus)), run.pair_strategy
        )
    else:
        plan = EliminationPlan(EliminationPlan.default(run.arity).variable_order, run.pair_strategy)

    basis = rabin_basis(
        system,
        plan,
        run.strategy,
        record_timing=run.record_timing,
        **run.resultant_limits(),
    )
    final = [m_render(g) for g in basis.final()]
    payload = {
        "command": "eliminate",
        "p": run.p,
        "arity": run.arity,
        "strategy": run.strategy.value,
        "final_generators": final,
        **basis.to_dict(),
    }
    return CommandResult(payload=payload, text="\n".join(final), csv=basis.log.to_csv())


def cmd_count(run: RunConfig) -> CommandResult:
    """Per-degree counts of t-values with a root x in GF(p)."""
    modulus = PrimeModulus(run.p)
    inst = BivariateInstance(m_parse(run.polys[0], 2, modulus))
    dmax = run.dmax if run.dmax is not None else max(inst.m, 1)
    report = per_degree_counts(
        inst, dmax, run.route, transcript=run.transcript, **run.route_limits()
    )
    payload = {"command": "count", "route": run.route.value, **report.to_dict()}
    text = "\n".join(
        [f"distinct_t {report.distinct_t}"]
        + [f"C_{d} {report.cumulative[d]} E_{d} {report.exact[d]}" for d in sorted(report.exact)]
    )
    return CommandResult(payload=payload, text=text)


def cmd_decide(run: RunConfig) -> CommandResult:
    """Whether f(t, x) avoids zero on all of GF(p)^2."""
    modulus = PrimeModulus(run.p)
    inst = BivariateInstance(m_parse(run.polys[0], 2, modulus))
    report = decide_no_zero(
        inst, run.route, decide_max_p=run.settings.decide_max_p, **run.route_limits()
    )
    payload = {"command": "decide", "route": run.route.value, **report.to_dict()}
    if not run.transcript:
        payload.pop("transcript", None)
    return CommandResult(payload=payload, text="true" if report.no_zero else "false")


def _validation(f: UniPoly, nu: Optional[int]) -> Dict[str, Any]:
    p = f.modulus.p
    nu = p - 1 if nu is None else nu
    return {
        "nu": nu,
        "nonzero_at_origin": f.eval_int(0) != 0,
        "no_root_of_order_dividing_nu": check_nonvanishing(f, nu),
    }


def _parse_factor(text: str) -> SparseFactor:
    values = _parse_ints(text, "--factors")
    if len(values) != 3:
        raise InputError(f"--factors expects gamma,delta,r, got {text!r}")
    return SparseFactor(*values)


def cmd_gen(run: RunConfig) -> CommandResult:
    """Generate a sparse instance and report its validation."""
    modulus = PrimeModulus(run.p)
    payload: Dict[str, Any] = {"command": "gen", "kind": run.kind, "p": run.p}

    if run.kind == "nonresidue":
        spec = SparsePolySpec(modulus, tuple(_parse_factor(t) for t in run.factors))
        f = gen_nonresidue_product(spec)
        payload["kappa"] = spec.kappa
    elif run.kind == "eisenstein":
        inst = gen_eisenstein_sparse(
            modulus, run.pi, _parse_ints(run.exponents, "--exponents"), seed=run.effective_seed
        )
        f = inst.modp
        payload.update(pi=inst.pi, over_z=inst.over_z.render(), nonvanishing=inst.nonvanishing)
    else:
        h = to_upoly(m_parse(run.polys[0], 1, modulus), 0)
        f = gen_substitution(h, run.r)
        payload.update(r=run.r, h=h.render("x0"))

    payload.update(
        polynomial=f.render("x0"),
        degree=f.degree,
        terms=sum(1 for c in f.coeffs if c),
        validation=_validation(f, run.nu),
    )
    log_event(logger, "instance_generated", kind=run.kind, p=run.p, degree=f.degree)
    return CommandResult(payload=payload, text=f.render("x0"), default_format=OutputFormat.TEXT)


def cmd_bench(run: RunConfig) -> CommandResult:
    """Term-growth benchmark: Euclidean comparator against resultants."""
    config = GrowthConfig(
        d=run.d, L=run.L, n=run.arity, p=run.p, seed=run.effective_seed, trials=run.trials
    )
    log = bench_growth(config, record_timing=run.record_timing)
    csv_text = log.to_csv()
    payload = {
        "command": "bench",
        "p": run.p,
        "d": run.d,
        "L": run.L,
        "n": run.arity,
        "seed": run.effective_seed,
        "trials": run.trials,
        "summary": log.summary(),
        "rows": [r.to_dict() for r in log.rows],
    }
    return CommandResult(
        payload=payload, text=csv_text, csv=csv_text, default_format=OutputFormat.CSV
    )


def _render_points(points: Sequence[Sequence[int]]) -> str:
    return "\n".join(" ".join(str(v) for v in pt) for pt in points)


def cmd_oracle(run: RunConfig) -> CommandResult:
    """Brute-force counts and zero sets for cross-checking."""
    modulus = PrimeModulus(run.p)
    limit = run.settings.enumeration_limit

    if run.kind == "roots":
        if len(run.polys) != 1:
            raise InputError("oracle roots takes one polynomial f(t, x)")
        f = m_parse(run.polys[0], 2, modulus)
        counts = brute_bivariate_roots(
            f, run.dmax or 1, seed=run.effective_seed, limit=limit
        )
        payload = {"command": "oracle", "kind": "roots", "p": run.p, **counts.to_dict()}
        text = "\n".join(
            f"E_{d} {counts.exact[d]} C_{d} {counts.cumulative[d]}" for d in sorted(counts.exact)
        )
        return CommandResult(payload=payload, text=text)

    system = _parse_system(run, modulus)
    zeros = sorted(brute_system_zeros(system, modulus, run.arity, limit=limit))
    payload = {
        "command": "oracle",
        "kind": "zeros",
        "p": run.p,
        "arity": run.arity,
        "count": len(zeros),
        "zeros": [list(z) for z in zeros],
    }
    return CommandResult(payload=payload, text=_render_points(zeros))


HANDLERS = {
    "res": cmd_res,
    "eliminate": cmd_eliminate,
    "count": cmd_count,
    "decide": cmd_decide,
    "gen": cmd_gen,
    "bench": cmd_bench,
    "oracle": cmd_oracle,
}


def dispatch(run: RunConfig) -> CommandResult:
    run.validate()
    log_event(logger, "command_started", command=run.command, kind=run.kind, p=run.p)
    return HANDLERS[run.command](run)
