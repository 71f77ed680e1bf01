__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

from typing import Any, Callable, Dict
import dataclasses
import logging

import numpy as np

from src.algebra import IntMatrix
from src.algebra.random_lattices import random_affine_model
from src.cohomology import (
    C2Module,
    TorusCoefficient,
    cohomology,
    cohomology_oracle,
    cohomology_torus_coeff,
)
from src.tori import RealTorus, canonical_factors, decompose
from src.gerbes import AffineGerbeClass, classify_affine_gerbes
from src.duality import tdualize, fm_degree_map
from src.kr_theory import PartialResult, kr_table, kr_torus, fm_verify
from src.dirac import RealSpinContext, index_constraint, jacobian_degrees, families_index_tori
from src.configurations.verification_confs import VerificationConf
from src.cli.payloads import (
    SCHEMA_VERSION,
    parse_factors,
    parse_matrix,
    parse_pair,
    parse_torus,
    parse_twist,
    validate_request,
)
from src.errors import NotAnInvolution, SchemaError

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class JobRequest:
    """
    Args:
        command (str): one of the registered commands.
        payload (dict): the request document of the command.
    """

    command: str
    payload: Dict[str, Any]


@dataclasses.dataclass(frozen=True)
class JobContext:
    """
    Settings a job may consult besides its payload.

    Args:
        verification (VerificationConf): verification switches.
        seed (int): default seed of the synthesize command.
    """

    verification: VerificationConf = dataclasses.field(default_factory=VerificationConf)
    seed: int = 0


class JobFactory:
    """
    JobFactory class. It maps command names to the functions that compute their response.
    """

    def __init__(self):
        self._jobs = {}

    def register(self, name: str, job: Callable[[dict, JobContext], dict]) -> None:
        """
        Registers a job.

        Args:
            name (str): command name.
            job (Callable): function of (payload, context) returning the response body.
        """

        self._jobs[name] = job

    def __call__(self, request: JobRequest, context: JobContext) -> dict:
        return self._jobs[request.command](request.payload, context)

    def getCommands(self) -> list:
        return list(self._jobs.keys())


def _torus_input(X: RealTorus) -> dict:
    return X.as_dict()


def _pair_input(X: RealTorus, G: AffineGerbeClass) -> dict:
    return {"torus": X.as_dict(), "gerbe": G.as_dict()}


def _graded_rows(G) -> list:
    return [{"j": j, "group": G[j].as_dict()} for j in range(8)]


def classify_job(payload: dict, context: JobContext) -> dict:
    X = parse_torus(payload)
    return {
        "input": _torus_input(X),
        "invariants": decompose(X).as_dict(),
        "factors": [str(f) for f in canonical_factors(X)],
        "chern_vector": [str(x) for x in X.chern_vector()],
    }


def affine_gerbes_job(payload: dict, context: JobContext) -> dict:
    X = parse_torus(payload)
    result = classify_affine_gerbes(X)
    whole = result.whole_torus
    return {
        "input": _torus_input(X),
        "factors": [str(f) for f in result.factors],
        "case_tags": list(result.case_tags),
        "group": result.group.as_dict(),
        "whole_torus": {
            "group": whole.group.as_dict(),
            "derived": whole.derived,
            "presentation": whole.presentation.as_strings(),
            "representatives": [r.as_dict() for r in whole.representatives],
        },
    }


def cohomology_job(payload: dict, context: JobContext) -> dict:
    sigma_rows = parse_matrix(payload["sigma"], ("sigma",))
    if any(len(r) != len(sigma_rows) for r in sigma_rows):
        raise NotAnInvolution("sigma must be square")
    n = len(sigma_rows)
    sigma = IntMatrix.from_rows(sigma_rows)
    relation_rows = payload.get("relations") or []
    if relation_rows and len(relation_rows) != n:
        raise SchemaError(f"relations must have {n} rows", pointer="/relations")
    relations = IntMatrix.from_rows(parse_matrix(relation_rows, ("relations",))) if relation_rows else None
    k = int(payload["k"])
    coefficient = payload.get("coefficient", "module")
    sign_twist = bool(payload.get("sign_twist", False))

    if coefficient == "torus":
        if relations is not None:
            raise SchemaError("torus coefficients need a lattice without relations", pointer="/relations")
        lattice = C2Module.from_lattice(sigma, sign_twist=sign_twist)
        group = cohomology_torus_coeff(TorusCoefficient(lattice), k)
        oracle_module, oracle_degree = lattice, k + 1
    else:
        M = C2Module(relations if relations is not None else IntMatrix.zeros(n, 0), sigma, sign_twist)
        group = cohomology(M, k)
        oracle_module, oracle_degree = M, k

    response = {
        "input": {
            "sigma": sigma.as_strings(),
            "relations": relations.as_strings() if relations is not None else [],
            "sign_twist": sign_twist,
            "k": k,
            "coefficient": coefficient,
        },
        "group": group.as_dict(),
    }
    if context.verification.cross_check_oracle:
        oracle = cohomology_oracle(oracle_module, oracle_degree)
        response["oracle"] = {"group": oracle.as_dict(), "agree": oracle == group}
        if oracle != group:
            logger.warning("resolution oracle disagrees: %s vs %s", oracle, group)
    return response


def kr_groups_job(payload: dict, context: JobContext) -> dict:
    factors = parse_factors(payload["factors"])
    twist = parse_twist(payload.get("twist"), ("twist",))
    result = kr_torus(factors, twist)
    response = {"input": {"factors": [str(f) for f in factors], "twist": twist.as_dict()}}
    if isinstance(result, PartialResult):
        response["supported"] = False
        response["reason"] = result.reason
        response["factor_tables"] = [
            {"factor": str(f), "groups": _graded_rows(t.graded)} for f, t in zip(result.factors, result.factor_tables)
        ]
        return response
    response["supported"] = True
    response["groups"] = _graded_rows(result)
    if len(factors) == 1 and twist.to_z4() == 0:
        response["generators"] = [g.as_dict() for g in kr_table(factors[0]).generators]
    return response


def dualize_job(payload: dict, context: JobContext) -> dict:
    X, G = parse_pair(payload)
    d = tdualize(X, G)
    candidates = []
    for c, cand in enumerate(d.target_candidates):
        candidates.append(
            {
                "gerbe": cand.as_dict(),
                "ledger": d.ledgers[c].as_dict(),
                "degree_map": list(fm_degree_map(d, c)),
            }
        )
    return {
        "input": _pair_input(X, G),
        "source_factors": [str(f) for f in d.source_factors],
        "source_twist": d.source_twist.as_dict(),
        "chern_nonzero": d.chern_nonzero,
        "dual_chern_nonzero": d.dual_chern_nonzero,
        "target": {
            "torus": d.target_torus.as_dict(),
            "factors": [str(f) for f in d.target_factors],
            "delta": d.delta.as_strings(),
            "candidates": candidates,
        },
    }


def _candidate_rows(report) -> list:
    return [
        {
            "candidate": c.candidate,
            "pass": c.passed,
            "source_free_rank": c.source_free_rank,
            "target_free_rank": c.target_free_rank,
            "degrees": [row.as_dict() for row in c.degrees],
            "untwisted_degrees": [row.as_dict() for row in c.untwisted_degrees],
            "ledger_consistent": c.ledger_consistent,
        }
        for c in report.candidates
    ]


def fm_verify_job(payload: dict, context: JobContext) -> dict:
    X, G = parse_pair(payload)
    d = tdualize(X, G)
    report = fm_verify(d, factorwise_fallback=context.verification.factorwise_fallback)
    response = {
        "input": _pair_input(X, G),
        "source_factors": [str(f) for f in d.source_factors],
        "target_factors": [str(f) for f in d.target_factors],
        "mode": report.mode,
        "pass": report.passed,
    }
    if report.mode == "direct":
        response["candidates"] = _candidate_rows(report)
        response["degrees"] = response["candidates"][0]["degrees"]
    else:
        response["factors"] = [
            {"factor": str(f), "pass": r.passed, "candidates": _candidate_rows(r)} for f, r in report.factor_reports
        ]
    return response


def _spin_context(payload: dict) -> RealSpinContext:
    return RealSpinContext(
        n=int(payload["n"]),
        k=int(payload["k"]),
        b_plus=int(payload.get("b_plus", 0)),
        b_minus=int(payload.get("b_minus", 0)),
        has_fixed_point=bool(payload.get("has_fixed_point", True)),
    )


def index_job(payload: dict, context: JobContext) -> dict:
    ctx = _spin_context(payload)
    response = {"input": dataclasses.asdict(ctx)}
    response.update(index_constraint(ctx).as_dict())
    return response


def jacobian_shift_job(payload: dict, context: JobContext) -> dict:
    ctx = _spin_context(payload)
    regular = int(payload.get("regular", 0))
    if regular > min(ctx.b_plus, ctx.b_minus):
        raise SchemaError("regular summands need both eigenspaces, so regular <= min(b_plus, b_minus)", "/regular")
    degrees = jacobian_degrees(ctx)
    tori = families_index_tori(ctx, regular)
    response = {"input": dict(dataclasses.asdict(ctx), regular=regular)}
    response.update(degrees.as_dict())
    response["albanese"] = [str(f) for f in tori.albanese]
    response["jacobian"] = [str(f) for f in tori.jacobian]
    return response


def synthesize_job(payload: dict, context: JobContext) -> dict:
    a, b, r = int(payload["a"]), int(payload["b"]), int(payload["r"])
    chern = bool(payload.get("chern", False))
    if a + b + 2 * r == 0:
        raise SchemaError("the torus needs at least one summand", pointer="")
    if chern and a == 0:
        raise SchemaError("a nonzero Chern class needs a trivial summand", pointer="/chern")
    seed = int(payload.get("seed", context.seed))
    sigma, t = random_affine_model(a, b, r, chern, np.random.default_rng(seed))
    return {
        "input": {"a": a, "b": b, "r": r, "chern": chern, "seed": seed},
        "request": {
            "command": "classify",
            "payload": {"sigma": sigma.as_strings(), "t": [str(x) for x in t]},
        },
    }


jobFactory = JobFactory()
# Classification
jobFactory.register("classify", classify_job)
jobFactory.register("affine-gerbes", affine_gerbes_job)
jobFactory.register("cohomology", cohomology_job)
# T-duality and KR-theory
jobFactory.register("dualize", dualize_job)
jobFactory.register("kr-groups", kr_groups_job)
jobFactory.register("fm-verify", fm_verify_job)
# Dirac operators
jobFactory.register("index", index_job)
jobFactory.register("jacobian-shift", jacobian_shift_job)
# Helpers
jobFactory.register("synthesize", synthesize_job)


def run(request: JobRequest, context: JobContext = None) -> dict:
    """
    Validates the payload of a request and dispatches it to its library operation.

    Args:
        request (JobRequest): command and payload.
        context (JobContext, optional): verification switches and seed. Defaults to the default settings.

    Returns:
        dict: the response document, with the schema version and the command echoed back.

    Raises:
        SchemaError: if the payload does not validate.
        MathDomainError: if the library rejects the input.
    """

    context = context if context is not None else JobContext()
    if request.command not in jobFactory.getCommands():
        raise SchemaError(
            "unknown command {}. Available commands are: {}".format(
                request.command, ", ".join(jobFactory.getCommands())
            ),
            pointer="",
        )
    validate_request(request.command, request.payload)
    logger.debug("running %s", request.command)
    body = jobFactory(request, context)
    return dict({"schema_version": SCHEMA_VERSION, "command": request.command}, **body)
