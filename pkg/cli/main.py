"""Batch verifier front end.

    python -m cli.main <verb> FILE [--prime P] [--seed S] [--corpus-size N] [--out PATH]

Exit code 0 means every check passed (or the verdict is positive), 1 a
negative verdict with its certificate, 2 an input or usage error. The JSON
report goes to stdout or to --out; logs go to stderr.
"""
import argparse
import json
import random
import sys
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, ValidationError

from bim.bialgebroid import (
    NotHopf,
    check_antipode_axioms,
    check_bialgebroid,
    check_translation_identities,
    check_varsigma_hat_linearity,
    compute_antipode,
    dual_fthm_check,
    free_comodule,
    regular_comodule,
    varsigma,
    varsigma_hat,
)
from bim.axioms import check_duoidal_axioms_bim, check_idempotent_criteria
from bim.generators import bimodule_corpus, hopf_module_corpus, rmodule_corpus
from core.config import Settings
from core.exceptions import ConstructionInapplicable, DuoidalError, InputError
from core.labels import jsonable
from core.logging_config import logger, setup_logging
from ingestion.base import has_keys
from ingestion.bim_source import BialgebroidLoader, BimSuiteLoader
from ingestion.span_source import (
    CategoryLoader,
    ComoduleMonoidLoader,
    HopfModuleLoader,
    ModuleLoader,
    SpanCollectionLoader,
)
from linalg.field import PrimeField
from span.axioms import check_duoidal_axioms
from span.beta import beta_on_module, check_beta_identities
from span.category import check_bimonoid, trivially_graded
from span.galois import check_comodule_monoid, check_lambda0, coinvariant_submonoid, is_galois
from span.generators import hopf_corpus, random_span, slice_corpus
from span.groupoid import asymmetric_pairs, counterexample_module, is_groupoid_direct, is_groupoid_via_beta, verify_collision
from span.hopf import decision_modules, fthm_counit, verify_fthm
from span.idempotent import check_idempotent_criteria_span

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

Outcome = Tuple[bool, Dict[str, Any]]


class RunConfig(BaseModel):
    verb: str
    path: str
    settings: Settings
    out: Optional[str] = None

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.settings.prime)


def _peek(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, json.JSONDecodeError):
        return None


def _dump(model) -> Any:
    return model.model_dump(mode="json")


# Span verbs

def run_span_axioms(cfg: RunConfig) -> Outcome:
    X, spans = SpanCollectionLoader(cfg.path).run()
    tuples = None
    if spans is None:
        # corpus_size independent six-tuples of fresh random spans
        rng = random.Random(cfg.settings.seed)
        spans = [random_span(rng, X, prefix=f"m{i}_") for i in range(6 * cfg.settings.corpus_size)]
        tuples = [tuple(range(6 * k, 6 * k + 6)) for k in range(cfg.settings.corpus_size)]
    report = check_duoidal_axioms(X, spans, tuples=tuples)
    idempotents = [check_idempotent_criteria_span(M) for M in spans]
    ok = report.passed and all(r.passed for r in idempotents)
    return ok, {
        "axioms": _dump(report),
        "idempotent_criteria": [_dump(r) for r in idempotents if not r.passed],
        "spans": len(spans),
        "tuples": len(spans) ** 6 if tuples is None else len(tuples),
    }


def run_span_bimonoid(cfg: RunConfig) -> Outcome:
    A = CategoryLoader(cfg.path, validate=False).run()
    report = check_bimonoid(A)
    return report.passed, _dump(report)


def run_span_is_groupoid(cfg: RunConfig) -> Outcome:
    A = CategoryLoader(cfg.path).run()
    direct = is_groupoid_direct(A)
    via_beta = is_groupoid_via_beta(A)
    agree = direct.holds == via_beta.holds
    return direct.holds and agree, {
        "groupoid": direct.holds,
        "inverses": jsonable(direct.inverses),
        "witness": jsonable(direct.witness),
        "via_beta": _dump(via_beta),
        "agree": agree,
    }


def run_span_beta(cfg: RunConfig) -> Outcome:
    if has_keys(_peek(cfg.path), ["category"]):
        Q = ModuleLoader(cfg.path).run()
        A = Q.cat
    else:
        A = CategoryLoader(cfg.path).run()
        Q = A.regular_module()
    beta = beta_on_module(A, Q)
    identities = check_beta_identities(A, Q)
    return beta.bijective and identities.passed, {
        "beta": _dump(beta),
        "identities": _dump(identities),
    }


def run_span_counterexample(cfg: RunConfig) -> Outcome:
    A = CategoryLoader(cfg.path).run()
    pairs = asymmetric_pairs(A)
    if not pairs:
        return True, {"applicable": False, "reason": "every hom-set has a companion in the opposite direction"}
    u, v = pairs[0]
    try:
        module, collision = counterexample_module(A, u, v)
    except ConstructionInapplicable as e:
        return True, {"applicable": False, "reason": str(e)}
    verified = verify_collision(A, module, collision)
    return False, {
        "applicable": True,
        "objects": [u, v],
        "module": module.describe(),
        "collision": jsonable(collision),
        "verified": verified,
    }


def run_span_fthm(cfg: RunConfig) -> Outcome:
    extra = []
    if has_keys(_peek(cfg.path), ["grade"]):
        Xh = HopfModuleLoader(cfg.path).run()
        A = Xh.cat
        extra = [Xh]
    else:
        A = CategoryLoader(cfg.path).run()
    s = cfg.settings
    corpus = extra + hopf_corpus(A, s.corpus_size, s.seed)
    slices = slice_corpus(A, s.corpus_size, s.seed)
    report = verify_fthm(A, corpus, slices)
    payload = {"fthm": _dump(report), "groupoid": is_groupoid_direct(A).holds}
    if extra:
        payload["counit"] = _dump(fthm_counit(A, extra[0]))
    return report.passed, payload


def run_span_galois(cfg: RunConfig) -> Outcome:
    if has_keys(_peek(cfg.path), ["base", "grade"]):
        Bm = ComoduleMonoidLoader(cfg.path).run()
    else:
        Bm = trivially_graded(CategoryLoader(cfg.path).run())
    axioms = check_comodule_monoid(Bm)
    Bc, _ = coinvariant_submonoid(Bm)
    verdict = is_galois(Bm, decision_modules(Bm.cat))
    rng = random.Random(cfg.settings.seed)
    lifting = [check_lambda0(Bm, random_span(rng, Bm.cat.objects)) for _ in range(min(cfg.settings.corpus_size, 10))]
    ok = axioms.passed and verdict.holds and all(r.passed for r in lifting)
    return ok, {
        "comodule_monoid": _dump(axioms),
        "coinvariants": [jsonable(a) for a in Bc.arrows],
        "galois": _dump(verdict),
        "lambda0": [_dump(r) for r in lifting if not r.passed],
    }


# Bimodule verbs

def run_bim_axioms(cfg: RunConfig) -> Outcome:
    D, modules = BimSuiteLoader(cfg.path, cfg.field).run()
    tuples = None
    if modules is None:
        modules = bimodule_corpus(D, 6 * cfg.settings.corpus_size, cfg.settings.seed)
        tuples = [tuple(range(6 * k, 6 * k + 6)) for k in range(cfg.settings.corpus_size)]
    report = check_duoidal_axioms_bim(D, modules, tuples=tuples)
    idempotents = [check_idempotent_criteria(D, M) for M in modules]
    ok = report.passed and all(r.passed for r in idempotents)
    return ok, {
        "axioms": _dump(report),
        "idempotent_criteria": [_dump(r) for r in idempotents if not r.passed],
        "modules": len(modules),
        "tuples": len(modules) ** 6 if tuples is None else len(tuples),
    }


def run_bim_bialgebroid(cfg: RunConfig) -> Outcome:
    B, _ = BialgebroidLoader(cfg.path, cfg.field).run()
    report = check_bialgebroid(B)
    return report.passed, _dump(report)


def run_bim_varsigma(cfg: RunConfig) -> Outcome:
    B, _ = BialgebroidLoader(cfg.path, cfg.field).run()
    hat = varsigma_hat(B)
    comodules = [regular_comodule(B), free_comodule(B, B.D.I, name=f"I•{B.name}")]
    reports = [varsigma(B, Q) for Q in comodules]
    linearity = check_varsigma_hat_linearity(B)
    return hat.invertible and linearity.passed, {
        "varsigma_hat": _dump(hat),
        "varsigma": [_dump(r) for r in reports],
        "linearity": _dump(linearity),
    }


def run_bim_antipode(cfg: RunConfig) -> Outcome:
    B, _ = BialgebroidLoader(cfg.path, cfg.field).run()
    result = compute_antipode(B)
    if isinstance(result, NotHopf):
        return False, {
            "hopf": False,
            "rank": result.varsigma_hat.rank,
            "kernel_witness": result.kernel_witness,
        }
    axioms = check_antipode_axioms(B, result.S)
    identities = check_translation_identities(B, result)
    return axioms.passed and identities.passed, {
        "hopf": axioms.passed,
        "antipode": result.S.tolist(),
        "axioms": _dump(axioms),
        "translation_identities": _dump(identities),
    }


def run_bim_fthm(cfg: RunConfig) -> Outcome:
    B, listed = BialgebroidLoader(cfg.path, cfg.field).run()
    s = cfg.settings
    rmodules = listed + rmodule_corpus(B.D, s.corpus_size, s.seed)
    report = dual_fthm_check(B, rmodules, hopf_module_corpus(B, []), [regular_comodule(B)])
    return report.passed, _dump(report)


VERBS: Dict[str, Callable[[RunConfig], Outcome]] = {
    "span-axioms": run_span_axioms,
    "span-bimonoid": run_span_bimonoid,
    "span-is-groupoid": run_span_is_groupoid,
    "span-beta": run_span_beta,
    "span-counterexample": run_span_counterexample,
    "span-fthm": run_span_fthm,
    "span-galois": run_span_galois,
    "bim-axioms": run_bim_axioms,
    "bim-bialgebroid": run_bim_bialgebroid,
    "bim-varsigma": run_bim_varsigma,
    "bim-antipode": run_bim_antipode,
    "bim-fthm": run_bim_fthm,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="duoidal", description="Verify duoidal structures and Hopf-type theorems on finite data")
    parser.add_argument("verb", choices=sorted(VERBS))
    parser.add_argument("file", help="JSON input")
    parser.add_argument("--prime", type=int, help="characteristic of the scalar field")
    parser.add_argument("--seed", type=int, help="seed for generated corpora")
    parser.add_argument("--corpus-size", type=int, dest="corpus_size", help="size of generated corpora")
    parser.add_argument("--out", help="write the report here instead of stdout")
    return parser


def emit(payload: Dict[str, Any], out: Optional[str]) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    overrides = {k: getattr(args, k) for k in ("prime", "seed", "corpus_size") if getattr(args, k) is not None}
    try:
        settings = Settings(**overrides)
    except ValidationError as e:
        emit({"error": e.errors()[0]["msg"], "location": "arguments"}, None)
        return EXIT_USAGE
    setup_logging(settings.log_level)
    cfg = RunConfig(verb=args.verb, path=args.file, settings=settings, out=args.out)

    logger.info("Running verb", extra={"verb": cfg.verb, "path": cfg.path, "prime": settings.prime, "seed": settings.seed})
    try:
        ok, payload = VERBS[cfg.verb](cfg)
    except InputError as e:
        logger.error("Input error", extra={"verb": cfg.verb, "error": str(e)})
        emit({"error": str(e), "location": e.location}, cfg.out)
        return EXIT_USAGE
    except DuoidalError as e:
        logger.warning("Verification stopped", extra={"verb": cfg.verb, "error": str(e)})
        emit({"verb": cfg.verb, "passed": False, "error": str(e), "witness": jsonable(e.witness)}, cfg.out)
        return EXIT_NEGATIVE

    emit({"verb": cfg.verb, "passed": ok, **payload}, cfg.out)
    logger.info("Finished verb", extra={"verb": cfg.verb, "passed": ok})
    return EXIT_OK if ok else EXIT_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
