"""Command-line front end.

Usage::

    pyhopf <command> <document.json> [--pretty] [--out FILE] [--seed N] [--config FILE] [-v]

The document declares fields, Hopf algebras, operators and varieties by name, plus one payload object per command.
Output is a JSON object ``{schema_version, command, passed, report}`` with sorted keys and exact values written as
strings. Exit codes: 0 if every check passed, 1 if a mathematical check failed, 2 for malformed input.
"""

import argparse
import json
import logging
import sys

from . import config
from .document import ProblemDocument, SCHEMA_VERSION
from .errors import DocumentError, NoAntipode, PyHopfError
from .fields import linalg
from .gsa import (check_action, compose_product_action, constants, decompose_product_action, derive_iterativity_rules,
                  derive_product_rules, format_operator_change, operator_change_matrix)
from .hopf import base_change, change_basis, solve_antipode, tensors_equal, verify_antipode, verify_bialgebra
from .prolong import c_map, check_axiom_instance, generic_point_operator, prolongation_ideal
from .report import Report
from .sampling import l2_sample, mutation_harness
from .util import jsonable

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_MALFORMED = 2

_commands = {}


class Outcome:
    """What a command hands back: pass/fail, the JSON report and the ``--pretty`` text."""

    def __init__(self, passed, report, text):
        self.passed = passed
        self.report = report
        self.text = text


def command(name, help=None):
    def decorator(func):
        _commands[name] = (func, help or func.__doc__)
        return func
    return decorator


def list_commands():
    return sorted(_commands)


# commands
# ========
@command("hopf-verify", "check the bialgebra laws and the existence of an antipode")
def _hopf_verify(doc, payload, args):
    h = doc.hopf(payload["hopf"], "hopf-verify.hopf")
    try:
        if h.antipode is None:
            h = h.with_antipode()
        report = verify_bialgebra(h)
    except NoAntipode as e:
        report = verify_bialgebra(h)
        report.add_violation("antipode", (), reason=str(e))
    d = {"hopf": h.to_dict(), "check": report.to_dict()}
    text = h.summary(do_print=False, do_return=True) + "\n" + report.summary(do_print=False, do_return=True)
    return Outcome(report.passed, d, text)


@command("hopf-antipode", "solve for the antipode")
def _hopf_antipode(doc, payload, args):
    h = doc.hopf(payload["hopf"], "hopf-antipode.hopf")
    s = solve_antipode(h)
    report = verify_antipode(h, s)
    h = h.with_antipode(s)
    lines = [line for line in h.table_lines() if line.startswith("S(")]
    d = {"antipode": s, "lines": lines, "check": report.to_dict()}
    return Outcome(report.passed, d, "\n".join(lines) + "\n\n" + report.summary(do_print=False, do_return=True))


@command("rules", "product and iterativity rules of the operators in a good basis")
def _rules(doc, payload, args):
    h = doc.hopf(payload["hopf"], "rules.hopf")
    product_rules = derive_product_rules(h, payload.get("x", "x"), payload.get("y", "y"))
    iterativity = derive_iterativity_rules(h)
    d = {"product": product_rules.to_dict(), "iterativity": iterativity.to_dict()}
    text = product_rules.summary(do_print=False, do_return=True) + "\n" \
        + iterativity.summary(do_print=False, do_return=True)
    return Outcome(True, d, text)


@command("basis-change", "change basis (after an optional base change) and compare with another Hopf algebra")
def _basis_change(doc, payload, args):
    h = doc.hopf(payload["hopf"], "basis-change.hopf")
    if "field" in payload:
        h = base_change(h, doc.field(payload["field"], "basis-change.field"))
    try:
        matrix = linalg.as_matrix(payload["basis"], field=h.field)
    except PyHopfError as e:
        raise DocumentError(f"basis-change.basis: {e}") from e
    new = change_basis(h, matrix)
    t = operator_change_matrix(matrix, h.field)
    d = {"hopf": new.to_dict(), "operator_change": format_operator_change(t), "matrix": t,
         "good_basis": new.is_good_basis()}
    passed = True
    text = new.summary(do_print=False, do_return=True) + "\n" + "\n".join(format_operator_change(t)) + "\n"
    if "compare" in payload:
        other = doc.hopf(payload["compare"], "basis-change.compare")
        passed = tensors_equal(new, other)
        d["compare"] = {"name": payload["compare"], "equal": passed}
        text += f"tensors equal to {payload['compare']}: {passed}\n"
    return Outcome(passed, d, text)


@command("action-check", "counit, iterativity and well-definedness of an operator")
def _action_check(doc, payload, args):
    spec = doc.operator(payload["operator"], "action-check.operator")
    report = check_action(spec)
    d = {"operator": spec.to_dict(), "check": report.to_dict()}
    return Outcome(report.passed, d, report.summary(do_print=False, do_return=True))


@command("constants", "field of constants and the degree bound")
def _constants(doc, payload, args):
    spec = doc.operator(payload["operator"], "constants.operator")
    result = constants(spec)
    closure = result.check_closure()
    d = result.to_dict()
    d["closure"] = closure.to_dict()
    text = result.summary(do_print=False, do_return=True) + "\n" + closure.summary(do_print=False, do_return=True)
    return Outcome(result.bound_holds and closure.passed, d, text)


@command("prolong", "prolongation ideal of a variety")
def _prolong(doc, payload, args):
    variety = doc.variety(payload["variety"], "prolong.variety")
    nabla = prolongation_ideal(variety)
    report = check_action(nabla.operator())
    d = nabla.to_dict()
    d["operator_check"] = report.to_dict()
    text = "\n".join(nabla.to_dict()["generators"]) + "\n\n" + report.summary(do_print=False, do_return=True)
    return Outcome(report.passed, d, text)


@command("c-map", "the linear map from the prolongation to the second prolongation")
def _c_map(doc, payload, args):
    h = doc.hopf(payload["hopf"], "c-map.hopf")
    cmap = c_map(h, payload.get("variables", payload.get("n", 1)))
    d = cmap.to_dict()
    d["projection_is_identity"] = cmap.projection_is_identity()
    lines = [f"{v} -> {p}" for v, p in zip(cmap.target.variables, cmap.coordinates())]
    return Outcome(d["projection_is_identity"], d, "\n".join(lines) + "\n")


@command("axiom-check", "containment checks of a geometric axiom instance")
def _axiom_check(doc, payload, args):
    variety = doc.variety(payload["variety"], "axiom-check.variety")
    report = check_axiom_instance(variety, payload["W"])
    return Outcome(report.passed, report.to_dict(), report.summary(do_print=False, do_return=True))


@command("generic-point", "operator on the coordinate ring of W induced by the generic point")
def _generic_point(doc, payload, args):
    variety = doc.variety(payload["variety"], "generic-point.variety")
    result = generic_point_operator(variety, payload["W"])
    return Outcome(result.report.passed, result.to_dict(), result.summary(do_print=False, do_return=True))


@command("decompose-product", "split an action of a product into commuting factor actions")
def _decompose_product(doc, payload, args):
    spec = doc.operator(payload["operator"], "decompose-product.operator")
    spec1, spec2, report = decompose_product_action(spec)
    recomposed = compose_product_action(spec1, spec2, hopf=spec.hopf)
    same = all(spec.tensor_equal(recomposed.images[g], spec.images[g]) for g in spec.generators)
    if not same:
        report.add_violation("recompose", ())
    d = {"factor1": spec1.to_dict(), "factor2": spec2.to_dict(), "check": report.to_dict()}
    return Outcome(report.passed, d, report.summary(do_print=False, do_return=True))


@command("hopf-mutate", "seeded mutation harness for the Hopf algebra axioms")
def _hopf_mutate(doc, payload, args):
    h = doc.hopf(payload["hopf"], "hopf-mutate.hopf")
    report = mutation_harness(h, samples=payload.get("samples"), seed=args.seed)
    return Outcome(report.passed, report.to_dict(), report.summary(do_print=False, do_return=True))


@command("l2-sample", "compare both sides of the prolongation identity on random points")
def _l2_sample(doc, payload, args):
    spec = doc.operator(payload["operator"], "l2-sample.operator")
    variety = None
    if "variety" in payload:
        variety = doc.variety(payload["variety"], "l2-sample.variety")
    known = [[spec.ring.convert(x) for x in p] for p in payload.get("known_points", [])]
    report = l2_sample(spec, n=payload.get("n", 2), points=payload.get("points"), seed=args.seed, variety=variety,
                       known_points=known)
    return Outcome(report.passed, report.to_dict(), report.summary(do_print=False, do_return=True))


# running
# =======
def _envelope(name, passed, report):
    return {
        "schema_version": config.get("output.schema_version", SCHEMA_VERSION),
        "command": name,
        "passed": passed,
        "report": jsonable(report),
    }


def run(name, doc, args=None):
    """Run a command on a :class:`~pyhopf.document.ProblemDocument`.

    :returns: ``(exit_code, envelope, text)``.
    """
    if args is None:
        args = argparse.Namespace(seed=None)
    if name not in _commands:
        raise DocumentError(f"Unknown command {name!r}, available: {', '.join(list_commands())}")
    func, _ = _commands[name]
    payload = doc.payload(name)
    try:
        outcome = func(doc, payload, args)
    except PyHopfError as e:
        if isinstance(e, (ValueError, ArithmeticError)):
            raise
        logger.info(f"{name} stopped: {e}")
        report = Report(name, laws=(type(e).__name__,))
        report.add_violation(type(e).__name__, (), message=str(e))
        return EXIT_FAILED, _envelope(name, False, report.to_dict()), report.summary(do_print=False, do_return=True)
    code = EXIT_OK if outcome.passed else EXIT_FAILED
    return code, _envelope(name, outcome.passed, outcome.report), outcome.text


def build_parser():
    parser = argparse.ArgumentParser(prog="pyhopf", description="Finite group schemes, their actions and "
                                                                "prolongations, computed exactly.")
    parser.add_argument("command", choices=list_commands(), help="the command to run")
    parser.add_argument("document", help="JSON problem document")
    parser.add_argument("--pretty", action="store_true", help="print human-readable tables instead of JSON")
    parser.add_argument("--out", help="write the output to this file instead of stdout (must not exist)")
    parser.add_argument("--seed", type=int, default=None, help="seed for the sampling commands")
    parser.add_argument("--config", help="TOML configuration file")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log more (repeat for debug output)")
    return parser


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "x", encoding="utf-8") as f:
        f.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        if args.config:
            config.use(args.config)
    except (FileNotFoundError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    if args.verbose:
        logging.getLogger("pyhopf").setLevel(logging.INFO if args.verbose == 1 else logging.DEBUG)

    try:
        doc = ProblemDocument.load(args.document)
        code, envelope, text = run(args.command, doc, args)
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    except (PyHopfError, ValueError, ArithmeticError) as e:
        logger.error(f"{args.command}: {e}")
        code = EXIT_MALFORMED
        envelope = _envelope(args.command, False, {"error": {"type": type(e).__name__, "message": str(e)}})
        text = f"error: {e}\n"

    if args.pretty:
        output = text if text.endswith("\n") else text + "\n"
    else:
        output = json.dumps(envelope, sort_keys=True, indent=config.get("output.indent"), ensure_ascii=False) + "\n"
    try:
        _emit(output, args.out)
    except FileExistsError:
        print(f"error: {args.out} already exists", file=sys.stderr)
        return EXIT_MALFORMED
    return code


if __name__ == "__main__":
    sys.exit(main())
