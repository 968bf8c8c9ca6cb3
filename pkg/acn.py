"""
Almost Contact Norden Toolkit - Command Line Front End
Checks structures, prints connection/curvature/F tensors, runs the
submanifold pipeline and verifies the built-in worked examples
"""

import argparse
import json
import logging
import re
import sys

import catalog
import config
import geometry
import linalg
import submanifold
from errors import ACNError, SectionTypeError
from input_document import InduceOptions, dumps, export_bundle, export_document, load_document

logger = logging.getLogger(__name__)

RULE = "=" * 70


class Output:
    """Collects human lines and the machine payload of one command"""

    def __init__(self, title):
        self.title = title
        self.lines = []
        self.payload = {"command": title}

    def line(self, text=""):
        self.lines.append(text)

    def report(self, report):
        mark = "✅" if report.passed else "❌"
        self.line(f"{mark} {report.title}")
        for item in report.items:
            item_mark = "✅" if item.passed else "❌"
            detail = f"  ({item.detail})" if item.detail and not item.passed else ""
            self.line(f"   {item_mark} {item.name}{detail}")
        for note in report.notes:
            self.line(f"   ⚠️  {note}")

    def emit(self, fmt, stream=None):
        stream = stream or sys.stdout
        if fmt == "json":
            print(json.dumps(self.payload, indent=2, ensure_ascii=False), file=stream)
            return
        print(RULE, file=stream)
        print(f"📐 {self.title}", file=stream)
        print(RULE, file=stream)
        for text in self.lines:
            print(text, file=stream)
        print("", file=stream)
        print("```json", file=stream)
        print(json.dumps(self.payload, indent=2, ensure_ascii=False), file=stream)
        print("```", file=stream)


# ----------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------
def cmd_check(args):
    """Jacobi identity and almost contact Norden axioms of a document"""
    doc = load_document(args.file)
    out = Output(f"check {args.file}")
    jacobi = geometry.check_jacobi(doc.space.frame)
    axioms = geometry.check_acn_axioms(doc.space)
    out.report(jacobi)
    out.report(axioms)
    out.payload["reports"] = [jacobi.to_dict(), axioms.to_dict()]
    passed = jacobi.passed and axioms.passed
    out.payload["passed"] = passed
    return out, 0 if passed else 1


def cmd_tensors(args):
    """Nonzero components of the connection, curvature or F"""
    doc = load_document(args.file)
    space = doc.space
    basis = space.basis
    conn = geometry.koszul_connection(space.frame, space.metric)
    out = Output(f"tensors {args.file} --which {args.which}")
    exit_code = 0

    if args.which == "connection":
        components = [
            (f"nabla_{basis[i]} {basis[j]}", geometry.format_vector(conn.gamma[i, j], basis))
            for i in range(space.dim) for j in range(space.dim)
            if any(not c.is_zero() for c in conn.gamma[i, j])
        ]
        report = geometry.check_connection(conn)
    elif args.which == "curvature":
        curv = geometry.curvature(conn)
        components = geometry.nonzero_components(curv.lowered, basis)
        report = geometry.check_curvature(curv)
    else:
        F = geometry.f_tensor_lie(space.frame, space.metric, space.structure.phi)
        F_conn = geometry.f_tensor_from_connection(conn, space.metric, space.structure)
        components = geometry.nonzero_components(F, basis)
        report = geometry.CheckReport("F tensor")
        report.add("F from the connection equals F from brackets", linalg.equal(F, F_conn))
        out.payload["class_F0"] = geometry.is_class_F0(F)

    if components:
        for label, value in components:
            out.line(f"   {label}: {value}")
    else:
        out.line("   all components zero")
    out.report(report)
    out.payload["components"] = {label: value for label, value in components}
    out.payload["report"] = report.to_dict()
    if not report.passed:
        exit_code = 1
    return out, exit_code


def cmd_sub(args):
    """Classification, decomposition, induced structure and Gauss-Weingarten data"""
    doc = load_document(args.file)
    if doc.section is None:
        raise SectionTypeError("document has no section block")
    space, section = doc.space, doc.section
    out = Output(f"sub {args.file}")
    reports = []

    kind = submanifold.classify_section(space, section)
    out.line(f"📊 normal section: {kind.describe()}")
    out.payload["section_class"] = kind.to_dict()

    if not section.tangent and doc.induce is None:
        return out, 0

    try:
        dec = submanifold.decompose(space, section)
    except SectionTypeError as exc:
        step = "decomposition" if doc.induce is None else "induction"
        out.line(f"❌ {step} refused: {exc}")
        out.payload["error"] = str(exc)
        return out, exc.exit_code

    out.line(f"📊 decomposition ({dec.case}): a = {dec.a}, b = {dec.b}")
    names = section.tangent_names
    for label in ("xi0", "xi1", "xi2"):
        out.line(f"   {label} = {geometry.format_vector(getattr(dec, label), names)}")
    out.payload["decomposition"] = dec.to_dict()
    identities = submanifold.check_decomposition_identities(space, dec)
    out.report(identities)
    reports.append(identities)

    conn = geometry.koszul_connection(space.frame, space.metric)
    gw = submanifold.gauss_weingarten(space, section, conn)
    out.payload["gauss_weingarten"] = gw.to_dict()
    out.line(f"📊 gamma = {linalg.to_strings(gw.gamma)}")
    gauss = submanifold.check_gauss_weingarten(space, section, conn, gw)
    out.report(gauss)
    reports.append(gauss)

    if doc.induce is not None:
        induced = _induce(dec, doc.induce)
        out.line(f"📊 induced structure ({induced.branch}): "
                 f"xi = {geometry.format_vector(induced.structure.xi, names)}")
        for key, value in induced.params.items():
            out.line(f"   {key} = {value}")
        out.payload["induced"] = induced.to_dict()
        axioms = induced.check()
        out.report(axioms)
        reports.append(axioms)

        closure = submanifold.check_subalgebra(space.frame, section.tangent, names)
        if closure.passed:
            sub = submanifold.induced_geometry(space, section, induced)
            F = geometry.f_tensor_lie(sub.frame, sub.metric, sub.structure.phi)
            components = geometry.nonzero_components(F, names)
            form, _ = geometry.trilinear_form(F, labels=coordinate_labels(names))
            out.line(f"📊 F(X,Y,Z) = {form}")
            is_f0 = geometry.is_class_F0(F)
            out.line(f"{'✅' if is_f0 else '⚠️ '} class F0: {is_f0}")
            out.payload["F"] = {label: value for label, value in components}
            out.payload["F_form"] = str(form)
            out.payload["class_F0"] = is_f0
        else:
            out.line("⚠️  tangent space is not a subalgebra; F of the submanifold is not computed")
            out.report(closure)

    passed = all(report.passed for report in reports)
    out.payload["passed"] = passed
    return out, 0 if passed else 1


def coordinate_labels(names):
    """Digit suffixes of the basis names (E1, E2, E5 -> 1, 2, 5), or positions when ambiguous"""
    labels = [re.sub(r"\D", "", name) for name in names]
    if all(labels) and len(set(labels)) == len(labels):
        return labels
    return [str(i + 1) for i in range(len(names))]


def _induce(dec, options):
    case = options.case
    if case == "auto":
        case = dec.case
    if case == submanifold.ORTHOGONAL:
        return submanifold.induce_orthogonal(dec, options.t0, options.t2)
    return submanifold.induce_nonorthogonal(dec, options.branch, options.epsilon, options.k)


def cmd_verify_examples(args):
    """Rebuild the worked examples and compare with their expected values"""
    out = Output("verify-examples")
    report = catalog.run_acceptance(epsilon=args.epsilon, branch=args.branch)
    out.report(report)
    if report.passed:
        out.line("")
        out.line("✅ H3: class F0 confirmed")
        out.line("✅ H: F matches the closed form")
    out.payload["report"] = report.to_dict()
    out.payload["passed"] = report.passed
    return out, 0 if report.passed else 1


def cmd_export(args):
    """Print a built-in example as an input document"""
    out = Output(f"export {args.example}")
    if args.example == "G":
        data = export_document(catalog.build_G())
    elif args.example == "H3":
        data = export_bundle(catalog.example_H3(), InduceOptions(case="orthogonal"))
    else:
        data = export_bundle(catalog.example_H(), InduceOptions(case="non_orthogonal"))
    print(dumps(data))
    return out, 0


# ----------------------------------------------------------------------
# entry point
# ----------------------------------------------------------------------
def build_parser():
    parser = argparse.ArgumentParser(
        prog="acn",
        description="Exact computations for left-invariant almost contact structures with Norden metric",
    )
    parser.add_argument("--format", choices=["human", "json"], default=config.DEFAULT_FORMAT)
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="Jacobi identity and structure axioms")
    check.add_argument("file")
    check.set_defaults(handler=cmd_check)

    tensors = commands.add_parser("tensors", help="connection, curvature or F components")
    tensors.add_argument("file")
    tensors.add_argument("--which", choices=["connection", "curvature", "f"], default="f")
    tensors.set_defaults(handler=cmd_tensors)

    sub = commands.add_parser("sub", help="submanifold pipeline for the section block")
    sub.add_argument("file")
    sub.set_defaults(handler=cmd_sub)

    verify = commands.add_parser("verify-examples", help="rebuild the worked examples")
    verify.add_argument("--epsilon", type=int, choices=[1, -1], default=config.DEFAULT_EPSILON)
    verify.add_argument("--branch", choices=list(config.BRANCHES), default=config.DEFAULT_BRANCH)
    verify.set_defaults(handler=cmd_verify_examples)

    export = commands.add_parser("export", help="print a built-in example as an input document")
    export.add_argument("example", choices=["G", "H3", "H"])
    export.set_defaults(handler=cmd_export)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else getattr(logging, config.LOG_LEVEL.upper(), logging.WARNING),
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )
    try:
        out, code = args.handler(args)
    except ACNError as exc:
        if args.format == "json":
            print(json.dumps({"error": str(exc), "exit_code": exc.exit_code}))
        else:
            print(f"❌ {exc}")
        return exc.exit_code
    except Exception as exc:
        logger.exception("unexpected failure")
        print(f"❌ Unexpected error: {exc}")
        return 1
    if args.command != "export":
        out.emit(args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
