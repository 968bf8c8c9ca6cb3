"""
Example Catalog Module
The 5-dimensional Lie group with its Norden structure, the basis change to
the E-frame, the subalgebras and normal sections, and the two worked
submanifold examples together with their expected values
"""

import logging
from dataclasses import dataclass, field

import numpy as np

import config
import geometry
import linalg
import submanifold
from errors import ACNError
from geometry import (
    AlmostContactData,
    AmbientSpace,
    CheckReport,
    LieAlgebraFrame,
    NordenMetric,
)
from scalar import SymbolTable
from submanifold import NormalSection

logger = logging.getLogger(__name__)

X_BASIS = ["X1", "X2", "X3", "X4", "X5"]
E_BASIS = ["E1", "E2", "E3", "E4", "E5"]

# The matrix T acts on the ordering (X1, X2, xi, X3, X4); entry j of this list
# is the position of that ordering's j-th vector in the X-basis.
SOURCE_ORDER = [0, 1, 4, 2, 3]

CLASS_F0 = "F0"


def catalog_table(symbols=None, relations=None):
    """Symbol table with a, m, s (s^2 = 3) and the circle t2^2 = 1 - t0^2"""
    return SymbolTable(
        config.CATALOG_SYMBOLS if symbols is None else symbols,
        config.CATALOG_RELATIONS if relations is None else relations,
    )


@dataclass
class ExampleBundle:
    """A worked example: ambient space, normal section and the values the pipeline must reproduce"""

    name: str
    space: AmbientSpace
    section: NormalSection
    expected: dict
    class_label: str
    certified: bool
    notes: list = field(default_factory=list)

    @property
    def table(self):
        return self.space.table


def build_G(table=None):
    """
    The 5-dimensional group: phi X_i = X_{2+i}, phi X_{2+i} = -X_i, phi X5 = 0,
    g = diag(1, 1, -1, -1, 1), xi = X5 and the brackets in parameters a, m

    Returns:
        AmbientSpace
    """
    table = table or catalog_table()
    frame = LieAlgebraFrame.from_upper(table, X_BASIS, {
        (0, 1): [0, 0, 0, "a", 0],
        (0, 2): [0, 0, 0, "-a", 0],
        (1, 2): [0, "a", "a", 0, 0],
        (2, 3): ["a", 0, 0, 0, 0],
        (1, 3): ["-a", 0, 0, 0, 0],
        (1, 4): ["2*m", 0, 0, 0, 0],
        (2, 4): [0, 0, 0, "-2*m", 0],
    })
    metric = NordenMetric(linalg.diagonal([1, 1, -1, -1, 1], table))
    phi = linalg.matrix([
        [0, 0, -1, 0, 0],
        [0, 0, 0, -1, 0],
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0],
    ], table)
    xi = linalg.basis_vector(table, 5, 4)
    eta = metric.lower(xi)
    return AmbientSpace(frame, metric, AlmostContactData(phi, xi, eta), name="G")


def e_frame_transform(table):
    """Basis-change matrix in the (X1, X2, xi, X3, X4) ordering"""
    return linalg.matrix([
        [1, 0, 0, 0, 0],
        [0, "s/2", "1/2", 0, 0],
        [0, "-1/2", "s/2", 0, 0],
        [0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1],
    ], table)


def permuted_form(table):
    """Metric of G in the (X1, X2, xi, X3, X4) ordering"""
    return linalg.diagonal([1, 1, 1, -1, -1], table)


def basis_matrix(T, order=SOURCE_ORDER):
    """Columns are the new basis vectors in X-coordinates: P[order[j], i] = T[j, i]"""
    n = T.shape[0]
    P = np.empty((n, n), dtype=object)
    for j in range(n):
        P[order[j], :] = T[j, :]
    return P


def change_basis(space, T, order=SOURCE_ORDER, basis=None, name=""):
    """
    Express a space in the basis E_i = sum_j T[j, i] Y_j where Y is the
    source ordering given by order

    Args:
        space: AmbientSpace in the X-basis
        T: invertible (n, n) matrix
        order: permutation from the ordering T acts on to the X-basis

    Returns:
        AmbientSpace in the new basis

    Raises:
        SingularMatrixError: T is not invertible
    """
    P = basis_matrix(T, order)
    return space.transformed(P, basis=basis or E_BASIS[: space.dim], name=name)


def build_E(table=None):
    space = build_G(table)
    return change_basis(space, e_frame_transform(space.table), name="G (E-basis)")


def check_T_orthogonal(table):
    T = e_frame_transform(table)
    C = permuted_form(table)
    report = CheckReport("basis change")
    return report.add("T^T C T = C", linalg.equal(T.T @ C @ T, C))


def expected_E_data(table):
    """Brackets, phi matrix, xi and metric of G in the E-basis"""
    upper = {
        (0, 1): [0, 0, 0, 0, "s/2*a"],
        (0, 2): [0, 0, 0, 0, "a/2"],
        (2, 4): ["-a/2", 0, 0, 0, 0],
        (1, 4): ["-s/2*a", 0, 0, 0, 0],
        (0, 3): [0, 0, 0, 0, "-a"],
        (1, 3): [0, "3/4*a", "s/4*a", "s/2*a", "-m"],
        (2, 3): [0, "s/4*a", "a/4", "a/2", "s*m"],
        (3, 4): ["a", 0, 0, 0, 0],
        (1, 2): ["2*m", 0, 0, 0, 0],
    }
    return {
        "brackets": LieAlgebraFrame.from_upper(table, E_BASIS, upper).brackets,
        "phi": linalg.matrix([
            [0, 0, 0, -1, 0],
            [0, 0, 0, 0, "-s/2"],
            [0, 0, 0, 0, "-1/2"],
            [1, 0, 0, 0, 0],
            [0, "s/2", "1/2", 0, 0],
        ], table),
        "xi": linalg.vector([0, "-1/2", "s/2", 0, 0], table),
        "metric": permuted_form(table),
    }


def example_H3(table=None):
    """
    Submanifold with tangent {X1, X4, xi}, normals N1 = X2, N2 = X3; xi is
    tangent so the orthogonal-case construction applies and F vanishes

    Returns:
        ExampleBundle
    """
    space = build_G(table)
    table = space.table
    e = space.frame.e
    section = NormalSection(e(1), e(2), [e(0), e(3), e(4)], ["X1", "X4", "X5"])
    expected = {
        "a": table.element(0),
        "b": table.element(0),
        "xi0": linalg.vector([0, 0, 1], table),
        "xi1": linalg.vector([0, 1, 0], table),
        "xi2": linalg.vector([1, 0, 0], table),
        "eta0": linalg.vector([0, 0, 1], table),
        "eta1": linalg.vector([0, -1, 0], table),
        "eta2": linalg.vector([1, 0, 0], table),
        "phi_tan": linalg.zeros(table, 3, 3),
        "induced_xi": linalg.vector(["-t2", 0, "t0"], table),
        "induced_eta": linalg.vector(["-t2", 0, "t0"], table),
        "induced_phi": linalg.matrix([
            [0, "-t0", 0],
            ["t0", 0, "t2"],
            [0, "-t2", 0],
        ], table),
        "F": linalg.zeros(table, 3, 3, 3),
    }
    return ExampleBundle("H3", space, section, expected, CLASS_F0, certified=True)


def example_H(table=None):
    """
    Submanifold with tangent {E1, E2, E5}, normals N1 = E3, N2 = E4; xi is not
    orthogonal to it (a = s/2, b = 0, k = s/2)

    Returns:
        ExampleBundle
    """
    space = build_E(table)
    table = space.table
    e = space.frame.e
    section = NormalSection(e(2), e(3), [e(0), e(1), e(4)], ["E1", "E2", "E5"])
    expected = {
        "a": table.parse("s/2"),
        "b": table.element(0),
        "k": table.parse("s/2"),
        "xi0": linalg.vector([0, "-1/2", 0], table),
        "xi1": linalg.vector([0, 0, "1/2"], table),
        "xi2": linalg.vector([1, 0, 0], table),
        "eta0": linalg.vector([0, "-1/2", 0], table),
        "eta1": linalg.vector([0, 0, "-1/2"], table),
        "eta2": linalg.vector([1, 0, 0], table),
        "phi_tan": linalg.matrix([
            [0, 0, 0],
            [0, 0, "-s/2"],
            [0, "s/2", 0],
        ], table),
        "lambda1": table.parse("4*s*(2 - s)/3"),
        "lambda2": table.parse("-4*(3 + 2*s)/3"),
        "induced_xi": linalg.vector([1, 0, 0], table),
        "induced_eta": linalg.vector([1, 0, 0], table),
        # phi X = -x5 E2 + x2 E5 for epsilon = +1 on the lambda1 branch
        "induced_phi": linalg.matrix([
            [0, 0, 0],
            [0, 0, -1],
            [0, 1, 0],
        ], table),
        "A1": linalg.matrix([
            [0, "-m", 0],
            ["-m", 0, 0],
            [0, 0, 0],
        ], table),
        "A2": linalg.matrix([
            [0, 0, 0],
            [0, "-3/4*a", "-m/2"],
            [0, "m/2", 0],
        ], table),
        "gamma": linalg.vector([0, "s/4*a", "-s/2*m"], table),
        "printed_gamma": linalg.vector([0, "s/2*a", "-s/2*m"], table),
        "F_closed_form": "-s/2*a*x2*(y1*z2 + y2*z1)",
    }
    notes = [
        f"class F4+F8 for the induced structure: {config.UNVERIFIED_CLASS_NOTE}",
        "a != 0 and |a| > b are assumed (here a = s/2, b = 0); inequalities are not checked",
        "gamma(X) = (s/4) a x2 - (s/2) m x5 from both extractions; "
        "the closed form (s/2)(a x2 - m x5) disagrees in the x2 coefficient",
    ]
    return ExampleBundle("H", space, section, expected, "F4+F8", certified=False, notes=notes)


def list_subalgebras(table=None):
    """
    Bracket closure of b1, b2, b3 (X-basis) and b (E-basis), and the classes
    of the normal sections alpha1, alpha2, alpha3 and {E3, E4}

    Returns:
        (CheckReport, {section name: SectionClass})
    """
    G = build_G(table)
    E = build_E(table)
    x, y = G.frame.e, E.frame.e
    report = CheckReport("subalgebras and normal sections")
    subalgebras = [
        ("b1", G, [x(0), x(1), x(2)], ["X1", "X2", "X3"]),
        ("b2", G, [x(0), x(2), x(3)], ["X1", "X3", "X4"]),
        ("b3", G, [x(0), x(3), x(4)], ["X1", "X4", "X5"]),
        ("b", E, [y(0), y(1), y(4)], ["E1", "E2", "E5"]),
    ]
    for name, space, vectors, names in subalgebras:
        closure = submanifold.check_subalgebra(space.frame, vectors, names)
        detail = "; ".join(item.detail for item in closure.failures())
        report.add(f"{name} = span({', '.join(names)}) is a subalgebra", closure.passed, detail)

    sections = [
        ("alpha1", G, NormalSection(x(3), x(4)),
         dict(type="hybrid", xi_section=True)),
        ("alpha2", G, NormalSection(x(1), x(4)),
         dict(type="pure", xi_section=True)),
        ("alpha3", G, NormalSection(x(1), x(2)),
         dict(type="hybrid", totally_real=True, xi_orthogonal=True, xi_section=False)),
        ("alpha", E, NormalSection(y(2), y(3)),
         dict(type="hybrid", totally_real=True, xi_orthogonal=False, xi_section=False)),
    ]
    classes = {}
    for name, space, section, wanted in sections:
        kind = submanifold.classify_section(space, section)
        classes[name] = kind
        ok = all(getattr(kind, key) == value for key, value in wanted.items())
        report.add(f"{name}: {kind.describe()}", ok)
    return report, classes


def _compare(report, name, actual, expected):
    if isinstance(expected, np.ndarray):
        ok = linalg.equal(actual, expected)
        detail = "" if ok else f"got {linalg.to_strings(actual)}"
    else:
        ok = (actual - expected).is_zero()
        detail = "" if ok else f"got {actual}, expected {expected}"
    report.add(name, ok, detail)


def verify_H3(bundle, t0=None, t2=None):
    """Run the orthogonal-case pipeline on H3 and compare with the expected values"""
    space, section, expected = bundle.space, bundle.section, bundle.expected
    report = CheckReport("H3")

    kind = submanifold.classify_section(space, section)
    report.add("normal section: totally real, hybrid, orthogonal to xi",
               kind.totally_real and kind.type == "hybrid" and kind.xi_orthogonal)

    dec = submanifold.decompose(space, section)
    report.add("orthogonal case", dec.case == submanifold.ORTHOGONAL)
    for key in ("a", "b", "xi0", "xi1", "xi2", "eta0", "eta1", "eta2", "phi_tan"):
        _compare(report, f"decomposition {key}", getattr(dec, key), expected[key])
    report.extend(submanifold.check_decomposition_identities(space, dec), prefix="identities")

    induced = submanifold.induce_orthogonal(dec, t0, t2)
    if t0 is None and t2 is None:
        _compare(report, "induced xi", induced.structure.xi, expected["induced_xi"])
        _compare(report, "induced eta", induced.structure.eta, expected["induced_eta"])
        _compare(report, "induced phi", induced.structure.phi, expected["induced_phi"])
    report.extend(induced.check(), prefix="induced axioms")

    conn = geometry.koszul_connection(space.frame, space.metric)
    gw = submanifold.gauss_weingarten(space, section, conn)
    report.extend(submanifold.check_gauss_weingarten(space, section, conn, gw))

    sub = submanifold.induced_geometry(space, section, induced)
    F_lie = geometry.f_tensor_lie(sub.frame, sub.metric, sub.structure.phi)
    sub_conn = geometry.koszul_connection(sub.frame, sub.metric)
    F_conn = geometry.f_tensor_from_connection(sub_conn, sub.metric, sub.structure)
    _compare(report, "F (brackets)", F_lie, expected["F"])
    report.add("F from the connection equals F from brackets", linalg.equal(F_lie, F_conn))
    report.add("class F0 certified", geometry.is_class_F0(F_lie))
    return report


def verify_H(bundle, epsilon=config.DEFAULT_EPSILON, branch=config.DEFAULT_BRANCH):
    """Run the non-orthogonal pipeline on H and compare with the expected values"""
    space, section, expected = bundle.space, bundle.section, bundle.expected
    table = bundle.table
    report = CheckReport("H")
    report.notes.extend(bundle.notes)

    kind = submanifold.classify_section(space, section)
    report.add("normal section: totally real, hybrid, not orthogonal to xi, xi outside alpha",
               kind.totally_real and kind.type == "hybrid"
               and not kind.xi_orthogonal and not kind.xi_section)

    dec = submanifold.decompose(space, section)
    report.add("non-orthogonal case", dec.case == submanifold.NON_ORTHOGONAL)
    for key in ("a", "b", "xi0", "xi1", "xi2", "eta0", "eta1", "eta2", "phi_tan"):
        _compare(report, f"decomposition {key}", getattr(dec, key), expected[key])
    report.extend(submanifold.check_decomposition_identities(space, dec), prefix="identities")

    k = submanifold.resolve_k(dec)
    _compare(report, "k from a^2 - b^2", k, expected["k"])
    induced = submanifold.induce_nonorthogonal(dec, branch=branch, epsilon=epsilon, k=k)
    lam, mu = induced.params["lambda"], induced.params["mu"]
    _compare(report, f"lambda ({branch})", lam, epsilon * expected[branch])
    _compare(report, "mu = lambda + epsilon", mu, lam + epsilon)

    # the lambda2 branch and epsilon = -1 each flip the sign of the induced phi
    sign = epsilon * (1 if branch == "lambda1" else -1)
    _compare(report, "induced xi", induced.structure.xi, expected["induced_xi"])
    _compare(report, "induced eta", induced.structure.eta, expected["induced_eta"])
    _compare(report, "induced phi", induced.structure.phi, sign * expected["induced_phi"])
    report.extend(induced.check(), prefix="induced axioms")

    conn = geometry.koszul_connection(space.frame, space.metric)
    gw = submanifold.gauss_weingarten(space, section, conn)
    _compare(report, "A_N1", gw.A1, expected["A1"])
    _compare(report, "A_N2", gw.A2, expected["A2"])
    _compare(report, "gamma", gw.gamma, expected["gamma"])
    report.extend(submanifold.check_gauss_weingarten(space, section, conn, gw))

    sub = submanifold.induced_geometry(space, section, induced)
    F_lie = geometry.f_tensor_lie(sub.frame, sub.metric, sub.structure.phi)
    sub_conn = geometry.koszul_connection(sub.frame, sub.metric)
    F_conn = geometry.f_tensor_from_connection(sub_conn, sub.metric, sub.structure)
    report.add("F from the connection equals F from brackets", linalg.equal(F_lie, F_conn))

    form, form_table = geometry.trilinear_form(F_lie, labels=["1", "2", "5"])
    closed = form_table.parse(expected["F_closed_form"])
    # the closed form is stated for the lambda1 branch with epsilon = +1
    prefix = "" if sign > 0 else "-"
    report.add(f"F(X,Y,Z) = {prefix}({expected['F_closed_form']})",
               (form - sign * closed).is_zero(), f"F(X,Y,Z) = {form}")
    report.add("not in class F0", not geometry.is_class_F0(F_lie))
    return report


def run_acceptance(epsilon=config.DEFAULT_EPSILON, branch=config.DEFAULT_BRANCH, table=None):
    """
    Rebuild every worked example and compare with its expected values

    Returns:
        CheckReport (failed items name the mismatching quantity)
    """
    table = table or catalog_table()
    report = CheckReport("worked examples")

    G = build_G(table)
    report.extend(geometry.check_jacobi(G.frame), prefix="G")
    report.extend(geometry.check_acn_axioms(G), prefix="G")
    G_conn = geometry.koszul_connection(G.frame, G.metric)
    report.extend(geometry.check_connection(G_conn), prefix="G")
    report.extend(geometry.check_curvature(geometry.curvature(G_conn)), prefix="G")
    F_G = geometry.f_tensor_lie(G.frame, G.metric, G.structure.phi)
    report.add("G: F from the connection equals F from brackets",
               linalg.equal(F_G, geometry.f_tensor_from_connection(G_conn, G.metric, G.structure)))
    report.notes.append(f"class F9 for G: {config.UNVERIFIED_CLASS_NOTE}")

    E = build_E(table)
    report.extend(check_T_orthogonal(table))
    report.extend(geometry.check_jacobi(E.frame), prefix="E-basis")
    report.extend(geometry.check_acn_axioms(E), prefix="E-basis")
    for key, value in expected_E_data(table).items():
        actual = {
            "brackets": E.frame.brackets,
            "phi": E.structure.phi,
            "xi": E.structure.xi,
            "metric": E.metric.matrix,
        }[key]
        _compare(report, f"E-basis {key}", actual, value)
    P = basis_matrix(e_frame_transform(table))
    F_E = geometry.f_tensor_lie(E.frame, E.metric, E.structure.phi)
    report.add("F transported from the X-basis equals F in the E-basis",
               linalg.equal(geometry.transport_covariant(F_G, P), F_E))

    subalgebras, _ = list_subalgebras(table)
    report.extend(subalgebras)

    for bundle, runner in ((example_H3(table), lambda b: verify_H3(b)),
                           (example_H(table), lambda b: verify_H(b, epsilon, branch))):
        try:
            report.extend(runner(bundle), prefix=bundle.name)
        except ACNError as exc:
            report.add(f"{bundle.name}: pipeline", False, str(exc))
    logger.info("acceptance: %d checks, passed = %s", len(report), report.passed)
    return report


if __name__ == "__main__":
    result = run_acceptance()
    print("=" * 70)
    print(f"{'✅' if result.passed else '❌'} {result.title}: {len(result)} checks")
    for failure in result.failures():
        print(f"   ❌ {failure.name} {failure.detail}")
    for note in result.notes:
        print(f"   ⚠️  {note}")
