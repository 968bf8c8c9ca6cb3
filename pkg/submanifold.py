"""
Codimension-2 Submanifold Module
Normal section taxonomy, decomposition of the ambient structure along a
tangent/normal split, induced almost contact structures and the
Gauss-Weingarten data of left-invariant submanifolds
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

import config
import linalg
from errors import (
    ComputationError,
    InconsistentDataError,
    NotASubalgebraError,
    RuleViolationError,
    SectionTypeError,
    ValidationError,
)
from geometry import (
    AlmostContactData,
    AmbientSpace,
    CheckReport,
    LieAlgebraFrame,
    NordenMetric,
    check_structure_axioms,
    format_vector,
)
from scalar import ScalarFraction, sqrt_exact

logger = logging.getLogger(__name__)

ISOTROPY = {2: "non-degenerate", 1: "weakly isotropic", 0: "strongly isotropic"}

NON_ORTHOGONAL = "non_orthogonal"
ORTHOGONAL = "orthogonal"


@dataclass
class NormalSection:
    """Normals N1, N2 and an optional spanning set of the tangent space, all in ambient coordinates"""

    n1: np.ndarray
    n2: np.ndarray
    tangent: list = field(default_factory=list)
    tangent_names: list = None

    def __post_init__(self):
        if self.tangent_names is None:
            self.tangent_names = [f"t{i + 1}" for i in range(len(self.tangent))]
        if len(self.tangent_names) != len(self.tangent):
            raise ValidationError("one name per tangent vector is required", field="section.tangent")

    def gram(self, metric):
        """Gram matrix of g on the normal plane"""
        normals = (self.n1, self.n2)
        table = self.n1[0].table
        out = linalg.zeros(table, 2, 2)
        for i in range(2):
            for j in range(2):
                out[i, j] = metric.inner(normals[i], normals[j])
        return out

    def tangent_gram(self, metric):
        """Restricted metric h on the tangent basis"""
        m = len(self.tangent)
        out = linalg.zeros(self.n1[0].table, m, m)
        for i in range(m):
            for j in range(m):
                out[i, j] = metric.inner(self.tangent[i], self.tangent[j])
        return out

    def to_ambient(self, coords):
        """Ambient vector sum_j coords[j] * t_j"""
        total = coords[0] * self.tangent[0]
        for c, t in zip(coords[1:], self.tangent[1:]):
            total = total + c * t
        return total


@dataclass
class SectionClass:
    """Classification of the normal plane alpha = span(N1, N2)"""

    rank: int
    signature: object
    type: str
    isotropy: str
    holomorphic: bool
    xi_section: bool
    totally_real: bool
    xi_orthogonal: bool

    def to_dict(self):
        signature = list(self.signature) if isinstance(self.signature, tuple) else self.signature
        return {
            "rank": self.rank,
            "signature": signature,
            "type": self.type,
            "isotropy": self.isotropy,
            "holomorphic": self.holomorphic,
            "xi_section": self.xi_section,
            "totally_real": self.totally_real,
            "xi_orthogonal": self.xi_orthogonal,
        }

    def describe(self):
        flags = [name for name in ("holomorphic", "xi_section", "totally_real", "xi_orthogonal")
                 if getattr(self, name)]
        return f"{self.isotropy}, {self.type} type" + (f", {', '.join(flags)}" if flags else "")


def classify_section(space, section):
    """
    Classify a normal section by the restriction of g and the action of phi

    Args:
        space: AmbientSpace
        section: NormalSection (tangent vectors are not needed)

    Returns:
        SectionClass
    """
    n1, n2 = section.n1, section.n2
    if linalg.rank(np.array([n1, n2], dtype=object)) < 2:
        raise ValidationError("normals N1 and N2 are linearly dependent", field="section")

    metric = space.metric
    phi = space.structure.phi
    xi = space.structure.xi
    result = linalg.sym_rank_and_signature(section.gram(metric))

    if result.rank < 2:
        kind = "degenerate"
    elif not result.determinate:
        kind = linalg.INDETERMINATE
    elif result.signature == (1, 1):
        kind = "hybrid"
    else:
        kind = "pure"

    images = (phi @ n1, phi @ n2)
    holomorphic = all(linalg.in_span([n1, n2], image) for image in images)
    totally_real = all(
        metric.inner(image, normal).is_zero() for image in images for normal in (n1, n2)
    )
    return SectionClass(
        rank=result.rank,
        signature=result.signature,
        type=kind,
        isotropy=ISOTROPY[result.rank],
        holomorphic=holomorphic,
        xi_section=linalg.in_span([n1, n2], xi),
        totally_real=totally_real,
        xi_orthogonal=metric.inner(xi, n1).is_zero() and metric.inner(xi, n2).is_zero(),
    )


@dataclass
class Decomposition:
    """
    Components of the ambient structure along the submanifold

    Vectors (xi0, xi1, xi2) and covectors (eta0, eta1, eta2) are expressed in
    the tangent basis; h is the restricted metric on that basis.
    """

    section: NormalSection
    h: np.ndarray
    a: ScalarFraction
    b: ScalarFraction
    xi0: np.ndarray
    xi1: np.ndarray
    xi2: np.ndarray
    eta0: np.ndarray
    eta1: np.ndarray
    eta2: np.ndarray
    phi_tan: np.ndarray
    case: str
    degenerate: bool = False

    @property
    def table(self):
        return self.a.table

    @property
    def dim(self):
        return self.h.shape[0]

    def to_dict(self):
        names = self.section.tangent_names
        return {
            "case": self.case,
            "degenerate": self.degenerate,
            "a": str(self.a),
            "b": str(self.b),
            "xi0": format_vector(self.xi0, names),
            "xi1": format_vector(self.xi1, names),
            "xi2": format_vector(self.xi2, names),
            "eta0": linalg.to_strings(self.eta0),
            "eta1": linalg.to_strings(self.eta1),
            "eta2": linalg.to_strings(self.eta2),
            "phi_tan": linalg.to_strings(self.phi_tan),
        }


class _TangentFrame:
    """Coordinates with respect to a tangent basis, through the inverse restricted metric"""

    def __init__(self, space, section):
        self.metric = space.metric
        self.section = section
        self.h = section.tangent_gram(space.metric)
        self.h_inv = linalg.mat_inverse(self.h)

    def coords(self, v):
        """Tangent coordinates of the tangential part of v"""
        pairings = np.empty(len(self.section.tangent), dtype=object)
        for j, t in enumerate(self.section.tangent):
            pairings[j] = self.metric.inner(v, t)
        return self.h_inv @ pairings

    def normal_part(self, v):
        """g(v, N1) N1 - g(v, N2) N2 for a section normalized to g(N1,N1) = -g(N2,N2) = 1"""
        n1, n2 = self.section.n1, self.section.n2
        return self.metric.inner(v, n1) * n1 - self.metric.inner(v, n2) * n2


def _require_complement(space, section):
    n = space.dim
    metric = space.metric
    if len(section.tangent) != n - 2:
        raise ValidationError(f"tangent basis needs {n - 2} vectors, got {len(section.tangent)}",
                              field="section.tangent")
    for name, t in zip(section.tangent_names, section.tangent):
        for label, normal in (("N1", section.n1), ("N2", section.n2)):
            if not metric.inner(t, normal).is_zero():
                raise ValidationError(f"tangent vector {name} is not orthogonal to {label}",
                                      field="section.tangent")
    spanning = np.array(list(section.tangent) + [section.n1, section.n2], dtype=object)
    if linalg.rank(spanning) != n:
        raise ValidationError("tangent vectors and normals do not span the algebra", field="section.tangent")


def _require_normalized(space, section):
    gram = section.gram(space.metric)
    expected = linalg.diagonal([1, -1], space.table)
    if not linalg.equal(gram, expected):
        raise SectionTypeError(
            "normals must satisfy g(N1,N1) = -g(N2,N2) = 1, g(N1,N2) = 0 (hybrid, normalized)"
        )


def decompose(space, section):
    """
    Split the ambient structure along a totally real hybrid normal section

    Args:
        space: AmbientSpace
        section: NormalSection with a tangent basis of the orthogonal complement

    Returns:
        Decomposition with a = g(xi, N1), b = -g(xi, N2)

    Raises:
        SectionTypeError: section not normalized hybrid, not totally real, or xi in alpha
    """
    _require_normalized(space, section)
    kind = classify_section(space, section)
    if not kind.totally_real:
        raise SectionTypeError("normal section is not totally real: g(phi N_i, N_j) must vanish")
    if kind.xi_section:
        raise SectionTypeError("xi lies in the normal section; the split needs xi outside alpha")
    _require_complement(space, section)

    metric = space.metric
    phi, xi, eta = space.structure.phi, space.structure.xi, space.structure.eta
    n1, n2 = section.n1, section.n2
    frame = _TangentFrame(space, section)
    m = len(section.tangent)

    a = metric.inner(xi, n1)
    b = -metric.inner(xi, n2)
    xi0 = frame.coords(xi - a * n1 - b * n2)
    xi1 = frame.coords(phi @ n1)
    xi2 = frame.coords(-(phi @ n2))

    eta0 = np.empty(m, dtype=object)
    eta1 = np.empty(m, dtype=object)
    eta2 = np.empty(m, dtype=object)
    phi_tan = linalg.zeros(space.table, m, m)
    for j, t in enumerate(section.tangent):
        image = phi @ t
        eta0[j] = linalg.dot(eta, t)
        eta1[j] = metric.inner(image, n1)
        eta2[j] = -metric.inner(image, n2)
        phi_tan[:, j] = frame.coords(image)

    case = ORTHOGONAL if a.is_zero() and b.is_zero() else NON_ORTHOGONAL
    degenerate = linalg.all_zero(eta1) and linalg.all_zero(eta2)
    if degenerate:
        logger.warning("phi preserves the tangent space: normal components eta1, eta2 vanish")
    logger.info("decomposition: %s case, a = %s, b = %s", case, a, b)
    return Decomposition(section, frame.h, a, b, xi0, xi1, xi2, eta0, eta1, eta2, phi_tan,
                         case, degenerate)


def check_decomposition_identities(space, dec):
    """
    Verify the reconstruction of the ambient structure and the identity suite
    relating (xi_i, eta^i, a, b); with a = b = 0 the suite reduces to the
    orthogonal-case identities

    Returns:
        CheckReport
    """
    section = dec.section
    phi, xi = space.structure.phi, space.structure.xi
    n1, n2 = section.n1, section.n2
    table = dec.table
    h = dec.h
    a, b = dec.a, dec.b
    P = dec.phi_tan
    m = dec.dim
    title = "orthogonal-case identities" if dec.case == ORTHOGONAL else "decomposition identities"
    report = CheckReport(title)

    rebuilt = all(
        linalg.equal(
            phi @ t,
            section.to_ambient(P[:, j]) + dec.eta1[j] * n1 + dec.eta2[j] * n2,
        )
        for j, t in enumerate(section.tangent)
    )
    report.add("phi X = phi_tan X + eta1(X) N1 + eta2(X) N2", rebuilt)
    report.add("phi N1 = xi1", linalg.equal(phi @ n1, section.to_ambient(dec.xi1)))
    report.add("phi N2 = -xi2", linalg.equal(phi @ n2, -section.to_ambient(dec.xi2)))
    report.add("xi = xi0 + a N1 + b N2",
               linalg.equal(xi, section.to_ambient(dec.xi0) + a * n1 + b * n2))

    xis = (dec.xi0, dec.xi1, dec.xi2)
    etas = (dec.eta0, dec.eta1, dec.eta2)
    for i in range(3):
        report.add(f"eta{i}(X) = g(X, xi{i})", linalg.equal(etas[i], h @ xis[i]))

    outer = linalg.outer
    report.add(
        "g(phi X, phi Y) = -g + eta0 eta0 - eta1 eta1 + eta2 eta2",
        linalg.equal(P.T @ h @ P,
                     -h + outer(dec.eta0, dec.eta0) - outer(dec.eta1, dec.eta1)
                     + outer(dec.eta2, dec.eta2)),
    )
    report.add(
        "phi^2 = -id + xi0 eta0 - xi1 eta1 + xi2 eta2",
        linalg.equal(P @ P,
                     -linalg.identity(table, m) + outer(dec.xi0, dec.eta0)
                     - outer(dec.xi1, dec.eta1) + outer(dec.xi2, dec.eta2)),
    )
    report.add("eta0 o phi = -a eta1 + b eta2",
               linalg.equal(dec.eta0 @ P, -a * dec.eta1 + b * dec.eta2))
    report.add("eta1 o phi = a eta0", linalg.equal(dec.eta1 @ P, a * dec.eta0))
    report.add("eta2 o phi = b eta0", linalg.equal(dec.eta2 @ P, b * dec.eta0))
    report.add("phi xi0 = -a xi1 + b xi2", linalg.equal(P @ dec.xi0, -a * dec.xi1 + b * dec.xi2))
    report.add("phi xi1 = a xi0", linalg.equal(P @ dec.xi1, a * dec.xi0))
    report.add("phi xi2 = b xi0", linalg.equal(P @ dec.xi2, b * dec.xi0))

    def g(u, v):
        return linalg.bilinear(h, u, v)

    expected = [
        ("g(xi0, xi0) = 1 - a^2 + b^2", g(dec.xi0, dec.xi0), 1 - a * a + b * b),
        ("g(xi1, xi1) = a^2 - 1", g(dec.xi1, dec.xi1), a * a - 1),
        ("g(xi2, xi2) = 1 + b^2", g(dec.xi2, dec.xi2), 1 + b * b),
        ("g(xi0, xi1) = 0", g(dec.xi0, dec.xi1), 0),
        ("g(xi0, xi2) = 0", g(dec.xi0, dec.xi2), 0),
        ("g(xi1, xi2) = ab", g(dec.xi1, dec.xi2), a * b),
    ]
    for name, value, target in expected:
        report.add(name, (value - target).is_zero(), f"value = {value}")
    return report


# ----------------------------------------------------------------------
# induced structures
# ----------------------------------------------------------------------
@dataclass
class InducedStructure:
    """Almost contact data on the tangent basis with the parameters that produced it"""

    structure: AlmostContactData
    metric: np.ndarray
    branch: str
    params: dict
    tangent_names: list

    def check(self):
        return check_structure_axioms(self.metric, self.structure)

    def to_dict(self):
        return {
            "branch": self.branch,
            "params": {key: str(value) for key, value in self.params.items()},
            "xi": format_vector(self.structure.xi, self.tangent_names),
            "eta": linalg.to_strings(self.structure.eta),
            "phi": linalg.to_strings(self.structure.phi),
        }


def structure_coefficients(k, branch=config.DEFAULT_BRANCH, epsilon=config.DEFAULT_EPSILON):
    """
    Coefficients (lambda, mu) of phi = lambda * phi_tan^3 + mu * phi_tan

    Args:
        k: ScalarFraction with k^2 = a^2 - b^2
        branch: "lambda1" (denominator k(k+1)) or "lambda2" (denominator k(k-1))
        epsilon: +1 or -1

    Returns:
        (lambda, mu, tag) where tag names the case of k
    """
    if epsilon not in (1, -1):
        raise ValidationError(f"epsilon must be +1 or -1, got {epsilon!r}", field="epsilon")
    if branch not in config.BRANCHES:
        raise ValidationError(f"unknown branch {branch!r}; use one of {config.BRANCHES}", field="branch")
    if k.is_zero():
        raise ComputationError("k = 0: a^2 = b^2 leaves no induced structure of this kind")

    is_plus_one = (k - 1).is_zero()
    is_minus_one = (k + 1).is_zero()
    sign = 1 if branch == "lambda1" else -1
    if (branch == "lambda1" and is_minus_one) or (branch == "lambda2" and is_plus_one):
        raise ComputationError(
            f"branch {branch} is singular at k = {k}: denominator k(k{'+' if sign > 0 else '-'}1) vanishes"
        )

    denominator = k * (k + sign)
    lam = epsilon / denominator
    mu = epsilon * (1 + k * k + sign * k) / denominator
    if branch == "lambda1":
        tag = "k_eq_plus1" if is_plus_one else "k_general_lambda1"
    else:
        tag = "k_eq_minus1" if is_minus_one else "k_general_lambda2"
    return lam, mu, tag


def resolve_k(dec, k=None):
    """
    k with k^2 = a^2 - b^2: the supplied value (verified) or an exact root

    Raises:
        RuleViolationError: supplied k does not square to a^2 - b^2
        ComputationError: no k supplied and a^2 - b^2 has no exact root
    """
    target = dec.a * dec.a - dec.b * dec.b
    if k is None:
        root = sqrt_exact(target)
        if root is None:
            raise ComputationError(
                f"a^2 - b^2 = {target} has no exact square root; declare k with rule k^2 -> a^2 - b^2"
            )
        return root
    k = dec.table.element(k)
    if not (k * k - target).is_zero():
        raise RuleViolationError(f"k = {k} does not satisfy k^2 = a^2 - b^2 = {target}")
    return k


def induce_nonorthogonal(dec, branch=config.DEFAULT_BRANCH, epsilon=config.DEFAULT_EPSILON, k=None):
    """
    Induced structure when xi is not orthogonal to the submanifold

    xi = -(b/k) xi1 + (a/k) xi2, eta = -(b/k) eta1 + (a/k) eta2,
    phi = lambda phi_tan^3 + mu phi_tan

    Args:
        dec: Decomposition in the non-orthogonal case
        branch: "lambda1" or "lambda2"
        epsilon: +1 or -1
        k: optional root of a^2 - b^2 (a symbol of the table or a concrete scalar)

    Returns:
        InducedStructure
    """
    if dec.case != NON_ORTHOGONAL:
        raise SectionTypeError("xi is orthogonal to the submanifold; use induce_orthogonal")
    if dec.a.is_zero():
        raise ComputationError("a = g(xi, N1) vanishes; this construction needs a != 0")

    k = resolve_k(dec, k)
    lam, mu, tag = structure_coefficients(k, branch, epsilon)
    first, second = -dec.b / k, dec.a / k
    xi = first * dec.xi1 + second * dec.xi2
    eta = first * dec.eta1 + second * dec.eta2
    P = dec.phi_tan
    phi = lam * (P @ P @ P) + mu * P
    logger.info("induced structure (%s): lambda = %s, mu = %s", tag, lam, mu)
    return InducedStructure(
        structure=AlmostContactData(phi=phi, xi=xi, eta=eta),
        metric=dec.h,
        branch=tag,
        params={"lambda": lam, "mu": mu, "epsilon": epsilon, "k": k},
        tangent_names=dec.section.tangent_names,
    )


def induce_orthogonal(dec, t0=None, t2=None, strict=True):
    """
    Induced structure when xi is tangent to the submanifold

    xi = t0 xi0 - t2 xi2, eta = t0 eta0 - t2 eta2,
    phi = phi_tan + t0 (eta1 xi2 + eta2 xi1) + t2 (eta0 xi1 + eta1 xi0)

    Args:
        dec: Decomposition in the orthogonal case
        t0, t2: circle parameters; default to the declared symbols "t0", "t2"
        strict: reject parameters with t0^2 + t2^2 != 1

    Returns:
        InducedStructure
    """
    if dec.case != ORTHOGONAL:
        raise SectionTypeError("xi is not orthogonal to the submanifold; use induce_nonorthogonal")
    table = dec.table
    missing = [name for name, value in (("t0", t0), ("t2", t2)) if value is None and name not in table.symbols]
    if missing:
        raise ValidationError(
            f"default circle parameters need declared symbol(s) {missing}; declare t0, t2 "
            "with the relation t2^2 = 1 - t0^2 or pass explicit values",
            field="section.induce",
        )
    t0 = table.element(table.symbol("t0") if t0 is None else t0)
    t2 = table.element(table.symbol("t2") if t2 is None else t2)
    circle = t0 * t0 + t2 * t2 - 1
    if strict and not circle.is_zero():
        raise RuleViolationError(
            f"t0^2 + t2^2 - 1 = {circle}; declare the rule t2^2 -> 1 - t0^2 or pick a point on the circle"
        )

    outer = linalg.outer
    xi = t0 * dec.xi0 - t2 * dec.xi2
    eta = t0 * dec.eta0 - t2 * dec.eta2
    phi = (
        dec.phi_tan
        + t0 * (outer(dec.xi2, dec.eta1) + outer(dec.xi1, dec.eta2))
        + t2 * (outer(dec.xi1, dec.eta0) + outer(dec.xi0, dec.eta1))
    )
    return InducedStructure(
        structure=AlmostContactData(phi=phi, xi=xi, eta=eta),
        metric=dec.h,
        branch=ORTHOGONAL,
        params={"t0": t0, "t2": t2},
        tangent_names=dec.section.tangent_names,
    )


# ----------------------------------------------------------------------
# Gauss-Weingarten
# ----------------------------------------------------------------------
@dataclass
class GaussWeingartenData:
    """Shape operators A1, A2 (tangent matrices) and the normal connection form gamma"""

    A1: np.ndarray
    A2: np.ndarray
    gamma: np.ndarray
    tangent_names: list

    def to_dict(self):
        return {
            "A1": linalg.to_strings(self.A1),
            "A2": linalg.to_strings(self.A2),
            "gamma": linalg.to_strings(self.gamma),
        }


def gauss_weingarten(space, section, ambient_conn):
    """
    Extract A1, A2 and gamma from nabla_X N1 = -A1 X + gamma(X) N2 and
    nabla_X N2 = -A2 X + gamma(X) N1

    Args:
        space: AmbientSpace
        section: normalized NormalSection with a tangent basis
        ambient_conn: ConnectionTable of the ambient space

    Returns:
        GaussWeingartenData

    Raises:
        InconsistentDataError: -g(nabla_X N1, N2) differs from g(nabla_X N2, N1)
    """
    _require_normalized(space, section)
    _require_complement(space, section)
    metric = space.metric
    n1, n2 = section.n1, section.n2
    frame = _TangentFrame(space, section)
    m = len(section.tangent)
    table = space.table

    A1 = linalg.zeros(table, m, m)
    A2 = linalg.zeros(table, m, m)
    gamma = np.empty(m, dtype=object)
    for j, t in enumerate(section.tangent):
        d1 = ambient_conn.along(t, n1)
        d2 = ambient_conn.along(t, n2)
        A1[:, j] = -frame.coords(d1)
        A2[:, j] = -frame.coords(d2)
        first, second = -metric.inner(d1, n2), metric.inner(d2, n1)
        if not (first - second).is_zero():
            raise InconsistentDataError(
                f"gamma({section.tangent_names[j]}) differs: {first} vs {second}"
            )
        gamma[j] = first
    return GaussWeingartenData(A1, A2, gamma, section.tangent_names)


def second_fundamental_form(space, section, gw):
    """
    Normal part of nabla_X Y predicted by the shape operators:
    sigma(t_i, t_j) = g(A1 t_i, t_j) N1 - g(A2 t_i, t_j) N2

    Returns:
        (m, m, n) object array of ambient vectors
    """
    h = section.tangent_gram(space.metric)
    m = len(section.tangent)
    out = linalg.zeros(space.table, m, m, space.dim)
    for i in range(m):
        for j in range(m):
            c1 = linalg.dot(gw.A1[:, i], h[:, j])
            c2 = linalg.dot(gw.A2[:, i], h[:, j])
            out[i, j] = c1 * section.n1 - c2 * section.n2
    return out


def check_gauss_weingarten(space, section, ambient_conn, gw):
    """Weingarten reconstruction and the Gauss normal-part identity, exactly"""
    frame = _TangentFrame(space, section)
    n1, n2 = section.n1, section.n2
    report = CheckReport("Gauss-Weingarten")
    weingarten1, weingarten2 = True, True
    for j, t in enumerate(section.tangent):
        d1 = ambient_conn.along(t, n1)
        d2 = ambient_conn.along(t, n2)
        weingarten1 &= linalg.equal(d1, -section.to_ambient(gw.A1[:, j]) + gw.gamma[j] * n2)
        weingarten2 &= linalg.equal(d2, -section.to_ambient(gw.A2[:, j]) + gw.gamma[j] * n1)
    report.add("nabla_X N1 = -A1 X + gamma(X) N2", weingarten1)
    report.add("nabla_X N2 = -A2 X + gamma(X) N1", weingarten2)

    sigma = second_fundamental_form(space, section, gw)
    gauss = True
    for i, ti in enumerate(section.tangent):
        for j, tj in enumerate(section.tangent):
            normal = frame.normal_part(ambient_conn.along(ti, tj))
            gauss &= linalg.equal(normal, sigma[i, j])
    report.add("normal part of nabla_X Y = g(A1 X, Y) N1 - g(A2 X, Y) N2", gauss)
    return report


# ----------------------------------------------------------------------
# subalgebras and the induced space
# ----------------------------------------------------------------------
def check_subalgebra(frame, vectors, names=None):
    """Bracket closure of span(vectors) inside the Lie algebra"""
    names = names or [f"t{i + 1}" for i in range(len(vectors))]
    report = CheckReport("subalgebra closure")
    for (i, u), (j, v) in combinations(enumerate(vectors), 2):
        product = frame.bracket(u, v)
        ok = linalg.in_span(vectors, product)
        detail = "" if ok else f"[{names[i]},{names[j]}] = {format_vector(product, frame.basis)}"
        report.add(f"[{names[i]},{names[j]}] in span", ok, detail)
    return report


def restricted_frame(space, section):
    """
    Lie algebra frame on the tangent basis

    Raises:
        NotASubalgebraError: the tangent span is not closed under the bracket
    """
    closure = check_subalgebra(space.frame, section.tangent, section.tangent_names)
    if not closure.passed:
        failing = "; ".join(item.detail for item in closure.failures())
        raise NotASubalgebraError(f"tangent space is not a subalgebra: {failing}")

    frame = _TangentFrame(space, section)
    m = len(section.tangent)
    upper = {}
    for i, j in combinations(range(m), 2):
        product = space.frame.bracket(section.tangent[i], section.tangent[j])
        upper[(i, j)] = frame.coords(product)
    return LieAlgebraFrame.from_upper(space.table, section.tangent_names, upper)


def induced_geometry(space, section, induced):
    """
    Package the submanifold as an AmbientSpace: restricted brackets, restricted
    metric and the induced structure

    Raises:
        NotASubalgebraError: the tangent span is not closed under the bracket
    """
    sub_frame = restricted_frame(space, section)
    metric = NordenMetric(induced.metric)
    name = f"submanifold of {space.name}" if space.name else "submanifold"
    return AmbientSpace(sub_frame, metric, induced.structure, name=name)
