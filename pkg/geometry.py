"""
Left-Invariant Geometry Module
Lie algebra frames, Norden metrics, almost contact data, the Levi-Civita
connection from the Koszul formula, curvature and the tensor F
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

import linalg
from errors import ValidationError
from scalar import ScalarFraction

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
# reports
# ----------------------------------------------------------------------
@dataclass
class CheckItem:
    """Outcome of one identity check"""

    name: str
    passed: bool
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class CheckReport:
    """Ordered list of identity outcomes; mathematical failures never raise"""

    title: str
    items: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, name, passed, detail=""):
        self.items.append(CheckItem(name, bool(passed), detail))
        return self

    def extend(self, other, prefix=None):
        for item in other.items:
            name = f"{prefix}: {item.name}" if prefix else item.name
            self.items.append(CheckItem(name, item.passed, item.detail))
        self.notes.extend(other.notes)
        return self

    @property
    def passed(self):
        return all(item.passed for item in self.items)

    def failures(self):
        return [item for item in self.items if not item.passed]

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    def to_dict(self):
        return {
            "title": self.title,
            "passed": self.passed,
            "items": [item.to_dict() for item in self.items],
            "notes": list(self.notes),
        }


def format_vector(vec, basis):
    """Readable linear combination such as 'a*X4 + s/2*X5'"""
    parts = []
    for coeff, name in zip(vec, basis):
        if coeff.is_zero():
            continue
        text = str(coeff)
        if text == "1":
            parts.append(name)
        elif text == "-1":
            parts.append(f"-{name}")
        elif any(op in text.lstrip("-") for op in "+-") or "/(" in text:
            parts.append(f"({text})*{name}")
        else:
            parts.append(f"{text}*{name}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


# ----------------------------------------------------------------------
# structures
# ----------------------------------------------------------------------
class LieAlgebraFrame:
    """Basis of a Lie algebra with its bracket table c[i, j] = [e_i, e_j]"""

    def __init__(self, table, basis, brackets):
        """
        Args:
            table: SymbolTable of every entry
            basis: basis names, e.g. ["X1", "X2", "X3", "X4", "X5"]
            brackets: (n, n, n) object array, brackets[i, j] the coordinates of [e_i, e_j]
        """
        self.table = table
        self.basis = list(basis)
        self.dim = len(self.basis)
        brackets = np.asarray(brackets, dtype=object)
        if brackets.shape != (self.dim,) * 3:
            raise ValidationError(
                f"bracket table has shape {brackets.shape}, expected {(self.dim,) * 3}",
                field="brackets",
            )
        for i in range(self.dim):
            if not linalg.all_zero(brackets[i, i]):
                raise ValidationError(f"[{self.basis[i]},{self.basis[i]}] must vanish", field="brackets")
            for j in range(i + 1, self.dim):
                if not linalg.equal(brackets[i, j], -brackets[j, i]):
                    raise ValidationError(
                        f"bracket table is not antisymmetric at ({self.basis[i]},{self.basis[j]})",
                        field="brackets",
                    )
        self.brackets = brackets

    @classmethod
    def from_upper(cls, table, basis, upper):
        """
        Build from the brackets with i < j only

        Args:
            upper: mapping (i, j) -> coordinate vector (missing pairs are zero)
        """
        n = len(basis)
        brackets = linalg.zeros(table, n, n, n)
        for (i, j), vec in upper.items():
            if not 0 <= i < j < n:
                raise ValidationError(f"bracket key ({i},{j}) must satisfy 0 <= i < j < {n}", field="brackets")
            vec = linalg.vector(vec, table) if not isinstance(vec, np.ndarray) else vec
            brackets[i, j] = vec
            brackets[j, i] = -vec
        return cls(table, basis, brackets)

    @classmethod
    def abelian(cls, table, basis):
        n = len(basis)
        return cls(table, basis, linalg.zeros(table, n, n, n))

    def bracket(self, u, v):
        """Bracket of two coordinate vectors"""
        out = linalg.zeros(self.table, self.dim)
        for i in range(self.dim):
            if u[i].is_zero():
                continue
            for j in range(self.dim):
                if i == j or v[j].is_zero():
                    continue
                out = out + (u[i] * v[j]) * self.brackets[i, j]
        return out

    def e(self, i):
        return linalg.basis_vector(self.table, self.dim, i)

    def upper_items(self):
        for i, j in combinations(range(self.dim), 2):
            yield (i, j), self.brackets[i, j]


class NordenMetric:
    """Symmetric invertible frame metric G with its inverse"""

    def __init__(self, matrix):
        self.matrix = np.asarray(matrix, dtype=object)
        if not linalg.is_symmetric(self.matrix):
            raise ValidationError("metric matrix must be symmetric", field="metric")
        self.inverse = linalg.mat_inverse(self.matrix)

    @property
    def dim(self):
        return self.matrix.shape[0]

    def inner(self, u, v):
        return linalg.bilinear(self.matrix, u, v)

    def lower(self, v):
        return self.matrix @ v

    def raise_index(self, covector):
        return self.inverse @ covector


@dataclass
class AlmostContactData:
    """phi as a matrix (columns are images of basis vectors), xi as a vector, eta as values eta(e_i)"""

    phi: np.ndarray
    xi: np.ndarray
    eta: np.ndarray

    def apply_phi(self, v):
        return self.phi @ v

    def eta_of(self, v):
        return linalg.dot(self.eta, v)


class AmbientSpace:
    """Lie algebra frame with a Norden metric and an almost contact structure"""

    def __init__(self, frame, metric, structure, name=""):
        n = frame.dim
        if n % 2 == 0:
            raise ValidationError(f"almost contact spaces have odd dimension, got {n}", field="dim")
        if metric.dim != n:
            raise ValidationError("metric dimension does not match the frame", field="metric")
        if structure.phi.shape != (n, n):
            raise ValidationError("phi must be an n x n matrix", field="phi")
        if structure.xi.shape != (n,) or structure.eta.shape != (n,):
            raise ValidationError("xi and eta must have n entries", field="xi")
        self.frame = frame
        self.metric = metric
        self.structure = structure
        self.name = name

    @property
    def table(self):
        return self.frame.table

    @property
    def dim(self):
        return self.frame.dim

    @property
    def basis(self):
        return self.frame.basis

    def transformed(self, P, basis=None, name=""):
        """Same space in the basis whose vectors are the columns of P"""
        P_inv = linalg.mat_inverse(P)
        frame = LieAlgebraFrame(
            self.table,
            basis or [f"f{i + 1}" for i in range(self.dim)],
            transport_vector_table(self.frame.brackets, P, P_inv),
        )
        metric = NordenMetric(transport_covariant(self.metric.matrix, P))
        structure = AlmostContactData(
            phi=P_inv @ self.structure.phi @ P,
            xi=P_inv @ self.structure.xi,
            eta=self.structure.eta @ P,
        )
        return AmbientSpace(frame, metric, structure, name=name)


@dataclass
class ConnectionTable:
    """gamma[i, j] holds the coordinates of nabla_{e_i} e_j"""

    gamma: np.ndarray
    frame: LieAlgebraFrame
    metric: NordenMetric

    @property
    def dim(self):
        return self.frame.dim

    def covariant(self, i, v):
        """nabla_{e_i} of the constant-coefficient vector v"""
        out = linalg.zeros(self.frame.table, self.dim)
        for l in range(self.dim):
            if not v[l].is_zero():
                out = out + v[l] * self.gamma[i, l]
        return out

    def along(self, u, v):
        """nabla_u v for constant-coefficient vectors u and v"""
        out = linalg.zeros(self.frame.table, self.dim)
        for i in range(self.dim):
            if not u[i].is_zero():
                out = out + u[i] * self.covariant(i, v)
        return out


@dataclass
class Curvature:
    """R[i, j, k] = R(e_i, e_j) e_k as vectors; lowered[i, j, k, l] = g(R(e_i, e_j) e_k, e_l)"""

    R: np.ndarray
    lowered: np.ndarray


# ----------------------------------------------------------------------
# checks
# ----------------------------------------------------------------------
def check_jacobi(frame):
    """
    Check the Jacobi identity on every triple i < j < k

    Returns:
        CheckReport with one item per triple (the item detail holds the
        nonzero cyclic sum for failing triples)
    """
    report = CheckReport("Jacobi identity")
    names = frame.basis
    triples = list(combinations(range(frame.dim), 3))
    if not triples:
        return report.add("jacobi", True, "fewer than three basis vectors")
    for i, j, k in triples:
        ei, ej, ek = frame.e(i), frame.e(j), frame.e(k)
        total = (
            frame.bracket(frame.brackets[i, j], ek)
            + frame.bracket(frame.brackets[j, k], ei)
            + frame.bracket(frame.brackets[k, i], ej)
        )
        ok = linalg.all_zero(total)
        detail = "" if ok else f"cyclic sum = {format_vector(total, names)}"
        report.add(f"jacobi({names[i]},{names[j]},{names[k]})", ok, detail)
    return report


def check_norden_compatibility(metric_matrix, structure):
    """g(phi X, phi Y) = -g(X, Y) + eta(X) eta(Y) as a matrix identity"""
    G = np.asarray(metric_matrix, dtype=object)
    phi, eta = structure.phi, structure.eta
    lhs = phi.T @ G @ phi
    rhs = -G + linalg.outer(eta, eta)
    report = CheckReport("Norden compatibility")
    return report.add("g(phi X, phi Y) = -g(X, Y) + eta(X)eta(Y)", linalg.equal(lhs, rhs))


def check_structure_axioms(metric_matrix, structure):
    """
    Verify the almost contact Norden axioms for a metric matrix and structure

    Args:
        metric_matrix: (n, n) frame metric
        structure: AlmostContactData (may be deliberately invalid)

    Returns:
        CheckReport with separate items for each identity
    """
    G = np.asarray(metric_matrix, dtype=object)
    phi, xi, eta = structure.phi, structure.xi, structure.eta
    table = G.flat[0].table
    n = G.shape[0]
    report = CheckReport("almost contact Norden axioms")

    square = phi @ phi
    expected = -linalg.identity(table, n) + linalg.outer(xi, eta)
    report.add("phi^2 = -id + eta (x) xi", linalg.equal(square, expected))

    pairing = linalg.dot(eta, xi)
    report.add("eta(xi) = 1", (pairing - 1).is_zero(), f"eta(xi) = {pairing}")
    report.add("phi xi = 0", linalg.all_zero(phi @ xi))
    report.add("eta o phi = 0", linalg.all_zero(eta @ phi))
    report.add("metric symmetric", linalg.is_symmetric(G))
    report.extend(check_norden_compatibility(G, structure))
    return report


def check_acn_axioms(space):
    """Axiom check for an AmbientSpace on its frame"""
    report = check_structure_axioms(space.metric.matrix, space.structure)
    logger.debug("axiom check on %s: %s", space.name or "space", report.passed)
    return report


def associated_metric(space):
    """
    Associated metric g~(X, Y) = g(X, phi Y) + eta(X) eta(Y)

    Returns:
        NordenMetric
    """
    eta = space.structure.eta
    matrix = space.metric.matrix @ space.structure.phi + linalg.outer(eta, eta)
    return NordenMetric(matrix)


# ----------------------------------------------------------------------
# connection, curvature and F
# ----------------------------------------------------------------------
def koszul_connection(frame, metric):
    """
    Levi-Civita connection of a left-invariant metric

    Uses 2g(nabla_i e_j, e_k) = g([e_i,e_j],e_k) + g([e_k,e_i],e_j) + g([e_k,e_j],e_i);
    metric coefficients are constant on the frame so the derivative terms vanish.

    Args:
        frame: LieAlgebraFrame
        metric: NordenMetric (its inverse raises the last index)

    Returns:
        ConnectionTable
    """
    n = frame.dim
    table = frame.table
    lowered_brackets = linalg.zeros(table, n, n, n)
    for i in range(n):
        for j in range(n):
            lowered_brackets[i, j] = metric.lower(frame.brackets[i, j])

    half = ScalarFraction(table.one()) / 2
    gamma = linalg.zeros(table, n, n, n)
    for i in range(n):
        for j in range(n):
            covector = np.empty(n, dtype=object)
            for k in range(n):
                covector[k] = half * (
                    lowered_brackets[i, j, k]
                    + lowered_brackets[k, i, j]
                    + lowered_brackets[k, j, i]
                )
            gamma[i, j] = metric.raise_index(covector)
    logger.debug("Koszul connection computed on %d-dimensional frame", n)
    return ConnectionTable(gamma, frame, metric)


def check_connection(conn):
    """Torsion-freeness and metric compatibility of a connection table"""
    frame, metric = conn.frame, conn.metric
    names = frame.basis
    report = CheckReport("Levi-Civita properties")
    torsion = []
    compat = []
    for i in range(frame.dim):
        for j in range(frame.dim):
            residual = conn.gamma[i, j] - conn.gamma[j, i] - frame.brackets[i, j]
            if not linalg.all_zero(residual):
                torsion.append(f"({names[i]},{names[j]})")
            for k in range(frame.dim):
                value = (
                    metric.inner(conn.gamma[i, j], frame.e(k))
                    + metric.inner(frame.e(j), conn.gamma[i, k])
                )
                if not value.is_zero():
                    compat.append(f"({names[i]},{names[j]},{names[k]})")
    report.add("torsion-free", not torsion, ", ".join(torsion))
    report.add("metric compatible", not compat, ", ".join(compat))
    return report


def curvature(conn):
    """
    Curvature R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z on the frame

    Returns:
        Curvature with the vector-valued and the lowered tensor
    """
    frame, metric = conn.frame, conn.metric
    n = frame.dim
    table = frame.table
    R = linalg.zeros(table, n, n, n, n)
    lowered = linalg.zeros(table, n, n, n, n)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for k in range(n):
                value = (
                    conn.covariant(i, conn.gamma[j, k])
                    - conn.covariant(j, conn.gamma[i, k])
                    - conn.along(frame.brackets[i, j], frame.e(k))
                )
                R[i, j, k] = value
                lowered[i, j, k] = metric.lower(value)
    logger.debug("curvature computed on %d-dimensional frame", n)
    return Curvature(R, lowered)


def check_curvature(curv):
    """Antisymmetry in both index pairs and the first Bianchi identity"""
    lowered, R = curv.lowered, curv.R
    n = lowered.shape[0]
    report = CheckReport("curvature identities")
    report.add("R(X,Y,Z,W) = -R(Y,X,Z,W)", linalg.equal(lowered, -lowered.transpose(1, 0, 2, 3)))
    report.add("R(X,Y,Z,W) = -R(X,Y,W,Z)", linalg.equal(lowered, -lowered.transpose(0, 1, 3, 2)))
    bianchi = True
    for i, j, k in combinations(range(n), 3):
        if not linalg.all_zero(R[i, j, k] + R[j, k, i] + R[k, i, j]):
            bianchi = False
            break
    report.add("first Bianchi identity", bianchi)
    return report


def sectional_numerator(curv, i, j):
    """R(e_i, e_j, e_j, e_i), the numerator of the sectional curvature of span(e_i, e_j)"""
    return curv.lowered[i, j, j, i]


def f_tensor_from_connection(conn, metric, structure):
    """
    F(e_i, e_j, e_k) = g(nabla_i(phi e_j) - phi(nabla_i e_j), e_k)

    Returns:
        Tensor3 as an (n, n, n) object array
    """
    n = conn.dim
    phi = structure.phi
    F = linalg.zeros(conn.frame.table, n, n, n)
    for i in range(n):
        for j in range(n):
            derivative = conn.covariant(i, phi[:, j]) - phi @ conn.gamma[i, j]
            F[i, j] = metric.lower(derivative)
    return F


def f_tensor_lie(frame, metric, phi):
    """
    F through brackets only:
    2F(X,Y,Z) = g([X,phiY] - phi[X,Y], Z) + g(phi[Z,X] - [phiZ,X], Y) + g([Z,phiY] - [phiZ,Y], X)

    Args:
        frame: LieAlgebraFrame
        metric: NordenMetric
        phi: (n, n) matrix of the structure endomorphism

    Returns:
        Tensor3 as an (n, n, n) object array
    """
    n = frame.dim
    table = frame.table
    half = ScalarFraction(table.one()) / 2
    images = [phi[:, j] for j in range(n)]
    F = linalg.zeros(table, n, n, n)
    for i in range(n):
        X = frame.e(i)
        for j in range(n):
            Y = frame.e(j)
            first = frame.bracket(X, images[j]) - phi @ frame.brackets[i, j]
            for k in range(n):
                Z = frame.e(k)
                second = phi @ frame.brackets[k, i] - frame.bracket(images[k], X)
                third = frame.bracket(Z, images[j]) - frame.bracket(images[k], Y)
                F[i, j, k] = half * (
                    metric.inner(first, Z) + metric.inner(second, Y) + metric.inner(third, X)
                )
    return F


def is_class_F0(F):
    """True iff every component of F vanishes (parallel structure)"""
    return linalg.all_zero(F)


def nonzero_components(tensor, basis):
    """Pairs (index label, expression string) for every nonzero entry"""
    out = []
    for index in np.ndindex(*tensor.shape):
        value = tensor[index]
        if not value.is_zero():
            label = ",".join(basis[i] for i in index)
            out.append((label, str(value)))
    return out


def trilinear_form(F, prefixes=("x", "y", "z"), labels=None):
    """
    Write F(X, Y, Z) as a polynomial in coordinate symbols

    Args:
        F: (n, n, n) object array
        prefixes: names for the coordinates of X, Y and Z
        labels: suffix for each basis index, e.g. ["1", "2", "5"]

    Returns:
        (value, table): the form as a ScalarFraction over an extended table
        that appends the coordinate symbols
    """
    n = F.shape[0]
    labels = list(labels) if labels else [str(i + 1) for i in range(n)]
    source = F.flat[0].table
    names = [f"{prefix}{label}" for prefix in prefixes for label in labels]
    table = source.extended(names)
    coords = {name: table.symbol(name) for name in names}
    total = ScalarFraction(table.zero())
    for i, j, k in np.ndindex(n, n, n):
        entry = F[i, j, k]
        if entry.is_zero():
            continue
        monomial = (
            coords[f"{prefixes[0]}{labels[i]}"]
            * coords[f"{prefixes[1]}{labels[j]}"]
            * coords[f"{prefixes[2]}{labels[k]}"]
        )
        total = total + entry.embed(table) * monomial
    return total, table


# ----------------------------------------------------------------------
# basis transport
# ----------------------------------------------------------------------
def transport_covariant(tensor, P):
    """Components of a covariant tensor in the basis given by the columns of P"""
    out = np.asarray(tensor, dtype=object)
    for axis in range(out.ndim):
        out = np.moveaxis(np.moveaxis(out, axis, -1) @ P, -1, axis)
    return out


def transport_vector_table(tensor, P, P_inv=None):
    """Transport a table t[i, j] of vectors (brackets, connection) to the new basis"""
    if P_inv is None:
        P_inv = linalg.mat_inverse(P)
    both = np.asarray(tensor, dtype=object)
    for axis in (0, 1):
        both = np.moveaxis(np.moveaxis(both, axis, -1) @ P, -1, axis)
    # contravariant last index: new[..., l] = sum_m P_inv[l, m] old[..., m]
    return both @ P_inv.T


def transport_connection(conn, P, frame, metric):
    """Connection table expressed in the basis of P, attached to the transported frame"""
    return ConnectionTable(transport_vector_table(conn.gamma, P), frame, metric)
