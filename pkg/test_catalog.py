"""
Example Catalog Tests
The group G, the E-frame, the subalgebras and the full worked-example run
"""

from dataclasses import replace

import pytest

import catalog
import config
import geometry
import linalg
from errors import SingularMatrixError


# ============================================================================
# the group and its frames
# ============================================================================
def test_G_brackets(G, table):
    x = G.frame.e
    assert linalg.equal(G.frame.bracket(x(1), x(2)), linalg.vector([0, "a", "a", 0, 0], table))
    assert linalg.equal(G.frame.bracket(x(1), x(4)), linalg.vector(["2*m", 0, 0, 0, 0], table))
    assert linalg.all_zero(G.frame.bracket(x(0), x(3)))
    assert linalg.all_zero(G.frame.bracket(x(3), x(4)))


def test_G_structure(G, table):
    assert linalg.equal(G.metric.matrix, linalg.diagonal([1, 1, -1, -1, 1], table))
    assert linalg.equal(G.structure.xi, linalg.basis_vector(table, 5, 4))
    assert linalg.equal(G.structure.apply_phi(G.frame.e(0)), G.frame.e(2))
    assert linalg.equal(G.structure.apply_phi(G.frame.e(3)), -G.frame.e(1))
    assert G.structure.eta_of(G.frame.e(4)) == 1


def test_T_preserves_the_form(table):
    assert catalog.check_T_orthogonal(table).passed


@pytest.mark.parametrize("key", ["brackets", "phi", "xi", "metric"])
def test_E_frame(E, table, key):
    expected = catalog.expected_E_data(table)[key]
    actual = {
        "brackets": E.frame.brackets,
        "phi": E.structure.phi,
        "xi": E.structure.xi,
        "metric": E.metric.matrix,
    }[key]
    assert linalg.equal(actual, expected)


def test_E_frame_axioms(E):
    assert geometry.check_acn_axioms(E).passed
    assert E.basis == catalog.E_BASIS


def test_F_is_natural(G, E, table):
    P = catalog.basis_matrix(catalog.e_frame_transform(table))
    F_G = geometry.f_tensor_lie(G.frame, G.metric, G.structure.phi)
    F_E = geometry.f_tensor_lie(E.frame, E.metric, E.structure.phi)
    assert F_E.size == 125
    assert linalg.equal(geometry.transport_covariant(F_G, P), F_E)


def test_basis_matrix_places_rows():
    table = catalog.catalog_table()
    P = catalog.basis_matrix(catalog.e_frame_transform(table))
    # E1 = X1, E4 = X3, E5 = X4 and E2, E3 mix X2 with xi
    assert linalg.equal(P[:, 0], linalg.basis_vector(table, 5, 0))
    assert linalg.equal(P[:, 3], linalg.basis_vector(table, 5, 2))
    assert linalg.equal(P[:, 4], linalg.basis_vector(table, 5, 3))
    assert P[4, 2] == table.parse("s/2")
    assert P[1, 1] == table.parse("s/2")
    assert P[4, 1] == table.parse("-1/2")


def test_singular_basis_change(G, table):
    with pytest.raises(SingularMatrixError):
        catalog.change_basis(G, linalg.zeros(table, 5, 5))


# ============================================================================
# subalgebras and sections
# ============================================================================
def test_list_subalgebras(table):
    report, classes = catalog.list_subalgebras(table)
    assert report.passed, report.failures()
    assert set(classes) == {"alpha1", "alpha2", "alpha3", "alpha"}
    assert classes["alpha2"].type == "pure"
    assert not classes["alpha"].xi_orthogonal


# ============================================================================
# worked examples
# ============================================================================
def test_bundles(H3, H):
    assert H3.certified and H3.class_label == catalog.CLASS_F0
    assert not H.certified and H.class_label == "F4+F8"
    assert any(config.UNVERIFIED_CLASS_NOTE in note for note in H.notes)


def test_verify_H3(H3):
    report = catalog.verify_H3(H3)
    assert report.passed, report.failures()


@pytest.mark.parametrize("epsilon, branch", [(1, "lambda1"), (-1, "lambda1"), (1, "lambda2")])
def test_verify_H(H, epsilon, branch):
    report = catalog.verify_H(H, epsilon, branch)
    assert report.passed, report.failures()


def test_wrong_expected_value_is_named(H):
    expected = dict(H.expected, gamma=H.expected["printed_gamma"])
    report = catalog.verify_H(replace(H, expected=expected))
    assert [item.name for item in report.failures()] == ["gamma"]


def test_run_acceptance():
    report = catalog.run_acceptance()
    assert report.passed, report.failures()
    assert any("F9" in note for note in report.notes)
    assert any("F4+F8" in note for note in report.notes)
    names = [item.name for item in report]
    assert "F transported from the X-basis equals F in the E-basis" in names
    assert "H3: class F0 certified" in names


def test_run_acceptance_other_choices():
    assert catalog.run_acceptance(epsilon=-1, branch="lambda2").passed


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
