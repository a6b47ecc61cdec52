"""Tests for the D_8 model of E_8."""

import pytest

from enlattice.census import enumerate_roots
from enlattice.exceptions import DomainError
from enlattice.liealg import (
    E8ViaD8,
    build_algebra,
    e8_bracket_via_d8,
    e8_jacobi_check,
    e8_spin_products,
    e8_via_d8,
    gamma_equivariance_check,
)
from enlattice.picard import make_lattice


@pytest.fixture(scope="module")
def model():
    return e8_via_d8()


class TestE8ViaD8:
    """Test the assembled algebra LD_8 + S+."""

    def test_shape(self, model):
        """Test 112 even roots, 128 spin weights and dimension 248."""
        assert len(model.even.roots) == 112
        assert model.spin.rank == 128
        assert model.dimension == 248

    def test_even_part_is_d8(self, model):
        """Test the even roots form D8."""
        assert model.even.system.type == "D8"

    def test_roots_match_x8(self, model):
        """Test even roots and shifted spin weights are the 240 roots of X_8."""
        assert model.root_set == frozenset(enumerate_roots(make_lattice(8)))

    def test_scalar_pairing_support(self, model):
        """Test the scalar pairing only sees l' = -l - 2K."""
        K = model.full.lattice.K
        l = model.spin.weights[0]
        partner = -l - K * 2
        u = model.spin.basis_vector(l)
        scalar, _ = e8_spin_products(model, u, model.spin.basis_vector(partner))
        assert abs(scalar) == 1
        other = next(w for w in model.spin.weights if w not in (l, partner))
        scalar, _ = e8_spin_products(model, u, model.spin.basis_vector(other))
        assert scalar == 0

    def test_spin_bracket_alternates(self, model):
        """Test [u, v] = -[v, u] for spin vectors meeting twice."""
        weights = model.spin.weights
        l = weights[0]
        partner = next(w for w in weights if l.dot(w) == 2)
        x = model.element(spin=model.spin.basis_vector(l))
        y = model.element(spin=model.spin.basis_vector(partner))
        xy = e8_bracket_via_d8(model, x, y)
        assert not xy.is_zero()
        assert (xy + e8_bracket_via_d8(model, y, x)).is_zero()

    def test_needs_x8(self):
        """Test the model refuses other surfaces."""
        with pytest.raises(DomainError, match="X_8"):
            E8ViaD8(build_algebra(make_lattice(7)))

    def test_degree_class_rank(self):
        """Test the degree class must live on X_8."""
        with pytest.raises(DomainError):
            e8_via_d8(make_lattice(7).H)

    def test_gamma_equivariance(self, model):
        """Test gamma is LD_8-equivariant on sampled triples."""
        assert gamma_equivariance_check(model, samples=100, seed=2).verified

    @pytest.mark.slow
    def test_jacobi_sampled(self, model):
        """Test sampled Jacobi on LD_8 + S+."""
        assert e8_jacobi_check(model, samples=300, seed=2).verified
