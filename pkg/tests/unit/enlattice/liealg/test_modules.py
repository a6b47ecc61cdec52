"""Tests for the line and ruling modules."""

from collections import Counter

import pytest

from enlattice.census import enumerate_lines, enumerate_rulings
from enlattice.exceptions import DomainError
from enlattice.liealg import (
    ModuleKind,
    act,
    build_algebra,
    lines_module,
    minuscule_module,
    module_axiom_check,
    rulings_module,
    weights_module,
)
from enlattice.picard import make_lattice
from enlattice.report import Scope


class TestModuleShapes:
    """Test ranks and kinds of L_n and R_n."""

    @pytest.mark.parametrize("n,rank", [(3, 6), (5, 16), (6, 27), (7, 56), (8, 248)])
    def test_lines_rank(self, n, rank):
        """Test dim L_n, with L_8 the adjoint twisted by -K."""
        assert lines_module(build_algebra(make_lattice(n))).rank == rank

    @pytest.mark.parametrize("n,rank", [(4, 5), (5, 10), (6, 27), (7, 133)])
    def test_rulings_rank(self, n, rank):
        """Test dim R_n, with R_7 the adjoint twisted by -K."""
        assert rulings_module(build_algebra(make_lattice(n))).rank == rank

    def test_l8_weights(self):
        """Test L_8 = lines plus 8 copies of -K."""
        X = make_lattice(8)
        L8 = lines_module(build_algebra(X))
        assert L8.kind == ModuleKind.ADJOINT
        expected = Counter(enumerate_lines(X))
        expected[-X.K] += 8
        assert L8.weight_multiset() == expected

    def test_r7_weights(self):
        """Test R_7 = rulings plus 7 copies of -K."""
        X = make_lattice(7)
        R7 = rulings_module(build_algebra(X))
        expected = Counter(enumerate_rulings(X))
        expected[-X.K] += 7
        assert R7.weight_multiset() == expected

    def test_no_r8(self):
        """Test R_8 is not constructed."""
        with pytest.raises(DomainError, match="R_8"):
            rulings_module(build_algebra(make_lattice(8)))

    def test_rulings_of_x7_not_minuscule(self):
        """Test the 126 rulings of X_7 cannot carry a minuscule action."""
        X = make_lattice(7)
        with pytest.raises(DomainError, match="not minuscule"):
            minuscule_module(build_algebra(X), "R", enumerate_rulings(X), X.L(1) * 2)

    def test_weights_module_needs_twist_for_zero_block(self):
        """Test a zero-weight block must sit somewhere."""
        module = weights_module("u(1)", [], cartan_mult=1)
        with pytest.raises(DomainError, match="twist"):
            module.weight_multiset()

    def test_weights_module_has_no_action(self):
        """Test bookkeeping modules refuse to act."""
        X = make_lattice(4)
        E4 = build_algebra(X)
        module = weights_module("W", [X.L(1)])
        with pytest.raises(DomainError, match="no algebra action"):
            module.act(E4.root_vector(X.L(1) - X.L(2)), module.basis_vector(X.L(1)))


class TestAction:
    """Test the module action."""

    def test_root_moves_line(self):
        """Test x_{L1-L2} sends v_{L2} to +-v_{L1}."""
        X = make_lattice(5)
        E5 = build_algebra(X)
        L5 = lines_module(E5)
        image = act(E5.root_vector(X.L(1) - X.L(2)), L5, L5.basis_vector(X.L(2)))
        assert abs(image.coefficient(X.L(1))) == 1

    def test_root_kills_non_meeting_line(self):
        """Test x_A kills v_l unless l.A = 1."""
        X = make_lattice(5)
        E5 = build_algebra(X)
        L5 = lines_module(E5)
        image = L5.act(E5.root_vector(X.L(1) - X.L(2)), L5.basis_vector(X.L(3)))
        assert image.is_zero()

    def test_unknown_weight(self):
        """Test vectors only live on module weights."""
        X = make_lattice(5)
        L5 = lines_module(build_algebra(X))
        with pytest.raises(DomainError, match="not a weight"):
            L5.basis_vector(X.H)


class TestModuleAxiom:
    """Test [x,y].v = x.(y.v) - y.(x.v)."""

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_lines_exhaustive(self, n):
        """Test the axiom on every triple for L_n."""
        record = module_axiom_check(lines_module(build_algebra(make_lattice(n))))
        assert record.verified
        assert record.scope == Scope.EXHAUSTIVE

    @pytest.mark.parametrize("n", [4, 5])
    def test_rulings_exhaustive(self, n):
        """Test the axiom on every triple for R_n."""
        assert module_axiom_check(rulings_module(build_algebra(make_lattice(n)))).verified

    @pytest.mark.slow
    def test_lines_e6_exhaustive(self):
        """Test the axiom on every triple for L_6."""
        assert module_axiom_check(lines_module(build_algebra(make_lattice(6)))).verified

    def test_r7_sampled(self):
        """Test the adjoint-type R_7 on sampled triples."""
        record = module_axiom_check(rulings_module(build_algebra(make_lattice(7))), samples=200, seed=5)
        assert record.verified
        assert record.evaluations == 200

    def test_l8_sampled(self):
        """Test the adjoint-type L_8 on sampled triples."""
        record = module_axiom_check(lines_module(build_algebra(make_lattice(8))), samples=100, seed=5)
        assert record.verified

    def test_weights_module_rejected(self):
        """Test bookkeeping modules have no axiom to check."""
        with pytest.raises(DomainError):
            module_axiom_check(weights_module("W", []))
