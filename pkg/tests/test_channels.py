import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twirlbreak.channels import (
    PAULIS,
    DilatedChannel,
    KrausChannel,
    ProbabilityVector,
    apply_dilation,
    apply_kraus,
    build_pauli_dilation,
    build_twirl_dilation,
    correlated_pauli,
    env_is_classical,
    is_entanglement_breaking,
    is_product_form,
    local_depolarizing,
)
from twirlbreak.linalg import (
    frobenius_distance,
    hermitian_eigenvalues,
    kron,
    negativity,
    partial_trace_multi,
    partial_transpose,
)
from twirlbreak.states import random_density, singlet, triplet, werner_qubit
from twirlbreak.twirl import HaarSampler

UNIFORM = ProbabilityVector((0.25, 0.25, 0.25, 0.25))
EB_BOUNDARY = ProbabilityVector((0.5, 1 / 6, 1 / 6, 1 / 6))


class TestProbabilityVector:
    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            ProbabilityVector((-0.1, 0.6, 0.3, 0.2))

    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            ProbabilityVector((0.5, 0.5, 0.5, 0.5))


class TestKrausChannel:
    def test_completeness_enforced(self):
        with pytest.raises(ValueError, match="completeness"):
            KrausChannel((0.9 * np.eye(2),))

    def test_identity_channel(self):
        ch = KrausChannel((np.eye(4),))
        rho = werner_qubit(0.5)
        assert frobenius_distance(apply_kraus(ch, rho).mat, rho.mat) == 0.0


class TestCorrelatedPauli:
    def test_p1000_is_identity(self):
        ch = correlated_pauli(ProbabilityVector((1, 0, 0, 0)))
        rho = random_density(2, 2, np.random.default_rng(0))
        assert frobenius_distance(apply_kraus(ch, rho).mat, rho.mat) < 1e-14

    def test_werner_fixed_point(self):
        ch = correlated_pauli(ProbabilityVector((0.4, 0.3, 0.2, 0.1)))
        rho = werner_qubit(0.9)
        assert frobenius_distance(apply_kraus(ch, rho).mat, rho.mat) < 1e-12

    def test_singlet_fixed_point_any_p(self):
        rng = np.random.default_rng(1)
        for _ in range(10):
            p = ProbabilityVector(tuple(rng.dirichlet(np.ones(4))))
            out = apply_kraus(correlated_pauli(p), singlet())
            assert frobenius_distance(out.mat, singlet().mat) < 1e-12

    def test_conjugate_variant_same_action(self):
        # P_k x P_k and P_k x P_k^* generate the identical channel
        rng = np.random.default_rng(2)
        p = ProbabilityVector((0.4, 0.3, 0.2, 0.1))
        ch = correlated_pauli(p)
        conj_ops = tuple(
            np.sqrt(pk) * kron(pauli, pauli.conj()) for pk, pauli in zip(p.p, PAULIS)
        )
        ch_conj = KrausChannel(conj_ops)
        for _ in range(50):
            rho = random_density(2, 2, rng)
            assert (
                frobenius_distance(apply_kraus(ch, rho).mat, apply_kraus(ch_conj, rho).mat)
                < 1e-12
            )

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            correlated_pauli(ProbabilityVector((0.5, 0.5)))


class TestLocalDepolarizing:
    def test_pt_spectrum_closed_form(self):
        ch = local_depolarizing(ProbabilityVector((0.6, 0.4 / 3, 0.4 / 3, 0.4 / 3)), "A")
        out = apply_kraus(ch, triplet())
        spec = hermitian_eigenvalues(partial_transpose(out)).eigenvalues
        assert abs(spec[0] - (0.5 - 0.6)) < 1e-12

    def test_uniform_fully_depolarizes(self):
        rng = np.random.default_rng(3)
        ch = local_depolarizing(UNIFORM, "A")
        for _ in range(20):
            rho = random_density(2, 2, rng)
            out = apply_kraus(ch, rho)
            marginal = partial_trace_multi(rho.mat, [2, 2], keep=[1])
            assert frobenius_distance(out.mat, kron(np.eye(2) / 2, marginal)) < 1e-12
            assert is_product_form(out)

    def test_side_b(self):
        ch = local_depolarizing(UNIFORM, "B")
        rho = random_density(2, 2, np.random.default_rng(4))
        out = apply_kraus(ch, rho)
        marginal = partial_trace_multi(rho.mat, [2, 2], keep=[0])
        assert frobenius_distance(out.mat, kron(marginal, np.eye(2) / 2)) < 1e-12


class TestEntanglementBreaking:
    def test_boundary_spectrum(self):
        ppt, spec = is_entanglement_breaking(local_depolarizing(ProbabilityVector((0.5, 0.5, 0, 0))))
        assert ppt
        assert np.allclose(np.sort(spec.eigenvalues), [0, 0, 0.5, 0.5], atol=1e-12)

    def test_not_eb(self):
        ppt, spec = is_entanglement_breaking(
            local_depolarizing(ProbabilityVector((0.6, 0.4 / 3, 0.4 / 3, 0.4 / 3)))
        )
        assert not ppt
        assert abs(spec.min() - (-0.1)) < 1e-12

    def test_identity_not_eb(self):
        ppt, spec = is_entanglement_breaking(local_depolarizing(ProbabilityVector((1, 0, 0, 0))))
        assert not ppt
        assert abs(spec.min() - (-0.5)) < 1e-12

    def test_threshold_200_random(self):
        rng = np.random.default_rng(5)
        for _ in range(200):
            p = ProbabilityVector(tuple(rng.dirichlet(np.ones(4))))
            ppt, _ = is_entanglement_breaking(local_depolarizing(p))
            assert ppt == (max(p.p) <= 0.5 + 1e-12)

    def test_rejects_correlated_channel(self):
        with pytest.raises(ValueError, match="E x I"):
            is_entanglement_breaking(correlated_pauli(UNIFORM))


class TestDilation:
    def test_env_state_classical_and_separable_by_construction(self):
        dc = build_pauli_dilation(ProbabilityVector((0.4, 0.3, 0.2, 0.1)))
        assert env_is_classical(dc.env_state)
        # diagonal of the env state carries exactly the correlated weights
        diag = np.diag(dc.env_state.mat).real
        nonzero = diag[diag > 1e-14]
        assert np.allclose(sorted(nonzero), [0.1, 0.2, 0.3, 0.4])

    def test_control_unitary_is_unitary(self):
        dc = build_pauli_dilation(UNIFORM)
        u = dc.control_unitary
        assert u.shape == (64, 64)
        assert np.max(np.abs(u @ u.conj().T - np.eye(64))) < 1e-14

    def test_identity_probabilities(self):
        dc = build_pauli_dilation(ProbabilityVector((1, 0, 0, 0)))
        rho = random_density(2, 2, np.random.default_rng(6))
        assert frobenius_distance(apply_dilation(dc, rho).mat, rho.mat) < 1e-12

    def test_agreement_with_kraus_50_random(self):
        rng = np.random.default_rng(7)
        p = ProbabilityVector((0.5, 0.2, 0.2, 0.1))
        dc = build_pauli_dilation(p)
        ch = correlated_pauli(p)
        worst = 0.0
        for _ in range(50):
            rho = random_density(2, 2, rng)
            worst = max(
                worst,
                frobenius_distance(apply_dilation(dc, rho).mat, apply_kraus(ch, rho).mat),
            )
        assert worst < 1e-11

    def test_depolarizing_dilation_agreement(self):
        # dilation with V_k = I realizes the one-sided channel
        rng = np.random.default_rng(8)
        p = ProbabilityVector((0.5, 0.2, 0.2, 0.1))
        dc = build_twirl_dilation(
            PAULIS, probabilities=p, conjugate_second=False
        )
        # overwrite the B-side controls with identities via a fresh dilation
        eye_set = [np.eye(2)] * 4
        from twirlbreak.channels import build_control_unitary

        u = kron(build_control_unitary(PAULIS), build_control_unitary(eye_set))
        dc = DilatedChannel(dc.env_state, u, (2, 2))
        ch = local_depolarizing(p, "A")
        for _ in range(10):
            rho = random_density(2, 2, rng)
            assert frobenius_distance(apply_dilation(dc, rho).mat, apply_kraus(ch, rho).mat) < 1e-11

    def test_clifford_twirl_dilation(self):
        # full 24-element design dilation: env is classical, action matches
        # the exact twirl (few inputs; the 2304-dim conjugation is costly)
        from twirlbreak.twirl import clifford_group_qubit, twirl_operator

        cl = clifford_group_qubit()
        dc = build_twirl_dilation(list(cl.unitaries), conjugate_second=False)
        assert env_is_classical(dc.env_state)
        rng = np.random.default_rng(9)
        for _ in range(3):
            rho = random_density(2, 2, rng)
            want = twirl_operator(rho.mat, cl)
            assert frobenius_distance(apply_dilation(dc, rho).mat, want) < 1e-11

    def test_rejects_non_classical_env(self):
        with pytest.raises(ValueError, match="classical"):
            DilatedChannel(triplet(), np.eye(16), (2, 2))


class TestEnvIsClassical:
    def test_pauli_env_any_p(self):
        rng = np.random.default_rng(10)
        for _ in range(5):
            p = ProbabilityVector(tuple(rng.dirichlet(np.ones(4))))
            assert env_is_classical(build_pauli_dilation(p).env_state)

    def test_uniform_env(self):
        dc = build_twirl_dilation(list(HaarSampler(11, 2).sample_batch(5)))
        assert env_is_classical(dc.env_state)

    def test_triplet_not_classical(self):
        assert not env_is_classical(triplet())


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=20, deadline=None)
def test_channel_outputs_are_valid_states(seed):
    rng = np.random.default_rng(seed)
    p = ProbabilityVector(tuple(rng.dirichlet(np.ones(4))))
    rho = random_density(2, 2, rng)
    out = apply_kraus(correlated_pauli(p), rho)  # constructor validates
    assert abs(np.trace(out.mat).real - 1.0) < 1e-12


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=10, deadline=None)
def test_single_vs_double_transmission(seed):
    # the headline contrast: single breaks, double preserves
    rng = np.random.default_rng(seed)
    raw = rng.dirichlet(np.ones(4))
    m = max(raw)
    t = 1.0 if m <= 0.5 else 0.25 / (m - 0.25)  # shrink toward uniform until max <= 1/2
    p = ProbabilityVector(tuple(t * raw + (1 - t) * 0.25))
    assert max(p.p) <= 0.5 + 1e-12
    gamma = rng.uniform(1 / 3 + 0.05, 1.0)
    rho = werner_qubit(gamma)
    assert negativity(apply_kraus(local_depolarizing(p, "A"), rho)) <= 1e-12
    out = apply_kraus(correlated_pauli(p), rho)
    assert abs(negativity(out) - (3 * gamma - 1) / 4) < 1e-10
