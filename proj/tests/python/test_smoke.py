# Copyright 2026 The dilaton-steering Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import dilaton_steering as ds


def bell():
    psi = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)
    return np.outer(psi, psi.conj())


def test_bell_anchors():
    rho = bell()
    x = ds.as_xstate(rho)
    assert ds.concurrence_general(rho) == pytest.approx(1.0, abs=1e-12)
    assert ds.steerability(x, ds.Direction.AtoB) == pytest.approx(1.0, abs=1e-12)
    assert ds.chsh_max_general(rho) == pytest.approx(2 * math.sqrt(2), abs=1e-12)


def test_partial_trace_and_eigenvalues():
    rho_a = ds.partial_trace(bell(), [0])
    np.testing.assert_allclose(rho_a, np.eye(2) / 2, atol=1e-15)
    assert ds.hermitian_eigenvalues(bell()) == pytest.approx([1, 0, 0, 0], abs=1e-14)


def test_invalid_inputs_raise():
    with pytest.raises(ds.ValidationError):
        ds.DilatonParams(1.0, 1.0, 1.0)
    with pytest.raises(ds.StructureError):
        ds.as_xstate(np.full((4, 4), 0.25, dtype=complex))
    with pytest.raises(ValueError):
        ds.XState(0.5, 0.5, 0.5, 0.5)


def test_dilaton_pipeline_matches_closed_form():
    p = ds.DilatonParams(1.0, 0.5, 1.0)
    for pair in (ds.Pair.AB, ds.Pair.ABbar, ds.Pair.BBbar):
        a = ds.closed_form_measures(p, pair)
        b = ds.pipeline_measures(p, pair)
        assert a.s_forward == pytest.approx(b.s_forward, abs=1e-10)
        assert a.concurrence == pytest.approx(b.concurrence, abs=1e-10)
    rho = ds.tripartite_state(p)
    assert rho.shape == (8, 8)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-14)


def test_critical_points():
    cp = ds.critical_dilatons(1.0, 1.0)
    assert cp.d0.value == pytest.approx(0.97814380296462126, abs=1e-14)
    numeric = ds.find_critical_numeric(1.0, 1.0, ds.Critical.SuddenBirth)
    assert numeric == pytest.approx(cp.d0.value, abs=1e-8)
    with pytest.raises(ds.RootNotFound):
        ds.find_critical_numeric(1.0, 0.01, ds.Critical.SuddenDeath)


def test_sweep_and_verify():
    text = ds.sweep_csv(points=3, omegas=[1.0], pairs=[ds.Pair.AB])
    lines = text.splitlines()
    assert lines[0].startswith("omega,dilaton,x,ab_s_forward")
    assert len(lines) == 4
    passed, deviations = ds.verify(points=21)
    assert passed
    assert max(deviations.values()) <= 1e-10
    with pytest.raises(ds.ArgumentError):
        ds.sweep_csv(points=0)
