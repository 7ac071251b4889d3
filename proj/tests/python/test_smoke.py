# Copyright 2026 The geomur Authors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import geomur


def test_commuting_fidelity():
    rho = geomur.DensityMatrix(np.diag([0.6, 0.4]))
    sigma = geomur.DensityMatrix(np.diag([0.5, 0.5]))
    expected = (math.sqrt(0.3) + math.sqrt(0.2)) ** 2
    assert geomur.fidelity(rho, sigma) == pytest.approx(expected, abs=1e-12)
    assert geomur.fidelity_oracle(rho, sigma) == pytest.approx(expected, abs=1e-12)
    assert geomur.metric_distance("angle", rho, sigma) == pytest.approx(math.acos(math.sqrt(expected)))


def test_state_round_trip_through_numpy():
    rho = geomur.sample_mixed(3, 2, 11)
    m = rho.matrix
    assert m.shape == (3, 3) and m.dtype == np.complex128
    assert np.allclose(m, m.conj().T)
    assert np.trace(m).real == pytest.approx(1.0)
    assert rho.rank() == 2
    psi = geomur.purify(rho)
    back = geomur.partial_trace_aux(psi, 3, psi.dim // 3)
    assert np.max(np.abs(back.matrix - m)) < 1e-10


def test_certainty_case():
    h = 1 / math.sqrt(2)
    z = geomur.ProjectiveObservable.computational(2)
    x = geomur.ProjectiveObservable(np.array([[h, h], [h, -h]]))
    rho = geomur.DensityMatrix.from_pure(geomur.PureState.basis(2, 0))
    report = geomur.check_ur("angle", z, x, rho)
    assert abs(report.slack) < 1e-12
    assert set(report.to_dict()) == {"p_max_a", "p_max_b", "u_a", "u_b", "overlap_c", "bound", "slack"}


def test_boundaries():
    c = math.sqrt(0.5)
    assert geomur.h_boundary("root-infidelity", c, 0.9) == pytest.approx(0.8472135954999579, abs=1e-14)
    assert geomur.boundary_from_quadratic("angle", c, 0.9) == pytest.approx(0.8, abs=1e-14)
    pts = geomur.region_samples("angle", math.sqrt(0.4), 20, 11)
    assert pts[-1][0] == 1.0 and pts[-1][1] == pytest.approx(0.4)
    assert geomur.in_domain("bures", 0.6, 3, 1.0, 0.36)


def test_sweep_is_deterministic():
    cfg = {"dims": [2, 3], "trials_per_dim": 40, "seed": 5, "kinds": geomur.metric_kinds()}
    first = geomur.run_sweep(cfg)
    assert first == geomur.run_sweep(cfg, workers=2)
    assert first["violations"] == 0
    assert first["total_trials"] == 2 * 40 * 3


def test_errors_are_reported():
    with pytest.raises(geomur.GeomurError, match="NotPSD|InvalidState|not"):
        geomur.DensityMatrix(np.diag([1.5, -0.5]))
    with pytest.raises(geomur.GeomurError):
        geomur.f_of("trace", 0.5)
    with pytest.raises(ValueError):
        geomur.fidelity(geomur.DensityMatrix.maximally_mixed(2), geomur.DensityMatrix.maximally_mixed(3))
