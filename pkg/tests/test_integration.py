"""Cross-module ties: the CM-derivative route and the point-counting route
compute the same central L-values.

The weight-1 Hecke value attached to each CM curve equals the curve's own
L(1).  One side comes from Laguerre-weighted theta sums at a CM point plus
gamma-function periods; the other from finite-field point counts, Tate's
algorithm, and the functional-equation exponential sum.  They share no code
below the Python runtime, so agreement here validates both stacks at once.
"""

from rankcrit.lseries import CurveSpec, l1
from rankcrit.maass import hecke_value_A, hecke_value_E


def test_square_family_central_value_two_routes():
    via_series = l1(CurveSpec(A=1, B=0), 1e-9)  # y^2 = x^3 + x
    via_theta = float(hecke_value_E(1, 128))
    assert abs(via_series - via_theta) < 1e-9


def test_cube_family_central_value_two_routes():
    via_series = l1(CurveSpec(A=0, B=-432), 1e-9)  # x^3 + y^3 = 1 model
    via_theta = float(hecke_value_A(1, 128))
    assert abs(via_series - via_theta) < 1e-9
