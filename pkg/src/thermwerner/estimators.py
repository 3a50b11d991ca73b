"""scikit-learn compatible wrappers.

``WernerTemperatureMap`` turns temperatures into Werner mixing parameters
(``transform``) and back (``inverse_transform``).  ``ThermalMeasures`` and
``WernerMeasures`` featurize temperatures or mixing parameters into the
measure columns of a sweep record, so they drop into a ``Pipeline``.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .mapping import critical_constants, in_bijection_domain, temperature_of_x, x_of_temperature, x_range
from .states import BellChoice, ModelParams
from .sweep import evaluate_point, evaluate_werner

MEASURE_COLUMNS = ("x_eff", "c", "e_f", "s_vn", "h_vn", "j_js", "c_js", "r")


def _column(X, name: str) -> np.ndarray:
    X = check_array(X, ensure_2d=False, dtype=float)
    if X.ndim == 2:
        if X.shape[1] != 1:
            raise ValueError(f"expected a single {name} column, got {X.shape[1]}")
        X = X[:, 0]
    return X


class WernerTemperatureMap(TransformerMixin, BaseEstimator):
    """Temperature -> Werner mixing parameter at fixed field.

    Parameters
    ----------
    j_h, b, k_b : float
        Coupling, field and Boltzmann constant.
    """

    def __init__(self, j_h: float = 1.0, b: float = 0.0, k_b: float = 1.0):
        self.j_h = j_h
        self.b = b
        self.k_b = k_b

    def fit(self, X=None, y=None):
        self.params_ = ModelParams(self.j_h, self.b, self.k_b)
        self.t_c_, self.b_c_ = critical_constants(self.params_)
        self.invertible_ = in_bijection_domain(self.params_)
        self.x_range_ = x_range(self.params_) if self.invertible_ else None
        return self

    def transform(self, X):
        check_is_fitted(self, "params_")
        t = _column(X, "temperature")
        return np.array([x_of_temperature(self.params_, v) for v in t]).reshape(-1, 1)

    def inverse_transform(self, X):
        check_is_fitted(self, "params_")
        x = _column(X, "mixing")
        return np.array([temperature_of_x(self.params_, v) for v in x]).reshape(-1, 1)

    def get_feature_names_out(self, input_features=None):
        return np.array(["x_eff"], dtype=object)


class ThermalMeasures(TransformerMixin, BaseEstimator):
    """Temperatures -> measure columns of the Gibbs state."""

    def __init__(self, j_h: float = 1.0, b: float = 0.0, k_b: float = 1.0):
        self.j_h = j_h
        self.b = b
        self.k_b = k_b

    def fit(self, X=None, y=None):
        self.params_ = ModelParams(self.j_h, self.b, self.k_b)
        return self

    def transform(self, X):
        check_is_fitted(self, "params_")
        t = _column(X, "temperature")
        recs = [evaluate_point(self.params_, v) for v in t]
        return np.array([[getattr(r, c) for c in MEASURE_COLUMNS] for r in recs]).reshape(-1, len(MEASURE_COLUMNS))

    def get_feature_names_out(self, input_features=None):
        return np.array(MEASURE_COLUMNS, dtype=object)


class WernerMeasures(TransformerMixin, BaseEstimator):
    """Mixing parameters -> measure columns of the Werner state."""

    def __init__(self, bell: str = "phi+"):
        self.bell = bell

    def fit(self, X=None, y=None):
        self.bell_ = BellChoice(self.bell)
        return self

    def transform(self, X):
        check_is_fitted(self, "bell_")
        x = _column(X, "mixing")
        recs = [evaluate_werner(v, self.bell_) for v in x]
        return np.array([[getattr(r, c) for c in MEASURE_COLUMNS] for r in recs]).reshape(-1, len(MEASURE_COLUMNS))

    def get_feature_names_out(self, input_features=None):
        return np.array(MEASURE_COLUMNS, dtype=object)
