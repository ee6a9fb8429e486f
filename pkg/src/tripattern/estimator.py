"""scikit-learn compatible wrapper around the extraction pipeline."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .homogenize import DEFAULT_EXACT_THRESHOLD, HomogenizeConfig
from .pipeline import DEFAULT_PIPELINE_VC_BUDGET, extract_structure
from .validation import check_binary_array, check_binary_matrix

__all__ = ["TriPatternExtractor"]


class TriPatternExtractor(TransformerMixin, BaseEstimator):
    """Locate a matching, co-matching or half-graph inside a binary matrix.

    Rows of ``X`` are one side of a bipartite graph and columns the other.
    ``fit`` runs the extraction pipeline; ``transform`` keeps the certified
    columns in certificate order, so ``transform(X)[rows_]`` is the certified
    square submatrix.

    Parameters
    ----------
    exact_threshold : int, default=40
        Largest auxiliary graph solved exactly by branch and bound; larger
        graphs use the logarithmic greedy.
    vc_budget : int or None, default=20000
        Node budget for the exact VC-dimension reported in ``report_``.
        ``0`` skips the search and reports a bound.
    seed : int, default=0
        Forwarded to :class:`HomogenizeConfig`.

    Attributes
    ----------
    report_ : PipelineReport
    certificate_ : ExtractionCertificate
    rows_, cols_ : ndarray of int
        Certified row and column indices of ``X``.
    pattern_ : TriPattern
    kind_ : PatternKind
    vacuous_ : bool
        True when only a size-1 witness was found.
    n_features_in_ : int
    """

    def __init__(self, exact_threshold=DEFAULT_EXACT_THRESHOLD, vc_budget=DEFAULT_PIPELINE_VC_BUDGET, seed=0):
        self.exact_threshold = exact_threshold
        self.vc_budget = vc_budget
        self.seed = seed

    def fit(self, X, y=None):
        A = check_binary_matrix(X)
        cfg = HomogenizeConfig(exact_threshold=self.exact_threshold, seed=self.seed)
        self.report_ = extract_structure(A, cfg, vc_budget=self.vc_budget)
        cert = self.report_.certificate
        self.certificate_ = cert
        self.rows_ = np.asarray(cert.rows, dtype=np.intp)
        self.cols_ = np.asarray(cert.cols, dtype=np.intp)
        self.pattern_ = cert.pattern
        self.kind_ = cert.kind
        self.vacuous_ = self.report_.vacuous
        self.n_features_in_ = A.n
        return self

    def transform(self, X):
        check_is_fitted(self, "certificate_")
        arr = check_binary_array(X)
        if arr.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {arr.shape[1]} features, but the extractor was fitted with {self.n_features_in_}")
        return arr[:, self.cols_]

    def extract(self, X):
        """The certified square submatrix of ``X``."""
        return self.transform(X)[self.rows_]
