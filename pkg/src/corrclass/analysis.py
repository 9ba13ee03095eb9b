"""Similarity reports for a set of sequences measured by random probes.

A report compares two views of pairwise similarity: the correlation of
match-score rows (what the probes see) and the direct k-mer overlap of the
sequences (ground truth), together with their elementwise absolute gap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .opinions import CorrelationMatrix, row_correlation
from .sequences import _uniform_length, match_matrix, overlap, sequences_of

__all__ = [
    "ReportParams",
    "SimilarityReport",
    "sample_correlation",
    "overlap_matrix",
    "similarity_report",
]


@dataclass(frozen=True)
class ReportParams:
    """Shape metadata attached to a similarity report."""

    n_samples: int
    n_probes: int
    sample_length: int
    probe_length: int
    seed: int | None = None


@dataclass(frozen=True)
class SimilarityReport:
    """Correlation, overlap, and gap matrices for one sample set.

    ``error`` is ``abs(correlation - overlap)``, entrywise in [0, 2].
    ``degenerate_rows`` lists samples whose match-score row was constant
    across probes; their correlation entries are 0 by convention, so they
    are flagged rather than silently folded in.
    """

    correlation: np.ndarray
    overlap: np.ndarray
    error: np.ndarray
    params: ReportParams
    degenerate_rows: tuple[int, ...]


def sample_correlation(match) -> CorrelationMatrix:
    """Pearson correlation between the rows of a match-score matrix.

    Rows are samples, columns are probes; each row is centered by its own
    mean, so this is the same operation the linear model applies to
    opinion rows.
    """
    values = np.asarray(match, dtype=float)
    if values.ndim != 2:
        raise ValueError(f"match matrix must be 2-D, got shape {values.shape}")
    if values.shape[0] < 2:
        raise ValueError(f"need at least 2 samples, got {values.shape[0]}")
    if values.shape[1] < 2:
        raise ValueError(f"need at least 2 probes, got {values.shape[1]}")
    return row_correlation(values)


def overlap_matrix(samples, k: int) -> np.ndarray:
    """Pairwise k-mer overlap of the samples.

    Diagonal entries are self-overlaps, which fall below 1 when a sequence
    repeats one of its length-k windows.
    """
    seqs = sequences_of(samples)
    _uniform_length(seqs, "sample")
    n = len(seqs)
    out = np.empty((n, n))
    for i in range(n):
        out[i, i] = overlap(seqs[i], seqs[i], k)
        for j in range(i + 1, n):
            out[i, j] = out[j, i] = overlap(seqs[i], seqs[j], k)
    return out


def similarity_report(samples, probes, seed: int | None = None) -> SimilarityReport:
    """Full report: match-row correlation vs k-mer overlap at probe length.

    ``seed`` is carried as metadata only; the inputs fully determine the
    output.
    """
    sample_seqs = sequences_of(samples)
    probe_seqs = sequences_of(probes)
    sample_length = _uniform_length(sample_seqs, "sample")
    probe_length = _uniform_length(probe_seqs, "probe")
    scores = match_matrix(sample_seqs, probe_seqs).astype(float)
    correlation = sample_correlation(scores)
    corr = np.asarray(correlation)
    omega = overlap_matrix(sample_seqs, probe_length)
    return SimilarityReport(
        correlation=corr,
        overlap=omega,
        error=np.abs(corr - omega),
        params=ReportParams(
            n_samples=len(sample_seqs),
            n_probes=len(probe_seqs),
            sample_length=sample_length,
            probe_length=probe_length,
            seed=seed,
        ),
        degenerate_rows=correlation.degenerate_rows,
    )
