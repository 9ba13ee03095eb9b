"""Nucleotide sequences and the nonlinear matching primitives.

Sequences are plain uppercase strings over {A, C, G, T}.  The module covers
Watson-Crick complements, seeded random generation, a family of eight
engineered reference variants, the ungapped best-complementary-match kernel,
and k-mer overlap measures between equal-length sequences.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

__all__ = [
    "ALPHABET",
    "ProbeSet",
    "SampleSet",
    "ReferenceFamily",
    "validate_sequence",
    "sequences_of",
    "complement",
    "random_sequence",
    "random_probes",
    "reference_family",
    "max_complementary_match",
    "match_matrix",
    "kmer_set",
    "overlap",
    "negative_overlap",
]

ALPHABET = "ACGT"

_COMPLEMENT_TABLE = str.maketrans("ACGT", "TGCA")
_BASE_BYTES = np.frombuffer(b"ACGT", dtype=np.uint8)
_CODE_OF_BYTE = np.full(256, 255, dtype=np.uint8)
for _index, _byte in enumerate(b"ACGT"):
    _CODE_OF_BYTE[_byte] = _index

# cap on elements of the (probes x offsets x length) scratch block
_CHUNK_ELEMENTS = 1 << 26


def validate_sequence(seq: str) -> None:
    """Reject non-strings, empty strings, and symbols outside {A, C, G, T}."""
    if not isinstance(seq, str):
        raise TypeError(f"sequence must be str, got {type(seq).__name__}")
    if not seq:
        raise ValueError("sequence must be nonempty")
    foreign = set(seq) - set(ALPHABET)
    if foreign:
        raise ValueError(f"sequence contains symbols outside ACGT: {sorted(foreign)}")


def _encode(seq: str) -> np.ndarray:
    """Map a sequence to uint8 codes A=0, C=1, G=2, T=3 (validates)."""
    if not isinstance(seq, str):
        raise TypeError(f"sequence must be str, got {type(seq).__name__}")
    if not seq:
        raise ValueError("sequence must be nonempty")
    try:
        raw = np.frombuffer(seq.encode("ascii"), dtype=np.uint8)
    except UnicodeEncodeError as exc:
        raise ValueError(f"sequence contains non-ASCII symbols: {seq!r:.40}") from exc
    codes = _CODE_OF_BYTE[raw]
    if (codes == 255).any():
        bad = sorted(set(seq) - set(ALPHABET))
        raise ValueError(f"sequence contains symbols outside ACGT: {bad}")
    return codes


def _decode(codes: np.ndarray) -> str:
    return bytes(_BASE_BYTES[np.asarray(codes, dtype=np.uint8)]).decode("ascii")


def complement(seq: str) -> str:
    """Positionwise Watson-Crick complement (A<->T, C<->G), no reversal."""
    validate_sequence(seq)
    return seq.translate(_COMPLEMENT_TABLE)


def random_sequence(length: int, rng: np.random.Generator) -> str:
    """Sequence of ``length`` bases drawn i.i.d. uniform from ``rng``."""
    if length < 1:
        raise ValueError(f"length must be positive, got {length}")
    return _decode(rng.integers(0, 4, size=length))


def _uniform_length(seqs: tuple[str, ...], what: str) -> int:
    if not seqs:
        raise ValueError(f"{what} set must contain at least one sequence")
    for seq in seqs:
        validate_sequence(seq)
    lengths = {len(seq) for seq in seqs}
    if len(lengths) != 1:
        raise ValueError(f"{what} sequences must share one length, got {sorted(lengths)}")
    return lengths.pop()


@dataclass(frozen=True)
class ProbeSet:
    """Measurement sequences, all of one length."""

    probes: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "probes", tuple(self.probes))
        _uniform_length(self.probes, "probe")

    @property
    def length(self) -> int:
        return len(self.probes[0])

    def __len__(self) -> int:
        return len(self.probes)

    def __iter__(self):
        return iter(self.probes)


@dataclass(frozen=True)
class SampleSet:
    """Sequences to classify, all of one length."""

    samples: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "samples", tuple(self.samples))
        _uniform_length(self.samples, "sample")

    @property
    def length(self) -> int:
        return len(self.samples[0])

    def __len__(self) -> int:
        return len(self.samples)

    def __iter__(self):
        return iter(self.samples)


def sequences_of(obj) -> tuple[str, ...]:
    """Normalize a ProbeSet / SampleSet / ReferenceFamily / iterable to strings."""
    for attr in ("probes", "samples", "seqs"):
        inner = getattr(obj, attr, None)
        if inner is not None:
            return tuple(inner)
    if isinstance(obj, str):
        raise TypeError("expected a collection of sequences, got a single string")
    return tuple(obj)


def random_probes(count: int, length: int, rng: np.random.Generator) -> ProbeSet:
    """``count`` independent uniform probes of ``length``, one batched draw."""
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    if length < 1:
        raise ValueError(f"length must be positive, got {length}")
    codes = rng.integers(0, 4, size=(count, length))
    return ProbeSet(tuple(_decode(row) for row in codes))


@dataclass(frozen=True)
class ReferenceFamily:
    """Eight engineered variants of one random anchor sequence.

    Index 0 is the anchor.  1 mutates the central base; 2 shifts left by one
    with a fresh tail base; 3 shifts then mutates; 4 exchanges the two
    halves; 5 starts with the anchor's second half and ends randomly; 6 and
    7 are fresh random sequences that share one implanted block (the
    "gene") of a third of the length, placed at opposite ends.
    """

    seqs: tuple[str, ...]
    gene_length: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "seqs", tuple(self.seqs))
        if len(self.seqs) != 8:
            raise ValueError(f"a reference family has exactly 8 sequences, got {len(self.seqs)}")
        length = _uniform_length(self.seqs, "reference")
        if self.gene_length != length // 3:
            raise ValueError(
                f"gene_length must be sample_length // 3 = {length // 3}, got {self.gene_length}"
            )

    @property
    def sample_length(self) -> int:
        return len(self.seqs[0])

    def __len__(self) -> int:
        return len(self.seqs)

    def __iter__(self):
        return iter(self.seqs)


def _mutate_center(seq: str, rng: np.random.Generator) -> str:
    """Replace the middle base with a different one, chosen uniformly."""
    middle = len(seq) // 2
    options = [base for base in ALPHABET if base != seq[middle]]
    replacement = options[int(rng.integers(0, len(options)))]
    return seq[:middle] + replacement + seq[middle + 1 :]


def reference_family(sample_length: int, rng: np.random.Generator) -> ReferenceFamily:
    """Build the eight-sequence reference family at ``sample_length``.

    The draw order is fixed (anchor, central mutation, shift tail, shifted
    mutation, tail of 5, bodies of 6 and 7, gene), so one stream always
    yields the same family.  Halves split at ``sample_length // 2`` and the
    gene length is ``sample_length // 3``.
    """
    if sample_length < 6:
        raise ValueError(f"sample_length must be at least 6, got {sample_length}")
    w = sample_length
    half = w // 2
    gene_length = w // 3

    anchor = random_sequence(w, rng)
    mutated = _mutate_center(anchor, rng)
    shifted = anchor[1:] + random_sequence(1, rng)
    shifted_mutated = _mutate_center(shifted, rng)
    swapped = anchor[half:] + anchor[:half]
    half_copy = anchor[half : 2 * half] + random_sequence(w - half, rng)
    first_body = random_sequence(w, rng)
    second_body = random_sequence(w, rng)
    gene = random_sequence(gene_length, rng)
    with_gene_left = gene + first_body[gene_length:]
    with_gene_right = second_body[: w - gene_length] + gene

    return ReferenceFamily(
        seqs=(
            anchor,
            mutated,
            shifted,
            shifted_mutated,
            swapped,
            half_copy,
            with_gene_left,
            with_gene_right,
        ),
        gene_length=gene_length,
    )


def _best_matches(sample_codes: np.ndarray, targets: np.ndarray) -> np.ndarray:
    """Max positionwise hits of each target row over all sample windows.

    ``targets`` holds complemented probe codes, one row per probe.  Work is
    chunked over probes so the scratch block stays within _CHUNK_ELEMENTS.
    """
    length = targets.shape[1]
    windows = sliding_window_view(sample_codes, length)
    n_offsets = windows.shape[0]
    best = np.empty(targets.shape[0], dtype=np.int64)
    step = max(1, _CHUNK_ELEMENTS // max(1, n_offsets * length))
    for start in range(0, targets.shape[0], step):
        block = targets[start : start + step]
        hits = (windows[np.newaxis, :, :] == block[:, np.newaxis, :]).sum(axis=2)
        best[start : start + block.shape[0]] = hits.max(axis=1)
    return best


def max_complementary_match(sample: str, probe: str) -> int:
    """Best ungapped complementary score of ``probe`` against ``sample``.

    Slides the probe over every in-bounds offset (no overhangs) and counts
    positions where the sample base is the Watson-Crick complement of the
    probe base; returns the maximum count, between 0 and the probe length.
    """
    sample_codes = _encode(sample)
    probe_codes = _encode(probe)
    if probe_codes.size > sample_codes.size:
        raise ValueError(
            f"probe length {probe_codes.size} exceeds sample length {sample_codes.size}"
        )
    # complement in code space: A=0 <-> T=3, C=1 <-> G=2
    target = (3 - probe_codes)[np.newaxis, :]
    return int(_best_matches(sample_codes, target)[0])


def match_matrix(samples, probes) -> np.ndarray:
    """Best complementary match of every sample against every probe.

    Entry (i, k) equals ``max_complementary_match(samples[i], probes[k])``;
    the scan over probes and offsets is vectorized but agrees exactly with
    the per-pair definition.
    """
    sample_seqs = sequences_of(samples)
    probe_seqs = sequences_of(probes)
    sample_length = _uniform_length(sample_seqs, "sample")
    probe_length = _uniform_length(probe_seqs, "probe")
    if probe_length > sample_length:
        raise ValueError(f"probe length {probe_length} exceeds sample length {sample_length}")
    targets = 3 - np.stack([_encode(p) for p in probe_seqs])
    out = np.empty((len(sample_seqs), len(probe_seqs)), dtype=np.int64)
    for i, seq in enumerate(sample_seqs):
        out[i] = _best_matches(_encode(seq), targets)
    return out


def kmer_set(seq: str, k: int) -> set[str]:
    """Distinct length-``k`` windows of ``seq``."""
    validate_sequence(seq)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k > len(seq):
        raise ValueError(f"k-mer length {k} exceeds sequence length {len(seq)}")
    return {seq[i : i + k] for i in range(len(seq) - k + 1)}


def _check_pair(x: str, y: str, k: int) -> None:
    validate_sequence(x)
    validate_sequence(y)
    if len(x) != len(y):
        raise ValueError(f"sequences must have equal length, got {len(x)} and {len(y)}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k > len(x):
        raise ValueError(f"k-mer length {k} exceeds sequence length {len(x)}")


def overlap(x: str, y: str, k: int) -> float:
    """Shared distinct k-mers of two equal-length sequences, normalized.

    ``|kmers(x) & kmers(y)| / (W - k + 1)``: symmetric, in [0, 1], and equal
    to 1 for identical sequences with no repeated window.
    """
    _check_pair(x, y, k)
    return len(kmer_set(x, k) & kmer_set(y, k)) / (len(x) - k + 1)


def negative_overlap(x: str, y: str, k: int) -> float:
    """Normalized count of x's distinct k-mers that y lacks.

    Complements :func:`overlap` exactly when x has no repeated window:
    the two then sum to 1.
    """
    _check_pair(x, y, k)
    return len(kmer_set(x, k) - kmer_set(y, k)) / (len(x) - k + 1)
