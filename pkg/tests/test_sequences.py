"""Sequence primitives: complements, families, match kernel, overlaps."""

import numpy as np
import pytest

from corrclass.rng import stream
from corrclass.sequences import (
    ALPHABET,
    ProbeSet,
    ReferenceFamily,
    SampleSet,
    complement,
    kmer_set,
    match_matrix,
    max_complementary_match,
    negative_overlap,
    overlap,
    random_probes,
    random_sequence,
    reference_family,
    sequences_of,
)

COMPLEMENT = str.maketrans("ACGT", "TGCA")


def oracle_match(sample: str, probe: str) -> int:
    """Offset-scan reference: max complement hits, plain Python."""
    comp = probe.translate(COMPLEMENT)
    best = 0
    for offset in range(len(sample) - len(probe) + 1):
        hits = sum(1 for p in range(len(probe)) if sample[offset + p] == comp[p])
        if hits > best:
            best = hits
    return best


class TestComplement:
    def test_watson_crick_pairs(self):
        assert complement("ATGC") == "TACG"
        assert complement("AAAA") == "TTTT"
        assert complement("ACGT") == "TGCA"

    def test_involution(self):
        rng = stream(3, "inv")
        for _ in range(20):
            seq = random_sequence(int(rng.integers(1, 200)), rng)
            assert complement(complement(seq)) == seq

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            complement("")
        with pytest.raises(ValueError):
            complement("acgt")
        with pytest.raises(ValueError):
            complement("ACGU")
        with pytest.raises(TypeError):
            complement(1234)


class TestRandomSequence:
    def test_deterministic_per_stream(self):
        assert random_sequence(50, stream(9, "s")) == random_sequence(50, stream(9, "s"))

    def test_symbol_frequencies_near_uniform(self):
        seq = random_sequence(100_000, stream(1, "freq"))
        for base in ALPHABET:
            assert abs(seq.count(base) / 100_000 - 0.25) < 0.01

    def test_single_base(self):
        assert random_sequence(1, stream(2, "one")) in set(ALPHABET)

    def test_zero_length_rejected(self):
        with pytest.raises(ValueError):
            random_sequence(0, stream(0, "z"))


class TestSequenceSets:
    def test_probe_set_validates_uniform_length(self):
        with pytest.raises(ValueError):
            ProbeSet(("ACG", "ACGT"))
        with pytest.raises(ValueError):
            ProbeSet(())
        probes = ProbeSet(("ACG", "TTT"))
        assert probes.length == 3
        assert len(probes) == 2

    def test_sample_set_validates_content(self):
        with pytest.raises(ValueError):
            SampleSet(("ACGX",))
        samples = SampleSet(("ACGT", "TTTT"))
        assert samples.length == 4
        assert list(samples) == ["ACGT", "TTTT"]

    def test_random_probes_batched_draw(self):
        probes = random_probes(12, 7, stream(4, "p"))
        assert len(probes) == 12
        assert probes.length == 7
        again = random_probes(12, 7, stream(4, "p"))
        assert tuple(probes) == tuple(again)

    def test_random_probes_rejects_bad_counts(self):
        with pytest.raises(ValueError):
            random_probes(0, 5, stream(0, "p"))
        with pytest.raises(ValueError):
            random_probes(5, 0, stream(0, "p"))

    def test_sequences_of_duck_typing(self):
        probes = ProbeSet(("ACG", "TTT"))
        assert sequences_of(probes) == ("ACG", "TTT")
        assert sequences_of(["ACG"]) == ("ACG",)
        with pytest.raises(TypeError):
            sequences_of("ACG")


class TestReferenceFamily:
    @pytest.mark.parametrize("w", [6, 7, 30, 31, 150, 200])
    def test_structural_invariants(self, w):
        for seed in range(5):
            family = reference_family(w, stream(seed, "family"))
            seqs = family.seqs
            half = w // 2
            gene = w // 3
            assert len(seqs) == 8
            assert all(len(s) == w for s in seqs)
            assert family.sample_length == w
            assert family.gene_length == gene
            # central mutation: exactly one difference, at the middle
            diffs = [i for i in range(w) if seqs[0][i] != seqs[1][i]]
            assert diffs == [half]
            # unit left shift with fresh tail base
            assert seqs[2][: w - 1] == seqs[0][1:]
            # shifted then centrally mutated
            diffs3 = [i for i in range(w) if seqs[2][i] != seqs[3][i]]
            assert diffs3 == [half]
            # half swap
            assert seqs[4] == seqs[0][half:] + seqs[0][:half]
            # copied block at the head of seq 5
            assert seqs[5][:half] == seqs[0][half : 2 * half]
            # shared gene at opposite ends
            assert seqs[6][:gene] == seqs[7][w - gene :]

    def test_deterministic_and_seed_sensitive(self):
        one = reference_family(30, stream(5, "family"))
        two = reference_family(30, stream(5, "family"))
        other = reference_family(30, stream(6, "family"))
        assert one.seqs == two.seqs
        assert one.seqs != other.seqs

    def test_minimum_length_enforced(self):
        with pytest.raises(ValueError):
            reference_family(5, stream(0, "family"))
        reference_family(6, stream(0, "family"))

    def test_family_type_validation(self):
        family = reference_family(12, stream(1, "family"))
        with pytest.raises(ValueError):
            ReferenceFamily(seqs=family.seqs[:7], gene_length=4)
        with pytest.raises(ValueError):
            ReferenceFamily(seqs=family.seqs, gene_length=3)


class TestMatchKernel:
    def test_exact_complement_scores_full_length(self):
        assert max_complementary_match("ATGC", "TACG") == 4

    def test_no_pairing_scores_zero(self):
        assert max_complementary_match("CCCCC", "AAAA") == 0

    def test_short_probe_over_offsets(self):
        assert max_complementary_match("ATATAT", "TA") == 2

    def test_planted_site_scores_probe_length(self):
        rng = stream(8, "plant")
        for _ in range(20):
            w = int(rng.integers(10, 80))
            length = int(rng.integers(2, min(10, w)))
            probe = random_sequence(length, rng)
            body = random_sequence(w, rng)
            site = int(rng.integers(0, w - length + 1))
            sample = body[:site] + complement(probe) + body[site + length :]
            assert max_complementary_match(sample, probe) == length

    def test_full_score_iff_complement_is_substring(self):
        rng = stream(12, "iff")
        for _ in range(200):
            w = int(rng.integers(4, 30))
            length = int(rng.integers(1, min(6, w) + 1))
            sample = random_sequence(w, rng)
            probe = random_sequence(length, rng)
            full = max_complementary_match(sample, probe) == length
            assert full == (complement(probe) in sample)

    def test_invariant_under_complementing_both(self):
        rng = stream(13, "both")
        for _ in range(100):
            w = int(rng.integers(2, 40))
            length = int(rng.integers(1, w + 1))
            sample = random_sequence(w, rng)
            probe = random_sequence(length, rng)
            assert max_complementary_match(sample, probe) == max_complementary_match(
                complement(sample), complement(probe)
            )

    def test_matches_offset_scan_oracle(self):
        rng = stream(14, "oracle")
        for _ in range(300):
            w = int(rng.integers(1, 60))
            length = int(rng.integers(1, w + 1))
            sample = random_sequence(w, rng)
            probe = random_sequence(length, rng)
            assert max_complementary_match(sample, probe) == oracle_match(sample, probe)

    def test_probe_longer_than_sample_rejected(self):
        with pytest.raises(ValueError):
            max_complementary_match("ACG", "ACGT")


class TestMatchMatrix:
    def test_matches_entrywise_oracle(self):
        rng = stream(15, "mm")
        samples = [random_sequence(10, rng) for _ in range(2)]
        probes = [random_sequence(4, rng) for _ in range(3)]
        m = match_matrix(samples, probes)
        assert m.shape == (2, 3)
        assert m.dtype == np.int64
        for i in range(2):
            for k in range(3):
                assert m[i, k] == oracle_match(samples[i], probes[k])

    def test_duplicate_samples_share_rows(self):
        rng = stream(16, "dup")
        seq = random_sequence(20, rng)
        probes = random_probes(8, 5, rng)
        m = match_matrix([seq, seq], probes)
        assert np.array_equal(m[0], m[1])

    def test_entries_bounded_by_probe_length(self):
        rng = stream(17, "rng")
        samples = [random_sequence(30, rng) for _ in range(4)]
        probes = random_probes(10, 6, rng)
        m = match_matrix(samples, probes)
        assert np.all(m >= 0)
        assert np.all(m <= 6)

    def test_accepts_probe_and_sample_sets(self):
        rng = stream(18, "sets")
        samples = SampleSet(tuple(random_sequence(15, rng) for _ in range(3)))
        probes = random_probes(5, 4, rng)
        m = match_matrix(samples, probes)
        assert m.shape == (3, 5)

    def test_probe_longer_than_sample_rejected(self):
        with pytest.raises(ValueError):
            match_matrix(["ACGT"], ["ACGTA"])


class TestOverlap:
    def test_identical_distinct_windows(self):
        seq = "ACGTAC"
        assert len(kmer_set(seq, 3)) == 4
        assert overlap(seq, seq, 3) == 1.0

    def test_disjoint_kmer_sets(self):
        assert overlap("AAAAA", "CCCCC", 2) == 0.0

    def test_half_swap_formula(self):
        # swapped halves lose only the windows crossing the two seams
        rng = stream(21, "swap")
        w, length = 60, 7
        for _ in range(10):
            seq = random_sequence(w, rng)
            if len(kmer_set(seq, length)) != w - length + 1:
                continue
            swapped = seq[w // 2 :] + seq[: w // 2]
            windows = w - length + 1
            shared = len(kmer_set(seq, length) & kmer_set(swapped, length))
            assert overlap(seq, swapped, length) == shared / windows
            assert shared >= windows - 2 * (length - 1)

    def test_single_symbol_counts_shared_alphabet(self):
        x = "AACCG"
        y = "GGTTT"
        shared = len(set(x) & set(y))
        assert overlap(x, y, 1) == shared / 5

    def test_symmetry(self):
        rng = stream(22, "sym")
        for _ in range(20):
            x = random_sequence(30, rng)
            y = random_sequence(30, rng)
            assert overlap(x, y, 6) == overlap(y, x, 6)

    def test_range_and_errors(self):
        with pytest.raises(ValueError):
            overlap("ACGT", "ACGT", 5)
        with pytest.raises(ValueError):
            overlap("ACGT", "ACG", 2)
        with pytest.raises(ValueError):
            overlap("ACGT", "ACGT", 0)


class TestNegativeOverlap:
    def test_identical_sequences_have_empty_difference(self):
        rng = stream(23, "neg")
        seq = random_sequence(40, rng)
        assert negative_overlap(seq, seq, 5) == 0.0

    def test_repeated_windows_normalization(self):
        # AAAA has one distinct 2-mer over three windows
        assert negative_overlap("AAAA", "CCCC", 2) == pytest.approx(1 / 3)

    def test_partition_identity_when_windows_distinct(self):
        rng = stream(24, "part")
        count = 0
        while count < 50:
            x = random_sequence(40, rng)
            if len(kmer_set(x, 8)) != 33:
                continue
            y = random_sequence(40, rng)
            assert overlap(x, y, 8) + negative_overlap(x, y, 8) == 1.0
            count += 1

    def test_not_symmetric_in_general(self):
        x = "AAAACC"
        y = "AAAAAA"
        # x has {AA, AC, CC}; y has {AA}
        assert negative_overlap(x, y, 2) == pytest.approx(2 / 5)
        assert negative_overlap(y, x, 2) == 0.0
