#pragma once

#include <string>
#include <vector>

#include "retone/common.hpp"

namespace retone {

// Deterministic synthetic singing: a random walk over note pitches rendered
// as a harmonic source (1/h rolloff, anti-alias truncated) through a static
// 3-formant filter, with vibrato, detune, drift and portamento transitions.
// Identical seeds give byte-identical WAV/CSV files.
struct SynthCorpusSpec {
  int n_utterances = 8;
  double min_dur_s = 4.0;
  double max_dur_s = 10.0;
  uint64_t seed = 1;
  int sample_rate = 44100;
  int hop_size = 512;
  int midi_low = 48;   // C3
  int midi_high = 72;  // C5
  double peak = 0.5;
  double noise_level = 0.0015;
};

struct SynthUtterance {
  AudioSegment audio;
  PitchContour contour;
};

// utt_index selects the per-utterance stream within spec.seed.
SynthUtterance generate_synth_utterance(const SynthCorpusSpec& spec, int utt_index);

struct ManifestEntry {
  std::string wav_path;
  std::string f0_path;
  uint64_t seed = 0;
};

// Writes utt_NNNN.wav / utt_NNNN.f0.csv plus manifest.tsv (tab-separated
// wav, csv, seed; paths relative to out_dir). Returns the manifest path.
std::string generate_synth_corpus(const SynthCorpusSpec& spec, const std::string& out_dir);

// Manifest rows with paths resolved relative to the manifest location.
std::vector<ManifestEntry> read_manifest(const std::string& manifest_path);
void write_manifest(const std::string& manifest_path, const std::vector<ManifestEntry>& entries);

}  // namespace retone
