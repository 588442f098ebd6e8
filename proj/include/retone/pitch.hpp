#pragma once

#include <string>
#include <vector>

#include "retone/common.hpp"

namespace retone {

// Monophonic F0 tracking (YIN). Frame t is centered at t*hop; frame count is
// ceil(len / hop). Voicing requires both a dip below the aperiodicity
// threshold and frame energy above a -60 dBFS gate.
struct F0ExtractConfig {
  int hop_size = 512;
  double fmin_hz = 40.0;
  double fmax_hz = 1600.0;
  double threshold = 0.15;
  int window = 2048;           // integration window
  double energy_gate = 1e-3;   // rms floor for voicing
};

PitchContour extract_f0(const AudioSegment& audio, const F0ExtractConfig& cfg = {});

// ---------------------------------------------------------------------------
// Note-level structure. A segmentation covers (most of) each voiced run with
// alternating notes and transitions; voiced runs shorter than
// min_note_frames are left uncovered and untouched by manipulations.

struct Note {
  int start = 0, end = 0;  // frame range [start, end)
  int midi = 0;            // rounded median pitch
  double median_f0 = 0.0;
};

struct Transition {
  int start = 0, end = 0;
  int prev_note = -1, next_note = -1;  // indices into notes; -1 at run edges
};

struct SegmentationConfig {
  int median_window = 5;        // frames, for the smoothed contour
  double jump_semitones = 0.6;  // boundary threshold between segments
  int min_note_frames = 6;
};

struct NoteSegmentation {
  std::vector<Note> notes;
  std::vector<Transition> transitions;
  int total_frames = 0;
};

NoteSegmentation segment_notes(const PitchContour& contour, const SegmentationConfig& cfg = {});

// ---------------------------------------------------------------------------
// Manipulations. All three operate in cents space on voiced frames only and
// leave frames outside the segmentation untouched.

// Integer semitone shift per note; across each transition the shift is
// cross-faded linearly from the previous note's value to the next one's.
PitchContour manipulate_key(const PitchContour& contour, const NoteSegmentation& seg,
                            const std::vector<int>& semitone_shifts);

// Scales each note's deviation around its median: c' = med + k (c - med).
PitchContour manipulate_variance(const PitchContour& contour, const NoteSegmentation& seg,
                                 const std::vector<double>& factors);

// Blends each transition between a straight line connecting the adjacent
// note endpoints (blend 0) and the contour as-is (blend 1).
PitchContour manipulate_transient(const PitchContour& contour, const NoteSegmentation& seg,
                                  const std::vector<double>& blends);

struct ManipulationRanges {
  double p_key = 0.8, p_variance = 0.5, p_transient = 0.5;
  int key_range_semitones = 6;
  double variance_min = 0.25, variance_max = 2.0;
  double blend_min = 0.0, blend_max = 1.0;
  double f0_min_hz = 40.0, f0_max_hz = 2000.0;  // post-manipulation clamp
  SegmentationConfig seg;
};

// Everything needed to re-apply (or undo) one sampled manipulation. Inverse
// transients replay the transition values stored at application time, so a
// spec is invertible only after it has been applied (and never after the
// post-clamp fired).
struct ManipulationSpec {
  NoteSegmentation seg;
  bool has_key = false;
  std::vector<int> key_shifts;
  bool has_variance = false;
  std::vector<double> variance_factors;
  bool has_transient = false;
  std::vector<double> transient_blends;
  std::vector<std::vector<float>> stored_transitions;  // f0 per transition frame, pre-blend
  bool restore_transitions = false;  // inverse mode: write stored values back
  bool inverted = false;             // reverse the application order
  bool clamped = false;              // post-clamp modified at least one frame

  std::string serialize() const;
  static ManipulationSpec parse(const std::string& text);
};

// Applies spec fields in order key -> variance -> transient (reversed when
// spec.inverted). Stores pre-transient transition values into the returned
// spec copy and raises the clamped flag if the f0 clamp fired.
struct ManipulationResult {
  PitchContour contour;
  ManipulationSpec spec;
};

ManipulationResult apply_manipulation(const PitchContour& contour, const ManipulationSpec& spec,
                                      const ManipulationRanges& ranges = {});

// Samples gates and parameters from `seed`, applies them, and returns the
// manipulated contour with its spec. An empty segmentation returns the input
// unchanged with an empty spec.
ManipulationResult random_manipulation(const PitchContour& contour, uint64_t seed,
                                       const ManipulationRanges& ranges = {});

// Exact inverse of an applied spec. Throws ArgumentError when the spec was
// clamped, or has transients without stored values, or is itself an inverse
// carrying transients.
ManipulationSpec invert_spec(const ManipulationSpec& spec);

// Uniform shift of every voiced frame by a (possibly fractional) number of
// semitones. No segmentation involved.
PitchContour global_shift(const PitchContour& contour, double semitones);

// Stretches the reference contour onto the source timeline (uniform linear
// time scaling to the source frame count) and copies its pitch onto every
// frame where both are voiced. Voicing always follows the source; voiced
// source frames whose mapped reference frame is unvoiced keep their own
// pitch. Throws ArgumentError when the reference has no voiced frames.
struct TemplateRetuneResult {
  PitchContour contour;
  int copied_frames = 0;  // source frames that took the reference pitch
  int kept_frames = 0;    // voiced source frames that kept their own pitch
};

TemplateRetuneResult template_retune(const PitchContour& source, const PitchContour& reference);

}  // namespace retone
