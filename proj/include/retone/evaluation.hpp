#pragma once

#include <string>
#include <vector>

#include "retone/generator.hpp"

// Objective pitch accuracy: resynthesize with a target contour, re-track the
// result, compare. RMSE is in cents over mutually voiced frames; correlation
// is Pearson over the same frames in Hz.

namespace retone {

struct EvalMetrics {
  double f0_rmse_cents = 0.0;
  double fpc = 0.0;                // Pearson correlation of f0 in Hz
  double voicing_agreement = 0.0;  // fraction of frames with matching flags
  int mutual_voiced = 0;           // frames entering rmse/fpc
};

// target is the contour the system was asked to realize; measured is the
// contour tracked from its output. Lengths may differ by trailing frames;
// the overlap is compared.
EvalMetrics compare_contours(const PitchContour& target, const PitchContour& measured);

struct ShiftEval {
  double semitones = 0.0;
  EvalMetrics metrics;
};

// For each shift: global key shift of the ground truth contour, resynthesis
// conditioned on it, YIN re-tracking, comparison against the shifted target.
std::vector<ShiftEval> eval_global_key(const Generator& gen, const AudioSegment& audio,
                                       const PitchContour& ground_truth,
                                       const std::vector<double>& shifts, uint64_t noise_seed);

struct TemplateEval {
  EvalMetrics metrics;  // tracked output vs the retuned target contour
  int copied_frames = 0;
  int kept_frames = 0;
};

// Retunes the source contour onto the time-scaled reference melody, then
// measures how precisely the resynthesis realizes that target.
TemplateEval eval_template(const Generator& gen, const AudioSegment& source_audio,
                           const PitchContour& source, const PitchContour& reference,
                           uint64_t noise_seed);

std::string format_shift_table(const std::vector<ShiftEval>& rows);
void write_shift_tsv(const std::string& path, const std::vector<ShiftEval>& rows);

}  // namespace retone
