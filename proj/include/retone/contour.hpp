#pragma once

#include <string>

#include "retone/common.hpp"

namespace retone {

// F0 track CSV, one row per frame:
//   frame,time_s,f0_hz,voiced
// time_s = frame * hop_s, f0_hz = 0.0 for unvoiced frames, voiced in {0,1}.
void write_f0_csv(const std::string& path, const PitchContour& contour);
PitchContour read_f0_csv(const std::string& path);

// Semitone-domain helpers shared by the manipulation code.
// cents relative to an arbitrary but fixed reference (C1 = 32.70319566 Hz).
constexpr double kCentsRefHz = 32.703195662574764;

inline double f0_to_cents(double f0_hz) { return hz_to_cents(f0_hz, kCentsRefHz); }
inline double cents_to_f0(double cents) { return cents_to_hz(cents, kCentsRefHz); }

}  // namespace retone
