#pragma once

#include <string>

#include "retone/common.hpp"

namespace retone {

// Reads a RIFF/WAVE file. Accepts 16/24/32-bit PCM and 32-bit float, mono or
// stereo (stereo is averaged to mono). Integer samples are scaled by the type
// midpoint (e.g. 1/32768 for 16-bit) and the result is clamped to [-1, 1].
AudioSegment load_wav(const std::string& path);

// Writes mono WAV. 16-bit PCM by default (round, clamp to the int16 range);
// float32=true writes IEEE float samples unmodified.
void save_wav(const std::string& path, const AudioSegment& audio, bool float32 = false);

// Sample-rate conversion with a Kaiser-windowed sinc filter (64 zero
// crossings per side, beta 14). Identity rates return the input unchanged.
// The signal is treated as silence outside its ends, so a few filter lengths
// at each edge are not exactly reconstructed.
AudioSegment resample(const AudioSegment& audio, int target_rate);

}  // namespace retone
