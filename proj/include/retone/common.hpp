#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace retone {

// Error taxonomy. Everything user-facing throws one of these; the CLI maps
// ArgumentError to exit code 2 and the rest to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : Error {
  using Error::Error;
};

struct FormatError : Error {
  using Error::Error;
};

struct ArgumentError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct NumericError : Error {
  using Error::Error;
};

struct AudioSegment {
  std::vector<float> samples;  // mono, [-1, 1]
  int sample_rate = 44100;

  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }
};

// Frame-synchronous F0 track. f0_hz[i] is 0 when voiced[i] == 0.
struct PitchContour {
  std::vector<float> f0_hz;
  std::vector<uint8_t> voiced;
  double hop_s = 512.0 / 44100.0;

  size_t size() const { return f0_hz.size(); }
  double frame_rate() const { return 1.0 / hop_s; }
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ArgumentError(msg);
}

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

inline double hz_to_cents(double f0, double fref) { return 1200.0 * std::log2(f0 / fref); }
inline double cents_to_hz(double cents, double fref) { return fref * std::exp2(cents / 1200.0); }

}  // namespace retone
