#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "retone/common.hpp"

namespace retone {

struct StftConfig {
  int fft_size = 2048;
  int hop_size = 512;
  int win_length = 2048;
};

// Row-major frames x bins complex spectrogram.
struct ComplexSpectrogram {
  int frames = 0;
  int bins = 0;
  std::vector<std::complex<float>> values;

  std::complex<float>& at(int t, int k) { return values[static_cast<size_t>(t) * bins + k]; }
  const std::complex<float>& at(int t, int k) const {
    return values[static_cast<size_t>(t) * bins + k];
  }
};

// Centered STFT with Hann window and reflect padding. Frame t covers samples
// around t*hop, frame count = ceil(len / hop). Signals shorter than the
// window are zero-extended to one window before padding.
ComplexSpectrogram stft(const AudioSegment& audio, const StftConfig& cfg);

struct MelConfig {
  int sample_rate = 44100;
  int fft_size = 2048;
  int hop_size = 512;
  int win_length = 2048;
  int n_mels = 128;
  double fmin = 0.0;
  double fmax = 0.0;        // 0 = Nyquist
  float clip_floor = 1e-5f;  // linear magnitude floor applied before the log
};

struct MelSpectrogram {
  int frames = 0;
  int n_mels = 0;
  std::vector<float> values;  // row-major frames x mels, natural-log domain
  MelConfig config;

  float& at(int t, int m) { return values[static_cast<size_t>(t) * n_mels + m]; }
  float at(int t, int m) const { return values[static_cast<size_t>(t) * n_mels + m]; }
};

// Triangular mel filterbank on FFT bin centers, area-normalized per band.
// Stored sparse: band m covers fft bins [start[m], start[m]+weights[m].size()).
struct MelFilterbank {
  int n_mels = 0;
  int n_bins = 0;
  std::vector<int> start;
  std::vector<std::vector<float>> weights;
};

std::shared_ptr<const MelFilterbank> mel_filterbank(const MelConfig& cfg);

// log(max(|STFT| mel-projected, clip_floor)), natural log.
MelSpectrogram mel_spectrogram(const AudioSegment& audio, const MelConfig& cfg);

// The fixed resolution ladder used by the reconstruction loss.
std::vector<MelConfig> multi_scale_mel_configs(int sample_rate = 44100);
std::vector<MelSpectrogram> multi_scale_mels(const AudioSegment& audio, int sample_rate = 44100);

struct PitchBinConfig {
  int n_bins = 360;
  double fmin_hz = 32.70319566257483;  // C1
  int bins_per_octave = 60;            // 20-cent bins
  double blur_cents = 25.0;            // gaussian sigma for soft targets

  double bin_width_cents() const { return 1200.0 / bins_per_octave; }
  double bin_cents(int k) const { return k * bin_width_cents(); }  // relative to fmin
  double bin_hz(int k) const { return fmin_hz * std::exp2(bin_cents(k) / 1200.0); }
};

// Soft pitch targets: per voiced frame a gaussian bump (sigma = blur_cents)
// centered on the true pitch in cents space, normalized to peak 1, truncated
// at 4 sigma. Unvoiced frames are all-zero rows. F0 outside the bin range is
// clamped to the boundary bin; clamp_count reports how many frames that
// affected.
struct PitchProbMatrix {
  int frames = 0;
  int n_bins = 0;
  std::vector<float> probs;  // row-major frames x bins
  PitchBinConfig config;
  int clamp_count = 0;

  float at(int t, int k) const { return probs[static_cast<size_t>(t) * n_bins + k]; }
};

PitchProbMatrix encode_pitch_targets(const PitchContour& contour, const PitchBinConfig& cfg);

// Inverse of the encoding: frames whose peak is below `threshold` decode as
// unvoiced; voiced frames decode to the probability-weighted mean of bin
// cents within +-4 bins of the argmax.
PitchContour decode_pitch(const PitchProbMatrix& probs, double threshold = 0.5,
                          double hop_s = 512.0 / 44100.0);

struct CqtConfig {
  int sample_rate = 44100;
  int n_octaves = 10;
  int bins_per_octave = 12;
  double fmin_hz = 16.351597831287414;  // C0; fmin * 2^10 must stay under Nyquist
  int hop_size = 512;
};

// Constant-Q transform evaluated octave by octave over a halfband-downsample
// chain; the same kernel bank serves every octave at its own rate. Bins are
// ordered low to high, frame count = ceil(len / hop).
ComplexSpectrogram cqt(const AudioSegment& audio, const CqtConfig& cfg);

// Precomputed machinery shared by cqt() and the differentiable version used
// inside the CQT discriminator.
struct CqtKernels {
  CqtConfig config;
  int kernel_len = 0;                        // common length, top-octave rate
  std::vector<std::vector<float>> kern_re;   // bins_per_octave x kernel_len
  std::vector<std::vector<float>> kern_im;
  std::vector<float> halfband;               // decimation lowpass (odd length)
};

std::shared_ptr<const CqtKernels> cqt_kernels(const CqtConfig& cfg);

// Downsample by two with the kernel-set halfband filter (zero padding at the
// edges). Exposed for the discriminator path.
std::vector<float> halfband_decimate(const std::vector<float>& x, const CqtKernels& k);

}  // namespace retone
