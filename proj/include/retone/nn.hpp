#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "retone/features.hpp"
#include "retone/rng.hpp"
#include "retone/tensor.hpp"

// Network building blocks on top of the autodiff tape: parameter registry,
// layers with deterministic initialization, AdamW, checkpoint serialization,
// and the differentiable signal front-ends (STFT, mel projection, CQT) that
// mirror the reference implementations in features.hpp bit-for-bit on the
// forward pass.

namespace retone::nn {

using ad::Tensor;
using ad::Var;

// --- parameters ---------------------------------------------------------------

class ParamStore {
 public:
  Var create(const std::string& name, std::vector<int> shape, uint32_t party);
  Var get(const std::string& name) const;
  bool has(const std::string& name) const { return params_.count(name) != 0; }
  size_t size() const { return params_.size(); }

  // Name-sorted; iteration order is the deterministic draw/update order.
  std::vector<Var> params_of(uint32_t party_mask) const;
  const std::map<std::string, Var>& all() const { return params_; }

  // strict also demands that `values` contains nothing else (training
  // resume); strict=false lets an inference-only store pick its subset.
  void copy_values_from(const std::map<std::string, Tensor>& values, bool strict = true);
  std::map<std::string, Tensor> values() const;

 private:
  std::map<std::string, Var> params_;
};

// --- layers ---------------------------------------------------------------------
// Constructors draw weights from the caller's RNG in a fixed documented order
// (weight row-major, then bias), bound 1/sqrt(fan_in).

struct Linear {
  Var w, b;
  Linear() = default;
  Linear(ParamStore& ps, const std::string& name, int in, int out, uint32_t party, Pcg32& rng,
         bool bias = true);
  Var operator()(const Var& x) const { return ad::linear(x, w, b); }
};

struct Conv1d {
  Var w, b;
  int stride = 1, dilation = 1, pad_l = 0, pad_r = 0, groups = 1;
  Conv1d() = default;
  Conv1d(ParamStore& ps, const std::string& name, int cin, int cout, int k, uint32_t party,
         Pcg32& rng, int stride = 1, int dilation = 1, int pad_l = -1, int pad_r = -1,
         int groups = 1, bool bias = true);  // pad -1 = centered "same" padding
  Var operator()(const Var& x) const {
    return ad::conv1d(x, w, b, stride, dilation, pad_l, pad_r, groups);
  }
};

struct ConvT1d {
  Var w, b;
  int stride = 1, pad = 0;
  ConvT1d() = default;
  ConvT1d(ParamStore& ps, const std::string& name, int cin, int cout, int k, uint32_t party,
          Pcg32& rng, int stride, int pad, bool bias = true);
  Var operator()(const Var& x) const { return ad::conv_transpose1d(x, w, b, stride, pad); }
};

struct Conv2d {
  Var w, b;
  int stride_h = 1, stride_w = 1, pad_h = 0, pad_w = 0;
  Conv2d() = default;
  Conv2d(ParamStore& ps, const std::string& name, int cin, int cout, int kh, int kw,
         uint32_t party, Pcg32& rng, int stride_h, int stride_w, int pad_h, int pad_w,
         bool bias = true);
  Var operator()(const Var& x) const {
    return ad::conv2d(x, w, b, stride_h, stride_w, pad_h, pad_w);
  }
};

struct LayerNorm {
  Var gamma, beta;
  LayerNorm() = default;
  LayerNorm(ParamStore& ps, const std::string& name, int dim, uint32_t party);
  Var operator()(const Var& x) const { return ad::layer_norm_lastdim(x, gamma, beta); }
};

// Periodic activation with a learned per-channel frequency, applied at 2x
// oversampling to keep its harmonics from folding back.
struct Snake {
  Var alpha;
  Snake() = default;
  Snake(ParamStore& ps, const std::string& name, int channels, uint32_t party);
  Var operator()(const Var& x) const;  // up2 -> snake -> down2
  Var raw(const Var& x) const { return ad::snake(x, alpha); }
};

// Fixed antialiasing halfband pair used by Snake (exposed for tests).
Var fir_upsample2(const Var& x);    // [B,C,T] -> [B,C,2T], DC gain 1
Var fir_downsample2(const Var& x);  // [B,C,T] -> [B,C,(T+1)/2]

Var swish(const Var& x);
Var glu_channels(const Var& x);  // [B,2C,T] -> [B,C,T], a * sigmoid(b)

// --- optimizer ------------------------------------------------------------------

struct AdamWConfig {
  double beta1 = 0.9;
  double beta2 = 0.998;
  double eps = 1e-8;
  double weight_decay = 0.0;
  double clip_grad_norm = 0.0;  // 0 = off; applied over the whole param group
};

class AdamW {
 public:
  AdamW(std::vector<Var> params, AdamWConfig cfg);

  // Applies one update using gradients from the most recent backward pass.
  // Parameters untouched by that pass see a zero gradient. The learning rate
  // is supplied per step so schedules stay in caller control.
  void step(double lr);

  int64_t steps_taken() const { return t_; }

  // Moment tensors for checkpointing, keyed "<prefix>.m.<param>" etc.
  std::map<std::string, Tensor> state(const std::string& prefix) const;
  void load_state(const std::string& prefix, const std::map<std::string, Tensor>& st);

 private:
  std::vector<Var> params_;
  std::vector<Tensor> m_, v_;
  AdamWConfig cfg_;
  int64_t t_ = 0;
};

// --- checkpoint io ----------------------------------------------------------------

void write_tensor_map(const std::string& path, const std::map<std::string, Tensor>& items);
std::map<std::string, Tensor> read_tensor_map(const std::string& path);

// --- differentiable signal front-ends ----------------------------------------------

// Magnitude STFT of x[B,L] -> [B, frames, bins]; framing identical to
// features::stft (reflect padding, centered Hann).
Var stft_mag(const Var& x, const StftConfig& cfg);

// Complex STFT packed as channels: x[B,L] -> [B, 2, bins, frames].
Var stft_complex(const Var& x, const StftConfig& cfg);

// Mel projection of stft_mag output: [B, frames, bins] -> [B, frames, mels]
// (linear domain; callers clamp and log).
Var mel_project(const Var& mag, std::shared_ptr<const MelFilterbank> fb);

// log-mel chain matching features::mel_spectrogram.
Var log_mel(const Var& x, const MelConfig& cfg);

// CQT packed as channels: x[B,L] -> [B, 2, bins, frames]; matches
// features::cqt on the forward pass.
Var cqt_complex(const Var& x, std::shared_ptr<const CqtKernels> kernels);

// --- excitation source ---------------------------------------------------------------
// Pure data ops (no gradient path): the pitch driving the oscillator is
// conditioning data, never a network output.

// Backward-looking linear upsampling: output sample t*factor+k interpolates
// from frame t-1 to frame t at fraction (k+1)/factor, so consecutive chunks
// join continuously when `prev` carries the last frame of the previous chunk.
// f0 [B,T] -> [B, T*factor]; prev per batch row (defaults to f0[:,0]).
Tensor lerp_upsample(const Tensor& f0, int factor, const std::vector<float>* prev = nullptr);

struct NsfConfig {
  double amplitude = 0.1;       // fundamental amplitude; harmonic h gets amplitude/h
  double noise_voiced = 0.003;
  double noise_unvoiced = 0.01;
  int max_harmonics = 16;
  double nyquist_guard = 0.95;  // keep h*f0 below guard * rate/2
};

// Streaming phase state, one slot per batch row.
struct OscChannelState {
  std::vector<double> phase;
  std::vector<float> prev_f0;
  std::vector<uint8_t> prev_voiced;
  void reset(int batch);
};

// Harmonic-plus-noise excitation at one rate. f0/voiced are frame-rate
// [B,T]; output [B,1,T*factor] at sample rate `rate` = frame_rate * factor.
// Voicing gates per frame (no interpolation); unvoiced regions are noise
// only. Updates `state` in place when provided.
Tensor nsf_source(const Tensor& f0, const Tensor& voiced, int factor, double rate,
                  const NsfConfig& cfg, OscChannelState* state, Pcg32& rng);

}  // namespace retone::nn
