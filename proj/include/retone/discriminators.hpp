#pragma once

#include <vector>

#include "retone/nn.hpp"

// Four discriminator families over generated audio, each decomposed into
// sub-discriminators: period resamplings of the raw waveform, pooled
// multi-scale waveforms, complex STFTs at several resolutions, and per-octave
// sub-bands of a complex CQT (one shared trunk applied to every octave).
// Every sub-discriminator yields a logit map plus its intermediate feature
// maps for feature matching.

namespace retone {

struct DiscriminatorConfig {
  int sample_rate = 44100;

  bool enable_mpd = true;
  std::vector<int> mpd_periods = {2, 3, 5, 7, 11};
  std::vector<int> mpd_channels = {8, 16, 32, 64};

  bool enable_msd = true;
  int msd_scales = 3;
  std::vector<int> msd_channels = {16, 32, 64, 64};
  std::vector<int> msd_strides = {1, 2, 2, 4};

  bool enable_stft = true;
  std::vector<int> stft_ffts = {2048, 1024, 512, 256, 128};
  std::vector<int> stftd_channels = {8, 16, 32, 32};

  bool enable_cqt = true;
  CqtConfig cqt;
  std::vector<int> cqtd_channels = {8, 16, 32};

  void validate() const;
  int total_subdiscs() const;
};

struct SubDiscOutput {
  ad::Var logits;                 // final conv map
  std::vector<ad::Var> features;  // every layer activation, final map included
};

class DiscriminatorEnsemble {
 public:
  DiscriminatorEnsemble(const DiscriminatorConfig& cfg, nn::ParamStore& ps, uint64_t seed);

  const DiscriminatorConfig& config() const { return cfg_; }
  int count() const { return cfg_.total_subdiscs(); }

  // audio [B,1,L]; sub-discriminators come back in a fixed order
  // (periods, scales, fft sizes, octaves low to high).
  std::vector<SubDiscOutput> forward(const ad::Var& audio) const;

 private:
  DiscriminatorConfig cfg_;

  struct PeriodDisc {
    int period = 0;
    std::vector<nn::Conv2d> convs;
    nn::Conv2d post;
  };
  struct ScaleDisc {
    int pools = 0;
    std::vector<nn::Conv1d> convs;
    nn::Conv1d post;
  };
  struct SpectrumDisc {
    StftConfig stft;
    std::vector<nn::Conv2d> convs;
    nn::Conv2d post;
  };
  std::vector<PeriodDisc> mpd_;
  std::vector<ScaleDisc> msd_;
  std::vector<SpectrumDisc> stftd_;
  std::vector<nn::Conv2d> cqt_convs_;  // shared across octaves
  nn::Conv2d cqt_post_;
  std::shared_ptr<const CqtKernels> cqt_kernels_;

  SubDiscOutput run_period(const PeriodDisc& d, const ad::Var& audio) const;
  SubDiscOutput run_scale(const ScaleDisc& d, const ad::Var& audio) const;
  SubDiscOutput run_spectrum(const SpectrumDisc& d, const ad::Var& flat) const;
  SubDiscOutput run_cqt_octave(const ad::Var& band) const;
};

}  // namespace retone
