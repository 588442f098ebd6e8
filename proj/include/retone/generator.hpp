#pragma once

#include <vector>

#include "retone/nn.hpp"
#include "retone/pitch.hpp"

// Pitch-conditioned waveform autoencoder. The encoder compresses audio to a
// frame-rate latent; a pitch head tries to read pitch back out of that latent
// (its bin probabilities feed both the pitch loss and, adversarially, the
// leakage penalty); the decoder reconstructs audio from the latent plus a
// harmonic excitation ladder driven by an externally supplied pitch contour.
// Pitch manipulation is therefore just decoding with a different contour.

namespace retone {

struct GeneratorConfig {
  int sample_rate = 44100;
  int hop_size = 512;
  int latent_dim = 128;

  // encoder: stride product must equal hop_size
  std::vector<int> enc_strides = {2, 4, 8, 8};
  int enc_base_channels = 16;  // doubles at every stride stage
  int enc_kernel = 7;

  // pitch head: conformer over the latent sequence
  int pred_dim = 128;
  int pred_heads = 4;
  int pred_blocks = 2;
  int pred_conv_kernel = 7;
  int pred_ffn_mult = 2;
  int n_pitch_bins = 360;

  // decoder: upsample product must equal hop_size
  std::vector<int> dec_upsample = {8, 8, 2, 2, 2};
  int dec_base_channels = 256;  // halves at every stage, floored at 4
  int dec_kernel = 7;
  int exc_kernel = 7;
  std::vector<int> res_dilations = {1, 3, 5};

  nn::NsfConfig nsf;

  double frame_rate() const { return static_cast<double>(sample_rate) / hop_size; }
  int dec_channels(int stage_out) const;  // channels after decoder stage index
  void validate() const;
};

// Streaming phase/boundary state for the excitation ladder, one slot per
// decoder stage that receives an excitation.
struct OscState {
  std::vector<nn::OscChannelState> stages;
};

struct GeneratorOutput {
  ad::Var audio;        // [B, 1, L]
  ad::Var latent;       // [B, latent_dim, T]
  ad::Var pitch_probs;  // [B, T, n_pitch_bins], sigmoid activations
};

class Generator {
 public:
  Generator(const GeneratorConfig& cfg, nn::ParamStore& ps, uint64_t seed);

  const GeneratorConfig& config() const { return cfg_; }

  // Stages (0-based decoder stage index) that receive an excitation input,
  // with their sample rates and frame upsampling factors.
  const std::vector<int>& excited_stages() const { return exc_stages_; }
  const std::vector<double>& excitation_rates() const { return exc_rates_; }
  const std::vector<int>& excitation_factors() const { return exc_factors_; }

  OscState make_state(int batch) const;

  // audio [B, L] with L a multiple of hop_size.
  ad::Var encode(const ad::Var& audio) const;

  // latent [B, latent_dim, T] -> [B, T, n_pitch_bins].
  ad::Var predict_pitch(const ad::Var& latent) const;

  // f0/voiced are frame-rate tensors [B, T] matching the latent length.
  // state may be null (fresh phases); rng drives the excitation noise.
  ad::Var decode(const ad::Var& latent, const ad::Tensor& f0, const ad::Tensor& voiced,
                 OscState* state, Pcg32& rng) const;

  GeneratorOutput forward(const ad::Var& audio, const ad::Tensor& f0, const ad::Tensor& voiced,
                          OscState* state, Pcg32& rng) const;

  // Whole-utterance no-grad synthesis: encodes `audio`, decodes with
  // `contour`. Audio is zero-padded to a hop multiple internally; the contour
  // is trimmed or edge-extended to match. Returns audio of the input length.
  AudioSegment synthesize(const AudioSegment& audio, const PitchContour& contour,
                          uint64_t noise_seed) const;

 private:
  GeneratorConfig cfg_;

  // encoder
  nn::Conv1d enc_in_;
  struct EncStage {
    nn::Conv1d res_a, res_b;
    nn::Conv1d down;
  };
  std::vector<EncStage> enc_stages_;
  nn::Conv1d enc_post_a_, enc_post_b_;
  nn::Conv1d enc_out_;

  // pitch head
  nn::Conv1d pred_stem_;
  struct ConformerBlock {
    nn::LayerNorm ln_ff1, ln_att, ln_conv, ln_ff2, ln_out;
    nn::Linear ff1_a, ff1_b, ff2_a, ff2_b;
    nn::Linear att_qkv, att_out;
    nn::Conv1d conv_pre, conv_dw, conv_post;
    nn::LayerNorm conv_ln;
  };
  std::vector<ConformerBlock> pred_blocks_;
  nn::LayerNorm pred_ln_out_;
  nn::Linear pred_head_;

  // decoder
  nn::Conv1d dec_in_;
  struct ResLayer {
    nn::Snake act;
    nn::Conv1d conv;
  };
  struct DecStage {
    nn::Snake pre_act;
    nn::ConvT1d up;
    bool has_exc = false;
    nn::Conv1d exc;
    std::vector<ResLayer> res;
  };
  std::vector<DecStage> dec_stages_;
  nn::Snake dec_out_act_;
  nn::Conv1d dec_out_;

  std::vector<int> exc_stages_;
  std::vector<double> exc_rates_;
  std::vector<int> exc_factors_;

  ad::Var conformer_forward(const ConformerBlock& blk, const ad::Var& x) const;
};

}  // namespace retone
