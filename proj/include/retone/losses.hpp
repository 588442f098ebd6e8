#pragma once

#include <map>
#include <string>

#include "retone/discriminators.hpp"
#include "retone/generator.hpp"

// Loss assembly for the three training schemes. Atomic losses are exposed for
// testing; the scheme pipelines (which decode feeds which encode) live here so
// the trainer and the pure loss evaluation cannot drift apart.
//
// Scheme shapes:
//   copy-synthesis:  x -> z -> x_hat (same pitch); adversarial + mel + leak.
//   inversion cycle: x -> z -> x_m (manipulated pitch) -> z_m -> x_hat (pitch
//                    restored); adversarial + mel against x, leak on both
//                    latents, pitch loss on both.
//   composition cycle: x -> z; one-step x_b1 via target contour; two-step
//                    x_a (intermediate) -> z_a -> x_b2; mel(x_b1, x_b2);
//                    leak/pitch on all three derived latents; no
//                    discriminator (no ground-truth audio exists).
//
// Reports use a fixed vocabulary: leak, mel, adv_g, adv_d, featmatch,
// pitch_bce plus gen_total / pred_total / disc_total, where
//   gen_total  = leak_weight*leak + mel_weight*mel + adv_g + feat_weight*featmatch
//   pred_total = pitch_bce
//   disc_total = adv_d (absent for the composition cycle).
// Totals in the report are recomputed from the components in double, so they
// reconstruct exactly.

namespace retone {

using ad::Tensor;
using ad::Var;

struct SchemeWeights {
  float mel_weight = 15.0f;
  float feat_weight = 2.0f;
  float leak_weight = 1.0f;
  bool use_leak = true;  // adversarial representation learning on/off
};

struct LossReport {
  std::string scheme;
  std::map<std::string, double> values;
  double get(const std::string& key) const;
  bool has(const std::string& key) const { return values.count(key) != 0; }
};

// --- atomic losses -----------------------------------------------------------

double leak_scale(int n_bins);  // n ^ (2 / (n - 1))

// probs/targets [B,T,bins], voiced [B,T]; binary cross entropy averaged over
// bins and voiced frames only. No voiced frame -> 0 by convention.
Var pitch_bce(const Var& probs, const Tensor& targets, const Tensor& voiced);

// Scaled mean per-frame variance of the predicted pitch vector. Pushing it
// down flattens the prediction, i.e. removes recoverable pitch.
Var leak_loss(const Var& probs, int n_bins);

// Mean over the fixed resolution ladder of mean L1 between log-mels.
// a/b are audio [B,1,L] or [B,L].
Var multi_scale_mel_l1(const Var& a, const Var& b, int sample_rate);

// LSGAN terms, summed over sub-discriminators.
Var disc_adversarial_loss(const std::vector<SubDiscOutput>& real,
                          const std::vector<SubDiscOutput>& fake);
Var gen_adversarial_loss(const std::vector<SubDiscOutput>& fake);
Var feature_matching_loss(const std::vector<SubDiscOutput>& real,
                          const std::vector<SubDiscOutput>& fake);

// Double-precision scalar references for the same definitions. The autodiff
// versions above store float32; these carry the full-precision values the
// closed-form checks pin down.
double leak_loss_value(const Tensor& probs, int n_bins);
double pitch_bce_value(const Tensor& probs, const Tensor& targets, const Tensor& voiced);
double multi_scale_mel_value(const Tensor& a, const Tensor& b, int sample_rate);

// --- scheme batches ------------------------------------------------------------

struct CsBatch {
  Tensor audio;          // [B, L], L = T * hop
  Tensor f0, voiced;     // [B, T]
  Tensor pitch_targets;  // [B, T, bins]
};

struct IccBatch {
  CsBatch base;
  Tensor f0_m, voiced_m, targets_m;  // manipulated contour
};

struct CccBatch {
  CsBatch base;
  Tensor f0_a, voiced_a, targets_a;  // intermediate contour
  Tensor f0_b, voiced_b, targets_b;  // target contour
};

// --- scheme pipelines (forward graphs, no losses) --------------------------------

struct CsGraph {
  Var latent, probs, fake;
};
struct IccGraph {
  Var latent0, probs0;    // encoder on the input
  Var x_m;                // manipulated-pitch audio
  Var latent_m, probs_m;  // encoder on the manipulated audio
  Var fake;               // pitch restored, compared against the input
};
struct CccGraph {
  Var latent0;
  Var x_b1, latent_b1, probs_b1;  // one step to the target contour
  Var x_a, latent_a, probs_a;     // intermediate
  Var x_b2, latent_b2, probs_b2;  // two steps to the target contour
};

// detach_cycle cuts the gradient between cycle stages (second encode sees the
// intermediate audio as data). Default keeps the full differentiable cycle.
CsGraph run_cs(const Generator& gen, const CsBatch& batch, Pcg32& rng);
IccGraph run_icc(const Generator& gen, const IccBatch& batch, Pcg32& rng,
                 bool detach_cycle = false);
CccGraph run_ccc(const Generator& gen, const CccBatch& batch, Pcg32& rng,
                 bool detach_cycle = false);

// --- loss assembly -----------------------------------------------------------------

// Generator-side adversarial package: runs disc on the real audio without
// gradient and on the fake with gradient, returns sum_m[L_adv + w*L_feat].
Var gen_adv_package(const DiscriminatorEnsemble& disc, const Var& real, const Var& fake,
                    float feat_weight, LossReport* rep);

// Discriminator update loss on a detached fake.
Var disc_update_loss(const DiscriminatorEnsemble& disc, const Var& real, const Var& fake_detached,
                     LossReport* rep);

// Recomputes the documented totals from the component entries (double
// arithmetic). with_disc_total controls whether disc_total is written.
void finalize_report(LossReport& rep, const SchemeWeights& w, bool with_disc_total);

// Full per-scheme losses in one pass (no optimizer interaction, discriminator
// evaluated once with current weights). Used by tests and validation.
struct SchemeLosses {
  Var gen_total;
  Var pred_total;
  Var disc_total;  // null when the scheme trains no discriminator
  LossReport report;
};

SchemeLosses compute_cs_losses(const Generator& gen, const DiscriminatorEnsemble* disc,
                               const CsBatch& batch, const SchemeWeights& w, Pcg32& rng);
SchemeLosses compute_icc_losses(const Generator& gen, const DiscriminatorEnsemble* disc,
                                const IccBatch& batch, const SchemeWeights& w, Pcg32& rng,
                                bool detach_cycle = false);
SchemeLosses compute_ccc_losses(const Generator& gen, const CccBatch& batch,
                                const SchemeWeights& w, Pcg32& rng, bool detach_cycle = false);

// Pitch-predictor losses on detached latents (the predictor never shapes the
// encoder through its own update).
Var pred_loss_cs(const Generator& gen, const CsGraph& g, const CsBatch& b, LossReport* rep);
Var pred_loss_icc(const Generator& gen, const IccGraph& g, const IccBatch& b, LossReport* rep);
Var pred_loss_ccc(const Generator& gen, const CccGraph& g, const CccBatch& b, LossReport* rep);

// Generator-side non-adversarial terms shared by the staged trainer and the
// compute_* helpers. Returns leak + mel contributions for the scheme.
Var gen_core_loss_cs(const CsGraph& g, const CsBatch& b, const SchemeWeights& w, int sample_rate,
                     int n_bins, LossReport* rep);
Var gen_core_loss_icc(const IccGraph& g, const IccBatch& b, const SchemeWeights& w,
                      int sample_rate, int n_bins, LossReport* rep);
Var gen_core_loss_ccc(const CccGraph& g, const CccBatch& b, const SchemeWeights& w,
                      int sample_rate, int n_bins, LossReport* rep);

}  // namespace retone
