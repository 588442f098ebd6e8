#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "retone/discriminators.hpp"
#include "retone/generator.hpp"

// Flat INI-ish run configuration: [section] headers, `key = value` lines,
// `#`/`;` comments. Every field can also be overridden from the command line
// as `section.key=value`. Unknown keys are errors so typos fail loudly.

namespace retone {

struct TrainOptions {
  uint64_t seed = 1;
  int batch_size = 1;
  int chunk_frames = 64;  // training excerpt length in latent frames
  int total_steps = 1000;
  int checkpoint_every = 500;
  int log_every = 10;

  double lr = 1e-4;
  double lr_decay = 0.999996;  // per optimizer step
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.998;
  double grad_clip = 0.0;  // 0 disables clipping

  double mel_weight = 15.0;
  double feat_weight = 2.0;
  double leak_weight = 1.0;

  // scheme mixture; renormalized over the enabled subset
  double p_cs = 0.5;
  double p_icc = 0.25;
  double p_ccc = 0.25;
  bool enable_cs = true;
  bool enable_icc = true;
  bool enable_ccc = true;
  bool enable_arl = true;   // leakage penalty on the pitch head
  bool enable_disc = true;  // adversarial + feature matching terms
  bool detach_cycle = false;  // treat generated audio as data when re-encoding

  ManipulationRanges manip;
};

struct RunConfig {
  GeneratorConfig gen;
  DiscriminatorConfig disc;
  TrainOptions train;

  void validate() const;  // cross-field checks on top of member validate()
};

// `key` is "section.name"; throws ConfigError on unknown keys or bad values.
void apply_kv(RunConfig& rc, const std::string& key, const std::string& value);

// Copies fields other sections derive from [generator] (sample rate, hop)
// into the discriminator/CQT configs. Call after a batch of apply_kv edits.
void sync_derived(RunConfig& rc);

// All known keys in serialization order.
std::vector<std::string> config_keys();

std::string serialize_config(const RunConfig& rc);
RunConfig parse_config_text(const std::string& text);

RunConfig load_config_file(const std::string& path);
void save_config_file(const RunConfig& rc, const std::string& path);

}  // namespace retone
