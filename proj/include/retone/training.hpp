#pragma once

#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "retone/config.hpp"
#include "retone/corpus.hpp"
#include "retone/losses.hpp"

// Training loop. One step picks a scheme (reconstruction, manipulation
// round-trip, or double manipulation consistency), builds a batch of fixed
// length excerpts, and updates the three parties in a fixed order:
// discriminators on the detached fake, then generator against the updated
// discriminators, then the pitch head on detached latents. Everything is
// keyed off (seed, step), so a resumed run replays the exact step sequence.

namespace retone {

enum class Scheme { kCs, kIcc, kCcc };
const char* scheme_name(Scheme s);

struct Chunk {
  std::vector<float> audio;  // chunk_frames * hop_size samples
  PitchContour contour;      // chunk_frames frames, ground truth
};

// Loads every manifest utterance into memory and exposes non-overlapping
// fixed length excerpts. Draw order is a fresh permutation per epoch.
class ChunkDataset {
 public:
  ChunkDataset(const std::string& manifest_path, int hop_size, int chunk_frames,
               int sample_rate);

  size_t utterances() const { return utts_.size(); }
  int64_t total_chunks() const { return total_chunks_; }
  double total_audio_s() const;

  Chunk chunk(int64_t chunk_id) const;

  // Deterministic draw: global index -> (epoch, position) -> shuffled chunk.
  int64_t draw(uint64_t seed, int64_t global_index) const;

 private:
  struct Utt {
    AudioSegment audio;
    PitchContour contour;
    int64_t first_chunk = 0;
    int n_chunks = 0;
  };
  std::vector<Utt> utts_;
  int hop_size_ = 0;
  int chunk_frames_ = 0;
  int64_t total_chunks_ = 0;

  mutable uint64_t perm_key_ = ~0ull;  // seed^epoch cache tag
  mutable std::vector<int64_t> perm_;
};

struct StepResult {
  int64_t step = 0;
  Scheme scheme = Scheme::kCs;
  double lr = 0.0;
  LossReport report;
};

class Trainer {
 public:
  Trainer(const RunConfig& cfg, const std::string& manifest_path, const std::string& out_dir);

  // Overwrites params, optimizer state and the step counter from a
  // checkpoint directory written by save_checkpoint().
  void resume_from(const std::string& ckpt_dir);

  Scheme choose_scheme(int64_t step) const;
  StepResult train_step();

  // Full loop: metrics.tsv rows per step, checkpoints every
  // checkpoint_every steps and at the end (a 0-step run still writes its
  // initial state).
  void run();

  int64_t step() const { return step_; }
  double lr_at(int64_t step) const;
  const RunConfig& config() const { return cfg_; }
  Generator& generator() { return *gen_; }
  const Generator& generator() const { return *gen_; }
  const DiscriminatorEnsemble* discriminators() const { return disc_.get(); }
  nn::ParamStore& params() { return ps_; }
  const ChunkDataset& dataset() const { return data_; }

  std::string checkpoint_dir(int64_t step) const;
  void save_checkpoint() const;

  // Batch builders are public for tests; draws depend only on (seed, step).
  CsBatch make_cs_batch(int64_t step) const;
  IccBatch make_icc_batch(int64_t step) const;
  CccBatch make_ccc_batch(int64_t step) const;

 private:
  Chunk draw_chunk(int64_t step, int slot) const;
  void fill_base(CsBatch& b, const std::vector<Chunk>& chunks) const;
  void log_metrics(const StepResult& r);

  RunConfig cfg_;
  std::string out_dir_;
  ChunkDataset data_;
  nn::ParamStore ps_;
  std::unique_ptr<Generator> gen_;
  std::unique_ptr<DiscriminatorEnsemble> disc_;
  std::unique_ptr<nn::AdamW> opt_gen_, opt_pred_, opt_disc_;
  int64_t step_ = 0;
  std::ofstream metrics_;
};

// Finds the highest-numbered checkpoint directory under a run directory;
// empty string when there is none.
std::string latest_checkpoint(const std::string& run_dir);

struct AblationSpec {
  std::string name;
  RunConfig config;
};

// The standard ablation grid: the base config plus one variant per disabled
// ingredient (each cycle scheme, the leakage penalty).
std::vector<AblationSpec> ablation_configs(const RunConfig& base);

}  // namespace retone
