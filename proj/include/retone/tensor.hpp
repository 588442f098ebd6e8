#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "retone/common.hpp"

// Small define-by-run autodiff tape over dense float tensors. Built for
// deterministic single-threaded training: plain loops, fixed reduction
// orders, no hidden global RNG. Shapes are explicit everywhere; ops validate
// eagerly and throw ArgumentError on mismatch.

namespace retone::ad {

struct Tensor {
  std::vector<int> shape;
  std::vector<float> v;

  Tensor() = default;
  Tensor(std::vector<int> s, std::vector<float> data) : shape(std::move(s)), v(std::move(data)) {}

  static int64_t count(const std::vector<int>& s) {
    int64_t n = 1;
    for (int d : s) n *= d;
    return n;
  }
  static Tensor zeros(std::vector<int> s) {
    Tensor t;
    t.shape = std::move(s);
    t.v.assign(count(t.shape), 0.0f);
    return t;
  }
  static Tensor full(std::vector<int> s, float val) {
    Tensor t = zeros(std::move(s));
    std::fill(t.v.begin(), t.v.end(), val);
    return t;
  }
  static Tensor scalar(float val) { return full({1}, val); }

  int64_t numel() const { return static_cast<int64_t>(v.size()); }
  int rank() const { return static_cast<int>(shape.size()); }
  int dim(int i) const { return shape[i < 0 ? shape.size() + i : i]; }
  float& operator[](int64_t i) { return v[i]; }
  float operator[](int64_t i) const { return v[i]; }
};

class Node;
using Var = std::shared_ptr<Node>;

// Party tags let one backward pass skip weight gradients that no optimizer
// will consume (e.g. discriminator weights during the generator update).
enum PartyBits : uint32_t {
  kPartyNone = 0,
  kPartyGen = 1u,
  kPartyPred = 2u,
  kPartyDisc = 4u,
  kPartyAll = 0xffffffffu,
};

class Node {
 public:
  Tensor val;
  Tensor grad;
  bool requires_grad = false;
  bool is_param = false;
  uint32_t party = kPartyNone;
  uint64_t grad_epoch = 0;
  uint64_t visit_epoch = 0;
  int topo_stage = 0;
  std::string name;
  std::vector<Var> parents;
  std::function<void(Node&)> backfn;
};

Var constant(Tensor t);
Var make_param(Tensor t, std::string name, uint32_t party);

// Generic op constructor: computes requires_grad from parents and honors the
// no-grad guard (dropping parents and backfn entirely inside it).
Var make_op(Tensor val, std::vector<Var> parents, std::function<void(Node&)> backfn);

bool grad_enabled();
struct NoGradGuard {
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;
};

uint64_t current_epoch();

// True when gradients should be pushed into `p` during this backward pass.
bool wants_grad(const Var& p);

// Materializes (and zeroes, once per backward epoch) the grad buffer.
float* grad_buf(const Var& p);

// Runs reverse-mode accumulation from a scalar root. party_mask selects
// which parameter parties receive weight gradients.
void backward(const Var& root, uint32_t party_mask = kPartyAll);

// Detached copy: same values, no history.
Var detach(const Var& x);

// --- elementwise ------------------------------------------------------------
Var add(const Var& a, const Var& b);
Var sub(const Var& a, const Var& b);
Var mul(const Var& a, const Var& b);
Var scale(const Var& x, float c);
Var add_scalar(const Var& x, float c);
Var neg(const Var& x);
Var leaky_relu(const Var& x, float slope = 0.1f);
Var sigmoid(const Var& x);
Var tanh_(const Var& x);
Var exp_(const Var& x);
Var log_(const Var& x);
Var abs_(const Var& x);
Var clamp_min(const Var& x, float floor);
Var sin_(const Var& x);
Var pow2(const Var& x);

// --- reductions -------------------------------------------------------------
Var sum_all(const Var& x);
Var mean_all(const Var& x);
Var mean_abs_diff(const Var& a, const Var& b);          // mean |a - b|
Var mean_sq_to(const Var& x, float target);             // mean (x - target)^2
Var bce_mean(const Var& yhat, const Tensor& y);         // probs clamped to [1e-7, 1-1e-7]
// bce averaged over mask-selected rows (last dim = one row); all rows masked
// out yields a constant 0.
Var bce_mean_masked(const Var& yhat, const Tensor& y, const Tensor& row_mask);
Var mean_row_variance(const Var& x);                    // rows = last dim, population var

// --- shape ------------------------------------------------------------------
Var reshape(const Var& x, std::vector<int> shape);
Var transpose_last2(const Var& x);
Var slice_channels(const Var& x, int c0, int c1);       // [B, C, ...] channel slice
Var slice_lastdim(const Var& x, int a, int b);
Var concat_channels(const std::vector<Var>& xs);        // along dim 1
Var concat_lastdim(const std::vector<Var>& xs);
Var pad1d(const Var& x, int left, int right);           // zero pad, last dim
Var avg_pool1d(const Var& x, int k, int stride);        // ceil mode, valid-count averaging
Var cumsum_lastdim(const Var& x);

// --- linear algebra -----------------------------------------------------------
Var matmul(const Var& a, const Var& b);                 // [M,K]x[K,N]
Var linear(const Var& x, const Var& w, const Var& b);   // x[...,D], w[D,E], b[E] (b may be null)
Var bmm(const Var& a, const Var& b);                    // [B,M,K]x[B,K,N]
Var softmax_lastdim(const Var& x);

// --- convolutions -------------------------------------------------------------
// x[B,Cin,L], w[Cout,Cin/groups,K]; zero padding (pad_l, pad_r).
Var conv1d(const Var& x, const Var& w, const Var& b, int stride = 1, int dilation = 1,
           int pad_l = 0, int pad_r = 0, int groups = 1);
// x[B,Cin,L], w[Cin,Cout,K]; output length (L-1)*stride + K - 2*pad.
Var conv_transpose1d(const Var& x, const Var& w, const Var& b, int stride, int pad);
// x[B,Cin,H,W], w[Cout,Cin,Kh,Kw].
Var conv2d(const Var& x, const Var& w, const Var& b, int stride_h, int stride_w, int pad_h,
           int pad_w);

// --- normalization / activations with parameters ------------------------------
Var layer_norm_lastdim(const Var& x, const Var& gamma, const Var& beta, float eps = 1e-5f);
// x[B,C,T], alpha[C]: x + sin^2(alpha x) / (alpha + 1e-9)
Var snake(const Var& x, const Var& alpha);

}  // namespace retone::ad
