#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "powctl/dataset.hpp"
#include "powctl/nn.hpp"

namespace powctl {

struct BcqHyper {
  double gamma = 0.1;        // discount
  double tau = 0.005;        // target update rate
  double lambda = 0.75;      // min/max mixing weight in the target
  int minibatch = 128;       // N
  int n_candidates = 10;     // n
  int latent_samples = 1;    // L
  double phi_fraction = 0.05;  // perturbation bound as a fraction of p_max
  long total_steps = 10000;  // T
  double lr_vae = 1e-3;
  double lr_critic = 1e-3;
  double lr_actor = 1e-4;
  double latent_clip = 0.5;  // decode-time clipping of z ~ N(0, I)

  void validate() const;
  bool operator==(const BcqHyper&) const = default;
};

// Encoder/decoder of the conditional VAE, perturbation net (+ target) and the
// twin critics (+ targets). Layer widths follow the fixed 750/750 generative
// and 400/300 value architectures; input dims derive from K.
struct BcqNetworks {
  nn::DenseNet encoder;          // (S+B) -> 750 -> 750 -> 2C, heads (mu | log sigma)
  nn::DenseNet decoder;          // (C+S) -> 750 -> 750 -> B, squashed to [0, p_max]
  nn::DenseNet perturb;          // (S+B) -> 400 -> 300 -> B, squashed to [-phi, phi]
  nn::DenseNet perturb_target;
  nn::DenseNet q1, q2;           // (S+B) -> 400 -> 300 -> 1
  nn::DenseNet q1_target, q2_target;

  static BcqNetworks make(int K, double p_max, double phi, RandomStream& rng);

  int state_dim() const { return K * K; }
  int action_dim() const { return K; }
  int latent_dim() const { return 2 * K; }
  int K = 0;
  bool operator==(const BcqNetworks&) const = default;
};

// Deployment bundle: trained networks plus everything needed to turn a raw
// channel matrix into an action.
struct Policy {
  int K = 0;
  double p_max = 1.0;
  double phi = 0.05;
  BcqHyper hyper;
  NormStats stats;
  BcqNetworks nets;

  std::vector<double> select_action(const StateVector& state, RandomStream& rng) const;
  bool operator==(const Policy&) const = default;
};

void save_policy(const Policy& p, const std::string& path);
Policy load_policy(const std::string& path);

struct TrainLogRow {
  long step = 0;
  double recon_loss = 0.0;   // mean over the window
  double kl_diag = 0.0;      // closed-form Gaussian KL, logged only
  double critic_loss = 0.0;
  double actor_q = 0.0;
  bool operator==(const TrainLogRow&) const = default;
};

using TrainLog = std::vector<TrainLogRow>;

// Called after `every` gradient steps (and at the final step); receives the
// current policy snapshot.
struct EvalHook {
  long every = 0;  // 0 disables
  std::function<void(long step, const Policy&)> fn;
};

class BcqLearner {
 public:
  BcqLearner(int K, double p_max, const BcqHyper& hyper, std::uint64_t seed);

  // One optimizer step on the VAE under the pure reconstruction loss
  // mean ||D(s, mu + sigma*y) - a||^2; returns that loss.
  double vae_step(const Minibatch& batch, RandomStream& rng);

  // n candidate actions per state row: z ~ N(0, I) clipped to
  // [-latent_clip, latent_clip], decoded on [z | s]. Output is
  // (rows * n) x B, candidates of row i at rows [i*n, (i+1)*n).
  Mat decode_actions(const Mat& states, int n, RandomStream& rng) const;

  // clamp(a + zeta(s, a), 0, p_max) with the given perturbation net
  Mat perturb_actions(const nn::DenseNet& zeta, const Mat& states, const Mat& actions) const;

  // y = r + gamma * max_i [lambda min_j Q'_j + (1 - lambda) max_j Q'_j] with
  // candidates decoded from s' and perturbed by the target net.
  std::vector<double> compute_target(const Minibatch& batch, RandomStream& rng) const;

  // Sum-squared-error step on both critics towards y; returns the loss.
  double critic_step(const Minibatch& batch, const std::vector<double>& y);

  // Ascends mean Q1(s, a + zeta(s, a)) in the perturbation parameters only;
  // returns the pre-step mean Q1.
  double actor_step(const Minibatch& batch, RandomStream& rng);

  // Full training loop per the modified BCQ schedule; bit-deterministic for a
  // fixed seed.
  TrainLog train(const Dataset& ds, const EvalHook& hook = {});

  Policy policy() const;
  const BcqNetworks& networks() const { return nets_; }
  BcqNetworks& networks() { return nets_; }
  double last_kl() const { return last_kl_; }
  const BcqHyper& hyper() const { return hyper_; }
  double phi() const { return phi_; }

 private:
  int K_;
  double p_max_;
  double phi_;
  BcqHyper hyper_;
  std::uint64_t seed_;
  RandomStream stream_;
  BcqNetworks nets_;
  nn::AdamState opt_encoder_, opt_decoder_, opt_perturb_, opt_q1_, opt_q2_;
  double last_kl_ = 0.0;
};

}  // namespace powctl
