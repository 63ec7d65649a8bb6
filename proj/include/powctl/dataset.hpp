#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powctl/env.hpp"
#include "powctl/matrix.hpp"
#include "powctl/rates.hpp"
#include "powctl/rng.hpp"
#include "powctl/wmmse.hpp"

namespace powctl {

enum class BehaviorLabel : std::uint8_t { Wmmse = 0, Random = 1 };

// One logged slot: standardized state, powers, reward, next state.
struct Transition {
  std::vector<double> s;       // K^2
  std::vector<double> a;       // K, watts
  double r = 0.0;
  std::vector<double> s_next;  // K^2
  BehaviorLabel behavior = BehaviorLabel::Wmmse;
  bool operator==(const Transition&) const = default;
};

struct DatasetMeta {
  int K = 0;
  EnvKind env_kind = EnvKind::Terrestrial;
  double mix = 1.0;            // fraction of WMMSE-labelled records
  NormStats stats;
  Objective objective;
  double p_max = 1.0;
  double noise_power = 0.0;
  std::uint64_t seed = 0;
  bool operator==(const DatasetMeta&) const = default;
};

struct Dataset {
  DatasetMeta meta;
  std::vector<Transition> records;
  bool operator==(const Dataset&) const = default;
};

struct Minibatch {
  Mat s;       // N x K^2
  Mat a;       // N x K
  Mat s_next;  // N x K^2
  std::vector<double> r;
  int size() const { return s.rows; }
};

// Simulates `size` slots of the environment under a WMMSE/random behavior mix
// with exactly floor(mix * size) WMMSE-labelled records on a shuffled
// schedule. Rewards are Shannon sum rates; states are standardized with
// statistics computed over the collected gains.
Dataset collect(const EnvConfig& cfg, double mix, long size, std::uint64_t seed,
                const WmmseConfig& wmmse_cfg = {});

// Recomputes every reward under `obj` from the stored (s, a) pair.
Dataset relabel_rewards(const Dataset& ds, const Objective& obj);

// Binary layout (little-endian): magic "BPD1", u32 version, u32 K, u64 count,
// u8 objective tag, f64 mix, f64 p_max, f64 sigma2, 2*K^2 f64 norm stats,
// then per record: K^2 f64 s, K f64 a, f64 r, K^2 f64 s_next, u8 behavior.
// A JSON sidecar at <path>.json mirrors the metadata.
void save(const Dataset& ds, const std::string& path);
Dataset load(const std::string& path);

// N records uniformly with replacement.
Minibatch sample_minibatch(const Dataset& ds, int n, RandomStream& rng);

}  // namespace powctl
