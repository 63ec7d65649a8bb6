#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powctl/rng.hpp"

namespace powctl {

enum class EnvKind : std::uint8_t { Terrestrial = 0, UavHighRise = 1 };

std::string to_string(EnvKind kind);
EnvKind env_kind_from_string(const std::string& s);

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Vec2&) const = default;
};

// Simulation parameters for one deployment. Defaults follow the terrestrial
// setup: K = 4 links in a 60 m disk, 1 W power budget, -173 dBm/Hz noise over
// a 10 MHz band, ITU-R UMi LOS with 3GPP-style pathloss exponents, Nakagami
// m = 10 LOS fading, and the high-rise air-to-ground parameter set for the
// UAV variant.
struct EnvConfig {
  int K = 4;
  double area_radius = 60.0;     // m
  double p_max = 1.0;            // W per transmitter
  double bandwidth_hz = 1e7;     // documentation only; noise_power is authoritative
  double noise_power = 5.011872336272715e-14;  // W; -173 dBm/Hz * 10 MHz
  EnvKind env_kind = EnvKind::Terrestrial;
  double mobility_step = 5.0;    // m per slot
  double d_min = 1.0;            // m, minimum tx-rx separation

  // terrestrial channel
  double alpha_los = 2.4;
  double alpha_nlos = 3.78;
  double d0 = 18.0;              // m
  double d1 = 36.0;              // m
  double shadow_sigma_los_db = 5.0;
  double shadow_sigma_nlos_db = 8.6;
  double nakagami_m = 10.0;

  // UAV high-rise channel
  double alt_min = 40.0;         // m
  double alt_max = 120.0;        // m
  double beam_width = 1.0471975511965976;  // pi/3
  double los_phi = 27.23;
  double los_psi = 0.08;
  double shadow_mu_los_db = 1.5;
  double shadow_mu_nlos_db = 29.0;
  double shadow_a_los = 7.37;
  double shadow_a_nlos = 37.08;
  double shadow_c_los = 0.03;
  double shadow_c_nlos = 0.03;

  void validate() const;  // throws std::invalid_argument

  static EnvConfig terrestrial() { return EnvConfig{}; }
  static EnvConfig uav_high_rise() {
    EnvConfig cfg;
    cfg.env_kind = EnvKind::UavHighRise;
    return cfg;
  }
};

struct Topology {
  std::vector<Vec2> tx;
  std::vector<Vec2> rx;
  std::vector<double> altitudes;  // per transmitter, UAV only (else empty)
  bool operator==(const Topology&) const = default;
};

// Link power gains, gains[j*K + k] = h_jk from transmitter j to receiver k.
struct ChannelMatrix {
  int K = 0;
  std::vector<double> gains;

  ChannelMatrix() = default;
  explicit ChannelMatrix(int k) : K(k), gains(static_cast<std::size_t>(k) * k, 0.0) {}
  double operator()(int j, int k) const { return gains[static_cast<std::size_t>(j) * K + k]; }
  double& operator()(int j, int k) { return gains[static_cast<std::size_t>(j) * K + k]; }
  bool operator==(const ChannelMatrix&) const = default;
};

// Per-component statistics of log10 gains over a dataset; used to standardize
// state vectors.
struct NormStats {
  std::vector<double> mean;
  std::vector<double> std;
  bool operator==(const NormStats&) const = default;
  void validate() const;
};

using StateVector = std::vector<double>;

Topology sample_topology(const EnvConfig& cfg, RandomStream& rng);
Topology step_mobility(const Topology& topo, const EnvConfig& cfg, RandomStream& rng);

// ITU-R UMi: p_L = min{D0/d, 1}(1 - e^{-d/D1}) + e^{-d/D1}
double los_probability_umi(double distance, const EnvConfig& cfg);

// High-rise air-to-ground: p_L = 1 / (1 + phi exp(-psi [theta_deg - phi])),
// theta the elevation angle; d2d = 0 counts as 90 degrees.
double los_probability_uav(double d2d, double altitude, const EnvConfig& cfg);

// Main-lobe gain G = 2.6 / omega^2 when the receiver falls inside the cone
// d2d < H / tan(pi/2 - omega/2), side-lobe gain G/40 otherwise (boundary is
// side-lobe).
double antenna_gain_uav(double d2d, double altitude, const EnvConfig& cfg);

ChannelMatrix sample_channel_matrix(const Topology& topo, const EnvConfig& cfg, RandomStream& rng);

// values[i] = (log10 h_i - mean_i) / std_i, row-major over (j, k)
StateVector encode_state(const ChannelMatrix& H, const NormStats& stats);
ChannelMatrix decode_state(const StateVector& state, const NormStats& stats, int K);

double planar_distance(const Vec2& a, const Vec2& b);

}  // namespace powctl
