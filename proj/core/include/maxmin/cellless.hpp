#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "maxmin/interference.hpp"
#include "maxmin/norms.hpp"

namespace maxmin {

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Log-distance pathloss, dB at distance d meters:
/// ref_loss_db + 10 * exponent * log10(max(d, 1 m) / 1 m).
struct PathlossModel {
  double ref_loss_db = 30.5;
  double exponent = 3.76;
};

struct NetworkConfig {
  enum class ApLayout { RegularGrid, Explicit };
  enum class UserLayout { UniformRandom, Explicit };

  int num_aps = 16;          // L
  int antennas_per_ap = 2;   // N
  int num_users = 16;        // K
  double area_side_m = 1000.0;
  int cluster_size = 4;      // APs serving each user
  ApLayout ap_layout = ApLayout::RegularGrid;
  std::vector<Eigen::Vector2d> ap_positions;  // Explicit layout only
  UserLayout user_layout = UserLayout::UniformRandom;
  std::vector<Eigen::Vector2d> user_positions;  // Explicit layout only
  PathlossModel pathloss;
  double noise_power_dbm = -94.0;
  double p_max_dbm = 20.0;  // per-user budget of the reference experiment
  int mc_draws = 20000;
  std::uint64_t rng_seed = 1;
  /// Per-antenna variance of additive estimation noise on the local CSI,
  /// relative to the noise power. Zero means perfect local CSI.
  double csi_noise_var = 0.0;
};

struct Network {
  std::vector<Eigen::Vector2d> ap_positions;
  std::vector<Eigen::Vector2d> user_positions;
  /// L x K large-scale channel gains, linear, normalized by the noise power.
  Mat beta;
  /// Serving cluster D_k per user: the cluster_size APs with largest beta,
  /// in ascending AP index order.
  std::vector<std::vector<Index>> serving_sets;
};

/// Places APs (RegularGrid needs a square AP count), draws or copies user
/// positions, and computes noise-normalized gains and serving clusters.
Network generate_network(const NetworkConfig& cfg);

/// Monte-Carlo channel moments seen by user k through its cluster, with
/// per-AP maximum-ratio combiners on local CSI. The second combining stage
/// (coefficients across the cluster) is optimized in closed form inside
/// eval_fk, so these moments fully determine the interference function.
struct UserMoments {
  Index user = 0;
  std::vector<Index> serving_aps;
  CVec b;                  // E[g_kk], one entry per serving AP
  std::vector<CMat> cross;  // G_kj = E[g_kj g_kj^H], one matrix per user j
  Vec combiner_power;      // E[||v_lk||^2] per serving AP (diagonal of S_k)
};

/// Channel source for one draw: h for (draw, user, ap), an N-vector.
/// Exposed so tests can inject deterministic channels.
using ChannelSampler = std::function<CVec(int draw, Index user, Index ap)>;

std::vector<UserMoments> estimate_moments(const Network& network,
                                          const NetworkConfig& cfg);
std::vector<UserMoments> estimate_moments(const Network& network,
                                          const NetworkConfig& cfg,
                                          const ChannelSampler& channels);

/// Interference value of user k at power p: the infimum over cluster
/// combining coefficients of (noise + interference) / signal quality,
/// evaluated in closed form as 1 / (b^H Psi(p)^{-1} b) with
/// Psi(p) = sum_j p_j G_kj - p_k b b^H + S_k. Psi is Hermitian positive
/// definite for every p >= 0; a numerically failed factorization raises
/// EvalError with the condition estimate.
double eval_fk(const UserMoments& moments_k, const Vec& p);

class CellLessModel final : public InterferenceModel {
 public:
  explicit CellLessModel(std::vector<UserMoments> moments);

  Index dim() const override { return static_cast<Index>(moments_.size()); }
  Vec eval(const Vec& p) const override;

  const std::vector<UserMoments>& moments() const { return moments_; }

 private:
  std::vector<UserMoments> moments_;
};

/// Ergodic achievable rates log2(1 + u_k(p)) in bits/s/Hz.
Vec eval_rates(const CellLessModel& model, const Vec& p);

enum class PolicyKind { FullPower, RandomBox, Fractional };

struct PowerPolicy {
  PolicyKind kind = PolicyKind::FullPower;
  std::uint64_t seed = 0;    // RandomBox draws
  double exponent = -1.0;    // Fractional: p_k proportional to
                             // (sum of cluster gains)^exponent
};

PolicyKind parse_policy_kind(const std::string& name);
std::string policy_kind_name(PolicyKind kind);

/// Builds the raw policy vector and rescales it so that ||p|| equals the
/// budget exactly.
Vec apply_policy(const PowerPolicy& policy, const Network& network,
                 const MonotoneNorm& norm);

struct CellLessInstance {
  Network network;
  std::shared_ptr<CellLessModel> model;
};

CellLessInstance build_cellless_instance(const NetworkConfig& cfg);

}  // namespace maxmin
