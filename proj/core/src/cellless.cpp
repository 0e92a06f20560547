#include "maxmin/cellless.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "maxmin/rng.hpp"

namespace maxmin {

namespace {

double dbm_to_watts_local(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

void validate_config(const NetworkConfig& cfg) {
  require(cfg.num_aps >= 1, "network: L must be >= 1");
  require(cfg.antennas_per_ap >= 1, "network: N must be >= 1");
  require(cfg.num_users >= 1, "network: K must be >= 1");
  require(cfg.area_side_m > 0.0, "network: area side must be positive");
  require(cfg.cluster_size >= 1 && cfg.cluster_size <= cfg.num_aps,
          "network: cluster_size must lie in [1, L]");
  require(cfg.mc_draws >= 100, "network: mc_draws must be >= 100");
  require(cfg.csi_noise_var >= 0.0, "network: csi_noise_var must be >= 0");
}

}  // namespace

Network generate_network(const NetworkConfig& cfg) {
  validate_config(cfg);
  Network net;

  if (cfg.ap_layout == NetworkConfig::ApLayout::RegularGrid) {
    const int side = static_cast<int>(std::lround(std::sqrt(double(cfg.num_aps))));
    require(side * side == cfg.num_aps,
            "network: RegularGrid needs a square AP count");
    const double pitch = cfg.area_side_m / side;
    net.ap_positions.reserve(static_cast<std::size_t>(cfg.num_aps));
    for (int row = 0; row < side; ++row) {
      for (int col = 0; col < side; ++col) {
        net.ap_positions.emplace_back((col + 0.5) * pitch, (row + 0.5) * pitch);
      }
    }
  } else {
    require(static_cast<int>(cfg.ap_positions.size()) == cfg.num_aps,
            "network: Explicit AP layout needs exactly L positions");
    net.ap_positions = cfg.ap_positions;
  }

  if (cfg.user_layout == NetworkConfig::UserLayout::UniformRandom) {
    Rng rng = Rng(cfg.rng_seed).substream(0);
    net.user_positions.reserve(static_cast<std::size_t>(cfg.num_users));
    for (int k = 0; k < cfg.num_users; ++k) {
      const double x = rng.uniform(0.0, cfg.area_side_m);
      const double y = rng.uniform(0.0, cfg.area_side_m);
      net.user_positions.emplace_back(x, y);
    }
  } else {
    require(static_cast<int>(cfg.user_positions.size()) == cfg.num_users,
            "network: Explicit user layout needs exactly K positions");
    net.user_positions = cfg.user_positions;
  }

  const double noise_watts = dbm_to_watts_local(cfg.noise_power_dbm);
  net.beta.resize(cfg.num_aps, cfg.num_users);
  for (int l = 0; l < cfg.num_aps; ++l) {
    for (int k = 0; k < cfg.num_users; ++k) {
      const double d =
          std::max((net.ap_positions[l] - net.user_positions[k]).norm(), 1.0);
      const double loss_db =
          cfg.pathloss.ref_loss_db + 10.0 * cfg.pathloss.exponent * std::log10(d);
      net.beta(l, k) = std::pow(10.0, -loss_db / 10.0) / noise_watts;
    }
  }

  // Serving cluster: the cluster_size strongest APs, ties to the lower index,
  // stored in ascending AP index order.
  net.serving_sets.resize(static_cast<std::size_t>(cfg.num_users));
  std::vector<Index> order(static_cast<std::size_t>(cfg.num_aps));
  for (int k = 0; k < cfg.num_users; ++k) {
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
      return net.beta(a, k) > net.beta(b, k);
    });
    std::vector<Index> cluster(order.begin(), order.begin() + cfg.cluster_size);
    std::sort(cluster.begin(), cluster.end());
    net.serving_sets[static_cast<std::size_t>(k)] = std::move(cluster);
  }
  return net;
}

std::vector<UserMoments> estimate_moments(const Network& network,
                                          const NetworkConfig& cfg) {
  // One generator consumed in a fixed (draw, user, AP, antenna) order, so
  // runs with the same seed are bit-identical.
  auto rng = std::make_shared<Rng>(Rng(cfg.rng_seed).substream(1));
  const Index n_antennas = cfg.antennas_per_ap;
  const Mat& beta = network.beta;
  ChannelSampler rayleigh = [rng, n_antennas, &beta](int, Index user, Index ap) {
    CVec h(n_antennas);
    const double variance = beta(ap, user);
    for (Index a = 0; a < n_antennas; ++a) h[a] = rng->complex_normal(variance);
    return h;
  };
  return estimate_moments(network, cfg, rayleigh);
}

std::vector<UserMoments> estimate_moments(const Network& network,
                                          const NetworkConfig& cfg,
                                          const ChannelSampler& channels) {
  validate_config(cfg);
  const int num_users = cfg.num_users;
  const int num_aps = cfg.num_aps;
  const Index cluster = cfg.cluster_size;
  require(static_cast<int>(network.serving_sets.size()) == num_users,
          "moments: network serving sets do not match the config");

  Rng csi_rng = Rng(cfg.rng_seed).substream(2);

  std::vector<UserMoments> moments(static_cast<std::size_t>(num_users));
  for (int k = 0; k < num_users; ++k) {
    auto& m = moments[static_cast<std::size_t>(k)];
    m.user = k;
    m.serving_aps = network.serving_sets[static_cast<std::size_t>(k)];
    require(static_cast<Index>(m.serving_aps.size()) == cluster,
            "moments: serving set size does not match cluster_size");
    m.b = CVec::Zero(cluster);
    m.cross.assign(static_cast<std::size_t>(num_users), CMat::Zero(cluster, cluster));
    m.combiner_power = Vec::Zero(cluster);
  }

  std::vector<CVec> h(static_cast<std::size_t>(num_users * num_aps));
  CMat combined(cluster, num_users);  // column j holds g_kj for the current draw
  for (int draw = 0; draw < cfg.mc_draws; ++draw) {
    for (int j = 0; j < num_users; ++j) {
      for (int l = 0; l < num_aps; ++l) {
        h[static_cast<std::size_t>(j * num_aps + l)] = channels(draw, j, l);
      }
    }
    for (int k = 0; k < num_users; ++k) {
      auto& m = moments[static_cast<std::size_t>(k)];
      for (Index i = 0; i < cluster; ++i) {
        const Index l = m.serving_aps[static_cast<std::size_t>(i)];
        // Per-AP maximum-ratio combiner on the locally estimated channel.
        CVec v = h[static_cast<std::size_t>(k * num_aps + l)];
        if (cfg.csi_noise_var > 0.0) {
          for (Index a = 0; a < v.size(); ++a) {
            v[a] += csi_rng.complex_normal(cfg.csi_noise_var);
          }
        }
        m.combiner_power[i] += v.squaredNorm();
        for (int j = 0; j < num_users; ++j) {
          combined(i, j) = v.dot(h[static_cast<std::size_t>(j * num_aps + l)]);
        }
      }
      m.b += combined.col(k);
      for (int j = 0; j < num_users; ++j) {
        m.cross[static_cast<std::size_t>(j)].noalias() +=
            combined.col(j) * combined.col(j).adjoint();
      }
    }
  }

  const double inv_draws = 1.0 / cfg.mc_draws;
  for (int k = 0; k < num_users; ++k) {
    auto& m = moments[static_cast<std::size_t>(k)];
    m.b *= inv_draws;
    m.combiner_power *= inv_draws;
    for (auto& mat : m.cross) {
      mat *= inv_draws;
      mat = 0.5 * (mat + mat.adjoint()).eval();  // enforce Hermitian symmetry
    }
    if (m.b.cwiseAbs().maxCoeff() < 1e-12) {
      throw ModelBuildError(
          "moments: mean combined channel of user " + std::to_string(k) +
          " is numerically zero; no admissible combiner has nonzero "
          "correlation with the channel");
    }
  }
  return moments;
}

double eval_fk(const UserMoments& moments_k, const Vec& p) {
  const Index num_users = static_cast<Index>(moments_k.cross.size());
  require_dim(p, num_users, "power vector");
  require_nonnegative(p, "power vector");
  const Index m = moments_k.b.size();

  CMat psi = CMat::Zero(m, m);
  psi.diagonal() = moments_k.combiner_power.cast<std::complex<double>>();
  for (Index j = 0; j < num_users; ++j) {
    if (p[j] != 0.0) psi.noalias() += p[j] * moments_k.cross[static_cast<std::size_t>(j)];
  }
  psi.noalias() -= p[moments_k.user] * (moments_k.b * moments_k.b.adjoint());

  Eigen::LLT<CMat> llt(psi);
  if (llt.info() != Eigen::Success) {
    throw EvalError("interference evaluation: effective noise matrix is not "
                    "positive definite for user " + std::to_string(moments_k.user),
                    llt.rcond());
  }
  const double quality = moments_k.b.dot(llt.solve(moments_k.b)).real();
  if (!(quality > 0.0) || !std::isfinite(quality)) {
    throw EvalError("interference evaluation: degenerate signal quality for user " +
                    std::to_string(moments_k.user), llt.rcond());
  }
  return 1.0 / quality;
}

CellLessModel::CellLessModel(std::vector<UserMoments> moments)
    : moments_(std::move(moments)) {
  const Index num_users = static_cast<Index>(moments_.size());
  if (num_users == 0) throw ModelBuildError("cell-less model: no users");
  for (Index k = 0; k < num_users; ++k) {
    const auto& m = moments_[static_cast<std::size_t>(k)];
    if (m.user != k) {
      throw ModelBuildError("cell-less model: moments out of order at user " +
                            std::to_string(k));
    }
    if (static_cast<Index>(m.cross.size()) != num_users) {
      throw ModelBuildError("cell-less model: cross-moment count mismatch at user " +
                            std::to_string(k));
    }
    const Index cl = m.b.size();
    if (m.combiner_power.size() != cl ||
        static_cast<Index>(m.serving_aps.size()) != cl) {
      throw ModelBuildError("cell-less model: inconsistent cluster data at user " +
                            std::to_string(k));
    }
    if (!(m.combiner_power.minCoeff() > 0.0)) {
      throw ModelBuildError("cell-less model: combiner power must be positive");
    }
    if (m.b.cwiseAbs().maxCoeff() < 1e-12) {
      throw ModelBuildError("cell-less model: zero mean combined channel at user " +
                            std::to_string(k));
    }
    for (const auto& mat : m.cross) {
      if (mat.rows() != cl || mat.cols() != cl) {
        throw ModelBuildError("cell-less model: cross-moment size mismatch");
      }
      const double scale = mat.cwiseAbs().maxCoeff();
      if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > 1e-9 * (1.0 + scale)) {
        throw ModelBuildError("cell-less model: cross moments must be Hermitian");
      }
    }
    // The own-signal covariance must dominate the mean outer product, up to
    // Monte-Carlo noise; otherwise the effective noise matrix can lose
    // positive definiteness.
    const CMat cov = m.cross[static_cast<std::size_t>(k)] - m.b * m.b.adjoint();
    Eigen::SelfAdjointEigenSolver<CMat> es(cov, Eigen::EigenvaluesOnly);
    const double scale = std::max(1.0, m.cross[static_cast<std::size_t>(k)].cwiseAbs().maxCoeff());
    if (es.eigenvalues().minCoeff() < -1e-8 * scale) {
      throw ModelBuildError("cell-less model: own-signal covariance of user " +
                            std::to_string(k) + " is not positive semidefinite");
    }
  }
}

Vec CellLessModel::eval(const Vec& p) const {
  require_dim(p, dim(), "power vector");
  Vec f(dim());
  for (Index k = 0; k < dim(); ++k) {
    f[k] = eval_fk(moments_[static_cast<std::size_t>(k)], p);
  }
  return f;
}

Vec eval_rates(const CellLessModel& model, const Vec& p) {
  const Vec u = eval_utilities(model, p);
  Vec rates(u.size());
  for (Index k = 0; k < u.size(); ++k) rates[k] = std::log2(1.0 + u[k]);
  return rates;
}

PolicyKind parse_policy_kind(const std::string& name) {
  if (name == "full") return PolicyKind::FullPower;
  if (name == "random") return PolicyKind::RandomBox;
  if (name == "fractional") return PolicyKind::Fractional;
  throw UsageError("unknown policy '" + name +
                   "' (expected full, random, fractional)");
}

std::string policy_kind_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::FullPower: return "full";
    case PolicyKind::RandomBox: return "random";
    case PolicyKind::Fractional: return "fractional";
  }
  return "?";
}

Vec apply_policy(const PowerPolicy& policy, const Network& network,
                 const MonotoneNorm& norm) {
  const Index num_users = network.beta.cols();
  require(num_users >= 1, "apply_policy: empty network");
  const double budget = norm.budget();

  Vec raw(num_users);
  switch (policy.kind) {
    case PolicyKind::FullPower:
      raw.setConstant(budget);
      break;
    case PolicyKind::RandomBox: {
      for (std::uint64_t attempt = 0;; ++attempt) {
        Rng rng = Rng(policy.seed).substream(attempt);
        for (Index k = 0; k < num_users; ++k) raw[k] = budget * rng.uniform();
        if (raw.maxCoeff() > 0.0) break;  // measure-zero all-zero draw
      }
      break;
    }
    case PolicyKind::Fractional: {
      for (Index k = 0; k < num_users; ++k) {
        double gain = 0.0;
        for (Index l : network.serving_sets[static_cast<std::size_t>(k)]) {
          gain += network.beta(l, k);
        }
        raw[k] = std::pow(gain, policy.exponent);
      }
      break;
    }
  }
  return (budget / norm(raw)) * raw;
}

CellLessInstance build_cellless_instance(const NetworkConfig& cfg) {
  CellLessInstance instance;
  instance.network = generate_network(cfg);
  instance.model = std::make_shared<CellLessModel>(
      estimate_moments(instance.network, cfg));
  return instance;
}

}  // namespace maxmin
