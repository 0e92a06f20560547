#include "maxmin/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace maxmin {

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) {
  require(watts > 0.0, "watts_to_dbm: power must be positive");
  return 10.0 * std::log10(watts) + 30.0;
}

std::string format_double(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

namespace {

// Strips '#' comments and splits the remainder into whitespace tokens.
std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) tokens.push_back(token);
  }
  return tokens;
}

double to_double(const std::string& token, const char* context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(context) + ": cannot parse number '" + token + "'");
  }
}

nlohmann::json vec_to_json(const Vec& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

}  // namespace

AffineModel parse_affine_model(std::istream& in) {
  const auto tokens = tokenize(in);
  require(!tokens.empty(), "affine model: empty input");
  const double k_raw = to_double(tokens[0], "affine model dimension");
  const Index dim = static_cast<Index>(k_raw);
  require(k_raw == static_cast<double>(dim) && dim >= 1,
          "affine model: first value must be a positive integer dimension");
  const std::size_t needed = 1 + static_cast<std::size_t>(dim) * (dim + 1);
  if (tokens.size() != needed) {
    throw UsageError("affine model: expected " + std::to_string(needed) +
                     " values for K = " + std::to_string(dim) + ", got " +
                     std::to_string(tokens.size()));
  }
  Mat f(dim, dim);
  std::size_t pos = 1;
  for (Index r = 0; r < dim; ++r) {
    for (Index c = 0; c < dim; ++c) {
      f(r, c) = to_double(tokens[pos++], "affine model cross gain");
    }
  }
  Vec sigma(dim);
  for (Index r = 0; r < dim; ++r) {
    sigma[r] = to_double(tokens[pos++], "affine model noise");
  }
  return AffineModel(std::move(f), std::move(sigma));
}

AffineModel load_affine_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open model file '" + path + "'");
  return parse_affine_model(in);
}

namespace {

std::vector<Eigen::Vector2d> parse_positions(const std::string& text,
                                             const char* key) {
  std::vector<Eigen::Vector2d> positions;
  std::istringstream ss(text);
  std::string point;
  while (std::getline(ss, point, ',')) {
    std::istringstream ps(point);
    double x = 0.0, y = 0.0;
    if (!(ps >> x >> y)) {
      throw UsageError(std::string(key) + ": expected 'x y' pairs separated by commas");
    }
    std::string extra;
    if (ps >> extra) {
      throw UsageError(std::string(key) + ": trailing data in point '" + point + "'");
    }
    positions.emplace_back(x, y);
  }
  require(!positions.empty(), std::string(key) + ": no positions given");
  return positions;
}

}  // namespace

NetworkConfig parse_network_config(std::istream& in) {
  NetworkConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::istringstream check(line);
      std::string leftover;
      if (check >> leftover) {
        throw UsageError("config line " + std::to_string(line_no) +
                         ": expected 'key = value'");
      }
      continue;
    }
    auto trim = [](std::string s) {
      const auto first = s.find_first_not_of(" \t\r");
      const auto last = s.find_last_not_of(" \t\r");
      return first == std::string::npos ? std::string()
                                        : s.substr(first, last - first + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    require(!key.empty() && !value.empty(),
            "config line " + std::to_string(line_no) + ": empty key or value");

    if (key == "L" || key == "num_aps") {
      cfg.num_aps = static_cast<int>(to_double(value, key.c_str()));
    } else if (key == "N" || key == "antennas_per_ap") {
      cfg.antennas_per_ap = static_cast<int>(to_double(value, key.c_str()));
    } else if (key == "K" || key == "num_users") {
      cfg.num_users = static_cast<int>(to_double(value, key.c_str()));
    } else if (key == "area_side_m") {
      cfg.area_side_m = to_double(value, key.c_str());
    } else if (key == "cluster_size") {
      cfg.cluster_size = static_cast<int>(to_double(value, key.c_str()));
    } else if (key == "ap_layout") {
      if (value == "grid") cfg.ap_layout = NetworkConfig::ApLayout::RegularGrid;
      else if (value == "explicit") cfg.ap_layout = NetworkConfig::ApLayout::Explicit;
      else throw UsageError("ap_layout: expected 'grid' or 'explicit'");
    } else if (key == "user_layout") {
      if (value == "random") cfg.user_layout = NetworkConfig::UserLayout::UniformRandom;
      else if (value == "explicit") cfg.user_layout = NetworkConfig::UserLayout::Explicit;
      else throw UsageError("user_layout: expected 'random' or 'explicit'");
    } else if (key == "ap_positions") {
      cfg.ap_positions = parse_positions(value, key.c_str());
    } else if (key == "user_positions") {
      cfg.user_positions = parse_positions(value, key.c_str());
    } else if (key == "ref_loss_db") {
      cfg.pathloss.ref_loss_db = to_double(value, key.c_str());
    } else if (key == "pathloss_exponent") {
      cfg.pathloss.exponent = to_double(value, key.c_str());
    } else if (key == "noise_power_dbm") {
      cfg.noise_power_dbm = to_double(value, key.c_str());
    } else if (key == "p_max_dbm") {
      cfg.p_max_dbm = to_double(value, key.c_str());
    } else if (key == "mc_draws") {
      cfg.mc_draws = static_cast<int>(to_double(value, key.c_str()));
    } else if (key == "seed" || key == "rng_seed") {
      cfg.rng_seed = static_cast<std::uint64_t>(to_double(value, key.c_str()));
    } else if (key == "csi_noise_var") {
      cfg.csi_noise_var = to_double(value, key.c_str());
    } else {
      throw UsageError("config line " + std::to_string(line_no) +
                       ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

NetworkConfig load_network_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  return parse_network_config(in);
}

std::string solution_to_json(const MaxMinSolution& solution) {
  nlohmann::json j;
  j["p_star"] = vec_to_json(solution.p_star);
  j["c_star"] = solution.c_star;
  j["utilities"] = vec_to_json(solution.utilities);
  j["iterations"] = solution.iterations;
  j["converged"] = solution.converged;
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& [n, residual] : solution.trace) {
    trace.push_back(nlohmann::json::array({n, residual}));
  }
  j["residual_trace"] = std::move(trace);
  return j.dump(2) + "\n";
}

std::string solution_to_csv(const MaxMinSolution& solution, const Vec& weights) {
  require(weights.size() == solution.p_star.size(),
          "solution_to_csv: weight dimension mismatch");
  std::string out = "k,p_star,utility,weight\n";
  for (Index k = 0; k < solution.p_star.size(); ++k) {
    out += std::to_string(k) + ',' + format_double(solution.p_star[k]) + ',' +
           format_double(solution.utilities[k]) + ',' + format_double(weights[k]) +
           '\n';
  }
  return out;
}

std::string certificate_to_json(const BoundaryCertificate& cert) {
  nlohmann::json j;
  j["on_boundary"] = cert.on_boundary;
  j["norm_value"] = cert.norm_value;
  j["budget"] = cert.budget;
  if (cert.solver_crosscheck) {
    nlohmann::json cc;
    cc["c_star"] = cert.solver_crosscheck->c_star;
    cc["recovered_p"] = vec_to_json(cert.solver_crosscheck->recovered_p);
    cc["active_users"] = cert.solver_crosscheck->active_users;
    j["solver_crosscheck"] = std::move(cc);
  } else {
    j["solver_crosscheck"] = nullptr;
  }
  if (cert.dominator) {
    j["dominator"] = vec_to_json(*cert.dominator);
  } else {
    j["dominator"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string boundary_samples_to_csv(const std::vector<BoundarySample>& samples) {
  std::string out = "sample_id,k,p,utility\n";
  for (std::size_t s = 0; s < samples.size(); ++s) {
    for (Index k = 0; k < samples[s].p.size(); ++k) {
      out += std::to_string(s) + ',' + std::to_string(k) + ',' +
             format_double(samples[s].p[k]) + ',' + format_double(samples[s].u[k]) +
             '\n';
    }
  }
  return out;
}

std::string policy_rows_to_csv(const std::vector<PolicyRunRow>& rows) {
  std::string out = "policy,user,p_watts,sinr,rate_bits_per_hz\n";
  for (const auto& row : rows) {
    out += row.policy + ',' + std::to_string(row.user) + ',' +
           format_double(row.p_watts) + ',' + format_double(row.sinr) + ',' +
           format_double(row.rate_bits_per_hz) + '\n';
  }
  return out;
}

std::string check_report_to_json(const CheckReport& report) {
  nlohmann::json j;
  j["passed"] = report.passed;
  j["trials"] = report.trials;
  j["failure"] = report.passed ? nlohmann::json(nullptr) : nlohmann::json(report.failure);
  j["witness_x"] = report.witness_x ? vec_to_json(*report.witness_x) : nlohmann::json(nullptr);
  j["witness_y"] = report.witness_y ? vec_to_json(*report.witness_y) : nlohmann::json(nullptr);
  j["witness_alpha"] =
      report.witness_alpha != 0.0 ? nlohmann::json(report.witness_alpha) : nlohmann::json(nullptr);
  return j.dump(2) + "\n";
}

Vec parse_vector(const std::string& text) {
  std::vector<double> values;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError("vector entry: empty field");
    values.push_back(to_double(item.substr(first, last - first + 1), "vector entry"));
  }
  require(!values.empty(), "expected a comma-separated list of numbers");
  Vec v(static_cast<Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<Index>(i)] = values[i];
  return v;
}

}  // namespace maxmin
