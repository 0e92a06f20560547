#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "maxmin/cellless.hpp"
#include "maxmin/interference.hpp"
#include "maxmin/pareto.hpp"
#include "maxmin/solver.hpp"

namespace maxmin {

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

/// Affine model text format: `K`, then K rows of the cross-gain matrix,
/// then the noise vector. Blank lines and `#` comments are skipped.
AffineModel parse_affine_model(std::istream& in);
AffineModel load_affine_model(const std::string& path);

/// Flat `key = value` network description with `#` comments. Powers are
/// given in dBm.
NetworkConfig parse_network_config(std::istream& in);
NetworkConfig load_network_config(const std::string& path);

std::string solution_to_json(const MaxMinSolution& solution);
/// Header: k,p_star,utility,weight
std::string solution_to_csv(const MaxMinSolution& solution, const Vec& weights);

std::string certificate_to_json(const BoundaryCertificate& cert);

/// Header: sample_id,k,p,utility
std::string boundary_samples_to_csv(const std::vector<BoundarySample>& samples);

struct PolicyRunRow {
  std::string policy;
  int user = 0;
  double p_watts = 0.0;
  double sinr = 0.0;
  double rate_bits_per_hz = 0.0;
};

/// Header: policy,user,p_watts,sinr,rate_bits_per_hz
std::string policy_rows_to_csv(const std::vector<PolicyRunRow>& rows);

std::string check_report_to_json(const CheckReport& report);

/// Comma-separated list of reals, e.g. "5,5" or "0.1,0.2,0.3".
Vec parse_vector(const std::string& text);

}  // namespace maxmin
