#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pvclift/hierarchy/verifier.hpp"
#include "pvclift/instances/pvc.hpp"
#include "pvclift/lasserre/lasserre.hpp"
#include "pvclift/linalg/simplex.hpp"
#include "pvclift/sdp/hs_sdp.hpp"

namespace pvclift::cert {

using Json = nlohmann::ordered_json;
using linalg::Rational;

inline constexpr int kSchemaVersion = 1;
const char* tool_version();

/// {"exact": "num/den", "decimal": "..."}; the decimal form is for reading only.
Json rational_json(const Rational& q);
Json rational_list_json(const std::vector<Rational>& v);
Json psd_verdict_json(const linalg::PsdVerdict& v);
std::string fingerprint_hex(std::uint64_t h);

/// Common envelope: schema, tool version, claim, parameters, verdict.
Json envelope(const std::string& claim, Json parameters, const std::string& verdict);

Json sa_certificate(const std::string& level, const moments::MomentVector& mv, int t, int r,
                    const hierarchy::SaVerdict& v);

Json lasserre_certificate(int r, const lasserre::LasserreCheck& c);

struct StarReport {
  int n = 0;
  int t = 0;
  linalg::LpResult lp;
  bool lp_certified = false;
  std::optional<sdp::SdpVerdict> sdp;  // absent when t > n/2
  std::optional<linalg::LpResult> sa1;  // absent when the lift is over the size cap
  bool sa1_certified = false;
  instances::IntegralOptimum opt;
  /// True when every leg that ran produced the expected value.
  bool as_expected = false;
};

/// Runs the LP, SDP, level-1 SA LP and brute-force legs on the star.
StarReport run_star(int n, int t, std::size_t sa1_max_variables, Execution exec);
Json star_certificate(const StarReport& s);

struct GraphOptReport {
  instances::IntegralOptimum opt;
  linalg::LpResult lp;
  bool lp_certified = false;
};

GraphOptReport run_graph_opt(const instances::Graph& g, int t, Execution exec);
Json graph_opt_certificate(const instances::Graph& g, int t, const GraphOptReport& r);

/// Serializes with two-space indent and a trailing newline.
std::string render(const Json& j);

}  // namespace pvclift::cert
