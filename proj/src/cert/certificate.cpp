#include "pvclift/cert/certificate.hpp"

#include <cstdio>
#include <stdexcept>

#include "pvclift/instances/graph.hpp"

namespace pvclift::cert {

const char* tool_version() { return PVCLIFT_VERSION; }

Json rational_json(const Rational& q) {
  return Json{{"exact", linalg::to_fraction_string(q)}, {"decimal", linalg::to_decimal(q)}};
}

Json rational_list_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(linalg::to_fraction_string(q));
  return out;
}

Json psd_verdict_json(const linalg::PsdVerdict& v) {
  Json out{{"is_psd", v.is_psd}, {"pivots", rational_list_json(v.pivots)}};
  if (!v.is_psd) {
    out["failed_at"] = v.failed_at;
    out["witness"] = rational_list_json(v.witness);
    out["witness_value"] = rational_json(v.witness_value);
  }
  return out;
}

std::string fingerprint_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json envelope(const std::string& claim, Json parameters, const std::string& verdict) {
  return Json{{"schema", kSchemaVersion},
              {"tool", "pvclift"},
              {"tool_version", tool_version()},
              {"claim", claim},
              {"parameters", std::move(parameters)},
              {"verdict", verdict}};
}

namespace {

std::string claim_for_level(const std::string& level) {
  if (level == "sa") return "sa-feasibility";
  if (level == "sap") return "sap-feasibility";
  if (level == "xyn") return "xyn-psd-family";
  throw std::invalid_argument("unknown level: " + level);
}

Json optional_rational(const std::optional<Rational>& q) { return q ? rational_json(*q) : Json(nullptr); }

Json lp_json(const linalg::LinearProgram& lp, const linalg::LpResult& r, bool certified) {
  Json out{{"status", linalg::to_string(r.status)}, {"certified", certified}, {"pivots", r.pivots}};
  if (r.status == linalg::LpStatus::optimal) {
    out["value"] = rational_json(r.value);
    Json primal = Json::object();
    for (std::size_t k = 0; k < r.primal.size(); ++k) {
      if (r.primal[k] != 0) primal[lp.variable_names()[k]] = linalg::to_fraction_string(r.primal[k]);
    }
    out["primal_nonzeros"] = std::move(primal);
  }
  return out;
}

}  // namespace

Json sa_certificate(const std::string& level, const moments::MomentVector& mv, int t, int r,
                    const hierarchy::SaVerdict& v) {
  const auto& g = mv.graph();
  const auto& u = mv.universe();
  Json params{{"level", level},
              {"graph", Json{{"vertices", g.num_vertices()}, {"edges", g.num_edges()}}},
              {"n", g.num_vertices()},
              {"r", r},
              {"t", t},
              {"p", rational_json(mv.p())}};
  Json j = envelope(claim_for_level(level), std::move(params), v.feasible ? "feasible" : "infeasible");
  j["hypothesis_ok"] = g.num_vertices() >= 2 * r + 2 * t + 2;
  j["objective_value"] = rational_json(v.objective_value);
  j["integral_opt"] = optional_rational(v.integral_opt);
  j["integrality_gap_lower_bound"] = optional_rational(v.integrality_gap_lower_bound);
  j["pairs_checked"] = v.pairs_checked;
  j["constraints_checked"] = v.constraints_checked;
  j["psd_checks"] = v.psd_checks;
  j["enumeration_fingerprint"] = fingerprint_hex(v.fingerprint);
  if (v.violated) {
    const auto& w = *v.violated;
    j["witness"] = Json{{"kind", "lifted-constraint"},
                        {"constraint", w.constraint},
                        {"Y", u.describe(w.pair.y)},
                        {"N", u.describe(w.pair.n)},
                        {"pair_index", w.pair_index},
                        {"lhs", rational_json(w.lhs)},
                        {"rhs", rational_json(w.rhs)}};
  } else if (v.psd_failure) {
    const auto& f = *v.psd_failure;
    j["witness"] = Json{{"kind", "psd"},
                        {"Y", u.describe(f.pair.y)},
                        {"N", u.describe(f.pair.n)},
                        {"pair_index", f.pair_index},
                        {"ldl", psd_verdict_json(f.verdict)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json lasserre_certificate(int r, const lasserre::LasserreCheck& c) {
  Json params{{"n", c.n}, {"r", r}, {"t", rational_json(c.t)}, {"p", rational_json(c.p)}};
  Json j = envelope("lasserre1-refutation", std::move(params), c.refuted ? "refuted" : "not-refuted");
  j["refuted_by"] = c.refuted ? Json(c.refuted_by) : Json(nullptr);
  j["expected_slack_s_n"] = rational_json(c.s_n);
  j["allones_schur_eigenvalue"] = optional_rational(c.allones_eigenvalue);
  j["orthogonal_schur_eigenvalue"] = rational_json(c.orthogonal_eigenvalue);
  j["zbar"] = psd_verdict_json(c.zbar_verdict);
  j["full_demand_slack"] = c.full_verdict ? psd_verdict_json(*c.full_verdict) : Json(nullptr);
  return j;
}

StarReport run_star(int n, int t, std::size_t sa1_max_variables, Execution exec) {
  if (n < 1 || t < 1 || t > n) throw std::invalid_argument("star needs 1 <= t <= n");
  const auto g = instances::make_star(n);
  StarReport s;
  s.n = n;
  s.t = t;
  const linalg::SimplexOptions opts{exec};

  const auto lp = instances::build_pvc_lp(g, t);
  s.lp = linalg::lp_solve(lp, opts);
  s.lp_certified = linalg::check_certificate(lp, s.lp);
  s.opt = instances::brute_force_cover(g, t, exec);

  const Rational expected = linalg::make_rational(t, n);
  bool ok = s.lp_certified && s.lp.status == linalg::LpStatus::optimal && s.lp.value == expected &&
            s.opt.value == 1;

  if (2 * t <= n) {
    s.sdp = sdp::verify_hs_sdp(sdp::build_star_sdp_solution(n, t), {exec, s.opt.value});
    ok = ok && s.sdp->feasible && s.sdp->objective_value == expected;
  }

  const std::size_t m = static_cast<std::size_t>(2 * n + 1);
  if (1 + m + m * (m - 1) / 2 <= sa1_max_variables) {
    const auto sa1 = hierarchy::generate_sa1_lp(g, t, sa1_max_variables);
    s.sa1 = linalg::lp_solve(sa1, opts);
    s.sa1_certified = linalg::check_certificate(sa1, *s.sa1);
    ok = ok && s.sa1_certified && s.sa1->status == linalg::LpStatus::optimal && s.sa1->value == 1;
  }
  s.as_expected = ok;
  return s;
}

Json star_certificate(const StarReport& s) {
  const auto g = instances::make_star(s.n);
  Json params{{"graph", "star"}, {"n", s.n}, {"t", s.t}};
  Json j = envelope("star-gap", std::move(params), s.as_expected ? "as-expected" : "unexpected");
  j["lp"] = lp_json(instances::build_pvc_lp(g, s.t), s.lp, s.lp_certified);
  if (s.sdp) {
    j["sdp"] = Json{{"feasible", s.sdp->feasible},
                    {"gram_psd", s.sdp->gram_psd},
                    {"objective_value", rational_json(s.sdp->objective_value)},
                    {"demand_lhs", rational_json(s.sdp->demand_lhs)},
                    {"min_edge_slack", rational_json(s.sdp->min_edge_slack)},
                    {"violated", s.sdp->violated ? Json{{"constraint", s.sdp->violated->name},
                                                         {"slack", rational_json(s.sdp->violated->slack)}}
                                                   : Json(nullptr)}};
  } else {
    j["sdp"] = Json{{"skipped", "t > n/2"}};
  }
  if (s.sa1) {
    Json sa1{{"status", linalg::to_string(s.sa1->status)}, {"certified", s.sa1_certified}, {"pivots", s.sa1->pivots}};
    if (s.sa1->status == linalg::LpStatus::optimal) sa1["value"] = rational_json(s.sa1->value);
    j["sa1_lp"] = std::move(sa1);
  } else {
    j["sa1_lp"] = Json{{"skipped", "lift over variable cap"}};
  }
  j["integral_opt"] = rational_json(s.opt.value);
  j["integral_cover"] = s.opt.cover;
  if (s.lp.status == linalg::LpStatus::optimal && s.lp.value > 0) {
    j["lp_integrality_gap_lower_bound"] = rational_json(s.opt.value / s.lp.value);
  }
  return j;
}

GraphOptReport run_graph_opt(const instances::Graph& g, int t, Execution exec) {
  GraphOptReport r;
  r.opt = instances::brute_force_cover(g, t, exec);
  const auto lp = instances::build_pvc_lp(g, t);
  r.lp = linalg::lp_solve(lp, {exec});
  r.lp_certified = linalg::check_certificate(lp, r.lp);
  return r;
}

Json graph_opt_certificate(const instances::Graph& g, int t, const GraphOptReport& r) {
  Json params{{"graph", Json{{"vertices", g.num_vertices()}, {"edges", g.num_edges()}}}, {"t", t}};
  Json j = envelope("graph-opt", std::move(params), r.lp_certified ? "certified" : "uncertified");
  j["integral_opt"] = rational_json(r.opt.value);
  j["integral_cover"] = r.opt.cover;
  j["lp"] = lp_json(instances::build_pvc_lp(g, t), r.lp, r.lp_certified);
  if (r.lp.status == linalg::LpStatus::optimal && r.lp.value > 0) {
    j["lp_integrality_gap_lower_bound"] = rational_json(r.opt.value / r.lp.value);
  }
  return j;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace pvclift::cert
