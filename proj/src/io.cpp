#include "qbell/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace qbell::io {

std::string fmt12(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  if (res.ec != std::errc()) throw std::runtime_error("fmt12: conversion failed");
  return std::string(buf, res.ptr);
}

namespace {

json complex_grid(const CMat& m, bool imag_part) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) {
      row.push_back(imag_part ? m(r, c).imag() : m(r, c).real());
    }
    rows.push_back(row);
  }
  return rows;
}

json vec3_to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

Vec3 vec3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected a 3-vector");
  return Vec3{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json triad_to_json(const Triad& t) {
  return json::array({vec3_to_json(t.a1), vec3_to_json(t.a2), vec3_to_json(t.a3)});
}

Triad triad_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected three frame rows");
  return orthonormalized_triad(vec3_from_json(j[0]), vec3_from_json(j[1]), vec3_from_json(j[2]));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

bool parse_u64(const std::string& s, std::uint64_t& out) {
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

bool parse_double(const std::string& s, double& out) {
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace

json density_to_json(const DensityMatrix& rho) {
  return json{{"re", complex_grid(rho.mat(), false)}, {"im", complex_grid(rho.mat(), true)}};
}

DensityMatrix density_from_json(const json& j) {
  if (!j.contains("re") || !j.contains("im")) {
    throw std::invalid_argument("density JSON needs \"re\" and \"im\" 4x4 grids");
  }
  const json& re = j["re"];
  const json& im = j["im"];
  if (!re.is_array() || re.size() != 4 || !im.is_array() || im.size() != 4) {
    throw std::invalid_argument("density JSON grids must be 4x4");
  }
  CMat m(4, 4);
  for (int r = 0; r < 4; ++r) {
    if (re[r].size() != 4 || im[r].size() != 4) {
      throw std::invalid_argument("density JSON grids must be 4x4");
    }
    for (int c = 0; c < 4; ++c) {
      m(r, c) = cplx(re[r][c].get<double>(), im[r][c].get<double>());
    }
  }
  return validate_density(m);
}

json pure_to_json(const PureState& phi) {
  json re = json::array(), im = json::array();
  for (const cplx& c : phi.vec()) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  return json{{"vec_re", re}, {"vec_im", im}};
}

PureState pure_from_json(const json& j) {
  if (!j.contains("vec_re") || !j.contains("vec_im")) {
    throw std::invalid_argument("pure-state JSON needs \"vec_re\" and \"vec_im\" 4-vectors");
  }
  const json& re = j["vec_re"];
  const json& im = j["vec_im"];
  if (re.size() != 4 || im.size() != 4) {
    throw std::invalid_argument("pure-state JSON vectors must have 4 entries");
  }
  CVec4 v;
  for (int i = 0; i < 4; ++i) v[i] = cplx(re[i].get<double>(), im[i].get<double>());
  return PureState(v);
}

DensityMatrix load_state(const std::string& spec) {
  if (spec == "singlet" || spec == "psi-") return projector(bell_state(BellKind::psi_minus));
  if (spec == "psi+") return projector(bell_state(BellKind::psi_plus));
  if (spec == "phi+") return projector(bell_state(BellKind::phi_plus));
  if (spec == "phi-") return projector(bell_state(BellKind::phi_minus));
  if (spec.rfind("werner:", 0) == 0) {
    double beta = 0;
    if (!parse_double(spec.substr(7), beta)) {
      throw std::invalid_argument("werner preset needs werner:<beta>");
    }
    return werner(beta);
  }
  if (spec.rfind("mixed:", 0) == 0) {
    const auto colon = spec.find(':', 6);
    std::uint64_t seed = 0;
    std::uint64_t rank = 0;
    if (colon == std::string::npos || !parse_u64(spec.substr(6, colon - 6), seed) ||
        !parse_u64(spec.substr(colon + 1), rank) || rank < 1 || rank > 4) {
      throw std::invalid_argument("mixed preset needs mixed:<seed>:<rank> with rank 1..4");
    }
    Rng rng(seed);
    return sample_mixed(static_cast<int>(rank), rng);
  }

  const json j = read_json_file(spec);
  if (j.contains("vec_re")) return projector(pure_from_json(j));
  return density_from_json(j);
}

json setting_to_json(const TestSetting& s) {
  return json{{"A", triad_to_json(s.A)},
              {"B", triad_to_json(s.B)},
              {"same_orientation", s.same_orientation}};
}

TestSetting setting_from_json(const json& j) {
  if (!j.contains("A") || !j.contains("B")) {
    throw std::invalid_argument("settings JSON needs \"A\" and \"B\" frame rows");
  }
  return make_setting(triad_from_json(j["A"]), triad_from_json(j["B"]));
}

TestSetting load_setting(const std::string& spec) {
  if (spec == "aligned") return aligned_setting();
  if (spec == "flipped-b3") return flipped_b3_setting();
  return setting_from_json(read_json_file(spec));
}

json witness_to_json(const WitnessReport& r) {
  return json{{"s_value", r.s_value},
              {"violated", r.violated},
              {"lambda_min", r.lambda_min},
              {"predicted_max", r.predicted_max},
              {"setting", setting_to_json(r.setting_used)}};
}

WitnessReport witness_from_json(const json& j) {
  WitnessReport r;
  r.s_value = j.at("s_value").get<double>();
  r.violated = j.at("violated").get<bool>();
  r.lambda_min = j.at("lambda_min").get<double>();
  r.predicted_max = j.at("predicted_max").get<double>();
  r.setting_used = setting_from_json(j.at("setting"));
  return r;
}

json opt_result_to_json(const OptResult& r) {
  return json{{"best_setting", setting_to_json(r.best_setting)},
              {"best_value", r.best_value},
              {"iterations_used", r.iterations_used},
              {"restarts_converged", r.restarts_converged}};
}

OptResult opt_result_from_json(const json& j) {
  OptResult r;
  r.best_setting = setting_from_json(j.at("best_setting"));
  r.best_value = j.at("best_value").get<double>();
  r.iterations_used = j.at("iterations_used").get<long>();
  r.restarts_converged = j.at("restarts_converged").get<int>();
  return r;
}

json shot_estimate_to_json(const ShotEstimate& e) {
  json counts = json::array();
  for (int k = 0; k < 3; ++k) {
    counts.push_back(json{{"setting", k + 1},
                          {"counts",
                           json{{"pp", e.counts[k].pp},
                                {"pm", e.counts[k].pm},
                                {"mp", e.counts[k].mp},
                                {"mm", e.counts[k].mm}}}});
  }
  json stats{{"x1", e.stats.x1}, {"x2", e.stats.x2}, {"x3corr", e.stats.x3corr}};
  if (e.stats.x1_se) stats["x1_se"] = *e.stats.x1_se;
  if (e.stats.x2_se) stats["x2_se"] = *e.stats.x2_se;
  if (e.stats.x3corr_se) stats["x3corr_se"] = *e.stats.x3corr_se;
  return json{{"counts", counts},       {"stats", stats},
              {"s_hat", e.s_hat},       {"s_se", e.s_se},
              {"simple_hat", e.simple_hat}, {"simple_se", e.simple_se},
              {"shots_per_setting", e.shots_used}};
}

}  // namespace qbell::io
