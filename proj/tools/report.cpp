#include "report.hpp"

#include "pshnd/error.hpp"
#include "pshnd/parser.hpp"
#include "pshnd/version.hpp"

namespace pshnd::report {

nlohmann::json rational_json(const Rational& r) { return to_fraction_string(r); }

nlohmann::json gaussian_json(const GaussianRational& g) {
  return {{"re", rational_json(g.re)}, {"im", rational_json(g.im)}};
}

nlohmann::json point_json(LatticePoint p) {
  return nlohmann::json::array({p.A, p.B});
}

nlohmann::json points_json(std::span<const LatticePoint> pts) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : pts) out.push_back(point_json(p));
  return out;
}

nlohmann::json mixed_json(const MixedPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"coeff", gaussian_json(c)},
                     {"exponents", {e.a, e.b, e.c, e.d}}});
  }
  return {{"terms", std::move(terms)}, {"text", format(p)}};
}

nlohmann::json holo_json(const HolomorphicPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"coeff", gaussian_json(c)},
                     {"exponents", {e.a, e.c}}});
  }
  return {{"terms", std::move(terms)}, {"text", format(p)}};
}

nlohmann::json record_json(const ExtremeSetRecord& r) {
  const WeightPair wt = edge_weights(r);
  return {{"kind", r.kind == ExtremeKind::edge ? "edge" : "point"},
          {"points", points_json(r.points)},
          {"line",
           {{"slope", rational_json(r.line.slope)},
            {"intercept", rational_json(r.line.intercept)}}},
          {"weights", {wt.p, wt.q}}};
}

nlohmann::json violation_json(const Violation& v) {
  return {{"z", {v.z.real(), v.z.imag()}},
          {"w", {v.w.real(), v.w.imag()}},
          {"lambda_min", v.lambda_min},
          {"scale", v.scale},
          {"context", v.context}};
}

nlohmann::json psh_report_json(const PshReport& r) {
  nlohmann::json out = {{"verdict", std::string(verdict_name(r.verdict))},
                        {"samples_used", r.samples_used}};
  out["violation"] =
      r.violation ? violation_json(*r.violation) : nlohmann::json(nullptr);
  return out;
}

nlohmann::json check_json(const CheckResult& c) {
  return {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

nlohmann::json envelope(const std::string& command, nlohmann::json inputs,
                        nlohmann::json results) {
  return {{"command", command},
          {"inputs", std::move(inputs)},
          {"results", std::move(results)},
          {"version", kVersion}};
}

std::vector<LatticePoint> parse_points_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("points JSON does not parse: ") + e.what());
  }
  if (!j.is_array() || j.empty())
    throw InvalidArgument("points JSON must be a nonempty array of [A,B] pairs");
  std::vector<LatticePoint> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 ||
        !item[0].is_number_integer() || !item[1].is_number_integer())
      throw InvalidArgument("points JSON must be a nonempty array of [A,B] pairs");
    const long long a = item[0].get<long long>();
    const long long b = item[1].get<long long>();
    if (a < 0 || b < 0)
      throw InvalidArgument("lattice points must have nonnegative coordinates");
    out.push_back({a, b});
  }
  return out;
}

}  // namespace pshnd::report
