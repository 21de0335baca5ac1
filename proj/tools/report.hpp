#pragma once

#include "pshnd/levi.hpp"
#include "pshnd/newton.hpp"
#include "pshnd/polynomial.hpp"
#include "pshnd/pshtest.hpp"
#include "pshnd/verify.hpp"

#include <json.hpp>

#include <span>
#include <string>
#include <vector>

namespace pshnd::report {

// default nlohmann::json keeps keys sorted (std::map), which together with
// the "p/q" rational strings makes every payload byte-stable

nlohmann::json rational_json(const Rational& r);
nlohmann::json gaussian_json(const GaussianRational& g);
nlohmann::json point_json(LatticePoint p);
nlohmann::json points_json(std::span<const LatticePoint> pts);
nlohmann::json mixed_json(const MixedPolynomial& p);
nlohmann::json holo_json(const HolomorphicPolynomial& p);
nlohmann::json record_json(const ExtremeSetRecord& r);
nlohmann::json violation_json(const Violation& v);
nlohmann::json psh_report_json(const PshReport& r);
nlohmann::json check_json(const CheckResult& c);

// {"command":..., "inputs":..., "results":..., "version":...}
nlohmann::json envelope(const std::string& command, nlohmann::json inputs,
                        nlohmann::json results);

// strict [[A,B],...] with integer entries; throws InvalidArgument otherwise
std::vector<LatticePoint> parse_points_json(const std::string& text);

}  // namespace pshnd::report
