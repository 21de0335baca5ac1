#include "svg.hpp"

#include <algorithm>
#include <cstdio>

namespace pshnd {

namespace {

constexpr double kCanvas = 600.0;
constexpr double kMargin = 60.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string svg_diagram(const NewtonDiagram& diagram,
                        std::span<const ExtremeSetRecord> records) {
  long long max_a = 1, max_b = 1;
  for (const auto& p : diagram) {
    max_a = std::max(max_a, p.A);
    max_b = std::max(max_b, p.B);
  }
  const double span = kCanvas - 2.0 * kMargin;
  auto sx = [&](double a) { return kMargin + a * span / double(max_a); };
  auto sy = [&](double b) { return kCanvas - kMargin - b * span / double(max_b); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
         "viewBox=\"0 0 600 600\">\n";
  out += "<rect width=\"600\" height=\"600\" fill=\"#ffffff\"/>\n";

  // axes along the margins, arrow side labeled
  out += "<line x1=\"" + num(kMargin) + "\" y1=\"" + num(kCanvas - kMargin) +
         "\" x2=\"" + num(kCanvas - kMargin + 24) + "\" y2=\"" +
         num(kCanvas - kMargin) + "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  out += "<line x1=\"" + num(kMargin) + "\" y1=\"" + num(kCanvas - kMargin) +
         "\" x2=\"" + num(kMargin) + "\" y2=\"" + num(kMargin - 24) +
         "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  out += "<text x=\"" + num(kCanvas - kMargin + 28) + "\" y=\"" +
         num(kCanvas - kMargin + 4) +
         "\" font-family=\"monospace\" font-size=\"14\" fill=\"#444444\">A</text>\n";
  out += "<text x=\"" + num(kMargin - 4) + "\" y=\"" + num(kMargin - 30) +
         "\" font-family=\"monospace\" font-size=\"14\" fill=\"#444444\">B</text>\n";

  // dashed boundary of the spanned region: drop in from the top at the
  // steepest vertex, walk the extreme chain, leave to the right
  if (!records.empty()) {
    std::vector<LatticePoint> chain;
    for (const auto& r : records)
      for (const auto& p : r.points)
        if (chain.empty() || !(chain.back() == p)) chain.push_back(p);
    std::string pts = num(sx(double(chain.front().A))) + "," + num(kMargin);
    for (const auto& p : chain)
      pts += " " + num(sx(double(p.A))) + "," + num(sy(double(p.B)));
    pts += " " + num(kCanvas - kMargin) + "," + num(sy(double(chain.back().B)));
    out += "<polyline points=\"" + pts +
           "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"6,4\"/>\n";
  }

  // extreme edges, solid
  for (const auto& r : records) {
    if (r.kind != ExtremeKind::edge) continue;
    const LatticePoint& a = r.points.front();
    const LatticePoint& b = r.points.back();
    out += "<line x1=\"" + num(sx(double(a.A))) + "\" y1=\"" + num(sy(double(a.B))) +
           "\" x2=\"" + num(sx(double(b.A))) + "\" y2=\"" + num(sy(double(b.B))) +
           "\" stroke=\"#1a6fb5\" stroke-width=\"2.5\"/>\n";
  }

  for (const auto& p : diagram) {
    const double x = sx(double(p.A));
    const double y = sy(double(p.B));
    out += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) +
           "\" r=\"4\" fill=\"#222222\"/>\n";
    out += "<text x=\"" + num(x + 6) + "\" y=\"" + num(y - 6) +
           "\" font-family=\"monospace\" font-size=\"11\" fill=\"#222222\">(" +
           std::to_string(p.A) + "," + std::to_string(p.B) + ")</text>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace pshnd
