#include "shiner/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace shiner::svg {

namespace {

constexpr double kMarkerHalf = 6.0;
constexpr double kPlotMargin = 60.0;
constexpr int kTicks = 5;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

void open_document(std::ostringstream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";
}

}  // namespace

Point arena_to_viewport(Position p) {
  const double scale = kViewport / (2.0 * kArenaHalfWidth);
  return {(p.real() + kArenaHalfWidth) * scale, (kArenaHalfWidth - p.imag()) * scale};
}

std::string render_swarm(std::span<const Position> positions, Position rho, std::size_t step) {
  std::ostringstream out;
  open_document(out);
  out << "<text x=\"12\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">step "
      << step << ", " << positions.size() << " nodes</text>\n";
  for (const auto& p : positions) {
    const Point v = arena_to_viewport(p);
    out << "<circle class=\"node\" cx=\"" << num(v.x) << "\" cy=\"" << num(v.y) << "\" r=\""
        << num(kNodeRadius) << "\" fill=\"steelblue\" fill-opacity=\"0.8\"/>\n";
  }
  const Point c = arena_to_viewport(rho);
  out << "<rect class=\"rho\" x=\"" << num(c.x - kMarkerHalf) << "\" y=\"" << num(c.y - kMarkerHalf)
      << "\" width=\"" << num(2 * kMarkerHalf) << "\" height=\"" << num(2 * kMarkerHalf)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" data-cx=\"" << num(c.x)
      << "\" data-cy=\"" << num(c.y) << "\"/>\n";
  out << "</svg>\n";
  return out.str();
}

std::string render_density(const csv::DensityCurve& curve) {
  std::ostringstream out;
  open_document(out);
  const auto [z_lo_it, z_hi_it] = std::minmax_element(curve.z.begin(), curve.z.end());
  const double z_lo = curve.z.empty() ? 0.0 : *z_lo_it;
  const double z_hi = curve.z.empty() ? 1.0 : *z_hi_it;
  const double y_hi = curve.pdf.empty() ? 1.0 : std::max(*std::max_element(curve.pdf.begin(), curve.pdf.end()), 1e-300);
  const double z_span = z_hi > z_lo ? z_hi - z_lo : 1.0;

  const double left = kPlotMargin, right = kViewport - kPlotMargin / 2;
  const double top = kPlotMargin / 2, bottom = kViewport - kPlotMargin;
  auto px = [&](double z) { return left + (z - z_lo) / z_span * (right - left); };
  auto py = [&](double y) { return bottom - y / y_hi * (bottom - top); };

  out << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << num(left) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(right)
      << "\" y2=\"" << num(bottom) << "\"/>\n"
      << "<line x1=\"" << num(left) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(left)
      << "\" y2=\"" << num(top) << "\"/>\n";
  for (int k = 0; k <= kTicks; ++k) {
    const double frac = static_cast<double>(k) / kTicks;
    const double tx = left + frac * (right - left);
    const double ty = bottom - frac * (bottom - top);
    out << "<line x1=\"" << num(tx) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(tx)
        << "\" y2=\"" << num(bottom + 6) << "\"/>\n"
        << "<line x1=\"" << num(left - 6) << "\" y1=\"" << num(ty) << "\" x2=\"" << num(left)
        << "\" y2=\"" << num(ty) << "\"/>\n";
  }
  out << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int k = 0; k <= kTicks; ++k) {
    const double frac = static_cast<double>(k) / kTicks;
    out << "<text x=\"" << num(left + frac * (right - left)) << "\" y=\"" << num(bottom + 20)
        << "\" text-anchor=\"middle\">" << label(z_lo + frac * z_span) << "</text>\n"
        << "<text x=\"" << num(left - 8) << "\" y=\"" << num(bottom - frac * (bottom - top) + 4)
        << "\" text-anchor=\"end\">" << label(frac * y_hi) << "</text>\n";
  }
  out << "<text x=\"" << num((left + right) / 2) << "\" y=\"" << num(kViewport - 15)
      << "\" text-anchor=\"middle\">z</text>\n"
      << "<text x=\"" << num(right) << "\" y=\"" << num(top) << "\" text-anchor=\"end\">pdf at t = "
      << curve.t << "</text>\n</g>\n";

  out << "<polyline class=\"pdf\" fill=\"none\" stroke=\"firebrick\" stroke-width=\"1.5\" points=\"";
  for (std::size_t k = 0; k < curve.z.size(); ++k) {
    if (k) out << ' ';
    out << num(px(curve.z[k])) << ',' << num(py(curve.pdf[k]));
  }
  out << "\"/>\n</svg>\n";
  return out.str();
}

}  // namespace shiner::svg
