#include "shiner/csv_io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

namespace shiner::csv {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
T parse_field(std::string_view field, std::size_t line_no) {
  T out{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw CsvError("line " + std::to_string(line_no) + ": cannot parse '" + std::string(field) + "'");
  }
  return out;
}

bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

void expect_header(std::istream& in, const char* header) {
  std::string line;
  if (!read_line(in, line)) throw CsvError("empty file");
  if (line != header) throw CsvError("expected header '" + std::string(header) + "', got '" + line + "'");
}

}  // namespace

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_snapshots(std::ostream& out, std::span<const Snapshot> snapshots) {
  out << kSnapshotHeader << '\n';
  for (const auto& snap : snapshots) {
    const auto& positions = snap.state.positions;
    for (std::size_t i = 0; i < positions.size(); ++i) {
      out << snap.state.t << ',' << i << ',' << format_float(positions[i].real()) << ','
          << format_float(positions[i].imag()) << '\n';
    }
  }
}

void write_metrics(std::ostream& out, std::span<const Metrics> metrics) {
  out << kMetricsHeader << '\n';
  for (const auto& m : metrics) {
    out << m.t << ',' << format_float(m.mean_dist_to_rho) << ',' << format_float(m.frac_within_eps)
        << ',' << format_float(m.mean_pairwise_dist) << ',' << m.cluster_count << '\n';
  }
}

void write_density(std::ostream& out, std::span<const density::GridPdf> curves) {
  out << kDensityHeader << '\n';
  for (const auto& f : curves) {
    for (std::size_t k = 0; k < f.values.size(); ++k) {
      out << f.t << ',' << format_float(f.z(k)) << ',' << format_float(f.values[k]) << '\n';
    }
  }
}

FileKind detect_kind(const std::string& header_line) {
  std::string_view h = header_line;
  if (!h.empty() && h.back() == '\r') h.remove_suffix(1);
  if (h == kSnapshotHeader) return FileKind::kSnapshots;
  if (h == kDensityHeader) return FileKind::kDensity;
  return FileKind::kUnknown;
}

std::vector<Frame> read_snapshots(std::istream& in) {
  expect_header(in, kSnapshotHeader);
  std::vector<Frame> frames;
  std::string line;
  std::size_t line_no = 1;
  while (read_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != 4) throw CsvError("line " + std::to_string(line_no) + ": expected 4 fields");
    const auto step = parse_field<std::size_t>(fields[0], line_no);
    const auto node = parse_field<std::size_t>(fields[1], line_no);
    const Position p{parse_field<double>(fields[2], line_no), parse_field<double>(fields[3], line_no)};
    if (frames.empty() || frames.back().step != step) frames.push_back({step, {}});
    if (node != frames.back().positions.size()) {
      throw CsvError("line " + std::to_string(line_no) + ": node ids must run 0..n-1 within a step");
    }
    frames.back().positions.push_back(p);
  }
  return frames;
}

std::vector<DensityCurve> read_density(std::istream& in) {
  expect_header(in, kDensityHeader);
  std::vector<DensityCurve> curves;
  std::string line;
  std::size_t line_no = 1;
  while (read_line(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != 3) throw CsvError("line " + std::to_string(line_no) + ": expected 3 fields");
    const int t = parse_field<int>(fields[0], line_no);
    if (curves.empty() || curves.back().t != t) curves.push_back({t, {}, {}});
    curves.back().z.push_back(parse_field<double>(fields[1], line_no));
    curves.back().pdf.push_back(parse_field<double>(fields[2], line_no));
  }
  return curves;
}

}  // namespace shiner::csv
