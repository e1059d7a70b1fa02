#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "shiner/density.hpp"
#include "shiner/engine.hpp"

namespace shiner::csv {

inline constexpr const char* kSnapshotHeader = "step,node_id,x,y";
inline constexpr const char* kMetricsHeader =
    "step,mean_dist,frac_within_eps,mean_pairwise_dist,cluster_count";
inline constexpr const char* kDensityHeader = "t,z,pdf";

/// Malformed or unreadable CSV input.
class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nine significant digits, shortest of fixed/scientific ("%.9g").
std::string format_float(double v);

void write_snapshots(std::ostream& out, std::span<const Snapshot> snapshots);
void write_metrics(std::ostream& out, std::span<const Metrics> metrics);
void write_density(std::ostream& out, std::span<const density::GridPdf> curves);

/// All nodes of one recorded step.
struct Frame {
  std::size_t step = 0;
  std::vector<Position> positions;
};

struct DensityCurve {
  int t = 0;
  std::vector<double> z;
  std::vector<double> pdf;
};

enum class FileKind { kSnapshots, kDensity, kUnknown };

FileKind detect_kind(const std::string& header_line);

/// Frames in file order; rows of a step must be contiguous.
std::vector<Frame> read_snapshots(std::istream& in);
std::vector<DensityCurve> read_density(std::istream& in);

}  // namespace shiner::csv
