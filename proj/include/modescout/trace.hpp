#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modescout {

// Sampled simulation trace: strictly increasing times, one continuous state
// vector and one discrete token per sample. Continuous components are
// addressed by name (signal_names) when monitored.
struct SimTrace {
  std::vector<double> times;
  std::vector<std::string> signal_names;
  std::vector<std::vector<double>> signals;  // [sample][component]
  std::vector<std::string> tokens;           // discrete state per sample

  std::size_t size() const { return times.size(); }
  bool empty() const { return times.empty(); }
  // Throws std::invalid_argument when lengths disagree or times are not
  // strictly increasing.
  void validate() const;
  int signal_index(const std::string& name) const;  // -1 when absent

  // Text format `trace v1` (see docs/formats.md).
  void save(std::ostream& out) const;
  static SimTrace load(std::istream& in);
};

}  // namespace modescout
