#include "modescout/trace.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "modescout/textio.hpp"

namespace modescout {

void SimTrace::validate() const {
  if (times.empty()) throw std::invalid_argument("trace is empty");
  if (signals.size() != times.size() || tokens.size() != times.size()) {
    throw std::invalid_argument("trace column lengths disagree");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (signals[i].size() != signal_names.size()) {
      throw std::invalid_argument("trace sample has wrong signal count");
    }
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw std::invalid_argument("trace times must be strictly increasing");
    }
  }
}

int SimTrace::signal_index(const std::string& name) const {
  for (std::size_t i = 0; i < signal_names.size(); ++i) {
    if (signal_names[i] == name) return static_cast<int>(i);
  }
  return -1;
}

void SimTrace::save(std::ostream& out) const {
  out << "trace v1\n";
  out << "signals";
  for (const auto& n : signal_names) out << ' ' << n;
  out << "\n";
  out << "samples " << times.size() << "\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    out << format_double(times[i]);
    for (double v : signals[i]) out << ' ' << format_double(v);
    out << ' ' << tokens[i] << "\n";
  }
  out << "end\n";
}

SimTrace SimTrace::load(std::istream& in) {
  auto next_line = [&](const char* what) {
    std::string line;
    if (!std::getline(in, line)) {
      throw std::runtime_error(std::string("trace: unexpected end of file reading ") + what);
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  };
  if (next_line("header") != "trace v1") throw std::runtime_error("trace: bad header");
  SimTrace t;
  {
    const auto parts = split_ws(next_line("signals"));
    if (parts.empty() || parts[0] != "signals") throw std::runtime_error("trace: missing signals");
    t.signal_names.assign(parts.begin() + 1, parts.end());
  }
  const auto sparts = split_ws(next_line("samples"));
  if (sparts.size() != 2 || sparts[0] != "samples") {
    throw std::runtime_error("trace: missing sample count");
  }
  const std::size_t n = static_cast<std::size_t>(parse_int(sparts[1]));
  for (std::size_t i = 0; i < n; ++i) {
    const auto parts = split_ws(next_line("sample"));
    if (parts.size() != t.signal_names.size() + 2) {
      throw std::runtime_error("trace: malformed sample line");
    }
    t.times.push_back(parse_double(parts[0]));
    std::vector<double> sig(t.signal_names.size());
    for (std::size_t d = 0; d < sig.size(); ++d) sig[d] = parse_double(parts[d + 1]);
    t.signals.push_back(std::move(sig));
    t.tokens.push_back(parts.back());
  }
  if (next_line("end") != "end") throw std::runtime_error("trace: missing 'end'");
  t.validate();
  return t;
}

}  // namespace modescout
