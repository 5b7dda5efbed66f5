#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "modescout/regions.hpp"
#include "modescout/trace.hpp"

namespace modescout::stl {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Bounded STL fragment over sampled traces. Atoms compare a named continuous
// signal against a threshold (sig < c, and its negation sig >= c) or test the
// discrete token (mode == t / mode != t). Operators: not, and, implies,
// always[a,b], eventually[a,b].
class Formula {
 public:
  enum class Kind {
    SignalLess,
    SignalGreaterEq,
    TokenEq,
    TokenNeq,
    Not,
    And,
    Implies,
    Always,
    Eventually,
  };

  static FormulaPtr signal_less(std::string signal, double threshold);
  static FormulaPtr signal_greater_eq(std::string signal, double threshold);
  static FormulaPtr token_eq(std::string token);
  static FormulaPtr token_neq(std::string token);
  static FormulaPtr negate(FormulaPtr f);
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr always(double a, double b, FormulaPtr f);
  static FormulaPtr eventually(double a, double b, FormulaPtr f);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }  // signal or token
  double threshold() const { return threshold_; }
  double window_lo() const { return lo_; }
  double window_hi() const { return hi_; }
  const FormulaPtr& left() const { return children_[0]; }
  const FormulaPtr& right() const { return children_[1]; }

  std::string str() const;  // round-trips through parse_formula

 private:
  Formula() = default;
  Kind kind_ = Kind::SignalLess;
  std::string name_;
  double threshold_ = 0.0;
  double lo_ = 0.0, hi_ = 0.0;
  std::array<FormulaPtr, 2> children_;
};

// Grammar (documented in docs/formats.md):
//   formula  := conjunct ('implies' formula)?
//   conjunct := unary ('and' unary)*
//   unary    := 'not' unary
//             | ('always'|'eventually') '[' num ',' num ']' unary
//             | '(' formula ')' | atom
//   atom     := ident '<' num | ident '>=' num | 'mode' '==' token | 'mode' '!=' token
FormulaPtr parse_formula(std::string_view text);

struct MonitorStats {
  // Temporal windows inside the trace horizon that contained no sample.
  std::size_t empty_windows = 0;
};

// Sample-based boolean semantics evaluated at time 0. always[a,b] holds at t
// iff the child holds at every sample in [t+a, t+b] clipped to the trace;
// eventually requires some sample. A window with no samples satisfies always
// and falsifies eventually (and, when not caused by trace truncation, bumps
// stats->empty_windows). Throws std::invalid_argument on an empty trace or an
// unknown signal name.
bool monitor(const FormulaPtr& formula, const SimTrace& trace, MonitorStats* stats = nullptr);

// One pass/fail bit per formula; usable as a mode sequence (symbols "0"/"1").
struct BitVector {
  std::vector<bool> bits;
  ModeSequence to_mode_sequence() const;
};

BitVector bitvector_mode_sequence(const SimTrace& trace, const std::vector<FormulaPtr>& suite,
                                  MonitorStats* stats = nullptr);

// Suite file `stlsuite v1`: one formula per line, '#' comments.
std::vector<FormulaPtr> parse_suite(std::istream& in);
std::vector<FormulaPtr> load_suite_file(const std::string& path);
void save_suite(std::ostream& out, const std::vector<FormulaPtr>& suite);

// The 13-bit automatic-transmission safety suite over signals v and omega and
// gear tokens g1..g4.
std::vector<FormulaPtr> at13_suite();

}  // namespace modescout::stl
