#include "flipswap/engine.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace flipswap {

namespace {

// The t-search of the successor rule: t starts at the leftmost 1 (n+1 for
// 0^n) and walks left while flipping the bit before it stays inside
// S union {0^n}.  `member` must already adjoin 0^n.  Every query made by
// the loop is counted, including the final failing one.
template <typename M>
std::pair<int, int> t_search(const BinaryString& alpha, M&& member) {
  const int n = alpha.size();
  int t = alpha.leftmost_one();
  int probes = 0;
  BinaryString scratch = alpha;
  while (t > 1) {
    scratch.flip_bit(t - 1);
    const bool inside = member(scratch);
    scratch.flip_bit(t - 1);
    ++probes;
    if (!inside) {
      break;
    }
    --t;
  }
  if (t > n) {
    // Only possible when 0^{n-1}1 is missing, i.e. S union {0^n} is trivial.
    throw std::runtime_error("language too small or not a flip-swap language");
  }
  return {t, probes};
}

template <typename M>
SuccessorStep successor_core(const BinaryString& alpha, M&& member, int* loop_probes) {
  const int n = alpha.size();
  SuccessorStep step;
  if (alpha.weight() == 1 && alpha.bit(n)) {
    step.next = BinaryString::zeros(n);
    step.case_label = CaseLabel::f1;
    step.changed = {n, 0};
    step.changed_count = 1;
    return step;
  }
  if (alpha.weight() % 2 == 0) {
    const auto [t, probes] = t_search(alpha, member);
    step.probes = probes;
    if (loop_probes != nullptr) {
      *loop_probes = probes;
    }
    step.t = t;
    BinaryString next = alpha;
    if (t != 1) {
      next.flip_bit(t - 1);
      next.flip_bit(t);
      if (member(next)) {
        step.case_label = CaseLabel::f3;
        step.changed = {t - 1, t};
        step.changed_count = 2;
        step.next = std::move(next);
        return step;
      }
      next.flip_bit(t - 1);  // back to flip(alpha, t)
    } else {
      next.flip_bit(1);
    }
    step.case_label = CaseLabel::f2;
    step.changed = {t, 0};
    step.changed_count = 1;
    step.next = std::move(next);
    return step;
  }
  const int l = alpha.leftmost_one();
  BinaryString next = flip(alpha, l + 1);
  if (member(next)) {
    step.case_label = CaseLabel::f5;
    step.changed = {l + 1, 0};
    step.changed_count = 1;
    step.next = std::move(next);
    return step;
  }
  next.flip_bit(l);
  step.case_label = CaseLabel::f4;
  step.changed = {l, l + 1};
  step.changed_count = 2;
  step.next = std::move(next);
  return step;
}

BinaryString zero_flipped_last(int n) {
  BinaryString s(n);
  s.flip_bit(n);
  return s;  // 0^{n-1}1
}

}  // namespace

const char* to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::f1: return "f1";
    case CaseLabel::f2: return "f2";
    case CaseLabel::f3: return "f3";
    case CaseLabel::f4: return "f4";
    case CaseLabel::f5: return "f5";
  }
  return "?";
}

std::string SuccessorStep::op_text() const {
  if (changed_count == 2) {
    return "flip2(" + std::to_string(changed[0]) + "," + std::to_string(changed[1]) + ")";
  }
  return "flip(" + std::to_string(changed[0]) + ")";
}

BinaryString tau(const BinaryString& s) {
  if (s.all_zero()) {
    return s;
  }
  const int l = s.leftmost_one();
  if (l == s.size() || s.bit(l + 1)) {
    return flip(s, l);
  }
  return swap_bits(s, l, l + 1);
}

std::vector<PosetNode> poset_tree(int n) {
  if (n < 1) {
    throw std::invalid_argument("poset_tree requires n >= 1");
  }
  if (n > kEnumerationBound) {
    throw std::invalid_argument("poset_tree is limited to the enumeration bound");
  }
  std::vector<PosetNode> nodes;
  const std::uint64_t total = std::uint64_t{1} << n;
  nodes.reserve(total);
  for (std::uint64_t v = 0; v < total; ++v) {
    BinaryString value = BinaryString::from_ulong(n, v);
    std::optional<BinaryString> parent;
    if (v != 0) {
      parent = tau(value);
    }
    nodes.push_back(PosetNode{std::move(value), std::move(parent)});
  }
  return nodes;
}

std::string poset_edges_text(const std::vector<PosetNode>& nodes) {
  std::string out;
  for (const PosetNode& node : nodes) {
    if (node.parent) {
      out += node.value.to_string();
      out += ' ';
      out += node.parent->to_string();
      out += '\n';
    }
  }
  return out;
}

std::string poset_dot(const std::vector<PosetNode>& nodes) {
  std::string out = "digraph flip_swap_poset {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const PosetNode& node : nodes) {
    if (node.parent) {
      out += "  \"" + node.value.to_string() + "\" -> \"" + node.parent->to_string() + "\";\n";
    }
  }
  out += "}\n";
  return out;
}

std::string ClosureReport::to_text() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << " n=" << n << " pivot=" << pivot << " |S|=" << set_size
     << " zero_in_set=" << (contains_zero ? "yes" : "no");
  for (const ClosureViolation& v : violations) {
    os << "\n  counterexample: " << v.str << " --" << v.op << "--> " << v.image;
  }
  return os.str();
}

std::string ClosureReport::to_json() const {
  nlohmann::json j;
  j["type"] = "closure_report";
  j["pass"] = pass;
  j["n"] = n;
  j["pivot"] = pivot;
  j["set_size"] = set_size;
  j["zero_in_set"] = contains_zero;
  nlohmann::json rows = nlohmann::json::array();
  for (const ClosureViolation& v : violations) {
    rows.push_back({{"string", v.str.to_string()},
                    {"op", v.op},
                    {"image", v.image.to_string()}});
  }
  j["counterexamples"] = std::move(rows);
  return j.dump();
}

namespace {

struct EnumeratedSet {
  std::vector<char> member;  // indexed by normalized (pivot-1 frame) value
  std::uint64_t size = 0;
};

EnumeratedSet enumerate_set(const MembershipTester& tester) {
  const int n = tester.length();
  if (n > kEnumerationBound) {
    throw std::invalid_argument("closure checks are limited to the enumeration bound");
  }
  const bool pivot0 = tester.pivot() == 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : total - 1;
  EnumeratedSet set;
  set.member.assign(total, 0);
  for (std::uint64_t v = 0; v < total; ++v) {
    const std::uint64_t user_value = pivot0 ? (~v & mask) : v;
    if (tester.accepts(BinaryString::from_ulong(n, user_value))) {
      set.member[v] = 1;
      ++set.size;
    }
  }
  return set;
}

BinaryString to_user_frame(const BinaryString& s, bool pivot0) {
  return pivot0 ? complement(s) : s;
}

}  // namespace

ClosureReport check_flip_swap(const MembershipTester& tester, int max_violations) {
  const int n = tester.length();
  const bool pivot0 = tester.pivot() == 0;
  const EnumeratedSet set = enumerate_set(tester);

  ClosureReport report;
  report.n = n;
  report.pivot = tester.pivot();
  report.set_size = set.size;
  report.contains_zero = set.member[0] != 0;

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t v = 1; v < total; ++v) {
    if (!set.member[v]) {
      continue;
    }
    const BinaryString alpha = BinaryString::from_ulong(n, v);
    const int l = alpha.leftmost_one();

    const BinaryString flipped = flip(alpha, l);
    const std::uint64_t fv = flipped.to_ulong();
    if (fv != 0 && !set.member[fv]) {
      if (static_cast<int>(report.violations.size()) < max_violations) {
        report.violations.push_back(
            {to_user_frame(alpha, pivot0), "flip-first", to_user_frame(flipped, pivot0)});
      }
    }
    if (l < n) {
      const BinaryString swapped = swap_bits(alpha, l, l + 1);
      const std::uint64_t sv = swapped.to_ulong();
      if (sv != 0 && !set.member[sv]) {
        if (static_cast<int>(report.violations.size()) < max_violations) {
          report.violations.push_back(
              {to_user_frame(alpha, pivot0), "swap-first", to_user_frame(swapped, pivot0)});
        }
      }
    }
  }
  report.pass = report.violations.empty();
  return report;
}

ClosureReport check_ideal(const MembershipTester& tester, int max_violations) {
  const int n = tester.length();
  const bool pivot0 = tester.pivot() == 0;
  const EnumeratedSet set = enumerate_set(tester);

  ClosureReport report;
  report.n = n;
  report.pivot = tester.pivot();
  report.set_size = set.size;
  report.contains_zero = set.member[0] != 0;

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t v = 1; v < total; ++v) {
    if (!set.member[v]) {
      continue;
    }
    const BinaryString alpha = BinaryString::from_ulong(n, v);
    const BinaryString parent = tau(alpha);
    const std::uint64_t pv = parent.to_ulong();
    if (pv != 0 && !set.member[pv]) {
      if (static_cast<int>(report.violations.size()) < max_violations) {
        report.violations.push_back(
            {to_user_frame(alpha, pivot0), "tau", to_user_frame(parent, pivot0)});
      }
    }
  }
  report.pass = report.violations.empty();
  return report;
}

namespace {

// Normalized membership with 0^n adjoined; no probe accounting.
bool member_plain(const MembershipTester& tester, const BinaryString& normalized) {
  if (normalized.all_zero()) {
    return true;
  }
  if (tester.pivot() == 0) {
    return tester.accepts(complement(normalized));
  }
  return tester.accepts(normalized);
}

void require_member(const BinaryString& alpha, const MembershipTester& tester,
                    const BinaryString& normalized) {
  if (!normalized.all_zero() && !member_plain(tester, normalized)) {
    throw std::invalid_argument("not a member of the language");
  }
  (void)alpha;
}

}  // namespace

std::pair<int, int> compute_t(const BinaryString& alpha, const MembershipTester& tester) {
  const BinaryString normalized = tester.pivot() == 0 ? complement(alpha) : alpha;
  require_member(alpha, tester, normalized);
  if (normalized.weight() % 2 != 0) {
    throw std::invalid_argument("compute_t requires even weight");
  }
  return t_search(normalized, [&tester](const BinaryString& s) { return member_plain(tester, s); });
}

SuccessorStep successor(const BinaryString& alpha, const MembershipTester& tester) {
  const bool pivot0 = tester.pivot() == 0;
  const BinaryString normalized = pivot0 ? complement(alpha) : alpha;
  require_member(alpha, tester, normalized);
  const int n = alpha.size();
  if (!member_plain(tester, zero_flipped_last(n))) {
    throw std::runtime_error("no successor: the language holds a single string");
  }
  SuccessorStep step = successor_core(
      normalized, [&tester](const BinaryString& s) { return member_plain(tester, s); }, nullptr);
  if (pivot0) {
    step.next = complement(step.next);
  }
  return step;
}

GenerationRun::GenerationRun(MembershipTester tester)
    : tester_(std::move(tester)), pivot0_(tester_.pivot() == 0), current_(tester_.length()) {
  const int n = tester_.length();
  step_limit_ = n >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) + 2;
}

bool GenerationRun::member(const BinaryString& s) {
  if (s.all_zero()) {
    return true;
  }
  ++stats_.total_probes;
  return pivot0_ ? tester_.accepts(complement(s)) : tester_.accepts(s);
}

SuccessorStep GenerationRun::step_from(const BinaryString& alpha) {
  if (++steps_ > step_limit_) {
    throw std::runtime_error("non-terminating generation: predicate is not a flip-swap language");
  }
  int loop_probes = 0;
  SuccessorStep step =
      successor_core(alpha, [this](const BinaryString& s) { return member(s); }, &loop_probes);
  stats_.loop_probes += static_cast<std::uint64_t>(loop_probes);
  return step;
}

std::optional<BinaryString> GenerationRun::next() {
  if (finished_) {
    return std::nullopt;
  }
  if (!started_) {
    started_ = true;
    const int n = tester_.length();
    zero_in_set_ = pivot0_ ? tester_.accepts(BinaryString::ones(n))
                           : tester_.accepts(BinaryString::zeros(n));
    ++stats_.total_probes;
    if (!member(zero_flipped_last(n))) {
      // S union {0^n} is trivial: at most the all-zeros string itself.
      singleton_ = true;
      finished_ = true;
      if (zero_in_set_) {
        ++emitted_;
        has_annotation_ = false;
        return pivot0_ ? BinaryString::ones(n) : BinaryString::zeros(n);
      }
      return std::nullopt;
    }
    if (!zero_in_set_) {
      current_ = step_from(current_).next;  // skip the adjoined 0^n
    }
  }
  SuccessorStep step = step_from(current_);
  BinaryString result = pivot0_ ? complement(current_) : current_;
  current_ = step.next;
  if (pivot0_) {
    step.next = complement(step.next);
  }
  annotation_ = std::move(step);
  has_annotation_ = true;
  ++emitted_;
  if (current_.all_zero()) {
    finished_ = true;
  }
  return result;
}

Listing generate(const MembershipTester& tester, ProbeStats* stats) {
  GenerationRun run(tester);
  Listing listing;
  listing.n = tester.length();
  while (auto s = run.next()) {
    listing.strings.push_back(std::move(*s));
  }
  listing.cyclic = run.cyclic();
  if (stats != nullptr) {
    *stats = run.stats();
  }
  return listing;
}

}  // namespace flipswap
