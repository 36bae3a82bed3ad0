#include "flipswap/language.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace flipswap {

namespace {

CostClass at_least_linear(CostClass c) {
  return c == CostClass::kQuadratic ? c : CostClass::kLinear;
}

CostClass max_cost(CostClass a, CostClass b) {
  return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

std::string repeat_pattern(std::string_view pattern, int n) {
  std::string out;
  out.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(out.size()) < n) {
    out += pattern;
  }
  out.resize(static_cast<std::size_t>(n));
  return out;
}

}  // namespace

const char* to_string(CostClass c) {
  switch (c) {
    case CostClass::kConstant: return "constant";
    case CostClass::kLinear: return "linear";
    case CostClass::kQuadratic: return "quadratic";
  }
  return "?";
}

MembershipTester::MembershipTester(LanguageSpec spec, CostClass cost, Predicate predicate)
    : state_(std::make_shared<const State>(State{std::move(spec), cost, std::move(predicate)})) {
  if (state_->spec.n < 1) {
    throw std::invalid_argument("tester length must be positive");
  }
  if (state_->spec.pivot != 0 && state_->spec.pivot != 1) {
    throw std::invalid_argument("pivot must be 0 or 1");
  }
}

bool MembershipTester::accepts(const BinaryString& s) const {
  if (s.size() != state_->spec.n) {
    throw std::invalid_argument("membership query has the wrong length");
  }
  return state_->predicate(s);
}

bool block_less(const Block& a, const Block& b) {
  // Lexicographic comparison of the run strings 0^zeros 1^ones: a longer
  // zero run sorts first, and on equal zero runs the shorter one run does.
  return a.zeros > b.zeros || (a.zeros == b.zeros && a.ones < b.ones);
}

std::vector<Block> block_decompose(const BinaryString& s) {
  std::vector<Block> blocks;
  const int n = s.size();
  int i = 1;
  while (i <= n) {
    Block b;
    while (i <= n && !s.bit(i)) {
      ++b.zeros;
      ++i;
    }
    while (i <= n && s.bit(i)) {
      ++b.ones;
      ++i;
    }
    blocks.push_back(b);
  }
  return blocks;
}

NecklaceScan necklace_scan(const BinaryString& s) {
  const int n = s.size();
  int p = 1;
  for (int i = 2; i <= n; ++i) {
    const bool c = s.bit(i);
    const bool d = s.bit(i - p);
    if (c < d) {
      return {false, 0};
    }
    if (c > d) {
      p = i;
    }
  }
  return {true, p};
}

MembershipTester tester_all(int n) {
  LanguageSpec spec{.name = "all", .n = n};
  return MembershipTester(std::move(spec), CostClass::kConstant,
                          [](const BinaryString&) { return true; });
}

MembershipTester tester_weight_le(int n, long long k) {
  if (k < 0) {
    throw std::invalid_argument("weight bound must be non-negative");
  }
  LanguageSpec spec{.name = "weight_le(" + std::to_string(k) + ")", .n = n, .k = k};
  return MembershipTester(std::move(spec), CostClass::kConstant,
                          [k](const BinaryString& s) { return s.weight() <= k; });
}

MembershipTester tester_lex_le(const BinaryString& gamma) {
  LanguageSpec spec{.name = "lex_le(" + gamma.to_string() + ")", .n = gamma.size(), .gamma = gamma};
  return MembershipTester(std::move(spec), CostClass::kLinear, [gamma](const BinaryString& s) {
    return lex_compare(s, gamma) != std::strong_ordering::greater;
  });
}

MembershipTester tester_inversions_le(int n, long long k) {
  LanguageSpec spec{.name = "inversions_le(" + std::to_string(k) + ")", .n = n, .k = k};
  return MembershipTester(std::move(spec), CostClass::kLinear, [k](const BinaryString& s) {
    long long ones = 0;
    long long inversions = 0;
    for (int i = 1; i <= s.size(); ++i) {
      if (s.bit(i)) {
        ++ones;
      } else {
        inversions += ones;
        if (inversions > k) {
          return false;
        }
      }
    }
    return inversions <= k;
  });
}

MembershipTester tester_transpositions_le(int n, long long k) {
  LanguageSpec spec{.name = "transpositions_le(" + std::to_string(k) + ")", .n = n, .k = k};
  // The minimum number of arbitrary swaps taking s to 0^{n-w} 1^w equals the
  // number of 1s sitting in the zero region, i.e. in positions 1..n-w.
  return MembershipTester(std::move(spec), CostClass::kLinear, [k](const BinaryString& s) {
    const int boundary = s.size() - s.weight();
    long long misplaced = 0;
    for (int i = 1; i <= boundary; ++i) {
      misplaced += s.bit(i);
    }
    return misplaced <= k;
  });
}

MembershipTester tester_vs_reversal(int n, bool strict, bool complemented) {
  std::string name = complemented ? "comp_reversal" : "reversal";
  name += strict ? "_lt" : "_le";
  LanguageSpec spec{.name = std::move(name), .n = n};
  return MembershipTester(std::move(spec), CostClass::kLinear,
                          [strict, complemented](const BinaryString& s) {
                            BinaryString rho = reverse(s);
                            if (complemented) {
                              rho = complement(rho);
                            }
                            const auto cmp = lex_compare(s, rho);
                            return strict ? cmp == std::strong_ordering::less
                                          : cmp != std::strong_ordering::greater;
                          });
}

MembershipTester tester_forbidden_run(int n, int t) {
  if (t < 1) {
    throw std::invalid_argument("run length must be at least 1");
  }
  LanguageSpec spec{.name = "forbidden_run(" + std::to_string(t) + ")", .n = n, .run_length = t};
  return MembershipTester(std::move(spec), CostClass::kLinear, [t](const BinaryString& s) {
    int zeros_after_one = -1;  // -1 until the first 1 is seen
    for (int i = 1; i <= s.size(); ++i) {
      if (s.bit(i)) {
        zeros_after_one = 0;
      } else if (zeros_after_one >= 0 && ++zeros_after_one >= t) {
        return false;
      }
    }
    return true;
  });
}

namespace {
MembershipTester make_forbidden_prefix(int n, std::optional<BinaryString> gamma) {
  if (gamma && gamma->size() > n - 1) {
    throw std::invalid_argument("forbidden prefix is too long");
  }
  std::string name = "forbidden_prefix(" + (gamma ? gamma->to_string() : std::string()) + ")";
  LanguageSpec spec{.name = std::move(name), .n = n, .gamma = gamma};
  return MembershipTester(std::move(spec), CostClass::kLinear,
                          [gamma](const BinaryString& s) {
                            if (!s.bit(1)) {
                              return true;
                            }
                            if (!gamma) {
                              return false;
                            }
                            for (int i = 1; i <= gamma->size(); ++i) {
                              if (s.bit(i + 1) != gamma->bit(i)) {
                                return true;
                              }
                            }
                            return false;
                          });
}
}  // namespace

MembershipTester tester_forbidden_prefix(int n, const BinaryString& gamma) {
  return make_forbidden_prefix(n, gamma);
}

MembershipTester tester_forbidden_prefix(int n) {
  return make_forbidden_prefix(n, std::nullopt);
}

MembershipTester tester_prefix_normal_0(int n) {
  LanguageSpec spec{.name = "prefix_normal", .n = n};
  // No window may contain more 0s than the prefix of the same length.
  return MembershipTester(std::move(spec), CostClass::kQuadratic, [](const BinaryString& s) {
    const int n = s.size();
    std::vector<int> z(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
      z[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i - 1)] + (s.bit(i) ? 0 : 1);
    }
    for (int len = 1; len <= n; ++len) {
      const int prefix_zeros = z[static_cast<std::size_t>(len)];
      for (int i = 1; i + len <= n; ++i) {
        if (z[static_cast<std::size_t>(i + len)] - z[static_cast<std::size_t>(i)] > prefix_zeros) {
          return false;
        }
      }
    }
    return true;
  });
}

MembershipTester tester_necklace(int n) {
  LanguageSpec spec{.name = "necklace", .n = n};
  return MembershipTester(std::move(spec), CostClass::kLinear, [](const BinaryString& s) {
    const NecklaceScan scan = necklace_scan(s);
    return scan.prenecklace && s.size() % scan.period == 0;
  });
}

MembershipTester tester_lyndon(int n) {
  LanguageSpec spec{.name = "lyndon", .n = n};
  return MembershipTester(std::move(spec), CostClass::kLinear, [](const BinaryString& s) {
    const NecklaceScan scan = necklace_scan(s);
    return scan.prenecklace && scan.period == s.size();
  });
}

MembershipTester tester_prenecklace(int n) {
  LanguageSpec spec{.name = "prenecklace", .n = n};
  return MembershipTester(std::move(spec), CostClass::kLinear, [](const BinaryString& s) {
    return necklace_scan(s).prenecklace;
  });
}

MembershipTester tester_pseudo_necklace(int n) {
  LanguageSpec spec{.name = "pseudo_necklace", .n = n};
  // The leftmost block must be lexicographically no larger than every other
  // block, so every necklace qualifies and the flip/swap-first operations
  // (which only shrink the leading block and grow the others) stay inside.
  return MembershipTester(std::move(spec), CostClass::kLinear, [](const BinaryString& s) {
    const std::vector<Block> blocks = block_decompose(s);
    for (std::size_t i = 1; i < blocks.size(); ++i) {
      if (block_less(blocks[i], blocks.front())) {
        return false;
      }
    }
    return true;
  });
}

MembershipTester tester_dyck_left_factor(int n, int arity) {
  if (arity < 2) {
    throw std::invalid_argument("Dyck arity must be at least 2");
  }
  LanguageSpec spec{.name = "dyck_left_factor(" + std::to_string(arity) + ")",
                    .n = n,
                    .pivot = 0,
                    .arity = arity};
  return MembershipTester(std::move(spec), CostClass::kLinear, [arity](const BinaryString& s) {
    long long ones = 0;
    long long zeros = 0;
    for (int i = 1; i <= s.size(); ++i) {
      if (s.bit(i)) {
        ++ones;
      } else if (++zeros > (arity - 1) * ones) {
        return false;
      }
    }
    return true;
  });
}

MembershipTester tester_dyck_word(int n, int arity) {
  if (arity < 2) {
    throw std::invalid_argument("Dyck arity must be at least 2");
  }
  LanguageSpec spec{.name = "dyck_word(" + std::to_string(arity) + ")",
                    .n = n,
                    .pivot = 0,
                    .arity = arity};
  return MembershipTester(std::move(spec), CostClass::kLinear, [arity, n](const BinaryString& s) {
    if (n % arity != 0 || s.weight() != n / arity) {
      return false;
    }
    long long ones = 0;
    long long zeros = 0;
    for (int i = 1; i <= s.size(); ++i) {
      if (s.bit(i)) {
        ++ones;
      } else if (++zeros > (arity - 1) * ones) {
        return false;
      }
    }
    return true;
  });
}

MembershipTester tester_knapsack(int n, std::vector<long long> weights, long long capacity) {
  if (static_cast<int>(weights.size()) != n) {
    throw std::invalid_argument("knapsack needs exactly one weight per position");
  }
  if (capacity < 0 || std::any_of(weights.begin(), weights.end(), [](long long w) { return w < 0; })) {
    throw std::invalid_argument("knapsack weights and capacity must be non-negative");
  }
  // The closure argument needs w_i >= w_{i+1}: reorder and remember where
  // each original item went.
  std::vector<int> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&weights](int a, int b) { return weights[static_cast<std::size_t>(a)] > weights[static_cast<std::size_t>(b)]; });
  std::vector<long long> sorted;
  sorted.reserve(weights.size());
  for (int idx : order) {
    sorted.push_back(weights[static_cast<std::size_t>(idx)]);
  }

  std::string name = "knapsack(";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    name += (i ? "," : "") + std::to_string(sorted[i]);
  }
  name += ";W=" + std::to_string(capacity) + ")";

  LanguageSpec spec{.name = std::move(name), .n = n, .weights = sorted,
                    .weight_order = std::move(order), .capacity = capacity};
  std::vector<long long> w = sorted;
  return MembershipTester(std::move(spec), CostClass::kLinear,
                          [w = std::move(w), capacity](const BinaryString& s) {
                            long long total = 0;
                            for (int i = 1; i <= s.size(); ++i) {
                              if (s.bit(i)) {
                                total += w[static_cast<std::size_t>(i - 1)];
                                if (total > capacity) {
                                  return false;
                                }
                              }
                            }
                            return true;
                          });
}

MembershipTester tester_from_predicate(std::string name, int n, int pivot, CostClass cost,
                                       MembershipTester::Predicate predicate) {
  LanguageSpec spec{.name = std::move(name), .n = n, .pivot = pivot};
  return MembershipTester(std::move(spec), cost, std::move(predicate));
}

namespace {
void require_compatible(const MembershipTester& a, const MembershipTester& b) {
  if (a.length() != b.length()) {
    throw std::invalid_argument("combinator operands must have the same length");
  }
  if (a.pivot() != b.pivot()) {
    throw std::invalid_argument("combinator operands must have the same pivot");
  }
}
}  // namespace

MembershipTester union_of(const MembershipTester& a, const MembershipTester& b) {
  require_compatible(a, b);
  LanguageSpec spec{.name = "(" + a.spec().name + " | " + b.spec().name + ")",
                    .n = a.length(), .pivot = a.pivot()};
  return MembershipTester(std::move(spec), max_cost(a.cost_class(), b.cost_class()),
                          [a, b](const BinaryString& s) { return a.accepts(s) || b.accepts(s); });
}

MembershipTester intersection_of(const MembershipTester& a, const MembershipTester& b) {
  require_compatible(a, b);
  LanguageSpec spec{.name = "(" + a.spec().name + " & " + b.spec().name + ")",
                    .n = a.length(), .pivot = a.pivot()};
  return MembershipTester(std::move(spec), max_cost(a.cost_class(), b.cost_class()),
                          [a, b](const BinaryString& s) { return a.accepts(s) && b.accepts(s); });
}

MembershipTester quotient_of(const MembershipTester& a, const BinaryString& gamma) {
  if (gamma.size() >= a.length()) {
    throw std::invalid_argument("quotient suffix must be shorter than the language length");
  }
  LanguageSpec spec{.name = "(" + a.spec().name + " / " + gamma.to_string() + ")",
                    .n = a.length() - gamma.size(), .pivot = a.pivot(), .gamma = gamma};
  return MembershipTester(std::move(spec), at_least_linear(a.cost_class()),
                          [a, gamma](const BinaryString& s) { return a.accepts(concat(s, gamma)); });
}

MembershipTester pivot_wrap(const MembershipTester& t) {
  LanguageSpec spec = t.spec();
  spec.pivot = 1 - spec.pivot;
  return MembershipTester(std::move(spec), at_least_linear(t.cost_class()),
                          [t](const BinaryString& s) { return t.accepts(complement(s)); });
}

const std::vector<LanguageInfo>& language_catalog() {
  static const std::vector<LanguageInfo> catalog = {
      {"all", "", true, true, false, "every length-n string"},
      {"weight_le", "(k)", true, true, false, "weight <= k (pivot 0: weight >= k)"},
      {"lex_le", "(gamma)", true, true, false, "strings <= gamma (pivot 0: >= gamma)"},
      {"inversions_le", "(k)", true, true, false, "at most k inversions re 0*1* (pivot 0: re 1*0*)"},
      {"transpositions_le", "(k)", true, true, false, "at most k swaps from sorted form"},
      {"reversal_lt", "", true, true, false, "strings < their reversal (pivot 0: >)"},
      {"reversal_le", "", true, true, false, "strings <= their reversal, aka neckties"},
      {"neckties", "", true, true, false, "alias of reversal_le"},
      {"comp_reversal_lt", "", true, true, false, "strings < their complemented reversal"},
      {"comp_reversal_le", "", true, true, false, "strings <= their complemented reversal"},
      {"forbidden_run", "(t)", true, true, false, "no substring 1 0^t (pivot 0: 0 1^t)"},
      {"forbidden_prefix", "(gamma?)", true, true, false, "no prefix 1 gamma (pivot 0: 0 gamma)"},
      {"prefix_normal", "", true, true, false, "0-prefix-normal words (pivot 0: 1-prefix-normal)"},
      {"necklace", "", true, true, false, "smallest-rotation representatives (pivot 0: largest)"},
      {"lyndon", "", true, true, false, "aperiodic necklaces"},
      {"prenecklace", "", true, true, false, "prefixes of necklaces"},
      {"pseudo_necklace", "", true, true, false, "leftmost 0*1* block is minimal (pivot 0: 1*0*)"},
      {"dyck_left_factor", "(k)", false, true, false, "left factors of k-ary Dyck words"},
      {"knapsack", "", true, false, false, "subset weights within capacity (uses --weights/--capacity)"},
      {"dyck_word", "(k)", false, true, true, "full k-ary Dyck words; closure-check negative control"},
  };
  return catalog;
}

namespace {

long long arg_int(const std::string& name, const std::vector<std::string>& args, std::size_t i) {
  try {
    return std::stoll(args.at(i));
  } catch (const std::exception&) {
    throw std::invalid_argument(name + ": argument " + std::to_string(i + 1) + " must be an integer");
  }
}

BinaryString arg_bits(const std::string& name, const std::vector<std::string>& args, std::size_t i) {
  const std::string& raw = args.at(i);
  if (raw.empty() || raw.find_first_not_of("01") != std::string::npos) {
    throw std::invalid_argument(name + ": argument " + std::to_string(i + 1) + " must be a binary string");
  }
  return BinaryString(raw);
}

void expect_args(const std::string& name, const std::vector<std::string>& args, std::size_t count) {
  if (args.size() != count) {
    throw std::invalid_argument(name + " expects " + std::to_string(count) + " argument(s)");
  }
}

// Rebuilds `inner`'s complement image under the user-facing spec.
MembershipTester wrap_with_spec(const MembershipTester& inner, LanguageSpec spec) {
  return MembershipTester(std::move(spec), at_least_linear(inner.cost_class()),
                          [inner](const BinaryString& s) { return inner.accepts(complement(s)); });
}

}  // namespace

MembershipTester make_language(const std::string& raw_name, int n, int pivot,
                               const std::vector<std::string>& args,
                               const KnapsackParams* knapsack) {
  if (pivot != 0 && pivot != 1) {
    throw std::invalid_argument("pivot must be 0 or 1");
  }
  const std::string name = raw_name == "neckties" ? "reversal_le" : raw_name;

  if (name == "all") {
    expect_args(name, args, 0);
    return pivot == 1 ? tester_all(n) : pivot_wrap(tester_all(n));
  }
  if (name == "weight_le") {
    expect_args(name, args, 1);
    const long long k = arg_int(name, args, 0);
    if (pivot == 1) {
      return tester_weight_le(n, k);
    }
    if (k < 0 || k > n) {
      throw std::invalid_argument("weight bound must lie in [0, n] under pivot 0");
    }
    LanguageSpec spec{.name = "weight_le(" + std::to_string(k) + ")", .n = n, .pivot = 0, .k = k};
    return wrap_with_spec(tester_weight_le(n, n - k), std::move(spec));
  }
  if (name == "lex_le") {
    expect_args(name, args, 1);
    BinaryString gamma = arg_bits(name, args, 0);
    if (gamma.size() != n) {
      throw std::invalid_argument("lex_le bound must have length n");
    }
    if (pivot == 1) {
      return tester_lex_le(gamma);
    }
    LanguageSpec spec{.name = "lex_le(" + gamma.to_string() + ")", .n = n, .pivot = 0, .gamma = gamma};
    return wrap_with_spec(tester_lex_le(complement(gamma)), std::move(spec));
  }
  if (name == "inversions_le" || name == "transpositions_le") {
    expect_args(name, args, 1);
    const long long k = arg_int(name, args, 0);
    MembershipTester base = name == "inversions_le" ? tester_inversions_le(n, k)
                                                    : tester_transpositions_le(n, k);
    if (pivot == 1) {
      return base;
    }
    LanguageSpec spec = base.spec();
    spec.pivot = 0;
    return wrap_with_spec(base, std::move(spec));
  }
  if (name == "reversal_lt" || name == "reversal_le" || name == "comp_reversal_lt" ||
      name == "comp_reversal_le") {
    expect_args(name, args, 0);
    const bool strict = name.ends_with("_lt");
    const bool complemented = name.starts_with("comp_");
    MembershipTester base = tester_vs_reversal(n, strict, complemented);
    if (pivot == 1) {
      return base;
    }
    LanguageSpec spec = base.spec();
    spec.pivot = 0;
    return wrap_with_spec(base, std::move(spec));
  }
  if (name == "forbidden_run") {
    expect_args(name, args, 1);
    const int t = static_cast<int>(arg_int(name, args, 0));
    MembershipTester base = tester_forbidden_run(n, t);
    if (pivot == 1) {
      return base;
    }
    LanguageSpec spec = base.spec();
    spec.pivot = 0;
    return wrap_with_spec(base, std::move(spec));
  }
  if (name == "forbidden_prefix") {
    if (args.size() > 1) {
      throw std::invalid_argument("forbidden_prefix expects at most one argument");
    }
    if (args.empty()) {
      MembershipTester base = tester_forbidden_prefix(n);
      if (pivot == 1) {
        return base;
      }
      LanguageSpec spec = base.spec();
      spec.pivot = 0;
      return wrap_with_spec(base, std::move(spec));
    }
    BinaryString gamma = arg_bits(name, args, 0);
    if (pivot == 1) {
      return tester_forbidden_prefix(n, gamma);
    }
    LanguageSpec spec{.name = "forbidden_prefix(" + gamma.to_string() + ")", .n = n, .pivot = 0,
                      .gamma = gamma};
    return wrap_with_spec(tester_forbidden_prefix(n, complement(gamma)), std::move(spec));
  }
  if (name == "prefix_normal" || name == "necklace" || name == "lyndon" ||
      name == "prenecklace" || name == "pseudo_necklace") {
    expect_args(name, args, 0);
    MembershipTester base = name == "prefix_normal" ? tester_prefix_normal_0(n)
                            : name == "necklace"    ? tester_necklace(n)
                            : name == "lyndon"      ? tester_lyndon(n)
                            : name == "prenecklace" ? tester_prenecklace(n)
                                                    : tester_pseudo_necklace(n);
    if (pivot == 1) {
      return base;
    }
    LanguageSpec spec = base.spec();
    spec.pivot = 0;
    return wrap_with_spec(base, std::move(spec));
  }
  if (name == "dyck_left_factor" || name == "dyck_word") {
    expect_args(name, args, 1);
    if (pivot != 0) {
      throw std::invalid_argument(name + " is defined for pivot 0 only (pass --pivot 0)");
    }
    const int arity = static_cast<int>(arg_int(name, args, 0));
    return name == "dyck_left_factor" ? tester_dyck_left_factor(n, arity)
                                      : tester_dyck_word(n, arity);
  }
  if (name == "knapsack") {
    expect_args(name, args, 0);
    if (pivot != 1) {
      throw std::invalid_argument("knapsack is defined for pivot 1 only");
    }
    if (knapsack == nullptr) {
      throw std::invalid_argument("knapsack needs --weights and --capacity");
    }
    return tester_knapsack(n, knapsack->weights, knapsack->capacity);
  }
  throw std::invalid_argument("unknown language: " + raw_name);
}

std::vector<MembershipTester> standard_sweep(int n) {
  std::vector<MembershipTester> out;
  const std::string gamma_a = repeat_pattern("1001", n);
  const std::string gamma_b = repeat_pattern("0110", n);
  const std::string prefix_gamma = std::string("01").substr(0, static_cast<std::size_t>(std::max(0, std::min(2, n - 1))));

  std::vector<long long> k_grid = {0, 1, 2, static_cast<long long>(n)};
  std::sort(k_grid.begin(), k_grid.end());
  k_grid.erase(std::unique(k_grid.begin(), k_grid.end()), k_grid.end());
  k_grid.erase(std::remove_if(k_grid.begin(), k_grid.end(),
                              [n](long long k) { return k < 0 || k > n; }),
               k_grid.end());

  for (int pivot : {1, 0}) {
    out.push_back(make_language("all", n, pivot, {}));
    for (long long k : k_grid) {
      out.push_back(make_language("weight_le", n, pivot, {std::to_string(k)}));
      out.push_back(make_language("inversions_le", n, pivot, {std::to_string(k)}));
      out.push_back(make_language("transpositions_le", n, pivot, {std::to_string(k)}));
    }
    out.push_back(make_language("lex_le", n, pivot, {gamma_a}));
    out.push_back(make_language("lex_le", n, pivot, {gamma_b}));
    for (const char* rev : {"reversal_lt", "reversal_le", "comp_reversal_lt", "comp_reversal_le"}) {
      out.push_back(make_language(rev, n, pivot, {}));
    }
    out.push_back(make_language("forbidden_run", n, pivot, {"1"}));
    out.push_back(make_language("forbidden_run", n, pivot, {"2"}));
    out.push_back(make_language("forbidden_prefix", n, pivot, {}));
    if (!prefix_gamma.empty()) {
      out.push_back(make_language("forbidden_prefix", n, pivot, {prefix_gamma}));
    }
    out.push_back(make_language("prefix_normal", n, pivot, {}));
    out.push_back(make_language("necklace", n, pivot, {}));
    out.push_back(make_language("lyndon", n, pivot, {}));
    out.push_back(make_language("prenecklace", n, pivot, {}));
    out.push_back(make_language("pseudo_necklace", n, pivot, {}));
  }

  out.push_back(make_language("dyck_left_factor", n, 0, {"2"}));
  out.push_back(make_language("dyck_left_factor", n, 0, {"3"}));

  KnapsackParams ladder;
  for (int i = n; i >= 1; --i) {
    ladder.weights.push_back(i);
  }
  ladder.capacity = n + 1;
  out.push_back(make_language("knapsack", n, 1, {}, &ladder));

  KnapsackParams unit;
  unit.weights.assign(static_cast<std::size_t>(n), 1);
  unit.capacity = n / 2;
  out.push_back(make_language("knapsack", n, 1, {}, &unit));

  return out;
}

}  // namespace flipswap
