#include "flipswap/oracle.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace flipswap {

Listing filtered_brgc(const MembershipTester& tester, int n) {
  if (n != tester.length()) {
    throw std::invalid_argument("filtered_brgc length does not match the tester");
  }
  if (n > kEnumerationBound) {
    throw std::invalid_argument("filtered_brgc is limited to the enumeration bound");
  }
  const bool pivot0 = tester.pivot() == 0;
  Listing base = brgc_list(n);
  Listing out;
  out.n = n;
  for (BinaryString& s : base.strings) {
    const BinaryString candidate = pivot0 ? complement(s) : std::move(s);
    if (tester.accepts(candidate)) {
      out.strings.push_back(candidate);
    }
  }
  out.cyclic = tester.accepts(pivot0 ? BinaryString::ones(n) : BinaryString::zeros(n));
  return out;
}

GrayReport gray_stats(const Listing& listing) {
  GrayReport report;
  report.count = listing.strings.size();
  for (std::size_t i = 1; i < listing.strings.size(); ++i) {
    const int d = hamming_distance(listing.strings[i - 1], listing.strings[i]);
    report.max_adjacent = std::max(report.max_adjacent, d);
    ++report.histogram[d];
  }
  if (listing.strings.size() > 1) {
    report.wrap_distance = hamming_distance(listing.strings.back(), listing.strings.front());
  }
  return report;
}

std::string GrayReport::to_text() const {
  std::ostringstream os;
  os << "strings=" << count << " max_adjacent=" << max_adjacent
     << " wrap_distance=" << wrap_distance << " cyclic2=" << (cyclic2() ? "yes" : "no");
  if (!histogram.empty()) {
    os << " histogram:";
    for (const auto& [distance, pairs] : histogram) {
      os << ' ' << distance << ':' << pairs;
    }
  }
  return os.str();
}

std::string GrayReport::to_json() const {
  nlohmann::json j;
  j["type"] = "gray_stats";
  j["strings"] = count;
  j["max_adjacent"] = max_adjacent;
  j["wrap_distance"] = wrap_distance;
  j["cyclic2"] = cyclic2();
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [distance, pairs] : histogram) {
    hist[std::to_string(distance)] = pairs;
  }
  j["histogram"] = std::move(hist);
  return j.dump();
}

namespace naive {

namespace {

BinaryString rotate_left(const BinaryString& s, int by) {
  const int n = s.size();
  BinaryString out(n);
  for (int i = 1; i <= n; ++i) {
    const int from = (i - 1 + by) % n + 1;
    if (s.bit(from)) {
      out.set_bit(i, true);
    }
  }
  return out;
}

}  // namespace

bool is_necklace(const BinaryString& s) {
  for (int r = 1; r < s.size(); ++r) {
    if (lex_compare(rotate_left(s, r), s) == std::strong_ordering::less) {
      return false;
    }
  }
  return true;
}

bool is_lyndon(const BinaryString& s) {
  for (int r = 1; r < s.size(); ++r) {
    if (lex_compare(rotate_left(s, r), s) != std::strong_ordering::greater) {
      return false;
    }
  }
  return true;
}

bool is_prenecklace(const BinaryString& s) {
  if (is_necklace(s)) {
    return true;
  }
  const int n = s.size();
  for (int extra = 1; extra <= n; ++extra) {
    const std::uint64_t combos = std::uint64_t{1} << extra;
    for (std::uint64_t bits = 0; bits < combos; ++bits) {
      BinaryString candidate = s;
      for (int b = 0; b < extra; ++b) {
        candidate.push_back(((bits >> b) & 1) != 0);
      }
      if (is_necklace(candidate)) {
        return true;
      }
    }
  }
  return false;
}

bool is_prefix_normal_0(const BinaryString& s) {
  const int n = s.size();
  for (int len = 1; len <= n; ++len) {
    int prefix_zeros = 0;
    for (int i = 1; i <= len; ++i) {
      prefix_zeros += s.bit(i) ? 0 : 1;
    }
    for (int start = 2; start + len - 1 <= n; ++start) {
      int window_zeros = 0;
      for (int i = start; i <= start + len - 1; ++i) {
        window_zeros += s.bit(i) ? 0 : 1;
      }
      if (window_zeros > prefix_zeros) {
        return false;
      }
    }
  }
  return true;
}

long long inversion_count(const BinaryString& s) {
  long long count = 0;
  for (int i = 1; i <= s.size(); ++i) {
    for (int j = i + 1; j <= s.size(); ++j) {
      if (s.bit(i) && !s.bit(j)) {
        ++count;
      }
    }
  }
  return count;
}

int transposition_count(const BinaryString& s) {
  const int n = s.size();
  BinaryString target(n);
  for (int i = n - s.weight() + 1; i <= n; ++i) {
    target.set_bit(i, true);
  }
  if (s == target) {
    return 0;
  }
  if (n > 64) {
    throw std::invalid_argument("transposition BFS is limited to n <= 64");
  }
  std::unordered_map<std::uint64_t, int> distance;
  std::deque<BinaryString> queue;
  distance[s.to_ulong()] = 0;
  queue.push_back(s);
  const std::uint64_t goal = target.to_ulong();
  while (!queue.empty()) {
    const BinaryString cur = queue.front();
    queue.pop_front();
    const int d = distance[cur.to_ulong()];
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (cur.bit(i) == cur.bit(j)) {
          continue;
        }
        const BinaryString nxt = swap_bits(cur, i, j);
        const std::uint64_t key = nxt.to_ulong();
        if (distance.contains(key)) {
          continue;
        }
        if (key == goal) {
          return d + 1;
        }
        distance[key] = d + 1;
        queue.push_back(nxt);
      }
    }
  }
  throw std::logic_error("swap moves must reach the sorted form");
}

MembershipTester tester(const std::string& name, int n) {
  if (n > 14) {
    throw std::invalid_argument("naive testers are limited to n <= 14");
  }
  LanguageSpec spec{.name = "naive_" + name, .n = n};
  if (name == "necklace") {
    return MembershipTester(std::move(spec), CostClass::kQuadratic,
                            [](const BinaryString& s) { return is_necklace(s); });
  }
  if (name == "lyndon") {
    return MembershipTester(std::move(spec), CostClass::kQuadratic,
                            [](const BinaryString& s) { return is_lyndon(s); });
  }
  if (name == "prenecklace") {
    return MembershipTester(std::move(spec), CostClass::kQuadratic,
                            [](const BinaryString& s) { return is_prenecklace(s); });
  }
  if (name == "prefix_normal") {
    return MembershipTester(std::move(spec), CostClass::kQuadratic,
                            [](const BinaryString& s) { return is_prefix_normal_0(s); });
  }
  throw std::invalid_argument("unknown naive tester: " + name);
}

}  // namespace naive

}  // namespace flipswap
