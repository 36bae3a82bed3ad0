#pragma once

// Membership testers for flip-swap languages, combinators over them, and
// the pivot-complementation wrapper.
//
// A flip-swap language with respect to 1 is a set S of length-n binary
// strings such that S together with 0^n is closed under flipping the
// leftmost 1 and under swapping the leftmost 1 with the bit to its right.
// With respect to 0, the roles of 0 and 1 are interchanged.  Testers carry
// their pivot so downstream machinery (generation, closure checking) can
// normalize pivot-0 languages by complementation.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flipswap/bitstring.hpp"

namespace flipswap {

enum class CostClass { kConstant, kLinear, kQuadratic };
const char* to_string(CostClass c);

struct LanguageSpec {
  std::string name;  // display form, e.g. "weight_le(2)" or "(necklace & all)"
  int n = 0;
  int pivot = 1;  // 1 or 0

  // Parameters; only the ones matching the named language are set.
  std::optional<long long> k;
  std::optional<BinaryString> gamma;
  std::optional<int> run_length;           // t in the forbidden-run language
  std::optional<int> arity;                // k-ary Dyck arity
  std::vector<long long> weights;          // knapsack, non-increasing
  std::vector<int> weight_order;           // original item index per sorted slot
  std::optional<long long> capacity;
};

class MembershipTester {
 public:
  using Predicate = std::function<bool(const BinaryString&)>;

  MembershipTester(LanguageSpec spec, CostClass cost, Predicate predicate);

  const LanguageSpec& spec() const { return state_->spec; }
  int length() const { return state_->spec.n; }
  int pivot() const { return state_->spec.pivot; }
  CostClass cost_class() const { return state_->cost; }

  bool accepts(const BinaryString& s) const;
  bool operator()(const BinaryString& s) const { return accepts(s); }

 private:
  struct State {
    LanguageSpec spec;
    CostClass cost;
    Predicate predicate;
  };
  std::shared_ptr<const State> state_;
};

// A maximal 0^s 1^t run; strings decompose uniquely into such blocks.
struct Block {
  int zeros = 0;
  int ones = 0;
  friend bool operator==(const Block&, const Block&) = default;
};
/// Lexicographic order of the run strings 0^zeros 1^ones: more zeros sorts
/// smaller, and on a zero-run tie fewer ones does.
bool block_less(const Block& a, const Block& b);
std::vector<Block> block_decompose(const BinaryString& s);  // leftmost first

// One-pass scan shared by the necklace, Lyndon-word and prenecklace
// testers: rejects as soon as some b_i is smaller than b_{i-p} where p is
// the period of the longest necklace-prefix seen so far.
struct NecklaceScan {
  bool prenecklace = false;
  int period = 0;  // valid only when prenecklace
};
NecklaceScan necklace_scan(const BinaryString& s);

// ---- Theorem-style language constructors (pivot 1 unless noted) ----

MembershipTester tester_all(int n);
MembershipTester tester_weight_le(int n, long long k);
MembershipTester tester_lex_le(const BinaryString& gamma);
MembershipTester tester_inversions_le(int n, long long k);
MembershipTester tester_transpositions_le(int n, long long k);
/// strings < (or <=) their reversal; with complemented=true the reversal is
/// complemented first.  The weak plain-reversal case is the necktie language.
MembershipTester tester_vs_reversal(int n, bool strict, bool complemented);
MembershipTester tester_forbidden_run(int n, int t);       // no substring 1 0^t
MembershipTester tester_forbidden_prefix(int n, const BinaryString& gamma);  // no prefix 1.gamma
MembershipTester tester_forbidden_prefix(int n);                             // empty gamma
MembershipTester tester_prefix_normal_0(int n);             // quadratic
MembershipTester tester_necklace(int n);      // smallest-rotation representatives
MembershipTester tester_lyndon(int n);        // aperiodic necklaces
MembershipTester tester_prenecklace(int n);   // prefixes of necklaces
MembershipTester tester_pseudo_necklace(int n);
MembershipTester tester_dyck_left_factor(int n, int arity);  // pivot 0
MembershipTester tester_knapsack(int n, std::vector<long long> weights, long long capacity);

/// Full k-ary Dyck words (not just left factors).  This is NOT a flip-swap
/// language; it exists as a negative control for the closure checker.
MembershipTester tester_dyck_word(int n, int arity);  // pivot 0

MembershipTester tester_from_predicate(std::string name, int n, int pivot,
                                       CostClass cost, MembershipTester::Predicate predicate);

// ---- Combinators (flip-swap languages are closed under all three) ----

MembershipTester union_of(const MembershipTester& a, const MembershipTester& b);
MembershipTester intersection_of(const MembershipTester& a, const MembershipTester& b);
/// Strings alpha with alpha.gamma accepted by `a`; the result has length
/// a.length() - |gamma|, which must stay positive.
MembershipTester quotient_of(const MembershipTester& a, const BinaryString& gamma);

/// Complementation wrapper: flips the pivot and tests the complemented
/// string, turning a pivot-1 tester into its pivot-0 counterpart and back.
MembershipTester pivot_wrap(const MembershipTester& t);

// ---- Registry ----

struct LanguageInfo {
  std::string name;
  std::string params;   // human-readable signature, e.g. "(k)"
  bool pivot1 = true;
  bool pivot0 = true;
  bool negative_control = false;
  std::string summary;
};
const std::vector<LanguageInfo>& language_catalog();

struct KnapsackParams {
  std::vector<long long> weights;
  long long capacity = 0;
};

/// Builds a registered language by name.  Under pivot 0 the same names
/// denote the 0/1-interchanged counterparts (weight_le(k) becomes weight
/// >= k, lex_le(gamma) becomes >= gamma, and so on); parameters are
/// complemented internally as needed.  `args` holds raw digit-string
/// arguments as written in a language expression.
MembershipTester make_language(const std::string& name, int n, int pivot,
                               const std::vector<std::string>& args,
                               const KnapsackParams* knapsack = nullptr);

/// The deterministic parameter grid used by verification sweeps: every
/// registered language at the given length, both pivots where defined,
/// with k in {0,1,2,n}, t in {1,2}, arity in {2,3}, two gamma patterns and
/// two knapsack instances.
std::vector<MembershipTester> standard_sweep(int n);

}  // namespace flipswap
