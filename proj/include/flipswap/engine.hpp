#pragma once

// The generic successor rule over a flip-swap language, the generation loop
// built on it, the cover operation tau with its poset, and the closure /
// ideal verifiers.
//
// Given a membership tester for a flip-swap language S, the successor rule
// computes the string after alpha in the cyclic listing of S in BRGC order
// using only membership queries.  Pivot-0 testers are handled transparently:
// the engine enumerates the complemented (pivot-1) language and complements
// every emitted string, so positions, case labels and t values are identical
// in both frames.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flipswap/bitstring.hpp"
#include "flipswap/language.hpp"

namespace flipswap {

// The five successor cases:
//   f1  alpha = 0^{n-1}1, wraps to 0^n
//   f2  even weight, flip(t)
//   f3  even weight, flip2(t-1, t)
//   f4  odd weight, flip2(l, l+1)
//   f5  odd weight, flip(l+1)
// where t is the leftmost position whose flip stays in S and l is the
// position of the leftmost 1.
enum class CaseLabel { f1, f2, f3, f4, f5 };
const char* to_string(CaseLabel c);

struct SuccessorStep {
  BinaryString next;
  CaseLabel case_label = CaseLabel::f1;
  std::optional<int> t;        // set for the even-weight cases f2/f3
  std::array<int, 2> changed{0, 0};
  int changed_count = 0;
  int probes = 0;              // membership calls made inside the t-search loop

  /// "flip(4)" or "flip2(5,6)", matching the positions in `changed`.
  std::string op_text() const;
};

struct ProbeStats {
  std::uint64_t loop_probes = 0;   // t-search while-loop queries
  std::uint64_t total_probes = 0;  // every membership query the engine made
};

/// The cover operation: 0^n is fixed; otherwise flip the leftmost 1 when it
/// is last or followed by a 1 (flip-first), else swap it with the bit to its
/// right (swap-first).  Its iteration reaches 0^n from any string.
BinaryString tau(const BinaryString& s);

struct PosetNode {
  BinaryString value;
  std::optional<BinaryString> parent;  // tau image; absent for the root 0^n
};

/// The tau-parent tree over all 2^n strings, rooted at 0^n.  n is capped at
/// kEnumerationBound.
std::vector<PosetNode> poset_tree(int n);

std::string poset_edges_text(const std::vector<PosetNode>& nodes);  // "child parent" lines
std::string poset_dot(const std::vector<PosetNode>& nodes);

struct ClosureViolation {
  BinaryString str;
  std::string op;  // "flip-first" or "swap-first" (or "tau" from the ideal check)
  BinaryString image;
};

struct ClosureReport {
  int n = 0;
  int pivot = 1;
  std::uint64_t set_size = 0;   // |S| in the tester's own frame
  bool contains_zero = false;   // pivot-normalized: 0^n in S
  bool pass = false;
  std::vector<ClosureViolation> violations;  // user-frame strings, capped
  std::string to_text() const;
  std::string to_json() const;
};

/// Enumerates all 2^n strings and verifies that S united with 0^n is closed
/// under flip-first and swap-first (after pivot normalization).  Failures
/// are data, not errors.
ClosureReport check_flip_swap(const MembershipTester& tester, int max_violations = 8);

/// Equivalent ideal formulation: S united with 0^n must be closed under tau,
/// i.e. form a root-containing subtree of the poset tree.
ClosureReport check_ideal(const MembershipTester& tester, int max_violations = 8);

/// The t-search. Starting from the leftmost 1 (n+1 for 0^n), decrements t
/// while flipping the bit to its left stays inside S union {0^n}.  Returns
/// the final t and the number of membership probes.  Requires an accepted
/// alpha of even weight and |S union {0^n}| > 1.
std::pair<int, int> compute_t(const BinaryString& alpha, const MembershipTester& tester);

/// One application of the successor rule to an accepted string (0^n counts
/// as accepted).  Works in the tester's own frame for either pivot.
SuccessorStep successor(const BinaryString& alpha, const MembershipTester& tester);

/// Pull-based generation of the whole listing in BRGC order.  Emits the
/// strings of S exactly once each, starting from the all-zeros string (or
/// all-ones under pivot 0) when it belongs to S and suppressing it
/// otherwise.  Each emitted string carries the step that leads to its
/// successor, so case labels and t values can be surfaced per line.
class GenerationRun {
 public:
  explicit GenerationRun(MembershipTester tester);

  /// The next emitted string, or nullopt once the cycle closes.
  std::optional<BinaryString> next();

  bool has_annotation() const { return has_annotation_; }
  const SuccessorStep& annotation() const { return annotation_; }

  const ProbeStats& stats() const { return stats_; }
  std::uint64_t emitted() const { return emitted_; }
  /// Whether the listing is cyclic, i.e. the (normalized) all-zeros string
  /// belongs to S.
  bool cyclic() const { return zero_in_set_; }

 private:
  bool member(const BinaryString& s);
  SuccessorStep step_from(const BinaryString& alpha);

  MembershipTester tester_;
  bool pivot0_;
  BinaryString current_;  // normalized (pivot-1) frame
  ProbeStats stats_;
  SuccessorStep annotation_;
  bool has_annotation_ = false;
  bool started_ = false;
  bool finished_ = false;
  bool zero_in_set_ = false;
  bool singleton_ = false;
  std::uint64_t emitted_ = 0;
  std::uint64_t step_limit_ = 0;
  std::uint64_t steps_ = 0;
};

/// Materialized convenience wrapper around GenerationRun.
Listing generate(const MembershipTester& tester, ProbeStats* stats = nullptr);

}  // namespace flipswap
