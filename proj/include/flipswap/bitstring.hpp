#pragma once

// Fixed-length binary strings b1..bn (b1 leftmost, positions 1-based) with
// cached weight and leftmost-one position, plus binary reflected Gray code
// (BRGC) order primitives: a pairwise comparator, a materialized listing,
// and a streaming enumerator.
//
// Values are immutable once shared; the mutating members exist for locally
// owned scratch copies.  All operations below that return a BinaryString
// are pure and leave their arguments untouched.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace flipswap {

// Full-space oracles (poset construction, closure checks, filtered BRGC
// listings) enumerate all 2^n strings and refuse to run above this bound.
inline constexpr int kEnumerationBound = 16;

// brgc_list() materializes up to this length; use BrgcStream beyond it.
inline constexpr int kBrgcMaterializeBound = 24;

class BinaryString {
 public:
  /// Zero-length placeholder so the type can sit in containers and structs
  /// before assignment; any positional access on it throws.
  BinaryString() = default;

  explicit BinaryString(int n);                  // 0^n
  explicit BinaryString(std::string_view bits);  // e.g. "001011", b1 first

  static BinaryString zeros(int n) { return BinaryString(n); }
  static BinaryString ones(int n);
  // Bit i-1 of `value` becomes b_i, so b1 is the least significant bit.
  static BinaryString from_ulong(int n, std::uint64_t value);

  int size() const { return n_; }
  int weight() const { return weight_; }
  /// Position of the leftmost 1, or n+1 when the string is all zeros.
  int leftmost_one() const { return ell1_; }
  /// Position of the leftmost 0, or n+1 when the string is all ones.
  int leftmost_zero() const;

  bool bit(int i) const;  // 1-based, throws std::out_of_range
  bool all_zero() const { return weight_ == 0; }

  // In-place edits; weight/leftmost-one caches are maintained incrementally.
  void flip_bit(int i);
  void set_bit(int i, bool value);
  void push_back(bool value);  // extends the string to length n+1

  std::string to_string() const;
  std::uint64_t to_ulong() const;  // requires n <= 64

  friend bool operator==(const BinaryString&, const BinaryString&) = default;

 private:
  static std::size_t words_needed(int n);
  void check_position(int i) const;
  int scan_leftmost_one_from(int word_index) const;

  int n_ = 0;
  int weight_ = 0;
  int ell1_ = 1;  // n+1 when weight_ == 0
  std::vector<std::uint64_t> words_;  // b_i lives at word (i-1)/64, bit (i-1)%64
};

BinaryString flip(const BinaryString& s, int i);
BinaryString flip2(const BinaryString& s, int i, int j);
BinaryString swap_bits(const BinaryString& s, int i, int j);
BinaryString complement(const BinaryString& s);
BinaryString reverse(const BinaryString& s);
BinaryString concat(const BinaryString& a, const BinaryString& b);

/// Lexicographic comparison reading b1 first; lengths must match.
std::strong_ordering lex_compare(const BinaryString& a, const BinaryString& b);

int hamming_distance(const BinaryString& a, const BinaryString& b);

/// True iff a comes before b in BRGC order.  Computed from the rightmost
/// position r where they differ: a precedes b iff the weight of a's suffix
/// starting at r is even.  Requires a != b.
bool brgc_precedes(const BinaryString& a, const BinaryString& b);

struct Listing {
  int n = 0;
  std::vector<BinaryString> strings;
  bool cyclic = false;
};

/// All 2^n strings in BRGC order, built by the reflected recursion
/// (append 0 to each string of the previous list, then append 1 to each
/// string of the reversed previous list).  Materialized; n is capped at
/// kBrgcMaterializeBound -- use BrgcStream for longer strings.
Listing brgc_list(int n);

/// Streaming BRGC enumerator for arbitrary n.  Advances with the direct
/// reflected-Gray successor: flip b1 when the weight is even, otherwise
/// flip the bit right of the leftmost 1 (0^{n-1}1 wraps to 0^n).
class BrgcStream {
 public:
  explicit BrgcStream(int n);
  /// Writes the next string into `out`; false once the full cycle is done.
  bool next(BinaryString& out);
  void reset();

 private:
  BinaryString current_;
  bool exhausted_ = false;
  bool started_ = false;
};

std::ostream& operator<<(std::ostream& os, const BinaryString& s);

}  // namespace flipswap
