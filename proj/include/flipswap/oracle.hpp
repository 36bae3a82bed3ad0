#pragma once

// Brute-force ground truth for differential testing: filtered BRGC
// listings, Gray-distance instrumentation, and definition-literal testers
// that deliberately avoid the optimized scans used by the language module.

#include <cstdint>
#include <map>
#include <string>

#include "flipswap/bitstring.hpp"
#include "flipswap/language.hpp"

namespace flipswap {

/// The reference listing: all 2^n strings in BRGC order (complemented
/// per-string for pivot-0 testers, which interchanges the roles of 0 and 1),
/// restricted to the accepted strings.  Capped at kEnumerationBound.
Listing filtered_brgc(const MembershipTester& tester, int n);

struct GrayReport {
  std::uint64_t count = 0;
  int max_adjacent = 0;   // largest Hamming distance between neighbours
  int wrap_distance = 0;  // last string back to the first
  std::map<int, std::uint64_t> histogram;  // adjacent distance -> pair count

  /// Cyclic in the 2-Gray sense: the wraparound also changes at most two bits.
  bool cyclic2() const { return count <= 1 || wrap_distance <= 2; }

  std::string to_text() const;
  std::string to_json() const;
};

GrayReport gray_stats(const Listing& listing);

namespace naive {

/// s is minimal among all its rotations (every rotation compared explicitly).
bool is_necklace(const BinaryString& s);
/// s is strictly smaller than each of its other rotations.
bool is_lyndon(const BinaryString& s);
/// Some extension of length at most n turns s into a necklace; the search
/// tries every extension, shortest first.
bool is_prenecklace(const BinaryString& s);
/// Window-by-window zero counts compared against the prefix of equal length.
bool is_prefix_normal_0(const BinaryString& s);
/// Inversions with respect to 0*1* counted by enumerating all index pairs.
long long inversion_count(const BinaryString& s);
/// Fewest swap(i,j) moves to reach 0^{n-w}1^w, found by breadth-first search
/// over actual swap moves.
int transposition_count(const BinaryString& s);

/// Wraps one of the checks above as a MembershipTester ("necklace",
/// "lyndon", "prenecklace", "prefix_normal").  Intended for differential
/// runs only; n is capped at 14.
MembershipTester tester(const std::string& name, int n);

}  // namespace naive

}  // namespace flipswap
