#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "flipswap/bitstring.hpp"

using namespace flipswap;

namespace {

// Character-based reference model for the packed representation.  Every
// operation is spelled out on a std::string so the word-level fast paths
// have something definitional to disagree with.
struct RefString {
  std::string bits;  // '0'/'1', index 0 holds b1

  static RefString of(const BinaryString& s) { return {s.to_string()}; }
  int weight() const { return static_cast<int>(std::count(bits.begin(), bits.end(), '1')); }
  int leftmost_one() const {
    const auto pos = bits.find('1');
    return pos == std::string::npos ? static_cast<int>(bits.size()) + 1 : static_cast<int>(pos) + 1;
  }
  int leftmost_zero() const {
    const auto pos = bits.find('0');
    return pos == std::string::npos ? static_cast<int>(bits.size()) + 1 : static_cast<int>(pos) + 1;
  }
  void flip(int i) { bits[static_cast<std::size_t>(i - 1)] ^= 1; }  // '0' ^ 1 == '1'
};

void check_against_ref(const BinaryString& s, const RefString& ref) {
  REQUIRE(s.to_string() == ref.bits);
  REQUIRE(s.weight() == ref.weight());
  REQUIRE(s.leftmost_one() == ref.leftmost_one());
  REQUIRE(s.leftmost_zero() == ref.leftmost_zero());
}

}  // namespace

TEST_SUITE_BEGIN("bitstring");

TEST_CASE("construction and round trips") {
  BinaryString s("001011");
  CHECK(s.size() == 6);
  CHECK(s.weight() == 3);
  CHECK(s.leftmost_one() == 3);
  CHECK(s.to_string() == "001011");

  CHECK(BinaryString::zeros(4).to_string() == "0000");
  CHECK(BinaryString::ones(4).to_string() == "1111");
  CHECK(BinaryString::ones(70).weight() == 70);

  CHECK_THROWS_AS(BinaryString(0), std::invalid_argument);
  CHECK_THROWS_AS(BinaryString("01021"), std::invalid_argument);

  for (std::uint64_t v : {0ull, 1ull, 5ull, 15ull}) {
    CHECK(BinaryString::from_ulong(4, v).to_ulong() == v);
  }
  CHECK(BinaryString::from_ulong(3, 1).to_string() == "100");
  CHECK_THROWS_AS(BinaryString::from_ulong(3, 8), std::invalid_argument);
}

TEST_CASE("flip") {
  CHECK(flip(BinaryString("0000"), 1).to_string() == "1000");
  CHECK(flip(BinaryString("001011"), 4).to_string() == "001111");
  CHECK_THROWS_AS(flip(BinaryString("0000"), 5), std::out_of_range);
  CHECK_THROWS_AS(flip(BinaryString("0000"), 0), std::out_of_range);
}

TEST_CASE("flip2") {
  CHECK(flip2(BinaryString("000000"), 5, 6).to_string() == "000011");
  CHECK(flip2(BinaryString("010101"), 2, 3).to_string() == "001101");
  CHECK_THROWS_AS(flip2(BinaryString("0000"), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(flip2(BinaryString("0000"), 1, 9), std::out_of_range);
}

TEST_CASE("swap_bits") {
  CHECK(swap_bits(BinaryString("001011"), 3, 4).to_string() == "000111");
  CHECK(swap_bits(BinaryString("0110"), 2, 3).to_string() == "0110");
  CHECK_THROWS_AS(swap_bits(BinaryString("0110"), 3, 3), std::invalid_argument);
}

TEST_CASE("edit operations are involutions") {
  std::mt19937 rng(20240811);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 80);
    BinaryString s(n);
    for (int i = 1; i <= n; ++i) {
      s.set_bit(i, (rng() & 1) != 0);
    }
    const int i = 1 + static_cast<int>(rng() % n);
    CHECK(flip(flip(s, i), i) == s);
    if (n > 1) {
      int j = 1 + static_cast<int>(rng() % n);
      if (j == i) {
        j = i == n ? 1 : i + 1;
      }
      const auto [a, b] = std::minmax(i, j);
      CHECK(flip2(flip2(s, a, b), a, b) == s);
      CHECK(swap_bits(swap_bits(s, a, b), a, b) == s);
    }
  }
}

TEST_CASE("leftmost positions") {
  CHECK(BinaryString("000101").leftmost_one() == 4);
  CHECK(BinaryString("0000").leftmost_one() == 5);
  CHECK(BinaryString("1111").leftmost_zero() == 5);
  CHECK(BinaryString("110").leftmost_zero() == 3);
}

TEST_CASE("complement and reverse") {
  CHECK(reverse(complement(BinaryString("1000"))).to_string() == "1110");
  CHECK(complement(BinaryString("0101")).to_string() == "1010");
  CHECK(reverse(BinaryString("100")).to_string() == "001");
}

TEST_CASE("lex_compare") {
  CHECK(lex_compare(BinaryString("1001"), BinaryString("1010")) == std::strong_ordering::less);
  CHECK(lex_compare(BinaryString("1001"), BinaryString("1001")) == std::strong_ordering::equal);
  CHECK(lex_compare(BinaryString("11"), BinaryString("10")) == std::strong_ordering::greater);
  CHECK_THROWS_AS(lex_compare(BinaryString("10"), BinaryString("100")), std::invalid_argument);
}

TEST_CASE("brgc_precedes basics") {
  CHECK(brgc_precedes(BinaryString("0100"), BinaryString("0110")));
  CHECK_FALSE(brgc_precedes(BinaryString("0001"), BinaryString("0000")));
  CHECK_THROWS_AS(brgc_precedes(BinaryString("01"), BinaryString("01")), std::invalid_argument);
}

TEST_CASE("brgc_precedes is a strict total order") {
  for (int n = 1; n <= 8; ++n) {
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t a = 0; a < total; ++a) {
      for (std::uint64_t b = a + 1; b < total; ++b) {
        const BinaryString sa = BinaryString::from_ulong(n, a);
        const BinaryString sb = BinaryString::from_ulong(n, b);
        CHECK(brgc_precedes(sa, sb) != brgc_precedes(sb, sa));
      }
    }
  }
}

TEST_CASE("brgc_list small fixtures") {
  const Listing l2 = brgc_list(2);
  std::vector<std::string> got2;
  for (const auto& s : l2.strings) got2.push_back(s.to_string());
  CHECK(got2 == std::vector<std::string>{"00", "10", "11", "01"});

  const Listing l3 = brgc_list(3);
  std::vector<std::string> got3;
  for (const auto& s : l3.strings) got3.push_back(s.to_string());
  CHECK(got3 == std::vector<std::string>{"000", "100", "110", "010", "011", "111", "101", "001"});

  const Listing l4 = brgc_list(4);
  std::vector<std::string> got4;
  for (const auto& s : l4.strings) got4.push_back(s.to_string());
  CHECK(got4 == std::vector<std::string>{"0000", "1000", "1100", "0100", "0110", "1110", "1010",
                                         "0010", "0011", "1011", "1111", "0111", "0101", "1101",
                                         "1001", "0001"});
  CHECK(l4.cyclic);
  CHECK_THROWS_AS(brgc_list(0), std::invalid_argument);
  CHECK_THROWS_AS(brgc_list(25), std::invalid_argument);
}

TEST_CASE("brgc_list neighbours differ in exactly one bit, cyclically") {
  for (int n = 1; n <= 12; ++n) {
    const Listing l = brgc_list(n);
    REQUIRE(l.strings.size() == (1ull << n));
    for (std::size_t i = 1; i < l.strings.size(); ++i) {
      CHECK(hamming_distance(l.strings[i - 1], l.strings[i]) == 1);
    }
    CHECK(hamming_distance(l.strings.back(), l.strings.front()) == 1);
  }
}

TEST_CASE("brgc_list order agrees with brgc_precedes") {
  // Adjacent agreement over the full range plus exhaustive pairs at small n;
  // together with the total-order check this pins the comparator to the list.
  for (int n = 1; n <= 16; ++n) {
    const Listing l = brgc_list(n);
    CHECK(std::is_sorted(l.strings.begin(), l.strings.end(),
                         [](const BinaryString& a, const BinaryString& b) {
                           return brgc_precedes(a, b);
                         }));
  }
  for (int n = 1; n <= 8; ++n) {
    const Listing l = brgc_list(n);
    for (std::size_t i = 0; i < l.strings.size(); ++i) {
      for (std::size_t j = i + 1; j < l.strings.size(); ++j) {
        CHECK(brgc_precedes(l.strings[i], l.strings[j]));
      }
    }
  }
}

TEST_CASE("BrgcStream matches brgc_list and the rank formula") {
  for (int n = 1; n <= 12; ++n) {
    const Listing l = brgc_list(n);
    BrgcStream stream(n);
    BinaryString cur;
    std::size_t index = 0;
    while (stream.next(cur)) {
      REQUIRE(index < l.strings.size());
      CHECK(cur == l.strings[index]);
      // Rank r maps to the string with value r ^ (r >> 1).
      const std::uint64_t r = index;
      CHECK(cur == BinaryString::from_ulong(n, r ^ (r >> 1)));
      ++index;
    }
    CHECK(index == l.strings.size());
  }
}

TEST_CASE("caches survive random edit sequences (vs reference model)") {
  std::mt19937 rng(987654321);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + static_cast<int>(rng() % 150);
    BinaryString s(n);
    RefString ref = RefString::of(s);
    for (int step = 0; step < 120; ++step) {
      const int op = static_cast<int>(rng() % 4);
      const int i = 1 + static_cast<int>(rng() % n);
      const int j = 1 + static_cast<int>(rng() % n);
      if (op == 0) {
        s.flip_bit(i);
        ref.flip(i);
      } else if (op == 1 && i != j) {
        const auto [a, b] = std::minmax(i, j);
        s = flip2(s, a, b);
        ref.flip(a);
        ref.flip(b);
      } else if (op == 2 && i != j) {
        const auto [a, b] = std::minmax(i, j);
        s = swap_bits(s, a, b);
        if (ref.bits[a - 1] != ref.bits[b - 1]) {
          ref.flip(a);
          ref.flip(b);
        }
      } else {
        s = complement(s);
        for (char& c : ref.bits) c ^= 1;
      }
      check_against_ref(s, ref);
    }
  }
}

TEST_CASE("push_back and concat") {
  BinaryString s("01");
  s.push_back(true);
  CHECK(s.to_string() == "011");
  CHECK(concat(BinaryString("10"), BinaryString("01")).to_string() == "1001");

  BinaryString z("0");
  z.push_back(false);
  CHECK(z.leftmost_one() == 3);  // still all zeros, sentinel tracks the length
  z.push_back(true);
  CHECK(z.leftmost_one() == 3);
}

TEST_CASE("hamming distance") {
  CHECK(hamming_distance(BinaryString("0000"), BinaryString("0000")) == 0);
  CHECK(hamming_distance(BinaryString("0101"), BinaryString("1010")) == 4);
  CHECK_THROWS_AS(hamming_distance(BinaryString("01"), BinaryString("010")), std::invalid_argument);
}

TEST_SUITE_END();
