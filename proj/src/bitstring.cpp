#include "flipswap/bitstring.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

namespace flipswap {

namespace {
constexpr int kWordBits = 64;

std::uint64_t tail_mask(int n) {
  const int tail = n % kWordBits;
  return tail == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;
}
}  // namespace

std::size_t BinaryString::words_needed(int n) {
  return (static_cast<std::size_t>(n) + kWordBits - 1) / kWordBits;
}

BinaryString::BinaryString(int n) : n_(n), weight_(0), ell1_(n + 1) {
  if (n < 1) {
    throw std::invalid_argument("string length must be positive");
  }
  words_.assign(words_needed(n), 0);
}

BinaryString::BinaryString(std::string_view bits) : BinaryString(static_cast<int>(bits.empty() ? 0 : bits.size())) {
  for (int i = 1; i <= n_; ++i) {
    const char c = bits[static_cast<std::size_t>(i - 1)];
    if (c == '1') {
      set_bit(i, true);
    } else if (c != '0') {
      throw std::invalid_argument("binary string may contain only '0' and '1'");
    }
  }
}

BinaryString BinaryString::ones(int n) {
  BinaryString s(n);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.words_.back() &= tail_mask(n);
  s.weight_ = n;
  s.ell1_ = 1;
  return s;
}

BinaryString BinaryString::from_ulong(int n, std::uint64_t value) {
  if (n < 1 || n > 64) {
    throw std::invalid_argument("from_ulong requires 1 <= n <= 64");
  }
  if (n < 64 && (value >> n) != 0) {
    throw std::invalid_argument("value has bits beyond position n");
  }
  BinaryString s(n);
  s.words_[0] = value;
  s.weight_ = std::popcount(value);
  s.ell1_ = value == 0 ? n + 1 : std::countr_zero(value) + 1;
  return s;
}

void BinaryString::check_position(int i) const {
  if (i < 1 || i > n_) {
    throw std::out_of_range("position out of range");
  }
}

bool BinaryString::bit(int i) const {
  check_position(i);
  return ((words_[static_cast<std::size_t>(i - 1) / kWordBits] >> ((i - 1) % kWordBits)) & 1) != 0;
}

int BinaryString::scan_leftmost_one_from(int word_index) const {
  for (std::size_t w = static_cast<std::size_t>(word_index); w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<int>(w) * kWordBits + std::countr_zero(words_[w]) + 1;
    }
  }
  return n_ + 1;
}

void BinaryString::flip_bit(int i) {
  check_position(i);
  const std::size_t w = static_cast<std::size_t>(i - 1) / kWordBits;
  const std::uint64_t mask = std::uint64_t{1} << ((i - 1) % kWordBits);
  words_[w] ^= mask;
  if ((words_[w] & mask) != 0) {
    ++weight_;
    ell1_ = std::min(ell1_, i);
  } else {
    --weight_;
    if (i == ell1_) {
      ell1_ = weight_ == 0 ? n_ + 1 : scan_leftmost_one_from(static_cast<int>(w));
    }
  }
}

void BinaryString::set_bit(int i, bool value) {
  if (bit(i) != value) {
    flip_bit(i);
  }
}

void BinaryString::push_back(bool value) {
  ++n_;
  if (words_needed(n_) > words_.size()) {
    words_.push_back(0);
  }
  if (weight_ == 0) {
    ell1_ = n_ + 1;  // keep the all-zeros sentinel in step with the new length
  }
  if (value) {
    words_[static_cast<std::size_t>(n_ - 1) / kWordBits] |= std::uint64_t{1} << ((n_ - 1) % kWordBits);
    ++weight_;
    ell1_ = std::min(ell1_, n_);
  }
}

int BinaryString::leftmost_zero() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t inverted = ~words_[w];
    if (w + 1 == words_.size()) {
      inverted &= tail_mask(n_);
    }
    if (inverted != 0) {
      return static_cast<int>(w) * kWordBits + std::countr_zero(inverted) + 1;
    }
  }
  return n_ + 1;
}

std::string BinaryString::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      const int b = std::countr_zero(word);
      out[w * kWordBits + static_cast<std::size_t>(b)] = '1';
      word &= word - 1;
    }
  }
  return out;
}

std::uint64_t BinaryString::to_ulong() const {
  if (n_ > 64) {
    throw std::domain_error("to_ulong requires n <= 64");
  }
  return words_[0];
}

BinaryString flip(const BinaryString& s, int i) {
  BinaryString out = s;
  out.flip_bit(i);
  return out;
}

BinaryString flip2(const BinaryString& s, int i, int j) {
  if (i == j) {
    throw std::invalid_argument("flip2 requires two distinct positions");
  }
  BinaryString out = s;
  out.flip_bit(i);
  out.flip_bit(j);
  return out;
}

BinaryString swap_bits(const BinaryString& s, int i, int j) {
  if (i == j) {
    throw std::invalid_argument("swap requires two distinct positions");
  }
  if (s.bit(i) == s.bit(j)) {
    return s;
  }
  return flip2(s, i, j);
}

BinaryString complement(const BinaryString& s) {
  const int n = s.size();
  BinaryString out = BinaryString::zeros(n);
  for (int i = 1; i <= n; ++i) {
    if (!s.bit(i)) {
      out.set_bit(i, true);
    }
  }
  return out;
}

BinaryString reverse(const BinaryString& s) {
  const int n = s.size();
  BinaryString out = BinaryString::zeros(n);
  for (int i = 1; i <= n; ++i) {
    if (s.bit(i)) {
      out.set_bit(n + 1 - i, true);
    }
  }
  return out;
}

BinaryString concat(const BinaryString& a, const BinaryString& b) {
  BinaryString out = a;
  for (int i = 1; i <= b.size(); ++i) {
    out.push_back(b.bit(i));
  }
  return out;
}

std::strong_ordering lex_compare(const BinaryString& a, const BinaryString& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("lex_compare requires equal lengths");
  }
  for (int i = 1; i <= a.size(); ++i) {
    const bool x = a.bit(i);
    const bool y = b.bit(i);
    if (x != y) {
      return x ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

int hamming_distance(const BinaryString& a, const BinaryString& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("hamming_distance requires equal lengths");
  }
  int d = 0;
  for (int i = 1; i <= a.size(); ++i) {
    d += a.bit(i) != b.bit(i);
  }
  return d;
}

bool brgc_precedes(const BinaryString& a, const BinaryString& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("brgc_precedes requires equal lengths");
  }
  if (a == b) {
    throw std::invalid_argument("comparator requires distinct strings");
  }
  const int n = a.size();
  int r = 0;
  for (int i = n; i >= 1; --i) {
    if (a.bit(i) != b.bit(i)) {
      r = i;
      break;
    }
  }
  int suffix_weight = 0;
  for (int i = r; i <= n; ++i) {
    suffix_weight += a.bit(i);
  }
  return suffix_weight % 2 == 0;
}

Listing brgc_list(int n) {
  if (n < 1) {
    throw std::invalid_argument("brgc_list requires n >= 1");
  }
  if (n > kBrgcMaterializeBound) {
    throw std::invalid_argument("brgc_list is materialized only up to n = 24; use BrgcStream");
  }
  std::vector<BinaryString> current;
  current.emplace_back("0");
  current.emplace_back("1");
  for (int m = 2; m <= n; ++m) {
    std::vector<BinaryString> next;
    next.reserve(current.size() * 2);
    for (const BinaryString& s : current) {
      BinaryString grown = s;
      grown.push_back(false);
      next.push_back(std::move(grown));
    }
    for (auto it = current.rbegin(); it != current.rend(); ++it) {
      BinaryString grown = *it;
      grown.push_back(true);
      next.push_back(std::move(grown));
    }
    current = std::move(next);
  }
  return Listing{n, std::move(current), true};
}

BrgcStream::BrgcStream(int n) : current_(n) {}

void BrgcStream::reset() {
  current_ = BinaryString::zeros(current_.size());
  exhausted_ = false;
  started_ = false;
}

bool BrgcStream::next(BinaryString& out) {
  if (exhausted_) {
    return false;
  }
  if (!started_) {
    started_ = true;
    out = current_;
    return true;
  }
  const int n = current_.size();
  if (current_.weight() == 1 && current_.bit(n)) {
    exhausted_ = true;  // 0^{n-1}1 is the last string of the cycle
    return false;
  }
  if (current_.weight() % 2 == 0) {
    current_.flip_bit(1);
  } else {
    current_.flip_bit(current_.leftmost_one() + 1);
  }
  out = current_;
  return true;
}

std::ostream& operator<<(std::ostream& os, const BinaryString& s) {
  return os << s.to_string();
}

}  // namespace flipswap
