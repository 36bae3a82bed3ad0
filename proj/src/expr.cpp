#include "flipswap/expr.hpp"

#include <cctype>
#include <vector>

namespace flipswap {

namespace {

enum class TokenKind { kName, kDigits, kLParen, kRParen, kComma, kAmp, kPipe, kSlash, kEnd };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      return {TokenKind::kEnd, "", start};
    }
    const char c = text_[pos_];
    switch (c) {
      case '(': ++pos_; return {TokenKind::kLParen, "(", start};
      case ')': ++pos_; return {TokenKind::kRParen, ")", start};
      case ',': ++pos_; return {TokenKind::kComma, ",", start};
      case '&': ++pos_; return {TokenKind::kAmp, "&", start};
      case '|': ++pos_; return {TokenKind::kPipe, "|", start};
      case '/': ++pos_; return {TokenKind::kSlash, "/", start};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) {
        ++end;
      }
      Token t{TokenKind::kDigits, std::string(text_.substr(pos_, end - pos_)), start};
      pos_ = end;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
        ++end;
      }
      Token t{TokenKind::kName, std::string(text_.substr(pos_, end - pos_)), start};
      pos_ = end;
      return t;
    }
    throw ParseError(start, "a language name, operator, or '('");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const ExprContext& context)
      : lexer_(text), context_(context), lookahead_(lexer_.next()) {}

  MembershipTester parse() {
    MembershipTester result = parse_union();
    expect(TokenKind::kEnd, "end of expression");
    return result;
  }

 private:
  const Token& peek() const { return lookahead_; }

  Token advance() {
    Token t = lookahead_;
    lookahead_ = lexer_.next();
    return t;
  }

  Token expect(TokenKind kind, const std::string& what) {
    if (lookahead_.kind != kind) {
      throw ParseError(lookahead_.position, what);
    }
    return advance();
  }

  MembershipTester parse_union() {
    MembershipTester left = parse_intersection();
    while (peek().kind == TokenKind::kPipe) {
      advance();
      MembershipTester right = parse_intersection();
      left = combine(left, right, /*is_union=*/true);
    }
    return left;
  }

  MembershipTester parse_intersection() {
    MembershipTester left = parse_quotient();
    while (peek().kind == TokenKind::kAmp) {
      advance();
      MembershipTester right = parse_quotient();
      left = combine(left, right, /*is_union=*/false);
    }
    return left;
  }

  MembershipTester parse_quotient() {
    MembershipTester base = parse_primary();
    while (peek().kind == TokenKind::kSlash) {
      advance();
      const Token bits = expect(TokenKind::kDigits, "a binary suffix after '/'");
      if (bits.text.find_first_not_of("01") != std::string::npos) {
        throw ParseError(bits.position, "a binary string of 0s and 1s");
      }
      try {
        base = quotient_of(base, BinaryString(bits.text));
      } catch (const std::invalid_argument& e) {
        throw ParseError(bits.position, std::string("a valid quotient suffix (") + e.what() + ")");
      }
    }
    return base;
  }

  MembershipTester parse_primary() {
    if (peek().kind == TokenKind::kLParen) {
      advance();
      MembershipTester inner = parse_union();
      expect(TokenKind::kRParen, "')'");
      return inner;
    }
    const Token name = expect(TokenKind::kName, "a language name or '('");
    std::vector<std::string> args;
    if (peek().kind == TokenKind::kLParen) {
      advance();
      if (peek().kind != TokenKind::kRParen) {
        args.push_back(expect(TokenKind::kDigits, "a numeric or binary argument").text);
        while (peek().kind == TokenKind::kComma) {
          advance();
          args.push_back(expect(TokenKind::kDigits, "a numeric or binary argument").text);
        }
      }
      expect(TokenKind::kRParen, "')' closing the argument list");
    }
    try {
      return make_language(name.text, context_.n, context_.pivot, args,
                           context_.knapsack ? &*context_.knapsack : nullptr);
    } catch (const std::invalid_argument& e) {
      throw ParseError(name.position, std::string("a valid language atom (") + e.what() + ")");
    }
  }

  MembershipTester combine(const MembershipTester& a, const MembershipTester& b, bool is_union) {
    try {
      return is_union ? union_of(a, b) : intersection_of(a, b);
    } catch (const std::invalid_argument& e) {
      throw ParseError(0, std::string("compatible operands (") + e.what() + ")");
    }
  }

  Lexer lexer_;
  const ExprContext& context_;
  Token lookahead_;
};

}  // namespace

MembershipTester parse_language_expr(std::string_view text, const ExprContext& context) {
  if (context.n < 1) {
    throw std::invalid_argument("expression context needs n >= 1");
  }
  Parser parser(text, context);
  return parser.parse();
}

}  // namespace flipswap
