#include "hallverdict/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hallverdict::catalog {

namespace {

using arith::pow_nat;

Natural factorial(std::uint64_t n) {
  Natural f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// ---- structure string parsing ------------------------------------------

struct Token {
  enum Kind { Num, Name, Op, LParen, RParen, Caret, Underscore, End } kind;
  Natural num;
  std::string text;  // Name or Op ("x", "o", ":", ".", "wr")
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
    if (i_ >= s_.size()) return {Token::End, 0, ""};
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
        num += s_[i_++];
      return {Token::Num, Natural(num), ""};
    }
    switch (c) {
      case '(': ++i_; return {Token::LParen, 0, ""};
      case ')': ++i_; return {Token::RParen, 0, ""};
      case '^': ++i_; return {Token::Caret, 0, ""};
      case '_': ++i_; return {Token::Underscore, 0, ""};
      case ':': ++i_; return {Token::Op, 0, ":"};
      case '.': ++i_; return {Token::Op, 0, "."};
    }
    auto lower_follows = [&](std::size_t pos) {
      return pos < s_.size() && std::islower(static_cast<unsigned char>(s_[pos]));
    };
    if (c == 'x' && !lower_follows(i_ + 1)) {
      ++i_;
      return {Token::Op, 0, "x"};
    }
    if (c == 'o' && !lower_follows(i_ + 1)) {
      ++i_;
      return {Token::Op, 0, "o"};
    }
    if (c == 'w' && i_ + 1 < s_.size() && s_[i_ + 1] == 'r' &&
        !lower_follows(i_ + 2)) {
      i_ += 2;
      return {Token::Op, 0, "wr"};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '\''))
        name += s_[i_++];
      return {Token::Name, 0, name};
    }
    throw InvalidInputError(std::string("structure string: bad character '") +
                            c + "'");
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

class StructureParser {
 public:
  explicit StructureParser(const std::string& s) : lex_(s) { advance(); }

  Natural parse() {
    Natural v = expr();
    if (tok_.kind != Token::End)
      throw InvalidInputError("structure string: trailing tokens");
    return v;
  }

 private:
  void advance() { tok_ = lex_.next(); }

  // item := '(' expr ')' | atom. Reports the symmetric degree when the item
  // is Sym(k) or a plain integer, for wreath products.
  Natural item(std::optional<std::uint64_t>* wreath_degree) {
    if (wreath_degree) wreath_degree->reset();
    if (tok_.kind == Token::LParen) {
      advance();
      Natural v = expr();
      if (tok_.kind != Token::RParen)
        throw InvalidInputError("structure string: missing ')'");
      advance();
      return v;
    }
    if (tok_.kind == Token::Num) {
      Natural base = tok_.num;
      advance();
      if (tok_.kind == Token::Caret) {
        advance();
        if (tok_.kind != Token::Num)
          throw InvalidInputError("structure string: exponent expected");
        Natural e = tok_.num;
        advance();
        return pow_nat(base, e.convert_to<std::uint64_t>());
      }
      if (tok_.kind == Token::Underscore) {
        // ATLAS class decoration such as 2_2: the decoration does not change
        // the order.
        advance();
        if (tok_.kind != Token::Num)
          throw InvalidInputError("structure string: decoration expected");
        advance();
        return base;
      }
      if (wreath_degree) *wreath_degree = base.convert_to<std::uint64_t>();
      return base;
    }
    if (tok_.kind == Token::Name) {
      std::string name = tok_.text;
      advance();
      if (name == "Alt" || name == "Sym") {
        if (tok_.kind != Token::LParen)
          throw InvalidInputError("structure string: " + name + " needs (n)");
        advance();
        if (tok_.kind != Token::Num)
          throw InvalidInputError("structure string: " + name + " needs (n)");
        std::uint64_t n = tok_.num.convert_to<std::uint64_t>();
        advance();
        if (tok_.kind != Token::RParen)
          throw InvalidInputError("structure string: missing ')'");
        advance();
        if (name == "Sym" && wreath_degree) *wreath_degree = n;
        return name == "Alt" ? factorial(n) / 2 : factorial(n);
      }
      if (name == "Q8") return 8;
      if (name.size() >= 2 && name[0] == 'L' &&
          std::isdigit(static_cast<unsigned char>(name[1]))) {
        // Ln(q): projective special linear group.
        std::uint32_t n = 0;
        for (std::size_t i = 1; i < name.size(); ++i)
          n = n * 10 + (name[i] - '0');
        if (tok_.kind != Token::LParen)
          throw InvalidInputError("structure string: " + name + " needs (q)");
        advance();
        if (tok_.kind != Token::Num)
          throw InvalidInputError("structure string: " + name + " needs (q)");
        Natural q = tok_.num;
        advance();
        if (tok_.kind != Token::RParen)
          throw InvalidInputError("structure string: missing ')'");
        advance();
        return groups::order(groups::Lie{groups::LieFamily::A, n - 1, q});
      }
      if (auto spor = groups::sporadic_from_name(name))
        return groups::sporadic_order_factorization(*spor).value();
      throw InvalidInputError("structure string: unknown atom '" + name + "'");
    }
    throw InvalidInputError("structure string: operand expected");
  }

  Natural expr() {
    std::optional<std::uint64_t> left_degree;
    Natural acc = item(&left_degree);
    while (tok_.kind == Token::Op) {
      std::string op = tok_.text;
      advance();
      std::optional<std::uint64_t> right_degree;
      Natural rhs = item(&right_degree);
      if (op == "wr") {
        if (!right_degree)
          throw InvalidInputError(
              "structure string: wreath top group must be Sym(k) or an integer");
        acc = pow_nat(acc, *right_degree) * rhs;
      } else if (op == "o") {
        throw InvalidInputError(
            "structure string: central product order is ambiguous");
      } else {
        acc *= rhs;  // ':', '.', 'x' all multiply orders
      }
    }
    return acc;
  }

  Lexer lex_;
  Token tok_;
};

std::vector<Natural> nat_set(std::initializer_list<int> xs) {
  std::vector<Natural> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<bool> sieve(n + 1, true);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

}  // namespace

std::string HallGroupRef::to_string() const {
  if (kind == Kind::Symmetric) return "Sym(" + std::to_string(degree) + ")";
  return groups::sporadic_name(name);
}

Natural structure_order(const std::string& structure) {
  return StructureParser(structure).parse();
}

const std::vector<HallRecord>& sporadic_hall_table() {
  using S = SporadicName;
  auto spor = [](S s) {
    return HallGroupRef{HallGroupRef::Kind::SporadicGroup, 0, s};
  };
  static const std::vector<HallRecord> table = {
      {spor(S::M11), nat_set({2, 3}), "3^2:Q8.2", ""},
      {spor(S::M11), nat_set({2, 3, 5}), "Alt(6).2", ""},
      {spor(S::M22), nat_set({2, 3, 5}), "2^4:Alt(6)", ""},
      {spor(S::M23), nat_set({2, 3}), "2^4:(3xAlt(4)):2", ""},
      {spor(S::M23), nat_set({2, 3, 5}), "2^4:Alt(6)", ""},
      {spor(S::M23), nat_set({2, 3, 5}), "2^4:(3xAlt(5)):2", ""},
      {spor(S::M23), nat_set({2, 3, 5, 7}), "L3(4):2_2", ""},
      {spor(S::M23), nat_set({2, 3, 5, 7}), "2^4:Alt(7)", ""},
      {spor(S::M23), nat_set({2, 3, 5, 7, 11}), "M22", ""},
      {spor(S::M24), nat_set({2, 3, 5}), "2^6:3.Sym(6)", ""},
      {spor(S::J1), nat_set({2, 3}), "2xAlt(4)", ""},
      {spor(S::J1), nat_set({2, 3, 5}), "2xAlt(5)", ""},
      {spor(S::J1), nat_set({2, 3, 7}), "2^3:7:3", ""},
      {spor(S::J1), nat_set({2, 7}), "2^3:7", ""},
      {spor(S::J4), nat_set({2, 3, 5}), "2^11:(2^6:3.Sym(6))", ""},
  };
  return table;
}

std::optional<HallRecord> hall_symmetric(std::uint32_t n, const PrimeSet& pi) {
  if (n < 5) throw HypothesisViolatedError("hall_symmetric: n must be >= 5");
  std::vector<Natural> pi_of_factorial;
  for (std::uint32_t p : primes_up_to(n)) pi_of_factorial.emplace_back(p);
  std::vector<Natural> inter = pi.intersect(pi_of_factorial);
  if (inter.size() <= 1)
    throw HypothesisViolatedError(
        "hall_symmetric: |pi cap pi(n!)| > 1 is required");
  if (inter.size() == pi_of_factorial.size())
    throw HypothesisViolatedError(
        "hall_symmetric: pi(n!) must not be contained in pi");

  HallGroupRef ref{HallGroupRef::Kind::Symmetric, n, SporadicName::M11};
  // Row 1: n prime with pi cap pi(n!) = pi((n-1)!).
  if (arith::is_prime(Natural(n))) {
    std::vector<Natural> below;
    for (std::uint32_t p : primes_up_to(n - 1)) below.emplace_back(p);
    if (inter == below)
      return HallRecord{ref, inter, "Sym(" + std::to_string(n - 1) + ")", ""};
  }
  if (n == 7 && inter == nat_set({2, 3}))
    return HallRecord{ref, inter, "Sym(3)xSym(4)", ""};
  if (n == 8 && inter == nat_set({2, 3}))
    return HallRecord{ref, inter, "Sym(4)wrSym(2)", ""};
  return std::nullopt;
}

std::vector<HallRecord> hall_sporadic(SporadicName g, const PrimeSet& pi) {
  groups::SimpleGroupId id = groups::Sporadic{g};
  if (!pi.contains(2))
    throw HypothesisViolatedError("hall_sporadic: 2 in pi is required");
  std::vector<Natural> spectrum = groups::prime_spectrum(id);
  std::vector<Natural> inter = pi.intersect(spectrum);
  if (inter.size() == spectrum.size())
    throw HypothesisViolatedError(
        "hall_sporadic: pi(G) must not be contained in pi");
  if (inter.size() <= 1)
    throw HypothesisViolatedError(
        "hall_sporadic: |pi cap pi(G)| > 1 is required");
  std::vector<HallRecord> out;
  for (const auto& row : sporadic_hall_table())
    if (row.group.name == g && row.pi_intersection == inter) out.push_back(row);
  return out;
}

}  // namespace hallverdict::catalog
