#include "hookdet/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hookdet {

Monomial::Monomial(VarId v, int exponent) {
  if (exponent != 0) factors_.emplace_back(v, exponent);
}

Monomial::Monomial(std::vector<std::pair<VarId, int>> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v)
      factors_.back().second += e;
    else
      factors_.emplace_back(v, e);
  }
  std::erase_if(factors_, [](const auto& f) { return f.second == 0; });
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() && b != o.factors_.end()) {
    if (a->first < b->first)
      r.factors_.push_back(*a++);
    else if (b->first < a->first)
      r.factors_.push_back(*b++);
    else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    }
  }
  r.factors_.insert(r.factors_.end(), a, factors_.end());
  r.factors_.insert(r.factors_.end(), b, o.factors_.end());
  return r;
}

Polynomial::Polynomial(BigInt c) {
  if (c != 0) terms_.emplace(Monomial{}, std::move(c));
}

Polynomial Polynomial::variable(VarId v) {
  Polynomial p;
  p.terms_.emplace(Monomial(v), 1);
  return p;
}

Polynomial Polynomial::variable(int block_row, int block_col, int level) {
  return variable(VarId{block_row, block_col, level});
}

std::set<VarId> Polynomial::variables() const {
  std::set<VarId> vs;
  for (const auto& [mono, coeff] : terms_)
    for (const auto& [v, e] : mono.factors()) vs.insert(v);
  return vs;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [mono, coeff] : o.terms_) {
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
      terms_.emplace(mono, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r += -o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [mono, coeff] : terms_) r.terms_.emplace(mono, -coeff);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma * mb;
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        r.terms_.emplace(std::move(m), ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

BigInt Polynomial::eval(const Assignment& assignment) const {
  BigInt total = 0;
  std::map<VarId, std::vector<BigInt>> powers;  // powers[v][e] = value^e
  for (const auto& [mono, coeff] : terms_) {
    BigInt term = coeff;
    for (const auto& [v, e] : mono.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        std::ostringstream msg;
        msg << "no value for x[" << v.block_row << "," << v.block_col << ","
            << v.level << "]";
        throw MissingVariable(msg.str());
      }
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(1);
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * it->second);
      term *= pw[e];
    }
    total += term;
  }
  return total;
}

namespace {

void render_monomial(std::ostream& out, const Monomial& m) {
  bool first = true;
  for (const auto& [v, e] : m.factors()) {
    if (!first) out << '*';
    first = false;
    out << "x[" << v.block_row << ',' << v.block_col << ',' << v.level << ']';
    if (e > 1) out << '^' << e;
  }
}

}  // namespace

// Terms in ascending variable order, the constant (if any) last.
std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  auto render = [&](const Monomial& mono, const BigInt& coeff) {
    BigInt mag = coeff < 0 ? BigInt(-coeff) : coeff;
    if (first)
      out << (coeff < 0 ? "-" : "");
    else
      out << (coeff < 0 ? " - " : " + ");
    first = false;
    if (mono.is_one()) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << '*';
      render_monomial(out, mono);
    }
  };
  for (const auto& [mono, coeff] : terms_)
    if (!mono.is_one()) render(mono, coeff);
  if (auto constant = terms_.find(Monomial{}); constant != terms_.end())
    render(constant->first, constant->second);
  return out.str();
}

namespace {

// Recursive-descent parser for the canonical rendering. Grammar:
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := integer | var
//   var    := 'x[' int ',' int ',' int ']' ['^' int]
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial result;
    skip_ws();
    if (done()) throw ParseError("empty polynomial text");
    bool negative = accept_sign();
    result += parse_term(negative);
    skip_ws();
    while (!done()) {
      char c = text_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      result += parse_term(c == '-');
      skip_ws();
    }
    return result;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos_));
  }

  bool accept_sign() {
    if (done()) return false;
    if (text_[pos_] == '-') {
      ++pos_;
      skip_ws();
      return true;
    }
    if (text_[pos_] == '+') {
      ++pos_;
      skip_ws();
    }
    return false;
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  BigInt parse_bigint() {
    skip_ws();
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected an integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_ws();
    if (done() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Polynomial parse_term(bool negative) {
    BigInt coeff = negative ? -1 : 1;
    std::vector<std::pair<VarId, int>> factors;
    while (true) {
      skip_ws();
      if (done()) fail("unexpected end of term");
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_bigint();
      } else if (c == 'x') {
        ++pos_;
        expect('[');
        int i = parse_int();
        expect(',');
        int j = parse_int();
        expect(',');
        int k = parse_int();
        expect(']');
        if (i < 1 || j < 1 || k < 1) fail("variable indices must be >= 1");
        int e = 1;
        skip_ws();
        if (!done() && text_[pos_] == '^') {
          ++pos_;
          e = parse_int();
          if (e < 1) fail("exponent must be >= 1");
        }
        factors.emplace_back(VarId{i, j, k}, e);
      } else {
        fail("expected a factor");
      }
      skip_ws();
      if (done() || text_[pos_] != '*') break;
      ++pos_;
    }
    const Monomial mono(std::move(factors));  // named: factors() is a view
    Polynomial term(coeff);
    for (const auto& [v, e] : mono.factors())
      for (int q = 0; q < e; ++q) term *= Polynomial::variable(v);
    return term;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) {
  return Parser(text).parse();
}

}  // namespace hookdet
