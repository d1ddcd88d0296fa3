#include "tck/poly_io.hpp"

#include <cctype>
#include <string>

namespace tck {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::EmptyIdeal: return "EmptyIdeal";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::NotArithmetic: return "NotArithmetic";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NotIncreasing: return "NotIncreasing";
    case Errc::NotLocalOrder: return "NotLocalOrder";
    case Errc::NotGlobalOrder: return "NotGlobalOrder";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotAComplex: return "NotAComplex";
    case Errc::NotMinimal: return "NotMinimal";
    case Errc::Parse: return "Parse";
    case Errc::NotDivisible: return "NotDivisible";
  }
  return "Unknown";
}

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::DegLex: return "deglex";
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::NegDegRevLex: return "negdegrevlex";
  }
  return "?";
}

std::string_view variable_name(std::size_t index) {
  static constexpr std::string_view kNames[] = {"x0", "x1", "x2", "y", "t"};
  return index < std::size(kNames) ? kNames[index] : "?";
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < Monomial::kVars; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.sorted_terms(ds_order())) {
    Rational c = t.coeff;
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!first) {
      out += '+';
    }
    first = false;
    if (t.mono.is_one()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + '*';
      out += to_string(t.mono);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) src_ += ch;
    }
  }

  Polynomial parse() {
    if (src_.empty()) fail("empty input");
    Polynomial result;
    bool first = true;
    while (pos_ < src_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [c, m] = term();
      result += Polynomial(m, sign * c);
    }
    return result;
  }

 private:
  std::pair<Rational, Monomial> term() {
    Rational c = 1;
    Monomial m;
    do {
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c *= number();
      } else {
        m = m * variable();
      }
    } while (pos_ < src_.size() && peek() == '*' && (++pos_, true));
    return {c, m};
  }

  Rational number() {
    Rational num(digits());
    if (peek() == '/') {
      ++pos_;
      std::string den = digits();
      if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
      num /= Rational(den);
    }
    return num;
  }

  Monomial variable() {
    std::size_t index = 0;
    if (src_.compare(pos_, 2, "x0") == 0) {
      index = var::x0;
      pos_ += 2;
    } else if (src_.compare(pos_, 2, "x1") == 0) {
      index = var::x1;
      pos_ += 2;
    } else if (src_.compare(pos_, 2, "x2") == 0) {
      index = var::x2;
      pos_ += 2;
    } else if (peek() == 'y') {
      index = var::y;
      ++pos_;
    } else {
      fail("expected a variable (x0, x1, x2, y) or a number");
    }
    int e = 1;
    if (peek() == '^') {
      ++pos_;
      std::string d = digits();
      if (d.size() > 6) fail("exponent too large");
      e = std::stoi(d);
    }
    return Monomial::variable(index, e);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return src_.substr(start, pos_ - start);
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  char get() { return src_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::Parse, "polynomial parse error at offset " + std::to_string(pos_) + ": " + why +
                                 " in \"" + src_ + "\"");
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace tck
