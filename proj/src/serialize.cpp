#include "qhm/serialize.hpp"

#include <cctype>

namespace qhm {

std::string toText(const Monomial& m) {
  std::string s = "x^" + std::to_string(m.xPow) + "*p^" + std::to_string(m.pPow);
  if (m.parity) s += "*P";
  return s;
}

std::string toText(const OperatorExpr& a) {
  if (a.isZero()) return "0";
  std::string out;
  for (const auto& [m, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    out += "[" + c.str() + "]*" + toText(m);
  }
  return out;
}

std::string toText(const SymmetricForm& f) {
  std::string out;
  for (const auto& t : f.terms) {
    if (!out.empty()) out += " + ";
    out += "[" + t.coeff.str() + "]*";
    out += t.anticommutator ? "{x^" + std::to_string(t.xPow) + ",p^" + std::to_string(t.pPow) + "}"
                            : "p^" + std::to_string(t.pPow);
    if (t.parity) out += "*P";
  }
  if (out.empty()) out = "0";
  if (!f.hermitian()) out += " residual " + toText(f.residual);
  return out;
}

std::string toText(const SeriesExpr& s) {
  std::string out;
  for (int j = 0; j <= s.order(); ++j) out += "eps^" + std::to_string(j) + ": " + toText(s[j]) + "\n";
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool startsWith(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }
  bool accept(std::string_view s) {
    if (!startsWith(s)) return false;
    pos_ += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  long integer() {
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) fail("expected integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Rational rational() {
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return parseRational(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

GaussianRational parseCoefficient(Cursor& in) {
  if (in.accept("(")) {
    Rational re = in.rational();
    bool negative = in.peek() == '-';
    if (!in.accept("+") && !in.accept("-")) in.fail("expected '+' or '-' in complex coefficient");
    Rational im = in.rational();
    in.expect("*i)");
    return {re, negative ? Rational(-im) : im};
  }
  Rational r = in.rational();
  if (in.accept("*i")) return {Rational(0), r};
  return r;
}

ParamPoly parseParamTerm(Cursor& in) {
  GaussianRational c = parseCoefficient(in);
  Exponents e{};
  while (in.accept("*")) {
    std::string name = in.identifier();
    auto symbol = Symbol::fromName(name);
    if (!symbol) in.fail("unknown parameter '" + name + "'");
    int n = 1;
    if (in.accept("^")) n = static_cast<int>(in.integer());
    if (n < 1) in.fail("parameter exponent must be positive");
    e[symbol->index()] = static_cast<std::uint8_t>(e[symbol->index()] + n);
  }
  ParamPoly p;
  p.addTerm(e, c);
  return p;
}

ParamPoly parseParamPolyAt(Cursor& in) {
  ParamPoly p = parseParamTerm(in);
  while (in.accept(" + ")) p += parseParamTerm(in);
  return p;
}

}  // namespace

ParamPoly parseParamPoly(std::string_view text) {
  Cursor in(text);
  ParamPoly p = parseParamPolyAt(in);
  if (!in.done()) in.fail("trailing input");
  return p;
}

OperatorExpr parseOperatorExpr(std::string_view text) {
  Cursor in(text);
  OperatorExpr out;
  if (in.accept("0") && in.done()) return out;
  in = Cursor(text);
  do {
    in.expect("[");
    ParamPoly c = parseParamPolyAt(in);
    in.expect("]*x^");
    long xPow = in.integer();
    in.expect("*p^");
    long pPow = in.integer();
    bool parity = in.accept("*P");
    if (xPow < 0) in.fail("negative x power");
    out.addTerm({static_cast<int>(xPow), static_cast<int>(pPow), parity}, c);
  } while (in.accept(" + "));
  if (!in.done()) in.fail("trailing input");
  return out;
}

}  // namespace qhm
