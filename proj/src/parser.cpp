#include "hkc/parser.hpp"

#include <cctype>
#include <string>

#include "hkc/errors.hpp"

namespace hkc {

namespace {

// Recursive descent:
//   sum     := ['+'|'-'] product (('+'|'-') product)*
//   product := power (('*'|'/') power)*
//   power   := atom ['^' integer]
//   atom    := integer | 't' | '(' sum ')' | 'O' '(' sum ')'
class SeriesParser {
 public:
  SeriesParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  PowerSeries parse() {
    PowerSeries result = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError("syntax error: " + message, offset_ + pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  PowerSeries sum() {
    PowerSeries result;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    result = product();
    if (negate) result = -result;
    while (true) {
      if (accept('+')) {
        result += product();
      } else if (accept('-')) {
        result -= product();
      } else {
        return result;
      }
    }
  }

  PowerSeries product() {
    PowerSeries result = power();
    while (true) {
      if (accept('*')) {
        result = result * power();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const PowerSeries divisor = power();
        if (divisor.degree() != 0 || !divisor.is_exact() || divisor.terms().size() != 1) {
          pos_ = at;
          fail("division is only allowed by a nonzero constant");
        }
        result = scale(1 / divisor.leading_coefficient(), result);
      } else {
        return result;
      }
    }
  }

  PowerSeries power() {
    PowerSeries base = atom();
    if (accept('^')) {
      const mpz_class e = integer();
      if (!e.fits_uint_p()) fail("exponent too large");
      if (!base.is_exact() && !base.empty()) fail("cannot raise an O-term to a power");
      base = pow(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  PowerSeries atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return PowerSeries::constant(Scalar(integer()));
    if (c == 't') {
      ++pos_;
      return PowerSeries::monomial(1);
    }
    if (c == '(') {
      ++pos_;
      PowerSeries inner = sum();
      expect(')');
      return inner;
    }
    if (c == 'O') {
      ++pos_;
      expect('(');
      const std::size_t at = pos_;
      const PowerSeries inner = sum();
      expect(')');
      if (!inner.is_exact() || !inner.is_monomial() || inner.leading_coefficient() != 1) {
        pos_ = at;
        fail("O(...) takes a monomial t^d");
      }
      return PowerSeries::zero(inner.order());
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

PowerSeries parse_series(std::string_view text) { return SeriesParser(text, 0).parse(); }

Parametrization parse_generators(std::string_view text) {
  std::vector<PowerSeries> gens;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    const std::string_view piece = text.substr(start, end - start);
    PowerSeries g = SeriesParser(piece, start).parse();
    if (g.empty() || g.order_bound() < 1) {
      throw MathError("generator is a unit or zero: " + to_string(g));
    }
    gens.push_back(std::move(g));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Parametrization(std::move(gens));
}

}  // namespace hkc
