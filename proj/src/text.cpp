#include "fpa/text.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "fpa/errors.hpp"

namespace fpa {

Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("not a rational: " + std::string(text));
  }
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator");
  r.canonicalize();
  return r;
}

namespace {

std::string describe(std::size_t offset, const std::vector<std::string>& expected, const std::string& detail) {
  std::string out = "parse error at offset " + std::to_string(offset);
  if (!detail.empty()) out += ": " + detail;
  if (!expected.empty()) {
    out += "; expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
  }
  return out;
}

const std::vector<std::string> kAtomStart = {"number", "variable", "'{'", "'['", "'('"};

class Parser {
 public:
  Parser(std::string_view text, int n, std::size_t base) : s_(text), n_(n), base_(base) {}

  PoissonPoly parse_all() {
    PoissonPoly f = expr();
    skip_ws();
    if (pos_ < s_.size()) fail({"'+'", "'-'", "'*'", "'^'", "end of input"});
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"});
  }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail = "") {
    const std::size_t at = base_ + pos_;
    throw ParseError(at, expected, describe(at, expected, detail));
  }

  bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  unsigned long nat(unsigned long limit, const char* what) {
    skip_ws();
    if (!at_digit()) fail({"natural number"});
    const std::size_t start = pos_;
    const std::string_view d = digits();
    if (d.size() > 9 || std::stoul(std::string(d)) > limit) {
      pos_ = start;
      fail({}, std::string(what) + " out of range");
    }
    return std::stoul(std::string(d));
  }

  PoissonPoly expr() {
    PoissonPoly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  PoissonPoly term() {
    skip_ws();
    const bool negate = accept('-');
    PoissonPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return negate ? -acc : acc;
  }

  PoissonPoly factor() {
    PoissonPoly base = atom();
    if (accept('^')) return pow(base, static_cast<unsigned>(nat(10000, "exponent")));
    return base;
  }

  PoissonPoly bracket_pair(char close) {
    PoissonPoly a = expr();
    expect(',');
    PoissonPoly b = expr();
    expect(close);
    return poisson_bracket(a, b);
  }

  PoissonPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail(with_minus(kAtomStart), "unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text(digits());
      if (accept('/')) {
        skip_ws();
        if (!at_digit()) fail({"natural number"});
        const std::size_t den_at = pos_;
        std::string_view den = digits();
        if (den.find_first_not_of('0') == std::string_view::npos) {
          pos_ = den_at;
          fail({}, "zero denominator");
        }
        text += "/" + std::string(den);
      }
      return PoissonPoly(parse_rational(text));
    }
    if (c == 'x') {
      ++pos_;
      if (!at_digit()) fail({"generator index"});
      const std::size_t at = pos_;
      const std::string_view d = digits();
      const unsigned long i = d.size() > 4 ? 0 : std::stoul(std::string(d));
      if (i < 1 || i > static_cast<unsigned long>(n_)) {
        pos_ = at;
        fail({"x1..x" + std::to_string(n_)}, "unknown generator x" + std::string(d));
      }
      return PoissonPoly::generator(static_cast<int>(i));
    }
    ++pos_;
    if (c == '{') return bracket_pair('}');
    if (c == '[') return bracket_pair(']');
    if (c == '(') {
      PoissonPoly inner = expr();
      expect(')');
      return inner;
    }
    --pos_;
    fail(kAtomStart);
  }

  static std::vector<std::string> with_minus(std::vector<std::string> v) {
    v.insert(v.begin(), "'-'");
    return v;
  }

  std::string_view s_;
  int n_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

PoissonPoly parse_at(std::string_view text, int n, std::size_t base) {
  if (n < 1) throw UsageError("generator count must be positive");
  return Parser(text, n, base).parse_all();
}

void append_term(std::ostringstream& os, bool first, const Rational& c, const PoissonMonomial& m) {
  if (first) {
    if (sgn(c) < 0) os << "-";
  } else {
    os << (sgn(c) < 0 ? " - " : " + ");
  }
  const Rational mag = abs(c);
  if (m.is_one()) {
    os << mag.get_str();
  } else if (mag == 1) {
    os << m.to_string();
  } else {
    os << mag.get_str() << "*" << m.to_string();
  }
}

// Splits on `sep`, keeping the offset of every piece.
std::vector<std::pair<std::size_t, std::string_view>> split(std::string_view text, char sep) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    if (at == std::string_view::npos) {
      out.emplace_back(start, text.substr(start));
      return out;
    }
    out.emplace_back(start, text.substr(start, at - start));
    start = at + 1;
  }
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
    : std::runtime_error(what), offset_(offset), expected_(std::move(expected)) {}

PoissonPoly parse_expr(std::string_view text, int n) { return parse_at(text, n, 0); }

std::string format_expr(const PoissonPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    append_term(os, first, c, m);
    first = false;
  }
  return os.str();
}

Derivation parse_derivation(std::string_view text, int n) {
  const auto pieces = split(text, ';');
  if (static_cast<int>(pieces.size()) != n) {
    throw ParseError(text.size(), {"'x1 image ; ... ; x" + std::to_string(n) + " image'"},
                     describe(text.size(), {}, "expected " + std::to_string(n) + " images separated by ';', got " +
                                                   std::to_string(pieces.size())));
  }
  std::vector<PoissonPoly> images;
  for (const auto& [at, piece] : pieces) images.push_back(parse_at(piece, n, at));
  return Derivation(std::move(images));
}

std::string format_derivation(const Derivation& d) {
  std::string out;
  for (int i = 1; i <= d.n(); ++i) {
    if (i > 1) out += " + ";
    const PoissonPoly& f = d.image(i);
    const std::string s = format_expr(f);
    out += f.size() > 1 || s.front() == '-' ? "(" + s + ")" : s;
    out += " d/dx" + std::to_string(i);
  }
  return out;
}

Endomorphism parse_endomorphism(std::string_view text, int n) {
  std::vector<std::optional<PoissonPoly>> images(n);
  for (const auto& [at, piece] : split(text, ';')) {
    const std::size_t arrow = piece.find("->");
    const auto fail = [&](std::size_t offset, std::vector<std::string> expected, const std::string& detail) {
      throw ParseError(at + offset, expected, describe(at + offset, expected, detail));
    };
    if (arrow == std::string_view::npos) fail(piece.size(), {"'->'"}, "missing '->'");
    std::size_t p = 0;
    while (p < arrow && std::isspace(static_cast<unsigned char>(piece[p]))) ++p;
    std::size_t q = arrow;
    while (q > p && std::isspace(static_cast<unsigned char>(piece[q - 1]))) --q;
    const std::string_view lhs = piece.substr(p, q - p);
    int index = 0;
    if (lhs.size() >= 2 && lhs[0] == 'x' && lhs.find_first_not_of("0123456789", 1) == std::string_view::npos &&
        lhs.size() <= 6) {
      index = std::stoi(std::string(lhs.substr(1)));
    }
    if (index < 1 || index > n) fail(p, {"x1..x" + std::to_string(n)}, "left side must be a generator");
    if (images[index - 1]) fail(p, {}, "x" + std::to_string(index) + " assigned twice");
    images[index - 1] = parse_at(piece.substr(arrow + 2), n, at + arrow + 2);
  }
  std::vector<PoissonPoly> out;
  for (int i = 0; i < n; ++i) {
    if (!images[i]) {
      throw ParseError(text.size(), {"x" + std::to_string(i + 1) + " -> ..."},
                       describe(text.size(), {}, "no image given for x" + std::to_string(i + 1)));
    }
    out.push_back(std::move(*images[i]));
  }
  return Endomorphism(std::move(out));
}

std::string format_endomorphism(const Endomorphism& theta) {
  std::string out;
  for (int i = 1; i <= theta.n(); ++i) {
    if (i > 1) out += "; ";
    out += "x" + std::to_string(i) + " -> " + format_expr(theta.image(i));
  }
  return out;
}

}  // namespace fpa
