#include "apolar/form.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace apolar {

Form::Form(int n, int degree)
    : n_(n), degree_(degree), basis_(monomial_basis(n, degree)), coeffs_(basis_.size()) {}

Form::Form(int n, int degree, Vector coefficients) : Form(n, degree) {
  if (coefficients.size() != coeffs_.size())
    throw DomainError("Form: coefficient vector has wrong length");
  coeffs_ = std::move(coefficients);
}

Form Form::from_monomial(const Monomial& m, const Rational& c) {
  Form f(m.num_vars() - 1, static_cast<int>(m.degree()));
  f.add_term(m, c);
  return f;
}

Form Form::linear(std::span<const Rational> coords) {
  if (coords.empty()) throw DomainError("Form::linear: no coordinates");
  const int n = static_cast<int>(coords.size()) - 1;
  Form f(n, 1);
  for (int i = 0; i <= n; ++i) f.add_term(Monomial::variable(n, i), coords[static_cast<std::size_t>(i)]);
  return f;
}

Rational Form::coefficient(const Monomial& m) const {
  if (m.num_vars() != n_ + 1 || static_cast<int>(m.degree()) != degree_) return 0;
  return coeffs_[basis_index(basis_, m)];
}

void Form::add_term(const Monomial& m, const Rational& c) {
  if (m.num_vars() != n_ + 1 || static_cast<int>(m.degree()) != degree_)
    throw DomainError("Form::add_term: monomial does not match form shape");
  coeffs_[basis_index(basis_, m)] += c;
}

bool Form::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

std::vector<std::pair<Monomial, Rational>> Form::terms() const {
  std::vector<std::pair<Monomial, Rational>> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) out.emplace_back(basis_[i], coeffs_[i]);
  return out;
}

Form Form::operator+(const Form& other) const {
  if (n_ != other.n_ || degree_ != other.degree_) throw DomainError("Form: shape mismatch");
  Form out(*this);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
  return out;
}

Form Form::operator-(const Form& other) const { return *this + other * Rational(-1); }

Form Form::operator*(const Rational& c) const {
  Form out(*this);
  for (auto& q : out.coeffs_) q *= c;
  return out;
}

Form Form::operator*(const Form& other) const {
  if (n_ != other.n_) throw DomainError("Form: variable count mismatch");
  Form out(n_, degree_ + other.degree_);
  for (const auto& [m, c] : terms())
    for (const auto& [m2, c2] : other.terms()) out.add_term(m * m2, c * c2);
  return out;
}

bool Form::operator==(const Form& other) const {
  return n_ == other.n_ && degree_ == other.degree_ && coeffs_ == other.coeffs_;
}

std::string to_text(const Form& f, char variable) {
  auto terms = f.terms();
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < m.num_vars(); ++i) {
      if (m[static_cast<std::size_t>(i)] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable + std::to_string(i);
      if (m[static_cast<std::size_t>(i)] > 1) mono += "^" + std::to_string(m[static_cast<std::size_t>(i)]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, char variable) : text_(text), var_(variable) {}

  std::map<std::vector<unsigned>, Rational> parse(int& max_var, int& degree,
                                                  bool& has_degree) {
    std::map<std::vector<unsigned>, Rational> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        advance();
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [start_line, start_col] = std::pair{line_, col_};
      Term t = parse_term();
      t.coeff *= sign;
      int deg = 0;
      for (auto [idx, e] : t.powers) {
        max_var = std::max(max_var, idx);
        deg += static_cast<int>(e);
      }
      if (!has_degree) {
        degree = deg;
        has_degree = true;
      } else if (deg != degree) {
        throw ParseError("inhomogeneous polynomial: term of degree " + std::to_string(deg) +
                             ", expected " + std::to_string(degree),
                         start_line, start_col);
      }
      std::vector<unsigned> key;
      for (auto [idx, e] : t.powers) {
        if (key.size() <= static_cast<std::size_t>(idx)) key.resize(static_cast<std::size_t>(idx) + 1, 0);
        key[static_cast<std::size_t>(idx)] += e;
      }
      terms[key] += t.coeff;
      skip_ws();
    }
    return terms;
  }

 private:
  struct Term {
    Rational coeff = 1;
    std::vector<std::pair<int, unsigned>> powers;
  };

  Term parse_term() {
    Term t;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = parse_number();
      skip_ws();
      if (!at_end() && peek() == '*') {
        advance();
        skip_ws();
        t.powers.push_back(parse_factor());
      } else {
        return t;
      }
    } else {
      t.powers.push_back(parse_factor());
    }
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      advance();
      skip_ws();
      t.powers.push_back(parse_factor());
    }
    return t;
  }

  Rational parse_number() {
    Integer num = parse_digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      advance();
      skip_ws();
      int l = line_, c = col_;
      Integer den = parse_digits();
      if (den == 0) throw ParseError("zero denominator", l, c);
      return make_rational(num, den);
    }
    return Rational(num);
  }

  Integer parse_digits() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    return Integer(digits, 10);
  }

  std::pair<int, unsigned> parse_factor() {
    if (at_end() || peek() != var_) fail(std::string("expected variable '") + var_ + "<index>'");
    advance();
    int l = line_, c = col_;
    Integer idx = parse_digits();
    if (idx > 64) throw ParseError("variable index too large", l, c);
    unsigned e = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      advance();
      skip_ws();
      l = line_;
      c = col_;
      Integer ex = parse_digits();
      if (ex > 1000) throw ParseError("exponent too large", l, c);
      e = static_cast<unsigned>(ex.get_ui());
    }
    return {static_cast<int>(idx.get_si()), e};
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) {
    std::string found = at_end() ? "end of input" : std::string("'") + peek() + "'";
    throw ParseError(what + ", found " + found, line_, col_);
  }

  std::string_view text_;
  char var_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

Form parse_form(std::string_view text, char variable, std::optional<int> n) {
  Parser p(text, variable);
  int max_var = 0;
  int degree = 0;
  bool has_degree = false;
  auto terms = p.parse(max_var, degree, has_degree);
  const int nn = n.value_or(max_var);
  if (nn < 0) throw DomainError("parse_form: n must be non-negative");
  if (max_var > nn)
    throw ParseError("variable " + std::string(1, variable) + std::to_string(max_var) +
                         " exceeds n = " + std::to_string(nn),
                     1, 1);
  Form f(nn, degree);
  for (const auto& [key, c] : terms) {
    std::vector<unsigned> e(key);
    e.resize(static_cast<std::size_t>(nn) + 1, 0);
    f.add_term(Monomial(std::move(e)), c);
  }
  return f;
}

}  // namespace apolar
