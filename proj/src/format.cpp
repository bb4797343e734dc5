#include "wpvol/format.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace wpvol {

namespace {

std::string text_factor(Atom a, int e) {
  auto with_power = [e](std::string base) { return e == 1 ? base : base + "^" + std::to_string(e); };
  switch (a.kind) {
    case AtomKind::PiSquared: return with_power("pi2");
    case AtomKind::LengthSquared: return "L" + std::to_string(a.index) + "^" + std::to_string(2 * e);
    case AtomKind::Moment: return with_power("m" + std::to_string(a.index));
    case AtomKind::AuxSeries: return with_power("r");
    case AtomKind::Integration: return with_power("u");
    case AtomKind::THat: return with_power("t" + std::to_string(a.index));
    case AtomKind::GammaHat: return with_power("g" + std::to_string(a.index));
    case AtomKind::GammaOneInverse: return "g1^-" + std::to_string(e);
  }
  return "?";
}

std::string braced(int value) {
  std::string s = std::to_string(value);
  return s.size() == 1 ? s : "{" + s + "}";
}

std::string latex_factor(Atom a, int e) {
  auto power = [e](std::string base) { return e == 1 ? base : base + "^" + braced(e); };
  switch (a.kind) {
    case AtomKind::PiSquared: return "\\pi^" + braced(2 * e);
    case AtomKind::LengthSquared: return "L_" + braced(a.index) + "^" + braced(2 * e);
    case AtomKind::Moment: return power("m_" + braced(a.index));
    case AtomKind::AuxSeries: return power("r");
    case AtomKind::Integration: return power("u");
    case AtomKind::THat: return power("\\hat{t}_" + braced(a.index));
    case AtomKind::GammaHat: return power("\\hat{\\gamma}_" + braced(a.index));
    case AtomKind::GammaOneInverse: return "\\hat{\\gamma}_1^{-" + std::to_string(e) + "}";
  }
  return "?";
}

std::string latex_coefficient(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

template <class FactorFn, class CoeffFn>
std::string render(const Polynomial& p, FactorFn factor, CoeffFn coefficient, const char* joiner,
                   const char* coeff_joiner) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += coefficient(magnitude);
      continue;
    }
    if (magnitude != 1) {
      out += coefficient(magnitude);
      out += coeff_joiner;
    }
    bool first_factor = true;
    for (const auto& [atom, e] : m.factors()) {
      if (!first_factor) out += joiner;
      first_factor = false;
      out += factor(atom, e);
    }
  }
  return out;
}

// ----------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    Polynomial result;
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    while (true) {
      Polynomial t = parse_term();
      result += negate ? -t : t;
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negate = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  Polynomial parse_term() {
    Rational coeff(1);
    std::vector<Monomial::Factor> factors;
    while (true) {
      skip_space();
      if (at_end()) fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_number();
      } else {
        factors.push_back(parse_atom());
      }
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return Polynomial::term(coeff, Monomial::from_factors(std::move(factors)));
  }

  Rational parse_number() {
    std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    return parse_rational(text_.substr(start, pos_ - start));
  }

  int parse_unsigned() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  // Parses an optional "^e" / "^-e"; returns the signed exponent.
  int parse_exponent() {
    skip_space();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    skip_space();
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    int e = parse_unsigned();
    return negative ? -e : e;
  }

  Monomial::Factor parse_atom() {
    std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (name.empty()) fail("expected an atom");
    auto indexed = [&](AtomKind kind) {
      const int index = parse_unsigned();
      return Atom{kind, index};
    };
    Atom atom;
    if (name == "pi") {
      if (at_end() || peek() != '2') fail("expected pi2");
      ++pos_;
      atom = Atom::pi_squared();
    } else if (name == "L") {
      atom = indexed(AtomKind::LengthSquared);
      if (atom.index < 1) fail("length labels start at 1");
      int e = parse_exponent();
      if (e <= 0 || e % 2 != 0) fail("length atoms need an even positive exponent");
      return {atom, e / 2};
    } else if (name == "m") {
      atom = indexed(AtomKind::Moment);
    } else if (name == "r") {
      atom = Atom::series_var();
    } else if (name == "u") {
      atom = Atom::integration();
    } else if (name == "t") {
      atom = indexed(AtomKind::THat);
    } else if (name == "g") {
      atom = indexed(AtomKind::GammaHat);
      int e = parse_exponent();
      if (atom.index == 1) {
        if (e >= 0) fail("g1 only occurs with a negative exponent");
        return {Atom::gamma_one_inverse(), -e};
      }
      if (atom.index < 2 || e <= 0) fail("malformed gamma atom");
      return {atom, e};
    } else {
      fail("unknown atom '" + name + "'");
    }
    int e = parse_exponent();
    if (e <= 0) fail("exponent must be positive");
    return {atom, e};
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// ------------------------------------------------------------------- json

struct Widths {
  int lengths = 0;
  int moments = 0;
  int t_hats = 0;
  int gammas = 0;
  bool series_var = false;
  bool integration = false;
};

Widths widths_of(const Polynomial& p, JsonLayout layout) {
  Widths w{layout.lengths, layout.moments};
  for (Atom a : p.atoms()) {
    switch (a.kind) {
      case AtomKind::LengthSquared: w.lengths = std::max(w.lengths, a.index); break;
      case AtomKind::Moment: w.moments = std::max(w.moments, a.index + 1); break;
      case AtomKind::THat: w.t_hats = std::max(w.t_hats, a.index + 1); break;
      case AtomKind::GammaHat: w.gammas = std::max(w.gammas, a.index); break;
      case AtomKind::GammaOneInverse: w.gammas = std::max(w.gammas, 1); break;
      case AtomKind::AuxSeries: w.series_var = true; break;
      case AtomKind::Integration: w.integration = true; break;
      case AtomKind::PiSquared: break;
    }
  }
  return w;
}

nlohmann::json term_json(const Monomial& m, const Rational& c, const Widths& w) {
  nlohmann::json t;
  t["coeff"] = to_string(c);
  t["pi2"] = m.exponent(Atom::pi_squared());
  std::vector<int> lengths(w.lengths), moments(w.moments);
  for (int i = 1; i <= w.lengths; ++i) lengths[i - 1] = m.exponent(Atom::length(i));
  for (int k = 0; k < w.moments; ++k) moments[k] = m.exponent(Atom::moment(k));
  t["L"] = lengths;
  t["m"] = moments;
  if (w.series_var) t["r"] = m.exponent(Atom::series_var());
  if (w.integration) t["u"] = m.exponent(Atom::integration());
  if (w.t_hats > 0) {
    std::vector<int> ts(w.t_hats);
    for (int k = 0; k < w.t_hats; ++k) ts[k] = m.exponent(Atom::t_hat(k));
    t["t"] = ts;
  }
  if (w.gammas > 0) {
    // Slot 0 is gamma_1, stored as a signed exponent (the inverse atom is negative).
    std::vector<int> gs(w.gammas);
    gs[0] = -m.exponent(Atom::gamma_one_inverse());
    for (int k = 2; k <= w.gammas; ++k) gs[k - 1] = m.exponent(Atom::gamma_hat(k));
    t["g"] = gs;
  }
  return t;
}

}  // namespace

std::string to_text(const Polynomial& p) {
  return render(p, text_factor, [](const Rational& c) { return to_string(c); }, "*", "*");
}

std::string to_latex(const Polynomial& p) { return render(p, latex_factor, latex_coefficient, " ", ""); }

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

nlohmann::json to_json(const Polynomial& p, JsonLayout layout) {
  const Widths w = widths_of(p, layout);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) out.push_back(term_json(m, c, w));
  return out;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  Polynomial p;
  for (const auto& t : j) {
    std::vector<Monomial::Factor> factors;
    factors.emplace_back(Atom::pi_squared(), t.value("pi2", 0));
    if (t.contains("L")) {
      const auto& ls = t.at("L");
      for (std::size_t i = 0; i < ls.size(); ++i)
        factors.emplace_back(Atom::length(static_cast<int>(i) + 1), ls[i].get<int>());
    }
    if (t.contains("m")) {
      const auto& ms = t.at("m");
      for (std::size_t k = 0; k < ms.size(); ++k)
        factors.emplace_back(Atom::moment(static_cast<int>(k)), ms[k].get<int>());
    }
    if (t.contains("r")) factors.emplace_back(Atom::series_var(), t.at("r").get<int>());
    if (t.contains("u")) factors.emplace_back(Atom::integration(), t.at("u").get<int>());
    if (t.contains("t")) {
      const auto& ts = t.at("t");
      for (std::size_t k = 0; k < ts.size(); ++k)
        factors.emplace_back(Atom::t_hat(static_cast<int>(k)), ts[k].get<int>());
    }
    if (t.contains("g")) {
      const auto& gs = t.at("g");
      for (std::size_t k = 0; k < gs.size(); ++k) {
        const int e = gs[k].get<int>();
        if (k == 0) {
          if (e > 0) throw std::invalid_argument("gamma_1 only occurs inverted");
          factors.emplace_back(Atom::gamma_one_inverse(), -e);
        } else {
          factors.emplace_back(Atom::gamma_hat(static_cast<int>(k) + 1), e);
        }
      }
    }
    p.add_term(Monomial::from_factors(std::move(factors)), parse_rational(t.at("coeff").get<std::string>()));
  }
  return p;
}

nlohmann::json to_json(const GradedSeries& s, JsonLayout layout) {
  const Widths w = widths_of(s.body(), layout);
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : s.body().terms()) {
    auto t = term_json(m, c, w);
    t["grade"] = m.moment_grade();
    terms.push_back(std::move(t));
  }
  return {{"grade_cap", s.grade_cap()}, {"terms", std::move(terms)}};
}

}  // namespace wpvol
