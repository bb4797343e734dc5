#include "wpvol/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wpvol {

std::string to_string(Atom a) {
  switch (a.kind) {
    case AtomKind::PiSquared: return "pi2";
    case AtomKind::LengthSquared: return "L" + std::to_string(a.index) + "^2";
    case AtomKind::Moment: return "m" + std::to_string(a.index);
    case AtomKind::AuxSeries: return "r";
    case AtomKind::Integration: return "u";
    case AtomKind::THat: return "t" + std::to_string(a.index);
    case AtomKind::GammaHat: return "g" + std::to_string(a.index);
    case AtomKind::GammaOneInverse: return "g1^-1";
  }
  return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Atom a, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent on " + to_string(a));
  if (exponent > 0) factors_.emplace_back(a, exponent);
}

Monomial::Monomial(std::initializer_list<Factor> factors)
    : Monomial(from_factors(std::vector<Factor>(factors))) {}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& x, const Factor& y) { return x.first < y.first; });
  Monomial m;
  for (const auto& [atom, e] : factors) {
    if (e < 0) throw std::invalid_argument("negative exponent on " + to_string(atom));
    if (!m.factors_.empty() && m.factors_.back().first == atom) {
      m.factors_.back().second += e;
    } else if (e > 0) {
      m.factors_.emplace_back(atom, e);
    }
  }
  return m;
}

int Monomial::exponent(Atom a) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), a,
                             [](const Factor& f, Atom x) { return f.first < x; });
  return (it != factors_.end() && it->first == a) ? it->second : 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

int Monomial::moment_grade() const {
  int g = 0;
  for (const auto& [atom, e] : factors_)
    if (atom.kind == AtomKind::Moment) g += e;
  return g;
}

Monomial Monomial::with_exponent(Atom a, int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative exponent on " + to_string(a));
  Monomial m;
  m.factors_.reserve(factors_.size() + 1);
  bool placed = false;
  for (const auto& f : factors_) {
    if (!placed && a < f.first) {
      if (exponent > 0) m.factors_.emplace_back(a, exponent);
      placed = true;
    }
    if (f.first == a) {
      if (exponent > 0) m.factors_.emplace_back(a, exponent);
      placed = true;
      continue;
    }
    m.factors_.push_back(f);
  }
  if (!placed && exponent > 0) m.factors_.emplace_back(a, exponent);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      m.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return m;
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da < db;
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) return true;
    if (i == fa.size() || fb[j].first < fa[i].first) return false;
    if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
    ++i;
    ++j;
  }
  return false;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::atom(Atom a, int exponent) { return term(Rational(1), Monomial(a, exponent)); }

Polynomial Polynomial::term(const Rational& coeff, Monomial m) {
  Polynomial p;
  if (coeff != 0) p.terms_.emplace(std::move(m), coeff);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<Atom> Polynomial::atoms() const {
  std::set<Atom> out;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

int Polynomial::max_moment_grade() const {
  int g = 0;
  for (const auto& [m, c] : terms_) g = std::max(g, m.moment_grade());
  return g;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [m, c] : terms_) c *= scalar;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

// ------------------------------------------------------------ free functions

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int max_grade) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms()) {
    const int ga = ma.moment_grade();
    if (ga > max_grade) continue;
    for (const auto& [mb, cb] : b.terms()) {
      if (ga + mb.moment_grade() > max_grade) continue;
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

Polynomial truncate_grade(const Polynomial& p, int max_grade) {
  Polynomial out;
  for (const auto& [m, c] : p.terms())
    if (m.moment_grade() <= max_grade) out.add_term(m, c);
  return out;
}

Polynomial grade_part(const Polynomial& p, int grade) {
  Polynomial out;
  for (const auto& [m, c] : p.terms())
    if (m.moment_grade() == grade) out.add_term(m, c);
  return out;
}

Polynomial partial(const Polynomial& p, Atom x) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponent(x);
    if (e == 0) continue;
    out.add_term(m.with_exponent(x, e - 1), c * e);
  }
  return out;
}

Polynomial integrate_halfsquare(const Polynomial& p, Atom upper) {
  const Atom u = Atom::integration();
  if (upper == u) throw std::invalid_argument("integration bound cannot be the integration variable");
  if (upper.kind == AtomKind::GammaOneInverse)
    throw std::invalid_argument("integration bound must be a polynomial atom");
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponent(u);
    Monomial rest = m.with_exponent(u, 0);
    Monomial bound(upper, e + 1);
    out.add_term(rest * bound, c / Rational(2 * (e + 1)));
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const std::map<Atom, Polynomial>& bindings) {
  std::map<std::pair<Atom, int>, Polynomial> power_cache;
  auto power = [&](Atom a, int e) -> const Polynomial& {
    auto key = std::make_pair(a, e);
    auto it = power_cache.find(key);
    if (it == power_cache.end()) it = power_cache.emplace(key, bindings.at(a).pow(e)).first;
    return it->second;
  };
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> kept;
    Polynomial factor(c);
    for (const auto& [atom, e] : m.factors()) {
      if (bindings.count(atom)) {
        factor *= power(atom, e);
      } else {
        kept.emplace_back(atom, e);
      }
    }
    factor *= Polynomial::term(Rational(1), Monomial::from_factors(std::move(kept)));
    out += factor;
  }
  return out;
}

Polynomial rename_atoms(const Polynomial& p, const std::map<Atom, Atom>& renaming) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> factors;
    for (const auto& [atom, e] : m.factors()) {
      auto it = renaming.find(atom);
      factors.emplace_back(it == renaming.end() ? atom : it->second, e);
    }
    out.add_term(Monomial::from_factors(std::move(factors)), c);
  }
  return out;
}

double evaluate(const Polynomial& p, const std::map<Atom, double>& bindings) {
  long double sum = 0.0L;
  for (const auto& [m, c] : p.terms()) {
    long double value = to_double(c);
    for (const auto& [atom, e] : m.factors()) {
      auto it = bindings.find(atom);
      if (it == bindings.end()) throw std::invalid_argument("unbound atom " + to_string(atom));
      value *= std::pow(static_cast<long double>(it->second), e);
    }
    sum += value;
  }
  return static_cast<double>(sum);
}

Polynomial coefficient_of(const Polynomial& p, Atom x, int k) {
  Polynomial out;
  for (const auto& [m, c] : p.terms())
    if (m.exponent(x) == k) out.add_term(m.with_exponent(x, 0), c);
  return out;
}

int degree_in(const Polynomial& p, Atom x) {
  int d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m.exponent(x));
  return d;
}

}  // namespace wpvol
