#include "hypmeans/rho_profile.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hypmeans {

RhoProfile::RhoProfile(Terms terms) {
  for (auto& [m, c] : terms) add(m, c);
}

RhoProfile RhoProfile::monomial(int m, const Rational& c) {
  RhoProfile p;
  p.add(m, c);
  return p;
}

RhoProfile RhoProfile::one_minus_rho2(int e) {
  if (e < 0) throw std::invalid_argument("one_minus_rho2: exponent must be >= 0");
  RhoProfile p;
  for (int l = 0; l <= e; ++l) p.add(2 * l, (l % 2 == 0 ? 1 : -1) * binomial(e, l));
  return p;
}

Rational RhoProfile::coefficient(int m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int RhoProfile::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("RhoProfile: zero profile has no exponents");
  return terms_.begin()->first;
}

int RhoProfile::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("RhoProfile: zero profile has no exponents");
  return terms_.rbegin()->first;
}

void RhoProfile::add(int m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RhoProfile& RhoProfile::operator+=(const RhoProfile& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

RhoProfile& RhoProfile::operator-=(const RhoProfile& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

RhoProfile& RhoProfile::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

RhoProfile operator*(const RhoProfile& a, const RhoProfile& b) {
  RhoProfile out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add(ma + mb, ca * cb);
  return out;
}

RhoProfile RhoProfile::shifted(int m) const {
  RhoProfile out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + m, c);
  return out;
}

RhoProfile RhoProfile::derivative() const {
  RhoProfile out;
  for (const auto& [m, c] : terms_)
    if (m != 0) out.add(m - 1, c * m);
  return out;
}

double RhoProfile::operator()(double rho) const {
  double acc = 0.0;
  for (const auto& [m, c] : terms_) acc += c.get_d() * std::pow(rho, m);
  return acc;
}

std::string RhoProfile::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    os << Rational(abs(c)).get_str();
    if (m != 0) os << "*rho^" << m;
  }
  return os.str();
}

FactoredProfile::FactoredProfile(const RhoProfile& laurent) {
  for (const auto& [m, c] : laurent.terms()) terms_.push_back({c, m, 0});
}

FactoredProfile FactoredProfile::term(const Rational& c, int rho_power, int u_power) {
  FactoredProfile p;
  p.add(c, rho_power, u_power);
  return p;
}

void FactoredProfile::add(const Rational& c, int m, int e) {
  if (c == 0) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->rho_power == m && it->u_power == e) {
      it->coeff += c;
      if (it->coeff == 0) terms_.erase(it);
      return;
    }
  }
  terms_.push_back({c, m, e});
}

FactoredProfile& FactoredProfile::operator+=(const FactoredProfile& o) {
  for (const auto& t : o.terms_) add(t.coeff, t.rho_power, t.u_power);
  return *this;
}

FactoredProfile& FactoredProfile::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

FactoredProfile FactoredProfile::times(int rho_power, int u_power) const {
  FactoredProfile out;
  for (const auto& t : terms_) out.add(t.coeff, t.rho_power + rho_power, t.u_power + u_power);
  return out;
}

FactoredProfile FactoredProfile::derivative() const {
  // d/drho [rho^m u^e] = m rho^(m-1) u^e - 2 e rho^(m+1) u^(e-1)
  FactoredProfile out;
  for (const auto& t : terms_) {
    if (t.rho_power != 0) out.add(t.coeff * t.rho_power, t.rho_power - 1, t.u_power);
    if (t.u_power != 0) out.add(t.coeff * (-2 * t.u_power), t.rho_power + 1, t.u_power - 1);
  }
  return out;
}

RhoProfile FactoredProfile::expand() const {
  RhoProfile out;
  for (const auto& t : terms_) {
    if (t.u_power < 0) throw std::domain_error("FactoredProfile::expand: negative power of (1 - rho^2)");
    out += RhoProfile::one_minus_rho2(t.u_power).shifted(t.rho_power) * t.coeff;
  }
  return out;
}

double FactoredProfile::operator()(double rho, double u) const {
  double acc = 0.0;
  for (const auto& t : terms_) acc += t.coeff.get_d() * std::pow(rho, t.rho_power) * std::pow(u, t.u_power);
  return acc;
}

CompiledProfile::CompiledProfile(const FactoredProfile& a) {
  const FactoredProfile a1 = a.derivative();
  const FactoredProfile a2 = a1.derivative();
  auto fill = [](const FactoredProfile& p, Terms& out) {
    for (const auto& t : p.terms()) out.push_back({t.coeff.get_d(), t.rho_power, t.u_power});
  };
  fill(a, v_);
  fill(a1, d1_);
  fill(a2, d2_);
}

double CompiledProfile::eval(const Terms& t, double rho, double u) {
  double acc = 0.0;
  for (const auto& term : t) {
    double v = term.c;
    if (term.m != 0) v *= std::pow(rho, term.m);
    if (term.e != 0) v *= std::pow(u, term.e);
    acc += v;
  }
  return acc;
}

}  // namespace hypmeans
