#include "hypmeans/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hypmeans {

namespace {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Integral of x^e over S^{n-1} divided by Omega_n:
/// prod (e_i - 1)!! / (n (n+2) ... (n + |e| - 2)) when every e_i is even, else 0.
Rational monomial_sphere_mean(const Exponent& e) {
  const int n = static_cast<int>(e.size());
  Rational num = 1;
  int half = 0;
  for (int p : e) {
    if (p % 2 != 0) return 0;
    for (int f = p - 1; f > 1; f -= 2) num *= f;
    half += p / 2;
  }
  Rational den = 1;
  for (int j = 0; j < half; ++j) den *= n + 2 * j;
  return num / den;
}

}  // namespace

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a > b;
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("MultiPoly: need at least one variable");
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::coordinate(int nvars, int axis) {
  if (axis < 1 || axis > nvars) throw std::out_of_range("MultiPoly::coordinate: axis out of range");
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(axis - 1)] = 1;
  return monomial(e);
}

MultiPoly MultiPoly::radius_power(int nvars, int j) {
  MultiPoly r2(nvars);
  for (int i = 1; i <= nvars; ++i) {
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i - 1)] = 2;
    r2.add_term(e, 1);
  }
  MultiPoly out = constant(nvars, 1);
  for (int i = 0; i < j; ++i) out = out * r2;
  return out;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool MultiPoly::is_homogeneous(int k) const {
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != k) return false;
  return true;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  MultiPoly out(a.nvars_);
  Exponent e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::derivative(int axis) const {
  if (axis < 1 || axis > nvars_) throw std::out_of_range("MultiPoly::derivative: axis out of range");
  const auto i = static_cast<std::size_t>(axis - 1);
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent d = e;
    d[i] -= 1;
    out.add_term(d, c * e[i]);
  }
  return out;
}

MultiPoly MultiPoly::laplacian() const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 2) continue;
      Exponent d = e;
      d[i] -= 2;
      out.add_term(d, c * (e[i] * (e[i] - 1)));
    }
  return out;
}

MultiPoly MultiPoly::radial_derivative() const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * total_degree(e));
  return out;
}

double MultiPoly::evaluate(std::span<const double> x) const { return CompiledPoly(*this)(x); }

Rational MultiPoly::sphere_mean() const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * monomial_sphere_mean(e);
  return acc;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    const bool unit = (mag == 1) && total_degree(e) > 0;
    if (!unit) os << mag.get_str();
    bool star = !unit;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (star) os << "*";
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      star = true;
    }
  }
  return os.str();
}

CompiledPoly::CompiledPoly(const MultiPoly& p) : nvars_(p.nvars()) {
  for (const auto& [e, c] : p.terms()) {
    for (int v : e) max_power_ = std::max(max_power_, v);
    exps_.insert(exps_.end(), e.begin(), e.end());
    coeffs_.push_back(c.get_d());
  }
}

double CompiledPoly::operator()(std::span<const double> x) const {
  if (coeffs_.empty()) return 0.0;
  if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("CompiledPoly: dimension mismatch");
  // Power table x_i^p for p <= max_power.
  thread_local std::vector<double> powers;
  const auto stride = static_cast<std::size_t>(max_power_ + 1);
  powers.resize(stride * static_cast<std::size_t>(nvars_));
  for (int i = 0; i < nvars_; ++i) {
    double* row = powers.data() + static_cast<std::size_t>(i) * stride;
    row[0] = 1.0;
    for (int p = 1; p <= max_power_; ++p) row[p] = row[p - 1] * x[static_cast<std::size_t>(i)];
  }
  double acc = 0.0;
  const std::size_t nv = static_cast<std::size_t>(nvars_);
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    double term = coeffs_[t];
    for (std::size_t i = 0; i < nv; ++i)
      term *= powers[i * stride + static_cast<std::size_t>(exps_[t * nv + i])];
    acc += term;
  }
  return acc;
}

MultiPoly laplacian(const MultiPoly& p) { return p.laplacian(); }

}  // namespace hypmeans
