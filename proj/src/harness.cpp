#include "hypmeans/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Dense>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <json.hpp>

#include "hypmeans/harmonics.hpp"
#include "hypmeans/quadrature.hpp"
#include "hypmeans/radial_calculus.hpp"
#include "hypmeans/spherical_means.hpp"

namespace hypmeans {

// ---------------------------------------------------------------------------
// number formatting and config values

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& raw) {
  const std::string s = trim(raw);
  if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError("not a number: '" + s + "'");
  return v;
}

template <class Int>
Int parse_integer(const std::string& raw) {
  const std::string s = trim(raw);
  Int v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError("not an integer: '" + s + "'");
  return v;
}

template <class T>
std::vector<T> parse_list(const std::string& raw, const std::function<T(const std::string&)>& item) {
  std::vector<T> out;
  std::stringstream ss(raw);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(item(tok));
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

void assign(int& dst, const std::string& v) { dst = parse_integer<int>(v); }
void assign(std::uint64_t& dst, const std::string& v) { dst = parse_integer<std::uint64_t>(v); }
void assign(double& dst, const std::string& v) { dst = parse_double(v); }
void assign(std::vector<int>& dst, const std::string& v) {
  dst = parse_list<int>(v, [](const std::string& t) { return parse_integer<int>(t); });
}
void assign(std::vector<double>& dst, const std::string& v) { dst = parse_list<double>(v, parse_double); }

std::string show(int v) { return std::to_string(v); }
std::string show(std::uint64_t v) { return std::to_string(v); }
std::string show(double v) { return format_number(v); }
template <class T>
std::string show(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + show(v[i]);
  return out;
}

struct Field {
  std::string section;
  std::string key;
  std::function<void(ExperimentConfig&, const std::string&)> set;
  std::function<std::string(const ExperimentConfig&)> get;
};

template <class Access>
Field field(std::string section, std::string key, Access acc) {
  return {std::move(section), std::move(key),
          [acc](ExperimentConfig& c, const std::string& v) { assign(acc(c), v); },
          [acc](const ExperimentConfig& c) { return show(acc(c)); }};
}

template <class Access>
void grid_fields(std::vector<Field>& out, const std::string& section, Access grid) {
  out.push_back(field(section, "x_distances", [grid](auto& c) -> auto& { return grid(c).x_distances; }));
  out.push_back(field(section, "s_per_x", [grid](auto& c) -> auto& { return grid(c).s_per_x; }));
  out.push_back(field(section, "s_min", [grid](auto& c) -> auto& { return grid(c).s_min; }));
  out.push_back(field(section, "s_max", [grid](auto& c) -> auto& { return grid(c).s_max; }));
  out.push_back(field(section, "gap", [grid](auto& c) -> auto& { return grid(c).gap; }));
}

#define HM_FIELD(sec, key, expr) field(sec, key, [](auto& c) -> auto& { return c.expr; })

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> f;
    f.push_back(HM_FIELD("general", "seed", seed));
    f.push_back(Field{"annulus", "r",
                      [](ExperimentConfig& c, const std::string& v) { c.annulus.inner = parse_double(v); },
                      [](const ExperimentConfig& c) { return format_number(c.annulus.inner); }});
    f.push_back(Field{"annulus", "R",
                      [](ExperimentConfig& c, const std::string& v) {
                        const double R = parse_double(v);
                        c.annulus.outer = std::isinf(R) ? std::nullopt : std::optional<double>(R);
                      },
                      [](const ExperimentConfig& c) {
                        return c.annulus.outer ? format_number(*c.annulus.outer) : std::string("inf");
                      }});

    f.push_back(HM_FIELD("sufficiency", "dims", sufficiency.dims));
    f.push_back(HM_FIELD("sufficiency", "k_max_2d", sufficiency.k_max_2d));
    f.push_back(HM_FIELD("sufficiency", "k_max_3d", sufficiency.k_max_3d));
    f.push_back(HM_FIELD("sufficiency", "order_2d", sufficiency.order_2d));
    f.push_back(HM_FIELD("sufficiency", "order_3d", sufficiency.order_3d));
    f.push_back(HM_FIELD("sufficiency", "vanish_tol_2d", sufficiency.vanish_tol_2d));
    f.push_back(HM_FIELD("sufficiency", "vanish_tol_3d", sufficiency.vanish_tol_3d));
    grid_fields(f, "sufficiency", [](auto& c) -> auto& { return c.sufficiency.grid; });

    f.push_back(HM_FIELD("necessity", "n", necessity.n));
    f.push_back(HM_FIELD("necessity", "k_max", necessity.k_max));
    f.push_back(HM_FIELD("necessity", "m_min", necessity.m_min));
    f.push_back(HM_FIELD("necessity", "m_max", necessity.m_max));
    f.push_back(HM_FIELD("necessity", "order", necessity.order));
    f.push_back(HM_FIELD("necessity", "null_tol", necessity.null_tol));
    f.push_back(HM_FIELD("necessity", "angle_tol", necessity.angle_tol));
    f.push_back(HM_FIELD("necessity", "precondition_samples", necessity.precondition_samples));
    grid_fields(f, "necessity", [](auto& c) -> auto& { return c.necessity.grid; });

    f.push_back(HM_FIELD("algebra", "n_max", algebra.n_max));
    f.push_back(HM_FIELD("algebra", "k_max", algebra.k_max));
    f.push_back(HM_FIELD("algebra", "random_profiles", algebra.random_profiles));
    f.push_back(HM_FIELD("algebra", "m_range", algebra.m_range));
    f.push_back(HM_FIELD("algebra", "xp_identity_points", algebra.xp_identity_points));
    f.push_back(HM_FIELD("algebra", "xp_identity_k_max", algebra.xp_identity_k_max));
    f.push_back(HM_FIELD("algebra", "xp_identity_tol", algebra.xp_identity_tol));
    f.push_back(HM_FIELD("algebra", "shift_k_max", algebra.shift_k_max));
    f.push_back(HM_FIELD("algebra", "shift_tol", algebra.shift_tol));

    f.push_back(HM_FIELD("darboux", "order", darboux.order));
    f.push_back(HM_FIELD("darboux", "h", darboux.h));
    f.push_back(HM_FIELD("darboux", "k_max", darboux.k_max));
    f.push_back(HM_FIELD("darboux", "random_functions", darboux.random_functions));
    f.push_back(HM_FIELD("darboux", "tol", darboux.tol));

    f.push_back(HM_FIELD("ode", "dims", ode.dims));
    f.push_back(HM_FIELD("ode", "order_2d", ode.order_2d));
    f.push_back(HM_FIELD("ode", "order_3d", ode.order_3d));
    f.push_back(HM_FIELD("ode", "k_max", ode.k_max));
    f.push_back(HM_FIELD("ode", "center_distance", ode.center_distance));
    f.push_back(HM_FIELD("ode", "s_min", ode.s_min));
    f.push_back(HM_FIELD("ode", "s_max", ode.s_max));
    f.push_back(HM_FIELD("ode", "points", ode.points));
    f.push_back(HM_FIELD("ode", "tol", ode.tol));
    f.push_back(HM_FIELD("ode", "constant_tol", ode.constant_tol));

    f.push_back(HM_FIELD("decay", "s_min", decay.s_min));
    f.push_back(HM_FIELD("decay", "s_max", decay.s_max));
    f.push_back(HM_FIELD("decay", "samples", decay.samples));
    f.push_back(HM_FIELD("decay", "k_max", decay.k_max));
    f.push_back(HM_FIELD("decay", "tol", decay.tol));
    f.push_back(HM_FIELD("decay", "indicial_k_max", decay.indicial_k_max));
    f.push_back(HM_FIELD("decay", "indicial_tol", decay.indicial_tol));

    f.push_back(HM_FIELD("support", "bump_radius", support.bump_radius));
    f.push_back(HM_FIELD("support", "step", support.step));
    f.push_back(HM_FIELD("support", "r_max", support.r_max));
    f.push_back(HM_FIELD("support", "order", support.order));
    f.push_back(HM_FIELD("support", "vanish_tol", support.vanish_tol));
    return f;
  }();
  return table;
}

#undef HM_FIELD

void require(bool cond, const std::string& what) {
  if (!cond) throw ConfigError(what);
}

void validate(const ExperimentConfig& c) {
  require(c.annulus.inner >= 0.0 && (!c.annulus.outer || *c.annulus.outer > c.annulus.inner),
          "annulus: need 0 <= r < R");
  for (int n : c.sufficiency.dims) require(n == 2 || n == 3, "sufficiency.dims: only 2 and 3 are supported");
  for (int n : c.ode.dims) require(n == 2 || n == 3, "ode.dims: only 2 and 3 are supported");
  require(c.necessity.n == 2 || c.necessity.n == 3, "necessity.n: only 2 and 3 are supported");
  require(c.necessity.m_min <= c.necessity.m_max, "necessity: m_min > m_max");
  for (int order : {c.sufficiency.order_2d, c.sufficiency.order_3d, c.necessity.order, c.darboux.order,
                    c.ode.order_2d, c.ode.order_3d, c.support.order})
    require(order >= 4, "quadrature order must be >= 4");
  for (double tol : {c.sufficiency.vanish_tol_2d, c.sufficiency.vanish_tol_3d, c.necessity.null_tol,
                     c.necessity.angle_tol, c.algebra.xp_identity_tol, c.algebra.shift_tol, c.darboux.tol, c.ode.tol,
                     c.ode.constant_tol, c.decay.tol, c.decay.indicial_tol, c.support.vanish_tol})
    require(tol > 0.0, "tolerances must be positive");
  for (const GridSpec* g : {&c.sufficiency.grid, &c.necessity.grid}) {
    require(!g->x_distances.empty() && g->s_per_x >= 1, "grid: need x_distances and s_per_x >= 1");
    for (double d : g->x_distances) require(d >= 0.0 && std::isfinite(d), "grid: x distances must be finite and >= 0");
    require(g->gap > 0.0, "grid: gap must be positive");
  }
  require(c.darboux.h > 0.0, "darboux.h must be positive");
  require(c.ode.points >= 5 && c.ode.s_max > c.ode.s_min && c.ode.s_min > 0.0, "ode: need >= 5 points on s_min < s_max");
  require(c.decay.samples >= 5 && c.decay.s_max > c.decay.s_min, "decay: need >= 5 samples on s_min < s_max");
  require(c.support.step > 0.0 && c.support.r_max > 0.0 && c.support.bump_radius > 0.0, "support: radii must be positive");
  for (const auto& [k, cs] : c.sufficiency.coefficients)
    require(static_cast<int>(cs.size()) == k, "sufficiency.c_k" + std::to_string(k) + ": need exactly k coefficients");
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(std::istream& in) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("parse error: ") + e.what());
  }
  ExperimentConfig cfg;
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty())
      throw ConfigError("key '" + section + "' outside of any [section]");
    for (const auto& [key, node] : body) {
      const std::string value = node.data();
      try {
        if (section == "sufficiency" && key.rfind("c_k", 0) == 0) {
          const int k = parse_integer<int>(key.substr(3));
          if (k < 1) throw ConfigError("degree must be >= 1");
          std::vector<double> cs;
          assign(cs, value);
          cfg.sufficiency.coefficients.emplace_back(k, std::move(cs));
          continue;
        }
        const auto& table = fields();
        const auto it = std::find_if(table.begin(), table.end(),
                                     [&](const Field& f) { return f.section == section && f.key == key; });
        if (it == table.end()) throw ConfigError("unknown key");
        it->set(cfg, value);
      } catch (const ConfigError& e) {
        throw ConfigError("[" + section + "] " + key + ": " + e.what());
      }
    }
  }
  std::sort(cfg.sufficiency.coefficients.begin(), cfg.sufficiency.coefficients.end());
  validate(cfg);
  return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse(in);
}

std::vector<std::string> ExperimentConfig::echo() const {
  std::vector<std::string> out;
  for (const auto& f : fields()) out.push_back(f.section + "." + f.key + " = " + f.get(*this));
  for (const auto& [k, cs] : sufficiency.coefficients)
    out.push_back("sufficiency.c_k" + std::to_string(k) + " = " + show(cs));
  return out;
}

// ---------------------------------------------------------------------------
// records

Record& SuiteReport::check(Record r) {
  r.pass = !std::isnan(r.value) && r.value <= r.tolerance;
  records.push_back(std::move(r));
  return records.back();
}

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const Record& r) { return r.pass; }));
}

std::size_t SuiteReport::failed() const { return records.size() - passed(); }

namespace {

std::vector<double> coords_of(const PointBall& x) { return {x.coords().begin(), x.coords().end()}; }

PointBall on_axis(int n, double d) {
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  e[0] = 1.0;
  return PointBall::at_distance(d, e);
}

struct Pair {
  PointBall x;
  double s;
};

std::vector<Pair> sphere_grid(const GridSpec& g, int n, const AnnulusSpec& ann, bool s_max_relative) {
  std::vector<Pair> out;
  for (double d : g.x_distances) {
    const double lo = std::max(g.s_min, d + ann.inner + g.gap);
    double hi = s_max_relative ? d + g.s_max : g.s_max;
    if (ann.outer) hi = std::min(hi, *ann.outer - d - g.gap);
    if (!(hi >= lo)) continue;
    const PointBall x = on_axis(n, d);
    for (int t = 0; t < g.s_per_x; ++t) {
      const double s = g.s_per_x == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(t) / (g.s_per_x - 1));
      if (!admissible(SphereSpec(x, s), ann)) throw ConfigError("grid produced an inadmissible sphere");
      out.push_back({x, s});
    }
  }
  if (out.empty()) throw ConfigError("no admissible (x, s) pairs in the grid");
  return out;
}

Rational random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 1000), sign(0, 1);
  Rational c(num(rng) * (sign(rng) ? 1 : -1), 1000);
  c.canonicalize();
  return c;
}

RhoProfile random_laurent(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  RhoProfile::Terms terms;
  for (int m = lo; m <= hi; ++m) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    if (c != 0) terms[m] = c;
  }
  if (terms.empty()) terms[lo] = 1;
  return RhoProfile(terms);
}

/// Random point with r < d(0, x) and |x| <= max_norm.
PointBall random_annulus_point(std::mt19937_64& rng, int n, double r, double max_norm) {
  std::normal_distribution<double> gauss;
  const double lo = rho_of_s(r) + 1e-3;
  std::uniform_real_distribution<double> rad(lo, max_norm);
  std::vector<double> v(static_cast<std::size_t>(n));
  double len = 0.0;
  do {
    len = 0.0;
    for (double& c : v) {
      c = gauss(rng);
      len += c * c;
    }
  } while (len < 1e-12);
  const double scale = rad(rng) / std::sqrt(len);
  for (double& c : v) c *= scale;
  return PointBall(std::move(v));
}

int rule_order(int n, int order_2d, int order_3d) { return n == 2 ? order_2d : order_3d; }

}  // namespace

// ---------------------------------------------------------------------------
// sufficiency

SuiteReport run_sufficiency(const ExperimentConfig& cfg) {
  SuiteReport rep{"sufficiency", {}, {}};
  const auto& sc = cfg.sufficiency;
  std::mt19937_64 rng(cfg.seed);
  rep.notes.push_back("value = |M_s f(x)| / max over sphere nodes |f|");
  for (int n : sc.dims) {
    const QuadratureRule rule = build_rule(n, rule_order(n, sc.order_2d, sc.order_3d));
    const int k_max = n == 2 ? sc.k_max_2d : sc.k_max_3d;
    const double tol = n == 2 ? sc.vanish_tol_2d : sc.vanish_tol_3d;
    const auto pairs = sphere_grid(sc.grid, n, cfg.annulus, false);
    const AnnulusSpec domain = AnnulusSpec::unbounded(cfg.annulus.inner);
    SeparableField composite(n);

    for (int k = 1; k <= k_max; ++k) {
      std::vector<Rational> cs;
      const auto given = std::find_if(sc.coefficients.begin(), sc.coefficients.end(),
                                      [k](const auto& e) { return e.first == k; });
      if (given != sc.coefficients.end())
        for (double c : given->second) cs.emplace_back(c);
      else
        for (int i = 0; i < k; ++i) cs.push_back(random_coefficient(rng));
      const KernelProfile kp(n, k, cs);
      const FactoredProfile a = kp.factored();
      std::string line = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " C =";
      for (const auto& c : cs) line += " " + c.get_str();
      rep.notes.push_back(line);

      const auto& ys = basis(n, k);
      for (std::size_t j = 0; j < ys.size(); ++j) {
        const SeparableField field = SeparableField::harmonic(a, ys[j]);
        composite.add_term(a.times(-k, 0), ys[j].poly(), ys[j].normalization() / (j + 1.0));
        const BallFunction f = field.as_function(domain);
        for (const auto& [x, s] : pairs) {
          const double m = mean(f, x, s, rule);
          const double sup = sphere_sup(f, x, s, rule);
          rep.check({"sufficiency", n, k, static_cast<int>(j) + 1, -1, coords_of(x), s,
                     sup > 0 ? std::abs(m) / sup : std::abs(m), tol});
        }
      }
    }

    const BallFunction fc = composite.as_function(domain);
    const BallFunction zero{[](std::span<const double>) { return 0.0; }, std::nullopt};
    for (const auto& [x, s] : pairs) {
      const double sup = sphere_sup(fc, x, s, rule);
      const double m = std::abs(mean(fc, x, s, rule));
      rep.check({"sufficiency_composite", n, -1, -1, -1, coords_of(x), s, sup > 0 ? m / sup : m, tol});
      rep.check({"sufficiency_zero", n, -1, -1, -1, coords_of(x), s, std::abs(mean(zero, x, s, rule)), tol});
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// necessity

NullSpace necessity_null_space(const ExperimentConfig& cfg, int k) {
  const auto& nc = cfg.necessity;
  const int n = nc.n;
  const int cols = nc.m_max - nc.m_min + 1;
  const auto pairs = sphere_grid(nc.grid, n, cfg.annulus, true);
  if (static_cast<int>(pairs.size()) < cols)
    throw ConfigError("necessity: grid has fewer pairs than dictionary entries");
  const QuadratureRule rule = build_rule(n, nc.order);
  const SolidHarmonic y = k == 0 ? SolidHarmonic(MultiPoly::constant(n, 1), 0) : basis(n, k).front();
  const CompiledPoly ypoly(y.poly());
  const double ynorm = y.normalization();

  // Mean map: row per sphere, column per monomial rho^m Y(omega).
  Eigen::MatrixXd map(static_cast<Eigen::Index>(pairs.size()), cols);
  std::vector<double> acc(static_cast<std::size_t>(cols));
  double far = 0.0;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    std::fill(acc.begin(), acc.end(), 0.0);
    const double d0 = distance_from_origin(pairs[p].x.coords());
    far = std::max(far, d0 + pairs[p].s);
    for_each_sphere_node(pairs[p].x, pairs[p].s, rule, [&](std::span<const double> node, double w) {
      double rho2 = 0.0;
      for (double v : node) rho2 += v * v;
      const double rho = std::sqrt(rho2);
      const double yv = ynorm * ypoly(node) / std::pow(rho, k);
      double pw = std::pow(rho, nc.m_min);
      for (int c = 0; c < cols; ++c, pw *= rho) acc[static_cast<std::size_t>(c)] += w * pw * yv;
    });
    for (int c = 0; c < cols; ++c) map(static_cast<Eigen::Index>(p), c) = acc[static_cast<std::size_t>(c)] / rule.total_weight();
  }

  // Precondition by the triangular factor of the dictionary sampled over the
  // radii the spheres visit, so columns are orthonormal in L^2 of that range.
  const int samples = std::max(nc.precondition_samples, cols + 1);
  Eigen::MatrixXd dict(samples, cols);
  const double rho_lo = rho_of_s(std::max(cfg.annulus.inner, 1e-3)), rho_hi = rho_of_s(far);
  for (int t = 0; t < samples; ++t) {
    const double rho = rho_lo + (rho_hi - rho_lo) * t / (samples - 1);
    double pw = std::pow(rho, nc.m_min);
    for (int c = 0; c < cols; ++c, pw *= rho) dict(t, c) = pw;
  }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(dict);
  const Eigen::MatrixXd r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  const Eigen::MatrixXd tinv = r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(cols, cols));

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(map * tinv, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  NullSpace ns{n, k, nc.m_min, {}, {sv.data(), sv.data() + sv.size()}, 0.0};
  std::vector<int> null_idx;
  for (int c = 0; c < cols; ++c)
    if (sv(c) < nc.null_tol * sv(0)) null_idx.push_back(c);

  Eigen::MatrixXd q1(cols, static_cast<Eigen::Index>(null_idx.size()));
  for (std::size_t t = 0; t < null_idx.size(); ++t) {
    q1.col(static_cast<Eigen::Index>(t)) = svd.matrixV().col(null_idx[t]);
    Eigen::VectorXd c = tinv * svd.matrixV().col(null_idx[t]);
    c /= c.cwiseAbs().maxCoeff();
    ns.basis.emplace_back(c.data(), c.data() + c.size());
  }

  // Family span in the same coordinates: c' = R c.
  Eigen::MatrixXd fam = Eigen::MatrixXd::Zero(cols, std::max(k, 0));
  bool representable = true;
  for (int i = 1; i <= k; ++i) {
    const RhoProfile member = family_member(n, k, i);
    for (const auto& [m, c] : member.terms()) {
      if (m < nc.m_min || m > nc.m_max) {
        representable = false;
        continue;
      }
      fam(m - nc.m_min, i - 1) = to_double(c);
    }
  }
  if (!representable || static_cast<int>(null_idx.size()) != k) {
    ns.max_angle = k == 0 && null_idx.empty() ? 0.0 : std::numbers::pi / 2;
    return ns;
  }
  if (k == 0) return ns;
  const Eigen::MatrixXd q2 = Eigen::HouseholderQR<Eigen::MatrixXd>(r * fam).householderQ() *
                             Eigen::MatrixXd::Identity(cols, k);
  const Eigen::MatrixXd resid = q2 - q1 * (q1.transpose() * q2);
  const double sine = Eigen::JacobiSVD<Eigen::MatrixXd>(resid).singularValues()(0);
  ns.max_angle = std::asin(std::min(1.0, sine));
  return ns;
}

SuiteReport run_necessity_scan(const ExperimentConfig& cfg) {
  SuiteReport rep{"necessity", {}, {}};
  const auto& nc = cfg.necessity;
  const int n = nc.n;
  rep.notes.push_back("dictionary rho^m for m in [" + std::to_string(nc.m_min) + ", " + std::to_string(nc.m_max) +
                      "], Y = first basis harmonic of degree k");
  const auto suff_pairs = sphere_grid(cfg.sufficiency.grid, n, cfg.annulus, false);
  const QuadratureRule suff_rule =
      build_rule(n, rule_order(n, cfg.sufficiency.order_2d, cfg.sufficiency.order_3d));
  const double suff_tol = n == 2 ? cfg.sufficiency.vanish_tol_2d : cfg.sufficiency.vanish_tol_3d;

  for (int k = 0; k <= nc.k_max; ++k) {
    const NullSpace ns = necessity_null_space(cfg, k);
    const int nullity = static_cast<int>(ns.basis.size());
    rep.check({"necessity_nullity", n, k, 1, -1, {}, std::nullopt, std::abs(static_cast<double>(nullity - k)), 0.0});
    if (k > 0) rep.check({"necessity_angle", n, k, 1, -1, {}, std::nullopt, ns.max_angle, nc.angle_tol});

    const auto& sv = ns.singular_values;
    const double top = sv.front();
    const std::size_t kept = sv.size() - static_cast<std::size_t>(nullity);
    std::ostringstream note;
    note << "k=" << k << " nullity=" << nullity << " smallest kept sigma/sigma_max="
         << (kept > 0 ? format_number(sv[kept - 1] / top) : "none")
         << " largest null sigma/sigma_max=" << (nullity > 0 ? format_number(sv[kept] / top) : "none");
    rep.notes.push_back(note.str());

    // Every null vector must also pass the sufficiency check.
    if (k == 0) continue;
    const SolidHarmonic& y = basis(n, k).front();
    const CompiledPoly ypoly(y.poly());
    const double ynorm = y.normalization();
    for (std::size_t v = 0; v < ns.basis.size(); ++v) {
      const auto coeffs = ns.basis[v];
      const int m_min = ns.m_min;
      const BallFunction f{[coeffs, m_min, ypoly, ynorm, k](std::span<const double> x) {
                             double rho2 = 0.0;
                             for (double c : x) rho2 += c * c;
                             const double rho = std::sqrt(rho2);
                             double a = 0.0, pw = std::pow(rho, m_min);
                             for (double c : coeffs) {
                               a += c * pw;
                               pw *= rho;
                             }
                             return a * ynorm * ypoly(x) / std::pow(rho, k);
                           },
                           AnnulusSpec::unbounded(cfg.annulus.inner)};
      double worst = -1.0;
      const Pair* at = nullptr;
      for (const auto& pr : suff_pairs) {
        const double sup = sphere_sup(f, pr.x, pr.s, suff_rule);
        const double val = std::abs(mean(f, pr.x, pr.s, suff_rule)) / sup;
        if (val > worst) {
          worst = val;
          at = &pr;
        }
      }
      rep.check({"necessity_consistency", n, k, 1, static_cast<int>(v) + 1, coords_of(at->x), at->s, worst, suff_tol});
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// exact algebra

SuiteReport run_algebra_suite(const ExperimentConfig& cfg) {
  SuiteReport rep{"algebra", {}, {}};
  const auto& ac = cfg.algebra;
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);

  for (int t = 0; t < ac.random_profiles; ++t) {
    const RhoProfile a = random_laurent(rng, -4, 4);
    int mismatches = 0;
    for (int m = -ac.m_range; m <= ac.m_range; ++m)
      if (!(apply_Am(m, a) == apply_Am_product_form(m, a))) ++mismatches;
    rep.check({"am_forms", -1, -1, -1, t + 1, {}, std::nullopt, static_cast<double>(mismatches), 0.0});
  }

  for (int n = 2; n <= ac.n_max; ++n)
    for (int k = 1; k <= ac.k_max; ++k) {
      for (const auto& e : kernel_ladder_check(n, k).entries) {
        const double diff = to_double(Rational(abs(e.measured - e.expected)));
        rep.check({"ladder", n, k, -1, e.i, {}, std::nullopt, e.ok ? 0.0 : 1.0 + diff, 0.0});
      }
      const RhoProfile lk = apply_Lk_radial(n, k, family_member(n, k, k));
      rep.check({"lk_annihilation", n, k, -1, k, {}, std::nullopt, static_cast<double>(lk.terms().size()), 0.0});
    }

  for (int n : {2, 3})
    for (int k = 1; k <= ac.xp_identity_k_max; ++k) {
      std::vector<Rational> cs;
      for (int i = 0; i < k; ++i) cs.push_back(random_coefficient(rng));
      const RhoProfile kernel = KernelProfile(n, k, cs).expand();
      const RhoProfile generic = random_laurent(rng, -2, 4);
      const auto& ys = basis(n, k);
      for (std::size_t j = 0; j < ys.size(); ++j)
        for (int axis = 1; axis <= n; ++axis)
          for (int kind = 0; kind < 2; ++kind) {
            double worst = 0.0;
            for (int t = 0; t < ac.xp_identity_points; ++t) {
              const PointBall x = random_annulus_point(rng, n, cfg.annulus.inner, 0.95);
              worst = std::max(worst, xp_identity_check(kind ? generic : kernel, ys[j], axis, x.coords()).relative());
            }
            rep.check({std::string(kind ? "xp_identity_generic_p" : "xp_identity_kernel_p") + std::to_string(axis), n, k,
                       static_cast<int>(j) + 1, -1, {}, std::nullopt, worst, ac.xp_identity_tol});
          }
    }

  // Eigen shift: c = L_x f / f - (A_{k-1} A_{2-k-n} a) / a on the i = k member
  // (where the second term vanishes), and the scaled form 4 L_x f / f - A A a / a
  // on the i = 1 member, which is constant for every a.
  for (int n : {2, 3})
    for (int k = 1; k <= ac.shift_k_max; ++k) {
      const long kappa = eigen_shift(n, k);
      const SolidHarmonic& y = basis(n, k).front();
      const RhoProfile top = family_member(n, k, k), low = family_member(n, k, 1);
      const RhoProfile aa_top = apply_Lk_radial(n, k, top), aa_low = apply_Lk_radial(n, k, low);
      const SeparableField ftop = SeparableField::harmonic(top, y), flow = SeparableField::harmonic(low, y);
      double worst = 0.0, worst_scaled = 0.0, measured = 0.0;
      int used = 0;
      while (used < 10) {
        const PointBall x = random_annulus_point(rng, n, cfg.annulus.inner, 0.9);
        const double yv = y.evaluate_normalized(x.coords());
        if (std::abs(yv) * std::pow(x.norm(), -k) < 0.1) continue;  // stay away from nodal lines of Y
        const double rho = x.norm();
        const double c = ftop.laplace_beltrami(x.coords()) / ftop.value(x.coords()) - aa_top(rho) / top(rho);
        const double c4 = 4.0 * flow.laplace_beltrami(x.coords()) / flow.value(x.coords()) - aa_low(rho) / low(rho);
        worst = std::max(worst, std::abs(c - static_cast<double>(kappa)));
        worst_scaled = std::max(worst_scaled, std::abs(c4 - 4.0 * kappa) / std::max(1.0, 4.0 * kappa));
        measured = c;
        ++used;
      }
      rep.check({"eigen_shift", n, k, 1, k, {}, std::nullopt, worst, ac.shift_tol});
      rep.check({"eigen_shift_scaled", n, k, 1, 1, {}, std::nullopt, worst_scaled, ac.shift_tol});
      char buf[200];
      std::snprintf(buf, sizeof buf,
                    "eigen shift n=%d k=%d: measured %.12f, (k-1)(n+k-2) = %ld, alternative 4(k-1)(n+k-2) = %ld",
                    n, k, measured, kappa, 4 * kappa);
      rep.notes.push_back(buf);
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Darboux

SuiteReport run_darboux(const ExperimentConfig& cfg) {
  SuiteReport rep{"darboux", {}, {}};
  const auto& dc = cfg.darboux;
  const int n = 2;
  const QuadratureRule rule = build_rule(n, dc.order);
  const auto pairs = sphere_grid(cfg.sufficiency.grid, n, cfg.annulus, false);
  const AnnulusSpec domain = AnnulusSpec::unbounded(cfg.annulus.inner);
  const AnnulusSpec stencil_ann(cfg.annulus.inner + 2.0 * dc.h, cfg.annulus.outer);
  rep.notes.push_back("value = |L_s M_s f - M_s L_x f| / max over nodes of |f|, |L_x f|");

  for (int k = 1; k <= dc.k_max; ++k)
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= 2; ++j) {
        const SeparableField f = SeparableField::harmonic(family_member_factored(n, k, i), basis(n, k)[static_cast<std::size_t>(j - 1)]);
        for (const auto& [x, s] : pairs) {
          if (!admissible(SphereSpec(x, s), stencil_ann)) continue;
          const auto r = darboux_residual(f, x, s, rule, dc.h, cfg.annulus, domain);
          rep.check({"darboux_kernel", n, k, j, i, coords_of(x), s, r.relative(), dc.tol});
        }
      }

  std::mt19937_64 rng(cfg.seed ^ 0xd1b54a32d192ed03ULL);
  std::uniform_int_distribution<int> kdist(1, dc.k_max), jdist(1, 2);
  std::uniform_real_distribution<double> cdist(-1.0, 1.0);
  for (int t = 0; t < dc.random_functions; ++t) {
    const int k = kdist(rng), j = jdist(rng);
    const double c[3] = {cdist(rng), cdist(rng), cdist(rng)};
    const auto& y = basis(n, k)[static_cast<std::size_t>(j - 1)];
    SeparableField f(n);
    for (int e = 0; e < 3; ++e) f.add_term(RhoProfile::monomial(2 * e), y.poly(), c[e] * y.normalization());
    rep.notes.push_back("smooth function " + std::to_string(t + 1) + ": (" + format_number(c[0]) + " + " +
                        format_number(c[1]) + " rho^2 + " + format_number(c[2]) + " rho^4) rho^" +
                        std::to_string(k) + " Y_" + std::to_string(k) + std::to_string(j));
    for (const auto& [x, s] : pairs) {
      if (!admissible(SphereSpec(x, s), stencil_ann)) continue;
      const auto r = darboux_residual(f, x, s, rule, dc.h, cfg.annulus);
      rep.check({"darboux_smooth", n, k, j, t + 1, coords_of(x), s, r.relative(), dc.tol});
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// radial ODE

SuiteReport run_ode(const ExperimentConfig& cfg) {
  SuiteReport rep{"ode", {}, {}};
  const auto& oc = cfg.ode;
  const AnnulusSpec domain = AnnulusSpec::unbounded(cfg.annulus.inner);
  std::vector<double> grid(static_cast<std::size_t>(oc.points));
  for (int t = 0; t < oc.points; ++t) grid[static_cast<std::size_t>(t)] = oc.s_min + (oc.s_max - oc.s_min) * t / (oc.points - 1);
  rep.notes.push_back("F(s) = M_s f(x) for the i = k member at d(0,x) = " + format_number(oc.center_distance) +
                      "; these spheres lie in the domain but do not enclose B_r(0)");

  for (int n : oc.dims) {
    const QuadratureRule rule = build_rule(n, rule_order(n, oc.order_2d, oc.order_3d));
    const PointBall x = on_axis(n, oc.center_distance);
    for (double s : grid)
      if (!sphere_inside(SphereSpec(x, s), domain)) throw ConfigError("ode: sphere leaves the function domain");
    for (int k = 1; k <= oc.k_max; ++k) {
      const SeparableField f = SeparableField::harmonic(family_member_factored(n, k, k), basis(n, k).front());
      const auto prof = sample_mean_profile(f.as_function(domain), x, grid, rule);
      const auto res = ode_residual(prof, n, k);
      rep.check({"ode", n, k, 1, k, coords_of(x), std::nullopt, res.max_residual, oc.tol});
      rep.check({"ode_zform", n, k, 1, k, coords_of(x), std::nullopt, res.zform_discrepancy, oc.tol});
    }
    const BallFunction one{[](std::span<const double>) { return 1.0; }, std::nullopt};
    const auto prof = sample_mean_profile(one, x, grid, rule);
    rep.check({"ode_constant", n, 1, -1, -1, coords_of(x), std::nullopt, ode_residual(prof, n, 1).max_residual,
               oc.constant_tol});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// decay and indicial exponents

SuiteReport run_decay(const ExperimentConfig& cfg) {
  SuiteReport rep{"decay", {}, {}};
  const auto& dc = cfg.decay;
  rep.notes.push_back("value = |slope + (n+i-2)| / (n+i-2), slope of log|a(tanh(s/2))| on s in [" +
                      format_number(dc.s_min) + ", " + format_number(dc.s_max) + "]");
  for (int n : {2, 3})
    for (int k = 1; k <= dc.k_max; ++k)
      for (int i = 1; i <= k; ++i) {
        const FactoredProfile a = family_member_factored(n, k, i);
        const double expected = -(n + i - 2.0);
        const double slope = decay_fit(a, dc.s_min, dc.s_max, dc.samples);
        rep.check({"decay", n, k, -1, i, {}, std::nullopt, std::abs(slope - expected) / std::abs(expected), dc.tol});
        const double late = decay_fit(a, dc.s_min + 5.0, dc.s_max + 8.0, dc.samples);
        rep.notes.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) + " i=" + std::to_string(i) +
                            ": slope " + format_number(slope) + " (window end " + format_number(dc.s_max) +
                            "), " + format_number(late) + " on [" + format_number(dc.s_min + 5.0) + ", " +
                            format_number(dc.s_max + 8.0) + "], expected " + format_number(expected));
      }

  for (int n = 2; n <= 5; ++n) {
    const auto e1 = indicial_exponents(n, 1);
    // The k = 1 pair is {0, (n-1)/2}.
    const double dev = std::max(std::abs(std::min(e1.alpha, e1.beta)), std::abs(std::max(e1.alpha, e1.beta) - (n - 1) / 2.0));
    rep.check({"indicial_k1", n, 1, -1, -1, {}, std::nullopt, dev, 0.0});
    for (int k = 1; k <= dc.indicial_k_max; ++k) {
      const auto e = indicial_exponents(n, k);
      const double kappa = static_cast<double>(eigen_shift(n, k));
      rep.check({"indicial_sum", n, k, -1, -1, {}, std::nullopt, std::abs(e.alpha + e.beta - (n - 1) / 2.0), dc.indicial_tol});
      rep.check({"indicial_product", n, k, -1, -1, {}, std::nullopt, std::abs(e.alpha * e.beta + kappa / 4.0), dc.indicial_tol});
      if (n % 2 == 1 && k == 1)
        rep.notes.push_back("n=" + std::to_string(n) + ": nu = " + format_number(e.nu) + " is an integer for odd n");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// support detector

BallFunction radial_bump(double radius) {
  return {[radius](std::span<const double> y) {
            const double t = distance_from_origin(y) / radius;
            return t < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0;
          },
          std::nullopt};
}

SupportResult detect_support(const ExperimentConfig& cfg, const BallFunction& f, int n, double r_start) {
  const auto& sc = cfg.support;
  const QuadratureRule rule = build_rule(n, n == 2 ? sc.order : std::max(8, sc.order / 8));
  const double offsets[] = {0.2, 1.0, 4.0, 10.0};
  const double centres[] = {0.0, 0.1, 0.3};
  SupportResult out;
  for (int t = 0;; ++t) {
    const double r = r_start + t * sc.step;
    if (r > sc.r_max + 1e-12) break;
    bool vanish = true;
    for (double d : centres) {
      const PointBall x = on_axis(n, d);
      for (double off : offsets) {
        const double s = d + r + off * sc.step;
        if (cfg.annulus.outer && s + d >= *cfg.annulus.outer) continue;
        if (std::abs(mean(f, x, s, rule)) > sc.vanish_tol) vanish = false;
      }
      if (!vanish) break;
    }
    if (vanish) {
      out.r_hat = r;
      break;
    }
  }
  if (!out.r_hat) {
    out.verdict = "none <= r_max";
    return out;
  }
  // Sample f outside B_r(0) along a fan of directions.
  std::vector<double> dir(static_cast<std::size_t>(n));
  const int dirs = 16;
  for (int a = 0; a < dirs; ++a) {
    const double th = 2.0 * std::numbers::pi * a / dirs;
    std::fill(dir.begin(), dir.end(), 0.0);
    dir[0] = std::cos(th);
    dir[1] = std::sin(th);
    if (n > 2) dir[2] = 0.5;
    for (int j = 1; j <= 200; ++j) {
      const PointBall y = PointBall::at_distance(*out.r_hat + 0.02 * j, dir);
      out.max_outside = std::max(out.max_outside, std::abs(f.eval(y.coords())));
    }
  }
  out.zero_outside = out.max_outside <= sc.vanish_tol;
  out.verdict = out.zero_outside ? "consistent" : "decay hypothesis violated";
  return out;
}

SuiteReport run_support(const ExperimentConfig& cfg) {
  SuiteReport rep{"support", {}, {}};
  const auto& sc = cfg.support;
  const int n = 2;
  auto describe = [&](const std::string& name, const SupportResult& r) {
    rep.notes.push_back(name + ": r_hat = " + (r.r_hat ? format_number(*r.r_hat) : std::string("none")) +
                        ", max |f| outside = " + format_number(r.max_outside) + ", " + r.verdict);
  };

  const SupportResult bump = detect_support(cfg, radial_bump(sc.bump_radius), n, 0.0);
  describe("bump of radius " + format_number(sc.bump_radius), bump);
  rep.check({"support_bump", n, -1, -1, -1, {}, bump.r_hat,
             bump.r_hat ? std::abs(*bump.r_hat - sc.bump_radius) : std::numeric_limits<double>::infinity(),
             sc.step + 1e-12});
  rep.check({"support_bump_outside", n, -1, -1, -1, {}, bump.r_hat, bump.max_outside, sc.vanish_tol});

  const BallFunction zero{[](std::span<const double>) { return 0.0; }, std::nullopt};
  const SupportResult z = detect_support(cfg, zero, n, 0.0);
  describe("zero function", z);
  rep.check({"support_zero", n, -1, -1, -1, {}, z.r_hat,
             z.r_hat && z.zero_outside ? *z.r_hat : std::numeric_limits<double>::infinity(), 0.0});

  const double r0 = cfg.annulus.inner;
  const SeparableField member = SeparableField::harmonic(family_member_factored(n, 1, 1), basis(n, 1).front());
  const SupportResult kr = detect_support(cfg, member.as_function(AnnulusSpec::unbounded(r0)), n, r0);
  describe("kernel member (1/rho - rho) Y_11 on Ann(" + format_number(r0) + ", inf)", kr);
  rep.check({"support_kernel", n, 1, 1, 1, {}, kr.r_hat,
             kr.r_hat ? std::abs(*kr.r_hat - r0) : std::numeric_limits<double>::infinity(), sc.step + 1e-12});
  rep.check({"support_kernel_flagged", n, 1, 1, 1, {}, kr.r_hat,
             kr.verdict == "decay hypothesis violated" ? 0.0 : 1.0, 0.0});
  return rep;
}

// ---------------------------------------------------------------------------
// dispatch

std::vector<Suite> all_suites() {
  return {Suite::sufficiency, Suite::necessity, Suite::algebra, Suite::darboux,
          Suite::ode,         Suite::decay,     Suite::support};
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::sufficiency: return "sufficiency";
    case Suite::necessity: return "necessity";
    case Suite::algebra: return "algebra";
    case Suite::darboux: return "darboux";
    case Suite::ode: return "ode";
    case Suite::decay: return "decay";
    case Suite::support: return "support";
  }
  return "unknown";
}

SuiteReport run_suite(Suite s, const ExperimentConfig& cfg) {
  switch (s) {
    case Suite::sufficiency: return run_sufficiency(cfg);
    case Suite::necessity: return run_necessity_scan(cfg);
    case Suite::algebra: return run_algebra_suite(cfg);
    case Suite::darboux: return run_darboux(cfg);
    case Suite::ode: return run_ode(cfg);
    case Suite::decay: return run_decay(cfg);
    case Suite::support: return run_support(cfg);
  }
  throw std::invalid_argument("unknown suite");
}

// ---------------------------------------------------------------------------
// writers

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::string int_cell(int v) { return v < 0 ? std::string() : std::to_string(v); }

std::string joined(const std::vector<double>& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? ";" : "") + format_number(x[i]);
  return out;
}

}  // namespace

void write_csv(std::ostream& out, const ExperimentConfig& cfg, const std::vector<SuiteReport>& reports) {
  for (const auto& line : cfg.echo()) out << "# config " << line << "\r\n";
  for (const auto& r : reports) {
    out << "# suite " << r.suite << " passed=" << r.passed() << " failed=" << r.failed() << "\r\n";
    for (const auto& note : r.notes) out << "# note " << r.suite << ": " << note << "\r\n";
  }
  out << "experiment,n,k,j,i,x,s,value,tolerance,pass\r\n";
  for (const auto& r : reports)
    for (const auto& rec : r.records)
      out << csv_field(rec.experiment) << ',' << int_cell(rec.n) << ',' << int_cell(rec.k) << ','
          << int_cell(rec.j) << ',' << int_cell(rec.i) << ',' << csv_field(joined(rec.x)) << ','
          << (rec.s ? format_number(*rec.s) : std::string()) << ',' << format_number(rec.value) << ','
          << format_number(rec.tolerance) << ',' << (rec.pass ? "true" : "false") << "\r\n";
}

void write_json(std::ostream& out, const ExperimentConfig& cfg, const std::vector<SuiteReport>& reports,
                const std::string& generated) {
  using nlohmann::ordered_json;
  ordered_json body;
  body["config"] = cfg.echo();
  std::size_t passed = 0, failed = 0;
  ordered_json suites = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json recs = ordered_json::array();
    for (const auto& rec : r.records) {
      ordered_json j;
      j["experiment"] = rec.experiment;
      auto opt_int = [](int v) { return v < 0 ? ordered_json(nullptr) : ordered_json(v); };
      j["n"] = opt_int(rec.n);
      j["k"] = opt_int(rec.k);
      j["j"] = opt_int(rec.j);
      j["i"] = opt_int(rec.i);
      j["x"] = rec.x;
      j["s"] = rec.s ? ordered_json(*rec.s) : ordered_json(nullptr);
      j["value"] = std::isfinite(rec.value) ? ordered_json(rec.value) : ordered_json(format_number(rec.value));
      j["tolerance"] = rec.tolerance;
      j["pass"] = rec.pass;
      recs.push_back(std::move(j));
    }
    passed += r.passed();
    failed += r.failed();
    suites.push_back({{"name", r.suite}, {"passed", r.passed()}, {"failed", r.failed()}, {"ok", r.ok()},
                      {"notes", r.notes}, {"records", std::move(recs)}});
  }
  body["suites"] = std::move(suites);
  body["summary"] = {{"passed", passed}, {"failed", failed}, {"ok", failed == 0}};
  ordered_json doc;
  doc["header"] = {{"generated", generated}, {"tool", "hypmeans"}};
  doc["body"] = std::move(body);
  out << doc.dump(2) << '\n';
}

}  // namespace hypmeans
