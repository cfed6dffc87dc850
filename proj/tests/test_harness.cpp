#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hypmeans/harness.hpp"
#include "hypmeans/radial_calculus.hpp"

using namespace hypmeans;
namespace fs = std::filesystem;

namespace {

ExperimentConfig parse(const std::string& text) {
  std::istringstream in(text);
  return ExperimentConfig::parse(in);
}

ExperimentConfig small_config() {
  return parse(
      "[sufficiency]\n"
      "dims = 2\n"
      "k_max_2d = 2\n"
      "[necessity]\n"
      "k_max = 1\n");
}

const Record* find(const SuiteReport& r, const std::string& experiment, int n, int k) {
  for (const auto& rec : r.records)
    if (rec.experiment == experiment && rec.n == n && rec.k == k) return &rec;
  return nullptr;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string drop_first_line(const std::string& s) { return s.substr(s.find('\n') + 1); }

int run_cli(const std::string& args) {
  const std::string cmd = std::string(HYPMEANS_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Config, DefaultsAndOverrides) {
  const ExperimentConfig d;
  EXPECT_EQ(d.annulus.inner, 0.5);
  EXPECT_FALSE(d.annulus.outer.has_value());
  EXPECT_EQ(d.sufficiency.grid.x_distances.size() * static_cast<std::size_t>(d.sufficiency.grid.s_per_x), 20u);
  EXPECT_EQ(d.necessity.m_min, -5);
  EXPECT_EQ(d.necessity.m_max, 5);

  const auto c = parse(
      "; comment\n[general]\nseed = 7\n[annulus]\nr = 0.25\nR = 4\n"
      "[sufficiency]\nx_distances = 0, 0.5\nc_k2 = 1, -0.5\n");
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.annulus.inner, 0.25);
  ASSERT_TRUE(c.annulus.outer.has_value());
  EXPECT_EQ(*c.annulus.outer, 4.0);
  EXPECT_EQ(c.sufficiency.grid.x_distances, (std::vector<double>{0.0, 0.5}));
  ASSERT_EQ(c.sufficiency.coefficients.size(), 1u);
  EXPECT_EQ(c.sufficiency.coefficients[0].second, (std::vector<double>{1.0, -0.5}));
  EXPECT_FALSE(parse("[annulus]\nR = inf\n").annulus.outer.has_value());
}

TEST(Config, Rejects) {
  EXPECT_THROW(parse("[annulus]\nr = abc\n"), ConfigError);
  EXPECT_THROW(parse("[nowhere]\nx = 1\n"), ConfigError);
  EXPECT_THROW(parse("[annulus]\nq = 1\n"), ConfigError);
  EXPECT_THROW(parse("[annulus\nr = 1\n"), ConfigError);
  EXPECT_THROW(parse("r = 1\n"), ConfigError);
  EXPECT_THROW(parse("[annulus]\nr = 2\nR = 1\n"), ConfigError);
  EXPECT_THROW(parse("[sufficiency]\nvanish_tol_2d = 0\n"), ConfigError);
  EXPECT_THROW(parse("[sufficiency]\nc_k2 = 1\n"), ConfigError);
  EXPECT_THROW(parse("[sufficiency]\ndims = 4\n"), ConfigError);
}

TEST(Config, EchoRoundTrips) {
  const auto c = parse("[annulus]\nr = 0.3\n[decay]\ntol = 0.05\n");
  std::string text;
  std::string section;
  for (const auto& line : c.echo()) {
    const auto dot = line.find('.');
    const std::string sec = line.substr(0, dot);
    if (sec != section) text += "[" + (section = sec) + "]\n";
    text += line.substr(dot + 1) + "\n";
  }
  EXPECT_EQ(parse(text).echo(), c.echo());
}

TEST(Csv, Quoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1e-20), "1e-20");
}

TEST(Csv, ColumnsAndDeterminism) {
  const ExperimentConfig cfg = small_config();
  const auto a = run_sufficiency(cfg), b = run_sufficiency(cfg);
  std::ostringstream sa, sb;
  write_csv(sa, cfg, {a});
  write_csv(sb, cfg, {b});
  EXPECT_EQ(sa.str(), sb.str());
  const std::string text = sa.str();
  EXPECT_NE(text.find("experiment,n,k,j,i,x,s,value,tolerance,pass\r\n"), std::string::npos);
  EXPECT_NE(text.find("sufficiency,2,1,1,,0;0,1.2,"), std::string::npos);

  std::ostringstream ja, jb;
  write_json(ja, cfg, {a}, "t1");
  write_json(jb, cfg, {b}, "t2");
  const std::string x = ja.str(), y = jb.str();
  EXPECT_EQ(x.substr(x.find("\"body\"")), y.substr(y.find("\"body\"")));
}

TEST(Sufficiency, SmallGridPasses) {
  const auto rep = run_sufficiency(small_config());
  EXPECT_TRUE(rep.ok());
  // 20 pairs x (2 + 2 harmonics) plus composite and zero rows.
  EXPECT_EQ(rep.records.size(), 20u * 4u + 40u);
  for (const auto& r : rep.records) {
    ASSERT_TRUE(r.s.has_value());
    const PointBall x(r.x);
    EXPECT_TRUE(admissible(SphereSpec(x, *r.s), AnnulusSpec::unbounded(0.5)));
  }
}

TEST(Sufficiency, ZeroCoefficientsPass) {
  const auto cfg = parse("[sufficiency]\ndims = 2\nk_max_2d = 2\nc_k1 = 0\nc_k2 = 0, 0\n");
  const auto rep = run_sufficiency(cfg);
  EXPECT_TRUE(rep.ok());
  for (const auto& r : rep.records) EXPECT_EQ(r.value, 0.0);
}

TEST(Sufficiency, EmptyGridIsConfigError) {
  const auto cfg = parse("[annulus]\nr = 0.5\nR = 1.0\n[sufficiency]\ndims = 2\n");
  EXPECT_THROW(run_sufficiency(cfg), ConfigError);
}

TEST(Necessity, OneDimensionalNullSpace) {
  const auto cfg = parse("[necessity]\nm_min = -3\nm_max = 3\n");
  const NullSpace ns = necessity_null_space(cfg, 1);
  ASSERT_EQ(ns.basis.size(), 1u);
  const auto& v = ns.basis[0];  // coefficients of rho^-3 .. rho^3
  const double scale = v[2];    // rho^-1
  for (std::size_t m = 0; m < v.size(); ++m) {
    const double expected = m == 2 ? 1.0 : (m == 4 ? -1.0 : 0.0);
    EXPECT_NEAR(v[m] / scale, expected, 1e-7) << m;
  }
  EXPECT_LT(ns.max_angle, 1e-6);
}

TEST(Necessity, RadialTrivialAndTwoDimensional) {
  const ExperimentConfig cfg;
  EXPECT_TRUE(necessity_null_space(cfg, 0).basis.empty());
  const NullSpace ns2 = necessity_null_space(cfg, 2);
  EXPECT_EQ(ns2.basis.size(), 2u);
  EXPECT_LT(ns2.max_angle, 1e-6);
}

TEST(Algebra, EigenShiftMeasured) {
  ExperimentConfig cfg;
  cfg.algebra.n_max = 3;
  cfg.algebra.k_max = 3;
  cfg.algebra.random_profiles = 5;
  cfg.algebra.xp_identity_points = 5;
  cfg.algebra.shift_k_max = 3;
  const auto rep = run_algebra_suite(cfg);
  EXPECT_TRUE(rep.ok());
  const Record* c22 = find(rep, "eigen_shift", 2, 2);
  ASSERT_NE(c22, nullptr);
  EXPECT_LT(c22->value, 1e-9);
  for (int n : {2, 3}) EXPECT_LT(find(rep, "eigen_shift", n, 1)->value, 1e-9);
  bool stated = false;
  for (const auto& note : rep.notes)
    if (note.find("n=2 k=2") != std::string::npos && note.find("= 2,") != std::string::npos &&
        note.find("= 8") != std::string::npos)
      stated = true;
  EXPECT_TRUE(stated);
}

TEST(Support, BumpZeroAndKernel) {
  const ExperimentConfig cfg;
  const auto bump = detect_support(cfg, radial_bump(0.8), 2, 0.0);
  ASSERT_TRUE(bump.r_hat.has_value());
  EXPECT_NEAR(*bump.r_hat, 0.8, 0.05 + 1e-12);
  EXPECT_EQ(bump.verdict, "consistent");

  const BallFunction zero{[](std::span<const double>) { return 0.0; }, std::nullopt};
  const auto z = detect_support(cfg, zero, 2, 0.0);
  ASSERT_TRUE(z.r_hat.has_value());
  EXPECT_EQ(*z.r_hat, 0.0);
  EXPECT_TRUE(z.zero_outside);

  const auto rep = run_support(cfg);
  EXPECT_TRUE(rep.ok());
  const auto kernel = std::find_if(rep.notes.begin(), rep.notes.end(),
                                   [](const std::string& s) { return s.find("kernel member") != std::string::npos; });
  ASSERT_NE(kernel, rep.notes.end());
  EXPECT_NE(kernel->find("decay hypothesis violated"), std::string::npos);

  ExperimentConfig tight = cfg;
  tight.support.r_max = 0.5;
  EXPECT_EQ(detect_support(tight, radial_bump(0.8), 2, 0.0).verdict, "none <= r_max");
}

TEST(Cli, ExitCodes) {
  const fs::path dir = fs::temp_directory_path() / "hypmeans_cli_test";
  fs::create_directories(dir);
  {
    std::ofstream(dir / "bad.ini") << "[annulus\nr = 0.5\n";
    std::ofstream(dir / "strict.ini") << "[sufficiency]\ndims = 2\nk_max_2d = 1\nvanish_tol_2d = 1e-20\n";
    std::ofstream(dir / "quick.ini") << "[sufficiency]\ndims = 2\nk_max_2d = 2\n";
  }
  EXPECT_EQ(run_cli("sufficiency --config " + (dir / "bad.ini").string()), 2);
  EXPECT_EQ(run_cli("sufficiency --config " + (dir / "missing.ini").string()), 2);
  EXPECT_EQ(run_cli("sufficiency --format xml"), 2);
  EXPECT_EQ(run_cli(""), 2);
  EXPECT_EQ(run_cli("sufficiency --quiet --config " + (dir / "strict.ini").string()), 1);
  EXPECT_EQ(run_cli("sufficiency --quiet --config " + (dir / "quick.ini").string()), 0);

  const fs::path a = dir / "a", b = dir / "b";
  ASSERT_EQ(run_cli("sufficiency --quiet --seed 11 --out " + a.string() + " --config " + (dir / "quick.ini").string()), 0);
  ASSERT_EQ(run_cli("sufficiency --quiet --seed 11 --out " + b.string() + " --config " + (dir / "quick.ini").string()), 0);
  const std::string ra = slurp(a / "sufficiency.csv"), rb = slurp(b / "sufficiency.csv");
  ASSERT_FALSE(ra.empty());
  EXPECT_EQ(ra.rfind("# generated ", 0), 0u);
  EXPECT_EQ(drop_first_line(ra), drop_first_line(rb));

  ASSERT_EQ(run_cli("sufficiency --quiet --format json --out " + a.string() + " --config " + (dir / "quick.ini").string()), 0);
  EXPECT_NE(slurp(a / "sufficiency.json").find("\"header\""), std::string::npos);
  fs::remove_all(dir);
}
