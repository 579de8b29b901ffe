#include <doctest.h>

#include <sstream>

#include "qfs/limit_set.hpp"
#include "qfs/schwarzian.hpp"
#include "qfs/schwarzian_suite.hpp"
#include "support.hpp"

using namespace qfs;
using namespace qfs::test;

TEST_CASE("Schwarzian examples") {
  const auto mob = moebius_sample<S>(C(2, 1), C(0.5), C(0.3, -0.2), C(1));
  CHECK(std::abs(schwarzian_at(mob, C(0.1, 0.2))) <= 1e-8);
  auto mob_numeric = moebius_sample<S>(C(2, 1), C(0.5), C(0.3, -0.2), C(1), false);
  CHECK(std::abs(schwarzian_at(mob_numeric, C(0.1, 0.2))) <= 1e-8);

  const auto square = cubic_sample<S>({C(0), C(0), C(1), C(0)});
  const auto square_numeric = cubic_sample<S>({C(0), C(0), C(1), C(0)}, false);
  CHECK(std::abs(schwarzian_at(square, C(1)) - C(-1.5)) <= 1e-12);
  CHECK(std::abs(schwarzian_at(square_numeric, C(1)) - C(-1.5)) <= 1e-8);
  for (C z : {C(0), C(1, 1), C(-2, 0.5)}) {
    CHECK(std::abs(schwarzian_at(exp_sample<S>(), z) - C(-0.5)) <= 1e-12);
    CHECK(std::abs(schwarzian_at(exp_sample<S>(false), z) - C(-0.5)) <= 1e-7);
  }
  CHECK_THROWS_AS(schwarzian_at(square, C(0)), CriticalPoint);
}

TEST_CASE("Schwarzian composition law") {
  const auto square = cubic_sample<S>({C(0), C(0), C(1), C(0)}, false);
  const auto e = exp_sample<S>(false);
  CHECK(cocycle_check(square, e, C(1)) <= 1e-6);
  const auto mob = moebius_sample<S>(C(1), C(2), C(-1), C(3));
  CHECK(cocycle_check(square, mob, C(1)) <= 1e-8);
  CHECK(cocycle_check(mob, e, C(0.2)) <= 1e-6);
  // Exact derivatives all the way through.
  CHECK(cocycle_check(cubic_sample<S>({C(0), C(1), C(0.2), C(0.1)}), exp_sample<S>(), C(0.3)) <= 1e-12);
}

TEST_CASE("Schwarzian property suite") {
  const auto r = schwarzian_property_suite(0);
  CHECK(r.moebius_trials == 50);
  CHECK(r.moebius_max <= 1e-8);
  CHECK(r.moebius_stencil_max <= 1e-6);
  CHECK(r.cocycle_max <= 1e-6);
  CHECK(r.chart_max <= 1e-6);
}

TEST_CASE("limit set") {
  const auto pres = present(theta_graph());
  const auto rep = holonomy(pres, make_fn({2, 2.5, 3}, {0.3, -0.4, 0.1}));
  const auto one = limit_set(rep, 1);
  CHECK(one.size() <= 8);
  CHECK(one.size() >= 1);

  const auto cloud = limit_set(rep, 4);
  CHECK(circle_defect(cloud) <= 1e-8);
  auto bent = make_fn({2, 2.5, 3}, {C(0.3, 0.2), -0.4, 0.1});
  CHECK(circle_defect(limit_set(holonomy(pres, bent), 4)) >= 1e-3);
  // Word lengths are non-decreasing in emission order.
  CHECK(std::is_sorted(cloud.word_length.begin(), cloud.word_length.end()));

  std::ostringstream csv, svg;
  write_csv(csv, one);
  CHECK(csv.str().rfind("re,im,word_length\n", 0) == 0);
  write_svg(svg, cloud);
  CHECK(svg.str().find("viewBox=\"0 0 1000 ") != std::string::npos);
  CHECK(svg.str().find("r=\"0.5\"") != std::string::npos);
}

TEST_CASE("limit set is invariant under the generators") {
  const auto pres = present(theta_graph());
  const auto rep = holonomy(pres, make_fn({2, 2.5, 3}, {C(0.3, 0.2), -0.4, 0.1}));
  const int L = 4;
  const auto cloud = limit_set(rep, L);
  // Index the cloud for lookups within 1e-8.
  std::vector<std::complex<double>> pts = cloud.points;
  std::sort(pts.begin(), pts.end(), [](auto a, auto b) { return a.real() < b.real(); });
  auto contains = [&](std::complex<double> z) {
    auto it = std::lower_bound(pts.begin(), pts.end(), z.real() - 1e-8, [](auto a, double x) { return a.real() < x; });
    for (; it != pts.end() && it->real() <= z.real() + 1e-8; ++it)
      if (std::abs(*it - z) <= 1e-8 * std::max(1.0, std::abs(z))) return true;
    return false;
  };
  int checked = 0;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (cloud.word_length[i] > L - 2) continue;
    for (int g = 1; g <= 4; ++g)
      for (int s : {1, -1}) {
        const auto m = s > 0 ? rep.image(g) : rep.image(g).inverse();
        const auto q = apply(m, ProjectivePoint<S>::finite(C(cloud.points[i].real(), cloud.points[i].imag())));
        if (std::abs(q.w()) < 1e-6) continue;
        const auto z = q.value();
        CHECK(contains({static_cast<double>(z.real()), static_cast<double>(z.imag())}));
        ++checked;
      }
  }
  CHECK(checked > 100);
}

TEST_CASE("config parsing") {
  const auto cfg = load_config(config_path("genus2.json"));
  CHECK(cfg.graph.genus == 2);
  CHECK(cfg.graph.pants_count == 2);
  CHECK(cfg.graph.curve_count() == 3);
  CHECK(cfg.fn.l[1] == std::complex<double>(2.5, 0));
  CHECK(cfg.options.fd_step == 1e-4);
  // Round trip through the writer.
  const auto again = parse_config(dump_config(cfg));
  CHECK(again.fn.tau == cfg.fn.tau);
  CHECK(again.graph.gluings[2].ends[1] == cfg.graph.gluings[2].ends[1]);

  auto expect_error = [](const std::string& name, const std::string& path, auto tag) {
    using E = decltype(tag);
    try {
      load_config(fixture_path(name));
      FAIL("no error for " << name);
    } catch (const E& e) {
      CHECK(e.path() == path);
    } catch (const ConfigError& e) {
      FAIL("wrong error type for " << name << ": " << e.what());
    }
  };
  expect_error("four_gluings.json", "/gluings", CountMismatch("", ""));
  expect_error("three_pants.json", "/pants", CountMismatch("", ""));
  expect_error("cuff_twice.json", "/gluings/2/ends/1", DanglingCuff("", ""));
  expect_error("no_such_pants.json", "/gluings/0/ends/1/0", DanglingCuff("", ""));
  expect_error("missing_fn.json", "/fn/a3", SchemaError("", ""));
  expect_error("negative_length.json", "/fn/a2/l/0", SchemaError("", ""));
  expect_error("bad_tau.json", "/fn/a1/tau", SchemaError("", ""));
  expect_error("not_json.json", "", SchemaError("", ""));
  CHECK_THROWS_AS(parse_config("{\"genus\": 1}"), SchemaError);
}
