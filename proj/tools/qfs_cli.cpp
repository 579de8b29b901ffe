#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qfs/cocycle.hpp"
#include "qfs/config.hpp"
#include "qfs/limit_set.hpp"
#include "qfs/schwarzian_suite.hpp"

namespace {

using namespace qfs;
using S = long double;
using nlohmann::json;

constexpr int kPass = 0;
constexpr int kResidualFailure = 1;
constexpr int kInputError = 2;

json pair_of(Complex<S> z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

json matrix_json(const Matrix2c<S>& m) {
  return {{pair_of(m(0, 0)), pair_of(m(0, 1))}, {pair_of(m(1, 0)), pair_of(m(1, 1))}};
}

struct Loaded {
  SurfaceConfig config;
  std::shared_ptr<const SurfaceGroupPresentation> presentation;
  FNCoordinates<S> fn;
};

Loaded load(const std::string& path) {
  Loaded l{load_config(path), nullptr, {}};
  l.presentation = std::make_shared<const SurfaceGroupPresentation>(build_presentation(l.config.graph));
  l.fn = l.config.fn.cast<S>();
  return l;
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("QFS_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 0;
}

int cmd_holonomy(const std::string& path) {
  const Loaded l = load(path);
  const auto rep = holonomy(l.presentation, l.fn);
  json gens = json::object();
  for (int k = 1; k <= l.presentation->rank(); ++k) gens[generator_name(k)] = matrix_json(rep.image(k).matrix());
  json marks = json::object();
  for (std::size_t k = 0; k < l.presentation->marking.size(); ++k)
    marks[l.config.graph.gluings[k].curve] = format_word(l.presentation->marking[k]);
  const S residual = relator_residual(rep);
  json out{{"generators", gens},
           {"relator", format_word(l.presentation->relator)},
           {"relator_residual", static_cast<double>(residual)},
           {"marking", marks},
           {"fuchsian_residual", static_cast<double>(fuchsian_residual(rep))}};
  std::cout << out.dump(2) << "\n";
  return residual <= S(1e-9) ? kPass : kResidualFailure;
}

int cmd_lengths(const std::string& path, const std::string& curve, const std::string& word) {
  const Loaded l = load(path);
  const auto rep = holonomy(l.presentation, l.fn);
  json out = json::object();
  if (!word.empty()) {
    const Word w = parse_word(word, l.presentation->rank());
    out["word"] = format_word(w);
    out["length"] = pair_of(complex_length_of_curve(rep, w).value());
  } else {
    for (std::size_t k = 0; k < l.presentation->marking.size(); ++k) {
      const std::string& label = l.config.graph.gluings[k].curve;
      if (!curve.empty() && curve != label) continue;
      out[label] = {{"word", format_word(l.presentation->marking[k])},
                    {"length", pair_of(complex_length_of_curve(rep, l.presentation->marking[k]).value())},
                    {"input", pair_of(l.fn.l[k])}};
    }
    if (!curve.empty() && out.empty()) throw UnknownGenerator("unknown curve '" + curve + "'");
  }
  std::cout << out.dump(2) << "\n";
  return kPass;
}

SymplecticGram<S> gram_of(const Loaded& l, double step) {
  return symplectic_gram(l.presentation, l.fn, static_cast<S>(step));
}

int cmd_gram(const std::string& path) {
  const Loaded l = load(path);
  const auto g = gram_of(l, l.config.options.fd_step);
  const S residual = darboux_residual(g);
  json basis = json::array();
  for (const char* kind : {"l", "tau"})
    for (const auto& gl : l.config.graph.gluings) basis.push_back(std::string(kind) + ":" + gl.curve);
  json rows = json::array();
  for (int a = 0; a < g.matrix.rows(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.matrix.cols(); ++b) row.push_back(pair_of(g.matrix(a, b)));
    rows.push_back(row);
  }
  json out{{"basis", basis},
           {"gram", rows},
           {"darboux_residual", static_cast<double>(residual)},
           {"raw_asymmetry", static_cast<double>(g.raw_asymmetry)},
           {"cup_product_scale", pair_of(g.cup_scale)},
           {"max_cocycle_residual", static_cast<double>(g.max_cocycle_residual)},
           {"fd_step", l.config.options.fd_step}};
  std::cout << out.dump(2) << "\n";
  return residual <= S(l.config.options.tol) ? kPass : kResidualFailure;
}

int cmd_darboux(const std::string& path, double step_override) {
  const Loaded l = load(path);
  const double step = step_override > 0 ? step_override : l.config.options.fd_step;
  const auto t0 = std::chrono::steady_clock::now();
  const S residual = darboux_residual(gram_of(l, step));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = residual <= S(l.config.options.tol);
  std::cout << (ok ? "PASS" : "FAIL") << " darboux_residual=" << static_cast<double>(residual)
            << " tol=" << l.config.options.tol << " fd_step=" << step << " seconds=" << secs << "\n";
  return ok ? kPass : kResidualFailure;
}

int cmd_twist(const std::string& path, const std::string& curve, const std::string& t) {
  SurfaceConfig cfg = load_config(path);
  const int k = cfg.graph.curve_index(curve);
  if (k < 0) throw UnknownGenerator("unknown curve '" + curve + "'");
  double re = 0, im = 0;
  char comma = 0;
  std::istringstream in(t);
  if (!(in >> re)) throw SchemaError("--t", "expected re,im");
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw SchemaError("--t", "expected re,im");
  }
  cfg.fn = twist_flow(cfg.fn, k, std::complex<double>(re, im));
  std::cout << dump_config(cfg);
  return kPass;
}

int cmd_limitset(const std::string& path, int depth, const std::string& format, const std::string& output) {
  const Loaded l = load(path);
  const int L = depth > 0 ? depth : l.config.options.word_length;
  const auto cloud = limit_set(holonomy(l.presentation, l.fn), L);
  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw SchemaError("--output", "cannot write " + output);
  }
  std::ostream& os = output.empty() ? std::cout : file;
  if (format == "svg")
    write_svg(os, cloud);
  else
    write_csv(os, cloud);
  return kPass;
}

int cmd_schwarzian_selftest() {
  const std::uint64_t seed = seed_from_env();
  const auto r = schwarzian_property_suite(seed);
  const bool kernel = r.moebius_max <= 1e-8;
  const bool cocycle = r.cocycle_max <= 1e-6;
  const bool chart = r.chart_max <= 1e-6;
  std::cout << "seed " << seed << "\n"
            << (kernel ? "PASS" : "FAIL") << " moebius kernel: max |Sf| = " << r.moebius_max << " over "
            << r.moebius_trials << " maps (stencil: " << r.moebius_stencil_max << ")\n"
            << (cocycle ? "PASS" : "FAIL") << " composition law: max residual = " << r.cocycle_max << " over "
            << r.cocycle_trials << " pairs\n"
            << (chart ? "PASS" : "FAIL") << " chart change: max residual = " << r.chart_max << "\n";
  return kernel && cocycle && chart ? kPass : kResidualFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holonomy of closed surfaces from complex Fenchel-Nielsen coordinates"};
  app.require_subcommand(1);
  std::string config, curve, word, t, format = "csv", output;
  int depth = 0;
  double step = 0;

  auto* hol = app.add_subcommand("holonomy", "generator matrices and relator residual");
  hol->add_option("config", config)->required();
  auto* len = app.add_subcommand("lengths", "complex lengths of the decomposition curves or of a word");
  len->add_option("config", config)->required();
  auto* by_curve = len->add_option("--curve", curve, "curve label");
  len->add_option("--word", word, "word such as 'a1 b1 A1'")->excludes(by_curve);
  auto* gram = app.add_subcommand("gram", "Goldman pairing on the Fenchel-Nielsen basis");
  gram->add_option("config", config)->required();
  auto* darb = app.add_subcommand("darboux-check", "compare the Gram matrix with the canonical form");
  darb->add_option("config", config)->required();
  darb->add_option("--fd-step", step, "override options.fd_step");
  auto* tw = app.add_subcommand("twist", "print the config after a complex twist along one curve");
  tw->add_option("config", config)->required();
  tw->add_option("--curve", curve)->required();
  tw->add_option("--t", t, "re,im")->required();
  auto* ls = app.add_subcommand("limitset", "attracting fixed points of words up to a given length");
  ls->add_option("config", config)->required();
  ls->add_option("--depth", depth, "word length (default options.word_length)");
  ls->add_option("--format", format)->check(CLI::IsMember({"csv", "svg"}));
  ls->add_option("--output,-o", output);
  auto* sw = app.add_subcommand("schwarzian-selftest", "random property checks of the Schwarzian");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*hol) return cmd_holonomy(config);
    if (*len) return cmd_lengths(config, curve, word);
    if (*gram) return cmd_gram(config);
    if (*darb) return cmd_darboux(config, step);
    if (*tw) return cmd_twist(config, curve, t);
    if (*ls) return cmd_limitset(config, depth, format, output);
    if (*sw) return cmd_schwarzian_selftest();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kInputError;
  } catch (const NotLoxodromic& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResidualFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
