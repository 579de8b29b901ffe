#include "qfs/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace qfs {

namespace {

using nlohmann::json;

std::string escape(const std::string& token) {
  std::string out;
  for (char c : token) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

std::string at(const std::string& base, const std::string& token) { return base + "/" + escape(token); }
std::string at(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

const json& field(const json& obj, const std::string& path, const std::string& name) {
  if (!obj.contains(name)) throw SchemaError(at(path, name), "required field is missing");
  return obj.at(name);
}

int as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
  return v.get<int>();
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw SchemaError(path, "expected a number");
  return v.get<double>();
}

std::complex<double> as_complex(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) throw SchemaError(path, "expected [re, im]");
  return {as_number(v[0], at(path, 0)), as_number(v[1], at(path, 1))};
}

// 1-based line of a byte offset, for parse errors.
std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace

SurfaceConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", "line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON");
  }
  if (!doc.is_object()) throw SchemaError("", "expected an object");

  SurfaceConfig cfg;
  const int genus = as_int(field(doc, "", "genus"), "/genus");
  if (genus < 2) throw SchemaError("/genus", "genus must be at least 2");
  cfg.graph.genus = genus;

  const json& pants = field(doc, "", "pants");
  if (!pants.is_array()) throw SchemaError("/pants", "expected an array");
  for (std::size_t i = 0; i < pants.size(); ++i) {
    const std::string p = at("/pants", i);
    if (!pants[i].is_object()) throw SchemaError(p, "expected an object");
    const json& id = field(pants[i], p, "id");
    if (!id.is_string()) throw SchemaError(at(p, "id"), "expected a string");
    cfg.pants_ids.push_back(id.get<std::string>());
  }
  if (static_cast<int>(pants.size()) != 2 * genus - 2)
    throw CountMismatch("/pants", "genus " + std::to_string(genus) + " needs " + std::to_string(2 * genus - 2) +
                                      " pants, found " + std::to_string(pants.size()));
  cfg.graph.pants_count = static_cast<int>(pants.size());

  const json& gluings = field(doc, "", "gluings");
  if (!gluings.is_array()) throw SchemaError("/gluings", "expected an array");
  if (static_cast<int>(gluings.size()) != 3 * genus - 3)
    throw CountMismatch("/gluings", "genus " + std::to_string(genus) + " needs " + std::to_string(3 * genus - 3) +
                                        " gluings, found " + std::to_string(gluings.size()));
  std::map<std::pair<int, int>, std::string> owner;
  for (std::size_t k = 0; k < gluings.size(); ++k) {
    const std::string g = at("/gluings", k);
    if (!gluings[k].is_object()) throw SchemaError(g, "expected an object");
    const json& curve = field(gluings[k], g, "curve");
    if (!curve.is_string()) throw SchemaError(at(g, "curve"), "expected a string");
    Gluing gl;
    gl.curve = curve.get<std::string>();
    if (cfg.graph.curve_index(gl.curve) >= 0) throw SchemaError(at(g, "curve"), "duplicate curve label '" + gl.curve + "'");
    const json& ends = field(gluings[k], g, "ends");
    const std::string e = at(g, "ends");
    if (!ends.is_array() || ends.size() != 2) throw SchemaError(e, "expected two ends");
    for (std::size_t j = 0; j < 2; ++j) {
      const std::string ej = at(e, j);
      if (!ends[j].is_array() || ends[j].size() != 2) throw SchemaError(ej, "expected [pantsIndex, cuffIndex]");
      const int p = as_int(ends[j][0], at(ej, 0));
      const int c = as_int(ends[j][1], at(ej, 1));
      if (p < 0 || p >= cfg.graph.pants_count) throw DanglingCuff(at(ej, 0), "no pants with index " + std::to_string(p));
      if (c < 0 || c > 2) throw DanglingCuff(at(ej, 1), "cuff index must be 0, 1 or 2");
      auto [it, fresh] = owner.emplace(std::make_pair(p, c), gl.curve);
      if (!fresh)
        throw DanglingCuff(ej, "cuff (" + std::to_string(p) + ", " + std::to_string(c) + ") is already glued along '" +
                                   it->second + "'");
      gl.ends[j] = CuffRef{p, c};
    }
    cfg.graph.gluings.push_back(gl);
  }
  // Counts match, so every cuff is used exactly once; only connectivity is left.
  try {
    validate(cfg.graph);
  } catch (const MalformedGraph& err) {
    throw SchemaError("/gluings", err.what());
  }

  const json& fn = field(doc, "", "fn");
  if (!fn.is_object()) throw SchemaError("/fn", "expected an object");
  for (auto it = fn.begin(); it != fn.end(); ++it)
    if (cfg.graph.curve_index(it.key()) < 0) throw SchemaError(at("/fn", it.key()), "no gluing has this curve label");
  for (const Gluing& gl : cfg.graph.gluings) {
    const std::string c = at("/fn", gl.curve);
    const json& entry = field(fn, "/fn", gl.curve);
    if (!entry.is_object()) throw SchemaError(c, "expected an object");
    const auto l = as_complex(field(entry, c, "l"), at(c, "l"));
    if (!(l.real() > 0)) throw SchemaError(at(at(c, "l"), 0), "complex length needs a positive real part");
    cfg.fn.l.push_back(l);
    cfg.fn.tau.push_back(as_complex(field(entry, c, "tau"), at(c, "tau")));
  }

  if (doc.contains("options")) {
    const json& opt = doc.at("options");
    if (!opt.is_object()) throw SchemaError("/options", "expected an object");
    for (auto it = opt.begin(); it != opt.end(); ++it) {
      const std::string p = at("/options", it.key());
      if (it.key() == "fd_step") {
        cfg.options.fd_step = as_number(it.value(), p);
        if (!(cfg.options.fd_step > 0)) throw SchemaError(p, "must be positive");
      } else if (it.key() == "tol") {
        cfg.options.tol = as_number(it.value(), p);
        if (!(cfg.options.tol > 0)) throw SchemaError(p, "must be positive");
      } else if (it.key() == "word_length") {
        cfg.options.word_length = as_int(it.value(), p);
        if (cfg.options.word_length < 1) throw SchemaError(p, "must be at least 1");
      } else {
        throw SchemaError(p, "unknown option");
      }
    }
  }
  return cfg;
}

SurfaceConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string dump_config(const SurfaceConfig& cfg) {
  json doc;
  doc["genus"] = cfg.graph.genus;
  doc["pants"] = json::array();
  for (const auto& id : cfg.pants_ids) doc["pants"].push_back({{"id", id}});
  doc["gluings"] = json::array();
  json fn = json::object();
  for (std::size_t k = 0; k < cfg.graph.gluings.size(); ++k) {
    const Gluing& gl = cfg.graph.gluings[k];
    doc["gluings"].push_back({{"curve", gl.curve},
                              {"ends", {{gl.ends[0].pants, gl.ends[0].cuff}, {gl.ends[1].pants, gl.ends[1].cuff}}}});
    fn[gl.curve] = {{"l", {cfg.fn.l[k].real(), cfg.fn.l[k].imag()}}, {"tau", {cfg.fn.tau[k].real(), cfg.fn.tau[k].imag()}}};
  }
  doc["fn"] = fn;
  doc["options"] = {
      {"fd_step", cfg.options.fd_step}, {"tol", cfg.options.tol}, {"word_length", cfg.options.word_length}};
  return doc.dump(2) + "\n";
}

}  // namespace qfs
