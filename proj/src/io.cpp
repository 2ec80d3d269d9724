#include "trihered/io.hpp"

#include <fstream>
#include <sstream>

namespace trihered::io {

namespace {

std::string child(const std::string& loc, const std::string& key) { return loc + "/" + key; }
std::string child(const std::string& loc, std::size_t i) { return loc + "/" + std::to_string(i); }

const json& need(const json& j, const char* key, const std::string& loc) {
  if (!j.is_object()) throw ParseError(loc, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(loc, std::string("missing key \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const json& j, const std::string& loc) {
  if (!j.is_number_integer()) throw ParseError(loc, "expected an integer");
  return j.get<std::int64_t>();
}

int degree_key(const std::string& key, const std::string& loc) {
  try {
    std::size_t used = 0;
    const int n = std::stoi(key, &used);
    if (used == key.size()) return n;
  } catch (const std::exception&) {
  }
  throw ParseError(loc, "degree key \"" + key + "\" is not an integer");
}

// Runs body, attaching `loc` to library errors raised while building the value.
template <class F>
auto located(const std::string& loc, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(loc, e.what());
  }
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// "P1[2]" -> (label, shift)
std::pair<std::string, int> split_name(const std::string& text, const std::string& loc) {
  const auto open = text.find('[');
  if (open == std::string::npos) return {text, 0};
  if (text.back() != ']') throw ParseError(loc, "bad shift suffix in \"" + text + "\"");
  const std::string num = text.substr(open + 1, text.size() - open - 2);
  return {text.substr(0, open), degree_key(num, loc)};
}

Representation named_rep(const QuiverPtr& q, const std::string& name, const std::string& loc) {
  if (!q->is_dynkin()) throw ParseError(loc, "named objects need a Dynkin quiver");
  const auto cat = catalog_for(q);
  auto i = find_indecomposable(*cat, name);
  if (!i) throw ParseError(loc, "unknown indecomposable \"" + name + "\"");
  return (*cat)[*i].rep;
}

}  // namespace

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ":byte " + std::to_string(e.byte), "invalid JSON");
  }
}

QuiverPtr quiver_from_json(const json& j, const std::string& loc) {
  const auto n = as_int(need(j, "vertices", loc), child(loc, "vertices"));
  if (n < 0) throw ParseError(child(loc, "vertices"), "negative vertex count");
  std::vector<Arrow> arrows;
  const json empty = json::array();
  const json& arr = j.contains("arrows") ? j["arrows"] : empty;
  if (!arr.is_array()) throw ParseError(child(loc, "arrows"), "expected an array");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string l = child(child(loc, "arrows"), i);
    const auto from = as_int(need(arr[i], "from", l), child(l, "from"));
    const auto to = as_int(need(arr[i], "to", l), child(l, "to"));
    if (from < 1 || from > n) throw ParseError(child(l, "from"), "vertex out of range 1.." + std::to_string(n));
    if (to < 1 || to > n) throw ParseError(child(l, "to"), "vertex out of range 1.." + std::to_string(n));
    std::string label = "a" + std::to_string(i + 1);
    if (arr[i].contains("label")) {
      if (!arr[i]["label"].is_string()) throw ParseError(child(l, "label"), "expected a string");
      label = arr[i]["label"].get<std::string>();
    }
    arrows.push_back({label, static_cast<std::size_t>(from - 1), static_cast<std::size_t>(to - 1)});
  }
  return located(loc, [&] { return make_quiver(static_cast<std::size_t>(n), std::move(arrows)); });
}

json to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows()) arrows.push_back({{"label", a.label}, {"from", a.source + 1}, {"to", a.target + 1}});
  return {{"vertices", q.vertex_count()}, {"arrows", arrows}};
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& loc) {
  if (!j.is_array()) throw ParseError(loc, "expected a matrix (array of rows)");
  const std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
  Matrix m(rows, cols);
  if (j.empty() && (rows == 0 || cols == 0)) return m;
  if (j.size() != rows) throw ParseError(loc, "expected shape " + shape);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError(child(loc, r), "expected shape " + shape);
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = linalg::reduce(as_int(j[r][c], child(child(loc, r), c)));
    }
  }
  return m;
}

Representation rep_from_json(const QuiverPtr& q, const json& j, const std::string& loc) {
  if (j.is_string()) return named_rep(q, j.get<std::string>(), loc);
  const json& d = need(j, "dims", loc);
  if (!d.is_array() || d.size() != q->vertex_count()) {
    throw ParseError(child(loc, "dims"), "expected " + std::to_string(q->vertex_count()) + " dimensions");
  }
  DimVector dims;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto v = as_int(d[i], child(child(loc, "dims"), i));
    if (v < 0) throw ParseError(child(child(loc, "dims"), i), "negative dimension");
    dims.push_back(static_cast<std::size_t>(v));
  }
  std::vector<Matrix> mats;
  const json none = json::object();
  const json& m = j.contains("mats") ? j["mats"] : none;
  if (!m.is_object()) throw ParseError(child(loc, "mats"), "expected an object keyed by arrow label");
  for (const auto& [key, val] : m.items()) {
    if (!q->arrow_index(key)) throw ParseError(child(child(loc, "mats"), key), "unknown arrow label");
  }
  for (const auto& a : q->arrows()) {
    const std::size_t r = dims[a.target];
    const std::size_t c = dims[a.source];
    mats.push_back(m.contains(a.label) ? matrix_from_json(m[a.label], r, c, child(child(loc, "mats"), a.label))
                                       : Matrix(r, c));
  }
  return located(loc, [&] { return Representation(q, dims, mats); });
}

json to_json(const Representation& r) {
  json mats = json::object();
  const auto& q = r.quiver();
  for (std::size_t a = 0; a < q.arrows().size(); ++a) mats[q.arrow(a).label] = matrix_to_json(r.mat(a));
  return {{"dims", r.dims()}, {"mats", mats}};
}

RepMorphism rep_morphism_from_json(const QuiverPtr& q, const json& j, const std::string& loc,
                                   const Representation* source, const Representation* target) {
  if (!j.is_object()) throw ParseError(loc, "expected a morphism object");
  const Representation s = j.contains("source") ? rep_from_json(q, j["source"], child(loc, "source"))
                           : source ? *source
                                    : throw ParseError(loc, "missing key \"source\"");
  const Representation t = j.contains("target") ? rep_from_json(q, j["target"], child(loc, "target"))
                           : target ? *target
                                    : throw ParseError(loc, "missing key \"target\"");
  const json none = json::array();
  const json& maps = j.contains("maps") ? j["maps"] : none;
  std::vector<Matrix> comps;
  const std::string ml = child(loc, "maps");
  for (std::size_t v = 0; v < q->vertex_count(); ++v) {
    const std::size_t r = t.dim(v);
    const std::size_t c = s.dim(v);
    if (maps.is_array()) {
      if (!maps.empty() && maps.size() != q->vertex_count()) {
        throw ParseError(ml, "expected one matrix per vertex");
      }
      comps.push_back(maps.empty() ? Matrix(r, c) : matrix_from_json(maps[v], r, c, child(ml, v)));
    } else if (maps.is_object()) {
      const std::string key = std::to_string(v + 1);
      comps.push_back(maps.contains(key) ? matrix_from_json(maps[key], r, c, child(ml, key)) : Matrix(r, c));
    } else {
      throw ParseError(ml, "expected a list of matrices or an object keyed by vertex");
    }
  }
  return located(loc, [&] { return RepMorphism(s, t, comps); });
}

json to_json(const RepMorphism& f, bool with_ends) {
  json maps = json::array();
  for (const auto& m : f.components()) maps.push_back(matrix_to_json(m));
  if (!with_ends) return {{"maps", maps}};
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"maps", maps}};
}

Complex complex_from_json(const QuiverPtr& q, const json& j, const std::string& loc) {
  const json& terms = need(j, "terms", loc);
  if (!terms.is_object()) throw ParseError(child(loc, "terms"), "expected an object keyed by degree");
  std::map<int, Representation> ts;
  for (const auto& [key, val] : terms.items()) {
    const std::string l = child(child(loc, "terms"), key);
    ts.emplace(degree_key(key, l), rep_from_json(q, val, l));
  }
  std::map<int, RepMorphism> ds;
  if (j.contains("diffs")) {
    if (!j["diffs"].is_object()) throw ParseError(child(loc, "diffs"), "expected an object keyed by degree");
    for (const auto& [key, val] : j["diffs"].items()) {
      const std::string l = child(child(loc, "diffs"), key);
      const int n = degree_key(key, l);
      const Representation s = ts.count(n) ? ts.at(n) : Representation::zero(q);
      const Representation t = ts.count(n + 1) ? ts.at(n + 1) : Representation::zero(q);
      ds.emplace(n, rep_morphism_from_json(q, val, l, &s, &t));
    }
  }
  return located(loc, [&] { return Complex(q, ts, ds); });
}

json to_json(const Complex& c) {
  json terms = json::object();
  for (const auto& [n, t] : c.terms()) terms[std::to_string(n)] = to_json(t);
  json diffs = json::object();
  for (const auto& [n, d] : c.diffs()) {
    if (!d.is_zero()) diffs[std::to_string(n)] = to_json(d, false);
  }
  return {{"terms", terms}, {"diffs", diffs}};
}

ChainMap chain_map_from_json(const QuiverPtr& q, const json& j, const std::string& loc) {
  const Complex s = complex_from_json(q, need(j, "source", loc), child(loc, "source"));
  const Complex t = complex_from_json(q, need(j, "target", loc), child(loc, "target"));
  std::map<int, RepMorphism> comps;
  if (j.contains("maps")) {
    if (!j["maps"].is_object()) throw ParseError(child(loc, "maps"), "expected an object keyed by degree");
    for (const auto& [key, val] : j["maps"].items()) {
      const std::string l = child(child(loc, "maps"), key);
      const int n = degree_key(key, l);
      const Representation a = s.term(n);
      const Representation b = t.term(n);
      comps.emplace(n, rep_morphism_from_json(q, val, l, &a, &b));
    }
  }
  return located(loc, [&] { return ChainMap(s, t, comps); });
}

json to_json(const ChainMap& f) {
  json maps = json::object();
  for (const auto& [n, m] : f.components()) {
    if (!m.is_zero()) maps[std::to_string(n)] = to_json(m, false);
  }
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"maps", maps}};
}

FormalObject formal_object_from_json(const QuiverPtr& q, const json& j, const std::string& loc) {
  if (j.is_string()) {
    const std::string text = trim(j.get<std::string>());
    if (text == "0" || text.empty()) return FormalObject(q);
    std::vector<FormalObject> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '+')) {
      const auto [label, shift] = split_name(trim(tok), loc);
      parts.push_back(FormalObject::shifted(named_rep(q, label, loc), shift));
    }
    return parts.size() == 1 ? parts[0] : direct_sum(parts).sum;
  }
  const json& comps = need(j, "components", loc);
  if (!comps.is_object()) throw ParseError(child(loc, "components"), "expected an object keyed by degree");
  std::map<int, Representation> cs;
  for (const auto& [key, val] : comps.items()) {
    const std::string l = child(child(loc, "components"), key);
    cs.emplace(degree_key(key, l), rep_from_json(q, val, l));
  }
  return {q, std::move(cs)};
}

std::vector<std::string> summand_names(const FormalObject& x) {
  std::vector<std::string> out;
  const auto& q = x.quiver_ptr();
  for (const auto& [n, comp] : x.components()) {
    for (const auto& s : decompose_rep(comp)) {
      std::string label = dim_vector_string(s.rep.dims());
      if (q && q->is_dynkin()) {
        const auto cat = catalog_for(q);
        if (auto i = find_indecomposable(*cat, s.rep.dims())) label = (*cat)[*i].label;
      }
      out.push_back(node_name(label, -n));
    }
  }
  return out;
}

json to_json(const FormalObject& x) {
  json comps = json::object();
  for (const auto& [n, r] : x.components()) comps[std::to_string(n)] = to_json(r);
  json names = summand_names(x);
  return {{"summands", names}, {"components", comps}};
}

FormalMorphism formal_morphism_from_json(const QuiverPtr& q, const json& j, const std::string& loc) {
  const FormalObject s = formal_object_from_json(q, need(j, "source", loc), child(loc, "source"));
  const FormalObject t = formal_object_from_json(q, need(j, "target", loc), child(loc, "target"));
  std::map<int, RepMorphism> hom;
  std::map<int, ExtClass> ext;
  if (j.contains("hom")) {
    if (!j["hom"].is_object()) throw ParseError(child(loc, "hom"), "expected an object keyed by degree");
    for (const auto& [key, val] : j["hom"].items()) {
      const std::string l = child(child(loc, "hom"), key);
      const int n = degree_key(key, l);
      const Representation a = s.component(n);
      const Representation b = t.component(n);
      hom.emplace(n, rep_morphism_from_json(q, val, l, &a, &b));
    }
  }
  if (j.contains("ext")) {
    if (!j["ext"].is_object()) throw ParseError(child(loc, "ext"), "expected an object keyed by degree");
    for (const auto& [key, val] : j["ext"].items()) {
      const std::string l = child(child(loc, "ext"), key);
      const int n = degree_key(key, l);
      const Representation a = s.component(n);
      const Representation b = t.component(n - 1);
      const std::size_t d = dim_ext(a, b);
      if (!val.is_array() || val.size() != d) {
        throw ParseError(l, "expected " + std::to_string(d) + " Ext coordinates");
      }
      std::vector<linalg::Elem> c;
      for (std::size_t i = 0; i < d; ++i) c.push_back(linalg::reduce(as_int(val[i], child(l, i))));
      ext.emplace(n, ExtClass{a, b, Matrix::column(c)});
    }
  }
  return located(loc, [&] { return FormalMorphism(s, t, hom, ext); });
}

json to_json(const FormalMorphism& f) {
  json hom = json::object();
  for (const auto& [n, m] : f.hom_parts()) {
    if (!m.is_zero()) hom[std::to_string(n)] = to_json(m, false);
  }
  json ext = json::object();
  for (const auto& [n, e] : f.ext_parts()) {
    if (e.is_zero()) continue;
    json c = json::array();
    for (std::size_t i = 0; i < e.coords.rows(); ++i) c.push_back(e.coords(i, 0));
    ext[std::to_string(n)] = c;
  }
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"hom", hom}, {"ext", ext}};
}

json to_json(const Triangle& t) {
  return {{"X", summand_names(t.x())}, {"Y", summand_names(t.y())}, {"Z", summand_names(t.z())},
          {"f", to_json(t.f)},         {"g", to_json(t.g)},         {"h", to_json(t.h)}};
}

Walk walk_from_json(const PathGraph& g, const json& j, const std::string& loc) {
  auto node = [&](const json& v, const std::string& l) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_string()) throw ParseError(l, "expected [name, shift]");
    auto n = g.parse(v[0].get<std::string>());
    if (!n) throw ParseError(l, "unknown indecomposable \"" + v[0].get<std::string>() + "\"");
    return n->shifted(static_cast<int>(as_int(v[1], child(l, 1))));
  };
  Walk w;
  w.start = node(need(j, "start", loc), child(loc, "start"));
  if (j.contains("steps")) {
    const json& steps = j["steps"];
    if (!steps.is_array()) throw ParseError(child(loc, "steps"), "expected an array");
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const std::string l = child(child(loc, "steps"), i);
      const json& k = need(steps[i], "kind", l);
      auto kind = k.is_string() ? parse_step_kind(k.get<std::string>()) : std::nullopt;
      if (!kind) throw ParseError(child(l, "kind"), "unknown step kind");
      w.steps.push_back({*kind, node(need(steps[i], "to", l), child(l, "to"))});
    }
  }
  return w;
}

json to_json(const CheckReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"runs", c.runs}, {"failures", c.failures}});
  json fails = json::array();
  for (const auto& f : r.failures) fails.push_back({{"check", f.check}, {"seed", f.seed}, {"detail", f.detail}});
  return {{"passed", r.passed()}, {"trials", r.trials}, {"seed", r.seed}, {"checks", checks}, {"failures", fails}};
}

json to_json(const OctaReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e = {{"name", c.name}, {"holds", c.holds}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  return {{"passed", r.passed()}, {"checks", checks}, {"notes", r.notes}};
}

namespace {

json node_list(const PathGraph& g, const std::set<Node>& s) {
  json a = json::array();
  for (const auto& n : s) a.push_back(g.name(n));
  return a;
}

}  // namespace

json to_json(const TStructure& ts) {
  const PathGraph& g = *ts.graph;
  const auto& r = ts.report;
  return {{"window", {g.lo(), g.hi()}},
          {"generator", g.name(ts.generator)},
          {"leq0", node_list(g, ts.leq0)},
          {"geq0", node_list(g, ts.geq0)},
          {"heart", node_list(g, ts.heart)},
          {"checks", {{"t1", r.t1}, {"t2", r.t2}, {"t3", r.t3}, {"split", r.split}}},
          {"bounded", ts.bounded},
          {"failures", r.failures},
          {"passed", r.passed()}};
}

json to_json(const PathGraph& g, const PathResult& p) {
  json nodes = json::array();
  for (const auto& n : p.nodes) nodes.push_back(g.name(n));
  return {{"path", nodes}, {"m", p.m}, {"rewrites", p.rewrites}};
}

}  // namespace trihered::io
