#include "trihered/api.hpp"

namespace trihered::api {

FormalObject object_from_json(const QuiverPtr& q, const json& j, const std::string& loc) {
  if (j.is_object() && j.contains("dims")) return FormalObject::stalk(io::rep_from_json(q, j, loc), 0);
  return io::formal_object_from_json(q, j, loc);
}

json indecomposables(const QuiverPtr& q) {
  const auto cat = catalog_for(q);
  json arr = json::array();
  for (const auto& c : *cat) arr.push_back({{"label", c.label}, {"aliases", c.aliases}, {"dims", c.rep.dims()}});
  return {{"count", cat->size()}, {"indecomposables", arr}};
}

json hom(const QuiverPtr& q, const json& source, const json& target, int shift) {
  const HomSpace s(object_from_json(q, source, "source"), object_from_json(q, target, "target").shift(shift));
  return {{"dim", s.dim()}, {"hom_part", s.hom_dim()}, {"ext_part", s.ext_dim()}};
}

json ext(const QuiverPtr& q, const json& source, const json& target) {
  const auto a = io::rep_from_json(q, source, "source");
  const auto b = io::rep_from_json(q, target, "target");
  const auto h = hom_ext(a, b);
  json middles = json::array();
  for (std::size_t i = 0; i < h->ext_dim(); ++i) {
    Matrix c(h->ext_dim(), 1);
    c(i, 0) = 1;
    middles.push_back(io::summand_names(FormalObject::stalk(extension_middle(ExtClass{a, b, c}).middle(), 0)));
  }
  return {{"hom", h->hom_dim()}, {"ext", h->ext_dim()}, {"basis_middle_terms", middles}};
}

json cone(const QuiverPtr& q, const json& j, const std::string& loc) {
  Triangle t;
  std::string method;
  if (j.is_object() && j.contains("maps") && !j.contains("hom")) {
    t = cone_in_H(io::rep_morphism_from_json(q, j, loc)).triangle;
    method = "cone_in_H";
  } else {
    const auto f = io::formal_morphism_from_json(q, j, loc);
    const auto& sc = f.source().components();
    const auto& tc = f.target().components();
    const bool stalks = sc.size() <= 1 && tc.size() <= 1;
    const int sd = sc.empty() ? 0 : sc.begin()->first;
    const int td = tc.empty() ? 0 : tc.begin()->first;
    if (stalks && f.ext_parts().empty() && sd == 0 && td == 0) {
      t = cone_in_H(f.hom(0)).triangle;
      method = "cone_in_H";
    } else if (stalks && !sc.empty() && !tc.empty() && td == sd - 1 && f.hom_only().is_zero()) {
      t = cone_pure_ext(f);
      method = "cone_pure_ext";
    } else {
      t = cone_general(f);
      method = "cone_general";
    }
  }
  return {{"method", method},
          {"cone", io::summand_names(t.z())},
          {"X", io::summand_names(t.x())},
          {"Y", io::summand_names(t.y())},
          {"exact", is_exact(t).passed},
          {"triangle", io::to_json(t)}};
}

json octahedron(const QuiverPtr& q, const json& fj, const json& uj, const OctaOptions& options,
                const std::string& f_loc, const std::string& u_loc) {
  const auto f = io::formal_morphism_from_json(q, fj, f_loc);
  const auto u = io::formal_morphism_from_json(q, uj, u_loc);
  if (!(f.target() == u.source())) throw io::ParseError(u_loc, "source of u differs from the target of f");
  Octahedron oc;
  try {
    oc = octahedron_tr4pp(f, u, options);
  } catch (const io::ParseError&) {
    throw;
  } catch (const Error& e) {
    return {{"passed", false}, {"error", e.what()}};
  }
  const auto r1 = verify_octahedron(oc);
  const auto r2 = derive_tr4_strong(oc);
  const auto r3 = derive_tr4prime(f, u, options);
  return {{"passed", r1.passed() && r2.passed() && r3.passed()},
          {"Z", io::summand_names(oc.tf.z())},
          {"Z'", io::summand_names(oc.tfp.z())},
          {"W", io::summand_names(oc.tu.z())},
          {"tr4", io::to_json(r1)},
          {"tr4_strong", io::to_json(r2)},
          {"tr4_prime", io::to_json(r3)}};
}

json tstructure(const QuiverPtr& q, const std::string& generator, DegreeWindow window) {
  const auto g = build_path_graph(q, window.lo, window.hi);
  const auto m = g.parse(generator);
  if (!m || !g.contains(*m)) throw io::ParseError("generator", "unknown node or outside the window");
  const auto ts = t_structure_from(g, *m);
  json j = io::to_json(ts);
  if (g.contains(m->shifted(-1))) {
    json wit = json::array();
    for (const auto& n : is_bounded(g, *m).witness) wit.push_back(g.name(n));
    j["bounded_witness"] = wit;
  }
  return j;
}

json walk_to_path(const QuiverPtr& q, const json& wj, DegreeWindow window, const std::string& loc) {
  const auto g = build_path_graph(q, window.lo, window.hi);
  const auto walk = io::walk_from_json(g, wj, loc);
  try {
    validate_walk(g, walk);
  } catch (const WindowExhausted&) {
    throw;
  } catch (const Error& e) {
    throw io::ParseError(loc, e.what());
  }
  try {
    return io::to_json(g, trihered::walk_to_path(g, walk));
  } catch (const WindowExhausted& e) {
    return {{"error", "window exhausted"}, {"required_window", {e.required_lo, e.required_hi}}};
  }
}

json blocks(const QuiverPtr& q, DegreeWindow window) {
  const auto g = build_path_graph(q, window.lo, window.hi);
  const auto b = trihered::blocks(g);
  json arr = json::array();
  for (const auto& comp : b) {
    json names = json::array();
    for (const auto& n : comp) names.push_back(g.name(n));
    arr.push_back(names);
  }
  return {{"window", {window.lo, window.hi}}, {"count", b.size()}, {"blocks", arr}};
}

json decompose(const QuiverPtr& q, const json& object, const std::string& loc) {
  const auto x = object_from_json(q, object, loc);
  json arr = json::array();
  for (const auto& [n, comp] : x.components()) {
    for (const auto& s : decompose_rep(comp)) {
      arr.push_back({{"name", io::summand_names(FormalObject::stalk(s.rep, n)).at(0)},
                     {"degree", n},
                     {"dims", s.rep.dims()}});
    }
  }
  return {{"summands", arr}};
}

}  // namespace trihered::api
