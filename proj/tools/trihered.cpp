// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 the input could not be parsed or validated.
#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>

#include "trihered/api.hpp"
#include "trihered/equivalence.hpp"

using namespace trihered;
using io::json;

namespace {

struct Options {
  std::string quiver;
  std::optional<std::uint32_t> prime;
  std::string window;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  bool json = false;
};

DegreeWindow parse_window(const std::string& text, DegreeWindow fallback) {
  if (text.empty()) return fallback;
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw io::ParseError("--window", "expected LO..HI");
  try {
    DegreeWindow w{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    if (w.lo > w.hi) throw io::ParseError("--window", "LO exceeds HI");
    return w;
  } catch (const std::invalid_argument&) {
    throw io::ParseError("--window", "expected integers LO..HI");
  } catch (const std::out_of_range&) {
    throw io::ParseError("--window", "value out of range");
  }
}

void apply_prime(const Options& o) {
  std::uint32_t p = 101;
  if (const char* env = std::getenv("TRIHERED_PRIME")) {
    try {
      p = static_cast<std::uint32_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw io::ParseError("TRIHERED_PRIME", "not a number");
    }
  }
  if (o.prime) p = *o.prime;
  try {
    linalg::set_prime(p);
  } catch (const Error& e) {
    throw io::ParseError(o.prime ? "--prime" : "TRIHERED_PRIME", e.what());
  }
}

QuiverPtr load_quiver(const std::string& path) {
  if (path.empty()) throw io::ParseError("--quiver", "a quiver file is required");
  return io::quiver_from_json(io::read_file(path), path + "#");
}

struct Arg {
  json value;
  std::string loc;
};

// A JSON file, or else the text itself as a name expression such as "S1 + P2[1]".
Arg file_or_text(const std::string& spec) {
  std::ifstream probe(spec);
  if (!probe) return {json(spec), spec};
  return {io::read_file(spec), spec + "#"};
}

void emit(const Options& o, const json& j, const std::function<void()>& text) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    text();
  }
}

std::string join(const std::vector<std::string>& v, const std::string& sep = " + ") {
  if (v.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

void print_checks(const json& r, const std::string& title) {
  std::cout << title << ": " << (r["passed"].get<bool>() ? "pass" : "FAIL") << "\n";
  for (const auto& c : r["checks"]) {
    std::cout << "  [" << (c["holds"].get<bool>() ? "ok" : "FAIL") << "] " << c["name"].get<std::string>();
    if (c.contains("detail") && !c["detail"].get<std::string>().empty()) {
      std::cout << " (" << c["detail"].get<std::string>() << ")";
    }
    std::cout << "\n";
  }
  for (const auto& n : r["notes"]) std::cout << "  " << n.get<std::string>() << "\n";
}

void print_report(const CheckReport& r) {
  std::cout << "trials " << r.trials << ", seed " << r.seed << ": " << (r.passed() ? "pass" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    std::cout << "  " << c.name << ": " << c.runs - c.failures << "/" << c.runs << "\n";
  }
  for (const auto& f : r.failures) std::cout << "  failure " << f.check << " seed " << f.seed << ": " << f.detail << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact triangles and t-structures over quiver representations in characteristic p"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto common = [&](CLI::App* s, bool window, bool random) {
    s->add_option("--quiver", o.quiver, "quiver JSON file");
    s->add_option("--prime", o.prime, "field characteristic (default 101 or TRIHERED_PRIME)");
    s->add_flag("--json", o.json, "emit a JSON report");
    if (window) s->add_option("--window", o.window, "shift or degree window LO..HI");
    if (random) {
      s->add_option("--seed", o.seed, "master seed");
      s->add_option("--trials", o.trials, "number of random trials")->check(CLI::PositiveNumber);
    }
  };

  // quiver check
  auto* quiver = app.add_subcommand("quiver", "quiver utilities")->require_subcommand(1);
  auto* qcheck = quiver->add_subcommand("check", "validate a quiver file");
  std::string qfile;
  qcheck->add_option("file", qfile, "quiver JSON file");
  common(qcheck, false, false);
  qcheck->callback([&] {
    action = [&] {
      const auto q = load_quiver(qfile.empty() ? o.quiver : qfile);
      json j = io::to_json(*q);
      j["dynkin"] = q->is_dynkin();
      if (q->is_dynkin()) j["indecomposables"] = catalog_for(q)->size();
      emit(o, j, [&] {
        std::cout << "vertices " << q->vertex_count() << ", arrows " << q->arrows().size() << "\n";
        std::cout << "Dynkin: " << (q->is_dynkin() ? "yes" : "no") << "\n";
        if (q->is_dynkin()) std::cout << "indecomposables: " << catalog_for(q)->size() << "\n";
      });
      return 0;
    };
  });

  // indec list
  auto* indec = app.add_subcommand("indec", "indecomposable representations")->require_subcommand(1);
  auto* ilist = indec->add_subcommand("list", "enumerate the indecomposables of a Dynkin quiver");
  common(ilist, false, false);
  ilist->callback([&] {
    action = [&] {
      const json j = api::indecomposables(load_quiver(o.quiver));
      emit(o, j, [&] {
        for (const auto& c : j["indecomposables"]) {
          std::cout << c["label"].get<std::string>() << "  " << dim_vector_string(c["dims"].get<DimVector>());
          if (!c["aliases"].empty()) std::cout << "  " << join(c["aliases"].get<std::vector<std::string>>(), ", ");
          std::cout << "\n";
        }
      });
      return 0;
    };
  });

  // hom
  auto* hom = app.add_subcommand("hom", "dimension of Hom(X, Y[n]) in the formal model");
  std::string xs, ys;
  int shift = 0;
  hom->add_option("--source", xs, "object: names such as \"S1 + P2[1]\" or a JSON file")->required();
  hom->add_option("--target", ys, "object")->required();
  hom->add_option("--shift", shift, "n in Y[n]");
  common(hom, false, false);
  hom->callback([&] {
    action = [&] {
      const auto q = load_quiver(o.quiver);
      const Arg x = file_or_text(xs);
      const Arg y = file_or_text(ys);
      const json j = api::hom(q, x.value, y.value, shift);
      emit(o, j, [&] {
        std::cout << "dim Hom = " << j["dim"] << " (Hom parts " << j["hom_part"] << ", Ext parts " << j["ext_part"]
                  << ")\n";
      });
      return 0;
    };
  });

  // ext
  auto* ext = app.add_subcommand("ext", "Hom and Ext^1 between representations");
  std::string as, bs;
  ext->add_option("--source", as, "representation: a name or a JSON file")->required();
  ext->add_option("--target", bs, "representation")->required();
  common(ext, false, false);
  ext->callback([&] {
    action = [&] {
      const auto q = load_quiver(o.quiver);
      const json j = api::ext(q, file_or_text(as).value, file_or_text(bs).value);
      emit(o, j, [&] {
        std::cout << "dim Hom = " << j["hom"] << ", dim Ext^1 = " << j["ext"] << "\n";
        std::size_t i = 0;
        for (const auto& m : j["basis_middle_terms"]) {
          std::cout << "  basis class " << ++i << ": middle " << join(m.get<std::vector<std::string>>()) << "\n";
        }
      });
      return 0;
    };
  });

  // cone
  auto* cone = app.add_subcommand("cone", "cone of a morphism, with its exact triangle");
  std::string mfile;
  cone->add_option("--morphism", mfile, "morphism JSON file")->required();
  common(cone, false, false);
  cone->callback([&] {
    action = [&] {
      const auto q = load_quiver(o.quiver);
      const json j = api::cone(q, io::read_file(mfile), mfile + "#");
      const auto names = [&](const char* key) { return join(j[key].get<std::vector<std::string>>()); };
      emit(o, j, [&] {
        std::cout << "method: " << j["method"].get<std::string>() << "\n";
        std::cout << "cone: " << names("cone") << "\n";
        std::cout << "X = " << names("X") << ", Y = " << names("Y") << "\n";
        std::cout << "exact: " << (j["exact"].get<bool>() ? "yes" : "NO") << "\n";
      });
      return j["exact"].get<bool>() ? 0 : 1;
    };
  });

  // decompose
  auto* dec = app.add_subcommand("decompose", "indecomposable summands of an object");
  std::string ospec;
  dec->add_option("--object", ospec, "object: names or a JSON file (representation or formal object)")->required();
  common(dec, false, false);
  dec->callback([&] {
    action = [&] {
      const auto q = load_quiver(o.quiver);
      const Arg x = file_or_text(ospec);
      const json j = api::decompose(q, x.value, x.loc);
      emit(o, j, [&] {
        for (const auto& e : j["summands"]) {
          std::cout << e["name"].get<std::string>() << "  degree " << e["degree"].get<int>() << "  "
                    << dim_vector_string(e["dims"].get<DimVector>()) << "\n";
        }
      });
      return 0;
    };
  });

  // blocks
  auto* blk = app.add_subcommand("blocks", "connected components of the path graph");
  common(blk, true, false);
  blk->callback([&] {
    action = [&] {
      const auto w = parse_window(o.window, {-3, 3});
      const json j = api::blocks(load_quiver(o.quiver), w);
      emit(o, j, [&] {
        std::cout << j["count"] << " block(s) within window [" << w.lo << "," << w.hi << "]\n";
        for (const auto& comp : j["blocks"]) {
          std::cout << "  " << comp.size() << " nodes, first " << comp[0].get<std::string>() << "\n";
        }
      });
      return 0;
    };
  });

  // tstructure
  auto* tst = app.add_subcommand("tstructure", "split t-structure generated by an indecomposable");
  std::string gen;
  tst->add_option("--generator", gen, "generator node, e.g. S1 or P2[1]")->required();
  common(tst, true, false);
  tst->callback([&] {
    action = [&] {
      const auto w = parse_window(o.window, {-3, 3});
      const json j = api::tstructure(load_quiver(o.quiver), gen, w);
      const json& r = j["checks"];
      emit(o, j, [&] {
        std::cout << "generator " << gen << ", window [" << w.lo << "," << w.hi << "]\n";
        std::cout << "heart: " << join(j["heart"].get<std::vector<std::string>>(), ", ") << "\n";
        std::cout << "t1 " << r["t1"] << ", t2 " << r["t2"] << ", t3 " << r["t3"] << ", split " << r["split"]
                  << ", bounded " << j["bounded"] << "\n";
        for (const auto& f : j["failures"]) std::cout << "  " << f.get<std::string>() << "\n";
      });
      return j["passed"].get<bool>() ? 0 : 1;
    };
  });

  // walk2path
  auto* wp = app.add_subcommand("walk2path", "rewrite a walk into a forward path");
  std::string wfile;
  wp->add_option("--walk", wfile, "walk JSON file")->required();
  common(wp, true, false);
  wp->callback([&] {
    action = [&] {
      const auto w = parse_window(o.window, {-3, 3});
      const json j = api::walk_to_path(load_quiver(o.quiver), io::read_file(wfile), w, wfile + "#");
      if (j.contains("error")) {
        emit(o, j, [&] {
          std::cout << "window exhausted: rerun with --window " << j["required_window"][0] << ".."
                    << j["required_window"][1] << "\n";
        });
        return 1;
      }
      emit(o, j, [&] {
        std::cout << "path: " << join(j["path"].get<std::vector<std::string>>(), " -> ") << "\n";
        std::cout << "m = " << j["m"] << ", rewrites " << j["rewrites"] << "\n";
      });
      return 0;
    };
  });

  // octahedron
  auto* oct = app.add_subcommand("octahedron", "octahedron on a composable pair, with all identities checked");
  std::string ffile, ufile;
  oct->add_option("--f", ffile, "morphism X -> Y (JSON)")->required();
  oct->add_option("--u", ufile, "morphism Y -> Y' (JSON)")->required();
  common(oct, false, true);
  oct->callback([&] {
    action = [&] {
      const auto q = load_quiver(o.quiver);
      OctaOptions opts;
      if (o.seed) opts.seed = o.seed;
      const json fj = io::read_file(ffile);
      const json uj = io::read_file(ufile);
      const json j = api::octahedron(q, fj, uj, opts, ffile + "#", ufile + "#");
      emit(o, j, [&] {
        if (j.contains("error")) {
          std::cout << "octahedron failed: " << j["error"].get<std::string>() << "\n";
          return;
        }
        const auto names = [&](const char* key) { return join(j[key].get<std::vector<std::string>>()); };
        std::cout << "Z = " << names("Z") << ", Z' = " << names("Z'") << ", W = " << names("W") << "\n";
        print_checks(j["tr4"], "TR4");
        print_checks(j["tr4_strong"], "strong form");
        print_checks(j["tr4_prime"], "TR4'");
      });
      return j["passed"].get<bool>() ? 0 : 1;
    };
  });

  // verify equivalence | axioms
  auto* ver = app.add_subcommand("verify", "seeded property suites")->require_subcommand(1);
  auto* veq = ver->add_subcommand("equivalence", "the functor from complexes to the formal model");
  common(veq, true, true);
  veq->callback([&] {
    action = [&] {
      const auto q = load_quiver(o.quiver);
      EquivalenceOptions opts;
      if (o.trials) opts.trials = o.trials;
      if (o.seed) opts.seed = o.seed;
      opts.window = parse_window(o.window, opts.window);
      const auto r = verify_equivalence(q, opts);
      emit(o, io::to_json(r), [&] { print_report(r); });
      return r.passed() ? 0 : 1;
    };
  });
  auto* vax = ver->add_subcommand("axioms", "TR0-TR3 and the split-triangle lemmas");
  common(vax, true, true);
  vax->callback([&] {
    action = [&] {
      const auto q = load_quiver(o.quiver);
      AxiomOptions opts;
      if (o.trials) {
        opts.trials = o.trials;
        opts.conjugation_trials = std::min(opts.conjugation_trials, o.trials);
        opts.split_trials = std::min(opts.split_trials, o.trials);
      }
      if (o.seed) opts.seed = o.seed;
      opts.window = parse_window(o.window, opts.window);
      const auto r = verify_axioms(q, opts);
      emit(o, io::to_json(r), [&] { print_report(r); });
      return r.passed() ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    apply_prime(o);
    return action();
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Unsupported& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const WindowExhausted& e) {
    std::cerr << "error: " << e.what() << " (need window " << e.required_lo << ".." << e.required_hi << ")\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
