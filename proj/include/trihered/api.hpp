// JSON-level entry points shared by the command-line tool and the Python module.
#pragma once

#include "trihered/io.hpp"

namespace trihered::api {

using io::json;

/// Cone of a morphism file: a representation morphism {"source","target","maps"} or a formal
/// morphism. Stalk maps in degree 0 use cone_in_H, a lone Ext part between stalks
/// cone_pure_ext, anything else cone_general. Keys: method, cone, exact, triangle.
json cone(const QuiverPtr& q, const json& morphism, const std::string& loc = "");

/// The octahedron on f: X -> Y, u: Y -> Y' with the TR4, strong-form and TR4' reports.
/// Keys: passed, Z, Z', W, tr4, tr4_strong, tr4_prime (or error when no octahedron was built).
json octahedron(const QuiverPtr& q, const json& f, const json& u, const OctaOptions& options = {},
                const std::string& f_loc = "/f", const std::string& u_loc = "/u");

/// t-structure generated by a node name, with the boundedness witness when M[-1] is in the window.
json tstructure(const QuiverPtr& q, const std::string& generator, DegreeWindow window);

/// Forward path for a walk; on window exhaustion {"error", "required_window"}.
json walk_to_path(const QuiverPtr& q, const json& walk, DegreeWindow window, const std::string& loc = "");

/// Connected components of the path graph, by node name.
json blocks(const QuiverPtr& q, DegreeWindow window);

/// Indecomposable summands of an object (names, a representation or a formal object).
json decompose(const QuiverPtr& q, const json& object, const std::string& loc = "");

/// dim Hom(X, Y[shift]) split into Hom and Ext parts.
json hom(const QuiverPtr& q, const json& source, const json& target, int shift);

/// dim Hom and dim Ext^1 between representations, with the middle term of each basis class.
json ext(const QuiverPtr& q, const json& source, const json& target);

/// Label, aliases and dimension vector of each indecomposable.
json indecomposables(const QuiverPtr& q);

/// A name expression string, a representation object ({"dims"}) or a formal object.
FormalObject object_from_json(const QuiverPtr& q, const json& j, const std::string& loc = "");

}  // namespace trihered::api
