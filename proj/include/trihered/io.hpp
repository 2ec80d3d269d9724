// JSON reading and writing for quivers, representations, complexes, formal
// objects and morphisms, walks and reports. Vertices are 1-based in files.
#pragma once

#include <json.hpp>
#include <string>

#include "trihered/axioms.hpp"
#include "trihered/complexes.hpp"
#include "trihered/cones.hpp"
#include "trihered/octa.hpp"
#include "trihered/tstruct.hpp"

namespace trihered::io {

using json = nlohmann::ordered_json;

/// Malformed or inconsistent input; `location` is a JSON pointer or file position.
class ParseError : public Error {
 public:
  ParseError(const std::string& location, const std::string& message)
      : Error(location.empty() ? message : location + ": " + message), location(location) {}
  std::string location;
};

json read_file(const std::string& path);

QuiverPtr quiver_from_json(const json& j, const std::string& loc = "");
json to_json(const Quiver& q);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& loc);

/// An object {"dims", "mats"} or, on Dynkin quivers, an indecomposable name such as "P1".
Representation rep_from_json(const QuiverPtr& q, const json& j, const std::string& loc = "");
json to_json(const Representation& r);

/// {"source", "target", "maps"}; source and target may be supplied by the caller instead.
RepMorphism rep_morphism_from_json(const QuiverPtr& q, const json& j, const std::string& loc = "",
                                   const Representation* source = nullptr, const Representation* target = nullptr);
json to_json(const RepMorphism& f, bool with_ends = true);

Complex complex_from_json(const QuiverPtr& q, const json& j, const std::string& loc = "");
json to_json(const Complex& c);
ChainMap chain_map_from_json(const QuiverPtr& q, const json& j, const std::string& loc = "");
json to_json(const ChainMap& f);

/// {"components": {"n": rep}} or a sum of names "S1 + P2[1]" ("0" for the zero object).
FormalObject formal_object_from_json(const QuiverPtr& q, const json& j, const std::string& loc = "");
json to_json(const FormalObject& x);
/// {"source", "target", "hom": {"n": {"maps"}}, "ext": {"n": [coords]}}.
FormalMorphism formal_morphism_from_json(const QuiverPtr& q, const json& j, const std::string& loc = "");
json to_json(const FormalMorphism& f);
json to_json(const Triangle& t);

/// Names of the indecomposable summands, "S2[1]" style, ordered by degree.
std::vector<std::string> summand_names(const FormalObject& x);

/// {"start": ["P1", 0], "steps": [{"kind": "hom-backward", "to": ["S1", 0]}]}.
Walk walk_from_json(const PathGraph& g, const json& j, const std::string& loc = "");

json to_json(const CheckReport& r);
json to_json(const OctaReport& r);
json to_json(const TStructure& ts);
json to_json(const PathGraph& g, const PathResult& p);

}  // namespace trihered::io
