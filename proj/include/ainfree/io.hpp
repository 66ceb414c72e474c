#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "ainfree/freecat.hpp"
#include "ainfree/funcat.hpp"
#include "ainfree/lift.hpp"

namespace ainfree {

/* Documents are JSON with an explicit ring tag ("Z", "Q", "Zp:<p>"). All
   degrees are the shifted ones, matching internal storage. Coefficients are
   written as exact decimal strings ("-3", "1/2"); plain JSON integers are
   accepted on input. Emission is canonical: fixed key order, basis order for
   combinations, nonzero rows only. */
using Json = nlohmann::ordered_json;

// [{"coeff": "...", "name": "..."}] in basis order; empty array for zero.
Json combination_to_json(const Elem& e, const std::vector<std::string>& names);
Elem combination_from_json(const Json& arr, const std::map<std::string, int>& ids, RingSpec ring);

/* {ring, objects, morphisms: [{name, src, dst, sdeg}], differential:
   [{on, value}]}. Loading resolves names, requires them unique, and checks
   endpoints, degree +1, and d^2 = 0 through the quiver constructor. */
DGQuiver quiver_from_json(const Json& doc);
Json quiver_to_json(const DGQuiver& dq);

/* The quiver fields plus {identity: [{object, name}], products: [{left,
   right, value}]}: a strictly unital graded category with a differential.
   Products with an identity are implied and must not be listed. */
DgCatData category_from_json(const Json& doc);
Json category_to_json(const DgCatData& data);

/* Generator-level chain-map data into a category: {objects: [{from, to}],
   components: [{inputs: [name], output}]}. The object entries may be omitted
   when source and target object names coincide; generators without a row map
   to zero. Loading checks degree homogeneity; the chain condition is the
   extension's precondition, checked there. */
struct MapData {
  std::vector<int> obj_map;
  std::vector<Elem> images;
};
MapData map_from_json(const Json& doc, const DGQuiver& dq, const AnCat& target);
Json map_to_json(const DGQuiver& dq, const AnCat& target, const MapData& m);

/* Functor document: ring, level, object map, and one row per basis slot of
   the free category with nonzero arity-1 value. A row's inputs list holds
   one letter per input: a generator name for a leaf, {tree, word} otherwise. */
Json functor_to_json(const FreeCat& fq, const AnCat& target, const CocatHom& f);

/* Transformation data at the generator level: {ring, degree, components}
   with rows {at: object, output} for the 0-component and {inputs: [name],
   output} for the generator components. */
struct TransData {
  int deg = 0;
  std::vector<Elem> comp0;  // per source object
  std::vector<Elem> comp1;  // per generator
};
TransData transformation_from_json(const Json& doc, const DGQuiver& dq, const AnCat& target);

/* The 0-components (rows {at, output}) and the arity-1 components on the
   free category's slots, same row encoding as the functor document. Lifts of
   generator-level data have no components of arity >= 2, so these rows are
   the whole coderivation for them. */
Json coderivation_to_json(const FreeCat& fq, const AnCat& target, const Coderivation& r);

// Parses the file as JSON; read or parse failures throw invalid_argument.
Json load_json_file(const std::string& path);

// doc.dump with the fixed indent and a trailing newline: the canonical form.
std::string canonical_text(const Json& doc);

}  // namespace ainfree
