#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "equichain/chainmaps.hpp"
#include "equichain/solvability.hpp"
#include "equichain/subdivision.hpp"
#include "equichain/symmetry.hpp"

namespace equichain {

using json = nlohmann::ordered_json;

// File-level failures (open/read/write), as opposed to malformed content.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally invalid documents: wrong types, missing keys, bad values.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Static versioning block carried by every top-level document; excluded from
// reproducibility comparisons.
json meta_block();

// Top-level document: meta + type tag + payload keys, flat.
json make_document(const std::string& type, json payload);

// Integers serialize as JSON numbers while they fit in 64 bits and as
// decimal strings beyond; both forms parse back.
json int_to_json(const Int& x);
Int int_from_json(const json& j);

json vertex_to_json(const Vertex& v);
Vertex vertex_from_json(const json& j);

json simplex_to_json(const Simplex& s);
// Canonicalizes the vertex order; second component is the sign of the
// sorting permutation (+1 for the empty simplex).
std::pair<Simplex, int> simplex_from_json(const json& j);

json complex_to_json(const Complex& k);
Complex complex_from_json(const json& j);

json chain_to_json(const Chain& c);
Chain chain_from_json(const json& j);

json permutation_to_json(const GroupElement& g);
GroupElement permutation_from_json(const json& j);

json map_to_json(const ChainMapTable& m);
ChainMapTable map_from_json(const json& j);

json verifications_to_json(const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> verifications_from_json(const json& j);

json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

json subdivision_to_json(const SubdividedComplex& s);

json coloring_to_json(const BinaryColoring& b);
BinaryColoring coloring_from_json(const json& j);

json load_json(const std::string& path);                 // IoError / ParseError
void save_json(const std::string& path, const json& j);  // IoError

std::string dump_canonical(const json& j);  // 2-space indent, trailing newline

}  // namespace equichain
