#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings of rings, elements, blocks and sequence spec files.
 *
 * Ring:     "integer" | "rational" | {"kind": "mod", "modulus": "7"}
 *           | {"kind": "product", "left": R, "right": R}
 *           | {"kind": "polynomial", "base": R, "variables": ["T", "U"]}
 * Element:  Integer / IntegersMod as decimal strings, Rational as "p/q",
 *           Product as a 2-array, Polynomial as {"e1,...,ek": coefficient}.
 * Spec:     {"ring": R, "module_rank": m, "axes": [{"coeffs": [...]}, ...],
 *            "initial": {"shape": [d_1, ...], "data": [...]}, "roots": [r1, r2]?}
 *           Block data is axis-1-fastest; with module_rank > 1 every data
 *           entry is an array of m elements.
 *
 * Decoding failures throw Error(Errc::Schema) naming the offending field.
 */

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "fibmod/closedform.hpp"
#include "fibmod/genfun.hpp"
#include "fibmod/multiseq.hpp"
#include "fibmod/ring.hpp"

namespace fibmod {

using json = nlohmann::json;

json ring_to_json(const Ring& ring);
Ring ring_from_json(const json& j, const std::string& path = "ring");

json element_to_json(const Element& x);
Element element_from_json(const Ring& ring, const json& j, const std::string& path = "element");

json module_element_to_json(const ModuleElement& x);
ModuleElement module_element_from_json(const Ring& ring, std::size_t rank, const json& j,
                                       const std::string& path = "element");

/// {"shape": [...], "data": [...]}
json block_to_json(const Hypercube<ModuleElement>& block);
Hypercube<ModuleElement> block_from_json(const Ring& ring, std::size_t rank, const json& j,
                                         const std::string& path = "initial");

struct SpecFile {
  MultiSequence sequence;
  std::optional<RootPair> roots;
};

SpecFile spec_from_json(const json& j);
json spec_to_json(const MultiSequence& mseq, const std::optional<RootPair>& roots = std::nullopt);
SpecFile load_spec_file(const std::filesystem::path& path);

/// Parses a scalar token such as "-12" or "3/4" into an element of `ring`
/// (command-line values such as --roots).
Element parse_scalar(const Ring& ring, const std::string& text);

/// {"variables": [...], "numerator": {...}, "denominators": [{...}, ...]}
json gf_to_json(const RationalGF& gf);

}  // namespace fibmod
