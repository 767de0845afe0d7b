#pragma once

#include <string>

#include <json.hpp>

#include "hecke/coeff.hpp"
#include "hecke/level.hpp"
#include "hecke/ring.hpp"

namespace hecke {

using json = nlohmann::json;

inline constexpr const char* kEngineVersion = "hecke 0.1.0";

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"terms":[{"ea":..,"eb":..,"ec":..,"k":"<decimal>"}]}
json laurent_to_json(const Laurent& x);
Laurent laurent_from_json(const json& j);

// Engine version and generating-set sizes, attached to every exported file.
json file_header();

json element_to_json(int n, const SVec<Laurent>& v);
json element_to_json(int n, const SVec<std::uint32_t>& v, const ModPoint& at);
SVec<Laurent> element_from_json(const json& j, int* n = nullptr);

json basis_to_json(int n);
json table_to_json(int n, int g, const SparseMatrix<Laurent>& m);
json table_to_json(int n, int g, const SparseMatrix<std::uint32_t>& m, const ModPoint& at);

json word_to_json(int n, const Letters& w);

}  // namespace hecke
