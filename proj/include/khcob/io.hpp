#pragma once
// JSON interchange for complexes, maps and computed invariants.

#include <stdexcept>

#include <json.hpp>

#include "khcob/chaincx.hpp"

namespace khcob::io {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"kind": "complex", "generators": [{"id", "h", "q", "tag"}...],
//  "differential": [[source, target], ...]}  (ids are positions)
nlohmann::json to_json(const chain::FilteredComplex& c);
chain::FilteredComplex complex_from_json(const nlohmann::json& j);

// {"kind": "map", "h_degree", "q_degree", "rows", "cols", "entries": [[source, target]...]}
nlohmann::json to_json(const chain::FilteredChainMap& f);
nlohmann::json to_json(const f2::SparseMap& m);

// [{"h", "q", "dim"}...] sorted by (h, q).
nlohmann::json dims_to_json(const chain::BigradedDims& dims);
nlohmann::json to_json(const chain::HomologyResult& r);
nlohmann::json to_json(const chain::SpectralResult& r);

}  // namespace khcob::io
