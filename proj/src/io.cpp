#include "khcob/io.hpp"

#include <string>

namespace khcob::io {

using nlohmann::json;

json to_json(const chain::FilteredComplex& c) {
  json gens = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& g = c.gen(i);
    gens.push_back({{"id", i}, {"h", g.h}, {"q", g.q}, {"tag", g.tag}});
  }
  json d = json::array();
  for (auto [row, col] : c.d().entries()) d.push_back({col, row});
  return {{"kind", "complex"}, {"generators", gens}, {"differential", d}};
}

chain::FilteredComplex complex_from_json(const json& j) {
  try {
    if (j.contains("kind") && j.at("kind") != "complex")
      throw FormatError("expected kind \"complex\"");
    const auto& gj = j.at("generators");
    std::vector<chain::Generator> gens(gj.size());
    for (std::size_t i = 0; i < gj.size(); ++i) {
      const auto& g = gj[i];
      if (g.contains("id") && g.at("id").get<std::size_t>() != i)
        throw FormatError("generator ids must be 0, 1, 2, ... in order");
      gens[i] = {g.at("h").get<int>(), g.at("q").get<int>(), g.value("tag", std::string())};
    }
    f2::SparseMap d(gens.size(), gens.size());
    for (const auto& e : j.at("differential")) {
      auto s = e.at(0).get<std::size_t>(), t = e.at(1).get<std::size_t>();
      if (s >= gens.size() || t >= gens.size())
        throw FormatError("differential entry out of range: [" + std::to_string(s) + ", " +
                          std::to_string(t) + "]");
      d.toggle(static_cast<f2::Index>(t), static_cast<f2::Index>(s));
    }
    return chain::FilteredComplex(std::move(gens), std::move(d));
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed complex: ") + e.what());
  }
}

json to_json(const f2::SparseMap& m) {
  json entries = json::array();
  for (auto [row, col] : m.entries()) entries.push_back({col, row});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json to_json(const chain::FilteredChainMap& f) {
  json j = to_json(f.matrix);
  j["kind"] = "map";
  j["h_degree"] = f.h_degree;
  j["q_degree"] = f.q_degree;
  return j;
}

json dims_to_json(const chain::BigradedDims& dims) {
  json out = json::array();
  for (const auto& [hq, n] : dims)
    if (n) out.push_back({{"h", hq.first}, {"q", hq.second}, {"dim", n}});
  return out;
}

json to_json(const chain::HomologyResult& r) {
  json by_h = json::array();
  for (const auto& [h, n] : r.by_h)
    if (n) by_h.push_back({{"h", h}, {"dim", n}});
  return {{"graded", r.graded}, {"dims", dims_to_json(r.dims)}, {"by_h", by_h}, {"total", r.total}};
}

namespace {
json page_json(const chain::Page& p) {
  return {{"index", p.index}, {"name", p.name}, {"dims", dims_to_json(p.dims)},
          {"total", p.total}, {"d_rank", p.d_rank}};
}
}  // namespace

json to_json(const chain::SpectralResult& r) {
  json pages = json::array();
  for (const auto& p : r.pages) pages.push_back(page_json(p));
  return {{"unit", r.unit}, {"pages", pages}, {"stable", page_json(r.stable)},
          {"stabilized_at", r.stabilized_at}};
}

}  // namespace khcob::io
