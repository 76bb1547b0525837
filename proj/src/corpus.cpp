// Canned pairs of movies that should induce homotopic maps.

#include <string>
#include <vector>

#include "khcob/movie.hpp"

namespace khcob::movie {

namespace {

struct Entry {
  const char* name;
  const char* pd;
  const char* a;
  const char* b;
};

// Moves are separated by ';'.
const Entry kEntries[] = {
    {"mm15-unknot", "U(1)", "h0; h1 1 2", ""},
    {"mm15-reverse", "U(1)", "h1 1 1; h2 2", ""},
    {"mm15-trefoil", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", "h0; h1 7 2", ""},
    {"swap-00", "U(1)", "h0; h0", "h0; h0; relabel 2->3 3->2"},
    {"swap-01", "U(1) U(2)", "h0; h1 1 2", "h1 1 2; h0; relabel 2->3"},
    {"swap-02", "U(1) U(2)", "h0; h2 2", "h2 2; h0; relabel 2->3"},
    {"swap-11", "U(1) U(2) U(3)", "h1 1 2; h1 3 3", "h1 3 3; h1 1 2"},
    {"swap-12", "U(1) U(2)", "h1 1 1; h2 2", "h2 2; h1 1 1; relabel 2->3"},
    {"swap-22", "U(1) U(2) U(3)", "h2 2; h2 3", "h2 3; h2 2"},
    {"r1-pos-unknot", "U(1)", "r1 1 + ins L; r1 2 * del L", ""},
    {"r1-neg-unknot", "U(1)", "r1 1 - ins L; r1 2 * del L", ""},
    {"r1-pos-trefoil", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", "r1 1 + ins L; r1 7 * del L", ""},
    {"r1-neg-trefoil", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", "r1 1 - ins R; r1 7 * del R", ""},
    {"r2-trefoil", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", "r2 2 5 ins; r2 9 7 del", ""},
    {"r3-twice", "X(1,2,3,4) X(5,4,6,5) X(6,3,2,1)", "r3 3 4 6; r3 3 4 6", ""},
    {"r2-slide", "U(1) U(2)", "r2 1 2 ins; r2 1 2 ins; r2 9 7 del; r2 5 6 del", ""},
    {"distant-r1-r2", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", "r1 1 + ins L; r2 2 5 ins",
     "r2 2 5 ins; r1 1 + ins L; relabel 12->8 8->10 10->12 7->9 9->11 11->7"},
};

Movie build(const Entry& e, const char* moves, const std::string& suffix) {
  std::string text = std::string(e.pd) + "\n";
  std::string s = moves;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto next = s.find(';', pos);
    if (next == std::string::npos) next = s.size();
    text += s.substr(pos, next - pos) + "\n";
    pos = next + 1;
  }
  return parse_movie(text, std::string(e.name) + suffix);
}

}  // namespace

std::vector<CorpusPair> canned_corpus() {
  std::vector<CorpusPair> out;
  for (const auto& e : kEntries) out.push_back({e.name, build(e, e.a, "/a"), build(e, e.b, "/b")});
  return out;
}

}  // namespace khcob::movie
