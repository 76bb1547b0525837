#pragma once
// Movies of link diagrams and the chain maps they induce.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "khcob/chaincx.hpp"
#include "khcob/diagram.hpp"
#include "khcob/tqft.hpp"

namespace khcob::movie {

class MovieError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class FrameMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
// A constructed map failed its own verification.
class ConstructionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Movie {
  std::string name;
  diagram::LinkDiagram initial;
  std::vector<diagram::Move> moves;
  std::vector<diagram::MoveResult> steps;  // steps[i]: frames[i] -> frames[i+1]
  std::vector<diagram::LinkDiagram> frames;

  // Applies every move; move errors propagate (DiagramError).
  static Movie make(diagram::LinkDiagram initial, std::vector<diagram::Move> moves,
                    std::string name = "");
  const diagram::LinkDiagram& final_frame() const { return frames.back(); }
};

// Text format: see docs/movie-format.md.
Movie parse_movie(const std::string& text, std::string name = "");
std::string format_movie(const Movie& m);
diagram::Move parse_move(const std::string& line);
Movie concatenate(const Movie& a, const Movie& b);

struct ReidemeisterMaps {
  chain::FilteredChainMap rho;        // before -> after
  chain::FilteredChainMap rho_prime;  // after -> before
  chain::SparseMap h_source;          // rho' rho + id = dH + Hd on the source
  chain::SparseMap h_target;          // rho rho' + id = dH + Hd on the target
};

// Gaussian elimination of the local circle on the side with more crossings,
// then matching of the surviving generators with the other side. With
// `solve` the source homotopy is recomputed by the homotopy solver.
ReidemeisterMaps reidemeister_map(const tqft::Cube& src, const tqft::Cube& dst,
                                  const diagram::MoveResult& mv, bool solve = false);
ReidemeisterMaps reidemeister_map(const diagram::LinkDiagram& d, const diagram::Move& m,
                                  const tqft::FrobeniusRule& rule, bool solve = true);

// Map of one elementary move between the cubes of its frames.
chain::FilteredChainMap move_map(const tqft::Cube& src, const tqft::Cube& dst,
                                 const diagram::MoveResult& mv);
chain::FilteredChainMap induced_map(const Movie& m, const tqft::FrobeniusRule& rule);

// Throws FrameMismatch unless the movies share the initial frame and end at
// the same diagram up to the order of its crossings.
// induced_map of both movies, the second composed with the crossing
// reordering if needed, sharing source and target objects.
std::pair<chain::FilteredChainMap, chain::FilteredChainMap> comparable_maps(
    const Movie& a, const Movie& b, const tqft::FrobeniusRule& rule);
std::optional<chain::SparseMap> verify_movie_move(const Movie& a, const Movie& b,
                                                  const tqft::FrobeniusRule& rule);

struct CorpusPair {
  std::string name;
  Movie a, b;
};
std::vector<CorpusPair> canned_corpus();

}  // namespace khcob::movie
