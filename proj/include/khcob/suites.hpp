#pragma once
// Verification suites over a corpus directory, shared by the CLI, the
// acceptance binary and the Python module.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "khcob/movie.hpp"
#include "khcob/szabo.hpp"
#include "khcob/tqft.hpp"

namespace khcob::suites {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedDiagram {
  std::string name;
  diagram::LinkDiagram diagram;
};

// Layout: DIR/diagrams/*.pd, DIR/movies/NAME.a.movie + NAME.b.movie,
// DIR/rules/*.json (kind "frobenius" or "szabo-table"). Missing
// subdirectories are empty. Files are read in name order.
struct Corpus {
  std::string dir;
  std::vector<NamedDiagram> diagrams;
  std::vector<movie::CorpusPair> movie_pairs;
  std::vector<tqft::FrobeniusRule> frobenius_rules;
  std::vector<szabo::HigherRule> higher_rules;
  std::vector<std::string> files;  // every file read, for input hashes
};
Corpus load_corpus(const std::string& dir);

std::string read_file(const std::string& path);  // IoError
// Rule files: "kh", "bn", or a JSON file of either kind.
tqft::FrobeniusRule frobenius_rule(const std::string& spec);
szabo::HigherRule higher_rule(const std::string& spec);  // "khovanov-only" or a file

struct CheckResult {
  std::string input;
  std::string check;
  std::string status;  // "pass", "fail", "untestable", "skipped"
  std::string witness;
};

struct SuiteOptions {
  int jobs = 1;
  int max_crossings = 8;         // axioms
  int max_crossings_small = 6;   // reidemeister, szabo
  std::vector<tqft::FrobeniusRule> rules{tqft::FrobeniusRule::khovanov(),
                                         tqft::FrobeniusRule::bar_natan()};
  std::vector<szabo::HigherRule> higher_rules;  // szabo suite; empty = khovanov-only + corpus
};

std::vector<CheckResult> run_axioms(const Corpus& c, const SuiteOptions& o);
std::vector<CheckResult> run_reidemeister(const Corpus& c, const SuiteOptions& o);
std::vector<CheckResult> run_moviemoves(const Corpus& c, const SuiteOptions& o);
std::vector<CheckResult> run_szabo(const Corpus& c, const SuiteOptions& o);
std::vector<CheckResult> run_suite(const std::string& name, const Corpus& c, const SuiteOptions& o);

bool all_pass(const std::vector<CheckResult>& r);  // "untestable" and "skipped" count as pass

// R-move instances used by the reidemeister suite: R1 both signs on the
// first arc, R2 on the first face with two arcs, R3 on every valid triangle,
// and the deletions undoing the insertions.
struct RInstance {
  diagram::LinkDiagram before;
  diagram::Move move;
};
std::vector<RInstance> reidemeister_instances(const diagram::LinkDiagram& d);

// Runs f(0..n-1) on up to `jobs` threads; results keep index order.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& f);

// sum (-1)^h q^q over generators.
diagram::LaurentPoly graded_euler(const chain::FilteredComplex& c);

}  // namespace khcob::suites
