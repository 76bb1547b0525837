#pragma once
// Filtered F2 chain complexes: d raises h by one and never lowers q.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "khcob/sparse.hpp"

namespace khcob::chain {

using f2::Index;
using f2::SparseMap;
using f2::SparseVec;

struct Generator {
  int h = 0;
  int q = 0;
  std::string tag;
  bool operator==(const Generator&) const = default;
};

class FilteredComplex {
 public:
  FilteredComplex() = default;
  FilteredComplex(std::vector<Generator> gens, SparseMap d);

  std::size_t size() const { return gens_.size(); }
  const std::vector<Generator>& gens() const { return gens_; }
  const Generator& gen(std::size_t i) const { return gens_[i]; }
  const SparseMap& d() const { return d_; }
  // True when every differential entry preserves q.
  bool q_preserving() const;
  bool operator==(const FilteredComplex& o) const { return gens_ == o.gens_ && d_ == o.d_; }

 private:
  std::vector<Generator> gens_;
  SparseMap d_;
};

using ComplexPtr = std::shared_ptr<const FilteredComplex>;
ComplexPtr share(FilteredComplex c);

struct FilteredChainMap {
  ComplexPtr source, target;
  SparseMap matrix;  // target.size() x source.size()
  int h_degree = 0;
  int q_degree = 0;  // filtered: q(target) >= q(source) + q_degree
};

FilteredChainMap identity_map(const ComplexPtr& c);
FilteredChainMap zero_map(const ComplexPtr& s, const ComplexPtr& t, int h_degree = 0,
                          int q_degree = 0);
// g ∘ f
FilteredChainMap compose(const FilteredChainMap& g, const FilteredChainMap& f);
FilteredChainMap add(const FilteredChainMap& f, const FilteredChainMap& g);

struct Issue {
  std::string kind;  // "d_squared", "h_degree", "filtration", "chain_map", "shape"
  Index source = 0, target = 0;
  std::string message;
};
struct VerifyReport {
  std::vector<Issue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary(std::size_t max_items = 5) const;
};

VerifyReport verify(const FilteredComplex& c);
// Filtration, degree and (for chain maps) f d = d' f.
VerifyReport verify_map(const FilteredChainMap& f, bool require_chain_map = true);

class ChainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Source generators move to h + h_degree - 1 so the block differential is homogeneous.
FilteredComplex cone(const FilteredChainMap& f);
FilteredComplex tensor(const FilteredComplex& a, const FilteredComplex& b);
// Generator i of y is generator y_to_x[i] of x, with the same h and q, and
// the differentials agree under that renumbering. Tags are ignored.
bool equal_under(const FilteredComplex& x, const FilteredComplex& y,
                 const std::vector<Index>& y_to_x);

// (h, q) -> dim. For a filtered differential q is the filtration level of the
// associated graded homology.
using BigradedDims = std::map<std::pair<int, int>, long long>;

struct HomologyResult {
  bool graded = true;  // differential preserves q
  BigradedDims dims;
  std::map<int, long long> by_h;
  long long total = 0;
};
HomologyResult homology(const FilteredComplex& c);

struct Reduction {
  ComplexPtr reduced;
  FilteredChainMap pi, iota;  // original -> reduced, reduced -> original
  SparseMap homotopy;         // on the original: iota pi = 1 + dH + Hd
};

// Gaussian elimination of all q-preserving entries.
Reduction reduce(const ComplexPtr& c, bool verify_result = true);
FilteredComplex reduce_untracked(const FilteredComplex& c);

// Elimination engine shared with the Reidemeister constructions: callers
// choose the pivots.
class Eliminator {
 public:
  Eliminator(const FilteredComplex& c, bool track);
  bool alive(Index i) const { return alive_[i]; }
  const std::vector<Index>& out(Index i) const { return out_[i]; }
  const std::vector<Index>& in(Index i) const { return in_[i]; }
  bool has_entry(Index a, Index b) const;
  // Cancels a -> b. Throws ChainError if the entry is absent or changes q.
  void cancel(Index a, Index b);
  // Cancels q-preserving entries until none remain.
  void cancel_all();
  // Reduced complex plus, when tracking, the equivalence data. `original`
  // must be the complex passed to the constructor.
  Reduction finish(const ComplexPtr& original, bool verify_result) const;
  FilteredComplex finish_untracked() const;
  std::size_t alive_count() const { return alive_count_; }

 private:
  const FilteredComplex* c_;
  bool track_;
  std::vector<std::vector<Index>> out_, in_;
  std::vector<char> alive_;
  std::size_t alive_count_ = 0;
  std::vector<SparseVec> iota_, pirow_, h_;
  void toggle(Index x, Index y);
  void erase_from(std::vector<Index>& v, Index x);
};

struct Page {
  int index = 0;     // 0 = chain groups, 1 = the Khovanov page, ...
  std::string name;  // "E0", "Khovanov page", "E2", ..., "stable page"
  std::map<std::pair<int, int>, long long> dims;  // (h, filtration level q) -> dim
  long long total = 0;
  long long d_rank = 0;  // rank of the differential on this page
};

struct SpectralResult {
  int unit = 2;  // q-jump of d_k is unit * k
  std::vector<Page> pages;
  Page stable;
  int stabilized_at = 1;  // first page equal to the stable page
};
SpectralResult spectral_pages(const FilteredComplex& c, int r_max = 16);

struct HomotopyOptions {
  bool filtered = true;
  enum class Method { automatic, direct, reduced } method = Method::automatic;
};
// H: source -> target of h-degree -1 with f + g = d'H + Hd, or nullopt.
std::optional<SparseMap> homotopic(const FilteredChainMap& f, const FilteredChainMap& g,
                                   const HomotopyOptions& opts = {});
bool is_homotopy(const FilteredChainMap& f, const FilteredChainMap& g, const SparseMap& h);

// Rank of the map induced on homology (total over all degrees).
long long homology_rank(const FilteredChainMap& f);

}  // namespace khcob::chain
