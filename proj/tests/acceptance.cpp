// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// usage: khcob_acceptance [CORPUS_DIR]

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "khcob/movie.hpp"
#include "khcob/suites.hpp"
#include "khcob/szabo.hpp"
#include "khcob/tqft.hpp"
#include "oracle.hpp"

using namespace khcob;
using tqft::FrobeniusRule;
using Clock = std::chrono::steady_clock;
using Dims = std::map<std::pair<int, int>, long long>;

namespace {

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

// Peak resident set size in MiB, from /proc.
double peak_rss_mib() {
  std::ifstream f("/proc/self/status");
  std::string line;
  while (std::getline(f, line))
    if (line.rfind("VmHWM:", 0) == 0) return std::stod(line.substr(6)) / 1024.0;
  return -1;
}

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (ok) note.str("");
    if (!ok) note << "; ";
    ok = false;
    note << why;
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  if (!o.ok) ++failures;
  std::printf("criterion %d: %s  %s [%.2fs] %s\n", n, o.ok ? "PASS" : "FAIL", title.c_str(),
              seconds_since(t0), o.note.str().c_str());
  std::fflush(stdout);
}

Dims nonzero(const chain::BigradedDims& d) {
  Dims out;
  for (auto [hq, n] : d)
    if (n) out[hq] = n;
  return out;
}

oracle::PD pd_of(const diagram::LinkDiagram& d) {
  oracle::PD pd;
  for (auto& x : d.crossings()) pd.push_back(x.arcs);
  return pd;
}

bool starts_with(const std::string& s, const char* p) { return s.rfind(p, 0) == 0; }

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : KHCOB_TEST_CORPUS;
  auto corpus = suites::load_corpus(dir);
  const std::vector<FrobeniusRule> rules{FrobeniusRule::khovanov(), FrobeniusRule::bar_natan()};
  std::printf("corpus: %s (%zu diagrams)\n", dir.c_str(), corpus.diagrams.size());

  criterion(1, "axioms: d^2 = 0 (Kh, BN, decorated), Frobenius, S, T, 4Tu", [&](Outcome& o) {
    auto t0 = Clock::now();
    for (auto& r : rules) {
      if (!r.check_axioms().empty()) o.fail(r.name + " violates Frobenius axioms");
      if (tqft::evaluate_closed(r, 0) != 0) o.fail(r.name + ": sphere != 0");
      if (tqft::evaluate_closed(r, 1) != 0) o.fail(r.name + ": torus != 0");
      if (!tqft::check_4tu(r)) o.fail(r.name + ": 4Tu fails");
    }
    int n = 0;
    for (auto& [name, d] : corpus.diagrams) {
      if (d.crossing_count() > 8) continue;
      ++n;
      for (auto& r : rules) {
        auto cube = tqft::build_cube(d, r);
        if (!chain::verify(*cube->complex).ok()) o.fail(name + " " + r.name + " complex invalid");
        if (r.name == "khovanov") {
          szabo::Decoration t(d.crossing_count(), 0);
          auto dec = szabo::decorated_complex(*cube, t, szabo::HigherRule::khovanov_only());
          if (!chain::verify(dec).ok()) o.fail(name + " decorated complex invalid");
        }
      }
    }
    double s = seconds_since(t0);
    if (s >= 60) o.fail("took " + std::to_string(s) + " s");
    if (o.ok) o.note << n << " diagrams, 2 rules";
  });

  criterion(2, "graded Euler characteristic = Kauffman-bracket Jones", [&](Outcome& o) {
    auto t0 = Clock::now();
    auto all = corpus.diagrams;
    all.push_back({"k12", diagram::parse_pd(suites::read_file(dir + "/large/k12.pd"))});
    for (auto& [name, d] : all) {
      auto c = tqft::cube_complex(d, FrobeniusRule::khovanov());
      if (!(suites::graded_euler(c) == diagram::kauffman_bracket_jones(d))) o.fail(name);
    }
    double s = seconds_since(t0);
    if (s >= 30) o.fail("took " + std::to_string(s) + " s");
    if (o.ok) o.note << all.size() << " diagrams";
  });

  criterion(3, "Khovanov dims: unknot, trefoil, figure-eight vs oracle", [&](Outcome& o) {
    const Dims unknot{{{0, -1}, 1}, {{0, 1}, 1}};
    // pre-registered from the brute-force oracle in tests/oracle.hpp
    const Dims trefoil{{{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1}, {{2, 7}, 1}, {{3, 7}, 1}, {{3, 9}, 1}};
    const Dims fig8{{{-2, -5}, 1}, {{-2, -3}, 1}, {{-1, -3}, 1}, {{-1, -1}, 1}, {{0, -1}, 1},
                    {{0, 1}, 1},   {{1, 1}, 1},   {{1, 3}, 1},   {{2, 3}, 1},   {{2, 5}, 1}};
    struct Case {
      const char* name;
      std::string pd;
      const Dims& want;
    };
    std::vector<Case> cases{{"unknot", "U(1)", unknot},
                            {"trefoil", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", trefoil},
                            {"figure-eight", "X(1,2,3,4) X(4,5,6,7) X(5,3,2,8) X(8,1,7,6)", fig8}};
    for (auto& c : cases) {
      auto d = diagram::parse_pd(c.pd);
      auto got = nonzero(chain::homology(tqft::cube_complex(d, FrobeniusRule::khovanov())).dims);
      if (got != c.want) o.fail(std::string(c.name) + " differs from the registered values");
      if (d.crossing_count() && oracle::khovanov_dims(pd_of(d)) != c.want)
        o.fail(std::string(c.name) + ": oracle disagrees with the registered values");
    }
  });

  criterion(4, "BN collapse: dim 2 on knots, 2^c on unlinks; pages", [&](Outcome& o) {
    int knots = 0, unlinks = 0;
    for (auto& [name, d] : corpus.diagrams) {
      bool unlink = starts_with(name, "unlink") || starts_with(name, "unknot");
      if (d.components() != 1 && !unlink) continue;
      auto c = tqft::cube_complex(d, FrobeniusRule::bar_natan());
      auto total = chain::homology(c).total;
      long long want = unlink ? (1LL << d.components()) : 2;
      if (total != want) o.fail(name + ": dim " + std::to_string(total));
      (unlink ? unlinks : knots)++;
      if (unlink) {
        auto sp = chain::spectral_pages(c);
        for (auto& p : sp.pages)
          if (p.index == 1 && p.dims != sp.stable.dims) o.fail(name + ": Khovanov page != stable page");
      }
    }
    auto t = diagram::parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    auto sp = chain::spectral_pages(tqft::cube_complex(t, FrobeniusRule::bar_natan()));
    long long kh = -1;
    for (auto& p : sp.pages)
      if (p.index == 1) kh = p.total;
    if (kh != 6 || sp.stable.total != 2)
      o.fail("trefoil pages " + std::to_string(kh) + " -> " + std::to_string(sp.stable.total));
    if (o.ok) o.note << knots << " knots, " << unlinks << " unlinks, trefoil " << kh << " -> " << sp.stable.total;
  });

  criterion(5, "Reidemeister invariance with solver-found homotopies", [&](Outcome& o) {
    int pairs = 0;
    for (auto& [name, d] : corpus.diagrams) {
      if (d.crossing_count() > 6) continue;
      for (auto& inst : suites::reidemeister_instances(d)) {
        auto mv = diagram::apply_move(inst.before, inst.move);
        bool ok = true;
        for (auto& r : rules) {
          auto a = tqft::build_cube(mv.before, r), b = tqft::build_cube(mv.after, r);
          if (chain::homology(*a->complex).dims != chain::homology(*b->complex).dims) {
            ok = false;
            o.fail(name + " " + diagram::describe(inst.move) + ": homology differs (" + r.name + ")");
          }
          auto m = movie::reidemeister_map(*a, *b, mv, true);
          auto back = chain::compose(m.rho_prime, m.rho);
          if (!chain::is_homotopy(back, chain::identity_map(m.rho.source), m.h_source)) {
            ok = false;
            o.fail(name + " " + diagram::describe(inst.move) + ": no homotopy (" + r.name + ")");
          }
        }
        pairs += ok;
      }
    }
    if (pairs < 10) o.fail("only " + std::to_string(pairs) + " pairs");
    if (o.ok) o.note << pairs << " R-move pairs, 2 rules";
  });

  criterion(6, "movie moves homotopic under both rules; MM15 identity on the nose", [&](Outcome& o) {
    auto t0 = Clock::now();
    auto pairs = movie::canned_corpus();
    if (pairs.size() < 12) o.fail("only " + std::to_string(pairs.size()) + " pairs");
    for (auto& p : pairs)
      for (auto& r : rules) {
        auto h = movie::verify_movie_move(p.a, p.b, r);
        if (!h) o.fail(p.name + " (" + r.name + ")");
      }
    for (auto& p : pairs) {
      if (!starts_with(p.name, "mm15")) continue;
      auto f = movie::induced_map(p.a, FrobeniusRule::khovanov());
      if (!(f.source == f.target || *f.source == *f.target) ||
          !(f.matrix == f2::SparseMap::identity(f.source->size())))
        o.fail(p.name + " is not the identity on the nose");
    }
    double s = seconds_since(t0);
    if (s >= 300) o.fail("took " + std::to_string(s) + " s");
    if (o.ok) o.note << pairs.size() << " pairs";
  });

  criterion(7, "Szabo scaffold: H_c^2 = 0, commuting H, khovanov-only, double flip", [&](Outcome& o) {
    suites::SuiteOptions opt;
    auto res = suites::run_szabo(corpus, opt);
    int checked = 0;
    for (auto& r : res) {
      if (starts_with(r.input, "rule:")) continue;
      if (r.status == "fail") o.fail(r.input + ": " + r.check);
      if (r.status == "pass") ++checked;
    }
    if (o.ok) o.note << checked << " checks";
  });

  criterion(8, "iterated cone = cube; cube of a disjoint union = tensor", [&](Outcome& o) {
    auto kink = diagram::parse_pd("X(1,2,2,1)");
    int n = 0;
    for (auto& [name, d] : corpus.diagrams) {
      if (d.crossing_count() > 8) continue;
      ++n;
      for (auto& r : rules) {
        auto cube = tqft::build_cube(d, r);
        if (!(tqft::iterated_cone(d, r) == *cube->complex)) o.fail(name + " cone (" + r.name + ")");
        auto kc = tqft::build_cube(kink, r);
        auto uc = tqft::build_cube(diagram::disjoint_union(d, kink), r);
        auto t = chain::tensor(*cube->complex, *kc->complex);
        if (!chain::equal_under(*uc->complex, t, tqft::union_correspondence(*cube, *kc, *uc)))
          o.fail(name + " union (" + r.name + ")");
      }
    }
    if (o.ok) o.note << n << " diagrams";
  });

  criterion(9, "12-crossing pipeline < 5 min and < 4 GB; packed vs naive elimination", [&](Outcome& o) {
    auto t0 = Clock::now();
    auto text = suites::read_file(dir + "/large/k12.pd");
    auto d = diagram::parse_pd(text);
    if (d.crossing_count() != 12) o.fail("k12 has " + std::to_string(d.crossing_count()) + " crossings");
    auto kh = chain::homology(tqft::cube_complex(d, FrobeniusRule::khovanov()));
    auto bn = chain::homology(tqft::cube_complex(d, FrobeniusRule::bar_natan()));
    double s = seconds_since(t0);
    double mib = peak_rss_mib();
    if (s >= 300) o.fail("took " + std::to_string(s) + " s");
    if (mib >= 4096) o.fail("peak RSS " + std::to_string(mib) + " MiB");
    if (bn.total != 2) o.fail("BN total " + std::to_string(bn.total));

    std::mt19937_64 rng(20261018);
    std::uniform_int_distribution<int> dim(1, 96);
    std::uniform_real_distribution<double> dens(0.02, 0.6);
    int agree = 0;
    for (int t = 0; t < 1000; ++t) {
      int rows = dim(rng), cols = dim(rng);
      std::bernoulli_distribution bit(dens(rng));
      f2::BitMatrix m(rows, cols);
      oracle::Dense naive(rows, std::vector<std::uint8_t>(cols));
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
          if (bit(rng)) m.set(i, j), naive[i][j] = 1;
      auto packed = f2::rank(m);
      bool same = packed == oracle::naive_rank(naive);
      // sparse elimination: H of cols -> rows has dimension rows + cols - 2 rank
      std::vector<chain::Generator> g;
      for (int j = 0; j < cols; ++j) g.push_back({0, 0, ""});
      for (int i = 0; i < rows; ++i) g.push_back({1, 0, ""});
      std::vector<std::pair<chain::Index, chain::Index>> rc;
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
          if (naive[i][j]) rc.push_back({chain::Index(cols + i), chain::Index(j)});
      chain::FilteredComplex c(g, f2::SparseMap::from_entries(rows + cols, rows + cols, rc));
      same = same && chain::homology(c).total == rows + cols - 2 * static_cast<long long>(packed);
      same = same && f2::kernel_basis(m).size() + packed == static_cast<std::size_t>(cols);
      agree += same;
    }
    if (agree != 1000) o.fail(std::to_string(1000 - agree) + " random instances disagree");
    o.note << "k12: Kh total " << kh.total << ", BN total " << bn.total << ", " << std::fixed
           << std::setprecision(2) << s << " s, peak RSS " << std::setprecision(0) << mib << " MiB; "
           << agree << "/1000 random instances agree";
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
