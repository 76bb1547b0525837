#include "khcob/suites.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace khcob::suites {

namespace fs = std::filesystem;
namespace dg = khcob::diagram;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return os.str();
}

namespace {

std::vector<fs::path> files_in(const fs::path& dir, const std::string& ext) {
  std::vector<fs::path> out;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return out;
  for (const auto& e : fs::directory_iterator(dir)) {
    auto name = e.path().filename().string();
    if (e.is_regular_file() && name.size() > ext.size() &&
        name.compare(name.size() - ext.size(), ext.size(), ext) == 0)
      out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

json parse_json_file(const std::string& path) {
  auto text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw tqft::RuleError(path + ": " + e.what());
  }
}

bool is_higher_rule(const json& j) {
  return j.value("kind", std::string()) == "szabo-table" || j.contains("faces");
}

}  // namespace

tqft::FrobeniusRule frobenius_rule(const std::string& spec) {
  if (spec == "kh" || spec == "khovanov") return tqft::FrobeniusRule::khovanov();
  if (spec == "bn" || spec == "bar-natan") return tqft::FrobeniusRule::bar_natan();
  auto j = parse_json_file(spec);
  if (is_higher_rule(j)) throw tqft::RuleError(spec + " is a Szabo rule table, not a Frobenius rule");
  return tqft::FrobeniusRule::from_json(j);
}

szabo::HigherRule higher_rule(const std::string& spec) {
  if (spec == "khovanov-only") return szabo::HigherRule::khovanov_only();
  auto j = parse_json_file(spec);
  if (!is_higher_rule(j)) throw tqft::RuleError(spec + " is not a Szabo rule table");
  try {
    return szabo::HigherRule::from_json(j);
  } catch (const std::invalid_argument& e) {
    throw tqft::RuleError(spec + ": " + e.what());
  }
}

Corpus load_corpus(const std::string& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("corpus directory not found: " + dir);
  Corpus c;
  c.dir = dir;
  fs::path root(dir);
  for (const auto& p : files_in(root / "diagrams", ".pd")) {
    c.files.push_back(p.string());
    c.diagrams.push_back({p.stem().string(), dg::parse_pd(read_file(p.string()))});
  }
  for (const auto& p : files_in(root / "movies", ".a.movie")) {
    auto name = p.filename().string();
    name = name.substr(0, name.size() - std::string(".a.movie").size());
    auto pb = p.parent_path() / (name + ".b.movie");
    if (!fs::exists(pb)) throw IoError("movie " + p.string() + " has no partner " + pb.string());
    c.files.push_back(p.string());
    c.files.push_back(pb.string());
    c.movie_pairs.push_back({name, movie::parse_movie(read_file(p.string()), name + "/a"),
                             movie::parse_movie(read_file(pb.string()), name + "/b")});
  }
  for (const auto& p : files_in(root / "rules", ".json")) {
    c.files.push_back(p.string());
    auto j = parse_json_file(p.string());
    if (is_higher_rule(j)) c.higher_rules.push_back(higher_rule(p.string()));
    else c.frobenius_rules.push_back(tqft::FrobeniusRule::from_json(j));
  }
  return c;
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& f) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  const int k = static_cast<int>(std::min<std::size_t>(n, static_cast<std::size_t>(jobs)));
  for (int t = 0; t < k; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

dg::LaurentPoly graded_euler(const chain::FilteredComplex& c) {
  dg::LaurentPoly e;
  for (const auto& g : c.gens()) e.add(g.q, (g.h % 2 == 0) ? 1 : -1);
  return e;
}

bool all_pass(const std::vector<CheckResult>& r) {
  return std::none_of(r.begin(), r.end(), [](const CheckResult& x) { return x.status == "fail"; });
}

namespace {

CheckResult verdict(std::string input, std::string check, bool ok, std::string witness = "") {
  return {std::move(input), std::move(check), ok ? "pass" : "fail", ok ? "" : std::move(witness)};
}

// Runs per-item work in parallel; each item yields its own list of results.
std::vector<CheckResult> gather(std::size_t n, int jobs,
                                const std::function<std::vector<CheckResult>(std::size_t)>& f) {
  std::vector<std::vector<CheckResult>> parts(n);
  parallel_for(n, jobs, [&](std::size_t i) { parts[i] = f(i); });
  std::vector<CheckResult> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string dims_string(const chain::HomologyResult& h) {
  std::ostringstream os;
  if (h.graded)
    for (auto [hq, n] : h.dims)
      if (n) os << "(" << hq.first << "," << hq.second << "):" << n << " ";
  os << "total " << h.total;
  return os.str();
}

std::vector<CheckResult> axioms_for_rule(const tqft::FrobeniusRule& r) {
  std::vector<CheckResult> out;
  auto bad = r.check_axioms();
  std::string w;
  for (auto& b : bad) w += (w.empty() ? "" : "; ") + b;
  out.push_back(verdict("rule:" + r.name, "frobenius axioms", bad.empty(), w));
  out.push_back(verdict("rule:" + r.name, "sphere = 0", tqft::evaluate_closed(r, 0) == 0,
                        "sphere evaluates to 1"));
  out.push_back(verdict("rule:" + r.name, "torus = 0", tqft::evaluate_closed(r, 1) == 0,
                        "torus evaluates to 1"));
  out.push_back(verdict("rule:" + r.name, "4Tu", tqft::check_4tu(r), "four-tube relation fails"));
  return out;
}

const dg::LinkDiagram& kink() {
  static const dg::LinkDiagram k = dg::parse_pd("X(1,2,2,1)");
  return k;
}

}  // namespace

std::vector<CheckResult> run_axioms(const Corpus& c, const SuiteOptions& o) {
  std::vector<tqft::FrobeniusRule> rules = o.rules;
  for (const auto& r : c.frobenius_rules)
    if (std::none_of(rules.begin(), rules.end(), [&](auto& x) { return x.name == r.name; }))
      rules.push_back(r);
  std::vector<CheckResult> out;
  for (const auto& r : rules) {
    auto part = axioms_for_rule(r);
    out.insert(out.end(), part.begin(), part.end());
  }
  auto per = gather(c.diagrams.size(), o.jobs, [&](std::size_t i) {
    const auto& [name, d] = c.diagrams[i];
    std::vector<CheckResult> res;
    if (static_cast<int>(d.crossing_count()) > o.max_crossings) {
      res.push_back({name, "all", "skipped",
                     std::to_string(d.crossing_count()) + " crossings > " +
                         std::to_string(o.max_crossings)});
      return res;
    }
    for (const auto& r : rules) {
      auto cube = tqft::build_cube(d, r);
      auto rep = chain::verify(*cube->complex);
      res.push_back(verdict(name, "complex valid (" + r.name + ")", rep.ok(), rep.summary()));
      auto cone = tqft::iterated_cone(d, r);
      res.push_back(verdict(name, "iterated cone = cube (" + r.name + ")", cone == *cube->complex,
                            "iterated cone differs from the cube"));
      auto ck = tqft::build_cube(kink(), r);
      auto cu = tqft::build_cube(dg::disjoint_union(d, kink()), r);
      auto t = chain::tensor(*cube->complex, *ck->complex);
      res.push_back(verdict(name, "cube of union = tensor (" + r.name + ")",
                            chain::equal_under(*cu->complex, t,
                                               tqft::union_correspondence(*cube, *ck, *cu)),
                            "cube(D + kink) differs from cube(D) (x) cube(kink)"));
    }
    auto kh = tqft::build_cube(d, tqft::FrobeniusRule::khovanov());
    res.push_back(verdict(name, "khovanov d preserves q", kh->complex->q_preserving(),
                          "an entry changes q"));
    {
      szabo::Decoration t(d.crossing_count(), 0);
      auto dec = szabo::decorated_complex(*kh, t, szabo::HigherRule::khovanov_only());
      auto rep = chain::verify(dec);
      res.push_back(verdict(name, "complex valid (decorated khovanov-only)", rep.ok(), rep.summary()));
    }
    auto e = graded_euler(*kh->complex);
    auto j = dg::kauffman_bracket_jones(d);
    res.push_back(verdict(name, "euler characteristic = jones", e == j,
                          "chi = " + e.to_string() + ", jones = " + j.to_string()));
    return res;
  });
  out.insert(out.end(), per.begin(), per.end());
  return out;
}

std::vector<RInstance> reidemeister_instances(const dg::LinkDiagram& d) {
  std::vector<RInstance> out;
  auto add_with_inverse = [&](const dg::Move& m) {
    dg::MoveResult r;
    try {
      r = dg::apply_move(d, m);
    } catch (const dg::DiagramError&) {
      return;
    }
    out.push_back({d, m});
    if (auto* r1 = std::get_if<dg::R1>(&m)) {
      out.push_back({r.after, dg::R1{r.site_after[0], r1->sign, r1->side, dg::Direction::remove}});
    } else if (std::holds_alternative<dg::R2>(m)) {
      out.push_back({r.after, dg::R2{r.site_after[0], r.site_after[1], dg::Direction::remove, {}, {}}});
    }
  };
  if (d.arc_count() == 0) return out;
  const dg::ArcId first = d.arcs().front();
  add_with_inverse(dg::R1{first, 1, dg::Side::left, dg::Direction::insert});
  add_with_inverse(dg::R1{first, -1, dg::Side::right, dg::Direction::insert});
  if (d.crossing_count() == 0) {
    if (d.arc_count() >= 2) add_with_inverse(dg::R2{d.arcs()[0], d.arcs()[1], dg::Direction::insert, {}, {}});
  } else {
    auto fs = dg::faces(d);
    for (const auto& f : fs.faces) {
      std::set<dg::ArcId> distinct;
      for (auto [a, fwd] : f) distinct.insert(a);
      if (distinct.size() < 2) continue;
      auto it = distinct.begin();
      dg::ArcId p = *it++, q = *it;
      add_with_inverse(dg::R2{p, q, dg::Direction::insert, {}, {}});
      break;
    }
    for (const auto& f : fs.faces) {
      if (f.size() != 3) continue;
      add_with_inverse(dg::R3{{f[0].first, f[1].first, f[2].first}});
    }
  }
  return out;
}

std::vector<CheckResult> run_reidemeister(const Corpus& c, const SuiteOptions& o) {
  struct Job {
    std::string name;
    RInstance inst;
  };
  std::vector<Job> jobs;
  std::vector<CheckResult> out;
  for (const auto& [name, d] : c.diagrams) {
    if (static_cast<int>(d.crossing_count()) > o.max_crossings_small) {
      out.push_back({name, "all", "skipped",
                     std::to_string(d.crossing_count()) + " crossings > " +
                         std::to_string(o.max_crossings_small)});
      continue;
    }
    for (auto& inst : reidemeister_instances(d)) jobs.push_back({name, inst});
  }
  auto per = gather(jobs.size(), o.jobs, [&](std::size_t i) {
    const auto& job = jobs[i];
    const std::string input = job.name + ": " + dg::describe(job.inst.move) + " on " +
                              job.inst.before.to_pd();
    std::vector<CheckResult> res;
    auto mv = dg::apply_move(job.inst.before, job.inst.move);
    for (const auto& r : o.rules) {
      auto a = tqft::build_cube(mv.before, r), b = tqft::build_cube(mv.after, r);
      auto ha = chain::homology(*a->complex), hb = chain::homology(*b->complex);
      bool same = ha.total == hb.total && ha.dims == hb.dims;
      res.push_back(verdict(input, "homology invariant (" + r.name + ")", same,
                            dims_string(ha) + " vs " + dims_string(hb)));
      try {
        movie::reidemeister_map(*a, *b, mv, true);
        res.push_back(verdict(input, "rho' rho ~ id, rho rho' ~ id (" + r.name + ")", true));
      } catch (const movie::ConstructionFailed& e) {
        res.push_back(verdict(input, "rho' rho ~ id, rho rho' ~ id (" + r.name + ")", false, e.what()));
      }
    }
    return res;
  });
  out.insert(out.end(), per.begin(), per.end());
  return out;
}

std::vector<CheckResult> run_moviemoves(const Corpus& c, const SuiteOptions& o) {
  const auto pairs = c.movie_pairs.empty() ? movie::canned_corpus() : c.movie_pairs;
  return gather(pairs.size(), o.jobs, [&](std::size_t i) {
    const auto& p = pairs[i];
    std::vector<CheckResult> res;
    for (const auto& r : o.rules) {
      try {
        auto h = movie::verify_movie_move(p.a, p.b, r);
        res.push_back(verdict(p.name, "homotopic (" + r.name + ")", h.has_value(),
                              "no filtered homotopy exists"));
        auto [fa, fb] = movie::comparable_maps(p.a, p.b, r);
        bool agree = fa.q_degree == fb.q_degree &&
                     chain::homology_rank(chain::add(fa, fb)) == 0;
        res.push_back(verdict(p.name, "agree on homology (" + r.name + ")", agree,
                              "f + g is nonzero on homology"));
      } catch (const movie::FrameMismatch& e) {
        res.push_back(verdict(p.name, "frames match (" + r.name + ")", false, e.what()));
      }
    }
    return res;
  });
}

namespace {

std::vector<szabo::Decoration> decorations(int k) {
  std::vector<szabo::Decoration> out;
  if (k <= 3) {
    for (int m = 0; m < (1 << k); ++m) {
      szabo::Decoration t(k);
      for (int i = 0; i < k; ++i) t[i] = (m >> i) & 1;
      out.push_back(t);
    }
  } else {
    szabo::Decoration z(k, 0), one(k, 1), alt(k);
    for (int i = 0; i < k; ++i) alt[i] = i % 2;
    out = {z, one, alt};
  }
  return out;
}

std::string deco_string(const szabo::Decoration& t) {
  std::string s;
  for (auto b : t) s += b ? '1' : '0';
  return s;
}

}  // namespace

std::vector<CheckResult> run_szabo(const Corpus& c, const SuiteOptions& o) {
  std::vector<NamedDiagram> small;
  std::vector<CheckResult> out;
  for (const auto& nd : c.diagrams) {
    if (static_cast<int>(nd.diagram.crossing_count()) > o.max_crossings_small)
      out.push_back({nd.name, "all", "skipped",
                     std::to_string(nd.diagram.crossing_count()) + " crossings > " +
                         std::to_string(o.max_crossings_small)});
    else
      small.push_back(nd);
  }
  auto per = gather(small.size(), o.jobs, [&](std::size_t i) {
    const auto& [name, d] = small[i];
    std::vector<CheckResult> res;
    const int k = static_cast<int>(d.crossing_count());
    auto cube = tqft::build_cube(d, tqft::FrobeniusRule::khovanov());
    std::vector<szabo::HMaps> H;
    for (int x = 0; x < k; ++x) H.push_back(szabo::h_map(*cube, x));
    bool sq = true, comm = true;
    std::string wsq, wcomm;
    for (int a = 0; a < k; ++a) {
      if (!(H[a].h * H[a].h).is_zero() && sq) {
        sq = false;
        wsq = "H_" + std::to_string(a) + "^2 != 0";
      }
      for (int b = a + 1; b < k; ++b)
        if (!(H[a].h * H[b].h == H[b].h * H[a].h) && comm) {
          comm = false;
          wcomm = "H_" + std::to_string(a) + " H_" + std::to_string(b) + " != H_" +
                  std::to_string(b) + " H_" + std::to_string(a);
        }
    }
    res.push_back(verdict(name, "H_c^2 = 0", sq, wsq));
    res.push_back(verdict(name, "H_a H_b = H_b H_a", comm, wcomm));
    bool same = true, flip = true;
    std::string wsame, wflip;
    const auto id = chain::SparseMap::identity(cube->complex->size());
    for (const auto& t : decorations(k)) {
      if (same && !(szabo::decorated_complex(*cube, t, szabo::HigherRule::khovanov_only()) ==
                    *cube->complex)) {
        same = false;
        wsame = "decoration " + deco_string(t);
      }
      for (int x = 0; x < k && flip; ++x) {
        auto t2 = t;
        t2[x] ^= 1;
        auto there = szabo::change_decoration(*cube, t, t2);
        auto back = szabo::change_decoration(*cube, t2, t);
        if (!(back * there == id)) {
          flip = false;
          wflip = "decoration " + deco_string(t) + ", crossing " + std::to_string(x);
        }
      }
    }
    res.push_back(verdict(name, "decorated khovanov-only = khovanov cube", same, wsame));
    res.push_back(verdict(name, "double decoration flip = id", flip, wflip));
    return res;
  });
  out.insert(out.end(), per.begin(), per.end());

  std::vector<szabo::HigherRule> rules = o.higher_rules;
  if (rules.empty()) {
    rules.push_back(szabo::HigherRule::khovanov_only());
    for (const auto& r : c.higher_rules)
      if (std::none_of(rules.begin(), rules.end(), [&](auto& x) { return x.name == r.name; }))
        rules.push_back(r);
  }
  std::vector<dg::LinkDiagram> corpus;
  for (const auto& nd : small) corpus.push_back(nd.diagram);
  for (const auto& r : rules) {
    auto rep = szabo::verify_rule(r, corpus);
    for (const auto& ch : rep.checks)
      out.push_back({"rule:" + r.name, ch.name, ch.status, ch.witness});
  }
  return out;
}

std::vector<CheckResult> run_suite(const std::string& name, const Corpus& c, const SuiteOptions& o) {
  if (name == "axioms") return run_axioms(c, o);
  if (name == "reidemeister") return run_reidemeister(c, o);
  if (name == "moviemoves") return run_moviemoves(c, o);
  if (name == "szabo") return run_szabo(c, o);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace khcob::suites
