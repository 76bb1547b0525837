// khcob command-line tool. Exit codes: 0 ok, 1 check failed or not
// homotopic, 2 parse/usage error, 3 generator cap exceeded, 4 frame
// mismatch, 5 I/O error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "khcob/io.hpp"
#include "khcob/movie.hpp"
#include "khcob/suites.hpp"
#include "khcob/szabo.hpp"
#include "khcob/tqft.hpp"
#include "khcob/version.hpp"

namespace {

using namespace khcob;
using nlohmann::json;

enum Exit { kOk = 0, kCheckFailed = 1, kParse = 2, kCap = 3, kFrame = 4, kIo = 5 };

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

struct Report {
  json j;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Report(const std::vector<std::string>& argv) {
    j["tool"] = "khcob";
    j["version"] = KHCOB_VERSION;
    j["command"] = argv;
    j["inputs"] = json::array();
  }
  std::string input(const std::string& path) {
    auto text = suites::read_file(path);
    j["inputs"].push_back({{"path", path}, {"fnv1a64", fnv1a(text)}});
    return text;
  }
  void emit(bool as_json, bool timing) {
    if (timing) {
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      j["timing_ms"] = ms;
      if (!as_json) std::cout << "time: " << std::fixed << std::setprecision(1) << ms << " ms\n";
    }
    if (as_json) std::cout << j.dump(2) << "\n";
  }
};

std::string poincare(const chain::BigradedDims& dims) {
  std::ostringstream os;
  bool first = true;
  for (auto [hq, n] : dims) {
    if (!n) continue;
    if (!first) os << " + ";
    first = false;
    if (n != 1) os << n << " ";
    os << "t^" << hq.first << " q^" << hq.second;
  }
  return first ? "0" : os.str();
}

json poly_json(const diagram::LaurentPoly& p) {
  json t = json::array();
  for (auto [e, c] : p.terms())
    if (c) t.push_back({e, c});
  return t;
}

void print_dims_table(const chain::BigradedDims& dims, const char* qname) {
  std::cout << "  h     " << qname << "     dim\n";
  for (auto [hq, n] : dims)
    if (n) std::cout << "  " << std::setw(4) << hq.first << "  " << std::setw(4) << hq.second << "  " << std::setw(6) << n << "\n";
}

// A PD file, or a complex in the JSON interchange format (*.json).
struct Input {
  bool is_complex = false;
  diagram::LinkDiagram d;
  chain::FilteredComplex c;
};

Input load_input(Report& rep, const std::string& path) {
  auto text = rep.input(path);
  Input in;
  if (path.size() > 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw io::FormatError(path + ": " + e.what());
    }
    in.is_complex = true;
    in.c = io::complex_from_json(j);
    auto v = chain::verify(in.c);
    if (!v.ok()) throw io::FormatError(path + ": invalid complex: " + v.summary());
  } else {
    in.d = diagram::parse_pd(text);
  }
  return in;
}

json diagram_json(const diagram::LinkDiagram& d) {
  return {{"pd", d.to_pd()}, {"crossings", d.crossing_count()}, {"components", d.components()},
          {"n_plus", d.n_plus()}, {"n_minus", d.n_minus()}};
}

int cmd_homology(Report& rep, const std::string& file, const std::string& rule_spec, bool as_json) {
  auto in = load_input(rep, file);
  chain::FilteredComplex c;
  if (in.is_complex) {
    c = in.c;
    rep.j["rule"] = "complex-file";
  } else {
    auto rule = suites::frobenius_rule(rule_spec);
    rep.j["rule"] = rule.name;
    rep.j["diagram"] = diagram_json(in.d);
    c = tqft::cube_complex(in.d, rule);
  }
  auto h = chain::homology(c);
  json res = io::to_json(h);
  auto chi = suites::graded_euler(c);
  res["euler_characteristic"] = poly_json(chi);
  if (h.graded) res["poincare"] = poincare(h.dims);
  rep.j["result"] = res;
  if (!as_json) {
    std::cout << "rule: " << rep.j["rule"].get<std::string>() << "\n";
    if (!in.is_complex)
      std::cout << "diagram: " << in.d.crossing_count() << " crossings, n+ = " << in.d.n_plus()
                << ", n- = " << in.d.n_minus() << "\n";
    std::cout << "generators: " << c.size() << "\n";
    print_dims_table(h.dims, h.graded ? "q" : "filt");
    if (h.graded) std::cout << "poincare: " << poincare(h.dims) << "\n";
    std::cout << "total: " << h.total << "\n";
    std::cout << "euler characteristic: " << chi.to_string() << "\n";
  }
  return kOk;
}

int cmd_jones(Report& rep, const std::string& file, bool as_json) {
  auto d = diagram::parse_pd(rep.input(file));
  auto j = diagram::kauffman_bracket_jones(d);
  rep.j["diagram"] = diagram_json(d);
  rep.j["result"] = {{"jones", j.to_string()}, {"terms", poly_json(j)}};
  if (!as_json) std::cout << "jones (unnormalized): " << j.to_string() << "\n";
  return kOk;
}

int cmd_pages(Report& rep, const std::string& file, const std::string& rule_spec, int max_page,
              bool as_json) {
  auto in = load_input(rep, file);
  chain::FilteredComplex c;
  if (in.is_complex) {
    c = in.c;
    rep.j["rule"] = "complex-file";
  } else {
    auto rule = suites::frobenius_rule(rule_spec);
    rep.j["rule"] = rule.name;
    rep.j["diagram"] = diagram_json(in.d);
    c = tqft::cube_complex(in.d, rule);
  }
  auto sp = chain::spectral_pages(c, max_page);
  rep.j["result"] = io::to_json(sp);
  if (!as_json) {
    std::cout << "rule: " << rep.j["rule"].get<std::string>() << "\n";
    for (const auto& p : sp.pages)
      std::cout << std::left << std::setw(16) << p.name << std::right << " total " << std::setw(6)
                << p.total << "  d rank " << p.d_rank << "\n";
    std::cout << std::left << std::setw(16) << "stable page" << std::right << " total "
              << std::setw(6) << sp.stable.total << "  (reached at page " << sp.stabilized_at << ")\n";
    for (const auto& p : sp.pages)
      if (p.index == 1) {
        std::cout << "Khovanov page:\n";
        print_dims_table(p.dims, "q");
      }
    std::cout << "stable page:\n";
    print_dims_table(sp.stable.dims, "q");
  }
  return kOk;
}

json homology_totals(const chain::ComplexPtr& c) {
  auto h = chain::homology(*c);
  return {{"total", h.total}, {"dims", io::dims_to_json(h.dims)}};
}

int cmd_movie(Report& rep, const std::string& file, const std::string& rule_spec,
              const std::string& vs, bool as_json) {
  auto rule = suites::frobenius_rule(rule_spec);
  rep.j["rule"] = rule.name;
  auto a = movie::parse_movie(rep.input(file), file);
  auto fa = movie::induced_map(a, rule);
  json res;
  res["frames"] = a.frames.size();
  res["initial"] = a.initial.to_pd();
  res["final"] = a.final_frame().to_pd();
  res["map"] = {{"h_degree", fa.h_degree}, {"q_degree", fa.q_degree},
                {"rank_on_homology", chain::homology_rank(fa)},
                {"source_homology", homology_totals(fa.source)},
                {"target_homology", homology_totals(fa.target)}};
  if (!as_json) {
    std::cout << "rule: " << rule.name << "\n"
              << "movie: " << a.moves.size() << " moves, " << a.initial.to_pd() << " -> "
              << a.final_frame().to_pd() << "\n"
              << "induced map: q-degree " << fa.q_degree << ", rank on homology "
              << res["map"]["rank_on_homology"].get<long long>() << "\n";
  }
  int code = kOk;
  if (!vs.empty()) {
    auto b = movie::parse_movie(rep.input(vs), vs);
    auto fb = movie::induced_map(b, rule);
    json cmp;
    cmp["other_rank_on_homology"] = chain::homology_rank(fb);
    try {
      auto h = movie::verify_movie_move(a, b, rule);
      cmp["homotopic"] = h.has_value();
      if (h) cmp["witness_nonzeros"] = h->nnz();
      else cmp["reason"] = "no filtered homotopy exists";
      code = h ? kOk : kCheckFailed;
    } catch (const movie::FrameMismatch& e) {
      cmp["homotopic"] = false;
      cmp["reason"] = e.what();
      code = kFrame;
    }
    res["comparison"] = cmp;
    if (!as_json) {
      std::cout << "other movie: rank on homology " << cmp["other_rank_on_homology"].get<long long>()
                << "\n";
      std::cout << "homotopic: " << (cmp["homotopic"].get<bool>() ? "yes" : "no");
      if (cmp.contains("reason")) std::cout << " (" << cmp["reason"].get<std::string>() << ")";
      if (cmp.contains("witness_nonzeros"))
        std::cout << " (witness with " << cmp["witness_nonzeros"].get<std::size_t>() << " nonzero entries)";
      std::cout << "\n";
    }
  }
  rep.j["result"] = res;
  return code;
}

int cmd_complex(Report& rep, const std::string& file, const std::string& rule_spec,
                const std::string& szabo_spec, const std::string& decoration) {
  auto rule = suites::frobenius_rule(rule_spec);
  auto d = diagram::parse_pd(rep.input(file));
  chain::FilteredComplex c;
  if (szabo_spec.empty()) {
    c = tqft::cube_complex(d, rule);
  } else {
    auto hr = suites::higher_rule(szabo_spec);
    szabo::Decoration t(d.crossing_count(), 0);
    if (!decoration.empty()) {
      if (decoration.size() != t.size() || decoration.find_first_not_of("01") != std::string::npos)
        throw io::FormatError("decoration must be " + std::to_string(t.size()) + " bits of 0/1");
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = decoration[i] == '1';
    }
    c = szabo::decorated_complex(d, t, hr);
  }
  std::cout << io::to_json(c).dump(2) << "\n";
  return kOk;
}

int cmd_verify(Report& rep, const std::string& suite, const std::string& corpus_dir,
               const std::string& rule_spec, int jobs, bool as_json) {
  auto corpus = suites::load_corpus(corpus_dir);
  for (const auto& f : corpus.files) rep.input(f);
  suites::SuiteOptions o;
  o.jobs = jobs;
  if (!rule_spec.empty()) {
    if (suite == "szabo") o.higher_rules = {suites::higher_rule(rule_spec)};
    else o.rules = {suites::frobenius_rule(rule_spec)};
  }
  auto results = suites::run_suite(suite, corpus, o);
  bool ok = suites::all_pass(results);
  json arr = json::array();
  std::size_t pass = 0, fail = 0, other = 0;
  for (const auto& r : results) {
    json x = {{"input", r.input}, {"check", r.check}, {"status", r.status}};
    if (!r.witness.empty()) x["witness"] = r.witness;
    arr.push_back(x);
    (r.status == "pass" ? pass : r.status == "fail" ? fail : other)++;
  }
  rep.j["suite"] = suite;
  rep.j["corpus"] = corpus_dir;
  rep.j["result"] = {{"checks", arr}, {"passed", pass}, {"failed", fail}, {"other", other}, {"ok", ok}};
  if (!as_json) {
    for (const auto& r : results) {
      std::cout << std::left << std::setw(12) << r.status << std::setw(0) << r.input << " :: " << r.check;
      if (!r.witness.empty()) std::cout << "  [" << r.witness << "]";
      std::cout << "\n";
    }
    std::cout << suite << ": " << pass << " passed, " << fail << " failed, " << other
              << " untestable/skipped\n";
  }
  return ok ? kOk : kCheckFailed;
}

std::string default_corpus() {
  if (const char* s = std::getenv("KHCOB_CORPUS")) return s;
  return KHCOB_DEFAULT_CORPUS;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"khcob: Khovanov-type homology over F2, cobordism maps and verification suites"};
  app.set_version_flag("--version", std::string(KHCOB_VERSION));
  app.require_subcommand(1);

  bool as_json = false, timing = false;
  std::string rule = "kh", cap;
  app.add_flag("--json", as_json, "JSON report on standard output");
  app.add_flag("--timing", timing, "include elapsed time in the report");
  app.add_option("--cap", cap, "generator cap (default 2^26, or $KHCOB_GENERATOR_CAP)");

  std::string file, vs, corpus = default_corpus(), suite, szabo_rule, decoration;
  int max_page = 16, jobs = 1;

  auto* hom = app.add_subcommand("homology", "homology of a PD diagram or a complex (.json)");
  hom->add_option("file", file, "PD file or complex JSON")->required();
  hom->add_option("--rule", rule, "kh, bn or a Frobenius rule JSON file");

  auto* jon = app.add_subcommand("jones", "Kauffman-bracket Jones polynomial");
  jon->add_option("file", file, "PD file")->required();

  auto* pag = app.add_subcommand("pages", "spectral-sequence pages of the quantum filtration");
  pag->add_option("file", file, "PD file or complex JSON")->required();
  pag->add_option("--rule", rule, "kh, bn or a Frobenius rule JSON file");
  pag->add_option("--max-page", max_page, "last page index to compute")->check(CLI::PositiveNumber);

  auto* mov = app.add_subcommand("movie", "map induced by a movie; compare two movies");
  mov->add_option("file", file, "movie file")->required();
  mov->add_option("--rule", rule, "kh, bn or a Frobenius rule JSON file");
  mov->add_option("--homotopy-vs", vs, "second movie to compare against");

  auto* cpx = app.add_subcommand("complex", "write the cube complex as JSON");
  cpx->add_option("file", file, "PD file")->required();
  cpx->add_option("--rule", rule, "kh, bn or a Frobenius rule JSON file");
  cpx->add_option("--szabo", szabo_rule, "decorated complex with this rule table (or khovanov-only)");
  cpx->add_option("--decoration", decoration, "one bit per crossing, default all 0");

  auto* ver = app.add_subcommand("verify", "run a verification suite over a corpus directory");
  ver->add_option("--suite", suite, "axioms, reidemeister, moviemoves or szabo")
      ->required()
      ->check(CLI::IsMember({"axioms", "reidemeister", "moviemoves", "szabo"}));
  ver->add_option("--corpus", corpus, "corpus directory");
  ver->add_option("--rule", szabo_rule, "restrict to one rule (a Szabo table for --suite szabo)");
  ver->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kParse;
  }
  if (!cap.empty()) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(cap.c_str(), &end, 10);
    if (end == cap.c_str() || *end || v == 0) {
      std::cerr << "error: --cap must be a positive integer\n";
      return kParse;
    }
    setenv("KHCOB_GENERATOR_CAP", cap.c_str(), 1);
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  Report rep(args);
  int code = kOk;
  try {
    if (*hom) code = cmd_homology(rep, file, rule, as_json);
    else if (*jon) code = cmd_jones(rep, file, as_json);
    else if (*pag) code = cmd_pages(rep, file, rule, max_page, as_json);
    else if (*mov) code = cmd_movie(rep, file, rule, vs, as_json);
    else if (*cpx) return cmd_complex(rep, file, rule, szabo_rule, decoration);
    else if (*ver) code = cmd_verify(rep, suite, corpus, szabo_rule, jobs, as_json);
  } catch (const suites::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const tqft::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const movie::FrameMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFrame;
  } catch (const szabo::RuleInconsistent& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const movie::ConstructionFailed& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const diagram::DiagramError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const movie::MovieError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const tqft::RuleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const io::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  rep.emit(as_json, timing);
  return code;
}
