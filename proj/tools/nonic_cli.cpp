// nonic: rank certification for ternary nonics of length 18.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "nonic/io.hpp"

using namespace nonic;

namespace {

struct Globals {
  std::optional<std::uint32_t> prime;
  int threads = 0;
  bool human = false;
  std::string output;
};

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw InputError("cannot write " + g.output);
  out << text << (text.empty() || text.back() != '\n' ? "\n" : "");
}

InputDocument read_doc(const Globals& g, const std::string& path) {
  InputDocument doc = load_input(path);
  if (g.prime) {
    InputDocument probe;
    probe.prime = *g.prime;
    field_of(probe);
    doc.prime = *g.prime;
  }
  return doc;
}

int die(int code, const std::string& msg) {
  std::cerr << "nonic: " << msg << "\n";
  return code;
}

std::optional<Case2Chart> parse_chart(const std::string& s) {
  Case2Chart c;
  char comma = 0;
  std::istringstream in(s);
  if (!(in >> c.quintic >> comma >> c.gauge) || comma != ',') return std::nullopt;
  return c;
}

int cmd_certify(const Globals& g, const std::string& path, bool skip5, const std::string& chart, bool timings) {
  InputDocument doc = read_doc(g, path);
  const PrimeField F = field_of(doc);
  if (doc.points.size() != 18)
    throw InputError("certify expects 18 points, got " + std::to_string(doc.points.size()));
  const Decomposition dec = decomposition_of(F, doc);
  const std::vector<Fp> t = contracted_of(F, doc);

  if (!chart.empty()) {
    auto c = parse_chart(chart);
    if (!c) throw InputError("--chart expects i,j");
    LiaisonBase base = make_liaison_base(F, dec.points);
    ChartResult r = test4_chart(F, base, t, *c);
    json j{{"prime", F.modulus()}, {"chart", {r.chart.quintic, r.chart.gauge}}, {"dimension", r.dimension}};
    j["degree"] = r.degree ? json(*r.degree) : json(nullptr);
    j["sample"] = r.sample ? json(balanced(F, *r.sample)) : json(nullptr);
    emit(g, j.dump(2));
    return kExitCertified;
  }

  CertifyOptions opts;
  opts.run_test5 = !skip5;
  const auto start = std::chrono::steady_clock::now();
  CertReport rep = doc.lambdas ? certify_rank18(F, dec, opts) : certify_vector(F, dec.points, t, opts);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (g.human) {
    std::string text = report_to_text(F, rep);
    if (timings) text += "elapsed        " + std::to_string(secs) + " s\n";
    emit(g, text);
  } else {
    json j = report_to_json(F, rep);
    if (timings) j["timings"] = json{{"total_seconds", secs}};
    emit(g, j.dump(2));
  }
  return exit_code(rep.verdict);
}

int cmd_inspect(const Globals& g, const std::string& path) {
  InputDocument doc = read_doc(g, path);
  if (doc.points.empty()) throw InputError("points: empty");
  const PrimeField F = field_of(doc);
  json j = inspect_points(F, points_of(F, doc));
  if (!g.human) {
    emit(g, j.dump(2));
    return kExitCertified;
  }
  std::ostringstream os;
  os << "h   " << j["h"].dump() << "\nDh  " << j["dh"].dump() << "\nk4  " << j["k4"]["value"] << " ("
     << j["k4"]["rank_checks"] << " rank checks)\n"
     << "dim (I_A)_5,6,9  " << j["ideal_dims"]["5"] << " " << j["ideal_dims"]["6"] << " " << j["ideal_dims"]["9"]
     << "\nHilbert-Burch   " << j["hilbert_burch"].dump() << "\ngenericity      " << j["genericity"].dump()
     << "\n";
  emit(g, os.str());
  return kExitCertified;
}

// Bounded retries over seeds; explicit parameters get a single attempt.
template <class Build>
int make_case(const Globals& g, const std::string& path, std::optional<std::uint64_t> seed, Build&& build) {
  InputDocument doc = read_doc(g, path);
  const PrimeField F = field_of(doc);
  const PointSet A = points_of(F, doc);
  if (A.size() != 18) throw InputError("expected 18 points, got " + std::to_string(A.size()));
  const GenericityResult gen = test_genericity(F, Decomposition{A, std::nullopt});
  if (!gen.all()) {
    std::string why = "points fail genericity";
    for (const auto& r : gen.reasons) why += "; " + r;
    return die(kExitInapplicable, why);
  }
  const LiaisonBase base = make_liaison_base(F, A);
  const int tries = seed ? 20 : 1;
  for (int k = 0; k < tries; ++k) {
    std::optional<json> out;
    std::string why;
    try {
      out = build(F, doc, base, seed ? std::optional<std::uint64_t>(*seed + k) : std::nullopt);
    } catch (const DegenerateError& e) {
      why = e.what();
    } catch (const std::domain_error& e) {
      why = e.what();
    }
    if (out) {
      emit(g, out->dump(2));
      return kExitCertified;
    }
    std::cerr << "nonic: attempt " << k + 1 << " degenerate: " << (why.empty() ? "zero coefficient" : why) << "\n";
  }
  return die(kExitRetries, "retry bound exceeded");
}

std::optional<std::vector<Fp>> nonzero_lambdas(const PrimeField& F, const std::vector<Fp>& t, const PointSet& A) {
  auto lam = waring_from_contracted(F, t, A);
  if (!lam) return std::nullopt;
  for (Fp x : *lam)
    if (x.is_zero()) return std::nullopt;
  return lam;
}

int cmd_make_case1(const Globals& g, const std::string& path, std::optional<std::uint64_t> seed) {
  return make_case(g, path, seed,
                   [](const PrimeField& F, const InputDocument& doc, const LiaisonBase& base,
                      std::optional<std::uint64_t> s) -> std::optional<json> {
                     Case1Params w;
                     if (s) {
                       w = random_pencil(F, *s);
                     } else if (auto p = pencil_of(F, doc)) {
                       w = *p;
                     } else {
                       throw InputError("make-case1 needs a pencil in the input or --seed");
                     }
                     auto lam = nonzero_lambdas(F, map_f(F, base, w), base.A);
                     if (!lam) return std::nullopt;
                     return case1_document(F, base.A, w, *lam);
                   });
}

int cmd_make_case2(const Globals& g, const std::string& path, std::optional<std::uint64_t> seed, int chart) {
  return make_case(g, path, seed,
                   [chart](const PrimeField& F, const InputDocument& doc, const LiaisonBase& base,
                           std::optional<std::uint64_t> s) -> std::optional<json> {
                     Case2Params th;
                     int i = chart;
                     if (s) {
                       th = case2_gauge(F, random_case2(F, *s), i - 1);
                     } else if (auto p = case2_of(F, doc)) {
                       i = doc.case2_chart;
                       th = *p;
                     } else {
                       throw InputError("make-case2 needs case2_parameters in the input or --seed");
                     }
                     auto lam = nonzero_lambdas(F, map_fprime(F, base, th), base.A);
                     if (!lam) return std::nullopt;
                     return case2_document(F, base.A, th, i, *lam);
                   });
}

int cmd_random_general(const Globals& g, std::uint64_t seed, int tries) {
  InputDocument probe;
  if (g.prime) probe.prime = *g.prime;
  const PrimeField F = field_of(probe);
  auto A = random_general(F, seed, tries);
  if (!A) return die(kExitRetries, "retry bound exceeded while sampling general points");
  InputDocument doc;
  doc.prime = F.modulus();
  for (const auto& p : *A) doc.points.push_back({F.balanced(p[0]), F.balanced(p[1]), F.balanced(p[2])});
  emit(g, to_json(doc).dump(2));
  return kExitCertified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Waring rank certification for ternary forms of degree 9 and length 18"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::int64_t prime_flag = 0;
  app.add_option("--prime", prime_flag, "prime modulus (overrides the document)");
  app.add_option("--threads", g.threads, "worker threads for chart scans and Kruskal subsets");
  app.add_flag("--human", g.human, "plain text instead of JSON");
  app.add_flag_callback("--json", [&g] { g.human = false; }, "JSON output (default)");
  app.add_option("-o,--output", g.output, "write to a file instead of stdout");

  std::string path, chart;
  bool skip5 = false, timings = false;
  std::uint64_t seed = 0;
  int case2_chart = 1, tries = 100;

  auto* certify = app.add_subcommand("certify", "run tests 1-5 and emit a report");
  certify->add_option("input", path, "input document")->required();
  certify->add_flag("--skip-test5", skip5, "stop after the rank certificate");
  certify->add_option("--chart", chart, "analyse one test-4 chart i,j only");
  certify->add_flag("--timings", timings, "add wall-clock timings to the report");

  auto* inspect = app.add_subcommand("inspect", "Hilbert function, Kruskal rank and genericity of the points");
  inspect->add_option("input", path, "input document")->required();

  auto* mk1 = app.add_subcommand("make-case1", "form with two disjoint decompositions of length 18");
  mk1->add_option("input", path, "input document")->required();
  auto* seed1 = mk1->add_option("--seed", seed, "random pencil seed");

  auto* mk2 = app.add_subcommand("make-case2", "form of rank at most 17 in the span of the points");
  mk2->add_option("input", path, "input document")->required();
  auto* seed2 = mk2->add_option("--seed", seed, "random parameter seed");
  mk2->add_option("--case2-chart", case2_chart, "quintic index fixed to 1 for seeded parameters")
      ->check(CLI::Range(1, 3));

  auto* rnd = app.add_subcommand("random-general", "sample 18 points passing the genericity tests");
  rnd->add_option("--seed", seed, "sampling seed")->required();
  rnd->add_option("--max-tries", tries, "rejection bound")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitMalformed;
  }
  if (prime_flag != 0) {
    if (prime_flag < 0 || prime_flag >= (std::int64_t{1} << 31)) return die(kExitMalformed, "prime out of range");
    g.prime = static_cast<std::uint32_t>(prime_flag);
  }
  if (g.threads > 0) omp_set_num_threads(g.threads);

  try {
    if (certify->parsed()) return cmd_certify(g, path, skip5, chart, timings);
    if (inspect->parsed()) return cmd_inspect(g, path);
    if (mk1->parsed()) return cmd_make_case1(g, path, seed1->count() ? std::optional(seed) : std::nullopt);
    if (mk2->parsed())
      return cmd_make_case2(g, path, seed2->count() ? std::optional(seed) : std::nullopt, case2_chart);
    if (rnd->parsed()) return cmd_random_general(g, seed, tries);
  } catch (const InputError& e) {
    return die(kExitMalformed, e.what());
  } catch (const GenericityError& e) {
    return die(kExitInapplicable, e.what());
  } catch (const std::invalid_argument& e) {
    return die(kExitInapplicable, e.what());
  }
  return kExitMalformed;
}
