#include "nonic/io.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace nonic {

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::RankCertified18: return kExitCertified;
    case Verdict::LowerRankWitness: return kExitLowerRank;
    case Verdict::CriterionInapplicable: return kExitInapplicable;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

namespace {

std::int64_t get_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw InputError(what + ": expected an integer");
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> get_int_list(const json& v, const std::string& what, std::size_t n) {
  if (!v.is_array()) throw InputError(what + ": expected an array");
  if (v.size() != n)
    throw InputError(what + ": expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_int(v[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

json form_json(const PrimeField& F, const HomForm& f) {
  return json{{"degree", f.degree()}, {"coefficients", balanced(F, f.coeffs())}};
}

HomForm form_from_json(const PrimeField& F, const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("coefficients"))
    throw InputError("generator: expected {degree, coefficients}");
  const int d = static_cast<int>(get_int(j["degree"], "generator degree"));
  if (d < 0 || d > 30) throw InputError("generator degree out of range");
  return HomForm(d, residues(F, get_int_list(j["coefficients"], "generator coefficients", num_monomials(d))));
}

json pencil_json(const PrimeField& F, const Case1Params& w) {
  json rows = json::array();
  for (const auto& row : w.W) rows.push_back(balanced(F, std::vector<Fp>(row.begin(), row.end())));
  return rows;
}

json genericity_json(const GenericityResult& g) {
  return json{{"test1", g.test1}, {"test2", g.test2},     {"test3", g.test3},
              {"rank_nu9", g.rank_nu9}, {"k4", g.k4}, {"k4_rank_checks", g.k4_rank_checks},
              {"h5", g.h5},       {"reasons", g.reasons}};
}

json optional_vector(const PrimeField& F, const std::optional<std::vector<Fp>>& v) {
  return v ? json(balanced(F, *v)) : json(nullptr);
}

const char* kDisclaimer =
    "verdicts are certificates modulo the stated prime; conclusions over the rationals hold for "
    "integer inputs whenever the reduction is generic";

}  // namespace

std::optional<Case1Params> pencil_of(const PrimeField& F, const InputDocument& doc) {
  if (!doc.pencil) return std::nullopt;
  Case1Params w;
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < 10; ++k) w.W[r][k] = F.from_int((*doc.pencil)[r][k]);
  return w;
}

std::optional<Case2Params> case2_of(const PrimeField& F, const InputDocument& doc) {
  if (!doc.case2_parameters) return std::nullopt;
  return case2_from_vector(residues(F, *doc.case2_parameters), doc.case2_chart - 1);
}

std::vector<std::int64_t> balanced(const PrimeField& F, const std::vector<Fp>& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (Fp x : v) out.push_back(F.balanced(x));
  return out;
}

std::vector<Fp> residues(const PrimeField& F, const std::vector<std::int64_t>& v) {
  std::vector<Fp> out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(F.from_int(x));
  return out;
}

InputDocument parse_input(const json& j) {
  if (!j.is_object()) throw InputError("input document must be a JSON object");
  InputDocument doc;
  if (j.contains("prime")) {
    const std::int64_t p = get_int(j["prime"], "prime");
    if (p <= 2 || p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p)))
      throw InputError("prime: " + std::to_string(p) + " is not a prime in (2, 2^31)");
    doc.prime = static_cast<std::uint32_t>(p);
  }
  if (!j.contains("points")) throw InputError("points: missing");
  const json& pts = j["points"];
  if (!pts.is_array()) throw InputError("points: expected an array");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto row = get_int_list(pts[i], "points[" + std::to_string(i) + "]", 3);
    doc.points.push_back({row[0], row[1], row[2]});
  }
  if (j.contains("lambdas")) doc.lambdas = get_int_list(j["lambdas"], "lambdas", doc.points.size());
  if (j.contains("coefficients")) doc.coefficients = get_int_list(j["coefficients"], "coefficients", 55);
  if (doc.lambdas && doc.coefficients) throw InputError("give either lambdas or coefficients, not both");
  if (j.contains("pencil")) {
    const json& p = j["pencil"];
    if (!p.is_array() || p.size() != 2) throw InputError("pencil: expected two rows");
    std::array<std::array<std::int64_t, 10>, 2> w{};
    for (int r = 0; r < 2; ++r) {
      auto row = get_int_list(p[r], "pencil[" + std::to_string(r) + "]", 10);
      std::copy(row.begin(), row.end(), w[r].begin());
    }
    doc.pencil = w;
  }
  if (j.contains("case2_parameters")) doc.case2_parameters = get_int_list(j["case2_parameters"], "case2_parameters", 15);
  if (j.contains("case2_chart")) {
    doc.case2_chart = static_cast<int>(get_int(j["case2_chart"], "case2_chart"));
    if (doc.case2_chart < 1 || doc.case2_chart > 3) throw InputError("case2_chart: expected 1, 2 or 3");
  }
  return doc;
}

InputDocument load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
  return parse_input(j);
}

json to_json(const InputDocument& doc) {
  json j;
  j["prime"] = doc.prime;
  json pts = json::array();
  for (const auto& p : doc.points) pts.push_back(p);
  j["points"] = pts;
  if (doc.lambdas) j["lambdas"] = *doc.lambdas;
  if (doc.coefficients) j["coefficients"] = *doc.coefficients;
  if (doc.pencil) j["pencil"] = *doc.pencil;
  if (doc.case2_parameters) {
    j["case2_parameters"] = *doc.case2_parameters;
    j["case2_chart"] = doc.case2_chart;
  }
  return j;
}

PrimeField field_of(const InputDocument& doc) {
  try {
    return PrimeField(doc.prime);
  } catch (const FieldError& e) {
    throw InputError(e.what());
  }
}

PointSet points_of(const PrimeField& F, const InputDocument& doc) {
  std::vector<ProjPoint> pts;
  try {
    for (const auto& p : doc.points) pts.emplace_back(F.from_int(p[0]), F.from_int(p[1]), F.from_int(p[2]));
    return PointSet(F, std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("points: ") + e.what());
  }
}

Decomposition decomposition_of(const PrimeField& F, const InputDocument& doc) {
  Decomposition dec{points_of(F, doc), std::nullopt};
  if (doc.lambdas) dec.lambdas = residues(F, *doc.lambdas);
  return dec;
}

std::vector<Fp> contracted_of(const PrimeField& F, const InputDocument& doc) {
  if (doc.coefficients) return residues(F, *doc.coefficients);
  if (doc.lambdas) return contracted_from_waring(F, decomposition_of(F, doc), 9);
  throw InputError("no form given: need lambdas or coefficients");
}

json report_to_json(const PrimeField& F, const CertReport& rep) {
  json j;
  j["prime"] = rep.prime;
  j["verdict"] = to_string(rep.verdict);
  j["exit_code"] = exit_code(rep.verdict);
  j["reason"] = rep.reason;
  j["genericity"] = rep.genericity ? genericity_json(*rep.genericity) : json(nullptr);
  if (rep.test4) {
    json charts = json::array();
    for (const auto& c : rep.test4->charts) {
      json e{{"chart", {c.chart.quintic, c.chart.gauge}}, {"dimension", c.dimension}};
      e["degree"] = c.degree ? json(*c.degree) : json(nullptr);
      e["sample"] = optional_vector(F, c.sample);
      charts.push_back(e);
    }
    j["test4"] = json{{"aggregate", rep.test4->aggregate}, {"charts", charts}};
  } else {
    j["test4"] = nullptr;
  }
  if (rep.test5) {
    json charts = json::array();
    for (const auto& c : rep.test5->charts) {
      json e{{"chart", {c.chart.k, c.chart.l}}, {"dimension", c.dimension}};
      e["degree"] = c.degree ? json(*c.degree) : json(nullptr);
      e["sample"] = c.sample ? pencil_json(F, *c.sample) : json(nullptr);
      charts.push_back(e);
    }
    j["test5"] = json{{"max_dimension", rep.test5->max_dimension},
                      {"degree", rep.test5->degree ? json(*rep.test5->degree) : json(nullptr)},
                      {"charts", charts},
                      {"caveat", rep.test5->caveat}};
  } else {
    j["test5"] = nullptr;
  }
  if (rep.lower_rank_witness) {
    const auto& w = *rep.lower_rank_witness;
    json gens = json::array();
    for (const auto& g : w.residual_generators) gens.push_back(form_json(F, g));
    j["witness"] = json{{"kind", "case2"},
                        {"chart", {w.chart.quintic, w.chart.gauge}},
                        {"dimension", w.dimension},
                        {"parameters", balanced(F, w.parameters)},
                        {"resubstitution_ok", w.resubstitution_ok},
                        {"residual_verified", w.residual_verified},
                        {"residual_generators", gens}};
  } else {
    j["witness"] = nullptr;
  }
  if (rep.second_decomposition) {
    const auto& w = *rep.second_decomposition;
    json gens = json::array();
    for (const auto& g : w.residual_generators) gens.push_back(form_json(F, g));
    j["second_decomposition"] = json{{"kind", "case1"},
                                     {"chart", {w.chart.k, w.chart.l}},
                                     {"pencil", pencil_json(F, w.pencil)},
                                     {"residual_verified", w.residual_verified},
                                     {"residual_generators", gens}};
  } else {
    j["second_decomposition"] = nullptr;
  }
  if (!rep.test5)
    j["uniqueness"] = "not examined";
  else if (rep.not_unique())
    j["uniqueness"] = "not unique: verified second decomposition of length 18";
  else
    j["uniqueness"] = "no second decomposition found in the scanned charts";
  j["disclaimer"] = kDisclaimer;
  return j;
}

std::string report_to_text(const PrimeField& F, const CertReport& rep) {
  std::ostringstream os;
  os << "prime          " << rep.prime << "\n";
  os << "verdict        " << to_string(rep.verdict) << " (exit " << exit_code(rep.verdict) << ")\n";
  os << "reason         " << rep.reason << "\n";
  if (rep.genericity) {
    const auto& g = *rep.genericity;
    os << "genericity     test1 " << (g.test1 ? "pass" : "FAIL") << " (rank " << g.rank_nu9 << "), test2 "
       << (g.test2 ? "pass" : "FAIL") << " (k4 " << g.k4 << ", " << g.k4_rank_checks << " checks), test3 "
       << (g.test3 ? "pass" : "FAIL") << " (h5 " << g.h5 << ")\n";
    for (const auto& r : g.reasons) os << "  - " << r << "\n";
  }
  if (rep.test4) {
    os << "test 4         aggregate dimension " << rep.test4->aggregate << " over " << rep.test4->charts.size()
       << " charts\n";
    for (const auto& c : rep.test4->charts)
      if (c.dimension >= 0) {
        os << "  chart (" << c.chart.quintic << "," << c.chart.gauge << ") dimension " << c.dimension;
        if (c.degree) os << " degree " << *c.degree;
        os << (c.sample ? " sample found" : "") << "\n";
      }
  }
  if (rep.test5) {
    os << "test 5         max dimension " << rep.test5->max_dimension << "\n";
    for (const auto& c : rep.test5->charts) {
      os << "  chart (" << c.chart.k << "," << c.chart.l << ") dimension " << c.dimension;
      if (c.degree) os << " degree " << *c.degree;
      os << "\n";
    }
    os << "  caveat: " << rep.test5->caveat << "\n";
  }
  if (rep.lower_rank_witness) {
    const auto& w = *rep.lower_rank_witness;
    os << "witness        chart (" << w.chart.quintic << "," << w.chart.gauge << ") verified "
       << (w.resubstitution_ok && w.residual_verified ? "yes" : "no") << "\n  parameters";
    for (auto x : balanced(F, w.parameters)) os << " " << x;
    os << "\n";
  }
  if (rep.second_decomposition) {
    const auto& w = *rep.second_decomposition;
    os << "second decomp  chart (" << w.chart.k << "," << w.chart.l << ") verified "
       << (w.residual_verified ? "yes" : "no") << "\n";
    for (const auto& row : w.pencil.W) {
      os << "  row";
      for (Fp x : row) os << " " << F.balanced(x);
      os << "\n";
    }
  }
  os << "note           " << kDisclaimer << "\n";
  return os.str();
}

bool verify_case2_witness(const PrimeField& F, const LiaisonBase& base, const std::vector<Fp>& t,
                          const json& witness) {
  if (!witness.is_object() || witness.value("kind", "") != "case2") return false;
  const auto chart = witness.at("chart");
  const int quintic = static_cast<int>(get_int(chart.at(0), "chart"));
  if (quintic < 1 || quintic > 3) return false;
  const auto params = residues(F, get_int_list(witness.at("parameters"), "parameters", 15));
  std::vector<HomForm> gens;
  for (const auto& g : witness.at("residual_generators")) gens.push_back(form_from_json(F, g));
  ResidualIdeal B;
  try {
    B = residual_57(F, base, case2_from_vector(params, quintic - 1));
  } catch (const DegenerateError&) {
    return false;
  }
  if (B.generators != gens) return false;
  const GradedPiece b9 = generated_piece(F, gens, 9);
  if (b9.dim() != 38 || sum_dim(F, base.ia9, b9) != 54) return false;
  return proportional(F, dual_point(F, base.ia9, b9), t);
}

json inspect_points(const PrimeField& F, const PointSet& A) {
  json j;
  j["prime"] = F.modulus();
  j["points"] = A.size();
  const HilbertData H = hilbert_function(F, A, 10);
  j["h"] = H.h;
  j["dh"] = H.dh;
  const KruskalResult k4 = kruskal_rank(F, A, 4);
  j["k4"] = json{{"value", k4.k}, {"rank_checks", k4.rank_checks}};
  j["ideal_dims"] = json{{"5", ideal_piece(F, A, 5).dim()}, {"6", ideal_piece(F, A, 6).dim()},
                         {"9", ideal_piece(F, A, 9).dim()}};
  if (A.size() == 18) {
    const GenericityResult g = test_genericity(F, Decomposition{A, std::nullopt});
    j["genericity"] = genericity_json(g);
    try {
      const HBMatrix hb = assemble_hb(F, A);
      json deg = json::array();
      for (int r = 0; r < 4; ++r) {
        json row = json::array();
        for (int v = 0; v < 3; ++v) row.push_back(hb.entry(r, v).is_zero() ? -1 : hb.entry(r, v).degree());
        deg.push_back(row);
      }
      j["hilbert_burch"] = json{{"ok", true}, {"degree_matrix", deg}};
    } catch (const GenericityError& e) {
      j["hilbert_burch"] = json{{"ok", false}, {"error", e.what()}};
    }
  } else {
    j["genericity"] = nullptr;
    j["hilbert_burch"] = json{{"ok", false}, {"error", "needs 18 points"}};
  }
  json cb = json::object();
  for (int i = 3; i <= 9; ++i) cb[std::to_string(i)] = cayley_bacharach(F, A, i);
  j["cayley_bacharach"] = cb;
  j["union_dh_violations"] = validate_joint_dh(H, 9);
  return j;
}

json case1_document(const PrimeField& F, const PointSet& A, const Case1Params& w,
                    const std::vector<Fp>& lambdas) {
  InputDocument doc;
  doc.prime = F.modulus();
  for (const auto& p : A) doc.points.push_back({F.balanced(p[0]), F.balanced(p[1]), F.balanced(p[2])});
  doc.lambdas = balanced(F, lambdas);
  std::array<std::array<std::int64_t, 10>, 2> pen{};
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < 10; ++k) pen[r][k] = F.balanced(w.W[r][k]);
  doc.pencil = pen;
  return to_json(doc);
}

json case2_document(const PrimeField& F, const PointSet& A, const Case2Params& th, int chart,
                    const std::vector<Fp>& lambdas) {
  InputDocument doc;
  doc.prime = F.modulus();
  for (const auto& p : A) doc.points.push_back({F.balanced(p[0]), F.balanced(p[1]), F.balanced(p[2])});
  doc.lambdas = balanced(F, lambdas);
  doc.case2_parameters = balanced(F, case2_to_vector(F, th, chart - 1));
  doc.case2_chart = chart;
  return to_json(doc);
}

std::optional<PointSet> random_general(const PrimeField& F, std::uint64_t seed, int max_tries) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coord(0, F.modulus() - 1);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<ProjPoint> pts;
    for (int draws = 0; pts.size() < 18 && draws < 10000; ++draws) {
      Fp a(coord(rng)), b(coord(rng)), c(coord(rng));
      if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
      ProjPoint P(a, b, c);
      bool dup = false;
      for (const auto& q : pts) dup = dup || q.same_point(F, P);
      if (!dup) pts.push_back(P.normalized(F));
    }
    if (pts.size() < 18) continue;
    PointSet A(F, std::move(pts));
    if (test_genericity(F, Decomposition{A, std::nullopt}).all()) return A;
  }
  return std::nullopt;
}

Case1Params random_pencil(const PrimeField& F, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coord(0, F.modulus() - 1);
  Case1Params w;
  for (auto& row : w.W)
    for (auto& x : row) x = Fp(coord(rng));
  return w;
}

Case2Params random_case2(const PrimeField& F, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coord(0, F.modulus() - 1);
  Case2Params th;
  for (auto& a : th.a) a = Fp(coord(rng));
  for (auto& q : th.q)
    for (auto& c : q.coeffs()) c = Fp(coord(rng));
  return th;
}

std::string exponent_table_markdown() {
  std::ostringstream os;
  os << "| index | e0 | e1 | e2 | monomial |\n|---:|---:|---:|---:|---|\n";
  const auto& ms = monomials(9);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    os << "| " << i << " | " << ms[i][0] << " | " << ms[i][1] << " | " << ms[i][2] << " | ";
    bool first = true;
    for (int v = 0; v < 3; ++v) {
      if (ms[i][v] == 0) continue;
      if (!first) os << " ";
      os << "x" << v;
      if (ms[i][v] > 1) os << "^" << ms[i][v];
      first = false;
    }
    os << " |\n";
  }
  return os.str();
}

}  // namespace nonic
