#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nonic/certify.hpp"

namespace nonic {

using json = nlohmann::ordered_json;

// Malformed documents and bad moduli; the CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitCertified = 0,
  kExitMalformed = 2,
  kExitRetries = 3,
  kExitLowerRank = 10,
  kExitInapplicable = 11,
  kExitInconclusive = 12,
};
int exit_code(Verdict v);

struct InputDocument {
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::vector<std::array<std::int64_t, 3>> points;
  std::optional<std::vector<std::int64_t>> lambdas;
  std::optional<std::vector<std::int64_t>> coefficients;  // 55 entries, contracted, monomial order
  // optional construction parameters
  std::optional<std::array<std::array<std::int64_t, 10>, 2>> pencil;
  std::optional<std::vector<std::int64_t>> case2_parameters;  // 15 entries
  int case2_chart = 1;                                        // quintic coefficient fixed to 1
};

InputDocument parse_input(const json& j);
InputDocument load_input(const std::string& path);
json to_json(const InputDocument& doc);

PrimeField field_of(const InputDocument& doc);  // throws InputError on a bad modulus
PointSet points_of(const PrimeField& F, const InputDocument& doc);
Decomposition decomposition_of(const PrimeField& F, const InputDocument& doc);
std::vector<Fp> contracted_of(const PrimeField& F, const InputDocument& doc);  // from lambdas or coefficients

std::optional<Case1Params> pencil_of(const PrimeField& F, const InputDocument& doc);
std::optional<Case2Params> case2_of(const PrimeField& F, const InputDocument& doc);

std::vector<std::int64_t> balanced(const PrimeField& F, const std::vector<Fp>& v);
std::vector<Fp> residues(const PrimeField& F, const std::vector<std::int64_t>& v);

json report_to_json(const PrimeField& F, const CertReport& rep);
std::string report_to_text(const PrimeField& F, const CertReport& rep);

// Re-checks a serialized Case-2 witness by linear algebra only.
bool verify_case2_witness(const PrimeField& F, const LiaisonBase& base, const std::vector<Fp>& t,
                          const json& witness);

json inspect_points(const PrimeField& F, const PointSet& A);

json case1_document(const PrimeField& F, const PointSet& A, const Case1Params& w,
                    const std::vector<Fp>& lambdas);
json case2_document(const PrimeField& F, const PointSet& A, const Case2Params& th, int chart,
                    const std::vector<Fp>& lambdas);

// Rejection sampling of 18 points passing the three genericity tests.
std::optional<PointSet> random_general(const PrimeField& F, std::uint64_t seed, int max_tries = 100);
Case1Params random_pencil(const PrimeField& F, std::uint64_t seed);
Case2Params random_case2(const PrimeField& F, std::uint64_t seed);

// Markdown table of the 55 degree-9 monomials in coefficient order.
std::string exponent_table_markdown();

}  // namespace nonic
