#include "zetafrob/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include "zetafrob/error.hpp"
#include "zetafrob/kedlaya.hpp"
#include "zetafrob/oracle.hpp"

namespace zetafrob::cli {

namespace {

[[noreturn]] void parse_fail(const std::string& arg, std::size_t col, const std::string& what) {
  throw Error(ErrorCode::ParseError, arg + ": column " + std::to_string(col + 1) + ": " + what);
}

}  // namespace

std::vector<std::vector<std::int64_t>> parse_coefficients(const std::string& text, int n,
                                                          std::uint64_t p, const std::string& arg) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  std::size_t i = 0;
  if (text.empty()) parse_fail(arg, 0, "empty coefficient list");
  for (;;) {
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) parse_fail(arg, i, "expected a non-negative integer");
    if (i - start > 18) parse_fail(arg, start, "integer too long");
    const std::uint64_t v = std::stoull(text.substr(start, i - start));
    if (v >= p) parse_fail(arg, start, "residue " + std::to_string(v) + " is not in [0," + std::to_string(p) + ")");
    cur.push_back(static_cast<std::int64_t>(v));
    if (i == text.size() || text[i] == ',') {
      if (static_cast<int>(cur.size()) != n)
        parse_fail(arg, start, "coefficient has " + std::to_string(cur.size()) + " residues, expected " + std::to_string(n));
      out.push_back(std::move(cur));
      cur.clear();
      if (i == text.size()) break;
      ++i;
    } else if (text[i] == ':') {
      ++i;
    } else {
      parse_fail(arg, i, std::string("unexpected character '") + text[i] + "'");
    }
  }
  return out;
}

namespace {

struct Job {
  std::uint64_t p = 0;
  int n = 1;
  std::string modulus;
  std::string q_poly;
  std::string basis = "auto";
  std::optional<int> precision;
  bool oracle = false;
  std::string json_out;
  std::uint64_t seed = 1;
  bool timing = false;
};

nlohmann::json to_json(const LPolynomial& L) { return L.coeffs; }

int execute(const Job& job, std::ostream& out, std::ostream& err) {
  std::optional<std::vector<std::uint64_t>> modulus;
  if (!job.modulus.empty()) {
    std::vector<std::uint64_t> m;
    for (const auto& c : parse_coefficients(job.modulus, 1, job.p, "--modulus")) m.push_back(static_cast<std::uint64_t>(c[0]));
    modulus = std::move(m);
  }
  if (job.p < 2) throw Error(ErrorCode::NotPrime, "p must be a prime, got " + std::to_string(job.p));
  const FieldPtr F = make_field(job.p, job.n, modulus);
  std::vector<FqElement> coeffs;
  for (const auto& c : parse_coefficients(job.q_poly, job.n, job.p, "--q-poly")) coeffs.push_back(F->from_coords(c));
  const FqPoly Q(*F, std::move(coeffs));

  PipelineOverrides ov;
  if (job.basis == "b1") ov.basis = Basis::B1;
  if (job.basis == "b2") ov.basis = Basis::B2;
  ov.nwork = job.precision;
  const ZetaResult res = zeta_pipeline(F, Q, ov);

  nlohmann::ordered_json doc;
  doc["L"] = to_json(res.L);
  doc["q"] = F->q();
  doc["p"] = F->p();
  doc["n"] = F->n();
  doc["g"] = res.g;
  doc["d"] = res.d;
  doc["basis"] = basis_name(res.basis.which);
  doc["strip"] = strip_name(res.basis.strip);
  doc["N1"] = res.plan.N1;
  doc["N"] = res.plan.N;
  doc["nwork"] = res.plan.nwork;
  doc["matrix_min_val"] = res.matrix_min_val;
  doc["twisted"] = res.twisted;
  nlohmann::ordered_json timings = nlohmann::ordered_json::object();
  for (const auto& [stage, secs] : res.timings) timings[stage] = secs;
  doc["timings"] = timings;
  doc["warnings"] = res.warnings;
  for (const auto& w : res.warnings) err << "warning: " << w << "\n";

  if (job.oracle) {
    const LPolynomial ref = oracle_lpoly(F, Q, job.seed);
    doc["oracle"] = {{"L", to_json(ref)}, {"match", ref == res.L}};
  }
  if (job.timing)
    for (const auto& [stage, secs] : res.timings)
      err << std::left << std::setw(18) << stage << std::fixed << std::setprecision(6) << secs << " s\n";

  const std::string text = doc.dump();
  out << text << "\n";
  if (!job.json_out.empty()) {
    std::ofstream f(job.json_out);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + job.json_out);
    f << text << "\n";
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Job job;
  CLI::App app{"Zeta function of a hyperelliptic curve y^2 = Q(x) over F_q"};
  app.add_option("--p", job.p, "characteristic (odd prime)")->required();
  app.add_option("--n", job.n, "extension degree of F_q over F_p");
  app.add_option("--modulus", job.modulus, "F_q modulus over F_p, ascending, monic (required for n > 1)");
  app.add_option("--q-poly", job.q_poly, "Q coefficients ascending; each coefficient is n residues joined by ':'")
      ->required();
  app.add_option("--basis", job.basis, "differential basis")->check(CLI::IsMember({"auto", "b1", "b2"}));
  app.add_option("--precision", job.precision, "force the working p-adic precision");
  app.add_flag("--oracle", job.oracle, "also count points by brute force and compare");
  app.add_option("--json-out", job.json_out, "also write the result document to this path");
  app.add_option("--seed", job.seed, "seed for the oracle's extension-field search");
  app.add_flag("--timing", job.timing, "print per-stage timings to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    return execute(job, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace zetafrob::cli
