#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "chord/checks.hpp"
#include "chord/evolution.hpp"
#include "chord/freeprob.hpp"
#include "chord/json_io.hpp"
#include "chord/matrix_model.hpp"
#include "chord/oracle.hpp"

namespace {

using namespace chord;

constexpr const char* kVersion = "0.1.0";

// --output is resolved against CHORDCOUNT_OUTDIR when it is a bare
// relative path and the variable is set.
std::string resolve_output(const std::string& path) {
  if (path.empty() || path == "-") return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  if (const char* dir = std::getenv("CHORDCOUNT_OUTDIR"))
    return (std::filesystem::path(dir) / p).string();
  return path;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(resolve_output(path), std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << text;
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
  std::vector<Rat> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(rat_from_string(item));
  return out;
}

RatSeries series_from_list(const std::vector<Rat>& values, int order) {
  RatSeries s(order);
  for (int i = 0; i < order && i < static_cast<int>(values.size()); ++i)
    s.set(i, values[i]);
  return s;
}

Json series_coeffs_json(const RatSeries& s) {
  Json arr = Json::array();
  for (int i = 0; i < s.order(); ++i) arr.push_back(rat_to_string(s.at(i)));
  return arr;
}

int run_evolve(const std::string& model, bool nonOrientable, int maxK, int maxB,
               long maxW, int oneBackbone, const std::string& format,
               const std::string& output) {
  ModelSpec spec;
  if (model == "point")
    spec.kind = SpectrumKind::Point;
  else if (model == "length")
    spec.kind = SpectrumKind::Length;
  else if (model == "vertex")
    spec.kind = SpectrumKind::Vertex;
  else
    throw CLI::ValidationError("--model must be point, length or vertex");
  spec.variant = nonOrientable ? Variant::NonOrientable : Variant::Orientable;
  if (spec.kind == SpectrumKind::Point) {
    spec.singleBackboneSize = oneBackbone;
    spec.trunc = {maxK, maxB, oneBackbone > 0 ? oneBackbone : maxW};
  } else {
    spec.trunc = {maxK, maxB, maxB};
  }

  EvolutionState state = evolve(spec);
  state.check_integrality();
  auto rows = state_to_rows(state);

  Json header;
  header["tool"] = "chordcount";
  header["version"] = kVersion;
  header["command"] = "evolve";
  header["model"] = model;
  header["variant"] = nonOrientable ? "non-orientable" : "orientable";
  header["max_k"] = maxK;
  header["max_backbones"] = maxB;
  header["max_backbone_weight"] = spec.trunc.maxBackboneWeight;
  header["one_backbone"] = oneBackbone;

  if (format == "csv")
    write_text(output, rows_to_csv(rows));
  else
    write_text(output, rows_to_json(rows, header).dump(2) + "\n");
  return 0;
}

int run_oracle(const std::string& backbones, int k, bool nonOrientable,
               bool connectedOnly, const std::string& format,
               const std::string& output) {
  std::vector<int> sizes;
  {
    std::stringstream ss(backbones);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) sizes.push_back(std::stoi(item));
  }
  if (sizes.empty()) throw CLI::ValidationError("--backbones needs sizes like 2,4");
  const Variant variant = nonOrientable ? Variant::NonOrientable : Variant::Orientable;
  TypeHistogram hist = count_types(sizes, k, variant, connectedOnly);

  std::vector<CountRow> rows;
  Spectrum bSpec;
  for (int s : sizes) bSpec.bump(s, 1);
  long l = 0;
  for (int s : sizes) l += s;
  l -= 2 * k;
  for (const auto& [key, cnt] : hist) {
    CountRow row;
    row.variant = nonOrientable ? "non-orientable" : "orientable";
    row.model = key.hasP ? "length" : "point";
    row.gOrH = key.gOrH;
    row.k = k;
    row.l = l;
    row.bSpec = bSpec;
    row.nOrP = key.n;
    row.count = cnt;
    rows.push_back(row);
  }

  Json header;
  header["tool"] = "chordcount";
  header["version"] = kVersion;
  header["command"] = "oracle";
  header["backbones"] = backbones;
  header["k"] = k;
  header["variant"] = nonOrientable ? "non-orientable" : "orientable";
  header["connected_only"] = connectedOnly;

  if (format == "csv")
    write_text(output, rows_to_csv(rows));
  else
    write_text(output, rows_to_json(rows, header).dump(2) + "\n");
  return 0;
}

int run_check(const std::string& suite, const SuiteOptions& opt,
              const std::string& report) {
  if (suite == "kp") {
    // pass/fail matrix per equation and y order, for both models
    for (const auto& cell : kp_residual_matrix(4, 3))
      std::cout << (cell.pass ? "PASS" : "FAIL") << "  kp " << cell.model
                << " equation " << cell.equation << " y^" << cell.yOrder << "\n";
  }
  auto results = run_suite(suite, opt);
  Json out;
  out["tool"] = "chordcount";
  out["version"] = kVersion;
  out["suite"] = suite;
  out["seed"] = opt.seed;
  out["samples"] = opt.samples;
  Json arr = Json::array();
  bool allPass = true;
  for (const auto& r : results) {
    allPass = allPass && r.pass;
    Json item;
    item["criterion"] = r.criterion;
    item["name"] = r.name;
    item["pass"] = r.pass;
    item["detail"] = r.detail;
    arr.push_back(std::move(item));
    std::cout << (r.pass ? "PASS" : "FAIL") << "  [" << r.criterion << "] " << r.name
              << (r.detail.empty() ? "" : "  -- " + r.detail) << "\n";
  }
  out["results"] = std::move(arr);
  out["pass"] = allPass;
  if (!report.empty()) write_text(report, out.dump(2) + "\n");
  return allPass ? 0 : 1;
}

int run_matrix(const std::string& ensembleName, int N, int p, double s, int m,
               const std::string& bspecCsv, long samples, std::uint64_t seed,
               const std::string& output) {
  EnsembleConfig cfg;
  cfg.ensemble = ensembleName == "real" ? Ensemble::RealSymmetricOrthogonal
                                        : Ensemble::HermitianUnitary;
  cfg.N = N;
  cfg.p = p;
  cfg.s = s;
  cfg.samples = samples;
  cfg.seed = seed;
  const Variant variant = ensembleName == "real" ? Variant::NonOrientable
                                                 : Variant::Orientable;

  MCEstimate est;
  Polynomial exact;
  if (!bspecCsv.empty()) {
    Spectrum bSpec;
    std::stringstream ss(bspecCsv);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) bSpec.bump(std::stoi(item), 1);
    est = sample_trace_powers(cfg, bSpec);
    exact = exact_product_moment(bSpec, variant);
  } else {
    est = sample_trace_powers(cfg, m);
    exact = exact_moment(m, variant);
  }
  std::map<int, Rat> assign{{Polynomial::var_id("s"), rat_from_string(
                                 std::to_string(static_cast<long>(s)))},
                            {Polynomial::var_id("p"), Rat(p)},
                            {Polynomial::var_id("N"), Rat(N)}};
  const double exactValue = exact.eval(assign).get_d();
  const double z = est.stderr_ > 0 ? std::abs(est.mean - exactValue) / est.stderr_
                                   : (est.mean == exactValue ? 0.0 : INFINITY);

  Json out;
  out["tool"] = "chordcount";
  out["version"] = kVersion;
  out["command"] = "matrix";
  out["ensemble"] = ensembleName;
  out["N"] = N;
  out["p"] = p;
  out["s"] = s;
  out["m"] = m;
  out["b_spec"] = bspecCsv;
  out["samples"] = samples;
  out["seed"] = seed;
  out["mean"] = est.mean;
  out["stderr"] = est.stderr_;
  out["exact"] = exactValue;
  out["exact_poly"] = exact.to_string();
  out["zscore"] = z;
  write_text(output, out.dump(2) + "\n");
  return 0;
}

int run_freeprob(const std::string& op, const std::string& aCsv,
                 const std::string& bCsv, const std::string& weightsCsv, int order,
                 const std::string& output) {
  Json out;
  out["tool"] = "chordcount";
  out["version"] = kVersion;
  out["command"] = "freeprob";
  out["op"] = op;
  out["order"] = order;
  if (op == "r-transform" || op == "s-transform") {
    RatSeries moments = series_from_list(parse_rat_list(aCsv), order + 1);
    RatSeries res = op == "r-transform" ? r_transform(moments, order)
                                        : s_transform(moments, order);
    out["coefficients"] = series_coeffs_json(res);
  } else if (op == "free-add" || op == "free-mul") {
    RatSeries a = series_from_list(parse_rat_list(aCsv), order);
    RatSeries b = series_from_list(parse_rat_list(bCsv), order);
    RatSeries res = op == "free-add" ? free_add(a, b, order) : free_mul(a, b, order);
    out["moments"] = series_coeffs_json(res);
  } else if (op == "genus0-length") {
    RatSeries res = genus0_length_gf(parse_rat_list(weightsCsv), order);
    out["coefficients"] = series_coeffs_json(res);
  } else if (op == "semicircle") {
    out["moments"] = series_coeffs_json(semicircle_moments(order));
  } else if (op == "marchenko-pastur") {
    out["moments"] = series_coeffs_json(marchenko_pastur_moments(order));
  } else {
    throw CLI::ValidationError("unknown freeprob op " + op);
  }
  write_text(output, out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of chord diagrams on many backbones, with "
               "matrix-model and free-probability cross checks"};
  app.require_subcommand(1);

  // evolve
  std::string model = "point";
  bool nonOrientable = false, orientable = false;
  int maxK = 4, maxB = 1, oneBackbone = 0, k = 0;
  long maxW = 8;
  std::string format = "json", output = "-";
  auto* evolveCmd = app.add_subcommand("evolve", "compute a count table");
  evolveCmd->add_option("--model", model, "point | length | vertex");
  evolveCmd->add_flag("--non-orientable", nonOrientable, "allow twisted chords");
  evolveCmd->add_flag("--orientable", orientable, "untwisted chords only (default)");
  evolveCmd->add_option("--max-k", maxK, "number of chord steps");
  evolveCmd->add_option("--max-backbones", maxB, "backbone count bound");
  evolveCmd->add_option("--max-weight", maxW, "total backbone vertex bound");
  evolveCmd->add_option("--one-backbone", oneBackbone,
                        "restrict to a single backbone of this size");
  evolveCmd->add_option("--format", format, "json | csv");
  evolveCmd->add_option("--output,-o", output, "output file ('-' for stdout)");

  // oracle
  std::string backbones = "4";
  bool connectedOnly = true, allDiagrams = false;
  auto* oracleCmd = app.add_subcommand("oracle", "brute-force type histogram");
  oracleCmd->add_option("--backbones", backbones, "comma-separated sizes, e.g. 2,4");
  oracleCmd->add_option("--k", k, "number of chords");
  oracleCmd->add_flag("--non-orientable", nonOrientable, "allow twisted chords");
  oracleCmd->add_flag("--all", allDiagrams, "include disconnected diagrams");
  oracleCmd->add_option("--format", format, "json | csv");
  oracleCmd->add_option("--output,-o", output, "output file ('-' for stdout)");

  // check
  std::string suite = "all", report;
  SuiteOptions opt;
  int maxVertices = 8;
  auto* checkCmd = app.add_subcommand("check", "run a verification suite");
  checkCmd->add_option("suite", suite,
                       "golden | oracle | harer-zagier | shapes | kp | matrix | "
                       "freeprob | all");
  checkCmd->add_option("--samples", opt.samples, "Monte Carlo samples per cell");
  checkCmd->add_option("--seed", opt.seed, "RNG seed");
  checkCmd->add_option("--max-vertices", maxVertices,
                       "multibackbone vertex bound for the oracle suite");
  checkCmd->add_option("--report", report, "write a JSON report here");

  // matrix
  std::string ensembleName = "hermitian", bspecCsv;
  int N = 3, p = 0, m = 2;
  double s = 0.0;
  long samples = 100000;
  std::uint64_t seed = 7;
  auto* matrixCmd = app.add_subcommand("matrix", "Monte Carlo trace moments");
  matrixCmd->add_option("--ensemble", ensembleName, "hermitian | real");
  matrixCmd->add_option("--N", N, "matrix size");
  matrixCmd->add_option("--p", p, "projector rank");
  matrixCmd->add_option("--s", s, "coupling");
  matrixCmd->add_option("--m", m, "trace power");
  matrixCmd->add_option("--bspec", bspecCsv,
                        "comma-separated backbone sizes for a product of traces");
  matrixCmd->add_option("--samples", samples, "sample count");
  matrixCmd->add_option("--seed", seed, "RNG seed");
  matrixCmd->add_option("--output,-o", output, "output file ('-' for stdout)");

  // freeprob
  std::string op = "genus0-length", aCsv, bCsv, weightsCsv = "1,1,1,1,1,1";
  int order = 8;
  auto* freeprobCmd = app.add_subcommand("freeprob", "series transforms");
  freeprobCmd->add_option("--op", op,
                          "r-transform | s-transform | free-add | free-mul | "
                          "genus0-length | semicircle | marchenko-pastur");
  freeprobCmd->add_option("--moments", aCsv, "moment list m0,m1,... (rationals)");
  freeprobCmd->add_option("--moments-b", bCsv, "second moment list");
  freeprobCmd->add_option("--weights", weightsCsv, "boundary-length weights s1,s2,...");
  freeprobCmd->add_option("--order", order, "truncation order");
  freeprobCmd->add_option("--output,-o", output, "output file ('-' for stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (evolveCmd->parsed())
      return run_evolve(model, nonOrientable, maxK, maxB, maxW, oneBackbone, format,
                        output);
    if (oracleCmd->parsed())
      return run_oracle(backbones, k, nonOrientable, !allDiagrams, format, output);
    if (checkCmd->parsed()) {
      opt.oracleMultiVertices = maxVertices;
      return run_check(suite, opt, report);
    }
    if (matrixCmd->parsed())
      return run_matrix(ensembleName, N, p, s, m, bspecCsv, samples, seed, output);
    if (freeprobCmd->parsed())
      return run_freeprob(op, aCsv, bCsv, weightsCsv, order, output);
  } catch (const IntegralityViolation& e) {
    std::cerr << "integrality violation: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
