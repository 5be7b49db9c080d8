#include "cuspeta/cli.hpp"

#include "cuspeta/config.hpp"
#include "cuspeta/cusps.hpp"
#include "cuspeta/heisenberg.hpp"
#include "cuspeta/unrep.hpp"
#include "cuspeta/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

namespace cuspeta::cli {

namespace {

using nlohmann::json;

std::string formatDouble(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::vector<int> parseIntList(const std::string &text, const char *what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      size_t used = 0;
      const int value = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(value);
    } catch (const std::exception &) {
      throw std::invalid_argument(std::string(what) + ": expected comma-separated integers, got \"" +
                                  text + "\"");
    }
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

std::vector<double> parseDoubleList(const std::string &text, const char *what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      size_t used = 0;
      const double value = std::stod(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(value);
    } catch (const std::exception &) {
      throw std::invalid_argument(std::string(what) + ": expected comma-separated reals, got \"" +
                                  text + "\"");
    }
  }
  return out;
}

HeisenbergMetric metricFromFlag(const std::string &flag, int n) {
  if (flag.empty()) return HeisenbergMetric::unit(n);
  const std::vector<double> values = parseDoubleList(flag, "--metric");
  if (static_cast<int>(values.size()) != n + 1)
    throw std::invalid_argument("--metric: expected r1,...,rn,r (n+1 values)");
  HeisenbergMetric metric;
  metric.rj.assign(values.begin(), values.end() - 1);
  metric.r = values.back();
  return metric;
}

BundleSpec bundleFromFlags(const std::string &kind, const std::string &twist,
                           const std::string &weight, int n) {
  if (kind == "dolbeault") return BundleSpec::dolbeault();
  if (kind == "signature") return BundleSpec::signature();
  if (kind == "spinor")
    return BundleSpec::spinor(twist.empty() ? Rational(0) : parseRational(twist));
  if (kind == "custom") {
    if (weight.empty()) throw std::invalid_argument("--bundle custom requires --weight");
    std::vector<Rational> entries;
    std::stringstream ss(weight);
    std::string piece;
    while (std::getline(ss, piece, ',')) entries.push_back(parseRational(piece));
    if (static_cast<int>(entries.size()) != n)
      throw std::invalid_argument("--weight: expected n comma-separated rationals");
    TwistParameter c(twist.empty() ? Rational(0) : parseRational(twist));
    return BundleSpec::custom(DominantWeight(std::move(entries)), std::move(c));
  }
  throw std::invalid_argument("--bundle: expected dolbeault|signature|spinor|custom");
}

struct EtaOptions {
  int heisDim = 1;
  std::string type;
  std::string twist = "0";
  std::string metric;
  int atS = 0;
  bool hasSeriesCheck = false;
  std::vector<double> seriesCheck; // s, wMax
};

int runEta(const EtaOptions &opt, bool jsonOutput, std::ostream &out) {
  const LatticeType d(parseIntList(opt.type, "--type"));
  const TwistParameter c(parseRational(opt.twist));
  const Integer dimV = gammaRepData(d, c).dimV;
  const Rational value = etaClosed(opt.heisDim, d, c, dimV, opt.atS);

  json result{{"n", opt.heisDim},      {"type", d.entries()},       {"twist", toString(c.value())},
              {"dim_v", dimV.str()},   {"s", opt.atS},              {"eta", toString(value)}};

  if (opt.hasSeriesCheck) {
    if (opt.seriesCheck.size() != 2)
      throw std::invalid_argument("--series-check: expected s and wMax");
    const double s = opt.seriesCheck[0];
    const int wMax = static_cast<int>(opt.seriesCheck[1]);
    const HeisenbergMetric metric = metricFromFlag(opt.metric, opt.heisDim);
    const EtaSeriesResult series = etaSeries(opt.heisDim, d, c, dimV, metric, s, wMax);
    result["series"] = json{{"s", s},
                            {"w_max", wMax},
                            {"value", series.value},
                            {"tail_bound", series.tailBound}};
  }

  if (jsonOutput) {
    out << result.dump() << "\n";
  } else {
    out << toString(value) << "\n";
    if (opt.hasSeriesCheck)
      out << "series value " << formatDouble(result["series"]["value"].get<double>())
          << " (tail bound " << formatDouble(result["series"]["tail_bound"].get<double>()) << ")\n";
  }
  return 0;
}

json correctionToJson(const LatticeType &d, const CorrectionReport &report) {
  json j = toJson(report);
  j["d"] = d.entries();
  return j;
}

int runCorr(const ManifoldDescription &m, bool jsonOutput, std::ostream &out) {
  json cusps = json::array();
  for (const LatticeType &d : m.cusps)
    cusps.push_back(correctionToJson(d, correction({m.n, d, m.bundle})));
  if (jsonOutput) {
    out << json{{"cusps", cusps}}.dump() << "\n";
    return 0;
  }
  for (const json &c : cusps) {
    out << "d=(";
    const auto &entries = c["d"];
    for (size_t i = 0; i < entries.size(); ++i)
      out << (i ? "," : "") << entries[i].get<int>();
    out << ") he=" << c["he_eta"].get<std::string>() << " le=" << c["le_eta"].get<std::string>()
        << " ker=" << c["ker_dim"].get<std::string>() << " corr=" << c["corr"].get<std::string>()
        << "\n";
  }
  return 0;
}

int runIndex(const ManifoldDescription &m, bool jsonOutput, std::ostream &out) {
  const Rational extended = extendedIndex(m);
  const bool fredholm = fredholmType(m);
  const Integer kernels = kernelSum(m);

  std::string l2Text;
  bool l2Known = true;
  try {
    l2Text = toString(l2Index(m));
  } catch (const std::invalid_argument &e) {
    l2Known = false;
    l2Text = e.what();
  }

  if (jsonOutput) {
    json j{{"extended", toString(extended)},
           {"fredholm", fredholm},
           {"h_sum", kernels.str()}};
    if (l2Known)
      j["l2"] = l2Text;
    else
      j["l2_unavailable"] = l2Text;
    out << j.dump() << "\n";
    return 0;
  }
  out << "extended = " << toString(extended) << "\n";
  if (l2Known)
    out << "l2 = " << l2Text << "\n";
  else
    out << "l2 unavailable: " << l2Text << "\n";
  out << "fredholm = " << (fredholm ? "true" : "false") << "\n";
  out << "h_sum = " << kernels.str() << "\n";
  return 0;
}

struct SpectrumOptions {
  int heisDim = 1;
  std::string type;
  std::string twist = "0";
  std::string metric;
  double cutoff = 0.0;
  bool csv = false;
};

int runSpectrum(const SpectrumOptions &opt, bool jsonOutput, std::ostream &out) {
  const LatticeType d(parseIntList(opt.type, "--type"));
  const TwistParameter c(parseRational(opt.twist));
  const HeisenbergMetric metric = metricFromFlag(opt.metric, opt.heisDim);
  const auto items = diracSquareSpectrum(opt.heisDim, d, c, metric, opt.cutoff);

  auto tupleStrings = [](const SpectralItem &item) {
    std::ostringstream p, eps;
    for (size_t i = 0; i < item.p.size(); ++i) {
      p << (i ? ";" : "") << item.p[i];
      eps << (i ? ";" : "") << (item.eps[i] > 0 ? "+1" : "-1");
    }
    return std::pair<std::string, std::string>(p.str(), eps.str());
  };

  if (jsonOutput) {
    json rows = json::array();
    for (const SpectralItem &item : items) {
      rows.push_back(json{{"lambda", item.value},
                          {"w", toString(item.w)},
                          {"p", item.p},
                          {"eps", item.eps},
                          {"multiplicity", item.multiplicity.str()}});
    }
    out << json{{"spectrum", rows}}.dump() << "\n";
    return 0;
  }
  if (opt.csv) {
    out << "lambda,w,p,eps,multiplicity\n";
    for (const SpectralItem &item : items) {
      const auto [p, eps] = tupleStrings(item);
      out << formatDouble(item.value) << "," << toString(item.w) << "," << p << "," << eps << ","
          << item.multiplicity.str() << "\n";
    }
    return 0;
  }
  for (const SpectralItem &item : items) {
    const auto [p, eps] = tupleStrings(item);
    out << formatDouble(item.value) << "  w=" << toString(item.w) << " p=(" << p << ") eps=("
        << eps << ") mult=" << item.multiplicity.str() << "\n";
  }
  return 0;
}

int runKostant(int n, const std::string &weightFlag, bool jsonOutput, std::ostream &out) {
  std::vector<Rational> entries;
  std::stringstream ss(weightFlag);
  std::string piece;
  while (std::getline(ss, piece, ',')) entries.push_back(parseRational(piece));
  if (static_cast<int>(entries.size()) != n)
    throw std::invalid_argument("--weight: expected n comma-separated rationals");
  const DominantWeight weight(std::move(entries));
  const auto data = kostantData(weight);

  if (jsonOutput) {
    json rows = json::array();
    for (const KostantDatum &datum : data)
      rows.push_back(json{{"k", datum.degree},
                          {"b", datum.dim.str()},
                          {"dz", toString(datum.centralValue)},
                          {"kernel", datum.inKernel}});
    out << json{{"n", n}, {"weight", toString(weight)}, {"rows", rows}}.dump() << "\n";
    return 0;
  }
  out << "k  b_k  dz\n";
  for (const KostantDatum &datum : data)
    out << datum.degree << "  " << datum.dim.str() << "  " << toString(datum.centralValue)
        << (datum.inKernel ? "  (kernel)" : "") << "\n";
  return 0;
}

int runVerify(const std::string &suite, bool jsonOutput, std::ostream &out) {
  const auto results = runVerification(suite);
  if (results.empty()) throw std::invalid_argument("verify: no suite matches \"" + suite + "\"");
  bool allPassed = true;
  json rows = json::array();
  for (const CheckResult &r : results) {
    allPassed = allPassed && r.passed;
    if (jsonOutput) {
      rows.push_back(json{{"id", r.id},
                          {"name", r.name},
                          {"passed", r.passed},
                          {"seconds", r.seconds},
                          {"detail", r.detail}});
    } else {
      std::ostringstream line;
      line << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << " " << r.name << " ("
           << std::fixed << std::setprecision(2) << r.seconds << "s)";
      if (!r.detail.empty()) line << ": " << r.detail;
      out << line.str() << "\n";
    }
  }
  if (jsonOutput) out << json{{"checks", rows}, {"passed", allPassed}}.dump() << "\n";
  return allPassed ? 0 : 2;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"spectral invariants of Heisenberg manifolds and complex hyperbolic cusps"};
  app.require_subcommand(1);
  bool jsonOutput = false;
  app.add_flag("--json", jsonOutput, "machine-readable output");

  EtaOptions etaOpt;
  CLI::App *eta = app.add_subcommand("eta", "closed-form and truncated eta values");
  eta->add_option("--heis-dim", etaOpt.heisDim, "Heisenberg dimension parameter n")->required();
  eta->add_option("--type", etaOpt.type, "lattice type d1,d2,...")->required();
  eta->add_option("--twist", etaOpt.twist, "twist parameter p/q");
  eta->add_option("--metric", etaOpt.metric, "metric r1,...,rn,r");
  eta->add_option("--at-s", etaOpt.atS, "evaluation point (non-positive integer)");
  eta->add_option("--series-check", etaOpt.seriesCheck, "s wMax: compare the truncated series")
      ->expected(2);

  std::string configPath;
  int corrN = 0;
  std::string corrType, corrBundle = "spinor", corrTwist, corrWeight;
  CLI::App *corr = app.add_subcommand("corr", "per-cusp correction terms");
  corr->add_option("--config", configPath, "manifold configuration file");
  corr->add_option("--n", corrN, "complex dimension");
  corr->add_option("--type", corrType, "single cusp lattice type d1,...");
  corr->add_option("--bundle", corrBundle, "dolbeault|signature|spinor|custom");
  corr->add_option("--twist", corrTwist, "twist parameter p/q");
  corr->add_option("--weight", corrWeight, "custom bundle weight w1,...,wn");

  std::string indexConfig;
  CLI::App *index = app.add_subcommand("index", "extended and L2 indices");
  index->add_option("--config", indexConfig, "manifold configuration file")->required();

  SpectrumOptions specOpt;
  CLI::App *spectrum = app.add_subcommand("spectrum", "squared flat Dirac spectrum");
  spectrum->add_option("--heis-dim", specOpt.heisDim, "Heisenberg dimension parameter n")
      ->required();
  spectrum->add_option("--type", specOpt.type, "lattice type d1,...")->required();
  spectrum->add_option("--twist", specOpt.twist, "twist parameter p/q");
  spectrum->add_option("--metric", specOpt.metric, "metric r1,...,rn,r");
  spectrum->add_option("--cutoff", specOpt.cutoff, "eigenvalue cutoff")->required();
  spectrum->add_flag("--csv", specOpt.csv, "CSV output");

  int kostantN = 0;
  std::string kostantWeight;
  CLI::App *kostant = app.add_subcommand("kostant", "closed-form harmonic data of a weight");
  kostant->add_option("--n", kostantN, "rank")->required();
  kostant->add_option("--weight", kostantWeight, "dominant weight w1,...,wn")->required();

  std::string verifySuite;
  CLI::App *verify = app.add_subcommand("verify", "run the self-verification suites");
  verify->add_option("--suite", verifySuite, "only suites whose name contains this string");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) { // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (eta->parsed()) {
      etaOpt.hasSeriesCheck = !etaOpt.seriesCheck.empty();
      return runEta(etaOpt, jsonOutput, out);
    }
    if (corr->parsed()) {
      if (!configPath.empty()) return runCorr(loadManifoldConfig(configPath), jsonOutput, out);
      if (corrN == 0 || corrType.empty())
        throw std::invalid_argument("corr: provide --config or both --n and --type");
      const LatticeType d(parseIntList(corrType, "--type"));
      ManifoldDescription m{corrN, bundleFromFlags(corrBundle, corrTwist, corrWeight, corrN),
                            BulkTerm::integral(Rational(0)), {d}, std::nullopt};
      return runCorr(m, jsonOutput, out);
    }
    if (index->parsed()) return runIndex(loadManifoldConfig(indexConfig), jsonOutput, out);
    if (spectrum->parsed()) return runSpectrum(specOpt, jsonOutput, out);
    if (kostant->parsed()) return runKostant(kostantN, kostantWeight, jsonOutput, out);
    if (verify->parsed()) return runVerify(verifySuite, jsonOutput, out);
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

} // namespace cuspeta::cli
