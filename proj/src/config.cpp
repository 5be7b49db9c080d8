#include "cuspeta/config.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace cuspeta {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &rule) { throw std::invalid_argument("config: " + rule); }

const json &require(const json &doc, const char *key, const char *where) {
  auto it = doc.find(key);
  if (it == doc.end()) fail(std::string(where) + " requires field \"" + key + "\"");
  return *it;
}

Rational rationalField(const json &value, const char *where) {
  if (!value.is_string()) fail(std::string(where) + " must be a rational string \"p/q\"");
  return parseRational(value.get<std::string>());
}

BundleSpec parseBundle(const json &doc, int n) {
  if (!doc.is_object()) fail("\"bundle\" must be an object");
  const std::string kind = require(doc, "kind", "bundle").get<std::string>();
  if (kind == "dolbeault") return BundleSpec::dolbeault();
  if (kind == "signature") return BundleSpec::signature();
  if (kind == "spinor") {
    Rational twist(0);
    if (doc.contains("twist")) twist = rationalField(doc["twist"], "bundle.twist");
    return BundleSpec::spinor(twist);
  }
  if (kind == "custom") {
    const json &weightDoc = require(doc, "weight", "custom bundle");
    if (!weightDoc.is_array() || weightDoc.size() != static_cast<size_t>(n))
      fail("custom bundle weight must be an array of n rationals");
    std::vector<Rational> entries;
    for (const json &e : weightDoc) entries.push_back(rationalField(e, "bundle.weight"));
    TwistParameter twist;
    if (doc.contains("twist")) twist = TwistParameter(rationalField(doc["twist"], "bundle.twist"));
    std::optional<Integer> dim;
    if (doc.contains("dim")) {
      const Rational d = rationalField(doc["dim"], "bundle.dim");
      if (!d.isInteger() || d.sign() <= 0) fail("bundle.dim must be a positive integer");
      dim = d.num();
    }
    return BundleSpec::custom(DominantWeight(std::move(entries)), std::move(twist), std::move(dim));
  }
  fail("unknown bundle kind \"" + kind + "\"");
}

BulkTerm parseBulk(const json &doc) {
  if (!doc.is_object()) fail("\"bulk\" must be an object");
  const std::string kind = require(doc, "kind", "bulk").get<std::string>();
  if (kind == "volume_ratio") return BulkTerm::volumeRatio(rationalField(require(doc, "v", "bulk"), "bulk.v"));
  if (kind == "integral")
    return BulkTerm::integral(rationalField(require(doc, "value", "bulk"), "bulk.value"));
  fail("bulk kind must be \"volume_ratio\" or \"integral\"");
}

LatticeType parseLattice(const json &doc, int n) {
  if (!doc.is_object()) fail("cusp entries must be objects");
  const json &dDoc = require(doc, "d", "cusp");
  if (!dDoc.is_array()) fail("cusp field \"d\" must be an array of integers");
  std::vector<int> d;
  for (const json &e : dDoc) {
    if (!e.is_number_integer()) fail("cusp field \"d\" must contain integers");
    d.push_back(e.get<int>());
  }
  if (static_cast<int>(d.size()) != n - 1) fail("cusp lattice type must have length n-1");
  return LatticeType(std::move(d));
}

} // namespace

ManifoldDescription parseManifoldConfig(const nlohmann::json &doc) {
  if (!doc.is_object()) fail("document must be a JSON object");
  const json &nDoc = require(doc, "n", "config");
  if (!nDoc.is_number_integer()) fail("\"n\" must be an integer");
  const int n = nDoc.get<int>();
  if (n < 2) fail("\"n\" must be >= 2");

  BundleSpec bundle = parseBundle(require(doc, "bundle", "config"), n);

  BulkTerm bulk = BulkTerm::integral(Rational(0));
  if (doc.contains("bulk"))
    bulk = parseBulk(doc["bulk"]);
  else if (!(bundle.kind() == BundleKind::Spinor && n % 2 == 1))
    fail("\"bulk\" may be omitted only for spinor bundles in odd dimension");

  const json &cuspsDoc = require(doc, "cusps", "config");
  if (!cuspsDoc.is_array()) fail("\"cusps\" must be an array");
  std::vector<LatticeType> cusps;
  for (const json &c : cuspsDoc) cusps.push_back(parseLattice(c, n));

  ManifoldDescription m{n, std::move(bundle), std::move(bulk), std::move(cusps), std::nullopt};
  if (doc.contains("h_diff")) m.hDiff = rationalField(doc["h_diff"], "h_diff");
  validateManifold(m);
  return m;
}

ManifoldDescription loadManifoldConfig(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open \"" + path + "\"");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error &e) {
    throw std::invalid_argument(std::string("config: JSON parse error: ") + e.what());
  }
  return parseManifoldConfig(doc);
}

nlohmann::json toJson(const ManifoldDescription &m) {
  json bundle{{"kind", m.bundle.kind() == BundleKind::Dolbeault    ? "dolbeault"
                       : m.bundle.kind() == BundleKind::Signature ? "signature"
                       : m.bundle.kind() == BundleKind::Spinor    ? "spinor"
                                                                   : "custom"}};
  if (m.bundle.kind() == BundleKind::Spinor || m.bundle.kind() == BundleKind::Custom)
    bundle["twist"] = toString(m.bundle.twist().value());
  if (m.bundle.customWeight()) {
    json weight = json::array();
    for (const Rational &e : m.bundle.customWeight()->entries()) weight.push_back(toString(e));
    bundle["weight"] = std::move(weight);
  }
  if (m.bundle.dimOverride()) bundle["dim"] = m.bundle.dimOverride()->str();

  json bulk;
  if (m.bulk.kind == BulkTerm::Kind::VolumeRatio)
    bulk = json{{"kind", "volume_ratio"}, {"v", toString(m.bulk.value)}};
  else
    bulk = json{{"kind", "integral"}, {"value", toString(m.bulk.value)}};

  json cusps = json::array();
  for (const LatticeType &d : m.cusps) cusps.push_back(json{{"d", d.entries()}});

  json out{{"n", m.n}, {"bundle", std::move(bundle)}, {"bulk", std::move(bulk)},
           {"cusps", std::move(cusps)}};
  if (m.hDiff) out["h_diff"] = toString(*m.hDiff);
  return out;
}

nlohmann::json toJson(const CorrectionReport &report) {
  return json{{"he_eta", toString(report.heEta)},
              {"le_eta", report.leEta.str()},
              {"ker_dim", report.kerDim.str()},
              {"corr", toString(report.corr)}};
}

} // namespace cuspeta
