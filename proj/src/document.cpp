#include "geographer/document.hpp"

#include <sstream>

namespace geographer {

using nlohmann::json;

namespace {

std::map<std::string, Int> recipe_parameters(const Recipe& recipe) {
  struct Visitor {
    std::map<std::string, Int> operator()(const FamilyRecipe& r) const {
      return {{"index", r.index}, {"d", r.spec.d}, {"k", r.spec.k}, {"g", r.spec.g},
              {"e", static_cast<int>(r.spec.euler.tag)}};
    }
    std::map<std::string, Int> operator()(const BundleRecipe& r) const {
      return {{"d", r.spec.d}, {"k", r.spec.k}, {"g", r.spec.g}, {"e", static_cast<int>(r.spec.euler.tag)}};
    }
    std::map<std::string, Int> operator()(const FiberSumRecipe& r) const {
      return {{"n", r.n}, {"d", r.d}, {"k", r.k}, {"g", r.g}};
    }
    std::map<std::string, Int> operator()(const DolgachevSumRecipe& r) const {
      return {{"p", r.p}, {"q", r.q}, {"d", r.d}, {"k", r.k}, {"g", r.g}};
    }
    std::map<std::string, Int> operator()(const EllipticRecipe& r) const { return {{"n", r.n}}; }
    std::map<std::string, Int> operator()(const DolgachevRecipe& r) const { return {{"p", r.p}, {"q", r.q}}; }
  };
  return std::visit(Visitor{}, recipe.variant);
}

json optional_int(const std::optional<Int>& v) { return v ? json(*v) : json(nullptr); }

std::optional<Int> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<Int>();
}

}  // namespace

CertificateDocument make_document(const Recipe& recipe, std::string command) {
  return CertificateDocument{kSchemaVersion,     std::move(command),        recipe.realized, recipe.kind(),
                             recipe.describe(), recipe_parameters(recipe), recipe.certificate};
}

CertificateDocument make_document(const InvariantCertificate& cert, std::string command, std::string kind,
                                  std::map<std::string, Int> parameters) {
  return CertificateDocument{kSchemaVersion,
                             std::move(command),
                             Triple{cert.sigma, cert.b1, cert.degeneracy},
                             std::move(kind),
                             cert.manifold,
                             std::move(parameters),
                             cert};
}

json to_json(const InvariantCertificate& c) {
  return json{
      {"manifold", c.manifold},
      {"sigma", c.sigma},
      {"chi", c.chi},
      {"b1", c.b1},
      {"b_plus", c.b_plus},
      {"b_minus", c.b_minus},
      {"k_squared", c.k_squared},
      {"k_dot_omega",
       {{"torus_multiple", optional_int(c.k_dot_omega.torus_multiple)},
        {"sign", c.k_dot_omega.sign},
        {"basis", c.k_dot_omega.basis}}},
      {"kappa", to_string(c.kappa)},
      {"degeneracy", c.degeneracy},
      {"degeneracy_oracle", optional_int(c.degeneracy_oracle)},
      {"nullity", optional_int(c.nullity)},
      {"minimal", {{"value", c.minimal.minimal}, {"basis", c.minimal.basis}}},
  };
}

InvariantCertificate certificate_from_json(const json& j) {
  InvariantCertificate c;
  c.manifold = j.at("manifold").get<std::string>();
  c.sigma = j.at("sigma").get<Int>();
  c.chi = j.at("chi").get<Int>();
  c.b1 = j.at("b1").get<Int>();
  c.b_plus = j.at("b_plus").get<Int>();
  c.b_minus = j.at("b_minus").get<Int>();
  c.k_squared = j.at("k_squared").get<Int>();
  const json& kw = j.at("k_dot_omega");
  c.k_dot_omega = CanonicalPairing{optional_from(kw.at("torus_multiple")), kw.at("sign").get<int>(),
                                   kw.at("basis").get<std::string>()};
  c.kappa = kodaira_from_string(j.at("kappa").get<std::string>());
  c.degeneracy = j.at("degeneracy").get<Int>();
  c.degeneracy_oracle = optional_from(j.at("degeneracy_oracle"));
  c.nullity = optional_from(j.at("nullity"));
  c.minimal = Minimality{j.at("minimal").at("value").get<bool>(), j.at("minimal").at("basis").get<std::string>()};
  return c;
}

json to_json(const CertificateDocument& doc) {
  json checks = json::array();
  for (const auto& c : doc.invariants.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
  return json{
      {"schema_version", doc.schema_version},
      {"command", doc.command},
      {"triple", {{"a", doc.triple.a}, {"b", doc.triple.b}, {"c", doc.triple.c}}},
      {"recipe", {{"kind", doc.recipe_kind}, {"description", doc.recipe}, {"parameters", doc.parameters}}},
      {"invariants", to_json(doc.invariants)},
      {"checks", checks},
      {"citations", doc.invariants.citations},
  };
}

CertificateDocument document_from_json(const json& j) {
  CertificateDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  doc.command = j.at("command").get<std::string>();
  const json& t = j.at("triple");
  doc.triple = Triple{t.at("a").get<Int>(), t.at("b").get<Int>(), t.at("c").get<Int>()};
  const json& r = j.at("recipe");
  doc.recipe_kind = r.at("kind").get<std::string>();
  doc.recipe = r.at("description").get<std::string>();
  doc.parameters = r.at("parameters").get<std::map<std::string, Int>>();
  doc.invariants = certificate_from_json(j.at("invariants"));
  for (const auto& c : j.at("checks")) doc.invariants.checks.push_back({c.at("name"), c.at("passed")});
  doc.invariants.citations = j.at("citations").get<std::map<std::string, std::string>>();
  return doc;
}

json to_json(const OpenCase& open) {
  return json{{"schema_version", kSchemaVersion},
              {"status", "open"},
              {"triple", {{"a", open.triple.a}, {"b", open.triple.b}, {"c", open.triple.c}}},
              {"question", open.question},
              {"note", open.note}};
}

std::string tsv_header() {
  return "a\tb\tc\trecipe\tsigma\tchi\tb1\tb_plus\tb_minus\tk_dot_omega\tkappa\tdegeneracy\tnullity\tminimal";
}

std::string tsv_row(const CertificateDocument& doc) {
  const InvariantCertificate& c = doc.invariants;
  std::ostringstream os;
  os << doc.triple.a << '\t' << doc.triple.b << '\t' << doc.triple.c << '\t' << doc.recipe << '\t' << c.sigma
     << '\t' << c.chi << '\t' << c.b1 << '\t' << c.b_plus << '\t' << c.b_minus << '\t';
  if (c.k_dot_omega.torus_multiple) os << *c.k_dot_omega.torus_multiple;
  else os << (c.k_dot_omega.sign > 0 ? "positive" : "unknown");
  os << '\t' << to_string(c.kappa) << '\t' << c.degeneracy << '\t';
  if (c.nullity) os << *c.nullity;
  else os << "unknown";
  os << '\t' << (c.minimal.minimal ? "true" : "false");
  return os.str();
}

}  // namespace geographer
