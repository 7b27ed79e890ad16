#pragma once

// Certificate documents: the JSON and TSV renderings emitted by the CLI.
//
// JSON layout (schema_version "1"):
//   {
//     "schema_version": "1",
//     "command": "realize",
//     "triple": {"a": 0, "b": 4, "c": 4},
//     "recipe": {"kind": "bundle_family", "description": "B_1(1) = B(3,3,3;1)",
//                "parameters": {"d": 3, "k": 3, "g": 3, "e": 1, "index": 1}},
//     "invariants": {"manifold": ..., "sigma": ..., "chi": ..., "b1": ..., "b_plus": ...,
//                    "b_minus": ..., "k_squared": ..., "k_dot_omega": {"torus_multiple": int|null,
//                    "sign": int, "basis": str}, "kappa": "-inf"|"0"|"1"|"2", "degeneracy": ...,
//                    "degeneracy_oracle": int|null, "nullity": int|null,
//                    "minimal": {"value": bool, "basis": str}},
//     "checks": [{"name": str, "passed": bool}, ...],
//     "citations": {field: source, ...}
//   }

#include <map>
#include <string>

#include <json.hpp>

#include "geographer/geography.hpp"

namespace geographer {

inline constexpr const char* kSchemaVersion = "1";

struct CertificateDocument {
  std::string schema_version = kSchemaVersion;
  std::string command;
  Triple triple;
  std::string recipe_kind;
  std::string recipe;
  std::map<std::string, Int> parameters;
  InvariantCertificate invariants;

  friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

CertificateDocument make_document(const Recipe& recipe, std::string command);
/// Document for a directly constructed manifold; the triple is (sigma, b1, degeneracy).
CertificateDocument make_document(const InvariantCertificate& cert, std::string command, std::string kind,
                                  std::map<std::string, Int> parameters);

nlohmann::json to_json(const InvariantCertificate& cert);
InvariantCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CertificateDocument& doc);
CertificateDocument document_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OpenCase& open);

/// Tab-separated columns:
/// a b c recipe sigma chi b1 b_plus b_minus k_dot_omega kappa degeneracy nullity minimal
std::string tsv_header();
std::string tsv_row(const CertificateDocument& doc);

}  // namespace geographer
