#include "geographer/certificate.hpp"

#include <algorithm>
#include <stdexcept>

namespace geographer {

std::string to_string(KodairaDimension k) {
  switch (k) {
    case KodairaDimension::NegativeInfinity: return "-inf";
    case KodairaDimension::Zero: return "0";
    case KodairaDimension::One: return "1";
    case KodairaDimension::Two: return "2";
  }
  return "?";
}

KodairaDimension kodaira_from_string(const std::string& s) {
  if (s == "-inf") return KodairaDimension::NegativeInfinity;
  if (s == "0") return KodairaDimension::Zero;
  if (s == "1") return KodairaDimension::One;
  if (s == "2") return KodairaDimension::Two;
  throw std::invalid_argument("unknown Kodaira dimension '" + s + "'");
}

std::optional<KodairaDimension> kodaira_classify(Int k_squared, Int k_dot_omega) {
  if (k_squared < 0 || k_dot_omega < 0) return KodairaDimension::NegativeInfinity;
  if (k_squared == 0) return k_dot_omega == 0 ? KodairaDimension::Zero : KodairaDimension::One;
  if (k_dot_omega > 0) return KodairaDimension::Two;
  return std::nullopt;
}

bool InvariantCertificate::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

void seal(InvariantCertificate& cert) {
  cert.add_check("sigma = b_plus - b_minus", cert.sigma == cert.b_plus - cert.b_minus);
  cert.add_check("chi = 2 - 2 b1 + b_plus + b_minus", cert.chi == 2 - 2 * cert.b1 + cert.b_plus + cert.b_minus);
  cert.add_check("2 chi + 3 sigma = K^2", 2 * cert.chi + 3 * cert.sigma == cert.k_squared);
  for (const auto& c : cert.checks)
    if (!c.passed) throw ConsistencyError(cert.manifold + ": check failed: " + c.name);
}

}  // namespace geographer
