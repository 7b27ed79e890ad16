#include "geographer/fiber_sum.hpp"

#include <numeric>

namespace geographer {

namespace {

struct Overloaded {
  int operator()(const EllipticSurface& e) const { return e.n; }
  int operator()(const DolgachevSurface&) const { return 1; }
};

}  // namespace

void validate(const EllipticSurfaceSpec& spec) {
  if (const auto* e = std::get_if<EllipticSurface>(&spec)) {
    if (e->n < 1) throw InvalidParameter("elliptic surface E(n) needs n >= 1");
  } else {
    const auto& dg = std::get<DolgachevSurface>(spec);
    if (dg.p < 2 || dg.q < 2) throw InvalidParameter("Dolgachev multiplicities must be at least 2");
    if (std::gcd(dg.p, dg.q) != 1) throw InvalidParameter("Dolgachev multiplicities must be coprime");
  }
}

std::string name(const EllipticSurfaceSpec& spec) {
  if (const auto* e = std::get_if<EllipticSurface>(&spec)) return "E(" + std::to_string(e->n) + ")";
  const auto& dg = std::get<DolgachevSurface>(spec);
  return "E(1)_{" + std::to_string(dg.p) + "," + std::to_string(dg.q) + "}";
}

int elliptic_index(const EllipticSurfaceSpec& spec) { return std::visit(Overloaded{}, spec); }

InvariantCertificate elliptic_invariants(const EllipticSurfaceSpec& spec) {
  validate(spec);
  const Int n = elliptic_index(spec);
  InvariantCertificate cert;
  cert.manifold = name(spec);
  cert.sigma = -8 * n;
  cert.b1 = 0;
  cert.chi = 12 * n;
  const Int b2 = cert.chi - 2;
  cert.b_plus = (b2 + cert.sigma) / 2;
  cert.b_minus = (b2 - cert.sigma) / 2;
  cert.k_squared = 0;
  cert.degeneracy = 0;
  cert.nullity = 0;
  cert.add_check("chi = -3 sigma / 2 (K^2 = 0)", 2 * cert.chi + 3 * cert.sigma == 0);

  if (std::holds_alternative<EllipticSurface>(spec)) {
    const Int multiple = n - 2;
    cert.k_dot_omega = CanonicalPairing{multiple, multiple > 0 ? 1 : (multiple < 0 ? -1 : 0),
                                        "PD(K) = (n-2) F, F = regular fiber"};
    const auto kappa = kodaira_classify(0, multiple);
    cert.kappa = kappa.value_or(KodairaDimension::NegativeInfinity);
    cert.minimal = n >= 2 ? Minimality{true, "E(n), n >= 2, has no exceptional spheres"}
                          : Minimality{false, "E(1) is a nine-fold blow-up of CP^2"};
  } else {
    cert.k_dot_omega = CanonicalPairing{std::nullopt, 1, "cited: Dolgachev surfaces have Kodaira dimension 1"};
    cert.kappa = KodairaDimension::One;
    cert.minimal = Minimality{true, "cited: Dolgachev surfaces are minimal"};
  }
  cert.citations = {
      {"sigma", "E(n) has signature -8n"},
      {"chi", "E(n) has Euler characteristic 12n"},
      {"k_dot_omega", cert.k_dot_omega.basis},
  };
  seal(cert);
  return cert;
}

void FiberSumSpec::validate() const {
  geographer::validate(base);
  if (const auto* e = std::get_if<EllipticSurface>(&base); e && e->n < 2)
    throw InvalidParameter("E(1) fiber sums are not used; signature -8 goes through a Dolgachev surface");
  if (d < 0 || d > k) throw InvalidParameter("parameters must satisfy 0 <= d <= k");
  if (g < 2 || g < k) throw InvalidParameter("genus must satisfy g >= max(k, 2)");
}

std::string FiberSumSpec::name() const {
  const std::string params = std::to_string(d) + "," + std::to_string(k) + "," + std::to_string(g);
  if (const auto* e = std::get_if<EllipticSurface>(&base)) return "E(" + std::to_string(e->n) + "," + params + ")";
  return geographer::name(base) + "#B(" + params + ";0)";
}

InvariantCertificate fiber_sum_invariants(const FiberSumSpec& spec) {
  spec.validate();
  const InvariantCertificate elliptic = elliptic_invariants(spec.base);
  const BundleAnalysis bundle = analyze(spec.summand());
  const InvariantCertificate& summand = bundle.certificate;
  const bool dolgachev = std::holds_alternative<DolgachevSurface>(spec.base);
  const Int n = elliptic_index(spec.base);

  InvariantCertificate cert;
  cert.manifold = spec.name();
  // Novikov additivity; the gluing region contributes nothing
  cert.sigma = elliptic.sigma + summand.sigma;
  // t and s bound in the elliptic side, so two classes of B die
  cert.b1 = elliptic.b1 + summand.b1 - 2;
  // chi(T^2 x D^2) = 0
  cert.chi = elliptic.chi + summand.chi;
  const Int b2 = cert.chi - 2 + 2 * cert.b1;
  cert.b_plus = (b2 + cert.sigma) / 2;
  cert.b_minus = (b2 - cert.sigma) / 2;
  cert.k_squared = 0;
  cert.degeneracy = spec.d;
  if (cert.degeneracy == 0) cert.nullity = 0;

  cert.add_check("sigma = -8n", cert.sigma == -8 * n);
  cert.add_check("b1 = 2k - d", cert.b1 == 2 * spec.k - spec.d);
  cert.add_check("chi additivity = -3 sigma / 2", 2 * cert.chi == -3 * cert.sigma);
  cert.add_check("degeneracy = summand degeneracy", summand.degeneracy == spec.d &&
                                                        summand.degeneracy_oracle == Int{spec.d});

  if (!dolgachev) {
    const Int multiple = *elliptic.k_dot_omega.torus_multiple + *summand.k_dot_omega.torus_multiple + 2;
    cert.add_check("K.[omega] = n - 2 + 2g", multiple == n - 2 + 2 * spec.g);
    cert.k_dot_omega = CanonicalPairing{multiple, multiple > 0 ? 1 : 0, "PD(K) = (n-2+2g) T"};
    const auto kappa = kodaira_classify(cert.k_squared, multiple);
    if (!kappa) throw ConsistencyError(cert.manifold + ": canonical class outside the Kodaira table");
    cert.kappa = *kappa;
  } else {
    cert.k_dot_omega = CanonicalPairing{std::nullopt, 1, "cited: Dolgachev surfaces have Kodaira dimension 1"};
    cert.kappa = KodairaDimension::One;
  }
  cert.add_check("Kodaira dimension 1", cert.kappa == KodairaDimension::One);
  cert.minimal = Minimality{true, "cited: a fiber sum of minimal manifolds along a square-zero torus is minimal"};

  cert.citations = {
      {"sigma", "Novikov additivity"},
      {"b1", "b1(B) - 2: t and s become null-homologous"},
      {"chi", "additivity along a torus, chi(T^2) = 0"},
      {"degeneracy", "degeneracy d of the e = 0 summand"},
      {"nullity", cert.nullity ? "bounded above by degeneracy 0" : "not determined"},
      {"k_dot_omega", cert.k_dot_omega.basis},
      {"minimal", cert.minimal.basis},
  };
  seal(cert);
  return cert;
}

TorusWitness torus_witness(const BundleManifoldSpec& summand) {
  summand.validate();
  if (summand.euler.tag != EulerTag::Zero) throw InvalidParameter("fiber sums only use summands with e = 0");
  return TorusWitness{summand.name(), "T = t x s: section of Y -> S^1 times the S^1 factor", 0, true};
}

}  // namespace geographer
