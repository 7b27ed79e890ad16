#include "geographer/bundle_manifold.hpp"

namespace geographer {

void BundleManifoldSpec::validate() const {
  if (g < 1) throw InvalidParameter("genus g must be at least 1");
  if (d < 0) throw InvalidParameter("d must be non-negative");
  if (d > k) throw InvalidParameter("d must not exceed k");
  if (k > g) throw InvalidParameter("k must not exceed g");
  require_valid_parameters(d, k, euler.tag);
}

std::string BundleManifoldSpec::name() const {
  return "B(" + std::to_string(d) + "," + std::to_string(k) + "," + std::to_string(g) + ";" +
         std::to_string(static_cast<int>(euler.tag)) + ")";
}

BundleManifoldSpec bundle_spec(int d, int k, int g, int tag) {
  return BundleManifoldSpec{d, k, g, EulerClassSpec{euler_tag_from_int(tag), std::nullopt, 0}};
}

Int canonical_class(int g) {
  if (g < 1) throw InvalidParameter("genus g must be at least 1");
  return 2 * static_cast<Int>(g) - 2;
}

namespace {

int b1_closed_form(int d, int k, EulerTag e) { return e == EulerTag::Zero ? 2 * k - d + 2 : 2 * k - d + 1; }

}  // namespace

BundleAnalysis analyze(const BundleManifoldSpec& spec) {
  spec.validate();
  const auto [d, k, g, euler_spec] = spec;
  const MappingTorus y(monodromy_word(d, k, g), g);

  BundleAnalysis out{spec, y.monodromy().entries, wang_cohomology(y), {}, {}, {}};
  out.euler = validate_euler_class(out.wang, euler_spec, d, k);
  const IntMatrix j = intersection_form(g);
  out.pairing = lefschetz_pairing(out.wang, out.euler, out.wang.invariant_basis, j);

  InvariantCertificate& cert = out.certificate;
  cert.manifold = spec.name();
  cert.b1 = bundle_b1(out.wang, out.euler);
  const Int q_rank = static_cast<Int>(rank(out.pairing.q));
  cert.degeneracy_oracle = degeneracy_oracle(out.pairing.q, static_cast<int>(cert.b1));
  cert.degeneracy = degeneracy_closed_form(d, k, out.euler.tag);
  cert.nullity = nullity_closed_form(d, k, out.euler.tag);

  // free circle action: chi = 0 and sigma = 0, so b+ = b- = b1 - 1
  cert.sigma = 0;
  cert.chi = 0;
  cert.b_plus = cert.b1 - 1;
  cert.b_minus = cert.b1 - 1;
  cert.k_squared = 0;
  const Int multiple = canonical_class(g);
  cert.k_dot_omega = CanonicalPairing{multiple, multiple > 0 ? 1 : 0, "PD(K) = (2g-2) T, T = fiber torus"};
  const auto kappa = kodaira_classify(cert.k_squared, multiple);
  if (!kappa) throw ConsistencyError(cert.manifold + ": canonical class outside the Kodaira table");
  cert.kappa = *kappa;
  cert.minimal = Minimality{true, "assumed: Kodaira dimension is taken on a minimal model"};

  cert.add_check("invariant subspace rank = 2k - d",
                 out.wang.invariant_basis.cols() == static_cast<std::size_t>(2 * k - d));
  cert.add_check("mapping torus b1 = b2", out.wang.b1 == out.wang.b2);
  cert.add_check("Gysin b1 = closed form", cert.b1 == b1_closed_form(d, k, out.euler.tag));
  cert.add_check("Q skew-symmetric", out.pairing.q.is_skew_symmetric());
  cert.add_check("rank Q even", q_rank % 2 == 0);
  cert.add_check("degeneracy oracle = closed form", *cert.degeneracy_oracle == cert.degeneracy);
  cert.add_check("rank Q = b1 - degeneracy", q_rank == cert.b1 - cert.degeneracy);
  const NullityCheck nc = nullity_necessary_check(out.wang, out.euler, j, d, k);
  cert.add_check("nullity <= degeneracy (and 0 for e = 0)", nc.passed);
  cert.add_check("degeneracy <= b1", cert.degeneracy <= cert.b1);
  cert.add_check("Kodaira dimension 1 iff g >= 2",
                 (g >= 2) == (cert.kappa == KodairaDimension::One) &&
                     (g == 1) == (cert.kappa == KodairaDimension::Zero));

  cert.citations = {
      {"b1", "Gysin sequence of the circle bundle over the mapping torus"},
      {"sigma", "free circle action"},
      {"chi", "free circle action"},
      {"degeneracy", "b1 - rank Q, Q(a,b) = <a u b u [omega], [M]>; closed form d (e=0), d+1 (e!=0)"},
      {"nullity", "closed form: 0 (e=0), d (e!=0, d!=k), d+1 (e!=0, d=k)"},
      {"kappa", "signs of K^2 and K.[omega] on the minimal model"},
      {"k_dot_omega", "PD(K) = (2g-2) T"},
  };
  seal(cert);
  return out;
}

InvariantCertificate construct(const BundleManifoldSpec& spec) { return analyze(spec).certificate; }

std::vector<BundleManifoldSpec> bundle_grid(int grid_max) {
  std::vector<BundleManifoldSpec> grid;
  for (int g = 1; g <= grid_max; ++g)
    for (int k = 0; k <= g; ++k)
      for (int d = 0; d <= k; ++d)
        for (int tag = 0; tag <= 2; ++tag) {
          if (tag == 1 && d == 0) continue;
          if (tag == 2 && d == k) continue;
          grid.push_back(bundle_spec(d, k, g, tag));
        }
  return grid;
}

GridReport verify_bundle_grid(int grid_max, PairingMutation mutation) {
  GridReport report;
  for (const auto& spec : bundle_grid(grid_max)) {
    ++report.cases;
    const auto fail = [&](const std::string& reason) {
      report.failures.push_back({spec.d, spec.k, spec.g, spec.euler.tag, reason});
    };
    const auto pass = [&](const std::string& name, bool ok) {
      if (ok) ++report.passes[name];
      else fail(name);
      return ok;
    };
    try {
      const MappingTorus y(monodromy_word(spec.d, spec.k, spec.g), spec.g);
      const WangData wang = wang_cohomology(y);
      const EulerClass e = validate_euler_class(wang, spec.euler, spec.d, spec.k);
      const IntMatrix j = intersection_form(spec.g);
      const PairingMatrix q = lefschetz_pairing(wang, e, wang.invariant_basis, j, mutation);
      const int b1 = bundle_b1(wang, e);
      const int q_rank = static_cast<int>(rank(q.q));
      const int oracle = degeneracy_oracle(q.q, b1);
      const int closed = degeneracy_closed_form(spec.d, spec.k, e.tag);
      const int nullity = nullity_closed_form(spec.d, spec.k, e.tag);
      pass("degeneracy oracle = closed form", oracle == closed);
      pass("Gysin b1 = closed form", b1 == b1_closed_form(spec.d, spec.k, e.tag));
      pass("Q skew-symmetric", q.q.is_skew_symmetric());
      pass("rank Q even", q_rank % 2 == 0);
      pass("rank Q = b1 - degeneracy", q_rank == b1 - closed);
      pass("nullity <= degeneracy <= b1", 0 <= nullity && nullity <= closed && closed <= b1);
      pass("nullity = 0 for e = 0", !e.is_zero() || nullity == 0);
      const Int chi = 0, sigma = 0;
      pass("2 chi + 3 sigma = 0", 2 * chi + 3 * sigma == 0 && 2 - 2 * b1 + 2 * (b1 - 1) == chi);
    } catch (const std::exception& ex) {
      fail(std::string("exception: ") + ex.what());
    }
  }
  return report;
}

}  // namespace geographer
