// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Every comparison is exact integer equality; time budgets are wall-clock seconds.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "geographer/document.hpp"
#include "oracles.hpp"

using namespace geographer;

namespace {

constexpr double kGridBudget = 5.0;
constexpr double kOracleBudget = 2.0;
constexpr double kPropertyBudget = 10.0;

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget;  // seconds, 0 = none
  std::function<Outcome()> body;
};

bool legal(int d, int k, int tag) { return !((tag == 1 && d == 0) || (tag == 2 && d == k)); }

Outcome realization_grid() {
  Outcome o;
  std::size_t count = 0;
  for (Int a = 0; a >= -80; a -= 8)
    for (Int b = 0; b <= 12; ++b)
      for (Int c = 0; c <= b; ++c) {
        const Triple t{a, b, c};
        if (!is_admissible(t)) continue;
        ++count;
        const Recipe r = realize(t);
        const InvariantCertificate& cert = r.certificate;
        if (!(r.realized == t) || cert.sigma != a || cert.b1 != b || cert.degeneracy != c)
          o.fail(t.to_string() + " realized as " + r.realized.to_string());
        if (cert.kappa != KodairaDimension::One || !cert.minimal.minimal)
          o.fail(t.to_string() + ": kappa or minimality wrong");
      }
  o.detail = o.passed ? std::to_string(count) + " triples" : o.detail;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t cases = 0;
  for (const auto& spec : bundle_grid(8)) {
    const BundleAnalysis a = analyze(spec);
    ++cases;
    const int closed = spec.euler.tag == EulerTag::Zero ? spec.d : spec.d + 1;
    if (a.certificate.degeneracy_oracle != Int{closed} || a.certificate.degeneracy != closed)
      o.fail(spec.name() + ": oracle degeneracy differs from closed form");
  }
  if (o.passed) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome gysin_grid() {
  Outcome o;
  for (const auto& spec : bundle_grid(8)) {
    const WangData w = wang_cohomology(MappingTorus(monodromy_word(spec.d, spec.k, spec.g), spec.g));
    const EulerClass e = validate_euler_class(w, spec.euler, spec.d, spec.k);
    const int expected = e.is_zero() ? 2 * spec.k - spec.d + 2 : 2 * spec.k - spec.d + 1;
    if (bundle_b1(w, e) != expected) o.fail(spec.name() + ": Gysin b1 mismatch");
  }
  return o;
}

Outcome pairing_rank() {
  Outcome o;
  for (const auto& spec : bundle_grid(8)) {
    const BundleAnalysis a = analyze(spec);
    const auto r = static_cast<Int>(oracle::rational_rank(a.pairing.q));
    if (r % 2 != 0) o.fail(spec.name() + ": odd rank");
    if (r != a.certificate.b1 - spec.d - (spec.euler.tag == EulerTag::Zero ? 0 : 1))
      o.fail(spec.name() + ": rank Q != b1 - degeneracy");
    if (!a.pairing.q.is_skew_symmetric()) o.fail(spec.name() + ": Q not skew");
  }
  return o;
}

Outcome monodromy_blocks() {
  Outcome o;
  for (int g = 1; g <= 8; ++g)
    for (int k = 0; k <= g; ++k)
      for (int d = 0; d <= k; ++d) {
        const std::string name = "(" + std::to_string(d) + "," + std::to_string(k) + "," + std::to_string(g) + ")";
        const IntMatrix m = compose_word(monodromy_word(d, k, g), g).entries;
        const IntMatrix shifted = m - IntMatrix::identity(2 * g);
        if (2 * g - oracle::rational_rank(shifted) != static_cast<std::size_t>(2 * k - d))
          o.fail(name + ": fixed subspace rank");
        for (int i = 1; i <= g; ++i) {
          const std::size_t a = 2 * (i - 1), b = a + 1;
          for (std::size_t r = 0; r < m.rows(); ++r)
            if ((r != a && r != b && (m(r, a) != 0 || m(r, b) != 0)))
              o.fail(name + ": handle blocks mix");
          const IntMatrix block{{m(a, a), m(a, b)}, {m(b, a), m(b, b)}};
          IntMatrix expected;
          if (i <= d) expected = IntMatrix{{1, 0}, {1, 1}};
          else if (i <= k) expected = IntMatrix::identity(2);
          else expected = IntMatrix{{1, -1}, {-1, 2}};
          if (!(block == expected)) o.fail(name + ": block " + std::to_string(i));
          const IntMatrix fixed = block - IntMatrix::identity(2);
          const std::size_t kernel = 2 - oracle::rational_rank(fixed);
          const std::size_t want = i <= d ? 1 : (i <= k ? 2 : 0);
          if (kernel != want) o.fail(name + ": block kernel " + std::to_string(i));
        }
      }
  return o;
}

Outcome named_families() {
  Outcome o;
  std::size_t checked = 0;
  const auto expect = [&](const std::string& label, const InvariantCertificate& c, Int b1, Int degeneracy) {
    ++checked;
    if (c.b1 != b1 || c.degeneracy != degeneracy)
      o.fail(label + " = " + c.manifold + ": (b1, degeneracy) = (" + std::to_string(c.b1) + "," +
             std::to_string(c.degeneracy) + ")");
  };
  for (int l = 1; l <= 6; ++l) {
    // b = 2l
    for (int i = 0; i <= l - 1; ++i) {
      const int k = l - 1 + i;
      expect("B_0(" + std::to_string(i) + ")", construct(bundle_spec(2 * i, k, std::max(k, 2), 0)), 2 * l, 2 * i);
    }
    for (int i = 0; i <= l - 1; ++i) {
      const int k = l + i;
      expect("B_1(" + std::to_string(i) + ")", construct(bundle_spec(2 * i + 1, k, std::max(k, 2), 1)),
             2 * (l + i) - (2 * i + 1) + 1, 2 * (i + 1));
    }
    // b = 2l + 1
    for (int i = 1; i <= l; ++i) {
      const int k = l + i;
      expect("B_1(" + std::to_string(i) + ")", construct(bundle_spec(2 * i, k, std::max(k, 2), 1)), 2 * l + 1,
             2 * i + 1);
    }
    for (int i = 0; i <= l - 1; ++i) {
      const int k = l + i;
      expect("B_2(" + std::to_string(i) + ")", construct(bundle_spec(2 * i, k, std::max(k, 2), 2)), 2 * l + 1,
             2 * i + 1);
    }
  }
  if (o.passed) o.detail = std::to_string(checked) + " family members";
  return o;
}

Outcome fiber_sums() {
  Outcome o;
  for (int n = 2; n <= 10; ++n)
    for (int g = 2; g <= 6; ++g)
      for (int k = 0; k <= g; ++k)
        for (int d = 0; d <= k; ++d) {
          const InvariantCertificate c = fiber_sum_invariants(FiberSumSpec{EllipticSurface{n}, d, k, g});
          const Int multiple = c.k_dot_omega.torus_multiple.value_or(-1);
          if (c.sigma != -8 * n || c.b1 != 2 * k - d || multiple != n - 2 + 2 * g || multiple <= 0 ||
              c.degeneracy != d || 2 * c.chi + 3 * c.sigma != 0)
            o.fail(c.manifold);
        }
  return o;
}

Outcome nullity_points() {
  Outcome o;
  for (int g = 2; g <= 8; ++g) {
    const auto nullity = [g](int d, int k, int tag) { return construct(bundle_spec(d, k, g, tag)).nullity; };
    if (nullity(0, 0, 0) != Int{0}) o.fail("B(0,0,g;0)");
    if (nullity(1, 1, 1) != Int{2}) o.fail("B(1,1,g;1)");
    if (nullity(1, 1, 0) != Int{0}) o.fail("B(1,1,g;0)");
    if (nullity(2, 2, 1) != Int{3}) o.fail("B(2,2,g;1)");
  }
  if (is_null_admissible({0, 2, 1})) o.fail("(0,2,1) accepted");
  if (!std::holds_alternative<OpenCase>(realize_null({0, 3, 1}))) o.fail("(0,3,1) not open");
  return o;
}

Outcome simply_connected() {
  Outcome o;
  for (Int s = -8; s >= -80; s -= 8) {
    const Recipe r = simply_connected_geography(s);
    if (r.certificate.sigma != s || r.certificate.b1 != 0) o.fail("sigma " + std::to_string(s));
  }
  for (Int s : {-4, -12, -20, -81, 3}) {
    try {
      simply_connected_geography(s);
      o.fail("accepted sigma " + std::to_string(s));
    } catch (const InvalidParameter&) {
    }
  }
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> expo(-3, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const int g = 1 + trial % 6;
    std::uniform_int_distribution<int> handle(1, g);
    TwistWord w;
    const int length = 1 + trial % 10;
    for (int i = 0; i < length; ++i) {
      Int e = expo(rng);
      if (e == 0) e = 1;
      w.letters.push_back({(rng() % 2) ? curve_a(handle(rng), g) : curve_b(handle(rng), g), e});
    }
    const MonodromyMatrix m = compose_word(w, g);
    if (!(m.entries.transpose() * intersection_form(g) * m.entries == intersection_form(g)) ||
        !oracle::preserves_pairing(m.homology_action()))
      o.fail("word " + w.to_string() + " not symplectic");
  }
  for (const auto& spec : bundle_grid(8)) {
    const InvariantCertificate c = construct(spec);
    if (!c.nullity || !(*c.nullity <= c.degeneracy && c.degeneracy <= c.b1)) o.fail(spec.name() + ": bounds");
  }
  std::size_t documents = 0;
  const auto round_trip = [&](const CertificateDocument& doc) {
    ++documents;
    if (!(document_from_json(nlohmann::json::parse(to_json(doc).dump())) == doc)) o.fail(doc.recipe + ": round trip");
  };
  for (const auto& row : enumerate_region(-80, 12)) round_trip(make_document(row.recipe, "enumerate"));
  for (const auto& spec : bundle_grid(8))
    round_trip(make_document(construct(spec), "invariants", "bundle",
                             {{"d", spec.d}, {"k", spec.k}, {"g", spec.g}, {"e", static_cast<int>(spec.euler.tag)}}));
  if (o.passed) o.detail = "1000 words, " + std::to_string(documents) + " documents";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "realization grid, a in {0..-80}, b <= 12", kGridBudget, realization_grid},
      {2, "degeneracy oracle equals closed form, g <= 8", kOracleBudget, oracle_equivalence},
      {3, "Gysin b1 equals closed form, g <= 8", 0, gysin_grid},
      {4, "rank Q even and equal to b1 - degeneracy", 0, pairing_rank},
      {5, "monodromy fixes 2k - d dimensions, handle blocks", 0, monodromy_blocks},
      {6, "named bundle families, l <= 6", 0, named_families},
      {7, "fiber sums, n <= 10, g <= 6", 0, fiber_sums},
      {8, "nullity data points and open case", 0, nullity_points},
      {9, "simply connected geography", 0, simply_connected},
      {10, "symplectic words, nullity bounds, JSON round trip", kPropertyBudget, property_suites},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0 && seconds > c.budget) {
      std::ostringstream why;
      why << "over budget: " << seconds << " s > " << c.budget << " s";
      o.fail(why.str());
    }
    std::ostringstream line;
    line.precision(3);
    line << (o.passed ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << std::fixed << seconds << " s)";
    if (!o.detail.empty()) line << ": " << o.detail;
    std::cout << line.str() << '\n';
    if (!o.passed) ++failures;
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << '\n';
  return failures == 0 ? 0 : 1;
}
