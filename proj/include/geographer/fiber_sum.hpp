#pragma once

// Invariants of elliptic surfaces and of the fiber sums
//   E(n,d,k,g) = E(n) #_{T' = T} B(d,k,g;0)          (n >= 2)
//   E(1)_{p,q} #_{T' = T} B(d,k,g;0)                 (signature -8)
// glued along a regular elliptic fiber T' and the torus T = t x s.

#include <string>
#include <variant>

#include "geographer/bundle_manifold.hpp"

namespace geographer {

struct EllipticSurface {
  int n = 2;
  friend bool operator==(const EllipticSurface&, const EllipticSurface&) = default;
};

/// E(1) with two multiple fibers of coprime multiplicities p, q >= 2.
struct DolgachevSurface {
  int p = 2;
  int q = 3;
  friend bool operator==(const DolgachevSurface&, const DolgachevSurface&) = default;
};

using EllipticSurfaceSpec = std::variant<EllipticSurface, DolgachevSurface>;

void validate(const EllipticSurfaceSpec& spec);
std::string name(const EllipticSurfaceSpec& spec);
/// Multiplicity n of the underlying E(n); 1 for Dolgachev surfaces.
int elliptic_index(const EllipticSurfaceSpec& spec);

InvariantCertificate elliptic_invariants(const EllipticSurfaceSpec& spec);

struct FiberSumSpec {
  EllipticSurfaceSpec base;
  int d = 0;
  int k = 0;
  int g = 2;

  void validate() const;
  std::string name() const;
  BundleManifoldSpec summand() const { return bundle_spec(d, k, g, 0); }
};

InvariantCertificate fiber_sum_invariants(const FiberSumSpec& spec);

/// The square-zero symplectic torus T = t x s in B(d,k,g;0) used as the
/// gluing locus.
struct TorusWitness {
  std::string manifold;
  std::string description;
  Int self_intersection = 0;
  bool symplectic = false;
};

TorusWitness torus_witness(const BundleManifoldSpec& summand);

}  // namespace geographer
