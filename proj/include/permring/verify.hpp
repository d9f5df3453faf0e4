#pragma once

#include "permring/cache.hpp"
#include "permring/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace permring {

struct SuiteResult {
  SuiteResult() = default;
  explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

  std::string name;
  bool passed = true;
  bool skipped = false;
  long checked = 0;
  std::vector<std::string> witnesses;
  std::string note;

  void fail(std::string witness);
};

/// Nonzero coefficients other than ±1 seen by the coefficient suites.
struct CoefficientMonitor {
  long observed = 0;
  std::map<Rational, std::string> unusual;  // value → first witness
  void record(const Rational& c, const std::string& where);
};

struct VerifyOptions {
  int n = 4;
  std::uint64_t seed = 20240611;
  int trials = 200;
  const DiskCache* cache = nullptr;
};

/// Reduced Betti numbers of every (K_{A_m})_I and its hat complex, m ≤ n,
/// against a_{2k} and the degree-k total binom(m+1, 2k)·a_{2k}.
SuiteResult verify_betti(int n, const DiskCache* cache = nullptr);

/// walks / memo / rewrite agreement: exhaustive for |I| ≤ max_exhaustive,
/// then `trials` random pairs at |I| = random_size.
SuiteResult verify_coefficient_methods(int max_exhaustive, int random_size, int trials, std::uint64_t seed,
                                       CoefficientMonitor* monitor = nullptr);

/// Homology solve against rewrite, exhaustive for |I| ≤ max_size.
SuiteResult verify_homology_coefficients(int max_size, CoefficientMonitor* monitor = nullptr);

/// Strategy agreement (exhaustive up to max_exhaustive, `trials` random at
/// random_size) and vanishing of every generator of M_I up to max_generators.
SuiteResult verify_rewriting(int max_exhaustive, int random_size, int trials, int max_generators, std::uint64_t seed);

/// Unit, annihilation, associativity and graded commutativity over [n+1]
/// with |I1 ∪ I2| ≤ max_union (and all disjoint triples for associativity).
SuiteResult verify_ring_axioms(int n, int max_union);

/// Every cup structure constant against the homology pairing.
SuiteResult verify_cup_oracle(int n, int max_union);

/// The join lemma on every alternating z over disjoint nonempty I1, I2 ⊆
/// [n+1] with |I1 ∪ I2| ≤ max_union.
SuiteResult verify_join_lemma(int n, int max_union);

/// For random classes and adjacent transpositions: the dual action is a
/// ring map, relabeling commutes with reduce, and the two are adjoint.
SuiteResult verify_weyl_equivariance(int n, int trials, std::uint64_t seed);

/// Report-only summary of the monitor.
SuiteResult monitor_report(const CoefficientMonitor& monitor);

/// The default suite list used by `permring verify`.
std::vector<SuiteResult> run_verify(const VerifyOptions& opts);

Json to_json(const SuiteResult& r);

}  // namespace permring
