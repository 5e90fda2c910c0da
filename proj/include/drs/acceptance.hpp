#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "drs/calculus.hpp"
#include "drs/core.hpp"

namespace drs::acceptance {

struct Check {
  std::string name;
  bool pass = false;
  double value = 0;   // residual or measured quantity
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;
  bool pass() const;
  std::string line() const;  // "[PASS] 3 Riemann bilinear identity (...)"
};

struct Options {
  std::uint64_t seed = 0;
};

inline constexpr int kNumCriteria = 12;

CriterionResult run_criterion(int id, const Options& opt);
std::vector<CriterionResult> run_all(const Options& opt);

struct NamedSurface {
  std::string name;
  QuadComplex complex;
};

// Every surface the repository ships, as produced by the generators.
std::vector<NamedSurface> shipped_surfaces();

// Shared helpers for randomized checks.
cplx random_cplx(std::mt19937_64& rng);
VertexFunction random_function(std::mt19937_64& rng, int n);
DiamondForm random_form(std::mt19937_64& rng, int num_quads);
// Random combination of a basis of closed type-diamond forms.
std::vector<DiamondForm> closed_form_basis(const Surface& s);
DiamondForm random_combination(std::mt19937_64& rng, const std::vector<DiamondForm>& basis);

QuadComplex random_torus(std::uint64_t seed, int m = 4, int n = 4);
QuadComplex random_genus3(std::uint64_t seed);

}  // namespace drs::acceptance
