#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cgsb/lie_data.hpp"
#include "cgsb/rules.hpp"

namespace cgsb {

struct SelftestOptions {
  bool quick = false;       // smaller caps, fewer samples
  unsigned jobs = 1;
  std::uint64_t seed = 20240601;
  std::string data_dir;     // Lie files are read from <data_dir>/lie when set
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// A Lie algebra used by the self-test, loaded from the data directory when
/// one is configured, otherwise built in.
struct NamedLie {
  std::string name;
  std::shared_ptr<const LieData> lie;
};
std::vector<NamedLie> selftest_algebras(const SelftestOptions& opt);

/// Random monomial: word length <= max_len over ∂, L_n, R_n with n <= max_index.
ModuleMonomial random_monomial(const Alphabet& al, std::mt19937_64& rng, std::size_t max_len, std::uint32_t max_index);
/// 1..max_terms random monomials with small random rational coefficients.
ModuleElement random_element(const Alphabet& al, std::mt19937_64& rng, std::size_t max_terms, std::size_t max_len,
                             std::uint32_t max_index);

CriterionResult check_bfk(const SelftestOptions& opt);
CriterionResult check_u3(const SelftestOptions& opt);
CriterionResult check_u2(const SelftestOptions& opt);
CriterionResult check_basis(const SelftestOptions& opt);
CriterionResult check_pbw(const SelftestOptions& opt);
CriterionResult check_confluence(const SelftestOptions& opt);
CriterionResult check_orientation(const SelftestOptions& opt);
CriterionResult check_rediscovery(const SelftestOptions& opt);

/// Runs criteria 1..8 in order; `each` sees every result as it finishes.
std::vector<CriterionResult> run_selftest(const SelftestOptions& opt,
                                          const std::function<void(const CriterionResult&)>& each = {});

}  // namespace cgsb
