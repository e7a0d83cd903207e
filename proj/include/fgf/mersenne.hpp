#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fgf/curves.hpp"

namespace fgf {

struct PrimePower {
  mpz_class prime;
  unsigned exponent = 0;
  /// Only a probable prime: above the range where the fixed Miller-Rabin
  /// bases are a proof.
  bool probable = false;
};

using Factorization = std::vector<PrimePower>;

struct FactorOptions {
  std::uint32_t trial_bound = 1u << 16;
  /// Pollard-rho iterations allowed per composite cofactor, summed over restarts.
  std::uint64_t rho_iterations = std::uint64_t{1} << 22;
  std::uint64_t seed = 0x5eed;
};

/// Deterministic Miller-Rabin. Proven for n < 3.3e24 (bases 2..41); above
/// that, extra seeded bases make it a probable-prime test.
bool is_probable_prime(const mpz_class& n, bool* proven = nullptr);

/// Sorted prime factorization: trial division, then Brent's Pollard rho with
/// deterministic constants. Throws FactorBudgetExceeded instead of guessing.
Factorization factorize(const mpz_class& n, const FactorOptions& options = {});

/// Partial result used by the scan: whatever was found plus the cofactor
/// that resisted the budget (1 when complete).
struct PartialFactorization {
  Factorization factors;
  mpz_class unfactored = 1;
  bool complete() const { return unfactored == 1; }
};
PartialFactorization try_factorize(const mpz_class& n, const FactorOptions& options = {});

/// Exact sum of 1/p over the distinct primes p dividing n.
using PsiValue = mpq_class;
PsiValue psi(const mpz_class& n, const FactorOptions& options = {});
PsiValue psi_of(const Factorization& f);

struct MersenneRow {
  unsigned ell = 0;
  mpz_class count;   // #E(F_{q^ell})
  mpz_class e_ell;   // count / #E(F_q)
  bool integral = false;
  Factorization factors;
  mpz_class unfactored = 1;
  bool complete = false;
  PsiValue psi;      // meaningful only when complete
};

struct MersenneScan {
  std::vector<MersenneRow> rows;
  std::optional<std::size_t> argmin;  // index into rows of the smallest complete psi
};

struct ScanOptions {
  unsigned lmax_bound = 60;
  unsigned threads = 1;
  FactorOptions factor;
};

std::vector<unsigned> primes_up_to(unsigned n);

/// One row per prime ell <= lmax. Requires an ordinary curve (NotOrdinary).
MersenneScan mersenne_scan(const FrobeniusData& fd, unsigned lmax, const ScanOptions& options = {});

struct AtMostTwoReport {
  bool pass = true;
  /// prime -> the ells whose e_ell it divides, for primes dividing three or more.
  std::vector<std::pair<mpz_class, std::vector<unsigned>>> offending;
  std::size_t primes_seen = 0;
};

/// Every rational prime divides at most two of the e_ell.
/// Throws IncompleteFactorization if any row lacks a full factorization.
AtMostTwoReport at_most_two_check(const std::vector<MersenneRow>& rows);

struct PsiSumBoundReport {
  unsigned bound = 0;
  PsiValue sum_psi;          // sum over ell <= B of psi(e_ell)
  PsiValue psi_product;      // psi(prod e_ell)
  PsiValue twice_psi_product;
  bool holds = false;        // sum_psi <= twice_psi_product
};

/// Rows must include every prime ell <= B (InvalidArgument otherwise) with
/// complete factorizations (IncompleteFactorization otherwise).
PsiSumBoundReport psi_sum_bound_report(const std::vector<MersenneRow>& rows, unsigned bound);

std::string to_string(const PsiValue& v);

}  // namespace fgf
