#include "fgf/mersenne.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>

namespace fgf {

namespace {

// Deterministic witnesses for n < 3317044064679887385961981.
constexpr unsigned long kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
const mpz_class kProvenBound("3317044064679887385961981");
constexpr int kExtraRounds = 16;

bool strong_probable_prime(const mpz_class& n, const mpz_class& a, const mpz_class& d, unsigned s) {
  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const mpz_class nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

std::vector<unsigned> small_primes(std::uint32_t bound) {
  std::vector<bool> sieve(bound + 1, true);
  std::vector<unsigned> out;
  for (std::uint32_t i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j <= bound; j += i) sieve[j] = false;
  }
  return out;
}

// Brent's variant of Pollard rho on x -> x^2 + c. Returns a nontrivial factor
// or 0 once `budget` iterations are spent.
mpz_class brent_rho(const mpz_class& n, std::uint64_t& budget, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  constexpr std::uint64_t kBatch = 128;
  while (budget > 0) {
    const mpz_class c = 1 + mpz_class(static_cast<unsigned long>(rng() % 1000000));
    mpz_class y = 2 + mpz_class(static_cast<unsigned long>(rng() % 1000000)), x, ys, q = 1, g = 1;
    std::uint64_t r = 1;
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      std::uint64_t k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        const std::uint64_t m = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < m; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        budget = budget > m ? budget - m : 0;
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      // batch overshot: step back one at a time
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

void add_factor(std::map<mpz_class, PrimePower>& acc, const mpz_class& p, unsigned e, bool probable) {
  auto& slot = acc[p];
  slot.prime = p;
  slot.exponent += e;
  slot.probable = slot.probable || probable;
}

}  // namespace

bool is_probable_prime(const mpz_class& n, bool* proven) {
  if (proven) *proven = true;
  if (n < 2) return false;
  for (unsigned long b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  mpz_class d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  for (unsigned long b : kBases)
    if (!strong_probable_prime(n, mpz_class(b), d, s)) return false;
  if (n < kProvenBound) return true;
  if (proven) *proven = false;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  gmp_randclass gen(gmp_randinit_mt);
  gen.seed(static_cast<unsigned long>(rng()));
  for (int i = 0; i < kExtraRounds; ++i) {
    mpz_class a = gen.get_z_range(n - 3) + 2;
    if (!strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

PartialFactorization try_factorize(const mpz_class& n, const FactorOptions& options) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "factorize needs n >= 1");
  PartialFactorization out;
  std::map<mpz_class, PrimePower> acc;
  mpz_class rest = n;
  static const std::vector<unsigned> primes = small_primes(1u << 16);
  for (unsigned p : primes) {
    if (p > options.trial_bound) break;
    if (mpz_class(p) * p > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    if (e) add_factor(acc, mpz_class(p), e, false);
  }
  std::vector<mpz_class> stack;
  if (rest > 1) stack.push_back(rest);
  std::uint64_t seed = options.seed;
  while (!stack.empty()) {
    mpz_class m = stack.back();
    stack.pop_back();
    bool proven = true;
    if (is_probable_prime(m, &proven)) {
      add_factor(acc, m, 1, !proven);
      continue;
    }
    mpz_class root;
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
      stack.push_back(root);
      stack.push_back(root);
      continue;
    }
    std::uint64_t budget = options.rho_iterations;
    mpz_class d = brent_rho(m, budget, seed++);
    if (d == 0) {
      out.unfactored *= m;
      continue;
    }
    stack.push_back(d);
    stack.push_back(m / d);
  }
  for (auto& [p, pp] : acc) out.factors.push_back(pp);
  return out;
}

Factorization factorize(const mpz_class& n, const FactorOptions& options) {
  PartialFactorization pf = try_factorize(n, options);
  if (!pf.complete())
    throw Error(ErrorCode::FactorBudgetExceeded,
                "cofactor " + pf.unfactored.get_str() + " resisted the rho budget");
  return std::move(pf.factors);
}

PsiValue psi_of(const Factorization& f) {
  PsiValue sum = 0;
  for (const auto& pp : f) sum += PsiValue(mpz_class(1), pp.prime);
  sum.canonicalize();
  return sum;
}

PsiValue psi(const mpz_class& n, const FactorOptions& options) { return psi_of(factorize(n, options)); }

std::vector<unsigned> primes_up_to(unsigned n) {
  if (n < 2) return {};
  return small_primes(n);
}

MersenneScan mersenne_scan(const FrobeniusData& fd, unsigned lmax, const ScanOptions& options) {
  if (!fd.ordinary)
    throw Error(ErrorCode::NotOrdinary, "trace " + std::to_string(fd.t) + " is divisible by p");
  if (lmax > options.lmax_bound)
    throw Error(ErrorCode::BudgetExceeded,
                "lmax " + std::to_string(lmax) + " above bound " + std::to_string(options.lmax_bound));

  auto make_row = [&fd, &options](unsigned ell) {
    MersenneRow row;
    row.ell = ell;
    row.count = count_over_extension(fd, ell);
    const mpz_class n1 = static_cast<unsigned long>(fd.n1);
    row.integral = mpz_divisible_p(row.count.get_mpz_t(), n1.get_mpz_t()) != 0;
    row.e_ell = row.count / n1;
    if (!row.integral) return row;
    PartialFactorization pf = try_factorize(row.e_ell, options.factor);
    row.factors = std::move(pf.factors);
    row.unfactored = pf.unfactored;
    row.complete = pf.complete();
    if (row.complete) row.psi = psi_of(row.factors);
    return row;
  };

  MersenneScan scan;
  const std::vector<unsigned> ells = primes_up_to(lmax);
  if (options.threads <= 1) {
    for (unsigned ell : ells) scan.rows.push_back(make_row(ell));
  } else {
    // rows are independent; results are collected in ell order
    std::size_t next = 0;
    std::vector<MersenneRow> done(ells.size());
    std::vector<std::pair<std::size_t, std::future<MersenneRow>>> inflight;
    while (next < ells.size() || !inflight.empty()) {
      while (next < ells.size() && inflight.size() < options.threads) {
        inflight.emplace_back(next, std::async(std::launch::async, make_row, ells[next]));
        ++next;
      }
      done[inflight.front().first] = inflight.front().second.get();
      inflight.erase(inflight.begin());
    }
    scan.rows = std::move(done);
  }
  for (std::size_t i = 0; i < scan.rows.size(); ++i) {
    const auto& r = scan.rows[i];
    if (!r.complete) continue;
    if (!scan.argmin || r.psi < scan.rows[*scan.argmin].psi) scan.argmin = i;
  }
  return scan;
}

AtMostTwoReport at_most_two_check(const std::vector<MersenneRow>& rows) {
  AtMostTwoReport report;
  std::map<mpz_class, std::vector<unsigned>> seen;
  for (const auto& r : rows) {
    if (!r.complete)
      throw Error(ErrorCode::IncompleteFactorization, "row ell=" + std::to_string(r.ell) + " is incomplete");
    for (const auto& pp : r.factors) seen[pp.prime].push_back(r.ell);
  }
  report.primes_seen = seen.size();
  for (auto& [p, ells] : seen) {
    if (ells.size() > 2) {
      report.pass = false;
      report.offending.emplace_back(p, ells);
    }
  }
  return report;
}

PsiSumBoundReport psi_sum_bound_report(const std::vector<MersenneRow>& rows, unsigned bound) {
  PsiSumBoundReport report;
  report.bound = bound;
  std::map<mpz_class, bool> primes;
  std::vector<unsigned> covered;
  for (const auto& r : rows) {
    if (r.ell > bound) continue;
    if (!r.complete)
      throw Error(ErrorCode::IncompleteFactorization, "row ell=" + std::to_string(r.ell) + " is incomplete");
    covered.push_back(r.ell);
    report.sum_psi += r.psi;
    for (const auto& pp : r.factors) primes[pp.prime] = true;
  }
  for (unsigned ell : primes_up_to(bound))
    if (std::find(covered.begin(), covered.end(), ell) == covered.end())
      throw Error(ErrorCode::InvalidArgument, "rows do not cover ell=" + std::to_string(ell));
  for (const auto& [p, unused] : primes) report.psi_product += PsiValue(mpz_class(1), p);
  report.sum_psi.canonicalize();
  report.psi_product.canonicalize();
  report.twice_psi_product = 2 * report.psi_product;
  report.twice_psi_product.canonicalize();
  report.holds = report.sum_psi <= report.twice_psi_product;
  return report;
}

std::string to_string(const PsiValue& v) { return v.get_str(); }

}  // namespace fgf
