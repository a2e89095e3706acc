// primes.hpp
// Prime infrastructure: segmented odd-only sieve, primorials, and the
// effective prime-counting quantities lambda/delta/beta/eta/rho used by the
// omega-large bound chain.
#pragma once
#include "realx.hpp"
#include <cstdint>
#include <vector>

namespace sigmatau {

inline constexpr uint64_t DEFAULT_SIEVE_LIMIT = 2'500'000;
inline constexpr uint64_t HEAVY_SIEVE_LIMIT = 100'000'100;

// indices of the three pivot primes in the bound chain (1-based: p(1) = 2)
inline constexpr uint64_t K0 = 15985;    // p = 175939
inline constexpr uint64_t K1 = 166000;   // p = 2248723
inline constexpr uint64_t K2 = 5761456;  // p = 10^8 + 7, needs a heavy sieve
inline constexpr double LAMBDA_FLOOR = 0.9427;

class PrimeTable {
public:
    explicit PrimeTable(uint64_t limit);

    uint64_t limit() const { return limit_; }
    const std::vector<uint64_t>& primes() const { return primes_; }
    size_t size() const { return primes_.size(); }

    // 1-based: p(1) = 2; throws std::out_of_range past the sieve
    uint64_t p(uint64_t k) const;
    // #{primes <= x}; x must not exceed the sieved limit
    uint64_t pi(uint64_t x) const;
    bool is_prime(uint64_t n) const;

private:
    uint64_t limit_;
    std::vector<uint64_t> primes_;
};

struct Primorial {
    uint64_t k;
    bool n_exact;        // product still fits u64 (k <= 15)
    uint64_t n;          // valid when n_exact
    bool phi_exact;      // phi fits u64 (k <= 16)
    uint64_t phi;
    real_x log_n;        // always valid
    real_x log_phi;
};

Primorial primorial(const PrimeTable& pt, uint64_t k);

// lambda_k = log k + loglog k - p_k/k  (>= 0.9427 for k >= K0)
real_x lambda_k(const PrimeTable& pt, uint64_t k);

// delta(k) = 2/sqrt(p_k) if p_k <= 1e8, else 0.2/log p_k  (jumps up at the switch)
real_x delta_k(const PrimeTable& pt, uint64_t k);

// beta(k) = (loglog k - 0.9427)/log k
real_x beta_k(uint64_t k);

// eta(k) = -loglog 2 / loglog 2^k
real_x eta_k(uint64_t k);

// rho(k) = e^gamma * (-loglog 2 + eta + beta + delta)
real_x rho_k(const PrimeTable& pt, uint64_t k);

} // namespace sigmatau
