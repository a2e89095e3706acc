// arith.hpp
// Factorizations, log-domain multiplicative statistics, and the scalar
// figures of merit f1, f2, G, c_k built from them.
#pragma once
#include "realx.hpp"
#include "primes.hpp"
#include <cstdint>
#include <utility>
#include <vector>

namespace sigmatau {

struct Factorization {
    std::vector<std::pair<uint64_t, uint32_t>> pe;  // ascending primes, exponents >= 1
};

// Everything downstream works on logs so numbers far beyond u64 stay exact
// enough (binary128 throughout); tau is also kept as an exact integer while
// it fits.
struct ArithStats {
    real_x log_n = 0;
    real_x log_sigma_n = 0;   // log(sigma(n)/n)
    real_x log_tau = 0;
    real_x log_n_phi = 0;     // log(n/phi(n))
    uint64_t tau = 1;
    bool tau_exact = true;
    uint32_t omega = 0;

    real_x sigma_over_n() const { return rx_exp(log_sigma_n); }
    real_x n_over_phi() const { return rx_exp(log_n_phi); }
    real_x log_phi() const { return log_n - log_n_phi; }
};

// log(sigma(p^a)/p^a) = log((1 - p^-(a+1))/(1 - 1/p)), 0 for a = 0
real_x log_sigma_ratio(real_x p, uint32_t a);

ArithStats stats(const Factorization& f);

// exact small-range companions (throw std::out_of_range on overflow risk)
uint64_t tau_u64(const Factorization& f);
uint64_t sigma_u64(const Factorization& f);
uint64_t phi_u64(const Factorization& f);

// f1(n) = (sigma(n)/n) / loglog(3 tau(n)), defined for all n >= 1
real_x f1_value(real_x log_sigma_n, real_x log_tau);
inline real_x f1_value(const ArithStats& s) { return f1_value(s.log_sigma_n, s.log_tau); }

// f2(n) = sigma(n)/n - e^g loglog(e tau) - e^g logloglog(e^e tau)
real_x f2_value(real_x log_sigma_n, real_x log_tau);
inline real_x f2_value(const ArithStats& s) { return f2_value(s.log_sigma_n, s.log_tau); }

// G(n) = n/phi(n) - e^g loglog phi(n); needs phi(n) >= 2, i.e. n >= 3
real_x big_g(const ArithStats& s);

// c_k = loglog phi(N_k) * G(N_k)
real_x c_k(const PrimeTable& pt, uint64_t k);

// smallest-prime-factor factorizer for n up to a few 1e7
class SmallFactorizer {
public:
    explicit SmallFactorizer(uint32_t bound = 10'000'000);
    uint32_t bound() const { return (uint32_t)(spf_.size() - 1); }
    void grow(uint32_t new_bound);
    Factorization factorize(uint64_t n) const;
private:
    std::vector<uint32_t> spf_;
};

// exact min of phi over (lo_excl, hi_incl], segmented, no per-element factorize
struct PhiWindowMin {
    uint64_t min_phi;
    uint64_t argmin;
};
PhiWindowMin min_phi_in(uint64_t lo_excl, uint64_t hi_incl);

} // namespace sigmatau
