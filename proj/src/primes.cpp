#include "primes.hpp"
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sigmatau {

PrimeTable::PrimeTable(uint64_t limit) : limit_(limit) {
    if (limit < 2) return;
    primes_.push_back(2);
    if (limit < 3) return;

    uint64_t sq = (uint64_t)std::sqrt((double)limit);
    while (sq > 1 && sq * sq > limit) --sq;
    while ((sq + 1) * (sq + 1) <= limit) ++sq;

    // plain odd sieve for the base primes up to sqrt(limit); index i <-> 2i+3
    size_t ncomp = sq >= 3 ? (size_t)((sq - 1) / 2) : 0;
    std::vector<uint8_t> comp(ncomp, 0);
    std::vector<uint64_t> base;
    for (size_t i = 0; i < ncomp; ++i) {
        if (comp[i]) continue;
        uint64_t p = 2 * i + 3;
        base.push_back(p);
        for (uint64_t j = (p * p - 3) / 2; j < ncomp; j += p) comp[j] = 1;
    }

    if (primes_.capacity() < 16)
        primes_.reserve(limit > 100 ? (size_t)((double)limit / std::log((double)limit) * 1.15) : 32);

    // segments of 2^21 odd candidates (span 2^22 integers); one bit per odd
    const uint64_t SEG_BITS = 1ull << 21;
    std::vector<uint64_t> bits(SEG_BITS / 64);
    for (uint64_t lo = 3; lo <= limit; lo += 2 * SEG_BITS) {
        uint64_t hi = std::min(limit, lo + 2 * SEG_BITS - 2);
        uint64_t nbits = (hi - lo) / 2 + 1;
        std::fill(bits.begin(), bits.end(), 0);
        for (uint64_t p : base) {
            if (p * p > hi) break;
            uint64_t start = ((lo + p - 1) / p) * p;
            if (start < p * p) start = p * p;
            if (!(start & 1)) start += p;
            for (uint64_t m = start; m <= hi; m += 2 * p)
                bits[((m - lo) / 2) >> 6] |= 1ull << (((m - lo) / 2) & 63);
        }
        for (uint64_t b = 0; b < nbits; ++b)
            if (!(bits[b >> 6] & (1ull << (b & 63)))) primes_.push_back(lo + 2 * b);
    }
}

uint64_t PrimeTable::p(uint64_t k) const {
    if (k < 1 || k > primes_.size())
        throw std::out_of_range("prime index " + std::to_string(k) +
                                " outside sieved table (size " + std::to_string(primes_.size()) + ")");
    return primes_[k - 1];
}

uint64_t PrimeTable::pi(uint64_t x) const {
    if (x > limit_)
        throw std::out_of_range("pi(" + std::to_string(x) + ") beyond sieve limit " + std::to_string(limit_));
    return (uint64_t)(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

bool PrimeTable::is_prime(uint64_t n) const {
    if (n > limit_)
        throw std::out_of_range("is_prime(" + std::to_string(n) + ") beyond sieve limit");
    return std::binary_search(primes_.begin(), primes_.end(), n);
}

Primorial primorial(const PrimeTable& pt, uint64_t k) {
    if (k > pt.size()) throw std::out_of_range("primorial: k beyond sieve");
    Primorial r{k, true, 1, true, 1, 0, 0};
    for (uint64_t i = 1; i <= k; ++i) {
        uint64_t p = pt.p(i);
        if (r.n_exact && __builtin_mul_overflow(r.n, p, &r.n)) { r.n_exact = false; r.n = 0; }
        if (r.phi_exact && __builtin_mul_overflow(r.phi, p - 1, &r.phi)) { r.phi_exact = false; r.phi = 0; }
        r.log_n += rx_log((real_x)p);
        r.log_phi += rx_log((real_x)(p - 1));
    }
    return r;
}

real_x lambda_k(const PrimeTable& pt, uint64_t k) {
    if (k < 2) throw std::domain_error("lambda_k needs k >= 2");
    real_x lk = rx_log((real_x)k);
    return lk + rx_log(lk) - (real_x)pt.p(k) / (real_x)k;
}

real_x delta_k(const PrimeTable& pt, uint64_t k) {
    uint64_t pk = pt.p(k);
    if (pk <= 100'000'000) return (real_x)2 / rx_sqrt((real_x)pk);
    return (real_x)0.2Q / rx_log((real_x)pk);
}

real_x beta_k(uint64_t k) {
    if (k < 2) throw std::domain_error("beta_k needs k >= 2");
    real_x lk = rx_log((real_x)k);
    return (rx_log(lk) - (real_x)0.9427Q) / lk;
}

real_x eta_k(uint64_t k) {
    if (k < 2) throw std::domain_error("eta_k needs k >= 2");
    real_x log2 = rx_log((real_x)2);
    // loglog 2^k = log(k log 2); positive for k >= 2
    return -rx_log(log2) / rx_log((real_x)k * log2);
}

real_x rho_k(const PrimeTable& pt, uint64_t k) {
    real_x log2 = rx_log((real_x)2);
    return rx_exp_gamma() * (-rx_log(log2) + eta_k(k) + beta_k(k) + delta_k(pt, k));
}

} // namespace sigmatau
