#include "arith.hpp"
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sigmatau {

real_x log_sigma_ratio(real_x p, uint32_t a) {
    if (a == 0) return 0;
    // log(1 - p^-(a+1)) - log(1 - 1/p), both via log1p for accuracy
    real_x inv = 1 / p;
    return rx_log1p(-rx_ipow(inv, a + 1)) - rx_log1p(-inv);
}

ArithStats stats(const Factorization& f) {
    ArithStats s;
    uint64_t prev = 0;
    for (auto [p, a] : f.pe) {
        if (p < 2 || a == 0 || p <= prev) throw std::invalid_argument("malformed factorization");
        prev = p;
        real_x rp = (real_x)p;
        s.log_n += a * rx_log(rp);
        s.log_sigma_n += log_sigma_ratio(rp, a);
        s.log_tau += rx_log((real_x)(a + 1));
        s.log_n_phi += rx_log(rp) - rx_log(rp - 1);
        if (s.tau_exact && __builtin_mul_overflow(s.tau, (uint64_t)a + 1, &s.tau)) {
            s.tau_exact = false;
            s.tau = 0;
        }
        s.omega++;
    }
    return s;
}

uint64_t tau_u64(const Factorization& f) {
    uint64_t t = 1;
    for (auto [p, a] : f.pe)
        if (__builtin_mul_overflow(t, (uint64_t)a + 1, &t)) throw std::out_of_range("tau overflows u64");
    return t;
}

uint64_t sigma_u64(const Factorization& f) {
    uint64_t s = 1;
    for (auto [p, a] : f.pe) {
        // 1 + p + ... + p^a
        uint64_t term = 1, pw = 1;
        for (uint32_t i = 0; i < a; ++i) {
            if (__builtin_mul_overflow(pw, p, &pw) || __builtin_add_overflow(term, pw, &term))
                throw std::out_of_range("sigma overflows u64");
        }
        if (__builtin_mul_overflow(s, term, &s)) throw std::out_of_range("sigma overflows u64");
    }
    return s;
}

uint64_t phi_u64(const Factorization& f) {
    uint64_t r = 1;
    for (auto [p, a] : f.pe) {
        uint64_t term = p - 1;
        for (uint32_t i = 1; i < a; ++i)
            if (__builtin_mul_overflow(term, p, &term)) throw std::out_of_range("phi overflows u64");
        if (__builtin_mul_overflow(r, term, &r)) throw std::out_of_range("phi overflows u64");
    }
    return r;
}

real_x f1_value(real_x log_sigma_n, real_x log_tau) {
    // loglog(3 tau) = log(log 3 + log tau) > 0 always (log 3 > 1)
    return rx_exp(log_sigma_n) / rx_log(rx_log((real_x)3) + log_tau);
}

real_x f2_value(real_x log_sigma_n, real_x log_tau) {
    real_x eg = rx_exp_gamma();
    real_x e = rx_exp(1);
    return rx_exp(log_sigma_n) - eg * rx_log1p(log_tau) - eg * rx_log(rx_log(e + log_tau));
}

real_x big_g(const ArithStats& s) {
    real_x lphi = s.log_phi();
    if (!(lphi > 0)) throw std::domain_error("G(n) needs phi(n) >= 2");
    return s.n_over_phi() - rx_exp_gamma() * rx_log(lphi);
}

real_x c_k(const PrimeTable& pt, uint64_t k) {
    Factorization f;
    for (uint64_t i = 1; i <= k; ++i) f.pe.push_back({pt.p(i), 1});
    ArithStats s = stats(f);
    return rx_log(s.log_phi()) * big_g(s);
}

SmallFactorizer::SmallFactorizer(uint32_t bound) { grow(bound); }

void SmallFactorizer::grow(uint32_t new_bound) {
    if (spf_.size() > new_bound) return;
    spf_.assign((size_t)new_bound + 1, 0);
    for (uint64_t i = 2; i <= new_bound; ++i) {
        if (spf_[i]) continue;
        for (uint64_t j = i; j <= new_bound; j += i)
            if (!spf_[j]) spf_[j] = (uint32_t)i;
    }
}

Factorization SmallFactorizer::factorize(uint64_t n) const {
    if (n == 0) throw std::invalid_argument("factorize(0)");
    if (n >= spf_.size())
        throw std::out_of_range("factorize(" + std::to_string(n) + ") beyond spf bound; grow() first");
    Factorization f;
    while (n > 1) {
        uint64_t p = spf_[n];
        uint32_t a = 0;
        while (n % p == 0) { n /= p; ++a; }
        f.pe.push_back({p, a});
    }
    return f;
}

// Exact segmented phi over a window. phi[] accumulates prod p^(e-1)(p-1)
// over base primes via pure strided multiplies; pw[] tracks prod p^e so one
// final division per slot recovers the single leftover prime > sqrt(hi).
PhiWindowMin min_phi_in(uint64_t lo_excl, uint64_t hi_incl) {
    if (hi_incl <= lo_excl) throw std::invalid_argument("empty phi window");
    uint64_t sq = (uint64_t)std::sqrt((double)hi_incl);
    while (sq * sq > hi_incl) --sq;
    while ((sq + 1) * (sq + 1) <= hi_incl) ++sq;
    PrimeTable base(std::max<uint64_t>(sq, 2));

    const uint64_t S = 1ull << 22;
    std::vector<uint64_t> phi(S), pw(S);
    PhiWindowMin best{UINT64_MAX, 0};

    for (uint64_t L = lo_excl + 1; L <= hi_incl; L += S) {
        uint64_t R = std::min(hi_incl, L + S - 1);
        uint64_t len = R - L + 1;
        std::fill(phi.begin(), phi.begin() + len, 1);
        std::fill(pw.begin(), pw.begin() + len, 1);
        for (uint64_t p : base.primes()) {
            if (p * p > R) break;
            uint64_t m0 = ((L + p - 1) / p) * p;
            for (uint64_t m = m0; m <= R; m += p) {
                phi[m - L] *= p - 1;
                pw[m - L] *= p;
            }
            for (uint64_t q = p * p; q <= R; q *= p) {
                uint64_t q0 = ((L + q - 1) / q) * q;
                for (uint64_t m = q0; m <= R; m += q) {
                    phi[m - L] *= p;
                    pw[m - L] *= p;
                }
            }
        }
        for (uint64_t i = 0; i < len; ++i) {
            uint64_t r = (L + i) / pw[i];
            uint64_t v = r > 1 ? phi[i] * (r - 1) : phi[i];
            if (v < best.min_phi) { best.min_phi = v; best.argmin = L + i; }
        }
    }
    return best;
}

} // namespace sigmatau
