#include "superchampion.hpp"
#include <algorithm>
#include <map>

namespace sigmatau {

real_x psi(uint64_t p, uint32_t alpha) {
    if (p < 2) throw std::invalid_argument("psi needs a prime");
    if (alpha == 0) return HUGE_VALQ;
    real_x rp = (real_x)p;
    // (p-1)/(p^(alpha+1) - p); p^(alpha+1) is exact in binary128 far beyond need
    real_x num = rp - 1;
    real_x den = rx_ipow(rp, alpha + 1) - rp;
    return rx_log1p(num / den) / rx_log1p((real_x)1 / alpha);
}

real_x theta(uint64_t p, uint32_t alpha, real_x eps) {
    if (alpha == 0) return 0;
    return log_sigma_ratio((real_x)p, alpha) - eps * rx_log((real_x)(alpha + 1));
}

real_x g1_of_eps(real_x eps) {
    return 1 / expm1q(eps * rx_log((real_x)2));
}

AlphaChoice alpha_for(uint64_t p, real_x eps) {
    if (!(eps > 0)) throw std::domain_error("alpha_for needs eps > 0");
    uint32_t a = 0;
    for (;;) {
        real_x ps = psi(p, a + 1);
        real_x gap = rx_abs(ps - eps);
        if (gap <= 1e-30Q * rx_abs(eps)) return {a + 1, true};  // eps == psi(p, a+1)
        if (ps < eps) return {a, false};
        ++a;
    }
}

std::vector<CriticalStep> critical_stream(const PrimeTable& pt, real_x eps_min,
                                          real_x* next_below) {
    if (!(eps_min > 0)) throw std::domain_error("eps_min must be positive");
    std::vector<CriticalStep> st;
    real_x below = 0;  // largest value that fell under the floor
    bool complete = false;
    for (uint64_t p : pt.primes()) {
        real_x e1 = psi(p, 1);
        if (e1 < eps_min) {
            below = std::max(below, e1);
            complete = true;
            break;
        }
        for (uint32_t a = 1;; ++a) {
            real_x e = a == 1 ? e1 : psi(p, a);
            if (e < eps_min) {
                below = std::max(below, e);
                break;
            }
            st.push_back({e, g1_of_eps(e), p, a});
        }
    }
    if (!complete)
        throw std::out_of_range("sieve limit too small to enumerate all critical values >= eps_min");
    if (next_below) *next_below = below;

    std::sort(st.begin(), st.end(), [](const CriticalStep& x, const CriticalStep& y) {
        return x.eps > y.eps;
    });
    for (size_t i = 1; i < st.size(); ++i) {
        real_x gap = rx_abs(st[i - 1].g1 - st[i].g1);
        if (gap < (real_x)TIE_TOLERANCE_G1)
            throw TieError("critical values psi(" + std::to_string(st[i - 1].p) + "," +
                           std::to_string(st[i - 1].alpha) + ") and psi(" + std::to_string(st[i].p) +
                           "," + std::to_string(st[i].alpha) + ") too close: |g1 gap| = " +
                           rx_format(gap, 6));
    }
    return st;
}

ChampionSequence::ChampionSequence(const PrimeTable& pt, real_x eps_min)
    : pt_(pt), eps_min_(eps_min), stream_(critical_stream(pt, eps_min, &eps_next_)) {
    records_.reserve(stream_.size() + 1);
    Record r{};
    r.eps_hi = HUGE_VALQ;
    r.eps_lo = stream_.empty() ? eps_next_ : stream_[0].eps;
    r.n = 1;
    r.n_exact = true;
    r.tau = 1;
    r.tau_exact = true;
    records_.push_back(r);

    std::map<uint64_t, uint32_t> exps;
    for (size_t i = 0; i < stream_.size(); ++i) {
        const CriticalStep& cs = stream_[i];
        uint32_t& e = exps[cs.p];
        if (cs.alpha != e + 1)
            throw std::logic_error("stream ordering broke the one-step exponent invariant");
        e = cs.alpha;

        Record nx = r;
        nx.index = (uint32_t)(i + 1);
        nx.p = cs.p;
        nx.alpha = cs.alpha;
        nx.eps_hi = cs.eps;
        nx.eps_lo = i + 1 < stream_.size() ? stream_[i + 1].eps : eps_next_;
        real_x rp = (real_x)cs.p;
        nx.log_n += rx_log(rp);
        nx.log_sigma_n += log_sigma_ratio(rp, cs.alpha) - log_sigma_ratio(rp, cs.alpha - 1);
        nx.log_tau += rx_log((real_x)(cs.alpha + 1)) - rx_log((real_x)cs.alpha);
        if (cs.alpha == 1) {
            nx.log_n_phi += rx_log(rp) - rx_log(rp - 1);
            nx.omega = r.omega + 1;
        }
        if (nx.n_exact && __builtin_mul_overflow(nx.n, cs.p, &nx.n)) { nx.n_exact = false; nx.n = 0; }
        if (nx.tau_exact) {
            // tau gains (alpha+1)/alpha: replace the factor exactly
            uint64_t t = nx.tau / cs.alpha * (cs.alpha + 1);
            if (nx.tau % cs.alpha != 0 || t < nx.tau) { nx.tau_exact = false; nx.tau = 0; }
            else nx.tau = t;
        }
        records_.push_back(nx);
        r = nx;
    }
}

Factorization ChampionSequence::factorization(uint32_t index) const {
    if (index >= records_.size()) throw std::out_of_range("champion index out of range");
    std::map<uint64_t, uint32_t> exps;
    for (uint32_t i = 0; i < index; ++i) exps[stream_[i].p] = stream_[i].alpha;
    Factorization f;
    for (auto [p, a] : exps) f.pe.push_back({p, a});
    return f;
}

std::pair<uint32_t, uint32_t> ChampionSequence::locate(real_x eps) const {
    if (eps < eps_min_) throw std::out_of_range("eps below the generated floor");
    // count stream values > eps (strictly); handle an exact hit separately
    uint32_t lo = 0, hi = (uint32_t)stream_.size();
    while (lo < hi) {
        uint32_t mid = (lo + hi) / 2;
        if (stream_[mid].eps > eps) lo = mid + 1;
        else hi = mid;
    }
    // lo = #{values > eps}; an exact hit sits at stream_[lo]
    if (lo < stream_.size()) {
        real_x gap = rx_abs(stream_[lo].eps - eps);
        if (gap <= 1e-30Q * eps) return {lo, lo + 1};
    }
    return {lo, lo};
}

void ChampionSequence::validate(uint32_t index) const {
    Factorization f = factorization(index);
    const Record& r = records_[index];
    // test parameter strictly inside the validity interval
    real_x eps = r.eps_hi == HUGE_VALQ ? r.eps_lo * 2 : (r.eps_hi + r.eps_lo) / 2;
    size_t j = 0;
    for (uint64_t p : pt_.primes()) {
        AlphaChoice ac = alpha_for(p, eps);
        if (ac.tied) throw std::logic_error("validate: interval midpoint landed on a critical value");
        uint32_t expect = 0;
        if (j < f.pe.size() && f.pe[j].first == p) expect = f.pe[j++].second;
        if (ac.alpha != expect)
            throw std::logic_error("validate: champion " + std::to_string(index) + " exponent of " +
                                   std::to_string(p) + " is " + std::to_string(expect) +
                                   ", bracketing wants " + std::to_string(ac.alpha));
        if (expect == 0) break;  // exponents only shrink with p; all later ones are 0 too
    }
    if (j != f.pe.size()) throw std::logic_error("validate: support extends past the bracketing cutoff");
    ArithStats s = stats(f);
    if (rx_abs(s.log_n - r.log_n) > 1e-25Q * (1 + rx_abs(r.log_n)) ||
        rx_abs(s.log_sigma_n - r.log_sigma_n) > 1e-25Q * (1 + rx_abs(r.log_sigma_n)) ||
        rx_abs(s.log_tau - r.log_tau) > 1e-25Q * (1 + rx_abs(r.log_tau)) ||
        rx_abs(s.log_n_phi - r.log_n_phi) > 1e-25Q * (1 + rx_abs(r.log_n_phi)))
        throw std::logic_error("validate: incremental stats drifted from a fresh computation");
}

} // namespace sigmatau
