#include "render.hpp"
#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>

namespace sigmatau {

namespace {

std::string pow_str(uint64_t p, int64_t a) {
    std::string s = std::to_string(p);
    if (a != 1) s += "^" + std::to_string(a);
    return s;
}

std::string fmt_double(real_x x, int sig = 12) {
    return rx_format(x, sig);
}

} // namespace

std::string factored_string(const PrimeTable& pt, const Factorization& f) {
    if (f.pe.empty()) return "1";
    // collapse runs of consecutive primes sharing an exponent
    std::string out;
    size_t i = 0;
    while (i < f.pe.size()) {
        size_t j = i;
        uint64_t k_i = pt.pi(f.pe[i].first);  // consecutive primes <=> consecutive pi
        while (j + 1 < f.pe.size() && f.pe[j + 1].second == f.pe[i].second &&
               pt.pi(f.pe[j + 1].first) == k_i + (j + 1 - i))
            ++j;
        if (!out.empty()) out += "·";
        if (j - i >= 2) {
            out += std::to_string(f.pe[i].first) + ".." + std::to_string(f.pe[j].first);
            if (f.pe[i].second != 1) out += "^" + std::to_string(f.pe[i].second);
        } else {
            out += pow_str(f.pe[i].first, f.pe[i].second);
            if (j > i) out += "·" + pow_str(f.pe[j].first, f.pe[j].second);
        }
        i = j + 1;
    }
    return out;
}

std::string ratio_string(const std::vector<std::pair<uint64_t, int64_t>>& delta) {
    std::string num, den;
    for (auto [p, d] : delta) {
        std::string& side = d > 0 ? num : den;
        if (!side.empty()) side += "·";
        side += pow_str(p, d > 0 ? d : -d);
    }
    if (num.empty()) num = "1";
    return den.empty() ? num : num + "/" + den;
}

std::string tau_ratio_string(const ChampionSequence& seq,
                             const std::vector<std::pair<uint64_t, int64_t>>& delta,
                             uint32_t base_index) {
    Factorization base = seq.factorization(base_index);
    std::map<uint64_t, uint32_t> be;
    for (auto [p, a] : base.pe) be[p] = a;
    uint64_t num = 1, den = 1;
    bool exact = true;
    real_x approx = 1;
    for (auto [p, d] : delta) {
        auto it = be.find(p);
        int64_t a = it == be.end() ? 0 : it->second;
        uint64_t hi = (uint64_t)(a + d + 1), lo = (uint64_t)(a + 1);
        uint64_t g = std::gcd(hi, lo);
        hi /= g; lo /= g;
        approx *= (real_x)hi / (real_x)lo;
        if (exact && (__builtin_mul_overflow(num, hi, &num) || __builtin_mul_overflow(den, lo, &den)))
            exact = false;
        if (exact) {
            g = std::gcd(num, den);
            num /= g; den /= g;
        }
    }
    if (!exact) return "~" + fmt_double(approx);
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string champions_csv(const ChampionSequence& seq) {
    std::ostringstream os;
    os << "index,factorization,n,sigma_over_n,tau,log_tau,eps_hi,eps_lo\n";
    for (const Record& r : seq.records()) {
        os << r.index << "," << factored_string(seq.table(), seq.factorization(r.index)) << ",";
        if (r.n_exact) os << r.n;
        os << "," << fmt_double(r.sigma_over_n()) << ",";
        if (r.tau_exact) os << r.tau;
        os << "," << fmt_double(r.log_tau) << ","
           << (r.eps_hi == HUGE_VALQ ? "inf" : fmt_double(r.eps_hi)) << ","
           << fmt_double(r.eps_lo) << "\n";
    }
    return os.str();
}

std::string hits_csv(const ChampionSequence& seq, const EnumerateResult& er) {
    std::ostringstream os;
    os << "n_over_ref,tau_ratio_over_ref,ben,f1,log_n\n";
    for (const BenefitHit& h : er.hits) {
        auto delta = hit_vs_base(seq, er, h, er.ref_index);
        os << ratio_string(delta) << "," << tau_ratio_string(seq, delta, er.ref_index) << ","
           << fmt_double(h.ben) << "," << fmt_double(h.f1) << "," << fmt_double(h.log_n) << "\n";
    }
    return os.str();
}

HullExport export_hull(uint64_t limit) {
    if (limit < 1 || limit > 20'000'000)
        throw std::invalid_argument("hull limit must be in [1, 2e7]");

    // champions out past the limit so the chain's last vertex slope covers all points
    PrimeTable pt(100000);
    real_x eps_min = 0.03Q;
    auto seqp = std::make_unique<ChampionSequence>(pt, eps_min);
    while (seqp->records().back().n_exact && seqp->records().back().n <= limit) {
        eps_min /= 2;
        seqp = std::make_unique<ChampionSequence>(pt, eps_min);
    }
    const ChampionSequence& seq = *seqp;

    struct V { real_x x, y, slope_after; uint64_t n; uint32_t index; };
    std::vector<V> verts;
    for (const Record& r : seq.records()) {
        if (!r.n_exact || r.n > limit) break;
        verts.push_back({r.log_tau, r.log_sigma_n, r.eps_lo, r.n, r.index});
    }

    SmallFactorizer sf((uint32_t)std::min<uint64_t>(limit, UINT32_MAX - 1));
    std::ostringstream pts;
    pts << "n,log_tau,log_sigma_over_n\n";
    for (uint64_t n = 1; n <= limit; ++n) {
        ArithStats s = stats(sf.factorize(n));
        pts << n << "," << fmt_double(s.log_tau) << "," << fmt_double(s.log_sigma_n) << "\n";
        // dominance: point must sit on or below the chain
        real_x x = s.log_tau, y = s.log_sigma_n, bound;
        size_t j = 0;
        while (j + 1 < verts.size() && verts[j + 1].x <= x) ++j;
        if (j + 1 < verts.size() && verts[j].x <= x) {
            real_x t = (x - verts[j].x) / (verts[j + 1].x - verts[j].x);
            bound = verts[j].y + t * (verts[j + 1].y - verts[j].y);
        } else {
            bound = verts.back().y + verts.back().slope_after * (x - verts.back().x);
        }
        if (y > bound + 1e-12Q)
            throw std::logic_error("hull dominance violated at n = " + std::to_string(n));
    }

    std::ostringstream vs;
    vs << "index,n,factorization,log_tau,log_sigma_over_n,eps_hi,eps_lo\n";
    for (const V& v : verts) {
        const Record& r = seq.records()[v.index];
        vs << v.index << "," << v.n << "," << factored_string(pt, seq.factorization(v.index)) << ","
           << fmt_double(r.log_tau) << "," << fmt_double(r.log_sigma_n) << ","
           << (r.eps_hi == HUGE_VALQ ? "inf" : fmt_double(r.eps_hi)) << "," << fmt_double(r.eps_lo)
           << "\n";
    }
    return {pts.str(), vs.str(), (size_t)limit, verts.size()};
}

} // namespace sigmatau
