#include "benefit.hpp"
#include <algorithm>
#include <map>
#include <set>

namespace sigmatau {

real_x ben_p(uint64_t p, uint32_t alpha, uint32_t beta, real_x eps) {
    if (alpha == beta) return 0;
    real_x inv = (real_x)1 / (real_x)p;
    real_x v = rx_log1p(-rx_ipow(inv, alpha + 1)) - rx_log1p(-rx_ipow(inv, beta + 1)) -
               eps * (rx_log((real_x)(alpha + 1)) - rx_log((real_x)(beta + 1)));
    return v;
}

real_x ben_total(const ChampionSequence& seq, uint32_t ref_index, const Factorization& n, real_x eps) {
    Factorization ref = seq.factorization(ref_index);
    std::map<uint64_t, std::pair<uint32_t, uint32_t>> ab;  // p -> (alpha, beta)
    for (auto [p, a] : ref.pe) ab[p].first = a;
    for (auto [p, b] : n.pe) ab[p].second = b;
    real_x s = 0;
    for (auto& [p, t] : ab) s += ben_p(p, t.first, t.second, eps);
    return s;
}

namespace {

struct Cand {
    uint32_t beta;
    real_x cost;
};

struct Dim {
    uint64_t p;
    uint32_t alpha;
    std::vector<Cand> cands;  // cost ascending
    real_x min_cost;
};

// deviation cost with the tiny-negative guard: at eps exactly critical the
// zero-cost move computes to +-1 ulp of 0
real_x cost_of(uint64_t p, uint32_t alpha, uint32_t beta, real_x eps) {
    real_x c = ben_p(p, alpha, beta, eps);
    if (c < 0) {
        if (c < -1e-25Q) throw std::logic_error("negative deviation cost; eps/reference mismatch");
        c = 0;
    }
    return c;
}

struct Dfs {
    const std::vector<Dim>& dims;
    const std::vector<real_x>& suffix_min;
    const Record& ref;
    std::vector<BenefitHit>& out;
    std::vector<std::tuple<uint64_t, uint32_t, uint32_t>> devs;
    real_x d_ln = 0, d_ls = 0, d_lt = 0, used = 0;

    void emit() {
        BenefitHit h;
        h.ben = used;
        h.log_n = ref.log_n + d_ln;
        h.log_sigma_n = ref.log_sigma_n + d_ls;
        h.log_tau = ref.log_tau + d_lt;
        h.f1 = f1_value(h.log_sigma_n, h.log_tau);
        h.devs = devs;
        out.push_back(h);
    }

    void run(size_t i, real_x remaining) {
        if (i == dims.size() || remaining < suffix_min[i]) {
            emit();
            return;
        }
        run(i + 1, remaining);
        const Dim& d = dims[i];
        real_x lp = rx_log((real_x)d.p);
        for (const Cand& c : d.cands) {
            if (c.cost > remaining) break;
            devs.push_back({d.p, d.alpha, c.beta});
            real_x s_ln = d_ln, s_ls = d_ls, s_lt = d_lt, s_used = used;
            d_ln += ((real_x)(int64_t)c.beta - (real_x)(int64_t)d.alpha) * lp;
            d_ls += log_sigma_ratio((real_x)d.p, c.beta) - log_sigma_ratio((real_x)d.p, d.alpha);
            d_lt += rx_log((real_x)(c.beta + 1)) - rx_log((real_x)(d.alpha + 1));
            used += c.cost;
            run(i + 1, remaining - c.cost);
            devs.pop_back();
            d_ln = s_ln; d_ls = s_ls; d_lt = s_lt; used = s_used;
        }
    }
};

EnumerateResult enumerate_core(const ChampionSequence& seq, uint32_t ref_index, real_x eps, real_x budget) {
    if (!(budget >= 0)) throw std::invalid_argument("budget must be >= 0");
    if (!(budget < eps * rx_log((real_x)2)))
        throw std::invalid_argument("budget " + rx_format(budget, 8) + " >= eps log 2 = " +
                                    rx_format(eps * rx_log((real_x)2), 8) +
                                    "; the hit set would be infinite");

    const auto& primes = seq.table().primes();
    Factorization ref = seq.factorization(ref_index);
    for (size_t j = 0; j < ref.pe.size(); ++j)
        if (ref.pe[j].first != primes[j])
            throw std::logic_error("champion support is not a prime prefix");

    std::vector<Dim> dims;
    size_t omega = ref.pe.size();
    for (size_t j = 0;; ++j) {
        if (j >= primes.size())
            throw std::out_of_range("sieve too small to bound added primes at this budget");
        uint32_t alpha = j < omega ? ref.pe[j].second : 0;
        uint64_t p = primes[j];
        if (alpha == 0) {
            // adding a fresh prime costs eps log 2 - log(1+1/p), increasing in p
            if (cost_of(p, 0, 1, eps) > budget) break;
        }
        Dim d{p, alpha, {}, 0};
        for (uint32_t b = alpha; b-- > 0;) {
            real_x c = cost_of(p, alpha, b, eps);
            if (c > budget) break;
            d.cands.push_back({b, c});
        }
        for (uint32_t b = alpha + 1;; ++b) {
            real_x c = cost_of(p, alpha, b, eps);
            if (c > budget) break;
            d.cands.push_back({b, c});
            if (b > alpha + 64) throw std::logic_error("runaway exponent walk");
        }
        if (d.cands.empty()) continue;
        std::sort(d.cands.begin(), d.cands.end(), [](const Cand& a, const Cand& b) {
            return a.cost < b.cost || (a.cost == b.cost && a.beta > b.beta);
        });
        d.min_cost = d.cands.front().cost;
        dims.push_back(std::move(d));
    }

    // hardest-to-move primes first so the suffix minimum prunes aggressively
    std::stable_sort(dims.begin(), dims.end(), [](const Dim& a, const Dim& b) {
        return a.min_cost > b.min_cost;
    });
    std::vector<real_x> suffix_min(dims.size() + 1, HUGE_VALQ);
    for (size_t i = dims.size(); i-- > 0;)
        suffix_min[i] = dims[i].min_cost < suffix_min[i + 1] ? dims[i].min_cost : suffix_min[i + 1];

    EnumerateResult er{ref_index, eps, budget, {}};
    const Record& r = seq.records()[ref_index];
    Dfs dfs{dims, suffix_min, r, er.hits, {}, 0, 0, 0, 0};
    dfs.run(0, budget);

    for (auto& h : er.hits) std::sort(h.devs.begin(), h.devs.end());
    std::sort(er.hits.begin(), er.hits.end(), [](const BenefitHit& a, const BenefitHit& b) {
        if (a.ben != b.ben) return a.ben < b.ben;
        if (a.log_n != b.log_n) return a.log_n < b.log_n;
        return a.devs < b.devs;
    });
    return er;
}

} // namespace

EnumerateResult enumerate_at(const ChampionSequence& seq, uint32_t eps_index, real_x budget) {
    if (eps_index < 1 || eps_index > seq.stream().size())
        throw std::out_of_range("eps index outside the generated stream");
    return enumerate_core(seq, eps_index, seq.stream()[eps_index - 1].eps, budget);
}

EnumerateResult enumerate_mid(const ChampionSequence& seq, uint32_t index, real_x budget) {
    if (index < 1 || index >= seq.records().size())
        throw std::out_of_range("record index outside the generated sequence");
    const Record& r = seq.records()[index];
    real_x eps = (r.eps_hi + r.eps_lo) / 2;
    return enumerate_core(seq, index, eps, budget);
}

namespace {

std::map<uint64_t, int64_t> stream_walk(const ChampionSequence& seq, uint32_t index,
                                        uint32_t base_index) {
    std::map<uint64_t, int64_t> delta;
    uint32_t lo = std::min(base_index, index), hi = std::max(base_index, index);
    int64_t sign = index >= base_index ? 1 : -1;
    for (uint32_t i = lo; i < hi; ++i) delta[seq.stream()[i].p] += sign;
    return delta;
}

std::vector<std::pair<uint64_t, int64_t>> compact(std::map<uint64_t, int64_t>&& delta) {
    std::vector<std::pair<uint64_t, int64_t>> out;
    for (auto [p, d] : delta)
        if (d != 0) out.push_back({p, d});
    return out;
}

} // namespace

std::vector<std::pair<uint64_t, int64_t>> record_vs_base(const ChampionSequence& seq,
                                                         uint32_t index, uint32_t base_index) {
    return compact(stream_walk(seq, index, base_index));
}

std::vector<std::pair<uint64_t, int64_t>> hit_vs_base(const ChampionSequence& seq,
                                                      const EnumerateResult& er,
                                                      const BenefitHit& hit, uint32_t base_index) {
    auto delta = stream_walk(seq, er.ref_index, base_index);
    for (auto [p, a, b] : hit.devs) delta[p] += (int64_t)b - (int64_t)a;
    return compact(std::move(delta));
}

CensusCount census_count(const ChampionSequence& seq, real_x x) {
    if (!(x >= 2.4Q))
        throw std::invalid_argument("census threshold must be >= 2.4 (tail bound is 2.32)");
    const auto& recs = seq.records();
    if (recs.back().omega < K0)
        throw std::invalid_argument("sequence too short for the census tail bound; "
                                    "generate down to psi(175939, 1)");

    CensusCount cc{x, 0, 0, 0, 0, 0};
    std::set<std::vector<std::pair<uint64_t, int64_t>>> seen;
    uint32_t base = 0;
    bool have_base = false;
    std::vector<real_x> f1s(recs.size());
    for (size_t i = 0; i < recs.size(); ++i) f1s[i] = f1_value(recs[i].log_sigma_n, recs[i].log_tau);

    for (uint32_t i = 2; i < recs.size(); ++i) {
        real_x maxf1 = f1s[i - 1] > f1s[i] ? f1s[i - 1] : f1s[i];
        if (maxf1 < x) continue;
        real_x budget = rx_log(maxf1 / x);
        if (!have_base) { base = i; have_base = true; }
        cc.windows_enumerated++;
        if (cc.window_min == 0) cc.window_min = i;
        cc.window_max = i;
        if (budget > cc.max_budget) cc.max_budget = budget;
        EnumerateResult er = enumerate_at(seq, i, budget);  // guards budget < eps log 2
        for (const BenefitHit& h : er.hits)
            if (h.f1 >= x) seen.insert(hit_vs_base(seq, er, h, base));
    }
    cc.count = seen.size();
    return cc;
}

} // namespace sigmatau
