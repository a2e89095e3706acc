// verify.cpp
#include "verify.hpp"
#include "json.hpp"
#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace sigmatau {

int ClaimReport::passed() const {
    return (int)std::count_if(claims.begin(), claims.end(),
                              [](const Claim& c) { return c.status == "pass"; });
}
int ClaimReport::failed() const {
    return (int)std::count_if(claims.begin(), claims.end(),
                              [](const Claim& c) { return c.status == "fail"; });
}
int ClaimReport::skipped() const {
    return (int)std::count_if(claims.begin(), claims.end(),
                              [](const Claim& c) { return c.status == "skipped"; });
}

namespace {

using steady = std::chrono::steady_clock;

constexpr const char* REF = "reference-table";
constexpr const char* IDT = "identity";
constexpr const char* RCP = "recomputed";
constexpr const char* EXT = "external-sampled";

std::string join_u64(const std::vector<uint64_t>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

class Checker {
public:
    explicit Checker(ClaimReport& rep) : rep_(rep), last_(steady::now()) {}

    void close(const std::string& id, real_x computed, const std::string& expected, real_x tol,
               const char* prov) {
        push(id, rx_abs(computed - rx_parse(expected)) <= tol, rx_format(computed, 21), expected,
             prov, "abs " + rx_format(tol, 3));
    }
    // reference value printed with trailing digits cut: computed in [shown, shown + step)
    void trunc(const std::string& id, real_x computed, const std::string& expected, real_x step,
               const char* prov) {
        real_x shown = rx_parse(expected);
        push(id, computed >= shown && computed < shown + step, rx_format(computed, 21),
             expected + "...", prov, "trunc " + rx_format(step, 3));
    }
    void count(const std::string& id, uint64_t computed, uint64_t expected, const char* prov) {
        push(id, computed == expected, std::to_string(computed), std::to_string(expected), prov,
             "exact");
    }
    void text(const std::string& id, const std::string& computed, const std::string& expected,
              const char* prov) {
        push(id, computed == expected, computed, expected, prov, "exact");
    }
    void truth(const std::string& id, bool ok, const std::string& computed,
               const std::string& expected, const char* prov) {
        push(id, ok, computed, expected, prov, "exact");
    }
    void skip(const std::string& id, const std::string& why) {
        rep_.claims.push_back(Claim{id, "skipped", why, "", "", "", 0});
        last_ = steady::now();
    }

private:
    void push(const std::string& id, bool ok, std::string computed, std::string expected,
              const char* prov, std::string tol) {
        auto now = steady::now();
        double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        rep_.claims.push_back(Claim{id, ok ? "pass" : "fail", std::move(computed),
                                    std::move(expected), prov, std::move(tol), ms});
    }
    ClaimReport& rep_;
    steady::time_point last_;
};

ClaimReport make_report(const char* name, const VerifyConfig& cfg) {
    ClaimReport rep;
    rep.pipeline = name;
    rep.sieve_limit = cfg.effective_sieve_limit();
    rep.heavy = cfg.heavy;
    return rep;
}

} // namespace

Factorization make_m1(const PrimeTable& pt) {
    Factorization f;
    f.pe = {{2, 8}, {3, 5}, {5, 3}, {7, 2}, {11, 2}, {13, 2}};
    for (uint64_t p : pt.primes())
        if (p >= 17 && p <= 113) f.pe.push_back({p, 1});
    return f;
}

Factorization make_m2(const PrimeTable& pt) {
    Factorization f;
    f.pe = {{2, 18}, {3, 11}, {5, 7}, {7, 6}};
    for (uint64_t p : pt.primes()) {
        if (p < 11) continue;
        uint32_t a = p <= 19 ? 4 : p <= 47 ? 3 : p <= 277 ? 2 : p <= 45439 ? 1 : 0;
        if (!a) break;
        f.pe.push_back({p, a});
    }
    return f;
}

Factorization make_m3(const PrimeTable& pt) {
    // tail through 211 inclusive: the shifted family p*M3/211 needs 211 | M3,
    // and the 2.580303 reference limit matches only this form
    Factorization f;
    f.pe = {{2, 9}, {3, 5}, {5, 3}, {7, 3}, {11, 2}, {13, 2}, {17, 2}};
    for (uint64_t p : pt.primes())
        if (p >= 19 && p <= 211) f.pe.push_back({p, 1});
    return f;
}

ClaimReport verify_theorem1(const VerifyConfig& cfg) {
    ClaimReport rep = make_report("theorem1", cfg);
    Checker ck(rep);
    PrimeTable pt(1000);  // nothing here needs primes past p(15) = 47
    SmallFactorizer sf(100'000);
    const real_x egam = rx_exp_gamma();

    // --- additive bound: n/phi <= e^g loglog phi + G(6), equality at n = 6
    struct GRow {
        uint64_t n;
        const char* shown;
    };
    for (GRow r : {GRow{3, "2.15"}, {4, "2.65"}, {5, "0.67"}, {6, "3.65"}, {30, "2.45"},
                   {210, "1.96"}, {2310, "1.57"}})
        ck.close("t1.add.g_n" + std::to_string(r.n), big_g(stats(sf.factorize(r.n))), r.shown,
                 0.005Q, REF);
    ck.close("t1.add.g6_closed_form",
             big_g(stats(sf.factorize(6))) - (3 - egam * rx_log(rx_log(2))), "0", 1e-30Q, RCP);

    real_x gmax = -1e30Q;
    uint64_t garg = 0;
    for (uint64_t n = 3; n <= 30029; ++n) {
        real_x g = big_g(stats(sf.factorize(n)));
        if (g > gmax) {
            gmax = g;
            garg = n;
        }
    }
    ck.count("t1.add.argmax", garg, 6, RCP);
    ck.trunc("t1.add.max", gmax, "3.65278", 1e-5Q, REF);
    real_x gwide = -1e30Q;
    for (uint64_t n = 30030; n <= 99999; ++n) gwide = std::max(gwide, big_g(stats(sf.factorize(n))));
    ck.truth("t1.add.no_late_rise", gwide < gmax, rx_format(gwide, 21), "< max", RCP);

    // --- 3 loglog phi bound: exception list and the extremal ratio
    std::vector<uint64_t> exc3;
    for (uint64_t n = 3; n <= 2309; ++n) {
        ArithStats s = stats(sf.factorize(n));
        if (s.n_over_phi() > 3 * rx_log(s.log_phi())) exc3.push_back(n);
    }
    ck.text("t1.three.exceptions", join_u64(exc3),
            "3 4 5 6 8 10 12 14 18 20 24 30 36 42 60 66 84 90 120 210", REF);
    uint64_t viol3 = 0;
    for (uint64_t n = 2310; n <= 99999; ++n) {
        ArithStats s = stats(sf.factorize(n));
        if (s.n_over_phi() > 3 * rx_log(s.log_phi())) viol3++;
    }
    ck.count("t1.three.none_above", viol3, 0, RCP);
    real_x rmax = -1e30Q;
    uint64_t rarg = 0;
    for (uint64_t n = 3; n <= 30029; ++n) {
        ArithStats s = stats(sf.factorize(n));
        real_x r = s.n_over_phi() / rx_log(s.log_phi());
        if (r > rmax) {
            rmax = r;
            rarg = n;
        }
    }
    ck.count("t1.three.ratio_argmax", rarg, 12, REF);
    ck.trunc("t1.three.ratio_max", rmax, "9.18458", 1e-5Q, REF);
    {
        Primorial n5 = primorial(pt, 5);
        ck.trunc("t1.three.primorial5_ratio", rx_exp(n5.log_n - n5.log_phi) / rx_log(n5.log_phi),
                 "2.64", 0.01Q, REF);
    }

    // --- c_k family and the 2.95503/loglog phi bound, equality at 30030
    struct CRow {
        uint64_t k;
        const char* shown;
    };
    for (CRow r : {CRow{4, "2.66"}, {5, "2.86"}, {6, "2.96"}, {7, "2.92"}, {8, "2.94"},
                   {9, "2.93"}, {10, "2.82"}, {11, "2.77"}, {12, "2.68"}, {13, "2.59"},
                   {14, "2.55"}})
        ck.close("t1.ck.k" + std::to_string(r.k), c_k(pt, r.k), r.shown, 0.005Q, REF);
    const real_x c6 = c_k(pt, 6);
    ck.close("t1.ck.c6", c6, "2.9550377", 5e-7Q, REF);
    {
        uint64_t amax = 0;
        real_x cmax = -1e30Q;
        for (uint64_t k = 4; k <= 14; ++k)
            if (c_k(pt, k) > cmax) {
                cmax = c_k(pt, k);
                amax = k;
            }
        ck.count("t1.ck.argmax", amax, 6, REF);
    }
    auto c6_violates = [&](const ArithStats& s) {
        real_x u = rx_log(s.log_phi());
        // equality at 30030 is exact by construction; 1e-25 slack keeps it clean
        return s.n_over_phi() > egam * u + c6 / u + 1e-25Q;
    };
    std::vector<uint64_t> exc4;
    for (uint64_t n = 1; n <= 209; ++n) {
        ArithStats s = stats(sf.factorize(n));
        if (phi_u64(sf.factorize(n)) <= 2 || c6_violates(s)) exc4.push_back(n);
    }
    ck.text("t1.ck.exceptions", join_u64(exc4), "1 2 3 4 6", REF);
    uint64_t viol4 = 0;
    for (uint64_t n = 210; n <= 99999; ++n)
        if (c6_violates(stats(sf.factorize(n)))) viol4++;
    ck.count("t1.ck.none_above", viol4, 0, RCP);
    {
        ArithStats s = stats(sf.factorize(30030));
        real_x u = rx_log(s.log_phi());
        ck.close("t1.ck.equality_30030", s.n_over_phi() - (egam * u + c6 / u), "0", 1e-30Q, RCP);
    }

    // --- scalar links of the reduction chain
    const real_x b = rx_parse("2.51");
    ck.truth("t1.chain.g_grows_from_27", rx_exp(rx_exp(rx_sqrt(b / egam))) < 27,
             rx_format(rx_exp(rx_exp(rx_sqrt(b / egam))), 12), "< 27", RCP);
    ck.truth("t1.chain.f_grows_from_38", rx_exp(rx_exp(rx_sqrt(c6 / egam))) < 38,
             rx_format(rx_exp(rx_exp(rx_sqrt(c6 / egam))), 12), "< 38", RCP);
    {
        real_x v = egam * rx_log(2) + b / (rx_log(rx_log(5760)) + rx_log(2));
        ck.truth("t1.chain.coeff212", v <= 2.12Q, rx_format(v, 12), "<= 2.12", RCP);
        real_x w = egam + rx_parse("2.12") / rx_log(rx_log(5760));
        ck.truth("t1.chain.coeff3", w <= 3, rx_format(w, 12), "<= 3", RCP);
    }
    auto h = [](real_x u) { return u * (rx_log(u) + rx_log(3)) * rx_exp(-u); };
    {
        bool mono = true;
        real_x prev = h(rx_parse("1.64"));
        for (int i = 1; i <= 20000; ++i) {
            real_x u = rx_parse("1.64") + i * (60 - rx_parse("1.64")) / 20000;
            real_x cur = h(u);
            if (cur > prev) {
                mono = false;
                break;
            }
            prev = cur;
        }
        ck.truth("t1.chain.h_decreasing", mono, mono ? "monotone on [1.64,60]" : "rises", "monotone",
                 RCP);
        real_x top = egam * h(rx_parse("3.55"));  // h decreasing: sup on [3.55,inf) is at 3.55
        ck.truth("t1.chain.h_bound", top < rx_parse("0.43"), rx_format(top, 12), "< 0.43", RCP);
    }
    ck.truth("t1.chain.sum294", 251 + 43 <= 294, "251/100 + 43/100", "<= 294/100", IDT);
    {
        Primorial n14 = primorial(pt, 14);
        ck.count("t1.chain.phi_n14", n14.phi, 1854081073152000ull, RCP);
        ck.trunc("t1.chain.phi_n14_e15", (real_x)n14.phi / rx_ipow(10, 15), "1.85", 0.01Q, REF);
        ck.truth("t1.chain.u_n14", rx_log(n14.log_phi) > rx_parse("3.55"),
                 rx_format(rx_log(n14.log_phi), 12), "> 3.55", RCP);
        Primorial n6 = primorial(pt, 6);
        ck.count("t1.chain.phi_n6", n6.phi, 5760, REF);
        ck.truth("t1.chain.u_n6", rx_log(n6.log_phi) > rx_parse("2.15"),
                 rx_format(rx_log(n6.log_phi), 12), "> 2.15", RCP);
        ck.count("t1.chain.phi_n4", primorial(pt, 4).phi, 48, REF);
    }

    // --- sparsely-totient floors: min phi on (N_l, N_{l+1}] exceeds phi(N_l)
    uint64_t lmax = rep.heavy ? 8 : 7;
    for (uint64_t l = 1; l <= lmax; ++l) {
        Primorial lo = primorial(pt, l), hi = primorial(pt, l + 1);
        PhiWindowMin m = min_phi_in(lo.n, hi.n);
        std::ostringstream os;
        os << "min phi = " << m.min_phi << " at n = " << m.argmin << "; floor " << lo.phi;
        ck.truth("t1.floor.l" + std::to_string(l), m.min_phi > lo.phi, os.str(), "min > floor",
                 RCP);
    }
    if (!rep.heavy)
        ck.skip("t1.floor.l8", "heavy only: window (9699690, 223092870] is a ~2e8 scan");

    // --- random cross-check of all three bounds on [3, 1e7]
    {
        SmallFactorizer sf10(10'000'000);
        std::mt19937_64 rng(20260823ull);
        std::uniform_int_distribution<uint64_t> dist(3, 10'000'000);
        uint64_t bad = 0;
        for (int i = 0; i < 10000; ++i) {
            uint64_t n = dist(rng);
            ArithStats s = stats(sf10.factorize(n));
            real_x u = rx_log(s.log_phi());
            if (big_g(s) > gmax + 1e-25Q) bad++;
            if (n >= 211 && s.n_over_phi() > 3 * u) bad++;
            if (n >= 7 && s.n_over_phi() > egam * u + c6 / u + 1e-25Q) bad++;
        }
        ck.count("t1.rand.bounds_10k", bad, 0, RCP);
    }
    return rep;
}

ClaimReport verify_theorem2(const VerifyConfig& cfg) {
    ClaimReport rep = make_report("theorem2", cfg);
    if (rep.sieve_limit < 2'248'750)
        throw std::invalid_argument("theorem2 pipeline needs sieve limit >= 2248750");
    Checker ck(rep);
    PrimeTable pt(rep.sieve_limit);
    const real_x egam = rx_exp_gamma();

    ck.count("t2.pivot.p_k0", pt.p(K0), 175939, REF);
    ck.count("t2.pivot.p_k1", pt.p(K1), 2248723, REF);
    if (rep.heavy) {
        ck.count("t2.pivot.p_k2", pt.p(K2), 100'000'007ull, REF);
        ck.count("t2.pivot.k2_is_pi_1e8_plus_1", pt.pi(100'000'000) + 1, K2, REF);
    } else {
        ck.skip("t2.pivot.p_k2", "heavy only: needs the 1e8 sieve");
        ck.skip("t2.pivot.k2_is_pi_1e8_plus_1", "heavy only: needs the 1e8 sieve");
    }

    ck.close("t2.eps.e1", psi(113, 1), "0.012711", 1e-6Q, REF);
    ck.close("t2.eps.e2", psi(2248723, 1), "0.00000064156", 1e-11Q, REF);
    ck.close("t2.eps.e3", psi(45439, 1), "0.0000317498", 1e-10Q, REF);

    ChampionSequence seq(pt, psi(2248723, 1));
    const auto& recs = seq.records();

    {  // closest approach of two stream values, in g1 units
        const auto& st = seq.stream();
        real_x best = 1e30Q;
        size_t at = 0;
        for (size_t j = 0; j + 1 < st.size(); ++j) {
            real_x gap = st[j + 1].g1 - st[j].g1;
            if (gap < best) {
                best = gap;
                at = j;
            }
        }
        ck.close("t2.stream.min_gap", best, "0.0381", 5e-5Q, REF);
        std::ostringstream os;
        os << "(" << st[at].p << "," << st[at].alpha << ") then (" << st[at + 1].p << ","
           << st[at + 1].alpha << ")";
        ck.text("t2.stream.min_gap_pair", os.str(), "(349,2) then (71453,1)", REF);
    }

    auto [m1lo, m1hi] = seq.locate(psi(113, 1));
    (void)m1lo;
    ck.count("t2.f1.m1_index", m1hi, 46, REF);
    ck.text("t2.f1.m1_factored", factored_string(pt, seq.factorization(m1hi)),
            factored_string(pt, make_m1(pt)), REF);

    auto [i0lo, i0hi] = seq.locate(psi(175939, 1));
    (void)i0lo;
    std::vector<real_x> f1s(recs.size());
    for (size_t i = 0; i < recs.size(); ++i) f1s[i] = f1_value(recs[i].log_sigma_n, recs[i].log_tau);
    {
        size_t amax = 1;
        for (size_t i = 1; i <= i0hi; ++i)
            if (f1s[i] > f1s[amax]) amax = i;
        ck.count("t2.f1.argmax", amax, 46, REF);
        ck.trunc("t2.f1.max", f1s[amax], "2.597907", 1e-6Q, REF);
        ck.trunc("t2.f1.bound_constant", f1s[amax], "2.59790", 1e-5Q, REF);
        real_x second = -1e30Q;
        for (size_t i = 1; i <= i0hi; ++i)
            if (i != amax) second = std::max(second, f1s[i]);
        ck.truth("t2.f1.argmax_unique", second < f1s[amax], rx_format(second, 21), "< max", RCP);
        ck.count("t2.f1.i0_omega", recs[i0hi].omega, 15985, RCP);
        real_x tail = -1e30Q;
        for (size_t i = i0hi + 1; i < recs.size(); ++i) tail = std::max(tail, f1s[i]);
        ck.truth("t2.f1.tail_below_232", tail <= 2.32Q, rx_format(tail, 21), "<= 2.32", RCP);
    }

    auto [m2lo, m2hi] = seq.locate(psi(45439, 1));
    (void)m2lo;
    ck.text("t2.f2.m2_factored", factored_string(pt, seq.factorization(m2hi)),
            factored_string(pt, make_m2(pt)), REF);
    real_x mu;
    {
        size_t amax = 1;
        real_x best = -1e30Q;
        for (size_t i = 1; i < recs.size(); ++i) {
            real_x v = f2_value(recs[i].log_sigma_n, recs[i].log_tau);
            if (v > best) {
                best = v;
                amax = i;
            }
        }
        mu = best;
        ck.count("t2.f2.argmax", amax, m2hi, REF);
        ck.close("t2.f2.mu", mu, "0.9414440795", 1e-10Q, REF);
        ck.trunc("t2.f2.bound_constant", mu, "0.941444079", 1e-9Q, REF);
        const Record& m2 = recs[m2hi];
        ck.close("t2.f2.m2_sigma_over_n", rx_exp(m2.log_sigma_n), "19.0983", 1e-4Q, REF);
        ck.close("t2.f2.m2_n_over_phi", rx_exp(m2.log_n_phi), "19.1096", 1e-4Q, REF);
    }

    // --- log-concavity of the two comparison envelopes (second differences
    // of log F on a grid; smooth-concave gives margins far above rounding)
    {
        auto lc_ok = [](auto F, real_x lo, real_x hi, int steps) {
            real_x hstep = (hi - lo) / steps;
            real_x worst = -1e30Q;
            for (int i = 1; i + 1 <= steps; ++i) {
                real_x u = lo + i * hstep;
                real_x d2 = rx_log(F(u - hstep)) - 2 * rx_log(F(u)) + rx_log(F(u + hstep));
                worst = std::max(worst, d2);
            }
            return worst;
        };
        real_x w1 = lc_ok([](real_x u) { return rx_log(u + rx_log(3)); }, 0.05Q, 130.0Q, 13000);
        ck.truth("t2.lc.f1_envelope", w1 < 0, rx_format(w1, 12), "second differences < 0", RCP);
        real_x w2 = lc_ok(
            [&](real_x u) {
                return egam * rx_log1p(u) + egam * rx_log(rx_log(rx_exp(1) + u)) + mu;
            },
            0.05Q, 130.0Q, 13000);
        ck.truth("t2.lc.f2_envelope", w2 < 0, rx_format(w2, 12), "second differences < 0", RCP);
        ck.truth("t2.lc.f1_params", rx_log(3) >= 1, "a4 = log 3 = 1.0986...", ">= 1", IDT);
        ck.truth("t2.lc.f2_params", mu >= 0, "a3 = mu > 0, a4 = 1, a5 = e", "in range", IDT);
    }

    // --- the omega-large chain
    {
        uint64_t kmax = pt.size();
        real_x lmin = 1e30Q;
        uint64_t larg = 0;
        for (uint64_t k = K0; k <= kmax; ++k) {
            real_x l = lambda_k(pt, k);
            if (l < lmin) {
                lmin = l;
                larg = k;
            }
        }
        std::ostringstream os;
        os << rx_format(lmin, 12) << " at k = " << larg;
        ck.truth("t2.omega.lambda_floor", lmin >= rx_parse("0.9427"), os.str(), ">= 0.9427", EXT);

        // prefix products N_k/phi(N_k) against e^g (log p_k + delta), in logs
        real_x lsum = 0;
        uint64_t bad_logp = 0, bad_logk = 0;
        for (uint64_t k = 1; k <= kmax; ++k) {
            real_x p = (real_x)pt.p(k);
            lsum += rx_log(p / (p - 1));
            if (k < K0) continue;
            if (lsum > rx_euler_gamma() + rx_log(rx_log(p) + delta_k(pt, k))) bad_logp++;
            real_x lk = rx_log((real_x)k);
            if (lsum > rx_euler_gamma() +
                           rx_log(lk + rx_log(lk) + beta_k(k) + delta_k(pt, k)))
                bad_logk++;
        }
        ck.count("t2.omega.logp_prefix_products", bad_logp, 0, EXT);
        ck.count("t2.omega.logk_prefix_products", bad_logk, 0, RCP);
    }
    ck.trunc("t2.omega.delta_sup", rx_parse("0.2") / rx_log(rx_ipow(10, 8)), "0.010857", 1e-6Q,
             REF);
    ck.truth("t2.omega.delta_sup_branch",
             2 / rx_sqrt(175939.0Q) <= rx_parse("0.2") / rx_log(rx_ipow(10, 8)),
             rx_format(2 / rx_sqrt(175939.0Q), 12), "<= 0.2/log(1e8)", RCP);
    {
        real_x v = egam * (1 + (rx_log(rx_log((real_x)K0)) + beta_k(K0) + rx_parse("0.01086")) /
                                   rx_log((real_x)K0));
        ck.truth("t2.omega.coeff223", v <= 2.23Q, rx_format(v, 12), "<= 2.23", RCP);
        real_x ll2k0 = rx_log((real_x)K0 * rx_log(2));
        real_x w = rx_parse("2.23") * (1 - rx_log(rx_log(2)) / ll2k0);
        ck.trunc("t2.omega.coeff231776", w, "2.31776", 1e-5Q, REF);
        ck.truth("t2.omega.coeff_below_232", w <= 2.32Q, rx_format(w, 12), "<= 2.32", RCP);
    }
    ck.trunc("t2.omega.rho_k1", rho_k(pt, K1), "0.939945", 1e-6Q, REF);
    if (rep.heavy)
        ck.trunc("t2.omega.rho_k2", rho_k(pt, K2), "0.921296", 1e-6Q, REF);
    else
        ck.skip("t2.omega.rho_k2", "heavy only: needs p(5761456) = 1e8 + 7");
    {
        // branch-local decrease of the rho ingredients
        bool mono = true;
        uint64_t kmax = pt.size();
        uint64_t step = std::max<uint64_t>(1, (kmax - K1) / 5000);
        for (uint64_t k = K1 + step; k <= kmax; k += step) {
            if (!(eta_k(k) < eta_k(k - step)) || !(beta_k(k) < beta_k(k - step))) mono = false;
            if (pt.p(k) <= 100'000'000 && !(delta_k(pt, k) < delta_k(pt, k - step))) mono = false;
        }
        ck.truth("t2.omega.rho_parts_decreasing", mono, mono ? "sampled monotone" : "rises",
                 "monotone", RCP);
        if (rep.heavy) {
            bool mono2 = true;
            for (uint64_t k = K2 + 1; k <= kmax; ++k)
                if (!(delta_k(pt, k) < delta_k(pt, k - 1))) mono2 = false;
            ck.truth("t2.omega.delta_second_branch", mono2, mono2 ? "monotone" : "rises",
                     "monotone", RCP);
        } else {
            ck.skip("t2.omega.delta_second_branch", "heavy only: branch starts at p > 1e8");
        }
    }

    // --- random cross-check of both bounds on [2, 1e7]
    {
        real_x maxf1 = -1e30Q;
        for (size_t i = 1; i < recs.size(); ++i) maxf1 = std::max(maxf1, f1s[i]);
        SmallFactorizer sf10(10'000'000);
        std::mt19937_64 rng(20260823ull);
        std::uniform_int_distribution<uint64_t> dist(2, 10'000'000);
        uint64_t bad = 0;
        for (int i = 0; i < 10000; ++i) {
            ArithStats s = stats(sf10.factorize(dist(rng)));
            if (f1_value(s) > maxf1 + 1e-25Q) bad++;
            if (f2_value(s) > mu + 1e-25Q) bad++;
        }
        ck.count("t2.rand.bounds_10k", bad, 0, RCP);
    }
    return rep;
}

ClaimReport verify_theorem3(const VerifyConfig& cfg) {
    ClaimReport rep = make_report("theorem3", cfg);
    if (rep.sieve_limit < 176'000)
        throw std::invalid_argument("theorem3 pipeline needs sieve limit >= 176000");
    Checker ck(rep);
    PrimeTable pt(std::max<uint64_t>(cfg.sieve_limit, 176'000));
    ChampionSequence seq(pt, psi(175939, 1));
    const auto& recs = seq.records();

    auto [blo, base] = seq.locate(psi(113, 1));
    (void)blo;
    ck.count("t3.base_index", base, 46, REF);

    std::vector<real_x> f1s(recs.size());
    for (size_t i = 0; i < recs.size(); ++i) f1s[i] = f1_value(recs[i].log_sigma_n, recs[i].log_tau);
    {
        std::vector<uint64_t> high;
        for (size_t i = 1; i < recs.size(); ++i)
            if (f1s[i] >= rx_parse("2.597")) high.push_back(i);
        ck.text("t3.window_set", join_u64(high), "46 47 48 49 50", REF);
    }

    struct Row {
        uint32_t i;
        const char* eps;
        uint64_t p;
        const char* ratio;
        const char* f1;
    };
    for (Row r : {Row{45, "0.0132", 109, "1/113", "2.596216"},
                  {46, "0.0127", 113, "1", "2.597907"},
                  {47, "0.0113", 127, "127", "2.597801"},
                  {48, "0.0110", 131, "127·131", "2.597746"},
                  {49, "0.0105", 137, "127·131·137", "2.597461"},
                  {50, "0.0103", 139, "127·131·137·139", "2.597502"},
                  {51, "0.0097", 149, "127·131·137·139·149", "2.596862"}}) {
        std::string id = "t3.row" + std::to_string(r.i);
        ck.close(id + ".eps", recs[r.i].eps_hi, r.eps, 5e-5Q, REF);
        ck.count(id + ".p", recs[r.i].p, r.p, REF);
        ck.text(id + ".ratio", ratio_string(record_vs_base(seq, r.i, base)), r.ratio, REF);
        ck.close(id + ".f1", f1s[r.i], r.f1, 5e-7Q, REF);
    }

    const real_x B = rx_log(rx_parse("2.6") / rx_parse("2.597"));
    ck.close("t3.budget", B, "0.0011545", 5e-8Q, REF);
    ck.truth("t3.budget_valid", B < recs[51].eps_hi * rx_log(2), rx_format(B, 12),
             "< eps * log 2 for every enumerated window", RCP);

    // bounded-benefit enumeration around each bracketing value; windows 45..51
    // cover every n whose tau sits between tau(N^(44)) and tau(N^(51))
    {
        std::map<std::vector<std::pair<uint64_t, int64_t>>, std::pair<real_x, std::string>> found;
        for (uint32_t i = 45; i <= 51; ++i) {
            EnumerateResult er = enumerate_at(seq, i, B);
            for (const BenefitHit& h : er.hits) {
                if (h.f1 < rx_parse("2.597")) continue;
                auto key = hit_vs_base(seq, er, h, base);
                if (!found.count(key))
                    found[key] = {h.f1, tau_ratio_string(seq, key, base)};
            }
        }
        ck.count("t3.exc.count", found.size(), 12, REF);
        std::vector<std::pair<std::vector<std::pair<uint64_t, int64_t>>,
                              std::pair<real_x, std::string>>>
            rows(found.begin(), found.end());
        std::sort(rows.begin(), rows.end(),
                  [](const auto& a, const auto& b) { return a.second.first > b.second.first; });
        struct ERow {
            const char* ratio;
            const char* tau;
            const char* f1;
        };
        const ERow expect[12] = {
            {"1", "1", "2.597907"},
            {"127", "2", "2.597801"},
            {"127·131", "4", "2.597746"},
            {"127·131·137·139", "16", "2.597502"},
            {"127·131·137", "8", "2.597461"},
            {"2·127·131", "40/9", "2.597331"},
            {"2", "10/9", "2.597290"},
            {"2·127", "20/9", "2.597288"},
            {"2·127·131·137·139", "160/9", "2.597269"},
            {"127·131·139", "8", "2.597190"},
            {"131", "2", "2.597181"},
            {"2·127·131·137", "80/9", "2.597140"},
        };
        for (size_t j = 0; j < rows.size() && j < 12; ++j) {
            std::string id = "t3.exc.r" + std::string(j + 1 < 10 ? "0" : "") + std::to_string(j + 1);
            std::string comp = ratio_string(rows[j].first) + " | " + rows[j].second.second + " | " +
                               rx_format(rows[j].second.first, 13);
            bool ok = ratio_string(rows[j].first) == expect[j].ratio &&
                      rows[j].second.second == expect[j].tau &&
                      rx_abs(rows[j].second.first - rx_parse(expect[j].f1)) <= 5e-7Q;
            ck.truth(id, ok, comp,
                     std::string(expect[j].ratio) + " | " + expect[j].tau + " | " + expect[j].f1,
                     REF);
        }
    }

    // census over every window of the chain
    struct NuRow {
        const char* x;
        uint64_t count;
    };
    for (NuRow r : {NuRow{"2.597", 12}, {"2.596", 45}, {"2.595", 179}, {"2.594", 586},
                    {"2.593", 1680}, {"2.592", 4760}, {"2.591", 12653}, {"2.590", 32187}}) {
        CensusCount cc = census_count(seq, rx_parse(r.x));
        std::string tag = std::string(r.x).substr(2);
        ck.count("t3.nu.x" + tag, cc.count, r.count, REF);
        if (std::string(r.x) == "2.597")
            ck.count("t3.nu.windows_2597", cc.windows_enumerated, 6, RCP);
    }

    // the limit family anchored at the 211-smooth champion-like witness
    {
        Factorization m3 = make_m3(pt);
        ArithStats s3 = stats(m3);
        real_x lim = rx_parse("211") / 212 * f1_value(s3);
        ck.trunc("t3.m3.limit", lim, "2.580303", 1e-6Q, REF);
        Factorization shifted = m3;
        for (auto& [p, a] : shifted.pe)
            if (p == 211) p = 223;
        ArithStats sp = stats(shifted);
        ck.count("t3.m3.shift_tau", tau_u64(shifted), tau_u64(m3), RCP);
        real_x direct = f1_value(sp);
        real_x formula = rx_parse("211") * 224 / (212 * 223.0Q) * f1_value(s3);
        ck.close("t3.m3.shift_identity", direct - formula, "0", 1e-30Q, RCP);
    }

    rep.notes.push_back(
        "threshold constant: the reference prose twice renders 2597/1000 as 2957/1000; "
        "all claims use 2.597, consistent with every table");
    rep.notes.push_back(
        "nu(x) counts all n >= 2 with f1(n) >= x, where f1 keeps the 3*tau argument; "
        "the variant without the 3 does not reproduce the reference counts");
    rep.notes.push_back(
        "the 211-smooth witness takes its prime tail through 211 inclusive: the shifted "
        "family p*M3/211 needs 211 | M3 and only this form matches the 2.580303 limit");
    return rep;
}

ClaimReport verify_inequalities(const VerifyConfig& cfg) {
    ClaimReport rep = make_report("inequalities", cfg);
    Checker ck(rep);
    const real_x egam = rx_exp_gamma();
    SmallFactorizer sf(1'000'000);

    uint64_t bad23 = 0, bad24 = 0, bad_sp = 0, bad_rs = 0, bad_l3 = 0;
    std::vector<uint64_t> eq23, eq24, eq_sp, exc_l3;
    for (uint64_t n = 1; n <= 1'000'000; ++n) {
        Factorization f = sf.factorize(n);
        unsigned __int128 s = sigma_u64(f), t = tau_u64(f), ph = phi_u64(f);
        unsigned __int128 n2 = (unsigned __int128)n * n;

        unsigned __int128 l = 8 * s * s, r = 9 * n2 * t;  // (sigma/n)^2 <= (9/8) tau
        if (l > r) bad23++;
        if (l == r) eq23.push_back(n);

        unsigned __int128 s2 = s * s, n5 = n2 * n2 * n;
        unsigned __int128 l5 = 16 * s2 * s2 * s, r5 = 243 * n5 * t;  // ^5 <= (243/16) tau
        if (l5 > r5) bad24++;
        if (l5 == r5) eq24.push_back(n);

        if (s * ph > n2) bad_sp++;  // sigma/n <= n/phi
        if (s * ph == n2) eq_sp.push_back(n);

        if (ph * ph < n) {
            if (n >= 7)
                bad_l3++;
            else
                exc_l3.push_back(n);  // phi >= sqrt(n) from 7 on
        }

        if (n >= 3) {
            real_x ll = rx_log(rx_log((real_x)n));
            real_x nphi = (real_x)n / (real_x)(uint64_t)ph;
            if (nphi > egam * ll + rx_parse("2.50637") / ll) bad_rs++;
        }
    }
    ck.count("ineq.23.violations", bad23, 0, REF);
    ck.text("ineq.23.equality_set", join_u64(eq23), "2", REF);
    ck.truth("ineq.23.relaxed", (unsigned __int128)1061 * 1061 >= (unsigned __int128)9 * 1000000 / 8,
             "1061^2 = 1125721", ">= 9/8 * 10^6", IDT);
    ck.count("ineq.24.violations", bad24, 0, REF);
    ck.text("ineq.24.equality_set", join_u64(eq24), "120", REF);
    {
        unsigned __int128 c = 172305;
        unsigned __int128 c5 = c * c * c * c * c * 16;
        unsigned __int128 rhs = (unsigned __int128)243;
        for (int i = 0; i < 25; ++i) rhs *= 10;
        ck.truth("ineq.24.relaxed", c5 >= rhs, "16 * 1.72305^5", ">= 243", IDT);
    }
    ck.count("ineq.sigma_phi.violations", bad_sp, 0, RCP);
    ck.text("ineq.sigma_phi.equality_set", join_u64(eq_sp), "1", RCP);
    ck.count("ineq.sqrt_phi.violations_from_7", bad_l3, 0, REF);
    ck.text("ineq.sqrt_phi.exceptions_below_7", join_u64(exc_l3), "2 6", RCP);
    ck.count("ineq.rs_upper.violations_from_3", bad_rs, 0, EXT);
    return rep;
}

std::vector<ClaimReport> verify_all(const VerifyConfig& cfg) {
    return {verify_theorem1(cfg), verify_theorem2(cfg), verify_theorem3(cfg),
            verify_inequalities(cfg)};
}

std::string report_json(const std::vector<ClaimReport>& reports) {
    nlohmann::json root;
    root["format"] = {{"float", "binary128"},
                      {"tie_tolerance_g1", TIE_TOLERANCE_G1},
                      {"provenance_values", {REF, IDT, RCP, EXT}}};
    auto arr = nlohmann::json::array();
    for (const ClaimReport& rep : reports) {
        nlohmann::json jr;
        jr["pipeline"] = rep.pipeline;
        jr["config"] = {{"sieve_limit", rep.sieve_limit}, {"heavy", rep.heavy}};
        jr["summary"] = {{"pass", rep.passed()}, {"fail", rep.failed()},
                         {"skipped", rep.skipped()}};
        jr["notes"] = rep.notes;
        auto claims = nlohmann::json::array();
        for (const Claim& c : rep.claims)
            claims.push_back({{"id", c.id},
                              {"status", c.status},
                              {"computed", c.computed},
                              {"expected", c.expected},
                              {"provenance", c.provenance},
                              {"tolerance", c.tolerance},
                              {"elapsed_ms", c.elapsed_ms}});
        jr["claims"] = std::move(claims);
        arr.push_back(std::move(jr));
    }
    root["reports"] = std::move(arr);
    return root.dump(2) + "\n";
}

std::string report_text(const std::vector<ClaimReport>& reports) {
    std::ostringstream os;
    for (const ClaimReport& rep : reports) {
        os << "== " << rep.pipeline << " (sieve " << rep.sieve_limit
           << (rep.heavy ? ", heavy" : "") << ") ==\n";
        for (const Claim& c : rep.claims) {
            os << "[" << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "SKIP")
               << "] " << c.id;
            if (c.status == "skipped")
                os << "  (" << c.computed << ")";
            else
                os << "  computed=" << c.computed << "  expected=" << c.expected << "  ["
                   << c.provenance << ", " << c.tolerance << "]";
            os << "\n";
        }
        os << "summary: " << rep.passed() << " pass, " << rep.failed() << " fail, "
           << rep.skipped() << " skipped\n";
        for (const std::string& n : rep.notes) os << "note: " << n << "\n";
        os << "\n";
    }
    return os.str();
}

} // namespace sigmatau
