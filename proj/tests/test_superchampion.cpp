#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "superchampion.hpp"
#include <stdexcept>

using namespace sigmatau;

TEST_CASE("psi closed forms and monotonicity") {
    CHECK(psi(2, 0) == HUGE_VALQ);
    // psi(p, 1) = log2(1 + 1/p), so g1(psi(p, 1)) = p exactly
    for (uint64_t p : {2ull, 3ull, 5ull, 113ull, 175939ull})
        CHECK(rx_abs(g1_of_eps(psi(p, 1)) - (real_x)p) < 1e-20Q * (real_x)p);
    CHECK(rx_abs(psi(2, 1) - rx_parse("0.5849625007211562")) < 1e-15Q);
    for (uint32_t a = 1; a < 10; ++a) CHECK(psi(2, a + 1) < psi(2, a));
    for (uint64_t p = 2; p < 50; ++p) {  // integer p suffices; psi ignores primality
        CHECK(psi(p + 1, 1) < psi(p, 1));
        CHECK(psi(p + 1, 3) < psi(p, 3));
    }
    CHECK_THROWS_AS(psi(1, 1), std::invalid_argument);
}

TEST_CASE("sigma-ratio increments telescope through psi") {
    // log sigma-ratio(p, j) - log sigma-ratio(p, j-1) = psi(p, j) log(1 + 1/j)
    for (uint64_t p : {2ull, 3ull, 7ull, 101ull})
        for (uint32_t j = 1; j <= 8; ++j) {
            real_x lhs = log_sigma_ratio((real_x)p, j) - log_sigma_ratio((real_x)p, j - 1);
            real_x rhs = psi(p, j) * rx_log1p((real_x)1 / j);
            CHECK(rx_abs(lhs - rhs) < 1e-32Q);
        }
    // hence theta(p, a, eps) = sum over j <= a of (psi(p,j) - eps) log(1+1/j)
    real_x eps = rx_parse("0.021");
    for (uint64_t p : {2ull, 5ull})
        for (uint32_t a = 1; a <= 6; ++a) {
            real_x sum = 0;
            for (uint32_t j = 1; j <= a; ++j) sum += (psi(p, j) - eps) * rx_log1p((real_x)1 / j);
            CHECK(rx_abs(theta(p, a, eps) - sum) < 1e-30Q);
        }
    CHECK(theta(3, 0, eps) == 0);
}

TEST_CASE("alpha choice brackets eps") {
    CHECK(alpha_for(2, rx_parse("0.5")).alpha == 1);
    CHECK(!alpha_for(2, rx_parse("0.5")).tied);
    CHECK(alpha_for(2, rx_parse("0.7")).alpha == 0);
    CHECK(alpha_for(1000003, rx_parse("0.5")).alpha == 0);
    AlphaChoice t = alpha_for(2, psi(2, 3));
    CHECK(t.tied);
    CHECK(t.alpha == 3);
    for (real_x e : {rx_parse("0.3"), rx_parse("0.1"), rx_parse("0.02")}) {
        AlphaChoice c = alpha_for(3, e);
        if (c.alpha > 0) CHECK(psi(3, c.alpha) >= e);
        CHECK(psi(3, c.alpha + 1) <= e);
    }
    CHECK_THROWS_AS(alpha_for(2, (real_x)0), std::domain_error);
}

TEST_CASE("stream completeness guard") {
    real_x eps = psi(97, 1) * rx_parse("0.99");
    PrimeTable small(100);
    CHECK_THROWS_AS(critical_stream(small, eps), std::out_of_range);
    PrimeTable enough(200);
    CHECK(!critical_stream(enough, eps).empty());
    CHECK_THROWS_AS(critical_stream(enough, (real_x)0), std::domain_error);
}

TEST_CASE("first ten steps and champions") {
    PrimeTable pt(1000);
    ChampionSequence seq(pt, rx_parse("0.106"));
    const auto& st = seq.stream();
    REQUIRE(st.size() == 10);
    const uint64_t ps[] = {2, 3, 2, 5, 2, 3, 7, 2, 11, 13};
    const uint32_t as[] = {1, 1, 2, 1, 3, 2, 1, 4, 1, 1};
    const char* es[] = {"0.5849625", "0.4150375", "0.3801824", "0.2630344", "0.2398233",
                        "0.1974096", "0.1926451", "0.1469450", "0.1255309", "0.1069152"};
    for (size_t i = 0; i < 10; ++i) {
        CHECK(st[i].p == ps[i]);
        CHECK(st[i].alpha == as[i]);
        CHECK(rx_abs(st[i].eps - rx_parse(es[i])) < 5e-8Q);
    }

    const auto& rec = seq.records();
    REQUIRE(rec.size() == 11);
    const uint64_t ns[] = {1, 2, 6, 12, 60, 120, 360, 2520, 5040, 55440, 720720};
    const uint64_t taus[] = {1, 2, 4, 6, 12, 16, 24, 48, 60, 120, 240};
    const char* ratios[] = {"1",     "1.5",   "2",     "2.333333", "2.8",      "3",
                            "3.25",  "3.714286", "3.838095", "4.187013", "4.509091"};
    for (size_t i = 0; i < 11; ++i) {
        REQUIRE(rec[i].n_exact);
        CHECK(rec[i].n == ns[i]);
        REQUIRE(rec[i].tau_exact);
        CHECK(rec[i].tau == taus[i]);
        CHECK(rx_abs(rec[i].sigma_over_n() - rx_parse(ratios[i])) < 5e-7Q);
        if (i > 0) {
            CHECK(rec[i].n % rec[i - 1].n == 0);
            CHECK(rec[i].n / rec[i - 1].n == st[i - 1].p);
            CHECK(rec[i].eps_hi == st[i - 1].eps);
        }
    }
    CHECK(rec[0].eps_hi == HUGE_VALQ);
    // the last record's interval runs down to the first value under the floor,
    // psi(3,3) here (its rivals: psi(2,5) = 0.0878, psi(17,1) = 0.0825)
    CHECK(rec[10].eps_lo == psi(3, 3));
    CHECK(seq.eps_next() == psi(3, 3));
    CHECK(rx_abs(seq.eps_next() - rx_parse("0.0880062")) < 5e-8Q);
}

TEST_CASE("factorization replay") {
    PrimeTable pt(1000);
    ChampionSequence seq(pt, rx_parse("0.106"));
    Factorization f9 = seq.factorization(9);
    CHECK(f9.pe == std::vector<std::pair<uint64_t, uint32_t>>{{2, 4}, {3, 2}, {5, 1}, {7, 1}, {11, 1}});
    CHECK(seq.factorization(0).pe.empty());
    CHECK_THROWS_AS(seq.factorization(11), std::out_of_range);
}

TEST_CASE("locate") {
    PrimeTable pt(1000);
    ChampionSequence seq(pt, rx_parse("0.106"));
    auto at = seq.locate(psi(5, 1));  // exact stream value: two optima
    CHECK(at.first == 3);
    CHECK(at.second == 4);
    auto mid = seq.locate((psi(5, 1) + psi(2, 3)) / 2);
    CHECK(mid.first == 4);
    CHECK(mid.second == 4);
    auto top = seq.locate(rx_parse("2.0"));
    CHECK(top.first == 0);
    CHECK(top.second == 0);
    CHECK_THROWS_AS(seq.locate(rx_parse("0.09")), std::out_of_range);
}

TEST_CASE("independent validation of sampled champions") {
    PrimeTable pt(200'000);
    ChampionSequence seq(pt, psi(113, 1));
    REQUIRE(seq.records().size() == 47);
    for (uint32_t i : {0u, 1u, 5u, 17u, 30u, 46u}) seq.validate(i);
}

TEST_CASE("optimality at interval midpoints") {
    PrimeTable pt(200'000);
    ChampionSequence seq(pt, psi(113, 1));
    const auto& rec = seq.records();
    // the record beats its neighbors in sigma/(n tau^eps), log domain
    for (uint32_t i : {3u, 10u, 25u, 40u, 46u}) {
        real_x eps = (rec[i].eps_hi == HUGE_VALQ ? rec[i].eps_lo * 2
                                                 : (rec[i].eps_hi + rec[i].eps_lo) / 2);
        real_x best = rec[i].log_sigma_n - eps * rec[i].log_tau;
        for (uint32_t j = i >= 2 ? i - 2 : 0; j <= i + 2 && j < rec.size(); ++j) {
            if (j == i) continue;
            CHECK(rec[j].log_sigma_n - eps * rec[j].log_tau < best);
        }
    }
}
