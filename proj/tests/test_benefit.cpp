#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "arith.hpp"
#include "benefit.hpp"
#include <cmath>
#include <map>
#include <stdexcept>

using namespace sigmatau;

TEST_CASE("per-prime cost telescopes through psi") {
    real_x eps = rx_parse("0.021");
    for (uint64_t p : {2ull, 3ull, 11ull})
        for (uint32_t a = 0; a <= 5; ++a)
            for (uint32_t b = 0; b <= 8; ++b) {
                real_x expect = 0;
                for (uint32_t j = b + 1; j <= a; ++j)
                    expect += (psi(p, j) - eps) * rx_log1p((real_x)1 / j);
                for (uint32_t j = a + 1; j <= b; ++j)
                    expect += (eps - psi(p, j)) * rx_log1p((real_x)1 / j);
                CHECK(rx_abs(ben_p(p, a, b, eps) - expect) < 1e-30Q);
            }
    CHECK(ben_p(7, 3, 3, eps) == 0);
    // dropping a fresh prime costs log(1+1/p) - eps log 2... seen from the
    // champion side: adding one costs eps log 2 - log(1+1/p)
    real_x add11 = ben_p(11, 0, 1, eps);
    CHECK(rx_abs(add11 - (eps * rx_log((real_x)2) - rx_log1p((real_x)1 / 11))) < 1e-32Q);
}

TEST_CASE("zero budget enumerations") {
    PrimeTable pt(1000);
    ChampionSequence seq(pt, rx_parse("0.106"));

    // mid-interval the champion is the unique optimum
    EnumerateResult mid = enumerate_mid(seq, 4, (real_x)0);
    REQUIRE(mid.hits.size() == 1);
    CHECK(mid.hits[0].devs.empty());
    CHECK(mid.hits[0].ben == 0);

    // exactly at a critical value, the step it creates is free in both states;
    // 1e-30 of budget absorbs the ulp-scale residue of the free move
    EnumerateResult at = enumerate_at(seq, 5, rx_parse("1e-30"));
    REQUIRE(at.hits.size() == 2);
    CHECK(at.hits[0].ben <= 1e-30Q);
    CHECK(at.hits[1].ben <= 1e-30Q);
    std::vector<std::tuple<uint64_t, uint32_t, uint32_t>> down{{2, 3, 2}};
    bool has_empty = at.hits[0].devs.empty() || at.hits[1].devs.empty();
    bool has_down = at.hits[0].devs == down || at.hits[1].devs == down;
    CHECK(has_empty);
    CHECK(has_down);

    // and that downward deviation is exactly the previous champion
    auto d = hit_vs_base(seq, at, at.hits[at.hits[0].devs.empty() ? 1 : 0], 4);
    CHECK(d.empty());
}

TEST_CASE("budget guards") {
    PrimeTable pt(1000);
    ChampionSequence seq(pt, rx_parse("0.106"));
    real_x eps = seq.stream()[4].eps;
    CHECK_THROWS_AS(enumerate_at(seq, 5, eps * rx_log((real_x)2)), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_at(seq, 5, (real_x)-0.1Q), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_at(seq, 0, (real_x)0), std::out_of_range);
    CHECK_THROWS_AS(enumerate_at(seq, 11, (real_x)0), std::out_of_range);
}

TEST_CASE("enumeration agrees with a direct scan") {
    PrimeTable pt(1000);
    ChampionSequence seq(pt, rx_parse("0.106"));
    const uint32_t ref = 4;  // champion 60
    const Record& r = seq.records()[ref];
    real_x eps = (r.eps_hi + r.eps_lo) / 2;
    real_x budget = rx_parse("0.6") * eps * rx_log((real_x)2);
    EnumerateResult er = enumerate_mid(seq, ref, budget);

    const uint64_t LIMIT = 200'000;
    SmallFactorizer sf(LIMIT);
    std::map<uint64_t, real_x> brute;
    for (uint64_t n = 1; n <= LIMIT; ++n) {
        real_x b = ben_total(seq, ref, sf.factorize(n), eps);
        if (b <= budget) brute[n] = b;
    }

    REQUIRE(er.hits.size() == brute.size());
    for (const BenefitHit& h : er.hits) {
        double nd = std::exp((double)h.log_n);
        uint64_t n = (uint64_t)std::llround(nd);
        REQUIRE(n <= LIMIT);  // otherwise the brute-force window was too small
        REQUIRE(brute.count(n));
        CHECK(rx_abs(h.ben - brute[n]) < 1e-25Q);
        ArithStats s = stats(sf.factorize(n));
        CHECK(rx_abs(h.log_sigma_n - s.log_sigma_n) < 1e-25Q);
        CHECK(rx_abs(h.log_tau - s.log_tau) < 1e-25Q);
        CHECK(rx_abs(h.f1 - f1_value(s)) < 1e-25Q);
    }
    // ben is sorted ascending
    for (size_t i = 1; i < er.hits.size(); ++i) CHECK(er.hits[i - 1].ben <= er.hits[i].ben);
}

TEST_CASE("offsets between champions") {
    PrimeTable pt(1000);
    ChampionSequence seq(pt, rx_parse("0.106"));
    CHECK(record_vs_base(seq, 5, 4) ==
          std::vector<std::pair<uint64_t, int64_t>>{{2, 1}});
    CHECK(record_vs_base(seq, 4, 5) ==
          std::vector<std::pair<uint64_t, int64_t>>{{2, -1}});
    CHECK(record_vs_base(seq, 7, 7).empty());
    CHECK(record_vs_base(seq, 9, 0) ==
          std::vector<std::pair<uint64_t, int64_t>>{{2, 4}, {3, 2}, {5, 1}, {7, 1}, {11, 1}});
}

TEST_CASE("census guards and small thresholds") {
    PrimeTable pt(200'000);
    ChampionSequence seq(pt, psi(175939, 1));
    CHECK_THROWS_AS(census_count(seq, rx_parse("2.0")), std::invalid_argument);

    ChampionSequence shallow(pt, rx_parse("0.106"));
    CHECK_THROWS_AS(census_count(shallow, rx_parse("2.597")), std::invalid_argument);

    CensusCount cc = census_count(seq, rx_parse("2.597"));
    CHECK(cc.count == 12);
    CHECK(cc.windows_enumerated == 6);
    CHECK(cc.window_min == 46);
    CHECK(cc.window_max == 51);

    // above the global maximum nothing survives
    CensusCount none = census_count(seq, rx_parse("2.61"));
    CHECK(none.count == 0);
    CHECK(none.windows_enumerated == 0);
}
