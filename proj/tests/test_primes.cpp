#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "primes.hpp"
#include <stdexcept>

using namespace sigmatau;

TEST_CASE("tiny table") {
    PrimeTable pt(10);
    CHECK(pt.primes() == std::vector<uint64_t>{2, 3, 5, 7});
    CHECK(pt.size() == 4);
    CHECK(pt.p(1) == 2);
    CHECK(pt.p(4) == 7);
    CHECK(pt.pi(1) == 0);
    CHECK(pt.pi(2) == 1);
    CHECK(pt.pi(10) == 4);
    CHECK(pt.is_prime(7));
    CHECK(!pt.is_prime(9));
    CHECK(!pt.is_prime(1));
    CHECK_THROWS_AS(pt.p(5), std::out_of_range);
    CHECK_THROWS_AS(pt.p(0), std::out_of_range);
    CHECK_THROWS_AS(pt.pi(11), std::out_of_range);
    CHECK_THROWS_AS(pt.is_prime(11), std::out_of_range);
}

TEST_CASE("degenerate limits") {
    CHECK(PrimeTable(0).size() == 0);
    CHECK(PrimeTable(1).size() == 0);
    CHECK(PrimeTable(2).primes() == std::vector<uint64_t>{2});
    CHECK(PrimeTable(3).primes() == std::vector<uint64_t>{2, 3});
    CHECK(PrimeTable(4).primes() == std::vector<uint64_t>{2, 3});
}

TEST_CASE("sieve agrees with trial division to 10000") {
    PrimeTable pt(10'000);
    size_t idx = 0;
    for (uint64_t n = 2; n <= 10'000; ++n) {
        CHECK(pt.is_prime(n) == oracle::is_prime(n));
        if (oracle::is_prime(n)) {
            REQUIRE(idx < pt.size());
            CHECK(pt.primes()[idx] == n);
            ++idx;
        }
    }
    CHECK(idx == pt.size());
    // limits landing on/next to a prime
    CHECK(PrimeTable(7919).size() == 1000);
    CHECK(PrimeTable(7918).size() == 999);
}

TEST_CASE("counting function and pivot primes") {
    PrimeTable pt(2'300'000);
    CHECK(pt.pi(1'000'000) == 78498);
    CHECK(pt.pi(100) == 25);
    CHECK(pt.p(K0) == 175939);
    CHECK(pt.p(K1) == 2248723);
    CHECK(pt.pi(175939) == K0);
    CHECK(pt.pi(2248723) == K1);
}

TEST_CASE("primorials, exact and log forms") {
    PrimeTable pt(50);
    const uint64_t n[] = {1, 2, 6, 30, 210, 2310, 30030, 510510, 9699690, 223092870};
    const uint64_t ph[] = {1, 1, 2, 8, 48, 480, 5760, 92160, 1658880, 36495360};
    for (uint64_t k = 0; k <= 9; ++k) {
        Primorial pr = primorial(pt, k);
        CHECK(pr.k == k);
        REQUIRE(pr.n_exact);
        CHECK(pr.n == n[k]);
        REQUIRE(pr.phi_exact);
        CHECK(pr.phi == ph[k]);
        CHECK(rx_abs(rx_exp(pr.log_n) - (real_x)n[k]) <= 1e-25Q * (real_x)n[k]);
        CHECK(rx_abs(rx_exp(pr.log_phi) - (real_x)ph[k]) <= 1e-25Q * (real_x)ph[k]);
    }
    Primorial p14 = primorial(pt, 14);
    REQUIRE(p14.n_exact);
    CHECK(p14.n == 13082761331670030ull);
    REQUIRE(p14.phi_exact);
    CHECK(p14.phi == 1854081073152000ull);
    CHECK_THROWS_AS(primorial(pt, 16), std::out_of_range);  // only 15 primes <= 50
}

TEST_CASE("lambda at and between the pivots") {
    PrimeTable pt(2'300'000);
    CHECK(rx_abs(lambda_k(pt, K0) - rx_parse("0.9429005041")) < 1e-9Q);
    CHECK(rx_abs(lambda_k(pt, K1) - rx_parse("0.9597695244")) < 1e-9Q);
    CHECK(lambda_k(pt, K0) >= rx_parse("0.9427"));
    CHECK_THROWS_AS(lambda_k(pt, 1), std::domain_error);
}

TEST_CASE("delta branches and rho") {
    PrimeTable pt(2'300'000);
    CHECK(rx_abs(delta_k(pt, K0) - 2 / rx_sqrt((real_x)175939)) < 1e-30Q);
    CHECK(rx_abs(rho_k(pt, K1) - rx_parse("0.9399451881")) < 1e-9Q);
    CHECK_THROWS_AS(beta_k(1), std::domain_error);
    CHECK_THROWS_AS(eta_k(0), std::domain_error);
}

TEST_CASE("ingredient monotonicity, sampled") {
    PrimeTable pt(2'300'000);
    // beta decreases once loglog k outruns its floor; eta and first-branch
    // delta decrease everywhere in range
    for (uint64_t k = 2000; k + 1000 <= K1; k += 1000) {
        CHECK(beta_k(k + 1000) < beta_k(k));
        CHECK(eta_k(k + 1000) < eta_k(k));
        CHECK(delta_k(pt, k + 1000) < delta_k(pt, k));
    }
}
