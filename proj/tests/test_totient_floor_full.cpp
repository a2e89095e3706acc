// Exhaustive totient floors over primorial windows. The l = 9 window ends at
// 6469693230, a ~6e9 segmented sweep, which is why this binary is kept apart
// from the fast suite.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "arith.hpp"
#include "primes.hpp"

using namespace sigmatau;

TEST_CASE("min phi on (N_l, N_{l+1}] exceeds phi(N_l), l = 1..9") {
    PrimeTable pt(50);
    for (uint64_t l = 1; l <= 9; ++l) {
        Primorial lo = primorial(pt, l), hi = primorial(pt, l + 1);
        REQUIRE(lo.n_exact);
        REQUIRE(hi.n_exact);
        PhiWindowMin m = min_phi_in(lo.n, hi.n);
        MESSAGE("l=", l, " window (", lo.n, ", ", hi.n, "]: min phi = ", m.min_phi,
                " at n = ", m.argmin, ", floor phi(N_l) = ", lo.phi);
        CHECK(m.min_phi > lo.phi);
        CHECK(m.min_phi <= hi.phi);  // N_{l+1} itself sits in the window
        CHECK(m.argmin > lo.n);
        CHECK(m.argmin <= hi.n);
    }
}
