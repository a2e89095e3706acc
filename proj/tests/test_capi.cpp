// Exercises the shared library strictly through the C boundary: no core
// headers here, everything arrives as strings and error codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sigmatau.h"
#include "json.hpp"
#include <string>

namespace {

struct Ctx {
    st_context* p = nullptr;
    explicit Ctx(uint64_t sieve = 0) { REQUIRE(st_context_new(sieve, &p) == ST_OK); }
    ~Ctx() { st_context_free(p); }
    operator st_context*() const { return p; }
};

struct Str {
    char* p = nullptr;
    ~Str() { st_string_free(p); }
    char** out() { return &p; }
    std::string str() const { return p ? p : ""; }
};

size_t line_count(const std::string& s) {
    size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("context lifecycle and argument guards") {
    st_context* ctx = nullptr;
    REQUIRE(st_context_new(0, &ctx) == ST_OK);
    CHECK(st_sieve_limit(ctx) == 2'500'000);  // 0 selects the default
    CHECK(std::string(st_last_error(ctx)).empty());
    st_context_free(ctx);

    st_context_free(nullptr);  // both must be safe no-ops
    st_string_free(nullptr);
    CHECK(std::string(st_last_error(nullptr)) == "null context");
    CHECK(st_sieve_limit(nullptr) == 0);

    ctx = nullptr;
    CHECK(st_context_new(5, &ctx) == ST_EINVAL);  // sieve too small to mean anything
    CHECK(ctx == nullptr);
    CHECK(st_context_new(0, nullptr) == ST_EINVAL);
}

TEST_CASE("champions in both formats") {
    Ctx ctx;
    Str csv;
    REQUIRE(st_champions(ctx, "0.106", "csv", csv.out()) == ST_OK);
    std::string s = csv.str();
    CHECK(line_count(s) == 12);  // header + records 0..10
    CHECK(s.rfind("index,factorization,n,sigma_over_n,tau,log_tau,eps_hi,eps_lo\n", 0) == 0);
    CHECK(s.find(",55440,") != std::string::npos);
    CHECK(s.find(",720720,") != std::string::npos);

    Str js;
    REQUIRE(st_champions(ctx, "0.106", "json", js.out()) == ST_OK);
    auto j = nlohmann::json::parse(js.str());
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 11);
    CHECK(j[0]["eps_hi"].is_null());  // record 0 is created by every eps
    CHECK(j[9]["n"] == 55440);
    CHECK(j[9]["tau"] == 120);
    CHECK(j[10]["n"] == 720720);

    Str bad;
    CHECK(st_champions(ctx, "0.106", "xml", bad.out()) == ST_EINVAL);
    CHECK(st_champions(ctx, "-1", "csv", bad.out()) == ST_EINVAL);
    CHECK(st_champions(ctx, "abc", "csv", bad.out()) == ST_EINVAL);
    CHECK(!std::string(st_last_error(ctx)).empty());
    CHECK(st_champions(ctx, nullptr, "csv", bad.out()) == ST_EINVAL);
    CHECK(st_champions(nullptr, "0.106", "csv", bad.out()) == ST_EINVAL);
}

TEST_CASE("benefit enumeration over the C boundary") {
    Ctx ctx;
    Str out;
    // at the 5th critical value with an ulp-sized budget: the champion itself
    // plus the one move that is free exactly at that eps
    REQUIRE(st_benefit_enum(ctx, 5, "1e-30", out.out()) == ST_OK);
    std::string s = out.str();
    CHECK(s.rfind("n_over_ref,tau_ratio_over_ref,ben,f1,log_n\n", 0) == 0);
    CHECK(line_count(s) == 3);

    Str bad;
    CHECK(st_benefit_enum(ctx, 5, "1.0", bad.out()) == ST_EINVAL);  // budget >= eps log 2
    CHECK(st_benefit_enum(ctx, 0, "0.0", bad.out()) == ST_EINVAL);  // 1-based index
    CHECK(st_benefit_enum(ctx, 5, nullptr, bad.out()) == ST_EINVAL);
}

TEST_CASE("census counts over the C boundary") {
    Ctx ctx;
    Str out;
    REQUIRE(st_census(ctx, "2.597", out.out()) == ST_OK);
    auto j = nlohmann::json::parse(out.str());
    CHECK(j["count"] == 12);
    CHECK(j["windows_enumerated"] == 6);
    CHECK(j["window_min"] == 46);
    CHECK(j["window_max"] == 51);

    Str bad;
    CHECK(st_census(ctx, "2.0", bad.out()) == ST_EINVAL);  // below the census floor
    CHECK(st_census(ctx, nullptr, bad.out()) == ST_EINVAL);
}

TEST_CASE("verify pipelines through the C boundary") {
    Ctx ctx;
    Str js;
    int failures = -1;
    REQUIRE(st_verify(ctx, "inequalities", 0, "json", js.out(), &failures) == ST_OK);
    CHECK(failures == 0);
    auto j = nlohmann::json::parse(js.str());
    REQUIRE(j["reports"].size() == 1);
    CHECK(j["reports"][0]["pipeline"] == "inequalities");
    CHECK(j["reports"][0]["summary"]["fail"] == 0);

    Str txt;
    REQUIRE(st_verify(ctx, "inequalities", 0, "text", txt.out(), &failures) == ST_OK);
    CHECK(txt.str().find("[PASS]") != std::string::npos);
    CHECK(txt.str().find("[FAIL]") == std::string::npos);

    Str bad;
    CHECK(st_verify(ctx, "theorem9", 0, "json", bad.out(), &failures) == ST_EINVAL);
    CHECK(st_verify(ctx, "all", 0, "yaml", bad.out(), &failures) == ST_EINVAL);
    CHECK(st_verify(ctx, nullptr, 0, "json", bad.out(), &failures) == ST_EINVAL);
    CHECK(st_verify(ctx, "all", 0, "json", bad.out(), nullptr) == ST_EINVAL);
}

TEST_CASE("hull export") {
    Ctx ctx;
    Str pts, vs;
    REQUIRE(st_hull(ctx, 5040, pts.out(), vs.out()) == ST_OK);
    CHECK(pts.str().rfind("n,log_tau,log_sigma_over_n\n", 0) == 0);
    CHECK(line_count(pts.str()) == 5041);  // header + one row per n
    CHECK(vs.str().rfind("index,n,factorization,log_tau,log_sigma_over_n,eps_hi,eps_lo\n", 0) == 0);
    CHECK(line_count(vs.str()) == 10);  // header + the 9 champions up to 5040
    CHECK(vs.str().find(",5040,") != std::string::npos);

    Str p2, v2;
    CHECK(st_hull(ctx, 0, p2.out(), v2.out()) == ST_EINVAL);
    CHECK(st_hull(ctx, 30'000'000, p2.out(), v2.out()) == ST_EINVAL);
    CHECK(st_hull(ctx, 100, nullptr, v2.out()) == ST_EINVAL);
}

TEST_CASE("tiny sieve still supports a shallow stream") {
    Ctx ctx(10);
    CHECK(st_sieve_limit(ctx) == 10);
    Str out;
    REQUIRE(st_champions(ctx, "0.5", "csv", out.out()) == ST_OK);
    CHECK(line_count(out.str()) == 3);  // header + n = 1 + n = 2

    // a deeper floor outruns what primes up to 10 can certify
    Str deep;
    CHECK(st_champions(ctx, "0.01", "csv", deep.out()) == ST_ERANGE);
    CHECK(!std::string(st_last_error(ctx)).empty());
}
