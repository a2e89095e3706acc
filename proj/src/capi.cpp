// capi.cpp - the C boundary. Exceptions stop here and become error codes.
#include "sigmatau.h"
#include "verify.hpp"
#include "json.hpp"
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

using namespace sigmatau;

struct st_context {
    uint64_t sieve_limit = DEFAULT_SIEVE_LIMIT;
    std::string err;
    std::unique_ptr<PrimeTable> table;

    PrimeTable& pt() {
        if (!table) table = std::make_unique<PrimeTable>(sieve_limit);
        return *table;
    }
};

namespace {

char* dup_out(const std::string& s) {
    char* p = (char*)std::malloc(s.size() + 1);
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class F>
int guarded(st_context* ctx, F&& f) {
    if (!ctx) return ST_EINVAL;
    ctx->err.clear();
    try {
        return f();
    } catch (const TieError& e) {
        ctx->err = e.what();
        return ST_ETIE;
    } catch (const std::invalid_argument& e) {
        ctx->err = e.what();
        return ST_EINVAL;
    } catch (const std::out_of_range& e) {
        ctx->err = e.what();
        return ST_ERANGE;
    } catch (const std::domain_error& e) {
        ctx->err = e.what();
        return ST_EDOMAIN;
    } catch (const std::exception& e) {
        ctx->err = e.what();
        return ST_EFAIL;
    } catch (...) {
        ctx->err = "unknown failure";
        return ST_EFAIL;
    }
}

int fail(st_context* ctx, int code, const char* msg) {
    ctx->err = msg;
    return code;
}

std::string champions_json(const ChampionSequence& seq) {
    auto arr = nlohmann::json::array();
    for (const Record& r : seq.records()) {
        nlohmann::json j;
        j["index"] = r.index;
        j["factorization"] = factored_string(seq.table(), seq.factorization(r.index));
        if (r.n_exact)
            j["n"] = r.n;
        else
            j["n"] = nullptr;
        j["sigma_over_n"] = (double)r.sigma_over_n();
        if (r.tau_exact)
            j["tau"] = r.tau;
        else
            j["tau"] = nullptr;
        j["log_tau"] = (double)r.log_tau;
        if (r.eps_hi == HUGE_VALQ)
            j["eps_hi"] = nullptr;
        else
            j["eps_hi"] = (double)r.eps_hi;
        j["eps_lo"] = (double)r.eps_lo;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

// deep enough to contain the requested stream index; the sieve's certification
// range bounds how far this can go (out_of_range past it)
std::unique_ptr<ChampionSequence> sequence_containing(PrimeTable& pt, uint32_t eps_index) {
    real_x floor = 0.01Q;
    for (;;) {
        auto seq = std::make_unique<ChampionSequence>(pt, floor);
        if (seq->stream().size() >= eps_index) return seq;
        floor /= 4;
    }
}

} // namespace

extern "C" {

int st_context_new(uint64_t sieve_limit, st_context** out) {
    if (!out) return ST_EINVAL;
    *out = nullptr;
    if (sieve_limit == 0) sieve_limit = DEFAULT_SIEVE_LIMIT;
    if (sieve_limit < 10) return ST_EINVAL;
    try {
        auto ctx = std::make_unique<st_context>();
        ctx->sieve_limit = sieve_limit;
        *out = ctx.release();
        return ST_OK;
    } catch (const std::exception&) {
        return ST_EFAIL;
    }
}

void st_context_free(st_context* ctx) {
    delete ctx;
}

const char* st_last_error(const st_context* ctx) {
    return ctx ? ctx->err.c_str() : "null context";
}

uint64_t st_sieve_limit(const st_context* ctx) {
    return ctx ? ctx->sieve_limit : 0;
}

void st_string_free(char* s) {
    std::free(s);
}

int st_champions(st_context* ctx, const char* eps_min, const char* format, char** out) {
    return guarded(ctx, [&] {
        if (!eps_min || !out) return fail(ctx, ST_EINVAL, "null argument");
        *out = nullptr;
        real_x e = rx_parse(eps_min);
        if (!(e > 0)) return fail(ctx, ST_EINVAL, "eps_min must be positive");
        std::string fmt = format ? format : "csv";
        if (fmt != "csv" && fmt != "json") return fail(ctx, ST_EINVAL, "format must be csv or json");
        ChampionSequence seq(ctx->pt(), e);
        *out = dup_out(fmt == "csv" ? champions_csv(seq) : champions_json(seq));
        return *out ? ST_OK : fail(ctx, ST_EFAIL, "allocation failed");
    });
}

int st_benefit_enum(st_context* ctx, uint32_t eps_index, const char* budget, char** out) {
    return guarded(ctx, [&] {
        if (!budget || !out) return fail(ctx, ST_EINVAL, "null argument");
        *out = nullptr;
        if (eps_index == 0) return fail(ctx, ST_EINVAL, "eps_index is 1-based");
        real_x b = rx_parse(budget);
        auto seq = sequence_containing(ctx->pt(), eps_index);
        EnumerateResult er = enumerate_at(*seq, eps_index, b);
        *out = dup_out(hits_csv(*seq, er));
        return *out ? ST_OK : fail(ctx, ST_EFAIL, "allocation failed");
    });
}

int st_census(st_context* ctx, const char* threshold, char** out) {
    return guarded(ctx, [&] {
        if (!threshold || !out) return fail(ctx, ST_EINVAL, "null argument");
        *out = nullptr;
        real_x x = rx_parse(threshold);
        ChampionSequence seq(ctx->pt(), psi(175939, 1));
        CensusCount cc = census_count(seq, x);
        nlohmann::json j;
        j["threshold"] = threshold;
        j["count"] = cc.count;
        j["windows_enumerated"] = cc.windows_enumerated;
        j["window_min"] = cc.window_min;
        j["window_max"] = cc.window_max;
        j["max_budget"] = (double)cc.max_budget;
        *out = dup_out(j.dump(2) + "\n");
        return *out ? ST_OK : fail(ctx, ST_EFAIL, "allocation failed");
    });
}

int st_verify(st_context* ctx, const char* pipeline, int heavy, const char* format, char** out,
              int* failures) {
    return guarded(ctx, [&] {
        if (!pipeline || !out || !failures) return fail(ctx, ST_EINVAL, "null argument");
        *out = nullptr;
        *failures = 0;
        std::string fmt = format ? format : "json";
        if (fmt != "json" && fmt != "text")
            return fail(ctx, ST_EINVAL, "format must be json or text");
        VerifyConfig cfg{ctx->sieve_limit, heavy != 0};
        std::string name = pipeline;
        std::vector<ClaimReport> reports;
        if (name == "all")
            reports = verify_all(cfg);
        else if (name == "theorem1")
            reports = {verify_theorem1(cfg)};
        else if (name == "theorem2")
            reports = {verify_theorem2(cfg)};
        else if (name == "theorem3")
            reports = {verify_theorem3(cfg)};
        else if (name == "inequalities")
            reports = {verify_inequalities(cfg)};
        else
            return fail(ctx, ST_EINVAL, "unknown pipeline");
        for (const ClaimReport& r : reports) *failures += r.failed();
        *out = dup_out(fmt == "json" ? report_json(reports) : report_text(reports));
        return *out ? ST_OK : fail(ctx, ST_EFAIL, "allocation failed");
    });
}

int st_hull(st_context* ctx, uint64_t limit, char** points_csv, char** vertices_csv) {
    return guarded(ctx, [&] {
        if (!points_csv || !vertices_csv) return fail(ctx, ST_EINVAL, "null argument");
        *points_csv = nullptr;
        *vertices_csv = nullptr;
        HullExport h = export_hull(limit);
        *points_csv = dup_out(h.points_csv);
        *vertices_csv = dup_out(h.vertices_csv);
        if (!*points_csv || !*vertices_csv) {
            std::free(*points_csv);
            std::free(*vertices_csv);
            *points_csv = *vertices_csv = nullptr;
            return fail(ctx, ST_EFAIL, "allocation failed");
        }
        return (int)ST_OK;
    });
}

} // extern "C"
