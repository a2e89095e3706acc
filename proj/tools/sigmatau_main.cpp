// sigmatau CLI. Everything goes through the C API in sigmatau.h; this file
// deliberately knows nothing about the library internals.
#include "sigmatau.h"
#include "CLI11.hpp"
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

namespace {

struct Ctx {
    st_context* p = nullptr;
    ~Ctx() { st_context_free(p); }
};

struct Str {
    char* s = nullptr;
    ~Str() { st_string_free(s); }
};

// usage errors exit 2, runtime errors 3
int report_api_error(st_context* ctx, int code) {
    std::cerr << "error: " << (ctx ? st_last_error(ctx) : "context creation failed") << "\n";
    return code == ST_EINVAL ? 2 : 3;
}

bool write_file(const std::string& path, const char* data) {
    std::ofstream f(path, std::ios::binary);
    f << data;
    return (bool)f;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sigma/tau extremal statistics: champions, benefit enumeration, verification"};
    app.require_subcommand(1);

    uint64_t sieve_limit = 0;
    app.add_option("--sieve-limit", sieve_limit,
                   "prime sieve bound; 0 selects the default (2500000)")
        ->envname("SIGMATAU_SIEVE_LIMIT");

    auto* sc = app.add_subcommand("superchampion", "champion sequence");
    sc->require_subcommand(1);
    auto* sc_list = sc->add_subcommand("list", "champions with creating value >= eps-min");
    std::string eps_min, sc_format = "csv";
    sc_list->add_option("--eps-min", eps_min, "smallest critical value kept")->required();
    sc_list->add_option("--format", sc_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* be = app.add_subcommand("benefit", "bounded-benefit enumeration");
    be->require_subcommand(1);
    auto* be_enum = be->add_subcommand("enum", "all n within a benefit budget of a champion");
    uint32_t eps_index = 0;
    std::string budget;
    be_enum->add_option("--eps-index", eps_index, "1-based index into the critical stream")
        ->required();
    be_enum->add_option("--budget", budget, "benefit budget (must be < eps log 2)")->required();
    auto* be_census = be->add_subcommand("census", "count n with f1(n) >= threshold");
    std::string threshold;
    be_census->add_option("--threshold", threshold, "f1 threshold (e.g. 2.595)")->required();

    auto* vf = app.add_subcommand("verify", "claim verification pipelines");
    std::string pipeline = "all", vf_format = "json", report_path;
    bool heavy = false;
    vf->add_option("pipeline", pipeline, "theorem1|theorem2|theorem3|inequalities|all")
        ->check(CLI::IsMember({"theorem1", "theorem2", "theorem3", "inequalities", "all"}));
    vf->add_flag("--heavy", heavy, "include claims needing a 1e8 sieve (slow)");
    vf->add_option("--format", vf_format, "json or text")->check(CLI::IsMember({"json", "text"}));
    vf->add_option("--report", report_path, "write the report here instead of stdout");

    auto* hull = app.add_subcommand("hull", "sigma/tau scatter and its champion chain");
    hull->require_subcommand(1);
    auto* hull_export = hull->add_subcommand("export", "emit point and vertex CSVs");
    uint64_t hull_limit = 0;
    std::string points_out, vertices_out;
    hull_export->add_option("--limit", hull_limit, "scan 1..limit (at most 2e7)")->required();
    hull_export->add_option("--points-out", points_out, "write the point cloud CSV here");
    hull_export->add_option("--vertices-out", vertices_out,
                            "write the vertex CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Ctx ctx;
    int rc = st_context_new(sieve_limit, &ctx.p);
    if (rc != ST_OK) return report_api_error(ctx.p, rc);

    if (sc_list->parsed()) {
        Str out;
        rc = st_champions(ctx.p, eps_min.c_str(), sc_format.c_str(), &out.s);
        if (rc != ST_OK) return report_api_error(ctx.p, rc);
        std::cout << out.s;
        return 0;
    }
    if (be_enum->parsed()) {
        Str out;
        rc = st_benefit_enum(ctx.p, eps_index, budget.c_str(), &out.s);
        if (rc != ST_OK) return report_api_error(ctx.p, rc);
        std::cout << out.s;
        return 0;
    }
    if (be_census->parsed()) {
        Str out;
        rc = st_census(ctx.p, threshold.c_str(), &out.s);
        if (rc != ST_OK) return report_api_error(ctx.p, rc);
        std::cout << out.s;
        return 0;
    }
    if (vf->parsed()) {
        Str out;
        int failures = 0;
        rc = st_verify(ctx.p, pipeline.c_str(), heavy ? 1 : 0, vf_format.c_str(), &out.s,
                       &failures);
        if (rc != ST_OK) return report_api_error(ctx.p, rc);
        if (report_path.empty()) {
            std::cout << out.s;
        } else if (!write_file(report_path, out.s)) {
            std::cerr << "error: cannot write " << report_path << "\n";
            return 3;
        }
        if (failures > 0) {
            std::cerr << "verification failed: " << failures << " claim(s)\n";
            return 1;
        }
        return 0;
    }
    if (hull_export->parsed()) {
        Str pts, vts;
        rc = st_hull(ctx.p, hull_limit, &pts.s, &vts.s);
        if (rc != ST_OK) return report_api_error(ctx.p, rc);
        if (!points_out.empty() && !write_file(points_out, pts.s)) {
            std::cerr << "error: cannot write " << points_out << "\n";
            return 3;
        }
        if (vertices_out.empty()) {
            std::cout << vts.s;
        } else if (!write_file(vertices_out, vts.s)) {
            std::cerr << "error: cannot write " << vertices_out << "\n";
            return 3;
        }
        return 0;
    }
    return 2;
}
