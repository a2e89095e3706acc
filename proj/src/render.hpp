// render.hpp
// String/CSV/JSON presentation. Factorizations render with consecutive
// equal-exponent prime runs collapsed ("2^8·3^5·...·13^2·17..113"), ratios of
// two factored numbers render as num/den products of prime powers.
#pragma once
#include "superchampion.hpp"
#include "benefit.hpp"
#include <cstdint>
#include <string>
#include <vector>

namespace sigmatau {

std::string factored_string(const PrimeTable& pt, const Factorization& f);

// "1", "127·131", "2^2·127", "1/113", "127/113", ...
std::string ratio_string(const std::vector<std::pair<uint64_t, int64_t>>& delta);

// exact tau ratio of hit vs base champion as a reduced fraction ("16", "40/9");
// falls back to a decimal rendering if the parts overflow u64
std::string tau_ratio_string(const ChampionSequence& seq,
                             const std::vector<std::pair<uint64_t, int64_t>>& delta,
                             uint32_t base_index);

// fixed CSV header: index,factorization,n,sigma_over_n,tau,log_tau,eps_hi,eps_lo
std::string champions_csv(const ChampionSequence& seq);

// fixed CSV header: n_over_ref,tau_ratio_over_ref,ben,f1,log_n
std::string hits_csv(const ChampionSequence& seq, const EnumerateResult& er);

struct HullExport {
    std::string points_csv;    // n,log_tau,log_sigma_over_n
    std::string vertices_csv;  // index,n,factorization,log_tau,log_sigma_over_n,eps_hi,eps_lo
    size_t n_points, n_vertices;
};

// images of 1..limit plus the champion vertex chain; throws std::logic_error
// if any point escapes above the chain by more than 1e-12
HullExport export_hull(uint64_t limit);

} // namespace sigmatau
