// benefit.hpp
// Benefit of n against the optimal champion at parameter eps: a sum of
// independent per-prime deviation costs, each increasing as the exponent
// moves away from the champion's. Enumerating everything under a budget
// B < eps log 2 is a finite DFS over per-prime deviation candidates.
#pragma once
#include "superchampion.hpp"
#include <cstdint>
#include <tuple>
#include <vector>

namespace sigmatau {

// cost of exponent beta at prime p when the champion holds alpha
real_x ben_p(uint64_t p, uint32_t alpha, uint32_t beta, real_x eps);

// total benefit of an arbitrary n against champion #ref_index at eps
real_x ben_total(const ChampionSequence& seq, uint32_t ref_index, const Factorization& n, real_x eps);

struct BenefitHit {
    real_x ben;
    real_x log_n, log_sigma_n, log_tau;
    real_x f1;
    // (p, champion exponent, this hit's exponent), ascending p; empty = champion itself
    std::vector<std::tuple<uint64_t, uint32_t, uint32_t>> devs;
};

struct EnumerateResult {
    uint32_t ref_index;
    real_x eps;
    real_x budget;
    std::vector<BenefitHit> hits;  // ben ascending, deterministic tiebreaks
};

// eps = the eps_index-th critical value (1-based), reference champion = the
// "plus" record it creates; budget must satisfy 0 <= B < eps log 2
EnumerateResult enumerate_at(const ChampionSequence& seq, uint32_t eps_index, real_x budget);

// same machinery with eps strictly inside record #index's validity interval
EnumerateResult enumerate_mid(const ChampionSequence& seq, uint32_t index, real_x budget);

// exponent offsets of champion record #index relative to record #base_index
std::vector<std::pair<uint64_t, int64_t>> record_vs_base(const ChampionSequence& seq,
                                                         uint32_t index, uint32_t base_index);

// exponent offsets of a hit relative to an arbitrary champion record; exact
// integers, the canonical identity of the hit for dedup and rendering
std::vector<std::pair<uint64_t, int64_t>> hit_vs_base(const ChampionSequence& seq,
                                                      const EnumerateResult& er,
                                                      const BenefitHit& hit, uint32_t base_index);

struct CensusCount {
    real_x threshold;
    uint64_t count;
    uint32_t windows_enumerated;
    uint32_t window_min, window_max;  // record-index range of enumerated windows
    real_x max_budget;
};

// nu(x): how many n >= 2 have f1(n) >= x. Window-by-window bounded-benefit
// enumeration; needs the sequence generated at least to the omega >= 15985
// tail (beyond which f1 <= 2.32) and x comfortably above that tail bound.
CensusCount census_count(const ChampionSequence& seq, real_x x);

} // namespace sigmatau
