// superchampion.hpp
// The elements of the critical set psi(p, alpha) drive everything here: sorted
// decreasing, each one appends exactly one prime factor to the previous
// champion, so champion i is the product of the first i stream steps. Numbers
// themselves overflow u64 almost immediately; records carry log-domain stats
// plus the step that created them, and factorizations are replayed on demand.
#pragma once
#include "arith.hpp"
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sigmatau {

// closest approach between two stream values, measured as |g1(e') - g1(e'')|;
// below this the ordering is considered unresolved and generation aborts
inline constexpr double TIE_TOLERANCE_G1 = 1e-3;

struct TieError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// psi(p, alpha) = log(1 + (p-1)/(p^(alpha+1)-p)) / log(1 + 1/alpha);
// +inf for alpha = 0, strictly decreasing in p and alpha
real_x psi(uint64_t p, uint32_t alpha);

// theta(p, alpha) = log(sigma(p^alpha)/p^alpha) - eps log(alpha+1)
real_x theta(uint64_t p, uint32_t alpha, real_x eps);

// g1(eps) = 1/(2^eps - 1); g1(psi(p,1)) = p
real_x g1_of_eps(real_x eps);

struct AlphaChoice {
    uint32_t alpha;  // the exponent maximizing sigma(p^a)/(p^a (a+1)^eps)
    bool tied;       // eps sits (numerically) on psi(p, alpha): alpha-1 ties
};
AlphaChoice alpha_for(uint64_t p, real_x eps);

struct CriticalStep {
    real_x eps;      // psi(p, alpha)
    real_x g1;
    uint64_t p;
    uint32_t alpha;  // exponent p reaches when this step is applied
};

// all psi(p, alpha) >= eps_min, sorted decreasing; throws TieError when two
// values come closer than TIE_TOLERANCE_G1, out_of_range if the sieve is too
// small to certify completeness. next_below, if given, receives the largest
// critical value strictly below eps_min (the true end of the last record's
// validity interval).
std::vector<CriticalStep> critical_stream(const PrimeTable& pt, real_x eps_min,
                                          real_x* next_below = nullptr);

struct Record {
    uint32_t index;
    uint64_t p;        // prime multiplied in at this step (0 for index 0)
    uint32_t alpha;    // its new exponent
    real_x eps_hi;     // creating critical value; HUGE_VALQ for index 0
    real_x eps_lo;     // next critical value (for the last record, the largest one below the floor)
    real_x log_n, log_sigma_n, log_tau, log_n_phi;
    uint64_t n;        // exact while it fits u64, else 0 with n_exact = false
    bool n_exact;
    uint64_t tau;
    bool tau_exact;
    uint32_t omega;

    real_x sigma_over_n() const { return rx_exp(log_sigma_n); }
};

class ChampionSequence {
public:
    ChampionSequence(const PrimeTable& pt, real_x eps_min);

    const std::vector<Record>& records() const { return records_; }
    const std::vector<CriticalStep>& stream() const { return stream_; }
    real_x eps_min() const { return eps_min_; }
    // largest critical value strictly below eps_min
    real_x eps_next() const { return eps_next_; }
    const PrimeTable& table() const { return pt_; }

    // prime factorization of champion #index, replayed from the stream prefix
    Factorization factorization(uint32_t index) const;

    // (minus, plus) record indices optimal at eps (equal unless eps is a
    // stream value); out_of_range below eps_min
    std::pair<uint32_t, uint32_t> locate(real_x eps) const;

    // independent reconstruction of champion #index from the psi bracketing alone
    void validate(uint32_t index) const;

private:
    const PrimeTable& pt_;
    real_x eps_min_;
    real_x eps_next_ = 0;  // set by critical_stream; must precede stream_
    std::vector<CriticalStep> stream_;
    std::vector<Record> records_;
};

} // namespace sigmatau
