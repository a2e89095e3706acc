// realx.hpp
// Extended-precision scalar used throughout: IEEE binary128 (__float128),
// 113-bit mantissa ~ 33 decimal digits. All log-domain accumulation happens
// in this type; doubles appear only at presentation boundaries.
#pragma once
#include <quadmath.h>
#include <cstdint>
#include <string>
#include <stdexcept>

namespace sigmatau {

using real_x = __float128;

inline real_x rx_log(real_x x) { return logq(x); }
inline real_x rx_log1p(real_x x) { return log1pq(x); }
inline real_x rx_exp(real_x x) { return expq(x); }
inline real_x rx_abs(real_x x) { return fabsq(x); }
inline real_x rx_sqrt(real_x x) { return sqrtq(x); }

// p^e by squaring; exact below 2^113, thereafter correctly rounded mul chain
inline real_x rx_ipow(real_x p, unsigned e) {
    real_x r = 1, b = p;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline std::string rx_format(real_x x, int digits = 33) {
    char buf[128];
    quadmath_snprintf(buf, sizeof buf, "%.*Qg", digits, x);
    return buf;
}

// fixed-point rendering, round-half-away (matches printf); d decimals
inline std::string rx_fixed(real_x x, int d) {
    char buf[128];
    quadmath_snprintf(buf, sizeof buf, "%.*Qf", d, x);
    return buf;
}

inline real_x rx_parse(const std::string& s) {
    const char* c = s.c_str();
    char* end = nullptr;
    real_x v = strtoflt128(c, &end);
    if (end == c) throw std::invalid_argument("not a number: " + s);
    return v;
}

constexpr double EULER_GAMMA_D = 0.5772156649015328606;
inline real_x rx_euler_gamma() { return strtoflt128("0.577215664901532860606512090082", nullptr); }
inline real_x rx_exp_gamma() { return rx_exp(rx_euler_gamma()); }  // e^gamma = 1.78107...

} // namespace sigmatau
