#pragma once
// Exact rational scalars backed by GMP.

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace daha {

using Rat = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw Error("rat_pow: zero to negative power");
        Rat inv = 1 / base;
        return rat_pow(inv, -e);
    }
    Rat out(1), b = base;
    long k = e;
    while (k) {
        if (k & 1) out *= b;
        b *= b;
        k >>= 1;
    }
    return out;
}

inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

} // namespace daha
