#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace foulkes {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

inline BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// num/den in lowest terms.
inline Rational ratio(const BigInt& num, const BigInt& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Narrowing conversion; throws std::overflow_error if v does not fit.
std::int64_t to_int64(const BigInt& v);

}  // namespace foulkes
