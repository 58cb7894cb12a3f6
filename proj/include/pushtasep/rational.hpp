#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pushtasep {

// Exact scalars. Every quantity in the library lives in Q; there is no
// floating-point mode.
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Serialized form is "p/q" with the sign on the numerator, or plain "p"
// when the denominator is 1.
inline std::string rational_str(const Rational& r) { return r.get_str(); }

// Parses "p" or "p/q"; rejects q = 0 and anything mpq cannot read.
// The result is always canonical (reduced, positive denominator).
Rational parse_rational(const std::string& s);

// base^e for integer e (negative e inverts; base must be nonzero then).
Rational rational_pow(const Rational& base, long e);

inline Rational rational_inv(const Rational& r) {
    if (is_zero(r)) throw std::domain_error("rational_inv: division by zero");
    return Rational(1) / r;
}

}  // namespace pushtasep
