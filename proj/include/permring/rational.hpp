#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace permring {

/// Exact rational coefficient. All coefficient arithmetic in the library is
/// carried out in this type; there is no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

/// Always "p/q", including integers ("-1/1").
std::string to_string(const Rational& q);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// (-1)^e as a small integer.
constexpr int sign_of_parity(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace permring
