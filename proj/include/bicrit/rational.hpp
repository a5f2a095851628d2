#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace bicrit {

// Exact rational number. All processing times, values and thresholds use it.
using Rational = mpq_class;

// Processing time of a (machine, job) pair; nullopt means Unschedulable.
using ProcTime = std::optional<Rational>;

inline constexpr std::nullopt_t kUnschedulable = std::nullopt;

// Parses "p/q", "p" or "-p"; throws Error(kParse) on anything else or q == 0.
Rational parse_rational(std::string_view text);

// Canonical text: "p" for integers, "p/q" otherwise (lowest terms).
std::string format_rational(const Rational& r);

Rational make_rational(long num, long den = 1);

// Smallest integer >= r.
mpz_class ceil(const Rational& r);
mpz_class floor(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace bicrit
