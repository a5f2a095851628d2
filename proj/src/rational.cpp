#include "bicrit/rational.hpp"

#include <cctype>

#include "bicrit/error.hpp"
#include "bicrit/rng.hpp"

namespace bicrit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvariant: return "InvariantError";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kDimension: return "DimensionError";
    case ErrorCode::kIterationLimit: return "IterationLimit";
    case ErrorCode::kConfigExplosion: return "ConfigExplosion";
    case ErrorCode::kInfeasibleClp: return "InfeasibleClp";
    case ErrorCode::kInvalidAssignment: return "InvalidAssignment";
    case ErrorCode::kNoPlantedWitness: return "NoPlantedWitness";
    case ErrorCode::kNonIntegralDummyCount: return "NonIntegralDummyCount";
    case ErrorCode::kMissingWitness: return "MissingWitness";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kMismatch: return "Mismatch";
  }
  return "Error";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::kParse, "not a rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::kParse, "zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

mpz_class floor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

mpz_class ceil(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational Rng::unit() {
  const std::uint64_t u = (*this)();
  mpz_class num;
  mpz_import(num.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
  mpz_class den(1);
  den <<= 64;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool Rng::bernoulli(const Rational& p) {
  // u / 2^64 < p  <=>  u < p * 2^64
  const Rational u = unit();
  return u < p;
}

}  // namespace bicrit
