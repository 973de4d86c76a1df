#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace oort {

using Rational = boost::rational<std::int64_t>;

/// Input violates a mathematical precondition.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Working precision too small to certify a requested fact.
class PrecisionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Serializes as "num/den" (den always present).
std::string to_string(const Rational& q);

/// Accepts "a", "a/b", "-a/b".
Rational parse_rational(const std::string& s);

std::int64_t floor_of(const Rational& q);
std::int64_t ceil_of(const Rational& q);
bool is_integer(const Rational& q);

std::int64_t ipow(std::int64_t base, unsigned exp);
std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t inv_mod(std::int64_t a, std::int64_t m);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
bool is_prime(std::int64_t n);

/// p-adic valuation of a nonzero integer.
int vp_int(std::int64_t a, std::int64_t p);

}  // namespace oort
