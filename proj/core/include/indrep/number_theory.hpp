#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace indrep {

bool is_prime(std::uint64_t n);

/// Prime factorisation as (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// The prime p with n = p^k (k >= 1), if any.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

/// True for 1 and for prime powers.
bool is_prime_power_or_one(std::uint64_t n);

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

std::uint64_t invmod(std::uint64_t a, std::uint64_t mod);

/// Least generator of the multiplicative group of Z/p.
std::uint64_t primitive_root(std::uint64_t p);

}  // namespace indrep
