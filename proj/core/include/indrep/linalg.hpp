#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace indrep {

using QMatrix = std::vector<std::vector<mpq_class>>;
using ZMatrix = std::vector<std::vector<mpz_class>>;

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m, std::size_t ncols);

/// Basis of {x : m x = 0}, one vector per free column, with a 1 in that column.
QMatrix nullspace(QMatrix m, std::size_t ncols);

std::size_t rank_rational(QMatrix m, std::size_t ncols);

/// Fraction-free (Bareiss) elimination.
std::size_t rank_bareiss(ZMatrix m);

std::size_t rank_mod_p(const ZMatrix& m, std::uint64_t p);

/// Smallest integer multiple of v whose entries have gcd 1.
std::vector<mpz_class> primitive_integer_vector(const std::vector<mpq_class>& v);

}  // namespace indrep
