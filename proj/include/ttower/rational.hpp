#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ttower {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatRow = std::vector<Rat>;
using RatMat = std::vector<RatRow>;

// Rank of a dense rational matrix, by Gaussian elimination.
int rat_rank(RatMat m);

// Basis of the right kernel {x : m x = 0}. Each basis vector has length cols.
RatMat kernel_basis(RatMat m, int cols);

// Feasibility of {x >= 0 : a x = b}, exact phase-1 simplex with Bland's rule.
bool feasible_nonneg(const RatMat& a, const RatRow& b);

// Is w a nonnegative rational combination of the columns of gens?
bool in_nonneg_cone(const std::vector<std::vector<long long>>& gens,
                    const std::vector<long long>& w);

// Scale a rational vector to its primitive integer form (gcd 1, all entries
// integral). Requires every entry nonnegative or the vector mixed-sign; signs
// are preserved.
std::vector<Int> primitive_integral(const RatRow& v);

std::string rat_to_string(const Rat& r);

}  // namespace ttower
