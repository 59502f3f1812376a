#pragma once

#include <optional>
#include <vector>

#include "eqc/rational.hpp"

namespace eqc {

/// Solves A x = b over Z/d by Smith-style diagonalization of A over Z
/// (row and column gcd reduction with unimodular transforms). Works for any
/// modulus d >= 1, including non-prime d. Returns one solution with entries
/// in [0, d), or nullopt when the system is unsolvable.
std::optional<std::vector<Integer>> solve_mod(std::vector<std::vector<Integer>> A,
                                              std::vector<Integer> b, const Integer& d);

}  // namespace eqc
