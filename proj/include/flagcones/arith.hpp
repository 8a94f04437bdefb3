#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flagcones::arith {

/// A tuple (n_1,...,n_t) of integers >= 2. Drives mixed-radix digit
/// expansions, canonical flags and their cones.
class TowerType {
public:
    explicit TowerType(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    std::int64_t degree() const { return degree_; }

    bool operator==(const TowerType& o) const { return parts_ == o.parts_; }
    bool operator!=(const TowerType& o) const { return !(*this == o); }
    bool operator<(const TowerType& o) const { return parts_ < o.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    std::int64_t degree_ = 1;
};

/// Mixed-radix digits d_1..d_t (least significant first) with 0 <= d_s < n_s.
struct Digits {
    std::vector<int> values;
    TowerType radix;
};

/// Digits of i with respect to the radix: i = d_1 + d_2 n_1 + d_3 n_1 n_2 + ...
Digits digits(std::int64_t i, const TowerType& radix);

/// Inverse of digits(); validates digit bounds.
std::int64_t value(const Digits& d);

/// True iff adding i and j is not digit-wise: some position carries.
/// Requires 0 <= i, j and i + j < degree(radix).
bool overflows(std::int64_t i, std::int64_t j, const TowerType& radix);

/// Overflow modulo an integer 1 < m < n with m | n, via the tower (m, n/m).
bool overflows_mod(std::int64_t i, std::int64_t j, std::int64_t m, std::int64_t n);

/// (i % m) + (j % m) >= m. Agrees with overflows_mod whenever that one is
/// defined, and extends it to i + j >= n and m = n (the Kneser audit needs
/// both extensions).
inline bool remainder_overflow(std::int64_t i, std::int64_t j, std::int64_t m) {
    return (i % m) + (j % m) >= m;
}

/// All tower types of the given degree (ordered factorizations into parts >= 2).
std::vector<TowerType> tower_types_of_degree(std::int64_t n);

/// The subset of tower_types_of_degree with every part prime.
std::vector<TowerType> prime_tower_types_of_degree(std::int64_t n);

bool is_prime(std::int64_t n);

/// Prime factors of n with multiplicity, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t n);

}  // namespace flagcones::arith
