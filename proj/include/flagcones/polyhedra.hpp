#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagcones/flags.hpp"
#include "flagcones/rational.hpp"

namespace flagcones::poly {

using arith::TowerType;
using flags::Flag;
using flags::FlagType;

using RationalVector = std::vector<Rational>;

/// Homogeneous H-representation of the cone P_T: rows c with meaning
/// c . x >= 0 over x = (x_1,...,x_{n-1}). Chain inequalities first, then one
/// inequality x_i + x_j - x_{T(i,j)} >= 0 per corner with i <= j.
struct ConeHRep {
    int dim = 0;
    std::vector<std::vector<std::int64_t>> ineqs;
};

ConeHRep h_rep(const FlagType& T);

/// Exact membership x in P_T. Checks the chain and every corner inequality;
/// in debug builds also asserts equivalence with the full inequality set.
bool member(const FlagType& T, const RationalVector& x);

/// P_T subset of P_T2, decided combinatorially (le(T2, T)).
bool subset(const FlagType& T, const FlagType& T2);

/// If not le(T2, T): a corner (i,j) of T2 with T(i,j) < T2(i,j), chosen as
/// the most violated one (largest T2(i,j) - T(i,j), ties lexicographic).
std::optional<std::pair<int, int>> separating_corner(const FlagType& T, const FlagType& T2);

/// One inequality sum_j c_j x_j >= rhs with exact integer data.
struct LinearRow {
    std::vector<BigInt> coeffs;
    BigInt rhs;
};

struct LinearSystem {
    int dim = 0;
    std::vector<LinearRow> rows;
};

struct FeasibilityOptions {
    // Fourier-Motzkin up to this dimension, exact-pivot simplex above
    int fm_max_dim = 20;
    // FM aborts to simplex past this many live rows
    std::size_t fm_row_budget = 200000;
};

/// Exact feasibility: a rational solution of the system, or nullopt.
/// FM back-substitution picks interval midpoints, so the returned point
/// sits in the relative interior of the projected intervals.
std::optional<RationalVector> feasible_point(const LinearSystem& sys,
                                             const FeasibilityOptions& opts = {});

struct EscapeOptions {
    std::int64_t budget = 100000;  // corner-choice combinations
    FeasibilityOptions feas;
};

struct EscapeResult {
    std::optional<RationalVector> point;
    // one (i, j, T'(i,j)) per excluded cone when a point was found
    std::vector<std::array<int, 3>> chosen;
    std::int64_t explored = 0;
};

/// A point of P_T outside every excluded cone, or nullopt after exhausting
/// all corner choices. Throws on budget exhaustion with combinations left.
EscapeResult escape_point(const FlagType& T, const std::vector<FlagType>& excluded,
                          const EscapeOptions& opts = {});

/// Like escape_point but demands a fully generic point: every inequality of
/// P_T strict, chain gaps positive, and x_k != x_i + x_j for all triples.
/// Suitable input for lift_point.
EscapeResult generic_escape_point(const FlagType& T, const std::vector<FlagType>& excluded,
                                  const EscapeOptions& opts = {});

struct LiftResult {
    RationalVector point;
    Rational epsilon;
};

/// x'_i = eps * i_1 / (2p) + x_{i_2} for i = i_1 + i_2 p in radix (p, m).
/// eps is the least of x_1 and the consecutive gaps; zero eps is an error.
LiftResult lift_point(const RationalVector& x, const FlagType& T, int p);

/// Least m in [q, floor(qr/2)] whose doubled multiple pm overflows mod q
/// while m + m overflows neither mod q nor mod r. Throws if none exists.
std::int64_t find_m(std::int64_t p, std::int64_t q, std::int64_t r);

enum class WitnessKind { p2q, pqr, fourp };

struct FacetMargin {
    int i = 0, j = 0, k = 0;
    Rational margin;  // x_i + x_j - x_k
};

struct ExclusionRecord {
    TowerType tower;
    int i = 0, j = 0, k = 0;
    Rational margin;  // x_i + x_j - x_k, strictly negative
};

/// A checked realizable-flag-outside-prime-cones certificate: the flag, the
/// proof's explicit point, the satisfied facets of P_{T_F}, and one violated
/// corner inequality per excluded prime-tower cone.
struct WitnessCertificate {
    WitnessKind kind;
    std::vector<std::int64_t> primes;
    Flag flag;
    FlagType flag_type;
    RationalVector point;
    std::vector<FacetMargin> facets;
    std::vector<ExclusionRecord> exclusions;
};

/// Builds the explicit counterexample flag and point for the given family
/// and verifies every membership and exclusion claim exactly. Any failed
/// claim throws with the first offending inequality.
WitnessCertificate counterexample_witness(WitnessKind kind, const std::vector<std::int64_t>& primes);

std::string witness_kind_name(WitnessKind k);

}  // namespace flagcones::poly
