#include "flagcones/arith.hpp"

#include <limits>
#include <stdexcept>

namespace flagcones::arith {

TowerType::TowerType(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("TowerType: needs at least one part");
    for (int p : parts_) {
        if (p < 2) throw std::invalid_argument("TowerType: every part must be >= 2");
        if (degree_ > std::numeric_limits<std::int64_t>::max() / p)
            throw std::overflow_error("TowerType: degree exceeds 64-bit range");
        degree_ *= p;
    }
}

std::string TowerType::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    s += ")";
    return s;
}

Digits digits(std::int64_t i, const TowerType& radix) {
    if (i < 0 || i >= radix.degree())
        throw std::out_of_range("digits: index " + std::to_string(i) + " not in [0, " +
                                std::to_string(radix.degree()) + ")");
    std::vector<int> d;
    d.reserve(radix.parts().size());
    for (int p : radix.parts()) {
        d.push_back(static_cast<int>(i % p));
        i /= p;
    }
    return Digits{std::move(d), radix};
}

std::int64_t value(const Digits& d) {
    const auto& parts = d.radix.parts();
    if (d.values.size() != parts.size())
        throw std::invalid_argument("value: digit count does not match radix length");
    std::int64_t v = 0;
    std::int64_t scale = 1;
    for (std::size_t s = 0; s < parts.size(); ++s) {
        if (d.values[s] < 0 || d.values[s] >= parts[s])
            throw std::invalid_argument("value: digit " + std::to_string(d.values[s]) +
                                        " out of bound for part " + std::to_string(parts[s]));
        v += scale * d.values[s];
        scale *= parts[s];
    }
    return v;
}

bool overflows(std::int64_t i, std::int64_t j, const TowerType& radix) {
    if (i < 0 || j < 0 || i + j >= radix.degree())
        throw std::out_of_range("overflows: need 0 <= i, j and i + j < degree");
    std::int64_t k = i + j;
    for (int p : radix.parts()) {
        if (i % p + j % p != k % p) return true;
        i /= p;
        j /= p;
        k /= p;
    }
    return false;
}

bool overflows_mod(std::int64_t i, std::int64_t j, std::int64_t m, std::int64_t n) {
    if (m <= 1 || m >= n || n % m != 0)
        throw std::invalid_argument("overflows_mod: need 1 < m < n with m | n");
    return overflows(i, j, TowerType({static_cast<int>(m), static_cast<int>(n / m)}));
}

namespace {

void factorizations_rec(std::int64_t n, std::vector<int>& cur, std::vector<TowerType>& out) {
    if (n == 1) {
        if (!cur.empty()) out.emplace_back(cur);
        return;
    }
    for (std::int64_t d = 2; d <= n; ++d) {
        if (n % d == 0) {
            cur.push_back(static_cast<int>(d));
            factorizations_rec(n / d, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<TowerType> tower_types_of_degree(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("tower_types_of_degree: need n >= 2");
    std::vector<TowerType> out;
    std::vector<int> cur;
    factorizations_rec(n, cur, out);
    return out;
}

std::vector<TowerType> prime_tower_types_of_degree(std::int64_t n) {
    std::vector<TowerType> out;
    for (auto& t : tower_types_of_degree(n)) {
        bool all_prime = true;
        for (int p : t.parts())
            if (!is_prime(p)) all_prime = false;
        if (all_prime) out.push_back(t);
    }
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace flagcones::arith
