#include "flagcones/polyhedra.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace flagcones::poly {

using abelian::Group;
using abelian::GroupElement;
using abelian::GroupPtr;
using abelian::GroupSpec;

ConeHRep h_rep(const FlagType& T) {
    const int n = T.degree();
    ConeHRep h;
    h.dim = n - 1;
    if (n < 2) return h;
    {
        std::vector<std::int64_t> c(h.dim, 0);
        c[0] = 1;  // x_1 >= 0
        h.ineqs.push_back(c);
    }
    for (int i = 1; i <= n - 2; ++i) {
        std::vector<std::int64_t> c(h.dim, 0);
        c[i] = 1;
        c[i - 1] = -1;  // x_{i+1} - x_i >= 0
        h.ineqs.push_back(c);
    }
    for (auto [i, j] : corners(T)) {
        if (i > j) continue;
        const int k = T.at(i, j);
        std::vector<std::int64_t> c(h.dim, 0);
        c[i - 1] += 1;
        c[j - 1] += 1;
        c[k - 1] -= 1;  // x_i + x_j - x_{T(i,j)} >= 0
        h.ineqs.push_back(c);
    }
    return h;
}

namespace {

bool member_corners_only(const FlagType& T, const RationalVector& x) {
    const int n = T.degree();
    const Rational zero;
    if (n >= 2 && x[0] < zero) return false;
    for (int i = 1; i < n - 1; ++i)
        if (x[i] < x[i - 1]) return false;
    for (auto [i, j] : corners(T)) {
        if (i > j) continue;
        if (x[T.at(i, j) - 1] > x[i - 1] + x[j - 1]) return false;
    }
    return true;
}

bool member_all_products(const FlagType& T, const RationalVector& x) {
    const int n = T.degree();
    const Rational zero;
    if (n >= 2 && x[0] < zero) return false;
    for (int i = 1; i < n - 1; ++i)
        if (x[i] < x[i - 1]) return false;
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (x[T.at(i, j) - 1] > x[i - 1] + x[j - 1]) return false;
    return true;
}

}  // namespace

bool member(const FlagType& T, const RationalVector& x) {
    if (static_cast<int>(x.size()) != T.degree() - 1)
        throw std::invalid_argument("member: dimension mismatch");
    bool r = member_corners_only(T, x);
    assert(r == member_all_products(T, x));
    return r;
}

bool subset(const FlagType& T, const FlagType& T2) {
    if (T.degree() != T2.degree()) throw std::invalid_argument("subset: degree mismatch");
    return le(T2, T);
}

std::optional<std::pair<int, int>> separating_corner(const FlagType& T, const FlagType& T2) {
    if (T.degree() != T2.degree())
        throw std::invalid_argument("separating_corner: degree mismatch");
    std::optional<std::pair<int, int>> best;
    int best_gap = 0;
    for (auto [i, j] : corners(T2)) {
        int gap = T2.at(i, j) - T.at(i, j);
        if (gap > best_gap) {
            best_gap = gap;
            best = std::make_pair(i, j);
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// exact feasibility: Fourier-Motzkin at low dimension, simplex above
// ---------------------------------------------------------------------------

namespace {

struct Row {
    std::vector<BigInt> c;
    BigInt rhs;
};

void normalize_row(Row& r) {
    BigInt g;
    for (const auto& v : r.c)
        if (!v.is_zero()) g = g.is_zero() ? v.abs() : BigInt::gcd(g, v);
    if (!r.rhs.is_zero()) g = g.is_zero() ? r.rhs.abs() : BigInt::gcd(g, r.rhs);
    if (g.is_zero() || g == BigInt(1)) return;
    for (auto& v : r.c) v = v / g;
    r.rhs = r.rhs / g;
}

std::string row_key(const Row& r) {
    std::string k;
    for (const auto& v : r.c) {
        v.append_key(k);
        k.push_back('|');
    }
    return k;
}

bool all_zero(const Row& r) {
    for (const auto& v : r.c)
        if (!v.is_zero()) return false;
    return true;
}

class FMState {
public:
    explicit FMState(const LinearSystem& sys, std::size_t row_budget)
        : dim_(sys.dim), budget_(row_budget) {
        for (const auto& in : sys.rows) {
            Row r{in.coeffs, in.rhs};
            if (static_cast<int>(r.c.size()) != dim_)
                throw std::invalid_argument("feasible_point: row arity mismatch");
            push(std::move(r));
        }
    }

    // returns false on proven infeasibility, throws on budget blowout
    bool eliminate_all() {
        std::vector<char> live(dim_, 1);
        for (int step = 0; step < dim_; ++step) {
            if (infeasible_) return false;
            int var = pick_var(live);
            if (var < 0) break;
            live[var] = 0;
            eliminate(var);
            if (infeasible_) return false;
        }
        // everything left is constant
        return !infeasible_;
    }

    RationalVector back_substitute() const {
        RationalVector x(dim_, Rational(0));
        for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
            const int k = it->first;
            std::optional<Rational> lower, upper;
            for (const auto& r : it->second) {
                Rational rest(r.rhs, BigInt(1));
                for (int j = 0; j < dim_; ++j) {
                    if (j == k || r.c[j].is_zero()) continue;
                    rest -= Rational(r.c[j], BigInt(1)) * x[j];
                }
                Rational bound = rest / Rational(r.c[k], BigInt(1));
                if (r.c[k].sign() > 0) {
                    if (!lower || bound > *lower) lower = bound;
                } else {
                    if (!upper || bound < *upper) upper = bound;
                }
            }
            if (lower && upper) {
                if (*lower > *upper) throw std::logic_error("FM back-substitution: empty interval");
                x[k] = (*lower + *upper) / Rational(2);
            } else if (lower) {
                x[k] = *lower + Rational(1);
            } else if (upper) {
                x[k] = *upper - Rational(1);
            }
        }
        return x;
    }

private:
    void push(Row r) {
        normalize_row(r);
        if (all_zero(r)) {
            if (r.rhs.sign() > 0) infeasible_ = true;
            return;
        }
        auto key = row_key(r);
        auto it = index_.find(key);
        if (it != index_.end()) {
            // same left side: keep the tighter right side
            if (r.rhs > rows_[it->second].rhs) rows_[it->second].rhs = std::move(r.rhs);
            return;
        }
        index_.emplace(std::move(key), rows_.size());
        rows_.push_back(std::move(r));
        if (rows_.size() > budget_) throw std::length_error("fm row budget exceeded");
    }

    int pick_var(const std::vector<char>& live) {
        int best = -1;
        long best_cost = 0;
        for (int k = 0; k < dim_; ++k) {
            if (!live[k]) continue;
            long pos = 0, neg = 0;
            for (const auto& r : rows_) {
                int s = r.c[k].sign();
                if (s > 0) ++pos;
                else if (s < 0) ++neg;
            }
            long cost = pos * neg - (pos + neg);
            if (best < 0 || cost < best_cost) {
                best = k;
                best_cost = cost;
            }
        }
        return best;
    }

    void eliminate(int k) {
        std::vector<Row> keep, pos, neg;
        for (auto& r : rows_) {
            int s = r.c[k].sign();
            if (s == 0) keep.push_back(std::move(r));
            else if (s > 0) pos.push_back(std::move(r));
            else neg.push_back(std::move(r));
        }
        // remember the rows that bound x_k for back-substitution
        std::vector<Row> level;
        level.reserve(pos.size() + neg.size());
        for (const auto& r : pos) level.push_back(r);
        for (const auto& r : neg) level.push_back(r);
        levels_.emplace_back(k, std::move(level));

        rows_.clear();
        index_.clear();
        for (auto& r : keep) push(std::move(r));
        for (const auto& rp : pos) {
            const BigInt a = rp.c[k];
            for (const auto& rn : neg) {
                const BigInt b = rn.c[k].abs();
                Row comb;
                comb.c.resize(dim_);
                for (int j = 0; j < dim_; ++j) comb.c[j] = b * rp.c[j] + a * rn.c[j];
                comb.rhs = b * rp.rhs + a * rn.rhs;
                push(std::move(comb));
                if (infeasible_) return;
            }
        }
    }

    int dim_;
    std::size_t budget_;
    bool infeasible_ = false;
    std::vector<Row> rows_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::pair<int, std::vector<Row>>> levels_;
};

// exact phase-1 simplex with Bland's rule; relies on the caller's system
// implying x >= 0 (cone systems do, via the chain rows)
std::optional<RationalVector> simplex_feasible(const LinearSystem& sys) {
    const int d = sys.dim;
    const int m = static_cast<int>(sys.rows.size());
    int n_art = 0;
    for (const auto& r : sys.rows)
        if (r.rhs.sign() > 0) ++n_art;
    const int cols = d + m + n_art;  // structural + slack + artificial
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(cols + 1, Rational(0)));
    std::vector<int> basis(m, -1);
    std::vector<char> artificial(cols, 0);
    int art_at = d + m;
    for (int r = 0; r < m; ++r) {
        const auto& row = sys.rows[r];
        const bool flip = row.rhs.sign() <= 0;  // make rhs nonnegative
        for (int j = 0; j < d; ++j) {
            Rational v(row.coeffs[j], BigInt(1));
            a[r][j] = flip ? -v : v;
        }
        a[r][d + r] = flip ? Rational(1) : Rational(-1);  // slack of c.x >= rhs
        Rational rhs(row.rhs, BigInt(1));
        a[r][cols] = flip ? -rhs : rhs;
        if (flip) {
            basis[r] = d + r;
        } else {
            a[r][art_at] = Rational(1);
            artificial[art_at] = 1;
            basis[r] = art_at;
            ++art_at;
        }
    }
    // objective: minimize the artificial sum. The z-row is the sum of the
    // artificial rows with the artificial columns themselves zeroed, so that
    // z vanishes on every basic column and z[cols] tracks the objective.
    std::vector<Rational> z(cols + 1, Rational(0));
    for (int r = 0; r < m; ++r) {
        if (!artificial[basis[r]]) continue;
        for (int j = 0; j <= cols; ++j) z[j] += a[r][j];
    }
    for (int j = 0; j < cols; ++j)
        if (artificial[j]) z[j] = Rational(0);
    const long iteration_cap = 200000;
    for (long it = 0; it < iteration_cap; ++it) {
        int enter = -1;
        for (int j = 0; j < cols; ++j) {
            if (artificial[j]) continue;
            if (z[j].sign() > 0) {  // Bland: first improving column
                enter = j;
                break;
            }
        }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int r = 0; r < m; ++r) {
            if (a[r][enter].sign() <= 0) continue;
            Rational ratio = a[r][cols] / a[r][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave < 0) throw std::logic_error("simplex: unbounded phase-1 objective");
        // pivot
        Rational piv = a[leave][enter];
        for (int j = 0; j <= cols; ++j) a[leave][j] /= piv;
        for (int r = 0; r < m; ++r) {
            if (r == leave || a[r][enter].is_zero()) continue;
            Rational f = a[r][enter];
            for (int j = 0; j <= cols; ++j) a[r][j] -= f * a[leave][j];
        }
        if (!z[enter].is_zero()) {
            Rational f = z[enter];
            for (int j = 0; j <= cols; ++j) z[j] -= f * a[leave][j];
        }
        basis[leave] = enter;
    }
    if (z[cols].sign() != 0) return std::nullopt;  // residual artificial value
    RationalVector x(d, Rational(0));
    for (int r = 0; r < m; ++r)
        if (basis[r] < d) x[basis[r]] = a[r][cols];
    return x;
}

}  // namespace

std::optional<RationalVector> feasible_point(const LinearSystem& sys,
                                             const FeasibilityOptions& opts) {
    if (sys.dim == 0) {
        for (const auto& r : sys.rows)
            if (r.rhs.sign() > 0) return std::nullopt;
        return RationalVector{};
    }
    if (sys.dim <= opts.fm_max_dim) {
        try {
            FMState fm(sys, opts.fm_row_budget);
            if (!fm.eliminate_all()) return std::nullopt;
            return fm.back_substitute();
        } catch (const std::length_error&) {
            // fall through to simplex
        }
    }
    return simplex_feasible(sys);
}

// ---------------------------------------------------------------------------
// escape points
// ---------------------------------------------------------------------------

namespace {

LinearSystem cone_system(const FlagType& T, std::int64_t margin) {
    const ConeHRep h = h_rep(T);
    LinearSystem sys;
    sys.dim = h.dim;
    for (const auto& c : h.ineqs) {
        LinearRow r;
        r.coeffs.reserve(c.size());
        for (auto v : c) r.coeffs.emplace_back(v);
        r.rhs = BigInt(margin);
        sys.rows.push_back(std::move(r));
    }
    return sys;
}

LinearRow violation_row(int dim, int i, int j, int k) {
    LinearRow r;
    r.coeffs.assign(dim, BigInt(0));
    r.coeffs[k - 1] += BigInt(1);
    r.coeffs[i - 1] -= BigInt(1);
    r.coeffs[j - 1] -= BigInt(1);
    r.rhs = BigInt(1);  // x_k - x_i - x_j >= 1
    return r;
}

EscapeResult escape_search(const FlagType& T, const std::vector<FlagType>& excluded,
                           const EscapeOptions& opts, std::int64_t base_margin) {
    const int n = T.degree();
    EscapeResult res;
    // candidate separating corners per excluded cone, cheapest value first
    std::vector<std::vector<std::array<int, 3>>> cand(excluded.size());
    for (std::size_t e = 0; e < excluded.size(); ++e) {
        const FlagType& Tp = excluded[e];
        if (Tp.degree() != n) throw std::invalid_argument("escape_point: degree mismatch");
        for (auto [i, j] : corners(Tp)) {
            if (i > j) continue;
            if (T.at(i, j) < Tp.at(i, j)) cand[e].push_back({i, j, Tp.at(i, j)});
        }
        if (cand[e].empty()) return res;  // P_T is inside this cone: no escape
        std::sort(cand[e].begin(), cand[e].end(),
                  [](const auto& a, const auto& b) { return std::tie(a[2], a[0], a[1]) < std::tie(b[2], b[0], b[1]); });
    }
    std::int64_t total = 1;
    for (const auto& c : cand) {
        total *= static_cast<std::int64_t>(c.size());
        if (total > (std::int64_t(1) << 50)) break;  // only used in the error message
    }
    const LinearSystem base = cone_system(T, base_margin);
    std::vector<std::size_t> odo(excluded.size(), 0);
    while (true) {
        if (res.explored >= opts.budget)
            throw std::runtime_error("escape_point: budget exceeded with " +
                                     std::to_string(total - res.explored) +
                                     " corner combinations unexplored");
        ++res.explored;
        LinearSystem sys = base;
        std::vector<std::array<int, 3>> chosen;
        for (std::size_t e = 0; e < excluded.size(); ++e) {
            const auto& c = cand[e][odo[e]];
            sys.rows.push_back(violation_row(sys.dim, c[0], c[1], c[2]));
            chosen.push_back(c);
        }
        if (auto x = feasible_point(sys, opts.feas)) {
            res.point = std::move(x);
            res.chosen = std::move(chosen);
            return res;
        }
        // odometer step
        std::size_t pos = 0;
        while (pos < odo.size()) {
            if (++odo[pos] < cand[pos].size()) break;
            odo[pos] = 0;
            ++pos;
        }
        if (pos == odo.size()) return res;  // exhausted: provably no escape point
    }
}

}  // namespace

EscapeResult escape_point(const FlagType& T, const std::vector<FlagType>& excluded,
                          const EscapeOptions& opts) {
    EscapeResult res = escape_search(T, excluded, opts, 0);
    if (res.point) {
        if (!member(T, *res.point)) throw std::logic_error("escape_point: point left P_T");
        for (const auto& Tp : excluded)
            if (member(Tp, *res.point))
                throw std::logic_error("escape_point: point not excluded from a cone");
    }
    return res;
}

EscapeResult generic_escape_point(const FlagType& T, const std::vector<FlagType>& excluded,
                                  const EscapeOptions& opts) {
    EscapeResult res = escape_search(T, excluded, opts, 1);
    if (!res.point) return res;
    const int n = T.degree();
    const int dim = n - 1;
    // enforce x_k != x_i + x_j for every triple, re-solving with the tight
    // triple pushed to a feasible side; each triple is enforced at most once
    LinearSystem sys = cone_system(T, 1);
    for (const auto& c : res.chosen) sys.rows.push_back(violation_row(dim, c[0], c[1], c[2]));
    std::map<std::array<int, 3>, int> enforced;
    for (int round = 0; round < 1000; ++round) {
        const RationalVector& x = *res.point;
        bool clean = true;
        for (int i = 1; i <= dim && clean; ++i) {
            for (int j = i; j <= dim && clean; ++j) {
                for (int k = 1; k <= dim && clean; ++k) {
                    if (x[k - 1] != x[i - 1] + x[j - 1]) continue;
                    std::array<int, 3> key{i, j, k};
                    if (enforced.count(key))
                        throw std::logic_error("generic_escape_point: enforced triple re-tightened");
                    clean = false;
                    LinearSystem trial = sys;
                    trial.rows.push_back(violation_row(dim, i, j, k));  // x_k - x_i - x_j >= 1
                    auto pt = feasible_point(trial, opts.feas);
                    if (!pt) {
                        trial = sys;
                        LinearRow other;  // x_i + x_j - x_k >= 1
                        other.coeffs.assign(dim, BigInt(0));
                        other.coeffs[i - 1] += BigInt(1);
                        other.coeffs[j - 1] += BigInt(1);
                        other.coeffs[k - 1] -= BigInt(1);
                        other.rhs = BigInt(1);
                        trial.rows.push_back(std::move(other));
                        pt = feasible_point(trial, opts.feas);
                        if (!pt)
                            throw std::logic_error("generic_escape_point: both triple sides infeasible");
                    }
                    sys = std::move(trial);
                    enforced[key] = 1;
                    res.point = std::move(pt);
                }
            }
        }
        if (clean) {
            if (!member(T, *res.point)) throw std::logic_error("generic_escape_point: left P_T");
            for (const auto& Tp : excluded)
                if (member(Tp, *res.point))
                    throw std::logic_error("generic_escape_point: not excluded from a cone");
            return res;
        }
    }
    throw std::logic_error("generic_escape_point: triple repair did not converge");
}

LiftResult lift_point(const RationalVector& x, const FlagType& T, int p) {
    const int m = T.degree();
    if (static_cast<int>(x.size()) != m - 1) throw std::invalid_argument("lift_point: dimension mismatch");
    if (p < 2) throw std::invalid_argument("lift_point: p must be >= 2");
    if (!member(T, x)) throw std::invalid_argument("lift_point: x is not in P_T");
    // the gap below x_1 counts: the lifted block before x_1 must stay under it
    Rational eps = x.empty() ? Rational(0) : x[0];
    for (int i = 0; i + 1 < m - 1; ++i) {
        Rational gap = x[i + 1] - x[i];
        if (gap < eps) eps = gap;
    }
    if (!(eps > Rational(0)))
        throw std::invalid_argument("lift_point: degenerate input (zero gap or zero x_1)");
    const int n = m * p;
    RationalVector out(n - 1);
    const Rational step = eps / Rational(2 * p);
    for (int i = 1; i < n; ++i) {
        const int i1 = i % p, i2 = i / p;
        Rational base = i2 == 0 ? Rational(0) : x[i2 - 1];
        out[i - 1] = Rational(i1) * step + base;
    }
    for (int i = 0; i + 1 < n - 1; ++i)
        if (!(out[i] < out[i + 1])) throw std::logic_error("lift_point: lifted point not monotone");
    return LiftResult{std::move(out), std::move(eps)};
}

std::int64_t find_m(std::int64_t p, std::int64_t q, std::int64_t r) {
    if (!(arith::is_prime(p) && arith::is_prime(q) && arith::is_prime(r)) || !(p < q && q <= r))
        throw std::invalid_argument("find_m: need primes p < q <= r");
    for (std::int64_t m = q; m <= q * r / 2; ++m) {
        if (arith::remainder_overflow(p * m, p * m, q) && !arith::remainder_overflow(m, m, q) &&
            !arith::remainder_overflow(m, m, r))
            return m;
    }
    throw std::runtime_error("find_m: no witness m in [q, qr/2] for (" + std::to_string(p) + "," +
                             std::to_string(q) + "," + std::to_string(r) + ")");
}

// ---------------------------------------------------------------------------
// the explicit counterexample constructions
// ---------------------------------------------------------------------------

namespace {

std::vector<TowerType> distinct_orderings(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end());
    std::vector<TowerType> out;
    do {
        out.emplace_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

void check_claims(WitnessCertificate& cert,
                  const std::vector<std::pair<TowerType, std::array<int, 3>>>& claims) {
    const RationalVector& x = cert.point;
    if (!member(cert.flag_type, x))
        throw std::runtime_error("counterexample_witness: point is not in the flag's cone");
    for (auto [i, j] : corners(cert.flag_type)) {
        if (i > j) continue;
        const int k = cert.flag_type.at(i, j);
        Rational margin = x[i - 1] + x[j - 1] - x[k - 1];
        if (margin.sign() < 0) throw std::runtime_error("counterexample_witness: violated own facet");
        cert.facets.push_back(FacetMargin{i, j, k, std::move(margin)});
    }
    for (const auto& [tower, ineq] : claims) {
        const auto [i, j, k] = ineq;
        FlagType Tp = flags::tower_flag_type(tower);
        if (Tp.at(i, j) != k)
            throw std::runtime_error("counterexample_witness: claimed inequality value mismatch at " +
                                     tower.to_string());
        const auto cs = corners(Tp);
        if (std::find(cs.begin(), cs.end(), std::make_pair(i, j)) == cs.end())
            throw std::runtime_error("counterexample_witness: claimed pair is not a corner of " +
                                     tower.to_string());
        Rational margin = x[i - 1] + x[j - 1] - x[k - 1];
        if (!(margin.sign() < 0))
            throw std::runtime_error("counterexample_witness: claimed violation not strict at " +
                                     tower.to_string() + " (" + std::to_string(i) + "," +
                                     std::to_string(j) + "," + std::to_string(k) + ")");
        if (member(Tp, x))
            throw std::runtime_error("counterexample_witness: point not excluded from " + tower.to_string());
        cert.exclusions.push_back(ExclusionRecord{tower, i, j, k, std::move(margin)});
    }
}

WitnessCertificate witness_fourp(std::int64_t p64) {
    const int p = static_cast<int>(p64);
    if (!arith::is_prime(p) || p == 2 || p == 3)
        throw std::invalid_argument("witness fourp: need a prime p not equal to 2 or 3");
    GroupPtr g = Group::make(GroupSpec{{p, 2, 2}});
    auto el = [&](int a, int b, int c) { return GroupElement(g, std::vector<int>{a, b, c}); };
    std::vector<GroupElement> prefix{el(0, 0, 0), el(1, 0, 0), el(0, 1, 0), el(1, 1, 0),
                                     el(2, 0, 0), el(2, 1, 0), el(3, 0, 0), el(3, 1, 0)};
    Flag F = flags::greedy_flag(g, TowerType({p, 2, 2}), {1, 2, 3}, prefix);
    const int n = 4 * p;
    RationalVector x(n - 1);
    x[0] = Rational(1);
    x[1] = x[2] = Rational(7, 5);
    x[3] = x[4] = Rational(2);
    if (p == 5) {
        x[5] = x[6] = Rational(3);
        for (int i = 8; i <= 14; ++i) x[i - 1] = Rational(4);
        for (int i = 15; i <= 19; ++i) x[i - 1] = Rational(51, 10);
    } else {
        for (int i = 6; i <= 3 * p - 1; ++i) x[i - 1] = Rational(29, 10);
        for (int i = 3 * p; i <= 4 * p - 1; ++i) x[i - 1] = Rational(4);
    }
    WitnessCertificate cert{WitnessKind::fourp, {p64}, F, flags::flag_type_of(F), std::move(x), {}, {}};
    std::array<int, 3> vs_p_first = p == 5 ? std::array<int, 3>{3, 5, 8} : std::array<int, 3>{3, 3, 6};
    std::array<int, 3> vs_two_first{1, 3 * p - 1, 3 * p};
    std::vector<std::pair<TowerType, std::array<int, 3>>> claims;
    for (const auto& t : distinct_orderings({2, 2, p}))
        claims.emplace_back(t, t.parts()[0] == p ? vs_p_first : vs_two_first);
    check_claims(cert, claims);
    return cert;
}

WitnessCertificate witness_p2q(std::int64_t p64, std::int64_t q64) {
    const int p = static_cast<int>(p64), q = static_cast<int>(q64);
    if (!arith::is_prime(p) || !arith::is_prime(q) || p == 2 || q == 2 || p >= q)
        throw std::invalid_argument("witness p2q: need distinct odd primes p < q");
    // the construction's digit bounds force e_1 of order q and e_2, e_3 of order p
    GroupPtr g = Group::make(GroupSpec{{q, p, p}});
    std::vector<GroupElement> prefix;
    for (int i = 0; i < q; ++i) prefix.emplace_back(g, std::vector<int>{i, 0, 0});
    Flag F = flags::greedy_flag(g, TowerType({p, q, p}), {2, 1, 3}, prefix);
    const int n = p * p * q;
    RationalVector x(n - 1);
    for (int i = 1; i < q; ++i) x[i - 1] = Rational(i, 2 * q);
    for (int i = q; i < p * q; ++i) x[i - 1] = Rational(1);
    for (int i = p * q; i < n; ++i) {
        int i1 = i % p, i2 = (i / p) % q, i3 = i / (p * q);
        x[i - 1] = Rational(i1, 4 * p * q) + Rational(i2, 2 * q) + Rational(i3);
    }
    WitnessCertificate cert{WitnessKind::p2q, {p64, q64}, F, flags::flag_type_of(F), std::move(x), {}, {}};
    std::array<int, 3> vs_p_first{1, q - 1, q};
    std::array<int, 3> vs_q_first{p * q + 1, p * q + p - 1, 2 * p * q + p};
    std::vector<std::pair<TowerType, std::array<int, 3>>> claims;
    for (const auto& t : distinct_orderings({p, p, q}))
        claims.emplace_back(t, t.parts()[0] == q ? vs_q_first : vs_p_first);
    check_claims(cert, claims);
    return cert;
}

WitnessCertificate witness_pqr(std::int64_t p64, std::int64_t q64, std::int64_t r64) {
    const int p = static_cast<int>(p64), q = static_cast<int>(q64), r = static_cast<int>(r64);
    if (!arith::is_prime(p) || !arith::is_prime(q) || !arith::is_prime(r) || !(p < q && q <= r))
        throw std::invalid_argument("witness pqr: need primes p < q <= r");
    GroupPtr g = Group::make(GroupSpec{{p, q, r}});
    std::vector<GroupElement> prefix;
    for (int i = 0; i < p; ++i) prefix.emplace_back(g, std::vector<int>{i, 0, 0});
    Flag F = flags::greedy_flag(g, TowerType({q, p, r}), {2, 1, 3}, prefix);
    const int n = p * q * r;
    const std::int64_t m = find_m(p, q, r);
    RationalVector x(n - 1);
    for (int i = 1; i < p; ++i) x[i - 1] = Rational(i, 2 * p);
    for (int i = p; i < p * q; ++i) x[i - 1] = Rational(1);
    for (int i = p * q; i < n; ++i) {
        int i1 = i % q, i2 = (i / q) % p, i3 = i / (p * q);
        x[i - 1] = Rational(i1, 4 * p * q) + Rational(i2, 2 * p) + Rational(i3);
    }
    WitnessCertificate cert{WitnessKind::pqr, {p64, q64, r64}, F, flags::flag_type_of(F), std::move(x), {}, {}};
    const int pm = static_cast<int>(p * m);
    std::array<int, 3> vs_p_first{pm, pm, 2 * pm};
    std::array<int, 3> vs_other{1, p - 1, p};
    std::vector<std::pair<TowerType, std::array<int, 3>>> claims;
    for (const auto& t : distinct_orderings({p, q, r}))
        claims.emplace_back(t, t.parts()[0] == p ? vs_p_first : vs_other);
    check_claims(cert, claims);
    return cert;
}

}  // namespace

WitnessCertificate counterexample_witness(WitnessKind kind, const std::vector<std::int64_t>& primes) {
    switch (kind) {
        case WitnessKind::fourp:
            if (primes.size() != 1) throw std::invalid_argument("witness fourp: expected one prime");
            return witness_fourp(primes[0]);
        case WitnessKind::p2q:
            if (primes.size() != 2) throw std::invalid_argument("witness p2q: expected two primes");
            return witness_p2q(primes[0], primes[1]);
        case WitnessKind::pqr:
            if (primes.size() != 3) throw std::invalid_argument("witness pqr: expected three primes");
            return witness_pqr(primes[0], primes[1], primes[2]);
    }
    throw std::invalid_argument("counterexample_witness: unknown kind");
}

std::string witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::p2q: return "p2q";
        case WitnessKind::pqr: return "pqr";
        case WitnessKind::fourp: return "fourp";
    }
    return "?";
}

}  // namespace flagcones::poly
