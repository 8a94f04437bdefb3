#include "flagcones/fieldflags.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagcones::fields {

namespace {

int mod_pow(int a, int e, int p) {
    int r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

int fp_inv(int a, int p) { return mod_pow(a, p - 2, p); }

// rows in place -> reduced row echelon form; returns rank
int rref(std::vector<std::vector<int>>& rows, int p) {
    if (rows.empty()) return 0;
    const int cols = static_cast<int>(rows[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const int inv = fp_inv(rows[rank][col], p);
        for (int c = col; c < cols; ++c) rows[rank][c] = rows[rank][c] * inv % p;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const int f = rows[r][col];
            for (int c = col; c < cols; ++c)
                rows[r][c] = ((rows[r][c] - f * rows[rank][c]) % p + p) % p;
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

// polynomial remainder a mod b over F_p (coefficients ascending)
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    std::vector<int> bb = b;
    while (!bb.empty() && bb.back() == 0) bb.pop_back();
    if (bb.empty()) throw std::invalid_argument("poly_mod: zero divisor");
    const int db = static_cast<int>(bb.size()) - 1;
    const int lead_inv = fp_inv(bb.back(), p);
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int da = static_cast<int>(a.size()) - 1;
        const int f = a.back() * lead_inv % p;
        for (int i = 0; i <= db; ++i)
            a[da - db + i] = ((a[da - db + i] - f * bb[i]) % p + p) % p;
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

}  // namespace

bool is_irreducible(const std::vector<int>& poly, int p) {
    std::vector<int> a = poly;
    while (!a.empty() && a.back() == 0) a.pop_back();
    const int deg = static_cast<int>(a.size()) - 1;
    if (deg < 1) return false;
    if (deg == 1) return true;
    // trial division by every monic polynomial of degree 1..deg/2
    for (int d = 1; 2 * d <= deg; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t c = 0; c < count; ++c) {
            std::vector<int> div(d + 1, 0);
            std::int64_t x = c;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<int>(x % p);
                x /= p;
            }
            div[d] = 1;
            if (poly_mod(a, div, p).empty()) return false;
        }
    }
    return true;
}

std::vector<int> default_modulus(int p, int n) {
    if (!arith::is_prime(p)) throw std::invalid_argument("default_modulus: p must be prime");
    if (n < 1) throw std::invalid_argument("default_modulus: n must be >= 1");
    std::int64_t count = 1;
    for (int i = 0; i < n; ++i) count *= p;
    for (std::int64_t c = 0; c < count; ++c) {
        std::vector<int> poly(n + 1, 0);
        std::int64_t x = c;
        for (int i = 0; i < n; ++i) {
            poly[i] = static_cast<int>(x % p);
            x /= p;
        }
        poly[n] = 1;
        if (is_irreducible(poly, p)) return poly;
    }
    throw std::logic_error("default_modulus: none found");  // unreachable
}

FiniteField::FiniteField(FieldSpec spec) : spec_(std::move(spec)) {
    if (!arith::is_prime(spec_.p)) throw std::invalid_argument("FiniteField: p must be prime");
    if (spec_.n < 1) throw std::invalid_argument("FiniteField: n must be >= 1");
    if (size() > (std::int64_t(1) << 20)) throw std::out_of_range("FiniteField: p^n too large");
    if (static_cast<int>(spec_.modulus.size()) != spec_.n + 1 || spec_.modulus[spec_.n] != 1)
        throw std::invalid_argument("FiniteField: modulus must be monic of degree n");
    for (int c : spec_.modulus)
        if (c < 0 || c >= spec_.p) throw std::invalid_argument("FiniteField: modulus coefficient range");
    if (!is_irreducible(spec_.modulus, spec_.p))
        throw std::invalid_argument("FiniteField: modulus is not irreducible");
}

FieldPtr FiniteField::make(int p, int n) {
    return make(FieldSpec{p, n, default_modulus(p, n)});
}

FieldPtr FiniteField::make(FieldSpec spec) {
    return std::shared_ptr<const FiniteField>(new FiniteField(std::move(spec)));
}

FiniteField::Elem FiniteField::one() const {
    Elem e(spec_.n, 0);
    e[0] = 1;
    return e;
}

bool FiniteField::is_zero(const Elem& a) const {
    for (int c : a)
        if (c) return false;
    return true;
}

FiniteField::Elem FiniteField::add(const Elem& a, const Elem& b) const {
    Elem r(spec_.n);
    for (int i = 0; i < spec_.n; ++i) r[i] = (a[i] + b[i]) % spec_.p;
    return r;
}

FiniteField::Elem FiniteField::sub(const Elem& a, const Elem& b) const {
    Elem r(spec_.n);
    for (int i = 0; i < spec_.n; ++i) r[i] = ((a[i] - b[i]) % spec_.p + spec_.p) % spec_.p;
    return r;
}

FiniteField::Elem FiniteField::mul(const Elem& a, const Elem& b) const {
    const int n = spec_.n, p = spec_.p;
    std::vector<int> prod(2 * n - 1, 0);
    for (int i = 0; i < n; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    // reduce x^{n+k} by the monic modulus, top down
    for (int d = 2 * n - 2; d >= n; --d) {
        const int f = prod[d];
        if (!f) continue;
        prod[d] = 0;
        for (int i = 0; i < n; ++i)
            prod[d - n + i] = ((prod[d - n + i] - f * spec_.modulus[i]) % p + p) % p;
    }
    prod.resize(n);
    return prod;
}

FiniteField::Elem FiniteField::pow(const Elem& a, std::int64_t k) const {
    if (k < 0) throw std::invalid_argument("FiniteField::pow: negative exponent");
    Elem r = one(), base = a;
    while (k) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

FiniteField::Elem FiniteField::from_index(std::int64_t idx) const {
    Elem e(spec_.n);
    for (int i = 0; i < spec_.n; ++i) {
        e[i] = static_cast<int>(idx % spec_.p);
        idx /= spec_.p;
    }
    return e;
}

std::int64_t FiniteField::index_of(const Elem& a) const {
    std::int64_t idx = 0, scale = 1;
    for (int i = 0; i < spec_.n; ++i) {
        idx += scale * a[i];
        scale *= spec_.p;
    }
    return idx;
}

std::int64_t FiniteField::size() const {
    std::int64_t s = 1;
    for (int i = 0; i < spec_.n; ++i) s *= spec_.p;
    return s;
}

Subspace::Subspace(FieldPtr field, std::vector<std::vector<int>> rref_basis)
    : field_(std::move(field)), basis_(std::move(rref_basis)) {}

Subspace Subspace::span(FieldPtr field, const std::vector<FiniteField::Elem>& vectors) {
    std::vector<std::vector<int>> rows = vectors;
    rref(rows, field->p());
    return Subspace(std::move(field), std::move(rows));
}

bool Subspace::contains(const FiniteField::Elem& v) const {
    // reduce v by the echelon basis; membership iff it reduces to zero
    std::vector<int> w = v;
    const int p = field_->p();
    for (const auto& row : basis_) {
        int lead = 0;
        while (lead < static_cast<int>(row.size()) && row[lead] == 0) ++lead;
        if (w[lead] == 0) continue;
        const int f = w[lead];
        for (std::size_t c = 0; c < w.size(); ++c) w[c] = ((w[c] - f * row[c]) % p + p) % p;
    }
    for (int c : w)
        if (c) return false;
    return true;
}

std::vector<FiniteField::Elem> Subspace::elements() const {
    std::vector<FiniteField::Elem> out;
    std::int64_t count = 1;
    for (int i = 0; i < dim(); ++i) count *= field_->p();
    out.reserve(count);
    for (std::int64_t c = 0; c < count; ++c) {
        FiniteField::Elem v = field_->zero();
        std::int64_t x = c;
        for (int i = 0; i < dim(); ++i) {
            const int f = static_cast<int>(x % field_->p());
            x /= field_->p();
            if (f)
                for (std::size_t k = 0; k < v.size(); ++k)
                    v[k] = (v[k] + f * basis_[i][k]) % field_->p();
        }
        out.push_back(std::move(v));
    }
    return out;
}

Subspace subspace_product(const Subspace& A, const Subspace& B) {
    if (!(A.field() == B.field()) && !(A.field()->spec().modulus == B.field()->spec().modulus &&
                                       A.field()->p() == B.field()->p()))
        throw std::invalid_argument("subspace_product: different ambient fields");
    const FiniteField& f = *A.field();
    std::vector<FiniteField::Elem> prods;
    for (const auto& a : A.basis())
        for (const auto& b : B.basis()) prods.push_back(f.mul(a, b));
    return Subspace::span(A.field(), prods);
}

Subspace field_stabilizer(const Subspace& V) {
    if (V.dim() == 0) throw std::invalid_argument("field_stabilizer: zero subspace");
    const FieldPtr& fp = V.field();
    const FiniteField& f = *fp;
    const int n = f.degree(), p = f.p();
    // linear conditions on x: reduce(g_s * v) stacked over basis v of V
    std::vector<std::vector<int>> cond;
    for (const auto& v : V.basis()) {
        std::vector<std::vector<int>> cols(n);
        for (int s = 0; s < n; ++s) {
            FiniteField::Elem g = f.zero();
            g[s] = 1;
            FiniteField::Elem w = f.mul(g, v);
            // reduce w by V's echelon basis (linear in w)
            for (const auto& row : V.basis()) {
                int lead = 0;
                while (row[lead] == 0) ++lead;
                if (w[lead] == 0) continue;
                const int fac = w[lead];
                for (int c = 0; c < n; ++c) w[c] = ((w[c] - fac * row[c]) % p + p) % p;
            }
            cols[s] = std::move(w);
        }
        for (int c = 0; c < n; ++c) {
            std::vector<int> row(n);
            bool nonzero = false;
            for (int s = 0; s < n; ++s) {
                row[s] = cols[s][c];
                nonzero |= row[s] != 0;
            }
            if (nonzero) cond.push_back(std::move(row));
        }
    }
    // nullspace of cond
    rref(cond, p);
    std::vector<int> pivot_col;
    for (const auto& row : cond) {
        int lead = 0;
        while (lead < n && row[lead] == 0) ++lead;
        pivot_col.push_back(lead);
    }
    std::vector<FiniteField::Elem> null_basis;
    for (int free = 0; free < n; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
        FiniteField::Elem v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < cond.size(); ++r)
            v[pivot_col[r]] = ((-cond[r][free]) % p + p) % p;
        null_basis.push_back(std::move(v));
    }
    Subspace stab = Subspace::span(fp, null_basis);
    if (stab.dim() == 0 || n % stab.dim() != 0)
        throw std::logic_error("field_stabilizer: dimension does not divide the degree");
    return stab;
}

Subspace subfield(const FieldPtr& field, int d) {
    const FiniteField& f = *field;
    const int n = f.degree(), p = f.p();
    if (d < 1 || n % d != 0) throw std::invalid_argument("subfield: d must divide n");
    // fixed space of x -> x^(p^d)
    std::int64_t q = 1;
    for (int i = 0; i < d; ++i) q *= p;
    std::vector<std::vector<int>> cond;
    for (int s = 0; s < n; ++s) {
        FiniteField::Elem g = f.zero();
        g[s] = 1;
        FiniteField::Elem w = f.pow(g, q);
        w[s] = ((w[s] - 1) % p + p) % p;  // (Frob^d - id) on basis vector s
        cond.push_back(std::move(w));
    }
    // cond[s] is the image column of basis vector s; transpose into constraint rows
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < n; ++s) rows[c][s] = cond[s][c];
    rref(rows, p);
    std::vector<int> pivot_col;
    for (const auto& row : rows) {
        int lead = 0;
        while (lead < n && row[lead] == 0) ++lead;
        pivot_col.push_back(lead);
    }
    std::vector<FiniteField::Elem> null_basis;
    for (int free = 0; free < n; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
        FiniteField::Elem v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r)
            v[pivot_col[r]] = ((-rows[r][free]) % p + p) % p;
        null_basis.push_back(std::move(v));
    }
    Subspace s = Subspace::span(field, null_basis);
    if (s.dim() != d) throw std::logic_error("subfield: fixed space has wrong dimension");
    return s;
}

SubspaceFlag::SubspaceFlag(FieldPtr field, std::vector<FiniteField::Elem> basis)
    : field_(std::move(field)), basis_(std::move(basis)) {
    const FiniteField& f = *field_;
    const int n = f.degree(), p = f.p();
    if (static_cast<int>(basis_.size()) != n)
        throw std::invalid_argument("SubspaceFlag: basis must have n vectors");
    if (basis_[0] != f.one()) throw std::invalid_argument("SubspaceFlag: w_0 must be 1");
    // invert the basis matrix: rows basis_[i]; solve for adapted coordinates
    std::vector<std::vector<int>> aug(n, std::vector<int>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = basis_[i][j];
        aug[i][n + i] = 1;
    }
    if (rref(aug, p) != n) throw std::invalid_argument("SubspaceFlag: basis is not independent");
    // aug rows are sorted by pivot; pivots form the identity on the left
    inverse_.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inverse_[i][j] = aug[i][n + j];
}

std::vector<int> SubspaceFlag::adapted_coords(const FiniteField::Elem& v) const {
    const int n = field_->degree(), p = field_->p();
    // v = c * basis  =>  c = v * basis^{-1}; inverse_ rows solve B^T c^T = ...
    std::vector<int> c(n, 0);
    for (int j = 0; j < n; ++j) {
        int s = 0;
        for (int k = 0; k < n; ++k) s = (s + v[k] * inverse_[k][j]) % p;
        c[j] = s;
    }
    return c;
}

int SubspaceFlag::top_index(const FiniteField::Elem& v) const {
    std::vector<int> c = adapted_coords(v);
    for (int i = field_->degree() - 1; i >= 0; --i)
        if (c[i]) return i;
    return -1;
}

flags::FlagType subspace_flag_type(const SubspaceFlag& F) {
    const int n = F.field()->degree();
    const FiniteField& f = *F.field();
    // T(i,j) = max over a<=i, b<=j of top_index(w_a w_b), computed by the
    // same incremental-max recurrence as the group case
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int j = 0; j < n; ++j) table[0][j] = table[j][0] = j;
    for (int i = 1; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const int m = F.top_index(f.mul(F.basis()[i], F.basis()[j]));
            if (m < 0) throw std::logic_error("subspace_flag_type: zero product in a field");
            int v = std::max({table[i - 1][j], table[i][j - 1], m});
            table[i][j] = table[j][i] = v;
        }
    }
    return flags::FlagType::from_table(table);
}

abelian::KneserReport bsz_audit(const Subspace& A, const Subspace& B) {
    if (A.dim() == 0 || B.dim() == 0) throw std::invalid_argument("bsz_audit: zero subspace");
    abelian::KneserReport rep;
    rep.size_a = A.dim();
    rep.size_b = B.dim();
    Subspace ab = subspace_product(A, B);
    rep.size_ab = ab.dim();
    Subspace stab = field_stabilizer(ab);
    rep.stabilizer_order = stab.dim();
    const std::int64_t m = rep.stabilizer_order;
    if (rep.size_ab < rep.size_a + rep.size_b - m)
        throw std::runtime_error("bsz_audit: BSZ inequality violated (internal bug)");
    rep.cosets_stab_a = subspace_product(stab, A).dim() / m;
    rep.cosets_stab_b = subspace_product(stab, B).dim() / m;
    rep.cosets_ab = rep.size_ab / m;
    rep.sub_additive = rep.size_ab <= rep.size_a + rep.size_b - 2;
    const std::int64_t i = rep.size_a - 1, j = rep.size_b - 1;
    rep.overflow = m > 1 && arith::remainder_overflow(i, j, m);
    if (rep.sub_additive) {
        if (m <= 1) throw std::runtime_error("bsz_audit: sub-additive with trivial stabilizer");
        if (!rep.overflow) throw std::runtime_error("bsz_audit: sub-additive without overflow mod m");
        if (subspace_product(stab, A).dim() != (i / m + 1) * m)
            throw std::runtime_error("bsz_audit: dim(Stab AB . A) identity failed");
        if (subspace_product(stab, B).dim() != (j / m + 1) * m)
            throw std::runtime_error("bsz_audit: dim(Stab AB . B) identity failed");
        if (rep.size_ab != (i / m + j / m + 1) * m)
            throw std::runtime_error("bsz_audit: dim(AB) identity failed");
    }
    return rep;
}

SubspaceFlag tower_field_flag(const TowerType& tower, const FieldPtr& field) {
    const FiniteField& f = *field;
    const int n = f.degree();
    if (tower.degree() != n)
        throw std::invalid_argument("tower_field_flag: tower degree must match the field degree");
    const auto& parts = tower.parts();
    const int t = static_cast<int>(parts.size());
    // step generators: a primitive element of each relative extension
    std::vector<FiniteField::Elem> alphas;
    int d_prev = 1;
    Subspace prev = subfield(field, 1);
    for (int s = 0; s < t; ++s) {
        const int d_cur = d_prev * parts[s];
        if (n % d_cur != 0) throw std::invalid_argument("tower_field_flag: no subfield tower");
        Subspace cur = subfield(field, d_cur);
        FiniteField::Elem chosen;
        bool found = false;
        for (const auto& z : cur.elements()) {
            // z primitive over the previous level iff the spanned products
            // b * z^e exhaust the current level
            std::vector<FiniteField::Elem> gens;
            FiniteField::Elem ze = f.one();
            for (int e = 0; e < parts[s]; ++e) {
                for (const auto& b : prev.basis()) gens.push_back(f.mul(b, ze));
                ze = f.mul(ze, z);
            }
            if (Subspace::span(field, gens).dim() == d_cur) {
                chosen = z;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("tower_field_flag: no primitive step element");
        alphas.push_back(std::move(chosen));
        prev = std::move(cur);
        d_prev = d_cur;
    }
    std::vector<FiniteField::Elem> basis(n);
    for (int i = 0; i < n; ++i) {
        FiniteField::Elem w = f.one();
        int x = i;
        for (int s = 0; s < t; ++s) {
            const int digit = x % parts[s];
            x /= parts[s];
            if (digit) w = f.mul(w, f.pow(alphas[s], digit));
        }
        basis[i] = std::move(w);
    }
    return SubspaceFlag(field, std::move(basis));
}

SubspaceFlag random_subspace_flag(const FieldPtr& field, Rng& rng) {
    const FiniteField& f = *field;
    const int n = f.degree();
    std::vector<FiniteField::Elem> basis{f.one()};
    std::vector<std::vector<int>> echelon{f.one()};
    rref(echelon, f.p());
    while (static_cast<int>(basis.size()) < n) {
        FiniteField::Elem v = f.from_index(static_cast<std::int64_t>(rng.below(f.size())));
        std::vector<std::vector<int>> trial = echelon;
        trial.push_back(v);
        if (rref(trial, f.p()) == static_cast<int>(basis.size()) + 1) {
            basis.push_back(v);
            echelon = std::move(trial);
        }
    }
    return SubspaceFlag(field, std::move(basis));
}

Subspace random_subspace(const FieldPtr& field, Rng& rng) {
    const FiniteField& f = *field;
    const int n = f.degree();
    while (true) {
        const int d = 1 + static_cast<int>(rng.below(n));
        std::vector<FiniteField::Elem> vecs;
        for (int i = 0; i < d; ++i)
            vecs.push_back(f.from_index(static_cast<std::int64_t>(rng.below(f.size()))));
        Subspace s = Subspace::span(field, vecs);
        if (s.dim() > 0) return s;
    }
}

}  // namespace flagcones::fields
