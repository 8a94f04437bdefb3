#pragma once

#include <memory>
#include <vector>

#include "flagcones/abelian.hpp"
#include "flagcones/arith.hpp"
#include "flagcones/flags.hpp"
#include "flagcones/rng.hpp"

namespace flagcones::fields {

using arith::TowerType;

/// F_{p^n} over F_p as F_p[x]/(modulus); modulus coefficients ascending,
/// monic of degree n, irreducible (verified at construction).
struct FieldSpec {
    int p = 2;
    int n = 1;
    std::vector<int> modulus;
};

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

class FiniteField {
public:
    using Elem = std::vector<int>;  // length n, coefficients in [0, p)

    /// Uses the repository's fixed modulus for (p, n): the lexicographically
    /// least monic irreducible (non-leading coefficients as a base-p counter).
    static FieldPtr make(int p, int n);
    static FieldPtr make(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    int p() const { return spec_.p; }
    int degree() const { return spec_.n; }

    Elem zero() const { return Elem(spec_.n, 0); }
    Elem one() const;
    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, std::int64_t k) const;

    /// Element with coefficient vector = base-p digits of idx.
    Elem from_index(std::int64_t idx) const;
    std::int64_t index_of(const Elem& a) const;
    std::int64_t size() const;  // p^n

private:
    explicit FiniteField(FieldSpec spec);
    FieldSpec spec_;
};

/// Lexicographically least monic irreducible of degree n over F_p.
std::vector<int> default_modulus(int p, int n);
/// Trial division by every lower-degree monic polynomial.
bool is_irreducible(const std::vector<int>& poly, int p);

/// An F_p-subspace of the field, held as a canonical reduced-echelon basis.
class Subspace {
public:
    static Subspace span(FieldPtr field, const std::vector<FiniteField::Elem>& vectors);

    const FieldPtr& field() const { return field_; }
    const std::vector<std::vector<int>>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    bool contains(const FiniteField::Elem& v) const;
    /// All p^dim member vectors, in deterministic order.
    std::vector<FiniteField::Elem> elements() const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

private:
    Subspace(FieldPtr field, std::vector<std::vector<int>> rref_basis);
    FieldPtr field_;
    std::vector<std::vector<int>> basis_;
};

/// span{ab | a in basis(A), b in basis(B)}.
Subspace subspace_product(const Subspace& A, const Subspace& B);

/// The largest subfield E with EV = V: solutions of the linear system
/// x * v in V for a basis v of V. Dimension divides the field degree.
Subspace field_stabilizer(const Subspace& V);

/// The subfield F_{p^d} (fixed space of the d-th Frobenius power); d | n.
Subspace subfield(const FieldPtr& field, int d);

/// An adapted basis w_0 = 1, w_1, ..., w_{n-1}; F_i = span(w_0..w_i).
class SubspaceFlag {
public:
    SubspaceFlag(FieldPtr field, std::vector<FiniteField::Elem> basis);

    const FieldPtr& field() const { return field_; }
    const std::vector<FiniteField::Elem>& basis() const { return basis_; }
    /// Coordinates of v in the adapted basis.
    std::vector<int> adapted_coords(const FiniteField::Elem& v) const;
    /// Largest adapted coordinate index carrying a nonzero coefficient.
    int top_index(const FiniteField::Elem& v) const;

private:
    FieldPtr field_;
    std::vector<FiniteField::Elem> basis_;
    std::vector<std::vector<int>> inverse_;  // right-inverse of the basis matrix
};

flags::FlagType subspace_flag_type(const SubspaceFlag& F);

/// BSZ bound audit; sub-additive cases must exhibit the full dimension
/// structure (stabilizer subfield, overflow, the three identities).
abelian::KneserReport bsz_audit(const Subspace& A, const Subspace& B);

/// Flag through the subfield tower with relative degrees (n_1,...,n_t),
/// built from a primitive element of each step; its type is T(tower).
SubspaceFlag tower_field_flag(const TowerType& tower, const FieldPtr& field);

/// Random full flag via a random change of basis re-anchored at w_0 = 1.
SubspaceFlag random_subspace_flag(const FieldPtr& field, Rng& rng);

/// Random subspace of dimension uniform in [1, n] (span of random vectors).
Subspace random_subspace(const FieldPtr& field, Rng& rng);

}  // namespace flagcones::fields
