#ifndef HYPERBOUND_CATALOG_HPP
#define HYPERBOUND_CATALOG_HPP

#include <string>
#include <vector>

#include "hyperbound/homopoly.hpp"

namespace hyperbound {

/// Zero scheme of a single nonzero homogeneous form in P^n.
class Hypersurface {
   public:
    explicit Hypersurface(HomoPoly form);

    const HomoPoly& form() const { return form_; }
    const Field& field() const { return form_.field(); }
    int ambient_dim() const { return form_.nvars() - 1; }
    int degree() const { return form_.degree(); }

   private:
    HomoPoly form_;
};

/// sum X_{2i} X_{2i+1} in odd-dimensional P^n, the nonsingular hyperbolic quadric.
Hypersurface hyperbolic_quadric(int n, const Field& f);

/// f(X0,X1) + sum_{i>=1} X_{2i} X_{2i+1} with f the least irreducible monic
/// binary quadratic; the elliptic quadric in odd-dimensional P^n.
Hypersurface elliptic_quadric(int n, const Field& f);

/// The fixed irreducible monic binary quadratic used by elliptic_quadric:
/// X0^2 + b X0 X1 + c X1^2 with (b, c) least in index order.
HomoPoly least_irreducible_binary_quadratic(const Field& f);
/// Elliptic quadric built from an explicitly chosen irreducible quadratic.
Hypersurface elliptic_quadric_with(int n, const Field& f, const HomoPoly& irreducible);

/// Degree sqrt(q)+1 Hermitian hypersurface, q square. Odd n pairs the
/// variables; even n adds a diagonal norm term on the last variable.
Hypersurface hermitian(int n, const Field& f);

/// sum (X_{2i}^q X_{2i+1} - X_{2i} X_{2i+1}^q), degree q+1; contains every
/// F_q-point of odd-dimensional P^n.
Hypersurface space_filling(int n, const Field& f);

/// X0^2 + sum X_{2i-1} X_{2i} in even-dimensional P^m.
Hypersurface parabolic_quadric(int m, const Field& f);

/// Cone with an s-dimensional center over a base hypersurface, in standard
/// coordinates: base variables first, center spanning the last s+1.
Hypersurface cone_standard(int center_dim, const Hypersurface& base);

/// Cone over a base hypersurface living on base_space (given by its intrinsic
/// coordinates), with an arbitrary disjoint center; realized by a linear
/// change of coordinates onto the standard split.
Hypersurface cone(const LinearSubspace& center, const LinearSubspace& base_space,
                  const Hypersurface& base);

/// Square matrix with A^T = -A and zero diagonal (the diagonal condition is
/// what matters in characteristic 2).
class AlternatingMatrix {
   public:
    AlternatingMatrix(const Field& f, Mat entries);
    const Field& field() const { return *f_; }
    const Mat& entries() const { return a_; }
    int size() const { return static_cast<int>(a_.size()); }
    bool is_zero() const;

   private:
    const Field* f_;
    Mat a_;
};

/// The degree-(q+1) form sum_{i<j} a_ij (X_i^q X_j - X_i X_j^q); A nonzero.
Hypersurface from_alternating(const AlternatingMatrix& a);

struct SymplecticNormalForm {
    Mat p;     // invertible; p^T A p is hyperbolic 2x2 blocks then zeros
    int rank;  // = 2s
};

/// Symplectic Gram-Schmidt with deterministic least-index pivoting.
SymplecticNormalForm alternating_normal_form(const AlternatingMatrix& a);

/// Catalog family names as used by the CLI: hyperbolic, elliptic, hermitian,
/// filling, parabolic, and cone:<s>:<family>.
Hypersurface build_family(const std::string& family, int n, const Field& f);

/// Exact closed-form point count for a catalog family over F_q.
long long closed_form_count(const std::string& family, int n, long long q);

/// Cone point-count law: N(P^s * Y) = N(Y) q^{s+1} + theta(s).
long long cone_count(long long base_count, long long q, int s);

}  // namespace hyperbound

#endif
