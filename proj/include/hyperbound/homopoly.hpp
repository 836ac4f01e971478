#ifndef HYPERBOUND_HOMOPOLY_HPP
#define HYPERBOUND_HOMOPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperbound/projgeom.hpp"

namespace hyperbound {

/// Sparse homogeneous polynomial over F_q in a fixed number of variables.
/// Terms map exponent vectors (summing to the declared degree) to nonzero
/// coefficients; the zero polynomial is the empty map and keeps its declared
/// degree so degree-dependent preconditions stay checkable.
class HomoPoly {
   public:
    HomoPoly(const Field& f, int nvars, int degree);

    static HomoPoly monomial(const Field& f, std::vector<int> exps, Fq coeff);

    const Field& field() const { return *f_; }
    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const std::map<std::vector<int>, Fq>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * X^exps, folding into an existing term and dropping zeros.
    HomoPoly& add_term(const std::vector<int>& exps, Fq c);

    friend HomoPoly operator+(const HomoPoly& a, const HomoPoly& b);
    friend HomoPoly operator-(const HomoPoly& a, const HomoPoly& b);
    friend HomoPoly operator*(const HomoPoly& a, const HomoPoly& b);
    friend HomoPoly operator*(Fq c, const HomoPoly& a);
    friend bool operator==(const HomoPoly& a, const HomoPoly& b) {
        return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HomoPoly& a, const HomoPoly& b) { return !(a == b); }

    Fq evaluate(const std::vector<Fq>& x) const;
    /// Same, on raw coordinate indices of this polynomial's own field.
    int evaluate_idx(const std::vector<int>& x) const;

    /// Formal partial derivative in characteristic p; terms whose exponent is
    /// divisible by p drop out.
    HomoPoly partial(int i) const;

    /// Substitution of the subspace's echelon parametrization: the result
    /// lives on S with dim(S)+1 variables, is homogeneous of the same degree,
    /// and is the zero polynomial exactly when S is contained in the zero set.
    HomoPoly restricted_to(const LinearSubspace& s) const;

    /// Composition with a linear map: variable i maps to images[i], a
    /// degree-1 polynomial in the output variables. Powers of each image are
    /// memoized across terms.
    HomoPoly compose_linear(const std::vector<HomoPoly>& images) const;

    /// Coefficient-wise push through a field embedding.
    HomoPoly embedded(const Embedding& emb) const;

    /// Canonical text form: terms `c*Xi^e*...` joined by '+', coefficients as
    /// field element indices; "0" for the zero polynomial.
    std::string to_text() const;
    static HomoPoly parse(const Field& f, int nvars, const std::string& text);

   private:
    const Field* f_;
    int nvars_;
    int degree_;
    std::map<std::vector<int>, Fq> terms_;
};

/// A point of P^m(F_q) where f does not vanish, or nullopt for the zero
/// polynomial. Requires deg f <= q, which guarantees a witness exists for
/// every nonzero f.
std::optional<ProjPoint> nonvanishing_point(const HomoPoly& f,
                                            long long max_points = 10'000'000);

/// Exact quotient f / ell for a degree-1 divisor, or nullopt when ell does
/// not divide f.
std::optional<HomoPoly> divide_by_linear(const HomoPoly& f, const HomoPoly& ell);

}  // namespace hyperbound

#endif
