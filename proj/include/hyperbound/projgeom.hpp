#ifndef HYPERBOUND_PROJGEOM_HPP
#define HYPERBOUND_PROJGEOM_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyperbound/linalg.hpp"

namespace hyperbound {

/// theta_q(m) = |P^m(F_q)| = sum_{v=0}^{m} q^v, with theta_q(-1) = 0.
long long theta(long long q, int m);

/// Gaussian binomial [n choose k]_q, the number of k-dimensional linear
/// subspaces of F_q^n.
long long gaussian_binomial(long long q, int n, int k);

/// A point of P^m(F_q), stored as the canonical representative whose first
/// nonzero coordinate is 1.
class ProjPoint {
   public:
    ProjPoint(const Field& f, std::vector<Fq> coords);

    const Field& field() const { return *f_; }
    int ambient_dim() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Fq>& coords() const { return c_; }
    Fq operator[](int i) const { return c_[i]; }

    std::string to_string() const;  // coordinate indices joined by ':'

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    bool operator<(const ProjPoint& b) const;

   private:
    const Field* f_;
    std::vector<Fq> c_;
};

/// Number of points of P^m(F_q); throws BudgetError beyond max_points.
long long point_count_checked(const Field& f, int m, long long max_points);

/// The rank-th point of P^m(F_q) in the fixed enumeration order (ascending
/// lexicographic order of normalized coordinate index vectors).
ProjPoint point_at(const Field& f, int m, long long rank);

/// Streams every point of P^m(F_q) exactly once in enumeration order,
/// without allocation per point. The visitor receives the coordinate index
/// vector; it must not retain the reference.
template <typename F>
void for_each_point(const Field& f, int m, F&& fn) {
    int q = f.size();
    std::vector<int> c(m + 1, 0);
    for (int pivot = m; pivot >= 0; --pivot) {
        std::fill(c.begin(), c.end(), 0);
        c[pivot] = 1;
        for (;;) {
            fn(static_cast<const std::vector<int>&>(c));
            int pos = m;
            while (pos > pivot && c[pos] == q - 1) c[pos--] = 0;
            if (pos == pivot) break;
            ++c[pos];
        }
    }
}

std::vector<ProjPoint> all_points(const Field& f, int m, long long max_points = 10'000'000);

/// An F_q-linear subspace of P^m of projective dimension k, held as the
/// unique reduced-row-echelon basis, so equality is matrix equality.
class LinearSubspace {
   public:
    /// Builds the subspace spanned by the given rows; throws if the span is
    /// zero or a row has the wrong length.
    LinearSubspace(const Field& f, int ambient_dim, Mat rows);

    const Field& field() const { return *f_; }
    int ambient_dim() const { return m_; }
    int dim() const { return static_cast<int>(basis_.size()) - 1; }
    const Mat& basis() const { return basis_; }

    bool contains(const ProjPoint& p) const;
    bool contains(const LinearSubspace& other) const;

    long long point_count() const { return theta(f_->size(), dim()); }
    /// Intrinsic point enumeration mapped into the ambient space; order
    /// follows the intrinsic P^k enumeration.
    ProjPoint point_at(long long rank) const;
    std::vector<ProjPoint> points() const;

    std::string to_string() const;  // rows joined by ';', entries by ':'

    friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
        return a.m_ == b.m_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const LinearSubspace& a, const LinearSubspace& b) { return !(a == b); }
    bool operator<(const LinearSubspace& b) const;

   private:
    const Field* f_;
    int m_;
    Mat basis_;
};

LinearSubspace whole_space(const Field& f, int m);
LinearSubspace subspace_of_point(const ProjPoint& p);

/// Hyperplane {sum form[i] X_i = 0}; form must be nonzero.
LinearSubspace hyperplane(const Field& f, const std::vector<Fq>& form);

LinearSubspace span(const LinearSubspace& a, const LinearSubspace& b);
LinearSubspace span(const LinearSubspace& a, const ProjPoint& p);

/// Intersection subspace, or nullopt when the subspaces are disjoint.
std::optional<LinearSubspace> intersect(const LinearSubspace& a, const LinearSubspace& b);

/// The same subspace with coordinates pushed through a field embedding.
LinearSubspace embed_subspace(const LinearSubspace& s, const Embedding& emb);

/// Enumerates every k-dimensional subspace of P^m(F_q) exactly once, as
/// canonical echelon bases: pivot column sets in lexicographic order, free
/// entries in odometer order within each set.
class SubspaceEnumerator {
   public:
    SubspaceEnumerator(const Field& f, int k, int m);

    long long count() const { return gaussian_binomial(f_->size(), m_ + 1, k_ + 1); }
    std::optional<LinearSubspace> next();
    void reset();

   private:
    bool advance_pivots();
    void recompute_free();

    const Field* f_;
    int k_, m_;
    std::vector<int> pivots_;
    std::vector<std::pair<int, int>> free_pos_;  // (row, col)
    std::vector<int> free_val_;
    bool done_ = false;
    bool fresh_ = true;
};

std::vector<LinearSubspace> all_subspaces(const Field& f, int k, int m,
                                          long long max_count = 10'000'000);

}  // namespace hyperbound

#endif
