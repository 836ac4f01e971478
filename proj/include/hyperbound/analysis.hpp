#ifndef HYPERBOUND_ANALYSIS_HPP
#define HYPERBOUND_ANALYSIS_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hyperbound/catalog.hpp"

namespace hyperbound {

inline constexpr long long kDefaultMaxPoints = 10'000'000;

struct CountReport {
    long long n_points;
    int extension_degree;
    long long enumerated;  // ambient points visited
};

/// Zeros of the form among the points of its own projective space.
long long count_zeros(const HomoPoly& form, long long max_points = kDefaultMaxPoints);

/// Exact number of P^n(F_{q^s})-points of X, coefficients embedded upward.
/// Sweeps are partitioned across threads (capped by HYPERBOUND_THREADS).
CountReport count_points(const Hypersurface& x, int s = 1,
                         long long max_points = kDefaultMaxPoints);

struct SingularReport {
    /// Every F_{q^s}-point, s = 1..s_max, where the form and all partials
    /// vanish. Points found over a subfield reappear at each larger level in
    /// that level's coordinates.
    std::vector<std::pair<ProjPoint, int>> points;
    int s_max;  // the level this report actually certifies
    bool presumed_nonsingular() const { return points.empty(); }
};

/// Singular-point search over extensions up to degree s_max. An empty result
/// is a partial certificate only: nothing is claimed beyond s_max.
SingularReport singular_points(const Hypersurface& x, int s_max = 3,
                               long long max_points = kDefaultMaxPoints);

/// Largest s <= want such that the degree-s extension sweep fits both the
/// field budget and max_points.
int feasible_s_max(const Hypersurface& x, int want, long long max_points = kDefaultMaxPoints);

/// True when S lies in X scheme-theoretically (zero restriction). For
/// degree <= q the F_q-point test is equivalent and is used as a shortcut.
bool subspace_in_hypersurface(const Hypersurface& x, const LinearSubspace& s);

/// k_X: the largest k <= cap such that some k-dimensional F_q-subspace lies
/// in X; -1 when X has no F_q-point. Searches bottom-up and stops at the
/// first empty level.
int max_linear_dim(const Hypersurface& x, int cap, long long max_subspaces = kDefaultMaxPoints);

enum class TypeSVerdict { No, Yes, Degenerate };

struct TypeSReport {
    TypeSVerdict verdict;
    std::vector<LinearSubspace> components;  // ambient coordinates, when Yes
    std::optional<LinearSubspace> core;      // common (n-3)/2-dim intersection
    long long section_points = 0;            // |(M cap X)(F_q)|
    bool is_type_s() const { return verdict == TypeSVerdict::Yes; }
};

/// Decides whether M cap X is a union of deg(X) distinct (n-1)/2-dimensional
/// subspaces through a common (n-3)/2-dimensional core. M inside X entirely
/// is reported as Degenerate, not as a failure.
TypeSReport type_s(const LinearSubspace& m, const Hypersurface& x);

/// The embedded tangent hyperplane at a nonsingular F_q-point of X.
LinearSubspace tangent_hyperplane(const Hypersurface& x, const ProjPoint& p);

/// Complete factorization into normalized linear forms (with multiplicity),
/// or nullopt if any non-linear factor remains.
std::optional<std::vector<HomoPoly>> linear_factors(const HomoPoly& f);

/// The hyperplanes of a form that splits completely into F_q-linear factors.
std::optional<std::vector<LinearSubspace>> splits_into_hyperplanes(const Hypersurface& x);

/// Visits every invertible (n+1)x(n+1) matrix over the field in a fixed
/// order; stops early when the visitor returns false.
void for_each_gl(const Field& f, int n, const std::function<bool(const Mat&)>& visit);

/// |GL(n, F_q)| as an exact integer.
long long gl_order(long long q, int n);

/// Exhaustive projective equivalence over F_q: true iff some coordinate
/// change carries one form to a scalar multiple of the other. Point counts
/// and k_X serve as cheap pre-filters; tiny cases only.
bool orbit_equivalent(const Hypersurface& a, const Hypersurface& b,
                      long long max_group = 30'000'000);

}  // namespace hyperbound

#endif
