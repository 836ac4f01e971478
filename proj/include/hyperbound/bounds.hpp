#ifndef HYPERBOUND_BOUNDS_HPP
#define HYPERBOUND_BOUNDS_HPP

#include <string>
#include <vector>

#include "hyperbound/projgeom.hpp"

namespace hyperbound {

/// Exact rational on int64 with 128-bit intermediates; always normalized
/// (gcd 1, positive denominator), so comparisons are decidable.
class Rational {
   public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-num_, den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// "num/den", or just "num" for integers.
    std::string to_string() const;

   private:
    static Rational make(__int128 n, __int128 d);
    long long num_ = 0;
    long long den_ = 1;
};

/// theta_q((n-1)/2) * ((d-1) q^{(n-1)/2} + 1): the bound for odd-dimensional
/// ambient spaces, attained exactly by the hyperbolic, Hermitian, and
/// filling families.
long long main_bound(int n, int d, long long q);

/// d q^{m-1} + theta_q(m-2): the Segre-Serre-Sorensen bound.
long long sss_bound(int m, int d, long long q);

/// Phi(k, d) = theta_q(m-k-1) q^k (d-1) + theta_q(k): valid when k_X <= k.
/// Strictly increasing in k for d <= q; constant theta_q(m) at d = q+1.
long long phi_bound(int m, int k, int d, long long q);

/// The k_X-aware comparison bound: d q^{m-1} + theta(m-2) +
/// (d-(q+1)) sum_{i=k}^{m-2} q^i theta(m-1)/(theta(i) theta(i+1)).
Rational thas_bound(int m, int k, int d, long long q);

struct ThasComparison {
    long long geb;          // S
    Rational thas;          // T
    Rational diff;          // T - S, direct evaluation
    Rational diff_closed;   // (q+1-d)/(q theta(k)) * (q^{k+1} theta(m-k-2) theta(k) - theta(m-1) + theta(k))
    bool geb_better;        // T - S > 0
};

/// Evaluates both bounds and the closed form of their difference; valid for
/// d <= q+1 and 1 <= k <= m-2.
ThasComparison compare_thas(int m, int k, int d, long long q);

/// theta_q(m/2) q^{m/2-1} (d-1) + theta_q(m/2-1) for even m; never attained
/// by a hypersurface with k_X <= m/2 - 1.
long long even_bound(int m, int d, long long q);

/// theta_q(m/2-1) ((d-1) q^{m/2} + 1) for even m; attained by the parabolic
/// quadric and the Hermitian hypersurface.
long long conjecture_bound(int m, int d, long long q);

struct BoundReport {
    std::string name;
    Rational value;
    int m = 0, k = -1, d = 0;  // k = -1 when the bound does not use it
    long long q = 0;
    std::string attained_by;  // known attaining family, if any
    bool attainable = true;   // false for the even-m bound
};

/// Every bound that applies at (m, d, q), with k defaulting to
/// floor((m-1)/2) where one is needed.
std::vector<BoundReport> bound_table(int m, int d, long long q, int k = -1);

}  // namespace hyperbound

#endif
