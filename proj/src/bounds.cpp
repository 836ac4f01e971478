#include "hyperbound/bounds.hpp"

#include <limits>

namespace hyperbound {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational Rational::make(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min() ||
        d > std::numeric_limits<long long>::max())
        throw std::overflow_error("rational out of 64-bit range");
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
}

Rational::Rational(long long n, long long d) { *this = make(n, d); }

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::make(static_cast<__int128>(a.num_) * b.den_ +
                              static_cast<__int128>(b.num_) * a.den_,
                          static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational::make(static_cast<__int128>(a.num_) * b.den_ -
                              static_cast<__int128>(b.num_) * a.den_,
                          static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::make(static_cast<__int128>(a.num_) * b.num_,
                          static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("division by zero rational");
    return Rational::make(static_cast<__int128>(a.num_) * b.den_,
                          static_cast<__int128>(a.den_) * b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

long long main_bound(int n, int d, long long q) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("main bound needs odd n >= 3");
    if (d < 2) throw std::invalid_argument("main bound needs degree >= 2");
    int h = (n - 1) / 2;
    return theta(q, h) * ((d - 1) * ipow(q, h) + 1);
}

long long sss_bound(int m, int d, long long q) {
    if (m < 2 || d < 1) throw std::invalid_argument("sss bound needs m >= 2 and d >= 1");
    return d * ipow(q, m - 1) + theta(q, m - 2);
}

long long phi_bound(int m, int k, int d, long long q) {
    if (k < 0 || k > m - 1) throw std::invalid_argument("phi bound needs 0 <= k <= m-1");
    return theta(q, m - k - 1) * ipow(q, k) * (d - 1) + theta(q, k);
}

Rational thas_bound(int m, int k, int d, long long q) {
    if (k < 1 || k > m - 2) throw std::invalid_argument("thas bound needs 1 <= k <= m-2");
    Rational t(d * ipow(q, m - 1) + theta(q, m - 2));
    Rational correction(0);
    for (int i = k; i <= m - 2; ++i)
        correction = correction + Rational(ipow(q, i) * theta(q, m - 1), theta(q, i) * theta(q, i + 1));
    return t + Rational(d - (q + 1)) * correction;
}

ThasComparison compare_thas(int m, int k, int d, long long q) {
    if (d > q + 1) throw std::invalid_argument("comparison is stated for d <= q+1");
    long long s = phi_bound(m, k, d, q);
    Rational t = thas_bound(m, k, d, q);
    Rational diff = t - Rational(s);
    long long tt = q + 1 - d;
    Rational closed = Rational(tt, q * theta(q, k)) *
                      Rational(ipow(q, k + 1) * theta(q, m - k - 2) * theta(q, k) -
                               theta(q, m - 1) + theta(q, k));
    return ThasComparison{s, t, diff, closed, Rational(0) < diff};
}

long long even_bound(int m, int d, long long q) {
    if (m < 2 || m % 2 == 1) throw std::invalid_argument("even-m bound needs even m >= 2");
    return theta(q, m / 2) * ipow(q, m / 2 - 1) * (d - 1) + theta(q, m / 2 - 1);
}

long long conjecture_bound(int m, int d, long long q) {
    if (m < 2 || m % 2 == 1) throw std::invalid_argument("even-m bound needs even m >= 2");
    return theta(q, m / 2 - 1) * ((d - 1) * ipow(q, m / 2) + 1);
}

namespace {

long long isqrt_exact(long long q) {
    long long r = 1;
    while (r * r < q) ++r;
    return r * r == q ? r : -1;
}

std::string attaining_family_odd(int d, long long q) {
    if (d == 2) return "hyperbolic";
    long long r = isqrt_exact(q);
    if (r > 0 && d == r + 1) return "hermitian";
    if (d == q + 1) return "filling";
    return "";
}

std::string attaining_family_even(int d, long long q) {
    if (d == 2) return "parabolic";
    long long r = isqrt_exact(q);
    if (r > 0 && d == r + 1) return "hermitian";
    return "";
}

}  // namespace

std::vector<BoundReport> bound_table(int m, int d, long long q, int k) {
    if (k < 0) k = (m - 1) / 2;
    std::vector<BoundReport> out;
    if (m % 2 == 1 && m >= 3 && d >= 2)
        out.push_back({"main", Rational(main_bound(m, d, q)), m, -1, d, q,
                       attaining_family_odd(d, q), true});
    out.push_back({"sss", Rational(sss_bound(m, d, q)), m, -1, d, q, "", true});
    if (k <= m - 1)
        out.push_back({"phi", Rational(phi_bound(m, k, d, q)), m, k, d, q, "", true});
    if (k >= 1 && k <= m - 2)
        out.push_back({"thas", thas_bound(m, k, d, q), m, k, d, q, "", true});
    if (m % 2 == 0) {
        out.push_back({"even", Rational(even_bound(m, d, q)), m, -1, d, q, "", false});
        out.push_back({"conjecture", Rational(conjecture_bound(m, d, q)), m, -1, d, q,
                       attaining_family_even(d, q), true});
    }
    return out;
}

}  // namespace hyperbound
