#include "hyperbound/gf.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

namespace hyperbound {

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (b != 0 && r > std::numeric_limits<long long>::max() / std::abs(b))
            throw std::overflow_error("ipow overflow");
        r *= b;
    }
    return r;
}

int thread_budget() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    int n = std::min(hw, 8);
    if (const char* env = std::getenv("HYPERBOUND_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) n = std::min<long>(n, v);
    }
    return std::max(n, 1);
}

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over F_p as coefficient vectors, low degree first.
using Poly = std::vector<int>;

int pdeg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly pmul(const Poly& a, const Poly& b, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

// Remainder of a by monic b.
Poly pmod(Poly a, const Poly& b, int p) {
    int db = pdeg(b);
    for (int da = pdeg(a); da >= db; da = pdeg(a)) {
        int c = a[da];
        if (c != 0) {
            for (int i = 0; i <= db; ++i) a[da - db + i] = ((a[da - db + i] - c * b[i]) % p + p) % p;
        }
        a[da] = 0;
    }
    return a;
}

bool is_zero_poly(const Poly& a) { return pdeg(a) < 0; }

// Monic polynomial of degree d whose non-leading coefficients are the base-p
// digits of t with c_0 most significant, so increasing t walks the
// low-degree-first lexicographic order.
Poly monic_from_counter(long long t, int d, int p) {
    Poly a(d + 1, 0);
    a[d] = 1;
    for (int i = d - 1; i >= 0; --i) {
        a[d - 1 - i] = static_cast<int>((t / ipow(p, i)) % p);
    }
    return a;
}

bool is_irreducible(const Poly& f, int p) {
    int d = pdeg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    // Trial division by every monic polynomial of degree 1..d/2.
    for (int k = 1; 2 * k <= d; ++k) {
        long long count = ipow(p, k);
        for (long long t = 0; t < count; ++t) {
            Poly g = monic_from_counter(t, k, p);
            if (is_zero_poly(pmod(f, g, p))) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(int p, int e) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (e < 1) throw std::invalid_argument("extension degree must be at least 1");
    long long q = ipow(p, e);
    if (q > kMaxFieldSize) throw BudgetError("field size " + std::to_string(q) + " exceeds budget " +
                                             std::to_string(kMaxFieldSize));
    q_ = static_cast<int>(q);

    if (e_ == 1) {
        modulus_ = {0, 1};  // x itself; arithmetic is plain mod p
    } else {
        long long count = ipow(p, e);
        for (long long t = 0; t < count; ++t) {
            Poly f = monic_from_counter(t, e, p);
            if (is_irreducible(f, p)) {
                modulus_ = f;
                break;
            }
        }
        if (modulus_.empty()) throw std::logic_error("no irreducible modulus found");
    }

    // Digit-wise tables from the polynomial representation.
    add_.resize(q_ * q_);
    neg_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        std::vector<int> da = digits(a);
        std::vector<int> dn(e_);
        for (int i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = static_cast<std::uint8_t>(from_digits(dn));
        for (int b = 0; b < q_; ++b) {
            std::vector<int> db = digits(b);
            std::vector<int> ds(e_);
            for (int i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
            add_[a * q_ + b] = static_cast<std::uint8_t>(from_digits(ds));
        }
    }

    // Generator: least index with multiplicative order q-1.
    for (int g = 1; g < q_; ++g) {
        int ord = 0, x = 1;
        do {
            x = mul_schoolbook_i(x, g);
            ++ord;
        } while (x != 1);
        if (ord == q_ - 1) {
            gen_ = g;
            break;
        }
    }
    if (gen_ == 0) throw std::logic_error("no multiplicative generator found");

    exp_.resize(q_ - 1);
    log_.assign(q_, -1);
    int x = 1;
    for (int i = 0; i < q_ - 1; ++i) {
        exp_[i] = static_cast<std::uint8_t>(x);
        log_[x] = i;
        x = mul_schoolbook_i(x, gen_);
    }

    mul_.resize(q_ * q_);
    inv_.resize(q_);
    inv_[0] = 0;  // unused
    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b) {
            mul_[a * q_ + b] = (a == 0 || b == 0)
                                   ? 0
                                   : exp_[(log_[a] + log_[b]) % (q_ - 1)];
        }
        if (a != 0) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
}

std::vector<int> Field::digits(int idx) const {
    std::vector<int> c(e_);
    for (int i = 0; i < e_; ++i) {
        c[i] = idx % p_;
        idx /= p_;
    }
    return c;
}

int Field::from_digits(const std::vector<int>& c) const {
    int idx = 0;
    for (int i = e_ - 1; i >= 0; --i) idx = idx * p_ + c[i];
    return idx;
}

int Field::mul_schoolbook_i(int a, int b) const {
    std::vector<int> da = digits(a), db = digits(b);
    Poly prod = pmul(da, db, p_);
    Poly red = e_ == 1 ? Poly{prod[0] % p_} : pmod(std::move(prod), modulus_, p_);
    red.resize(e_, 0);
    return from_digits(red);
}

int Field::inv_i(int a) const {
    if (a == 0) throw std::invalid_argument("division by zero in " + name());
    return inv_[a];
}

int Field::div_i(int a, int b) const {
    if (b == 0) throw std::invalid_argument("division by zero in " + name());
    return mul_[a * q_ + inv_[b]];
}

int Field::pow_i(int a, long long k) const {
    if (k < 0) throw std::invalid_argument("negative exponent");
    if (k == 0) return 1;  // including 0^0 = 1
    if (a == 0) return 0;
    long long r = (static_cast<long long>(log_[a]) * (k % (q_ - 1))) % (q_ - 1);
    return exp_[r];
}

int Field::sqrt_q() const {
    if (e_ % 2 != 0) throw std::invalid_argument("sqrt(q) power map needs even extension degree");
    return static_cast<int>(ipow(p_, e_ / 2));
}

Fq Field::zero() const { return Fq(*this, 0); }
Fq Field::one() const { return Fq(*this, 1); }
Fq Field::elem(int idx) const { return Fq(*this, idx); }

std::string Field::name() const { return "F_" + std::to_string(q_); }

const Field& make_field(int p, int e) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, e}];
    if (!slot) slot = std::make_unique<Field>(p, e);
    return *slot;
}

const Field& make_field_q(int q) {
    if (q < 2) throw std::invalid_argument("field size must be at least 2");
    int p = 2;
    while (q % p != 0) ++p;
    int e = 0;
    int m = q;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return make_field(p, e);
}

Extension extend_field(const Field& base, int s) {
    if (s < 1) throw std::invalid_argument("extension degree must be at least 1");
    const Field& ext = make_field(base.characteristic(), base.degree() * s);

    // Evaluate the base modulus at candidates; prime-field coefficients embed
    // as their own indices. Least-index root wins.
    int root = -1;
    const std::vector<int>& mod = base.modulus();
    for (int r = 0; r < ext.size(); ++r) {
        int acc = 0, pw = 1;
        for (size_t i = 0; i < mod.size(); ++i) {
            acc = ext.add_i(acc, ext.mul_i(mod[i] % base.characteristic(), pw));
            pw = ext.mul_i(pw, r);
        }
        if (acc == 0) {
            root = r;
            break;
        }
    }
    if (root < 0) throw std::logic_error("base modulus has no root in the extension");

    std::vector<std::uint8_t> map(base.size());
    for (int a = 0; a < base.size(); ++a) {
        std::vector<int> c = base.digits(a);
        int acc = 0, pw = 1;
        for (int i = 0; i < base.degree(); ++i) {
            acc = ext.add_i(acc, ext.mul_i(c[i], pw));
            pw = ext.mul_i(pw, root);
        }
        map[a] = static_cast<std::uint8_t>(acc);
    }
    return Extension{&ext, Embedding(base, ext, std::move(map))};
}

}  // namespace hyperbound
