#ifndef HYPERBOUND_GF_HPP
#define HYPERBOUND_GF_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperbound/util.hpp"

namespace hyperbound {

/// Largest supported field size; all arithmetic is table-backed below this.
inline constexpr int kMaxFieldSize = 128;

class Fq;

/// The finite field F_{p^e}, elements indexed 0..q-1 in the polynomial basis
/// (index = sum c_i p^i for the residue sum c_i x^i modulo a fixed irreducible).
///
/// The modulus is the lexicographically least monic irreducible of degree e
/// over F_p (coefficients compared low-degree-first), so a (p, e) pair names
/// exactly one field and all derived output is reproducible bit for bit.
///
/// Immutable after construction; safe to share across threads. Obtain
/// instances through make_field() so elements of equal fields can be mixed.
class Field {
   public:
    Field(int p, int e);

    int characteristic() const { return p_; }
    int degree() const { return e_; }
    int size() const { return q_; }

    /// Modulus coefficients, low degree first, length e+1, monic.
    const std::vector<int>& modulus() const { return modulus_; }

    /// Index of a fixed generator of the multiplicative group.
    int generator_index() const { return gen_; }

    Fq zero() const;
    Fq one() const;
    Fq elem(int idx) const;

    // Index-level arithmetic (the fast path used by enumeration kernels).
    int add_i(int a, int b) const { return add_[a * q_ + b]; }
    int sub_i(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int neg_i(int a) const { return neg_[a]; }
    int mul_i(int a, int b) const { return mul_[a * q_ + b]; }
    int inv_i(int a) const;
    int div_i(int a, int b) const;
    int pow_i(int a, long long k) const;

    /// Reference multiplication straight from the polynomial representation;
    /// kept independent of the log/antilog tables so the two can be checked
    /// against each other.
    int mul_schoolbook_i(int a, int b) const;

    int frobenius_i(int a) const { return pow_i(a, p_); }
    int q_power_i(int a) const { return pow_i(a, q_); }
    int sqrt_q_power_i(int a) const { return pow_i(a, sqrt_q()); }

    /// p^{e/2}; throws if the degree is odd.
    int sqrt_q() const;
    bool has_sqrt_q() const { return e_ % 2 == 0; }

    /// Polynomial-basis coefficients of an index, length e.
    std::vector<int> digits(int idx) const;
    int from_digits(const std::vector<int>& c) const;

    std::string name() const;  // e.g. "F_4"

   private:
    int p_, e_, q_;
    std::vector<int> modulus_;
    std::vector<std::uint8_t> add_, mul_, neg_, exp_;
    std::vector<std::uint8_t> inv_;
    std::vector<int> log_;
    int gen_ = 0;
};

/// Interned field lookup: one Field instance per (p, e), live for the process.
const Field& make_field(int p, int e);

/// Same, from a prime power q.
const Field& make_field_q(int q);

/// A field element as a value type: an index plus the field it lives in.
/// Default-constructed elements belong to no field and only support
/// equality; any arithmetic first checks that both operands share a field.
class Fq {
   public:
    Fq() = default;
    Fq(const Field& f, int idx) : f_(&f), v_(static_cast<std::uint8_t>(idx)) {
        if (idx < 0 || idx >= f.size()) throw std::invalid_argument("element index out of range");
    }

    int index() const { return v_; }
    const Field* field() const { return f_; }
    bool is_zero() const { return v_ == 0; }

    friend Fq operator+(Fq a, Fq b) { const Field& f = common(a, b); return Fq(f, f.add_i(a.v_, b.v_)); }
    friend Fq operator-(Fq a, Fq b) { const Field& f = common(a, b); return Fq(f, f.sub_i(a.v_, b.v_)); }
    friend Fq operator*(Fq a, Fq b) { const Field& f = common(a, b); return Fq(f, f.mul_i(a.v_, b.v_)); }
    friend Fq operator/(Fq a, Fq b) { const Field& f = common(a, b); return Fq(f, f.div_i(a.v_, b.v_)); }
    Fq operator-() const { return f_ ? Fq(*f_, f_->neg_i(v_)) : Fq(); }

    Fq& operator+=(Fq b) { return *this = *this + b; }
    Fq& operator-=(Fq b) { return *this = *this - b; }
    Fq& operator*=(Fq b) { return *this = *this * b; }
    Fq& operator/=(Fq b) { return *this = *this / b; }

    Fq inverse() const { require(); return Fq(*f_, f_->inv_i(v_)); }
    Fq pow(long long k) const { require(); return Fq(*f_, f_->pow_i(v_, k)); }
    Fq frobenius() const { require(); return Fq(*f_, f_->frobenius_i(v_)); }
    Fq q_power() const { require(); return Fq(*f_, f_->q_power_i(v_)); }
    Fq sqrt_q_power() const { require(); return Fq(*f_, f_->sqrt_q_power_i(v_)); }

    friend bool operator==(Fq a, Fq b) { return a.f_ == b.f_ && a.v_ == b.v_; }
    friend bool operator!=(Fq a, Fq b) { return !(a == b); }

   private:
    static const Field& common(Fq a, Fq b) {
        if (a.f_ == nullptr || a.f_ != b.f_) throw std::invalid_argument("mixed or missing fields");
        return *a.f_;
    }
    void require() const {
        if (f_ == nullptr) throw std::invalid_argument("element has no field");
    }

    const Field* f_ = nullptr;
    std::uint8_t v_ = 0;
};

/// Ring embedding F_q -> F_{q^s}, realized by sending the base generator of
/// the polynomial basis to the least-index root of the base modulus.
class Embedding {
   public:
    Embedding(const Field& from, const Field& to, std::vector<std::uint8_t> map)
        : from_(&from), to_(&to), map_(std::move(map)) {}

    const Field& from() const { return *from_; }
    const Field& to() const { return *to_; }

    Fq operator()(Fq a) const {
        if (a.field() != from_) throw std::invalid_argument("element not in embedding domain");
        return Fq(*to_, map_[a.index()]);
    }
    int map_i(int idx) const { return map_[idx]; }

   private:
    const Field* from_;
    const Field* to_;
    std::vector<std::uint8_t> map_;
};

struct Extension {
    const Field* field;
    Embedding embed;
};

/// F_{q^s} together with the embedding of the base field. s = 1 gives the
/// identity. Deterministic: the extension is make_field(p, e*s) and the
/// embedding uses the least-index root of the base modulus.
Extension extend_field(const Field& base, int s);

}  // namespace hyperbound

#endif
