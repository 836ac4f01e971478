#include "hyperbound/homopoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace hyperbound {

HomoPoly::HomoPoly(const Field& f, int nvars, int degree) : f_(&f), nvars_(nvars), degree_(degree) {
    if (nvars < 1) throw std::invalid_argument("polynomial needs at least one variable");
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
}

HomoPoly HomoPoly::monomial(const Field& f, std::vector<int> exps, Fq coeff) {
    int d = std::accumulate(exps.begin(), exps.end(), 0);
    HomoPoly p(f, static_cast<int>(exps.size()), d);
    p.add_term(exps, coeff);
    return p;
}

HomoPoly& HomoPoly::add_term(const std::vector<int>& exps, Fq c) {
    if (static_cast<int>(exps.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
    int sum = 0;
    for (int e : exps) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        sum += e;
    }
    if (sum != degree_) throw std::invalid_argument("term degree mismatch");
    if (c.field() != f_) throw std::invalid_argument("coefficient from wrong field");
    if (c.is_zero()) return *this;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

HomoPoly operator+(const HomoPoly& a, const HomoPoly& b) {
    if (a.f_ != b.f_ || a.nvars_ != b.nvars_ || a.degree_ != b.degree_)
        throw std::invalid_argument("polynomial shape mismatch");
    HomoPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

HomoPoly operator-(const HomoPoly& a, const HomoPoly& b) {
    if (a.f_ != b.f_ || a.nvars_ != b.nvars_ || a.degree_ != b.degree_)
        throw std::invalid_argument("polynomial shape mismatch");
    HomoPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

HomoPoly operator*(const HomoPoly& a, const HomoPoly& b) {
    if (a.f_ != b.f_ || a.nvars_ != b.nvars_)
        throw std::invalid_argument("polynomial shape mismatch");
    HomoPoly r(*a.f_, a.nvars_, a.degree_ + b.degree_);
    std::vector<int> e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

HomoPoly operator*(Fq c, const HomoPoly& a) {
    HomoPoly r(*a.f_, a.nvars_, a.degree_);
    for (const auto& [e, v] : a.terms_) r.add_term(e, c * v);
    return r;
}

Fq HomoPoly::evaluate(const std::vector<Fq>& x) const {
    if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("evaluation arity mismatch");
    std::vector<int> idx(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].field() != f_) throw std::invalid_argument("point from wrong field");
        idx[i] = x[i].index();
    }
    return Fq(*f_, evaluate_idx(idx));
}

int HomoPoly::evaluate_idx(const std::vector<int>& x) const {
    if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("evaluation arity mismatch");
    int acc = 0;
    for (const auto& [e, c] : terms_) {
        int t = c.index();
        for (int i = 0; i < nvars_ && t != 0; ++i)
            if (e[i] != 0) t = f_->mul_i(t, f_->pow_i(x[i], e[i]));
        acc = f_->add_i(acc, t);
    }
    return acc;
}

HomoPoly HomoPoly::partial(int i) const {
    if (i < 0 || i >= nvars_) throw std::invalid_argument("variable index out of range");
    HomoPoly r(*f_, nvars_, degree_ > 0 ? degree_ - 1 : 0);
    if (degree_ == 0) return r;
    int p = f_->characteristic();
    for (const auto& [e, c] : terms_) {
        int ei = e[i] % p;
        if (ei == 0) continue;
        std::vector<int> ne = e;
        --ne[i];
        // ei mod p lives in the prime subfield, whose elements are the
        // indices 0..p-1
        r.add_term(ne, f_->elem(ei) * c);
    }
    return r;
}

HomoPoly HomoPoly::compose_linear(const std::vector<HomoPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("one image per variable required");
    int nout = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images)
        if (im.degree() != 1 || im.nvars() != nout || &im.field() != f_)
            throw std::invalid_argument("images must be degree-1 forms in a common space");

    // pow_cache[i][t] = images[i]^t
    std::vector<std::vector<HomoPoly>> pow_cache(nvars_);
    auto power = [&](int i, int t) -> const HomoPoly& {
        auto& cache = pow_cache[i];
        if (cache.empty()) {
            HomoPoly one(*f_, nout, 0);
            one.add_term(std::vector<int>(nout, 0), f_->one());
            cache.push_back(std::move(one));
        }
        while (static_cast<int>(cache.size()) <= t) cache.push_back(cache.back() * images[i]);
        return cache[t];
    };

    HomoPoly acc(*f_, nout, degree_);
    for (const auto& [e, c] : terms_) {
        HomoPoly term(*f_, nout, 0);
        term.add_term(std::vector<int>(nout, 0), c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        acc = acc + term;
    }
    return acc;
}

HomoPoly HomoPoly::restricted_to(const LinearSubspace& s) const {
    if (s.ambient_dim() + 1 != nvars_ || &s.field() != f_)
        throw std::invalid_argument("subspace not in this polynomial's space");
    int nout = s.dim() + 1;
    std::vector<HomoPoly> images;
    images.reserve(nvars_);
    for (int j = 0; j < nvars_; ++j) {
        HomoPoly lin(*f_, nout, 1);
        for (int r = 0; r < nout; ++r) {
            std::vector<int> e(nout, 0);
            e[r] = 1;
            lin.add_term(e, s.basis()[r][j]);
        }
        images.push_back(std::move(lin));
    }
    return compose_linear(images);
}

HomoPoly HomoPoly::embedded(const Embedding& emb) const {
    if (&emb.from() != f_) throw std::invalid_argument("embedding domain mismatch");
    HomoPoly r(emb.to(), nvars_, degree_);
    for (const auto& [e, c] : terms_) r.add_term(e, emb(c));
    return r;
}

std::string HomoPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!s.empty()) s += '+';
        s += std::to_string(c.index());
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            s += "*X" + std::to_string(i) + "^" + std::to_string(e[i]);
        }
    }
    return s;
}

HomoPoly HomoPoly::parse(const Field& f, int nvars, const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty polynomial text");
    if (t == "0") return HomoPoly(f, nvars, 0);

    std::vector<std::pair<std::vector<int>, Fq>> parsed;
    int degree = -1;
    size_t pos = 0;
    while (pos < t.size()) {
        size_t end = t.find('+', pos);
        if (end == std::string::npos) end = t.size();
        std::string term = t.substr(pos, end - pos);
        pos = end + 1;
        if (term.empty()) throw std::invalid_argument("empty term in polynomial text");

        std::vector<int> exps(nvars, 0);
        Fq coeff = f.one();
        bool saw_coeff = false;
        size_t fpos = 0;
        while (fpos < term.size()) {
            size_t fend = term.find('*', fpos);
            if (fend == std::string::npos) fend = term.size();
            std::string factor = term.substr(fpos, fend - fpos);
            fpos = fend + 1;
            if (factor.empty()) throw std::invalid_argument("empty factor in polynomial text");
            if (factor[0] == 'X' || factor[0] == 'x') {
                size_t caret = factor.find('^');
                std::string var = factor.substr(1, caret == std::string::npos
                                                       ? std::string::npos
                                                       : caret - 1);
                int vi = std::stoi(var);
                int e = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
                if (vi < 0 || vi >= nvars) throw std::invalid_argument("variable index out of range");
                if (e < 0) throw std::invalid_argument("negative exponent");
                exps[vi] += e;
            } else {
                if (saw_coeff) throw std::invalid_argument("two coefficients in one term");
                int ci = std::stoi(factor);
                if (ci < 0 || ci >= f.size())
                    throw std::invalid_argument("coefficient index out of range for " + f.name());
                coeff = f.elem(ci);
                saw_coeff = true;
            }
        }
        int d = std::accumulate(exps.begin(), exps.end(), 0);
        if (degree < 0) degree = d;
        if (d != degree) throw std::invalid_argument("terms of unequal degree");
        parsed.emplace_back(std::move(exps), coeff);
    }
    HomoPoly r(f, nvars, degree);
    for (auto& [e, c] : parsed) r.add_term(e, c);
    return r;
}

std::optional<ProjPoint> nonvanishing_point(const HomoPoly& f, long long max_points) {
    const Field& k = f.field();
    if (f.degree() > k.size())
        throw std::invalid_argument("witness search requires degree <= q");
    if (f.is_zero()) return std::nullopt;
    int m = f.nvars() - 1;
    point_count_checked(k, m, max_points);
    std::optional<ProjPoint> found;
    for_each_point(k, m, [&](const std::vector<int>& c) {
        if (!found && f.evaluate_idx(c) != 0) {
            std::vector<Fq> v;
            v.reserve(c.size());
            for (int x : c) v.push_back(k.elem(x));
            found.emplace(k, std::move(v));
        }
    });
    if (!found) throw std::logic_error("nonzero polynomial of degree <= q vanished everywhere");
    return found;
}

std::optional<HomoPoly> divide_by_linear(const HomoPoly& f, const HomoPoly& ell) {
    if (ell.degree() != 1 || ell.is_zero()) throw std::invalid_argument("divisor must be a nonzero linear form");
    if (&f.field() != &ell.field() || f.nvars() != ell.nvars())
        throw std::invalid_argument("polynomial shape mismatch");
    if (f.degree() < 1) return std::nullopt;
    const Field& k = f.field();
    int n = f.nvars();

    int pivot = -1;
    Fq c = k.zero();
    for (const auto& [e, v] : ell.terms()) {
        for (int i = 0; i < n; ++i)
            if (e[i] == 1) {
                if (pivot < 0 || i < pivot) {
                    pivot = i;
                    c = v;
                }
                break;
            }
    }

    HomoPoly quotient(k, n, f.degree() - 1);
    HomoPoly rem = f;
    for (;;) {
        // highest pivot-degree term still present
        const std::vector<int>* best = nullptr;
        Fq bc = k.zero();
        for (const auto& [e, v] : rem.terms()) {
            if (e[pivot] == 0) continue;
            if (!best || e[pivot] > (*best)[pivot]) {
                best = &e;
                bc = v;
            }
        }
        if (!best) break;
        std::vector<int> qe = *best;
        --qe[pivot];
        Fq qc = bc / c;
        quotient.add_term(qe, qc);
        rem = rem - HomoPoly::monomial(k, qe, qc) * ell;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quotient;
}

}  // namespace hyperbound
