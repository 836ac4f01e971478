#include "hyperbound/catalog.hpp"

#include <cmath>

namespace hyperbound {

namespace {

int exact_sqrt(long long q) {
    long long r = std::llround(std::sqrt(static_cast<double>(q)));
    while (r * r > q) --r;
    while ((r + 1) * (r + 1) <= q) ++r;
    if (r * r != q) throw std::invalid_argument("q must be a square");
    return static_cast<int>(r);
}

std::vector<int> unit_exps(int nvars, int i, int e) {
    std::vector<int> x(nvars, 0);
    x[i] = e;
    return x;
}

std::vector<int> pair_exps(int nvars, int i, int ei, int j, int ej) {
    std::vector<int> x(nvars, 0);
    x[i] = ei;
    x[j] = ej;
    return x;
}

}  // namespace

Hypersurface::Hypersurface(HomoPoly form) : form_(std::move(form)) {
    if (form_.is_zero()) throw std::invalid_argument("hypersurface form cannot be zero");
    if (form_.degree() < 1) throw std::invalid_argument("hypersurface needs positive degree");
}

Hypersurface hyperbolic_quadric(int n, const Field& f) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("hyperbolic quadric needs odd n >= 3");
    HomoPoly p(f, n + 1, 2);
    for (int i = 0; 2 * i + 1 <= n; ++i) p.add_term(pair_exps(n + 1, 2 * i, 1, 2 * i + 1, 1), f.one());
    return Hypersurface(std::move(p));
}

HomoPoly least_irreducible_binary_quadratic(const Field& f) {
    // X0^2 + b X0 X1 + c X1^2, (b, c) least in index order with no projective root
    for (int b = 0; b < f.size(); ++b)
        for (int c = 0; c < f.size(); ++c) {
            HomoPoly p(f, 2, 2);
            p.add_term({2, 0}, f.one());
            p.add_term({1, 1}, f.elem(b));
            p.add_term({0, 2}, f.elem(c));
            bool has_root = false;
            for_each_point(f, 1, [&](const std::vector<int>& pt) {
                if (p.evaluate_idx(pt) == 0) has_root = true;
            });
            if (!has_root) return p;
        }
    throw std::logic_error("no irreducible binary quadratic found");
}

Hypersurface elliptic_quadric_with(int n, const Field& f, const HomoPoly& irreducible) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("elliptic quadric needs odd n >= 3");
    if (irreducible.nvars() != 2 || irreducible.degree() != 2 || &irreducible.field() != &f)
        throw std::invalid_argument("binary quadratic of the same field required");
    HomoPoly p(f, n + 1, 2);
    for (const auto& [e, c] : irreducible.terms()) p.add_term(pair_exps(n + 1, 0, e[0], 1, e[1]), c);
    for (int i = 1; 2 * i + 1 <= n; ++i) p.add_term(pair_exps(n + 1, 2 * i, 1, 2 * i + 1, 1), f.one());
    return Hypersurface(std::move(p));
}

Hypersurface elliptic_quadric(int n, const Field& f) {
    return elliptic_quadric_with(n, f, least_irreducible_binary_quadratic(f));
}

Hypersurface hermitian(int n, const Field& f) {
    if (!f.has_sqrt_q()) throw std::invalid_argument("q must be a square");
    if (n < 2) throw std::invalid_argument("hermitian hypersurface needs n >= 2");
    int r = f.sqrt_q();
    HomoPoly p(f, n + 1, r + 1);
    int pairs = (n % 2 == 1) ? (n + 1) / 2 : n / 2;
    for (int i = 0; i < pairs; ++i) {
        p.add_term(pair_exps(n + 1, 2 * i, r, 2 * i + 1, 1), f.one());
        p.add_term(pair_exps(n + 1, 2 * i, 1, 2 * i + 1, r), f.one());
    }
    if (n % 2 == 0) p.add_term(unit_exps(n + 1, n, r + 1), f.one());
    return Hypersurface(std::move(p));
}

Hypersurface space_filling(int n, const Field& f) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("filling hypersurface needs odd n >= 3");
    int q = f.size();
    HomoPoly p(f, n + 1, q + 1);
    for (int i = 0; 2 * i + 1 <= n; ++i) {
        p.add_term(pair_exps(n + 1, 2 * i, q, 2 * i + 1, 1), f.one());
        p.add_term(pair_exps(n + 1, 2 * i, 1, 2 * i + 1, q), -f.one());
    }
    return Hypersurface(std::move(p));
}

Hypersurface parabolic_quadric(int m, const Field& f) {
    if (m < 2 || m % 2 == 1) throw std::invalid_argument("parabolic quadric needs even m >= 2");
    HomoPoly p(f, m + 1, 2);
    p.add_term(unit_exps(m + 1, 0, 2), f.one());
    for (int i = 1; 2 * i <= m; ++i) p.add_term(pair_exps(m + 1, 2 * i - 1, 1, 2 * i, 1), f.one());
    return Hypersurface(std::move(p));
}

Hypersurface cone_standard(int center_dim, const Hypersurface& base) {
    if (center_dim < 0) throw std::invalid_argument("center dimension must be nonnegative");
    int b = base.ambient_dim();
    int m = b + center_dim + 1;
    HomoPoly p(base.field(), m + 1, base.degree());
    for (const auto& [e, c] : base.form().terms()) {
        std::vector<int> ext = e;
        ext.resize(m + 1, 0);
        p.add_term(ext, c);
    }
    return Hypersurface(std::move(p));
}

Hypersurface cone(const LinearSubspace& center, const LinearSubspace& base_space,
                  const Hypersurface& base) {
    const Field& f = base.field();
    if (&center.field() != &f || &base_space.field() != &f)
        throw std::invalid_argument("cone pieces must share a field");
    int m = center.ambient_dim();
    if (base_space.ambient_dim() != m) throw std::invalid_argument("ambient dimension mismatch");
    if (base.ambient_dim() != base_space.dim())
        throw std::invalid_argument("base form does not match the base space dimension");
    if (intersect(center, base_space).has_value())
        throw std::invalid_argument("center meets the base space");
    if (center.dim() + base_space.dim() + 1 != m)
        throw std::invalid_argument("center and base space must span the ambient space");

    // Rows of M: base space basis then center basis; x = y * M identifies the
    // standard split with the given one.
    Mat mrows = base_space.basis();
    mrows.insert(mrows.end(), center.basis().begin(), center.basis().end());
    auto minv = inverse(f, mrows);
    if (!minv) throw std::logic_error("disjoint spanning subspaces gave a singular matrix");

    // F(x) = g(y_0..y_b) with y = x * M^{-1}
    std::vector<HomoPoly> images;
    images.reserve(base.ambient_dim() + 1);
    for (int r = 0; r <= base.ambient_dim(); ++r) {
        HomoPoly lin(f, m + 1, 1);
        for (int j = 0; j <= m; ++j) lin.add_term(unit_exps(m + 1, j, 1), (*minv)[j][r]);
        images.push_back(std::move(lin));
    }
    return Hypersurface(base.form().compose_linear(images));
}

AlternatingMatrix::AlternatingMatrix(const Field& f, Mat entries) : f_(&f), a_(std::move(entries)) {
    int n = static_cast<int>(a_.size());
    if (n == 0) throw std::invalid_argument("empty matrix");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a_[i].size()) != n) throw std::invalid_argument("matrix must be square");
        if (!a_[i][i].is_zero()) throw std::invalid_argument("alternating matrix needs zero diagonal");
        for (int j = 0; j < n; ++j)
            if (a_[i][j] != -a_[j][i]) throw std::invalid_argument("matrix is not alternating");
    }
}

bool AlternatingMatrix::is_zero() const {
    for (const auto& row : a_)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

Hypersurface from_alternating(const AlternatingMatrix& a) {
    if (a.is_zero()) throw std::invalid_argument("alternating matrix must be nonzero");
    const Field& f = a.field();
    int q = f.size();
    int nvars = a.size();
    HomoPoly p(f, nvars, q + 1);
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j) {
            Fq c = a.entries()[i][j];
            if (c.is_zero()) continue;
            p.add_term(pair_exps(nvars, i, q, j, 1), c);
            p.add_term(pair_exps(nvars, i, 1, j, q), -c);
        }
    return Hypersurface(std::move(p));
}

SymplecticNormalForm alternating_normal_form(const AlternatingMatrix& a) {
    const Field& f = a.field();
    int n = a.size();
    const Mat& A = a.entries();

    auto bilinear = [&](const std::vector<Fq>& u, const std::vector<Fq>& v) {
        Fq acc = f.zero();
        for (int i = 0; i < n; ++i) {
            if (u[i].is_zero()) continue;
            for (int j = 0; j < n; ++j) acc += u[i] * A[i][j] * v[j];
        }
        return acc;
    };

    std::vector<std::vector<Fq>> vecs;
    for (int i = 0; i < n; ++i) {
        std::vector<Fq> e(n, f.zero());
        e[i] = f.one();
        vecs.push_back(std::move(e));
    }
    std::vector<int> remaining(n);
    for (int i = 0; i < n; ++i) remaining[i] = i;

    std::vector<std::vector<Fq>> columns;
    for (;;) {
        int pi = -1, pj = -1;
        for (size_t i = 0; i < remaining.size() && pi < 0; ++i)
            for (size_t j = i + 1; j < remaining.size(); ++j)
                if (!bilinear(vecs[remaining[i]], vecs[remaining[j]]).is_zero()) {
                    pi = static_cast<int>(i);
                    pj = static_cast<int>(j);
                    break;
                }
        if (pi < 0) break;

        int ui = remaining[pi], vi = remaining[pj];
        Fq scale = bilinear(vecs[ui], vecs[vi]).inverse();
        for (auto& x : vecs[vi]) x *= scale;

        remaining.erase(remaining.begin() + pj);
        remaining.erase(remaining.begin() + pi);
        for (int wi : remaining) {
            Fq bv = bilinear(vecs[wi], vecs[vi]);
            Fq bu = bilinear(vecs[wi], vecs[ui]);
            for (int c = 0; c < n; ++c) vecs[wi][c] += -bv * vecs[ui][c] + bu * vecs[vi][c];
        }
        columns.push_back(vecs[ui]);
        columns.push_back(vecs[vi]);
    }
    int rank = static_cast<int>(columns.size());
    for (int wi : remaining) columns.push_back(vecs[wi]);

    Mat p = make_matrix(f, n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) p[r][c] = columns[c][r];
    return SymplecticNormalForm{std::move(p), rank};
}

Hypersurface build_family(const std::string& family, int n, const Field& f) {
    if (family == "hyperbolic") return hyperbolic_quadric(n, f);
    if (family == "elliptic") return elliptic_quadric(n, f);
    if (family == "hermitian") return hermitian(n, f);
    if (family == "filling") return space_filling(n, f);
    if (family == "parabolic") return parabolic_quadric(n, f);
    if (family.rfind("cone:", 0) == 0) {
        size_t sep = family.find(':', 5);
        if (sep == std::string::npos) throw std::invalid_argument("cone family is cone:<s>:<base>");
        int s = std::stoi(family.substr(5, sep - 5));
        std::string base = family.substr(sep + 1);
        if (s < 0 || n - s - 1 < 1) throw std::invalid_argument("cone center dimension out of range");
        return cone_standard(s, build_family(base, n - s - 1, f));
    }
    throw std::invalid_argument("unknown family: " + family);
}

long long closed_form_count(const std::string& family, int n, long long q) {
    if (family == "hyperbolic") {
        if (n < 3 || n % 2 == 0) throw std::invalid_argument("hyperbolic quadric needs odd n >= 3");
        int h = (n - 1) / 2;
        return theta(q, h) * (ipow(q, h) + 1);
    }
    if (family == "elliptic") {
        if (n < 3 || n % 2 == 0) throw std::invalid_argument("elliptic quadric needs odd n >= 3");
        return theta(q, (n - 3) / 2) * (ipow(q, (n + 1) / 2) + 1);
    }
    if (family == "hermitian") {
        int r = exact_sqrt(q);
        if (n < 2) throw std::invalid_argument("hermitian hypersurface needs n >= 2");
        if (n % 2 == 1) return theta(q, (n - 1) / 2) * (r * ipow(q, (n - 1) / 2) + 1);
        return theta(q, n / 2 - 1) * (r * ipow(q, n / 2) + 1);
    }
    if (family == "filling") {
        if (n < 3 || n % 2 == 0) throw std::invalid_argument("filling hypersurface needs odd n >= 3");
        return theta(q, n);
    }
    if (family == "parabolic") {
        if (n < 2 || n % 2 == 1) throw std::invalid_argument("parabolic quadric needs even m >= 2");
        return theta(q, n - 1);
    }
    if (family.rfind("cone:", 0) == 0) {
        size_t sep = family.find(':', 5);
        if (sep == std::string::npos) throw std::invalid_argument("cone family is cone:<s>:<base>");
        int s = std::stoi(family.substr(5, sep - 5));
        std::string base = family.substr(sep + 1);
        if (s < 0 || n - s - 1 < 1) throw std::invalid_argument("cone center dimension out of range");
        return cone_count(closed_form_count(base, n - s - 1, q), q, s);
    }
    throw std::invalid_argument("unknown family: " + family);
}

long long cone_count(long long base_count, long long q, int s) {
    return base_count * ipow(q, s + 1) + theta(q, s);
}

}  // namespace hyperbound
