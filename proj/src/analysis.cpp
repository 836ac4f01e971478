#include "hyperbound/analysis.hpp"

#include <algorithm>
#include <thread>

namespace hyperbound {

namespace {

// Walks P^m(F_q) in enumeration order starting from a given rank; used to
// partition counting sweeps across threads.
class PointCursor {
   public:
    PointCursor(const Field& f, int m, long long rank) : q_(f.size()), m_(m), c_(m + 1, 0) {
        pivot_ = m;
        while (rank >= theta(q_, m - pivot_)) --pivot_;
        long long offset = rank - theta(q_, m - pivot_ - 1);
        c_[pivot_] = 1;
        for (int j = m; j > pivot_; --j) {
            c_[j] = static_cast<int>(offset % q_);
            offset /= q_;
        }
    }

    const std::vector<int>& coords() const { return c_; }

    void advance() {
        int pos = m_;
        while (pos > pivot_ && c_[pos] == q_ - 1) c_[pos--] = 0;
        if (pos > pivot_) {
            ++c_[pos];
            return;
        }
        if (pivot_ == 0) return;  // past the last point
        c_[pivot_] = 0;
        --pivot_;
        c_[pivot_] = 1;
    }

   private:
    int q_, m_;
    int pivot_;
    std::vector<int> c_;
};

}  // namespace

long long count_zeros(const HomoPoly& form, long long max_points) {
    const Field& f = form.field();
    int m = form.nvars() - 1;
    long long total = point_count_checked(f, m, max_points);

    int workers = thread_budget();
    if (workers <= 1 || total < 65536) {
        long long n = 0;
        for_each_point(f, m, [&](const std::vector<int>& c) {
            if (form.evaluate_idx(c) == 0) ++n;
        });
        return n;
    }

    std::vector<long long> partial(workers, 0);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        long long lo = total * w / workers;
        long long hi = total * (w + 1) / workers;
        pool.emplace_back([&, w, lo, hi] {
            if (lo >= hi) return;
            PointCursor cur(f, m, lo);
            long long n = 0;
            for (long long r = lo; r < hi; ++r) {
                if (form.evaluate_idx(cur.coords()) == 0) ++n;
                cur.advance();
            }
            partial[w] = n;
        });
    }
    for (auto& t : pool) t.join();
    long long n = 0;
    for (long long x : partial) n += x;
    return n;
}

CountReport count_points(const Hypersurface& x, int s, long long max_points) {
    if (s < 1) throw std::invalid_argument("extension degree must be at least 1");
    const Field& base = x.field();
    if (s == 1) {
        long long n = count_zeros(x.form(), max_points);
        return CountReport{n, 1, theta(base.size(), x.ambient_dim())};
    }
    Extension ext = extend_field(base, s);
    HomoPoly lifted = x.form().embedded(ext.embed);
    long long n = count_zeros(lifted, max_points);
    return CountReport{n, s, theta(ext.field->size(), x.ambient_dim())};
}

int feasible_s_max(const Hypersurface& x, int want, long long max_points) {
    long long q = x.field().size();
    int best = 0;
    for (int s = 1; s <= want; ++s) {
        long long qs = 1;
        bool fits = true;
        for (int i = 0; i < s; ++i) {
            qs *= q;
            if (qs > kMaxFieldSize) fits = false;
        }
        if (!fits || theta(qs, x.ambient_dim()) > max_points) break;
        best = s;
    }
    return best;
}

SingularReport singular_points(const Hypersurface& x, int s_max, long long max_points) {
    if (s_max < 1) throw std::invalid_argument("s_max must be at least 1");
    const Field& base = x.field();
    int n = x.ambient_dim();

    std::vector<HomoPoly> partials;
    for (int i = 0; i <= n; ++i) partials.push_back(x.form().partial(i));

    SingularReport report;
    report.s_max = s_max;
    for (int s = 1; s <= s_max; ++s) {
        Extension ext = extend_field(base, s);
        const Field& k = *ext.field;
        point_count_checked(k, n, max_points);
        HomoPoly form = x.form().embedded(ext.embed);
        std::vector<HomoPoly> grads;
        for (const auto& p : partials) grads.push_back(p.embedded(ext.embed));

        for_each_point(k, n, [&](const std::vector<int>& c) {
            if (form.evaluate_idx(c) != 0) return;
            for (const auto& g : grads)
                if (g.evaluate_idx(c) != 0) return;
            std::vector<Fq> v;
            v.reserve(c.size());
            for (int idx : c) v.push_back(k.elem(idx));
            report.points.emplace_back(ProjPoint(k, std::move(v)), s);
        });
    }
    return report;
}

bool subspace_in_hypersurface(const Hypersurface& x, const LinearSubspace& s) {
    // F_q-point containment first: for degree <= q it is equivalent to the
    // zero restriction, otherwise it screens before the exact check.
    long long pts = s.point_count();
    for (long long r = 0; r < pts; ++r) {
        ProjPoint p = s.point_at(r);
        if (!x.form().evaluate(p.coords()).is_zero()) return false;
    }
    if (x.degree() <= x.field().size()) return true;
    return x.form().restricted_to(s).is_zero();
}

int max_linear_dim(const Hypersurface& x, int cap, long long max_subspaces) {
    const Field& f = x.field();
    int n = x.ambient_dim();
    cap = std::min(cap, n);
    int best = -1;
    for (int k = 0; k <= cap; ++k) {
        if (gaussian_binomial(f.size(), n + 1, k + 1) > max_subspaces)
            throw BudgetError("subspace sweep at dimension " + std::to_string(k) +
                              " exceeds budget");
        bool found = false;
        SubspaceEnumerator en(f, k, n);
        while (auto s = en.next()) {
            if (subspace_in_hypersurface(x, *s)) {
                found = true;
                break;
            }
        }
        if (!found) break;  // no k-subspace, hence nothing larger either
        best = k;
    }
    return best;
}

TypeSReport type_s(const LinearSubspace& m, const Hypersurface& x) {
    int n = x.ambient_dim();
    if (n % 2 == 0 || n < 3) throw std::invalid_argument("type S needs odd ambient dimension");
    if (m.ambient_dim() != n || &m.field() != &x.field())
        throw std::invalid_argument("subspace not in the hypersurface's space");
    if (m.dim() != (n + 1) / 2)
        throw std::invalid_argument("type S tests subspaces of dimension (n+1)/2");

    const Field& f = x.field();
    int d = x.degree();
    HomoPoly section = x.form().restricted_to(m);

    TypeSReport report{TypeSVerdict::No, {}, std::nullopt, 0};
    long long on = 0;
    for (long long r = 0; r < m.point_count(); ++r)
        if (x.form().evaluate(m.point_at(r).coords()).is_zero()) ++on;
    report.section_points = on;

    if (section.is_zero()) {
        report.verdict = TypeSVerdict::Degenerate;
        return report;
    }

    auto factors = linear_factors(section);
    if (!factors) return report;

    // d distinct hyperplanes of M, mapped back to ambient coordinates
    std::vector<HomoPoly> distinct;
    for (const auto& ell : *factors) {
        bool seen = false;
        for (const auto& other : distinct) seen = seen || other == ell;
        if (!seen) distinct.push_back(ell);
    }
    if (static_cast<int>(distinct.size()) != d || static_cast<int>(factors->size()) != d)
        return report;

    std::vector<LinearSubspace> components;
    for (const auto& ell : distinct) {
        std::vector<Fq> coeffs(m.dim() + 1, f.zero());
        for (const auto& [e, c] : ell.terms())
            for (int i = 0; i <= m.dim(); ++i)
                if (e[i] == 1) coeffs[i] = c;
        LinearSubspace intrinsic = hyperplane(f, coeffs);
        Mat ambient_rows;
        for (const auto& row : intrinsic.basis()) {
            std::vector<Fq> amb(n + 1, f.zero());
            for (int r = 0; r <= m.dim(); ++r)
                for (int j = 0; j <= n; ++j) amb[j] += row[r] * m.basis()[r][j];
            ambient_rows.push_back(std::move(amb));
        }
        components.emplace_back(f, n, std::move(ambient_rows));
    }

    std::optional<LinearSubspace> core = components[0];
    for (size_t i = 1; i < components.size() && core; ++i) core = intersect(*core, components[i]);
    if (!core || core->dim() != (n - 3) / 2) return report;

    long long expect = d * ipow(f.size(), (n - 1) / 2) + theta(f.size(), (n - 3) / 2);
    if (on != expect)
        throw std::logic_error("type S section count disagrees with the union formula");

    report.verdict = TypeSVerdict::Yes;
    report.components = std::move(components);
    report.core = std::move(core);
    return report;
}

LinearSubspace tangent_hyperplane(const Hypersurface& x, const ProjPoint& p) {
    if (p.ambient_dim() != x.ambient_dim() || &p.field() != &x.field())
        throw std::invalid_argument("point not in the hypersurface's space");
    if (!x.form().evaluate(p.coords()).is_zero())
        throw std::invalid_argument("point is not on the hypersurface");
    const Field& f = x.field();
    std::vector<Fq> grad;
    bool all_zero = true;
    for (int i = 0; i <= x.ambient_dim(); ++i) {
        Fq gi = x.form().partial(i).evaluate(p.coords());
        all_zero = all_zero && gi.is_zero();
        grad.push_back(gi);
    }
    if (all_zero) throw std::invalid_argument("point is singular, no tangent hyperplane");
    return hyperplane(f, grad);
}

std::optional<std::vector<HomoPoly>> linear_factors(const HomoPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial has no factorization");
    const Field& k = f.field();
    int m = f.nvars() - 1;
    HomoPoly g = f;
    std::vector<HomoPoly> out;
    for (long long r = 0; r < theta(k.size(), m) && g.degree() > 0; ++r) {
        ProjPoint dual = point_at(k, m, r);
        HomoPoly ell(k, m + 1, 1);
        for (int i = 0; i <= m; ++i) {
            if (dual[i].is_zero()) continue;
            std::vector<int> e(m + 1, 0);
            e[i] = 1;
            ell.add_term(e, dual[i]);
        }
        while (g.degree() > 0) {
            auto q = divide_by_linear(g, ell);
            if (!q) break;
            out.push_back(ell);
            g = *q;
        }
    }
    if (g.degree() > 0) return std::nullopt;
    return out;
}

std::optional<std::vector<LinearSubspace>> splits_into_hyperplanes(const Hypersurface& x) {
    auto factors = linear_factors(x.form());
    if (!factors) return std::nullopt;
    std::vector<LinearSubspace> out;
    for (const auto& ell : *factors) {
        std::vector<Fq> coeffs(x.ambient_dim() + 1, x.field().zero());
        for (const auto& [e, c] : ell.terms())
            for (int i = 0; i <= x.ambient_dim(); ++i)
                if (e[i] == 1) coeffs[i] = c;
        out.push_back(hyperplane(x.field(), coeffs));
    }
    return out;
}

long long gl_order(long long q, int n) {
    long long order = 1;
    for (int i = 0; i < n; ++i) order *= ipow(q, n) - ipow(q, i);
    return order;
}

void for_each_gl(const Field& f, int n, const std::function<bool(const Mat&)>& visit) {
    int q = f.size();
    std::vector<int> flat(n * n, 0);
    Mat m = make_matrix(f, n, n);
    for (;;) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = f.elem(flat[i * n + j]);
        if (rank_of(m) == n && !visit(m)) return;
        int pos = n * n - 1;
        while (pos >= 0 && flat[pos] == q - 1) flat[pos--] = 0;
        if (pos < 0) return;
        ++flat[pos];
    }
}

namespace {

// Quadrics transform by matrix congruence: with f = x^T U x (U upper
// triangular), f(Tx) = x^T (T^T U T) x, refolded to upper triangular form.
// Raw index arithmetic keeps the group sweep cheap.
struct QuadricOrbitScan {
    const Field& f;
    int n;
    std::vector<int> u_a, u_b;

    static std::vector<int> upper(const HomoPoly& p, int n) {
        std::vector<int> u(n * n, 0);
        for (const auto& [e, c] : p.terms()) {
            int i = -1, j = -1;
            for (int v = 0; v < n; ++v) {
                if (e[v] == 2) i = j = v;
                if (e[v] == 1) (i < 0 ? i : j) = v;
            }
            u[i * n + j] = c.index();
        }
        return u;
    }

    bool match() const {
        std::vector<int> t(n * n, 0);
        std::vector<int> work(n * n), fold(n * n);
        bool found = false;
        for (;;) {
            if (invertible(t)) {
                congruence(t, work, fold);
                if (scalar_equal(fold)) {
                    found = true;
                    break;
                }
            }
            int pos = n * n - 1;
            while (pos >= 0 && t[pos] == f.size() - 1) t[pos--] = 0;
            if (pos < 0) break;
            ++t[pos];
        }
        return found;
    }

    bool invertible(const std::vector<int>& t) const {
        std::vector<int> m = t;
        int rank = 0;
        for (int c = 0; c < n && rank < n; ++c) {
            int piv = -1;
            for (int r = rank; r < n; ++r)
                if (m[r * n + c] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return false;
            for (int j = 0; j < n; ++j) std::swap(m[rank * n + j], m[piv * n + j]);
            int inv = f.inv_i(m[rank * n + c]);
            for (int j = 0; j < n; ++j) m[rank * n + j] = f.mul_i(m[rank * n + j], inv);
            for (int r = rank + 1; r < n; ++r) {
                int factor = m[r * n + c];
                if (factor == 0) continue;
                for (int j = 0; j < n; ++j)
                    m[r * n + j] = f.sub_i(m[r * n + j], f.mul_i(factor, m[rank * n + j]));
            }
            ++rank;
        }
        return rank == n;
    }

    void congruence(const std::vector<int>& t, std::vector<int>& work,
                    std::vector<int>& fold) const {
        // work = U_a * T, fold = T^T * work, then fold to upper triangular
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int acc = 0;
                for (int k = 0; k < n; ++k) {
                    if (u_a[i * n + k] == 0) continue;
                    acc = f.add_i(acc, f.mul_i(u_a[i * n + k], t[k * n + j]));
                }
                work[i * n + j] = acc;
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int acc = 0;
                for (int k = 0; k < n; ++k) {
                    if (t[k * n + i] == 0) continue;
                    acc = f.add_i(acc, f.mul_i(t[k * n + i], work[k * n + j]));
                }
                fold[i * n + j] = acc;
            }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                fold[i * n + j] = f.add_i(fold[i * n + j], fold[j * n + i]);
                fold[j * n + i] = 0;
            }
    }

    bool scalar_equal(const std::vector<int>& fold) const {
        int c = 0;
        for (int i = 0; i < n * n; ++i) {
            if ((u_b[i] == 0) != (fold[i] == 0)) return false;
            if (u_b[i] != 0) {
                int ratio = f.div_i(fold[i], u_b[i]);
                if (c == 0)
                    c = ratio;
                else if (c != ratio)
                    return false;
            }
        }
        return c != 0;
    }
};

}  // namespace

bool orbit_equivalent(const Hypersurface& a, const Hypersurface& b, long long max_group) {
    if (&a.field() != &b.field()) throw std::invalid_argument("forms over different fields");
    if (a.ambient_dim() != b.ambient_dim() || a.degree() != b.degree()) return false;

    int n = a.ambient_dim() + 1;
    long long q = a.field().size();
    if (gl_order(q, n) > max_group)
        throw BudgetError("GL(" + std::to_string(n) + ", F_" + std::to_string(q) +
                          ") exceeds the group budget");

    // cheap invariants first
    if (count_points(a).n_points != count_points(b).n_points) return false;
    if (max_linear_dim(a, a.ambient_dim() - 1) != max_linear_dim(b, b.ambient_dim() - 1))
        return false;

    const Field& f = a.field();
    if (a.degree() == 2) {
        QuadricOrbitScan scan{f, n, QuadricOrbitScan::upper(a.form(), n),
                              QuadricOrbitScan::upper(b.form(), n)};
        return scan.match();
    }

    bool found = false;
    for_each_gl(f, n, [&](const Mat& t) {
        std::vector<HomoPoly> images;
        images.reserve(n);
        for (int i = 0; i < n; ++i) {
            HomoPoly lin(f, n, 1);
            for (int j = 0; j < n; ++j) {
                std::vector<int> e(n, 0);
                e[j] = 1;
                lin.add_term(e, t[i][j]);
            }
            images.push_back(std::move(lin));
        }
        HomoPoly moved = a.form().compose_linear(images);
        // compare up to a scalar
        const auto& [be, bc] = *b.form().terms().begin();
        auto it = moved.terms().find(be);
        if (it != moved.terms().end()) {
            Fq c = it->second / bc;
            if (moved == c * b.form()) {
                found = true;
                return false;
            }
        }
        return true;
    });
    return found;
}

}  // namespace hyperbound
