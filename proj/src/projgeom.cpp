#include "hyperbound/projgeom.hpp"

#include <algorithm>
#include <map>

namespace hyperbound {

long long theta(long long q, int m) {
    if (m < -1) throw std::invalid_argument("theta is defined for m >= -1");
    long long sum = 0, pw = 1;
    for (int v = 0; v <= m; ++v) {
        sum += pw;
        pw *= q;
    }
    return sum;
}

long long gaussian_binomial(long long q, int n, int k) {
    if (k < 0 || k > n) return 0;
    // Pascal recurrence [n k] = [n-1 k-1] + q^k [n-1 k]; exact, no division.
    std::vector<std::vector<long long>> t(n + 1, std::vector<long long>(k + 1, 0));
    for (int i = 0; i <= n; ++i) {
        t[i][0] = 1;
        for (int j = 1; j <= std::min(i, k); ++j) {
            t[i][j] = (j == i) ? 1 : t[i - 1][j - 1] + ipow(q, j) * t[i - 1][j];
        }
    }
    return t[n][k];
}

ProjPoint::ProjPoint(const Field& f, std::vector<Fq> coords) : f_(&f), c_(std::move(coords)) {
    if (c_.empty()) throw std::invalid_argument("point needs at least one coordinate");
    int lead = -1;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].field() != &f) throw std::invalid_argument("coordinate from wrong field");
        if (lead < 0 && !c_[i].is_zero()) lead = static_cast<int>(i);
    }
    if (lead < 0) throw std::invalid_argument("projective point cannot be zero");
    Fq inv = c_[lead].inverse();
    for (auto& x : c_) x *= inv;
}

std::string ProjPoint::to_string() const {
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ':';
        s += std::to_string(c_[i].index());
    }
    return s;
}

bool ProjPoint::operator<(const ProjPoint& b) const {
    if (c_.size() != b.c_.size()) return c_.size() < b.c_.size();
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i].index() != b.c_[i].index()) return c_[i].index() < b.c_[i].index();
    return false;
}

long long point_count_checked(const Field& f, int m, long long max_points) {
    long long n = theta(f.size(), m);
    if (n > max_points)
        throw BudgetError("point enumeration of size " + std::to_string(n) + " exceeds budget " +
                          std::to_string(max_points));
    return n;
}

ProjPoint point_at(const Field& f, int m, long long rank) {
    long long q = f.size();
    if (rank < 0 || rank >= theta(q, m)) throw std::invalid_argument("point rank out of range");
    // Pivot blocks in enumeration order: pivot m holds 1 point, pivot i holds
    // q^{m-i}, with theta(q, m-i-1) points before it.
    int pivot = m;
    while (rank >= theta(q, m - pivot)) --pivot;
    long long offset = rank - theta(q, m - pivot - 1);
    std::vector<Fq> c(m + 1, f.zero());
    c[pivot] = f.one();
    for (int j = m; j > pivot; --j) {
        c[j] = f.elem(static_cast<int>(offset % q));
        offset /= q;
    }
    return ProjPoint(f, std::move(c));
}

std::vector<ProjPoint> all_points(const Field& f, int m, long long max_points) {
    point_count_checked(f, m, max_points);
    std::vector<ProjPoint> out;
    out.reserve(theta(f.size(), m));
    for_each_point(f, m, [&](const std::vector<int>& idx) {
        std::vector<Fq> c;
        c.reserve(idx.size());
        for (int v : idx) c.push_back(f.elem(v));
        out.emplace_back(f, std::move(c));
    });
    return out;
}

LinearSubspace::LinearSubspace(const Field& f, int ambient_dim, Mat rows) : f_(&f), m_(ambient_dim) {
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != m_ + 1)
            throw std::invalid_argument("basis row has wrong length");
    int rank = rref(rows);
    if (rank == 0) throw std::invalid_argument("subspace must contain a point");
    rows.resize(rank, std::vector<Fq>(m_ + 1, f.zero()));
    basis_ = std::move(rows);
}

bool LinearSubspace::contains(const ProjPoint& p) const {
    if (p.ambient_dim() != m_) throw std::invalid_argument("ambient dimension mismatch");
    std::vector<Fq> v = p.coords();
    for (const auto& row : basis_) {
        int piv = -1;
        for (int j = 0; j <= m_; ++j)
            if (!row[j].is_zero()) {
                piv = j;
                break;
            }
        if (!v[piv].is_zero()) {
            Fq factor = v[piv];
            for (int j = 0; j <= m_; ++j) v[j] -= factor * row[j];
        }
    }
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

bool LinearSubspace::contains(const LinearSubspace& other) const {
    Mat stacked = basis_;
    stacked.insert(stacked.end(), other.basis_.begin(), other.basis_.end());
    return rank_of(std::move(stacked)) == dim() + 1;
}

ProjPoint LinearSubspace::point_at(long long rank) const {
    ProjPoint y = hyperbound::point_at(*f_, dim(), rank);
    std::vector<Fq> amb(m_ + 1, f_->zero());
    for (int r = 0; r <= dim(); ++r) {
        Fq c = y[r];
        if (c.is_zero()) continue;
        for (int j = 0; j <= m_; ++j) amb[j] += c * basis_[r][j];
    }
    return ProjPoint(*f_, std::move(amb));
}

std::vector<ProjPoint> LinearSubspace::points() const {
    std::vector<ProjPoint> out;
    long long n = point_count();
    out.reserve(n);
    for (long long r = 0; r < n; ++r) out.push_back(point_at(r));
    return out;
}

std::string LinearSubspace::to_string() const {
    std::string s;
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (i) s += ';';
        for (int j = 0; j <= m_; ++j) {
            if (j) s += ':';
            s += std::to_string(basis_[i][j].index());
        }
    }
    return s;
}

bool LinearSubspace::operator<(const LinearSubspace& b) const {
    if (basis_.size() != b.basis_.size()) return basis_.size() < b.basis_.size();
    for (size_t i = 0; i < basis_.size(); ++i)
        for (int j = 0; j <= m_; ++j) {
            int x = basis_[i][j].index(), y = b.basis_[i][j].index();
            if (x != y) return x < y;
        }
    return false;
}

LinearSubspace whole_space(const Field& f, int m) {
    return LinearSubspace(f, m, identity_matrix(f, m + 1));
}

LinearSubspace subspace_of_point(const ProjPoint& p) {
    return LinearSubspace(p.field(), p.ambient_dim(), Mat{p.coords()});
}

LinearSubspace hyperplane(const Field& f, const std::vector<Fq>& form) {
    Mat rows{form};
    int m = static_cast<int>(form.size()) - 1;
    Mat ker = kernel_basis(f, std::move(rows), m + 1);
    return LinearSubspace(f, m, std::move(ker));
}

LinearSubspace span(const LinearSubspace& a, const LinearSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || &a.field() != &b.field())
        throw std::invalid_argument("span needs a common ambient space");
    Mat rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return LinearSubspace(a.field(), a.ambient_dim(), std::move(rows));
}

LinearSubspace span(const LinearSubspace& a, const ProjPoint& p) {
    Mat rows = a.basis();
    rows.push_back(p.coords());
    return LinearSubspace(a.field(), a.ambient_dim(), std::move(rows));
}

std::optional<LinearSubspace> intersect(const LinearSubspace& a, const LinearSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || &a.field() != &b.field())
        throw std::invalid_argument("intersect needs a common ambient space");
    const Field& f = a.field();
    int cols = a.ambient_dim() + 1;
    Mat ann_a = kernel_basis(f, a.basis(), cols);
    Mat ann_b = kernel_basis(f, b.basis(), cols);
    ann_a.insert(ann_a.end(), ann_b.begin(), ann_b.end());
    Mat common = kernel_basis(f, std::move(ann_a), cols);
    if (common.empty()) return std::nullopt;
    return LinearSubspace(f, a.ambient_dim(), std::move(common));
}

LinearSubspace embed_subspace(const LinearSubspace& s, const Embedding& emb) {
    if (&emb.from() != &s.field()) throw std::invalid_argument("embedding domain mismatch");
    Mat rows;
    rows.reserve(s.basis().size());
    for (const auto& row : s.basis()) {
        std::vector<Fq> r;
        r.reserve(row.size());
        for (Fq x : row) r.push_back(emb(x));
        rows.push_back(std::move(r));
    }
    return LinearSubspace(emb.to(), s.ambient_dim(), std::move(rows));
}

SubspaceEnumerator::SubspaceEnumerator(const Field& f, int k, int m) : f_(&f), k_(k), m_(m) {
    if (k < 0 || k > m) throw std::invalid_argument("subspace dimension out of range");
    reset();
}

void SubspaceEnumerator::reset() {
    pivots_.resize(k_ + 1);
    for (int i = 0; i <= k_; ++i) pivots_[i] = i;
    recompute_free();
    done_ = false;
    fresh_ = true;
}

void SubspaceEnumerator::recompute_free() {
    free_pos_.clear();
    std::vector<bool> is_pivot(m_ + 1, false);
    for (int c : pivots_) is_pivot[c] = true;
    for (int r = 0; r <= k_; ++r)
        for (int c = pivots_[r] + 1; c <= m_; ++c)
            if (!is_pivot[c]) free_pos_.emplace_back(r, c);
    free_val_.assign(free_pos_.size(), 0);
}

bool SubspaceEnumerator::advance_pivots() {
    // next (k+1)-combination of {0..m} in lexicographic order
    int i = k_;
    while (i >= 0 && pivots_[i] == m_ - (k_ - i)) --i;
    if (i < 0) return false;
    ++pivots_[i];
    for (int j = i + 1; j <= k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
    recompute_free();
    return true;
}

std::optional<LinearSubspace> SubspaceEnumerator::next() {
    if (done_) return std::nullopt;
    if (!fresh_) {
        // odometer over free entries, last position fastest
        int pos = static_cast<int>(free_val_.size()) - 1;
        while (pos >= 0 && free_val_[pos] == f_->size() - 1) free_val_[pos--] = 0;
        if (pos >= 0) {
            ++free_val_[pos];
        } else if (!advance_pivots()) {
            done_ = true;
            return std::nullopt;
        }
    }
    fresh_ = false;
    Mat rows = make_matrix(*f_, k_ + 1, m_ + 1);
    for (int r = 0; r <= k_; ++r) rows[r][pivots_[r]] = f_->one();
    for (size_t i = 0; i < free_pos_.size(); ++i)
        rows[free_pos_[i].first][free_pos_[i].second] = f_->elem(free_val_[i]);
    return LinearSubspace(*f_, m_, std::move(rows));
}

std::vector<LinearSubspace> all_subspaces(const Field& f, int k, int m, long long max_count) {
    SubspaceEnumerator en(f, k, m);
    if (en.count() > max_count)
        throw BudgetError("subspace enumeration of size " + std::to_string(en.count()) +
                          " exceeds budget " + std::to_string(max_count));
    std::vector<LinearSubspace> out;
    out.reserve(en.count());
    while (auto s = en.next()) out.push_back(std::move(*s));
    return out;
}

}  // namespace hyperbound
