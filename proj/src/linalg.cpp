#include "homcat/linalg.hpp"

#include "homcat/parallel.hpp"

#include <algorithm>
#include <map>

namespace homcat {

Vec basis_vec(Index i, const Scalar& c) {
    if (c.is_zero()) return {};
    return {{i, c}};
}

Vec scaled(const Vec& v, const Scalar& c) {
    if (c.is_zero()) return {};
    Vec r;
    r.reserve(v.size());
    for (const auto& [i, x] : v) r.emplace_back(i, x * c);
    return r;
}

Vec add(const Vec& a, const Vec& b, const Scalar& cb) {
    Vec r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Scalar x = b[j].second * cb;
            if (!x.is_zero()) r.emplace_back(b[j].first, std::move(x));
            ++j;
        } else {
            Scalar x = a[i].second + b[j].second * cb;
            if (!x.is_zero()) r.emplace_back(a[i].first, std::move(x));
            ++i, ++j;
        }
    }
    return r;
}

Scalar coeff(const Vec& v, Index i) {
    auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, Index k) { return e.first < k; });
    if (it != v.end() && it->first == i) return it->second;
    return Scalar(0);
}

Vec normalized(Vec v) {
    if (std::is_sorted(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; })) {
        bool ok = true;
        for (std::size_t i = 0; i < v.size() && ok; ++i)
            ok = !v[i].second.is_zero() && (i == 0 || v[i - 1].first != v[i].first);
        if (ok) return v;
    }
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Vec r;
    for (auto& e : v) {
        if (!r.empty() && r.back().first == e.first) r.back().second += e.second;
        else r.push_back(std::move(e));
        if (r.back().second.is_zero()) r.pop_back();
    }
    return r;
}

Vec outer(const Vec& a, const Vec& b, std::size_t n2) {
    Vec r;
    r.reserve(a.size() * b.size());
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) r.emplace_back(static_cast<Index>(i * n2 + j), x * y);
    return r;  // already sorted since j < n2
}

void Acc::add(Index i, const Scalar& c) {
    if (c.is_zero()) return;
    if (!dense_) {
        pending_.emplace_back(i, c);
        return;
    }
    if (!seen_[i]) {
        seen_[i] = 1;
        touched_.push_back(i);
        vals_[i] = c;
    } else {
        vals_[i] += c;
    }
}

void Acc::add(const Vec& v, const Scalar& c) {
    if (c.is_zero()) return;
    if (c.is_one()) {
        for (const auto& [i, x] : v) add(i, x);
    } else {
        for (const auto& [i, x] : v) add(i, x * c);
    }
}

void Acc::add_outer(const Vec& a, const Vec& b, std::size_t n2, const Scalar& c) {
    for (const auto& [i, x] : a) {
        Scalar xc = x * c;
        for (const auto& [j, y] : b) add(static_cast<Index>(i * n2 + j), xc * y);
    }
}

Vec Acc::take() {
    if (!dense_) {
        Vec r = normalized(std::move(pending_));
        pending_.clear();
        return r;
    }
    std::sort(touched_.begin(), touched_.end());
    Vec r;
    r.reserve(touched_.size());
    for (Index i : touched_) {
        if (!vals_[i].is_zero()) r.emplace_back(i, vals_[i]);
        vals_[i] = Scalar(0);
        seen_[i] = 0;
    }
    touched_.clear();
    return r;
}

LinearMap::LinearMap(std::size_t dom, std::size_t cod, std::vector<Vec> cols)
    : dom_(dom), cod_(cod), cols_(std::move(cols)) {
    if (cols_.size() != dom_) throw Error("DimensionMismatch", "column count differs from domain");
    for (auto& c : cols_) c = normalized(std::move(c));
    for (const auto& c : cols_)
        if (!c.empty() && c.back().first >= cod_) throw Error("DimensionMismatch", "entry outside codomain");
}

void LinearMap::set_col(Index j, Vec v) {
    v = normalized(std::move(v));
    if (j >= dom_ || (!v.empty() && v.back().first >= cod_)) throw Error("DimensionMismatch", "set_col");
    cols_[j] = std::move(v);
}

LinearMap LinearMap::identity(std::size_t n) {
    LinearMap m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.cols_[i] = basis_vec(static_cast<Index>(i));
    return m;
}

LinearMap LinearMap::diagonal(const std::vector<Scalar>& d) {
    LinearMap m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.cols_[i] = basis_vec(static_cast<Index>(i), d[i]);
    return m;
}

LinearMap LinearMap::from_matrix(const Matrix& mat) {
    LinearMap m(mat.cols, mat.rows);
    for (std::size_t j = 0; j < mat.cols; ++j)
        for (std::size_t i = 0; i < mat.rows; ++i)
            if (!mat.at(i, j).is_zero()) m.cols_[j].emplace_back(static_cast<Index>(i), mat.at(i, j));
    return m;
}

LinearMap LinearMap::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    Matrix mat;
    mat.rows = rows.size();
    mat.cols = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows) {
        if (r.size() != mat.cols) throw Error("DimensionMismatch", "ragged rows");
        mat.entries.insert(mat.entries.end(), r.begin(), r.end());
    }
    return from_matrix(mat);
}

Vec LinearMap::apply(const Vec& v) const {
    if (v.size() == 1) {
        if (v[0].first >= dom_) throw Error("DimensionMismatch", "vector outside domain");
        return scaled(cols_[v[0].first], v[0].second);
    }
    Acc acc(cod_);
    for (const auto& [j, x] : v) {
        if (j >= dom_) throw Error("DimensionMismatch", "vector outside domain");
        acc.add(cols_[j], x);
    }
    return acc.take();
}

LinearMap LinearMap::operator*(const LinearMap& g) const {
    if (g.cod_ != dom_) throw Error("DimensionMismatch", "composition");
    LinearMap r(g.dom_, cod_);
    auto work = [&](std::size_t j) { r.cols_[j] = apply(g.cols_[j]); };
    if (g.dom_ * (g.nnz() / (g.dom_ ? g.dom_ : 1) + 1) > 20000) parallel_for(g.dom_, work);
    else
        for (std::size_t j = 0; j < g.dom_; ++j) work(j);
    return r;
}

LinearMap LinearMap::operator+(const LinearMap& g) const {
    if (g.dom_ != dom_ || g.cod_ != cod_) throw Error("DimensionMismatch", "sum");
    LinearMap r(dom_, cod_);
    for (std::size_t j = 0; j < dom_; ++j) r.cols_[j] = add(cols_[j], g.cols_[j]);
    return r;
}

LinearMap LinearMap::operator-(const LinearMap& g) const {
    if (g.dom_ != dom_ || g.cod_ != cod_) throw Error("DimensionMismatch", "difference");
    LinearMap r(dom_, cod_);
    for (std::size_t j = 0; j < dom_; ++j) r.cols_[j] = add(cols_[j], g.cols_[j], Scalar(-1));
    return r;
}

LinearMap LinearMap::scale(const Scalar& c) const {
    LinearMap r(dom_, cod_);
    for (std::size_t j = 0; j < dom_; ++j) r.cols_[j] = scaled(cols_[j], c);
    return r;
}

LinearMap LinearMap::kron(const LinearMap& g) const {
    LinearMap r(dom_ * g.dom_, cod_ * g.cod_);
    for (std::size_t i = 0; i < dom_; ++i)
        for (std::size_t j = 0; j < g.dom_; ++j) r.cols_[i * g.dom_ + j] = outer(cols_[i], g.cols_[j], g.cod_);
    return r;
}

LinearMap LinearMap::transpose() const {
    std::vector<Vec> rows(cod_);
    for (std::size_t j = 0; j < dom_; ++j)
        for (const auto& [i, x] : cols_[j]) rows[i].emplace_back(static_cast<Index>(j), x);
    return LinearMap(cod_, dom_, std::move(rows));
}

namespace {

// Echelon elimination of a list of vectors with combination tracking.
// table maps pivot -> (normalized vector, combination).
struct Eliminator {
    std::map<Index, std::pair<Vec, Vec>> table;

    // Returns the reduced vector (empty if dependent) and its combination.
    std::pair<Vec, Vec> push(Vec v, Vec comb, bool keep) {
        while (!v.empty()) {
            const Index p = v.front().first;
            auto it = table.find(p);
            if (it == table.end()) {
                Scalar c = v.front().second.inv();
                v = scaled(v, c);
                comb = scaled(comb, c);
                if (keep) table.emplace(p, std::make_pair(v, comb));
                return {v, comb};
            }
            const Scalar c = v.front().second;
            v = add(v, it->second.first, -c);
            comb = add(comb, it->second.second, -c);
        }
        return {{}, comb};
    }
};

}  // namespace

std::size_t LinearMap::rank() const {
    Eliminator el;
    std::size_t r = 0;
    for (std::size_t j = 0; j < dom_; ++j)
        if (!el.push(cols_[j], {}, true).first.empty()) ++r;
    return r;
}

LinearMap LinearMap::inverse() const {
    if (dom_ != cod_) throw Error("SingularMap", "non-square map");
    Eliminator el;
    for (std::size_t j = 0; j < dom_; ++j) {
        auto [v, c] = el.push(cols_[j], basis_vec(static_cast<Index>(j)), true);
        if (v.empty()) throw Error("SingularMap", "column " + std::to_string(j) + " is dependent");
    }
    // back substitution: make each pivot image a unit vector
    std::vector<Vec> img(dom_), comb(dom_);
    for (auto& [p, vc] : el.table) img[p] = vc.first, comb[p] = vc.second;
    for (std::size_t pp = dom_; pp-- > 0;) {
        Vec v = img[pp], c = comb[pp];
        for (const auto& [q, x] : img[pp]) {
            if (q == pp) continue;
            v = add(v, img[q], -x);
            c = add(c, comb[q], -x);
        }
        img[pp] = std::move(v);
        comb[pp] = std::move(c);
    }
    return LinearMap(dom_, dom_, std::move(comb));
}

LinearMap LinearMap::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    LinearMap r = identity(dom_);
    for (int i = 0; i < k; ++i) r = *this * r;
    return r;
}

bool LinearMap::is_zero() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const Vec& c) { return c.empty(); });
}

bool LinearMap::is_identity() const { return dom_ == cod_ && *this == identity(dom_); }

std::size_t LinearMap::nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

Matrix LinearMap::to_matrix() const {
    Matrix m;
    m.rows = cod_;
    m.cols = dom_;
    m.entries.assign(cod_ * dom_, Scalar(0));
    for (std::size_t j = 0; j < dom_; ++j)
        for (const auto& [i, x] : cols_[j]) m.at(i, j) = x;
    return m;
}

bool LinearMap::operator==(const LinearMap& o) const {
    return dom_ == o.dom_ && cod_ == o.cod_ && cols_ == o.cols_;
}

LinearMap tensor_map(const LinearMap& f, const LinearMap& g) { return f.kron(g); }
LinearMap invert(const LinearMap& f) { return f.inverse(); }

Subspace::Subspace(std::size_t ambient, const std::vector<Vec>& spanning) : ambient_(ambient) {
    for (const auto& v : spanning) insert(v);
}

Vec Subspace::reduce(const Vec& v) const {
    Vec r = v;
    // rows are fully reduced, so one pass over the pivots present in v suffices
    for (const auto& [i, x] : v) {
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), i);
        if (it != pivots_.end() && *it == i) r = add(r, rows_[it - pivots_.begin()], -x);
    }
    return r;
}

bool Subspace::insert(Vec v) {
    for (const auto& e : v)
        if (e.first >= ambient_) throw Error("DimensionMismatch", "vector outside ambient space");
    v = reduce(v);
    if (v.empty()) return false;
    v = scaled(v, v.front().second.inv());
    const Index p = v.front().first;
    for (auto& row : rows_) {
        Scalar c = coeff(row, p);
        if (!c.is_zero()) row = add(row, v, -c);
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    const auto pos = it - pivots_.begin();
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

Vec Subspace::coords(const Vec& v) const {
    Vec c;
    Vec back;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        Scalar x = coeff(v, pivots_[k]);
        if (!x.is_zero()) {
            c.emplace_back(static_cast<Index>(k), x);
            back = add(back, rows_[k], x);
        }
    }
    if (back != v) throw Error("NotInSubspace", "vector is not in the subspace");
    return c;
}

LinearMap Subspace::inclusion() const { return LinearMap(dim(), ambient_, rows_); }

Subspace kernel(const LinearMap& f) {
    Eliminator el;
    std::vector<Vec> ker;
    for (std::size_t j = 0; j < f.dom(); ++j) {
        auto [v, c] = el.push(f.col(static_cast<Index>(j)), basis_vec(static_cast<Index>(j)), true);
        if (v.empty()) ker.push_back(std::move(c));
    }
    return Subspace(f.dom(), ker);
}

Subspace image(const LinearMap& f) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < f.dom(); ++j) cols.push_back(f.col(static_cast<Index>(j)));
    return Subspace(f.cod(), cols);
}

Subspace equalizer(const LinearMap& f, const LinearMap& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod()) throw Error("DimensionMismatch", "equalizer");
    return kernel(f - g);
}

Vec Quotient::project(const Vec& v) const {
    Vec r;
    for (const auto& [i, x] : relations.reduce(v)) r.emplace_back(static_cast<Index>(slot[i]), x);
    return r;
}

Quotient quotient(Subspace relations) {
    Quotient q;
    const std::size_t n = relations.ambient_dim();
    q.slot.assign(n, -1);
    const auto& piv = relations.pivots();
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (k < piv.size() && piv[k] == i) {
            ++k;
            continue;
        }
        q.slot[i] = static_cast<std::int64_t>(q.free.size());
        q.free.push_back(static_cast<Index>(i));
    }
    q.relations = std::move(relations);
    q.projection = LinearMap(n, q.free.size());
    for (std::size_t i = 0; i < n; ++i) q.projection.set_col(static_cast<Index>(i), q.project(basis_vec(static_cast<Index>(i))));
    q.section = LinearMap(q.free.size(), n);
    for (std::size_t j = 0; j < q.free.size(); ++j) q.section.set_col(static_cast<Index>(j), basis_vec(q.free[j]));
    return q;
}

Quotient coequalizer(const LinearMap& f, const LinearMap& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod()) throw Error("DimensionMismatch", "coequalizer");
    return quotient(image(f - g));
}

std::optional<SolveResult> solve(const std::vector<Vec>& rows, const std::vector<Scalar>& rhs, std::size_t unknowns) {
    if (rows.size() != rhs.size()) throw Error("DimensionMismatch", "solve");
    Eliminator el;
    const Index rhs_col = static_cast<Index>(unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Vec aug = rows[r];
        if (!rhs[r].is_zero()) aug.emplace_back(rhs_col, rhs[r]);
        auto [v, c] = el.push(std::move(aug), {}, true);
        if (!v.empty() && v.front().first == rhs_col) return std::nullopt;
    }
    SolveResult res;
    res.x.assign(unknowns, Scalar(0));
    std::size_t pivots = 0;
    for (auto it = el.table.rbegin(); it != el.table.rend(); ++it) {
        const Index p = it->first;
        if (p == rhs_col) continue;
        ++pivots;
        Scalar val(0);
        for (const auto& [j, a] : it->second.first) {
            if (j == p) continue;
            if (j == rhs_col) val += a;
            else val -= a * res.x[j];
        }
        res.x[p] = val;
    }
    res.nullity = unknowns - pivots;
    return res;
}

}  // namespace homcat
