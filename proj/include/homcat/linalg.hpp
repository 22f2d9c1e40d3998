#pragma once

#include "homcat/scalar.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace homcat {

using Index = std::uint32_t;

// Sparse vector: entries sorted by index, no explicit zeros.
using Vec = std::vector<std::pair<Index, Scalar>>;

Vec basis_vec(Index i, const Scalar& c = 1);
Vec scaled(const Vec& v, const Scalar& c);
Vec add(const Vec& a, const Vec& b, const Scalar& cb = 1);
Scalar coeff(const Vec& v, Index i);
// Sorts by index, merges duplicates, drops zeros.
Vec normalized(Vec v);
// e_i (x) e_j -> i * n2 + j
Vec outer(const Vec& a, const Vec& b, std::size_t n2);

// Dense accumulator for building sparse vectors of a known length.
class Acc {
public:
    // Long vectors switch to append-then-merge so construction stays cheap.
    explicit Acc(std::size_t n) : n_(n), dense_(n <= kDenseLimit) {
        if (dense_) {
            vals_.resize(n);
            seen_.assign(n, 0);
        }
    }
    void add(Index i, const Scalar& c);
    void add(const Vec& v, const Scalar& c = 1);
    // a (x) b with stride n2, times c
    void add_outer(const Vec& a, const Vec& b, std::size_t n2, const Scalar& c = 1);
    Vec take();
    std::size_t size() const { return n_; }

private:
    static constexpr std::size_t kDenseLimit = 4096;
    std::size_t n_;
    bool dense_;
    Vec pending_;
    std::vector<Scalar> vals_;
    std::vector<char> seen_;
    std::vector<Index> touched_;
};

// Dense row-major matrix, used at the I/O boundary and in tests.
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Scalar> entries;
    Scalar& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
    bool operator==(const Matrix&) const = default;
};

// Linear map k^dom -> k^cod stored by columns (column j = image of e_j).
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(std::size_t dom, std::size_t cod) : dom_(dom), cod_(cod), cols_(dom) {}
    LinearMap(std::size_t dom, std::size_t cod, std::vector<Vec> cols);

    static LinearMap identity(std::size_t n);
    static LinearMap zero(std::size_t dom, std::size_t cod) { return {dom, cod}; }
    static LinearMap diagonal(const std::vector<Scalar>& d);
    static LinearMap from_matrix(const Matrix& m);
    // rows given as nested initializer data (row-major)
    static LinearMap from_rows(const std::vector<std::vector<Scalar>>& rows);

    std::size_t dom() const { return dom_; }
    std::size_t cod() const { return cod_; }
    const Vec& col(Index j) const { return cols_[j]; }
    void set_col(Index j, Vec v);
    Scalar at(Index i, Index j) const { return coeff(cols_[j], i); }

    Vec apply(const Vec& v) const;
    Vec operator()(const Vec& v) const { return apply(v); }
    LinearMap operator*(const LinearMap& g) const;  // composition this o g
    LinearMap operator+(const LinearMap& g) const;
    LinearMap operator-(const LinearMap& g) const;
    LinearMap scale(const Scalar& c) const;
    LinearMap kron(const LinearMap& g) const;  // index of e_i (x) e_j = i * g.dim + j
    LinearMap transpose() const;
    LinearMap pow(int k) const;  // negative k inverts first
    LinearMap inverse() const;   // throws SingularMap
    std::size_t rank() const;
    bool is_zero() const;
    bool is_identity() const;
    std::size_t nnz() const;
    Matrix to_matrix() const;
    bool operator==(const LinearMap& o) const;
    bool operator!=(const LinearMap& o) const { return !(*this == o); }

private:
    std::size_t dom_ = 0, cod_ = 0;
    std::vector<Vec> cols_;
};

LinearMap tensor_map(const LinearMap& f, const LinearMap& g);
LinearMap invert(const LinearMap& f);

// Row-reduced echelon basis; equality of subspaces is equality of bases.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    Subspace(std::size_t ambient, const std::vector<Vec>& spanning);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<Index>& pivots() const { return pivots_; }
    bool insert(Vec v);  // false when v already lies in the span
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const { return reduce(v).empty(); }
    // Coordinates of v in basis(); throws NotInSubspace.
    Vec coords(const Vec& v) const;
    LinearMap inclusion() const;
    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> rows_;      // sorted by pivot
    std::vector<Index> pivots_;  // first index of each row
};

Subspace kernel(const LinearMap& f);
Subspace image(const LinearMap& f);
Subspace equalizer(const LinearMap& f, const LinearMap& g);

// Quotient of k^ambient by a subspace K. Coordinates of the quotient are the
// non-pivot indices of K's echelon basis, in increasing order.
struct Quotient {
    Subspace relations;
    std::vector<Index> free;         // representatives
    std::vector<std::int64_t> slot;  // ambient index -> position in free or -1
    LinearMap projection;            // ambient -> quotient
    LinearMap section;               // quotient -> ambient, projection o section = id
    std::size_t dim() const { return free.size(); }
    Vec project(const Vec& v) const;
};

Quotient quotient(Subspace relations);
Quotient coequalizer(const LinearMap& f, const LinearMap& g);

// Solves sum_j rows[r][j] x_j = rhs[r]. Free unknowns are set to zero.
struct SolveResult {
    std::vector<Scalar> x;
    std::size_t nullity = 0;
};
std::optional<SolveResult> solve(const std::vector<Vec>& rows, const std::vector<Scalar>& rhs, std::size_t unknowns);

}  // namespace homcat
