#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "morq/fields.hpp"

namespace morq {

// Dense exact matrix over a field context F (RationalField or PrimeField).
// Results of rank/rref/kernel_basis are deterministic bit for bit.
template <class F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix() : f_(default_field()), rows_(0), cols_(0) {}
    Matrix(F f, int rows, int cols)
        : f_(f), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * cols, f.zero()) {
        assert(rows >= 0 && cols >= 0);
    }

    static Matrix identity(F f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const F& field() const { return f_; }

    Elem& at(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return a_[static_cast<size_t>(i) * cols_ + j];
    }
    const Elem& at(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return a_[static_cast<size_t>(i) * cols_ + j];
    }

    bool is_zero() const {
        for (const Elem& e : a_)
            if (!f_.is_zero(e)) return false;
        return true;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
        for (size_t i = 0; i < x.a_.size(); ++i)
            if (!x.f_.eq(x.a_[i], y.a_[i])) return false;
        return true;
    }

    Matrix transposed() const {
        Matrix t(f_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix r(f_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Elem& x = at(i, k);
                if (f_.is_zero(x)) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.at(i, j) = f_.add(r.at(i, j), f_.mul(x, o.at(k, j)));
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(f_, rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.add(a_[i], o.a_[i]);
        return r;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    Matrix hstack(const Matrix& o) const {
        assert(rows_ == o.rows_);
        Matrix r(f_, rows_, cols_ + o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }

    Matrix vstack(const Matrix& o) const {
        assert(cols_ == o.cols_);
        Matrix r(f_, rows_ + o.rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int i = 0; i < o.rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }

    struct Echelon {
        Matrix mat;              // reduced row echelon form
        std::vector<int> pivots; // pivot column per nonzero row
    };

    // Gauss-Jordan; exact over both scalar types.
    Echelon rref() const {
        Matrix m = *this;
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int pr = -1;
            for (int i = row; i < rows_; ++i)
                if (!f_.is_zero(m.at(i, col))) { pr = i; break; }
            if (pr < 0) continue;
            m.swap_rows(row, pr);
            Elem piv_inv = f_.inv(m.at(row, col));
            for (int j = col; j < cols_; ++j) m.at(row, j) = f_.mul(m.at(row, j), piv_inv);
            for (int i = 0; i < rows_; ++i) {
                if (i == row) continue;
                Elem c = m.at(i, col);
                if (f_.is_zero(c)) continue;
                for (int j = col; j < cols_; ++j)
                    m.at(i, j) = f_.sub(m.at(i, j), f_.mul(c, m.at(row, j)));
            }
            pivots.push_back(col);
            ++row;
        }
        return Echelon{std::move(m), std::move(pivots)};
    }

    int rank() const;

    // Basis of the right null space, one vector per free column, in free-column
    // order; vector for free column j has entry 1 at j and the negated rref
    // entries at the pivot positions. This canonical form is unique.
    std::vector<std::vector<Elem>> kernel_basis() const {
        Echelon e = rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : e.pivots) is_pivot[c] = true;
        std::vector<std::vector<Elem>> basis;
        for (int j = 0; j < cols_; ++j) {
            if (is_pivot[j]) continue;
            std::vector<Elem> v(cols_, f_.zero());
            v[j] = f_.one();
            for (size_t i = 0; i < e.pivots.size(); ++i)
                v[e.pivots[i]] = f_.neg(e.mat.at(static_cast<int>(i), j));
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    static F default_field() {
        if constexpr (F::is_prime_field) return F(2);
        else return F{};
    }

    F f_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

// Fraction-free rank of an integer matrix (Bareiss elimination); intermediate
// entries stay within determinant bounds.
int bareiss_rank(std::vector<std::vector<Integer>> m);

template <class F>
inline int generic_rank(const Matrix<F>& m) {
    return static_cast<int>(m.rref().pivots.size());
}

template <class F>
int Matrix<F>::rank() const {
    if constexpr (F::is_prime_field) {
        return generic_rank(*this);
    } else {
        // scale rows to integers, then eliminate fraction-free
        std::vector<std::vector<Integer>> zm(rows_);
        for (int i = 0; i < rows_; ++i) {
            Integer l(1);
            for (int j = 0; j < cols_; ++j)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), at(i, j).den().get_mpz_t());
            zm[i].resize(cols_);
            for (int j = 0; j < cols_; ++j)
                zm[i][j] = at(i, j).num() * (l / at(i, j).den());
        }
        return bareiss_rank(std::move(zm));
    }
}

// Incremental echelon structure: insert rows one at a time, tracking rank.
template <class F>
class RankAccumulator {
public:
    using Elem = typename F::Elem;

    RankAccumulator(F f, int cols) : f_(f), cols_(cols) {}

    // Reduces `row` against the stored echelon rows; keeps it if independent.
    // Returns true when the rank grew.
    bool insert(std::vector<Elem> row) {
        assert(static_cast<int>(row.size()) == cols_);
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Elem& lead = row[pivots_[r]];
            if (f_.is_zero(lead)) continue;
            Elem c = f_.mul(lead, inv_pivots_[r]);
            for (int j = pivots_[r]; j < cols_; ++j)
                row[j] = f_.sub(row[j], f_.mul(c, rows_[r][j]));
        }
        int pivot = -1;
        for (int j = 0; j < cols_; ++j)
            if (!f_.is_zero(row[j])) { pivot = j; break; }
        if (pivot < 0) return false;
        inv_pivots_.push_back(f_.inv(row[pivot]));
        pivots_.push_back(pivot);
        rows_.push_back(std::move(row));
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    bool full() const { return rank() == cols_; }

    // Row-span basis in row echelon form (not reduced), pivot order as inserted.
    const std::vector<std::vector<Elem>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Membership test: does `row` lie in the current span?
    bool contains(std::vector<Elem> row) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Elem& lead = row[pivots_[r]];
            if (f_.is_zero(lead)) continue;
            Elem c = f_.mul(lead, inv_pivots_[r]);
            for (int j = pivots_[r]; j < cols_; ++j)
                row[j] = f_.sub(row[j], f_.mul(c, rows_[r][j]));
        }
        for (const Elem& e : row)
            if (!f_.is_zero(e)) return false;
        return true;
    }

private:
    F f_;
    int cols_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<int> pivots_;
    std::vector<Elem> inv_pivots_;
};

// Bit-packed echelon accumulator over F_2, up to 64 columns. Hot path of the
// finite-field constant sweeps.
class BitRankAcc {
public:
    explicit BitRankAcc(int cols) : cols_(cols) { assert(cols <= 64); }

    bool insert(uint64_t row) {
        for (size_t r = 0; r < rows_.size(); ++r)
            if (row & (uint64_t(1) << pivots_[r])) row ^= rows_[r];
        if (!row) return false;
        int pivot = __builtin_ctzll(row);
        rows_.push_back(row);
        pivots_.push_back(pivot);
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    void clear() { rows_.clear(); pivots_.clear(); }

private:
    int cols_;
    std::vector<uint64_t> rows_;
    std::vector<int> pivots_;
};

} // namespace morq
