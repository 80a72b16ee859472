#pragma once

#include <vector>

#include "morq/matrix.hpp"
#include "morq/monomial.hpp"

namespace morq {

// Homogeneous form: coefficient vector over the shared lex monomial basis.
// The zero form is an explicit all-zero vector, never a missing entry.
template <class F>
struct HomForm {
    using Elem = typename F::Elem;

    F field;
    const MonomialBasis* basis = nullptr;
    std::vector<Elem> coeffs;

    HomForm(F f, int num_vars, int degree)
        : field(f), basis(&MonomialBasis::get(num_vars, degree)),
          coeffs(basis->size(), f.zero()) {}

    static HomForm monomial(F f, const Exponents& e, Elem c) {
        int deg = 0;
        for (int x : e) deg += x;
        HomForm h(f, static_cast<int>(e.size()), deg);
        int idx = h.basis->index_of(e);
        assert(idx >= 0);
        h.coeffs[idx] = c;
        return h;
    }
    static HomForm variable(F f, int num_vars, int var) {
        Exponents e(num_vars, 0);
        e[var] = 1;
        return monomial(f, e, f.one());
    }

    int num_vars() const { return basis->num_vars(); }
    int degree() const { return basis->degree(); }

    bool is_zero() const {
        for (const Elem& c : coeffs)
            if (!field.is_zero(c)) return false;
        return true;
    }

    HomForm& operator+=(const HomForm& o) {
        assert(basis == o.basis);
        for (size_t i = 0; i < coeffs.size(); ++i)
            coeffs[i] = field.add(coeffs[i], o.coeffs[i]);
        return *this;
    }
    friend HomForm operator+(HomForm a, const HomForm& b) { a += b; return a; }

    HomForm operator-() const {
        HomForm r = *this;
        for (Elem& c : r.coeffs) c = field.neg(c);
        return r;
    }
    friend HomForm operator-(HomForm a, const HomForm& b) { return a + (-b); }

    HomForm scaled(const Elem& c) const {
        HomForm r = *this;
        for (Elem& x : r.coeffs) x = field.mul(x, c);
        return r;
    }

    friend bool operator==(const HomForm& a, const HomForm& b) {
        if (a.basis != b.basis) return false;
        for (size_t i = 0; i < a.coeffs.size(); ++i)
            if (!a.field.eq(a.coeffs[i], b.coeffs[i])) return false;
        return true;
    }

    // Exact product, expanded in the lex basis of the sum degree.
    friend HomForm operator*(const HomForm& a, const HomForm& b) {
        assert(a.num_vars() == b.num_vars());
        HomForm r(a.field, a.num_vars(), a.degree() + b.degree());
        Exponents e(a.num_vars());
        for (int i = 0; i < a.basis->size(); ++i) {
            if (a.field.is_zero(a.coeffs[i])) continue;
            const Exponents& ea = a.basis->monomial(i);
            for (int j = 0; j < b.basis->size(); ++j) {
                if (b.field.is_zero(b.coeffs[j])) continue;
                const Exponents& eb = b.basis->monomial(j);
                for (size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
                int idx = r.basis->index_of(e);
                r.coeffs[idx] = r.field.add(r.coeffs[idx],
                                            r.field.mul(a.coeffs[i], b.coeffs[j]));
            }
        }
        return r;
    }

    std::string str() const;
};

template <class F>
std::string HomForm<F>::str() const {
    std::string s;
    for (int i = 0; i < basis->size(); ++i) {
        if (field.is_zero(coeffs[i])) continue;
        if (!s.empty()) s += " + ";
        if constexpr (F::is_prime_field) {
            if (coeffs[i] != 1) s += std::to_string(coeffs[i]) + "*";
        } else {
            if (!(coeffs[i] == Rational(1))) s += coeffs[i].str() + "*";
        }
        s += monomial_str(basis->monomial(i));
    }
    return s.empty() ? "0" : s;
}

// Matrix of the multiplication map  S^d -> S^{d+e},  g |-> f*g, in lex bases;
// size dim S^{d+e}  x  dim S^d.
template <class F>
Matrix<F> multiplication_matrix(const HomForm<F>& f, int d) {
    const MonomialBasis& src = MonomialBasis::get(f.num_vars(), d);
    const MonomialBasis& dst = MonomialBasis::get(f.num_vars(), d + f.degree());
    Matrix<F> m(f.field, dst.size(), src.size());
    Exponents e(f.num_vars());
    for (int j = 0; j < src.size(); ++j) {
        const Exponents& eg = src.monomial(j);
        for (int i = 0; i < f.basis->size(); ++i) {
            if (f.field.is_zero(f.coeffs[i])) continue;
            const Exponents& ef = f.basis->monomial(i);
            for (size_t v = 0; v < e.size(); ++v) e[v] = ef[v] + eg[v];
            int row = dst.index_of(e);
            m.at(row, j) = f.field.add(m.at(row, j), f.coeffs[i]);
        }
    }
    return m;
}

// Rectangular grid of forms of one shared degree; zero entries are explicit.
template <class F>
struct FormMatrix {
    using Elem = typename F::Elem;

    F field;
    int rows = 0, cols = 0;
    int nvars = 0, degree = 0;
    std::vector<HomForm<F>> e;

    FormMatrix(F f, int rows_, int cols_, int num_vars_, int degree_)
        : field(f), rows(rows_), cols(cols_), nvars(num_vars_), degree(degree_),
          e(static_cast<size_t>(rows_) * cols_, HomForm<F>(f, num_vars_, degree_)) {}

    HomForm<F>& at(int i, int j) {
        assert(i >= 0 && i < rows && j >= 0 && j < cols);
        return e[static_cast<size_t>(i) * cols + j];
    }
    const HomForm<F>& at(int i, int j) const {
        assert(i >= 0 && i < rows && j >= 0 && j < cols);
        return e[static_cast<size_t>(i) * cols + j];
    }

    bool is_zero() const {
        for (const auto& f : e)
            if (!f.is_zero()) return false;
        return true;
    }

    FormMatrix transposed() const {
        FormMatrix t(field, cols, rows, nvars, degree);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend bool operator==(const FormMatrix& a, const FormMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.nvars == b.nvars &&
               a.degree == b.degree && a.e == b.e;
    }

    // Entrywise product-and-sum against another grid (matrix product in the
    // form algebra); entry degrees add.
    FormMatrix multiply(const FormMatrix& o) const {
        assert(cols == o.rows && nvars == o.nvars);
        FormMatrix r(field, rows, o.cols, nvars, degree + o.degree);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < o.cols; ++j) {
                HomForm<F> acc(field, nvars, degree + o.degree);
                for (int k = 0; k < cols; ++k)
                    acc += at(i, k) * o.at(k, j);
                r.at(i, j) = acc;
            }
        return r;
    }
};

// Coefficient expansion of the map (S^d)^cols -> (S^{d+deg})^rows given by the
// grid: block (i,j) is the multiplication matrix of entry (i,j). Row index
// (i, t) = i*dimBig + t, column index (j, s) = j*dimSmall + s.
template <class F>
Matrix<F> expanded_form_matrix(const FormMatrix<F>& psi, int d) {
    long long big = sym_dim(psi.nvars - 1, psi.degree + d);
    long long small = sym_dim(psi.nvars - 1, d);
    Matrix<F> m(psi.field, static_cast<int>(psi.rows * big),
                static_cast<int>(psi.cols * small));
    for (int i = 0; i < psi.rows; ++i)
        for (int j = 0; j < psi.cols; ++j) {
            if (psi.at(i, j).is_zero()) continue;
            Matrix<F> blk = multiplication_matrix(psi.at(i, j), d);
            for (int t = 0; t < blk.rows(); ++t)
                for (int s = 0; s < blk.cols(); ++s)
                    m.at(static_cast<int>(i * big) + t,
                         static_cast<int>(j * small) + s) = blk.at(t, s);
        }
    return m;
}

// Kernel of a form matrix at a test degree:
//   { v in (S^d)^cols :  sum_j psi_ij v_j = 0 for all i }.
template <class F>
struct FormKernel {
    int test_degree;
    int component_count;
    // each element: cols forms of degree test_degree
    std::vector<std::vector<HomForm<F>>> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

template <class F>
FormKernel<F> form_matrix_kernel(const FormMatrix<F>& psi, int d) {
    Matrix<F> m = expanded_form_matrix(psi, d);
    auto vecs = m.kernel_basis();
    const MonomialBasis& small = MonomialBasis::get(psi.nvars, d);
    FormKernel<F> out{d, psi.cols, {}};
    for (const auto& v : vecs) {
        std::vector<HomForm<F>> comps;
        comps.reserve(psi.cols);
        for (int j = 0; j < psi.cols; ++j) {
            HomForm<F> h(psi.field, psi.nvars, d);
            for (int s = 0; s < small.size(); ++s)
                h.coeffs[s] = v[static_cast<size_t>(j) * small.size() + s];
            comps.push_back(std::move(h));
        }
        out.basis.push_back(std::move(comps));
    }
    return out;
}

// Orthogonal of a set of rows u^(1..t) in M (x) S^{d2} inside M* (x) S^{a},
// under the multiplication pairing into S^{d2+a}:
//   { w : <u^(s), w> = sum_i u_i^(s) w_i = 0 for all s }.
// Rows are given as vectors of m forms of degree d2.
template <class F>
FormKernel<F> pairing_orthogonal(F field, int num_vars, int m, int d2, int a_deg,
                                 const std::vector<std::vector<HomForm<F>>>& rows) {
    long long small = sym_dim(num_vars - 1, a_deg);
    long long big = sym_dim(num_vars - 1, d2 + a_deg);
    Matrix<F> mat(field, static_cast<int>(rows.size() * big),
                  static_cast<int>(m * small));
    const MonomialBasis& abasis = MonomialBasis::get(num_vars, a_deg);
    for (size_t s = 0; s < rows.size(); ++s) {
        assert(static_cast<int>(rows[s].size()) == m);
        for (int i = 0; i < m; ++i) {
            if (rows[s][i].is_zero()) continue;
            Matrix<F> blk = multiplication_matrix(rows[s][i], a_deg);
            for (int t = 0; t < blk.rows(); ++t)
                for (int c = 0; c < blk.cols(); ++c)
                    mat.at(static_cast<int>(s * big) + t,
                           static_cast<int>(i * small) + c) = blk.at(t, c);
        }
    }
    auto vecs = mat.kernel_basis();
    FormKernel<F> out{a_deg, m, {}};
    for (const auto& v : vecs) {
        std::vector<HomForm<F>> comps;
        for (int i = 0; i < m; ++i) {
            HomForm<F> h(field, num_vars, a_deg);
            for (int c = 0; c < abasis.size(); ++c)
                h.coeffs[c] = v[static_cast<size_t>(i) * abasis.size() + c];
            comps.push_back(std::move(h));
        }
        out.basis.push_back(std::move(comps));
    }
    return out;
}

// Reduction of an exact form matrix mod p (fails if a denominator vanishes).
inline FormMatrix<PrimeField> reduce_mod(const FormMatrix<RationalField>& fm,
                                         PrimeField f) {
    FormMatrix<PrimeField> out(f, fm.rows, fm.cols, fm.nvars, fm.degree);
    for (int i = 0; i < fm.rows; ++i)
        for (int j = 0; j < fm.cols; ++j)
            for (size_t c = 0; c < fm.at(i, j).coeffs.size(); ++c)
                out.at(i, j).coeffs[c] = f.from_rational(fm.at(i, j).coeffs[c]);
    return out;
}

} // namespace morq
