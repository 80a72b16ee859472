#include "morq/subspaces.hpp"

#include <algorithm>

namespace morq {

SubspaceIterator::SubspaceIterator(PrimeField f, int ambient_dim, int dim)
    : f_(f), d_(ambient_dim), k_(dim) {
    assert(ambient_dim >= 0 && dim >= 0);
    reset();
}

void SubspaceIterator::reset() {
    done_ = k_ > d_;
    fresh_ = !done_;
    pivots_.resize(k_);
    for (int i = 0; i < k_; ++i) pivots_[i] = i;
    recompute_free_slots();
}

void SubspaceIterator::recompute_free_slots() {
    free_slots_.clear();
    if (done_) return;
    std::vector<bool> is_pivot(d_, false);
    for (int c : pivots_) is_pivot[c] = true;
    for (int i = 0; i < k_; ++i)
        for (int j = pivots_[i] + 1; j < d_; ++j)
            if (!is_pivot[j]) free_slots_.emplace_back(i, j);
    digits_.assign(free_slots_.size(), 0);
}

bool SubspaceIterator::advance_combination() {
    // next k-combination of {0..d-1} in lexicographic order
    int i = k_ - 1;
    while (i >= 0 && pivots_[i] == d_ - k_ + i) --i;
    if (i < 0) return false;
    ++pivots_[i];
    for (int j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
    recompute_free_slots();
    return true;
}

void SubspaceIterator::write(Matrix<PrimeField>& out) const {
    if (out.rows() != k_ || out.cols() != d_ || !(out.field() == f_))
        out = Matrix<PrimeField>(f_, k_, d_);
    else
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < d_; ++j) out.at(i, j) = 0;
    for (int i = 0; i < k_; ++i) out.at(i, pivots_[i]) = 1;
    for (size_t s = 0; s < free_slots_.size(); ++s)
        out.at(free_slots_[s].first, free_slots_[s].second) = digits_[s];
}

bool SubspaceIterator::next(Matrix<PrimeField>& out) {
    if (done_) return false;
    if (fresh_) {
        fresh_ = false;
        write(out);
        return true;
    }
    // odometer: last slot fastest
    int s = static_cast<int>(digits_.size()) - 1;
    while (s >= 0 && digits_[s] == f_.p - 1) digits_[s--] = 0;
    if (s >= 0) {
        ++digits_[s];
        write(out);
        return true;
    }
    if (!advance_combination()) {
        done_ = true;
        return false;
    }
    write(out);
    return true;
}

void SubspaceIterator::seek(Integer index) {
    reset();
    if (done_) return;
    Integer pz(f_.p);
    while (true) {
        Integer block;
        mpz_pow_ui(block.get_mpz_t(), pz.get_mpz_t(), free_slots_.size());
        if (index < block) break;
        index -= block;
        if (!advance_combination()) {
            done_ = true;
            return;
        }
    }
    // base-p digits, last slot fastest
    for (int s = static_cast<int>(digits_.size()) - 1; s >= 0; --s) {
        Integer rem = index % f_.p;
        digits_[s] = static_cast<uint32_t>(rem.get_ui());
        index /= f_.p;
    }
    fresh_ = true;
}

unsigned long long checked_subspace_count(int d, int k, uint32_t p,
                                          unsigned long long budget,
                                          const char* where) {
    Integer c = gaussian_binomial(d, k, p);
    if (c > Integer(static_cast<unsigned long>(budget)))
        throw BudgetExceeded(where, c.fits_ulong_p() ? c.get_ui() : ~0ull, budget);
    return c.get_ui();
}

std::vector<Matrix<PrimeField>> all_subspaces(PrimeField f, int d,
                                              unsigned long long budget) {
    Integer tot(0);
    for (int k = 0; k <= d; ++k) tot += gaussian_binomial(d, k, f.p);
    if (tot > Integer(static_cast<unsigned long>(budget)))
        throw BudgetExceeded("all_subspaces", tot.fits_ulong_p() ? tot.get_ui() : ~0ull,
                             budget);
    std::vector<Matrix<PrimeField>> out;
    out.reserve(tot.get_ui());
    Matrix<PrimeField> m;
    for (int k = 0; k <= d; ++k) {
        SubspaceIterator it(f, d, k);
        while (it.next(m)) out.push_back(m);
    }
    return out;
}

void for_each_subspace(PrimeField f, int d, int k, unsigned long long budget,
                       const std::function<void(const Matrix<PrimeField>&)>& fn) {
    checked_subspace_count(d, k, f.p, budget, "for_each_subspace");
    SubspaceIterator it(f, d, k);
    Matrix<PrimeField> m;
    while (it.next(m)) fn(m);
}

} // namespace morq
