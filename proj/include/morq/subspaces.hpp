#pragma once

#include <functional>
#include <vector>

#include "morq/matrix.hpp"

namespace morq {

// Streams every k-dimensional subspace of F_p^d exactly once, as its unique
// reduced-row-echelon basis matrix (k x d). Order is deterministic: pivot
// column sets ascend lexicographically, and for a fixed pivot set the free
// entries run through a base-p odometer (row-major slots, last slot fastest).
class SubspaceIterator {
public:
    SubspaceIterator(PrimeField f, int ambient_dim, int dim);

    Integer total() const { return gaussian_binomial(d_, k_, f_.p); }

    // Fills `out` with the next basis matrix; false once exhausted. `out` is
    // resized as needed.
    bool next(Matrix<PrimeField>& out);

    void reset();

    // Positions the stream so the following next() yields item #index (0-based).
    void seek(Integer index);

private:
    void recompute_free_slots();
    bool advance_combination();
    void write(Matrix<PrimeField>& out) const;

    PrimeField f_;
    int d_, k_;
    std::vector<int> pivots_;
    std::vector<std::pair<int, int>> free_slots_; // (row, col), row-major order
    std::vector<uint32_t> digits_;
    bool done_;
    bool fresh_; // current state not yet emitted
};

// Gaussian-binomial count with a budget gate; throws BudgetExceeded.
unsigned long long checked_subspace_count(int d, int k, uint32_t p,
                                          unsigned long long budget,
                                          const char* where);

// All subspaces of F_p^d of every dimension 0..d, dimension-major order.
// Budget applies to the total count.
std::vector<Matrix<PrimeField>> all_subspaces(PrimeField f, int d,
                                              unsigned long long budget);

// Convenience driver; enumeration honors the budget per call.
void for_each_subspace(PrimeField f, int d, int k, unsigned long long budget,
                       const std::function<void(const Matrix<PrimeField>&)>& fn);

} // namespace morq
