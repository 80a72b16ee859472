#include "morq/matrix.hpp"

namespace morq {

int bareiss_rank(std::vector<std::vector<Integer>> m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    Integer prev(1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pr = -1;
        for (int i = rank; i < rows; ++i)
            if (sgn(m[i][col]) != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[rank], m[pr]);
        const Integer& piv = m[rank][col];
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                Integer t = m[i][j] * piv - m[i][col] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

} // namespace morq
