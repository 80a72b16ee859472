#include "morq/monomial.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace morq {

namespace {
std::mutex registry_mutex;
std::map<std::pair<int, int>, std::unique_ptr<MonomialBasis>>& registry() {
    static std::map<std::pair<int, int>, std::unique_ptr<MonomialBasis>> r;
    return r;
}

void gen(int vars_left, int degree_left, Exponents& cur, std::vector<Exponents>& out) {
    if (vars_left == 1) {
        cur.push_back(degree_left);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = degree_left; e >= 0; --e) {
        cur.push_back(e);
        gen(vars_left - 1, degree_left - e, cur, out);
        cur.pop_back();
    }
}
} // namespace

MonomialBasis::MonomialBasis(int num_vars, int degree)
    : num_vars_(num_vars), degree_(degree) {
    assert(num_vars >= 1 && degree >= 0);
    Exponents cur;
    gen(num_vars, degree, cur, monomials_);
    assert(static_cast<long long>(monomials_.size()) == sym_dim(num_vars - 1, degree));
}

const MonomialBasis& MonomialBasis::get(int num_vars, int degree) {
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& r = registry();
    auto key = std::make_pair(num_vars, degree);
    auto it = r.find(key);
    if (it == r.end())
        it = r.emplace(key, std::unique_ptr<MonomialBasis>(new MonomialBasis(num_vars, degree))).first;
    return *it->second;
}

int MonomialBasis::index_of(const Exponents& e) const {
    // descending lex: standard binary search with reversed comparator
    auto it = std::lower_bound(monomials_.begin(), monomials_.end(), e,
                               [](const Exponents& a, const Exponents& b) {
                                   return std::lexicographical_compare(
                                       b.begin(), b.end(), a.begin(), a.end());
                               });
    if (it == monomials_.end() || *it != e) return -1;
    return static_cast<int>(it - monomials_.begin());
}

std::string monomial_str(const Exponents& e) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (any) os << "*";
        os << "X" << i;
        if (e[i] > 1) os << "^" << e[i];
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

} // namespace morq
