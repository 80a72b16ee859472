#pragma once

#include <map>

#include "morq/chambers.hpp"

namespace morq {

// Linear-algebra constants fed into the type-(2,1) certificate, with
// provenance: "exhaustive" (complete search), "lower-bound" (witness only),
// or "assumed" (user-supplied).
struct ProvidedConstant {
    long long value = 0;
    std::string status = "assumed";
};

class ConstantsProvider {
public:
    static std::string key_ij(int i, int j) {
        return "k(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    static std::string key_i(int i) { return "k(" + std::to_string(i) + ")"; }

    void set(const std::string& key, long long value, const std::string& status) {
        map_[key] = ProvidedConstant{value, status};
    }
    const ProvidedConstant& require(const std::string& key) const {
        auto it = map_.find(key);
        if (it == map_.end()) throw MissingConstant(key);
        return it->second;
    }
    const std::map<std::string, ProvidedConstant>& map() const { return map_; }

private:
    std::map<std::string, ProvidedConstant> map_;
};

struct BoolCheck {
    std::string description;
    bool pass = false;
};

// Exact evaluation of one quotient-existence criterion. Overall semantics:
// certified iff every condition, gate, and check passes; downgraded to
// conditionally-certified when a non-exhaustive constant was consumed. The
// auxiliary list is informational (comparison bounds, nonemptiness
// checklists, the non-selected branch) and never affects the verdict.
struct CertificateReport {
    enum class Overall { Certified, ConditionallyCertified, NotCertified, Inapplicable };

    std::string claim;
    std::vector<Condition> conditions;
    std::vector<Condition> gates;
    std::vector<BoolCheck> checks;
    std::vector<Condition> auxiliary;
    std::vector<std::string> notes;
    Overall overall = Overall::NotCertified;

    bool certified() const {
        return overall == Overall::Certified || overall == Overall::ConditionallyCertified;
    }
    std::string overall_str() const;
};

// General sufficient criterion for two-block types (requires m1 < a21);
// consumes k(i,j) and k(i) values from the provider.
CertificateReport certify_33(const MorphismType& t, const Polarization& p,
                             const ConstantsProvider& constants);

// Two-block types with second multiplicity 2 (m, n not both even); the m=1
// specialization is reported when it applies.
CertificateReport certify_42_43(const MorphismType& t, const Polarization& p);

// P^2 types (d+1,1)+(d,3).
CertificateReport certify_51(const MorphismType& t, const Polarization& p);

// P^2 types (d+1,m)+(1,3), m < (d+1)(d+2)/2, gcd(m,n) not divisible by 3.
CertificateReport certify_61(const MorphismType& t, const Polarization& p);

// P^2 types (d+2,1)+(d,3).
CertificateReport certify_75(const MorphismType& t, const Polarization& p);

// Three-block types with m < C(d1-d2+r-1, r-1).
CertificateReport certify_87(const MorphismType& t, const Polarization& p);

// Derived windows used as cross-checks.

// n-range forced by the (d+2,1)+(d,3) certificate:
// 19/13 (C(d+1,2)+C(d+2,2)) < n < 19/6 C(d+2,2).
struct NWindow {
    Rational lo, hi;
    std::vector<int> admissible;
};
NWindow claim75_n_window(int d);

// Feasible n for the (d+1,m)+(1,3) certificate on the chamber
// (1/(2mn), 1/((2m-1)n)), combined with the nonemptiness checklist.
std::vector<int> claim61_admissible_n(int d, int m, int n_max);

} // namespace morq
