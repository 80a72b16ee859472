#pragma once

#include <string>
#include <vector>

#include "morq/rational.hpp"

namespace morq {

// One exactly evaluated inequality. The margin is the slack by which it
// holds: rhs - lhs for upper bounds, lhs - rhs for lower bounds; nonnegative
// (positive, when strict) exactly when the condition holds.
struct Condition {
    enum class Rel { LT, LE, GT, GE };

    std::string description;
    Rational lhs;
    Rel rel = Rel::LE;
    Rational rhs;

    bool strict() const { return rel == Rel::LT || rel == Rel::GT; }
    bool holds() const {
        switch (rel) {
            case Rel::LT: return lhs < rhs;
            case Rel::LE: return lhs <= rhs;
            case Rel::GT: return lhs > rhs;
            case Rel::GE: return lhs >= rhs;
        }
        return false;
    }
    Rational margin() const {
        return (rel == Rel::LT || rel == Rel::LE) ? rhs - lhs : lhs - rhs;
    }
    std::string rel_str() const {
        switch (rel) {
            case Rel::LT: return "<";
            case Rel::LE: return "<=";
            case Rel::GT: return ">";
            case Rel::GE: return ">=";
        }
        return "?";
    }

    static Condition make(std::string desc, Rational lhs, Rel rel, Rational rhs) {
        return Condition{std::move(desc), std::move(lhs), rel, std::move(rhs)};
    }
};

inline bool all_hold(const std::vector<Condition>& cs) {
    for (const auto& c : cs)
        if (!c.holds()) return false;
    return true;
}

} // namespace morq
