#include "gradlab/group_ring.hpp"

#include <sstream>

#include "gradlab/errors.hpp"
#include "gradlab/presentation.hpp"

namespace gradlab {

GroupRingElement GroupRingElement::monomial(const Word& w, const Int& coefficient) {
    GroupRingElement e;
    e.add_term(w, coefficient);
    return e;
}

void GroupRingElement::add_term(const Word& w, const Int& coefficient) {
    if (coefficient == 0) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, coefficient);
        return;
    }
    it->second += coefficient;
    if (it->second == 0) terms.erase(it);
}

std::string GroupRingElement::to_string(const std::vector<std::string>& generator_names) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms) {
        const bool negative = c < 0;
        const Int magnitude = negative ? Int(-c) : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        if (magnitude != 1 || w.empty()) os << magnitude.str();
        if (magnitude != 1 && !w.empty()) os << "*";
        if (!w.empty()) os << print_word(w, generator_names);
        first = false;
    }
    return os.str();
}

GroupRingElement operator+(const GroupRingElement& x, const GroupRingElement& y) {
    GroupRingElement out = x;
    for (const auto& [w, c] : y.terms) out.add_term(w, c);
    return out;
}

GroupRingElement operator-(const GroupRingElement& x) {
    GroupRingElement out;
    for (const auto& [w, c] : x.terms) out.terms.emplace(w, -c);
    return out;
}

GroupRingElement operator-(const GroupRingElement& x, const GroupRingElement& y) {
    GroupRingElement out = x;
    for (const auto& [w, c] : y.terms) out.add_term(w, -c);
    return out;
}

GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
    GroupRingElement out;
    for (const auto& [u, cu] : x.terms)
        for (const auto& [v, cv] : y.terms) out.add_term(u * v, cu * cv);
    return out;
}

// One-sided multiplication by a group element permutes the support, so the
// terms transfer without any cancellation bookkeeping.
GroupRingElement operator*(const Word& w, const GroupRingElement& x) {
    GroupRingElement out;
    for (const auto& [v, c] : x.terms) out.terms.emplace(w * v, c);
    return out;
}

GroupRingElement operator*(const GroupRingElement& x, const Word& w) {
    GroupRingElement out;
    for (const auto& [v, c] : x.terms) out.terms.emplace(v * w, c);
    return out;
}

GroupRingMatrix::GroupRingMatrix(long long r, long long c) {
    if (r < 0 || c < 0) throw_input("group-ring matrix dimensions must be non-negative");
    rows = r;
    cols = c;
    a.resize(static_cast<size_t>(r) * static_cast<size_t>(c));
}

void GroupRingMatrix::validate() const {
    if (rows < 0 || cols < 0) throw_input("group-ring matrix dimensions must be non-negative");
    if (a.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
        throw_input("group-ring matrix entry count does not match its dimensions");
}

}  // namespace gradlab
