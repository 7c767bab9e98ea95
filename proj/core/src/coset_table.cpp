#include "gradlab/coset_table.hpp"

#include <nlohmann/json.hpp>

namespace gradlab {

CosetTable CosetTable::trivial(const Presentation& P) {
    CosetTable T;
    T.presentation = P;
    T.index = 1;
    T.tab.assign(T.width(), 0);
    T.validate();
    return T;
}

void CosetTable::validate() const {
    presentation.validate();
    int w = width();
    if (index < 1) throw_internal("coset table: empty table");
    if (static_cast<long long>(tab.size()) != index * w)
        throw_internal("coset table: wrong table size");
    for (long long e : tab)
        if (e < 0 || e >= index) throw_internal("coset table: entry out of range");
    for (long long c = 0; c < index; ++c)
        for (int l = 0; l < w; ++l)
            if (act(act(c, l), letter_inverse(l)) != c)
                throw_internal("coset table: columns are not mutually inverse");
    // Transitivity from coset 0.
    std::vector<char> seen(index, 0);
    std::vector<long long> stack = {0};
    seen[0] = 1;
    long long reached = 1;
    while (!stack.empty()) {
        long long c = stack.back();
        stack.pop_back();
        for (int l = 0; l < w; ++l) {
            long long d = act(c, l);
            if (!seen[d]) {
                seen[d] = 1;
                ++reached;
                stack.push_back(d);
            }
        }
    }
    if (reached != index) throw_internal("coset table: action is not transitive");
    for (const Word& r : presentation.relators)
        for (long long c = 0; c < index; ++c)
            if (trace(c, r) != c) throw_internal("coset table: relator does not trace closed");
    for (const Word& h : subgroup_generators)
        if (trace(0, h) != 0)
            throw_internal("coset table: subgroup generator does not stabilize coset 0");
}

CosetTable standardize(const CosetTable& T, long long basepoint) {
    if (basepoint < 0 || basepoint >= T.index) throw_internal("standardize: bad basepoint");
    int w = T.width();
    std::vector<long long> renum(T.index, -1);
    std::vector<long long> order;
    order.reserve(T.index);
    renum[basepoint] = 0;
    order.push_back(basepoint);
    for (size_t head = 0; head < order.size(); ++head) {
        long long c = order[head];
        for (int l = 0; l < w; ++l) {
            long long d = T.act(c, l);
            if (renum[d] < 0) {
                renum[d] = static_cast<long long>(order.size());
                order.push_back(d);
            }
        }
    }
    CosetTable out;
    out.presentation = T.presentation;
    out.index = T.index;
    out.tab.resize(T.tab.size());
    for (long long c = 0; c < T.index; ++c)
        for (int l = 0; l < w; ++l) out.tab[renum[c] * w + l] = renum[T.act(c, l)];
    // Subgroup generator words only stabilize coset 0 from the original
    // basepoint; they are not carried to conjugates.
    if (basepoint == 0) out.subgroup_generators = T.subgroup_generators;
    return out;
}

std::vector<long long> standardized_encoding(const CosetTable& T, long long basepoint) {
    return standardize(T, basepoint).tab;
}

bool is_normal(const CosetTable& T) {
    std::vector<long long> base = standardized_encoding(T, 0);
    for (long long b = 1; b < T.index; ++b)
        if (standardized_encoding(T, b) != base) return false;
    return true;
}

PermAction permutation_rep(const CosetTable& T) {
    PermAction A;
    A.degree = T.index;
    A.images.resize(T.presentation.generator_count());
    for (int g = 0; g < T.presentation.generator_count(); ++g) {
        A.images[g].resize(T.index);
        for (long long c = 0; c < T.index; ++c) A.images[g][c] = T.act(c, make_letter(g, +1));
    }
    return A;
}

std::string table_to_json(const CosetTable& T) {
    nlohmann::json j;
    j["index"] = T.index;
    nlohmann::json action = nlohmann::json::object();
    for (int g = 0; g < T.presentation.generator_count(); ++g) {
        std::vector<long long> col(T.index);
        for (long long c = 0; c < T.index; ++c) col[c] = T.act(c, make_letter(g, +1));
        action[T.presentation.generator_names[g]] = col;
    }
    j["action"] = action;
    return j.dump();
}

CosetTable table_from_json(const std::string& text, const Presentation& P) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw_input(std::string("table JSON: ") + e.what());
    }
    CosetTable T;
    T.presentation = P;
    if (!j.contains("index") || !j["index"].is_number_integer())
        throw_input("table JSON: missing index");
    T.index = j["index"].get<long long>();
    if (T.index < 1) throw_input("table JSON: index must be >= 1");
    T.tab.assign(T.index * T.width(), -1);
    if (!j.contains("action") || !j["action"].is_object())
        throw_input("table JSON: missing action object");
    for (int g = 0; g < P.generator_count(); ++g) {
        const std::string& name = P.generator_names[g];
        if (!j["action"].contains(name))
            throw_input("table JSON: missing generator column '" + name + "'");
        const auto& col = j["action"][name];
        if (!col.is_array() || static_cast<long long>(col.size()) != T.index)
            throw_input("table JSON: column '" + name + "' has wrong length");
        for (long long c = 0; c < T.index; ++c) {
            long long d = col[c].get<long long>();
            if (d < 0 || d >= T.index) throw_input("table JSON: coset out of range");
            T.tab[c * T.width() + make_letter(g, +1)] = d;
            T.tab[d * T.width() + make_letter(g, -1)] = c;
        }
    }
    for (long long e : T.tab)
        if (e < 0) throw_input("table JSON: generator column is not a permutation");
    try {
        T.validate();
    } catch (const GradlabError&) {
        throw_input("table JSON: table is inconsistent with the presentation");
    }
    return T;
}

}  // namespace gradlab
