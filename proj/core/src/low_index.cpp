#include "gradlab/low_index.hpp"

#include <algorithm>
#include <set>

namespace gradlab {

namespace {

// Backtracking over standardized partial tables: the first undefined slot in
// row-major order is filled with each consistent coset (existing ones first,
// then one fresh coset), relator deductions are propagated to a fixpoint, and
// complete tables are kept when they are the canonical representative of
// their conjugacy class. New cosets only ever appear at the first undefined
// slot, which is exactly what keeps every reachable table standardized.
class Search {
public:
    Search(const Presentation& P, long long max_index, const LowIndexOptions& options)
        : pres_(P), max_index_(max_index), opts_(options), width_(2 * P.generator_count()) {
        pres_.validate();
        if (max_index < 1) throw_input("low_index_subgroups: max_index must be >= 1");
        tab_.assign(max_index_ * width_, -1);
        cosets_ = 1;
    }

    std::vector<CosetTable> run() {
        dfs();
        std::sort(found_.begin(), found_.end(), [](const CosetTable& x, const CosetTable& y) {
            return x.index != y.index ? x.index < y.index : x.tab < y.tab;
        });
        return found_;
    }

private:
    long long& entry(long long c, int l) { return tab_[c * width_ + l]; }

    void budget() {
        if (++nodes_ > opts_.max_nodes)
            throw_resource("low_index_subgroups: search budget exceeded");
    }

    // Sets one table entry (both directions) and records it for undo.
    void set_edge(long long c, int l, long long d, std::vector<long long>& trail) {
        entry(c, l) = d;
        trail.push_back(c * width_ + l);
        int linv = letter_inverse(l);
        if (entry(d, linv) < 0) {
            entry(d, linv) = c;
            trail.push_back(d * width_ + linv);
        }
    }

    // Scans every relator at every coset, turning single gaps into forced
    // entries, until nothing changes. Gaps of two or more are left for the
    // search to fill (deduction never creates cosets). Returns false on a
    // contradiction.
    bool propagate(std::vector<long long>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (long long c = 0; c < cosets_; ++c) {
                for (const Word& r : pres_.relators) {
                    long long f = c, b = c;
                    long long i = 0, j = static_cast<long long>(r.length()) - 1;
                    while (i <= j) {
                        long long nxt = entry(f, r.letters[i]);
                        if (nxt < 0) break;
                        f = nxt;
                        ++i;
                    }
                    while (j >= i) {
                        long long nxt = entry(b, letter_inverse(r.letters[j]));
                        if (nxt < 0) break;
                        b = nxt;
                        --j;
                    }
                    if (i > j) {
                        if (f != b) return false;
                    } else if (i == j) {
                        Letter li = r.letters[i];
                        long long ex = entry(f, li);
                        long long ey = entry(b, letter_inverse(li));
                        if ((ex >= 0 && ex != b) || (ey >= 0 && ey != f)) return false;
                        if (ex < 0) {
                            set_edge(f, li, b, trail);
                            changed = true;
                        } else if (ey < 0) {
                            set_edge(b, letter_inverse(li), f, trail);
                            changed = true;
                        }
                    }
                }
            }
        }
        return true;
    }

    void undo(const std::vector<long long>& trail) {
        for (long long slot : trail) tab_[slot] = -1;
    }

    void dfs() {
        budget();
        // First undefined slot in row-major order.
        long long slot = -1;
        for (long long s = 0; s < cosets_ * width_; ++s)
            if (tab_[s] < 0) {
                slot = s;
                break;
            }
        if (slot < 0) {
            harvest();
            return;
        }
        long long c = slot / width_;
        int l = static_cast<int>(slot % width_);
        int linv = letter_inverse(l);
        auto try_candidate = [&](long long d) {
            std::vector<long long> trail;
            set_edge(c, l, d, trail);
            if (propagate(trail)) dfs();
            undo(trail);
        };
        long long existing = cosets_;
        for (long long d = 0; d < existing; ++d) {
            if (entry(d, linv) >= 0) continue;
            try_candidate(d);
        }
        if (cosets_ < max_index_) {
            // One fresh coset, always the last candidate; its row is fully
            // undone by the trail, so it can simply be retired afterwards.
            ++cosets_;
            try_candidate(cosets_ - 1);
            --cosets_;
        }
    }

    // A complete table: check transitivity is built in (all cosets were
    // reached through definitions), relators hold by propagate, so only the
    // canonicity filter and output assembly remain.
    void harvest() {
        CosetTable T;
        T.presentation = pres_;
        T.index = cosets_;
        T.tab.assign(tab_.begin(), tab_.begin() + cosets_ * width_);
        T.validate();

        std::vector<long long> self = T.tab;
        std::set<std::vector<long long>> classmates;
        bool canonical = true;
        for (long long b = 0; b < T.index && canonical; ++b) {
            std::vector<long long> enc = standardized_encoding(T, b);
            if (enc < self) canonical = false;
            classmates.insert(std::move(enc));
        }
        if (!canonical) return;
        if (opts_.normal_only && classmates.size() != 1) return;

        if (opts_.expand_conjugates) {
            for (const std::vector<long long>& enc : classmates) {
                CosetTable C;
                C.presentation = pres_;
                C.index = T.index;
                C.tab = enc;
                C.validate();
                found_.push_back(std::move(C));
            }
        } else {
            found_.push_back(std::move(T));
        }
    }

    Presentation pres_;
    long long max_index_;
    LowIndexOptions opts_;
    int width_;
    long long cosets_ = 1;
    long long nodes_ = 0;
    std::vector<long long> tab_;
    std::vector<CosetTable> found_;
};

}  // namespace

std::vector<CosetTable> low_index_subgroups(const Presentation& P, long long max_index,
                                            const LowIndexOptions& options) {
    return Search(P, max_index, options).run();
}

}  // namespace gradlab
