#include "gradlab/todd_coxeter.hpp"

#include <cstdlib>
#include <deque>

namespace gradlab {

long long default_max_cosets() {
    const char* env = std::getenv("GRADLAB_MAX_COSETS");
    if (env && *env) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw_input("GRADLAB_MAX_COSETS must be a positive integer");
    }
    return 1'000'000;
}

namespace {

// Enumeration state. Cosets are rows of a growing flat table; dead cosets
// (merged away by coincidences) stay allocated until the final compression,
// with union-find parents tracking their surviving representative.
class Enumerator {
public:
    Enumerator(const Presentation& P, const std::vector<Word>& subgroup_generators,
               long long max_cosets)
        : pres_(P), subgens_(subgroup_generators), width_(2 * P.generator_count()),
          max_live_(max_cosets) {
        pres_.validate();
        for (const Word& h : subgens_)
            if (h.max_generator() >= pres_.generator_count())
                throw_input("todd_coxeter: subgroup word uses unknown generators");
        if (max_live_ < 1) throw_input("todd_coxeter: max_cosets must be >= 1");
        new_coset();
    }

    CosetTable run() {
        // HLT passes: scan every relator at every live coset, fill undefined
        // slots with fresh cosets, and repeat until a full pass changes
        // nothing. Coincidence processing may re-open previously complete
        // rows, which a later pass then repairs; a pass over a complete,
        // consistent table is a no-op, so termination at a fixpoint is exact.
        do {
            changed_ = false;
            for (const Word& h : subgens_) {
                scan_and_fill(0, h);
            }
            for (long long c = 0; c < count(); ++c) {
                if (!alive(c)) continue;
                for (const Word& r : pres_.relators) {
                    scan_and_fill(c, r);
                    if (!alive(c)) break;
                }
                if (!alive(c)) continue;
                for (int l = 0; l < width_; ++l)
                    if (entry(c, l) < 0) new_edge_to_fresh(c, l);
            }
        } while (changed_);
        return compress();
    }

private:
    long long count() const { return static_cast<long long>(parent_.size()); }
    bool alive(long long c) const { return parent_[c] == c; }
    long long& entry(long long c, int l) { return tab_[c * width_ + l]; }

    long long find(long long c) {
        while (parent_[c] != c) {
            parent_[c] = parent_[parent_[c]];
            c = parent_[c];
        }
        return c;
    }

    long long new_coset() {
        if (live_ + 1 > max_live_)
            throw_resource("todd_coxeter: coset limit exceeded (index may be infinite)");
        if (count() + 1 > 2 * max_live_ + 1024)
            throw_resource("todd_coxeter: allocation limit exceeded");
        parent_.push_back(count());
        tab_.resize(tab_.size() + width_, -1);
        ++live_;
        changed_ = true;
        return count() - 1;
    }

    void new_edge_to_fresh(long long c, int l) {
        long long d = new_coset();
        entry(c, l) = d;
        entry(d, letter_inverse(l)) = c;
    }

    // Records x * l = y when the slot is free; otherwise the existing entries
    // force a coincidence. Both table directions are kept in sync.
    void deduce(long long x, int l, long long y) {
        long long ex = entry(x, l);
        if (ex >= 0) {
            if (find(ex) != find(y)) coincide(ex, y);
            return;
        }
        long long ey = entry(y, letter_inverse(l));
        if (ey >= 0) {
            if (find(ey) != find(x)) coincide(ey, x);
            return;
        }
        entry(x, l) = y;
        entry(y, letter_inverse(l)) = x;
        changed_ = true;
    }

    // Merges the equivalence classes of a and b, transferring the edges of
    // each dead coset onto its surviving representative; transfers can expose
    // further coincidences, which queue up until exhausted.
    void coincide(long long a, long long b) {
        changed_ = true;
        std::deque<long long> dead;
        auto merge = [&](long long x, long long y) {
            x = find(x);
            y = find(y);
            if (x == y) return;
            if (x > y) std::swap(x, y);  // keep the earlier-defined coset
            parent_[y] = x;
            --live_;
            dead.push_back(y);
        };
        merge(a, b);
        while (!dead.empty()) {
            long long g = dead.front();
            dead.pop_front();
            for (int l = 0; l < width_; ++l) {
                long long d = entry(g, l);
                if (d < 0) continue;
                entry(g, l) = -1;
                if (entry(d, letter_inverse(l)) == g) entry(d, letter_inverse(l)) = -1;
                long long m = find(g);
                long long n = find(d);
                long long em = entry(m, l);
                if (em >= 0) {
                    merge(em, n);
                } else {
                    long long en = entry(n, letter_inverse(l));
                    if (en >= 0) {
                        merge(en, m);
                    } else {
                        entry(m, l) = n;
                        entry(n, letter_inverse(l)) = m;
                    }
                }
            }
        }
    }

    void scan_and_fill(long long start, const Word& w) {
        if (w.empty()) return;
        const long long n = static_cast<long long>(w.length());
        for (;;) {
            start = find(start);
            long long f = start;
            long long b = start;
            long long i = 0;
            long long j = n - 1;
            // Forward over defined entries, then backward over defined
            // inverse entries.
            while (i <= j) {
                long long nxt = entry(f, w.letters[i]);
                if (nxt < 0) break;
                f = find(nxt);
                ++i;
            }
            while (j >= i) {
                long long nxt = entry(b, letter_inverse(w.letters[j]));
                if (nxt < 0) break;
                b = find(nxt);
                --j;
            }
            if (i > j) {
                // Whole word consumed: forward end must meet backward end.
                if (f != b) coincide(f, b);
                return;
            }
            if (i == j) {
                deduce(f, w.letters[i], b);
                return;
            }
            // Gap of two or more: fill the first hole and rescan.
            new_edge_to_fresh(f, w.letters[i]);
        }
    }

    CosetTable compress() {
        std::vector<long long> renum(count(), -1);
        long long next = 0;
        for (long long c = 0; c < count(); ++c)
            if (alive(c)) renum[c] = next++;
        CosetTable T;
        T.presentation = pres_;
        T.subgroup_generators = subgens_;
        T.index = next;
        T.tab.resize(next * width_);
        for (long long c = 0; c < count(); ++c) {
            if (!alive(c)) continue;
            for (int l = 0; l < width_; ++l) {
                long long d = entry(c, l);
                if (d < 0) throw_internal("todd_coxeter: incomplete table at fixpoint");
                T.tab[renum[c] * width_ + l] = renum[find(d)];
            }
        }
        T.validate();
        return T;
    }

    Presentation pres_;
    std::vector<Word> subgens_;
    int width_;
    long long max_live_;
    long long live_ = 0;
    bool changed_ = false;
    std::vector<long long> parent_;
    std::vector<long long> tab_;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& P, const std::vector<Word>& subgroup_generators,
                        long long max_cosets) {
    return Enumerator(P, subgroup_generators, max_cosets).run();
}

}  // namespace gradlab
