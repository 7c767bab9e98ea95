#include "gradlab/meataxe.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <utility>

#include "json.hpp"

#include "gradlab/arith.hpp"
#include "gradlab/errors.hpp"
#include "gradlab/fp_poly.hpp"

namespace gradlab {

namespace {

// Exhaustive spinning is used while the number of lines (p^n - 1)/(p - 1)
// stays within this budget; beyond it the randomized search takes over.
constexpr long long kExhaustiveLines = 8192;
// A Norton certificate needs every line of a kernel spun; skip kernels with
// more lines than this and try the next algebra element instead.
constexpr long long kNortonLines = 4096;
constexpr int kRandomAttempts = 64;
constexpr size_t kWordStock = 24;

uint32_t addp(uint32_t a, uint32_t b, long long p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) + b) % static_cast<uint64_t>(p));
}

uint32_t mulp(uint32_t a, uint32_t b, long long p) {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % static_cast<uint64_t>(p));
}

uint32_t subp(uint32_t a, uint32_t b, long long p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) + static_cast<uint64_t>(p) - b) %
                                 static_cast<uint64_t>(p));
}

std::vector<uint32_t> apply_row(const std::vector<uint32_t>& v, const FpMatrix& m) {
    std::vector<uint32_t> out(m.cols, 0);
    for (size_t k = 0; k < m.rows; ++k) {
        if (v[k] == 0) continue;
        for (size_t j = 0; j < m.cols; ++j)
            out[j] = addp(out[j], mulp(v[k], m.at(k, j), m.p), m.p);
    }
    return out;
}

// Incremental echelon basis used by the spinning loop.
struct Echelon {
    long long p;
    size_t n;
    std::vector<std::vector<uint32_t>> rows;  // each has a 1 at its pivot
    std::vector<size_t> pivots;

    Echelon(long long prime, size_t dim) : p(prime), n(dim) {}

    size_t rank() const { return rows.size(); }

    // Reduces v against the basis; adds the normalized residue when
    // independent. Returns whether the rank grew.
    bool insert(std::vector<uint32_t> v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            const uint32_t lead = v[pivots[r]];
            if (lead == 0) continue;
            for (size_t k = 0; k < n; ++k)
                v[k] = subp(v[k], mulp(lead, rows[r][k], p), p);
        }
        size_t piv = n;
        for (size_t k = 0; k < n; ++k)
            if (v[k] != 0) {
                piv = k;
                break;
            }
        if (piv == n) return false;
        const uint32_t inv = static_cast<uint32_t>(fp_inverse_scalar(v[piv], p));
        for (size_t k = 0; k < n; ++k) v[k] = mulp(v[k], inv, p);
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    }

    FpMatrix matrix() const {
        FpMatrix out(p, rows.size(), n);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < n; ++j) out.at(i, j) = rows[i][j];
        return out;
    }
};

// Smallest subspace containing `start` that is closed under every action.
Echelon spin(long long p, const std::vector<FpMatrix>& actions,
             const std::vector<uint32_t>& start) {
    const size_t n = start.size();
    Echelon basis(p, n);
    if (!basis.insert(start)) return basis;
    std::vector<std::vector<uint32_t>> queue{basis.rows.back()};
    for (size_t head = 0; head < queue.size() && basis.rank() < n; ++head) {
        const std::vector<uint32_t> w = queue[head];
        for (const FpMatrix& a : actions) {
            if (basis.rank() == n) break;
            if (basis.insert(apply_row(w, a))) queue.push_back(basis.rows.back());
        }
    }
    return basis;
}

// Enumerates representatives of all lines of F_p^dim (first nonzero
// coordinate = 1). The callback returns true to stop early; the return value
// reports whether it did.
template <typename Fn>
bool for_each_line(long long p, size_t dim, Fn&& fn) {
    std::vector<uint32_t> v(dim, 0);
    for (size_t lead = 0; lead < dim; ++lead) {
        std::fill(v.begin(), v.end(), 0);
        v[lead] = 1;
        bool more = true;
        while (more) {
            if (fn(v)) return true;
            more = false;
            for (size_t i = dim; i-- > lead + 1;) {
                if (++v[i] < static_cast<uint32_t>(p)) {
                    more = true;
                    break;
                }
                v[i] = 0;
            }
        }
    }
    return false;
}

long long line_count(long long p, size_t dim, long long cap) {
    long long total = 0, power = 1;
    for (size_t i = 0; i < dim; ++i) {
        total += power;
        if (total > cap) return cap + 1;
        if (power > cap) return cap + 1;
        power *= p;
    }
    return total;
}

struct SearchOutcome {
    bool simple = false;
    FpMatrix basis;  // proper nonzero submodule when !simple
};

// Spin one line; fills `out` and returns true when the spin is proper.
bool proper_spin(long long p, const std::vector<FpMatrix>& actions, size_t n,
                 const std::vector<uint32_t>& v, SearchOutcome& out) {
    Echelon basis = spin(p, actions, v);
    if (basis.rank() == 0 || basis.rank() == n) return false;
    out.simple = false;
    out.basis = basis.matrix();
    return true;
}

void exhaustive_search(long long p, const std::vector<FpMatrix>& actions, size_t n,
                       SearchOutcome& out) {
    const bool stopped = for_each_line(p, n, [&](const std::vector<uint32_t>& v) {
        return proper_spin(p, actions, n, v, out);
    });
    if (!stopped) out.simple = true;
}

SearchOutcome find_submodule(long long p, const std::vector<FpMatrix>& actions, size_t n,
                             std::mt19937_64& rng) {
    SearchOutcome out;
    if (line_count(p, n, kExhaustiveLines) <= kExhaustiveLines) {
        exhaustive_search(p, actions, n, out);
        return out;
    }

    std::vector<FpMatrix> words;
    words.push_back(FpMatrix::identity(p, n));
    for (const FpMatrix& a : actions) words.push_back(a);
    std::vector<FpMatrix> transposed;
    for (const FpMatrix& a : actions) transposed.push_back(fp_transpose(a));

    for (int attempt = 0; attempt < kRandomAttempts; ++attempt) {
        if (words.size() < kWordStock)
            words.push_back(fp_mul(words[rng() % words.size()],
                                   actions[rng() % actions.size()]));

        FpMatrix theta(p, n, n);
        bool nonzero = false;
        for (int tries = 0; tries < 16 && !nonzero; ++tries) {
            theta = FpMatrix(p, n, n);
            for (const FpMatrix& w : words) {
                const uint32_t coeff = static_cast<uint32_t>(rng() % static_cast<uint64_t>(p));
                if (coeff != 0) theta = fp_add(theta, fp_scale(w, coeff));
            }
            for (uint32_t e : theta.a) nonzero = nonzero || e != 0;
        }
        require_internal(nonzero, "random algebra element search stalled at zero");

        for (const auto& [factor, multiplicity] : poly_factorize(char_poly(theta))) {
            (void)multiplicity;
            if (factor.degree() == static_cast<long long>(n)) {
                // theta alone acts irreducibly: F_p[theta] is a field of
                // degree n, so no proper invariant subspace exists at all.
                out.simple = true;
                return out;
            }
            const FpMatrix ft = poly_eval_matrix(factor, theta);
            // Rows act on the right, so the module kernel of f(theta) is the
            // left nullspace {v : v * ft = 0}.
            const FpMatrix kernel = fp_left_nullspace(ft);
            require_internal(kernel.rows >= 1,
                             "characteristic factor with trivial kernel");

            // Cheap pass: spin the kernel basis vectors.
            for (size_t r = 0; r < kernel.rows; ++r) {
                std::vector<uint32_t> v(n);
                for (size_t j = 0; j < n; ++j) v[j] = kernel.at(r, j);
                if (proper_spin(p, actions, n, v, out)) return out;
            }

            if (line_count(p, kernel.rows, kNortonLines) > kNortonLines) continue;

            // Norton's criterion: if every line of ker f(theta) spins to the
            // whole space and one line of the left kernel spins the dual
            // full, the module is simple. Otherwise some spin hands us a
            // submodule (a failed dual spin annihilates one).
            bool found = false;
            for_each_line(p, kernel.rows, [&](const std::vector<uint32_t>& coeffs) {
                std::vector<uint32_t> v(n, 0);
                for (size_t r = 0; r < kernel.rows; ++r) {
                    if (coeffs[r] == 0) continue;
                    for (size_t j = 0; j < n; ++j)
                        v[j] = addp(v[j], mulp(coeffs[r], kernel.at(r, j), p), p);
                }
                found = proper_spin(p, actions, n, v, out);
                return found;
            });
            if (found) return out;

            // Dual-side kernel: functionals w with ft * w^T = 0.
            const FpMatrix dual_kernel = fp_nullspace(ft);
            require_internal(dual_kernel.rows >= 1, "dual kernel must match the primal");
            std::vector<uint32_t> w(n);
            for (size_t j = 0; j < n; ++j) w[j] = dual_kernel.at(0, j);
            Echelon dual = spin(p, transposed, w);
            if (dual.rank() == n) {
                out.simple = true;
                return out;
            }
            // The annihilator of the dual-invariant subspace is invariant.
            out.simple = false;
            out.basis = fp_nullspace(dual.matrix());
            require_internal(out.basis.rows > 0 && out.basis.rows < n,
                             "dual spin must yield a proper annihilator");
            return out;
        }
    }

    // Deterministic last resort: exhaustive spinning is always correct.
    exhaustive_search(p, actions, n, out);
    return out;
}

std::vector<uint32_t> reduce_against(const FpRref& basis, std::vector<uint32_t> v,
                                     long long p) {
    for (size_t r = 0; r < basis.pivots.size(); ++r) {
        const uint32_t lead = v[basis.pivots[r]];
        if (lead == 0) continue;
        for (size_t k = 0; k < v.size(); ++k)
            v[k] = subp(v[k], mulp(lead, basis.mat.at(r, k), p), p);
    }
    return v;
}

void chop_rec(long long p, const std::vector<FpMatrix>& actions, size_t n,
              std::mt19937_64& rng, std::map<long long, long long>& degrees) {
    if (n == 0) return;
    if (n == 1 || actions.empty()) {
        // With no acting generators every line is invariant.
        degrees[1] += static_cast<long long>(n);
        return;
    }
    SearchOutcome outcome = find_submodule(p, actions, n, rng);
    if (outcome.simple) {
        degrees[static_cast<long long>(n)] += 1;
        return;
    }

    const FpRref basis = fp_rref(outcome.basis);
    const size_t k = basis.rank();
    require_internal(k > 0 && k < n, "submodule basis must be proper and nonzero");

    std::vector<size_t> complement;
    for (size_t j = 0, next = 0; j < n; ++j) {
        if (next < basis.pivots.size() && basis.pivots[next] == j)
            ++next;
        else
            complement.push_back(j);
    }

    std::vector<FpMatrix> sub_actions, quot_actions;
    for (const FpMatrix& a : actions) {
        FpMatrix s(p, k, k);
        for (size_t i = 0; i < k; ++i) {
            std::vector<uint32_t> row(n);
            for (size_t j = 0; j < n; ++j) row[j] = basis.mat.at(i, j);
            const std::vector<uint32_t> image = apply_row(row, a);
            for (size_t j = 0; j < k; ++j) s.at(i, j) = image[basis.pivots[j]];
            const std::vector<uint32_t> residue = reduce_against(basis, image, p);
            for (uint32_t e : residue)
                require_internal(e == 0, "claimed submodule is not invariant");
        }
        sub_actions.push_back(std::move(s));

        FpMatrix q(p, n - k, n - k);
        for (size_t i = 0; i < n - k; ++i) {
            std::vector<uint32_t> row(n, 0);
            for (size_t j = 0; j < n; ++j) row[j] = a.at(complement[i], j);
            const std::vector<uint32_t> residue = reduce_against(basis, row, p);
            for (size_t j = 0; j < n - k; ++j) q.at(i, j) = residue[complement[j]];
        }
        quot_actions.push_back(std::move(q));
    }

    chop_rec(p, sub_actions, k, rng, degrees);
    chop_rec(p, quot_actions, n - k, rng, degrees);
}

}  // namespace

void ModuleRep::validate() const {
    require_prime(p, "ModuleRep");
    if (dimension < 0) throw_input("module dimension must be non-negative");
    for (const FpMatrix& a : generator_actions) {
        if (a.p != p) throw_input("module action over the wrong field");
        if (a.rows != a.cols || a.rows != static_cast<size_t>(dimension))
            throw_input("module action has the wrong shape");
        if (fp_rank(a) != static_cast<size_t>(dimension))
            throw_input("module action is not invertible");
    }
}

long long SimpleDegreeReport::total() const {
    long long sum = 0;
    for (const auto& [degree, multiplicity] : degrees) sum += degree * multiplicity;
    return sum;
}

void SimpleDegreeReport::validate() const {
    long long max_seen = 0;
    for (const auto& [degree, multiplicity] : degrees) {
        if (degree < 1 || multiplicity < 1)
            throw_internal("degree report entries must be positive");
        max_seen = std::max(max_seen, degree);
    }
    if (max_seen != max_degree) throw_internal("max_degree out of sync");
}

std::string simple_degree_report_to_json(const SimpleDegreeReport& r) {
    nlohmann::json degrees = nlohmann::json::object();
    for (const auto& [degree, multiplicity] : r.degrees)
        degrees[std::to_string(degree)] = multiplicity;
    nlohmann::json out;
    out["degrees"] = degrees;
    out["max_degree"] = r.max_degree;
    return out.dump();
}

long long default_seed() {
    const char* env = std::getenv("GRADLAB_SEED");
    if (env && *env) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw_input("GRADLAB_SEED must be a positive integer");
    }
    return 1729;
}

ModuleRep regular_module(const FiniteGroup& Q, long long p, long long max_order) {
    require_prime(p, "regular_module");
    if (Q.order > max_order)
        throw_resource("regular module of order " + std::to_string(Q.order) +
                       " exceeds the cap " + std::to_string(max_order));
    ModuleRep M;
    M.p = p;
    M.dimension = Q.order;
    for (long long s : Q.generators) {
        FpMatrix a(p, static_cast<size_t>(Q.order), static_cast<size_t>(Q.order));
        for (long long g = 0; g < Q.order; ++g)
            a.at(static_cast<size_t>(g), static_cast<size_t>(Q.multiply(g, s))) = 1;
        M.generator_actions.push_back(std::move(a));
    }
    M.validate();
    return M;
}

SimpleDegreeReport chop(const ModuleRep& M, long long seed) {
    M.validate();
    std::mt19937_64 rng(static_cast<uint64_t>(seed));
    SimpleDegreeReport report;
    chop_rec(M.p, M.generator_actions, static_cast<size_t>(M.dimension), rng,
             report.degrees);
    for (const auto& [degree, multiplicity] : report.degrees) {
        (void)multiplicity;
        report.max_degree = std::max(report.max_degree, degree);
    }
    report.validate();
    require_internal(report.total() == M.dimension,
                     "composition factor dimensions must sum to the module dimension");
    return report;
}

SimpleDegreeReport chop(const ModuleRep& M) { return chop(M, default_seed()); }

Lemma32Record lemma32_check(const FiniteGroup& Q, long long p, long long max_order) {
    const SimpleDegreeReport report = chop(regular_module(Q, p, max_order));
    Lemma32Record rec;
    rec.max_degree = report.max_degree;
    rec.exponent = exponent(Q);
    rec.order = Q.order;
    rec.bound = std::sqrt(static_cast<double>(rec.exponent) * static_cast<double>(rec.order));
    rec.pass = rec.max_degree * rec.max_degree <= rec.exponent * rec.order;
    return rec;
}

}  // namespace gradlab
