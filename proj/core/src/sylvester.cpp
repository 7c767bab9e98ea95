#include "gradlab/sylvester.hpp"

#include "gradlab/arith.hpp"
#include "gradlab/fox.hpp"

namespace gradlab {

void SylvesterValue::validate() const {
    if (quotient_order < 1) throw_internal("sylvester value lost its quotient order");
    if (p < 2) throw_internal("sylvester value lost its prime");
    if (value.num < 0) throw_internal("negative normalized dimension");
    if (quotient_order % value.den != 0)
        throw_internal("sylvester denominator does not divide the quotient order");
}

FpMatrix push_to_quotient(const GroupRingMatrix& M, const CosetTable& T, long long p) {
    require_prime(p, "push_to_quotient");
    M.validate();
    if (!is_normal(T)) throw_precondition("push_to_quotient: the coset table is not normal");

    const long long n = T.index;
    const long long width = static_cast<long long>(T.width());
    FpMatrix out(p, static_cast<size_t>(M.rows * n), static_cast<size_t>(M.cols * n));
    for (long long r = 0; r < M.rows; ++r)
        for (long long c = 0; c < M.cols; ++c)
            for (const auto& [w, coefficient] : M.at(r, c).terms) {
                if (!w.empty() && 2 * w.max_generator() + 1 >= width)
                    throw_input(
                        "push_to_quotient: an entry uses a generator outside the "
                        "table's alphabet");
                Int reduced = coefficient % p;
                if (reduced < 0) reduced += p;
                const uint32_t cm = reduced.convert_to<uint32_t>();
                if (cm == 0) continue;
                for (long long x = 0; x < n; ++x) {
                    const long long y = T.trace(x, w);
                    uint32_t& cell = out.at(static_cast<size_t>(r * n + x),
                                            static_cast<size_t>(c * n + y));
                    cell = static_cast<uint32_t>(
                        (static_cast<uint64_t>(cell) + cm) % static_cast<uint64_t>(p));
                }
            }
    return out;
}

SylvesterValue sylvester_dim(const GroupRingMatrix& M, const CosetTable& T, long long p) {
    const FpMatrix pushed = push_to_quotient(M, T, p);
    const long long n = T.index;
    const long long rank = static_cast<long long>(fp_rank(pushed));
    SylvesterValue v;
    v.value = Rational(M.cols * n - rank, n);
    v.quotient_order = n;
    v.p = p;
    v.validate();
    return v;
}

SylvesterValue augmentation_dim(const Presentation& P, const CosetTable& T, long long p) {
    P.validate();
    if (P.generator_count() != T.presentation.generator_count())
        throw_input(
            "augmentation_dim: presentation and coset table disagree on the "
            "generator count");
    for (const Word& r : P.relators)
        for (long long c = 0; c < T.index; ++c)
            if (T.trace(c, r) != c)
                throw_input(
                    "augmentation_dim: the coset table is not a quotient of the "
                    "presented group");
    return sylvester_dim(fox_jacobian(P), T, p);
}

SylvesterValue boundpower_check(const CosetTable& T, const Word& g, long long p, long long k) {
    require_prime(p, "boundpower_check");
    if (k < 0) throw_input("boundpower_check: the exponent k must be non-negative");
    if (!is_normal(T)) throw_precondition("boundpower_check: the coset table is not normal");
    if (!g.empty() && 2 * g.max_generator() + 1 >= static_cast<long long>(T.width()))
        throw_input("boundpower_check: the word uses a generator outside the table's alphabet");

    // The quotient acts on the cosets regularly, so the order of the image of
    // g equals the length of the basepoint's cycle.
    long long order = 1;
    for (long long c = T.trace(0, g); c != 0; c = T.trace(c, g)) {
        ++order;
        if (order > T.index) throw_internal("boundpower_check: runaway cycle in a validated table");
    }

    long long pk = 0;
    try {
        pk = checked_pow(p, k, T.index);
    } catch (const GradlabError&) {
        throw_precondition(
            "boundpower_check: p^k exceeds the quotient order, but the image order "
            "must divide it");
    }
    if (order != pk)
        throw_precondition("boundpower_check: the image of the word has order " +
                           std::to_string(order) + ", not p^k = " + std::to_string(pk));

    GroupRingMatrix M(1, 1);
    M.at(0, 0) = GroupRingElement::monomial(g) - GroupRingElement::one();
    SylvesterValue v = sylvester_dim(M, T, p);
    require_internal(v.value == Rational(1, pk),
                     "boundpower_check: computed dimension deviates from 1/p^k");
    return v;
}

}  // namespace gradlab
