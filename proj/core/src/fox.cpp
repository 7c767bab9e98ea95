#include "gradlab/fox.hpp"

#include "gradlab/errors.hpp"

namespace gradlab {

GroupRingElement fox_derivative(const Word& w, int generator) {
    if (generator < 0) throw_input("fox_derivative: generator index must be non-negative");
    GroupRingElement out;
    std::vector<Letter> prefix;
    prefix.reserve(w.length());
    for (Letter l : w.letters) {
        const bool mine = letter_gen(l) == generator;
        if (mine && !letter_is_inverse(l)) out.add_term(Word::from_letters(prefix), 1);
        prefix.push_back(l);
        if (mine && letter_is_inverse(l)) out.add_term(Word::from_letters(prefix), -1);
    }
    return out;
}

GroupRingMatrix fox_jacobian(const Presentation& P) {
    P.validate();
    const long long gens = P.generator_count();
    GroupRingMatrix M(static_cast<long long>(P.relators.size()), gens);
    for (size_t r = 0; r < P.relators.size(); ++r)
        for (long long i = 0; i < gens; ++i)
            M.at(static_cast<long long>(r), i) =
                fox_derivative(P.relators[r], static_cast<int>(i));
    return M;
}

}  // namespace gradlab
