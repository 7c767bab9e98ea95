#include "gradlab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gradlab/arith.hpp"

namespace gradlab {

namespace {

constexpr long long kMaxRelatorLength = 1'000'000;

// Canonical form of a relator up to rotation and inversion: the lenlex-least
// rotation of w and of w^-1. Used only for duplicate detection in simplify().
Word cyclic_canonical(const Word& w) {
    Word best = w;
    for (const Word& v : {w, inverse(w)}) {
        std::vector<Letter> ls = v.letters;
        for (size_t r = 0; r < ls.size(); ++r) {
            std::rotate(ls.begin(), ls.begin() + 1, ls.end());
            Word rot;
            rot.letters = ls;
            if (rot < best) best = rot;
        }
    }
    return best;
}

}  // namespace

void Presentation::push_relator(const Word& w) {
    Word r = cyclically_reduce(Word::from_letters(w.letters));
    if (r.empty()) return;
    if (r.max_generator() >= generator_count())
        throw_input("relator uses a generator outside the presentation");
    relators.push_back(std::move(r));
}

void Presentation::validate() const {
    std::set<std::string> seen(generator_names.begin(), generator_names.end());
    if (seen.size() != generator_names.size())
        throw_internal("presentation has duplicate generator names");
    for (const std::string& n : generator_names)
        if (n.empty()) throw_internal("presentation has an empty generator name");
    for (const Word& r : relators) {
        if (r.empty()) throw_internal("presentation stores an empty relator");
        if (!r.is_freely_reduced()) throw_internal("presentation stores an unreduced relator");
        if (!(cyclically_reduce(r) == r))
            throw_internal("presentation stores a non-cyclically-reduced relator");
        if (r.max_generator() >= generator_count())
            throw_internal("relator uses a generator outside the presentation");
    }
}

std::vector<std::string> default_generator_names(int count) {
    if (count < 0) throw_input("negative generator count");
    std::vector<std::string> names;
    names.reserve(count);
    if (count <= 26) {
        for (int i = 0; i < count; ++i) names.push_back(std::string(1, char('a' + i)));
    } else {
        for (int i = 0; i < count; ++i) names.push_back("x" + std::to_string(i));
    }
    return names;
}

Presentation free_group(int d) {
    if (d < 1) throw_input("free_group: need at least one generator");
    Presentation P;
    P.generator_names = default_generator_names(d);
    return P;
}

Presentation adjoin_power_relator(const Presentation& P, const Word& g, long long p,
                                  long long k) {
    if (g.empty()) throw_input("adjoin_power_relator: trivial word");
    if (g.max_generator() >= P.generator_count())
        throw_input("adjoin_power_relator: word uses unknown generators");
    require_prime(p, "adjoin_power_relator");
    if (k < 0) throw_input("adjoin_power_relator: negative exponent");
    long long e = checked_pow(p, k, kMaxRelatorLength);
    if (e * static_cast<long long>(g.length()) > kMaxRelatorLength)
        throw_resource("adjoin_power_relator: relator would exceed the length cap");
    Presentation out = P;
    out.push_relator(pow(g, e));
    return out;
}

Presentation surface_group(int genus) {
    if (genus < 1) throw_input("surface_group: genus must be >= 1");
    Presentation P = free_group(2 * genus);
    Word rel;
    for (int i = 0; i < genus; ++i) {
        Word a = Word::single(make_letter(2 * i, +1));
        Word b = Word::single(make_letter(2 * i + 1, +1));
        rel = rel * commutator(a, b);
    }
    P.push_relator(rel);
    return P;
}

const char* const kWordEnumerationNote =
    "length-lexicographic enumeration of nontrivial freely reduced words, "
    "letter order a < a^-1 < b < b^-1 < ...";

std::vector<Word> enumerate_reduced_words(int d, size_t count) {
    if (d < 1 && count > 0) throw_input("enumerate_reduced_words: no generators");
    std::vector<Word> out;
    out.reserve(count);
    std::vector<Letter> current;
    // Depth-first traversal emits length-L words in lexicographic order; L
    // grows until enough words have been produced.
    auto extend = [&](auto&& self, size_t target_len) -> bool {
        if (current.size() == target_len) {
            Word w;
            w.letters = current;
            out.push_back(std::move(w));
            return out.size() >= count;
        }
        for (Letter l = 0; l < 2 * d; ++l) {
            if (!current.empty() && current.back() == letter_inverse(l)) continue;
            current.push_back(l);
            bool done = self(self, target_len);
            current.pop_back();
            if (done) return true;
        }
        return false;
    };
    for (size_t len = 1; out.size() < count; ++len) {
        if (len > 64) throw_resource("enumerate_reduced_words: unreasonable word count");
        current.clear();
        if (extend(extend, len)) break;
    }
    return out;
}

Presentation schlage_puchta_truncation(int d, long long p,
                                       const std::vector<long long>& exponents) {
    if (d < 2) throw_input("schlage_puchta_truncation: need d >= 2");
    require_prime(p, "schlage_puchta_truncation");
    Presentation P = free_group(d);
    std::vector<Word> words = enumerate_reduced_words(d, exponents.size());
    for (size_t i = 0; i < exponents.size(); ++i)
        P = adjoin_power_relator(P, words[i], p, exponents[i]);
    return P;
}

Presentation simplify(const Presentation& P) {
    Presentation cur = P;
    cur.validate();
    for (;;) {
        // Drop duplicates up to rotation and inversion, keeping first
        // occurrences in order.
        std::vector<Word> kept;
        std::set<Word> seen;
        for (const Word& r : cur.relators)
            if (seen.insert(cyclic_canonical(r)).second) kept.push_back(r);
        cur.relators = std::move(kept);

        // A length-1 relator says its generator is trivial: delete the
        // generator everywhere and restart.
        int doomed = -1;
        for (const Word& r : cur.relators)
            if (r.length() == 1) {
                doomed = letter_gen(r.letters[0]);
                break;
            }
        if (doomed < 0) break;

        Presentation next;
        next.generator_names = cur.generator_names;
        next.generator_names.erase(next.generator_names.begin() + doomed);
        for (const Word& r : cur.relators) {
            std::vector<Letter> ls;
            for (Letter l : r.letters) {
                int g = letter_gen(l);
                if (g == doomed) continue;  // the generator became trivial
                ls.push_back(make_letter(g > doomed ? g - 1 : g, letter_sign(l)));
            }
            next.push_relator(Word::from_letters(std::move(ls)));
        }
        cur = std::move(next);
    }
    cur.validate();
    return cur;
}

// --- text format -------------------------------------------------------------

namespace {

class WordParser {
public:
    WordParser(const std::string& text, const std::vector<std::string>& names)
        : text_(text) {
        for (size_t i = 0; i < names.size(); ++i) {
            if (names[i].size() == 1 && names[i][0] >= 'a' && names[i][0] <= 'z')
                index_[names[i][0]] = static_cast<int>(i);
        }
    }

    Word parse() {
        Word w = parse_sequence();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return w;
    }

private:
    Word parse_sequence(char stop1 = '\0', char stop2 = '\0') {
        Word acc;
        for (;;) {
            skip_ws();
            if (pos_ == text_.size()) return acc;
            char c = text_[pos_];
            if (c == stop1 || c == stop2) return acc;
            acc = acc * parse_term();
        }
    }

    Word parse_term() {
        Word atom = parse_atom();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            return pow(atom, parse_integer());
        }
        return atom;
    }

    Word parse_atom() {
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Word inner = parse_sequence(')');
            expect(')');
            return inner;
        }
        if (c == '[') {
            ++pos_;
            Word u = parse_sequence(',', ']');
            expect(',');
            Word v = parse_sequence(']');
            expect(']');
            return commutator(u, v);
        }
        if (c == ')' || c == ']' || c == ',' || c == '^')
            fail(std::string("unexpected '") + c + "'");
        char lower = (c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : c;
        auto it = index_.find(lower);
        if (it == index_.end()) fail(std::string("unknown generator '") + c + "'");
        ++pos_;
        return Word::single(make_letter(it->second, (c >= 'A' && c <= 'Z') ? -1 : +1));
    }

    long long parse_integer() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && text_[start] == '-'))
            fail("malformed exponent");
        long long v;
        try {
            v = std::stoll(text_.substr(start, pos_ - start));
        } catch (const std::exception&) {
            fail("exponent out of range");
        }
        if (v > kMaxRelatorLength || v < -kMaxRelatorLength) fail("exponent out of range");
        return v;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw_input("word '" + text_ + "', position " + std::to_string(pos_) + ": " + why);
    }

    const std::string& text_;
    std::map<char, int> index_;
    size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
    return WordParser(text, names).parse();
}

std::string print_word(const Word& w, const std::vector<std::string>& names) {
    bool compact = true;
    for (const std::string& n : names)
        compact = compact && n.size() == 1 && n[0] >= 'a' && n[0] <= 'z';
    std::string out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        Letter l = w.letters[i];
        int g = letter_gen(l);
        if (g >= static_cast<int>(names.size())) throw_input("word uses unnamed generators");
        if (compact) {
            char c = names[g][0];
            out += letter_is_inverse(l) ? char(c - 'a' + 'A') : c;
        } else {
            if (i > 0) out += ' ';
            out += names[g];
            if (letter_is_inverse(l)) out += "^-1";
        }
    }
    return out;
}

Presentation parse_presentation(const std::string& text) {
    Presentation P;
    bool saw_gens = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        auto fail = [&](const std::string& why) {
            throw_input("presentation line " + std::to_string(lineno) + ": " + why);
        };
        if (line.rfind("gens:", 0) == 0) {
            if (saw_gens) fail("repeated gens: line");
            saw_gens = true;
            std::istringstream gs(line.substr(5));
            std::string name;
            while (gs >> name) {
                if (name.size() != 1 || name[0] < 'a' || name[0] > 'z')
                    fail("generator names must be single lowercase letters, got '" + name + "'");
                P.generator_names.push_back(name);
            }
            std::set<std::string> uniq(P.generator_names.begin(), P.generator_names.end());
            if (uniq.size() != P.generator_names.size()) fail("duplicate generator name");
            if (P.generator_names.empty()) fail("gens: line names no generators");
        } else if (line.rfind("rel:", 0) == 0) {
            if (!saw_gens) fail("rel: before gens:");
            try {
                P.push_relator(parse_word(line.substr(4), P.generator_names));
            } catch (const GradlabError& e) {
                fail(e.what());
            }
        } else {
            fail("expected 'gens:' or 'rel:'");
        }
    }
    if (!saw_gens) throw_input("presentation has no gens: line");
    P.validate();
    return P;
}

Presentation parse_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_input("cannot open presentation file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

std::string format_presentation(const Presentation& P) {
    std::string out = "gens:";
    for (const std::string& n : P.generator_names) out += " " + n;
    out += "\n";
    for (const Word& r : P.relators) out += "rel: " + print_word(r, P.generator_names) + "\n";
    return out;
}

}  // namespace gradlab
