#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctree/errors.hpp"

namespace ctree {

// Quantifier-prefix words over the two-letter alphabet {A, E}, A = universal,
// E = existential. Pattern words add repetition: "A" allows zero or one A,
// "A3" up to three, "A*" any number; same for E. A pattern denotes the
// concatenation of its token languages, so every pattern language is closed
// under deleting letters.
using Word = std::string;

// Complete DFA over {A, E}. State 0 is not special; `dead` marks the sink.
struct Dfa {
    std::vector<std::array<std::uint32_t, 2>> next; // [state][letter], 0 = A, 1 = E
    std::vector<char> accept;
    std::uint32_t start = 0;

    bool accepts(const Word& w) const;
    std::size_t states() const { return next.size(); }
};

struct PrefixLanguage {
    struct Generator {
        bool raw = false;   // raw words denote exactly {word}, no closure
        std::string text;   // pattern ("E*A2") or raw word ("AE")
    };

    std::vector<Generator> generators;
    Dfa dfa;

    // Throws semantic_error on an empty generator list or a bad pattern.
    static PrefixLanguage patterns(std::vector<std::string> pats);
    static PrefixLanguage raw_words(std::vector<std::string> words);
    static PrefixLanguage from_generators(std::vector<Generator> gens);

    bool member(const Word& w) const { return dfa.accepts(w); }
};

// Union keeps both generator lists; the automaton is rebuilt.
PrefixLanguage union_of(const PrefixLanguage& a, const PrefixLanguage& b);

bool prefix_member(const Word& w, const PrefixLanguage& lang);

// Language inclusion via the product automaton. On failure the returned
// witness is the shortest word of L1 outside L2 (lexicographically least,
// A before E, among the shortest).
bool prefix_subset(const PrefixLanguage& l1, const PrefixLanguage& l2,
                   Word* witness = nullptr);

// True iff deleting any letters from any member stays in the language.
// Decided on the automaton (single-deletion closure) and cross-checked by
// enumerating members up to length 6.
bool is_subword_closed(const PrefixLanguage& lang);

// All members of length <= max_len in length-then-lexicographic order.
std::vector<Word> expand_words(const PrefixLanguage& lang, std::size_t max_len);

// The inclusion test bound used by the bounded-enumeration invariant:
// |dfa(L1)| * |dfa(L2)| states.
std::size_t inclusion_test_bound(const PrefixLanguage& l1, const PrefixLanguage& l2);

// Stock languages used by the classifier.
PrefixLanguage lang_exists_star();                // E*
PrefixLanguage lang_exists_star_forall_star();    // E*A*
PrefixLanguage lang_exists_star_forall2_exists(); // E*A2E*
PrefixLanguage lang_exists_star_forall2();        // E*A2
PrefixLanguage lang_exists_forall_exists();       // E*AE*

} // namespace ctree
