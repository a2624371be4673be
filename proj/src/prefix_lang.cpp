#include "ctree/prefix_lang.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <map>
#include <set>

namespace ctree {

namespace {

constexpr int letter_index(char c) { return c == 'A' ? 0 : 1; }
constexpr char letter_of(int i) { return i == 0 ? 'A' : 'E'; }

void check_word(const Word& w) {
    for (char c : w)
        if (c != 'A' && c != 'E')
            throw semantic_error("prefix words use only 'A' and 'E', got '" + std::string(1, c) + "'");
}

// NFA with epsilon edges, used only while compiling generators.
struct Nfa {
    struct State {
        std::vector<std::pair<int, std::uint32_t>> edges; // (letter, to)
        std::vector<std::uint32_t> eps;
        bool accept = false;
    };
    std::vector<State> states;
    std::uint32_t start = 0;

    std::uint32_t add() {
        states.push_back({});
        return static_cast<std::uint32_t>(states.size() - 1);
    }
};

struct PatternToken {
    int letter;        // 0 = A, 1 = E
    bool star = false;
    std::size_t count = 1;
};

std::vector<PatternToken> parse_pattern(const std::string& pat) {
    std::vector<PatternToken> out;
    std::size_t i = 0;
    while (i < pat.size()) {
        char c = pat[i++];
        if (c != 'A' && c != 'E')
            throw semantic_error("bad pattern '" + pat + "': expected 'A' or 'E'");
        PatternToken tok;
        tok.letter = letter_index(c);
        if (i < pat.size() && pat[i] == '*') {
            tok.star = true;
            ++i;
        } else if (i < pat.size() && std::isdigit(static_cast<unsigned char>(pat[i]))) {
            std::size_t n = 0;
            while (i < pat.size() && std::isdigit(static_cast<unsigned char>(pat[i])))
                n = n * 10 + static_cast<std::size_t>(pat[i++] - '0');
            if (n == 0) throw semantic_error("bad pattern '" + pat + "': zero repetition");
            if (n > 64) throw semantic_error("bad pattern '" + pat + "': repetition too large");
            tok.count = n;
        }
        out.push_back(tok);
    }
    return out;
}

// Builds the NFA for one generator rooted at a fresh start state.
std::uint32_t build_generator(Nfa& nfa, const PrefixLanguage::Generator& gen) {
    std::uint32_t start = nfa.add();
    if (gen.raw) {
        check_word(gen.text);
        std::uint32_t cur = start;
        for (char c : gen.text) {
            std::uint32_t nxt = nfa.add();
            nfa.states[cur].edges.push_back({letter_index(c), nxt});
            cur = nxt;
        }
        nfa.states[cur].accept = true;
        return start;
    }
    // Pattern: chain token fragments. Every token language contains the
    // empty word, so each fragment boundary is linked by an epsilon edge
    // and the final boundary accepts.
    std::vector<PatternToken> toks = parse_pattern(gen.text);
    std::uint32_t cur = start;
    for (const PatternToken& tok : toks) {
        if (tok.star) {
            nfa.states[cur].edges.push_back({tok.letter, cur});
        } else {
            std::uint32_t prev = cur;
            for (std::size_t i = 0; i < tok.count; ++i) {
                std::uint32_t nxt = nfa.add();
                nfa.states[prev].edges.push_back({tok.letter, nxt});
                nfa.states[prev].eps.push_back(nxt);
                prev = nxt;
            }
            cur = prev;
        }
    }
    nfa.states[cur].accept = true;
    return start;
}

void eps_closure(const Nfa& nfa, std::set<std::uint32_t>& states) {
    std::vector<std::uint32_t> work(states.begin(), states.end());
    while (!work.empty()) {
        std::uint32_t s = work.back();
        work.pop_back();
        for (std::uint32_t t : nfa.states[s].eps)
            if (states.insert(t).second) work.push_back(t);
    }
}

Dfa determinize(const Nfa& nfa) {
    Dfa dfa;
    std::map<std::set<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::set<std::uint32_t>> sets;

    auto intern = [&](std::set<std::uint32_t> s) {
        eps_closure(nfa, s);
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(sets.size());
        ids.emplace(s, id);
        sets.push_back(std::move(s));
        dfa.next.push_back({0, 0});
        bool acc = false;
        for (std::uint32_t q : sets[id])
            if (nfa.states[q].accept) acc = true;
        dfa.accept.push_back(acc ? 1 : 0);
        return id;
    };

    dfa.start = intern({nfa.start});
    for (std::uint32_t id = 0; id < sets.size(); ++id) {
        for (int letter = 0; letter < 2; ++letter) {
            std::set<std::uint32_t> tgt;
            for (std::uint32_t q : sets[id])
                for (const auto& [l, to] : nfa.states[q].edges)
                    if (l == letter) tgt.insert(to);
            dfa.next[id][static_cast<std::size_t>(letter)] = intern(std::move(tgt));
        }
    }
    return dfa;
}

Dfa compile(const std::vector<PrefixLanguage::Generator>& gens) {
    Nfa nfa;
    std::uint32_t super = nfa.add();
    for (const auto& g : gens) {
        std::uint32_t s = build_generator(nfa, g);
        nfa.states[super].eps.push_back(s);
    }
    nfa.start = super;
    return determinize(nfa);
}

// NFA accepting exactly the words obtained by deleting one letter from a
// member of `dfa`'s language, determinized back to a DFA.
Dfa one_deletion(const Dfa& dfa) {
    Nfa nfa;
    std::uint32_t n = static_cast<std::uint32_t>(dfa.states());
    // state layout: q -> q (no deletion yet), n + q (deletion spent)
    for (std::uint32_t i = 0; i < 2 * n; ++i) nfa.add();
    for (std::uint32_t q = 0; q < n; ++q) {
        for (int letter = 0; letter < 2; ++letter) {
            std::uint32_t to = dfa.next[q][static_cast<std::size_t>(letter)];
            nfa.states[q].edges.push_back({letter, to});
            nfa.states[n + q].edges.push_back({letter, n + to});
            nfa.states[q].eps.push_back(n + to); // guess the deleted letter here
        }
        nfa.states[n + q].accept = dfa.accept[q] != 0;
    }
    nfa.start = dfa.start;
    return determinize(nfa);
}

bool dfa_subset(const Dfa& a, const Dfa& b, Word* witness) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    std::deque<std::pair<std::uint32_t, std::uint32_t>> queue;
    std::map<std::pair<std::uint32_t, std::uint32_t>,
             std::pair<std::pair<std::uint32_t, std::uint32_t>, char>> parent;

    auto bad = [&](std::pair<std::uint32_t, std::uint32_t> p) {
        return a.accept[p.first] && !b.accept[p.second];
    };

    std::pair<std::uint32_t, std::uint32_t> start{a.start, b.start};
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        auto p = queue.front();
        queue.pop_front();
        if (bad(p)) {
            if (witness) {
                Word w;
                auto cur = p;
                while (cur != start) {
                    auto [prev, letter] = parent.at(cur);
                    w.push_back(letter);
                    cur = prev;
                }
                std::reverse(w.begin(), w.end());
                *witness = std::move(w);
            }
            return false;
        }
        for (int letter = 0; letter < 2; ++letter) {
            std::pair<std::uint32_t, std::uint32_t> q{
                a.next[p.first][static_cast<std::size_t>(letter)],
                b.next[p.second][static_cast<std::size_t>(letter)]};
            if (seen.insert(q).second) {
                parent[q] = {p, letter_of(letter)};
                queue.push_back(q);
            }
        }
    }
    return true;
}

} // namespace

bool Dfa::accepts(const Word& w) const {
    std::uint32_t q = start;
    for (char c : w) {
        if (c != 'A' && c != 'E') throw semantic_error("prefix words use only 'A' and 'E'");
        q = next[q][static_cast<std::size_t>(letter_index(c))];
    }
    return accept[q] != 0;
}

PrefixLanguage PrefixLanguage::patterns(std::vector<std::string> pats) {
    std::vector<Generator> gens;
    for (auto& p : pats) gens.push_back({false, std::move(p)});
    return from_generators(std::move(gens));
}

PrefixLanguage PrefixLanguage::raw_words(std::vector<std::string> words) {
    std::vector<Generator> gens;
    for (auto& w : words) gens.push_back({true, std::move(w)});
    return from_generators(std::move(gens));
}

PrefixLanguage PrefixLanguage::from_generators(std::vector<Generator> gens) {
    if (gens.empty()) throw semantic_error("prefix language needs at least one generator");
    PrefixLanguage lang;
    lang.generators = std::move(gens);
    lang.dfa = compile(lang.generators);
    return lang;
}

PrefixLanguage union_of(const PrefixLanguage& a, const PrefixLanguage& b) {
    std::vector<PrefixLanguage::Generator> gens = a.generators;
    gens.insert(gens.end(), b.generators.begin(), b.generators.end());
    return PrefixLanguage::from_generators(std::move(gens));
}

bool prefix_member(const Word& w, const PrefixLanguage& lang) {
    check_word(w);
    return lang.member(w);
}

bool prefix_subset(const PrefixLanguage& l1, const PrefixLanguage& l2, Word* witness) {
    return dfa_subset(l1.dfa, l2.dfa, witness);
}

std::vector<Word> expand_words(const PrefixLanguage& lang, std::size_t max_len) {
    std::vector<Word> out;
    std::vector<Word> frontier{""};
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (const Word& w : frontier)
            if (lang.member(w)) out.push_back(w);
        if (len == max_len) break;
        std::vector<Word> next;
        next.reserve(frontier.size() * 2);
        for (const Word& w : frontier) {
            next.push_back(w + "A");
            next.push_back(w + "E");
        }
        frontier = std::move(next);
    }
    return out;
}

std::size_t inclusion_test_bound(const PrefixLanguage& l1, const PrefixLanguage& l2) {
    return l1.dfa.states() * l2.dfa.states();
}

bool is_subword_closed(const PrefixLanguage& lang) {
    Dfa deleted = one_deletion(lang.dfa);
    bool closed = dfa_subset(deleted, lang.dfa, nullptr);

    // Definitional cross-check on short members. A closed verdict must agree
    // with direct single-deletion checks; an open verdict may have its
    // witness beyond the enumeration horizon.
    if (closed) {
        for (const Word& w : expand_words(lang, 6)) {
            for (std::size_t i = 0; i < w.size(); ++i) {
                Word u = w.substr(0, i) + w.substr(i + 1);
                if (!lang.member(u))
                    throw internal_error("subword closure disagrees with enumeration on '" + w + "'");
            }
        }
    }
    return closed;
}

PrefixLanguage lang_exists_star() { return PrefixLanguage::patterns({"E*"}); }
PrefixLanguage lang_exists_star_forall_star() { return PrefixLanguage::patterns({"E*A*"}); }
PrefixLanguage lang_exists_star_forall2_exists() { return PrefixLanguage::patterns({"E*A2E*"}); }
PrefixLanguage lang_exists_star_forall2() { return PrefixLanguage::patterns({"E*A2"}); }
PrefixLanguage lang_exists_forall_exists() { return PrefixLanguage::patterns({"E*AE*"}); }

} // namespace ctree
