#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ctree/errors.hpp"

namespace ctree {

enum class SymbolKind { predicate, function };

struct Symbol {
    std::string name;
    SymbolKind kind = SymbolKind::predicate;
    std::size_t arity = 1;
};

// A finite vocabulary of predicate and function symbols. Nullary predicate
// symbols are never allowed; nullary function symbols (constants) are gated
// behind allow_constants and default to off.
struct Signature {
    std::vector<Symbol> symbols;
    bool equality_mode = false;
    bool declared_infinite = false;
    bool allow_constants = false;

    const Symbol* find(std::string_view name) const;
    const Symbol* find(std::string_view name, SymbolKind kind) const;
    const Symbol* first_predicate() const;
    bool has_predicates() const;
    bool has_functions() const;

    Signature& add_predicate(std::string name, std::size_t arity);
    Signature& add_function(std::string name, std::size_t arity);

    // Throws semantic_error on duplicate names, nullary predicates, or
    // nullary functions without allow_constants.
    void validate() const;
};

// First-order term: a variable x_i or an application f(t1,...,tk).
// A term is a variable exactly when `symbol` is empty.
struct Term {
    std::string symbol;
    std::vector<Term> args;
    std::size_t var = 0;

    static Term variable(std::size_t i) {
        Term t;
        t.var = i;
        return t;
    }
    static Term apply(std::string sym, std::vector<Term> args_) {
        Term t;
        t.symbol = std::move(sym);
        t.args = std::move(args_);
        return t;
    }
    bool is_var() const { return symbol.empty(); }
};

int compare(const Term& a, const Term& b);
bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }
inline bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

void collect_vars(const Term& t, std::set<std::size_t>& out);

// Atomic formula: t1 = t2 (equality mode only) or r(t1,...,tk).
struct Atom {
    bool eq = false;
    std::string symbol;     // predicate name; empty for equality
    std::vector<Term> args;

    static Atom equality(Term l, Term r) {
        Atom a;
        a.eq = true;
        a.args = {std::move(l), std::move(r)};
        return a;
    }
    static Atom predicate(std::string sym, std::vector<Term> args_) {
        Atom a;
        a.symbol = std::move(sym);
        a.args = std::move(args_);
        return a;
    }
};

int compare(const Atom& a, const Atom& b);
bool operator==(const Atom& a, const Atom& b);
inline bool operator!=(const Atom& a, const Atom& b) { return !(a == b); }
inline bool operator<(const Atom& a, const Atom& b) { return compare(a, b) < 0; }

// An atom or its negation.
struct SignedAtom {
    Atom atom;
    bool positive = true;
};

int compare(const SignedAtom& a, const SignedAtom& b);
bool operator==(const SignedAtom& a, const SignedAtom& b);
inline bool operator<(const SignedAtom& a, const SignedAtom& b) { return compare(a, b) < 0; }

enum class Conn { atom, neg, conj, disj, impl, forall, exists };
enum class Quant { universal, existential };

// Boolean/quantifier tree over atoms. conj/disj are n-ary (>= 1 child);
// neg has one child, impl two, quantifiers one child plus a variable.
struct Formula {
    Conn kind = Conn::atom;
    Atom atom;
    std::size_t var = 0;
    std::vector<Formula> kids;

    static Formula of(Atom a) {
        Formula f;
        f.atom = std::move(a);
        return f;
    }
    static Formula negate(Formula f);
    static Formula conjunction(std::vector<Formula> kids);
    static Formula disjunction(std::vector<Formula> kids);
    static Formula implies(Formula a, Formula b);
    static Formula universal(std::size_t v, Formula f);
    static Formula existential(std::size_t v, Formula f);
};

bool operator==(const Formula& a, const Formula& b);

std::set<std::size_t> free_vars(const Formula& f);
bool is_sentence(const Formula& f);
bool is_quantifier_free(const Formula& f);

// Structural well-formedness against a signature: known symbols, matching
// arities, equality only in equality mode. Throws semantic_error.
void validate_term(const Signature& sig, const Term& t);
void validate_atom(const Signature& sig, const Atom& a);
void validate_formula(const Signature& sig, const Formula& f);

// Prenex sentence: explicit quantifier prefix over a quantifier-free matrix.
// The matrix may mention only prefix-bound variables.
struct PrenexSentence {
    std::vector<std::pair<Quant, std::size_t>> prefix;
    Formula matrix;

    // Prefix as a word over {A, E} with A = universal, E = existential.
    std::string prefix_word() const;
    Formula to_formula() const;
    void validate() const;
};

// Pulls quantifiers to the front, renaming bound variables apart and then
// renumbering them x0, x1, ... in prefix order. The result is logically
// equivalent to the input on every structure. Requires a sentence.
PrenexSentence to_prenex(const Formula& sentence);

// If f is already syntactically prenex, extracts it without any renaming.
std::optional<PrenexSentence> syntactic_prenex(const Formula& f);

// Disjunctive normal form of a quantifier-free formula, as a list of
// conjuncts of signed atoms. Duplicate literals inside a conjunct are
// dropped; conjuncts containing a complementary pair are removed, as are
// exact duplicate conjuncts. An empty result means the matrix is
// unsatisfiable. Throws explosion_error past `guard` conjuncts.
std::vector<std::vector<SignedAtom>> to_dnf(const Formula& matrix, std::uint64_t guard = 1u << 20);

// Printing. Compact form: x0, f(x0); s-expression form: (f x0), (r (f x0)),
// (and ...), (forall x0 ...).
std::string print_term_compact(const Term& t);
std::string print_term(const Term& t);
std::string print_atom(const Atom& a);
std::string print_formula(const Formula& f);

} // namespace ctree
