#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ctree/logic.hpp"

namespace ctree {

// Register assignment x_target <= f(x_args...).
struct FuncExpr {
    std::size_t target = 0;
    std::string symbol;
    std::vector<std::size_t> args;
};

// Register test: x_l1 = x_l2 (equality mode) or r(x_args...).
struct PredExpr {
    bool eq = false;
    std::string symbol;             // empty for equality
    std::vector<std::size_t> args;  // exactly 2 for equality

    static PredExpr equality(std::size_t l1, std::size_t l2) {
        PredExpr e;
        e.eq = true;
        e.args = {l1, l2};
        return e;
    }
    static PredExpr predicate(std::string sym, std::vector<std::size_t> args_) {
        PredExpr e;
        e.symbol = std::move(sym);
        e.args = std::move(args_);
        return e;
    }
};

using Expression = std::variant<FuncExpr, PredExpr>;

bool operator==(const FuncExpr& a, const FuncExpr& b);
bool operator==(const PredExpr& a, const PredExpr& b);

// The signature symbol an expression mentions; "=" for equality tests.
const std::string& expression_symbol(const Expression& e);

void validate_expression(const Signature& sig, const Expression& e);

struct ExprSequence {
    std::size_t n = 1;  // input arity, >= 1
    std::vector<Expression> exprs;
};

// Register contents as terms over the input variables X_n. Row i (0-based)
// is the state before expression i executes; row exprs.size() is the final
// state. Positions beyond the stored prefix hold the tail term, which is
// x_{n-1} until something past the prefix is written (never happens here:
// writes extend the prefix).
struct TermSeq {
    std::size_t n = 1;
    struct Row {
        std::vector<Term> prefix;
        Term tail;
    };
    std::vector<Row> rows;

    const Term& at(std::size_t row, std::size_t pos) const {
        const Row& r = rows[row];
        return pos < r.prefix.size() ? r.prefix[pos] : r.tail;
    }
};

TermSeq term_sequence(const ExprSequence& seq);

// The atom over X_n that predicate expression number `index` (1-based)
// denotes, with register contents expanded to terms.
Atom expression_atom(const ExprSequence& seq, std::size_t index);

// --- computation tree schemes ---------------------------------------------

struct FnNode {
    FuncExpr expr;
    std::size_t next = 0;
};
struct PredNode {
    PredExpr expr;
    std::size_t child0 = 0; // edge labeled 0
    std::size_t child1 = 0; // edge labeled 1
};
struct TermNode {
    std::uint64_t label = 0;
};
using Node = std::variant<FnNode, PredNode, TermNode>;

struct TreeScheme {
    std::size_t n = 1;
    std::vector<Node> nodes;
    std::size_t root = 0;

    // Checks the node graph is a rooted tree: valid indices, every non-root
    // node has exactly one parent, all nodes reachable from the root.
    void validate() const;
};

bool operator==(const Node& a, const Node& b);
bool operator==(const TreeScheme& a, const TreeScheme& b);

bool is_single_terminal(const TreeScheme& s, std::uint64_t label);

// Root-to-terminal path with its derived formula set.
struct CompletePath {
    std::vector<std::size_t> nodes;   // root ... terminal
    std::vector<int> edges;           // per non-terminal step: 0/1 branch, -1 for function
    std::vector<Expression> exprs;    // expressions attached to non-terminal steps
    std::vector<SignedAtom> literals; // signed atoms of predicate steps (empty if none)
    std::vector<Formula> formulas;    // the associated formula set
    Formula path_formula;             // their conjunction
    std::uint64_t label = 0;          // terminal label
};

// All complete paths ordered by terminal node index. When a path has no
// predicate node its formula set is the single always-true formula:
// x0 = x0 in equality mode, otherwise (not r(x0,...)) or r(x0,...) for the
// first predicate symbol of the signature. Throws semantic_error if that
// fallback is needed but no predicate symbol exists.
std::vector<CompletePath> path_enumerate(const Signature& sig, const TreeScheme& s);

// --- problem schemes -------------------------------------------------------

// Output table indexed by the predicate-test outcomes, first test most
// significant: values[b] with b = sum of delta_j << (k-1-j).
struct NuTable {
    std::size_t k = 1;
    std::vector<std::uint64_t> values; // size 2^k

    std::uint64_t at_bits(std::size_t bits) const { return values.at(bits); }
};

struct ProblemScheme {
    std::size_t n = 1;
    NuTable nu;
    std::vector<Expression> exprs;

    void validate() const;
    std::size_t predicate_count() const;
    // Distinct output values, ascending.
    std::vector<std::uint64_t> label_range() const;
};

struct SpecialRepresentation {
    std::size_t n = 1;
    NuTable nu;
    std::vector<Atom> atoms; // one per predicate expression, in order
};

SpecialRepresentation special_representation(const ProblemScheme& s);

// Conjunction alpha_1^{d_1} & ... & alpha_k^{d_k} for an outcome tuple.
std::vector<SignedAtom> outcome_literals(const SpecialRepresentation& rep, std::size_t bits);
Formula outcome_formula(const SpecialRepresentation& rep, std::size_t bits);

Formula literals_formula(const std::vector<SignedAtom>& literals);

// --- literal compilation (term -> register form) ---------------------------

// Compiles a conjunction of signed atoms over X_n-terms into register form:
// shared subterms get one scratch register each (x_n, x_n+1, ... in first-use
// order), then one predicate test per literal. Returns the chain tree that
// tests the literals in order (first falsified literal exits with labels.first,
// all-pass exits with labels.second) and the problem scheme with the same
// expressions whose table maps exactly the literal sign tuple to labels.second.
std::pair<TreeScheme, ProblemScheme> scheme_from_literals(
    const Signature& sig, std::size_t n, const std::vector<SignedAtom>& conjunct,
    std::pair<std::uint64_t, std::uint64_t> labels);

// The tree every one of whose complete paths carries the problem's full
// expression sequence; terminals read the output table.
TreeScheme chain_tree(const ProblemScheme& s);

// Renames variables so that scratch registers are x_n, x_n+1, ... in order
// of first assignment (preorder) and every other out-of-range variable
// collapses to x_{n-1}, or to one spare never-written register when x_{n-1}
// is itself a function target somewhere in the scheme. The result evaluates
// identically on every structure and uses only variables in X_{n+2^h}.
TreeScheme normalize_variables(const TreeScheme& s);

std::size_t max_variable(const TreeScheme& s);

// Signature symbols of a sequence of expressions, "=" for equality tests.
std::vector<std::string> word_of(const std::vector<Expression>& exprs);

} // namespace ctree
