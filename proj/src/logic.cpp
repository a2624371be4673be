#include "ctree/logic.hpp"

#include <algorithm>
#include <map>

#include "ctree/sexpr.hpp"

namespace ctree {

const Symbol* Signature::find(std::string_view name) const {
    for (const auto& s : symbols)
        if (s.name == name) return &s;
    return nullptr;
}

const Symbol* Signature::find(std::string_view name, SymbolKind kind) const {
    const Symbol* s = find(name);
    return (s && s->kind == kind) ? s : nullptr;
}

const Symbol* Signature::first_predicate() const {
    for (const auto& s : symbols)
        if (s.kind == SymbolKind::predicate) return &s;
    return nullptr;
}

bool Signature::has_predicates() const { return first_predicate() != nullptr; }

bool Signature::has_functions() const {
    for (const auto& s : symbols)
        if (s.kind == SymbolKind::function) return true;
    return false;
}

Signature& Signature::add_predicate(std::string name, std::size_t arity) {
    symbols.push_back({std::move(name), SymbolKind::predicate, arity});
    return *this;
}

Signature& Signature::add_function(std::string name, std::size_t arity) {
    symbols.push_back({std::move(name), SymbolKind::function, arity});
    return *this;
}

void Signature::validate() const {
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const Symbol& s = symbols[i];
        if (s.name.empty()) throw semantic_error("signature symbol with empty name");
        if (s.name == "=") throw semantic_error("'=' is reserved for equality");
        if (s.kind == SymbolKind::predicate && s.arity == 0)
            throw semantic_error("nullary predicate symbol '" + s.name + "' is not allowed");
        if (s.kind == SymbolKind::function && s.arity == 0 && !allow_constants)
            throw semantic_error("nullary function symbol '" + s.name + "' requires allow_constants");
        for (std::size_t j = i + 1; j < symbols.size(); ++j)
            if (symbols[j].name == s.name)
                throw semantic_error("duplicate signature symbol '" + s.name + "'");
    }
}

int compare(const Term& a, const Term& b) {
    if (a.is_var() != b.is_var()) return a.is_var() ? -1 : 1;
    if (a.is_var()) return a.var < b.var ? -1 : a.var > b.var ? 1 : 0;
    if (int c = a.symbol.compare(b.symbol); c != 0) return c < 0 ? -1 : 1;
    if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (int c = compare(a.args[i], b.args[i]); c != 0) return c;
    return 0;
}

bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }

void collect_vars(const Term& t, std::set<std::size_t>& out) {
    if (t.is_var()) {
        out.insert(t.var);
        return;
    }
    for (const Term& a : t.args) collect_vars(a, out);
}

int compare(const Atom& a, const Atom& b) {
    if (a.eq != b.eq) return a.eq ? -1 : 1;
    if (int c = a.symbol.compare(b.symbol); c != 0) return c < 0 ? -1 : 1;
    if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (int c = compare(a.args[i], b.args[i]); c != 0) return c;
    return 0;
}

bool operator==(const Atom& a, const Atom& b) { return compare(a, b) == 0; }

int compare(const SignedAtom& a, const SignedAtom& b) {
    if (int c = compare(a.atom, b.atom); c != 0) return c;
    if (a.positive != b.positive) return a.positive ? 1 : -1;
    return 0;
}

bool operator==(const SignedAtom& a, const SignedAtom& b) { return compare(a, b) == 0; }

Formula Formula::negate(Formula f) {
    Formula g;
    g.kind = Conn::neg;
    g.kids.push_back(std::move(f));
    return g;
}

Formula Formula::conjunction(std::vector<Formula> kids) {
    if (kids.empty()) throw semantic_error("empty conjunction");
    if (kids.size() == 1) return std::move(kids[0]);
    Formula g;
    g.kind = Conn::conj;
    g.kids = std::move(kids);
    return g;
}

Formula Formula::disjunction(std::vector<Formula> kids) {
    if (kids.empty()) throw semantic_error("empty disjunction");
    if (kids.size() == 1) return std::move(kids[0]);
    Formula g;
    g.kind = Conn::disj;
    g.kids = std::move(kids);
    return g;
}

Formula Formula::implies(Formula a, Formula b) {
    Formula g;
    g.kind = Conn::impl;
    g.kids.push_back(std::move(a));
    g.kids.push_back(std::move(b));
    return g;
}

Formula Formula::universal(std::size_t v, Formula f) {
    Formula g;
    g.kind = Conn::forall;
    g.var = v;
    g.kids.push_back(std::move(f));
    return g;
}

Formula Formula::existential(std::size_t v, Formula f) {
    Formula g;
    g.kind = Conn::exists;
    g.var = v;
    g.kids.push_back(std::move(f));
    return g;
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Conn::atom) return a.atom == b.atom;
    if (a.kind == Conn::forall || a.kind == Conn::exists)
        if (a.var != b.var) return false;
    if (a.kids.size() != b.kids.size()) return false;
    for (std::size_t i = 0; i < a.kids.size(); ++i)
        if (!(a.kids[i] == b.kids[i])) return false;
    return true;
}

namespace {

void free_vars_into(const Formula& f, std::set<std::size_t>& bound, std::set<std::size_t>& out) {
    switch (f.kind) {
        case Conn::atom:
            for (const Term& t : f.atom.args) {
                std::set<std::size_t> vs;
                collect_vars(t, vs);
                for (std::size_t v : vs)
                    if (!bound.count(v)) out.insert(v);
            }
            return;
        case Conn::forall:
        case Conn::exists: {
            bool inserted = bound.insert(f.var).second;
            free_vars_into(f.kids[0], bound, out);
            if (inserted) bound.erase(f.var);
            return;
        }
        default:
            for (const Formula& k : f.kids) free_vars_into(k, bound, out);
            return;
    }
}

} // namespace

std::set<std::size_t> free_vars(const Formula& f) {
    std::set<std::size_t> bound, out;
    free_vars_into(f, bound, out);
    return out;
}

bool is_sentence(const Formula& f) { return free_vars(f).empty(); }

bool is_quantifier_free(const Formula& f) {
    if (f.kind == Conn::forall || f.kind == Conn::exists) return false;
    for (const Formula& k : f.kids)
        if (!is_quantifier_free(k)) return false;
    return true;
}

void validate_term(const Signature& sig, const Term& t) {
    if (t.is_var()) return;
    const Symbol* s = sig.find(t.symbol, SymbolKind::function);
    if (!s) throw semantic_error("unknown function symbol '" + t.symbol + "'");
    if (s->arity != t.args.size())
        throw semantic_error("function '" + t.symbol + "' expects " + std::to_string(s->arity) +
                             " arguments, got " + std::to_string(t.args.size()));
    for (const Term& a : t.args) validate_term(sig, a);
}

void validate_atom(const Signature& sig, const Atom& a) {
    if (a.eq) {
        if (!sig.equality_mode) throw semantic_error("equality atom with equality mode off");
        if (a.args.size() != 2) throw semantic_error("equality atom needs exactly two terms");
    } else {
        const Symbol* s = sig.find(a.symbol, SymbolKind::predicate);
        if (!s) throw semantic_error("unknown predicate symbol '" + a.symbol + "'");
        if (s->arity != a.args.size())
            throw semantic_error("predicate '" + a.symbol + "' expects " + std::to_string(s->arity) +
                                 " arguments, got " + std::to_string(a.args.size()));
    }
    for (const Term& t : a.args) validate_term(sig, t);
}

void validate_formula(const Signature& sig, const Formula& f) {
    switch (f.kind) {
        case Conn::atom:
            if (!f.kids.empty()) throw semantic_error("atom node with children");
            validate_atom(sig, f.atom);
            return;
        case Conn::neg:
            if (f.kids.size() != 1) throw semantic_error("negation needs one child");
            break;
        case Conn::impl:
            if (f.kids.size() != 2) throw semantic_error("implication needs two children");
            break;
        case Conn::conj:
        case Conn::disj:
            if (f.kids.empty()) throw semantic_error("empty connective");
            break;
        case Conn::forall:
        case Conn::exists:
            if (f.kids.size() != 1) throw semantic_error("quantifier needs one child");
            break;
    }
    for (const Formula& k : f.kids) validate_formula(sig, k);
}

std::string PrenexSentence::prefix_word() const {
    std::string w;
    for (const auto& [q, v] : prefix) w.push_back(q == Quant::universal ? 'A' : 'E');
    return w;
}

Formula PrenexSentence::to_formula() const {
    Formula f = matrix;
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
        f = it->first == Quant::universal ? Formula::universal(it->second, std::move(f))
                                          : Formula::existential(it->second, std::move(f));
    return f;
}

void PrenexSentence::validate() const {
    if (!is_quantifier_free(matrix)) throw semantic_error("prenex matrix contains a quantifier");
    std::set<std::size_t> bound;
    for (const auto& [q, v] : prefix)
        if (!bound.insert(v).second)
            throw semantic_error("prefix binds x" + std::to_string(v) + " twice");
    for (std::size_t v : free_vars(matrix))
        if (!bound.count(v))
            throw semantic_error("matrix variable x" + std::to_string(v) + " is not prefix-bound");
}

namespace {

Term subst_term(const Term& t, const std::map<std::size_t, std::size_t>& env) {
    if (t.is_var()) {
        auto it = env.find(t.var);
        if (it == env.end())
            throw semantic_error("free variable x" + std::to_string(t.var) + " in a sentence");
        return Term::variable(it->second);
    }
    std::vector<Term> args;
    args.reserve(t.args.size());
    for (const Term& a : t.args) args.push_back(subst_term(a, env));
    return Term::apply(t.symbol, std::move(args));
}

Atom subst_atom(const Atom& a, const std::map<std::size_t, std::size_t>& env) {
    Atom out = a;
    out.args.clear();
    for (const Term& t : a.args) out.args.push_back(subst_term(t, env));
    return out;
}

Formula subst_matrix(const Formula& f, const std::map<std::size_t, std::size_t>& env) {
    if (f.kind == Conn::atom) return Formula::of(subst_atom(f.atom, env));
    Formula g;
    g.kind = f.kind;
    g.var = f.var;
    for (const Formula& k : f.kids) g.kids.push_back(subst_matrix(k, env));
    return g;
}

struct PrenexBuilder {
    std::size_t next_fresh = 0;

    struct Piece {
        std::vector<std::pair<Quant, std::size_t>> prefix;
        Formula matrix;
    };

    static Quant flip(Quant q) {
        return q == Quant::universal ? Quant::existential : Quant::universal;
    }

    Piece walk(const Formula& f, std::map<std::size_t, std::size_t>& env) {
        switch (f.kind) {
            case Conn::atom:
                return {{}, Formula::of(subst_atom(f.atom, env))};
            case Conn::neg: {
                Piece p = walk(f.kids[0], env);
                for (auto& [q, v] : p.prefix) q = flip(q);
                p.matrix = Formula::negate(std::move(p.matrix));
                return p;
            }
            case Conn::impl: {
                Formula rewritten = Formula::disjunction(
                    {Formula::negate(f.kids[0]), f.kids[1]});
                return walk(rewritten, env);
            }
            case Conn::conj:
            case Conn::disj: {
                Piece out;
                std::vector<Formula> mats;
                for (const Formula& k : f.kids) {
                    Piece p = walk(k, env);
                    out.prefix.insert(out.prefix.end(), p.prefix.begin(), p.prefix.end());
                    mats.push_back(std::move(p.matrix));
                }
                out.matrix = f.kind == Conn::conj ? Formula::conjunction(std::move(mats))
                                                  : Formula::disjunction(std::move(mats));
                return out;
            }
            case Conn::forall:
            case Conn::exists: {
                std::size_t fresh = next_fresh++;
                auto saved = env.find(f.var) != env.end()
                                 ? std::optional<std::size_t>(env[f.var])
                                 : std::nullopt;
                env[f.var] = fresh;
                Piece p = walk(f.kids[0], env);
                if (saved) env[f.var] = *saved; else env.erase(f.var);
                Quant q = f.kind == Conn::forall ? Quant::universal : Quant::existential;
                p.prefix.insert(p.prefix.begin(), {q, fresh});
                return p;
            }
        }
        throw internal_error("unreachable formula kind");
    }
};

} // namespace

PrenexSentence to_prenex(const Formula& sentence) {
    PrenexBuilder b;
    std::map<std::size_t, std::size_t> env;
    PrenexBuilder::Piece p = b.walk(sentence, env);

    // Renumber prefix variables 0,1,... in prefix order.
    std::map<std::size_t, std::size_t> renum;
    PrenexSentence out;
    for (std::size_t i = 0; i < p.prefix.size(); ++i) {
        renum[p.prefix[i].second] = i;
        out.prefix.push_back({p.prefix[i].first, i});
    }
    out.matrix = subst_matrix(p.matrix, renum);
    out.validate();
    return out;
}

std::optional<PrenexSentence> syntactic_prenex(const Formula& f) {
    PrenexSentence out;
    const Formula* cur = &f;
    while (cur->kind == Conn::forall || cur->kind == Conn::exists) {
        out.prefix.push_back({cur->kind == Conn::forall ? Quant::universal : Quant::existential,
                              cur->var});
        cur = &cur->kids[0];
    }
    if (!is_quantifier_free(*cur)) return std::nullopt;
    out.matrix = *cur;
    try {
        out.validate();
    } catch (const semantic_error&) {
        return std::nullopt;
    }
    return out;
}

namespace {

using Conjunct = std::vector<SignedAtom>;
using Dnf = std::vector<Conjunct>;

Dnf cross(const Dnf& a, const Dnf& b, std::uint64_t guard) {
    if (static_cast<std::uint64_t>(a.size()) * b.size() > guard)
        throw explosion_error("DNF too large", static_cast<std::uint64_t>(a.size()) * b.size());
    Dnf out;
    out.reserve(a.size() * b.size());
    for (const Conjunct& x : a)
        for (const Conjunct& y : b) {
            Conjunct c = x;
            c.insert(c.end(), y.begin(), y.end());
            out.push_back(std::move(c));
        }
    return out;
}

Dnf dnf_walk(const Formula& f, bool positive, std::uint64_t guard) {
    switch (f.kind) {
        case Conn::atom:
            return {{SignedAtom{f.atom, positive}}};
        case Conn::neg:
            return dnf_walk(f.kids[0], !positive, guard);
        case Conn::impl: {
            // a -> b is !a | b
            if (positive) {
                Dnf out = dnf_walk(f.kids[0], false, guard);
                Dnf rhs = dnf_walk(f.kids[1], true, guard);
                out.insert(out.end(), rhs.begin(), rhs.end());
                return out;
            }
            return cross(dnf_walk(f.kids[0], true, guard), dnf_walk(f.kids[1], false, guard), guard);
        }
        case Conn::conj:
        case Conn::disj: {
            bool conj_like = (f.kind == Conn::conj) == positive;
            if (conj_like) {
                Dnf out = dnf_walk(f.kids[0], positive, guard);
                for (std::size_t i = 1; i < f.kids.size(); ++i)
                    out = cross(out, dnf_walk(f.kids[i], positive, guard), guard);
                return out;
            }
            Dnf out;
            for (const Formula& k : f.kids) {
                Dnf part = dnf_walk(k, positive, guard);
                out.insert(out.end(), part.begin(), part.end());
                if (out.size() > guard) throw explosion_error("DNF too large", out.size());
            }
            return out;
        }
        case Conn::forall:
        case Conn::exists:
            throw semantic_error("DNF conversion requires a quantifier-free formula");
    }
    throw internal_error("unreachable formula kind");
}

} // namespace

std::vector<std::vector<SignedAtom>> to_dnf(const Formula& matrix, std::uint64_t guard) {
    Dnf raw = dnf_walk(matrix, true, guard);
    Dnf out;
    for (Conjunct& c : raw) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        bool contradictory = false;
        for (std::size_t i = 0; i + 1 < c.size() && !contradictory; ++i)
            if (c[i].atom == c[i + 1].atom && c[i].positive != c[i + 1].positive)
                contradictory = true;
        if (contradictory) continue;
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
    }
    return out;
}

std::string print_term_compact(const Term& t) {
    if (t.is_var()) return "x" + std::to_string(t.var);
    std::string out = t.symbol + "(";
    for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ",";
        out += print_term_compact(t.args[i]);
    }
    return out + ")";
}

std::string print_term(const Term& t) {
    if (t.is_var()) return "x" + std::to_string(t.var);
    std::string out = "(" + t.symbol;
    for (const Term& a : t.args) out += " " + print_term(a);
    return out + ")";
}

std::string print_atom(const Atom& a) {
    std::string out = "(";
    out += a.eq ? "=" : a.symbol;
    for (const Term& t : a.args) out += " " + print_term(t);
    return out + ")";
}

std::string print_formula(const Formula& f) {
    switch (f.kind) {
        case Conn::atom:
            return print_atom(f.atom);
        case Conn::neg:
            return "(not " + print_formula(f.kids[0]) + ")";
        case Conn::impl:
            return "(imp " + print_formula(f.kids[0]) + " " + print_formula(f.kids[1]) + ")";
        case Conn::conj:
        case Conn::disj: {
            std::string out = f.kind == Conn::conj ? "(and" : "(or";
            for (const Formula& k : f.kids) out += " " + print_formula(k);
            return out + ")";
        }
        case Conn::forall:
        case Conn::exists:
            return std::string(f.kind == Conn::forall ? "(forall x" : "(exists x") +
                   std::to_string(f.var) + " " + print_formula(f.kids[0]) + ")";
    }
    throw internal_error("unreachable formula kind");
}

} // namespace ctree
