#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ctree/errors.hpp"

namespace ctree {

// Whitespace-insensitive s-expressions; the shared surface syntax of every
// file format in this project. Atoms keep their raw spelling so that widths
// like "00" vs "0" survive the round trip.
struct SExpr {
    bool list = false;
    std::string text;           // atom spelling (quotes stripped for strings)
    bool quoted = false;        // atom came from a "..." literal
    std::vector<SExpr> items;   // children when list
    std::size_t line = 0, col = 0;

    bool is_atom() const { return !list; }

    // Head symbol of a list, or "" if not a list starting with an atom.
    std::string_view head() const {
        if (!list || items.empty() || !items[0].is_atom()) return {};
        return items[0].text;
    }

    std::uint64_t as_nat() const;
    const SExpr& at(std::size_t i) const;
    void expect_list(std::string_view what) const;
    void expect_atom(std::string_view what) const;
    [[noreturn]] void fail(const std::string& msg) const;
};

// Parses exactly one expression; trailing garbage is an error.
SExpr parse_sexpr(std::string_view src);

// Parses a sequence of expressions until end of input.
std::vector<SExpr> parse_sexprs(std::string_view src);

std::string print_sexpr(const SExpr& e);

// Convenience builders used by the printers.
SExpr sx_atom(std::string text);
SExpr sx_string(std::string text);
SExpr sx_list(std::vector<SExpr> items);

} // namespace ctree
