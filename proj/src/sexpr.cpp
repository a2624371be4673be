#include "ctree/sexpr.hpp"

#include <cctype>

namespace ctree {

std::uint64_t SExpr::as_nat() const {
    if (list || text.empty()) fail("expected a number");
    std::uint64_t v = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a number, got '" + text + "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

const SExpr& SExpr::at(std::size_t i) const {
    if (!list || i >= items.size()) fail("expected at least " + std::to_string(i + 1) + " items");
    return items[i];
}

void SExpr::expect_list(std::string_view what) const {
    if (!list) fail("expected a list: " + std::string(what));
}

void SExpr::expect_atom(std::string_view what) const {
    if (list) fail("expected an atom: " + std::string(what));
}

void SExpr::fail(const std::string& msg) const {
    throw parse_error(msg, line, col);
}

namespace {

struct Reader {
    std::string_view src;
    std::size_t pos = 0, line = 1, col = 1;

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line, col); }

    bool eof() const { return pos >= src.size(); }
    char peek() const { return src[pos]; }

    char take() {
        char c = src[pos++];
        if (c == '\n') { line++; col = 1; } else { col++; }
        return c;
    }

    void skip_space() {
        while (!eof()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) { take(); continue; }
            if (c == ';') {                       // line comment
                while (!eof() && peek() != '\n') take();
                continue;
            }
            break;
        }
    }

    SExpr read() {
        skip_space();
        if (eof()) fail("unexpected end of input");
        SExpr e;
        e.line = line;
        e.col = col;
        char c = peek();
        if (c == '(') {
            take();
            e.list = true;
            while (true) {
                skip_space();
                if (eof()) fail("missing ')'");
                if (peek() == ')') { take(); break; }
                e.items.push_back(read());
            }
            return e;
        }
        if (c == ')') fail("unexpected ')'");
        if (c == '"') {
            take();
            e.quoted = true;
            while (true) {
                if (eof()) fail("unterminated string");
                char d = take();
                if (d == '"') break;
                e.text.push_back(d);
            }
            return e;
        }
        while (!eof()) {
            char d = peek();
            if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == '"' || d == ';') break;
            e.text.push_back(take());
        }
        return e;
    }
};

bool needs_quotes(const std::string& s) {
    if (s.empty()) return true;
    for (char c : s)
        if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"' || c == ';')
            return true;
    return false;
}

} // namespace

SExpr parse_sexpr(std::string_view src) {
    Reader r{src};
    SExpr e = r.read();
    r.skip_space();
    if (!r.eof()) r.fail("trailing input after expression");
    return e;
}

std::vector<SExpr> parse_sexprs(std::string_view src) {
    Reader r{src};
    std::vector<SExpr> out;
    while (true) {
        r.skip_space();
        if (r.eof()) break;
        out.push_back(r.read());
    }
    return out;
}

std::string print_sexpr(const SExpr& e) {
    if (!e.list) {
        if (e.quoted || needs_quotes(e.text)) return "\"" + e.text + "\"";
        return e.text;
    }
    std::string out = "(";
    for (std::size_t i = 0; i < e.items.size(); ++i) {
        if (i) out += ' ';
        out += print_sexpr(e.items[i]);
    }
    out += ')';
    return out;
}

SExpr sx_atom(std::string text) {
    SExpr e;
    e.text = std::move(text);
    return e;
}

SExpr sx_string(std::string text) {
    SExpr e;
    e.text = std::move(text);
    e.quoted = true;
    return e;
}

SExpr sx_list(std::vector<SExpr> items) {
    SExpr e;
    e.list = true;
    e.items = std::move(items);
    return e;
}

} // namespace ctree
