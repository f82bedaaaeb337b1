#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace evopt::detail {

enum class TokKind { ident, number, str, op };

struct Tok {
    std::string text;
    TokKind kind = TokKind::op;
};

// One normalized statement: a flat token list, no indentation.
using Stmt = std::vector<Tok>;

enum class Role { var, func, cls };

// Names bound inside the unit (assignment, def, params, class, loop var)
// plus names that must stay verbatim even when they look user-defined
// (import-introduced names, `main`).
struct Bindings {
    std::unordered_map<std::string, Role> bound;
    std::unordered_set<std::string> preserved;

    void bind(const std::string& name, Role role) {
        if (preserved.count(name)) return;
        // First binding wins; a name defined as a function stays FUNC even
        // if later reassigned.
        bound.emplace(name, role);
    }
};

// Bracket depth bookkeeping over a token stream. Open brackets get the
// depth outside them; tokens inside get >= 1.
inline std::vector<int> paren_depths(const Stmt& ts) {
    std::vector<int> d(ts.size(), 0);
    int depth = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const std::string& t = ts[i].text;
        if (ts[i].kind == TokKind::op && (t == "(" || t == "[" || t == "{")) {
            d[i] = depth;
            ++depth;
        } else if (ts[i].kind == TokKind::op && (t == ")" || t == "]" || t == "}")) {
            if (depth > 0) --depth;
            d[i] = depth;
        } else {
            d[i] = depth;
        }
    }
    return d;
}

inline bool is_ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
}

inline bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

// Whitespace/punctuation token split used when a unit defeats the
// language front end entirely.
inline std::vector<Stmt> degraded_statements(const std::string& text) {
    std::vector<Stmt> stmts;
    Stmt cur;
    std::size_t i = 0;
    auto flush = [&]() {
        if (!cur.empty()) stmts.push_back(std::move(cur));
        cur.clear();
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            flush();
            ++i;
        } else if (is_space(c)) {
            ++i;
        } else if (is_ident_char(c)) {
            std::size_t j = i;
            while (j < text.size() && is_ident_char(text[j])) ++j;
            cur.push_back({text.substr(i, j - i), TokKind::ident});
            i = j;
        } else {
            cur.push_back({std::string(1, c), TokKind::op});
            ++i;
        }
    }
    flush();
    return stmts;
}

} // namespace evopt::detail
