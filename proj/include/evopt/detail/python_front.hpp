#pragma once

#include "evopt/detail/token.hpp"

#include <string>
#include <unordered_set>
#include <vector>

namespace evopt::detail {

inline const std::unordered_set<std::string>& py_keywords() {
    static const std::unordered_set<std::string> kw = {
        "and",   "as",       "assert", "async",  "await",  "break",
        "class", "continue", "def",    "del",    "elif",   "else",
        "except","False",    "finally","for",    "from",   "global",
        "if",    "import",   "in",     "is",     "lambda", "None",
        "nonlocal","not",    "or",     "pass",   "raise",  "return",
        "True",  "try",      "while",  "with",   "yield"};
    return kw;
}

inline const std::unordered_set<std::string>& py_builtins() {
    static const std::unordered_set<std::string> b = {
        "print", "input", "len", "range", "int", "float", "str", "bool",
        "list", "dict", "set", "tuple", "frozenset", "bytes", "bytearray",
        "sum", "min", "max", "abs", "sorted", "reversed", "enumerate",
        "zip", "map", "filter", "all", "any", "open", "ord", "chr", "bin",
        "hex", "oct", "pow", "divmod", "round", "isinstance", "issubclass",
        "type", "id", "hash", "repr", "format", "iter", "next", "slice",
        "complex", "object", "super", "staticmethod", "classmethod",
        "property", "getattr", "setattr", "hasattr", "delattr", "vars",
        "dir", "globals", "locals", "exec", "eval", "compile", "callable",
        "memoryview", "exit", "quit", "breakpoint", "__name__",
        "Exception", "BaseException", "ValueError", "TypeError",
        "IndexError", "KeyError", "ZeroDivisionError", "StopIteration",
        "RuntimeError", "OverflowError", "ArithmeticError", "EOFError",
        "AttributeError", "NameError", "NotImplementedError",
        "RecursionError", "MemoryError", "FileNotFoundError"};
    return b;
}

// Returns the index one past the end of the string literal starting at
// `quote_pos` (which must point at ' or "). Tolerates unterminated
// literals by stopping at end of line (or end of input for triple quotes).
inline std::size_t py_scan_string(const std::string& src, std::size_t quote_pos) {
    const std::size_t n = src.size();
    const char q = src[quote_pos];
    const bool triple = quote_pos + 2 < n && src[quote_pos + 1] == q &&
                        src[quote_pos + 2] == q;
    std::size_t j = quote_pos + (triple ? 3 : 1);
    while (j < n) {
        if (src[j] == '\\') {
            j += 2;
            continue;
        }
        if (triple) {
            if (src[j] == q && j + 2 < n + 1 && j + 1 < n && src[j + 1] == q &&
                j + 2 < n && src[j + 2] == q)
                return j + 3;
            ++j;
        } else {
            if (src[j] == q) return j + 1;
            if (src[j] == '\n') return j; // unterminated; tolerate
            ++j;
        }
    }
    return n;
}

// Single pass over the source producing logical lines of tokens.
// Comments and blank lines vanish; newlines inside brackets or after a
// backslash continue the current logical line; string literals (including
// triple-quoted ones) become single tokens.
inline std::vector<Stmt> py_logical_lines(const std::string& src) {
    std::vector<Stmt> lines;
    Stmt cur;
    int depth = 0;
    std::size_t i = 0;
    const std::size_t n = src.size();

    auto flush = [&]() {
        if (!cur.empty()) lines.push_back(std::move(cur));
        cur.clear();
    };

    static const char* multi_ops[] = {
        "**=", "//=", ">>=", "<<=", "...", ":=", "->", "**", "//", ">>",
        "<<", "<=", ">=", "==", "!=", "+=", "-=", "*=", "/=", "%=", "&=",
        "|=", "^=", "@="};

    while (i < n) {
        char c = src[i];
        if (c == '#') {
            while (i < n && src[i] != '\n') ++i;
            continue;
        }
        if (c == '\n') {
            if (depth == 0) flush();
            ++i;
            continue;
        }
        if (is_space(c)) {
            ++i;
            continue;
        }
        if (c == '\\') { // explicit line continuation
            std::size_t j = i + 1;
            while (j < n && is_space(src[j])) ++j;
            if (j < n && src[j] == '\n') {
                i = j + 1;
                continue;
            }
            cur.push_back({"\\", TokKind::op});
            ++i;
            continue;
        }
        if (c == '"' || c == '\'') {
            std::size_t end = py_scan_string(src, i);
            cur.push_back({src.substr(i, end - i), TokKind::str});
            i = end;
            continue;
        }
        if (is_ident_start(c)) {
            // String prefix? (r"...", f'...', rb"...", ...)
            std::size_t p = i;
            while (p < n && p - i < 2 &&
                   std::string("rRbBfFuU").find(src[p]) != std::string::npos)
                ++p;
            if (p > i && p < n && (src[p] == '"' || src[p] == '\'')) {
                std::size_t end = py_scan_string(src, p);
                cur.push_back({src.substr(i, end - i), TokKind::str});
                i = end;
                continue;
            }
            std::size_t j = i;
            while (j < n && is_ident_char(src[j])) ++j;
            cur.push_back({src.substr(i, j - i), TokKind::ident});
            i = j;
            continue;
        }
        if (is_digit(c) || (c == '.' && i + 1 < n && is_digit(src[i + 1]))) {
            std::size_t j = i;
            while (j < n) {
                char d = src[j];
                if (is_ident_char(d) || d == '.') {
                    if ((d == 'e' || d == 'E') && j + 1 < n &&
                        (src[j + 1] == '+' || src[j + 1] == '-') && j > i &&
                        is_digit(src[j - 1])) {
                        j += 2;
                        continue;
                    }
                    ++j;
                } else {
                    break;
                }
            }
            cur.push_back({src.substr(i, j - i), TokKind::number});
            i = j;
            continue;
        }
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') {
            if (depth > 0) --depth;
        }
        bool matched = false;
        for (const char* op : multi_ops) {
            std::size_t len = std::char_traits<char>::length(op);
            if (src.compare(i, len, op) == 0) {
                cur.push_back({std::string(op), TokKind::op});
                i += len;
                matched = true;
                break;
            }
        }
        if (!matched) {
            cur.push_back({std::string(1, c), TokKind::op});
            ++i;
        }
    }
    flush();
    return lines;
}

inline bool py_is_compound_head(const std::string& t) {
    static const std::unordered_set<std::string> heads = {
        "if", "elif", "else", "for", "while", "def", "class",
        "try", "except", "finally", "with", "async"};
    return heads.count(t) > 0;
}

// `if x: y = 1` and `a = 1; b = 2` both become separate statements.
inline void py_split_statement(const Stmt& ts, std::vector<Stmt>& out) {
    if (ts.empty()) return;
    auto depths = paren_depths(ts);
    if (ts[0].kind == TokKind::ident && py_is_compound_head(ts[0].text)) {
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (ts[i].kind == TokKind::op && ts[i].text == ":" &&
                depths[i] == 0) {
                if (i + 1 < ts.size()) {
                    out.emplace_back(ts.begin(),
                                     ts.begin() + static_cast<long>(i) + 1);
                    Stmt rest(ts.begin() + static_cast<long>(i) + 1, ts.end());
                    py_split_statement(rest, out);
                }
                else {
                    out.push_back(ts);
                }
                return;
            }
        }
    }
    bool has_split = false;
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (ts[i].kind == TokKind::op && ts[i].text == ";" && depths[i] == 0)
            has_split = true;
    if (!has_split) {
        out.push_back(ts);
        return;
    }
    Stmt cur;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i].kind == TokKind::op && ts[i].text == ";" && depths[i] == 0) {
            if (!cur.empty()) py_split_statement(cur, out);
            cur.clear();
        } else {
            cur.push_back(ts[i]);
        }
    }
    if (!cur.empty()) py_split_statement(cur, out);
}

inline std::vector<Stmt> py_statements(const std::string& src) {
    std::vector<Stmt> out;
    for (const Stmt& line : py_logical_lines(src)) py_split_statement(line, out);
    return out;
}

// Collect user bindings: assignments, def/lambda params, classes, loop
// and `as` targets. Import-introduced names go to `preserved` instead —
// imported modules and APIs carry the optimization signal and must stay
// readable in patterns.
inline Bindings py_bindings(const std::vector<Stmt>& stmts) {
    Bindings b;
    for (const Stmt& ts : stmts) {
        if (ts.empty()) continue;
        auto depths = paren_depths(ts);
        const std::string& head = ts[0].text;

        if (head == "import" || head == "from") {
            for (const Tok& t : ts)
                if (t.kind == TokKind::ident && !py_keywords().count(t.text))
                    b.preserved.insert(t.text);
            continue;
        }

        std::size_t k = (head == "async" && ts.size() > 1) ? 1 : 0;

        if (ts[k].text == "def" && k + 1 < ts.size() &&
            ts[k + 1].kind == TokKind::ident) {
            b.bind(ts[k + 1].text, Role::func);
            for (std::size_t i = k + 2; i < ts.size(); ++i) {
                if (ts[i].kind != TokKind::ident || depths[i] != 1) continue;
                const std::string& prev = ts[i - 1].text;
                if (prev == "(" || prev == "," || prev == "*" || prev == "**")
                    b.bind(ts[i].text, Role::var);
            }
        } else if (ts[k].text == "class" && k + 1 < ts.size() &&
                   ts[k + 1].kind == TokKind::ident) {
            b.bind(ts[k + 1].text, Role::cls);
        } else if (head == "global" || head == "nonlocal") {
            for (std::size_t i = 1; i < ts.size(); ++i)
                if (ts[i].kind == TokKind::ident) b.bind(ts[i].text, Role::var);
        }

        for (std::size_t i = 0; i < ts.size(); ++i) {
            // for <targets> in ... (statement level or comprehension)
            if (ts[i].kind == TokKind::ident && ts[i].text == "for") {
                int fd = depths[i];
                for (std::size_t j = i + 1; j < ts.size(); ++j) {
                    if (ts[j].kind == TokKind::ident && ts[j].text == "in" &&
                        depths[j] == fd)
                        break;
                    if (ts[j].kind == TokKind::ident &&
                        !py_keywords().count(ts[j].text) &&
                        ts[j - 1].text != ".")
                        b.bind(ts[j].text, Role::var);
                }
            }
            if (ts[i].kind == TokKind::ident && ts[i].text == "as" &&
                i + 1 < ts.size() && ts[i + 1].kind == TokKind::ident) {
                b.bind(ts[i + 1].text, Role::var);
            }
            if (ts[i].kind == TokKind::ident && ts[i].text == "lambda") {
                int ld = depths[i];
                for (std::size_t j = i + 1; j < ts.size(); ++j) {
                    if (ts[j].kind == TokKind::op && ts[j].text == ":" &&
                        depths[j] == ld)
                        break;
                    if (ts[j].kind != TokKind::ident || depths[j] != ld) continue;
                    const std::string& prev = ts[j - 1].text;
                    if (prev == "lambda" || prev == "," || prev == "*" ||
                        prev == "**")
                        b.bind(ts[j].text, Role::var);
                }
            }
            if (ts[i].kind == TokKind::op && ts[i].text == ":=" && i > 0 &&
                ts[i - 1].kind == TokKind::ident) {
                b.bind(ts[i - 1].text, Role::var);
            }
        }

        // Assignment targets at depth 0: every `=`-separated segment but
        // the last is a target list; augmented assignments have a single
        // target before the operator.
        static const std::unordered_set<std::string> aug = {
            "+=", "-=", "*=", "/=", "//=", "%=", "**=", "&=", "|=", "^=",
            ">>=", "<<=", "@="};
        std::vector<std::size_t> eq_positions;
        std::size_t aug_pos = ts.size();
        for (std::size_t i = 0; i < ts.size(); ++i) {
            if (ts[i].kind != TokKind::op || depths[i] != 0) continue;
            if (ts[i].text == "=") eq_positions.push_back(i);
            else if (aug.count(ts[i].text) && aug_pos == ts.size()) aug_pos = i;
        }
        auto bind_targets = [&](std::size_t lo, std::size_t hi) {
            bool after_colon = false;
            for (std::size_t i = lo; i < hi; ++i) {
                if (ts[i].kind == TokKind::op && ts[i].text == ":" &&
                    depths[i] == 0) {
                    after_colon = true; // annotation, e.g. `x: int = 5`
                    continue;
                }
                if (after_colon) continue;
                if (ts[i].kind == TokKind::ident && depths[i] == 0 &&
                    !py_keywords().count(ts[i].text) &&
                    !(i > 0 && ts[i - 1].text == "."))
                    b.bind(ts[i].text, Role::var);
            }
        };
        if (!eq_positions.empty()) {
            std::size_t lo = 0;
            for (std::size_t pos : eq_positions) {
                bind_targets(lo, pos);
                lo = pos + 1;
            }
        } else if (aug_pos < ts.size()) {
            bind_targets(0, aug_pos);
        }
    }
    return b;
}

} // namespace evopt::detail
