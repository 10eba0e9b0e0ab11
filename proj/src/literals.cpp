#include "almostrep/literals.hpp"

#include <cctype>
#include <cstdlib>

namespace ar::literals {

using groups::GroupElement;
using groups::GroupId;

namespace {

std::string format_h3(const std::int64_t* c) {
    std::string s;
    const char* names = "abc";
    for (int i = 0; i < 3; ++i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += ' ';
        s += names[i];
        if (c[i] != 1) s += '^' + std::to_string(c[i]);
    }
    return s.empty() ? "e" : s;
}

std::string format_zd(const std::int64_t* c, int d) {
    if (d == 1) return std::to_string(c[0]);
    std::string s = "(";
    for (int i = 0; i < d; ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s + ")";
}

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    void expect(char c) {
        if (peek() != c) throw bad_input("element literal: expected '" + std::string(1, c) + "' in \"" + s + "\"");
        ++i;
    }
    std::int64_t integer() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw bad_input("element literal: expected integer in \"" + s + "\"");
        return std::strtoll(s.substr(start, i - start).c_str(), nullptr, 10);
    }
};

GroupElement parse_h3(Cursor& cur) {
    GroupId h3 = groups::heisenberg();
    GroupElement acc = groups::identity(h3);
    for (;;) {
        char c = cur.peek();
        if (c == 'e') {
            ++cur.i;
            continue;
        }
        if (c != 'a' && c != 'b' && c != 'c') break;
        ++cur.i;
        std::int64_t k = 1;
        if (cur.peek() == '^') {
            ++cur.i;
            k = cur.integer();
        }
        std::vector<std::int64_t> coords{0, 0, 0};
        coords[static_cast<std::size_t>(c - 'a')] = k;
        acc = groups::mul(acc, GroupElement{h3, coords});
    }
    return acc;
}

GroupElement parse_zd(Cursor& cur, int d) {
    GroupId g = groups::free_abelian(d);
    std::vector<std::int64_t> coords;
    if (cur.peek() == '(') {
        cur.expect('(');
        for (int i = 0; i < d; ++i) {
            if (i) cur.expect(',');
            coords.push_back(cur.integer());
        }
        cur.expect(')');
    } else {
        if (d != 1) throw bad_input("element literal: expected '(' for Z^" + std::to_string(d));
        coords.push_back(cur.integer());
    }
    return GroupElement{g, coords};
}

GroupElement parse_factor(Cursor& cur, const GroupId& g) {
    if (g.kind == GroupId::Kind::Heisenberg) return parse_h3(cur);
    return parse_zd(cur, g.rank);
}

} // namespace

std::string format_element(const GroupElement& g) {
    const GroupId& id = g.group;
    if (id.kind == GroupId::Kind::Heisenberg) return format_h3(g.coords.data());
    if (id.kind == GroupId::Kind::FreeAbelian) return format_zd(g.coords.data(), id.rank);
    std::string s = "(";
    int off = 0;
    for (std::size_t i = 0; i < id.factors.size(); ++i) {
        const GroupId& f = id.factors[i];
        if (i) s += ',';
        std::vector<std::int64_t> c(g.coords.begin() + off, g.coords.begin() + off + f.coord_size());
        GroupElement part{f, std::move(c)};
        s += format_element(part);
        off += f.coord_size();
    }
    return s + ")";
}

GroupElement parse_element(const GroupId& g, const std::string& text) {
    Cursor cur{text};
    GroupElement out = groups::identity(g);
    if (g.kind == GroupId::Kind::Product) {
        cur.expect('(');
        int off = 0;
        for (std::size_t i = 0; i < g.factors.size(); ++i) {
            if (i) cur.expect(',');
            GroupElement part = parse_factor(cur, g.factors[i]);
            std::copy(part.coords.begin(), part.coords.end(), out.coords.begin() + off);
            off += g.factors[i].coord_size();
        }
        cur.expect(')');
    } else {
        out = parse_factor(cur, g);
    }
    if (!cur.done()) throw bad_input("element literal: trailing input in \"" + text + "\"");
    return out;
}

} // namespace ar::literals
