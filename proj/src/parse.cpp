#include "retic/parse.hpp"

#include <algorithm>
#include <cctype>

namespace retic {

namespace {

class Parser {
public:
    Parser(const std::string& text, const VarSpec& spec) : text_(text), spec_(spec) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return p;
    }

private:
    const std::string& text_;
    const VarSpec& spec_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }

    Poly expr() {
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        Poly acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (accept('^')) {
            size_t at = pos_;
            Int n = integer();
            if (n <= 0) { pos_ = at; fail("power must be a positive integer"); }
            Poly acc = Poly::constant(spec_, 1);
            for (Int i = 0; i < n; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Poly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit((unsigned char)c)) {
            Int num = integer();
            if (accept('/')) {
                size_t at = pos_;
                Int den = integer();
                if (den == 0) { pos_ = at; fail("zero denominator"); }
                return Poly::constant(spec_, Rat(num, den));
            }
            return Poly::constant(spec_, Rat(num));
        }
        if (std::isalpha((unsigned char)c)) {
            size_t at = pos_;
            std::string name;
            name += text_[pos_++];
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
                name += text_[pos_++];
            int v = spec_.find_var(name);
            if (v < 0) { pos_ = at; fail("unknown variable '" + name + "'"); }
            return Poly::var(spec_, v);
        }
        fail("expected a number, variable or '('");
    }

    Int integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_]))
            fail("expected an integer");
        Int n = 0;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
            n = n * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return n;
    }
};

} // namespace

Poly parse_poly(const std::string& text, const VarSpec& spec) {
    return Parser(text, spec).run();
}

std::vector<std::string> split_components(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

MultiGerm parse_multigerm(const std::vector<std::string>& comps) {
    std::vector<Poly> polys;
    for (const auto& txt : comps) {
        VarSpec s = infer_spec(txt);
        polys.push_back(parse_poly(txt, s));
    }
    return make_multigerm(polys);
}

namespace {

// Collect the parameter names used across the component expressions and
// assemble the canonical shared block: t, q1..qn, u-parameters, z.
std::vector<Param> scan_params(const std::vector<std::string>& comps) {
    int qmax = 0;
    bool has_q_alias = false, has_z = false;
    std::vector<std::string> unames;
    for (const auto& text : comps) {
        size_t i = 0;
        while (i < text.size()) {
            if (!std::isalpha((unsigned char)text[i])) { ++i; continue; }
            std::string name;
            name += text[i++];
            while (i < text.size() && std::isdigit((unsigned char)text[i])) name += text[i++];
            if (name == "z") has_z = true;
            else if (name == "q") has_q_alias = true;
            else if (name[0] == 'q' && name.size() > 1) qmax = std::max(qmax, std::stoi(name.substr(1)));
            else if (name[0] == 'u' && name.size() > 1) {
                if (std::find(unames.begin(), unames.end(), name) == unames.end())
                    unames.push_back(name);
            }
        }
    }
    if (has_q_alias && qmax == 0) qmax = 1;
    std::vector<Param> ps;
    ps.push_back({"t", Role::Time});
    for (int j = 1; j <= qmax; ++j)
        ps.push_back({qmax == 1 ? std::string("q") : "q" + std::to_string(j), Role::Q});
    std::sort(unames.begin(), unames.end());
    for (const auto& u : unames) ps.push_back({u, Role::U});
    if (has_z) ps.push_back({"z", Role::Z});
    return ps;
}

} // namespace

Family parse_family(const std::vector<std::string>& comps) {
    Family F;
    F.shared = scan_params(comps);
    for (const auto& text : comps) {
        VarSpec s = infer_spec(text); // germ variables only
        s.params = F.shared;
        Poly f = parse_poly(text, s);
        F.comps.push_back({f, s.r, s.k});
    }
    return F;
}

VarSpec infer_spec(const std::string& text, const std::vector<Param>& param_pool) {
    int r = 0, k = 0;
    std::vector<bool> used(param_pool.size(), false);
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (!std::isalpha((unsigned char)c)) { ++i; continue; }
        std::string name;
        name += c;
        ++i;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) name += text[i++];
        if (name[0] == 'x') {
            int idx = name.size() > 1 ? std::stoi(name.substr(1)) : 1;
            r = std::max(r, idx);
        } else if (name[0] == 'y') {
            int idx = name.size() > 1 ? std::stoi(name.substr(1)) : 1;
            k = std::max(k, idx);
        } else {
            for (size_t j = 0; j < param_pool.size(); ++j) {
                if (param_pool[j].name == name) used[j] = true;
                else if (name == "q" && param_pool[j].role == Role::Q) used[j] = true;
                else if (name == "u" && param_pool[j].role == Role::U) used[j] = true;
            }
        }
    }
    VarSpec s = germ_spec(r, k);
    for (size_t j = 0; j < param_pool.size(); ++j)
        if (used[j]) s.params.push_back(param_pool[j]);
    return s;
}

} // namespace retic
