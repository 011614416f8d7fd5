#include "koszul/scenario.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace koszul {

namespace {

struct Token {
    enum Kind { Ident, Int, Plus, Minus, Star, LParen, RParen, Colon, Equals,
                Slash, End };
    Kind kind;
    std::string text;
    int col = 0;  // 1-based column within the line
};

std::vector<Token> lex(const std::string& s, int line, int col_base = 1) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        const int col = col_base + static_cast<int>(i);
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) ||
                    s[j] == '_'))
                ++j;
            out.push_back({Token::Ident, s.substr(i, j - i), col});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() &&
                   std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            out.push_back({Token::Int, s.substr(i, j - i), col});
            i = j;
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '*': k = Token::Star; break;
            case '(': k = Token::LParen; break;
            case ')': k = Token::RParen; break;
            case ':': k = Token::Colon; break;
            case '=': k = Token::Equals; break;
            case '/': k = Token::Slash; break;
            default:
                throw ParseError(line, col,
                                 std::string("unexpected character '") + c +
                                     "'");
        }
        out.push_back({k, std::string(1, c), col});
        ++i;
    }
    out.push_back({Token::End, "",
                   col_base + static_cast<int>(s.size())});
    return out;
}

// Recursive-descent expression parser over a token stream.
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-'* atom
//   atom   := INT ('/' INT)? | NAME | 'p' '(' NAME ')' | '(' expr ')'
// One-form expressions replace the leading factor of each term by a
// 'd' '(' NAME ')' marker (or are the literal 0).
class ExprParser {
public:
    ExprParser(ChartPtr chart, std::vector<Token> toks, int line)
        : chart_(std::move(chart)), toks_(std::move(toks)), line_(line) {}

    explicit ExprParser(ChartPtr chart, const std::string& text, int line = 1)
        : ExprParser(std::move(chart), lex(text, line), line) {}

    GradedPoly parse_full_poly() {
        GradedPoly p = parse_expr();
        expect_end();
        return p;
    }

    OneForm parse_full_form() {
        OneForm f = parse_form();
        expect_end();
        return f;
    }

    void expect_end() {
        if (cur().kind != Token::End)
            throw ParseError(line_, cur().col, "unexpected trailing input");
    }

    // Consumes ':' / '=' / identifiers for the directive heads.
    const Token& cur() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    Token expect(Token::Kind k, const char* what) {
        if (cur().kind != k)
            throw ParseError(line_, cur().col,
                             std::string("expected ") + what);
        return take();
    }

    GradedPoly parse_expr() {
        GradedPoly p = parse_term();
        while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
            const bool minus = take().kind == Token::Minus;
            GradedPoly q = parse_term();
            p = minus ? p - q : p + q;
        }
        return p;
    }

    OneForm parse_form() {
        std::vector<GradedPoly> comps(chart_->size(),
                                      GradedPoly::zero(chart_));
        bool first = true;
        Rational sign = 1;
        while (true) {
            if (first && cur().kind == Token::Minus) {
                take();
                sign = -1;
            }
            first = false;
            parse_form_term(comps, sign);
            if (cur().kind == Token::Plus) {
                take();
                sign = 1;
            } else if (cur().kind == Token::Minus) {
                take();
                sign = -1;
            } else {
                break;
            }
        }
        return OneForm::make(chart_, std::move(comps));
    }

private:
    GradedPoly parse_term() {
        GradedPoly p = parse_factor();
        while (cur().kind == Token::Star) {
            take();
            p = p * parse_factor();
        }
        return p;
    }

    GradedPoly parse_factor() {
        Rational sign = 1;
        while (cur().kind == Token::Minus) {
            take();
            sign = -sign;
        }
        return parse_atom() * sign;
    }

    GradedPoly parse_atom() {
        const Token t = cur();
        switch (t.kind) {
            case Token::Int: {
                take();
                Rational r{Integer(t.text)};
                if (cur().kind == Token::Slash) {
                    take();
                    const Token d = expect(Token::Int, "denominator");
                    Integer den(d.text);
                    if (den == 0)
                        throw ParseError(line_, d.col, "zero denominator");
                    r /= Rational(den);
                }
                return GradedPoly::constant(chart_, r);
            }
            case Token::Ident: {
                take();
                if (t.text == "p" && cur().kind == Token::LParen) {
                    take();
                    const Token nm = expect(Token::Ident, "coordinate name");
                    expect(Token::RParen, "')'");
                    const int o = chart_->ordinal("p(" + nm.text + ")");
                    if (o < 0)
                        throw ParseError(line_, nm.col,
                                         "unknown momentum p(" + nm.text +
                                             ")");
                    return GradedPoly::coordinate(chart_, o);
                }
                const int o = chart_->ordinal(t.text);
                if (o < 0)
                    throw ParseError(line_, t.col,
                                     "unknown coordinate '" + t.text + "'");
                return GradedPoly::coordinate(chart_, o);
            }
            case Token::LParen: {
                take();
                GradedPoly p = parse_expr();
                expect(Token::RParen, "')'");
                return p;
            }
            default:
                throw ParseError(line_, t.col, "expected expression");
        }
    }

    void parse_form_term(std::vector<GradedPoly>& comps,
                         const Rational& sign) {
        // A lone literal 0 denotes the zero form.
        if (cur().kind == Token::Int && cur().text == "0") {
            take();
            return;
        }
        const Token d = cur();
        if (d.kind != Token::Ident || d.text != "d")
            throw ParseError(line_, d.col,
                             "one-form terms start with d(<coordinate>)");
        take();
        expect(Token::LParen, "'('");
        const Token nm = expect(Token::Ident, "coordinate name");
        expect(Token::RParen, "')'");
        const int o = chart_->ordinal(nm.text);
        if (o < 0 || chart_->is_momentum(o))
            throw ParseError(line_, nm.col,
                             "d() takes a base coordinate, got '" + nm.text +
                                 "'");
        GradedPoly coeff = GradedPoly::constant(chart_, sign);
        while (cur().kind == Token::Star) {
            take();
            coeff = coeff * parse_factor();
        }
        comps[o] += coeff;
    }

    ChartPtr chart_;
    std::vector<Token> toks_;
    size_t pos_ = 0;
    int line_;
};

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::string strip_comment(const std::string& line) {
    const auto h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

bool is_blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

const char* role_name(Role r) {
    switch (r) {
        case Role::MC: return "mc";
        case Role::Gauge: return "gauge";
        case Role::Ambient: return "ambient";
        case Role::OneFormRole: return "oneform";
    }
    return "?";
}

struct CheckSpec {
    const char* kind;
    int argc;
};

constexpr CheckSpec kCheckSpecs[] = {
    {"master", 0},       {"brackets", 1}, {"mc", 1},
    {"mc-formal", 2},    {"gauge", 2},    {"kuranishi", 1},
    {"extended", 2},     {"graph-lagrangian", 1},
};

bool is_positive_int(const std::string& s) {
    if (s.empty() || s == "0") return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Validates that an element's polynomial or form fits its declared role.
void validate_role(const Element& el, int n, int line) {
    const char* rn = role_name(el.role);
    auto need_degree = [&](const GradedPoly& p, int want) {
        if (p.is_zero()) return;
        auto d = p.degree();
        if (!d || *d != want)
            throw ParseError(line, 1,
                             std::string(rn) + " element '" + el.name +
                                 "' must be homogeneous of degree " +
                                 std::to_string(want));
    };
    switch (el.role) {
        case Role::MC:
        case Role::Gauge:
            if (!el.poly.is_base())
                throw ParseError(line, 1,
                                 std::string(rn) + " element '" + el.name +
                                     "' must be a base polynomial");
            need_degree(el.poly, el.role == Role::MC ? n : n - 1);
            break;
        case Role::Ambient:
            need_degree(el.poly, n + 1);
            break;
        case Role::OneFormRole: {
            const OneForm& f = *el.form;
            bool zero = true;
            for (const auto& c : f.comps) {
                if (!c.is_base())
                    throw ParseError(line, 1,
                                     "oneform element '" + el.name +
                                         "' needs base coefficients");
                zero = zero && c.is_zero();
            }
            auto fd = f.form_degree();
            if (!fd || (!zero && *fd != n))
                throw ParseError(line, 1,
                                 "oneform element '" + el.name +
                                     "' must have form degree " +
                                     std::to_string(n));
            break;
        }
    }
}

}  // namespace

const Element* Scenario::find(const std::string& name) const {
    for (const auto& e : elements)
        if (e.name == name) return &e;
    return nullptr;
}

std::string Scenario::render() const {
    std::string out;
    for (const auto& c : base)
        out += "coord " + c.name + " : " + std::to_string(c.degree) + "\n";
    out += "shift " + std::to_string(shift) + "\n";
    if (theta) out += "theta = " + theta->render() + "\n";
    for (const auto& e : elements) {
        out += "element " + e.name + " : " + role_name(e.role) + " = ";
        out += e.role == Role::OneFormRole ? e.form->render()
                                           : e.poly.render();
        out += "\n";
    }
    for (const auto& c : checks) {
        out += "check " + c.kind;
        for (const auto& a : c.args) out += " " + a;
        out += "\n";
    }
    return out;
}

Scenario parse_scenario(const std::string& text, const std::string& path) {
    Scenario sc;
    sc.path = path;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip_comment(raw);
        if (is_blank(line)) continue;

        const auto words = split_words(line);
        const std::string& head = words.front();
        const bool have_chart = sc.chart != nullptr;

        if (head == "coord") {
            if (have_chart)
                throw ParseError(lineno, 1,
                                 "coordinates must be declared before shift");
            ExprParser p(nullptr, lex(line, lineno), lineno);
            p.expect(Token::Ident, "'coord'");
            const Token nm = p.expect(Token::Ident, "coordinate name");
            p.expect(Token::Colon, "':'");
            const Token deg = p.expect(Token::Int, "nonnegative degree");
            p.expect_end();
            for (const auto& c : sc.base)
                if (c.name == nm.text)
                    throw ParseError(lineno, nm.col,
                                     "duplicate coordinate '" + nm.text +
                                         "'");
            sc.base.push_back({nm.text, std::stoi(deg.text)});
        } else if (head == "shift") {
            if (have_chart) throw ParseError(lineno, 1, "duplicate shift");
            ExprParser p(nullptr, lex(line, lineno), lineno);
            p.expect(Token::Ident, "'shift'");
            const Token n = p.expect(Token::Int, "nonnegative shift");
            p.expect_end();
            sc.shift = std::stoi(n.text);
            try {
                sc.chart = Chart::shifted_cotangent(sc.base, sc.shift);
            } catch (const std::exception& e) {
                throw ParseError(lineno, 1, e.what());
            }
        } else if (head == "theta") {
            if (!have_chart)
                throw ParseError(lineno, 1, "theta before shift");
            if (sc.theta) throw ParseError(lineno, 1, "duplicate theta");
            ExprParser p(sc.chart, lex(line, lineno), lineno);
            p.expect(Token::Ident, "'theta'");
            p.expect(Token::Equals, "'='");
            sc.theta = p.parse_expr();
            p.expect_end();
        } else if (head == "element") {
            if (!have_chart)
                throw ParseError(lineno, 1, "element before shift");
            ExprParser p(sc.chart, lex(line, lineno), lineno);
            p.expect(Token::Ident, "'element'");
            const Token nm = p.expect(Token::Ident, "element name");
            p.expect(Token::Colon, "':'");
            const Token role = p.expect(Token::Ident, "role");
            p.expect(Token::Equals, "'='");

            Element el;
            el.name = nm.text;
            if (role.text == "mc") el.role = Role::MC;
            else if (role.text == "gauge") el.role = Role::Gauge;
            else if (role.text == "ambient") el.role = Role::Ambient;
            else if (role.text == "oneform") el.role = Role::OneFormRole;
            else
                throw ParseError(lineno, role.col,
                                 "unknown role '" + role.text +
                                     "' (mc, gauge, ambient, oneform)");
            if (sc.chart->ordinal(el.name) >= 0)
                throw ParseError(lineno, nm.col,
                                 "element name '" + el.name +
                                     "' collides with a coordinate");
            if (sc.find(el.name))
                throw ParseError(lineno, nm.col,
                                 "duplicate element '" + el.name + "'");
            if (el.role == Role::OneFormRole) {
                el.poly = GradedPoly::zero(sc.chart);
                el.form = p.parse_form();
            } else {
                el.poly = p.parse_expr();
            }
            p.expect_end();
            validate_role(el, sc.shift, lineno);
            sc.elements.push_back(std::move(el));
        } else if (head == "check") {
            if (!have_chart)
                throw ParseError(lineno, 1, "check before shift");
            CheckRequest req;
            req.kind = words.size() > 1 ? words[1] : "";
            req.args.assign(words.begin() + (words.size() > 1 ? 2 : 1),
                            words.end());
            req.line = lineno;
            const CheckSpec* spec = nullptr;
            for (const auto& s : kCheckSpecs)
                if (req.kind == s.kind) spec = &s;
            if (!spec)
                throw ParseError(lineno, 1,
                                 "unknown check kind '" + req.kind + "'");
            if (static_cast<int>(req.args.size()) != spec->argc)
                throw ParseError(lineno, 1,
                                 "check " + req.kind + " takes " +
                                     std::to_string(spec->argc) +
                                     " argument(s)");
            if ((req.kind == "brackets" && !is_positive_int(req.args[0])) ||
                (req.kind == "mc-formal" && !is_positive_int(req.args[1])))
                throw ParseError(lineno, 1,
                                 "check " + req.kind +
                                     " needs a positive integer argument");
            sc.checks.push_back(std::move(req));
        } else {
            throw ParseError(lineno, 1, "unknown directive '" + head + "'");
        }
    }
    if (!sc.chart)
        throw ParseError(lineno + 1, 1, "scenario never declared a shift");
    return sc;
}

Scenario load_scenario(const std::string& file_path) {
    std::ifstream in(file_path);
    if (!in)
        throw std::runtime_error("cannot open scenario file: " + file_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), file_path);
}

GradedPoly parse_poly(const ChartPtr& chart, const std::string& text) {
    ExprParser p(chart, text, 1);
    return p.parse_full_poly();
}

}  // namespace koszul
