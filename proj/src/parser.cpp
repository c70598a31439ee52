#include "extracta/parser.hpp"

#include <cctype>
#include <sstream>

#include "extracta/printing.hpp"

namespace extracta {

namespace {

struct Token {
    enum Kind { ident, integer, punct, end } kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, tok_.line, tok_.col);
    }

private:
    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else {
                break;
            }
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_ = {Token::end, "", line_, col_};
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::ident, std::string(text_.substr(start, pos_ - start)), line_, col_};
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_ = {Token::integer, std::string(text_.substr(start, pos_ - start)), line_, col_};
        } else {
            tok_ = {Token::punct, std::string(1, c), line_, col_};
            ++pos_;
        }
        col_ += static_cast<int>(tok_.text.size());
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_{Token::end, "", 1, 1};
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    InputFile parse_file() {
        InputFile out;
        while (lex_.peek().kind != Token::end) {
            Token head = expect_ident("statement keyword");
            if (head.text == "ring") {
                if (out.ring) fail_at(head, "ring already declared");
                out.ring = parse_ring_decl();
            } else if (head.text == "ideal") {
                require_ring(out, head);
                auto [name, ideal] = parse_ideal_decl(*out.ring);
                if (!out.ideals.emplace(name, ideal).second)
                    fail_at(head, "ideal '" + name + "' already declared");
                out.ideal_names.push_back(name);
            } else if (head.text == "order") {
                require_ring(out, head);
                auto [name, order] = parse_order_decl(*out.ring);
                if (!out.orders.emplace(name, order).second)
                    fail_at(head, "order '" + name + "' already declared");
                out.order_names.push_back(name);
            } else if (head.text == "points") {
                require_ring(out, head);
                auto [name, pts] = parse_points_decl(*out.ring);
                if (!out.point_sets.emplace(name, pts).second)
                    fail_at(head, "points '" + name + "' already declared");
                out.point_set_names.push_back(name);
            } else if (head.text == "poly") {
                require_ring(out, head);
                auto [name, p] = parse_poly_decl(*out.ring);
                if (!out.polys.emplace(name, p).second)
                    fail_at(head, "poly '" + name + "' already declared");
                out.poly_names.push_back(name);
            } else {
                fail_at(head, "unknown statement '" + head.text + "'");
            }
        }
        return out;
    }

    Polynomial parse_single_polynomial(const Ring& ring) {
        Polynomial p = parse_expr(ring);
        expect_end();
        return p;
    }

    OrderSpec parse_single_order(const Ring& ring) {
        OrderSpec o = parse_order_spec_body(ring);
        expect_end();
        return o;
    }

private:
    Lexer lex_;

    [[noreturn]] void fail_at(const Token& t, const std::string& msg) {
        throw ParseError(msg, t.line, t.col);
    }

    void require_ring(const InputFile& f, const Token& at) {
        if (!f.ring) fail_at(at, "ring must be declared first");
    }

    Token expect_ident(const std::string& what) {
        Token t = lex_.take();
        if (t.kind != Token::ident) fail_at(t, "expected " + what);
        return t;
    }

    void expect_punct(char c) {
        Token t = lex_.take();
        if (t.kind != Token::punct || t.text[0] != c)
            fail_at(t, std::string("expected '") + c + "'");
    }

    bool peek_punct(char c) const {
        return lex_.peek().kind == Token::punct && lex_.peek().text[0] == c;
    }

    void expect_end() {
        if (lex_.peek().kind != Token::end) lex_.fail("unexpected trailing input");
    }

    long long expect_integer(const std::string& what) {
        bool neg = false;
        if (peek_punct('-')) {
            lex_.take();
            neg = true;
        }
        Token t = lex_.take();
        if (t.kind != Token::integer) fail_at(t, "expected " + what);
        long long v = std::stoll(t.text);
        return neg ? -v : v;
    }

    Rational expect_rational() {
        long long num = expect_integer("a number");
        if (peek_punct('/')) {
            lex_.take();
            Token t = lex_.take();
            if (t.kind != Token::integer || std::stoll(t.text) == 0)
                fail_at(t, "expected a positive denominator");
            Rational q(static_cast<long>(num), std::stol(t.text));
            q.canonicalize();
            return q;
        }
        return Rational(static_cast<long>(num));
    }

    Ring parse_ring_decl() {
        std::vector<std::string> names;
        names.push_back(expect_ident("a variable name").text);
        while (peek_punct(',')) {
            lex_.take();
            names.push_back(expect_ident("a variable name").text);
        }
        expect_punct(';');
        return Ring(std::move(names));
    }

    std::pair<std::string, Ideal> parse_ideal_decl(const Ring& ring) {
        std::string name = expect_ident("an ideal name").text;
        expect_punct('=');
        std::vector<Polynomial> gens;
        gens.push_back(parse_expr(ring));
        while (peek_punct(',')) {
            lex_.take();
            gens.push_back(parse_expr(ring));
        }
        expect_punct(';');
        return {name, Ideal(ring, std::move(gens))};
    }

    std::pair<std::string, Polynomial> parse_poly_decl(const Ring& ring) {
        std::string name = expect_ident("a polynomial name").text;
        expect_punct('=');
        Polynomial p = parse_expr(ring);
        expect_punct(';');
        return {name, p};
    }

    std::pair<std::string, OrderSpec> parse_order_decl(const Ring& ring) {
        std::string name = expect_ident("an order name").text;
        expect_punct('=');
        OrderSpec o = parse_order_spec_body(ring);
        expect_punct(';');
        return {name, o};
    }

    std::pair<std::string, RationalPointSet> parse_points_decl(const Ring& ring) {
        std::string name = expect_ident("a point-set name").text;
        expect_punct('=');
        std::vector<std::vector<Rational>> pts;
        pts.push_back(parse_point(ring));
        while (peek_punct(',')) {
            lex_.take();
            pts.push_back(parse_point(ring));
        }
        expect_punct(';');
        return {name, RationalPointSet(ring, std::move(pts))};
    }

    std::vector<Rational> parse_point(const Ring& ring) {
        Token open = lex_.peek();
        expect_punct('(');
        std::vector<Rational> coords;
        coords.push_back(expect_rational());
        while (peek_punct(',')) {
            lex_.take();
            coords.push_back(expect_rational());
        }
        expect_punct(')');
        if (static_cast<int>(coords.size()) != ring.nvars())
            fail_at(open, "point has " + std::to_string(coords.size()) + " coordinates, ring has " +
                              std::to_string(ring.nvars()) + " variables");
        return coords;
    }

    // expr := ["+"|"-"] term { ("+"|"-") term }
    Polynomial parse_expr(const Ring& ring) {
        bool neg = false;
        if (peek_punct('-')) {
            lex_.take();
            neg = true;
        } else if (peek_punct('+')) {
            lex_.take();
        }
        Polynomial acc = parse_term(ring);
        if (neg) acc = -acc;
        while (peek_punct('+') || peek_punct('-')) {
            bool minus = lex_.take().text[0] == '-';
            Polynomial t = parse_term(ring);
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    // term := factor { "*" factor }
    Polynomial parse_term(const Ring& ring) {
        Polynomial acc = parse_factor(ring);
        while (peek_punct('*')) {
            lex_.take();
            acc = acc * parse_factor(ring);
        }
        return acc;
    }

    // factor := (number | ident | "(" expr ")") [ "^" posint ]
    Polynomial parse_factor(const Ring& ring) {
        Token t = lex_.peek();
        Polynomial base = Polynomial::zero(ring);
        if (t.kind == Token::integer) {
            base = Polynomial::constant(ring, expect_rational());
        } else if (t.kind == Token::ident) {
            lex_.take();
            auto idx = ring.var_index(t.text);
            if (!idx) fail_at(t, "undeclared variable '" + t.text + "'");
            base = Polynomial::variable(ring, *idx);
        } else if (t.kind == Token::punct && t.text[0] == '(') {
            lex_.take();
            base = parse_expr(ring);
            expect_punct(')');
        } else {
            fail_at(t, "expected a factor");
        }
        if (peek_punct('^')) {
            lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::integer || std::stoll(e.text) < 1)
                fail_at(e, "exponent must be a positive integer literal");
            base = base.pow(static_cast<int>(std::stoll(e.text)));
        }
        return base;
    }

    OrderSpec parse_order_spec_body(const Ring& ring) {
        Token t = expect_ident("an order name");
        if (t.text == "lex") return OrderSpec::lex(ring);
        if (t.text == "deglex") return OrderSpec::deglex(ring);
        if (t.text == "degrevlex") return OrderSpec::degrevlex(ring);
        if (t.text == "neglex") return OrderSpec::neglex(ring);
        if (t.text == "negdegrevlex") return OrderSpec::negdegrevlex(ring);
        if (t.text == "matrix") return parse_matrix_order(ring);
        if (t.text == "block") return parse_block_order(ring);
        fail_at(t, "unknown order spec '" + t.text + "'");
    }

    OrderSpec parse_matrix_order(const Ring& ring) {
        expect_punct('(');
        expect_punct('[');
        std::vector<std::vector<long long>> rows;
        rows.push_back(parse_matrix_row());
        while (peek_punct(',')) {
            lex_.take();
            rows.push_back(parse_matrix_row());
        }
        expect_punct(']');
        expect_punct(')');
        Token at = lex_.peek();
        for (const auto& r : rows)
            if (static_cast<int>(r.size()) != ring.nvars())
                fail_at(at, "matrix row length does not match the ring");
        return OrderSpec::from_matrix(ring, std::move(rows));
    }

    std::vector<long long> parse_matrix_row() {
        expect_punct('[');
        std::vector<long long> row;
        row.push_back(expect_integer("a matrix entry"));
        while (peek_punct(',')) {
            lex_.take();
            row.push_back(expect_integer("a matrix entry"));
        }
        expect_punct(']');
        return row;
    }

    OrderSpec parse_block_order(const Ring& ring) {
        expect_punct('(');
        std::vector<BlockPart> parts;
        parts.push_back(parse_block_part(ring));
        while (peek_punct(';')) {
            lex_.take();
            parts.push_back(parse_block_part(ring));
        }
        expect_punct(')');
        return make_block_order_from_parts(ring, parts);
    }

    BlockPart parse_block_part(const Ring& ring) {
        // The part's sub-order is parsed over a ring on just its variables.
        Token spec = expect_ident("an order spec");
        expect_punct(':');
        std::vector<int> vars;
        std::vector<std::string> names;
        Token first = expect_ident("a variable name");
        auto add_var = [&](const Token& v) {
            auto idx = ring.var_index(v.text);
            if (!idx) fail_at(v, "undeclared variable '" + v.text + "'");
            vars.push_back(*idx);
            names.push_back(v.text);
        };
        add_var(first);
        while (peek_punct(',')) {
            lex_.take();
            add_var(expect_ident("a variable name"));
        }
        Ring sub(names);
        OrderSpec sub_order = [&] {
            if (spec.text == "lex") return OrderSpec::lex(sub);
            if (spec.text == "deglex") return OrderSpec::deglex(sub);
            if (spec.text == "degrevlex") return OrderSpec::degrevlex(sub);
            if (spec.text == "neglex") return OrderSpec::neglex(sub);
            if (spec.text == "negdegrevlex") return OrderSpec::negdegrevlex(sub);
            fail_at(spec, "unknown block sub-order '" + spec.text + "'");
        }();
        return BlockPart{sub_order.matrix(), vars};
    }
};

} // namespace

InputFile parse_input(std::string_view text) { return Parser(text).parse_file(); }

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
    return Parser(text).parse_single_polynomial(ring);
}

OrderSpec parse_order_spec(std::string_view text, const Ring& ring) {
    return Parser(text).parse_single_order(ring);
}

PrimaryDecomposition parse_decomposition(std::string_view text, const Ring& ring,
                                         const Ideal& ideal) {
    std::optional<Provenance> provenance;
    std::vector<Ideal> components;
    std::vector<std::optional<Ideal>> radicals;
    std::vector<Polynomial>* current_gens = nullptr;

    std::vector<std::vector<Polynomial>> component_gens;
    std::vector<std::vector<Polynomial>> radical_gens; // parallel; empty = absent

    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);

        if (line.rfind("provenance:", 0) == 0) {
            std::string value = line.substr(11);
            value.erase(0, value.find_first_not_of(" \t"));
            provenance = provenance_from_string(value);
            if (!provenance)
                throw ParseError("unknown provenance '" + value + "'", line_no, 1);
        } else if (line == "component:") {
            component_gens.emplace_back();
            radical_gens.emplace_back();
            current_gens = &component_gens.back();
        } else if (line == "radical:") {
            if (component_gens.empty())
                throw ParseError("radical block before any component", line_no, 1);
            current_gens = &radical_gens.back();
        } else {
            if (!current_gens)
                throw ParseError("generator line outside a component block", line_no, 1);
            try {
                current_gens->push_back(parse_polynomial(line, ring));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), line_no, e.col());
            }
        }
    }
    if (!provenance)
        throw ParseError("decomposition file is missing a provenance line", line_no, 1);
    if (component_gens.empty())
        throw ParseError("decomposition file declares no components", line_no, 1);

    PrimaryDecomposition D{ideal, {}, *provenance,
                           *provenance == Provenance::user_supplied ? false : true,
                           std::nullopt};
    bool all_radicals = true;
    std::vector<Ideal> rad;
    for (size_t i = 0; i < component_gens.size(); ++i) {
        D.components.push_back(Ideal(ring, component_gens[i]));
        if (radical_gens[i].empty())
            all_radicals = false;
        else
            rad.push_back(Ideal(ring, radical_gens[i]));
    }
    if (all_radicals) D.component_radicals = std::move(rad);
    D.verify();
    return D;
}

std::string format_decomposition(const PrimaryDecomposition& D) {
    std::ostringstream os;
    os << "provenance: " << to_string(D.provenance) << "\n";
    for (size_t i = 0; i < D.components.size(); ++i) {
        os << "component:\n";
        for (const auto& g : D.components[i].gens()) os << to_string(g) << "\n";
        if (D.component_radicals) {
            os << "radical:\n";
            for (const auto& g : (*D.component_radicals)[i].gens()) os << to_string(g) << "\n";
        }
    }
    return os.str();
}

} // namespace extracta
