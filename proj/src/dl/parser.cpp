#include "omp/dl/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "omp/error.hpp"

namespace omp::dl {

namespace {

struct Token {
    enum Kind { Name, Number, LParen, RParen, Comma, End } kind;
    std::string text;
    std::size_t col;
};

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
           c == ':' || c == '/' || c == '#' || c == '?';
}

class LineParser {
public:
    LineParser(const std::string& line, std::size_t line_no) : line_no_(line_no) {
        tokenize(line);
    }

    Axiom parse_axiom() {
        Token head = expect(Token::Name, "axiom constructor");
        Axiom axiom = parse_axiom_body(head.text);
        if (peek().kind != Token::End)
            fail("trailing input after axiom");
        return axiom;
    }

    ClassExprPtr parse_expr_only() {
        ClassExprPtr e = parse_expr();
        if (peek().kind != Token::End)
            fail("trailing input after class expression");
        return e;
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t line_no_;

    void tokenize(const std::string& line) {
        std::size_t i = 0;
        while (i < line.size()) {
            char c = line[i];
            if (c == '#')
                break;
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (c == '(') {
                tokens_.push_back({Token::LParen, "(", i});
                ++i;
            } else if (c == ')') {
                tokens_.push_back({Token::RParen, ")", i});
                ++i;
            } else if (c == ',') {
                tokens_.push_back({Token::Comma, ",", i});
                ++i;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = i;
                while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])))
                    ++i;
                tokens_.push_back({Token::Number, line.substr(start, i - start), start});
            } else if (name_char(c)) {
                std::size_t start = i;
                while (i < line.size() && name_char(line[i]))
                    ++i;
                tokens_.push_back({Token::Name, line.substr(start, i - start), start});
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
        }
        tokens_.push_back({Token::End, "", line.size()});
    }

    [[noreturn]] void fail(const std::string& message) const {
        std::ostringstream os;
        os << "line " << line_no_ << ": " << message;
        throw Error("SyntaxError", os.str());
    }

    [[noreturn]] void fail_unsupported(const std::string& constructor) const {
        std::ostringstream os;
        os << "line " << line_no_ << ": unsupported constructor '" << constructor << "'";
        throw Error("UnsupportedConstructor", os.str());
    }

    const Token& peek() const { return tokens_[pos_]; }

    Token next() { return tokens_[pos_++]; }

    Token expect(Token::Kind kind, const std::string& what) {
        if (peek().kind != kind)
            fail("expected " + what + (peek().kind == Token::End
                                           ? " but reached end of line"
                                           : " but found '" + peek().text + "'"));
        return next();
    }

    std::vector<std::string> parse_name_list() {
        expect(Token::LParen, "'('");
        std::vector<std::string> names;
        names.push_back(expect(Token::Name, "name").text);
        while (peek().kind == Token::Comma) {
            next();
            names.push_back(expect(Token::Name, "name").text);
        }
        expect(Token::RParen, "')'");
        return names;
    }

    std::uint32_t parse_number() {
        Token t = expect(Token::Number, "non-negative integer");
        return static_cast<std::uint32_t>(std::strtoul(t.text.c_str(), nullptr, 10));
    }

    ClassExprPtr parse_expr() {
        Token t = expect(Token::Name, "class expression");
        const std::string& head = t.text;
        if (peek().kind != Token::LParen) {
            if (head == "Thing")
                return ClassExpr::top();
            if (head == "Nothing")
                return ClassExpr::bottom();
            return ClassExpr::named(head);
        }
        next();  // consume '('
        ClassExprPtr result;
        if (head == "Not") {
            result = ClassExpr::negation(parse_expr());
        } else if (head == "And" || head == "Or") {
            std::vector<ClassExprPtr> kids;
            kids.push_back(parse_expr());
            while (peek().kind == Token::Comma) {
                next();
                kids.push_back(parse_expr());
            }
            result = head == "And" ? ClassExpr::conjunction(std::move(kids))
                                   : ClassExpr::disjunction(std::move(kids));
        } else if (head == "Some" || head == "All") {
            std::string role = expect(Token::Name, "role name").text;
            expect(Token::Comma, "','");
            ClassExprPtr filler = parse_expr();
            result = head == "Some" ? ClassExpr::some(role, filler)
                                    : ClassExpr::all(role, filler);
        } else if (head == "AtLeast" || head == "AtMost" || head == "Exactly") {
            std::uint32_t n = parse_number();
            expect(Token::Comma, "','");
            std::string role = expect(Token::Name, "role name").text;
            expect(Token::Comma, "','");
            ClassExprPtr filler = parse_expr();
            if (head == "AtLeast")
                result = ClassExpr::at_least(n, role, filler);
            else if (head == "AtMost")
                result = ClassExpr::at_most(n, role, filler);
            else
                result = ClassExpr::exactly(n, role, filler);
        } else if (head == "OneOf") {
            std::vector<std::string> members;
            members.push_back(expect(Token::Name, "individual name").text);
            while (peek().kind == Token::Comma) {
                next();
                members.push_back(expect(Token::Name, "individual name").text);
            }
            result = ClassExpr::one_of(members);
        } else {
            fail_unsupported(head);
        }
        expect(Token::RParen, "')'");
        return result;
    }

    Axiom parse_axiom_body(const std::string& head) {
        if (head == "SubClassOf" || head == "EquivalentClasses" || head == "DisjointClasses") {
            expect(Token::LParen, "'('");
            ClassExprPtr lhs = parse_expr();
            expect(Token::Comma, "','");
            ClassExprPtr rhs = parse_expr();
            expect(Token::RParen, "')'");
            if (head == "SubClassOf")
                return Axiom::sub_class_of(lhs, rhs);
            if (head == "EquivalentClasses")
                return Axiom::equivalent_classes(lhs, rhs);
            return Axiom::disjoint_classes(lhs, rhs);
        }
        if (head == "ClassAssertion") {
            expect(Token::LParen, "'('");
            std::string ind = expect(Token::Name, "individual name").text;
            expect(Token::Comma, "','");
            ClassExprPtr c = parse_expr();
            expect(Token::RParen, "')'");
            return Axiom::class_assertion(ind, c);
        }
        if (head == "PropertyAssertion") {
            expect(Token::LParen, "'('");
            std::string subject = expect(Token::Name, "individual name").text;
            expect(Token::Comma, "','");
            std::string role = expect(Token::Name, "role name").text;
            expect(Token::Comma, "','");
            std::string object = expect(Token::Name, "individual name").text;
            expect(Token::RParen, "')'");
            return Axiom::property_assertion(subject, role, object);
        }
        if (head == "DifferentIndividuals") {
            return Axiom::different_individuals(parse_name_list());
        }
        fail_unsupported(head);
    }
};

}  // namespace

Ontology parse_ontology(const std::string& text) {
    Ontology onto;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = line;
        auto hash = stripped.find('#');
        if (hash != std::string::npos)
            stripped.erase(hash);
        bool blank = true;
        for (char c : stripped)
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        if (blank)
            continue;
        LineParser parser(line, line_no);
        onto.add(parser.parse_axiom());
    }
    return onto;
}

ClassExprPtr parse_class_expr(const std::string& text) {
    LineParser parser(text, 1);
    return parser.parse_expr_only();
}

}  // namespace omp::dl
