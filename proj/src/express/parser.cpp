#include "express/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace ifcwod::express {

namespace {

struct Token {
    enum Kind { Ident, Number, String, Punct, End } kind = End;
    std::string text;
    int line = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip();
        Token t;
        t.line = line_;
        if (pos_ >= text_.size()) return t;
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                t.text += text_[pos_++];
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Number;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                t.text += text_[pos_++];
            return t;
        }
        if (c == '\'') {
            t.kind = Token::String;
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '\'') {
                if (text_[pos_] == '\n') ++line_;
                t.text += text_[pos_++];
            }
            if (pos_ < text_.size()) ++pos_;
            return t;
        }
        t.kind = Token::Punct;
        t.text = c;
        ++pos_;
        return t;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;

    void skip() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '(' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
                pos_ += 2;
                while (pos_ + 1 < text_.size() && !(text_[pos_] == '*' && text_[pos_ + 1] == ')')) {
                    if (text_[pos_] == '\n') ++line_;
                    ++pos_;
                }
                pos_ = std::min(pos_ + 2, text_.size());
            } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }
};

bool kw(const Token& t, const char* word) {
    return t.kind == Token::Ident && toLower(t.text) == toLower(word);
}

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) { advance(); }

    ExpressSchema run() {
        while (cur_.kind != Token::End) {
            if (kw(cur_, "ENTITY")) {
                parseEntity();
            } else if (kw(cur_, "TYPE")) {
                parseType();
            } else {
                advance();  // SCHEMA header, FUNCTION bodies, etc.
            }
        }
        validate();
        return std::move(schema_);
    }

private:
    Lexer lex_;
    Token cur_;
    ExpressSchema schema_;

    void advance() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& msg) { throw ExpressParseError(cur_.line, msg); }

    std::string expectIdent() {
        if (cur_.kind != Token::Ident) fail("expected identifier, got '" + cur_.text + "'");
        std::string s = cur_.text;
        advance();
        return s;
    }

    void expectPunct(char c) {
        if (cur_.kind != Token::Punct || cur_.text[0] != c)
            fail(std::string("expected '") + c + "', got '" + cur_.text + "'");
        advance();
    }

    bool punct(char c) const { return cur_.kind == Token::Punct && cur_.text[0] == c; }

    std::vector<std::string> parseNameList() {
        expectPunct('(');
        std::vector<std::string> names;
        int depth = 1;
        while (depth > 0) {
            if (cur_.kind == Token::End) fail("unterminated parenthesized list");
            if (punct('(')) ++depth;
            else if (punct(')')) --depth;
            else if (cur_.kind == Token::Ident && depth == 1 && !kw(cur_, "ONEOF"))
                names.push_back(cur_.text);
            if (depth > 0) advance();
        }
        expectPunct(')');
        return names;
    }

    void parseEntity() {
        int startLine = cur_.line;
        advance();  // ENTITY
        EntityDef def;
        def.name = expectIdent();
        // header clauses up to ';'
        while (!punct(';')) {
            if (cur_.kind == Token::End)
                throw ExpressParseError(startLine, "unbalanced ENTITY " + def.name + " (no header terminator)");
            if (kw(cur_, "ABSTRACT")) {
                def.is_abstract = true;
                advance();
            } else if (kw(cur_, "SUPERTYPE")) {
                advance();
                if (kw(cur_, "OF")) advance();
                if (punct('(')) parseNameList();  // subtype list carries no attribute data
            } else if (kw(cur_, "SUBTYPE")) {
                advance();
                if (kw(cur_, "OF")) advance();
                def.supertypes = parseNameList();
            } else {
                advance();
            }
        }
        advance();  // ';'

        enum Section { Attrs, Inverse, Skipped } section = Attrs;
        while (!kw(cur_, "END_ENTITY")) {
            if (cur_.kind == Token::End)
                throw ExpressParseError(startLine, "unbalanced ENTITY " + def.name + " (missing END_ENTITY)");
            if (kw(cur_, "INVERSE")) {
                section = Inverse;
                advance();
                continue;
            }
            if (kw(cur_, "WHERE") || kw(cur_, "DERIVE") || kw(cur_, "UNIQUE")) {
                schema_.diagnostics.push_back("entity " + def.name + ": skipped " +
                                              toLower(cur_.text) + " clause at line " +
                                              std::to_string(cur_.line));
                section = Skipped;
                advance();
                continue;
            }
            if (section == Skipped) {
                advance();
                continue;
            }
            if (section == Attrs) {
                def.attributes.push_back(parseAttribute());
            } else {
                def.inverses.push_back(parseInverse());
            }
        }
        advance();  // END_ENTITY
        if (punct(';')) advance();
        schema_.addEntity(std::move(def));
    }

    AttributeDef parseAttribute() {
        AttributeDef a;
        a.name = expectIdent();
        expectPunct(':');
        if (kw(cur_, "OPTIONAL")) {
            a.is_optional = true;
            advance();
        }
        // Aggregations unwrap to the element type; only the outermost shape
        // is kept.
        bool first = true;
        while (kw(cur_, "SET") || kw(cur_, "LIST") || kw(cur_, "BAG") || kw(cur_, "ARRAY")) {
            if (first) {
                a.aggregation = (kw(cur_, "LIST") || kw(cur_, "ARRAY")) ? Aggregation::List
                                                                       : Aggregation::Set;
            }
            first = false;
            advance();
            if (punct('[')) a.bounds = parseBounds();
            if (kw(cur_, "OF")) advance();
            if (kw(cur_, "UNIQUE")) advance();
        }
        a.type_name = expectIdent();
        expectPunct(';');
        return a;
    }

    Bounds parseBounds() {
        expectPunct('[');
        Bounds b;
        if (cur_.kind == Token::Number) {
            b.low = std::stol(cur_.text);
            advance();
        }
        expectPunct(':');
        if (cur_.kind == Token::Number) {
            b.high = std::stol(cur_.text);
            advance();
        } else if (punct('?')) {
            b.high = -1;
            advance();
        }
        expectPunct(']');
        if (b.high >= 0 && b.low > b.high) fail("aggregation bounds out of order");
        return b;
    }

    InverseAttributeDef parseInverse() {
        InverseAttributeDef inv;
        inv.name = expectIdent();
        expectPunct(':');
        while (kw(cur_, "SET") || kw(cur_, "LIST") || kw(cur_, "BAG")) {
            advance();
            if (punct('[')) parseBounds();
            if (kw(cur_, "OF")) advance();
        }
        inv.relationship_entity = expectIdent();
        if (!kw(cur_, "FOR")) fail("expected FOR in inverse attribute " + inv.name);
        advance();
        inv.for_attribute = expectIdent();
        expectPunct(';');
        return inv;
    }

    void parseType() {
        advance();  // TYPE
        std::string name = expectIdent();
        expectPunct('=');
        if (kw(cur_, "ENUMERATION")) {
            advance();
            if (kw(cur_, "OF")) advance();
            schema_.addEnumeration(name, parseNameList());
        } else if (kw(cur_, "SELECT")) {
            advance();
            schema_.addSelect(name, parseNameList());
        } else {
            schema_.addTypeName(name);
        }
        while (cur_.kind != Token::End && !kw(cur_, "END_TYPE")) advance();
        if (kw(cur_, "END_TYPE")) advance();
        if (punct(';')) advance();
    }

    void validate() {
        for (const auto& name : schema_.entityNames()) {
            const EntityDef* def = schema_.entity(name);
            std::set<std::string> seen;
            for (const auto& a : schema_.flattenedAttributes(name)) {
                if (!seen.insert(toLower(a.name)).second)
                    schema_.diagnostics.push_back("entity " + name +
                                                  ": duplicate attribute name " + a.name);
            }
            for (const auto& inv : def->inverses) {
                const EntityDef* rel = schema_.entity(inv.relationship_entity);
                if (!rel) {
                    schema_.diagnostics.push_back("entity " + name + ": inverse " + inv.name +
                                                  " references unknown entity " +
                                                  inv.relationship_entity);
                    continue;
                }
                auto attrs = schema_.flattenedAttributes(rel->name);
                bool found = std::any_of(attrs.begin(), attrs.end(), [&](const AttributeDef& a) {
                    return toLower(a.name) == toLower(inv.for_attribute);
                });
                if (!found)
                    schema_.diagnostics.push_back("entity " + name + ": inverse " + inv.name +
                                                  " FOR " + inv.for_attribute +
                                                  " does not name an attribute of " + rel->name);
            }
        }
    }
};

}  // namespace

std::string decodeTextBytes(const std::string& bytes) {
    // Valid UTF-8?
    std::size_t i = 0;
    bool utf8 = true;
    while (i < bytes.size()) {
        unsigned char c = bytes[i];
        int extra = c < 0x80 ? 0 : c >= 0xF0 ? 3 : c >= 0xE0 ? 2 : c >= 0xC0 ? 1 : -1;
        if (extra < 0) {
            utf8 = false;
            break;
        }
        ++i;
        for (int k = 0; k < extra; ++k, ++i) {
            if (i >= bytes.size() || (static_cast<unsigned char>(bytes[i]) & 0xC0) != 0x80) {
                utf8 = false;
                break;
            }
        }
        if (!utf8) break;
    }
    if (utf8) return bytes;
    std::string out;
    out.reserve(bytes.size());
    for (unsigned char c : bytes) {
        if (c < 0x80) {
            out += static_cast<char>(c);
        } else {
            out += static_cast<char>(0xC0 | (c >> 6));
            out += static_cast<char>(0x80 | (c & 0x3F));
        }
    }
    return out;
}

ExpressSchema parse_schema(const std::string& text) { return Parser(text).run(); }

ExpressSchema parse_schema_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ExpressParseError(0, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_schema(decodeTextBytes(ss.str()));
}

}  // namespace ifcwod::express
