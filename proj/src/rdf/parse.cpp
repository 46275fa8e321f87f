#include <cctype>
#include <cstdint>

#include "rdf/io.hpp"

namespace ifcwod::rdf {

namespace {

void appendUtf8(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

// Recursive-descent reader shared by the Turtle and N-Triples entry points.
// N-Triples is treated as Turtle without prefixes or the 'a' keyword, which
// accepts a superset of strict N-Triples; output stays strict.
class Reader {
public:
    Reader(const std::string& text, bool turtle) : text_(text), turtle_(turtle) {}

    Graph run() {
        Graph g;
        skipWs();
        while (!eof()) {
            if (turtle_ && (peekWord("@prefix") || peekWord("PREFIX"))) {
                readPrefixDecl(g);
            } else {
                readTripleBlock(g);
            }
            skipWs();
        }
        return g;
    }

private:
    const std::string& text_;
    bool turtle_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }

    char get() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skipWs() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') get();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                get();
            } else {
                break;
            }
        }
    }

    bool peekWord(const std::string& w) const {
        return text_.compare(pos_, w.size(), w) == 0;
    }

    void expect(char c) {
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    void readPrefixDecl(Graph& g) {
        bool sparqlForm = peekWord("PREFIX");
        for (std::size_t n = sparqlForm ? 6 : 7; n > 0; --n) get();
        skipWs();
        std::string prefix;
        while (!eof() && peek() != ':') prefix += get();
        expect(':');
        skipWs();
        std::string ns = readIriRef();
        g.registerPrefix(prefix, ns);
        skipWs();
        if (!sparqlForm) expect('.');
    }

    std::string readIriRef() {
        expect('<');
        std::string iri;
        while (!eof() && peek() != '>') {
            char c = get();
            if (c == '\\') iri += readUEscape();
            else iri += c;
        }
        expect('>');
        return iri;
    }

    std::string readUEscape() {
        if (eof()) fail("truncated escape");
        char kind = get();
        int digits = kind == 'u' ? 4 : kind == 'U' ? 8 : -1;
        if (digits < 0) fail(std::string("unknown escape '\\") + kind + "'");
        uint32_t cp = 0;
        for (int i = 0; i < digits; ++i) {
            if (eof() || !std::isxdigit(static_cast<unsigned char>(peek()))) fail("bad \\u escape");
            char c = get();
            cp = cp * 16 + (std::isdigit(static_cast<unsigned char>(c)) ? c - '0'
                                                                        : std::tolower(c) - 'a' + 10);
        }
        std::string out;
        appendUtf8(out, cp);
        return out;
    }

    std::string readLocalName() {
        std::string s;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')
                s += get();
            else
                break;
        }
        while (!s.empty() && s.back() == '.') {  // trailing '.' ends the statement
            s.pop_back();
            --pos_;
            --col_;
        }
        return s;
    }

    Term readTerm(const Graph& g, bool predicatePos) {
        skipWs();
        if (eof()) fail("unexpected end of input");
        char c = peek();
        if (c == '<') return Term::iri(readIriRef());
        if (c == '_') {
            get();
            expect(':');
            return Term::blank(readLocalName());
        }
        if (c == '"') return readLiteral(g);
        if (!turtle_) fail("expected IRI, blank node, or literal");
        if (predicatePos && c == 'a') {
            std::size_t save = pos_;
            get();
            if (eof() || std::isspace(static_cast<unsigned char>(peek())))
                return Term::iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type");
            pos_ = save;
            --col_;
        }
        // prefixed name
        std::string prefix;
        while (!eof() && peek() != ':') {
            char pc = peek();
            if (!std::isalnum(static_cast<unsigned char>(pc)) && pc != '_') fail("expected ':' in prefixed name");
            prefix += get();
        }
        expect(':');
        std::string local = readLocalName();
        auto it = g.prefixes().find(prefix);
        if (it == g.prefixes().end()) fail("unknown prefix '" + prefix + "'");
        return Term::iri(it->second + local);
    }

    Term readLiteral(const Graph& g) {
        expect('"');
        std::string lex;
        while (true) {
            if (eof()) fail("unterminated string literal");
            char c = get();
            if (c == '"') break;
            if (c == '\\') {
                if (eof()) fail("truncated escape");
                char e = peek();
                switch (e) {
                    case 'n': lex += '\n'; get(); break;
                    case 'r': lex += '\r'; get(); break;
                    case 't': lex += '\t'; get(); break;
                    case '"': lex += '"'; get(); break;
                    case '\\': lex += '\\'; get(); break;
                    default: lex += readUEscape(); break;
                }
            } else {
                lex += c;
            }
        }
        if (peek() == '@') {
            get();
            std::string lang;
            while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-'))
                lang += get();
            if (lang.empty()) fail("empty language tag");
            return Term::langLiteral(lex, lang);
        }
        if (peek() == '^') {
            get();
            expect('^');
            skipWs();
            Term dt = readTerm(g, false);
            if (!dt.isIri()) fail("datatype must be an IRI");
            return Term::literal(lex, dt.value);
        }
        return Term::literal(lex);
    }

    void readTripleBlock(Graph& g) {
        Term s = readTerm(g, false);
        while (true) {
            Term p = readTerm(g, true);
            while (true) {
                Term o = readTerm(g, false);
                g.insert(s, p, o);
                skipWs();
                if (turtle_ && peek() == ',') {
                    get();
                    continue;
                }
                break;
            }
            if (turtle_ && peek() == ';') {
                get();
                skipWs();
                if (peek() == '.') break;  // tolerate trailing ';'
                continue;
            }
            break;
        }
        skipWs();
        if (eof() || peek() != '.') fail("expected '.' at end of triple");
        get();
    }
};

}  // namespace

Graph parse(const std::string& text, Format format) {
    return Reader(text, format == Format::Turtle).run();
}

}  // namespace ifcwod::rdf
