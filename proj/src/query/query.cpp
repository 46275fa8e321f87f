#include "query/query.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace ifcwod::query {

namespace {

class QueryParser {
public:
    explicit QueryParser(const std::string& text) : text_(text) {}

    Query run() {
        skipWs();
        while (matchKeyword("PREFIX")) readPrefix();
        if (!matchKeyword("SELECT")) fail("expected SELECT");
        if (matchKeyword("DISTINCT")) q_.distinct = true;
        while (true) {
            skipWs();
            if (peek() == '?') {
                q_.projection.push_back(readVariable());
            } else if (peek() == '*') {
                get();
                starProjection_ = true;
            } else {
                break;
            }
        }
        matchKeyword("WHERE");
        skipWs();
        expect('{');
        readGroup();
        if (q_.patterns.empty()) fail("empty basic graph pattern");
        if (starProjection_) {
            for (const auto& p : q_.patterns)
                for (const auto* slot : {&p.subject, &p.predicate, &p.object})
                    if (const auto* var = std::get_if<Variable>(slot))
                        if (std::find(q_.projection.begin(), q_.projection.end(), var->name) ==
                            q_.projection.end())
                            q_.projection.push_back(var->name);
        }
        if (q_.projection.empty()) fail("no projection variables");
        for (const auto& v : q_.projection) {
            bool bound = std::any_of(q_.patterns.begin(), q_.patterns.end(), [&](const TriplePattern& p) {
                auto isVar = [&](const PatternSlot& s) {
                    const auto* var = std::get_if<Variable>(&s);
                    return var && var->name == v;
                };
                return isVar(p.subject) || isVar(p.predicate) || isVar(p.object);
            });
            if (!bound) fail("projected variable ?" + v + " appears in no pattern");
        }
        return std::move(q_);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    Query q_;
    bool starProjection_ = false;

    [[noreturn]] void fail(const std::string& msg) const { throw QueryError(msg); }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }
    char get() { return text_[pos_++]; }

    void skipWs() {
        while (!eof()) {
            if (peek() == '#') {
                while (!eof() && peek() != '\n') get();
            } else if (std::isspace(static_cast<unsigned char>(peek()))) {
                get();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        skipWs();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    bool matchKeyword(const std::string& kw) {
        skipWs();
        if (text_.size() - pos_ < kw.size()) return false;
        for (std::size_t i = 0; i < kw.size(); ++i)
            if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) != kw[i]) return false;
        char after = pos_ + kw.size() < text_.size() ? text_[pos_ + kw.size()] : ' ';
        if (std::isalnum(static_cast<unsigned char>(after)) || after == '_') return false;
        pos_ += kw.size();
        return true;
    }

    void readPrefix() {
        skipWs();
        std::string prefix;
        while (!eof() && peek() != ':') prefix += get();
        expect(':');
        skipWs();
        if (peek() != '<') fail("expected <IRI> in PREFIX");
        get();
        std::string ns;
        while (!eof() && peek() != '>') ns += get();
        expect('>');
        q_.prefixes[prefix] = ns;
    }

    std::string readVariable() {
        expect('?');
        std::string name;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            name += get();
        if (name.empty()) fail("empty variable name");
        return name;
    }

    void readGroup() {
        while (true) {
            skipWs();
            if (peek() == '}') {
                get();
                return;
            }
            if (eof()) fail("unterminated group pattern");
            for (const char* unsupported : {"OPTIONAL", "UNION", "MINUS", "GRAPH", "SERVICE", "BIND", "VALUES"})
                if (peekKeyword(unsupported)) fail(std::string(unsupported) + " is outside the supported subset");
            if (matchKeyword("FILTER")) {
                readFilter();
                skipWs();
                if (peek() == '.') get();
                continue;
            }
            TriplePattern p;
            p.subject = readSlot();
            p.predicate = readSlot();
            if (const auto* t = std::get_if<rdf::Term>(&p.predicate); t && !t->isIri())
                fail("pattern predicate must be an IRI or variable");
            p.object = readSlot();
            q_.patterns.push_back(std::move(p));
            skipWs();
            if (peek() == '.') get();
        }
    }

    bool peekKeyword(const std::string& kw) const {
        if (text_.size() - pos_ < kw.size()) return false;
        for (std::size_t i = 0; i < kw.size(); ++i)
            if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) != kw[i]) return false;
        char after = pos_ + kw.size() < text_.size() ? text_[pos_ + kw.size()] : ' ';
        return !(std::isalnum(static_cast<unsigned char>(after)) || after == '_' || after == ':');
    }

    PatternSlot readSlot() {
        skipWs();
        char c = peek();
        if (c == '?') return Variable{readVariable()};
        if (c == '^' || c == '/' || c == '|')
            fail("property paths are outside the supported subset");
        return readTerm();
    }

    rdf::Term readTerm() {
        skipWs();
        char c = peek();
        if (c == '<') {
            get();
            std::string iri;
            while (!eof() && peek() != '>') iri += get();
            expect('>');
            return rdf::Term::iri(iri);
        }
        if (c == '"') return readLiteral();
        if (c == 'a' && pos_ + 1 < text_.size() &&
            std::isspace(static_cast<unsigned char>(text_[pos_ + 1]))) {
            get();
            return rdf::Term::iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type");
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') return readNumber();
        // prefixed name
        std::string prefix;
        while (!eof() && peek() != ':') {
            char pc = peek();
            if (!std::isalnum(static_cast<unsigned char>(pc)) && pc != '_') break;
            prefix += get();
        }
        if (peek() != ':') fail("expected term, found '" + prefix + "'");
        get();
        std::string local;
        while (!eof()) {
            char lc = peek();
            if (std::isalnum(static_cast<unsigned char>(lc)) || lc == '_' || lc == '-' || lc == '.')
                local += get();
            else
                break;
        }
        while (!local.empty() && local.back() == '.') {
            local.pop_back();
            --pos_;
        }
        auto it = q_.prefixes.find(prefix);
        if (it == q_.prefixes.end()) fail("unknown prefix '" + prefix + ":'");
        return rdf::Term::iri(it->second + local);
    }

    rdf::Term readLiteral() {
        get();  // '"'
        std::string lex;
        while (!eof() && peek() != '"') {
            char c = get();
            if (c == '\\' && !eof()) {
                char e = get();
                lex += e == 'n' ? '\n' : e == 't' ? '\t' : e;
            } else {
                lex += c;
            }
        }
        expect('"');
        if (peek() == '@') {
            get();
            std::string lang;
            while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-'))
                lang += get();
            return rdf::Term::langLiteral(lex, lang);
        }
        if (peek() == '^') {
            get();
            expect('^');
            rdf::Term dt = readTerm();
            return rdf::Term::literal(lex, dt.value);
        }
        return rdf::Term::literal(lex);
    }

    rdf::Term readNumber() {
        std::string s;
        if (peek() == '-' || peek() == '+') s += get();
        bool real = false;
        while (!eof()) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) s += get();
            else if (c == '.' || c == 'e' || c == 'E') {
                real = true;
                s += get();
            } else {
                break;
            }
        }
        return rdf::Term::literal(s, std::string("http://www.w3.org/2001/XMLSchema#") +
                                         (real ? "decimal" : "integer"));
    }

    void readFilter() {
        expect('(');
        Filter f;
        skipWs();
        if (peek() != '?') fail("FILTER must compare a variable with a constant");
        f.variable = readVariable();
        skipWs();
        char c1 = get();
        char c2 = peek();
        if (c1 == '=' ) f.op = CompareOp::Eq;
        else if (c1 == '!' && c2 == '=') { get(); f.op = CompareOp::Ne; }
        else if (c1 == '<' && c2 == '=') { get(); f.op = CompareOp::Le; }
        else if (c1 == '<') f.op = CompareOp::Lt;
        else if (c1 == '>' && c2 == '=') { get(); f.op = CompareOp::Ge; }
        else if (c1 == '>') f.op = CompareOp::Gt;
        else fail("unsupported FILTER operator");
        f.constant = readTerm();
        expect(')');
        q_.filters.push_back(std::move(f));
    }
};

}  // namespace

Query parse_query(const std::string& text) { return QueryParser(text).run(); }

Query parse_query_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw QueryError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_query(ss.str());
}

}  // namespace ifcwod::query
