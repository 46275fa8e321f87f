#include <cctype>
#include <fstream>
#include <sstream>

#include "step/model.hpp"

namespace ifcwod::step {

namespace {

constexpr int kMaxDepth = 64;
constexpr std::size_t kMaxTokenLen = 1 << 20;

class SpfParser {
public:
    explicit SpfParser(const std::string& text) : text_(text) {}

    StepModel run() {
        expectKeyword("ISO-10303-21");
        expectPunct(';');
        expectKeyword("HEADER");
        expectPunct(';');
        readHeader();
        expectKeyword("DATA");
        expectPunct(';');
        readData();
        // END-ISO-10303-21; trailer is tolerated but not required
        checkReferences();
        return std::move(model_);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    StepModel model_;

    [[noreturn]] void fail(const std::string& msg) { throw StepError(line_, msg); }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }

    char get() {
        char c = text_[pos_++];
        if (c == '\n') ++line_;
        return c;
    }

    void skipWs() {
        while (!eof()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                get();
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
                get();
                get();
                while (!eof() && !(peek() == '*' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/'))
                    get();
                if (!eof()) {
                    get();
                    get();
                }
            } else {
                break;
            }
        }
    }

    std::string readKeyword() {
        skipWs();
        std::string s;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')
                s += get();
            else
                break;
            if (s.size() > kMaxTokenLen) fail("keyword too long");
        }
        if (s.empty()) fail("expected keyword");
        return s;
    }

    void expectKeyword(const std::string& k) {
        std::string got = readKeyword();
        if (got != k) fail("expected " + k + ", got " + got);
    }

    void expectPunct(char c) {
        skipWs();
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    std::string readRawString() {
        int startLine = line_;
        std::string raw;
        get();  // opening quote
        while (true) {
            if (eof()) throw StepError(startLine, "unterminated string");
            char c = get();
            if (c == '\'') {
                if (peek() == '\'') {
                    raw += "''";
                    get();
                    continue;
                }
                break;
            }
            raw += c;
            if (raw.size() > kMaxTokenLen) fail("string too long");
        }
        return raw;
    }

    void readHeader() {
        while (true) {
            skipWs();
            if (eof()) fail("unterminated HEADER section");
            std::size_t start = pos_;
            std::string kw = readKeyword();
            if (kw == "ENDSEC") {
                expectPunct(';');
                return;
            }
            // capture the record verbatim through its ';', strings respected
            while (true) {
                skipWs();
                if (eof()) fail("unterminated header record " + kw);
                if (peek() == '\'') {
                    readRawString();
                    continue;
                }
                if (get() == ';') break;
            }
            std::string record = text_.substr(start, pos_ - start);
            model_.header.push_back(record);
            if (kw == "FILE_SCHEMA") extractSchemaName(record);
        }
    }

    void extractSchemaName(const std::string& record) {
        auto q = record.find('\'');
        if (q == std::string::npos) return;
        auto e = record.find('\'', q + 1);
        if (e != std::string::npos) model_.schema_name = record.substr(q + 1, e - q - 1);
    }

    void readData() {
        while (true) {
            skipWs();
            if (eof()) fail("unterminated DATA section");
            if (peek() == '#') {
                get();
                readRecord();
            } else {
                std::string kw = readKeyword();
                if (kw == "ENDSEC") {
                    expectPunct(';');
                    return;
                }
                fail("unexpected token in DATA section: " + kw);
            }
        }
    }

    void readRecord() {
        int64_t id = readInteger();
        expectPunct('=');
        StepInstance inst;
        inst.id = id;
        inst.keyword = readKeyword();
        expectPunct('(');
        inst.params = readParamList(0);
        expectPunct(';');
        if (model_.instances.count(id)) fail("duplicate instance id #" + std::to_string(id));
        model_.instances.emplace(id, std::move(inst));
    }

    int64_t readInteger() {
        skipWs();
        std::string s;
        if (peek() == '-' || peek() == '+') s += get();
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) s += get();
        if (s.empty() || (s.size() == 1 && !std::isdigit(static_cast<unsigned char>(s[0]))))
            fail("expected integer");
        return std::stoll(s);
    }

    // Caller consumed '('. Reads params up to and including ')'.
    std::vector<StepParam> readParamList(int depth) {
        if (depth > kMaxDepth) fail("parameter nesting too deep");
        std::vector<StepParam> params;
        skipWs();
        if (peek() == ')') {
            get();
            return params;
        }
        while (true) {
            params.push_back(readParam(depth));
            skipWs();
            if (peek() == ',') {
                get();
                continue;
            }
            expectPunct(')');
            return params;
        }
    }

    StepParam readParam(int depth) {
        if (depth > kMaxDepth) fail("parameter nesting too deep");
        skipWs();
        if (eof()) fail("unexpected end of file in parameter");
        char c = peek();
        StepParam p;
        if (c == '$') {
            get();
            p.value = Unset{};
        } else if (c == '*') {
            get();
            p.value = Derived{};
        } else if (c == '#') {
            get();
            p.value = Reference{readInteger()};
        } else if (c == '\'') {
            String s;
            s.raw = readRawString();
            s.decoded = decode_string(s.raw);
            p.value = std::move(s);
        } else if (c == '.') {
            get();
            std::string name;
            while (!eof() && peek() != '.') name += get();
            if (eof()) fail("unterminated enumeration value");
            get();
            p.value = Enum{name};
        } else if (c == '(') {
            get();
            p.value = List{readParamList(depth + 1)};
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
            p.value = readNumber();
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            Typed t;
            t.keyword = readKeyword();
            expectPunct('(');
            auto inner = readParamList(depth + 1);
            if (inner.size() != 1) fail("typed parameter " + t.keyword + " must wrap exactly one value");
            t.inner = std::make_shared<StepParam>(std::move(inner[0]));
            p.value = std::move(t);
        } else {
            fail(std::string("unexpected character '") + c + "' in parameter");
        }
        return p;
    }

    std::variant<Unset, Derived, Integer, Real, String, Enum, Reference, Typed, List> readNumber() {
        std::string s;
        if (peek() == '-' || peek() == '+') s += get();
        bool real = false;
        while (!eof()) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                s += get();
            } else if (c == '.' || c == 'E' || c == 'e') {
                real = true;
                s += get();
                if ((c == 'E' || c == 'e') && (peek() == '-' || peek() == '+')) s += get();
            } else {
                break;
            }
        }
        if (real) return Real{std::stod(s), s};
        return Integer{std::stoll(s)};
    }

    void checkReferences() {
        for (const auto& [id, inst] : model_.instances)
            for (const auto& p : inst.params) checkParamRefs(id, p);
    }

    void checkParamRefs(int64_t owner, const StepParam& p) {
        if (const auto* r = p.asRef()) {
            if (!model_.instances.count(r->id))
                model_.warnings.push_back("#" + std::to_string(owner) + " references dangling #" +
                                          std::to_string(r->id));
        } else if (const auto* l = p.asList()) {
            for (const auto& item : l->items) checkParamRefs(owner, item);
        } else if (const auto* t = p.asTyped()) {
            checkParamRefs(owner, *t->inner);
        }
    }
};

}  // namespace

StepModel parse_spf(const std::string& text) { return SpfParser(text).run(); }

StepModel parse_spf_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StepError(0, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spf(ss.str());
}

}  // namespace ifcwod::step
