#include "psd/xml.hpp"

#include <cctype>
#include <cstdint>

namespace ifcwod::xml {

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

std::string fromUtf16(const std::string& bytes, bool bigEndian) {
    std::string out;
    std::size_t i = 0;
    uint32_t high = 0;
    while (i + 1 < bytes.size()) {
        uint32_t u = bigEndian
                         ? (static_cast<unsigned char>(bytes[i]) << 8) | static_cast<unsigned char>(bytes[i + 1])
                         : (static_cast<unsigned char>(bytes[i + 1]) << 8) | static_cast<unsigned char>(bytes[i]);
        i += 2;
        if (u >= 0xD800 && u <= 0xDBFF) {
            high = u;
            continue;
        }
        if (u >= 0xDC00 && u <= 0xDFFF && high) {
            appendUtf8(out, 0x10000 + ((high - 0xD800) << 10) + (u - 0xDC00));
            high = 0;
            continue;
        }
        appendUtf8(out, u);
    }
    return out;
}

class XmlParser {
public:
    explicit XmlParser(const std::string& text) : text_(text) {}

    std::unique_ptr<Element> run() {
        skipProlog();
        auto root = readElement();
        return root;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;

    [[noreturn]] void fail(const std::string& msg) { throw XmlError(line_, msg); }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }

    char get() {
        char c = text_[pos_++];
        if (c == '\n') ++line_;
        return c;
    }

    void skipWs() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) get();
    }

    bool consume(const std::string& s) {
        if (text_.compare(pos_, s.size(), s) != 0) return false;
        for (std::size_t i = 0; i < s.size(); ++i) get();
        return true;
    }

    void skipUntil(const std::string& terminator) {
        while (!eof() && !consume(terminator)) get();
    }

    void skipProlog() {
        while (true) {
            skipWs();
            if (consume("<?")) skipUntil("?>");
            else if (consume("<!--")) skipUntil("-->");
            else if (consume("<!DOCTYPE")) skipUntil(">");
            else break;
        }
    }

    std::string readName() {
        std::string s;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':' || c == '.')
                s += get();
            else
                break;
        }
        if (s.empty()) fail("expected XML name");
        return s;
    }

    std::string decodeEntities(const std::string& s) {
        std::string out;
        std::size_t i = 0;
        while (i < s.size()) {
            if (s[i] != '&') {
                out += s[i++];
                continue;
            }
            auto end = s.find(';', i);
            if (end == std::string::npos) fail("unterminated entity reference");
            std::string ent = s.substr(i + 1, end - i - 1);
            if (ent == "amp") out += '&';
            else if (ent == "lt") out += '<';
            else if (ent == "gt") out += '>';
            else if (ent == "quot") out += '"';
            else if (ent == "apos") out += '\'';
            else if (!ent.empty() && ent[0] == '#') {
                uint32_t cp = ent[1] == 'x' || ent[1] == 'X'
                                  ? std::stoul(ent.substr(2), nullptr, 16)
                                  : std::stoul(ent.substr(1));
                appendUtf8(out, cp);
            } else {
                fail("unknown entity &" + ent + ";");
            }
            i = end + 1;
        }
        return out;
    }

    std::unique_ptr<Element> readElement() {
        skipWs();
        if (!consume("<")) fail("expected '<'");
        auto el = std::make_unique<Element>();
        el->name = readName();
        while (true) {
            skipWs();
            if (consume("/>")) return el;
            if (consume(">")) break;
            std::string attr = readName();
            skipWs();
            if (!consume("=")) fail("expected '=' after attribute " + attr);
            skipWs();
            char q = peek();
            if (q != '"' && q != '\'') fail("expected quoted attribute value");
            get();
            std::string val;
            while (!eof() && peek() != q) val += get();
            if (eof()) fail("unterminated attribute value");
            get();
            el->attributes[attr] = decodeEntities(val);
        }
        // content
        std::string raw;
        while (true) {
            if (eof()) fail("unterminated element <" + el->name + ">");
            if (peek() == '<') {
                if (consume("<!--")) {
                    skipUntil("-->");
                    continue;
                }
                if (consume("<![CDATA[")) {
                    while (!eof() && !consume("]]>")) el->text += get();
                    continue;
                }
                if (text_.compare(pos_, 2, "</") == 0) {
                    consume("</");
                    std::string closing = readName();
                    if (closing != el->name)
                        fail("mismatched closing tag </" + closing + "> for <" + el->name + ">");
                    skipWs();
                    if (!consume(">")) fail("expected '>' in closing tag");
                    el->text += decodeEntities(raw);
                    return el;
                }
                el->text += decodeEntities(raw);
                raw.clear();
                el->children.push_back(readElement());
            } else {
                raw += get();
            }
        }
    }
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

const Element* Element::child(const std::string& name) const {
    for (const auto& c : children)
        if (c->name == name) return c.get();
    return nullptr;
}

std::vector<const Element*> Element::childrenNamed(const std::string& name) const {
    std::vector<const Element*> out;
    for (const auto& c : children)
        if (c->name == name) out.push_back(c.get());
    return out;
}

std::string Element::attr(const std::string& name) const {
    auto it = attributes.find(name);
    return it == attributes.end() ? "" : it->second;
}

std::unique_ptr<Element> parse_document(const std::string& bytes) {
    std::string text;
    if (bytes.size() >= 2 && static_cast<unsigned char>(bytes[0]) == 0xFE &&
        static_cast<unsigned char>(bytes[1]) == 0xFF) {
        text = fromUtf16(bytes.substr(2), true);
    } else if (bytes.size() >= 2 && static_cast<unsigned char>(bytes[0]) == 0xFF &&
               static_cast<unsigned char>(bytes[1]) == 0xFE) {
        text = fromUtf16(bytes.substr(2), false);
    } else if (bytes.size() >= 3 && static_cast<unsigned char>(bytes[0]) == 0xEF &&
               static_cast<unsigned char>(bytes[1]) == 0xBB &&
               static_cast<unsigned char>(bytes[2]) == 0xBF) {
        text = bytes.substr(3);
    } else {
        text = bytes;
    }
    auto root = XmlParser(text).run();
    // normalize whitespace-only text nodes away
    struct Walk {
        void operator()(Element& e) const {
            e.text = trim(e.text);
            for (auto& c : e.children) (*this)(*c);
        }
    };
    Walk{}(*root);
    return root;
}

}  // namespace ifcwod::xml
