#include "step/model.hpp"

namespace ifcwod::step {

bool Typed::operator==(const Typed& o) const {
    if (keyword != o.keyword) return false;
    if (!inner || !o.inner) return inner == o.inner;
    return *inner == *o.inner;
}

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

int hexVal(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

uint32_t readHex(const std::string& s, std::size_t pos, int n, const char* escape) {
    uint32_t v = 0;
    for (int i = 0; i < n; ++i) {
        if (pos + i >= s.size() || hexVal(s[pos + i]) < 0)
            throw StepError(0, std::string("malformed ") + escape + " escape in string");
        v = v * 16 + hexVal(s[pos + i]);
    }
    return v;
}

}  // namespace

std::string decode_string(const std::string& raw) {
    std::string out;
    std::size_t i = 0;
    while (i < raw.size()) {
        char c = raw[i];
        if (c == '\'' && i + 1 < raw.size() && raw[i + 1] == '\'') {
            out += '\'';
            i += 2;
            continue;
        }
        if (c != '\\') {
            out += c;
            ++i;
            continue;
        }
        if (i + 1 >= raw.size()) throw StepError(0, "dangling backslash in string");
        char k = raw[i + 1];
        if (k == '\\') {
            out += '\\';
            i += 2;
        } else if (k == 'X' && i + 2 < raw.size() && raw[i + 2] == '\\') {
            appendUtf8(out, readHex(raw, i + 3, 2, "\\X\\"));
            i += 5;
        } else if (k == 'X' && i + 3 < raw.size() && (raw[i + 2] == '2' || raw[i + 2] == '4') &&
                   raw[i + 3] == '\\') {
            int width = raw[i + 2] == '2' ? 4 : 8;
            i += 4;
            uint32_t pendingHigh = 0;
            while (true) {
                if (i + 3 < raw.size() && raw[i] == '\\' && raw[i + 1] == 'X' && raw[i + 2] == '0' &&
                    raw[i + 3] == '\\') {
                    i += 4;
                    break;
                }
                uint32_t cp = readHex(raw, i, width, width == 4 ? "\\X2\\" : "\\X4\\");
                i += width;
                if (width == 4 && cp >= 0xD800 && cp <= 0xDBFF) {
                    pendingHigh = cp;
                    continue;
                }
                if (width == 4 && cp >= 0xDC00 && cp <= 0xDFFF) {
                    if (!pendingHigh) throw StepError(0, "malformed \\X2\\ escape: lone low surrogate");
                    cp = 0x10000 + ((pendingHigh - 0xD800) << 10) + (cp - 0xDC00);
                    pendingHigh = 0;
                }
                appendUtf8(out, cp);
            }
            if (pendingHigh) throw StepError(0, "malformed \\X2\\ escape: lone high surrogate");
        } else if (k == 'S' && i + 2 < raw.size() && raw[i + 2] == '\\') {
            if (i + 3 >= raw.size()) throw StepError(0, "malformed \\S\\ escape");
            // code-page shift; ISO 8859-1 default
            appendUtf8(out, static_cast<unsigned char>(raw[i + 3]) + 0x80);
            i += 4;
        } else if (k == 'P' && i + 3 < raw.size() && raw[i + 3] == '\\') {
            i += 4;  // code page selector; only the 8859-1 default is honoured
        } else if (k == 'N' && i + 2 < raw.size() && raw[i + 2] == '\\') {
            out += '\n';
            i += 3;
        } else {
            throw StepError(0, std::string("unknown string escape '\\") + k + "'");
        }
    }
    return out;
}

}  // namespace ifcwod::step
