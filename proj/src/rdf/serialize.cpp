#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include "rdf/io.hpp"

namespace ifcwod::rdf {

namespace {

constexpr const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

// Decodes one UTF-8 sequence starting at i; returns the code point and
// advances i. Invalid bytes are passed through as-is.
uint32_t nextCodepoint(const std::string& s, std::size_t& i) {
    unsigned char c = s[i];
    uint32_t cp = c;
    int extra = 0;
    if (c >= 0xF0) { cp = c & 0x07; extra = 3; }
    else if (c >= 0xE0) { cp = c & 0x0F; extra = 2; }
    else if (c >= 0xC0) { cp = c & 0x1F; extra = 1; }
    ++i;
    while (extra-- > 0 && i < s.size() && (static_cast<unsigned char>(s[i]) & 0xC0) == 0x80) {
        cp = (cp << 6) | (static_cast<unsigned char>(s[i]) & 0x3F);
        ++i;
    }
    return cp;
}

void appendUEscape(std::string& out, uint32_t cp) {
    char buf[16];
    if (cp <= 0xFFFF) std::snprintf(buf, sizeof buf, "\\u%04X", cp);
    else std::snprintf(buf, sizeof buf, "\\U%08X", cp);
    out += buf;
}

std::string escapeLiteral(const std::string& s, bool asciiOnly) {
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        switch (c) {
            case '"': out += "\\\""; ++i; continue;
            case '\\': out += "\\\\"; ++i; continue;
            case '\n': out += "\\n"; ++i; continue;
            case '\r': out += "\\r"; ++i; continue;
            case '\t': out += "\\t"; ++i; continue;
            default: break;
        }
        if (asciiOnly && static_cast<unsigned char>(c) >= 0x80) {
            appendUEscape(out, nextCodepoint(s, i));
        } else {
            out += c;
            ++i;
        }
    }
    return out;
}

std::string escapeIri(const std::string& s, bool asciiOnly) {
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (asciiOnly && static_cast<unsigned char>(s[i]) >= 0x80) appendUEscape(out, nextCodepoint(s, i));
        else out += s[i++];
    }
    return out;
}

bool validLocalName(const std::string& s) {
    if (s.empty()) return true;
    unsigned char c0 = s[0];
    if (!std::isalnum(c0) && c0 != '_') return false;
    for (std::size_t i = 1; i < s.size(); ++i) {
        unsigned char c = s[i];
        if (!std::isalnum(c) && c != '_' && c != '-' && c != '.') return false;
    }
    return s.back() != '.';
}

// Longest registered namespace that prefixes the IRI with a clean local part.
bool toPrefixed(const Graph& g, const std::string& iri, std::string& out) {
    const std::string* bestNs = nullptr;
    const std::string* bestPrefix = nullptr;
    for (const auto& [prefix, ns] : g.prefixes()) {
        if (iri.size() < ns.size() || iri.compare(0, ns.size(), ns) != 0) continue;
        if (!bestNs || ns.size() > bestNs->size()) {
            bestNs = &ns;
            bestPrefix = &prefix;
        }
    }
    if (!bestNs) return false;
    std::string local = iri.substr(bestNs->size());
    if (!validLocalName(local)) return false;
    out = *bestPrefix + ":" + local;
    return true;
}

std::string termTurtle(const Graph& g, const Term& t, bool predicatePos) {
    switch (t.kind) {
        case TermKind::Iri: {
            if (predicatePos && t.value == kRdfType) return "a";
            std::string pn;
            if (toPrefixed(g, t.value, pn)) return pn;
            return "<" + escapeIri(t.value, false) + ">";
        }
        case TermKind::Blank:
            return "_:" + t.value;
        case TermKind::Literal: {
            std::string out = "\"" + escapeLiteral(t.value, false) + "\"";
            if (!t.lang.empty()) out += "@" + t.lang;
            else if (!t.datatype.empty()) {
                std::string pn;
                if (toPrefixed(g, t.datatype, pn)) out += "^^" + pn;
                else out += "^^<" + escapeIri(t.datatype, false) + ">";
            }
            return out;
        }
    }
    return {};
}

std::string termNTriples(const Term& t) {
    switch (t.kind) {
        case TermKind::Iri:
            return "<" + escapeIri(t.value, true) + ">";
        case TermKind::Blank:
            return "_:" + t.value;
        case TermKind::Literal: {
            std::string out = "\"" + escapeLiteral(t.value, true) + "\"";
            if (!t.lang.empty()) out += "@" + t.lang;
            else if (!t.datatype.empty()) out += "^^<" + escapeIri(t.datatype, true) + ">";
            return out;
        }
    }
    return {};
}

}  // namespace

std::string serialize(const Graph& g, Format format) {
    std::ostringstream out;
    if (format == Format::Turtle) {
        for (const auto& [prefix, ns] : g.prefixes())
            out << "@prefix " << prefix << ": <" << escapeIri(ns, false) << "> .\n";
        if (!g.prefixes().empty() && !g.triples().empty()) out << "\n";
        for (const auto& t : g.triples()) {
            out << termTurtle(g, t.subject, false) << " " << termTurtle(g, t.predicate, true)
                << " " << termTurtle(g, t.object, false) << " .\n";
        }
    } else {
        for (const auto& t : g.triples()) {
            out << termNTriples(t.subject) << " " << termNTriples(t.predicate) << " "
                << termNTriples(t.object) << " .\n";
        }
    }
    return out.str();
}

Format formatForPath(const std::string& path) {
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".nt") == 0) return Format::NTriples;
    return Format::Turtle;
}

}  // namespace ifcwod::rdf
