#include "psd/psd.hpp"

#include <algorithm>
#include <filesystem>
#include <memory>
#include <fstream>
#include <sstream>

#include "psd/xml.hpp"

namespace ifcwod::psd {

namespace {

using xml::Element;

PropertyType readPropertyType(const Element& ptEl, PsdDocument& doc, const std::string& propName) {
    for (const auto& child : ptEl.children) {
        const Element& e = *child;
        if (e.name == "TypePropertySingleValue") {
            SingleValue v;
            if (const Element* dt = e.child("DataType")) v.datatype = dt->attr("type");
            return v;
        }
        if (e.name == "TypePropertyEnumeratedValue") {
            EnumeratedValue v;
            if (const Element* list = e.child("EnumList")) {
                v.enum_name = list->attr("name");
                for (const Element* item : list->childrenNamed("EnumItem")) v.items.push_back(item->text);
            }
            if (v.items.empty()) throw PsdError("property " + propName + ": enumeration has no items");
            return v;
        }
        if (e.name == "TypePropertyReferenceValue") {
            ReferenceValue v;
            v.ref_type = e.attr("reftype");
            if (v.ref_type.empty())
                if (const Element* dt = e.child("DataType")) v.ref_type = dt->attr("type");
            return v;
        }
        if (e.name == "TypePropertyListValue") {
            ListValue v;
            const Element* lv = e.child("ListValue");
            const Element* dt = lv ? lv->child("DataType") : e.child("DataType");
            if (dt) v.datatype = dt->attr("type");
            return v;
        }
        if (e.name == "TypePropertyBoundedValue") {
            BoundedValue v;
            if (const Element* dt = e.child("DataType")) v.datatype = dt->attr("type");
            return v;
        }
        if (e.name == "TypePropertyTableValue") {
            TableValue v;
            if (const Element* dv = e.child("DefiningValue"))
                if (const Element* dt = dv->child("DataType")) v.defining_datatype = dt->attr("type");
            if (const Element* dv = e.child("DefinedValue"))
                if (const Element* dt = dv->child("DataType")) v.defined_datatype = dt->attr("type");
            return v;
        }
        doc.warnings.push_back("property " + propName + ": unsupported property type element <" +
                               e.name + ">");
        return Unsupported{e.name};
    }
    doc.warnings.push_back("property " + propName + ": empty <PropertyType>");
    return Unsupported{""};
}

void readAliases(const Element* wrapper, const std::string& itemName,
                 std::vector<std::pair<std::string, std::string>>& out) {
    if (!wrapper) return;
    for (const Element* alias : wrapper->childrenNamed(itemName))
        out.emplace_back(alias->attr("lang"), alias->text);
}

PsdPropertyDef readProperty(const Element& el, PsdDocument& doc) {
    PsdPropertyDef prop;
    const Element* nameEl = el.child("Name");
    if (!nameEl || nameEl->text.empty()) throw PsdError("<PropertyDef> without <Name>");
    prop.name = nameEl->text;
    prop.ifcguid = el.attr("ifcguid");
    if (const Element* def = el.child("Definition")) prop.definition = def->text;
    readAliases(el.child("NameAliases"), "NameAlias", prop.name_aliases);
    readAliases(el.child("DefinitionAliases"), "DefinitionAlias", prop.definition_aliases);
    if (const Element* pt = el.child("PropertyType")) {
        prop.ptype = readPropertyType(*pt, doc, prop.name);
    } else {
        doc.warnings.push_back("property " + prop.name + ": missing <PropertyType>");
        prop.ptype = Unsupported{""};
    }
    return prop;
}

void collectProperties(const Element& el, PsdDocument& doc) {
    for (const auto& child : el.children) {
        if (child->name == "PropertyDef") doc.properties.push_back(readProperty(*child, doc));
        else collectProperties(*child, doc);
    }
}

}  // namespace

PsdDocument parse_psd(const std::string& xml_text) {
    std::unique_ptr<Element> root;
    try {
        root = xml::parse_document(xml_text);
    } catch (const xml::XmlError& e) {
        throw PsdError(e.what());
    }
    PsdDocument doc;
    const Element* nameEl = root->child("Name");
    if (!nameEl || nameEl->text.empty()) throw PsdError("property set has no <Name>");
    doc.name = nameEl->text;
    if (doc.name.compare(0, 5, "Pset_") != 0)
        doc.warnings.push_back("non-standard property set name: " + doc.name);
    if (const Element* def = root->child("Definition")) doc.definition = def->text;
    if (const Element* ac = root->child("ApplicableClasses"))
        for (const Element* cn : ac->childrenNamed("ClassName")) doc.applicable_classes.push_back(cn->text);
    for (const Element* tv : root->childrenNamed("ApplicableTypeValue"))
        doc.applicable_classes.push_back(tv->text);
    collectProperties(*root, doc);
    return doc;
}

PsdDocument parse_psd_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PsdError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_psd(ss.str());
}

std::vector<PsdDocument> parse_psd_dir(const std::string& dir) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() == ".xml") files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    std::vector<PsdDocument> docs;
    docs.reserve(files.size());
    for (const auto& f : files) docs.push_back(parse_psd_file(f));
    return docs;
}

}  // namespace ifcwod::psd
