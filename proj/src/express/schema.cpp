#include "express/schema.hpp"

#include <algorithm>
#include <cctype>

namespace ifcwod::express {

std::string toLower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string lowerFirst(std::string s) {
    if (!s.empty()) s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
    return s;
}

static bool startsWithCi(const std::string& s, const std::string& prefix) {
    if (s.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(s[i])) !=
            std::tolower(static_cast<unsigned char>(prefix[i])))
            return false;
    return true;
}

const EntityDef* ExpressSchema::entity(const std::string& name) const {
    auto it = entities_.find(toLower(name));
    return it == entities_.end() ? nullptr : &it->second;
}

const std::vector<std::string>* ExpressSchema::selectMembers(const std::string& name) const {
    auto it = selects_.find(toLower(name));
    return it == selects_.end() ? nullptr : &it->second;
}

const std::vector<std::string>* ExpressSchema::enumerationItems(const std::string& name) const {
    auto it = enums_.find(toLower(name));
    return it == enums_.end() ? nullptr : &it->second;
}

void ExpressSchema::addEntity(EntityDef def) {
    std::string key = toLower(def.name);
    if (entities_.count(key))
        diagnostics.push_back("duplicate entity name (case-insensitive): " + def.name);
    original_names_[key] = def.name;
    entities_[key] = std::move(def);
}

void ExpressSchema::addSelect(std::string name, std::vector<std::string> members) {
    original_names_[toLower(name)] = name;
    selects_[toLower(name)] = std::move(members);
}

void ExpressSchema::addEnumeration(std::string name, std::vector<std::string> items) {
    original_names_[toLower(name)] = name;
    enums_[toLower(name)] = std::move(items);
}

void ExpressSchema::addTypeName(const std::string& name) {
    original_names_[toLower(name)] = name;
}

std::string ExpressSchema::originalName(const std::string& name) const {
    auto it = original_names_.find(toLower(name));
    return it == original_names_.end() ? std::string() : it->second;
}

std::vector<std::string> ExpressSchema::entityNames() const {
    std::vector<std::string> out;
    out.reserve(entities_.size());
    for (const auto& [key, def] : entities_) out.push_back(def.name);
    return out;  // map is keyed lowercased, so already sorted case-insensitively
}

bool ExpressSchema::isKindOf(const std::string& name, const std::string& ancestor) const {
    std::string key = toLower(name);
    std::string target = toLower(ancestor);
    std::vector<std::string> work{key};
    std::vector<std::string> seen;
    while (!work.empty()) {
        std::string cur = work.back();
        work.pop_back();
        if (cur == target) return true;
        if (std::find(seen.begin(), seen.end(), cur) != seen.end()) continue;
        seen.push_back(cur);
        auto it = entities_.find(cur);
        if (it == entities_.end()) continue;
        for (const auto& s : it->second.supertypes) work.push_back(toLower(s));
    }
    return false;
}

std::vector<AttributeDef> ExpressSchema::flattenedAttributes(const std::string& entity_name) const {
    std::vector<AttributeDef> out;
    for (auto& [attr, owner] : flattenedAttributesWithOwner(entity_name)) out.push_back(attr);
    return out;
}

std::vector<std::pair<AttributeDef, std::string>> ExpressSchema::flattenedAttributesWithOwner(
    const std::string& entity_name) const {
    std::vector<std::pair<AttributeDef, std::string>> out;
    const EntityDef* def = entity(entity_name);
    if (!def) return out;
    for (const auto& sup : def->supertypes) {
        auto inherited = flattenedAttributesWithOwner(sup);
        out.insert(out.end(), inherited.begin(), inherited.end());
    }
    for (const auto& a : def->attributes) out.emplace_back(a, def->name);
    return out;
}

std::vector<InverseAttributeDef> ExpressSchema::allInverses(const std::string& entity_name) const {
    std::vector<InverseAttributeDef> out;
    const EntityDef* def = entity(entity_name);
    if (!def) return out;
    for (const auto& sup : def->supertypes) {
        auto inherited = allInverses(sup);
        out.insert(out.end(), inherited.begin(), inherited.end());
    }
    out.insert(out.end(), def->inverses.begin(), def->inverses.end());
    return out;
}

namespace {

const AttributeDef* findAttribute(const std::vector<AttributeDef>& attrs, const std::string& name) {
    for (const auto& a : attrs)
        if (toLower(a.name) == toLower(name)) return &a;
    return nullptr;
}

const AttributeDef* findByPrefix(const std::vector<AttributeDef>& attrs, const char* prefix) {
    for (const auto& a : attrs)
        if (startsWithCi(a.name, prefix)) return &a;
    return nullptr;
}

}  // namespace

std::optional<InverseTuple> resolve_inverse(const ExpressSchema& schema,
                                            const std::string& declaring_entity,
                                            const InverseAttributeDef& inv,
                                            std::vector<std::string>* skipped) {
    auto report = [&](const std::string& msg) {
        if (skipped) skipped->push_back(msg);
    };
    const EntityDef* rel = schema.entity(inv.relationship_entity);
    if (!rel) {
        report("inverse " + inv.name + ": unknown relationship entity " + inv.relationship_entity);
        return std::nullopt;
    }
    auto attrs = schema.flattenedAttributes(rel->name);
    const AttributeDef* forAttr = findAttribute(attrs, inv.for_attribute);
    if (!forAttr) {
        report("inverse " + inv.name + ": FOR target " + inv.for_attribute + " not found on " + rel->name);
        return std::nullopt;
    }
    // The property's range is the type of the Relating-side attribute of the
    // Relating/Related pair on the relationship entity.
    const AttributeDef* relating = nullptr;
    const AttributeDef* counterpart = nullptr;
    if (startsWithCi(forAttr->name, "Relating")) {
        relating = forAttr;
        counterpart = findByPrefix(attrs, "Related");
    } else if (startsWithCi(forAttr->name, "Related")) {
        counterpart = findByPrefix(attrs, "Relating");
        relating = counterpart;
    }
    if (!relating || !counterpart) {
        report("inverse " + inv.name + ": no Relating/Related pair on " + rel->name);
        return std::nullopt;
    }
    InverseTuple t;
    t.property = lowerFirst(inv.name);
    t.range_entity = relating->type_name;  // aggregates already unwrapped to element type
    t.declaring_entity = declaring_entity;
    t.relationship_entity = rel->name;
    t.for_attribute = forAttr->name;
    t.counterpart_attribute = counterpart->name;
    return t;
}

std::vector<InverseTuple> collect_inverse_tuples(const ExpressSchema& schema,
                                                 const std::string& entity_name,
                                                 std::vector<std::string>* skipped) {
    std::vector<InverseTuple> out;
    for (const auto& inv : schema.allInverses(entity_name)) {
        auto t = resolve_inverse(schema, entity_name, inv, skipped);
        if (!t) continue;
        bool dup = std::any_of(out.begin(), out.end(),
                               [&](const InverseTuple& e) { return e.property == t->property; });
        if (!dup) out.push_back(std::move(*t));
    }
    std::sort(out.begin(), out.end(),
              [](const InverseTuple& a, const InverseTuple& b) { return a.property < b.property; });
    return out;
}

}  // namespace ifcwod::express
