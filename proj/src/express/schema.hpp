#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ifcwod::express {

enum class Aggregation { None, Set, List };

struct Bounds {
    long low = 0;
    long high = -1;  // -1 = unbounded ('?')
};

struct AttributeDef {
    std::string name;
    std::string type_name;  // element type for aggregates
    bool is_optional = false;
    Aggregation aggregation = Aggregation::None;
    std::optional<Bounds> bounds;
};

// `Name : SET OF R FOR Attr;`
struct InverseAttributeDef {
    std::string name;
    std::string relationship_entity;
    std::string for_attribute;
};

struct EntityDef {
    std::string name;
    bool is_abstract = false;
    std::vector<std::string> supertypes;
    std::vector<AttributeDef> attributes;
    std::vector<InverseAttributeDef> inverses;
};

// Result of resolving one inverse attribute against its relationship entity.
struct InverseTuple {
    std::string property;             // lowerFirst(inverse name)
    std::string range_entity;         // type of the Relating-side attribute
    std::string declaring_entity;     // entity the inverse is declared on
    std::string relationship_entity;  // R
    std::string for_attribute;        // attribute of R referencing the entity
    std::string counterpart_attribute;
};

class ExpressSchema {
public:
    // All lookups are case-insensitive; original casing is preserved in defs.
    const EntityDef* entity(const std::string& name) const;
    const std::vector<std::string>* selectMembers(const std::string& name) const;
    const std::vector<std::string>* enumerationItems(const std::string& name) const;
    bool isSelect(const std::string& name) const { return selectMembers(name) != nullptr; }
    bool isEnumeration(const std::string& name) const { return enumerationItems(name) != nullptr; }

    void addEntity(EntityDef def);
    void addSelect(std::string name, std::vector<std::string> members);
    void addEnumeration(std::string name, std::vector<std::string> items);

    // Records the casing of a defined TYPE that is otherwise skipped.
    void addTypeName(const std::string& name);

    // Entity names (original casing), sorted case-insensitively.
    std::vector<std::string> entityNames() const;

    // Original casing for any declared entity/select/enumeration name, or
    // empty when unknown.
    std::string originalName(const std::string& name) const;

    // True if `name` equals `ancestor` or reaches it via SUBTYPE OF chains.
    bool isKindOf(const std::string& name, const std::string& ancestor) const;

    // Declared attributes in SPF parameter order: supertype chain first.
    std::vector<AttributeDef> flattenedAttributes(const std::string& entity_name) const;

    // Same order, each paired with the entity (original casing) declaring it.
    std::vector<std::pair<AttributeDef, std::string>> flattenedAttributesWithOwner(
        const std::string& entity_name) const;

    // Inverse attributes of the entity and its supertypes.
    std::vector<InverseAttributeDef> allInverses(const std::string& entity_name) const;

    std::vector<std::string> diagnostics;  // non-fatal findings (duplicates, bad FOR targets, skips)

private:
    std::map<std::string, EntityDef> entities_;  // key lowercased
    std::map<std::string, std::vector<std::string>> selects_;
    std::map<std::string, std::vector<std::string>> enums_;
    std::map<std::string, std::string> original_names_;
};

std::string lowerFirst(std::string s);
std::string toLower(std::string s);

// Resolves one inverse attribute against its relationship entity, or nullopt
// with a report when no Relating/Related pair is identifiable.
std::optional<InverseTuple> resolve_inverse(const ExpressSchema& schema,
                                            const std::string& declaring_entity,
                                            const InverseAttributeDef& inv,
                                            std::vector<std::string>* skipped = nullptr);

// Set of (p, r) tuples for the entity including inherited inverses, keyed by
// p, deterministic order.
std::vector<InverseTuple> collect_inverse_tuples(const ExpressSchema& schema,
                                                 const std::string& entity_name,
                                                 std::vector<std::string>* skipped = nullptr);

}  // namespace ifcwod::express
