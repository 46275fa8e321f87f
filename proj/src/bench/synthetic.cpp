#include "bench/synthetic.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

namespace ifcwod::bench {

using step::Enum;
using step::List;
using step::Real;
using step::Reference;
using step::StepInstance;
using step::StepParam;
using step::String;
using step::Typed;
using step::Unset;

namespace {

StepParam unset() { return {Unset{}}; }

StepParam str(const std::string& s) { return {String{s, s}}; }

StepParam enm(const std::string& name) { return {Enum{name}}; }

StepParam ref(int64_t id) { return {Reference{id}}; }

StepParam typed(const std::string& keyword, StepParam inner) {
    return {Typed{keyword, std::make_shared<StepParam>(std::move(inner))}};
}

StepParam real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return {Real{v, buf}};
}

StepParam list(std::vector<StepParam> items) { return {List{std::move(items)}}; }

class Builder {
public:
    explicit Builder(std::uint32_t seed) : rng_(seed) {}

    int64_t add(const std::string& keyword, std::vector<StepParam> params) {
        StepInstance inst;
        inst.id = next_id_++;
        inst.keyword = keyword;
        inst.params = std::move(params);
        int64_t id = inst.id;
        model_.instances.emplace(id, std::move(inst));
        return id;
    }

    std::string globalId() {
        static const char alphabet[] =
            "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz_$";
        std::string s(22, '0');
        for (auto& c : s) c = alphabet[rng_() % 64];
        return s;
    }

    // first `k` of 0..n-1 after a seeded shuffle
    std::vector<bool> pick(std::size_t n, std::size_t k) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        for (std::size_t i = n; i > 1; --i) std::swap(idx[i - 1], idx[rng_() % i]);
        std::vector<bool> chosen(n, false);
        for (std::size_t i = 0; i < std::min(k, n); ++i) chosen[idx[i]] = true;
        return chosen;
    }

    double heightAbove(double threshold) { return threshold + 0.1 + (rng_() % 140) / 100.0; }
    double heightBelow(double threshold) { return threshold - 1.0 + (rng_() % 99) / 100.0; }

    // one property set bound to `owner` through IfcRelDefinesByProperties
    void attachPset(int64_t owner, const std::string& psetName, const std::string& propName,
                    StepParam value) {
        int64_t prop =
            add("IFCPROPERTYSINGLEVALUE", {str(propName), unset(), std::move(value), unset()});
        int64_t pset = add("IFCPROPERTYSET",
                           {str(globalId()), unset(), str(psetName), unset(), list({ref(prop)})});
        add("IFCRELDEFINESBYPROPERTIES",
            {str(globalId()), unset(), unset(), unset(), list({ref(owner)}), ref(pset)});
    }

    step::StepModel&& finish(const std::string& description) {
        model_.schema_name = "IFC4";
        model_.header = {
            "FILE_DESCRIPTION(('" + description + "'),'2;1');",
            "FILE_NAME('synthetic.ifc','2026-08-23T00:00:00',(''),(''),'','','');",
            "FILE_SCHEMA(('IFC4'));",
        };
        return std::move(model_);
    }

private:
    std::mt19937 rng_;
    step::StepModel model_;
    int64_t next_id_ = 1;
};

}  // namespace

SyntheticModel generate_synthetic(const SyntheticParams& p) {
    Builder b(p.seed);
    SyntheticModel out;

    auto external = b.pick(p.walls, p.external_walls);
    for (std::size_t i = 0; i < p.walls; ++i) {
        int64_t wall = b.add("IFCWALLSTANDARDCASE",
                             {str(b.globalId()), unset(), str("Wall-" + std::to_string(i)), unset(),
                              unset(), unset(), unset(), unset()});
        b.attachPset(wall, "Pset_WallCommon", "IsExternal",
                     typed("IFCBOOLEAN", enm(external[i] ? "T" : "F")));
    }

    auto withRef = b.pick(p.doors, p.doors_with_reference);
    for (std::size_t i = 0; i < p.doors; ++i) {
        int64_t door = b.add("IFCDOOR", {str(b.globalId()), unset(),
                                         str("Door-" + std::to_string(i)), unset(), unset(), unset(),
                                         unset(), unset(), unset(), unset()});
        if (withRef[i])
            b.attachPset(door, "Pset_DoorCommon", "Reference",
                         typed("IFCIDENTIFIER", str("D-" + std::to_string(i))));
        else
            b.attachPset(door, "Pset_DoorCommon", "AcousticRating", typed("IFCLABEL", str("42dB")));
    }

    auto tall = b.pick(p.spaces, p.tall_spaces);
    for (std::size_t i = 0; i < p.spaces; ++i) {
        int64_t space =
            b.add("IFCSPACE", {str(b.globalId()), unset(), str("Space-" + std::to_string(i)),
                               unset(), unset(), unset(), unset(), unset(), enm("ELEMENT"),
                               unset(), unset()});
        double h = tall[i] ? b.heightAbove(p.height_threshold) : b.heightBelow(p.height_threshold);
        b.attachPset(space, "Pset_SpaceCommon", "NominalHeight",
                     typed("IFCLENGTHMEASURE", real(h)));
    }

    std::vector<int64_t> chain;
    for (std::size_t i = 0; i < p.processes; ++i)
        chain.push_back(b.add("IFCTASK", {str(b.globalId()), unset(),
                                          str("Task-" + std::to_string(i)), unset(), unset(),
                                          unset(), unset(), unset(), unset(), enm("F"), unset()}));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        b.add("IFCRELSEQUENCE", {str(b.globalId()), unset(), unset(), unset(), ref(chain[i]),
                                 ref(chain[i + 1]), unset(), enm("FINISH_START"), unset()});

    out.truth.external_walls = std::min(p.external_walls, p.walls);
    out.truth.doors_with_reference = std::min(p.doors_with_reference, p.doors);
    out.truth.tall_spaces = std::min(p.tall_spaces, p.spaces);
    out.truth.sequence_links = p.processes > 0 ? p.processes - 1 : 0;
    out.truth.closure_pairs = p.processes * (p.processes > 0 ? p.processes - 1 : 0) / 2;
    out.model = b.finish("synthetic benchmark dataset");
    return out;
}

}  // namespace ifcwod::bench
