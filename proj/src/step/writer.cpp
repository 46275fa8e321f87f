#include <sstream>

#include "step/model.hpp"

namespace ifcwod::step {

namespace {

void writeParam(std::ostream& out, const StepParam& p) {
    struct Visitor {
        std::ostream& out;
        void operator()(const Unset&) { out << '$'; }
        void operator()(const Derived&) { out << '*'; }
        void operator()(const Integer& v) { out << v.value; }
        void operator()(const Real& v) { out << v.lexical; }
        void operator()(const String& v) { out << '\'' << v.raw << '\''; }
        void operator()(const Enum& v) { out << '.' << v.name << '.'; }
        void operator()(const Reference& v) { out << '#' << v.id; }
        void operator()(const Typed& v) {
            out << v.keyword << '(';
            writeParam(out, *v.inner);
            out << ')';
        }
        void operator()(const List& v) {
            out << '(';
            for (std::size_t i = 0; i < v.items.size(); ++i) {
                if (i) out << ',';
                writeParam(out, v.items[i]);
            }
            out << ')';
        }
    };
    std::visit(Visitor{out}, p.value);
}

}  // namespace

std::string write_spf(const StepModel& model) {
    std::ostringstream out;
    out << "ISO-10303-21;\nHEADER;\n";
    for (const auto& record : model.header) out << record << "\n";
    out << "ENDSEC;\nDATA;\n";
    for (const auto& [id, inst] : model.instances) {
        out << '#' << id << '=' << inst.keyword << '(';
        for (std::size_t i = 0; i < inst.params.size(); ++i) {
            if (i) out << ',';
            writeParam(out, inst.params[i]);
        }
        out << ");\n";
    }
    out << "ENDSEC;\nEND-ISO-10303-21;\n";
    return out.str();
}

}  // namespace ifcwod::step
