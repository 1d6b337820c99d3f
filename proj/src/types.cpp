#include "locdens/types.hpp"

#include <algorithm>

namespace locdens {

std::string to_string(FieldKind kind) {
    switch (kind) {
    case FieldKind::Plain:
        return "plain";
    case FieldKind::Tilde:
        return "tilde";
    case FieldKind::NewtonWigner:
        return "nw";
    }
    return "?";
}

std::string to_string(Prescription p) {
    switch (p) {
    case Prescription::EnergyDensityRaw:
        return "energy_raw";
    case Prescription::NaiveNormalized:
        return "naive";
    case Prescription::Povm:
        return "povm";
    case Prescription::NewtonWigner:
        return "nw";
    }
    return "?";
}

Prescription prescription_from_string(const std::string& name) {
    if (name == "energy_raw")
        return Prescription::EnergyDensityRaw;
    if (name == "naive")
        return Prescription::NaiveNormalized;
    if (name == "povm")
        return Prescription::Povm;
    if (name == "nw")
        return Prescription::NewtonWigner;
    throw ConfigError("unknown prescription '" + name +
                      "' (expected energy_raw, naive, povm or nw)");
}

void Region::validate(int dim) const {
    if (parts.empty())
        throw PreconditionError("region has no parts");
    std::vector<Interval> sorted = parts;
    std::sort(sorted.begin(), sorted.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (!(sorted[i].hi > sorted[i].lo))
            throw PreconditionError("region parts must have positive measure");
        if (dim == 3 && sorted[i].lo < 0.0)
            throw PreconditionError("radial shells must have lo >= 0");
        if (i > 0 && sorted[i].lo < sorted[i - 1].hi)
            throw PreconditionError("region parts must be pairwise disjoint");
    }
}

} // namespace locdens
