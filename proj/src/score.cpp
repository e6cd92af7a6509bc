#include "mldim/score.hpp"

#include <cstdio>
#include <stdexcept>

namespace mldim {

Measure measure_from_name(const std::string& name) {
    if (name == "mld") return Measure::mld;
    if (name == "ld") return Measure::ld;
    if (name == "bc") return Measure::bc;
    if (name == "cc") return Measure::cc;
    if (name == "dc") return Measure::dc;
    throw std::invalid_argument("unknown measure: " + name);
}

std::string measure_name(Measure m) {
    switch (m) {
        case Measure::mld: return "mld";
        case Measure::ld: return "ld";
        case Measure::bc: return "bc";
        case Measure::cc: return "cc";
        case Measure::dc: return "dc";
    }
    return {};
}

std::string format_q(double q) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", q);
    return buf;
}

int ScoreVector::flagged_count() const {
    int c = 0;
    for (char f : flagged) c += f != 0;
    return c;
}

}  // namespace mldim
