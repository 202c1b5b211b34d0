#include "gkat/transcript.hpp"

namespace gkat {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string Transcript::csv() const {
    std::string out = "step,kind,payload\n";
    for (const auto& e : events_)
        out += std::to_string(e.step) + "," + e.kind + "," + csv_field(e.payload) + "\n";
    return out;
}

}  // namespace gkat
