#include "bpf/serialize.hpp"

namespace bpf {

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

}  // namespace

nlohmann::json to_json(const QuatMatrix2& m) {
    return nlohmann::json::array({nlohmann::json::array({to_json(m.e[0][0]), to_json(m.e[0][1])}),
                                  nlohmann::json::array({to_json(m.e[1][0]), to_json(m.e[1][1])})});
}

nlohmann::json to_json(const Params& p) {
    return {{"a", to_json(p.a())}, {"b", to_json(p.b())}, {"w0", to_json(p.w0())},
            {"w1", to_json(p.w1())}};
}

nlohmann::json to_json(const IdentityReport& report) {
    nlohmann::json j;
    j["identity"] = report.identity;
    j["params"] = to_json(report.params);
    j["indices"] = report.indices;
    j["lhs"] = report.lhs;
    j["rhs"] = report.rhs;
    j["equal"] = report.equal;
    j["hypothesis"] = report.hypothesis;
    j["gating"] = report.gating;
    if (report.note) {
        j["note"] = *report.note;
    }
    return j;
}

std::string dump_canonical(const nlohmann::json& j) { return j.dump(); }

std::string csv_header() { return "identity,a,b,w0,w1,indices,equal,hypothesis,gating,note"; }

std::string csv_row(const IdentityReport& report) {
    std::string indices;
    for (const auto& [name, value] : report.indices) {
        if (!indices.empty()) {
            indices += ';';
        }
        indices += name + "=" + std::to_string(value);
    }
    const auto& p = report.params;
    return csv_escape(report.identity) + "," + p.a().to_string() + "," + p.b().to_string() + "," +
           p.w0().to_string() + "," + p.w1().to_string() + "," + csv_escape(indices) + "," +
           (report.equal ? "true" : "false") + "," + (report.hypothesis ? "true" : "false") + "," +
           (report.gating ? "true" : "false") + "," + csv_escape(report.note.value_or(""));
}

}  // namespace bpf
