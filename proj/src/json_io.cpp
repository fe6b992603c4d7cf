#include "probedf/json_io.hpp"

#include "probedf/certificates.hpp"

namespace probedf {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json certificate_to_json(const Certificate& cert) {
    ordered_json doc;
    if (cert.member) {
        doc["result"] = "yes";
        doc["probes"] = cert.probes;
        doc["nonprobes"] = cert.nonprobes;
        auto comp = ordered_json::array();
        for (auto [u, v] : cert.completion) comp.push_back({u, v});
        doc["completion"] = std::move(comp);
    } else {
        doc["result"] = "no";
        doc["indicator"] = cert.indicator;
        doc["name"] = obstruction_template(cert.indicator).name;
        doc["vertices"] = cert.vertices;
    }
    return doc;
}

namespace {

bool int_array(const json& j, std::vector<int>& out) {
    if (!j.is_array()) return false;
    for (const auto& e : j) {
        if (!e.is_number_integer()) return false;
        out.push_back(e.get<int>());
    }
    return true;
}

CertCheck fail(std::string* reason, const char* why) {
    if (reason) *reason = why;
    return CertCheck::malformed;
}

}  // namespace

CertCheck check_certificate(const Graph& g, const json& doc, std::string* reason) {
    if (!doc.is_object() || !doc.contains("result") || !doc["result"].is_string())
        return fail(reason, "missing result field");
    std::string result = doc["result"].get<std::string>();

    if (result == "no") {
        if (!doc.contains("indicator") || !doc["indicator"].is_number_integer())
            return fail(reason, "missing indicator");
        int ind = doc["indicator"].get<int>();
        if (ind < 1 || ind > 17) return fail(reason, "indicator out of range");
        if (!doc.contains("name") || !doc["name"].is_string())
            return fail(reason, "missing name");
        std::vector<int> verts;
        if (!doc.contains("vertices") || !int_array(doc["vertices"], verts))
            return fail(reason, "missing vertices");
        if (doc["name"].get<std::string>() != obstruction_template(ind).name) {
            if (reason) *reason = "name does not match indicator";
            return CertCheck::reject;
        }
        if (verify_negative(g, ind, verts)) return CertCheck::accept;
        if (reason) *reason = "sequence does not induce the template";
        return CertCheck::reject;
    }
    if (result == "yes") {
        std::vector<int> probes, nonprobes;
        if (!doc.contains("probes") || !int_array(doc["probes"], probes))
            return fail(reason, "missing probes");
        if (!doc.contains("nonprobes") || !int_array(doc["nonprobes"], nonprobes))
            return fail(reason, "missing nonprobes");
        if (!doc.contains("completion") || !doc["completion"].is_array())
            return fail(reason, "missing completion");
        std::vector<Edge> comp;
        for (const auto& e : doc["completion"]) {
            std::vector<int> pair;
            if (!int_array(e, pair) || pair.size() != 2)
                return fail(reason, "completion entries must be pairs");
            comp.emplace_back(pair[0], pair[1]);
        }
        if (verify_positive(g, probes, nonprobes, comp)) return CertCheck::accept;
        if (reason) *reason = "partition or completion rejected";
        return CertCheck::reject;
    }
    return fail(reason, "result must be yes or no");
}

}  // namespace probedf
