#include "matchstick/certificates.hpp"

#include <sstream>

#include "json.hpp"

namespace matchstick {

using ordered_json = nlohmann::ordered_json;

std::string tool_version() { return "0.1.0"; }

std::string config_fingerprint(const std::string& serialized_config) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : serialized_config) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string CertificateRecord::to_jsonl() const {
    ordered_json j;
    j["code"] = code.hex();
    ordered_json prof;
    prof["n"] = profile.n;
    prof["edges"] = profile.edges;
    prof["faces"] = profile.faces;
    prof["k"] = profile.k;
    prof["tau"] = profile.tau;
    ordered_json census = ordered_json::object();
    for (auto [i, a] : profile.census) census[std::to_string(i)] = a;
    prof["census"] = census;
    j["profile"] = prof;
    ordered_json vs = ordered_json::array();
    for (const auto& v : verdicts) {
        ordered_json jv;
        jv["rule"] = v.rule;
        jv["passed"] = v.passed;
        if (!v.passed) jv["witness"] = v.witness;
        vs.push_back(jv);
    }
    j["verdicts"] = vs;
    if (!realize_tag.empty()) {
        j["realize"] = realize_tag;
        j["realize_gap"] = realize_gap;
    }
    if (coords) {
        ordered_json pts = ordered_json::array();
        for (const auto& p : *coords) pts.push_back(ordered_json::array({p.x, p.y}));
        j["coords"] = pts;
    }
    ordered_json prov;
    prov["config"] = config_hash;
    prov["seed"] = seed;
    prov["version"] = version;
    j["provenance"] = prov;
    return j.dump();
}

CertificateRecord CertificateRecord::from_jsonl(const std::string& line) {
    ordered_json j = ordered_json::parse(line);
    CertificateRecord rec;
    rec.code = CanonicalCode::from_hex(j.at("code").get<std::string>());
    const auto& prof = j.at("profile");
    rec.profile.n = prof.at("n").get<int>();
    rec.profile.edges = prof.at("edges").get<int>();
    rec.profile.faces = prof.at("faces").get<int>();
    rec.profile.k = prof.at("k").get<int>();
    rec.profile.tau = prof.at("tau").get<int>();
    for (auto it = prof.at("census").begin(); it != prof.at("census").end(); ++it)
        rec.profile.census[std::stoi(it.key())] = it.value().get<int>();
    for (const auto& jv : j.at("verdicts")) {
        Verdict v;
        v.rule = jv.at("rule").get<std::string>();
        v.passed = jv.at("passed").get<bool>();
        if (jv.contains("witness")) v.witness = jv.at("witness").get<std::string>();
        rec.verdicts.push_back(std::move(v));
    }
    if (j.contains("realize")) {
        rec.realize_tag = j.at("realize").get<std::string>();
        rec.realize_gap = j.value("realize_gap", 0.0);
    }
    if (j.contains("coords")) {
        std::vector<Vec2> pts;
        for (const auto& p : j.at("coords")) pts.push_back({p[0].get<double>(), p[1].get<double>()});
        rec.coords = std::move(pts);
    }
    if (j.contains("provenance")) {
        const auto& prov = j.at("provenance");
        rec.config_hash = prov.value("config", "");
        rec.seed = prov.value("seed", 0ULL);
        rec.version = prov.value("version", "");
    }
    return rec;
}

}  // namespace matchstick
