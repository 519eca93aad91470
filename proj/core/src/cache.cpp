#include "vinberg/cache.hpp"

#include "vinberg/report.hpp"

#include <fstream>
#include <sstream>

namespace vinberg {

namespace {

nlohmann::json vec_json(const IntVector& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v)
        a.push_back(x.get_str());
    return a;
}

IntVector vec_from(const nlohmann::json& j) {
    IntVector v;
    for (const auto& x : j)
        v.push_back(integer_from_json(x));
    return v;
}

} // namespace

std::string encode_state(const VinbergState& st) {
    nlohmann::json j;
    j["form_digest"] = st.form.digest();
    j["control"] = vec_json(st.u0.vector());
    j["chamber_size"] = st.chamber_size;
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& r : st.accepted)
        roots.push_back({{"e", vec_json(r.e)}, {"norm", r.norm.get_str()}, {"level", r.level.get_str()}});
    j["accepted"] = roots;
    nlohmann::json frontier = nlohmann::json::array();
    for (const auto& [s, a] : st.frontier)
        frontier.push_back({s.get_str(), a.get_str()});
    j["frontier"] = frontier;
    nlohmann::json log = nlohmann::json::array();
    for (const auto& k : st.distance_log)
        log.push_back(to_string(k));
    j["distance_log"] = log;
    const auto& s = st.stats;
    j["stats"] = {s.keys_examined, s.nonempty_batches, s.accepting_batches,
                  s.candidates,    s.iterations,       s.volume_checks};
    const std::string payload = j.dump();
    return std::string(kCacheVersion) + " " + fnv1a_hex(payload) + "\n" + payload + "\n";
}

VinbergState decode_state(const std::string& text, const QuadraticForm& form, const ControlVector& u0) {
    const auto nl = text.find('\n');
    if (nl == std::string::npos)
        throw Error("cache", "truncated cache file");
    std::istringstream header(text.substr(0, nl));
    std::string version, checksum;
    header >> version >> checksum;
    if (version != kCacheVersion)
        throw Error("cache", "cache version '" + version + "' is not " + kCacheVersion);
    std::string payload = text.substr(nl + 1);
    if (!payload.empty() && payload.back() == '\n')
        payload.pop_back();
    if (fnv1a_hex(payload) != checksum)
        throw Error("cache", "checksum mismatch, the cache file is corrupted");

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(payload);
    } catch (const nlohmann::json::exception& e) {
        throw Error("cache", std::string("malformed cache: ") + e.what());
    }
    if (j.at("form_digest").get<std::string>() != form.digest() || vec_from(j.at("control")) != u0.vector())
        throw Error("cache/form mismatch", "the cache was written for a different form or control vector");

    try {
        VinbergState st{form, u0, 0, {}, {}, {}, {}};
        st.chamber_size = j.at("chamber_size").get<std::size_t>();
        for (const auto& r : j.at("accepted"))
            st.accepted.push_back(
                Root{vec_from(r.at("e")), integer_from_json(r.at("norm")), integer_from_json(r.at("level"))});
        for (const auto& f : j.at("frontier"))
            st.frontier.emplace(integer_from_json(f.at(0)), integer_from_json(f.at(1)));
        for (const auto& k : j.at("distance_log"))
            st.distance_log.push_back(parse_rational(k.get<std::string>()));
        const auto& s = j.at("stats");
        st.stats = RunStats{s.at(0).get<std::uint64_t>(), s.at(1).get<std::uint64_t>(), s.at(2).get<std::uint64_t>(),
                            s.at(3).get<std::uint64_t>(), s.at(4).get<std::uint64_t>(), s.at(5).get<std::uint64_t>()};
        if (st.chamber_size > st.accepted.size() ||
            st.distance_log.size() != st.accepted.size() - st.chamber_size)
            throw Error("cache", "inconsistent cache contents");
        for (const auto& r : st.accepted)
            if (r.e.size() != form.ambient() || form.norm(r.e) != r.norm)
                throw Error("cache", "cached root does not match the form");
        return st;
    } catch (const nlohmann::json::exception& e) {
        throw Error("cache", std::string("malformed cache: ") + e.what());
    }
}

void save_state(const VinbergState& state, const std::filesystem::path& path) {
    write_file_atomic(path, encode_state(state));
}

VinbergState restore_state(const std::filesystem::path& path, const QuadraticForm& form, const ControlVector& u0) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("io", "cannot read cache " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return decode_state(buf.str(), form, u0);
}

} // namespace vinberg
