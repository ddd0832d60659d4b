#include "witcount/report.hpp"

#include <sstream>

#include "witcount/errors.hpp"

namespace witcount {

namespace {

nlohmann::json decimal_array(const std::vector<Integer>& xs) {
    auto arr = nlohmann::json::array();
    for (const auto& x : xs) arr.push_back(x.get_str());
    return arr;
}

std::vector<Integer> integers_from(const nlohmann::json& arr) {
    std::vector<Integer> out;
    for (const auto& s : arr) {
        Integer x;
        if (x.set_str(s.get<std::string>(), 10) != 0) throw ParseError(0, "bad decimal string in report");
        out.push_back(std::move(x));
    }
    return out;
}

nlohmann::json timing_json(const std::vector<std::pair<std::string, double>>& timing) {
    auto obj = nlohmann::json::object();
    for (const auto& [phase, ms] : timing) obj[phase] = ms;
    return obj;
}

std::string joined(const std::vector<Integer>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + xs[i].get_str();
    return out;
}

}  // namespace

std::vector<Integer> cumulative_sums(const std::vector<Integer>& xs) {
    std::vector<Integer> out;
    out.reserve(xs.size());
    Integer running = 0;
    for (const auto& x : xs) {
        running += x;
        out.push_back(running);
    }
    return out;
}

nlohmann::json to_json(const RunReport& r) {
    nlohmann::json j;
    j["command"] = r.command;
    j["instance"] = {{"d", r.d}, {"m", r.m}, {"k", r.k}, {"t", r.target}};
    auto profile = nlohmann::json::object();
    profile["cand"] = decimal_array(r.profile.cand);
    if (!r.profile.wit.empty()) {
        profile["fail"] = decimal_array(r.profile.fail);
        profile["wit"] = decimal_array(r.profile.wit);
    }
    j["profile"] = profile;
    if (r.cumulative) j["cumulative"] = decimal_array(cumulative_sums(r.profile.wit));
    j["timing_ms"] = timing_json(r.timing_ms);
    j["op_count"] = r.op_count;
    return j;
}

nlohmann::json to_json(const MatchingReport& r) {
    nlohmann::json j;
    j["command"] = "matchings";
    j["hypergraph"] = {{"n", r.n}, {"l", r.l}, {"edges", r.edges}};
    if (r.reduced)
        j["reduced"] = {{"d", r.reduced->d}, {"m", r.reduced->m()}, {"k", r.reduced->k},
                        {"t", to_bitstring(r.reduced->target, r.reduced->d)}};
    else
        j["reduced"] = nullptr;
    j["count"] = r.count.get_str();
    if (!r.reason.empty()) j["reason"] = r.reason;
    j["timing_ms"] = timing_json(r.timing_ms);
    j["op_count"] = r.op_count;
    return j;
}

std::string to_plain(const RunReport& r) {
    std::ostringstream os;
    os << "d=" << r.d << " m=" << r.m << " k=" << r.k << " t=" << r.target << "\n";
    os << "cand: " << joined(r.profile.cand) << "\n";
    if (!r.profile.wit.empty()) {
        os << "fail: " << joined(r.profile.fail) << "\n";
        os << "wit: " << joined(r.profile.wit) << "\n";
    }
    if (r.cumulative) os << "cumulative: " << joined(cumulative_sums(r.profile.wit)) << "\n";
    for (const auto& [phase, ms] : r.timing_ms) os << "time " << phase << ": " << ms << " ms\n";
    os << "ops: " << r.op_count << "\n";
    return os.str();
}

std::string to_plain(const MatchingReport& r) {
    std::ostringstream os;
    os << "n=" << r.n << " l=" << r.l << " edges=" << r.edges << "\n";
    if (r.reduced) os << "reduced: d=" << r.reduced->d << " m=" << r.reduced->m() << " k=" << r.reduced->k << "\n";
    os << "perfect matchings: " << r.count.get_str() << "\n";
    if (!r.reason.empty()) os << "reason: " << r.reason << "\n";
    return os.str();
}

WitnessProfile profile_from_json(const nlohmann::json& j) {
    const auto& p = j.at("profile");
    WitnessProfile out;
    out.cand = integers_from(p.at("cand"));
    out.fail = integers_from(p.at("fail"));
    out.wit = integers_from(p.at("wit"));
    return out;
}

}  // namespace witcount
