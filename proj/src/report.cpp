#include "tsw/report.hpp"

#include <sstream>

namespace tsw
{

std::string to_string(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::excluded:
        return "excluded";
    }
    return "unknown";
}

void Report::append(const Report &other)
{
    results.insert(results.end(), other.results.begin(), other.results.end());
}

std::size_t Report::count(Status s) const
{
    std::size_t n = 0;
    for (const auto &r : results) {
        n += r.status == s ? 1 : 0;
    }
    return n;
}

nlohmann::json Report::to_json() const
{
    nlohmann::json j;
    j["suite"] = suite;
    nlohmann::json p = nlohmann::json::object();
    for (const auto &[k, v] : params) {
        p[k] = v;
    }
    j["params"] = p;
    nlohmann::json rs = nlohmann::json::array();
    for (const auto &r : results) {
        nlohmann::json e;
        e["relation"] = r.relation;
        e["nodes"] = r.nodes;
        e["modes"] = r.modes;
        e["vector"] = r.vector;
        e["status"] = to_string(r.status);
        if (r.numeric) {
            e["numeric"] = to_string(*r.numeric);
        }
        if (r.residual) {
            e["residual"] = *r.residual;
        }
        rs.push_back(std::move(e));
    }
    j["results"] = rs;
    j["summary"] = {{"pass", count(Status::pass)}, {"fail", count(Status::fail)}, {"excluded", count(Status::excluded)}};
    return j;
}

std::string Report::summary() const
{
    std::map<std::string, std::map<Status, std::size_t>> by_relation;
    for (const auto &r : results) {
        ++by_relation[r.relation][r.status];
    }
    std::ostringstream os;
    os << suite << ": " << count(Status::pass) << " pass, " << count(Status::fail) << " fail, "
       << count(Status::excluded) << " excluded\n";
    for (const auto &[rel, counts] : by_relation) {
        std::size_t total = 0;
        for (const auto &[s, n] : counts) {
            total += n;
        }
        auto get = [&counts](Status s) {
            auto it = counts.find(s);
            return it == counts.end() ? std::size_t{0} : it->second;
        };
        os << "  " << rel << ": ";
        if (get(Status::excluded) == total) {
            os << "excluded\n";
        } else {
            os << get(Status::pass) << "/" << total << " pass\n";
        }
    }
    return os.str();
}

} // namespace tsw
