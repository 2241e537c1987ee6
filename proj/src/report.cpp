#include <adcert/report.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace adcert
{

std::string fnv1a_hex(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json to_json(const Polyindex1 &p)
{
    auto out = nlohmann::json::array();
    for (const auto &[deg, mult] : p.entries()) {
        out.push_back({deg, mult});
    }
    return out;
}

nlohmann::json to_json(const PolyindexD &p)
{
    std::vector<std::tuple<unsigned, unsigned, unsigned>> triples;
    for (unsigned s = 0; s < p.dim(); ++s) {
        for (const auto &[deg, mult] : p.component(s).entries()) {
            triples.emplace_back(deg, s, mult);
        }
    }
    std::sort(triples.begin(), triples.end());
    auto out = nlohmann::json::array();
    for (const auto &[deg, s, mult] : triples) {
        out.push_back({deg, s, mult});
    }
    return out;
}

nlohmann::json to_json(const MultiIndex &m)
{
    return std::vector<unsigned>(m.orders().begin(), m.orders().end());
}

nlohmann::json to_json(const IndexQuadruple &q)
{
    return {{"alpha", to_json(q.alpha)}, {"beta", to_json(q.beta)}, {"a", to_json(q.a)}, {"b", to_json(q.b)}};
}

Polyindex1 polyindex1_from_json(const nlohmann::json &j)
{
    std::vector<Polyindex1::Entry> entries;
    for (const auto &e : j) {
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument("1-d polyindex entries are [degree, count] pairs");
        }
        entries.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
    }
    return Polyindex1(std::move(entries));
}

PolyindexD polyindexD_from_json(const nlohmann::json &j, unsigned dim)
{
    PolyindexD p(dim);
    for (const auto &e : j) {
        if (!e.is_array() || e.size() != 3) {
            throw std::invalid_argument("d-dimensional polyindex entries are [degree, axis, count] triples");
        }
        const auto deg = e[0].get<unsigned>();
        const auto axis = e[1].get<unsigned>();
        for (unsigned c = e[2].get<unsigned>(); c > 0; --c) {
            p.bump(deg, axis);
        }
    }
    return p;
}

void RunReport::add_all(std::vector<CheckRecord> records)
{
    for (auto &r : records) {
        m_records.push_back(std::move(r));
    }
}

bool RunReport::pass() const
{
    return std::all_of(m_records.begin(), m_records.end(), [](const CheckRecord &r) { return r.pass; });
}

nlohmann::json RunReport::to_json(bool include_timing) const
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto &r : m_records) {
        checks.push_back({{"name", r.name},
                          {"inputs", r.inputs},
                          {"inputs_digest", r.inputs_digest()},
                          {"pass", r.pass},
                          {"payload", r.payload}});
    }
    nlohmann::json out{{"version", version_string},
                       {"command", m_command},
                       {"parameters", m_parameters},
                       {"pass", pass()},
                       {"checks", checks}};
    if (include_timing) {
        out["wall_time_s"] = m_wall_time;
    }
    return out;
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}

std::string RunReport::to_csv() const
{
    std::ostringstream out;
    out << "name,inputs_digest,pass,payload\n";
    for (const auto &r : m_records) {
        out << csv_field(r.name) << ',' << r.inputs_digest() << ',' << (r.pass ? "true" : "false") << ','
            << csv_field(r.payload.dump()) << '\n';
    }
    return out.str();
}

std::string RunReport::to_text() const
{
    std::ostringstream out;
    for (const auto &r : m_records) {
        out << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.payload.is_null()) {
            out << "  " << r.payload.dump();
        }
        out << '\n';
    }
    out << m_command << ": " << (pass() ? "all checks passed" : "some checks failed") << '\n';
    return out.str();
}

} // namespace adcert
