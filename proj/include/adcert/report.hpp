#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <adcert/enumeration.hpp>
#include <adcert/polyindex.hpp>

namespace adcert
{

inline constexpr std::string_view version_string = "adcert 0.1.0";

// 64-bit FNV-1a, lowercase hex
std::string fnv1a_hex(std::string_view bytes);

// [[i, count], ...] sorted by degree
nlohmann::json to_json(const Polyindex1 &p);
// [[i, sigma, count], ...] sorted by (i, sigma)
nlohmann::json to_json(const PolyindexD &p);
nlohmann::json to_json(const MultiIndex &m);
// {"alpha", "beta", "a", "b"}
nlohmann::json to_json(const IndexQuadruple &q);

Polyindex1 polyindex1_from_json(const nlohmann::json &j);
PolyindexD polyindexD_from_json(const nlohmann::json &j, unsigned dim);

struct CheckRecord {
    std::string name;
    nlohmann::json inputs;
    bool pass = true;
    nlohmann::json payload;

    std::string inputs_digest() const { return fnv1a_hex(inputs.dump()); }
};

class RunReport
{
public:
    RunReport(std::string command, nlohmann::json parameters)
        : m_command(std::move(command)), m_parameters(std::move(parameters))
    {
    }

    void add(CheckRecord record) { m_records.push_back(std::move(record)); }
    void add_all(std::vector<CheckRecord> records);
    void set_wall_time(double seconds) { m_wall_time = seconds; }

    const std::string &command() const { return m_command; }
    const std::vector<CheckRecord> &records() const { return m_records; }
    bool pass() const;

    // Keys are emitted in sorted order; wall time is omitted when
    // include_timing is false.
    nlohmann::json to_json(bool include_timing = true) const;
    // name,inputs_digest,pass,payload
    std::string to_csv() const;
    // One line per record plus a verdict line.
    std::string to_text() const;

private:
    std::string m_command;
    nlohmann::json m_parameters;
    std::vector<CheckRecord> m_records;
    double m_wall_time = 0.0;
};

// Escapes a field for CSV output.
std::string csv_field(const std::string &s);

} // namespace adcert
