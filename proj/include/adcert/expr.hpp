#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include <adcert/jet.hpp>

namespace adcert
{

enum class Op : std::uint8_t { constant, variable, add, sub, mul, div, neg, exp, sqrt, pow };

using ExprId = std::uint32_t;

struct ExprNode {
    Op op;
    ExprId lhs = 0;
    ExprId rhs = 0;
    // constant value, or the exponent of a pow node
    double value = 0.0;
    unsigned var = 0;

    friend bool operator==(const ExprNode &, const ExprNode &) = default;
};

// Hash-consed expression DAG. Children always have smaller ids than their
// parents, so id order is a topological order.
class ExprArena
{
public:
    ExprId constant(double c);
    ExprId variable(unsigned index);

    ExprId add(ExprId a, ExprId b);
    ExprId sub(ExprId a, ExprId b);
    ExprId mul(ExprId a, ExprId b);
    ExprId div(ExprId a, ExprId b);
    ExprId neg(ExprId a);
    ExprId exp(ExprId a);
    ExprId sqrt(ExprId a);
    ExprId pow(ExprId a, double p);

    // d/dx_var, memoized per (node, var).
    ExprId diff(ExprId e, unsigned var);
    // Replaces variable j by replacement[j]; variables beyond the span stay.
    ExprId substitute(ExprId e, std::span<const ExprId> replacement);

    const ExprNode &node(ExprId id) const { return m_nodes.at(id); }
    std::size_t size() const { return m_nodes.size(); }
    bool is_constant(ExprId id, double c) const;

    // Prefix notation, e.g. ["add", ["pow", "x0", 2], 1].
    nlohmann::json to_json(ExprId e) const;
    ExprId from_json(const nlohmann::json &j);
    std::string to_string(ExprId e) const;

    double eval(ExprId e, std::span<const double> vars) const;

private:
    struct NodeHash {
        std::size_t operator()(const ExprNode &n) const;
    };

    ExprId intern(const ExprNode &n);

    std::vector<ExprNode> m_nodes;
    std::unordered_map<ExprNode, ExprId, NodeHash> m_index;
    std::unordered_map<std::uint64_t, ExprId> m_diff_cache;
};

// Straight-line evaluation program over every node reachable from `roots`.
class Tape
{
public:
    Tape(const ExprArena &arena, std::vector<ExprId> roots);

    std::size_t length() const { return m_program.size(); }
    std::size_t root_count() const { return m_roots.size(); }

    std::vector<double> eval(std::span<const double> vars) const;
    std::vector<Jet> eval(std::span<const Jet> vars) const;

private:
    struct Instr {
        Op op;
        std::uint32_t lhs; // slot
        std::uint32_t rhs; // slot
        double value;
        unsigned var;
    };

    template <typename T>
    std::vector<T> run(std::span<const T> vars, const T &zero_like) const;

    std::vector<Instr> m_program;
    std::vector<std::uint32_t> m_roots; // slots
};

} // namespace adcert
