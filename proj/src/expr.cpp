#include <adcert/expr.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace adcert
{

namespace
{

const std::map<std::string, Op> &op_names()
{
    static const std::map<std::string, Op> names{{"add", Op::add}, {"sub", Op::sub},   {"mul", Op::mul},
                                                 {"div", Op::div}, {"neg", Op::neg},   {"exp", Op::exp},
                                                 {"sqrt", Op::sqrt}, {"pow", Op::pow}};
    return names;
}

std::string op_name(Op op)
{
    for (const auto &[name, o] : op_names()) {
        if (o == op) {
            return name;
        }
    }
    return op == Op::constant ? "const" : "var";
}

bool is_binary(Op op)
{
    return op == Op::add || op == Op::sub || op == Op::mul || op == Op::div;
}

bool is_unary(Op op)
{
    return op == Op::neg || op == Op::exp || op == Op::sqrt || op == Op::pow;
}

double apply(Op op, double a, double b, double p)
{
    switch (op) {
    case Op::add:
        return a + b;
    case Op::sub:
        return a - b;
    case Op::mul:
        return a * b;
    case Op::div:
        return a / b;
    case Op::neg:
        return -a;
    case Op::exp:
        return std::exp(a);
    case Op::sqrt:
        return std::sqrt(a);
    case Op::pow:
        return std::pow(a, p);
    default:
        throw std::logic_error("apply: not an operator node");
    }
}

Jet apply(Op op, const Jet &a, const Jet &b, double p)
{
    switch (op) {
    case Op::add:
        return a + b;
    case Op::sub:
        return a - b;
    case Op::mul:
        return a * b;
    case Op::div:
        return a / b;
    case Op::neg:
        return -a;
    case Op::exp:
        return exp(a);
    case Op::sqrt:
        return sqrt(a);
    case Op::pow:
        return pow(a, p);
    default:
        throw std::logic_error("apply: not an operator node");
    }
}

double lift(double c, double)
{
    return c;
}

Jet lift(double c, const Jet &like)
{
    return Jet(like.order(), c);
}

} // namespace

std::size_t ExprArena::NodeHash::operator()(const ExprNode &n) const
{
    std::size_t h = std::hash<double>{}(n.value);
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(static_cast<std::size_t>(n.op));
    mix(n.lhs);
    mix(n.rhs);
    mix(n.var);
    return h;
}

ExprId ExprArena::intern(const ExprNode &n)
{
    if (auto it = m_index.find(n); it != m_index.end()) {
        return it->second;
    }
    const auto id = static_cast<ExprId>(m_nodes.size());
    m_nodes.push_back(n);
    m_index.emplace(n, id);
    return id;
}

bool ExprArena::is_constant(ExprId id, double c) const
{
    const auto &n = m_nodes.at(id);
    return n.op == Op::constant && n.value == c;
}

ExprId ExprArena::constant(double c)
{
    if (!std::isfinite(c)) {
        throw std::domain_error("non-finite constant in expression");
    }
    // +0 and -0 hash differently
    return intern(ExprNode{Op::constant, 0, 0, c == 0.0 ? 0.0 : c, 0});
}

ExprId ExprArena::variable(unsigned index)
{
    return intern(ExprNode{Op::variable, 0, 0, 0.0, index});
}

ExprId ExprArena::add(ExprId a, ExprId b)
{
    if (node(a).op == Op::constant && node(b).op == Op::constant) {
        return constant(node(a).value + node(b).value);
    }
    if (is_constant(a, 0.0)) {
        return b;
    }
    if (is_constant(b, 0.0)) {
        return a;
    }
    return intern(ExprNode{Op::add, std::min(a, b), std::max(a, b), 0.0, 0});
}

ExprId ExprArena::sub(ExprId a, ExprId b)
{
    if (node(a).op == Op::constant && node(b).op == Op::constant) {
        return constant(node(a).value - node(b).value);
    }
    if (a == b) {
        return constant(0.0);
    }
    if (is_constant(b, 0.0)) {
        return a;
    }
    if (is_constant(a, 0.0)) {
        return neg(b);
    }
    return intern(ExprNode{Op::sub, a, b, 0.0, 0});
}

ExprId ExprArena::mul(ExprId a, ExprId b)
{
    if (node(a).op == Op::constant && node(b).op == Op::constant) {
        return constant(node(a).value * node(b).value);
    }
    if (is_constant(a, 0.0) || is_constant(b, 0.0)) {
        return constant(0.0);
    }
    if (is_constant(a, 1.0)) {
        return b;
    }
    if (is_constant(b, 1.0)) {
        return a;
    }
    if (is_constant(a, -1.0)) {
        return neg(b);
    }
    if (is_constant(b, -1.0)) {
        return neg(a);
    }
    return intern(ExprNode{Op::mul, std::min(a, b), std::max(a, b), 0.0, 0});
}

ExprId ExprArena::div(ExprId a, ExprId b)
{
    if (is_constant(b, 0.0)) {
        throw std::domain_error("expression division by constant zero");
    }
    if (node(a).op == Op::constant && node(b).op == Op::constant) {
        return constant(node(a).value / node(b).value);
    }
    if (is_constant(a, 0.0)) {
        return constant(0.0);
    }
    if (is_constant(b, 1.0)) {
        return a;
    }
    if (a == b) {
        return constant(1.0);
    }
    return intern(ExprNode{Op::div, a, b, 0.0, 0});
}

ExprId ExprArena::neg(ExprId a)
{
    const auto &n = node(a);
    if (n.op == Op::constant) {
        return constant(-n.value);
    }
    if (n.op == Op::neg) {
        return n.lhs;
    }
    return intern(ExprNode{Op::neg, a, 0, 0.0, 0});
}

ExprId ExprArena::exp(ExprId a)
{
    if (node(a).op == Op::constant) {
        return constant(std::exp(node(a).value));
    }
    return intern(ExprNode{Op::exp, a, 0, 0.0, 0});
}

ExprId ExprArena::sqrt(ExprId a)
{
    if (node(a).op == Op::constant) {
        if (node(a).value < 0.0) {
            throw std::domain_error("sqrt of a negative constant");
        }
        return constant(std::sqrt(node(a).value));
    }
    return intern(ExprNode{Op::sqrt, a, 0, 0.0, 0});
}

ExprId ExprArena::pow(ExprId a, double p)
{
    if (!std::isfinite(p)) {
        throw std::domain_error("non-finite exponent");
    }
    if (p == 0.0) {
        return constant(1.0);
    }
    if (p == 1.0) {
        return a;
    }
    if (node(a).op == Op::constant) {
        return constant(std::pow(node(a).value, p));
    }
    return intern(ExprNode{Op::pow, a, 0, p, 0});
}

ExprId ExprArena::diff(ExprId e, unsigned var)
{
    if (var >= 256) {
        throw std::out_of_range("differentiation variable index too large");
    }
    const std::uint64_t key = (static_cast<std::uint64_t>(e) << 8) | var;
    if (auto it = m_diff_cache.find(key); it != m_diff_cache.end()) {
        return it->second;
    }
    const ExprNode n = node(e);
    ExprId r = 0;
    switch (n.op) {
    case Op::constant:
        r = constant(0.0);
        break;
    case Op::variable:
        r = constant(n.var == var ? 1.0 : 0.0);
        break;
    case Op::add:
        r = add(diff(n.lhs, var), diff(n.rhs, var));
        break;
    case Op::sub:
        r = sub(diff(n.lhs, var), diff(n.rhs, var));
        break;
    case Op::mul:
        r = add(mul(diff(n.lhs, var), n.rhs), mul(n.lhs, diff(n.rhs, var)));
        break;
    case Op::div: {
        const ExprId da = diff(n.lhs, var);
        const ExprId db = diff(n.rhs, var);
        r = sub(div(da, n.rhs), div(mul(n.lhs, db), mul(n.rhs, n.rhs)));
        break;
    }
    case Op::neg:
        r = neg(diff(n.lhs, var));
        break;
    case Op::exp:
        r = mul(e, diff(n.lhs, var));
        break;
    case Op::sqrt:
        r = div(diff(n.lhs, var), mul(constant(2.0), e));
        break;
    case Op::pow:
        r = mul(mul(constant(n.value), pow(n.lhs, n.value - 1.0)), diff(n.lhs, var));
        break;
    }
    m_diff_cache.emplace(key, r);
    return r;
}

ExprId ExprArena::substitute(ExprId e, std::span<const ExprId> replacement)
{
    std::unordered_map<ExprId, ExprId> memo;
    std::function<ExprId(ExprId)> go = [&](ExprId id) -> ExprId {
        if (auto it = memo.find(id); it != memo.end()) {
            return it->second;
        }
        const ExprNode n = node(id);
        ExprId r = id;
        switch (n.op) {
        case Op::constant:
            break;
        case Op::variable:
            if (n.var < replacement.size()) {
                r = replacement[n.var];
            }
            break;
        case Op::add:
            r = add(go(n.lhs), go(n.rhs));
            break;
        case Op::sub:
            r = sub(go(n.lhs), go(n.rhs));
            break;
        case Op::mul:
            r = mul(go(n.lhs), go(n.rhs));
            break;
        case Op::div:
            r = div(go(n.lhs), go(n.rhs));
            break;
        case Op::neg:
            r = neg(go(n.lhs));
            break;
        case Op::exp:
            r = exp(go(n.lhs));
            break;
        case Op::sqrt:
            r = sqrt(go(n.lhs));
            break;
        case Op::pow:
            r = pow(go(n.lhs), n.value);
            break;
        }
        memo.emplace(id, r);
        return r;
    };
    return go(e);
}

nlohmann::json ExprArena::to_json(ExprId e) const
{
    const auto &n = node(e);
    switch (n.op) {
    case Op::constant:
        return n.value;
    case Op::variable:
        return "x" + std::to_string(n.var);
    case Op::pow:
        return nlohmann::json::array({"pow", to_json(n.lhs), n.value});
    default:
        break;
    }
    if (is_unary(n.op)) {
        return nlohmann::json::array({op_name(n.op), to_json(n.lhs)});
    }
    return nlohmann::json::array({op_name(n.op), to_json(n.lhs), to_json(n.rhs)});
}

ExprId ExprArena::from_json(const nlohmann::json &j)
{
    if (j.is_number()) {
        return constant(j.get<double>());
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "x") {
            return variable(0);
        }
        if (s.size() >= 2 && s[0] == 'x' && std::all_of(s.begin() + 1, s.end(), ::isdigit)) {
            return variable(static_cast<unsigned>(std::stoul(s.substr(1))));
        }
        throw std::invalid_argument("unknown expression symbol '" + s + "'");
    }
    if (!j.is_array() || j.empty() || !j[0].is_string()) {
        throw std::invalid_argument("expression must be a number, a variable or [op, args...]");
    }
    const auto name = j[0].get<std::string>();
    const auto it = op_names().find(name);
    if (it == op_names().end()) {
        throw std::invalid_argument("unknown expression operator '" + name + "'");
    }
    const Op op = it->second;
    auto arity_error = [&] { return std::invalid_argument("wrong number of arguments to '" + name + "'"); };
    if (op == Op::pow) {
        if (j.size() != 3 || !j[2].is_number()) {
            throw std::invalid_argument("pow takes an expression and a numeric exponent");
        }
        return pow(from_json(j[1]), j[2].get<double>());
    }
    if (is_unary(op)) {
        if (j.size() != 2) {
            throw arity_error();
        }
        const ExprId a = from_json(j[1]);
        return op == Op::neg ? neg(a) : op == Op::exp ? exp(a) : sqrt(a);
    }
    // add and mul accept any number of operands
    if (j.size() < 3 || (j.size() > 3 && op != Op::add && op != Op::mul)) {
        throw arity_error();
    }
    ExprId acc = from_json(j[1]);
    for (std::size_t i = 2; i < j.size(); ++i) {
        const ExprId b = from_json(j[i]);
        switch (op) {
        case Op::add:
            acc = add(acc, b);
            break;
        case Op::sub:
            acc = sub(acc, b);
            break;
        case Op::mul:
            acc = mul(acc, b);
            break;
        default:
            acc = div(acc, b);
            break;
        }
    }
    return acc;
}

std::string ExprArena::to_string(ExprId e) const
{
    return to_json(e).dump();
}

double ExprArena::eval(ExprId e, std::span<const double> vars) const
{
    Tape tape(*this, {e});
    return tape.eval(vars)[0];
}

Tape::Tape(const ExprArena &arena, std::vector<ExprId> roots)
{
    if (roots.empty()) {
        return;
    }
    const ExprId top = *std::max_element(roots.begin(), roots.end());
    std::vector<bool> needed(top + 1, false);
    for (auto r : roots) {
        needed[r] = true;
    }
    for (ExprId id = top + 1; id-- > 0;) {
        if (!needed[id]) {
            continue;
        }
        const auto &n = arena.node(id);
        if (is_binary(n.op)) {
            needed[n.lhs] = needed[n.rhs] = true;
        } else if (is_unary(n.op)) {
            needed[n.lhs] = true;
        }
    }
    std::vector<std::uint32_t> slot(top + 1, 0);
    for (ExprId id = 0; id <= top; ++id) {
        if (!needed[id]) {
            continue;
        }
        const auto &n = arena.node(id);
        slot[id] = static_cast<std::uint32_t>(m_program.size());
        m_program.push_back(Instr{n.op, is_binary(n.op) || is_unary(n.op) ? slot[n.lhs] : 0,
                                  is_binary(n.op) ? slot[n.rhs] : 0, n.value, n.var});
    }
    for (auto r : roots) {
        m_roots.push_back(slot[r]);
    }
}

template <typename T>
std::vector<T> Tape::run(std::span<const T> vars, const T &zero_like) const
{
    std::vector<T> regs;
    regs.reserve(m_program.size());
    for (const auto &ins : m_program) {
        switch (ins.op) {
        case Op::constant:
            regs.push_back(lift(ins.value, zero_like));
            break;
        case Op::variable:
            if (ins.var >= vars.size()) {
                throw std::out_of_range("expression variable x" + std::to_string(ins.var) + " not bound");
            }
            regs.push_back(vars[ins.var]);
            break;
        default:
            regs.push_back(apply(ins.op, regs[ins.lhs], regs[ins.rhs], ins.value));
            break;
        }
    }
    std::vector<T> out;
    out.reserve(m_roots.size());
    for (auto s : m_roots) {
        out.push_back(regs[s]);
    }
    return out;
}

std::vector<double> Tape::eval(std::span<const double> vars) const
{
    return run<double>(vars, 0.0);
}

std::vector<Jet> Tape::eval(std::span<const Jet> vars) const
{
    if (vars.empty()) {
        throw std::invalid_argument("jet evaluation needs at least one bound variable");
    }
    return run<Jet>(vars, vars.front());
}

} // namespace adcert
