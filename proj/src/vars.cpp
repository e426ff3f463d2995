#include "pua/vars.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace pua {

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    auto head = static_cast<unsigned char>(s.front());
    if (!std::isalpha(head) && head != '_') return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return std::isalnum(u) || u == '_';
    });
}

bool is_reserved_word(std::string_view s) {
    static constexpr std::string_view kReserved[] = {"true", "false", "X", "WX", "F", "G", "U", "R"};
    return std::find(std::begin(kReserved), std::end(kReserved), s) != std::end(kReserved);
}

VarTable::VarTable(std::vector<std::string> env, std::vector<std::string> agent) {
    std::set<std::string> seen;
    for (const auto* group : {&env, &agent}) {
        for (const auto& n : *group) {
            if (!is_identifier(n) || is_reserved_word(n))
                throw VocabularyError("invalid variable name '" + n + "'");
            if (!seen.insert(n).second)
                throw VocabularyError("variable '" + n + "' declared twice");
        }
    }
    env_size_ = env.size();
    agent_size_ = agent.size();
    if (size() > 31) throw GuardError("more than 31 variables cannot be encoded");
    names_ = std::make_shared<const Names>(Names{std::move(env), std::move(agent)});
}

const std::shared_ptr<const VarTable::Names>& VarTable::empty_names() {
    static const std::shared_ptr<const Names> none = std::make_shared<const Names>();
    return none;
}

VarId VarTable::primed(VarId env_var) const {
    if (!is_env(env_var)) throw VocabularyError("only environment variables can be primed");
    return static_cast<VarId>(size() + env_var);
}

VarId VarTable::unprimed(VarId primed_var) const {
    if (!is_primed(primed_var)) throw VocabularyError("variable is not primed");
    return static_cast<VarId>(primed_var - size());
}

std::string VarTable::name(VarId v) const {
    if (is_env(v)) return names_->env[v];
    if (is_agent(v)) return names_->agent[v - env_size_];
    if (is_primed(v)) return names_->env[v - size()] + "'";
    throw VocabularyError("variable index " + std::to_string(v) + " out of range");
}

std::optional<VarId> VarTable::find(std::string_view name) const {
    for (std::size_t i = 0; i < env_size_; ++i)
        if (names_->env[i] == name) return static_cast<VarId>(i);
    for (std::size_t i = 0; i < agent_size_; ++i)
        if (names_->agent[i] == name) return static_cast<VarId>(env_size_ + i);
    return std::nullopt;
}

void VarTable::require_explicit() const {
    if (size() > kMaxExplicitVars)
        throw GuardError("explicit alphabet limited to " + std::to_string(kMaxExplicitVars) +
                         " variables, got " + std::to_string(size()));
}

std::string to_bits(std::uint32_t value, std::size_t width) {
    if (width == 0) return "-";
    std::string out(width, '0');
    for (std::size_t i = 0; i < width; ++i)
        if (value >> i & 1u) out[i] = '1';
    return out;
}

std::uint32_t from_bits(std::string_view text, std::size_t width) {
    if (width == 0) {
        if (text == "-" || text.empty()) return 0;
        throw std::invalid_argument("expected '-' for an empty bitvector");
    }
    if (text.size() != width)
        throw std::invalid_argument("bitvector '" + std::string(text) + "' should have " +
                                    std::to_string(width) + " bits");
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < width; ++i) {
        if (text[i] == '1')
            v |= 1u << i;
        else if (text[i] != '0')
            throw std::invalid_argument("bitvector '" + std::string(text) + "' has a non-binary digit");
    }
    return v;
}

std::string letter_to_string(const VarTable& vars, Letter l) {
    std::string out = "{";
    for (VarId v = 0; v < vars.size(); ++v) {
        if (v) out += ", ";
        if (!(l >> v & 1u)) out += '!';
        out += vars.name(v);
    }
    return out + "}";
}

std::string trace_to_string(const VarTable& vars, const Trace& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ' ';
        out += letter_to_string(vars, t[i]);
    }
    return out;
}

}  // namespace pua
