#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pua {

/// Index of a variable in a VarTable. Environment variables come first, then
/// agent variables, then the primed copies of the environment variables.
using VarId = std::uint32_t;

/// A joint assignment encoded as a bitvector: bit i is variable i of the
/// table. The low |E| bits are the environment part, the rest the agent part.
using Letter = std::uint32_t;
using EnvMove = std::uint32_t;
using Action = std::uint32_t;
using Trace = std::vector<Letter>;

/// Explicit alphabets are enumerated; inputs above this size are rejected.
inline constexpr std::size_t kMaxExplicitVars = 16;

class VocabularyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VarTable {
public:
    VarTable() = default;
    VarTable(std::vector<std::string> env, std::vector<std::string> agent);

    std::size_t env_count() const { return env_size_; }
    std::size_t agent_count() const { return agent_size_; }
    /// Number of unprimed variables, |E| + |A|.
    std::size_t size() const { return env_size_ + agent_size_; }

    const std::vector<std::string>& env_names() const { return names_->env; }
    const std::vector<std::string>& agent_names() const { return names_->agent; }

    bool is_env(VarId v) const { return v < env_size_; }
    bool is_agent(VarId v) const { return v >= env_size_ && v < size(); }
    bool is_primed(VarId v) const { return v >= size() && v < size() + env_size_; }
    VarId primed(VarId env_var) const;
    VarId unprimed(VarId primed_var) const;

    /// Name of a variable; primed variables are rendered as `e'`.
    std::string name(VarId v) const;
    /// Looks up an unprimed name.
    std::optional<VarId> find(std::string_view name) const;

    std::uint64_t env_moves() const { return std::uint64_t{1} << env_size_; }
    std::uint64_t actions() const { return std::uint64_t{1} << agent_size_; }
    std::uint64_t letters() const { return std::uint64_t{1} << size(); }

    Letter join(EnvMove e, Action a) const { return e | (a << env_size_); }
    EnvMove env_of(Letter l) const { return l & static_cast<Letter>(env_moves() - 1); }
    Action agent_of(Letter l) const { return l >> env_size_; }

    /// Throws GuardError when the alphabet is too large to enumerate.
    void require_explicit() const;

    bool operator==(const VarTable& other) const {
        return names_ == other.names_ || *names_ == *other.names_;
    }

private:
    struct Names {
        std::vector<std::string> env;
        std::vector<std::string> agent;
        bool operator==(const Names&) const = default;
    };
    static const std::shared_ptr<const Names>& empty_names();

    // Immutable and shared, so automata copy their vocabulary cheaply.
    std::shared_ptr<const Names> names_ = empty_names();
    std::size_t env_size_ = 0;
    std::size_t agent_size_ = 0;
};

/// Renders the low `width` bits of `value` as a 0/1 string, first character
/// for bit 0. An empty width is rendered as `-`.
std::string to_bits(std::uint32_t value, std::size_t width);
/// Inverse of to_bits; throws std::invalid_argument on malformed input.
std::uint32_t from_bits(std::string_view text, std::size_t width);

/// Human-readable rendering of a letter, e.g. `{y, !x}`.
std::string letter_to_string(const VarTable& vars, Letter l);
std::string trace_to_string(const VarTable& vars, const Trace& t);

bool is_identifier(std::string_view s);
bool is_reserved_word(std::string_view s);

}  // namespace pua
