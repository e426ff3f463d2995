#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "pua/dfa.hpp"
#include "pua/domain.hpp"
#include "pua/dpw.hpp"
#include "pua/engine.hpp"
#include "pua/strategy.hpp"

namespace pua {

/// Malformed input file; `line` is 1-based, 0 when not attributable.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& file, std::size_t line, const std::string& msg);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Automaton text:
///   vars: e1 e2 | a1
///   states: N
///   initial: i
///   finals: i j k        (DFA)   or   colors: c0 ... cN-1   (DPW)
///   src <bits> dst       one line per state and letter
/// Bits are in variable order, environment variables first.
void write_dfa(std::ostream& out, const Dfa& m);
void write_dpw(std::ostream& out, const Dpw& m);
std::variant<Dfa, Dpw> read_automaton(std::istream& in, const std::string& name = "<automaton>");

/// Strategy text:
///   type: agent | env
///   memory: N
///   initial: m0                 (env: initial: m0 output <bits over E>)
///   m <input bits> -> <output bits | halt> m'
void write_agent_strategy(std::ostream& out, const AgentStrategy& s);
void write_env_strategy(std::ostream& out, const EnvStrategy& s);
std::variant<AgentStrategy, EnvStrategy> read_strategy(std::istream& in, const VarTable& vars,
                                                       const std::string& name = "<strategy>");

/// Domain text: `env:`, `agent:`, `init:`, `pre:`, `trans:` (primes as e1').
Domain read_domain(std::istream& in, const std::string& name = "<domain>");
Domain load_domain(const std::filesystem::path& path);

/// Problem text: `semantics:`, `env:`, `agent:`, optional `domain: <path>`,
/// `assumption:` and `goal:` (a formula or `@path` to an automaton), and
/// optional `fair: true`. Paths are relative to the problem file.
Problem read_problem(std::istream& in, const std::filesystem::path& base_dir, const std::string& name = "<problem>");
Problem load_problem(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace pua
