#include "pua/io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace pua {

FormatError::FormatError(const std::string& file, std::size_t line, const std::string& msg)
    : std::runtime_error(file + (line ? ":" + std::to_string(line) : std::string()) + ": " + msg), line_(line) {}

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

// Non-empty lines with '#' comments removed.
std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    std::size_t n = 0;
    while (std::getline(in, raw)) {
        ++n;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string t = trim(raw);
        if (!t.empty()) out.push_back({n, std::move(t)});
    }
    return out;
}

std::vector<std::string> words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream is{std::string(s)};
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

// Splits "key: value"; returns false when the line has no key.
bool split_key(const std::string& line, std::string& key, std::string& value) {
    auto colon = line.find(':');
    if (colon == std::string::npos) return false;
    key = trim(std::string_view(line).substr(0, colon));
    if (!is_identifier(key)) return false;
    value = trim(std::string_view(line).substr(colon + 1));
    return true;
}

std::size_t parse_count(const std::string& file, const Line& l, const std::string& s) {
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw FormatError(file, l.number, "expected a non-negative integer, got '" + s + "'");
    }
}

std::string vars_header(const VarTable& v) {
    std::string out = "vars:";
    for (const auto& n : v.env_names()) out += " " + n;
    out += " |";
    for (const auto& n : v.agent_names()) out += " " + n;
    return out;
}

VarTable parse_vars_header(const std::string& file, const Line& l, const std::string& value) {
    auto bar = value.find('|');
    if (bar == std::string::npos) throw FormatError(file, l.number, "vars header needs '|' between env and agent");
    try {
        return VarTable(words(value.substr(0, bar)), words(value.substr(bar + 1)));
    } catch (const std::exception& e) {
        throw FormatError(file, l.number, e.what());
    }
}

template <typename Automaton>
void write_transitions(std::ostream& out, const Automaton& m) {
    const std::size_t width = m.vars().size();
    for (StateId q = 0; q < m.state_count(); ++q)
        for (Letter l = 0; l < m.letter_count(); ++l)
            out << q << ' ' << to_bits(l, width) << ' ' << m.next(q, l) << '\n';
}

}  // namespace

void write_dfa(std::ostream& out, const Dfa& m) {
    out << vars_header(m.vars()) << '\n';
    out << "states: " << m.state_count() << '\n';
    out << "initial: " << m.initial() << '\n';
    out << "finals:";
    for (StateId q = 0; q < m.state_count(); ++q)
        if (m.is_final(q)) out << ' ' << q;
    out << '\n';
    write_transitions(out, m);
}

void write_dpw(std::ostream& out, const Dpw& m) {
    out << vars_header(m.vars()) << '\n';
    out << "states: " << m.state_count() << '\n';
    out << "initial: " << m.initial() << '\n';
    out << "colors:";
    for (StateId q = 0; q < m.state_count(); ++q) out << ' ' << m.color(q);
    out << '\n';
    write_transitions(out, m);
}

std::variant<Dfa, Dpw> read_automaton(std::istream& in, const std::string& name) {
    auto lines = read_lines(in);
    std::map<std::string, std::pair<std::string, Line>> header;
    std::size_t i = 0;
    for (; i < lines.size() && header.size() < 4; ++i) {
        std::string key, value;
        if (!split_key(lines[i].text, key, value)) break;
        if (!header.emplace(key, std::make_pair(value, lines[i])).second)
            throw FormatError(name, lines[i].number, "duplicate header '" + key + "'");
    }
    for (const char* k : {"vars", "states", "initial"})
        if (!header.count(k)) throw FormatError(name, 0, std::string("missing '") + k + ":' header");
    const bool dpw = header.count("colors") != 0;
    if (!dpw && !header.count("finals")) throw FormatError(name, 0, "missing 'finals:' or 'colors:' header");

    const auto& [vars_text, vars_line] = header["vars"];
    VarTable vars = parse_vars_header(name, vars_line, vars_text);
    try {
        vars.require_explicit();
    } catch (const GuardError& e) {
        throw FormatError(name, vars_line.number, e.what());
    }
    const std::size_t n = parse_count(name, header["states"].second, header["states"].first);
    if (n == 0) throw FormatError(name, header["states"].second.number, "an automaton needs at least one state");
    const std::size_t init = parse_count(name, header["initial"].second, header["initial"].first);
    if (init >= n) throw FormatError(name, header["initial"].second.number, "initial state out of range");

    const std::size_t letters = vars.letters();
    std::vector<StateId> delta(n * letters, 0);
    std::vector<char> seen(n * letters, 0);
    for (; i < lines.size(); ++i) {
        auto w = words(lines[i].text);
        if (w.size() != 3) throw FormatError(name, lines[i].number, "expected 'src bits dst'");
        std::size_t src = parse_count(name, lines[i], w[0]);
        std::size_t dst = parse_count(name, lines[i], w[2]);
        if (src >= n || dst >= n) throw FormatError(name, lines[i].number, "state out of range");
        Letter l;
        try {
            l = from_bits(w[1], vars.size());
        } catch (const std::invalid_argument& e) {
            throw FormatError(name, lines[i].number, e.what());
        }
        auto slot = src * letters + l;
        if (seen[slot]) throw FormatError(name, lines[i].number, "duplicate transition");
        seen[slot] = 1;
        delta[slot] = static_cast<StateId>(dst);
    }
    for (std::size_t slot = 0; slot < seen.size(); ++slot)
        if (!seen[slot])
            throw FormatError(name, 0,
                              "transition function is not total: missing state " + std::to_string(slot / letters) +
                                  " letter " + to_bits(static_cast<Letter>(slot % letters), vars.size()));

    auto fill = [&](auto& m) {
        for (StateId q = 0; q < n; ++q)
            for (Letter l = 0; l < letters; ++l) m.set_next(q, l, delta[q * letters + l]);
    };
    if (dpw) {
        Dpw m(vars, n, static_cast<StateId>(init));
        const auto& [text, line] = header["colors"];
        auto w = words(text);
        if (w.size() != n) throw FormatError(name, line.number, "expected one color per state");
        for (StateId q = 0; q < n; ++q) m.set_color(q, static_cast<Color>(parse_count(name, line, w[q])));
        fill(m);
        return m;
    }
    Dfa m(vars, n, static_cast<StateId>(init));
    const auto& [text, line] = header["finals"];
    for (const auto& f : words(text)) {
        std::size_t q = parse_count(name, line, f);
        if (q >= n) throw FormatError(name, line.number, "final state out of range");
        m.set_final(static_cast<StateId>(q));
    }
    fill(m);
    return m;
}

void write_agent_strategy(std::ostream& out, const AgentStrategy& s) {
    const VarTable& v = s.vars;
    out << "type: agent\n";
    out << "memory: " << s.memory << '\n';
    out << "initial: " << s.initial << '\n';
    for (Memory m = 0; m < s.memory; ++m)
        for (EnvMove e = 0; e < v.env_moves(); ++e) {
            const AgentMove& mv = s.step(m, e);
            out << m << ' ' << to_bits(e, v.env_count()) << " -> "
                << (mv.action ? to_bits(*mv.action, v.agent_count()) : std::string("halt")) << ' ' << mv.next
                << '\n';
        }
}

void write_env_strategy(std::ostream& out, const EnvStrategy& s) {
    const VarTable& v = s.vars;
    out << "type: env\n";
    out << "memory: " << s.memory << '\n';
    out << "initial: " << s.initial << " output " << to_bits(s.initial_output, v.env_count()) << '\n';
    for (Memory m = 0; m < s.memory; ++m)
        for (Action a = 0; a < v.actions(); ++a) {
            auto [e, to] = s.step(m, a);
            out << m << ' ' << to_bits(a, v.agent_count()) << " -> " << to_bits(e, v.env_count()) << ' ' << to << '\n';
        }
}

std::variant<AgentStrategy, EnvStrategy> read_strategy(std::istream& in, const VarTable& vars,
                                                       const std::string& name) {
    auto lines = read_lines(in);
    if (lines.size() < 3) throw FormatError(name, 0, "strategy needs type, memory and initial headers");
    std::string key, type, mem_text, init_text;
    if (!split_key(lines[0].text, key, type) || key != "type" || (type != "agent" && type != "env"))
        throw FormatError(name, lines[0].number, "expected 'type: agent' or 'type: env'");
    if (!split_key(lines[1].text, key, mem_text) || key != "memory")
        throw FormatError(name, lines[1].number, "expected 'memory: N'");
    if (!split_key(lines[2].text, key, init_text) || key != "initial")
        throw FormatError(name, lines[2].number, "expected 'initial: m0'");
    const std::size_t memory = parse_count(name, lines[1], mem_text);
    if (memory == 0) throw FormatError(name, lines[1].number, "memory must be positive");
    const bool agent = type == "agent";
    auto init_words = words(init_text);
    const std::size_t init = parse_count(name, lines[2], init_words.empty() ? "" : init_words[0]);
    if (init >= memory) throw FormatError(name, lines[2].number, "initial memory out of range");

    auto bits = [&](const Line& l, const std::string& s, std::size_t width) {
        try {
            return from_bits(s, width);
        } catch (const std::invalid_argument& e) {
            throw FormatError(name, l.number, e.what());
        }
    };
    const std::size_t in_width = agent ? vars.env_count() : vars.agent_count();
    const std::size_t out_width = agent ? vars.agent_count() : vars.env_count();
    const std::size_t inputs = agent ? vars.env_moves() : vars.actions();

    AgentStrategy as(vars, agent ? memory : 1, static_cast<Memory>(init));
    EnvStrategy es(vars, agent ? 1 : memory, static_cast<Memory>(init));
    if (!agent) {
        if (init_words.size() != 3 || init_words[1] != "output")
            throw FormatError(name, lines[2].number, "expected 'initial: m0 output <bits>'");
        es.initial_output = bits(lines[2], init_words[2], vars.env_count());
    } else if (init_words.size() != 1) {
        throw FormatError(name, lines[2].number, "expected 'initial: m0'");
    }

    std::vector<char> seen(memory * inputs, 0);
    for (std::size_t i = 3; i < lines.size(); ++i) {
        auto w = words(lines[i].text);
        if (w.size() != 5 || w[2] != "->") throw FormatError(name, lines[i].number, "expected 'm input -> output m2'");
        const std::size_t m = parse_count(name, lines[i], w[0]);
        const std::size_t to = parse_count(name, lines[i], w[4]);
        if (m >= memory || to >= memory) throw FormatError(name, lines[i].number, "memory cell out of range");
        const auto input = bits(lines[i], w[1], in_width);
        auto slot = m * inputs + input;
        if (seen[slot]) throw FormatError(name, lines[i].number, "duplicate entry");
        seen[slot] = 1;
        if (agent) {
            std::optional<Action> a;
            if (w[3] != "halt") a = bits(lines[i], w[3], out_width);
            as.at(static_cast<Memory>(m), input) = {a, static_cast<Memory>(to)};
        } else {
            if (w[3] == "halt") throw FormatError(name, lines[i].number, "environment strategies cannot halt");
            es.set(static_cast<Memory>(m), input, bits(lines[i], w[3], out_width), static_cast<Memory>(to));
        }
    }
    for (std::size_t slot = 0; slot < seen.size(); ++slot)
        if (!seen[slot])
            throw FormatError(name, 0, "strategy is not total: missing memory " + std::to_string(slot / inputs) +
                                           " input " + to_bits(static_cast<std::uint32_t>(slot % inputs), in_width));
    if (agent) return as;
    return es;
}

namespace {

Formula parse_field(const std::string& file, const Line& l, const std::string& text, const VarTable& vars,
                    ParseOptions opts = {}) {
    try {
        return parse_formula(text, vars, opts);
    } catch (const ParseError& e) {
        throw FormatError(file, l.number, std::string(e.what()) + " (column " + std::to_string(e.offset() + 1) + ")");
    }
}

using Fields = std::map<std::string, std::pair<std::string, Line>>;

Fields read_fields(std::istream& in, const std::string& name, std::initializer_list<const char*> known) {
    Fields out;
    for (const Line& l : read_lines(in)) {
        std::string key, value;
        if (!split_key(l.text, key, value)) throw FormatError(name, l.number, "expected 'key: value'");
        if (std::find_if(known.begin(), known.end(), [&](const char* k) { return key == k; }) == known.end())
            throw FormatError(name, l.number, "unknown key '" + key + "'");
        if (!out.emplace(key, std::make_pair(value, l)).second)
            throw FormatError(name, l.number, "duplicate key '" + key + "'");
    }
    return out;
}

VarTable fields_vars(const Fields& f, const std::string& name) {
    auto env = f.find("env");
    auto agent = f.find("agent");
    if (env == f.end() || agent == f.end()) throw FormatError(name, 0, "missing 'env:' or 'agent:' line");
    try {
        return VarTable(words(env->second.first), words(agent->second.first));
    } catch (const std::exception& e) {
        throw FormatError(name, env->second.second.number, e.what());
    }
}

}  // namespace

Domain read_domain(std::istream& in, const std::string& name) {
    Fields f = read_fields(in, name, {"env", "agent", "init", "pre", "trans"});
    Domain d;
    d.vars = fields_vars(f, name);
    if (d.vars.env_count() == 0) throw FormatError(name, f["env"].second.number, "a domain needs at least one fluent");
    auto field = [&](const char* key, ParseOptions opts) {
        auto it = f.find(key);
        if (it == f.end()) return Formula::top();
        return parse_field(name, it->second.second, it->second.first, d.vars, opts);
    };
    d.init = field("init", {});
    d.pre = field("pre", {});
    d.delta = field("trans", {.allow_primed = true});
    return d;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(path.string(), 0, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Domain load_domain(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    return read_domain(in, path.string());
}

Problem read_problem(std::istream& in, const std::filesystem::path& base_dir, const std::string& name) {
    Fields f = read_fields(in, name, {"semantics", "env", "agent", "domain", "assumption", "goal", "fair"});
    Problem p;
    if (auto it = f.find("semantics"); it != f.end()) {
        if (it->second.first == "finite") p.semantics = Semantics::Finite;
        else if (it->second.first == "infinite") p.semantics = Semantics::Infinite;
        else throw FormatError(name, it->second.second.number, "semantics must be 'finite' or 'infinite'");
    }
    if (auto it = f.find("domain"); it != f.end()) {
        p.domain = load_domain(base_dir / it->second.first);
        p.vars = p.domain->vars;
        if (f.count("env") || f.count("agent")) {
            if (!(fields_vars(f, name) == p.vars))
                throw FormatError(name, it->second.second.number, "env/agent lines disagree with the domain");
        }
    } else {
        p.vars = fields_vars(f, name);
    }
    if (auto it = f.find("fair"); it != f.end()) {
        if (it->second.first != "true" && it->second.first != "false")
            throw FormatError(name, it->second.second.number, "fair must be 'true' or 'false'");
        p.fair = it->second.first == "true";
    }
    auto objective = [&](const char* key, bool required) -> Objective {
        auto it = f.find(key);
        if (it == f.end()) {
            if (required) throw FormatError(name, 0, std::string("missing '") + key + ":' line");
            return Formula::top();
        }
        const auto& [text, line] = it->second;
        if (!text.empty() && text.front() == '@') {
            auto path = base_dir / trim(std::string_view(text).substr(1));
            std::istringstream body(read_file(path));
            auto m = read_automaton(body, path.string());
            if (auto* dfa = std::get_if<Dfa>(&m)) {
                if (!(dfa->vars() == p.vars)) throw FormatError(name, line.number, "automaton vocabulary differs");
                return *dfa;
            }
            auto& dpw = std::get<Dpw>(m);
            if (!(dpw.vars() == p.vars)) throw FormatError(name, line.number, "automaton vocabulary differs");
            return dpw;
        }
        return parse_field(name, line, text, p.vars);
    };
    p.assumption = objective("assumption", false);
    p.goal = objective("goal", true);
    return p;
}

Problem load_problem(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    return read_problem(in, path.parent_path(), path.string());
}

}  // namespace pua
