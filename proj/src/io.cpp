#include "omegapow/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace omegapow
{

using nlohmann::json;

namespace
{

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

json parse_json(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw syntax_error("malformed JSON", e.byte);
    }
}

template <class Error>
std::map<std::string, State> index_states(const json& doc, std::vector<std::string>& names)
{
    if (!doc.contains("states") || !doc["states"].is_array())
        throw Error("missing \"states\" array");
    std::map<std::string, State> index;
    for (const auto& s : doc["states"]) {
        const std::string name = s.get<std::string>();
        if (!index.emplace(name, names.size()).second)
            throw Error("duplicate state " + name);
        names.push_back(name);
    }
    return index;
}

template <class Error>
State lookup(const std::map<std::string, State>& index, const json& name)
{
    if (!name.is_string())
        throw Error("state names must be strings");
    auto it = index.find(name.get<std::string>());
    if (it == index.end())
        throw Error("undeclared state " + name.get<std::string>());
    return it->second;
}

} // namespace

RTree rtree_from_json(std::string_view text)
{
    const json doc = parse_json(text);
    try {
        std::vector<std::string> names;
        const auto index = index_states<invalid_rtree>(doc, names);
        const State initial = lookup<invalid_rtree>(index, doc.at("initial"));
        std::vector<bool> live(names.size(), false);
        for (const auto& s : doc.at("live"))
            live[lookup<invalid_rtree>(index, s)] = true;
        std::vector<std::array<State, 4>> delta(names.size());
        const json& d = doc.at("delta");
        static constexpr const char* keys[4] = {"00", "01", "10", "11"};
        for (State s = 0; s < names.size(); ++s) {
            if (!d.contains(names[s]))
                throw invalid_rtree("no transitions for state " + names[s]);
            for (int k = 0; k < 4; ++k) {
                if (!d[names[s]].contains(keys[k]))
                    throw invalid_rtree("state " + names[s] + " lacks a transition on " + keys[k]);
                delta[s][k] = lookup<invalid_rtree>(index, d[names[s]][keys[k]]);
            }
        }
        return RTree(std::move(names), initial, std::move(live), std::move(delta));
    } catch (const json::exception& e) {
        throw invalid_rtree(std::string("R-tree document: ") + e.what());
    }
}

std::string rtree_to_json(const RTree& r)
{
    json doc;
    doc["states"] = r.names();
    doc["initial"] = r.name(r.initial());
    doc["live"] = json::array();
    for (State s = 0; s < r.state_count(); ++s) {
        if (r.live(s))
            doc["live"].push_back(r.name(s));
        for (Letter beta = 0; beta < 2; ++beta)
            for (Letter alpha = 0; alpha < 2; ++alpha)
                doc["delta"][r.name(s)][std::to_string(beta) + std::to_string(alpha)] =
                    r.name(r.step(s, beta, alpha));
    }
    return doc.dump(2);
}

RTree load_rtree(const std::string& spec)
{
    if (spec == "full")
        return RTree::full();
    if (spec == "diag")
        return RTree::diagonal();
    return rtree_from_json(read_file(spec));
}

FiniteAutomaton automaton_from_json(std::string_view text)
{
    const json doc = parse_json(text);
    try {
        std::vector<std::string> names;
        const auto index = index_states<invalid_automaton>(doc, names);
        const Alphabet alphabet(doc.at("alphabet").get<int>());
        FiniteAutomaton a(alphabet, names.size(), lookup<invalid_automaton>(index, doc.at("initial")));
        for (const auto& s : doc.at("accepting"))
            a.set_accepting(lookup<invalid_automaton>(index, s));
        for (const auto& [from, row] : doc.at("delta").items()) {
            const State s = lookup<invalid_automaton>(index, json(from));
            for (const auto& [letter, targets] : row.items()) {
                if (letter.size() != 1 || letter[0] < '0' || !alphabet.contains(Letter(letter[0] - '0')))
                    throw invalid_automaton("bad transition letter \"" + letter + "\"");
                const Letter l = static_cast<Letter>(letter[0] - '0');
                if (targets.is_array())
                    for (const auto& t : targets)
                        a.add_transition(s, l, lookup<invalid_automaton>(index, t));
                else
                    a.add_transition(s, l, lookup<invalid_automaton>(index, targets));
            }
        }
        a.set_names(std::move(names));
        return a;
    } catch (const json::exception& e) {
        throw invalid_automaton(std::string("automaton document: ") + e.what());
    }
}

std::string automaton_to_json(const FiniteAutomaton& a)
{
    std::vector<std::string> names = a.names();
    if (names.empty())
        for (State s = 0; s < a.state_count(); ++s)
            names.push_back("q" + std::to_string(s));
    json doc;
    doc["alphabet"] = a.alphabet().size();
    doc["states"] = names;
    doc["initial"] = names[a.initial()];
    doc["accepting"] = json::array();
    doc["delta"] = json::object();
    for (State s = 0; s < a.state_count(); ++s) {
        if (a.accepting(s))
            doc["accepting"].push_back(names[s]);
        for (Letter l = 0; l < a.alphabet().size(); ++l) {
            if (a.next(s, l).empty())
                continue;
            json targets = json::array();
            for (State t : a.next(s, l))
                targets.push_back(names[t]);
            doc["delta"][names[s]][std::to_string(l)] = targets;
        }
    }
    return doc.dump(2);
}

FiniteAutomaton load_automaton(const std::string& path)
{
    return automaton_from_json(read_file(path));
}

} // namespace omegapow
