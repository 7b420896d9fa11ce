#include "core/automata.hpp"

#include <map>

#include <nlohmann/json.hpp>

#include "core/errors.hpp"

namespace fibmap::automata {

using nlohmann::json;

void Dfao::check() const {
    if (num_states == 0) throw InvalidArgument("dfao: no states");
    if (num_digits == 0) throw InvalidArgument("dfao: empty digit alphabet");
    if (delta.size() != static_cast<std::size_t>(num_states) * num_digits)
        throw InvalidArgument("dfao: transition table has wrong size");
    if (initial >= num_states) throw InvalidArgument("dfao: initial state out of range");
    if (coding.size() != num_states) throw InvalidArgument("dfao: coding not total");
    for (int t : delta)
        if (t != kNoTransition && (t < 0 || t >= static_cast<int>(num_states)))
            throw InvalidArgument("dfao: transition target out of range");
    if (numeration == Numeration::zeckendorf && num_digits != 2)
        throw InvalidArgument("dfao: zeckendorf machines read digits {0,1}");
}

char Dfao::eval(std::span<const std::uint8_t> digits) const {
    if (numeration == Numeration::zeckendorf) {
        numeration::ZeckWord w;
        w.digits.assign(digits.begin(), digits.end());
        numeration::validate(w);
    }
    unsigned q = initial;
    for (std::uint8_t d : digits) {
        if (d >= num_digits) throw DigitOutOfRange("dfao eval: digit outside alphabet");
        int t = next(q, d);
        if (t == kNoTransition)
            throw DigitOutOfRange("dfao eval: input hit an error transition");
        q = static_cast<unsigned>(t);
    }
    return coding[q];
}

char Dfao::term(std::uint64_t n) const {
    if (numeration == Numeration::zeckendorf) {
        auto w = numeration::zeck_encode(n);
        return eval(w.digits);
    }
    auto w = numeration::base_encode(n, num_digits);
    return eval(w.digits);
}

bool Dfa::accepts(std::span<const std::uint8_t> digits) const {
    unsigned q = initial;
    for (std::uint8_t d : digits) {
        if (d >= num_digits) throw DigitOutOfRange("dfa accepts: digit outside alphabet");
        int t = delta[q * num_digits + d];
        if (t < 0) return false;
        q = static_cast<unsigned>(t);
    }
    return accepting[q];
}

Dfao builtin(const std::string& name) {
    Dfao m;
    if (name == "fib") {
        m.num_states = 2;
        m.num_digits = 2;
        m.delta = {0, 1, 0, Dfao::kNoTransition};
        m.initial = 0;
        m.coding = "01";
        m.numeration = Numeration::zeckendorf;
    } else if (name == "tm") {
        m.num_states = 2;
        m.num_digits = 2;
        m.delta = {0, 1, 1, 0};
        m.initial = 0;
        m.coding = "01";
        m.numeration = Numeration::base_k;
    } else {
        throw UnknownName("unknown builtin machine: " + name);
    }
    m.check();
    return m;
}

namespace {

std::string state_key(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long>());
    throw ParseError("dfao json: state must be a string or integer");
}

}  // namespace

Dfao dfao_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("dfao json: ") + e.what());
    }
    try {
        Dfao m;
        std::map<std::string, unsigned> index;
        for (const auto& s : j.at("states")) {
            std::string key = state_key(s);
            if (index.count(key)) throw ParseError("dfao json: duplicate state " + key);
            index[key] = m.num_states++;
        }
        std::vector<unsigned> sigma;
        for (const auto& d : j.at("sigma")) sigma.push_back(d.get<unsigned>());
        for (std::size_t i = 0; i < sigma.size(); ++i)
            if (sigma[i] != i) throw ParseError("dfao json: sigma must be 0..k-1 in order");
        m.num_digits = static_cast<unsigned>(sigma.size());

        m.delta.assign(static_cast<std::size_t>(m.num_states) * m.num_digits,
                       Dfao::kNoTransition);
        for (const auto& tr : j.at("delta")) {
            if (!tr.is_array() || tr.size() != 3)
                throw ParseError("dfao json: delta entries are [state, digit, state]");
            unsigned from = index.at(state_key(tr[0]));
            unsigned digit = tr[1].get<unsigned>();
            unsigned to = index.at(state_key(tr[2]));
            if (digit >= m.num_digits) throw ParseError("dfao json: digit outside sigma");
            m.delta[from * m.num_digits + digit] = static_cast<int>(to);
        }

        m.initial = index.at(state_key(j.at("q0")));
        m.coding.assign(m.num_states, '?');
        for (const auto& [key, letter] : j.at("coding").items()) {
            auto it = index.find(key);
            if (it == index.end()) throw ParseError("dfao json: coding for unknown state " + key);
            std::string v = letter.get<std::string>();
            if (v.size() != 1) throw ParseError("dfao json: coding letters are single characters");
            m.coding[it->second] = v[0];
        }
        for (char c : m.coding)
            if (c == '?') throw ParseError("dfao json: coding not total");

        std::string num = j.value("numeration", "base-k");
        if (num == "zeckendorf")
            m.numeration = Numeration::zeckendorf;
        else if (num == "base-k" || num == "base")
            m.numeration = Numeration::base_k;
        else
            throw ParseError("dfao json: numeration must be base-k or zeckendorf");

        m.check();
        return m;
    } catch (const json::exception& e) {
        throw ParseError(std::string("dfao json: ") + e.what());
    }
}

std::string dfao_to_json(const Dfao& m) {
    json j;
    json states = json::array();
    for (unsigned q = 0; q < m.num_states; ++q) states.push_back(q);
    j["states"] = states;
    json sigma = json::array();
    for (unsigned d = 0; d < m.num_digits; ++d) sigma.push_back(d);
    j["sigma"] = sigma;
    json delta = json::array();
    for (unsigned q = 0; q < m.num_states; ++q)
        for (unsigned d = 0; d < m.num_digits; ++d)
            if (m.next(q, d) != Dfao::kNoTransition)
                delta.push_back(json::array({q, d, m.next(q, d)}));
    j["delta"] = delta;
    j["q0"] = m.initial;
    json coding = json::object();
    for (unsigned q = 0; q < m.num_states; ++q)
        coding[std::to_string(q)] = std::string(1, m.coding[q]);
    j["coding"] = coding;
    j["numeration"] = m.numeration == Numeration::zeckendorf ? "zeckendorf" : "base-k";
    return j.dump(2);
}

}  // namespace fibmap::automata
