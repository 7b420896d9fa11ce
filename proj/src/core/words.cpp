#include "core/words.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "core/errors.hpp"
#include "core/golden.hpp"

namespace fibmap::words {

using nlohmann::json;

void Substitution::check() const {
    if (alphabet.empty()) throw InvalidArgument("substitution: empty alphabet");
    for (char a : alphabet) {
        auto it = rules.find(a);
        if (it == rules.end() || it->second.empty())
            throw InvalidArgument(std::string("substitution: letter '") + a +
                                  "' has no non-empty image");
        for (char b : it->second)
            if (alphabet.find(b) == std::string::npos)
                throw UnknownLetter(std::string("substitution: image letter '") + b +
                                    "' not in alphabet");
    }
}

char Coding::apply(char c) const {
    auto it = map.find(c);
    if (it == map.end()) throw UnknownLetter(std::string("coding: no image for '") + c + "'");
    return it->second;
}

std::string substitute(const Substitution& s, std::string_view w) {
    std::string out;
    out.reserve(w.size() * 2);
    for (char c : w) {
        auto it = s.rules.find(c);
        if (it == s.rules.end())
            throw UnknownLetter(std::string("substitute: unknown letter '") + c + "'");
        out += it->second;
    }
    return out;
}

bool is_primitive(const Substitution& s, unsigned max_power) {
    s.check();
    if (max_power < 1) throw InvalidArgument("is_primitive: max_power must be >= 1");
    // Track, per letter, the set of letters present in theta^p(letter).
    const std::size_t k = s.alphabet.size();
    std::vector<std::string> image(k);
    for (std::size_t i = 0; i < k; ++i) image[i] = std::string(1, s.alphabet[i]);
    for (unsigned p = 1; p <= max_power; ++p) {
        bool all = true;
        for (std::size_t i = 0; i < k; ++i) {
            image[i] = substitute(s, image[i]);
            for (char a : s.alphabet)
                if (image[i].find(a) == std::string::npos) {
                    all = false;
                    break;
                }
            if (!all) break;
        }
        if (all) return true;
        // keep images from blowing up: only letter-sets matter
        for (auto& w : image) {
            std::sort(w.begin(), w.end());
            w.erase(std::unique(w.begin(), w.end()), w.end());
        }
    }
    return false;
}

bool is_primitive(const Substitution& s) {
    auto n = static_cast<unsigned>(s.alphabet.size());
    return is_primitive(s, n * n);
}

std::string fixed_point_prefix(const Substitution& s, char seed, std::size_t length,
                               const Coding* coding) {
    s.check();
    auto it = s.rules.find(seed);
    if (it == s.rules.end() || it->second.empty() || it->second[0] != seed)
        throw NotExtendable(std::string("fixed_point_prefix: s('") + seed +
                            "') does not start with the seed");
    std::string w(1, seed);
    while (w.size() < length) {
        std::string next = substitute(s, w);
        if (next.size() == w.size())
            throw NotExtendable("fixed_point_prefix: substitution does not grow from the seed");
        w = std::move(next);
    }
    w.resize(length);
    if (coding)
        for (char& c : w) c = coding->apply(c);
    return w;
}

char SymbolStream::term(std::uint64_t n) {
    if (n >= max_prefix_)
        throw ResourceLimit("symbol stream: index " + std::to_string(n) +
                            " beyond max prefix " + std::to_string(max_prefix_));
    ensure(static_cast<std::size_t>(n) + 1);
    return buf_[static_cast<std::size_t>(n)];
}

std::string_view SymbolStream::prefix(std::size_t length) {
    if (length > max_prefix_)
        throw ResourceLimit("symbol stream: prefix " + std::to_string(length) +
                            " beyond max prefix " + std::to_string(max_prefix_));
    ensure(length);
    return std::string_view(buf_.data(), length);
}

void SymbolStream::ensure(std::size_t need) {
    if (buf_.size() >= need) return;
    std::size_t goal = std::max<std::size_t>(need, std::max<std::size_t>(buf_.size() * 2, 1024));
    goal = std::min<std::size_t>(goal, static_cast<std::size_t>(max_prefix_));
    extend(buf_, std::max(goal, need));
    if (buf_.size() < need)
        throw InternalError("symbol stream: generator failed to extend");
}

SubstitutionStream::SubstitutionStream(Substitution s, char seed, std::optional<Coding> coding)
    : sub_(std::move(s)), seed_(seed), coding_(std::move(coding)) {
    sub_.check();
    auto it = sub_.rules.find(seed_);
    if (it == sub_.rules.end() || it->second[0] != seed_)
        throw NotExtendable("substitution stream: seed is not extendable");
}

void SubstitutionStream::extend(std::string& buf, std::size_t need) {
    if (core_.empty()) core_ = std::string(1, seed_);
    while (core_.size() < need) {
        std::string next = substitute(sub_, core_);
        if (next.size() == core_.size())
            throw NotExtendable("substitution stream: substitution does not grow from the seed");
        core_ = std::move(next);
    }
    std::size_t old = buf.size();
    buf.append(core_, old, need - old);
    if (coding_)
        for (std::size_t i = old; i < buf.size(); ++i) buf[i] = coding_->apply(buf[i]);
}

void DfaoStream::extend(std::string& buf, std::size_t need) {
    for (std::size_t n = buf.size(); n < need; ++n)
        buf.push_back(machine_.term(static_cast<std::uint64_t>(n)));
}

void RotationStream::extend(std::string& buf, std::size_t need) {
    for (std::size_t n = buf.size(); n < need; ++n)
        buf.push_back(golden::rotation_term(static_cast<std::uint64_t>(n)));
}

Substitution fibonacci_substitution() {
    return Substitution{"01", {{'0', "01"}, {'1', "0"}}};
}

Substitution thue_morse_substitution() {
    return Substitution{"01", {{'0', "01"}, {'1', "10"}}};
}

Substitution rudin_shapiro_substitution() {
    return Substitution{"abcd", {{'a', "ab"}, {'b', "ac"}, {'c', "db"}, {'d', "dc"}}};
}

Coding rudin_shapiro_coding() {
    return Coding{{{'a', '0'}, {'b', '0'}, {'c', '1'}, {'d', '1'}}};
}

std::unique_ptr<SymbolStream> make_stream(const std::string& name) {
    if (name == "fib")
        return std::make_unique<SubstitutionStream>(fibonacci_substitution(), '0');
    if (name == "tm")
        return std::make_unique<SubstitutionStream>(thue_morse_substitution(), '0');
    if (name == "rs")
        return std::make_unique<SubstitutionStream>(rudin_shapiro_substitution(), 'a',
                                                    rudin_shapiro_coding());
    throw UnknownName("unknown word: " + name + " (expected fib, tm, or rs)");
}

namespace {

char single_letter(const json& j, const char* what) {
    std::string s = j.get<std::string>();
    if (s.size() != 1) throw ParseError(std::string(what) + " must be a single character");
    return s[0];
}

}  // namespace

Substitution substitution_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("substitution json: ") + e.what());
    }
    try {
        Substitution s;
        for (const auto& a : j.at("alphabet")) s.alphabet.push_back(single_letter(a, "alphabet letter"));
        for (const auto& [key, img] : j.at("rules").items()) {
            if (key.size() != 1) throw ParseError("rule keys must be single characters");
            s.rules[key[0]] = img.get<std::string>();
        }
        s.check();
        return s;
    } catch (const json::exception& e) {
        throw ParseError(std::string("substitution json: ") + e.what());
    }
}

std::unique_ptr<SymbolStream> make_stream_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("stream json: ") + e.what());
    }
    if (j.contains("delta"))
        return std::make_unique<DfaoStream>(automata::dfao_from_json(text));
    try {
        Substitution s = substitution_from_json(text);
        char seed = single_letter(j.at("seed"), "seed");
        std::optional<Coding> coding;
        if (j.contains("coding")) {
            Coding c;
            for (const auto& [key, v] : j.at("coding").items()) {
                if (key.size() != 1) throw ParseError("coding keys must be single characters");
                c.map[key[0]] = single_letter(v, "coding value");
            }
            coding = std::move(c);
        }
        return std::make_unique<SubstitutionStream>(std::move(s), seed, std::move(coding));
    } catch (const json::exception& e) {
        throw ParseError(std::string("stream json: ") + e.what());
    }
}

}  // namespace fibmap::words
