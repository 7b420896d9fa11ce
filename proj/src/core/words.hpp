#ifndef FIBMAP_CORE_WORDS_HPP
#define FIBMAP_CORE_WORDS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "core/automata.hpp"

namespace fibmap::words {

struct Substitution {
    std::string alphabet;  // distinct letters
    std::unordered_map<char, std::string> rules;

    void check() const;  // non-empty images over the alphabet
};

// Total letter-to-letter map applied after substitution.
struct Coding {
    std::unordered_map<char, char> map;

    char apply(char c) const;
};

// Image of a finite word under the substitution (rule images concatenated).
std::string substitute(const Substitution& s, std::string_view w);

// True iff some power p <= max_power maps every letter to a word
// containing every letter. |alphabet|^2 iterations suffice.
bool is_primitive(const Substitution& s, unsigned max_power);
bool is_primitive(const Substitution& s);

// Length-`length` prefix of the one-sided fixed point seeded at `seed`,
// optionally letter-coded. Requires s(seed) to start with seed.
std::string fixed_point_prefix(const Substitution& s, char seed, std::size_t length,
                               const Coding* coding = nullptr);

// An indexed view of an infinite word. term(n) is stable across calls;
// the backing prefix grows geometrically on demand, up to max_prefix.
// Readers of already-materialized symbols are safe concurrently; growth
// is single-writer.
class SymbolStream {
  public:
    virtual ~SymbolStream() = default;

    char term(std::uint64_t n);
    std::string_view prefix(std::size_t length);
    std::size_t materialized() const { return buf_.size(); }

    std::uint64_t max_prefix() const { return max_prefix_; }
    void set_max_prefix(std::uint64_t cap) { max_prefix_ = cap; }

  protected:
    // Append symbols to buf until buf.size() >= need.
    virtual void extend(std::string& buf, std::size_t need) = 0;

  private:
    void ensure(std::size_t need);

    std::string buf_;
    std::uint64_t max_prefix_ = 100'000'000;  // guards runaway scans
};

class SubstitutionStream final : public SymbolStream {
  public:
    SubstitutionStream(Substitution s, char seed, std::optional<Coding> coding = std::nullopt);

  protected:
    void extend(std::string& buf, std::size_t need) override;

  private:
    Substitution sub_;
    char seed_;
    std::optional<Coding> coding_;
    std::string core_;  // uncoded fixed-point prefix
};

class DfaoStream final : public SymbolStream {
  public:
    explicit DfaoStream(automata::Dfao machine) : machine_(std::move(machine)) {}

  protected:
    void extend(std::string& buf, std::size_t need) override;

  private:
    automata::Dfao machine_;
};

// Fibonacci word from the circle-rotation formulation.
class RotationStream final : public SymbolStream {
  protected:
    void extend(std::string& buf, std::size_t need) override;
};

Substitution fibonacci_substitution();
Substitution thue_morse_substitution();
Substitution rudin_shapiro_substitution();
Coding rudin_shapiro_coding();

// "fib", "tm", "rs" as substitution-backed streams.
std::unique_ptr<SymbolStream> make_stream(const std::string& name);

// JSON document:
//   {"alphabet": ["0","1"], "rules": {"0": "01", "1": "0"},
//    "coding": {"0": "0", ...}?, "seed": "0"}
// A document with a "delta" member is treated as a DFAO (see automata).
std::unique_ptr<SymbolStream> make_stream_json(const std::string& text);
Substitution substitution_from_json(const std::string& text);

}  // namespace fibmap::words

#endif
