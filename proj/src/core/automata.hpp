#ifndef FIBMAP_CORE_AUTOMATA_HPP
#define FIBMAP_CORE_AUTOMATA_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/numeration.hpp"

namespace fibmap::automata {

enum class Numeration { base_k, zeckendorf };

// Deterministic finite automaton with output, evaluated msd-first.
// The transition table is total over states x digits; entries may hold
// the explicit error marker kNoTransition (used e.g. for the digit pair
// "11" that valid Zeckendorf input can never produce).
struct Dfao {
    static constexpr int kNoTransition = -1;

    unsigned num_states = 0;
    unsigned num_digits = 0;       // digit alphabet is {0, ..., num_digits-1}
    std::vector<int> delta;        // num_states * num_digits entries
    unsigned initial = 0;
    std::string coding;            // output letter per state
    Numeration numeration = Numeration::base_k;

    int next(unsigned state, unsigned digit) const {
        return delta[state * num_digits + digit];
    }

    // theta(delta(q0, w)) for an msd-first digit word. Zeckendorf-tagged
    // machines validate the word's Zeckendorf invariants first.
    char eval(std::span<const std::uint8_t> digits) const;

    // Letter at index n: encode n in the machine's numeration, then eval.
    char term(std::uint64_t n) const;

    void check() const;  // structural validation
};

// A plain DFA: same skeleton with accepting states instead of a coding.
struct Dfa {
    unsigned num_states = 0;
    unsigned num_digits = 0;
    std::vector<int> delta;
    unsigned initial = 0;
    std::vector<bool> accepting;
    Numeration numeration = Numeration::base_k;

    bool accepts(std::span<const std::uint8_t> digits) const;
};

// Built-in machines: "fib" is the two-state Zeckendorf automaton whose
// output is the last digit read (state 1 has no transition on 1);
// "tm" is the two-state binary parity-of-ones machine.
Dfao builtin(const std::string& name);

// JSON layout:
//   {"states": [...], "sigma": [0,1,...], "delta": [[q,digit,q'], ...],
//    "q0": ..., "coding": {"state": "letter", ...},
//    "numeration": "base-k" | "zeckendorf"}
// Missing delta entries become explicit error markers.
Dfao dfao_from_json(const std::string& text);
std::string dfao_to_json(const Dfao& m);

}  // namespace fibmap::automata

#endif
